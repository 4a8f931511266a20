//! Path-forest strategies. Every function takes a [`ForestView`] and a
//! number of rounds and returns balls with radii below that number.

use super::view::{burn_path, center_ball, lay, tail_ball, unmet, ForestView, Step, Stop};
use super::ExceptionalFamily;

/// `n` paths, the shortest of order 1, the next of order at least 3, total
/// order at most `4n - 4`: burnable in `n` rounds by giving the `i`-th
/// longest path one ball of radius `n - i` at its center.
pub(crate) fn small_with_one(f: &ForestView, n: u32) -> Step {
    let l = f.lens();
    let k = l.len();
    if n < 2 || k != n as usize {
        return unmet(format!(
            "needs exactly n >= 2 paths for n = {n} rounds, got {k}"
        ));
    }
    if l[k - 1] != 1 || l[k - 2] < 3 {
        return unmet(format!(
            "needs shortest path 1 and second shortest >= 3, got {l:?}"
        ));
    }
    if f.order() > 4 * u64::from(n) - 4 {
        return unmet(format!(
            "order {} exceeds 4n - 4 = {}",
            f.order(),
            4 * n - 4
        ));
    }
    // The induction burns the longest path with the first source and
    // recurses on the rest with one round fewer.
    (1..=k)
        .map(|i| center_ball(f.path(i), n - i as u32))
        .collect::<Result<_, _>>()
        .map_err(|e| e.nested("small_with_one"))
}

/// `n <= m` paths of total order at most `3m - 1 - n`.
pub(crate) fn linear(f: &ForestView, m: u32) -> Step {
    let l = f.lens();
    let n = l.len() as u64;
    let m64 = u64::from(m);
    if n == 0 || m64 < n {
        return unmet(format!("needs 1 <= n <= m, got n = {n}, m = {m}"));
    }
    if f.order() + n + 1 > 3 * m64 {
        return unmet(format!("order {} exceeds 3m - 1 - n", f.order()));
    }
    let first = f.path(1);
    if n == 1 {
        return if l[0] <= 2 * m - 1 {
            Ok(vec![center_ball(first, m - 1)?])
        } else {
            lay(first, &[m - 1, m - 2])
        };
    }
    if l[0] == 1 {
        return (1..=l.len())
            .map(|i| center_ball(f.path(i), m - i as u32))
            .collect();
    }
    let ctx = format!("linear(m={m}, {l:?})");
    if l[0] <= 2 * m - 1 {
        let mut cover = vec![center_ball(first, m - 1)?];
        cover.extend(linear(&f.without_first(), m - 1).map_err(|e| e.nested(&ctx))?);
        Ok(cover)
    } else {
        // the longest path takes two sources: 2m - 1 + 2m - 3 vertices
        let mut cover = lay(first, &[m - 1, m - 2])?;
        cover.extend(linear(&f.without_first(), m - 2).map_err(|e| e.nested(&ctx))?);
        Ok(cover)
    }
}

/// Two paths of total order at most `m^2`, unless they are `m^2 - 2` and 2.
pub(crate) fn two(f: &ForestView, m: u32) -> Step {
    let l = f.lens();
    if l.len() != 2 {
        return unmet(format!("needs exactly two paths, got {}", l.len()));
    }
    if m < 2 {
        return unmet("needs m >= 2");
    }
    let m2 = u64::from(m) * u64::from(m);
    if f.order() > m2 {
        return unmet(format!("order {} exceeds m^2 = {m2}", f.order()));
    }
    let (l1, l2) = (u64::from(l[0]), u64::from(l[1]));
    if l1 + 2 == m2 && l2 == 2 {
        return Err(Stop::Exceptional(
            ExceptionalFamily::ForestTwoPathsM2Minus2And2,
        ));
    }
    let (p1, p2) = (f.path(1), f.path(2));
    if m == 2 {
        return Ok(vec![center_ball(p1, 1)?, center_ball(p2, 0)?]);
    }
    if l1 <= 2 * u64::from(m) - 1 {
        let mut cover = vec![center_ball(p1, m - 1)?];
        cover.extend(burn_path(p2, m - 1)?);
        return Ok(cover);
    }
    let peeled = p1.prefix(l[0] - (2 * m - 1));
    match two(&f.with_path(1, peeled), m - 1) {
        Ok(rest) => {
            let mut cover = vec![tail_ball(p1, m - 1)];
            cover.extend(rest);
            Ok(cover)
        }
        Err(Stop::Exceptional(_)) if m == 4 && (l1, l2) == (9, 7) => {
            // 7 = 2*3 + 1 and 9 = 5 + 3 + 1
            let mut cover = vec![center_ball(p2, 3)?];
            cover.extend(lay(p1, &[2, 1, 0])?);
            Ok(cover)
        }
        Err(e) => Err(e.nested(&format!("two(m={m}, {l:?})"))),
    }
}

/// `n >= 2` paths of total order at most `3n - 2` in `n` rounds, unless the
/// shortest path has order 2.
pub(crate) fn three_n_minus_2(f: &ForestView, n: u32) -> Step {
    let l = f.lens();
    let k = l.len();
    if n < 2 || k != n as usize {
        return unmet(format!(
            "needs exactly n >= 2 paths for n = {n} rounds, got {k}"
        ));
    }
    if f.order() > 3 * u64::from(n) - 2 {
        return unmet(format!(
            "order {} exceeds 3n - 2 = {}",
            f.order(),
            3 * n - 2
        ));
    }
    if l[k - 1] == 2 {
        return Err(Stop::Exceptional(ExceptionalFamily::ForestSmallestTwo));
    }
    if n == 2 {
        return Ok(vec![center_ball(f.path(1), 1)?, center_ball(f.path(2), 0)?]);
    }
    let mut cover = vec![center_ball(f.path(1), n - 1)?];
    cover.extend(
        three_n_minus_2(&f.without_first(), n - 1)
            .map_err(|e| e.nested(&format!("three_n_minus_2(n={n}, {l:?})")))?,
    );
    Ok(cover)
}

/// `2 <= n <= m` paths of total order at most `m^2 - (n-1)^2 + 1`, unless
/// the orders are exactly `m^2 - n^2 + 2, 2, ..., 2`.
pub(crate) fn main(f: &ForestView, m: u32) -> Step {
    let l = f.lens();
    let n = l.len() as u32;
    if n < 2 || m < n {
        return unmet(format!("needs m >= n >= 2, got n = {n}, m = {m}"));
    }
    let (m64, n64) = (u64::from(m), u64::from(n));
    let bound = m64 * m64 - (n64 - 1) * (n64 - 1) + 1;
    if f.order() > bound {
        return unmet(format!(
            "order {} exceeds m^2 - (n-1)^2 + 1 = {bound}",
            f.order()
        ));
    }
    if is_main_exception(&l, m) {
        return Err(Stop::Exceptional(ExceptionalFamily::ForestMainTwos));
    }
    let ctx = format!("forest_main(m={m}, {l:?})");
    if n == 2 {
        return two(f, m).map_err(|e| e.nested(&ctx));
    }
    if m == n {
        return three_n_minus_2(f, n).map_err(|e| e.nested(&ctx));
    }
    let p1 = f.path(1);
    if u64::from(l[0]) >= 2 * m64 {
        let peeled = p1.prefix(l[0] - (2 * m - 1));
        return match main(&f.with_path(1, peeled), m - 1) {
            Ok(rest) => {
                let mut cover = vec![tail_ball(p1, m - 1)];
                cover.extend(rest);
                Ok(cover)
            }
            Err(Stop::Exceptional(_)) if m == n + 2 && is_two_long_then_twos(&l, n) => {
                // (2n+5, 2n+3, 2, ..., 2): the second path takes radius n+1,
                // the first takes n and n-1, the 2's take n-2 down to 1.
                let mut cover = vec![center_ball(f.path(2), n + 1)?];
                cover.extend(lay(p1, &[n, n - 1])?);
                for i in 3..=n as usize {
                    cover.push(center_ball(f.path(i), n + 1 - i as u32)?);
                }
                Ok(cover)
            }
            Err(e) => Err(e.nested(&ctx)),
        };
    }
    let mut cover = vec![center_ball(p1, m - 1)?];
    cover.extend(main(&f.without_first(), m - 1).map_err(|e| e.nested(&ctx))?);
    Ok(cover)
}

pub(crate) fn is_main_exception(l: &[u32], m: u32) -> bool {
    let n = l.len() as u64;
    let m = u64::from(m);
    n >= 2 && m >= n && u64::from(l[0]) + n * n == m * m + 2 && l[1..].iter().all(|&x| x == 2)
}

fn is_two_long_then_twos(l: &[u32], n: u32) -> bool {
    l[0] == 2 * n + 5 && l[1] == 2 * n + 3 && l[2..].iter().all(|&x| x == 2)
}
