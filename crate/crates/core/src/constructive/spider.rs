//! Spider strategies. Balls are placed on the original spider, so a ball
//! found for a sub-spider also covers whatever it reaches past the arms the
//! sub-spider kept.

use super::forest;
use super::view::{
    burn_path, center_ball, lay, tail_ball, unmet, unreachable, Cover, ForestView, Segment,
    SpiderView, Step, Stop,
};
use super::{Engine, ExceptionalFamily};
use crate::graph::VertexCoord;
use crate::schedule::Ball;

fn tails(v: &SpiderView, from: u32, arms: impl IntoIterator<Item = usize>) -> Vec<Segment> {
    arms.into_iter()
        .filter_map(|i| v.arm_from(i, from))
        .collect()
}

/// `m > n >= 2`, order at most `m^2 + n - 2`, every arm at most `2m - 1`.
/// The head burns in round 1 or 2.
pub(crate) fn short_arms(v: &SpiderView, m: u32) -> Step {
    let l = v.lens();
    let n = l.len() as u32;
    if n < 2 || m <= n {
        return unmet(format!("needs m > n >= 2, got n = {n}, m = {m}"));
    }
    let (m64, n64) = (u64::from(m), u64::from(n));
    if v.order() > m64 * m64 + n64 - 2 {
        return unmet(format!("order {} exceeds m^2 + n - 2", v.order()));
    }
    if l[0] > 2 * m - 1 {
        return unmet(format!(
            "arm of length {} exceeds 2m - 1 = {}",
            l[0],
            2 * m - 1
        ));
    }
    let ctx = format!("short_arms(m={m}, {l:?})");
    // arm i fits under the head source plus one centered source iff
    // l_i <= 3m - 2 - 2i
    let k =
        (1..=n).find(|&i| i64::from(l[i as usize - 1]) > 3 * i64::from(m) - 2 - 2 * i64::from(i));
    let Some(k) = k else {
        let mut cover = vec![Ball::new(VertexCoord::Head, m - 1)];
        for i in 1..=n {
            if let Some(rest) = v.arm_from(i as usize, m) {
                cover.push(center_ball(rest, m - 1 - i)?);
            }
        }
        return Ok(cover);
    };
    let ku = k as usize;
    if m == n + 1 && k == n {
        // The last arm has exactly n + 2 vertices. A source next to the head
        // on it leaves a forest with one single-vertex path.
        let mut cover = vec![Ball::new(v.at(ku, 1), n)];
        let mut rest = tails(v, n, 1..ku);
        rest.extend(v.arm_from(ku, n + 2));
        cover
            .extend(forest::small_with_one(&ForestView::new(rest), n).map_err(|e| e.nested(&ctx))?);
        return Ok(cover);
    }
    if 2 * k < m || l[ku..].iter().any(|&x| x > m - 1) {
        return unreachable(format!("{ctx}: k = {k} outside the counting argument"));
    }
    let mut cover = vec![Ball::new(VertexCoord::Head, m - 1)];
    for i in 1..k {
        if let Some(rest) = v.arm_from(i as usize, m) {
            cover.push(center_ball(rest, m - 1 - i)?);
        }
    }
    let arm_k = v.arm(ku);
    let block = 2 * m - 1 - 2 * k;
    if block > 0 {
        cover.push(center_ball(arm_k.sub(m, block), m - 1 - k)?);
    }
    let left = l[ku - 1] - (m - 1) - block;
    if k + 2 > m || left > m - 1 - k {
        return unreachable(format!("{ctx}: {left} vertices left on arm {k}"));
    }
    cover.push(Ball::new(arm_k.at(arm_k.len), m - 2 - k));
    Ok(cover)
}

/// `n >= 2` arms, order at most `n^2 + 3n - 1`, in `n + 1` rounds, with at
/// least `min{l_n, n - 1}` rounds left once the head burns.
pub(crate) fn nplus1(v: &SpiderView) -> Step {
    let l = v.lens();
    let n = l.len() as u32;
    if n < 2 {
        return unmet(format!("needs at least two arms, got {n}"));
    }
    let n64 = u64::from(n);
    if v.order() > n64 * n64 + 3 * n64 - 1 {
        return unmet(format!("order {} exceeds n^2 + 3n - 1", v.order()));
    }
    if n == 2 {
        return two_arms_in_three(v);
    }
    let ctx = format!("nplus1({l:?})");
    if l[0] <= 2 * n + 1 {
        return short_arms(v, n + 1).map_err(|e| e.nested(&ctx));
    }
    let l1p = l[0] - (2 * n + 1);
    let ln = l[n as usize - 1];
    let nu = n as usize;
    if ln <= n - 2 {
        let peel = tail_ball(v.arm(1), n);
        let sub = if l1p >= ln {
            v.without_arm(nu).with_arm_len(1, l1p)
        } else {
            v.without_arm(1)
        };
        let mut cover = vec![peel];
        cover.extend(nplus1(&sub).map_err(|e| e.nested(&ctx))?);
        return Ok(cover);
    }
    let mut cover = vec![Ball::new(VertexCoord::Head, n)];
    let arm1 = v.arm(1);
    let rest = if l1p <= n - 2 {
        cover.push(center_ball(arm1.from(n + 1).expect("l1 > 2n + 1"), n - 1)?);
        tails(v, n + 1, 2..=nu)
    } else {
        cover.push(center_ball(arm1.sub(n + 1, 2 * n - 1), n - 1)?);
        let mut rest = tails(v, n + 1, 2..=nu);
        rest.extend(arm1.from(3 * n));
        rest
    };
    if !rest.is_empty() {
        cover.extend(forest::linear(&ForestView::new(rest), n - 1).map_err(|e| e.nested(&ctx))?);
    }
    Ok(cover)
}

/// Two arms of total order at most 9 in three rounds with the head burned
/// by round 2, found by trying every placement. On the path
/// `arm 1 (reversed) - head - arm 2`, positions run from `-l1` to `l2`.
fn two_arms_in_three(v: &SpiderView) -> Step {
    let (l1, l2) = (i64::from(v.lens()[0]), i64::from(v.lens()[1]));
    let spots: Vec<Option<i64>> = std::iter::once(None).chain((-l1..=l2).map(Some)).collect();
    for &c2 in &spots {
        for &c1 in &spots {
            for &c0 in &spots {
                let balls: Vec<(i64, i64)> = [(c2, 2), (c1, 1), (c0, 0)]
                    .into_iter()
                    .filter_map(|(c, r)| c.map(|c| (c, r)))
                    .collect();
                let head_early = balls.iter().any(|&(c, r)| c.abs() < r);
                let covered = (-l1..=l2).all(|x| balls.iter().any(|&(c, r)| (x - c).abs() <= r));
                if head_early && covered {
                    return Ok(balls
                        .into_iter()
                        .map(|(c, r)| {
                            let at = match c {
                                0 => VertexCoord::Head,
                                c if c < 0 => v.arm(1).at((-c) as u32),
                                c => v.arm(2).at(c as u32),
                            };
                            Ball::new(at, r as u32)
                        })
                        .collect());
                }
            }
        }
    }
    unreachable(format!("no 3-round placement for arms ({l1}, {l2})"))
}

/// `m > n >= 2`, order at most `m^2 + n - 2`.
pub(crate) fn main(v: &SpiderView, m: u32, engine: Engine) -> Step {
    let l = v.lens();
    let n = l.len() as u32;
    if n < 2 || m <= n {
        return unmet(format!("needs m > n >= 2, got n = {n}, m = {m}"));
    }
    let (m64, n64) = (u64::from(m), u64::from(n));
    if v.order() > m64 * m64 + n64 - 2 {
        return unmet(format!("order {} exceeds m^2 + n - 2", v.order()));
    }
    match engine {
        Engine::A => peel_longest(v, m),
        Engine::B => by_arm_count(v, m),
    }
}

/// Induction on `m`: peel the last `2m - 1` vertices off the longest arm.
fn peel_longest(v: &SpiderView, m: u32) -> Step {
    let l = v.lens();
    let ctx = format!("engine_a(m={m}, {l:?})");
    if m == l.len() as u32 + 1 {
        return nplus1(v).map_err(|e| e.nested(&ctx));
    }
    if l[0] <= 2 * m - 1 {
        return short_arms(v, m).map_err(|e| e.nested(&ctx));
    }
    let mut cover = vec![tail_ball(v.arm(1), m - 1)];
    cover.extend(peel_longest(&v.with_arm_len(1, l[0] - (2 * m - 1)), m - 1)?);
    Ok(cover)
}

/// Induction on the number of arms via the path forest bound, with at
/// least `min{l_n, m - 2}` rounds left once the head burns.
fn by_arm_count(v: &SpiderView, m: u32) -> Step {
    let l = v.lens();
    let n = l.len() as u32;
    let nu = n as usize;
    let ctx = format!("engine_b(m={m}, {l:?})");
    if n == 2 {
        return two_arms(v, m).map_err(|e| e.nested(&ctx));
    }
    if l[nu - 1] <= m - 2 {
        return by_arm_count(&v.without_arm(nu), m);
    }
    let mut cover = vec![Ball::new(VertexCoord::Head, m - 1)];
    let rest = tails(v, m, 1..=nu);
    let k = rest.len() as u32;
    match k {
        0 => return Ok(cover),
        1 => {
            cover.extend(burn_path(rest[0], m - 1)?);
            return Ok(cover);
        }
        _ => {}
    }
    let rest = ForestView::new(rest);
    if m >= n + 2 {
        match forest::main(&rest, m - 1) {
            Ok(c) => cover.extend(c),
            Err(Stop::Exceptional(_)) if m == n + 2 && is_first_special(&l, n) => {
                // The source goes next to the head on the last arm, leaving
                // paths 2n+4, 3, ..., 3, 1.
                let mut cover = vec![Ball::new(v.at(nu, 1), n + 1)];
                cover.extend(lay(v.arm_from(1, n + 1).expect("long arm"), &[n, n - 1])?);
                for i in 2..nu {
                    let seg = v.arm_from(i, n + 1).expect("arm of n + 3");
                    cover.push(center_ball(seg, n - i as u32)?);
                }
                cover.push(center_ball(
                    v.arm_from(nu, n + 3).expect("arm of n + 3"),
                    0,
                )?);
                return Ok(cover);
            }
            Err(e) => return Err(e.nested(&ctx)),
        }
        return Ok(cover);
    }
    // m == n + 1
    if k < n {
        cover.extend(forest::main(&rest, n).map_err(|e| e.nested(&ctx))?);
        return Ok(cover);
    }
    match forest::three_n_minus_2(&rest, n) {
        Ok(c) => {
            cover.extend(c);
            Ok(cover)
        }
        Err(Stop::Exceptional(_)) if l[nu - 1] == n + 2 => {
            let mut cover = vec![Ball::new(v.at(nu, 1), n)];
            let mut rest = tails(v, n, 1..nu);
            rest.extend(v.arm_from(nu, n + 2));
            cover.extend(
                forest::small_with_one(&ForestView::new(rest), n).map_err(|e| e.nested(&ctx))?,
            );
            Ok(cover)
        }
        Err(e) => Err(e.nested(&ctx)),
    }
}

fn is_first_special(l: &[u32], n: u32) -> bool {
    l[0] == 3 * n + 4 && l[1..].iter().all(|&x| x == n + 3)
}

/// Base of the arm-count induction: a 2-spider of order at most `m^2`.
fn two_arms(v: &SpiderView, m: u32) -> Step {
    let l = v.lens();
    let (l1, l2) = (l[0], l[1]);
    if l2 <= m - 1 {
        // one source on arm 1 reaches exactly the end of arm 2, or sits at
        // the end of a short arm 1 and reaches everything
        let p = (m - 1 - l2).min(l1);
        let mut cover = vec![Ball::new(v.at(1, p), m - 1)];
        if let Some(rest) = v.arm_from(1, p + m) {
            cover.extend(burn_path(rest, m - 1)?);
        }
        return Ok(cover);
    }
    let (first, rest) = if l2 != m + 1 {
        (Ball::new(VertexCoord::Head, m - 1), tails(v, m, 1..=2))
    } else {
        let mut rest = tails(v, m - 1, 1..=1);
        rest.extend(v.arm_from(2, m + 1));
        (Ball::new(v.at(2, 1), m - 1), rest)
    };
    let mut cover = vec![first];
    cover.extend(
        forest::two(&ForestView::new(rest), m - 1)
            .map_err(|e| e.nested(&format!("two_arms(m={m}, {l1}, {l2})")))?,
    );
    Ok(cover)
}

/// `n >= m >= 2`, order at most `m^2 + n - 2`; exceptional exactly when the
/// spider contains the balanced `m`-spider.
pub(crate) fn m_le_n(v: &SpiderView, m: u32) -> Step {
    let l = v.lens();
    let n = l.len() as u32;
    if m < 2 || n < m {
        return unmet(format!("needs n >= m >= 2, got n = {n}, m = {m}"));
    }
    let (m64, n64) = (u64::from(m), u64::from(n));
    if v.order() > m64 * m64 + n64 - 2 {
        return unmet(format!("order {} exceeds m^2 + n - 2", v.order()));
    }
    let mu = m as usize;
    let lm = l[mu - 1];
    if lm >= m {
        return Err(Stop::Exceptional(ExceptionalFamily::SpiderContainsBalanced));
    }
    let ctx = format!("m_le_n(m={m}, {l:?})");
    if lm <= m - 2 {
        // the remaining arms are no longer than the slack after the head burns
        return nplus1(&v.first_arms(mu - 1)).map_err(|e| e.nested(&ctx));
    }
    let mut cover: Cover = vec![Ball::new(VertexCoord::Head, m - 1)];
    let rest = tails(v, m, 1..mu);
    if !rest.is_empty() {
        cover.extend(forest::linear(&ForestView::new(rest), m - 1).map_err(|e| e.nested(&ctx))?);
    }
    Ok(cover)
}
