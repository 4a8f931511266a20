//! Tight order bounds for `m`-burnability of spiders and path forests, and
//! the smallest instances just past them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PathForest, Spider};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Spider,
    Forest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundQuery {
    pub family: Family,
    pub n: u32,
    pub m: u32,
}

impl BoundQuery {
    pub fn new(family: Family, n: u32, m: u32) -> Result<Self> {
        match family {
            Family::Spider => check_spider(n, m)?,
            Family::Forest => check_forest(n, m)?,
        }
        Ok(Self { family, n, m })
    }

    pub fn bound(&self) -> u64 {
        match self.family {
            Family::Spider => spider_bound(self.n, self.m),
            Family::Forest => forest_bound(self.n, self.m),
        }
    }
}

fn check_spider(n: u32, m: u32) -> Result<()> {
    if n < 2 || m < 2 {
        return Err(Error::Domain(format!(
            "spider bound needs n >= 2 and m >= 2, got n={n}, m={m}"
        )));
    }
    Ok(())
}

fn check_forest(n: u32, m: u32) -> Result<()> {
    if n < 2 || m < n {
        return Err(Error::Domain(format!(
            "path forest bound needs m >= n >= 2, got n={n}, m={m}"
        )));
    }
    Ok(())
}

fn spider_bound(n: u32, m: u32) -> u64 {
    let (n, m) = (u64::from(n), u64::from(m));
    if m > n {
        m * m + n - 2
    } else {
        m * m + n - m
    }
}

fn forest_bound(n: u32, m: u32) -> u64 {
    let (n, m) = (u64::from(n), u64::from(m));
    m * m - (n - 1) * (n - 1)
}

/// Largest `N` such that every `n`-spider of order at most `N` is
/// `m`-burnable.
pub fn i_sp(n: u32, m: u32) -> Result<u64> {
    check_spider(n, m)?;
    Ok(spider_bound(n, m))
}

/// Largest `N` such that every path forest with `n` paths and order at most
/// `N` is `m`-burnable. Only defined for `m >= n`.
pub fn i_pf(n: u32, m: u32) -> Result<u64> {
    check_forest(n, m)?;
    Ok(forest_bound(n, m))
}

/// An `n`-spider of order `i_sp(n, m) + 1` that is not `m`-burnable.
///
/// For `m > n` one arm holds a path of order `m^2 + 1`; otherwise the
/// spider is the smallest one containing the balanced `m`-spider with arms
/// of length `m`.
pub fn witness_spider(n: u32, m: u32) -> Result<Spider> {
    check_spider(n, m)?;
    let arms = if m > n {
        let mut arms = vec![m * m - 1];
        arms.extend(std::iter::repeat_n(1, n as usize - 1));
        arms
    } else {
        let mut arms = vec![m; m as usize];
        arms.extend(std::iter::repeat_n(1, (n - m) as usize));
        arms
    };
    Spider::new(arms)
}

/// Whether the spider contains the balanced `m`-spider (`m` arms of length
/// `m`) as a subtree. For `m >= 3` its center must sit on the head, so this
/// is `l_m >= m`; for smaller `m` the balanced spider is a path of order
/// `m^2 + 1`.
pub fn contains_balanced_spider(s: &Spider, m: u32) -> bool {
    let arms = s.arms();
    if m >= 3 {
        return arms.len() >= m as usize && arms[m as usize - 1] >= m;
    }
    let longest_path = 1 + u64::from(arms[0]) + u64::from(arms[1]);
    longest_path > u64::from(m * m)
}

/// The unique path forest with `n` paths of order `i_pf(n, m) + 1` that is
/// not `m`-burnable: one path of order `m^2 - n^2 + 2`, the rest of order 2.
pub fn witness_forest(n: u32, m: u32) -> Result<PathForest> {
    check_forest(n, m)?;
    let mut paths = vec![m * m - n * n + 2];
    paths.extend(std::iter::repeat_n(2, n as usize - 1));
    PathForest::new(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spider_values() {
        assert_eq!(i_sp(3, 2).unwrap(), 5);
        assert_eq!(i_sp(3, 3).unwrap(), 9);
        assert_eq!(i_sp(3, 5).unwrap(), 26);
        for m in 2..40 {
            assert_eq!(i_sp(2, m).unwrap(), u64::from(m * m));
        }
        assert!(i_sp(1, 3).is_err());
        assert!(i_sp(3, 1).is_err());
    }

    #[test]
    fn sandwich() {
        for n in 2..12 {
            for m in 2..12 {
                let b = i_sp(n, m).unwrap();
                let (n, m) = (u64::from(n), u64::from(m));
                assert!(m * m <= b && b <= m * m + n - 2);
            }
        }
    }

    #[test]
    fn forest_values() {
        assert_eq!(i_pf(2, 3).unwrap(), 8);
        assert_eq!(i_pf(3, 3).unwrap(), 5);
        assert_eq!(i_pf(2, 2).unwrap(), 3);
        assert!(matches!(i_pf(3, 2), Err(Error::Domain(_))));
        assert!(i_pf(1, 3).is_err());
    }

    #[test]
    fn spider_witnesses() {
        assert_eq!(witness_spider(3, 3).unwrap().arms(), &[3, 3, 3]);
        assert_eq!(witness_spider(3, 4).unwrap().arms(), &[15, 1, 1]);
        assert_eq!(witness_spider(4, 3).unwrap().arms(), &[3, 3, 3, 1]);
        for n in 2..9 {
            for m in 2..9 {
                let w = witness_spider(n, m).unwrap();
                assert_eq!(w.arm_count(), n as usize);
                assert_eq!(w.order(), i_sp(n, m).unwrap() + 1);
            }
        }
    }

    #[test]
    fn forest_witnesses() {
        assert_eq!(witness_forest(2, 3).unwrap().paths(), &[7, 2]);
        assert_eq!(witness_forest(3, 3).unwrap().paths(), &[2, 2, 2]);
        assert_eq!(witness_forest(2, 4).unwrap().paths(), &[14, 2]);
        for n in 2..9 {
            for m in n..12 {
                let w = witness_forest(n, m).unwrap();
                assert_eq!(w.order(), i_pf(n, m).unwrap() + 1);
            }
        }
    }

    #[test]
    fn balanced_containment() {
        let sp = |a: &[u32]| Spider::new(a.to_vec()).unwrap();
        assert!(contains_balanced_spider(&sp(&[3, 3, 3, 1]), 3));
        assert!(!contains_balanced_spider(&sp(&[9, 9, 2, 2]), 3));
        assert!(!contains_balanced_spider(&sp(&[3, 3]), 3));
        // the balanced 2-spider is a path on five vertices
        assert!(contains_balanced_spider(&sp(&[3, 1, 1]), 2));
        assert!(contains_balanced_spider(&sp(&[2, 2, 1]), 2));
        assert!(!contains_balanced_spider(&sp(&[2, 1, 1]), 2));
    }

    #[test]
    fn query() {
        let q = BoundQuery::new(Family::Spider, 3, 3).unwrap();
        assert_eq!(q.bound(), 9);
        assert!(BoundQuery::new(Family::Forest, 4, 3).is_err());
    }
}
