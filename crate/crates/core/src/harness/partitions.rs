use crate::error::{Error, Result};

/// Partitions of `total` into exactly `parts` positive parts, each listed
/// non-increasing, in lexicographically decreasing order.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

pub fn enumerate_partitions(total: u32, parts: u32) -> Result<Partitions> {
    if parts < 1 || total < parts {
        return Err(Error::Domain(format!(
            "partitions need total >= parts >= 1, got total={total}, parts={parts}"
        )));
    }
    let mut first = vec![1; parts as usize];
    first[0] = total - parts + 1;
    Ok(Partitions { next: Some(first) })
}

impl Iterator for Partitions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(current)
    }
}

/// The lexicographically largest partition below `a`: decrease the
/// rightmost part that can absorb the change, then refill the suffix as
/// greedily as the new cap allows.
fn successor(a: &[u32]) -> Option<Vec<u32>> {
    let k = a.len();
    let mut suffix = 0u64;
    for i in (0..k).rev() {
        let cap = a[i] - 1;
        let slots = (k - 1 - i) as u64;
        let spread = suffix + 1;
        if cap >= 1 && spread >= slots && spread <= slots * u64::from(cap) {
            let mut b = a[..=i].to_vec();
            b[i] = cap;
            let mut left = spread;
            for j in 1..=slots {
                let v = (left - (slots - j)).min(u64::from(cap));
                b.push(v as u32);
                left -= v;
            }
            return Some(b);
        }
        suffix += u64::from(a[i]);
    }
    None
}

/// Number of partitions of `total` into exactly `parts` parts, by the
/// recurrence `p(k, n) = p(k - 1, n - 1) + p(k - n, n)`.
pub fn partition_count(total: u32, parts: u32) -> u64 {
    let (k, n) = (total as usize, parts as usize);
    if n > k {
        return 0;
    }
    // p[j][i]: partitions of i into exactly j parts
    let mut p = vec![vec![0u64; k + 1]; n + 1];
    p[0][0] = 1;
    for j in 1..=n {
        for i in j..=k {
            p[j][i] = p[j - 1][i - 1] + p[j][i - j];
        }
    }
    p[n][k]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_into_three() {
        let all: Vec<_> = enumerate_partitions(7, 3).unwrap().collect();
        assert_eq!(
            all,
            vec![vec![5, 1, 1], vec![4, 2, 1], vec![3, 3, 1], vec![3, 2, 2]]
        );
    }

    #[test]
    fn edge_cases() {
        assert_eq!(
            enumerate_partitions(3, 3).unwrap().collect::<Vec<_>>(),
            vec![vec![1, 1, 1]]
        );
        assert_eq!(
            enumerate_partitions(4, 1).unwrap().collect::<Vec<_>>(),
            vec![vec![4]]
        );
        assert!(matches!(enumerate_partitions(2, 3), Err(Error::Domain(_))));
        assert!(enumerate_partitions(0, 0).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(partition_count(7, 3), 4);
        assert_eq!(partition_count(10, 4), 9);
        assert_eq!(partition_count(3, 4), 0);
        // p(30) summed over all part counts
        assert_eq!((1..=30).map(|n| partition_count(30, n)).sum::<u64>(), 5604);
    }
}
