use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// True when `self ⊵ o` in dominance order.
    pub fn dominates(&self, o: &Partition) -> bool {
        if self.size() != o.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(o.len()) {
            a += self.0.get(k).copied().unwrap_or(0);
            b += o.0.get(k).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Hook length at box `(i, j)` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let t = self.transpose();
        self.0[i] - j + t.0[j] - i - 1
    }

    /// Strict partition requirement shared by the spin bookkeeping.
    pub fn require_strict(&self) -> Result<()> {
        if self.is_strict() {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{self} has repeated parts")))
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn strict_partitions(n: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| p.is_strict()).collect()
}

/// Partitions of `n` into distinct odd parts.
pub fn distinct_odd_partitions(n: usize) -> Vec<Partition> {
    strict_partitions(n)
        .into_iter()
        .filter(|p| p.0.iter().all(|x| x % 2 == 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(strict_partitions(6).len(), 4);
        assert_eq!(distinct_odd_partitions(4).len(), 1);
        assert_eq!(distinct_odd_partitions(3).len(), 1);
        assert_eq!(distinct_odd_partitions(2).len(), 0);
    }

    #[test]
    fn hook_of_5111() {
        let p = Partition::new(vec![5, 1, 1, 1]);
        assert_eq!(p.hook(0, 0), 8);
        assert_eq!(p.to_string(), "(5,1,1,1)");
    }

    #[test]
    fn transpose_involution_up_to_12() {
        for n in 0..=12 {
            for p in partitions(n) {
                assert_eq!(p.transpose().transpose(), p);
            }
        }
    }

    proptest! {
        #[test]
        fn dominance_reverses_under_transpose(n in 1usize..9, i in 0usize..30, j in 0usize..30) {
            let ps = partitions(n);
            let (a, b) = (&ps[i % ps.len()], &ps[j % ps.len()]);
            prop_assert_eq!(a.dominates(b), b.transpose().dominates(&a.transpose()));
        }
    }
}
