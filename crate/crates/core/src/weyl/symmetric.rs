//! Combinatorial characters of `S_n`, indexed by cycle type.
//!
//! Used as an independent cross-check of the Dixon tables and for the
//! character-level BGG sums, where only induced sign characters occur.

use super::partition::{partitions, Partition};
use crate::Q;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;

/// Murnaghan–Nakayama value `χ^λ(μ)`, via beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size());
    let k = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + k - 1 - i)
        .collect();
    let mut memo = HashMap::new();
    mn_rec(beta, mu.parts(), &mut memo)
}

fn mn_rec(beta: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta.clone(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[idx] = b - r;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * mn_rec(nb, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// `|C_μ| = n! / z_μ`.
pub fn class_size(mu: &Partition) -> BigInt {
    let n = mu.size();
    let mut fact = BigInt::from(1);
    for i in 2..=n {
        fact *= i;
    }
    let mut z = BigInt::from(1);
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    for (p, m) in counts {
        for j in 1..=m {
            z *= p * j;
        }
    }
    fact / z
}

pub fn sign_of(mu: &Partition) -> i64 {
    if (mu.size() - mu.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Ind_{S_ν}^{S_n}(sgn)` at cycle type `μ`: the sign of `μ` times the
/// number of ways to distribute the cycles of `μ` into blocks of sizes `ν`.
pub fn induced_sign(nu: &Partition, mu: &Partition) -> i64 {
    fn rec(cycles: &[usize], cap: &mut Vec<usize>) -> i64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return 1;
        };
        let mut total = 0;
        for i in 0..cap.len() {
            if cap[i] >= c {
                cap[i] -= c;
                total += rec(rest, cap);
                cap[i] += c;
            }
        }
        total
    }
    sign_of(mu) * rec(mu.parts(), &mut nu.parts().to_vec())
}

/// A class function of `S_n` as values on `partitions(n)`, in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymClassFn {
    pub n: usize,
    pub values: Vec<i64>,
}

impl SymClassFn {
    pub fn zero(n: usize) -> Self {
        SymClassFn {
            n,
            values: vec![0; partitions(n).len()],
        }
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        let n = lambda.size();
        SymClassFn {
            n,
            values: partitions(n).iter().map(|mu| mn_character(lambda, mu)).collect(),
        }
    }

    pub fn induced_sign(nu: &Partition) -> Self {
        let n = nu.size();
        SymClassFn {
            n,
            values: partitions(n).iter().map(|mu| induced_sign(nu, mu)).collect(),
        }
    }

    pub fn add_scaled(&mut self, k: i64, o: &SymClassFn) {
        assert_eq!(self.n, o.n);
        for (a, b) in self.values.iter_mut().zip(&o.values) {
            *a += k * b;
        }
    }

    pub fn degree(&self) -> i64 {
        self.values[partitions(self.n).len() - 1]
    }

    /// `(1/n!) Σ_μ |C_μ| a(μ) b(μ)`; characters of `S_n` are real.
    pub fn inner(&self, o: &SymClassFn) -> Q {
        let ps = partitions(self.n);
        let mut s = BigInt::zero();
        for (i, mu) in ps.iter().enumerate() {
            s += class_size(mu) * self.values[i] * o.values[i];
        }
        let order: BigInt = ps.iter().map(class_size).sum();
        Q::new(s, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qi;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn s3_table() {
        let chi = SymClassFn::irreducible(&p(&[2, 1]));
        // partitions(3) = (3), (2,1), (1,1,1)
        assert_eq!(chi.values, vec![-1, 0, 2]);
        assert_eq!(chi.inner(&chi), qi(1));
    }

    #[test]
    fn orthonormal_up_to_7() {
        for n in 1..=7 {
            let ps = partitions(n);
            let chars: Vec<SymClassFn> = ps.iter().map(SymClassFn::irreducible).collect();
            for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    assert_eq!(a.inner(b), qi((i == j) as i64));
                }
            }
        }
    }

    #[test]
    fn induced_sign_is_young_rule() {
        // Ind sgn from S_ν = ⊕ over λ ⊴ ν^T with Kostka multiplicities; the
        // transpose of ν itself appears once.
        for n in 2..=6 {
            for nu in partitions(n) {
                let ind = SymClassFn::induced_sign(&nu);
                let top = SymClassFn::irreducible(&nu.transpose());
                assert_eq!(ind.inner(&top), qi(1));
                let deg: i64 = ind.degree();
                let mut expect = 1i64;
                for i in 2..=n as i64 {
                    expect *= i;
                }
                for &q in nu.parts() {
                    for i in 2..=q as i64 {
                        expect /= i;
                    }
                }
                assert_eq!(deg, expect);
            }
        }
    }
}
