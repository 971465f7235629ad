//! Burnside–Dixon character tables.
//!
//! The class sums act on the centre of the group algebra through the class
//! multiplication coefficients; their common eigenvectors mod a suitable prime
//! are the central characters `ω_χ`. Degrees and values are recovered mod `p`
//! and lifted to exact cyclotomic integers through eigenvalue multiplicities.

use super::cyclotomic::Cyclotomic;
use super::group::FiniteGroup;
use crate::exactalg::Scalar;
use crate::{Error, Result};
use std::fmt::Debug;
use std::hash::Hash;

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p ≡ 1 (mod n)` with `p > bound`.
fn dixon_prime(n: u64, bound: u64) -> u64 {
    let mut p = n + 1;
    while p <= bound || !is_prime(p) {
        p += n;
    }
    p
}

/// Element of order exactly `n` in `F_p^*`.
fn root_of_unity(n: u64, p: u64) -> u64 {
    let factors: Vec<u64> = (2..p).filter(|&q| (p - 1).is_multiple_of(q) && is_prime(q)).collect();
    let g = (2..p)
        .find(|&g| factors.iter().all(|&q| powm(g, (p - 1) / q, p) != 1))
        .expect("primitive root");
    powm(g, (p - 1) / n, p)
}

/// Row echelon basis over `F_p` of the kernel of a square matrix.
fn kernel_mod(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(s) = (r..n).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, s);
        let iv = invm(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mulm(*x, iv, p);
        }
        for i in 0..n {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..n {
                    let t = mulm(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - t) % p;
                }
            }
        }
        piv.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for f in (0..n).filter(|c| !piv.contains(c)) {
        let mut v = vec![0u64; n];
        v[f] = 1;
        for (i, &pc) in piv.iter().enumerate() {
            v[pc] = (p - m[i][f]) % p;
        }
        out.push(v);
    }
    out
}

/// Irreducible characters of `g` as value vectors over its classes (in the
/// group's class order), sorted by degree.
pub fn character_table<T>(g: &FiniteGroup<T>) -> Result<Vec<Vec<Scalar>>>
where
    T: Clone + Eq + Hash + Debug + Send + Sync,
{
    let cd = g.classes().clone();
    let k = cd.len();
    let order = g.order() as u64;
    let big_n = num_integer::lcm(cd.exponent(), 8);
    let bound = 2 * ((order as f64).sqrt().ceil() as u64) + 1;
    let p = dixon_prime(big_n as u64, bound);
    let c = g.class_constants();
    let mats: Vec<Vec<Vec<u64>>> = (0..k)
        .map(|j| {
            (0..k)
                .map(|i| (0..k).map(|kk| c[j][i][kk] % p).collect())
                .collect()
        })
        .collect();

    // Each space is a list of column vectors spanning a common invariant
    // subspace of all class matrices.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0; k];
            v[i] = 1;
            v
        })
        .collect()];
    for mj in &mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for sp in spaces {
            if sp.len() == 1 {
                next.push(sp);
                continue;
            }
            next.extend(split_space(mj, &sp, p));
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Certificate("class matrices failed to split".into()));
    }

    let z = root_of_unity(big_n as u64, p);
    let cyc = Cyclotomic::new(big_n);
    let mut table = Vec::new();
    for sp in spaces {
        let v = &sp[0];
        let n0 = invm(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mulm(x, n0, p)).collect();
        let mut s = 0u64;
        for j in 0..k {
            let t = mulm(omega[j], omega[cd.inverse_class[j]], p);
            s = (s + mulm(t, invm(cd.sizes[j] as u64 % p, p), p)) % p;
        }
        let d2 = mulm(order % p, invm(s, p), p);
        let deg = (1..=order)
            .take_while(|d| d * d <= order)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::Certificate("no degree square root".into()))?;
        let chi_p: Vec<u64> = (0..k)
            .map(|j| mulm(mulm(omega[j], deg, p), invm(cd.sizes[j] as u64 % p, p), p))
            .collect();
        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let o = cd.elt_orders[j];
            let zo = powm(z, (big_n / o) as u64, p);
            let inv_o = invm(o as u64, p);
            let mut v = vec![0i64; big_n];
            for t in 0..o {
                let mut acc = 0u64;
                for s in 0..o {
                    let val = chi_p[cd.power_classes[j][s]];
                    let e = ((t * s) % o) as u64;
                    let w = powm(zo, (o as u64 - e) % o as u64, p);
                    acc = (acc + mulm(val, w, p)) % p;
                }
                let m = mulm(acc, inv_o, p);
                if m > deg {
                    return Err(Error::Certificate("multiplicity out of range".into()));
                }
                v[(big_n / o) * t] += m as i64;
            }
            row.push(cyc.to_scalar(&v)?);
        }
        table.push((deg, row));
    }
    table.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| fmt_row(&a.1).cmp(&fmt_row(&b.1)))
    });
    Ok(table.into_iter().map(|(_, r)| r).collect())
}

fn fmt_row(r: &[Scalar]) -> String {
    r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("|")
}

/// Splits an invariant subspace into eigenspaces of `m`.
fn split_space(m: &[Vec<u64>], sp: &[Vec<u64>], p: u64) -> Vec<Vec<Vec<u64>>> {
    let k = m.len();
    let d = sp.len();
    // Echelonize the spanning vectors so coordinates can be read off pivots.
    let mut basis: Vec<Vec<u64>> = sp.to_vec();
    let mut pivots = Vec::new();
    for r in 0..d {
        let pc = (0..k).find(|&c| basis[r][c] != 0).expect("independent");
        let iv = invm(basis[r][pc], p);
        for x in basis[r].iter_mut() {
            *x = mulm(*x, iv, p);
        }
        for i in 0..d {
            if i != r && basis[i][pc] != 0 {
                let f = basis[i][pc];
                for j in 0..k {
                    let t = mulm(f, basis[r][j], p);
                    basis[i][j] = (basis[i][j] + p - t) % p;
                }
            }
        }
        pivots.push(pc);
    }
    // restricted matrix: column t = coordinates of m·b_t
    let mut rmat = vec![vec![0u64; d]; d];
    for t in 0..d {
        let img: Vec<u64> = (0..k)
            .map(|i| (0..k).fold(0, |acc, j| (acc + mulm(m[i][j], basis[t][j], p)) % p))
            .collect();
        for (s, &pc) in pivots.iter().enumerate() {
            rmat[s][t] = img[pc];
        }
    }
    let mut out = Vec::new();
    let mut found = 0;
    for lam in 0..p {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { (rmat[i][j] + p - lam) % p } else { rmat[i][j] })
                    .collect()
            })
            .collect();
        let ker = kernel_mod(&shifted, p);
        if ker.is_empty() {
            continue;
        }
        found += ker.len();
        let vecs: Vec<Vec<u64>> = ker
            .iter()
            .map(|c| {
                let mut v = vec![0u64; k];
                for (t, &ct) in c.iter().enumerate() {
                    for j in 0..k {
                        v[j] = (v[j] + mulm(ct, basis[t][j], p)) % p;
                    }
                }
                v
            })
            .collect();
        out.push(vecs);
        if found == d {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn perm_mul(a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
        b.iter().map(|&x| a[x]).collect()
    }

    #[test]
    fn cyclic_group_of_order_4() {
        let g = FiniteGroup::generate(
            vec![0, 1, 2, 3],
            vec![vec![1, 2, 3, 0]],
            Arc::new(perm_mul),
            10,
        )
        .unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.len(), 4);
        // some character takes the value i on the generator
        let gen_class = g.class_of(g.generators()[0]);
        assert!(t.iter().any(|r| r[gen_class] == Scalar::i()));
    }

    #[test]
    fn s4_degrees() {
        let g = FiniteGroup::generate(
            vec![0, 1, 2, 3],
            vec![vec![1, 0, 2, 3], vec![0, 2, 1, 3], vec![0, 1, 3, 2]],
            Arc::new(perm_mul),
            100,
        )
        .unwrap();
        let t = character_table(&g).unwrap();
        let degs: Vec<i64> = t.iter().map(|r| r[0].as_integer().unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2, 3, 3]);
    }
}
