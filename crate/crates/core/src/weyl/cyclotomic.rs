//! Conversion from `Q(ζ_N)` into the radical tower.
//!
//! Character values come out of the Dixon algorithm as integer combinations
//! of `N`-th roots of unity. When such a value lies in the multi-quadratic
//! field `Q(i, √2, √p : p | N)` it is rewritten over the products of
//! `i = ζ^{N/4}`, `√2 = ζ_8 + ζ_8⁻¹` and the Gauss sums `√p* = Σ (t/p) ζ_p^t`.

use crate::exactalg::{sqrt_of, Field, Scalar};
use crate::{Error, QMat, Result, Q};
use num_traits::{One, Zero};

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    // x^n − 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![0i64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = r[i + db] / b[db];
        q[i] = c;
        for j in 0..=db {
            r[i + j] -= c * b[j];
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

fn legendre(t: usize, p: usize) -> i64 {
    let mut r = 1usize;
    let e = (p - 1) / 2;
    let t = t % p;
    for _ in 0..e {
        r = r * t % p;
    }
    if r == 1 {
        1
    } else if r == 0 {
        0
    } else {
        -1
    }
}

fn odd_primes(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    while n.is_multiple_of(2) && n > 0 {
        n /= 2;
    }
    let mut p = 3;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 2;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Q(ζ_N)` with `8 | N`, and its multi-quadratic subfield.
pub struct Cyclotomic {
    n: usize,
    phi: Vec<i64>,
    /// Tower elements and their reduced cyclotomic coordinates.
    basis: Vec<(Scalar, Vec<Q>)>,
    /// Row echelon data of the coordinate matrix, for solving.
    solver: QMat,
}

impl Cyclotomic {
    pub fn new(n: usize) -> Self {
        assert!(n.is_multiple_of(8), "N must be divisible by 8");
        let phi = cyclotomic_poly(n);
        // generators as (tower value, cyclotomic vector)
        let mut gens: Vec<(Scalar, Vec<i64>)> = Vec::new();
        let mut v = vec![0i64; n];
        v[n / 4] = 1;
        gens.push((Scalar::i(), v));
        let mut v = vec![0i64; n];
        v[n / 8] += 1;
        v[n - n / 8] += 1;
        gens.push((sqrt_of(2), v));
        for p in odd_primes(n) {
            let mut v = vec![0i64; n];
            for t in 1..p {
                v[(n / p) * t] += legendre(t, p);
            }
            let val = if p % 4 == 1 {
                sqrt_of(p as u64)
            } else {
                sqrt_of(p as u64).mul_ref(&Scalar::i())
            };
            gens.push((val, v));
        }
        let mut basis: Vec<(Scalar, Vec<i64>)> = vec![(Scalar::one(), {
            let mut v = vec![0i64; n];
            v[0] = 1;
            v
        })];
        for (g, gv) in &gens {
            let cur = basis.clone();
            for (b, bv) in cur {
                basis.push((b.mul_ref(g), cyc_mul(&bv, gv, n)));
            }
        }
        let deg = phi.len() - 1;
        let basis: Vec<(Scalar, Vec<Q>)> = basis
            .into_iter()
            .map(|(s, v)| {
                let r = reduce(&v, &phi);
                (s, r.into_iter().map(crate::exactalg::qi).collect())
            })
            .collect();
        let solver = QMat::from_fn(deg, basis.len(), |i, j| basis[j].1[i].clone());
        Cyclotomic {
            n,
            phi,
            basis,
            solver,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Rewrites `Σ_t v[t] ζ^t` in the tower, or fails if the value is not
    /// multi-quadratic.
    pub fn to_scalar(&self, v: &[i64]) -> Result<Scalar> {
        assert_eq!(v.len(), self.n);
        let r = reduce(v, &self.phi);
        if r.iter().all(|x| *x == 0) {
            return Ok(Scalar::zero());
        }
        let k = self.basis.len();
        let mut aug = QMat::zeros(self.solver.rows(), k + 1);
        for i in 0..self.solver.rows() {
            for j in 0..k {
                aug[(i, j)] = self.solver[(i, j)].clone();
            }
            aug[(i, k)] = crate::exactalg::qi(r[i]);
        }
        let (red, piv) = aug.rref();
        if piv.contains(&k) {
            return Err(Error::Certificate(
                "character value outside the radical tower".into(),
            ));
        }
        let mut out = Scalar::zero();
        for (row, &p) in piv.iter().enumerate() {
            let c = &red[(row, k)];
            if !c.is_zero() {
                out = out.add_ref(&self.basis[p].0.scale_q(c));
            }
        }
        Ok(out)
    }
}

fn cyc_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[(i + j) % n] += x * y;
        }
    }
    out
}

/// Remainder of `Σ v[t] x^t` modulo the monic `phi`.
fn reduce(v: &[i64], phi: &[i64]) -> Vec<i64> {
    let deg = phi.len() - 1;
    let mut r = v.to_vec();
    for i in (deg..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        for j in 0..=deg {
            r[i - deg + j] -= c * phi[j];
        }
    }
    r.truncate(deg);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
    }

    #[test]
    fn gauss_sums_and_roots() {
        let c = Cyclotomic::new(24);
        // ζ_3 + ζ_3⁻¹ = −1
        let mut v = vec![0i64; 24];
        v[8] = 1;
        v[16] = 1;
        assert_eq!(c.to_scalar(&v).unwrap(), Scalar::from_int(-1));
        // ζ_12 + ζ_12⁻¹ = √3
        let mut v = vec![0i64; 24];
        v[2] = 1;
        v[22] = 1;
        assert_eq!(c.to_scalar(&v).unwrap(), sqrt_of(3));
        // ζ_8 alone is (1 + i)/√2, which is in the tower
        let mut v = vec![0i64; 24];
        v[3] = 1;
        let z = c.to_scalar(&v).unwrap();
        assert_eq!(z.mul_ref(&z), Scalar::i());
        // ζ_3 = (−1 + i√3)/2
        let mut v = vec![0i64; 24];
        v[8] = 1;
        assert_eq!(
            c.to_scalar(&v).unwrap(),
            "-1/2 + 1/2*i*sqrt(3)".parse().unwrap()
        );
    }

    #[test]
    fn non_quadratic_rejected() {
        let c = Cyclotomic::new(40);
        // ζ_5 generates a quartic field that is not multi-quadratic
        let mut v = vec![0i64; 40];
        v[8] = 1;
        assert!(c.to_scalar(&v).is_err());
    }
}
