//! Reduction modulo a fixed prime `P ≡ 1 (mod 4)`.
//!
//! `Z[i]` localized away from `P` maps onto `F_P` by sending `i` to a square
//! root of `−1`. Ranks can only drop under this map, so a matrix of full rank
//! mod `P` has full rank over `Q(i)`. This is used as a certificate that a
//! Dirac operator is invertible before falling back to exact elimination.

use super::{GaussRat, Matrix};
use crate::Q;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub const P: u64 = 4_611_686_018_427_387_817;
/// A square root of `−1` mod `P`.
pub const IOTA: u64 = 120_863_620_846_201_794;

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

fn reduce_int(n: &BigInt) -> u64 {
    let m = n % BigInt::from(P);
    let m = if m < BigInt::from(0) { m + BigInt::from(P) } else { m };
    m.to_u64().expect("reduced residue fits")
}

/// Types with a reduction map to `F_P`.
pub trait Reduce {
    /// `None` when a denominator vanishes mod `P`.
    fn reduce(&self) -> Option<u64>;
}

impl Reduce for Q {
    fn reduce(&self) -> Option<u64> {
        let d = reduce_int(self.denom());
        if d == 0 {
            return None;
        }
        Some(mul(reduce_int(self.numer()), inv(d)))
    }
}

impl Reduce for GaussRat {
    fn reduce(&self) -> Option<u64> {
        Some(add(self.re.reduce()?, mul(IOTA, self.im.reduce()?)))
    }
}

/// Row-major reduction of a matrix.
pub fn reduce_matrix<F: Reduce>(m: &Matrix<F>) -> Option<Vec<u64>>
where
    F: super::Field,
{
    m.data().iter().map(|x| x.reduce()).collect()
}

/// Rank of a row-major `rows × cols` matrix over `F_P`.
pub fn rank_raw(rows: usize, cols: usize, mut a: Vec<u64>) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let iv = inv(a[r * cols + c]);
        for i in r + 1..rows {
            let f = mul(a[i * cols + c], iv);
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let x = mul(f, a[r * cols + j]);
                a[i * cols + j] = sub(a[i * cols + j], x);
            }
        }
        r += 1;
    }
    r
}

/// Rank mod `P`, a lower bound for the rank over `Q(i)`.
pub fn rank_mod_p<F: Reduce + super::Field>(m: &Matrix<F>) -> Option<usize> {
    Some(rank_raw(m.rows(), m.cols(), reduce_matrix(m)?))
}

/// True when `m` is square and provably invertible.
pub fn certified_invertible<F: Reduce + super::Field>(m: &Matrix<F>) -> bool {
    m.is_square() && rank_mod_p(m) == Some(m.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q, Field};
    use crate::GMat;

    #[test]
    fn iota_squares_to_minus_one() {
        assert_eq!(mul(IOTA, IOTA), P - 1);
    }

    #[test]
    fn reduction_is_a_ring_map() {
        let a = GaussRat::new(q(3, 7), q(-2, 5));
        let b = GaussRat::new(q(-1, 3), q(4, 1));
        assert_eq!(
            a.mul_ref(&b).reduce().unwrap(),
            mul(a.reduce().unwrap(), b.reduce().unwrap())
        );
    }

    #[test]
    fn rank_lower_bound() {
        let m = GMat::from_fn(3, 3, |i, j| GaussRat::from_int((i * 3 + j) as i64));
        assert_eq!(rank_mod_p(&m), Some(m.rank()));
        assert!(!certified_invertible(&m));
        assert!(certified_invertible(&GMat::identity(4)));
    }
}
