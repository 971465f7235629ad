//! Exact scalars and dense linear algebra.
//!
//! Everything downstream is written against the [`Field`] trait. Three fields
//! are provided: [`crate::Q`], [`GaussRat`] and the radical tower [`Scalar`].

mod eigen;
mod gauss;
pub mod modp;
mod matrix;
mod scalar;
mod subspace;

pub use eigen::{charpoly, rational_eigenvalues, simultaneous_generalized_eigenspaces};
pub use gauss::GaussRat;
pub use matrix::Matrix;
pub use scalar::{sqrt_of, sqrt_q, Scalar};
pub use subspace::{
    image, kernel, quotient_dim, spin, subspace_intersect, subspace_sum, Echelon, Subspace,
};

use crate::Q;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

/// A field of characteristic zero containing `Q`.
///
/// The by-reference methods exist because the big-number fields allocate on
/// every operation; hot loops use them to avoid clones.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + 'static
{
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_q(q: &Q) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_q(&Q::from_integer(BigInt::from(n)))
    }

    fn neg_ref(&self) -> Self {
        self.clone().neg()
    }

    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.add_ref(o);
    }

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub_ref(&a.mul_ref(b));
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.add_ref(&a.mul_ref(b));
    }

    fn div_ref(&self, o: &Self) -> Option<Self> {
        o.inv().map(|x| self.mul_ref(&x))
    }
}

impl Field for Q {
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_q(q: &Q) -> Self {
        q.clone()
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self -= a * b;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a * b;
    }
}

/// Rational from a pair of integers.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `"17/10"`, `"-3"` and similar.
pub fn parse_q(s: &str) -> crate::Result<Q> {
    let s = s.trim();
    let bad = || crate::Error::Parse {
        pos: 0,
        msg: format!("not a rational number: {s:?}"),
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// True if `x` is an integer.
pub fn is_integral(x: &Q) -> bool {
    x.denom().is_one()
}
