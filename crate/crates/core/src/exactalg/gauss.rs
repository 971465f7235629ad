use super::Field;
use crate::Q;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element `re + im·i` of the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRat {
    pub re: Q,
    pub im: Q,
}

impl GaussRat {
    pub fn new(re: Q, im: Q) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Q) -> Self {
        GaussRat { re, im: Q::zero() }
    }

    pub fn i() -> Self {
        GaussRat {
            re: Q::zero(),
            im: Q::one(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re² + im²`
    pub fn norm(&self) -> Q {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, k: &Q) -> Self {
        GaussRat {
            re: &self.re * k,
            im: &self.im * k,
        }
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::real(Q::one())
    }
}

impl Add for GaussRat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussRat {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for GaussRat {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussRat {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for GaussRat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl Neg for GaussRat {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Field for GaussRat {
    fn add_ref(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub_ref(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.im.is_zero() {
            if o.im.is_zero() {
                return GaussRat::real(&self.re * &o.re);
            }
            return GaussRat {
                re: &self.re * &o.re,
                im: &self.re * &o.im,
            };
        }
        if o.im.is_zero() {
            return GaussRat {
                re: &self.re * &o.re,
                im: &self.im * &o.re,
            };
        }
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussRat {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
    fn from_q(q: &Q) -> Self {
        GaussRat::real(q.clone())
    }
    fn add_assign_ref(&mut self, o: &Self) {
        self.re += &o.re;
        self.im += &o.im;
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul_ref(b);
        self.re -= p.re;
        self.im -= p.im;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul_ref(b);
        self.re += p.re;
        self.im += p.im;
    }
}

/// Formats `re + im*i` with the same conventions as [`super::Scalar`].
pub(crate) fn fmt_gauss(re: &Q, im: &Q) -> String {
    let mut terms: Vec<String> = Vec::new();
    if !re.is_zero() {
        terms.push(re.to_string());
    }
    if !im.is_zero() {
        terms.push(coef_times(im, "i"));
    }
    join_terms(&terms)
}

/// `k*name`, collapsing unit coefficients.
pub(crate) fn coef_times(k: &Q, name: &str) -> String {
    if k.is_one() {
        name.to_string()
    } else if (-k).is_one() {
        format!("-{name}")
    } else {
        format!("{k}*{name}")
    }
}

pub(crate) fn join_terms(terms: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_gauss(&self.re, &self.im))
    }
}
