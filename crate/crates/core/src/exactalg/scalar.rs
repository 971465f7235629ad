use super::gauss::{coef_times, fmt_gauss, join_terms};
use super::{Field, GaussRat};
use crate::{Error, Q, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Element of `Q(i, √2, √3, √5, …)`, stored as `Σ_d (p_d + q_d i) √d` over
/// square-free `d ≥ 1`. Keys are sorted and no stored coefficient is zero,
/// so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    terms: Vec<(u64, GaussRat)>,
}

/// Splits `n = s² d` with `d` square-free.
fn square_free_part(mut n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut d = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
        p += 1;
    }
    (s, d * n)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Canonical square root of a positive integer: `s·√d` with `s > 0`.
pub fn sqrt_of(n: u64) -> Scalar {
    assert!(n >= 1, "sqrt_of expects a positive integer");
    let (s, d) = square_free_part(n);
    Scalar::from_terms(vec![(d, GaussRat::from_int(s as i64))])
}

/// Square root of a rational. Negative input gives `i·√|q|`.
pub fn sqrt_q(x: &Q) -> Scalar {
    if x.is_zero() {
        return Scalar::zero();
    }
    let neg = x.is_negative();
    let a = x.abs();
    // √(n/d) = √(n d) / d
    let nd = (a.numer() * a.denom())
        .to_u64()
        .expect("radicand out of range");
    let r = sqrt_of(nd).scale_q(&Q::new(BigInt::one(), a.denom().clone()));
    if neg {
        r * Scalar::i()
    } else {
        r
    }
}

impl Scalar {
    fn from_terms(mut terms: Vec<(u64, GaussRat)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by_key(|(d, _)| *d);
        Scalar { terms }
    }

    pub fn from_gauss(g: GaussRat) -> Self {
        Scalar::from_terms(vec![(1, g)])
    }

    pub fn i() -> Self {
        Scalar::from_gauss(GaussRat::i())
    }

    /// `(d, coefficient)` pairs with non-zero coefficients.
    pub fn terms(&self) -> &[(u64, GaussRat)] {
        &self.terms
    }

    /// The value as a Gaussian rational, when no radical occurs.
    pub fn as_gauss(&self) -> Option<GaussRat> {
        match self.terms.as_slice() {
            [] => Some(GaussRat::zero()),
            [(1, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_q(&self) -> Option<Q> {
        self.as_gauss().filter(|g| g.is_real()).map(|g| g.re)
    }

    /// As an integer, if the value is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.as_q()
            .filter(|x| x.denom().is_one())
            .and_then(|x| x.numer().to_i64())
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_real())
    }

    pub fn scale_q(&self, k: &Q) -> Self {
        Scalar::from_terms(self.terms.iter().map(|(d, c)| (*d, c.scale(k))).collect())
    }

    pub fn scale_gauss(&self, k: &GaussRat) -> Self {
        Scalar::from_terms(self.terms.iter().map(|(d, c)| (*d, c.mul_ref(k))).collect())
    }

    /// Complex conjugation (radicals are real).
    pub fn conj(&self) -> Self {
        Scalar {
            terms: self.terms.iter().map(|(d, c)| (*d, c.conj())).collect(),
        }
    }

    /// The automorphism `√p ↦ −√p` fixing the other radicals and `i`.
    pub fn galois_flip(&self, p: u64) -> Self {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (*d, if d % p == 0 { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    fn merge(&self, o: &Self, sign: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut a, mut b) = (0, 0);
        while a < self.terms.len() || b < o.terms.len() {
            let da = self.terms.get(a).map(|t| t.0).unwrap_or(u64::MAX);
            let db = o.terms.get(b).map(|t| t.0).unwrap_or(u64::MAX);
            if da < db {
                out.push(self.terms[a].clone());
                a += 1;
            } else if db < da {
                let c = &o.terms[b].1;
                out.push((db, if sign { c.clone() } else { -c.clone() }));
                b += 1;
            } else {
                let c = if sign {
                    self.terms[a].1.add_ref(&o.terms[b].1)
                } else {
                    self.terms[a].1.sub_ref(&o.terms[b].1)
                };
                if !c.is_zero() {
                    out.push((da, c));
                }
                a += 1;
                b += 1;
            }
        }
        Scalar { terms: out }
    }

    fn product(&self, o: &Self) -> Self {
        if self.terms.len() == 1 && self.terms[0].0 == 1 {
            return o.scale_gauss(&self.terms[0].1);
        }
        if o.terms.len() == 1 && o.terms[0].0 == 1 {
            return self.scale_gauss(&o.terms[0].1);
        }
        let mut acc: Vec<(u64, GaussRat)> = Vec::new();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &o.terms {
                let g = d1.gcd(d2);
                let key = (d1 / g) * (d2 / g);
                let c = c1.mul_ref(c2).scale(&Q::from_integer(BigInt::from(g)));
                match acc.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, v)) => v.add_assign_ref(&c),
                    None => acc.push((key, c)),
                }
            }
        }
        Scalar::from_terms(acc)
    }

    /// Floating approximation, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (d, c) in &self.terms {
            let r = (*d as f64).sqrt();
            re += c.re.to_f64().unwrap_or(f64::NAN) * r;
            im += c.im.to_f64().unwrap_or(f64::NAN) * r;
        }
        (re, im)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_gauss(GaussRat::one())
    }
}

impl Add for Scalar {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.merge(&o, true)
    }
}

impl Sub for Scalar {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.merge(&o, false)
    }
}

impl Mul for Scalar {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.product(&o)
    }
}

impl Neg for Scalar {
    type Output = Self;
    fn neg(self) -> Self {
        Scalar {
            terms: self.terms.into_iter().map(|(d, c)| (d, -c)).collect(),
        }
    }
}

impl Field for Scalar {
    fn add_ref(&self, o: &Self) -> Self {
        self.merge(o, true)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.merge(o, false)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.product(o)
    }
    /// Multiplies by Galois conjugates, one prime at a time, until the value
    /// is a Gaussian rational.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut primes: Vec<u64> = Vec::new();
        for (d, _) in &self.terms {
            for p in prime_factors(*d) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
        primes.sort_unstable();
        let mut num = Scalar::one();
        let mut cur = self.clone();
        for p in primes {
            if cur.terms.iter().all(|(d, _)| d % p != 0) {
                continue;
            }
            let c = cur.galois_flip(p);
            num = num.product(&c);
            cur = cur.product(&c);
        }
        let g = cur.as_gauss().expect("norm down the tower is Gaussian");
        Some(num.scale_gauss(&g.inv()?))
    }
    fn from_q(q: &Q) -> Self {
        Scalar::from_gauss(GaussRat::real(q.clone()))
    }
}

impl From<GaussRat> for Scalar {
    fn from(g: GaussRat) -> Self {
        Scalar::from_gauss(g)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (d, c) in &self.terms {
            if *d == 1 {
                if !c.re.is_zero() {
                    terms.push(c.re.to_string());
                }
                if !c.im.is_zero() {
                    terms.push(coef_times(&c.im, "i"));
                }
                continue;
            }
            let rad = format!("sqrt({d})");
            if c.im.is_zero() {
                terms.push(coef_times(&c.re, &rad));
            } else if c.re.is_zero() {
                terms.push(coef_times(&c.im, &format!("i*{rad}")));
            } else {
                terms.push(format!("({})*{rad}", fmt_gauss(&c.re, &c.im)));
            }
        }
        f.write_str(&join_terms(&terms))
    }
}

/// Recursive-descent parser for the text form (`+ - * /`, parentheses,
/// integers, `i`, `sqrt(q)`).
struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let inv = d.inv().ok_or_else(|| self.err("division by zero"))?;
                    acc = acc * inv;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Scalar::i())
            }
            Some(b's') => {
                if self.s[self.pos..].starts_with(b"sqrt") {
                    self.pos += 4;
                    self.expect(b'(')?;
                    let v = self.expr()?;
                    self.expect(b')')?;
                    let q = v
                        .as_q()
                        .ok_or_else(|| self.err("sqrt expects a rational argument"))?;
                    Ok(sqrt_q(&q))
                } else {
                    Err(self.err("unexpected identifier"))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                let n: BigInt = txt.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Scalar::from_q(&Q::from_integer(n)))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let v = p.expr()?;
        p.ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_of(1), Scalar::one());
        assert_eq!(sqrt_of(4), Scalar::from_int(2));
        let r = sqrt_of(8);
        assert_eq!(r.to_string(), "2*sqrt(2)");
        assert_eq!(r.mul_ref(&r), Scalar::from_int(8));
        assert_eq!(sqrt_q(&q(-1, 2)).to_string(), "1/2*i*sqrt(2)");
    }

    #[test]
    fn text_form_round_trip() {
        let s = "3/2 + 1/2*i + (2 - i)*sqrt(2)";
        let v: Scalar = s.parse().unwrap();
        assert_eq!(v.to_string(), s);
        let w: Scalar = "-sqrt(6) + i*sqrt(3)".parse().unwrap();
        assert_eq!(w.to_string(), "i*sqrt(3) - sqrt(6)");
        assert!("1 +".parse::<Scalar>().is_err());
        assert!("sqrt(i)".parse::<Scalar>().is_err());
    }

    #[test]
    fn radicals_multiply_square_free() {
        let a = sqrt_of(6).mul_ref(&sqrt_of(10));
        assert_eq!(a, sqrt_of(15).scale_q(&q(2, 1)));
    }

    #[test]
    fn inverse_through_tower() {
        let x: Scalar = "1 + sqrt(2) + i*sqrt(3) - 2*sqrt(30)".parse().unwrap();
        assert_eq!(x.mul_ref(&x.inv().unwrap()), Scalar::one());
    }

    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        let term = (
            prop::sample::select(vec![1u64, 2, 3, 5, 6, 7, 10, 15]),
            -4i64..=4,
            1i64..=3,
            -4i64..=4,
        );
        proptest::collection::vec(term, 0..4).prop_map(|ts| {
            let mut acc = Scalar::zero();
            for (d, a, b, c) in ts {
                let coef = GaussRat::new(q(a, b), q(c, 1));
                acc = acc + Scalar::from_terms(vec![(d, coef)]);
            }
            acc
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
            prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
            if let Some(ai) = a.inv() {
                prop_assert_eq!(a.mul_ref(&ai), Scalar::one());
            }
            prop_assert!(a.terms().iter().all(|(d, _)| square_free_part(*d).0 == 1));
        }

        #[test]
        fn text_round_trip(a in arb_scalar()) {
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }
    }
}
