//! The spin cover `W̃` inside the Clifford algebra, its classes and
//! character table, and Schur's bookkeeping for `S̃_l`.

use super::{gamma_monomial, ambient_gammas};
use crate::exactalg::{sqrt_of, Field, Scalar};
use crate::weyl::{
    dixon, partition::strict_partitions, ClassData, ClassFunction, FiniteGroup, Partition,
    RootSystem, RootType, WElt,
};
use crate::{Error, GMat, Result, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Element `2^{-e/2} Σ_S c_S γ_S` of the real Clifford algebra of `R^N`,
/// with `γ_i² = −1`. `S` runs over bitmasks and `γ_S` is the increasing
/// product. Integer coefficients suffice for the spin cover.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CliffElt {
    pub e: u32,
    pub terms: Vec<(u32, i64)>,
}

/// Sign of `γ_S γ_T = ± γ_{S△T}`.
pub fn monomial_sign(s: u32, t: u32) -> i64 {
    let mut inv = 0u32;
    for b in 0..32 {
        if t >> b & 1 == 1 {
            inv += (s >> (b + 1)).count_ones();
        }
    }
    inv += (s & t).count_ones();
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl CliffElt {
    pub fn scalar(c: i64) -> Self {
        CliffElt {
            e: 0,
            terms: vec![(0, c)],
        }
    }

    /// `2^{-e/2} Σ v_i γ_i`.
    pub fn vector(v: &[i64], e: u32) -> Self {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (1u32 << i, c))
            .collect();
        CliffElt { e, terms }.normalized()
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|t| t.1 != 0);
        self.terms.sort();
        while self.e >= 2 && self.terms.iter().all(|t| t.1 % 2 == 0) && !self.terms.is_empty() {
            for t in self.terms.iter_mut() {
                t.1 /= 2;
            }
            self.e -= 2;
        }
        self
    }

    pub fn mul(&self, o: &CliffElt) -> CliffElt {
        let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
        for &(s, a) in &self.terms {
            for &(t, b) in &o.terms {
                *acc.entry(s ^ t).or_insert(0) += monomial_sign(s, t) * a * b;
            }
        }
        CliffElt {
            e: self.e + o.e,
            terms: acc.into_iter().collect(),
        }
        .normalized()
    }

    pub fn neg(&self) -> CliffElt {
        CliffElt {
            e: self.e,
            terms: self.terms.iter().map(|&(s, c)| (s, -c)).collect(),
        }
    }

    /// `2^{-e/2}` as a tower element.
    pub fn prefactor(&self) -> Scalar {
        let half = Scalar::from_q(&Q::new(1.into(), (1i64 << (self.e / 2)).into()));
        if self.e % 2 == 1 {
            half.mul_ref(&Scalar::from_q(&Q::new(1.into(), 2.into())).mul_ref(&sqrt_of(2)))
        } else {
            half
        }
    }

    /// `Σ c_S Γ_S` on the module of the given gammas, without the prefactor.
    pub fn integral_matrix(&self, gammas: &[GMat]) -> GMat {
        let d = gammas[0].rows();
        let mut out = GMat::zeros(d, d);
        for &(s, c) in &self.terms {
            out.add_scaled(&crate::GaussRat::from_int(c), &gamma_monomial(gammas, s));
        }
        out
    }
}

/// Element of `W̃` paired with its image in `W`.
pub type CoverElt = (CliffElt, WElt);

/// `s̃_α = g̃_α / |α|` in ambient coordinates.
pub fn stilde_elt(rs: &RootSystem, a: &[i64]) -> CoverElt {
    let cl = if rs.is_long(a) {
        // 2ε_i / 2
        CliffElt::vector(&a.iter().map(|x| x / 2).collect::<Vec<_>>(), 0)
    } else {
        CliffElt::vector(a, 1)
    };
    (cl, rs.reflection(a))
}

pub struct SpinCover {
    pub rs: RootSystem,
    pub group: FiniteGroup<CoverElt>,
    /// Index of the central element `−1`.
    pub minus_one: usize,
}

pub const MAX_COVER_ORDER: usize = 2 * 40_320;

impl SpinCover {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let gens: Vec<CoverElt> = rs.simple.iter().map(|a| stilde_elt(rs, a)).collect();
        let id = (CliffElt::scalar(1), WElt::identity(rs.dim));
        let group = FiniteGroup::generate(
            id,
            gens,
            Arc::new(|a: &CoverElt, b: &CoverElt| (a.0.mul(&b.0), a.1.compose(&b.1))),
            MAX_COVER_ORDER,
        )?;
        let minus_one = group
            .index_of(&(CliffElt::scalar(-1), WElt::identity(rs.dim)))
            .ok_or_else(|| Error::Certificate("−1 not in the spin cover".into()))?;
        Ok(SpinCover {
            rs: rs.clone(),
            group,
            minus_one,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        self.group.classes()
    }

    /// Index of the product of `s̃_{α_1} ⋯ s̃_{α_k}`.
    pub fn product_of(&self, roots: &[&[i64]]) -> usize {
        let mut x = (CliffElt::scalar(1), WElt::identity(self.rs.dim));
        for a in roots {
            let s = stilde_elt(&self.rs, a);
            x = (x.0.mul(&s.0), x.1.compose(&s.1));
        }
        self.group.index_of(&x).expect("element of the cover")
    }

    /// Projection to `W`.
    pub fn projection(&self, i: usize) -> &WElt {
        &self.group.element(i).1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinLabel {
    /// `σ̃_λ` for `λ ∈ DP⁺`.
    Plus(Partition),
    /// One of the associates `σ̃_λ^±` for `λ ∈ DP⁻`; the sign is a
    /// deterministic but arbitrary choice.
    Minus(Partition, i8),
}

impl SpinLabel {
    pub fn partition(&self) -> &Partition {
        match self {
            SpinLabel::Plus(p) | SpinLabel::Minus(p, _) => p,
        }
    }
}

impl std::fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpinLabel::Plus(p) => write!(f, "{p}"),
            SpinLabel::Minus(p, s) => write!(f, "{p}{}", if *s > 0 { "+" } else { "-" }),
        }
    }
}

pub struct SpinCharTable {
    pub classes: Arc<ClassData>,
    pub chars: Vec<ClassFunction>,
    pub genuine: Vec<bool>,
    /// `a(σ̃)` for each genuine character.
    pub a_values: Vec<Option<Scalar>>,
    /// Type A labels of the genuine characters.
    pub labels: Vec<Option<SpinLabel>>,
}

impl SpinCharTable {
    pub fn genuine_indices(&self) -> Vec<usize> {
        (0..self.chars.len()).filter(|&i| self.genuine[i]).collect()
    }

    pub fn index_of_label(&self, l: &SpinLabel) -> Option<usize> {
        self.labels.iter().position(|x| x.as_ref() == Some(l))
    }

    /// Genuine characters labelled by `λ` (one, or the two associates).
    pub fn indices_for(&self, lambda: &Partition) -> Vec<usize> {
        (0..self.chars.len())
            .filter(|&i| self.labels[i].as_ref().is_some_and(|l| l.partition() == lambda))
            .collect()
    }

    /// Decomposes a class function into irreducibles.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (i, c) in self.chars.iter().enumerate() {
            let m = chi.multiplicity(c)?;
            if m > 0 {
                out.push((i, m));
            }
        }
        Ok(out)
    }

    pub fn describe(&self, i: usize) -> String {
        match &self.labels[i] {
            Some(l) => format!("σ̃{l}"),
            None => format!("χ{i}"),
        }
    }
}

/// `a(σ̃) = −¼ Σ c_α c_β χ(g̃_α g̃_β) / χ(1)` over pairs of positive roots
/// with `s_α(β) < 0`.
pub fn a_value(cover: &SpinCover, chi: &ClassFunction) -> Scalar {
    let rs = &cover.rs;
    let mut s = Scalar::zero();
    for (ia, a) in rs.positive.iter().enumerate() {
        let sa = rs.reflection(a);
        for (ib, b) in rs.positive.iter().enumerate() {
            let img = sa.act_int(b);
            if img.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0) {
                continue;
            }
            let idx = cover.product_of(&[a, b]);
            let cls = cover.group.class_of(idx);
            // g̃_α g̃_β = |α||β| s̃_α s̃_β
            let norms = sqrt_of((rs.norm2(a) * rs.norm2(b)) as u64);
            let coef = Scalar::from_q(&(&rs.params[ia] * &rs.params[ib])).mul_ref(&norms);
            s.add_mul_assign(&coef, &chi.values[cls]);
        }
    }
    let deg = chi.degree();
    s.mul_ref(&deg.inv().expect("non-zero degree"))
        .scale_q(&Q::new((-1).into(), 4.into()))
}

/// `Σ_i (λ_i³ − λ_i) / 12`, the closed form matched against [`a_value`]
/// for `S̃_l`.
pub fn a_value_closed_form(lambda: &Partition) -> Q {
    let s: i64 = lambda
        .parts()
        .iter()
        .map(|&p| {
            let p = p as i64;
            p * p * p - p
        })
        .sum();
    Q::new(s.into(), 12.into())
}

pub fn spin_char_table(cover: &SpinCover) -> Result<SpinCharTable> {
    let rows = dixon::character_table(&cover.group)?;
    let classes = cover.classes().clone();
    let mcls = cover.group.class_of(cover.minus_one);
    let chars: Vec<ClassFunction> = rows
        .into_iter()
        .map(|values| ClassFunction {
            classes: classes.clone(),
            values,
        })
        .collect();
    let genuine: Vec<bool> = chars
        .iter()
        .map(|c| c.values[mcls] == c.degree().neg_ref())
        .collect();
    let a_values: Vec<Option<Scalar>> = chars
        .iter()
        .zip(&genuine)
        .map(|(c, &g)| g.then(|| a_value(cover, c)))
        .collect();
    let mut labels = vec![None; chars.len()];
    if cover.rs.label == RootType::A {
        let l = cover.rs.dim;
        for lambda in strict_partitions(l) {
            let dim = spin_irrep_dimension(&lambda)?;
            let a = Scalar::from_q(&a_value_closed_form(&lambda));
            let hits: Vec<usize> = (0..chars.len())
                .filter(|&i| {
                    genuine[i]
                        && chars[i].degree() == Scalar::from_int(dim as i64)
                        && a_values[i].as_ref() == Some(&a)
                })
                .collect();
            match (dp_class(&lambda)?, hits.as_slice()) {
                (DpClass::Plus, [i]) => labels[*i] = Some(SpinLabel::Plus(lambda.clone())),
                (DpClass::Minus, [i, j]) => {
                    labels[*i] = Some(SpinLabel::Minus(lambda.clone(), 1));
                    labels[*j] = Some(SpinLabel::Minus(lambda.clone(), -1));
                }
                _ => {
                    return Err(Error::Certificate(format!(
                        "could not label the spin character {lambda}"
                    )))
                }
            }
        }
    }
    Ok(SpinCharTable {
        classes,
        chars,
        genuine,
        a_values,
        labels,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DpClass {
    Plus,
    Minus,
}

/// `DP⁺` when `l − ℓ(λ)` is even.
pub fn dp_class(lambda: &Partition) -> Result<DpClass> {
    lambda.require_strict()?;
    Ok(if (lambda.size() - lambda.len()).is_multiple_of(2) {
        DpClass::Plus
    } else {
        DpClass::Minus
    })
}

/// `ε_λ`: `1` on `DP⁺`, `√2` on `DP⁻`.
pub fn epsilon_of(lambda: &Partition) -> Result<Scalar> {
    Ok(match dp_class(lambda)? {
        DpClass::Plus => Scalar::one(),
        DpClass::Minus => sqrt_of(2),
    })
}

/// `2^{⌊(l−ℓ)/2⌋} · l!/∏λ_i! · ∏_{i<j} (λ_i−λ_j)/(λ_i+λ_j)`.
pub fn spin_irrep_dimension(lambda: &Partition) -> Result<usize> {
    lambda.require_strict()?;
    let l = lambda.size();
    let mut x = Q::from_integer(1.into());
    for i in 2..=l {
        x *= Q::from_integer(i.into());
    }
    let p = lambda.parts();
    for &pi in p {
        for i in 2..=pi {
            x /= Q::from_integer(i.into());
        }
    }
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            x *= Q::new(((p[i] - p[j]) as i64).into(), ((p[i] + p[j]) as i64).into());
        }
    }
    x *= Q::from_integer((1i64 << ((l - p.len()) / 2)).into());
    if !x.is_integer() {
        return Err(Error::Certificate("non-integral spin dimension".into()));
    }
    Ok(x.to_integer().try_into().expect("small dimension"))
}

/// Matrix of a cover element on the ambient module, split as
/// `(prefactor, integral matrix)`.
pub fn cover_matrix(x: &CliffElt, dim: usize) -> (Scalar, GMat) {
    let g = ambient_gammas(dim);
    (x.prefactor(), x.integral_matrix(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::build_root_system;

    fn a(l: usize) -> RootSystem {
        build_root_system(RootType::A, l - 1, None).unwrap()
    }

    #[test]
    fn monomial_signs() {
        // γ1 γ1 = −1
        assert_eq!(monomial_sign(1, 1), -1);
        // γ2 γ1 = −γ1 γ2
        assert_eq!(monomial_sign(2, 1), -1);
        assert_eq!(monomial_sign(1, 2), 1);
    }

    #[test]
    fn stilde_squares_and_braid() {
        let rs = a(3);
        let s1 = stilde_elt(&rs, &rs.simple[0]).0;
        let s2 = stilde_elt(&rs, &rs.simple[1]).0;
        assert_eq!(s1.mul(&s1), CliffElt::scalar(-1));
        let p = s1.mul(&s2);
        assert_eq!(p.mul(&p).mul(&p), CliffElt::scalar(-1));
    }

    #[test]
    fn cover_orders() {
        for l in 2..=5 {
            let c = SpinCover::new(&a(l)).unwrap();
            let mut f = 1;
            for i in 2..=l {
                f *= i;
            }
            assert_eq!(c.order(), 2 * f);
        }
        let c2 = build_root_system(RootType::C, 2, Some(Q::from_integer(1.into()))).unwrap();
        assert_eq!(SpinCover::new(&c2).unwrap().order(), 16);
    }

    #[test]
    fn s3_genuine_dims() {
        let c = SpinCover::new(&a(3)).unwrap();
        let t = spin_char_table(&c).unwrap();
        let mut dims: Vec<i64> = t
            .genuine_indices()
            .iter()
            .map(|&i| t.chars[i].degree().as_integer().unwrap())
            .collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2]);
        let basic = t.index_of_label(&SpinLabel::Plus(Partition::new(vec![3]))).unwrap();
        assert_eq!(t.chars[basic].degree(), Scalar::from_int(2));
        assert_eq!(t.indices_for(&Partition::new(vec![2, 1])).len(), 2);
    }

    #[test]
    fn genuine_sum_rule_and_labels() {
        for l in 2..=6 {
            let c = SpinCover::new(&a(l)).unwrap();
            let t = spin_char_table(&c).unwrap();
            let mut s = 0i64;
            for i in t.genuine_indices() {
                let d = t.chars[i].degree().as_integer().unwrap();
                s += d * d;
                assert!(t.labels[i].is_some());
            }
            assert_eq!(s as usize * 2, c.order());
            let expect: usize = strict_partitions(l)
                .iter()
                .map(|p| match dp_class(p).unwrap() {
                    DpClass::Plus => 1,
                    DpClass::Minus => 2,
                })
                .sum();
            assert_eq!(t.genuine_indices().len(), expect);
        }
        let t4 = spin_char_table(&SpinCover::new(&a(4)).unwrap()).unwrap();
        let i = t4.index_of_label(&SpinLabel::Plus(Partition::new(vec![3, 1]))).unwrap();
        assert_eq!(t4.chars[i].degree(), Scalar::from_int(4));
    }

    #[test]
    fn type_c_sum_rule() {
        for n in 2..=3 {
            let rs = build_root_system(RootType::C, n, Some(crate::exactalg::q(17, 10))).unwrap();
            let c = SpinCover::new(&rs).unwrap();
            let t = spin_char_table(&c).unwrap();
            let s: i64 = t
                .genuine_indices()
                .iter()
                .map(|&i| t.chars[i].degree().as_integer().unwrap().pow(2))
                .sum();
            assert_eq!(s as usize * 2, c.order());
        }
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(spin_irrep_dimension(&Partition::new(vec![3])).unwrap(), 2);
        assert_eq!(spin_irrep_dimension(&Partition::new(vec![2, 1])).unwrap(), 1);
        assert_eq!(spin_irrep_dimension(&Partition::new(vec![3, 1])).unwrap(), 4);
        assert!(spin_irrep_dimension(&Partition::new(vec![2, 2])).is_err());
    }

    #[test]
    fn dp_classes() {
        assert_eq!(dp_class(&Partition::new(vec![3])).unwrap(), DpClass::Plus);
        assert_eq!(epsilon_of(&Partition::new(vec![3])).unwrap(), Scalar::one());
        assert_eq!(dp_class(&Partition::new(vec![2, 1])).unwrap(), DpClass::Minus);
        assert_eq!(epsilon_of(&Partition::new(vec![2, 1])).unwrap(), sqrt_of(2));
        assert_eq!(dp_class(&Partition::new(vec![4])).unwrap(), DpClass::Minus);
    }
}
