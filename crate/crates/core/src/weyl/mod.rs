//! Root systems of types `A_{l-1}` and `C_n`, their Weyl groups, and
//! character tables.
//!
//! Vectors live in the `ε`-coordinates of `V = Q^l` (type A) or `Q^n`
//! (type C) with `⟨ε_i, ε_j⟩ = δ_ij`. In type C the long roots `2ε_i`
//! therefore have squared length 4.

pub mod cyclotomic;
pub mod dixon;
pub mod group;
pub mod partition;
pub mod symmetric;

pub use group::{ClassData, FiniteGroup};
pub use partition::Partition;

use crate::exactalg::{Field, Scalar};
use crate::{Error, Result, Q};
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum RootType {
    A,
    C,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootType::A => "A",
            RootType::C => "C",
        })
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub label: RootType,
    /// Number of simple roots.
    pub rank: usize,
    /// Dimension of `V`.
    pub dim: usize,
    pub roots: Vec<Vec<i64>>,
    pub positive: Vec<Vec<i64>>,
    pub simple: Vec<Vec<i64>>,
    /// Position of each simple root in `positive`.
    pub simple_index: Vec<usize>,
    /// `c_α` for each positive root.
    pub params: Vec<Q>,
    pub m: Option<Q>,
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Builds `A_rank` (on `Q^{rank+1}`) or `C_rank` with long-root parameter `m`.
pub fn build_root_system(label: RootType, rank: usize, m: Option<Q>) -> Result<RootSystem> {
    if rank == 0 {
        return Err(Error::InvalidRootSystem("rank must be at least 1".into()));
    }
    let mut positive = Vec::new();
    let mut simple = Vec::new();
    let dim = match label {
        RootType::A => {
            if m.is_some() {
                return Err(Error::InvalidRootSystem("type A takes no m".into()));
            }
            let l = rank + 1;
            for i in 0..l {
                for j in i + 1..l {
                    let mut v = unit(l, i, 1);
                    v[j] = -1;
                    positive.push(v);
                }
            }
            for i in 0..rank {
                let mut v = unit(l, i, 1);
                v[i + 1] = -1;
                simple.push(v);
            }
            l
        }
        RootType::C => {
            if m.is_none() {
                return Err(Error::InvalidRootSystem("type C needs m".into()));
            }
            let n = rank;
            for i in 0..n {
                for j in i + 1..n {
                    let mut v = unit(n, i, 1);
                    v[j] = -1;
                    positive.push(v);
                    let mut v = unit(n, i, 1);
                    v[j] = 1;
                    positive.push(v);
                }
                positive.push(unit(n, i, 2));
            }
            for i in 0..n - 1 {
                let mut v = unit(n, i, 1);
                v[i + 1] = -1;
                simple.push(v);
            }
            simple.push(unit(n, n - 1, 2));
            n
        }
    };
    positive.sort_by(|a, b| b.cmp(a));
    let simple_index = simple
        .iter()
        .map(|s| positive.iter().position(|p| p == s).expect("simple is positive"))
        .collect();
    let mut roots: Vec<Vec<i64>> = positive.clone();
    roots.extend(positive.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
    let params = positive
        .iter()
        .map(|a| {
            if norm2(a) == 4 {
                m.clone().expect("type C")
            } else {
                Q::one()
            }
        })
        .collect();
    Ok(RootSystem {
        label,
        rank,
        dim,
        roots,
        positive,
        simple,
        simple_index,
        params,
        m,
    })
}

fn norm2(a: &[i64]) -> i64 {
    a.iter().map(|x| x * x).sum()
}

impl RootSystem {
    /// Replaces the parameter function by `c_α = short` / `long`.
    pub fn with_params(mut self, short: Q, long: Q) -> Self {
        self.params = self
            .positive
            .iter()
            .map(|a| if norm2(a) == 4 { long.clone() } else { short.clone() })
            .collect();
        self
    }

    pub fn is_long(&self, a: &[i64]) -> bool {
        norm2(a) == 4
    }

    /// `⟨α, α⟩`.
    pub fn norm2(&self, a: &[i64]) -> i64 {
        norm2(a)
    }

    pub fn positive_index(&self, a: &[i64]) -> Option<usize> {
        self.positive.iter().position(|p| p == a)
    }

    /// `c_α` for any root.
    pub fn c(&self, a: &[i64]) -> Q {
        let pos: Vec<i64> = if is_positive(a) {
            a.to_vec()
        } else {
            a.iter().map(|x| -x).collect()
        };
        self.params[self.positive_index(&pos).expect("root")].clone()
    }

    /// `α^∨(v) = 2⟨α, v⟩ / ⟨α, α⟩`.
    pub fn coroot<F: Field>(&self, a: &[i64], v: &[F]) -> F {
        let mut s = F::zero();
        for (x, y) in a.iter().zip(v) {
            if *x != 0 {
                s.add_mul_assign(&F::from_int(*x), y);
            }
        }
        s.mul_ref(&F::from_q(&Q::new(2.into(), norm2(a).into())))
    }

    /// Integer coroot pairing with an integer vector.
    pub fn coroot_int(&self, a: &[i64], v: &[i64]) -> i64 {
        let s: i64 = a.iter().zip(v).map(|(x, y)| x * y).sum();
        2 * s / norm2(a)
    }

    /// `s_α` as a signed permutation.
    pub fn reflection(&self, a: &[i64]) -> WElt {
        let n = self.dim;
        let mut img: Vec<i8> = (1..=n as i8).collect();
        let nz: Vec<usize> = (0..n).filter(|&i| a[i] != 0).collect();
        match nz.as_slice() {
            [i] => img[*i] = -(*i as i8 + 1),
            [i, j] => {
                if a[*i] == a[*j] {
                    img[*i] = -(*j as i8 + 1);
                    img[*j] = -(*i as i8 + 1);
                } else {
                    img[*i] = *j as i8 + 1;
                    img[*j] = *i as i8 + 1;
                }
            }
            _ => panic!("not a root: {a:?}"),
        }
        WElt(img)
    }

    pub fn simple_reflections(&self) -> Vec<WElt> {
        self.simple.iter().map(|a| self.reflection(a)).collect()
    }

    /// Enumerates `W`. Fails when `|W|` exceeds `10!`.
    pub fn weyl_group(&self) -> Result<WeylGroup> {
        WeylGroup::new(self.clone())
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.label, self.rank)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label.to_string(),
            "rank": self.rank,
            "m": self.m.as_ref().map(|x| x.to_string()),
            "positive_roots": self.positive,
        })
    }
}

/// Signed permutation: `w(ε_i) = sign · ε_{|img[i]|-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct WElt(pub Vec<i8>);

impl WElt {
    pub fn identity(n: usize) -> Self {
        WElt((1..=n as i8).collect())
    }

    /// `(self · o)(ε_i) = self(o(ε_i))`.
    pub fn compose(&self, o: &WElt) -> WElt {
        WElt(
            o.0.iter()
                .map(|&x| {
                    let y = self.0[(x.unsigned_abs() - 1) as usize];
                    if x < 0 {
                        -y
                    } else {
                        y
                    }
                })
                .collect(),
        )
    }

    pub fn act<F: Field>(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); v.len()];
        for (i, &x) in self.0.iter().enumerate() {
            let j = (x.unsigned_abs() - 1) as usize;
            out[j] = if x < 0 { v[i].neg_ref() } else { v[i].clone() };
        }
        out
    }

    pub fn act_int(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &x) in self.0.iter().enumerate() {
            let j = (x.unsigned_abs() - 1) as usize;
            out[j] = if x < 0 { -v[i] } else { v[i] };
        }
        out
    }

    pub fn inverse(&self) -> WElt {
        let mut out = vec![0i8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            let j = (x.unsigned_abs() - 1) as usize;
            out[j] = if x < 0 { -(i as i8 + 1) } else { i as i8 + 1 };
        }
        WElt(out)
    }

    /// Cycle type of the underlying permutation, ignoring signs.
    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = (self.0[i].unsigned_abs() - 1) as usize;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        rs.positive
            .iter()
            .filter(|a| !is_positive(&self.act_int(a)))
            .count()
    }
}

/// Weyl group with lengths, reduced words and class data.
pub struct WeylGroup {
    pub rs: RootSystem,
    pub group: FiniteGroup<WElt>,
    lengths: Vec<usize>,
    longest: usize,
    /// Element index of `s_α` for each positive root.
    reflections: Vec<usize>,
}

pub const MAX_WEYL_ORDER: usize = 3_628_800;

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Result<Self> {
        let gens = rs.simple_reflections();
        let group = FiniteGroup::generate(
            WElt::identity(rs.dim),
            gens,
            Arc::new(|a: &WElt, b: &WElt| a.compose(b)),
            MAX_WEYL_ORDER,
        )?;
        let lengths: Vec<usize> = (0..group.order()).map(|i| group.word(i).len()).collect();
        let longest = (0..group.order())
            .max_by_key(|&i| lengths[i])
            .expect("non-empty");
        let reflections = rs
            .positive
            .iter()
            .map(|a| group.index_of(&rs.reflection(a)).expect("reflection in W"))
            .collect();
        Ok(WeylGroup {
            rs,
            group,
            lengths,
            longest,
            reflections,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn element(&self, i: usize) -> &WElt {
        self.group.element(i)
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn reflection_index(&self, pos_root: usize) -> usize {
        self.reflections[pos_root]
    }

    pub fn word(&self, i: usize) -> &[usize] {
        self.group.word(i)
    }

    pub fn index_of(&self, w: &WElt) -> usize {
        self.group.index_of(w).expect("element of W")
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        self.group.classes()
    }

    /// Irreducible characters via Dixon, sorted by degree.
    pub fn char_table(&self) -> Result<Vec<ClassFunction>> {
        let rows = dixon::character_table(&self.group)?;
        let cd = self.classes().clone();
        Ok(rows
            .into_iter()
            .map(|values| ClassFunction {
                classes: cd.clone(),
                values,
            })
            .collect())
    }

    /// Cycle type of each class representative (type A).
    pub fn class_cycle_types(&self) -> Vec<Partition> {
        self.classes()
            .reps
            .iter()
            .map(|&r| self.element(r).cycle_type())
            .collect()
    }

    /// For type A: the class function of `S_l` with the given values on
    /// cycle types, transported to this group's classes.
    pub fn from_sym(&self, f: &symmetric::SymClassFn) -> ClassFunction {
        let ps = partition::partitions(f.n);
        let values = self
            .class_cycle_types()
            .iter()
            .map(|ct| {
                let i = ps.iter().position(|p| p == ct).expect("cycle type");
                Scalar::from_int(f.values[i])
            })
            .collect();
        ClassFunction {
            classes: self.classes().clone(),
            values,
        }
    }

    /// Irreducible of `S_l` labelled by `λ`, from Murnaghan–Nakayama.
    pub fn sym_irreducible(&self, lambda: &Partition) -> ClassFunction {
        self.from_sym(&symmetric::SymClassFn::irreducible(lambda))
    }

    /// Labels the Dixon table of type A by partitions, matching each
    /// character against Murnaghan–Nakayama.
    pub fn type_a_labels(&self, table: &[ClassFunction]) -> Result<Vec<Partition>> {
        let l = self.rs.dim;
        let cands: Vec<(Partition, ClassFunction)> = partition::partitions(l)
            .into_iter()
            .map(|p| {
                let c = self.sym_irreducible(&p);
                (p, c)
            })
            .collect();
        table
            .iter()
            .map(|chi| {
                cands
                    .iter()
                    .find(|(_, c)| c.values == chi.values)
                    .map(|(p, _)| p.clone())
                    .ok_or_else(|| Error::Certificate("Dixon and MN tables disagree".into()))
            })
            .collect()
    }
}

/// Values of a class function on the classes of a finite group.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub classes: Arc<ClassData>,
    pub values: Vec<Scalar>,
}

impl ClassFunction {
    pub fn zero(classes: Arc<ClassData>) -> Self {
        let n = classes.len();
        ClassFunction {
            classes,
            values: vec![Scalar::zero(); n],
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.classes, &o.classes) || self.classes == o.classes {
            Ok(())
        } else {
            Err(Error::Invalid("class functions of different groups".into()))
        }
    }

    /// Value at the identity class.
    pub fn degree(&self) -> Scalar {
        self.values[0].clone()
    }

    /// `(1/|G|) Σ_j |C_j| χ(g_j) conj(ψ(g_j))`.
    pub fn inner(&self, o: &Self) -> Result<Scalar> {
        self.check(o)?;
        let mut s = Scalar::zero();
        for (j, h) in self.classes.sizes.iter().enumerate() {
            let t = self.values[j].mul_ref(&o.values[j].conj());
            s.add_mul_assign(&Scalar::from_int(*h as i64), &t);
        }
        Ok(s.scale_q(&Q::new(1.into(), (self.classes.group_order as i64).into())))
    }

    /// `⟨χ, σ⟩` as a non-negative integer.
    pub fn multiplicity(&self, sigma: &Self) -> Result<usize> {
        let v = self.inner(sigma)?;
        v.as_integer()
            .filter(|&x| x >= 0)
            .map(|x| x as usize)
            .ok_or_else(|| Error::Certificate(format!("non-integral multiplicity {v}")))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.add_ref(b)).collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.sub_ref(b)).collect(),
        })
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        ClassFunction {
            classes: self.classes.clone(),
            values: self.values.iter().map(|a| a.mul_ref(k)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|x| x.is_zero())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(|x| x.to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qi;
    use proptest::prelude::*;

    #[test]
    fn positive_root_counts() {
        let a2 = build_root_system(RootType::A, 2, None).unwrap();
        assert_eq!(
            a2.positive,
            vec![vec![1, 0, -1], vec![1, -1, 0], vec![0, 1, -1]]
        );
        assert_eq!(a2.weyl_group().unwrap().order(), 6);
        let a1 = build_root_system(RootType::A, 1, None).unwrap();
        assert_eq!(a1.positive.len(), 1);
        assert_eq!(a1.weyl_group().unwrap().order(), 2);
        let c2 = build_root_system(RootType::C, 2, Some(qi(3))).unwrap();
        assert_eq!(c2.positive.len(), 4);
        assert_eq!(c2.weyl_group().unwrap().order(), 8);
        assert!(build_root_system(RootType::C, 2, None).is_err());
        assert!(build_root_system(RootType::A, 0, None).is_err());
    }

    /// Closure of the simple roots under simple reflections.
    fn closure(rs: &RootSystem) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = rs.simple.clone();
        let mut i = 0;
        while i < out.len() {
            for s in &rs.simple {
                let r = rs.reflection(s).act_int(&out[i]);
                if !out.contains(&r) {
                    out.push(r);
                }
            }
            i += 1;
        }
        out.sort();
        out
    }

    #[test]
    fn roots_are_closed_under_reflection() {
        for rs in [
            build_root_system(RootType::A, 3, None).unwrap(),
            build_root_system(RootType::C, 2, Some(qi(1))).unwrap(),
            build_root_system(RootType::C, 3, Some(qi(1))).unwrap(),
        ] {
            let mut all = rs.roots.clone();
            all.sort();
            assert_eq!(closure(&rs), all);
        }
    }

    #[test]
    fn longest_elements() {
        let a2 = build_root_system(RootType::A, 2, None).unwrap().weyl_group().unwrap();
        let w0 = a2.longest();
        assert_eq!(a2.length(w0), 3);
        // brute force over all six elements
        let max = (0..6).map(|i| a2.element(i).inversions(&a2.rs)).max().unwrap();
        assert_eq!(max, 3);
        assert_eq!(a2.element(w0).act_int(&[1, 2, 3]), vec![3, 2, 1]);
        let c2 = build_root_system(RootType::C, 2, Some(qi(1))).unwrap().weyl_group().unwrap();
        assert_eq!(c2.length(c2.longest()), 4);
        assert_eq!(c2.element(c2.longest()).act_int(&[1, 2]), vec![-1, -2]);
    }

    #[test]
    fn lengths_are_inversion_counts() {
        for rs in [
            build_root_system(RootType::A, 3, None).unwrap(),
            build_root_system(RootType::C, 3, Some(qi(1))).unwrap(),
        ] {
            let w = rs.weyl_group().unwrap();
            for i in 0..w.order() {
                assert_eq!(w.length(i), w.element(i).inversions(&rs));
            }
        }
    }

    #[test]
    fn s3_table_and_multiplicity() {
        let w = build_root_system(RootType::A, 2, None).unwrap().weyl_group().unwrap();
        let t = w.char_table().unwrap();
        let degs: Vec<i64> = t.iter().map(|c| c.degree().as_integer().unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        let labels = w.type_a_labels(&t).unwrap();
        let std = &t[labels.iter().position(|p| p.parts() == [2, 1]).unwrap()];
        // values on classes (1³), (2,1), (3)
        let cts = w.class_cycle_types();
        let at = |mu: &[usize]| {
            std.values[cts.iter().position(|c| c.parts() == mu).unwrap()].clone()
        };
        assert_eq!(at(&[1, 1, 1]), Scalar::from_int(2));
        assert_eq!(at(&[2, 1]), Scalar::from_int(0));
        assert_eq!(at(&[3]), Scalar::from_int(-1));
        // regular character
        let mut reg = ClassFunction::zero(w.classes().clone());
        reg.values[0] = Scalar::from_int(6);
        assert_eq!(reg.multiplicity(std).unwrap(), 2);
        assert_eq!(std.multiplicity(std).unwrap(), 1);
    }

    #[test]
    fn orthogonality_of_built_tables() {
        for rs in [
            build_root_system(RootType::A, 3, None).unwrap(),
            build_root_system(RootType::A, 4, None).unwrap(),
            build_root_system(RootType::C, 2, Some(qi(1))).unwrap(),
            build_root_system(RootType::C, 3, Some(qi(1))).unwrap(),
        ] {
            let w = rs.weyl_group().unwrap();
            let t = w.char_table().unwrap();
            assert_eq!(t.len(), w.classes().len());
            let sum: i64 = t.iter().map(|c| c.degree().as_integer().unwrap().pow(2)).sum();
            assert_eq!(sum as usize, w.order());
            for (i, a) in t.iter().enumerate() {
                for (j, b) in t.iter().enumerate() {
                    assert_eq!(a.inner(b).unwrap(), Scalar::from_int((i == j) as i64));
                }
            }
            // second orthogonality: Σ_χ |χ(g_j)|² = |C(g_j)|
            for j in 0..t.len() {
                let mut s = Scalar::zero();
                for c in &t {
                    s = s.add_ref(&c.values[j].mul_ref(&c.values[j].conj()));
                }
                let cent = w.order() / w.classes().sizes[j];
                assert_eq!(s, Scalar::from_int(cent as i64));
            }
            if rs.label == RootType::A {
                w.type_a_labels(&t).unwrap();
            }
        }
    }

    proptest! {
        #[test]
        fn reflection_identity(v in proptest::collection::vec(-20i64..20, 3), k in 0usize..9) {
            let rs = build_root_system(RootType::C, 3, Some(qi(2))).unwrap();
            let a = &rs.positive[k];
            let vq: Vec<Q> = v.iter().map(|&x| qi(x)).collect();
            let s = rs.reflection(a);
            let lhs = s.act(&vq);
            let c = rs.coroot(a, &vq);
            let rhs: Vec<Q> = vq.iter().zip(a).map(|(x, &ai)| x - &c * qi(ai)).collect();
            prop_assert_eq!(&lhs, &rhs);
            let u: Vec<Q> = v.iter().rev().map(|&x| qi(x + 1)).collect();
            let ip = |x: &[Q], y: &[Q]| x.iter().zip(y).fold(Q::zero(), |s, (p, q)| s + p * q);
            prop_assert_eq!(ip(&s.act(&u), &lhs), ip(&u, &vq));
        }
    }
}
