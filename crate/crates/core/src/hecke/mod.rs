//! Graded Hecke algebras `ℍ(V, W, Π, r, c)` with `r` a rational number, and
//! finite-dimensional modules given by their action matrices.
//!
//! A module stores one matrix per simple reflection and one per coordinate
//! vector `ε_k` of `V`. Induced modules, simple quotients and twists keep
//! enough of their construction to build intertwiners later.

mod grading;
mod quotient;

pub use grading::{
    audit_grading, extend_to_graded, graded_prime, theta_intertwiners, z2_grading, GradedModule,
    Grading,
};
pub use quotient::{certify_simple, simple_quotient};

use crate::exactalg::{kernel, qi, simultaneous_generalized_eigenspaces, Field, Subspace};
use crate::segments::Multisegment;
use crate::weyl::{build_root_system, RootSystem, RootType, WElt, WeylGroup};
use crate::{Error, QMat, Result, Q};
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// The algebra: root datum, parameters `c_α` (inside `rs`) and `r`.
#[derive(Clone)]
pub struct HAlgebra {
    pub rs: RootSystem,
    pub weyl: Arc<WeylGroup>,
    pub r: Q,
}

impl fmt::Debug for HAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HAlgebra({}, r = {})", self.rs.name(), self.r)
    }
}

/// Data of `ℍ ⊗_{ℍ_J} C_λ` for a one-dimensional character of `ℍ_J`.
#[derive(Clone, Debug)]
pub struct Induced {
    /// Simple roots in `J`, by index.
    pub j: Vec<usize>,
    /// `t_s ↦ eta[s]` for `s ∈ J`; entries outside `J` are unused.
    pub eta: Vec<i64>,
    pub weight: Vec<Q>,
    /// Minimal coset representatives: basis vector `b` is `t_{reps[b]} ⊗ 1`.
    pub reps: Vec<usize>,
}

/// `E / rad` with basis the images of `e_c`, `c ∈ section`.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub parent: HModule,
    pub radical: Subspace<Q>,
    pub section: Vec<usize>,
}

impl QuotientData {
    /// Image of a parent vector in quotient coordinates.
    pub fn project(&self, x: &[Q]) -> Vec<Q> {
        let mut y = x.to_vec();
        let b = self.radical.basis();
        for (row, &p) in self.radical.pivots().iter().enumerate() {
            let c = y[p].clone();
            if c.is_zero() {
                continue;
            }
            for (yi, bi) in y.iter_mut().zip(b.row(row)) {
                if !bi.is_zero() {
                    yi.sub_mul_assign(&c, bi);
                }
            }
        }
        self.section.iter().map(|&c| y[c].clone()).collect()
    }
}

#[derive(Clone, Debug)]
pub enum Origin {
    Induced(Arc<Induced>),
    Quotient(Arc<QuotientData>),
    Derived,
}

/// A finite-dimensional `ℍ`-module.
#[derive(Clone, Debug)]
pub struct HModule {
    pub dim: usize,
    /// `π(t_s)` for each simple reflection.
    pub t: Vec<QMat>,
    /// `π(ε_k)` for each coordinate of `V`.
    pub v: Vec<QMat>,
    pub label: String,
    /// A cyclic vector, when one is known.
    pub generator: Option<Vec<Q>>,
    pub origin: Origin,
}

impl HModule {
    /// `t_s` followed by `ε_k` matrices.
    pub fn generators(&self) -> Vec<QMat> {
        self.t.iter().chain(&self.v).cloned().collect()
    }

    /// `π(v)` for `v = Σ v_k ε_k`.
    pub fn v_matrix(&self, v: &[Q]) -> QMat {
        let mut m = QMat::zeros(self.dim, self.dim);
        for (c, vk) in v.iter().zip(&self.v) {
            m.add_scaled(c, vk);
        }
        m
    }
}

/// `W`-orbit of a weight, stored by a canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralCharacter {
    pub rep: Vec<Q>,
    pub r: Q,
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.rep.iter().map(|x| x.to_string()).collect();
        write!(f, "W({})", s.join(","))
    }
}

/// `w(ε_k) = ±ε_j`, as `(j, sign)`.
pub(crate) fn unit_image(w: &WElt, k: usize) -> (usize, i64) {
    let x = w.0[k];
    ((x.unsigned_abs() - 1) as usize, if x < 0 { -1 } else { 1 })
}

pub(crate) fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub(crate) fn random_q(rng: &mut StdRng) -> Q {
    qi(rng.gen_range(-7..=7))
}

impl HAlgebra {
    pub fn new(rs: RootSystem, r: Q) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::Invalid("r must be non-zero".into()));
        }
        let weyl = Arc::new(rs.weyl_group()?);
        Ok(HAlgebra { rs, weyl, r })
    }

    /// `ℍ_l` of type `A_{l−1}` with `c ≡ 1`, `r = 1`.
    pub fn type_a(l: usize) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidRootSystem("type A needs l ≥ 2".into()));
        }
        Self::new(build_root_system(RootType::A, l - 1, None)?, Q::one())
    }

    /// `ℍ_{n,m}` of type `C_n`: `c = 1` on short roots and `m` on long ones.
    pub fn type_c(n: usize, m: Q) -> Result<Self> {
        Self::new(build_root_system(RootType::C, n, Some(m))?, Q::one())
    }

    /// `dim V`.
    pub fn dim(&self) -> usize {
        self.rs.dim
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn label(&self) -> RootType {
        self.rs.label
    }

    fn simple_elt(&self, i: usize) -> usize {
        self.weyl.group.generators()[i]
    }

    /// `π(t_w)` from a reduced word.
    pub fn t_elem(&self, x: &HModule, w: usize) -> QMat {
        let mut m = QMat::identity(x.dim);
        for &g in self.weyl.word(w) {
            m = m.mul(&x.t[g]);
        }
        m
    }

    /// `π(t_w) y` without forming the matrix.
    pub fn t_apply(&self, x: &HModule, w: usize, y: &[Q]) -> Vec<Q> {
        let mut out = y.to_vec();
        for &g in self.weyl.word(w).iter().rev() {
            out = x.t[g].mul_vec(&out);
        }
        out
    }

    pub fn longest_matrix(&self, x: &HModule) -> QMat {
        self.t_elem(x, self.weyl.longest())
    }

    /// `π(t_{s_α})` for every positive root, in `rs.positive` order.
    pub fn reflection_matrices(&self, x: &HModule) -> Vec<QMat> {
        (0..self.rs.positive.len())
            .map(|p| self.t_elem(x, self.weyl.reflection_index(p)))
            .collect()
    }

    /// `ṽ = v − (r/2) Σ_{α>0} c_α α^∨(v) t_{s_α}`.
    pub fn vtilde_matrix(&self, x: &HModule, v: &[Q]) -> QMat {
        let refl = self.reflection_matrices(x);
        self.vtilde_with(x, &refl, v)
    }

    fn vtilde_with(&self, x: &HModule, refl: &[QMat], v: &[Q]) -> QMat {
        let mut m = x.v_matrix(v);
        let half_r = &self.r / qi(2);
        for (p, a) in self.rs.positive.iter().enumerate() {
            let k = &self.rs.params[p] * self.rs.coroot(a, v) * &half_r;
            if !k.is_zero() {
                m.add_scaled(&-k, &refl[p]);
            }
        }
        m
    }

    /// `ε̃_k` for every coordinate of `V`.
    pub fn vtilde_basis(&self, x: &HModule) -> Vec<QMat> {
        let refl = self.reflection_matrices(x);
        (0..self.dim())
            .map(|k| {
                let mut e = vec![Q::zero(); self.dim()];
                e[k] = Q::one();
                self.vtilde_with(x, &refl, &e)
            })
            .collect()
    }

    /// Checks every defining relation exactly.
    pub fn audit(&self, x: &HModule) -> Result<()> {
        let d = x.dim;
        let n = self.dim();
        if x.t.len() != self.rank() || x.v.len() != n {
            return Err(Error::Audit("wrong number of action matrices".into()));
        }
        if x.t.iter().chain(&x.v).any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Audit("action matrix of the wrong size".into()));
        }
        let id = QMat::identity(d);
        let sref = self.rs.simple_reflections();
        for (i, t) in x.t.iter().enumerate() {
            if t.mul(t) != id {
                return Err(Error::Audit(format!("t_{i}² ≠ 1")));
            }
            for j in i + 1..x.t.len() {
                let m = braid_order(&sref[i], &sref[j]);
                if t.mul(&x.t[j]).pow(m) != id {
                    return Err(Error::Audit(format!("braid relation for ({i},{j})")));
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if !x.v[a].commutes_with(&x.v[b]) {
                    return Err(Error::Audit(format!("ε_{a} and ε_{b} do not commute")));
                }
            }
        }
        for (i, alpha) in self.rs.simple.iter().enumerate() {
            let c = self.rs.c(alpha);
            for k in 0..n {
                let (j, sign) = unit_image(&sref[i], k);
                let lhs = x.t[i].mul(&x.v[k]).sub(&x.v[j].mul(&x.t[i]).scale(&qi(sign)));
                let mut e = vec![Q::zero(); n];
                e[k] = Q::one();
                let rhs = &self.r * &c * self.rs.coroot(alpha, &e);
                if lhs != QMat::scalar(d, &rhs) {
                    return Err(Error::Audit(format!("cross relation for s_{i}, ε_{k}")));
                }
            }
        }
        Ok(())
    }

    /// `ℍ ⊗_{ℍ_J} C` where `t_s ↦ eta[s]` (`s ∈ J`) and `v ↦ λ(v)`.
    pub fn induce(
        &self,
        j: &[usize],
        eta: &[i64],
        weight: Vec<Q>,
        label: impl Into<String>,
    ) -> Result<HModule> {
        let rs = &self.rs;
        let wg = &self.weyl;
        if weight.len() != rs.dim || eta.len() != rs.rank {
            return Err(Error::Dimension("weight or sign vector of the wrong length".into()));
        }
        let mut j = j.to_vec();
        j.sort_unstable();
        j.dedup();
        let sref = rs.simple_reflections();
        for &s in &j {
            if s >= rs.rank || eta[s].abs() != 1 {
                return Err(Error::Invalid(format!("bad sign data at simple root {s}")));
            }
            // η_s λ(α_s) = r c_s is forced by the cross relation
            let a = &rs.simple[s];
            let lam: Q = a.iter().zip(&weight).map(|(x, y)| qi(*x) * y).sum();
            if lam * qi(eta[s]) != &self.r * rs.c(a) {
                return Err(Error::Invalid(format!(
                    "λ(α_{s}) is incompatible with the sign at s_{s}"
                )));
            }
            for &t in &j {
                if t > s && braid_order(&sref[s], &sref[t]) % 2 == 1 && eta[s] != eta[t] {
                    return Err(Error::Invalid("signs are not a character of W_J".into()));
                }
            }
        }
        let g: Vec<usize> = (0..rs.rank).map(|i| self.simple_elt(i)).collect();
        let len = |w: usize| wg.length(w);
        let n = wg.order();
        let mut reps: Vec<usize> = (0..n)
            .filter(|&w| j.iter().all(|&s| len(wg.group.mul_idx(w, g[s])) > len(w)))
            .collect();
        reps.sort_by_key(|&w| (len(w), w));
        let pos: HashMap<usize, usize> = reps.iter().enumerate().map(|(b, &w)| (w, b)).collect();
        // w = rep · u with u ∈ W_J, returning (basis index, η(u))
        let decompose = |mut w: usize| -> (usize, i64) {
            let mut sign = 1;
            loop {
                match j.iter().find(|&&s| len(wg.group.mul_idx(w, g[s])) < len(w)) {
                    Some(&s) => {
                        w = wg.group.mul_idx(w, g[s]);
                        sign *= eta[s];
                    }
                    None => return (pos[&w], sign),
                }
            }
        };
        let d = reps.len();
        let mut t = Vec::with_capacity(rs.rank);
        for gi in &g {
            let mut m = QMat::zeros(d, d);
            for (b, &w) in reps.iter().enumerate() {
                let (b2, sign) = decompose(wg.group.mul_idx(*gi, w));
                m[(b2, b)] = qi(sign);
            }
            t.push(m);
        }
        // ε_k t_s t_{w'} x = t_s s(ε_k) t_{w'} x + r c_α α^∨(ε_k) t_{w'} x
        let dim = rs.dim;
        let mut cols: Vec<Vec<Vec<Q>>> = vec![vec![Vec::new(); d]; dim];
        for k in 0..dim {
            let mut c = vec![Q::zero(); d];
            c[0] = weight[k].clone();
            cols[k][0] = c;
        }
        for (b, &w) in reps.iter().enumerate().skip(1) {
            let i0 = wg.word(w)[0];
            let w2 = wg.group.mul_idx(g[i0], w);
            let b2 = pos[&w2];
            let alpha = &rs.simple[i0];
            let c = rs.c(alpha);
            for k in 0..dim {
                let (k2, sign) = unit_image(&sref[i0], k);
                let mut col = t[i0].mul_vec(&cols[k2][b2]);
                if sign < 0 {
                    col.iter_mut().for_each(|x| *x = -x.clone());
                }
                let mut e = vec![0i64; dim];
                e[k] = 1;
                let shift = &self.r * &c * qi(rs.coroot_int(alpha, &e));
                if !shift.is_zero() {
                    col[b2] += shift;
                }
                cols[k][b] = col;
            }
        }
        let v: Vec<QMat> = cols
            .iter()
            .map(|cs| QMat::from_fn(d, d, |r, c| cs[c][r].clone()))
            .collect();
        let mut gen = vec![Q::zero(); d];
        gen[0] = Q::one();
        let x = HModule {
            dim: d,
            t,
            v,
            label: label.into(),
            generator: Some(gen),
            origin: Origin::Induced(Arc::new(Induced {
                j,
                eta: eta.to_vec(),
                weight,
                reps,
            })),
        };
        self.audit(&x)?;
        Ok(x)
    }

    /// `θ(X)`: `v ↦ −w₀(v)`, `t_w ↦ t_{w₀ww₀}`.
    pub fn theta_twist(&self, x: &HModule) -> HModule {
        let w0 = self.weyl.element(self.weyl.longest()).clone();
        let sref = self.rs.simple_reflections();
        let t = sref
            .iter()
            .map(|s| {
                let conj = w0.compose(s).compose(&w0);
                let j = sref.iter().position(|u| *u == conj).expect("w₀ permutes Π");
                x.t[j].clone()
            })
            .collect();
        let v = (0..self.dim())
            .map(|k| {
                let (k2, sign) = unit_image(&w0, k);
                x.v[k2].scale(&qi(-sign))
            })
            .collect();
        HModule {
            dim: x.dim,
            t,
            v,
            label: format!("θ({})", x.label),
            generator: x.generator.clone(),
            origin: Origin::Derived,
        }
    }

    /// Iwahori–Matsumoto dual: `v ↦ −v`, `t_s ↦ −t_s`.
    pub fn im_dual(&self, x: &HModule) -> HModule {
        HModule {
            dim: x.dim,
            t: x.t.iter().map(|m| m.neg()).collect(),
            v: x.v.iter().map(|m| m.neg()).collect(),
            label: format!("IM({})", x.label),
            generator: x.generator.clone(),
            origin: Origin::Derived,
        }
    }

    pub fn direct_sum(&self, x: &HModule, y: &HModule) -> HModule {
        HModule {
            dim: x.dim + y.dim,
            t: x.t.iter().zip(&y.t).map(|(a, b)| a.direct_sum(b)).collect(),
            v: x.v.iter().zip(&y.v).map(|(a, b)| a.direct_sum(b)).collect(),
            label: format!("{} ⊕ {}", x.label, y.label),
            generator: None,
            origin: Origin::Derived,
        }
    }

    /// Weights with multiplicities, sorted.
    pub fn weights(&self, x: &HModule) -> Result<Vec<(Vec<Q>, usize)>> {
        if let Origin::Induced(ind) = &x.origin {
            let mut count: HashMap<Vec<Q>, usize> = HashMap::new();
            for &w in &ind.reps {
                *count
                    .entry(self.weyl.element(w).act(&ind.weight))
                    .or_insert(0) += 1;
            }
            let mut out: Vec<(Vec<Q>, usize)> = count.into_iter().collect();
            out.sort();
            return Ok(out);
        }
        Ok(simultaneous_generalized_eigenspaces(&x.v)?
            .into_iter()
            .map(|(w, s)| (w, s.dim()))
            .collect())
    }

    /// Canonical representative of `Wγ`.
    pub fn orbit_rep(&self, g: &[Q]) -> Vec<Q> {
        let mut v: Vec<Q> = match self.label() {
            RootType::A => g.to_vec(),
            RootType::C => g.iter().map(|x| x.abs()).collect(),
        };
        v.sort();
        v
    }

    pub fn central_character(&self, x: &HModule) -> Result<CentralCharacter> {
        let ws = self.weights(x)?;
        let first = self.orbit_rep(&ws.first().ok_or(Error::NoCentralCharacter)?.0);
        if ws.iter().any(|(w, _)| self.orbit_rep(w) != first) {
            return Err(Error::NoCentralCharacter);
        }
        Ok(CentralCharacter {
            rep: first,
            r: self.r.clone(),
        })
    }

    /// `γ(ω_i)` for the fundamental weights of `Π`, on the `V'` part.
    pub fn fundamental_pairings(&self, g: &[Q]) -> Vec<Q> {
        let n = g.len();
        let total: Q = g.iter().sum();
        let mut partial = Q::zero();
        (0..self.rank())
            .map(|i| {
                partial += &g[i];
                match self.label() {
                    RootType::A => &partial - &total * Q::new((i as i64 + 1).into(), (n as i64).into()),
                    RootType::C => partial.clone(),
                }
            })
            .collect()
    }

    /// Temperedness read off the weights. Type A uses the convention in
    /// which `E({[−1,1]})` at weight `(−1,0,1)` is tempered, i.e. every
    /// `γ(ω_α) ≤ 0`; type C uses `γ(ω_α) ≥ 0`. The two are exchanged by the
    /// Iwahori–Matsumoto involution.
    pub fn is_tempered(&self, x: &HModule) -> Result<bool> {
        let ws = self.weights(x)?;
        Ok(ws.iter().all(|(w, _)| {
            self.fundamental_pairings(w).iter().all(|p| match self.label() {
                RootType::A => !p.is_positive(),
                RootType::C => !p.is_negative(),
            })
        }))
    }

    /// Weight of the generator, if it is a weight vector.
    pub fn generator_weight(&self, x: &HModule) -> Option<Vec<Q>> {
        let g = x.generator.as_ref()?;
        let p = g.iter().position(|c| !c.is_zero())?;
        let mut out = Vec::with_capacity(self.dim());
        for vk in &x.v {
            let img = vk.mul_vec(g);
            let lam = &img[p] / &g[p];
            if img.iter().zip(g).any(|(a, b)| *a != &lam * b) {
                return None;
            }
            out.push(lam);
        }
        Some(out)
    }

    /// Joint eigenspace `{x : π(ε_k)x = μ_k x}`.
    pub fn weight_space(&self, x: &HModule, mu: &[Q]) -> Subspace<Q> {
        let mut m = QMat::zeros(0, x.dim);
        for (vk, c) in x.v.iter().zip(mu) {
            m = m.vstack(&vk.sub(&QMat::scalar(x.dim, c)));
        }
        kernel(&m)
    }

    /// `W`-character of `X` as values `tr π(t_w)` on class representatives.
    pub fn w_character(&self, x: &HModule) -> crate::weyl::ClassFunction {
        let cd = self.weyl.classes().clone();
        let values = cd
            .reps
            .iter()
            .map(|&w| crate::Scalar::from_q(&self.t_elem(x, w).trace()))
            .collect();
        crate::weyl::ClassFunction { classes: cd, values }
    }
}

/// Order of `s t` for two reflections.
fn braid_order(s: &WElt, t: &WElt) -> usize {
    let st = s.compose(t);
    let id = WElt::identity(s.0.len());
    let mut p = st.clone();
    let mut k = 1;
    while p != id {
        p = p.compose(&st);
        k += 1;
    }
    k
}

/// The standard module `E(𝔪) = ℍ_l ⊗ (sign character of weight
/// (a_1, …, b_1, a_2, …, b_n))`, segments in the given order.
pub fn induce_multisegment(alg: &HAlgebra, m: &Multisegment) -> Result<HModule> {
    if alg.label() != RootType::A {
        return Err(Error::Invalid("multisegments need type A".into()));
    }
    if m.rank() != alg.dim() {
        return Err(Error::Dimension(format!(
            "multisegment of rank {} for ℍ_{}",
            m.rank(),
            alg.dim()
        )));
    }
    let mut weight = Vec::with_capacity(alg.dim());
    let mut j = Vec::new();
    for seg in m.segments() {
        let start = weight.len();
        for e in seg.a..=seg.b {
            weight.push(qi(e));
        }
        j.extend(start..weight.len() - 1);
    }
    let eta = vec![-1; alg.rank()];
    alg.induce(&j, &eta, weight, format!("E({m})"))
}

/// Checks the two inequalities defining a standard module for a
/// one-dimensional `ℍ_J`-character of weight `λ`: `λ(α) < 0` off `J`, and
/// on `J` the projection of `λ` to the span of `J` is a non-negative
/// combination of `J`.
pub fn standard_conditions(alg: &HAlgebra, j: &[usize], weight: &[Q]) -> bool {
    let rs = &alg.rs;
    let pair = |a: &[i64], w: &[Q]| -> Q { a.iter().zip(w).map(|(x, y)| qi(*x) * y).sum() };
    for (i, a) in rs.simple.iter().enumerate() {
        if !j.contains(&i) && !pair(a, weight).is_negative() {
            return false;
        }
    }
    if j.is_empty() {
        return true;
    }
    let gram = QMat::from_fn(j.len(), j.len(), |p, q| {
        qi(rs.simple[j[p]]
            .iter()
            .zip(&rs.simple[j[q]])
            .map(|(x, y)| x * y)
            .sum())
    });
    let b: Vec<Q> = j.iter().map(|&i| pair(&rs.simple[i], weight)).collect();
    let inv = gram.inverse().expect("simple roots are independent");
    inv.mul_vec(&b).iter().all(|x| !x.is_negative())
}

/// Standard module of `ℍ_{n,m}` induced from a one-dimensional character
/// of `ℍ_J`. Rejects data violating the standard-module inequalities.
pub fn typec_standard(alg: &HAlgebra, j: &[usize], eta: &[i64], weight: Vec<Q>) -> Result<HModule> {
    if alg.label() != RootType::C {
        return Err(Error::Invalid("typec_standard needs type C".into()));
    }
    if !standard_conditions(alg, j, &weight) {
        return Err(Error::Invalid("weight violates the standard-module inequalities".into()));
    }
    let ws: Vec<String> = weight.iter().map(|x| x.to_string()).collect();
    let signs: Vec<String> = j.iter().map(|&s| format!("{s}:{}", eta[s])).collect();
    let label = format!("C{} J={{{}}} λ=({})", alg.rank(), signs.join(","), ws.join(","));
    alg.induce(j, eta, weight, label)
}
