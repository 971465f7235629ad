//! The skew group ring `A_W = S(V) ⋊ W` and its graded modules: the
//! associated graded `X̄_σ` of an `ℍ`-module generated by a `W`-subspace,
//! Kato's modules `K_σ = A_W ⊗_{C[W]} σ` and `𝐊_σ`, and the operator `D_A`.
//!
//! A graded module is stored on its total space with block matrices: `t_s`
//! is block diagonal and `ε_k` maps degree `i` to degree `i + 1`.

use crate::dirac::{dirac_a_matrix, dirac_cohomology, DiracCohomology, SpinData};
use crate::exactalg::{Echelon, Field};
use crate::hecke::{induce_multisegment, HAlgebra, HModule, Origin};
use crate::segments::{Multisegment, Segment};
use crate::weyl::{ClassFunction, Partition, WElt};
use crate::{Error, QMat, Result, Scalar, Subspace, Q};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;


/// A finite-dimensional graded `A_W`-module.
#[derive(Clone, Debug)]
pub struct AWModule {
    /// `dim X̄ⁱ`.
    pub dims: Vec<usize>,
    pub t: Vec<QMat>,
    pub v: Vec<QMat>,
    pub label: String,
}

fn block(m: &QMat, r0: usize, nr: usize, c0: usize, nc: usize) -> QMat {
    QMat::from_fn(nr, nc, |i, j| m[(r0 + i, c0 + j)].clone())
}

fn order_of(a: &WElt, b: &WElt) -> usize {
    let ab = a.compose(b);
    let id = WElt::identity(ab.0.len());
    let mut p = ab.clone();
    let mut k = 1;
    while p != id {
        p = p.compose(&ab);
        k += 1;
    }
    k
}

impl AWModule {
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Start of each graded piece, followed by the total dimension.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        for d in &self.dims {
            out.push(out.last().unwrap() + d);
        }
        out
    }

    pub fn t_piece(&self, i: usize, s: usize) -> QMat {
        let o = self.offsets();
        block(&self.t[s], o[i], self.dims[i], o[i], self.dims[i])
    }

    /// `ε_k : X̄ⁱ → X̄ⁱ⁺¹`.
    pub fn raise(&self, i: usize, k: usize) -> QMat {
        let o = self.offsets();
        let nr = self.dims.get(i + 1).copied().unwrap_or(0);
        if nr == 0 {
            return QMat::zeros(0, self.dims[i]);
        }
        block(&self.v[k], o[i + 1], nr, o[i], self.dims[i])
    }

    /// Grading, `W`-relations, commutativity of `S(V)` and
    /// `t_s ε_k t_s = s(ε_k)`.
    pub fn audit(&self, alg: &HAlgebra) -> Result<()> {
        let n = self.dim();
        let deg: Vec<usize> = (0..self.dims.len())
            .flat_map(|i| std::iter::repeat_n(i, self.dims[i]))
            .collect();
        let fail = |m: &str| Err(Error::Audit(format!("{}: {m}", self.label)));
        if self.t.len() != alg.rank() || self.v.len() != alg.dim() {
            return fail("wrong number of generators");
        }
        if self.t.iter().chain(&self.v).any(|m| m.rows() != n || m.cols() != n) {
            return fail("matrix size");
        }
        for i in 0..n {
            for j in 0..n {
                if self.t.iter().any(|t| !t[(i, j)].is_zero() && deg[i] != deg[j]) {
                    return fail("t does not preserve degree");
                }
                if self.v.iter().any(|v| !v[(i, j)].is_zero() && deg[i] != deg[j] + 1) {
                    return fail("v does not raise degree by one");
                }
            }
        }
        let id = QMat::identity(n);
        let sref = alg.rs.simple_reflections();
        for (i, ti) in self.t.iter().enumerate() {
            if ti.mul(ti) != id {
                return fail("t_s² ≠ 1");
            }
            for (j, tj) in self.t.iter().enumerate().skip(i + 1) {
                let m = order_of(&sref[i], &sref[j]);
                if ti.mul(tj).pow(m) != id {
                    return fail("braid relation");
                }
            }
        }
        for (a, va) in self.v.iter().enumerate() {
            for vb in &self.v[a + 1..] {
                if !va.commutes_with(vb) {
                    return fail("S(V) is not commutative");
                }
            }
        }
        for (s, ts) in self.t.iter().enumerate() {
            for k in 0..self.v.len() {
                let mut e = vec![Q::zero(); self.v.len()];
                e[k] = Q::one();
                let img = sref[s].act(&e);
                let mut rhs = QMat::zeros(n, n);
                for (c, vj) in img.iter().zip(&self.v) {
                    if !c.is_zero() {
                        rhs.add_scaled(c, vj);
                    }
                }
                if ts.mul(&self.v[k]).mul(ts) != rhs {
                    return fail("t_s ε t_s ≠ s(ε)");
                }
            }
        }
        Ok(())
    }

    /// `W`-character of each graded piece.
    pub fn graded_characters(&self, alg: &HAlgebra) -> Vec<ClassFunction> {
        (0..self.dims.len())
            .map(|i| {
                let ts: Vec<QMat> = (0..alg.rank()).map(|s| self.t_piece(i, s)).collect();
                rep_character(alg, &ts, self.dims[i])
            })
            .collect()
    }

    /// The underlying `W`-module with the raising maps in place of `ε_k`.
    pub fn as_hmodule(&self) -> HModule {
        HModule {
            dim: self.dim(),
            t: self.t.clone(),
            v: self.v.clone(),
            label: self.label.clone(),
            generator: None,
            origin: Origin::Derived,
        }
    }
}

/// `W`-character of the representation with simple reflections `t`.
pub fn rep_character(alg: &HAlgebra, t: &[QMat], dim: usize) -> ClassFunction {
    let wg = &alg.weyl;
    let values = wg
        .classes()
        .reps
        .iter()
        .map(|&w| {
            let mut m = QMat::identity(dim);
            for &g in wg.word(w) {
                m = m.mul(&t[g]);
            }
            Scalar::from_q(&m.trace())
        })
        .collect();
    ClassFunction {
        classes: wg.classes().clone(),
        values,
    }
}

/// Rational value of a class function at every group element.
fn values_by_element(alg: &HAlgebra, chi: &ClassFunction) -> Result<Vec<Q>> {
    let g = &alg.weyl.group;
    (0..g.order())
        .map(|w| {
            chi.values[g.class_of(w)]
                .as_q()
                .ok_or_else(|| Error::Invalid("character value is not rational".into()))
        })
        .collect()
}

/// `t_{w⁻¹} y` for every `w`, by breadth-first search along the words.
fn inverse_orbit(alg: &HAlgebra, t: &[QMat], y: &[Q]) -> Vec<Vec<Q>> {
    let g = &alg.weyl.group;
    let mut out: Vec<Vec<Q>> = vec![Vec::new(); g.order()];
    out[0] = y.to_vec();
    for w in 1..g.order() {
        let word = g.word(w);
        let s = *word.last().expect("non-identity");
        let parent = g.mul_idx(w, g.generators()[s]);
        out[w] = t[s].mul_vec(&out[parent]);
    }
    out
}

/// `χ`-isotypic component of the representation `t`, through the
/// projection `(χ(1)/|W|) Σ_w χ(w⁻¹) t_w`.
pub fn isotypic_subspace(alg: &HAlgebra, t: &[QMat], dim: usize, chi: &ClassFunction) -> Result<Subspace<Q>> {
    let own = rep_character(alg, t, dim);
    let target = own.multiplicity(chi)? * degree(chi);
    let phi = values_by_element(alg, chi)?;
    let mut ech = Echelon::new(dim);
    for j in 0..dim {
        if ech.dim() == target {
            break;
        }
        let mut e = vec![Q::zero(); dim];
        e[j] = Q::one();
        let orbit = inverse_orbit(alg, t, &e);
        let mut p = vec![Q::zero(); dim];
        for (c, y) in phi.iter().zip(&orbit) {
            if c.is_zero() {
                continue;
            }
            for (a, b) in p.iter_mut().zip(y) {
                a.add_mul_assign(c, b);
            }
        }
        ech.insert(&p);
    }
    if ech.dim() != target {
        return Err(Error::Certificate("isotypic projection has the wrong rank".into()));
    }
    Ok(ech.to_subspace())
}

fn degree(chi: &ClassFunction) -> usize {
    chi.degree().as_integer().expect("integral degree") as usize
}

/// An irreducible representation of `W` by matrices of simple reflections.
#[derive(Clone, Debug)]
pub struct WRep {
    pub t: Vec<QMat>,
    pub character: ClassFunction,
    pub label: String,
}

impl WRep {
    pub fn dim(&self) -> usize {
        degree(&self.character)
    }

    /// The `χ`-isotypic component of `t`, which must occur exactly once.
    pub fn from_isotypic(alg: &HAlgebra, t: &[QMat], dim: usize, chi: &ClassFunction, label: &str) -> Result<Self> {
        let sub = isotypic_subspace(alg, t, dim, chi)?;
        if sub.dim() != degree(chi) {
            return Err(Error::Invalid(format!("{label} does not occur exactly once")));
        }
        let t = t.iter().map(|m| sub.restrict(m)).collect::<Result<Vec<_>>>()?;
        Ok(WRep {
            t,
            character: chi.clone(),
            label: label.to_string(),
        })
    }

    /// `σ_ρ` of `S_l`, cut out of `Ind_{S_{ρ^T}} sgn` where it has
    /// multiplicity one.
    pub fn type_a(alg: &HAlgebra, rho: &Partition) -> Result<Self> {
        let mut segs = Vec::new();
        let mut a = 0i64;
        for &len in rho.transpose().parts() {
            segs.push(Segment::new(a, a + len as i64 - 1)?);
            a += 2 * len as i64 + 1;
        }
        let x = induce_multisegment(alg, &Multisegment::new(segs))?;
        let chi = alg.weyl.sym_irreducible(rho);
        Self::from_isotypic(alg, &x.t, x.dim, &chi, &format!("σ{}", fmt_partition(rho)))
    }

    /// `σ(w)` for every element, indexed as in the Weyl group.
    fn all_matrices(&self, alg: &HAlgebra) -> Vec<QMat> {
        let g = &alg.weyl.group;
        let mut out = vec![QMat::identity(self.dim()); g.order()];
        for w in 1..g.order() {
            let word = g.word(w);
            let s = *word.last().expect("non-identity");
            let parent = g.mul_idx(w, g.generators()[s]);
            out[w] = out[parent].mul(&self.t[s]);
        }
        out
    }
}

pub fn fmt_partition(p: &Partition) -> String {
    let s: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

/// The lowest `W`-type `σ_{λ^T}` of a tempered `E(𝔪)`, `λ` the partition
/// of segment lengths.
pub fn lowest_w_type(m: &Multisegment) -> Partition {
    Partition::new(m.segments().iter().map(|s| s.len()).collect()).transpose()
}

/// Characters `σ_ν` with `σ_ν ≤ σ_ρ`: the Springer correspondence of this
/// setting sends the orbit of Jordan type `μ` to `σ_{μ^T}`, so the closure
/// order becomes `ν ⊵ ρ`.
pub fn dominance_lower(alg: &HAlgebra, rho: &Partition) -> Vec<ClassFunction> {
    crate::weyl::partition::partitions(rho.size())
        .into_iter()
        .filter(|nu| nu.dominates(rho))
        .map(|nu| alg.weyl.sym_irreducible(&nu))
        .collect()
}

/// Associated graded of `x` for the filtration `F_i = S^{≤i}(V)·σ`.
pub fn assoc_graded(alg: &HAlgebra, x: &HModule, sigma: &Subspace<Q>) -> Result<AWModule> {
    for t in &x.t {
        if sigma.restrict(t).is_err() {
            return Err(Error::Invalid("σ is not W-stable".into()));
        }
    }
    let mut ech = Echelon::new(x.dim);
    let mut layers: Vec<Vec<Vec<Q>>> = Vec::new();
    let mut frontier = Vec::new();
    for b in sigma.basis_vectors() {
        if let Some(r) = ech.insert(&b) {
            frontier.push(r.to_vec());
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for v in &x.v {
                if let Some(r) = ech.insert(&v.mul_vec(f)) {
                    next.push(r.to_vec());
                }
            }
        }
        layers.push(std::mem::replace(&mut frontier, next));
    }
    if ech.dim() != x.dim {
        return Err(Error::Invalid(format!(
            "not a choice of deformation: σ generates {} of {}",
            ech.dim(),
            x.dim
        )));
    }
    let cols: Vec<Vec<Q>> = layers.iter().flatten().cloned().collect();
    let p = QMat::from_fn(x.dim, x.dim, |i, j| cols[j][i].clone());
    let pinv = p.inverse().expect("adapted basis");
    let dims: Vec<usize> = layers.iter().map(|l| l.len()).collect();
    let mut deg = Vec::new();
    for (i, d) in dims.iter().enumerate() {
        deg.extend(std::iter::repeat_n(i, *d));
    }
    let keep = |m: &QMat, shift: usize| -> QMat {
        let c = pinv.mul(m).mul(&p);
        QMat::from_fn(x.dim, x.dim, |i, j| {
            if deg[i] == deg[j] + shift {
                c[(i, j)].clone()
            } else {
                Q::zero()
            }
        })
    };
    let out = AWModule {
        dims,
        t: x.t.iter().map(|t| keep(t, 0)).collect(),
        v: x.v.iter().map(|v| keep(v, 1)).collect(),
        label: format!("gr {}", x.label),
    };
    out.audit(alg)?;
    Ok(out)
}

/// `X̄_σ` for `σ` the `χ`-isotypic component of `x`.
pub fn deformation(alg: &HAlgebra, x: &HModule, chi: &ClassFunction) -> Result<AWModule> {
    let sub = isotypic_subspace(alg, &x.t, x.dim, chi)?;
    assoc_graded(alg, x, &sub)
}

/// A choice of deformation for an arbitrary module: the smallest isotypic
/// component that generates `x`, or all of `x` when none does.
pub fn choose_deformation(alg: &HAlgebra, x: &HModule) -> Result<(Option<usize>, AWModule)> {
    let table = alg.weyl.char_table()?;
    let own = rep_character(alg, &x.t, x.dim);
    let mut cands: Vec<(usize, usize)> = Vec::new();
    for (i, chi) in table.iter().enumerate() {
        let m = own.multiplicity(chi)?;
        if m > 0 {
            cands.push((m * degree(chi), i));
        }
    }
    cands.sort();
    for (_, i) in cands {
        if let Ok(m) = deformation(alg, x, &table[i]) {
            return Ok((Some(i), m));
        }
    }
    Ok((None, assoc_graded(alg, x, &Subspace::full(x.dim))?))
}

/// Monomials of one degree in `dim V` variables.
struct Monomials {
    list: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Monomials {
    fn new(nvars: usize, d: u32) -> Self {
        let mut list = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if k + 1 == cur.len() {
                cur[k] = left;
                out.push(cur.clone());
                return;
            }
            for e in (0..=left).rev() {
                cur[k] = e;
                rec(k + 1, left - e, cur, out);
            }
        }
        if nvars > 0 {
            rec(0, d, &mut cur, &mut list);
        }
        let index = list.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Monomials { list, index }
    }

    fn len(&self) -> usize {
        self.list.len()
    }
}

/// `w · x^e = ± x^{e'}`.
fn act_monomial(w: &WElt, e: &[u32]) -> (Vec<u32>, bool) {
    let mut out = vec![0u32; e.len()];
    let mut neg = false;
    for (i, &x) in w.0.iter().enumerate() {
        let j = (x.unsigned_abs() - 1) as usize;
        out[j] = e[i];
        if x < 0 && e[i] % 2 == 1 {
            neg = !neg;
        }
    }
    (out, neg)
}

/// `S^d(V) ⊗ σ` with basis `x^e ⊗ u_a` at `index(e)·dim σ + a`.
struct FreePiece<'a> {
    mons: Monomials,
    ds: usize,
    sigma_w: &'a [QMat],
}

impl FreePiece<'_> {
    fn dim(&self) -> usize {
        self.mons.len() * self.ds
    }

    fn act(&self, w: &WElt, widx: usize, y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        let sw = &self.sigma_w[widx];
        for (mi, e) in self.mons.list.iter().enumerate() {
            let blk = &y[mi * self.ds..(mi + 1) * self.ds];
            if blk.iter().all(|c| c.is_zero()) {
                continue;
            }
            let (e2, neg) = act_monomial(w, e);
            let mj = self.mons.index[&e2];
            let img = sw.mul_vec(blk);
            for (a, c) in img.into_iter().enumerate() {
                let slot = &mut out[mj * self.ds + a];
                if neg {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
        out
    }

    /// `x_k · y` into the next degree.
    fn raise(&self, next: &FreePiece, k: usize, y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); next.dim()];
        for (mi, e) in self.mons.list.iter().enumerate() {
            let mut e2 = e.clone();
            e2[k] += 1;
            let mj = next.mons.index[&e2];
            for a in 0..self.ds {
                out[mj * self.ds + a] = y[mi * self.ds + a].clone();
            }
        }
        out
    }
}

/// `K_σ` truncated at degree `N`, or its quotient `𝐊_σ`.
#[derive(Clone, Debug)]
pub struct KatoModule {
    pub sigma: String,
    pub module: AWModule,
    pub truncation: usize,
    /// The quotient reached a zero graded piece at or below the truncation.
    pub stabilized: bool,
}

impl KatoModule {
    pub fn graded_dims(&self) -> &[usize] {
        &self.module.dims
    }

    pub fn total_dim(&self) -> usize {
        self.module.dim()
    }
}

/// Graded dims of `K_σ` through degree `n`: `dim σ · dim S^i(V)`.
pub fn kato_free(alg: &HAlgebra, sigma: &WRep, n: usize) -> Result<KatoModule> {
    kato_build(alg, sigma, None, n)
}

/// `𝐊_σ = K_σ / Σ im f` over graded maps of positive degree from `K_τ`,
/// `τ ∈ lower`. Such a map is fixed by the image of `τ`, any `W`-map
/// `τ → S^d(V) ⊗ σ`, so the images together generate the submodule spanned
/// by the `τ`-isotypic parts of positive degree.
pub fn big_kato(alg: &HAlgebra, sigma: &WRep, lower: &[ClassFunction], n: usize) -> Result<KatoModule> {
    kato_build(alg, sigma, Some(lower), n)
}

/// Truncation at which `𝐊_σ` always stabilizes: its pieces vanish above
/// the top degree of the coinvariants.
pub fn default_truncation(alg: &HAlgebra) -> usize {
    alg.rs.positive.len() + 1
}

fn kato_build(alg: &HAlgebra, sigma: &WRep, lower: Option<&[ClassFunction]>, n: usize) -> Result<KatoModule> {
    let g = &alg.weyl.group;
    let order = Q::from_integer((g.order() as i64).into());
    let sigma_w = sigma.all_matrices(alg);
    let ds = sigma.dim();
    let nv = alg.dim();
    // φ(w) = Σ_τ τ(1) τ(w⁻¹) / |W|
    let phi: Option<Vec<Q>> = match lower {
        None => None,
        Some(taus) => {
            let mut acc = vec![Q::zero(); g.order()];
            for tau in taus {
                let d = Q::from_integer((degree(tau) as i64).into());
                for (a, v) in acc.iter_mut().zip(values_by_element(alg, tau)?) {
                    *a += &d * v / &order;
                }
            }
            let inv: Vec<Q> = (0..g.order()).map(|w| acc[g.inverse(w)].clone()).collect();
            Some(inv)
        }
    };
    let elems: Vec<WElt> = (0..g.order()).map(|w| alg.weyl.element(w).clone()).collect();
    let mut pieces: Vec<FreePiece> = Vec::new();
    let mut subs: Vec<Echelon<Q>> = Vec::new();
    let mut stabilized = false;
    for d in 0..=n {
        let piece = FreePiece {
            mons: Monomials::new(nv, d as u32),
            ds,
            sigma_w: &sigma_w,
        };
        let mut ech = Echelon::new(piece.dim());
        if let (Some(phi), true) = (&phi, d > 0) {
            let prev = pieces.last().expect("previous degree");
            for row in subs.last().expect("previous degree").rows() {
                for k in 0..nv {
                    if ech.dim() == piece.dim() {
                        break;
                    }
                    ech.insert(&prev.raise(&piece, k, row));
                }
            }
            for j in 0..piece.dim() {
                if ech.dim() == piece.dim() {
                    break;
                }
                let mut e = vec![Q::zero(); piece.dim()];
                e[j] = Q::one();
                let mut p = vec![Q::zero(); piece.dim()];
                for (w, c) in phi.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (a, b) in p.iter_mut().zip(piece.act(&elems[w], w, &e)) {
                        if !b.is_zero() {
                            *a += c * b;
                        }
                    }
                }
                ech.insert(&p);
            }
        }
        let full = ech.dim() == piece.dim();
        pieces.push(piece);
        subs.push(ech);
        if full {
            stabilized = true;
            break;
        }
    }
    // quotient coordinates are the non-pivot positions after reduction
    let free: Vec<Vec<usize>> = pieces
        .iter()
        .zip(&subs)
        .map(|(p, e)| (0..p.dim()).filter(|c| !e.pivots().contains(c)).collect())
        .collect();
    let mut dims: Vec<usize> = free.iter().map(|f| f.len()).collect();
    while dims.last() == Some(&0) {
        dims.pop();
    }
    let total: usize = dims.iter().sum();
    let mut off = vec![0];
    for d in &dims {
        off.push(off.last().unwrap() + d);
    }
    let sref = alg.rs.simple_reflections();
    let sidx: Vec<usize> = g.generators().to_vec();
    let mut t = vec![QMat::zeros(total, total); alg.rank()];
    let mut v = vec![QMat::zeros(total, total); nv];
    for deg in 0..dims.len() {
        let piece = &pieces[deg];
        for (jj, &c) in free[deg].iter().enumerate() {
            let mut e = vec![Q::zero(); piece.dim()];
            e[c] = Q::one();
            for (s, w) in sref.iter().enumerate() {
                let mut img = piece.act(w, sidx[s], &e);
                subs[deg].reduce(&mut img);
                for (ii, &r) in free[deg].iter().enumerate() {
                    t[s][(off[deg] + ii, off[deg] + jj)] = img[r].clone();
                }
            }
            if deg + 1 < dims.len() {
                for (k, vk) in v.iter_mut().enumerate() {
                    let mut img = piece.raise(&pieces[deg + 1], k, &e);
                    subs[deg + 1].reduce(&mut img);
                    for (ii, &r) in free[deg + 1].iter().enumerate() {
                        vk[(off[deg + 1] + ii, off[deg] + jj)] = img[r].clone();
                    }
                }
            }
        }
    }
    let name = if lower.is_some() { "𝐊" } else { "K" };
    let module = AWModule {
        dims,
        t,
        v,
        label: format!("{name}_{}", sigma.label),
    };
    Ok(KatoModule {
        sigma: sigma.label.clone(),
        module,
        truncation: n,
        stabilized: stabilized && lower.is_some(),
    })
}

/// `H_{D_A}` of a finite-dimensional graded module, after checking
/// `D_A² = −Σ ε_i² ⊗ 1`.
pub fn dirac_a_cohomology(alg: &HAlgebra, spin: &SpinData, m: &AWModule) -> Result<DiracCohomology> {
    let x = m.as_hmodule();
    let dc = dirac_a_matrix(alg, spin, &x);
    if !dc.d_a_squared_audit() {
        return Err(Error::Audit(format!("D_A² formula fails on {}", m.label)));
    }
    dirac_cohomology(&dc)
}

/// Comparison of `Ē_σ` with `𝐊_σ` and of `H_{D_A}(Ē_σ)` with `H_D(E)`.
#[derive(Clone, Debug, Serialize)]
pub struct KatoComparison {
    pub multisegment: String,
    pub sigma: String,
    pub graded_dims_e: Vec<usize>,
    pub graded_dims_k: Vec<usize>,
    pub graded_characters_match: bool,
    pub hda_dim: usize,
    pub hd_dim: usize,
    pub characters_match: bool,
}

impl KatoComparison {
    pub fn pass(&self) -> bool {
        self.graded_dims_e == self.graded_dims_k && self.graded_characters_match && self.characters_match
    }
}

/// For tempered `E(𝔪)` in type A: builds `Ē_σ` at its lowest `W`-type,
/// `𝐊_σ` under the dominance order, and compares them and their Dirac
/// cohomology with `H_D(E)`.
pub fn compare_kato(alg: &HAlgebra, spin: &SpinData, m: &Multisegment) -> Result<KatoComparison> {
    let x = induce_multisegment(alg, m)?;
    let rho = lowest_w_type(m);
    let sigma = WRep::type_a(alg, &rho)?;
    let e_bar = deformation(alg, &x, &sigma.character)?;
    let k = big_kato(alg, &sigma, &dominance_lower(alg, &rho), default_truncation(alg))?;
    if !k.stabilized {
        return Err(Error::Certificate(format!("{} did not stabilize", k.module.label)));
    }
    let ce = e_bar.graded_characters(alg);
    let ck = k.module.graded_characters(alg);
    let hda = dirac_a_cohomology(alg, spin, &e_bar)?;
    let hd = dirac_cohomology(&crate::dirac::dirac_matrix(alg, spin, &x)?)?;
    Ok(KatoComparison {
        multisegment: m.to_string(),
        sigma: sigma.label,
        graded_dims_e: e_bar.dims.clone(),
        graded_dims_k: k.module.dims.clone(),
        graded_characters_match: ce == ck,
        hda_dim: hda.dim,
        hd_dim: hd.dim,
        characters_match: hda.character == hd.character,
    })
}
