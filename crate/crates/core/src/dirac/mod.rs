//! The Dirac element `D = Σ ε̃_k ⊗ g̃_{pr ε_k}` acting on `X ⊗ 𝒮`, Dirac
//! cohomology with its `W̃`-character, the graded parts and the Dirac index.
//!
//! Everything is computed on the ambient Clifford module of
//! [`AmbientSpin`], which is `S` when `dim V'` is even and `S⁺ ⊕ S⁻` when it
//! is odd. In the odd case the central element `z` splits every result into
//! its `S⁺` and `S⁻` pieces.

use crate::clifford::{spin_char_table, AmbientSpin, SpinCharTable, SpinCover};
use crate::exactalg::{image, kernel, modp, qi, subspace_intersect, Field};
use crate::hecke::{GradedModule, Grading, HAlgebra, HModule};
use crate::weyl::{ClassData, ClassFunction, RootSystem, RootType};
use crate::{Error, GMat, GaussRat, QMat, Result, Scalar, Subspace, Q};
use num_traits::{One, Zero};
use serde::Serialize;
use std::sync::Arc;

#[cfg(test)]
mod tests;

fn to_g(m: &QMat) -> GMat {
    m.map(|x| GaussRat::real(x.clone()))
}

/// The root system with `c_α` replaced by `2c_α / ⟨α, α⟩`.
///
/// This is the normalization in which the `D²` formula and the `a`-values
/// hold for the cross relation `t_s v − s(v) t_s = r c_α α^∨(v)`; it only
/// changes long roots of type C, halving their parameter.
pub fn formula_root_system(rs: &RootSystem) -> RootSystem {
    let mut out = rs.clone();
    for (c, a) in out.params.iter_mut().zip(&rs.positive) {
        *c = &*c * Q::new(2.into(), rs.norm2(a).into());
    }
    out
}

/// `W̃` class representative `w̃` with `Δ(w̃) = t_w ⊗ pre · integral`.
struct ClassRep {
    w: usize,
    pre: Scalar,
    integral: GMat,
    z_integral: Option<GMat>,
}

/// Spin data of one algebra, shared read-only by all its modules.
pub struct SpinData {
    pub amb: AmbientSpin,
    pub cover: SpinCover,
    pub table: SpinCharTable,
    reps: Vec<ClassRep>,
}

impl SpinData {
    pub fn new(alg: &HAlgebra) -> Result<Self> {
        let amb = AmbientSpin::new(&alg.rs)?;
        let cover = SpinCover::new(&formula_root_system(&alg.rs))?;
        let table = spin_char_table(&cover)?;
        let reps = cover
            .classes()
            .reps
            .iter()
            .map(|&i| {
                let (cl, w) = cover.group.element(i);
                let integral = amb.integral_matrix(cl);
                ClassRep {
                    w: alg.weyl.index_of(w),
                    pre: cl.prefactor(),
                    z_integral: amb.z.as_ref().map(|(z, _)| z.mul(&integral)),
                    integral,
                }
            })
            .collect();
        Ok(SpinData {
            amb,
            cover,
            table,
            reps,
        })
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        self.cover.classes()
    }

    fn class_fn(&self, values: Vec<Scalar>) -> ClassFunction {
        ClassFunction {
            classes: self.classes().clone(),
            values,
        }
    }

    /// Character of `W̃` on the ambient spin module.
    pub fn ambient_character(&self) -> ClassFunction {
        self.class_fn(
            self.reps
                .iter()
                .map(|r| r.pre.mul_ref(&Scalar::from_gauss(r.integral.trace())))
                .collect(),
        )
    }

    /// Decomposes a virtual genuine character into irreducibles.
    pub fn decompose_virtual(&self, chi: &ClassFunction) -> Result<Vec<(usize, i64)>> {
        let mut out = Vec::new();
        for (i, c) in self.table.chars.iter().enumerate() {
            let v = chi.inner(c)?;
            let m = v
                .as_integer()
                .ok_or_else(|| Error::Certificate(format!("non-integral multiplicity {v}")))?;
            if m != 0 {
                out.push((i, m));
            }
        }
        Ok(out)
    }

    /// `"σ̃(3,1)"`-style description of a decomposition.
    pub fn describe(&self, parts: &[(usize, i64)]) -> String {
        if parts.is_empty() {
            return "0".into();
        }
        parts
            .iter()
            .map(|&(i, m)| match m {
                1 => self.table.describe(i),
                -1 => format!("-{}", self.table.describe(i)),
                _ => format!("{m}·{}", self.table.describe(i)),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `(T ⊗ R) v` with `v` indexed by `x·s + a`.
fn apply_kron(t: &QMat, r: &GMat, v: &[GaussRat]) -> Vec<GaussRat> {
    let s = r.rows();
    let d = t.rows();
    let blocks: Vec<Vec<GaussRat>> = (0..d).map(|j| r.mul_vec(&v[j * s..(j + 1) * s])).collect();
    let mut out = vec![GaussRat::zero(); d * s];
    for i in 0..d {
        for (j, bj) in blocks.iter().enumerate() {
            let c = &t[(i, j)];
            if c.is_zero() || bj.iter().all(|x| x.is_zero()) {
                continue;
            }
            let c = GaussRat::real(c.clone());
            for (o, b) in out[i * s..(i + 1) * s].iter_mut().zip(bj) {
                o.add_mul_assign(&c, b);
            }
        }
    }
    out
}

/// Trace of `T ⊗ R` on an invariant subspace, read off the echelon basis.
fn trace_on(sub: &Subspace<GaussRat>, t: &QMat, r: &GMat) -> GaussRat {
    let mut tr = GaussRat::zero();
    for (i, &p) in sub.pivots().iter().enumerate() {
        let img = apply_kron(t, r, sub.basis().row(i));
        tr.add_assign_ref(&img[p]);
    }
    tr
}

/// `D` on `X ⊗ 𝒮` together with the data it was built from.
pub struct DiracContext<'a> {
    pub alg: &'a HAlgebra,
    pub spin: &'a SpinData,
    pub x: HModule,
    /// `ε̃_k`.
    pub vt: Vec<QMat>,
    pub d: GMat,
}

/// Builds `D` after auditing the module relations.
pub fn dirac_matrix<'a>(alg: &'a HAlgebra, spin: &'a SpinData, x: &HModule) -> Result<DiracContext<'a>> {
    alg.audit(x)?;
    let vt = alg.vtilde_basis(x);
    let s = spin.amb.module_dim();
    let n = x.dim * s;
    let mut d = GMat::zeros(n, n);
    for (v, g) in vt.iter().zip(&spin.amb.g) {
        if !v.is_zero() {
            d = d.add(&to_g(v).kron(g));
        }
    }
    Ok(DiracContext {
        alg,
        spin,
        x: x.clone(),
        vt,
        d,
    })
}

/// `D_A = Σ ε_k ⊗ g̃_{pr ε_k}` for an `A_W`-module stored as an [`HModule`]
/// whose `v` are the degree-raising maps. The `ℍ` relations are not audited
/// since `x` is not an `ℍ`-module.
pub fn dirac_a_matrix<'a>(alg: &'a HAlgebra, spin: &'a SpinData, x: &HModule) -> DiracContext<'a> {
    let s = spin.amb.module_dim();
    let n = x.dim * s;
    let mut d = GMat::zeros(n, n);
    for (v, g) in x.v.iter().zip(&spin.amb.g) {
        if !v.is_zero() {
            d = d.add(&to_g(v).kron(g));
        }
    }
    DiracContext {
        alg,
        spin,
        x: x.clone(),
        vt: x.v.clone(),
        d,
    }
}

impl DiracContext<'_> {
    /// `dim X ⊗ 𝒮`.
    pub fn dim(&self) -> usize {
        self.d.rows()
    }

    /// `Δ(s̃_α)` for a simple root, without the `2^{-1/2}` prefactor.
    pub fn delta_simple(&self, i: usize) -> GMat {
        let (cl, _) = crate::clifford::stilde_elt(&self.alg.rs, &self.alg.rs.simple[i]);
        to_g(&self.x.t[i]).kron(&self.spin.amb.integral_matrix(&cl))
    }

    /// `Δ(s̃_α) D = −D Δ(s̃_α)` for every simple root.
    pub fn anticommutes(&self) -> bool {
        (0..self.alg.rank()).all(|i| {
            let a = self.delta_simple(i);
            a.mul(&self.d).add(&self.d.mul(&a)).is_zero()
        })
    }

    /// Right-hand side of the `D²` formula:
    /// `−Σ ε_i² ⊗ 1 − ¼ r² Σ c_α c_β t_{s_α} t_{s_β} ⊗ g̃_α g̃_β` over pairs of
    /// positive roots with `s_α(β) < 0`, the first sum over an orthonormal
    /// basis of `V'` and `c` as in [`formula_root_system`]. The first term
    /// uses the untilded `ε_i`; with `ε̃_i` the identity fails.
    pub fn d_squared_rhs(&self) -> GMat {
        self.d_squared_rhs_with(false)
    }

    /// The same with `ε̃_i²` in the first term.
    pub fn d_squared_rhs_tilde(&self) -> GMat {
        self.d_squared_rhs_with(true)
    }

    fn d_squared_rhs_with(&self, tilde: bool) -> GMat {
        let (cas, pairs) = self.d_squared_parts(tilde);
        let r = &self.alg.r;
        cas.add(&pairs.scale(&GaussRat::real(-(r * r) / qi(4))))
    }

    /// `(−Σ ε_i² ⊗ 1, Σ c_α c_β t_{s_α} t_{s_β} ⊗ g̃_α g̃_β)`.
    pub(crate) fn d_squared_parts(&self, tilde: bool) -> (GMat, GMat) {
        let eps = if tilde { &self.vt } else { &self.x.v };
        let alg = self.alg;
        let rs = &formula_root_system(&alg.rs);
        let dim = alg.dim();
        let s = self.spin.amb.module_dim();
        let dx = self.x.dim;
        let proj = |k: usize, k2: usize| -> Q {
            let e = if k == k2 { Q::one() } else { Q::zero() };
            match rs.label {
                RootType::A => e - Q::new(1.into(), (dim as i64).into()),
                RootType::C => e,
            }
        };
        let mut cas = QMat::zeros(dx, dx);
        for k in 0..dim {
            for k2 in 0..dim {
                let p = proj(k, k2);
                if !p.is_zero() {
                    cas.add_scaled(&p, &eps[k].mul(&eps[k2]));
                }
            }
        }
        let first = to_g(&cas.neg()).kron(&GMat::identity(s));
        let mut out = GMat::zeros(first.rows(), first.cols());
        let gammas = &self.spin.amb.gammas;
        let groot = |a: &[i64]| -> GMat {
            let mut m = GMat::zeros(s, s);
            for (c, g) in a.iter().zip(gammas) {
                if *c != 0 {
                    m.add_scaled(&GaussRat::from_int(*c), g);
                }
            }
            m
        };
        let refl = alg.reflection_matrices(&self.x);
        for (ia, a) in rs.positive.iter().enumerate() {
            let sa = rs.reflection(a);
            for (ib, b) in rs.positive.iter().enumerate() {
                let img = sa.act_int(b);
                if img.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0) {
                    continue;
                }
                let coef = &rs.params[ia] * &rs.params[ib];
                let t = refl[ia].mul(&refl[ib]).scale(&coef);
                out = out.add(&to_g(&t).kron(&groot(a).mul(&groot(b))));
            }
        }
        (first, out)
    }

    /// `D·D` equals [`Self::d_squared_rhs`] exactly.
    pub fn d_squared_audit(&self) -> bool {
        self.d.mul(&self.d) == self.d_squared_rhs()
    }

    /// `D_A² = −Σ ε_i² ⊗ 1`, the identity for the skew group ring where the
    /// parameters vanish.
    pub fn d_a_squared_audit(&self) -> bool {
        self.d.mul(&self.d) == self.d_squared_parts(false).0
    }

    /// `(J ⊗ 1) D = −D (J ⊗ 1)`.
    pub fn anticommutes_with_grading(&self, g: &Grading) -> bool {
        let j = to_g(&g.j).kron(&GMat::identity(self.spin.amb.module_dim()));
        j.mul(&self.d).add(&self.d.mul(&j)).is_zero()
    }
}

/// `H_D = ker D / (ker D ∩ im D)` with its `W̃`-character.
#[derive(Clone, Debug)]
pub struct DiracCohomology {
    /// Dimension on the ambient module.
    pub dim: usize,
    pub ker: Subspace<GaussRat>,
    pub ker_im: Subspace<GaussRat>,
    pub character: ClassFunction,
    /// Characters on `X ⊗ S⁺` and `X ⊗ S⁻` when `dim V'` is odd.
    pub split: Option<(ClassFunction, ClassFunction)>,
    /// True when `D` was certified invertible modulo a prime.
    pub certified_zero: bool,
}

fn degree_usize(c: &ClassFunction) -> usize {
    c.degree().as_integer().expect("integral degree") as usize
}

impl DiracCohomology {
    /// The character on `X ⊗ S`, reading `S = S⁺` when `dim V'` is odd.
    pub fn character_s(&self) -> &ClassFunction {
        self.split.as_ref().map_or(&self.character, |s| &s.0)
    }

    pub fn dim_s(&self) -> usize {
        degree_usize(self.character_s())
    }

    /// `(dim H_D(X ⊗ S⁺), dim H_D(X ⊗ S⁻))`, or `None` for even `dim V'`.
    pub fn split_dims(&self) -> Option<(usize, usize)> {
        self.split
            .as_ref()
            .map(|(p, m)| (degree_usize(p), degree_usize(m)))
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
}

/// Trace of `T ⊗ R` on `H_D`.
fn trace_h(hd: &DiracCohomology, t: &QMat, r: &GMat) -> GaussRat {
    trace_on(&hd.ker, t, r).sub_ref(&trace_on(&hd.ker_im, t, r))
}

pub fn dirac_cohomology(dc: &DiracContext) -> Result<DiracCohomology> {
    dirac_cohomology_with(dc, true)
}

/// With `fast`, an invertible `D` is detected modulo a prime first.
pub fn dirac_cohomology_with(dc: &DiracContext, fast: bool) -> Result<DiracCohomology> {
    let n = dc.dim();
    let spin = dc.spin;
    if fast && modp::certified_invertible(&dc.d) {
        let zero = ClassFunction::zero(spin.classes().clone());
        return Ok(DiracCohomology {
            dim: 0,
            ker: Subspace::zero(n),
            ker_im: Subspace::zero(n),
            split: spin.amb.z.as_ref().map(|_| (zero.clone(), zero.clone())),
            character: zero,
            certified_zero: true,
        });
    }
    let ker = kernel(&dc.d);
    let im = image(&dc.d);
    let ker_im = subspace_intersect(&ker, &im)?;
    let mut hd = DiracCohomology {
        dim: ker.dim() - ker_im.dim(),
        ker,
        ker_im,
        character: ClassFunction::zero(spin.classes().clone()),
        split: None,
        certified_zero: false,
    };
    if hd.dim == 0 {
        hd.split = spin.amb.z.as_ref().map(|_| (hd.character.clone(), hd.character.clone()));
        return Ok(hd);
    }
    let mut total = Vec::new();
    let mut zpart = Vec::new();
    for rep in &spin.reps {
        let t = dc.alg.t_elem(&dc.x, rep.w);
        total.push(rep.pre.mul_ref(&Scalar::from_gauss(trace_h(&hd, &t, &rep.integral))));
        if let Some(zi) = &rep.z_integral {
            zpart.push(rep.pre.mul_ref(&Scalar::from_gauss(trace_h(&hd, &t, zi))));
        }
    }
    hd.character = spin.class_fn(total);
    if let Some((_, zp)) = &spin.amb.z {
        let half = Q::new(1.into(), 2.into());
        let zinv = zp.inv().expect("z ≠ 0");
        let (mut plus, mut minus) = (Vec::new(), Vec::new());
        for (a, b) in hd.character.values.iter().zip(&zpart) {
            let b = b.mul_ref(&zinv);
            plus.push(a.add_ref(&b).scale_q(&half));
            minus.push(a.sub_ref(&b).scale_q(&half));
        }
        hd.split = Some((spin.class_fn(plus), spin.class_fn(minus)));
    }
    Ok(hd)
}

/// `dim H_D` from ranks alone: `n − 2 rk D + rk D²`.
pub fn dim_from_ranks(dc: &DiracContext) -> usize {
    let n = dc.dim();
    let r1 = dc.d.rank();
    let r2 = dc.d.mul(&dc.d).rank();
    n + r2 - 2 * r1
}

/// `H_D^±` for a graded module, from the action of `J ⊗ 1` on `H_D`.
#[derive(Clone, Debug)]
pub struct GradedCohomology {
    pub plus: usize,
    pub minus: usize,
    /// The same on `X ⊗ S⁺` (equal to the above for even `dim V'`).
    pub plus_s: usize,
    pub minus_s: usize,
    /// `ℋ_D⁺ − ℋ_D⁻` as a class function on `W̃`.
    pub difference: ClassFunction,
}

fn split_dims(total: usize, trace: &Scalar) -> Result<(usize, usize)> {
    let t = trace
        .as_integer()
        .ok_or_else(|| Error::Certificate(format!("non-integral graded trace {trace}")))?;
    let d = total as i64;
    if (d + t) % 2 != 0 || t.abs() > d {
        return Err(Error::Certificate("inconsistent graded trace".into()));
    }
    Ok((((d + t) / 2) as usize, ((d - t) / 2) as usize))
}

pub fn graded_cohomology(
    dc: &DiracContext,
    hd: &DiracCohomology,
    g: &Grading,
) -> Result<GradedCohomology> {
    let spin = dc.spin;
    let inv_c = g.sqrt_c().inv().expect("c ≠ 0");
    let s = spin.amb.module_dim();
    let jt = trace_h(hd, &g.j, &GMat::identity(s));
    let jt = Scalar::from_gauss(jt).mul_ref(&inv_c);
    let (plus, minus) = split_dims(hd.dim, &jt)?;
    let (plus_s, minus_s) = match &spin.amb.z {
        None => (plus, minus),
        Some((z, zp)) => {
            let jz = Scalar::from_gauss(trace_h(hd, &g.j, z)).mul_ref(&inv_c);
            let jz = jz.mul_ref(&zp.inv().expect("z ≠ 0"));
            let tr = jt.add_ref(&jz).scale_q(&Q::new(1.into(), 2.into()));
            split_dims(hd.dim_s(), &tr)?
        }
    };
    let values = if hd.dim == 0 {
        vec![Scalar::zero(); spin.reps.len()]
    } else {
        spin.reps
            .iter()
            .map(|rep| {
                let t = g.j.mul(&dc.alg.t_elem(&dc.x, rep.w));
                rep.pre
                    .mul_ref(&Scalar::from_gauss(trace_h(hd, &t, &rep.integral)))
                    .mul_ref(&inv_c)
            })
            .collect()
    };
    Ok(GradedCohomology {
        plus,
        minus,
        plus_s,
        minus_s,
        difference: spin.class_fn(values),
    })
}

/// `I(X) = (X⁺ − X⁻) ⊗ 𝒮`, evaluated without forming `D`.
pub fn dirac_index(alg: &HAlgebra, spin: &SpinData, gm: &GradedModule) -> ClassFunction {
    let inv_c = gm.grading.sqrt_c().inv().expect("c ≠ 0");
    let values = spin
        .reps
        .iter()
        .map(|rep| {
            let t = gm.grading.j.mul(&alg.t_elem(&gm.module, rep.w)).trace();
            let s = rep.pre.mul_ref(&Scalar::from_gauss(rep.integral.trace()));
            Scalar::from_q(&t).mul_ref(&inv_c).mul_ref(&s)
        })
        .collect();
    spin.class_fn(values)
}

/// One irreducible constituent of `H_D` in the central-character check.
#[derive(Clone, Debug, Serialize)]
pub struct VoganEntry {
    pub label: String,
    pub multiplicity: i64,
    pub a_value: String,
    /// `⟨s, s⟩_{V'} − r² a(σ̃)`.
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VoganReport {
    pub central_character: String,
    pub norm: String,
    pub entries: Vec<VoganEntry>,
    pub pass: bool,
}

/// `⟨s, s⟩` on the `V'` part of `V`.
pub fn norm_v_prime(alg: &HAlgebra, s: &[Q]) -> Q {
    let sq: Q = s.iter().map(|x| x * x).sum();
    match alg.label() {
        RootType::A => {
            let t: Q = s.iter().sum();
            sq - &t * &t / qi(s.len() as i64)
        }
        RootType::C => sq,
    }
}

/// Every `σ̃` in `H_D(X)` satisfies `⟨s, s⟩_{V'} = r² a(σ̃)` where `Ws` is the
/// central character of `X`.
pub fn vogan_check(
    alg: &HAlgebra,
    spin: &SpinData,
    x: &HModule,
    hd: &DiracCohomology,
) -> Result<VoganReport> {
    let cc = alg.central_character(x)?;
    let norm = norm_v_prime(alg, &cc.rep);
    let r2 = &alg.r * &alg.r;
    let mut entries = Vec::new();
    let mut pass = true;
    for (i, m) in spin.decompose_virtual(&hd.character)? {
        let a = spin.table.a_values[i]
            .clone()
            .ok_or_else(|| Error::Certificate("non-genuine constituent in H_D".into()))?;
        let residual = Scalar::from_q(&norm).sub_ref(&a.scale_q(&r2));
        pass &= residual.is_zero() && m > 0;
        entries.push(VoganEntry {
            label: spin.table.describe(i),
            multiplicity: m,
            a_value: a.to_string(),
            residual: residual.to_string(),
        });
    }
    Ok(VoganReport {
        central_character: cc.to_string(),
        norm: norm.to_string(),
        entries,
        pass,
    })
}
