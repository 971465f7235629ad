//! `ℤ₂`-gradings from `t_{w₀}θ`.
//!
//! Given an isomorphism `A : X → θ(X)`, the operator `J = π(t_{w₀})A`
//! commutes with every `t_w` and anticommutes with every `ṽ`. For simple
//! `X` its square is a scalar `c`, and `X^±` are its `±√c` eigenspaces.

use super::{random_q, rng, HAlgebra, HModule, Origin};
use crate::exactalg::{kernel, sqrt_q, Field};
use crate::{Error, QMat, Result, Scalar, Q};
use num_traits::Zero;

/// Grading operator with `J² = c`.
#[derive(Clone, Debug)]
pub struct Grading {
    pub j: QMat,
    pub c: Q,
}

impl Grading {
    pub fn sqrt_c(&self) -> Scalar {
        sqrt_q(&self.c)
    }

    /// `(dim X⁺, dim X⁻)`.
    pub fn dims(&self) -> Result<(usize, usize)> {
        let d = self.j.rows() as i64;
        let t = Scalar::from_q(&self.j.trace())
            .mul_ref(&self.sqrt_c().inv().expect("c ≠ 0"));
        let t = t
            .as_integer()
            .ok_or_else(|| Error::Certificate("grading trace is not an integer".into()))?;
        Ok((((d + t) / 2) as usize, ((d - t) / 2) as usize))
    }
}

#[derive(Clone, Debug)]
pub struct GradedModule {
    pub module: HModule,
    pub grading: Grading,
    /// True when the module is `X ⊕ θ(X)`.
    pub doubled: bool,
}

/// `{y ∈ Y : ε_k y = λ_k y, t_s y = η_s y (s ∈ J)}`.
fn frobenius_space(y: &HModule, ind: &super::Induced) -> crate::Subspace<Q> {
    let d = y.dim;
    let mut m = QMat::zeros(0, d);
    for (vk, c) in y.v.iter().zip(&ind.weight) {
        m = m.vstack(&vk.sub(&QMat::scalar(d, c)));
    }
    for &s in &ind.j {
        m = m.vstack(&y.t[s].sub(&QMat::scalar(d, &crate::exactalg::qi(ind.eta[s]))));
    }
    kernel(&m)
}

/// Maps `ℍ ⊗_{ℍ_J} C_λ → Y` sending the generator to each basis vector of
/// the Frobenius space, as `dim Y × dim E` matrices.
fn induced_maps(alg: &HAlgebra, ind: &super::Induced, y: &HModule) -> Vec<QMat> {
    let fs = frobenius_space(y, ind);
    fs.basis_vectors()
        .iter()
        .map(|yv| {
            let cols: Vec<Vec<Q>> = ind.reps.iter().map(|&w| alg.t_apply(y, w, yv)).collect();
            QMat::from_fn(y.dim, ind.reps.len(), |i, j| cols[j][i].clone())
        })
        .collect()
}

fn is_intertwiner(a: &QMat, x: &HModule, y: &HModule) -> bool {
    x.t.iter()
        .zip(&y.t)
        .chain(x.v.iter().zip(&y.v))
        .all(|(gx, gy)| a.mul(gx) == gy.mul(a))
}

/// A basis of `Hom_ℍ(X, θ(X))`.
pub fn theta_intertwiners(alg: &HAlgebra, x: &HModule) -> Result<Vec<QMat>> {
    let tx = alg.theta_twist(x);
    let out = match &x.origin {
        Origin::Induced(ind) => induced_maps(alg, ind, &tx),
        Origin::Quotient(q) => {
            let Origin::Induced(ind) = &q.parent.origin else {
                return generic_intertwiners(x, &tx);
            };
            // maps E → θ(L) that kill the radical
            let maps = induced_maps(alg, ind, &tx);
            if maps.is_empty() {
                return Ok(Vec::new());
            }
            let rad = q.radical.basis_vectors();
            let mut cons = QMat::zeros(0, maps.len());
            for r in &rad {
                let imgs: Vec<Vec<Q>> = maps.iter().map(|m| m.mul_vec(r)).collect();
                let block = QMat::from_fn(tx.dim, maps.len(), |i, j| imgs[j][i].clone());
                cons = cons.vstack(&block);
            }
            kernel(&cons)
                .basis_vectors()
                .iter()
                .map(|c| {
                    let mut a = QMat::zeros(tx.dim, q.parent.dim);
                    for (ci, m) in c.iter().zip(&maps) {
                        a.add_scaled(ci, m);
                    }
                    a.select_cols(&q.section)
                })
                .collect()
        }
        Origin::Derived => return generic_intertwiners(x, &tx),
    };
    for a in &out {
        if !is_intertwiner(a, x, &tx) {
            return Err(Error::Certificate("intertwiner check failed".into()));
        }
    }
    Ok(out)
}

/// Solves `A π_X(g) = π_Y(g) A` directly; only for small modules.
fn generic_intertwiners(x: &HModule, y: &HModule) -> Result<Vec<QMat>> {
    let (p, d) = (y.dim, x.dim);
    if p * d > 400 {
        return Err(Error::SizeBound("intertwiner system too large".into()));
    }
    let gx = x.generators();
    let gy = y.generators();
    let n = p * d;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (a, b) in gx.iter().zip(&gy) {
        // (A a − b A)_{ij} = Σ_k A_{ik} a_{kj} − Σ_k b_{ik} A_{kj}
        for i in 0..p {
            for j in 0..d {
                let mut row = vec![Q::zero(); n];
                for k in 0..d {
                    row[i * d + k] += &a[(k, j)];
                }
                for k in 0..p {
                    row[k * d + j] -= &b[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    let m = QMat::from_rows(n, rows);
    Ok(kernel(&m)
        .basis_vectors()
        .into_iter()
        .map(|v| QMat::new(p, d, v))
        .collect())
}

/// The intrinsic grading of `X ≅ θ(X)`, or `None` when no isomorphism
/// gives a grading operator with scalar square.
pub fn z2_grading(alg: &HAlgebra, x: &HModule) -> Result<Option<Grading>> {
    let basis = theta_intertwiners(alg, x)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let t0 = alg.longest_matrix(x);
    let mut cands: Vec<QMat> = basis.clone();
    let mut r = rng(0x7e7a);
    for _ in 0..3 {
        let mut a = QMat::zeros(x.dim, x.dim);
        for b in &basis {
            a.add_scaled(&random_q(&mut r), b);
        }
        cands.push(a);
    }
    for a in cands {
        let j = t0.mul(&a);
        let j2 = j.mul(&j);
        let c = j2[(0, 0)].clone();
        if !c.is_zero() && j2 == QMat::scalar(x.dim, &c) {
            return Ok(Some(Grading { j, c }));
        }
    }
    Ok(None)
}

/// `X ⊕ θ(X)` graded by `(x, y) ↦ (π(t_{w₀})y, π(t_{w₀})x)`.
pub fn extend_to_graded(alg: &HAlgebra, x: &HModule) -> GradedModule {
    let tx = alg.theta_twist(x);
    let module = alg.direct_sum(x, &tx);
    let t0 = alg.longest_matrix(x);
    let d = x.dim;
    let mut j = QMat::zeros(2 * d, 2 * d);
    for r in 0..d {
        for c in 0..d {
            if !t0[(r, c)].is_zero() {
                j[(r, d + c)] = t0[(r, c)].clone();
                j[(d + r, c)] = t0[(r, c)].clone();
            }
        }
    }
    GradedModule {
        module,
        grading: Grading {
            j,
            c: crate::exactalg::qi(1),
        },
        doubled: true,
    }
}

/// `E' = E` with its grading when `E ≅ θ(E)`, and `E ⊕ θ(E)` otherwise.
pub fn graded_prime(alg: &HAlgebra, x: &HModule) -> Result<GradedModule> {
    Ok(match z2_grading(alg, x)? {
        Some(grading) => GradedModule {
            module: x.clone(),
            grading,
            doubled: false,
        },
        None => extend_to_graded(alg, x),
    })
}

/// Checks `J t_s = t_s J`, `J ṽ = −ṽ J` and `J² = c`.
pub fn audit_grading(alg: &HAlgebra, g: &GradedModule) -> bool {
    let x = &g.module;
    let j = &g.grading.j;
    x.t.iter().all(|t| j.mul(t) == t.mul(j))
        && alg
            .vtilde_basis(x)
            .iter()
            .all(|vt| j.mul(vt) == vt.mul(j).neg())
        && j.mul(j) == QMat::scalar(x.dim, &g.grading.c)
}
