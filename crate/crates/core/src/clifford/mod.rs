//! Clifford algebra `C(V')`, spin modules and the spin cover `W̃`.
//!
//! Gammas come from the Jordan–Wigner tensor construction multiplied by `i`,
//! so `γ_i² = −1` and every entry lies in `{0, ±1, ±i}`.

pub mod cover;

pub use cover::{
    a_value, a_value_closed_form, dp_class, epsilon_of, spin_char_table, spin_irrep_dimension,
    stilde_elt, CliffElt, CoverElt, DpClass, SpinCharTable, SpinCover, SpinLabel,
};

use crate::exactalg::{sqrt_q, Field};
use crate::weyl::{RootSystem, RootType};
use crate::{Error, GMat, GaussRat, Mat, Result, Scalar, Q};
use num_traits::{One, Zero};

/// Largest `dim V'` handled (matrices of size `2^6`).
pub const MAX_CLIFFORD_DIM: usize = 13;

fn pauli(k: u8) -> GMat {
    let z = GaussRat::zero();
    let o = GaussRat::one();
    match k {
        0 => GMat::identity(2),
        // X
        1 => GMat::from_rows(2, vec![vec![z.clone(), o.clone()], vec![o, z]]),
        // Y
        2 => GMat::from_rows(
            2,
            vec![
                vec![z.clone(), GaussRat::i().neg_ref()],
                vec![GaussRat::i(), z],
            ],
        ),
        // Z
        _ => GMat::from_rows(2, vec![vec![o.clone(), z.clone()], vec![z, o.neg_ref()]]),
    }
}

fn tensor(factors: &[u8]) -> GMat {
    let mut m = GMat::identity(1);
    for &f in factors {
        m = m.kron(&pauli(f));
    }
    m
}

/// `γ_1 … γ_n` on a module of dimension `2^⌊n/2⌋`. For odd `n` the last
/// gamma is `i·Z⊗…⊗Z`, which selects `S⁺`.
pub fn ambient_gammas(n: usize) -> Vec<GMat> {
    let k = n / 2;
    let mut out = Vec::with_capacity(n);
    let iota = GaussRat::i();
    for j in 0..k {
        for p in [1u8, 2] {
            let mut f = vec![3u8; j];
            f.push(p);
            f.extend(std::iter::repeat_n(0u8, k - j - 1));
            out.push(tensor(&f).scale(&iota));
        }
    }
    if n % 2 == 1 {
        out.push(tensor(&vec![3u8; k]).scale(&iota));
    }
    out
}

/// `γ_S`, the increasing product over the bits of `s`.
pub fn gamma_monomial(gammas: &[GMat], s: u32) -> GMat {
    let d = gammas[0].rows();
    let mut m = GMat::identity(d);
    for (b, g) in gammas.iter().enumerate() {
        if s >> b & 1 == 1 {
            m = m.mul(g);
        }
    }
    m
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut s = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        s.add_mul_assign(x, y);
    }
    s
}

/// Rational orthogonal (unnormalized) Gram–Schmidt basis of the span of the
/// simple roots, in simple-root order.
pub fn orthogonal_basis(rs: &RootSystem) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = Vec::new();
    for a in &rs.simple {
        let mut v: Vec<Q> = a.iter().map(|&x| crate::exactalg::qi(x)).collect();
        for u in &out {
            let uv: Q = u.iter().zip(&v).map(|(x, y)| x * y).sum();
            let uu: Q = u.iter().map(|x| x * x).sum();
            let f = uv / uu;
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= &f * ui;
            }
        }
        out.push(v);
    }
    out
}

/// The spin module(s) of `C(V')` for a root system.
#[derive(Clone, Debug)]
pub struct SpinContext {
    pub rs: RootSystem,
    /// `dim V'`.
    pub n: usize,
    /// Orthonormal basis of `V'` in `V`-coordinates.
    pub orthonormal_basis: Vec<Vec<Scalar>>,
    /// `γ_i = g̃_{e_i}` on `S` (on `S⁺` when `n` is odd).
    pub gammas: Vec<Mat>,
    /// For odd `n`, the gammas on `S⁻`.
    pub gammas_minus: Option<Vec<Mat>>,
}

pub fn build_spin_context(rs: &RootSystem) -> Result<SpinContext> {
    let n = rs.rank;
    if n > MAX_CLIFFORD_DIM - 1 {
        return Err(Error::SizeBound(format!("dim V' = {n} exceeds 12")));
    }
    let orthonormal_basis: Vec<Vec<Scalar>> = orthogonal_basis(rs)
        .into_iter()
        .map(|u| {
            let nn: Q = u.iter().map(|x| x * x).sum();
            let inv = sqrt_q(&nn).inv().expect("non-zero");
            u.iter().map(|x| inv.scale_q(x)).collect()
        })
        .collect();
    let gammas: Vec<Mat> = ambient_gammas(n)
        .iter()
        .map(|g| g.map(|x| Scalar::from_gauss(x.clone())))
        .collect();
    let gammas_minus = (n % 2 == 1).then(|| {
        let mut g = gammas.clone();
        let last = g.pop().expect("n ≥ 1").neg();
        g.push(last);
        g
    });
    Ok(SpinContext {
        rs: rs.clone(),
        n,
        orthonormal_basis,
        gammas,
        gammas_minus,
    })
}

impl SpinContext {
    pub fn dim_s(&self) -> usize {
        1 << (self.n / 2)
    }

    /// Coordinates of `v ∈ V` along the orthonormal basis.
    pub fn coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.orthonormal_basis.iter().map(|e| dot(e, v)).collect()
    }

    fn gammas_for(&self, minus: bool) -> &[Mat] {
        if minus {
            self.gammas_minus.as_deref().unwrap_or(&self.gammas)
        } else {
            &self.gammas
        }
    }

    /// `g̃_v` on `S` (or `S⁻` when `minus`).
    pub fn gtilde(&self, v: &[Scalar], minus: bool) -> Mat {
        let g = self.gammas_for(minus);
        let d = self.dim_s();
        let mut m = Mat::zeros(d, d);
        for (c, gi) in self.coords(v).iter().zip(g) {
            if !c.is_zero() {
                m.add_scaled(c, gi);
            }
        }
        m
    }

    /// `s̃_α = g̃_α / |α|` on `S` (or `S⁻`).
    pub fn stilde(&self, alpha: &[i64], minus: bool) -> Result<Mat> {
        if !self.rs.roots.iter().any(|r| r == alpha) {
            return Err(Error::Invalid(format!("{alpha:?} is not a root")));
        }
        let v: Vec<Scalar> = alpha.iter().map(|&x| Scalar::from_int(x)).collect();
        let norm = sqrt_q(&crate::exactalg::qi(self.rs.norm2(alpha)));
        Ok(self.gtilde(&v, minus).scale(&norm.inv().expect("non-zero")))
    }

    /// Matrix of a cover element on `S` (or `S⁻`): the normal form is in
    /// ambient coordinates of `V`, so each `γ_j` of `R^{dim V}` is replaced
    /// by `g̃_{ε_j}` projected to `V'`.
    pub fn cover_matrix(&self, x: &CliffElt, minus: bool) -> Mat {
        let dim = self.rs.dim;
        let eg: Vec<Mat> = (0..dim)
            .map(|j| {
                let mut v = vec![Scalar::zero(); dim];
                v[j] = Scalar::one();
                self.gtilde(&v, minus)
            })
            .collect();
        let d = self.dim_s();
        let mut out = Mat::zeros(d, d);
        for &(s, c) in &x.terms {
            let mut m = Mat::identity(d);
            for (b, g) in eg.iter().enumerate() {
                if s >> b & 1 == 1 {
                    m = m.mul(g);
                }
            }
            out.add_scaled(&Scalar::from_int(c), &m);
        }
        out.scale(&x.prefactor())
    }
}

/// Spin data on an ambient module used by the Dirac operator.
///
/// `R^{dim V}` is embedded in `R^N` with `N` the even number `dim V` or
/// `dim V + 1`, except that type A with odd `l` keeps `N = l`. The gammas of
/// `R^N` then restrict to `S` when `dim V'` is even and to `𝒮 = S⁺ ⊕ S⁻`
/// when it is odd.
#[derive(Clone, Debug)]
pub struct AmbientSpin {
    pub label: RootType,
    /// `dim V`.
    pub dim: usize,
    /// `dim V'`.
    pub n: usize,
    pub gammas: Vec<GMat>,
    /// `G_k = g̃_{pr ε_k}` for `k < dim V`.
    pub g: Vec<GMat>,
    /// For odd `n`: the central element `z = g̃_{u_1} ⋯ g̃_{u_n}` over the
    /// orthogonal basis and its value on `S⁺`.
    pub z: Option<(GMat, Scalar)>,
}

impl AmbientSpin {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let dim = rs.dim;
        let n = rs.rank;
        if n > MAX_CLIFFORD_DIM - 1 {
            return Err(Error::SizeBound(format!("dim V' = {n} exceeds 12")));
        }
        let big_n = if rs.label == RootType::A || dim.is_multiple_of(2) {
            dim
        } else {
            dim + 1
        };
        let gammas = ambient_gammas(big_n);
        let gvec = |v: &[Q]| -> GMat {
            let d = gammas[0].rows();
            let mut m = GMat::zeros(d, d);
            for (c, gi) in v.iter().zip(&gammas) {
                if !c.is_zero() {
                    m.add_scaled(&GaussRat::real(c.clone()), gi);
                }
            }
            m
        };
        let inv_l = Q::new(1.into(), (dim as i64).into());
        let g: Vec<GMat> = (0..dim)
            .map(|k| {
                let v: Vec<Q> = (0..dim)
                    .map(|j| {
                        let e = if j == k { Q::one() } else { Q::zero() };
                        if rs.label == RootType::A {
                            e - &inv_l
                        } else {
                            e
                        }
                    })
                    .collect();
                gvec(&v)
            })
            .collect();
        let z = (n % 2 == 1).then(|| {
            let basis = orthogonal_basis(rs);
            let d = gammas[0].rows();
            let mut m = GMat::identity(d);
            let mut norms = Q::one();
            for u in &basis {
                m = m.mul(&gvec(u));
                norms *= u.iter().map(|x| x * x).sum::<Q>();
            }
            // on S⁺ the orthonormal product is i^{n+k} with n = 2k + 1
            let k = (n - 1) / 2;
            let ipow = match (n + k) % 4 {
                0 => Scalar::one(),
                1 => Scalar::i(),
                2 => Scalar::from_int(-1),
                _ => Scalar::i().neg_ref(),
            };
            (m, sqrt_q(&norms).mul_ref(&ipow))
        });
        Ok(AmbientSpin {
            label: rs.label,
            dim,
            n,
            gammas,
            g,
            z,
        })
    }

    pub fn module_dim(&self) -> usize {
        self.gammas[0].rows()
    }

    /// `Σ c_S γ_S` for a cover element, without its `2^{-e/2}` prefactor.
    pub fn integral_matrix(&self, x: &CliffElt) -> GMat {
        x.integral_matrix(&self.gammas)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::build_root_system;
    use proptest::prelude::*;

    fn check_clifford(g: &[GMat]) {
        let d = g[0].rows();
        for i in 0..g.len() {
            for j in 0..g.len() {
                let ac = g[i].mul(&g[j]).add(&g[j].mul(&g[i]));
                let expect = if i == j {
                    GMat::scalar(d, &GaussRat::from_int(-2))
                } else {
                    GMat::zeros(d, d)
                };
                assert_eq!(ac, expect, "pair {i},{j}");
            }
        }
    }

    #[test]
    fn gammas_anticommute() {
        for n in 1..=8 {
            let g = ambient_gammas(n);
            assert_eq!(g[0].rows(), 1 << (n / 2));
            check_clifford(&g);
        }
    }

    #[test]
    fn rank_one_gammas() {
        let rs = build_root_system(RootType::A, 1, None).unwrap();
        let ctx = build_spin_context(&rs).unwrap();
        assert_eq!(ctx.gammas[0][(0, 0)], Scalar::i());
        assert_eq!(ctx.gammas_minus.as_ref().unwrap()[0][(0, 0)], Scalar::i().neg_ref());
    }

    #[test]
    fn a3_two_inequivalent_spin_modules() {
        let rs = build_root_system(RootType::A, 3, None).unwrap();
        let ctx = build_spin_context(&rs).unwrap();
        assert_eq!(ctx.dim_s(), 2);
        let tr = |g: &[Mat]| g[0].mul(&g[1]).mul(&g[2]).trace();
        let plus = tr(&ctx.gammas);
        let minus = tr(ctx.gammas_minus.as_ref().unwrap());
        assert_eq!(plus, minus.neg_ref());
        assert!(!plus.is_zero());
    }

    #[test]
    fn stilde_relations() {
        let rs = build_root_system(RootType::A, 2, None).unwrap();
        let ctx = build_spin_context(&rs).unwrap();
        let s1 = ctx.stilde(&rs.simple[0], false).unwrap();
        let s2 = ctx.stilde(&rs.simple[1], false).unwrap();
        let m1 = Mat::scalar(2, &Scalar::from_int(-1));
        assert_eq!(s1.mul(&s1), m1);
        assert_eq!(s1.mul(&s2).pow(3), m1);
        assert!(ctx.stilde(&[1, 1, 0], false).is_err());
    }

    #[test]
    fn cover_matrices_match_stilde() {
        for (t, r, m) in [
            (RootType::A, 2, None),
            (RootType::A, 3, None),
            (RootType::C, 2, Some(crate::exactalg::q(17, 10))),
            (RootType::C, 3, Some(Q::one())),
        ] {
            let rs = build_root_system(t, r, m).unwrap();
            let ctx = build_spin_context(&rs).unwrap();
            for a in &rs.positive {
                let (x, _) = stilde_elt(&rs, a);
                for minus in [false, true] {
                    assert_eq!(ctx.cover_matrix(&x, minus), ctx.stilde(a, minus).unwrap());
                }
            }
        }
    }

    #[test]
    fn conjugation_is_signed_reflection() {
        // s̃_α g̃_v s̃_α⁻¹ = −g̃_{s_α v}
        let rs = build_root_system(RootType::C, 2, Some(Q::one())).unwrap();
        let ctx = build_spin_context(&rs).unwrap();
        for a in &rs.positive {
            let s = ctx.stilde(a, false).unwrap();
            let sinv = s.neg();
            let w = rs.reflection(a);
            for b in &rs.positive {
                let bv: Vec<Scalar> = b.iter().map(|&x| Scalar::from_int(x)).collect();
                let wb: Vec<Scalar> = w.act_int(b).iter().map(|&x| Scalar::from_int(x)).collect();
                assert_eq!(
                    s.mul(&ctx.gtilde(&bv, false)).mul(&sinv),
                    ctx.gtilde(&wb, false).neg()
                );
            }
        }
    }

    #[test]
    fn ambient_restricts_correctly() {
        for (t, r) in [(RootType::A, 2), (RootType::A, 3), (RootType::C, 2), (RootType::C, 3)] {
            let m = (t == RootType::C).then(Q::one);
            let rs = build_root_system(t, r, m).unwrap();
            let amb = AmbientSpin::new(&rs).unwrap();
            let ctx = build_spin_context(&rs).unwrap();
            let expect = if r % 2 == 1 { 2 * ctx.dim_s() } else { ctx.dim_s() };
            assert_eq!(amb.module_dim(), expect);
            if let Some((z, zp)) = &amb.z {
                // z² = (value on S⁺)²
                let z2 = z.mul(z);
                let c = zp.mul_ref(zp).as_gauss().unwrap();
                assert_eq!(z2, GMat::scalar(z.rows(), &c));
                // trace zero: S⁺ and S⁻ have equal dimension
                assert!(z.trace().is_zero());
            }
        }
    }

    proptest! {
        #[test]
        fn gtilde_squares(v in proptest::collection::vec(-5i64..=5, 4)) {
            let rs = build_root_system(RootType::C, 4, Some(Q::one())).unwrap();
            let ctx = build_spin_context(&rs).unwrap();
            let sv: Vec<Scalar> = v.iter().map(|&x| Scalar::from_int(x)).collect();
            let g = ctx.gtilde(&sv, false);
            let nn: i64 = v.iter().map(|x| x * x).sum();
            prop_assert_eq!(g.mul(&g), Mat::scalar(ctx.dim_s(), &Scalar::from_int(-nn)));
        }
    }
}
