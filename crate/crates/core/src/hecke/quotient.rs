//! Unique simple quotients of cyclic modules with a simple head.
//!
//! The dual `E*` has a simple socle `L*`, contained in every non-zero
//! submodule of `E*`. Starting from a dual vector of the generator's weight
//! we spin down to it, and `rad E` is its annihilator. The quotient is then
//! certified simple by Norton's test.

use super::{random_q, rng, HAlgebra, HModule, Origin, QuotientData};
use crate::exactalg::{kernel, spin, subspace_intersect, Echelon, Subspace};
use crate::{Error, QMat, Result, Q};
use num_traits::Zero;
use std::sync::Arc;

fn transposes(ms: &[QMat]) -> Vec<QMat> {
    ms.iter().map(|m| m.transpose()).collect()
}

fn random_combination(s: &Subspace<Q>, r: &mut rand::rngs::StdRng) -> Vec<Q> {
    let c: Vec<Q> = (0..s.dim()).map(|_| random_q(r)).collect();
    s.combine(&c)
}

pub fn simple_quotient(alg: &HAlgebra, e: &HModule) -> Result<HModule> {
    let x0 = e
        .generator
        .clone()
        .ok_or_else(|| Error::Invalid("module has no generator".into()))?;
    let lam0 = alg
        .generator_weight(e)
        .ok_or_else(|| Error::Invalid("generator is not a weight vector".into()))?;
    let gens = e.generators();
    let gt = transposes(&gens);
    // left weight vectors of weight λ₀
    let mut stacked = QMat::zeros(0, e.dim);
    for (vk, c) in e.v.iter().zip(&lam0) {
        stacked = stacked.vstack(&vk.sub(&QMat::scalar(e.dim, c)).transpose());
    }
    let k = kernel(&stacked);
    if k.dim() == 0 {
        return Err(Error::Certificate("no dual vector of the generator's weight".into()));
    }
    let mut r = rng(0x5eed);
    let mut best: Option<Subspace<Q>> = None;
    let mut cands = k.basis_vectors();
    cands.push(random_combination(&k, &mut r));
    for f in &cands {
        let s = spin(&gt, std::slice::from_ref(f));
        if best.as_ref().is_none_or(|b| s.dim() < b.dim()) {
            best = Some(s);
        }
    }
    let mut s = best.expect("non-empty candidates");
    loop {
        let ks = subspace_intersect(&k, &s)?;
        let mut cands = ks.basis_vectors();
        for _ in 0..2 {
            cands.push(random_combination(&ks, &mut r));
        }
        let smaller = cands
            .iter()
            .filter(|f| f.iter().any(|x| !x.is_zero()))
            .map(|f| spin(&gt, std::slice::from_ref(f)))
            .find(|s2| s2.dim() < s.dim());
        match smaller {
            Some(s2) => s = s2,
            None => break,
        }
    }
    let radical = s.annihilator();
    let l = quotient_module(e, radical, &x0)?;
    certify_simple(&l)?;
    Ok(l)
}

fn quotient_module(e: &HModule, radical: Subspace<Q>, x0: &[Q]) -> Result<HModule> {
    let section: Vec<usize> = (0..e.dim).filter(|c| !radical.pivots().contains(c)).collect();
    let data = QuotientData {
        parent: e.clone(),
        radical,
        section,
    };
    let d = data.section.len();
    let act = |m: &QMat| -> QMat {
        let cols: Vec<Vec<Q>> = data.section.iter().map(|&c| data.project(&m.col(c))).collect();
        QMat::from_fn(d, d, |i, j| cols[j][i].clone())
    };
    let t = e.t.iter().map(act).collect();
    let v = e.v.iter().map(act).collect();
    let generator = data.project(x0);
    if generator.iter().all(|x| x.is_zero()) {
        return Err(Error::Certificate("generator lies in the radical".into()));
    }
    Ok(HModule {
        dim: d,
        t,
        v,
        label: e.label.replacen("E(", "L(", 1),
        generator: Some(generator),
        origin: Origin::Quotient(Arc::new(data)),
    })
}

/// Norton's irreducibility test with `a = Σ c_k (ε_k − μ_k)` for a weight
/// `μ` whose joint eigenspace is a line; falls back on Burnside's theorem
/// (the action spans all of `End(X)`) for small modules.
pub fn certify_simple(x: &HModule) -> Result<()> {
    let d = x.dim;
    if d <= 1 {
        return if d == 1 {
            Ok(())
        } else {
            Err(Error::Certificate("zero module".into()))
        };
    }
    let gens = x.generators();
    let gt = transposes(&gens);
    let mut r = rng(0xbeef);
    let weights = crate::exactalg::simultaneous_generalized_eigenspaces(&x.v)?;
    for (mu, _) in &weights {
        let mut stacked = QMat::zeros(0, d);
        for (vk, c) in x.v.iter().zip(mu) {
            stacked = stacked.vstack(&vk.sub(&QMat::scalar(d, c)));
        }
        if kernel(&stacked).dim() != 1 {
            continue;
        }
        for _ in 0..4 {
            let mut a = QMat::zeros(d, d);
            for (vk, c) in x.v.iter().zip(mu) {
                a.add_scaled(&random_q(&mut r), &vk.sub(&QMat::scalar(d, c)));
            }
            let ka = kernel(&a);
            if ka.dim() != 1 {
                continue;
            }
            let kt = kernel(&a.transpose());
            let ok = spin(&gens, &ka.basis_vectors()).dim() == d
                && spin(&gt, &kt.basis_vectors()).dim() == d;
            return if ok {
                Ok(())
            } else {
                Err(Error::Certificate(format!("{} is not simple", x.label)))
            };
        }
    }
    if d <= 12 {
        return burnside(&gens, d);
    }
    Err(Error::Certificate(format!(
        "no simplicity certificate found for {}",
        x.label
    )))
}

fn burnside(gens: &[QMat], d: usize) -> Result<()> {
    let flat = |m: &QMat| m.data().to_vec();
    let mut ech = Echelon::new(d * d);
    let mut queue = vec![QMat::identity(d)];
    ech.insert(&flat(&queue[0]));
    while let Some(m) = queue.pop() {
        for g in gens {
            let p = g.mul(&m);
            if ech.insert(&flat(&p)).is_some() {
                queue.push(p);
            }
        }
        if ech.dim() == d * d {
            return Ok(());
        }
    }
    Err(Error::Certificate("action does not span End(X)".into()))
}
