use super::{kernel, Field, Matrix, Subspace};
use crate::{Error, QMat, Result, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Characteristic polynomial `det(x − A)`, coefficients from the constant
/// term up. Computed through an upper Hessenberg form.
pub fn charpoly<F: Field>(a: &Matrix<F>) -> Vec<F> {
    assert!(a.is_square());
    let n = a.rows();
    let mut h = a.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| !h[(i, j)].is_zero()) else {
            continue;
        };
        if p != j + 1 {
            for c in 0..n {
                let t = h[(p, c)].clone();
                h[(p, c)] = h[(j + 1, c)].clone();
                h[(j + 1, c)] = t;
            }
            for r in 0..n {
                let t = h[(r, p)].clone();
                h[(r, p)] = h[(r, j + 1)].clone();
                h[(r, j + 1)] = t;
            }
        }
        let inv = h[(j + 1, j)].inv().expect("non-zero pivot");
        for i in j + 2..n {
            if h[(i, j)].is_zero() {
                continue;
            }
            let f = h[(i, j)].mul_ref(&inv);
            for c in 0..n {
                let x = h[(j + 1, c)].clone();
                h[(i, c)].sub_mul_assign(&f, &x);
            }
            for r in 0..n {
                let x = h[(r, i)].clone();
                h[(r, j + 1)].add_mul_assign(&f, &x);
            }
        }
    }
    // p[k] is the charpoly of the leading k×k block
    let mut p: Vec<Vec<F>> = vec![vec![F::one()]];
    for k in 1..=n {
        let hk = &h[(k - 1, k - 1)];
        let prev = &p[k - 1];
        let mut cur = vec![F::zero(); k + 1];
        for (d, c) in prev.iter().enumerate() {
            cur[d + 1].add_assign_ref(c);
            cur[d].sub_mul_assign(hk, c);
        }
        let mut prod = F::one();
        for i in (1..k).rev() {
            prod = prod.mul_ref(&h[(i, i - 1)]);
            if prod.is_zero() {
                break;
            }
            let coef = h[(i - 1, k - 1)].mul_ref(&prod);
            if coef.is_zero() {
                continue;
            }
            for (d, c) in p[i - 1].iter().enumerate() {
                cur[d].sub_mul_assign(&coef, c);
            }
        }
        p.push(cur);
    }
    p.pop().expect("non-empty")
}

/// Eigenvalues of a rational matrix with algebraic multiplicities, sorted
/// increasingly. Errors unless every eigenvalue is rational.
///
/// With `d` the common denominator of the entries, `dA` is integral, so its
/// rational eigenvalues are integers bounded by the row-sum norm.
pub fn rational_eigenvalues(a: &QMat) -> Result<Vec<(Q, usize)>> {
    let n = a.rows();
    let mut d = BigInt::one();
    for x in a.data() {
        d = d.lcm(x.denom());
    }
    let dq = Q::from_integer(d.clone());
    let b = a.scale(&dq);
    let mut poly: Vec<BigInt> = charpoly(&b)
        .into_iter()
        .map(|c| c.to_integer())
        .collect();
    let mut out: Vec<(BigInt, usize)> = Vec::new();
    let mut zeros = 0;
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        zeros += 1;
    }
    if zeros > 0 {
        out.push((BigInt::zero(), zeros));
    }
    let mut bound = BigInt::zero();
    for i in 0..n {
        let s: BigInt = b.row(i).iter().map(|x| x.numer().abs()).sum();
        if s > bound {
            bound = s;
        }
    }
    let mut k = BigInt::one();
    while poly.len() > 1 && k <= bound {
        for cand in [k.clone(), -k.clone()] {
            let mut mult = 0;
            while poly.len() > 1 && (&poly[0] % &cand).is_zero() {
                match deflate(&poly, &cand) {
                    Some(q) => {
                        poly = q;
                        mult += 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        k += 1;
    }
    if poly.len() > 1 {
        return Err(Error::IrrationalEigenvalues);
    }
    let mut res: Vec<(Q, usize)> = out
        .into_iter()
        .map(|(k, m)| (Q::new(k, d.clone()), m))
        .collect();
    res.sort();
    Ok(res)
}

/// Divides by `x − r` when `r` is a root.
fn deflate(poly: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let deg = poly.len() - 1;
    let mut q = vec![BigInt::zero(); deg];
    let mut acc = BigInt::zero();
    for i in (1..=deg).rev() {
        acc = &acc * r + &poly[i];
        q[i - 1] = acc.clone();
    }
    let rem = &acc * r + &poly[0];
    rem.is_zero().then_some(q)
}

/// Decomposes the ambient space into joint generalized eigenspaces of
/// pairwise commuting rational matrices. Output is sorted by weight.
pub fn simultaneous_generalized_eigenspaces(mats: &[QMat]) -> Result<Vec<(Vec<Q>, Subspace<Q>)>> {
    let Some(first) = mats.first() else {
        return Err(Error::Invalid("no matrices".into()));
    };
    let n = first.rows();
    for (i, a) in mats.iter().enumerate() {
        if a.rows() != n || a.cols() != n {
            return Err(Error::Dimension("matrices of different sizes".into()));
        }
        for b in &mats[i + 1..] {
            if !a.commutes_with(b) {
                return Err(Error::NonCommuting);
            }
        }
    }
    let mut parts: Vec<(Vec<Q>, Subspace<Q>)> = vec![(Vec::new(), Subspace::full(n))];
    for a in mats {
        let mut next = Vec::new();
        for (w, sub) in parts {
            let r = sub.restrict(a)?;
            for (lam, mult) in rational_eigenvalues(&r)? {
                let shifted = r.sub(&Matrix::scalar(r.rows(), &lam));
                let k = kernel(&shifted.pow(mult));
                debug_assert_eq!(k.dim(), mult);
                let vecs: Vec<Vec<Q>> = (0..k.dim())
                    .map(|i| sub.combine(k.basis().row(i)))
                    .collect();
                let mut w2 = w.clone();
                w2.push(lam);
                next.push((w2, Subspace::span(n, &vecs)));
            }
        }
        parts = next;
    }
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q, qi};

    #[test]
    fn charpoly_small() {
        let a = QMat::from_ints(2, 2, &[1, 2, 3, 4]);
        assert_eq!(charpoly(&a), vec![qi(-2), qi(-5), qi(1)]);
        let c = QMat::from_ints(3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]);
        assert_eq!(charpoly(&c), vec![qi(-1), qi(0), qi(0), qi(1)]);
    }

    #[test]
    fn diagonal_and_jordan() {
        let d = QMat::diagonal(&[qi(1), qi(1), qi(2)]);
        let sp = simultaneous_generalized_eigenspaces(&[d]).unwrap();
        let dims: Vec<usize> = sp.iter().map(|(_, s)| s.dim()).collect();
        assert_eq!(dims, vec![2, 1]);
        let j = QMat::from_ints(2, 2, &[5, 1, 0, 5]);
        let sp = simultaneous_generalized_eigenspaces(&[j]).unwrap();
        assert_eq!(sp.len(), 1);
        assert_eq!(sp[0].0, vec![qi(5)]);
        assert_eq!(sp[0].1.dim(), 2);
    }

    #[test]
    fn fractional_and_irrational() {
        let a = QMat::diagonal(&[q(1, 2), q(-3, 4)]);
        let ev = rational_eigenvalues(&a).unwrap();
        assert_eq!(ev, vec![(q(-3, 4), 1), (q(1, 2), 1)]);
        let b = QMat::from_ints(2, 2, &[0, 2, 1, 0]);
        assert!(rational_eigenvalues(&b).is_err());
    }

    #[test]
    fn non_commuting_rejected() {
        let a = QMat::from_ints(2, 2, &[0, 1, 0, 0]);
        let b = QMat::from_ints(2, 2, &[0, 0, 1, 0]);
        assert!(matches!(
            simultaneous_generalized_eigenspaces(&[a, b]),
            Err(Error::NonCommuting)
        ));
    }
}
