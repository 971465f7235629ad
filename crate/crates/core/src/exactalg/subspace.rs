use super::{Field, Matrix};
use crate::{Error, Result};

/// Subspace of `F^n` held by its reduced row echelon basis. Two equal
/// subspaces have identical `basis` matrices.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_span(m: &Matrix<F>) -> Self {
        let (basis, pivots) = m.rref();
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn span(ambient: usize, vecs: &[Vec<F>]) -> Self {
        Self::row_span(&Matrix::from_rows(ambient, vecs.to_vec()))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (k, ck) in c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(self.basis.row(k)) {
                x.sub_mul_assign(ck, b);
            }
        }
        r.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, o: &Self) -> bool {
        (0..o.dim()).all(|i| self.contains(o.basis.row(i)))
    }

    /// Vectors `x` with `⟨x, b⟩ = 0` for every basis vector `b`, under the
    /// standard pairing.
    pub fn annihilator(&self) -> Self {
        kernel(&self.basis)
    }

    /// Matrix of `m` (acting on column vectors) restricted to this
    /// subspace, in the echelon basis. Errors if the subspace is not
    /// invariant.
    pub fn restrict(&self, m: &Matrix<F>) -> Result<Matrix<F>> {
        let k = self.dim();
        let mut out = Matrix::zeros(k, k);
        for j in 0..k {
            let img = m.mul_vec(self.basis.row(j));
            let c = self.coords(&img).ok_or(Error::NotContained)?;
            for (i, x) in c.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        Ok(out)
    }

    /// Vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ambient];
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(self.basis.row(k)) {
                x.add_mul_assign(c, b);
            }
        }
        v
    }
}

/// Right kernel `{v : M v = 0}`.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let n = m.cols();
    let (r, piv) = m.rref();
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    let mut vecs = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![F::zero(); n];
        v[f] = F::one();
        for (i, &p) in piv.iter().enumerate() {
            v[p] = r[(i, f)].neg_ref();
        }
        vecs.push(v);
    }
    Subspace::span(n, &vecs)
}

/// Column space of `m`.
pub fn image<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::row_span(&m.transpose())
}

fn same_ambient<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::Dimension(format!(
            "ambient {} vs {}",
            a.ambient, b.ambient
        )));
    }
    Ok(())
}

pub fn subspace_sum<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
    same_ambient(a, b)?;
    Ok(Subspace::row_span(&a.basis.vstack(&b.basis)))
}

/// `A ∩ B`, computed as the annihilator of `ann A + ann B`.
pub fn subspace_intersect<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>> {
    same_ambient(a, b)?;
    let s = subspace_sum(&a.annihilator(), &b.annihilator())?;
    Ok(s.annihilator())
}

/// `dim A − dim B` for `B ⊆ A`.
pub fn quotient_dim<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<usize> {
    same_ambient(a, b)?;
    if !a.contains_subspace(b) {
        return Err(Error::NotContained);
    }
    Ok(a.dim() - b.dim())
}

/// Incremental semi-echelon basis. Each stored row has a pivot entry equal
/// to one and zeros at the pivots of earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ambient: usize) -> Self {
        Echelon {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the stored rows in place.
    pub fn reduce(&self, v: &mut [F]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, b) in v.iter_mut().zip(row) {
                x.sub_mul_assign(&f, b);
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` if it is independent of the stored rows. Returns the reduced
    /// new row when it was added.
    pub fn insert(&mut self, v: &[F]) -> Option<&[F]> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let p = w.iter().position(|x| !x.is_zero())?;
        let inv = w[p].inv().expect("non-zero");
        for x in w.iter_mut() {
            *x = x.mul_ref(&inv);
        }
        self.rows.push(w);
        self.pivots.push(p);
        self.rows.last().map(|r| r.as_slice())
    }

    pub fn to_subspace(&self) -> Subspace<F> {
        Subspace::span(self.ambient, &self.rows)
    }
}

/// Smallest subspace containing `seeds` and stable under every matrix in
/// `gens` (acting on column vectors).
pub fn spin<F: Field>(gens: &[Matrix<F>], seeds: &[Vec<F>]) -> Subspace<F> {
    let n = seeds
        .first()
        .map(|s| s.len())
        .or_else(|| gens.first().map(|g| g.cols()))
        .unwrap_or(0);
    let mut ech = Echelon::new(n);
    let mut queue: Vec<Vec<F>> = Vec::new();
    for s in seeds {
        if let Some(r) = ech.insert(s) {
            queue.push(r.to_vec());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = g.mul_vec(&v);
            if let Some(r) = ech.insert(&w) {
                queue.push(r.to_vec());
            }
        }
        if ech.dim() == n {
            break;
        }
    }
    ech.to_subspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q, sqrt_of};
    use crate::{QMat, Scalar, Q};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    #[test]
    fn kernel_over_tower() {
        let s2 = sqrt_of(2);
        let m = Matrix::new(
            2,
            2,
            vec![Scalar::one(), s2.clone(), s2.clone(), Scalar::from_int(2)],
        );
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        let v = vec![s2.neg_ref(), Scalar::one()];
        assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        assert!(k.contains(&v));
    }

    #[test]
    fn trivial_kernels() {
        assert_eq!(kernel(&QMat::zeros(3, 3)).dim(), 3);
        assert_eq!(kernel(&QMat::identity(4)).dim(), 0);
        assert_eq!(image(&QMat::identity(4)).dim(), 4);
    }

    #[test]
    fn coordinate_planes() {
        let e = |i: usize| {
            let mut v = vec![Q::zero(); 4];
            v[i] = Q::one();
            v
        };
        let a = Subspace::span(4, &[e(0), e(1)]);
        let b = Subspace::span(4, &[e(2), e(3)]);
        assert_eq!(subspace_intersect(&a, &b).unwrap().dim(), 0);
        assert_eq!(subspace_sum(&a, &b).unwrap().dim(), 4);
        assert_eq!(subspace_intersect(&a, &a).unwrap(), a);
        assert!(quotient_dim(&a, &b).is_err());
    }

    #[test]
    fn spin_cyclic_shift() {
        let p = QMat::from_ints(3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]);
        let s = spin(std::slice::from_ref(&p), &[vec![q(1, 1), q(0, 1), q(0, 1)]]);
        assert_eq!(s.dim(), 3);
        let s = spin(&[p], &[vec![q(1, 1), q(1, 1), q(1, 1)]]);
        assert_eq!(s.dim(), 1);
    }

    fn small_mat(r: usize, c: usize) -> impl Strategy<Value = QMat> {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| QMat::from_ints(r, c, &v))
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_mat(4, 5)) {
            prop_assert_eq!(m.rank() + kernel(&m).dim(), 5);
            prop_assert_eq!(image(&m).dim(), m.rank());
        }

        #[test]
        fn echelon_canonical_under_change_of_basis(m in small_mat(3, 5), g in small_mat(3, 3)) {
            prop_assume!(g.rank() == 3);
            let a = Subspace::row_span(&m);
            let b = Subspace::row_span(&g.mul(&m));
            prop_assert_eq!(a.basis(), b.basis());
        }

        #[test]
        fn modular_identity(a in small_mat(2, 4), b in small_mat(3, 4)) {
            let a = Subspace::row_span(&a);
            let b = Subspace::row_span(&b);
            let s = subspace_sum(&a, &b).unwrap();
            let i = subspace_intersect(&a, &b).unwrap();
            // independent oracle: rank of the stacked bases
            prop_assert_eq!(s.dim(), a.basis().vstack(b.basis()).rank());
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(a.contains_subspace(&i) && b.contains_subspace(&i));
        }
    }
}
