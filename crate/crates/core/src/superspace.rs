//! Z₂-graded vector spaces, homogeneous bilinear forms, and graded
//! endomorphisms.
//!
//! Gram matrices store the raw pairings `gram[i][j] = ⟨vᵢ, vⱼ⟩`. Every sign
//! appearing in a formula is written explicitly at the use site; no
//! sign-twisted storage convention is used anywhere.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::{vec_is_zero, Matrix, Vector};
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_u8(p: u8) -> Parity {
        if p % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `(-1)^{|a||b|}` as a rational sign.
pub fn koszul_sign(a: Parity, b: Parity) -> Rational {
    if a == Parity::Odd && b == Parity::Odd {
        Rational::from(-1)
    } else {
        Rational::one()
    }
}

/// `(-1)^p`.
pub fn parity_sign(p: Parity) -> Rational {
    match p {
        Parity::Even => Rational::one(),
        Parity::Odd => Rational::from(-1),
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperSpace {
    parities: Vec<Parity>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VectorParity {
    Zero,
    Homogeneous(Parity),
    Mixed,
}

impl SuperSpace {
    pub fn new(parities: Vec<Parity>) -> Self {
        SuperSpace { parities }
    }

    /// Space with `even` even basis vectors followed by `odd` odd ones.
    pub fn with_sdim(even: usize, odd: usize) -> Self {
        let mut parities = vec![Parity::Even; even];
        parities.extend(vec![Parity::Odd; odd]);
        SuperSpace::new(parities)
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn even_dim(&self) -> usize {
        self.parities.iter().filter(|p| **p == Parity::Even).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn sdim(&self) -> (usize, usize) {
        (self.even_dim(), self.odd_dim())
    }

    pub fn vector_parity(&self, v: &[Rational]) -> VectorParity {
        assert_eq!(v.len(), self.dim());
        let mut found: Option<Parity> = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.parity(i)),
                Some(p) if p == self.parity(i) => {}
                Some(_) => return VectorParity::Mixed,
            }
        }
        match found {
            None => VectorParity::Zero,
            Some(p) => VectorParity::Homogeneous(p),
        }
    }

    /// Parity of a homogeneous vector; zero counts as even.
    pub fn homogeneous_parity(&self, v: &[Rational]) -> Result<Parity, Error> {
        match self.vector_parity(v) {
            VectorParity::Mixed => Err(Error::NonHomogeneous),
            VectorParity::Zero => Ok(Parity::Even),
            VectorParity::Homogeneous(p) => Ok(p),
        }
    }
}

/// A subspace kept as a reduced-echelon basis, so equal subspaces compare
/// equal structurally.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_spanning(ambient, (0..ambient).map(|i| crate::matrix::basis_vec(ambient, i)).collect())
    }

    pub fn from_spanning(ambient: usize, vectors: Vec<Vector>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "spanning vector of wrong length");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let (red, pivots) = Matrix::from_rows(vectors).rref();
        let basis = (0..pivots.len()).map(|i| red.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for b in &self.basis {
            let pivot = b.iter().position(|x| !x.is_zero()).expect("nonzero basis vector");
            if !r[pivot].is_zero() {
                let factor = r[pivot].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        vec_is_zero(&r)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut all = self.basis.clone();
        all.extend(other.basis.clone());
        Subspace::from_spanning(self.ambient, all)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Solve sum x_i a_i = sum y_j b_j via the kernel of [A^T | -B^T].
        let p = self.basis.len();
        let q = other.basis.len();
        let m = Matrix::from_fn(self.ambient, p + q, |i, j| {
            if j < p {
                self.basis[j][i].clone()
            } else {
                -&other.basis[j - p][i]
            }
        });
        let vectors = m
            .kernel()
            .into_iter()
            .map(|coeffs| {
                let mut v = crate::matrix::zero_vec(self.ambient);
                for (x, b) in coeffs[..p].iter().zip(&self.basis) {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = &*vi + &(x * bi);
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.ambient, vectors)
    }

    /// Splits the echelon basis into homogeneous vectors, merged in pivot
    /// order. Fails if the subspace is not graded.
    pub fn graded_basis(&self, space: &SuperSpace) -> Result<Vec<Vector>, Error> {
        assert_eq!(space.dim(), self.ambient);
        let mut parts = Vec::new();
        for p in [Parity::Even, Parity::Odd] {
            let projected: Vec<Vector> = self
                .basis
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .map(|(i, x)| if space.parity(i) == p { x.clone() } else { Rational::zero() })
                        .collect()
                })
                .collect();
            let sub = Subspace::from_spanning(self.ambient, projected);
            parts.extend(sub.basis.into_iter());
        }
        let graded = Subspace::from_spanning(self.ambient, parts.clone());
        if graded.dim() != self.dim() {
            return Err(Error::NonHomogeneous);
        }
        parts.sort_by_key(|v| v.iter().position(|x| !x.is_zero()).unwrap_or(self.ambient));
        Ok(parts)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?}", self.basis)
    }
}

/// Violations reported by `check_form`, in the order they are checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FormViolation {
    Grading { row: usize, col: usize },
    SuperSymmetry { row: usize, col: usize },
    Degenerate,
}

pub fn check_form(space: &SuperSpace, gram: &Matrix, parity: Parity) -> Option<FormViolation> {
    let n = space.dim();
    assert!(gram.rows() == n && gram.cols() == n, "gram matrix of wrong size");
    for i in 0..n {
        for j in 0..n {
            let expected = space.parity(i).add(space.parity(j));
            if expected != parity && !gram.get(i, j).is_zero() {
                return Some(FormViolation::Grading { row: i, col: j });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let sym = &koszul_sign(space.parity(i), space.parity(j)) * gram.get(j, i);
            if gram.get(i, j) != &sym {
                return Some(FormViolation::SuperSymmetry { row: i, col: j });
            }
        }
    }
    if gram.det().is_zero() {
        return Some(FormViolation::Degenerate);
    }
    None
}

/// A homogeneous, super-symmetric, non-degenerate bilinear form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    space: SuperSpace,
    gram: Matrix,
    parity: Parity,
}

impl BilinearForm {
    pub fn new(space: SuperSpace, gram: Matrix, parity: Parity) -> Result<Self, Error> {
        match check_form(&space, &gram, parity) {
            None => Ok(BilinearForm { space, gram, parity }),
            Some(FormViolation::Degenerate) => Err(Error::SingularForm),
            Some(v) => Err(Error::ParityMismatch(format!("invalid gram matrix: {v:?}"))),
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let gu = self.gram.transpose().mul_vec(u);
        gu.iter().zip(v).map(|(a, b)| a * b).fold(Rational::zero(), |acc, x| acc + x)
    }

    /// The covector `⟨u, ·⟩` in coordinates.
    pub fn covector(&self, u: &[Rational]) -> Vector {
        (0..self.dim()).map(|j| self.eval(u, &crate::matrix::basis_vec(self.dim(), j))).collect()
    }

    /// Dimension parity constraints forced by non-degeneracy: an even form
    /// needs an even-dimensional odd part, an odd form equal parts.
    pub fn parity_dimension_ok(&self) -> bool {
        match self.parity {
            Parity::Even => self.space.odd_dim() % 2 == 0,
            Parity::Odd => self.space.even_dim() == self.space.odd_dim(),
        }
    }

    /// Gram matrix of the restriction to the span of `basis`.
    pub fn restricted_gram(&self, basis: &[Vector]) -> Matrix {
        Matrix::from_fn(basis.len(), basis.len(), |a, b| self.eval(&basis[a], &basis[b]))
    }

    /// Basis of `{x : ⟨v, x⟩ = 0 for all v in the subspace}`.
    pub fn orthogonal_complement(&self, subspace: &Subspace) -> Subspace {
        if subspace.is_zero() {
            return Subspace::full(self.dim());
        }
        let rows = subspace.basis().iter().map(|u| self.covector(u)).collect();
        Subspace::from_spanning(self.dim(), Matrix::from_rows(rows).kernel())
    }

    /// The metric adjoint `f*` with `⟨f(u), v⟩ = (−1)^{|f||u|}⟨u, f*(v)⟩`.
    pub fn adjoint(&self, f: &Endo) -> Endo {
        assert_eq!(f.space(), &self.space);
        let n = self.dim();
        let sign = Matrix::from_fn(n, n, |i, j| {
            if i == j && f.parity() == Parity::Odd {
                parity_sign(self.space.parity(i))
            } else if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let ginv = self.gram.inverse().expect("form is non-degenerate");
        let mat = ginv.mul(&sign).mul(&f.matrix().transpose()).mul(&self.gram);
        Endo::new(self.space.clone(), mat, f.parity()).expect("adjoint preserves homogeneity")
    }

    pub fn is_antisymmetric(&self, f: &Endo) -> bool {
        self.adjoint(f).matrix() == &f.matrix().neg()
    }

    pub fn is_symmetric(&self, f: &Endo) -> bool {
        &self.adjoint(f) == f
    }
}

/// A homogeneous endomorphism stored column-wise: column `i` is the image of
/// basis vector `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Endo {
    space: SuperSpace,
    matrix: Matrix,
    parity: Parity,
}

impl Endo {
    pub fn new(space: SuperSpace, matrix: Matrix, parity: Parity) -> Result<Self, Error> {
        let n = space.dim();
        assert!(matrix.rows() == n && matrix.cols() == n, "endomorphism matrix of wrong size");
        for k in 0..n {
            for i in 0..n {
                if !matrix.get(k, i).is_zero() && space.parity(k) != space.parity(i).add(parity) {
                    return Err(Error::ParityMismatch(format!(
                        "entry ({k},{i}) breaks homogeneity of parity {parity:?}"
                    )));
                }
            }
        }
        Ok(Endo { space, matrix, parity })
    }

    pub fn zero(space: SuperSpace, parity: Parity) -> Self {
        let n = space.dim();
        Endo { space, matrix: Matrix::zero(n, n), parity }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.matrix.mul_vec(v)
    }

    pub fn compose(&self, other: &Endo) -> Endo {
        assert_eq!(self.space, other.space);
        Endo {
            space: self.space.clone(),
            matrix: self.matrix.mul(&other.matrix),
            parity: self.parity.add(other.parity),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn neg(&self) -> Endo {
        Endo { space: self.space.clone(), matrix: self.matrix.neg(), parity: self.parity }
    }

    /// Super-commutator `[f, g] = f∘g − (−1)^{|f||g|} g∘f`.
    pub fn super_commutator(&self, other: &Endo) -> Endo {
        let fg = self.matrix.mul(&other.matrix);
        let gf = other.matrix.mul(&self.matrix).scale(&koszul_sign(self.parity, other.parity));
        Endo {
            space: self.space.clone(),
            matrix: fg.sub(&gf),
            parity: self.parity.add(other.parity),
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        let n = self.space.dim();
        let mut power = self.matrix.clone();
        for _ in 0..n {
            if power.is_zero() {
                return true;
            }
            power = power.mul(&self.matrix);
        }
        power.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn identity_form(n: usize) -> BilinearForm {
        BilinearForm::new(SuperSpace::with_sdim(n, 0), Matrix::identity(n), Parity::Even).unwrap()
    }

    #[test]
    fn form_checks() {
        // Identity gram on an all-even space.
        let space = SuperSpace::with_sdim(2, 0);
        assert_eq!(check_form(&space, &Matrix::identity(2), Parity::Even), None);

        // Antisymmetric gram on the all-odd space is super-symmetric.
        let odd = SuperSpace::with_sdim(0, 2);
        let sympl = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]);
        assert_eq!(check_form(&odd, &sympl, Parity::Even), None);

        // Odd pairing of one even with one odd index.
        let mixed = SuperSpace::new(vec![Parity::Even, Parity::Odd]);
        let hyp = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        assert_eq!(check_form(&mixed, &hyp, Parity::Odd), None);

        // Same gram declared even violates grading.
        assert_eq!(
            check_form(&mixed, &hyp, Parity::Even),
            Some(FormViolation::Grading { row: 0, col: 1 })
        );

        // Symmetric gram on the odd part violates super-symmetry.
        let bad = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        assert_eq!(
            check_form(&odd, &bad, Parity::Even),
            Some(FormViolation::SuperSymmetry { row: 0, col: 1 })
        );

        assert_eq!(check_form(&space, &Matrix::zero(2, 2), Parity::Even), Some(FormViolation::Degenerate));
    }

    #[test]
    fn parity_dimension_guard() {
        let ok_even = identity_form(3);
        assert!(ok_even.parity_dimension_ok());

        let odd_form = BilinearForm::new(
            SuperSpace::new(vec![Parity::Even, Parity::Odd]),
            Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]),
            Parity::Odd,
        )
        .unwrap();
        assert!(odd_form.parity_dimension_ok());

        // sdim (2|1) admits no even form; the guard reports it.
        let space = SuperSpace::new(vec![Parity::Even, Parity::Even, Parity::Odd]);
        let gram = Matrix::identity(3);
        // A (2|1) identity gram already violates grading, so build the guard
        // directly on the space.
        assert!(check_form(&space, &gram, Parity::Even).is_some());
        let f = BilinearForm { space, gram, parity: Parity::Even };
        assert!(!f.parity_dimension_ok());
    }

    #[test]
    fn orthogonal_complement_cases() {
        // Gram with ⟨e1,e3⟩ = ⟨e3,e1⟩ = 1 and ⟨e2,e2⟩ = 1.
        let gram = Matrix::from_rows(vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
        ]);
        let form = BilinearForm::new(SuperSpace::with_sdim(3, 0), gram, Parity::Even).unwrap();

        let whole = Subspace::full(3);
        assert!(form.orthogonal_complement(&whole).is_zero());
        assert_eq!(form.orthogonal_complement(&Subspace::zero(3)), whole);

        let sub = Subspace::from_spanning(
            3,
            vec![crate::matrix::basis_vec(3, 1), crate::matrix::basis_vec(3, 2)],
        );
        let comp = form.orthogonal_complement(&sub);
        assert_eq!(comp.dim(), 1);
        assert!(comp.contains(&crate::matrix::basis_vec(3, 2)));
    }

    #[test]
    fn complement_is_involutive() {
        let gram = Matrix::from_rows(vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
        ]);
        let form = BilinearForm::new(SuperSpace::with_sdim(3, 0), gram, Parity::Even).unwrap();
        for vectors in [
            vec![vec![rat(1), rat(2), rat(0)]],
            vec![vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(1)]],
        ] {
            let sub = Subspace::from_spanning(3, vectors);
            let twice = form.orthogonal_complement(&form.orthogonal_complement(&sub));
            assert_eq!(twice, sub);
        }
    }

    #[test]
    fn adjoint_under_identity_gram_is_transpose() {
        let form = identity_form(2);
        let rot = Endo::new(
            form.space().clone(),
            Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]),
            Parity::Even,
        )
        .unwrap();
        let adj = form.adjoint(&rot);
        assert_eq!(adj.matrix(), &rot.matrix().transpose());
        assert_eq!(adj.matrix(), &rot.matrix().neg());
        assert!(form.is_antisymmetric(&rot));

        let id = Endo::new(form.space().clone(), Matrix::identity(2), Parity::Even).unwrap();
        assert_eq!(form.adjoint(&id), id);
    }

    #[test]
    fn adjoint_defining_identity_for_odd_map() {
        // sdim (1|1) hyperbolic odd form, odd endomorphism.
        let space = SuperSpace::new(vec![Parity::Even, Parity::Odd]);
        let gram = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        let form = BilinearForm::new(space.clone(), gram, Parity::Odd).unwrap();
        let xi = Endo::new(
            space.clone(),
            Matrix::from_rows(vec![vec![rat(0), rat(2)], vec![rat(3), rat(0)]]),
            Parity::Odd,
        )
        .unwrap();
        let adj = form.adjoint(&xi);
        // Oracle: expand ⟨ξ(u), v⟩ = (−1)^{|u|}⟨u, ξ*(v)⟩ on all basis pairs.
        for i in 0..2 {
            for j in 0..2 {
                let u = crate::matrix::basis_vec(2, i);
                let v = crate::matrix::basis_vec(2, j);
                let lhs = form.eval(&xi.apply(&u), &v);
                let sign = koszul_sign(space.parity(i), Parity::Odd);
                let rhs = &sign * &form.eval(&u, &adj.apply(&v));
                assert_eq!(lhs, rhs, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn antisymmetric_diag_on_odd_pair() {
        // D = diag(a, -a) on a two-dimensional odd space with pairing gram.
        let space = SuperSpace::with_sdim(0, 2);
        let gram = Matrix::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]);
        let form = BilinearForm::new(space.clone(), gram, Parity::Even).unwrap();
        let d = Endo::new(
            space.clone(),
            Matrix::from_rows(vec![vec![rat(5), rat(0)], vec![rat(0), rat(-5)]]),
            Parity::Even,
        )
        .unwrap();
        assert!(form.is_antisymmetric(&d));
        let zero = Endo::zero(space, Parity::Even);
        assert!(form.is_antisymmetric(&zero));
        assert!(form.is_symmetric(&zero));
    }

    #[test]
    fn subspace_operations() {
        let a = Subspace::from_spanning(3, vec![vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]]);
        let b = Subspace::from_spanning(3, vec![vec![rat(1), rat(1), rat(1)]]);
        assert!(a.contains(&vec![rat(2), rat(2), rat(5)]));
        assert!(a.contains_subspace(&b));
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&vec![rat(1), rat(1), rat(1)]));
        assert_eq!(a.sum(&b), a);
    }

    #[test]
    fn graded_basis_splits_parities() {
        let space = SuperSpace::new(vec![Parity::Even, Parity::Odd, Parity::Even]);
        let sub = Subspace::from_spanning(3, vec![vec![rat(1), rat(1), rat(0)], vec![rat(1), rat(-1), rat(0)]]);
        let basis = sub.graded_basis(&space).unwrap();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(matches!(space.vector_parity(v), VectorParity::Homogeneous(_)));
        }

        let skew = Subspace::from_spanning(3, vec![vec![rat(1), rat(1), rat(0)]]);
        assert!(skew.graded_basis(&space).is_err());
    }
}
