//! Superalgebras as structure-constant tensors, multiplication operators
//! with their Koszul signs, and the graded identity checkers.
//!
//! All identity checks sweep basis tuples; bilinearity makes that complete.
//! Failing checks report the first witness in lexicographic index order so
//! test output is deterministic.

use serde::Serialize;

use crate::error::Error;
use crate::matrix::{basis_vec, vec_is_zero, zero_vec, Matrix, Vector};
use crate::rational::Rational;
use crate::superspace::{koszul_sign, Endo, Subspace, SuperSpace};

/// Outcome of a single identity sweep.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

/// First failing tuple, with the residual that should have been zero.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub residual: Vec<Rational>,
    pub note: String,
}

impl IdentityReport {
    pub fn pass(identity: &str) -> Self {
        IdentityReport { identity: identity.to_string(), pass: true, witness: None }
    }

    pub fn fail(identity: &str, indices: Vec<usize>, residual: Vec<Rational>, note: &str) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            pass: false,
            witness: Some(Witness { indices, residual, note: note.to_string() }),
        }
    }
}

/// Several identity reports rolled into one verdict.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub reports: Vec<IdentityReport>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn new(name: &str, reports: Vec<IdentityReport>) -> Self {
        let pass = reports.iter().all(|r| r.pass);
        SuiteReport { name: name.to_string(), reports, pass }
    }

    pub fn first_failure(&self) -> Option<&IdentityReport> {
        self.reports.iter().find(|r| !r.pass)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    Solvable,
    LeftNilpotent,
    RightNilpotent,
    Nilpotent,
}

/// A superalgebra given by its structure constants: `c[i][j][k]` is the
/// coefficient of basis vector `k` in the product of basis vectors `i`
/// and `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperAlgebra {
    space: SuperSpace,
    c: Vec<Rational>,
}

impl SuperAlgebra {
    pub fn trivial(space: SuperSpace) -> Self {
        let n = space.dim();
        SuperAlgebra { space, c: vec![Rational::zero(); n * n * n] }
    }

    pub fn new(space: SuperSpace, c: Vec<Rational>) -> Result<Self, Error> {
        let n = space.dim();
        assert_eq!(c.len(), n * n * n, "structure tensor of wrong size");
        let algebra = SuperAlgebra { space, c };
        algebra.check_grading()?;
        Ok(algebra)
    }

    pub fn from_products(
        space: SuperSpace,
        entries: &[(usize, usize, usize, Rational)],
    ) -> Result<Self, Error> {
        let n = space.dim();
        let mut c = vec![Rational::zero(); n * n * n];
        for (i, j, k, v) in entries {
            c[(i * n + j) * n + k] = &c[(i * n + j) * n + k] + v;
        }
        SuperAlgebra::new(space, c)
    }

    fn check_grading(&self) -> Result<(), Error> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let expected = self.space.parity(i).add(self.space.parity(j));
                for k in 0..n {
                    if !self.c(i, j, k).is_zero() && self.space.parity(k) != expected {
                        return Err(Error::ParityMismatch(format!(
                            "product of {i} and {j} has a component on {k} of the wrong parity"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.c(i, j, k).is_zero() {
                        out.push((i, j, k, self.c(i, j, k).clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        (0..n).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Bilinear extension of the structure constants.
    pub fn product(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for k in 0..n {
                    let cijk = self.c(i, j, k);
                    if !cijk.is_zero() {
                        out[k] = &out[k] + &(&uv * cijk);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `L_u : v ↦ u•v` for homogeneous `u`.
    pub fn left_mul(&self, u: &[Rational]) -> Result<Endo, Error> {
        let parity = self.space.homogeneous_parity(u)?;
        let n = self.dim();
        let mat = Matrix::from_fn(n, n, |k, j| {
            let mut acc = Rational::zero();
            for i in 0..n {
                if !u[i].is_zero() && !self.c(i, j, k).is_zero() {
                    acc = acc + (&u[i] * self.c(i, j, k));
                }
            }
            acc
        });
        Endo::new(self.space.clone(), mat, parity)
    }

    /// Matrix of `R_u : v ↦ (−1)^{|u||v|} v•u` for homogeneous `u`. The
    /// Koszul sign lives in the operator itself.
    pub fn right_mul(&self, u: &[Rational]) -> Result<Endo, Error> {
        let parity = self.space.homogeneous_parity(u)?;
        let n = self.dim();
        let mat = Matrix::from_fn(n, n, |k, j| {
            let mut acc = Rational::zero();
            for i in 0..n {
                if !u[i].is_zero() && !self.c(j, i, k).is_zero() {
                    acc = acc + (&u[i] * self.c(j, i, k));
                }
            }
            &koszul_sign(parity, self.space.parity(j)) * &acc
        });
        Endo::new(self.space.clone(), mat, parity)
    }

    pub fn left_mul_basis(&self, i: usize) -> Endo {
        self.left_mul(&basis_vec(self.dim(), i)).expect("basis vectors are homogeneous")
    }

    pub fn right_mul_basis(&self, i: usize) -> Endo {
        self.right_mul(&basis_vec(self.dim(), i)).expect("basis vectors are homogeneous")
    }

    /// `ad_u = L_u − R_u` for homogeneous `u`.
    pub fn ad(&self, u: &[Rational]) -> Result<Endo, Error> {
        let l = self.left_mul(u)?;
        let r = self.right_mul(u)?;
        Endo::new(self.space.clone(), l.matrix().sub(r.matrix()), l.parity())
    }

    /// Structure constants of the super-commutator `[u,v] = u•v − (−1)^{|u||v|} v•u`.
    pub fn commutator(&self) -> SuperAlgebra {
        let n = self.dim();
        let mut c = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space.parity(i), self.space.parity(j));
                for k in 0..n {
                    c[(i * n + j) * n + k] = self.c(i, j, k) - &(&sign * self.c(j, i, k));
                }
            }
        }
        SuperAlgebra { space: self.space.clone(), c }
    }

    /// Structure constants of the anti-commutator `u•v + (−1)^{|u||v|} v•u`.
    pub fn anticommutator(&self) -> SuperAlgebra {
        let n = self.dim();
        let mut c = vec![Rational::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space.parity(i), self.space.parity(j));
                for k in 0..n {
                    c[(i * n + j) * n + k] = self.c(i, j, k) + &(&sign * self.c(j, i, k));
                }
            }
        }
        SuperAlgebra { space: self.space.clone(), c }
    }

    fn associator(&self, i: usize, j: usize, k: usize) -> Vector {
        let ij = self.basis_product(i, j);
        let jk = self.basis_product(j, k);
        let left = self.product(&ij, &basis_vec(self.dim(), k));
        let right = self.product(&basis_vec(self.dim(), i), &jk);
        crate::matrix::vec_sub(&left, &right)
    }

    /// Left-symmetry: `(u,v,w) = (−1)^{|u||v|}(v,u,w)` on all basis triples.
    pub fn check_left_symmetric(&self) -> IdentityReport {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space.parity(i), self.space.parity(j));
                for k in 0..n {
                    let lhs = self.associator(i, j, k);
                    let rhs = crate::matrix::vec_scale(&self.associator(j, i, k), &sign);
                    let residual = crate::matrix::vec_sub(&lhs, &rhs);
                    if !vec_is_zero(&residual) {
                        return IdentityReport::fail(
                            "left_symmetric",
                            vec![i, j, k],
                            residual,
                            "(u,v,w) - (-1)^{|u||v|}(v,u,w)",
                        );
                    }
                }
            }
        }
        IdentityReport::pass("left_symmetric")
    }

    /// Novikov operator identities: `L_{[u,v]} = [L_u, L_v]` and
    /// `R_u∘R_v = (−1)^{|u||v|} R_v∘R_u` on homogeneous basis pairs.
    pub fn check_novikov(&self) -> IdentityReport {
        let n = self.dim();
        let left: Vec<Endo> = (0..n).map(|i| self.left_mul_basis(i)).collect();
        let right: Vec<Endo> = (0..n).map(|i| self.right_mul_basis(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let bracket = crate::matrix::vec_sub(
                    &self.basis_product(i, j),
                    &crate::matrix::vec_scale(
                        &self.basis_product(j, i),
                        &koszul_sign(self.space.parity(i), self.space.parity(j)),
                    ),
                );
                let l_bracket = self.left_mul(&bracket).expect("brackets of basis vectors are homogeneous");
                let commutator = left[i].super_commutator(&left[j]);
                let res = l_bracket.matrix().sub(commutator.matrix());
                if !res.is_zero() {
                    return IdentityReport::fail(
                        "novikov_left",
                        vec![i, j],
                        res.row(0).to_vec(),
                        "L_{[u,v]} - [L_u, L_v]",
                    );
                }
                let sign = koszul_sign(self.space.parity(i), self.space.parity(j));
                let rr = right[i].matrix().mul(right[j].matrix());
                let rr_swapped = right[j].matrix().mul(right[i].matrix()).scale(&sign);
                let res = rr.sub(&rr_swapped);
                if !res.is_zero() {
                    return IdentityReport::fail(
                        "novikov_right",
                        vec![i, j],
                        res.row(0).to_vec(),
                        "R_u∘R_v - (-1)^{|u||v|} R_v∘R_u",
                    );
                }
            }
        }
        IdentityReport::pass("novikov")
    }

    /// L-identity: `u•(v•w) = (−1)^{|u||v|} v•(u•w)` on all basis triples.
    pub fn check_l_identity(&self) -> IdentityReport {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space.parity(i), self.space.parity(j));
                for k in 0..n {
                    let lhs = self.product(&basis_vec(n, i), &self.basis_product(j, k));
                    let rhs = crate::matrix::vec_scale(
                        &self.product(&basis_vec(n, j), &self.basis_product(i, k)),
                        &sign,
                    );
                    let residual = crate::matrix::vec_sub(&lhs, &rhs);
                    if !vec_is_zero(&residual) {
                        return IdentityReport::fail(
                            "l_identity",
                            vec![i, j, k],
                            residual,
                            "u•(v•w) - (-1)^{|u||v|} v•(u•w)",
                        );
                    }
                }
            }
        }
        IdentityReport::pass("l_identity")
    }

    /// R-identity: `(w•u)•v = (−1)^{|u||v|} (w•v)•u` on all basis triples,
    /// with `(u,v,w)` matching the reported index order.
    pub fn check_r_identity(&self) -> IdentityReport {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space.parity(i), self.space.parity(j));
                for k in 0..n {
                    let lhs = self.product(&self.basis_product(k, i), &basis_vec(n, j));
                    let rhs = crate::matrix::vec_scale(
                        &self.product(&self.basis_product(k, j), &basis_vec(n, i)),
                        &sign,
                    );
                    let residual = crate::matrix::vec_sub(&lhs, &rhs);
                    if !vec_is_zero(&residual) {
                        return IdentityReport::fail(
                            "r_identity",
                            vec![i, j, k],
                            residual,
                            "(w•u)•v - (-1)^{|u||v|} (w•v)•u",
                        );
                    }
                }
            }
        }
        IdentityReport::pass("r_identity")
    }

    pub fn check_lr(&self) -> IdentityReport {
        let l = self.check_l_identity();
        if !l.pass {
            return l;
        }
        let r = self.check_r_identity();
        if !r.pass {
            return r;
        }
        IdentityReport::pass("lr_identity")
    }

    /// Left-Leibniz: `(u•v)•w = u•(v•w) − (−1)^{|u||v|} v•(u•w)`.
    pub fn check_left_leibniz(&self) -> IdentityReport {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space.parity(i), self.space.parity(j));
                for k in 0..n {
                    let lhs = self.product(&self.basis_product(i, j), &basis_vec(n, k));
                    let a = self.product(&basis_vec(n, i), &self.basis_product(j, k));
                    let b = crate::matrix::vec_scale(
                        &self.product(&basis_vec(n, j), &self.basis_product(i, k)),
                        &sign,
                    );
                    let residual = crate::matrix::vec_sub(&lhs, &crate::matrix::vec_sub(&a, &b));
                    if !vec_is_zero(&residual) {
                        return IdentityReport::fail(
                            "left_leibniz",
                            vec![i, j, k],
                            residual,
                            "(u•v)•w - u•(v•w) + (-1)^{|u||v|} v•(u•w)",
                        );
                    }
                }
            }
        }
        IdentityReport::pass("left_leibniz")
    }

    /// Graded antisymmetry plus the super Jacobi identity, with the product
    /// read as a bracket.
    pub fn check_super_jacobi(&self) -> IdentityReport {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space.parity(i), self.space.parity(j));
                let residual = crate::matrix::vec_add(
                    &self.basis_product(i, j),
                    &crate::matrix::vec_scale(&self.basis_product(j, i), &sign),
                );
                if !vec_is_zero(&residual) {
                    return IdentityReport::fail(
                        "super_antisymmetry",
                        vec![i, j],
                        residual,
                        "[u,v] + (-1)^{|u||v|}[v,u]",
                    );
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (pi, pj, pk) = (self.space.parity(i), self.space.parity(j), self.space.parity(k));
                    let mut residual = zero_vec(n);
                    let terms = [
                        (koszul_sign(pi, pk), i, self.basis_product(j, k)),
                        (koszul_sign(pj, pi), j, self.basis_product(k, i)),
                        (koszul_sign(pk, pj), k, self.basis_product(i, j)),
                    ];
                    for (sign, a, inner) in terms {
                        let term = self.product(&basis_vec(n, a), &inner);
                        residual = crate::matrix::vec_add(&residual, &crate::matrix::vec_scale(&term, &sign));
                    }
                    if !vec_is_zero(&residual) {
                        return IdentityReport::fail(
                            "super_jacobi",
                            vec![i, j, k],
                            residual,
                            "graded Jacobi sum",
                        );
                    }
                }
            }
        }
        IdentityReport::pass("super_jacobi")
    }

    /// `[[A,A],[A,A]] = 0` for a Lie superalgebra product.
    pub fn check_two_step_solvable(&self) -> Result<bool, Error> {
        let jacobi = self.check_super_jacobi();
        if !jacobi.pass {
            return Err(Error::NotLie(format!(
                "{} fails at {:?}",
                jacobi.identity,
                jacobi.witness.map(|w| w.indices)
            )));
        }
        let derived = self.span_product();
        Ok(self.subspace_product(&derived, &derived).is_zero())
    }

    /// Echelon basis of `span{vᵢ•vⱼ}`.
    pub fn span_product(&self) -> Subspace {
        let n = self.dim();
        let mut vectors = Vec::new();
        for i in 0..n {
            for j in 0..n {
                vectors.push(self.basis_product(i, j));
            }
        }
        Subspace::from_spanning(n, vectors)
    }

    /// Echelon basis of the derived ideal `span{[vᵢ,vⱼ]}`.
    pub fn span_derived(&self) -> Subspace {
        self.commutator().span_product()
    }

    /// Span of products of two subspaces.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for x in u.basis() {
            for y in v.basis() {
                vectors.push(self.product(x, y));
            }
        }
        Subspace::from_spanning(self.dim(), vectors)
    }

    /// Left, right, and two-sided normalizers: kernels of `u ↦ L_u` and
    /// `u ↦ R_u`, and their intersection.
    pub fn normalizers(&self) -> (Subspace, Subspace, Subspace) {
        let n = self.dim();
        let left_rows = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.c(i, j, k).clone()
        });
        let right_rows = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.c(j, i, k).clone()
        });
        let nl = Subspace::from_spanning(n, left_rows.kernel());
        let nr = Subspace::from_spanning(n, right_rows.kernel());
        let both = nl.intersect(&nr);
        (nl, nr, both)
    }

    /// Descending chain for the requested series, until stabilization.
    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        match kind {
            SeriesKind::Solvable => self.simple_series(|this, prev| this.subspace_product(prev, prev)),
            SeriesKind::LeftNilpotent => {
                let full = full.clone();
                self.simple_series(move |this, prev| this.subspace_product(&full, prev))
            }
            SeriesKind::RightNilpotent => {
                let full = full.clone();
                self.simple_series(move |this, prev| this.subspace_product(prev, &full))
            }
            SeriesKind::Nilpotent => {
                let mut terms = vec![full];
                loop {
                    let next_index = terms.len() + 1;
                    let mut next = Subspace::zero(self.dim());
                    for i in 1..next_index {
                        let j = next_index - i;
                        next = next.sum(&self.subspace_product(&terms[i - 1], &terms[j - 1]));
                    }
                    if next == *terms.last().unwrap() {
                        break;
                    }
                    let stop = next.is_zero();
                    terms.push(next);
                    if stop {
                        break;
                    }
                }
                terms
            }
        }
    }

    fn simple_series(&self, step: impl Fn(&Self, &Subspace) -> Subspace) -> Vec<Subspace> {
        let mut terms = vec![Subspace::full(self.dim())];
        loop {
            let next = step(self, terms.last().unwrap());
            if next == *terms.last().unwrap() {
                break;
            }
            let stop = next.is_zero();
            terms.push(next);
            if stop {
                break;
            }
        }
        terms
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::Nilpotent).last().unwrap().is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    /// A³₂ with λ = ε = 1: f₁•e₁ = e₂, f₁•e₂ = −e₁ on an all-even space.
    fn a3_2() -> SuperAlgebra {
        SuperAlgebra::from_products(
            SuperSpace::with_sdim(3, 0),
            &[(2, 0, 1, rat(1)), (2, 1, 0, rat(-1))],
        )
        .unwrap()
    }

    /// A²₂ with α = 1: f₁•f₁ = e₁ on sdim (1|1).
    fn a2_2() -> SuperAlgebra {
        SuperAlgebra::from_products(SuperSpace::with_sdim(1, 1), &[(1, 1, 0, rat(1))]).unwrap()
    }

    /// A³₅ with λ = 1: e₁•e₁ = e₂, e₁•e₂ = −e₃.
    fn a3_5() -> SuperAlgebra {
        SuperAlgebra::from_products(
            SuperSpace::with_sdim(3, 0),
            &[(0, 0, 1, rat(1)), (0, 1, 2, rat(-1))],
        )
        .unwrap()
    }

    #[test]
    fn grading_is_enforced() {
        // An even•even product with an odd component must be rejected.
        let bad = SuperAlgebra::from_products(SuperSpace::with_sdim(1, 1), &[(0, 0, 1, rat(1))]);
        assert!(matches!(bad, Err(Error::ParityMismatch(_))));
    }

    #[test]
    fn products_match_tables() {
        let a = a3_2();
        let f1 = basis_vec(3, 2);
        let e1 = basis_vec(3, 0);
        assert_eq!(a.product(&f1, &e1), vec![rat(0), rat(1), rat(0)]);

        let trivial = SuperAlgebra::trivial(SuperSpace::with_sdim(2, 0));
        assert!(vec_is_zero(&trivial.product(&basis_vec(2, 0), &basis_vec(2, 1))));

        let b = a2_2();
        assert_eq!(b.product(&basis_vec(2, 1), &basis_vec(2, 1)), vec![rat(1), rat(0)]);
    }

    #[test]
    fn left_and_right_multiplication() {
        let a = a3_2();
        let l = a.left_mul_basis(2);
        assert_eq!(l.apply(&basis_vec(3, 0)), vec![rat(0), rat(1), rat(0)]);
        assert_eq!(l.apply(&basis_vec(3, 1)), vec![rat(-1), rat(0), rat(0)]);
        assert!(vec_is_zero(&l.apply(&basis_vec(3, 2))));

        // Koszul sign: for odd u and odd v, R_u(v) = -v•u.
        let b = a2_2();
        let r = b.right_mul_basis(1);
        assert_eq!(r.apply(&basis_vec(2, 1)), vec![rat(-1), rat(0)]);

        let mixed = vec![rat(1), rat(1)];
        assert!(matches!(b.left_mul(&mixed), Err(Error::NonHomogeneous)));
    }

    #[test]
    fn ad_is_left_minus_right() {
        for a in [a3_2(), a2_2(), a3_5()] {
            for i in 0..a.dim() {
                let u = basis_vec(a.dim(), i);
                let ad = a.ad(&u).unwrap();
                let expected = a.left_mul(&u).unwrap().matrix().sub(a.right_mul(&u).unwrap().matrix());
                assert_eq!(ad.matrix(), &expected);
            }
        }
    }

    #[test]
    fn commutator_tables() {
        let a = a3_2();
        let c = a.commutator();
        assert_eq!(c.basis_product(2, 0), vec![rat(0), rat(1), rat(0)]);
        assert_eq!(c.basis_product(2, 1), vec![rat(-1), rat(0), rat(0)]);
        assert_eq!(c.basis_product(0, 2), vec![rat(0), rat(-1), rat(0)]);

        // Odd square doubles: [f₁,f₁] = 2e₁ in A²₂.
        let b = a2_2().commutator();
        assert_eq!(b.basis_product(1, 1), vec![rat(2), rat(0)]);

        // A supercommutative algebra has trivial commutator.
        let sym = SuperAlgebra::from_products(
            SuperSpace::with_sdim(2, 0),
            &[(0, 1, 0, rat(1)), (1, 0, 0, rat(1))],
        )
        .unwrap();
        assert!(sym.commutator().is_trivial());
        assert_eq!(sym.anticommutator().basis_product(0, 1), vec![rat(2), rat(0)]);
    }

    #[test]
    fn left_symmetry_brute_force_oracle() {
        assert!(SuperAlgebra::trivial(SuperSpace::with_sdim(2, 0)).check_left_symmetric().pass);
        assert!(a3_2().check_left_symmetric().pass);

        let one_dim =
            SuperAlgebra::from_products(SuperSpace::with_sdim(1, 0), &[(0, 0, 0, rat(1))]).unwrap();
        assert!(one_dim.check_left_symmetric().pass);

        // x•x = y, x•y = x fails; the brute-force sweep finds the first bad
        // triple in lexicographic order.
        let counter = SuperAlgebra::from_products(
            SuperSpace::with_sdim(2, 0),
            &[(0, 0, 1, rat(1)), (0, 1, 0, rat(1))],
        )
        .unwrap();
        let report = counter.check_left_symmetric();
        assert!(!report.pass);
        let witness = report.witness.unwrap();
        // Oracle: sweep all triples directly and record the first failure.
        let mut expected = None;
        'outer: for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let lhs = counter.associator(i, j, k);
                    let rhs = counter.associator(j, i, k);
                    if lhs != rhs {
                        expected = Some(vec![i, j, k]);
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(witness.indices, expected.unwrap());
    }

    #[test]
    fn novikov_check() {
        assert!(a3_2().check_novikov().pass);
        assert!(a2_2().check_novikov().pass);
        assert!(a3_5().check_novikov().pass);
        assert!(SuperAlgebra::trivial(SuperSpace::with_sdim(2, 1)).check_novikov().pass);

        // Adding e₁•f₁ = e₁ to A³₂ breaks the operator identities.
        let mutated = SuperAlgebra::from_products(
            SuperSpace::with_sdim(3, 0),
            &[(2, 0, 1, rat(1)), (2, 1, 0, rat(-1)), (0, 2, 0, rat(1))],
        )
        .unwrap();
        assert!(!mutated.check_novikov().pass);
    }

    #[test]
    fn l_r_and_leibniz_checks() {
        let trivial = SuperAlgebra::trivial(SuperSpace::with_sdim(2, 0));
        assert!(trivial.check_l_identity().pass);
        assert!(trivial.check_r_identity().pass);
        assert!(trivial.check_lr().pass);
        assert!(trivial.check_left_leibniz().pass);

        // x•x = y, x•y = x is not an R-algebra: (x•x)•y = 0 but (x•y)•x = y.
        let free = SuperAlgebra::from_products(
            SuperSpace::with_sdim(2, 0),
            &[(0, 0, 1, rat(1)), (0, 1, 0, rat(1))],
        )
        .unwrap();
        assert!(!free.check_r_identity().pass);
        // The table with y•x = x instead satisfies R; every triple agrees.
        let other = SuperAlgebra::from_products(
            SuperSpace::with_sdim(2, 0),
            &[(0, 0, 1, rat(1)), (1, 0, 0, rat(1))],
        )
        .unwrap();
        assert!(other.check_r_identity().pass);

        // x•x = x on one even basis vector is not left-Leibniz.
        let idem =
            SuperAlgebra::from_products(SuperSpace::with_sdim(1, 0), &[(0, 0, 0, rat(1))]).unwrap();
        let report = idem.check_left_leibniz();
        assert!(!report.pass);
        assert_eq!(report.witness.unwrap().indices, vec![0, 0, 0]);
    }

    #[test]
    fn jacobi_and_solvability() {
        assert!(a3_5().commutator().check_super_jacobi().pass);
        assert!(a3_2().commutator().check_super_jacobi().pass);
        assert!(a2_2().commutator().check_super_jacobi().pass);

        // sl(2)-like table is Lie but not 2-step solvable.
        let sl2 = SuperAlgebra::from_products(
            SuperSpace::with_sdim(3, 0),
            &[
                (0, 1, 2, rat(1)),
                (1, 0, 2, rat(-1)),
                (2, 0, 0, rat(2)),
                (0, 2, 0, rat(-2)),
                (2, 1, 1, rat(-2)),
                (1, 2, 1, rat(2)),
            ],
        )
        .unwrap();
        assert!(sl2.check_super_jacobi().pass);
        assert!(!sl2.check_two_step_solvable().unwrap());

        assert!(a3_2().commutator().check_two_step_solvable().unwrap());
        assert!(SuperAlgebra::trivial(SuperSpace::with_sdim(2, 0)).check_two_step_solvable().unwrap());

        // Non-Lie input is rejected.
        let not_lie =
            SuperAlgebra::from_products(SuperSpace::with_sdim(1, 0), &[(0, 0, 0, rat(1))]).unwrap();
        assert!(matches!(not_lie.check_two_step_solvable(), Err(Error::NotLie(_))));
    }

    #[test]
    fn spans() {
        let trivial = SuperAlgebra::trivial(SuperSpace::with_sdim(2, 0));
        assert!(trivial.span_product().is_zero());
        assert!(trivial.span_derived().is_zero());

        let a = a3_2();
        let p = a.span_product();
        assert_eq!(p.dim(), 2);
        assert!(p.contains(&basis_vec(3, 0)));
        assert!(p.contains(&basis_vec(3, 1)));
        assert_eq!(a.span_derived(), p);

        let b = a3_5();
        let pb = b.span_product();
        assert_eq!(pb.dim(), 2);
        assert!(pb.contains(&basis_vec(3, 1)));
        assert!(pb.contains(&basis_vec(3, 2)));

        // Derived ideal always sits inside the product ideal.
        for alg in [a3_2(), a2_2(), a3_5()] {
            assert!(alg.span_product().contains_subspace(&alg.span_derived()));
        }
    }

    #[test]
    fn normalizer_computation() {
        let trivial = SuperAlgebra::trivial(SuperSpace::with_sdim(2, 0));
        let (nl, nr, both) = trivial.normalizers();
        assert_eq!((nl.dim(), nr.dim(), both.dim()), (2, 2, 2));

        let a = a3_2();
        let (nl, nr, _) = a.normalizers();
        assert!(nl.contains(&basis_vec(3, 0)));
        assert!(nl.contains(&basis_vec(3, 1)));
        assert!(nr.contains(&basis_vec(3, 2)));

        let b = a2_2();
        let (nl, nr, both) = b.normalizers();
        assert_eq!(nl.basis(), &[basis_vec(2, 0)]);
        assert_eq!(nr.basis(), &[basis_vec(2, 0)]);
        assert_eq!(both.dim(), 1);
    }

    #[test]
    fn series_computation() {
        let trivial = SuperAlgebra::trivial(SuperSpace::with_sdim(2, 0));
        for kind in [
            SeriesKind::Solvable,
            SeriesKind::LeftNilpotent,
            SeriesKind::RightNilpotent,
            SeriesKind::Nilpotent,
        ] {
            let chain = trivial.series(kind);
            assert_eq!(chain.len(), 2);
            assert!(chain[1].is_zero());
        }

        // A³₅ is nilpotent.
        assert!(a3_5().is_nilpotent());

        // A³₂'s nilpotent series stabilizes at span{e₁,e₂}.
        let chain = a3_2().series(SeriesKind::Nilpotent);
        let last = chain.last().unwrap();
        assert_eq!(last.dim(), 2);
        assert!(!a3_2().is_nilpotent());
    }
}
