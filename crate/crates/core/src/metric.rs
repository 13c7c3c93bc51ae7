//! The pseudo-Euclidean layer: algebras paired with a homogeneous
//! non-degenerate form, the antisymmetry condition on left multiplications,
//! Levi-Civita products, curvature, the metric-dual star product, Milnor
//! decompositions, isotropic reduction, and representation checks.

use crate::algebra::{IdentityReport, SeriesKind, SuiteReport, SuperAlgebra};
use crate::error::Error;
use crate::matrix::{basis_vec, vec_is_zero, vec_scale, vec_sub, Matrix, Vector};
use crate::rational::Rational;
use crate::superspace::{koszul_sign, BilinearForm, Endo, Subspace, SuperSpace};

/// A superalgebra together with a homogeneous non-degenerate super-symmetric
/// bilinear form on the same superspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PseudoEuclideanAlgebra {
    algebra: SuperAlgebra,
    form: BilinearForm,
}

impl PseudoEuclideanAlgebra {
    pub fn new(algebra: SuperAlgebra, form: BilinearForm) -> Result<Self, Error> {
        if algebra.space() != form.space() {
            return Err(Error::Dimension("algebra and form live on different superspaces".into()));
        }
        Ok(PseudoEuclideanAlgebra { algebra, form })
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn space(&self) -> &SuperSpace {
        self.algebra.space()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `⟨u•v, w⟩ = −(−1)^{|u||v|}⟨v, u•w⟩`, checked as `adjoint(L_u) = −L_u`
    /// for every basis vector.
    pub fn check_left_mul_antisymmetric(&self) -> IdentityReport {
        for i in 0..self.dim() {
            let l = self.algebra.left_mul_basis(i);
            let residual = self.form.adjoint(&l).matrix().add(l.matrix());
            if !residual.is_zero() {
                for r in 0..self.dim() {
                    for c in 0..self.dim() {
                        if !residual.get(r, c).is_zero() {
                            return IdentityReport::fail(
                                "left_mul_antisymmetric",
                                vec![i, r, c],
                                vec![residual.get(r, c).clone()],
                                "adjoint(L_u) + L_u",
                            );
                        }
                    }
                }
            }
        }
        IdentityReport::pass("left_mul_antisymmetric")
    }

    /// The defining suite: valid form, Novikov identities, antisymmetric
    /// left multiplications.
    pub fn check_pseudo_euclidean_novikov(&self) -> SuiteReport {
        let form_report = match crate::superspace::check_form(
            self.space(),
            self.form.gram(),
            self.form.parity(),
        ) {
            None => IdentityReport::pass("form"),
            Some(v) => IdentityReport::fail("form", vec![], vec![], &format!("{v:?}")),
        };
        let reports =
            vec![form_report, self.algebra.check_novikov(), self.check_left_mul_antisymmetric()];
        SuiteReport::new("pseudo_euclidean_novikov", reports)
    }

    /// `(u•v)•w = 0` on all basis triples, with the two operator
    /// reformulations checked alongside. Preconditions (antisymmetric left
    /// multiplications, super-commuting right multiplications) are verified
    /// first.
    pub fn check_vanishing_lemma(&self) -> Result<IdentityReport, Error> {
        let antisym = self.check_left_mul_antisymmetric();
        if !antisym.pass {
            return Err(Error::Precondition("left multiplications are not antisymmetric".into()));
        }
        let n = self.dim();
        let right: Vec<Endo> = (0..n).map(|i| self.algebra.right_mul_basis(i)).collect();
        for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space().parity(i), self.space().parity(j));
                let res = right[i]
                    .matrix()
                    .mul(right[j].matrix())
                    .sub(&right[j].matrix().mul(right[i].matrix()).scale(&sign));
                if !res.is_zero() {
                    return Err(Error::Precondition(
                        "right multiplications do not super-commute".into(),
                    ));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let uv = self.algebra.basis_product(i, j);
                let l = self.algebra.left_mul(&uv).expect("products of basis vectors are homogeneous");
                if !l.is_zero() {
                    return Ok(IdentityReport::fail("vanishing_lemma", vec![i, j], uv, "L_{u•v} ≠ 0"));
                }
                let rr = right[i].matrix().mul(right[j].matrix());
                if !rr.is_zero() {
                    return Ok(IdentityReport::fail(
                        "vanishing_lemma",
                        vec![i, j],
                        rr.row(0).to_vec(),
                        "R_u∘R_v ≠ 0",
                    ));
                }
                for k in 0..n {
                    let triple = self.algebra.product(&uv, &basis_vec(n, k));
                    if !vec_is_zero(&triple) {
                        return Ok(IdentityReport::fail(
                            "vanishing_lemma",
                            vec![i, j, k],
                            triple,
                            "(u•v)•w ≠ 0",
                        ));
                    }
                }
            }
        }
        Ok(IdentityReport::pass("vanishing_lemma"))
    }

    /// Curvature operator `R(u,v) = L_{[u,v]} − [L_u, L_v]` of the product's
    /// own commutator.
    pub fn curvature(&self, u: &[Rational], v: &[Rational]) -> Result<Endo, Error> {
        let lu = self.algebra.left_mul(u)?;
        let lv = self.algebra.left_mul(v)?;
        let bracket = self.algebra.commutator().product(u, v);
        let lb = self.algebra.left_mul(&bracket)?;
        Endo::new(
            self.space().clone(),
            lb.matrix().sub(lu.super_commutator(&lv).matrix()),
            lu.parity().add(lv.parity()),
        )
    }

    pub fn is_flat(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.curvature(&basis_vec(n, i), &basis_vec(n, j))
                    .map(|r| r.is_zero())
                    .unwrap_or(false)
            })
        })
    }

    /// The metric-dual product `⋆` with `⟨u•v, w⟩ = ⟨u, v⋆w⟩`, solved per
    /// basis pair through the Gram matrix. Graded antisymmetry of `⋆` is
    /// verified before returning.
    pub fn star_product(&self) -> Result<SuperAlgebra, Error> {
        let n = self.dim();
        let ginv = self.form.gram().inverse().map_err(|_| Error::SingularForm)?;
        let mut entries = Vec::new();
        for j in 0..n {
            for k in 0..n {
                // t_i = ⟨v_i • v_j, v_k⟩
                let t: Vector = (0..n)
                    .map(|i| self.form.eval(&self.algebra.basis_product(i, j), &basis_vec(n, k)))
                    .collect();
                let x = ginv.mul_vec(&t);
                for (m, coeff) in x.into_iter().enumerate() {
                    if !coeff.is_zero() {
                        entries.push((j, k, m, coeff));
                    }
                }
            }
        }
        let star = SuperAlgebra::from_products(self.space().clone(), &entries)?;
        for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space().parity(i), self.space().parity(j));
                let skew = crate::matrix::vec_add(
                    &star.basis_product(i, j),
                    &vec_scale(&star.basis_product(j, i), &sign),
                );
                if !vec_is_zero(&skew) {
                    return Err(Error::StarPropertiesFail(format!(
                        "star product is not graded-antisymmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(star)
    }

    /// Identities of the star product: graded antisymmetry, the exchange law
    /// valid for any pseudo-Euclidean left-symmetric product, the vanishing
    /// laws specific to Novikov products, and the super Jacobi identity
    /// making `(A,⋆)` a 2-step nilpotent Lie superalgebra.
    pub fn check_star_properties(&self) -> Result<SuiteReport, Error> {
        let star = self.star_product()?;
        let bullet = &self.algebra;
        let n = self.dim();
        let mut reports = vec![star_antisymmetry_report(&star)];

        // (b) v⋆(w⋆z) + v•(w⋆z) = (v•w)⋆z + (−1)^{|v||w|} w⋆(v•z)
        let mut b_report = IdentityReport::pass("star_b_exchange");
        'b: for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space().parity(i), self.space().parity(j));
                for k in 0..n {
                    let wz = star.basis_product(j, k);
                    let lhs = crate::matrix::vec_add(
                        &star.product(&basis_vec(n, i), &wz),
                        &bullet.product(&basis_vec(n, i), &wz),
                    );
                    let rhs = crate::matrix::vec_add(
                        &star.product(&bullet.basis_product(i, j), &basis_vec(n, k)),
                        &vec_scale(
                            &star.product(&basis_vec(n, j), &bullet.basis_product(i, k)),
                            &sign,
                        ),
                    );
                    let residual = vec_sub(&lhs, &rhs);
                    if !vec_is_zero(&residual) {
                        b_report = IdentityReport::fail(
                            "star_b_exchange",
                            vec![i, j, k],
                            residual,
                            "exchange law",
                        );
                        break 'b;
                    }
                }
            }
        }
        reports.push(b_report);

        // (c) u⋆(v⋆w) = 0, which is 2-step nilpotency of (A,⋆).
        let mut c_report = IdentityReport::pass("star_star_zero");
        'c: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let inner = star.basis_product(j, k);
                    let out = star.product(&basis_vec(n, i), &inner);
                    if !vec_is_zero(&out) {
                        c_report = IdentityReport::fail("star_star_zero", vec![i, j, k], out, "u⋆(v⋆w)");
                        break 'c;
                    }
                }
            }
        }
        reports.push(c_report);

        // (d) u•(v⋆w) = 0.
        let mut d_report = IdentityReport::pass("bullet_star_zero");
        'd: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let inner = star.basis_product(j, k);
                    let out = bullet.product(&basis_vec(n, i), &inner);
                    if !vec_is_zero(&out) {
                        d_report =
                            IdentityReport::fail("bullet_star_zero", vec![i, j, k], out, "u•(v⋆w)");
                        break 'd;
                    }
                }
            }
        }
        reports.push(d_report);

        // (e) (u•v)⋆w = −(−1)^{|u||v|} v⋆(u•w).
        let mut e_report = IdentityReport::pass("star_e_exchange");
        'e: for i in 0..n {
            for j in 0..n {
                let sign = koszul_sign(self.space().parity(i), self.space().parity(j));
                for k in 0..n {
                    let lhs = star.product(&bullet.basis_product(i, j), &basis_vec(n, k));
                    let rhs =
                        vec_scale(&star.product(&basis_vec(n, j), &bullet.basis_product(i, k)), &sign);
                    let residual = crate::matrix::vec_add(&lhs, &rhs);
                    if !vec_is_zero(&residual) {
                        e_report = IdentityReport::fail(
                            "star_e_exchange",
                            vec![i, j, k],
                            residual,
                            "(u•v)⋆w + (-1)^{|u||v|} v⋆(u•w)",
                        );
                        break 'e;
                    }
                }
            }
        }
        reports.push(e_report);

        let mut jacobi = star.check_super_jacobi();
        jacobi.identity = "star_super_jacobi".into();
        reports.push(jacobi);

        Ok(SuiteReport::new("star_properties", reports))
    }

    /// Basis of the center of the commutator Lie superalgebra.
    pub fn center_of_minus(&self) -> Subspace {
        center_of(&self.algebra.commutator())
    }

    /// Milnor decomposition through `I = A•A` when the form restricts
    /// non-degenerately, with every structural conclusion re-verified.
    pub fn milnor_decomposition(&self) -> Result<MilnorOutcome, Error> {
        let ideal = self.algebra.span_product();
        let restricted = self.form.restricted_gram(ideal.basis());
        if !ideal.is_zero() && restricted.det().is_zero() {
            let witness_space = ideal.intersect(&self.form.orthogonal_complement(&ideal));
            let witness = witness_space
                .graded_basis(self.space())?
                .into_iter()
                .next()
                .expect("degenerate restriction has an isotropic vector");
            return Ok(MilnorOutcome::NotMilnor { witness });
        }
        let complement = self.form.orthogonal_complement(&ideal);
        if ideal.dim() + complement.dim() != self.dim() {
            return Err(Error::Precondition("ideal and complement do not span".into()));
        }
        let check = |basis: &[Vector], name: &str| -> Result<(), Error> {
            for x in basis {
                for y in basis {
                    if !vec_is_zero(&self.algebra.product(x, y)) {
                        return Err(Error::Precondition(format!(
                            "{name} is not a trivial subalgebra"
                        )));
                    }
                }
            }
            Ok(())
        };
        check(ideal.basis(), "A•A")?;
        check(complement.basis(), "(A•A)^⊥")?;
        for u in ideal.basis() {
            if !self.algebra.left_mul(u).map(|l| l.is_zero()).unwrap_or(false) {
                return Err(Error::Precondition("L_u ≠ 0 on the ideal".into()));
            }
        }
        for u in complement.basis() {
            if !self.algebra.right_mul(u).map(|r| r.is_zero()).unwrap_or(false) {
                return Err(Error::Precondition("R_u ≠ 0 on the complement".into()));
            }
        }
        // Z(A⁻) must agree with the two-sided normalizer.
        let center = self.center_of_minus();
        let (_, _, normalizer) = self.algebra.normalizers();
        if center != normalizer {
            return Err(Error::Precondition("center of A⁻ differs from {L=R=0}".into()));
        }
        Ok(MilnorOutcome::Milnor(MilnorDecomposition { ideal, complement }))
    }

    /// Quotient `I⊥/I` by the isotropic line spanned by `e`. Requires `e`
    /// homogeneous, isotropic, and annihilating on both sides, so that
    /// `I = Ke` is a totally isotropic two-sided ideal.
    pub fn isotropic_reduction(&self, e: &[Rational]) -> Result<PseudoEuclideanAlgebra, Error> {
        let n = self.dim();
        if vec_is_zero(e) {
            return Err(Error::NotAdmissible { equation: "e = 0".into() });
        }
        if self.space().homogeneous_parity(e).is_err() {
            return Err(Error::NotAdmissible { equation: "e is not homogeneous".into() });
        }
        if !self.form.eval(e, e).is_zero() {
            return Err(Error::NotAdmissible { equation: "⟨e,e⟩ ≠ 0".into() });
        }
        if !self.algebra.left_mul(e)?.is_zero() {
            return Err(Error::NotAdmissible { equation: "L_e ≠ 0".into() });
        }
        if !self.algebra.right_mul(e)?.is_zero() {
            return Err(Error::NotAdmissible { equation: "R_e ≠ 0".into() });
        }

        let line = Subspace::from_spanning(n, vec![e.to_vec()]);
        let perp = self.form.orthogonal_complement(&line);
        // Extend e to a homogeneous basis of I⊥; the remaining vectors
        // represent the quotient.
        let mut chosen: Vec<Vector> = vec![e.to_vec()];
        for candidate in perp.graded_basis(self.space())? {
            let trial = Subspace::from_spanning(
                n,
                chosen.iter().cloned().chain([candidate.clone()]).collect(),
            );
            if trial.dim() > chosen.len() {
                chosen.push(candidate);
            }
        }
        if chosen.len() != n - 1 {
            return Err(Error::Precondition("e does not lie in its own orthogonal".into()));
        }
        let reps = &chosen[1..];
        let space = SuperSpace::new(
            reps.iter()
                .map(|v| {
                    self.space().homogeneous_parity(v).expect("representatives are homogeneous")
                })
                .collect(),
        );
        let basis_matrix = Matrix::from_cols(&chosen);
        let m = reps.len();
        let mut entries = Vec::new();
        for a in 0..m {
            for b in 0..m {
                let product = self.algebra.product(&reps[a], &reps[b]);
                let coords = basis_matrix
                    .solve(&product)
                    .ok_or_else(|| Error::Precondition("product leaves I⊥".into()))?;
                for (k, coeff) in coords.iter().enumerate().skip(1) {
                    if !coeff.is_zero() {
                        entries.push((a, b, k - 1, coeff.clone()));
                    }
                }
            }
        }
        let algebra = SuperAlgebra::from_products(space.clone(), &entries)?;
        let gram = Matrix::from_fn(m, m, |a, b| self.form.eval(&reps[a], &reps[b]));
        let form = BilinearForm::new(space, gram, self.form.parity())?;
        PseudoEuclideanAlgebra::new(algebra, form)
    }

    /// Canonical vector for iterated reduction: the first homogeneous
    /// echelon vector of `A•A ∩ (A•A)⊥` when the product ideal is
    /// degenerate, otherwise (for trivial products only) a small isotropic
    /// homogeneous vector if one exists.
    pub fn canonical_isotropic(&self) -> Option<Vector> {
        let ideal = self.algebra.span_product();
        let intersection = ideal.intersect(&self.form.orthogonal_complement(&ideal));
        if !intersection.is_zero() {
            return intersection.graded_basis(self.space()).ok()?.into_iter().next();
        }
        if !self.algebra.is_trivial() {
            return None;
        }
        let n = self.dim();
        for i in 0..n {
            let v = basis_vec(n, i);
            if self.form.eval(&v, &v).is_zero() {
                return Some(v);
            }
        }
        let scales = [
            Rational::from(1),
            Rational::from(-1),
            Rational::from(2),
            Rational::from(-2),
            Rational::new(1, 2),
            Rational::new(-1, 2),
        ];
        for i in 0..n {
            for j in i + 1..n {
                if self.space().parity(i) != self.space().parity(j) {
                    continue;
                }
                for t in &scales {
                    let mut v = basis_vec(n, i);
                    v[j] = t.clone();
                    if self.form.eval(&v, &v).is_zero() {
                        return Some(v);
                    }
                }
            }
        }
        None
    }

    /// Iterated isotropic reduction with the canonical vector choice, until
    /// no admissible vector remains or the algebra is empty.
    pub fn reduction_chain(&self) -> Vec<PseudoEuclideanAlgebra> {
        let mut chain = vec![self.clone()];
        loop {
            let current = chain.last().unwrap();
            if current.dim() == 0 {
                break;
            }
            let Some(e) = current.canonical_isotropic() else { break };
            match current.isotropic_reduction(&e) {
                Ok(next) => chain.push(next),
                Err(_) => break,
            }
        }
        chain
    }

    /// The isomorphism `Φ(a) = ⟨a, ·⟩` onto the dual, with both intertwining
    /// identities checked on basis vectors.
    pub fn check_phi_isomorphism(&self) -> Result<SuiteReport, Error> {
        let n = self.dim();
        let star = self.star_product()?;
        // Column i of phi holds the coordinates of ⟨v_i, ·⟩ in the dual
        // basis; |Φ| equals the parity of the form.
        let phi = self.form.gram().transpose();
        let phi_parity = self.form.parity();
        let mut reports = Vec::new();
        reports.push(if phi.det().is_zero() {
            IdentityReport::fail("phi_invertible", vec![], vec![], "Φ is singular")
        } else {
            IdentityReport::pass("phi_invertible")
        });

        let mut left_report = IdentityReport::pass("phi_left_intertwine");
        let mut right_report = IdentityReport::pass("phi_right_intertwine");
        for i in 0..n {
            let sign = koszul_sign(phi_parity, self.space().parity(i));
            let l = self.algebra.left_mul_basis(i);
            let lhs = phi.mul(l.matrix());
            let rhs = dual_operator(self.space(), &l).mul(&phi).scale(&sign);
            if left_report.pass && lhs != rhs {
                left_report = IdentityReport::fail(
                    "phi_left_intertwine",
                    vec![i],
                    lhs.sub(&rhs).row(0).to_vec(),
                    "Φ∘L_u - (-1)^{|Φ||u|} (L_u)*∘Φ",
                );
            }
            let r = self.algebra.right_mul_basis(i);
            let lstar = star.left_mul_basis(i);
            let lhs = phi.mul(r.matrix());
            let rhs = dual_operator(self.space(), &lstar).mul(&phi).scale(&(-&sign));
            if right_report.pass && lhs != rhs {
                right_report = IdentityReport::fail(
                    "phi_right_intertwine",
                    vec![i],
                    lhs.sub(&rhs).row(0).to_vec(),
                    "Φ∘R_u + (-1)^{|Φ||u|} (L⋆_u)*∘Φ",
                );
            }
        }
        reports.push(left_report);
        reports.push(right_report);
        Ok(SuiteReport::new("phi_isomorphism", reports))
    }
}

fn star_antisymmetry_report(star: &SuperAlgebra) -> IdentityReport {
    let n = star.dim();
    for i in 0..n {
        for j in 0..n {
            let sign = koszul_sign(star.space().parity(i), star.space().parity(j));
            let skew = crate::matrix::vec_add(
                &star.basis_product(i, j),
                &vec_scale(&star.basis_product(j, i), &sign),
            );
            if !vec_is_zero(&skew) {
                return IdentityReport::fail(
                    "star_antisymmetry",
                    vec![i, j],
                    skew,
                    "u⋆v + (-1)^{|u||v|}v⋆u",
                );
            }
        }
    }
    IdentityReport::pass("star_antisymmetry")
}

/// Center of a bracket algebra: `{u : [u, v] = 0 for all v}`.
pub fn center_of(bracket: &SuperAlgebra) -> Subspace {
    let n = bracket.dim();
    let rows = Matrix::from_fn(n * n, n, |row, i| {
        let (j, k) = (row / n, row % n);
        bracket.c(i, j, k).clone()
    });
    Subspace::from_spanning(n, rows.kernel())
}

/// Matrix of the dual operator `φ*(u)` on the dual basis, for an operator
/// of homogeneous parity: `φ*(u)(f) = −(−1)^{|f||u|} f∘φ(u)`.
pub fn dual_operator(space: &SuperSpace, op: &Endo) -> Matrix {
    let n = space.dim();
    Matrix::from_fn(n, n, |j, m| {
        let sign = -&koszul_sign(space.parity(m), op.parity());
        &sign * op.matrix().get(m, j)
    })
}

/// Outcome of the Milnor decomposition attempt.
#[derive(Clone, Debug)]
pub enum MilnorOutcome {
    Milnor(MilnorDecomposition),
    NotMilnor { witness: Vector },
}

#[derive(Clone, Debug)]
pub struct MilnorDecomposition {
    pub ideal: Subspace,
    pub complement: Subspace,
}

/// Unique torsion-free metric-compatible product of a pseudo-Euclidean Lie
/// superalgebra, from the graded Koszul formula.
pub fn levi_civita(lie: &SuperAlgebra, form: &BilinearForm) -> Result<SuperAlgebra, Error> {
    if lie.space() != form.space() {
        return Err(Error::Dimension("bracket and form live on different superspaces".into()));
    }
    let jacobi = lie.check_super_jacobi();
    if !jacobi.pass {
        return Err(Error::NotLie(format!(
            "{} fails at {:?}",
            jacobi.identity,
            jacobi.witness.as_ref().map(|w| &w.indices)
        )));
    }
    let n = lie.dim();
    let gt_inv = form.gram().transpose().inverse().map_err(|_| Error::SingularForm)?;
    let half = Rational::new(1, 2);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (pi, pj) = (lie.space().parity(i), lie.space().parity(j));
            let rhs: Vector = (0..n)
                .map(|k| {
                    let pk = lie.space().parity(k);
                    let t1 = form.eval(&lie.basis_product(i, j), &basis_vec(n, k));
                    let s2 = &koszul_sign(pi, pj) * &koszul_sign(pi, pk);
                    let t2 = form.eval(&lie.basis_product(j, k), &basis_vec(n, i));
                    let s3 = &koszul_sign(pj, pk) * &koszul_sign(pi, pk);
                    let t3 = form.eval(&lie.basis_product(k, i), &basis_vec(n, j));
                    &(&(&t1 - &(&s2 * &t2)) + &(&s3 * &t3)) * &half
                })
                .collect();
            let w = gt_inv.mul_vec(&rhs);
            for (k, coeff) in w.into_iter().enumerate() {
                if !coeff.is_zero() {
                    entries.push((i, j, k, coeff));
                }
            }
        }
    }
    let product = SuperAlgebra::from_products(lie.space().clone(), &entries)?;
    // Torsion-free and metric-compatible by construction; both are cheap to
    // re-verify and guard against malformed input.
    if product.commutator() != *lie {
        return Err(Error::Precondition("Koszul solution is not torsion-free".into()));
    }
    let paired = PseudoEuclideanAlgebra::new(product.clone(), form.clone())?;
    if !paired.check_left_mul_antisymmetric().pass {
        return Err(Error::Precondition("Koszul solution is not metric-compatible".into()));
    }
    Ok(product)
}

/// A pair of linear maps `r, l : A → End(V)` given on basis vectors.
#[derive(Clone, Debug)]
pub struct Representation {
    pub carrier: SuperSpace,
    pub r: Vec<Matrix>,
    pub l: Vec<Matrix>,
}

impl Representation {
    pub fn zero(algebra_dim: usize, carrier: SuperSpace) -> Self {
        let n = carrier.dim();
        Representation {
            carrier,
            r: vec![Matrix::zero(n, n); algebra_dim],
            l: vec![Matrix::zero(n, n); algebra_dim],
        }
    }

    fn apply(map: &[Matrix], w: &[Rational]) -> Matrix {
        let n = map.first().map_or(0, Matrix::rows);
        let mut out = Matrix::zero(n, n);
        for (coeff, m) in w.iter().zip(map) {
            if !coeff.is_zero() {
                out = out.add(&m.scale(coeff));
            }
        }
        out
    }
}

/// The regular bimodule `(R•, L•)` of an algebra on itself.
pub fn adjoint_representation(algebra: &SuperAlgebra) -> Representation {
    let n = algebra.dim();
    Representation {
        carrier: algebra.space().clone(),
        r: (0..n).map(|i| algebra.right_mul_basis(i).matrix().clone()).collect(),
        l: (0..n).map(|i| algebra.left_mul_basis(i).matrix().clone()).collect(),
    }
}

/// The five operator identities a representation of a left-Leibniz
/// L-superalgebra must satisfy, after verifying those identities for the
/// algebra itself.
pub fn check_representation(
    algebra: &SuperAlgebra,
    rep: &Representation,
) -> Result<SuiteReport, Error> {
    if !algebra.check_left_leibniz().pass || !algebra.check_l_identity().pass {
        return Err(Error::Precondition("algebra is not a left-Leibniz L-superalgebra".into()));
    }
    let n = algebra.dim();
    for (idx, m) in rep.l.iter().chain(rep.r.iter()).enumerate() {
        let parity = algebra.space().parity(idx % n);
        Endo::new(rep.carrier.clone(), m.clone(), parity).map_err(|_| {
            Error::ParityMismatch("representation map is not homogeneous of the right parity".into())
        })?;
    }

    let space = algebra.space().clone();
    let first = |pred: &dyn Fn(usize, usize) -> Matrix| -> Option<(usize, usize, Matrix)> {
        for i in 0..n {
            for j in 0..n {
                let res = pred(i, j);
                if !res.is_zero() {
                    return Some((i, j, res));
                }
            }
        }
        None
    };
    let as_report = |name: &str, fail: Option<(usize, usize, Matrix)>| match fail {
        None => IdentityReport::pass(name),
        Some((i, j, res)) => {
            IdentityReport::fail(name, vec![i, j], res.row(0).to_vec(), "residual matrix row 0")
        }
    };

    let reports = vec![
        as_report(
            "rep_l_supercommute",
            first(&|i, j| {
                let sign = koszul_sign(space.parity(i), space.parity(j));
                rep.l[i].mul(&rep.l[j]).sub(&rep.l[j].mul(&rep.l[i]).scale(&sign))
            }),
        ),
        as_report(
            "rep_l_r_compose",
            first(&|i, j| {
                let prod = algebra.basis_product(i, j);
                rep.l[i].mul(&rep.r[j]).sub(&Representation::apply(&rep.r, &prod))
            }),
        ),
        as_report(
            "rep_l_of_products",
            first(&|i, j| Representation::apply(&rep.l, &algebra.basis_product(i, j))),
        ),
        as_report("rep_r_r_zero", first(&|i, j| rep.r[i].mul(&rep.r[j]))),
        as_report("rep_r_l_zero", first(&|i, j| rep.r[i].mul(&rep.l[j]))),
    ];

    Ok(SuiteReport::new("representation", reports))
}

/// Nilpotency read three independent ways: the nilpotent series, nilpotency
/// of every basis left multiplication, and the lower central series of the
/// commutator Lie superalgebra.
pub fn nilpotency_triple(p: &PseudoEuclideanAlgebra) -> (bool, bool, bool) {
    let by_series = p.algebra().is_nilpotent();
    let by_left = (0..p.dim()).all(|i| p.algebra().left_mul_basis(i).is_nilpotent());
    let minus = p.algebra().commutator();
    let by_lie = minus.series(SeriesKind::LeftNilpotent).last().unwrap().is_zero();
    (by_series, by_left, by_lie)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::superspace::Parity;

    fn a3_2() -> PseudoEuclideanAlgebra {
        let algebra = SuperAlgebra::from_products(
            SuperSpace::with_sdim(3, 0),
            &[(2, 0, 1, rat(1)), (2, 1, 0, rat(-1))],
        )
        .unwrap();
        let form = BilinearForm::new(SuperSpace::with_sdim(3, 0), Matrix::identity(3), Parity::Even)
            .unwrap();
        PseudoEuclideanAlgebra::new(algebra, form).unwrap()
    }

    fn a3_5() -> PseudoEuclideanAlgebra {
        let space = SuperSpace::with_sdim(3, 0);
        let algebra =
            SuperAlgebra::from_products(space.clone(), &[(0, 0, 1, rat(1)), (0, 1, 2, rat(-1))])
                .unwrap();
        let gram = Matrix::from_rows(vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
        ]);
        let form = BilinearForm::new(space, gram, Parity::Even).unwrap();
        PseudoEuclideanAlgebra::new(algebra, form).unwrap()
    }

    fn a2_2() -> PseudoEuclideanAlgebra {
        let space = SuperSpace::with_sdim(1, 1);
        let algebra = SuperAlgebra::from_products(space.clone(), &[(1, 1, 0, rat(1))]).unwrap();
        let gram = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        let form = BilinearForm::new(space, gram, Parity::Odd).unwrap();
        PseudoEuclideanAlgebra::new(algebra, form).unwrap()
    }

    fn trivial(n: usize) -> PseudoEuclideanAlgebra {
        let space = SuperSpace::with_sdim(n, 0);
        PseudoEuclideanAlgebra::new(
            SuperAlgebra::trivial(space.clone()),
            BilinearForm::new(space, Matrix::identity(n), Parity::Even).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn antisymmetry_check() {
        assert!(trivial(2).check_left_mul_antisymmetric().pass);
        assert!(a3_2().check_left_mul_antisymmetric().pass);
        assert!(a2_2().check_left_mul_antisymmetric().pass);
        assert!(a3_5().check_left_mul_antisymmetric().pass);

        // Mutating A3_2's form to diag(1,2,1) breaks antisymmetry of L_{f₁}.
        let algebra = a3_2().algebra.clone();
        let gram = Matrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(2), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ]);
        let form = BilinearForm::new(SuperSpace::with_sdim(3, 0), gram, Parity::Even).unwrap();
        let mutated = PseudoEuclideanAlgebra::new(algebra, form).unwrap();
        assert!(!mutated.check_left_mul_antisymmetric().pass);
        assert!(!mutated.check_pseudo_euclidean_novikov().pass);
    }

    #[test]
    fn full_suite_and_mutation_witnesses() {
        for p in [trivial(2), a3_2(), a2_2(), a3_5()] {
            assert!(p.check_pseudo_euclidean_novikov().pass);
        }
        let space = SuperSpace::with_sdim(3, 0);
        let mutated = SuperAlgebra::from_products(
            space.clone(),
            &[(2, 0, 1, rat(1)), (2, 1, 0, rat(-1)), (0, 0, 0, rat(1))],
        )
        .unwrap();
        let p = PseudoEuclideanAlgebra::new(
            mutated,
            BilinearForm::new(space, Matrix::identity(3), Parity::Even).unwrap(),
        )
        .unwrap();
        let suite = p.check_pseudo_euclidean_novikov();
        assert!(!suite.pass);
        assert!(suite.first_failure().is_some());
    }

    #[test]
    fn vanishing_lemma() {
        assert!(trivial(2).check_vanishing_lemma().unwrap().pass);
        assert!(a3_5().check_vanishing_lemma().unwrap().pass);
        assert!(a3_2().check_vanishing_lemma().unwrap().pass);

        // Skipped preconditions are reported, not silently accepted.
        let space = SuperSpace::with_sdim(1, 0);
        let bad = PseudoEuclideanAlgebra::new(
            SuperAlgebra::from_products(space.clone(), &[(0, 0, 0, rat(1))]).unwrap(),
            BilinearForm::new(space, Matrix::identity(1), Parity::Even).unwrap(),
        )
        .unwrap();
        assert!(matches!(bad.check_vanishing_lemma(), Err(Error::Precondition(_))));
    }

    #[test]
    fn flatness() {
        assert!(trivial(3).is_flat());
        assert!(a3_2().is_flat());
        assert!(a2_2().is_flat());

        // The sl(2) bracket used as a product is not flat.
        let space = SuperSpace::with_sdim(3, 0);
        let sl2 = SuperAlgebra::from_products(
            space.clone(),
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
        let p = PseudoEuclideanAlgebra::new(
            sl2,
            BilinearForm::new(space, Matrix::identity(3), Parity::Even).unwrap(),
        )
        .unwrap();
        assert!(!p.is_flat());
    }

    #[test]
    fn levi_civita_recovers_catalog_products() {
        for p in [a3_2(), a2_2(), a3_5(), trivial(3)] {
            let rebuilt = levi_civita(&p.algebra().commutator(), p.form()).unwrap();
            assert_eq!(&rebuilt, p.algebra());
            assert_eq!(rebuilt.commutator(), p.algebra().commutator());
        }

        // Abelian bracket gives the trivial product for any form.
        let space = SuperSpace::with_sdim(2, 0);
        let abelian = SuperAlgebra::trivial(space.clone());
        let form = BilinearForm::new(space.clone(), Matrix::identity(2), Parity::Even).unwrap();
        assert!(levi_civita(&abelian, &form).unwrap().is_trivial());

        // Non-Jacobi inputs are rejected at the gate.
        let bad = SuperAlgebra::from_products(space, &[(0, 0, 1, rat(1))]).unwrap();
        assert!(matches!(levi_civita(&bad, &form), Err(Error::NotLie(_))));
    }

    #[test]
    fn star_product_tables() {
        // A³₂: e₁⋆e₂ = f₁, e₂⋆e₁ = −f₁, f₁⋆x = 0.
        let star = a3_2().star_product().unwrap();
        assert_eq!(star.basis_product(0, 1), vec![rat(0), rat(0), rat(1)]);
        assert_eq!(star.basis_product(1, 0), vec![rat(0), rat(0), rat(-1)]);
        for j in 0..3 {
            assert!(vec_is_zero(&star.basis_product(2, j)));
        }

        // A²₂: f₁⋆f₁ = αe₁ solved from ⟨f₁•f₁, ·⟩.
        let star = a2_2().star_product().unwrap();
        assert_eq!(star.basis_product(1, 1), vec![rat(1), rat(0)]);

        assert!(trivial(2).star_product().unwrap().is_trivial());
    }

    #[test]
    fn star_properties() {
        for p in [trivial(2), a3_2(), a2_2(), a3_5()] {
            let suite = p.check_star_properties().unwrap();
            assert!(suite.pass, "star identities fail: {:?}", suite.first_failure());
        }
    }

    #[test]
    fn milnor_outcomes() {
        // A³₂: I = span{e₁,e₂}, I⊥ = span{f₁}.
        match a3_2().milnor_decomposition().unwrap() {
            MilnorOutcome::Milnor(d) => {
                assert_eq!(d.ideal.dim(), 2);
                assert!(d.ideal.contains(&basis_vec(3, 0)));
                assert!(d.complement.contains(&basis_vec(3, 2)));
            }
            MilnorOutcome::NotMilnor { .. } => panic!("A3_2 is Milnor"),
        }

        match trivial(2).milnor_decomposition().unwrap() {
            MilnorOutcome::Milnor(d) => {
                assert_eq!(d.ideal.dim(), 0);
                assert_eq!(d.complement.dim(), 2);
            }
            MilnorOutcome::NotMilnor { .. } => panic!("trivial algebra is Milnor"),
        }

        // A³₅ is not Milnor; the witness is e₃.
        match a3_5().milnor_decomposition().unwrap() {
            MilnorOutcome::NotMilnor { witness } => {
                assert_eq!(witness, basis_vec(3, 2));
            }
            MilnorOutcome::Milnor(_) => panic!("A3_5 has a degenerate product ideal"),
        }
    }

    #[test]
    fn centers() {
        assert_eq!(trivial(2).center_of_minus().dim(), 2);
        assert_eq!(a3_2().center_of_minus().dim(), 0);
        assert!(a3_5().center_of_minus().contains(&basis_vec(3, 2)));
    }

    #[test]
    fn isotropic_reduction_of_a3_5() {
        let p = a3_5();
        let reduced = p.isotropic_reduction(&basis_vec(3, 2)).unwrap();
        assert_eq!(reduced.dim(), 1);
        assert!(reduced.algebra().is_trivial());
        assert_eq!(reduced.form().gram().get(0, 0), &rat(1));

        // Non-admissible vectors are rejected.
        assert!(p.isotropic_reduction(&basis_vec(3, 0)).is_err());
        assert!(p.isotropic_reduction(&crate::matrix::zero_vec(3)).is_err());
    }

    #[test]
    fn adjoint_representation_passes() {
        for p in [a3_2(), a2_2(), a3_5()] {
            let rep = adjoint_representation(p.algebra());
            let suite = check_representation(p.algebra(), &rep).unwrap();
            assert!(suite.pass, "{:?}", suite.first_failure());
        }
        // Zero maps always form a representation.
        let a = a3_2();
        let rep = Representation::zero(3, SuperSpace::with_sdim(2, 0));
        assert!(check_representation(a.algebra(), &rep).unwrap().pass);
    }

    #[test]
    fn phi_isomorphism() {
        for p in [trivial(2), a3_2(), a2_2(), a3_5()] {
            let suite = p.check_phi_isomorphism().unwrap();
            assert!(suite.pass, "{:?}", suite.first_failure());
        }
    }

    #[test]
    fn nilpotency_triple_agrees() {
        for (p, expected) in [(trivial(2), true), (a3_2(), false), (a2_2(), true), (a3_5(), true)]
        {
            let (a, b, c) = nilpotency_triple(&p);
            assert_eq!((a, b, c), (expected, expected, expected));
        }
    }
}
