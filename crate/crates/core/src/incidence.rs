//! Incidence geometry on the Lagrangian Grassmannian of the 3-forms.
//!
//! A tangent vector to the Lagrangian Grassmannian at `A` is a quadratic form
//! on `A`. Quadratic forms on an `m`-dimensional space are handled through the
//! `m(m+1)/2` upper-triangular entries of their Gram matrix in the canonical
//! basis of the space.

use std::sync::Arc;

use rand::Rng;

use crate::arith::{Field, Matrix, Scalar, Subspace};
use crate::epw::{fiber_intersection_dim, EpwDatum};
use crate::error::{Error, Result};
use crate::exterior::{
    f_of, is_decomposable, ExteriorVector, SymplecticContext, DIM_FORMS, DIM_V, LAGRANGIAN_DIM,
};

/// Dimension of the space of quadratic forms on a Lagrangian.
pub const SYM2_DIM: usize = LAGRANGIAN_DIM * (LAGRANGIAN_DIM + 1) / 2;

/// A symmetric bilinear form on a subspace, in the subspace's canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFormOn {
    base: Subspace,
    matrix: Matrix,
}

impl QuadraticFormOn {
    pub fn new(base: Subspace, matrix: Matrix) -> Result<Self> {
        let m = base.dim();
        if matrix.rows() != m || matrix.cols() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                got: matrix.rows(),
            });
        }
        if matrix.transpose() != matrix {
            return Err(Error::Precondition("form is not symmetric".into()));
        }
        Ok(QuadraticFormOn { base, matrix })
    }

    /// The form with the given upper-triangular entries.
    pub fn from_sym_coords(base: Subspace, coords: &[Scalar]) -> Result<Self> {
        let m = base.dim();
        let mut matrix = Matrix::zeros(base.field(), m, m);
        for (k, (a, b)) in sym_pairs(m).into_iter().enumerate() {
            matrix.set(a, b, coords[k].clone());
            matrix.set(b, a, coords[k].clone());
        }
        Self::new(base, matrix)
    }

    pub fn base(&self) -> &Subspace {
        &self.base
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `q(x, y)` for vectors of the ambient space lying in the base.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let cx = self.coords_of(x)?;
        let cy = self.coords_of(y)?;
        Ok(crate::arith::dot(&cx, &self.matrix.mul_vec(&cy)?))
    }

    fn coords_of(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.base
            .coordinates(x)
            .ok_or_else(|| Error::Precondition("vector outside the base".into()))
    }
}

/// Index pairs `a <= b` of an `m x m` symmetric matrix, row by row.
pub fn sym_pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|a| (a..m).map(move |b| (a, b))).collect()
}

/// The linear functional `q -> q(x, y)` on upper-triangular entries, for
/// basis coordinates `x`, `y`.
fn bilinear_row(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    sym_pairs(x.len())
        .into_iter()
        .map(|(a, b)| {
            if a == b {
                &x[a] * &y[a]
            } else {
                &(&x[a] * &y[b]) + &(&x[b] * &y[a])
            }
        })
        .collect()
}

fn coords_in(s: &Subspace, x: &[Scalar]) -> Result<Vec<Scalar>> {
    s.coordinates(x)
        .ok_or_else(|| Error::Precondition("vector outside the subspace".into()))
}

/// Rows `q(u_i, u_j)` for `i <= j` over a basis of `u`, in coordinates of `base`.
fn restriction_rows(base: &Subspace, u: &Subspace) -> Result<Vec<Vec<Scalar>>> {
    let ub = u
        .basis_vectors()
        .iter()
        .map(|x| coords_in(base, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(sym_pairs(ub.len())
        .into_iter()
        .map(|(i, j)| bilinear_row(&ub[i], &ub[j]))
        .collect())
}

fn check_lagrangian(ctx: &SymplecticContext, s: &Subspace) -> Result<()> {
    if !ctx.is_lagrangian(s)? {
        return Err(Error::Precondition("subspace is not Lagrangian".into()));
    }
    Ok(())
}

/// The Lagrangians containing a 9-dimensional isotropic `U`: the hyperplanes
/// of `U^perp` through `U`, parametrized as `U + <t c0 + s c1>`.
#[derive(Clone, Debug)]
pub struct LagrangianPencil {
    core: Subspace,
    c0: Vec<Scalar>,
    c1: Vec<Scalar>,
}

impl LagrangianPencil {
    pub fn core(&self) -> &Subspace {
        &self.core
    }

    pub fn member(&self, t: &Scalar, s: &Scalar) -> Result<Subspace> {
        if t.is_zero() && s.is_zero() {
            return Err(Error::ZeroVector);
        }
        let x: Vec<Scalar> = self
            .c0
            .iter()
            .zip(&self.c1)
            .map(|(a, b)| &(t * a) + &(s * b))
            .collect();
        let mut vectors = self.core.basis_vectors();
        vectors.push(x);
        Subspace::span(self.core.field(), DIM_FORMS, vectors)
    }

    pub fn generators(&self) -> Result<(Subspace, Subspace)> {
        let f = self.core.field();
        Ok((self.member(&f.one(), &f.zero())?, self.member(&f.zero(), &f.one())?))
    }

    /// Whether `s` is a member, i.e. a Lagrangian between the core and its orthogonal.
    pub fn contains(&self, ctx: &SymplecticContext, s: &Subspace) -> Result<bool> {
        Ok(ctx.is_lagrangian(s)? && s.contains_subspace(&self.core))
    }
}

pub fn pencil_through(ctx: &SymplecticContext, u: &Subspace) -> Result<LagrangianPencil> {
    if u.dim() != LAGRANGIAN_DIM - 1 {
        return Err(Error::DimensionMismatch {
            expected: LAGRANGIAN_DIM - 1,
            got: u.dim(),
        });
    }
    if !ctx.is_isotropic(u)? {
        return Err(Error::NotIsotropic);
    }
    let orth = ctx.perp(u)?;
    // U^perp / U is a plane; lift a basis of it from the canonical basis of U^perp
    let mut lifts = Vec::new();
    let mut span = u.clone();
    for x in orth.basis_vectors() {
        if !span.contains(&x) {
            let mut vectors = span.basis_vectors();
            vectors.push(x.clone());
            span = Subspace::span(u.field(), DIM_FORMS, vectors)?;
            lifts.push(x);
        }
    }
    let [c0, c1]: [Vec<Scalar>; 2] = lifts
        .try_into()
        .map_err(|_| Error::Inconsistent("U^perp / U is not a plane".into()))?;
    let pencil = LagrangianPencil {
        core: u.clone(),
        c0,
        c1,
    };
    let f = u.field();
    let params = [(1, 0), (0, 1), (1, 1)];
    let members = params
        .iter()
        .map(|&(t, s)| pencil.member(&f.from_i64(t), &f.from_i64(s)))
        .collect::<Result<Vec<_>>>()?;
    for (i, m) in members.iter().enumerate() {
        assert!(ctx.is_lagrangian(m)?, "pencil member is not Lagrangian");
        for other in &members[i + 1..] {
            assert_eq!(m.meet(other)?, *u, "pencil members meet outside the core");
        }
    }
    Ok(pencil)
}

fn adapted_common_part(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    let u = a.meet(b)?;
    if u.dim() != LAGRANGIAN_DIM - 1 || a == b {
        return Err(Error::Precondition(format!(
            "expected Lagrangians meeting in dimension 9, got {}",
            u.dim()
        )));
    }
    Ok(u)
}

/// Dimension of the pairs `(q_A, q_B)` of quadratic forms on `A` and `B` that
/// agree on `A n B`.
pub fn omega_tangent_dim(ctx: &SymplecticContext, a: &Subspace, b: &Subspace) -> Result<usize> {
    omega_tangent_dim_with(ctx, a, b, true)
}

/// As [`omega_tangent_dim`], optionally dropping the agreement condition.
pub fn omega_tangent_dim_with(
    ctx: &SymplecticContext,
    a: &Subspace,
    b: &Subspace,
    agree: bool,
) -> Result<usize> {
    check_lagrangian(ctx, a)?;
    check_lagrangian(ctx, b)?;
    let u = adapted_common_part(a, b)?;
    let unknowns = 2 * SYM2_DIM;
    if !agree {
        return Ok(unknowns);
    }
    let ra = restriction_rows(a, &u)?;
    let rb = restriction_rows(b, &u)?;
    let rows = ra
        .into_iter()
        .zip(rb)
        .map(|(x, y)| x.into_iter().chain(y.into_iter().map(|c| -c)).collect())
        .collect();
    let system = Matrix::from_rows(ctx.field(), unknowns, rows)?;
    Ok(unknowns - system.rank())
}

fn check_independent(field: Field, vectors: &[Vec<Scalar>]) -> Result<()> {
    if vectors.is_empty() {
        return Ok(());
    }
    let m = Matrix::from_rows(field, DIM_FORMS, vectors.to_vec())?;
    if m.rank() != vectors.len() {
        return Err(Error::Degenerate("vectors are dependent".into()));
    }
    Ok(())
}

fn differential_system(
    b: &Subspace,
    u: &Subspace,
    alphas: &[Vec<Scalar>],
) -> Result<Matrix> {
    if u.dim() + 1 != b.dim() || !b.contains_subspace(u) {
        return Err(Error::Precondition("u is not a hyperplane of B".into()));
    }
    let mut rows = restriction_rows(b, u)?;
    for alpha in alphas {
        let x = coords_in(b, alpha)?;
        rows.push(bilinear_row(&x, &x));
    }
    Matrix::from_rows(b.field(), SYM2_DIM, rows)
}

/// Dimension of `{q on B : q|_u = 0, q(alpha_i) = 0}` for ten independent
/// `alpha_i` of `B` outside the hyperplane `u`.
pub fn injective_differential_kernel(
    ctx: &SymplecticContext,
    b: &Subspace,
    u: &Subspace,
    alphas: &[Vec<Scalar>],
) -> Result<usize> {
    check_lagrangian(ctx, b)?;
    if alphas.len() != LAGRANGIAN_DIM {
        return Err(Error::DimensionMismatch {
            expected: LAGRANGIAN_DIM,
            got: alphas.len(),
        });
    }
    check_independent(b.field(), alphas)?;
    if alphas.iter().any(|a| u.contains(a)) {
        return Err(Error::Precondition("some alpha lies in u".into()));
    }
    let system = differential_system(b, u, alphas)?;
    Ok(SYM2_DIM - system.rank())
}

/// The same kernel without any hypothesis on the alphas beyond lying in `B`.
pub fn injective_differential_kernel_relaxed(
    ctx: &SymplecticContext,
    b: &Subspace,
    u: &Subspace,
    alphas: &[Vec<Scalar>],
) -> Result<usize> {
    check_lagrangian(ctx, b)?;
    let system = differential_system(b, u, alphas)?;
    Ok(SYM2_DIM - system.rank())
}

/// `perp(A n B) = A + B`.
pub fn perp_sum_identity(ctx: &SymplecticContext, a: &Subspace, b: &Subspace) -> Result<bool> {
    check_lagrangian(ctx, a)?;
    check_lagrangian(ctx, b)?;
    Ok(ctx.perp(&a.meet(b)?)? == a.join(b)?)
}

/// Quadratic forms on `A` vanishing at the given decomposable forms.
#[derive(Clone, Debug)]
pub struct SigmaTangent {
    pub base: Subspace,
    /// Solutions, in upper-triangular coordinates.
    pub solutions: Subspace,
    /// Whether the evaluation conditions were linearly independent.
    pub independent_conditions: bool,
}

impl SigmaTangent {
    pub fn dim(&self) -> usize {
        self.solutions.dim()
    }

    pub fn forms(&self) -> Result<Vec<QuadraticFormOn>> {
        self.solutions
            .basis_vectors()
            .iter()
            .map(|c| QuadraticFormOn::from_sym_coords(self.base.clone(), c))
            .collect()
    }
}

pub fn sigma_tangent_space(
    ctx: &SymplecticContext,
    a: &Subspace,
    alphas: &[ExteriorVector],
) -> Result<SigmaTangent> {
    check_lagrangian(ctx, a)?;
    let mut rows = Vec::new();
    let mut raw = Vec::new();
    for alpha in alphas {
        if !is_decomposable(alpha)? {
            return Err(Error::Precondition("alpha is not decomposable".into()));
        }
        let x = coords_in(a, alpha.coords())?;
        rows.push(bilinear_row(&x, &x));
        raw.push(alpha.coords().to_vec());
    }
    check_independent(a.field(), &raw)?;
    let system = Matrix::from_rows(a.field(), SYM2_DIM, rows)?;
    let rank = system.rank();
    Ok(SigmaTangent {
        base: a.clone(),
        solutions: system.kernel_basis(),
        independent_conditions: rank == alphas.len(),
    })
}

/// Outcome of one everywhere-tangency construction.
#[derive(Clone, Debug)]
pub struct TangencyReport {
    pub v: ExteriorVector,
    pub alpha: ExteriorVector,
    pub a: Subspace,
    pub b: Subspace,
    pub a_v: Subspace,
    /// `F_v n A = F_v n B`.
    pub common_intersection: bool,
    /// `dim(F_v n (A + B))`.
    pub sum_intersection_dim: usize,
    /// `A_v` is a Lagrangian member of the pencil through `A n B`.
    pub a_v_in_pencil: bool,
    /// `dim(F_v n A_v)`.
    pub a_v_fiber_dim: usize,
    /// `dim(A_v n A)`.
    pub a_v_meet_a: usize,
    pub attempts: usize,
}

impl TangencyReport {
    pub fn holds(&self) -> bool {
        self.common_intersection
            && self.sum_intersection_dim == 2
            && self.a_v_in_pencil
            && self.a_v_fiber_dim >= 2
    }
}

/// Builds `v`, `alpha = v ^ beta`, a Lagrangian `A` through `alpha`, a
/// hyperplane `u` of `A` through `alpha`, and a second member `B` of the pencil
/// through `u`; then measures the tangency identities. Samples where
/// `F_v n A` is larger than `<alpha>` or `B` happens to be `A_v` are redrawn.
pub fn tangency_scenario<R: Rng + ?Sized>(
    ctx: &Arc<SymplecticContext>,
    budget: usize,
    rng: &mut R,
) -> Result<TangencyReport> {
    let field = ctx.field();
    for attempt in 1..=budget {
        let v = ExteriorVector::random(field, DIM_V, 1, rng);
        let beta = ExteriorVector::random(field, DIM_V, 2, rng);
        let alpha = v.wedge(&beta)?;
        if v.is_zero() || alpha.is_zero() {
            continue;
        }
        let line = Subspace::span(field, DIM_FORMS, vec![alpha.coords().to_vec()])?;
        let a = ctx.lagrangian_completion(&line, rng)?;
        let fv = f_of(&v)?;
        if fv.meet(&a)?.dim() != 1 {
            continue;
        }
        let ax = coords_in(&a, alpha.coords())?;
        let mut phi = field.random_vector(LAGRANGIAN_DIM, rng);
        // force phi(alpha) = 0 by correcting the last coordinate it touches
        let Some(k) = ax.iter().rposition(|x| !x.is_zero()) else {
            continue;
        };
        phi[k] = field.zero();
        let partial = crate::arith::dot(&phi, &ax);
        phi[k] = -(&partial / &ax[k]);
        if phi.iter().all(Scalar::is_zero) {
            continue;
        }
        let u = a.hyperplane(&phi)?;
        debug_assert!(u.contains(alpha.coords()));
        let pencil = pencil_through(ctx, &u)?;
        let b = pencil.member(&field.random(rng), &field.random_nonzero(rng))?;
        if b == a {
            continue;
        }
        let sum = a.join(&b)?;
        let fv_sum = fv.meet(&sum)?;
        let a_v = a.meet(&b)?.join(&fv_sum)?;
        if a_v == b || a_v == a {
            continue;
        }
        let common_intersection = fv.meet(&a)? == fv.meet(&b)?;
        let a_v_in_pencil = pencil.contains(ctx, &a_v)?;
        let a_v_fiber_dim = if a_v_in_pencil {
            let datum = EpwDatum::new(ctx.clone(), a_v.clone())?;
            fiber_intersection_dim(&datum, &v)?
        } else {
            fv.meet(&a_v)?.dim()
        };
        let a_v_meet_a = a_v.meet(&a)?.dim();
        return Ok(TangencyReport {
            v,
            alpha,
            a,
            b,
            sum_intersection_dim: fv_sum.dim(),
            a_v,
            common_intersection,
            a_v_in_pencil,
            a_v_fiber_dim,
            a_v_meet_a,
            attempts: attempt,
        });
    }
    Err(Error::RetryBudget(budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epw::{a_plus, plane_plus};
    use crate::exterior::decomposable_of;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: Field = Field::Rational;
    const P: Field = Field::Prime(10007);

    fn e0_pencil(ctx: &SymplecticContext) -> (Subspace, LagrangianPencil) {
        let f = f_of(&ExteriorVector::unit(ctx.field(), DIM_V, 0)).unwrap();
        let mut phi = vec![ctx.field().zero(); LAGRANGIAN_DIM];
        phi[0] = ctx.field().one();
        phi[3] = ctx.field().from_i64(2);
        let u = f.hyperplane(&phi).unwrap();
        (f, pencil_through(ctx, &u).unwrap())
    }

    #[test]
    fn pencil_through_hyperplane_of_fiber() {
        let ctx = SymplecticContext::new(Q);
        let (f, pencil) = e0_pencil(&ctx);
        assert!(pencil.contains(&ctx, &f).unwrap());
        assert_eq!(ctx.perp(pencil.core()).unwrap().dim(), 11);
        let (a0, a1) = pencil.generators().unwrap();
        assert_eq!(a0.meet(&a1).unwrap(), *pencil.core());
        assert_eq!(a0.join(&a1).unwrap(), ctx.perp(pencil.core()).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let completed = ctx.lagrangian_completion(pencil.core(), &mut rng).unwrap();
        assert!(pencil.contains(&ctx, &completed).unwrap());
    }

    #[test]
    fn pencil_input_checks() {
        let ctx = SymplecticContext::new(Q);
        let f = f_of(&ExteriorVector::unit(Q, DIM_V, 0)).unwrap();
        assert!(matches!(
            pencil_through(&ctx, &f),
            Err(Error::DimensionMismatch { .. })
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let vectors = (0..9).map(|_| Q.random_vector(DIM_FORMS, &mut rng)).collect();
        let s = Subspace::span(Q, DIM_FORMS, vectors).unwrap();
        assert_eq!(pencil_through(&ctx, &s).unwrap_err(), Error::NotIsotropic);
    }

    #[test]
    fn omega_tangent_dimension() {
        let ctx = SymplecticContext::new(Q);
        let (_, pencil) = e0_pencil(&ctx);
        let (a, b) = pencil.generators().unwrap();
        assert_eq!(omega_tangent_dim(&ctx, &a, &b).unwrap(), 65);
        assert_eq!(omega_tangent_dim_with(&ctx, &a, &b, false).unwrap(), 110);
        assert!(omega_tangent_dim(&ctx, &a, &a).is_err());
        assert_eq!(SYM2_DIM, 55);
    }

    #[test]
    fn perp_sum_cases() {
        let ctx = SymplecticContext::new(P);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = ctx.random_lagrangian(&mut rng);
        let b = ctx.random_lagrangian(&mut rng);
        assert!(perp_sum_identity(&ctx, &a, &a).unwrap());
        assert_eq!(a.meet(&b).unwrap().dim(), 0);
        assert!(perp_sum_identity(&ctx, &a, &b).unwrap());
        let (_, pencil) = e0_pencil(&ctx);
        let (a0, a1) = pencil.generators().unwrap();
        assert!(perp_sum_identity(&ctx, &a0, &a1).unwrap());
        assert_eq!(a0.join(&a1).unwrap().dim(), 11);
    }

    fn admissible(
        ctx: &SymplecticContext,
        rng: &mut ChaCha8Rng,
    ) -> (Subspace, Subspace, Vec<Vec<Scalar>>) {
        let b = ctx.random_lagrangian(rng);
        let phi = ctx.field().random_vector(LAGRANGIAN_DIM, rng);
        let u = b.hyperplane(&phi).unwrap();
        let alphas = (0..LAGRANGIAN_DIM)
            .map(|_| b.combine(&ctx.field().random_vector(LAGRANGIAN_DIM, rng)))
            .collect();
        (b, u, alphas)
    }

    #[test]
    fn injective_differential_over_q() {
        let ctx = SymplecticContext::new(Q);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (b, u, alphas) = admissible(&ctx, &mut rng);
        assert_eq!(injective_differential_kernel(&ctx, &b, &u, &alphas).unwrap(), 0);
        assert_eq!(
            injective_differential_kernel_relaxed(&ctx, &b, &u, &alphas[..9]).unwrap(),
            1
        );
    }

    #[test]
    fn injective_differential_rejects_bad_alphas() {
        let ctx = SymplecticContext::new(P);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (b, u, mut alphas) = admissible(&ctx, &mut rng);
        let mut dependent = alphas.clone();
        dependent[9] = dependent[0].clone();
        assert!(matches!(
            injective_differential_kernel(&ctx, &b, &u, &dependent),
            Err(Error::Degenerate(_))
        ));
        alphas[2] = u.basis_vectors()[0].clone();
        assert!(matches!(
            injective_differential_kernel(&ctx, &b, &u, &alphas),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn alphas_in_another_hyperplane_leave_a_kernel() {
        let ctx = SymplecticContext::new(P);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let (b, u, _) = admissible(&ctx, &mut rng);
        let other = b.hyperplane(&P.random_vector(LAGRANGIAN_DIM, &mut rng)).unwrap();
        let alphas: Vec<_> = (0..LAGRANGIAN_DIM)
            .map(|_| other.combine(&P.random_vector(9, &mut rng)))
            .collect();
        assert_eq!(
            injective_differential_kernel_relaxed(&ctx, &b, &u, &alphas).unwrap(),
            1
        );
    }

    #[test]
    fn sigma_tangent_dimensions() {
        let ctx = Arc::new(SymplecticContext::new(P));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ubasis: Vec<Vec<Scalar>> = (0..4)
            .map(|i| (0..4).map(|j| P.from_i64((i == j) as i64)).collect())
            .collect();
        let ap = a_plus(ctx.clone(), &ubasis, &mut rng).unwrap();
        let a = ap.space();
        let alphas: Vec<ExteriorVector> = (0..10)
            .map(|_| {
                let u = P.random_vector(4, &mut rng);
                decomposable_of(&plane_plus(P, &ubasis, &u).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(sigma_tangent_space(&ctx, a, &[]).unwrap().dim(), 55);
        assert_eq!(sigma_tangent_space(&ctx, a, &alphas[..1]).unwrap().dim(), 54);
        let t = sigma_tangent_space(&ctx, a, &alphas).unwrap();
        assert!(t.independent_conditions);
        assert_eq!(t.dim(), 45);
        let q = &t.forms().unwrap()[0];
        for alpha in &alphas {
            assert!(q.eval(alpha.coords(), alpha.coords()).unwrap().is_zero());
        }
        let outside = ExteriorVector::random(P, DIM_V, 3, &mut rng);
        assert!(sigma_tangent_space(&ctx, a, &[outside]).is_err());
    }

    #[test]
    fn tangency_scenarios_hold() {
        let ctx = Arc::new(SymplecticContext::new(P));
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..5 {
            let r = tangency_scenario(&ctx, 10, &mut rng).unwrap();
            assert!(r.holds(), "{r:?}");
            assert_eq!(r.a_v_meet_a, 9);
            assert!(f_of(&r.v).unwrap().meet(&r.b).unwrap().dim() >= 1);
        }
    }
}
