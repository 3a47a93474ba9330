//! Degeneracy loci of a Lagrangian `A` against the fibers `F_v`.
//!
//! On the chart `v_c != 0` the fiber `F_v` has the frame `v ^ e_i ^ e_j`
//! over the ten pairs `i < j` avoiding `c`. The pairing matrix
//! `M(v)_{ij} = w(frame_i(v), a_j)` is linear in `v`; its determinant is the
//! sextic equation of `Y_A` times `v_c^4`, so on `v_c = 1` the two agree up to
//! a constant. Nothing here expands the sextic in six variables: degree
//! statements are checked on lines.

use std::sync::Arc;

use rand::Rng;

use crate::arith::{interpolate_univariate, Field, Matrix, Scalar, Subspace, UniPoly};
use crate::error::{Error, Result};
use crate::exterior::{
    basis_index, decomposable_of, f_of, merge_sign, ExteriorVector,
    SymplecticContext, DIM_FORMS, DIM_V,
};

/// Bound on the degree of `det M` along an affine line in a chart.
pub const SEXTIC_DEGREE: usize = 6;
/// `det M` is homogeneous of this degree in `v` on a fixed frame.
pub const FRAME_DEGREE: usize = 10;

/// A Lagrangian subspace of the 3-forms together with its canonical ordered basis.
#[derive(Clone, Debug)]
pub struct EpwDatum {
    ctx: Arc<SymplecticContext>,
    space: Subspace,
    // G * A^T, so that M(v) = frame(v) * paired
    paired: Matrix,
}

impl EpwDatum {
    pub fn new(ctx: Arc<SymplecticContext>, space: Subspace) -> Result<Self> {
        if !ctx.is_lagrangian(&space)? {
            return Err(Error::Precondition("subspace is not Lagrangian".into()));
        }
        let paired = ctx.gram().mul(&space.basis().transpose())?;
        Ok(EpwDatum { ctx, space, paired })
    }

    pub fn random<R: Rng + ?Sized>(ctx: Arc<SymplecticContext>, rng: &mut R) -> Self {
        let space = ctx.random_lagrangian(rng);
        Self::new(ctx, space).expect("random completion is Lagrangian")
    }

    pub fn field(&self) -> Field {
        self.ctx.field()
    }

    pub fn context(&self) -> &Arc<SymplecticContext> {
        &self.ctx
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }
}

fn check_point(field: Field, v: &ExteriorVector) -> Result<()> {
    if v.grade() != 1 || v.dim() != DIM_V {
        return Err(Error::GradeMismatch {
            expected: 1,
            got: v.grade(),
        });
    }
    if v.field() != field {
        return Err(Error::FieldMismatch(field, v.field()));
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Smallest index with a nonzero coordinate.
pub fn default_chart(v: &ExteriorVector) -> Result<usize> {
    v.coords()
        .iter()
        .position(|x| !x.is_zero())
        .ok_or(Error::ZeroVector)
}

/// The ten pairs `i < j` with `c` not in `{i, j}`, in lexicographic order.
pub fn chart_pairs(c: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(10);
    for i in 0..DIM_V {
        for j in i + 1..DIM_V {
            if i != c && j != c {
                out.push((i, j));
            }
        }
    }
    out
}

/// Coordinates of `v ^ e_i ^ e_j`.
fn v_wedge_pair(field: Field, v: &[Scalar], i: usize, j: usize) -> Vec<Scalar> {
    let pair = (1u8 << i) | (1u8 << j);
    let mut out = vec![field.zero(); DIM_FORMS];
    for (k, vk) in v.iter().enumerate() {
        if vk.is_zero() {
            continue;
        }
        let sign = merge_sign(1 << k, pair);
        if sign == 0 {
            continue;
        }
        let idx = basis_index(DIM_V, pair | (1 << k));
        out[idx] = if sign > 0 { vk.clone() } else { -vk };
    }
    out
}

/// The chart frame of `F_v` as a 10 x 20 matrix. Rows span `F_v` when `v_c != 0`.
pub fn chart_frame(v: &ExteriorVector, c: usize) -> Result<Matrix> {
    if c >= DIM_V {
        return Err(Error::InvalidChart(c));
    }
    let rows = chart_pairs(c)
        .into_iter()
        .map(|(i, j)| v_wedge_pair(v.field(), v.coords(), i, j))
        .collect();
    Matrix::from_rows(v.field(), DIM_FORMS, rows)
}

fn raw_pairing(a: &EpwDatum, v: &ExteriorVector, c: usize) -> Result<Matrix> {
    chart_frame(v, c)?.mul(&a.paired)
}

/// `M(v)_{ij} = w(v ^ e_{p_i}, a_j)` on chart `c`.
pub fn pairing_matrix(a: &EpwDatum, v: &ExteriorVector, c: usize) -> Result<Matrix> {
    check_point(a.field(), v)?;
    if c >= DIM_V || v.coords()[c].is_zero() {
        return Err(Error::InvalidChart(c));
    }
    raw_pairing(a, v, c)
}

/// `det M(v)` on the default chart of `v`.
pub fn chart_det(a: &EpwDatum, v: &ExteriorVector) -> Result<Scalar> {
    pairing_matrix(a, v, default_chart(v)?)?.det()
}

/// `dim(F_v n A)`, computed as `20 - rank` of the stacked bases.
pub fn fiber_intersection_dim(a: &EpwDatum, v: &ExteriorVector) -> Result<usize> {
    check_point(a.field(), v)?;
    let f = f_of(v)?;
    let stacked = f.basis().stack(a.space.basis())?;
    Ok(f.dim() + a.space.dim() - stacked.rank())
}

/// `F_v n A` as a subspace.
pub fn fiber_intersection(a: &EpwDatum, v: &ExteriorVector) -> Result<Subspace> {
    check_point(a.field(), v)?;
    f_of(v)?.meet(&a.space)
}

fn check_line(p: &ExteriorVector, q: &ExteriorVector, c: usize) -> Result<()> {
    if c >= DIM_V || !p.coords()[c].is_one() || !q.coords()[c].is_zero() {
        return Err(Error::InvalidChart(c));
    }
    Ok(())
}

/// `t -> det M(p + t q)` interpolated from eleven samples; degree at most six.
pub fn sextic_on_line(
    a: &EpwDatum,
    p: &ExteriorVector,
    q: &ExteriorVector,
    c: usize,
) -> Result<UniPoly> {
    check_point(a.field(), p)?;
    if q.field() != a.field() || q.grade() != 1 || q.dim() != DIM_V {
        return Err(Error::GradeMismatch {
            expected: 1,
            got: q.grade(),
        });
    }
    check_line(p, q, c)?;
    let field = a.field();
    let samples = (0..=FRAME_DEGREE as i64)
        .map(|t| {
            let t = field.from_i64(t);
            let v = p.add(&q.scale(&t))?;
            Ok((t, raw_pairing(a, &v, c)?.det()?))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = interpolate_univariate(&samples, FRAME_DEGREE)?;
    if poly.degree().is_some_and(|d| d > SEXTIC_DEGREE) {
        return Err(Error::Inconsistent(format!(
            "chart determinant has degree {} on a line",
            poly.degree().unwrap_or(0)
        )));
    }
    Ok(poly)
}

/// Exact gradient of `v -> det M(v)` at `v0`, frame fixed on chart `c`.
pub fn gradient_det(a: &EpwDatum, v0: &ExteriorVector, c: usize) -> Result<Vec<Scalar>> {
    check_point(a.field(), v0)?;
    if c >= DIM_V || v0.coords()[c].is_zero() {
        return Err(Error::InvalidChart(c));
    }
    let field = a.field();
    (0..DIM_V)
        .map(|k| {
            let ek = ExteriorVector::unit(field, DIM_V, k);
            let samples = (0..=FRAME_DEGREE as i64)
                .map(|t| {
                    let t = field.from_i64(t);
                    let v = v0.add(&ek.scale(&t))?;
                    Ok((t, raw_pairing(a, &v, c)?.det()?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(interpolate_univariate(&samples, FRAME_DEGREE)?.coeff(1))
        })
        .collect()
}

/// When `F_v n A` is a line `<v ^ alpha>`, a 2-form `alpha` spanning it
/// (read off the left kernel of the pairing matrix).
pub fn fiber_generator(a: &EpwDatum, v: &ExteriorVector) -> Result<ExteriorVector> {
    let c = default_chart(v)?;
    let m = pairing_matrix(a, v, c)?;
    let left = m.transpose().kernel_basis();
    if left.dim() != 1 {
        return Err(Error::Precondition(format!(
            "F_v meets A in dimension {}, expected 1",
            left.dim()
        )));
    }
    let x = left.basis().row(0);
    let field = a.field();
    let mut alpha = ExteriorVector::zero(field, DIM_V, 2);
    for (xi, (i, j)) in x.iter().zip(chart_pairs(c)) {
        let eij = ExteriorVector::basis_wedge(field, DIM_V, &[i, j]);
        alpha = alpha.add(&eij.scale(xi))?;
    }
    debug_assert!(a.space.contains(v.wedge(&alpha)?.coords()));
    Ok(alpha)
}

/// The hyperplane `v -> vol(v0 ^ v ^ alpha ^ alpha)` as six coefficients.
pub fn tangent_functional(
    a: &EpwDatum,
    v0: &ExteriorVector,
    alpha: &ExteriorVector,
) -> Result<Vec<Scalar>> {
    check_point(a.field(), v0)?;
    if alpha.grade() != 2 {
        return Err(Error::GradeMismatch {
            expected: 2,
            got: alpha.grade(),
        });
    }
    let gen = v0.wedge(alpha)?;
    if gen.is_zero() || !a.space.contains(gen.coords()) {
        return Err(Error::Precondition("v0 ^ alpha is not a nonzero element of A".into()));
    }
    if fiber_intersection_dim(a, v0)? != 1 {
        return Err(Error::Precondition("v0 lies on Y_A[2]".into()));
    }
    let aa = alpha.wedge(alpha)?;
    (0..DIM_V)
        .map(|k| {
            let ek = ExteriorVector::unit(a.field(), DIM_V, k);
            v0.wedge(&ek)?.wedge(&aa)?.vol()
        })
        .collect()
}

/// `dim(F_v n A) = 1` and the generator `v ^ alpha` has `v ^ alpha ^ alpha != 0`.
pub fn is_smooth_point(a: &EpwDatum, v: &ExteriorVector) -> Result<bool> {
    if fiber_intersection_dim(a, v)? != 1 {
        return Ok(false);
    }
    let alpha = fiber_generator(a, v)?;
    Ok(!v.wedge(&alpha)?.wedge(&alpha)?.is_zero())
}

/// `v ^ alpha` is decomposable as a 3-form exactly when `alpha` is
/// decomposable modulo `v`, i.e. `v ^ alpha ^ alpha = 0`.
pub fn is_decomposable_mod(v: &ExteriorVector, alpha: &ExteriorVector) -> Result<bool> {
    Ok(v.wedge(alpha)?.wedge(alpha)?.is_zero())
}

/// Whether `A` contains the decomposable form of the 3-space `w`.
pub fn sigma_membership(a: &EpwDatum, w: &Subspace) -> Result<bool> {
    let d = decomposable_of(w)?;
    if d.field() != a.field() {
        return Err(Error::FieldMismatch(a.field(), d.field()));
    }
    Ok(a.space.contains(d.coords()))
}

/// A point of `Y_A` together with the number of lines tried to find it.
#[derive(Clone, Debug)]
pub struct FoundPoint {
    pub v: ExteriorVector,
    pub attempts: usize,
}

/// A random affine point on chart 0 and a direction inside `v_0 = 0`.
pub fn random_chart_line<R: Rng + ?Sized>(
    field: Field,
    rng: &mut R,
) -> (ExteriorVector, ExteriorVector) {
    let mut p = field.random_vector(DIM_V, rng);
    p[0] = field.one();
    let mut q = field.random_vector(DIM_V, rng);
    q[0] = field.zero();
    (
        ExteriorVector::vector(field, p).expect("dim 6"),
        ExteriorVector::vector(field, q).expect("dim 6"),
    )
}

/// Restricts the sextic to random lines until one has a root in the prime field.
pub fn find_point_on_y<R: Rng + ?Sized>(
    a: &EpwDatum,
    budget: usize,
    rng: &mut R,
) -> Result<FoundPoint> {
    if !matches!(a.field(), Field::Prime(_)) {
        return Err(Error::Precondition("root search needs a prime field".into()));
    }
    for attempt in 1..=budget {
        let (p, q) = random_chart_line(a.field(), rng);
        if q.is_zero() {
            continue;
        }
        let sextic = sextic_on_line(a, &p, &q, 0)?;
        let t = if sextic.is_zero() {
            a.field().zero()
        } else {
            match sextic.roots_in_prime_field()?.into_iter().next() {
                Some(t) => t,
                None => continue,
            }
        };
        let v = p.add(&q.scale(&t))?;
        return Ok(FoundPoint {
            v,
            attempts: attempt,
        });
    }
    Err(Error::RetryBudget(budget))
}

/// `V` modeled as the 2-forms on a four-dimensional `U`: coordinate `k` of `V`
/// is the `k`-th pair of `{0,1,2,3}` in lexicographic order.
pub const U_DIM: usize = 4;

fn u_wedge(field: Field, x: &[Scalar], y: &[Scalar]) -> Result<ExteriorVector> {
    let x = ExteriorVector::from_coords(field, U_DIM, 1, x.to_vec())?;
    let y = ExteriorVector::from_coords(field, U_DIM, 1, y.to_vec())?;
    // grade-2 coordinates on U are already in the order of V's basis
    ExteriorVector::vector(field, x.wedge(&y)?.into_coords())
}

fn check_u_basis(field: Field, u_basis: &[Vec<Scalar>]) -> Result<()> {
    if u_basis.len() != U_DIM {
        return Err(Error::DimensionMismatch {
            expected: U_DIM,
            got: u_basis.len(),
        });
    }
    if Matrix::from_rows(field, U_DIM, u_basis.to_vec())?.rank() != U_DIM {
        return Err(Error::Degenerate("U basis is dependent".into()));
    }
    Ok(())
}

fn span_of_planes(
    ctx: Arc<SymplecticContext>,
    planes: Vec<Subspace>,
) -> Result<EpwDatum> {
    let field = ctx.field();
    let vectors = planes
        .iter()
        .map(|w| Ok(decomposable_of(w)?.into_coords()))
        .collect::<Result<Vec<_>>>()?;
    let space = Subspace::span(field, DIM_FORMS, vectors)?;
    if space.dim() != 10 {
        return Err(Error::Degenerate(format!(
            "sampled planes span dimension {}",
            space.dim()
        )));
    }
    EpwDatum::new(ctx, space)
}

/// The 3-space `u ^ U` of `V` for `u` in `U`.
pub fn plane_plus(field: Field, u_basis: &[Vec<Scalar>], u: &[Scalar]) -> Result<Subspace> {
    let vectors = u_basis
        .iter()
        .map(|b| Ok(u_wedge(field, u, b)?.into_coords()))
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(field, DIM_V, vectors)
}

/// The 3-space of 2-forms on the hyperplane `ker phi` of `U`.
pub fn plane_minus(field: Field, phi: &[Scalar]) -> Result<Subspace> {
    let h = Matrix::from_rows(field, U_DIM, vec![phi.to_vec()])?.kernel_basis();
    let hb = h.basis_vectors();
    let mut vectors = Vec::new();
    for i in 0..hb.len() {
        for j in i + 1..hb.len() {
            vectors.push(u_wedge(field, &hb[i], &hb[j])?.into_coords());
        }
    }
    Subspace::span(field, DIM_V, vectors)
}

const PLANE_SAMPLES: usize = 24;

/// Span of the planes `u ^ U` over sampled `u`.
pub fn a_plus<R: Rng + ?Sized>(
    ctx: Arc<SymplecticContext>,
    u_basis: &[Vec<Scalar>],
    rng: &mut R,
) -> Result<EpwDatum> {
    let field = ctx.field();
    check_u_basis(field, u_basis)?;
    let planes = (0..PLANE_SAMPLES)
        .map(|_| {
            let c = field.random_vector(U_DIM, rng);
            let u = combine(field, u_basis, &c);
            plane_plus(field, u_basis, &u)
        })
        .filter(|w| w.as_ref().map_or(true, |w| w.dim() == 3))
        .collect::<Result<Vec<_>>>()?;
    span_of_planes(ctx, planes)
}

/// Span of the planes of 2-forms on sampled hyperplanes of `U`.
pub fn a_minus<R: Rng + ?Sized>(
    ctx: Arc<SymplecticContext>,
    u_basis: &[Vec<Scalar>],
    rng: &mut R,
) -> Result<EpwDatum> {
    let field = ctx.field();
    check_u_basis(field, u_basis)?;
    let planes = (0..PLANE_SAMPLES)
        .map(|_| field.random_vector(U_DIM, rng))
        .filter(|phi| phi.iter().any(|x| !x.is_zero()))
        .map(|phi| plane_minus(field, &phi))
        .collect::<Result<Vec<_>>>()?;
    span_of_planes(ctx, planes)
}

fn combine(field: Field, basis: &[Vec<Scalar>], c: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); basis[0].len()];
    for (ci, b) in c.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(b) {
            *o = &*o + &(ci * x);
        }
    }
    out
}

/// Plucker quadric `v01 v23 - v02 v13 + v03 v12`, half the coefficient of `v ^ v`.
pub fn plucker_quadric(v: &ExteriorVector) -> Scalar {
    let x = v.coords();
    &(&(&x[0] * &x[5]) - &(&x[1] * &x[4])) + &(&x[2] * &x[3])
}

/// First pair `(v, w)` of chart-0 points with `q != 0` where
/// `det M(v) q(w)^3 != det M(w) q(v)^3`, if any.
pub fn triple_quadric_counterexample<R: Rng + ?Sized>(
    a: &EpwDatum,
    trials: usize,
    rng: &mut R,
) -> Result<Option<(ExteriorVector, ExteriorVector)>> {
    let field = a.field();
    let sample = |rng: &mut R| loop {
        let (p, _) = random_chart_line(field, rng);
        if !plucker_quadric(&p).is_zero() {
            return p;
        }
    };
    for _ in 0..trials {
        let v = sample(rng);
        let w = sample(rng);
        let lhs = &raw_pairing(a, &v, 0)?.det()? * &plucker_quadric(&w).pow(3);
        let rhs = &raw_pairing(a, &w, 0)?.det()? * &plucker_quadric(&v).pow(3);
        if lhs != rhs {
            return Ok(Some((v, w)));
        }
    }
    Ok(None)
}

/// Whether the chart sextic of `A` agrees with the cube of the Plucker quadric on all trials.
pub fn verify_triple_quadric<R: Rng + ?Sized>(
    a: &EpwDatum,
    trials: usize,
    rng: &mut R,
) -> Result<bool> {
    Ok(triple_quadric_counterexample(a, trials, rng)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::plane_of;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: Field = Field::Prime(10007);

    fn ctx(field: Field) -> Arc<SymplecticContext> {
        Arc::new(SymplecticContext::new(field))
    }

    fn std_u(field: Field) -> Vec<Vec<Scalar>> {
        (0..U_DIM)
            .map(|i| (0..U_DIM).map(|j| field.from_i64((i == j) as i64)).collect())
            .collect()
    }

    fn vec6(field: Field, c: &[i64]) -> ExteriorVector {
        ExteriorVector::vector(field, c.iter().map(|&x| field.from_i64(x)).collect()).unwrap()
    }

    #[test]
    fn frame_spans_fiber_on_its_chart() {
        let v = vec6(Field::Rational, &[0, 2, -1, 0, 3, 1]);
        let c = default_chart(&v).unwrap();
        assert_eq!(c, 1);
        let frame = chart_frame(&v, c).unwrap();
        assert_eq!(Subspace::row_space(&frame), f_of(&v).unwrap());
        assert_eq!(chart_frame(&v, 0).unwrap().rank(), 6);
    }

    #[test]
    fn generic_point_is_off_the_sextic() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = EpwDatum::random(ctx(P), &mut rng);
        let (v, _) = random_chart_line(P, &mut rng);
        assert_eq!(fiber_intersection_dim(&a, &v).unwrap(), 0);
        assert!(!chart_det(&a, &v).unwrap().is_zero());
        let stacked = f_of(&v).unwrap().basis().stack(a.space().basis()).unwrap();
        assert_eq!(stacked.rank(), 20);
    }

    #[test]
    fn invalid_chart_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = EpwDatum::random(ctx(P), &mut rng);
        let v = vec6(P, &[0, 1, 0, 0, 0, 0]);
        assert_eq!(pairing_matrix(&a, &v, 0), Err(Error::InvalidChart(0)));
        assert_eq!(pairing_matrix(&a, &v, 7), Err(Error::InvalidChart(7)));
    }

    #[test]
    fn generic_line_gives_a_sextic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = EpwDatum::random(ctx(P), &mut rng);
        let (p, q) = random_chart_line(P, &mut rng);
        let s = sextic_on_line(&a, &p, &q, 0).unwrap();
        assert_eq!(s.degree(), Some(6));
        for t in [0i64, 5, 17] {
            let t = P.from_i64(t);
            let v = p.add(&q.scale(&t)).unwrap();
            assert_eq!(s.eval(&t), pairing_matrix(&a, &v, 0).unwrap().det().unwrap());
        }
    }

    #[test]
    fn det_scales_with_tenth_power() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = EpwDatum::random(ctx(P), &mut rng);
        let (v, _) = random_chart_line(P, &mut rng);
        let lambda = P.from_i64(3);
        let d1 = pairing_matrix(&a, &v, 0).unwrap().det().unwrap();
        let d2 = pairing_matrix(&a, &v.scale(&lambda), 0).unwrap().det().unwrap();
        assert_eq!(d2, &d1 * &lambda.pow(10));
        assert_eq!(
            fiber_intersection_dim(&a, &v.scale(&lambda)).unwrap(),
            fiber_intersection_dim(&a, &v).unwrap()
        );
    }

    #[test]
    fn sigma_point_contains_the_plane() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c = ctx(P);
        let w = plane_of(P, &[vec6(P, &[1, 0, 0, 0, 2, 0]), vec6(P, &[0, 1, 0, 0, 0, 0]), vec6(P, &[0, 0, 1, 1, 0, 0])]).unwrap();
        let wedge = decomposable_of(&w).unwrap();
        let line = Subspace::span(P, DIM_FORMS, vec![wedge.into_coords()]).unwrap();
        let a = EpwDatum::new(c.clone(), c.lagrangian_completion(&line, &mut rng).unwrap()).unwrap();
        assert!(sigma_membership(&a, &w).unwrap());
        let v = vec6(P, &[1, 0, 0, 0, 2, 0]);
        assert!(fiber_intersection_dim(&a, &v).unwrap() >= 1);
        assert!(chart_det(&a, &v).unwrap().is_zero());
        assert!(!is_smooth_point(&a, &v).unwrap());
        assert!(gradient_det(&a, &v, 0).unwrap().iter().all(Scalar::is_zero));

        let b = EpwDatum::random(c, &mut rng);
        assert!(!sigma_membership(&b, &w).unwrap());
    }

    #[test]
    fn smooth_points_have_proportional_tangents() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let a = EpwDatum::random(ctx(P), &mut rng);
        for _ in 0..3 {
            let found = find_point_on_y(&a, 50, &mut rng).unwrap();
            let v = found.v;
            assert!(chart_det(&a, &v).unwrap().is_zero());
            assert_eq!(fiber_intersection_dim(&a, &v).unwrap(), 1);
            assert!(is_smooth_point(&a, &v).unwrap());
            let alpha = fiber_generator(&a, &v).unwrap();
            let ell = tangent_functional(&a, &v, &alpha).unwrap();
            let grad = gradient_det(&a, &v, 0).unwrap();
            let ratio = Matrix::from_rows(P, 6, vec![ell.clone(), grad.clone()]).unwrap();
            assert_eq!(ratio.rank(), 1);
            assert!(ell.iter().any(|x| !x.is_zero()));
            assert!(grad.iter().any(|x| !x.is_zero()));
            // v0 lies on its own tangent hyperplane
            assert!(crate::arith::dot(&ell, v.coords()).is_zero());
        }
    }

    #[test]
    fn decomposable_generator_gives_zero_functional() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c = ctx(P);
        let e = |i| ExteriorVector::unit(P, DIM_V, i);
        let alpha = e(1).wedge(&e(2)).unwrap();
        let v = e(0);
        let gen = v.wedge(&alpha).unwrap();
        let line = Subspace::span(P, DIM_FORMS, vec![gen.into_coords()]).unwrap();
        let a = EpwDatum::new(c.clone(), c.lagrangian_completion(&line, &mut rng).unwrap()).unwrap();
        assert_eq!(fiber_intersection_dim(&a, &v).unwrap(), 1);
        assert!(is_decomposable_mod(&v, &alpha).unwrap());
        let ell = tangent_functional(&a, &v, &alpha).unwrap();
        assert!(ell.iter().all(Scalar::is_zero));
    }

    #[test]
    fn triple_quadric_lagrangians() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let c = ctx(P);
        let ap = a_plus(c.clone(), &std_u(P), &mut rng).unwrap();
        let am = a_minus(c.clone(), &std_u(P), &mut rng).unwrap();
        assert_eq!(ap.space().dim(), 10);
        assert_eq!(am.space().dim(), 10);
        assert_eq!(ap.space().meet(am.space()).unwrap().dim(), 0);
        assert_eq!(
            ap.space().join(am.space()).unwrap(),
            Subspace::full(P, DIM_FORMS)
        );
        assert!(verify_triple_quadric(&ap, 5, &mut rng).unwrap());
        assert!(verify_triple_quadric(&am, 5, &mut rng).unwrap());
        let random = EpwDatum::random(c, &mut rng);
        assert!(!verify_triple_quadric(&random, 5, &mut rng).unwrap());
    }

    #[test]
    fn triple_quadric_line_is_a_cube() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let ap = a_plus(ctx(P), &std_u(P), &mut rng).unwrap();
        let (p, q) = random_chart_line(P, &mut rng);
        let s = sextic_on_line(&ap, &p, &q, 0).unwrap();
        // restriction of the Plucker quadric to the same line
        let samples: Vec<(Scalar, Scalar)> = (0..3)
            .map(|t| {
                let t = P.from_i64(t);
                let v = p.add(&q.scale(&t)).unwrap();
                (t, plucker_quadric(&v))
            })
            .collect();
        let quad = interpolate_univariate(&samples, 2).unwrap();
        assert!(s.is_proportional_to(&quad.pow(3)));
    }

    #[test]
    fn grassmannian_points_lie_on_a_plus_sextic() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let ap = a_plus(ctx(P), &std_u(P), &mut rng).unwrap();
        // a decomposable 2-form on U: x ^ y
        let x = P.random_vector(4, &mut rng);
        let y = P.random_vector(4, &mut rng);
        let v = u_wedge(P, &x, &y).unwrap();
        assert!(plucker_quadric(&v).is_zero());
        assert!(fiber_intersection_dim(&ap, &v).unwrap() >= 1);
        assert!(chart_det(&ap, &v).unwrap().is_zero());
    }

    #[test]
    fn planes_of_a_plus() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = std_u(P);
        let ap = a_plus(ctx(P), &u, &mut rng).unwrap();
        let w0 = plane_plus(P, &u, &u[0]).unwrap();
        let w1 = plane_plus(P, &u, &u[1]).unwrap();
        assert!(sigma_membership(&ap, &w0).unwrap());
        assert_eq!(w0.meet(&w1).unwrap().dim(), 1);
        let wedge = decomposable_of(&w0)
            .unwrap()
            .wedge(&decomposable_of(&w1).unwrap())
            .unwrap();
        assert!(wedge.is_zero());
    }

    #[test]
    fn degenerate_u_basis_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut u = std_u(P);
        u[3] = u[2].clone();
        assert!(matches!(
            a_plus(ctx(P), &u, &mut rng),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn root_search_on_a_plus_lands_on_the_quadric() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let ap = a_plus(ctx(P), &std_u(P), &mut rng).unwrap();
        let found = find_point_on_y(&ap, 100, &mut rng).unwrap();
        assert!(plucker_quadric(&found.v).is_zero());
    }

    #[test]
    fn root_search_needs_prime_field() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let a = EpwDatum::random(ctx(Field::Rational), &mut rng);
        assert!(find_point_on_y(&a, 3, &mut rng).is_err());
    }
}
