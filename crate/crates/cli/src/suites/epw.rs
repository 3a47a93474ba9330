use std::sync::Arc;

use epw_core::arith::{Field, Matrix, Scalar, Subspace};
use epw_core::epw::{
    a_minus, a_plus, default_chart, find_point_on_y, fiber_generator, gradient_det,
    is_smooth_point, random_chart_line, sextic_on_line, tangent_functional,
    triple_quadric_counterexample, EpwDatum, SEXTIC_DEGREE, U_DIM,
};
use epw_core::exterior::{
    decomposable_of, ExteriorVector, SymplecticContext, DIM_FORMS, DIM_V,
};
use epw_core::{Error, Result};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::frac;
use crate::{CheckSpec, Options, Outcome};

/// Lines tried per point before a root search gives up.
pub const ROOT_BUDGET: usize = 60;
/// Points drawn on one Lagrangian before a fresh one is sampled.
const POINTS_PER_DATUM: usize = 10;

pub fn checks() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("sextic_degree", "Y_A is a sextic hypersurface", sextic_degree),
        CheckSpec::new("a_plus_a_minus_split", "3-forms split as A+(U) + A-(U)", split),
        CheckSpec::new("triple_quadric_a_plus", "Y_A+(U) is the Grassmannian quadric counted three times", triple_plus),
        CheckSpec::new("triple_quadric_a_minus", "Y_A-(U) is the Grassmannian quadric counted three times", triple_minus),
        CheckSpec::new("smoothness_criterion", "smooth points of Y_A: F_v n A a line spanned by a non-decomposable form", smoothness),
        CheckSpec::new("tangent_hyperplane", "tangent hyperplane of Y_A at v is vol(v ^ . ^ a ^ a)", tangent),
    ]
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SexticStats {
    pub pairs: usize,
    pub within_bound: usize,
    pub exact_degree: usize,
}

/// Restricts `det` to a random line for `pairs` independent `(A, line)` draws.
pub fn sextic_degrees<R: Rng + ?Sized>(field: Field, pairs: usize, rng: &mut R) -> Result<SexticStats> {
    let ctx = Arc::new(SymplecticContext::new(field));
    let mut s = SexticStats { pairs, ..Default::default() };
    for _ in 0..pairs {
        let a = EpwDatum::random(ctx.clone(), rng);
        let (p, q) = loop {
            let (p, q) = random_chart_line(field, rng);
            if !q.is_zero() {
                break (p, q);
            }
        };
        match sextic_on_line(&a, &p, &q, 0) {
            Ok(poly) => {
                s.within_bound += 1;
                if poly.degree() == Some(SEXTIC_DEGREE) {
                    s.exact_degree += 1;
                }
            }
            Err(Error::Inconsistent(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(s)
}

fn sextic_degree(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let s = sextic_degrees(o.field(), o.trials, rng)?;
    let need = (o.trials * 95).div_ceil(100);
    Ok(Outcome::holds(
        s.within_bound == s.pairs && s.exact_degree >= need,
        format!("deg <= 6 on {}, deg = 6 on >= {need}", frac(s.pairs, s.pairs)),
        format!("deg <= 6 on {}, deg = 6 on {}", frac(s.within_bound, s.pairs), s.exact_degree),
    ))
}

/// A random basis of `U`.
pub fn random_u_basis<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Vec<Vec<Scalar>> {
    loop {
        let b: Vec<Vec<Scalar>> = (0..U_DIM).map(|_| field.random_vector(U_DIM, rng)).collect();
        if Matrix::from_rows(field, U_DIM, b.clone()).map(|m| m.rank()) == Ok(U_DIM) {
            return b;
        }
    }
}

/// `(dim A+, dim A-, both Lagrangian, A+ + A- is everything)`.
pub fn plus_minus_split<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Result<(usize, usize, bool, bool)> {
    let ctx = Arc::new(SymplecticContext::new(field));
    let u = random_u_basis(field, rng);
    let ap = a_plus(ctx.clone(), &u, rng)?;
    let am = a_minus(ctx.clone(), &u, rng)?;
    let lag = ctx.is_lagrangian(ap.space())? && ctx.is_lagrangian(am.space())?;
    let full = ap.space().join(am.space())? == Subspace::full(field, DIM_FORMS)
        && ap.space().meet(am.space())?.dim() == 0;
    Ok((ap.space().dim(), am.space().dim(), lag, full))
}

fn split(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let (p, m, lag, full) = plus_minus_split(o.field(), rng)?;
    let show = |p, m, lag: bool, full: bool| {
        format!(
            "dims ({p}, {m}), {}, {}",
            if lag { "Lagrangian" } else { "not Lagrangian" },
            if full { "direct sum is everything" } else { "not a splitting" }
        )
    };
    Ok(Outcome::compare(show(10, 10, true, true), show(p, m, lag, full)))
}

/// Number of sampled pairs `(v, w)` violating `det M(v) q(w)^3 = det M(w) q(v)^3`.
pub fn triple_quadric_failures<R: Rng + ?Sized>(
    field: Field,
    plus: bool,
    samples: usize,
    rng: &mut R,
) -> Result<usize> {
    let ctx = Arc::new(SymplecticContext::new(field));
    let u = random_u_basis(field, rng);
    let a = if plus { a_plus(ctx, &u, rng)? } else { a_minus(ctx, &u, rng)? };
    let mut failures = 0;
    for _ in 0..samples {
        if triple_quadric_counterexample(&a, 1, rng)?.is_some() {
            failures += 1;
        }
    }
    Ok(failures)
}

fn triple_plus(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let n = 2 * o.trials;
    let bad = triple_quadric_failures(o.field(), true, n, rng)?;
    Ok(Outcome::compare(format!("0 failures in {n}"), format!("{bad} failures in {n}")))
}

fn triple_minus(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let n = 2 * o.trials;
    let bad = triple_quadric_failures(o.field(), false, n, rng)?;
    Ok(Outcome::compare(format!("0 failures in {n}"), format!("{bad} failures in {n}")))
}

/// A Lagrangian through the decomposable form of a random 3-space `W`, and a point of `P(W)`.
pub fn sigma_point<R: Rng + ?Sized>(
    ctx: &Arc<SymplecticContext>,
    rng: &mut R,
) -> Result<(EpwDatum, ExteriorVector)> {
    let field = ctx.field();
    loop {
        let vectors: Vec<Vec<Scalar>> = (0..3).map(|_| field.random_vector(DIM_V, rng)).collect();
        let w = Subspace::span(field, DIM_V, vectors)?;
        if w.dim() != 3 {
            continue;
        }
        let line = Subspace::span(field, DIM_FORMS, vec![decomposable_of(&w)?.into_coords()])?;
        let a = EpwDatum::new(ctx.clone(), ctx.lagrangian_completion(&line, rng)?)?;
        let v = ExteriorVector::vector(field, w.combine(&field.random_vector(3, rng)))?;
        if !v.is_zero() {
            return Ok((a, v));
        }
    }
}

fn gradient_nonzero(a: &EpwDatum, v: &ExteriorVector) -> Result<bool> {
    let g = gradient_det(a, v, default_chart(v)?)?;
    Ok(g.iter().any(|x| !x.is_zero()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SmoothnessStats {
    pub points: usize,
    pub sigma_points: usize,
    pub smooth: usize,
    pub discrepancies: usize,
}

/// Compares `grad det != 0` with the fiber criterion at `points` points found
/// by root search and `sigma_points` points on planes contained in `A`.
pub fn smoothness_agreement<R: Rng + ?Sized>(
    field: Field,
    points: usize,
    sigma_points: usize,
    rng: &mut R,
) -> Result<SmoothnessStats> {
    let ctx = Arc::new(SymplecticContext::new(field));
    let mut s = SmoothnessStats { points, sigma_points, ..Default::default() };
    let mut datum = EpwDatum::random(ctx.clone(), rng);
    for i in 0..points {
        if i > 0 && i % POINTS_PER_DATUM == 0 {
            datum = EpwDatum::random(ctx.clone(), rng);
        }
        let v = find_point_on_y(&datum, ROOT_BUDGET, rng)?.v;
        let smooth = is_smooth_point(&datum, &v)?;
        s.smooth += usize::from(smooth);
        if smooth != gradient_nonzero(&datum, &v)? {
            s.discrepancies += 1;
        }
    }
    for _ in 0..sigma_points {
        let (a, v) = sigma_point(&ctx, rng)?;
        let smooth = is_smooth_point(&a, &v)?;
        s.smooth += usize::from(smooth);
        if smooth != gradient_nonzero(&a, &v)? {
            s.discrepancies += 1;
        }
    }
    Ok(s)
}

fn smoothness(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let sigma = o.trials.div_ceil(5);
    let s = smoothness_agreement(o.field(), o.trials - sigma.min(o.trials), sigma, rng)?;
    let total = s.points + s.sigma_points;
    Ok(Outcome::compare(
        format!("0 discrepancies at {total} points"),
        format!("{} discrepancies at {total} points", s.discrepancies),
    )
    .with_witness(format!("{} smooth, {} on planes in A", s.smooth, s.sigma_points)))
}

/// At `points` smooth points, whether the fiber functional is a nonzero
/// multiple of the gradient.
pub fn tangent_proportional_count<R: Rng + ?Sized>(
    field: Field,
    points: usize,
    rng: &mut R,
) -> Result<usize> {
    let ctx = Arc::new(SymplecticContext::new(field));
    let mut ok = 0;
    let mut done = 0;
    let mut datum = EpwDatum::random(ctx.clone(), rng);
    let mut misses = 0;
    while done < points {
        if done > 0 && done % POINTS_PER_DATUM == 0 {
            datum = EpwDatum::random(ctx.clone(), rng);
        }
        let v = find_point_on_y(&datum, ROOT_BUDGET, rng)?.v;
        if !is_smooth_point(&datum, &v)? {
            misses += 1;
            if misses > points {
                return Err(Error::RetryBudget(points));
            }
            continue;
        }
        done += 1;
        let alpha = fiber_generator(&datum, &v)?;
        let ell = tangent_functional(&datum, &v, &alpha)?;
        let grad = gradient_det(&datum, &v, default_chart(&v)?)?;
        let both = ell.iter().any(|x| !x.is_zero()) && grad.iter().any(|x| !x.is_zero());
        if both && Matrix::from_rows(field, DIM_V, vec![ell, grad])?.rank() == 1 {
            ok += 1;
        }
    }
    Ok(ok)
}

fn tangent(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let n = o.trials.div_ceil(2);
    let ok = tangent_proportional_count(o.field(), n, rng)?;
    Ok(Outcome::compare(frac(n, n), frac(ok, n)))
}
