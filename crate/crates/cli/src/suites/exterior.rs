use epw_core::arith::{Field, Subspace};
use epw_core::exterior::{
    f_of, is_decomposable, ExteriorVector, SymplecticContext, DIM_FORMS, DIM_V, LAGRANGIAN_DIM,
};
use epw_core::Result;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::frac;
use crate::{CheckSpec, Options, Outcome};

pub fn checks() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("fiber_lagrangian_fp", "F_v has dimension 10 and is Lagrangian", fiber_fp),
        CheckSpec::new("fiber_lagrangian_q", "F_v has dimension 10 and is Lagrangian", fiber_q),
        CheckSpec::new("volume_form_nondegenerate", "vol(a ^ b) is a symplectic form on 3-forms", nondegenerate),
        CheckSpec::new("decomposable_detection", "decomposable 3-forms are wedges of 3-spaces", decomposables),
        CheckSpec::new("random_lagrangian", "Lagrangian subspaces of the space of 3-forms", lagrangians),
    ]
}

fn nonzero_vector<R: Rng + ?Sized>(field: Field, rng: &mut R) -> ExteriorVector {
    loop {
        let v = ExteriorVector::random(field, DIM_V, 1, rng);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Number of sampled `v` whose `F_v` is a 10-dimensional Lagrangian.
pub fn fiber_lagrangian_count<R: Rng + ?Sized>(field: Field, samples: usize, rng: &mut R) -> Result<usize> {
    let ctx = SymplecticContext::new(field);
    let mut ok = 0;
    for _ in 0..samples {
        let fv = f_of(&nonzero_vector(field, rng))?;
        if fv.dim() == LAGRANGIAN_DIM && ctx.is_lagrangian(&fv)? {
            ok += 1;
        }
    }
    Ok(ok)
}

fn fiber_fp(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let ok = fiber_lagrangian_count(o.field(), o.trials, rng)?;
    Ok(Outcome::compare(frac(o.trials, o.trials), frac(ok, o.trials)))
}

fn fiber_q(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let ok = fiber_lagrangian_count(Field::Rational, o.trials, rng)?;
    Ok(Outcome::compare(frac(o.trials, o.trials), frac(ok, o.trials)))
}

fn nondegenerate(_: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let ctx = SymplecticContext::new(o.field());
    let g = ctx.gram();
    let skew = g.transpose() == g.scale(&-o.field().one());
    Ok(Outcome::compare("rank 20, skew", format!("rank {}, {}", g.rank(), if skew { "skew" } else { "not skew" })))
}

fn decomposables(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let f = o.field();
    let mut wedge_ok = 0;
    let mut generic_rejected = 0;
    for _ in 0..o.trials {
        let w = nonzero_vector(f, rng)
            .wedge(&nonzero_vector(f, rng))?
            .wedge(&nonzero_vector(f, rng))?;
        if w.is_zero() || is_decomposable(&w)? {
            wedge_ok += 1;
        }
        if !is_decomposable(&ExteriorVector::random(f, DIM_V, 3, rng))? {
            generic_rejected += 1;
        }
    }
    let n = o.trials;
    Ok(Outcome::compare(
        format!("{} wedges, {} generic rejected", frac(n, n), frac(n, n)),
        format!("{} wedges, {} generic rejected", frac(wedge_ok, n), frac(generic_rejected, n)),
    ))
}

fn lagrangians(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let ctx = SymplecticContext::new(o.field());
    let n = o.trials.min(10);
    let mut ok = 0;
    for _ in 0..n {
        let a = ctx.random_lagrangian(rng);
        let perp: Subspace = ctx.perp(&a)?;
        if ctx.is_lagrangian(&a)? && perp == a && a.ambient() == DIM_FORMS {
            ok += 1;
        }
    }
    Ok(Outcome::compare(frac(n, n), frac(ok, n)))
}
