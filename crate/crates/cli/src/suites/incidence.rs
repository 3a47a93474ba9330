use std::sync::Arc;

use epw_core::arith::{Field, Scalar, Subspace};
use epw_core::exterior::{SymplecticContext, LAGRANGIAN_DIM};
use epw_core::incidence::{
    injective_differential_kernel, omega_tangent_dim, pencil_through, perp_sum_identity,
    tangency_scenario,
};
use epw_core::Result;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::frac;
use crate::{CheckSpec, Options, Outcome};

/// Redraws allowed per tangency construction.
pub const TANGENCY_BUDGET: usize = 20;

pub fn checks() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("omega_tangent_dim", "dim of the tangent space to Omega is n + (n+1 choose 2) with n = 10", omega),
        CheckSpec::new("injective_differential", "the differential of the incidence map is injective", injective),
        CheckSpec::new("perp_of_meet", "(A n B)^perp = A + B", perp_meet),
        CheckSpec::new("tangency_scenario", "F_v n A = F_v n B, dim F_v n (A+B) = 2, A_v in the pencil, v in Y_A_v[2]", tangency),
    ]
}

/// Two distinct members of the pencil through a random hyperplane of a random Lagrangian.
pub fn pencil_pair<R: Rng + ?Sized>(ctx: &SymplecticContext, rng: &mut R) -> Result<(Subspace, Subspace)> {
    let f = ctx.field();
    loop {
        let b = ctx.random_lagrangian(rng);
        let phi = f.random_vector(LAGRANGIAN_DIM, rng);
        if phi.iter().all(Scalar::is_zero) {
            continue;
        }
        let u = b.hyperplane(&phi)?;
        let pencil = pencil_through(ctx, &u)?;
        let m0 = pencil.member(&f.random(rng), &f.random_nonzero(rng))?;
        let m1 = pencil.member(&f.random_nonzero(rng), &f.random(rng))?;
        if m0 != m1 {
            return Ok((m0, m1));
        }
    }
}

pub fn omega_dims<R: Rng + ?Sized>(field: Field, pairs: usize, rng: &mut R) -> Result<Vec<usize>> {
    let ctx = SymplecticContext::new(field);
    (0..pairs)
        .map(|_| {
            let (a, b) = pencil_pair(&ctx, rng)?;
            omega_tangent_dim(&ctx, &a, &b)
        })
        .collect()
}

fn omega(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let n = o.trials.div_ceil(5);
    let dims = omega_dims(o.field(), n, rng)?;
    let ok = dims.iter().filter(|&&d| d == 65).count();
    Ok(Outcome::compare(format!("65 on {}", frac(n, n)), format!("65 on {}", frac(ok, n))))
}

/// Kernels for `inputs` random admissible `(B, u, alphas)`: ten random
/// vectors of `B`, redrawn if dependent or inside `u`.
pub fn differential_kernels<R: Rng + ?Sized>(field: Field, inputs: usize, rng: &mut R) -> Result<Vec<usize>> {
    let ctx = SymplecticContext::new(field);
    let mut out = Vec::with_capacity(inputs);
    while out.len() < inputs {
        let b = ctx.random_lagrangian(rng);
        let phi = field.random_vector(LAGRANGIAN_DIM, rng);
        if phi.iter().all(Scalar::is_zero) {
            continue;
        }
        let u = b.hyperplane(&phi)?;
        let alphas: Vec<Vec<Scalar>> = (0..LAGRANGIAN_DIM)
            .map(|_| b.combine(&field.random_vector(LAGRANGIAN_DIM, rng)))
            .collect();
        match injective_differential_kernel(&ctx, &b, &u, &alphas) {
            Ok(k) => out.push(k),
            Err(epw_core::Error::Degenerate(_) | epw_core::Error::Precondition(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn injective(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let n = o.trials.div_ceil(2);
    let kernels = differential_kernels(Field::Rational, n, rng)?;
    let zero = kernels.iter().filter(|&&k| k == 0).count();
    Ok(Outcome::compare(
        format!("kernel 0 on {} over Q", frac(n, n)),
        format!("kernel 0 on {} over Q", frac(zero, n)),
    ))
}

fn perp_meet(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let ctx = SymplecticContext::new(o.field());
    let n = o.trials.min(10);
    let mut ok = 0;
    for _ in 0..n {
        let (a, b) = pencil_pair(&ctx, rng)?;
        let c = ctx.random_lagrangian(rng);
        if perp_sum_identity(&ctx, &a, &b)? && perp_sum_identity(&ctx, &a, &c)? {
            ok += 1;
        }
    }
    Ok(Outcome::compare(frac(n, n), frac(ok, n)))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TangencyStats {
    pub runs: usize,
    pub common_intersection: usize,
    pub sum_dim_two: usize,
    pub in_pencil: usize,
    pub on_y2: usize,
}

impl TangencyStats {
    pub fn all_hold(&self) -> bool {
        [self.common_intersection, self.sum_dim_two, self.in_pencil, self.on_y2]
            .iter()
            .all(|&k| k == self.runs)
    }
}

pub fn tangency_stats<R: Rng + ?Sized>(field: Field, runs: usize, rng: &mut R) -> Result<TangencyStats> {
    let ctx = Arc::new(SymplecticContext::new(field));
    let mut s = TangencyStats { runs, ..Default::default() };
    for _ in 0..runs {
        let r = tangency_scenario(&ctx, TANGENCY_BUDGET, rng)?;
        s.common_intersection += usize::from(r.common_intersection);
        s.sum_dim_two += usize::from(r.sum_intersection_dim == 2);
        s.in_pencil += usize::from(r.a_v_in_pencil);
        s.on_y2 += usize::from(r.a_v_fiber_dim >= 2);
    }
    Ok(s)
}

fn tangency(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let s = tangency_stats(o.field(), o.trials, rng)?;
    let n = s.runs;
    let show = |a, b, c, d| format!("(i) {} (ii) {} (iii) {} (iv) {}", frac(a, n), frac(b, n), frac(c, n), frac(d, n));
    Ok(Outcome::compare(
        show(n, n, n, n),
        show(s.common_intersection, s.sum_dim_two, s.in_pencil, s.on_y2),
    ))
}
