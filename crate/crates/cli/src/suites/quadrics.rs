use epw_core::arith::Field;
use epw_core::quadrics::{
    bitangent_fixture, diagonal_census, field_scan, harris_tu_degree, quartic_surface,
    satisfies_polar_conditions, veronese_independence, LinePair, WebOfQuadrics,
};
use epw_core::Result;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::frac;
use crate::{CheckSpec, Options, Outcome};

/// Prime for the exhaustive scans of `P^3(F_p)`.
pub const SCAN_PRIME: u64 = 101;

pub fn checks() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("harris_tu_degrees", "degree of the rank <= 2 locus of a web is 10", harris_tu),
        CheckSpec::new("quartic_is_determinant", "singular members of a web form a quartic surface", quartic),
        CheckSpec::new("bitangent_pairs", "pairs on a base line satisfy every polar condition of the web", bitangents),
        CheckSpec::new("rank_census_diagonal", "rank strata of the diagonal web over a finite field", census_diagonal),
        CheckSpec::new("rank_two_members_singular", "rank <= 2 members are singular points of the quartic", census_random),
        CheckSpec::new("veronese_general_points", "ten general points impose independent conditions on quadrics", veronese),
    ]
}

fn harris_tu(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let got = format!(
        "(4,2) = {}, (4,3) = {}, (3,1) = {}",
        harris_tu_degree(4, 2)?,
        harris_tu_degree(4, 3)?,
        harris_tu_degree(3, 1)?
    );
    Ok(Outcome::compare("(4,2) = 10, (4,3) = 4, (3,1) = 4", got))
}

fn quartic(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let f = o.field();
    let web = WebOfQuadrics::random(f, rng);
    let poly = quartic_surface(&web)?;
    let n = o.trials.min(20);
    let mut agree = 0;
    for _ in 0..n {
        let t = f.random_vector(4, rng);
        if poly.eval(&t) == web.member(&t).det()? {
            agree += 1;
        }
    }
    let shape = |deg: Option<u32>, hom: bool| format!("homogeneous {hom}, degree {deg:?}");
    Ok(Outcome::compare(
        format!("{}, agrees on {}", shape(Some(4), true), frac(n, n)),
        format!("{}, agrees on {}", shape(poly.degree(), poly.is_homogeneous()), frac(agree, n)),
    ))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BitangentStats {
    pub fixtures: usize,
    pub recovered: usize,
    pub polar_ok: usize,
    pub swap_symmetric: usize,
}

pub fn bitangent_stats<R: Rng + ?Sized>(field: Field, fixtures: usize, rng: &mut R) -> Result<BitangentStats> {
    let mut s = BitangentStats { fixtures, ..Default::default() };
    for _ in 0..fixtures {
        let fx = bitangent_fixture(field, rng);
        let got = fx.solve()?;
        if let LinePair::Pair([x, y]) = &got {
            s.polar_ok += usize::from(satisfies_polar_conditions(&fx.web, x, y));
            s.recovered += usize::from([x, y] == [&fx.pair[0], &fx.pair[1]]);
        }
        s.swap_symmetric += usize::from(fx.solve_swapped()? == got);
    }
    Ok(s)
}

fn bitangents(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let n = o.trials.div_ceil(2);
    let s = bitangent_stats(o.field(), n, rng)?;
    let show = |a, b, c| format!("recovered {}, polar {}, swap {}", frac(a, n), frac(b, n), frac(c, n));
    Ok(Outcome::compare(show(n, n, n), show(s.recovered, s.polar_ok, s.swap_symmetric)))
}

fn census_diagonal(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let web = WebOfQuadrics::diagonal(Field::prime(SCAN_PRIME)?);
    let census = field_scan(&web)?;
    let show = |m: &std::collections::BTreeMap<usize, u64>| {
        m.iter().map(|(r, c)| format!("rank {r}: {c}")).collect::<Vec<_>>().join(", ")
    };
    Ok(Outcome::compare(show(&diagonal_census(SCAN_PRIME)), show(&census.counts)))
}

fn census_random(rng: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let web = WebOfQuadrics::random(Field::prime(SCAN_PRIME)?, rng);
    let census = field_scan(&web)?;
    let low = census.count(1) + census.count(2);
    Ok(Outcome::compare(
        "0 rank <= 2 members with nonzero gradient",
        format!("{} rank <= 2 members with nonzero gradient", census.rank2_smooth_violations),
    )
    .with_witness(format!("{low} members of rank <= 2 over F_{SCAN_PRIME}")))
}

fn veronese(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let f = o.field();
    let points: Vec<_> = (0..10).map(|_| f.random_vector(4, rng)).collect();
    Ok(Outcome::compare("rank 10", format!("rank {}", veronese_independence(f, &points)?)))
}
