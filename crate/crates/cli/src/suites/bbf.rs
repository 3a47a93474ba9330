use epw_core::bbf::{
    chi_of_class, odd_section_count, verify_deg4_independence, verify_deg6, BBLattice, RANK,
};
use epw_core::Result;
use rand_chacha::ChaCha8Rng;

use crate::{CheckSpec, Options, Outcome};

pub fn checks() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("lattice_invariants", "H^2 is U^3 + E8(-1)^2 + <-2>", invariants),
        CheckSpec::new("fujiki_h4", "h^4 = 3 q(h,h)^2 = 12", h4),
        CheckSpec::new("fujiki_e4", "e^4 = 3 q(e,e)^2 = 12 for q(e,e) = -2", e4),
        CheckSpec::new("deg6_relation", "c2(X).h = 5h^3 against every class", deg6),
        CheckSpec::new("deg4_independence", "h^2 and c2(X) are linearly independent", deg4),
        CheckSpec::new("chi_minus_two", "chi(L) = 1 for q(L) = -2", chi_m2),
        CheckSpec::new("odd_cubic_sections", "h^0(O_X(3))_- = 66 - 56 = 10", odd_sections),
    ]
}

fn invariants(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let lat = BBLattice::default();
    let (p, n) = lat.signature();
    Ok(Outcome::compare("signature (3, 20), |det| 2", format!("signature ({p}, {n}), |det| {}", lat.det().magnitude())))
}

fn h4(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let lat = BBLattice::default();
    let h = BBLattice::polarization();
    Ok(Outcome::compare(12, lat.quad_intersection([&h, &h, &h, &h])?))
}

fn e4(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let lat = BBLattice::default();
    let e = BBLattice::minus_two_class();
    Ok(Outcome::compare("q = -2, e^4 = 12", format!("q = {}, e^4 = {}", lat.q(&e, &e)?, lat.quad_intersection([&e, &e, &e, &e])?)))
}

fn deg6(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let lat = BBLattice::default();
    let rows = verify_deg6(&lat, &BBLattice::polarization())?;
    let ok = rows.iter().filter(|r| r.holds()).count();
    Ok(Outcome::compare(format!("{RANK}/{RANK}"), format!("{ok}/{}", rows.len())))
}

fn deg4(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let lat = BBLattice::default();
    let w = verify_deg4_independence(&lat, &BBLattice::polarization())?;
    Ok(Outcome::holds(
        w.is_valid(),
        "isotropic witness with functional values (2q(h,a)^2, 0), first nonzero",
        format!("values ({}, {}), q(h,a) = {}", w.h2_value, w.qdual_value, w.h_alpha),
    )
    .with_witness(format!("{:?}", w.alpha)))
}

fn chi_m2(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    Ok(Outcome::compare(1, chi_of_class(-2)?))
}

fn odd_sections(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    Ok(Outcome::compare(10, odd_section_count()))
}
