use epw_core::schubert::{sym6_top_chern, sym_top_chern_poly, Grassmannian, SchubertClass};
use epw_core::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::{CheckSpec, Options, Outcome};

/// The class of lines on a sextic fourfold as printed in the source; see
/// `sym6_top_chern` for the value the calculus produces.
pub const PUBLISHED_SYM6: &str = "57888·σ43";

pub fn checks() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("sym6_top_chern", "[R] = c7(Sym^6 S^dual) = 432*134 sigma_{4,3}", sym6),
        CheckSpec::new("sym6_root_product", "c7(Sym^6 S^dual) as a product over the 7 weights", root_product),
        CheckSpec::new("plucker_degree", "deg Gr(2,6) = 14", plucker),
        CheckSpec::new("poincare_duality", "sigma_lambda . sigma_mu = delta(mu, lambda complement)", duality),
        CheckSpec::new("pieri_associative", "Pieri products commute and associate", associative),
    ]
}

fn g26() -> Grassmannian {
    Grassmannian::new(2, 6).expect("valid")
}

fn sym6(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let c = sym6_top_chern();
    Ok(Outcome::compare(PUBLISHED_SYM6, &c)
        .with_witness(format!("deg([R] . sigma_1) = {}", c.pieri(1).integrate()?)))
}

/// `prod_i ((6 - i) a + i b)` at integer roots against the `e1, e2` expansion.
pub fn root_product_mismatches<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> usize {
    let poly = sym_top_chern_poly(6);
    (0..samples)
        .filter(|_| {
            let a = BigInt::from(rng.gen_range(-1000i64..=1000));
            let b = BigInt::from(rng.gen_range(-1000i64..=1000));
            let direct = (0..=6i64).fold(BigInt::one(), |acc, i| {
                acc * (BigInt::from(6 - i) * &a + BigInt::from(i) * &b)
            });
            let (e1, e2) = (&a + &b, &a * &b);
            let via_e = poly.iter().fold(BigInt::zero(), |acc, ((i, j), c)| {
                acc + c * num_traits::pow(e1.clone(), *i as usize) * num_traits::pow(e2.clone(), *j as usize)
            });
            direct != via_e
        })
        .count()
}

fn root_product(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let n = o.trials;
    let bad = root_product_mismatches(n, rng);
    let poly = sym_top_chern_poly(6);
    let shown: Vec<String> = poly.iter().rev().map(|((i, j), c)| format!("{c}*e1^{i}*e2^{j}")).collect();
    Ok(Outcome::compare(
        format!("0 mismatches in {n}"),
        format!("{bad} mismatches in {n}"),
    )
    .with_witness(shown.join(" + ")))
}

fn plucker(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    Ok(Outcome::compare(14, SchubertClass::special(g26(), 1).pow(8).integrate()?))
}

fn duality(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let g = g26();
    let parts = g.partitions();
    let mut bad = 0;
    for l in &parts {
        for m in &parts {
            if l.size() + m.size() != g.dim() {
                continue;
            }
            let x = SchubertClass::sigma(g, l.parts())?.mul(&SchubertClass::sigma(g, m.parts())?)?;
            let expect = BigInt::from(i32::from(*m == l.complement(g)));
            if x.integrate()? != expect {
                bad += 1;
            }
        }
    }
    Ok(Outcome::compare("0 violations", format!("{bad} violations")))
}

fn random_class<R: Rng + ?Sized>(g: Grassmannian, rng: &mut R) -> Result<SchubertClass> {
    let parts = g.partitions();
    let mut x = SchubertClass::zero(g);
    for _ in 0..3 {
        let p = &parts[rng.gen_range(0..parts.len())];
        let c = BigInt::from(rng.gen_range(-5i64..=5));
        x = x.add(&SchubertClass::sigma(g, p.parts())?.scale(&c))?;
    }
    Ok(x)
}

fn associative(rng: &mut ChaCha8Rng, o: &Options) -> Result<Outcome> {
    let n = o.trials.min(30);
    let mut bad = 0;
    for _ in 0..n {
        let g = if rng.gen_bool(0.5) { g26() } else { Grassmannian::new(3, 6)? };
        let (a, b, c) = (random_class(g, rng)?, random_class(g, rng)?, random_class(g, rng)?);
        let commute = a.mul(&b)? == b.mul(&a)?;
        let assoc = a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?;
        if !(commute && assoc) {
            bad += 1;
        }
    }
    Ok(Outcome::compare(format!("0 failures in {n}"), format!("{bad} failures in {n}")))
}
