use epw_core::chow::{
    canonical_class_replay, chern_difference, chi_polynomial, derive_section8, hirzebruch_chi,
    hrr_chi, rat, thom_porteous_table, todd_from_c, BundleClass, EmbeddingModel, FormalClass,
    Section8, VarietyModel,
};
use epw_core::Result;
use rand_chacha::ChaCha8Rng;

use crate::{CheckSpec, Options, Outcome};

pub fn checks() -> Vec<CheckSpec> {
    vec![
        CheckSpec::new("degree_table_thom_porteous", "3 Z = 15 h^2 - c2(X) paired with h^2, c2(X) and Z", table),
        CheckSpec::new("hirzebruch_chi", "chi(O_X) = (c2^2 - c4/3)/240 = 3", hirzebruch),
        CheckSpec::new("todd_symplectic", "td_4 of a symplectic fourfold is (3 c2^2 - c4)/720", todd4),
        CheckSpec::new("degeneracy_class", "c2(f* T_P5 - T_X) = 15 h^2 - c2(X), a surface of degree 40", degeneracy),
        CheckSpec::new("hrr_polynomial", "chi(O_X(n)) = n^4/2 + 5n^2/2 + 3", hrr),
        CheckSpec::new("chi_o3", "h^0(O_X(3)) = 66", chi_o3),
        CheckSpec::new("c_q_whitney", "c(Q) from the cotangent sequence of the double cover", whitney),
        CheckSpec::new("ch_push_det", "ch(i_* det T_Z) by Grothendieck-Riemann-Roch", ch_push_det),
        CheckSpec::new("ch_push_tangent", "ch(i_* T_Z) by Grothendieck-Riemann-Roch", ch_push_tangent),
        CheckSpec::new("c_push_det", "Chern classes of i_* det T_Z", c_push_det),
        CheckSpec::new("c_push_tangent", "Chern classes of i_* T_Z", c_push_tangent),
        CheckSpec::new("c2_q_extension", "c2(Q) = -3Z from both computations", c2_q),
        CheckSpec::new("c3_q_extension", "c3(Q) = -21 h.Z from the extension", c3_q),
        CheckSpec::new("c2h_equals_5h3", "c2(X).h = 5h^3 relation", c2h),
        CheckSpec::new("c4_relation", "c4(X) is a combination of h^4, h^2.Z and Z^2", c4_relation),
        CheckSpec::new("c4_degree", "c4(X) = 324", c4_degree),
        CheckSpec::new("canonical_class_surface", "2 K_Z = O_Z(6)", canonical),
    ]
}

pub fn embedding() -> EmbeddingModel {
    EmbeddingModel::lagrangian_surface(VarietyModel::double_epw())
}

pub fn section8() -> Result<Section8> {
    derive_section8(&embedding())
}

fn chern_list(b: &BundleClass) -> String {
    let parts: Vec<String> = (1..=4).map(|k| b.c(k).to_string()).collect();
    format!("({})", parts.join(", "))
}

fn table(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let rows = thom_porteous_table(&VarietyModel::double_epw())?;
    let got: Vec<String> = rows.iter().map(|(m, l, r)| format!("{m}: {l} = {r}")).collect();
    Ok(Outcome::compare("h^2: 120 = 120, c2: 72 = 72, Z: 576 = 576", got.join(", ")))
}

fn hirzebruch(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    Ok(Outcome::compare(3, hirzebruch_chi(&VarietyModel::double_epw())?))
}

fn todd4(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let m = VarietyModel::double_epw();
    let td = todd_from_c(&m.tangent());
    let expected = FormalClass::parse(m.ring(), "1 + 1/12*c2 + 1/240*c2^2 - 1/720*c4")?;
    Ok(Outcome::compare(expected, td))
}

fn degeneracy(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let m = VarietyModel::double_epw();
    let r = m.ring();
    let p5 = BundleClass::new(
        r,
        rat(5),
        ["6*h", "15*h^2", "20*h^3", "15*h^4"]
            .iter()
            .map(|s| FormalClass::parse(r, s))
            .collect::<Result<_>>()?,
    )?;
    let d = chern_difference(&p5, &m.tangent())?;
    let deg = m.degree(&d.mul(&m.class("h").pow(2))?)?;
    Ok(Outcome::compare("15*h^2 - c2, degree 120 = 3*40", format!("{d}, degree {deg} = 3*40")))
}

fn hrr(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let m = VarietyModel::double_epw();
    let mut expected = Vec::new();
    let mut got = Vec::new();
    for n in -3..=5 {
        expected.push(chi_polynomial(n).to_string());
        got.push(hrr_chi(&m, &m.line(n))?.to_string());
    }
    Ok(Outcome::compare(expected.join(" "), got.join(" ")))
}

fn chi_o3(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let m = VarietyModel::double_epw();
    Ok(Outcome::compare(66, hrr_chi(&m, &m.line(3))?))
}

fn whitney(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare("(0, -3*Z, -70*h^3, -435*h^4 + 45*h^2*Z + c4)", chern_list(&s.whitney)))
}

fn ch_push_det(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare("Z - 9/2*h*Z + 21/2*h^2*Z - 1/12*Z^2", s.ch_push_det))
}

fn ch_push_tangent(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare("2*Z - 6*h*Z + 12*h^2*Z - 7/6*Z^2", s.ch_push_tangent))
}

fn c_push_det(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare("(0, -Z, -9*h*Z, -63*h^2*Z + Z^2)", chern_list(&s.c_push_det)))
}

fn c_push_tangent(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare("(0, -2*Z, -12*h*Z, -72*h^2*Z + 9*Z^2)", chern_list(&s.c_push_tangent)))
}

fn c2_q(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare(
        "whitney -3*Z, extension -3*Z",
        format!("whitney {}, extension {}", s.whitney.c(2), s.extension.c(2)),
    ))
}

fn c3_q(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare(
        "whitney -70*h^3, extension -21*h*Z",
        format!("whitney {}, extension {}", s.whitney.c(3), s.extension.c(3)),
    ))
}

fn c2h(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare("h*Z = 10/3*h^3, c2*h = 5*h^3", format!("h*Z = {}, c2*h = {}", s.hz, s.c2h)))
}

fn c4_relation(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare("435*h^4 - 180*h^2*Z + 12*Z^2", s.c4))
}

fn c4_degree(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let s = section8()?;
    Ok(Outcome::compare(324, s.c4_degree))
}

fn canonical(_: &mut ChaCha8Rng, _: &Options) -> Result<Outcome> {
    let emb = embedding();
    let c1_f = FormalClass::parse(&emb.surface, "-6*hZ")?;
    let r = canonical_class_replay(&emb, &c1_f)?;
    Ok(Outcome::holds(
        r.residual.is_zero() && r.consistent,
        "2c1(N) = 6*hZ, consistent with c1(N) = 3*hZ",
        format!(
            "2c1(N) = {}, {}",
            r.two_c1_normal,
            if r.consistent { "consistent with c1(N) = 3*hZ" } else { "inconsistent" }
        ),
    ))
}
