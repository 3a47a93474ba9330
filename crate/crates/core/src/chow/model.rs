use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::bundle::{
    c_from_ch, ch_components, ch_from_c, ch_total, todd_from_c, whitney_solve, BundleClass,
};
use super::ring::{rat, ratio, ClassRing, FormalClass};
use crate::error::{Error, Result};

/// A fourfold with a degree functional on codimension-4 monomials.
#[derive(Clone, Debug)]
pub struct VarietyModel {
    ring: Arc<ClassRing>,
    degrees: BTreeMap<Vec<u32>, BigRational>,
}

impl VarietyModel {
    pub fn new(ring: Arc<ClassRing>, table: &[(&[(&str, u32)], i64)]) -> Result<Self> {
        let mut degrees = BTreeMap::new();
        for (factors, d) in table {
            let e = ring.monomial(factors)?;
            if ring.codim_of(&e) != ring.dim() {
                return Err(Error::WrongCodim {
                    expected: ring.dim() as usize,
                    got: ring.codim_of(&e) as usize,
                });
            }
            degrees.insert(e, rat(*d));
        }
        Ok(VarietyModel { ring, degrees })
    }

    /// The double cover of an EPW sextic: `h`, `c2 = c_2(X)`, `c4 = c_4(X)` and
    /// the class `Z` of the ramification surface.
    pub fn double_epw() -> Self {
        let ring = ClassRing::new(4, &[("h", 1), ("c2", 2), ("c4", 4), ("Z", 2)]);
        Self::new(
            ring,
            &[
                (&[("h", 4)], 12),
                (&[("h", 2), ("c2", 1)], 60),
                (&[("c2", 2)], 828),
                (&[("c4", 1)], 324),
                (&[("h", 2), ("Z", 1)], 40),
                (&[("c2", 1), ("Z", 1)], 24),
                (&[("Z", 2)], 192),
            ],
        )
        .expect("table is well formed")
    }

    pub fn ring(&self) -> &Arc<ClassRing> {
        &self.ring
    }

    pub fn class(&self, name: &str) -> FormalClass {
        FormalClass::symbol(&self.ring, name).expect("model symbol")
    }

    /// Degree of a pure top-codimension class.
    pub fn degree(&self, x: &FormalClass) -> Result<BigRational> {
        if x.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let mut acc = BigRational::zero();
        for (e, c) in x.terms() {
            let codim = self.ring.codim_of(e);
            if codim != self.ring.dim() {
                return Err(Error::WrongCodim {
                    expected: self.ring.dim() as usize,
                    got: codim as usize,
                });
            }
            let d = self
                .degrees
                .get(e)
                .ok_or_else(|| Error::MissingMonomial(format!("{:?}", e)))?;
            acc += c * d;
        }
        Ok(acc)
    }

    /// `deg(x * h^(4 - codim x))` for pure `x`.
    pub fn degree_against_h(&self, x: &FormalClass, codim: u32) -> Result<BigRational> {
        let h = self.class("h");
        self.degree(&x.mul(&h.pow(self.ring.dim() - codim))?)
    }

    /// Tangent bundle of a holomorphic symplectic fourfold: `c = (0, c2, 0, c4)`.
    pub fn tangent(&self) -> BundleClass {
        BundleClass::new(
            &self.ring,
            rat(4),
            vec![
                FormalClass::zero(&self.ring),
                self.class("c2"),
                FormalClass::zero(&self.ring),
                self.class("c4"),
            ],
        )
        .expect("graded")
    }

    /// `O(n)`.
    pub fn line(&self, n: i64) -> BundleClass {
        BundleClass::line(&self.class("h").scale(&rat(n))).expect("codim 1")
    }
}

/// `deg(ch(b) td(T_X))`.
pub fn hrr_chi(model: &VarietyModel, b: &BundleClass) -> Result<BigRational> {
    let integrand = ch_total(&ch_from_c(b)).mul(&todd_from_c(&model.tangent()))?;
    model.degree(&integrand.part(4))
}

/// `n^4/2 + 5n^2/2 + 3`.
pub fn chi_polynomial(n: i64) -> BigRational {
    ratio(n.pow(4), 2) + ratio(5 * n * n, 2) + rat(3)
}

/// The three identities `3 deg(Z m) = 15 deg(h^2 m) - deg(c2 m)` for
/// `m = h^2, c2, Z`, as `(m, lhs, rhs)`.
pub fn thom_porteous_table(model: &VarietyModel) -> Result<Vec<(String, BigRational, BigRational)>> {
    let h2 = model.class("h").pow(2);
    let c2 = model.class("c2");
    let z = model.class("Z");
    [("h^2", &h2), ("c2", &c2), ("Z", &z)]
        .into_iter()
        .map(|(name, m)| {
            let lhs = model.degree(&z.mul(m)?)? * rat(3);
            let rhs = model.degree(&h2.mul(m)?)? * rat(15) - model.degree(&c2.mul(m)?)?;
            Ok((name.to_string(), lhs, rhs))
        })
        .collect()
}

/// `(1/240)(c2^2 - c4/3)`, the holomorphic Euler characteristic.
pub fn hirzebruch_chi(model: &VarietyModel) -> Result<BigRational> {
    let c2 = model.class("c2");
    let c4 = model.class("c4");
    let x = c2.pow(2).sub(&c4.scale(&ratio(1, 3)))?.scale(&ratio(1, 240));
    model.degree(&x)
}

/// The ramification surface inside the fourfold, with rational Chow data.
#[derive(Clone, Debug)]
pub struct EmbeddingModel {
    pub ambient: VarietyModel,
    pub surface: Arc<ClassRing>,
    push: BTreeMap<Vec<u32>, FormalClass>,
}

impl EmbeddingModel {
    /// Surface symbols `hZ` (the restricted hyperplane class) and `c2Z`.
    /// Canonical class `3 hZ`; normal bundle isomorphic to the cotangent bundle.
    pub fn lagrangian_surface(ambient: VarietyModel) -> Self {
        let surface = ClassRing::new(2, &[("hZ", 1), ("c2Z", 2)]);
        let h = ambient.class("h");
        let z = ambient.class("Z");
        let mut push = BTreeMap::new();
        push.insert(surface.monomial(&[]).expect("unit"), z.clone());
        push.insert(
            surface.monomial(&[("hZ", 1)]).expect("symbol"),
            h.mul(&z).expect("ring"),
        );
        push.insert(
            surface.monomial(&[("hZ", 2)]).expect("symbol"),
            h.pow(2).mul(&z).expect("ring"),
        );
        // self-intersection of a Lagrangian surface
        push.insert(
            surface.monomial(&[("c2Z", 1)]).expect("symbol"),
            z.pow(2),
        );
        EmbeddingModel {
            ambient,
            surface,
            push,
        }
    }

    pub fn surface_class(&self, name: &str) -> FormalClass {
        FormalClass::symbol(&self.surface, name).expect("surface symbol")
    }

    /// `c_1(Z) = -3 hZ`.
    pub fn c1_surface(&self) -> FormalClass {
        self.surface_class("hZ").scale(&rat(-3))
    }

    pub fn tangent_surface(&self) -> BundleClass {
        BundleClass::new(
            &self.surface,
            rat(2),
            vec![self.c1_surface(), self.surface_class("c2Z")],
        )
        .expect("graded")
    }

    /// `N = cotangent bundle`: `c_1 = 3 hZ`, `c_2 = c_2(Z)`.
    pub fn normal_bundle(&self) -> BundleClass {
        BundleClass::new(
            &self.surface,
            rat(2),
            vec![self.c1_surface().scale(&rat(-1)), self.surface_class("c2Z")],
        )
        .expect("graded")
    }

    pub fn push(&self, x: &FormalClass) -> Result<FormalClass> {
        if x.ring() != &self.surface {
            return Err(Error::RingMismatch);
        }
        let mut acc = FormalClass::zero(self.ambient.ring());
        for (e, c) in x.terms() {
            let image = self
                .push
                .get(e)
                .ok_or_else(|| Error::UnknownSymbol(format!("{e:?}")))?;
            acc = acc.add(&image.scale(c))?;
        }
        Ok(acc)
    }

    pub fn todd_normal_inverse(&self) -> Result<FormalClass> {
        todd_from_c(&self.normal_bundle()).inverse()
    }
}

/// `ch(i_* F) = i_*(ch(F) td(N)^{-1})`.
pub fn grr_push(emb: &EmbeddingModel, ch: &FormalClass) -> Result<FormalClass> {
    emb.push(&ch.mul(&emb.todd_normal_inverse()?)?)
}

/// A derived identity between classes, with its degree sanity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub lhs: String,
    pub rhs: String,
    #[serde(rename = "degreeCheck")]
    pub degree_check: String,
}

fn relation(
    model: &VarietyModel,
    lhs: &FormalClass,
    rhs: &FormalClass,
    codim: u32,
) -> Result<Relation> {
    let dl = model.degree_against_h(lhs, codim)?;
    let dr = model.degree_against_h(rhs, codim)?;
    if dl != dr {
        return Err(Error::Inconsistent(format!(
            "{lhs} = {rhs} fails the degree check: {dl} vs {dr}"
        )));
    }
    Ok(Relation {
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        degree_check: format!("{dl} = {dr}"),
    })
}

/// Every intermediate of the two computations of `c(Q)` and what equating them gives.
#[derive(Clone, Debug)]
pub struct Section8 {
    /// `c(Q)` from the cotangent sequence, before and after the degeneracy substitution.
    pub whitney_raw: BundleClass,
    pub whitney: BundleClass,
    pub ch_push_det: FormalClass,
    pub ch_push_tangent: FormalClass,
    pub c_push_det: BundleClass,
    pub c_push_tangent: BundleClass,
    /// `c(Q)` from the extension by the two pushforwards.
    pub extension: BundleClass,
    /// `h Z = (10/3) h^3`.
    pub hz: FormalClass,
    /// `c2 h`, reduced with the previous line.
    pub c2h: FormalClass,
    /// `c4` in terms of `h` and `Z`.
    pub c4: FormalClass,
    /// `c4` in terms of `h` and `c2`.
    pub c4_in_c2: FormalClass,
    pub c4_degree: BigRational,
    pub relations: Vec<Relation>,
}

/// The degeneracy relation `c2 = 15 h^2 - 3 Z`.
pub fn degeneracy_value(model: &VarietyModel) -> Result<FormalClass> {
    model
        .class("h")
        .pow(2)
        .scale(&rat(15))
        .sub(&model.class("Z").scale(&rat(3)))
}

pub fn derive_section8(emb: &EmbeddingModel) -> Result<Section8> {
    let model = &emb.ambient;
    let ring = model.ring();
    let one = FormalClass::one(ring);
    let h = model.class("h");
    let c2 = model.class("c2");
    let c4 = model.class("c4");
    let z = model.class("Z");
    let tp = degeneracy_value(model)?;

    // (1 - 6h) c(Omega_X) = (1 - h)^6 c(Q)
    let lhs = [
        Some(one.sub(&h.scale(&rat(6)))?),
        Some(one.add(&c2)?.add(&c4)?),
    ];
    let rhs = [Some(one.sub(&h)?.pow(6)), None];
    let total = whitney_solve(&lhs, &rhs)?;
    let whitney_raw = BundleClass::from_total(rat(0), &total)?;
    let whitney = whitney_raw.map(|c| c.substitute("c2", &tp))?;
    // the substitution in c4 only touches h^2 c2; c4 itself is kept
    let whitney_c4 = whitney_raw.c(4).substitute("c2", &tp)?;

    let det_t = BundleClass::line(&emb.c1_surface())?;
    let ch_push_det = grr_push(emb, &ch_total(&ch_from_c(&det_t)))?;
    let ch_push_tangent = grr_push(emb, &ch_total(&ch_from_c(&emb.tangent_surface())))?;
    let c_push_det = c_from_ch(&ch_components(&ch_push_det))?;
    let c_push_tangent = c_from_ch(&ch_components(&ch_push_tangent))?;
    let extension =
        BundleClass::from_total(rat(0), &c_push_det.total().mul(&c_push_tangent.total())?)?;

    for k in [1, 2] {
        if whitney.c(k) != extension.c(k) {
            return Err(Error::Inconsistent(format!(
                "c_{k}(Q) disagrees: {} vs {}",
                whitney.c(k),
                extension.c(k)
            )));
        }
    }

    // c3: -70 h^3 = coefficient * h Z
    let hz_mono = ring.monomial(&[("h", 1), ("Z", 1)])?;
    let hz_coeff = extension.c(3).coeff(&hz_mono);
    if hz_coeff.is_zero() || extension.c(3) != FormalClass::term(ring, &[("h", 1), ("Z", 1)], hz_coeff.clone())? {
        return Err(Error::Inconsistent(format!("unexpected c_3 {}", extension.c(3))));
    }
    let h3 = h.pow(3);
    let hz = whitney.c(3).scale(&hz_coeff.recip());
    if !hz.sub(&h3.scale(&hz.coeff_of(&[("h", 3)])?))?.is_zero() {
        return Err(Error::Inconsistent(format!("unexpected c_3 {}", whitney.c(3))));
    }
    let c2h = c2.mul(&h)?.substitute("c2", &tp)?.rewrite(&hz_mono, &hz)?;

    // c4: extension = whitney, solve for the c4 symbol (coefficient 1 on the right)
    if whitney_c4.coeff_of(&[("c4", 1)])? != rat(1) {
        return Err(Error::Inconsistent("c4 does not enter linearly".into()));
    }
    let rest = whitney_c4.sub(&c4)?;
    let c4_value = extension.c(4).sub(&rest)?;
    let z_value = FormalClass::term(ring, &[("h", 2)], rat(5))?.sub(&c2.scale(&ratio(1, 3)))?;
    let c4_in_c2 = c4_value.substitute("Z", &z_value)?;
    let c4_degree = model.degree(&c4_value)?;
    if c4_degree != model.degree(&c4)? || model.degree(&c4_in_c2)? != c4_degree {
        return Err(Error::Inconsistent(format!("c4 degree {c4_degree}")));
    }

    let relations = vec![
        relation(model, &whitney.c(2), &extension.c(2), 2)?,
        relation(model, &h.mul(&z)?, &hz, 3)?,
        relation(model, &c2.mul(&h)?, &c2h, 3)?,
        relation(model, &c4, &c4_value, 4)?,
        relation(model, &c4, &c4_in_c2, 4)?,
    ];
    Ok(Section8 {
        whitney_raw,
        whitney,
        ch_push_det,
        ch_push_tangent,
        c_push_det,
        c_push_tangent,
        extension,
        hz,
        c2h,
        c4: c4_value,
        c4_in_c2,
        c4_degree,
        relations,
    })
}

/// From `0 -> N^dual -> F|_Z -> A^dual (x) O -> N -> 0` the alternating sum of
/// first Chern classes vanishes, so `2 c_1(N) = -c_1(F)`.
#[derive(Clone, Debug)]
pub struct CanonicalReplay {
    pub two_c1_normal: FormalClass,
    /// `2 c_1(N) - 6 hZ`, which must vanish.
    pub residual: FormalClass,
    /// Whether the embedding data uses the same `c_1(N)`.
    pub consistent: bool,
}

pub fn canonical_class_replay(emb: &EmbeddingModel, c1_f: &FormalClass) -> Result<CanonicalReplay> {
    if c1_f.ring() != &emb.surface || !c1_f.is_pure(1) {
        return Err(Error::Precondition("c_1(F) must be a divisor class on Z".into()));
    }
    // c1(N^dual) - c1(F) + c1(trivial) - c1(N) = 0 with c1(N^dual) = -c1(N)
    let two_c1_normal = c1_f.scale(&rat(-1));
    let residual = two_c1_normal.sub(&emb.surface_class("hZ").scale(&rat(6)))?;
    let consistent = emb.normal_bundle().c(1).scale(&rat(2)) == two_c1_normal;
    Ok(CanonicalReplay {
        two_c1_normal,
        residual,
        consistent,
    })
}


#[cfg(test)]
mod derivation_tests {
    use super::*;

    #[test]
    fn full_derivation() {
        let emb = EmbeddingModel::lagrangian_surface(VarietyModel::double_epw());
        let s = derive_section8(&emb).unwrap();
        for r in &s.relations {
            println!("{} = {}   [{}]", r.lhs, r.rhs, r.degree_check);
        }
        println!("whitney {:?}", (1..=4).map(|k| s.whitney.c(k).to_string()).collect::<Vec<_>>());
        println!("ext {:?}", (1..=4).map(|k| s.extension.c(k).to_string()).collect::<Vec<_>>());
        println!("ch det {}", s.ch_push_det);
        println!("ch T {}", s.ch_push_tangent);
        assert_eq!(s.c4_degree, rat(324));
        let m = &emb.ambient;
        let h = m.class("h");
        assert_eq!(s.hz, h.pow(3).scale(&ratio(10, 3)));
        assert_eq!(s.c2h, h.pow(3).scale(&rat(5)));
        let expected = h
            .pow(4)
            .scale(&rat(-165))
            .add(&h.pow(2).mul(&m.class("c2")).unwrap().scale(&rat(20)))
            .unwrap()
            .add(&m.class("c2").pow(2).scale(&ratio(4, 3)))
            .unwrap();
        assert_eq!(s.c4_in_c2, expected);
    }
}
