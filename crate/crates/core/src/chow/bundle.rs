use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::{rat, ratio, ClassRing, FormalClass};
use crate::error::{Error, Result};

/// Rank and Chern classes `c_1 .. c_dim` of a (virtual) bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleClass {
    rank: BigRational,
    chern: Vec<FormalClass>,
}

impl BundleClass {
    /// `chern[k]` is `c_{k+1}`; missing classes are zero.
    pub fn new(ring: &Arc<ClassRing>, rank: BigRational, chern: Vec<FormalClass>) -> Result<Self> {
        let dim = ring.dim() as usize;
        if chern.len() > dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: chern.len(),
            });
        }
        let mut full = chern;
        full.resize_with(dim, || FormalClass::zero(ring));
        for (k, c) in full.iter().enumerate() {
            if c.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !c.is_pure(k as u32 + 1) {
                return Err(Error::WrongCodim {
                    expected: k + 1,
                    got: 0,
                });
            }
        }
        Ok(BundleClass { rank, chern: full })
    }

    pub fn trivial(ring: &Arc<ClassRing>, rank: i64) -> Self {
        Self::new(ring, rat(rank), vec![]).expect("no classes")
    }

    /// Line bundle with first Chern class `c1`.
    pub fn line(c1: &FormalClass) -> Result<Self> {
        Self::new(c1.ring(), BigRational::one(), vec![c1.clone()])
    }

    /// Splits a total Chern class into its graded pieces.
    pub fn from_total(rank: BigRational, total: &FormalClass) -> Result<Self> {
        if !total.constant_term().is_one() {
            return Err(Error::Precondition("total Chern class must start with 1".into()));
        }
        let ring = total.ring();
        let chern = (1..=ring.dim()).map(|k| total.part(k)).collect();
        Self::new(ring, rank, chern)
    }

    pub fn ring(&self) -> &Arc<ClassRing> {
        self.chern[0].ring()
    }

    pub fn rank(&self) -> &BigRational {
        &self.rank
    }

    /// `c_k`, with `c_0 = 1`.
    pub fn c(&self, k: usize) -> FormalClass {
        match k {
            0 => FormalClass::one(self.ring()),
            _ => self
                .chern
                .get(k - 1)
                .cloned()
                .unwrap_or_else(|| FormalClass::zero(self.ring())),
        }
    }

    pub fn total(&self) -> FormalClass {
        self.chern
            .iter()
            .fold(FormalClass::one(self.ring()), |acc, c| acc.add(c).expect("same ring"))
    }

    /// Applies a substitution to every Chern class.
    pub fn map(&self, f: impl Fn(&FormalClass) -> Result<FormalClass>) -> Result<Self> {
        let chern = self.chern.iter().map(f).collect::<Result<Vec<_>>>()?;
        Self::new(self.ring(), self.rank.clone(), chern)
    }
}

fn lin(terms: &[(BigRational, &FormalClass)]) -> FormalClass {
    let ring = terms[0].1.ring();
    terms.iter().fold(FormalClass::zero(ring), |acc, (c, x)| {
        acc.add(&x.scale(c)).expect("same ring")
    })
}

fn m(a: &FormalClass, b: &FormalClass) -> FormalClass {
    a.mul(b).expect("same ring")
}

/// Chern character components `ch_0 .. ch_4` by Newton's identities.
pub fn ch_from_c(b: &BundleClass) -> Vec<FormalClass> {
    let ring = b.ring();
    let (c1, c2, c3, c4) = (b.c(1), b.c(2), b.c(3), b.c(4));
    let c1sq = m(&c1, &c1);
    let ch0 = FormalClass::constant(ring, b.rank.clone());
    let ch2 = lin(&[(ratio(1, 2), &c1sq), (rat(-1), &c2)]);
    let ch3 = lin(&[
        (ratio(1, 6), &m(&c1sq, &c1)),
        (ratio(-1, 2), &m(&c1, &c2)),
        (ratio(1, 2), &c3),
    ]);
    let ch4 = lin(&[
        (ratio(1, 24), &m(&c1sq, &c1sq)),
        (ratio(-1, 6), &m(&c1sq, &c2)),
        (ratio(1, 6), &m(&c1, &c3)),
        (ratio(1, 12), &m(&c2, &c2)),
        (ratio(-1, 6), &c4),
    ]);
    let mut out = vec![ch0, c1, ch2, ch3, ch4];
    out.truncate(ring.dim() as usize + 1);
    out
}

/// Sum of the Chern character components.
pub fn ch_total(ch: &[FormalClass]) -> FormalClass {
    ch.iter()
        .skip(1)
        .fold(ch[0].clone(), |acc, x| acc.add(x).expect("same ring"))
}

/// Splits a total Chern character into components by codimension.
pub fn ch_components(total: &FormalClass) -> Vec<FormalClass> {
    (0..=total.ring().dim()).map(|k| total.part(k)).collect()
}

/// Chern classes from Chern character components (inverse Newton identities).
pub fn c_from_ch(ch: &[FormalClass]) -> Result<BundleClass> {
    let ring = ch[0].ring();
    if !ch[0].is_pure(0) {
        return Err(Error::WrongCodim {
            expected: 0,
            got: 1,
        });
    }
    let rank = ch[0].constant_term();
    let dim = ring.dim() as usize;
    // power sums p_k = k! ch_k
    let mut fact = BigRational::one();
    let mut p = vec![FormalClass::zero(ring)];
    for k in 1..=dim {
        fact *= rat(k as i64);
        let chk = ch.get(k).cloned().unwrap_or_else(|| FormalClass::zero(ring));
        p.push(chk.scale(&fact));
    }
    // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    let mut e = vec![FormalClass::one(ring)];
    for k in 1..=dim {
        let mut acc = FormalClass::zero(ring);
        for i in 1..=k {
            let term = e[k - i].mul(&p[i])?;
            acc = if i % 2 == 1 { acc.add(&term)? } else { acc.sub(&term)? };
        }
        e.push(acc.scale(&ratio(1, k as i64)));
    }
    BundleClass::new(ring, rank, e.into_iter().skip(1).collect())
}

/// Todd class through codimension 4.
pub fn todd_from_c(b: &BundleClass) -> FormalClass {
    let ring = b.ring();
    let (c1, c2, c3, c4) = (b.c(1), b.c(2), b.c(3), b.c(4));
    let c1sq = m(&c1, &c1);
    let one = FormalClass::one(ring);
    lin(&[
        (rat(1), &one),
        (ratio(1, 2), &c1),
        (ratio(1, 12), &c1sq),
        (ratio(1, 12), &c2),
        (ratio(1, 24), &m(&c1, &c2)),
        (ratio(-1, 720), &m(&c1sq, &c1sq)),
        (ratio(4, 720), &m(&c1sq, &c2)),
        (ratio(1, 720), &m(&c1, &c3)),
        (ratio(3, 720), &m(&c2, &c2)),
        (ratio(-1, 720), &c4),
    ])
}

/// Codimension-2 part of `c(e) / c(f)`.
pub fn chern_difference(e: &BundleClass, f: &BundleClass) -> Result<FormalClass> {
    Ok(e.total().mul(&f.total().inverse()?)?.part(2))
}

/// Solves `prod lhs = prod rhs` for the single unknown total Chern class.
pub fn whitney_solve(lhs: &[Option<FormalClass>], rhs: &[Option<FormalClass>]) -> Result<FormalClass> {
    let unknowns = lhs.iter().chain(rhs).filter(|x| x.is_none()).count();
    if unknowns != 1 {
        return Err(Error::Precondition(format!(
            "expected one unknown slot, found {unknowns}"
        )));
    }
    let known = lhs.iter().chain(rhs).flatten().next().ok_or_else(|| {
        Error::Precondition("no known slot to fix the ring".into())
    })?;
    let ring = known.ring().clone();
    let product = |side: &[Option<FormalClass>]| -> Result<FormalClass> {
        side.iter()
            .flatten()
            .try_fold(FormalClass::one(&ring), |acc, x| acc.mul(x))
    };
    let (own, other) = if lhs.iter().any(Option::is_none) {
        (lhs, rhs)
    } else {
        (rhs, lhs)
    };
    let solution = product(other)?.mul(&product(own)?.inverse()?)?;
    // plug back in
    let check = product(own)?.mul(&solution)?;
    if check != product(other)? {
        return Err(Error::Inconsistent("Whitney product does not close".into()));
    }
    if solution.constant_term().is_zero() {
        return Err(Error::Inconsistent("solution has no constant term".into()));
    }
    Ok(solution)
}
