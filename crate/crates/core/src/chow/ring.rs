use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Graded generators of a truncated polynomial ring over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRing {
    dim: u32,
    names: Vec<String>,
    codims: Vec<u32>,
}

impl ClassRing {
    pub fn new(dim: u32, symbols: &[(&str, u32)]) -> Arc<Self> {
        Arc::new(ClassRing {
            dim,
            names: symbols.iter().map(|(n, _)| n.to_string()).collect(),
            codims: symbols.iter().map(|&(_, c)| c).collect(),
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&str, u32)> {
        self.names.iter().map(String::as_str).zip(self.codims.iter().copied())
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn codim_of(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.codims).map(|(e, c)| e * c).sum()
    }

    /// Exponent vector of a monomial written as `name^k` factors, e.g. `[("h", 2), ("Z", 1)]`.
    pub fn monomial(&self, factors: &[(&str, u32)]) -> Result<Vec<u32>> {
        let mut exps = vec![0; self.names.len()];
        for &(name, k) in factors {
            exps[self.index_of(name)?] += k;
        }
        Ok(exps)
    }

    fn format_monomial(&self, exps: &[u32]) -> String {
        let parts: Vec<String> = exps
            .iter()
            .zip(&self.names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        parts.join("*")
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A Q-linear combination of monomials, truncated above the ring dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalClass {
    ring: Arc<ClassRing>,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl FormalClass {
    pub fn zero(ring: &Arc<ClassRing>) -> Self {
        FormalClass {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<ClassRing>, c: BigRational) -> Self {
        let mut x = Self::zero(ring);
        x.add_term(vec![0; ring.names.len()], c);
        x
    }

    pub fn one(ring: &Arc<ClassRing>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn symbol(ring: &Arc<ClassRing>, name: &str) -> Result<Self> {
        Self::term(ring, &[(name, 1)], BigRational::one())
    }

    /// `c * prod name^k`.
    pub fn term(ring: &Arc<ClassRing>, factors: &[(&str, u32)], c: BigRational) -> Result<Self> {
        let mut x = Self::zero(ring);
        x.add_term(ring.monomial(factors)?, c);
        Ok(x)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() || self.ring.codim_of(&exps) > self.ring.dim {
            return;
        }
        let sum = match self.terms.get(&exps) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
    }

    pub fn ring(&self) -> &Arc<ClassRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of a monomial given by named factors.
    pub fn coeff_of(&self, factors: &[(&str, u32)]) -> Result<BigRational> {
        Ok(self.coeff(&self.ring.monomial(factors)?))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.ring), |acc, _| {
            acc.mul(self).expect("same ring")
        })
    }

    /// The pure codimension-`k` component.
    pub fn part(&self, k: u32) -> Self {
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            if self.ring.codim_of(e) == k {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Whether every term has codimension `k`.
    pub fn is_pure(&self, k: u32) -> bool {
        self.terms.keys().all(|e| self.ring.codim_of(e) == k)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&vec![0; self.ring.names.len()])
    }

    /// Multiplicative inverse as a truncated power series.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv0 = c0.recip();
        // x = c0 (1 + y) with y nilpotent
        let y = self.scale(&inv0).sub(&Self::one(&self.ring))?;
        let neg_y = y.scale(&-BigRational::one());
        let mut acc = Self::one(&self.ring);
        let mut power = Self::one(&self.ring);
        for _ in 0..self.ring.dim {
            power = power.mul(&neg_y)?;
            acc = acc.add(&power)?;
        }
        Ok(acc.scale(&inv0))
    }

    /// Replaces the symbol `name` by `value` everywhere.
    pub fn substitute(&self, name: &str, value: &Self) -> Result<Self> {
        self.check_ring(value)?;
        let idx = self.ring.index_of(name)?;
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = std::mem::replace(&mut rest[idx], 0);
            let mut base = Self::zero(&self.ring);
            base.add_term(rest, c.clone());
            out = out.add(&base.mul(&value.pow(k))?)?;
        }
        Ok(out)
    }

    /// Replaces every occurrence of the monomial `pattern` by `value`, until
    /// no term is divisible by it.
    pub fn rewrite(&self, pattern: &[u32], value: &Self) -> Result<Self> {
        self.check_ring(value)?;
        if pattern.iter().all(|&k| k == 0) {
            return Err(Error::Precondition("empty rewrite pattern".into()));
        }
        let mut current = self.clone();
        loop {
            let mut changed = false;
            let mut out = Self::zero(&self.ring);
            for (e, c) in &current.terms {
                if e.iter().zip(pattern).all(|(a, b)| a >= b) {
                    let rest: Vec<u32> = e.iter().zip(pattern).map(|(a, b)| a - b).collect();
                    let mut base = Self::zero(&self.ring);
                    base.add_term(rest, c.clone());
                    out = out.add(&base.mul(value)?)?;
                    changed = true;
                } else {
                    out.add_term(e.clone(), c.clone());
                }
            }
            current = out;
            if !changed {
                return Ok(current);
            }
        }
    }
}

impl FormalClass {
    /// Reads the notation `Display` writes, e.g. `2*Z - 6*h*Z + 7/6*Z^2`.
    pub fn parse(ring: &Arc<ClassRing>, s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("cannot parse class {s:?}"));
        let mut out = Self::zero(ring);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(out);
        }
        let mut chunks = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                chunks.push(&compact[start..i]);
                start = i;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (sign, body) = match chunk.as_bytes().first() {
                Some(b'-') => (-1, &chunk[1..]),
                Some(b'+') => (1, &chunk[1..]),
                _ => (1, chunk),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = rat(sign);
            let mut exps = vec![0; ring.names.len()];
            for factor in body.split('*') {
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    let q = match factor.split_once('/') {
                        Some((n, d)) => BigRational::new(
                            n.parse::<BigInt>().map_err(|_| bad())?,
                            d.parse::<BigInt>().map_err(|_| bad())?,
                        ),
                        None => BigRational::from_integer(factor.parse::<BigInt>().map_err(|_| bad())?),
                    };
                    coeff *= q;
                } else {
                    let (name, k) = match factor.split_once('^') {
                        Some((n, k)) => (n, k.parse::<u32>().map_err(|_| bad())?),
                        None => (factor, 1),
                    };
                    exps[ring.index_of(name)?] += k;
                }
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for FormalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<u32>, &BigRational)> = self.terms.iter().collect();
        // lowest codimension first, then by descending exponent vector
        terms.sort_by(|(a, _), (b, _)| {
            self.ring
                .codim_of(a)
                .cmp(&self.ring.codim_of(b))
                .then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let mono = self.ring.format_monomial(e);
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => format_rational(&mag),
                (false, true) => mono,
                (false, false) => format!("{}*{}", format_rational(&mag), mono),
            };
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let r = ring();
        for text in ["Z - 9/2*h*Z + 21/2*h^2*Z - 1/12*Z^2", "0", "-70*h^3", "1 - 6*h", "c4 - 435*h^4 + 45*h^2*Z"] {
            let x = FormalClass::parse(&r, text).unwrap();
            assert_eq!(FormalClass::parse(&r, &x.to_string()).unwrap(), x);
        }
        assert_eq!(FormalClass::parse(&r, "-70*h^3").unwrap().to_string(), "-70*h^3");
        assert!(FormalClass::parse(&r, "3*q").is_err());
        assert!(FormalClass::parse(&r, "h +").is_err());
    }

    fn ring() -> Arc<ClassRing> {
        ClassRing::new(4, &[("h", 1), ("c2", 2), ("c4", 4), ("Z", 2)])
    }

    #[test]
    fn truncation_and_identity() {
        let r = ring();
        let h = FormalClass::symbol(&r, "h").unwrap();
        assert!(h.pow(5).is_zero());
        assert_eq!(FormalClass::one(&r).mul(&h).unwrap(), h);
        assert_eq!(h.pow(4).coeff_of(&[("h", 4)]).unwrap(), rat(1));
    }

    #[test]
    fn series_inverse() {
        let r = ring();
        let h = FormalClass::symbol(&r, "h").unwrap();
        let one_minus_h = FormalClass::one(&r).sub(&h).unwrap();
        let inv6 = one_minus_h.pow(6).inverse().unwrap();
        let expected = [1, 6, 21, 56, 126];
        for (k, c) in expected.iter().enumerate() {
            assert_eq!(inv6.coeff_of(&[("h", k as u32)]).unwrap(), rat(*c));
        }
        assert_eq!(
            inv6.mul(&one_minus_h.pow(6)).unwrap(),
            FormalClass::one(&r)
        );
        assert!(h.inverse().is_err());
    }

    #[test]
    fn substitution_and_rewrite() {
        let r = ring();
        let h = FormalClass::symbol(&r, "h").unwrap();
        let c2 = FormalClass::symbol(&r, "c2").unwrap();
        let z = FormalClass::symbol(&r, "Z").unwrap();
        let tp = h.pow(2).scale(&rat(15)).sub(&z.scale(&rat(3))).unwrap();
        let x = c2.mul(&h.pow(2)).unwrap().scale(&rat(-15));
        let y = x.substitute("c2", &tp).unwrap();
        assert_eq!(y.coeff_of(&[("h", 4)]).unwrap(), rat(-225));
        assert_eq!(y.coeff_of(&[("h", 2), ("Z", 1)]).unwrap(), rat(45));

        let hz = r.monomial(&[("h", 1), ("Z", 1)]).unwrap();
        let w = h.mul(&z).unwrap().mul(&h).unwrap();
        let rewritten = w.rewrite(&hz, &h.pow(3).scale(&ratio(10, 3))).unwrap();
        assert_eq!(rewritten, h.pow(4).scale(&ratio(10, 3)));
    }

    #[test]
    fn display_order() {
        let r = ring();
        let h = FormalClass::symbol(&r, "h").unwrap();
        let z = FormalClass::symbol(&r, "Z").unwrap();
        let x = z
            .sub(&h.mul(&z).unwrap().scale(&ratio(9, 2)))
            .unwrap()
            .add(&h.pow(2).mul(&z).unwrap().scale(&ratio(21, 2)))
            .unwrap()
            .sub(&z.pow(2).scale(&ratio(1, 12)))
            .unwrap();
        assert_eq!(x.to_string(), "Z - 9/2*h*Z + 21/2*h^2*Z - 1/12*Z^2");
    }

    #[test]
    fn ring_mismatch() {
        let a = FormalClass::one(&ring());
        let b = FormalClass::one(&ClassRing::new(2, &[("h", 1)]));
        assert_eq!(a.add(&b), Err(Error::RingMismatch));
    }
}
