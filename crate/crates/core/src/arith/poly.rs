use std::fmt;

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the end).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(self.field, vec![]);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.field, out)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::new(self.field, vec![self.field.one()]), |acc, _| {
            acc.mul(self)
        })
    }

    pub fn scale(&self, s: &Scalar) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Whether `self = c * other` for some nonzero scalar `c`.
    pub fn is_proportional_to(&self, other: &UniPoly) -> bool {
        match (self.degree(), other.degree()) {
            (None, None) => true,
            (Some(d), Some(e)) if d == e => {
                let c = &self.coeffs[d] / &other.coeffs[d];
                other.scale(&c) == *self
            }
            _ => false,
        }
    }

    /// All roots in a prime field, by exhaustive evaluation.
    pub fn roots_in_prime_field(&self) -> Result<Vec<Scalar>> {
        let Field::Prime(p) = self.field else {
            return Err(Error::Precondition(
                "root enumeration needs a prime field".into(),
            ));
        };
        if self.is_zero() {
            return Err(Error::Degenerate("zero polynomial has every root".into()));
        }
        Ok((0..p)
            .map(|t| self.field.from_i64(t as i64))
            .filter(|t| self.eval(t).is_zero())
            .collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// The unique polynomial of degree at most `degree_bound` through the samples.
/// Samples beyond the first `degree_bound + 1` are checked against the result.
pub fn interpolate_univariate(samples: &[(Scalar, Scalar)], degree_bound: usize) -> Result<UniPoly> {
    let needed = degree_bound + 1;
    if samples.len() < needed {
        return Err(Error::TooFewSamples {
            needed,
            got: samples.len(),
        });
    }
    let field = samples[0].0.field();
    for (i, (ti, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(tj, _)| tj == ti) {
            return Err(Error::DuplicateAbscissa);
        }
    }
    let (head, tail) = samples.split_at(needed);

    // Newton divided differences on the first degree_bound + 1 samples.
    let xs: Vec<&Scalar> = head.iter().map(|(t, _)| t).collect();
    let mut dd: Vec<Scalar> = head.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]).checked_div(&(xs[i] - xs[i - level]))?;
        }
    }
    // Horner expansion of the Newton form.
    let mut coeffs = vec![field.zero(); needed];
    for i in (0..needed).rev() {
        // coeffs <- coeffs * (t - x_i) + dd[i]
        let mut next = vec![field.zero(); needed];
        for k in 0..needed {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < needed {
                next[k + 1] = &next[k + 1] + &coeffs[k];
            }
            next[k] = &next[k] - &(&coeffs[k] * xs[i]);
        }
        next[0] = &next[0] + &dd[i];
        coeffs = next;
    }
    let poly = UniPoly::new(field, coeffs);
    if tail.iter().any(|(t, y)| poly.eval(t) != *y) {
        return Err(Error::InconsistentSamples(degree_bound));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn samples(field: Field, f: impl Fn(i64) -> i64, n: i64) -> Vec<(Scalar, Scalar)> {
        (0..n)
            .map(|t| (field.from_i64(t), field.from_i64(f(t))))
            .collect()
    }

    #[test]
    fn recovers_square() {
        let f = Field::Rational;
        let p = interpolate_univariate(&samples(f, |t| t * t, 3), 2).unwrap();
        assert_eq!(p.coeffs(), &[f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn constant_samples_give_degree_zero() {
        let f = Field::Prime(101);
        let p = interpolate_univariate(&samples(f, |_| 7, 5), 4).unwrap();
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p.coeff(0), f.from_i64(7));
    }

    #[test]
    fn inconsistent_extra_samples_rejected() {
        let f = Field::Rational;
        let err = interpolate_univariate(&samples(f, |t| t * t * t, 6), 2).unwrap_err();
        assert_eq!(err, Error::InconsistentSamples(2));
    }

    #[test]
    fn duplicate_abscissae_rejected() {
        let f = Field::Rational;
        let s = vec![
            (f.from_i64(1), f.from_i64(2)),
            (f.from_i64(1), f.from_i64(3)),
        ];
        assert_eq!(
            interpolate_univariate(&s, 1).unwrap_err(),
            Error::DuplicateAbscissa
        );
    }

    #[test]
    fn too_few_samples_rejected() {
        let f = Field::Rational;
        assert!(matches!(
            interpolate_univariate(&samples(f, |t| t, 2), 3),
            Err(Error::TooFewSamples { .. })
        ));
    }

    #[test]
    fn prime_field_roots() {
        let f = Field::Prime(13);
        // (t - 2)(t - 5)
        let p = UniPoly::new(f, vec![f.from_i64(10), f.from_i64(-7), f.one()]);
        let roots: Vec<u64> = p
            .roots_in_prime_field()
            .unwrap()
            .iter()
            .map(|r| r.residue().unwrap())
            .collect();
        assert_eq!(roots, vec![2, 5]);
    }
}
