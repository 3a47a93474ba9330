//! The second cohomology lattice of a fourfold of K3^[2] type.
//!
//! `U^3 + E8(-1)^2 + <-2>` with the Fujiki relation `int a^4 = 3 q(a, a)^2`.
//! Coordinates: `0..6` are the three hyperbolic planes, `6..22` the two `E8(-1)`
//! blocks and `22` the generator of square `-2`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{Field, Matrix};
use crate::error::{Error, Result};

pub const RANK: usize = 23;
pub const FUJIKI_CONSTANT: i64 = 3;
/// `q_dual . a . b = 25 q(a, b)`.
pub const QDUAL_PAIRING: i64 = 25;
/// `c2 = (6/5) q_dual`.
pub const C2_OVER_QDUAL: (i64, i64) = (6, 5);

pub type LatticeVector = [i64; RANK];

/// Cartan matrix of `E8`; node 7 hangs off node 4 of the chain `0..=6`.
fn e8_cartan() -> [[i64; 8]; 8] {
    let mut m = [[0; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
    edges.push((4, 7));
    for (a, b) in edges {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BBLattice {
    gram: Vec<Vec<i64>>,
}

impl Default for BBLattice {
    fn default() -> Self {
        Self::k3_type_2()
    }
}

impl BBLattice {
    pub fn k3_type_2() -> Self {
        let mut gram = vec![vec![0i64; RANK]; RANK];
        for u in 0..3 {
            gram[2 * u][2 * u + 1] = 1;
            gram[2 * u + 1][2 * u] = 1;
        }
        let cartan = e8_cartan();
        for block in 0..2 {
            let off = 6 + 8 * block;
            for i in 0..8 {
                for j in 0..8 {
                    gram[off + i][off + j] = -cartan[i][j];
                }
            }
        }
        gram[22][22] = -2;
        BBLattice { gram }
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn basis_vector(i: usize) -> LatticeVector {
        let mut v = [0; RANK];
        v[i] = 1;
        v
    }

    /// The polarization `(1, 1, 0, ...)` of square 2.
    pub fn polarization() -> LatticeVector {
        let mut v = [0; RANK];
        v[0] = 1;
        v[1] = 1;
        v
    }

    /// The generator of the `<-2>` summand.
    pub fn minus_two_class() -> LatticeVector {
        Self::basis_vector(22)
    }

    pub fn q(&self, a: &[i64], b: &[i64]) -> Result<i64> {
        for x in [a, b] {
            if x.len() != RANK {
                return Err(Error::DimensionMismatch {
                    expected: RANK,
                    got: x.len(),
                });
            }
        }
        let mut acc = 0;
        for (i, ai) in a.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                acc += ai * self.gram[i][j] * bj;
            }
        }
        Ok(acc)
    }

    /// `int a1 a2 a3 a4`, the full polarization of the Fujiki relation.
    pub fn quad_intersection(&self, a: [&[i64]; 4]) -> Result<i64> {
        let q = |i: usize, j: usize| self.q(a[i], a[j]);
        Ok(q(0, 1)? * q(2, 3)? + q(0, 2)? * q(1, 3)? + q(0, 3)? * q(1, 2)?)
    }

    /// `int c2 a b = (6/5) 25 q(a, b)`.
    pub fn c2_pairing(&self, a: &[i64], b: &[i64]) -> Result<BigRational> {
        let (num, den) = C2_OVER_QDUAL;
        Ok(BigRational::new(
            BigInt::from(num * QDUAL_PAIRING * self.q(a, b)?),
            BigInt::from(den),
        ))
    }

    pub fn det(&self) -> BigInt {
        let rows: Vec<&[i64]> = self.gram.iter().map(Vec::as_slice).collect();
        let m = Matrix::from_i64(Field::Rational, &rows);
        let d = m.det().expect("square");
        d.as_rational().expect("rational field").to_integer()
    }

    /// `(positive, negative)` index of inertia by symmetric Gaussian reduction.
    pub fn signature(&self) -> (usize, usize) {
        let n = RANK;
        let mut m: Vec<Vec<BigRational>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let (mut pos, mut neg) = (0, 0);
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            // pivot on a nonzero diagonal entry, creating one from an off-diagonal if needed
            let diag = active.iter().copied().find(|&i| !m[i][i].is_zero());
            let p = match diag {
                Some(p) => p,
                None => {
                    let pair = active.iter().flat_map(|&i| active.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !m[i][j].is_zero());
                    let Some((i, j)) = pair else { break };
                    // e_i <- e_i + e_j gives diagonal 2 m_ij
                    for k in 0..n {
                        let v = m[j][k].clone();
                        m[i][k] += v;
                    }
                    for k in 0..n {
                        let v = m[k][j].clone();
                        m[k][i] += v;
                    }
                    i
                }
            };
            let d = m[p][p].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            active.retain(|&i| i != p);
            for &i in &active {
                let f = &m[i][p] / &d;
                if f.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let v = &f * &m[p][k];
                    m[i][k] -= v;
                }
                for k in 0..n {
                    let v = &f * &m[k][p];
                    m[k][i] -= v;
                }
            }
        }
        (pos, neg)
    }
}

/// Pairing of `c2 h = 5 h^3` against one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree6Row {
    pub index: usize,
    /// `5 int h h h b`
    pub lhs: i64,
    /// `30 q(h, b)`
    pub rhs: i64,
    /// `int c2 h b` from the dual-form constants
    pub c2_side: BigRational,
}

impl Degree6Row {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.c2_side == BigRational::from_integer(self.lhs.into())
    }
}

fn require_square_two(lat: &BBLattice, h: &[i64]) -> Result<()> {
    let s = lat.q(h, h)?;
    if s != 2 {
        return Err(Error::Precondition(format!("q(h, h) = {s}, expected 2")));
    }
    Ok(())
}

/// Checks `c2 h b = 5 h^3 b` on every basis vector.
pub fn verify_deg6(lat: &BBLattice, h: &[i64]) -> Result<Vec<Degree6Row>> {
    require_square_two(lat, h)?;
    (0..RANK)
        .map(|i| {
            let b = BBLattice::basis_vector(i);
            Ok(Degree6Row {
                index: i,
                lhs: 5 * lat.quad_intersection([h, h, h, &b])?,
                rhs: 30 * lat.q(h, &b)?,
                c2_side: lat.c2_pairing(h, &b)?,
            })
        })
        .collect()
}

/// An isotropic class separating `b -> h^2 b^2` from `b -> q_dual b^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degree4Witness {
    pub alpha: LatticeVector,
    pub h_alpha: i64,
    /// `int h h a a`
    pub h2_value: i64,
    /// `q_dual . a . a`
    pub qdual_value: i64,
}

impl Degree4Witness {
    pub fn is_valid(&self) -> bool {
        self.h_alpha != 0 && self.h2_value != 0 && self.qdual_value == 0
    }
}

pub fn verify_deg4_independence(lat: &BBLattice, h: &[i64]) -> Result<Degree4Witness> {
    require_square_two(lat, h)?;
    let mut candidates: Vec<LatticeVector> = (0..RANK).map(BBLattice::basis_vector).collect();
    for i in 0..RANK {
        for j in i + 1..RANK {
            for s in [1, -1] {
                let mut v = [0; RANK];
                v[i] = 1;
                v[j] = s;
                candidates.push(v);
            }
        }
    }
    for alpha in candidates {
        if lat.q(&alpha, &alpha)? == 0 && lat.q(h, &alpha)? != 0 {
            return witness(lat, h, alpha);
        }
    }
    Err(Error::Degenerate("no small isotropic class pairs with h".into()))
}

pub fn witness(lat: &BBLattice, h: &[i64], alpha: LatticeVector) -> Result<Degree4Witness> {
    Ok(Degree4Witness {
        alpha,
        h_alpha: lat.q(h, &alpha)?,
        h2_value: lat.quad_intersection([h, h, &alpha, &alpha])?,
        qdual_value: QDUAL_PAIRING * lat.q(&alpha, &alpha)?,
    })
}

/// `chi(L) = q^2/8 + 5q/4 + 3` for `q = q(L, L)`.
pub fn chi_of_class(q: i64) -> Result<BigRational> {
    if q % 2 != 0 {
        return Err(Error::OddValue(q));
    }
    let q = BigInt::from(q);
    Ok(BigRational::new(&q * &q, 8.into())
        + BigRational::new(&q * 5, 4.into())
        + BigRational::from_integer(3.into()))
}

/// Sections of `O(3)` anti-invariant under the covering involution: all of
/// `chi(O(3))` minus the cubics pulled back from `P^5`.
pub fn odd_section_count() -> BigInt {
    let total = chi_of_class(18).expect("even").to_integer();
    total - BigInt::from(binomial(8u64, 3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_invariants() {
        let lat = BBLattice::default();
        assert!((0..RANK).all(|i| (0..RANK).all(|j| lat.gram[i][j] == lat.gram[j][i])));
        assert_eq!(lat.det(), BigInt::from(2));
        assert_eq!(lat.signature(), (3, 20));
        assert!((0..RANK).all(|i| lat.gram[i][i] % 2 == 0));
    }

    #[test]
    fn special_classes() {
        let lat = BBLattice::default();
        let h = BBLattice::polarization();
        let e = BBLattice::minus_two_class();
        let iso = BBLattice::basis_vector(0);
        assert_eq!(lat.q(&h, &h).unwrap(), 2);
        assert_eq!(lat.q(&e, &e).unwrap(), -2);
        assert_eq!(lat.q(&iso, &iso).unwrap(), 0);
        assert_eq!(lat.quad_intersection([&h, &h, &h, &h]).unwrap(), 12);
        assert_eq!(lat.quad_intersection([&e, &e, &e, &e]).unwrap(), 12);
        assert!(matches!(lat.q(&h[..5], &h), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn degree_six_relation() {
        let lat = BBLattice::default();
        let rows = verify_deg6(&lat, &BBLattice::polarization()).unwrap();
        assert_eq!(rows.len(), RANK);
        assert!(rows.iter().all(Degree6Row::holds));
        assert_eq!((rows[0].lhs, rows[0].rhs), (30, 30));
        assert!(verify_deg6(&lat, &BBLattice::basis_vector(0)).is_err());
    }

    #[test]
    fn degree_four_witness() {
        let lat = BBLattice::default();
        let h = BBLattice::polarization();
        let w = verify_deg4_independence(&lat, &h).unwrap();
        assert!(w.is_valid());
        assert_eq!((w.h2_value, w.qdual_value), (2, 0));
        let doubled = witness(&lat, &h, w.alpha.map(|x| 2 * x)).unwrap();
        assert_eq!((doubled.h2_value, doubled.qdual_value), (8, 0));
        let at_h = witness(&lat, &h, h).unwrap();
        assert_eq!((at_h.h2_value, at_h.qdual_value), (12, 50));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(chi_of_class(18).unwrap(), BigRational::from_integer(66.into()));
        assert_eq!(chi_of_class(-2).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(chi_of_class(0).unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(chi_of_class(3), Err(Error::OddValue(3)));
        assert_eq!(odd_section_count(), BigInt::from(10));
    }
}
