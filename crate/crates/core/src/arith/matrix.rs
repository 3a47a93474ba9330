use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, Scalar, Subspace};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        if let Some(bad) = data.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from rows of equal length; `cols` is needed when `rows` is empty.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Self::new(field, n, cols, data)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        assert_eq!(x.field(), self.field, "mixed-field entry");
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * other.get(k, j));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.data.len(),
                got: other.data.len(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.field, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let data = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Row rank: fraction-free (Bareiss) over Q, plain elimination over F_p.
    pub fn rank(&self) -> usize {
        match self.field {
            Field::Rational => {
                let ints = self.integer_rows().0;
                // rank mod p never exceeds the rank over Q, so a full rank image is a certificate
                let full = self.rows.min(self.cols);
                if modular_rank(&ints, self.cols, CERTIFICATE_PRIME) == full {
                    return full;
                }
                bareiss(ints).0
            }
            Field::Prime(_) => {
                let mut m = self.clone();
                m.echelon_in_place(false)
            }
        }
    }

    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(self.field.one());
        }
        match self.field {
            Field::Rational => {
                let (ints, scales) = self.integer_rows();
                let (rank, det) = bareiss(ints);
                if rank < self.rows {
                    return Ok(self.field.zero());
                }
                let denom = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
                Ok(Scalar::Rational(BigRational::new(det, denom)))
            }
            Field::Prime(_) => {
                let mut m = self.clone();
                let mut det = self.field.one();
                let n = self.rows;
                for c in 0..n {
                    let Some(p) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                        return Ok(self.field.zero());
                    };
                    if p != c {
                        m.swap_rows(p, c);
                        det = -det;
                    }
                    let pivot = m.get(c, c).clone();
                    det = &det * &pivot;
                    let inv = pivot.inv()?;
                    for r in c + 1..n {
                        let factor = m.get(r, c) * &inv;
                        if factor.is_zero() {
                            continue;
                        }
                        for j in c..n {
                            let v = m.get(r, j) - &(&factor * m.get(c, j));
                            m.set(r, j, v);
                        }
                    }
                }
                Ok(det)
            }
        }
    }

    /// Reduced row echelon form and its pivot columns (zero rows kept at the bottom).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let rank = m.echelon_in_place(true);
        let mut pivots = Vec::with_capacity(rank);
        for r in 0..rank {
            let c = (0..m.cols)
                .find(|&c| !m.get(r, c).is_zero())
                .expect("nonzero row");
            pivots.push(c);
        }
        (m, pivots)
    }

    /// Right kernel as a canonical subspace of `field^cols`.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, vectors).expect("kernel vectors have ambient length")
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gaussian elimination in place; with `reduced` produces RREF. Returns the rank.
    fn echelon_in_place(&mut self, reduced: bool) -> usize {
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(p, rank);
            let inv = self.get(rank, c).inv().expect("nonzero pivot");
            if reduced {
                for j in c..self.cols {
                    let v = self.get(rank, j) * &inv;
                    self.set(rank, j, v);
                }
            }
            let start = if reduced { 0 } else { rank + 1 };
            for r in start..self.rows {
                if r == rank || self.get(r, c).is_zero() {
                    continue;
                }
                let factor = if reduced {
                    self.get(r, c).clone()
                } else {
                    self.get(r, c) * &inv
                };
                for j in c..self.cols {
                    let v = self.get(r, j) - &(&factor * self.get(rank, j));
                    self.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Rows cleared of denominators, with the per-row multipliers used.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let qs: Vec<&BigRational> = self
                .row(r)
                .iter()
                .map(|x| x.as_rational().expect("rational matrix"))
                .collect();
            let lcm = qs
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            rows.push(
                qs.iter()
                    .map(|q| q.numer() * (&lcm / q.denom()))
                    .collect(),
            );
            scales.push(lcm);
        }
        (rows, scales)
    }
}

const CERTIFICATE_PRIME: u64 = 2_147_483_647;

fn modular_rank(rows: &[Vec<BigInt>], cols: usize, p: u64) -> usize {
    let modulus = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let (_, digits) = x.mod_floor(&modulus).to_u64_digits();
                    digits.first().copied().unwrap_or(0)
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for r in rank + 1..m.len() {
            if m[r][c] == 0 {
                continue;
            }
            let f = m[r][c] * inv % p;
            for j in c..cols {
                m[r][j] = (m[r][j] + (p - f) * m[rank][j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Fraction-free elimination. Returns (rank, last leading minor with swap sign);
/// the second value is the determinant when the matrix is square of full rank.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negate = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            negate = !negate;
        }
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&m[rank][c] * &m[r][j] - &m[r][c] * &m[rank][j]) / &prev;
                m[r][j] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    (rank, if negate { -prev } else { prev })
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "dot of unequal lengths");
    let field = a.first().map_or(Field::Rational, Scalar::field);
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(field.zero(), |acc, (x, y)| acc + x * y)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_over_q_survives_bad_reduction() {
        let p = CERTIFICATE_PRIME as i64;
        let m = Matrix::from_i64(Field::Rational, &[&[p, 0], &[0, 1]]);
        assert_eq!(m.rank(), 2);
        let m = Matrix::from_i64(Field::Rational, &[&[1, 1], &[1, 1 + p]]);
        assert_eq!(m.rank(), 2);
        let m = Matrix::from_i64(Field::Rational, &[&[2, 4, 6], &[1, 2, 3]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn identity_rank_and_zero_rank() {
        for field in [Field::Rational, Field::Prime(10007)] {
            assert_eq!(Matrix::identity(field, 3).rank(), 3);
            assert_eq!(Matrix::zeros(field, 4, 7).rank(), 0);
        }
    }

    #[test]
    fn det_agrees_between_fields() {
        let rows: &[&[i64]] = &[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]];
        let q = Matrix::from_i64(Field::Rational, rows).det().unwrap();
        assert_eq!(q, Field::Rational.from_i64(-54));
        let p = Matrix::from_i64(Field::Prime(101), rows).det().unwrap();
        assert_eq!(p, Field::Prime(101).from_i64(-54));
    }

    #[test]
    fn rational_det_with_denominators() {
        let f = Field::Rational;
        let half = f.from_ratio(1, 2).unwrap();
        let m = Matrix::new(
            f,
            2,
            2,
            vec![half.clone(), f.from_i64(1), f.from_i64(3), half],
        )
        .unwrap();
        assert_eq!(m.det().unwrap(), f.from_ratio(-11, 4).unwrap());
    }

    #[test]
    fn rank_deficient_bareiss() {
        let rows: &[&[i64]] = &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 0, 1, 1], &[1, 2, 4, 5]];
        assert_eq!(Matrix::from_i64(Field::Rational, rows).rank(), 2);
        assert_eq!(
            Matrix::from_i64(Field::Rational, rows).det().unwrap(),
            Field::Rational.zero()
        );
    }

    #[test]
    fn kernel_of_identity_and_ones_row() {
        let f = Field::Rational;
        assert_eq!(Matrix::identity(f, 3).kernel_basis().dim(), 0);
        let k = Matrix::from_i64(f, &[&[1, 1]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[f.from_i64(1), f.from_i64(-1)]));
    }

    #[test]
    fn entry_count_checked() {
        let f = Field::Rational;
        assert!(Matrix::new(f, 2, 2, vec![f.one(); 3]).is_err());
    }
}
