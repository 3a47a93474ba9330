use std::fmt;

use super::{Field, Matrix, Scalar};
use crate::error::{Error, Result};

/// A linear subspace of `field^ambient`, stored as its reduced row echelon basis.
/// Equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient, vectors)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        let all: Vec<usize> = (0..m.cols()).collect();
        Subspace {
            ambient: m.cols(),
            basis: r.select(&keep, &all),
        }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                (0..self.ambient)
                    .find(|&c| !self.basis.get(r, c).is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect()
    }

    /// Coordinates of `x` in the canonical basis, if `x` lies in the subspace.
    pub fn coordinates(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        if x.len() != self.ambient {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots().into_iter().map(|p| x[p].clone()).collect();
        let recon = self.combine(&coords);
        (recon == x).then_some(coords)
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.coordinates(x).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count");
        let mut out = vec![self.field().zero(); self.ambient];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                *o = &*o + &(c * b);
            }
        }
        out
    }

    /// Vectors `y` with `b . y = 0` for every basis vector `b`.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel_basis()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Self::row_space(&self.basis.stack(&other.basis)?))
    }

    /// Intersection, computed as the common kernel of both annihilators.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let ann = self.annihilator().basis.stack(other.annihilator().basis())?;
        let meet = ann.kernel_basis();
        let join = self.join(other)?;
        assert_eq!(
            meet.dim() + join.dim(),
            self.dim() + other.dim(),
            "Grassmann identity violated"
        );
        Ok(meet)
    }

    /// Hyperplane of this subspace cut out by `coeffs . x = 0` in basis coordinates.
    pub fn hyperplane(&self, coeffs: &[Scalar]) -> Result<Subspace> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().all(Scalar::is_zero) {
            return Err(Error::ZeroVector);
        }
        let functional = Matrix::from_rows(self.field(), self.dim(), vec![coeffs.to_vec()])?;
        let kernel = functional.kernel_basis();
        let vectors = kernel
            .basis_vectors()
            .iter()
            .map(|c| self.combine(c))
            .collect();
        Subspace::span(self.field(), self.ambient, vectors)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} in {}^{}", self.dim(), self.field(), self.ambient)
    }
}
