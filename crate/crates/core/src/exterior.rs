//! The based exterior algebra of a small coordinate space.
//!
//! Conventions, fixed for the whole crate:
//!
//! * the basis of the grade-`k` part is `e_S` for sorted `k`-subsets `S` of
//!   `{0, .., n-1}`, listed in lexicographic order;
//! * `e_S ^ e_T = sign(S, T) e_{S u T}` where the sign is the parity of the
//!   number of pairs `s in S, t in T` with `s > t` (the merge permutation);
//! * the volume form is the coefficient of `e_0 ^ .. ^ e_{n-1}`.
//!
//! For `V` of dimension 6 the grade-3 part is 20-dimensional and
//! `(a, b) -> vol(a ^ b)` is a symplectic form on it.

use std::fmt;
use std::sync::OnceLock;

use rand::Rng;

use crate::arith::{Field, Matrix, Scalar, Subspace};
use crate::error::{Error, Result};

/// Dimension of `V`.
pub const DIM_V: usize = 6;
/// Dimension of the symplectic space of 3-forms on `V`.
pub const DIM_FORMS: usize = 20;
/// Dimension of a Lagrangian subspace of the 3-forms.
pub const LAGRANGIAN_DIM: usize = 10;

const MAX_DIM: usize = 6;

struct BasisTable {
    by_grade: Vec<Vec<u8>>,
    index: Vec<usize>,
}

fn table(n: usize) -> &'static BasisTable {
    static TABLES: [OnceLock<BasisTable>; MAX_DIM + 1] = [const { OnceLock::new() }; MAX_DIM + 1];
    assert!(n <= MAX_DIM, "exterior algebras above dimension {MAX_DIM} are not supported");
    TABLES[n].get_or_init(|| {
        let mut by_grade = vec![Vec::new(); n + 1];
        let mut index = vec![0; 1 << n];
        for k in 0..=n {
            let mut subsets: Vec<u8> = (0u16..1 << n)
                .map(|m| m as u8)
                .filter(|m| m.count_ones() as usize == k)
                .collect();
            subsets.sort_by_key(|&m| bits(m));
            for (i, &m) in subsets.iter().enumerate() {
                index[m as usize] = i;
            }
            by_grade[k] = subsets;
        }
        BasisTable { by_grade, index }
    })
}

fn bits(mask: u8) -> Vec<usize> {
    (0..8).filter(|i| mask >> i & 1 == 1).collect()
}

/// Sorted basis subsets (as bit masks) of the grade-`k` part of the exterior algebra on `n` generators.
pub fn basis_masks(n: usize, k: usize) -> &'static [u8] {
    &table(n).by_grade[k]
}

/// Position of `e_S` in the lexicographic basis of its grade.
pub fn basis_index(n: usize, mask: u8) -> usize {
    table(n).index[mask as usize]
}

/// Sorted index set of a basis element, e.g. `[0, 1, 2]` for `e_012`.
pub fn basis_label(n: usize, k: usize, i: usize) -> Vec<usize> {
    bits(basis_masks(n, k)[i])
}

/// Sign of `e_S ^ e_T` relative to `e_{S u T}`; zero when `S` and `T` meet.
pub fn merge_sign(s: u8, t: u8) -> i64 {
    if s & t != 0 {
        return 0;
    }
    let inversions: u32 = bits(s)
        .into_iter()
        .map(|i| (t & ((1u16 << i) - 1) as u8).count_ones())
        .sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A homogeneous element of the exterior algebra on `dim` generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExteriorVector {
    field: Field,
    dim: usize,
    grade: usize,
    coords: Vec<Scalar>,
}

impl ExteriorVector {
    pub fn zero(field: Field, dim: usize, grade: usize) -> Self {
        ExteriorVector {
            field,
            dim,
            grade,
            coords: vec![field.zero(); binomial(dim, grade)],
        }
    }

    pub fn from_coords(field: Field, dim: usize, grade: usize, coords: Vec<Scalar>) -> Result<Self> {
        if dim > MAX_DIM || grade > dim {
            return Err(Error::GradeOverflow(grade, 0, dim));
        }
        let expected = binomial(dim, grade);
        if coords.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: coords.len(),
            });
        }
        if let Some(bad) = coords.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(ExteriorVector {
            field,
            dim,
            grade,
            coords,
        })
    }

    /// A vector of the underlying space (grade 1).
    pub fn vector(field: Field, coords: Vec<Scalar>) -> Result<Self> {
        let dim = coords.len();
        Self::from_coords(field, dim, 1, coords)
    }

    /// `e_{i_1} ^ .. ^ e_{i_k}` for the listed indices, in the given order.
    pub fn basis_wedge(field: Field, dim: usize, indices: &[usize]) -> Self {
        let mut acc = Self::scalar(field, dim, field.one());
        for &i in indices {
            acc = acc.wedge(&Self::unit(field, dim, i)).expect("grade fits");
        }
        acc
    }

    pub fn unit(field: Field, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(field, dim, 1);
        v.coords[i] = field.one();
        v
    }

    pub fn scalar(field: Field, dim: usize, s: Scalar) -> Self {
        ExteriorVector {
            field,
            dim,
            grade: 0,
            coords: vec![s],
        }
    }

    pub fn random<R: Rng + ?Sized>(field: Field, dim: usize, grade: usize, rng: &mut R) -> Self {
        ExteriorVector {
            field,
            dim,
            grade,
            coords: field.random_vector(binomial(dim, grade), rng),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        if self.grade != other.grade {
            return Err(Error::GradeMismatch {
                expected: self.grade,
                got: other.grade,
            });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExteriorVector {
            coords,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        ExteriorVector {
            coords: self.coords.iter().map(|c| c * s).collect(),
            ..self.clone()
        }
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let grade = self.grade + other.grade;
        if grade > self.dim {
            return Err(Error::GradeOverflow(self.grade, other.grade, self.dim));
        }
        let mut out = Self::zero(self.field, self.dim, grade);
        let left = basis_masks(self.dim, self.grade);
        let right = basis_masks(self.dim, other.grade);
        for (a, &s) in self.coords.iter().zip(left) {
            if a.is_zero() {
                continue;
            }
            for (b, &t) in other.coords.iter().zip(right) {
                if b.is_zero() {
                    continue;
                }
                let sign = merge_sign(s, t);
                if sign == 0 {
                    continue;
                }
                let idx = basis_index(self.dim, s | t);
                let term = a * b;
                out.coords[idx] = if sign > 0 {
                    &out.coords[idx] + &term
                } else {
                    &out.coords[idx] - &term
                };
            }
        }
        Ok(out)
    }

    /// Coefficient of the top basis element. Requires top grade.
    pub fn vol(&self) -> Result<Scalar> {
        if self.grade != self.dim {
            return Err(Error::GradeMismatch {
                expected: self.dim,
                got: self.grade,
            });
        }
        Ok(self.coords[0].clone())
    }

    /// Rescaled so the first nonzero coordinate is 1 (zero stays zero).
    pub fn normalized(&self) -> Self {
        match self.coords.iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scale(&lead.inv().expect("nonzero")),
            None => self.clone(),
        }
    }
}

impl fmt::Display for ExteriorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let label: String = basis_label(self.dim, self.grade, i)
                    .iter()
                    .map(|d| d.to_string())
                    .collect();
                format!("{c}*e{label}")
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `vol(a ^ b)` on 3-forms of a six-dimensional space.
pub fn symplectic_form(a: &ExteriorVector, b: &ExteriorVector) -> Result<Scalar> {
    for x in [a, b] {
        if x.grade != 3 || x.dim != DIM_V {
            return Err(Error::GradeMismatch {
                expected: 3,
                got: x.grade,
            });
        }
    }
    a.wedge(b)?.vol()
}

/// The symplectic space of 3-forms on `V`, with its Gram matrix built once.
#[derive(Clone, Debug)]
pub struct SymplecticContext {
    field: Field,
    gram: Matrix,
}

impl SymplecticContext {
    pub fn new(field: Field) -> Self {
        let masks = basis_masks(DIM_V, 3);
        let mut gram = Matrix::zeros(field, DIM_FORMS, DIM_FORMS);
        for (i, &s) in masks.iter().enumerate() {
            for (j, &t) in masks.iter().enumerate() {
                let sign = merge_sign(s, t);
                if sign != 0 {
                    gram.set(i, j, field.from_i64(sign));
                }
            }
        }
        SymplecticContext { field, gram }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// The form on raw coordinate vectors of length 20.
    pub fn pair(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let gb = self.gram.mul_vec(b).expect("length 20");
        crate::arith::dot(a, &gb)
    }

    fn check(&self, s: &Subspace) -> Result<()> {
        if s.ambient() != DIM_FORMS {
            return Err(Error::DimensionMismatch {
                expected: DIM_FORMS,
                got: s.ambient(),
            });
        }
        if s.field() != self.field {
            return Err(Error::FieldMismatch(self.field, s.field()));
        }
        Ok(())
    }

    /// The form restricted to `s`, in its canonical basis.
    pub fn restricted_gram(&self, s: &Subspace) -> Result<Matrix> {
        self.check(s)?;
        s.basis().mul(&self.gram)?.mul(&s.basis().transpose())
    }

    pub fn is_isotropic(&self, s: &Subspace) -> Result<bool> {
        Ok(self.restricted_gram(s)?.is_zero())
    }

    pub fn is_lagrangian(&self, s: &Subspace) -> Result<bool> {
        Ok(s.dim() == LAGRANGIAN_DIM && self.is_isotropic(s)?)
    }

    /// Symplectic orthogonal.
    pub fn perp(&self, s: &Subspace) -> Result<Subspace> {
        self.check(s)?;
        if s.dim() == 0 {
            return Ok(Subspace::full(self.field, DIM_FORMS));
        }
        Ok(s.basis().mul(&self.gram)?.kernel_basis())
    }

    /// Extends an isotropic subspace to a Lagrangian one by repeatedly adjoining
    /// random vectors of the current orthogonal that are not yet included.
    pub fn lagrangian_completion<R: Rng + ?Sized>(
        &self,
        s: &Subspace,
        rng: &mut R,
    ) -> Result<Subspace> {
        if !self.is_isotropic(s)? {
            return Err(Error::NotIsotropic);
        }
        let mut current = s.clone();
        while current.dim() < LAGRANGIAN_DIM {
            let orth = self.perp(&current)?;
            let coeffs = self.field.random_vector(orth.dim(), rng);
            let x = orth.combine(&coeffs);
            if current.contains(&x) {
                continue;
            }
            let mut vectors = current.basis_vectors();
            vectors.push(x);
            current = Subspace::span(self.field, DIM_FORMS, vectors)?;
        }
        Ok(current)
    }

    /// A random Lagrangian subspace, drawn as the graph `{y + S y}` of a map
    /// `S: L1 -> L0` with `P S` symmetric, where `L0` is spanned by the basis
    /// forms containing `e_0`, `L1` by the rest, and `P` is the pairing
    /// `L1 x L0`. These are exactly the Lagrangians transverse to `L0`.
    pub fn random_lagrangian<R: Rng + ?Sized>(&self, rng: &mut R) -> Subspace {
        let masks = basis_masks(DIM_V, 3);
        let (l0, l1): (Vec<usize>, Vec<usize>) = (0..DIM_FORMS).partition(|&i| masks[i] & 1 == 1);
        let mut m = vec![vec![self.field.zero(); LAGRANGIAN_DIM]; LAGRANGIAN_DIM];
        for a in 0..LAGRANGIAN_DIM {
            for b in a..LAGRANGIAN_DIM {
                let x = self.field.random(rng);
                m[a][b] = x.clone();
                m[b][a] = x;
            }
        }
        // P is a signed permutation, so S = P^T M
        let vectors = (0..LAGRANGIAN_DIM)
            .map(|j| {
                let mut v = vec![self.field.zero(); DIM_FORMS];
                v[l1[j]] = self.field.one();
                for &row in &l0 {
                    let s = (0..LAGRANGIAN_DIM).fold(self.field.zero(), |acc, k| {
                        &acc + &(self.gram.get(l1[k], row) * &m[k][j])
                    });
                    v[row] = s;
                }
                v
            })
            .collect();
        Subspace::span(self.field, DIM_FORMS, vectors).expect("graph has full rank")
    }
}

/// `F_v = { v ^ a : a a 2-form }`, a Lagrangian subspace of dimension 10 for `v != 0`.
pub fn f_of(v: &ExteriorVector) -> Result<Subspace> {
    if v.grade != 1 || v.dim != DIM_V {
        return Err(Error::GradeMismatch {
            expected: 1,
            got: v.grade,
        });
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let vectors = basis_masks(DIM_V, 2)
        .iter()
        .map(|&m| {
            let e = ExteriorVector::basis_wedge(v.field, DIM_V, &bits(m));
            v.wedge(&e).expect("grade 3").into_coords()
        })
        .collect();
    Subspace::span(v.field, DIM_FORMS, vectors)
}

/// Wedge of a basis of a 3-dimensional subspace of `V`, scaled so that its
/// first nonzero coordinate is 1.
pub fn decomposable_of(w: &Subspace) -> Result<ExteriorVector> {
    if w.ambient() != DIM_V {
        return Err(Error::DimensionMismatch {
            expected: DIM_V,
            got: w.ambient(),
        });
    }
    if w.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: w.dim(),
        });
    }
    let mut acc = ExteriorVector::scalar(w.field(), DIM_V, w.field().one());
    for v in w.basis_vectors() {
        acc = acc.wedge(&ExteriorVector::vector(w.field(), v)?)?;
    }
    Ok(acc.normalized())
}

/// Vectors `v` of the underlying space with `v ^ x = 0`.
pub fn divisors(x: &ExteriorVector) -> Result<Subspace> {
    // column k holds the coordinates of e_k ^ x
    let columns = (0..x.dim)
        .map(|k| Ok(ExteriorVector::unit(x.field, x.dim, k).wedge(x)?.into_coords()))
        .collect::<Result<Vec<_>>>()?;
    let rows = columns[0].len();
    let m = Matrix::from_rows(x.field, rows, columns)?.transpose();
    Ok(m.kernel_basis())
}

/// A nonzero `k`-form is decomposable iff its divisors span a `k`-space.
pub fn is_decomposable(x: &ExteriorVector) -> Result<bool> {
    Ok(!x.is_zero() && divisors(x)?.dim() == x.grade)
}

/// Span of three vectors of `V`.
pub fn plane_of(field: Field, vectors: &[ExteriorVector]) -> Result<Subspace> {
    Subspace::span(
        field,
        DIM_V,
        vectors.iter().map(|v| v.coords().to_vec()).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: Field = Field::Rational;
    const P: Field = Field::Prime(10007);

    fn e(field: Field, idx: &[usize]) -> ExteriorVector {
        ExteriorVector::basis_wedge(field, DIM_V, idx)
    }

    #[test]
    fn basis_order_is_lexicographic() {
        assert_eq!(basis_label(6, 3, 0), vec![0, 1, 2]);
        assert_eq!(basis_label(6, 3, 1), vec![0, 1, 3]);
        assert_eq!(basis_label(6, 3, 19), vec![3, 4, 5]);
        assert_eq!(basis_label(6, 2, 5), vec![1, 2]);
        assert_eq!(basis_masks(6, 3).len(), 20);
    }

    #[test]
    fn basic_wedges() {
        assert!(e(Q, &[0]).wedge(&e(Q, &[0])).unwrap().is_zero());
        let e01 = e(Q, &[0]).wedge(&e(Q, &[1])).unwrap();
        assert_eq!(e01.coords()[0], Q.one());
        let e10 = e(Q, &[1]).wedge(&e(Q, &[0])).unwrap();
        assert_eq!(e10.coords()[0], -Q.one());
        let top = e(Q, &[0, 1, 2]).wedge(&e(Q, &[3, 4, 5])).unwrap();
        assert_eq!(top.vol().unwrap(), Q.one());
    }

    #[test]
    fn grade_overflow_rejected() {
        let a = e(Q, &[0, 1, 2, 3]);
        assert_eq!(
            a.wedge(&e(Q, &[4, 5])).unwrap().grade(),
            6
        );
        assert!(matches!(
            a.wedge(&e(Q, &[1, 4, 5])),
            Err(Error::GradeOverflow(4, 3, 6))
        ));
    }

    #[test]
    fn symplectic_form_conventions() {
        assert_eq!(
            symplectic_form(&e(Q, &[0, 1, 2]), &e(Q, &[3, 4, 5])).unwrap(),
            Q.one()
        );
        assert_eq!(
            symplectic_form(&e(Q, &[3, 4, 5]), &e(Q, &[0, 1, 2])).unwrap(),
            -Q.one()
        );
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = ExteriorVector::random(Q, DIM_V, 3, &mut rng);
        assert!(symplectic_form(&a, &a).unwrap().is_zero());
        assert!(symplectic_form(&a, &e(Q, &[0, 1])).is_err());
    }

    #[test]
    fn gram_matches_pointwise_form() {
        let ctx = SymplecticContext::new(Q);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = ExteriorVector::random(Q, DIM_V, 3, &mut rng);
        let b = ExteriorVector::random(Q, DIM_V, 3, &mut rng);
        assert_eq!(
            ctx.pair(a.coords(), b.coords()),
            symplectic_form(&a, &b).unwrap()
        );
        assert_eq!(ctx.gram().rank(), 20);
        assert_eq!(ctx.gram().transpose().scale(&-Q.one()), *ctx.gram());
    }

    #[test]
    fn f_of_e0_is_the_expected_span() {
        let f = f_of(&e(Q, &[0])).unwrap();
        let expected = Subspace::span(
            Q,
            DIM_FORMS,
            basis_masks(6, 3)
                .iter()
                .filter(|&&m| m & 1 == 1)
                .map(|&m| e(Q, &bits(m)).into_coords())
                .collect(),
        )
        .unwrap();
        assert_eq!(f, expected);
        assert!(SymplecticContext::new(Q).is_lagrangian(&f).unwrap());
    }

    #[test]
    fn f_of_rejects_zero() {
        assert_eq!(
            f_of(&ExteriorVector::zero(Q, DIM_V, 1)),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn coordinate_subspace_through_index_zero() {
        // the ten e_S with 0 in S: isotropic since any two share index 0
        let ctx = SymplecticContext::new(P);
        let s = Subspace::span(
            P,
            DIM_FORMS,
            basis_masks(6, 3)
                .iter()
                .filter(|&&m| m & 1 == 1)
                .map(|&m| e(P, &bits(m)).into_coords())
                .collect(),
        )
        .unwrap();
        assert!(ctx.restricted_gram(&s).unwrap().is_zero());
        assert!(ctx.is_lagrangian(&s).unwrap());
    }

    #[test]
    fn nine_dimensional_isotropic_is_not_lagrangian() {
        let ctx = SymplecticContext::new(Q);
        let f = f_of(&e(Q, &[2])).unwrap();
        let u = f.hyperplane(&vec![Q.one(); 10]).unwrap();
        assert!(ctx.is_isotropic(&u).unwrap());
        assert!(!ctx.is_lagrangian(&u).unwrap());
        let up = ctx.perp(&u).unwrap();
        assert_eq!(up.dim(), 11);
        assert!(up.contains_subspace(&u));
    }

    #[test]
    fn perp_of_lagrangian_and_zero() {
        let ctx = SymplecticContext::new(P);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = ctx.random_lagrangian(&mut rng);
        assert_eq!(ctx.perp(&a).unwrap(), a);
        assert_eq!(
            ctx.perp(&Subspace::zero(P, 20)).unwrap(),
            Subspace::full(P, 20)
        );
    }

    #[test]
    fn completion_keeps_lagrangians_and_extends_lines() {
        let ctx = SymplecticContext::new(Q);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let f = f_of(&e(Q, &[1])).unwrap();
        assert_eq!(ctx.lagrangian_completion(&f, &mut rng).unwrap(), f);
        let line = Subspace::span(Q, 20, vec![e(Q, &[0, 1, 2]).into_coords()]).unwrap();
        let a = ctx.lagrangian_completion(&line, &mut rng).unwrap();
        assert!(ctx.is_lagrangian(&a).unwrap());
        assert!(a.contains(e(Q, &[0, 1, 2]).coords()));
    }

    #[test]
    fn completion_rejects_non_isotropic() {
        let ctx = SymplecticContext::new(Q);
        let s = Subspace::span(
            Q,
            20,
            vec![e(Q, &[0, 1, 2]).into_coords(), e(Q, &[3, 4, 5]).into_coords()],
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        assert_eq!(
            ctx.lagrangian_completion(&s, &mut rng),
            Err(Error::NotIsotropic)
        );
    }

    #[test]
    fn decomposability_via_divisors() {
        assert!(is_decomposable(&e(Q, &[0, 1, 2])).unwrap());
        let sum = e(Q, &[0, 1, 2]).add(&e(Q, &[3, 4, 5])).unwrap();
        assert!(!is_decomposable(&sum).unwrap());
        assert_eq!(divisors(&sum).unwrap().dim(), 0);
        let mixed = e(Q, &[0, 1, 2]).add(&e(Q, &[0, 1, 3])).unwrap();
        assert!(is_decomposable(&mixed).unwrap());
        assert!(!is_decomposable(&ExteriorVector::zero(Q, 6, 3)).unwrap());
    }

    #[test]
    fn decomposable_canonical_form() {
        let w = plane_of(Q, &[e(Q, &[0]), e(Q, &[1]), e(Q, &[2])]).unwrap();
        assert_eq!(decomposable_of(&w).unwrap(), e(Q, &[0, 1, 2]));
        let v = |c: &[i64]| ExteriorVector::vector(Q, c.iter().map(|&x| Q.from_i64(x)).collect()).unwrap();
        let w1 = plane_of(Q, &[v(&[1, 2, 0, 0, 1, 0]), v(&[0, 1, 1, 0, 0, 3]), v(&[2, 0, 0, 1, 0, 0])]).unwrap();
        let w2 = plane_of(
            Q,
            &[
                v(&[3, 3, 1, 1, 1, 3]),
                v(&[1, 3, 1, 0, 1, 3]),
                v(&[5, 2, 0, 2, 1, 0]),
            ],
        )
        .unwrap();
        assert_eq!(w1, w2);
        assert_eq!(decomposable_of(&w1).unwrap(), decomposable_of(&w2).unwrap());
        assert!(decomposable_of(&Subspace::full(Q, 6)).is_err());
    }
}
