//! Webs of quadrics in `P^3`: four symmetric 4 x 4 matrices spanning a
//! linear system, the quartic `det(sum t_i Q_i)`, its rank strata and the
//! pairs of points a line in the base locus of a pencil picks out.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{Field, Matrix, MultiPoly, Scalar};
use crate::error::{Error, Result};

/// Largest prime `field_scan` accepts.
pub const SCAN_PRIME_LIMIT: u64 = 1 << 14;

/// A three-dimensional linear system of quadrics, given by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebOfQuadrics {
    field: Field,
    gens: [Matrix; 4],
}

impl WebOfQuadrics {
    pub fn new(gens: [Matrix; 4]) -> Result<Self> {
        let field = gens[0].field();
        for q in &gens {
            if q.field() != field {
                return Err(Error::FieldMismatch(field, q.field()));
            }
            if q.rows() != 4 || q.cols() != 4 {
                return Err(Error::DimensionMismatch {
                    expected: 4,
                    got: q.rows(),
                });
            }
            if q.transpose() != *q {
                return Err(Error::Precondition("quadric matrix is not symmetric".into()));
            }
        }
        let flat = gens
            .iter()
            .map(|q| q.row_vecs().concat())
            .collect::<Vec<_>>();
        if Matrix::from_rows(field, 16, flat)?.rank() != 4 {
            return Err(Error::Degenerate("web generators are dependent".into()));
        }
        Ok(WebOfQuadrics { field, gens })
    }

    /// A web with random symmetric generators.
    pub fn random<R: rand::Rng + ?Sized>(field: Field, rng: &mut R) -> Self {
        loop {
            let gens = std::array::from_fn(|_| random_symmetric(field, rng));
            if let Ok(web) = Self::new(gens) {
                return web;
            }
        }
    }

    /// `Q_i = E_ii`.
    pub fn diagonal(field: Field) -> Self {
        let gens = std::array::from_fn(|i| {
            let mut m = Matrix::zeros(field, 4, 4);
            m.set(i, i, field.one());
            m
        });
        Self::new(gens).expect("coordinate web")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[Matrix; 4] {
        &self.gens
    }

    pub fn member(&self, t: &[Scalar]) -> Matrix {
        assert_eq!(t.len(), 4, "web parameter");
        let mut acc = Matrix::zeros(self.field, 4, 4);
        for (ti, q) in t.iter().zip(&self.gens) {
            acc = acc.add(&q.scale(ti)).expect("same shape");
        }
        acc
    }
}

pub fn random_symmetric<R: rand::Rng + ?Sized>(field: Field, rng: &mut R) -> Matrix {
    let mut m = Matrix::zeros(field, 4, 4);
    for i in 0..4 {
        for j in i..4 {
            let x = field.random(rng);
            m.set(i, j, x.clone());
            m.set(j, i, x);
        }
    }
    m
}

pub fn member_rank(web: &WebOfQuadrics, t: &[Scalar]) -> Result<usize> {
    if t.iter().all(Scalar::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(web.member(t).rank())
}

/// `det(sum t_i Q_i)` expanded as a polynomial in `t_0..t_3`.
pub fn quartic_surface(web: &WebOfQuadrics) -> Result<MultiPoly> {
    let f = web.field;
    let entry = |i: usize, j: usize| {
        let coeffs: Vec<Scalar> = web.gens.iter().map(|q| q.get(i, j).clone()).collect();
        MultiPoly::linear(f, &coeffs)
    };
    let mut det = MultiPoly::zero(f, 4);
    for perm in permutations4() {
        let mut term = MultiPoly::constant(f, 4, f.from_i64(perm_sign(&perm)));
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&entry(i, j));
        }
        det = det.add(&term);
    }
    if det.is_zero() {
        return Err(Error::Degenerate("every member of the web is singular".into()));
    }
    Ok(det)
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Classical adjugate of a square matrix (transposed cofactors).
pub fn adjugate(m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.cols(),
        });
    }
    let mut adj = Matrix::zeros(m.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let minor = if n == 1 {
                m.field().one()
            } else {
                m.select(&rows, &cols).det()?
            };
            adj.set(i, j, if (i + j) % 2 == 0 { minor } else { -minor });
        }
    }
    Ok(adj)
}

fn trace(m: &Matrix) -> Scalar {
    (0..m.rows()).fold(m.field().zero(), |acc, i| &acc + m.get(i, i))
}

/// `d/dt_i det Q(t) = tr(adj(Q(t)) Q_i)`.
pub fn gradient_via_adjugate(web: &WebOfQuadrics, t: &[Scalar]) -> Result<Vec<Scalar>> {
    let adj = adjugate(&web.member(t))?;
    web.gens
        .iter()
        .map(|q| Ok(trace(&adj.mul(q)?)))
        .collect()
}

/// Degree of the locus of symmetric `n x n` matrices of rank at most `r`.
pub fn harris_tu_degree(n: u64, r: u64) -> Result<u64> {
    if r >= n {
        return Err(Error::Precondition(format!("rank {r} is not below size {n}")));
    }
    let mut acc = BigRational::one();
    for a in 0..n - r {
        acc *= BigRational::new(binom(n + a, n - r - a), binom(2 * a + 1, a));
    }
    if !acc.is_integer() {
        return Err(Error::Inconsistent(format!("non-integral degree {acc}")));
    }
    acc.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Inconsistent("degree overflow".into()))
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Solutions on a line of the bilinear conditions of a web.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinePair {
    /// Two distinct points of `P^3`, canonically ordered.
    Pair([Vec<Scalar>; 2]),
    /// A double solution `x = y`.
    Tangent(Vec<Scalar>),
    /// The binary quadratic has no roots in the base field.
    Irrational,
}

/// Scales a projective point so its first nonzero coordinate is 1.
pub fn normalize_point(x: &[Scalar]) -> Vec<Scalar> {
    match x.iter().find(|c| !c.is_zero()) {
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            x.iter().map(|c| c * &inv).collect()
        }
        None => x.to_vec(),
    }
}

fn point_key(x: &[Scalar]) -> Vec<String> {
    x.iter().map(|c| c.to_string()).collect()
}

fn bilinear(q: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    crate::arith::dot(x, &q.mul_vec(y).expect("size"))
}

/// For a line `r` (two spanning points) lying in the base locus of the pencil
/// spanned by `pencil`, the points `x, y` of `r` with `x^T Q y = 0` for every
/// member `Q` of the web.
pub fn bitangent_pair(
    web: &WebOfQuadrics,
    pencil: [&Matrix; 2],
    line: [&[Scalar]; 2],
) -> Result<LinePair> {
    let f = web.field;
    let r = Matrix::from_rows(f, 4, vec![line[0].to_vec(), line[1].to_vec()])?;
    if r.rank() != 2 {
        return Err(Error::Degenerate("line points coincide".into()));
    }
    let rt = r.transpose();
    let restrict = |q: &Matrix| -> Result<Matrix> { r.mul(q)?.mul(&rt) };
    for q in pencil {
        if !restrict(q)?.is_zero() {
            return Err(Error::Precondition("line is not in the base locus of the pencil".into()));
        }
    }
    // restrictions of the whole web, as symmetric 2 x 2 blocks (a, b, c)
    let blocks = web
        .gens
        .iter()
        .map(|q| {
            let b = restrict(q)?;
            Ok(vec![b.get(0, 0).clone(), b.get(0, 1).clone(), b.get(1, 1).clone()])
        })
        .collect::<Result<Vec<_>>>()?;
    let span = crate::arith::Subspace::span(f, 3, blocks)?;
    if span.dim() < 2 {
        return Err(Error::Degenerate(
            "residual conditions are dependent: infinitely many solutions".into(),
        ));
    }
    if span.dim() > 2 {
        return Err(Error::Precondition("pencil members are not in the web".into()));
    }
    let sym = |v: &[Scalar]| Matrix::from_rows(f, 2, vec![vec![v[0].clone(), v[1].clone()], vec![v[1].clone(), v[2].clone()]]);
    let basis = span.basis_vectors();
    let b2 = sym(&basis[0])?;
    let b3 = sym(&basis[1])?;
    // y = J B2 x kills x^T B2 y; the remaining condition x^T B3 J B2 x = 0
    let j = Matrix::from_i64(f, &[&[0, 1], &[-1, 0]]);
    let jb2 = j.mul(&b2)?;
    let m = b3.mul(&jb2)?;
    let two = f.from_i64(2);
    let a = m.get(0, 0).clone();
    let b = m.get(0, 1) + m.get(1, 0);
    let c = m.get(1, 1).clone();
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::Degenerate(
            "residual binary quadratic vanishes identically".into(),
        ));
    }
    let lift = |x: &[Scalar]| -> Result<Vec<Scalar>> { Ok(normalize_point(&rt.mul_vec(x)?)) };
    let disc = &(&b * &b) - &(&(&two * &two) * &(&a * &c));
    let roots: Vec<Vec<Scalar>> = if a.is_zero() {
        // x1 (b x0 + c x1)
        let mut out = vec![vec![f.one(), f.zero()]];
        if !b.is_zero() {
            out.push(vec![-c.clone(), b.clone()]);
        } else {
            out.push(vec![f.one(), f.zero()]);
        }
        out
    } else {
        let Some(s) = disc.sqrt() else {
            return Ok(LinePair::Irrational);
        };
        // a x0^2 + b x0 x1 + c x1^2 with x1 = 1
        let den = &two * &a;
        vec![
            vec![&(&-&b + &s) / &den, f.one()],
            vec![&(&-&b - &s) / &den, f.one()],
        ]
    };
    let x = lift(&roots[0])?;
    let y = lift(&roots[1])?;
    if !satisfies_polar_conditions(web, &x, &y) {
        return Err(Error::Inconsistent("line pair fails a polar condition".into()));
    }
    if x == y {
        return Ok(LinePair::Tangent(x));
    }
    let mut pair = [x, y];
    pair.sort_by_key(|p| point_key(p));
    Ok(LinePair::Pair(pair))
}

/// A web whose first two generators contain the line `t2 = t3 = 0` in their
/// base locus, together with the two points of that line the web pairs up.
#[derive(Clone, Debug)]
pub struct BitangentFixture {
    pub web: WebOfQuadrics,
    pub line: [Vec<Scalar>; 2],
    /// The prescribed pair, normalized and sorted.
    pub pair: [Vec<Scalar>; 2],
}

impl BitangentFixture {
    pub fn pencil(&self) -> [&Matrix; 2] {
        [&self.web.gens[0], &self.web.gens[1]]
    }

    pub fn solve(&self) -> Result<LinePair> {
        bitangent_pair(&self.web, self.pencil(), [&self.line[0], &self.line[1]])
    }

    /// The same problem with the pencil generators and line points swapped.
    pub fn solve_swapped(&self) -> Result<LinePair> {
        let [q0, q1] = self.pencil();
        bitangent_pair(&self.web, [q1, q0], [&self.line[1], &self.line[0]])
    }
}

pub fn bitangent_fixture<R: rand::Rng + ?Sized>(field: Field, rng: &mut R) -> BitangentFixture {
    loop {
        let x = field.random_vector(2, rng);
        let y = field.random_vector(2, rng);
        if x.iter().chain(&y).any(Scalar::is_zero) {
            continue;
        }
        let mut gens: Vec<Matrix> = Vec::new();
        for k in 0..4 {
            let mut q = random_symmetric(field, rng);
            if k < 2 {
                for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    q.set(i, j, field.zero());
                }
            } else {
                // choose the 2x2 block with x^T B y = 0
                let a = q.get(0, 0).clone();
                let b = q.get(0, 1).clone();
                let rest = &(&(&a * &x[0]) * &y[0]) + &(&b * &(&(&x[0] * &y[1]) + &(&x[1] * &y[0])));
                let c = -(&rest / &(&x[1] * &y[1]));
                q.set(1, 1, c);
            }
            gens.push(q);
        }
        let gens: [Matrix; 4] = gens.try_into().expect("four generators");
        let Ok(web) = WebOfQuadrics::new(gens) else {
            continue;
        };
        let lift = |v: &[Scalar]| normalize_point(&[v[0].clone(), v[1].clone(), field.zero(), field.zero()]);
        let mut pair = [lift(&x), lift(&y)];
        if pair[0] == pair[1] {
            continue;
        }
        pair.sort_by_key(|p| point_key(p));
        let unit = |i: usize| (0..4).map(|j| field.from_i64((i == j) as i64)).collect();
        return BitangentFixture {
            web,
            line: [unit(0), unit(1)],
            pair,
        };
    }
}

/// Whether `x^T Q_i y = 0` for all four generators.
pub fn satisfies_polar_conditions(web: &WebOfQuadrics, x: &[Scalar], y: &[Scalar]) -> bool {
    web.gens.iter().all(|q| bilinear(q, x, y).is_zero())
}

/// Degree-2 monomials `t_i t_j`, `i <= j`.
pub fn veronese(t: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(10);
    for i in 0..t.len() {
        for j in i..t.len() {
            out.push(&t[i] * &t[j]);
        }
    }
    out
}

/// Rank of the second Veronese images of the points.
pub fn veronese_independence(field: Field, points: &[Vec<Scalar>]) -> Result<usize> {
    if points.iter().any(|p| p.iter().all(Scalar::is_zero)) {
        return Err(Error::ZeroVector);
    }
    let rows = points.iter().map(|p| veronese(p)).collect();
    Ok(Matrix::from_rows(field, 10, rows)?.rank())
}

/// Number of points of `P^3(F_p)` in each rank stratum of a web.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub prime: u64,
    pub counts: BTreeMap<usize, u64>,
    /// Rank <= 2 members where the quartic has a nonzero gradient.
    pub rank2_smooth_violations: u64,
    /// Rank 3 members where the quartic is singular.
    pub rank3_singular: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub rank: usize,
    pub count: u64,
}

impl Census {
    pub fn rows(&self) -> Vec<CensusRow> {
        self.counts
            .iter()
            .rev()
            .map(|(&rank, &count)| CensusRow { rank, count })
            .collect()
    }

    pub fn count(&self, rank: usize) -> u64 {
        self.counts.get(&rank).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

fn rank_mod(mut m: [[u64; 4]; 4], p: u64) -> usize {
    let mut rank = 0;
    for col in 0..4 {
        let Some(piv) = (rank..4).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for r in 0..4 {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col] * inv % p;
                for c in col..4 {
                    m[r][c] = (m[r][c] + p - factor * m[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

struct ModPoly(Vec<([u32; 4], u64)>);

impl ModPoly {
    fn from(poly: &MultiPoly) -> Self {
        ModPoly(
            poly.terms()
                .map(|(e, c)| ([e[0], e[1], e[2], e[3]], c.residue().expect("prime field")))
                .collect(),
        )
    }

    fn eval(&self, t: &[u64; 4], p: u64) -> u64 {
        self.0.iter().fold(0, |acc, (e, c)| {
            let m = (0..4).fold(*c, |m, i| m * pow_mod(t[i], e[i] as u64, p) % p);
            (acc + m) % p
        })
    }
}

/// Normalized representatives of `P^3(F_p)`, enumerated by leading position.
fn projective_point(index: u64, p: u64) -> [u64; 4] {
    // blocks of sizes p^3, p^2, p, 1
    let mut rest = index;
    for lead in 0..4 {
        let free = 3 - lead as u32;
        let size = p.pow(free);
        if rest < size {
            let mut t = [0u64; 4];
            t[lead] = 1;
            let mut r = rest;
            for k in (lead + 1..4).rev() {
                t[k] = r % p;
                r /= p;
            }
            return t;
        }
        rest -= size;
    }
    unreachable!("index out of range")
}

/// Tallies member ranks over every point of `P^3(F_p)` and checks the
/// singular points of the quartic against the rank <= 2 stratum.
pub fn field_scan(web: &WebOfQuadrics) -> Result<Census> {
    let Field::Prime(p) = web.field else {
        return Err(Error::Precondition("field scan needs a prime field".into()));
    };
    if p > SCAN_PRIME_LIMIT {
        return Err(Error::Precondition(format!(
            "prime {p} exceeds the scan limit {SCAN_PRIME_LIMIT}"
        )));
    }
    let quartic = quartic_surface(web)?;
    let grads: Vec<ModPoly> = (0..4).map(|i| ModPoly::from(&quartic.partial(i))).collect();
    let gens: Vec<[[u64; 4]; 4]> = web
        .gens
        .iter()
        .map(|q| std::array::from_fn(|i| std::array::from_fn(|j| q.get(i, j).residue().expect("prime field"))))
        .collect();
    let total = p * p * p + p * p + p + 1;
    let chunk = 4096u64;
    let chunks = total.div_ceil(chunk);
    let partials: Vec<([u64; 5], u64, u64)> = (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let mut counts = [0u64; 5];
            let mut viol = 0;
            let mut sing3 = 0;
            for idx in ci * chunk..((ci + 1) * chunk).min(total) {
                let t = projective_point(idx, p);
                let mut m = [[0u64; 4]; 4];
                for (k, g) in gens.iter().enumerate() {
                    if t[k] == 0 {
                        continue;
                    }
                    for i in 0..4 {
                        for j in 0..4 {
                            m[i][j] = (m[i][j] + t[k] * g[i][j]) % p;
                        }
                    }
                }
                let rank = rank_mod(m, p);
                counts[rank] += 1;
                if rank <= 3 {
                    let singular = grads.iter().all(|g| g.eval(&t, p) == 0);
                    if rank <= 2 && !singular {
                        viol += 1;
                    }
                    if rank == 3 && singular {
                        sing3 += 1;
                    }
                }
            }
            (counts, viol, sing3)
        })
        .collect();
    let mut counts = BTreeMap::new();
    let mut viol = 0;
    let mut sing3 = 0;
    for (c, v, s) in partials {
        for (rank, n) in c.iter().enumerate() {
            if *n > 0 {
                *counts.entry(rank).or_insert(0) += n;
            }
        }
        viol += v;
        sing3 += s;
    }
    Ok(Census {
        prime: p,
        counts,
        rank2_smooth_violations: viol,
        rank3_singular: sing3,
    })
}

/// Exact census of the diagonal web: rank equals the number of nonzero coordinates.
pub fn diagonal_census(p: u64) -> BTreeMap<usize, u64> {
    BTreeMap::from([
        (1, 4),
        (2, 6 * (p - 1)),
        (3, 4 * (p - 1) * (p - 1)),
        (4, (p - 1).pow(3)),
    ])
}
