//! Schubert calculus on `Gr(k, n)` through the Pieri rules.
//!
//! Products with arbitrary classes go through the Giambelli determinant,
//! which writes every `sigma_lambda` as a polynomial in special classes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Rank `k` subspaces of an `n`-dimensional space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grassmannian {
    pub k: usize,
    pub n: usize,
}

impl Grassmannian {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::Precondition(format!("Gr({k}, {n}) is not a proper Grassmannian")));
        }
        Ok(Grassmannian { k, n })
    }

    pub fn width(&self) -> usize {
        self.n - self.k
    }

    pub fn dim(&self) -> usize {
        self.k * self.width()
    }

    /// All partitions in the `k x (n-k)` box, by size then reverse lex.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(g: &Grassmannian, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::from_parts(cur.clone()));
            if cur.len() == g.k {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(g, p, cur, out);
                cur.pop();
            }
        }
        rec(self, self.width(), &mut cur, &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then(b.cmp(a)));
        out
    }

    pub fn full_box(&self) -> Partition {
        Partition::from_parts(vec![self.width(); self.k])
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(gr: Grassmannian, parts: &[usize]) -> Result<Self> {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        if v.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("{parts:?} is not weakly decreasing")));
        }
        if v.len() > gr.k || v.first().is_some_and(|&p| p > gr.width()) {
            return Err(Error::PartitionOutOfBox(parts.to_vec(), gr.k, gr.width()));
        }
        v.shrink_to_fit();
        Ok(Partition(v))
    }

    fn from_parts(mut v: Vec<usize>) -> Self {
        v.retain(|&p| p > 0);
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Complement in the box, read backwards.
    pub fn complement(&self, gr: Grassmannian) -> Partition {
        Partition::from_parts((0..gr.k).rev().map(|i| gr.width() - self.part(i)).collect())
    }

    /// Conjugate partition.
    pub fn transpose(&self) -> Partition {
        let m = self.part(0);
        Partition::from_parts((0..m).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let sep = if self.0.iter().any(|&p| p > 9) { "," } else { "" };
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "σ{}", s.join(sep))
    }
}

/// Integer combination of Schubert classes on one Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertClass {
    gr: Grassmannian,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchubertClass {
    pub fn zero(gr: Grassmannian) -> Self {
        SchubertClass {
            gr,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(gr: Grassmannian) -> Self {
        Self::sigma(gr, &[]).expect("empty partition fits")
    }

    pub fn sigma(gr: Grassmannian, parts: &[usize]) -> Result<Self> {
        let mut x = Self::zero(gr);
        x.add_term(Partition::new(gr, parts)?, BigInt::one());
        Ok(x)
    }

    /// `sigma_m`; zero outside `0..=n-k`.
    pub fn special(gr: Grassmannian, m: usize) -> Self {
        if m > gr.width() {
            return Self::zero(gr);
        }
        Self::sigma(gr, &[m]).expect("fits")
    }

    /// `sigma_{1^m}`; zero for `m > k`.
    pub fn special_dual(gr: Grassmannian, m: usize) -> Self {
        if m > gr.k {
            return Self::zero(gr);
        }
        Self::sigma(gr, &vec![1; m]).expect("fits")
    }

    fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&p) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(p, sum);
        }
    }

    pub fn grassmannian(&self) -> Grassmannian {
        self.gr
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, parts: &[usize]) -> BigInt {
        self.terms
            .get(&Partition::from_parts(parts.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(d)` when every term has codimension `d`.
    pub fn pure_codim(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.gr != other.gr {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let mut out = Self::zero(self.gr);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * s);
        }
        out
    }

    /// Product with `sigma_m` (horizontal strips).
    pub fn pieri(&self, m: usize) -> Self {
        self.strip_product(m, false)
    }

    /// Product with `sigma_{1^m}` (vertical strips).
    pub fn dual_pieri(&self, m: usize) -> Self {
        self.strip_product(m, true)
    }

    fn strip_product(&self, m: usize, vertical: bool) -> Self {
        let mut out = Self::zero(self.gr);
        for (p, c) in &self.terms {
            for q in strips(self.gr, p, m, vertical) {
                out.add_term(q, c.clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.gr);
        for (p, c) in &other.terms {
            out = out.add(&self.giambelli_product(p).scale(c))?;
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.gr), |acc, _| acc.mul(self).expect("same context"))
    }

    /// `self * sigma_lambda` with `sigma_lambda = det(sigma_{lambda_i + j - i})`.
    fn giambelli_product(&self, lambda: &Partition) -> Self {
        let l = lambda.0.len();
        if l == 0 {
            return self.clone();
        }
        let mut out = Self::zero(self.gr);
        for (perm, sign) in permutations(l) {
            let mut term = self.clone();
            for (i, &j) in perm.iter().enumerate() {
                let idx = lambda.0[i] as isize + j as isize - i as isize;
                if idx < 0 {
                    term = Self::zero(self.gr);
                    break;
                }
                term = term.pieri(idx as usize);
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term.scale(&BigInt::from(sign))).expect("same context");
        }
        out
    }

    /// Coefficient of the point class.
    pub fn integrate(&self) -> Result<BigInt> {
        if let Some(d) = self.pure_codim() {
            if d != self.gr.dim() {
                return Err(Error::WrongCodim {
                    expected: self.gr.dim(),
                    got: d,
                });
            }
        } else if !self.is_zero() {
            return Err(Error::Precondition("class is not of pure codimension".into()));
        }
        Ok(self.coeff(self.gr.full_box().parts()))
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let s: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                if p.0.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    p.to_string()
                } else {
                    format!("{c}·{p}")
                }
            })
            .collect();
        write!(f, "{}", s.join(" + "))
    }
}

/// Partitions `mu` in the box with `mu / p` a horizontal (or vertical) strip of size `m`.
fn strips(gr: Grassmannian, p: &Partition, m: usize, vertical: bool) -> Vec<Partition> {
    let mut out = Vec::new();
    if vertical {
        // vertical strip on p = horizontal strip on the transpose in the flipped box
        let flipped = Grassmannian {
            k: gr.width(),
            n: gr.n,
        };
        for q in horizontal_strips(flipped, &p.transpose(), m) {
            out.push(q.transpose());
        }
    } else {
        out = horizontal_strips(gr, p, m);
    }
    out
}

fn horizontal_strips(gr: Grassmannian, p: &Partition, m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(gr.k);
    fn rec(
        gr: Grassmannian,
        p: &Partition,
        i: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == gr.k {
            if left == 0 {
                out.push(Partition::from_parts(cur.clone()));
            }
            return;
        }
        // p_i <= mu_i <= p_{i-1} (interlacing), capped by the box
        let lo = p.part(i);
        let hi = if i == 0 { gr.width() } else { p.part(i - 1) };
        for mu in lo..=hi.min(lo + left) {
            cur.push(mu);
            rec(gr, p, i + 1, left - (mu - lo), cur, out);
            cur.pop();
        }
    }
    rec(gr, p, 0, m, &mut cur, &mut out);
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == cur.len() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, if i == k { sign } else { -sign }, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, 1, &mut out);
    out
}

/// Polynomial in the elementary symmetric functions `e1, e2` of two roots,
/// keyed by `(i, j)` for `e1^i e2^j`.
pub type E12Poly = BTreeMap<(u32, u32), BigInt>;

/// Writes a symmetric polynomial in two variables, keyed by `(a-exp, b-exp)`,
/// in terms of `e1 = a + b` and `e2 = a b`.
pub fn symmetric_to_elementary(poly: &BTreeMap<(u32, u32), BigInt>) -> Result<E12Poly> {
    let mut rest: BTreeMap<(u32, u32), BigInt> =
        poly.iter().filter(|(_, c)| !c.is_zero()).map(|(k, v)| (*k, v.clone())).collect();
    let mut out = E12Poly::new();
    // leading monomial a^i b^j with i >= j comes from e1^(i-j) e2^j
    while let Some((&(i, j), c)) = rest.iter().next_back() {
        if i < j {
            return Err(Error::Precondition("polynomial is not symmetric".into()));
        }
        let c = c.clone();
        *out.entry((i - j, j)).or_insert_with(BigInt::zero) += &c;
        for (e, binom) in binomial_row(i - j).into_iter().enumerate() {
            let key = (i - e as u32, j + e as u32);
            let v = rest.entry(key).or_insert_with(BigInt::zero);
            *v -= &c * binom;
            if v.is_zero() {
                rest.remove(&key);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = row[k as usize].clone() * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

/// `prod_{i=0}^{d} ((d - i) a + i b)`, the top Chern class of `Sym^d` of a rank-2
/// bundle with roots `a, b`, as a polynomial in `e1, e2`.
pub fn sym_top_chern_poly(d: u32) -> E12Poly {
    let mut poly: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    poly.insert((0, 0), BigInt::one());
    for i in 0..=d {
        let mut next = BTreeMap::new();
        for ((x, y), c) in &poly {
            for (key, f) in [((x + 1, *y), d - i), ((*x, y + 1), i)] {
                if f > 0 {
                    *next.entry(key).or_insert_with(BigInt::zero) += c * BigInt::from(f);
                }
            }
        }
        poly = next;
    }
    symmetric_to_elementary(&poly).expect("product over a symmetric set of roots")
}

/// Substitute `e1 -> sigma_1`, `e2 -> sigma_{1,1}`: the Chern roots of the dual
/// tautological subbundle on `Gr(2, n)`.
pub fn e12_to_schubert(gr: Grassmannian, poly: &E12Poly) -> Result<SchubertClass> {
    if gr.k != 2 {
        return Err(Error::Precondition("e1, e2 substitution needs k = 2".into()));
    }
    let mut out = SchubertClass::zero(gr);
    for ((i, j), c) in poly {
        let mut term = SchubertClass::one(gr);
        for _ in 0..*i {
            term = term.pieri(1);
        }
        for _ in 0..*j {
            term = term.dual_pieri(2);
        }
        out = out.add(&term.scale(c))?;
    }
    Ok(out)
}

/// `c_7(Sym^6 S^dual)` on `Gr(2, 6)`.
pub fn sym6_top_chern() -> SchubertClass {
    let gr = Grassmannian::new(2, 6).expect("valid");
    e12_to_schubert(gr, &sym_top_chern_poly(6)).expect("k = 2")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g26() -> Grassmannian {
        Grassmannian::new(2, 6).unwrap()
    }

    #[test]
    fn box_constraint() {
        let g = g26();
        assert!(Partition::new(g, &[4, 3]).is_ok());
        assert!(matches!(Partition::new(g, &[5]), Err(Error::PartitionOutOfBox(..))));
        assert!(Partition::new(g, &[1, 1, 1]).is_err());
        assert!(Partition::new(g, &[1, 2]).is_err());
        assert_eq!(g.partitions().len(), 15);
    }

    #[test]
    fn basic_pieri() {
        let g = g26();
        let s1 = SchubertClass::special(g, 1);
        let sq = s1.mul(&s1).unwrap();
        let expected = SchubertClass::sigma(g, &[2])
            .unwrap()
            .add(&SchubertClass::sigma(g, &[1, 1]).unwrap())
            .unwrap();
        assert_eq!(sq, expected);
        let s43 = SchubertClass::sigma(g, &[4, 3]).unwrap();
        assert_eq!(s43.pieri(1), SchubertClass::sigma(g, &[4, 4]).unwrap());
    }

    #[test]
    fn dual_pieri_matches_giambelli() {
        let g = Grassmannian::new(3, 7).unwrap();
        let x = SchubertClass::sigma(g, &[2, 1]).unwrap();
        let via_dual = x.dual_pieri(2);
        let via_mul = x.mul(&SchubertClass::special_dual(g, 2)).unwrap();
        assert_eq!(via_dual, via_mul);
    }

    #[test]
    fn association_orders() {
        let g = g26();
        let s11 = SchubertClass::sigma(g, &[1, 1]).unwrap();
        let s1 = SchubertClass::special(g, 1);
        let left = s11.mul(&s11).unwrap().mul(&s11).unwrap().mul(&s1).unwrap();
        let right = s1.mul(&s11.mul(&s11.mul(&s11).unwrap()).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn degree_of_plucker_embedding() {
        let g = g26();
        assert_eq!(SchubertClass::special(g, 1).pow(8).integrate().unwrap(), BigInt::from(14));
        assert_eq!(SchubertClass::sigma(g, &[4, 4]).unwrap().integrate().unwrap(), BigInt::one());
        assert!(SchubertClass::special(g, 1).integrate().is_err());
    }

    #[test]
    fn elementary_expansion() {
        let p = sym_top_chern_poly(6);
        let expected: E12Poly = [((5, 1), 4320), ((3, 2), 15984), ((1, 3), 6912)]
            .into_iter()
            .map(|(k, v)| (k, BigInt::from(v)))
            .collect();
        assert_eq!(p, expected);
    }

    #[test]
    fn sym6_value() {
        let c = sym6_top_chern();
        assert_eq!(c.terms().count(), 1);
        // 432 * (10 * 5 + 37 * 2 + 16 * 1)
        assert_eq!(c.coeff(&[4, 3]), BigInt::from(60480));
        assert_eq!(c.to_string(), "60480·σ43");
        assert_eq!(c.pieri(1).integrate().unwrap(), BigInt::from(60480));
    }

    #[test]
    fn lines_on_hypersurfaces() {
        let g = Grassmannian::new(2, 4).unwrap();
        let cubic_surface = e12_to_schubert(g, &sym_top_chern_poly(3)).unwrap();
        assert_eq!(cubic_surface.integrate().unwrap(), BigInt::from(27));
        let g = Grassmannian::new(2, 5).unwrap();
        let quintic = e12_to_schubert(g, &sym_top_chern_poly(5)).unwrap();
        assert_eq!(quintic.integrate().unwrap(), BigInt::from(2875));
        let cubic3 = e12_to_schubert(g, &sym_top_chern_poly(3)).unwrap();
        assert_eq!(cubic3.pieri(1).pieri(1).integrate().unwrap(), BigInt::from(45));
    }

    #[test]
    fn context_mismatch() {
        let a = SchubertClass::one(g26());
        let b = SchubertClass::one(Grassmannian::new(2, 5).unwrap());
        assert_eq!(a.mul(&b), Err(Error::ContextMismatch));
    }
}
