//! Values cross-checked against computations that share no code with the
//! library routine under test.

use epw_core::arith::{interpolate_univariate, Field, Matrix, Scalar, DEFAULT_PRIME};
use epw_core::bbf::chi_of_class;
use epw_core::chow::{hrr_chi, VarietyModel};
use epw_core::quadrics::harris_tu_degree;
use epw_core::schubert::{sym6_top_chern, sym_top_chern_poly, Grassmannian, SchubertClass};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Atiyah-Bott sum over the 15 torus-fixed planes of `Gr(2, 6)`.
/// `integrand(i, j)` is the equivariant class at the plane spanned by `e_i, e_j`,
/// with tautological subbundle weights `t_i, t_j`.
fn bott(t: &[i64; 6], integrand: impl Fn(usize, usize) -> Q) -> Q {
    let mut acc = Q::zero();
    for i in 0..6 {
        for j in i + 1..6 {
            let mut euler = Q::one();
            for k in (0..6).filter(|&k| k != i && k != j) {
                for l in [i, j] {
                    euler *= q(t[k] - t[l]);
                }
            }
            acc += integrand(i, j) / euler;
        }
    }
    acc
}

fn distinct_weights(rng: &mut ChaCha8Rng) -> [i64; 6] {
    loop {
        let t: [i64; 6] = std::array::from_fn(|_| rng.gen_range(-40..=40));
        let mut s = t.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() == 6 {
            return t;
        }
    }
}

fn sym6_euler(t: &[i64; 6], i: usize, j: usize) -> Q {
    (0..=6).fold(Q::one(), |acc, a| acc * q(-(a * t[i] + (6 - a) * t[j])))
}

#[test]
fn bott_localization_degree_of_grassmannian() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let t = distinct_weights(&mut rng);
        let v = bott(&t, |i, j| {
            let s1 = q(-(t[i] + t[j]));
            (0..8).fold(Q::one(), |acc, _| acc * &s1)
        });
        assert_eq!(v, q(14));
    }
}

#[test]
fn bott_localization_lines_on_sextic_fourfolds() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let schubert = sym6_top_chern();
    let calculus = schubert.pieri(1).integrate().unwrap();
    for _ in 0..5 {
        let t = distinct_weights(&mut rng);
        let v = bott(&t, |i, j| sym6_euler(&t, i, j) * q(-(t[i] + t[j])));
        assert_eq!(v, Q::from_integer(calculus.clone()));
    }
    assert_eq!(calculus, BigInt::from(60480));
    assert_eq!(schubert.coeff(&[4, 3]), BigInt::from(60480));
}

#[test]
fn bott_localization_classical_line_counts() {
    // lines on a cubic surface and a quintic threefold, via Sym^d S^dual on Gr(2, d + 1)
    fn count(d: i64, t: &[i64]) -> Q {
        let n = t.len();
        let mut acc = Q::zero();
        for i in 0..n {
            for j in i + 1..n {
                let mut euler = Q::one();
                for k in (0..n).filter(|&k| k != i && k != j) {
                    euler *= q(t[k] - t[i]) * q(t[k] - t[j]);
                }
                let top = (0..=d).fold(Q::one(), |acc, a| acc * q(-(a * t[i] + (d - a) * t[j])));
                acc += top / euler;
            }
        }
        acc
    }
    assert_eq!(count(3, &[1, 4, 9, 16]), q(27));
    assert_eq!(count(5, &[2, 3, 7, 11, 19]), q(2875));
}

#[test]
fn root_product_matches_elementary_expansion() {
    let poly = sym_top_chern_poly(6);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let a = BigInt::from(rng.gen_range(-500i64..=500));
        let b = BigInt::from(rng.gen_range(-500i64..=500));
        let direct = (0..=6i64).fold(BigInt::one(), |acc, i| acc * (BigInt::from(6 - i) * &a + BigInt::from(i) * &b));
        let (e1, e2) = (&a + &b, &a * &b);
        let via = poly.iter().fold(BigInt::zero(), |acc, ((i, j), c)| {
            acc + c * num_traits::pow(e1.clone(), *i as usize) * num_traits::pow(e2.clone(), *j as usize)
        });
        assert_eq!(direct, via);
    }
}

#[test]
fn schubert_integration_matches_localization() {
    // sigma_1^a sigma_2^b with a + 2b = 8, localized with sigma_2 = c2(Q) = h_2(-t_i, -t_j)
    let g = Grassmannian::new(2, 6).unwrap();
    let t = [3, -7, 11, 2, 19, -5];
    for b in 0..=4u32 {
        let a = 8 - 2 * b;
        let calc = SchubertClass::special(g, 1).pow(a).mul(&SchubertClass::special(g, 2).pow(b)).unwrap();
        let loc = bott(&t, |i, j| {
            let (x, y) = (q(-t[i]), q(-t[j]));
            let s1 = &x + &y;
            let s2 = &x * &x + &x * &y + &y * &y;
            num_traits::pow(s1, a as usize) * num_traits::pow(s2, b as usize)
        });
        assert_eq!(Q::from_integer(calc.integrate().unwrap()), loc, "a={a} b={b}");
    }
}

/// Dimension of the degree `d` part of the coordinate ring of the rank one
/// symmetric 3x3 matrices, by evaluating monomials at random points.
fn veronese_hilbert(d: u32, rng: &mut ChaCha8Rng) -> usize {
    let f = Field::Prime(DEFAULT_PRIME);
    let mut monos: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..d {
        monos = monos
            .into_iter()
            .flat_map(|m| {
                let start = m.last().copied().unwrap_or(0);
                (start..6).map(move |k| {
                    let mut n = m.clone();
                    n.push(k);
                    n
                })
            })
            .collect();
    }
    let rows: Vec<Vec<Scalar>> = (0..monos.len() + 10)
        .map(|_| {
            let x = f.random_vector(3, rng);
            let coords: Vec<Scalar> = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
                .iter()
                .map(|&(i, j)| &x[i] * &x[j])
                .collect();
            monos
                .iter()
                .map(|m| m.iter().fold(f.one(), |acc, &k| &acc * &coords[k as usize]))
                .collect()
        })
        .collect();
    Matrix::from_rows(f, monos.len(), rows).unwrap().rank()
}

#[test]
fn harris_tu_rank_one_from_hilbert_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let h: Vec<usize> = (1..=3).map(|d| veronese_hilbert(d, &mut rng)).collect();
    assert_eq!(h, vec![6, 15, 28]);
    // quadratic Hilbert polynomial: the degree is its second difference
    let deg = h[2] + h[0] - 2 * h[1];
    assert_eq!(harris_tu_degree(3, 1).unwrap(), deg as u64);
}

#[test]
fn harris_tu_corank_one_is_determinant_degree() {
    let f = Field::Prime(DEFAULT_PRIME);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 2..=6usize {
        let a = random_symmetric_n(f, n, &mut rng);
        let b = random_symmetric_n(f, n, &mut rng);
        let samples: Vec<(Scalar, Scalar)> = (0..=n + 2)
            .map(|k| {
                let t = f.from_i64(k as i64);
                let m = a.add(&b.scale(&t)).unwrap();
                (t, m.det().unwrap())
            })
            .collect();
        let p = interpolate_univariate(&samples, n + 2).unwrap();
        assert_eq!(p.degree(), Some(n));
        assert_eq!(harris_tu_degree(n as u64, n as u64 - 1).unwrap(), n as u64);
    }
}

fn random_symmetric_n(f: Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in i..n {
            let x = f.random(rng);
            m.set(i, j, x.clone());
            m.set(j, i, x);
        }
    }
    m
}

#[test]
fn harris_tu_corank_two_closed_form() {
    // corank two symmetric loci have degree binom(n + 1, 3)
    for n in 3..=9u64 {
        assert_eq!(harris_tu_degree(n, n - 2).unwrap(), (n + 1) * n * (n - 1) / 6);
    }
    assert_eq!(harris_tu_degree(4, 2).unwrap(), 10);
}

#[test]
fn riemann_roch_agrees_with_lattice_formula() {
    // q(n h) = 2 n^2 on the lattice side
    let m = VarietyModel::double_epw();
    for n in -4..=6i64 {
        assert_eq!(hrr_chi(&m, &m.line(n)).unwrap(), chi_of_class(2 * n * n).unwrap(), "n = {n}");
    }
}

#[test]
fn euler_number_of_hilbert_square() {
    // e(S^[2]) for a K3 surface S with e(S) = 24
    let e = 24i64;
    let m = VarietyModel::double_epw();
    let c4 = m.degree(&m.class("c4")).unwrap();
    assert_eq!(c4, q((e * e + 3 * e) / 2));
}
