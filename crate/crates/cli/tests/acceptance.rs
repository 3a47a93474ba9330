//! The acceptance battery. Prints one line per criterion and exits nonzero
//! if any criterion fails.

use std::panic;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use epw_core::arith::{Field, DEFAULT_PRIME};
use epw_core::bbf::{chi_of_class, odd_section_count, BBLattice};
use epw_core::chow::{derive_section8, hirzebruch_chi, hrr_chi, thom_porteous_table, EmbeddingModel, VarietyModel};
use epw_core::quadrics::harris_tu_degree;
use epw_core::schubert::{sym6_top_chern, Grassmannian, SchubertClass};
use epw_verify::{run_selected, CheckResult, Options, Status, Suite};
use num_bigint::BigInt;
use num_rational::BigRational;

fn opts() -> Options {
    Options::default()
}

/// Runs checks through the same path as the CLI and demands that all pass.
fn checks(suite: Suite, ids: &[&str]) -> Result<String, String> {
    let report = run_selected(suite, ids, &opts()).map_err(|e| e.to_string())?;
    if report.checks.len() != ids.len() {
        return Err(format!("expected {} checks, found {}", ids.len(), report.checks.len()));
    }
    let bad: Vec<&CheckResult> = report.checks.iter().filter(|c| c.status != Status::Pass).collect();
    if bad.is_empty() {
        Ok(report.checks.iter().map(|c| c.got.clone()).collect::<Vec<_>>().join("; "))
    } else {
        Err(bad.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("; "))
    }
}

fn ensure(ok: bool, what: impl Into<String>) -> Result<String, String> {
    let what = what.into();
    if ok {
        Ok(what)
    } else {
        Err(what)
    }
}

fn c01() -> Result<String, String> {
    checks(Suite::Exterior, &["fiber_lagrangian_q", "fiber_lagrangian_fp"])
}

fn c02() -> Result<String, String> {
    checks(Suite::Epw, &["sextic_degree"])
}

fn c03() -> Result<String, String> {
    checks(Suite::Epw, &["triple_quadric_a_plus"])
}

fn c04() -> Result<String, String> {
    checks(Suite::Epw, &["a_plus_a_minus_split"])
}

fn c05() -> Result<String, String> {
    checks(Suite::Epw, &["smoothness_criterion"])
}

fn c06() -> Result<String, String> {
    checks(Suite::Epw, &["tangent_hyperplane"])
}

fn c07() -> Result<String, String> {
    checks(Suite::Incidence, &["omega_tangent_dim", "injective_differential"])
}

fn c08() -> Result<String, String> {
    checks(Suite::Incidence, &["tangency_scenario"])
}

fn c09() -> Result<String, String> {
    let got: Vec<u64> = [(4, 2), (4, 3), (3, 1)]
        .iter()
        .map(|&(n, r)| harris_tu_degree(n, r).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    ensure(got == [10, 4, 4], format!("{got:?}"))
}

fn c10() -> Result<String, String> {
    checks(Suite::Quadrics, &["bitangent_pairs"])
}

fn c11() -> Result<String, String> {
    let m = VarietyModel::double_epw();
    let table: Vec<BigRational> = ["h^4", "h^2*c2", "c2^2", "c4", "h^2*Z", "c2*Z", "Z^2"]
        .iter()
        .map(|s| {
            let x = epw_core::chow::FormalClass::parse(m.ring(), s).map_err(|e| e.to_string())?;
            m.degree(&x).map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    let want: Vec<BigRational> = [12, 60, 828, 324, 40, 24, 192].iter().map(|&n| BigRational::from_integer(n.into())).collect();
    let tp = thom_porteous_table(&m).map_err(|e| e.to_string())?;
    let tp_ok = tp.len() == 3 && tp.iter().all(|(_, l, r)| l == r);
    let chi = hirzebruch_chi(&m).map_err(|e| e.to_string())?;
    ensure(
        table == want && tp_ok && chi == BigRational::from_integer(3.into()),
        format!("table {} / Thom-Porteous {} / chi {chi}", if table == want { "ok" } else { "differs" }, tp.len()),
    )
}

fn c12() -> Result<String, String> {
    let start = Instant::now();
    let s = derive_section8(&EmbeddingModel::lagrangian_surface(VarietyModel::double_epw())).map_err(|e| e.to_string())?;
    ensure(
        s.c4_degree == BigRational::from_integer(324.into()) && start.elapsed() < Duration::from_secs(1),
        format!("c4 = {}", s.c4),
    )?;
    checks(
        Suite::Chow,
        &[
            "c_q_whitney",
            "ch_push_det",
            "ch_push_tangent",
            "c_push_det",
            "c_push_tangent",
            "c2_q_extension",
            "c3_q_extension",
            "c2h_equals_5h3",
            "c4_relation",
            "c4_degree",
        ],
    )
}

fn c13() -> Result<String, String> {
    let m = VarietyModel::double_epw();
    for n in -3..=5i64 {
        let got = hrr_chi(&m, &m.line(n)).map_err(|e| e.to_string())?;
        let n = BigRational::from_integer(n.into());
        let want = (&n * &n * &n * &n) / BigRational::from_integer(2.into())
            + BigRational::new(5.into(), 2.into()) * &n * &n
            + BigRational::from_integer(3.into());
        if got != want {
            return Err(format!("chi(O({n})) = {got}, expected {want}"));
        }
    }
    let chi3 = hrr_chi(&m, &m.line(3)).map_err(|e| e.to_string())?;
    let odd = odd_section_count();
    ensure(
        chi3 == BigRational::from_integer(66.into()) && odd == BigInt::from(10),
        format!("chi(O(3)) = {chi3}, odd sections {odd}"),
    )
}

fn c14() -> Result<String, String> {
    let g = Grassmannian::new(2, 6).map_err(|e| e.to_string())?;
    let deg = SchubertClass::special(g, 1).pow(8).integrate().map_err(|e| e.to_string())?;
    if deg != BigInt::from(14) {
        return Err(format!("deg Gr(2,6) = {deg}"));
    }
    checks(Suite::Schubert, &["sym6_root_product"])?;
    let got = sym6_top_chern();
    let want = SchubertClass::sigma(g, &[4, 3]).map_err(|e| e.to_string())?.scale(&BigInt::from(57888));
    ensure(got == want, format!("expected {want}, got {got}"))
}

fn c15() -> Result<String, String> {
    let lat = BBLattice::default();
    let h = BBLattice::polarization();
    let h4 = lat.quad_intersection([&h, &h, &h, &h]).map_err(|e| e.to_string())?;
    let chi = chi_of_class(-2).map_err(|e| e.to_string())?;
    ensure(h4 == 12 && chi == BigRational::from_integer(1.into()), format!("h^4 = {h4}, chi = {chi}"))?;
    checks(Suite::Bbf, &["deg6_relation", "deg4_independence", "lattice_invariants"])
}

fn c16() -> Result<String, String> {
    let exe = env!("CARGO_BIN_EXE_epw-verify");
    let once = || {
        Command::new(exe)
            .args(["run", "all", "--seed", "7", "--json", "-"])
            .output()
            .map_err(|e| e.to_string())
    };
    let start = Instant::now();
    let (a, b) = (once()?, once()?);
    let elapsed = start.elapsed();
    let (code_a, code_b) = (a.status.code(), b.status.code());
    ensure(
        a.stdout == b.stdout && !a.stdout.is_empty() && code_a == code_b && elapsed < Duration::from_secs(180),
        format!("{} bytes, identical: {}, exit {code_a:?}, {:.1}s for two runs", a.stdout.len(), a.stdout == b.stdout, elapsed.as_secs_f64()),
    )
}

type Criterion = (&'static str, u64, fn() -> Result<String, String>);

const CRITERIA: [Criterion; 16] = [
    ("fiber Lagrangians over Q and F_p", 1, c01),
    ("sextic restricted to lines", 10, c02),
    ("triple quadric for A+", 10, c03),
    ("A+ and A- split the 3-forms", 1, c04),
    ("smoothness criterion", 30, c05),
    ("tangent hyperplane", 30, c06),
    ("tangent dimension and injective differential", 30, c07),
    ("tangency scenario", 60, c08),
    ("symmetric degeneracy degrees", 1, c09),
    ("bitangent pairs", 5, c10),
    ("degree table and Thom-Porteous", 1, c11),
    ("Chern classes of the double cover", 1, c12),
    ("Riemann-Roch and odd cubics", 1, c13),
    ("lines on sextic fourfolds", 1, c14),
    ("lattice and Fujiki relation", 1, c15),
    ("deterministic reports", 180, c16),
];

fn main() -> ExitCode {
    assert_eq!(opts().prime, DEFAULT_PRIME);
    assert_eq!(opts().field(), Field::Prime(DEFAULT_PRIME));
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, budget, f)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let res = panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let res = match res {
            Ok(s) if secs > *budget as f64 => Err(format!("{s} (took {secs:.2}s, budget {budget}s)")),
            r => r,
        };
        match res {
            Ok(s) => println!("criterion {:2} PASS {name} [{secs:.2}s]: {s}", i + 1),
            Err(s) => {
                failed += 1;
                println!("criterion {:2} FAIL {name} [{secs:.2}s]: {s}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
