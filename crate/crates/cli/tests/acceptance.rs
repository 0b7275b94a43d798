//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fail.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use genocchi_core::families::{
    classical_genocchi, classical_genocchi_by_binomial_sum, gould_hopper, gould_hopper_closed_form,
    hermite_genocchi, hermite_sequence, kernel_sequence, second_kind_euler, second_kind_genocchi,
    Kernel,
};
use genocchi_core::verify::{
    self, check_heat_equation, gould_hopper_table, thm1_floor_sum, thm3_convolution, ReportRecord,
};
use genocchi_core::{BivarPoly, Family, FamilySpec, Rational, Status, TermRecord, VerifierConfig};
use serde::Deserialize;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn genocchi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genocchi"))
        .args(args)
        .output()
        .expect("spawn genocchi")
}

fn stdout(args: &[&str]) -> Result<String, String> {
    let out = genocchi(args);
    if !out.status.success() {
        return Err(format!(
            "{args:?} exited with {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

/// Independent oracle: inverts a power series with plain rational
/// arithmetic, sharing nothing with the library's series type.
fn ordinary_inverse(den: &[Rational]) -> Vec<Rational> {
    let inv0 = den[0].inv().expect("unit");
    let mut out = vec![inv0.clone()];
    for n in 1..den.len() {
        let acc: Rational = (1..=n).map(|k| &den[k] * &out[n - k]).sum();
        out.push(-(acc * &inv0));
    }
    out
}

/// `n! [t^n] numer(t) / den(t)` where `numer` is `2 t^shift`.
fn oracle_numbers(
    den_egf: impl Fn(usize) -> Rational,
    shift: usize,
    n_max: usize,
) -> Vec<Rational> {
    let den: Vec<Rational> = (0..=n_max)
        .map(|k| den_egf(k) * Rational::factorial(k).inv().unwrap())
        .collect();
    let inv = ordinary_inverse(&den);
    (0..=n_max)
        .map(|n| {
            if n < shift {
                Rational::zero()
            } else {
                Rational::from(2) * &inv[n - shift] * Rational::factorial(n)
            }
        })
        .collect()
}

/// Derivatives at 0 of `e^t + 1`.
fn exp_plus_one(k: usize) -> Rational {
    Rational::from(if k == 0 { 2 } else { 1 })
}

/// Derivatives at 0 of `e^t + e^-t`.
fn two_cosh(k: usize) -> Rational {
    Rational::from(if k.is_multiple_of(2) { 2 } else { 0 })
}

fn constant_terms(polys: &[BivarPoly]) -> Vec<Rational> {
    polys.iter().map(|p| p.coeff(0, 0)).collect()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().copied().map(Rational::from).collect()
}

fn ac1_dual_routes() -> Outcome {
    let mut cases = 0;
    for n in 0..=32 {
        let gf = classical_genocchi(n, true).value;
        let sum = classical_genocchi_by_binomial_sum(n).value;
        ensure(gf == sum, || {
            format!("classical Genocchi differs at n = {n}")
        })?;
        cases += 1;
        for j in 2..=4 {
            let gf = gould_hopper(n, j).unwrap().value;
            let closed = gould_hopper_closed_form(n, j).unwrap().value;
            ensure(gf == closed, || {
                format!("Gould-Hopper differs at n = {n}, j = {j}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} polynomial pairs equal"))
}

fn ac2_full_suite() -> Outcome {
    let out = genocchi(&[
        "verify",
        "--identity",
        "all",
        "--n-max",
        "24",
        "--a-max",
        "3",
        "--b-max",
        "3",
        "--j-set",
        "2,3",
    ]);
    ensure(out.status.code() == Some(0), || {
        format!("exit code {:?}", out.status.code())
    })?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let records: Vec<ReportRecord> = text
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(records.len() == 13, || format!("{} reports", records.len()))?;
    let mut cases = 0;
    for r in &records {
        ensure(r.status == Status::Pass && r.failures.is_empty(), || {
            format!(
                "{} is {:?} with {} failures",
                r.identity,
                r.status,
                r.failures.len()
            )
        })?;
        cases += r.grid.len();
    }
    let quotient = records
        .iter()
        .find(|r| r.identity == "HG_EULER_QUOTIENT")
        .ok_or("no HG_EULER_QUOTIENT report")?;
    let strict = quotient
        .grid
        .iter()
        .filter(|g| g.a == 1 && g.n >= 1)
        .count();
    ensure(strict == 2 * 24, || {
        format!("{strict} strict order-1 quotient cases")
    })?;
    Ok(format!("13 reports PASS, {cases} exact cases"))
}

fn ac3_known_sequences() -> Outcome {
    let g: Vec<Rational> = (1..=8)
        .map(|n| classical_genocchi(n, false).value.coeff(0, 0))
        .collect();
    ensure(g == ints(&[1, -1, 0, 1, 0, -3, 0, 17]), || {
        format!("classical Genocchi {g:?}")
    })?;
    let skg: Vec<Rational> = (0..=5)
        .map(|n| second_kind_genocchi(n, 1, false).value.coeff(0, 0))
        .collect();
    ensure(skg == ints(&[0, 1, 0, -3, 0, 25]), || {
        format!("second-kind Genocchi {skg:?}")
    })?;
    let ske: Vec<Rational> = [0, 2, 4]
        .iter()
        .map(|&n| second_kind_euler(n, 1, false).value.coeff(0, 0))
        .collect();
    ensure(ske == ints(&[1, -1, 5]), || {
        format!("second-kind Euler {ske:?}")
    })?;

    const N: usize = 24;
    let pairs = [
        (
            "classical Genocchi",
            Kernel::ClassicalGenocchi,
            oracle_numbers(exp_plus_one, 1, N),
        ),
        (
            "classical Euler",
            Kernel::ClassicalEuler,
            oracle_numbers(exp_plus_one, 0, N),
        ),
        (
            "second-kind Genocchi",
            Kernel::SecondKindGenocchi,
            oracle_numbers(two_cosh, 1, N),
        ),
        (
            "second-kind Euler",
            Kernel::SecondKindEuler,
            oracle_numbers(two_cosh, 0, N),
        ),
    ];
    for (name, kernel, oracle) in pairs {
        let lib = constant_terms(&kernel_sequence(kernel, 1, N, false));
        ensure(lib == oracle, || {
            format!("{name} disagrees with the oracle")
        })?;
    }
    Ok(format!("frozen values and oracle agreement for n <= {N}"))
}

fn ac4_heat_equation() -> Outcome {
    let report = check_heat_equation(20, &[2, 3]);
    ensure(report.status() == Status::Pass, || {
        format!("{} failures", report.failures.len())
    })?;
    ensure(report.grid.len() == 2 * 21, || {
        format!("{} cases", report.grid.len())
    })?;
    for j in [2, 3] {
        let seq = hermite_sequence(None, 0, j, 20).unwrap();
        for (n, h) in seq.iter().enumerate() {
            let at_zero = h.substitute(&BivarPoly::x(), &BivarPoly::zero());
            ensure(at_zero == BivarPoly::x().pow(n as u32), || {
                format!("F(x, 0) != x^{n} for j = {j}")
            })?;
        }
    }
    let variant = report
        .observations
        .iter()
        .find(|o| o.label.contains("n = 2, j = 2"))
        .ok_or("no observation at (2, 2)")?;
    ensure(!variant.holds, || {
        "dF/dx variant unexpectedly holds at (2, 2)".into()
    })?;
    let h = gould_hopper(2, 2).unwrap().value;
    let (dx, dxx) = (
        h.partial(genocchi_core::Var::X, 1),
        h.partial(genocchi_core::Var::X, 2),
    );
    ensure(dx != dxx, || "dF/dx equals d^2F/dx^2 at n = 2".into())?;
    Ok(format!(
        "42 cases; dF/dx variant fails at (2, 2): {dx} != {dxx}"
    ))
}

fn ac5_triangle() -> Outcome {
    const N: usize = 24;
    let second = kernel_sequence(Kernel::SecondKindGenocchi, 1, N, true);
    let numbers = constant_terms(&kernel_sequence(Kernel::SecondKindGenocchi, 1, N, false));
    let hermite = gould_hopper_table(N);
    for n in 0..=N {
        let direct = hermite_genocchi(n, 2, 1).unwrap().value;
        let thm1 = thm1_floor_sum(n, &second);
        let thm3 = thm3_convolution(n, &numbers, &hermite);
        ensure(direct == thm1, || format!("floor sum differs at n = {n}"))?;
        ensure(direct == thm3, || format!("convolution differs at n = {n}"))?;
    }
    Ok(format!("three routes agree for n <= {N}"))
}

#[derive(Deserialize)]
struct Table {
    rows: Vec<Row>,
}

#[derive(Deserialize)]
struct Row {
    terms: Vec<TermRecord>,
}

fn strip_elapsed(report_lines: &str) -> String {
    report_lines
        .lines()
        .map(|l| match l.find(",\"elapsed_ms\":") {
            Some(i) => format!("{}}}", &l[..i]),
            None => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn strip_csv_elapsed(csv: &str) -> String {
    csv.lines()
        .map(|l| l.rsplit_once(',').map_or(l, |(head, _)| head).to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn ac6_determinism() -> Outcome {
    let tables: [&[&str]; 4] = [
        &[
            "table",
            "--family",
            "hermite-genocchi",
            "--j",
            "3",
            "--a",
            "2",
            "--n-max",
            "16",
        ],
        &[
            "table",
            "--family",
            "gould-hopper",
            "--j",
            "4",
            "--n-max",
            "16",
            "--format",
            "csv",
        ],
        &[
            "table",
            "--family",
            "second-kind-euler",
            "--numbers",
            "--n-max",
            "20",
        ],
        &[
            "table",
            "--family",
            "hermite-euler",
            "--j",
            "2",
            "--a",
            "3",
            "--n-max",
            "12",
            "--format",
            "csv",
        ],
    ];
    for args in tables {
        let (first, second) = (stdout(args)?, stdout(args)?);
        ensure(first == second, || format!("{args:?} differs between runs"))?;
    }
    let verify_args = ["verify", "--n-max", "10", "--a-max", "2", "--b-max", "2"];
    let (first, second) = (stdout(&verify_args)?, stdout(&verify_args)?);
    ensure(strip_elapsed(&first) == strip_elapsed(&second), || {
        "verify JSON differs".into()
    })?;
    let csv_args = [&verify_args[..], &["--format", "csv"]].concat();
    let (first, second) = (stdout(&csv_args)?, stdout(&csv_args)?);
    ensure(
        strip_csv_elapsed(&first) == strip_csv_elapsed(&second),
        || "verify CSV differs".into(),
    )?;

    let mut polys = 0;
    for family in Family::ALL {
        let spec = FamilySpec::new(
            family,
            family.uses_j().then_some(3),
            family.uses_order().then_some(2),
        )
        .map_err(|e| e.to_string())?;
        let mut args = vec!["table", "--family", family.name(), "--n-max", "14"];
        if family.uses_j() {
            args.extend(["--j", "3"]);
        }
        if family.uses_order() {
            args.extend(["--a", "2"]);
        }
        let table: Table = serde_json::from_str(&stdout(&args)?).map_err(|e| e.to_string())?;
        let expected = spec.sequence(14, true).map_err(|e| e.to_string())?;
        ensure(table.rows.len() == expected.len(), || {
            format!("{family}: row count")
        })?;
        for (n, (row, want)) in table.rows.into_iter().zip(expected).enumerate() {
            ensure(BivarPoly::from(row.terms) == want.value, || {
                format!("{family}: row {n} does not round-trip")
            })?;
            polys += 1;
        }
    }
    Ok(format!(
        "repeat runs identical; {polys} table rows round-trip"
    ))
}

fn ac7_scaling() -> Outcome {
    let config = VerifierConfig {
        n_max: 40,
        ..VerifierConfig::default()
    };
    let reports = verify::run_all(&config).map_err(|e| e.to_string())?;
    for r in &reports {
        ensure(r.status() == Status::Pass, || {
            format!("{} is {:?}", r.identity.name(), r.status())
        })?;
    }
    let oracle = oracle_numbers(exp_plus_one, 1, 40);
    let g40 = classical_genocchi(40, false).value.coeff(0, 0);
    ensure(g40 == oracle[40], || {
        "G_40 disagrees with the oracle".into()
    })?;
    Ok(format!(
        "{} reports PASS; G_40 = {g40} ({} digits)",
        reports.len(),
        g40.numer().to_string().trim_start_matches('-').len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            1,
            "dual-route equality, n <= 32",
            Duration::from_secs(10),
            ac1_dual_routes,
        ),
        (
            2,
            "full identity suite, n_max = 24",
            Duration::from_secs(60),
            ac2_full_suite,
        ),
        (
            3,
            "known-sequence cross-checks",
            Duration::from_secs(60),
            ac3_known_sequences,
        ),
        (
            4,
            "heat equation, n <= 20, j in {2,3}",
            Duration::from_secs(60),
            ac4_heat_equation,
        ),
        (
            5,
            "consistency triangle, n <= 24",
            Duration::from_secs(60),
            ac5_triangle,
        ),
        (
            6,
            "CLI determinism and round-trip",
            Duration::from_secs(120),
            ac6_determinism,
        ),
        (
            7,
            "scaling, n_max = 40",
            Duration::from_secs(300),
            ac7_scaling,
        ),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > budget => Err(format!("over budget of {budget:?}")),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!(
            "criterion {id} {tag} [{:.2}s] {name}: {detail}",
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        println!("acceptance: 7/7 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 7 criteria failed");
        ExitCode::FAILURE
    }
}
