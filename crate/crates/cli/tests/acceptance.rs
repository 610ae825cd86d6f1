//! Acceptance gate: one test per criterion, in criterion order. Each test
//! prints a single `criterion NN <name>: PASS/FAIL` line before asserting,
//! so the suite reads as a checklist under `--nocapture` and every failure
//! carries its evidence.
//!
//! Criteria 7 and 9 assert published statements that exact computation
//! contradicts (two decimal-slipped coefficient cells; a 3.9 growth-ratio
//! threshold that the true Catalan ratio 158/41 never reaches). They are
//! asserted as stated and fail; the failure messages carry the analysis.

use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use hexavoid_core::checks::{
    deletion_violations, epsilon_xbar_violations, oracle_five_sequences, oracle_stack,
    succession_violations, HEX6_FIRST_VALUES, TABLE_ALPHA, TABLE_BETA, TABLE_DELTA, TABLE_EPSILON,
    TABLE_GAMMA,
};
use hexavoid_core::dp::totals_through;
use hexavoid_core::oracle::TreeLevel;
use hexavoid_core::rec::{alpha_through, catalan, five_sequences, hex4_closed_form, SequenceTable};
use hexavoid_core::spectral::{
    eval_rounded, reference_model, solve_model, SpectralError, SpectralModel,
};
use hexavoid_core::Family;
use num_bigint::BigInt;

fn report(number: u32, name: &str, pass: bool, details: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    if details.is_empty() {
        println!("criterion {number:02} {name}: {verdict}");
    } else {
        println!("criterion {number:02} {name}: {verdict} ({details})");
    }
}

fn hex8_stack() -> &'static [TreeLevel] {
    static STACK: OnceLock<Vec<TreeLevel>> = OnceLock::new();
    STACK.get_or_init(|| oracle_stack(Family::Hex8, 12, 1).expect("default budget reaches 12"))
}

fn hex6_stack() -> &'static [TreeLevel] {
    static STACK: OnceLock<Vec<TreeLevel>> = OnceLock::new();
    STACK.get_or_init(|| oracle_stack(Family::Hex6, 10, 1).expect("default budget reaches 10"))
}

fn hex4_stack() -> &'static [TreeLevel] {
    static STACK: OnceLock<Vec<TreeLevel>> = OnceLock::new();
    STACK.get_or_init(|| oracle_stack(Family::Hex4, 10, 1).expect("default budget reaches 10"))
}

/// Cell-exact comparison of the five computed rows against the published
/// table, restricted to columns 1..=upto.
fn table_problems(table: &SequenceTable, upto: usize) -> Vec<String> {
    let published: [&[i64; 12]; 5] = [
        &TABLE_ALPHA,
        &TABLE_BETA,
        &TABLE_GAMMA,
        &TABLE_DELTA,
        &TABLE_EPSILON,
    ];
    let mut problems = Vec::new();
    for ((name, got), want) in table.rows().iter().zip(published) {
        for n in 1..=upto {
            if got[n - 1] != BigInt::from(want[n - 1]) {
                problems.push(format!(
                    "{name}[{n}] = {} != published {}",
                    got[n - 1],
                    want[n - 1]
                ));
            }
        }
    }
    problems
}

fn cell(re: f64, im: f64, real_slot: bool) -> String {
    if real_slot {
        format!("{re:.5}")
    } else {
        format!("{re:.5}{im:+.5}i")
    }
}

/// Elementwise five-digit comparison of a solved spectrum against pinned
/// reference cells, both real and imaginary parts within `tol`.
fn spectrum_problems(model: &SpectralModel, family: Family, tol: f64) -> Vec<String> {
    let reference = reference_model(family).expect("reference digits exist");
    let mut problems = Vec::new();
    for (i, (got, want)) in model.roots.iter().zip(&reference.roots).enumerate() {
        if (got.re - want.re).abs() > tol || (got.im - want.im).abs() > tol {
            let real_slot = want.im == 0.0;
            problems.push(format!(
                "R{} = {} vs published {}",
                i + 1,
                cell(got.re, got.im, real_slot),
                cell(want.re, want.im, real_slot)
            ));
        }
    }
    for (i, (got, want)) in model.coeffs.iter().zip(&reference.coeffs).enumerate() {
        if (got.re - want.re).abs() > tol || (got.im - want.im).abs() > tol {
            let real_slot = want.im == 0.0;
            problems.push(format!(
                "c{} = {} vs published {}",
                i + 1,
                cell(got.re, got.im, real_slot),
                cell(want.re, want.im, real_slot)
            ));
        }
    }
    problems
}

fn rounded_problems(
    model: &SpectralModel,
    alphas: &[BigInt],
    from: usize,
    to: usize,
) -> Vec<String> {
    let mut problems = Vec::new();
    for n in from..=to {
        match eval_rounded(model, n) {
            Ok(v) if v == alphas[n - 1] => {}
            Ok(v) => problems.push(format!("rounded({n}) = {v} != {}", alphas[n - 1])),
            Err(e) => problems.push(format!("rounded({n}) refused: {e}")),
        }
    }
    problems
}

#[test]
fn a01_table_reproduction() {
    let mut problems = table_problems(&five_sequences(12), 12);
    problems.extend(
        table_problems(&oracle_five_sequences(&hex8_stack()[..11]), 10)
            .into_iter()
            .map(|p| format!("tree {p}")),
    );
    let started = Instant::now();
    let fresh = oracle_stack(Family::Hex8, 10, 1).expect("default budget reaches 10");
    let elapsed = started.elapsed().as_secs_f64();
    if elapsed >= 60.0 {
        problems.push(format!(
            "single-threaded tree to level 10 took {elapsed:.1}s"
        ));
    }
    assert_eq!(fresh.len(), 10);
    let pass = problems.is_empty();
    report(
        1,
        "table-reproduction",
        pass,
        &format!(
            "recurrence 1..=12 and tree labels 1..=10 cell-exact; fresh tree run {elapsed:.2}s"
        ),
    );
    assert!(pass, "{}", problems.join("; "));
}

#[test]
fn a02_four_way_agreement_hex8() {
    let alphas = alpha_through(40, Family::Hex8);
    let dp = totals_through(40, Family::Hex8);
    let model = solve_model(Family::Hex8).expect("hex8 spectrum solves");
    let mut problems = Vec::new();
    for (idx, level) in hex8_stack().iter().enumerate() {
        if BigInt::from(level.members.len() as u64) != alphas[idx] {
            problems.push(format!("tree alpha_{} = {}", idx + 1, level.members.len()));
        }
    }
    for n in 1..=40usize {
        if BigInt::from(dp[n - 1].clone()) != alphas[n - 1] {
            problems.push(format!("dp alpha_{n} = {}", dp[n - 1]));
        }
    }
    problems.extend(rounded_problems(&model, &alphas, 1, 40));
    let pass = problems.is_empty();
    report(
        2,
        "four-way-agreement",
        pass,
        "tree 1..=12, dp/recurrence/rounded 1..=40 all equal",
    );
    assert!(pass, "{}", problems.join("; "));
}

#[test]
fn a03_succession_conformance() {
    let (nodes, violations) = succession_violations(hex8_stack(), 9);
    let pass = nodes == 6857 && violations.is_empty();
    report(
        3,
        "succession-conformance",
        pass,
        &format!("{nodes} nodes at levels 1..=9, zero violations"),
    );
    assert_eq!(nodes, 6857, "level sums alpha_1..alpha_9 must total 6857");
    assert!(violations.is_empty(), "{}", violations.join("; "));
}

#[test]
fn a04_deletion_lemma() {
    let (classes, violations) = deletion_violations(&hex8_stack()[..10]);
    let pass = violations.is_empty();
    report(
        4,
        "deletion-lemma",
        pass,
        &format!("{classes} realized label classes at n <= 10 collapse exactly and injectively"),
    );
    assert!(pass, "{}", violations.join("; "));
}

#[test]
fn a05_epsilon_well_defined() {
    let violations = epsilon_xbar_violations(hex8_stack(), 12);
    let pass = violations.is_empty();
    report(
        5,
        "epsilon-well-defined",
        pass,
        "x = 4 and x = 5 slices agree for all n <= 10",
    );
    assert!(pass, "{}", violations.join("; "));
}

#[test]
fn a06_hex8_spectral_accuracy() {
    let model = solve_model(Family::Hex8).expect("hex8 spectrum solves");
    let mut problems = spectrum_problems(&model, Family::Hex8, 1e-5);
    if model.residual_bound > 1e-12 {
        problems.push(format!("residual {:.3e} above 1e-12", model.residual_bound));
    }
    problems.extend(rounded_problems(
        &model,
        &alpha_through(40, Family::Hex8),
        1,
        40,
    ));
    let pass = problems.is_empty();
    report(
        6,
        "hex8-spectral-accuracy",
        pass,
        &format!(
            "5 roots and 5 coefficients within 1e-5, residual {:.2e}, rounded form exact 1..=40",
            model.residual_bound
        ),
    );
    assert!(pass, "{}", problems.join("; "));
}

#[test]
fn a07_hex6_family() {
    let mut problems = Vec::new();
    let alphas = alpha_through(40, Family::Hex6);
    for n in 1..=12usize {
        if alphas[n - 1] != BigInt::from(HEX6_FIRST_VALUES[n - 1]) {
            problems.push(format!("recurrence alpha_{n} = {}", alphas[n - 1]));
        }
    }
    for (idx, level) in hex6_stack().iter().enumerate() {
        if BigInt::from(level.members.len() as u64) != BigInt::from(HEX6_FIRST_VALUES[idx]) {
            problems.push(format!("tree alpha_{} = {}", idx + 1, level.members.len()));
        }
    }
    let model = solve_model(Family::Hex6).expect("hex6 spectrum solves");
    problems.extend(spectrum_problems(&model, Family::Hex6, 1e-5));
    problems.extend(rounded_problems(&model, &alphas, 1, 40));
    let pass = problems.is_empty();
    report(7, "hex6-family", pass, &problems.join("; "));
    assert!(
        pass,
        "the counts agree, but two published coefficient cells are decimal-shifted \
         (0.63205 and -0.19482 against solved 0.00632 and -0.01948; the solved values \
         satisfy the roots' own linear system exactly), and the two-root rounded form \
         is 0.46 and 0.27 away from the nearest integer at n = 1 and 2, outside its \
         0.25 trust radius, so exactness on 1..=40 cannot hold as stated: {}",
        problems.join("; ")
    );
}

#[test]
fn a08_hex4_family() {
    let mut problems = Vec::new();
    for (idx, level) in hex4_stack().iter().enumerate() {
        if BigInt::from(level.members.len() as u64) != hex4_closed_form(idx + 1) {
            problems.push(format!("tree alpha_{} = {}", idx + 1, level.members.len()));
        }
    }
    let alphas = alpha_through(60, Family::Hex4);
    for n in 1..=60usize {
        if alphas[n - 1] != hex4_closed_form(n) {
            problems.push(format!("recurrence alpha_{n} = {}", alphas[n - 1]));
        }
    }
    match solve_model(Family::Hex4) {
        Err(SpectralError::Degenerate { poly, .. }) if poly == "(x−1)³" => {}
        other => problems.push(format!(
            "expected the (x−1)³ degeneracy report, got {other:?}"
        )),
    }
    let pass = problems.is_empty();
    report(
        8,
        "hex4-family",
        pass,
        "tree 1..=10 equals (n-1)^2+1, recurrence matches to 60, triple root reported",
    );
    assert!(pass, "{}", problems.join("; "));
}

#[test]
fn a09_growth_ratio() {
    let alphas = alpha_through(40, Family::Hex8);
    let a40 = &alphas[39];
    let a39 = &alphas[38];
    // |a40/a39 - 3.43526| <= 1e-3, cleared of division.
    let scaled = a40 * 100000i64;
    let ratio_ok = scaled >= a39 * 343426i64 && scaled <= a39 * 343626i64;
    // The 321-only class grows by C_n/C_{n-1} = 2(2n-1)/(n+1); the claim
    // "exceeds 3.9 at n = 40" needs 10*C_40 > 39*C_39.
    let catalan_clause = catalan(40) * 10i64 > catalan(39) * 39i64;
    let pass = ratio_ok && catalan_clause;
    report(
        9,
        "growth-ratio",
        pass,
        &format!(
            "hex8 ratio within 1e-3 of 3.43526: {ratio_ok}; Catalan ratio at n = 40 \
             exceeds 3.9: {catalan_clause} (exact value 158/41, about 3.85366)"
        ),
    );
    assert!(ratio_ok, "hex8 growth ratio drifted from 3.43526");
    assert!(
        catalan_clause,
        "the Catalan growth ratio C_40/C_39 is exactly 2*79/41 = 158/41, about 3.85366, \
         which never exceeds the stated 3.9; the intended sanity comparison still holds, \
         since 3.85366 is well above the hex8 growth constant 3.43526"
    );
}

#[test]
fn a10_determinism_across_jobs() {
    let mut outputs = Vec::new();
    for jobs in ["1", "2", "8"] {
        let out = Command::new(env!("CARGO_BIN_EXE_hexavoid"))
            .args(["verify", "--level", "fast", "--jobs", jobs])
            .output()
            .expect("binary spawns");
        assert_eq!(
            out.status.code(),
            Some(0),
            "verify must pass at jobs={jobs}"
        );
        outputs.push(out.stdout);
    }
    let pass = outputs[0] == outputs[1] && outputs[0] == outputs[2];
    report(
        10,
        "determinism-across-jobs",
        pass,
        "verify --level fast stdout byte-identical at 1, 2 and 8 workers",
    );
    assert!(pass, "worker count leaked into the report bytes");
}
