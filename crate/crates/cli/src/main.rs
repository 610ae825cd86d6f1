//! Command-line surface over the enumeration library: single counts, the
//! five-sequence refinement table, the cross-method verification suite, and
//! spectral root reports.
//!
//! Exit codes: 0 on success, 1 when a reported check fails, 2 on usage
//! errors, 3 when a resource budget (tree nodes or floating-point trust
//! radius) is exhausted. All payloads go to stdout, diagnostics to stderr,
//! and output depends only on the flags, never on scheduling.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hexavoid_core::checks::{run_verify, CheckResult, VerifyLevel};
use hexavoid_core::dp::totals_through;
use hexavoid_core::oracle::{enumerate_levels, OracleConfig, DEFAULT_NODE_BUDGET};
use hexavoid_core::rec::{alpha_through, five_sequences, SequenceTable};
use hexavoid_core::spectral::{eval_rounded, reference_model, render_poly, solve_model};
use hexavoid_core::Family;
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "hexavoid",
    version,
    about = "Counts 321-hexagon-avoiding permutations and their shorter analogues \
             by four independent methods"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the members of one length by a chosen method
    Count(CountArgs),
    /// Print the five refined sequences (alpha..epsilon) for lengths 1..=n
    Table(TableArgs),
    /// Cross-check all methods against each other and the published values
    Verify(VerifyArgs),
    /// Report characteristic roots and closed-form coefficients
    Roots(RootsArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// 321 together with the four length-8 hexagon witnesses
    Hex8,
    /// 321 together with the four length-6 analogues
    Hex6,
    /// 321 together with the four length-4 analogues
    Hex4,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Family {
        match arg {
            FamilyArg::Hex8 => Family::Hex8,
            FamilyArg::Hex6 => Family::Hex6,
            FamilyArg::Hex4 => Family::Hex4,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Expand the pruned generating tree and count one level
    Oracle,
    /// Push the label distribution forward through the succession rule
    Dp,
    /// Unroll the constant-coefficient linear recurrence
    Recurrence,
    /// Round the dominant-root spectral sum to the nearest integer
    Closedform,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Oracle => "oracle",
            MethodArg::Dp => "dp",
            MethodArg::Recurrence => "recurrence",
            MethodArg::Closedform => "closedform",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    /// Tree checks to level 10
    Fast,
    /// Tree checks to level 12
    Full,
}

#[derive(Args)]
struct CountArgs {
    /// Pattern family
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Permutation length to count
    #[arg(long)]
    n: usize,
    /// Counting method
    #[arg(long, value_enum, default_value_t = MethodArg::Dp, conflicts_with = "all_methods")]
    method: MethodArg,
    /// Run every feasible method and check that they agree
    #[arg(long)]
    all_methods: bool,
    /// Output format (csv is reserved for the table payload)
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Node budget for the tree method
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget_nodes: u64,
    /// Worker threads for the tree method; never affects output
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    jobs: u64,
}

#[derive(Args)]
struct TableArgs {
    /// Largest column; the table spans lengths 1..=n
    #[arg(long = "n", visible_alias = "n-max", default_value_t = 12)]
    n: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite depth
    #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
    level: LevelArg,
    /// Worker threads for tree enumeration; never affects output
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    jobs: u64,
    /// Output format (text or json)
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct RootsArgs {
    /// Pattern family (hex4 has a degenerate spectrum and refuses)
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Output format (text or json)
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

/// A terminal failure carrying its process exit code: 2 for usage errors,
/// 3 for exhausted budgets (tree nodes or floating-point trust radius).
struct Failure {
    code: i32,
    message: String,
}

fn usage_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn budget_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
    }
}

fn csv_not_applicable() -> Failure {
    usage_error("csv output is defined for the table payload; use text or json here")
}

/// Dying quietly on a closed pipe (`hexavoid table | head`) beats the
/// default panic-on-EPIPE behaviour of buffered stdout.
#[cfg(unix)]
fn restore_sigpipe_default() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn restore_sigpipe_default() {}

fn main() {
    restore_sigpipe_default();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Roots(args) => cmd_roots(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn print_json(value: Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("reports serialize")
    );
}

fn checks_json(results: &[CheckResult]) -> Value {
    Value::Array(
        results
            .iter()
            .map(|r| json!({ "name": r.name, "pass": r.pass, "details": r.details }))
            .collect(),
    )
}

fn oracle_count(
    family: Family,
    n: usize,
    budget_nodes: u64,
    jobs: usize,
) -> Result<BigInt, Failure> {
    let config = OracleConfig {
        budget_nodes,
        jobs,
        ..OracleConfig::default()
    };
    let levels = enumerate_levels(n, family, &config).map_err(|e| budget_error(e.to_string()))?;
    Ok(BigInt::from(levels[n - 1].members.len() as u64))
}

fn dp_count(family: Family, n: usize) -> BigInt {
    BigInt::from(totals_through(n, family).pop().expect("n >= 1"))
}

fn recurrence_count(family: Family, n: usize) -> BigInt {
    alpha_through(n, family).pop().expect("n >= 1")
}

fn closed_count(family: Family, n: usize) -> Result<BigInt, Failure> {
    if n > 40 {
        return Err(usage_error(format!(
            "the rounded closed form is pinned against the recurrence only for n <= 40 \
             (asked for n = {n}); use dp or recurrence beyond that"
        )));
    }
    let model = solve_model(family).map_err(|e| usage_error(e.to_string()))?;
    eval_rounded(&model, n).map_err(|e| budget_error(e.to_string()))
}

struct MethodOutcome {
    method: &'static str,
    count: Option<BigInt>,
    skip_note: Option<String>,
}

fn ran(method: &'static str, count: BigInt) -> MethodOutcome {
    MethodOutcome {
        method,
        count: Some(count),
        skip_note: None,
    }
}

fn skipped(method: &'static str, note: String) -> MethodOutcome {
    MethodOutcome {
        method,
        count: None,
        skip_note: Some(note),
    }
}

fn cmd_count(args: CountArgs) -> Result<i32, Failure> {
    if args.format == FormatArg::Csv {
        return Err(csv_not_applicable());
    }
    if args.n == 0 {
        return Err(usage_error("--n must be at least 1"));
    }
    let family: Family = args.family.into();
    if args.all_methods {
        return cmd_count_all_methods(&args, family);
    }
    let value = match args.method {
        MethodArg::Oracle => oracle_count(family, args.n, args.budget_nodes, args.jobs as usize)?,
        MethodArg::Dp => dp_count(family, args.n),
        MethodArg::Recurrence => recurrence_count(family, args.n),
        MethodArg::Closedform => closed_count(family, args.n)?,
    };
    match args.format {
        FormatArg::Text => println!("{value}"),
        FormatArg::Json => print_json(json!({
            "family": family.name(),
            "n": args.n,
            "method": args.method.name(),
            "count": value.to_string(),
            "checks": [],
        })),
        FormatArg::Csv => unreachable!("rejected above"),
    }
    Ok(0)
}

fn cmd_count_all_methods(args: &CountArgs, family: Family) -> Result<i32, Failure> {
    let outcomes = vec![
        match oracle_count(family, args.n, args.budget_nodes, args.jobs as usize) {
            Ok(v) => ran("oracle", v),
            Err(f) => skipped("oracle", f.message),
        },
        ran("dp", dp_count(family, args.n)),
        ran("recurrence", recurrence_count(family, args.n)),
        match closed_count(family, args.n) {
            Ok(v) => ran("closedform", v),
            Err(f) => skipped("closedform", f.message),
        },
    ];
    let produced: Vec<(&str, &BigInt)> = outcomes
        .iter()
        .filter_map(|o| o.count.as_ref().map(|c| (o.method, c)))
        .collect();
    let agree = produced.windows(2).all(|w| w[0].1 == w[1].1);
    let details = if agree {
        let names: Vec<&str> = produced.iter().map(|(m, _)| *m).collect();
        format!("{} all return {}", names.join(", "), produced[0].1)
    } else {
        let pairs: Vec<String> = produced.iter().map(|(m, c)| format!("{m} = {c}")).collect();
        pairs.join(", ")
    };
    let check = CheckResult {
        name: "methods-agree".to_string(),
        pass: agree,
        details,
    };
    match args.format {
        FormatArg::Text => {
            for o in &outcomes {
                match (&o.count, &o.skip_note) {
                    (Some(v), _) => println!("{:<10}  {v}", o.method),
                    (None, Some(note)) => println!("{:<10}  skipped: {note}", o.method),
                    (None, None) => unreachable!("every outcome counts or skips"),
                }
            }
            let verdict = if check.pass { "pass" } else { "FAIL" };
            println!("{verdict}  methods-agree  {}", check.details);
        }
        FormatArg::Json => {
            let mut methods = serde_json::Map::new();
            let mut skips = serde_json::Map::new();
            for o in &outcomes {
                match (&o.count, &o.skip_note) {
                    (Some(v), _) => {
                        methods.insert(o.method.to_string(), Value::String(v.to_string()));
                    }
                    (None, Some(note)) => {
                        skips.insert(o.method.to_string(), Value::String(note.clone()));
                    }
                    (None, None) => unreachable!("every outcome counts or skips"),
                }
            }
            print_json(json!({
                "family": family.name(),
                "n": args.n,
                "methods": methods,
                "skipped": skips,
                "checks": checks_json(std::slice::from_ref(&check)),
            }));
        }
        FormatArg::Csv => unreachable!("rejected by cmd_count"),
    }
    Ok(if check.pass { 0 } else { 1 })
}

fn render_table_csv(table: &SequenceTable) -> String {
    let mut out = String::from("sequence");
    for n in 1..=table.n_max {
        out.push_str(&format!(",n{n}"));
    }
    out.push('\n');
    for (name, values) in table.rows() {
        out.push_str(name);
        for v in values {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    out
}

fn render_table_text(table: &SequenceTable) -> String {
    let rows = table.rows();
    let mut widths: Vec<usize> = (1..=table.n_max).map(|n| n.to_string().len()).collect();
    for (_, values) in &rows {
        for (j, v) in values.iter().enumerate() {
            widths[j] = widths[j].max(v.to_string().len());
        }
    }
    let mut out = String::new();
    out.push_str(&format!("{:<8}", "n"));
    for (j, w) in widths.iter().enumerate() {
        out.push_str(&format!(" {:>w$}", j + 1));
    }
    out.push('\n');
    for (name, values) in rows {
        out.push_str(&format!("{name:<8}"));
        for (j, v) in values.iter().enumerate() {
            out.push_str(&format!(" {:>w$}", v.to_string(), w = widths[j]));
        }
        out.push('\n');
    }
    out
}

fn table_json(table: &SequenceTable) -> Value {
    let mut sequences = serde_json::Map::new();
    for (name, values) in table.rows() {
        sequences.insert(
            name.to_string(),
            Value::Array(
                values
                    .iter()
                    .map(|v| Value::String(v.to_string()))
                    .collect(),
            ),
        );
    }
    json!({
        "family": "hex8",
        "n_max": table.n_max,
        "sequences": sequences,
        "checks": [],
    })
}

fn cmd_table(args: TableArgs) -> Result<i32, Failure> {
    if args.n < 6 {
        return Err(usage_error(format!(
            "the refined table needs n >= 6 (epsilon is identically zero before that); \
             asked for n = {}",
            args.n
        )));
    }
    let table = five_sequences(args.n);
    match args.format {
        FormatArg::Text => print!("{}", render_table_text(&table)),
        FormatArg::Csv => print!("{}", render_table_csv(&table)),
        FormatArg::Json => print_json(table_json(&table)),
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Failure> {
    if args.format == FormatArg::Csv {
        return Err(csv_not_applicable());
    }
    let (level, level_name) = match args.level {
        LevelArg::Fast => (VerifyLevel::Fast, "fast"),
        LevelArg::Full => (VerifyLevel::Full, "full"),
    };
    let results = run_verify(level, args.jobs as usize);
    let failed = results.iter().filter(|r| !r.pass).count();
    match args.format {
        FormatArg::Text => {
            for r in &results {
                let status = if r.pass { "pass" } else { "FAIL" };
                println!("{status}  {:<27}  {}", r.name, r.details);
            }
            println!(
                "{} checks: {} passed, {failed} failed",
                results.len(),
                results.len() - failed
            );
        }
        FormatArg::Json => print_json(json!({
            "level": level_name,
            "checks": checks_json(&results),
        })),
        FormatArg::Csv => unreachable!("rejected above"),
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

/// Five-decimal rendering in the reference layout: plain decimal for real
/// entries, `a+bi` / `a-bi` for the conjugate-pair representative.
fn fmt5(re: f64, im: f64, real: bool) -> String {
    if real {
        format!("{re:.5}")
    } else {
        format!("{re:.5}{im:+.5}i")
    }
}

fn cmd_roots(args: RootsArgs) -> Result<i32, Failure> {
    if args.format == FormatArg::Csv {
        return Err(csv_not_applicable());
    }
    let family: Family = args.family.into();
    let model = solve_model(family).map_err(|e| usage_error(e.to_string()))?;
    let reference =
        reference_model(family).expect("families with simple spectra carry reference digits");
    let n_real = model.real_root_count();

    let mut root_delta = 0f64;
    let mut coeff_delta = 0f64;
    let mut outliers: Vec<String> = Vec::new();
    for (i, (got, want)) in model.roots.iter().zip(&reference.roots).enumerate() {
        let d = (*got - *want).norm();
        root_delta = root_delta.max(d);
        if d > 1e-5 {
            outliers.push(format!(
                "R{} solves to {} but the reference digits read {} (delta {d:.1e})",
                i + 1,
                fmt5(got.re, got.im, i < n_real),
                fmt5(want.re, want.im, i < n_real),
            ));
        }
    }
    for (i, (got, want)) in model.coeffs.iter().zip(&reference.coeffs).enumerate() {
        let d = (*got - *want).norm();
        coeff_delta = coeff_delta.max(d);
        if d > 1e-5 {
            outliers.push(format!(
                "c{} solves to {} but the reference digits read {} (delta {d:.1e})",
                i + 1,
                fmt5(got.re, got.im, i < n_real),
                fmt5(want.re, want.im, i < n_real),
            ));
        }
    }
    let residual_check = CheckResult {
        name: "residual-bound".to_string(),
        pass: model.residual_bound <= 1e-12,
        details: format!(
            "every root satisfies the characteristic polynomial to {:.2e}",
            model.residual_bound
        ),
    };

    match args.format {
        FormatArg::Text => {
            println!(
                "{} spectrum: {}",
                family.name(),
                render_poly(&model.char_coeffs)
            );
            let pairs = (model.order() - n_real) / 2;
            println!(
                "{} roots: {n_real} real, {pairs} conjugate {}; one representative per pair",
                model.order(),
                if pairs == 1 { "pair" } else { "pairs" }
            );
            for i in 0..model.roots.len() {
                let r = model.roots[i];
                let c = model.coeffs[i];
                println!(
                    "R{} ≈ {}  c{} ≈ {}",
                    i + 1,
                    fmt5(r.re, r.im, i < n_real),
                    i + 1,
                    fmt5(c.re, c.im, i < n_real)
                );
            }
            println!("residual bound {:.2e}", model.residual_bound);
            println!(
                "reference delta: roots within {root_delta:.1e}, coefficients within {coeff_delta:.1e}"
            );
            for line in &outliers {
                println!("  {line}");
            }
            if !outliers.is_empty() {
                println!(
                    "  (deltas this large point at decimal slips in the reference digits; \
                     the solved values satisfy the defining linear system)"
                );
            }
        }
        FormatArg::Json => {
            let roots: Vec<Value> = model
                .roots
                .iter()
                .enumerate()
                .map(|(i, z)| Value::String(fmt5(z.re, z.im, i < n_real)))
                .collect();
            let coeffs: Vec<Value> = model
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, z)| Value::String(fmt5(z.re, z.im, i < n_real)))
                .collect();
            print_json(json!({
                "family": family.name(),
                "order": model.order(),
                "polynomial": render_poly(&model.char_coeffs),
                "roots": roots,
                "coefficients": coeffs,
                "residual_bound": model.residual_bound,
                "reference_delta": {
                    "roots": root_delta,
                    "coefficients": coeff_delta,
                    "outliers": outliers,
                },
                "checks": checks_json(std::slice::from_ref(&residual_check)),
            }));
        }
        FormatArg::Csv => unreachable!("rejected above"),
    }
    Ok(if residual_check.pass { 0 } else { 1 })
}
