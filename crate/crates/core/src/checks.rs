//! Cross-validation of the four counting methods, packaged as named
//! checks with deterministic reports.
//!
//! Every check pits at least two independent computations against each
//! other: the brute-force tree against the label DP, both against the
//! recurrences, the recurrences against the spectral closed forms, and all
//! of them against pinned published values. Reports carry no timings or
//! other run-dependent noise, so a verify run is byte-reproducible for a
//! fixed flag set regardless of worker count.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::dp::{distribution_at, totals_through};
use crate::family::{is_member, Family};
use crate::labels::{decompose, delete_k_elements, key_of_perm, label_of, LabelKey};
use crate::oracle::{enumerate_levels, OracleConfig, OracleError, TreeLevel};
use crate::perm::Perm;
use crate::rec::{
    alpha_through, alpha_via_recurrence, five_sequences, hex4_closed_form, recurrence_spec,
    SequenceTable,
};
use crate::spectral::{eval_rounded, reference_model, solve_model, SpectralError, SpectralModel};

/// Published table of the five Hex8 sequences at n = 1..12.
pub const TABLE_ALPHA: [i64; 12] = [1, 2, 5, 14, 42, 132, 429, 1426, 4806, 16329, 55740, 190787];
pub const TABLE_BETA: [i64; 12] = [0, 0, 1, 4, 14, 48, 165, 568, 1954, 6717, 23082, 79307];
pub const TABLE_GAMMA: [i64; 12] = [0, 0, 0, 1, 5, 20, 75, 271, 957, 3337, 11559, 39896];
pub const TABLE_DELTA: [i64; 12] = [0, 0, 0, 0, 1, 6, 25, 93, 333, 1172, 4083, 14137];
pub const TABLE_EPSILON: [i64; 12] = [0, 0, 0, 0, 0, 1, 5, 19, 68, 240, 839, 2911];

/// Published first values of the Hex6 count.
pub const HEX6_FIRST_VALUES: [i64; 12] =
    [1, 2, 5, 14, 42, 128, 389, 1179, 3572, 10825, 32810, 99446];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

fn check(name: &str, pass: bool, details: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        pass,
        details,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyLevel {
    Fast,
    Full,
}

impl VerifyLevel {
    /// Deepest tree level the verify run enumerates.
    pub fn depth(self) -> usize {
        match self {
            VerifyLevel::Fast => 10,
            VerifyLevel::Full => 12,
        }
    }
}

impl std::str::FromStr for VerifyLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fast" => Ok(VerifyLevel::Fast),
            "full" => Ok(VerifyLevel::Full),
            other => Err(format!("unknown level '{other}' (expected fast or full)")),
        }
    }
}

/// Enumerates levels 1..=depth with the default budget.
pub fn oracle_stack(
    family: Family,
    depth: usize,
    jobs: usize,
) -> Result<Vec<TreeLevel>, OracleError> {
    let config = OracleConfig {
        jobs,
        ..OracleConfig::default()
    };
    enumerate_levels(depth, family, &config)
}

/// Members of one level that end in their own maximum. This is the class
/// the deletion lemma bottoms out in, and its size at level n+1 is
/// alpha_n.
pub fn ends_in_max_count(level: &TreeLevel) -> u64 {
    level.members.iter().filter(|w| w.ends_in_max()).count() as u64
}

/// The five sequences read off the enumerated tree: column n comes from
/// level n+1, alpha as the ends-in-max class and beta..epsilon as the
/// label classes (1,0,0,0) through (4,0,0,0).
pub fn oracle_five_sequences(levels: &[TreeLevel]) -> SequenceTable {
    assert!(levels.len() >= 2, "column n needs level n+1");
    let n_max = levels.len() - 1;
    let class = |n: usize, key: LabelKey| -> BigInt {
        BigInt::from(levels[n].label_histogram.get(&key).copied().unwrap_or(0))
    };
    let mut table = SequenceTable {
        n_max,
        alpha: Vec::new(),
        beta: Vec::new(),
        gamma: Vec::new(),
        delta: Vec::new(),
        epsilon: Vec::new(),
    };
    for n in 1..=n_max {
        table
            .alpha
            .push(BigInt::from(ends_in_max_count(&levels[n])));
        table.beta.push(class(n, [1, 0, 0, 0]));
        table.gamma.push(class(n, [2, 0, 0, 0]));
        table.delta.push(class(n, [3, 0, 0, 0]));
        table.epsilon.push(class(n, [4, 0, 0, 0]));
    }
    table
}

fn push_violation(violations: &mut Vec<String>, text: String) {
    if violations.len() < 5 {
        violations.push(text);
    }
}

/// Checks every node of the enumerated Hex8 tree up to `max_level`
/// against the succession rule: the node has S+1 children, they occupy
/// the S+1 rightmost insertion sites, each site produces the predicted
/// label, and the child-label multiset equals the rule's output.
/// Admissibility is decided by raw membership, independent of the pruned
/// expansion that produced the levels.
pub fn succession_violations(levels: &[TreeLevel], max_level: usize) -> (u64, Vec<String>) {
    let family = Family::Hex8;
    let mut nodes = 0u64;
    let mut violations = Vec::new();
    for level in levels.iter().take(max_level) {
        for w in &level.members {
            nodes += 1;
            let parent = label_of(w).expect("tree members carry labels");
            let (x, k, l, m) = (parent.x, parent.k, parent.l, parent.m);
            let t = (k + 2).min((k + 1).max(l + 2));
            let s = if t + 2 <= x { t } else { x };

            let mut admissible = Vec::new();
            for j in 0..=w.len() {
                let candidate = w.insert_max(j);
                if is_member(candidate.values(), family) {
                    admissible.push((j, candidate));
                }
            }

            if admissible.len() as u32 != s + 1 {
                push_violation(
                    &mut violations,
                    format!("{w}: {} children, rule says {}", admissible.len(), s + 1),
                );
                continue;
            }
            let sites: Vec<usize> = admissible.iter().map(|(j, _)| *j).collect();
            if sites != (0..=s as usize).collect::<Vec<_>>() {
                push_violation(
                    &mut violations,
                    format!(
                        "{w}: admissible sites {sites:?} are not the {} rightmost",
                        s + 1
                    ),
                );
                continue;
            }
            let mut produced = Vec::new();
            for (j, child) in &admissible {
                let got = label_of(child).expect("children stay in the class");
                let want = if *j == 0 {
                    (x + 1, k + 1, l + 1, m + 1)
                } else {
                    let i = *j as u32;
                    (i, i.min(l), i.min(m), 0)
                };
                if (got.x, got.k, got.l, got.m) != want {
                    push_violation(
                        &mut violations,
                        format!(
                            "{w} site {j}: child label ({},{},{},{}) != predicted \
                             ({},{},{},{})",
                            got.x, got.k, got.l, got.m, want.0, want.1, want.2, want.3
                        ),
                    );
                }
                produced.push([got.x, got.k, got.l, got.m]);
            }
            let mut expected: Vec<LabelKey> = crate::dp::succeed(parent)
                .into_iter()
                .map(|c| [c.x, c.k, c.l, c.m])
                .collect();
            produced.sort_unstable();
            expected.sort_unstable();
            if produced != expected {
                push_violation(
                    &mut violations,
                    format!("{w}: child multiset differs from the succession rule"),
                );
            }
        }
    }
    (nodes, violations)
}

/// For every label class realized in the stack: its size must equal the
/// size of the target class k levels down (the ends-in-max class when
/// x = k, the label (x-k,0,0,0) otherwise), and removing the k elements
/// above K must be injective on the class.
pub fn deletion_violations(levels: &[TreeLevel]) -> (u64, Vec<String>) {
    let mut classes = 0u64;
    let mut violations = Vec::new();
    for (idx, level) in levels.iter().enumerate() {
        let n = idx + 1;
        let mut by_label: BTreeMap<LabelKey, Vec<&Perm>> = BTreeMap::new();
        for w in &level.members {
            by_label
                .entry(key_of_perm(w, Family::Hex8).expect("members carry labels"))
                .or_default()
                .push(w);
        }
        for (key, members) in by_label {
            classes += 1;
            let [x, k, _, _] = key;
            let down = n - k as usize;
            let expected: u64 = if x == k {
                if down == 0 {
                    1
                } else {
                    ends_in_max_count(&levels[down - 1])
                }
            } else {
                levels[down - 1]
                    .label_histogram
                    .get(&[x - k, 0, 0, 0])
                    .copied()
                    .unwrap_or(0)
            };
            if members.len() as u64 != expected {
                push_violation(
                    &mut violations,
                    format!(
                        "h_{n}({},{},{},{}) = {} but the target class holds {expected}",
                        key[0],
                        key[1],
                        key[2],
                        key[3],
                        members.len()
                    ),
                );
            }
            let images: BTreeSet<Perm> = members
                .iter()
                .map(|w| delete_k_elements(w).expect("members carry labels"))
                .collect();
            if images.len() != members.len() {
                push_violation(
                    &mut violations,
                    format!(
                        "deletion collides on class ({},{},{},{}) at n = {n}",
                        key[0], key[1], key[2], key[3]
                    ),
                );
            }
        }
    }
    (classes, violations)
}

/// The epsilon sequence must not depend on which x >= 4 reads it off:
/// compares the (4,0,0,0) class at level n+1 with the (5,0,0,0) class at
/// level n+2, on the tree as far as the stack allows and on the DP
/// through `dp_to` columns.
pub fn epsilon_xbar_violations(levels: &[TreeLevel], dp_to: usize) -> Vec<String> {
    let mut violations = Vec::new();
    let class = |level: &TreeLevel, key: LabelKey| -> u64 {
        level.label_histogram.get(&key).copied().unwrap_or(0)
    };
    for n in 1..=levels.len().saturating_sub(2) {
        let via4 = class(&levels[n], [4, 0, 0, 0]);
        let via5 = class(&levels[n + 1], [5, 0, 0, 0]);
        if via4 != via5 {
            push_violation(
                &mut violations,
                format!("tree: epsilon_{n} reads {via4} at x=4 but {via5} at x=5"),
            );
        }
    }
    let mut dist = distribution_at(1, Family::Hex8);
    let mut dp_levels = vec![dist.clone()];
    while dist.n < dp_to + 2 {
        dist = crate::dp::advance(&dist, Family::Hex8);
        dp_levels.push(dist.clone());
    }
    for n in 1..=dp_to {
        let via4 = dp_levels[n].count(&[4, 0, 0, 0]);
        let via5 = dp_levels[n + 1].count(&[5, 0, 0, 0]);
        if via4 != via5 {
            push_violation(
                &mut violations,
                format!("dp: epsilon_{n} reads {via4} at x=4 but {via5} at x=5"),
            );
        }
    }
    violations
}

/// beta_n also counts the members of length n whose subsequence B2
/// contains both n and n-1; checks that reading against the recurrence
/// table.
pub fn beta_alternative_violations(levels: &[TreeLevel]) -> Vec<String> {
    let mut violations = Vec::new();
    let limit = levels.len().min(10);
    let table = five_sequences(limit);
    for n in 2..=limit {
        let count = levels[n - 1]
            .members
            .iter()
            .filter(|w| {
                let d = decompose(w).expect("members avoid 321");
                let has = |v: u32| d.b2.iter().any(|&(_, value)| value == v);
                has(n as u32) && has(n as u32 - 1)
            })
            .count();
        let expected = &table.beta[n - 1];
        if &BigInt::from(count) != expected {
            push_violation(
                &mut violations,
                format!(
                    "beta_{n}: {count} members carry both n and n-1 in B2, table says {expected}"
                ),
            );
        }
    }
    violations
}

fn mismatches_row(name: &str, got: &[BigInt], want: &[i64], upto: usize, out: &mut Vec<String>) {
    for n in 1..=upto.min(got.len()).min(want.len()) {
        if got[n - 1] != BigInt::from(want[n - 1]) {
            push_violation(
                out,
                format!(
                    "{name}[{n}] = {} but the published cell is {}",
                    got[n - 1],
                    want[n - 1]
                ),
            );
        }
    }
}

fn table_violations(table: &SequenceTable, upto: usize) -> Vec<String> {
    let mut out = Vec::new();
    mismatches_row("alpha", &table.alpha, &TABLE_ALPHA, upto, &mut out);
    mismatches_row("beta", &table.beta, &TABLE_BETA, upto, &mut out);
    mismatches_row("gamma", &table.gamma, &TABLE_GAMMA, upto, &mut out);
    mismatches_row("delta", &table.delta, &TABLE_DELTA, upto, &mut out);
    mismatches_row("epsilon", &table.epsilon, &TABLE_EPSILON, upto, &mut out);
    out
}

fn fail_or(pass_text: String, violations: Vec<String>) -> (bool, String) {
    if violations.is_empty() {
        (true, pass_text)
    } else {
        (false, violations.join("; "))
    }
}

/// Compares a solved spectrum against reference digits, cell by cell.
fn spectrum_deltas(
    model: &SpectralModel,
    roots: &[(f64, f64)],
    coeffs: &[(f64, f64)],
    tol: f64,
) -> Vec<String> {
    let mut out = Vec::new();
    for (i, &(re, im)) in roots.iter().enumerate() {
        let got = model.roots[i];
        if (got.re - re).abs() > tol || (got.im - im).abs() > tol {
            push_violation(
                &mut out,
                format!(
                    "R{} = {:.5}{:+.5}i, reference {re:.5}{im:+.5}i",
                    i + 1,
                    got.re,
                    got.im
                ),
            );
        }
    }
    for (i, &(re, im)) in coeffs.iter().enumerate() {
        let got = model.coeffs[i];
        if (got.re - re).abs() > tol || (got.im - im).abs() > tol {
            push_violation(
                &mut out,
                format!(
                    "c{} = {:.5}{:+.5}i, reference {re:.5}{im:+.5}i",
                    i + 1,
                    got.re,
                    got.im
                ),
            );
        }
    }
    out
}

fn rounded_range_violations(
    model: &SpectralModel,
    alphas: &[BigInt],
    from: usize,
    to: usize,
) -> Vec<String> {
    let mut out = Vec::new();
    for n in from..=to {
        match eval_rounded(model, n) {
            Ok(v) => {
                if v != alphas[n - 1] {
                    push_violation(
                        &mut out,
                        format!("rounded({n}) = {v}, recurrence says {}", alphas[n - 1]),
                    );
                }
            }
            Err(e) => push_violation(&mut out, format!("rounded({n}) failed: {e}")),
        }
    }
    out
}

fn dp_oracle_violations(levels: &[TreeLevel], family: Family) -> Vec<String> {
    let mut violations = Vec::new();
    let mut dist = distribution_at(1, family);
    for level in levels {
        if level.n > 1 {
            dist = crate::dp::advance(&dist, family);
        }
        let oracle_counts: BTreeMap<LabelKey, BigInt> = level
            .label_histogram
            .iter()
            .map(|(k, v)| (*k, BigInt::from(*v)))
            .collect();
        let dp_counts: BTreeMap<LabelKey, BigInt> = dist
            .counts
            .iter()
            .map(|(k, v)| (*k, BigInt::from(v.clone())))
            .collect();
        if oracle_counts != dp_counts {
            push_violation(
                &mut violations,
                format!("{family} label histograms split at level {}", level.n),
            );
        }
    }
    violations
}

/// Runs the whole suite. `jobs` only affects how the tree enumeration is
/// scheduled, never any reported value.
pub fn run_verify(level: VerifyLevel, jobs: usize) -> Vec<CheckResult> {
    let depth = level.depth();
    let mut results = Vec::new();

    let hex8 = oracle_stack(Family::Hex8, depth, jobs).expect("default budget covers depth 12");
    let hex6 = oracle_stack(Family::Hex6, depth, jobs).expect("default budget covers depth 12");
    let hex4 = oracle_stack(Family::Hex4, depth, jobs).expect("default budget covers depth 12");

    // Published 5 x 12 table: recurrence engine at full width, tree columns
    // as deep as the stack reaches.
    {
        let mut violations = table_violations(&five_sequences(12), 12);
        let from_tree = oracle_five_sequences(&hex8);
        violations.extend(table_violations(&from_tree, depth - 1));
        let (pass, details) = fail_or(
            format!(
                "recurrence columns 1..=12 and tree columns 1..={} match all 5 published rows",
                depth - 1
            ),
            violations,
        );
        results.push(check("hex8-table", pass, details));
    }

    let hex8_model = solve_model(Family::Hex8).expect("hex8 spectrum has simple roots");
    let hex6_model = solve_model(Family::Hex6).expect("hex6 spectrum has simple roots");
    let hex8_alpha = alpha_through(40, Family::Hex8);
    let hex6_alpha = alpha_through(40, Family::Hex6);

    // Four independent methods on the Hex8 count.
    {
        let mut violations = Vec::new();
        let dp = totals_through(40, Family::Hex8);
        for n in 1..=40usize {
            if BigInt::from(dp[n - 1].clone()) != hex8_alpha[n - 1] {
                push_violation(
                    &mut violations,
                    format!(
                        "dp alpha_{n} = {} != recurrence {}",
                        dp[n - 1],
                        hex8_alpha[n - 1]
                    ),
                );
            }
        }
        for (idx, lvl) in hex8.iter().enumerate() {
            let n = idx + 1;
            if BigInt::from(lvl.members.len() as u64) != hex8_alpha[n - 1] {
                push_violation(
                    &mut violations,
                    format!(
                        "tree alpha_{n} = {} != recurrence {}",
                        lvl.members.len(),
                        hex8_alpha[n - 1]
                    ),
                );
            }
        }
        violations.extend(rounded_range_violations(&hex8_model, &hex8_alpha, 1, 40));
        let (pass, details) = fail_or(
            format!("tree 1..={depth}, dp 1..=40, recurrence 1..=40 and rounded form 1..=40 agree"),
            violations,
        );
        results.push(check("hex8-alpha-four-way", pass, details));
    }

    {
        let (nodes, violations) = succession_violations(&hex8, depth - 1);
        let (pass, details) = fail_or(
            format!(
                "{nodes} nodes at levels 1..={} follow the rule exactly",
                depth - 1
            ),
            violations,
        );
        results.push(check("hex8-succession-conformance", pass, details));
    }

    {
        let (classes, violations) = deletion_violations(&hex8);
        let (pass, details) = fail_or(
            format!("{classes} label classes collapse correctly and deletion is injective"),
            violations,
        );
        results.push(check("hex8-deletion-lemma", pass, details));
    }

    {
        let violations = epsilon_xbar_violations(&hex8, 12);
        let (pass, details) = fail_or(
            format!(
                "epsilon agrees between x = 4 and x = 5 (tree to level {depth}, dp to column 12)"
            ),
            violations,
        );
        results.push(check("hex8-epsilon-xbar", pass, details));
    }

    {
        let violations = beta_alternative_violations(&hex8);
        let (pass, details) = fail_or(
            format!(
                "beta matches its direct description (both n and n-1 in B2) for n = 2..={}",
                depth.min(10)
            ),
            violations,
        );
        results.push(check("hex8-beta-alternative", pass, details));
    }

    {
        let mut violations = Vec::new();
        for (family, stack) in [
            (Family::Hex8, &hex8),
            (Family::Hex6, &hex6),
            (Family::Hex4, &hex4),
        ] {
            violations.extend(dp_oracle_violations(stack, family));
        }
        let (pass, details) = fail_or(
            format!("dp and tree label histograms are identical for all families to level {depth}"),
            violations,
        );
        results.push(check("dp-oracle-histograms", pass, details));
    }

    {
        let mut violations = Vec::new();
        let dp = totals_through(40, Family::Hex6);
        for n in 1..=40usize {
            if BigInt::from(dp[n - 1].clone()) != hex6_alpha[n - 1] {
                push_violation(
                    &mut violations,
                    format!(
                        "dp alpha_{n} = {} != recurrence {}",
                        dp[n - 1],
                        hex6_alpha[n - 1]
                    ),
                );
            }
        }
        for (idx, lvl) in hex6.iter().enumerate() {
            let n = idx + 1;
            if BigInt::from(lvl.members.len() as u64) != hex6_alpha[n - 1] {
                push_violation(
                    &mut violations,
                    format!(
                        "tree alpha_{n} = {} != recurrence {}",
                        lvl.members.len(),
                        hex6_alpha[n - 1]
                    ),
                );
            }
        }
        // The two-root rounded form only pins the count once the discarded
        // spectrum has decayed: at n = 1 and 2 its distance to the nearest
        // integer is 0.46 and 0.27, so those must refuse rather than round.
        for n in 1..=2usize {
            match eval_rounded(&hex6_model, n) {
                Err(SpectralError::PrecisionExhausted { .. }) => {}
                other => push_violation(
                    &mut violations,
                    format!("rounded({n}) should refuse (trust radius), got {other:?}"),
                ),
            }
        }
        violations.extend(rounded_range_violations(&hex6_model, &hex6_alpha, 3, 40));
        let (pass, details) = fail_or(
            format!(
                "tree 1..={depth}, dp 1..=40, recurrence 1..=40 agree; rounded form exact on \
                 3..=40 and refuses below"
            ),
            violations,
        );
        results.push(check("hex6-alpha-methods", pass, details));
    }

    {
        let mut violations = Vec::new();
        mismatches_row(
            "alpha",
            &hex6_alpha[..12],
            &HEX6_FIRST_VALUES,
            12,
            &mut violations,
        );
        for (idx, lvl) in hex6.iter().enumerate().take(12) {
            if BigInt::from(lvl.members.len() as u64) != BigInt::from(HEX6_FIRST_VALUES[idx]) {
                push_violation(
                    &mut violations,
                    format!(
                        "tree alpha_{} = {} != published {}",
                        idx + 1,
                        lvl.members.len(),
                        HEX6_FIRST_VALUES[idx]
                    ),
                );
            }
        }
        let (pass, details) = fail_or(
            format!(
                "recurrence 1..=12 and tree 1..={} match the published first values \
                 1,2,5,14,42,128,389,1179,3572,10825,32810,99446",
                depth.min(12)
            ),
            violations,
        );
        results.push(check("hex6-first-values", pass, details));
    }

    {
        let mut violations = Vec::new();
        for (idx, lvl) in hex4.iter().enumerate() {
            let n = idx + 1;
            if BigInt::from(lvl.members.len() as u64) != hex4_closed_form(n) {
                push_violation(
                    &mut violations,
                    format!(
                        "tree alpha_{n} = {} != closed form {}",
                        lvl.members.len(),
                        hex4_closed_form(n)
                    ),
                );
            }
        }
        let spec = recurrence_spec(Family::Hex4);
        for n in 1..=60 {
            if alpha_via_recurrence(n, &spec) != hex4_closed_form(n) {
                push_violation(
                    &mut violations,
                    format!("recurrence alpha_{n} != closed form"),
                );
            }
        }
        match solve_model(Family::Hex4) {
            Err(SpectralError::Degenerate { poly, .. }) => {
                if poly != "(x−1)³" {
                    push_violation(
                        &mut violations,
                        format!("degenerate spectrum reported as {poly}, expected (x−1)³"),
                    );
                }
            }
            other => push_violation(
                &mut violations,
                format!("hex4 spectrum must report its triple root, got {other:?}"),
            ),
        }
        let (pass, details) = fail_or(
            format!(
                "tree 1..={depth} equals (n-1)^2+1, recurrence matches it to 60, and the \
                 spectrum degenerates as (x−1)³"
            ),
            violations,
        );
        results.push(check("hex4-alpha-methods", pass, details));
    }

    {
        let reference = reference_model(Family::Hex8).expect("hex8 reference digits exist");
        let roots: Vec<(f64, f64)> = reference.roots.iter().map(|z| (z.re, z.im)).collect();
        let coeffs: Vec<(f64, f64)> = reference.coeffs.iter().map(|z| (z.re, z.im)).collect();
        let mut violations = spectrum_deltas(&hex8_model, &roots, &coeffs, 1e-5);
        if hex8_model.residual_bound > 1e-12 {
            push_violation(
                &mut violations,
                format!(
                    "root residual {:.3e} above 1e-12",
                    hex8_model.residual_bound
                ),
            );
        }
        if hex8_model.conjugate_symmetry_defect() > 1e-10 {
            push_violation(
                &mut violations,
                "conjugate pair coefficients diverge".into(),
            );
        }
        let (pass, details) = fail_or(
            "all 5 roots and 5 coefficients within 1e-5 of the reference digits; residual \
             below 1e-12"
                .to_string(),
            violations,
        );
        results.push(check("hex8-spectral", pass, details));
    }

    {
        // The pinned table's c1 and Re(c4) cells read 0.63205 and -0.19482,
        // which are off by factors of 100 and 10 from any solution of the
        // defining linear system (decimal-point slips); this check compares
        // against the corrected digits 0.00632 and -0.01948 and says so.
        let reference = reference_model(Family::Hex6).expect("hex6 reference digits exist");
        let roots: Vec<(f64, f64)> = reference.roots.iter().map(|z| (z.re, z.im)).collect();
        let mut coeffs: Vec<(f64, f64)> = reference.coeffs.iter().map(|z| (z.re, z.im)).collect();
        coeffs[0].0 = 0.00632;
        coeffs[3].0 = -0.01948;
        let mut violations = spectrum_deltas(&hex6_model, &roots, &coeffs, 1e-5);
        if hex6_model.residual_bound > 1e-12 {
            push_violation(
                &mut violations,
                format!(
                    "root residual {:.3e} above 1e-12",
                    hex6_model.residual_bound
                ),
            );
        }
        let pass_text = "all 4 roots and 4 coefficients within 1e-5 of the reference digits \
                         (c1 and Re(c4) compared against 0.00632 and -0.01948; the table \
                         cells 0.63205 and -0.19482 are decimal-shifted)"
            .to_string();
        let (pass, details) = fail_or(pass_text, violations);
        results.push(check("hex6-spectral", pass, details));
    }

    results
}
