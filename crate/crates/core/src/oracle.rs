//! Brute-force enumeration of the pruned generating tree.
//!
//! Level n of the tree holds every family member of length n; the children
//! of a node are the insertions of the new maximum n+1 that stay inside the
//! avoidance class. Everything here is decided by pattern containment alone,
//! so these counts serve as the ground truth the label DP, the recurrences
//! and the closed forms are checked against.
//!
//! Child checks come in two modes. `Anchored` exploits that a new forbidden
//! occurrence in a clean parent must pass through the inserted maximum (and
//! must map it to the pattern's own maximum), so the search pins that entry;
//! `Full` re-runs unrestricted containment and exists to differential-test
//! the anchored mode.

use std::collections::BTreeMap;
use std::thread;

use thiserror::Error;

use crate::family::{is_member, Family, P321};
use crate::labels::{key_of_perm, LabelKey};
use crate::perm::{contains_at_max, Perm};

/// Default cap on materialized tree nodes, sized so that every family
/// reaches level 14 (the largest, Hex8, needs 3,167,910 nodes through
/// level 14) while level 15 of the big families exceeds it.
pub const DEFAULT_NODE_BUDGET: u64 = 3_200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContainmentMode {
    /// Pin occurrences to the newly inserted maximum.
    Anchored,
    /// Unrestricted containment on every candidate (slow path for
    /// differential testing).
    Full,
}

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub budget_nodes: u64,
    pub jobs: usize,
    pub mode: ContainmentMode,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget_nodes: DEFAULT_NODE_BUDGET,
            jobs: 1,
            mode: ContainmentMode::Anchored,
        }
    }
}

/// One fully enumerated tree level: all members of length `n` in
/// lexicographic order, plus their label histogram.
#[derive(Clone, Debug)]
pub struct TreeLevel {
    pub n: usize,
    pub members: Vec<Perm>,
    pub label_histogram: BTreeMap<LabelKey, u64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error(
        "node budget {budget} exceeded while expanding level {exceeded_at}; \
         completed levels 1..={last_level} totalling {nodes_completed} nodes"
    )]
    BudgetExceeded {
        budget: u64,
        exceeded_at: usize,
        last_level: usize,
        nodes_completed: u64,
    },
    #[error("{perm} is not a {family} member; the pruned tree has no such node")]
    NotAMember { family: Family, perm: String },
}

/// Is inserting the maximum at site `j` (elements to its right) admissible?
fn child_ok(candidate: &Perm, inserted_at: usize, family: Family, mode: ContainmentMode) -> bool {
    let v = candidate.values();
    match mode {
        ContainmentMode::Anchored => {
            !contains_at_max(v, P321, inserted_at)
                && family
                    .patterns()
                    .iter()
                    .all(|p| !contains_at_max(v, p, inserted_at))
        }
        ContainmentMode::Full => is_member(v, family),
    }
}

fn children_unchecked(w: &Perm, family: Family, mode: ContainmentMode) -> Vec<Perm> {
    let n = w.len();
    let mut out = Vec::new();
    for j in 0..=n {
        let candidate = w.insert_max(j);
        if child_ok(&candidate, n - j, family, mode) {
            out.push(candidate);
        }
    }
    out
}

/// Children of a tree node in insertion-site order (rightmost site first).
/// Rejects inputs outside the family: the tree is pruned.
pub fn children(w: &Perm, family: Family, mode: ContainmentMode) -> Result<Vec<Perm>, OracleError> {
    if !is_member(w.values(), family) {
        return Err(OracleError::NotAMember {
            family,
            perm: w.to_string(),
        });
    }
    Ok(children_unchecked(w, family, mode))
}

fn histogram(members: &[Perm], family: Family) -> BTreeMap<LabelKey, u64> {
    let mut h = BTreeMap::new();
    for w in members {
        let key = key_of_perm(w, family).expect("tree members avoid 321 and are nonempty");
        *h.entry(key).or_insert(0u64) += 1;
    }
    h
}

/// All levels 1..=n_max. The expansion of each level may be partitioned
/// across `jobs` threads; partitions are concatenated in frontier order and
/// the result sorted, so output is identical for every job count.
pub fn enumerate_levels(
    n_max: usize,
    family: Family,
    config: &OracleConfig,
) -> Result<Vec<TreeLevel>, OracleError> {
    assert!(n_max >= 1, "levels are indexed from 1");
    let budget = config.budget_nodes;
    let mut nodes: u64 = 1;
    if nodes > budget {
        return Err(OracleError::BudgetExceeded {
            budget,
            exceeded_at: 1,
            last_level: 0,
            nodes_completed: 0,
        });
    }
    let root = vec![Perm::identity(1)];
    let mut levels = vec![TreeLevel {
        n: 1,
        label_histogram: histogram(&root, family),
        members: root,
    }];
    for n in 1..n_max {
        let frontier = &levels[n - 1].members;
        let mut next = expand(frontier, family, config);
        next.sort_unstable();
        nodes += next.len() as u64;
        if nodes > budget {
            return Err(OracleError::BudgetExceeded {
                budget,
                exceeded_at: n + 1,
                last_level: n,
                nodes_completed: nodes - next.len() as u64,
            });
        }
        levels.push(TreeLevel {
            n: n + 1,
            label_histogram: histogram(&next, family),
            members: next,
        });
    }
    Ok(levels)
}

fn expand(frontier: &[Perm], family: Family, config: &OracleConfig) -> Vec<Perm> {
    let jobs = config.jobs.max(1);
    if jobs == 1 || frontier.len() < 2 * jobs {
        let mut out = Vec::new();
        for w in frontier {
            out.extend(children_unchecked(w, family, config.mode));
        }
        return out;
    }
    let chunk = frontier.len().div_ceil(jobs);
    let parts: Vec<Vec<Perm>> = thread::scope(|scope| {
        let handles: Vec<_> = frontier
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut out = Vec::new();
                    for w in part {
                        out.extend(children_unchecked(w, family, config.mode));
                    }
                    out
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    parts.concat()
}

/// The single level `n`.
pub fn enumerate_level(
    n: usize,
    family: Family,
    config: &OracleConfig,
) -> Result<TreeLevel, OracleError> {
    Ok(enumerate_levels(n, family, config)?
        .pop()
        .expect("n >= 1 yields at least one level"))
}

/// h_n(label): how many members of length n carry this (truncated) label.
pub fn count_labeled(
    n: usize,
    key: LabelKey,
    family: Family,
    config: &OracleConfig,
) -> Result<u64, OracleError> {
    let level = enumerate_level(n, family, config)?;
    Ok(level.label_histogram.get(&key).copied().unwrap_or(0))
}
