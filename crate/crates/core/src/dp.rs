//! Counting by succession rules on labels instead of permutations.
//!
//! Inserting the new maximum into a member either lands inside the active
//! region (one site extends the region, the admissible shorter sites reset
//! it) or is inadmissible. Which sites survive is a function of the label
//! alone, so the label multiset of level n+1 follows from the multiset at
//! level n. That turns enumeration into a small integer DP whose totals are
//! checked against the brute-force tree level by level.
//!
//! Each family needs a different amount of the label to decide
//! admissibility: Hex8 uses all of (x,k,l,m), Hex6 only (x,l,m), Hex4 only
//! (x,m). The truncated labels use the same `[u32; 4]` key with unused
//! trailing slots pinned to zero.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::family::Family;
use crate::labels::{key_of, Label, LabelKey};

/// Children of a Hex8 label. Site 0 (inserting at the far right) grows the
/// active region and bumps all three counters. Inserting deeper resets the
/// label: site i (for 1 <= i <= S) leaves i old actives to the right of the
/// new maximum, the threshold S depending on how many of K, L, M would be
/// trapped inside a forbidden pattern.
pub fn succeed(parent: Label) -> Vec<Label> {
    let (x, k, l, m) = (parent.x, parent.k, parent.l, parent.m);
    let mut out = Vec::with_capacity(x as usize + 1);
    out.push(Label::new(x + 1, k + 1, l + 1, m + 1));
    let t = (k + 2).min((k + 1).max(l + 2));
    let s = if t + 2 <= x { t } else { x };
    for i in 1..=s {
        out.push(Label::new(i, i.min(l), i.min(m), 0));
    }
    out
}

fn succeed_hex6(x: u32, l: u32, m: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::with_capacity(x as usize + 1);
    out.push((x + 1, l + 1, m + 1));
    let t = if m == l { l + 1 } else { l };
    let s = if t + 2 <= x { t } else { x };
    for j in 1..=s {
        out.push((j, j.min(m), 0));
    }
    out
}

fn succeed_hex4(x: u32, m: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(x as usize + 1);
    out.push((x + 1, m + 1));
    let s = if m == x || x <= 1 { x } else { 0 };
    for j in 1..=s {
        out.push((j, 0));
    }
    out
}

/// Children of a (truncated) label under the family's succession rule.
pub fn succeed_key(parent: LabelKey, family: Family) -> Vec<LabelKey> {
    match family {
        Family::Hex8 => {
            let [x, k, l, m] = parent;
            succeed(Label::new(x, k, l, m))
                .into_iter()
                .map(|c| key_of(c, family))
                .collect()
        }
        Family::Hex6 => {
            let [x, l, m, _] = parent;
            succeed_hex6(x, l, m)
                .into_iter()
                .map(|(x, l, m)| [x, l, m, 0])
                .collect()
        }
        Family::Hex4 => {
            let [x, m, _, _] = parent;
            succeed_hex4(x, m)
                .into_iter()
                .map(|(x, m)| [x, m, 0, 0])
                .collect()
        }
    }
}

/// Multiset of labels at one tree level, with arbitrary-precision counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelDistribution {
    pub n: usize,
    pub counts: BTreeMap<LabelKey, BigUint>,
}

impl LabelDistribution {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn count(&self, key: &LabelKey) -> BigUint {
        self.counts.get(key).cloned().unwrap_or_default()
    }
}

/// The level-1 distribution: the one-element permutation.
pub fn root_distribution(family: Family) -> LabelDistribution {
    let key = match family {
        Family::Hex8 => [1, 1, 1, 1],
        Family::Hex6 => [1, 1, 1, 0],
        Family::Hex4 => [1, 1, 0, 0],
    };
    let mut counts = BTreeMap::new();
    counts.insert(key, BigUint::from(1u32));
    LabelDistribution { n: 1, counts }
}

/// One step of the DP: push every label through the succession rule.
pub fn advance(dist: &LabelDistribution, family: Family) -> LabelDistribution {
    let mut counts: BTreeMap<LabelKey, BigUint> = BTreeMap::new();
    for (key, count) in &dist.counts {
        for child in succeed_key(*key, family) {
            *counts.entry(child).or_default() += count;
        }
    }
    LabelDistribution {
        n: dist.n + 1,
        counts,
    }
}

/// The distribution at level n (n >= 1).
pub fn distribution_at(n: usize, family: Family) -> LabelDistribution {
    assert!(n >= 1, "levels are indexed from 1");
    let mut dist = root_distribution(family);
    while dist.n < n {
        dist = advance(&dist, family);
    }
    dist
}

/// Member counts for levels 1..=n_max.
pub fn totals_through(n_max: usize, family: Family) -> Vec<BigUint> {
    assert!(n_max >= 1, "levels are indexed from 1");
    let mut out = Vec::with_capacity(n_max);
    let mut dist = root_distribution(family);
    out.push(dist.total());
    for _ in 1..n_max {
        dist = advance(&dist, family);
        out.push(dist.total());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(children: Vec<Label>) -> Vec<(u32, u32, u32, u32)> {
        children.into_iter().map(|c| (c.x, c.k, c.l, c.m)).collect()
    }

    #[test]
    fn succeed_small_labels() {
        assert_eq!(
            labels(succeed(Label::new(1, 1, 1, 1))),
            vec![(2, 2, 2, 2), (1, 1, 1, 0)]
        );
        assert_eq!(
            labels(succeed(Label::new(1, 1, 1, 0))),
            vec![(2, 2, 2, 1), (1, 1, 0, 0)]
        );
        assert_eq!(
            labels(succeed(Label::new(2, 2, 2, 2))),
            vec![(3, 3, 3, 3), (1, 1, 1, 0), (2, 2, 2, 0)]
        );
    }

    #[test]
    fn totals_match_known_counts() {
        let hex8: Vec<u32> = vec![1, 2, 5, 14, 42, 132, 429, 1426];
        let hex6: Vec<u32> = vec![1, 2, 5, 14, 42, 128, 389, 1179];
        let hex4: Vec<u32> = vec![1, 2, 5, 10, 17, 26, 37, 50];
        for (family, expect) in [
            (Family::Hex8, hex8),
            (Family::Hex6, hex6),
            (Family::Hex4, hex4),
        ] {
            let got = totals_through(8, family);
            let expect: Vec<BigUint> = expect.into_iter().map(BigUint::from).collect();
            assert_eq!(got, expect, "{family}");
        }
    }

    #[test]
    fn advance_preserves_level_index() {
        let d1 = root_distribution(Family::Hex8);
        let d4 = distribution_at(4, Family::Hex8);
        assert_eq!(d1.n, 1);
        assert_eq!(d4.n, 4);
        assert_eq!(d4.total(), BigUint::from(14u32));
    }

    #[test]
    fn one_node_per_level_keeps_empty_b2() {
        let d = distribution_at(6, Family::Hex8);
        assert_eq!(d.count(&[6, 6, 6, 6]), BigUint::from(1u32));
    }
}
