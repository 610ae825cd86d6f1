//! The label DP against the brute-force tree: the full label histograms
//! must coincide level by level, not just the totals.

use std::collections::BTreeMap;

use hexavoid_core::dp::{advance, distribution_at, root_distribution, totals_through};
use hexavoid_core::family::Family;
use hexavoid_core::oracle::{enumerate_levels, OracleConfig};
use hexavoid_core::rec::alpha_through;
use num_bigint::{BigInt, BigUint};

#[test]
fn histograms_agree_to_level_12() {
    let config = OracleConfig::default();
    for family in Family::ALL {
        let levels = enumerate_levels(12, family, &config).unwrap();
        let mut dist = root_distribution(family);
        for level in &levels {
            if level.n > 1 {
                dist = advance(&dist, family);
            }
            let oracle: BTreeMap<_, BigUint> = level
                .label_histogram
                .iter()
                .map(|(k, v)| (*k, BigUint::from(*v)))
                .collect();
            assert_eq!(
                dist.counts, oracle,
                "{family} label histograms at level {}",
                level.n
            );
        }
    }
}

#[test]
fn counts_collapse_to_five_sequences() {
    // Realized Hex8 label counts depend only on (n - k, x - k); the head
    // cases x - k <= 3 are the alpha..delta columns and everything with
    // x - k >= 4 falls onto the epsilon diagonal, where the count depends
    // only on the difference (n - k) - (x - k). Together: five sequences
    // carry the entire table.
    let mut by_class: BTreeMap<(bool, usize, u32), BigUint> = BTreeMap::new();
    for n in 1..=12usize {
        let dist = distribution_at(n, Family::Hex8);
        for (key, count) in &dist.counts {
            let [x, k, _, _] = *key;
            let (down, stripped) = (n - k as usize, x - k);
            let class = if stripped >= 4 {
                (true, down - stripped as usize, 0)
            } else {
                (false, down, stripped)
            };
            match by_class.get(&class) {
                Some(existing) => assert_eq!(
                    existing, count,
                    "level {n}: label {key:?} departs from its class {class:?}"
                ),
                None => {
                    by_class.insert(class, count.clone());
                }
            }
        }
    }
}

#[test]
fn totals_satisfy_the_recurrence() {
    for (family, n_max) in [(Family::Hex8, 30), (Family::Hex6, 30), (Family::Hex4, 60)] {
        let totals = totals_through(n_max, family);
        let alphas = alpha_through(n_max, family);
        for n in 1..=n_max {
            assert_eq!(
                BigInt::from(totals[n - 1].clone()),
                alphas[n - 1],
                "{family} at n = {n}"
            );
        }
    }
}
