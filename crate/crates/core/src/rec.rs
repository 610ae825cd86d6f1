//! Linear recurrences for the counting sequences and the five auxiliary
//! sequences attached to the Hex8 tree.
//!
//! The auxiliary sequences slice the tree level by label: alpha_n counts
//! the members of length n+1 that end in their maximum, beta/gamma/delta
//! count labels (1,0,0,0), (2,0,0,0), (3,0,0,0) at level n+1, and epsilon
//! covers every label (x,0,0,0) with x >= 4 at the level where it first
//! appears (n + x - 3). alpha also equals the plain member count, which is
//! what ties the recurrences back to the tree.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::family::Family;

/// alpha_n = c_1 alpha_{n-1} + ... + c_order alpha_{n-order} for
/// n >= valid_from, seeded by base_values at indices base_start..
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    pub family: Family,
    pub order: usize,
    pub coefficients: Vec<i64>,
    pub base_values: Vec<BigInt>,
    pub base_start: usize,
    pub valid_from: usize,
}

fn bigs(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn recurrence_spec(family: Family) -> RecurrenceSpec {
    match family {
        Family::Hex8 => RecurrenceSpec {
            family,
            order: 6,
            coefficients: vec![6, -11, 9, -4, -4, 1],
            base_values: bigs(&[1, 1, 2, 5, 14, 42]),
            base_start: 0,
            valid_from: 6,
        },
        Family::Hex6 => RecurrenceSpec {
            family,
            order: 5,
            coefficients: vec![4, -4, 3, 1, -1],
            base_values: bigs(&[1, 2, 5, 14, 42]),
            base_start: 1,
            valid_from: 6,
        },
        Family::Hex4 => RecurrenceSpec {
            family,
            order: 3,
            coefficients: vec![3, -3, 1],
            base_values: bigs(&[1, 2, 5]),
            base_start: 1,
            valid_from: 4,
        },
    }
}

/// alpha_n by unrolling the recurrence from its seeds.
pub fn alpha_via_recurrence(n: usize, spec: &RecurrenceSpec) -> BigInt {
    assert!(
        n >= spec.base_start,
        "{} alpha is defined from index {}",
        spec.family,
        spec.base_start
    );
    let mut values = spec.base_values.clone();
    if n < spec.base_start + values.len() {
        return values[n - spec.base_start].clone();
    }
    for i in spec.base_start + values.len()..=n {
        debug_assert!(i >= spec.valid_from);
        let mut next = BigInt::zero();
        for (j, c) in spec.coefficients.iter().enumerate() {
            next += &values[i - spec.base_start - 1 - j] * *c;
        }
        values.push(next);
    }
    values[n - spec.base_start].clone()
}

/// alpha_1..alpha_n_max for the family (1-indexed sequence as a Vec).
pub fn alpha_through(n_max: usize, family: Family) -> Vec<BigInt> {
    let spec = recurrence_spec(family);
    (1..=n_max)
        .map(|n| alpha_via_recurrence(n, &spec))
        .collect()
}

/// The five auxiliary sequences, each at indices 1..=n_max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub n_max: usize,
    pub alpha: Vec<BigInt>,
    pub beta: Vec<BigInt>,
    pub gamma: Vec<BigInt>,
    pub delta: Vec<BigInt>,
    pub epsilon: Vec<BigInt>,
}

impl SequenceTable {
    pub fn rows(&self) -> [(&'static str, &[BigInt]); 5] {
        [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("delta", &self.delta),
            ("epsilon", &self.epsilon),
        ]
    }
}

/// Builds the Hex8 table from alpha alone: each later sequence is a short
/// linear combination of shifted alphas, with delta summing epsilon tails.
pub fn five_sequences(n_max: usize) -> SequenceTable {
    assert!(n_max >= 1);
    let spec = recurrence_spec(Family::Hex8);
    // alpha_0..alpha_{n_max} (index i holds alpha_i).
    let a: Vec<BigInt> = (0..=n_max)
        .map(|n| alpha_via_recurrence(n, &spec))
        .collect();
    let mut alpha = Vec::with_capacity(n_max);
    let mut beta = Vec::with_capacity(n_max);
    let mut gamma = Vec::with_capacity(n_max);
    let mut delta = Vec::with_capacity(n_max);
    let mut epsilon = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        alpha.push(a[n].clone());
        beta.push(if n >= 3 {
            &a[n] - &a[n - 1] * 2
        } else {
            BigInt::zero()
        });
        gamma.push(if n >= 4 {
            &a[n] - &a[n - 1] * 3 + &a[n - 2]
        } else {
            BigInt::zero()
        });
        epsilon.push(if n >= 6 {
            &a[n - 3] * 2 - &a[n - 4] * 5 + &a[n - 5]
        } else {
            BigInt::zero()
        });
        delta.push(match n {
            1..=4 => BigInt::zero(),
            5 => BigInt::one(),
            _ => {
                // delta_n = epsilon_{n+1} + delta_{n-1}; epsilon_{n+1} uses
                // alpha_{n-2}..alpha_{n-4}, all already computed.
                let eps_next = &a[n - 2] * 2 - &a[n - 3] * 5 + &a[n - 4];
                eps_next + &delta[n - 1 - 1]
            }
        });
    }
    SequenceTable {
        n_max,
        alpha,
        beta,
        gamma,
        delta,
        epsilon,
    }
}

/// The Hex4 count in closed form.
pub fn hex4_closed_form(n: usize) -> BigInt {
    assert!(n >= 1);
    let k = BigInt::from(n as i64 - 1);
    &k * &k + 1
}

/// The n-th Catalan number, the count of 321-avoiding permutations.
pub fn catalan(n: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..n {
        c = c * 2 * (2 * i as i64 + 1) / (i as i64 + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(values: &[i64]) -> Vec<BigInt> {
        bigs(values)
    }

    #[test]
    fn hex8_first_values() {
        assert_eq!(
            alpha_through(12, Family::Hex8),
            small(&[1, 2, 5, 14, 42, 132, 429, 1426, 4806, 16329, 55740, 190787])
        );
    }

    #[test]
    fn hex6_first_values() {
        assert_eq!(
            alpha_through(12, Family::Hex6),
            small(&[1, 2, 5, 14, 42, 128, 389, 1179, 3572, 10825, 32810, 99446])
        );
    }

    #[test]
    fn hex4_matches_closed_form() {
        for n in 1..=60 {
            assert_eq!(
                alpha_via_recurrence(n, &recurrence_spec(Family::Hex4)),
                hex4_closed_form(n),
                "n = {n}"
            );
        }
        assert_eq!(hex4_closed_form(4), BigInt::from(10));
        assert_eq!(hex4_closed_form(12), BigInt::from(122));
    }

    #[test]
    fn table_through_12() {
        let t = five_sequences(12);
        assert_eq!(
            t.beta,
            small(&[0, 0, 1, 4, 14, 48, 165, 568, 1954, 6717, 23082, 79307])
        );
        assert_eq!(
            t.gamma,
            small(&[0, 0, 0, 1, 5, 20, 75, 271, 957, 3337, 11559, 39896])
        );
        assert_eq!(
            t.delta,
            small(&[0, 0, 0, 0, 1, 6, 25, 93, 333, 1172, 4083, 14137])
        );
        assert_eq!(
            t.epsilon,
            small(&[0, 0, 0, 0, 0, 1, 5, 19, 68, 240, 839, 2911])
        );
    }

    #[test]
    fn large_indices() {
        let spec = recurrence_spec(Family::Hex8);
        assert_eq!(alpha_via_recurrence(13, &spec), BigInt::from(654044i64));
        assert_eq!(alpha_via_recurrence(14, &spec), BigInt::from(2244153i64));
        assert_eq!(
            alpha_via_recurrence(40, &spec),
            "192890452763318240452".parse().unwrap()
        );
        assert_eq!(
            alpha_via_recurrence(40, &recurrence_spec(Family::Hex6)),
            "3030952781912822958".parse().unwrap()
        );
    }

    #[test]
    fn catalan_values() {
        let c: Vec<BigInt> = (0..=8).map(catalan).collect();
        assert_eq!(c, small(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]));
        // The hexagon families first separate from the full 321 class at
        // n = 6 (Hex6) and n = 8 (Hex8).
        assert_ne!(catalan(8), BigInt::from(1426));
    }
}
