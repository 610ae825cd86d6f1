//! Basic-subsequence decomposition and generating-tree labels.
//!
//! A 321-avoiding permutation splits into two increasing subsequences: its
//! right-to-left minima (`b1`, always including the last entry) and the rest
//! (`b2`). With K < L < M the three largest values of `b2` (zero-filled when
//! `b2` has fewer than three entries), the active region is the suffix
//! strictly to the right of M's position, or the whole permutation when `b2`
//! is empty. The label is
//!
//! ```text
//! (x, k, l, m) = (|active|, #active > K, #active > L, #active > M)
//! ```
//!
//! Since the last entry of any permutation is a right-to-left minimum, M is
//! never last and x >= 1 always; the symbol (0,0,0,0) used by the sequence
//! table is not a label but the end-in-max convention, see
//! [`crate::perm::Perm::ends_in_max`].

use std::fmt;

use thiserror::Error;

use crate::family::{Family, P321};
use crate::perm::{contains, Perm};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error(
        "permutation contains [3,2,1]; the two-increasing-subsequence decomposition is undefined"
    )]
    Contains321,
    #[error("the empty permutation has no label")]
    Empty,
}

/// Split of a 321-avoiding permutation into right-to-left minima and rest.
/// Positions are 1-indexed; `m_position` is 0 when `b2` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Right-to-left minima as (position, value), in position order.
    pub b1: Vec<(usize, u32)>,
    /// Remaining entries as (position, value), in position order.
    pub b2: Vec<(usize, u32)>,
    pub k_value: u32,
    pub l_value: u32,
    pub m_value: u32,
    pub m_position: usize,
}

/// Generating-tree label (x,k,l,m). Invariant: x >= k >= l >= m.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub x: u32,
    pub k: u32,
    pub l: u32,
    pub m: u32,
}

impl Label {
    pub fn new(x: u32, k: u32, l: u32, m: u32) -> Self {
        Label { x, k, l, m }
    }

    pub fn is_valid(&self) -> bool {
        self.x >= self.k && self.k >= self.l && self.l >= self.m
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.x, self.k, self.l, self.m)
    }
}

/// Label key used by histograms and the label DP: the family's truncation of
/// the 4-tuple, padded with zeros. Hex8 keeps (x,k,l,m); Hex6 keeps (x,l,m);
/// Hex4 keeps (x,m).
pub type LabelKey = [u32; 4];

pub fn key_of(label: Label, family: Family) -> LabelKey {
    match family {
        Family::Hex8 => [label.x, label.k, label.l, label.m],
        Family::Hex6 => [label.x, label.l, label.m, 0],
        Family::Hex4 => [label.x, label.m, 0, 0],
    }
}

pub fn format_key(key: LabelKey, family: Family) -> String {
    let parts: Vec<String> = key[..family.label_arity()]
        .iter()
        .map(|v| v.to_string())
        .collect();
    format!("({})", parts.join(","))
}

pub fn decompose(w: &Perm) -> Result<Decomposition, LabelError> {
    if w.is_empty() {
        return Err(LabelError::Empty);
    }
    if contains(w.values(), P321) {
        return Err(LabelError::Contains321);
    }
    let values = w.values();
    let n = values.len();
    let mut is_min = vec![false; n];
    let mut min_so_far = u32::MAX;
    for i in (0..n).rev() {
        if values[i] < min_so_far {
            is_min[i] = true;
            min_so_far = values[i];
        }
    }
    let mut b1 = Vec::new();
    let mut b2 = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        if is_min[i] {
            b1.push((i + 1, v));
        } else {
            b2.push((i + 1, v));
        }
    }
    // b2 increases left to right (a descent inside b2 would make a 321 with
    // the smaller right-to-left minimum below it), so the three largest
    // values are the three rightmost.
    let pick = |back: usize| -> u32 {
        if b2.len() > back {
            b2[b2.len() - 1 - back].1
        } else {
            0
        }
    };
    let (m_value, l_value, k_value) = (pick(0), pick(1), pick(2));
    let m_position = b2.last().map_or(0, |&(pos, _)| pos);
    Ok(Decomposition {
        b1,
        b2,
        k_value,
        l_value,
        m_value,
        m_position,
    })
}

pub fn label_of(w: &Perm) -> Result<Label, LabelError> {
    let d = decompose(w)?;
    Ok(label_from_parts(w, &d))
}

fn label_from_parts(w: &Perm, d: &Decomposition) -> Label {
    let active = &w.values()[d.m_position..];
    let count_above = |t: u32| active.iter().filter(|&&v| v > t).count() as u32;
    Label {
        x: active.len() as u32,
        k: count_above(d.k_value),
        l: count_above(d.l_value),
        m: count_above(d.m_value),
    }
}

pub fn key_of_perm(w: &Perm, family: Family) -> Result<LabelKey, LabelError> {
    Ok(key_of(label_of(w)?, family))
}

/// Deletes the k active-region values exceeding K (the K-elements) and
/// rescales the rest to `{1..n-k}`. An input with label (x,k,l,m) lands on
/// one with label (x-k,0,0,0), where x-k = 0 means the image ends in its
/// maximum.
pub fn delete_k_elements(w: &Perm) -> Result<Perm, LabelError> {
    let d = decompose(w)?;
    let values = w.values();
    let kept: Vec<u32> = values
        .iter()
        .enumerate()
        .filter(|&(i, &v)| i < d.m_position || v <= d.k_value)
        .map(|(_, &v)| v)
        .collect();
    let mut sorted = kept.clone();
    sorted.sort_unstable();
    let rescaled: Vec<u32> = kept
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() as u32 + 1)
        .collect();
    Ok(Perm::new(rescaled).expect("rescaling a subsequence yields a permutation"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(values: &[u32]) -> Perm {
        Perm::from_slice(values).unwrap()
    }

    #[test]
    fn decompose_worked_example() {
        let d = decompose(&perm(&[4, 6, 7, 1, 8, 2, 3, 5])).unwrap();
        let b1_values: Vec<u32> = d.b1.iter().map(|&(_, v)| v).collect();
        let b2_values: Vec<u32> = d.b2.iter().map(|&(_, v)| v).collect();
        assert_eq!(b1_values, vec![1, 2, 3, 5]);
        assert_eq!(b2_values, vec![4, 6, 7, 8]);
        assert_eq!((d.k_value, d.l_value, d.m_value), (6, 7, 8));
        assert_eq!(d.m_position, 5);
    }

    #[test]
    fn decompose_identity_and_swap() {
        let d = decompose(&perm(&[1, 2, 3, 4])).unwrap();
        assert!(d.b2.is_empty());
        assert_eq!(
            (d.k_value, d.l_value, d.m_value, d.m_position),
            (0, 0, 0, 0)
        );

        let d = decompose(&perm(&[2, 1])).unwrap();
        assert_eq!(d.b1, vec![(2, 1)]);
        assert_eq!(d.b2, vec![(1, 2)]);
        assert_eq!((d.k_value, d.l_value, d.m_value), (0, 0, 2));
    }

    #[test]
    fn decompose_rejects_321() {
        assert_eq!(
            decompose(&perm(&[3, 2, 1])).unwrap_err(),
            LabelError::Contains321
        );
        assert_eq!(decompose(&Perm::empty()).unwrap_err(), LabelError::Empty);
    }

    #[test]
    fn label_examples() {
        assert_eq!(
            label_of(&perm(&[4, 6, 7, 1, 8, 2, 3, 5])).unwrap(),
            Label::new(3, 0, 0, 0)
        );
        for n in 1..=8u32 {
            let id: Vec<u32> = (1..=n).collect();
            assert_eq!(label_of(&perm(&id)).unwrap(), Label::new(n, n, n, n));
        }
        assert_eq!(label_of(&perm(&[2, 1])).unwrap(), Label::new(1, 1, 1, 0));
        assert_eq!(label_of(&perm(&[2, 1, 3])).unwrap(), Label::new(2, 2, 2, 1));
    }

    #[test]
    fn delete_k_examples() {
        // k = 0: nothing to delete.
        let w = perm(&[4, 6, 7, 1, 8, 2, 3, 5]);
        assert_eq!(delete_k_elements(&w).unwrap(), w);
        // [2,1,3] has label (2,2,2,1) with K = 0: both active values go and
        // the image [1] ends in its maximum, as the deletion lemma needs.
        assert_eq!(delete_k_elements(&perm(&[2, 1, 3])).unwrap(), perm(&[1]));
        // The identity deletes everything.
        assert_eq!(
            delete_k_elements(&Perm::identity(4)).unwrap(),
            Perm::empty()
        );
    }

    #[test]
    fn key_truncation() {
        let label = Label::new(4, 3, 2, 1);
        assert_eq!(key_of(label, Family::Hex8), [4, 3, 2, 1]);
        assert_eq!(key_of(label, Family::Hex6), [4, 2, 1, 0]);
        assert_eq!(key_of(label, Family::Hex4), [4, 1, 0, 0]);
        assert_eq!(format_key([4, 2, 1, 0], Family::Hex6), "(4,2,1)");
    }
}
