//! Permutations in one-line notation and pattern containment.
//!
//! A [`Perm`] stores the values `1..=n` in visit order; the empty permutation
//! is the unique element of S_0. Pattern containment asks for a subsequence of
//! the host that is order-isomorphic to the pattern, and is decided by a
//! backtracking search over host positions with a value-window prune: a
//! candidate host value must fall strictly between the already-matched values
//! that sandwich the current pattern entry in value order.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("values are not a rearrangement of 1..={0}")]
    NotAPermutation(usize),
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    /// Validates that `values` is a rearrangement of `1..=n`.
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            let ok = v >= 1 && (v as usize) <= n && !seen[v as usize - 1];
            if !ok {
                return Err(PermError::NotAPermutation(n));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Perm(values))
    }

    pub fn from_slice(values: &[u32]) -> Result<Self, PermError> {
        Self::new(values.to_vec())
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    pub fn empty() -> Self {
        Perm(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// True when the last entry is the maximum value `n`. The empty
    /// permutation qualifies vacuously; that convention makes the count of
    /// such permutations at length 0 equal 1, which the deletion-lemma
    /// bookkeeping relies on.
    pub fn ends_in_max(&self) -> bool {
        match self.0.last() {
            Some(&v) => v as usize == self.0.len(),
            None => true,
        }
    }

    /// Inserts the new maximum `n+1` with `j` elements to its right.
    /// `j = 0` appends at the right end; `j = n` prepends.
    pub fn insert_max(&self, j: usize) -> Perm {
        let n = self.0.len();
        assert!(j <= n, "insertion site {j} out of range for length {n}");
        let mut v = Vec::with_capacity(n + 1);
        v.extend_from_slice(&self.0[..n - j]);
        v.push(n as u32 + 1);
        v.extend_from_slice(&self.0[n - j..]);
        Perm(v)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Does `host` contain a subsequence order-isomorphic to `pattern`?
/// The empty pattern is contained in everything.
pub fn contains(host: &[u32], pattern: &[u32]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    if pattern.len() > host.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    search(host, pattern, 0, &mut chosen, None)
}

/// Containment restricted to occurrences that use the host position
/// `anchor`, which must hold the host's maximum value. Any occurrence
/// through the maximum must map it to the pattern's own maximum, so the
/// search pins that pattern entry to `anchor`.
///
/// Used by the oracle: after inserting a new maximum into a clean parent,
/// only occurrences through the insertion point can be new.
pub fn contains_at_max(host: &[u32], pattern: &[u32], anchor: usize) -> bool {
    if pattern.is_empty() {
        return true;
    }
    if pattern.len() > host.len() {
        return false;
    }
    debug_assert_eq!(host[anchor] as usize, host.len());
    let pat_max = pattern
        .iter()
        .position(|&v| v as usize == pattern.len())
        .expect("pattern is a permutation");
    let mut chosen = Vec::with_capacity(pattern.len());
    search(host, pattern, 0, &mut chosen, Some((pat_max, anchor)))
}

/// Depth-first matcher. `chosen[i]` is the host index matched to pattern
/// position `i`. `pin` forces one pattern position onto one host index.
fn search(
    host: &[u32],
    pattern: &[u32],
    p: usize,
    chosen: &mut Vec<usize>,
    pin: Option<(usize, usize)>,
) -> bool {
    if p == pattern.len() {
        return true;
    }
    // Window of admissible values for pattern position p, given the prefix.
    let mut lo = 0u32;
    let mut hi = host.len() as u32 + 1;
    for (q, &hq) in chosen.iter().enumerate() {
        let hv = host[hq];
        if pattern[q] < pattern[p] {
            lo = lo.max(hv);
        } else {
            hi = hi.min(hv);
        }
    }
    let start = chosen.last().map_or(0, |&h| h + 1);
    let (first, last) = match pin {
        Some((pp, ph)) if pp == p => (ph, ph + 1),
        Some((pp, ph)) if p < pp => (start, ph.min(host.len() - (pattern.len() - p) + 1)),
        _ => (start, host.len() - (pattern.len() - p) + 1),
    };
    if first < start || first >= last {
        return false;
    }
    for h in first..last {
        if host[h] > lo && host[h] < hi {
            chosen.push(h);
            if search(host, pattern, p + 1, chosen, pin) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
