//! Enumeration of 321- and hexagon-pattern-avoiding permutations.
//!
//! The library counts three families of restricted permutations (named by
//! the length of their longest forbidden patterns: Hex8, Hex6, Hex4) by
//! four fully independent routes:
//!
//! 1. [`oracle`] materializes the pruned generating tree by brute-force
//!    pattern containment; slow, but it is the ground truth.
//! 2. [`dp`] replaces permutations by their Schensted-style labels and
//!    advances a label multiset with the succession rules.
//! 3. [`rec`] evaluates constant-coefficient linear recurrences over
//!    arbitrary-precision integers.
//! 4. [`spectral`] extracts the recurrence spectra and evaluates the
//!    closed forms, including nearest-integer rounding of the dominant
//!    part.
//!
//! [`checks`] cross-validates all four against each other and against
//! published reference values.

pub mod checks;
pub mod dp;
pub mod family;
pub mod fixed;
pub mod labels;
pub mod oracle;
pub mod perm;
pub mod rec;
pub mod spectral;

pub use family::Family;
pub use labels::{Decomposition, Label, LabelKey};
pub use perm::Perm;
