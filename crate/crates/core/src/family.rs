//! The three forbidden-pattern families.
//!
//! Each family bundles four patterns of one length (8, 6 or 4); membership
//! additionally always requires avoiding [3,2,1]. The four length-8 patterns
//! are the octagonal ones; the length-6 and length-4 sets are their smaller
//! analogues.

use std::fmt;
use std::str::FromStr;

use crate::perm::contains;

/// The always-imposed pattern.
pub const P321: &[u32] = &[3, 2, 1];

const HEX8_PATTERNS: [&[u32]; 4] = [
    &[4, 6, 7, 1, 8, 2, 3, 5],
    &[4, 6, 7, 8, 1, 2, 3, 5],
    &[5, 6, 7, 1, 8, 2, 3, 4],
    &[5, 6, 7, 8, 1, 2, 3, 4],
];

const HEX6_PATTERNS: [&[u32]; 4] = [
    &[3, 5, 1, 6, 2, 4],
    &[3, 5, 6, 1, 2, 4],
    &[4, 5, 1, 6, 2, 3],
    &[4, 5, 6, 1, 2, 3],
];

const HEX4_PATTERNS: [&[u32]; 4] = [&[2, 1, 4, 3], &[3, 1, 4, 2], &[2, 4, 1, 3], &[3, 4, 1, 2]];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Hex8,
    Hex6,
    Hex4,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Hex8, Family::Hex6, Family::Hex4];

    /// The four forbidden patterns beyond [3,2,1].
    pub fn patterns(self) -> &'static [&'static [u32]] {
        match self {
            Family::Hex8 => &HEX8_PATTERNS,
            Family::Hex6 => &HEX6_PATTERNS,
            Family::Hex4 => &HEX4_PATTERNS,
        }
    }

    /// Number of components in this family's generating-tree label:
    /// (x,k,l,m) for Hex8, (x,l,m) for Hex6, (x,m) for Hex4.
    pub fn label_arity(self) -> usize {
        match self {
            Family::Hex8 => 4,
            Family::Hex6 => 3,
            Family::Hex4 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Hex8 => "hex8",
            Family::Hex6 => "hex6",
            Family::Hex4 => "hex4",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hex8" => Ok(Family::Hex8),
            "hex6" => Ok(Family::Hex6),
            "hex4" => Ok(Family::Hex4),
            other => Err(format!(
                "unknown family '{other}' (expected hex8, hex6 or hex4)"
            )),
        }
    }
}

/// Membership in the family's avoidance class: `w` avoids [3,2,1] and every
/// family pattern.
pub fn is_member(w: &[u32], family: Family) -> bool {
    !contains(w, P321) && family.patterns().iter().all(|p| !contains(w, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns_avoid_321_themselves() {
        for family in Family::ALL {
            for p in family.patterns() {
                assert!(!contains(p, P321), "{p:?} contains 321");
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(!is_member(&[4, 6, 7, 1, 8, 2, 3, 5], Family::Hex8));
        for n in 0..=9 {
            let id: Vec<u32> = (1..=n).collect();
            for family in Family::ALL {
                assert!(is_member(&id, family));
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for family in Family::ALL {
            assert_eq!(family.name().parse::<Family>().unwrap(), family);
        }
        assert!("hex5".parse::<Family>().is_err());
    }
}
