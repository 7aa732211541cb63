//! Exact arithmetic on cofinite integer sets.
//!
//! Every carrier in this crate — a semigroup, the value set of a monomial
//! ideal, a canonical ideal, a blowup — is a set of integers that is bounded
//! below and contains every integer from some threshold on.  [`CofiniteSet`]
//! stores the members below that threshold explicitly and keeps the threshold
//! minimal, so set equality is plain field equality and every length the
//! theory asks for is a finite set difference.
//!
//! The sumset realizes products of monomial ideals (`I·J ↔ A+B`), the colon
//! realizes fractional quotients (`{z : z+B ⊆ A}`), and `length_between`
//! realizes `ℓ(A/B)`.  Each operation documents an a-priori threshold bound
//! for its output, so nothing is ever truncated silently.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from set operations with verified preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    /// The claimed subset contains an element the superset lacks.
    #[error("containment failure: {witness} lies in the claimed subset but not in the superset")]
    NotASubset { witness: i64 },
}

/// A set of integers containing every integer at or above a threshold.
///
/// Canonical form:
/// - `below` is strictly increasing and every entry is `< threshold`;
/// - `threshold` is minimal, i.e. `threshold - 1` is not a member.
///
/// Negative members are first-class (canonical shifts and colon results dip
/// below zero).  The set is always nonempty and bounded below.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "SetRepr", into = "SetRepr")]
pub struct CofiniteSet {
    below: Vec<i64>,
    threshold: i64,
}

/// Wire form used in the CLI JSON schema: `{"below": [...], "all_from": n}`.
#[derive(Clone, Serialize, Deserialize)]
struct SetRepr {
    below: Vec<i64>,
    all_from: i64,
}

impl From<SetRepr> for CofiniteSet {
    fn from(r: SetRepr) -> Self {
        CofiniteSet::from_parts(r.below, r.all_from)
    }
}

impl From<CofiniteSet> for SetRepr {
    fn from(s: CofiniteSet) -> Self {
        SetRepr {
            below: s.below,
            all_from: s.threshold,
        }
    }
}

impl CofiniteSet {
    /// Builds the set `members ∪ [all_from, ∞)` and normalizes it.
    ///
    /// Normalizing twice equals normalizing once: members are sorted and
    /// deduplicated, entries at or above the threshold are absorbed into the
    /// tail, and the threshold is lowered while `threshold - 1` is a stored
    /// member.
    pub fn from_parts(members: impl Into<Vec<i64>>, all_from: i64) -> Self {
        let mut below = members.into();
        below.sort_unstable();
        below.dedup();
        let mut threshold = all_from;
        below.retain(|&x| x < threshold);
        while below.last() == Some(&(threshold - 1)) {
            below.pop();
            threshold -= 1;
        }
        CofiniteSet { below, threshold }
    }

    /// The half line `[start, ∞)`.
    pub fn all_from(start: i64) -> Self {
        CofiniteSet {
            below: Vec::new(),
            threshold: start,
        }
    }

    /// The nonnegative integers.
    pub fn naturals() -> Self {
        Self::all_from(0)
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.threshold || self.below.binary_search(&x).is_ok()
    }

    /// Least member.
    pub fn min_element(&self) -> i64 {
        self.below.first().copied().unwrap_or(self.threshold)
    }

    /// Every integer at or above this value is a member; minimal.
    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    /// The explicitly stored members (all below the threshold), increasing.
    pub fn members_below(&self) -> &[i64] {
        &self.below
    }

    /// Members strictly below `end`, in increasing order.  Includes the part
    /// of the tail `[threshold, end)` when `end` exceeds the threshold.
    pub fn members_up_to(&self, end: i64) -> Vec<i64> {
        let mut v: Vec<i64> = self.below.iter().copied().filter(|&x| x < end).collect();
        v.extend(self.threshold..end);
        v
    }

    /// Translate every member by `k`.
    pub fn shift(&self, k: i64) -> Self {
        CofiniteSet {
            below: self.below.iter().map(|x| x + k).collect(),
            threshold: self.threshold + k,
        }
    }

    /// The set without `x`.  Removing a tail element materializes the part of
    /// the tail below it.
    pub fn remove(&self, x: i64) -> Self {
        if x >= self.threshold {
            let mut below = self.below.clone();
            below.extend(self.threshold..x);
            CofiniteSet {
                below,
                threshold: x + 1,
            }
        } else if let Ok(i) = self.below.binary_search(&x) {
            let mut below = self.below.clone();
            below.remove(i);
            CofiniteSet {
                below,
                threshold: self.threshold,
            }
        } else {
            self.clone()
        }
    }

    /// `{a + b : a ∈ self, b ∈ other}`.  Output threshold ≤ `t_A + t_B`.
    pub fn sumset(&self, other: &Self) -> Self {
        let t = self.threshold + other.threshold;
        let ys = other.members_up_to(t - self.min_element());
        let mut below = Vec::new();
        for x in self.members_up_to(t - other.min_element()) {
            let limit = t - x;
            for &y in ys.iter().take_while(|&&y| y < limit) {
                below.push(x + y);
            }
        }
        Self::from_parts(below, t)
    }

    /// Does `self + other ⊆ within` hold?  Returns a witness pair on failure.
    ///
    /// Only sums below `within.threshold()` need inspection; the rest land in
    /// the tail.
    pub fn sumset_subset_witness(&self, other: &Self, within: &Self) -> Option<(i64, i64)> {
        let t = within.threshold();
        for x in self.members_up_to(t - other.min_element()) {
            for y in other.members_up_to(t - x) {
                if !within.contains(x + y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// `{z ∈ ℤ : z + other ⊆ self}` — the value-set form of the fractional
    /// colon `F₁ : F₂`.  The result contains every `z ≥ t_A − min B`.
    pub fn colon(&self, other: &Self) -> Self {
        let t = self.threshold - other.min_element();
        let lo = self.min_element() - other.min_element();
        let mut below = Vec::new();
        for z in lo..t {
            let ok = other
                .members_up_to(self.threshold - z)
                .iter()
                .all(|&y| self.contains(z + y));
            if ok {
                below.push(z);
            }
        }
        Self::from_parts(below, t)
    }

    /// The `n`-term iterated sumset `self + ... + self`, computed by doubling.
    ///
    /// `n` must be at least 1: the empty sumset `{0}` is not cofinite and has
    /// no representation here; ideal powers handle `n = 0` one level up, where
    /// the unit ideal's value set is the ambient semigroup.
    pub fn n_fold_sum(&self, n: u32) -> Self {
        assert!(n >= 1, "n_fold_sum requires n >= 1");
        let mut acc: Option<CofiniteSet> = None;
        let mut base = self.clone();
        let mut k = n;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.sumset(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.sumset(&base);
        }
        acc.expect("n >= 1")
    }

    /// First element of `self` missing from `other`, if any.
    pub fn subset_witness(&self, other: &Self) -> Option<i64> {
        self.members_up_to(self.threshold.max(other.threshold))
            .into_iter()
            .find(|&x| !other.contains(x))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.subset_witness(other).is_none()
    }

    /// The finite difference `self ∖ other`, increasing.  Always finite: every
    /// member at or above `other.threshold()` lies in `other`.
    pub fn difference(&self, other: &Self) -> Vec<i64> {
        self.members_up_to(other.threshold())
            .into_iter()
            .filter(|&x| !other.contains(x))
            .collect()
    }

    /// `#(self ∖ smaller)` after verifying `smaller ⊆ self`.
    pub fn length_between(&self, smaller: &Self) -> Result<i64, SetError> {
        if let Some(witness) = smaller.subset_witness(self) {
            return Err(SetError::NotASubset { witness });
        }
        Ok(self.difference(smaller).len() as i64)
    }

    pub fn union(&self, other: &Self) -> Self {
        let t = self.threshold.min(other.threshold);
        let mut below: Vec<i64> = self.below.iter().copied().filter(|&x| x < t).collect();
        below.extend(other.below.iter().copied().filter(|&x| x < t));
        Self::from_parts(below, t)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let t = self.threshold.max(other.threshold);
        let below: Vec<i64> = self
            .members_up_to(t)
            .into_iter()
            .filter(|&x| other.contains(x))
            .collect();
        Self::from_parts(below, t)
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for x in &self.below {
            write!(f, "{x}, ")?;
        }
        write!(f, "{}..}}", self.threshold)
    }
}

impl fmt::Debug for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
