//! Numerical semigroups `H = ⟨a1, ..., an⟩` and their classical invariants.
//!
//! Construction runs an Apéry-set relaxation with respect to the multiplicity,
//! which yields the Frobenius number, the conductor, the gap set, and the
//! pseudo-Frobenius numbers without any heuristic bounds.  The value set is a
//! [`CofiniteSet`] whose threshold is exactly the conductor.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cofinite::CofiniteSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("gcd of generators is {gcd}: not a numerical semigroup of finite genus")]
    NotFiniteGenus { gcd: i64 },
    #[error("value set is not a numerical semigroup: {0}")]
    NotASemigroup(String),
    #[error("Apéry sets are taken with respect to a nonzero element of H; {0} is not one")]
    BadAperyModulus(i64),
}

/// A numerical semigroup with its cached classical invariants.
///
/// Conventions for the full semigroup `ℕ` (the DVR case): `f = -1`, `c = 0`,
/// no gaps, `PF = {-1}` and hence type 1.
#[derive(Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    minimal_generators: Vec<i64>,
    elements: CofiniteSet,
    frobenius: i64,
    gaps: Vec<i64>,
    apery: Vec<i64>,
    pseudo_frobenius: Vec<i64>,
}

impl NumericalSemigroup {
    /// Builds `⟨generators⟩`.  The list may be redundant; the minimal
    /// generating set is extracted.
    pub fn from_generators(generators: &[i64]) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if let Some(&bad) = generators.iter().find(|&&g| g <= 0) {
            return Err(SemigroupError::NonPositiveGenerator(bad));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0i64, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::NotFiniteGenus { gcd: g });
        }

        let e = gens[0];
        // Least element of H in each residue class mod e, by relaxation.
        let mut apery = vec![i64::MAX; e as usize];
        apery[0] = 0;
        let mut changed = true;
        while changed {
            changed = false;
            for r in 0..e as usize {
                if apery[r] == i64::MAX {
                    continue;
                }
                for &gen in &gens {
                    let v = apery[r] + gen;
                    let s = (v % e) as usize;
                    if v < apery[s] {
                        apery[s] = v;
                        changed = true;
                    }
                }
            }
        }
        debug_assert!(
            apery.iter().all(|&w| w < i64::MAX),
            "gcd 1 fills every class"
        );

        let frobenius = apery.iter().max().unwrap() - e;
        let conductor = frobenius + 1;
        let members: Vec<i64> = (0..conductor)
            .filter(|&x| apery[(x % e) as usize] <= x)
            .collect();
        let elements = CofiniteSet::from_parts(members, conductor);

        // Minimal generators form a subset of any generating set.
        let minimal_generators: Vec<i64> = gens
            .iter()
            .copied()
            .filter(|&x| is_minimal_generator(&elements, e, x))
            .collect();

        Ok(Self::assemble(minimal_generators, elements, apery))
    }

    /// Builds a semigroup from its value set, verifying closure under
    /// addition and extracting the minimal generators.
    pub fn from_value_set(elements: CofiniteSet) -> Result<Self, SemigroupError> {
        if !elements.contains(0) {
            return Err(SemigroupError::NotASemigroup("0 is missing".into()));
        }
        if elements.min_element() < 0 {
            return Err(SemigroupError::NotASemigroup(format!(
                "contains the negative element {}",
                elements.min_element()
            )));
        }
        if let Some((x, y)) = elements.sumset_subset_witness(&elements, &elements) {
            return Err(SemigroupError::NotASemigroup(format!(
                "not closed under addition: {x} + {y} is missing"
            )));
        }
        let conductor = elements.threshold();
        let e = if conductor == 0 {
            1
        } else {
            *elements
                .members_below()
                .iter()
                .find(|&&x| x > 0)
                .unwrap_or(&conductor)
        };
        // Candidate minimal generators lie in [e, c + e]: anything larger is
        // e plus a nonzero element of H.
        let minimal_generators: Vec<i64> = elements
            .members_up_to(conductor + e + 1)
            .into_iter()
            .filter(|&x| x > 0 && is_minimal_generator(&elements, e, x))
            .collect();
        let mut apery = vec![i64::MAX; e as usize];
        for x in elements.members_up_to(conductor + e) {
            let r = (x % e) as usize;
            if apery[r] == i64::MAX {
                apery[r] = x;
            }
        }
        Ok(Self::assemble(minimal_generators, elements, apery))
    }

    fn assemble(minimal_generators: Vec<i64>, elements: CofiniteSet, apery: Vec<i64>) -> Self {
        let conductor = elements.threshold();
        let frobenius = conductor - 1;
        let gaps: Vec<i64> = (0..conductor).filter(|&x| !elements.contains(x)).collect();
        let e = apery.len() as i64;
        // PF(H) = { w - e : w maximal in the Apéry set under the order
        // w ≤ w'  iff  w' - w ∈ H }.
        let pseudo_frobenius: Vec<i64> = {
            let mut pf: Vec<i64> = apery
                .iter()
                .filter(|&&w| {
                    apery
                        .iter()
                        .all(|&w2| w2 == w || !elements.contains(w2 - w))
                })
                .map(|&w| w - e)
                .collect();
            pf.sort_unstable();
            pf
        };
        NumericalSemigroup {
            minimal_generators,
            elements,
            frobenius,
            gaps,
            apery,
            pseudo_frobenius,
        }
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    /// The value set as a cofinite set; its threshold is the conductor.
    pub fn elements(&self) -> &CofiniteSet {
        &self.elements
    }

    /// Largest gap; `-1` for the full semigroup.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `f + 1`: least `n` with `[n, ∞) ⊆ H`.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> i64 {
        self.gaps.len() as i64
    }

    /// Least positive element (1 for `ℕ`).
    pub fn multiplicity(&self) -> i64 {
        self.apery.len() as i64
    }

    pub fn embedding_dim(&self) -> i64 {
        self.minimal_generators.len() as i64
    }

    /// Apéry set with respect to the multiplicity: entry `r` is the least
    /// element congruent to `r`.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    /// Apéry set with respect to any nonzero element `m` of `H`.
    pub fn apery_with_respect_to(&self, m: i64) -> Result<Vec<i64>, SemigroupError> {
        if m <= 0 || !self.elements.contains(m) {
            return Err(SemigroupError::BadAperyModulus(m));
        }
        let mut ap = vec![i64::MAX; m as usize];
        for x in self.elements.members_up_to(self.conductor() + m) {
            let r = (x % m) as usize;
            if ap[r] == i64::MAX {
                ap[r] = x;
            }
        }
        Ok(ap)
    }

    /// Gaps `x` with `x + h ∈ H` for every nonzero `h ∈ H`; for `ℕ` this is
    /// `{-1}` by convention.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pseudo_frobenius
    }

    /// The Cohen–Macaulay type `r(R) = #PF(H)`; 1 for the DVR.
    pub fn cm_type(&self) -> i64 {
        self.pseudo_frobenius.len() as i64
    }

    /// Is this the full semigroup `ℕ` (semigroup ring a DVR)?
    pub fn is_dvr(&self) -> bool {
        self.frobenius == -1
    }

    /// Value set of the maximal ideal: the nonzero elements.
    pub fn maximal_ideal_set(&self) -> CofiniteSet {
        self.elements.remove(0)
    }

    /// Value set of the canonical ideal: `{x : f - x ∉ H}`, normalized to
    /// have minimum 0; equals `H` itself exactly when `H` is symmetric.
    pub fn canonical_set(&self) -> CofiniteSet {
        let f = self.frobenius;
        let below: Vec<i64> = (0..=f)
            .filter(|&x| !self.elements.contains(f - x))
            .collect();
        CofiniteSet::from_parts(below, self.conductor())
    }

    /// Gap duality: `x ∈ H  iff  f - x ∉ H` over `0 ≤ x ≤ f`.  Equivalent to
    /// the semigroup ring being Gorenstein, and to type 1.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|x| self.elements.contains(x) != self.elements.contains(f - x))
    }

    /// Almost symmetry: `M₊ + K ⊆ H` for the canonical set `K`.  Symmetric
    /// semigroups (and `ℕ`) qualify.
    pub fn is_almost_symmetric(&self) -> bool {
        let k = self.canonical_set();
        self.maximal_ideal_set()
            .sumset_subset_witness(&k, &self.elements)
            .is_none()
    }

    /// Deterministic text form `⟨a1,a2,...⟩`; reparsed by [`FromStr`].
    ///
    /// [`FromStr`]: std::str::FromStr
    pub fn descriptor(&self) -> String {
        let gens: Vec<String> = self
            .minimal_generators
            .iter()
            .map(|g| g.to_string())
            .collect();
        format!("⟨{}⟩", gens.join(","))
    }
}

impl std::fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "NumericalSemigroup{}", self.descriptor())
    }
}

impl std::str::FromStr for NumericalSemigroup {
    type Err = SemigroupError;

    /// Parses `"3,7,8"` as well as the display form `"⟨3,7,8⟩"` / `"<3,7,8>"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s
            .trim()
            .trim_start_matches(['⟨', '<'])
            .trim_end_matches(['⟩', '>']);
        let gens: Result<Vec<i64>, _> = trimmed
            .split(',')
            .map(|part| part.trim().parse::<i64>())
            .collect();
        match gens {
            Ok(g) => NumericalSemigroup::from_generators(&g),
            Err(_) => Err(SemigroupError::NotASemigroup(format!(
                "cannot parse generator list {s:?}"
            ))),
        }
    }
}

/// Summary block used in reports and in the CLI JSON schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupInfo {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: i64,
    pub multiplicity: i64,
    pub embedding_dim: i64,
    pub cm_type: i64,
    pub gaps: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    pub apery: Vec<i64>,
    pub symmetric: bool,
    pub almost_symmetric: bool,
}

impl SemigroupInfo {
    pub fn of(h: &NumericalSemigroup) -> Self {
        SemigroupInfo {
            generators: h.minimal_generators().to_vec(),
            frobenius: h.frobenius(),
            conductor: h.conductor(),
            genus: h.genus(),
            multiplicity: h.multiplicity(),
            embedding_dim: h.embedding_dim(),
            cm_type: h.cm_type(),
            gaps: h.gaps().to_vec(),
            pseudo_frobenius: h.pseudo_frobenius().to_vec(),
            apery: h.apery().to_vec(),
            symmetric: h.is_symmetric(),
            almost_symmetric: h.is_almost_symmetric(),
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `x` is a minimal generator iff no nonzero `h ∈ H` below `x` has `x - h ∈ H`.
fn is_minimal_generator(elements: &CofiniteSet, e: i64, x: i64) -> bool {
    if x <= 0 || !elements.contains(x) {
        return false;
    }
    for h in elements.members_up_to(x - e + 1) {
        if h == 0 {
            continue;
        }
        if h > x / 2 {
            break;
        }
        if elements.contains(x - h) {
            return false;
        }
    }
    true
}

/// Yields every numerical semigroup of genus at most `genus_max`, exactly
/// once, ordered by genus and then lexicographically by gap set.
///
/// The stream walks the standard semigroup tree: each child removes one
/// minimal generator larger than the Frobenius number of its parent.
pub fn enumerate_by_genus(genus_max: u32) -> impl Iterator<Item = NumericalSemigroup> {
    GenusIter {
        level: vec![NumericalSemigroup::from_generators(&[1]).expect("ℕ")],
        idx: 0,
        genus: 0,
        genus_max,
    }
}

struct GenusIter {
    level: Vec<NumericalSemigroup>,
    idx: usize,
    genus: u32,
    genus_max: u32,
}

impl Iterator for GenusIter {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        loop {
            if self.idx < self.level.len() {
                self.idx += 1;
                return Some(self.level[self.idx - 1].clone());
            }
            if self.genus >= self.genus_max {
                return None;
            }
            let mut next_level = Vec::new();
            for h in &self.level {
                let f = h.frobenius();
                for &g in h.minimal_generators() {
                    if g > f {
                        let child = NumericalSemigroup::from_value_set(h.elements().remove(g))
                            .expect("removing a minimal generator above f keeps closure");
                        next_level.push(child);
                    }
                }
            }
            next_level.sort_by(|a, b| a.gaps().cmp(b.gaps()));
            self.level = next_level;
            self.idx = 0;
            self.genus += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn construct_357() {
        let h = NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap();
        assert_eq!(h.frobenius(), 4);
        assert_eq!(h.conductor(), 5);
        assert_eq!(h.gaps(), &[1, 2, 4]);
        assert_eq!(h.genus(), 3);
        assert_eq!(h.pseudo_frobenius(), &[2, 4]);
        assert_eq!(h.cm_type(), 2);
        assert_eq!(h.multiplicity(), 3);
        assert_eq!(h.embedding_dim(), 3);
        assert_eq!(h.minimal_generators(), &[3, 5, 7]);
    }

    #[test]
    fn construct_full_semigroup() {
        let h = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert!(h.is_dvr());
        assert_eq!(h.frobenius(), -1);
        assert_eq!(h.conductor(), 0);
        assert_eq!(h.genus(), 0);
        assert_eq!(h.cm_type(), 1);
        assert_eq!(h.pseudo_frobenius(), &[-1]);
        assert!(h.is_symmetric());
        assert!(h.is_almost_symmetric());
    }

    #[test]
    fn construct_378_matches_frozen_values() {
        let h = NumericalSemigroup::from_generators(&[3, 7, 8]).unwrap();
        assert_eq!(h.frobenius(), 5);
        assert_eq!(h.conductor(), 6);
        assert_eq!(h.gaps(), &[1, 2, 4, 5]);
        assert_eq!(h.genus(), 4);
        assert_eq!(h.cm_type(), 2);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let h = NumericalSemigroup::from_generators(&[3, 5, 7, 8, 10]).unwrap();
        assert_eq!(h.minimal_generators(), &[3, 5, 7]);
        let k = NumericalSemigroup::from_generators(&[2, 4, 7]).unwrap();
        assert_eq!(k.minimal_generators(), &[2, 7]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(SemigroupError::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(SemigroupError::NotFiniteGenus { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(SemigroupError::NonPositiveGenerator(0))
        );
    }

    #[test]
    fn symmetry_examples() {
        assert!(NumericalSemigroup::from_generators(&[3, 5])
            .unwrap()
            .is_symmetric());
        assert!(!NumericalSemigroup::from_generators(&[3, 4, 5])
            .unwrap()
            .is_symmetric());
        assert!(NumericalSemigroup::from_generators(&[1])
            .unwrap()
            .is_symmetric());
    }

    #[test]
    fn almost_symmetry_examples() {
        assert!(NumericalSemigroup::from_generators(&[3, 4, 5])
            .unwrap()
            .is_almost_symmetric());
        assert!(!NumericalSemigroup::from_generators(&[3, 7, 8])
            .unwrap()
            .is_almost_symmetric());
        assert!(NumericalSemigroup::from_generators(&[4, 7, 9])
            .unwrap()
            .is_almost_symmetric());
    }

    #[test]
    fn apery_has_one_element_per_class() {
        for gens in [vec![3, 5, 7], vec![3, 7, 8], vec![4, 7, 9], vec![6, 7, 29]] {
            let h = NumericalSemigroup::from_generators(&gens).unwrap();
            let e = h.multiplicity();
            let ap = h.apery();
            assert_eq!(ap.len() as i64, e);
            for (r, &w) in ap.iter().enumerate() {
                assert_eq!(w.rem_euclid(e), r as i64);
                assert!(h.elements().contains(w));
                assert!(w < e || !h.elements().contains(w - e));
            }
            assert_eq!(*ap.iter().max().unwrap(), h.frobenius() + e);
        }
    }

    #[test]
    fn apery_with_other_modulus() {
        let h = NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap();
        let ap5 = h.apery_with_respect_to(5).unwrap();
        assert_eq!(ap5, vec![0, 6, 7, 3, 9]);
        assert!(h.apery_with_respect_to(4).is_err());
    }

    #[test]
    fn parse_text_forms() {
        let a: NumericalSemigroup = "3,7,8".parse().unwrap();
        let b: NumericalSemigroup = "⟨3, 7, 8⟩".parse().unwrap();
        let c: NumericalSemigroup = "<3,7,8>".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.descriptor().parse::<NumericalSemigroup>().unwrap(), a);
        assert!("3,x".parse::<NumericalSemigroup>().is_err());
    }

    /// Brute-force census: genus-g gap sets are the g-subsets of [1, 2g]
    /// whose complement is closed under addition.
    fn brute_force_count(genus: usize) -> usize {
        if genus == 0 {
            return 1;
        }
        let bound = 2 * genus as i64;
        let mut count = 0usize;
        let mut chosen = Vec::new();
        fn rec(start: i64, left: usize, bound: i64, chosen: &mut Vec<i64>, count: &mut usize) {
            if left == 0 {
                let is_gap = |x: i64| chosen.contains(&x);
                let max_gap = *chosen.last().unwrap();
                let closed = (1..=max_gap)
                    .all(|x| is_gap(x) || (1..=max_gap - x).all(|y| is_gap(y) || !is_gap(x + y)));
                if closed {
                    *count += 1;
                }
                return;
            }
            for x in start..=bound {
                chosen.push(x);
                rec(x + 1, left - 1, bound, chosen, count);
                chosen.pop();
            }
        }
        rec(1, genus, bound, &mut chosen, &mut count);
        count
    }

    #[test]
    fn enumeration_counts_match_census_and_brute_force() {
        let census = [1usize, 1, 2, 4, 7, 12, 23, 39];
        let mut per_genus = vec![0usize; census.len()];
        for h in enumerate_by_genus(7) {
            per_genus[h.genus() as usize] += 1;
        }
        assert_eq!(per_genus, census);
        for (g, &want) in census.iter().enumerate() {
            assert_eq!(brute_force_count(g), want, "brute force at genus {g}");
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_duplicate_free() {
        let first: Vec<Vec<i64>> = enumerate_by_genus(5).map(|h| h.gaps().to_vec()).collect();
        let second: Vec<Vec<i64>> = enumerate_by_genus(5).map(|h| h.gaps().to_vec()).collect();
        assert_eq!(first, second);
        let distinct: BTreeSet<Vec<i64>> = first.iter().cloned().collect();
        assert_eq!(distinct.len(), first.len());
        // Ordered by genus, then lexicographically by gap set.
        let keys: Vec<(usize, Vec<i64>)> = first.iter().map(|g| (g.len(), g.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn enumerated_semigroups_satisfy_invariants() {
        for h in enumerate_by_genus(10) {
            let f = h.frobenius();
            assert_eq!(h.conductor(), f + 1);
            assert!(h.elements().contains(0));
            assert!(h
                .elements()
                .sumset_subset_witness(h.elements(), h.elements())
                .is_none());
            if !h.is_dvr() {
                assert_eq!(*h.gaps().last().unwrap(), f);
                assert!(h.pseudo_frobenius().contains(&f));
                assert!(h.pseudo_frobenius().iter().all(|p| h.gaps().contains(p)));
                // r(H) ≤ e(H) − 1 for H ≠ ℕ.
                assert!(h.cm_type() < h.multiplicity());
                assert!(h.embedding_dim() <= h.multiplicity());
            }
            // Three-way agreement: symmetric ⟺ type 1 ⟺ genus = (f+1)/2.
            let sym = h.is_symmetric();
            assert_eq!(sym, h.cm_type() == 1);
            assert_eq!(sym, 2 * h.genus() == f + 1);
            // Minimal generators regenerate the set.
            let regen = NumericalSemigroup::from_generators(h.minimal_generators()).unwrap();
            assert_eq!(regen.elements(), h.elements());
        }
    }
}
