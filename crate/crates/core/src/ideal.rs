//! Monomial relative ideals over a semigroup ring: canonical ideals, blowups,
//! Hilbert coefficients, reduction numbers, and colon constructions.
//!
//! Value-set conventions, used throughout:
//!
//! - a monomial ideal `I` is a cofinite set with `I + H ⊆ I`;
//! - products are sumsets, so `I^n ↔ n·I` (the unit power `I^0` is the ring,
//!   whose value set is `H`);
//! - the reduction is `Q = (t^a)` with `a = min(I)`, the canonical monomial
//!   choice, so `e0(I) = ℓ(R/Q) = a`;
//! - `red_Q(I)` is the least `n` with `(n+1)·I = a + n·I`;
//! - the blowup `S = R[I/t^a]` is the stabilizing union of the `I^n/a^n`, and
//!   `e1(I) = ℓ(S/R) = #(S ∖ H)`.

use thiserror::Error;

use crate::cofinite::{CofiniteSet, SetError};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideal generator list is empty")]
    EmptyGenerators,
    #[error("not a relative ideal: {x} + {h} leaves the value set")]
    NotAnIdeal { x: i64, h: i64 },
    #[error("unit ideal: the value set contains 0, so I = R")]
    UnitIdeal,
    #[error("not an integral ideal: {witness} lies outside the semigroup")]
    NotIntegral { witness: i64 },
    #[error("the semigroup is ℕ, a DVR: {0}")]
    Dvr(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// A fractional monomial ideal: a cofinite set `E` with `E + H ⊆ E`.
///
/// Covers integral ideals (`E ⊆ H`, used for `I`, `Q`) as well as genuinely
/// fractional ones (the canonical set `K`, the blowup `S`, `M - M`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeIdeal {
    ambient: NumericalSemigroup,
    elements: CofiniteSet,
    minimal_generators: Vec<i64>,
}

impl RelativeIdeal {
    /// Wraps a value set after checking the relative-ideal axiom and that the
    /// minimal generators regenerate it.
    pub fn from_value_set(
        ambient: &NumericalSemigroup,
        elements: CofiniteSet,
    ) -> Result<Self, IdealError> {
        if let Some((x, h)) = elements.sumset_subset_witness(ambient.elements(), &elements) {
            return Err(IdealError::NotAnIdeal { x, h });
        }
        let minimal_generators = extract_minimal_generators(ambient, &elements);
        let regen = generated_set(ambient, &minimal_generators);
        if regen != elements {
            return Err(IdealError::Internal(format!(
                "minimal generators {minimal_generators:?} do not regenerate the value set"
            )));
        }
        Ok(RelativeIdeal {
            ambient: ambient.clone(),
            elements,
            minimal_generators,
        })
    }

    /// The ideal `∪ (g + H)` generated by the given values.
    pub fn from_generators(
        ambient: &NumericalSemigroup,
        generators: &[i64],
    ) -> Result<Self, IdealError> {
        if generators.is_empty() {
            return Err(IdealError::EmptyGenerators);
        }
        Self::from_value_set(ambient, generated_set(ambient, generators))
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    pub fn elements(&self) -> &CofiniteSet {
        &self.elements
    }

    /// `E ∖ (M₊ + E)`: the degrees of a minimal monomial generating set.
    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    pub fn mu(&self) -> i64 {
        self.minimal_generators.len() as i64
    }

    pub fn is_principal(&self) -> bool {
        self.minimal_generators.len() == 1
    }

    /// Least value; for an integral ideal this is the reduction shift `a`.
    pub fn min_value(&self) -> i64 {
        self.elements.min_element()
    }

    /// Is `E ⊆ H`?
    pub fn is_integral(&self) -> bool {
        self.elements.is_subset_of(self.ambient.elements())
    }

    /// Translate by `k` (multiply by `t^k`).
    pub fn shift(&self, k: i64) -> Self {
        RelativeIdeal {
            ambient: self.ambient.clone(),
            elements: self.elements.shift(k),
            minimal_generators: self.minimal_generators.iter().map(|g| g + k).collect(),
        }
    }

    /// Value set of `I^n`; the unit power is the ring itself.
    ///
    /// Computed as `n·a + n·K` with `K = I − a`: the fractional powers `n·K`
    /// live below a fixed cap and are grown by the same frontier iteration
    /// that drives the blowup, so large reduction numbers stay cheap.  The
    /// result agrees with the doubling sumset of the raw value set.
    pub fn power_set(&self, n: u32) -> CofiniteSet {
        if n == 0 {
            return self.ambient.elements().clone();
        }
        let a = self.min_value();
        let k = self.elements.shift(-a);
        let mut it = KPowers::new(&self.ambient, &k);
        for _ in 1..n {
            if !it.advance() {
                break;
            }
        }
        it.snapshot().shift(a * n as i64)
    }
}

/// Frontier iteration over the fractional powers `K ⊆ 2K ⊆ 3K ⊆ ...` of a
/// set `K ⊇ H` with `min K = 0`.  Every stage contains `[cap, ∞)`, so a
/// membership bitmap over `[0, cap)` plus the newly added elements of the
/// last step suffice; one multiplication by `K` costs `|Δ| · |K ∩ [0, cap)|`.
struct KPowers {
    cap: i64,
    present: Vec<bool>,
    /// Elements added by the latest step: `Δ_n = P_n ∖ P_{n−1}`.
    frontier: Vec<i64>,
    km: Vec<i64>,
}

impl KPowers {
    /// Starts at stage `P_1 = K` over `P_0 = H`.
    fn new(h: &NumericalSemigroup, k: &CofiniteSet) -> Self {
        let cap = k.threshold().max(h.conductor());
        let mut present = vec![false; cap.max(0) as usize];
        for x in h.elements().members_up_to(cap) {
            present[x as usize] = true;
        }
        let km = k.members_up_to(k.threshold());
        let mut frontier = Vec::new();
        for x in k.members_up_to(cap) {
            if !present[x as usize] {
                present[x as usize] = true;
                frontier.push(x);
            }
        }
        KPowers {
            cap,
            present,
            frontier,
            km,
        }
    }

    /// One multiplication by `K`: `P_{n+1} = P_n ∪ (Δ_n + K)`.  Returns
    /// whether the stage grew.
    fn advance(&mut self) -> bool {
        let mut next = Vec::new();
        for &x in &self.frontier {
            for &y in &self.km {
                let z = x + y;
                if z < self.cap && !self.present[z as usize] {
                    self.present[z as usize] = true;
                    next.push(z);
                }
            }
        }
        self.frontier = next;
        !self.frontier.is_empty()
    }

    fn snapshot(&self) -> CofiniteSet {
        let members: Vec<i64> = (0..self.cap)
            .filter(|&x| self.present[x as usize])
            .collect();
        CofiniteSet::from_parts(members, self.cap)
    }
}

fn generated_set(ambient: &NumericalSemigroup, generators: &[i64]) -> CofiniteSet {
    let mut acc = ambient.elements().shift(generators[0]);
    for &g in &generators[1..] {
        acc = acc.union(&ambient.elements().shift(g));
    }
    acc
}

fn extract_minimal_generators(ambient: &NumericalSemigroup, elements: &CofiniteSet) -> Vec<i64> {
    // E ∖ (M₊ + E).  A value x ≥ threshold + e decomposes as e + (x - e) with
    // x - e still in E, so the candidate window below threshold + e is exhaustive.
    let e = ambient.multiplicity();
    let lo = elements.min_element();
    let hm = ambient
        .elements()
        .members_up_to(elements.threshold() + e - lo);
    elements
        .members_up_to(elements.threshold() + e)
        .into_iter()
        .filter(|&x| {
            !hm.iter()
                .take_while(|&&m| m <= x - lo)
                .any(|&m| m > 0 && elements.contains(x - m))
        })
        .collect()
}

/// The canonical relative ideal `K = {x : f - x ∉ H}`, normalized so that
/// `min K = 0` and `H ⊆ K ⊆ ℕ`.  Its minimal generator count is the type
/// `r(H)`; for symmetric `H` (and for `ℕ`, where it is flagged principal) it
/// is `H` itself.
pub fn canonical_ideal(h: &NumericalSemigroup) -> RelativeIdeal {
    RelativeIdeal::from_value_set(h, h.canonical_set())
        .expect("the canonical set is a relative ideal")
}

/// The integral pair `I = c + K` and `Q = c + H`: a monomial canonical ideal
/// inside `H` together with its principal reduction.
pub fn integral_canonical_pair(h: &NumericalSemigroup) -> (RelativeIdeal, RelativeIdeal) {
    let c = h.conductor();
    let i = canonical_ideal(h).shift(c);
    let q =
        RelativeIdeal::from_value_set(h, h.elements().shift(c)).expect("c + H is a relative ideal");
    (i, q)
}

/// Blowup data: the value set of `S = R[I/t^a]`, the reduction number, and
/// membership bookkeeping shared by the classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupData {
    pub s: CofiniteSet,
    pub red: i64,
    pub e1: i64,
}

/// Computes `S = ∪_n (n·I - n·a)` by the stabilizing union, together with
/// `red_Q(I)` — the first `n` at which the chain `R ⊆ I/a ⊆ I²/a² ⊆ ...`
/// stops growing.  Stabilization within `genus + 2` steps is a theorem; a
/// failure to stabilize is an arithmetic bug and reported as such.
pub fn blowup_data(ideal: &RelativeIdeal) -> Result<BlowupData, IdealError> {
    require_proper_integral(ideal)?;
    let h = ideal.ambient();
    let a = ideal.min_value();
    let k = ideal.elements().shift(-a); // I/a: min 0, contains H
    let mut it = KPowers::new(h, &k);
    let mut red = 0i64;
    while !it.frontier.is_empty() {
        red += 1;
        if red > h.genus() + 2 {
            return Err(IdealError::Internal(
                "blowup failed to stabilize within the genus bound".into(),
            ));
        }
        it.advance();
    }
    let s = it.snapshot();
    let e1 = s.length_between(h.elements())?;
    Ok(BlowupData { s, red, e1 })
}

/// The blowup `S = R[I/t^a]` as a relative ideal (its value set is itself a
/// numerical semigroup containing `H`).
pub fn blowup(ideal: &RelativeIdeal) -> Result<RelativeIdeal, IdealError> {
    let data = blowup_data(ideal)?;
    RelativeIdeal::from_value_set(ideal.ambient(), data.s)
}

fn require_proper_integral(ideal: &RelativeIdeal) -> Result<(), IdealError> {
    if ideal.elements().contains(0) {
        return Err(IdealError::UnitIdeal);
    }
    if let Some(witness) = ideal.elements().subset_witness(ideal.ambient().elements()) {
        return Err(IdealError::NotIntegral { witness });
    }
    Ok(())
}

/// The length table attached to a Hilbert computation.  For a general `I` the
/// `K`-column reads `I/a` in place of the canonical set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct LengthTable {
    /// ℓ(I/Q)
    pub i_over_q: i64,
    /// ℓ(I²/QI)
    pub i2_over_qi: i64,
    /// ℓ(R/I)
    pub r_over_i: i64,
    /// ℓ(S/R)
    pub s_over_r: i64,
    /// ℓ(S/K) with K = I/a
    pub s_over_k: i64,
    /// ℓ(R/𝔠) with 𝔠 = R:S
    pub r_over_c: i64,
    /// μ(I)
    pub mu_i: i64,
}

/// Hilbert–Samuel data of an 𝔪-primary monomial ideal with respect to its
/// monomial minimal reduction.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct HilbertData {
    pub e0: i64,
    pub e1: i64,
    pub red: i64,
    /// `a` with `Q = (t^a)`.
    pub reduction_shift: i64,
    pub lengths: LengthTable,
}

/// Computes `e0`, `e1`, the reduction number, and the length table of a
/// proper monomial ideal `I ⊆ H`.
///
/// `e1` comes from the blowup count `#(S ∖ H)`; the Hilbert-function
/// agreement `ℓ(R/I^{n+1}) = e0(n+1) - e1` is re-verified internally for
/// `n ∈ [red-1, red+2]` before the data is returned.
pub fn hilbert_coefficients(ideal: &RelativeIdeal) -> Result<HilbertData, IdealError> {
    require_proper_integral(ideal)?;
    let h = ideal.ambient();
    let a = ideal.min_value();
    let data = blowup_data(ideal)?;
    let e0 = a;
    let q = h.elements().shift(a);
    let i2 = ideal.power_set(2);
    let qi = ideal.elements().shift(a);
    let k = ideal.elements().shift(-a);
    let conductor_ideal = h.elements().colon(&data.s);
    let lengths = LengthTable {
        i_over_q: ideal.elements().length_between(&q)?,
        i2_over_qi: i2.length_between(&qi)?,
        r_over_i: h.elements().length_between(ideal.elements())?,
        s_over_r: data.e1,
        s_over_k: data.s.length_between(&k)?,
        r_over_c: h.elements().length_between(&conductor_ideal)?,
        mu_i: ideal.mu(),
    };
    let hd = HilbertData {
        e0,
        e1: data.e1,
        red: data.red,
        reduction_shift: a,
        lengths,
    };
    for n in (hd.red - 1).max(0)..=hd.red + 2 {
        let exact = hilbert_function(ideal, n)?;
        if exact != e0 * (n + 1) - hd.e1 {
            return Err(IdealError::Internal(format!(
                "Hilbert function disagrees with e0(n+1)-e1 at n={n}: {exact} vs {}",
                e0 * (n + 1) - hd.e1
            )));
        }
    }
    Ok(hd)
}

/// Exact Hilbert function `ℓ(R/I^{n+1}) = #(H ∖ (n+1)·I)`, never via the
/// polynomial.
pub fn hilbert_function(ideal: &RelativeIdeal, n: i64) -> Result<i64, IdealError> {
    assert!(n >= 0, "hilbert_function requires n >= 0");
    require_proper_integral(ideal)?;
    let power = ideal.power_set((n + 1) as u32);
    Ok(ideal.ambient().elements().length_between(&power)?)
}

/// The endomorphism algebra value set `M - M = {z : z + M₊ ⊆ H}` together
/// with the answer to "is its semigroup ring Gorenstein", decided by symmetry
/// of `M - M`.
///
/// The boolean is cross-checked at runtime against the almost-Gorenstein
/// criterion `AG(H) ∧ v(H) = e(H)`; a disagreement would falsify the
/// equivalence the classification relies on and is surfaced as an internal
/// error.
pub fn m_colon_m(h: &NumericalSemigroup) -> Result<(RelativeIdeal, bool), IdealError> {
    if h.is_dvr() {
        return Err(IdealError::Dvr(
            "𝔪:𝔪 of a DVR is not a numerical-semigroup ring of the same kind".into(),
        ));
    }
    let mm_set = h.elements().colon(&h.maximal_ideal_set());
    let mm_semigroup = NumericalSemigroup::from_value_set(mm_set.clone())?;
    let gorenstein = mm_semigroup.is_symmetric();
    let expected = h.is_almost_symmetric() && h.embedding_dim() == h.multiplicity();
    if gorenstein != expected {
        return Err(IdealError::Internal(format!(
            "endomorphism-algebra criterion failed on {}: symmetry of M-M = {gorenstein}, AG ∧ v=e = {expected}",
            h.descriptor()
        )));
    }
    let ideal = RelativeIdeal::from_value_set(h, mm_set)?;
    Ok((ideal, gorenstein))
}

/// The two ideal-theoretic conditions `𝔪I = 𝔪Q` and `I² = QI`; together they
/// decide whether the idealization of the dual of `I` is almost Gorenstein.
/// Only the conditions are evaluated — the idealization ring itself is never
/// modeled.
pub fn idealization_ag_condition(ideal: &RelativeIdeal) -> Result<bool, IdealError> {
    require_proper_integral(ideal)?;
    let h = ideal.ambient();
    let a = ideal.min_value();
    let m = h.maximal_ideal_set();
    let mi = m.sumset(ideal.elements());
    let mq = m.shift(a);
    let i2 = ideal.elements().sumset(ideal.elements());
    let qi = ideal.elements().shift(a);
    Ok(mi == mq && i2 == qi)
}

/// `Q :_R 𝔪` for the parameter `Q = (t^a)`: computed as `colon(a + H, M₊) ∩ H`
/// — the intersection enforces "in R".
pub fn q_colon_m(h: &NumericalSemigroup, a: i64) -> Result<RelativeIdeal, IdealError> {
    if h.is_dvr() {
        return Err(IdealError::Dvr("Q:𝔪 colon battery assumes H ≠ ℕ".into()));
    }
    if a <= 0 || !h.elements().contains(a) {
        return Err(IdealError::NotIntegral { witness: a });
    }
    let q = h.elements().shift(a);
    let set = q.colon(&h.maximal_ideal_set()).intersection(h.elements());
    RelativeIdeal::from_value_set(h, set)
}

/// `I² :_R a` for the reduction shift `a`: the socle-style ideal appearing in
/// the almost-Gorenstein consequence `ℓ((I²:a)/I) = 1`.
pub fn i2_colon_a(ideal: &RelativeIdeal) -> Result<RelativeIdeal, IdealError> {
    require_proper_integral(ideal)?;
    let a = ideal.min_value();
    let set = ideal
        .power_set(2)
        .shift(-a)
        .intersection(ideal.ambient().elements());
    RelativeIdeal::from_value_set(ideal.ambient(), set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn canonical_ideal_345() {
        let h = sg(&[3, 4, 5]);
        let k = canonical_ideal(&h);
        assert_eq!(k.elements(), &CofiniteSet::from_parts(vec![0, 1], 3));
        assert_eq!(k.minimal_generators(), &[0, 1]);
        assert_eq!(k.mu(), h.cm_type());
    }

    #[test]
    fn canonical_ideal_mu_equals_type() {
        for gens in [
            vec![3, 7, 8],
            vec![4, 7, 9],
            vec![4, 5, 11],
            vec![5, 6, 7, 8, 9],
        ] {
            let h = sg(&gens);
            let k = canonical_ideal(&h);
            assert_eq!(k.mu(), h.cm_type(), "mu(K) = r for {gens:?}");
            assert_eq!(k.min_value(), 0);
            assert!(h.elements().is_subset_of(k.elements()));
            assert!(k.elements().is_subset_of(&CofiniteSet::naturals()));
        }
    }

    #[test]
    fn canonical_of_symmetric_is_the_ring() {
        let h = sg(&[3, 5]);
        assert_eq!(canonical_ideal(&h).elements(), h.elements());
        let n = sg(&[1]);
        let k = canonical_ideal(&n);
        assert!(k.is_principal());
        assert_eq!(k.elements(), n.elements());
    }

    #[test]
    fn integral_pair_matches_known_ideals() {
        // ⟨3,7,8⟩: I = (t^6, t^7), Q = t^6.
        let h = sg(&[3, 7, 8]);
        let (i, q) = integral_canonical_pair(&h);
        let expect = RelativeIdeal::from_generators(&h, &[6, 7]).unwrap();
        assert_eq!(i, expect);
        assert_eq!(q.elements(), &h.elements().shift(6));
        assert!(i.is_integral());
        assert!(q.elements().is_subset_of(i.elements()));

        // ⟨4,5,6,7⟩: I = (t^4, t^5, t^6).
        let h = sg(&[4, 5, 6, 7]);
        let (i, _) = integral_canonical_pair(&h);
        assert_eq!(i.minimal_generators(), &[4, 5, 6]);

        // Symmetric: I = Q.
        let h = sg(&[3, 5]);
        let (i, q) = integral_canonical_pair(&h);
        assert_eq!(i, q);
    }

    #[test]
    fn blowup_examples() {
        // ⟨3,5,7⟩, I=(t³,t⁵): S is the value set of k[[t²,t³]].
        let h = sg(&[3, 5, 7]);
        let i = RelativeIdeal::from_generators(&h, &[3, 5]).unwrap();
        let s = blowup(&i).unwrap();
        assert_eq!(s.elements(), &CofiniteSet::from_parts(vec![0], 2));

        // ⟨3,7,8⟩, I=(t⁶,t⁷): S = ℕ.
        let h = sg(&[3, 7, 8]);
        let i = RelativeIdeal::from_generators(&h, &[6, 7]).unwrap();
        assert_eq!(blowup(&i).unwrap().elements(), &CofiniteSet::naturals());

        // ⟨3,7,8⟩, I = 𝔪: S = ⟨3,4,5⟩.
        let m = RelativeIdeal::from_value_set(&h, h.maximal_ideal_set()).unwrap();
        assert_eq!(blowup(&m).unwrap().elements(), sg(&[3, 4, 5]).elements());
    }

    #[test]
    fn hilbert_coefficients_reference_values() {
        let h = sg(&[3, 5, 7]);
        let i = RelativeIdeal::from_generators(&h, &[3, 5]).unwrap();
        let hd = hilbert_coefficients(&i).unwrap();
        assert_eq!((hd.e0, hd.e1, hd.red), (3, 2, 2));
        assert_eq!(hd.lengths.i_over_q, 1);
        assert_eq!(hd.lengths.mu_i - 1, 1);

        let h = sg(&[3, 5]);
        let i = RelativeIdeal::from_generators(&h, &[5, 9]).unwrap();
        let hd = hilbert_coefficients(&i).unwrap();
        assert_eq!((hd.e0, hd.e1, hd.red), (5, 2, 1));
        assert_eq!(hd.lengths.i_over_q, 2);
        assert_eq!(hd.lengths.mu_i - 1, 1);

        let h = sg(&[3, 7, 8]);
        let i = RelativeIdeal::from_generators(&h, &[6, 7]).unwrap();
        let hd = hilbert_coefficients(&i).unwrap();
        assert_eq!((hd.e0, hd.e1, hd.red), (6, 4, 2));
        assert_eq!(hd.lengths.i_over_q, 2);

        let m = RelativeIdeal::from_value_set(&h, h.maximal_ideal_set()).unwrap();
        let hd = hilbert_coefficients(&m).unwrap();
        assert_eq!((hd.e0, hd.e1, hd.red), (3, 2, 1));
    }

    #[test]
    fn hilbert_function_examples() {
        let h = sg(&[3, 5, 7]);
        let i = RelativeIdeal::from_generators(&h, &[3, 5]).unwrap();
        assert_eq!(hilbert_function(&i, 1).unwrap(), 4); // 3·2 − 2

        let h = sg(&[3, 7, 8]);
        let m = RelativeIdeal::from_value_set(&h, h.maximal_ideal_set()).unwrap();
        assert_eq!(hilbert_function(&m, 0).unwrap(), 1); // residue field

        let i = RelativeIdeal::from_generators(&h, &[6, 7]).unwrap();
        assert_eq!(hilbert_function(&i, 2).unwrap(), 14); // 6·3 − 4
    }

    #[test]
    fn unit_and_fractional_ideals_are_rejected() {
        let h = sg(&[3, 7, 8]);
        let unit = RelativeIdeal::from_generators(&h, &[0]).unwrap();
        assert_eq!(hilbert_coefficients(&unit), Err(IdealError::UnitIdeal));
        let k = canonical_ideal(&h);
        assert!(matches!(
            hilbert_coefficients(&k),
            Err(IdealError::UnitIdeal)
        ));
    }

    #[test]
    fn relative_ideal_axiom_is_checked() {
        let h = sg(&[3, 7, 8]);
        // {1} ∪ [6,∞) is not H-stable: 1 + 3 = 4 is missing.
        let bad = CofiniteSet::from_parts(vec![1], 6);
        assert!(matches!(
            RelativeIdeal::from_value_set(&h, bad),
            Err(IdealError::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn m_colon_m_examples() {
        // ⟨e,...,2e-1⟩ for e = 3: M-M = ℕ, Gorenstein, AG ∧ v=e.
        let h = sg(&[3, 4, 5]);
        let (mm, gor) = m_colon_m(&h).unwrap();
        assert_eq!(mm.elements(), &CofiniteSet::naturals());
        assert!(gor);

        // ⟨3,7,8⟩: AG fails, so the answer must be negative.
        let h = sg(&[3, 7, 8]);
        let (mm, gor) = m_colon_m(&h).unwrap();
        assert_eq!(mm.elements(), sg(&[3, 4, 5]).elements());
        assert!(!gor);

        assert!(matches!(m_colon_m(&sg(&[1])), Err(IdealError::Dvr(_))));
    }

    #[test]
    fn idealization_condition_examples() {
        // ⟨3,5,7⟩, I=(t³,t⁵): 𝔪I = 𝔪Q holds but I² ≠ QI.
        let h = sg(&[3, 5, 7]);
        let i = RelativeIdeal::from_generators(&h, &[3, 5]).unwrap();
        assert!(!idealization_ag_condition(&i).unwrap());

        // Principal ideals: both conditions collapse.
        let q = RelativeIdeal::from_generators(&h, &[7]).unwrap();
        assert!(idealization_ag_condition(&q).unwrap());

        // I = Q:𝔪 always qualifies.
        for gens in [vec![3, 5, 7], vec![3, 7, 8], vec![3, 4, 5]] {
            let h = sg(&gens);
            let a = h.multiplicity();
            let j = q_colon_m(&h, a).unwrap();
            assert!(idealization_ag_condition(&j).unwrap(), "Q:𝔪 over {gens:?}");
        }
    }

    #[test]
    fn frontier_powers_agree_with_doubling_sumsets() {
        // Two independent routes to I^n: the stage iteration in K-space and
        // the doubling sumset of the raw value set.
        for (gens, igens) in [
            (vec![3, 5, 7], vec![3, 5]),
            (vec![3, 7, 8], vec![6, 7]),
            (vec![3, 5], vec![5, 9]),
            (vec![4, 5, 11], vec![11, 12]),
        ] {
            let h = sg(&gens);
            let i = RelativeIdeal::from_generators(&h, &igens).unwrap();
            for n in 1..=5u32 {
                assert_eq!(
                    i.power_set(n),
                    i.elements().n_fold_sum(n),
                    "I^{n} over {gens:?}, I = {igens:?}"
                );
            }
            assert_eq!(i.power_set(0), *h.elements());
        }
    }

    #[test]
    fn e1_of_q_colon_m_is_the_type() {
        // e1(Q:𝔪) = r(R) for every parameter, non-DVR case.
        for gens in [vec![3, 5, 7], vec![3, 7, 8], vec![4, 7, 9], vec![4, 5, 11]] {
            let h = sg(&gens);
            for a in h.elements().members_up_to(h.conductor() + 3) {
                if a == 0 {
                    continue;
                }
                let j = q_colon_m(&h, a).unwrap();
                let hd = hilbert_coefficients(&j).unwrap();
                assert_eq!(hd.e1, h.cm_type(), "a={a} over {gens:?}");
            }
        }
    }

    #[test]
    fn ideals_over_the_full_semigroup() {
        // Parameter ideals of the DVR: e0 = a, e1 = 0, red = 0.
        let n = sg(&[1]);
        let i = RelativeIdeal::from_generators(&n, &[3]).unwrap();
        let hd = hilbert_coefficients(&i).unwrap();
        assert_eq!((hd.e0, hd.e1, hd.red), (3, 0, 0));
        assert_eq!(hilbert_function(&i, 4).unwrap(), 15);
        assert_eq!(blowup(&i).unwrap().elements(), n.elements());
    }

    mod random_ideals {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            /// Random 𝔪-primary monomial ideals over random small semigroups:
            /// the Hilbert data is internally Hilbert-verified, the chain
            /// inequalities hold, and e1 agrees along the reduction route.
            #[test]
            fn hilbert_data_is_consistent(
                gens in prop::collection::vec(2i64..14, 1..4),
                coprime in prop::sample::select(vec![5i64, 7, 11, 13]),
                picks in prop::collection::vec(0usize..40, 1..4),
            ) {
                let mut gens = gens;
                gens.push(coprime);
                let Ok(h) = NumericalSemigroup::from_generators(&gens) else {
                    // gcd ≠ 1 draws are discarded
                    return Ok(());
                };
                let pool: Vec<i64> = h
                    .elements()
                    .members_up_to(h.conductor() + 10)
                    .into_iter()
                    .filter(|&x| x > 0)
                    .collect();
                let igens: Vec<i64> = picks.iter().map(|&p| pool[p % pool.len()]).collect();
                let i = RelativeIdeal::from_generators(&h, &igens).unwrap();
                // hilbert_coefficients re-verifies ℓ(R/I^{n+1}) = e0(n+1) − e1
                // around the reduction number before returning.
                let hd = hilbert_coefficients(&i).unwrap();
                prop_assert_eq!(hd.e0, i.min_value());
                prop_assert!(hd.lengths.mu_i - 1 <= hd.lengths.i_over_q);
                prop_assert_eq!(hd.lengths.i_over_q, hd.e0 - hd.lengths.r_over_i);
                prop_assert!(hd.lengths.i_over_q <= hd.e1);
                prop_assert!(hd.red <= hd.e1);
                // e1 = ℓ(I^r/Q^r) along the reduction route.
                let q_pow = if hd.red == 0 {
                    h.elements().clone()
                } else {
                    h.elements().shift(hd.e0 * hd.red)
                };
                let e1_red = i.power_set(hd.red as u32).length_between(&q_pow).unwrap();
                prop_assert_eq!(e1_red, hd.e1);
                // Frontier power route equals the doubling sumset route.
                for n in 1..=3u32 {
                    prop_assert_eq!(i.power_set(n), i.elements().n_fold_sum(n));
                }
            }
        }
    }
}
