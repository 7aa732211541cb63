//! The Gorenstein / almost-Gorenstein classification and its report.
//!
//! The verdict is decided on the integral canonical pair `I = c + K`,
//! `Q = c + H`, and comes with two equivalence batteries whose conditions
//! must agree pairwise — internal consistency is part of the report, so a
//! single wrong length shows up as a flagged inconsistency rather than a
//! silently wrong verdict.

use serde::{Deserialize, Serialize};

use crate::cofinite::CofiniteSet;
use crate::herzog;
use crate::ideal::{
    blowup_data, hilbert_coefficients, hilbert_function, i2_colon_a, idealization_ag_condition,
    integral_canonical_pair, HilbertData, RelativeIdeal,
};
use crate::semigroup::{NumericalSemigroup, SemigroupInfo};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Gorenstein,
    AlmostGorensteinNotGorenstein,
    Neither,
    #[serde(rename = "DVR")]
    Dvr,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Gorenstein => write!(f, "Gorenstein"),
            Verdict::AlmostGorensteinNotGorenstein => {
                write!(f, "almost Gorenstein, not Gorenstein")
            }
            Verdict::Neither => write!(f, "neither"),
            Verdict::Dvr => write!(f, "Gorenstein (DVR)"),
        }
    }
}

impl Verdict {
    pub fn is_almost_gorenstein(&self) -> bool {
        !matches!(self, Verdict::Neither)
    }
}

/// The eight equivalent Gorenstein conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm37Battery {
    pub symmetric: bool,
    pub k_eq_r: bool,
    pub s_eq_k: bool,
    pub s_eq_r: bool,
    pub len_s_r_eq_len_r_c: bool,
    pub i2_eq_qi: bool,
    pub e1_eq_0: bool,
    pub e1_eq_r_minus_1: bool,
    pub all_equal: bool,
}

/// Extra facts that must hold whenever the ring is almost Gorenstein but not
/// Gorenstein: reduction number two, the pinned Hilbert polynomial, and the
/// one-dimensional socle of `(I²:a)/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgConsequences {
    pub red_eq_2: bool,
    pub hilbert_polynomial_form: bool,
    pub len_j_over_i_eq_1: bool,
}

/// The equivalent characterizations of "almost Gorenstein but not
/// Gorenstein".  `len_s_k_eq_1` and `s_eq_k_colon_m` are the two readings of
/// the same condition and must agree like everything else.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm316Battery {
    pub ag_not_gorenstein: bool,
    pub e1_eq_r: bool,
    pub e1_eq_e0_minus_len_r_i_plus_1: bool,
    pub len_s_k_eq_1: bool,
    pub s_eq_k_colon_m: bool,
    pub len_i2_qi_eq_1: bool,
    pub mm_eq_s: bool,
    pub all_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consequences: Option<AgConsequences>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Batteries {
    pub thm37: Thm37Battery,
    pub thm316: Thm316Battery,
    /// All-equal flags of both batteries plus verdict agreement.
    pub consistent: bool,
}

/// Numeric invariants of the classified ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTable {
    pub e0: i64,
    pub e1: i64,
    pub red: i64,
    pub r: i64,
    pub v: i64,
    pub e: i64,
    pub c: i64,
    pub f: i64,
    pub genus: i64,
    /// Degree gap of the Herzog syzygies; present only for 3-generated
    /// non-symmetric semigroups.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    pub lengths: crate::ideal::LengthTable,
    /// Is the endomorphism algebra `𝔪:𝔪` a Gorenstein ring?  Absent for the
    /// DVR, where the construction degenerates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mm_gorenstein: Option<bool>,
    /// The idealization conditions `𝔪I = 𝔪Q` and `I² = QI` on the canonical
    /// pair.  Absent for the DVR.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idealization_ag: Option<bool>,
    /// Embedding dimension of the idealization of the maximal ideal: `2v`.
    pub v_of_idealization: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub semigroup: SemigroupInfo,
    pub verdict: Verdict,
    pub invariants: InvariantTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub batteries: Option<Batteries>,
}

/// Everything the classification computes on the way: the canonical pair and
/// the derived sets, shared with the law scans.
#[derive(Debug, Clone)]
pub struct CanonicalData {
    pub k: RelativeIdeal,
    pub i: RelativeIdeal,
    pub q: RelativeIdeal,
    /// Value set of `S = R[K]`.
    pub s: CofiniteSet,
    /// Conductor ideal `𝔠 = R : S`.
    pub conductor_ideal: CofiniteSet,
    /// `M − M = {z : z + M₊ ⊆ H}`.
    pub mm: CofiniteSet,
    pub hd: HilbertData,
    pub almost_symmetric: bool,
}

/// Computes the canonical pair and all derived data; `None` for the DVR.
pub fn canonical_data(h: &NumericalSemigroup) -> Option<CanonicalData> {
    if h.is_dvr() {
        return None;
    }
    let k = crate::ideal::canonical_ideal(h);
    let (i, q) = integral_canonical_pair(h);
    let hd = hilbert_coefficients(&i).expect("canonical pair is a proper monomial ideal");
    let s = blowup_data(&i).expect("canonical pair blows up").s;
    let conductor_ideal = h.elements().colon(&s);
    let mm = h.elements().colon(&h.maximal_ideal_set());
    let almost_symmetric = h.is_almost_symmetric();
    Some(CanonicalData {
        k,
        i,
        q,
        s,
        conductor_ideal,
        mm,
        hd,
        almost_symmetric,
    })
}

pub fn compute_batteries(h: &NumericalSemigroup, cd: &CanonicalData) -> Batteries {
    let hd = &cd.hd;
    let r = h.cm_type();
    let a = hd.reduction_shift;
    let i2 = cd.i.power_set(2);
    let qi = cd.i.elements().shift(a);

    let thm37_conditions = [
        h.is_symmetric(),
        cd.k.elements() == h.elements(),
        &cd.s == cd.k.elements(),
        &cd.s == h.elements(),
        hd.lengths.s_over_r == hd.lengths.r_over_c,
        i2 == qi,
        hd.e1 == 0,
        hd.e1 == r - 1,
    ];
    let gor = thm37_conditions[0];
    let thm37 = Thm37Battery {
        symmetric: thm37_conditions[0],
        k_eq_r: thm37_conditions[1],
        s_eq_k: thm37_conditions[2],
        s_eq_r: thm37_conditions[3],
        len_s_r_eq_len_r_c: thm37_conditions[4],
        i2_eq_qi: thm37_conditions[5],
        e1_eq_0: thm37_conditions[6],
        e1_eq_r_minus_1: thm37_conditions[7],
        all_equal: thm37_conditions.iter().all(|&x| x == gor),
    };

    let k_colon_m = cd.k.elements().colon(&h.maximal_ideal_set());
    let thm316_conditions = [
        cd.almost_symmetric && !gor,
        hd.e1 == r,
        hd.e1 == hd.e0 - hd.lengths.r_over_i + 1,
        hd.lengths.s_over_k == 1,
        cd.s == k_colon_m,
        hd.lengths.i2_over_qi == 1,
        cd.mm == cd.s,
    ];
    let ag_not_gor = thm316_conditions[0];
    let consequences = if ag_not_gor {
        let j = i2_colon_a(&cd.i).expect("I²:a is a relative ideal");
        let len_j_i = j
            .elements()
            .length_between(cd.i.elements())
            .expect("I ⊆ I²:a");
        let hilbert_ok = (1..=4).all(|n| {
            hilbert_function(&cd.i, n).expect("canonical pair")
                == (r + hd.lengths.r_over_i - 1) * (n + 1) - r
        });
        Some(AgConsequences {
            red_eq_2: hd.red == 2,
            hilbert_polynomial_form: hilbert_ok,
            len_j_over_i_eq_1: len_j_i == 1,
        })
    } else {
        None
    };
    let thm316 = Thm316Battery {
        ag_not_gorenstein: thm316_conditions[0],
        e1_eq_r: thm316_conditions[1],
        e1_eq_e0_minus_len_r_i_plus_1: thm316_conditions[2],
        len_s_k_eq_1: thm316_conditions[3],
        s_eq_k_colon_m: thm316_conditions[4],
        len_i2_qi_eq_1: thm316_conditions[5],
        mm_eq_s: thm316_conditions[6],
        all_equal: thm316_conditions.iter().all(|&x| x == ag_not_gor),
        consequences,
    };

    let consequences_ok = thm316
        .consequences
        .as_ref()
        .map(|c| c.red_eq_2 && c.hilbert_polynomial_form && c.len_j_over_i_eq_1)
        .unwrap_or(true);
    let consistent = thm37.all_equal && thm316.all_equal && consequences_ok;
    Batteries {
        thm37,
        thm316,
        consistent,
    }
}

/// Full classification of the semigroup ring of `H`.
pub fn classify(h: &NumericalSemigroup) -> ClassificationReport {
    let semigroup = SemigroupInfo::of(h);
    let b = herzog::herzog_matrix(h).ok().map(|d| d.b);
    let Some(cd) = canonical_data(h) else {
        // DVR short-circuit: every battery degenerates.  The reported pair is
        // the parameter ideal (t), which is its own canonical ideal.
        return ClassificationReport {
            invariants: InvariantTable {
                e0: 1,
                e1: 0,
                red: 0,
                r: 1,
                v: 1,
                e: 1,
                c: 0,
                f: -1,
                genus: 0,
                b: None,
                lengths: crate::ideal::LengthTable {
                    i_over_q: 0,
                    i2_over_qi: 0,
                    r_over_i: 1,
                    s_over_r: 0,
                    s_over_k: 0,
                    r_over_c: 0,
                    mu_i: 1,
                },
                mm_gorenstein: None,
                idealization_ag: None,
                v_of_idealization: 2,
            },
            semigroup,
            verdict: Verdict::Dvr,
            batteries: None,
        };
    };

    let batteries = compute_batteries(h, &cd);
    let verdict = if batteries.thm37.symmetric {
        Verdict::Gorenstein
    } else if batteries.thm316.ag_not_gorenstein {
        Verdict::AlmostGorensteinNotGorenstein
    } else {
        Verdict::Neither
    };
    let mm_semigroup =
        NumericalSemigroup::from_value_set(cd.mm.clone()).expect("M − M is a numerical semigroup");
    let invariants = InvariantTable {
        e0: cd.hd.e0,
        e1: cd.hd.e1,
        red: cd.hd.red,
        r: h.cm_type(),
        v: h.embedding_dim(),
        e: h.multiplicity(),
        c: h.conductor(),
        f: h.frobenius(),
        genus: h.genus(),
        b,
        lengths: cd.hd.lengths,
        mm_gorenstein: Some(mm_semigroup.is_symmetric()),
        idealization_ag: Some(idealization_ag_condition(&cd.i).expect("canonical pair is proper")),
        v_of_idealization: 2 * h.embedding_dim(),
    };
    ClassificationReport {
        semigroup,
        verdict,
        invariants,
        batteries: Some(batteries),
    }
}
