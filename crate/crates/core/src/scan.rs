//! Genus-bounded property scans: every law suite replays a proved statement
//! across all semigroups up to a genus bound, so any counterexample is an
//! implementation bug by construction.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{canonical_data, compute_batteries, CanonicalData};
use crate::herzog::{
    ag_by_matrix, closed_form_invariants, herzog_matrix, pair_ideal_set, HerzogError,
};
use crate::semigroup::{enumerate_by_genus, NumericalSemigroup};

/// The named law suites accepted by the scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LawSuite {
    Prop22,
    Lem35,
    Thm37,
    Thm316,
    Cor317,
    Lem315,
    Cor312,
    Thm51,
    Thm41CrossCheck,
    Cor42CrossCheck,
}

impl LawSuite {
    pub const ALL: [LawSuite; 10] = [
        LawSuite::Prop22,
        LawSuite::Lem35,
        LawSuite::Thm37,
        LawSuite::Thm316,
        LawSuite::Cor317,
        LawSuite::Lem315,
        LawSuite::Cor312,
        LawSuite::Thm51,
        LawSuite::Thm41CrossCheck,
        LawSuite::Cor42CrossCheck,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            LawSuite::Prop22 => "prop22",
            LawSuite::Lem35 => "lem35",
            LawSuite::Thm37 => "thm37",
            LawSuite::Thm316 => "thm316",
            LawSuite::Cor317 => "cor317",
            LawSuite::Lem315 => "lem315",
            LawSuite::Cor312 => "cor312",
            LawSuite::Thm51 => "thm51",
            LawSuite::Thm41CrossCheck => "thm41-crosscheck",
            LawSuite::Cor42CrossCheck => "cor42-crosscheck",
        }
    }

    pub fn parse(s: &str) -> Option<LawSuite> {
        Self::ALL.iter().copied().find(|law| law.id() == s)
    }
}

/// Outcome of one law on one semigroup: skipped, passed, or failed with
/// details.
enum LawOutcome {
    NotApplicable,
    Pass,
    Fail(Vec<String>),
}

fn outcome(applicable: bool, violations: Vec<String>) -> LawOutcome {
    if !applicable {
        LawOutcome::NotApplicable
    } else if violations.is_empty() {
        LawOutcome::Pass
    } else {
        LawOutcome::Fail(violations)
    }
}

fn check_law(law: LawSuite, h: &NumericalSemigroup, cd: Option<&CanonicalData>) -> LawOutcome {
    let Some(cd) = cd else {
        return LawOutcome::NotApplicable; // the DVR short-circuits every battery
    };
    let mut bad = Vec::new();
    match law {
        LawSuite::Prop22 => {
            let hd = &cd.hd;
            let a = hd.reduction_shift;
            let mu = hd.lengths.mu_i;
            let liq = hd.lengths.i_over_q;
            if !(mu - 1 <= liq) {
                bad.push(format!("μ(I)−1 = {} > ℓ(I/Q) = {liq}", mu - 1));
            }
            if liq != hd.e0 - hd.lengths.r_over_i {
                bad.push(format!(
                    "ℓ(I/Q) = {liq} ≠ e0 − ℓ(R/I) = {}",
                    hd.e0 - hd.lengths.r_over_i
                ));
            }
            if !(liq <= hd.e1) {
                bad.push(format!("ℓ(I/Q) = {liq} > e1 = {}", hd.e1));
            }
            if !(hd.red <= hd.e1) {
                bad.push(format!("red = {} > e1 = {}", hd.red, hd.e1));
            }
            let i2 = cd.i.power_set(2);
            let qi = cd.i.elements().shift(a);
            if (liq == hd.e1) != (i2 == qi) {
                bad.push("equality case ℓ(I/Q)=e1 ⟺ I²=QI fails".into());
            }
            let mi_in_q =
                cd.i.elements()
                    .sumset_subset_witness(&h.maximal_ideal_set(), &h.elements().shift(a))
                    .is_none();
            if (mu - 1 == liq) != mi_in_q {
                bad.push("equality case μ(I/Q)=ℓ(I/Q) ⟺ 𝔪I ⊆ Q fails".into());
            }
        }
        LawSuite::Lem35 => {
            let hd = &cd.hd;
            if cd.conductor_ideal != cd.k.elements().colon(&cd.s) {
                bad.push("𝔠 = R:S ≠ K:S".into());
            }
            if hd.lengths.r_over_c != hd.lengths.s_over_k {
                bad.push(format!(
                    "ℓ(R/𝔠) = {} ≠ ℓ(S/K) = {}",
                    hd.lengths.r_over_c, hd.lengths.s_over_k
                ));
            }
            if hd.lengths.s_over_r != hd.lengths.r_over_c + hd.lengths.i_over_q {
                bad.push("ℓ(S/R) ≠ ℓ(R/𝔠) + ℓ(I/Q)".into());
            }
            let k_over_r = cd.k.elements().length_between(h.elements()).expect("R ⊆ K");
            if hd.lengths.i_over_q != k_over_r {
                bad.push("ℓ(I/Q) ≠ ℓ(K/R)".into());
            }
        }
        LawSuite::Thm37 => {
            let b = compute_batteries(h, cd);
            if !b.thm37.all_equal {
                bad.push(format!("eight-way disagreement: {:?}", b.thm37));
            }
        }
        LawSuite::Thm316 => {
            let b = compute_batteries(h, cd);
            if !b.thm316.all_equal {
                bad.push(format!("six-way disagreement: {:?}", b.thm316));
            }
            if let Some(c) = &b.thm316.consequences {
                if !c.red_eq_2 {
                    bad.push("AG-not-Gorenstein but red ≠ 2".into());
                }
                if !c.hilbert_polynomial_form {
                    bad.push("AG-not-Gorenstein Hilbert polynomial form fails".into());
                }
                if !c.len_j_over_i_eq_1 {
                    bad.push("ℓ((I²:a)/I) ≠ 1".into());
                }
            }
        }
        LawSuite::Cor317 => {
            let e1 = cd.hd.e1;
            let r = h.cm_type();
            if e1 == 1 {
                bad.push("e1 = 1".into());
            }
            if e1 <= 3 && !cd.almost_symmetric {
                bad.push(format!("e1 = {e1} ≤ 3 but not almost Gorenstein"));
            }
            if e1 == r + 1 {
                bad.push(format!("e1 = r + 1 = {e1}"));
            }
        }
        LawSuite::Lem315 => {
            let diff = cd.mm.difference(h.elements()).len() as i64;
            if diff != h.cm_type() {
                bad.push(format!("#((R:𝔪)∖R) = {diff} ≠ r = {}", h.cm_type()));
            }
        }
        LawSuite::Cor312 => {
            if h.conductor() <= h.multiplicity() && !cd.almost_symmetric {
                bad.push("𝔪R̄ ⊆ R but not almost Gorenstein".into());
            }
        }
        LawSuite::Thm51 => {
            let mm = NumericalSemigroup::from_value_set(cd.mm.clone()).expect("M−M is a semigroup");
            let lhs = mm.is_symmetric();
            let rhs = cd.almost_symmetric && h.embedding_dim() == h.multiplicity();
            if lhs != rhs {
                bad.push(format!("symmetry of M−M = {lhs} but AG ∧ v=e = {rhs}"));
            }
        }
        LawSuite::Thm41CrossCheck => {
            return match herzog_matrix(h) {
                Err(HerzogError::Symmetric) | Err(HerzogError::NotThreeGenerated(_)) => {
                    LawOutcome::NotApplicable
                }
                Err(e) => LawOutcome::Fail(vec![format!("herzog matrix failed: {e}")]),
                Ok(hd) => {
                    let cf = closed_form_invariants(&hd, h);
                    if cf.e1 != cd.hd.e1 {
                        bad.push(format!(
                            "closed-form e1 = {} ≠ blowup e1 = {}",
                            cf.e1, cd.hd.e1
                        ));
                    }
                    if cf.ell_i_q != cd.hd.lengths.i_over_q {
                        bad.push(format!(
                            "closed-form ℓ(I/Q) = {} ≠ set-theoretic {}",
                            cf.ell_i_q, cd.hd.lengths.i_over_q
                        ));
                    }
                    let pair = pair_ideal_set(h, cf.c, cf.b);
                    if pair != cd.k.elements().shift(cf.c) {
                        bad.push("(t^c, t^{c+b}) ≠ c + K".into());
                    }
                    outcome(true, bad)
                }
            };
        }
        LawSuite::Cor42CrossCheck => {
            return match herzog_matrix(h) {
                Err(HerzogError::NotThreeGenerated(_)) => LawOutcome::NotApplicable,
                Err(HerzogError::Symmetric) => {
                    // The error path is itself the assertion: symmetric
                    // 3-generated rings are complete intersections and AG.
                    outcome(true, Vec::new())
                }
                Err(e) => LawOutcome::Fail(vec![format!("herzog matrix failed: {e}")]),
                Ok(hd) => {
                    if ag_by_matrix(&hd) != cd.almost_symmetric {
                        bad.push(format!(
                            "matrix verdict {} ≠ almost-symmetry {}",
                            ag_by_matrix(&hd),
                            cd.almost_symmetric
                        ));
                    }
                    outcome(true, bad)
                }
            };
        }
    }
    outcome(true, bad)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub generators: Vec<i64>,
    pub genus: i64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: String,
    pub checked: u64,
    pub passed: u64,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub genus_max: u32,
    pub checks: Vec<String>,
    pub semigroups: u64,
    pub laws: Vec<LawResult>,
}

impl ScanReport {
    pub fn counterexample_count(&self) -> usize {
        self.laws.iter().map(|l| l.counterexamples.len()).sum()
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("law,checked,passed,counterexamples\n");
        for l in &self.laws {
            out.push_str(&format!(
                "{},{},{},{}\n",
                l.law,
                l.checked,
                l.passed,
                l.counterexamples.len()
            ));
        }
        let any = self.laws.iter().any(|l| !l.counterexamples.is_empty());
        if any {
            out.push_str("law,generators,genus,detail\n");
            for l in &self.laws {
                for ce in &l.counterexamples {
                    let gens: Vec<String> = ce.generators.iter().map(|g| g.to_string()).collect();
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        l.law,
                        gens.join(" "),
                        ce.genus,
                        ce.detail.replace(',', ";").replace('\n', " ")
                    ));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub genus_max: u32,
    pub checks: Vec<LawSuite>,
    /// Worker threads; 0 means "let the runtime decide".
    pub workers: usize,
}

impl ScanConfig {
    pub fn all_checks(genus_max: u32) -> Self {
        ScanConfig {
            genus_max,
            checks: LawSuite::ALL.to_vec(),
            workers: 0,
        }
    }
}

/// Runs the selected suites over every semigroup of genus at most
/// `genus_max`.  Work is distributed across workers; results are merged in
/// enumeration order, so the report is byte-identical for every worker count.
pub fn run_scan(config: &ScanConfig) -> ScanReport {
    let semigroups: Vec<NumericalSemigroup> = enumerate_by_genus(config.genus_max).collect();
    let checks = config.checks.clone();

    // Per semigroup and per law: None when not applicable, otherwise the
    // (possibly empty) violation list.
    let scan_one = |h: &NumericalSemigroup| -> Vec<Option<Vec<Counterexample>>> {
        let cd = canonical_data(h);
        checks
            .iter()
            .map(|&law| match check_law(law, h, cd.as_ref()) {
                LawOutcome::NotApplicable => None,
                LawOutcome::Pass => Some(Vec::new()),
                LawOutcome::Fail(details) => Some(
                    details
                        .into_iter()
                        .map(|detail| Counterexample {
                            generators: h.minimal_generators().to_vec(),
                            genus: h.genus(),
                            detail,
                        })
                        .collect(),
                ),
            })
            .collect()
    };

    let per_semigroup: Vec<Vec<Option<Vec<Counterexample>>>> = if config.workers == 1 {
        semigroups.iter().map(scan_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("thread pool");
        pool.install(|| semigroups.par_iter().map(scan_one).collect())
    };

    let mut laws = Vec::new();
    for (idx, law) in checks.iter().enumerate() {
        let mut checked = 0u64;
        let mut passed = 0u64;
        let mut counterexamples = Vec::new();
        for results in &per_semigroup {
            let Some(cell) = &results[idx] else {
                continue;
            };
            checked += 1;
            if cell.is_empty() {
                passed += 1;
            } else {
                counterexamples.extend(cell.iter().cloned());
            }
        }
        laws.push(LawResult {
            law: law.id().to_string(),
            checked,
            passed,
            counterexamples,
        });
    }

    ScanReport {
        genus_max: config.genus_max,
        checks: checks.iter().map(|l| l.id().to_string()).collect(),
        semigroups: semigroups.len() as u64,
        laws,
    }
}
