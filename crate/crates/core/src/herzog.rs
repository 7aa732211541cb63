//! The Herzog matrix of a 3-generated non-symmetric numerical semigroup and
//! its closed-form invariants.
//!
//! For `H = ⟨a1, a2, a3⟩` with non-symmetric `H`, the defining ideal of the
//! semigroup ring is generated by the maximal minors of a matrix
//!
//! ```text
//! [ X^α   Y^β   Z^γ  ]
//! [ Y^β'  Z^γ'  X^α' ]
//! ```
//!
//! with all six exponents positive.  The exponents are pinned down without any
//! polynomial algebra: `α+α'` (resp. `β+β'`, `γ+γ'`) is the least multiple of
//! `a1` (resp. `a2`, `a3`) lying in the semigroup of the other two generators,
//! and each relation `c_i·a_i = x·a_j + y·a_k` has a unique solution with
//! `x, y > 0`.  Uniqueness is guaranteed by the structure theorem in the
//! non-symmetric case, and is certified by exhaustive search rather than
//! assumed — a violation is surfaced, never resolved silently.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cofinite::CofiniteSet;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HerzogError {
    #[error("expected exactly 3 minimal generators, found {0}")]
    NotThreeGenerated(i64),
    #[error("symmetric semigroup: complete intersection; Herzog matrix undefined")]
    Symmetric,
    #[error("structure theorem violated for {generators:?}: relation {relation} has {count} positive solutions")]
    NonUniqueSolution {
        generators: [i64; 3],
        relation: String,
        count: usize,
    },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// Exponents of the Herzog matrix together with the degrees of the minimal
/// graded resolution they induce.
///
/// Stored invariants (all verified on construction):
/// - `ℓ = a1·α + d1 = a2·β + d2 = a3·γ + d3`,
/// - `n = a1·α' + d3 = a2·β' + d1 = a3·γ' + d2`,
/// - `n − ℓ = a2·β' − a1·α = a3·γ' − a2·β = a1·α' − a3·γ`,
/// - `n ≠ ℓ`, and `b = |ℓ − n| ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HerzogData {
    pub generators: [i64; 3],
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_prime: i64,
    pub beta_prime: i64,
    pub gamma_prime: i64,
    pub d1: i64,
    pub d2: i64,
    pub d3: i64,
    pub ell: i64,
    pub n: i64,
    /// `|ℓ − n|`, the degree gap of the two syzygies.
    pub b: i64,
    /// Sign flag so the closed forms can branch on `ℓ > n` vs `ℓ < n`.
    pub ell_gt_n: bool,
}

/// Is `target` representable as a nonnegative combination of `x` and `y`?
fn in_two_gen(target: i64, x: i64, y: i64) -> bool {
    let mut u = 0;
    while u * x <= target {
        if (target - u * x) % y == 0 {
            return true;
        }
        u += 1;
    }
    false
}

/// `min { k > 0 : k·a ∈ ⟨x, y⟩ }`.  Always finite: `k = x·y` works.
fn least_multiple_in(a: i64, x: i64, y: i64) -> i64 {
    (1..=x * y)
        .find(|&k| in_two_gen(k * a, x, y))
        .expect("k = x*y is always a solution")
}

/// All solutions of `target = u·x + v·y` with `u, v > 0`.
fn positive_solutions(target: i64, x: i64, y: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut u = 1;
    while u * x + y <= target {
        let rest = target - u * x;
        if rest % y == 0 {
            out.push((u, rest / y));
        }
        u += 1;
    }
    out
}

fn unique_positive_solution(
    generators: [i64; 3],
    label: &str,
    target: i64,
    x: i64,
    y: i64,
) -> Result<(i64, i64), HerzogError> {
    let sols = positive_solutions(target, x, y);
    if sols.len() != 1 {
        return Err(HerzogError::NonUniqueSolution {
            generators,
            relation: format!("{label}: {target}"),
            count: sols.len(),
        });
    }
    Ok(sols[0])
}

/// Computes the Herzog matrix of a 3-generated non-symmetric semigroup and
/// verifies every homogeneity identity of [`HerzogData`].
pub fn herzog_matrix(h: &NumericalSemigroup) -> Result<HerzogData, HerzogError> {
    if h.embedding_dim() != 3 {
        return Err(HerzogError::NotThreeGenerated(h.embedding_dim()));
    }
    if h.is_symmetric() {
        return Err(HerzogError::Symmetric);
    }
    let [a1, a2, a3]: [i64; 3] = h.minimal_generators().try_into().expect("three generators");
    let gens = [a1, a2, a3];

    let c1 = least_multiple_in(a1, a2, a3);
    let c2 = least_multiple_in(a2, a1, a3);
    let c3 = least_multiple_in(a3, a1, a2);

    let (beta_prime, gamma) =
        unique_positive_solution(gens, "c1*a1 = β'·a2 + γ·a3", c1 * a1, a2, a3)?;
    let (alpha, gamma_prime) =
        unique_positive_solution(gens, "c2*a2 = α·a1 + γ'·a3", c2 * a2, a1, a3)?;
    let (alpha_prime, beta) =
        unique_positive_solution(gens, "c3*a3 = α'·a1 + β·a2", c3 * a3, a1, a2)?;

    if alpha + alpha_prime != c1 || beta + beta_prime != c2 || gamma + gamma_prime != c3 {
        return Err(HerzogError::Inconsistent(format!(
            "column sums ({}, {}, {}) disagree with minima ({c1}, {c2}, {c3}) for {gens:?}",
            alpha + alpha_prime,
            beta + beta_prime,
            gamma + gamma_prime
        )));
    }

    let d1 = a3 * (gamma + gamma_prime);
    let d2 = a1 * (alpha + alpha_prime);
    let d3 = a2 * (beta + beta_prime);
    let ell = a1 * alpha + d1;
    let n = a1 * alpha_prime + d3;
    let data = HerzogData {
        generators: gens,
        alpha,
        beta,
        gamma,
        alpha_prime,
        beta_prime,
        gamma_prime,
        d1,
        d2,
        d3,
        ell,
        n,
        b: (ell - n).abs(),
        ell_gt_n: ell > n,
    };
    verify_homogeneity(&data)?;
    Ok(data)
}

fn verify_homogeneity(d: &HerzogData) -> Result<(), HerzogError> {
    let [a1, a2, a3] = d.generators;
    let checks = [
        ("ℓ = a2·β + d2", d.ell == a2 * d.beta + d.d2),
        ("ℓ = a3·γ + d3", d.ell == a3 * d.gamma + d.d3),
        ("n = a2·β' + d1", d.n == a2 * d.beta_prime + d.d1),
        ("n = a3·γ' + d2", d.n == a3 * d.gamma_prime + d.d2),
        (
            "n − ℓ three-way",
            d.n - d.ell == a2 * d.beta_prime - a1 * d.alpha
                && d.n - d.ell == a3 * d.gamma_prime - a2 * d.beta
                && d.n - d.ell == a1 * d.alpha_prime - a3 * d.gamma,
        ),
        ("n ≠ ℓ", d.n != d.ell),
    ];
    for (label, ok) in checks {
        if !ok {
            return Err(HerzogError::Inconsistent(format!(
                "{label} fails for {:?}",
                d.generators
            )));
        }
    }
    Ok(())
}

/// The almost-Gorenstein decision read off the matrix: one of the two rows
/// consists entirely of first powers.
pub fn ag_by_matrix(d: &HerzogData) -> bool {
    (d.alpha, d.beta, d.gamma) == (1, 1, 1)
        || (d.alpha_prime, d.beta_prime, d.gamma_prime) == (1, 1, 1)
}

/// Closed-form invariants implied by the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormInvariants {
    /// `ℓ(I/Q)`: `α'β'γ'` when `ℓ > n`, `αβγ` when `ℓ < n`.
    pub ell_i_q: i64,
    /// `e1 = #(⟨a1, a2, a3, b⟩ ∖ H)`.
    pub e1: i64,
    /// Shift `c` of the canonical pair `I = (t^c, t^{c+b})`, `Q = (t^c)`.
    pub c: i64,
    pub b: i64,
}

/// Evaluates the closed forms.  The canonical pair uses the two generator
/// degrees `a1·α` and `a2·β'` of the graded canonical ideal — both multiples
/// of single generators, hence always inside `H` — with `c` the smaller and
/// `c + b` the larger.
pub fn closed_form_invariants(d: &HerzogData, h: &NumericalSemigroup) -> ClosedFormInvariants {
    let [a1, a2, a3] = d.generators;
    let ell_i_q = if d.ell_gt_n {
        d.alpha_prime * d.beta_prime * d.gamma_prime
    } else {
        d.alpha * d.beta * d.gamma
    };
    let h_prime =
        NumericalSemigroup::from_generators(&[a1, a2, a3, d.b]).expect("b ≥ 1 keeps the gcd at 1");
    let e1 = h_prime
        .elements()
        .length_between(h.elements())
        .expect("H ⊆ ⟨a1,a2,a3,b⟩");
    let deg_top = a1 * d.alpha;
    let deg_bottom = a2 * d.beta_prime;
    ClosedFormInvariants {
        ell_i_q,
        e1,
        c: deg_top.min(deg_bottom),
        b: d.b,
    }
}

/// Value set of the pair ideal `(t^c, t^{c+b})`.
pub fn pair_ideal_set(h: &NumericalSemigroup, c: i64, b: i64) -> CofiniteSet {
    h.elements().shift(c).union(&h.elements().shift(c + b))
}
