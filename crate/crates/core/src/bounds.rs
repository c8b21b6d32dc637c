//! Upper bounds on the normalized Harder-Narasimhan slopes `w_i` of the Hodge
//! bundle over a Teichmüller curve, and on sums of Lyapunov exponents.
//!
//! The basic estimate is `w_i <= 1 + a_{H_i}` where `a` is the slope sequence
//! of the stratum and `H_i` is the prefix length at which the divisor
//! `p'_1 + ... + p'_{H_i}` first has `h⁰ = i`. Without knowing the curve, `H_i`
//! is replaced by a floor from Clifford's theorem; on a hyperelliptic locus it
//! is computed exactly.

use std::fmt;

use crate::divisor::exact_h;
use crate::error::{Error, Result};
use crate::quadratic::HyperellipticLocus;
use crate::rational::Rational;
use crate::stratum::AbelianStratum;

/// What is known about the generic fibre of the curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundMode {
    /// Nothing: Clifford gives `H_j >= 2j - 2`.
    Generic,
    /// Not hyperelliptic: strict Clifford gives `H_j >= 2j - 1` for `1 < j < g`.
    NonHyperelliptic,
    /// Inside the given hyperelliptic locus: `H_j` computed from `h⁰`.
    HyperellipticExact(HyperellipticLocus),
}

impl BoundMode {
    pub fn name(&self) -> &'static str {
        match self {
            BoundMode::Generic => "generic",
            BoundMode::NonHyperelliptic => "non-hyp",
            BoundMode::HyperellipticExact(_) => "hyp-exact",
        }
    }

    pub fn locus(&self) -> Option<&HyperellipticLocus> {
        match self {
            BoundMode::HyperellipticExact(locus) => Some(locus),
            _ => None,
        }
    }
}

impl fmt::Display for BoundMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityCase {
    /// Hyperelliptic locus from `Q(2k_1, ..., 2k_n, -1^{2g+2})`: the sum is `(g+1)/2`.
    HyperellipticMaxSum,
    /// Stratum `(1^{2g-2})`, where some non-hyperelliptic curves reach `(g+1)/2`.
    /// Which ones cannot be read off the signature.
    MinimalStratumPossible,
    NotEquality,
}

impl EqualityCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            EqualityCase::HyperellipticMaxSum => "hyperelliptic_max_sum",
            EqualityCase::MinimalStratumPossible => "minimal_stratum_possible",
            EqualityCase::NotEquality => "not_equality",
        }
    }
}

impl fmt::Display for EqualityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Clifford floor for `H_j`. In hyperelliptic-exact mode this is the generic
/// floor; the exact values come from [`exact_h`].
pub fn h_floor(j: usize, g: u32, mode: &BoundMode) -> Result<usize> {
    let g = g as usize;
    if j < 1 || j > g {
        return Err(Error::IndexOutOfRange { index: j, max: g });
    }
    Ok(match (j, mode) {
        (1, _) => 1,
        // the full divisor is canonical
        (j, _) if j == g => 2 * g - 2,
        (j, BoundMode::NonHyperelliptic) => 2 * j - 1,
        (j, _) => 2 * j - 2,
    })
}

/// `H_1, ..., H_g` in the given mode.
pub fn h_used(stratum: &AbelianStratum, mode: &BoundMode) -> Result<Vec<usize>> {
    match mode {
        BoundMode::HyperellipticExact(locus) => {
            if !locus.induces(stratum) {
                return Err(Error::ModeMismatch {
                    locus: locus.induced().signature().to_vec(),
                    stratum: stratum.signature().to_vec(),
                });
            }
            // slope labels refer to the locus's own zero order
            exact_h(locus, &locus.induced().slope_sequence())
        }
        _ => (1..=stratum.genus() as usize)
            .map(|j| h_floor(j, stratum.genus(), mode))
            .collect(),
    }
}

/// `w_1 = 1` and `w_j <= 1 + a_{H_j}` for `j = 2..=g`.
pub fn w_upper_bounds(stratum: &AbelianStratum, mode: &BoundMode) -> Result<Vec<Rational>> {
    let h = h_used(stratum, mode)?;
    Ok(w_from_h(stratum, &h))
}

fn w_from_h(stratum: &AbelianStratum, h: &[usize]) -> Vec<Rational> {
    let slopes = stratum.slope_sequence();
    h.iter()
        .enumerate()
        .map(|(idx, &hj)| {
            if idx == 0 {
                Rational::one()
            } else {
                Rational::one() + slopes.a(hj)
            }
        })
        .collect()
}

/// Everything known about `L(C) = Σ λ_i` for curves in a stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub stratum: AbelianStratum,
    pub mode: BoundMode,
    pub w_upper: Vec<Rational>,
    /// `Σ w_upper`.
    pub sum_upper: Rational,
    /// `(g + 1) / 2`.
    pub theorem_cap: Rational,
    pub effective_sum: Rational,
    /// `κ_μ`, a lower bound for `L(C)`.
    pub kappa_lower: Rational,
    pub equality_case: EqualityCase,
    pub h_used: Vec<usize>,
    pub assumption_required: bool,
}

pub fn sum_upper_bound(stratum: &AbelianStratum, mode: &BoundMode) -> Result<BoundReport> {
    let h = h_used(stratum, mode)?;
    let w_upper = w_from_h(stratum, &h);
    let sum_upper: Rational = w_upper.iter().sum();
    let theorem_cap = Rational::new(stratum.genus() as i64 + 1, 2);
    let effective_sum = sum_upper.clone().min(theorem_cap.clone());
    Ok(BoundReport {
        stratum: stratum.clone(),
        mode: mode.clone(),
        equality_case: classify_equality(stratum, mode.locus()),
        kappa_lower: stratum.kappa_mu(),
        w_upper,
        sum_upper,
        theorem_cap,
        effective_sum,
        h_used: h,
        assumption_required: false,
    })
}

/// Bound on the sum of the `k` exponents of a rank-`2k` sub-variation:
/// `Σ_{i<=k} w_upper[i]`.
pub fn partial_sum_bound(stratum: &AbelianStratum, mode: &BoundMode, k: usize) -> Result<Rational> {
    let g = stratum.genus() as usize;
    if k < 1 || k > g {
        return Err(Error::IndexOutOfRange { index: k, max: g });
    }
    Ok(w_upper_bounds(stratum, mode)?.iter().take(k).sum())
}

/// `λ_i <= w_upper[i]`, valid only when the Hodge bundle splits into line
/// bundles plus a degree-zero part. The caller vouches for that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndividualBound {
    pub index: usize,
    pub value: Rational,
    pub assumption_required: bool,
}

pub fn individual_bound(
    stratum: &AbelianStratum,
    mode: &BoundMode,
    i: usize,
) -> Result<IndividualBound> {
    let g = stratum.genus() as usize;
    if i < 1 || i > g {
        return Err(Error::IndexOutOfRange { index: i, max: g });
    }
    let w = w_upper_bounds(stratum, mode)?;
    Ok(IndividualBound {
        index: i,
        value: w[i - 1].clone(),
        assumption_required: true,
    })
}

/// Whether `L(C) = (g+1)/2` can occur, judged from the stratum and locus only.
pub fn classify_equality(
    stratum: &AbelianStratum,
    locus: Option<&HyperellipticLocus>,
) -> EqualityCase {
    match locus {
        Some(l) if l.induces(stratum) && l.is_max_sum() => EqualityCase::HyperellipticMaxSum,
        _ if stratum.is_all_simple() => EqualityCase::MinimalStratumPossible,
        _ => EqualityCase::NotEquality,
    }
}

/// `L - κ_μ`, so that the area Siegel-Veech constant is `(3/π²)` times the
/// result.
pub fn siegel_veech_residual(sum: &Rational, stratum: &AbelianStratum) -> Result<Rational> {
    let kappa = stratum.kappa_mu();
    if sum < &kappa {
        return Err(Error::BelowLowerBound {
            sum: sum.to_string(),
            kappa: kappa.to_string(),
        });
    }
    Ok(sum - &kappa)
}
