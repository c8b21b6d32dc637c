//! Strata of abelian differentials and their slope sequences.
//!
//! A stratum is given by the orders `m_1, ..., m_k` of the zeros of the
//! differential, with `Σ m_i = 2g - 2`. Each zero of order `m` contributes the
//! values `-j/(m+1)` for `1 <= j <= m` to the slope multiset; sorted in
//! descending order these are the `a_i` that drive every upper bound.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Connected-component tag. Carried as metadata only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum ComponentLabel {
    Hyp,
    Odd,
    Even,
    NonHyp,
    #[default]
    Unspecified,
}

impl ComponentLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            ComponentLabel::Hyp => "hyp",
            ComponentLabel::Odd => "odd",
            ComponentLabel::Even => "even",
            ComponentLabel::NonHyp => "non-hyp",
            ComponentLabel::Unspecified => "",
        }
    }
}

impl fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ComponentLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "hyp" => Ok(ComponentLabel::Hyp),
            "odd" => Ok(ComponentLabel::Odd),
            "even" => Ok(ComponentLabel::Even),
            "non-hyp" | "nonhyp" => Ok(ComponentLabel::NonHyp),
            "" | "unspecified" => Ok(ComponentLabel::Unspecified),
            other => Err(Error::Parse(format!("unknown component label {other:?}"))),
        }
    }
}

/// A stratum `ΩM_g(m_1, ..., m_k)` of abelian differentials.
///
/// The zeros keep the order they were given in, so that slope entries can be
/// traced back to a specific zero; [`AbelianStratum::signature`] is the
/// canonical descending form used for comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianStratum {
    zeros: Vec<u32>,
    signature: Vec<u32>,
    component: ComponentLabel,
    genus: u32,
}

impl AbelianStratum {
    pub fn new(zeros: &[u32], component: ComponentLabel) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::EmptySignature);
        }
        if let Some(&m) = zeros.iter().find(|&&m| m == 0) {
            return Err(Error::NonPositiveOrder(m as i64));
        }
        let total: i64 = zeros.iter().map(|&m| m as i64).sum();
        if total % 2 != 0 {
            return Err(Error::NonIntegralGenus(total));
        }
        let genus = (total + 2) / 2;
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus));
        }
        let mut signature = zeros.to_vec();
        signature.sort_unstable_by(|a, b| b.cmp(a));
        Ok(AbelianStratum {
            zeros: zeros.to_vec(),
            signature,
            component,
            genus: genus as u32,
        })
    }

    /// Parses `"2,2,1,1"` or `"4:odd"`.
    pub fn parse(text: &str) -> Result<Self> {
        let (orders, label) = match text.split_once(':') {
            Some((o, l)) => (o, l.parse()?),
            None => (text, ComponentLabel::Unspecified),
        };
        let zeros = parse_list(orders)?
            .into_iter()
            .map(|m| u32::try_from(m).map_err(|_| Error::NonPositiveOrder(m)))
            .collect::<Result<Vec<_>>>()?;
        AbelianStratum::new(&zeros, label)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Zero orders in the order given at construction.
    pub fn zeros(&self) -> &[u32] {
        &self.zeros
    }

    /// Zero orders sorted descending.
    pub fn signature(&self) -> &[u32] {
        &self.signature
    }

    pub fn component(&self) -> ComponentLabel {
        self.component
    }

    pub fn with_component(mut self, component: ComponentLabel) -> Self {
        self.component = component;
        self
    }

    /// True for the minimal-zero stratum `(1^{2g-2})`.
    pub fn is_all_simple(&self) -> bool {
        self.signature.iter().all(|&m| m == 1)
    }

    /// `κ_μ = (1/12) Σ m_i (m_i + 2) / (m_i + 1)`.
    pub fn kappa_mu(&self) -> Rational {
        let sum: Rational = self
            .zeros
            .iter()
            .map(|&m| {
                let m = m as i64;
                Rational::new(m * (m + 2), m + 1)
            })
            .sum();
        sum * Rational::new(1, 12)
    }

    pub fn slope_sequence(&self) -> SlopeSequence {
        SlopeSequence::new(self)
    }
}

impl fmt::Display for AbelianStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .zeros
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(",");
        f.write_str(&body)?;
        if self.component != ComponentLabel::Unspecified {
            write!(f, ":{}", self.component)?;
        }
        Ok(())
    }
}

/// Splits a comma-separated integer list. Accepts the Unicode minus sign.
pub(crate) fn parse_list(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|part| {
            let part = part.trim().replace('−', "-");
            part.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {part:?}")))
        })
        .collect()
}

/// One entry `-j/(m+1)` of the slope multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slope {
    pub value: Rational,
    /// Position of the zero in [`AbelianStratum::zeros`].
    pub zero_index: usize,
    /// The multiplicity index `j`, `1 <= j <= m`.
    pub j: u32,
}

/// The `2g - 2` slopes of a stratum in descending order.
///
/// Equal values are ordered by zero index and then by `j`, both ascending.
/// Bound computations only look at the values, so the tie order shows up only
/// in the labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeSequence {
    entries: Vec<Slope>,
}

impl SlopeSequence {
    fn new(stratum: &AbelianStratum) -> Self {
        let mut entries: Vec<Slope> = stratum
            .zeros
            .iter()
            .enumerate()
            .flat_map(|(zero_index, &m)| {
                (1..=m).map(move |j| Slope {
                    value: Rational::new(-(j as i64), m as i64 + 1),
                    zero_index,
                    j,
                })
            })
            .collect();
        entries.sort_by(|x, y| {
            y.value
                .cmp(&x.value)
                .then(x.zero_index.cmp(&y.zero_index))
                .then(x.j.cmp(&y.j))
        });
        SlopeSequence { entries }
    }

    pub fn entries(&self) -> &[Slope] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `a_i`, 1-based.
    pub fn a(&self, i: usize) -> &Rational {
        &self.entries[i - 1].value
    }

    pub fn values(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }
}
