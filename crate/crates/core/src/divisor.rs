//! Riemann-Roch dimensions on hyperelliptic curves for divisors supported at
//! Weierstrass points and at conjugate pairs `{P, ι(P)}`.
//!
//! Every such divisor reduces to `k·g¹₂ + E` where `E` contains no fibre of
//! the hyperelliptic map, using `2W ~ g¹₂` and `P + ι(P) ~ g¹₂`. Then
//! `h⁰ = k + 1` when `k + deg E <= g - 1` and `deg - g + 1` otherwise.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::quadratic::{HyperellipticLocus, PointRef};
use crate::stratum::SlopeSequence;

/// `h⁰(d·W)` at a Weierstrass point, by counting elements of the semigroup
/// `⟨2, 2g+1⟩` that are at most `d`.
pub fn semigroup_h0(g: u32, d: u32) -> u32 {
    let odd_gen = 2 * g + 1;
    (0..=d)
        .filter(|&s| {
            // s = 2a + (2g+1)b
            (0..=s / odd_gen).any(|b| (s - b * odd_gen).is_multiple_of(2))
        })
        .count() as u32
}

/// An effective divisor on a hyperelliptic curve of genus `g`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeierstrassDivisor {
    genus: u32,
    weierstrass: BTreeMap<usize, u32>,
    pairs: BTreeMap<usize, (u32, u32)>,
}

/// `k·g¹₂ + (t Weierstrass base points) + (u other base points)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduction {
    pub k: u32,
    pub t: u32,
    pub u: u32,
}

impl WeierstrassDivisor {
    pub fn new(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus as i64));
        }
        Ok(WeierstrassDivisor {
            genus,
            ..Default::default()
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Adds `coeff` at Weierstrass point `label`.
    pub fn add_weierstrass(&mut self, label: usize, coeff: u32) -> Result<()> {
        if !self.weierstrass.contains_key(&label)
            && self.weierstrass.len() >= 2 * self.genus as usize + 2
        {
            return Err(Error::InvalidParameter(format!(
                "more than {} Weierstrass points on a genus {} curve",
                2 * self.genus + 2,
                self.genus
            )));
        }
        *self.weierstrass.entry(label).or_default() += coeff;
        Ok(())
    }

    /// Adds `(at_point, at_conjugate)` to the pair `label`.
    pub fn add_pair(&mut self, label: usize, at_point: u32, at_conjugate: u32) {
        let entry = self.pairs.entry(label).or_default();
        entry.0 += at_point;
        entry.1 += at_conjugate;
    }

    pub fn add_point(&mut self, point: PointRef) -> Result<()> {
        match point {
            PointRef::Weierstrass(label) => self.add_weierstrass(label, 1),
            PointRef::Pair { pair, conjugate } => {
                if conjugate {
                    self.add_pair(pair, 0, 1)
                } else {
                    self.add_pair(pair, 1, 0)
                }
                Ok(())
            }
        }
    }

    pub fn weierstrass_coeffs(&self) -> &BTreeMap<usize, u32> {
        &self.weierstrass
    }

    /// `label -> (coefficient at P, coefficient at ι(P))`.
    pub fn pair_coeffs(&self) -> &BTreeMap<usize, (u32, u32)> {
        &self.pairs
    }

    pub fn degree(&self) -> u32 {
        self.weierstrass.values().sum::<u32>()
            + self.pairs.values().map(|&(a, b)| a + b).sum::<u32>()
    }

    pub fn reduce(&self) -> Reduction {
        let mut r = Reduction { k: 0, t: 0, u: 0 };
        for &c in self.weierstrass.values() {
            r.k += c / 2;
            r.t += c % 2;
        }
        for &(a, b) in self.pairs.values() {
            r.k += a.min(b);
            // r·Q with Q off the ramification locus is r base points
            r.u += a.abs_diff(b);
        }
        r
    }

    pub fn h0(&self) -> u32 {
        let Reduction { k, t, u } = self.reduce();
        if k + t + u < self.genus {
            k + 1
        } else {
            self.degree() + 1 - self.genus
        }
    }
}

impl fmt::Display for WeierstrassDivisor {
    /// `2W1+W2+(1,1)P3`; the zero divisor prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .weierstrass
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(label, &c)| match c {
                1 => format!("W{label}"),
                c => format!("{c}W{label}"),
            })
            .collect();
        parts.extend(
            self.pairs
                .iter()
                .filter(|(_, &(a, b))| a + b > 0)
                .map(|(label, &(a, b))| format!("({a},{b})P{label}")),
        );
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// `H_j(P)` for `j = 1..=g`: the first prefix length of the slope ordering at
/// which `h⁰` of the prefix divisor reaches `j`.
///
/// `slopes` must be the slope sequence of `locus.induced()`.
pub fn exact_h(locus: &HyperellipticLocus, slopes: &SlopeSequence) -> Result<Vec<usize>> {
    let g = locus.cover_genus();
    let points = locus.zero_points();
    let mut divisor = WeierstrassDivisor::new(g)?;
    let mut h = Vec::with_capacity(g as usize);
    let mut previous = 1;
    for (prefix, slope) in slopes.entries().iter().enumerate() {
        divisor.add_point(points[slope.zero_index])?;
        let value = divisor.h0();
        if prefix == 0 {
            debug_assert_eq!(value, 1);
            h.push(1);
        } else {
            match value - previous {
                0 => {}
                1 => h.push(prefix + 1),
                _ => return Err(Error::NonMonotoneH(prefix + 1)),
            }
        }
        previous = value;
    }
    if h.len() != g as usize {
        return Err(Error::LengthMismatch {
            got: h.len(),
            expected: g as usize,
        });
    }
    Ok(h)
}
