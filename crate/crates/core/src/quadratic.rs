//! Quadratic differentials, their canonical double covers, and hyperelliptic
//! loci.
//!
//! A singularity of odd order `d` lifts to a single zero of order `d + 1`
//! (nothing for a simple pole), and one of even order `d` lifts to two zeros
//! of order `d / 2`. The double cover is assumed connected: signatures that
//! come from global squares are not detected.

use std::fmt;

use crate::error::{Error, Result};
use crate::stratum::{parse_list, AbelianStratum, ComponentLabel};

/// Orders `(d_1, ..., d_n)` of a quadratic differential, simple poles allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSignature {
    orders: Vec<i32>,
    base_genus: u32,
}

impl QuadraticSignature {
    pub fn new(orders: &[i32]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::EmptySignature);
        }
        if let Some(&d) = orders.iter().find(|&&d| d == 0 || d < -1) {
            return Err(Error::InvalidOrder(d as i64));
        }
        let total: i64 = orders.iter().map(|&d| d as i64).sum();
        if total.rem_euclid(4) != 0 {
            return Err(Error::NonIntegralGenus(total));
        }
        let base_genus = (total + 4) / 4;
        if base_genus < 0 {
            return Err(Error::NegativeGenus);
        }
        Ok(QuadraticSignature {
            orders: orders.to_vec(),
            base_genus: base_genus as u32,
        })
    }

    /// Parses `"4,4,-1x12"`; `dxN` expands to `N` copies of `d`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut orders = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            match part.split_once('x') {
                Some((d, n)) => {
                    let d = parse_list(d)?[0];
                    let n: usize = n
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad repeat count in {part:?}")))?;
                    if n == 0 {
                        return Err(Error::Parse(format!("zero repeat count in {part:?}")));
                    }
                    orders.extend(std::iter::repeat_n(d, n));
                }
                None => orders.push(parse_list(part)?[0]),
            }
        }
        let orders = orders
            .into_iter()
            .map(|d| i32::try_from(d).map_err(|_| Error::InvalidOrder(d)))
            .collect::<Result<Vec<_>>>()?;
        QuadraticSignature::new(&orders)
    }

    pub fn orders(&self) -> &[i32] {
        &self.orders
    }

    pub fn base_genus(&self) -> u32 {
        self.base_genus
    }

    /// Number of odd-order singularities, poles included. These are the
    /// branch points of the double cover.
    pub fn branch_count(&self) -> usize {
        self.orders.iter().filter(|&&d| d % 2 != 0).count()
    }

    pub fn pole_count(&self) -> usize {
        self.orders.iter().filter(|&&d| d == -1).count()
    }

    /// True for `Q(2k_1, ..., 2k_n, -1^{2g+2})`: every odd-order entry is a pole.
    pub fn is_max_sum_locus(&self) -> Result<bool> {
        if self.base_genus != 0 {
            return Err(Error::NotHyperelliptic(self.base_genus));
        }
        Ok(self.orders.iter().all(|&d| d % 2 == 0 || d == -1))
    }

    /// The abelian stratum of the canonical double cover and the cover genus.
    ///
    /// The genus is computed twice, from Riemann-Hurwitz and from the zero
    /// orders, and the two must agree.
    pub fn induced_abelian(&self) -> Result<(AbelianStratum, u32)> {
        let zeros: Vec<u32> = self
            .orders
            .iter()
            .flat_map(|&d| lift(d).map(|(m, count)| vec![m; count]).unwrap_or_default())
            .collect();
        // 2g' - 2 = 2(2h - 2) + B
        let doubled = 2 * (2 * self.base_genus as i64 - 2) + self.branch_count() as i64;
        let riemann_hurwitz = (doubled + 2) / 2;
        let from_zeros = (zeros.iter().map(|&m| m as i64).sum::<i64>() + 2) / 2;
        if doubled % 2 != 0 || riemann_hurwitz != from_zeros {
            return Err(Error::InconsistentCover {
                riemann_hurwitz,
                from_zeros,
            });
        }
        if riemann_hurwitz < 2 {
            return Err(Error::GenusTooSmall(riemann_hurwitz));
        }
        let stratum = AbelianStratum::new(&zeros, ComponentLabel::Unspecified)?;
        Ok((stratum, riemann_hurwitz as u32))
    }

    pub fn hyperelliptic_locus(&self) -> Result<HyperellipticLocus> {
        HyperellipticLocus::new(self.clone())
    }
}

/// Lifted zero order and count for a singularity of order `d`.
fn lift(d: i32) -> Option<(u32, usize)> {
    match d {
        -1 => None,
        d if d % 2 != 0 => Some((d as u32 + 1, 1)),
        d => Some((d as u32 / 2, 2)),
    }
}

impl fmt::Display for QuadraticSignature {
    /// Runs of three or more equal entries use the `dxN` shorthand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.orders.len() {
            let d = self.orders[i];
            let run = self.orders[i..].iter().take_while(|&&x| x == d).count();
            if run >= 3 {
                parts.push(format!("{d}x{run}"));
            } else {
                parts.extend(std::iter::repeat_n(d.to_string(), run));
            }
            i += run;
        }
        f.write_str(&parts.join(","))
    }
}

/// How a singularity of the quadratic differential appears on the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointType {
    /// Odd `d >= 1`: a zero of order `d + 1` at a Weierstrass point.
    WeierstrassZero { order: u32 },
    /// Even `d`: two zeros of order `d / 2` swapped by the involution.
    ConjugatePair { order: u32 },
    /// Simple pole: a Weierstrass point carrying no zero.
    BranchPoint,
}

/// Which point of the hyperelliptic curve an induced zero sits at.
///
/// Labels are indices into the quadratic signature's orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointRef {
    Weierstrass(usize),
    Pair { pair: usize, conjugate: bool },
}

/// The hyperelliptic locus of an abelian stratum, induced from a genus-0
/// quadratic signature (`Σ d_j = -4`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticLocus {
    quadratic: QuadraticSignature,
    cover_genus: u32,
    induced: AbelianStratum,
    point_types: Vec<PointType>,
    zero_points: Vec<PointRef>,
}

impl HyperellipticLocus {
    pub fn new(quadratic: QuadraticSignature) -> Result<Self> {
        if quadratic.base_genus != 0 {
            return Err(Error::NotHyperelliptic(quadratic.base_genus));
        }
        let cover_genus = quadratic.branch_count() as i64 / 2 - 1;
        if cover_genus < 2 {
            return Err(Error::GenusTooSmall(cover_genus));
        }
        let (induced, genus) = quadratic.induced_abelian()?;
        debug_assert_eq!(genus as i64, cover_genus);

        let mut point_types = Vec::with_capacity(quadratic.orders.len());
        let mut zero_points = Vec::new();
        for (label, &d) in quadratic.orders.iter().enumerate() {
            match lift(d) {
                None => point_types.push(PointType::BranchPoint),
                Some((order, 1)) => {
                    point_types.push(PointType::WeierstrassZero { order });
                    zero_points.push(PointRef::Weierstrass(label));
                }
                Some((order, _)) => {
                    point_types.push(PointType::ConjugatePair { order });
                    zero_points.push(PointRef::Pair {
                        pair: label,
                        conjugate: false,
                    });
                    zero_points.push(PointRef::Pair {
                        pair: label,
                        conjugate: true,
                    });
                }
            }
        }
        debug_assert_eq!(zero_points.len(), induced.zeros().len());
        Ok(HyperellipticLocus {
            quadratic,
            cover_genus: cover_genus as u32,
            induced: induced.with_component(ComponentLabel::Hyp),
            point_types,
            zero_points,
        })
    }

    pub fn quadratic(&self) -> &QuadraticSignature {
        &self.quadratic
    }

    pub fn cover_genus(&self) -> u32 {
        self.cover_genus
    }

    /// The abelian stratum on the cover, zeros listed in quadratic order.
    pub fn induced(&self) -> &AbelianStratum {
        &self.induced
    }

    /// One tag per entry of the quadratic signature.
    pub fn point_types(&self) -> &[PointType] {
        &self.point_types
    }

    /// One point per zero of [`HyperellipticLocus::induced`], same order.
    pub fn zero_points(&self) -> &[PointRef] {
        &self.zero_points
    }

    pub fn is_max_sum(&self) -> bool {
        self.quadratic.orders.iter().all(|&d| d % 2 == 0 || d == -1)
    }

    /// Whether this locus lies in `stratum` (same zero multiset).
    pub fn induces(&self, stratum: &AbelianStratum) -> bool {
        self.induced.signature() == stratum.signature()
    }
}
