//! Exact spectra: hyperelliptic loci, the non-varying tables in genus 3, 4
//! and 5, square-tiled cyclic covers, stairs surfaces and a few named values.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::quadratic::{HyperellipticLocus, QuadraticSignature};
use crate::rational::Rational;
use crate::stratum::{AbelianStratum, ComponentLabel};

/// A finite list of exact rationals, kept in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSpectrum {
    values: Vec<Rational>,
}

impl RationalSpectrum {
    pub fn new(mut values: Vec<Rational>) -> Self {
        values.sort_by(|a, b| b.cmp(a));
        RationalSpectrum { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().sum()
    }
}

impl fmt::Display for RationalSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The `w_i` of a Teichmüller curve in a hyperelliptic locus:
/// `1` together with `1 - 2k/(d+2)` for every `d >= 1` and `0 < 2k <= d+1`.
pub fn hyperelliptic_w(locus: &HyperellipticLocus) -> Result<RationalSpectrum> {
    let mut values = vec![Rational::one()];
    for &d in locus.quadratic().orders().iter().filter(|&&d| d >= 1) {
        let d = d as i64;
        values.extend((1..=(d + 1) / 2).map(|k| Rational::one() - Rational::new(2 * k, d + 2)));
    }
    let expected = locus.cover_genus() as usize;
    if values.len() != expected {
        return Err(Error::LengthMismatch {
            got: values.len(),
            expected,
        });
    }
    Ok(RationalSpectrum::new(values))
}

/// `L(C) = (1/4) Σ_{d odd} 1/(d+2)`, poles included; checked against the sum
/// of [`hyperelliptic_w`].
pub fn hyperelliptic_sum(locus: &HyperellipticLocus) -> Result<Rational> {
    let formula = locus
        .quadratic()
        .orders()
        .iter()
        .filter(|&&d| d % 2 != 0)
        .map(|&d| Rational::new(1, d as i64 + 2))
        .sum::<Rational>()
        * Rational::new(1, 4);
    let from_w = hyperelliptic_w(locus)?.sum();
    if from_w != formula {
        return Err(Error::CrossCheckFailure {
            from_w: from_w.to_string(),
            from_formula: formula.to_string(),
        });
    }
    Ok(formula)
}

/// One row of the genus 3, 4 and 5 tables, stored as printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub zeros: &'static [u32],
    pub component: ComponentLabel,
    /// `w_2, ..., w_g` as printed; empty when only the sum is known.
    pub w_text: &'static [&'static str],
    pub sum_text: &'static str,
    /// The sum column is an upper bound (`≤`), not a value.
    pub sum_is_bound: bool,
    /// Quadratic signature that regenerates a hyperelliptic row.
    pub quadratic: Option<&'static str>,
}

impl TableRow {
    pub fn stratum(&self) -> AbelianStratum {
        AbelianStratum::new(self.zeros, self.component).expect("embedded table signature")
    }

    pub fn genus(&self) -> u32 {
        (self.zeros.iter().sum::<u32>() + 2) / 2
    }

    /// `w_1 = 1` followed by the printed values, reduced.
    pub fn w(&self) -> Vec<Rational> {
        if self.w_text.is_empty() {
            return Vec::new();
        }
        std::iter::once(Rational::one())
            .chain(
                self.w_text
                    .iter()
                    .map(|t| t.parse().expect("embedded table value")),
            )
            .collect()
    }

    pub fn sum(&self) -> Rational {
        self.sum_text.parse().expect("embedded table value")
    }

    pub fn locus(&self) -> Option<HyperellipticLocus> {
        self.quadratic.map(|q| {
            QuadraticSignature::parse(q)
                .and_then(|q| q.hyperelliptic_locus())
                .expect("embedded quadratic signature")
        })
    }
}

macro_rules! row {
    ([$($z:expr),+], $c:ident, [$($w:expr),*], $sum:expr) => {
        row!([$($z),+], $c, [$($w),*], $sum, None)
    };
    ([$($z:expr),+], $c:ident, [$($w:expr),*], $sum:expr, $q:expr) => {
        TableRow {
            zeros: &[$($z),+],
            component: ComponentLabel::$c,
            w_text: &[$($w),*],
            sum_text: $sum,
            sum_is_bound: false,
            quadratic: $q,
        }
    };
}

const GENUS_3: &[TableRow] = &[
    row!([4], Hyp, ["3/5", "1/5"], "9/5", Some("3,-1x7")),
    row!([4], Odd, ["2/5", "1/5"], "8/5"),
    row!([3, 1], Unspecified, ["2/4", "1/4"], "7/4"),
    row!([2, 2], Hyp, ["2/3", "1/3"], "2", Some("4,-1x8")),
    row!([2, 2], Odd, ["1/3", "1/3"], "5/3"),
    row!([2, 1, 1], Unspecified, ["1/2", "1/3"], "11/6"),
    TableRow {
        zeros: &[1, 1, 1, 1],
        component: ComponentLabel::Unspecified,
        w_text: &[],
        sum_text: "2",
        sum_is_bound: true,
        quadratic: None,
    },
];

const GENUS_4: &[TableRow] = &[
    row!([6], Hyp, ["5/7", "3/7", "1/7"], "16/7", Some("5,-1x9")),
    row!([6], Even, ["4/7", "2/7", "1/7"], "14/7"),
    row!([6], Odd, ["3/7", "2/7", "1/7"], "13/7"),
    row!([5, 1], Unspecified, ["1/2", "2/6", "1/6"], "2"),
    row!([3, 3], Hyp, ["3/4", "2/4", "1/4"], "5/2", Some("6,-1x10")),
    row!([3, 3], NonHyp, ["2/4", "1/4", "1/4"], "2"),
    row!([4, 2], Even, ["3/5", "1/3", "1/5"], "32/15"),
    row!([4, 2], Odd, ["2/5", "1/3", "1/5"], "29/15"),
    row!([2, 2, 2], Unspecified, ["1/3", "1/3", "1/3"], "2"),
    row!([3, 2, 1], Unspecified, ["1/2", "1/3", "1/4"], "25/12"),
];

const GENUS_5: &[TableRow] = &[
    row!(
        [8],
        Hyp,
        ["7/9", "5/9", "3/9", "1/9"],
        "25/9",
        Some("7,-1x11")
    ),
    row!([8], Even, ["5/9", "3/9", "2/9", "1/9"], "20/9"),
    row!([8], Odd, ["4/9", "3/9", "2/9", "1/9"], "19/9"),
    row!([5, 3], Unspecified, ["1/2", "1/3", "1/4", "1/6"], "9/4"),
    row!([6, 2], Odd, ["3/7", "1/3", "2/7", "1/7"], "46/21"),
    row!(
        [4, 4],
        Hyp,
        ["4/5", "3/5", "2/5", "1/5"],
        "3",
        Some("8,-1x12")
    ),
];

/// The embedded table for genus 3, 4 or 5.
pub fn nonvarying_table(genus: u32) -> Result<&'static [TableRow]> {
    match genus {
        3 => Ok(GENUS_3),
        4 => Ok(GENUS_4),
        5 => Ok(GENUS_5),
        g => Err(Error::UnsupportedGenus(g)),
    }
}

/// Aligned plain-text rendering: zeros, component, `w_2..w_g`, `Σ w_i`.
pub fn render_table(genus: u32) -> Result<String> {
    let rows = nonvarying_table(genus)?;
    let mut header: Vec<String> = vec!["zeros".into(), "component".into()];
    header.extend((2..=genus).map(|i| format!("w{i}")));
    header.push("sum w_i".into());
    let mut lines: Vec<Vec<String>> = vec![header];
    for row in rows {
        let zeros = row
            .zeros
            .iter()
            .map(|z| z.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let mut cells = vec![format!("({zeros})"), row.component.to_string()];
        for i in 0..(genus as usize - 1) {
            cells.push(row.w_text.get(i).map(|s| s.to_string()).unwrap_or_default());
        }
        cells.push(if row.sum_is_bound {
            format!("<= {}", row.sum_text)
        } else {
            row.sum_text.to_string()
        });
        lines.push(cells);
    }
    let widths: Vec<usize> = (0..lines[0].len())
        .map(|c| {
            lines
                .iter()
                .map(|l| l[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for line in &lines {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(cells.join(" | ").trim_end());
        out.push('\n');
    }
    Ok(out)
}

/// Genus of the cyclic cover `w^N = Π (z - z_i)^{a_i}`:
/// `g = N + 1 - (1/2) Σ gcd(a_i, N)`.
pub fn cyclic_cover_genus(n: u32, a: [u32; 4]) -> Result<u32> {
    if n < 1 {
        return Err(Error::ConstraintViolation("N must be at least 1".into()));
    }
    if let Some(&bad) = a.iter().find(|&&ai| ai == 0 || ai > n) {
        return Err(Error::ConstraintViolation(format!(
            "0 < a_i <= N fails for a_i = {bad}"
        )));
    }
    if a.iter().fold(n, |acc, &ai| acc.gcd(&ai)) != 1 {
        return Err(Error::ConstraintViolation(
            "gcd(N, a_1, ..., a_4) != 1".into(),
        ));
    }
    if a.iter().sum::<u32>() % n != 0 {
        return Err(Error::ConstraintViolation(
            "sum of a_i is not divisible by N".into(),
        ));
    }
    let gcds: u32 = a.iter().map(|ai| ai.gcd(&n)).sum();
    let doubled = 2 * (n as i64 + 1) - gcds as i64;
    if doubled < 0 || doubled % 2 != 0 {
        return Err(Error::ConstraintViolation(format!(
            "genus formula gives non-integral or negative value {doubled}/2"
        )));
    }
    Ok((doubled / 2) as u32)
}

/// Spectrum of `M_N(N-1, 1, N-1, 1)` for even `N`:
/// `{1} ∪ {2k/N, 2k/N : 1 <= k < N/2}`.
pub fn mn_spectrum(n: u32) -> Result<RationalSpectrum> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddN(n));
    }
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "N = {n} must be at least 4"
        )));
    }
    let n = n as i64;
    let mut values = vec![Rational::one()];
    for k in 1..n / 2 {
        values.push(Rational::new(2 * k, n));
        values.push(Rational::new(2 * k, n));
    }
    Ok(RationalSpectrum::new(values))
}

/// Spectrum of the stairs surface `S(N)`: odd numerators over `N` when `N` is
/// odd, even numerators when `N` is even, up to `N/N`.
pub fn stairs_spectrum(n: u32) -> Result<RationalSpectrum> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "N = {n} must be at least 3"
        )));
    }
    let first = if n % 2 == 1 { 1 } else { 2 };
    let values = (first..=n)
        .step_by(2)
        .map(|k| Rational::new(k as i64, n as i64))
        .collect();
    Ok(RationalSpectrum::new(values))
}

/// Genus of the stairs surface `S(N)`.
pub fn stairs_genus(n: u32) -> u32 {
    if n % 2 == 1 {
        n.div_ceil(2)
    } else {
        n / 2
    }
}

pub const WINDTREE: &str = "windtree";
pub const PRYM_WD6_CANDIDATES: &str = "prym_WD6_candidates";
pub const PRIMITIVE_31: &str = "primitive_31";

/// Named reference values: the wind-tree spectrum in `(2,2,2,2)`, the
/// candidate slopes for the Prym curves `W_D(6)` and the spectrum of
/// algebraically primitive curves in `(3,1)`.
pub fn reference_specials() -> BTreeMap<&'static str, RationalSpectrum> {
    let r = Rational::new;
    BTreeMap::from([
        (
            WINDTREE,
            RationalSpectrum::new(vec![r(1, 1), r(2, 3), r(2, 3), r(1, 3), r(1, 3)]),
        ),
        (
            PRYM_WD6_CANDIDATES,
            RationalSpectrum::new(vec![r(4, 7), r(2, 7), r(1, 7)]),
        ),
        (
            PRIMITIVE_31,
            RationalSpectrum::new(vec![r(1, 1), r(2, 4), r(1, 4)]),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn locus(text: &str) -> HyperellipticLocus {
        QuadraticSignature::parse(text)
            .unwrap()
            .hyperelliptic_locus()
            .unwrap()
    }

    fn strs(s: &RationalSpectrum) -> Vec<String> {
        s.values().iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn hyperelliptic_w_examples() {
        assert_eq!(
            strs(&hyperelliptic_w(&locus("3,-1x7")).unwrap()),
            ["1", "3/5", "1/5"]
        );
        assert_eq!(
            strs(&hyperelliptic_w(&locus("7,-1x11")).unwrap()),
            ["1", "7/9", "5/9", "1/3", "1/9"]
        );
        assert_eq!(
            strs(&hyperelliptic_w(&locus("6,-1x10")).unwrap()),
            ["1", "3/4", "1/2", "1/4"]
        );
    }

    #[test]
    fn hyperelliptic_sum_examples() {
        assert_eq!(hyperelliptic_sum(&locus("3,-1x7")), Ok(Rational::new(9, 5)));
        assert_eq!(
            hyperelliptic_sum(&locus("5,-1x9")),
            Ok(Rational::new(16, 7))
        );
        assert_eq!(
            hyperelliptic_sum(&locus("4,4,-1x12")),
            Ok(Rational::integer(3))
        );
        assert_eq!(hyperelliptic_sum(&locus("1,-1x5")), Ok(Rational::new(4, 3)));
    }

    #[test]
    fn tables() {
        assert_eq!(nonvarying_table(3).unwrap().len(), 7);
        assert_eq!(nonvarying_table(4).unwrap().len(), 10);
        assert_eq!(nonvarying_table(5).unwrap().len(), 6);
        assert_eq!(nonvarying_table(6), Err(Error::UnsupportedGenus(6)));
        let row = &nonvarying_table(4).unwrap()[6];
        assert_eq!(
            (row.zeros, row.component),
            (&[4, 2][..], ComponentLabel::Even)
        );
        assert_eq!(row.sum(), Rational::new(32, 15));
        let row = &nonvarying_table(5).unwrap()[3];
        assert_eq!(row.w_text, ["1/2", "1/3", "1/4", "1/6"]);
        assert_eq!(row.sum(), Rational::new(9, 4));
    }

    #[test]
    fn rendered_table_keeps_printed_forms() {
        let text = render_table(4).unwrap();
        assert_eq!(text.lines().count(), 11);
        assert!(text.contains("14/7"));
        assert!(text.contains("2/6"));
        assert!(render_table(3).unwrap().contains("<= 2"));
    }

    #[test]
    fn cyclic_genus() {
        assert_eq!(cyclic_cover_genus(4, [3, 1, 3, 1]), Ok(3));
        assert_eq!(cyclic_cover_genus(8, [7, 1, 7, 1]), Ok(7));
        assert!(matches!(
            cyclic_cover_genus(4, [2, 2, 2, 2]),
            Err(Error::ConstraintViolation(_))
        ));
        assert!(matches!(
            cyclic_cover_genus(4, [0, 1, 3, 0]),
            Err(Error::ConstraintViolation(_))
        ));
        assert!(matches!(
            cyclic_cover_genus(4, [1, 1, 1, 2]),
            Err(Error::ConstraintViolation(_))
        ));
        assert!(matches!(
            cyclic_cover_genus(4, [5, 1, 1, 1]),
            Err(Error::ConstraintViolation(_))
        ));
    }

    #[test]
    fn mn_and_stairs() {
        assert_eq!(strs(&mn_spectrum(4).unwrap()), ["1", "1/2", "1/2"]);
        assert_eq!(
            strs(&mn_spectrum(6).unwrap()),
            ["1", "2/3", "2/3", "1/3", "1/3"]
        );
        assert_eq!(mn_spectrum(5), Err(Error::OddN(5)));
        assert!(mn_spectrum(2).is_err());
        assert_eq!(strs(&stairs_spectrum(3).unwrap()), ["1", "1/3"]);
        assert_eq!(strs(&stairs_spectrum(4).unwrap()), ["1", "1/2"]);
        assert_eq!(strs(&stairs_spectrum(5).unwrap()), ["1", "3/5", "1/5"]);
        assert_eq!(
            stairs_spectrum(5).unwrap(),
            hyperelliptic_w(&locus("3,-1x7")).unwrap()
        );
        assert!(stairs_spectrum(2).is_err());
    }

    #[test]
    fn specials() {
        let specials = reference_specials();
        assert_eq!(specials[WINDTREE].sum(), Rational::integer(3));
        let prym_row = &nonvarying_table(4).unwrap()[1];
        assert_eq!(specials[PRYM_WD6_CANDIDATES].values(), &prym_row.w()[1..]);
        let primitive = &nonvarying_table(3).unwrap()[2];
        assert_eq!(specials[PRIMITIVE_31].values(), &primitive.w()[..]);
    }
}
