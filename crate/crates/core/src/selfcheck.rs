//! Exhaustive cross-checks over small strata and quadratic signatures.
//!
//! Each check returns the number of cases examined and the first
//! counterexample, if any.

use crate::bounds::{self, BoundMode};
use crate::divisor::{exact_h, semigroup_h0, WeierstrassDivisor};
use crate::quadratic::QuadraticSignature;
use crate::rational::Rational;
use crate::spectra;
use crate::stratum::{AbelianStratum, ComponentLabel};

/// Partitions of `n` into parts of size at most `max_part`, parts descending.
pub fn partitions(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Every stratum of genus `2..=max_genus`.
pub fn abelian_strata(max_genus: u32) -> Vec<AbelianStratum> {
    (2..=max_genus)
        .flat_map(|g| partitions(2 * g - 2, 2 * g - 2))
        .map(|p| AbelianStratum::new(&p, ComponentLabel::Unspecified).expect("partition of 2g-2"))
        .collect()
}

/// Every quadratic signature `(d_1, ..., d_r, -1^p)` with `Σ d_j = -4`,
/// positive entries at most `max_entry`, `Σ |d_j| <= max_abs_sum` and a cover
/// of genus at least 2.
pub fn genus_zero_quadratics(max_entry: u32, max_abs_sum: u32) -> Vec<QuadraticSignature> {
    // Σ|d| = 2·(sum of positive entries) + 4
    let max_positive = max_abs_sum.saturating_sub(4) / 2;
    let mut out = Vec::new();
    for total in 1..=max_positive {
        for parts in partitions(total, max_entry) {
            let mut orders: Vec<i32> = parts.iter().map(|&d| d as i32).collect();
            orders.extend(std::iter::repeat_n(-1, total as usize + 4));
            let q = QuadraticSignature::new(&orders).expect("genus 0 by construction");
            if q.branch_count() >= 6 {
                out.push(q);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            counterexample: None,
        }
    }

    /// Records one case; keeps only the first failure.
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

pub const MAX_GENUS: u32 = 10;

pub fn slope_sequences() -> CheckOutcome {
    let mut t = Tally::new("slope sequences: length 2g-2, descending, in (-1,0), sum -(g-1)");
    for s in abelian_strata(MAX_GENUS) {
        let seq = s.slope_sequence();
        let v = seq.values();
        let g = s.genus() as i64;
        let sum: Rational = v.iter().sum();
        let ok = v.len() as i64 == 2 * g - 2
            && v.windows(2).all(|w| w[0] >= w[1])
            && v.iter().all(|x| *x > -1 && *x < 0)
            && sum == Rational::integer(1 - g);
        t.case(ok, || format!("stratum ({s}): {v:?}"));
    }
    t.finish()
}

pub fn kappa_below_cap() -> CheckOutcome {
    let mut t = Tally::new("kappa_mu < (g+1)/2");
    for s in abelian_strata(MAX_GENUS) {
        let cap = Rational::new(s.genus() as i64 + 1, 2);
        let kappa = s.kappa_mu();
        t.case(kappa < cap, || {
            format!("stratum ({s}): kappa {kappa} >= {cap}")
        });
    }
    t.finish()
}

pub fn rational_round_trip() -> CheckOutcome {
    let mut t = Tally::new("rational (p/q + r/s) - r/s = p/q");
    let values: Vec<Rational> = (-7..=7)
        .flat_map(|p| [1, 2, 3, 7, 9, 12, 1_000_003].map(|q| Rational::new(p, q)))
        .collect();
    for a in &values {
        for b in &values {
            let back = (a + b) - b.clone();
            t.case(
                &back == a && back.to_string().parse::<Rational>().as_ref() == Ok(a),
                || format!("{a} + {b} - {b} = {back}"),
            );
        }
    }
    t.finish()
}

pub fn cover_genus_agreement() -> CheckOutcome {
    let mut t = Tally::new("Riemann-Hurwitz genus = (Σ m_i + 2)/2, B even");
    for q in genus_zero_quadratics(60, 60) {
        let ok = match q.induced_abelian() {
            Ok((s, g)) => {
                let from_zeros = (s.zeros().iter().sum::<u32>() + 2) / 2;
                g == from_zeros
                    && q.branch_count() % 2 == 0
                    && g as usize == q.branch_count() / 2 - 1
            }
            Err(_) => false,
        };
        t.case(ok, || format!("Q({q})"));
    }
    t.finish()
}

pub fn max_sum_loci() -> CheckOutcome {
    let mut t = Tally::new("Q(2k_1..2k_n, -1^{2g+2}) lifts to n conjugate pairs in genus g");
    for total in 1..=12 {
        for ks in partitions(total, total) {
            // Σ 2k_i - (2g + 2) = -4
            let g = total as usize + 1;
            let mut orders: Vec<i32> = ks.iter().map(|&k| 2 * k as i32).collect();
            orders.extend(std::iter::repeat_n(-1, 2 * g + 2));
            let ok = QuadraticSignature::new(&orders)
                .and_then(|q| q.hyperelliptic_locus().map(|l| (q, l)))
                .map(|(q, l)| {
                    let mut expected: Vec<u32> = ks.iter().flat_map(|&k| [k, k]).collect();
                    expected.sort_unstable_by(|a, b| b.cmp(a));
                    q.is_max_sum_locus() == Ok(true)
                        && l.induced().signature() == &expected[..]
                        && l.cover_genus() as usize == g
                        && spectra::hyperelliptic_sum(&l)
                            == Ok(Rational::new(l.cover_genus() as i64 + 1, 2))
                })
                .unwrap_or(false);
            t.case(ok, || format!("k = {ks:?}"));
        }
    }
    t.finish()
}

pub fn semigroup_agreement() -> CheckOutcome {
    let mut t = Tally::new("h0(dW) by reduction = Weierstrass semigroup count (g <= 20, d <= 6g)");
    for g in 2..=20 {
        for d in 0..=6 * g {
            let mut div = WeierstrassDivisor::new(g).expect("genus >= 2");
            div.add_weierstrass(0, d).expect("single point");
            let (rule, gaps) = (div.h0(), semigroup_h0(g, d));
            t.case(rule == gaps, || {
                format!("g={g}, d={d}: reduction {rule}, semigroup {gaps}")
            });
        }
    }
    t.finish()
}

/// Divisors with up to three Weierstrass points and two pairs, genus 2..=6.
fn sample_divisors() -> Vec<WeierstrassDivisor> {
    let mut out = Vec::new();
    for g in 2..=6u32 {
        for w in 0..4u32.pow(3) {
            let coeffs = [w % 4, (w / 4) % 4, w / 16];
            for p in 0..4u32.pow(4) {
                let pairs = [(p % 4, (p / 4) % 4), ((p / 16) % 4, p / 64)];
                let mut d = WeierstrassDivisor::new(g).expect("genus >= 2");
                for (label, &c) in coeffs.iter().enumerate() {
                    d.add_weierstrass(label, c).expect("few points");
                }
                for (label, &(a, b)) in pairs.iter().enumerate() {
                    d.add_pair(label, a, b);
                }
                out.push(d);
            }
        }
    }
    out
}

pub fn clifford_and_riemann_roch() -> CheckOutcome {
    let mut t = Tally::new("Clifford bound and Riemann-Roch floor on sample divisors");
    for d in sample_divisors() {
        let (h, deg, g) = (d.h0() as i64, d.degree() as i64, d.genus() as i64);
        let clifford = deg > 2 * g - 2 || 2 * h <= 2 + deg;
        let floor = h > deg - g && h >= 1 && (deg != 0 || h == 1);
        t.case(clifford && floor, || format!("g={g}, D={d}: h0={h}"));
    }
    t.finish()
}

pub fn canonical_and_exact_h() -> CheckOutcome {
    let mut t = Tally::new("h0(K) = g and exact H_j >= 2j-2 on every locus (Σ|d| <= 40)");
    for q in genus_zero_quadratics(40, 40) {
        let locus = q.hyperelliptic_locus().expect("genus >= 2");
        let g = locus.cover_genus();
        let mut canonical = WeierstrassDivisor::new(g).expect("genus >= 2");
        for (&m, &p) in locus.induced().zeros().iter().zip(locus.zero_points()) {
            for _ in 0..m {
                canonical.add_point(p).expect("locus points");
            }
        }
        let h = exact_h(&locus, &locus.induced().slope_sequence());
        let ok = canonical.h0() == g
            && match &h {
                Ok(h) => {
                    h[0] == 1
                        && h[g as usize - 1] == 2 * g as usize - 2
                        && h.windows(2).all(|w| w[0] < w[1])
                        && h.iter().enumerate().all(|(i, &hj)| hj + 2 >= 2 * (i + 1))
                }
                Err(_) => false,
            };
        t.case(ok, || format!("Q({q}): h0(K)={}, H={h:?}", canonical.h0()));
    }
    t.finish()
}

pub fn main_theorem() -> CheckOutcome {
    let mut t = Tally::new("generic sum bound <= (g+1)/2, equality iff a_{2j-1} = a_{2j}");
    for s in abelian_strata(MAX_GENUS) {
        let report = bounds::sum_upper_bound(&s, &BoundMode::Generic).expect("generic mode");
        let a = s.slope_sequence().values();
        let paired = a.chunks(2).all(|c| c[0] == c[1]);
        let equal = report.sum_upper == report.theorem_cap;
        let ok = report.sum_upper <= report.theorem_cap
            && equal == paired
            && report.effective_sum >= report.kappa_lower;
        t.case(ok, || {
            format!(
                "stratum ({s}): sum {} cap {}",
                report.sum_upper, report.theorem_cap
            )
        });
    }
    t.finish()
}

pub fn mode_monotonicity() -> CheckOutcome {
    let mut t = Tally::new("non-hyp w_upper <= generic w_upper, both weakly decreasing");
    for s in abelian_strata(MAX_GENUS) {
        let generic = bounds::w_upper_bounds(&s, &BoundMode::Generic).expect("generic");
        let strict = bounds::w_upper_bounds(&s, &BoundMode::NonHyperelliptic).expect("non-hyp");
        let ok = generic.iter().zip(&strict).all(|(g, n)| n <= g)
            && generic.windows(2).all(|w| w[0] >= w[1])
            && strict.windows(2).all(|w| w[0] >= w[1])
            && generic[0] == 1
            && strict[0] == 1;
        t.case(ok, || {
            format!("stratum ({s}): generic {generic:?} non-hyp {strict:?}")
        });
    }
    t.finish()
}

pub fn partial_sums() -> CheckOutcome {
    let mut t =
        Tally::new("partial sums monotone with weakly decreasing increments, total = Σ w_upper");
    for s in abelian_strata(8) {
        for mode in [BoundMode::Generic, BoundMode::NonHyperelliptic] {
            let g = s.genus() as usize;
            let sums: Vec<Rational> = (1..=g)
                .map(|k| bounds::partial_sum_bound(&s, &mode, k).expect("k in range"))
                .collect();
            let steps: Vec<Rational> = std::iter::once(sums[0].clone())
                .chain(sums.windows(2).map(|w| &w[1] - &w[0]))
                .collect();
            let total: Rational = bounds::w_upper_bounds(&s, &mode)
                .expect("mode")
                .iter()
                .sum();
            let ok = sums[g - 1] == total
                && steps.iter().all(|x| !x.is_negative())
                && steps.windows(2).all(|w| w[0] >= w[1]);
            t.case(ok, || format!("stratum ({s}), {mode}: {sums:?}"));
        }
    }
    t.finish()
}

pub fn exact_dominance() -> CheckOutcome {
    let mut t = Tally::new("hyp-exact w_upper = hyperelliptic w-list (Σ|d| <= 40)");
    for q in genus_zero_quadratics(40, 40) {
        let locus = q.hyperelliptic_locus().expect("genus >= 2");
        let stratum = locus.induced().clone();
        let mode = BoundMode::HyperellipticExact(locus.clone());
        let exact = bounds::w_upper_bounds(&stratum, &mode);
        let generic = bounds::w_upper_bounds(&stratum, &BoundMode::Generic).expect("generic");
        let yz = spectra::hyperelliptic_w(&locus).expect("valid locus");
        let ok = match &exact {
            Ok(w) => w == yz.values() && w.iter().zip(&generic).all(|(e, g)| e <= g),
            Err(_) => false,
        };
        t.case(ok, || format!("Q({q}): exact {exact:?} formula {yz}"));
    }
    t.finish()
}

pub fn cross_formula() -> CheckOutcome {
    let mut t =
        Tally::new("Σ hyperelliptic w-list = (1/4) Σ_{d odd} 1/(d+2) (entries <= 19, Σ|d| <= 60)");
    for q in genus_zero_quadratics(19, 60) {
        let locus = q.hyperelliptic_locus().expect("genus >= 2");
        let result = spectra::hyperelliptic_sum(&locus);
        t.case(result.is_ok(), || format!("Q({q}): {result:?}"));
    }
    t.finish()
}

pub fn tables() -> CheckOutcome {
    let mut t = Tally::new(
        "table rows: sum = 1 + Σw, kappa <= sum <= (g+1)/2, w <= w_upper, hyp rows regenerate",
    );
    for genus in 3..=5 {
        for row in spectra::nonvarying_table(genus).expect("embedded genus") {
            let s = row.stratum();
            let cap = Rational::new(genus as i64 + 1, 2);
            let sum = row.sum();
            let mut ok = s.genus() == genus && s.kappa_mu() <= sum && sum <= cap;
            if !row.sum_is_bound {
                let w = row.w();
                let mode = match row.locus() {
                    Some(locus) => BoundMode::HyperellipticExact(locus),
                    None => BoundMode::NonHyperelliptic,
                };
                let upper = bounds::w_upper_bounds(&s, &mode).expect("table stratum");
                ok &= w.len() == genus as usize
                    && w.iter().sum::<Rational>() == sum
                    && w.iter().zip(&upper).all(|(x, u)| x <= u);
                if let Some(locus) = row.locus() {
                    ok &= spectra::hyperelliptic_w(&locus).map(|y| y.values() == &w[..])
                        == Ok(true)
                        && spectra::hyperelliptic_sum(&locus) == Ok(sum.clone())
                        && locus.induces(&s);
                }
            }
            t.case(ok, || {
                format!("genus {genus} row {:?} {}", row.zeros, row.component)
            });
        }
    }
    t.finish()
}

pub fn cyclic_and_stairs() -> CheckOutcome {
    let mut t = Tally::new("M_N(N-1,1,N-1,1) and stairs spectra match hyperelliptic loci");
    for n in (4..=40).step_by(2) {
        let spectrum = spectra::mn_spectrum(n).expect("even N");
        let g = spectra::cyclic_cover_genus(n, [n - 1, 1, n - 1, 1]).expect("valid quadruple");
        let yz = QuadraticSignature::parse(&format!("{0},{0},-1x{1}", n - 2, 2 * n))
            .and_then(|q| q.hyperelliptic_locus())
            .and_then(|l| spectra::hyperelliptic_w(&l))
            .ok();
        let ok = spectrum.len() == g as usize
            && g == n - 1
            && spectrum.sum() == Rational::new(g as i64 + 1, 2)
            && yz.as_ref() == Some(&spectrum);
        t.case(ok, || format!("N={n}: {spectrum} vs {yz:?}"));
    }
    for n in 3..=40u32 {
        let spectrum = spectra::stairs_spectrum(n).expect("N >= 3");
        let g = spectra::stairs_genus(n);
        let text = if n % 2 == 1 {
            format!("{},-1x{}", 2 * g - 3, 2 * g + 1)
        } else {
            format!("{},-1x{}", 2 * g - 2, 2 * g + 2)
        };
        let yz = QuadraticSignature::parse(&text)
            .and_then(|q| q.hyperelliptic_locus())
            .and_then(|l| spectra::hyperelliptic_w(&l));
        t.case(
            yz.as_ref() == Ok(&spectrum) && spectrum.len() == g as usize,
            || format!("S({n}): {spectrum} vs {yz:?}"),
        );
    }
    t.finish()
}

/// Every check, in reporting order.
pub const CHECKS: [fn() -> CheckOutcome; 15] = [
    slope_sequences,
    kappa_below_cap,
    rational_round_trip,
    cover_genus_agreement,
    max_sum_loci,
    semigroup_agreement,
    clifford_and_riemann_roch,
    canonical_and_exact_h,
    main_theorem,
    mode_monotonicity,
    partial_sums,
    exact_dominance,
    cross_formula,
    tables,
    cyclic_and_stairs,
];

pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS.iter().map(|check| check()).collect()
}
