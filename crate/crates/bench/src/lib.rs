//! Fixtures shared by the benchmarks.

use lyabound::{AbelianStratum, ComponentLabel, HyperellipticLocus, QuadraticSignature};

/// The minimal and principal strata of genus `g`.
pub fn extreme_strata(g: u32) -> [AbelianStratum; 2] {
    let minimal =
        AbelianStratum::new(&[2 * g - 2], ComponentLabel::Unspecified).expect("valid stratum");
    let principal = AbelianStratum::new(&vec![1; 2 * g as usize - 2], ComponentLabel::Unspecified)
        .expect("valid stratum");
    [minimal, principal]
}

/// `Q(4g-4, -1^{4g})`, whose cover lies in the minimal hyperelliptic component.
pub fn minimal_locus(g: u32) -> HyperellipticLocus {
    let mut orders = vec![4 * g as i32 - 4];
    orders.extend(std::iter::repeat_n(-1, 4 * g as usize));
    QuadraticSignature::new(&orders)
        .and_then(|q| q.hyperelliptic_locus())
        .expect("valid locus")
}
