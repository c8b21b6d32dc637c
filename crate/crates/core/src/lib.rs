//! Exact upper and lower bounds for sums of Lyapunov exponents of Teichmüller
//! curves in strata of abelian differentials.
//!
//! * [`stratum`]: signatures, genus, `κ_μ`, slope sequences.
//! * [`quadratic`]: quadratic signatures, double covers, hyperelliptic loci.
//! * [`divisor`]: `h⁰` on hyperelliptic curves and the exact `H_j`.
//! * [`bounds`]: per-exponent and sum bounds, equality cases.
//! * [`spectra`]: hyperelliptic spectra, non-varying tables, cyclic covers.
//! * [`selfcheck`]: exhaustive consistency sweeps.
//!
//! All arithmetic is exact.

pub mod bounds;
pub mod divisor;
pub mod error;
pub mod quadratic;
pub mod rational;
pub mod selfcheck;
pub mod spectra;
pub mod stratum;

pub use bounds::{
    classify_equality, h_floor, individual_bound, partial_sum_bound, siegel_veech_residual,
    sum_upper_bound, w_upper_bounds, BoundMode, BoundReport, EqualityCase, IndividualBound,
};
pub use divisor::{exact_h, semigroup_h0, WeierstrassDivisor};
pub use error::{Error, Result};
pub use quadratic::{HyperellipticLocus, PointRef, PointType, QuadraticSignature};
pub use rational::Rational;
pub use spectra::{
    cyclic_cover_genus, hyperelliptic_sum, hyperelliptic_w, mn_spectrum, nonvarying_table,
    reference_specials, stairs_spectrum, RationalSpectrum, TableRow,
};
pub use stratum::{AbelianStratum, ComponentLabel, SlopeSequence};
