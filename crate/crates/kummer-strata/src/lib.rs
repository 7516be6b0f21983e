//! Exact arithmetic for the stratification data of Kummer surfaces attached
//! to products of elliptic curves.
//!
//! The crate models the rank-18 sublattice of the Picard group spanned by
//! the fibration classes `F1`, `F2` and the sixteen exceptional curves
//! `E_ij`, decomposes ample divisors over the cone generators `A_{S,T}`,
//! computes the counting exponent and case classification for points off the
//! distinguished curves, identifies the minimal-degree curves that dominate
//! the count, and verifies the exponents empirically by exact lattice-point
//! enumeration.
//!
//! Everything that feeds a claim is exact: rationals are arbitrary-precision
//! fractions, the cone optimizer is an exact rational simplex, and the region
//! counter compares integer powers with no rounding anywhere. Floating point
//! appears only in least-squares exponent fits and the closed-form area
//! cross-checks.
//!
//! Start with the runnable examples (`cargo run --example first_layer`) or
//! the `kummer-strata` binary, a thin CLI over [`cli`].

pub mod cli;
pub mod cone;
pub mod error;
pub mod lattice;
pub mod projective;
pub mod rational;
pub mod region;
pub mod strata;

pub use cone::{
    decompose, gamma_polygon, optimize_denominator, AmpleDivisorInput, ConeDecomposition,
    DecompositionStrategy, GammaPolygon,
};
pub use error::{Error, Result};
pub use lattice::{a_class, curve_class, rank_of_span, CurveLabel, DivisorClass, SubsetPair};
pub use rational::Rational;
pub use region::{
    area_closed_form, count_region, count_sweep, fit_exponent, in_region, CountSample, GrowthFit,
    RegionParams,
};
pub use strata::{first_layer_report, StrataReport, TheoremCase};
