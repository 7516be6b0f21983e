//! Domain errors shared across the crate.

use crate::lattice::CurveLabel;
use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An `E_ij` coefficient is positive, so no decomposition with
    /// non-negative cone weights exists.
    #[error("divisor is outside the cone: e[{i}][{j}] = {} > 0", format_rational(.value))]
    NotInCone { i: u8, j: u8, value: Rational },

    /// Some distinguished curve has non-positive degree, so the divisor
    /// cannot be ample.
    #[error("divisor cannot be ample: deg({label}) = {} <= 0", format_rational(.degree))]
    NotAmpleLike { label: CurveLabel, degree: Rational },

    /// The counting-exponent denominator `g1*g2 + g2*c1 + g1*c2` is not
    /// positive.
    #[error("non-positive exponent denominator: g1*g2 + g2*c1 + g1*c2 = {}", format_rational(.value))]
    NonPositiveDenominator { value: Rational },

    /// A fiber degree `g_i + c_i` is not positive.
    #[error("non-positive fiber degree: g{which} + c{which} = {}", format_rational(.value))]
    NonPositiveFiberDegree { which: u8, value: Rational },

    /// The counting region has no finite enumeration bound under the given
    /// parameters.
    #[error("counting region is unbounded for these parameters")]
    UnboundedRegion,

    /// Too few usable samples for an exponent fit.
    #[error("insufficient samples for fit: need {needed}, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
}

impl Error {
    /// Stable machine-readable code used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotInCone { .. } => "NotInCone",
            Error::NotAmpleLike { .. } => "NotAmpleLike",
            Error::NonPositiveDenominator { .. } => "NonPositiveDenominator",
            Error::NonPositiveFiberDegree { .. } => "NonPositiveFiberDegree",
            Error::UnboundedRegion => "UnboundedRegion",
            Error::InsufficientSamples { .. } => "InsufficientSamples",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
