use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series division by a non-unit (zero constant coefficient)")]
    DivisionByNonUnit,
    #[error("series composition requires an inner series with zero constant term")]
    CompositionNonNilpotent,
    #[error("series operands differ in variable or truncation order")]
    IncompatibleSeries,
    #[error("umbral symbol `{0}` has no binding")]
    UnboundSymbol(String),
    #[error("truncation order {requested} exceeds the configured bound {bound}")]
    TruncationOverflow { requested: u32, bound: u32 },
    #[error("moment order {requested} exceeds the Monte Carlo cap {cap}")]
    MomentTooHigh { requested: u32, cap: u32 },
    #[error("quadrature did not reach tolerance {tolerance:e} (estimated error {estimate:e})")]
    QuadratureNonConvergent { tolerance: f64, estimate: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
