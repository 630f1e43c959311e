//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// `make_field` was asked for a `q` outside the modulus registry.
    #[error("unsupported field: q = {0} is not in the registry")]
    UnsupportedField(u32),

    #[error("division by zero in F_{{q^2}}")]
    DivisionByZero,

    /// `m + n <= 0`: the evaluation code would be degenerate.
    #[error("degenerate code: m + n = {0} must be positive")]
    DegenerateCode(i64),

    /// The Riemann-Roch space is trivial, so there is nothing to evaluate.
    #[error("zero code: the monomial basis for (d,a,b) = ({d},{a},{b}) is empty")]
    ZeroCode { d: i64, a: i64, b: i64 },

    #[error("cannot take the line through a point and itself")]
    IdenticalPoints,

    /// Parameter reduction requires `d > 2`.
    #[error("parameter reduction requires d > 2, got d = {0}")]
    ReductionOutOfRange(i64),

    /// No dependent column set was found below the requested weight cap.
    #[error("exceeds search bound: no dependent set of size <= {0}")]
    SearchBoundExceeded(usize),

    /// A local expansion ran out of coefficients before a nonzero one showed
    /// up; the caller should raise the expansion order.
    #[error("raise expansion order: no nonzero coefficient within order {0}")]
    ExpansionOrderExhausted(usize),

    #[error("form vanishes identically; its restriction to the curve has no valuation")]
    ZeroForm,

    #[error("parameter out of range: {0}")]
    BadParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
