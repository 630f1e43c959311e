//! Two-point evaluation codes on the Hermitian curve `y^q + y = x^(q+1)` over
//! `F_{q^2}`.
//!
//! The crate builds the codes `C(d,a,b)` obtained by evaluating the sections of
//! `O_X(d)(-aP_inf - bP_0)` at all rational points of the curve other than the
//! two base points, and then studies their duals:
//!
//! * [`field`] — arithmetic in `F_{q^2}` with a pinned modulus registry,
//! * [`curve`] — rational points, tangent lines, local power-series
//!   expansions and monomial bases of Riemann-Roch spaces,
//! * [`plane`] — plane forms, zero-dimensional schemes on the curve and the
//!   `h^0`/`h^1` machinery of their ideal sheaves,
//! * [`code`] — code construction, parameter normalization and the
//!   tangent-line parameter reduction,
//! * [`prediction`] — closed-form dual-distance predictions (Park's case
//!   analysis) and the G1/G2/G3 classification,
//! * [`distance`] — exact dual minimum distance by pruned circuit search and
//!   the independent `h^1`-jump oracle,
//! * [`supports`] — geometric classification of minimum-weight supports and
//!   the full verification sweep.

pub mod code;
pub mod curve;
pub mod distance;
pub mod error;
pub mod field;
pub mod matrix;
pub mod plane;
pub mod prediction;
pub mod supports;

pub use code::{build_code, codes_equal, normalize_params, reduce_params, CodeParams, TwoPointCode};
pub use curve::{Curve, CurvePoint, Divisor};
pub use distance::{dual_min_distance, enumerate_min_supports, h1_oracle_distance, Circuit};
pub use error::{Error, Result};
pub use field::{Fe, Field, FieldSpec};
pub use matrix::Matrix;
pub use plane::{condition_matrix, find_witness, h0_h1, intersection_degree, PlaneForm, SchemeOnCurve, Witness};
pub use prediction::{classify_group, delta_ceil, delta_floor, predicted_delta, GroupLabel, Prediction};
pub use supports::{classify_support, verify_theorems, Clause, CodeReport, SupportClassification, VerifyReport};
