//! Two-point evaluation codes `C(d, a, b)` on the Hermitian curve.
//!
//! `C(d, a, b)` evaluates the Riemann-Roch space
//! `L((d(q+1) - a) P_inf - b P_0)` at the `q^3 - 1` rational points other
//! than the two base points.  A pair `(m, n)` is first normalized to the
//! unique `(d, a, b)` with `d > 0`, `0 <= a, b <= q` whose divisor is
//! linearly equivalent to `m P_inf + n P_0`, moving multiples of
//! `(q+1) P_0 ~ (q+1) P_inf` across.

use std::sync::Arc;

use serde::Serialize;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::matrix::Matrix;

/// Parameters of a two-point code, always carried in normalized `(d, a, b)`
/// form; the original `(m, n)` is kept when the code was given that way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub q: u32,
    pub d: i64,
    pub a: i64,
    pub b: i64,
    /// The `(m, n)` pair this was normalized from, if any.
    pub origin: Option<(i64, i64)>,
}

impl CodeParams {
    pub fn from_dab(q: u32, d: i64, a: i64, b: i64) -> Result<CodeParams> {
        let qi = i64::from(q);
        if d <= 0 {
            return Err(Error::BadParameter(format!("d must be positive, got {d}")));
        }
        if !(0..=qi).contains(&a) || !(0..=qi).contains(&b) {
            return Err(Error::BadParameter(format!(
                "a and b must lie in 0..={qi}, got ({a}, {b})"
            )));
        }
        Ok(CodeParams { q, d, a, b, origin: None })
    }

    pub fn from_mn(q: u32, m: i64, n: i64) -> Result<CodeParams> {
        let (d, a, b) = normalize_params(m, n, q)?;
        Ok(CodeParams { q, d, a, b, origin: Some((m, n)) })
    }

    /// Degree of the underlying divisor, `d(q+1) - a - b = m + n`.
    pub fn deg_g(&self) -> i64 {
        self.d * (i64::from(self.q) + 1) - self.a - self.b
    }

    /// Codes with `b = 0` degenerate to one-point codes and are flagged as
    /// not of interest (they are still constructible).
    pub fn of_interest(&self) -> bool {
        self.b != 0
    }
}

/// Normalize `(m, n)` with `m + n > 0` to the unique `(d, a, b)`, `d > 0`,
/// `0 <= a, b <= q`, with `m P_inf + n P_0 ~ d(q+1) P_inf - a P_inf - b P_0`.
pub fn normalize_params(m: i64, n: i64, q: u32) -> Result<(i64, i64, i64)> {
    if m + n <= 0 {
        return Err(Error::DegenerateCode(m + n));
    }
    let h = i64::from(q) + 1;
    // n = n0 (q+1) + n1 with 0 <= n1 <= q; move whole blocks to P_inf.
    let n0 = n.div_euclid(h);
    let n1 = n.rem_euclid(h);
    let (m_inf, b) = if n1 == 0 {
        (m + n0 * h, 0)
    } else {
        // n1 P_0 = (q+1) P_0 - (q+1 - n1) P_0 ~ (q+1) P_inf - b P_0
        (m + (n0 + 1) * h, h - n1)
    };
    // m_inf = d (q+1) - a with 0 <= a <= q
    let d = m_inf.div_euclid(h) + i64::from(m_inf.rem_euclid(h) != 0);
    let a = d * h - m_inf;
    debug_assert_eq!(m + n, d * h - a - b);
    debug_assert!(d > 0 && (0..=i64::from(q)).contains(&a) && (0..=i64::from(q)).contains(&b));
    Ok((d, a, b))
}

/// A constructed two-point code: monomial basis, evaluation set order and
/// generator matrix. Immutable and shareable.
#[derive(Debug, Clone)]
pub struct TwoPointCode {
    params: CodeParams,
    basis: Vec<(i64, i64)>,
    curve: Arc<Curve>,
    matrix: Matrix,
}

impl TwoPointCode {
    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn basis(&self) -> &[(i64, i64)] {
        &self.basis
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn curve_arc(&self) -> Arc<Curve> {
        Arc::clone(&self.curve)
    }

    pub fn generator_matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Code length `q^3 - 1`.
    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    /// Code dimension.
    pub fn k(&self) -> usize {
        self.matrix.rows()
    }

    /// Does the length hypothesis `#B > d (q+1)` of the `h^1` dictionary
    /// hold? True for every `d <= q - 1`.
    pub fn length_hypothesis_holds(&self) -> bool {
        (self.n() as i64) > self.params.d * (i64::from(self.params.q) + 1)
    }

    /// Text export: header `q d a b k n`, then `k` rows of `g^e`/`0`.
    pub fn export_text(&self) -> String {
        let p = self.params;
        let f = self.curve.field();
        let mut out = format!("{} {} {} {} {} {}\n", p.q, p.d, p.a, p.b, self.k(), self.n());
        for r in 0..self.k() {
            let row: Vec<String> =
                self.matrix.row(r).iter().map(|&v| f.display(v)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// JSON export with exponent integers, `-1` encoding zero.
    pub fn export_json(&self) -> serde_json::Value {
        let p = self.params;
        let f = self.curve.field();
        let rows: Vec<Vec<i64>> = (0..self.k())
            .map(|r| {
                self.matrix
                    .row(r)
                    .iter()
                    .map(|&v| f.exp(v).map_or(-1, i64::from))
                    .collect()
            })
            .collect();
        serde_json::json!({
            "q": p.q, "d": p.d, "a": p.a, "b": p.b,
            "k": self.k(), "n": self.n(),
            "basis": self.basis,
            "rows": rows,
        })
    }
}

/// Evaluate the monomial basis of `L((d(q+1) - a) P_inf - b P_0)` on the
/// ordered evaluation set `B`.
pub fn build_code(params: CodeParams, curve: Arc<Curve>) -> Result<TwoPointCode> {
    assert_eq!(params.q, curve.q(), "params and curve must agree on q");
    let q = curve.qi();
    let basis = curve.monomial_basis(params.d * (q + 1) - params.a, -params.b);
    if basis.is_empty() {
        return Err(Error::ZeroCode { d: params.d, a: params.a, b: params.b });
    }
    let f = curve.field();
    let points = curve.evaluation_points();
    let mut rows = Vec::with_capacity(basis.len());
    for &(i, j) in &basis {
        let row: Vec<Fe> = points
            .iter()
            .map(|p| {
                let crate::curve::CurvePoint::Affine { x, y } = *p else {
                    unreachable!("B contains affine points only")
                };
                // y != 0 on B, so negative powers of y are legal
                f.mul(f.pow(x, i).unwrap(), f.pow(y, j).unwrap())
            })
            .collect();
        rows.push(row);
    }
    let matrix = Matrix::from_rows(rows);
    assert_eq!(
        matrix.rank(f),
        matrix.rows(),
        "monomial basis must evaluate to independent rows"
    );
    Ok(TwoPointCode { params, basis, curve, matrix })
}

/// Two codes are equal iff their generator matrices have the same reduced
/// row-echelon form (identical row spaces).
pub fn codes_equal(c1: &TwoPointCode, c2: &TwoPointCode) -> bool {
    if c1.params.q != c2.params.q || c1.n() != c2.n() {
        return false;
    }
    let f = c1.curve.field();
    c1.matrix.row_space_canonical(f) == c2.matrix.row_space_canonical(f)
}

/// Outcome of the tangent-line parameter reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Reduction {
    /// The largest `i <= 2` such that the i-th smallest of `a, b` is at most
    /// `d - 2 + i`; zero if there is none.
    pub r: u8,
    pub d: i64,
    pub a: i64,
    pub b: i64,
    /// Whether the roles of `a` and `b` were exchanged to sort them.
    pub swapped: bool,
}

/// Reduce `(d, a, b)` with `d > 2` by splitting off forced tangent-line
/// components: if `b <= d` nothing happens (`r = 2`); if `b > d >= a + 1`
/// the `P_0` conditions are absorbed by the tangent line at `P_0`
/// (`r = 1`, new parameters `(d-1, a, 0)`); if also `a > d - 1` both tangent
/// lines split off (`r = 0`, new parameters `(d-2, 0, 0)`).
pub fn reduce_params(d: i64, a: i64, b: i64) -> Result<Reduction> {
    if d <= 2 {
        return Err(Error::ReductionOutOfRange(d));
    }
    let swapped = a > b;
    let (a, b) = if swapped { (b, a) } else { (a, b) };
    let (r, d2, a2, b2) = if b <= d {
        (2, d, a, b)
    } else if a <= d - 1 {
        (1, d - 1, a, 0)
    } else {
        (0, d - 2, 0, 0)
    };
    Ok(Reduction { r, d: d2, a: a2, b: b2, swapped })
}
