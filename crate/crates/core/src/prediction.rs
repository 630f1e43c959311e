//! Closed-form dual minimum distances and the G1/G2/G3 classification.
//!
//! The two formulas are Park's: a six-case analysis for divisors written as
//! `K + m P_inf + n P_0` with both parts decomposed as `v = v0(q+1) - v1`
//! (the ceiling variant), and the rule `delta = m0 + n0 + 2` for divisors
//! `m P_inf + n P_0` decomposed as `v = v0(q+1) + v1` (the floor variant).
//! Which one applies depends on where `deg G` sits relative to the canonical
//! degree `q^2 - q - 2`, and on whether the divisor is equivalent to a
//! one-point divisor, which on `{P_0, P_inf}` reduces to divisibility of the
//! coefficients by `q + 1`.
//!
//! Group (G1) is taken with the degree bound `0 < d(q+1) - a - b < deg K`;
//! the alternative reading `d(q-1)` printed in some sources is inconsistent
//! with the degree arithmetic used for `d = q - 1` and is not used here.
//! The case pair (4)/(5) of the six-case formula is one branch with the
//! roles of the two decompositions exchanged, so it is implemented once and
//! reported as case 4.

use serde::Serialize;

/// Decomposition `v = v0 (q+1) - v1` with `0 <= v1 <= q` (ceiling variant)
/// or `v = v0 (q+1) + v1` (floor variant).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParkDecomposition {
    pub v0: i64,
    pub v1: i64,
}

pub fn ceil_decompose(v: i64, q: u32) -> ParkDecomposition {
    let h = i64::from(q) + 1;
    let v0 = v.div_euclid(h) + i64::from(v.rem_euclid(h) != 0);
    ParkDecomposition { v0, v1: v0 * h - v }
}

pub fn floor_decompose(v: i64, q: u32) -> ParkDecomposition {
    let h = i64::from(q) + 1;
    let v0 = v.div_euclid(h);
    ParkDecomposition { v0, v1: v - v0 * h }
}

/// Result of the six-case formula: the case number and the distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CeilCase {
    pub case: u8,
    pub delta: i64,
}

/// Six-case formula for the dual distance of the code of `K + m P_inf +
/// n P_0`. Returns `None` when the decomposition falls in no listed case
/// (one remainder equal to `q`, the other strictly between `m0 + n0` and
/// `q`); callers fall back to brute force there.
pub fn delta_ceil(m: i64, n: i64, q: u32) -> Option<CeilCase> {
    let qi = i64::from(q);
    let pm = ceil_decompose(m, q);
    let pn = ceil_decompose(n, q);
    let (m1, n1) = (pm.v1, pn.v1);
    let t = pm.v0 + pn.v0;
    let d_star = m + n;
    let (case, delta) = if m1 <= t && n1 <= t {
        (1, d_star)
    } else if n1 <= t && t < m1 {
        (2, d_star + m1 - t)
    } else if m1 <= t && t < n1 {
        (3, d_star + n1 - t)
    } else if t < m1 && t < n1 && m1 < qi && n1 < qi {
        (4, d_star + m1 + n1 - 2 * t)
    } else if t < m1 && t < n1 && m1 == qi && n1 == qi {
        (6, d_star + qi - t)
    } else {
        return None;
    };
    Some(CeilCase { case, delta })
}

/// Hypothesis check for the six-case formula on `G = K + m P_inf + n P_0`:
/// either `deg G > deg K + q`, or `deg G` is within `q` of `deg K` and `G`
/// is equivalent to no one-point divisor.
pub fn ceil_hypothesis(m: i64, n: i64, q: u32) -> bool {
    let h = i64::from(q) + 1;
    let excess = m + n; // deg G - deg K
    if excess > i64::from(q) {
        return true;
    }
    (0..=i64::from(q)).contains(&excess) && n.rem_euclid(h) != 0 && m.rem_euclid(h) != 0
}

/// Floor rule for the dual distance of the code of `m P_inf + n P_0`:
/// `delta = m0 + n0 + 2`.
pub fn delta_floor(m: i64, n: i64, q: u32) -> i64 {
    floor_decompose(m, q).v0 + floor_decompose(n, q).v0 + 2
}

/// Hypothesis check for the floor rule: `deg G < deg K`, or `deg G` within
/// `q` of `deg K` and `G` equivalent to a one-point divisor.
pub fn floor_hypothesis(m: i64, n: i64, q: u32) -> bool {
    let qi = i64::from(q);
    let h = qi + 1;
    let deg_g = m + n;
    let deg_k = qi * qi - qi - 2;
    if deg_g < deg_k {
        return true;
    }
    deg_g <= deg_k + qi && (n.rem_euclid(h) == 0 || m.rem_euclid(h) == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupLabel {
    G1,
    G2,
    G3,
    HighDegree,
    Degenerate,
}

impl std::fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GroupLabel::G1 => "G1",
            GroupLabel::G2 => "G2",
            GroupLabel::G3 => "G3",
            GroupLabel::HighDegree => "HighDegree",
            GroupLabel::Degenerate => "Degenerate",
        };
        write!(f, "{s}")
    }
}

/// Sort `(a, b)` ascending, remembering whether the base-point roles were
/// exchanged.
pub fn sort_roles(a: i64, b: i64) -> (i64, i64, bool) {
    if a > b {
        (b, a, true)
    } else {
        (a, b, false)
    }
}

/// Classify `C(d, a, b)` by the degree of its divisor relative to the
/// canonical degree. In the boundary band, the divisor is equivalent to a
/// one-point divisor iff `q + 1` divides `a` or `b`; with both in `0..=q`
/// and `b != 0` after role sorting, that means `a = 0`.
pub fn classify_group(d: i64, a: i64, b: i64, q: u32) -> GroupLabel {
    let qi = i64::from(q);
    let (a, b, _) = sort_roles(a, b);
    let deg_g = d * (qi + 1) - a - b;
    let deg_k = qi * qi - qi - 2;
    if deg_g <= 0 {
        GroupLabel::Degenerate
    } else if deg_g < deg_k {
        GroupLabel::G1
    } else if deg_g > deg_k + qi {
        GroupLabel::HighDegree
    } else if a.rem_euclid(qi + 1) == 0 || b.rem_euclid(qi + 1) == 0 {
        GroupLabel::G3
    } else {
        GroupLabel::G2
    }
}

/// Which of the two formulas a prediction used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Formula {
    CeilCases,
    FloorRule,
    None,
}

/// A dual-distance prediction with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub group: GroupLabel,
    pub formula: Formula,
    /// Case number when the six-case formula applied.
    pub park_case: Option<u8>,
    /// `None` when the inputs fall in no covered case.
    pub delta: Option<i64>,
    /// Whether the hypotheses of the formula used were verified.
    pub hypothesis_ok: bool,
    /// Whether the roles of `a` and `b` were exchanged.
    pub roles_swapped: bool,
}

/// Predict the dual minimum distance of `C(d, a, b)`.
///
/// G1 and G3 go through the floor rule on `m = d(q+1) - a`, `n = -b`
/// (for G1 this collapses to `d` when `a >= 1` and `d + 1` when `a = 0`);
/// G2 and high-degree codes go through the six-case formula on
/// `m = (d - q + 2)(q+1) - a`, `n = -b`, splitting off a canonical divisor
/// `(q-2)(q+1) P_inf`.
pub fn predicted_delta(d: i64, a: i64, b: i64, q: u32) -> Prediction {
    let qi = i64::from(q);
    let (a, b, roles_swapped) = sort_roles(a, b);
    let group = classify_group(d, a, b, q);
    match group {
        GroupLabel::Degenerate => Prediction {
            group,
            formula: Formula::None,
            park_case: None,
            delta: None,
            hypothesis_ok: false,
            roles_swapped,
        },
        GroupLabel::G1 | GroupLabel::G3 => {
            let (m, n) = (d * (qi + 1) - a, -b);
            Prediction {
                group,
                formula: Formula::FloorRule,
                park_case: None,
                delta: Some(delta_floor(m, n, q)),
                hypothesis_ok: floor_hypothesis(m, n, q),
                roles_swapped,
            }
        }
        GroupLabel::G2 | GroupLabel::HighDegree => {
            let (m, n) = ((d - qi + 2) * (qi + 1) - a, -b);
            let result = delta_ceil(m, n, q);
            Prediction {
                group,
                formula: Formula::CeilCases,
                park_case: result.map(|r| r.case),
                delta: result.map(|r| r.delta),
                hypothesis_ok: ceil_hypothesis(m, n, q),
                roles_swapped,
            }
        }
    }
}
