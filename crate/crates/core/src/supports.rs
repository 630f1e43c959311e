//! Geometric classification of minimum-weight dual codeword supports.
//!
//! For each group of codes there is a fixed list of clauses the support of a
//! minimum-weight dual codeword must satisfy; the classifier tests them in
//! order and returns the first that holds, together with the witness curve.
//! `Unclassified` means none held, which the verification sweep reports as a
//! violation.
//!
//! Role bookkeeping: all theorem statements assume `a <= b`. When a code is
//! given with `a > b` the classifier exchanges the two base points, so a
//! clause naming `P_0` refers to the base point carrying the larger
//! coefficient.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{build_code, reduce_params, CodeParams, TwoPointCode};
use crate::curve::{Curve, CurvePoint};
use crate::distance::{min_weight_circuits, Circuit};
use crate::error::Result;
use crate::plane::{forms_through, PlaneForm, SchemeOnCurve};
use crate::prediction::{predicted_delta, GroupLabel, Prediction};

/// The clause of the support-geometry theorems a support satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Clause {
    /// The support lies on one line.
    Collinear,
    /// The support plus `P_inf` lies on one line.
    CollinearWithPInf,
    /// The support plus `P_0` lies on one line.
    CollinearWithP0,
    /// The support lies on the line through `P_0` and `P_inf`.
    CollinearThroughBoth,
    /// The support lies on the union of the line through the base points and
    /// a smooth conic tangent to the curve at both.
    LineUnionTangentConic,
    /// The support lies on an irreducible cubic tangent to the curve at both
    /// base points.
    IrreducibleTangentCubic,
    /// No clause of the applicable theorem holds.
    Unclassified,
}

impl std::fmt::Display for Clause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl Clause {
    pub fn as_str(self) -> &'static str {
        match self {
            Clause::Collinear => "collinear",
            Clause::CollinearWithPInf => "collinear_with_p_inf",
            Clause::CollinearWithP0 => "collinear_with_p0",
            Clause::CollinearThroughBoth => "collinear_through_both",
            Clause::LineUnionTangentConic => "line_union_tangent_conic",
            Clause::IrreducibleTangentCubic => "irreducible_tangent_cubic",
            Clause::Unclassified => "unclassified",
        }
    }
}

/// Outcome of classifying one support: the clause and its witness forms
/// (one line; or the base line plus a conic; or a cubic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportClassification {
    pub clause: Clause,
    pub witnesses: Vec<PlaneForm>,
}

/// Classify one minimum-weight support of `C(d, a, b)` against the clause
/// list of the theorem matching the code's group and reduction step.
pub fn classify_support(
    curve: &Curve,
    support: &[CurvePoint],
    params: CodeParams,
) -> SupportClassification {
    let (a, b, swapped) = crate::prediction::sort_roles(params.a, params.b);
    let group = crate::prediction::classify_group(params.d, a, b, params.q);
    let (p0_eff, pinf_eff) =
        if swapped { (curve.p_inf(), curve.p0()) } else { (curve.p0(), curve.p_inf()) };
    let q = curve.qi();
    let d = params.d;
    let r = reduce_params(d, a, b).ok().map(|red| red.r);

    let try_clauses: Vec<Clause> = match (group, r) {
        (GroupLabel::G1, Some(r)) if a != 0 => match r {
            1 => vec![Clause::CollinearWithPInf],
            2 if d == 3 => vec![
                Clause::Collinear,
                Clause::LineUnionTangentConic,
                Clause::IrreducibleTangentCubic,
            ],
            _ => vec![Clause::Collinear],
        },
        (GroupLabel::G1, Some(r)) => match r {
            // a = 0: the reduction cannot reach r = 0
            1 => vec![Clause::Collinear],
            _ => vec![Clause::CollinearWithP0],
        },
        (GroupLabel::G2, _) => vec![
            Clause::CollinearThroughBoth,
            Clause::CollinearWithPInf,
            Clause::CollinearWithP0,
        ],
        (GroupLabel::G3, _) => vec![Clause::Collinear],
        _ => vec![Clause::Collinear],
    };

    for clause in try_clauses {
        let witness = match clause {
            Clause::Collinear => {
                let line = spanning_line(curve, support, &[]);
                // the G3 theorem adds that P_0 lies on the line when b <= q-1
                match (&line, group) {
                    (Some(l), GroupLabel::G3) if b <= q - 1 => {
                        let (x, y, z) = p0_eff.proj_coords();
                        if l.evaluate(curve.field(), x, y, z).is_zero() {
                            line.map(|l| vec![l])
                        } else {
                            None
                        }
                    }
                    _ => line.map(|l| vec![l]),
                }
            }
            Clause::CollinearWithPInf => {
                spanning_line(curve, support, &[pinf_eff]).map(|l| vec![l])
            }
            Clause::CollinearWithP0 => {
                spanning_line(curve, support, &[p0_eff]).map(|l| vec![l])
            }
            Clause::CollinearThroughBoth => {
                let base = curve.line_through(p0_eff, pinf_eff).expect("distinct");
                if on_form(curve, &base, support) {
                    Some(vec![base])
                } else {
                    None
                }
            }
            Clause::LineUnionTangentConic => {
                line_union_tangent_conic(curve, support, p0_eff, pinf_eff)
            }
            Clause::IrreducibleTangentCubic => {
                tangent_cubic(curve, support, p0_eff, pinf_eff).map(|c| vec![c])
            }
            Clause::Unclassified => None,
        };
        if let Some(witnesses) = witness {
            return SupportClassification { clause, witnesses };
        }
    }
    SupportClassification { clause: Clause::Unclassified, witnesses: Vec::new() }
}

/// The line through `support` plus `extra` points, if they are collinear.
fn spanning_line(curve: &Curve, support: &[CurvePoint], extra: &[CurvePoint]) -> Option<PlaneForm> {
    let mut pts: Vec<CurvePoint> = extra.iter().chain(support.iter()).copied().collect();
    pts.dedup();
    match pts.len() {
        0 | 1 => None,
        _ => {
            let line = curve.line_through(pts[0], pts[1]).ok()?;
            on_form(curve, &line, &pts).then_some(line)
        }
    }
}

fn on_form(curve: &Curve, form: &PlaneForm, pts: &[CurvePoint]) -> bool {
    let f = curve.field();
    pts.iter().all(|p| {
        let (x, y, z) = p.proj_coords();
        form.evaluate(f, x, y, z).is_zero()
    })
}

/// Witness for the line-plus-conic clause: points off the base line must lie
/// on a conic through `2 P_0 + 2 P_inf` with no rational linear factor.
fn line_union_tangent_conic(
    curve: &Curve,
    support: &[CurvePoint],
    p0_eff: CurvePoint,
    pinf_eff: CurvePoint,
) -> Option<Vec<PlaneForm>> {
    let base = curve.line_through(p0_eff, pinf_eff).expect("distinct");
    let f = curve.field();
    let off_line: Vec<CurvePoint> = support
        .iter()
        .copied()
        .filter(|p| {
            let (x, y, z) = p.proj_coords();
            !base.evaluate(f, x, y, z).is_zero()
        })
        .collect();
    let mut constraints = crate::curve::Divisor::new();
    constraints.add(p0_eff, 2);
    constraints.add(pinf_eff, 2);
    for &p in &off_line {
        constraints.add(p, 1);
    }
    let scheme = SchemeOnCurve::new(curve, constraints).expect("points on curve");
    let conic = forms_through(curve, &scheme, 2).into_iter().find(|t| {
        !t.has_linear_factor(f)
            && curve.valuation(t, p0_eff).unwrap_or(0) >= 2
            && curve.valuation(t, pinf_eff).unwrap_or(0) >= 2
            && on_form(curve, t, &off_line)
    })?;
    Some(vec![base, conic])
}

/// Witness for the irreducible tangent cubic clause.
fn tangent_cubic(
    curve: &Curve,
    support: &[CurvePoint],
    p0_eff: CurvePoint,
    pinf_eff: CurvePoint,
) -> Option<PlaneForm> {
    let f = curve.field();
    let mut constraints = crate::curve::Divisor::new();
    constraints.add(p0_eff, 2);
    constraints.add(pinf_eff, 2);
    for &p in support {
        constraints.add(p, 1);
    }
    let scheme = SchemeOnCurve::new(curve, constraints).expect("points on curve");
    forms_through(curve, &scheme, 3).into_iter().find(|t| {
        !t.has_linear_factor(f)
            && curve.valuation(t, p0_eff).unwrap_or(0) >= 2
            && curve.valuation(t, pinf_eff).unwrap_or(0) >= 2
            && on_form(curve, t, support)
    })
}

/// One classified support in a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportRecord {
    pub circuit: Circuit,
    pub points: Vec<CurvePoint>,
    pub clause: Clause,
    pub witnesses: Vec<PlaneForm>,
}

/// Everything the sweep learned about one code.
#[derive(Debug, Clone)]
pub struct CodeReport {
    pub q: u32,
    pub d: i64,
    pub a: i64,
    pub b: i64,
    pub prediction: Prediction,
    pub actual_delta: Option<usize>,
    pub dimension: usize,
    pub supports: Vec<SupportRecord>,
    pub clause_counts: BTreeMap<Clause, usize>,
    pub violations: Vec<String>,
}

impl CodeReport {
    pub fn num_min_supports(&self) -> usize {
        self.supports.len()
    }

    /// JSON certificate for this code.
    pub fn certificate(&self, curve: &Curve) -> serde_json::Value {
        let f = curve.field();
        let supports: Vec<serde_json::Value> = self
            .supports
            .iter()
            .map(|s| {
                serde_json::json!({
                    "points": s.points.iter().map(|p| p.render(f)).collect::<Vec<_>>(),
                    "clause": s.clause.as_str(),
                    "witness": s.witnesses.iter().map(|w| w.render(f)).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "q": self.q,
            "d": self.d,
            "a": self.a,
            "b": self.b,
            "group": self.prediction.group.to_string(),
            "predicted_delta": self.prediction.delta,
            "actual_delta": self.actual_delta,
            "park_case": self.prediction.park_case,
            "roles_swapped": self.prediction.roles_swapped,
            "supports": supports,
            "violations": self.violations,
        })
    }

    /// CSV row: `q,d,a,b,group,park_case,predicted,actual,num_min_supports,clauses`.
    pub fn csv_row(&self) -> String {
        let clauses = self
            .clause_counts
            .iter()
            .map(|(c, n)| format!("{}:{}", c.as_str(), n))
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.q,
            self.d,
            self.a,
            self.b,
            self.prediction.group,
            self.prediction.park_case.map_or(String::new(), |c| c.to_string()),
            self.prediction.delta.map_or(String::new(), |d| d.to_string()),
            self.actual_delta.map_or(String::new(), |d| d.to_string()),
            self.num_min_supports(),
            clauses,
        )
    }
}

/// Result of a verification sweep.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub q: u32,
    pub reports: Vec<CodeReport>,
}

impl VerifyReport {
    pub fn violations(&self) -> Vec<String> {
        self.reports
            .iter()
            .flat_map(|r| {
                r.violations
                    .iter()
                    .map(move |v| format!("C({},{},{}) over q={}: {v}", r.d, r.a, r.b, r.q))
            })
            .collect()
    }

    /// Parameters whose prediction fell in no covered case.
    pub fn uncovered(&self) -> Vec<(i64, i64, i64)> {
        self.reports
            .iter()
            .filter(|r| r.prediction.delta.is_none())
            .map(|r| (r.d, r.a, r.b))
            .collect()
    }

    pub fn csv(&self) -> String {
        let mut out =
            String::from("q,d,a,b,group,park_case,predicted,actual,num_min_supports,clauses\n");
        for r in &self.reports {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, curve: &Curve) -> serde_json::Value {
        serde_json::json!({
            "q": self.q,
            "codes": self.reports.iter().map(|r| r.certificate(curve)).collect::<Vec<_>>(),
            "violations": self.violations(),
        })
    }
}

/// Classify every minimum support of one already-built code, with its
/// distance and circuits known.
pub fn classify_code_supports(
    code: &TwoPointCode,
    circuits: Vec<Circuit>,
) -> (Vec<SupportRecord>, BTreeMap<Clause, usize>, Vec<String>) {
    let curve = code.curve();
    let b_points = curve.evaluation_points();
    let mut records = Vec::with_capacity(circuits.len());
    let mut counts: BTreeMap<Clause, usize> = BTreeMap::new();
    let mut violations = Vec::new();
    for circuit in circuits {
        let points: Vec<CurvePoint> = circuit.support.iter().map(|&i| b_points[i]).collect();
        let class = classify_support(curve, &points, code.params());
        *counts.entry(class.clause).or_insert(0) += 1;
        if class.clause == Clause::Unclassified {
            violations.push(format!(
                "unclassified support {:?}",
                points.iter().map(|p| p.render(curve.field())).collect::<Vec<_>>()
            ));
        }
        records.push(SupportRecord {
            circuit,
            points,
            clause: class.clause,
            witnesses: class.witnesses,
        });
    }
    (records, counts, violations)
}

/// Run the full pipeline for one parameter triple: build, predict, measure,
/// enumerate and classify.
pub fn examine_code(curve: &std::sync::Arc<Curve>, d: i64, a: i64, b: i64) -> Result<CodeReport> {
    let q = curve.q();
    let params = CodeParams::from_dab(q, d, a, b)?;
    let code = build_code(params, std::sync::Arc::clone(curve))?;
    let prediction = predicted_delta(d, a, b, q);
    let w_max = q as usize + 2;
    let mut violations = Vec::new();
    let (actual, circuits) = match min_weight_circuits(&code, w_max) {
        Ok((delta, circuits)) => (Some(delta), circuits),
        Err(e) => {
            violations.push(format!("search failed: {e}"));
            (None, Vec::new())
        }
    };
    if let (Some(pred), Some(actual)) = (prediction.delta, actual) {
        if prediction.hypothesis_ok && pred != actual as i64 {
            violations.push(format!("predicted delta {pred} but measured {actual}"));
        }
    }
    let (supports, clause_counts, mut class_violations) = classify_code_supports(&code, circuits);
    violations.append(&mut class_violations);
    Ok(CodeReport {
        q,
        d,
        a,
        b,
        prediction,
        actual_delta: actual,
        dimension: code.k(),
        supports,
        clause_counts,
        violations,
    })
}

/// Sweep every `C(d, a, b)` with `d` in `d_range`, `0 <= a <= q`,
/// `1 <= b <= q`, verifying predictions and support geometry. Codes are
/// examined in parallel; the report order is deterministic.
pub fn verify_theorems(curve: &std::sync::Arc<Curve>, d_range: &[i64]) -> Result<VerifyReport> {
    let q = curve.qi();
    let mut triples = Vec::new();
    for &d in d_range {
        for a in 0..=q {
            for b in 1..=q {
                triples.push((d, a, b));
            }
        }
    }
    let reports: Result<Vec<CodeReport>> = triples
        .par_iter()
        .map(|&(d, a, b)| examine_code(curve, d, a, b))
        .collect();
    Ok(VerifyReport { q: curve.q(), reports: reports? })
}

/// The default sweep range `3..=q-1`.
pub fn default_d_range(q: u32) -> Vec<i64> {
    (3..=i64::from(q) - 1).collect()
}
