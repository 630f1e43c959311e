//! Exact dual minimum distance and minimum-weight dual codeword enumeration.
//!
//! The dual distance of a code with generator matrix `G` is the size of the
//! smallest linearly dependent set of columns of `G`.  The search is
//! depth-first over sorted column indices, keeping an incremental echelon
//! basis of the chosen prefix; since weights are tried in increasing order,
//! any extension that reduces to zero before the target depth would have
//! been found at a smaller weight, so prefixes stay independent and the
//! dependency can only close at the last column.  Elimination state is
//! copied per branch, and work is partitioned by the first support index for
//! parallel execution; results are merged and re-sorted, so the output is
//! independent of the schedule.
//!
//! The `h^1` oracle runs the same subset search against a different matrix:
//! the per-point conditions on degree-`d` plane forms, reduced modulo the
//! conditions of the base scheme `E = a P_inf + b P_0`.  A subset `S` is
//! dependent there exactly when `h^1` of the ideal sheaf of `E union S`
//! exceeds `h^1` of that of `E`.

use rayon::prelude::*;
use serde::Serialize;

use crate::code::TwoPointCode;
use crate::curve::{CurvePoint, Divisor};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::matrix::Matrix;
use crate::plane::{condition_matrix, PlaneForm, SchemeOnCurve};

/// A minimal dependent set of generator columns together with the dual
/// codeword it carries (values on the support, first nonzero entry 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Circuit {
    /// Sorted indices into the evaluation set `B`.
    pub support: Vec<usize>,
    /// Codeword values aligned with `support`; all nonzero.
    pub codeword: Vec<Fe>,
}

/// Smallest `w <= w_max` such that some `w` columns of `m` are dependent.
pub fn min_dependent_columns(f: &Field, m: &Matrix, w_max: usize) -> Result<usize> {
    let cols: Vec<Vec<Fe>> = (0..m.cols()).map(|c| m.column(c)).collect();
    for w in 1..=w_max {
        if !search_weight(f, &cols, w, false).is_empty() {
            return Ok(w);
        }
    }
    Err(Error::SearchBoundExceeded(w_max))
}

/// All dependent column sets of size exactly `w` whose proper prefixes are
/// independent, sorted lexicographically. When no dependent set of size
/// `< w` exists these are exactly the supports of the weight-`w` circuits.
pub fn dependent_column_sets(f: &Field, m: &Matrix, w: usize) -> Vec<Vec<usize>> {
    let cols: Vec<Vec<Fe>> = (0..m.cols()).map(|c| m.column(c)).collect();
    let mut sets = search_weight(f, &cols, w, true);
    sets.sort();
    sets
}

/// Depth-first search for dependent `w`-subsets, parallel over the first
/// index. With `collect_all` false it stops at the first hit per start
/// index (existence only).
fn search_weight(f: &Field, cols: &[Vec<Fe>], w: usize, collect_all: bool) -> Vec<Vec<usize>> {
    let n = cols.len();
    if w == 1 {
        let hits: Vec<Vec<usize>> = (0..n)
            .filter(|&c| cols[c].iter().all(Fe::is_zero))
            .map(|c| vec![c])
            .collect();
        return hits;
    }
    if w > n {
        return Vec::new();
    }
    let found: Vec<Vec<Vec<usize>>> = (0..=n - w)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut basis: Vec<(usize, Vec<Fe>)> = Vec::with_capacity(w - 1);
            let mut lead = cols[first].clone();
            if crate::matrix::normalize_lead(f, &mut lead).is_none() {
                return out; // zero column: handled at w = 1
            }
            basis.push((lead.iter().position(|x| !x.is_zero()).unwrap(), lead));
            let mut prefix = vec![first];
            let mut scratch = Vec::with_capacity(cols[first].len());
            dfs(f, cols, w, collect_all, &mut prefix, &mut basis, &mut scratch, &mut out);
            out
        })
        .collect();
    found.into_iter().flatten().collect()
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    f: &Field,
    cols: &[Vec<Fe>],
    w: usize,
    collect_all: bool,
    prefix: &mut Vec<usize>,
    basis: &mut Vec<(usize, Vec<Fe>)>,
    scratch: &mut Vec<Fe>,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let n = cols.len();
    let depth = prefix.len();
    let last = *prefix.last().unwrap();
    if depth == w - 1 {
        for c in last + 1..n {
            if reduces_to_zero(f, basis, &cols[c], scratch) {
                prefix.push(c);
                out.push(prefix.clone());
                prefix.pop();
                if !collect_all {
                    return true;
                }
            }
        }
        return false;
    }
    // keep enough columns to fill the remaining depth
    for c in last + 1..n - (w - depth - 1) {
        scratch.clear();
        scratch.extend_from_slice(&cols[c]);
        reduce_in_place(f, basis, scratch);
        let Some(lead) = crate::matrix::normalize_lead(f, scratch) else {
            // a dependent set smaller than w; unreachable when weights are
            // tried in increasing order
            continue;
        };
        let saved = basis.clone();
        basis.push((lead, scratch.clone()));
        prefix.push(c);
        let stop = dfs(f, cols, w, collect_all, prefix, basis, scratch, out);
        prefix.pop();
        *basis = saved;
        if stop {
            return true;
        }
    }
    false
}

#[inline]
fn reduce_in_place(f: &Field, basis: &[(usize, Vec<Fe>)], v: &mut [Fe]) {
    for (lead, row) in basis {
        let factor = v[*lead];
        if factor.is_zero() {
            continue;
        }
        for (o, r) in v.iter_mut().zip(row) {
            *o = f.sub(*o, f.mul(factor, *r));
        }
    }
}

#[inline]
fn reduces_to_zero(
    f: &Field,
    basis: &[(usize, Vec<Fe>)],
    col: &[Fe],
    scratch: &mut Vec<Fe>,
) -> bool {
    scratch.clear();
    scratch.extend_from_slice(col);
    reduce_in_place(f, basis, scratch);
    scratch.iter().all(Fe::is_zero)
}

/// Exact dual minimum distance of the code, searching weights `1..=w_max`.
pub fn dual_min_distance(code: &TwoPointCode, w_max: usize) -> Result<usize> {
    assert!(w_max >= 1);
    min_dependent_columns(code.curve().field(), code.generator_matrix(), w_max)
}

/// All circuits of size `delta`, where `delta` is the dual minimum
/// distance: every minimal dependent column set with its normalized dual
/// codeword, sorted by support.
pub fn enumerate_min_supports(code: &TwoPointCode, delta: usize) -> Vec<Circuit> {
    let supports = dependent_column_sets(code.curve().field(), code.generator_matrix(), delta);
    circuits_from_supports(code, supports)
}

/// Fused search: the dual minimum distance together with all of its
/// circuits in a single scan per weight (the rounds below the distance find
/// nothing and cost the same either way).
pub fn min_weight_circuits(
    code: &TwoPointCode,
    w_max: usize,
) -> Result<(usize, Vec<Circuit>)> {
    let f = code.curve().field();
    let g = code.generator_matrix();
    let cols: Vec<Vec<Fe>> = (0..g.cols()).map(|c| g.column(c)).collect();
    for w in 1..=w_max {
        let mut sets = search_weight(f, &cols, w, true);
        if !sets.is_empty() {
            sets.sort();
            return Ok((w, circuits_from_supports(code, sets)));
        }
    }
    Err(Error::SearchBoundExceeded(w_max))
}

fn circuits_from_supports(code: &TwoPointCode, supports: Vec<Vec<usize>>) -> Vec<Circuit> {
    let f = code.curve().field();
    let g = code.generator_matrix();
    supports
        .into_iter()
        .map(|support| {
            let sub = Matrix::from_rows(
                (0..g.rows()).map(|r| support.iter().map(|&c| g.get(r, c)).collect()).collect(),
            );
            let kernel = sub.kernel_basis(f);
            assert_eq!(kernel.len(), 1, "a minimal dependent set has a unique relation");
            let mut codeword = kernel.into_iter().next().unwrap();
            crate::matrix::normalize_lead(f, &mut codeword);
            assert!(
                codeword.iter().all(|v| !v.is_zero()),
                "a minimum-weight relation has full support"
            );
            debug_assert!((0..g.rows()).all(|r| {
                let mut acc = Fe::ZERO;
                for (i, &c) in support.iter().enumerate() {
                    acc = f.add(acc, f.mul(g.get(r, c), codeword[i]));
                }
                acc.is_zero()
            }));
            Circuit { support, codeword }
        })
        .collect()
}

/// The per-point condition columns on degree-`d` forms, reduced modulo the
/// conditions of the base scheme `E = a P_inf + b P_0`. Subsets of `B` are
/// dependent here iff they fail to impose independent conditions on the
/// forms through `E`, i.e. iff `h^1` jumps.
pub fn h1_condition_columns(code: &TwoPointCode) -> Matrix {
    let curve = code.curve();
    let f = curve.field();
    let params = code.params();
    let d = params.d as usize;
    let e_scheme = base_scheme(code);
    let e_matrix = condition_matrix(curve, &e_scheme, d);
    let mut e_basis: Vec<(usize, Vec<Fe>)> = Vec::new();
    for c in 0..e_matrix.cols() {
        let mut col = e_matrix.column(c);
        reduce_in_place(f, &e_basis, &mut col);
        if let Some(lead) = crate::matrix::normalize_lead(f, &mut col) {
            e_basis.push((lead, col));
        }
    }
    let n_t = PlaneForm::monomial_count(d);
    let monos = PlaneForm::monomials(d);
    let mut m = Matrix::zeros(n_t, code.n());
    for (idx, p) in curve.evaluation_points().iter().enumerate() {
        let (x, y, z) = p.proj_coords();
        let mut col: Vec<Fe> = monos
            .iter()
            .map(|&(a, b, c)| {
                f.mul(
                    f.mul(f.pow(x, a as i64).unwrap(), f.pow(y, b as i64).unwrap()),
                    f.pow(z, c as i64).unwrap(),
                )
            })
            .collect();
        reduce_in_place(f, &e_basis, &mut col);
        for (r, &v) in col.iter().enumerate() {
            m.set(r, idx, v);
        }
    }
    m
}

/// The base scheme `E = a P_inf + b P_0` of the code.
pub fn base_scheme(code: &TwoPointCode) -> SchemeOnCurve {
    let params = code.params();
    let curve = code.curve();
    let mut divisor = Divisor::new();
    if params.a > 0 {
        divisor.add(curve.p_inf(), params.a);
    }
    if params.b > 0 {
        divisor.add(curve.p0(), params.b);
    }
    SchemeOnCurve::new(curve, divisor).expect("base points lie on the curve")
}

/// Dual minimum distance through the cohomological dictionary: the minimal
/// size of `S` in `B` with `h^1(I_{E union S}(d)) > h^1(I_E(d))`.
/// Requires `d < q + 1`. Must agree with [`dual_min_distance`].
pub fn h1_oracle_distance(code: &TwoPointCode, s_max: usize) -> Result<usize> {
    let params = code.params();
    if params.d >= i64::from(params.q) + 1 {
        return Err(Error::BadParameter(format!(
            "h^1 oracle requires d < q + 1, got d = {}",
            params.d
        )));
    }
    let m = h1_condition_columns(code);
    min_dependent_columns(code.curve().field(), &m, s_max)
}

/// Check the `h^1` jump for one explicit subset; used to validate
/// minimality of enumerated supports.
pub fn h1_jumps(code: &TwoPointCode, subset: &[CurvePoint]) -> bool {
    let curve = code.curve();
    let d = code.params().d as usize;
    let e_scheme = base_scheme(code);
    let s_scheme = SchemeOnCurve::from_points(subset.iter().copied());
    let union = e_scheme.union(&s_scheme);
    let (_, h1_e) = crate::plane::h0_h1(curve, &e_scheme, d);
    let (_, h1_union) = crate::plane::h0_h1(curve, &union, d);
    h1_union > h1_e
}
