//! The Hermitian curve `X: y^q + y = x^(q+1)` over `F_{q^2}`.
//!
//! Projectively `X` is the zero locus of `Y^q Z + Y Z^q - X^(q+1)`, a smooth
//! plane curve of degree `q + 1` and genus `q(q-1)/2` with `q^3 + 1` rational
//! points: the affine solutions plus the single point at infinity
//! `P_inf = (0:1:0)`.  `P_0` is the origin `(0:0:1)`.
//!
//! Local expansions use the chart x-coordinate as uniformizer everywhere:
//! the affine equation solves for `y` with unit derivative (the `y`-partial
//! of `y^q + y - x^(q+1)` is identically 1 in characteristic `p`), and the
//! same happens for `z` in the chart `Y = 1` at infinity, where the equation
//! reads `z + z^q = x^(q+1)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::plane::PlaneForm;

/// A rational point of the curve. The variant order makes the derived `Ord`
/// the canonical point order: infinity first, then affine points by
/// `(x, y)` with zero sorting before `g^0`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Fe, y: Fe },
}

impl CurvePoint {
    pub fn affine(x: Fe, y: Fe) -> CurvePoint {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    /// Normalized projective coordinates `(X : Y : Z)`.
    pub fn proj_coords(self) -> (Fe, Fe, Fe) {
        match self {
            CurvePoint::Infinity => (Fe::ZERO, Fe::ONE, Fe::ZERO),
            CurvePoint::Affine { x, y } => (x, y, Fe::ONE),
        }
    }

    pub fn render(self, f: &Field) -> String {
        match self {
            CurvePoint::Infinity => "inf".to_string(),
            CurvePoint::Affine { x, y } => format!("({}, {})", f.display(x), f.display(y)),
        }
    }

    pub fn parse(f: &Field, s: &str) -> Result<CurvePoint> {
        let s = s.trim();
        if s == "inf" {
            return Ok(CurvePoint::Infinity);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected \"inf\" or \"(x, y)\", got {s:?}")))?;
        let (xs, ys) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected two coordinates in {s:?}")))?;
        Ok(CurvePoint::affine(f.parse_element(xs)?, f.parse_element(ys)?))
    }
}

/// A divisor supported on rational points of the curve: a finite map from
/// points to nonzero integer multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Divisor(BTreeMap<CurvePoint, i64>);

impl Divisor {
    pub fn new() -> Divisor {
        Divisor(BTreeMap::new())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (CurvePoint, i64)>) -> Divisor {
        let mut d = Divisor::new();
        for (p, m) in pairs {
            d.add(p, m);
        }
        d
    }

    /// Add `mult` to the multiplicity of `p`, dropping the point at zero.
    pub fn add(&mut self, p: CurvePoint, mult: i64) {
        let entry = self.0.entry(p).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.0.remove(&p);
        }
    }

    pub fn multiplicity(&self, p: CurvePoint) -> i64 {
        self.0.get(&p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.0.values().all(|&m| m > 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Points in canonical order with their multiplicities.
    pub fn iter(&self) -> impl Iterator<Item = (CurvePoint, i64)> + '_ {
        self.0.iter().map(|(&p, &m)| (p, m))
    }

    pub fn sum(&self, other: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, m) in other.iter() {
            d.add(p, m);
        }
        d
    }

    /// Renders as a sorted `mult*point` list, e.g. `1*inf, 2*(0, 0)`.
    pub fn render(&self, f: &Field) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        self.iter()
            .map(|(p, m)| format!("{}*{}", m, p.render(f)))
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn parse(f: &Field, s: &str) -> Result<Divisor> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Divisor::new());
        }
        let mut d = Divisor::new();
        let mut parts = Vec::new();
        let mut depth = 0usize;
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    parts.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        parts.push(&s[start..]);
        for part in parts {
            let part = part.trim();
            let (m, p) = part
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("expected mult*point, got {part:?}")))?;
            let mult: i64 =
                m.trim().parse().map_err(|_| Error::Parse(format!("bad multiplicity {m:?}")))?;
            d.add(CurvePoint::parse(f, p)?, mult);
        }
        Ok(d)
    }
}

/// Which chart a local expansion lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// Affine chart `Z = 1`; the parameter is `x - x0` and the series gives
    /// the `y` coordinate.
    Affine,
    /// Chart `Y = 1`; the parameter is the chart x-coordinate and the series
    /// gives the chart z-coordinate.
    AtInfinity,
}

/// Truncated power-series solution of the curve equation around a point.
#[derive(Debug, Clone)]
pub struct LocalExpansion {
    pub point: CurvePoint,
    pub chart: Chart,
    /// Coefficients of the dependent coordinate in the local parameter.
    pub coeffs: Vec<Fe>,
}

impl LocalExpansion {
    /// Series for the three projective coordinates on the chart, truncated to
    /// `len` terms.
    pub fn coordinate_series(&self, len: usize) -> [Vec<Fe>; 3] {
        let trunc = |v: &[Fe]| {
            let mut s = v.to_vec();
            s.resize(len, Fe::ZERO);
            s
        };
        let mut param = vec![Fe::ZERO; len];
        match self.chart {
            Chart::Affine => {
                let CurvePoint::Affine { x, .. } = self.point else { unreachable!() };
                param[0] = x;
                if len > 1 {
                    param[1] = Fe::ONE;
                }
                let mut one = vec![Fe::ZERO; len];
                one[0] = Fe::ONE;
                [param, trunc(&self.coeffs), one]
            }
            Chart::AtInfinity => {
                if len > 1 {
                    param[1] = Fe::ONE;
                }
                let mut one = vec![Fe::ZERO; len];
                one[0] = Fe::ONE;
                [param, one, trunc(&self.coeffs)]
            }
        }
    }
}

/// The Hermitian curve with its field, cached point census and evaluation
/// set. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Curve {
    field: Field,
    q: u32,
    points: Vec<CurvePoint>,
    b_points: Vec<CurvePoint>,
}

impl Curve {
    pub fn new(q: u32) -> Result<Curve> {
        Ok(Curve::from_field(Field::new(q)?))
    }

    pub fn from_field(field: Field) -> Curve {
        let q = field.q();
        let mut points = vec![CurvePoint::Infinity];
        for x in field.elements() {
            let rhs = field.pow(x, i64::from(q) + 1).unwrap();
            for y in field.elements() {
                let lhs = field.add(field.pow(y, i64::from(q)).unwrap(), y);
                if lhs == rhs {
                    points.push(CurvePoint::affine(x, y));
                }
            }
        }
        points.sort();
        assert_eq!(points.len() as u64, u64::from(q).pow(3) + 1);
        let p0 = CurvePoint::affine(Fe::ZERO, Fe::ZERO);
        let b_points =
            points.iter().copied().filter(|&p| p != p0 && !p.is_infinity()).collect();
        Curve { field, q, points, b_points }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn qi(&self) -> i64 {
        i64::from(self.q)
    }

    pub fn genus(&self) -> i64 {
        let q = self.qi();
        q * (q - 1) / 2
    }

    /// Degree of a canonical divisor, `2g - 2 = q^2 - q - 2`.
    pub fn canonical_degree(&self) -> i64 {
        2 * self.genus() - 2
    }

    /// All `q^3 + 1` rational points in canonical order (infinity first).
    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    /// The evaluation set `B`: all rational points except `P_inf` and `P_0`,
    /// in canonical order.
    pub fn evaluation_points(&self) -> &[CurvePoint] {
        &self.b_points
    }

    pub fn p0(&self) -> CurvePoint {
        CurvePoint::affine(Fe::ZERO, Fe::ZERO)
    }

    pub fn p_inf(&self) -> CurvePoint {
        CurvePoint::Infinity
    }

    pub fn contains(&self, p: CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let f = &self.field;
                let lhs = f.add(f.pow(y, self.qi()).unwrap(), y);
                lhs == f.pow(x, self.qi() + 1).unwrap()
            }
        }
    }

    /// The unique line with intersection multiplicity `q + 1` at `p`.
    pub fn tangent_line(&self, p: CurvePoint) -> PlaneForm {
        let f = &self.field;
        let coeffs = match p {
            CurvePoint::Infinity => vec![Fe::ZERO, Fe::ZERO, Fe::ONE],
            CurvePoint::Affine { x, y } => {
                // gradient of Y^q Z + Y Z^q - X^(q+1) at (x, y, 1)
                let xq = f.pow(x, self.qi()).unwrap();
                let yq = f.pow(y, self.qi()).unwrap();
                vec![f.neg(xq), Fe::ONE, yq]
            }
        };
        PlaneForm::new(1, coeffs).normalized(f)
    }

    /// The normalized line through two distinct points.
    pub fn line_through(&self, p: CurvePoint, r: CurvePoint) -> Result<PlaneForm> {
        if p == r {
            return Err(Error::IdenticalPoints);
        }
        let f = &self.field;
        let (x1, y1, z1) = p.proj_coords();
        let (x2, y2, z2) = r.proj_coords();
        let cross = vec![
            f.sub(f.mul(y1, z2), f.mul(z1, y2)),
            f.sub(f.mul(z1, x2), f.mul(x1, z2)),
            f.sub(f.mul(x1, y2), f.mul(y1, x2)),
        ];
        let form = PlaneForm::new(1, cross);
        debug_assert!(!form.is_zero());
        Ok(form.normalized(f))
    }

    /// Solve the chart equation for the dependent coordinate as a power
    /// series in the local parameter, exact to `order` coefficients.
    ///
    /// The fixed-point iteration `y <- x^(q+1) - y^q` is a strong contraction:
    /// each step multiplies the agreement order by `q`, because differences
    /// pass through the `q`-power Frobenius.
    pub fn local_expansion(&self, p: CurvePoint, order: usize) -> LocalExpansion {
        assert!(order >= 1, "expansion order must be positive");
        let f = &self.field;
        let q = self.qi();
        let (chart, x_series, start) = match p {
            CurvePoint::Infinity => {
                let x = vec![Fe::ZERO, Fe::ONE];
                (Chart::AtInfinity, x, vec![Fe::ZERO])
            }
            CurvePoint::Affine { x, y } => (Chart::Affine, vec![x, Fe::ONE], vec![y]),
        };
        let rhs = series_pow(f, &x_series, (q + 1) as usize, order);
        let mut dep = start;
        dep.resize(order, Fe::ZERO);
        loop {
            let dq = series_pow(f, &dep, q as usize, order);
            let next: Vec<Fe> = rhs.iter().zip(&dq).map(|(&r, &d)| f.sub(r, d)).collect();
            if next == dep {
                break;
            }
            dep = next;
        }
        LocalExpansion { point: p, chart, coeffs: dep }
    }

    /// Intersection multiplicity `I_p(T, X)`: the valuation at `p` of the
    /// form `T` restricted to the curve. Zero iff `T(p) != 0`.
    pub fn valuation(&self, form: &PlaneForm, p: CurvePoint) -> Result<usize> {
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        let (x, y, z) = p.proj_coords();
        if !form.evaluate(&self.field, x, y, z).is_zero() {
            return Ok(0);
        }
        let order = form.degree() * (self.q as usize + 1) + 1;
        let series = self.restrict_to_curve(form, p, order);
        series
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ExpansionOrderExhausted(order))
    }

    /// The power series of `form` restricted to the curve at `p`, truncated
    /// to `order` coefficients.
    pub fn restrict_to_curve(&self, form: &PlaneForm, p: CurvePoint, order: usize) -> Vec<Fe> {
        let expansion = self.local_expansion(p, order);
        let [xs, ys, zs] = expansion.coordinate_series(order);
        form.evaluate_on_series(&self.field, &xs, &ys, &zs, order)
    }

    /// Monomial basis of `L(m P_inf + n P_0)`: all `(i, j)` with
    /// `0 <= i <= q` such that `x^i y^j` has pole order at most `m` at
    /// `P_inf` and vanishing order at least `-n` at `P_0`, in ascending pole
    /// order at `P_inf`.
    ///
    /// The valuations are `v_inf(x^i y^j) = -(iq + j(q+1))` and
    /// `v_0(x^i y^j) = i + j(q+1)`; over `0 <= i <= q` they are pairwise
    /// distinct at both points, so membership is monomial-wise and the
    /// monomials form a basis.
    pub fn monomial_basis(&self, m: i64, n: i64) -> Vec<(i64, i64)> {
        let q = self.qi();
        let mut basis = Vec::new();
        for i in 0..=q {
            // j(q+1) >= -n - i  and  j(q+1) <= m - iq
            let lo = (-n - i).div_euclid(q + 1)
                + i64::from((-n - i).rem_euclid(q + 1) != 0);
            let hi = (m - i * q).div_euclid(q + 1);
            for j in lo..=hi {
                basis.push((i, j));
            }
        }
        basis.sort_by_key(|&(i, j)| i * q + j * (q + 1));
        basis
    }

    /// Is `u * (P_inf - P_0)` a principal divisor? True iff `(q+1) | u`,
    /// since `y` has divisor `(q+1)(P_0 - P_inf)` and the curve has gonality
    /// `q`.
    pub fn two_point_principal(&self, u: i64) -> bool {
        u.rem_euclid(self.qi() + 1) == 0
    }

    /// The defining form of the curve, `Y^q Z + Y Z^q - X^(q+1)`, normalized
    /// to leading coefficient 1.
    pub fn defining_form(&self) -> PlaneForm {
        let f = &self.field;
        let deg = self.q as usize + 1;
        let mut form = PlaneForm::zero(deg);
        form.set_coeff(deg, 0, f.neg(Fe::ONE));
        form.set_coeff(0, self.q as usize, Fe::ONE); // Y^q Z
        form.set_coeff(0, 1, Fe::ONE); // Y Z^q
        form.normalized(f)
    }

    /// Does the form vanish identically on the curve (i.e. contain it as a
    /// component)? Only possible for degree at least `q + 1`; below the
    /// Bezout threshold, vanishing at every rational point forces a common
    /// component with the irreducible curve.
    pub fn form_vanishes_on_curve(&self, form: &PlaneForm) -> bool {
        let q = self.q as usize;
        if form.degree() < q + 1 {
            return false;
        }
        if form.degree() == q + 1 {
            // equal degrees: containment means proportionality
            return form.normalized(&self.field) == self.defining_form();
        }
        assert!(
            (form.degree() * (q + 1)) < self.points.len(),
            "containment test needs deg T * (q+1) < q^3 + 1"
        );
        self.points_on_form(form).len() == self.points.len()
    }

    /// Rational curve points lying on the zero locus of `form`.
    pub fn points_on_form(&self, form: &PlaneForm) -> Vec<CurvePoint> {
        self.points
            .iter()
            .copied()
            .filter(|&p| {
                let (x, y, z) = p.proj_coords();
                form.evaluate(&self.field, x, y, z).is_zero()
            })
            .collect()
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "inf"),
            CurvePoint::Affine { x, y } => write!(f, "({}, {})", x.0, y.0),
        }
    }
}

// --- truncated power-series helpers over F_{q^2} ---

pub(crate) fn series_mul(f: &Field, a: &[Fe], b: &[Fe], len: usize) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; len];
    for (i, &ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(len - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = f.add(out[i + j], f.mul(ai, bj));
        }
    }
    out
}

pub(crate) fn series_pow(f: &Field, base: &[Fe], n: usize, len: usize) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; len];
    out[0] = Fe::ONE;
    let mut acc = base.to_vec();
    acc.resize(len, Fe::ZERO);
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            out = series_mul(f, &out, &acc, len);
        }
        n >>= 1;
        if n > 0 {
            acc = series_mul(f, &acc, &acc, len);
        }
    }
    out
}
