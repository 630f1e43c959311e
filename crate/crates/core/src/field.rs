//! Arithmetic in `F_{q^2}` for small prime powers `q`.
//!
//! Elements are stored as a compact index: `0` is the zero element and
//! `1 + k` is `g^k` for the registry generator `g`.  With that encoding the
//! derived ordering on [`Fe`] is exactly the canonical element order used
//! everywhere else in the crate (zero first, then ascending exponent), and
//! multiplication reduces to exponent arithmetic.  Addition goes through a
//! precomputed table, which is why the registry is capped at `q^2 <= 81`.
//!
//! The registry pins the modulus `t^4 + t + 1` for `q = 4` and
//! `t^2 + 4t + 2` for `q = 5`, so that element labels like `g^7` agree with
//! the classical worked examples for those two fields.  Every other supported
//! `q` uses the lexicographically least monic irreducible polynomial of
//! degree `2e` over `F_p` (coefficients compared constant term first).

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Supported values of `q`. Anything else is rejected by [`Field::new`].
pub const SUPPORTED_Q: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

/// An element of `F_{q^2}`, valid only together with the [`Field`] that
/// produced it. Index `0` is zero, index `1 + k` is `g^k`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize)]
pub struct Fe(pub u8);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

/// Serializable description of the field: the characteristic, the extension
/// degree of `q` over `F_p`, and the modulus of `F_{q^2}` over `F_p` in
/// ascending coefficient order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

/// `F_{q^2}` with all arithmetic tables precomputed.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    q2: u32,
    modulus: Vec<u32>,
    generator: Fe,
    /// Coefficient vector (length `2e`, ascending) of every element index.
    coeffs: Vec<Vec<u32>>,
    /// Flattened `q2 x q2` addition table.
    add_t: Vec<u8>,
    neg_t: Vec<u8>,
}

impl Field {
    /// Look up `q` in the modulus registry and build the field tables.
    pub fn new(q: u32) -> Result<Field> {
        let (p, e) = match q {
            2 | 3 | 5 | 7 => (q, 1),
            4 | 9 => (if q == 4 { 2 } else { 3 }, 2),
            8 => (2, 3),
            _ => return Err(Error::UnsupportedField(q)),
        };
        let deg = 2 * e as usize;
        let modulus = match q {
            4 => vec![1, 1, 0, 0, 1],
            5 => vec![2, 4, 1],
            _ => least_irreducible(p, deg),
        };
        debug_assert!(is_irreducible(&modulus, p));
        Ok(Self::build(p, e, q, modulus))
    }

    fn build(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> Field {
        let deg = 2 * e as usize;
        let q2 = q * q;
        let root: Vec<u32> = (0..deg).map(|i| u32::from(i == 1)).collect();
        let gen_coeffs = if multiplicative_order(&root, &modulus, p) == (q2 - 1) as usize {
            root
        } else {
            all_vectors(p, deg)
                .into_iter()
                .find(|v| {
                    v.iter().any(|&c| c != 0)
                        && multiplicative_order(v, &modulus, p) == (q2 - 1) as usize
                })
                .expect("F_{q^2} has a primitive element")
        };

        // coeffs[0] = 0, coeffs[1+ k] = g^k.
        let mut coeffs = Vec::with_capacity(q2 as usize);
        coeffs.push(vec![0; deg]);
        let mut acc = one_vec(deg);
        for _ in 0..q2 - 1 {
            coeffs.push(acc.clone());
            acc = poly_mul_mod(&acc, &gen_coeffs, &modulus, p);
        }
        assert_eq!(acc, one_vec(deg), "generator order must be q^2 - 1");

        let mut index: HashMap<Vec<u32>, u8> = HashMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            let prev = index.insert(c.clone(), i as u8);
            assert!(prev.is_none(), "powers of the generator must be distinct");
        }

        let n = q2 as usize;
        let mut add_t = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..=i {
                let sum: Vec<u32> = coeffs[i]
                    .iter()
                    .zip(&coeffs[j])
                    .map(|(a, b)| (a + b) % p)
                    .collect();
                let k = index[&sum];
                add_t[i * n + j] = k;
                add_t[j * n + i] = k;
            }
        }
        let neg_t = (0..n)
            .map(|i| {
                let neg: Vec<u32> = coeffs[i].iter().map(|&a| (p - a) % p).collect();
                index[&neg]
            })
            .collect();

        let generator = Fe(index[&gen_coeffs]);
        Field { p, e, q, q2, modulus, generator, coeffs, add_t, neg_t }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// `q^2`, the number of elements.
    pub fn order(&self) -> u32 {
        self.q2
    }
    pub fn generator(&self) -> Fe {
        self.generator
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.p, e: self.e, modulus: self.modulus.clone() }
    }

    /// All elements in canonical order: zero, then `g^0, g^1, ...`.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q2 as u8).map(Fe)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> {
        (1..self.q2 as u8).map(Fe)
    }

    /// Discrete log of a nonzero element; `None` for zero.
    #[inline]
    pub fn exp(&self, a: Fe) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(u32::from(a.0) - 1)
        }
    }

    /// `g^k` with `k` taken modulo `q^2 - 1`.
    #[inline]
    pub fn from_exp(&self, k: i64) -> Fe {
        let m = i64::from(self.q2 - 1);
        Fe(1 + k.rem_euclid(m) as u8)
    }

    /// Polynomial-basis coefficients (ascending, length `2e`).
    pub fn coeffs(&self, a: Fe) -> &[u32] {
        &self.coeffs[a.0 as usize]
    }

    pub fn from_coeffs(&self, v: &[u32]) -> Option<Fe> {
        let want: Vec<u32> = v.iter().map(|&c| c % self.p).collect();
        self.coeffs.iter().position(|c| *c == want).map(|i| Fe(i as u8))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.add_t[a.0 as usize * self.q2 as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.neg_t[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let m = self.q2 - 1;
        let k = (u32::from(a.0) - 1) + (u32::from(b.0) - 1);
        Fe(1 + (if k >= m { k - m } else { k }) as u8)
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = i64::from(self.q2 - 1);
        Ok(self.from_exp((m - i64::from(a.0 - 1)) % m))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n` for any integer `n` (negative exponents invert; `0^0 = 1`).
    pub fn pow(&self, a: Fe, n: i64) -> Result<Fe> {
        if a.is_zero() {
            return match n {
                0 => Ok(Fe::ONE),
                n if n > 0 => Ok(Fe::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let k = i64::from(a.0 - 1);
        Ok(self.from_exp(k * n))
    }

    /// The `q`-power Frobenius `a -> a^q`; an involution on `F_{q^2}`.
    #[inline]
    pub fn frobenius_q(&self, a: Fe) -> Fe {
        if a.is_zero() {
            return Fe::ZERO;
        }
        let m = i64::from(self.q2 - 1);
        self.from_exp(i64::from(a.0 - 1) * i64::from(self.q) % m)
    }

    /// Render an element as `0` or `g^k`.
    pub fn display(&self, a: Fe) -> String {
        match self.exp(a) {
            None => "0".to_string(),
            Some(k) => format!("g^{k}"),
        }
    }

    /// Parse the rendering produced by [`Field::display`].
    pub fn parse_element(&self, s: &str) -> Result<Fe> {
        let s = s.trim();
        if s == "0" {
            return Ok(Fe::ZERO);
        }
        let k = s
            .strip_prefix("g^")
            .and_then(|t| t.parse::<i64>().ok())
            .ok_or_else(|| Error::Parse(format!("expected \"0\" or \"g^k\", got {s:?}")))?;
        Ok(self.from_exp(k))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{p: {}, e: {}, modulus: {:?}}}", self.p, self.e, self.modulus)
    }
}

// --- polynomial helpers over F_p, used only during construction ---

fn one_vec(deg: usize) -> Vec<u32> {
    let mut v = vec![0; deg];
    v[0] = 1;
    v
}

/// Product of two coefficient vectors modulo a monic `modulus`, all over F_p.
fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let deg = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // reduce by the monic modulus
    for i in (deg..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (k, &mk) in modulus.iter().enumerate().take(deg) {
            let idx = i - deg + k;
            prod[idx] = (prod[idx] + c * (p - mk) % p) % p;
        }
    }
    prod.truncate(deg);
    prod
}

fn multiplicative_order(a: &[u32], modulus: &[u32], p: u32) -> usize {
    let deg = modulus.len() - 1;
    let one = one_vec(deg);
    let mut acc = a.to_vec();
    acc.resize(deg, 0);
    if acc.iter().all(|&c| c == 0) {
        return 0;
    }
    let mut ord = 1;
    while acc != one {
        acc = poly_mul_mod(&acc, a, modulus, p);
        ord += 1;
        if ord > (p as usize).pow(deg as u32) {
            return 0; // not a unit; cannot happen in a field
        }
    }
    ord
}

/// All length-`deg` coefficient vectors over F_p in ascending lexicographic
/// order, constant term most significant.
fn all_vectors(p: u32, deg: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity((p as usize).pow(deg as u32));
    let mut v = vec![0u32; deg];
    loop {
        out.push(v.clone());
        let mut i = deg;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < p {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Monic polynomial given by ascending coefficients (leading 1 included).
/// Irreducible over F_p iff it has no monic factor of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for fdeg in 1..=deg / 2 {
        for mut tail in all_vectors(p, fdeg) {
            tail.push(1); // monic candidate divisor
            if poly_divides(&tail, poly, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(divisor: &[u32], poly: &[u32], p: u32) -> bool {
    let mut rem: Vec<u32> = poly.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let off = rem.len() - 1 - d;
            for (k, &dk) in divisor.iter().enumerate() {
                rem[off + k] = (rem[off + k] + lead * (p - dk) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// Lexicographically least monic irreducible polynomial of degree `deg`.
fn least_irreducible(p: u32, deg: usize) -> Vec<u32> {
    for mut v in all_vectors(p, deg) {
        v.push(1);
        if is_irreducible(&v, p) {
            return v;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
