//! The skein module of the complement of the `(2,2p+1)` torus knot.
//!
//! Elements are written in the basis `S_k(x) S_n(y)` with `k >= 0` and
//! `0 <= n <= p`. Unreduced expressions in parallel copies of `x` and `y`
//! are staged in [`FreeXY`] and brought into the basis by [`km_reduce`].

mod family;
mod peripheral;
mod reduce;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::chebyshev::UniPoly;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

pub use family::{skein_a_closed, skein_a_rec, skein_a_rec_raw, a00};
pub use peripheral::{peripheral_y_factor, pi_0n, pi_1k, pi_element, pi_slope_minus_4p_minus_2, pi_slope_minus_4p_minus_1};
pub use reduce::{km_mul_x, km_mul_y, km_reduce, reduced_s_y, Reducer};

/// The torus knot parameter: the knot is the `(2, 2p+1)` torus knot, `p >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnotParam(u32);

impl TorusKnotParam {
    pub fn new(p: i64) -> Result<Self> {
        match u32::try_from(p) {
            Ok(p) if p >= 1 => Ok(Self(p)),
            _ => Err(Error::InvalidParameter(p)),
        }
    }

    pub fn get(self) -> i64 {
        self.0 as i64
    }
}

impl fmt::Display for TorusKnotParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Commutative staging polynomial `sum c_{j,n} x^j y^n`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeXY {
    coeffs: BTreeMap<(u32, u32), LaurentPoly>,
}

impl FreeXY {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * x^j y^n`.
    pub fn monomial(j: u32, n: u32, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(j, n, c);
        out
    }

    pub fn from_x_poly(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (d, c) in p.terms() {
            out.add_term(d, 0, c.clone());
        }
        out
    }

    pub fn from_y_poly(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (d, c) in p.terms() {
            out.add_term(0, d, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, j: u32, n: u32, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((j, n)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(j, n));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, j: u32, n: u32) -> LaurentPoly {
        self.coeffs.get(&(j, n)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for ((j, n), v) in &self.coeffs {
            out.add_term(*j, *n, v * c);
        }
        out
    }

    /// Multiplies by `x^j y^n`.
    pub fn mul_monomial(&self, j: u32, n: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|((a, b), c)| ((a + j, b + n), c.clone())).collect(),
        }
    }
}

impl Add<&FreeXY> for &FreeXY {
    type Output = FreeXY;
    fn add(self, rhs: &FreeXY) -> FreeXY {
        let mut out = self.clone();
        for ((j, n), c) in &rhs.coeffs {
            out.add_term(*j, *n, c.clone());
        }
        out
    }
}

impl Sub<&FreeXY> for &FreeXY {
    type Output = FreeXY;
    fn sub(self, rhs: &FreeXY) -> FreeXY {
        let mut out = self.clone();
        for ((j, n), c) in &rhs.coeffs {
            out.add_term(*j, *n, -c);
        }
        out
    }
}

impl Mul<&FreeXY> for &FreeXY {
    type Output = FreeXY;
    fn mul(self, rhs: &FreeXY) -> FreeXY {
        let mut out = FreeXY::zero();
        for ((a, b), x) in &self.coeffs {
            for ((c, d), y) in &rhs.coeffs {
                out.add_term(a + c, b + d, x * y);
            }
        }
        out
    }
}

fn fmt_xy(f: &mut fmt::Formatter<'_>, c: &LaurentPoly, xs: String, ys: String) -> fmt::Result {
    write!(f, "({c})")?;
    if !xs.is_empty() {
        write!(f, "*{xs}")?;
    }
    if !ys.is_empty() {
        write!(f, "*{ys}")?;
    }
    Ok(())
}

impl fmt::Display for FreeXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, ((j, n), c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let xs = match j {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{j}"),
            };
            let ys = match n {
                0 => String::new(),
                1 => "y".into(),
                _ => format!("y^{n}"),
            };
            fmt_xy(f, c, xs, ys)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeXY({self})")
    }
}

impl Serialize for FreeXY {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|((j, n), c)| (j, n, c)))
    }
}

impl<'de> Deserialize<'de> for FreeXY {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<(u32, u32, LaurentPoly)>::deserialize(d)?;
        let mut out = FreeXY::zero();
        for (j, n, c) in raw {
            out.add_term(j, n, c);
        }
        Ok(out)
    }
}

/// An element `sum c_{k,n} S_k(x) S_n(y)` of the skein module, `0 <= n <= p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KMElement {
    p: TorusKnotParam,
    coeffs: BTreeMap<(u32, u32), LaurentPoly>,
}

impl KMElement {
    pub fn zero(p: TorusKnotParam) -> Self {
        Self {
            p,
            coeffs: BTreeMap::new(),
        }
    }

    /// `c * S_k(x) S_n(y)`; panics if `n > p`.
    pub fn basis(p: TorusKnotParam, k: u32, n: u32, c: LaurentPoly) -> Self {
        let mut out = Self::zero(p);
        out.add_term(k, n, c);
        out
    }

    pub fn param(&self) -> TorusKnotParam {
        self.p
    }

    /// Panics on `n > p`: callers go through the reducer for larger indices.
    pub fn add_term(&mut self, k: u32, n: u32, c: LaurentPoly) {
        assert!(n as i64 <= self.p.get(), "S_{n}(y) is not a basis element for p = {}", self.p);
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((k, n)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(k, n));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32, n: u32) -> LaurentPoly {
        self.coeffs.get(&(k, n)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.p);
        for ((k, n), v) in &self.coeffs {
            out.add_term(*k, *n, v * c);
        }
        out
    }

    /// Applies `t -> t^-1` to every coefficient.
    pub fn invert_t(&self) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.invert_t())).collect(),
        }
    }

    /// Rebuilds an element from its wire triples `[k, n, coefficient]`.
    pub fn from_triples(p: TorusKnotParam, triples: Vec<(u32, u32, LaurentPoly)>) -> Result<Self> {
        let mut out = Self::zero(p);
        for (k, n, c) in triples {
            if n as i64 > p.get() {
                return Err(Error::IndexOutOfRange {
                    index: n as i64,
                    lo: 0,
                    hi: p.get(),
                });
            }
            out.add_term(k, n, c);
        }
        Ok(out)
    }
}

impl Add<&KMElement> for &KMElement {
    type Output = KMElement;
    fn add(self, rhs: &KMElement) -> KMElement {
        assert_eq!(self.p, rhs.p, "mixing skein modules of different knots");
        let mut out = self.clone();
        for ((k, n), c) in &rhs.coeffs {
            out.add_term(*k, *n, c.clone());
        }
        out
    }
}

impl Sub<&KMElement> for &KMElement {
    type Output = KMElement;
    fn sub(self, rhs: &KMElement) -> KMElement {
        self + &rhs.scale(&LaurentPoly::constant(-1))
    }
}

impl fmt::Display for KMElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, ((k, n), c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let xs = if *k == 0 { String::new() } else { format!("S{k}(x)") };
            let ys = if *n == 0 { String::new() } else { format!("S{n}(y)") };
            fmt_xy(f, c, xs, ys)?;
        }
        Ok(())
    }
}

impl fmt::Debug for KMElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KMElement[p={}]({self})", self.p)
    }
}

impl Serialize for KMElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|((k, n), c)| (k, n, c)))
    }
}
