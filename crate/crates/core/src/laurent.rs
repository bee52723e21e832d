//! Sparse Laurent polynomials in `t` with arbitrary-precision integer
//! coefficients, plus the Gaussian-integer variant produced by `t -> i t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Laurent polynomial `sum c_k t^k` with integer coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent and zero coefficients are
/// never stored, so derived equality is equality of polynomials.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `c * t^exp`.
    pub fn scale(&self, c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + exp, v * &c)).collect(),
        }
    }

    /// Multiplies by `t^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + exp, v.clone())).collect(),
        }
    }

    /// The substitution `t -> t^-1`.
    pub fn invert_t(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` over `Z[t, t^-1]`.
    ///
    /// Eliminates from the top exponent down; any leftover is reported as
    /// [`Error::NonExactDivision`], never truncated.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (Some(d_hi), Some(d_lo)) = (divisor.max_exp(), divisor.min_exp()) else {
            return Err(Error::DivisionByZero);
        };
        let lead = &divisor.terms[&d_hi];
        let Some(a_lo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        // every quotient exponent lies in [a_lo - d_lo, a_hi - d_hi]
        let q_lo = a_lo - d_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_hi) = rem.max_exp() {
            let e = r_hi - d_hi;
            let (c, r) = rem.terms[&r_hi].div_rem(lead);
            if e < q_lo || !r.is_zero() {
                return Err(Error::NonExactDivision {
                    dividend: self.to_string(),
                    divisor: divisor.to_string(),
                });
            }
            rem -= &divisor.scale(c.clone(), e);
            quot.add_term(e, c);
        }
        Ok(quot)
    }

    /// The substitution `t -> i t`.
    pub fn subst_it(&self) -> GaussLaurent {
        let mut out = GaussLaurent::default();
        for (&e, c) in &self.terms {
            let g = match e.rem_euclid(4) {
                0 => GaussInt::new(c.clone(), BigInt::zero()),
                1 => GaussInt::new(BigInt::zero(), c.clone()),
                2 => GaussInt::new(-c, BigInt::zero()),
                _ => GaussInt::new(BigInt::zero(), -c),
            };
            out.terms.insert(e, g);
        }
        out
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `-t^-2 + 3 - t^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if *e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for v in self.terms.values_mut() {
            *v = -std::mem::take(v);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

/// JSON coefficients are plain numbers when they fit in an `i64` and decimal
/// strings otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Small(i64),
    Big(String),
}

impl WireInt {
    fn from_big(c: &BigInt) -> Self {
        match c.to_i64() {
            Some(v) => WireInt::Small(v),
            None => WireInt::Big(c.to_string()),
        }
    }

    fn into_big<E: de::Error>(self) -> std::result::Result<BigInt, E> {
        match self {
            WireInt::Small(v) => Ok(BigInt::from(v)),
            WireInt::Big(s) => s
                .parse()
                .map_err(|_| E::custom(format!("invalid integer coefficient {s:?}"))),
        }
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, WireInt::from_big(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut out = LaurentPoly::zero();
                while let Some((e, c)) = seq.next_element::<(i64, WireInt)>()? {
                    out.add_term(e, c.into_big()?);
                }
                Ok(out)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

/// A Gaussian integer `re + i*im`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, other: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
}

/// A Laurent polynomial in `t` with Gaussian-integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussLaurent {
    terms: BTreeMap<i64, GaussInt>,
}

impl GaussLaurent {
    pub fn terms(&self) -> impl Iterator<Item = (i64, &GaussInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> GaussInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exp: i64, c: GaussInt) {
        let slot = self.terms.entry(exp).or_default();
        slot.re += c.re;
        slot.im += c.im;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64, i64)>>(terms: I) -> Self {
        let mut out = Self::default();
        for (e, re, im) in terms {
            out.add_term(e, GaussInt::new(re.into(), im.into()));
        }
        out
    }
}

impl Mul<&GaussLaurent> for &GaussLaurent {
    type Output = GaussLaurent;
    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &GaussLaurent) -> GaussLaurent {
        let mut out = GaussLaurent::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.mul(cb));
            }
        }
        out
    }
}

impl fmt::Display for GaussLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (c.re.is_zero(), c.im.is_zero()) {
                (false, true) => write!(f, "({})", c.re)?,
                (true, false) => write!(f, "({}i)", c.im)?,
                _ => write!(f, "({}{:+}i)", c.re, c.im)?,
            }
            if *e != 0 {
                write!(f, "*t^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for GaussLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, WireInt::from_big(&c.re), WireInt::from_big(&c.im)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for GaussLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<(i64, WireInt, WireInt)>::deserialize(deserializer)?;
        let mut out = GaussLaurent::default();
        for (e, re, im) in raw {
            out.add_term(e, GaussInt::new(re.into_big()?, im.into_big()?));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = lp(&[(1, 1), (-1, 1)]);
        let b = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn zero_annihilates() {
        let z = LaurentPoly::zero();
        assert!((&z * &LaurentPoly::t_pow(5)).is_empty());
    }

    #[test]
    fn direct_expansion() {
        let a = lp(&[(2, 1), (0, 1)]);
        let b = lp(&[(-2, 1), (0, 1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn exact_division_examples() {
        let q = lp(&[(2, 1), (-2, -1)]).exact_div(&lp(&[(1, 1), (-1, -1)])).unwrap();
        assert_eq!(q, lp(&[(1, 1), (-1, 1)]));
        assert_eq!(LaurentPoly::t_pow(4).exact_div(&LaurentPoly::t_pow(1)).unwrap(), LaurentPoly::t_pow(3));
        assert!(matches!(
            lp(&[(2, 1), (0, 1)]).exact_div(&lp(&[(1, 1), (0, -1)])),
            Err(Error::NonExactDivision { .. })
        ));
        assert!(matches!(LaurentPoly::one().exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero)));
        assert!(LaurentPoly::zero().exact_div(&lp(&[(3, 2)])).unwrap().is_zero());
    }

    #[test]
    fn non_unit_leading_coefficient() {
        // (2t + 1)(t - 3) / (2t + 1)
        let d = lp(&[(1, 2), (0, 1)]);
        let a = &d * &lp(&[(1, 1), (0, -3)]);
        assert_eq!(a.exact_div(&d).unwrap(), lp(&[(1, 1), (0, -3)]));
        assert!(lp(&[(1, 3)]).exact_div(&lp(&[(0, 2)])).is_err());
    }

    #[test]
    fn subst_it_examples() {
        assert_eq!(LaurentPoly::t_pow(2).subst_it(), GaussLaurent::from_terms([(2, -1, 0)]));
        assert_eq!(LaurentPoly::t_pow(4).subst_it(), GaussLaurent::from_terms([(4, 1, 0)]));
        assert_eq!(lp(&[(0, 1), (1, 1)]).subst_it(), GaussLaurent::from_terms([(0, 1, 0), (1, 0, 1)]));
        assert_eq!(LaurentPoly::t_pow(-1).subst_it(), GaussLaurent::from_terms([(-1, 0, -1)]));
    }

    #[test]
    fn display_is_ascending() {
        assert_eq!(lp(&[(4, -1), (0, 3), (-2, -1)]).to_string(), "-t^-2 + 3 - t^4");
        assert_eq!(lp(&[(1, 2)]).to_string(), "2*t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let a = lp(&[(3, -2), (-1, 5)]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[-1,5],[3,-2]]");
        let big = LaurentPoly::monomial(BigInt::from(i64::MAX) * 4, 1);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, "[[1,\"36893488147419103228\"]]");
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), big);
        let g = GaussLaurent::from_terms([(1, 0, 2), (2, -1, 0)]);
        assert_eq!(serde_json::to_string(&g).unwrap(), "[[1,0,2],[2,-1,0]]");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-20i64..=20, -9i64..=9), 0..8).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn exact_div_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn subst_it_is_multiplicative(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).subst_it(), &a.subst_it() * &b.subst_it());
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), a);
        }
    }
}
