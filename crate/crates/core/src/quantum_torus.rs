//! The quantum torus `C_t[l^±1, m^±1]` with `lm = t^2 ml`, stored in normal
//! order (the `l` power written before the `m` power).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;

/// `sum c_{a,b} l^a m^b` in normal order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QTElement {
    terms: BTreeMap<(i64, i64), LaurentPoly>,
}

impl QTElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, LaurentPoly::one())
    }

    /// `c * l^a m^b`.
    pub fn monomial(a: i64, b: i64, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, c);
        out
    }

    pub fn l() -> Self {
        Self::monomial(1, 0, LaurentPoly::one())
    }

    pub fn m() -> Self {
        Self::monomial(0, 1, LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i64, b: i64) -> LaurentPoly {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &LaurentPoly)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for ((a, b), v) in &self.terms {
            out.add_term(*a, *b, v * c);
        }
        out
    }

    /// `l^a m^b * self`.
    pub fn left_mul_monomial(&self, a: i64, b: i64) -> Self {
        let mut out = Self::zero();
        for ((c, d), v) in &self.terms {
            out.add_term(a + c, b + d, v.shift(-2 * b * c));
        }
        out
    }

    /// Membership in the quantum plane `C_t[l, m]`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    /// Applies `t -> t^-1` to every coefficient.
    pub fn invert_t(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c.invert_t())).collect(),
        }
    }
}

impl Add<&QTElement> for &QTElement {
    type Output = QTElement;
    fn add(self, rhs: &QTElement) -> QTElement {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, c.clone());
        }
        out
    }
}

impl Sub<&QTElement> for &QTElement {
    type Output = QTElement;
    fn sub(self, rhs: &QTElement) -> QTElement {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(*a, *b, -c);
        }
        out
    }
}

impl Neg for &QTElement {
    type Output = QTElement;
    fn neg(self) -> QTElement {
        self.scale(&LaurentPoly::constant(-1))
    }
}

impl Mul<&QTElement> for &QTElement {
    type Output = QTElement;
    /// `(l^a m^b)(l^c m^d) = t^{-2bc} l^{a+c} m^{b+d}`.
    fn mul(self, rhs: &QTElement) -> QTElement {
        let mut out = QTElement::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &rhs.terms {
                out.add_term(a + c, b + d, (x * y).shift(-2 * b * c));
            }
        }
        out
    }
}

impl fmt::Display for QTElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((a, b), c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match a {
                0 => {}
                1 => f.write_str("*l")?,
                _ => write!(f, "*l^{a}")?,
            }
            match b {
                0 => {}
                1 => f.write_str("*m")?,
                _ => write!(f, "*m^{b}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QTElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTElement({self})")
    }
}

impl Serialize for QTElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|((a, b), c)| (a, b, c)))
    }
}

impl<'de> Deserialize<'de> for QTElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<(i64, i64, LaurentPoly)>::deserialize(d)?;
        let mut out = QTElement::zero();
        for (a, b, c) in raw {
            out.add_term(a, b, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(a: i64, b: i64, e: i64) -> QTElement {
        QTElement::monomial(a, b, LaurentPoly::t_pow(e))
    }

    #[test]
    fn exchange_rule() {
        assert_eq!(&QTElement::m() * &QTElement::l(), mono(1, 1, -2));
        assert_eq!(&QTElement::l() * &QTElement::m(), mono(1, 1, 0));
        assert_eq!(&QTElement::l() * &QTElement::m(), (&QTElement::m() * &QTElement::l()).scale(&LaurentPoly::t_pow(2)));
    }

    #[test]
    fn monomial_products() {
        assert_eq!(&mono(2, 1, 0) * &mono(1, 1, 0), mono(3, 2, -2));
        let x = &mono(2, -1, 3) + &mono(-1, 4, 0);
        assert_eq!(&QTElement::one() * &x, x);
        assert_eq!(&x * &QTElement::one(), x);
    }

    #[test]
    fn left_monomial_examples() {
        let x = &mono(2, -1, 3) + &mono(-1, 4, 0);
        assert_eq!(x.left_mul_monomial(0, 0), x);
        assert_eq!(mono(-1, -3, 0).left_mul_monomial(1, 3), mono(0, 0, 6));
        for (a, b) in [(1, 3), (-2, 5), (0, -1)] {
            assert_eq!(x.left_mul_monomial(a, b), &mono(a, b, 0) * &x);
        }
    }

    #[test]
    fn polynomial_membership() {
        assert!(mono(2, 4, 0).is_polynomial());
        assert!(!mono(-1, 1, 0).is_polynomial());
        assert!(QTElement::zero().is_polynomial());
    }

    #[test]
    fn json_shape() {
        let x = &mono(1, -2, 3) + &mono(0, 0, 0);
        assert_eq!(serde_json::to_string(&x).unwrap(), "[[0,0,[[0,1]]],[1,-2,[[3,1]]]]");
        assert_eq!(serde_json::from_str::<QTElement>("[[0,0,[[0,1]]],[1,-2,[[3,1]]]]").unwrap(), x);
    }

    fn arb_qt() -> impl Strategy<Value = QTElement> {
        prop::collection::vec((-6i64..=6, -6i64..=6, -3i64..=3, -4i64..=4), 0..5).prop_map(|v| {
            let mut out = QTElement::zero();
            for (a, b, c, e) in v {
                out.add_term(a, b, LaurentPoly::monomial(c, e));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn associative(x in arb_qt(), y in arb_qt(), z in arb_qt()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn generator_words_reorder_consistently(word in prop::collection::vec((0usize..4, -2i64..=2), 1..=4)) {
            let gens: Vec<QTElement> = word
                .iter()
                .map(|&(g, k)| match g {
                    0 => QTElement::monomial(k, 0, LaurentPoly::one()),
                    1 => QTElement::monomial(0, k, LaurentPoly::one()),
                    2 => QTElement::monomial(k, 1, LaurentPoly::one()),
                    _ => QTElement::monomial(1, k, LaurentPoly::one()),
                })
                .collect();
            let left = gens.iter().skip(1).fold(gens[0].clone(), |acc, g| &acc * g);
            let right = gens.iter().rev().skip(1).fold(gens[gens.len() - 1].clone(), |acc, g| g * &acc);
            prop_assert_eq!(left, right);
        }

        #[test]
        fn json_round_trip(x in arb_qt()) {
            let s = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<QTElement>(&s).unwrap(), x);
        }
    }
}
