//! The Kauffman bracket skein algebra of the thickened torus, in the basis of
//! Chebyshev-`T` colored simple closed curves `(p,q)_T`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::chebyshev::UniPoly;
use crate::laurent::LaurentPoly;
use crate::quantum_torus::QTElement;

/// A finite combination of basis skeins `(p,q)_T` plus a multiple of the
/// empty link.
///
/// Stored pairs are normalized: `p > 0`, or `p = 0` and `q > 0`. The pair
/// `(0,0)_T` is `T_0 = 2` times the empty link and lives in `scalar`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TorusSkein {
    terms: BTreeMap<(i64, i64), LaurentPoly>,
    scalar: LaurentPoly,
}

fn normalize(p: i64, q: i64) -> Option<(i64, i64)> {
    match (p, q) {
        (0, 0) => None,
        (p, q) if p < 0 || (p == 0 && q < 0) => Some((-p, -q)),
        pq => Some(pq),
    }
}

impl TorusSkein {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c` times the empty link.
    pub fn scalar(c: LaurentPoly) -> Self {
        Self {
            terms: BTreeMap::new(),
            scalar: c,
        }
    }

    /// The basis skein `(p,q)_T`.
    pub fn basis(p: i64, q: i64) -> Self {
        Self::term(p, q, LaurentPoly::one())
    }

    /// `c * (p,q)_T`.
    pub fn term(p: i64, q: i64, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, c);
        out
    }

    pub fn add_term(&mut self, p: i64, q: i64, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match normalize(p, q) {
            None => self.scalar += c.scale(2, 0),
            Some(key) => {
                let slot = self.terms.entry(key).or_default();
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.scalar.is_zero()
    }

    pub fn scalar_part(&self) -> &LaurentPoly {
        &self.scalar
    }

    pub fn coeff(&self, p: i64, q: i64) -> LaurentPoly {
        match normalize(p, q) {
            None => self.scalar.scale(1, 0),
            Some(key) => self.terms.get(&key).cloned().unwrap_or_default(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &LaurentPoly)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::scalar(&self.scalar * c);
        for ((p, q), v) in &self.terms {
            out.add_term(*p, *q, v * c);
        }
        out
    }

    /// `t -> t^-1` in every coefficient.
    pub fn invert_t(&self) -> Self {
        let mut out = Self::scalar(self.scalar.invert_t());
        for ((p, q), v) in &self.terms {
            out.add_term(*p, *q, v.invert_t());
        }
        out
    }

    /// Image in the quantum torus: `(p,q)_T -> t^{-pq}(l^p m^q + l^-p m^-q)`.
    pub fn embed(&self) -> QTElement {
        let mut out = QTElement::monomial(0, 0, self.scalar.clone());
        for ((p, q), c) in &self.terms {
            let c = c.shift(-p * q);
            out.add_term(*p, *q, c.clone());
            out.add_term(-p, -q, c);
        }
        out
    }

    /// Evaluates a polynomial in one variable at `self` using the skein product.
    pub fn eval_poly(&self, poly: &UniPoly) -> Self {
        let mut out = Self::zero();
        let mut power = Self::scalar(LaurentPoly::one());
        let mut deg = 0;
        for (d, c) in poly.terms() {
            while deg < d {
                power = &power * self;
                deg += 1;
            }
            out = &out + &power.scale(c);
        }
        out
    }
}

impl Add<&TorusSkein> for &TorusSkein {
    type Output = TorusSkein;
    fn add(self, rhs: &TorusSkein) -> TorusSkein {
        let mut out = self.clone();
        out.scalar += &rhs.scalar;
        for ((p, q), c) in &rhs.terms {
            out.add_term(*p, *q, c.clone());
        }
        out
    }
}

impl Sub<&TorusSkein> for &TorusSkein {
    type Output = TorusSkein;
    fn sub(self, rhs: &TorusSkein) -> TorusSkein {
        self + &rhs.scale(&LaurentPoly::constant(-1))
    }
}

impl Mul<&TorusSkein> for &TorusSkein {
    type Output = TorusSkein;
    /// Product-to-sum: `(p,q)*(r,s) = t^{ps-qr}(p+r,q+s) + t^{-(ps-qr)}(p-r,q-s)`.
    fn mul(self, rhs: &TorusSkein) -> TorusSkein {
        let mut out = TorusSkein::scalar(&self.scalar * &rhs.scalar);
        for ((p, q), a) in &self.terms {
            out = &out + &TorusSkein::term(*p, *q, a * &rhs.scalar);
        }
        for ((r, s), b) in &rhs.terms {
            out = &out + &TorusSkein::term(*r, *s, &self.scalar * b);
        }
        for ((p, q), a) in &self.terms {
            for ((r, s), b) in &rhs.terms {
                let det = p * s - q * r;
                let ab = a * b;
                out.add_term(p + r, q + s, ab.shift(det));
                out.add_term(p - r, q - s, ab.shift(-det));
            }
        }
        out
    }
}

impl fmt::Display for TorusSkein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.scalar.is_zero() {
            parts.push(format!("({})", self.scalar));
        }
        for ((p, q), c) in &self.terms {
            parts.push(format!("({c})*({p},{q})_T"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl fmt::Debug for TorusSkein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorusSkein({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TorusSkeinWire {
    terms: Vec<(i64, i64, LaurentPoly)>,
    scalar: LaurentPoly,
}

impl Serialize for TorusSkein {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TorusSkeinWire {
            terms: self.terms.iter().map(|((p, q), c)| (*p, *q, c.clone())).collect(),
            scalar: self.scalar.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TorusSkein {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = TorusSkeinWire::deserialize(d)?;
        let mut out = TorusSkein::scalar(wire.scalar);
        for (p, q, c) in wire.terms {
            out.add_term(p, q, c);
        }
        Ok(out)
    }
}
