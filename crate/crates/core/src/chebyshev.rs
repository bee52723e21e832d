//! Chebyshev polynomials `T_n`, `S_n` over all integer indices, and the
//! conversion between the power basis and the `S_n` basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use crate::laurent::LaurentPoly;

/// A polynomial in one formal variable with Laurent-polynomial coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, LaurentPoly>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::monomial(0, c)
    }

    /// `c * x^deg`.
    pub fn monomial(deg: u32, c: LaurentPoly) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        Self { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        let mut out = Self::zero();
        for (d, &c) in coeffs.iter().enumerate() {
            out.add_term(d as u32, LaurentPoly::constant(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: u32) -> LaurentPoly {
        self.coeffs.get(&deg).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn add_term(&mut self, deg: u32, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(deg).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (d, v) in &self.coeffs {
            out.add_term(*d, v * c);
        }
        out
    }

    pub fn mul_x(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, c)| (d + 1, c.clone())).collect(),
        }
    }

    pub fn fmt_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(d, c)| match d {
                0 => format!("({c})"),
                1 => format!("({c})*{var}"),
                _ => format!("({c})*{var}^{d}"),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, -c);
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

fn s_cache() -> &'static Mutex<Vec<UniPoly>> {
    static CACHE: OnceLock<Mutex<Vec<UniPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![UniPoly::from_ints(&[1]), UniPoly::from_ints(&[0, 1])]))
}

fn s_nonneg(n: u32) -> UniPoly {
    let mut cache = s_cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n as usize {
        let k = cache.len();
        let next = &cache[k - 1].mul_x() - &cache[k - 2];
        cache.push(next);
    }
    cache[n as usize].clone()
}

/// Resolves a possibly negative `S` index through `S_{-1} = 0` and
/// `S_{-n} = -S_{n-2}`: returns `(sign, index)` with `index >= 0`, or `None`
/// when the polynomial vanishes.
pub fn s_index(n: i64) -> Option<(i64, u32)> {
    match n {
        n if n >= 0 => Some((1, n as u32)),
        -1 => None,
        n => Some((-1, (-n - 2) as u32)),
    }
}

/// `S_n` for any integer `n`.
pub fn cheb_s(n: i64) -> UniPoly {
    match s_index(n) {
        None => UniPoly::zero(),
        Some((1, k)) => s_nonneg(k),
        Some((_, k)) => -&s_nonneg(k),
    }
}

/// `T_n` for any integer `n`; `T_0 = 2` and `T_{-n} = T_n`.
pub fn cheb_t(n: i64) -> UniPoly {
    let n = n.unsigned_abs() as i64;
    if n == 0 {
        return UniPoly::from_ints(&[2]);
    }
    &cheb_s(n) - &cheb_s(n - 2)
}

/// `T_n` written in the `S` basis as `(sign, index)` pairs: `T_n = S_|n| - S_{|n|-2}`.
pub fn t_in_s_basis(n: i64) -> Vec<(i64, u32)> {
    let n = n.unsigned_abs() as i64;
    let mut out = Vec::with_capacity(2);
    if let Some((s, k)) = s_index(n) {
        out.push((s, k));
    }
    if let Some((s, k)) = s_index(n - 2) {
        out.push((-s, k));
    }
    out
}

/// Indices in `S_a * S_b = sum_{j=0}^{min(a,b)} S_{a+b-2j}`.
pub fn s_product_indices(a: u32, b: u32) -> impl Iterator<Item = u32> {
    (0..=a.min(b)).map(move |j| a + b - 2 * j)
}

/// Writes `p` as `sum c_n S_n` by peeling off the top degree (each `S_n` is
/// monic of degree `n`).
pub fn s_basis_expand(p: &UniPoly) -> BTreeMap<u32, LaurentPoly> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some(d) = rest.degree() {
        let c = rest.coeff(d);
        rest = &rest - &cheb_s(d as i64).scale(&c);
        out.insert(d, c);
    }
    out
}

/// Inverse of [`s_basis_expand`].
pub fn s_basis_collapse(coeffs: &BTreeMap<u32, LaurentPoly>) -> UniPoly {
    coeffs
        .iter()
        .fold(UniPoly::zero(), |acc, (n, c)| &acc + &cheb_s(*n as i64).scale(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn t_examples() {
        assert_eq!(cheb_t(0), UniPoly::from_ints(&[2]));
        assert_eq!(cheb_t(2), UniPoly::from_ints(&[-2, 0, 1]));
        assert_eq!(cheb_t(-3), UniPoly::from_ints(&[0, -3, 0, 1]));
        assert_eq!(cheb_t(1), UniPoly::from_ints(&[0, 1]));
    }

    #[test]
    fn s_examples() {
        assert_eq!(cheb_s(2), UniPoly::from_ints(&[-1, 0, 1]));
        assert!(cheb_s(-1).is_zero());
        assert_eq!(cheb_s(-4), UniPoly::from_ints(&[1, 0, -1]));
        assert_eq!(cheb_s(-2), UniPoly::from_ints(&[-1]));
        assert_eq!(cheb_s(3), UniPoly::from_ints(&[0, -2, 0, 1]));
    }

    #[test]
    fn expand_examples() {
        let e = s_basis_expand(&UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(e, BTreeMap::from([(0, LaurentPoly::one()), (2, LaurentPoly::one())]));
        let e = s_basis_expand(&UniPoly::from_ints(&[0, -2, 0, 1]));
        assert_eq!(e, BTreeMap::from([(3, LaurentPoly::one())]));
        let e = s_basis_expand(&UniPoly::from_ints(&[2]));
        assert_eq!(e, BTreeMap::from([(0, LaurentPoly::constant(2))]));
        assert!(s_basis_expand(&UniPoly::zero()).is_empty());
    }

    #[test]
    fn recurrences_hold_on_all_indices() {
        let x = UniPoly::from_ints(&[0, 1]);
        for n in -10..=30 {
            assert_eq!(&x * &cheb_s(n), &cheb_s(n + 1) + &cheb_s(n - 1), "S at {n}");
            assert_eq!(&x * &cheb_t(n), &cheb_t(n + 1) + &cheb_t(n - 1), "T at {n}");
            assert_eq!(cheb_t(n), &cheb_s(n) - &cheb_s(n - 2), "T = S - S at {n}");
        }
    }

    #[test]
    fn product_rule_matches_multiplication() {
        for a in 0..8u32 {
            for b in 0..8u32 {
                let lhs = &cheb_s(a as i64) * &cheb_s(b as i64);
                let rhs = s_product_indices(a, b).fold(UniPoly::zero(), |acc, k| &acc + &cheb_s(k as i64));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn t_in_s_basis_matches() {
        for n in -12..=12 {
            let via = t_in_s_basis(n).into_iter().fold(UniPoly::zero(), |acc, (s, k)| {
                &acc + &cheb_s(k as i64).scale(&LaurentPoly::constant(s))
            });
            assert_eq!(via, cheb_t(n));
        }
    }

    proptest! {
        #[test]
        fn expand_round_trips(coeffs in prop::collection::vec((0u32..=30, -5i64..=5, -4i64..=4), 0..10)) {
            let mut p = UniPoly::zero();
            for (d, c, e) in coeffs {
                p.add_term(d, LaurentPoly::monomial(c, e));
            }
            prop_assert_eq!(s_basis_collapse(&s_basis_expand(&p)), p);
        }
    }
}
