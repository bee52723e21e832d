//! A peripheral-ideal element of the `(2,2p+1)` torus knot and the quantum
//! plane polynomial it contributes to the noncommutative A-ideal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot_module::TorusKnotParam;
use crate::laurent::LaurentPoly;
use crate::quantum_torus::QTElement;
use crate::torus_skein::TorusSkein;

fn t(e: i64) -> LaurentPoly {
    LaurentPoly::t_pow(e)
}

fn qt(terms: &[(i64, i64, i64, i64)]) -> QTElement {
    let mut out = QTElement::zero();
    for &(a, b, c, e) in terms {
        out.add_term(a, b, LaurentPoly::monomial(c, e));
    }
    out
}

/// `(1,-2p-3)_T - t^-8 (1,-2p+1)_T + t^{2p-5} (0,2p+3)_T - t^{2p-1} (0,2p-1)_T`.
pub fn peripheral_element(p: TorusKnotParam) -> TorusSkein {
    let p = p.get();
    let mut s = TorusSkein::basis(1, -2 * p - 3);
    s.add_term(1, -2 * p + 1, -t(-8));
    s.add_term(0, 2 * p + 3, t(2 * p - 5));
    s.add_term(0, 2 * p - 1, -t(2 * p - 1));
    s
}

/// The embedded peripheral element before it is moved into the quantum plane.
pub fn pre_contraction(p: TorusKnotParam) -> QTElement {
    peripheral_element(p).embed()
}

/// The same element written out term by term (eight monomials).
pub fn pre_contraction_display(p: TorusKnotParam) -> QTElement {
    let p = p.get();
    qt(&[
        (1, -2 * p - 3, 1, 2 * p + 3),
        (-1, 2 * p + 3, 1, 2 * p + 3),
        (1, -2 * p + 1, -1, 2 * p - 9),
        (-1, 2 * p - 1, -1, 2 * p - 9),
        (0, 2 * p + 3, 1, 2 * p - 5),
        (0, -2 * p - 3, 1, 2 * p - 5),
        (0, 2 * p - 1, -1, 2 * p - 1),
        (0, -2 * p + 1, -1, 2 * p - 1),
    ])
}

/// `t^{2p+3} * (l m^{2p+3}) * embed(peripheral_element(p))`, checked to lie
/// in the quantum plane.
pub fn aideal_poly(p: TorusKnotParam) -> Result<QTElement> {
    let pp = p.get();
    let poly = pre_contraction(p).left_mul_monomial(1, 2 * pp + 3).scale(&t(2 * pp + 3));
    if !poly.is_polynomial() {
        return Err(Error::NotPolynomial(poly.to_string()));
    }
    Ok(poly)
}

/// The two factors `l - t^-4 l m^4 + t^{4p-2} - t^{4p+10} m^4` and
/// `l - t^{4p+2} m^{4p+2}`.
pub fn aideal_factors(p: TorusKnotParam) -> (QTElement, QTElement) {
    let p = p.get();
    let first = qt(&[(1, 0, 1, 0), (1, 4, -1, -4), (0, 0, 1, 4 * p - 2), (0, 4, -1, 4 * p + 10)]);
    let second = qt(&[(1, 0, 1, 0), (0, 4 * p + 2, -1, 4 * p + 2)]);
    (first, second)
}

pub fn aideal_factored_expand(p: TorusKnotParam) -> QTElement {
    let (a, b) = aideal_factors(p);
    &a * &b
}

/// The eight-term expansion
/// `l^2 + t^{8p+12} m^{4p+6} - t^-12 l^2 m^4 - t^{8p} m^{4p+2} + t^{4p-2} l m^{4p+6}
///  + t^{4p-2} l - t^{4p+2} l m^{4p+2} - t^{4p+2} l m^4`.
pub fn aideal_expanded_display(p: TorusKnotParam) -> QTElement {
    let p = p.get();
    qt(&[
        (2, 0, 1, 0),
        (0, 4 * p + 6, 1, 8 * p + 12),
        (2, 4, -1, -12),
        (0, 4 * p + 2, -1, 8 * p),
        (1, 4 * p + 6, 1, 4 * p - 2),
        (1, 0, 1, 4 * p - 2),
        (1, 4 * p + 2, -1, 4 * p + 2),
        (1, 4, -1, 4 * p + 2),
    ])
}

/// The generator together with its factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AIdealGenerator {
    pub p: i64,
    pub peripheral: TorusSkein,
    pub polynomial: QTElement,
    pub factored_parts: (QTElement, QTElement),
}

impl AIdealGenerator {
    pub fn new(p: TorusKnotParam) -> Result<Self> {
        let polynomial = aideal_poly(p)?;
        let factored_parts = aideal_factors(p);
        debug_assert_eq!(&factored_parts.0 * &factored_parts.1, polynomial);
        Ok(Self {
            p: p.get(),
            peripheral: peripheral_element(p),
            polynomial,
            factored_parts,
        })
    }
}

/// `sum_q gamma_{2,q} (-1)^q t^{(2n+2) q}` for the `l^2` coefficients of `poly`.
pub fn degree2_condition_poly(poly: &QTElement, n: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for ((a, q), c) in poly.terms() {
        if a == 2 {
            let sign = if q % 2 == 0 { 1 } else { -1 };
            out += c.scale(sign, (2 * n + 2) * q);
        }
    }
    out
}

/// True when the degree-2 expression is a nonzero Laurent polynomial for
/// every `0 <= n <= n_max`.
pub fn check_degree2_condition(p: TorusKnotParam, n_max: i64) -> Result<bool> {
    let poly = aideal_poly(p)?;
    Ok((0..=n_max).all(|n| !degree2_condition_poly(&poly, n).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot_module::pi_element;

    fn param(p: i64) -> TorusKnotParam {
        TorusKnotParam::new(p).unwrap()
    }

    #[test]
    fn peripheral_element_small_p() {
        let mut want = TorusSkein::basis(1, -5);
        want.add_term(1, -1, -t(-8));
        want.add_term(0, 5, t(-3));
        want.add_term(0, 1, -t(1));
        assert_eq!(peripheral_element(param(1)), want);

        let mut want = TorusSkein::basis(1, -7);
        want.add_term(1, -3, -t(-8));
        want.add_term(0, 7, t(-1));
        want.add_term(0, 3, -t(3));
        assert_eq!(peripheral_element(param(2)), want);
    }

    #[test]
    fn peripheral_element_is_killed() {
        for p in 1..=5 {
            assert!(pi_element(&peripheral_element(param(p)), param(p)).unwrap().is_zero());
        }
    }

    #[test]
    fn expansion_for_trefoil() {
        let want = qt(&[
            (2, 0, 1, 0),
            (0, 10, 1, 20),
            (2, 4, -1, -12),
            (0, 6, -1, 8),
            (1, 10, 1, 2),
            (1, 0, 1, 2),
            (1, 6, -1, 6),
            (1, 4, -1, 6),
        ]);
        assert_eq!(aideal_poly(param(1)).unwrap(), want);
        let (a, b) = aideal_factors(param(1));
        assert_eq!(a, qt(&[(1, 0, 1, 0), (1, 4, -1, -4), (0, 0, 1, 2), (0, 4, -1, 14)]));
        assert_eq!(b, qt(&[(1, 0, 1, 0), (0, 6, -1, 6)]));
    }

    #[test]
    fn all_forms_agree() {
        for p in 1..=5 {
            let p = param(p);
            let poly = aideal_poly(p).unwrap();
            assert_eq!(poly, aideal_factored_expand(p));
            assert_eq!(poly, aideal_expanded_display(p));
            assert_eq!(pre_contraction(p), pre_contraction_display(p));
            assert_eq!(poly.coeff(2, 0), LaurentPoly::one());
            assert_eq!(poly.coeff(2, 4), -t(-12));
            assert_eq!(poly.terms().filter(|((a, _), _)| *a == 2).count(), 2);
        }
    }

    #[test]
    fn degree2_condition() {
        let poly = aideal_poly(param(1)).unwrap();
        assert_eq!(degree2_condition_poly(&poly, 0), &LaurentPoly::one() - &t(-4));
        assert_eq!(degree2_condition_poly(&poly, 1), &LaurentPoly::one() - &t(4));
        for p in 1..=5 {
            assert!(check_degree2_condition(param(p), 50).unwrap());
        }
    }

    #[test]
    fn generator_invariants() {
        let g = AIdealGenerator::new(param(3)).unwrap();
        assert!(g.polynomial.is_polynomial());
        assert_eq!(&g.factored_parts.0 * &g.factored_parts.1, g.polynomial);
    }
}
