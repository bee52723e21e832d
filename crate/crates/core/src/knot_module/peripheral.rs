//! Images of boundary curves in the knot-complement skein module.

use super::{KMElement, TorusKnotParam};
use crate::chebyshev::{s_index, t_in_s_basis};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::torus_skein::TorusSkein;

/// `c * S_m(x)` for any integer `m`, resolved through the negative-index rules.
fn s_x(p: TorusKnotParam, m: i64, c: LaurentPoly) -> KMElement {
    let mut out = KMElement::zero(p);
    if let Some((s, k)) = s_index(m) {
        out.add_term(k, 0, c.scale(s, 0));
    }
    out
}

/// `c * T_m(x)`.
fn t_x(p: TorusKnotParam, m: i64, c: &LaurentPoly) -> KMElement {
    let mut out = KMElement::zero(p);
    for (s, k) in t_in_s_basis(m) {
        out.add_term(k, 0, c.scale(s, 0));
    }
    out
}

/// `t S_{p-1}(y) + t^-1 S_p(y)`.
pub fn peripheral_y_factor(p: TorusKnotParam) -> KMElement {
    let pp = p.get() as u32;
    let mut out = KMElement::basis(p, 0, pp - 1, LaurentPoly::t_pow(1));
    out.add_term(0, pp, LaurentPoly::t_pow(-1));
    out
}

/// Multiplies an element supported on `S_k(x)` (no `y`) by the `y` factor.
fn times_y_factor(xs: &KMElement) -> KMElement {
    let p = xs.param();
    let mut out = KMElement::zero(p);
    for ((k, n), c) in xs.terms() {
        debug_assert_eq!(n, 0);
        for ((_, m), d) in peripheral_y_factor(p).terms() {
            out.add_term(k, m, c * d);
        }
    }
    out
}

fn parity_sign(p: TorusKnotParam) -> i64 {
    if (p.get() + 1) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `pi((0,n)_T) = T_n(x)`.
pub fn pi_0n(n: i64, p: TorusKnotParam) -> KMElement {
    t_x(p, n, &LaurentPoly::one())
}

/// `pi((1,k)_T)`:
///
/// ```text
/// t^{4p+k+2} T_{4p+k+2}(x)
///   + (-1)^{p+1} (t^{2p+k-1} S_{-2p-k}(x) - t^{2p+k+3} S_{-2p-k-4}(x)) (t S_{p-1}(y) + t^-1 S_p(y))
/// ```
pub fn pi_1k(k: i64, p: TorusKnotParam) -> KMElement {
    let pp = p.get();
    let sign = parity_sign(p);
    let head = t_x(p, 4 * pp + k + 2, &LaurentPoly::t_pow(4 * pp + k + 2));
    let xs = &s_x(p, -2 * pp - k, LaurentPoly::monomial(sign, 2 * pp + k - 1))
        - &s_x(p, -2 * pp - k - 4, LaurentPoly::monomial(sign, 2 * pp + k + 3));
    &head + &times_y_factor(&xs)
}

/// `pi((1,-4p-2)_T) = 2 + (-1)^{p+1}(t^{-2p-3} S_{2p+2}(x) - t^{-2p+1} S_{2p-2}(x)) (t S_{p-1}(y) + t^-1 S_p(y))`.
pub fn pi_slope_minus_4p_minus_2(p: TorusKnotParam) -> KMElement {
    let pp = p.get();
    let sign = parity_sign(p);
    let xs = &s_x(p, 2 * pp + 2, LaurentPoly::monomial(sign, -2 * pp - 3))
        - &s_x(p, 2 * pp - 2, LaurentPoly::monomial(sign, -2 * pp + 1));
    &KMElement::basis(p, 0, 0, LaurentPoly::constant(2)) + &times_y_factor(&xs)
}

/// `pi((1,-4p-1)_T) = t x + (-1)^{p+1}(t^{-2p-2} S_{2p+1}(x) - t^{-2p+2} S_{2p-3}(x)) (t S_{p-1}(y) + t^-1 S_p(y))`.
pub fn pi_slope_minus_4p_minus_1(p: TorusKnotParam) -> KMElement {
    let pp = p.get();
    let sign = parity_sign(p);
    let xs = &s_x(p, 2 * pp + 1, LaurentPoly::monomial(sign, -2 * pp - 2))
        - &s_x(p, 2 * pp - 3, LaurentPoly::monomial(sign, -2 * pp + 2));
    &KMElement::basis(p, 1, 0, LaurentPoly::t_pow(1)) + &times_y_factor(&xs)
}

/// The peripheral map on combinations of `(0,n)_T`, `(1,k)_T` and the empty link.
pub fn pi_element(s: &TorusSkein, p: TorusKnotParam) -> Result<KMElement> {
    let mut out = KMElement::basis(p, 0, 0, s.scalar_part().clone());
    for ((a, b), c) in s.terms() {
        let img = match a {
            0 => pi_0n(b, p),
            1 => pi_1k(b, p),
            _ => return Err(Error::UnsupportedCurve { a, b }),
        };
        out = &out + &img.scale(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot_module::km_mul_x;

    fn param(p: i64) -> TorusKnotParam {
        TorusKnotParam::new(p).unwrap()
    }

    fn t(e: i64) -> LaurentPoly {
        LaurentPoly::t_pow(e)
    }

    #[test]
    fn pi_0n_examples() {
        let p = param(2);
        assert_eq!(pi_0n(0, p), KMElement::basis(p, 0, 0, LaurentPoly::constant(2)));
        assert_eq!(pi_0n(1, p), KMElement::basis(p, 1, 0, LaurentPoly::one()));
        let mut want = KMElement::basis(p, 2, 0, LaurentPoly::one());
        want.add_term(0, 0, LaurentPoly::constant(-1));
        assert_eq!(pi_0n(2, p), want);
        assert_eq!(pi_0n(-3, p), pi_0n(3, p));
    }

    #[test]
    fn pi_1k_at_peripheral_slopes() {
        for pp in 1..=4 {
            let p = param(pp);
            let sign = parity_sign(p);
            // k = -2p-3: t^{2p-1} T_{2p-1}(x) + (-1)^{p+1} t^-4 S_3(x) Y
            let want = &t_x(p, 2 * pp - 1, &t(2 * pp - 1)) + &times_y_factor(&s_x(p, 3, LaurentPoly::monomial(sign, -4)));
            assert_eq!(pi_1k(-2 * pp - 3, p), want, "p = {pp}");
            // k = -2p+1: t^{2p+3} T_{2p+3}(x) + (-1)^{p+1} t^4 S_3(x) Y
            let want = &t_x(p, 2 * pp + 3, &t(2 * pp + 3)) + &times_y_factor(&s_x(p, 3, LaurentPoly::monomial(sign, 4)));
            assert_eq!(pi_1k(-2 * pp + 1, p), want, "p = {pp}");
        }
    }

    #[test]
    fn closed_forms_match_general_formula() {
        for pp in 1..=4 {
            let p = param(pp);
            assert_eq!(pi_slope_minus_4p_minus_2(p), pi_1k(-4 * pp - 2, p));
            assert_eq!(pi_slope_minus_4p_minus_1(p), pi_1k(-4 * pp - 1, p));
        }
    }

    #[test]
    fn three_term_recursion() {
        for pp in 1..=3 {
            let p = param(pp);
            for k in (-4 * pp - 4)..=4 {
                let rhs = &km_mul_x(&pi_1k(k, p)).scale(&t(1)) - &pi_1k(k - 1, p).scale(&t(2));
                assert_eq!(pi_1k(k + 1, p), rhs, "p={pp} k={k}");
            }
        }
    }

    #[test]
    fn pi_element_linearity_and_errors() {
        let p = param(1);
        let s = &TorusSkein::basis(0, 3) + &TorusSkein::basis(0, 1);
        assert_eq!(pi_element(&s, p).unwrap(), &pi_0n(3, p) + &pi_0n(1, p));
        assert_eq!(
            pi_element(&TorusSkein::basis(2, 0), p),
            Err(Error::UnsupportedCurve { a: 2, b: 0 })
        );
        let with_scalar = TorusSkein::scalar(LaurentPoly::constant(3));
        assert_eq!(pi_element(&with_scalar, p).unwrap(), KMElement::basis(p, 0, 0, LaurentPoly::constant(3)));
    }
}
