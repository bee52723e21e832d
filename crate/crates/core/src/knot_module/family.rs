//! The two-parameter skein family `A(k,n)`, `0 <= k <= 2p+1`, `n >= 0`.

use std::collections::HashMap;

use super::{FreeXY, TorusKnotParam};
use crate::chebyshev::cheb_s;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

fn t(e: i64) -> LaurentPoly {
    LaurentPoly::t_pow(e)
}

/// `t^6 + t^2 - t^2 x^2`, the formal boundary value `A(0,0) = A(2p+1,0)`.
pub fn a00() -> FreeXY {
    &(&FreeXY::monomial(0, 0, t(6)) + &FreeXY::monomial(0, 0, t(2))) - &FreeXY::monomial(2, 0, t(2))
}

struct Family {
    memo: HashMap<(u32, u32), FreeXY>,
}

impl Family {
    fn get(&mut self, k: u32, n: u32) -> FreeXY {
        if let Some(v) = self.memo.get(&(k, n)) {
            return v.clone();
        }
        let v = match k {
            0 => a00().mul_monomial(0, n),
            1 => FreeXY::monomial(0, n + 1, LaurentPoly::one()),
            2 => {
                let mut f = FreeXY::zero();
                f.add_term(0, n, -(&t(2) + &t(-2)));
                f.add_term(0, n + 2, t(-2));
                f.add_term(2, n, t(2));
                f.add_term(2, n + 1, LaurentPoly::one());
                f
            }
            _ => {
                // A(k+1,n) = t^-2 A(k,n+1) - t^-4 A(k-1,n) + (t^2 - t^-2) x^2 y^n + x^2 y^{n+1}
                let mut f = &self.get(k - 1, n + 1).scale(&t(-2)) - &self.get(k - 2, n).scale(&t(-4));
                f.add_term(2, n, &t(2) - &t(-2));
                f.add_term(2, n + 1, LaurentPoly::one());
                f
            }
        };
        self.memo.insert((k, n), v.clone());
        v
    }
}

fn check_k(k: i64, lo: i64, hi: i64) -> Result<u32> {
    if k < lo || k > hi {
        return Err(Error::IndexOutOfRange { index: k, lo, hi });
    }
    Ok(k as u32)
}

/// `A(k,n)` straight from the three-term recurrence and its initial values,
/// including `k = 2p+1` at every `n`.
pub fn skein_a_rec_raw(k: i64, n: u32, p: TorusKnotParam) -> Result<FreeXY> {
    let k = check_k(k, 0, 2 * p.get() + 1)?;
    Ok(Family { memo: HashMap::new() }.get(k, n))
}

/// `A(k,n)` from the recurrence, with the formally extended boundary value
/// `A(2p+1,0) = A(0,0) = t^6 + t^2 - t^2 x^2`.
pub fn skein_a_rec(k: i64, n: u32, p: TorusKnotParam) -> Result<FreeXY> {
    if k == 2 * p.get() + 1 && n == 0 {
        return Ok(a00());
    }
    skein_a_rec_raw(k, n, p)
}

/// The closed form for `A(k,n)`, `1 <= k <= 2p`:
///
/// ```text
/// -t^{-2k+6} y^n S_{k-2}(y) - t^{-2k+4} x^2 y^n S_{k-1}(y) + t^{-2k+2} y^n S_k(y)
///   - t^2 x^2 y^n + 2 t^2 x^2 sum_{r=-1}^{k-1} t^{-2r} S_r(y) y^n
/// ```
pub fn skein_a_closed(k: i64, n: u32, p: TorusKnotParam) -> Result<FreeXY> {
    check_k(k, 1, 2 * p.get())?;
    let sy = |i: i64| FreeXY::from_y_poly(&cheb_s(i)).mul_monomial(0, n);
    let mut f = &sy(k).scale(&t(-2 * k + 2)) - &sy(k - 2).scale(&t(-2 * k + 6));
    f = &f - &sy(k - 1).mul_monomial(2, 0).scale(&t(-2 * k + 4));
    f.add_term(2, n, -t(2));
    for r in -1..k {
        f = &f + &sy(r).mul_monomial(2, 0).scale(&LaurentPoly::monomial(2, 2 - 2 * r));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn param(p: i64) -> TorusKnotParam {
        TorusKnotParam::new(p).unwrap()
    }

    #[test]
    fn initial_values() {
        let p = param(2);
        for n in 0..4 {
            assert_eq!(skein_a_rec(1, n, p).unwrap(), FreeXY::monomial(0, n + 1, LaurentPoly::one()));
        }
        let mut want = FreeXY::zero();
        want.add_term(0, 0, -(&t(2) + &t(-2)));
        want.add_term(0, 2, t(-2));
        want.add_term(2, 0, t(2));
        want.add_term(2, 1, LaurentPoly::one());
        assert_eq!(skein_a_rec(2, 0, p).unwrap(), want);
        assert_eq!(skein_a_rec(0, 0, p).unwrap(), a00());
        assert_eq!(skein_a_rec(5, 0, p).unwrap(), a00());
    }

    #[test]
    fn a00_solves_the_extended_recurrence() {
        // A(2,0) = t^-2 A(1,1) - t^-4 A(0,0) + (t^2 - t^-2 + y) x^2
        let p = param(3);
        let mut rhs = &skein_a_rec(1, 1, p).unwrap().scale(&t(-2)) - &a00().scale(&t(-4));
        rhs.add_term(2, 0, &t(2) - &t(-2));
        rhs.add_term(2, 1, LaurentPoly::one());
        assert_eq!(skein_a_rec(2, 0, p).unwrap(), rhs);
    }

    #[test]
    fn range_errors() {
        let p = param(1);
        assert!(matches!(skein_a_rec(4, 0, p), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(skein_a_rec(-1, 0, p), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(skein_a_closed(0, 0, p), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(skein_a_closed(3, 0, p), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn closed_form_small_cases() {
        let p = param(2);
        assert_eq!(skein_a_closed(1, 0, p).unwrap(), FreeXY::monomial(0, 1, LaurentPoly::one()));
        assert_eq!(skein_a_closed(2, 0, p).unwrap(), skein_a_rec(2, 0, p).unwrap());
        assert_eq!(skein_a_closed(4, 1, p).unwrap(), skein_a_rec(4, 1, p).unwrap());
    }
}
