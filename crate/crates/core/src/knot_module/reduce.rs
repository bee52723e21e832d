use std::collections::BTreeMap;

use super::{FreeXY, KMElement, TorusKnotParam};
use crate::chebyshev::{cheb_s, s_basis_expand, s_index, s_product_indices, UniPoly};
use crate::laurent::LaurentPoly;

/// Reduction engine for one knot: rewrites `S_N(y)`, `N > p`, in the basis.
///
/// For `p < N <= 2p+1` (`N = p + i`) the torus-knot relation
///
/// ```text
/// S_{p+i}(y) = (-1)^i t^{2i+1} S_{2i}(x) (t S_{p-1}(y) + t^-1 S_p(y)) - t^{4i+2} S_{p-i-1}(y)
/// ```
///
/// is applied directly; larger indices go through `S_N = y S_{N-1} - S_{N-2}`
/// so the reduction is total.
#[derive(Clone, Debug)]
pub struct Reducer {
    p: TorusKnotParam,
    s_y: Vec<KMElement>,
    x_pow: Vec<BTreeMap<u32, LaurentPoly>>,
}

impl Reducer {
    pub fn new(p: TorusKnotParam) -> Self {
        let s_y = (0..=p.get() as u32)
            .map(|n| KMElement::basis(p, 0, n, LaurentPoly::one()))
            .collect();
        Self {
            p,
            s_y,
            x_pow: Vec::new(),
        }
    }

    pub fn param(&self) -> TorusKnotParam {
        self.p
    }

    fn relation(&self, i: i64) -> KMElement {
        let p = self.p.get();
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let mut out = KMElement::zero(self.p);
        out.add_term(2 * i as u32, (p - 1) as u32, LaurentPoly::monomial(sign, 2 * i + 2));
        out.add_term(2 * i as u32, p as u32, LaurentPoly::monomial(sign, 2 * i));
        if let Some((s, idx)) = s_index(p - i - 1) {
            out.add_term(0, idx, LaurentPoly::monomial(-s, 4 * i + 2));
        }
        out
    }

    /// `S_n(y)` in the basis.
    pub fn s_y(&mut self, n: u32) -> KMElement {
        let p = self.p.get();
        while self.s_y.len() <= n as usize {
            let big = self.s_y.len() as i64;
            let next = if big <= 2 * p + 1 {
                self.relation(big - p)
            } else {
                let prev = self.s_y[big as usize - 1].clone();
                &self.mul_y(&prev) - &self.s_y[big as usize - 2]
            };
            self.s_y.push(next);
        }
        self.s_y[n as usize].clone()
    }

    fn x_power(&mut self, j: u32) -> BTreeMap<u32, LaurentPoly> {
        while self.x_pow.len() <= j as usize {
            let d = self.x_pow.len() as u32;
            self.x_pow.push(s_basis_expand(&UniPoly::monomial(d, LaurentPoly::one())));
        }
        self.x_pow[j as usize].clone()
    }

    /// `S_k(x) * e`, using `S_a S_b = sum_j S_{a+b-2j}` in the `x` slot.
    pub fn times_s_x(&self, k: u32, e: &KMElement) -> KMElement {
        let mut out = KMElement::zero(self.p);
        for ((k2, n), c) in e.terms() {
            for idx in s_product_indices(k, k2) {
                out.add_term(idx, n, c.clone());
            }
        }
        out
    }

    /// `c * S_k(x) S_n(y)` for arbitrary `n`.
    pub fn basis_term(&mut self, k: u32, n: u32, c: &LaurentPoly) -> KMElement {
        if n as i64 <= self.p.get() {
            return KMElement::basis(self.p, k, n, c.clone());
        }
        let sy = self.s_y(n);
        self.times_s_x(k, &sy).scale(c)
    }

    pub fn reduce(&mut self, f: &FreeXY) -> KMElement {
        let mut out = KMElement::zero(self.p);
        for ((j, n), c) in f.terms() {
            let xs = self.x_power(j);
            let ys = self.x_power(n);
            for (k, a) in &xs {
                for (m, b) in &ys {
                    let coeff = &(c * a) * b;
                    out = &out + &self.basis_term(*k, *m, &coeff);
                }
            }
        }
        out
    }

    /// `S_n(y) -> S_{n+1}(y) + S_{n-1}(y)` on representatives (see [`km_mul_y`]).
    pub fn mul_y(&mut self, e: &KMElement) -> KMElement {
        let mut out = KMElement::zero(self.p);
        for ((k, n), c) in e.terms() {
            out = &out + &self.basis_term(k, n + 1, c);
            if n > 0 {
                out.add_term(k, n - 1, c.clone());
            }
        }
        out
    }
}

/// Brings a staging polynomial into the `S_k(x) S_n(y)` basis.
pub fn km_reduce(f: &FreeXY, p: TorusKnotParam) -> KMElement {
    Reducer::new(p).reduce(f)
}

/// `S_n(y)` in the basis of the skein module for `p`.
pub fn reduced_s_y(n: u32, p: TorusKnotParam) -> KMElement {
    Reducer::new(p).s_y(n)
}

/// Multiplication by `x` (one more parallel copy of `x`).
pub fn km_mul_x(e: &KMElement) -> KMElement {
    let mut out = KMElement::zero(e.param());
    for ((k, n), c) in e.terms() {
        out.add_term(k + 1, n, c.clone());
        if k > 0 {
            out.add_term(k - 1, n, c.clone());
        }
    }
    out
}

/// Stacks one more `y` on every basis skein and reduces.
///
/// This is bookkeeping on representatives, not an operation on the module:
/// applied to a reduced element it can disagree with the relations by
/// multiples of `1 - t^4`.
pub fn km_mul_y(e: &KMElement) -> KMElement {
    Reducer::new(e.param()).mul_y(e)
}

impl KMElement {
    /// The element as a commutative polynomial in `x` and `y`.
    pub fn to_free_xy(&self) -> FreeXY {
        let mut out = FreeXY::zero();
        for ((k, n), c) in self.terms() {
            let xs = FreeXY::from_x_poly(&cheb_s(k as i64));
            let ys = FreeXY::from_y_poly(&cheb_s(n as i64));
            out = &out + &(&xs * &ys).scale(c);
        }
        out
    }
}
