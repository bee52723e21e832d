//! Cross-module checks: recursion against the braid oracle beyond the
//! acceptance range, and randomized invariants.

use proptest::prelude::*;
use torus_skein::aideal::{aideal_poly, peripheral_element};
use torus_skein::jones::kappa_table;
use torus_skein::knot_module::{km_reduce, pi_element, FreeXY};
use torus_skein::oracle::{braid_bracket, colored_bracket, colored_bracket_with, BraidWord, Chirality};
use torus_skein::{KMElement, LaurentPoly, TorusKnotParam, TorusSkein};

fn param(p: i64) -> TorusKnotParam {
    TorusKnotParam::new(p).unwrap()
}

#[test]
fn recursion_matches_oracle_beyond_acceptance_range() {
    for (p, top) in [(1, 4u32), (2, 3), (3, 2), (4, 1)] {
        let table = kappa_table(param(p), top as usize).unwrap();
        for n in 1..=top {
            assert_eq!(colored_bracket(param(p), n).unwrap(), table.values[n as usize], "p={p} n={n}");
        }
    }
}

#[test]
fn other_chirality_is_the_mirror_table() {
    for p in 1..=2 {
        let table = kappa_table(param(p), 2).unwrap().mirrored();
        for n in 1..=2u32 {
            let pos = colored_bracket_with(param(p), n, Chirality::Positive).unwrap();
            assert_eq!(pos, table.values[n as usize]);
        }
    }
}

#[test]
fn peripheral_element_dies_for_larger_p() {
    for p in 6..=9 {
        assert!(pi_element(&peripheral_element(param(p)), param(p)).unwrap().is_zero());
        assert!(aideal_poly(param(p)).unwrap().is_polynomial());
    }
}

#[test]
fn colored_jones_of_trefoil_is_integral_gaussian() {
    let table = kappa_table(param(1), 6).unwrap();
    for v in &table.values {
        let j = v.subst_it();
        // kappa has only even exponents, so t -> i t yields real coefficients
        assert!(j.terms().all(|(_, c)| c.im == 0.into()));
    }
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -3i64..=3), 0..4).prop_map(LaurentPoly::from_terms)
}

fn curve() -> impl Strategy<Value = (i64, i64)> {
    prop_oneof![(Just(0i64), -8i64..=8), (Just(1i64), -12i64..=6)]
}

fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |k| {
        prop::collection::vec((1..k as i32, any::<bool>()), 0..=max_len).prop_map(move |gs| {
            BraidWord::new(k, gs.into_iter().map(|(g, s)| if s { g } else { -g }).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pi_is_linear(a in curve(), b in curve(), ca in small_poly(), cb in small_poly(), p in 1i64..=3) {
        let p = param(p);
        let sa = TorusSkein::term(a.0, a.1, ca.clone());
        let sb = TorusSkein::term(b.0, b.1, cb.clone());
        let lhs = pi_element(&(&sa + &sb), p).unwrap();
        let rhs = &pi_element(&sa, p).unwrap() + &pi_element(&sb, p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_is_linear_and_lands_in_basis(j in 0u32..5, n in 0u32..6, m in 0u32..6, c in small_poly(), p in 1i64..=3) {
        let p = param(p);
        let f = FreeXY::monomial(j, n, c.clone());
        let g = FreeXY::monomial(1, m, LaurentPoly::one());
        let r = km_reduce(&(&f + &g), p);
        prop_assert_eq!(&r, &(&km_reduce(&f, p) + &km_reduce(&g, p)));
        prop_assert!(r.terms().all(|((_, n), _)| n as i64 <= p.get()));
        let _: &KMElement = &r;
    }

    #[test]
    fn markov_and_reidemeister_ii(w in word(4, 7), pos in 0usize..8, g in 1i32..4, s in any::<bool>()) {
        let k = w.strands();
        let base = braid_bracket(&w).unwrap();
        let sign = if s { 1 } else { -1 };
        let mut stab = w.letters().to_vec();
        stab.push(sign * k as i32);
        let stabbed = braid_bracket(&BraidWord::new(k + 1, stab).unwrap()).unwrap();
        prop_assert_eq!(stabbed, &LaurentPoly::monomial(-1, 3 * sign as i64) * &base);

        let g = (g - 1) % (k as i32 - 1) + 1;
        let mut letters = w.letters().to_vec();
        let at = pos.min(letters.len());
        letters.splice(at..at, [g, -g]);
        prop_assert_eq!(braid_bracket(&BraidWord::new(k, letters).unwrap()).unwrap(), base);
    }

    #[test]
    fn bracket_is_a_conjugation_invariant(w in word(4, 8), g in 1i32..4, s in any::<bool>()) {
        let k = w.strands();
        let g = ((g - 1) % (k as i32 - 1) + 1) * if s { 1 } else { -1 };
        let mut letters = vec![g];
        letters.extend_from_slice(w.letters());
        letters.push(-g);
        prop_assert_eq!(
            braid_bracket(&BraidWord::new(k, letters).unwrap()).unwrap(),
            braid_bracket(&w).unwrap()
        );
    }
}
