//! Kauffman bracket of braid closures, evaluated through Temperley–Lieb
//! planar matchings, plus cabling and Chebyshev coloring.
//!
//! Conventions: `sigma_i -> t * id + t^-1 * e_i`, `sigma_i^-1 -> t^-1 * id + t * e_i`,
//! every closed loop contributes `d = -t^2 - t^-2`, and the empty link is 1.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chebyshev::cheb_s;
use crate::error::{Error, Result};
use crate::knot_module::TorusKnotParam;
use crate::laurent::LaurentPoly;

/// Largest number of strands the matching-based evaluator accepts.
pub const MAX_TL_STRANDS: usize = 8;
/// Largest crossing count accepted by [`naive_state_sum`].
pub const MAX_NAIVE_CROSSINGS: usize = 14;

/// Loop value `-t^2 - t^-2`.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// A braid word on `strands` strands; `+i` is `sigma_i`, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        if let Some(bad) = letters.iter().find(|g| **g == 0 || g.unsigned_abs() as usize >= strands) {
            return Err(Error::InvalidBraid(format!(
                "generator {bad} is not in ±[1, {}]",
                strands - 1
            )));
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn crossings(&self) -> usize {
        self.letters.len()
    }

    /// Blackboard writhe, assuming all strands oriented the same way.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }

    /// Parses a comma- or space-separated list such as `"1,-2,1"`.
    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        Self::new(strands, parse_letters(s)?)
    }

    /// Like [`BraidWord::parse`], on the fewest strands the letters allow.
    pub fn parse_minimal(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        let strands = letters.iter().map(|g| g.unsigned_abs() as usize + 1).max().unwrap_or(1);
        Self::new(strands, letters)
    }
}

fn parse_letters(s: &str) -> Result<Vec<i32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| i32::from_str(tok).map_err(|_| Error::InvalidBraid(format!("cannot parse generator {tok:?}"))))
        .collect()
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}] on {} strands", letters.join(","), self.strands)
    }
}

/// A planar perfect matching of `2k` boundary points: points `0..k` on top,
/// `k..2k` on the bottom, `partner[i]` is the point joined to `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching(Box<[u16]>);

impl Matching {
    pub fn identity(k: usize) -> Self {
        Matching((0..2 * k).map(|i| ((i + k) % (2 * k)) as u16).collect())
    }

    pub fn partner(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Non-crossing in the boundary order top `0..k` left to right, then
    /// bottom `2k-1..k` right to left.
    pub fn is_planar(&self) -> bool {
        let n = self.0.len();
        let k = n / 2;
        let pos = |i: usize| if i < k { i } else { n - 1 - (i - k) };
        let chords: Vec<(usize, usize)> = (0..n)
            .filter(|&i| i < self.partner(i))
            .map(|i| {
                let (a, b) = (pos(i), pos(self.partner(i)));
                (a.min(b), a.max(b))
            })
            .collect();
        chords.iter().all(|&(a, b)| {
            chords
                .iter()
                .all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    /// Stacks `e_i` (0-based `i`) on the bottom. Returns the new matching and
    /// whether a closed loop was created.
    fn apply_cup_cap(&self, i: usize) -> (Matching, bool) {
        let k = self.0.len() / 2;
        let (bi, bj) = (k + i, k + i + 1);
        let mut m = self.0.clone();
        if self.partner(bi) == bj {
            return (Matching(m), true);
        }
        let (a, c) = (self.partner(bi), self.partner(bj));
        m[a] = c as u16;
        m[c] = a as u16;
        m[bi] = bj as u16;
        m[bj] = bi as u16;
        (Matching(m), false)
    }

    /// Number of loops in the trace closure (top `j` joined to bottom `k+j`).
    fn closure_loops(&self) -> usize {
        let n = self.0.len();
        let k = n / 2;
        let mut seen = vec![false; n];
        let mut loops = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                let y = self.partner(x);
                seen[y] = true;
                x = if y < k { y + k } else { y - k };
            }
        }
        loops
    }
}

/// A linear combination of planar matchings on `2 * strands` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLElement {
    strands: usize,
    terms: HashMap<Matching, LaurentPoly>,
}

impl TLElement {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            terms: HashMap::from([(Matching::identity(strands), LaurentPoly::one())]),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    /// Multiplies on the bottom by the resolved crossing `sigma_i^{±1}`.
    pub fn apply_generator(&self, g: i32) -> Self {
        let i = g.unsigned_abs() as usize - 1;
        let (id_exp, cap_exp) = if g > 0 { (1, -1) } else { (-1, 1) };
        let d = loop_value();
        let mut out: HashMap<Matching, LaurentPoly> = HashMap::with_capacity(self.terms.len() * 2);
        for (m, c) in &self.terms {
            *out.entry(m.clone()).or_default() += c.shift(id_exp);
            let (m2, closed) = m.apply_cup_cap(i);
            let c2 = if closed { &c.shift(cap_exp) * &d } else { c.shift(cap_exp) };
            *out.entry(m2).or_default() += c2;
        }
        out.retain(|_, c| !c.is_zero());
        Self {
            strands: self.strands,
            terms: out,
        }
    }

    /// Bracket of the trace closure.
    pub fn closure(&self) -> LaurentPoly {
        let d = loop_value();
        let mut pows = vec![LaurentPoly::one()];
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let loops = m.closure_loops();
            while pows.len() <= loops {
                let next = pows.last().unwrap() * &d;
                pows.push(next);
            }
            out += c * &pows[loops];
        }
        out
    }
}

/// Kauffman bracket (blackboard framing) of the closure of `w`.
pub fn braid_bracket(w: &BraidWord) -> Result<LaurentPoly> {
    if w.strands > MAX_TL_STRANDS {
        return Err(Error::SizeLimit(format!(
            "{} strands exceeds the Temperley-Lieb limit of {MAX_TL_STRANDS}",
            w.strands
        )));
    }
    let tl = w
        .letters
        .iter()
        .fold(TLElement::identity(w.strands), |acc, &g| acc.apply_generator(g));
    Ok(tl.closure())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

/// Bracket of the closure of `w` by summing over all `2^c` smoothings.
pub fn naive_state_sum(w: &BraidWord) -> Result<LaurentPoly> {
    let c = w.crossings();
    if c > MAX_NAIVE_CROSSINGS {
        return Err(Error::SizeLimit(format!(
            "{c} crossings exceeds the state-sum limit of {MAX_NAIVE_CROSSINGS}"
        )));
    }
    let k = w.strands;
    let point = |level: usize, pos: usize| level * k + pos;
    let d = loop_value();
    let mut total = LaurentPoly::zero();
    let mut parent = vec![0; (c + 1) * k];
    for state in 0u32..(1 << c) {
        parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
        let mut exp = 0i64;
        for (j, &g) in w.letters.iter().enumerate() {
            let i = g.unsigned_abs() as usize - 1;
            let cup_cap = state >> j & 1 == 1;
            exp += match (g > 0, cup_cap) {
                (true, false) | (false, true) => 1,
                _ => -1,
            };
            for m in 0..k {
                if m != i && m != i + 1 {
                    union(&mut parent, point(j, m), point(j + 1, m));
                }
            }
            if cup_cap {
                union(&mut parent, point(j, i), point(j, i + 1));
                union(&mut parent, point(j + 1, i), point(j + 1, i + 1));
            } else {
                union(&mut parent, point(j, i), point(j + 1, i));
                union(&mut parent, point(j, i + 1), point(j + 1, i + 1));
            }
        }
        for m in 0..k {
            union(&mut parent, point(c, m), point(0, m));
        }
        let loops = (0..parent.len()).filter(|&x| find(&mut parent, x) == x).count();
        total += &d.pow(loops as u32) * &LaurentPoly::t_pow(exp);
    }
    Ok(total)
}

/// The `j`-parallel blackboard cable of `w`.
pub fn cable(w: &BraidWord, j: usize) -> BraidWord {
    assert!(j >= 1, "cable multiplicity must be positive");
    let j32 = j as i32;
    let mut letters = Vec::with_capacity(w.letters.len() * j * j);
    for &g in &w.letters {
        let (i, s) = (g.abs(), g.signum());
        for a in 0..j32 {
            for b in 0..j32 {
                letters.push(s * (i * j32 - a + b));
            }
        }
    }
    BraidWord {
        strands: w.strands * j,
        letters,
    }
}

/// Which mirror image of the torus knot the oracle evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    /// Closure of `sigma_1^{2p+1}`.
    Positive,
    /// Closure of `sigma_1^{-(2p+1)}`.
    Negative,
}

impl Chirality {
    pub fn torus_braid(self, p: TorusKnotParam) -> BraidWord {
        let s = match self {
            Chirality::Positive => 1,
            Chirality::Negative => -1,
        };
        BraidWord {
            strands: 2,
            letters: vec![s; 2 * p.get() as usize + 1],
        }
    }
}

/// The chirality whose 0-framed colored brackets satisfy the recursion in
/// [`crate::jones`]; fixed by comparing `kappa_1` at `p = 1` (see
/// [`select_chirality`]).
pub const FROZEN_CHIRALITY: Chirality = Chirality::Negative;

/// Framing eigenvalue of the `S_n` coloring for one positive kink: `(-1)^n t^{n^2+2n}`.
pub fn twist_eigenvalue(n: u32) -> LaurentPoly {
    let n = n as i64;
    LaurentPoly::monomial(if n % 2 == 0 { 1 } else { -1 }, n * n + 2 * n)
}

/// 0-framed `S_n`-colored bracket of an arbitrary knot braid.
pub fn colored_bracket_of(w: &BraidWord, n: u32) -> Result<LaurentPoly> {
    if w.strands * n as usize > MAX_TL_STRANDS {
        return Err(Error::SizeLimit(format!(
            "color {n} on {} strands needs {} cable strands (limit {MAX_TL_STRANDS})",
            w.strands,
            w.strands * n as usize
        )));
    }
    let s_n = cheb_s(n as i64);
    let parts: Vec<(u32, LaurentPoly)> = s_n.terms().map(|(j, c)| (j, c.clone())).collect();
    let framed = parts
        .into_par_iter()
        .map(|(j, c)| -> Result<LaurentPoly> {
            if j == 0 {
                return Ok(c);
            }
            Ok(&braid_bracket(&cable(w, j as usize))? * &c)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum::<LaurentPoly>();
    // undo the blackboard framing: mu_n^{-w} = (-1)^{nw} t^{-w(n^2+2n)}
    let wr = w.writhe();
    let n = n as i64;
    let sign = if (n * wr).rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(framed.scale(sign, -wr * (n * n + 2 * n)))
}

/// 0-framed `S_n`-colored bracket of the `(2,2p+1)` torus knot in the given
/// chirality.
pub fn colored_bracket_with(p: TorusKnotParam, n: u32, chirality: Chirality) -> Result<LaurentPoly> {
    colored_bracket_of(&chirality.torus_braid(p), n)
}

/// [`colored_bracket_with`] in the frozen chirality.
pub fn colored_bracket(p: TorusKnotParam, n: u32) -> Result<LaurentPoly> {
    colored_bracket_with(p, n, FROZEN_CHIRALITY)
}

/// The chirality whose `p = 1`, `n = 1` bracket equals `kappa_1`, if any.
pub fn select_chirality(kappa_1: &LaurentPoly) -> Result<Option<Chirality>> {
    let p = TorusKnotParam::new(1)?;
    for c in [Chirality::Positive, Chirality::Negative] {
        if &colored_bracket_with(p, 1, c)? == kappa_1 {
            return Ok(Some(c));
        }
    }
    Ok(None)
}
