//! Cactus groups `J_n`.
//!
//! Elements are represented by words in the interval generators `s_{p,q}`.
//! Reading the strand diagram of a word gives a Gauss word (the labels
//! meeting at each crossing) and a permutation. The Gauss word determines
//! the element, so equality is decided in the right-angled Coxeter group
//! `D_n`. Reduction and canonical forms are carried out directly on cactus
//! words with exchange moves, which mirror commutations of Gauss letters
//! position by position.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_strands, Error, Result};
use crate::perm::{LabelSet, Permutation};
use crate::racg::{self, GaussLetter, GaussWord};

/// Default power bound for [`order`].
pub const DEFAULT_ORDER_BOUND: usize = 64;

/// The generator `s_{p,q}`, `1 ≤ p < q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct CactusLetter {
    p: u8,
    q: u8,
}

impl CactusLetter {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if !(1 <= p && p < q && q <= crate::MAX_STRANDS) {
            return Err(Error::Bounds { p, q, n: crate::MAX_STRANDS });
        }
        Ok(CactusLetter { p: p as u8, q: q as u8 })
    }

    pub fn p(self) -> usize {
        self.p as usize
    }

    pub fn q(self) -> usize {
        self.q as usize
    }

    pub fn leaf(self) -> usize {
        self.q() - self.p() + 1
    }

    pub fn fits(self, n: usize) -> bool {
        self.q() <= n
    }

    pub fn is_disjoint(self, other: CactusLetter) -> bool {
        self.q < other.p || other.q < self.p
    }

    /// `self ⊆ other` as intervals.
    pub fn is_within(self, other: CactusLetter) -> bool {
        other.p <= self.p && self.q <= other.q
    }

    /// Mirror image of `self` inside `outer`: `[m,r] ↦ [p+q−r, p+q−m]`.
    pub fn reflect_in(self, outer: CactusLetter) -> CactusLetter {
        debug_assert!(self.is_within(outer));
        let s = outer.p + outer.q;
        CactusLetter { p: s - self.q, q: s - self.p }
    }

    pub fn positions(self) -> LabelSet {
        LabelSet::interval(self.p(), self.q())
    }
}

impl TryFrom<(usize, usize)> for CactusLetter {
    type Error = Error;

    fn try_from((p, q): (usize, usize)) -> Result<Self> {
        CactusLetter::new(p, q)
    }
}

impl From<CactusLetter> for (usize, usize) {
    fn from(l: CactusLetter) -> Self {
        (l.p(), l.q())
    }
}

impl fmt::Debug for CactusLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.p, self.q)
    }
}

impl fmt::Display for CactusLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A word in the generators of `J_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CactusWord {
    n: usize,
    letters: Vec<CactusLetter>,
}

impl CactusWord {
    pub fn new(n: usize, letters: Vec<CactusLetter>) -> Result<Self> {
        check_strands(n)?;
        if let Some(l) = letters.iter().find(|l| !l.fits(n)) {
            return Err(Error::Bounds { p: l.p(), q: l.q(), n });
        }
        Ok(CactusWord { n, letters })
    }

    /// Convenience constructor from `(p, q)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let letters = pairs
            .iter()
            .map(|&(p, q)| {
                if q > n {
                    Err(Error::Bounds { p, q, n })
                } else {
                    CactusLetter::new(p, q).map_err(|_| Error::Bounds { p, q, n })
                }
            })
            .collect::<Result<_>>()?;
        CactusWord::new(n, letters)
    }

    pub fn empty(n: usize) -> Result<Self> {
        CactusWord::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[CactusLetter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<CactusLetter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &CactusWord) -> Result<CactusWord> {
        same_size(self, other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(CactusWord { n: self.n, letters })
    }

    /// The inverse element: generators are involutions, so reverse the word.
    pub fn inverse(&self) -> CactusWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        CactusWord { n: self.n, letters }
    }

    pub fn pow(&self, k: usize) -> CactusWord {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        CactusWord { n: self.n, letters }
    }
}

fn same_size(u: &CactusWord, v: &CactusWord) -> Result<()> {
    if u.n != v.n {
        Err(Error::SizeMismatch(u.n, v.n))
    } else {
        Ok(())
    }
}

/// Gauss word and permutation read off a strand diagram.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReadResult {
    pub gauss: GaussWord,
    pub perm: Permutation,
}

/// Simulates the diagram of `w`: the strand labels sit at positions
/// `1..n`; each letter records the labels on its interval, then reverses
/// them.
pub fn read_diagram(w: &CactusWord) -> ReadResult {
    let n = w.n;
    // labels[pos] = label (0-based) of the strand currently at pos
    let mut labels: Vec<usize> = (0..n).collect();
    let mut gauss = GaussWord::empty(n);
    for l in &w.letters {
        let block = &mut labels[l.p() - 1..l.q()];
        let set = LabelSet::from_labels(block.iter().map(|&x| x + 1)).expect("labels are distinct");
        gauss.push(GaussLetter::new(set).expect("interval has at least two labels"));
        block.reverse();
    }
    let mut images = vec![0usize; n];
    for (pos, &label) in labels.iter().enumerate() {
        images[label] = pos + 1;
    }
    ReadResult { gauss, perm: Permutation::from_one_line(&images).expect("bijection") }
}

/// The permutation `s(w)`.
pub fn permutation(w: &CactusWord) -> Permutation {
    let mut perm = Permutation::identity(w.n);
    for l in &w.letters {
        perm.then_reverse(l.p(), l.q());
    }
    perm
}

/// Rewrites `x·y` as `y'·x'` using a commutation or commutation-conjugation
/// relation. `None` when the intervals overlap without nesting. Equal
/// letters fall under the nested case and come back unchanged; callers
/// cancel them instead.
pub fn exchange_left(x: CactusLetter, y: CactusLetter) -> Option<(CactusLetter, CactusLetter)> {
    if x.is_disjoint(y) {
        Some((y, x))
    } else if y.is_within(x) {
        Some((y.reflect_in(x), x))
    } else if x.is_within(y) {
        Some((y, x.reflect_in(y)))
    } else {
        None
    }
}

/// Walks `y`, placed right after `prefix`, leftward. Returns the index of
/// the letter it annihilates with, the rewritten letters it passed over,
/// and every letter value that appeared during the walk.
struct Walk {
    partner: Option<usize>,
    passed: Vec<CactusLetter>,
    front: Option<CactusLetter>,
}

fn walk_left(prefix: &[CactusLetter], y: CactusLetter, stop_at_equal: bool) -> Walk {
    let mut cur = y;
    let mut passed = Vec::new();
    for k in (0..prefix.len()).rev() {
        let x = prefix[k];
        if stop_at_equal && x == cur {
            passed.reverse();
            return Walk { partner: Some(k), passed, front: None };
        }
        match exchange_left(x, cur) {
            Some((y2, x2)) => {
                passed.push(x2);
                cur = y2;
            }
            None => return Walk { partner: None, passed: Vec::new(), front: None },
        }
    }
    passed.reverse();
    Walk { partner: None, passed, front: Some(cur) }
}

/// Reduction by repeated exchange-and-annihilate. The result is irreducible
/// and its length is the geodesic length of the element.
pub fn reduce(w: &CactusWord) -> CactusWord {
    let mut out = Vec::with_capacity(w.len());
    for &y in &w.letters {
        push_reduced(&mut out, y);
    }
    CactusWord { n: w.n, letters: out }
}

// Appends `y` to an irreducible word, keeping it irreducible.
fn push_reduced(out: &mut Vec<CactusLetter>, y: CactusLetter) {
    let walk = walk_left(out, y, true);
    match walk.partner {
        Some(k) => {
            out.splice(k + 1.., walk.passed);
            out.remove(k);
        }
        None => out.push(y),
    }
}

/// Like [`reduce`], also returning every letter value that occurred in any
/// intermediate word.
pub fn reduce_traced(w: &CactusWord) -> (CactusWord, BTreeSet<CactusLetter>) {
    let mut out: Vec<CactusLetter> = Vec::with_capacity(w.len());
    let mut trace: BTreeSet<CactusLetter> = w.letters.iter().copied().collect();
    for &y in &w.letters {
        let walk = walk_left(&out, y, true);
        match walk.partner {
            Some(k) => {
                trace.extend(walk.passed.iter().copied());
                // intermediate words: y' crossing each letter leaves the
                // rewritten letters behind it
                let mut cur = y;
                for j in (k + 1..out.len()).rev() {
                    if let Some((y2, _)) = exchange_left(out[j], cur) {
                        trace.insert(y2);
                        cur = y2;
                    }
                }
                out.splice(k + 1.., walk.passed);
                out.remove(k);
            }
            None => out.push(y),
        }
    }
    (CactusWord { n: w.n, letters: out }, trace)
}

/// Pairs `(i, j)` such that letter `j` can be exchanged leftward onto
/// letter `i` and annihilated with it.
pub fn cancellable_pairs(w: &CactusWord) -> Vec<(usize, usize)> {
    (0..w.len())
        .filter_map(|j| walk_left(&w.letters[..j], w.letters[j], true).partner.map(|i| (i, j)))
        .collect()
}

/// Performs the annihilation of the pair `(i, j)` found by
/// [`cancellable_pairs`].
pub fn cancel_pair(w: &CactusWord, i: usize, j: usize) -> Option<CactusWord> {
    if i >= j || j >= w.len() {
        return None;
    }
    let walk = walk_left(&w.letters[..j], w.letters[j], true);
    if walk.partner != Some(i) {
        return None;
    }
    let mut letters = w.letters[..i].to_vec();
    letters.extend(walk.passed);
    letters.extend_from_slice(&w.letters[j + 1..]);
    Some(CactusWord { n: w.n, letters })
}

/// Canonical representative: reduce, then repeatedly bring to the front the
/// least letter (in `(p,q)` order) that can be exchanged through the
/// current prefix.
pub fn canonical(w: &CactusWord) -> CactusWord {
    let mut rest = reduce(w).letters;
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<(CactusLetter, usize, Vec<CactusLetter>)> = None;
        for j in 0..rest.len() {
            let walk = walk_left(&rest[..j], rest[j], false);
            if let Some(front) = walk.front {
                if best.as_ref().is_none_or(|(b, _, _)| front < *b) {
                    best = Some((front, j, walk.passed));
                }
            }
        }
        let (front, j, passed) = best.expect("the first letter is always movable");
        out.push(front);
        let mut next = passed;
        next.extend_from_slice(&rest[j + 1..]);
        rest = next;
    }
    CactusWord { n: w.n, letters: out }
}

/// Decides equality in `J_n` through the Gauss diagram group.
pub fn equal(u: &CactusWord, v: &CactusWord) -> Result<bool> {
    same_size(u, v)?;
    let du = read_diagram(u).gauss;
    let dv = read_diagram(v).gauss;
    Ok(racg::racg_canonical(&du) == racg::racg_canonical(&dv))
}

pub fn is_trivial(w: &CactusWord) -> bool {
    racg::racg_reduce(&read_diagram(w).gauss).is_empty()
}

pub fn geodesic_length(w: &CactusWord) -> usize {
    reduce(w).len()
}

/// Smallest `k ≤ bound` with `c^k = 1`, if any.
pub fn order(c: &CactusWord, bound: usize) -> Option<usize> {
    let c = reduce(c);
    let mut power = Vec::new();
    for k in 1..=bound {
        for &y in &c.letters {
            push_reduced(&mut power, y);
        }
        if power.is_empty() {
            return Some(k);
        }
    }
    None
}

/// `t_k = s_{1,2} s_{1,4} ⋯ s_{1,2^k}` in `J_{2^k}`, an element of order
/// `2^k`.
pub fn torsion_witness(k: usize) -> Result<CactusWord> {
    if k == 0 || (1usize << k) > crate::MAX_STRANDS {
        return Err(Error::InvalidParameter(format!("torsion witness index {k}")));
    }
    let n = 1usize << k;
    let letters = (1..=k).map(|j| CactusLetter::new(1, 1 << j)).collect::<Result<_>>()?;
    CactusWord::new(n, letters)
}

pub fn is_pure(c: &CactusWord) -> bool {
    permutation(c).is_identity()
}

pub fn commute(u: &CactusWord, v: &CactusWord) -> Result<bool> {
    equal(&u.concat(v)?, &v.concat(u)?)
}

/// `g · c · g⁻¹`.
pub fn conjugate(g: &CactusWord, c: &CactusWord) -> Result<CactusWord> {
    g.concat(c)?.concat(&g.inverse())
}

/// Reinterprets a word over `m ≥ n` strands.
pub fn pad(w: &CactusWord, m: usize) -> Result<CactusWord> {
    if m < w.n {
        return Err(Error::InvalidParameter(format!("cannot pad {} strands to {m}", w.n)));
    }
    CactusWord::new(m, w.letters.clone())
}

/// Product in `D_n ⋊ S_n`: `(t1, σ1)(t2, σ2) = (t1 · σ1⁻¹(t2), σ1σ2)`.
/// Agrees with reading the concatenated word.
pub fn cocycle_product(a: &ReadResult, b: &ReadResult) -> Result<ReadResult> {
    if a.perm.n() != b.perm.n() || a.gauss.n() != b.gauss.n() {
        return Err(Error::SizeMismatch(a.perm.n(), b.perm.n()));
    }
    let inv = a.perm.inverse();
    let mut gauss = a.gauss.clone();
    for l in b.gauss.letters() {
        gauss.push(GaussLetter::new(inv.apply_set(l.labels())).expect("size preserved"));
    }
    Ok(ReadResult { gauss, perm: a.perm.compose(&b.perm)? })
}

/// A single rewriting step with one of the defining relations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    /// Delete the equal adjacent letters at `i, i+1`.
    Annihilate(usize),
    /// Insert `l l` before position `i`.
    Create(usize, CactusLetter),
    /// Rewrite the adjacent pair at `i, i+1` by commutation (conjugation).
    Exchange(usize),
}

/// Applies a move; `None` if it does not apply at that position.
pub fn apply_move(w: &CactusWord, mv: Move) -> Option<CactusWord> {
    let mut letters = w.letters.clone();
    match mv {
        Move::Annihilate(i) => {
            if i + 1 >= letters.len() || letters[i] != letters[i + 1] {
                return None;
            }
            letters.drain(i..i + 2);
        }
        Move::Create(i, l) => {
            if i > letters.len() || !l.fits(w.n) {
                return None;
            }
            letters.splice(i..i, [l, l]);
        }
        Move::Exchange(i) => {
            if i + 1 >= letters.len() || letters[i] == letters[i + 1] {
                return None;
            }
            let (y, x) = exchange_left(letters[i], letters[i + 1])?;
            letters[i] = y;
            letters[i + 1] = x;
        }
    }
    Some(CactusWord { n: w.n, letters })
}

/// All generators of `J_n` in `(p,q)` order.
pub fn generators(n: usize) -> Vec<CactusLetter> {
    let mut out = Vec::new();
    for p in 1..n {
        for q in p + 1..=n {
            out.push(CactusLetter { p: p as u8, q: q as u8 });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, pairs: &[(usize, usize)]) -> CactusWord {
        CactusWord::from_pairs(n, pairs).unwrap()
    }

    fn s(p: usize, q: usize) -> CactusLetter {
        CactusLetter::new(p, q).unwrap()
    }

    fn t(labels: &[usize]) -> GaussLetter {
        GaussLetter::from_labels(labels.iter().copied()).unwrap()
    }

    #[test]
    fn reads_the_worked_diagram() {
        let r = read_diagram(&w(4, &[(1, 2), (2, 4), (1, 3)]));
        assert_eq!(r.gauss.letters(), &[t(&[1, 2]), t(&[1, 3, 4]), t(&[2, 3, 4])]);
        assert_eq!(r.perm.one_line(), vec![4, 3, 1, 2]);

        let e = read_diagram(&CactusWord::empty(4).unwrap());
        assert!(e.gauss.is_empty());
        assert!(e.perm.is_identity());

        let r = read_diagram(&w(4, &[(1, 4), (1, 3), (1, 2), (2, 3), (1, 2)]));
        assert_eq!(
            r.gauss.letters(),
            &[t(&[1, 2, 3, 4]), t(&[2, 3, 4]), t(&[2, 3]), t(&[2, 4]), t(&[3, 4])]
        );
        assert_eq!(r.perm.one_line(), vec![4, 3, 2, 1]);

        let r = read_diagram(&w(4, &[(1, 3), (1, 2), (2, 3), (1, 2), (1, 4)]));
        assert_eq!(
            r.gauss.letters(),
            &[t(&[1, 2, 3]), t(&[2, 3]), t(&[1, 3]), t(&[1, 2]), t(&[1, 2, 3, 4])]
        );
    }

    #[test]
    fn permutation_matches_reading() {
        let x = w(5, &[(2, 5), (1, 3), (3, 4), (1, 5)]);
        assert_eq!(permutation(&x), read_diagram(&x).perm);
    }

    #[test]
    fn exchange_cases() {
        assert_eq!(exchange_left(s(1, 4), s(1, 2)), Some((s(3, 4), s(1, 4))));
        assert_eq!(exchange_left(s(1, 2), s(3, 4)), Some((s(3, 4), s(1, 2))));
        assert_eq!(exchange_left(s(1, 3), s(2, 4)), None);
        assert_eq!(exchange_left(s(1, 2), s(1, 4)), Some((s(1, 4), s(3, 4))));
        // exchanging is an involution on adjacent pairs
        let (y, x) = exchange_left(s(2, 6), s(3, 4)).unwrap();
        assert_eq!(exchange_left(y, x), Some((s(2, 6), s(3, 4))));
    }

    #[test]
    fn reduction_examples() {
        assert!(reduce(&w(2, &[(1, 2), (1, 2)])).is_empty());
        assert!(reduce(&w(4, &[(1, 4), (1, 2), (1, 4), (3, 4)])).is_empty());
        let braid = w(3, &[(1, 2), (2, 3), (1, 2)]);
        assert_eq!(reduce(&braid), braid);
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical(&w(4, &[(3, 4), (1, 2)])), w(4, &[(1, 2), (3, 4)]));
        assert_eq!(canonical(&w(4, &[(1, 4), (1, 2)])), w(4, &[(1, 4), (1, 2)]));
        assert_eq!(canonical(&w(4, &[(3, 4), (1, 4)])), w(4, &[(1, 4), (1, 2)]));
        assert!(canonical(&CactusWord::empty(3).unwrap()).is_empty());
    }

    #[test]
    fn equality_examples() {
        let a = w(3, &[(1, 2), (2, 3), (1, 2)]);
        let b = w(3, &[(2, 3), (1, 2), (2, 3)]);
        assert!(!equal(&a, &b).unwrap());
        assert!(equal(&w(4, &[(1, 4), (1, 2), (1, 4)]), &w(4, &[(3, 4)])).unwrap());

        let c = w(6, &[(3, 4), (1, 2), (1, 4), (3, 6)]);
        let g = w(6, &[(3, 4), (5, 6)]);
        let conj = conjugate(&g, &c).unwrap();
        assert_eq!(conj.letters()[..2], [s(3, 4), s(5, 6)]);
        assert!(equal(&conj, &w(6, &[(1, 4), (3, 6)])).unwrap());
        assert_eq!(geodesic_length(&conj), 2);

        assert!(equal(&a, &w(4, &[])).is_err());
    }

    #[test]
    fn geodesic_lengths() {
        assert_eq!(geodesic_length(&w(3, &[(1, 2), (1, 2), (1, 3)])), 1);
        assert_eq!(geodesic_length(&w(3, &[(1, 2), (2, 3), (1, 2)])), 3);
        assert_eq!(geodesic_length(&w(3, &[])), 0);
    }

    #[test]
    fn orders() {
        assert_eq!(order(&w(2, &[(1, 2)]), 64), Some(2));
        assert_eq!(order(&w(4, &[(1, 2), (1, 4)]), 64), Some(4));
        assert_eq!(order(&w(3, &[(1, 2), (1, 3)]), 64), None);
        assert_eq!(order(&w(3, &[]), 5), Some(1));
    }

    #[test]
    fn torsion_witnesses() {
        assert_eq!(torsion_witness(1).unwrap(), w(2, &[(1, 2)]));
        assert_eq!(torsion_witness(2).unwrap(), w(4, &[(1, 2), (1, 4)]));
        assert_eq!(torsion_witness(3).unwrap(), w(8, &[(1, 2), (1, 4), (1, 8)]));
        assert!(torsion_witness(0).is_err());
        assert!(torsion_witness(7).is_err());
    }

    #[test]
    fn purity_and_centralizer_in_j3() {
        let b = w(3, &[(1, 2), (1, 3)]);
        let a = b.pow(3);
        assert!(is_pure(&a));
        assert!(!is_pure(&b));
        assert!(commute(&b, &a).unwrap());
        assert!(equal(&a, &w(3, &[(1, 2), (2, 3), (1, 2), (1, 3)])).unwrap());
    }

    #[test]
    fn cocycle_examples() {
        let u = w(4, &[(1, 2)]);
        let v = w(4, &[(2, 4), (1, 3)]);
        let prod = cocycle_product(&read_diagram(&u), &read_diagram(&v)).unwrap();
        assert_eq!(prod, read_diagram(&u.concat(&v).unwrap()));
    }

    #[test]
    fn padding() {
        let x = w(3, &[(1, 3), (1, 2)]);
        let y = pad(&x, 5).unwrap();
        assert_eq!(y.n(), 5);
        assert_eq!(y.letters(), x.letters());
        assert!(pad(&x, 2).is_err());
        // J_3 sits inside J_5
        assert!(!equal(&pad(&w(3, &[(1, 2), (2, 3), (1, 2)]), 5).unwrap(),
            &pad(&w(3, &[(2, 3), (1, 2), (2, 3)]), 5).unwrap()).unwrap());
    }

    #[test]
    fn moves() {
        let x = w(4, &[(1, 4), (1, 2)]);
        assert_eq!(apply_move(&x, Move::Exchange(0)), Some(w(4, &[(3, 4), (1, 4)])));
        assert_eq!(apply_move(&x, Move::Annihilate(0)), None);
        let y = apply_move(&x, Move::Create(1, s(2, 3))).unwrap();
        assert_eq!(y, w(4, &[(1, 4), (2, 3), (2, 3), (1, 2)]));
        assert_eq!(apply_move(&y, Move::Annihilate(1)), Some(x.clone()));
        assert_eq!(apply_move(&w(4, &[(1, 3), (2, 4)]), Move::Exchange(0)), None);
    }

    #[test]
    fn trace_records_reflections() {
        let (r, trace) = reduce_traced(&w(4, &[(1, 4), (1, 2), (1, 4), (3, 4)]));
        assert!(r.is_empty());
        assert!(trace.contains(&s(3, 4)));
        assert!(trace.contains(&s(1, 2)));
    }

    #[test]
    fn pair_cancellation() {
        let x = w(4, &[(1, 2), (3, 4), (1, 4), (1, 2), (1, 4)]);
        let pairs = cancellable_pairs(&x);
        assert!(pairs.contains(&(2, 4)));
        let y = cancel_pair(&x, 2, 4).unwrap();
        assert!(equal(&x, &y).unwrap());
        assert_eq!(y.len(), 3);
    }

    #[test]
    fn bad_letters() {
        assert!(CactusLetter::new(2, 2).is_err());
        assert!(CactusWord::from_pairs(3, &[(1, 4)]).is_err());
        assert!(CactusWord::new(1, vec![]).is_err());
    }
}
