//! Right-angled Coxeter rewriting.
//!
//! The engine works over any letter type with a symmetric commutation
//! predicate. Every letter is an involution; a word is reduced by pulling
//! two copies of a letter together through letters commuting with it and
//! cancelling them. Reduced words of the same element differ only by
//! commutations, so the lexicographically least linearization of the
//! commutation class is a normal form.

use std::collections::{BTreeMap, BinaryHeap};
use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_strands, Error, Result};
use crate::perm::LabelSet;

/// Symmetric commutation relation on letters.
pub trait Commutation<L> {
    fn commutes(&self, a: &L, b: &L) -> bool;
}

impl<L, F> Commutation<L> for F
where
    F: Fn(&L, &L) -> bool,
{
    fn commutes(&self, a: &L, b: &L) -> bool {
        self(a, b)
    }
}

/// Commutation in the Gauss diagram group: disjoint or nested label sets.
#[derive(Clone, Copy, Debug, Default)]
pub struct Nested;

impl Commutation<GaussLetter> for Nested {
    fn commutes(&self, a: &GaussLetter, b: &GaussLetter) -> bool {
        commutes(a, b)
    }
}

/// Commutation by disjointness only, as in the fixed-width groups.
#[derive(Clone, Copy, Debug, Default)]
pub struct Disjoint;

impl Commutation<GaussLetter> for Disjoint {
    fn commutes(&self, a: &GaussLetter, b: &GaussLetter) -> bool {
        a.0.is_disjoint(b.0)
    }
}

/// Reduces a word by commute-and-cancel until no pair can be removed.
///
/// Single left-to-right pass: each incoming letter looks back through the
/// letters it commutes with for an equal copy. Removing a letter from a
/// reduced prefix never unblocks another pair, since everything after the
/// removed copy commuted with it.
pub fn reduce<L, C>(word: &[L], rel: &C) -> Vec<L>
where
    L: Clone + Eq,
    C: Commutation<L> + ?Sized,
{
    let mut out: Vec<L> = Vec::with_capacity(word.len());
    for l in word {
        match partner(&out, l, rel) {
            Some(k) => {
                out.remove(k);
            }
            None => out.push(l.clone()),
        }
    }
    out
}

fn partner<L, C>(prefix: &[L], l: &L, rel: &C) -> Option<usize>
where
    L: Eq,
    C: Commutation<L> + ?Sized,
{
    for (k, m) in prefix.iter().enumerate().rev() {
        if m == l {
            return Some(k);
        }
        if !rel.commutes(m, l) {
            return None;
        }
    }
    None
}

/// All pairs `i < j` of equal letters whose copies can be brought together.
pub fn cancellable_pairs<L, C>(word: &[L], rel: &C) -> Vec<(usize, usize)>
where
    L: Eq,
    C: Commutation<L> + ?Sized,
{
    let mut pairs = Vec::new();
    for j in 0..word.len() {
        if let Some(i) = partner(&word[..j], &word[j], rel) {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Lexicographically least word commutation-equivalent to the reduced form.
pub fn normal_form<L, C>(word: &[L], rel: &C) -> Vec<L>
where
    L: Clone + Ord,
    C: Commutation<L> + ?Sized,
{
    let reduced = reduce(word, rel);
    least_linearization(&reduced, rel)
}

/// Greedy least linearization of the heap of a word: repeatedly emit the
/// smallest letter that commutes with everything still in front of it.
pub fn least_linearization<L, C>(word: &[L], rel: &C) -> Vec<L>
where
    L: Clone + Ord,
    C: Commutation<L> + ?Sized,
{
    let n = word.len();
    let mut successors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut blockers = vec![0usize; n];
    for j in 0..n {
        for i in 0..j {
            if word[i] == word[j] || !rel.commutes(&word[i], &word[j]) {
                successors[i].push(j);
                blockers[j] += 1;
            }
        }
    }
    let mut ready: BinaryHeap<Reverse<(L, usize)>> = (0..n)
        .filter(|&j| blockers[j] == 0)
        .map(|j| Reverse((word[j].clone(), j)))
        .collect();
    let mut out = Vec::with_capacity(n);
    while let Some(Reverse((l, i))) = ready.pop() {
        out.push(l);
        for &j in &successors[i] {
            blockers[j] -= 1;
            if blockers[j] == 0 {
                ready.push(Reverse((word[j].clone(), j)));
            }
        }
    }
    out
}

pub fn equivalent<L, C>(u: &[L], v: &[L], rel: &C) -> bool
where
    L: Clone + Ord,
    C: Commutation<L> + ?Sized,
{
    normal_form(u, rel) == normal_form(v, rel)
}

pub fn multiset<L, C>(word: &[L], rel: &C) -> BTreeMap<L, usize>
where
    L: Clone + Ord,
    C: Commutation<L> + ?Sized,
{
    let mut counts = BTreeMap::new();
    for l in reduce(word, rel) {
        *counts.entry(l).or_insert(0) += 1;
    }
    counts
}

/// A generator `τ_I` of the Gauss diagram group: a label set with at least
/// two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussLetter(LabelSet);

impl GaussLetter {
    pub fn new(labels: LabelSet) -> Result<Self> {
        if labels.len() < 2 {
            return Err(Error::LabelSet(format!("{labels:?} has fewer than two labels")));
        }
        Ok(GaussLetter(labels))
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Self> {
        Self::new(LabelSet::from_labels(labels)?)
    }

    pub fn labels(&self) -> LabelSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Debug for GaussLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{:?}", self.0)
    }
}

impl fmt::Display for GaussLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for GaussLetter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for GaussLetter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        GaussLetter::from_labels(labels).map_err(serde::de::Error::custom)
    }
}

/// `τ_I` and `τ_J` commute iff `I ∩ J = ∅`, `I ⊆ J` or `J ⊆ I`.
pub fn commutes(a: &GaussLetter, b: &GaussLetter) -> bool {
    let (i, j) = (a.0, b.0);
    i.is_disjoint(j) || i.is_subset(j) || j.is_subset(i)
}

/// A word in the Gauss diagram group `D_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GaussWord {
    n: usize,
    letters: Vec<GaussLetter>,
}

impl GaussWord {
    pub fn new(n: usize, letters: Vec<GaussLetter>) -> Result<Self> {
        check_strands(n)?;
        for l in &letters {
            if l.0.max().unwrap_or(0) > n {
                return Err(Error::LabelSet(format!("{l:?} exceeds {n} strands")));
            }
        }
        Ok(GaussWord { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        GaussWord { n, letters: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[GaussLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn push(&mut self, l: GaussLetter) {
        self.letters.push(l);
    }

    pub fn concat(&self, other: &GaussWord) -> Result<GaussWord> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(GaussWord { n: self.n, letters })
    }
}

pub fn racg_reduce(w: &GaussWord) -> GaussWord {
    GaussWord { n: w.n, letters: reduce(&w.letters, &Nested) }
}

pub fn racg_canonical(w: &GaussWord) -> GaussWord {
    GaussWord { n: w.n, letters: normal_form(&w.letters, &Nested) }
}

pub fn racg_equal(u: &GaussWord, v: &GaussWord) -> Result<bool> {
    if u.n != v.n {
        return Err(Error::SizeMismatch(u.n, v.n));
    }
    Ok(racg_canonical(u) == racg_canonical(v))
}

pub fn letter_multiset(w: &GaussWord) -> BTreeMap<GaussLetter, usize> {
    multiset(&w.letters, &Nested)
}

/// Canonical form in the width-`i` group, where letters commute only when
/// disjoint.
pub fn width_canonical(w: &GaussWord) -> GaussWord {
    GaussWord { n: w.n, letters: normal_form(&w.letters, &Disjoint) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(labels: &[usize]) -> GaussLetter {
        GaussLetter::from_labels(labels.iter().copied()).unwrap()
    }

    fn gw(n: usize, letters: &[&[usize]]) -> GaussWord {
        GaussWord::new(n, letters.iter().map(|l| t(l)).collect()).unwrap()
    }

    #[test]
    fn commutation_predicate() {
        assert!(commutes(&t(&[1, 2]), &t(&[3, 4])));
        assert!(commutes(&t(&[1, 2]), &t(&[1, 2, 3])));
        assert!(commutes(&t(&[1, 2, 3]), &t(&[1, 2])));
        assert!(!commutes(&t(&[1, 2]), &t(&[1, 3])));
        assert!(commutes(&t(&[1, 2]), &t(&[1, 2])));
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(racg_reduce(&gw(4, &[&[1, 2], &[3, 4], &[1, 2]])), gw(4, &[&[3, 4]]));
        let stuck = gw(4, &[&[1, 2], &[1, 3], &[1, 2]]);
        assert_eq!(racg_reduce(&stuck), stuck);
        assert!(racg_reduce(&gw(4, &[&[1, 2], &[1, 2]])).is_empty());
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(racg_canonical(&gw(3, &[&[1, 2, 3], &[1, 2]])), gw(3, &[&[1, 2], &[1, 2, 3]]));
        let chain = gw(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(racg_canonical(&chain), chain);
        assert!(racg_canonical(&GaussWord::empty(3)).is_empty());
    }

    #[test]
    fn equality_examples() {
        assert!(racg_equal(&gw(4, &[&[3, 4], &[1, 2]]), &gw(4, &[&[1, 2], &[3, 4]])).unwrap());
        assert!(!racg_equal(&gw(4, &[&[1, 2]]), &gw(4, &[&[1, 3]])).unwrap());
        for n in 3..=6 {
            let full: Vec<usize> = (1..=n).collect();
            let u = gw(n, &[&full, &[1, 2]]);
            let v = gw(n, &[&[1, 2], &full]);
            assert!(racg_equal(&u, &v).unwrap());
        }
        assert!(racg_equal(&GaussWord::empty(3), &GaussWord::empty(4)).is_err());
    }

    #[test]
    fn multiset_examples() {
        let m = letter_multiset(&gw(4, &[&[1, 2], &[3, 4], &[1, 2]]));
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![(t(&[3, 4]), 1)]);
        let w = gw(4, &[&[1, 2], &[1, 3], &[2, 4]]);
        assert_eq!(letter_multiset(&w).values().sum::<usize>(), 3);
        assert!(letter_multiset(&gw(4, &[&[1, 2], &[1, 2]])).is_empty());
    }

    #[test]
    fn width_group_ignores_nesting() {
        let w = gw(4, &[&[1, 2, 3], &[1, 2], &[1, 2, 3]]);
        assert_eq!(width_canonical(&w).len(), 3);
        assert!(racg_canonical(&w).len() == 1);
    }

    #[test]
    fn generic_engine_with_closure() {
        // free Coxeter group on three letters: nothing commutes
        let free = |a: &u8, b: &u8| a == b;
        assert_eq!(reduce(&[1u8, 2, 1], &free), vec![1, 2, 1]);
        assert_eq!(reduce(&[1u8, 2, 2, 1], &free), Vec::<u8>::new());
        let all = |_: &u8, _: &u8| true;
        assert_eq!(normal_form(&[3u8, 1, 2, 1], &all), vec![2, 3]);
    }

    #[test]
    fn letters_must_fit() {
        assert!(GaussLetter::from_labels([3]).is_err());
        assert!(GaussWord::new(3, vec![t(&[1, 4])]).is_err());
    }
}
