//! Permutations of `{1..n}` in one-line notation.
//!
//! `images[i]` is the final position of the strand that starts at position
//! `i`. Composition runs left to right, in the order the letters of a word
//! are read, so the image of a word `uv` is `u.then(&v)`.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::MAX_STRANDS;

/// A finite set of strand labels drawn from `{1..64}`, stored as a bitmask.
///
/// The order is lexicographic on the ascending element sequence with a
/// proper prefix sorting first, so `{1,2} < {1,2,3} < {1,3} < {2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Self> {
        let mut bits = 0u64;
        for l in labels {
            if l == 0 || l > MAX_STRANDS {
                return Err(Error::LabelSet(format!("label {l} out of range")));
            }
            let bit = 1u64 << (l - 1);
            if bits & bit != 0 {
                return Err(Error::LabelSet(format!("label {l} repeated")));
            }
            bits |= bit;
        }
        Ok(LabelSet(bits))
    }

    /// The interval `{p, p+1, ..., q}`.
    pub fn interval(p: usize, q: usize) -> Self {
        debug_assert!(1 <= p && p <= q && q <= MAX_STRANDS);
        let width = q - p + 1;
        let block = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        LabelSet(block << (p - 1))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_STRANDS).contains(&label) && self.0 & (1u64 << (label - 1)) != 0
    }

    pub fn insert(&mut self, label: usize) {
        self.0 |= 1u64 << (label - 1);
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn is_disjoint(self, other: LabelSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending labels, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let low = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(low + 1)
        })
    }
}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
            if la != lb {
                return la.cmp(&lb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// A permutation of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // 0-based images
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// Builds a permutation from its 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_STRANDS {
            return Err(Error::NotPermutation(format!("size {n} unsupported")));
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotPermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&v| (v - 1) as u8).collect() })
    }

    /// `s(s_{p,q})`: reverses the block of positions `p..=q`.
    pub fn interval_reversal(n: usize, p: usize, q: usize) -> Result<Self> {
        if !(1 <= p && p < q && q <= n && n <= MAX_STRANDS) {
            return Err(Error::Bounds { p, q, n });
        }
        let mut perm = Self::identity(n);
        perm.images[p - 1..q].reverse();
        Ok(perm)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Image of a 1-based position.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn apply_set(&self, set: LabelSet) -> LabelSet {
        let mut out = LabelSet::EMPTY;
        for l in set.iter() {
            out.insert(self.apply(l));
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Left-to-right product: first `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &Permutation) -> Self {
        Permutation { images: self.images.iter().map(|&v| other.images[v as usize]).collect() }
    }

    /// Composes with the reversal of positions `p..=q` on the right.
    pub(crate) fn then_reverse(&mut self, p: usize, q: usize) {
        let (lo, hi) = (p as u8 - 1, q as u8 - 1);
        for v in self.images.iter_mut() {
            if (lo..=hi).contains(v) {
                *v = lo + hi - *v;
            }
        }
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.then(self);
            k += 1;
        }
        k
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.one_line().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Order of the subgroup of `S_n` generated by all reversals of `i`
/// consecutive positions, by breadth-first closure.
pub fn flop_subgroup_order(n: usize, i: usize) -> Result<usize> {
    if !(2 <= i && i <= n && n <= MAX_STRANDS) {
        return Err(Error::InvalidParameter(format!("flop width {i} for {n} strands")));
    }
    let gens: Vec<Permutation> = (1..=n + 1 - i)
        .map(|p| Permutation::interval_reversal(n, p, p + i - 1))
        .collect::<Result<_>>()?;
    Ok(closure_size(&gens, n))
}

pub(crate) fn closure_size(gens: &[Permutation], n: usize) -> usize {
    let start = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.then(s);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    fn set(v: &[usize]) -> LabelSet {
        LabelSet::from_labels(v.iter().copied()).unwrap()
    }

    #[test]
    fn interval_reversals() {
        assert_eq!(Permutation::interval_reversal(4, 2, 4).unwrap(), p(&[1, 4, 3, 2]));
        assert_eq!(Permutation::interval_reversal(4, 1, 4).unwrap(), p(&[4, 3, 2, 1]));
        assert_eq!(Permutation::interval_reversal(3, 1, 2).unwrap(), p(&[2, 1, 3]));
        assert!(Permutation::interval_reversal(4, 3, 3).is_err());
        assert!(Permutation::interval_reversal(4, 2, 5).is_err());
        assert!(Permutation::interval_reversal(4, 0, 2).is_err());
    }

    #[test]
    fn composition_follows_diagram_order() {
        let s12 = Permutation::interval_reversal(4, 1, 2).unwrap();
        let s24 = Permutation::interval_reversal(4, 2, 4).unwrap();
        assert_eq!(s12.compose(&s24).unwrap(), p(&[4, 1, 3, 2]));

        let x = p(&[3, 1, 4, 2]);
        assert_eq!(Permutation::identity(4).compose(&x).unwrap(), x);
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
        assert_eq!(x.compose(&p(&[2, 1, 3])), Err(Error::SizeMismatch(4, 3)));
    }

    #[test]
    fn set_action() {
        assert_eq!(p(&[2, 1, 3, 4]).apply_set(set(&[2, 3, 4])), set(&[1, 3, 4]));
        assert_eq!(Permutation::identity(4).apply_set(set(&[1, 3])), set(&[1, 3]));
        assert_eq!(p(&[4, 1, 3, 2]).inverse().apply_set(set(&[1, 2, 3])), set(&[2, 3, 4]));
    }

    #[test]
    fn label_order() {
        let mut v = vec![set(&[2, 3]), set(&[1, 3]), set(&[1, 2, 3]), set(&[1, 2])];
        v.sort();
        assert_eq!(v, vec![set(&[1, 2]), set(&[1, 2, 3]), set(&[1, 3]), set(&[2, 3])]);
        assert!(set(&[1, 4]) < set(&[2]));
        assert_eq!(set(&[3, 5]).iter().collect::<Vec<_>>(), vec![3, 5]);
        assert_eq!(LabelSet::interval(2, 4), set(&[2, 3, 4]));
        assert!(LabelSet::from_labels([1, 1]).is_err());
    }

    #[test]
    fn flop_orders() {
        assert_eq!(flop_subgroup_order(4, 2).unwrap(), 24);
        assert_eq!(flop_subgroup_order(4, 4).unwrap(), 2);
        assert_eq!(flop_subgroup_order(4, 3).unwrap(), 4);
        assert!(flop_subgroup_order(4, 5).is_err());
    }

    #[test]
    fn flop_width_three_closure_by_hand() {
        // the two width-3 flops of S_4 are the commuting transpositions (13) and (24)
        let a = p(&[3, 2, 1, 4]);
        let b = p(&[1, 4, 3, 2]);
        assert_eq!(a.then(&b), b.then(&a));
        let elems: HashSet<Permutation> =
            [Permutation::identity(4), a.clone(), b.clone(), a.then(&b)].into_iter().collect();
        assert_eq!(elems.len(), 4);
    }

    #[test]
    fn serde_one_line() {
        let x = p(&[4, 3, 1, 2]);
        assert_eq!(Vec::<usize>::from(x.clone()), vec![4, 3, 1, 2]);
        assert_eq!(x.to_string(), "(4,3,1,2)");
        assert_eq!(x.order(), 4);
    }

    use proptest::prelude::*;

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_one_line(&v).unwrap())
    }

    proptest! {
        #[test]
        fn compose_associative(a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)) {
            prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        }

        #[test]
        fn action_is_compatible(a in arb_perm(6), b in arb_perm(6), bits in 0u64..64) {
            let s = LabelSet(bits);
            prop_assert_eq!(a.then(&b).apply_set(s), b.apply_set(a.apply_set(s)));
            prop_assert_eq!(a.apply_set(s).len(), s.len());
        }

        #[test]
        fn reversals_are_involutions(p in 1usize..6, w in 1usize..6) {
            let q = (p + w).min(7);
            prop_assume!(p < q);
            let r = Permutation::interval_reversal(7, p, q).unwrap();
            prop_assert!(r.then(&r).is_identity());
        }
    }
}
