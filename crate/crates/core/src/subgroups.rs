//! Subgroups generated by symmetric interval collections, slice subgroups
//! `J_n^{i,j}`, and the eraser homomorphisms.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cactus::{self, CactusLetter, CactusWord};
use crate::error::{check_strands, Error, Result};
use crate::perm::{LabelSet, Permutation};
use crate::racg::{width_canonical, GaussLetter, GaussWord};

/// A set of intervals `[p,q] ⊆ [1,n]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IntervalCollection {
    n: usize,
    intervals: BTreeSet<CactusLetter>,
}

impl IntervalCollection {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_strands(n)?;
        let intervals = pairs
            .iter()
            .map(|&(p, q)| {
                if q > n {
                    return Err(Error::Bounds { p, q, n });
                }
                CactusLetter::new(p, q).map_err(|_| Error::Bounds { p, q, n })
            })
            .collect::<Result<_>>()?;
        Ok(IntervalCollection { n, intervals })
    }

    /// `C_{i,j}`: all intervals with leaf number in `i..=j`.
    pub fn slice(n: usize, i: usize, j: usize) -> Result<Self> {
        check_strands(n)?;
        if !(2 <= i && i <= j && j <= n) {
            return Err(Error::InvalidParameter(format!("slice {i},{j} for {n} strands")));
        }
        let intervals = cactus::generators(n).into_iter().filter(|l| (i..=j).contains(&l.leaf())).collect();
        Ok(IntervalCollection { n, intervals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn intervals(&self) -> impl Iterator<Item = CactusLetter> + '_ {
        self.intervals.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, l: CactusLetter) -> bool {
        self.intervals.contains(&l)
    }

    fn missing_reflection(&self) -> Option<CactusLetter> {
        for &outer in &self.intervals {
            for &inner in &self.intervals {
                if inner != outer && inner.is_within(outer) {
                    let r = inner.reflect_in(outer);
                    if !self.intervals.contains(&r) {
                        return Some(r);
                    }
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.missing_reflection().is_none()
    }

    /// Least symmetric superset.
    pub fn symmetric_closure(&self) -> IntervalCollection {
        let mut c = self.clone();
        while let Some(r) = c.missing_reflection() {
            c.intervals.insert(r);
        }
        c
    }
}

/// Membership in the subgroup generated by a symmetric collection.
pub fn is_member(c: &CactusWord, coll: &IntervalCollection) -> Result<bool> {
    if c.n() != coll.n {
        return Err(Error::SizeMismatch(c.n(), coll.n));
    }
    if let Some(r) = coll.missing_reflection() {
        return Err(Error::NotSymmetric(r.to_string()));
    }
    Ok(cactus::canonical(c).letters().iter().all(|l| coll.contains(*l)))
}

fn check_leaf(i: usize, n: usize) -> Result<()> {
    if (2..=n).contains(&i) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("leaf bound {i} outside 2..={n}")))
    }
}

/// `ϵ_i`: deletes letters of leaf number below `i`.
pub fn eraser_slice(i: usize, w: &CactusWord) -> Result<CactusWord> {
    check_leaf(i, w.n())?;
    let letters = w.letters().iter().copied().filter(|l| l.leaf() >= i).collect();
    CactusWord::new(w.n(), letters)
}

/// The inclusion `J_n^{i,n} → J_n`; checks that the word lies in the slice.
pub fn section(i: usize, w: &CactusWord) -> Result<CactusWord> {
    check_leaf(i, w.n())?;
    if let Some(l) = w.letters().iter().find(|l| l.leaf() < i) {
        return Err(Error::InvalidParameter(format!("{l} has leaf number below {i}")));
    }
    Ok(w.clone())
}

/// `ε_i`: leaf `i` letters become width-`i` Gauss letters (labels at their
/// positions), longer letters only permute, shorter letters vanish. The
/// Gauss part is returned in width-group normal form.
pub fn eraser_width(i: usize, w: &CactusWord) -> Result<(GaussWord, Permutation)> {
    let n = w.n();
    check_leaf(i, n)?;
    let mut labels: Vec<usize> = (1..=n).collect();
    let mut gauss = GaussWord::empty(n);
    for l in w.letters().iter().filter(|l| l.leaf() >= i) {
        let block = &mut labels[l.p() - 1..l.q()];
        if l.leaf() == i {
            let set = LabelSet::from_labels(block.iter().copied())?;
            gauss.push(GaussLetter::new(set)?);
        }
        block.reverse();
    }
    let mut images = vec![0; n];
    for (pos, &label) in labels.iter().enumerate() {
        images[label - 1] = pos + 1;
    }
    Ok((width_canonical(&gauss), Permutation::from_one_line(&images)?))
}

/// Both sides of every defining relation of `J_n`.
pub fn relation_instances(n: usize) -> Vec<(Vec<CactusLetter>, Vec<CactusLetter>)> {
    let gens = cactus::generators(n);
    let mut out = Vec::new();
    for &x in &gens {
        out.push((vec![x, x], vec![]));
        for &y in &gens {
            if x.is_disjoint(y) {
                out.push((vec![x, y], vec![y, x]));
            } else if y != x && y.is_within(x) {
                out.push((vec![x, y], vec![y.reflect_in(x), x]));
            }
        }
    }
    out
}

/// Checks that both erasers send the two sides of each defining relation
/// to the same value.
pub fn check_eraser_welldefined(i: usize, n: usize) -> Result<bool> {
    check_strands(n)?;
    check_leaf(i, n)?;
    for (lhs, rhs) in relation_instances(n) {
        let lhs = CactusWord::new(n, lhs)?;
        let rhs = CactusWord::new(n, rhs)?;
        if !cactus::equal(&eraser_slice(i, &lhs)?, &eraser_slice(i, &rhs)?)? {
            return Ok(false);
        }
        if eraser_width(i, &lhs)? != eraser_width(i, &rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Writes `w · ϵ_i(w)⁻¹` as a product of conjugates `g m g⁻¹` of letters
/// with leaf number below `i`. `g` is the (canonicalized) product of the
/// long letters preceding `m` in `w`.
pub fn kernel_decompose(i: usize, w: &CactusWord) -> Result<Vec<(CactusWord, CactusLetter)>> {
    check_leaf(i, w.n())?;
    let mut long = Vec::new();
    let mut out = Vec::new();
    for &l in w.letters() {
        if l.leaf() >= i {
            long.push(l);
        } else {
            let g = CactusWord::new(w.n(), long.clone())?;
            out.push((cactus::canonical(&g), l));
        }
    }
    Ok(out)
}

/// Expands the output of [`kernel_decompose`] back into a word.
pub fn expand_decomposition(n: usize, parts: &[(CactusWord, CactusLetter)]) -> Result<CactusWord> {
    let mut letters = Vec::new();
    for (g, m) in parts {
        letters.extend_from_slice(g.letters());
        letters.push(*m);
        letters.extend(g.letters().iter().rev());
    }
    CactusWord::new(n, letters)
}
