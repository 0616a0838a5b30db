//! Finitely presented groups: reduction of signed words, Tietze
//! simplification, abelianization and a few builtin presentations.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator to the power ±1. `gen` indexes the generator list of the
/// enclosing presentation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Sym {
    pub gen: usize,
    pub exp: i8,
}

impl Sym {
    pub fn pos(gen: usize) -> Sym {
        Sym { gen, exp: 1 }
    }

    pub fn neg(gen: usize) -> Sym {
        Sym { gen, exp: -1 }
    }

    pub fn inv(self) -> Sym {
        Sym { gen: self.gen, exp: -self.exp }
    }
}

pub type SignedWord = Vec<Sym>;

pub fn inverse(w: &[Sym]) -> SignedWord {
    w.iter().rev().map(|s| s.inv()).collect()
}

/// Cancels adjacent `x^e x^-e`.
pub fn free_reduce(w: &[Sym]) -> SignedWord {
    let mut out: SignedWord = Vec::with_capacity(w.len());
    for &s in w {
        if out.last() == Some(&s.inv()) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

/// Free reduction followed by cancellation across the ends.
pub fn cyclic_reduce(w: &[Sym]) -> SignedWord {
    let r = free_reduce(w);
    let mut i = 0;
    let mut j = r.len();
    while j - i >= 2 && r[i] == r[j - 1].inv() {
        i += 1;
        j -= 1;
    }
    r[i..j].to_vec()
}

/// Least rotation of `w` or of its inverse; equal keys mean the relators
/// agree up to rotation and inversion.
pub fn cyclic_key(w: &[Sym]) -> SignedWord {
    let mut best = w.to_vec();
    for cand in [w.to_vec(), inverse(w)] {
        for k in 0..cand.len() {
            let mut rot = cand[k..].to_vec();
            rot.extend_from_slice(&cand[..k]);
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

/// Exponent sum of each generator.
pub fn exponent_vector(w: &[Sym], gens: usize) -> Vec<i64> {
    let mut v = vec![0i64; gens];
    for s in w {
        v[s.gen] += s.exp as i64;
    }
    v
}

/// `⟨ generators | relators ⟩`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<SignedWord>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<SignedWord>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g) {
                return Err(Error::InvalidParameter(format!("duplicate generator `{g}`")));
            }
        }
        for r in &relators {
            if let Some(s) = r.iter().find(|s| s.gen >= generators.len() || s.exp.abs() != 1) {
                return Err(Error::UnknownGenerator(format!("#{}", s.gen)));
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Total relator length.
    pub fn length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    /// Generators with a relator `x^2` or `x^-2`.
    pub fn involutions(&self) -> Vec<bool> {
        let mut inv = vec![false; self.generators.len()];
        for r in &self.relators {
            if let [a, b] = r[..] {
                if a == b {
                    inv[a.gen] = true;
                }
            }
        }
        inv
    }

    /// Rewrites `x^-1` as `x` for involutive generators, except inside the
    /// involution relators themselves, which become `x x`.
    pub fn normalize_involutions(&self) -> Presentation {
        let inv = self.involutions();
        let relators = self
            .relators
            .iter()
            .map(|r| r.iter().map(|&s| if inv[s.gen] { Sym::pos(s.gen) } else { s }).collect())
            .collect();
        Presentation { generators: self.generators.clone(), relators }
    }
}

/// Outcome of [`tietze_simplify`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Simplified {
    pub presentation: Presentation,
    pub steps: usize,
    pub exhausted: bool,
}

pub const DEFAULT_BUDGET: usize = 10_000;

fn tidy(relators: &[SignedWord]) -> Vec<SignedWord> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relators {
        let r = cyclic_reduce(r);
        if r.is_empty() {
            continue;
        }
        if seen.insert(cyclic_key(&r)) {
            out.push(r);
        }
    }
    out
}

/// Replaces every occurrence of generator `g` by `value`.
pub fn substitute(w: &[Sym], g: usize, value: &[Sym]) -> SignedWord {
    let inv = inverse(value);
    let mut out = Vec::with_capacity(w.len());
    for &s in w {
        if s.gen == g {
            out.extend_from_slice(if s.exp > 0 { value } else { &inv });
        } else {
            out.push(s);
        }
    }
    out
}

/// Value of `g` forced by relator `r`, in which `g` occurs once.
pub fn solve_for(r: &[Sym], g: usize) -> SignedWord {
    let k = r.iter().position(|s| s.gen == g).expect("generator occurs");
    // r = u g^e v  ⇒  g^e = u⁻¹ v⁻¹ = (v u)⁻¹
    let mut vu = r[k + 1..].to_vec();
    vu.extend_from_slice(&r[..k]);
    if r[k].exp > 0 {
        inverse(&vu)
    } else {
        vu
    }
}

/// Eliminates generators that occur exactly once in some relator, one at a
/// time, always choosing the elimination that leaves the shortest
/// presentation. Ties go to the generator declared last. Relators are kept
/// cyclically reduced and deduplicated up to rotation and inversion.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Simplified {
    let mut gens = p.generators.clone();
    let mut rels = tidy(&p.relators);
    let mut steps = 0;
    loop {
        let mut best: Option<(usize, usize, usize)> = None; // (length, generator, relator)
        let total: usize = rels.iter().map(Vec::len).sum();
        let mut holders: HashMap<usize, Vec<usize>> = HashMap::new();
        for (ri, r) in rels.iter().enumerate() {
            for g in r.iter().map(|s| s.gen).collect::<BTreeSet<_>>() {
                holders.entry(g).or_default().push(ri);
            }
        }
        for (ri, r) in rels.iter().enumerate() {
            let mut counts: HashMap<usize, usize> = HashMap::new();
            for s in r {
                *counts.entry(s.gen).or_default() += 1;
            }
            for (&g, _) in counts.iter().filter(|(_, &c)| c == 1) {
                let value = solve_for(r, g);
                let mut len = total - r.len();
                for &oi in &holders[&g] {
                    if oi != ri {
                        len = len - rels[oi].len() + cyclic_reduce(&substitute(&rels[oi], g, &value)).len();
                    }
                }
                let better = match best {
                    None => true,
                    Some((bl, bg, bri)) => (len, std::cmp::Reverse(g), ri) < (bl, std::cmp::Reverse(bg), bri),
                };
                if better {
                    best = Some((len, g, ri));
                }
            }
        }
        let Some((_, g, ri)) = best else {
            return Simplified { presentation: Presentation { generators: gens, relators: rels }, steps, exhausted: false };
        };
        if steps >= budget {
            return Simplified { presentation: Presentation { generators: gens, relators: rels }, steps, exhausted: true };
        }
        steps += 1;
        let value = solve_for(&rels[ri], g);
        let rest: Vec<SignedWord> = rels
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != ri)
            .map(|(_, r)| {
                substitute(r, g, &value)
                    .into_iter()
                    .map(|s| Sym { gen: if s.gen > g { s.gen - 1 } else { s.gen }, exp: s.exp })
                    .collect()
            })
            .collect();
        gens.remove(g);
        rels = tidy(&rest);
    }
}

/// Smith normal form diagonal of an integer matrix (nonzero entries only,
/// each dividing the next).
pub fn smith_diagonal(matrix: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut pivot = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && pivot.is_none_or(|(pi, pj): (usize, usize)| a[i][j].abs() < a[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut done = true;
        for i in t + 1..rows {
            let q = a[i][t] / a[t][t];
            if q != 0 {
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
            }
            done &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j] / a[t][t];
            if q != 0 {
                for i in t..rows {
                    a[i][j] -= q * a[i][t];
                }
            }
            done &= a[t][j] == 0;
        }
        if !done {
            continue;
        }
        // the pivot must divide the rest of the block
        let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| a[i][j] % a[t][t] != 0);
        if let Some((i, _)) = bad {
            for j in t..cols {
                a[t][j] += a[i][j];
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Free rank and invariant factors (> 1) of the abelianization.
pub fn abelianization(p: &Presentation) -> (usize, Vec<i64>) {
    let g = p.generators.len();
    let matrix: Vec<Vec<i64>> = p.relators.iter().map(|r| exponent_vector(r, g)).collect();
    let diag = smith_diagonal(&matrix);
    (g - diag.len(), diag.into_iter().filter(|&d| d > 1).collect())
}

pub const J3_TEXT: &str = "\
gens: s12 s13
rels: s12^2 = s13^2 = 1
";

pub const J4_TEXT: &str = "\
gens: s12 s13 s14
rels:
  s12^2 = s13^2 = s14^2 = 1
  s12 s14 s12 s14 = s14 s12 s14 s12
  s14 s13 s12 s13 = s13 s12 s13 s14
";

pub const PJ4_TARGET_TEXT: &str = "\
gens: alpha beta gamma delta epsilon
rels: alpha gamma epsilon beta epsilon alpha^-1 delta^-1 beta gamma delta^-1
";

/// Words for the five target generators over `s12 s13 s14`.
pub const PJ4_TARGET_WORDS: [(&str, &str); 5] = [
    ("alpha", "(s13 s12)^3"),
    ("beta", "s12 s13 s14 s13 s14 s12 s14"),
    ("gamma", "s12 s14 s12 (s13 s14)^2"),
    ("delta", "s13 (s12 s14)^2 s13 s14"),
    ("epsilon", "(s14 s12 s13 s12)^2"),
];

pub fn builtin(name: &str) -> Result<Presentation> {
    let text = match name {
        "J3" => J3_TEXT,
        "J4" => J4_TEXT,
        "PJ4_target" => PJ4_TARGET_TEXT,
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    Ok(crate::syntax::parse_presentation(text)?.normalize_involutions())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(spec: &[(usize, i8)]) -> SignedWord {
        spec.iter().map(|&(gen, exp)| Sym { gen, exp }).collect()
    }

    #[test]
    fn reductions() {
        // x y y⁻¹ x
        assert_eq!(free_reduce(&word(&[(0, 1), (1, 1), (1, -1), (0, 1)])), word(&[(0, 1), (0, 1)]));
        assert_eq!(cyclic_reduce(&word(&[(0, -1), (1, 1), (0, 1)])), word(&[(1, 1)]));
        assert!(free_reduce(&[]).is_empty());
        assert!(cyclic_reduce(&word(&[(0, 1), (0, -1)])).is_empty());
    }

    #[test]
    fn cyclic_keys() {
        let a = word(&[(0, 1), (1, 1), (2, -1)]);
        let rot = word(&[(2, -1), (0, 1), (1, 1)]);
        assert_eq!(cyclic_key(&a), cyclic_key(&rot));
        assert_eq!(cyclic_key(&a), cyclic_key(&inverse(&a)));
        assert_ne!(cyclic_key(&a), cyclic_key(&word(&[(0, 1), (2, -1), (1, 1)])));
    }

    #[test]
    fn tietze_examples() {
        let p = Presentation::new(vec!["x".into(), "y".into()], vec![word(&[(1, 1), (0, -1)])]).unwrap();
        let s = tietze_simplify(&p, DEFAULT_BUDGET);
        assert_eq!(s.presentation.generators, vec!["x".to_string()]);
        assert!(s.presentation.relators.is_empty());
        assert!(!s.exhausted);

        let z = tietze_simplify(&p, 0);
        assert!(z.exhausted);
        assert_eq!(z.presentation.generators.len(), 2);
    }

    #[test]
    fn tietze_drops_duplicates() {
        let r = word(&[(0, 1), (1, 1), (0, -1), (1, -1)]);
        let p = Presentation::new(vec!["a".into(), "b".into()], vec![r.clone(), inverse(&r), vec![]]).unwrap();
        let s = tietze_simplify(&p, DEFAULT_BUDGET);
        assert_eq!(s.presentation.relators.len(), 1);
    }

    #[test]
    fn abelianization_examples() {
        let p = Presentation::new(vec!["x".into()], vec![word(&[(0, 1), (0, 1)])]).unwrap();
        assert_eq!(abelianization(&p), (0, vec![2]));
        let p = Presentation::new(vec!["x".into(), "y".into()], vec![]).unwrap();
        assert_eq!(abelianization(&p), (2, vec![]));
        let t = builtin("PJ4_target").unwrap();
        assert_eq!(exponent_vector(&t.relators[0], 5), vec![0, 2, 2, -2, 2]);
        assert_eq!(abelianization(&t), (4, vec![2]));
    }

    #[test]
    fn smith_by_hand() {
        // diag(2, 6) hidden behind row and column operations
        assert_eq!(smith_diagonal(&[vec![2, 4], vec![6, 6]]), vec![2, 6]);
        assert_eq!(smith_diagonal(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_diagonal(&[vec![0, 0]]), Vec::<i64>::new());
    }

    #[test]
    fn builtins() {
        let j3 = builtin("J3").unwrap();
        assert_eq!(j3.relators.len(), 2);
        let j4 = builtin("J4").unwrap();
        assert_eq!(j4.generators, vec!["s12", "s13", "s14"]);
        assert_eq!(j4.relators.len(), 5);
        assert!(j4.relators.iter().flatten().all(|s| s.exp == 1));
        assert_eq!(j4.relators[3], [0, 2, 0, 2, 0, 2, 0, 2].map(Sym::pos).to_vec());
        assert_eq!(j4.relators[4], [2, 1, 0, 1, 2, 1, 0, 1].map(Sym::pos).to_vec());
        assert_eq!(builtin("PJ4_target").unwrap().relators[0].len(), 10);
        assert!(builtin("J5").is_err());
    }

    fn arb_word(gens: usize, len: usize) -> impl Strategy<Value = SignedWord> {
        prop::collection::vec((0..gens, prop::bool::ANY), 0..len)
            .prop_map(|v| v.into_iter().map(|(g, s)| if s { Sym::pos(g) } else { Sym::neg(g) }).collect())
    }

    proptest! {
        #[test]
        fn reductions_idempotent(w in arb_word(3, 20)) {
            let f = free_reduce(&w);
            prop_assert!(f.len() <= w.len());
            prop_assert_eq!(free_reduce(&f), f.clone());
            let c = cyclic_reduce(&w);
            prop_assert!(c.len() <= f.len());
            prop_assert_eq!(cyclic_reduce(&c), c);
        }

        #[test]
        fn tietze_keeps_abelianization(rels in prop::collection::vec(arb_word(4, 8), 0..4)) {
            let names = ["a", "b", "c", "d"].map(String::from).to_vec();
            let p = Presentation::new(names, rels).unwrap();
            let before = abelianization(&p);
            for budget in 0..4 {
                let s = tietze_simplify(&p, budget);
                prop_assert_eq!(abelianization(&s.presentation), before.clone());
            }
        }
    }
}
