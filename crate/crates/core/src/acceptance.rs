//! End-to-end acceptance suite. Every criterion is exact unless it names a
//! sample size or a time budget; those are pinned in the constants below.
//! Random criteria draw from a ChaCha stream seeded per criterion, so the
//! outcome does not depend on the order criteria run in.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cactus::{self, CactusLetter, CactusWord, Move, ReadResult};
use crate::presentation::{abelianization, builtin};
use crate::racg::{racg_canonical, racg_equal, width_canonical, GaussLetter, GaussWord};
use crate::rschreier::{self, compare_pj4, verify_pj4, Rewriter};
use crate::subgroups::{self, IntervalCollection};
use crate::syntax::{format_signed_word, parse_cactus_word, parse_gauss_word, parse_signed_word};
use crate::Result;

pub const DEFAULT_SEED: u64 = 0x5A6_0A0;
pub const ORDER_BOUND: usize = 64;
pub const WITNESS_BUDGET: Duration = Duration::from_secs(10);

pub const TORSION_SAMPLES: usize = 1_000;
pub const TORSION_MAX_LEN: usize = 6;
pub const PURE_SAMPLES: usize = 1_000;
pub const CENTER_MAX_LEN: usize = 3;
pub const ORACLE_MAX_LEN: usize = 4;
pub const ORACLE_CREATION_LEN: usize = 8;
pub const COCYCLE_SAMPLES: usize = 10_000;
pub const COCYCLE_MAX_LEN: usize = 8;
pub const PERTURB_SAMPLES: usize = 10_000;
pub const ERASER_MAX_N: usize = 6;
pub const ERASER_SAMPLES: usize = 1_000;
pub const DECOMPOSE_SAMPLES: usize = 100;
pub const TWIN_SAMPLES: usize = 1_000;

/// Divides sample sizes in quick mode.
pub const QUICK_FACTOR: usize = 10;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

/// Seed from `SAGUARO_SEED` (decimal or `0x` hex), else [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var("SAGUARO_SEED")
        .ok()
        .and_then(|s| match s.strip_prefix("0x") {
            Some(hex) => u64::from_str_radix(hex, 16).ok(),
            None => s.parse().ok(),
        })
        .unwrap_or(DEFAULT_SEED)
}

type Criterion = fn(&mut Ctx) -> Result<(bool, String)>;

const CRITERIA: [(&str, Criterion); 14] = [
    ("diagram reading", c01_reading),
    ("braid relation fails", c02_braid),
    ("conjugation identities", c03_conjugation),
    ("torsion witnesses", c04_witnesses),
    ("no odd torsion", c05_odd_torsion),
    ("trivial center", c06_center),
    ("three strands", c07_j3),
    ("pure four-strand identities", c08_pj4),
    ("subgroup presentation, three strands", c09_rs_j3),
    ("subgroup presentation, four strands", c10_rs_j4),
    ("normal form against rewriting oracle", c11_racg_oracle),
    ("cocycle and homomorphism", c12_cocycle),
    ("erasers and sections", c13_erasers),
    ("subgroup completeness", c14_twin),
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

struct Ctx {
    rng: ChaCha8Rng,
    quick: bool,
}

impl Ctx {
    fn samples(&self, full: usize) -> usize {
        if self.quick {
            (full / QUICK_FACTOR).max(1)
        } else {
            full
        }
    }
}

/// Runs one criterion (1-based).
pub fn run_one(id: usize, seed: u64, quick: bool) -> Outcome {
    let (name, f) = CRITERIA[id - 1];
    let mut ctx = Ctx { rng: ChaCha8Rng::seed_from_u64(seed ^ (id as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)), quick };
    let (passed, detail) = match f(&mut ctx) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Outcome { id, name, passed, detail }
}

/// Runs every criterion, one thread each; results are in criterion order.
pub fn run_all(seed: u64, quick: bool) -> Vec<Outcome> {
    std::thread::scope(|s| {
        let handles: Vec<_> = (1..=CRITERIA.len()).map(|id| s.spawn(move || run_one(id, seed, quick))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    })
}

fn word(text: &str, n: usize) -> CactusWord {
    parse_cactus_word(text, n).expect("well-formed fixed word")
}

fn failures(list: Vec<String>) -> (bool, String) {
    if list.is_empty() {
        (true, "ok".into())
    } else {
        (false, list.join("; "))
    }
}

pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> CactusWord {
    let gens = cactus::generators(n);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| *gens.choose(rng).expect("n >= 2")).collect();
    CactusWord::new(n, letters).expect("generators fit")
}

/// Random word using only letters with leaf number at least `i`.
pub fn random_slice_word<R: Rng>(rng: &mut R, n: usize, i: usize, max_len: usize) -> CactusWord {
    let gens: Vec<_> = cactus::generators(n).into_iter().filter(|l| l.leaf() >= i).collect();
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| *gens.choose(rng).expect("slice is nonempty")).collect();
    CactusWord::new(n, letters).expect("generators fit")
}

/// Appends adjacent swaps that bubble-sort the strand order of `w`, making
/// the result pure.
pub fn purify(w: &CactusWord) -> CactusWord {
    let n = w.n();
    let mut labels: Vec<usize> = (1..=n).collect();
    for l in w.letters() {
        labels[l.p() - 1..l.q()].reverse();
    }
    let mut letters = w.letters().to_vec();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for j in 0..n - 1 {
            if labels[j] > labels[j + 1] {
                labels.swap(j, j + 1);
                letters.push(CactusLetter::new(j + 1, j + 2).expect("adjacent pair"));
                sorted = false;
            }
        }
    }
    CactusWord::new(n, letters).expect("same size")
}

/// All moves applicable to `w`.
pub fn applicable_moves(w: &CactusWord) -> Vec<Move> {
    let mut out = Vec::new();
    for i in 0..=w.len() {
        for l in cactus::generators(w.n()) {
            out.push(Move::Create(i, l));
        }
    }
    for i in 0..w.len().saturating_sub(1) {
        for mv in [Move::Annihilate(i), Move::Exchange(i)] {
            if cactus::apply_move(w, mv).is_some() {
                out.push(mv);
            }
        }
    }
    out
}

fn c01_reading(_: &mut Ctx) -> Result<(bool, String)> {
    let c = word("s(1,2) s(2,4) s(1,3)", 4);
    let r = cactus::read_diagram(&c);
    let d = parse_gauss_word("t{1,2} t{1,3,4} t{2,3,4}", 4)?;
    let naive = parse_gauss_word("t{1,2} t{2,3,4} t{1,2,3}", 4)?;
    let mut bad = Vec::new();
    if r.gauss != d {
        bad.push(format!("d = {}", r.gauss));
    }
    if r.perm.one_line() != [4, 3, 1, 2] {
        bad.push(format!("s = {:?}", r.perm.one_line()));
    }
    if racg_equal(&r.gauss, &naive)? {
        bad.push("d agrees with the letterwise product".into());
    }
    Ok(failures(bad))
}

fn c02_braid(_: &mut Ctx) -> Result<(bool, String)> {
    let eq = cactus::equal(&word("s(1,2) s(2,3) s(1,2)", 3), &word("s(2,3) s(1,2) s(2,3)", 3))?;
    Ok((!eq, format!("equal = {eq}")))
}

fn c03_conjugation(_: &mut Ctx) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    if !cactus::equal(&word("s(3,4)", 4), &word("s(1,4) s(1,2) s(1,4)", 4))? {
        bad.push("s34 vs s14 s12 s14".to_string());
    }
    let chain = [
        "s(5,6) s(3,4) s(3,4) s(1,2) s(1,4) s(3,6) s(3,4) s(5,6)",
        "s(5,6) s(1,2) s(1,4) s(3,6) s(3,4) s(5,6)",
        "s(5,6) s(1,4) s(3,4) s(3,6) s(5,6) s(3,4)",
        "s(5,6) s(1,4) s(3,6) s(5,6) s(5,6) s(3,4)",
        "s(1,4) s(5,6) s(3,6) s(3,4)",
        "s(1,4) s(3,6) s(3,4) s(3,4)",
        "s(1,4) s(3,6)",
    ];
    let end = word(chain[chain.len() - 1], 6);
    for step in &chain {
        if !cactus::equal(&word(step, 6), &end)? {
            bad.push(format!("{step} != s14 s36"));
        }
    }
    let conj = cactus::conjugate(&word("s(5,6) s(3,4)", 6), &word("s(3,4) s(1,2) s(1,4) s(3,6)", 6))?;
    if !cactus::equal(&conj, &end)? {
        bad.push(format!("conjugate gives {}", cactus::canonical(&conj)));
    }
    Ok(failures(bad))
}

fn c04_witnesses(_: &mut Ctx) -> Result<(bool, String)> {
    let start = Instant::now();
    let mut orders = Vec::new();
    for k in 1..=3 {
        orders.push(cactus::order(&cactus::torsion_witness(k)?, ORDER_BOUND));
    }
    let elapsed = start.elapsed();
    let ok = orders == [Some(2), Some(4), Some(8)] && elapsed < WITNESS_BUDGET;
    Ok((ok, format!("orders {orders:?} in {:.3} s", elapsed.as_secs_f64())))
}

fn c05_odd_torsion(ctx: &mut Ctx) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut finite = 0;
    let words = ctx.samples(TORSION_SAMPLES);
    for _ in 0..words {
        let w = random_word(&mut ctx.rng, 4, TORSION_MAX_LEN);
        if let Some(k) = cactus::order(&w, ORDER_BOUND) {
            finite += 1;
            if !k.is_power_of_two() {
                bad.push(format!("{w} has order {k}"));
            }
        }
    }
    let mut nontrivial = 0;
    let pures = ctx.samples(PURE_SAMPLES);
    for _ in 0..pures {
        let w = purify(&random_word(&mut ctx.rng, 4, TORSION_MAX_LEN));
        if !cactus::is_pure(&w) {
            bad.push(format!("{w} is not pure"));
        } else if !cactus::is_trivial(&w) {
            nontrivial += 1;
            if let Some(k) = cactus::order(&w, ORDER_BOUND) {
                bad.push(format!("pure {w} has order {k}"));
            }
        }
    }
    let (ok, detail) = failures(bad);
    Ok((ok, format!("{words} words ({finite} of finite order), {pures} pure ({nontrivial} nontrivial): {detail}")))
}

fn c06_center(_: &mut Ctx) -> Result<(bool, String)> {
    let gens = cactus::generators(4);
    let mut seen = std::collections::BTreeSet::new();
    let mut frontier = vec![CactusWord::empty(4)?];
    for _ in 0..CENTER_MAX_LEN {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &gens {
                next.push(w.concat(&CactusWord::new(4, vec![l])?)?);
            }
        }
        frontier = next;
        for w in &frontier {
            seen.insert(cactus::canonical(w).into_letters());
        }
    }
    seen.insert(Vec::new());
    let probes = [word("s(1,2)", 4), word("s(1,3)", 4), word("s(1,4)", 4)];
    let mut bad = Vec::new();
    for letters in &seen {
        let c = CactusWord::new(4, letters.clone())?;
        let central = probes.iter().map(|p| cactus::commute(&c, p)).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
        if central && !c.is_empty() {
            bad.push(format!("{c} is central"));
        }
    }
    for n in 3..=6 {
        let a = cactus::read_diagram(&CactusWord::from_pairs(n, &[(1, n), (1, 2)])?).gauss;
        let b = cactus::read_diagram(&CactusWord::from_pairs(n, &[(1, 2), (1, n)])?).gauss;
        if racg_equal(&a, &b)? {
            bad.push(format!("d(s1{n} s12) = d(s12 s1{n})"));
        }
    }
    let (ok, detail) = failures(bad);
    Ok((ok, format!("{} elements: {detail}", seen.len())))
}

fn c07_j3(_: &mut Ctx) -> Result<(bool, String)> {
    let b = word("s(1,2) s(1,3)", 3);
    let a = b.pow(3);
    let order = cactus::order(&b, ORDER_BOUND);
    let pure = cactus::is_pure(&a) && !cactus::is_trivial(&a);
    let commute = cactus::commute(&a, &b)?;
    Ok((order.is_none() && pure && commute, format!("order {order:?}, a pure and nontrivial {pure}, ab = ba {commute}")))
}

fn c08_pj4(_: &mut Ctx) -> Result<(bool, String)> {
    let checks = verify_pj4();
    let bad: Vec<String> = checks.iter().filter(|c| !c.ok).map(|c| c.name.clone()).collect();
    let n = checks.len();
    let (ok, detail) = failures(bad);
    Ok((ok, format!("{n} checks: {detail}")))
}

fn c09_rs_j3(_: &mut Ctx) -> Result<(bool, String)> {
    let (p, im) = rschreier::j3_pipeline_input()?;
    let r = rschreier::rs_presentation(&p, &im)?;
    let rep = r.report();
    let ok = rep.cosets == 6 && rep.generators.len() == 1 && rep.relators.is_empty();
    Ok((ok, format!("{} cosets, {} generators, {} relators", rep.cosets, rep.generators.len(), rep.relators.len())))
}

/// Worked rewrites of `k_i R k_i⁻¹` for the two long defining relators.
pub const J4_WORKED_REWRITES: [(usize, &str, &str); 11] = [
    (1, "(s12 s13 s14 s13)^2", "a_k12_s13 a_k19_s12"),
    (1, "(s12 s14)^4", "a_k13_s14 a_k17_s12"),
    (2, "(s12 s13 s14 s13)^2", "a_k17_s12 a_k19_s13"),
    (2, "(s12 s14)^4", "a_k19_s12 a_k17_s14"),
    (3, "(s12 s13 s14 s13)^2", "a_k7_s13 a_k22_s13"),
    (3, "(s12 s14)^4", "a_k15_s12 a_k20_s14"),
    (4, "(s12 s13 s14 s13)^2", "a_k18_s14 a_k13_s13"),
    (4, "(s12 s14)^4", "a_k19_s12 a_k17_s14"),
    (5, "(s12 s13 s14 s13)^2", "a_k11_s13 a_k15_s13"),
    (5, "(s12 s14)^4", "a_k22_s12 a_k18_s14 a_k24_s14"),
    (6, "(s12 s13 s14 s13)^2", "a_k13_s13 a_k18_s14"),
];

fn c10_rs_j4(_: &mut Ctx) -> Result<(bool, String)> {
    let (p, im) = rschreier::j4_pipeline_input()?;
    let r = rschreier::rs_presentation(&p, &im)?;
    let t = &r.transversal;
    let rw = Rewriter::new(t);
    let names = rw.names();
    let gens = &p.generators;
    let mut bad = Vec::new();
    if t.len() != 24 {
        bad.push(format!("{} cosets", t.len()));
    }
    for (k, rel, expected) in J4_WORKED_REWRITES {
        let rep = t.representative(k - 1).to_vec();
        let mut w = rep.clone();
        w.extend(parse_signed_word(rel, gens)?);
        w.extend(crate::presentation::inverse(&rep));
        let got = format_signed_word(&rw.rewrite(&w)?, &names);
        if got != expected {
            bad.push(format!("k{k} {rel}: {got}"));
        }
    }
    let cmp = compare_pj4(&r)?;
    if !cmp.identifications_hold {
        bad.push("identifications".into());
    }
    if !cmp.relators_hold {
        bad.push("simplified relators".into());
    }
    let s = &r.simplified.presentation;
    let shape = (s.generators.len(), s.relators.len(), s.relators.first().map_or(0, |x| x.len()));
    if shape != (5, 1, 10) {
        bad.push(format!("shape {shape:?}"));
    }
    let ab = abelianization(s);
    let target = builtin("PJ4_target")?;
    if ab != (4, vec![2]) || abelianization(&target) != ab {
        bad.push(format!("abelianization {ab:?}"));
    }
    if !cmp.matches_target() {
        bad.push("relator does not match the one-relator form".into());
    }
    let (ok, detail) = failures(bad);
    Ok((ok, format!("24 cosets, {} rewrites, shape {shape:?}, abelianization {ab:?}: {detail}", J4_WORKED_REWRITES.len())))
}

/// Equivalence classes of words over a few Gauss letters under deletion,
/// creation and commutation, explored exhaustively up to a length cap.
mod oracle {
    use std::collections::HashMap;

    pub struct RewritingGraph {
        index: HashMap<Vec<u8>, usize>,
        parent: Vec<usize>,
    }

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    impl RewritingGraph {
        /// `letters` are label bitmasks; two letters commute when their
        /// masks are disjoint or one contains the other.
        pub fn new(letters: &[u64], cap: usize) -> Self {
            let k = letters.len() as u8;
            let commute = |a: u8, b: u8| {
                let (x, y) = (letters[a as usize], letters[b as usize]);
                x & y == 0 || x & y == x || x & y == y
            };
            let mut words: Vec<Vec<u8>> = vec![vec![]];
            let mut layer = vec![vec![]];
            for _ in 0..cap {
                let mut next = Vec::new();
                for w in &layer {
                    for a in 0..k {
                        let mut v: Vec<u8> = w.clone();
                        v.push(a);
                        next.push(v);
                    }
                }
                words.extend(next.iter().cloned());
                layer = next;
            }
            let index: HashMap<Vec<u8>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
            let mut parent: Vec<usize> = (0..words.len()).collect();
            let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
                let (ra, rb) = (find(parent, a), find(parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            };
            for (i, w) in words.iter().enumerate() {
                for j in 0..w.len().saturating_sub(1) {
                    if w[j] == w[j + 1] {
                        // deletion; creation is the same edge read backwards
                        let mut v = w.clone();
                        v.drain(j..j + 2);
                        union(i, index[&v], &mut parent);
                    } else if commute(w[j], w[j + 1]) {
                        let mut v = w.clone();
                        v.swap(j, j + 1);
                        union(i, index[&v], &mut parent);
                    }
                }
            }
            RewritingGraph { index, parent }
        }

        pub fn same(&mut self, u: &[u8], v: &[u8]) -> bool {
            let (a, b) = (self.index[u], self.index[v]);
            find(&mut self.parent, a) == find(&mut self.parent, b)
        }
    }
}

fn c11_racg_oracle(_: &mut Ctx) -> Result<(bool, String)> {
    let sets: [&[usize]; 4] = [&[1, 2], &[1, 3], &[3, 4], &[1, 2, 3]];
    let letters: Vec<GaussLetter> = sets.iter().map(|s| GaussLetter::from_labels(s.iter().copied())).collect::<Result<_>>()?;
    let masks: Vec<u64> = letters.iter().map(|l| l.labels().bits()).collect();
    let mut graph = oracle::RewritingGraph::new(&masks, ORACLE_CREATION_LEN);
    let mut words: Vec<Vec<u8>> = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..ORACLE_MAX_LEN {
        let next: Vec<Vec<u8>> =
            layer.iter().flat_map(|w: &Vec<u8>| (0..4u8).map(move |a| [w.clone(), vec![a]].concat())).collect();
        words.extend(next.iter().cloned());
        layer = next;
    }
    let gauss: Vec<GaussWord> = words
        .iter()
        .map(|w| GaussWord::new(4, w.iter().map(|&a| letters[a as usize]).collect()))
        .collect::<Result<_>>()?;
    let canon: Vec<GaussWord> = gauss.iter().map(racg_canonical).collect();
    let mut bad = Vec::new();
    let mut classes = HashMap::new();
    for i in 0..words.len() {
        classes.entry(canon[i].clone()).or_insert(i);
        for j in i..words.len() {
            let fast = racg_equal(&gauss[i], &gauss[j])?;
            if fast != graph.same(&words[i], &words[j]) && bad.len() < 5 {
                bad.push(format!("{} vs {}: racg_equal {fast}", gauss[i], gauss[j]));
            }
        }
    }
    let (ok, detail) = failures(bad);
    Ok((ok, format!("{} words, {} elements: {detail}", words.len(), classes.len())))
}

fn same_reading(a: &ReadResult, b: &ReadResult) -> bool {
    a.perm == b.perm && racg_canonical(&a.gauss) == racg_canonical(&b.gauss)
}

fn c12_cocycle(ctx: &mut Ctx) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let pairs = ctx.samples(COCYCLE_SAMPLES);
    for _ in 0..pairs {
        let u = random_word(&mut ctx.rng, 5, COCYCLE_MAX_LEN);
        let v = random_word(&mut ctx.rng, 5, COCYCLE_MAX_LEN);
        let uv = u.concat(&v)?;
        let prod = cactus::cocycle_product(&cactus::read_diagram(&u), &cactus::read_diagram(&v))?;
        if !same_reading(&prod, &cactus::read_diagram(&uv)) {
            bad.push(format!("cocycle fails for {u} | {v}"));
        }
        if cactus::permutation(&uv) != cactus::permutation(&u).compose(&cactus::permutation(&v))? {
            bad.push(format!("s fails for {u} | {v}"));
        }
    }
    let moves = ctx.samples(PERTURB_SAMPLES);
    for _ in 0..moves {
        let w = random_word(&mut ctx.rng, 5, COCYCLE_MAX_LEN);
        let mv = *applicable_moves(&w).choose(&mut ctx.rng).expect("creation always applies");
        let w2 = cactus::apply_move(&w, mv).expect("move is applicable");
        if !cactus::equal(&w, &w2)? {
            bad.push(format!("{mv:?} changes {w}"));
        }
    }
    bad.truncate(5);
    let (ok, detail) = failures(bad);
    Ok((ok, format!("{pairs} pairs, {moves} moves: {detail}")))
}

fn width_reading(i: usize, w: &CactusWord) -> Result<ReadResult> {
    let (gauss, perm) = subgroups::eraser_width(i, w)?;
    Ok(ReadResult { gauss, perm })
}

fn c13_erasers(ctx: &mut Ctx) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 2..=ERASER_MAX_N {
        for i in 2..=n {
            cases += 1;
            if !subgroups::check_eraser_welldefined(i, n)? {
                bad.push(format!("erasers ill-defined for i={i}, n={n}"));
            }
        }
    }
    let samples = ctx.samples(ERASER_SAMPLES);
    for _ in 0..samples {
        let n = ctx.rng.gen_range(3..=ERASER_MAX_N);
        let i = ctx.rng.gen_range(2..=n);
        let s = random_slice_word(&mut ctx.rng, n, i, COCYCLE_MAX_LEN);
        if !cactus::equal(&subgroups::eraser_slice(i, &subgroups::section(i, &s)?)?, &s)? {
            bad.push(format!("eraser after section moves {s}"));
        }
        let u = random_word(&mut ctx.rng, n, COCYCLE_MAX_LEN);
        let v = random_word(&mut ctx.rng, n, COCYCLE_MAX_LEN);
        let uv = u.concat(&v)?;
        let (eu, ev) = (subgroups::eraser_slice(i, &u)?, subgroups::eraser_slice(i, &v)?);
        if !cactus::equal(&subgroups::eraser_slice(i, &uv)?, &eu.concat(&ev)?)? {
            bad.push(format!("slice eraser not multiplicative on {u} | {v}"));
        }
        let prod = cactus::cocycle_product(&width_reading(i, &u)?, &width_reading(i, &v)?)?;
        let whole = width_reading(i, &uv)?;
        if width_canonical(&prod.gauss) != whole.gauss || prod.perm != whole.perm {
            bad.push(format!("width eraser not multiplicative on {u} | {v}"));
        }
        let mv = *applicable_moves(&u).choose(&mut ctx.rng).expect("creation always applies");
        let u2 = cactus::apply_move(&u, mv).expect("move is applicable");
        if !cactus::equal(&subgroups::eraser_slice(i, &u)?, &subgroups::eraser_slice(i, &u2)?)? {
            bad.push(format!("slice eraser separates {u} and {u2}"));
        }
        if subgroups::eraser_width(i, &u)? != subgroups::eraser_width(i, &u2)? {
            bad.push(format!("width eraser separates {u} and {u2}"));
        }
    }
    let decomposed = ctx.samples(DECOMPOSE_SAMPLES);
    for _ in 0..decomposed {
        let n = ctx.rng.gen_range(3..=ERASER_MAX_N);
        let i = ctx.rng.gen_range(2..=n);
        let w = random_word(&mut ctx.rng, n, COCYCLE_MAX_LEN);
        let parts = subgroups::kernel_decompose(i, &w)?;
        let lhs = w.concat(&subgroups::eraser_slice(i, &w)?.inverse())?;
        let rhs = subgroups::expand_decomposition(n, &parts)?;
        if parts.iter().any(|(_, m)| m.leaf() >= i) || !cactus::equal(&lhs, &rhs)? {
            bad.push(format!("decomposition of {w} at i={i}"));
        }
    }
    bad.truncate(5);
    let (ok, detail) = failures(bad);
    Ok((ok, format!("{cases} (i, n) cases, {samples} samples, {decomposed} decompositions: {detail}")))
}

fn c14_twin(ctx: &mut Ctx) -> Result<(bool, String)> {
    let coll = IntervalCollection::new(4, &[(1, 2), (2, 3), (3, 4)])?;
    let twin: Vec<CactusLetter> = coll.intervals().collect();
    let mut bad = Vec::new();
    let samples = ctx.samples(TWIN_SAMPLES);
    let mut longest = 0;
    for _ in 0..samples {
        let len = ctx.rng.gen_range(0..=COCYCLE_MAX_LEN);
        let half: Vec<CactusLetter> = (0..len).map(|_| *twin.choose(&mut ctx.rng).expect("nonempty")).collect();
        let mut letters = half.clone();
        letters.extend(half.iter().rev());
        let mut w = CactusWord::new(4, letters)?;
        let shuffles = ctx.rng.gen_range(0..=2 * len + 2);
        for _ in 0..shuffles {
            let mut moves: Vec<Move> = Vec::new();
            for i in 0..=w.len() {
                for &l in &twin {
                    moves.push(Move::Create(i, l));
                }
            }
            for i in 0..w.len().saturating_sub(1) {
                let (x, y) = (w.letters()[i], w.letters()[i + 1]);
                if x == y {
                    moves.push(Move::Annihilate(i));
                } else if x.is_disjoint(y) {
                    moves.push(Move::Exchange(i));
                }
            }
            let mv = *moves.choose(&mut ctx.rng).expect("creation always applies");
            w = cactus::apply_move(&w, mv).expect("move is applicable");
        }
        longest = longest.max(w.len());
        if !subgroups::is_member(&w, &coll)? {
            bad.push(format!("{w} left the subgroup"));
        }
        let (reduced, trace) = cactus::reduce_traced(&w);
        if !reduced.is_empty() {
            bad.push(format!("{w} reduces to {reduced}"));
        }
        if let Some(l) = trace.iter().find(|l| l.leaf() != 2) {
            bad.push(format!("reducing {w} passes through {l}"));
        }
    }
    let s13 = word("s(1,3)", 4);
    if subgroups::is_member(&s13, &coll)? {
        bad.push("s13 accepted".into());
    }
    bad.truncate(5);
    let (ok, detail) = failures(bad);
    Ok((ok, format!("{samples} trivial words up to length {longest}: {detail}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn purify_gives_pure_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let w = random_word(&mut rng, 5, 6);
            assert!(cactus::is_pure(&purify(&w)));
        }
    }

    #[test]
    fn moves_apply() {
        let w = word("s(1,3) s(1,2) s(1,2) s(2,4)", 4);
        let moves = applicable_moves(&w);
        assert!(moves.contains(&Move::Annihilate(1)));
        assert!(moves.contains(&Move::Exchange(0)));
        assert!(!moves.contains(&Move::Exchange(2)));
    }

    #[test]
    fn oracle_small_cases() {
        let mut g = oracle::RewritingGraph::new(&[0b011, 0b110], 4);
        assert!(g.same(&[0, 0], &[]));
        assert!(!g.same(&[0, 1], &[1, 0]));
        assert!(g.same(&[0, 1, 1, 0], &[]));
        let mut h = oracle::RewritingGraph::new(&[0b0011, 0b1100], 4);
        assert!(h.same(&[0, 1], &[1, 0]));
    }

    #[test]
    fn single_criterion() {
        let o = run_one(2, DEFAULT_SEED, true);
        assert!(o.passed);
        assert!(o.to_string().starts_with("[PASS]  2 braid relation fails"));
    }
}
