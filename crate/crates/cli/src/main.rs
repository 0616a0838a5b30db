use std::collections::HashMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use saguaro::acceptance;
use saguaro::cactus::{self, CactusWord};
use saguaro::perm::Permutation;
use saguaro::presentation::{abelianization, builtin, Presentation, DEFAULT_BUDGET};
use saguaro::render::render_svg;
use saguaro::rschreier::{self, images_by_name, rs_presentation_with_budget, verify_pj4};
use saguaro::subgroups::{self, IntervalCollection};
use saguaro::syntax::{format_cactus_word, format_gauss_word, parse_cactus_word, parse_presentation};

#[derive(Parser)]
#[command(name = "saguaro", version, about = "Word problems and subgroup presentations for cactus groups")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArg {
    /// Number of strands.
    #[arg(short = 'n')]
    n: usize,
    /// Word such as "s(1,2) s(2,4)^3".
    word: String,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical representative of a word.
    Canon(WordArg),
    /// Decide whether two words are equal.
    Eq {
        #[arg(short = 'n')]
        n: usize,
        left: String,
        right: String,
    },
    /// Order of an element, searched up to a bound.
    Order {
        #[command(flatten)]
        w: WordArg,
        #[arg(long, default_value_t = cactus::DEFAULT_ORDER_BOUND as u64, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Gauss diagram and permutation of a word.
    Image(WordArg),
    /// Decide whether a word is pure.
    Pure(WordArg),
    /// Decide membership in the subgroup generated by a set of intervals.
    Member {
        #[command(flatten)]
        w: WordArg,
        /// JSON file holding an array of intervals, e.g. [[1,2],[3,4]].
        #[arg(long, conflicts_with = "slice", required_unless_present = "slice")]
        collection: Option<PathBuf>,
        /// All intervals with leaf number in i..=j, given as "i,j".
        #[arg(long)]
        slice: Option<String>,
    },
    /// Apply both erasers at a leaf bound.
    Erase {
        #[command(flatten)]
        w: WordArg,
        #[arg(long)]
        min_leaf: usize,
    },
    /// Write w times the inverse of its erasure as conjugates of short letters.
    Decompose {
        #[command(flatten)]
        w: WordArg,
        #[arg(long)]
        min_leaf: usize,
    },
    /// Presentation of the kernel of a permutation representation.
    Rs {
        /// Presentation file, or "builtin:NAME" (J3, J4).
        #[arg(long)]
        presentation: String,
        /// JSON object mapping generator names to one-line permutations.
        #[arg(long, conflicts_with = "n")]
        images: Option<PathBuf>,
        /// Read generator names like s13 as cactus letters on n strands.
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Abelianization of a presentation.
    Abel {
        #[arg(long)]
        presentation: String,
    },
    /// Check the identities of the one-relator presentation on four strands.
    VerifyPj4,
    /// Draw a word as SVG.
    Render {
        #[command(flatten)]
        w: WordArg,
        #[arg(short = 'o')]
        output: PathBuf,
        /// Number the strand tracks.
        #[arg(long)]
        labels: bool,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Smaller random samples.
        #[arg(long)]
        quick: bool,
    },
}

/// What a command reports: text, JSON, and whether the answer was yes.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

fn yes(text: impl Into<String>, json: Value) -> Report {
    Report { text: text.into(), json, ok: true }
}

fn decision(ok: bool, json: Value) -> Report {
    Report { text: ok.to_string(), json, ok }
}

fn word(w: &WordArg) -> saguaro::Result<CactusWord> {
    parse_cactus_word(&w.word, w.n)
}

fn load_presentation(spec: &str) -> anyhow::Result<Presentation> {
    match spec.strip_prefix("builtin:") {
        Some(name) => Ok(builtin(name)?),
        None => {
            let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
            Ok(parse_presentation(&text)?.normalize_involutions())
        }
    }
}

fn load_images(path: &PathBuf, p: &Presentation) -> anyhow::Result<Vec<Permutation>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let raw: HashMap<String, Vec<usize>> = serde_json::from_str(&text).context("images file")?;
    let table = raw
        .into_iter()
        .map(|(k, v)| Ok((k, Permutation::from_one_line(&v)?)))
        .collect::<saguaro::Result<HashMap<_, _>>>()?;
    Ok(images_by_name(p, &table)?)
}

fn run(cmd: Command) -> anyhow::Result<Report> {
    Ok(match cmd {
        Command::Canon(w) => {
            let c = cactus::canonical(&word(&w)?);
            let s = format_cactus_word(&c);
            yes(s.clone(), json!({ "n": w.n, "canonical": s, "length": c.len() }))
        }
        Command::Eq { n, left, right } => {
            let eq = cactus::equal(&parse_cactus_word(&left, n)?, &parse_cactus_word(&right, n)?)?;
            decision(eq, json!({ "equal": eq }))
        }
        Command::Order { w, bound } => {
            let order = cactus::order(&word(&w)?, bound as usize);
            let text = order.map_or("none".to_string(), |k| k.to_string());
            Report { text, json: json!({ "order": order, "bound": bound }), ok: order.is_some() }
        }
        Command::Image(w) => {
            let r = cactus::read_diagram(&word(&w)?);
            let d = format_gauss_word(&r.gauss);
            yes(format!("d = {d}\ns = {}", r.perm), json!({ "d": d, "s": r.perm.one_line() }))
        }
        Command::Pure(w) => {
            let pure = cactus::is_pure(&word(&w)?);
            decision(pure, json!({ "pure": pure }))
        }
        Command::Member { w, collection, slice } => {
            let c = word(&w)?;
            let coll = match (collection, slice) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    let pairs: Vec<(usize, usize)> = serde_json::from_str(&text).context("collection file")?;
                    IntervalCollection::new(w.n, &pairs)?
                }
                (None, Some(s)) => {
                    let (i, j) = s.split_once(',').context("--slice takes i,j")?;
                    IntervalCollection::slice(w.n, i.trim().parse()?, j.trim().parse()?)?
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let member = subgroups::is_member(&c, &coll)?;
            decision(member, json!({ "member": member }))
        }
        Command::Erase { w, min_leaf } => {
            let c = word(&w)?;
            let slice = format_cactus_word(&cactus::canonical(&subgroups::eraser_slice(min_leaf, &c)?));
            let (d, s) = subgroups::eraser_width(min_leaf, &c)?;
            let d = format_gauss_word(&d);
            yes(
                format!("slice = {slice}\nwidth d = {d}\nwidth s = {s}"),
                json!({ "slice": slice, "width": { "d": d, "s": s.one_line() } }),
            )
        }
        Command::Decompose { w, min_leaf } => {
            let c = word(&w)?;
            let parts = subgroups::kernel_decompose(min_leaf, &c)?;
            let text = parts
                .iter()
                .map(|(g, m)| if g.is_empty() { m.to_string() } else { format!("[{}] {m}", format_cactus_word(g)) })
                .collect::<Vec<_>>()
                .join("\n");
            let json = parts
                .iter()
                .map(|(g, m)| json!({ "conjugator": format_cactus_word(g), "letter": m.to_string() }))
                .collect::<Vec<_>>();
            yes(if text.is_empty() { "1".into() } else { text }, json!({ "parts": json }))
        }
        Command::Rs { presentation, images, n, budget } => {
            let p = load_presentation(&presentation)?;
            let im = match (images, n) {
                (Some(path), _) => load_images(&path, &p)?,
                (None, Some(n)) => rschreier::cactus_images(&p, n)?,
                (None, None) => anyhow::bail!("rs needs --images FILE or -n N"),
            };
            let r = rs_presentation_with_budget(&p, &im, budget)?;
            let rep = r.report();
            let mut text = format!(
                "cosets: {}\nschreier generators: {}\nrelators before simplification: {}\n",
                rep.cosets, rep.schreier_generators, rep.raw_relators
            );
            text.push_str(&r.simplified.presentation.to_string());
            text.push_str(&format!("abelianization: Z^{} {:?}", rep.abelianization_rank, rep.invariant_factors));
            yes(text, serde_json::to_value(&rep)?)
        }
        Command::Abel { presentation } => {
            let p = load_presentation(&presentation)?;
            let (rank, factors) = abelianization(&p);
            yes(format!("Z^{rank} {factors:?}"), json!({ "rank": rank, "invariant_factors": factors }))
        }
        Command::VerifyPj4 => {
            let checks = verify_pj4();
            let ok = checks.iter().all(|c| c.ok);
            let text = checks.iter().map(|c| format!("{} {}", if c.ok { "ok  " } else { "FAIL" }, c.name)).collect::<Vec<_>>();
            Report { text: text.join("\n"), json: json!({ "ok": ok, "checks": checks }), ok }
        }
        Command::Render { w, output, labels } => {
            let svg = render_svg(&word(&w)?, labels);
            std::fs::write(&output, &svg).with_context(|| format!("writing {}", output.display()))?;
            yes(output.display().to_string(), json!({ "path": output, "bytes": svg.len() }))
        }
        Command::Selftest { quick } => {
            let seed = acceptance::seed_from_env();
            let outcomes = acceptance::run_all(seed, quick);
            let ok = outcomes.iter().all(|o| o.passed);
            let mut text = vec![format!("seed {seed:#x}")];
            text.extend(outcomes.iter().map(|o| o.to_string()));
            Report { text: text.join("\n"), json: json!({ "seed": seed, "passed": ok, "criteria": outcomes }), ok }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(r) => {
            let out = if cli.json { r.json.to_string() } else { r.text };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{out}");
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
