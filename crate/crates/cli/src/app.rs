//! Subcommand dispatch. [`run`] captures output so tests can drive it in-process.

use std::fmt::Write;

use braidforce_core::augbraid::act;
use braidforce_core::forcing::{forced_set, is_forced};
use braidforce_core::foxcalc::raw_trace;
use braidforce_core::nielsen::{degenerate_families, reidemeister_trace, twist_context};
use braidforce_core::{Bounds, BraidWord, Decision, ForcingOptions};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::parse::{parse_aug, parse_braid, parse_word, ParseError};
use crate::report::{certificate_lines, BoundsJson, DecisionJson, FamilyJson, ForcedReportJson, InputJson, TraceJson};

#[derive(Debug, Parser)]
#[command(name = "braidforce", version, about = "Braids forced by a braid on the punctured disk")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the images of the generators under the Artin action.
    Action(Target),
    /// Print the strand permutation.
    Perm(Target),
    /// Print the merged Reidemeister trace of the m-th iterate.
    Trace(Iterated),
    /// List the braids forced by the m-th iterate.
    Forced(Iterated),
    /// Decide whether `--aug` is forced by `--braid`.
    IsForced {
        #[command(flatten)]
        it: Iterated,
        /// Candidate as `(<braid> ; <word>)` or a word on n+1 strands.
        #[arg(long)]
        aug: String,
    },
    /// List degenerate families, or decide one class with `--word`.
    Degenerate {
        #[command(flatten)]
        it: Iterated,
        #[arg(long)]
        word: Option<String>,
    },
    /// Decide equality of two braid words.
    Eq {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long = "braid", num_args = 1, required = true)]
        braids: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Decide twisted conjugacy of two words under the m-th iterate.
    TwistedConj {
        #[command(flatten)]
        it: Iterated,
        #[arg(long = "word", num_args = 1, required = true)]
        words: Vec<String>,
    },
    /// Split a word on n+1 strands fixing the last strand into `(braid ; word)`.
    Decompose {
        /// Number of punctures.
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        aug: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct Target {
    /// Number of strands.
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long)]
    pub braid: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct Iterated {
    #[command(flatten)]
    pub target: Target,
    /// Iterate.
    #[arg(short = 'm', default_value_t = 1)]
    pub m: u32,
    #[arg(long, default_value_t = Bounds::default().radius)]
    pub radius: usize,
    #[arg(long = "k-max", default_value_t = Bounds::default().k_max)]
    pub k_max: u32,
    /// Drop the class of the trivial word.
    #[arg(long)]
    pub boundary_fixed: bool,
    /// Also list classes whose degeneracy is unknown.
    #[arg(long)]
    pub permissive: bool,
}

impl Iterated {
    fn bounds(&self) -> Bounds {
        Bounds { radius: self.radius, k_max: self.k_max, ..Bounds::default() }
    }

    fn options(&self) -> ForcingOptions {
        ForcingOptions { bounds: self.bounds(), boundary_fixed: self.boundary_fixed, permissive: self.permissive }
    }

    fn input(&self) -> InputJson {
        InputJson { braid: self.target.braid.clone(), n: self.target.n, m: self.m }
    }
}

/// Process exit status and captured streams.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNKNOWN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match dispatch(&cli.command) {
            Ok(out) => out,
            Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
        },
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            }
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn braid(t: &Target) -> Result<BraidWord, ParseError> {
    parse_braid(t.n, &t.braid)
}

fn dispatch(cmd: &Command) -> Result<Outcome, ParseError> {
    let mut out = Outcome::default();
    let o = &mut out.stdout;
    match cmd {
        Command::Action(t) => {
            let e = braid(t)?.artin();
            if t.json {
                let images: Vec<String> = e.images().iter().map(ToString::to_string).collect();
                *o = to_json(&json!({ "command": "action", "braid": t.braid, "n": t.n, "images": images }));
            } else {
                for (i, w) in e.images().iter().enumerate() {
                    writeln!(o, "x{} -> {w}", i + 1).unwrap();
                }
            }
        }
        Command::Perm(t) => {
            let p = braid(t)?.perm();
            if t.json {
                *o = to_json(&json!({ "command": "perm", "braid": t.braid, "n": t.n, "images": p.images() }));
            } else {
                writeln!(o, "{p}").unwrap();
            }
        }
        Command::Trace(it) => {
            let b = braid(&it.target)?;
            let bounds = it.bounds();
            let trace = reidemeister_trace(&b, it.m, &bounds)?;
            let raw = raw_trace(trace.context.theta()).to_string();
            if it.target.json {
                *o = to_json(&TraceJson::new(it.input(), &bounds, raw, &trace));
            } else {
                writeln!(o, "{trace}").unwrap();
            }
            if !trace.is_resolved() {
                out.code = EXIT_UNKNOWN;
                for (a, b) in &trace.unresolved {
                    writeln!(out.stderr, "unresolved: [{a}] vs [{b}] within radius {}", bounds.radius).unwrap();
                }
            }
        }
        Command::Forced(it) => {
            let report = forced_set(&braid(&it.target)?, it.m, &it.options())?;
            if it.target.json {
                *o = to_json(&ForcedReportJson::new(&it.target.braid, &report));
            } else {
                write_forced(o, &report);
            }
            if !report.exact {
                out.code = EXIT_UNKNOWN;
                writeln!(
                    out.stderr,
                    "inexact: an unknown verdict affected merging or filtering; try a larger --radius or --k-max"
                )
                .unwrap();
            }
        }
        Command::IsForced { it, aug } => {
            let beta = braid(&it.target)?;
            let candidate = parse_aug(it.target.n, aug)?;
            let d = is_forced(&candidate, &beta, it.m, &it.options())?;
            if it.target.json {
                *o = to_json(&json!({
                    "command": "is-forced",
                    "input": it.input(),
                    "candidate": crate::report::AugJson::from(&candidate),
                    "bounds": BoundsJson::from(&it.bounds()),
                    "decision": DecisionJson::from(&d),
                }));
            } else {
                writeln!(o, "{}", d.label()).unwrap();
                match &d {
                    Decision::Yes(a) => writeln!(o, "witness: {a}").unwrap(),
                    Decision::No(c) => {
                        for line in certificate_lines(c) {
                            writeln!(o, "  {line}").unwrap();
                        }
                    }
                    Decision::Unknown { .. } => {}
                }
            }
            unknown_exit(&mut out, &d);
        }
        Command::Degenerate { it, word } => {
            let beta = braid(&it.target)?;
            let families = degenerate_families(&beta, it.m)?;
            let verdict = match word {
                Some(w) => {
                    let gamma = parse_word(it.target.n, w)?;
                    Some(twist_context(&beta, it.m, &it.bounds())?.is_degenerate(&gamma, &families)?)
                }
                None => None,
            };
            if it.target.json {
                let fam: Vec<FamilyJson> = families.iter().map(Into::into).collect();
                *o = to_json(&json!({
                    "command": "degenerate",
                    "input": it.input(),
                    "families": fam,
                    "decision": verdict.as_ref().map(DecisionJson::from),
                }));
            } else {
                if families.is_empty() {
                    writeln!(o, "no degenerate families").unwrap();
                }
                for f in &families {
                    writeln!(o, "strand {}: lambda = {}", f.index, f.lambda).unwrap();
                }
                if let Some(d) = &verdict {
                    writeln!(o, "degenerate: {d}").unwrap();
                }
            }
            if let Some(d) = &verdict {
                unknown_exit(&mut out, d);
            }
        }
        Command::Eq { n, braids, json } => {
            if braids.len() != 2 {
                return Err(ParseError::Usage("eq takes exactly two --braid values"));
            }
            let (a, b) = (parse_braid(*n, &braids[0])?, parse_braid(*n, &braids[1])?);
            let equal = a.braid_eq(&b)?;
            if *json {
                *o = to_json(&json!({ "command": "eq", "n": n, "braids": braids, "equal": equal }));
            } else {
                writeln!(o, "{}", if equal { "equal" } else { "not equal" }).unwrap();
            }
        }
        Command::TwistedConj { it, words } => {
            if words.len() != 2 {
                return Err(ParseError::Usage("twisted-conj takes exactly two --word values"));
            }
            let beta = braid(&it.target)?;
            let ctx = twist_context(&beta, it.m, &it.bounds())?;
            let (u, v) = (parse_word(it.target.n, &words[0])?, parse_word(it.target.n, &words[1])?);
            let d = ctx.twisted_conj(&u, &v)?;
            if it.target.json {
                *o = to_json(&json!({
                    "command": "twisted-conj",
                    "input": it.input(),
                    "words": [u.to_string(), v.to_string()],
                    "labels": [ctx.abelian_invariant(&u)?.0, ctx.abelian_invariant(&v)?.0],
                    "decision": DecisionJson::from(&d),
                }));
            } else {
                writeln!(o, "{d}").unwrap();
            }
            unknown_exit(&mut out, &d);
        }
        Command::Decompose { n, aug, json } => {
            let a = parse_aug(*n, aug)?;
            if *json {
                *o = to_json(&json!({ "command": "decompose", "n": n, "aug": crate::report::AugJson::from(&a) }));
            } else {
                writeln!(o, "{a}").unwrap();
                writeln!(o, "word: {}", a.to_word()).unwrap();
                let images: Vec<String> = (1..=*n)
                    .map(|i| act(a.base(), &braidforce_core::FreeWord::generator(*n, i).unwrap()).unwrap().to_string())
                    .collect();
                writeln!(o, "action: {}", images.join(", ")).unwrap();
            }
        }
    }
    Ok(out)
}

fn unknown_exit(out: &mut Outcome, d: &Decision) {
    if let Decision::Unknown { radius } = d {
        out.code = EXIT_UNKNOWN;
        writeln!(out.stderr, "undecided: no witness within radius {radius}; raise --radius to search further").unwrap();
    }
}

fn write_forced(o: &mut String, r: &braidforce_core::ForcingReport) {
    writeln!(o, "beta = {}  n = {}  m = {}", r.beta, r.beta.strands(), r.m).unwrap();
    writeln!(o, "classes:").unwrap();
    for c in &r.classes {
        let coef = format!("{:+}", c.coefficient);
        writeln!(o, "  {coef:>4}  [{}]  label {}  degenerate: {}", c.representative, c.label, c.degeneracy).unwrap();
    }
    writeln!(o, "forced ({}):", r.forced.len()).unwrap();
    for f in &r.forced {
        writeln!(o, "  {}  =  {}", f.braid, f.braid.to_word()).unwrap();
    }
    for &k in &r.boundary_removed {
        writeln!(o, "removed (boundary fixed): [{}]", r.classes[k].representative).unwrap();
    }
    writeln!(o, "exact: {}", r.exact).unwrap();
}
