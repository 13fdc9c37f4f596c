//! JSON documents emitted with `--json`.
//!
//! Key order follows field order, so equal inputs serialize to equal bytes.

use braidforce_core::forcing::ForcingReport;
use braidforce_core::nielsen::{Certificate, DegenerateFamily, EssentialClass};
use braidforce_core::{AugBraid, Bounds, Decision, ReidemeisterTrace};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

/// Small coefficients as JSON numbers, the rest as decimal strings.
pub fn coefficient(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

#[derive(Debug, Serialize)]
pub struct BoundsJson {
    pub radius: usize,
    pub k_max: u32,
    pub max_braid_len: usize,
}

impl From<&Bounds> for BoundsJson {
    fn from(b: &Bounds) -> Self {
        BoundsJson { radius: b.radius, k_max: b.k_max, max_braid_len: b.max_braid_len }
    }
}

#[derive(Debug, Serialize)]
pub struct DecisionJson {
    pub verdict: &'static str,
    pub witness: Option<String>,
    pub detail: String,
}

impl From<&Decision> for DecisionJson {
    fn from(d: &Decision) -> Self {
        let detail = match d {
            Decision::Yes(_) => String::new(),
            Decision::No(c) => c.to_string(),
            Decision::Unknown { radius } => format!("no witness within radius {radius}"),
        };
        DecisionJson { verdict: d.label(), witness: d.witness().map(ToString::to_string), detail }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassJson {
    pub coefficient: Value,
    pub representative: String,
    pub degeneracy: DecisionJson,
    pub abelian_label: Vec<i64>,
}

impl From<&EssentialClass> for ClassJson {
    fn from(c: &EssentialClass) -> Self {
        ClassJson {
            coefficient: coefficient(&c.coefficient),
            representative: c.representative.to_string(),
            degeneracy: (&c.degeneracy).into(),
            abelian_label: c.label.0.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PairJson {
    pub braid: String,
    pub word: String,
}

#[derive(Debug, Serialize)]
pub struct AugJson {
    pub pair: PairJson,
    pub text: String,
    /// Realization as a word on `n + 1` strands.
    pub word: String,
}

impl From<&AugBraid> for AugJson {
    fn from(a: &AugBraid) -> Self {
        AugJson {
            pair: PairJson { braid: a.base().to_string(), word: a.tail().to_string() },
            text: a.to_string(),
            word: a.to_word().to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ForcedJson {
    #[serde(flatten)]
    pub braid: AugJson,
    pub coefficient: Value,
}

#[derive(Debug, Serialize)]
pub struct InputJson {
    pub braid: String,
    pub n: usize,
    pub m: u32,
}

#[derive(Debug, Serialize)]
pub struct ForcedReportJson {
    pub command: &'static str,
    pub input: InputJson,
    pub n: usize,
    pub m: u32,
    pub bounds: BoundsJson,
    pub boundary_fixed: bool,
    pub permissive: bool,
    pub classes: Vec<ClassJson>,
    pub forced: Vec<ForcedJson>,
    pub boundary_removed: Vec<String>,
    pub unresolved: Vec<[String; 2]>,
    pub exact: bool,
}

impl ForcedReportJson {
    pub fn new(input: &str, r: &ForcingReport) -> Self {
        let n = r.beta.strands();
        ForcedReportJson {
            command: "forced",
            input: InputJson { braid: input.to_owned(), n, m: r.m },
            n,
            m: r.m,
            bounds: (&r.options.bounds).into(),
            boundary_fixed: r.options.boundary_fixed,
            permissive: r.options.permissive,
            classes: r.classes.iter().map(Into::into).collect(),
            forced: r
                .forced
                .iter()
                .map(|f| ForcedJson { braid: (&f.braid).into(), coefficient: coefficient(&f.coefficient) })
                .collect(),
            boundary_removed: r.boundary_removed.iter().map(|&k| r.classes[k].representative.to_string()).collect(),
            unresolved: unresolved(&r.unresolved),
            exact: r.exact,
        }
    }
}

fn unresolved(pairs: &[(braidforce_core::FreeWord, braidforce_core::FreeWord)]) -> Vec<[String; 2]> {
    pairs.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect()
}

#[derive(Debug, Serialize)]
pub struct SummandJson {
    pub coefficient: Value,
    pub representative: String,
}

#[derive(Debug, Serialize)]
pub struct TraceJson {
    pub command: &'static str,
    pub input: InputJson,
    pub bounds: BoundsJson,
    pub raw: String,
    pub trace: String,
    pub summands: Vec<SummandJson>,
    pub unresolved: Vec<[String; 2]>,
}

impl TraceJson {
    pub fn new(input: InputJson, bounds: &Bounds, raw: String, t: &ReidemeisterTrace) -> Self {
        TraceJson {
            command: "trace",
            input,
            bounds: bounds.into(),
            raw,
            trace: t.to_string(),
            summands: t
                .summands
                .iter()
                .map(|s| SummandJson {
                    coefficient: coefficient(&s.coefficient),
                    representative: s.representative.to_string(),
                })
                .collect(),
            unresolved: unresolved(&t.unresolved),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FamilyJson {
    pub strand: usize,
    pub lambda: String,
}

impl From<&DegenerateFamily> for FamilyJson {
    fn from(f: &DegenerateFamily) -> Self {
        FamilyJson { strand: f.index, lambda: f.lambda.to_string() }
    }
}

/// Flattens nested certificates for display.
pub fn certificate_lines(c: &Certificate) -> Vec<String> {
    match c {
        Certificate::Exhaustive(v) => v.iter().map(ToString::to_string).collect(),
        other => vec![other.to_string()],
    }
}
