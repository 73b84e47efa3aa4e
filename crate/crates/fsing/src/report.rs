//! JSON report envelopes. Reports are deterministic: identical inputs and
//! flags produce byte-identical output (struct field order is fixed, work
//! metrics are deterministic counters, wall-clock never enters the JSON).

use crate::classify::ClassificationReport;
use crate::cohomology::AgreementReport;
use crate::deform::CertifyOutcome;
use crate::input::RingInput;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct VarDecl {
    pub name: String,
    pub weight: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementDecl {
    pub name: String,
    pub expr: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub file: String,
    pub characteristic: u32,
    pub vars: Vec<VarDecl>,
    pub order: String,
    pub ideal: Vec<String>,
    pub elements: Vec<ElementDecl>,
}

pub fn input_echo(file: &str, input: &RingInput) -> InputEcho {
    let ring = &input.ring;
    InputEcho {
        file: file.to_string(),
        characteristic: ring.p(),
        vars: ring
            .vars()
            .iter()
            .zip(ring.weights())
            .map(|(n, w)| VarDecl { name: n.clone(), weight: *w })
            .collect(),
        order: "grevlex".to_string(),
        ideal: input.ideal.gens().iter().map(|g| ring.poly_string(g)).collect(),
        elements: input
            .elements
            .iter()
            .map(|(n, p)| ElementDecl { name: n.clone(), expr: ring.poly_string(p) })
            .collect(),
    }
}

/// Seed echoed into reports, from `FSING_SEED` when set.
pub fn seed_from_env() -> Option<u64> {
    std::env::var("FSING_SEED").ok().and_then(|s| s.parse().ok())
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyJson {
    pub schema: u32,
    pub tool: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub classification: ClassificationReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeformJson {
    pub schema: u32,
    pub tool: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub input: InputEcho,
    pub element: String,
    pub target: String,
    pub result: CertifyOutcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleCheckJson {
    pub schema: u32,
    pub tool: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub input: InputEcho,
    pub index: usize,
    pub window: (i64, i64),
    pub stage: usize,
    pub agreement: AgreementReport,
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AssertionJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproduceJson {
    pub schema: u32,
    pub tool: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub fixture: String,
    pub assertions: Vec<AssertionJson>,
    pub all_passed: bool,
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization cannot fail");
    s.push('\n');
    s
}
