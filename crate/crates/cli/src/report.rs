//! JSON payloads. Every top-level report starts with `"schema": 1`; field
//! order is the declaration order below.

use serde::Serialize;

use pursuit_core::characterizations::{BoundAudit, GammaMethod};
use pursuit_core::{Certificate, EliminationRecord, GammaEvidence, Girth, Placement};

pub const SCHEMA: u32 = 1;

/// Girth as a number, or `"inf"` for forests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GirthJson {
    Finite(usize),
    Infinite(&'static str),
}

impl From<Girth> for GirthJson {
    fn from(g: Girth) -> Self {
        match g.finite() {
            Some(k) => GirthJson::Finite(k),
            None => GirthJson::Infinite("inf"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PlacementJson {
    pub cops: Vec<usize>,
    pub robber: usize,
}

impl From<&Placement> for PlacementJson {
    fn from(p: &Placement) -> Self {
        PlacementJson { cops: p.cops.clone(), robber: p.robber }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub schema: u32,
    pub graph: String,
    pub game: &'static str,
    pub max_cops: usize,
    /// Least winning cop count, `null` if above `max_cops`.
    pub value: Option<usize>,
    pub winning_placement: Option<PlacementJson>,
    /// Cop moves to capture from the winning placement.
    pub d0: Option<u32>,
    pub states_explored: u64,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaJson {
    /// `"exact"` or `"at_least"`.
    pub relation: &'static str,
    pub value: usize,
    /// How an `at_least` value was obtained.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<&'static str>,
}

impl From<GammaEvidence> for GammaJson {
    fn from(e: GammaEvidence) -> Self {
        match e {
            GammaEvidence::Exact(value) => GammaJson { relation: "exact", value, method: None },
            GammaEvidence::AtLeast { value, method } => GammaJson {
                relation: "at_least",
                value,
                method: Some(match method {
                    GammaMethod::CountingBound => "counting_bound",
                    GammaMethod::ExhaustiveSearch => "exhaustive_search",
                }),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PremisesJson {
    pub girth: GirthJson,
    pub min_degree: usize,
    pub gamma: GammaJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub lemma: &'static str,
    pub source: Option<String>,
    pub target: String,
    pub premises: PremisesJson,
    /// `cc(target) >= bound`.
    pub bound: usize,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            lemma: c.lemma.as_str(),
            source: c.source.clone(),
            target: c.target.clone(),
            premises: PremisesJson { girth: c.girth.into(), min_degree: c.min_degree, gamma: c.gamma.into() },
            bound: c.bound,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub dominated: usize,
    pub dominator: usize,
}

/// `final_gamma` is a number up to 2, otherwise the string `"greater"`.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum FinalGamma {
    Value(usize),
    Greater(&'static str),
}

#[derive(Clone, Debug, Serialize)]
pub struct EliminationJson {
    pub order: Vec<usize>,
    pub witnesses: Vec<WitnessJson>,
    pub final_size: usize,
    pub final_gamma: FinalGamma,
}

impl From<&EliminationRecord> for EliminationJson {
    fn from(r: &EliminationRecord) -> Self {
        EliminationJson {
            order: r.order.clone(),
            witnesses: r.witnesses.iter().map(|w| WitnessJson { dominated: w.dominated, dominator: w.dominator }).collect(),
            final_size: r.final_size,
            final_gamma: r.final_gamma.map_or(FinalGamma::Greater("greater"), FinalGamma::Value),
        }
    }
}

/// Upper bound `cc(target) <= 2 c(target)` from a classic solve.
#[derive(Clone, Debug, Serialize)]
pub struct UpperJson {
    pub cop_number: Option<usize>,
    pub bound: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    pub schema: u32,
    pub lemma: &'static str,
    pub graph: String,
    pub applies: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elimination: Option<EliminationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<UpperJson>,
    /// Exact attacking cop number of the target when both bounds meet.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attacking_cop_number: Option<usize>,
}

impl CertifyReport {
    pub fn new(lemma: &'static str, graph: &str) -> Self {
        CertifyReport {
            schema: SCHEMA,
            lemma,
            graph: graph.to_string(),
            applies: false,
            reason: None,
            certificate: None,
            value: None,
            elimination: None,
            upper: None,
            attacking_cop_number: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructReport {
    pub schema: u32,
    pub op: &'static str,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub n: usize,
    pub m: usize,
    pub girth: GirthJson,
    pub min_degree: usize,
    pub max_degree: usize,
    pub bipartite: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TightCertificate {
    pub certificate: CertificateJson,
    /// Whether the bound equals the solved `cc`; `null` when `cc` is unknown.
    pub tight: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub c: Option<usize>,
    pub cc: Option<usize>,
    pub gamma: usize,
    pub certificates: Vec<TightCertificate>,
    pub triangle_free_cc_at_most_2: Option<bool>,
    pub violations: Vec<String>,
}

impl AuditEntry {
    pub fn new(index: usize, graph6: String, n: usize, m: usize, audit: &BoundAudit) -> Self {
        AuditEntry {
            index,
            graph6,
            n,
            m,
            c: audit.cop_number,
            cc: audit.attacking_cop_number,
            gamma: audit.domination_number,
            certificates: audit
                .certificates
                .iter()
                .map(|(c, tight)| TightCertificate { certificate: c.into(), tight: *tight })
                .collect(),
            triangle_free_cc_at_most_2: audit.triangle_free_cc_at_most_2,
            violations: audit.violations.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub schema: u32,
    pub corpus: String,
    pub max_cops: usize,
    pub graphs: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<AuditEntry>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundJson {
    pub round: usize,
    pub cops: Vec<usize>,
    pub robber: Option<usize>,
    pub attacked: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceOutcomeJson {
    /// `"captured"`, `"cops_eliminated"` or `"survived"`.
    pub kind: &'static str,
    pub rounds: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceJson {
    pub schema: u32,
    pub graph: Option<String>,
    pub game: &'static str,
    pub start: PlacementJson,
    pub rounds: Vec<RoundJson>,
    pub outcome: TraceOutcomeJson,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}
