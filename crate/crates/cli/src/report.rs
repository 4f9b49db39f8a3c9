use std::collections::BTreeMap;

use serde::Serialize;

use e2top::pi1::TrivialityCertificate;
use e2top::HomologyGroup;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyEntry {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<u64>,
    pub display: String,
}

impl HomologyEntry {
    pub fn new(degree: usize, h: &HomologyGroup) -> Self {
        HomologyEntry { degree, betti: h.betti, torsion: h.torsion_u64(), display: h.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub model: String,
    /// Basis sizes of the chain complex per degree.
    pub simplex_counts: Vec<usize>,
    pub homology: Vec<HomologyEntry>,
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1Report {
    pub verdict: String,
    pub witnesses: Vec<String>,
    pub abelianization: HomologyEntry,
    pub generators: usize,
    pub relators: usize,
    pub simplified_generators: usize,
    pub simplified_relators: usize,
}

impl Pi1Report {
    pub fn new(cert: &TrivialityCertificate, generators: usize, relators: usize) -> Self {
        Pi1Report {
            verdict: cert.verdict.to_string(),
            witnesses: cert.witnesses.iter().map(ToString::to_string).collect(),
            abelianization: HomologyEntry::new(1, &cert.abelianization),
            generators,
            relators,
            simplified_generators: cert.simplified_generators,
            simplified_relators: cert.simplified_relators,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub is_abelian: bool,
    pub is_tc: bool,
    pub max_dim: usize,
    pub complete: bool,
    pub models: Vec<ModelReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi1: Option<Pi1Report>,
    /// Milliseconds per phase.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub group: String,
    pub order: usize,
    pub is_abelian: bool,
    pub pi1_verdict: String,
    pub witnesses: Vec<String>,
    /// Reduced homology of `E(2, G)` in each computed degree.
    pub reduced_homology: Vec<HomologyEntry>,
    pub acyclic: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub schema: u32,
    pub catalog: String,
    pub max_dim: usize,
    pub groups: Vec<TheoremRow>,
    pub all_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub schema: u32,
    pub group: String,
    pub max_deg: usize,
    pub models: Vec<ModelReport>,
    /// Degrees where the reduced homology of some pair of models differs.
    pub differing_degrees: Vec<usize>,
    pub agree: bool,
}

pub fn homology_line(entries: &[HomologyEntry]) -> String {
    entries.iter().map(|h| format!("H{}={}", h.degree, h.display)).collect::<Vec<_>>().join("  ")
}
