//! The machine-readable verification report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arithmetic::FactReport;
use crate::constructions::FamilyMatch;
use crate::solver::NonHamWitness;

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunKind {
    Exhaustive,
    Sample,
    Tightness,
    Characterization,
    Facts,
}

/// One shard of a run: the first `log2(count)` cross-part pairs are fixed
/// to the bits of `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shard {
    pub index: u64,
    pub count: u64,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn bits(&self) -> u32 {
        self.count.trailing_zeros()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunParameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Minimum degree imposed on enumerated or sampled graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_floor: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub required_degree: Option<i64>,
    /// Number of cross-part vertex pairs; the edge-subset space has
    /// `2^edge_pairs` elements.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_pairs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shard: Option<Shard>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_max: Option<usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    /// Graphs that met the degree floor and were examined.
    pub graphs_enumerated: u64,
    /// Examined graphs whose minimum degree reaches the required degree.
    pub graphs_above_threshold: u64,
    pub hamiltonian_found: u64,
    pub non_hamiltonian: u64,
    /// Non-Hamiltonian graphs for which a checked certificate was produced.
    pub witnesses_found: u64,
}

impl Counters {
    pub fn add(&mut self, o: &Counters) {
        self.graphs_enumerated += o.graphs_enumerated;
        self.graphs_above_threshold += o.graphs_above_threshold;
        self.hamiltonian_found += o.hamiltonian_found;
        self.non_hamiltonian += o.non_hamiltonian;
        self.witnesses_found += o.witnesses_found;
    }
}

/// A recorded graph in the partition-header-plus-graph6 format.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphRecord {
    pub graph: String,
    pub min_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NonHamWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<FamilyMatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// One `(k, m)` row of a tightness scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessRow {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub threshold: i64,
    pub min_degree: usize,
    pub certificate_size: usize,
    pub certificate_valid: bool,
    /// Present when the exact solver was run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver_non_hamiltonian: Option<bool>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub artifact_version: String,
    pub kind: RunKind,
    pub parameters: RunParameters,
    pub counters: Counters,
    /// Graphs that break the property the run asserts.
    pub counterexamples: Vec<GraphRecord>,
    /// Non-Hamiltonian graphs that the theorem allows (below the required
    /// degree), classified when the run does so.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exceptional: Vec<GraphRecord>,
    /// Count of exceptional graphs per class, over all labelled graphs.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub classification_counts: BTreeMap<String, u64>,
    /// Isomorphism classes among the exceptional graphs, when deduplicated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinct_exceptional: Option<u64>,
    /// Exceptional graphs beyond the listing limit.
    #[serde(default)]
    pub exceptional_truncated: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tightness: Vec<TightnessRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facts: Option<FactReport>,
    /// Every recorded graph was re-decoded and re-solved with the same result.
    pub self_check_passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Only present when timing was requested, so that repeated runs
    /// produce identical reports otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(kind: RunKind, parameters: RunParameters) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            kind,
            parameters,
            counters: Counters::default(),
            counterexamples: Vec::new(),
            exceptional: Vec::new(),
            classification_counts: BTreeMap::new(),
            distinct_exceptional: None,
            exceptional_truncated: 0,
            tightness: Vec::new(),
            facts: None,
            self_check_passed: true,
            notes: Vec::new(),
            wall_time_ms: None,
        }
    }

    /// No counterexamples, no fact violations, and the embedded self-check
    /// passed.
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.self_check_passed && self.facts.as_ref().is_none_or(FactReport::is_clean)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::Parse(e.to_string()))
    }

    /// Combines per-shard reports of the same run. Counters add, listings
    /// are merged in sorted order, so the result does not depend on the
    /// order of the inputs.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.counters.add(&other.counters);
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.exceptional.extend(other.exceptional);
        self.exceptional.sort();
        for (c, v) in other.classification_counts {
            *self.classification_counts.entry(c).or_default() += v;
        }
        self.exceptional_truncated += other.exceptional_truncated;
        self.self_check_passed &= other.self_check_passed;
        self.notes.extend(other.notes);
        self.notes.sort();
        self.notes.dedup();
        self
    }

    pub fn summary_line(&self) -> String {
        let c = &self.counters;
        format!(
            "{:?}: {} graphs, {} Hamiltonian, {} non-Hamiltonian, {} counterexamples, {} exceptional{}",
            self.kind,
            c.graphs_enumerated,
            c.hamiltonian_found,
            c.non_hamiltonian,
            self.counterexamples.len(),
            self.exceptional.len() as u64 + self.exceptional_truncated,
            if self.passed() { "; PASS" } else { "; FAIL" }
        )
    }
}
