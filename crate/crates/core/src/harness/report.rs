use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::certificate::Certificate;

pub const SCHEMA: &str = "sachs-lab/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    HypothesisFail,
    Violation,
}

/// One hypothesis/conclusion check on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub k: Option<usize>,
    /// Context, lemma variant or conjecture tested.
    pub context: String,
    pub outcome: CheckOutcome,
    pub min_degree: Option<usize>,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// At least one check met its hypothesis and none violated.
    Pass,
    /// No check met its hypothesis.
    Vacuous,
    Violation,
    /// The time budget ran out before every check finished.
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Timings {
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: usize,
    pub graph6: String,
    pub task: String,
    pub verdict: Verdict,
    /// Checks whose hypothesis held; failed hypotheses are only counted.
    pub checks: Vec<CheckRecord>,
    pub hypothesis_failures: usize,
    pub certificates: Vec<Certificate>,
    pub timings: Timings,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: usize,
    pub graph6: String,
    pub reason: String,
    pub certificates: Vec<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignResult {
    pub schema: String,
    pub campaign: String,
    pub graphs_scanned: usize,
    pub checks: usize,
    pub hypothesis_satisfied: usize,
    pub passes: usize,
    pub violations: usize,
    pub hypothesis_failures: usize,
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
    pub records: Vec<GraphRecord>,
    pub wall_time_ms: u64,
    /// SHA-256 over everything above except timings.
    pub digest: String,
}

#[derive(Serialize)]
struct DigestView<'a> {
    schema: &'a str,
    campaign: &'a str,
    graphs_scanned: usize,
    checks: usize,
    hypothesis_satisfied: usize,
    passes: usize,
    violations: usize,
    hypothesis_failures: usize,
    skipped: usize,
    counterexamples: &'a [Counterexample],
    records: Vec<RecordView<'a>>,
}

#[derive(Serialize)]
struct RecordView<'a> {
    index: usize,
    graph6: &'a str,
    task: &'a str,
    verdict: Verdict,
    checks: &'a [CheckRecord],
    hypothesis_failures: usize,
    certificates: &'a [Certificate],
}

impl CampaignResult {
    /// Tallies `records` (already in input order) and seals the digest.
    pub fn assemble(campaign: &str, records: Vec<GraphRecord>, counterexamples: Vec<Counterexample>, wall_time_ms: u64) -> Self {
        let all_checks = records.iter().map(|r| r.checks.len() + r.hypothesis_failures);
        let count = |o: CheckOutcome| records.iter().flat_map(|r| &r.checks).filter(|c| c.outcome == o).count();
        let passes = count(CheckOutcome::Pass);
        let violations = count(CheckOutcome::Violation);
        let mut result = CampaignResult {
            schema: SCHEMA.to_string(),
            campaign: campaign.to_string(),
            graphs_scanned: records.len(),
            checks: all_checks.sum(),
            hypothesis_satisfied: passes + violations,
            passes,
            violations,
            hypothesis_failures: records.iter().map(|r| r.hypothesis_failures).sum(),
            skipped: records.iter().filter(|r| r.verdict == Verdict::Skipped).count(),
            counterexamples,
            records,
            wall_time_ms,
            digest: String::new(),
        };
        result.digest = result.compute_digest();
        result
    }

    pub fn compute_digest(&self) -> String {
        let view = DigestView {
            schema: &self.schema,
            campaign: &self.campaign,
            graphs_scanned: self.graphs_scanned,
            checks: self.checks,
            hypothesis_satisfied: self.hypothesis_satisfied,
            passes: self.passes,
            violations: self.violations,
            hypothesis_failures: self.hypothesis_failures,
            skipped: self.skipped,
            counterexamples: &self.counterexamples,
            records: self
                .records
                .iter()
                .map(|r| RecordView {
                    index: r.index,
                    graph6: &r.graph6,
                    task: &r.task,
                    verdict: r.verdict,
                    checks: &r.checks,
                    hypothesis_failures: r.hypothesis_failures,
                    certificates: &r.certificates,
                })
                .collect(),
        };
        let bytes = serde_json::to_vec(&view).expect("report types serialize");
        hex::encode(Sha256::digest(bytes))
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.violations == 0
    }

    /// Tallies only, for comparing runs over the same graph set.
    pub fn tallies(&self) -> [usize; 7] {
        [
            self.graphs_scanned,
            self.checks,
            self.hypothesis_satisfied,
            self.passes,
            self.violations,
            self.hypothesis_failures,
            self.skipped,
        ]
    }
}
