//! Exhaustive degree-bound campaigns and conjecture hunts over enumerated or
//! streamed graphs.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::certificate::Certificate;
use super::report::{CampaignResult, CheckOutcome, CheckRecord, Counterexample, GraphRecord, Timings, Verdict};
use crate::criticality::{
    check_degree_bounds, conjecture_double_critical_scan, criticality_report, is_k_sachs_critical,
    is_minimal_k_sachs_critical, BoundCheck, BoundContext, BoundOutcome, CriticalityHypothesis, FactorMode,
    PlanarityHypothesis,
};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs, EdgeRef, Graph, VertexSet, ENUMERATION_LIMIT};
use crate::matching::is_k_factor_critical;
use crate::planarity::{is_planar, planar, verify_degree_lemma, LemmaVariant, PlanarityVerdict};
use crate::sachs::{has_one_two_factor, FactorOutcome};

/// Environment variable consulted when no worker count is configured.
pub const WORKERS_ENV: &str = "SACHS_LAB_WORKERS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    /// One representative per isomorphism class, `n_min..=n_max`.
    Builtin { n_min: usize, n_max: usize },
    /// An explicit list, e.g. read from a graph6 stream.
    Graphs(Vec<Graph>),
}

impl GraphSource {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            GraphSource::Builtin { n_min, n_max } => {
                if *n_max > ENUMERATION_LIMIT {
                    return Err(Error::SizeLimitExceeded {
                        n: *n_max,
                        limit: ENUMERATION_LIMIT,
                    });
                }
                let mut out = Vec::new();
                for n in *n_min..=*n_max {
                    out.extend(enumerate_graphs(n)?);
                }
                Ok(out)
            }
            GraphSource::Graphs(gs) => Ok(gs.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub source: GraphSource,
    /// Upper limit on `k`; `None` scans every meaningful `k`.
    pub k_max: Option<usize>,
    /// `None` defers to `SACHS_LAB_WORKERS`, then to the core count.
    pub workers: Option<usize>,
    /// Per-graph budget; graphs that exceed it are tallied as skipped.
    pub time_budget: Option<Duration>,
}

impl ScanConfig {
    pub fn builtin(n_max: usize) -> Self {
        ScanConfig {
            source: GraphSource::Builtin { n_min: 0, n_max },
            k_max: None,
            workers: None,
            time_budget: None,
        }
    }

    pub fn graphs(graphs: Vec<Graph>) -> Self {
        ScanConfig {
            source: GraphSource::Graphs(graphs),
            ..ScanConfig::builtin(0)
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn resolved_workers(&self) -> usize {
        self.workers
            .or_else(|| std::env::var(WORKERS_ENV).ok().and_then(|v| v.trim().parse().ok()))
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1)
    }

    fn ks(&self, range: impl Iterator<Item = usize>) -> impl Iterator<Item = usize> {
        let cap = self.k_max.unwrap_or(usize::MAX);
        range.filter(move |&k| k <= cap)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Campaign {
    /// Planar graphs with a factor and a breaking edge: `δ <= 3`.
    PlanarBreakingK0,
    /// k-planar k-critical graphs with a breaking edge, `k >= 1`: `k+1 <= δ <= k+2`.
    KPlanarBreaking,
    /// Planar minimal k-critical graphs: `k+1 <= δ <= k+2`.
    PlanarMinimal,
    /// Minimal k-critical graphs with `G - S` planar for `|S| = k-1`.
    DeletionPlanarMinimal,
    /// Minimal k-critical graphs for `k ∈ {0, 1, n-5, .., n-2}`.
    MinimalSmallK,
    /// Every k-critical graph has `δ >= k+1`.
    CriticalLowerBound,
    /// Planar bipartite low-degree lemmas, every variant.
    DegreeLemmaSweep,
}

impl Campaign {
    pub const ALL: [Campaign; 7] = [
        Campaign::PlanarBreakingK0,
        Campaign::KPlanarBreaking,
        Campaign::PlanarMinimal,
        Campaign::DeletionPlanarMinimal,
        Campaign::MinimalSmallK,
        Campaign::CriticalLowerBound,
        Campaign::DegreeLemmaSweep,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Campaign::PlanarBreakingK0 => "planar-breaking-k0",
            Campaign::KPlanarBreaking => "kplanar-breaking",
            Campaign::PlanarMinimal => "planar-minimal",
            Campaign::DeletionPlanarMinimal => "deletion-planar-minimal",
            Campaign::MinimalSmallK => "minimal-small-k",
            Campaign::CriticalLowerBound => "critical-lower-bound",
            Campaign::DegreeLemmaSweep => "degree-lemma-sweep",
        }
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Campaign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownCampaign(s.to_string()))
    }
}

/// Open conjectures. Hunts run without planarity hypotheses, so a
/// counterexample is possible in principle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hunt {
    /// Minimal k-critical graphs have `k+1 <= δ <= k+2`.
    MinimalDegreeWindow,
    /// Minimal t-critical and minimal (t+1)-critical forces completeness.
    DoubleMinimalComplete,
    /// Minimal k-factor-critical graphs have `δ = k+1`.
    FactorCriticalMinDegree,
}

impl Hunt {
    pub const ALL: [Hunt; 3] = [Hunt::MinimalDegreeWindow, Hunt::DoubleMinimalComplete, Hunt::FactorCriticalMinDegree];

    pub fn id(self) -> &'static str {
        match self {
            Hunt::MinimalDegreeWindow => "minimal-degree-window",
            Hunt::DoubleMinimalComplete => "double-minimal-complete",
            Hunt::FactorCriticalMinDegree => "factor-critical-min-degree",
        }
    }
}

impl fmt::Display for Hunt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Hunt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Hunt::ALL
            .into_iter()
            .find(|h| h.id() == s)
            .ok_or_else(|| Error::UnknownCampaign(s.to_string()))
    }
}

/// Per-graph scratch state.
struct Scan {
    deadline: Option<Instant>,
    skipped: bool,
    checks: Vec<CheckRecord>,
    hypothesis_failures: usize,
    certificates: Vec<Certificate>,
    reasons: Vec<String>,
}

impl Scan {
    fn out_of_time(&mut self) -> bool {
        if self.deadline.is_some_and(|d| Instant::now() > d) {
            self.skipped = true;
        }
        self.skipped
    }

    fn record(&mut self, k: Option<usize>, context: String, outcome: CheckOutcome, min_degree: Option<usize>, detail: Option<String>) {
        if outcome == CheckOutcome::HypothesisFail {
            self.hypothesis_failures += 1;
            return;
        }
        self.checks.push(CheckRecord {
            k,
            context,
            outcome,
            min_degree,
            detail,
        });
    }

    fn violation(&mut self, k: Option<usize>, context: String, min_degree: Option<usize>, reason: String) {
        self.record(k, context, CheckOutcome::Violation, min_degree, Some(reason.clone()));
        self.reasons.push(reason);
    }
}

fn drive<F>(id: &str, cfg: &ScanConfig, size_limit: usize, per_graph: F) -> Result<CampaignResult>
where
    F: Fn(&Graph, &ScanConfig, &mut Scan) -> Result<()> + Sync,
{
    let start = Instant::now();
    let graphs = cfg.source.graphs()?;
    if let Some(g) = graphs.iter().find(|g| g.order() > size_limit) {
        return Err(Error::SizeLimitExceeded {
            n: g.order(),
            limit: size_limit,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.resolved_workers())
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    // Indexed parallel collect keeps input order regardless of scheduling.
    let outcomes: Vec<Result<(GraphRecord, Option<Counterexample>)>> = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(index, g)| {
                let began = Instant::now();
                let mut scan = Scan {
                    deadline: cfg.time_budget.map(|b| began + b),
                    skipped: false,
                    checks: Vec::new(),
                    hypothesis_failures: 0,
                    certificates: Vec::new(),
                    reasons: Vec::new(),
                };
                match per_graph(g, cfg, &mut scan) {
                    Ok(()) => {}
                    Err(Error::ContradictionDetected(msg)) => scan.violation(None, id.to_string(), None, msg),
                    Err(e) => return Err(e),
                }
                let verdict = if scan.checks.iter().any(|c| c.outcome == CheckOutcome::Violation) {
                    Verdict::Violation
                } else if scan.skipped {
                    Verdict::Skipped
                } else if scan.checks.is_empty() {
                    Verdict::Vacuous
                } else {
                    Verdict::Pass
                };
                let graph6 = g.to_graph6();
                let counterexample = (!scan.reasons.is_empty()).then(|| Counterexample {
                    index,
                    graph6: graph6.clone(),
                    reason: scan.reasons.join("; "),
                    certificates: scan.certificates.clone(),
                });
                let record = GraphRecord {
                    index,
                    graph6,
                    task: id.to_string(),
                    verdict,
                    checks: scan.checks,
                    hypothesis_failures: scan.hypothesis_failures,
                    certificates: scan.certificates,
                    timings: Timings {
                        elapsed_us: began.elapsed().as_micros() as u64,
                    },
                };
                Ok((record, counterexample))
            })
            .collect()
    });
    let mut records = Vec::with_capacity(outcomes.len());
    let mut counterexamples = Vec::new();
    for outcome in outcomes {
        let (record, cx) = outcome?;
        records.push(record);
        counterexamples.extend(cx);
    }
    Ok(CampaignResult::assemble(
        id,
        records,
        counterexamples,
        start.elapsed().as_millis() as u64,
    ))
}

/// Certificates for the parts of a context's hypothesis that admit one.
fn hypothesis_certificates(g: &Graph, k: usize, check: &BoundCheck) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    if k == 0 {
        if let FactorOutcome::Factor(factor) = has_one_two_factor(g) {
            certs.push(Certificate::Factor { factor });
        }
    }
    if check.context.planarity == PlanarityHypothesis::Planar {
        if let PlanarityVerdict::Planar(rotation) = is_planar(g) {
            certs.push(Certificate::Embedding { rotation });
        }
    }
    match check.context.criticality {
        CriticalityHypothesis::Critical => {}
        CriticalityHypothesis::BreakingEdge => {
            if let Some(edge) = check.breaking_edge {
                if let Some(failure) = is_k_sachs_critical(&g.delete_edge(edge)?, k)?.failure {
                    certs.push(Certificate::BreakingEdge { k, edge, failure });
                }
            }
        }
        CriticalityHypothesis::Minimal => {
            for d in is_minimal_k_sachs_critical(g, k)?.destroying {
                certs.push(Certificate::BreakingEdge {
                    k,
                    edge: d.edge,
                    failure: d.failure,
                });
            }
        }
    }
    Ok(certs)
}

fn bound_scan(g: &Graph, ks: impl Iterator<Item = usize>, context: BoundContext, scan: &mut Scan) -> Result<()> {
    for k in ks {
        if scan.out_of_time() {
            return Ok(());
        }
        let check = check_degree_bounds(g, k, context)?;
        let delta = check.min_degree.map(|d| d.delta);
        match check.outcome {
            BoundOutcome::HypothesisFail(_) => scan.hypothesis_failures += 1,
            BoundOutcome::Pass => scan.record(Some(k), context.to_string(), CheckOutcome::Pass, delta, None),
            BoundOutcome::BoundViolation => {
                let i = check.interval;
                let upper = i.upper.map_or("∞".to_string(), |u| u.to_string());
                let reason = format!(
                    "k = {k}, {context}: δ = {} outside [{}, {upper}]",
                    delta.unwrap_or(0),
                    i.lower
                );
                scan.certificates.extend(hypothesis_certificates(g, k, &check)?);
                scan.violation(Some(k), context.to_string(), delta, reason);
            }
        }
    }
    Ok(())
}

/// `0..=n-2`, the levels at which a graph on `n` vertices can be critical.
fn critical_levels(n: usize) -> std::ops::Range<usize> {
    0..n.saturating_sub(1)
}

fn ctx(criticality: CriticalityHypothesis, planarity: PlanarityHypothesis) -> BoundContext {
    BoundContext::new(criticality, planarity)
}

pub fn run_campaign(campaign: Campaign, cfg: &ScanConfig) -> Result<CampaignResult> {
    use CriticalityHypothesis::*;
    use PlanarityHypothesis::*;
    let id = campaign.id();
    match campaign {
        Campaign::PlanarBreakingK0 => drive(id, cfg, 64, |g, cfg, scan| {
            let ks = cfg.ks((g.order() > 0).then_some(0).into_iter());
            bound_scan(g, ks, ctx(BreakingEdge, Planar), scan)
        }),
        Campaign::KPlanarBreaking => drive(id, cfg, 16, |g, cfg, scan| {
            bound_scan(g, cfg.ks(critical_levels(g.order()).skip(1)), ctx(BreakingEdge, KPlanar), scan)
        }),
        Campaign::PlanarMinimal => drive(id, cfg, 64, |g, cfg, scan| {
            bound_scan(g, cfg.ks(critical_levels(g.order())), ctx(Minimal, Planar), scan)
        }),
        Campaign::DeletionPlanarMinimal => drive(id, cfg, 16, |g, cfg, scan| {
            bound_scan(g, cfg.ks(critical_levels(g.order())), ctx(Minimal, DeletionPlanar), scan)
        }),
        Campaign::MinimalSmallK => drive(id, cfg, 64, |g, cfg, scan| {
            let n = g.order();
            let ks = critical_levels(n).filter(|&k| k <= 1 || k + 5 >= n);
            bound_scan(g, cfg.ks(ks), ctx(Minimal, Any), scan)
        }),
        Campaign::CriticalLowerBound => drive(id, cfg, 64, |g, cfg, scan| {
            bound_scan(g, cfg.ks(0..g.order()), ctx(Critical, Any), scan)
        }),
        Campaign::DegreeLemmaSweep => drive(id, cfg, 64, |g, _, scan| degree_lemma_scan(g, scan)),
    }
}

fn variant_name(v: LemmaVariant) -> &'static str {
    match v {
        LemmaVariant::Balanced => "balanced",
        LemmaVariant::ChordSurplus => "chord-surplus",
        LemmaVariant::Deficit => "deficit",
        LemmaVariant::ChordNearBalanced => "chord-near-balanced",
    }
}

/// Every proper 2-coloring `(A, B)` of a planar bipartite graph, every
/// variant whose balance condition the sizes meet, and for chord variants
/// every chord added inside `A`.
fn degree_lemma_scan(g: &Graph, scan: &mut Scan) -> Result<()> {
    let n = g.order();
    if n < 3 || !g.is_bipartite() || !planar(g) {
        scan.hypothesis_failures += 1;
        return Ok(());
    }
    let all = (1u64 << n) - 1;
    for a_mask in 0..=all {
        let a = VertexSet::from_mask(n, a_mask);
        let b = a.complement();
        if !g.is_independent(&a) || !g.is_independent(&b) {
            continue;
        }
        for variant in LemmaVariant::ALL {
            if !variant.sizes_fit(a.len(), b.len()) {
                continue;
            }
            let chords: Vec<Option<EdgeRef>> = if variant.needs_chord() {
                let members = a.to_vec();
                members
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &u)| members[i + 1..].iter().map(move |&v| Some(EdgeRef::new(u, v))))
                    .collect()
            } else {
                vec![None]
            };
            for chord in chords {
                if scan.out_of_time() {
                    return Ok(());
                }
                let h = match chord {
                    Some(e) => g.with_edge(e.u, e.v)?,
                    None => g.clone(),
                };
                let label = match chord {
                    Some(e) => format!("{} A={a} chord={e}", variant_name(variant)),
                    None => format!("{} A={a}", variant_name(variant)),
                };
                match verify_degree_lemma(&h, &a, &b, variant, chord) {
                    Ok(r) => scan.record(None, label, CheckOutcome::Pass, Some(r.low_degree), None),
                    Err(Error::HypothesisViolated(_)) => scan.hypothesis_failures += 1,
                    Err(Error::ContradictionDetected(msg)) => scan.violation(None, label, None, msg),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(())
}

pub fn run_hunt(hunt: Hunt, cfg: &ScanConfig) -> Result<CampaignResult> {
    let id = hunt.id();
    match hunt {
        Hunt::MinimalDegreeWindow => drive(id, cfg, 64, |g, cfg, scan| {
            let context = ctx(CriticalityHypothesis::Minimal, PlanarityHypothesis::Any);
            bound_scan(g, cfg.ks(critical_levels(g.order())), context, scan)
        }),
        Hunt::DoubleMinimalComplete => drive(id, cfg, 64, |g, cfg, scan| double_minimal_scan(g, cfg, scan)),
        Hunt::FactorCriticalMinDegree => drive(id, cfg, 64, factor_critical_scan),
    }
}

fn double_minimal_scan(g: &Graph, cfg: &ScanConfig, scan: &mut Scan) -> Result<()> {
    let report = conjecture_double_critical_scan(g);
    let levels: Vec<usize> = report
        .double_levels
        .iter()
        .copied()
        .filter(|&t| cfg.k_max.map_or(true, |cap| t + 1 <= cap))
        .collect();
    if levels.is_empty() {
        scan.hypothesis_failures += 1;
        return Ok(());
    }
    let delta = g.min_degree().map(|d| d.0);
    for &t in &levels {
        for k in [t, t + 1] {
            if scan.out_of_time() {
                return Ok(());
            }
            for d in is_minimal_k_sachs_critical(g, k)?.destroying {
                scan.certificates.push(Certificate::BreakingEdge {
                    k,
                    edge: d.edge,
                    failure: d.failure,
                });
            }
        }
        let context = format!("minimal at t = {t} and t + 1 = {}", t + 1);
        if report.complete {
            scan.record(Some(t), context, CheckOutcome::Pass, delta, None);
        } else {
            let reason = format!("minimal {t}- and {}-critical but not complete", t + 1);
            scan.violation(Some(t), context, delta, reason);
        }
    }
    Ok(())
}

fn factor_critical_scan(g: &Graph, cfg: &ScanConfig, scan: &mut Scan) -> Result<()> {
    let n = g.order();
    for k in cfg.ks(critical_levels(n).filter(|k| (n - k) % 2 == 0)) {
        if scan.out_of_time() {
            return Ok(());
        }
        let report = criticality_report(g, k, FactorMode::PerfectMatching, true)?;
        if !report.is_critical || report.is_minimal != Some(true) {
            scan.hypothesis_failures += 1;
            continue;
        }
        let delta = report.min_degree.map(|d| d.delta);
        let context = "minimal k-factor-critical".to_string();
        if delta == Some(k + 1) {
            scan.record(Some(k), context, CheckOutcome::Pass, delta, None);
            continue;
        }
        for edge in g.edges().collect::<Vec<_>>() {
            if let Some(failure) = is_k_factor_critical(&g.delete_edge(edge)?, k)?.failure {
                scan.certificates.push(Certificate::MatchingBreakingEdge { k, edge, failure });
            }
        }
        let reason = format!("k = {k}: minimal k-factor-critical with δ = {} ≠ k + 1", delta.unwrap_or(0));
        scan.violation(Some(k), context, delta, reason);
    }
    Ok(())
}

/// Shape of the graphs sought by [`find_extremal_examples`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalProfile {
    pub k: usize,
    /// Required `δ - k`.
    pub gap: usize,
    pub criticality: CriticalityHypothesis,
    pub planarity: PlanarityHypothesis,
}

/// Every graph (one per isomorphism class) on at most `n_max` vertices
/// meeting the profile's hypotheses with `δ = k + gap`.
pub fn find_extremal_examples(profile: ExtremalProfile, n_max: usize) -> Result<Vec<Graph>> {
    let graphs = GraphSource::Builtin {
        n_min: profile.k + 1,
        n_max,
    }
    .graphs()?;
    let context = BoundContext::new(profile.criticality, profile.planarity);
    let hits: Vec<Result<Option<Graph>>> = graphs
        .into_par_iter()
        .map(|g| {
            let check = check_degree_bounds(&g, profile.k, context)?;
            let fits = !matches!(check.outcome, BoundOutcome::HypothesisFail(_))
                && check.min_degree.map(|d| d.delta) == Some(profile.k + profile.gap);
            Ok(fits.then_some(g))
        })
        .collect();
    hits.into_iter().filter_map(Result::transpose).collect()
}
