//! k-{1,2}-factor-criticality, minimality, and minimum-degree bounds under
//! planarity hypotheses.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{combinations, EdgeRef, Graph, VertexSet};
use crate::matching::{is_k_factor_critical, perfect_matching_within, FactorCriticalFailure};
use crate::planarity::{is_k_planar, planar};
use crate::sachs::{deficiency_from_hall, factor_exists_within, has_one_two_factor, DeficiencyCertificate, FactorOutcome};

/// Which spanning structure must survive every k-deletion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorMode {
    /// {1,2}-factors.
    Sachs,
    /// Perfect matchings (classical k-factor-criticality).
    PerfectMatching,
}

impl fmt::Display for FactorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorMode::Sachs => "sachs",
            FactorMode::PerfectMatching => "perfect_matching",
        })
    }
}

fn check_order(n: usize, k: usize) -> Result<()> {
    if k >= n {
        return Err(Error::KOutOfRange { k, n });
    }
    if n > 64 {
        return Err(Error::SizeLimitExceeded { n, limit: 64 });
    }
    Ok(())
}

/// First k-subset (lexicographic) whose deletion leaves no factor of the
/// given kind.
pub(crate) fn failing_subset(masks: &[u64], k: usize, mode: FactorMode) -> Option<u64> {
    let n = masks.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if mode == FactorMode::PerfectMatching && (n - k) % 2 == 1 {
        return combinations(n, k).next();
    }
    combinations(n, k).find(|&s| match mode {
        FactorMode::Sachs => !factor_exists_within(masks, all & !s),
        FactorMode::PerfectMatching => !perfect_matching_within(masks, all & !s),
    })
}

/// First edge (lexicographic) whose removal keeps the graph k-critical.
pub(crate) fn removable_edge(masks: &[u64], k: usize, mode: FactorMode) -> Option<EdgeRef> {
    let mut h = masks.to_vec();
    for u in 0..masks.len() {
        let mut later = masks[u] & !((2u64 << u) - 1);
        while later != 0 {
            let v = later.trailing_zeros() as usize;
            later &= later - 1;
            h[u] &= !(1 << v);
            h[v] &= !(1 << u);
            let still = failing_subset(&h, k, mode).is_none();
            h[u] |= 1 << v;
            h[v] |= 1 << u;
            if still {
                return Some(EdgeRef::new(u, v));
            }
        }
    }
    None
}

/// A k-set whose deletion destroys every {1,2}-factor, with the deficiency
/// certificate found inside `G - S` and its lift to a k-level certificate
/// of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityFailure {
    pub deleted: VertexSet,
    /// Certificate set inside `G - deleted`, in the labels of `G`.
    pub inner: VertexSet,
    /// `deleted ∪ inner` with `i(G - set) > |set| - k`.
    pub certificate: DeficiencyCertificate,
}

impl CriticalityFailure {
    pub fn verify(&self, g: &Graph, k: usize) -> std::result::Result<(), String> {
        if self.deleted.len() != k || self.certificate.k != k {
            return Err(format!("deleted set has size {}, expected {k}", self.deleted.len()));
        }
        if !self.deleted.is_disjoint(&self.inner) || self.deleted.union(&self.inner) != self.certificate.set {
            return Err("certificate set is not deleted ∪ inner".into());
        }
        self.certificate.verify(g)?;
        let (h, map) = g.delete_vertices(&self.deleted);
        let inner_local = VertexSet::from_members(
            h.order(),
            (0..h.order()).filter(|&v| self.inner.contains(map.lift(v))),
        );
        DeficiencyCertificate {
            set: inner_local,
            isolated: self.certificate.isolated,
            k: 0,
        }
        .verify(&h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityVerdict {
    pub k: usize,
    pub critical: bool,
    pub failure: Option<CriticalityFailure>,
}

fn certify_failure(g: &Graph, k: usize, deleted: VertexSet) -> CriticalityFailure {
    let (h, map) = g.delete_vertices(&deleted);
    let FactorOutcome::Violator(violator) = has_one_two_factor(&h) else {
        unreachable!("mask test and certified test disagree on {}", h.to_graph6())
    };
    let local = deficiency_from_hall(&h, &violator).expect("Hall violator converts");
    let inner = map.lift_set(&local.set);
    CriticalityFailure {
        certificate: DeficiencyCertificate {
            set: deleted.union(&inner),
            isolated: local.isolated,
            k,
        },
        deleted,
        inner,
    }
}

/// Whether `G - S` has a {1,2}-factor for every `|S| = k`.
pub fn is_k_sachs_critical(g: &Graph, k: usize) -> Result<CriticalityVerdict> {
    let n = g.order();
    check_order(n, k)?;
    Ok(match failing_subset(&g.masks(), k, FactorMode::Sachs) {
        None => CriticalityVerdict {
            k,
            critical: true,
            failure: None,
        },
        Some(s) => CriticalityVerdict {
            k,
            critical: false,
            failure: Some(certify_failure(g, k, VertexSet::from_mask(n, s))),
        },
    })
}

/// An edge together with the failure that `G - e` exhibits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDestruction {
    pub edge: EdgeRef,
    pub failure: CriticalityFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityVerdict {
    pub k: usize,
    pub minimal: bool,
    /// First edge whose removal keeps the graph k-critical.
    pub removable_edge: Option<EdgeRef>,
    /// For a minimal graph, the failure of `G - e` for every edge.
    pub destroying: Vec<EdgeDestruction>,
}

/// Minimality against the full definition: every `G - e` must fail to be
/// k-critical.
pub fn is_minimal_k_sachs_critical(g: &Graph, k: usize) -> Result<MinimalityVerdict> {
    if !is_k_sachs_critical(g, k)?.critical {
        return Err(Error::NotCritical { k });
    }
    let mut destroying = Vec::new();
    for e in g.edges() {
        let h = g.delete_edge(e)?;
        match is_k_sachs_critical(&h, k)?.failure {
            Some(failure) => destroying.push(EdgeDestruction { edge: e, failure }),
            None => {
                return Ok(MinimalityVerdict {
                    k,
                    minimal: false,
                    removable_edge: Some(e),
                    destroying: Vec::new(),
                })
            }
        }
    }
    Ok(MinimalityVerdict {
        k,
        minimal: true,
        removable_edge: None,
        destroying,
    })
}

/// Minimum-degree position relative to `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeRelation {
    AtMostK,
    KPlus1,
    KPlus2,
    KPlus3,
    AboveKPlus3,
}

impl DegreeRelation {
    pub fn of(delta: usize, k: usize) -> Self {
        match delta.checked_sub(k) {
            None | Some(0) => DegreeRelation::AtMostK,
            Some(1) => DegreeRelation::KPlus1,
            Some(2) => DegreeRelation::KPlus2,
            Some(3) => DegreeRelation::KPlus3,
            Some(_) => DegreeRelation::AboveKPlus3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDegree {
    pub delta: usize,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "certificate", rename_all = "snake_case")]
pub enum FailureCertificate {
    Sachs(CriticalityFailure),
    PerfectMatching(FactorCriticalFailure),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub k: usize,
    pub mode: FactorMode,
    pub is_critical: bool,
    pub failure: Option<FailureCertificate>,
    pub is_minimal: Option<bool>,
    pub non_minimal_edge: Option<EdgeRef>,
    pub min_degree: Option<MinDegree>,
    pub bound_status: Option<DegreeRelation>,
}

/// Criticality (and optionally minimality) in either mode, with the
/// minimum degree placed relative to `k`.
pub fn criticality_report(g: &Graph, k: usize, mode: FactorMode, check_minimal: bool) -> Result<CriticalityReport> {
    check_order(g.order(), k)?;
    let failure = match mode {
        FactorMode::Sachs => is_k_sachs_critical(g, k)?.failure.map(FailureCertificate::Sachs),
        FactorMode::PerfectMatching => is_k_factor_critical(g, k)?.failure.map(FailureCertificate::PerfectMatching),
    };
    let is_critical = failure.is_none();
    let (is_minimal, non_minimal_edge) = if check_minimal && is_critical {
        let edge = removable_edge(&g.masks(), k, mode);
        (Some(edge.is_none()), edge)
    } else {
        (None, None)
    };
    let min_degree = g.min_degree().map(|(delta, vertex)| MinDegree { delta, vertex });
    Ok(CriticalityReport {
        k,
        mode,
        is_critical,
        failure,
        is_minimal,
        non_minimal_edge,
        bound_status: min_degree.map(|d| DegreeRelation::of(d.delta, k)),
        min_degree,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriticalityHypothesis {
    /// k-critical.
    Critical,
    /// k-critical with an edge `e` such that `G - e` is not.
    BreakingEdge,
    /// Minimal k-critical.
    Minimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanarityHypothesis {
    Any,
    Planar,
    /// `G - S` planar for every `|S| = k`.
    KPlanar,
    /// `G - S` planar for every `|S| = k - 1`.
    DeletionPlanar,
}

/// Hypothesis set for a degree-bound check, written
/// `criticality+planarity`, e.g. `minimal+deletion-planar`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundContext {
    pub criticality: CriticalityHypothesis,
    pub planarity: PlanarityHypothesis,
}

impl BoundContext {
    pub const fn new(criticality: CriticalityHypothesis, planarity: PlanarityHypothesis) -> Self {
        BoundContext { criticality, planarity }
    }
}

impl fmt::Display for BoundContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.criticality {
            CriticalityHypothesis::Critical => "critical",
            CriticalityHypothesis::BreakingEdge => "breaking-edge",
            CriticalityHypothesis::Minimal => "minimal",
        };
        let p = match self.planarity {
            PlanarityHypothesis::Any => return f.write_str(c),
            PlanarityHypothesis::Planar => "planar",
            PlanarityHypothesis::KPlanar => "k-planar",
            PlanarityHypothesis::DeletionPlanar => "deletion-planar",
        };
        write!(f, "{c}+{p}")
    }
}

impl FromStr for BoundContext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownContext(s.to_string());
        let (c, p) = s.split_once('+').unwrap_or((s, "any"));
        let criticality = match c {
            "critical" => CriticalityHypothesis::Critical,
            "breaking-edge" => CriticalityHypothesis::BreakingEdge,
            "minimal" => CriticalityHypothesis::Minimal,
            _ => return Err(unknown()),
        };
        let planarity = match p {
            "any" => PlanarityHypothesis::Any,
            "planar" => PlanarityHypothesis::Planar,
            "k-planar" => PlanarityHypothesis::KPlanar,
            "deletion-planar" => PlanarityHypothesis::DeletionPlanar,
            _ => return Err(unknown()),
        };
        Ok(BoundContext { criticality, planarity })
    }
}

/// The interval a context places `δ` in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeInterval {
    pub lower: usize,
    pub upper: Option<usize>,
    /// False when the upper bound is only conjectured.
    pub proven: bool,
}

impl DegreeInterval {
    pub fn contains(&self, delta: usize) -> bool {
        delta >= self.lower && self.upper.map_or(true, |u| delta <= u)
    }
}

/// The known (or conjectured) interval for `δ` under a context.
pub fn degree_interval(context: BoundContext, k: usize, n: usize) -> Result<DegreeInterval> {
    use CriticalityHypothesis::*;
    use PlanarityHypothesis::*;
    let lower_only = DegreeInterval {
        lower: k + 1,
        upper: None,
        proven: true,
    };
    let narrow = |proven| DegreeInterval {
        lower: k + 1,
        upper: Some(k + 2),
        proven,
    };
    Ok(match (context.criticality, context.planarity) {
        (Critical, _) | (BreakingEdge, Any) => lower_only,
        (BreakingEdge, Planar | KPlanar) if k == 0 => DegreeInterval {
            lower: 1,
            upper: Some(3),
            proven: true,
        },
        (BreakingEdge, DeletionPlanar) if k == 0 => return Err(Error::UnknownContext(context.to_string())),
        (BreakingEdge, _) => narrow(true),
        (Minimal, Any) => narrow(k <= 1 || k + 5 >= n),
        (Minimal, _) => narrow(true),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum BoundOutcome {
    Pass,
    HypothesisFail(String),
    BoundViolation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub k: usize,
    pub context: BoundContext,
    pub min_degree: Option<MinDegree>,
    pub interval: DegreeInterval,
    /// Edge whose removal breaks criticality, when the context asks for one.
    pub breaking_edge: Option<EdgeRef>,
    pub outcome: BoundOutcome,
}

/// Verifies the context's hypotheses on `G`, then places `δ(G)` against
/// the interval. A violation of a proven interval on verified hypotheses
/// contradicts a published bound.
pub fn check_degree_bounds(g: &Graph, k: usize, context: BoundContext) -> Result<BoundCheck> {
    let n = g.order();
    check_order(n, k)?;
    let interval = degree_interval(context, k, n)?;
    let masks = g.masks();
    let mut check = BoundCheck {
        k,
        context,
        min_degree: g.min_degree().map(|(delta, vertex)| MinDegree { delta, vertex }),
        interval,
        breaking_edge: None,
        outcome: BoundOutcome::Pass,
    };
    let fail = |mut c: BoundCheck, why: &str| {
        c.outcome = BoundOutcome::HypothesisFail(why.to_string());
        Ok(c)
    };

    if failing_subset(&masks, k, FactorMode::Sachs).is_some() {
        return fail(check, "not k-critical");
    }
    match context.criticality {
        CriticalityHypothesis::Critical => {}
        CriticalityHypothesis::BreakingEdge => {
            check.breaking_edge = g.edges().find(|&e| {
                let mut h = masks.clone();
                h[e.u] &= !(1 << e.v);
                h[e.v] &= !(1 << e.u);
                failing_subset(&h, k, FactorMode::Sachs).is_some()
            });
            if check.breaking_edge.is_none() {
                return fail(check, "no edge breaks criticality");
            }
        }
        CriticalityHypothesis::Minimal => {
            if removable_edge(&masks, k, FactorMode::Sachs).is_some() {
                return fail(check, "not minimal");
            }
        }
    }
    let planar_ok = match context.planarity {
        PlanarityHypothesis::Any => true,
        PlanarityHypothesis::Planar => planar(g),
        PlanarityHypothesis::KPlanar => is_k_planar(g, k)?.k_planar,
        PlanarityHypothesis::DeletionPlanar => k == 0 || is_k_planar(g, k - 1)?.k_planar,
    };
    if !planar_ok {
        return fail(check, "planarity hypothesis fails");
    }
    if let Some(d) = check.min_degree {
        if !interval.contains(d.delta) {
            check.outcome = BoundOutcome::BoundViolation;
        }
    }
    Ok(check)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleMinimalReport {
    /// Every `t` with `G` minimal t-critical.
    pub minimal_levels: Vec<usize>,
    /// Every `t` with `G` minimal t-critical and minimal (t+1)-critical.
    pub double_levels: Vec<usize>,
    pub complete: bool,
    /// Doubly minimal yet not complete.
    pub counterexample: bool,
}

/// Levels at which `G` is minimal critical at two consecutive levels, and
/// whether that happens for a non-complete graph.
pub fn conjecture_double_critical_scan(g: &Graph) -> DoubleMinimalReport {
    let n = g.order();
    let masks = g.masks();
    let minimal_levels: Vec<usize> = (0..n)
        .filter(|&t| {
            failing_subset(&masks, t, FactorMode::Sachs).is_none()
                && removable_edge(&masks, t, FactorMode::Sachs).is_none()
        })
        .collect();
    let double_levels: Vec<usize> = minimal_levels
        .windows(2)
        .filter(|w| w[1] == w[0] + 1)
        .map(|w| w[0])
        .collect();
    let complete = g.is_complete();
    DoubleMinimalReport {
        counterexample: !double_levels.is_empty() && !complete,
        minimal_levels,
        double_levels,
        complete,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;
    use crate::graph::named::*;
    use crate::sachs::{deficiency_violator_bruteforce, has_factor};

    fn fig3() -> Graph {
        Graph::from_edges(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (4, 5), (3, 5), (3, 6), (1, 6), (5, 6), (0, 3), (0, 2)],
        )
        .unwrap()
    }

    // k-criticality straight from the definition on explicit subgraphs.
    fn critical_oracle(g: &Graph, k: usize) -> bool {
        let n = g.order();
        (0..1u64 << n)
            .filter(|m| m.count_ones() as usize == k)
            .all(|m| has_factor(&g.delete_vertices(&VertexSet::from_mask(n, m)).0))
    }

    #[test]
    fn complete_graph_family() {
        for n in 4..=8 {
            for k in [n - 3, n - 2] {
                assert!(is_k_sachs_critical(&complete(n), k).unwrap().critical);
                assert!(is_minimal_k_sachs_critical(&complete(n), k).unwrap().minimal, "K{n}, k={k}");
            }
        }
    }

    #[test]
    fn criticality_examples() {
        assert!(is_k_sachs_critical(&cycle(5), 1).unwrap().critical);
        let v = is_k_sachs_critical(&cycle(4), 1).unwrap();
        let f = v.failure.unwrap();
        assert_eq!(f.deleted.to_vec(), vec![0]);
        f.verify(&cycle(4), 1).unwrap();
        let (p3, _) = cycle(4).delete_vertices(&f.deleted);
        assert!(!has_factor(&p3));
        let v = is_k_sachs_critical(&star(3), 0).unwrap();
        assert_eq!(v.failure.unwrap().certificate.set.to_vec(), vec![0]);
        assert_eq!(is_k_sachs_critical(&cycle(4), 4), Err(Error::KOutOfRange { k: 4, n: 4 }));
    }

    #[test]
    fn minimality_examples() {
        let k5 = is_minimal_k_sachs_critical(&complete(5), 2).unwrap();
        assert!(k5.minimal);
        assert_eq!(k5.destroying.len(), 10);
        for d in &k5.destroying {
            d.failure.verify(&complete(5).delete_edge(d.edge).unwrap(), 2).unwrap();
        }
        assert_eq!(complete(5).min_degree().unwrap().0, 4);
        assert!(is_minimal_k_sachs_critical(&complete(4), 1).unwrap().minimal);
        assert!(is_minimal_k_sachs_critical(&cycle(5), 1).unwrap().minimal);
        assert_eq!(is_minimal_k_sachs_critical(&cycle(4), 1), Err(Error::NotCritical { k: 1 }));
        let k5 = is_minimal_k_sachs_critical(&complete(5), 0).unwrap();
        assert!(!k5.minimal);
        let e = k5.removable_edge.unwrap();
        assert!(is_k_sachs_critical(&complete(5).delete_edge(e).unwrap(), 0).unwrap().critical);
    }

    #[test]
    fn report_examples() {
        let r = criticality_report(&complete(5), 2, FactorMode::Sachs, true).unwrap();
        assert!(r.is_critical);
        assert_eq!(r.is_minimal, Some(true));
        assert_eq!(r.bound_status, Some(DegreeRelation::KPlus2));
        let r = criticality_report(&complete(5), 1, FactorMode::PerfectMatching, true).unwrap();
        assert!(r.is_critical);
        assert_eq!(r.is_minimal, Some(false));
        let r = criticality_report(&complete(4), 1, FactorMode::PerfectMatching, false).unwrap();
        assert!(!r.is_critical);
        let r = criticality_report(&cycle(4), 1, FactorMode::PerfectMatching, false).unwrap();
        assert!(matches!(r.failure, Some(FailureCertificate::PerfectMatching(_))));
    }

    #[test]
    fn degree_bound_examples() {
        let ctx = |s: &str| s.parse::<BoundContext>().unwrap();
        let c = check_degree_bounds(&complete(5), 2, ctx("minimal+deletion-planar")).unwrap();
        assert_eq!(c.outcome, BoundOutcome::Pass);
        assert_eq!(c.min_degree.unwrap().delta, 4);
        let c = check_degree_bounds(&cycle(5), 1, ctx("minimal+planar")).unwrap();
        assert_eq!((c.outcome, c.min_degree.unwrap().delta), (BoundOutcome::Pass, 2));
        let c = check_degree_bounds(&fig3(), 0, ctx("breaking-edge+planar")).unwrap();
        assert_eq!(c.outcome, BoundOutcome::Pass);
        assert_eq!(c.min_degree.unwrap().delta, 3);
        assert!(c.breaking_edge.is_some());
        let c = check_degree_bounds(&complete(6), 2, ctx("minimal+planar")).unwrap();
        assert!(matches!(c.outcome, BoundOutcome::HypothesisFail(_)));
        assert!(matches!("minimal+toroidal".parse::<BoundContext>(), Err(Error::UnknownContext(_))));
        assert!(matches!(
            check_degree_bounds(&complete(3), 0, ctx("breaking-edge+deletion-planar")),
            Err(Error::UnknownContext(_))
        ));
        for s in ["critical", "breaking-edge+k-planar", "minimal+deletion-planar"] {
            assert_eq!(ctx(s).to_string(), s);
        }
    }

    #[test]
    fn fig3_breaking_edge() {
        let g = fig3();
        assert!(is_k_sachs_critical(&g, 0).unwrap().critical);
        let e = EdgeRef::new(0, 2);
        let c = deficiency_violator_bruteforce(&g.delete_edge(e).unwrap(), 0).unwrap().unwrap();
        assert_eq!((c.set.to_vec(), c.isolated), (vec![1, 3, 5], 4));
    }

    #[test]
    fn double_minimal_examples() {
        let k4 = conjecture_double_critical_scan(&complete(4));
        assert_eq!(k4.double_levels, vec![1]);
        assert!(!k4.counterexample);
        let k5 = conjecture_double_critical_scan(&complete(5));
        assert!(k5.double_levels.contains(&2));
        assert!(!k5.counterexample);
        let c5 = conjecture_double_critical_scan(&cycle(5));
        assert_eq!(c5.minimal_levels, vec![0, 1]);
        // C5 is its own {1,2}-factor and C5 - e = P5 has none
        assert_eq!(c5.double_levels, vec![0]);
        assert!(c5.counterexample);
    }

    #[test]
    fn lower_degree_bound_exhaustive() {
        for n in 1..=8 {
            for g in enumerate_graphs(n).unwrap() {
                let masks = g.masks();
                let delta = g.min_degree().unwrap().0;
                for k in 0..n {
                    if failing_subset(&masks, k, FactorMode::Sachs).is_none() {
                        assert!(delta > k, "{g:?} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn definition_matches_deficiency_condition() {
        for n in 1..=7 {
            for g in enumerate_graphs(n).unwrap() {
                for k in 0..n {
                    let v = is_k_sachs_critical(&g, k).unwrap();
                    assert_eq!(v.critical, deficiency_violator_bruteforce(&g, k).unwrap().is_none());
                    assert_eq!(v.critical, critical_oracle(&g, k));
                    if let Some(f) = v.failure {
                        f.verify(&g, k).unwrap_or_else(|e| panic!("{g:?} k={k}: {e}"));
                    }
                }
            }
        }
    }

    #[test]
    fn minimality_witnesses_reverify() {
        for g in enumerate_graphs(6).unwrap() {
            for k in 0..6 {
                let Ok(v) = is_minimal_k_sachs_critical(&g, k) else { continue };
                match v.removable_edge {
                    Some(e) => assert!(critical_oracle(&g.delete_edge(e).unwrap(), k)),
                    None => {
                        assert_eq!(v.destroying.len(), g.size());
                        assert!(v.destroying.iter().all(|d| !critical_oracle(&g.delete_edge(d.edge).unwrap(), k)));
                    }
                }
            }
        }
    }

    #[test]
    fn perfect_matching_mode_agrees_with_blossom() {
        for n in 1..=7 {
            for g in enumerate_graphs(n).unwrap() {
                for k in 0..n {
                    let fast = failing_subset(&g.masks(), k, FactorMode::PerfectMatching).is_none();
                    assert_eq!(fast, is_k_factor_critical(&g, k).unwrap().critical);
                }
            }
        }
    }
}
