//! {1,2}-factors (Sachs subgraphs): existence, construction and deficiency
//! certificates.
//!
//! A graph has a {1,2}-factor exactly when its bipartite double cover has a
//! perfect matching. The matching induces a fixed-point-free permutation
//! `σ(v) = partner of v`; 2-cycles of `σ` become factor edges and longer
//! cycles become factor cycles. When the matching is not perfect, the Hall
//! violator on the left side converts into a set `S'` with `i(G - S') > |S'|`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{combinations, isolated_within, EdgeRef, Graph, VertexSet};
use crate::matching::{hall_violator, max_bipartite_matching, BipartiteGraph, BipartiteMatching, HallViolator, BRUTE_FORCE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorComponent {
    Edge(EdgeRef),
    /// Vertices in cyclic order, at least three.
    Cycle(Vec<usize>),
}

impl FactorComponent {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            FactorComponent::Edge(e) => vec![e.u, e.v],
            FactorComponent::Cycle(vs) => vs.clone(),
        }
    }
}

impl fmt::Display for FactorComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorComponent::Edge(e) => write!(f, "edge {e}"),
            FactorComponent::Cycle(vs) => {
                write!(f, "cycle ")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "-")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Spanning subgraph whose components are single edges and cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneTwoFactor {
    pub components: Vec<FactorComponent>,
}

impl OneTwoFactor {
    /// Checks that the components partition `V(G)`, use only edges of `G`,
    /// and that cycles are simple with length at least three.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.order();
        let mut covered = vec![false; n];
        for comp in &self.components {
            let vs = comp.vertices();
            if let FactorComponent::Cycle(_) = comp {
                if vs.len() < 3 {
                    return Err(format!("cycle of length {} is too short", vs.len()));
                }
            }
            for &v in &vs {
                if v >= n {
                    return Err(format!("vertex {v} out of range"));
                }
                if std::mem::replace(&mut covered[v], true) {
                    return Err(format!("vertex {v} covered twice"));
                }
            }
            let closing = matches!(comp, FactorComponent::Cycle(_));
            let steps = if closing { vs.len() } else { 1 };
            for i in 0..steps {
                let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
                if !g.has_edge(a, b) {
                    return Err(format!("{a}-{b} is not an edge"));
                }
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(format!("vertex {v} not covered"));
        }
        Ok(())
    }
}

/// A set `S` with `i(G - S) > |S| - k` and `|S| >= k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyCertificate {
    pub set: VertexSet,
    pub isolated: usize,
    pub k: usize,
}

impl DeficiencyCertificate {
    /// Recomputes `i(G - S)` from scratch.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.set.iter().any(|v| v >= g.order()) {
            return Err("set leaves the vertex range".into());
        }
        if self.set.len() < self.k {
            return Err(format!("|S| = {} is below k = {}", self.set.len(), self.k));
        }
        let isolated = g.delete_vertices(&self.set).0.isolated_count();
        if isolated != self.isolated {
            return Err(format!("recorded i(G - S) = {} but found {isolated}", self.isolated));
        }
        if isolated + self.k <= self.set.len() {
            return Err(format!(
                "i(G - S) = {isolated} does not exceed |S| - k = {} - {}",
                self.set.len(),
                self.k
            ));
        }
        Ok(())
    }
}

/// Left = `V`, right = a copy `V'`, with `u - v'` whenever `uv ∈ E(G)`.
pub fn double_cover(g: &Graph) -> BipartiteGraph {
    let rows = (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
    BipartiteGraph::from_rows(g.order(), rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorOutcome {
    Factor(OneTwoFactor),
    Violator(HallViolator),
}

impl FactorOutcome {
    pub fn is_factor(&self) -> bool {
        matches!(self, FactorOutcome::Factor(_))
    }
}

pub fn has_one_two_factor(g: &Graph) -> FactorOutcome {
    let cover = double_cover(g);
    let m = max_bipartite_matching(&cover);
    if m.is_perfect() {
        let factor = factor_from_permutation(g, &m).expect("perfect matching of the double cover");
        FactorOutcome::Factor(factor)
    } else {
        let violator = hall_violator(&cover, &m)
            .expect("Hopcroft-Karp returns a maximum matching")
            .expect("an unsaturated left side has a violator");
        FactorOutcome::Violator(violator)
    }
}

/// Splits the permutation induced by a perfect matching of the double cover
/// into its cycles. Components are listed by least vertex; each cycle starts
/// at its least vertex and follows `σ`.
pub fn factor_from_permutation(g: &Graph, m: &BipartiteMatching) -> Result<OneTwoFactor> {
    let n = g.order();
    if m.mate_of_left.len() != n || m.right_size != n || !m.is_perfect() {
        return Err(Error::NotPerfect);
    }
    let sigma: Vec<usize> = m.mate_of_left.iter().map(|r| r.unwrap()).collect();
    for (v, &s) in sigma.iter().enumerate() {
        if s == v {
            return Err(Error::FixedPoint(v));
        }
        if !g.has_edge(v, s) {
            return Err(Error::NotPerfect);
        }
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut v = sigma[start];
        while v != start {
            seen[v] = true;
            cycle.push(v);
            v = sigma[v];
        }
        components.push(if cycle.len() == 2 {
            FactorComponent::Edge(EdgeRef::new(cycle[0], cycle[1]))
        } else {
            FactorComponent::Cycle(cycle)
        });
    }
    Ok(OneTwoFactor { components })
}

/// Least `S` (by size, then lexicographically) with `|S| >= k` and
/// `i(G - S) > |S| - k`, found by scanning subsets.
pub fn deficiency_violator_bruteforce(g: &Graph, k: usize) -> Result<Option<DeficiencyCertificate>> {
    let n = g.order();
    if k >= n {
        return Err(Error::KOutOfRange { k, n });
    }
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let masks = g.masks();
    let all = (1u64 << n) - 1;
    for size in k..=n {
        for mask in combinations(n, size) {
            let isolated = isolated_within(&masks, all & !mask);
            if isolated + k > size {
                return Ok(Some(DeficiencyCertificate {
                    set: VertexSet::from_mask(n, mask),
                    isolated,
                    k,
                }));
            }
        }
    }
    Ok(None)
}

/// Converts `|S| > |N(S)|` into `S' = N(S) - S` with `i(G - S') > |S'|`:
/// every vertex of `S - N(S)` has all its neighbors in `S'`.
pub fn deficiency_from_hall(g: &Graph, violator: &HallViolator) -> Result<DeficiencyCertificate> {
    let s = &violator.set;
    if s.iter().any(|v| v >= g.order()) {
        return Err(Error::InvalidViolator("set leaves the vertex range".into()));
    }
    let nb = g.neighborhood(s);
    if s.len() <= nb.len() {
        return Err(Error::InvalidViolator(format!(
            "|S| = {} does not exceed |N(S)| = {}",
            s.len(),
            nb.len()
        )));
    }
    let set = nb.difference(s);
    let cert = DeficiencyCertificate {
        isolated: g.delete_vertices(&set).0.isolated_count(),
        set,
        k: 0,
    };
    cert.verify(g).map_err(Error::InvalidViolator)?;
    Ok(cert)
}

/// Maximum matching size of the double cover restricted to `alive`.
fn cover_matching_within(masks: &[u64], alive: u64) -> usize {
    fn augment(v: usize, masks: &[u64], alive: u64, visited: &mut u64, mate: &mut [usize; 64]) -> bool {
        let mut candidates = masks[v] & alive;
        while candidates != 0 {
            let r = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if *visited >> r & 1 == 1 {
                continue;
            }
            *visited |= 1 << r;
            if mate[r] == usize::MAX || augment(mate[r], masks, alive, visited, mate) {
                mate[r] = v;
                return true;
            }
        }
        false
    }
    let mut mate = [usize::MAX; 64];
    let mut size = 0;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut visited = 0;
        if augment(v, masks, alive, &mut visited, &mut mate) {
            size += 1;
        }
    }
    size
}

/// Whether the subgraph induced by `alive` has a {1,2}-factor. Mask fast
/// path for the subset scans; no certificate.
pub(crate) fn factor_exists_within(masks: &[u64], alive: u64) -> bool {
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if masks[v] & alive == 0 {
            return false;
        }
    }
    cover_matching_within(masks, alive) == alive.count_ones() as usize
}

/// `n - μ(B(G))` restricted to `alive`, the critical difference of the
/// induced subgraph.
pub(crate) fn cover_deficiency_within(masks: &[u64], alive: u64) -> usize {
    alive.count_ones() as usize - cover_matching_within(masks, alive)
}

/// Boolean {1,2}-factor test without certificate construction.
pub fn has_factor(g: &Graph) -> bool {
    if g.order() <= 64 {
        let n = g.order();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        factor_exists_within(&g.masks(), all)
    } else {
        has_one_two_factor(g).is_factor()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoBicriticalVerdict {
    pub bicritical: bool,
    /// Least nonempty independent `S` with `|S| >= |N(S)|`.
    pub independent_witness: Option<VertexSet>,
    /// Least `v` such that `G - v` has no {1,2}-factor.
    pub failing_vertex: Option<usize>,
}

/// 2-bicriticality (equivalently 1-{1,2}-factor-criticality), decided both
/// by the independent-set condition and by deleting each vertex. The two
/// answers must agree; a disagreement is reported as a contradiction.
pub fn is_two_bicritical(g: &Graph) -> Result<TwoBicriticalVerdict> {
    let n = g.order();
    if n < 2 {
        return Err(Error::KOutOfRange { k: 1, n });
    }
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let masks = g.masks();
    let all = (1u64 << n) - 1;
    let independent_witness = (1..=n)
        .flat_map(|size| combinations(n, size))
        .find(|&s| {
            let nb = crate::graph::neighborhood_mask(&masks, s);
            nb & s == 0 && s.count_ones() >= nb.count_ones()
        })
        .map(|s| VertexSet::from_mask(n, s));
    let failing_vertex = (0..n).find(|&v| !factor_exists_within(&masks, all & !(1 << v)));
    if independent_witness.is_some() != failing_vertex.is_some() {
        return Err(Error::ContradictionDetected(format!(
            "2-bicritical condition and 1-{{1,2}}-factor-criticality disagree on {}",
            g.to_graph6()
        )));
    }
    Ok(TwoBicriticalVerdict {
        bicritical: failing_vertex.is_none(),
        independent_witness,
        failing_vertex,
    })
}
