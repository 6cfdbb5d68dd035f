//! Maximum matchings in bipartite and general graphs, and the Tutte-side
//! certificates behind perfect matchings and k-factor-criticality.

mod bipartite;
mod blossom;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{combinations, odd_components_within, EdgeRef, Graph, VertexSet};

pub use bipartite::{hall_violator, max_bipartite_matching, BipartiteGraph, BipartiteMatching, HallViolator};

/// Largest order for which subset scans (2^n) are run.
pub const BRUTE_FORCE_LIMIT: usize = 16;

/// A set of pairwise vertex-disjoint edges, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub n: usize,
    pub pairs: Vec<EdgeRef>,
}

impl Matching {
    fn from_mates(mates: &[Option<usize>]) -> Self {
        let pairs = mates
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&u| u > v).map(|u| EdgeRef { u: v, v: u }))
            .collect();
        Matching {
            n: mates.len(),
            pairs,
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.pairs.len() == self.n
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.pairs
            .iter()
            .find(|e| e.u == v || e.v == v)
            .map(|e| e.other(v))
    }

    /// Checks the pairs are edges of `g` and pairwise disjoint.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.n != g.order() {
            return Err(format!("matching is over {} vertices, graph has {}", self.n, g.order()));
        }
        let mut covered = VertexSet::empty(self.n);
        for e in &self.pairs {
            if !g.has_edge(e.u, e.v) {
                return Err(format!("{e} is not an edge"));
            }
            if !covered.insert(e.u) || !covered.insert(e.v) {
                return Err(format!("{e} overlaps another pair"));
            }
        }
        Ok(())
    }
}

/// A set `S` with `odd(G - S) > |S| - k`. With `k = 0` this is the classic
/// Tutte obstruction to a perfect matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteViolator {
    pub set: VertexSet,
    pub odd_count: usize,
    pub k: usize,
}

impl TutteViolator {
    /// Recomputes `odd(G - S)` from scratch and checks the inequality.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.set.iter().any(|v| v >= g.order()) {
            return Err("set leaves the vertex range".into());
        }
        if self.set.len() < self.k {
            return Err(format!("|S| = {} is below k = {}", self.set.len(), self.k));
        }
        let odd = g.delete_vertices(&self.set).0.odd_components();
        if odd != self.odd_count {
            return Err(format!("recorded odd count {} but found {odd}", self.odd_count));
        }
        if odd + self.k <= self.set.len() {
            return Err(format!(
                "odd(G - S) = {odd} does not exceed |S| - k = {} - {}",
                self.set.len(),
                self.k
            ));
        }
        Ok(())
    }
}

pub fn max_matching_general(g: &Graph) -> Matching {
    Matching::from_mates(&blossom::maximum_mates(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PerfectMatchingOutcome {
    Perfect(Matching),
    Violator(TutteViolator),
}

/// Least `S` (by size, then lexicographically) with `odd(G - S) > |S| - k`
/// and `|S| >= k`.
pub fn tutte_violator_bruteforce(g: &Graph, k: usize) -> Result<Option<TutteViolator>> {
    let n = g.order();
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
            let odd = odd_components_within(&masks, all & !mask);
            if odd + k > size {
                return Ok(Some(TutteViolator {
                    set: VertexSet::from_mask(n, mask),
                    odd_count: odd,
                    k,
                }));
            }
        }
    }
    Ok(None)
}

/// Tutte set from the Gallai-Edmonds decomposition: `A = N(D) - D` where
/// `D` holds the vertices missed by some maximum matching. Achieves
/// `odd(G - A) - |A| = n - 2μ`.
pub fn gallai_edmonds_barrier(g: &Graph) -> TutteViolator {
    let n = g.order();
    let mu = max_matching_general(g).len();
    let mut d = VertexSet::empty(n);
    for v in 0..n {
        let (h, _) = g.delete_vertices(&VertexSet::from_members(n, [v]));
        if max_matching_general(&h).len() == mu {
            d.insert(v);
        }
    }
    let a = g.neighborhood(&d).difference(&d);
    let odd = g.delete_vertices(&a).0.odd_components();
    TutteViolator {
        set: a,
        odd_count: odd,
        k: 0,
    }
}

/// Either a perfect matching or a Tutte violator.
///
/// Violators come from the increasing-size subset scan for `n <= 16` and
/// from the Gallai-Edmonds barrier beyond that.
pub fn has_perfect_matching(g: &Graph) -> PerfectMatchingOutcome {
    let m = max_matching_general(g);
    if m.is_perfect() {
        return PerfectMatchingOutcome::Perfect(m);
    }
    let violator = if g.order() <= BRUTE_FORCE_LIMIT {
        tutte_violator_bruteforce(g, 0)
            .expect("within limit")
            .expect("Tutte's theorem guarantees a violator")
    } else {
        gallai_edmonds_barrier(g)
    };
    PerfectMatchingOutcome::Violator(violator)
}

/// Whether the subgraph induced by `alive` has a perfect matching. Mask
/// search for small orders, blossom beyond that; no certificate.
pub(crate) fn perfect_matching_within(masks: &[u64], alive: u64) -> bool {
    fn search(masks: &[u64], alive: u64) -> bool {
        if alive == 0 {
            return true;
        }
        if odd_components_within(masks, alive) > 0 {
            return false;
        }
        // branch on the vertex with the fewest choices
        let mut rest = alive;
        let mut pick = (u32::MAX, 0);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let choices = (masks[v] & alive).count_ones();
            if choices < pick.0 {
                pick = (choices, v);
            }
        }
        let v = pick.1;
        let mut options = masks[v] & alive;
        while options != 0 {
            let u = options.trailing_zeros() as usize;
            options &= options - 1;
            if search(masks, alive & !(1 << v) & !(1 << u)) {
                return true;
            }
        }
        false
    }
    if alive.count_ones() % 2 == 1 {
        return false;
    }
    if alive.count_ones() <= 14 {
        return search(masks, alive);
    }
    let g = Graph::from_masks(masks);
    let (h, _) = g.induced(&VertexSet::from_mask(masks.len(), alive));
    max_matching_general(&h).is_perfect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorCriticalFailureReason {
    /// `n - k` is odd, so no deletion of `k` vertices leaves an even order.
    Parity,
    NoPerfectMatching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCriticalFailure {
    pub reason: FactorCriticalFailureReason,
    /// The `k` deleted vertices.
    pub deleted: VertexSet,
    /// Tutte violator of `G - deleted`, in the labels of `G`.
    pub inner: VertexSet,
    /// `deleted ∪ inner`, a violator of the `k`-level condition in `G`.
    pub certificate: TutteViolator,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCriticalVerdict {
    pub k: usize,
    pub critical: bool,
    pub failure: Option<FactorCriticalFailure>,
}

/// k-factor-criticality by definition: `G - S` has a perfect matching for
/// every `|S| = k`. Subsets are tried in lexicographic order.
pub fn is_k_factor_critical(g: &Graph, k: usize) -> Result<FactorCriticalVerdict> {
    let n = g.order();
    if k >= n {
        return Err(Error::KOutOfRange { k, n });
    }
    if n > 64 {
        return Err(Error::SizeLimitExceeded { n, limit: 64 });
    }
    let reason = if (n - k) % 2 == 1 {
        FactorCriticalFailureReason::Parity
    } else {
        FactorCriticalFailureReason::NoPerfectMatching
    };
    for mask in combinations(n, k) {
        let deleted = VertexSet::from_mask(n, mask);
        let (h, map) = g.delete_vertices(&deleted);
        if let PerfectMatchingOutcome::Violator(t) = has_perfect_matching(&h) {
            let inner = map.lift_set(&t.set);
            let set = deleted.union(&inner);
            return Ok(FactorCriticalVerdict {
                k,
                critical: false,
                failure: Some(FactorCriticalFailure {
                    reason,
                    deleted,
                    inner,
                    certificate: TutteViolator {
                        set,
                        odd_count: t.odd_count,
                        k,
                    },
                }),
            });
        }
    }
    Ok(FactorCriticalVerdict {
        k,
        critical: true,
        failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;
    use crate::graph::named::*;

    // μ by recursion over the lowest unmatched vertex.
    fn mu_oracle(g: &Graph) -> usize {
        fn go(g: &Graph, free: u64) -> usize {
            if free == 0 {
                return 0;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let mut best = go(g, rest);
            for u in g.neighbors(v).iter() {
                if rest >> u & 1 == 1 {
                    best = best.max(1 + go(g, rest & !(1 << u)));
                }
            }
            best
        }
        go(g, (1u64 << g.order()) - 1)
    }

    #[test]
    fn general_examples() {
        assert_eq!(max_matching_general(&complete(4)).len(), 2);
        assert_eq!(max_matching_general(&cycle(5)).len(), 2);
        let p = max_matching_general(&petersen());
        p.validate(&petersen()).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(mu_oracle(&petersen()), 5);
    }

    #[test]
    fn blossom_matches_oracle_exhaustively() {
        for n in 0..=7 {
            for g in enumerate_graphs(n).unwrap() {
                let m = max_matching_general(&g);
                m.validate(&g).unwrap();
                assert_eq!(m.len(), mu_oracle(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn blossom_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(8..=14);
            let p = rng.gen_range(0.1..0.5);
            let mut g = Graph::empty(n);
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(p) {
                        g.add_edge(i, j);
                    }
                }
            }
            let m = max_matching_general(&g);
            m.validate(&g).unwrap();
            assert_eq!(m.len(), mu_oracle(&g));
        }
    }

    #[test]
    fn perfect_matching_examples() {
        match has_perfect_matching(&complete(4)) {
            PerfectMatchingOutcome::Perfect(m) => assert_eq!(m.len(), 2),
            other => panic!("{other:?}"),
        }
        match has_perfect_matching(&star(3)) {
            PerfectMatchingOutcome::Violator(t) => {
                assert_eq!(t.set.to_vec(), vec![0]);
                assert_eq!(t.odd_count, 3);
            }
            other => panic!("{other:?}"),
        }
        match has_perfect_matching(&cycle(5)) {
            PerfectMatchingOutcome::Violator(t) => {
                assert!(t.set.is_empty());
                assert_eq!(t.odd_count, 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn matching_xor_violator() {
        for n in 0..=8 {
            for g in enumerate_graphs(n).unwrap() {
                match has_perfect_matching(&g) {
                    PerfectMatchingOutcome::Perfect(m) => {
                        m.validate(&g).unwrap();
                        assert!(m.is_perfect());
                        assert_eq!(tutte_violator_bruteforce(&g, 0).unwrap(), None);
                    }
                    PerfectMatchingOutcome::Violator(t) => {
                        t.verify(&g).unwrap();
                        assert!(2 * max_matching_general(&g).len() < n);
                    }
                }
            }
        }
    }

    #[test]
    fn gallai_edmonds_barrier_is_tight() {
        for n in 1..=7 {
            for g in enumerate_graphs(n).unwrap() {
                let mu = max_matching_general(&g).len();
                let t = gallai_edmonds_barrier(&g);
                assert_eq!(t.odd_count - t.set.len(), n - 2 * mu, "{g:?}");
            }
        }
        let big = cycle(21);
        match has_perfect_matching(&big) {
            PerfectMatchingOutcome::Violator(t) => t.verify(&big).unwrap(),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn factor_critical_examples() {
        assert!(is_k_factor_critical(&cycle(5), 1).unwrap().critical);
        assert!(is_k_factor_critical(&complete(4), 2).unwrap().critical);
        let v = is_k_factor_critical(&star(3), 0).unwrap();
        assert!(!v.critical);
        let f = v.failure.unwrap();
        assert_eq!(f.certificate.set.to_vec(), vec![0]);
        assert_eq!(f.reason, FactorCriticalFailureReason::NoPerfectMatching);
        let parity = is_k_factor_critical(&complete(5), 2).unwrap();
        assert_eq!(parity.failure.unwrap().reason, FactorCriticalFailureReason::Parity);
        assert_eq!(
            is_k_factor_critical(&complete(3), 3),
            Err(Error::KOutOfRange { k: 3, n: 3 })
        );
    }

    #[test]
    fn definition_agrees_with_deficiency_condition() {
        for n in 1..=7 {
            for g in enumerate_graphs(n).unwrap() {
                for k in 0..n {
                    let verdict = is_k_factor_critical(&g, k).unwrap();
                    let oracle = tutte_violator_bruteforce(&g, k).unwrap();
                    assert_eq!(verdict.critical, oracle.is_none(), "{g:?} k={k}");
                    if let Some(f) = verdict.failure {
                        f.certificate.verify(&g).unwrap();
                        assert_eq!(f.deleted.len(), k);
                    }
                }
            }
        }
    }
}
