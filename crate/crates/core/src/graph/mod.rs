//! Simple undirected graphs on vertices `0..n` with bitset adjacency rows.

mod canon;
mod edge_list;
mod graph6;
pub mod named;
mod vertex_set;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, enumerate_graphs, CANONICAL_LIMIT, ENUMERATION_LIMIT};
pub use edge_list::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6, GRAPH6_HEADER};
pub use vertex_set::{Iter as VertexSetIter, VertexSet};
pub(crate) use vertex_set::combinations;

/// Undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loop edge");
        EdgeRef {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn other(&self, end: usize) -> usize {
        if end == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Order-preserving map from the vertices of `G - S` back to `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relabeling {
    original_n: usize,
    old_of_new: Vec<usize>,
}

impl Relabeling {
    pub fn lift(&self, v: usize) -> usize {
        self.old_of_new[v]
    }

    pub fn lift_set(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_members(self.original_n, set.iter().map(|v| self.old_of_new[v]))
    }

    pub fn lift_edge(&self, e: EdgeRef) -> EdgeRef {
        EdgeRef::new(self.lift(e.u), self.lift(e.v))
    }

    pub fn original_order(&self) -> usize {
        self.original_n
    }

    pub fn len(&self) -> usize {
        self.old_of_new.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old_of_new.is_empty()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            if g.has_edge(a, b) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from per-vertex neighbor masks.
    /// The masks must already be symmetric and loop-free.
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        let g = Graph {
            n,
            adj: masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect(),
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub(crate) fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a].remove(b);
        self.adj[b].remove(a);
    }

    /// Returns `G + uv`. Used by the degree-lemma sweep to add an edge
    /// inside one side of a bipartition.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Self> {
        if a >= self.n || b >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: a.max(b),
                n: self.n,
            });
        }
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        if self.has_edge(a, b) {
            return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
        }
        let mut g = self.clone();
        g.add_edge(a, b);
        Ok(g)
    }

    /// Checks symmetry, absence of loops and the neighbor-id range.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if self.adj.len() != self.n {
            return Err("row count differs from n".into());
        }
        for v in 0..self.n {
            if self.adj[v].contains(v) {
                return Err(format!("loop at {v}"));
            }
            for u in self.adj[v].iter() {
                if u >= self.n {
                    return Err(format!("neighbor {u} of {v} out of range"));
                }
                if !self.adj[u].contains(v) {
                    return Err(format!("asymmetric adjacency {v}->{u}"));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Neighbor mask of `v`; only meaningful for `n <= 64`.
    pub(crate) fn mask(&self, v: usize) -> u64 {
        self.adj[v].mask().expect("mask() requires n <= 64")
    }

    pub(crate) fn masks(&self) -> Vec<u64> {
        (0..self.n).map(|v| self.mask(v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| EdgeRef { u, v })
        })
    }

    /// `N(S)`: union of the neighborhoods of the members of `S`. May
    /// intersect `S`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in set.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// Deletes `S` and relabels the survivors `0..n-|S|` in their original
    /// order.
    pub fn delete_vertices(&self, set: &VertexSet) -> (Graph, Relabeling) {
        let old_of_new: Vec<usize> = (0..self.n).filter(|&v| !set.contains(v)).collect();
        let mut new_of_old = vec![usize::MAX; self.n];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let m = old_of_new.len();
        let mut g = Graph::empty(m);
        for (new, &old) in old_of_new.iter().enumerate() {
            for u in self.adj[old].iter() {
                let nu = new_of_old[u];
                if nu != usize::MAX {
                    g.adj[new].insert(nu);
                }
            }
        }
        (
            g,
            Relabeling {
                original_n: self.n,
                old_of_new,
            },
        )
    }

    pub fn delete_edge(&self, e: EdgeRef) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::EdgeNotPresent(e.u, e.v));
        }
        let mut g = self.clone();
        g.remove_edge(e.u, e.v);
        Ok(g)
    }

    /// The subgraph induced by `S`, relabeled in order.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Relabeling) {
        self.delete_vertices(&set.complement())
    }

    /// `i(G)`: number of isolated vertices.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|row| row.is_empty()).count()
    }

    /// Connected components, each as a vertex set, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for u in self.adj[v].iter() {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// `odd(G)`: number of components with an odd number of vertices.
    pub fn odd_components(&self) -> usize {
        self.components().iter().filter(|c| c.len() % 2 == 1).count()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// `δ(G)` with the least vertex attaining it; `None` for the null graph.
    pub fn min_degree(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .map(|v| (self.degree(v), v))
            .min()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// True iff no vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n).all(|c| {
            let nb = self.adj[c].to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    if nb[j + 1..]
                        .iter()
                        .any(|&x| !self.has_edge(a, x) && !self.has_edge(b, x))
                    {
                        return false;
                    }
                }
            }
            true
        })
    }

    /// A proper 2-coloring (`true` = side B) if the graph is bipartite.
    /// Each component's least vertex is colored `false`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for u in self.adj[v].iter() {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Vertex connectivity `κ(G)`, with `κ(K_n) = n - 1`.
    ///
    /// Computed as the minimum, over non-adjacent pairs, of the number of
    /// internally disjoint paths (unit-capacity max-flow on the split graph).
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n;
        if self.is_complete() {
            return n.saturating_sub(1);
        }
        let mut best = n - 1;
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) {
                    best = best.min(self.local_connectivity(s, t, best));
                    if best == 0 {
                        return 0;
                    }
                }
            }
        }
        best
    }

    // Vertex-disjoint s-t paths for non-adjacent s, t, capped at `cap`.
    fn local_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        // node 2v = v_in, 2v+1 = v_out; arc v_in -> v_out has capacity 1
        // except for s and t.
        let n = self.n;
        let nodes = 2 * n;
        let mut cap_m = vec![vec![0i32; nodes]; nodes];
        for v in 0..n {
            cap_m[2 * v][2 * v + 1] = if v == s || v == t { n as i32 } else { 1 };
            for u in self.adj[v].iter() {
                cap_m[2 * v + 1][2 * u] = n as i32;
            }
        }
        let (src, dst) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < cap {
            let mut prev = vec![usize::MAX; nodes];
            prev[src] = src;
            let mut queue = VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                if x == dst {
                    break;
                }
                for y in 0..nodes {
                    if prev[y] == usize::MAX && cap_m[x][y] > 0 {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[dst] == usize::MAX {
                break;
            }
            let mut y = dst;
            while y != src {
                let x = prev[y];
                cap_m[x][y] -= 1;
                cap_m[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    pub fn degree_sum(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum()
    }

    /// Applies `perm` (new label of each old vertex).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for e in self.edges() {
            g.add_edge(perm[e.u], perm[e.v]);
        }
        g
    }

    pub fn to_graph6(&self) -> String {
        emit_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges().map(|e| (e.u, e.v))).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", emit_graph6(self))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&emit_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_graph6(text.as_bytes()).map_err(serde::de::Error::custom)
    }
}

/// Isolated vertices of the subgraph induced by `alive` (mask form).
pub(crate) fn isolated_within(masks: &[u64], alive: u64) -> usize {
    let mut count = 0;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if masks[v] & alive == 0 {
            count += 1;
        }
    }
    count
}

/// Odd components of the subgraph induced by `alive` (mask form).
pub(crate) fn odd_components_within(masks: &[u64], alive: u64) -> usize {
    let mut odd = 0;
    let mut rest = alive;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = masks[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        odd += (comp.count_ones() % 2) as usize;
    }
    odd
}

/// Union of the neighborhoods of the members of `set` (mask form).
pub(crate) fn neighborhood_mask(masks: &[u64], set: u64) -> u64 {
    let mut out = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= masks[v];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    #[test]
    fn neighborhood_examples() {
        let star = star(3);
        assert_eq!(star.neighborhood(&set(4, &[1, 2, 3])).to_vec(), vec![0]);
        assert!(cycle(5).neighborhood(&VertexSet::empty(5)).is_empty());
        assert_eq!(cycle(5).neighborhood(&set(5, &[0, 2])).to_vec(), vec![1, 3, 4]);
    }

    #[test]
    fn deletions() {
        let (k4, map) = complete(5).delete_vertices(&set(5, &[2]));
        assert_eq!(k4, complete(4));
        assert_eq!(map.lift(2), 3);
        assert_eq!(cycle(5).delete_edge(EdgeRef::new(4, 0)).unwrap(), path(5));
        let (leaves, _) = star(3).delete_vertices(&set(4, &[0]));
        assert_eq!(leaves, Graph::empty(3));
        assert_eq!(
            path(3).delete_edge(EdgeRef::new(0, 2)),
            Err(Error::EdgeNotPresent(0, 2))
        );
        let g = petersen();
        assert_eq!(g.delete_vertices(&VertexSet::empty(10)).0, g);
    }

    #[test]
    fn counting() {
        let g = Graph::empty(3);
        assert_eq!((g.isolated_count(), g.odd_components()), (3, 3));
        let k4 = complete(4);
        assert_eq!((k4.isolated_count(), k4.odd_components(), k4.components().len()), (0, 0, 1));
        let p3k1 = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!((p3k1.isolated_count(), p3k1.odd_components()), (1, 2));
    }

    #[test]
    fn degree_claw_connectivity() {
        let s = star(3);
        assert!(!s.is_claw_free());
        assert_eq!(s.vertex_connectivity(), 1);
        assert_eq!(s.min_degree(), Some((1, 1)));
        let k5 = complete(5);
        assert!(k5.is_claw_free());
        assert_eq!(k5.vertex_connectivity(), 4);
        assert_eq!(k5.min_degree().unwrap().0, 4);
        let c5 = cycle(5);
        assert!(c5.is_claw_free());
        assert_eq!(c5.vertex_connectivity(), 2);
        assert_eq!(c5.min_degree().unwrap().0, 2);
        assert_eq!(petersen().vertex_connectivity(), 3);
        assert_eq!(Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().vertex_connectivity(), 0);
    }

    // Brute-force κ: smallest S whose removal disconnects G (or leaves one vertex).
    fn connectivity_oracle(g: &Graph) -> usize {
        let n = g.order();
        for size in 0..n {
            for mask in combinations(n, size) {
                let s = VertexSet::from_mask(n, mask);
                let (h, _) = g.delete_vertices(&s);
                if h.order() >= 2 && !h.is_connected() {
                    return size;
                }
            }
        }
        n.saturating_sub(1)
    }

    #[test]
    fn connectivity_matches_bruteforce() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                assert_eq!(g.vertex_connectivity(), connectivity_oracle(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(Graph::from_edges(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn bipartite_coloring() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(complete_bipartite(3, 3).is_bipartite());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..12).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let mut g = Graph::empty(n);
                    let mut it = bits.into_iter();
                    for j in 1..n {
                        for i in 0..j {
                            if it.next().unwrap() {
                                g.add_edge(i, j);
                            }
                        }
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn handshake(g in arb_graph()) {
                prop_assert!(g.check_invariants().is_ok());
                prop_assert_eq!(g.degree_sum(), 2 * g.size());
            }

            #[test]
            fn independent_sets_avoid_their_neighborhood(g in arb_graph(), mask in any::<u64>()) {
                let s = VertexSet::from_mask(g.order(), mask);
                if g.is_independent(&s) {
                    prop_assert!(g.neighborhood(&s).is_disjoint(&s));
                }
            }

            #[test]
            fn deleting_from_complete(n in 1usize..10, mask in any::<u64>()) {
                let s = VertexSet::from_mask(n, mask);
                let (h, _) = complete(n).delete_vertices(&s);
                prop_assert_eq!(h, complete(n - s.len()));
            }
        }
    }
}
