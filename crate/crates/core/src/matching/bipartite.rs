use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Bipartite graph with parts `0..left` and `0..right`; edges stored from
/// the left side in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            left,
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(left: usize, right: usize, edges: I) -> Result<Self> {
        let mut b = BipartiteGraph::new(left, right);
        for (l, r) in edges {
            if l >= left {
                return Err(Error::VertexOutOfRange { vertex: l, n: left });
            }
            if r >= right {
                return Err(Error::VertexOutOfRange { vertex: r, n: right });
            }
            if b.adj[l].contains(&r) {
                return Err(Error::DuplicateEdge(l, r));
            }
            b.adj[l].push(r);
        }
        for row in &mut b.adj {
            row.sort_unstable();
        }
        Ok(b)
    }

    pub(crate) fn from_rows(right: usize, adj: Vec<Vec<usize>>) -> Self {
        BipartiteGraph {
            left: adj.len(),
            right,
            adj,
        }
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    pub fn has_edge(&self, l: usize, r: usize) -> bool {
        self.adj[l].binary_search(&r).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn right_degree(&self, r: usize) -> usize {
        self.adj.iter().filter(|row| row.contains(&r)).count()
    }

    /// Right-side neighborhood of a set of left vertices.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.right);
        for l in set.iter() {
            for &r in &self.adj[l] {
                out.insert(r);
            }
        }
        out
    }
}

/// A matching of a [`BipartiteGraph`], stored as the partner of each left
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteMatching {
    pub right_size: usize,
    pub mate_of_left: Vec<Option<usize>>,
}

impl BipartiteMatching {
    pub fn empty(left: usize, right: usize) -> Self {
        BipartiteMatching {
            right_size: right,
            mate_of_left: vec![None; left],
        }
    }

    pub fn len(&self) -> usize {
        self.mate_of_left.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mate_of_right(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.right_size];
        for (l, r) in self.mate_of_left.iter().enumerate() {
            if let Some(r) = *r {
                out[r] = Some(l);
            }
        }
        out
    }

    pub fn saturates_left(&self) -> bool {
        self.mate_of_left.iter().all(Option::is_some)
    }

    pub fn is_perfect(&self) -> bool {
        self.saturates_left() && self.mate_of_left.len() == self.right_size
    }

    /// Checks that every pair is an edge of `b` and right ends are distinct.
    pub fn validate(&self, b: &BipartiteGraph) -> std::result::Result<(), String> {
        if self.mate_of_left.len() != b.left || self.right_size != b.right {
            return Err("matching dimensions differ from the graph".into());
        }
        let mut used = vec![false; b.right];
        for (l, r) in self.mate_of_left.iter().enumerate() {
            if let Some(r) = *r {
                if r >= b.right || !b.has_edge(l, r) {
                    return Err(format!("pair ({l}, {r}) is not an edge"));
                }
                if std::mem::replace(&mut used[r], true) {
                    return Err(format!("right vertex {r} matched twice"));
                }
            }
        }
        Ok(())
    }
}

/// Witness that the left side cannot be saturated: `|S| > |N(S)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallViolator {
    pub set: VertexSet,
    pub neighborhood_size: usize,
}

impl HallViolator {
    pub fn deficiency(&self) -> usize {
        self.set.len() - self.neighborhood_size
    }
}

/// Maximum matching by Hopcroft-Karp. Deterministic for a given edge order.
pub fn max_bipartite_matching(b: &BipartiteGraph) -> BipartiteMatching {
    const FREE: usize = usize::MAX;
    let (nl, nr) = (b.left, b.right);
    let mut mate_l = vec![FREE; nl];
    let mut mate_r = vec![FREE; nr];
    let mut dist = vec![0usize; nl];

    let bfs = |mate_l: &[usize], mate_r: &[usize], dist: &mut [usize]| -> bool {
        let mut queue = VecDeque::new();
        for l in 0..nl {
            if mate_l[l] == FREE {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &b.adj[l] {
                let next = mate_r[r];
                if next == FREE {
                    found = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        found
    };

    fn dfs(
        l: usize,
        b: &BipartiteGraph,
        mate_l: &mut [usize],
        mate_r: &mut [usize],
        dist: &mut [usize],
    ) -> bool {
        for i in 0..b.adj[l].len() {
            let r = b.adj[l][i];
            let next = mate_r[r];
            if next == usize::MAX
                || (dist[next] == dist[l] + 1 && dfs(next, b, mate_l, mate_r, dist))
            {
                mate_l[l] = r;
                mate_r[r] = l;
                return true;
            }
        }
        dist[l] = usize::MAX;
        false
    }

    while bfs(&mate_l, &mate_r, &mut dist) {
        for l in 0..nl {
            if mate_l[l] == FREE {
                dfs(l, b, &mut mate_l, &mut mate_r, &mut dist);
            }
        }
    }

    BipartiteMatching {
        right_size: nr,
        mate_of_left: mate_l
            .into_iter()
            .map(|r| (r != FREE).then_some(r))
            .collect(),
    }
}

/// Extracts the Hall violator certifying that `m` leaves left vertices
/// exposed.
///
/// `S` is the set of left vertices reachable from the exposed left vertices
/// by alternating paths; every right vertex reached is matched back into `S`,
/// so `|N(S)| = |S| - #exposed`. Returns `None` when `m` saturates the left
/// side and `MatchingNotMaximum` if the search reaches an exposed right
/// vertex.
pub fn hall_violator(b: &BipartiteGraph, m: &BipartiteMatching) -> Result<Option<HallViolator>> {
    m.validate(b).map_err(Error::InvalidViolator)?;
    if m.saturates_left() {
        return Ok(None);
    }
    let mate_r = m.mate_of_right();
    let mut in_s = VertexSet::empty(b.left);
    let mut reached = VertexSet::empty(b.right);
    let mut queue = VecDeque::new();
    let mut root = vec![usize::MAX; b.left];
    for (l, mate) in m.mate_of_left.iter().enumerate() {
        if mate.is_none() {
            in_s.insert(l);
            root[l] = l;
            queue.push_back(l);
        }
    }
    while let Some(l) = queue.pop_front() {
        for &r in &b.adj[l] {
            if !reached.insert(r) {
                continue;
            }
            match mate_r[r] {
                None => return Err(Error::MatchingNotMaximum(root[l])),
                Some(next) => {
                    if in_s.insert(next) {
                        root[next] = root[l];
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    debug_assert!(in_s.len() > reached.len());
    Ok(Some(HallViolator {
        neighborhood_size: reached.len(),
        set: in_s,
    }))
}
