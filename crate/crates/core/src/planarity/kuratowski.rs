use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Relabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

impl fmt::Display for KuratowskiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KuratowskiKind::K5 => "K5",
            KuratowskiKind::K33 => "K3,3",
        })
    }
}

/// A subdivision of K5 or K3,3 inside a graph.
///
/// For K5, `paths` lists one path per pair `i < j` of branch vertices in
/// lexicographic order of `(i, j)`, running from `branch_vertices[i]` to
/// `branch_vertices[j]`. For K3,3, the first three branch vertices form one
/// side and the last three the other; `paths` lists the nine pairs
/// `(a, b)` side by side, each running from `a` to `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl KuratowskiWitness {
    /// Branch vertex pairs in the order `paths` must follow.
    pub fn required_pairs(&self) -> Vec<(usize, usize)> {
        let b = &self.branch_vertices;
        match self.kind {
            KuratowskiKind::K5 => (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (b[i], b[j])))
                .collect(),
            KuratowskiKind::K33 => (0..3)
                .flat_map(|i| (3..6).map(move |j| (b[i], b[j])))
                .collect(),
        }
    }

    pub(crate) fn lift(&self, relabel: &Relabeling) -> Self {
        KuratowskiWitness {
            kind: self.kind,
            branch_vertices: self.branch_vertices.iter().map(|&v| relabel.lift(v)).collect(),
            paths: self
                .paths
                .iter()
                .map(|p| p.iter().map(|&v| relabel.lift(v)).collect())
                .collect(),
        }
    }
}

/// Checks every structural requirement of a subdivision witness against
/// `g`, independently of how the witness was found.
pub fn verify_kuratowski(g: &Graph, w: &KuratowskiWitness) -> Result<(), String> {
    let n = g.order();
    let expected = match w.kind {
        KuratowskiKind::K5 => (5, 10),
        KuratowskiKind::K33 => (6, 9),
    };
    if w.branch_vertices.len() != expected.0 {
        return Err(format!("{} needs {} branch vertices", w.kind, expected.0));
    }
    if w.paths.len() != expected.1 {
        return Err(format!("{} needs {} paths, found {}", w.kind, expected.1, w.paths.len()));
    }
    let mut role = vec![0u8; n]; // 0 unused, 1 branch, 2 path interior
    for &b in &w.branch_vertices {
        if b >= n {
            return Err(format!("branch vertex {b} out of range"));
        }
        if role[b] != 0 {
            return Err(format!("branch vertex {b} repeated"));
        }
        role[b] = 1;
    }
    for (path, (a, b)) in w.paths.iter().zip(w.required_pairs()) {
        if path.len() < 2 || path[0] != a || path[path.len() - 1] != b {
            return Err(format!("path {path:?} does not join {a} and {b}"));
        }
        for pair in path.windows(2) {
            if pair[0] >= n || pair[1] >= n || !g.has_edge(pair[0], pair[1]) {
                return Err(format!("{}-{} is not an edge", pair[0], pair[1]));
            }
        }
        for &v in &path[1..path.len() - 1] {
            match role[v] {
                0 => role[v] = 2,
                1 => return Err(format!("path {a}..{b} passes through branch vertex {v}")),
                _ => return Err(format!("vertex {v} lies on two paths or repeats")),
            }
        }
    }
    Ok(())
}

/// Reads the subdivision off an edge-minimal non-planar graph, where every
/// vertex has degree 0, 2 or the branch degree.
pub(crate) fn extract(h: &Graph) -> KuratowskiWitness {
    let branch: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = match (branch.len(), h.degree(branch[0])) {
        (5, 4) => KuratowskiKind::K5,
        (6, 3) => KuratowskiKind::K33,
        other => panic!("edge-minimal non-planar graph has branch profile {other:?}"),
    };
    let mut routes = std::collections::BTreeMap::new();
    for &b in &branch {
        for first in h.neighbors(b).iter() {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while h.degree(cur) == 2 {
                let next = h.neighbors(cur).iter().find(|&x| x != prev).unwrap();
                path.push(next);
                prev = cur;
                cur = next;
            }
            routes.insert((b, cur), path);
        }
    }
    let branch_vertices = match kind {
        KuratowskiKind::K5 => branch,
        KuratowskiKind::K33 => {
            let side_b: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|&v| routes.contains_key(&(branch[0], v)))
                .collect();
            let mut side: Vec<usize> = branch.iter().copied().filter(|v| !side_b.contains(v)).collect();
            side.extend(side_b);
            side
        }
    };
    let mut w = KuratowskiWitness {
        kind,
        branch_vertices,
        paths: Vec::new(),
    };
    w.paths = w.required_pairs().into_iter().map(|p| routes[&p].clone()).collect();
    w
}
