//! Path-addition planarity test (Demoucron, Malgrange, Pertuiset) run on
//! each biconnected block, with the block embeddings glued at cut vertices.

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Edge sets of the biconnected blocks, found by an iterative DFS.
pub(crate) fn blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != NONE || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack = vec![(root, NONE, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < adj[v].len() {
                let w = adj[v][top.2];
                top.2 += 1;
                if disc[w] == NONE {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

enum Fragment {
    Edge(usize, usize),
    Component { id: usize, attachments: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component { attachments, .. } => attachments.clone(),
        }
    }
}

// Shortest path from `from` to `to` that does not use the edge between them.
fn path_avoiding_edge(adj: &[Vec<usize>], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![NONE; adj.len()];
    parent[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if parent[w] != NONE || (v == from && w == to) {
                continue;
            }
            parent[w] = v;
            if w == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

/// Faces of a planar embedding of a biconnected graph with at least three
/// vertices, each an oriented vertex cycle; every edge is traversed once in
/// each direction. `None` when the graph is not planar.
fn embed_biconnected(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if m > 3 * n - 6 {
        return None;
    }
    let mut placed_v = vec![false; n];
    let mut placed_e = vec![false; n * n];
    let cycle = path_avoiding_edge(adj, adj[0][0], 0).expect("biconnected block has a cycle");
    for (i, &v) in cycle.iter().enumerate() {
        let w = cycle[(i + 1) % cycle.len()];
        placed_v[v] = true;
        placed_e[v * n + w] = true;
        placed_e[w * n + v] = true;
    }
    let mut placed = cycle.len();
    let mut faces = vec![cycle.clone(), cycle.into_iter().rev().collect::<Vec<_>>()];

    let mut comp = vec![NONE; n];
    while placed < m {
        comp.iter_mut().for_each(|c| *c = NONE);
        let mut fragments = Vec::new();
        for u in 0..n {
            if placed_v[u] {
                for &v in &adj[u] {
                    if u < v && placed_v[v] && !placed_e[u * n + v] {
                        fragments.push(Fragment::Edge(u, v));
                    }
                }
            } else if comp[u] == NONE {
                let id = u;
                comp[u] = id;
                let mut queue = vec![u];
                let mut attachments = Vec::new();
                while let Some(v) = queue.pop() {
                    for &w in &adj[v] {
                        if placed_v[w] {
                            attachments.push(w);
                        } else if comp[w] == NONE {
                            comp[w] = id;
                            queue.push(w);
                        }
                    }
                }
                attachments.sort_unstable();
                attachments.dedup();
                fragments.push(Fragment::Component { id, attachments });
            }
        }

        let membership: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut on = vec![false; n];
                f.iter().for_each(|&v| on[v] = true);
                on
            })
            .collect();
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| att.iter().all(|&v| membership[f][v]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("unplaced edges leave a fragment");

        let path = match &fragments[fi] {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component { id, attachments } => {
                let (x, y) = (attachments[0], attachments[1]);
                let mut parent = vec![NONE; n];
                let mut queue = std::collections::VecDeque::new();
                for &c in &adj[x] {
                    if comp[c] == *id {
                        parent[c] = x;
                        queue.push_back(c);
                    }
                }
                let mut end = NONE;
                while let Some(c) = queue.pop_front() {
                    if adj[c].contains(&y) {
                        end = c;
                        break;
                    }
                    for &d in &adj[c] {
                        if comp[d] == *id && parent[d] == NONE {
                            parent[d] = c;
                            queue.push_back(d);
                        }
                    }
                }
                let mut path = vec![y];
                let mut cur = end;
                while cur != x {
                    path.push(cur);
                    cur = parent[cur];
                }
                path.push(x);
                path.reverse();
                path
            }
        };

        let face = &faces[face_idx];
        let (x, y) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&v| v == x).unwrap();
        let j = face.iter().position(|&v| v == y).unwrap();
        let segment = |from: usize, to: usize| {
            let mut out = vec![face[from]];
            let mut k = from;
            while k != to {
                k = (k + 1) % face.len();
                out.push(face[k]);
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut first = segment(i, j);
        first.extend(interior.iter().rev());
        let mut second = segment(j, i);
        second.extend(interior.iter());
        faces[face_idx] = first;
        faces.push(second);

        for w in path.windows(2) {
            placed_v[w[1]] = true;
            placed_e[w[0] * n + w[1]] = true;
            placed_e[w[1] * n + w[0]] = true;
        }
        placed += path.len() - 1;
    }
    Some(faces)
}

/// Cyclic neighbor order of every vertex in a planar embedding, or `None`
/// when `g` is not planar.
pub(crate) fn embed(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return None;
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut order = vec![Vec::new(); n];
    let mut local = vec![NONE; n];
    for block in blocks(&adj) {
        if block.len() == 1 {
            let (u, v) = block[0];
            order[u].push(v);
            order[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let mut ladj = vec![Vec::new(); verts.len()];
        for &(u, v) in &block {
            ladj[local[u]].push(local[v]);
            ladj[local[v]].push(local[u]);
        }
        let faces = embed_biconnected(&ladj)?;
        // succ[v] maps u to w for every face corner u -> v -> w
        let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts.len()];
        for f in &faces {
            let len = f.len();
            for k in 0..len {
                let (u, v, w) = (f[(k + len - 1) % len], f[k], f[(k + 1) % len]);
                succ[v].push((u, w));
            }
        }
        for (lv, pairs) in succ.iter().enumerate() {
            let start = pairs[0].0;
            let mut cur = start;
            loop {
                order[verts[lv]].push(verts[cur]);
                cur = pairs.iter().find(|p| p.0 == cur).unwrap().1;
                if cur == start {
                    break;
                }
            }
        }
    }
    Some(order)
}
