//! Standard small graphs used by tests, fixtures and campaigns.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            g.add_edge(i, j);
        }
    }
    g
}

/// `C_n` on `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// `P_n`, the path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for x in 0..a {
        for y in a..a + b {
            g.add_edge(x, y);
        }
    }
    g
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    g
}
