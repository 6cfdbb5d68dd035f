//! Named example graphs whose documented properties are re-proved when the
//! registry loads.

use serde::Serialize;

use crate::criticality::{is_k_sachs_critical, is_minimal_k_sachs_critical};
use crate::error::{Error, Result};
use crate::graph::{named, EdgeRef, Graph, VertexSet};
use crate::planarity::{is_k_planar, planar};
use crate::sachs::{has_factor, DeficiencyCertificate};

#[derive(Debug, Clone, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: Graph,
    /// Display names of the vertices, when the source uses letters.
    pub labels: Option<Vec<&'static str>>,
    pub k: usize,
    /// Edge whose removal destroys k-criticality.
    pub breaking_edge: Option<EdgeRef>,
    /// Deficiency set certifying that `G - breaking_edge` is not k-critical.
    pub highlighted: Option<VertexSet>,
    /// Expected minimum degree.
    pub delta: usize,
    pub expect_minimal: bool,
    /// Deletion depth `j` such that every `G - S` with `|S| = j` is planar.
    pub planar_after: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureCheck {
    pub fixture: &'static str,
    pub property: String,
    pub holds: bool,
}

impl Fixture {
    /// Re-proves every documented property.
    pub fn self_check(&self) -> Vec<FixtureCheck> {
        let g = &self.graph;
        let k = self.k;
        let mut out = Vec::new();
        let mut push = |property: String, holds: bool| {
            out.push(FixtureCheck {
                fixture: self.name,
                property,
                holds,
            })
        };
        push(
            format!("{k}-{{1,2}}-factor-critical"),
            is_k_sachs_critical(g, k).map(|v| v.critical).unwrap_or(false),
        );
        if k == 0 {
            push("has a {1,2}-factor".into(), has_factor(g));
        }
        push(format!("minimum degree {}", self.delta), g.min_degree().map(|d| d.0) == Some(self.delta));
        if self.expect_minimal {
            push(
                format!("minimal {k}-{{1,2}}-factor-critical"),
                is_minimal_k_sachs_critical(g, k).map(|v| v.minimal).unwrap_or(false),
            );
        }
        match self.planar_after {
            Some(0) => push("planar".into(), planar(g)),
            Some(j) => push(
                format!("G - S planar for every |S| = {j}"),
                is_k_planar(g, j).map(|v| v.k_planar).unwrap_or(false),
            ),
            None => {}
        }
        if let Some(e) = self.breaking_edge {
            let h = g.delete_edge(e).ok();
            push(
                format!("G - {e} is not {k}-critical"),
                h.as_ref()
                    .map(|h| !is_k_sachs_critical(h, k).map(|v| v.critical).unwrap_or(true))
                    .unwrap_or(false),
            );
            if let (Some(h), Some(s)) = (h, &self.highlighted) {
                let isolated = h.delete_vertices(s).0.isolated_count();
                let cert = DeficiencyCertificate {
                    set: s.clone(),
                    isolated,
                    k,
                };
                push(
                    format!("i((G - e) - {s}) = {isolated} > |S| - k = {}", s.len() as isize - k as isize),
                    cert.verify(&h).is_ok(),
                );
            }
        }
        out
    }

    /// Vertex name for display.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(names) => names[v].to_string(),
            None => v.to_string(),
        }
    }
}

/// The seven-vertex planar graph with a {1,2}-factor, minimum degree 3 and
/// an edge whose removal destroys every {1,2}-factor. Vertices
/// `a b c d f g h` are `0..7`; the breaking edge is `ac` and `{b, d, g}`
/// leaves four isolated vertices in `G - ac`.
pub fn planar_delta3_breaking() -> Graph {
    Graph::from_edges(
        7,
        [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (4, 5), (3, 5), (3, 6), (1, 6), (5, 6), (0, 3), (0, 2)],
    )
    .expect("static edge list")
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureRegistry {
    fixtures: Vec<Fixture>,
    checks: Vec<FixtureCheck>,
}

impl FixtureRegistry {
    /// Builds every fixture and re-proves its properties; any failing
    /// property is a `ContradictionDetected` error.
    pub fn load() -> Result<Self> {
        let fixtures = builtin();
        let checks: Vec<FixtureCheck> = fixtures.iter().flat_map(Fixture::self_check).collect();
        if let Some(bad) = checks.iter().find(|c| !c.holds) {
            return Err(Error::ContradictionDetected(format!(
                "fixture {} fails: {}",
                bad.fixture, bad.property
            )));
        }
        Ok(FixtureRegistry { fixtures, checks })
    }

    pub fn get(&self, name: &str) -> Option<&Fixture> {
        self.fixtures.iter().find(|f| f.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Fixture> {
        self.fixtures.iter()
    }

    pub fn checks(&self) -> &[FixtureCheck] {
        &self.checks
    }
}

fn builtin() -> Vec<Fixture> {
    let plain = |name, description, graph: Graph, k, delta| Fixture {
        name,
        description,
        graph,
        labels: None,
        k,
        breaking_edge: None,
        highlighted: None,
        delta,
        expect_minimal: false,
        planar_after: None,
    };
    vec![
        Fixture {
            labels: Some(vec!["a", "b", "c", "d", "f", "g", "h"]),
            breaking_edge: Some(EdgeRef::new(0, 2)),
            highlighted: Some(VertexSet::from_members(7, [1, 3, 5])),
            planar_after: Some(0),
            ..plain(
                "planar-delta3-breaking",
                "planar, has a {1,2}-factor, minimum degree 3, and G - ac has none",
                planar_delta3_breaking(),
                0,
                3,
            )
        },
        Fixture {
            breaking_edge: Some(EdgeRef::new(0, 1)),
            planar_after: Some(0),
            ..plain("k2", "0-critical with a breaking edge, minimum degree 1", named::complete(2), 0, 1)
        },
        Fixture {
            breaking_edge: Some(EdgeRef::new(0, 1)),
            planar_after: Some(0),
            ..plain("k3", "0-critical with a breaking edge, minimum degree 2", named::complete(3), 0, 2)
        },
        Fixture {
            expect_minimal: true,
            planar_after: Some(0),
            ..plain("k4", "minimal 1-critical planar graph, minimum degree 3", named::complete(4), 1, 3)
        },
        Fixture {
            expect_minimal: true,
            planar_after: Some(0),
            ..plain("k4-level2", "minimal 2-critical planar graph, minimum degree 3", named::complete(4), 2, 3)
        },
        Fixture {
            expect_minimal: true,
            planar_after: Some(1),
            ..plain(
                "k5",
                "minimal 2-critical, every K5 - v planar, minimum degree 4",
                named::complete(5),
                2,
                4,
            )
        },
        Fixture {
            expect_minimal: true,
            planar_after: Some(0),
            ..plain("c5", "minimal 1-critical planar graph, minimum degree 2", named::cycle(5), 1, 2)
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_loads_and_all_checks_hold() {
        let reg = FixtureRegistry::load().unwrap();
        assert!(reg.checks().iter().all(|c| c.holds));
        let f = reg.get("planar-delta3-breaking").unwrap();
        assert_eq!(f.graph.size(), 12);
        assert_eq!(f.label(4), "f");
        assert_eq!(reg.checks().iter().filter(|c| c.fixture == f.name).count(), 6);
    }

    #[test]
    fn a_wrong_claim_is_caught() {
        let mut f = builtin().remove(0);
        f.delta = 2;
        assert!(f.self_check().iter().any(|c| !c.holds));
    }
}
