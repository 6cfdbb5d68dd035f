//! Low-degree vertices in planar bipartite graphs.
//!
//! A planar bipartite graph on `n >= 3` vertices has `m <= 2n - 4`, since
//! every face has length at least four. Under each balance condition below
//! this forces a vertex of the side `A` with degree at most three, possibly
//! after adding one chord inside `A`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaVariant {
    /// `|A| = |B|`, no chord.
    Balanced,
    /// `|B| + 1 <= |A| <= |B| + 2`, one chord inside `A`.
    ChordSurplus,
    /// `|A| = |B| - 1`, no chord.
    Deficit,
    /// `|B| <= |A| <= |B| + 1`, one chord inside `A`.
    ChordNearBalanced,
}

impl LemmaVariant {
    pub const ALL: [LemmaVariant; 4] = [
        LemmaVariant::Balanced,
        LemmaVariant::ChordSurplus,
        LemmaVariant::Deficit,
        LemmaVariant::ChordNearBalanced,
    ];

    pub fn needs_chord(self) -> bool {
        matches!(self, LemmaVariant::ChordSurplus | LemmaVariant::ChordNearBalanced)
    }

    /// Whether part sizes `(a, b)` satisfy the balance condition.
    pub fn sizes_fit(self, a: usize, b: usize) -> bool {
        match self {
            LemmaVariant::Balanced => a == b,
            LemmaVariant::ChordSurplus => b < a && a <= b + 2,
            LemmaVariant::Deficit => a + 1 == b,
            LemmaVariant::ChordNearBalanced => b <= a && a <= b + 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisFailure {
    /// `A` and `B` do not partition the vertex set.
    NotPartition,
    /// The variant needs a chord and none was given, or the chord is not an
    /// edge of the graph.
    ChordMissing,
    /// A chord was given for a variant without one.
    UnexpectedChord,
    /// The chord does not join two vertices of `A`.
    ChordNotInA,
    /// Fewer than three vertices; the edge bound fails there.
    TooSmall,
    /// The graph in scope has an edge inside `A` or inside `B`.
    NotBipartite,
    /// Part sizes violate the variant's balance condition.
    Unbalanced,
    NonPlanar,
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisFailure::NotPartition => "A and B do not partition V",
            HypothesisFailure::ChordMissing => "chord inside A missing",
            HypothesisFailure::UnexpectedChord => "variant takes no chord",
            HypothesisFailure::ChordNotInA => "chord does not join two vertices of A",
            HypothesisFailure::TooSmall => "fewer than 3 vertices",
            HypothesisFailure::NotBipartite => "not bipartite with parts A, B",
            HypothesisFailure::Unbalanced => "part sizes violate the balance condition",
            HypothesisFailure::NonPlanar => "not planar",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeLemmaReport {
    pub variant: LemmaVariant,
    /// Vertex of `A` of least degree in `H` (ties to the least label).
    pub low_vertex: usize,
    pub low_degree: usize,
    pub n: usize,
    /// Edges of the bipartite planar graph in scope (`H` or `H - e`).
    pub m: usize,
    /// `2n - 4`.
    pub bound: usize,
}

impl DegreeLemmaReport {
    pub fn tight(&self) -> bool {
        self.m == self.bound
    }
}

fn violated(f: HypothesisFailure) -> Error {
    Error::HypothesisViolated(f)
}

/// Verifies the hypotheses of the chosen variant, then returns a vertex of
/// `A` with degree at most three in `H` together with the edge count of the
/// bipartite graph in scope against `2n - 4`.
pub fn verify_degree_lemma(
    h: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    variant: LemmaVariant,
    chord: Option<EdgeRef>,
) -> Result<DegreeLemmaReport> {
    let n = h.order();
    if a.universe() != n
        || b.universe() != n
        || !a.is_disjoint(b)
        || a.len() + b.len() != n
    {
        return Err(violated(HypothesisFailure::NotPartition));
    }
    let scope = match (variant.needs_chord(), chord) {
        (true, None) => return Err(violated(HypothesisFailure::ChordMissing)),
        (false, Some(_)) => return Err(violated(HypothesisFailure::UnexpectedChord)),
        (true, Some(e)) => {
            if e.v >= n || !h.has_edge(e.u, e.v) {
                return Err(violated(HypothesisFailure::ChordMissing));
            }
            if !a.contains(e.u) || !a.contains(e.v) {
                return Err(violated(HypothesisFailure::ChordNotInA));
            }
            h.delete_edge(e)?
        }
        (false, None) => h.clone(),
    };
    if n < 3 {
        return Err(violated(HypothesisFailure::TooSmall));
    }
    if !scope.is_independent(a) || !scope.is_independent(b) {
        return Err(violated(HypothesisFailure::NotBipartite));
    }
    if !variant.sizes_fit(a.len(), b.len()) {
        return Err(violated(HypothesisFailure::Unbalanced));
    }
    if !super::planar(&scope) {
        return Err(violated(HypothesisFailure::NonPlanar));
    }
    let bound = 2 * n - 4;
    let m = scope.size();
    if m > bound {
        return Err(Error::ContradictionDetected(format!(
            "planar bipartite graph {} has {m} > 2n - 4 edges",
            scope.to_graph6()
        )));
    }
    let (low_degree, low_vertex) = a
        .iter()
        .map(|v| (h.degree(v), v))
        .min()
        .expect("balance conditions force A to be nonempty");
    if low_degree > 3 {
        return Err(Error::ContradictionDetected(format!(
            "every vertex of A has degree at least 4 in {}",
            h.to_graph6()
        )));
    }
    Ok(DegreeLemmaReport {
        variant,
        low_vertex,
        low_degree,
        n,
        m,
        bound,
    })
}
