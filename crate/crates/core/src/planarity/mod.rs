//! Planarity with certificates in both directions, k-planarity (planarity
//! after deleting any k vertices), and the degree lemmas for planar
//! bipartite graphs.
//!
//! A planar verdict carries a rotation system checked by face tracing and
//! Euler's relation per component; a non-planar verdict carries a K5 or
//! K3,3 subdivision checked edge by edge.

mod embed;
mod kuratowski;
mod lemma;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{combinations, Graph, VertexSet};
use crate::matching::BRUTE_FORCE_LIMIT;

pub use kuratowski::{verify_kuratowski, KuratowskiKind, KuratowskiWitness};
pub use lemma::{verify_degree_lemma, DegreeLemmaReport, HypothesisFailure, LemmaVariant};

/// Cyclic order of neighbors around each vertex. In a simple graph an
/// incident edge is named by its other end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub order: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn order(&self) -> usize {
        self.order.len()
    }

    fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.order() {
            return Err(Error::MalformedRotation(format!(
                "rotation has {} vertices, graph has {}",
                self.order.len(),
                g.order()
            )));
        }
        for (v, rot) in self.order.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v).to_vec() {
                return Err(Error::MalformedRotation(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
        }
        Ok(())
    }

    /// Traces faces: dart `(u, v)` is followed by `(v, w)` where `w` comes
    /// right after `u` in the rotation at `v`. Each face is listed as the
    /// tail vertices of its darts.
    pub fn faces(&self, g: &Graph) -> Result<Vec<Vec<usize>>> {
        self.check_shape(g)?;
        let mut position = HashMap::new();
        for (v, rot) in self.order.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                position.insert((v, u), i);
            }
        }
        let mut seen = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for (u, rot) in self.order.iter().enumerate() {
            for &v in rot {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b)) {
                    face.push(a);
                    let rot_b = &self.order[b];
                    let next = rot_b[(position[&(b, a)] + 1) % rot_b.len()];
                    a = b;
                    b = next;
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }
}

/// True when the rotation is a planar embedding of `g`: every component
/// satisfies `n_c - m_c + f_c = 2`, an isolated vertex counting as one face.
pub fn verify_embedding(g: &Graph, rot: &RotationSystem) -> Result<bool> {
    let faces = rot.faces(g)?;
    let components = g.components();
    let mut comp_of = vec![0; g.order()];
    for (c, set) in components.iter().enumerate() {
        set.iter().for_each(|v| comp_of[v] = c);
    }
    let mut face_count = vec![0usize; components.len()];
    for f in &faces {
        face_count[comp_of[f[0]]] += 1;
    }
    Ok(components.iter().enumerate().all(|(c, set)| {
        let n_c = set.len();
        let m_c: usize = set.iter().map(|v| g.degree(v)).sum::<usize>() / 2;
        let f_c = if m_c == 0 { 1 } else { face_count[c] };
        n_c + f_c == m_c + 2
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanarityVerdict {
    Planar(RotationSystem),
    NonPlanar(KuratowskiWitness),
}

impl PlanarityVerdict {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityVerdict::Planar(_))
    }

    /// Re-checks the carried certificate against `g`.
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        match self {
            PlanarityVerdict::Planar(rot) => match verify_embedding(g, rot) {
                Ok(true) => Ok(()),
                Ok(false) => Err("rotation system violates Euler's relation".into()),
                Err(e) => Err(e.to_string()),
            },
            PlanarityVerdict::NonPlanar(w) => verify_kuratowski(g, w),
        }
    }
}

/// Planarity without a certificate.
pub fn planar(g: &Graph) -> bool {
    embed::embed(g).is_some()
}

pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    if let Some(order) = embed::embed(g) {
        return PlanarityVerdict::Planar(RotationSystem { order });
    }
    // Drop every edge whose removal keeps the graph non-planar; what is left
    // is a subdivision of K5 or K3,3.
    let mut h = g.clone();
    for e in g.edges() {
        h.remove_edge(e.u, e.v);
        if planar(&h) {
            h.add_edge(e.u, e.v);
        }
    }
    PlanarityVerdict::NonPlanar(kuratowski::extract(&h))
}

/// Outcome of a k-planarity scan. On failure, `deleted` is the first `S`
/// (lexicographic among k-subsets) with `G - S` non-planar and `witness` is
/// a subdivision inside `G - S`, in the labels of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KPlanarVerdict {
    pub k: usize,
    pub k_planar: bool,
    pub deleted: Option<VertexSet>,
    pub witness: Option<KuratowskiWitness>,
}

pub fn is_k_planar(g: &Graph, k: usize) -> Result<KPlanarVerdict> {
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
    let holds = KPlanarVerdict {
        k,
        k_planar: true,
        deleted: None,
        witness: None,
    };
    // Planarity is closed under vertex deletion.
    if planar(g) {
        return Ok(holds);
    }
    for mask in combinations(n, k) {
        let s = VertexSet::from_mask(n, mask);
        let (h, relabel) = g.delete_vertices(&s);
        if !planar(&h) {
            let PlanarityVerdict::NonPlanar(w) = is_planar(&h) else {
                unreachable!("planarity answers disagree")
            };
            return Ok(KPlanarVerdict {
                k,
                k_planar: false,
                deleted: Some(s),
                witness: Some(w.lift(&relabel)),
            });
        }
    }
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;
    use crate::graph::named::*;

    fn face_count(g: &Graph) -> usize {
        match is_planar(g) {
            PlanarityVerdict::Planar(rot) => rot.faces(g).unwrap().len(),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn planar_examples() {
        assert_eq!(face_count(&complete(4)), 4);
        assert_eq!(face_count(&cycle(4)), 2);
        let w = match is_planar(&complete(5)) {
            PlanarityVerdict::NonPlanar(w) => w,
            other => panic!("{other:?}"),
        };
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert_eq!(w.branch_vertices, vec![0, 1, 2, 3, 4]);
        assert!(w.paths.iter().all(|p| p.len() == 2));
        let k33 = complete_bipartite(3, 3);
        match is_planar(&k33) {
            PlanarityVerdict::NonPlanar(w) => {
                assert_eq!(w.kind, KuratowskiKind::K33);
                verify_kuratowski(&k33, &w).unwrap();
            }
            other => panic!("{other:?}"),
        }
        let p = petersen();
        match is_planar(&p) {
            PlanarityVerdict::NonPlanar(w) => verify_kuratowski(&p, &w).unwrap(),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn embedding_examples() {
        let c4 = cycle(4);
        let natural = RotationSystem {
            order: vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]],
        };
        assert!(verify_embedding(&c4, &natural).unwrap());
        assert_eq!(natural.faces(&c4).unwrap().len(), 2);

        // K4: vertex 3 in the middle of triangle 0-1-2
        let k4 = complete(4);
        let good = RotationSystem {
            order: vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
        };
        assert!(verify_embedding(&k4, &good).unwrap());
        assert_eq!(good.faces(&k4).unwrap().len(), 4);
        let mut crossed = good.clone();
        crossed.order[3].swap(0, 1);
        assert!(!verify_embedding(&k4, &crossed).unwrap());
        assert_ne!(crossed.faces(&k4).unwrap().len(), 4);

        let short = RotationSystem {
            order: vec![vec![1], vec![0, 2], vec![1, 3], vec![0, 2]],
        };
        assert!(matches!(verify_embedding(&c4, &short), Err(Error::MalformedRotation(_))));
    }

    #[test]
    fn kuratowski_verifier_examples() {
        let k5 = complete(5);
        let identity = KuratowskiWitness {
            kind: KuratowskiKind::K5,
            branch_vertices: vec![0, 1, 2, 3, 4],
            paths: Vec::new(),
        };
        let identity = KuratowskiWitness {
            paths: identity.required_pairs().into_iter().map(|(a, b)| vec![a, b]).collect(),
            ..identity
        };
        verify_kuratowski(&k5, &identity).unwrap();
        let k6 = complete(6);
        for skip in 0..6 {
            let branch: Vec<usize> = (0..6).filter(|&v| v != skip).collect();
            let w = KuratowskiWitness {
                kind: KuratowskiKind::K5,
                paths: (0..5)
                    .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                    .map(|(i, j)| vec![branch[i], branch[j]])
                    .collect(),
                branch_vertices: branch,
            };
            verify_kuratowski(&k6, &w).unwrap();
        }
        let mut c5 = identity.clone();
        c5.paths[1] = vec![0, 2];
        assert!(verify_kuratowski(&cycle(5), &c5).is_err());
        // path reusing a branch vertex
        let mut bad = identity.clone();
        bad.paths[0] = vec![0, 2, 1];
        assert!(verify_kuratowski(&k5, &bad).is_err());
    }

    #[test]
    fn k_planar_examples() {
        assert!(is_k_planar(&complete(5), 1).unwrap().k_planar);
        let v = is_k_planar(&complete(6), 1).unwrap();
        assert!(!v.k_planar);
        assert_eq!(v.deleted.as_ref().unwrap().to_vec(), vec![0]);
        let w = v.witness.unwrap();
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert!(!w.branch_vertices.contains(&0));
        verify_kuratowski(&complete(6), &w).unwrap();
        assert!(is_k_planar(&complete(4), 0).unwrap().k_planar);
        assert_eq!(is_k_planar(&complete(4), 4), Err(Error::KOutOfRange { k: 4, n: 4 }));
    }

    #[test]
    fn certificates_verify_exhaustively() {
        for n in 0..=7 {
            for g in enumerate_graphs(n).unwrap() {
                let verdict = is_planar(&g);
                verdict.verify(&g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
                if verdict.is_planar() && n >= 3 {
                    assert!(g.size() <= 3 * n - 6);
                    if g.is_bipartite() {
                        assert!(g.size() <= 2 * n - 4);
                    }
                }
            }
        }
    }

    #[test]
    fn planarity_is_minor_monotone() {
        for n in 1..=7 {
            for g in enumerate_graphs(n).unwrap() {
                if !planar(&g) {
                    continue;
                }
                for e in g.edges() {
                    assert!(planar(&g.delete_edge(e).unwrap()));
                }
                for v in 0..n {
                    assert!(planar(&g.delete_vertices(&VertexSet::from_members(n, [v])).0));
                }
            }
        }
    }

    #[test]
    fn planar_count_matches_known_totals() {
        // connected planar graphs on n vertices: 1, 1, 2, 6, 20, 99, 646
        let expected = [1usize, 1, 2, 6, 20, 99, 646];
        for (n, &want) in (1..=7).zip(&expected) {
            let got = enumerate_graphs(n)
                .unwrap()
                .iter()
                .filter(|g| g.is_connected() && planar(g))
                .count();
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn larger_random_graphs_certify() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
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
            is_planar(&g).verify(&g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
        }
    }
}
