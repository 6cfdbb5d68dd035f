use serde::{Deserialize, Serialize};

use crate::critical_structure::{difference, fast_critical_difference, CriticalPair};
use crate::criticality::{is_k_sachs_critical, CriticalityFailure, FactorMode};
use crate::graph::{EdgeRef, Graph, VertexSet};
use crate::matching::{is_k_factor_critical, FactorCriticalFailure, Matching, TutteViolator};
use crate::planarity::{verify_embedding, verify_kuratowski, KuratowskiWitness, RotationSystem};
use crate::sachs::{DeficiencyCertificate, OneTwoFactor};

/// Any witness the harness emits. Each variant re-verifies against the
/// graph it was issued for without trusting the code that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Factor {
        factor: OneTwoFactor,
    },
    Deficiency {
        certificate: DeficiencyCertificate,
    },
    CriticalityFailure {
        k: usize,
        failure: CriticalityFailure,
    },
    /// `G - edge` is not k-critical, shown by `failure`.
    BreakingEdge {
        k: usize,
        edge: EdgeRef,
        failure: CriticalityFailure,
    },
    /// `G - edge` is still k-critical; checked by recomputation.
    RemovableEdge {
        k: usize,
        mode: FactorMode,
        edge: EdgeRef,
    },
    /// `G - edge` is not k-factor-critical, shown by `failure`.
    MatchingBreakingEdge {
        k: usize,
        edge: EdgeRef,
        failure: FactorCriticalFailure,
    },
    PerfectMatching {
        matching: Matching,
    },
    TutteViolator {
        violator: TutteViolator,
    },
    FactorCriticalFailure {
        k: usize,
        failure: FactorCriticalFailure,
    },
    Embedding {
        rotation: RotationSystem,
    },
    Kuratowski {
        witness: KuratowskiWitness,
    },
    /// A k-set whose deletion leaves the subdivision `witness`.
    KPlanarFailure {
        deleted: VertexSet,
        witness: KuratowskiWitness,
    },
    CriticalPair {
        pair: CriticalPair,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Factor { .. } => "factor",
            Certificate::Deficiency { .. } => "deficiency",
            Certificate::CriticalityFailure { .. } => "criticality_failure",
            Certificate::BreakingEdge { .. } => "breaking_edge",
            Certificate::RemovableEdge { .. } => "removable_edge",
            Certificate::MatchingBreakingEdge { .. } => "matching_breaking_edge",
            Certificate::PerfectMatching { .. } => "perfect_matching",
            Certificate::TutteViolator { .. } => "tutte_violator",
            Certificate::FactorCriticalFailure { .. } => "factor_critical_failure",
            Certificate::Embedding { .. } => "embedding",
            Certificate::Kuratowski { .. } => "kuratowski",
            Certificate::KPlanarFailure { .. } => "k_planar_failure",
            Certificate::CriticalPair { .. } => "critical_pair",
        }
    }

    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        match self {
            Certificate::Factor { factor } => factor.validate(g),
            Certificate::Deficiency { certificate } => certificate.verify(g),
            Certificate::CriticalityFailure { k, failure } => failure.verify(g, *k),
            Certificate::BreakingEdge { k, edge, failure } => {
                let h = g.delete_edge(*edge).map_err(|e| e.to_string())?;
                failure.verify(&h, *k)
            }
            Certificate::RemovableEdge { k, mode, edge } => {
                let h = g.delete_edge(*edge).map_err(|e| e.to_string())?;
                let critical = match mode {
                    FactorMode::Sachs => is_k_sachs_critical(&h, *k).map(|v| v.critical),
                    FactorMode::PerfectMatching => is_k_factor_critical(&h, *k).map(|v| v.critical),
                }
                .map_err(|e| e.to_string())?;
                if critical {
                    Ok(())
                } else {
                    Err(format!("G - {edge} is not {k}-critical"))
                }
            }
            Certificate::PerfectMatching { matching } => {
                matching.validate(g)?;
                if matching.is_perfect() {
                    Ok(())
                } else {
                    Err("matching is not perfect".into())
                }
            }
            Certificate::TutteViolator { violator } => violator.verify(g),
            Certificate::FactorCriticalFailure { k, failure } => factor_critical_failure(g, *k, failure),
            Certificate::MatchingBreakingEdge { k, edge, failure } => {
                let h = g.delete_edge(*edge).map_err(|e| e.to_string())?;
                factor_critical_failure(&h, *k, failure)
            }
            Certificate::Embedding { rotation } => match verify_embedding(g, rotation) {
                Ok(true) => Ok(()),
                Ok(false) => Err("rotation system violates Euler's relation".into()),
                Err(e) => Err(e.to_string()),
            },
            Certificate::Kuratowski { witness } => verify_kuratowski(g, witness),
            Certificate::KPlanarFailure { deleted, witness } => {
                if deleted.universe() != g.order() {
                    return Err("deleted set has the wrong universe".into());
                }
                let touched = witness.paths.iter().flatten().chain(&witness.branch_vertices);
                if let Some(v) = touched.into_iter().find(|&&v| v < g.order() && deleted.contains(v)) {
                    return Err(format!("witness uses deleted vertex {v}"));
                }
                verify_kuratowski(g, witness)
            }
            Certificate::CriticalPair { pair } => {
                if difference(g, &pair.critical_set) != pair.d as isize {
                    return Err("critical set does not attain d".into());
                }
                if !g.is_independent(&pair.critical_independent_set)
                    || difference(g, &pair.critical_independent_set) != pair.id as isize
                {
                    return Err("critical independent set does not attain id".into());
                }
                if fast_critical_difference(g) != pair.d {
                    return Err("d disagrees with the matching deficiency".into());
                }
                Ok(())
            }
        }
    }
}

fn factor_critical_failure(g: &Graph, k: usize, failure: &FactorCriticalFailure) -> Result<(), String> {
    if failure.deleted.len() != k || failure.certificate.k != k || !failure.deleted.is_subset(&failure.certificate.set) {
        return Err("deleted set does not match k".into());
    }
    failure.certificate.verify(g)
}
