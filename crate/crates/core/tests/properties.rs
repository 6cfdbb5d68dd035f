use proptest::prelude::*;

use sachs_core::critical_structure::{critical_difference, fast_critical_difference};
use sachs_core::criticality::{criticality_report, is_k_sachs_critical, FactorMode, FailureCertificate};
use sachs_core::graph::{canonical_form, parse_graph6};
use sachs_core::harness::Certificate;
use sachs_core::planarity::{is_k_planar, is_planar, PlanarityVerdict};
use sachs_core::sachs::{deficiency_from_hall, has_factor, has_one_two_factor, FactorOutcome};
use sachs_core::{EdgeRef, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, edges.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Serializes, re-parses and re-verifies.
fn round_trip(g: &Graph, cert: Certificate) -> Result<(), TestCaseError> {
    let text = serde_json::to_string(&cert).unwrap();
    let back: Certificate = serde_json::from_str(&text).unwrap();
    prop_assert_eq!(&back, &cert);
    prop_assert!(back.verify(g).is_ok(), "{} fails on {}", back.kind(), g.to_graph6());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factor_answers_carry_valid_certificates(g in arb_graph(12)) {
        let cert = match has_one_two_factor(&g) {
            FactorOutcome::Factor(factor) => Certificate::Factor { factor },
            FactorOutcome::Violator(v) => Certificate::Deficiency { certificate: deficiency_from_hall(&g, &v).unwrap() },
        };
        prop_assert_eq!(matches!(cert, Certificate::Factor { .. }), has_factor(&g));
        round_trip(&g, cert)?;
    }

    #[test]
    fn planarity_answers_carry_valid_certificates(g in arb_graph(11)) {
        let cert = match is_planar(&g) {
            PlanarityVerdict::Planar(rotation) => Certificate::Embedding { rotation },
            PlanarityVerdict::NonPlanar(witness) => Certificate::Kuratowski { witness },
        };
        round_trip(&g, cert)?;
    }

    #[test]
    fn k_planar_failures_verify(g in arb_graph(9), k in 0usize..3) {
        prop_assume!(k < g.order());
        let v = is_k_planar(&g, k).unwrap();
        if let (Some(deleted), Some(witness)) = (v.deleted, v.witness) {
            round_trip(&g, Certificate::KPlanarFailure { deleted, witness })?;
        }
    }

    #[test]
    fn criticality_failures_verify(g in arb_graph(9), k in 0usize..4, pm in any::<bool>()) {
        prop_assume!(k < g.order());
        let mode = if pm { FactorMode::PerfectMatching } else { FactorMode::Sachs };
        let report = criticality_report(&g, k, mode, false).unwrap();
        prop_assert_eq!(report.is_critical, report.failure.is_none());
        match report.failure {
            Some(FailureCertificate::Sachs(failure)) => round_trip(&g, Certificate::CriticalityFailure { k, failure })?,
            Some(FailureCertificate::PerfectMatching(failure)) => {
                round_trip(&g, Certificate::FactorCriticalFailure { k, failure })?
            }
            None => {}
        }
    }

    #[test]
    fn removing_edges_never_creates_criticality(g in arb_graph(8), k in 0usize..3, pick in any::<usize>()) {
        prop_assume!(k < g.order() && g.size() > 0);
        let edges: Vec<EdgeRef> = g.edges().collect();
        let h = g.delete_edge(edges[pick % edges.len()]).unwrap();
        if is_k_sachs_critical(&h, k).unwrap().critical {
            prop_assert!(is_k_sachs_critical(&g, k).unwrap().critical);
        }
    }

    #[test]
    fn critical_difference_is_label_invariant(g in arb_graph(10), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        let pair = critical_difference(&g).unwrap();
        prop_assert_eq!(pair.d, fast_critical_difference(&h));
        round_trip(&g, Certificate::CriticalPair { pair })?;
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(parse_graph6(g.to_graph6().as_bytes()).unwrap(), g);
    }
}
