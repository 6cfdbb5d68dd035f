//! Critical difference `d(G) = max |X| - |N(X)|` and its independent-set
//! counterpart `id(G)`, with witnesses.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{neighborhood_mask, Graph, VertexSet};
use crate::matching::{max_bipartite_matching, BRUTE_FORCE_LIMIT};
use crate::sachs::{cover_deficiency_within, double_cover};

/// `|X| - |N(X)|`; `N(X)` may meet `X`.
pub fn difference(g: &Graph, x: &VertexSet) -> isize {
    x.len() as isize - g.neighborhood(x).len() as isize
}

/// Both maxima with witnesses. Ties go to the largest set, then the
/// lexicographically least one; the empty set takes part in both maxima.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalPair {
    pub d: usize,
    pub id: usize,
    pub critical_set: VertexSet,
    pub critical_independent_set: VertexSet,
}

/// Exhaustive over all `2^n` subsets. Returns `ContradictionDetected` if
/// the two maxima differ.
pub fn critical_difference(g: &Graph) -> Result<CriticalPair> {
    let n = g.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let masks = g.masks();
    // Bit-reversal puts vertex 0 on top, so among sets of equal size the
    // lexicographically least has the largest reversed mask.
    let key = |x: u64| {
        let nb = neighborhood_mask(&masks, x);
        (x.count_ones() as isize - nb.count_ones() as isize, x.count_ones(), x.reverse_bits(), nb & x == 0)
    };
    let mut best = key(0);
    let mut best_set = 0u64;
    let mut best_ind = key(0);
    let mut best_ind_set = 0u64;
    for x in 1..1u64 << n {
        let k = key(x);
        let rank = (k.0, k.1, k.2);
        if rank > (best.0, best.1, best.2) {
            best = k;
            best_set = x;
        }
        if k.3 && rank > (best_ind.0, best_ind.1, best_ind.2) {
            best_ind = k;
            best_ind_set = x;
        }
    }
    let (d, id) = (best.0 as usize, best_ind.0 as usize);
    if d != id {
        return Err(Error::ContradictionDetected(format!(
            "d = {d} but id = {id} on {}",
            g.to_graph6()
        )));
    }
    Ok(CriticalPair {
        d,
        id,
        critical_set: VertexSet::from_mask(n, best_set),
        critical_independent_set: VertexSet::from_mask(n, best_ind_set),
    })
}

/// `d(G) = n - μ(B(G))` by the deficiency form of König's theorem.
pub fn fast_critical_difference(g: &Graph) -> usize {
    let n = g.order();
    if n <= 64 {
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        cover_deficiency_within(&g.masks(), all)
    } else {
        n - max_bipartite_matching(&double_cover(g)).len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;
    use crate::graph::named::*;
    use crate::sachs::has_factor;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_members(n, vs.iter().copied())
    }

    // Independent maximization written without masks.
    fn id_oracle(g: &Graph) -> isize {
        let n = g.order();
        (0..1u64 << n)
            .map(|m| VertexSet::from_mask(n, m))
            .filter(|s| g.is_independent(s))
            .map(|s| difference(g, &s))
            .max()
            .unwrap()
    }

    #[test]
    fn difference_examples() {
        assert_eq!(difference(&petersen(), &VertexSet::empty(10)), 0);
        assert_eq!(difference(&star(3), &set(4, &[1, 2, 3])), 2);
        assert_eq!(difference(&cycle(5), &set(5, &[0, 2])), -1);
    }

    #[test]
    fn critical_pair_examples() {
        assert_eq!(critical_difference(&complete(1)).unwrap().d, 1);
        let k2 = critical_difference(&complete(2)).unwrap();
        assert_eq!((k2.d, k2.critical_independent_set.to_vec()), (0, vec![0]));
        for n in 3..=6 {
            let p = critical_difference(&complete(n)).unwrap();
            assert_eq!((p.d, p.id), (0, 0));
            assert!(p.critical_independent_set.is_empty());
            assert_eq!(p.critical_set.len(), n);
        }
        // 2K2: every independent set has difference 0
        let p = critical_difference(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()).unwrap();
        assert_eq!(p.critical_independent_set.to_vec(), vec![0, 2]);
        let p = critical_difference(&star(3)).unwrap();
        assert_eq!((p.d, p.id), (2, 2));
        assert_eq!(p.critical_set.to_vec(), vec![1, 2, 3]);
        assert_eq!(p.critical_independent_set.to_vec(), vec![1, 2, 3]);
        let p = critical_difference(&cycle(5)).unwrap();
        assert_eq!((p.d, p.id), (0, 0));
        assert!(p.critical_independent_set.is_empty());
        assert!(matches!(critical_difference(&cycle(17)), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn fast_examples() {
        assert_eq!(fast_critical_difference(&complete(4)), 0);
        assert_eq!(fast_critical_difference(&star(3)), 2);
        assert_eq!(fast_critical_difference(&Graph::empty(3)), 3);
        assert_eq!(critical_difference(&Graph::empty(3)).unwrap().d, 3);
    }

    #[test]
    fn exhaustive_agreement() {
        for n in 0..=7 {
            for g in enumerate_graphs(n).unwrap() {
                let p = critical_difference(&g).unwrap();
                assert_eq!(p.id as isize, id_oracle(&g));
                assert_eq!(difference(&g, &p.critical_set), p.d as isize);
                assert_eq!(difference(&g, &p.critical_independent_set), p.id as isize);
                assert!(g.is_independent(&p.critical_independent_set));
                assert_eq!(fast_critical_difference(&g), p.d);
                assert_eq!(p.d == 0, has_factor(&g));
            }
        }
    }

    #[test]
    fn random_agreement() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let n = rng.gen_range(1..=14);
            let p = rng.gen_range(0.05..0.6);
            let mut g = Graph::empty(n);
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(p) {
                        g.add_edge(i, j);
                    }
                }
            }
            let pair = critical_difference(&g).unwrap();
            assert_eq!(fast_critical_difference(&g), pair.d);
            assert_eq!(pair.d, n - max_bipartite_matching(&double_cover(&g)).len());
        }
    }
}
