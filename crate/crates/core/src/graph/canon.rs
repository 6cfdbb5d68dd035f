//! Brute-force canonical forms and isomorph-free enumeration of small graphs.
//!
//! The canonical form is the lexicographically least upper-triangle
//! adjacency bit string (graph6 column-major order) over all vertex
//! permutations. The search places vertices one at a time; placing the
//! `j`-th vertex fixes the next `j` bits, so only candidates producing the
//! least segment can extend a minimal string. Interchangeable twins
//! (`N(v) - w == N(w) - v`) are tried once per node since swapping them is
//! an automorphism fixing every placed vertex.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::{emit_graph6, Graph};
use crate::error::{Error, Result};

pub const CANONICAL_LIMIT: usize = 10;
pub const ENUMERATION_LIMIT: usize = 8;

struct Search<'a> {
    masks: &'a [u64],
    twin_class: Vec<usize>,
    order: Vec<usize>,
    segments: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, placed: u64) {
        let n = self.masks.len();
        let depth = self.order.len();
        if depth == n {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.segments < *best,
            };
            if better {
                self.best = Some((self.segments.clone(), self.order.clone()));
            }
            return;
        }
        let candidates: Vec<(usize, u64)> = (0..n)
            .filter(|&v| placed & (1 << v) == 0)
            .map(|v| {
                let seg = self
                    .order
                    .iter()
                    .fold(0u64, |acc, &p| (acc << 1) | (self.masks[p] >> v & 1));
                (v, seg)
            })
            .collect();
        let min_seg = candidates.iter().map(|&(_, s)| s).min().unwrap_or(0);
        if let Some((best, _)) = &self.best {
            let prefix = self.segments.iter().chain(std::iter::once(&min_seg));
            if prefix.cmp(best[..=depth].iter()) == std::cmp::Ordering::Greater {
                return;
            }
        }
        let mut tried_classes = 0u64;
        for (v, seg) in candidates {
            if seg != min_seg {
                continue;
            }
            let class = self.twin_class[v];
            if tried_classes & (1 << class) != 0 {
                continue;
            }
            tried_classes |= 1 << class;
            self.order.push(v);
            self.segments.push(min_seg);
            self.run(placed | 1 << v);
            self.order.pop();
            self.segments.pop();
        }
    }
}

fn twin_classes(masks: &[u64]) -> Vec<usize> {
    let n = masks.len();
    let mut class = vec![usize::MAX; n];
    for v in 0..n {
        if class[v] != usize::MAX {
            continue;
        }
        class[v] = v;
        for w in v + 1..n {
            if class[w] == usize::MAX && masks[v] & !(1 << w) == masks[w] & !(1 << v) {
                class[w] = v;
            }
        }
    }
    class
}

/// Returns the canonically relabeled graph and the permutation used:
/// `order[i]` is the original vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let n = g.order();
    if n > CANONICAL_LIMIT {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    let masks = g.masks();
    let mut search = Search {
        masks: &masks,
        twin_class: twin_classes(&masks),
        order: Vec::with_capacity(n),
        segments: Vec::with_capacity(n),
        best: None,
    };
    search.run(0);
    let order = search.best.map(|(_, order)| order).unwrap_or_default();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    Ok((g.permuted(&position), order))
}

/// graph6 bytes of the canonical relabeling; equal for isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(emit_graph6(&canonical_labeling(g)?.0).into_bytes())
}

static LEVELS: [OnceLock<Vec<Graph>>; ENUMERATION_LIMIT + 1] = [const { OnceLock::new() }; ENUMERATION_LIMIT + 1];

fn level(n: usize) -> &'static Vec<Graph> {
    LEVELS[n].get_or_init(|| {
        if n == 0 {
            return vec![Graph::empty(0)];
        }
        let smaller = level(n - 1);
        let forms: BTreeSet<Vec<u8>> = smaller
            .par_iter()
            .flat_map_iter(|h| {
                let base = h.masks();
                (0..1u64 << (n - 1)).map(move |attach| {
                    let mut masks = base.clone();
                    masks.push(attach);
                    for (v, row) in masks.iter_mut().enumerate().take(n - 1) {
                        *row |= (attach >> v & 1) << (n - 1);
                    }
                    canonical_form(&Graph::from_masks(&masks)).expect("n within limit")
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        forms
            .into_iter()
            .map(|bytes| super::parse_graph6(&bytes).expect("canonical form is valid graph6"))
            .collect()
    })
}

/// One representative per isomorphism class on `n` vertices, each in
/// canonical labeling, sorted by canonical graph6 bytes.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeLimitExceeded {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(level(n).clone())
}
