use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

type Words = SmallVec<[u64; 1]>;

/// A subset of `0..universe` stored as a bitset.
///
/// Graphs up to 64 vertices use a single inline word; larger universes
/// spill to the heap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Words,
}

fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD).max(1)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: smallvec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    /// Builds a set from a `u64` mask. Bits at or above `universe` are dropped.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        let mut set = Self::empty(universe);
        let keep = if universe >= WORD {
            u64::MAX
        } else {
            (1u64 << universe) - 1
        };
        set.words[0] = mask & keep;
        set
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut set = Self::empty(universe);
        for v in members {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// The set as a single word, available when the universe fits in 64 bits.
    pub fn mask(&self) -> Option<u64> {
        (self.universe <= WORD).then(|| self.words[0])
    }

    /// Inserts `v`. Panics when `v` lies outside the universe.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        let universe = self.universe.max(other.universe);
        let mut out = Self::empty(universe);
        for (i, slot) in out.words.iter_mut().enumerate() {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            *slot = op(a, b);
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn union_with(&mut self, other: &Self) {
        for (i, slot) in self.words.iter_mut().enumerate() {
            *slot |= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        Self::full(self.universe).difference(self)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Certificate order: smaller sets first, then lexicographic on the
    /// ascending member lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[derive(Serialize, Deserialize)]
struct VertexSetRepr {
    n: usize,
    members: Vec<usize>,
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        VertexSetRepr {
            n: self.universe,
            members: self.to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = VertexSetRepr::deserialize(deserializer)?;
        if let Some(&bad) = repr.members.iter().find(|&&v| v >= repr.n) {
            return Err(serde::de::Error::custom(format!(
                "member {bad} outside universe {}",
                repr.n
            )));
        }
        Ok(VertexSet::from_members(repr.n, repr.members))
    }
}

/// All `size`-subsets of `0..n` as masks, in lexicographic order of their
/// ascending member lists. Requires `n <= 64`.
pub(crate) fn combinations(n: usize, size: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n <= WORD);
    let mut idx: Vec<usize> = (0..size).collect();
    let mut done = size > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        // advance to the next combination
        let mut i = size;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] != i + n - size {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = VertexSet::from_members(10, [1, 3, 5]);
        let b = VertexSet::from_members(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 5]);
        assert_eq!(a.len(), 3);
        assert!(!a.is_subset(&b));
        assert_eq!(b.complement().len(), 8);
    }

    #[test]
    fn multi_word() {
        let mut s = VertexSet::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert!(s.mask().is_none());
        assert_eq!(s.complement().len(), 127);
    }

    #[test]
    fn combinations_are_lexicographic() {
        let combos: Vec<Vec<usize>> = combinations(4, 2)
            .map(|m| VertexSet::from_mask(4, m).to_vec())
            .collect();
        assert_eq!(
            combos,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(3, 4).count(), 0);
        assert_eq!((0..=5).map(|s| combinations(5, s).count()).sum::<usize>(), 32);
    }

    #[test]
    fn canonical_order() {
        let small = VertexSet::from_members(5, [4]);
        let big = VertexSet::from_members(5, [0, 1]);
        assert_eq!(small.canonical_cmp(&big), Ordering::Less);
        let x = VertexSet::from_members(5, [0, 1, 4]);
        let y = VertexSet::from_members(5, [0, 2, 3]);
        assert_eq!(x.canonical_cmp(&y), Ordering::Less);
    }

    #[test]
    fn serde_round_trip() {
        let s = VertexSet::from_members(7, [1, 2, 6]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":7,"members":[1,2,6]}"#);
        let back: VertexSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>(r#"{"n":3,"members":[3]}"#).is_err());
    }
}
