//! Partitioned ground sets, colored sets and chains.
//!
//! A [`GroundSet`] is a partition `E = E_1 ⊔ ... ⊔ E_n` of opaque string
//! labels. A [`ColoredSet`] picks at most one label from each block and is
//! stored as one optional in-block index per block. Every colored set also
//! has a dense integer code (mixed radix, one digit per block, digit 0 meaning
//! "no label from this block") which the numeric modules use for indexing.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::has_left_perfect_matching;

/// One label per block at most; `slots[b]` is the in-block index chosen from
/// block `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColoredSet {
    slots: Vec<Option<usize>>,
}

impl ColoredSet {
    pub fn empty(n: usize) -> Self {
        ColoredSet { slots: vec![None; n] }
    }

    pub fn from_slots(slots: Vec<Option<usize>>) -> Self {
        ColoredSet { slots }
    }

    pub fn slots(&self) -> &[Option<usize>] {
        &self.slots
    }

    /// Number of blocks of the ambient ground set.
    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn len(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.iter().all(Option::is_none)
    }

    pub fn is_maximal(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    pub fn get(&self, block: usize) -> Option<usize> {
        self.slots[block]
    }

    pub fn contains(&self, block: usize, index: usize) -> bool {
        self.slots[block] == Some(index)
    }

    /// `(block, in-block index)` pairs in block order.
    pub fn elements(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.slots.iter().enumerate().filter_map(|(b, s)| s.map(|i| (b, i)))
    }

    /// The blocks this set meets (its image in `[n]`, zero-based).
    pub fn underlying(&self) -> BTreeSet<usize> {
        self.elements().map(|(b, _)| b).collect()
    }

    pub fn is_subset(&self, other: &ColoredSet) -> bool {
        self.slots.iter().zip(&other.slots).all(|(a, b)| a.is_none() || a == b)
    }

    pub fn meets(&self, other: &ColoredSet) -> bool {
        self.slots.iter().zip(&other.slots).any(|(a, b)| a.is_some() && a == b)
    }

    /// Union, if it is still colored.
    pub fn union(&self, other: &ColoredSet) -> Option<ColoredSet> {
        self.slots
            .iter()
            .zip(&other.slots)
            .map(|(a, b)| match (a, b) {
                (Some(x), Some(y)) if x != y => None,
                (Some(x), _) | (None, Some(x)) => Some(Some(*x)),
                (None, None) => Some(None),
            })
            .collect::<Option<Vec<_>>>()
            .map(ColoredSet::from_slots)
    }

    pub fn intersection(&self, other: &ColoredSet) -> ColoredSet {
        ColoredSet::from_slots(
            self.slots
                .iter()
                .zip(&other.slots)
                .map(|(a, b)| if a == b { *a } else { None })
                .collect(),
        )
    }

    pub fn with(&self, block: usize, index: usize) -> ColoredSet {
        let mut slots = self.slots.clone();
        slots[block] = Some(index);
        ColoredSet { slots }
    }

    pub fn without(&self, block: usize) -> ColoredSet {
        let mut slots = self.slots.clone();
        slots[block] = None;
        ColoredSet { slots }
    }
}

impl Ord for ColoredSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements().cmp(other.elements()))
    }
}

impl PartialOrd for ColoredSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A strictly increasing chain `S_1 ⊊ ... ⊊ S_k` of nonempty colored sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Chain {
    sets: Vec<ColoredSet>,
}

impl Chain {
    pub fn new(sets: Vec<ColoredSet>) -> Result<Self> {
        if sets.iter().any(ColoredSet::is_empty) {
            return Err(Error::InvalidInput("chains consist of nonempty sets".into()));
        }
        for (a, b) in sets.iter().tuple_windows() {
            if !(a.is_subset(b) && a != b) {
                return Err(Error::InvalidInput("chain entries must be strictly increasing".into()));
            }
        }
        Ok(Chain { sets })
    }

    pub fn sets(&self) -> &[ColoredSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn top(&self) -> Option<&ColoredSet> {
        self.sets.last()
    }

    /// Maximal iff it has `n` entries of sizes `1, ..., n`.
    pub fn is_maximal(&self) -> bool {
        let n = self.sets.first().map_or(0, ColoredSet::arity);
        n > 0 && self.sets.len() == n && self.sets.iter().enumerate().all(|(i, s)| s.len() == i + 1)
    }
}

/// Serialized form: `{"blocks": [["1","1bar"],["2","2bar"]]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroundSetSpec {
    pub blocks: Vec<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct GroundSet {
    blocks: Vec<Vec<String>>,
    index: HashMap<String, (usize, usize)>,
    strides: Vec<usize>,
    total: usize,
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks
    }
}

impl Eq for GroundSet {}

/// Output of [`GroundSet::enumerate_colored_sets`].
#[derive(Clone, Debug)]
pub struct ColoredSetEnumeration {
    pub sets: Vec<ColoredSet>,
    pub maximal: Vec<bool>,
}

impl ColoredSetEnumeration {
    pub fn maximal_count(&self) -> usize {
        self.maximal.iter().filter(|&&m| m).count()
    }
}

impl GroundSet {
    /// Labels inside each block are sorted, so positions and the
    /// lexicographic order agree; block order is kept.
    pub fn new(blocks: Vec<Vec<String>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidInput("a ground set needs at least one block".into()));
        }
        let mut blocks = blocks;
        let mut index = HashMap::new();
        for (b, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidInput(format!("block {b} is empty")));
            }
            block.sort();
            for (i, label) in block.iter().enumerate() {
                if index.insert(label.clone(), (b, i)).is_some() {
                    return Err(Error::InvalidInput(format!("duplicate label {label:?}")));
                }
            }
        }
        let mut strides = Vec::with_capacity(blocks.len());
        let mut total = 1usize;
        for block in &blocks {
            strides.push(total);
            total = total
                .checked_mul(block.len() + 1)
                .ok_or_else(|| Error::InvalidInput("ground set too large".into()))?;
        }
        Ok(GroundSet {
            blocks,
            index,
            strides,
            total,
        })
    }

    pub fn from_labels<S: AsRef<str>>(blocks: &[&[S]]) -> Result<Self> {
        Self::new(
            blocks
                .iter()
                .map(|b| b.iter().map(|s| s.as_ref().to_string()).collect())
                .collect(),
        )
    }

    /// Uniform ground set with `n` blocks of `r` labels `"{i}^{j}"`.
    pub fn uniform(n: usize, r: usize) -> Result<Self> {
        Self::with_sizes(&vec![r; n])
    }

    /// Blocks of the given sizes with labels `"{i}^{j}"` (1-based block).
    pub fn with_sizes(sizes: &[usize]) -> Result<Self> {
        Self::new(
            sizes
                .iter()
                .enumerate()
                .map(|(i, &r)| (0..r).map(|j| format!("{}^{}", i + 1, j)).collect())
                .collect(),
        )
    }

    pub fn spec(&self) -> GroundSetSpec {
        GroundSetSpec {
            blocks: self.blocks.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<String>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn label(&self, block: usize, index: usize) -> &str {
        &self.blocks[block][index]
    }

    pub fn locate(&self, label: &str) -> Option<(usize, usize)> {
        self.index.get(label).copied()
    }

    pub fn block_of(&self, label: &str) -> Option<usize> {
        self.locate(label).map(|(b, _)| b)
    }

    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<ColoredSet> {
        let mut slots = vec![None; self.n()];
        for l in labels {
            let l = l.as_ref();
            let (b, i) = self
                .locate(l)
                .ok_or_else(|| Error::InvalidInput(format!("unknown label {l:?}")))?;
            if slots[b].is_some() {
                return Err(Error::InvalidInput(format!(
                    "{:?} is not colored: two labels from block {b}",
                    labels.iter().map(AsRef::as_ref).collect::<Vec<_>>()
                )));
            }
            slots[b] = Some(i);
        }
        Ok(ColoredSet::from_slots(slots))
    }

    pub fn labels_of(&self, s: &ColoredSet) -> Vec<String> {
        s.elements().map(|(b, i)| self.blocks[b][i].clone()).collect()
    }

    pub fn display(&self, s: &ColoredSet) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    pub fn display_chain(&self, c: &Chain) -> String {
        c.sets().iter().map(|s| self.display(s)).join(" ⊊ ")
    }

    /// Whether `s` is a colored set of this ground set.
    pub fn owns(&self, s: &ColoredSet) -> bool {
        s.arity() == self.n()
            && s.slots()
                .iter()
                .zip(&self.blocks)
                .all(|(slot, block)| slot.is_none_or(|i| i < block.len()))
    }

    pub fn check_owns(&self, s: &ColoredSet) -> Result<()> {
        if self.owns(s) {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch)
        }
    }

    /// Number of colored sets including the empty set.
    pub fn num_colored_sets(&self) -> usize {
        self.total
    }

    pub fn num_maximal_sets(&self) -> usize {
        self.blocks.iter().map(Vec::len).product()
    }

    pub fn code(&self, s: &ColoredSet) -> usize {
        s.slots()
            .iter()
            .zip(&self.strides)
            .map(|(slot, stride)| slot.map_or(0, |i| i + 1) * stride)
            .sum()
    }

    pub fn set_at(&self, code: usize) -> ColoredSet {
        let slots = self
            .blocks
            .iter()
            .zip(&self.strides)
            .map(|(block, &stride)| {
                let digit = (code / stride) % (block.len() + 1);
                digit.checked_sub(1)
            })
            .collect();
        ColoredSet::from_slots(slots)
    }

    /// Size of the set with the given code, without decoding it.
    pub fn size_of_code(&self, code: usize) -> usize {
        self.blocks
            .iter()
            .zip(&self.strides)
            .filter(|(block, &stride)| !(code / stride).is_multiple_of(block.len() + 1))
            .count()
    }

    pub fn empty_set(&self) -> ColoredSet {
        ColoredSet::empty(self.n())
    }

    /// All colored sets, including `∅`, in code order.
    pub fn colored_sets(&self) -> Vec<ColoredSet> {
        (0..self.total).map(|c| self.set_at(c)).collect()
    }

    pub fn nonempty_sets(&self) -> Vec<ColoredSet> {
        (1..self.total).map(|c| self.set_at(c)).collect()
    }

    pub fn maximal_sets(&self) -> Vec<ColoredSet> {
        self.blocks
            .iter()
            .map(|b| 0..b.len())
            .multi_cartesian_product()
            .map(|idx| ColoredSet::from_slots(idx.into_iter().map(Some).collect()))
            .sorted_by_key(|s| self.code(s))
            .collect()
    }

    pub fn enumerate_colored_sets(&self) -> ColoredSetEnumeration {
        let sets = self.colored_sets();
        let maximal = sets.iter().map(ColoredSet::is_maximal).collect();
        ColoredSetEnumeration { sets, maximal }
    }

    /// Nonempty subsets of `s`, as codes.
    pub fn subset_codes(&self, s: &ColoredSet) -> Vec<usize> {
        let parts: Vec<usize> = s.elements().map(|(b, i)| (i + 1) * self.strides[b]).collect();
        (1u32..(1 << parts.len()))
            .map(|mask| {
                parts
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, p)| p)
                    .sum()
            })
            .collect()
    }

    /// Colored supersets of `s` (including `s`), as codes.
    pub fn superset_codes(&self, s: &ColoredSet) -> Vec<usize> {
        let base = self.code(s);
        let mut out = vec![base];
        for (b, slot) in s.slots().iter().enumerate() {
            if slot.is_some() {
                continue;
            }
            let stride = self.strides[b];
            let mut next = Vec::with_capacity(out.len() * (self.blocks[b].len() + 1));
            for &c in &out {
                for digit in 0..=self.blocks[b].len() {
                    next.push(c + digit * stride);
                }
            }
            out = next;
        }
        out
    }

    /// The `n!` maximal chains with top `t`, ordered by the permutation of
    /// `t`'s elements (lexicographic in block order).
    pub fn enumerate_max_chains(&self, t: &ColoredSet) -> Result<Vec<Chain>> {
        self.check_owns(t)?;
        if !t.is_maximal() {
            return Err(Error::NotMaximal(self.display(t)));
        }
        let n = self.n();
        Ok((0..n)
            .permutations(n)
            .map(|order| {
                let mut cur = self.empty_set();
                let sets = order
                    .into_iter()
                    .map(|b| {
                        cur = cur.with(b, t.get(b).expect("maximal"));
                        cur.clone()
                    })
                    .collect();
                Chain { sets }
            })
            .collect())
    }

    /// All maximal chains, grouped by top set in canonical order.
    pub fn all_max_chains(&self) -> Vec<Chain> {
        self.maximal_sets()
            .iter()
            .flat_map(|t| self.enumerate_max_chains(t).expect("maximal"))
            .collect()
    }

    /// Whether `[n] → t, i ↦ ι(i) ∈ sets[i]` can be a bijection.
    pub fn admits_transversal(&self, t: &ColoredSet, sets: &[ColoredSet]) -> bool {
        // right vertices are the blocks of t; t ∈ S_i at block b iff S_i picks t's label there
        let adj: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| {
                (0..self.n())
                    .filter(|&b| s.get(b).is_some() && s.get(b) == t.get(b))
                    .collect()
            })
            .collect();
        has_left_perfect_matching(&adj, self.n())
    }

    /// `|T_π(S_1, ..., S_n)|`: the number of maximal colored sets admitting a
    /// system of distinct representatives from the given sets.
    pub fn transversal_count(&self, sets: &[ColoredSet]) -> Result<u64> {
        if sets.len() != self.n() {
            return Err(Error::WrongLength {
                expected: self.n(),
                got: sets.len(),
            });
        }
        for s in sets {
            self.check_owns(s)?;
            if s.is_empty() {
                return Err(Error::InvalidInput("transversal sets must be nonempty".into()));
            }
        }
        Ok(self
            .maximal_sets()
            .iter()
            .filter(|t| self.admits_transversal(t, sets))
            .count() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> GroundSet {
        GroundSet::from_labels(&[&["1", "1bar"], &["2", "2bar"]]).unwrap()
    }

    fn abc12() -> GroundSet {
        GroundSet::from_labels(&[&["a", "b", "c"], &["1", "2"]]).unwrap()
    }

    #[test]
    fn counts_of_colored_sets() {
        let e = b2().enumerate_colored_sets();
        assert_eq!((e.sets.len(), e.maximal_count()), (9, 4));
        let e = abc12().enumerate_colored_sets();
        assert_eq!((e.sets.len(), e.maximal_count()), (12, 6));
        let g = GroundSet::with_sizes(&[5]).unwrap();
        let e = g.enumerate_colored_sets();
        assert_eq!((e.sets.len(), e.maximal_count()), (6, 5));
    }

    #[test]
    fn codes_round_trip() {
        let g = abc12();
        for (c, s) in g.colored_sets().iter().enumerate() {
            assert_eq!(g.code(s), c);
            assert_eq!(g.size_of_code(c), s.len());
        }
    }

    #[test]
    fn max_chains() {
        let g = b2();
        let t = g.set_from_labels(&["1", "2"]).unwrap();
        let chains = g.enumerate_max_chains(&t).unwrap();
        assert_eq!(chains.len(), 2);
        assert_eq!(g.display_chain(&chains[0]), "{1} ⊊ {1,2}");
        assert_eq!(g.display_chain(&chains[1]), "{2} ⊊ {1,2}");
        assert!(chains.iter().all(Chain::is_maximal));
        assert_eq!(g.all_max_chains().len(), 8);

        let g3 = GroundSet::uniform(3, 2).unwrap();
        let t = &g3.maximal_sets()[5];
        assert_eq!(g3.enumerate_max_chains(t).unwrap().len(), 6);

        let s = g.set_from_labels(&["1"]).unwrap();
        assert!(matches!(g.enumerate_max_chains(&s), Err(Error::NotMaximal(_))));
    }

    #[test]
    fn transversal_examples() {
        let g = b2();
        let s = |l: &[&str]| g.set_from_labels(l).unwrap();
        assert_eq!(g.transversal_count(&[s(&["1", "2"]), s(&["1bar", "2"])]).unwrap(), 2);
        assert_eq!(g.transversal_count(&[s(&["1"]), s(&["1"])]).unwrap(), 0);
        assert_eq!(g.transversal_count(&[s(&["1"]), s(&["1", "2"])]).unwrap(), 1);
        assert!(matches!(
            g.transversal_count(&[s(&["1"])]),
            Err(Error::WrongLength { .. })
        ));
    }

    #[test]
    fn underlying_blocks() {
        let g = b2();
        let s = g.set_from_labels(&["1", "2bar"]).unwrap();
        assert_eq!(s.underlying(), BTreeSet::from([0, 1]));
        assert!(g.empty_set().underlying().is_empty());
        let h = abc12();
        assert_eq!(h.set_from_labels(&["a"]).unwrap().underlying(), BTreeSet::from([0]));
    }

    #[test]
    fn rejects_bad_ground_sets_and_sets() {
        assert!(GroundSet::from_labels(&[&["a", "a"]]).is_err());
        assert!(GroundSet::from_labels::<&str>(&[&[]]).is_err());
        assert!(b2().set_from_labels(&["1", "1bar"]).is_err());
        assert!(b2().set_from_labels(&["3"]).is_err());
    }

    #[test]
    fn subsets_and_supersets() {
        let g = abc12();
        let s = g.set_from_labels(&["a"]).unwrap();
        let sup: BTreeSet<_> = g.superset_codes(&s).into_iter().collect();
        assert_eq!(sup.len(), 3);
        let t = g.set_from_labels(&["b", "2"]).unwrap();
        assert_eq!(g.subset_codes(&t).len(), 3);
    }
}
