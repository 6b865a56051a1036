//! Ground sets, subsets, set families and partitions.
//!
//! A [`Subset`] is a bitmask over element indices of some [`GroundSet`]; it
//! does not carry the ground set itself. Families and matroids own the
//! ground set and check that their members fit inside it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported ground set; subsets are stored in one machine word.
pub const MAX_GROUND: usize = 64;

/// A finite, nonempty, ordered set of distinctly labelled elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    labels: Arc<[String]>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGround);
        }
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet {
            labels: labels.into(),
        })
    }

    /// The ground set `{1, .., n}` with decimal labels.
    pub fn numbered(n: usize) -> Result<Self> {
        GroundSet::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The whole ground set as a subset.
    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn contains(&self, x: Subset) -> bool {
        x.is_subset_of(self.full())
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = Subset::empty();
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            bits = bits.with(i);
        }
        Ok(bits)
    }

    pub fn labels_of(&self, x: Subset) -> Vec<String> {
        x.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// `{a,b,c}` using element labels.
    pub fn render(&self, x: Subset) -> String {
        let parts: Vec<&str> = x.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn render_all<'a, I>(&self, sets: I) -> String
    where
        I: IntoIterator<Item = &'a Subset>,
    {
        let parts: Vec<String> = sets.into_iter().map(|x| self.render(*x)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels.iter()).finish()
    }
}

/// A subset of a ground set of at most 64 elements, as a bitmask of indices.
///
/// Ordering is canonical: by cardinality, then lexicographically on the
/// sorted index lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const fn empty() -> Self {
        Subset(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large: {n}");
        if n == MAX_GROUND {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset::empty().with(i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Subset::empty(), Subset::with)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_GROUND && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        assert!(i < MAX_GROUND, "element index {i} out of range");
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        assert!(i < MAX_GROUND, "element index {i} out of range");
        Subset(self.0 & !(1 << i))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element index, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Element indices in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self`, including `∅` and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // the lowest differing element belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Submask enumeration, from the full mask down to `∅`.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let current = self.next?;
        self.next = (current != 0).then(|| (current - 1) & self.mask);
        Some(Subset(current))
    }
}

/// A duplicate-free family of subsets of a ground set, kept in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetFamily {
    ground: GroundSet,
    sets: Vec<Subset>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(ground: &GroundSet, sets: I) -> Result<Self> {
        let full = ground.full();
        let mut sets: Vec<Subset> = sets.into_iter().collect();
        if let Some(bad) = sets.iter().find(|x| !x.is_subset_of(full)) {
            return Err(Error::OutsideGround(*bad));
        }
        sets.sort_unstable();
        sets.dedup();
        Ok(SetFamily {
            ground: ground.clone(),
            sets,
        })
    }

    /// Builds a family from label lists, e.g. `[["1", "2"], ["1", "3"]]`.
    pub fn from_labels<I, J, S>(ground: &GroundSet, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let sets = sets
            .into_iter()
            .map(|labels| ground.subset(labels))
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(ground, sets)
    }

    pub fn empty(ground: &GroundSet) -> Self {
        SetFamily {
            ground: ground.clone(),
            sets: Vec::new(),
        }
    }

    /// Caller guarantees the sets fit in `ground`.
    pub(crate) fn from_unchecked(ground: &GroundSet, mut sets: Vec<Subset>) -> Self {
        debug_assert!(sets.iter().all(|x| ground.contains(*x)));
        sets.sort_unstable();
        sets.dedup();
        SetFamily {
            ground: ground.clone(),
            sets,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn as_slice(&self) -> &[Subset] {
        &self.sets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.sets.iter()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, x: Subset) -> bool {
        self.sets.binary_search(&x).is_ok()
    }

    /// `∪F`; `∅` for the empty family.
    pub fn union_all(&self) -> Subset {
        self.sets.iter().fold(Subset::empty(), |acc, x| acc | *x)
    }

    /// `∩F`; the whole ground set for the empty family.
    pub fn intersection_all(&self) -> Subset {
        self.sets.iter().fold(self.ground.full(), |acc, x| acc & *x)
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.sets.iter().all(|x| other.contains(*x))
    }

    /// A family over the same ground set holding the members that pass `keep`.
    pub fn filter(&self, mut keep: impl FnMut(Subset) -> bool) -> SetFamily {
        SetFamily {
            ground: self.ground.clone(),
            sets: self.sets.iter().copied().filter(|x| keep(*x)).collect(),
        }
    }

    pub fn label_lists(&self) -> Vec<Vec<String>> {
        self.sets
            .iter()
            .map(|x| self.ground.labels_of(*x))
            .collect()
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ground.render_all(&self.sets))
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Low(F)`: every subset of some member.
pub fn low(fam: &SetFamily) -> SetFamily {
    let sets = fam.iter().flat_map(|a| a.subsets()).collect();
    SetFamily::from_unchecked(fam.ground(), sets)
}

/// `Max(F)`: the inclusion-maximal members.
pub fn max(fam: &SetFamily) -> SetFamily {
    fam.filter(|x| !fam.iter().any(|y| x != *y && x.is_subset_of(*y)))
}

/// `Com(F)`: the complement of every member within the ground set.
pub fn com(fam: &SetFamily) -> SetFamily {
    let full = fam.ground().full();
    SetFamily::from_unchecked(fam.ground(), fam.iter().map(|a| full - *a).collect())
}

/// `∅ ∉ F` and `∪F = support`. The empty family covers the empty support.
pub fn is_covering(fam: &SetFamily, support: Subset) -> bool {
    !fam.contains(Subset::empty()) && fam.union_all() == support
}

/// A covering of `support` whose blocks are pairwise disjoint.
pub fn is_partition(fam: &SetFamily, support: Subset) -> bool {
    is_covering(fam, support) && pairwise_disjoint(fam.as_slice()).is_ok()
}

fn pairwise_disjoint(blocks: &[Subset]) -> Result<()> {
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            if !a.is_disjoint(*b) {
                return Err(Error::OverlappingBlocks(*a, *b));
            }
        }
    }
    Ok(())
}

/// `Co(P)`: the product of the block sizes.
pub fn combination_number(p: &Partition) -> u64 {
    p.blocks().iter().map(|k| k.len() as u64).product()
}

/// A family of nonempty, pairwise disjoint blocks. Its support is the union
/// of the blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: SetFamily,
}

impl Partition {
    pub fn new(blocks: SetFamily) -> Result<Self> {
        if blocks.contains(Subset::empty()) {
            return Err(Error::EmptyBlock);
        }
        pairwise_disjoint(blocks.as_slice())?;
        Ok(Partition { blocks })
    }

    /// A partition whose blocks must cover exactly `support`.
    pub fn of(blocks: SetFamily, support: Subset) -> Result<Self> {
        let p = Partition::new(blocks)?;
        if p.support() != support {
            return Err(Error::SupportMismatch {
                expected: support,
                actual: p.support(),
            });
        }
        Ok(p)
    }

    pub fn from_labels<I, J, S>(ground: &GroundSet, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Partition::new(SetFamily::from_labels(ground, blocks)?)
    }

    pub fn blocks(&self) -> &SetFamily {
        &self.blocks
    }

    pub fn into_family(self) -> SetFamily {
        self.blocks
    }

    pub fn ground(&self) -> &GroundSet {
        self.blocks.ground()
    }

    pub fn support(&self) -> Subset {
        self.blocks.union_all()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn combination_number(&self) -> u64 {
        combination_number(self)
    }

    /// The block containing element `i`.
    pub fn block_of(&self, i: usize) -> Option<Subset> {
        self.blocks.iter().copied().find(|k| k.contains(i))
    }

    /// Every set picking exactly one element from each block.
    pub fn transversals(&self) -> Vec<Subset> {
        self.blocks
            .iter()
            .fold(vec![Subset::empty()], |acc, block| {
                acc.iter()
                    .flat_map(|partial| block.iter().map(move |b| partial.with(b)))
                    .collect()
            })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.blocks, f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.blocks, f)
    }
}

/// All partitions of `support` (a subset of `ground`). The empty support
/// has exactly one partition, the empty family.
pub fn partitions_of(ground: &GroundSet, support: Subset) -> Vec<Partition> {
    fn go(rest: Subset, blocks: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        let Some(first) = rest.first() else {
            out.push(blocks.clone());
            return;
        };
        let others = rest.without(first);
        for extra in others.subsets() {
            let block = extra.with(first);
            blocks.push(block);
            go(rest - block, blocks, out);
            blocks.pop();
        }
    }
    assert!(ground.contains(support), "support outside ground set");
    let mut raw = Vec::new();
    go(support, &mut Vec::new(), &mut raw);
    let mut out: Vec<Partition> = raw
        .into_iter()
        .map(|blocks| Partition {
            blocks: SetFamily::from_unchecked(ground, blocks),
        })
        .collect();
    out.sort();
    out
}
