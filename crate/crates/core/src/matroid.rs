//! Matroids represented by their base family.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::set::{com, low, max, GroundSet, Partition, SetFamily, Subset};

/// A matroid on a finite ground set, stored as its validated base family.
///
/// Every base has the same cardinality, the rank. Independent sets are the
/// subsets of bases and are derived on demand.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matroid {
    bases: SetFamily,
    rank: usize,
}

/// A failure of the base-exchange axiom: no `y ∈ second − first` makes
/// `(first − {removed}) ∪ {y}` a base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub first: Subset,
    pub second: Subset,
    pub removed: usize,
}

impl From<ExchangeViolation> for Error {
    fn from(v: ExchangeViolation) -> Self {
        Error::ExchangeFailure {
            first: v.first,
            second: v.second,
            removed: v.removed,
        }
    }
}

/// Checks the exchange axiom on a canonically sorted slice of sets and
/// returns the least violating `(B1, B2, x)`.
pub fn exchange_violation(sorted: &[Subset]) -> Option<ExchangeViolation> {
    let is_member = |x: Subset| sorted.binary_search(&x).is_ok();
    for &first in sorted {
        for &second in sorted {
            for removed in (first - second).iter() {
                let rest = first.without(removed);
                if !(second - first).iter().any(|y| is_member(rest.with(y))) {
                    return Some(ExchangeViolation {
                        first,
                        second,
                        removed,
                    });
                }
            }
        }
    }
    None
}

impl Matroid {
    /// Validates `candidate` as a base family: nonempty, equicardinal, and
    /// closed under exchange, in that order.
    pub fn from_bases(candidate: SetFamily) -> Result<Self> {
        let Some(&first) = candidate.as_slice().first() else {
            return Err(Error::EmptyFamily);
        };
        // canonical order sorts by size, so the last set is the largest
        let last = *candidate.as_slice().last().unwrap();
        if first.len() != last.len() {
            let second = *candidate.iter().find(|b| b.len() != first.len()).unwrap();
            return Err(Error::UnequalCardinality { first, second });
        }
        if let Some(v) = exchange_violation(candidate.as_slice()) {
            return Err(v.into());
        }
        Ok(Matroid {
            rank: first.len(),
            bases: candidate,
        })
    }

    /// Validates `indep` against the independence axioms and returns the
    /// matroid whose bases are its maximal members.
    pub fn from_independents(indep: SetFamily) -> Result<Self> {
        if !indep.contains(Subset::empty()) {
            return Err(Error::MissingEmptySet);
        }
        for &independent in &indep {
            for i in independent.iter() {
                let missing = independent.without(i);
                if !indep.contains(missing) {
                    return Err(Error::NotDownwardClosed {
                        independent,
                        missing,
                    });
                }
            }
        }
        for &smaller in &indep {
            for &larger in indep.iter().filter(|l| l.len() > smaller.len()) {
                if !(larger - smaller)
                    .iter()
                    .any(|e| indep.contains(smaller.with(e)))
                {
                    return Err(Error::AugmentationFailure { smaller, larger });
                }
            }
        }
        Matroid::from_bases(max(&indep))
    }

    pub fn ground(&self) -> &GroundSet {
        self.bases.ground()
    }

    pub fn bases(&self) -> &SetFamily {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_base(&self, x: Subset) -> bool {
        self.bases.contains(x)
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.bases.iter().any(|b| x.is_subset_of(*b))
    }

    /// The independence family `Low(ℬ)`.
    pub fn independents(&self) -> SetFamily {
        low(&self.bases)
    }

    /// `r(X) = max |B ∩ X|` over bases.
    pub fn rank_of(&self, x: Subset) -> usize {
        self.bases.iter().map(|b| (*b & x).len()).max().unwrap_or(0)
    }

    pub fn union_of_bases(&self) -> Subset {
        self.bases.union_all()
    }

    pub fn intersection_of_bases(&self) -> Subset {
        self.bases.intersection_all()
    }

    /// The dual matroid, whose bases are the complements of the bases.
    pub fn dual(&self) -> Matroid {
        Matroid::from_bases(com(&self.bases))
            .expect("complements of a base family form a base family")
    }

    /// Number of bases containing each element, sorted.
    pub fn degree_profile(&self) -> Vec<usize> {
        let mut degrees = self.element_degrees();
        degrees.sort_unstable();
        degrees
    }

    fn element_degrees(&self) -> Vec<usize> {
        (0..self.ground().len())
            .map(|e| self.bases.iter().filter(|b| b.contains(e)).count())
            .collect()
    }

    /// A bijection `map[i] = j` of ground indices carrying the bases of
    /// `self` onto those of `other`, if one exists.
    pub fn find_isomorphism(&self, other: &Matroid) -> Option<Vec<usize>> {
        let n = self.ground().len();
        if n != other.ground().len()
            || self.rank != other.rank
            || self.bases.len() != other.bases.len()
            || self.degree_profile() != other.degree_profile()
        {
            return None;
        }
        let from_deg = self.element_degrees();
        let to_deg = other.element_degrees();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if assign(0, &from_deg, &to_deg, &mut map, &mut used, self, other) {
            Some(map)
        } else {
            None
        }
    }

    pub fn relabel(&self, map: &[usize]) -> Vec<Subset> {
        self.bases
            .iter()
            .map(|b| b.iter().map(|i| map[i]).collect())
            .collect()
    }
}

fn assign(
    next: usize,
    from_deg: &[usize],
    to_deg: &[usize],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    a: &Matroid,
    b: &Matroid,
) -> bool {
    if next == from_deg.len() {
        return a.relabel(map).into_iter().all(|x| b.is_base(x));
    }
    for target in 0..to_deg.len() {
        if used[target] || to_deg[target] != from_deg[next] {
            continue;
        }
        used[target] = true;
        map[next] = target;
        if assign(next + 1, from_deg, to_deg, map, used, a, b) {
            return true;
        }
        used[target] = false;
    }
    map[next] = usize::MAX;
    false
}

/// True iff some bijection between the ground sets maps bases onto bases.
pub fn are_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    a.find_isomorphism(b).is_some()
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(E={:?}, B={})", self.ground(), self.bases)
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bases)
    }
}

/// Blocks `P_1..P_m` with caps `k_1..k_m`, `k_i ≤ |P_i|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMatroidSpec {
    blocks: Partition,
    caps: Vec<usize>,
}

impl PartitionMatroidSpec {
    pub fn new(blocks: Partition, caps: Vec<usize>) -> Result<Self> {
        if caps.len() != blocks.len() {
            return Err(Error::CapCountMismatch {
                blocks: blocks.len(),
                caps: caps.len(),
            });
        }
        for (block, &cap) in blocks.blocks().iter().zip(&caps) {
            if cap > block.len() {
                return Err(Error::CapOutOfRange {
                    block: *block,
                    cap: cap as i64,
                    size: block.len(),
                });
            }
        }
        Ok(PartitionMatroidSpec { blocks, caps })
    }

    pub fn blocks(&self) -> &Partition {
        &self.blocks
    }

    /// Caps in block order.
    pub fn caps(&self) -> &[usize] {
        &self.caps
    }
}

/// `M(P; k_1..k_m)` on `ground`. Elements outside `∪P` lie in no base.
pub fn make_partition_matroid(ground: &GroundSet, spec: &PartitionMatroidSpec) -> Result<Matroid> {
    if spec.blocks.ground() != ground {
        return Err(Error::GroundMismatch);
    }
    let bases = spec.blocks.blocks().iter().zip(&spec.caps).fold(
        vec![Subset::empty()],
        |acc, (block, &cap)| {
            let choices: Vec<Subset> = block
                .iter()
                .combinations(cap)
                .map(Subset::from_indices)
                .collect();
            acc.iter()
                .flat_map(|partial| choices.iter().map(move |c| *partial | *c))
                .collect()
        },
    );
    Matroid::from_bases(SetFamily::new(ground, bases)?)
}

/// `M_E(P)`: independent sets pick at most one element from each block.
pub fn make_unique_partition_matroid(ground: &GroundSet, p: &Partition) -> Result<Matroid> {
    let spec = PartitionMatroidSpec::new(p.clone(), vec![1; p.len()])?;
    make_partition_matroid(ground, &spec)
}
