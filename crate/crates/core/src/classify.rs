//! Decision procedures for unique expansion, unique exchange, union minimal
//! and intersection minimal matroids, and partition recovery.
//!
//! Every negative verdict comes with a witness. Searches run in parallel but
//! always report the least witness in canonical order, so output does not
//! depend on the thread count.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::forming::{forming_family, secondary_bases};
use crate::matroid::{exchange_violation, Matroid};
use crate::set::{is_partition, GroundSet, Partition, SetFamily, Subset};

/// Default bound on `|ℬ(M)|` for the exhaustive minimality searches.
pub const DEFAULT_SEARCH_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `A ∪ {first}` and `A ∪ {second}` are both bases, with both elements in `base`.
    Expansion {
        secondary: Subset,
        base: Subset,
        first: usize,
        second: usize,
    },
    /// `(from − {removed}) ∪ {y}` is a base for both `y = first` and `y = second`,
    /// each taken from `to − from`.
    Exchange {
        from: Subset,
        to: Subset,
        removed: usize,
        first: usize,
        second: usize,
    },
    /// A proper nonempty sub-base-family that is itself a base family with the same union.
    UnionSubfamily(SetFamily),
    /// As above, preserving the intersection.
    IntersectionSubfamily(SetFamily),
}

impl Witness {
    /// Re-checks the witness against the defining condition, independently
    /// of the search that produced it.
    pub fn confirms(&self, m: &Matroid) -> bool {
        match self {
            Witness::Expansion {
                secondary,
                base,
                first,
                second,
            } => {
                first != second
                    && m.rank() > 0
                    && secondary.len() == m.rank() - 1
                    && m.is_independent(*secondary)
                    && m.is_base(*base)
                    && base.contains(*first)
                    && base.contains(*second)
                    && m.is_base(secondary.with(*first))
                    && m.is_base(secondary.with(*second))
            }
            Witness::Exchange {
                from,
                to,
                removed,
                first,
                second,
            } => {
                let gained = *to - *from;
                first != second
                    && m.is_base(*from)
                    && m.is_base(*to)
                    && (*from - *to).contains(*removed)
                    && gained.contains(*first)
                    && gained.contains(*second)
                    && m.is_base(from.without(*removed).with(*first))
                    && m.is_base(from.without(*removed).with(*second))
            }
            Witness::UnionSubfamily(sub) => {
                confirms_subfamily(m, sub) && sub.union_all() == m.union_of_bases()
            }
            Witness::IntersectionSubfamily(sub) => {
                confirms_subfamily(m, sub) && sub.intersection_all() == m.intersection_of_bases()
            }
        }
    }

    pub fn render(&self, ground: &GroundSet) -> String {
        let s = |x: &Subset| ground.render(*x);
        let e = |i: &usize| ground.label(*i).to_string();
        match self {
            Witness::Expansion {
                secondary,
                base,
                first,
                second,
            } => format!(
                "A={} B={} e1={} e2={}",
                s(secondary),
                s(base),
                e(first),
                e(second)
            ),
            Witness::Exchange {
                from,
                to,
                removed,
                first,
                second,
            } => format!(
                "B1={} B2={} x={} y1={} y2={}",
                s(from),
                s(to),
                e(removed),
                e(first),
                e(second)
            ),
            Witness::UnionSubfamily(sub) | Witness::IntersectionSubfamily(sub) => {
                format!("subfamily {sub}")
            }
        }
    }
}

fn confirms_subfamily(m: &Matroid, sub: &SetFamily) -> bool {
    !sub.is_empty()
        && sub.len() < m.bases().len()
        && sub.is_subfamily_of(m.bases())
        && Matroid::from_bases(sub.clone()).is_ok()
}

/// A verdict, and a witness whenever the verdict is negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Classification {
    fn from_witness(witness: Option<Witness>) -> Self {
        Classification {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// For every base `B` and secondary base `A`, at most one `e ∈ B` makes
/// `A ∪ {e}` a base.
pub fn is_unique_expansion(m: &Matroid) -> Result<Classification> {
    let secondary = secondary_bases(m)?;
    let pairs: Vec<(Subset, Subset)> = secondary
        .iter()
        .flat_map(|a| m.bases().iter().map(move |b| (*a, *b)))
        .collect();
    let witness = pairs.par_iter().find_map_first(|&(a, b)| {
        let mut extenders = b.iter().filter(|&e| m.is_base(a.with(e)));
        let first = extenders.next()?;
        let second = extenders.next()?;
        Some(Witness::Expansion {
            secondary: a,
            base: b,
            first,
            second,
        })
    });
    Ok(Classification::from_witness(witness))
}

/// For all bases `B1, B2` and `x ∈ B1 − B2`, at most one `y ∈ B2 − B1` makes
/// `(B1 − {x}) ∪ {y}` a base.
pub fn is_unique_exchange(m: &Matroid) -> Classification {
    let bases = m.bases().as_slice();
    let witness = bases.par_iter().find_map_first(|&from| {
        bases.iter().find_map(|&to| {
            (from - to).iter().find_map(|removed| {
                let rest = from.without(removed);
                let mut ys = (to - from).iter().filter(|&y| m.is_base(rest.with(y)));
                let first = ys.next()?;
                let second = ys.next()?;
                Some(Witness::Exchange {
                    from,
                    to,
                    removed,
                    first,
                    second,
                })
            })
        })
    });
    Classification::from_witness(witness)
}

pub fn is_union_minimal(m: &Matroid) -> Result<Classification> {
    is_union_minimal_capped(m, DEFAULT_SEARCH_CAP)
}

/// No proper nonempty subfamily of `ℬ(M)` is a base family with the same union.
pub fn is_union_minimal_capped(m: &Matroid, cap: usize) -> Result<Classification> {
    let target = m.union_of_bases();
    let found = minimal_subfamily_search(m, cap, |sub| {
        sub.iter().fold(Subset::empty(), |acc, b| acc | *b) == target
    })?;
    Ok(Classification::from_witness(
        found.map(Witness::UnionSubfamily),
    ))
}

pub fn is_intersection_minimal(m: &Matroid) -> Result<Classification> {
    is_intersection_minimal_capped(m, DEFAULT_SEARCH_CAP)
}

/// No proper nonempty subfamily of `ℬ(M)` is a base family with the same intersection.
pub fn is_intersection_minimal_capped(m: &Matroid, cap: usize) -> Result<Classification> {
    let full = m.ground().full();
    let target = m.intersection_of_bases();
    let found = minimal_subfamily_search(m, cap, |sub| {
        sub.iter().fold(full, |acc, b| acc & *b) == target
    })?;
    Ok(Classification::from_witness(
        found.map(Witness::IntersectionSubfamily),
    ))
}

/// Searches proper nonempty subfamilies by decreasing size, in canonical
/// order within a size, for one that keeps `preserves` and satisfies the
/// exchange axiom.
fn minimal_subfamily_search<F>(m: &Matroid, cap: usize, preserves: F) -> Result<Option<SetFamily>>
where
    F: Fn(&[Subset]) -> bool + Sync,
{
    let bases = m.bases().as_slice();
    if bases.len() > cap {
        return Err(Error::SearchCapExceeded {
            bases: bases.len(),
            cap,
        });
    }
    for size in (1..bases.len()).rev() {
        let combos: Vec<Vec<usize>> = (0..bases.len()).combinations(size).collect();
        let found = combos.par_iter().find_map_first(|picked| {
            // indices increase, so the subfamily stays canonically sorted
            let sub: Vec<Subset> = picked.iter().map(|&i| bases[i]).collect();
            (preserves(&sub) && exchange_violation(&sub).is_none()).then_some(sub)
        });
        if let Some(sub) = found {
            return Ok(Some(SetFamily::new(m.ground(), sub)?));
        }
    }
    Ok(None)
}

/// `F(M)` as a partition of `∪ℬ(M)`, if it is one.
pub fn recover_partition(m: &Matroid) -> Result<Option<Partition>> {
    Ok(forming_family(m)?.as_partition(m))
}

/// True iff every base meets every block of `p` exactly once. A positive
/// answer also requires `ℬ(M)` to be the full transversal product of `p`
/// with `|ℬ(M)| = Co(p)`.
pub fn is_transversal_of(m: &Matroid, p: &Partition) -> Result<bool> {
    if p.ground() != m.ground() {
        return Err(Error::GroundMismatch);
    }
    let support = m.union_of_bases();
    if !is_partition(p.blocks(), support) {
        return Err(Error::SupportMismatch {
            expected: support,
            actual: p.support(),
        });
    }
    let meets_once = m
        .bases()
        .iter()
        .all(|b| p.blocks().iter().all(|k| (*b & *k).len() == 1));
    if !meets_once {
        return Ok(false);
    }
    let product = SetFamily::new(m.ground(), p.transversals())?;
    Ok(&product == m.bases() && m.bases().len() as u64 == p.combination_number())
}
