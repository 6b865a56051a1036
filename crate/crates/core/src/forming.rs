//! Secondary bases, the expansion operator `K_M` and forming base families.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{is_partition, Partition, SetFamily, Subset};

/// Where a forming family came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormingSource {
    /// `F(M)`, over all secondary bases.
    Global,
    /// `F_M(B)`, over the secondary bases inside the recorded base.
    RelativeTo(Subset),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormingFamily {
    family: SetFamily,
    source: FormingSource,
}

impl FormingFamily {
    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn source(&self) -> FormingSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    /// The family as a partition of `∪ℬ(M)`, when it is one.
    pub fn as_partition(&self, m: &Matroid) -> Option<Partition> {
        let support = m.union_of_bases();
        if is_partition(&self.family, support) {
            Partition::of(self.family.clone(), support).ok()
        } else {
            None
        }
    }
}

/// `s(M)`: independent sets of size `r(M) − 1`.
pub fn secondary_bases(m: &Matroid) -> Result<SetFamily> {
    if m.rank() == 0 {
        return Err(Error::RankZero);
    }
    let sets = m
        .bases()
        .iter()
        .flat_map(|b| b.iter().map(move |x| b.without(x)))
        .collect::<Vec<_>>();
    SetFamily::new(m.ground(), sets)
}

/// `K_M(X)`: the elements whose addition raises the rank of `X` by one.
pub fn k_operator(m: &Matroid, x: Subset) -> Subset {
    let base_rank = m.rank_of(x);
    (0..m.ground().len())
        .filter(|&a| m.rank_of(x.with(a)) == base_rank + 1)
        .collect()
}

/// `F(M) = { K_M(A) : A ∈ s(M) }`, deduplicated.
pub fn forming_family(m: &Matroid) -> Result<FormingFamily> {
    let blocks: Vec<Subset> = secondary_bases(m)?
        .iter()
        .map(|a| k_operator(m, *a))
        .collect();
    Ok(FormingFamily {
        family: SetFamily::new(m.ground(), blocks)?,
        source: FormingSource::Global,
    })
}

/// `F_M(B) = { K_M(B − {x}) : x ∈ B }` for a base `B`.
pub fn forming_family_wrt(m: &Matroid, b: Subset) -> Result<FormingFamily> {
    if m.rank() == 0 {
        return Err(Error::RankZero);
    }
    if !m.is_base(b) {
        return Err(Error::NotABase(b));
    }
    let blocks: Vec<Subset> = b.iter().map(|x| k_operator(m, b.without(x))).collect();
    Ok(FormingFamily {
        family: SetFamily::new(m.ground(), blocks)?,
        source: FormingSource::RelativeTo(b),
    })
}
