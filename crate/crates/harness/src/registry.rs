//! The fixed registry of statements checked against every matroid in a
//! population.

use std::cell::OnceCell;

use itertools::Itertools;
use matroidlab::{
    forming_family, forming_family_wrt, is_intersection_minimal_capped, is_partition,
    is_transversal_of, is_union_minimal_capped, is_unique_exchange, is_unique_expansion,
    make_partition_matroid, make_unique_partition_matroid, partitions_of, recover_partition,
    Classification, FormingFamily, Matroid, Partition, PartitionMatroidSpec, SetFamily, Subset,
};

/// A matroid under test, with lazily computed derived objects shared by
/// all checks.
pub struct Subject<'a> {
    pub matroid: &'a Matroid,
    search_cap: usize,
    dual: OnceCell<Matroid>,
    forming: OnceCell<Option<FormingFamily>>,
    expansion: OnceCell<Option<Classification>>,
    upm_partition: OnceCell<Option<Partition>>,
}

impl<'a> Subject<'a> {
    pub fn new(matroid: &'a Matroid, search_cap: usize) -> Self {
        Subject {
            matroid,
            search_cap,
            dual: OnceCell::new(),
            forming: OnceCell::new(),
            expansion: OnceCell::new(),
            upm_partition: OnceCell::new(),
        }
    }

    pub fn dual(&self) -> &Matroid {
        self.dual.get_or_init(|| self.matroid.dual())
    }

    /// `F(M)`; `None` at rank 0.
    pub fn forming(&self) -> Option<&FormingFamily> {
        self.forming
            .get_or_init(|| forming_family(self.matroid).ok())
            .as_ref()
    }

    pub fn expansion(&self) -> Option<&Classification> {
        self.expansion
            .get_or_init(|| is_unique_expansion(self.matroid).ok())
            .as_ref()
    }

    pub fn positive_rank(&self) -> bool {
        self.matroid.rank() > 0
    }

    pub fn is_unique_expansion(&self) -> bool {
        self.expansion().is_some_and(|c| c.holds)
    }

    /// `F(M)` as a partition, for unique expansion matroids.
    fn expansion_partition(&self) -> Option<&Partition> {
        self.upm_partition
            .get_or_init(|| {
                if self.is_unique_expansion() {
                    recover_partition(self.matroid).ok().flatten()
                } else {
                    None
                }
            })
            .as_ref()
    }

    fn within_cap(&self) -> bool {
        self.matroid.bases().len() <= self.search_cap
    }

    fn render(&self, x: Subset) -> String {
        self.matroid.ground().render(x)
    }
}

pub type CheckResult = Result<(), String>;

/// One verifiable statement about matroids.
#[derive(Clone, Copy)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub applies: fn(&Subject) -> bool,
    pub check: fn(&Subject) -> CheckResult,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck")
            .field("id", &self.id)
            .finish()
    }
}

/// Outcome of one check on one matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Skipped,
    Passed,
    Failed(String),
}

impl TheoremCheck {
    pub fn run(&self, subject: &Subject) -> Outcome {
        if !(self.applies)(subject) {
            return Outcome::Skipped;
        }
        match (self.check)(subject) {
            Ok(()) => Outcome::Passed,
            Err(why) => Outcome::Failed(why),
        }
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn always(_: &Subject) -> bool {
    true
}

fn positive_rank(s: &Subject) -> bool {
    s.positive_rank()
}

fn rank_one(s: &Subject) -> bool {
    s.matroid.rank() == 1
}

fn unique_expansion(s: &Subject) -> bool {
    s.positive_rank() && s.is_unique_expansion()
}

fn unique_expansion_within_cap(s: &Subject) -> bool {
    unique_expansion(s) && s.within_cap()
}

fn within_cap(s: &Subject) -> bool {
    s.within_cap()
}

/// The registry, in a fixed order.
pub fn theorem_registry() -> Vec<TheoremCheck> {
    vec![
        TheoremCheck {
            id: "equal_base_cardinality",
            statement: "all bases have the same cardinality",
            applies: always,
            check: equal_base_cardinality,
        },
        TheoremCheck {
            id: "reverse_exchange",
            statement: "for bases B1, B2 and x in B1-B2 some y in B2-B1 makes (B2-{y})+{x} a base",
            applies: always,
            check: reverse_exchange,
        },
        TheoremCheck {
            id: "relative_forming_size",
            statement: "|F_M(B)| = r(M) and F_M(B) is a subfamily of F(M) for every base B",
            applies: positive_rank,
            check: relative_forming_size,
        },
        TheoremCheck {
            id: "forming_size_lower_bound",
            statement: "|F(M)| >= r(M)",
            applies: positive_rank,
            check: forming_size_lower_bound,
        },
        TheoremCheck {
            id: "forming_union",
            statement: "the union of F(M) is the union of the bases",
            applies: positive_rank,
            check: forming_union,
        },
        TheoremCheck {
            id: "relative_forming_union",
            statement: "the union of F_M(B) is the union of the bases for every base B",
            applies: positive_rank,
            check: relative_forming_union,
        },
        TheoremCheck {
            id: "relative_forming_unique_block",
            statement: "every element of a base B lies in exactly one block of F_M(B)",
            applies: positive_rank,
            check: relative_forming_unique_block,
        },
        TheoremCheck {
            id: "rank_one_forming",
            statement: "at rank 1, F_M(B) is the single block formed by the union of the bases",
            applies: rank_one,
            check: rank_one_forming,
        },
        TheoremCheck {
            id: "expansion_iff_partition",
            statement: "M is unique expansion iff F(M) partitions the union of the bases",
            applies: positive_rank,
            check: expansion_iff_partition,
        },
        TheoremCheck {
            id: "expansion_meets_blocks_once",
            statement: "in a unique expansion matroid every base meets every block of F(M) once",
            applies: unique_expansion,
            check: expansion_meets_blocks_once,
        },
        TheoremCheck {
            id: "expansion_iff_forming_size",
            statement: "M is unique expansion iff |F(M)| = r(M)",
            applies: positive_rank,
            check: expansion_iff_forming_size,
        },
        TheoremCheck {
            id: "expansion_base_membership",
            statement: "in a unique expansion matroid, B is a base iff B lies in the union of \
                        the bases and meets every block of F(M) once",
            applies: unique_expansion,
            check: expansion_base_membership,
        },
        TheoremCheck {
            id: "expansion_transversal_product",
            statement: "the bases of a unique expansion matroid are the transversals of F(M)",
            applies: unique_expansion,
            check: expansion_transversal_product,
        },
        TheoremCheck {
            id: "partition_constructors_valid",
            statement: "partition matroids M(P;k) and unique partition matroids M_E(P) satisfy \
                        the independence axioms",
            applies: unique_expansion,
            check: partition_constructors_valid,
        },
        TheoremCheck {
            id: "partition_matroid_bases",
            statement: "B is a base of M(P;k) iff B lies in the union of P and |B & P_i| = k_i",
            applies: unique_expansion,
            check: partition_matroid_bases,
        },
        TheoremCheck {
            id: "unique_partition_bases",
            statement:
                "B is a base of M_E(P) iff B lies in the union of P and meets every block once",
            applies: unique_expansion,
            check: unique_partition_bases,
        },
        TheoremCheck {
            id: "unique_partition_product",
            statement: "the bases of M_E(P) are the transversals of P",
            applies: unique_expansion,
            check: unique_partition_product,
        },
        TheoremCheck {
            id: "unique_partition_dual_bases",
            statement: "B is a base of the dual of M_E(P) iff E minus the union of P lies in B \
                        and |K - B| = 1 for every block K",
            applies: unique_expansion,
            check: unique_partition_dual_bases,
        },
        TheoremCheck {
            id: "unique_partition_union",
            statement: "the union of the bases of M_E(P) is the union of P",
            applies: unique_expansion,
            check: unique_partition_union,
        },
        TheoremCheck {
            id: "unique_partition_forming_family",
            statement: "F(M_E(P)) = P",
            applies: unique_expansion,
            check: unique_partition_forming_family,
        },
        TheoremCheck {
            id: "expansion_iff_unique_partition",
            statement: "M is unique expansion iff M = M_E(P) for some partition P",
            applies: positive_rank,
            check: expansion_iff_unique_partition,
        },
        TheoremCheck {
            id: "transversal_iff_product",
            statement: "for a partition P of the union of the bases, every base meets every \
                        block once iff the bases are the transversals of P",
            applies: always,
            check: transversal_iff_product,
        },
        TheoremCheck {
            id: "transversal_count",
            statement: "if every base meets every block of P once then |B(M)| = Co(P)",
            applies: always,
            check: transversal_count,
        },
        TheoremCheck {
            id: "transversal_partition_unique",
            statement: "at most one partition of the union of the bases is met once by every \
                        base, and it is recovered from F(M)",
            applies: always,
            check: transversal_partition_unique,
        },
        TheoremCheck {
            id: "union_minimal_duality",
            statement: "M is union minimal iff its dual is intersection minimal",
            applies: within_cap,
            check: union_minimal_duality,
        },
        TheoremCheck {
            id: "expansion_implies_union_minimal",
            statement: "unique expansion matroids are union minimal",
            applies: unique_expansion_within_cap,
            check: expansion_implies_union_minimal,
        },
        TheoremCheck {
            id: "expansion_implies_unique_exchange",
            statement: "unique expansion matroids are unique exchange matroids",
            applies: unique_expansion,
            check: expansion_implies_unique_exchange,
        },
        TheoremCheck {
            id: "expansion_dual_unique_exchange",
            statement: "the dual of a unique expansion matroid is a unique exchange matroid",
            applies: unique_expansion,
            check: expansion_dual_unique_exchange,
        },
        TheoremCheck {
            id: "dual_involution",
            statement: "the dual of the dual is M and r(M) + r(M*) = |E|",
            applies: always,
            check: dual_involution,
        },
    ]
}

pub fn lookup(id: &str) -> Option<TheoremCheck> {
    theorem_registry().into_iter().find(|c| c.id == id)
}

fn equal_base_cardinality(s: &Subject) -> CheckResult {
    let m = s.matroid;
    let sizes: Vec<usize> = m.bases().iter().map(|b| b.len()).dedup().collect();
    ensure(sizes.len() == 1, || format!("base sizes {sizes:?}"))
}

fn reverse_exchange(s: &Subject) -> CheckResult {
    let m = s.matroid;
    for &b1 in m.bases() {
        for &b2 in m.bases() {
            for x in (b1 - b2).iter() {
                let ok = (b2 - b1).iter().any(|y| m.is_base(b2.without(y).with(x)));
                ensure(ok, || {
                    format!(
                        "B1={} B2={} x={}",
                        s.render(b1),
                        s.render(b2),
                        m.ground().label(x)
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn relative_families(s: &Subject) -> Vec<(Subset, FormingFamily)> {
    s.matroid
        .bases()
        .iter()
        .map(|b| (*b, forming_family_wrt(s.matroid, *b).expect("b is a base")))
        .collect()
}

fn global<'a>(s: &'a Subject) -> &'a FormingFamily {
    s.forming().expect("positive rank")
}

fn relative_forming_size(s: &Subject) -> CheckResult {
    let global = global(s).family();
    for (b, local) in relative_families(s) {
        ensure(local.len() == s.matroid.rank(), || {
            format!("|F_M({})| = {}", s.render(b), local.len())
        })?;
        ensure(local.family().is_subfamily_of(global), || {
            format!("F_M({}) = {} not inside F(M)", s.render(b), local.family())
        })?;
    }
    Ok(())
}

fn forming_size_lower_bound(s: &Subject) -> CheckResult {
    let f = global(s);
    ensure(f.len() >= s.matroid.rank(), || {
        format!("|F(M)| = {}", f.len())
    })
}

fn forming_union(s: &Subject) -> CheckResult {
    let f = global(s).family();
    ensure(f.union_all() == s.matroid.union_of_bases(), || {
        format!("union of F(M) = {}", s.render(f.union_all()))
    })
}

fn relative_forming_union(s: &Subject) -> CheckResult {
    let target = s.matroid.union_of_bases();
    for (b, local) in relative_families(s) {
        let u = local.family().union_all();
        ensure(u == target, || {
            format!("union of F_M({}) = {}", s.render(b), s.render(u))
        })?;
    }
    Ok(())
}

fn relative_forming_unique_block(s: &Subject) -> CheckResult {
    for (b, local) in relative_families(s) {
        for e in b.iter() {
            let hits = local.family().iter().filter(|k| k.contains(e)).count();
            ensure(hits == 1, || {
                format!(
                    "element {} lies in {hits} blocks of F_M({})",
                    s.matroid.ground().label(e),
                    s.render(b)
                )
            })?;
        }
    }
    Ok(())
}

fn rank_one_forming(s: &Subject) -> CheckResult {
    let expected = vec![s.matroid.union_of_bases()];
    for (b, local) in relative_families(s) {
        ensure(local.family().as_slice() == expected, || {
            format!("F_M({}) = {}", s.render(b), local.family())
        })?;
    }
    Ok(())
}

fn expansion_iff_partition(s: &Subject) -> CheckResult {
    let f = global(s).family();
    let partition = is_partition(f, s.matroid.union_of_bases());
    let expansion = s.is_unique_expansion();
    ensure(partition == expansion, || {
        format!("unique expansion {expansion}, F(M) = {f} partition {partition}")
    })
}

fn meets_once(b: Subset, blocks: &SetFamily) -> bool {
    blocks.iter().all(|k| (b & *k).len() == 1)
}

fn expansion_meets_blocks_once(s: &Subject) -> CheckResult {
    let f = global(s).family();
    for &b in s.matroid.bases() {
        ensure(meets_once(b, f), || {
            format!("base {} against F(M) = {f}", s.render(b))
        })?;
    }
    Ok(())
}

fn expansion_iff_forming_size(s: &Subject) -> CheckResult {
    let size = global(s).len();
    let expansion = s.is_unique_expansion();
    ensure((size == s.matroid.rank()) == expansion, || {
        format!("unique expansion {expansion}, |F(M)| = {size}")
    })
}

fn expansion_base_membership(s: &Subject) -> CheckResult {
    let m = s.matroid;
    let f = global(s).family();
    for b in m.union_of_bases().subsets() {
        let by_blocks = meets_once(b, f);
        ensure(m.is_base(b) == by_blocks, || {
            format!(
                "{}: base {} vs meets blocks once {by_blocks}",
                s.render(b),
                m.is_base(b)
            )
        })?;
    }
    Ok(())
}

fn expansion_partition<'a>(s: &'a Subject) -> Result<&'a Partition, String> {
    s.expansion_partition()
        .ok_or_else(|| "F(M) of a unique expansion matroid is not a partition".to_string())
}

fn expansion_transversal_product(s: &Subject) -> CheckResult {
    let p = expansion_partition(s)?;
    let product =
        SetFamily::new(s.matroid.ground(), p.transversals()).map_err(|e| e.to_string())?;
    ensure(&product == s.matroid.bases(), || {
        format!("transversals of F(M) = {product}")
    })
}

/// Every cap vector `0 ≤ k_i ≤ |P_i|` for the blocks of `p`.
fn cap_vectors(p: &Partition) -> Vec<Vec<usize>> {
    p.blocks()
        .iter()
        .map(|k| 0..=k.len())
        .multi_cartesian_product()
        .collect()
}

/// `I(P;k)` written out from its definition over all subsets of `E`, with
/// elements outside `∪P` allowed zero times.
fn capped_independents(s: &Subject, p: &Partition, caps: &[usize]) -> SetFamily {
    let sets = s
        .matroid
        .ground()
        .full()
        .subsets()
        .filter(|x| x.is_subset_of(p.support()))
        .filter(|x| {
            p.blocks()
                .iter()
                .zip(caps)
                .all(|(k, &c)| (*x & *k).len() <= c)
        });
    SetFamily::new(s.matroid.ground(), sets).expect("subsets of the ground set")
}

fn partition_matroid(s: &Subject, p: &Partition, caps: &[usize]) -> Result<Matroid, String> {
    let spec = PartitionMatroidSpec::new(p.clone(), caps.to_vec()).map_err(|e| e.to_string())?;
    make_partition_matroid(s.matroid.ground(), &spec)
        .map_err(|e| format!("M({p};{caps:?}) rejected: {}", e.render(s.matroid.ground())))
}

fn unique_partition_matroid(s: &Subject, p: &Partition) -> Result<Matroid, String> {
    make_unique_partition_matroid(s.matroid.ground(), p)
        .map_err(|e| format!("M_E({p}) rejected: {}", e.render(s.matroid.ground())))
}

fn partition_constructors_valid(s: &Subject) -> CheckResult {
    let p = expansion_partition(s)?;
    for caps in cap_vectors(p) {
        let built = partition_matroid(s, p, &caps)?;
        let by_axioms = Matroid::from_independents(capped_independents(s, p, &caps))
            .map_err(|e| format!("I({p};{caps:?}): {}", e.render(s.matroid.ground())))?;
        ensure(built == by_axioms, || {
            format!("M({p};{caps:?}) = {built} but its independents give {by_axioms}")
        })?;
    }
    let upm = unique_partition_matroid(s, p)?;
    let ones = vec![1; p.len()];
    let by_axioms = Matroid::from_independents(capped_independents(s, p, &ones))
        .map_err(|e| format!("I_P for {p}: {}", e.render(s.matroid.ground())))?;
    ensure(upm == by_axioms, || {
        format!("M_E({p}) = {upm} but I_P gives {by_axioms}")
    })
}

fn partition_matroid_bases(s: &Subject) -> CheckResult {
    let p = expansion_partition(s)?;
    for caps in cap_vectors(p) {
        let built = partition_matroid(s, p, &caps)?;
        for b in s.matroid.ground().full().subsets() {
            let expected = b.is_subset_of(p.support())
                && p.blocks()
                    .iter()
                    .zip(&caps)
                    .all(|(k, &c)| (b & *k).len() == c);
            ensure(built.is_base(b) == expected, || {
                format!("M({p};{caps:?}): {} base {}", s.render(b), built.is_base(b))
            })?;
        }
    }
    Ok(())
}

fn unique_partition_bases(s: &Subject) -> CheckResult {
    let p = expansion_partition(s)?;
    let upm = unique_partition_matroid(s, p)?;
    for b in s.matroid.ground().full().subsets() {
        let expected = b.is_subset_of(p.support()) && meets_once(b, p.blocks());
        ensure(upm.is_base(b) == expected, || {
            format!("M_E({p}): {} base {}", s.render(b), upm.is_base(b))
        })?;
    }
    Ok(())
}

fn unique_partition_product(s: &Subject) -> CheckResult {
    let p = expansion_partition(s)?;
    let upm = unique_partition_matroid(s, p)?;
    let product =
        SetFamily::new(s.matroid.ground(), p.transversals()).map_err(|e| e.to_string())?;
    ensure(&product == upm.bases(), || {
        format!("M_E({p}) has bases {upm}, transversals {product}")
    })
}

fn unique_partition_dual_bases(s: &Subject) -> CheckResult {
    let p = expansion_partition(s)?;
    let dual = unique_partition_matroid(s, p)?.dual();
    let full = s.matroid.ground().full();
    let outside = full - p.support();
    for b in full.subsets() {
        let expected = outside.is_subset_of(b) && p.blocks().iter().all(|k| (*k - b).len() == 1);
        ensure(dual.is_base(b) == expected, || {
            format!("dual of M_E({p}): {} base {}", s.render(b), dual.is_base(b))
        })?;
    }
    Ok(())
}

fn unique_partition_union(s: &Subject) -> CheckResult {
    let p = expansion_partition(s)?;
    let upm = unique_partition_matroid(s, p)?;
    ensure(upm.union_of_bases() == p.support(), || {
        format!(
            "union of bases of M_E({p}) = {}",
            s.render(upm.union_of_bases())
        )
    })
}

fn unique_partition_forming_family(s: &Subject) -> CheckResult {
    let p = expansion_partition(s)?;
    let upm = unique_partition_matroid(s, p)?;
    let f = forming_family(&upm).map_err(|e| e.to_string())?;
    ensure(f.family() == p.blocks(), || {
        format!("F(M_E({p})) = {}", f.family())
    })
}

fn expansion_iff_unique_partition(s: &Subject) -> CheckResult {
    let m = s.matroid;
    let ground = m.ground();
    // M_E(P) has rank |P|, so only partitions with r(M) blocks can match
    let source = ground
        .full()
        .subsets()
        .flat_map(|support| partitions_of(ground, support))
        .filter(|p| p.len() == m.rank())
        .find(|p| make_unique_partition_matroid(ground, p).is_ok_and(|upm| &upm == m));
    let expansion = s.is_unique_expansion();
    ensure(expansion == source.is_some(), || match &source {
        Some(p) => format!("not unique expansion, but equals M_E({p})"),
        None => "unique expansion, but equals no M_E(P)".to_string(),
    })?;
    if let Some(p) = s.expansion_partition() {
        let rebuilt = unique_partition_matroid(s, p)?;
        ensure(&rebuilt == m, || format!("M_E(F(M)) = {rebuilt}"))?;
    }
    Ok(())
}

/// Partitions of `∪ℬ(M)` met exactly once by every base.
fn met_once_partitions(s: &Subject) -> Vec<Partition> {
    let m = s.matroid;
    partitions_of(m.ground(), m.union_of_bases())
        .into_iter()
        .filter(|p| m.bases().iter().all(|b| meets_once(*b, p.blocks())))
        .collect()
}

fn transversal_iff_product(s: &Subject) -> CheckResult {
    let m = s.matroid;
    for p in partitions_of(m.ground(), m.union_of_bases()) {
        let met_once = m.bases().iter().all(|b| meets_once(*b, p.blocks()));
        let product = SetFamily::new(m.ground(), p.transversals()).map_err(|e| e.to_string())?;
        let is_product = &product == m.bases();
        ensure(met_once == is_product, || {
            format!("P = {p}: meets once {met_once}, bases are transversals {is_product}")
        })?;
    }
    Ok(())
}

fn transversal_count(s: &Subject) -> CheckResult {
    for p in met_once_partitions(s) {
        let co = p.combination_number();
        ensure(s.matroid.bases().len() as u64 == co, || {
            format!(
                "P = {p}: |B(M)| = {} but Co(P) = {co}",
                s.matroid.bases().len()
            )
        })?;
    }
    Ok(())
}

fn transversal_partition_unique(s: &Subject) -> CheckResult {
    let m = s.matroid;
    let found = met_once_partitions(s);
    ensure(found.len() <= 1, || {
        format!(
            "{} partitions met once: {}",
            found.len(),
            found.iter().join(", ")
        )
    })?;
    for p in &found {
        let agrees = is_transversal_of(m, p).map_err(|e| e.to_string())?;
        ensure(agrees, || format!("is_transversal_of rejects {p}"))?;
    }
    if m.rank() > 0 {
        let recovered = recover_partition(m).map_err(|e| e.to_string())?;
        ensure(recovered.as_ref() == found.first(), || {
            format!(
                "recovered {:?}, met once by all bases {:?}",
                recovered.map(|p| p.to_string()),
                found.first().map(|p| p.to_string())
            )
        })?;
    }
    Ok(())
}

fn union_minimal(s: &Subject, m: &Matroid) -> Result<bool, String> {
    is_union_minimal_capped(m, s.search_cap)
        .map(|c| c.holds)
        .map_err(|e| e.to_string())
}

fn union_minimal_duality(s: &Subject) -> CheckResult {
    let um = union_minimal(s, s.matroid)?;
    let im = is_intersection_minimal_capped(s.dual(), s.search_cap)
        .map_err(|e| e.to_string())?
        .holds;
    ensure(um == im, || {
        format!("union minimal {um}, dual intersection minimal {im}")
    })
}

fn expansion_implies_union_minimal(s: &Subject) -> CheckResult {
    let c = is_union_minimal_capped(s.matroid, s.search_cap).map_err(|e| e.to_string())?;
    ensure(c.holds, || {
        let w = c.witness.as_ref().map(|w| w.render(s.matroid.ground()));
        format!(
            "unique expansion but not union minimal: {}",
            w.unwrap_or_default()
        )
    })
}

fn expansion_implies_unique_exchange(s: &Subject) -> CheckResult {
    let c = is_unique_exchange(s.matroid);
    ensure(c.holds, || {
        let w = c.witness.as_ref().map(|w| w.render(s.matroid.ground()));
        format!(
            "unique expansion but exchange not unique: {}",
            w.unwrap_or_default()
        )
    })
}

fn expansion_dual_unique_exchange(s: &Subject) -> CheckResult {
    let c = is_unique_exchange(s.dual());
    ensure(c.holds, || {
        let w = c.witness.as_ref().map(|w| w.render(s.matroid.ground()));
        format!("dual exchange not unique: {}", w.unwrap_or_default())
    })
}

fn dual_involution(s: &Subject) -> CheckResult {
    let m = s.matroid;
    let d = s.dual();
    ensure(&d.dual() == m, || format!("dual of dual = {}", d.dual()))?;
    ensure(m.rank() + d.rank() == m.ground().len(), || {
        format!("r(M) = {}, r(M*) = {}", m.rank(), d.rank())
    })
}
