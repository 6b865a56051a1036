//! Small hand-worked matroids with their known properties.

use std::fmt;

use matroidlab::{
    are_isomorphic, forming_family, is_covering, is_intersection_minimal_capped, is_partition,
    is_union_minimal_capped, is_unique_exchange, is_unique_expansion, GroundSet, Matroid,
    SetFamily, Subset, Witness,
};

use crate::HarnessError;

/// A property expected of one or two of an example's matroids, referenced
/// by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    Rank(usize, usize),
    FormingFamily(usize, SetFamily),
    /// `F(M)` covers the union of the bases; the flag says whether it also partitions it.
    FormingCovering {
        which: usize,
        partition: bool,
    },
    Independent(usize, Subset),
    UniqueExpansion {
        which: usize,
        holds: bool,
        witness: Option<Witness>,
    },
    DualUniqueExpansion(usize, bool),
    UniqueExchange {
        which: usize,
        holds: bool,
        witness: Option<Witness>,
    },
    UnionMinimal {
        which: usize,
        holds: bool,
        witness: Option<Witness>,
    },
    IntersectionMinimal(usize, bool),
    UnionOfBases(usize, Subset),
    IntersectionOfBases(usize, Subset),
    NotIsomorphic(usize, usize),
}

#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub name: &'static str,
    pub matroids: Vec<Matroid>,
    pub facts: Vec<Fact>,
}

impl Fact {
    /// Evaluates the fact against `ms`, using `cap` for minimality searches.
    pub fn check(&self, ms: &[Matroid], cap: usize) -> Result<(), String> {
        let err = |e: matroidlab::Error| e.to_string();
        let expect = |ok: bool, got: String| if ok { Ok(()) } else { Err(got) };
        match self {
            Fact::Rank(i, r) => expect(ms[*i].rank() == *r, format!("rank {}", ms[*i].rank())),
            Fact::FormingFamily(i, expected) => {
                let f = forming_family(&ms[*i]).map_err(err)?;
                expect(f.family() == expected, format!("F(M) = {}", f.family()))
            }
            Fact::FormingCovering { which, partition } => {
                let m = &ms[*which];
                let f = forming_family(m).map_err(err)?;
                let support = m.union_of_bases();
                let covers = is_covering(f.family(), support);
                let parts = is_partition(f.family(), support);
                expect(
                    covers && parts == *partition,
                    format!("covering {covers}, partition {parts}"),
                )
            }
            Fact::Independent(i, x) => expect(
                ms[*i].is_independent(*x),
                format!("{} is dependent", ms[*i].ground().render(*x)),
            ),
            Fact::UniqueExpansion {
                which,
                holds,
                witness,
            } => {
                let c = is_unique_expansion(&ms[*which]).map_err(err)?;
                verdict(&ms[*which], c.holds, c.witness, *holds, witness)
            }
            Fact::DualUniqueExpansion(i, holds) => {
                let c = is_unique_expansion(&ms[*i].dual()).map_err(err)?;
                expect(
                    c.holds == *holds,
                    format!("dual unique expansion {}", c.holds),
                )
            }
            Fact::UniqueExchange {
                which,
                holds,
                witness,
            } => {
                let c = is_unique_exchange(&ms[*which]);
                verdict(&ms[*which], c.holds, c.witness, *holds, witness)
            }
            Fact::UnionMinimal {
                which,
                holds,
                witness,
            } => {
                let c = is_union_minimal_capped(&ms[*which], cap).map_err(err)?;
                verdict(&ms[*which], c.holds, c.witness, *holds, witness)
            }
            Fact::IntersectionMinimal(i, holds) => {
                let c = is_intersection_minimal_capped(&ms[*i], cap).map_err(err)?;
                verdict(&ms[*i], c.holds, c.witness, *holds, &None)
            }
            Fact::UnionOfBases(i, x) => {
                let u = ms[*i].union_of_bases();
                expect(u == *x, format!("union {}", ms[*i].ground().render(u)))
            }
            Fact::IntersectionOfBases(i, x) => {
                let u = ms[*i].intersection_of_bases();
                expect(
                    u == *x,
                    format!("intersection {}", ms[*i].ground().render(u)),
                )
            }
            Fact::NotIsomorphic(a, b) => {
                expect(!are_isomorphic(&ms[*a], &ms[*b]), "isomorphic".to_string())
            }
        }
    }
}

/// Compares a verdict; a negative verdict must come with a confirming
/// witness equal to the expected one, when one is given.
fn verdict(
    m: &Matroid,
    holds: bool,
    witness: Option<Witness>,
    expected: bool,
    expected_witness: &Option<Witness>,
) -> Result<(), String> {
    if holds != expected {
        return Err(format!("verdict {holds}"));
    }
    if let Some(w) = &witness {
        if !w.confirms(m) {
            return Err(format!("witness {} does not confirm", w.render(m.ground())));
        }
    }
    match (expected_witness, &witness) {
        (Some(e), Some(w)) if e != w => Err(format!("witness {}", w.render(m.ground()))),
        _ => Ok(()),
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Rank(i, r) => write!(f, "r(M{i}) = {r}"),
            Fact::FormingFamily(i, fam) => write!(f, "F(M{i}) = {fam}"),
            Fact::FormingCovering { which, partition } => {
                let p = if *partition {
                    "a partition"
                } else {
                    "not a partition"
                };
                write!(f, "F(M{which}) covers the union of the bases, {p}")
            }
            Fact::Independent(i, x) => write!(f, "{x:?} independent in M{i}"),
            Fact::UniqueExpansion { which, holds, .. } => {
                write!(f, "M{which} unique expansion = {holds}")
            }
            Fact::DualUniqueExpansion(i, holds) => {
                write!(f, "dual of M{i} unique expansion = {holds}")
            }
            Fact::UniqueExchange { which, holds, .. } => {
                write!(f, "M{which} unique exchange = {holds}")
            }
            Fact::UnionMinimal { which, holds, .. } => {
                write!(f, "M{which} union minimal = {holds}")
            }
            Fact::IntersectionMinimal(i, holds) => write!(f, "M{i} intersection minimal = {holds}"),
            Fact::UnionOfBases(i, x) => write!(f, "union of bases of M{i} = {x:?}"),
            Fact::IntersectionOfBases(i, x) => write!(f, "intersection of bases of M{i} = {x:?}"),
            Fact::NotIsomorphic(a, b) => write!(f, "M{a} and M{b} are not isomorphic"),
        }
    }
}

fn ground(n: usize) -> Result<GroundSet, HarnessError> {
    Ok(GroundSet::numbered(n)?)
}

fn family(g: &GroundSet, sets: &[&[usize]]) -> Result<SetFamily, HarnessError> {
    Ok(SetFamily::from_labels(
        g,
        sets.iter().map(|s| s.iter().map(|i| i.to_string())),
    )?)
}

fn matroid(n: usize, sets: &[&[usize]]) -> Result<Matroid, HarnessError> {
    Ok(Matroid::from_bases(family(&ground(n)?, sets)?)?)
}

/// Element indices from 1-based labels.
fn set(labels: &[usize]) -> Subset {
    labels.iter().map(|l| l - 1).collect()
}

const TWO_BASES: &[&[usize]] = &[&[1, 2], &[1, 3]];
const TRIANGLE: &[&[usize]] = &[&[1, 2], &[1, 3], &[2, 3]];
const STAR: &[&[usize]] = &[&[1, 2], &[1, 3], &[1, 4]];
const SQUARE: &[&[usize]] = &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]];

/// The worked examples, each with its expected facts.
pub fn worked_examples() -> Result<Vec<WorkedExample>, HarnessError> {
    let g3 = ground(3)?;
    Ok(vec![
        WorkedExample {
            name: "forming families of {12,13} and of the triangle",
            matroids: vec![matroid(3, TWO_BASES)?, matroid(3, TRIANGLE)?],
            facts: vec![
                Fact::FormingFamily(0, family(&g3, &[&[1], &[2, 3]])?),
                Fact::Rank(0, 2),
                Fact::FormingFamily(1, family(&g3, TRIANGLE)?),
                Fact::Rank(1, 2),
            ],
        },
        WorkedExample {
            name: "triangle forming family covers without partitioning",
            matroids: vec![matroid(3, TRIANGLE)?],
            facts: vec![
                Fact::FormingFamily(0, family(&g3, TRIANGLE)?),
                Fact::FormingCovering {
                    which: 0,
                    partition: false,
                },
            ],
        },
        WorkedExample {
            name: "triangle extends {1} by two elements of {2,3}",
            matroids: vec![matroid(3, TRIANGLE)?],
            facts: vec![
                Fact::Independent(0, set(&[1, 2])),
                Fact::Independent(0, set(&[1, 3])),
                Fact::UniqueExpansion {
                    which: 0,
                    holds: false,
                    witness: Some(Witness::Expansion {
                        secondary: set(&[1]),
                        base: set(&[2, 3]),
                        first: 1,
                        second: 2,
                    }),
                },
            ],
        },
        WorkedExample {
            name: "{12,13} is a unique expansion matroid",
            matroids: vec![matroid(3, TWO_BASES)?],
            facts: vec![
                Fact::UniqueExpansion {
                    which: 0,
                    holds: true,
                    witness: None,
                },
                Fact::FormingCovering {
                    which: 0,
                    partition: true,
                },
            ],
        },
        WorkedExample {
            name: "unique exchange without unique expansion",
            matroids: vec![matroid(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]])?],
            facts: vec![
                Fact::UniqueExchange {
                    which: 0,
                    holds: true,
                    witness: None,
                },
                Fact::UniqueExpansion {
                    which: 0,
                    holds: false,
                    witness: Some(Witness::Expansion {
                        secondary: set(&[1, 2]),
                        base: set(&[1, 3, 4]),
                        first: 2,
                        second: 3,
                    }),
                },
            ],
        },
        WorkedExample {
            name: "unique exchange matroid whose dual is not unique expansion",
            matroids: vec![matroid(4, STAR)?],
            facts: vec![
                Fact::UniqueExchange {
                    which: 0,
                    holds: true,
                    witness: None,
                },
                Fact::DualUniqueExpansion(0, false),
            ],
        },
        WorkedExample {
            name: "dropping a base from the triangle keeps the union",
            matroids: vec![matroid(3, TRIANGLE)?, matroid(3, TWO_BASES)?],
            facts: vec![
                Fact::UnionMinimal {
                    which: 0,
                    holds: false,
                    witness: Some(Witness::UnionSubfamily(family(&g3, TWO_BASES)?)),
                },
                Fact::UnionOfBases(0, set(&[1, 2, 3])),
                Fact::UnionOfBases(1, set(&[1, 2, 3])),
                Fact::UnionMinimal {
                    which: 1,
                    holds: true,
                    witness: None,
                },
            ],
        },
        WorkedExample {
            name: "exchange of 3 from {1,2,3} into {1,4,5} is not unique",
            matroids: vec![matroid(
                5,
                &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[1, 2, 5], &[1, 4, 5]],
            )?],
            facts: vec![
                Fact::Rank(0, 3),
                Fact::UniqueExchange {
                    which: 0,
                    holds: false,
                    witness: Some(Witness::Exchange {
                        from: set(&[1, 2, 3]),
                        to: set(&[1, 4, 5]),
                        removed: 2,
                        first: 3,
                        second: 4,
                    }),
                },
            ],
        },
        WorkedExample {
            name: "union minimal, equal union and rank, not isomorphic",
            matroids: vec![matroid(5, STAR)?, matroid(5, SQUARE)?],
            facts: vec![
                Fact::UnionMinimal {
                    which: 0,
                    holds: true,
                    witness: None,
                },
                Fact::UnionMinimal {
                    which: 1,
                    holds: true,
                    witness: None,
                },
                Fact::UnionOfBases(0, set(&[1, 2, 3, 4])),
                Fact::UnionOfBases(1, set(&[1, 2, 3, 4])),
                Fact::Rank(0, 2),
                Fact::Rank(1, 2),
                Fact::IntersectionOfBases(0, set(&[1])),
                Fact::IntersectionOfBases(1, Subset::empty()),
                Fact::NotIsomorphic(0, 1),
            ],
        },
        WorkedExample {
            name: "intersection minimal, equal intersection and rank, not isomorphic",
            matroids: vec![
                matroid(5, &[&[2, 3], &[2, 4], &[3, 4]])?,
                matroid(5, SQUARE)?,
            ],
            facts: vec![
                Fact::IntersectionMinimal(0, true),
                Fact::IntersectionMinimal(1, true),
                Fact::IntersectionOfBases(0, Subset::empty()),
                Fact::IntersectionOfBases(1, Subset::empty()),
                Fact::Rank(0, 2),
                Fact::Rank(1, 2),
                Fact::UnionOfBases(0, set(&[2, 3, 4])),
                Fact::UnionOfBases(1, set(&[1, 2, 3, 4])),
                Fact::NotIsomorphic(0, 1),
            ],
        },
    ])
}

/// Every matroid appearing in the worked examples, deduplicated.
pub fn worked_population() -> Result<Vec<Matroid>, HarnessError> {
    let mut all: Vec<Matroid> = worked_examples()?
        .into_iter()
        .flat_map(|e| e.matroids)
        .collect();
    all.sort();
    all.dedup();
    Ok(all)
}

#[derive(Clone, Debug)]
pub struct FactOutcome {
    pub example: &'static str,
    pub fact: String,
    pub result: Result<(), String>,
}

pub fn check_worked_examples(cap: usize) -> Result<Vec<FactOutcome>, HarnessError> {
    Ok(worked_examples()?
        .iter()
        .flat_map(|ex| {
            ex.facts.iter().map(move |fact| FactOutcome {
                example: ex.name,
                fact: fact.to_string(),
                result: fact.check(&ex.matroids, cap),
            })
        })
        .collect())
}
