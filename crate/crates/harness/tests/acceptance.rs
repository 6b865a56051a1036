//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use matroidlab::{
    forming_family, is_intersection_minimal, is_union_minimal, is_unique_exchange,
    is_unique_expansion, k_operator, make_unique_partition_matroid, partitions_of,
    recover_partition, Classification, Error, GroundSet, Matroid, SetFamily, Subset,
    DEFAULT_SEARCH_CAP,
};
use matroidlab_harness::{check_worked_examples, enumerate_matroids, theorem_registry, verify};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn population(sizes: std::ops::RangeInclusive<usize>) -> Vec<Matroid> {
    sizes
        .flat_map(|n| enumerate_matroids(n, None).expect("n within range"))
        .collect()
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let outcomes = check_worked_examples(DEFAULT_SEARCH_CAP).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if let Some(bad) = outcomes.iter().find(|o| o.result.is_err()) {
        return Err(format!("{}: {}: {:?}", bad.example, bad.fact, bad.result));
    }
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{} facts in {elapsed:?}", outcomes.len()))
}

fn sweep(sizes: std::ops::RangeInclusive<usize>, limit: Duration) -> Outcome {
    let start = Instant::now();
    let ms = population(sizes.clone());
    if *sizes.start() == 1 {
        for n in 1..=3 {
            let got = ms.iter().filter(|m| m.ground().len() == n).count();
            let want = common::antichain_oracle(n).len();
            ensure(got == want, || {
                format!("n = {n}: {got} enumerated, oracle {want}")
            })?;
        }
    }
    let report = verify(&ms, &theorem_registry(), DEFAULT_SEARCH_CAP);
    let elapsed = start.elapsed();
    ensure(report.all_passed(), || report.to_string())?;
    within(elapsed, limit)?;
    Ok(format!(
        "{} matroids, {} checks, 0 failures in {elapsed:?}",
        report.population.total,
        report.checks.len()
    ))
}

fn constructor_round_trip() -> Outcome {
    let ground = GroundSet::numbered(5).map_err(|e| e.to_string())?;
    let mut count = 0;
    for support in ground.full().subsets() {
        for p in partitions_of(&ground, support) {
            count += 1;
            let m = make_unique_partition_matroid(&ground, &p).map_err(|e| e.to_string())?;
            ensure(m.bases().len() as u64 == p.combination_number(), || {
                format!("|B| = {} for {}", m.bases().len(), p.blocks())
            })?;
            if p.is_empty() {
                ensure(matches!(forming_family(&m), Err(Error::RankZero)), || {
                    "empty partition should give rank zero".into()
                })?;
                continue;
            }
            let f = forming_family(&m).map_err(|e| e.to_string())?;
            ensure(f.family() == p.blocks(), || {
                format!("F(M) = {} for {}", f.family(), p.blocks())
            })?;
            let recovered = recover_partition(&m).map_err(|e| e.to_string())?;
            ensure(recovered.as_ref() == Some(&p), || {
                format!("recovered {recovered:?} for {}", p.blocks())
            })?;
        }
    }
    ensure(count == 203, || format!("{count} partitions, expected 203"))?;
    Ok(format!("{count} partitions"))
}

fn duality() -> Outcome {
    let ms = population(1..=5);
    for m in &ms {
        let d = m.dual();
        ensure(&d.dual() == m, || {
            format!("dual of dual differs for {}", m.bases())
        })?;
        ensure(m.rank() + d.rank() == m.ground().len(), || {
            format!("rank sum wrong for {}", m.bases())
        })?;
    }
    Ok(format!("{} matroids", ms.len()))
}

fn matroid(n: usize, sets: &[&[&str]]) -> Matroid {
    let g = GroundSet::numbered(n).expect("small ground set");
    Matroid::from_bases(SetFamily::from_labels(&g, sets.iter().map(|s| s.iter())).expect("labels"))
        .expect("valid matroid")
}

fn classifier_runs() -> Vec<(&'static str, Classification)> {
    let triangle = matroid(3, &[&["1", "2"], &["1", "3"], &["2", "3"]]);
    let five = matroid(
        5,
        &[
            &["1", "2", "3"],
            &["1", "2", "4"],
            &["1", "3", "4"],
            &["1", "2", "5"],
            &["1", "4", "5"],
        ],
    );
    let uniform = matroid(
        4,
        &[
            &["1", "2"],
            &["1", "3"],
            &["1", "4"],
            &["2", "3"],
            &["2", "4"],
            &["3", "4"],
        ],
    );
    vec![
        (
            "unique expansion",
            is_unique_expansion(&triangle).expect("rank two"),
        ),
        ("unique exchange", is_unique_exchange(&five)),
        (
            "union minimal",
            is_union_minimal(&triangle).expect("under cap"),
        ),
        (
            "intersection minimal",
            is_intersection_minimal(&uniform).expect("under cap"),
        ),
    ]
}

fn determinism() -> Outcome {
    let reference = classifier_runs();
    for (name, c) in &reference {
        ensure(!c.holds && c.witness.is_some(), || {
            format!("{name} did not fail")
        })?;
    }
    for _ in 0..10 {
        ensure(classifier_runs() == reference, || {
            "witness changed between runs".into()
        })?;
    }
    for threads in [1, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        let runs = pool.install(classifier_runs);
        ensure(runs == reference, || {
            format!("witness changed with {threads} threads")
        })?;
    }
    Ok(format!(
        "{} classifiers, 10 runs, 1 and 8 threads",
        reference.len()
    ))
}

fn oracle_agreement() -> Outcome {
    let ms = population(1..=5);
    let mut rng = StdRng::seed_from_u64(0x6d61_7472);
    for _ in 0..1000 {
        let m = &ms[rng.gen_range(0..ms.len())];
        let n = m.ground().len();
        let x = Subset::from_bits(rng.gen_range(0..1u64 << n));
        let rank = common::brute_rank(m, x);
        ensure(m.rank_of(x) == rank, || {
            format!(
                "rank_of {} = {}, oracle {rank} in {}",
                m.ground().render(x),
                m.rank_of(x),
                m.bases()
            )
        })?;
        let k: Vec<usize> = k_operator(m, x).iter().collect();
        let want = common::brute_k(m, x);
        ensure(k == want, || {
            format!(
                "K({}) = {k:?}, oracle {want:?} in {}",
                m.ground().render(x),
                m.bases()
            )
        })?;
    }
    Ok("1000 pairs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked examples", worked_examples),
        ("exhaustive sweep n <= 4", || {
            sweep(1..=4, Duration::from_secs(10))
        }),
        ("exhaustive sweep n = 5", || {
            sweep(5..=5, Duration::from_secs(300))
        }),
        ("constructor round trip", constructor_round_trip),
        ("duality", duality),
        ("witness determinism", determinism),
        ("oracle agreement", oracle_agreement),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("PASS {} {name}: {detail}", i + 1),
            Ok(Err(why)) => {
                failures += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
            Err(_) => {
                failures += 1;
                println!("FAIL {} {name}: panicked", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
