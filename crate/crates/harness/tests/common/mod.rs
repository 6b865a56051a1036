//! Brute-force oracles sharing no code with the library beyond its types.
#![allow(dead_code)]

use std::collections::BTreeSet;

use matroidlab::{Matroid, Subset};

pub type Family = BTreeSet<Vec<usize>>;

fn r_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

fn satisfies_exchange(fam: &Family) -> bool {
    fam.iter().all(|b1| {
        fam.iter().all(|b2| {
            b1.iter().filter(|x| !b2.contains(x)).all(|x| {
                b2.iter().filter(|y| !b1.contains(y)).any(|y| {
                    let mut c: Vec<usize> = b1.iter().copied().filter(|e| e != x).collect();
                    c.push(*y);
                    c.sort();
                    fam.contains(&c)
                })
            })
        })
    })
}

/// Every nonempty family of equal-size subsets of `{0..n}` satisfying the
/// exchange axiom, found by testing all such families.
pub fn antichain_oracle(n: usize) -> Vec<Family> {
    let mut out = Vec::new();
    for r in 0..=n {
        let cands = r_subsets(n, r);
        for mask in 1u64..1 << cands.len() {
            let fam: Family = (0..cands.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| cands[i].clone())
                .collect();
            if satisfies_exchange(&fam) {
                out.push(fam);
            }
        }
    }
    out
}

pub fn as_family(m: &Matroid) -> Family {
    m.bases().iter().map(|b| b.iter().collect()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least relabelling of `fam` over all permutations of `{0..n}`.
pub fn canonical_form(fam: &Family, perms: &[Vec<usize>]) -> Family {
    perms
        .iter()
        .map(|p| {
            fam.iter()
                .map(|b| {
                    let mut c: Vec<usize> = b.iter().map(|&x| p[x]).collect();
                    c.sort();
                    c
                })
                .collect::<Family>()
        })
        .min()
        .expect("at least one permutation")
}

pub fn class_count(n: usize, fams: &[Family]) -> usize {
    let perms = permutations(n);
    fams.iter()
        .map(|f| canonical_form(f, &perms))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Largest independent subset of `x`, by checking every subset against every base.
pub fn brute_rank(m: &Matroid, x: Subset) -> usize {
    let bases: Vec<Vec<usize>> = m.bases().iter().map(|b| b.iter().collect()).collect();
    let xs: Vec<usize> = x.iter().collect();
    (0u32..1 << xs.len())
        .filter(|mask| {
            let chosen: Vec<usize> = (0..xs.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| xs[i])
                .collect();
            bases.iter().any(|b| chosen.iter().all(|e| b.contains(e)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_k(m: &Matroid, x: Subset) -> Vec<usize> {
    let base = brute_rank(m, x);
    (0..m.ground().len())
        .filter(|&a| brute_rank(m, x.with(a)) == base + 1)
        .collect()
}
