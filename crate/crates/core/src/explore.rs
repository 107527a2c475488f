//! Sparse paving families: exhaustive small families up to isomorphism and
//! seeded random ones, plus the conjecture-level exploration over them.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::kls::inv_z_y;
use crate::matroid::{size, subsets_of_size, to_vec, Matroid, MatroidSpec, Subset};
use crate::poly::IntPolynomial;

/// Representatives of every sparse paving matroid of rank `k` on `n`
/// elements with at most `max_sets` circuit-hyperplanes (at most 3), up to
/// isomorphism. A family of up to three sets is determined up to
/// relabelling by the sizes of its Venn regions.
pub fn small_sparse_paving_families(n: usize, k: usize, max_sets: usize) -> Vec<Vec<Vec<usize>>> {
    assert!(max_sets <= 3, "only families of at most three sets are enumerated");
    let mut out = vec![Vec::new()];
    if k == 0 || k >= n {
        return out;
    }
    let block = |start: &mut usize, len: usize| -> Vec<usize> {
        let v: Vec<usize> = (*start..*start + len).collect();
        *start += len;
        v
    };
    if max_sets >= 1 {
        out.push(vec![(0..k).collect()]);
    }
    if max_sets >= 2 && k >= 2 {
        for a in 0..=k - 2 {
            if 2 * k - a <= n {
                let mut next = 0;
                let both = block(&mut next, a);
                let (only_a, only_b) = (block(&mut next, k - a), block(&mut next, k - a));
                out.push(vec![sorted([&both, &only_a]), sorted([&both, &only_b])]);
            }
        }
    }
    if max_sets >= 3 && k >= 2 {
        let cap = k - 2;
        for r123 in 0..=cap {
            for r12 in 0..=cap - r123 {
                for r13 in 0..=r12.min(cap - r123) {
                    for r23 in 0..=r13 {
                        let singles = [r12 + r13, r12 + r23, r13 + r23].map(|s| k.checked_sub(s + r123));
                        let [Some(r1), Some(r2), Some(r3)] = singles else { continue };
                        if r1 + r2 + r3 + r12 + r13 + r23 + r123 > n {
                            continue;
                        }
                        let mut next = 0;
                        let c = block(&mut next, r123);
                        let (p12, p13, p23) = (block(&mut next, r12), block(&mut next, r13), block(&mut next, r23));
                        let (s1, s2, s3) = (block(&mut next, r1), block(&mut next, r2), block(&mut next, r3));
                        out.push(vec![
                            sorted([&c, &p12, &p13, &s1]),
                            sorted([&c, &p12, &p23, &s2]),
                            sorted([&c, &p13, &p23, &s3]),
                        ]);
                    }
                }
            }
        }
    }
    out
}

fn sorted<const N: usize>(parts: [&Vec<usize>; N]) -> Vec<usize> {
    let mut v: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    v.sort_unstable();
    v
}

/// Greedy random packing: shuffle the `k`-subsets, keep each one meeting
/// every kept set in at most `k - 2` elements, then keep a random-length
/// prefix of the packing.
pub fn random_sparse_paving(rng: &mut impl Rng, n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut candidates = subsets_of_size(n, k);
    candidates.shuffle(rng);
    let mut kept: Vec<Subset> = Vec::new();
    for c in candidates {
        if kept.iter().all(|&h| size(h & c) + 2 <= k) {
            kept.push(c);
        }
    }
    let len = rng.gen_range(0..=kept.len());
    kept.truncate(len);
    kept.into_iter().map(to_vec).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExploreConfig {
    pub seed: u64,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
}

impl Default for ExploreConfig {
    fn default() -> Self {
        ExploreConfig {
            seed: 1,
            count: 200,
            n_min: 4,
            n_max: 9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub index: usize,
    pub matroid: MatroidSpec,
    pub y: IntPolynomial,
}

/// An instance whose `Y` fails one of the tested properties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub property: String,
    pub instance: Instance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exploration {
    pub seed: u64,
    pub count: usize,
    pub instances: Vec<Instance>,
    pub findings: Vec<Finding>,
}

/// Instance `i` draws from its own ChaCha stream, so results do not depend
/// on how the work is scheduled.
pub fn generate_instance(seed: u64, index: usize, n_min: usize, n_max: usize) -> MatroidSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(n_min.max(3)..=n_max);
    let k = rng.gen_range(2..n);
    MatroidSpec::SparsePaving {
        n,
        k,
        circuit_hyperplanes: random_sparse_paving(&mut rng, n, k),
    }
}

/// Tests palindromicity, unimodality and strong log-concavity of the
/// lattice `Y` over random sparse paving matroids.
pub fn explore(cfg: &ExploreConfig) -> Exploration {
    let instances: Vec<Instance> = (0..cfg.count)
        .into_par_iter()
        .map(|index| {
            let spec = generate_instance(cfg.seed, index, cfg.n_min, cfg.n_max);
            let m: Matroid = spec.build().expect("generated family is sparse paving");
            let y = inv_z_y(&m).expect("lattice recursion is consistent");
            Instance { index, matroid: spec, y }
        })
        .collect();
    let mut findings = Vec::new();
    for inst in &instances {
        let MatroidSpec::SparsePaving { k, .. } = inst.matroid else { unreachable!() };
        let checks = [
            ("palindromic", inst.y.is_palindromic(k)),
            ("unimodal", inst.y.is_unimodal()),
            ("strongly_log_concave", inst.y.is_strongly_log_concave()),
        ];
        for (property, ok) in checks {
            if !ok {
                findings.push(Finding {
                    property: property.to_string(),
                    instance: inst.clone(),
                });
            }
        }
    }
    Exploration {
        seed: cfg.seed,
        count: cfg.count,
        instances,
        findings,
    }
}
