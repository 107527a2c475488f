//! Golden oracle outputs. [`freeze`] runs the lattice engine over a fixed
//! family of matroids; tests compare closed forms against the frozen file
//! instead of hand-typed numbers.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::explore::small_sparse_paving_families;
use crate::kls::{invariants, KlsError, KlsInvariants};
use crate::matroid::{Matroid, MatroidSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixtureKind {
    Uniform,
    Qniform,
    StressedPair,
    RelaxedStressedPair,
    SparsePaving,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub kind: FixtureKind,
    pub params: BTreeMap<String, u64>,
    pub matroid: MatroidSpec,
    pub invariants: KlsInvariants,
}

fn entry(kind: FixtureKind, params: &[(&str, u64)], m: &Matroid) -> Result<FixtureEntry, KlsError> {
    Ok(FixtureEntry {
        kind,
        params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        matroid: m.to_spec(),
        invariants: invariants(m)?,
    })
}

/// Uniform matroids with `n <= 9`, q-niform matroids with `n <= 4` at
/// `q = 2`, stressed pairs `U_{k-1,h} (+) B_1` and their relaxations with
/// `h <= 7`, and sparse paving matroids with at most three
/// circuit-hyperplanes on at most 7 elements.
pub fn freeze() -> Result<Vec<FixtureEntry>, KlsError> {
    type Job = (FixtureKind, Vec<(&'static str, u64)>, Matroid);
    let mut jobs: Vec<Job> = Vec::new();
    for n in 1..=9usize {
        for k in 1..=n {
            let m = Matroid::uniform(k, n).expect("valid");
            jobs.push((FixtureKind::Uniform, vec![("k", k as u64), ("n", n as u64)], m));
        }
    }
    for n in 1..=4usize {
        for k in 1..=n {
            let m = Matroid::qniform(k, n, 2).expect("valid");
            jobs.push((FixtureKind::Qniform, vec![("k", k as u64), ("n", n as u64), ("q", 2)], m));
        }
    }
    for h in 1..=7usize {
        for k in 1..=h {
            let m = Matroid::stressed_pair(k, h).expect("valid");
            let relaxed = m.relax((1 << h) - 1).expect("stressed");
            let p = vec![("k", k as u64), ("h", h as u64)];
            jobs.push((FixtureKind::StressedPair, p.clone(), m));
            jobs.push((FixtureKind::RelaxedStressedPair, p, relaxed));
        }
    }
    for n in 2..=7usize {
        for k in 1..n {
            for f in small_sparse_paving_families(n, k, 3).into_iter().skip(1) {
                let c = f.len() as u64;
                let m = Matroid::sparse_paving(n, k, &f).expect("valid");
                jobs.push((
                    FixtureKind::SparsePaving,
                    vec![("k", k as u64), ("n", n as u64), ("circuit_hyperplanes", c)],
                    m,
                ));
            }
        }
    }
    jobs.par_iter().map(|(kind, p, m)| entry(kind.clone(), p, m)).collect()
}
