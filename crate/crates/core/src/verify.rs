//! Parameter sweeps behind each theorem id. Every sweep runs its cases in
//! parallel and collects them in generation order, so reports do not depend
//! on the number of worker threads.

use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::explore::{explore, small_sparse_paving_families, ExploreConfig};
use crate::formulas::*;
use crate::kls::inv_z_y;
use crate::matroid::{char_poly, Matroid};
use crate::partition::Partition;
use crate::poly::IntPolynomial;
use crate::qanalog::QContext;
use crate::report::{TheoremReport, Witness};
use crate::repring::{Flavor, GradedRep};
use crate::symfunc::SchurVector;

pub const THEOREM_IDS: [&str; 16] = [
    "thm1.1",
    "prop3.2",
    "thm1.3",
    "thm1.4",
    "thm1.5",
    "thm1.6",
    "thm1.7",
    "prop2.1",
    "prop2.2",
    "lem3.4",
    "lem3.5",
    "thm3.8",
    "prop-qY",
    "cor3.11",
    "conj1.2-dim",
    "conj1.4-induced",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem id {0:?}; known ids: {ids}", ids = THEOREM_IDS.join(", "))]
    UnknownTheorem(String),
    #[error("bad range {0:?}: {1}")]
    BadRange(String, &'static str),
}

/// Inclusive bound on one parameter; a missing end keeps the default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bound {
    pub lo: Option<u32>,
    pub hi: Option<u32>,
}

/// Overrides for the default ranges of `k`, `n`, `h` and `q`, written as
/// `k=2..4,n=..9,h=5,q=2..3`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Ranges {
    pub k: Bound,
    pub n: Bound,
    pub h: Bound,
    pub q: Bound,
}

impl FromStr for Ranges {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        let bad = |why| VerifyError::BadRange(s.to_string(), why);
        let mut r = Ranges::default();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (name, spec) = item.split_once('=').ok_or(bad("expected name=range"))?;
            let num = |x: &str| -> Result<Option<u32>, VerifyError> {
                let x = x.trim();
                if x.is_empty() {
                    Ok(None)
                } else {
                    x.parse().map(Some).map_err(|_| bad("bounds must be non-negative integers"))
                }
            };
            let bound = match spec.split_once("..") {
                Some((lo, hi)) => Bound {
                    lo: num(lo)?,
                    hi: num(hi.strip_prefix('=').unwrap_or(hi))?,
                },
                None => {
                    let v = num(spec)?;
                    Bound { lo: v, hi: v }
                }
            };
            if let (Some(lo), Some(hi)) = (bound.lo, bound.hi) {
                if lo > hi {
                    return Err(bad("empty range"));
                }
            }
            match name.trim() {
                "k" => r.k = bound,
                "n" => r.n = bound,
                "h" => r.h = bound,
                "q" => r.q = bound,
                _ => return Err(bad("parameters are k, n, h and q")),
            }
        }
        Ok(r)
    }
}

impl Ranges {
    fn bound(&self, name: char) -> Bound {
        match name {
            'k' => self.k,
            'n' => self.n,
            'h' => self.h,
            _ => self.q,
        }
    }

    fn span(&self, name: char, lo: u32, hi: u32) -> (u32, u32) {
        let b = self.bound(name);
        (b.lo.unwrap_or(lo), b.hi.unwrap_or(hi))
    }

    /// Largest explicitly requested ground-set parameter, for size caps.
    pub fn largest_size(&self) -> Option<u32> {
        [self.n.hi, self.h.hi, self.n.lo, self.h.lo].into_iter().flatten().max()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub ranges: Ranges,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            ranges: Ranges::default(),
            seed: 1,
            samples: 200,
        }
    }
}

pub fn verify(id: &str, cfg: &VerifyConfig) -> Result<TheoremReport, VerifyError> {
    let r = &cfg.ranges;
    Ok(match id {
        "thm1.1" => triple_agreement(r),
        "prop3.2" => irreducible_expansion(r),
        "thm1.3" => unimodality(r),
        "thm1.4" => induced_logconcavity(r),
        "thm1.5" => relaxation(r),
        "thm1.6" => paving_formula(r),
        "thm1.7" => dominance(r),
        "prop2.1" => honesty(r),
        "prop2.2" => palindromicity(r),
        "lem3.4" => hook_products(),
        "lem3.5" => column_hook_products(r),
        "thm3.8" => qniform_multiplicities(r),
        "prop-qY" => qniform_lattice(r),
        "cor3.11" => qniform_logconcavity(r),
        "conj1.2-dim" => conjecture_dimension(cfg),
        "conj1.4-induced" => conjecture_induced(r),
        _ => return Err(VerifyError::UnknownTheorem(id.to_string())),
    })
}

pub fn verify_all(cfg: &VerifyConfig) -> Vec<TheoremReport> {
    THEOREM_IDS
        .iter()
        .map(|id| verify(id, cfg).expect("known id"))
        .collect()
}

fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<Witness> + Sync + Send) -> Vec<Option<Witness>> {
    items.par_iter().map(f).collect()
}

/// `(k, n)` with `1 <= k <= n` inside both spans.
fn kn_pairs((klo, khi): (u32, u32), (nlo, nhi): (u32, u32)) -> Vec<(u32, u32)> {
    (nlo..=nhi)
        .flat_map(|n| (klo.max(1)..=khi.min(n)).map(move |k| (k, n)))
        .collect()
}

fn kn(r: &Ranges, n_hi: u32) -> (Vec<(u32, u32)>, String) {
    let n = r.span('n', 1, n_hi);
    let k = r.span('k', 1, n.1);
    (kn_pairs(k, n), format!("{}<=k<=n, k<={}, {}<=n<={}", k.0.max(1), k.1, n.0, n.1))
}

fn kh(r: &Ranges, k_lo: u32, h_hi: u32) -> (Vec<(u32, u32)>, String) {
    let h = r.span('h', 1, h_hi);
    let k = r.span('k', k_lo, h.1);
    let pairs = kn_pairs((k.0.max(k_lo), k.1), h);
    (pairs, format!("{}<=k<=h, k<={}, {}<=h<={}", k.0.max(k_lo), k.1, h.0, h.1))
}

fn params(k: u32, n: u32) -> [(&'static str, i64); 2] {
    [("k", k.into()), ("n", n.into())]
}

fn oracle_y(m: &Matroid) -> Result<IntPolynomial, String> {
    inv_z_y(m).map_err(|e| e.to_string())
}

fn uniform_y(k: u32, n: u32) -> GradedRep {
    equiv_y_uniform(k, n).expect("1 <= k <= n")
}

fn compare<T: serde::Serialize + PartialEq>(p: &[(&str, i64)], lhs: &T, rhs: &T) -> Option<Witness> {
    (lhs != rhs).then(|| Witness::new(p, lhs, rhs))
}

fn triple_agreement(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kn(r, 9);
    let cases = sweep(&pairs, |&(k, n)| {
        let a = uniform_y(k, n);
        let b = equiv_y_uniform_irreducible(k, n).expect("valid");
        let c = equiv_y_uniform_via_definition(k, n).expect("valid");
        if a != b || a != c {
            return Some(Witness::new(&params(k, n), &a, &[b, c]).with_note("product form vs [irreducible, flat sum]"));
        }
        let m = Matroid::uniform(k as usize, n as usize).expect("valid");
        let dim = a.dimension_poly().expect("symmetric group");
        match oracle_y(&m) {
            Ok(y) => compare(&params(k, n), &dim, &y).map(|w| w.with_note("dimension vs lattice")),
            Err(e) => Some(Witness::new(&params(k, n), &dim, &e)),
        }
    });
    TheoremReport::from_cases("thm1.1", ranges, cases)
}

fn irreducible_expansion(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kn(r, 9);
    let cases = sweep(&pairs, |&(k, n)| {
        let y = uniform_y(k, n);
        let irr = equiv_y_uniform_irreducible(k, n).expect("valid");
        if y != irr {
            return Some(Witness::new(&params(k, n), &y, &irr));
        }
        let (ki, ni) = (k as i64, n as i64);
        (1..=k / 2).find_map(|i| {
            let diff = &y.coeff(i as usize) - &y.coeff(i as usize - 1);
            let i = i as i64;
            let want = &shape(ni - ki + 1, i, ki - 2 * i - 1) + &shape(ni - ki + 2, i - 1, ki - 2 * i);
            compare(&[("k", ki), ("n", ni), ("i", i)], &diff, &want).map(|w| w.with_note("consecutive difference"))
        })
    });
    TheoremReport::from_cases("prop3.2", ranges, cases)
}

fn unimodality(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kn(r, 12);
    let mut cases = sweep(&pairs, |&(k, n)| {
        let y = uniform_y(k, n);
        (!y.is_equivariantly_unimodal()).then(|| Witness::new(&params(k, n), &y, &"equivariantly unimodal"))
    });
    // negative control: P of U_{4,5}
    let control = GradedRep::new(
        5,
        Flavor::SymmetricGroup,
        vec![
            SchurVector::schur(Partition::row(5)),
            SchurVector::schur(Partition::new([3, 2]).expect("partition")),
        ],
    )
    .expect("homogeneous");
    cases.push(
        control
            .is_equivariantly_unimodal()
            .then(|| Witness::new(&[], &control, &"not equivariantly unimodal").with_note("negative control")),
    );
    TheoremReport::from_cases("thm1.3", ranges + ", plus control [s_(5), s_(3,2)]", cases)
}

fn induced_logconcavity(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kn(r, 7);
    let cases = sweep(&pairs, |&(k, n)| {
        let y = uniform_y(k, n);
        y.logconcavity_witness().map(|(i, j)| {
            Witness::new(
                &[("k", k.into()), ("n", n.into()), ("i", i as i64), ("j", j as i64)],
                &y.coeff(i).lr_product(&y.coeff(j)),
                &y.coeff(i - 1).lr_product(&y.coeff(j + 1)),
            )
        })
    });
    TheoremReport::from_cases("thm1.4", ranges, cases)
}

/// `Y` after relaxing the size-`h` stressed hyperplane of `U_{k-1,h} (+) B_1`,
/// minus `Y` before, against the dimension of the predicted change.
fn lattice_relaxation_case(k: u32, h: u32) -> Option<Witness> {
    let p = [("k", k.into()), ("h", h.into())];
    let m = Matroid::stressed_pair(k as usize, h as usize).expect("valid");
    let hyperplane = (1u64 << h) - 1;
    let relaxed = match m.relax(hyperplane) {
        Ok(x) => x,
        Err(e) => return Some(Witness::new(&p, &e.to_string(), &"relaxable")),
    };
    let diff = match (oracle_y(&relaxed), oracle_y(&m)) {
        (Ok(a), Ok(b)) => &a - &b,
        (Err(e), _) | (_, Err(e)) => return Some(Witness::new(&p, &e, &"lattice Y")),
    };
    let want = paving_delta(k, h).expect("valid").dimension_poly().expect("symmetric group");
    compare(&p, &diff, &want).map(|w| w.with_note("lattice difference vs dimension of delta"))
}

fn relaxation(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kh(r, 2, 8);
    let identity: Vec<TheoremReport> = pairs
        .par_iter()
        .map(|&(k, h)| relaxation_identity_check(k, h).expect("k >= 2"))
        .collect();
    let (lattice_pairs, lattice_ranges) = kh(r, 1, 7);
    let lattice = TheoremReport::from_cases(
        "thm1.5",
        "",
        sweep(&lattice_pairs, |&(k, h)| lattice_relaxation_case(k, h)),
    );
    let mut parts = identity;
    parts.push(lattice);
    TheoremReport::merge(
        "thm1.5",
        format!("identity: {ranges}; lattice: {lattice_ranges}"),
        parts,
    )
}

/// Compares the profile formula, and for sparse paving matroids of rank at
/// most 6 the Catalan specialization, with the lattice `Y`.
fn paving_oracle_case(p: &[(&str, i64)], m: &Matroid, circuit_hyperplanes: Option<usize>) -> Option<Witness> {
    let profile = match m.paving_profile() {
        Ok(x) => x,
        Err(e) => return Some(Witness::new(p, &e.to_string(), &"paving")),
    };
    let (k, n) = (profile.k as u32, profile.n as u32);
    let lambda = profile.lambda.iter().map(|(&h, &c)| (h as u32, c as u32)).collect();
    let formula = ordinary_paving_y(k, n, &lambda);
    let y = match oracle_y(m) {
        Ok(y) => y,
        Err(e) => return Some(Witness::new(p, &formula, &e)),
    };
    if let Some(w) = compare(p, &formula, &y) {
        return Some(w);
    }
    match circuit_hyperplanes {
        Some(c) if k <= 6 => compare(p, &sparse_paving_y(k, n, c as u32), &y).map(|w| w.with_note("Catalan specialization")),
        _ => None,
    }
}

/// Sparse paving families with at most three circuit-hyperplanes, as
/// `(k, n, family)` with `n` inside the range.
type Family = (u32, u32, Vec<Vec<usize>>);

fn sparse_families(r: &Ranges, n_hi: u32) -> (Vec<Family>, String) {
    let (pairs, ranges) = kn(r, n_hi);
    let fams = pairs
        .iter()
        .flat_map(|&(k, n)| {
            small_sparse_paving_families(n as usize, k as usize, 3)
                .into_iter()
                .map(move |f| (k, n, f))
        })
        .collect();
    (fams, ranges + ", up to 3 circuit-hyperplanes")
}

fn paving_formula(r: &Ranges) -> TheoremReport {
    let (fams, sparse_ranges) = sparse_families(r, 9);
    let sparse = sweep(&fams, |(k, n, f)| {
        let p = [("k", *k as i64), ("n", *n as i64), ("circuit_hyperplanes", f.len() as i64)];
        let m = Matroid::sparse_paving(*n as usize, *k as usize, f).expect("valid family");
        paving_oracle_case(&p, &m, Some(f.len())).map(|w| w.with_note(format!("{f:?}")))
    });
    let (pairs, pair_ranges) = kh(r, 1, 7);
    let stressed = sweep(&pairs, |&(k, h)| {
        let m = Matroid::stressed_pair(k as usize, h as usize).expect("valid");
        paving_oracle_case(&[("k", k.into()), ("h", h.into())], &m, None).map(|w| w.with_note("U_{k-1,h} + B_1"))
    });
    let (hk, hook_ranges) = kh(r, 2, 10);
    let hooks: Vec<TheoremReport> = hk
        .iter()
        .filter(|(k, _)| k % 2 == 0)
        .map(|&(k, h)| hook_dim_identity_check(k, h).expect("even k"))
        .collect();
    let mut parts = vec![
        TheoremReport::from_cases("thm1.6", "", sparse),
        TheoremReport::from_cases("thm1.6", "", stressed),
    ];
    parts.extend(hooks);
    TheoremReport::merge(
        "thm1.6",
        format!("sparse paving: {sparse_ranges}; stressed pair: {pair_ranges}; hook dimension: even k, {hook_ranges}"),
        parts,
    )
}

fn dominance(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kh(r, 1, 9);
    let parts = pairs
        .par_iter()
        .map(|&(k, h)| uniform_dominance_check(k, h).expect("valid"))
        .collect();
    TheoremReport::merge("thm1.7", ranges, parts)
}

/// Every matroid the suites build on at most `n_hi` elements: uniform
/// matroids, stressed pairs with their relaxations, and small sparse
/// paving families.
fn constructed_matroids(r: &Ranges, n_hi: u32) -> (Vec<(String, Matroid)>, String) {
    let (pairs, ranges) = kn(r, n_hi);
    let mut out = Vec::new();
    for &(k, n) in &pairs {
        out.push((format!("U_{{{k},{n}}}"), Matroid::uniform(k as usize, n as usize).expect("valid")));
        if n >= 2 {
            let h = n - 1;
            if k <= h {
                let m = Matroid::stressed_pair(k as usize, h as usize).expect("valid");
                let relaxed = m.relax((1u64 << h) - 1).expect("stressed");
                out.push((format!("U_{{{},{h}}}+B_1", k - 1), m));
                out.push((format!("relaxed U_{{{},{h}}}+B_1", k - 1), relaxed));
            }
        }
        for f in small_sparse_paving_families(n as usize, k as usize, 3).into_iter().skip(1) {
            let m = Matroid::sparse_paving(n as usize, k as usize, &f).expect("valid");
            out.push((format!("sparse paving n={n} k={k} {f:?}"), m));
        }
    }
    (out, ranges + ", uniform, stressed pairs and relaxations, sparse paving")
}

fn equivariant_family(r: &Ranges) -> (Vec<(u32, u32, bool)>, String) {
    let (pairs, ranges) = kn(r, 9);
    let mut items: Vec<(u32, u32, bool)> = pairs.iter().map(|&(k, n)| (k, n, false)).collect();
    let (deltas, delta_ranges) = kh(r, 1, 9);
    items.extend(deltas.iter().map(|&(k, h)| (k, h, true)));
    (items, format!("uniform: {ranges}; paving deltas: {delta_ranges}"))
}

fn equivariant_item(&(k, n, delta): &(u32, u32, bool)) -> GradedRep {
    if delta {
        paving_delta(k, n).expect("valid")
    } else {
        uniform_y(k, n)
    }
}

fn item_params(&(k, n, delta): &(u32, u32, bool)) -> [(&'static str, i64); 2] {
    [("k", k.into()), (if delta { "h" } else { "n" }, n.into())]
}

fn ordinary_check(id: &str, r: &Ranges, good: impl Fn(&IntPolynomial, usize) -> bool + Sync) -> TheoremReport {
    let (ms, ranges) = constructed_matroids(r, 9);
    let cases = sweep(&ms, |(name, m)| match oracle_y(m) {
        Ok(y) => (!good(&y, m.rank_of_matroid())).then(|| Witness::new(&[], &y, id).with_note(name.clone())),
        Err(e) => Some(Witness::new(&[], &e, id).with_note(name.clone())),
    });
    TheoremReport::from_cases(id, ranges, cases)
}

fn honesty(r: &Ranges) -> TheoremReport {
    let (items, ranges) = equivariant_family(r);
    let equi = sweep(&items, |it| {
        let y = equivariant_item(it);
        (!y.is_honest()).then(|| Witness::new(&item_params(it), &y, &"Schur-nonnegative"))
    });
    let ordinary = ordinary_check("prop2.1", r, |y, _| y.is_nonnegative());
    TheoremReport::merge(
        "prop2.1",
        format!("equivariant: {ranges}; ordinary: {}", ordinary.ranges),
        vec![TheoremReport::from_cases("prop2.1", "", equi), ordinary],
    )
}

fn palindromicity(r: &Ranges) -> TheoremReport {
    let (items, ranges) = equivariant_family(r);
    let equi = sweep(&items, |it| {
        let y = equivariant_item(it);
        (!y.is_palindromic(it.0 as usize)).then(|| Witness::new(&item_params(it), &y, &"palindromic of degree k"))
    });
    let ordinary = ordinary_check("prop2.2", r, |y, rank| y.is_palindromic(rank));
    TheoremReport::merge(
        "prop2.2",
        format!("equivariant: {ranges}; ordinary: {}", ordinary.ranges),
        vec![TheoremReport::from_cases("prop2.2", "", equi), ordinary],
    )
}

fn hook(m: u32, legs: u32) -> SchurVector {
    SchurVector::schur(Partition::hook(m, legs).expect("m >= 1"))
}

fn column(i: u32) -> SchurVector {
    SchurVector::schur(Partition::column(i))
}

fn geq_case(p: &[(&str, i64)], big: &SchurVector, small: &SchurVector) -> Option<Witness> {
    match big.schur_geq(small) {
        Ok(true) => None,
        Ok(false) => Some(Witness::new(p, big, small)),
        Err(e) => Some(Witness::new(p, &e.to_string(), small)),
    }
}

fn hook_products() -> TheoremReport {
    let mut grid = Vec::new();
    for j in 1..=5u32 {
        for m in 1..=j {
            for u in 0..=5u32 {
                for v in 0..=5u32 {
                    grid.push((m, j, u, v));
                }
            }
        }
    }
    let cases = sweep(&grid, |&(m, j, u, v)| {
        let p = [("m", m.into()), ("j", j.into()), ("u", u.into()), ("v", v.into())];
        let lhs = hook(m, u).lr_product(&hook(j, v));
        let rhs = if u < v {
            hook(m, v - 1).lr_product(&hook(j, u + 1))
        } else {
            hook(m, v).lr_product(&hook(j, u))
        };
        geq_case(&p, &rhs, &lhs)
    });
    TheoremReport::from_cases("lem3.4", "1<=m<=j<=5, 0<=u<=5, 0<=v<=5", cases)
}

fn column_hook_products(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kn(r, 9);
    let mut items = Vec::new();
    for &(k, n) in &pairs {
        for i in 1..=k / 2 {
            items.push((k, n, i, 0));
        }
        for i in 1..=(k / 2).saturating_sub(1) {
            for j in i..=k / 2 - 1 {
                items.push((k, n, i, j));
            }
        }
    }
    let cases = sweep(&items, |&(k, n, i, j)| {
        let head = n - k + 1;
        let c = |x: u32| column(x).lr_product(&hook(head, k - x - 1));
        if j == 0 {
            let p = [("k", k.into()), ("n", n.into()), ("i", i.into())];
            geq_case(&p, &c(i), &column(i - 1).lr_product(&hook(head, k - i)))
        } else {
            let p = [("k", k.into()), ("n", n.into()), ("i", i.into()), ("j", j.into())];
            geq_case(&p, &c(i).lr_product(&c(j)), &c(i - 1).lr_product(&c(j + 1)))
        }
    });
    TheoremReport::from_cases("lem3.5", ranges, cases)
}

fn q_values(r: &Ranges, lo: u32, hi: u32) -> Vec<u64> {
    let (lo, hi) = r.span('q', lo, hi);
    (lo.max(2)..=hi).map(u64::from).collect()
}

fn qniform_multiplicities(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kn(r, 8);
    let qs = q_values(r, 2, 3);
    let cases = sweep(&pairs, |&(k, n)| {
        let y = equiv_y_qniform(k, n).expect("valid");
        let irr = equiv_y_uniform_irreducible(k, n).expect("valid");
        if y.coeffs() != irr.coeffs() {
            return Some(Witness::new(&params(k, n), &y, &irr).with_note("unipotent vs symmetric-group multiplicities"));
        }
        qs.iter().find_map(|&q| {
            let ctx = QContext::new(q).expect("q >= 2");
            let lhs = y.qdimension_poly(&ctx).expect("unipotent");
            let rhs = ordinary_y_qniform(k, n, &ctx).expect("valid");
            compare(&[("k", k.into()), ("n", n.into()), ("q", q as i64)], &lhs, &rhs).map(|w| w.with_note("q-dimension"))
        })
    });
    TheoremReport::from_cases("thm3.8", format!("{ranges}, q in {qs:?}"), cases)
}

fn qniform_lattice(r: &Ranges) -> TheoremReport {
    let (lattice_pairs, lattice_ranges) = kn(r, 4);
    let qs = q_values(r, 2, 2);
    let items: Vec<(u32, u32, u64)> = lattice_pairs
        .iter()
        .flat_map(|&(k, n)| qs.iter().map(move |&q| (k, n, q)))
        .collect();
    let lattice = sweep(&items, |&(k, n, q)| {
        let p = [("k", k.into()), ("n", n.into()), ("q", q as i64)];
        let ctx = QContext::new(q).expect("q >= 2");
        let m = match Matroid::qniform(k as usize, n as usize, q) {
            Ok(m) => m,
            Err(e) => return Some(Witness::new(&p, &e.to_string(), &"q-niform")),
        };
        let formula = ordinary_y_qniform(k, n, &ctx).expect("valid");
        let chi = equiv_char_qniform(k, n).expect("valid").qdimension_poly(&ctx).expect("unipotent");
        match oracle_y(&m) {
            Ok(y) if y != formula => Some(Witness::new(&p, &formula, &y)),
            Err(e) => Some(Witness::new(&p, &formula, &e)),
            Ok(_) => compare(&p, &chi, &char_poly(&m)).map(|w| w.with_note("characteristic polynomial")),
        }
    });
    let (pairs, ranges) = kn(r, 7);
    let degenerate = sweep(&pairs, |&(k, n)| {
        let at_one = ordinary_y_qniform(k, n, &QContext::classical_limit()).expect("valid");
        let dim = uniform_y(k, n).dimension_poly().expect("symmetric group");
        compare(&params(k, n), &at_one, &dim).map(|w| w.with_note("q = 1"))
    });
    TheoremReport::merge(
        "prop-qY",
        format!("lattice: {lattice_ranges}, q in {qs:?}; q=1: {ranges}"),
        vec![
            TheoremReport::from_cases("prop-qY", "", lattice),
            TheoremReport::from_cases("prop-qY", "", degenerate),
        ],
    )
}

fn qniform_logconcavity(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kn(r, 6);
    let qs = q_values(r, 2, 3);
    let items: Vec<(u32, u32, u64)> = pairs
        .iter()
        .flat_map(|&(k, n)| qs.iter().map(move |&q| (k, n, q)))
        .collect();
    let cases = sweep(&items, |&(k, n, q)| {
        let y = ordinary_y_qniform(k, n, &QContext::new(q).expect("q >= 2")).expect("valid");
        (!y.is_strongly_log_concave())
            .then(|| Witness::new(&[("k", k.into()), ("n", n.into()), ("q", q as i64)], &y, &"strongly log-concave"))
    });
    TheoremReport::from_cases("cor3.11", format!("{ranges}, q in {qs:?}"), cases)
}

fn conjecture_dimension(cfg: &VerifyConfig) -> TheoremReport {
    let (n_min, n_max) = cfg.ranges.span('n', 4, 9);
    let run = explore(&ExploreConfig {
        seed: cfg.seed,
        count: cfg.samples,
        n_min: n_min as usize,
        n_max: n_max as usize,
    });
    let mut cases: Vec<Option<Witness>> = vec![None; run.instances.len()];
    for f in &run.findings {
        cases[f.instance.index] = Some(
            Witness::new(&[("index", f.instance.index as i64)], &f.instance.y, &f.property)
                .with_note(serde_json::to_string(&f.instance.matroid).unwrap_or_default()),
        );
    }
    TheoremReport::from_cases(
        "conj1.2-dim",
        format!("{} random sparse paving matroids, seed {}, {n_min}<=n<={n_max}", cfg.samples, cfg.seed),
        cases,
    )
    .with_note("conjecture-level: failures are findings")
}

fn conjecture_induced(r: &Ranges) -> TheoremReport {
    let (pairs, ranges) = kh(r, 2, 7);
    let cases = sweep(&pairs, |&(k, h)| {
        let y = equiv_y_stressed_pair(k, h).expect("valid");
        let p = [("k", k.into()), ("h", h.into())];
        if !y.is_equivariantly_unimodal() {
            return Some(Witness::new(&p, &y, &"equivariantly unimodal"));
        }
        y.logconcavity_witness()
            .map(|(i, j)| Witness::new(&p, &y, &"strongly induced log-concave").with_note(format!("fails at i={i}, j={j}")))
    });
    TheoremReport::from_cases("conj1.4-induced", ranges + ", Y of U_{k-1,h} + B_1", cases)
        .with_note("conjecture-level: failures are findings")
}
