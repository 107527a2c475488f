//! Matroids given by rank oracles, their lattices of flats, and the
//! constructors used throughout: uniform, linear over a prime field,
//! q-niform, paving, direct sums, minors and relaxations.
//!
//! Subsets of the ground set are `u64` bitsets, so ground sets have at most
//! 64 elements. Everything practical here stays far below that.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::IntPolynomial;

/// Bitset over the ground set.
pub type Subset = u64;

pub const MAX_GROUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground set of {0} elements exceeds the limit of {MAX_GROUND}")]
    TooLarge(usize),
    #[error("element {elem} out of range for a ground set of size {n}")]
    ElementOutOfRange { elem: usize, n: usize },
    #[error("rank {k} is larger than the ground set size {n}")]
    RankTooLarge { k: usize, n: usize },
    #[error("basis {0:?} does not have the common size")]
    BasisSize(Vec<usize>),
    #[error("basis family is empty")]
    NoBases,
    #[error("basis exchange fails for {b1:?} and {b2:?}")]
    Exchange { b1: Vec<usize>, b2: Vec<usize> },
    #[error("hyperplanes {a:?} and {b:?} meet in more than k - 2 elements")]
    HyperplaneOverlap { a: Vec<usize>, b: Vec<usize> },
    #[error("hyperplane {0:?} has fewer than k elements")]
    HyperplaneTooSmall(Vec<usize>),
    #[error("circuit-hyperplane {0:?} does not have exactly k elements")]
    CircuitHyperplaneSize(Vec<usize>),
    #[error("{0:?} is not a stressed hyperplane with at least k elements")]
    NotStressed(Vec<usize>),
    #[error("not paving: {0:?} is a circuit with fewer than k elements")]
    NotPaving(Vec<usize>),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("column {0} is zero")]
    ZeroColumn(usize),
    #[error("matrix rows have different lengths")]
    RaggedMatrix,
    #[error("{0:?} is not a flat")]
    NotAFlat(Vec<usize>),
    #[error("inconsistent specification: {0}")]
    Inconsistent(String),
}

pub fn elems(s: Subset) -> impl Iterator<Item = usize> {
    let mut rest = s;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub fn to_vec(s: Subset) -> Vec<usize> {
    elems(s).collect()
}

pub fn from_elems(items: &[usize], n: usize) -> Result<Subset, MatroidError> {
    let mut s = 0;
    for &e in items {
        if e >= n {
            return Err(MatroidError::ElementOutOfRange { elem: e, n });
        }
        s |= 1 << e;
    }
    Ok(s)
}

pub fn full_set(n: usize) -> Subset {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn size(s: Subset) -> usize {
    s.count_ones() as usize
}

/// All `k`-subsets of an `n`-set, in increasing bitset order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Subset> {
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut s: u64 = (1u64 << k) - 1;
    let limit = full_set(n);
    loop {
        out.push(s);
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > limit {
            break;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s > limit {
            break;
        }
    }
    out
}

#[derive(Debug, Clone)]
enum Backend {
    Uniform,
    Bases(Arc<HashSet<Subset>>),
    Linear {
        p: u64,
        columns: Arc<Vec<Vec<u64>>>,
        truncation: usize,
    },
    /// Paving matroid from its hyperplanes of size at least `k`.
    Paving(Arc<Vec<Subset>>),
    DirectSum(Arc<Matroid>, Arc<Matroid>),
    Minor {
        base: Arc<Matroid>,
        keep: Vec<usize>,
        contracted: Subset,
        contracted_rank: usize,
    },
    Relaxed {
        base: Arc<Matroid>,
        hyperplane: Subset,
    },
}

/// A matroid on `{0, .., n-1}` with rank `k`.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    k: usize,
    backend: Backend,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.backend {
            Backend::Uniform => "uniform",
            Backend::Bases(_) => "bases",
            Backend::Linear { .. } => "linear",
            Backend::Paving(_) => "paving",
            Backend::DirectSum(..) => "direct_sum",
            Backend::Minor { .. } => "minor",
            Backend::Relaxed { .. } => "relaxed",
        };
        write!(f, "Matroid({kind}, n={}, k={})", self.n, self.k)
    }
}

fn check_n(n: usize) -> Result<(), MatroidError> {
    if n > MAX_GROUND {
        Err(MatroidError::TooLarge(n))
    } else {
        Ok(())
    }
}

impl Matroid {
    pub fn uniform(k: usize, n: usize) -> Result<Matroid, MatroidError> {
        check_n(n)?;
        if k > n {
            return Err(MatroidError::RankTooLarge { k, n });
        }
        Ok(Matroid {
            n,
            k,
            backend: Backend::Uniform,
        })
    }

    pub fn boolean(n: usize) -> Result<Matroid, MatroidError> {
        Self::uniform(n, n)
    }

    /// Matroid from an explicit basis list. The exchange axiom is checked
    /// exhaustively when `n <= 12`.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Matroid, MatroidError> {
        check_n(n)?;
        let first = bases.first().ok_or(MatroidError::NoBases)?;
        let k = first.len();
        let mut set = HashSet::new();
        for b in bases {
            let s = from_elems(b, n)?;
            if size(s) != k || b.len() != k {
                return Err(MatroidError::BasisSize(b.clone()));
            }
            set.insert(s);
        }
        if n <= 12 {
            check_exchange(&set)?;
        }
        Ok(Matroid {
            n,
            k,
            backend: Backend::Bases(Arc::new(set)),
        })
    }

    /// Column matroid of a matrix over `F_p`, truncated to rank
    /// `truncation`. Zero columns are rejected and parallel columns are
    /// merged, keeping the first occurrence.
    pub fn linear(p: u64, columns: Vec<Vec<i64>>, truncation: usize) -> Result<Matroid, MatroidError> {
        if !is_prime(p) {
            return Err(MatroidError::NotPrime(p));
        }
        let dim = columns.first().map_or(0, Vec::len);
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for (i, c) in columns.into_iter().enumerate() {
            if c.len() != dim {
                return Err(MatroidError::RaggedMatrix);
            }
            let reduced: Vec<u64> = c.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
            let Some(lead) = reduced.iter().copied().find(|&x| x != 0) else {
                return Err(MatroidError::ZeroColumn(i));
            };
            let inv = mod_inverse(lead, p);
            let normal: Vec<u64> = reduced.iter().map(|&x| x * inv % p).collect();
            if seen.insert(normal.clone()) {
                kept.push(normal);
            }
        }
        let n = kept.len();
        check_n(n)?;
        let full = linear_rank(p, kept.iter().collect());
        Ok(Matroid {
            n,
            k: full.min(truncation),
            backend: Backend::Linear {
                p,
                columns: Arc::new(kept),
                truncation,
            },
        })
    }

    /// Rank-`k` truncation of the projective geometry of `F_q^n`, one
    /// element per projective point (first nonzero coordinate equal to 1).
    pub fn qniform(k: usize, n: usize, q: u64) -> Result<Matroid, MatroidError> {
        if !is_prime(q) {
            return Err(MatroidError::NotPrime(q));
        }
        if k > n {
            return Err(MatroidError::RankTooLarge { k, n });
        }
        let count = (q.pow(n as u32) - 1) / (q - 1);
        check_n(count as usize)?;
        let mut cols = Vec::new();
        for lead in 0..n {
            let tail = n - lead - 1;
            for code in 0..q.pow(tail as u32) {
                let mut v = vec![0i64; n];
                v[lead] = 1;
                let mut c = code;
                for slot in v.iter_mut().skip(lead + 1).rev() {
                    *slot = (c % q) as i64;
                    c /= q;
                }
                cols.push(v);
            }
        }
        Self::linear(q, cols, k)
    }

    /// Paving matroid of rank `k` given its hyperplanes of size at least
    /// `k`; any two of them must meet in at most `k - 2` elements.
    pub fn paving(n: usize, k: usize, hyperplanes: &[Vec<usize>]) -> Result<Matroid, MatroidError> {
        check_n(n)?;
        if k > n {
            return Err(MatroidError::RankTooLarge { k, n });
        }
        let mut hs = Vec::new();
        for h in hyperplanes {
            let s = from_elems(h, n)?;
            if size(s) < k.max(1) || size(s) != h.len() {
                return Err(MatroidError::HyperplaneTooSmall(h.clone()));
            }
            hs.push(s);
        }
        check_overlaps(&hs, k)?;
        hs.sort_unstable();
        Ok(Matroid {
            n,
            k,
            backend: Backend::Paving(Arc::new(hs)),
        })
    }

    /// Sparse paving matroid whose circuit-hyperplanes are the given
    /// `k`-subsets.
    pub fn sparse_paving(n: usize, k: usize, circuit_hyperplanes: &[Vec<usize>]) -> Result<Matroid, MatroidError> {
        for c in circuit_hyperplanes {
            let distinct: BTreeSet<_> = c.iter().collect();
            if c.len() != k || distinct.len() != k {
                return Err(MatroidError::CircuitHyperplaneSize(c.clone()));
            }
        }
        Self::paving(n, k, circuit_hyperplanes)
    }

    /// `U_{k-1,h} (+) B_1`: rank `k` on `h + 1` elements, with the first `h`
    /// elements forming a stressed hyperplane.
    pub fn stressed_pair(k: usize, h: usize) -> Result<Matroid, MatroidError> {
        if k == 0 {
            return Err(MatroidError::Inconsistent("rank must be at least 1".into()));
        }
        Self::direct_sum(&Self::uniform(k - 1, h)?, &Self::boolean(1)?)
    }

    /// Direct sum; the elements of `b` follow those of `a`.
    pub fn direct_sum(a: &Matroid, b: &Matroid) -> Result<Matroid, MatroidError> {
        check_n(a.n + b.n)?;
        Ok(Matroid {
            n: a.n + b.n,
            k: a.k + b.k,
            backend: Backend::DirectSum(Arc::new(a.clone()), Arc::new(b.clone())),
        })
    }

    /// Restriction to `set`, with elements renumbered in increasing order.
    pub fn restrict(&self, set: Subset) -> Matroid {
        self.minor(set, 0)
    }

    /// Contraction of `set`, keeping the complement in increasing order.
    pub fn contract(&self, set: Subset) -> Matroid {
        self.minor(full_set(self.n) & !set, set)
    }

    fn minor(&self, keep: Subset, contracted: Subset) -> Matroid {
        let contracted_rank = self.rank(contracted);
        let keep_list = to_vec(keep);
        let k = self.rank(keep | contracted) - contracted_rank;
        Matroid {
            n: keep_list.len(),
            k,
            backend: Backend::Minor {
                base: Arc::new(self.clone()),
                keep: keep_list,
                contracted,
                contracted_rank,
            },
        }
    }

    /// Relaxes a stressed hyperplane of size at least `k`: its `k`-subsets
    /// become bases.
    pub fn relax(&self, hyperplane: Subset) -> Result<Matroid, MatroidError> {
        if size(hyperplane) < self.k || !self.is_stressed_hyperplane(hyperplane) {
            return Err(MatroidError::NotStressed(to_vec(hyperplane)));
        }
        Ok(Matroid {
            n: self.n,
            k: self.k,
            backend: Backend::Relaxed {
                base: Arc::new(self.clone()),
                hyperplane,
            },
        })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank_of_matroid(&self) -> usize {
        self.k
    }

    pub fn ground(&self) -> Subset {
        full_set(self.n)
    }

    /// Rank of a subset of the ground set.
    pub fn rank(&self, a: Subset) -> usize {
        debug_assert!(a & !self.ground() == 0, "subset outside the ground set");
        match &self.backend {
            Backend::Uniform => size(a).min(self.k),
            Backend::Bases(bases) => bases.iter().map(|&b| size(a & b)).max().unwrap_or(0),
            Backend::Linear {
                p,
                columns,
                truncation,
            } => {
                let vs = elems(a).map(|i| &columns[i]).collect();
                linear_rank(*p, vs).min(*truncation)
            }
            Backend::Paving(hs) => {
                let s = size(a);
                if s < self.k {
                    s
                } else if hs.iter().any(|&h| a & !h == 0) {
                    self.k - 1
                } else {
                    self.k
                }
            }
            Backend::DirectSum(x, y) => {
                let lo = a & full_set(x.n);
                x.rank(lo) + y.rank(a >> x.n)
            }
            Backend::Minor {
                base,
                keep,
                contracted,
                contracted_rank,
            } => {
                let lifted = elems(a).fold(0u64, |acc, i| acc | 1 << keep[i]);
                base.rank(lifted | contracted) - contracted_rank
            }
            Backend::Relaxed { base, hyperplane } => {
                if a & !hyperplane == 0 && size(a) >= self.k {
                    self.k
                } else {
                    base.rank(a)
                }
            }
        }
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank(a) == size(a)
    }

    pub fn closure(&self, a: Subset) -> Subset {
        let r = self.rank(a);
        let mut out = a;
        for e in elems(self.ground() & !a) {
            if self.rank(a | 1 << e) == r {
                out |= 1 << e;
            }
        }
        out
    }

    pub fn is_flat(&self, a: Subset) -> bool {
        self.closure(a) == a
    }

    pub fn loops(&self) -> Subset {
        self.closure(0)
    }

    pub fn has_loops(&self) -> bool {
        self.loops() != 0
    }

    pub fn bases(&self) -> Vec<Subset> {
        subsets_of_size(self.n, self.k)
            .into_iter()
            .filter(|&b| self.rank(b) == self.k)
            .collect()
    }

    /// Lattice of flats, enumerated bottom-up from the closure of the empty
    /// set by closing `F + e` for every flat `F` and element `e` outside it.
    pub fn flats(&self) -> FlatLattice {
        let mut levels: Vec<BTreeSet<Subset>> = vec![BTreeSet::from([self.loops()])];
        for r in 0..self.k {
            let mut next = BTreeSet::new();
            for &f in &levels[r] {
                let mut covered = f;
                for e in elems(self.ground() & !f) {
                    if covered & (1 << e) != 0 {
                        continue;
                    }
                    let g = self.closure(f | 1 << e);
                    covered |= g;
                    next.insert(g);
                }
            }
            levels.push(next);
        }
        let mut flats = Vec::new();
        let mut ranks = Vec::new();
        for (r, level) in levels.into_iter().enumerate() {
            for f in level {
                flats.push(f);
                ranks.push(r);
            }
        }
        FlatLattice::new(self.n, flats, ranks)
    }

    /// A rank-`(k-1)` flat all of whose `(k-1)`-subsets are independent.
    pub fn is_stressed_hyperplane(&self, h: Subset) -> bool {
        if self.k == 0 || self.rank(h) != self.k - 1 || !self.is_flat(h) {
            return false;
        }
        subsets_within(h, self.k - 1)
            .into_iter()
            .all(|s| self.is_independent(s))
    }

    /// All stressed hyperplanes, including those of size `k - 1`.
    pub fn stressed_hyperplanes(&self) -> Vec<Subset> {
        if self.k == 0 {
            return Vec::new();
        }
        let lat = self.flats();
        lat.indices_of_rank(self.k - 1)
            .map(|i| lat.flat(i))
            .filter(|&h| self.is_stressed_hyperplane(h))
            .collect()
    }

    /// Checks that every circuit has at least `k` elements, returning a
    /// smaller circuit as a witness otherwise.
    pub fn check_paving(&self) -> Result<(), MatroidError> {
        if self.k == 0 {
            return Ok(());
        }
        for s in subsets_of_size(self.n, self.k - 1) {
            if !self.is_independent(s) {
                return Err(MatroidError::NotPaving(to_vec(self.shrink_to_circuit(s))));
            }
        }
        Ok(())
    }

    fn shrink_to_circuit(&self, dependent: Subset) -> Subset {
        let mut c = dependent;
        for e in elems(dependent) {
            let smaller = c & !(1 << e);
            if !self.is_independent(smaller) {
                c = smaller;
            }
        }
        c
    }

    pub fn paving_profile(&self) -> Result<PavingProfile, MatroidError> {
        self.check_paving()?;
        let mut lambda = std::collections::BTreeMap::new();
        for h in self.stressed_hyperplanes() {
            if size(h) >= self.k {
                *lambda.entry(size(h)).or_insert(0usize) += 1;
            }
        }
        Ok(PavingProfile {
            k: self.k,
            n: self.n,
            lambda,
        })
    }

    /// A serializable description. Backends without a direct description
    /// (minors, relaxations) are written as explicit basis lists.
    pub fn to_spec(&self) -> MatroidSpec {
        match &self.backend {
            Backend::Uniform => MatroidSpec::Uniform { n: self.n, k: self.k },
            Backend::Paving(hs) => MatroidSpec::Paving {
                n: self.n,
                k: self.k,
                hyperplanes: hs.iter().map(|&h| to_vec(h)).collect(),
            },
            Backend::DirectSum(a, b) => MatroidSpec::DirectSum {
                n: self.n,
                k: self.k,
                summands: vec![a.to_spec(), b.to_spec()],
            },
            Backend::Linear {
                p,
                columns,
                truncation,
            } => {
                let dim = columns.first().map_or(0, Vec::len);
                let matrix = (0..dim)
                    .map(|r| columns.iter().map(|c| c[r] as i64).collect())
                    .collect();
                MatroidSpec::Linear {
                    n: self.n,
                    k: self.k,
                    p: *p,
                    truncation: *truncation,
                    matrix,
                }
            }
            _ => {
                let mut bases: Vec<Vec<usize>> = self.bases().into_iter().map(to_vec).collect();
                bases.sort();
                MatroidSpec::Bases {
                    n: self.n,
                    k: self.k,
                    bases,
                }
            }
        }
    }
}

fn subsets_within(set: Subset, k: usize) -> Vec<Subset> {
    let items = to_vec(set);
    subsets_of_size(items.len(), k)
        .into_iter()
        .map(|s| elems(s).fold(0u64, |acc, i| acc | 1 << items[i]))
        .collect()
}

fn check_overlaps(hs: &[Subset], k: usize) -> Result<(), MatroidError> {
    for (i, &a) in hs.iter().enumerate() {
        for &b in &hs[i + 1..] {
            if size(a & b) + 2 > k {
                return Err(MatroidError::HyperplaneOverlap {
                    a: to_vec(a),
                    b: to_vec(b),
                });
            }
        }
    }
    Ok(())
}

fn check_exchange(bases: &HashSet<Subset>) -> Result<(), MatroidError> {
    for &b1 in bases {
        for &b2 in bases {
            for x in elems(b1 & !b2) {
                let ok = elems(b2 & !b1).any(|y| bases.contains(&((b1 & !(1 << x)) | 1 << y)));
                if !ok {
                    return Err(MatroidError::Exchange {
                        b1: to_vec(b1),
                        b2: to_vec(b2),
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    mod_pow(x, p - 2, p)
}

fn linear_rank(p: u64, vectors: Vec<&Vec<u64>>) -> usize {
    let mut rows: Vec<Vec<u64>> = vectors.into_iter().cloned().collect();
    let dim = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..dim {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = mod_inverse(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Counts of stressed hyperplanes by size, for sizes at least `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PavingProfile {
    pub k: usize,
    pub n: usize,
    pub lambda: std::collections::BTreeMap<usize, usize>,
}

/// Flats sorted by rank, with containment and Möbius values.
///
/// Flat indices follow a linear extension of the order, so `i <= j` in the
/// lattice implies `i <= j` as indices.
pub struct FlatLattice {
    n: usize,
    flats: Vec<Subset>,
    ranks: Vec<usize>,
    index: HashMap<Subset, usize>,
    up: Vec<Vec<usize>>,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
    mobius_top: OnceLock<Vec<i64>>,
}

impl fmt::Debug for FlatLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlatLattice({} flats, rank {})", self.len(), self.rank_of_top())
    }
}

impl FlatLattice {
    fn new(n: usize, flats: Vec<Subset>, ranks: Vec<usize>) -> Self {
        let index = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let up = (0..flats.len())
            .map(|i| {
                (i..flats.len())
                    .filter(|&j| flats[i] & !flats[j] == 0)
                    .collect()
            })
            .collect();
        let mobius_rows = (0..flats.len()).map(|_| OnceLock::new()).collect();
        FlatLattice {
            n,
            flats,
            ranks,
            index,
            up,
            mobius_rows,
            mobius_top: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn flat(&self, i: usize) -> Subset {
        self.flats[i]
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn index_of(&self, f: Subset) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn rank_of_top(&self) -> usize {
        self.ranks[self.top()]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.flats[i] & !self.flats[j] == 0
    }

    /// Flats containing flat `i` (including itself), in index order.
    pub fn up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn indices_of_rank(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.ranks[i] == r)
    }

    /// `mu(i, j)` for every `j` in `up(i)`, aligned with that slice.
    pub fn mobius_row(&self, i: usize) -> &[i64] {
        self.mobius_rows[i].get_or_init(|| {
            let up = &self.up[i];
            let mut row = vec![0i64; up.len()];
            for (pj, &j) in up.iter().enumerate() {
                if pj == 0 {
                    row[0] = 1;
                    continue;
                }
                let mut s = 0i64;
                for (pz, &z) in up[..pj].iter().enumerate() {
                    if self.leq(z, j) {
                        s += row[pz];
                    }
                }
                row[pj] = -s;
            }
            row
        })
    }

    /// `mu(i, j)`, zero when `i` is not below `j`.
    pub fn mobius(&self, i: usize, j: usize) -> i64 {
        match self.up[i].binary_search(&j) {
            Ok(pos) => self.mobius_row(i)[pos],
            Err(_) => 0,
        }
    }

    /// `mu(F, E)` for every flat, by downward recursion from the top.
    pub fn mobius_top(&self) -> &[i64] {
        self.mobius_top.get_or_init(|| {
            let top = self.top();
            let mut out = vec![0i64; self.len()];
            for i in (0..self.len()).rev() {
                out[i] = if i == top {
                    1
                } else {
                    -self.up[i][1..].iter().map(|&g| out[g]).sum::<i64>()
                };
            }
            out
        })
    }

    /// `chi(t) = sum_F mu(bottom, F) t^{rk E - rk F}`.
    pub fn char_poly(&self) -> IntPolynomial {
        let r = self.rank_of_top();
        let row = self.mobius_row(0);
        let mut coeffs = vec![0i64; r + 1];
        for (pos, &j) in self.up[0].iter().enumerate() {
            coeffs[r - self.ranks[j]] += row[pos];
        }
        IntPolynomial::from_i64s(&coeffs)
    }
}

/// Characteristic polynomial, zero for matroids with loops.
pub fn char_poly(m: &Matroid) -> IntPolynomial {
    if m.has_loops() {
        return IntPolynomial::zero();
    }
    m.flats().char_poly()
}

/// Isomorphism by permutation search with rank-profile pruning. Intended for
/// tests on small ground sets.
pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    if a.n != b.n || a.k != b.k {
        return false;
    }
    let ba: HashSet<Subset> = a.bases().into_iter().collect();
    let bb: Vec<Subset> = b.bases();
    if ba.len() != bb.len() {
        return false;
    }
    let n = a.n;
    // elements must have matching degrees (number of bases containing them)
    let degree = |bs: &mut dyn Iterator<Item = Subset>| {
        let mut d = vec![0usize; n];
        for s in bs {
            for e in elems(s) {
                d[e] += 1;
            }
        }
        d
    };
    let da = degree(&mut ba.iter().copied());
    let db = degree(&mut bb.iter().copied());
    fn search(
        pos: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        da: &[usize],
        db: &[usize],
        ba: &HashSet<Subset>,
        bb: &[Subset],
    ) -> bool {
        if pos == perm.len() {
            return bb
                .iter()
                .all(|&s| ba.contains(&elems(s).fold(0u64, |acc, e| acc | 1 << perm[e])));
        }
        for t in 0..perm.len() {
            if !used[t] && da[t] == db[pos] {
                used[t] = true;
                perm[pos] = t;
                if search(pos + 1, perm, used, da, db, ba, bb) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }
    search(0, &mut vec![0; n], &mut vec![false; n], &da, &db, &ba, &bb)
}

/// JSON description of a matroid, tagged by `backend`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidSpec {
    Bases {
        n: usize,
        k: usize,
        bases: Vec<Vec<usize>>,
    },
    /// Row-major matrix over `F_p`; columns are the elements. `n` counts
    /// the columns left after merging parallel ones.
    Linear {
        n: usize,
        k: usize,
        p: u64,
        truncation: usize,
        matrix: Vec<Vec<i64>>,
    },
    Uniform {
        n: usize,
        k: usize,
    },
    Boolean {
        n: usize,
    },
    SparsePaving {
        n: usize,
        k: usize,
        circuit_hyperplanes: Vec<Vec<usize>>,
    },
    Paving {
        n: usize,
        k: usize,
        hyperplanes: Vec<Vec<usize>>,
    },
    DirectSum {
        n: usize,
        k: usize,
        summands: Vec<MatroidSpec>,
    },
    /// Here `n` is the dimension of the vector space, not the ground size.
    Qniform {
        n: usize,
        k: usize,
        q: u64,
    },
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid, MatroidError> {
        let m = match self {
            MatroidSpec::Bases { n, bases, .. } => Matroid::from_bases(*n, bases)?,
            MatroidSpec::Linear {
                p,
                truncation,
                matrix,
                ..
            } => {
                let cols = matrix.first().map_or(0, Vec::len);
                if matrix.iter().any(|r| r.len() != cols) {
                    return Err(MatroidError::RaggedMatrix);
                }
                let columns = (0..cols).map(|c| matrix.iter().map(|r| r[c]).collect()).collect();
                Matroid::linear(*p, columns, *truncation)?
            }
            MatroidSpec::Uniform { n, k } => Matroid::uniform(*k, *n)?,
            MatroidSpec::Boolean { n } => Matroid::boolean(*n)?,
            MatroidSpec::SparsePaving {
                n,
                k,
                circuit_hyperplanes,
            } => Matroid::sparse_paving(*n, *k, circuit_hyperplanes)?,
            MatroidSpec::Paving { n, k, hyperplanes } => Matroid::paving(*n, *k, hyperplanes)?,
            MatroidSpec::DirectSum { summands, .. } => {
                let mut parts = summands.iter().map(MatroidSpec::build);
                let first = parts
                    .next()
                    .ok_or_else(|| MatroidError::Inconsistent("direct sum needs a summand".into()))??;
                parts.try_fold(first, |acc, m| Matroid::direct_sum(&acc, &m?))?
            }
            MatroidSpec::Qniform { n, k, q } => return Matroid::qniform(*k, *n, *q),
        };
        let (n, k) = match self {
            MatroidSpec::Boolean { n } => (*n, *n),
            MatroidSpec::Bases { n, k, .. }
            | MatroidSpec::Linear { n, k, .. }
            | MatroidSpec::Uniform { n, k }
            | MatroidSpec::SparsePaving { n, k, .. }
            | MatroidSpec::Paving { n, k, .. }
            | MatroidSpec::DirectSum { n, k, .. }
            | MatroidSpec::Qniform { n, k, .. } => (*n, *k),
        };
        if m.n != n || m.k != k {
            return Err(MatroidError::Inconsistent(format!(
                "declared n={n}, k={k} but the data give n={}, k={}",
                m.n, m.k
            )));
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(items: &[usize]) -> Subset {
        items.iter().fold(0, |acc, &i| acc | 1 << i)
    }

    /// Rank as the largest intersection with a basis.
    fn oracle_rank(bases: &[Subset], a: Subset) -> usize {
        bases.iter().map(|&b| size(a & b)).max().unwrap_or(0)
    }

    fn zoo() -> Vec<Matroid> {
        vec![
            Matroid::uniform(2, 4).unwrap(),
            Matroid::uniform(3, 6).unwrap(),
            Matroid::boolean(3).unwrap(),
            Matroid::sparse_paving(6, 3, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap(),
            Matroid::stressed_pair(3, 4).unwrap(),
            Matroid::qniform(2, 3, 2).unwrap(),
            Matroid::qniform(3, 3, 2).unwrap(),
            Matroid::paving(7, 3, &[vec![0, 1, 2, 3], vec![3, 4, 5]]).unwrap(),
            Matroid::uniform(3, 6).unwrap().contract(set(&[0])),
            Matroid::stressed_pair(2, 3).unwrap().relax(set(&[0, 1, 2])).unwrap(),
            Matroid::direct_sum(&Matroid::uniform(1, 2).unwrap(), &Matroid::uniform(2, 3).unwrap()).unwrap(),
        ]
    }

    #[test]
    fn gosper_subsets() {
        assert_eq!(subsets_of_size(4, 2).len(), 6);
        assert_eq!(subsets_of_size(5, 0), vec![0]);
        assert_eq!(subsets_of_size(3, 4), Vec::<u64>::new());
        assert_eq!(subsets_of_size(9, 4).len(), 126);
        assert_eq!(subsets_of_size(64, 1).len(), 64);
    }

    #[test]
    fn ranks() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.rank(set(&[0])), 1);
        assert_eq!(u.rank(set(&[0, 1, 2])), 2);
        let sp = Matroid::sparse_paving(6, 3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(sp.rank(set(&[0, 1, 2])), 2);
        assert_eq!(sp.rank(set(&[0, 1, 3])), 3);
    }

    #[test]
    fn backends_agree_with_basis_oracle() {
        for m in zoo() {
            let bases = m.bases();
            let explicit = Matroid::from_bases(
                m.ground_size(),
                &bases.iter().map(|&b| to_vec(b)).collect::<Vec<_>>(),
            )
            .unwrap();
            for a in 0..(1u64 << m.ground_size()) {
                assert_eq!(m.rank(a), oracle_rank(&bases, a), "{m:?} {a:b}");
                assert_eq!(explicit.rank(a), m.rank(a));
            }
        }
    }

    #[test]
    fn rank_axioms_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in zoo() {
            let g = m.ground();
            for _ in 0..500 {
                let a = rng.gen::<u64>() & g;
                let b = rng.gen::<u64>() & g;
                assert!(m.rank(a) <= size(a));
                assert!(m.rank(a & b) <= m.rank(a));
                assert!(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
                if let Some(e) = elems(g & !a).next() {
                    let d = m.rank(a | 1 << e) - m.rank(a);
                    assert!(d <= 1);
                }
            }
        }
    }

    #[test]
    fn exchange_is_checked() {
        // {01},{23} alone violates exchange
        let err = Matroid::from_bases(4, &[vec![0, 1], vec![2, 3]]).unwrap_err();
        assert!(matches!(err, MatroidError::Exchange { .. }));
        assert!(Matroid::from_bases(3, &[vec![0, 1], vec![0, 2], vec![1, 2]]).is_ok());
        assert_eq!(
            Matroid::from_bases(3, &[vec![0, 1], vec![2]]).unwrap_err(),
            MatroidError::BasisSize(vec![2])
        );
        assert!(matches!(
            Matroid::from_bases(3, &[vec![0, 5]]).unwrap_err(),
            MatroidError::ElementOutOfRange { elem: 5, n: 3 }
        ));
    }

    #[test]
    fn flat_counts() {
        let l = Matroid::uniform(2, 3).unwrap().flats();
        assert_eq!(l.len(), 5);
        assert_eq!(Matroid::boolean(3).unwrap().flats().len(), 8);
        for n in 1..=7usize {
            for k in 1..=n {
                let expected: usize = (0..k).map(|i| subsets_of_size(n, i).len()).sum::<usize>() + 1;
                assert_eq!(Matroid::uniform(k, n).unwrap().flats().len(), expected);
            }
        }
        let m22 = Matroid::stressed_pair(2, 2).unwrap();
        let l = m22.flats();
        assert_eq!(l.flats(), &[0, set(&[0, 1]), set(&[2]), set(&[0, 1, 2])]);
        assert_eq!((0..4).map(|i| l.rank(i)).collect::<Vec<_>>(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn flats_match_closure_scan() {
        for m in zoo() {
            let l = m.flats();
            let scan: Vec<Subset> = (0..(1u64 << m.ground_size()))
                .filter(|&a| m.is_flat(a))
                .collect();
            let mut got = l.flats().to_vec();
            got.sort_unstable();
            assert_eq!(got, scan, "{m:?}");
            for i in 0..l.len() {
                assert_eq!(l.rank(i), m.rank(l.flat(i)));
            }
        }
    }

    #[test]
    fn mobius_values() {
        let b2 = Matroid::boolean(2).unwrap().flats();
        assert_eq!(b2.mobius(0, b2.top()), 1);
        let u23 = Matroid::uniform(2, 3).unwrap().flats();
        assert_eq!(u23.mobius(0, u23.top()), 2);
        let u1 = Matroid::uniform(1, 4).unwrap().flats();
        assert_eq!(u1.len(), 2);
        assert_eq!(u1.mobius(0, 1), -1);
        for m in zoo() {
            let l = m.flats();
            let top = l.mobius_top();
            for (i, &t) in top.iter().enumerate() {
                assert_eq!(t, l.mobius(i, l.top()));
                // sum_{i <= g <= j} mu(i, g) = [i = j]
                for &j in l.up(i) {
                    let s: i64 = l.up(i).iter().filter(|&&g| l.leq(g, j)).map(|&g| l.mobius(i, g)).sum();
                    assert_eq!(s, i64::from(i == j));
                }
            }
            if m.rank_of_matroid() >= 1 {
                let total: i64 = l.mobius_row(0).iter().sum();
                assert_eq!(total, 0);
                assert_eq!(l.char_poly().eval(&1.into()), 0.into());
            }
            let sign = if m.rank_of_matroid() % 2 == 0 { 1 } else { -1 };
            assert!(sign * l.mobius(0, l.top()) > 0, "{m:?}");
        }
    }

    #[test]
    fn characteristic_polynomials() {
        let p = |c: &[i64]| IntPolynomial::from_i64s(c);
        assert_eq!(char_poly(&Matroid::boolean(2).unwrap()), p(&[1, -2, 1]));
        assert_eq!(char_poly(&Matroid::uniform(2, 3).unwrap()), p(&[2, -3, 1]));
        assert_eq!(char_poly(&Matroid::uniform(1, 5).unwrap()), p(&[-1, 1]));
        assert_eq!(char_poly(&Matroid::uniform(0, 2).unwrap()), IntPolynomial::zero());
        let ms = zoo();
        for a in &ms {
            for b in &ms {
                if a.ground_size() + b.ground_size() > 9 {
                    continue;
                }
                let s = Matroid::direct_sum(a, b).unwrap();
                assert_eq!(char_poly(&s), &char_poly(a) * &char_poly(b));
            }
        }
    }

    #[test]
    fn minors_of_uniform() {
        let u = Matroid::uniform(3, 6).unwrap();
        for i in 0..3 {
            let f = full_set(i);
            assert!(is_isomorphic(&u.restrict(f), &Matroid::boolean(i).unwrap()));
            assert!(is_isomorphic(&u.contract(f), &Matroid::uniform(3 - i, 6 - i).unwrap()));
        }
        let all = u.contract(u.ground());
        assert_eq!((all.ground_size(), all.rank_of_matroid()), (0, 0));
        // flats of a contraction are the flats above it, shifted
        let m = Matroid::sparse_paving(6, 3, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let f = set(&[0]);
        let c = m.contract(f);
        let mut above: Vec<Subset> = m
            .flats()
            .flats()
            .iter()
            .filter(|&&g| g & f == f)
            .map(|&g| (g >> 1) & full_set(5))
            .collect();
        above.sort_unstable();
        let mut got = c.flats().flats().to_vec();
        got.sort_unstable();
        assert_eq!(got, above);
    }

    #[test]
    fn sparse_paving_validation() {
        let m = Matroid::sparse_paving(4, 2, &[vec![0, 1]]).unwrap();
        assert_eq!(m.bases().len(), 5);
        assert!(Matroid::sparse_paving(6, 3, &[vec![0, 1, 2], vec![3, 4, 5]]).is_ok());
        assert_eq!(
            Matroid::sparse_paving(4, 2, &[vec![0, 1], vec![0, 2]]).unwrap_err(),
            MatroidError::HyperplaneOverlap {
                a: vec![0, 1],
                b: vec![0, 2]
            }
        );
        assert!(matches!(
            Matroid::sparse_paving(4, 2, &[vec![0, 1, 2]]).unwrap_err(),
            MatroidError::CircuitHyperplaneSize(_)
        ));
    }

    #[test]
    fn qniform_shapes() {
        let a = Matroid::qniform(2, 2, 2).unwrap();
        assert_eq!(a.ground_size(), 3);
        assert!(is_isomorphic(&a, &Matroid::uniform(2, 3).unwrap()));
        let b = Matroid::qniform(2, 3, 2).unwrap();
        assert_eq!(b.ground_size(), 7);
        assert_eq!(b.flats().indices_of_rank(1).count(), 7);
        assert!(is_isomorphic(&b, &Matroid::uniform(2, 7).unwrap()));
        let fano_lines = [
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ];
        let fano = Matroid::sparse_paving(7, 3, &fano_lines).unwrap();
        assert!(is_isomorphic(&Matroid::qniform(3, 3, 2).unwrap(), &fano));
        assert!(!is_isomorphic(&Matroid::qniform(3, 3, 2).unwrap(), &Matroid::uniform(3, 7).unwrap()));
        assert_eq!(Matroid::qniform(2, 4, 2).unwrap().ground_size(), 15);
        assert_eq!(Matroid::qniform(2, 2, 3).unwrap().ground_size(), 4);
        assert_eq!(Matroid::qniform(2, 3, 4).unwrap_err(), MatroidError::NotPrime(4));
    }

    #[test]
    fn linear_columns() {
        let m = Matroid::linear(3, vec![vec![1, 0], vec![2, 0], vec![0, 1], vec![1, 1]], 2).unwrap();
        assert_eq!(m.ground_size(), 3);
        assert_eq!(
            Matroid::linear(2, vec![vec![1, 0], vec![0, 0]], 2).unwrap_err(),
            MatroidError::ZeroColumn(1)
        );
    }

    #[test]
    fn stressed_hyperplanes_and_relaxation() {
        let m = Matroid::stressed_pair(2, 3).unwrap();
        let big: Vec<Subset> = m.stressed_hyperplanes().into_iter().filter(|&h| size(h) >= 2).collect();
        assert_eq!(big, vec![set(&[0, 1, 2])]);
        let r = m.relax(set(&[0, 1, 2])).unwrap();
        assert!(is_isomorphic(&r, &Matroid::uniform(2, 4).unwrap()));
        let u = Matroid::uniform(3, 5).unwrap();
        assert!(u.stressed_hyperplanes().iter().all(|&h| size(h) == 2));
        let sp = Matroid::sparse_paving(6, 3, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let mut big: Vec<Subset> = sp.stressed_hyperplanes().into_iter().filter(|&h| size(h) >= 3).collect();
        big.sort_unstable();
        assert_eq!(big, vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
        let once = sp.relax(set(&[0, 1, 2])).unwrap();
        let twice = once.relax(set(&[3, 4, 5])).unwrap();
        assert!(is_isomorphic(&twice, &Matroid::uniform(3, 6).unwrap()));
        assert!(matches!(u.relax(set(&[0, 1, 2])), Err(MatroidError::NotStressed(_))));
        assert!(matches!(u.relax(set(&[0, 1])), Err(MatroidError::NotStressed(_))));
    }

    #[test]
    fn relaxation_replaces_one_flat() {
        let cases = vec![
            (Matroid::stressed_pair(2, 2).unwrap(), set(&[0, 1])),
            (Matroid::stressed_pair(3, 5).unwrap(), set(&[0, 1, 2, 3, 4])),
            (Matroid::paving(7, 3, &[vec![0, 1, 2, 3], vec![3, 4, 5]]).unwrap(), set(&[0, 1, 2, 3])),
        ];
        for (m, h) in cases {
            let k = m.rank_of_matroid();
            let relaxed = m.relax(h).unwrap();
            let mut expected: BTreeSet<Subset> = m.flats().flats().iter().copied().filter(|&f| f != h).collect();
            expected.extend(subsets_within(h, k - 1));
            let got: BTreeSet<Subset> = relaxed.flats().flats().iter().copied().collect();
            assert_eq!(got, expected);
        }
        assert_eq!(Matroid::stressed_pair(2, 2).unwrap().flats().len(), 4);
        assert_eq!(
            Matroid::stressed_pair(2, 2).unwrap().relax(set(&[0, 1])).unwrap().flats().len(),
            5
        );
    }

    #[test]
    fn profiles() {
        let sp = Matroid::sparse_paving(6, 3, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(sp.paving_profile().unwrap().lambda, [(3, 2)].into());
        assert!(Matroid::uniform(3, 6).unwrap().paving_profile().unwrap().lambda.is_empty());
        let m = Matroid::stressed_pair(3, 4).unwrap();
        assert_eq!(m.paving_profile().unwrap().lambda, [(4, 1)].into());
        let r = m.relax(set(&[0, 1, 2, 3])).unwrap();
        assert!(r.paving_profile().unwrap().lambda.is_empty());
        let not_paving = Matroid::direct_sum(&Matroid::uniform(1, 2).unwrap(), &Matroid::boolean(2).unwrap()).unwrap();
        assert_eq!(not_paving.paving_profile().unwrap_err(), MatroidError::NotPaving(vec![0, 1]));
    }

    #[test]
    fn spec_roundtrip() {
        let json = r#"{"backend":"sparse_paving","n":4,"k":2,"circuit_hyperplanes":[[0,1]]}"#;
        let spec: MatroidSpec = serde_json::from_str(json).unwrap();
        let m = spec.build().unwrap();
        assert_eq!(m.bases().len(), 5);
        for m in zoo() {
            let again = m.to_spec().build().unwrap();
            for a in 0..(1u64 << m.ground_size()) {
                assert_eq!(m.rank(a), again.rank(a));
            }
        }
        let bad = r#"{"backend":"uniform","n":2,"k":3}"#;
        let spec: MatroidSpec = serde_json::from_str(bad).unwrap();
        assert!(spec.build().is_err());
        let wrong = r#"{"backend":"bases","n":3,"k":1,"bases":[[0,1],[0,2],[1,2]]}"#;
        let spec: MatroidSpec = serde_json::from_str(wrong).unwrap();
        assert!(matches!(spec.build(), Err(MatroidError::Inconsistent(_))));
        assert!(serde_json::from_str::<MatroidSpec>(r#"{"backend":"uniform","n":2,"k":1,"x":0}"#).is_err());
    }
}
