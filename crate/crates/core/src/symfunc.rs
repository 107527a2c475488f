//! Integer combinations of Schur functions.
//!
//! A [`SchurVector`] is the Frobenius image of a virtual representation of a
//! symmetric group. Products are computed with the Littlewood-Richardson
//! rule by direct enumeration of LR tableaux; restriction to the next
//! smaller symmetric group removes one box.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::numbers::json_int;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("mixed degrees {0} and {1} in one Schur vector")]
    MixedDegree(u32, u32),
    #[error("cannot restrict a degree-0 vector")]
    DegreeZero,
}

/// Finite integer combination of Schur functions, all of one degree.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SchurVector {
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurVector {
    pub fn zero() -> Self {
        SchurVector::default()
    }

    /// The single Schur function `s_lambda`.
    pub fn schur(lambda: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, BigInt::one());
        SchurVector { coeffs }
    }

    /// `s_lambda` if the shape is valid, zero otherwise.
    pub fn schur_or_zero(lambda: Option<Partition>) -> Self {
        lambda.map(Self::schur).unwrap_or_default()
    }

    pub fn from_terms<I>(terms: I) -> Result<Self, SymError>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut out = SchurVector::zero();
        for (p, c) in terms {
            out.try_add_term(p, c)?;
        }
        Ok(out)
    }

    /// Adds `c * s_lambda`, rejecting a term whose degree differs from the
    /// vector's current degree.
    pub fn try_add_term(&mut self, lambda: Partition, c: BigInt) -> Result<(), SymError> {
        if c.is_zero() {
            return Ok(());
        }
        if let Some(d) = self.degree() {
            if d != lambda.size() {
                return Err(SymError::MixedDegree(d, lambda.size()));
            }
        }
        let entry = self.coeffs.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
        Ok(())
    }

    fn add_term_unchecked(&mut self, lambda: Partition, c: BigInt) {
        self.try_add_term(lambda, c)
            .expect("homogeneous terms by construction");
    }

    /// Common size of the supported partitions; `None` for the zero vector.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next().map(Partition::size)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> SchurVector {
        if c.is_zero() {
            return SchurVector::zero();
        }
        SchurVector {
            coeffs: self.coeffs.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    /// Littlewood-Richardson product; the degrees add.
    pub fn lr_product(&self, other: &SchurVector) -> SchurVector {
        if self.is_zero() || other.is_zero() {
            return SchurVector::zero();
        }
        let pairs: Vec<(&Partition, &BigInt, &Partition, &BigInt)> = self
            .coeffs
            .iter()
            .flat_map(|(l, a)| other.coeffs.iter().map(move |(m, b)| (l, a, m, b)))
            .collect();
        let accumulate = |mut acc: BTreeMap<Partition, BigInt>, (l, a, m, b): (&Partition, &BigInt, &Partition, &BigInt)| {
            let ab = a * b;
            // c^nu_{lm} = c^nu_{ml}; the smaller shape as content is cheaper
            let (outer, content) = if (l.size(), l) >= (m.size(), m) { (l, m) } else { (m, l) };
            for (nu, c) in lr_coefficients(outer, content).iter() {
                *acc.entry(nu.clone()).or_default() += &ab * c;
            }
            acc
        };
        let merged = if pairs.len() >= 16 {
            pairs
                .into_par_iter()
                .fold(BTreeMap::new, accumulate)
                .reduce(BTreeMap::new, |mut a, b| {
                    for (k, v) in b {
                        *a.entry(k).or_default() += v;
                    }
                    a
                })
        } else {
            pairs.into_iter().fold(BTreeMap::new(), accumulate)
        };
        let mut coeffs = merged;
        coeffs.retain(|_, c| !c.is_zero());
        SchurVector { coeffs }
    }

    /// Restriction from `S_m` to `S_{m-1}`: every `s_lambda` becomes the sum
    /// of `s_mu` over shapes with one box removed.
    pub fn branch_restrict(&self) -> Result<SchurVector, SymError> {
        match self.degree() {
            None => Ok(SchurVector::zero()),
            Some(0) => Err(SymError::DegreeZero),
            Some(_) => {
                let mut out = SchurVector::zero();
                for (p, c) in &self.coeffs {
                    for q in p.remove_one_box() {
                        out.add_term_unchecked(q, c.clone());
                    }
                }
                Ok(out)
            }
        }
    }

    pub fn is_schur_nonneg(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// `self >=_s other`, i.e. `self - other` is Schur-nonnegative.
    pub fn schur_geq(&self, other: &SchurVector) -> Result<bool, SymError> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(SymError::MixedDegree(a, b));
            }
        }
        Ok((self - other).is_schur_nonneg())
    }

    /// Dimension of the underlying virtual representation.
    pub fn dimension(&self) -> BigInt {
        self.coeffs.iter().map(|(p, c)| c * p.dim_syt()).sum()
    }

    fn combine(&self, other: &SchurVector, sign: &BigInt) -> SchurVector {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            assert_eq!(a, b, "adding Schur vectors of different degrees");
        }
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term_unchecked(p.clone(), c * sign);
        }
        out
    }
}

impl Add for &SchurVector {
    type Output = SchurVector;

    /// Panics when both operands are nonzero with different degrees.
    fn add(self, rhs: &SchurVector) -> SchurVector {
        self.combine(rhs, &BigInt::one())
    }
}

impl Sub for &SchurVector {
    type Output = SchurVector;

    fn sub(self, rhs: &SchurVector) -> SchurVector {
        self.combine(rhs, &-BigInt::one())
    }
}

impl Add for SchurVector {
    type Output = SchurVector;

    fn add(self, rhs: SchurVector) -> SchurVector {
        &self + &rhs
    }
}

impl Sub for SchurVector {
    type Output = SchurVector;

    fn sub(self, rhs: SchurVector) -> SchurVector {
        &self - &rhs
    }
}

impl Neg for &SchurVector {
    type Output = SchurVector;

    fn neg(self) -> SchurVector {
        self.scale(&-BigInt::one())
    }
}

impl std::iter::Sum for SchurVector {
    fn sum<I: Iterator<Item = SchurVector>>(iter: I) -> SchurVector {
        iter.fold(SchurVector::zero(), |a, b| a + b)
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "s_{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    partition: Partition,
    #[serde(with = "json_int")]
    coeff: BigInt,
}

impl Serialize for SchurVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .coeffs
            .iter()
            .map(|(p, c)| Term {
                partition: p.clone(),
                coeff: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms: Vec<Term> = Vec::deserialize(d)?;
        SchurVector::from_terms(terms.into_iter().map(|t| (t.partition, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

type LrTable = Arc<Vec<(Partition, u64)>>;

fn lr_cache() -> &'static RwLock<HashMap<(Partition, Partition), LrTable>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), LrTable>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Littlewood-Richardson coefficients `c^nu_{lambda mu}` for all `nu`,
/// memoized per ordered pair.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition) -> LrTable {
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = lr_cache().read().expect("lr cache poisoned").get(&key) {
        return hit.clone();
    }
    let table: LrTable = Arc::new(lr_coefficients_uncached(lambda, mu).into_iter().collect());
    lr_cache()
        .write()
        .expect("lr cache poisoned")
        .insert(key, table.clone());
    table
}

/// Enumerates LR tableaux of shape `nu / lambda` and content `mu`.
///
/// Rows of `mu` are placed one label at a time as horizontal strips. For
/// label `r >= 2`, the number of `r`s in rows `0..=j` may not exceed the
/// number of `r - 1`s in rows `0..j`, which is exactly the lattice-word
/// condition on the right-to-left, top-to-bottom reading word.
pub fn lr_coefficients_uncached(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let shape = lambda.parts().to_vec();
    let prev = vec![u32::MAX; shape.len() + mu.len() + 1];
    place_label(mu.parts(), 0, shape, &prev, &mut out);
    out
}

fn place_label(
    content: &[u32],
    label: usize,
    shape: Vec<u32>,
    prev_counts: &[u32],
    out: &mut BTreeMap<Partition, u64>,
) {
    if label == content.len() {
        *out.entry(Partition::from_parts_unchecked(shape)).or_default() += 1;
        return;
    }
    let rows = shape.len() + 1;
    let mut counts = vec![0u32; rows];
    fill_rows(
        content,
        label,
        &shape,
        prev_counts,
        0,
        content[label],
        0,
        0,
        &mut counts,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn fill_rows(
    content: &[u32],
    label: usize,
    shape: &[u32],
    prev_counts: &[u32],
    row: usize,
    remaining: u32,
    placed_so_far: u32,
    prev_before_row: u64,
    counts: &mut Vec<u32>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        let mut next = shape.to_vec();
        next.push(0);
        for (r, &c) in counts.iter().enumerate() {
            next[r] += c;
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        let mut next_prev = counts.clone();
        next_prev.resize(next.len() + content.len() + 1, 0);
        place_label(content, label + 1, next, &next_prev, out);
        for c in counts.iter_mut().skip(row) {
            *c = 0;
        }
        return;
    }
    if row >= counts.len() {
        return;
    }
    let cur = shape.get(row).copied().unwrap_or(0);
    let strip_cap = if row == 0 {
        u32::MAX
    } else {
        shape[row - 1] - cur
    };
    // lattice bound: cumulative count of this label through `row` is at most
    // the cumulative count of the previous label strictly above `row`.
    let lattice_cap = if label == 0 {
        u64::MAX
    } else {
        prev_before_row.saturating_sub(placed_so_far as u64)
    };
    let max_here = (remaining as u64).min(strip_cap as u64).min(lattice_cap) as u32;
    let prev_here = if label == 0 {
        0
    } else {
        prev_counts.get(row).copied().unwrap_or(0) as u64
    };
    let next_prev_before = prev_before_row.saturating_add(prev_here);
    for a in (0..=max_here).rev() {
        counts[row] = a;
        fill_rows(
            content,
            label,
            shape,
            prev_counts,
            row + 1,
            remaining - a,
            placed_so_far + a,
            if label == 0 { u64::MAX } else { next_prev_before },
            counts,
            out,
        );
    }
    counts[row] = 0;
}

/// `e_r * s_lambda`: sum over shapes obtained by adding a vertical strip of
/// `r` boxes (at most one box per row).
pub fn dual_pieri(r: u32, lambda: &Partition) -> SchurVector {
    fn go(
        row: usize,
        left: u32,
        base: &[u32],
        cur: &mut Vec<u32>,
        out: &mut SchurVector,
    ) {
        if left == 0 {
            let mut parts = cur.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.add_term_unchecked(Partition::from_parts_unchecked(parts), BigInt::one());
            return;
        }
        if row >= cur.len() {
            return;
        }
        // remaining rows must be able to absorb the remaining boxes
        if (cur.len() - row) < left as usize {
            return;
        }
        let grown = base[row] + 1;
        if row == 0 || cur[row - 1] >= grown {
            cur[row] = grown;
            go(row + 1, left - 1, base, cur, out);
            cur[row] = base[row];
        }
        go(row + 1, left, base, cur, out);
    }
    let mut base = lambda.parts().to_vec();
    base.resize(lambda.len() + r as usize, 0);
    let mut cur = base.clone();
    let mut out = SchurVector::zero();
    go(0, r, &base, &mut cur, &mut out);
    out
}

/// `h_r * s_lambda`: sum over shapes obtained by adding a horizontal strip
/// of `r` boxes (at most one box per column).
pub fn pieri(r: u32, lambda: &Partition) -> SchurVector {
    fn go(row: usize, left: u32, base: &[u32], cur: &mut Vec<u32>, out: &mut SchurVector) {
        if row == base.len() {
            if left == 0 {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.add_term_unchecked(Partition::from_parts_unchecked(parts), BigInt::one());
            }
            return;
        }
        let cap = if row == 0 { left } else { (base[row - 1] - base[row]).min(left) };
        for a in 0..=cap {
            cur[row] = base[row] + a;
            go(row + 1, left - a, base, cur, out);
        }
        cur[row] = base[row];
    }
    let mut base = lambda.parts().to_vec();
    base.push(0);
    let mut cur = base.clone();
    let mut out = SchurVector::zero();
    go(0, r, &base, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::binomial;
    use crate::partition;
    use crate::partition::partitions_of;

    fn s(p: Partition) -> SchurVector {
        SchurVector::schur(p)
    }

    fn sum(ps: Vec<Partition>) -> SchurVector {
        ps.into_iter().map(s).sum()
    }

    /// Independent LR oracle: enumerate every filling of `nu / lambda` with
    /// content `mu`, then keep the semistandard ones with a lattice reading
    /// word.
    fn brute_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if !nu.contains(lambda) || nu.size() != lambda.size() + mu.size() {
            return 0;
        }
        let cells: Vec<(usize, usize)> = (0..nu.len())
            .flat_map(|i| (lambda.part(i) as usize..nu.part(i) as usize).map(move |j| (i, j)))
            .collect();
        let labels = mu.len();
        let mut fill = vec![0usize; cells.len()];
        let mut count = 0;
        loop {
            let mut content = vec![0u32; labels];
            for &l in &fill {
                content[l] += 1;
            }
            if content.as_slice() == mu.parts() && is_lr_tableau(&cells, &fill, labels) {
                count += 1;
            }
            // odometer
            let mut i = 0;
            loop {
                if i == fill.len() {
                    return count;
                }
                fill[i] += 1;
                if fill[i] < labels {
                    break;
                }
                fill[i] = 0;
                i += 1;
            }
        }
    }

    fn is_lr_tableau(cells: &[(usize, usize)], fill: &[usize], labels: usize) -> bool {
        let at: HashMap<(usize, usize), usize> =
            cells.iter().copied().zip(fill.iter().copied()).collect();
        for (&(i, j), &l) in cells.iter().zip(fill) {
            if let Some(&left) = at.get(&(i, j.wrapping_sub(1))) {
                if left > l {
                    return false;
                }
            }
            if let Some(&up) = at.get(&(i.wrapping_sub(1), j)) {
                if up >= l {
                    return false;
                }
            }
        }
        let mut order = cells.to_vec();
        order.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let mut seen = vec![0i64; labels];
        for c in order {
            let l = at[&c];
            seen[l] += 1;
            if l > 0 && seen[l] > seen[l - 1] {
                return false;
            }
        }
        true
    }

    #[test]
    fn small_products() {
        assert_eq!(
            s(partition![1]).lr_product(&s(partition![1])),
            sum(vec![partition![2], partition![1, 1]])
        );
        assert_eq!(
            s(partition![1]).lr_product(&s(partition![1, 1])),
            sum(vec![partition![2, 1], partition![1, 1, 1]])
        );
        assert_eq!(
            s(partition![1, 1]).lr_product(&s(partition![2, 1])),
            sum(vec![
                partition![3, 2],
                partition![3, 1, 1],
                partition![2, 2, 1],
                partition![2, 1, 1, 1]
            ])
        );
        let unit = s(Partition::empty());
        assert_eq!(unit.lr_product(&s(partition![3, 1])), s(partition![3, 1]));
    }

    #[test]
    fn lr_matches_brute_force() {
        for a in 0..=4 {
            for b in 0..=3 {
                for l in partitions_of(a) {
                    for m in partitions_of(b) {
                        let fast = lr_coefficients_uncached(&l, &m);
                        for nu in partitions_of(a + b) {
                            let want = brute_lr(&l, &m, &nu);
                            assert_eq!(fast.get(&nu).copied().unwrap_or(0), want, "{l} {m} {nu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn known_coefficient_two() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        let t = lr_coefficients_uncached(&partition![2, 1], &partition![2, 1]);
        assert_eq!(t[&partition![3, 2, 1]], 2);
    }

    #[test]
    fn pieri_rules() {
        assert_eq!(dual_pieri(0, &partition![2, 1]), s(partition![2, 1]));
        assert_eq!(
            dual_pieri(1, &partition![2, 1]),
            sum(vec![partition![3, 1], partition![2, 2], partition![2, 1, 1]])
        );
        assert_eq!(
            dual_pieri(1, &partition![2]),
            sum(vec![partition![3], partition![2, 1]])
        );
        assert_eq!(dual_pieri(3, &Partition::empty()), s(Partition::column(3)));
        assert_eq!(pieri(2, &Partition::empty()), s(partition![2]));
        for n in 0..=8u32 {
            for r in 0..=(12 - n).min(4) {
                for l in partitions_of(n) {
                    assert_eq!(
                        s(Partition::column(r)).lr_product(&s(l.clone())),
                        dual_pieri(r, &l),
                        "e_{r} s_{l}"
                    );
                    assert_eq!(
                        s(Partition::row(r)).lr_product(&s(l.clone())),
                        pieri(r, &l),
                        "h_{r} s_{l}"
                    );
                }
            }
        }
    }

    #[test]
    fn branching() {
        assert_eq!(
            s(partition![3, 2, 1]).branch_restrict().unwrap(),
            sum(vec![partition![2, 2, 1], partition![3, 1, 1], partition![3, 2]])
        );
        assert_eq!(
            s(partition![4, 1, 1]).branch_restrict().unwrap(),
            sum(vec![partition![3, 1, 1], partition![4, 1]])
        );
        assert_eq!(
            s(partition![3, 2]).branch_restrict().unwrap(),
            sum(vec![partition![2, 2], partition![3, 1]])
        );
        assert_eq!(
            s(Partition::empty()).branch_restrict(),
            Err(SymError::DegreeZero)
        );
        for n in 1..=12 {
            for l in partitions_of(n) {
                let r = s(l.clone()).branch_restrict().unwrap();
                assert_eq!(r.dimension(), l.dim_syt());
            }
        }
    }

    #[test]
    fn positivity_and_order() {
        assert!(!(&s(partition![2, 1]) - &s(partition![3])).is_schur_nonneg());
        assert!(SchurVector::zero().is_schur_nonneg());
        let prod = s(partition![1]).lr_product(&s(partition![1, 1]));
        assert!((&prod - &s(partition![2, 1])).is_schur_nonneg());
        let a = s(partition![2]);
        let b = s(partition![1, 1]);
        assert_eq!(a.schur_geq(&b), Ok(false));
        assert_eq!(b.schur_geq(&a), Ok(false));
        let lhs = s(partition![1]).lr_product(&s(partition![2, 1]));
        assert_eq!(lhs.schur_geq(&lhs), Ok(true));
        let rhs = s(Partition::empty()).lr_product(&s(partition![2, 1]));
        assert_eq!(
            s(partition![1]).lr_product(&s(partition![2])).schur_geq(&rhs),
            Ok(true)
        );
        assert_eq!(
            s(partition![1]).schur_geq(&s(partition![2])),
            Err(SymError::MixedDegree(1, 2))
        );
    }

    #[test]
    fn mixed_degree_rejected() {
        let r = SchurVector::from_terms(vec![
            (partition![1], BigInt::one()),
            (partition![2], BigInt::one()),
        ]);
        assert_eq!(r, Err(SymError::MixedDegree(1, 2)));
    }

    #[test]
    fn dimensions() {
        assert_eq!(s(partition![7]).dimension(), BigInt::from(1));
        assert_eq!((s(partition![2, 1]) + s(partition![3])).dimension(), BigInt::from(3));
        assert_eq!(s(partition![3, 2]).dimension(), BigInt::from(5));
    }

    #[test]
    fn json_roundtrip() {
        let v = s(partition![3, 1]).scale(&BigInt::from(2)) + s(partition![2, 2]);
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(
            text,
            r#"[{"partition":[2,2],"coeff":1},{"partition":[3,1],"coeff":2}]"#
        );
        let back: SchurVector = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_partition(max: u32) -> impl Strategy<Value = Partition> {
            (0..=max).prop_flat_map(|n| {
                let all = partitions_of(n);
                (0..all.len()).prop_map(move |i| all[i].clone())
            })
        }

        fn arb_vector(max: u32) -> impl Strategy<Value = SchurVector> {
            (0..=max).prop_flat_map(|n| {
                let all = partitions_of(n);
                prop::collection::vec((0..all.len(), -3i64..=3), 1..4).prop_map(move |terms| {
                    SchurVector::from_terms(
                        terms.into_iter().map(|(i, c)| (all[i].clone(), BigInt::from(c))),
                    )
                    .unwrap()
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn commutative(a in arb_partition(7), b in arb_partition(7)) {
                prop_assert_eq!(lr_coefficients_uncached(&a, &b), lr_coefficients_uncached(&b, &a));
            }

            #[test]
            fn associative(a in arb_vector(4), b in arb_vector(5), c in arb_vector(5)) {
                prop_assert_eq!(
                    a.lr_product(&b).lr_product(&c),
                    a.lr_product(&b.lr_product(&c))
                );
            }

            #[test]
            fn dimension_law(a in arb_vector(6), b in arb_vector(6)) {
                let da = a.degree().unwrap_or(0) as i64;
                let db = b.degree().unwrap_or(0) as i64;
                let prod = a.lr_product(&b);
                if !prod.is_zero() {
                    prop_assert_eq!(prod.degree().unwrap() as i64, da + db);
                }
                prop_assert_eq!(
                    prod.dimension(),
                    binomial(da + db, da) * a.dimension() * b.dimension()
                );
            }
        }
    }
}
