//! Graded virtual representations: polynomials in `t` whose coefficients
//! are Schur vectors of a fixed degree.
//!
//! The `Unipotent` flavor reuses the same multiplicity vectors for unipotent
//! representations of a finite general linear group; only the dimension
//! map differs.

use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::IntPolynomial;
use crate::qanalog::QContext;
use crate::symfunc::{SchurVector, SymError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    #[serde(rename = "sym")]
    SymmetricGroup,
    #[serde(rename = "unipotent")]
    Unipotent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("flavor mismatch: {0:?} vs {1:?}")]
    FlavorMismatch(Flavor, Flavor),
    #[error("{op} needs the {want:?} flavor")]
    WrongFlavor { op: &'static str, want: Flavor },
    #[error("coefficient of t^{index} has degree {got}, expected {expected}")]
    CoefficientDegree { index: usize, got: u32, expected: u32 },
    #[error("group degrees differ: {0} vs {1}")]
    GroupDegree(u32, u32),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// Polynomial in `t` with Schur-vector coefficients of degree
/// `group_degree`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGradedRep")]
pub struct GradedRep {
    group_degree: u32,
    flavor: Flavor,
    coeffs: Vec<SchurVector>,
}

#[derive(Deserialize)]
struct RawGradedRep {
    group_degree: u32,
    flavor: Flavor,
    coeffs: Vec<SchurVector>,
}

impl TryFrom<RawGradedRep> for GradedRep {
    type Error = RepError;

    fn try_from(raw: RawGradedRep) -> Result<Self, RepError> {
        GradedRep::new(raw.group_degree, raw.flavor, raw.coeffs)
    }
}

impl GradedRep {
    pub fn new(group_degree: u32, flavor: Flavor, mut coeffs: Vec<SchurVector>) -> Result<Self, RepError> {
        for (index, c) in coeffs.iter().enumerate() {
            if let Some(got) = c.degree() {
                if got != group_degree {
                    return Err(RepError::CoefficientDegree {
                        index,
                        got,
                        expected: group_degree,
                    });
                }
            }
        }
        while coeffs.last().is_some_and(SchurVector::is_zero) {
            coeffs.pop();
        }
        Ok(GradedRep {
            group_degree,
            flavor,
            coeffs,
        })
    }

    /// Symmetric-group polynomial; panics on inhomogeneous input, which
    /// only arises from a bug in a formula.
    pub(crate) fn sym(group_degree: u32, coeffs: Vec<SchurVector>) -> Self {
        Self::new(group_degree, Flavor::SymmetricGroup, coeffs).expect("homogeneous coefficients")
    }

    pub fn zero(group_degree: u32, flavor: Flavor) -> Self {
        GradedRep {
            group_degree,
            flavor,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(v: SchurVector, flavor: Flavor) -> Self {
        let d = v.degree().unwrap_or(0);
        Self::new(d, flavor, vec![v]).expect("single homogeneous coefficient")
    }

    pub fn group_degree(&self) -> u32 {
        self.group_degree
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Same multiplicities, different flavor tag.
    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        GradedRep { flavor, ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Top nonzero `t`-degree, 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[SchurVector] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> SchurVector {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    fn check_compatible(&self, other: &GradedRep) -> Result<(), RepError> {
        if self.flavor != other.flavor {
            return Err(RepError::FlavorMismatch(self.flavor, other.flavor));
        }
        if self.group_degree != other.group_degree {
            return Err(RepError::GroupDegree(self.group_degree, other.group_degree));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GradedRep) -> Result<GradedRep, RepError> {
        self.check_compatible(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        GradedRep::new(self.group_degree, self.flavor, coeffs)
    }

    pub fn try_sub(&self, other: &GradedRep) -> Result<GradedRep, RepError> {
        self.check_compatible(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) - &other.coeff(i)).collect();
        GradedRep::new(self.group_degree, self.flavor, coeffs)
    }

    /// Multiplication by an integer polynomial, i.e. by a graded
    /// representation of the trivial group.
    pub fn scalar_mul(&self, p: &IntPolynomial) -> GradedRep {
        let len = (self.coeffs.len() + p.coeffs().len()).saturating_sub(1);
        let mut coeffs = vec![SchurVector::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            for (j, a) in p.coeffs().iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &c.scale(a);
            }
        }
        GradedRep::new(self.group_degree, self.flavor, coeffs).expect("degree preserved")
    }

    /// Induction product from `S_a x S_b` to `S_{a+b}`.
    pub fn induct_product(&self, other: &GradedRep) -> Result<GradedRep, RepError> {
        for f in [self, other] {
            if f.flavor != Flavor::SymmetricGroup {
                return Err(RepError::WrongFlavor {
                    op: "induct_product",
                    want: Flavor::SymmetricGroup,
                });
            }
        }
        let degree = self.group_degree + other.group_degree;
        if self.is_zero() || other.is_zero() {
            return Ok(GradedRep::zero(degree, Flavor::SymmetricGroup));
        }
        let mut coeffs = vec![SchurVector::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &a.lr_product(b);
            }
        }
        GradedRep::new(degree, Flavor::SymmetricGroup, coeffs)
    }

    /// Restriction from `S_m` to `S_{m-1}`, coefficientwise.
    pub fn restrict_one(&self) -> Result<GradedRep, RepError> {
        if self.group_degree == 0 {
            return Err(SymError::DegreeZero.into());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(SchurVector::branch_restrict)
            .collect::<Result<Vec<_>, _>>()?;
        GradedRep::new(self.group_degree - 1, self.flavor, coeffs)
    }

    pub fn is_honest(&self) -> bool {
        self.coeffs.iter().all(SchurVector::is_schur_nonneg)
    }

    pub fn is_palindromic(&self, d: usize) -> bool {
        if self.coeffs.len() > d + 1 {
            return false;
        }
        (0..=d).all(|i| self.coeff(i) == self.coeff(d - i))
    }

    /// Smallest pivot `i` such that the differences increase honestly up to
    /// `i` and decrease honestly after it. Every pivot is tried.
    pub fn unimodality_pivot(&self) -> Option<usize> {
        let d = self.degree();
        let rising: Vec<bool> = (1..=d)
            .map(|i| (&self.coeff(i) - &self.coeff(i - 1)).is_schur_nonneg())
            .collect();
        let falling: Vec<bool> = (1..=d)
            .map(|i| (&self.coeff(i - 1) - &self.coeff(i)).is_schur_nonneg())
            .collect();
        (0..=d).find(|&pivot| rising[..pivot].iter().all(|&b| b) && falling[pivot..].iter().all(|&b| b))
    }

    pub fn is_equivariantly_unimodal(&self) -> bool {
        self.unimodality_pivot().is_some()
    }

    /// First `(i, j)` in lexicographic order with `1 <= i <= j <= d - 1`
    /// where `c_i c_j - c_{i-1} c_{j+1}` fails to be Schur-nonnegative.
    pub fn logconcavity_witness(&self) -> Option<(usize, usize)> {
        let d = self.degree();
        let pairs: Vec<(usize, usize)> = (1..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
        pairs.into_par_iter().find_first(|&(i, j)| {
            let lhs = self.coeff(i).lr_product(&self.coeff(j));
            let rhs = self.coeff(i - 1).lr_product(&self.coeff(j + 1));
            !(&lhs - &rhs).is_schur_nonneg()
        })
    }

    /// Induction products are computed with symmetric-group LR coefficients
    /// for both flavors; for unipotent multiplicities this is justified by
    /// the comparison theorem for Harish-Chandra induction.
    pub fn strongly_induced_logconcave(&self) -> bool {
        self.logconcavity_witness().is_none()
    }

    /// Coefficientwise dimension over the symmetric group.
    pub fn dimension_poly(&self) -> Result<IntPolynomial, RepError> {
        if self.flavor != Flavor::SymmetricGroup {
            return Err(RepError::WrongFlavor {
                op: "dimension_poly",
                want: Flavor::SymmetricGroup,
            });
        }
        Ok(IntPolynomial::new(self.coeffs.iter().map(SchurVector::dimension).collect()))
    }

    /// Coefficientwise dimension over `GL_n(F_q)`, summing multiplicities
    /// against unipotent dimensions.
    pub fn qdimension_poly(&self, ctx: &QContext) -> Result<IntPolynomial, RepError> {
        if self.flavor != Flavor::Unipotent {
            return Err(RepError::WrongFlavor {
                op: "qdimension_poly",
                want: Flavor::Unipotent,
            });
        }
        Ok(IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| c.terms().map(|(l, m)| m * ctx.unipotent_dim(l)).sum())
                .collect(),
        ))
    }

    /// True if some supported shape is not a hook, i.e. a unipotent
    /// dimension outside the two closed forms the formulas rely on.
    pub fn has_non_hook_shapes(&self) -> bool {
        self.coeffs.iter().any(|c| c.terms().any(|(l, _)| !l.is_hook()))
    }
}

impl fmt::Display for GradedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let single = c.len() == 1 && c.terms().all(|(_, x)| x.is_one());
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if single || i == 0 {
                write!(f, "{c}{mono}")?;
            } else {
                write!(f, "({c}){mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, S_{}] {self}", self.flavor, self.group_degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use crate::numbers::binomial;
    use crate::partition;
    use crate::partition::{partitions_of, Partition};

    fn s(p: Partition) -> SchurVector {
        SchurVector::schur(p)
    }

    fn rep(n: u32, cs: Vec<SchurVector>) -> GradedRep {
        GradedRep::sym(n, cs)
    }

    fn y23() -> GradedRep {
        rep(
            3,
            vec![
                s(partition![2, 1]),
                s(partition![2, 1]) + s(partition![3]),
                s(partition![2, 1]),
            ],
        )
    }

    #[test]
    fn construction_checks_degrees() {
        let err = GradedRep::new(2, Flavor::SymmetricGroup, vec![s(partition![3])]).unwrap_err();
        assert_eq!(err, RepError::CoefficientDegree { index: 0, got: 3, expected: 2 });
        let r = GradedRep::new(2, Flavor::SymmetricGroup, vec![s(partition![2]), SchurVector::zero()]).unwrap();
        assert_eq!(r.degree(), 0);
    }

    #[test]
    fn induction_products() {
        let unit = GradedRep::constant(s(Partition::empty()), Flavor::SymmetricGroup);
        assert_eq!(unit.induct_product(&y23()).unwrap(), y23());
        let h2 = rep(2, vec![s(partition![2]), s(partition![2])]);
        let one_plus_t = IntPolynomial::from_i64s(&[1, 1]);
        assert_eq!(
            h2.scalar_mul(&one_plus_t),
            rep(2, vec![s(partition![2]), s(partition![2]).scale(&2.into()), s(partition![2])])
        );
        let lin = rep(1, vec![s(partition![1])]).scalar_mul(&one_plus_t);
        assert_eq!(y23().induct_product(&lin).unwrap().degree(), 3);
        let uni = y23().with_flavor(Flavor::Unipotent);
        assert!(matches!(uni.induct_product(&y23()), Err(RepError::WrongFlavor { .. })));
    }

    #[test]
    fn restriction() {
        let c = GradedRep::constant(s(partition![3, 2, 1]), Flavor::SymmetricGroup);
        assert_eq!(
            c.restrict_one().unwrap(),
            rep(5, vec![s(partition![2, 2, 1]) + s(partition![3, 1, 1]) + s(partition![3, 2])])
        );
        let y13 = rep(3, vec![s(partition![3]), s(partition![3])]);
        assert_eq!(y13.restrict_one().unwrap(), rep(2, vec![s(partition![2]), s(partition![2])]));
        assert!(GradedRep::zero(4, Flavor::SymmetricGroup).restrict_one().unwrap().is_zero());
        assert!(GradedRep::zero(0, Flavor::SymmetricGroup).restrict_one().is_err());
    }

    #[test]
    fn predicates() {
        assert!(y23().is_honest());
        assert!(!rep(2, vec![&s(partition![2]) - &s(partition![1, 1])]).is_honest());
        assert!(y23().is_palindromic(2));
        assert!(!rep(2, vec![s(partition![2]), s(partition![1, 1])]).is_palindromic(1));
        assert!(GradedRep::constant(s(partition![2]), Flavor::SymmetricGroup).is_palindromic(0));
        let kl45 = rep(5, vec![s(partition![5]), s(partition![3, 2])]);
        assert!(!kl45.is_equivariantly_unimodal());
        assert_eq!(y23().unimodality_pivot(), Some(1));
        assert!(GradedRep::constant(s(partition![4]), Flavor::SymmetricGroup).is_equivariantly_unimodal());
        let gap = rep(1, vec![s(partition![1]), SchurVector::zero(), s(partition![1])]);
        assert_eq!(gap.logconcavity_witness(), Some((1, 1)));
        assert!(GradedRep::constant(s(partition![2]), Flavor::SymmetricGroup).strongly_induced_logconcave());
        assert!(y23().strongly_induced_logconcave());
    }

    #[test]
    fn dimensions() {
        assert_eq!(y23().dimension_poly().unwrap(), IntPolynomial::from_i64s(&[2, 3, 2]));
        assert!(GradedRep::zero(3, Flavor::SymmetricGroup).dimension_poly().unwrap().is_zero());
        let uni = y23().with_flavor(Flavor::Unipotent);
        assert!(uni.dimension_poly().is_err());
        let q2 = QContext::new(2).unwrap();
        assert_eq!(uni.qdimension_poly(&q2).unwrap(), IntPolynomial::from_i64s(&[6, 7, 6]));
        assert!(y23().qdimension_poly(&q2).is_err());
    }

    #[test]
    fn induction_dimension_law() {
        let reps: Vec<GradedRep> = (0..=4)
            .flat_map(|n| {
                partitions_of(n).into_iter().take(3).map(move |p| {
                    rep(n, vec![s(p.clone()), SchurVector::zero(), s(p).scale(&BigInt::from(2))])
                })
            })
            .chain([y23()])
            .collect();
        for a in &reps {
            for b in &reps {
                let prod = a.induct_product(b).unwrap();
                let (da, db) = (a.group_degree() as i64, b.group_degree() as i64);
                let factor = binomial(da + db, da);
                let want = (&a.dimension_poly().unwrap() * &b.dimension_poly().unwrap()).scale(&factor);
                assert_eq!(prod.dimension_poly().unwrap(), want);
            }
        }
    }

    #[test]
    fn pivot_scan_agrees_with_middle_for_palindromes() {
        let a = rep(3, vec![s(partition![3]), s(partition![2, 1]) + s(partition![3]), s(partition![3])]);
        assert!(a.is_palindromic(2));
        assert_eq!(a.unimodality_pivot(), Some(1));
    }

    #[test]
    fn json_shape() {
        let text = serde_json::to_string(&rep(1, vec![s(partition![1])])).unwrap();
        assert_eq!(
            text,
            r#"{"group_degree":1,"flavor":"sym","coeffs":[[{"partition":[1],"coeff":1}]]}"#
        );
        let back: GradedRep = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep(1, vec![s(partition![1])]));
        let bad = r#"{"group_degree":2,"flavor":"sym","coeffs":[[{"partition":[1],"coeff":1}]]}"#;
        assert!(serde_json::from_str::<GradedRep>(bad).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(y23().to_string(), "s_(2,1) + (s_(2,1) + s_(3))t + s_(2,1)t^2");
    }
}
