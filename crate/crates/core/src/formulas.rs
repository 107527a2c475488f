//! Closed forms for uniform, q-niform and paving matroids, and the
//! single-parameter identity checks built from them.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::numbers::{catalan, multinomial};
use crate::partition::{Partition, ShapeExpr};
use crate::poly::IntPolynomial;
use crate::qanalog::QContext;
use crate::report::{TheoremReport, Witness};
use crate::repring::{Flavor, GradedRep};
use crate::symfunc::SchurVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("need {0}, got k={1}, n={2}")]
    Params(&'static str, u32, u32),
}

fn need_kn(k: u32, n: u32) -> Result<(), FormulaError> {
    if k >= 1 && n >= k {
        Ok(())
    } else {
        Err(FormulaError::Params("n >= k >= 1", k, n))
    }
}

/// `s_(a, 2^b, 1^c)`, zero when the shape is not a partition.
pub fn shape(a: i64, b: i64, c: i64) -> SchurVector {
    SchurVector::schur_or_zero(ShapeExpr::new(a, b, c).normalize())
}

fn column(i: u32) -> SchurVector {
    SchurVector::schur(Partition::column(i))
}

/// Equivariant Möbius invariant `(-1)^k s_(n-k+1, 1^{k-1})` of `U_{k,n}`.
pub fn equiv_mobius_uniform(k: u32, n: u32) -> Result<SchurVector, FormulaError> {
    need_kn(k, n)?;
    let s = shape((n - k + 1) as i64, 0, k as i64 - 1);
    Ok(if k.is_multiple_of(2) { s } else { -&s })
}

/// `Q` of `U_{k,n}`: `sum_i s_(n-k+1, 2^i, 1^{k-2i-1}) t^i`.
pub fn equiv_q_uniform(k: u32, n: u32) -> Result<GradedRep, FormulaError> {
    need_kn(k, n)?;
    let (k, n) = (k as i64, n as i64);
    let coeffs = (0..=(k - 1) / 2).map(|i| shape(n - k + 1, i, k - 2 * i - 1)).collect();
    Ok(GradedRep::sym(n as u32, coeffs))
}

/// `Q` of the Boolean matroid `B_i`, which is `s_(1^i)` (and 1 for `i = 0`).
pub fn equiv_q_boolean(i: u32) -> GradedRep {
    GradedRep::constant(column(i), Flavor::SymmetricGroup)
}

/// Coefficient `s_(1^i) s_(n-k+1, 1^{k-i-1})` of the product form.
fn induced_term(k: u32, n: u32, i: u32) -> SchurVector {
    column(i).lr_product(&shape((n - k + 1) as i64, 0, k as i64 - i as i64 - 1))
}

fn mirror(k: u32, low: impl Fn(u32) -> SchurVector) -> Vec<SchurVector> {
    let mut coeffs = vec![SchurVector::zero(); k as usize + 1];
    for i in 0..=k / 2 {
        let c = low(i);
        if i <= (k.saturating_sub(1)) / 2 && k >= 1 {
            coeffs[(k - i) as usize] = c.clone();
        }
        coeffs[i as usize] = c;
    }
    coeffs
}

/// `Y` of `U_{k,n}` in product form: `s_(1^i) s_(n-k+1, 1^{k-i-1})` at
/// `t^i` for `i <= k/2`, mirrored to `t^{k-i}`.
pub fn equiv_y_uniform(k: u32, n: u32) -> Result<GradedRep, FormulaError> {
    need_kn(k, n)?;
    Ok(GradedRep::sym(n, mirror(k, |i| induced_term(k, n, i))))
}

/// `Y` of `U_{k,n}` expanded into irreducibles:
/// `sum_{x <= i} s_(n-k+1, 2^x, 1^{k-2x-1}) + s_(n-k+2, 2^{x-1}, 1^{k-2x})`.
pub fn equiv_y_uniform_irreducible(k: u32, n: u32) -> Result<GradedRep, FormulaError> {
    need_kn(k, n)?;
    let (ki, ni) = (k as i64, n as i64);
    let low = |i: u32| {
        (0..=i as i64)
            .map(|x| &shape(ni - ki + 1, x, ki - 2 * x - 1) + &shape(ni - ki + 2, x - 1, ki - 2 * x))
            .sum()
    };
    Ok(GradedRep::sym(n, mirror(k, low)))
}

/// `Y` of `U_{k,n}` summed over flats: the rank-`i` flats are the
/// `i`-subsets with restriction `B_i` and contraction `U_{k-i,n-i}`, and the
/// top flat contributes `Q` of `U_{k,n}`.
pub fn equiv_y_uniform_via_definition(k: u32, n: u32) -> Result<GradedRep, FormulaError> {
    need_kn(k, n)?;
    let mut coeffs = vec![SchurVector::zero(); k as usize + 1];
    for i in 0..k {
        let q = equiv_q_boolean(i).coeff(0);
        let mu = equiv_mobius_uniform(k - i, n - i)?;
        let term = q.lr_product(&mu);
        let sign: BigInt = if (k + i).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        coeffs[(k - i) as usize] = term.scale(&sign);
    }
    let top = GradedRep::sym(n, coeffs);
    Ok(top.try_add(&equiv_q_uniform(k, n)?).expect("same group degree"))
}

/// `Y` of the q-niform matroid as unipotent multiplicities, which coincide
/// with the symmetric-group multiplicities.
pub fn equiv_y_qniform(k: u32, n: u32) -> Result<GradedRep, FormulaError> {
    Ok(equiv_y_uniform_irreducible(k, n)?.with_flavor(Flavor::Unipotent))
}

/// Equivariant characteristic polynomial of the q-niform matroid:
/// `sum_{i<k} (-1)^i (m_(n-i,1^i) + m_(n-i+1,1^{i-1})) t^{k-i} + (-1)^k m_(n-k+1,1^{k-1})`.
pub fn equiv_char_qniform(k: u32, n: u32) -> Result<GradedRep, FormulaError> {
    need_kn(k, n)?;
    let (ki, ni) = (k as i64, n as i64);
    let mut coeffs = vec![SchurVector::zero(); k as usize + 1];
    for i in 0..ki {
        let v = &shape(ni - i, 0, i) + &shape(ni - i + 1, 0, i - 1);
        coeffs[(ki - i) as usize] = if i % 2 == 0 { v } else { -&v };
    }
    let last = shape(ni - ki + 1, 0, ki - 1);
    coeffs[0] = if k.is_multiple_of(2) { last } else { -&last };
    Ok(GradedRep::new(n, Flavor::Unipotent, coeffs).expect("homogeneous"))
}

/// Ordinary `Y` of the q-niform matroid:
/// `sum_i q^{binom(i,2) + binom(k-i,2)} [n,i]_q [n-i-1,k-i-1]_q t^i`, mirrored.
pub fn ordinary_y_qniform(k: u32, n: u32, ctx: &QContext) -> Result<IntPolynomial, FormulaError> {
    need_kn(k, n)?;
    let (ki, ni) = (k as i64, n as i64);
    let mut coeffs = vec![BigInt::zero(); k as usize + 1];
    for i in 0..=ki / 2 {
        let e = (i * (i - 1) / 2 + (ki - i) * (ki - i - 1) / 2) as u64;
        let c = ctx.pow(e)
            * ctx.gauss_binom(ni, i).expect("i <= n")
            * ctx.gauss_binom(ni - i - 1, ki - i - 1).expect("i < k <= n");
        if i <= (ki - 1) / 2 {
            coeffs[(ki - i) as usize] = c.clone();
        }
        coeffs[i as usize] = c;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Ordinary `Y` of `U_{k,n}`, with `Y = 1` for `B_0` and `0` when every
/// element is a loop.
pub fn ordinary_y_uniform(k: u32, n: u32) -> IntPolynomial {
    if k == 0 {
        return if n == 0 { IntPolynomial::one() } else { IntPolynomial::zero() };
    }
    ordinary_y_qniform(k, n, &QContext::classical_limit()).expect("n >= k >= 1")
}

/// `V_(h-k+2, 2^{k/2-1})` at `t^{k/2}` for even `k`, zero for odd `k`.
fn parity_correction(k: u32, h: u32) -> GradedRep {
    if k % 2 == 1 {
        return GradedRep::zero(h, Flavor::SymmetricGroup);
    }
    let mut coeffs = vec![SchurVector::zero(); (k / 2) as usize + 1];
    coeffs[(k / 2) as usize] = shape((h - k + 2) as i64, (k / 2) as i64 - 1, 0);
    GradedRep::sym(h, coeffs)
}

/// Change of `Y` when one stressed hyperplane of size `h` is relaxed, over
/// `S_h`: `Y_{U_{k,h}} - [k even] V_(h-k+2, 2^{k/2-1}) t^{k/2}`.
pub fn paving_delta(k: u32, h: u32) -> Result<GradedRep, FormulaError> {
    need_kn(k, h)?;
    Ok(equiv_y_uniform(k, h)?
        .try_sub(&parity_correction(k, h))
        .expect("same group degree"))
}

/// `Y` of `U_{k-1,h} (+) B_1` over `S_h`, which is `(1+t) Y_{U_{k-1,h}}`; zero
/// for `k = 1`, where the summand `U_{0,h}` consists of loops.
pub fn equiv_y_stressed_pair(k: u32, h: u32) -> Result<GradedRep, FormulaError> {
    need_kn(k, h)?;
    if k == 1 {
        return Ok(GradedRep::zero(h, Flavor::SymmetricGroup));
    }
    Ok(equiv_y_uniform(k - 1, h)?.scalar_mul(&IntPolynomial::from_i64s(&[1, 1])))
}

/// `4h / ((2h-k)(2h-k+2)) * multinomial(h-1; k/2, k/2-1, h-k)` for even
/// `k`, zero for odd `k`. `None` if the division is not exact.
pub fn paving_correction_dim(k: u32, h: u32) -> Option<BigInt> {
    if k % 2 == 1 {
        return Some(BigInt::zero());
    }
    let m = multinomial(h - 1, &[k / 2, k / 2 - 1, h - k]);
    let num = BigInt::from(4 * h) * m;
    let den = BigInt::from((2 * h - k) * (2 * h - k + 2));
    (&num % &den).is_zero().then(|| num / den)
}

/// Ordinary `Y` of a paving matroid from the sizes of its stressed
/// hyperplanes.
pub fn ordinary_paving_y(k: u32, n: u32, lambda: &std::collections::BTreeMap<u32, u32>) -> IntPolynomial {
    let mut y = ordinary_y_uniform(k, n);
    for (&h, &count) in lambda {
        let corr = paving_correction_dim(k, h).expect("exact division");
        let term = &ordinary_y_uniform(k, h) - &IntPolynomial::monomial(corr, (k / 2) as usize);
        y.add_scaled(&term, &-BigInt::from(count));
    }
    y
}

/// Sparse paving case with `lambda` circuit-hyperplanes:
/// `Y_{U_{k,n}} - lambda ((1+t)^k - [k even] Catalan(k/2) t^{k/2})`.
pub fn sparse_paving_y(k: u32, n: u32, lambda: u32) -> IntPolynomial {
    let mut inner = IntPolynomial::one_plus_t_pow(k);
    if k.is_multiple_of(2) {
        inner = &inner - &IntPolynomial::monomial(catalan(k / 2), (k / 2) as usize);
    }
    let mut y = ordinary_y_uniform(k, n);
    y.add_scaled(&inner, &-BigInt::from(lambda));
    y
}

/// `Res Y_{U_{k,h+1}} - (1+t) Y_{U_{k-1,h}} = paving_delta(k, h)`.
pub fn relaxation_identity_check(k: u32, h: u32) -> Result<TheoremReport, FormulaError> {
    if k < 2 || h < k {
        return Err(FormulaError::Params("h >= k >= 2", k, h));
    }
    let lhs = equiv_y_uniform(k, h + 1)?
        .restrict_one()
        .expect("group degree >= 1")
        .try_sub(&equiv_y_stressed_pair(k, h)?)
        .expect("same group degree");
    let rhs = paving_delta(k, h)?;
    let witness = (lhs != rhs).then(|| {
        Witness::new(&[("k", k.into()), ("h", h.into())], &lhs, &rhs)
            .with_note("(1+t) read as a scalar over the trivial group")
    });
    Ok(TheoremReport::single("thm1.5", format!("k={k}, h={h}"), witness))
}

/// Hook-length evaluation of `dim V_(h-k+2, 2^{k/2-1})` against the
/// multinomial closed form, for even `k`.
pub fn hook_dim_identity_check(k: u32, h: u32) -> Result<TheoremReport, FormulaError> {
    if k < 2 || k % 2 == 1 || h < k {
        return Err(FormulaError::Params("even k >= 2 and h >= k", k, h));
    }
    let lhs = ShapeExpr::new((h - k + 2) as i64, (k / 2) as i64 - 1, 0)
        .normalize()
        .map(|p| p.dim_syt())
        .unwrap_or_default();
    let rhs = paving_correction_dim(k, h);
    let witness = (Some(&lhs) != rhs.as_ref())
        .then(|| Witness::new(&[("k", k.into()), ("h", h.into())], &lhs.to_string(), &rhs.map(|r| r.to_string())));
    Ok(TheoremReport::single("thm1.6", format!("k={k}, h={h}"), witness))
}

/// Honesty of `paving_delta(k, h)`, to which coefficientwise domination by
/// the uniform matroid reduces.
pub fn uniform_dominance_check(k: u32, h: u32) -> Result<TheoremReport, FormulaError> {
    let delta = paving_delta(k, h)?;
    let witness = (!delta.is_honest()).then(|| {
        Witness::new(&[("k", k.into()), ("h", h.into())], &delta, &"Schur-nonnegative")
    });
    Ok(TheoremReport::single("thm1.7", format!("k={k}, h={h}"), witness))
}
