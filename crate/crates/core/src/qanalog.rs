//! q-integers, q-factorials, Gaussian binomials and unipotent dimensions,
//! all evaluated at an integer `q`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("q must be at least 2, got {0}")]
    QTooSmall(u64),
    #[error("Gaussian binomial [{n} choose {k}] needs 0 <= k <= n")]
    Range { n: i64, k: i64 },
}

/// The integer at which q-analogs are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QContext {
    q: u64,
}

impl QContext {
    pub fn new(q: u64) -> Result<Self, QError> {
        if q < 2 {
            return Err(QError::QTooSmall(q));
        }
        Ok(QContext { q })
    }

    /// `q = 1`, where every q-analog degenerates to its classical value.
    pub fn classical_limit() -> Self {
        QContext { q: 1 }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    fn big(&self) -> BigInt {
        BigInt::from(self.q)
    }

    pub fn pow(&self, e: u64) -> BigInt {
        num_traits::pow(self.big(), e as usize)
    }

    /// `[m]_q = 1 + q + ... + q^{m-1}`
    pub fn q_integer(&self, m: u32) -> BigInt {
        let q = self.big();
        let mut acc = BigInt::zero();
        let mut pw = BigInt::one();
        for _ in 0..m {
            acc += &pw;
            pw *= &q;
        }
        acc
    }

    pub fn q_factorial(&self, m: u32) -> BigInt {
        (1..=m).fold(BigInt::one(), |acc, i| acc * self.q_integer(i))
    }

    pub fn gauss_binom(&self, n: i64, k: i64) -> Result<BigInt, QError> {
        if k < 0 || n < 0 || k > n {
            return Err(QError::Range { n, k });
        }
        let (n, k) = (n as u32, k as u32);
        Ok(self.q_factorial(n) / (self.q_factorial(k) * self.q_factorial(n - k)))
    }

    /// Dimension of the unipotent representation indexed by `lambda`:
    /// `q^{n(lambda)} [m]_q! / prod_cells [hook]_q`.
    pub fn unipotent_dim(&self, lambda: &Partition) -> BigInt {
        let num = self.pow(lambda.n_stat()) * self.q_factorial(lambda.size());
        let den = lambda
            .hook_lengths()
            .into_iter()
            .fold(BigInt::one(), |acc, h| acc * self.q_integer(h));
        debug_assert!((&num % &den).is_zero());
        num / den
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::binomial;
    use crate::partition;
    use crate::partition::{partitions_of, ShapeExpr};

    fn ctx(q: u64) -> QContext {
        QContext::new(q).unwrap()
    }

    #[test]
    fn gaussian_binomials() {
        let c = ctx(2);
        assert_eq!(c.gauss_binom(4, 2).unwrap(), BigInt::from(35));
        assert_eq!(c.gauss_binom(3, 1).unwrap(), BigInt::from(7));
        assert_eq!(c.gauss_binom(5, 0).unwrap(), BigInt::one());
        assert_eq!(c.gauss_binom(2, 3), Err(QError::Range { n: 2, k: 3 }));
        for q in 2..=5 {
            for n in 0..=8 {
                for k in 0..=n {
                    assert_eq!(ctx(q).gauss_binom(n, k), ctx(q).gauss_binom(n, n - k));
                }
            }
        }
        let one = QContext::classical_limit();
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(one.gauss_binom(n, k).unwrap(), binomial(n, k));
            }
        }
        assert_eq!(QContext::new(1), Err(QError::QTooSmall(1)));
    }

    /// Subspace count over F_2 by brute force: rank-k row-reduced echelon
    /// forms in F_2^n are counted by enumerating k-tuples of vectors and
    /// dividing by |GL_k(F_2)|.
    #[test]
    fn gaussian_binomial_counts_subspaces() {
        let n = 4u32;
        let k = 2;
        let mut spans = std::collections::HashSet::new();
        for a in 1..(1u32 << n) {
            for b in 1..(1u32 << n) {
                if a != b {
                    spans.insert([0, a, b, a ^ b].iter().copied().collect::<std::collections::BTreeSet<_>>());
                }
            }
        }
        assert_eq!(BigInt::from(spans.len()), ctx(2).gauss_binom(n as i64, k).unwrap());
    }

    #[test]
    fn unipotent_dimensions() {
        assert_eq!(ctx(2).unipotent_dim(&Partition::column(3)), BigInt::from(8));
        assert_eq!(ctx(2).unipotent_dim(&partition![3, 1]), BigInt::from(14));
        assert_eq!(ctx(3).unipotent_dim(&partition![5]), BigInt::one());
        for q in 2..=4u64 {
            let c = ctx(q);
            for n in 1..=8i64 {
                for k in 1..=n {
                    for i in 0..=k {
                        // (1^i) -> q^{binom(i,2)}
                        assert_eq!(
                            c.unipotent_dim(&Partition::column(i as u32)),
                            c.pow((i * (i - 1) / 2) as u64)
                        );
                        // (n-k+1, 1^{k-i-1}) -> q^{binom(k-i,2)} [n-i-1, k-i-1]_q
                        if let Some(hook) = ShapeExpr::new(n - k + 1, 0, k - i - 1).normalize() {
                            if i < k {
                                let want = c.pow(((k - i) * (k - i - 1) / 2) as u64)
                                    * c.gauss_binom(n - i - 1, k - i - 1).unwrap();
                                assert_eq!(c.unipotent_dim(&hook), want, "n={n} k={k} i={i}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unipotent_dimensions_sum_to_flag_count() {
        // sum_lambda dim_syt(lambda) * dim V_lambda(q) = |GL_m / B| = [m]_q!
        for q in 2..=3 {
            let c = ctx(q);
            for m in 0..=7 {
                let total: BigInt = partitions_of(m)
                    .iter()
                    .map(|l| l.dim_syt() * c.unipotent_dim(l))
                    .sum();
                assert_eq!(total, c.q_factorial(m));
            }
        }
        // and at q = 1 they become SYT counts
        let one = QContext::classical_limit();
        for l in partitions_of(7) {
            assert_eq!(one.unipotent_dim(&l), l.dim_syt());
        }
    }
}
