//! Kazhdan-Lusztig-Stanley invariants of a matroid from its lattice of flats.
//!
//! Every interval `[x, y]` of the lattice is the lattice of the minor
//! `(M|y)/x`, so the engine memoizes `P` per interval and never builds minor
//! matroids. The degree bounds, palindromicity and positivity checks are
//! always on: they are the statements under test.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{FlatLattice, Matroid};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KlsError {
    #[error("KL recursion inconsistent on interval of rank {rank}: {detail}")]
    Inconsistent { rank: usize, detail: String },
    #[error("{which} has degree {degree} on an interval of rank {rank}")]
    DegreeBound {
        which: &'static str,
        degree: usize,
        rank: usize,
    },
    #[error("{which} = {poly} is not palindromic of degree {rank}")]
    NotPalindromic {
        which: &'static str,
        poly: IntPolynomial,
        rank: usize,
    },
    #[error("{which} = {poly} has a negative coefficient")]
    Negative {
        which: &'static str,
        poly: IntPolynomial,
    },
}

/// Interval-memoized `P` and `Q` over one lattice of flats.
pub struct KlsEngine<'a> {
    lat: &'a FlatLattice,
    /// `p[x][i]` is `P(x, up(x)[i])`.
    p: Vec<Vec<IntPolynomial>>,
    /// `Q(bottom, up(bottom)[i])`.
    q_bottom: Vec<IntPolynomial>,
}

fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

impl<'a> KlsEngine<'a> {
    pub fn new(lat: &'a FlatLattice) -> Result<Self, KlsError> {
        let mut engine = KlsEngine {
            lat,
            p: vec![Vec::new(); lat.len()],
            q_bottom: Vec::new(),
        };
        for x in (0..lat.len()).rev() {
            engine.fill_p_row(x)?;
        }
        engine.fill_q_bottom()?;
        Ok(engine)
    }

    fn pos(&self, x: usize, y: usize) -> Option<usize> {
        self.lat.up(x).binary_search(&y).ok()
    }

    /// `P` of the interval `[x, y]`, zero if `x` is not below `y`.
    pub fn p(&self, x: usize, y: usize) -> IntPolynomial {
        self.pos(x, y).map(|i| self.p[x][i].clone()).unwrap_or_default()
    }

    fn p_ref(&self, x: usize, y: usize) -> &IntPolynomial {
        &self.p[x][self.pos(x, y).expect("comparable flats")]
    }

    /// `Q` of the interval `[bottom, y]`.
    pub fn q_from_bottom(&self, y: usize) -> IntPolynomial {
        self.pos(0, y).map(|i| self.q_bottom[i].clone()).unwrap_or_default()
    }

    /// `chi` of `[x, z]` for every `z` above `x`.
    fn chi_row(&self, x: usize) -> Vec<IntPolynomial> {
        let up = self.lat.up(x);
        let mu = self.lat.mobius_row(x);
        up.iter()
            .map(|&z| {
                let rz = self.lat.rank(z);
                let mut coeffs = vec![0i64; rz - self.lat.rank(x) + 1];
                for (pw, &w) in up.iter().enumerate() {
                    if w > z {
                        break;
                    }
                    if self.lat.leq(w, z) {
                        coeffs[rz - self.lat.rank(w)] += mu[pw];
                    }
                }
                IntPolynomial::from_i64s(&coeffs)
            })
            .collect()
    }

    /// Solves `t^r P(1/t) - P(t) = sum_{x < z <= y} chi(x, z) P(z, y)` for
    /// every `y` above `x`.
    fn fill_p_row(&mut self, x: usize) -> Result<(), KlsError> {
        let lat = self.lat;
        let up = lat.up(x);
        let chi = self.chi_row(x);
        let mut row = Vec::with_capacity(up.len());
        for &y in up {
            let r = lat.rank(y) - lat.rank(x);
            if y == x {
                row.push(IntPolynomial::one());
                continue;
            }
            let mut rhs = IntPolynomial::zero();
            for (pz, &z) in up.iter().enumerate().skip(1) {
                if z > y {
                    break;
                }
                if lat.leq(z, y) {
                    rhs = &rhs + &(&chi[pz] * self.p_ref(z, y));
                }
            }
            let mut coeffs = vec![BigInt::zero(); r.div_ceil(2)];
            for (i, c) in coeffs.iter_mut().enumerate() {
                *c = -rhs.coeff(i);
            }
            let p = IntPolynomial::new(coeffs);
            // the upper half of the right side must mirror the lower half
            let mirrored = &p.reversed(r) - &p;
            if mirrored != rhs {
                return Err(KlsError::Inconsistent {
                    rank: r,
                    detail: format!("P = {p}, right side = {rhs}"),
                });
            }
            row.push(p);
        }
        self.p[x] = row;
        Ok(())
    }

    /// `Q(bottom, y)` from `sum_{z} (-1)^{rk z} Q(bottom, z) P(z, y) = 0`.
    fn fill_q_bottom(&mut self) -> Result<(), KlsError> {
        let lat = self.lat;
        let up = lat.up(0);
        let base = lat.rank(0);
        let mut q: Vec<IntPolynomial> = Vec::with_capacity(up.len());
        for (py, &y) in up.iter().enumerate() {
            let r = lat.rank(y) - base;
            if py == 0 {
                q.push(IntPolynomial::one());
                continue;
            }
            let mut acc = IntPolynomial::zero();
            for (pz, &z) in up[..py].iter().enumerate() {
                if lat.leq(z, y) {
                    let term = &q[pz] * self.p_ref(z, y);
                    acc.add_scaled(&term, &sign(lat.rank(z) - base));
                }
            }
            let val = acc.scale(&-sign(r));
            if r >= 1 && val.degree().is_some_and(|d| 2 * d >= r) {
                return Err(KlsError::DegreeBound {
                    which: "Q",
                    degree: val.degree().unwrap_or(0),
                    rank: r,
                });
            }
            q.push(val);
        }
        self.q_bottom = q;
        Ok(())
    }

    /// `P` of the whole lattice.
    pub fn kl_p(&self) -> IntPolynomial {
        self.p(0, self.lat.top())
    }

    pub fn inv_kl_q(&self) -> IntPolynomial {
        self.q_from_bottom(self.lat.top())
    }

    /// `Z = sum_F t^{rk F} P(F, E)`, checked palindromic.
    pub fn z_poly(&self) -> Result<IntPolynomial, KlsError> {
        let lat = self.lat;
        let top = lat.top();
        let r = lat.rank_of_top() - lat.rank(0);
        let mut z = IntPolynomial::zero();
        for f in 0..lat.len() {
            z = &z + &self.p_ref(f, top).shift(lat.rank(f) - lat.rank(0));
        }
        if !z.is_palindromic(r) {
            return Err(KlsError::NotPalindromic { which: "Z", poly: z, rank: r });
        }
        Ok(z)
    }

    /// `Y = (-1)^{rk M} sum_F (-1)^{rk F} t^{rk M - rk F} Q(M|F) mu(F, E)`,
    /// checked palindromic and nonnegative.
    pub fn inv_z_y(&self) -> Result<IntPolynomial, KlsError> {
        let lat = self.lat;
        let r = lat.rank_of_top() - lat.rank(0);
        let mu_top = lat.mobius_top();
        let mut y = IntPolynomial::zero();
        for (pf, &f) in lat.up(0).iter().enumerate() {
            let rf = lat.rank(f) - lat.rank(0);
            let c = sign(r) * sign(rf) * BigInt::from(mu_top[f]);
            y.add_scaled(&self.q_bottom[pf].shift(r - rf), &c);
        }
        if !y.is_palindromic(r) {
            return Err(KlsError::NotPalindromic { which: "Y", poly: y, rank: r });
        }
        if !y.is_nonnegative() {
            return Err(KlsError::Negative { which: "Y", poly: y });
        }
        Ok(y)
    }
}

/// All ordinary invariants of one matroid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlsInvariants {
    pub char_poly: IntPolynomial,
    pub kl_p: IntPolynomial,
    pub inv_kl_q: IntPolynomial,
    pub z: IntPolynomial,
    pub y: IntPolynomial,
}

impl KlsInvariants {
    fn zero() -> Self {
        KlsInvariants {
            char_poly: IntPolynomial::zero(),
            kl_p: IntPolynomial::zero(),
            inv_kl_q: IntPolynomial::zero(),
            z: IntPolynomial::zero(),
            y: IntPolynomial::zero(),
        }
    }
}

/// Computes `chi`, `P`, `Q`, `Z` and `Y`. A matroid with loops gets the zero
/// polynomial for all of them.
pub fn invariants(m: &Matroid) -> Result<KlsInvariants, KlsError> {
    if m.has_loops() {
        return Ok(KlsInvariants::zero());
    }
    let lat = m.flats();
    let engine = KlsEngine::new(&lat)?;
    let r = m.rank_of_matroid();
    let kl_p = engine.kl_p();
    if r >= 1 && kl_p.degree().is_some_and(|d| 2 * d >= r) {
        return Err(KlsError::DegreeBound {
            which: "P",
            degree: kl_p.degree().unwrap_or(0),
            rank: r,
        });
    }
    Ok(KlsInvariants {
        char_poly: lat.char_poly(),
        inv_kl_q: engine.inv_kl_q(),
        z: engine.z_poly()?,
        y: engine.inv_z_y()?,
        kl_p,
    })
}

pub fn kl_p(m: &Matroid) -> Result<IntPolynomial, KlsError> {
    invariants(m).map(|i| i.kl_p)
}

pub fn inv_kl_q(m: &Matroid) -> Result<IntPolynomial, KlsError> {
    invariants(m).map(|i| i.inv_kl_q)
}

pub fn z_poly(m: &Matroid) -> Result<IntPolynomial, KlsError> {
    invariants(m).map(|i| i.z)
}

/// Inverse Z-polynomial, the quantity most checks compare against.
pub fn inv_z_y(m: &Matroid) -> Result<IntPolynomial, KlsError> {
    if m.has_loops() {
        return Ok(IntPolynomial::zero());
    }
    let lat = m.flats();
    KlsEngine::new(&lat)?.inv_z_y()
}
