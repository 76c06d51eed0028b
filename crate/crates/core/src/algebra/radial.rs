//! Radial functional calculus: rational functions of `r̂` with λ-shifts.
//!
//! A [`RadialFunction`] is a finite sum of terms `c · Π_j (r − c_j λ)^{p_j}`. Shifting
//! `f(r) ↦ f(r + sλ)` moves every centre by `−s`, so shifted copies stay in closed
//! form and poles are always known exactly.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::superop::SuperOp;
use crate::sector::MonopoleSector;
use crate::C64;

/// Relative distance (in units of λ) below which an evaluation counts as a pole.
pub const POLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    /// Centre in units of λ.
    pub center: f64,
    pub power: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: f64,
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RadialFunction {
    terms: Vec<Term>,
}

impl RadialFunction {
    pub fn constant(c: f64) -> Self {
        Self {
            terms: vec![Term {
                coeff: c,
                factors: Vec::new(),
            }],
        }
    }

    /// `(r − center·λ)^power`.
    pub fn linear_power(center: f64, power: i32) -> Self {
        Self {
            terms: vec![Term {
                coeff: 1.0,
                factors: vec![Factor { center, power }],
            }],
        }
    }

    pub fn r() -> Self {
        Self::power(1)
    }

    pub fn power(p: i32) -> Self {
        Self::linear_power(0.0, p)
    }

    pub fn inv_r() -> Self {
        Self::power(-1)
    }

    /// `1 / (r (r² − λ²))`.
    pub fn monopole_denominator() -> Self {
        Self::inv_r()
            .mul(&Self::linear_power(1.0, -1))
            .mul(&Self::linear_power(-1.0, -1))
    }

    /// `Q = (r − λ)/(r + λ)`.
    pub fn q_factor() -> Self {
        Self::linear_power(1.0, 1).mul(&Self::linear_power(-1.0, -1))
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// `f(r) ↦ f(r + s·λ)`.
    pub fn shifted(&self, s: f64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    factors: t
                        .factors
                        .iter()
                        .map(|f| Factor {
                            center: f.center - s,
                            power: f.power,
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        Self { terms }
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff * c,
                    factors: t.factors.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(-1.0))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().cloned());
                terms.push(Term {
                    coeff: a.coeff * b.coeff,
                    factors,
                });
            }
        }
        Self { terms }
    }

    /// `Δ₊ f = f(r + λ)`.
    pub fn delta_plus(&self) -> Self {
        self.shifted(1.0)
    }

    /// `Δ₋ f = f(r − λ)`.
    pub fn delta_minus(&self) -> Self {
        self.shifted(-1.0)
    }

    /// `(Δ₊ + Δ₋ − 2) f / λ²`.
    pub fn second_difference(&self, lambda: f64) -> Self {
        self.delta_plus()
            .add(&self.delta_minus())
            .sub(&self.scale(2.0))
            .scale(1.0 / (lambda * lambda))
    }

    /// `(Δ₊ − Δ₋) f / 2λ`.
    pub fn first_difference(&self, lambda: f64) -> Self {
        self.delta_plus()
            .sub(&self.delta_minus())
            .scale(0.5 / lambda)
    }

    /// `𝒟 f = (1 + (Δ₊+Δ₋−2)/2 + r (Δ₊−Δ₋)/2λ) f`.
    pub fn script_d(&self, lambda: f64) -> Self {
        let second = self.second_difference(lambda).scale(0.5 * lambda * lambda);
        let first = Self::r().mul(&self.first_difference(lambda));
        self.add(&second).add(&first)
    }

    /// Poles as radii (absolute units).
    pub fn poles(&self, lambda: f64) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .terms
            .iter()
            .flat_map(|t| t.factors.iter())
            .filter(|f| f.power < 0)
            .map(|f| f.center * lambda)
            .collect();
        out.sort_by(|a, b| a.total_cmp(b));
        out.dedup();
        out
    }

    /// Value at `r`, or `None` within `POLE_TOLERANCE·λ` of a pole.
    pub fn eval(&self, r: f64, lambda: f64) -> Option<f64> {
        let mut acc = 0.0;
        for t in &self.terms {
            let mut v = t.coeff;
            for f in &t.factors {
                let base = r - f.center * lambda;
                if f.power < 0 && base.abs() < POLE_TOLERANCE * lambda {
                    return None;
                }
                v *= base.powi(f.power);
            }
            acc += v;
        }
        Some(acc)
    }

    /// Blocks of `sector` on which `f` has a pole.
    pub fn pole_blocks(&self, sector: &MonopoleSector) -> Vec<usize> {
        sector
            .blocks()
            .filter(|&n| self.eval(sector.r_hat(n), sector.lambda()).is_none())
            .collect()
    }
}

impl fmt::Display for RadialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", t.coeff)?;
            for fac in &t.factors {
                if fac.center == 0.0 {
                    write!(f, "·r^{}", fac.power)?;
                } else {
                    write!(f, "·(r{:+}λ)^{}", -fac.center, fac.power)?;
                }
            }
        }
        Ok(())
    }
}

/// Diagonal multiplier `f(r̂)`; pole blocks carry NaN so they are excluded downstream.
pub fn radial_multiplier(f: &RadialFunction, sector: MonopoleSector) -> SuperOp {
    let lam = sector.lambda();
    SuperOp::block_diagonal(sector, |n| {
        C64::new(f.eval(sector.r_hat(n), lam).unwrap_or(f64::NAN), 0.0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sector::build_sector;

    #[test]
    fn evaluation_and_shift() {
        let f = RadialFunction::r().mul(&RadialFunction::r());
        assert_eq!(f.eval(3.0, 1.0), Some(9.0));
        assert_eq!(f.shifted(1.0).eval(3.0, 1.0), Some(16.0));
        assert_eq!(f.second_difference(1.0).eval(3.0, 1.0), Some(2.0));
        assert_eq!(f.first_difference(1.0).eval(3.0, 1.0), Some(6.0));
    }

    #[test]
    fn pole_detection() {
        let s = build_sector(0, 5, 1.0).unwrap();
        let f = RadialFunction::linear_power(2.0, -1);
        assert_eq!(f.pole_blocks(&s), vec![1]);
        assert!(RadialFunction::inv_r().pole_blocks(&s).is_empty());
        let m = radial_multiplier(&f, s);
        assert!(!m.column_is_finite(1));
        assert!(m.column_is_finite(0));
    }

    #[test]
    fn script_d_annihilates_inverse_radius() {
        let lam = 0.8;
        let d = RadialFunction::inv_r().script_d(lam);
        for k in 3..40 {
            let r = lam * (k as f64) / 2.0;
            assert!(d.eval(r, lam).unwrap().abs() < 1e-14);
        }
    }

    #[test]
    fn identity_eigenvalue() {
        let s = build_sector(0, 4, 1.0).unwrap();
        let m = radial_multiplier(&RadialFunction::r(), s);
        assert_eq!(m.dense_block(2, 2).unwrap()[[0, 0]].re, 3.0);
    }

    #[test]
    fn display_is_readable() {
        let f = RadialFunction::q_factor();
        assert_eq!(f.to_string(), "1·(r-1λ)^1·(r+1λ)^-1");
    }
}
