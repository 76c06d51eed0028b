//! Monopole sectors `H_κ`: block matrices `F_n → F_{n+κ}` on the truncated Fock space.
//!
//! A sector element is stored as the concatenation of its blocks in ascending input
//! level `n`; each block is an `(n+κ+1) × (n+1)` matrix stored row-major, rows
//! indexed by the output state and columns by the input state.

use std::f64::consts::PI;

use ndarray::{Array2, ArrayView2};
use serde::{Deserialize, Serialize};

use crate::{Error, Result, C64, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonopoleSector {
    kappa: i32,
    n_max: usize,
    lambda: f64,
}

impl MonopoleSector {
    pub fn new(kappa: i32, n_max: usize, lambda: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::InvalidLambda(lambda));
        }
        Ok(Self {
            kappa,
            n_max,
            lambda,
        })
    }

    pub fn kappa(&self) -> i32 {
        self.kappa
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Monopole charge `μ = −κ/2`.
    pub fn charge(&self) -> f64 {
        -(self.kappa as f64) / 2.0
    }

    /// The sector with grade `κ + shift` on the same truncation.
    pub fn shifted(&self, shift: i32) -> Self {
        Self {
            kappa: self.kappa + shift,
            ..*self
        }
    }

    pub fn is_empty(&self) -> bool {
        self.kappa.unsigned_abs() as usize > self.n_max
    }

    /// Smallest admissible input level.
    pub fn n_lo(&self) -> usize {
        (-self.kappa).max(0) as usize
    }

    /// One past the largest admissible input level.
    pub fn n_end(&self) -> usize {
        if self.is_empty() {
            self.n_lo()
        } else {
            (self.n_max as i64 - self.kappa.max(0) as i64 + 1) as usize
        }
    }

    pub fn contains_block(&self, n: usize) -> bool {
        n >= self.n_lo() && n < self.n_end()
    }

    /// Admissible input levels `n` with `0 ≤ n, n+κ ≤ n_max`.
    pub fn blocks(&self) -> std::ops::Range<usize> {
        self.n_lo()..self.n_end()
    }

    pub fn out_level(&self, n: usize) -> usize {
        (n as i64 + self.kappa as i64) as usize
    }

    /// `(rows, cols)` of the block with input level `n`.
    pub fn block_shape(&self, n: usize) -> (usize, usize) {
        (self.out_level(n) + 1, n + 1)
    }

    pub fn block_dim(&self, n: usize) -> usize {
        let (r, c) = self.block_shape(n);
        r * c
    }

    /// Offset of block `n` inside a flattened sector vector.
    pub fn block_offset(&self, n: usize) -> usize {
        (self.n_lo()..n).map(|k| self.block_dim(k)).sum()
    }

    pub fn dim(&self) -> usize {
        self.blocks().map(|n| self.block_dim(n)).sum()
    }

    /// Eigenvalue `λ(n + 1 + κ/2)` of the symmetrized radius on block `n`.
    pub fn r_hat(&self, n: usize) -> f64 {
        self.lambda * (n as f64 + 1.0 + self.kappa as f64 / 2.0)
    }

    pub fn r_hat_eigen(&self) -> Vec<f64> {
        self.blocks().map(|n| self.r_hat(n)).collect()
    }

    /// Largest Fock level touched by block `n`.
    pub fn top_level(&self, n: usize) -> usize {
        n.max(self.out_level(n))
    }

    pub fn same_space(&self, other: &Self) -> bool {
        self.kappa == other.kappa && self.n_max == other.n_max && self.lambda == other.lambda
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_space(other) {
            Ok(())
        } else {
            Err(Error::SectorMismatch {
                left: self.kappa,
                left_n_max: self.n_max,
                right: other.kappa,
                right_n_max: other.n_max,
            })
        }
    }
}

pub fn build_sector(kappa: i32, n_max: usize, lambda: f64) -> Result<MonopoleSector> {
    MonopoleSector::new(kappa, n_max, lambda)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorVector {
    sector: MonopoleSector,
    data: Vec<C64>,
}

impl SectorVector {
    pub fn zeros(sector: MonopoleSector) -> Self {
        Self {
            data: vec![ZERO; sector.dim()],
            sector,
        }
    }

    pub fn from_vec(sector: MonopoleSector, data: Vec<C64>) -> Result<Self> {
        if data.len() != sector.dim() {
            return Err(Error::DimensionMismatch {
                expected: sector.dim(),
                found: data.len(),
            });
        }
        Ok(Self { sector, data })
    }

    /// Matrix unit `|out⟩⟨in|` inside block `n`.
    pub fn unit(sector: MonopoleSector, n: usize, out: usize, inp: usize) -> Self {
        let mut v = Self::zeros(sector);
        let (_, cols) = sector.block_shape(n);
        v.data[sector.block_offset(n) + out * cols + inp] = C64::new(1.0, 0.0);
        v
    }

    pub fn sector(&self) -> &MonopoleSector {
        &self.sector
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<C64> {
        self.data
    }

    pub fn block(&self, n: usize) -> ArrayView2<'_, C64> {
        let shape = self.sector.block_shape(n);
        let off = self.sector.block_offset(n);
        ArrayView2::from_shape(shape, &self.data[off..off + shape.0 * shape.1])
            .expect("block shape is consistent with sector layout")
    }

    /// Rebuild a vector from per-block matrices; missing blocks are zero.
    pub fn from_blocks(
        sector: MonopoleSector,
        mut block: impl FnMut(usize) -> Option<Array2<C64>>,
    ) -> Self {
        let mut data = Vec::with_capacity(sector.dim());
        for n in sector.blocks() {
            let shape = sector.block_shape(n);
            match block(n) {
                Some(m) => {
                    assert_eq!(m.dim(), shape, "block {n} has wrong shape");
                    data.extend(m.iter().copied());
                }
                None => data.extend(std::iter::repeat(ZERO).take(shape.0 * shape.1)),
            }
        }
        Self { sector, data }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn axpy(&mut self, a: C64, x: &SectorVector) {
        for (y, v) in self.data.iter_mut().zip(&x.data) {
            *y += a * v;
        }
    }

    /// Conjugation by `e^{−iτN̂}`: `Ψ ↦ e^{−iτN̂} Ψ e^{iτN̂}`, i.e. the substitution
    /// `a → e^{iτ}a`, `a⁺ → e^{−iτ}a⁺` applied to the state.
    pub fn phase_rotate(&self, tau: f64) -> Self {
        let s = self.sector;
        Self::from_blocks(s, |n| {
            let m = s.out_level(n) as f64;
            let left = C64::from_polar(1.0, -tau * m);
            let right = C64::from_polar(1.0, tau * n as f64);
            Some(self.block(n).mapv(|z| left * z * right))
        })
    }
}

/// `(Φ, Ψ) = 4πλ² Tr[Φ⁺ r̂ Ψ]`.
pub fn inner_product(phi: &SectorVector, psi: &SectorVector) -> Result<C64> {
    phi.sector().check_same(psi.sector())?;
    let s = psi.sector;
    let mut acc = ZERO;
    for n in s.blocks() {
        let off = s.block_offset(n);
        let len = s.block_dim(n);
        let block: C64 = phi.data[off..off + len]
            .iter()
            .zip(&psi.data[off..off + len])
            .map(|(a, b)| a.conj() * b)
            .sum();
        acc += block * s.r_hat(n);
    }
    Ok(acc * (4.0 * PI * s.lambda() * s.lambda()))
}

/// Symmetrized radius `½(rΨ + Ψr)` with `r = λ(N̂+1)`, computed directly from the
/// Fock-space radius. Used as an oracle for [`MonopoleSector::r_hat`].
pub fn symmetrized_radius(psi: &SectorVector) -> SectorVector {
    let s = *psi.sector();
    let lam = s.lambda();
    SectorVector::from_blocks(s, |n| {
        let r_out = lam * (s.out_level(n) as f64 + 1.0);
        let r_in = lam * (n as f64 + 1.0);
        Some(psi.block(n).mapv(|z| 0.5 * (z * r_out + z * r_in)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn block_enumeration() {
        let s = build_sector(0, 1, 1.0).unwrap();
        assert_eq!(s.blocks(), 0..2);
        assert_eq!(s.dim(), 5);
        let s = build_sector(1, 2, 1.0).unwrap();
        assert_eq!(s.blocks(), 0..2);
        assert_eq!(s.dim(), 8);
        let s = build_sector(-2, 3, 1.0).unwrap();
        assert_eq!(s.blocks(), 2..4);
        assert_eq!(s.dim(), 3 + 2 * 4);
        let s = build_sector(5, 3, 1.0).unwrap();
        assert!(s.is_empty());
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn radius_eigenvalues() {
        let s = build_sector(0, 4, 1.0).unwrap();
        assert_eq!(s.r_hat(0), 1.0);
        assert_eq!(s.r_hat(2), 3.0);
        let s = build_sector(-3, 6, 0.5).unwrap();
        assert!(s.r_hat_eigen().iter().all(|&r| r > 0.0));
        assert_eq!(s.charge(), 1.5);
    }

    #[test]
    fn rejects_bad_lambda() {
        assert!(build_sector(0, 3, 0.0).is_err());
        assert!(build_sector(0, 3, -1.0).is_err());
        assert!(build_sector(0, 3, f64::NAN).is_err());
    }

    #[test]
    fn vacuum_norm() {
        let lam = 1.7;
        let s = build_sector(0, 3, lam).unwrap();
        let v = SectorVector::unit(s, 0, 0, 0);
        let ip = inner_product(&v, &v).unwrap();
        assert_relative_eq!(ip.re, 4.0 * PI * lam.powi(3), max_relative = 1e-15);
        let w = SectorVector::unit(s, 2, 1, 0);
        assert_eq!(inner_product(&v, &w).unwrap(), ZERO);
    }

    #[test]
    fn mismatch_is_reported() {
        let a = SectorVector::zeros(build_sector(0, 3, 1.0).unwrap());
        let b = SectorVector::zeros(build_sector(1, 3, 1.0).unwrap());
        assert!(matches!(
            inner_product(&a, &b),
            Err(Error::SectorMismatch { .. })
        ));
    }

    #[test]
    fn symmetrized_radius_matches_eigenvalue() {
        for kappa in -3..=3 {
            let s = build_sector(kappa, 5, 1.3).unwrap();
            for n in s.blocks() {
                let v = SectorVector::unit(s, n, 0, 0);
                let r = symmetrized_radius(&v);
                assert_relative_eq!(r.block(n)[[0, 0]].re, s.r_hat(n), max_relative = 1e-15);
            }
        }
    }

    #[test]
    fn phase_grading() {
        let s = build_sector(3, 6, 1.0).unwrap();
        let v = SectorVector::unit(s, 2, 4, 1);
        for tau in [std::f64::consts::PI / 7.0, 1.0, 2.5] {
            let r = v.phase_rotate(tau);
            let expect = C64::from_polar(1.0, -tau * 3.0);
            for (a, b) in r.data().iter().zip(v.data()) {
                assert!((a - expect * b).norm() < 1e-15);
            }
        }
    }
}
