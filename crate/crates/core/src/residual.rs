//! Guarded windows and the residual metric.
//!
//! An identity between two operators built from words with at most `g` quadratic
//! factors is compared on input blocks `n` with `max(n, n+κ) + g ≤ n_max`. On those
//! blocks neither side ever needs a Fock state above the cutoff, so the comparison
//! is a pure floating-point statement. Annihilation on the vacuum is exact in the
//! hard cutoff, so no guard is needed at the bottom.
//!
//! The residual is `‖L−R‖_F / max(1, ‖L‖_F, ‖R‖_F)` over the window columns. Input
//! blocks whose columns contain a non-finite value (a radial pole) are dropped from
//! the metric and reported.

use std::collections::BTreeSet;

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::algebra::superop::SuperOp;
use crate::sector::MonopoleSector;
use crate::C64;

#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    pub sector: MonopoleSector,
    pub guard: usize,
    pub blocks: Vec<usize>,
}

impl Window {
    pub fn new(sector: MonopoleSector, guard: usize) -> Self {
        let blocks = sector
            .blocks()
            .filter(|&n| sector.top_level(n) + guard <= sector.n_max())
            .collect();
        Self {
            sector,
            guard,
            blocks,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub residual: f64,
    /// Input blocks dropped because a side is non-finite there.
    pub excluded: BTreeSet<usize>,
}

impl Comparison {
    /// Worst case of two comparisons.
    pub fn merge(mut self, other: Comparison) -> Comparison {
        self.residual = self.residual.max(other.residual);
        self.excluded.extend(other.excluded);
        self
    }

    pub fn exact(residual: f64) -> Comparison {
        Comparison {
            residual,
            excluded: BTreeSet::new(),
        }
    }
}

/// Residual of `lhs = rhs` on the window columns.
pub fn compare(lhs: &SuperOp, rhs: &SuperOp, window: &Window) -> Comparison {
    let mut excluded = BTreeSet::new();
    let (mut d, mut l, mut r) = (0.0, 0.0, 0.0);
    for &n in &window.blocks {
        if !(lhs.column_is_finite(n) && rhs.column_is_finite(n)) {
            excluded.insert(n);
            continue;
        }
        d += lhs.column_diff_norm_sqr(rhs, n);
        l += lhs.column_norm_sqr(n);
        r += rhs.column_norm_sqr(n);
    }
    Comparison {
        residual: d.sqrt() / 1f64.max(l.sqrt()).max(r.sqrt()),
        excluded,
    }
}

/// Worst residual of `lhs = rhs` over single basis elements: the maximum over window
/// basis vectors `e` of `‖(L−R)e‖ / max(1, ‖Le‖, ‖Re‖)`.
pub fn compare_basis(lhs: &SuperOp, rhs: &SuperOp, window: &Window) -> Comparison {
    let mut excluded = BTreeSet::new();
    let mut worst: f64 = 0.0;
    for &n in &window.blocks {
        if !(lhs.column_is_finite(n) && rhs.column_is_finite(n)) {
            excluded.insert(n);
            continue;
        }
        let cols = lhs.src().block_dim(n);
        let mut outs: Vec<usize> = lhs
            .blocks()
            .keys()
            .chain(rhs.blocks().keys())
            .filter(|(_, i)| *i == n)
            .map(|(o, _)| *o)
            .collect();
        outs.sort_unstable();
        outs.dedup();
        let (mut d, mut l, mut r) = (vec![0.0; cols], vec![0.0; cols], vec![0.0; cols]);
        for o in outs {
            let rows = lhs.tgt().block_dim(o);
            let zero = || Array2::from_elem((rows, cols), C64::new(0.0, 0.0));
            let a = lhs.dense_block(o, n).unwrap_or_else(zero);
            let b = rhs.dense_block(o, n).unwrap_or_else(zero);
            for j in 0..cols {
                for i in 0..rows {
                    d[j] += (a[[i, j]] - b[[i, j]]).norm_sqr();
                    l[j] += a[[i, j]].norm_sqr();
                    r[j] += b[[i, j]].norm_sqr();
                }
            }
        }
        for j in 0..cols {
            worst = worst.max(d[j].sqrt() / 1f64.max(l[j].sqrt()).max(r[j].sqrt()));
        }
    }
    Comparison {
        residual: worst,
        excluded,
    }
}

/// Residual of `op = 0` on the window columns.
pub fn compare_zero(op: &SuperOp, window: &Window) -> Comparison {
    compare(op, &SuperOp::zero(*op.src(), *op.tgt()), window)
}

/// Worst residual over a list of `(lhs, rhs)` pairs.
pub fn compare_all<'a>(
    pairs: impl IntoIterator<Item = (&'a SuperOp, &'a SuperOp)>,
    window: &Window,
) -> Comparison {
    pairs
        .into_iter()
        .map(|(a, b)| compare(a, b, window))
        .fold(Comparison::default(), Comparison::merge)
}

pub fn frobenius(m: &Array2<C64>) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Relative residual of two dense matrices.
pub fn relative(lhs: &Array2<C64>, rhs: &Array2<C64>) -> f64 {
    let d = frobenius(&(lhs - rhs));
    d / 1f64.max(frobenius(lhs)).max(frobenius(rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::radial::{radial_multiplier, RadialFunction};
    use crate::sector::build_sector;

    #[test]
    fn window_bounds() {
        let s = build_sector(2, 6, 1.0).unwrap();
        assert_eq!(Window::new(s, 0).blocks, vec![0, 1, 2, 3, 4]);
        assert_eq!(Window::new(s, 2).blocks, vec![0, 1, 2]);
        let s = build_sector(-2, 6, 1.0).unwrap();
        assert_eq!(Window::new(s, 2).blocks, vec![2, 3, 4]);
        assert!(Window::new(s, 7).is_empty());
    }

    #[test]
    fn metric_is_scale_free() {
        let s = build_sector(0, 4, 1.0).unwrap();
        let w = Window::new(s, 0);
        let a = SuperOp::scalar(s, C64::new(1e6, 0.0));
        let b = SuperOp::scalar(s, C64::new(1e6 * (1.0 + 1e-12), 0.0));
        assert!(compare(&a, &b, &w).residual < 2e-12);
        let z = SuperOp::zero(s, s);
        assert_eq!(compare(&z, &z, &w).residual, 0.0);
    }

    #[test]
    fn basis_metric_is_per_element() {
        let s = build_sector(1, 3, 1.0).unwrap();
        let w = Window::new(s, 0);
        let a = SuperOp::identity(s);
        let mut b = SuperOp::identity(s);
        b = b.try_add_scaled(C64::new(1e-3, 0.0), &SuperOp::block_diagonal(s, |n| C64::new(n as f64, 0.0))).unwrap();
        let c = compare_basis(&a, &b, &w);
        assert_eq!(w.blocks, vec![0, 1, 2]);
        assert!((c.residual - 2e-3 / (1.0 + 2e-3)).abs() < 1e-15);
    }

    #[test]
    fn poles_are_reported() {
        let s = build_sector(0, 4, 1.0).unwrap();
        let w = Window::new(s, 0);
        let f = radial_multiplier(&RadialFunction::linear_power(2.0, -1), s);
        let c = compare(&f, &f, &w);
        assert_eq!(c.excluded.into_iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(c.residual, 0.0);
    }
}
