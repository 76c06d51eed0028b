//! Field strength `F̂_ab`, the symmetric tensor `Ĝ_ab`, and the monopole charge.

use ndarray::Array2;

use crate::algebra::operators::Algebra;
use crate::algebra::radial::RadialFunction;
use crate::algebra::superop::SuperOp;
use crate::conventions::{eps3, eps4};
use crate::monopole::velocity::{combo, VelocityFamily};
use crate::residual::{compare, compare_zero, Comparison, Window};
use crate::{C64, I};

#[derive(Debug, Clone)]
pub struct FieldStrength {
    /// `[V̂_a, V̂_b] = iF̂_ab`.
    pub f: Vec<Vec<SuperOp>>,
    /// `[V̂_a, Ṽ_bˢ] = iĜ_ab` with the structural dual.
    pub g: Vec<Vec<SuperOp>>,
    /// `Q̂ = (r̂−λ)/(r̂+λ)`.
    pub q: SuperOp,
}

pub fn field_strength(alg: &Algebra, vel: &VelocityFamily) -> FieldStrength {
    let build = |dual: &[SuperOp; 4]| -> Vec<Vec<SuperOp>> {
        (0..4)
            .map(|a| (0..4).map(|b| vel.v[a].commutator(&dual[b]).scale(-I)).collect())
            .collect()
    };
    FieldStrength {
        f: build(&vel.v),
        g: build(&vel.vt_dual),
        q: alg.radial(&RadialFunction::q_factor()),
    }
}

/// `−iλ P Ŝ`, the closed-form shape with `P = 1/(r̂(r̂²−λ²))`.
fn monopole_shape(alg: &Algebra, s: &SuperOp) -> SuperOp {
    let p = alg.radial(&RadialFunction::monopole_denominator());
    (&p * s).scale(-I * alg.lambda())
}

impl FieldStrength {
    /// `[V̂_a, V̂_b]`.
    pub fn commutator(&self, a: usize, b: usize) -> SuperOp {
        self.f[a][b].scale(I)
    }

    /// `[V̂_i,V̂_j] = −iλ(κ/2) P ε_ijk Ŝ_k4`.
    pub fn closed_form(&self, alg: &Algebra, window: &Window) -> Comparison {
        let half_k = alg.sector().kappa() as f64 / 2.0;
        let mut out = Comparison::default();
        for i in 0..3 {
            for j in 0..3 {
                let s = *alg.sector();
                let terms: Vec<(C64, &SuperOp)> = (0..3)
                    .filter(|&k| eps3(i, j, k) != 0.0)
                    .map(|k| (C64::new(eps3(i, j, k), 0.0), alg.s(k + 1, 4)))
                    .collect();
                let rhs = monopole_shape(alg, &combo(s, terms)).scale_re(half_k);
                out = out.merge(compare(&self.commutator(i, j), &rhs, window));
            }
        }
        out
    }

    /// `[V̂_a,V̂_b] = −iλ(κ/2) P · c·ε_abcd Ŝ_cd`; `c = ½` holds, `c = 1` is the literal form.
    pub fn so4_form(&self, alg: &Algebra, window: &Window, c: f64) -> Comparison {
        let s = *alg.sector();
        let half_k = s.kappa() as f64 / 2.0;
        let mut out = Comparison::default();
        for a in 0..4 {
            for b in 0..4 {
                let terms: Vec<(C64, &SuperOp)> = (0..4)
                    .flat_map(|x| (0..4).map(move |y| (x, y)))
                    .filter(|&(x, y)| eps4(a, b, x, y) != 0.0)
                    .map(|(x, y)| (C64::new(c * half_k * eps4(a, b, x, y), 0.0), alg.s(x + 1, y + 1)))
                    .collect();
                let rhs = monopole_shape(alg, &combo(s, terms));
                out = out.merge(compare(&self.commutator(a, b), &rhs, window));
            }
        }
        out
    }

    /// Least-squares coefficient `c` in `[V̂₁,V̂₂] ≈ c·(−iλPŜ₃₄)`, with the blocks
    /// dropped at poles of `P`.
    pub fn charge_fit(&self, alg: &Algebra, window: &Window) -> (f64, Comparison) {
        let basis = monopole_shape(alg, alg.s(3, 4));
        let lhs = self.commutator(0, 1);
        let (mut num, mut den) = (C64::new(0.0, 0.0), 0.0);
        let mut excluded = Comparison::default();
        for &n in &window.blocks {
            if !basis.column_is_finite(n) {
                excluded.excluded.insert(n);
                continue;
            }
            num += basis.column_inner(&lhs, n);
            den += basis.column_norm_sqr(n);
        }
        let c = if den > 0.0 { num.re / den } else { 0.0 };
        (c, excluded)
    }

    /// `‖[V̂_i,V̂_j]‖` against zero, for the sector without monopole.
    pub fn flat(&self, window: &Window) -> Comparison {
        (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| compare_zero(&self.commutator(i, j), window))
            .fold(Comparison::default(), Comparison::merge)
    }

    pub fn antisymmetry(&self, window: &Window) -> Comparison {
        pairs()
            .map(|(a, b)| compare(&self.f[a][b], &-&self.f[b][a], window))
            .fold(Comparison::default(), Comparison::merge)
    }

    pub fn g_symmetry(&self, window: &Window) -> Comparison {
        pairs()
            .map(|(a, b)| compare(&self.g[a][b], &self.g[b][a], window))
            .fold(Comparison::default(), Comparison::merge)
    }

    /// `Ĝ = g₀·δ + Ĝ'` with `g₀ = ¼ Tr Ĝ` and `Ĝ'` traceless.
    pub fn g_decomposition(&self) -> (SuperOp, Vec<Vec<SuperOp>>) {
        let s = *self.q.src();
        let quarter = C64::new(0.25, 0.0);
        let trace = combo(s, (0..4).map(|a| (quarter, &self.g[a][a])));
        let traceless = (0..4)
            .map(|a| {
                (0..4)
                    .map(|b| if a == b { &self.g[a][b] - &trace } else { self.g[a][b].clone() })
                    .collect()
            })
            .collect();
        (trace, traceless)
    }

    /// Per-block spectral norms `(n, r̂_n, ‖F̂₁₂‖, ‖Ŝ₃₄‖)` on the level-diagonal blocks.
    pub fn block_norms(&self, alg: &Algebra, window: &Window) -> Vec<(usize, f64, f64, f64)> {
        let s = alg.sector();
        window
            .blocks
            .iter()
            .filter_map(|&n| {
                let f = self.f[0][1].dense_block(n, n)?;
                let rot = alg.s(3, 4).dense_block(n, n)?;
                Some((n, s.r_hat(n), spectral_norm(&f), spectral_norm(&rot)))
            })
            .collect()
    }

    /// `‖F̂₁₂‖ = |κ|/(2r̂(r̂+λ))` per block.
    pub fn norm_law(&self, alg: &Algebra, window: &Window) -> Comparison {
        let lam = alg.lambda();
        let k = alg.sector().kappa().abs() as f64;
        let worst = self
            .block_norms(alg, window)
            .into_iter()
            .map(|(_, r, f, _)| {
                let exact = k / (2.0 * r * (r + lam));
                (f - exact).abs() / exact.max(1.0)
            })
            .fold(0.0, f64::max);
        Comparison::exact(worst)
    }

    /// Log-log slope of `‖F̂₁₂‖/‖Ŝ₃₄‖` against `r̂` over the upper half of the
    /// guarded window.
    pub fn decay_slope(&self, alg: &Algebra, guard: usize) -> Option<f64> {
        let window = Window::new(*alg.sector(), guard);
        let (first, last) = (*window.blocks.first()?, *window.blocks.last()?);
        let lo = (first + last).div_ceil(2);
        let pts: Vec<(f64, f64)> = self
            .block_norms(alg, &window)
            .into_iter()
            .filter(|&(n, _, f, rot)| n >= lo && f > 0.0 && rot > 0.0)
            .map(|(_, r, f, rot)| (r.ln(), (f / rot).ln()))
            .collect();
        fit_line(&pts).map(|(slope, _)| slope)
    }
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..4).flat_map(|a| (0..4).map(move |b| (a, b)))
}

/// Ordinary least squares `y = slope·x + intercept`.
pub fn fit_line(pts: &[(f64, f64)]) -> Option<(f64, f64)> {
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    Some((slope, my - slope * mx))
}

/// Largest singular value by power iteration on `MᴴM`.
pub fn spectral_norm(m: &Array2<C64>) -> f64 {
    let cols = m.ncols();
    if cols == 0 || m.nrows() == 0 {
        return 0.0;
    }
    let mh = m.t().mapv(|z| z.conj());
    let mut x = ndarray::Array1::from_shape_fn(cols, |j| C64::new(1.0 + 0.1 * j as f64, 0.05 * j as f64));
    let mut value = 0.0;
    for _ in 0..500 {
        let y = mh.dot(&m.dot(&x));
        let norm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        x = y.mapv(|z| z / norm);
        if (norm - value).abs() <= 1e-15 * norm {
            value = norm;
            break;
        }
        value = norm;
    }
    value.sqrt()
}
