//! Velocity operators `V̂_a`, their duals, and the bi-spinors `Û_αβ`, `Û†_αβ`.
//!
//! Index `a = 0..4` is zero-based: `a = 0,1,2` are the spatial components `k = 1,2,3`
//! and `a = 3` is the fourth component.

use crate::algebra::operators::Algebra;
use crate::algebra::superop::{linear_combination, SuperOp};
use crate::conventions::pauli;
use crate::residual::{compare, Comparison, Window};
use crate::sector::MonopoleSector;
use crate::{C64, I, ONE};

/// Linear combination on a single sector.
pub(crate) fn combo<'a>(s: MonopoleSector, terms: impl IntoIterator<Item = (C64, &'a SuperOp)>) -> SuperOp {
    linear_combination(s, s, terms).expect("operators share the sector")
}

#[derive(Debug, Clone)]
pub struct VelocityFamily {
    /// `V̂_a` from the explicit ladder forms.
    pub v: [SuperOp; 4],
    /// `Ṽ_a` from the explicit ladder forms.
    pub vt: [SuperOp; 4],
    /// Structural dual `r̂⁻¹Ŝ_a5`; equals `Ṽ_k` and `−Ṽ₄`.
    pub vt_dual: [SuperOp; 4],
    /// `Û_αβ = r̂⁻¹ â⁺_α b̂_β`.
    pub u: [[SuperOp; 2]; 2],
    /// `Û†_αβ = r̂⁻¹ â_α b̂⁺_β`.
    pub udag: [[SuperOp; 2]; 2],
}

/// `Σ_αβ m_αβ X_αβ` over a 2×2 family of operators.
fn contract(s: MonopoleSector, m: &ndarray::Array2<C64>, x: impl Fn(usize, usize) -> SuperOp) -> SuperOp {
    let ops: Vec<(C64, SuperOp)> = (0..2)
        .flat_map(|p| (0..2).map(move |q| (p, q)))
        .filter(|&(p, q)| m[[p, q]] != C64::new(0.0, 0.0))
        .map(|(p, q)| (m[[p, q]], x(p, q)))
        .collect();
    combo(s, ops.iter().map(|(c, op)| (*c, op)))
}

pub fn build_velocities(alg: &Algebra) -> VelocityFamily {
    let s = *alg.sector();
    let ri = alg.r_inv();
    let sigma = pauli();
    let one = ndarray::Array2::from_diag(&ndarray::arr1(&[ONE, ONE]));
    let apb = |m: &ndarray::Array2<C64>| contract(s, m, |p, q| alg.ab(p, q).clone());
    let bpa = |m: &ndarray::Array2<C64>| contract(s, m, |p, q| alg.ba(p, q).clone());
    let half = C64::new(0.5, 0.0);
    let ihalf = I * 0.5;
    let mut v: Vec<SuperOp> = Vec::with_capacity(4);
    let mut vt: Vec<SuperOp> = Vec::with_capacity(4);
    for k in 0..3 {
        let (x, y) = (apb(&sigma[k]), bpa(&sigma[k]));
        v.push(ri * &(&x - &y).scale(ihalf));
        vt.push(ri * &(&x + &y).scale(half));
    }
    let (x, y) = (apb(&one), bpa(&one));
    v.push(ri * &(&x + &y).scale(half));
    vt.push(ri * &(&x - &y).scale(ihalf));
    let vt_dual = std::array::from_fn(|a| ri * alg.s(a + 1, 5));
    let u = std::array::from_fn(|al| std::array::from_fn(|be| ri * alg.ab(al, be)));
    let udag = std::array::from_fn(|al| std::array::from_fn(|be| ri * alg.ba(be, al)));
    VelocityFamily {
        v: v.try_into().expect("four components"),
        vt: vt.try_into().expect("four components"),
        vt_dual,
        u,
        udag,
    }
}

impl VelocityFamily {
    fn sector(&self) -> MonopoleSector {
        *self.v[0].src()
    }

    /// `V̂_a`, `Ṽ_a` and the structural dual are weighted-self-adjoint; `Û†` is the
    /// weighted adjoint of `Û`.
    pub fn hermiticity(&self, window: &Window) -> Comparison {
        let mut out = Comparison::default();
        for op in self.v.iter().chain(&self.vt).chain(&self.vt_dual) {
            out = out.merge(compare(&op.weighted_adjoint(), op, window));
        }
        for al in 0..2 {
            for be in 0..2 {
                out = out.merge(compare(&self.u[al][be].weighted_adjoint(), &self.udag[al][be], window));
            }
        }
        out
    }

    /// Explicit and structural forms: `V̂_a = r̂⁻¹Ŝ₀ₐ`, `Ṽ_k = r̂⁻¹Ŝ_k5`, `Ṽ₄ = −r̂⁻¹Ŝ₄₅`.
    pub fn structural_forms(&self, alg: &Algebra, window: &Window) -> Comparison {
        let ri = alg.r_inv();
        let mut out = Comparison::default();
        for a in 0..4 {
            out = out.merge(compare(&self.v[a], &(ri * alg.s(0, a + 1)), window));
            let sign = if a == 3 { -1.0 } else { 1.0 };
            out = out.merge(compare(&self.vt[a], &(&self.vt_dual[a] * sign), window));
        }
        out
    }

    /// Linear reconstruction of `V̂_a`, `Ṽ_a` from `Û`, `Û†`.
    pub fn reconstruction(&self, window: &Window) -> Comparison {
        let s = self.sector();
        let sigma = pauli();
        let one = ndarray::Array2::from_diag(&ndarray::arr1(&[ONE, ONE]));
        let su = |m: &ndarray::Array2<C64>| contract(s, m, |p, q| self.u[p][q].clone());
        let sud = |m: &ndarray::Array2<C64>| contract(s, &m.mapv(|z| z.conj()), |p, q| self.udag[p][q].clone());
        let mut out = Comparison::default();
        for k in 0..3 {
            let (x, y) = (su(&sigma[k]), sud(&sigma[k]));
            out = out
                .merge(compare(&self.v[k], &(&x - &y).scale(I * 0.5), window))
                .merge(compare(&self.vt[k], &(&x + &y).scale(C64::new(0.5, 0.0)), window));
        }
        let (x, y) = (su(&one), sud(&one));
        out.merge(compare(&self.v[3], &(&x + &y).scale(C64::new(0.5, 0.0)), window))
            .merge(compare(&self.vt[3], &(&x - &y).scale(I * 0.5), window))
    }

    /// Every velocity component moves the input level by exactly ±1.
    pub fn level_shifts(&self) -> Comparison {
        let ok = self
            .v
            .iter()
            .chain(&self.vt)
            .all(|op| op.measured_shifts().iter().all(|d| d.abs() == 1));
        let u_ok = self.u.iter().flatten().all(|op| op.measured_shifts().iter().all(|&d| d == 1))
            && self.udag.iter().flatten().all(|op| op.measured_shifts().iter().all(|&d| d == -1));
        Comparison::exact(if ok && u_ok { 0.0 } else { 1.0 })
    }
}

/// `e^{−iωŜ₀₅}`, diagonal because `Ŝ₀₅ = r̂/λ`.
pub fn s05_exponential(sector: MonopoleSector, omega: f64) -> SuperOp {
    let lam = sector.lambda();
    SuperOp::block_diagonal(sector, |n| (-I * (omega * sector.r_hat(n) / lam)).exp())
}

/// `e^{−iωŜ₀₅} V̂_a e^{iωŜ₀₅} = cos ω V̂_a + sin ω Ṽ_aˢ` for all four components.
pub fn rotation_flow(vel: &VelocityFamily, omega: f64, window: &Window) -> Comparison {
    let s = vel.sector();
    let (left, right) = (s05_exponential(s, omega), s05_exponential(s, -omega));
    let mut out = Comparison::default();
    for a in 0..4 {
        let lhs = &(&left * &vel.v[a]) * &right;
        let rhs = &(&vel.v[a] * omega.cos()) + &(&vel.vt_dual[a] * omega.sin());
        out = out.merge(compare(&lhs, &rhs, window));
    }
    out
}

/// The rotation read verbatim: `e^{iωŜ₀₅} V̂_a e^{−iωŜ₀₅}` against the explicit dual.
pub fn printed_rotation_flow(vel: &VelocityFamily, omega: f64, window: &Window) -> Comparison {
    let s = vel.sector();
    let (left, right) = (s05_exponential(s, -omega), s05_exponential(s, omega));
    let mut out = Comparison::default();
    for a in 0..4 {
        let lhs = &(&left * &vel.v[a]) * &right;
        let rhs = &(&vel.v[a] * omega.cos()) + &(&vel.vt[a] * omega.sin());
        out = out.merge(compare(&lhs, &rhs, window));
    }
    out
}

/// `V̂_a = 2r̂⁻¹Ŝ₀ₐ` read literally.
pub fn printed_normalization(vel: &VelocityFamily, alg: &Algebra, window: &Window) -> Comparison {
    (0..4)
        .map(|a| compare(&vel.v[a], &(&(alg.r_inv() * alg.s(0, a + 1)) * 2.0), window))
        .fold(Comparison::default(), Comparison::merge)
}
