//! Velocity commutators in anticommutator form and their `Û`-contracted versions.

use crate::algebra::operators::Algebra;
use crate::algebra::radial::RadialFunction;
use crate::algebra::superop::SuperOp;
use crate::conventions::pauli;
use crate::monopole::velocity::{combo, VelocityFamily};
use crate::residual::{compare, Comparison, Window};
use crate::{C64, I};

fn fold(it: impl Iterator<Item = Comparison>) -> Comparison {
    it.fold(Comparison::default(), Comparison::merge)
}

struct Ctx<'a> {
    alg: &'a Algebra,
    /// `r̂⁻¹`, `r̂⁻²`.
    ri: &'a SuperOp,
    r2: SuperOp,
}

impl<'a> Ctx<'a> {
    fn new(alg: &'a Algebra) -> Self {
        Self {
            alg,
            ri: alg.r_inv(),
            r2: alg.radial(&RadialFunction::power(-2)),
        }
    }

    fn lam(&self) -> f64 {
        self.alg.lambda()
    }

    /// `c · r̂⁻¹ X`.
    fn over_r(&self, c: C64, x: &SuperOp) -> SuperOp {
        (self.ri * x).scale(c)
    }
}

/// `[V̂_i,V̂_j] = −(i/r̂²)Ŝ_ij + (iλ/2r̂)({Ṽ_i,V̂_j} − {Ṽ_j,V̂_i})`, plus `[Ṽ_i,Ṽ_j] = [V̂_i,V̂_j]`.
pub fn vv_ij(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let c = Ctx::new(alg);
    let (v, t) = (&vel.v, &vel.vt);
    fold((0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| {
        let lhs = v[i].commutator(&v[j]);
        let anti = &t[i].anticommutator(&v[j]) - &t[j].anticommutator(&v[i]);
        let rhs = &(&c.r2 * alg.s(i + 1, j + 1)).scale(-I) + &c.over_r(I * (c.lam() / 2.0), &anti);
        compare(&lhs, &rhs, window).merge(compare(&t[i].commutator(&t[j]), &lhs, window))
    }))
}

/// `[V̂_k,V̂₄] = −(i/r̂²)Ŝ_k4 + (iλ/2r̂)({Ṽ_k,V̂₄} + {V̂_k,Ṽ₄})`, plus `[V̂_k,V̂₄] = −[Ṽ_k,Ṽ₄]`.
pub fn vv_k4(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let c = Ctx::new(alg);
    let (v, t) = (&vel.v, &vel.vt);
    fold((0..3).map(|k| {
        let lhs = v[k].commutator(&v[3]);
        let anti = &t[k].anticommutator(&v[3]) + &v[k].anticommutator(&t[3]);
        let rhs = &(&c.r2 * alg.s(k + 1, 4)).scale(-I) + &c.over_r(I * (c.lam() / 2.0), &anti);
        compare(&lhs, &rhs, window).merge(compare(&lhs, &-&t[k].commutator(&t[3]), window))
    }))
}

/// `[V̂_i,Ṽ_j] = −(i/λr̂)δ_ij + (iλ/2r̂)({Ṽ_i,Ṽ_j} + {V̂_i,V̂_j})`, plus `= −[Ṽ_i,V̂_j]`.
pub fn vv_dual_ij(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let c = Ctx::new(alg);
    let (v, t) = (&vel.v, &vel.vt);
    let lam = c.lam();
    fold((0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| {
        let lhs = v[i].commutator(&t[j]);
        let anti = &t[i].anticommutator(&t[j]) + &v[i].anticommutator(&v[j]);
        let mut rhs = c.over_r(I * (lam / 2.0), &anti);
        if i == j {
            rhs = rhs.try_add_scaled(-I / lam, c.ri).expect("same sector");
        }
        compare(&lhs, &rhs, window).merge(compare(&lhs, &-&t[i].commutator(&v[j]), window))
    }))
}

/// `[V̂_k,Ṽ₄] = s·(iλ/2r̂)({Ṽ_k,Ṽ₄} − {V̂_k,V̂₄})` and `[V̂_k,Ṽ₄] = [Ṽ_k,V̂₄]`.
///
/// `s = +1` holds; the printed form has `s = −1`.
pub fn vv_dual_k4(alg: &Algebra, vel: &VelocityFamily, window: &Window, s: f64) -> Comparison {
    let c = Ctx::new(alg);
    let (v, t) = (&vel.v, &vel.vt);
    fold((0..3).map(|k| {
        let lhs = v[k].commutator(&t[3]);
        let anti = &t[k].anticommutator(&t[3]) - &v[k].anticommutator(&v[3]);
        let rhs = c.over_r(I * (s * c.lam() / 2.0), &anti);
        compare(&lhs, &rhs, window).merge(compare(&lhs, &t[k].commutator(&v[3]), window))
    }))
}

/// `[V̂₄,Ṽ₄] = i/(λr̂) − (iλ/r̂)(V̂₄² + Ṽ₄²)`.
pub fn vv_dual_44(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let c = Ctx::new(alg);
    let (v4, t4) = (&vel.v[3], &vel.vt[3]);
    let lam = c.lam();
    let lhs = v4.commutator(t4);
    let sq = &(v4 * v4) + &(t4 * t4);
    let rhs = c.ri.scale(I / lam).try_add_scaled(C64::new(1.0, 0.0), &c.over_r(-I * lam, &sq)).expect("same sector");
    compare(&lhs, &rhs, window)
}

/// `Σ σⁱ_αβ σʲ*_γδ [Û_αβ, Û†_γδ]`.
fn sigma_sigma_conj(vel: &VelocityFamily, i: usize, j: usize) -> SuperOp {
    let sg = pauli();
    let s = *vel.v[0].src();
    let mut terms = Vec::new();
    for (al, be, ga, de) in crate::monopole::ucomm::index_quads() {
        let c = sg[i][[al, be]] * sg[j][[ga, de]].conj();
        if c != C64::new(0.0, 0.0) {
            terms.push((c, vel.u[al][be].commutator(&vel.udag[ga][de])));
        }
    }
    combo(s, terms.iter().map(|(c, op)| (*c, op)))
}

/// `Σ σᵏ_αβ [Û_αβ, Û†_γγ]`.
fn sigma_trace(vel: &VelocityFamily, k: usize) -> SuperOp {
    let sg = pauli();
    let s = *vel.v[0].src();
    let mut terms = Vec::new();
    for al in 0..2 {
        for be in 0..2 {
            for ga in 0..2 {
                let c = sg[k][[al, be]];
                if c != C64::new(0.0, 0.0) {
                    terms.push((c, vel.u[al][be].commutator(&vel.udag[ga][ga])));
                }
            }
        }
    }
    combo(s, terms.iter().map(|(c, op)| (*c, op)))
}

/// `[Û_αα, Û†_γγ]`.
fn trace_trace(vel: &VelocityFamily) -> SuperOp {
    let s = *vel.v[0].src();
    let ops: Vec<SuperOp> = (0..4)
        .map(|m| vel.u[m >> 1][m >> 1].commutator(&vel.udag[m & 1][m & 1]))
        .collect();
    combo(s, ops.iter().map(|op| (C64::new(1.0, 0.0), op)))
}

/// `X ± X†` with the weighted adjoint.
fn with_hc(x: &SuperOp, sign: f64) -> SuperOp {
    x + &(&x.weighted_adjoint() * sign)
}

/// The five `Û`-contracted forms of the velocity commutators.
pub fn vv_contracted(vel: &VelocityFamily, window: &Window) -> Comparison {
    let (v, t) = (&vel.v, &vel.vt);
    let quarter = C64::new(0.25, 0.0);
    let mut out = Comparison::default();
    for i in 0..3 {
        for j in 0..3 {
            let m = sigma_sigma_conj(vel, i, j);
            let a = v[i].commutator(&v[j]);
            let rhs1 = with_hc(&m, -1.0).scale(quarter);
            out = out
                .merge(compare(&a, &rhs1, window))
                .merge(compare(&t[i].commutator(&t[j]), &rhs1, window));
            let b = v[i].commutator(&t[j]);
            let rhs3 = with_hc(&m, 1.0).scale(I * 0.25);
            out = out
                .merge(compare(&b, &rhs3, window))
                .merge(compare(&-&t[i].commutator(&v[j]), &rhs3, window));
        }
    }
    for k in 0..3 {
        let m = sigma_trace(vel, k);
        let rhs2 = with_hc(&m, 1.0).scale(I * 0.25);
        out = out
            .merge(compare(&v[k].commutator(&v[3]), &rhs2, window))
            .merge(compare(&-&t[k].commutator(&t[3]), &rhs2, window));
        let rhs4 = with_hc(&m, -1.0).scale(quarter);
        out = out
            .merge(compare(&v[k].commutator(&t[3]), &rhs4, window))
            .merge(compare(&t[k].commutator(&v[3]), &rhs4, window));
    }
    let rhs5 = trace_trace(vel).scale(-I * 0.5);
    out.merge(compare(&v[3].commutator(&t[3]), &rhs5, window))
}

/// Expansions of the three contracted commutators in velocities and `Ŝ`.
///
/// * `σⁱ_αβ σʲ_δγ [Û_αβ, Û†_γδ] = −(2/λr̂)δ_ij + (λ/r̂)({Ṽ_i,Ṽ_j} + {V̂_i,V̂_j})
///   − (2i/r̂²)Ŝ_ij + (iλ/r̂)({Ṽ_i,V̂_j} − {Ṽ_j,V̂_i})`, also in its intermediate form;
/// * `σᵏ_αβ [Û_αβ, Û†_γγ] = −(2/r̂²)Ŝ_k4 + (λ/r̂)({Ṽ_k,V̂₄} + {V̂_k,Ṽ₄})
///   + (iλ/r̂)({Ṽ_k,Ṽ₄} − {V̂_k,V̂₄})`;
/// * `[Û_αα, Û†_γγ] = −2/(λr̂) + (2λ/r̂)(V̂₄² + Ṽ₄²)`.
pub fn contracted_expansions(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let c = Ctx::new(alg);
    let lam = c.lam();
    let (v, t) = (&vel.v, &vel.vt);
    let s = *alg.sector();
    let one = C64::new(1.0, 0.0);
    let mut number = SuperOp::zero(s, s);
    for al in 0..2 {
        number = &(&number + alg.aa(al, al)) + alg.bb(al, al);
    }
    let mut out = Comparison::default();
    for i in 0..3 {
        for j in 0..3 {
            // σʲ_δγ = σʲ*_γδ.
            let lhs = sigma_sigma_conj(vel, i, j);
            let rot = (&c.r2 * alg.s(i + 1, j + 1)).scale(-I * 2.0);
            let mut mid = rot.clone();
            let mut last = rot;
            if i == j {
                mid = mid.try_add_scaled(-one, &(&c.r2 * &number)).expect("same sector");
                last = last.try_add_scaled(C64::new(-2.0 / lam, 0.0), c.ri).expect("same sector");
            }
            let left = &t[i] - &v[i].scale(I);
            let right = &t[j] + &v[j].scale(I);
            mid = &mid + &c.over_r(C64::new(lam, 0.0), &left.anticommutator(&right));
            let sym = &t[i].anticommutator(&t[j]) + &v[i].anticommutator(&v[j]);
            let asym = &t[i].anticommutator(&v[j]) - &t[j].anticommutator(&v[i]);
            last = &(&last + &c.over_r(C64::new(lam, 0.0), &sym)) + &c.over_r(I * lam, &asym);
            out = out
                .merge(compare(&lhs, &mid, window))
                .merge(compare(&lhs, &last, window));
        }
    }
    for k in 0..3 {
        let lhs = sigma_trace(vel, k);
        let sym = &t[k].anticommutator(&v[3]) + &v[k].anticommutator(&t[3]);
        let asym = &t[k].anticommutator(&t[3]) - &v[k].anticommutator(&v[3]);
        let rhs = &(&(&c.r2 * alg.s(k + 1, 4)) * -2.0) + &c.over_r(C64::new(lam, 0.0), &sym);
        let rhs = &rhs + &c.over_r(I * lam, &asym);
        out = out.merge(compare(&lhs, &rhs, window));
    }
    let lhs = trace_trace(vel);
    let sq = &(&v[3] * &v[3]) + &(&t[3] * &t[3]);
    let rhs = &(c.ri * (-2.0 / lam)) + &c.over_r(C64::new(2.0 * lam, 0.0), &sq);
    out.merge(compare(&lhs, &rhs, window))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monopole::velocity::build_velocities;
    use crate::sector::build_sector;

    #[test]
    fn anticommutator_forms() {
        for kappa in [0, 3, -2] {
            let alg = Algebra::new(build_sector(kappa, 7, 1.0).unwrap());
            let vel = build_velocities(&alg);
            let w = Window::new(*alg.sector(), 2);
            for (name, c) in [
                ("ij", vv_ij(&alg, &vel, &w)),
                ("k4", vv_k4(&alg, &vel, &w)),
                ("dual-ij", vv_dual_ij(&alg, &vel, &w)),
                ("dual-k4", vv_dual_k4(&alg, &vel, &w, 1.0)),
                ("dual-44", vv_dual_44(&alg, &vel, &w)),
                ("expansions", contracted_expansions(&alg, &vel, &w)),
            ] {
                assert!(c.residual <= 1e-11, "{name} κ={kappa}: {c:?}");
            }
            assert!(vv_dual_k4(&alg, &vel, &w, -1.0).residual > 1e-3);
        }
    }

    #[test]
    fn contracted_forms() {
        let alg = Algebra::new(build_sector(1, 8, 1.0).unwrap());
        let vel = build_velocities(&alg);
        assert!(vv_contracted(&vel, &Window::new(*alg.sector(), 4)).residual <= 1e-11);
    }
}
