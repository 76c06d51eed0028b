//! Exchange algebra of `Û_αβ` and `Û†_αβ`, including the q-deformed ordering.

use crate::algebra::operators::Algebra;
use crate::algebra::radial::RadialFunction;
use crate::algebra::superop::SuperOp;
use crate::monopole::velocity::VelocityFamily;
use crate::residual::{compare, compare_zero, Comparison, Window};
use crate::C64;

/// All `(α, β, γ, δ)` in `{0,1}⁴`.
pub fn index_quads() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..16).map(|m| (m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1))
}


/// `X = â⁺_α â_γ δ_βδ + b̂⁺_δ b̂_β δ_γα`; `sign = −1` gives the variant with a minus.
pub fn contraction(alg: &Algebra, (al, be, ga, de): (usize, usize, usize, usize), sign: f64) -> SuperOp {
    let s = *alg.sector();
    let mut x = SuperOp::zero(s, s);
    if be == de {
        x = &x + alg.aa(al, ga);
    }
    if ga == al {
        x = x.try_add_scaled(C64::new(sign, 0.0), alg.bb(de, be)).expect("same sector");
    }
    x
}

/// `[Û,Û] = 0` and `[Û†,Û†] = 0`.
pub fn uu_vanish(vel: &VelocityFamily, window: &Window) -> Comparison {
    index_quads()
        .map(|(al, be, ga, de)| {
            compare_zero(&vel.u[al][be].commutator(&vel.u[ga][de]), window)
                .merge(compare_zero(&vel.udag[al][be].commutator(&vel.udag[ga][de]), window))
        })
        .fold(Comparison::default(), Comparison::merge)
}

/// `[Û_αβ, Û†_γδ] = −r̂⁻²(±X) + (λ/r̂){Û_αβ, Û†_γδ}` with the chosen sign of the `b̂` term.
pub fn uu_star(alg: &Algebra, vel: &VelocityFamily, window: &Window, sign: f64) -> Comparison {
    let lam = alg.lambda();
    let r2 = alg.radial(&RadialFunction::power(-2));
    let ri = alg.r_inv();
    index_quads()
        .map(|q @ (al, be, ga, de)| {
            let (u, ud) = (&vel.u[al][be], &vel.udag[ga][de]);
            let lhs = u.commutator(ud);
            let rhs = &(&(&r2 * &contraction(alg, q, sign)) * -1.0) + &(&(ri * &u.anticommutator(ud)) * lam);
            compare(&lhs, &rhs, window)
        })
        .fold(Comparison::default(), Comparison::merge)
}

/// `[â⁺_α b̂_β, b̂⁺_δ â_γ] = −â⁺_α â_γ δ_βδ − b̂⁺_δ b̂_β δ_γα`.
pub fn uu_star1(alg: &Algebra, window: &Window) -> Comparison {
    index_quads()
        .map(|q @ (al, be, ga, de)| {
            let lhs = alg.ab(al, be).commutator(alg.ba(de, ga));
            compare(&lhs, &(&contraction(alg, q, 1.0) * -1.0), window)
        })
        .fold(Comparison::default(), Comparison::merge)
}

/// `[Û,Û†] = (r̂²−λ²)⁻¹[â⁺b̂, b̂⁺â] + λ(r̂(r̂²−λ²))⁻¹{â⁺b̂, b̂⁺â}`.
pub fn uu_star0(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let lam = alg.lambda();
    let f1 = alg.radial(&RadialFunction::linear_power(1.0, -1).mul(&RadialFunction::linear_power(-1.0, -1)));
    let f2 = alg.radial(&RadialFunction::monopole_denominator().scale(lam));
    index_quads()
        .map(|(al, be, ga, de)| {
            let (x, y) = (alg.ab(al, be), alg.ba(de, ga));
            let lhs = vel.u[al][be].commutator(&vel.udag[ga][de]);
            let rhs = &(&f1 * &x.commutator(y)) + &(&f2 * &x.anticommutator(y));
            compare(&lhs, &rhs, window)
        })
        .fold(Comparison::default(), Comparison::merge)
}

/// `λ(r̂(r̂²−λ²))⁻¹{â⁺b̂, b̂⁺â} = λ(r̂²−λ²)⁻¹((r̂−λ)ÛÛ† + (r̂+λ)Û†Û)`.
pub fn uu_star2(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let lam = alg.lambda();
    let lhs_f = alg.radial(&RadialFunction::monopole_denominator().scale(lam));
    let den = RadialFunction::linear_power(1.0, -1).mul(&RadialFunction::linear_power(-1.0, -1)).scale(lam);
    let minus = alg.radial(&den.mul(&RadialFunction::linear_power(1.0, 1)));
    let plus = alg.radial(&den.mul(&RadialFunction::linear_power(-1.0, 1)));
    index_quads()
        .map(|(al, be, ga, de)| {
            let (x, y) = (alg.ab(al, be), alg.ba(de, ga));
            let (u, ud) = (&vel.u[al][be], &vel.udag[ga][de]);
            let lhs = &lhs_f * &x.anticommutator(y);
            let rhs = &(&minus * &(u * ud)) + &(&plus * &(ud * u));
            compare(&lhs, &rhs, window)
        })
        .fold(Comparison::default(), Comparison::merge)
}

/// `[Û,Û†] = −(r̂²−λ²)⁻¹X − λ²(r̂²−λ²)⁻¹[Û,Û†] + λr̂(r̂²−λ²)⁻¹{Û,Û†}`.
pub fn uu_star3(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let lam = alg.lambda();
    let den = RadialFunction::linear_power(1.0, -1).mul(&RadialFunction::linear_power(-1.0, -1));
    let f_x = alg.radial(&den.scale(-1.0));
    let f_c = alg.radial(&den.scale(-lam * lam));
    let f_a = alg.radial(&den.mul(&RadialFunction::r()).scale(lam));
    index_quads()
        .map(|q @ (al, be, ga, de)| {
            let (u, ud) = (&vel.u[al][be], &vel.udag[ga][de]);
            let c = u.commutator(ud);
            let rhs = &(&(&f_x * &contraction(alg, q, 1.0)) + &(&f_c * &c)) + &(&f_a * &u.anticommutator(ud));
            compare(&c, &rhs, window)
        })
        .fold(Comparison::default(), Comparison::merge)
}

/// `Û†_γδ Û_αβ = Q̂ Û_αβ Û†_γδ + c · X` with `c` a radial coefficient.
fn ordering(alg: &Algebra, vel: &VelocityFamily, window: &Window, coeff: &RadialFunction) -> Comparison {
    let q = alg.radial(&RadialFunction::q_factor());
    let c = alg.radial(coeff);
    index_quads()
        .map(|idx @ (al, be, ga, de)| {
            let (u, ud) = (&vel.u[al][be], &vel.udag[ga][de]);
            let lhs = ud * u;
            let rhs = &(&q * &(u * ud)) + &(&c * &contraction(alg, idx, 1.0));
            compare(&lhs, &rhs, window)
        })
        .fold(Comparison::default(), Comparison::merge)
}

/// Ordering with the correction `+X/(r̂(r̂+λ))`, solved from the `[Û,Û†]` relation.
pub fn q_ordering(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let coeff = RadialFunction::inv_r().mul(&RadialFunction::linear_power(-1.0, -1));
    ordering(alg, vel, window, &coeff)
}

/// Ordering with the correction `−X/(r̂²(r̂+λ))` as printed.
pub fn printed_q_ordering(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let coeff = RadialFunction::power(-2)
        .mul(&RadialFunction::linear_power(-1.0, -1))
        .scale(-1.0);
    ordering(alg, vel, window, &coeff)
}

/// Per-block `Q̂ = (r̂−λ)/(r̂+λ)`: in `[0,1)`, increasing in `n`, and `|Q−1| ≤ 2λ/r̂`.
///
/// The residual is the largest violation (zero when all three hold). `Q = 0` only on
/// the block with `r̂ = λ`.
pub fn q_bounds(alg: &Algebra) -> Comparison {
    let s = alg.sector();
    let lam = alg.lambda();
    let q = RadialFunction::q_factor();
    let mut worst: f64 = 0.0;
    let mut prev = -1.0;
    for n in s.blocks() {
        let r = s.r_hat(n);
        let v = q.eval(r, lam).expect("r̂ + λ > 0");
        worst = worst.max(((v - 1.0).abs() - 2.0 * lam / r).max(0.0));
        if !(0.0..1.0).contains(&v) || v <= prev {
            worst = worst.max(1.0);
        }
        prev = v;
    }
    Comparison::exact(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monopole::velocity::build_velocities;
    use crate::sector::build_sector;

    #[test]
    fn exchange_relations() {
        for kappa in [-1, 0, 2] {
            let alg = Algebra::new(build_sector(kappa, 7, 1.0).unwrap());
            let vel = build_velocities(&alg);
            let w = Window::new(*alg.sector(), 2);
            assert!(uu_vanish(&vel, &w).residual <= 1e-13);
            assert!(uu_star(&alg, &vel, &w, 1.0).residual <= 1e-11);
            assert!(uu_star(&alg, &vel, &w, -1.0).residual > 1e-3);
            assert!(uu_star1(&alg, &w).residual <= 1e-12);
            assert!(q_ordering(&alg, &vel, &w).residual <= 1e-11);
            assert!(printed_q_ordering(&alg, &vel, &w).residual > 1e-3);
            for c in [uu_star0(&alg, &vel, &w), uu_star2(&alg, &vel, &w), uu_star3(&alg, &vel, &w)] {
                assert!(c.residual <= 1e-11, "{c:?}");
            }
        }
    }

    #[test]
    fn q_factor_values() {
        let alg = Algebra::new(build_sector(0, 6, 1.0).unwrap());
        assert_eq!(RadialFunction::q_factor().eval(3.0, 1.0), Some(0.5));
        assert_eq!(q_bounds(&alg).residual, 0.0);
    }
}
