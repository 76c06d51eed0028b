//! λ-shift calculus: how radial functions move through level-changing operators.

use crate::algebra::operators::Algebra;
use crate::algebra::radial::RadialFunction;
use crate::algebra::superop::SuperOp;
use crate::conventions::eps3;
use crate::residual::{compare, compare_zero, Comparison, Window};
use crate::{C64, I};

/// `f(r̂) Û = Û f(r̂+λ)` and `f(r̂) Û† = Û† f(r̂−λ)` for every listed operator.
pub fn shift_relation_check(
    alg: &Algebra,
    u: &[&SuperOp],
    udag: &[&SuperOp],
    f: &RadialFunction,
    window: &Window,
) -> Comparison {
    let fr = alg.radial(f);
    let up = alg.radial(&f.delta_plus());
    let down = alg.radial(&f.delta_minus());
    let mut out = Comparison::default();
    for op in u {
        out = out.merge(compare(&(&fr * *op), &(*op * &up), window));
    }
    for op in udag {
        out = out.merge(compare(&(&fr * *op), &(*op * &down), window));
    }
    out
}

/// Both boost shift formulas:
/// `[ŵ_a, f] = ½((Δ₊+Δ₋−2)f) ŵ_a + λ((Δ₊−Δ₋)f/2λ) ζ̂_a` and the same with ζ̂ ↔ ŵ.
pub fn shift_commutator_check(alg: &Algebra, f: &RadialFunction, window: &Window) -> Comparison {
    let lam = alg.lambda();
    let fr = alg.radial(f);
    let second = alg.radial(&f.second_difference(lam).scale(0.5 * lam * lam));
    let first = alg.radial(&f.first_difference(lam).scale(lam));
    let mut out = Comparison::default();
    for a in 0..4 {
        let w = alg.w(a);
        let z = alg.zeta(a);
        let lhs_w = w.commutator(&fr);
        let rhs_w = &(&second * &w) + &(&first * &z);
        let lhs_z = z.commutator(&fr);
        let rhs_z = &(&second * &z) + &(&first * &w);
        out = out
            .merge(compare(&lhs_w, &rhs_w, window))
            .merge(compare(&lhs_z, &rhs_z, window));
    }
    out
}

/// Blockwise value of `𝒟 f`, which must vanish for `f = r̂⁻¹`.
pub fn script_d_check(alg: &Algebra, f: &RadialFunction) -> Comparison {
    let d = alg.radial(&f.script_d(alg.lambda()));
    compare_zero(&d, &Window::new(*alg.sector(), 0))
}

/// `ε_ijk [fŵ_i, fŵ_j] = f(𝒟f)·4i ε_ijk Ŝ_ij + f((Δ₊−Δ₋)f/2λ)·4iλ Ŝ_4k(Ĉ+2)`.
pub fn weighted_boost_commutator(alg: &Algebra, f: &RadialFunction, window: &Window) -> Comparison {
    let lam = alg.lambda();
    let fr = alg.radial(f);
    let fd = alg.radial(&f.mul(&f.script_d(lam)));
    let fd1 = alg.radial(&f.mul(&f.first_difference(lam)));
    let c2 = alg.central_shifted();
    let fw: Vec<SuperOp> = (0..3).map(|i| &fr * &alg.w(i)).collect();
    let s = *alg.sector();
    let mut out = Comparison::default();
    for k in 0..3 {
        let mut lhs = SuperOp::zero(s, s);
        let mut rot = SuperOp::zero(s, s);
        for i in 0..3 {
            for j in 0..3 {
                let e = eps3(i, j, k);
                if e != 0.0 {
                    lhs = lhs.try_add_scaled(C64::new(e, 0.0), &fw[i].commutator(&fw[j]))
                        .expect("same sector");
                    rot = rot.try_add_scaled(C64::new(e, 0.0), alg.s(i + 1, j + 1))
                        .expect("same sector");
                }
            }
        }
        let first = (&fd * &rot).scale(I * 4.0);
        let second = (&fd1 * &(alg.s(4, k + 1) * &c2)).scale(I * (4.0 * lam));
        out = out.merge(compare(&lhs, &(&first + &second), window));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sector::build_sector;

    #[test]
    fn boost_shift_formulas() {
        let s = build_sector(1, 7, 1.0).unwrap();
        let alg = Algebra::new(s);
        let w = Window::new(s, 1);
        for f in [
            RadialFunction::r(),
            RadialFunction::power(2),
            RadialFunction::inv_r(),
            RadialFunction::constant(3.0),
        ] {
            assert!(shift_commutator_check(&alg, &f, &w).residual <= 1e-11, "{f}");
        }
    }

    #[test]
    fn weighted_commutator_formula() {
        let s = build_sector(2, 7, 1.0).unwrap();
        let alg = Algebra::new(s);
        let w = Window::new(s, 2);
        for f in [RadialFunction::constant(1.0), RadialFunction::inv_r(), RadialFunction::power(-2)] {
            assert!(weighted_boost_commutator(&alg, &f, &w).residual <= 1e-11, "{f}");
        }
    }

    #[test]
    fn script_d_of_inverse_radius() {
        let alg = Algebra::new(build_sector(0, 6, 1.0).unwrap());
        assert!(script_d_check(&alg, &RadialFunction::inv_r()).residual <= 1e-14);
        assert!(script_d_check(&alg, &RadialFunction::r()).residual > 0.1);
    }
}
