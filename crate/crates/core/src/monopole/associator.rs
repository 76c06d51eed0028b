//! The vanishing associator `ε_ijk[V̂_i,[V̂_j,V̂_k]] = 0`, its intermediate steps, and
//! the Pauli contraction identity behind the monopole commutator.

use crate::algebra::operators::Algebra;
use crate::algebra::radial::RadialFunction;
use crate::algebra::superop::SuperOp;
use crate::conventions::{delta, eps3, pauli};
use crate::monopole::ucomm::index_quads;
use crate::monopole::velocity::{combo, VelocityFamily};
use crate::residual::{compare, compare_zero, Comparison, Window};
use crate::{C64, I};

fn triples() -> impl Iterator<Item = (usize, usize, usize, f64)> {
    (0..27)
        .map(|m| (m / 9, m / 3 % 3, m % 3))
        .map(|(i, j, k)| (i, j, k, eps3(i, j, k)))
        .filter(|t| t.3 != 0.0)
}

/// `Σ ε_ijk [X_i,[X_j,X_k]]`.
fn jacobi_sum(x: &[SuperOp]) -> SuperOp {
    let s = *x[0].src();
    let terms: Vec<(C64, SuperOp)> = triples()
        .map(|(i, j, k, e)| (C64::new(e, 0.0), x[i].commutator(&x[j].commutator(&x[k]))))
        .collect();
    combo(s, terms.iter().map(|(c, op)| (*c, op)))
}

/// `ε_ijk[V̂_i,[V̂_j,V̂_k]]` against zero.
pub fn associator(vel: &VelocityFamily, window: &Window) -> Comparison {
    compare_zero(&jacobi_sum(&vel.v[..3]), window)
}

/// `ε_ijk[Ŝ₀ᵢ,[Ŝ₀ⱼ,Ŝ₀ₖ]]` against zero.
pub fn baseline(alg: &Algebra, window: &Window) -> Comparison {
    let boosts: Vec<SuperOp> = (1..=3).map(|i| alg.s(0, i).clone()).collect();
    compare_zero(&jacobi_sum(&boosts), window)
}

/// `P = 1/(r̂(r̂²−λ²))` as a multiplier.
fn p_op(alg: &Algebra) -> SuperOp {
    alg.radial(&RadialFunction::monopole_denominator())
}

/// `ε_ijk[V̂_i,[V̂_j,V̂_k]] = Σ_i [V̂_i, −iλκPŜ_i4]`.
pub fn associator_first_line(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let s = *alg.sector();
    let p = p_op(alg);
    let k = s.kappa() as f64;
    let lam = alg.lambda();
    let parts: Vec<SuperOp> = (0..3)
        .map(|i| {
            let inner = (&p * alg.s(i + 1, 4)).scale(-I * (lam * k));
            vel.v[i].commutator(&inner)
        })
        .collect();
    let rhs = combo(s, parts.iter().map(|op| (C64::new(1.0, 0.0), op)));
    compare(&jacobi_sum(&vel.v[..3]), &rhs, window)
}

/// `(λκ/2) Σ_i [V̂_i, P] Ŝ_i4 = (3iλκ/2) P V̂₄`.
pub fn radial_part(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let s = *alg.sector();
    let p = p_op(alg);
    let lk = alg.lambda() * s.kappa() as f64;
    let parts: Vec<SuperOp> = (0..3).map(|i| &vel.v[i].commutator(&p) * alg.s(i + 1, 4)).collect();
    let lhs = combo(s, parts.iter().map(|op| (C64::new(lk / 2.0, 0.0), op)));
    let rhs = (&p * &vel.v[3]).scale(I * (1.5 * lk));
    compare(&lhs, &rhs, window)
}

/// `P Σ_i [V̂_i, Ŝ_i4] = −3i P V̂₄`.
pub fn rotation_part(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let s = *alg.sector();
    let p = p_op(alg);
    let parts: Vec<SuperOp> = (0..3).map(|i| vel.v[i].commutator(alg.s(i + 1, 4))).collect();
    let lhs = &p * &combo(s, parts.iter().map(|op| (C64::new(1.0, 0.0), op)));
    let rhs = (&p * &vel.v[3]).scale(-I * 3.0);
    compare(&lhs, &rhs, window)
}

/// Shifted-denominator form of the radial part:
/// `(λκ/2)[V̂_i,P]Ŝ_i4 = (iλκ/4r̂²)((D₋ − D₀)â⁺_αb̂_β − (D₊ − D₀)b̂⁺_α â_β)σⁱ_αβ Ŝ_i4`
/// with `D₋ = 1/((r̂−λ)(r̂−2λ))`, `D₀ = 1/((r̂−λ)(r̂+λ))`, `D₊ = 1/((r̂+2λ)(r̂+λ))`.
pub fn radial_part_shifted(alg: &Algebra, window: &Window) -> Comparison {
    let s = *alg.sector();
    let sg = pauli();
    let p = p_op(alg);
    let lk = alg.lambda() * s.kappa() as f64;
    let lp = RadialFunction::linear_power;
    let r2 = RadialFunction::power(-2);
    let d0 = lp(1.0, -1).mul(&lp(-1.0, -1));
    let dm = r2.mul(&lp(1.0, -1).mul(&lp(2.0, -1)).sub(&d0));
    let dp = r2.mul(&lp(-2.0, -1).mul(&lp(-1.0, -1)).sub(&d0));
    let (dm, dp) = (alg.radial(&dm), alg.radial(&dp));
    let mut lhs_parts = Vec::new();
    let mut rhs_parts = Vec::new();
    for i in 0..3 {
        let mut v_i = SuperOp::zero(s, s);
        let mut words = SuperOp::zero(s, s);
        for al in 0..2 {
            for be in 0..2 {
                let c = sg[i][[al, be]];
                if c == C64::new(0.0, 0.0) {
                    continue;
                }
                let (x, y) = (alg.ab(al, be), alg.ba(al, be));
                v_i = v_i.try_add_scaled(c, &(x - y)).expect("same sector");
                words = words
                    .try_add_scaled(c, &(&dm * x))
                    .and_then(|w| w.try_add_scaled(-c, &(&dp * y)))
                    .expect("same sector");
            }
        }
        let v_i = (alg.r_inv() * &v_i).scale(I * 0.5);
        lhs_parts.push(&v_i.commutator(&p) * alg.s(i + 1, 4));
        rhs_parts.push(&words * alg.s(i + 1, 4));
    }
    let lhs = combo(s, lhs_parts.iter().map(|op| (C64::new(lk / 2.0, 0.0), op)));
    let rhs = combo(s, rhs_parts.iter().map(|op| (I * (lk / 4.0), op)));
    compare(&lhs, &rhs, window)
}

/// `ε_ijk σⁱ_αβ σʲ_δγ` against `i(σᵏ_αγ δ_δβ − σᵏ_δβ δ_αγ)` (consistent) or
/// `i(σᵏ_αδ δ_γβ − σᵏ_γβ δ_αδ)` (literal), maximum absolute deviation over all 48
/// components.
pub fn fierz(literal: bool) -> f64 {
    let sg = pauli();
    let mut worst: f64 = 0.0;
    for k in 0..3 {
        for (al, be, de, ga) in index_quads() {
            let mut lhs = C64::new(0.0, 0.0);
            for (i, j, kk, e) in triples() {
                if kk == k {
                    lhs += sg[i][[al, be]] * sg[j][[de, ga]] * e;
                }
            }
            let rhs = if literal {
                I * (sg[k][[al, de]] * delta(ga, be) - sg[k][[ga, be]] * delta(al, de))
            } else {
                I * (sg[k][[al, ga]] * delta(de, be) - sg[k][[de, be]] * delta(al, ga))
            };
            worst = worst.max((lhs - rhs).norm());
        }
    }
    worst
}

/// `¼ ε_ijk σⁱ_αβ σʲ_δγ([Û_αβ,Û†_γδ] − [Û_δγ,Û†_βα])`, or with `U†_δγ` and `U_γδ` in
/// place of `U†_γδ` and `U_δγ` when `literal`.
fn exchange_expansion(vel: &VelocityFamily, k: usize, literal: bool) -> SuperOp {
    let sg = pauli();
    let s = *vel.v[0].src();
    let mut expanded = Vec::new();
    for (i, j, _, e) in triples().filter(|t| t.2 == k) {
        for (al, be, de, ga) in index_quads() {
            let c = sg[i][[al, be]] * sg[j][[de, ga]] * e;
            if c == C64::new(0.0, 0.0) {
                continue;
            }
            let (x, y) = if literal {
                (vel.u[al][be].commutator(&vel.udag[de][ga]), vel.u[ga][de].commutator(&vel.udag[be][al]))
            } else {
                (vel.u[al][be].commutator(&vel.udag[ga][de]), vel.u[de][ga].commutator(&vel.udag[be][al]))
            };
            expanded.push((c * 0.25, &x - &y));
        }
    }
    combo(s, expanded.iter().map(|(c, op)| (*c, op)))
}

fn vv_contracted(vel: &VelocityFamily, k: usize) -> SuperOp {
    let s = *vel.v[0].src();
    let parts: Vec<SuperOp> = triples()
        .filter(|t| t.2 == k)
        .map(|(i, j, _, e)| vel.v[i].commutator(&vel.v[j]).scale_re(e))
        .collect();
    combo(s, parts.iter().map(|op| (C64::new(1.0, 0.0), op)))
}

/// The exchange expansion with the `δγ` pair transposed on both commutators.
pub fn printed_exchange_expansion(vel: &VelocityFamily, window: &Window) -> Comparison {
    (0..3)
        .map(|k| compare(&vv_contracted(vel, k), &exchange_expansion(vel, k, true), window))
        .fold(Comparison::default(), Comparison::merge)
}

/// The contraction chain for `ε_ijk[V̂_i,V̂_j]`:
///
/// * `ε_ijk[V̂_i,V̂_j] = ¼ ε_ijk σⁱ_αβ σʲ_δγ([Û_αβ,Û†_γδ] − [Û_δγ,Û†_βα])`;
/// * `σᵏ_αβ[Û_αδ,Û†_βδ] = −λσᵏ_αβ â⁺_α â_β P(Ĉ+2)`;
/// * `σᵏ_αβ[Û_δβ,Û†_δα] = +λσᵏ_αβ b̂⁺_α b̂_β P(Ĉ+2)`;
/// * `ε_ijk[V̂_i,V̂_j] = (i/2)(first − second)`;
/// * `ε_ijk[V̂_i,V̂_j] = −iλ(Ĉ+2)PŜ_k4`.
pub fn contraction_chain(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let s = *alg.sector();
    let sg = pauli();
    let lam = alg.lambda();
    let p = p_op(alg);
    let c2 = alg.central_shifted();
    let pc = &p * &c2;
    let mut out = Comparison::default();
    for k in 0..3 {
        let lhs = vv_contracted(vel, k);

        let first_line = exchange_expansion(vel, k, false);

        let mut first = Vec::new();
        let mut second = Vec::new();
        let mut first_rhs = Vec::new();
        let mut second_rhs = Vec::new();
        for al in 0..2 {
            for be in 0..2 {
                let c = sg[k][[al, be]];
                if c == C64::new(0.0, 0.0) {
                    continue;
                }
                for de in 0..2 {
                    first.push((c, vel.u[al][de].commutator(&vel.udag[be][de])));
                    second.push((c, vel.u[de][be].commutator(&vel.udag[de][al])));
                }
                first_rhs.push((c * -lam, alg.aa(al, be) * &pc));
                second_rhs.push((c * lam, alg.bb(al, be) * &pc));
            }
        }
        let sum = |v: &[(C64, SuperOp)]| combo(s, v.iter().map(|(c, op)| (*c, op)));
        let (f, g) = (sum(&first), sum(&second));
        let final_rhs = (&c2 * &(&p * alg.s(k + 1, 4))).scale(-I * lam);
        out = out
            .merge(compare(&lhs, &first_line, window))
            .merge(compare(&f, &sum(&first_rhs), window))
            .merge(compare(&g, &sum(&second_rhs), window))
            .merge(compare(&lhs, &(&f - &g).scale(I * 0.5), window))
            .merge(compare(&lhs, &final_rhs, window));
    }
    out
}

/// Final line with the extra factor 2: `ε_ijk[V̂_i,V̂_j] = −2iλκPŜ_k4`.
pub fn doubled_final_line(alg: &Algebra, vel: &VelocityFamily, window: &Window) -> Comparison {
    let s = *alg.sector();
    let p = p_op(alg);
    let k = s.kappa() as f64;
    (0..3)
        .map(|kk| {
            let lhs = vv_contracted(vel, kk);
            let rhs = (&p * alg.s(kk + 1, 4)).scale(-I * (2.0 * alg.lambda() * k));
            compare(&lhs, &rhs, window)
        })
        .fold(Comparison::default(), Comparison::merge)
}
