//! Operator representation `Ŝ_AB = Â⁺ Γ S_AB Â`, the central element `Ĉ = Â⁺ΓÂ`,
//! the radius `r̂` and the boost vectors `ζ̂_a`, `ŵ_a` on one sector.

use std::sync::OnceLock;

use ndarray::Array2;

use crate::algebra::radial::{radial_multiplier, RadialFunction};
use crate::algebra::su22::{self, generator_pairs, structure_rhs};
use crate::algebra::superop::{linear_combination, SuperOp};
use crate::algebra::word::{OpExpr, Primitive, Word};
use crate::residual::{compare, compare_basis, Comparison, Window};
use crate::sector::MonopoleSector;
use crate::{C64, I, ZERO};

/// `Σ_pq (Γ M)_pq Â⁺_p Â_q` as a word expression.
pub fn bilinear_expr(m: &Array2<C64>) -> OpExpr {
    let gm = su22::gamma().dot(m);
    let mut e = OpExpr::default();
    for p in 0..4 {
        for q in 0..4 {
            let c = gm[[p, q]];
            if c != ZERO {
                e.push(
                    c,
                    Word::ladders(&[Primitive::big_a_dag(p), Primitive::big_a(q)]),
                );
            }
        }
    }
    e
}

pub fn s_expr(a: usize, b: usize) -> OpExpr {
    bilinear_expr(&su22::matrix(a, b))
}

pub fn central_expr() -> OpExpr {
    bilinear_expr(&Array2::eye(4).mapv(|v: f64| C64::new(v, 0.0)))
}

/// Operators of one sector, built once and shared read-only.
#[derive(Debug)]
pub struct Algebra {
    sector: MonopoleSector,
    /// `Â⁺_p Â_q`, routed through the sector `κ − 1`.
    bilinear: Vec<Vec<SuperOp>>,
    s: OnceLock<Vec<Vec<SuperOp>>>,
    central: OnceLock<SuperOp>,
    r: SuperOp,
    r_inv: SuperOp,
}

impl Algebra {
    pub fn new(sector: MonopoleSector) -> Self {
        let bilinear = (0..4)
            .map(|p| {
                (0..4)
                    .map(|q| {
                        Word::ladders(&[Primitive::big_a_dag(p), Primitive::big_a(q)])
                            .materialize(sector)
                    })
                    .collect()
            })
            .collect();
        Self {
            sector,
            bilinear,
            s: OnceLock::new(),
            central: OnceLock::new(),
            r: radial_multiplier(&RadialFunction::r(), sector),
            r_inv: radial_multiplier(&RadialFunction::inv_r(), sector),
        }
    }

    pub fn sector(&self) -> &MonopoleSector {
        &self.sector
    }

    pub fn lambda(&self) -> f64 {
        self.sector.lambda()
    }

    /// `Â⁺_p Â_q` with `Â = (â₁, â₂, b̂₁, b̂₂)`.
    pub fn bilinear(&self, p: usize, q: usize) -> &SuperOp {
        &self.bilinear[p][q]
    }

    /// `â⁺_α â_β` (zero-based modes).
    pub fn aa(&self, alpha: usize, beta: usize) -> &SuperOp {
        self.bilinear(alpha, beta)
    }

    /// `b̂⁺_α b̂_β`.
    pub fn bb(&self, alpha: usize, beta: usize) -> &SuperOp {
        self.bilinear(2 + alpha, 2 + beta)
    }

    /// `â⁺_α b̂_β`.
    pub fn ab(&self, alpha: usize, beta: usize) -> &SuperOp {
        self.bilinear(alpha, 2 + beta)
    }

    /// `b̂⁺_α â_β`.
    pub fn ba(&self, alpha: usize, beta: usize) -> &SuperOp {
        self.bilinear(2 + alpha, beta)
    }

    /// `Σ (Γ M)_pq Â⁺_p Â_q`.
    pub fn represent(&self, m: &Array2<C64>) -> SuperOp {
        let gm = su22::gamma().dot(m);
        let terms = (0..4).flat_map(|p| (0..4).map(move |q| (p, q)));
        linear_combination(
            self.sector,
            self.sector,
            terms.map(|(p, q)| (gm[[p, q]], &self.bilinear[p][q])),
        )
        .expect("bilinears share the sector")
    }

    fn s_table(&self) -> &Vec<Vec<SuperOp>> {
        self.s.get_or_init(|| {
            (0..6)
                .map(|a| (0..6).map(|b| self.represent(&su22::matrix(a, b))).collect())
                .collect()
        })
    }

    /// `Ŝ_AB`, antisymmetric in `(A, B)`.
    pub fn s(&self, a: usize, b: usize) -> &SuperOp {
        &self.s_table()[a][b]
    }

    /// Central element `Ĉ = â⁺â − b̂⁺b̂`.
    pub fn central(&self) -> &SuperOp {
        self.central.get_or_init(|| {
            self.represent(&Array2::eye(4).mapv(|v: f64| C64::new(v, 0.0)))
        })
    }

    /// `Ĉ + 2`.
    pub fn central_shifted(&self) -> SuperOp {
        self.central() + &SuperOp::scalar(self.sector, C64::new(2.0, 0.0))
    }

    pub fn r_hat(&self) -> &SuperOp {
        &self.r
    }

    pub fn r_inv(&self) -> &SuperOp {
        &self.r_inv
    }

    pub fn radial(&self, f: &RadialFunction) -> SuperOp {
        radial_multiplier(f, self.sector)
    }

    pub fn scalar(&self, c: C64) -> SuperOp {
        SuperOp::scalar(self.sector, c)
    }

    pub fn identity(&self) -> SuperOp {
        SuperOp::identity(self.sector)
    }

    /// `ζ̂_a = 2(Ŝ_k5, Ŝ₀₄)`, zero-based `a = 0..4`.
    pub fn zeta(&self, a: usize) -> SuperOp {
        if a < 3 {
            self.s(a + 1, 5) * 2.0
        } else {
            self.s(0, 4) * 2.0
        }
    }

    /// `ŵ_a = 2i(Ŝ₀ₖ, Ŝ₅₄)`.
    pub fn w(&self, a: usize) -> SuperOp {
        if a < 3 {
            self.s(0, a + 1) * (I * 2.0)
        } else {
            self.s(5, 4) * (I * 2.0)
        }
    }

    /// Worst residual of the operator-level closure relations over all 105 pairs.
    pub fn closure(&self, window: &Window, eta: &Array2<f64>) -> Comparison {
        let s = self.sector;
        generator_pairs()
            .into_iter()
            .map(|(x, y)| {
                let lhs = self.s(x.0, x.1).commutator(self.s(y.0, y.1));
                let rhs = structure_rhs(
                    eta,
                    x,
                    y,
                    |a, b| self.s(a, b).clone(),
                    |terms| {
                        linear_combination(s, s, terms.iter().map(|(c, op)| (*c, op)))
                            .expect("generators share the sector")
                    },
                );
                compare(&lhs, &rhs, window)
            })
            .fold(Comparison::default(), Comparison::merge)
    }

    /// `[Â_a, Γ_bc Â⁺_c] = δ_ab` over all 16 index pairs.
    pub fn canonical_pairing(&self, window: &Window) -> Comparison {
        let s = self.sector;
        let g = [1.0, 1.0, -1.0, -1.0];
        let mut out = Comparison::default();
        for a in 0..4 {
            for b in 0..4 {
                let up = Word::ladders(&[Primitive::big_a(a), Primitive::big_a_dag(b)])
                    .materialize(s);
                let down = Word::ladders(&[Primitive::big_a_dag(b), Primitive::big_a(a)])
                    .materialize(s);
                let lhs = (&up - &down).scale_re(g[b]);
                let rhs = SuperOp::scalar(s, C64::new(if a == b { 1.0 } else { 0.0 }, 0.0));
                out = out.merge(compare(&lhs, &rhs, window));
            }
        }
        out
    }

    /// `[â_α, â⁺_β] = δ`, `[b̂_α, b̂⁺_β] = −δ`, and left/right words commute.
    pub fn ladder_relations(&self, window: &Window) -> Comparison {
        let s = self.sector;
        let mut out = Comparison::default();
        let comm = |x: Primitive, y: Primitive| {
            let xy = Word::ladders(&[x, y]).materialize(s);
            let yx = Word::ladders(&[y, x]).materialize(s);
            &xy - &yx
        };
        for al in crate::fock::Mode::BOTH {
            for be in crate::fock::Mode::BOTH {
                let d = if al == be { 1.0 } else { 0.0 };
                let left = comm(Primitive::a(al), Primitive::a_dag(be));
                out = out.merge(compare(&left, &self.scalar(C64::new(d, 0.0)), window));
                let right = comm(Primitive::b(al), Primitive::b_dag(be));
                out = out.merge(compare(&right, &self.scalar(C64::new(-d, 0.0)), window));
                for (x, y) in [
                    (Primitive::a(al), Primitive::b(be)),
                    (Primitive::a(al), Primitive::b_dag(be)),
                    (Primitive::a_dag(al), Primitive::b(be)),
                    (Primitive::a_dag(al), Primitive::b_dag(be)),
                ] {
                    let c = comm(x, y);
                    out = out.merge(compare(&c, &SuperOp::zero(s, s), &Window::new(s, 0)));
                }
            }
        }
        out
    }

    /// `(Ĉ+2)Ψ = κΨ` for every basis element of the window.
    pub fn central_charge(&self, window: &Window) -> Comparison {
        let k = self.sector.kappa() as f64;
        compare_basis(&self.central_shifted(), &self.scalar(C64::new(k, 0.0)), window)
    }

    /// `[Ŝ_AB, r̂] = 0` for the rotation generators.
    pub fn rotations_commute_with_radius(&self, window: &Window) -> Comparison {
        su22::index_pairs()
            .into_iter()
            .filter(|&(a, b)| su22::is_rotation(a, b))
            .map(|(a, b)| {
                let c = self.s(a, b).commutator(&self.r);
                compare(&c, &SuperOp::zero(self.sector, self.sector), window)
            })
            .fold(Comparison::default(), Comparison::merge)
    }

    /// Rotation generators are self-adjoint under the weighted product.
    pub fn rotations_self_adjoint(&self, window: &Window) -> Comparison {
        su22::index_pairs()
            .into_iter()
            .filter(|&(a, b)| su22::is_rotation(a, b))
            .map(|(a, b)| {
                let op = self.s(a, b);
                compare(&op.weighted_adjoint(), op, window)
            })
            .fold(Comparison::default(), Comparison::merge)
    }

    /// `r̂ = λŜ₀₅ = (λ/2)(â⁺â + b̂⁺b̂)`.
    pub fn radius_forms(&self, window: &Window) -> Comparison {
        let lam = self.lambda();
        let from_s = self.s(0, 5) * lam;
        let mut number = SuperOp::zero(self.sector, self.sector);
        for al in 0..2 {
            number = &(&number + self.aa(al, al)) + self.bb(al, al);
        }
        let from_n = &number * (lam / 2.0);
        compare(&from_s, &self.r, window).merge(compare(&from_n, &self.r, window))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sector::build_sector;

    #[test]
    fn central_element_counts_kappa() {
        for kappa in -3..=3 {
            let s = build_sector(kappa, 6, 1.0).unwrap();
            let alg = Algebra::new(s);
            assert!(alg.central_charge(&Window::new(s, 1)).residual <= 1e-14);
        }
    }

    #[test]
    fn rotations_commute_with_radius() {
        let s = build_sector(2, 6, 1.0).unwrap();
        let alg = Algebra::new(s);
        assert_eq!(alg.rotations_commute_with_radius(&Window::new(s, 1)).residual, 0.0);
    }

    #[test]
    fn closure_on_guarded_window() {
        let s = build_sector(-1, 6, 1.0).unwrap();
        let alg = Algebra::new(s);
        let w = Window::new(s, 2);
        assert!(alg.closure(&w, &su22::eta()).residual <= 1e-12);
        assert!(alg.closure(&w, &su22::printed_eta()).residual > 1e-3);
    }

    #[test]
    fn pairing_and_radius() {
        let s = build_sector(1, 5, 0.5).unwrap();
        let alg = Algebra::new(s);
        let w = Window::new(s, 1);
        assert!(alg.canonical_pairing(&w).residual <= 1e-14);
        assert!(alg.radius_forms(&w).residual <= 1e-14);
        assert!(alg.ladder_relations(&w).residual <= 1e-14);
    }

    #[test]
    fn vacuum_is_rotation_invariant() {
        let s = build_sector(0, 3, 1.0).unwrap();
        let alg = Algebra::new(s);
        let v = crate::sector::SectorVector::unit(s, 0, 0, 0);
        for k in 0..3 {
            let mut acc = crate::sector::SectorVector::zeros(s);
            for i in 0..3 {
                for j in 0..3 {
                    let e = crate::conventions::eps3(i, j, k);
                    if e != 0.0 {
                        acc.axpy(C64::new(e, 0.0), &alg.s(i + 1, j + 1).apply(&v));
                    }
                }
            }
            assert_eq!(acc.norm_sqr(), 0.0);
        }
    }
}
