//! The fifteen 4×4 matrices `S_AB` of su(2,2) in so(4,2) notation, with Γ and η.
//!
//! Two sets are provided. [`printed_matrix`] follows the textbook list verbatim.
//! [`matrix`] is the consistent set used by the engine: the listed `(i/2)(0 1; 1 0)`
//! matrix is `S₅₄` (so `S₄₅` is its negative), the metric is
//! `η = diag(−1, 1, 1, 1, 1, −1)` and the reality condition is `S⁺ = ΓSΓ`. With these
//! all 105 commutators close exactly. The verbatim list fails closure with
//! `η = diag(1,1,1,1,−1,−1)` and fails `S⁺ = −ΓSΓ`; see [`printed_eta`].

use ndarray::{s, Array2};

use crate::conventions::{eps3, identity2, pauli};
use crate::residual::relative;
use crate::{C64, I, ONE, ZERO};

#[derive(Debug, Clone, PartialEq)]
pub struct Su22Matrix {
    pub a: usize,
    pub b: usize,
    pub matrix: Array2<C64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Su22Set {
    pub generators: Vec<Su22Matrix>,
    pub gamma: Array2<C64>,
    pub eta: Array2<f64>,
}

/// Index pairs `(A, B)` with `A < B`, in lexicographic order.
pub fn index_pairs() -> Vec<(usize, usize)> {
    (0..6)
        .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
        .collect()
}

/// The 105 unordered pairs of distinct generators.
pub fn generator_pairs() -> Vec<((usize, usize), (usize, usize))> {
    let p = index_pairs();
    let mut out = Vec::with_capacity(105);
    for (i, x) in p.iter().enumerate() {
        for y in &p[i + 1..] {
            out.push((*x, *y));
        }
    }
    out
}

fn block(tl: &Array2<C64>, tr: &Array2<C64>, bl: &Array2<C64>, br: &Array2<C64>) -> Array2<C64> {
    let mut m = Array2::from_elem((4, 4), ZERO);
    m.slice_mut(s![0..2, 0..2]).assign(tl);
    m.slice_mut(s![0..2, 2..4]).assign(tr);
    m.slice_mut(s![2..4, 0..2]).assign(bl);
    m.slice_mut(s![2..4, 2..4]).assign(br);
    m
}

/// Matrix for `A < B` from the verbatim list.
fn listed(a: usize, b: usize) -> Array2<C64> {
    let sg = pauli();
    let z = Array2::from_elem((2, 2), ZERO);
    let one = identity2();
    let half = C64::new(0.5, 0.0);
    let ihalf = I * 0.5;
    match (a, b) {
        (i @ 1..=3, j @ 1..=3) => {
            let mut m = Array2::from_elem((4, 4), ZERO);
            for k in 0..3 {
                let e = eps3(i - 1, j - 1, k);
                if e != 0.0 {
                    m = m + block(&sg[k], &z, &z, &sg[k]) * (half * e);
                }
            }
            m
        }
        (k @ 1..=3, 4) => block(&sg[k - 1], &z, &z, &(-&sg[k - 1])) * half,
        (0, k @ 1..=3) => block(&z, &sg[k - 1], &sg[k - 1], &z) * ihalf,
        (k @ 1..=3, 5) => block(&z, &sg[k - 1], &(-&sg[k - 1]), &z) * half,
        (4, 5) => block(&z, &one, &one, &z) * ihalf,
        (0, 4) => block(&z, &one, &(-&one), &z) * half,
        (0, 5) => block(&one, &z, &z, &(-&one)) * half,
        _ => unreachable!("listed() is called with A < B only"),
    }
}

fn antisym(a: usize, b: usize, f: impl Fn(usize, usize) -> Array2<C64>) -> Array2<C64> {
    use std::cmp::Ordering::*;
    match a.cmp(&b) {
        Less => f(a, b),
        Greater => -f(b, a),
        Equal => Array2::from_elem((4, 4), ZERO),
    }
}

/// `S_AB` exactly as listed (antisymmetric extension).
pub fn printed_matrix(a: usize, b: usize) -> Array2<C64> {
    antisym(a, b, listed)
}

/// Consistent `S_AB`: the listed `S₄₅` entry read as `S₅₄`.
pub fn matrix(a: usize, b: usize) -> Array2<C64> {
    antisym(a, b, |a, b| {
        if (a, b) == (4, 5) {
            -listed(4, 5)
        } else {
            listed(a, b)
        }
    })
}

pub fn gamma() -> Array2<C64> {
    Array2::from_diag(&ndarray::arr1(&[ONE, ONE, -ONE, -ONE]))
}

/// Metric under which the consistent matrices close.
pub fn eta() -> Array2<f64> {
    Array2::from_diag(&ndarray::arr1(&[-1.0, 1.0, 1.0, 1.0, 1.0, -1.0]))
}

/// Metric quoted alongside the verbatim list.
pub fn printed_eta() -> Array2<f64> {
    Array2::from_diag(&ndarray::arr1(&[1.0, 1.0, 1.0, 1.0, -1.0, -1.0]))
}

pub fn build_su22_matrices() -> Su22Set {
    Su22Set {
        generators: index_pairs()
            .into_iter()
            .map(|(a, b)| Su22Matrix {
                a,
                b,
                matrix: matrix(a, b),
            })
            .collect(),
        gamma: gamma(),
        eta: eta(),
    }
}

/// Right-hand side `i(η_AC S_BD − η_BC S_AD − η_AD S_BC + η_BD S_AC)`.
pub fn structure_rhs<T>(
    eta: &Array2<f64>,
    (a, b): (usize, usize),
    (c, d): (usize, usize),
    mut gen: impl FnMut(usize, usize) -> T,
    combine: impl Fn(&[(C64, T)]) -> T,
) -> T {
    let terms = [
        (I * eta[[a, c]], gen(b, d)),
        (-I * eta[[b, c]], gen(a, d)),
        (-I * eta[[a, d]], gen(b, c)),
        (I * eta[[b, d]], gen(a, c)),
    ];
    combine(&terms)
}

fn dense_combine(terms: &[(C64, Array2<C64>)]) -> Array2<C64> {
    terms
        .iter()
        .fold(Array2::from_elem((4, 4), ZERO), |acc, (c, m)| acc + m * *c)
}

/// Worst relative residual of the closure relations over all 105 pairs.
pub fn algebra_residual(gen: impl Fn(usize, usize) -> Array2<C64>, eta: &Array2<f64>) -> f64 {
    generator_pairs()
        .into_iter()
        .map(|(x, y)| {
            let (sx, sy) = (gen(x.0, x.1), gen(y.0, y.1));
            let lhs = sx.dot(&sy) - sy.dot(&sx);
            let rhs = structure_rhs(eta, x, y, &gen, dense_combine);
            relative(&lhs, &rhs)
        })
        .fold(0.0, f64::max)
}

/// Worst residual of `S⁺ = sign · Γ S Γ` over the 15 generators.
pub fn reality_residual(gen: impl Fn(usize, usize) -> Array2<C64>, sign: f64) -> f64 {
    let g = gamma();
    index_pairs()
        .into_iter()
        .map(|(a, b)| {
            let m = gen(a, b);
            let lhs = m.t().mapv(|z| z.conj());
            let rhs = g.dot(&m).dot(&g) * C64::new(sign, 0.0);
            relative(&lhs, &rhs)
        })
        .fold(0.0, f64::max)
}

/// Generators that commute with the radius: `S_ab` (a,b ≤ 4) and `S₀₅`.
pub fn is_rotation(a: usize, b: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    (1..=4).contains(&a) && (1..=4).contains(&b) || (a, b) == (0, 5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_counts() {
        assert_eq!(index_pairs().len(), 15);
        assert_eq!(generator_pairs().len(), 105);
    }

    #[test]
    fn consistent_set_closes_exactly() {
        assert!(algebra_residual(matrix, &eta()) <= 1e-15);
        assert!(reality_residual(matrix, 1.0) <= 1e-15);
    }

    #[test]
    fn verbatim_set_does_not_close() {
        assert!(algebra_residual(printed_matrix, &printed_eta()) > 0.1);
        assert!(reality_residual(printed_matrix, -1.0) > 0.1);
    }

    #[test]
    fn s05_and_time_sign() {
        let m = matrix(0, 5);
        assert_eq!(m[[0, 0]], C64::new(0.5, 0.0));
        assert_eq!(m[[3, 3]], C64::new(-0.5, 0.0));
        let (s1, s2) = (matrix(0, 1), matrix(0, 2));
        let c = s1.dot(&s2) - s2.dot(&s1);
        assert!(relative(&c, &(matrix(1, 2) * -I)) < 1e-15);
    }

    #[test]
    fn hermiticity_classes() {
        for (a, b) in index_pairs() {
            let m = matrix(a, b);
            let h = m.t().mapv(|z| z.conj());
            if is_rotation(a, b) {
                assert!(relative(&h, &m) < 1e-15, "({a},{b})");
            } else {
                assert!(relative(&h, &(-&m)) < 1e-15, "({a},{b})");
            }
        }
    }
}
