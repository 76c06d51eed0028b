//! Fuzzy coordinates `x_i = λ σ^i_αβ a⁺_α a_β` and radius `r = λ(a⁺_α a_α + 1)`.
//!
//! The number operator in `r` is taken from the level grading, so `r` is exactly
//! diagonal and `[x_i, r]` vanishes identically.

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::conventions::{eps3, pauli};
use crate::fock::{ladder, number_operator, FockBasis, LadderKind, Mode};
use crate::residual::relative;
use crate::{Error, Result, C64, I};

#[derive(Debug, Clone, PartialEq)]
pub struct NcCoordinates {
    pub lambda: f64,
    pub x: [Array2<C64>; 3],
    pub r: Array2<C64>,
    pub pauli: [Array2<C64>; 3],
}

pub fn build_coordinates(basis: &FockBasis, lambda: f64) -> Result<NcCoordinates> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidLambda(lambda));
    }
    let sigma = pauli();
    let ann: Vec<_> = Mode::BOTH
        .iter()
        .map(|&m| ladder(basis, m, LadderKind::Annihilate).matrix)
        .collect();
    let cre: Vec<_> = Mode::BOTH
        .iter()
        .map(|&m| ladder(basis, m, LadderKind::Create).matrix)
        .collect();
    let d = basis.dim();
    let x = std::array::from_fn(|i| {
        let mut acc = Array2::from_elem((d, d), C64::new(0.0, 0.0));
        for a in 0..2 {
            for b in 0..2 {
                let c = sigma[i][[a, b]];
                if c.norm() > 0.0 {
                    acc = acc + cre[a].dot(&ann[b]) * (c * lambda);
                }
            }
        }
        acc
    });
    let r = (number_operator(basis) + Array2::eye(d).mapv(|v: f64| C64::new(v, 0.0))) * lambda;
    Ok(NcCoordinates {
        lambda,
        x,
        r,
        pauli: sigma,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoordinateResiduals {
    /// `[x_i, x_j] = 2iλ ε_ijk x_k`.
    pub commutator: f64,
    /// `[x_i, r] = 0`.
    pub radius: f64,
    /// `x² = r² − λ²`.
    pub square: f64,
}

impl CoordinateResiduals {
    pub fn max(&self) -> f64 {
        self.commutator.max(self.radius).max(self.square)
    }
}

pub fn verify_coordinate_algebra(nc: &NcCoordinates) -> CoordinateResiduals {
    let lam = nc.lambda;
    let d = nc.r.nrows();
    let zero = Array2::from_elem((d, d), C64::new(0.0, 0.0));
    let comm = |a: &Array2<C64>, b: &Array2<C64>| a.dot(b) - b.dot(a);
    let mut commutator: f64 = 0.0;
    let mut radius: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let mut rhs = zero.clone();
            for k in 0..3 {
                let e = eps3(i, j, k);
                if e != 0.0 {
                    rhs = rhs + &nc.x[k] * (I * (2.0 * lam * e));
                }
            }
            commutator = commutator.max(relative(&comm(&nc.x[i], &nc.x[j]), &rhs));
        }
        radius = radius.max(relative(&comm(&nc.x[i], &nc.r), &zero));
    }
    let x2 = nc.x.iter().fold(zero.clone(), |acc, x| acc + x.dot(x));
    let rhs = nc.r.dot(&nc.r) - Array2::eye(d).mapv(|v: f64| C64::new(v * lam * lam, 0.0));
    CoordinateResiduals {
        commutator,
        radius,
        square: relative(&x2, &rhs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::build_basis;

    #[test]
    fn relations_hold() {
        let nc = build_coordinates(&build_basis(8), 1.3).unwrap();
        let res = verify_coordinate_algebra(&nc);
        assert!(res.max() <= 1e-13, "{res:?}");
        assert_eq!(res.radius, 0.0);
    }

    #[test]
    fn low_levels() {
        let b = build_basis(3);
        let lam = 2.0;
        let nc = build_coordinates(&b, lam).unwrap();
        for i in 0..3 {
            assert_eq!(nc.x[i][[0, 0]], C64::new(0.0, 0.0));
        }
        assert_eq!(nc.r[[0, 0]].re, lam);
        let (p, q) = (b.index_of(1, 0).unwrap(), b.index_of(0, 1).unwrap());
        assert_eq!(nc.x[2][[p, p]].re, lam);
        assert_eq!(nc.x[2][[q, q]].re, -lam);
        assert_eq!(nc.x[2][[p, q]], C64::new(0.0, 0.0));
        let lvl3 = b.index_of(3, 0).unwrap();
        assert_eq!(nc.r[[lvl3, lvl3]].re, 8.0);
    }

    #[test]
    fn x_squared_spectrum() {
        let b = build_basis(6);
        let lam = 0.5;
        let nc = build_coordinates(&b, lam).unwrap();
        let x2 = nc.x.iter().fold(Array2::<C64>::zeros((b.dim(), b.dim())), |acc, x| acc + x.dot(x));
        for i in 0..b.dim() {
            let n = b.level_of(i) as f64;
            assert!((x2[[i, i]].re - lam * lam * n * (n + 2.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_lambda() {
        assert!(build_coordinates(&build_basis(2), 0.0).is_err());
    }
}
