//! Fixed numerical conventions: Pauli matrices and Levi-Civita symbols.
//!
//! | object | convention |
//! |---|---|
//! | σ³ | `diag(1, −1)` |
//! | ε | `ε₁₂₃ = ε₁₂₃₄ = +1` (indices zero-based in code) |
//! | η | `diag(−1, 1, 1, 1, 1, −1)` on `A = 0…5` |
//! | Γ | `diag(1, 1, −1, −1)` |
//! | Ŝ₅₄ | built from the `(i/2)(0 1; 1 0)` matrix; `Ŝ₄₅ = −Ŝ₅₄` |
//! | reality | `S⁺_AB = Γ S_AB Γ` |
//! | ζ̂_a | `2(Ŝ_k5, Ŝ₀₄)` |
//! | ŵ_a | `2i(Ŝ₀ₖ, Ŝ₅₄)` |
//! | V̂_a | `2 r̂⁻¹ Ŝ₀ₐ` |
//! | Ṽ_k, Ṽ₄ | `(1/2r̂)(â⁺σ_k b̂ + b̂⁺σ_k â)`, `(i/2r̂)(â⁺b̂ − b̂⁺â)` |
//! | Ṽˢ_a | `2 r̂⁻¹ Ŝ_a5`, equal to `Ṽ_k` for `a = k` and `−Ṽ₄` for `a = 4` |

use ndarray::{array, Array2};

use crate::{C64, I, ONE, ZERO};

/// The three Pauli matrices, index 0 ↔ σ¹.
pub fn pauli() -> [Array2<C64>; 3] {
    [
        array![[ZERO, ONE], [ONE, ZERO]],
        array![[ZERO, -I], [I, ZERO]],
        array![[ONE, ZERO], [ZERO, -ONE]],
    ]
}

pub fn identity2() -> Array2<C64> {
    array![[ONE, ZERO], [ZERO, ONE]]
}

/// `ε_ijk` with zero-based indices.
pub fn eps3(i: usize, j: usize, k: usize) -> f64 {
    perm_sign(&[i, j, k])
}

/// `ε_abcd` with zero-based indices, `ε₀₁₂₃ = 1`.
pub fn eps4(a: usize, b: usize, c: usize, d: usize) -> f64 {
    perm_sign(&[a, b, c, d])
}

fn perm_sign(idx: &[usize]) -> f64 {
    let n = idx.len();
    if idx.iter().any(|&x| x >= n) {
        return 0.0;
    }
    let mut sign = 1.0;
    for a in 0..n {
        for b in a + 1..n {
            if idx[a] == idx[b] {
                return 0.0;
            }
            if idx[a] > idx[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Kronecker delta as a float.
pub fn delta(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levi_civita() {
        assert_eq!(eps3(0, 1, 2), 1.0);
        assert_eq!(eps3(1, 0, 2), -1.0);
        assert_eq!(eps3(2, 0, 1), 1.0);
        assert_eq!(eps3(0, 0, 1), 0.0);
        assert_eq!(eps4(0, 1, 2, 3), 1.0);
        assert_eq!(eps4(1, 0, 2, 3), -1.0);
        assert_eq!(eps4(3, 0, 1, 2), -1.0);
    }

    #[test]
    fn pauli_algebra() {
        let s = pauli();
        for i in 0..3 {
            for j in 0..3 {
                let prod = s[i].dot(&s[j]);
                let mut expect = identity2() * C64::new(delta(i, j), 0.0);
                for k in 0..3 {
                    expect = expect + &s[k] * (I * eps3(i, j, k));
                }
                assert_eq!(prod, expect);
            }
        }
    }
}
