//! Truncated two-mode bosonic Fock space.
//!
//! States `|n₁,n₂⟩` with `n₁+n₂ ≤ n_max` are ordered level-major; inside level `n`
//! the states run `(n,0), (n−1,1), …, (0,n)`, so the position of a state inside its
//! level is `n₂`.

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::{Error, Result, C64, ZERO};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockBasis {
    n_max: usize,
    states: Vec<(usize, usize)>,
    level_offsets: Vec<usize>,
}

impl FockBasis {
    pub fn new(n_max: usize) -> Self {
        let mut states = Vec::with_capacity(level_count(n_max));
        let mut level_offsets = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            level_offsets.push(states.len());
            states.extend((0..=n).map(|k| (n - k, k)));
        }
        Self {
            n_max,
            states,
            level_offsets,
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[(usize, usize)] {
        &self.states
    }

    pub fn level_offsets(&self) -> &[usize] {
        &self.level_offsets
    }

    /// Index range of level `n` inside the basis.
    pub fn level_range(&self, n: usize) -> std::ops::Range<usize> {
        let start = self.level_offsets[n];
        start..start + n + 1
    }

    pub fn index_of(&self, n1: usize, n2: usize) -> Option<usize> {
        let n = n1 + n2;
        (n <= self.n_max).then(|| self.level_offsets[n] + n2)
    }

    pub fn level_of(&self, index: usize) -> usize {
        let (n1, n2) = self.states[index];
        n1 + n2
    }
}

/// Number of states with `n₁+n₂ ≤ n_max`.
pub fn level_count(n_max: usize) -> usize {
    (n_max + 1) * (n_max + 2) / 2
}

pub fn build_basis(n_max: usize) -> FockBasis {
    FockBasis::new(n_max)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LadderKind {
    Annihilate,
    Create,
}

/// Validated mode label α ∈ {1, 2}; stored zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mode(u8);

impl Mode {
    pub const ONE: Mode = Mode(0);
    pub const TWO: Mode = Mode(1);
    pub const BOTH: [Mode; 2] = [Mode::ONE, Mode::TWO];

    pub fn new(alpha: usize) -> Result<Self> {
        match alpha {
            1 | 2 => Ok(Mode(alpha as u8 - 1)),
            other => Err(Error::InvalidMode(other)),
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn label(self) -> usize {
        self.0 as usize + 1
    }
}

/// `a_α` restricted to `F_n → F_{n−1}` as an `n × (n+1)` real matrix.
///
/// For `n = 0` the result has zero rows.
pub fn lowering_block(mode: Mode, n: usize) -> Array2<f64> {
    let mut m = Array2::zeros((n, n + 1));
    if n == 0 {
        return m;
    }
    for k in 0..=n {
        match mode.index() {
            0 if k < n => m[[k, k]] = ((n - k) as f64).sqrt(),
            1 if k > 0 => m[[k - 1, k]] = (k as f64).sqrt(),
            _ => {}
        }
    }
    m
}

/// `a⁺_α` restricted to `F_n → F_{n+1}`.
pub fn raising_block(mode: Mode, n: usize) -> Array2<f64> {
    lowering_block(mode, n + 1).reversed_axes()
}

#[derive(Debug, Clone, PartialEq)]
pub struct LadderMatrix {
    pub kind: LadderKind,
    pub mode: Mode,
    pub matrix: Array2<C64>,
}

impl LadderMatrix {
    /// Level block connecting level `n` to `n ∓ 1`, if any.
    pub fn level_block(&self, n: usize) -> Array2<f64> {
        match self.kind {
            LadderKind::Annihilate => lowering_block(self.mode, n),
            LadderKind::Create => raising_block(self.mode, n),
        }
    }
}

/// Ladder operator on the full truncated space; creation above `n_max` is cut to zero.
pub fn ladder(basis: &FockBasis, mode: Mode, kind: LadderKind) -> LadderMatrix {
    let d = basis.dim();
    let mut matrix = Array2::from_elem((d, d), ZERO);
    for n in 1..=basis.n_max() {
        let low = lowering_block(mode, n);
        let rows = basis.level_range(n - 1);
        let cols = basis.level_range(n);
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                let v = low[[i, j]];
                if v != 0.0 {
                    match kind {
                        LadderKind::Annihilate => matrix[[r, c]] = C64::new(v, 0.0),
                        LadderKind::Create => matrix[[c, r]] = C64::new(v, 0.0),
                    }
                }
            }
        }
    }
    LadderMatrix { kind, mode, matrix }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Projector {
    pub matrix: Array2<C64>,
    pub rank: usize,
    /// Set when the guard swallows every level.
    pub empty: bool,
}

/// Orthogonal projector onto levels `n ≤ n_max − guard`.
pub fn interior_projector(basis: &FockBasis, guard: usize) -> Projector {
    let d = basis.dim();
    let mut matrix = Array2::from_elem((d, d), ZERO);
    if guard > basis.n_max() {
        return Projector {
            matrix,
            rank: 0,
            empty: true,
        };
    }
    let rank = level_count(basis.n_max() - guard);
    for i in 0..rank {
        matrix[[i, i]] = C64::new(1.0, 0.0);
    }
    Projector {
        matrix,
        rank,
        empty: false,
    }
}

/// Number operator `a⁺₁a₁ + a⁺₂a₂` as a dense matrix.
pub fn number_operator(basis: &FockBasis) -> Array2<C64> {
    let d = basis.dim();
    Array2::from_shape_fn((d, d), |(i, j)| {
        if i == j {
            C64::new(basis.level_of(i) as f64, 0.0)
        } else {
            ZERO
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residual::frobenius;

    fn comm(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
        a.dot(b) - b.dot(a)
    }

    #[test]
    fn small_bases() {
        assert_eq!(build_basis(0).states(), &[(0, 0)]);
        assert_eq!(build_basis(1).states(), &[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(build_basis(20).dim(), 231);
    }

    #[test]
    fn dimension_matches_brute_force() {
        for n_max in 0..=20 {
            let brute = (0..=n_max)
                .flat_map(|a| (0..=n_max).map(move |b| (a, b)))
                .filter(|(a, b)| a + b <= n_max)
                .count();
            let basis = build_basis(n_max);
            assert_eq!(basis.dim(), brute);
            assert_eq!(basis.dim(), level_count(n_max));
            for n in 0..=n_max {
                assert_eq!(basis.level_range(n).len(), n + 1);
            }
        }
    }

    #[test]
    fn single_steps() {
        let b = build_basis(3);
        let a1 = ladder(&b, Mode::ONE, LadderKind::Annihilate);
        let c2 = ladder(&b, Mode::TWO, LadderKind::Create);
        let v10 = b.index_of(1, 0).unwrap();
        let v00 = b.index_of(0, 0).unwrap();
        assert_eq!(a1.matrix[[v00, v10]], C64::new(1.0, 0.0));
        let v01 = b.index_of(0, 1).unwrap();
        let v02 = b.index_of(0, 2).unwrap();
        assert!((c2.matrix[[v02, v01]].re - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn ccr_on_interior() {
        let b = build_basis(7);
        let p = interior_projector(&b, 1);
        for al in Mode::BOTH {
            for be in Mode::BOTH {
                let a = ladder(&b, al, LadderKind::Annihilate).matrix;
                let c = ladder(&b, be, LadderKind::Create).matrix;
                let mut d = comm(&a, &c);
                if al == be {
                    d = d - Array2::<C64>::eye(b.dim());
                }
                assert!(frobenius(&d.dot(&p.matrix)) <= 1e-14);
            }
        }
    }

    #[test]
    fn create_is_adjoint() {
        let b = build_basis(5);
        for m in Mode::BOTH {
            let a = ladder(&b, m, LadderKind::Annihilate).matrix;
            let c = ladder(&b, m, LadderKind::Create).matrix;
            assert_eq!(a.t().mapv(|z| z.conj()), c);
        }
    }

    #[test]
    fn projector_ranks() {
        assert_eq!(interior_projector(&build_basis(4), 0).rank, 15);
        assert_eq!(interior_projector(&build_basis(2), 1).rank, 3);
        assert_eq!(interior_projector(&build_basis(12), 4).rank, 45);
        let p = interior_projector(&build_basis(2), 3);
        assert!(p.empty && p.rank == 0);
    }

    #[test]
    fn invalid_mode() {
        assert!(Mode::new(0).is_err());
        assert!(Mode::new(3).is_err());
        assert_eq!(Mode::new(2).unwrap(), Mode::TWO);
    }
}
