//! Ladder words: left actions `â_α, â⁺_α`, right actions `b̂_α, b̂⁺_α`, radial
//! multipliers, and linear combinations of such words.
//!
//! On a sector element `X` (a block map `F_n → F_{n+κ}`):
//!
//! | primitive | action | κ | input level |
//! |---|---|---|---|
//! | `â_α` | `a_α X` | −1 | same |
//! | `â⁺_α` | `a⁺_α X` | +1 | same |
//! | `b̂_α` | `X a_α` | −1 | +1 |
//! | `b̂⁺_α` | `X a⁺_α` | +1 | −1 |
//!
//! A [`Word`] lists factors in product order, so the rightmost factor acts first.
//! [`Word::materialize`] builds block matrices; [`Word::apply`] acts factor by factor
//! on a vector without forming any matrix.

use std::collections::BTreeMap;

use ndarray::{linalg::kron, Array2};

use crate::algebra::radial::{radial_multiplier, RadialFunction};
use crate::algebra::superop::{Block, SuperOp};
use crate::fock::{lowering_block, raising_block, Mode};
use crate::sector::{MonopoleSector, SectorVector};
use crate::{Result, C64, ONE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Primitive {
    pub side: Side,
    pub create: bool,
    pub mode: Mode,
}

impl Primitive {
    pub fn a(mode: Mode) -> Self {
        Self {
            side: Side::Left,
            create: false,
            mode,
        }
    }

    pub fn a_dag(mode: Mode) -> Self {
        Self {
            side: Side::Left,
            create: true,
            mode,
        }
    }

    pub fn b(mode: Mode) -> Self {
        Self {
            side: Side::Right,
            create: false,
            mode,
        }
    }

    pub fn b_dag(mode: Mode) -> Self {
        Self {
            side: Side::Right,
            create: true,
            mode,
        }
    }

    /// Component `p` of `Â = (â₁, â₂, b̂₁, b̂₂)`.
    pub fn big_a(p: usize) -> Self {
        let mode = Mode::BOTH[p % 2];
        if p < 2 {
            Self::a(mode)
        } else {
            Self::b(mode)
        }
    }

    /// Component `p` of `Â⁺ = (â⁺₁, â⁺₂, b̂⁺₁, b̂⁺₂)`.
    pub fn big_a_dag(p: usize) -> Self {
        let mode = Mode::BOTH[p % 2];
        if p < 2 {
            Self::a_dag(mode)
        } else {
            Self::b_dag(mode)
        }
    }

    /// Change of κ.
    pub fn kappa_shift(&self) -> i32 {
        if self.create {
            1
        } else {
            -1
        }
    }

    /// Change of the input level.
    pub fn level_shift(&self) -> i32 {
        match (self.side, self.create) {
            (Side::Left, _) => 0,
            (Side::Right, false) => 1,
            (Side::Right, true) => -1,
        }
    }

    pub fn target(&self, src: &MonopoleSector) -> MonopoleSector {
        src.shifted(self.kappa_shift())
    }

    /// Block matrix of the primitive on `src`, truncated at `n_max`.
    pub fn superop(&self, src: MonopoleSector) -> SuperOp {
        let tgt = self.target(&src);
        let mut blocks = BTreeMap::new();
        for n in src.blocks() {
            let m = src.out_level(n);
            let out_n = n as i64 + self.level_shift() as i64;
            if out_n < 0 || !tgt.contains_block(out_n as usize) {
                continue;
            }
            let block = match (self.side, self.create) {
                (Side::Left, false) => kron(&lowering_block(self.mode, m), &Array2::eye(n + 1)),
                (Side::Left, true) => kron(&raising_block(self.mode, m), &Array2::eye(n + 1)),
                (Side::Right, false) => kron(&Array2::eye(m + 1), &raising_block(self.mode, n)),
                (Side::Right, true) => kron(&Array2::eye(m + 1), &lowering_block(self.mode, n)),
            };
            blocks.insert(
                (out_n as usize, n),
                Block::Dense(block.mapv(|v| C64::new(v, 0.0))),
            );
        }
        SuperOp::from_blocks(src, tgt, blocks, Some(self.level_shift()))
    }

    /// Direct action on a vector; independent of [`Primitive::superop`].
    pub fn apply(&self, x: &SectorVector) -> SectorVector {
        let src = *x.sector();
        let tgt = self.target(&src);
        SectorVector::from_blocks(tgt, |out_n| {
            let in_n = out_n as i64 - self.level_shift() as i64;
            if in_n < 0 || !src.contains_block(in_n as usize) {
                return None;
            }
            let in_n = in_n as usize;
            let xb = x.block(in_n);
            let m = src.out_level(in_n);
            let y = match (self.side, self.create) {
                (Side::Left, false) => real(&lowering_block(self.mode, m)).dot(&xb),
                (Side::Left, true) => real(&raising_block(self.mode, m)).dot(&xb),
                (Side::Right, false) => xb.dot(&real(&lowering_block(self.mode, in_n + 1))),
                (Side::Right, true) => xb.dot(&real(&raising_block(self.mode, in_n - 1))),
            };
            Some(y)
        })
    }
}

fn real(m: &Array2<f64>) -> Array2<C64> {
    m.mapv(|v| C64::new(v, 0.0))
}

#[derive(Debug, Clone, PartialEq)]
pub enum WordFactor {
    Ladder(Primitive),
    Radial(RadialFunction),
}

/// Product of factors; `factors[0]` is leftmost (applied last).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Word {
    pub factors: Vec<WordFactor>,
}

impl Word {
    pub fn new(factors: Vec<WordFactor>) -> Self {
        Self { factors }
    }

    pub fn ladders(prims: &[Primitive]) -> Self {
        Self::new(prims.iter().copied().map(WordFactor::Ladder).collect())
    }

    /// Product `self · rhs`.
    pub fn then_apply_after(&self, rhs: &Word) -> Word {
        let mut factors = self.factors.clone();
        factors.extend(rhs.factors.iter().cloned());
        Word { factors }
    }

    /// Number of ladder primitives.
    pub fn ladder_len(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| matches!(f, WordFactor::Ladder(_)))
            .count()
    }

    pub fn kappa_shift(&self) -> i32 {
        self.factors
            .iter()
            .map(|f| match f {
                WordFactor::Ladder(p) => p.kappa_shift(),
                WordFactor::Radial(_) => 0,
            })
            .sum()
    }

    pub fn target(&self, src: &MonopoleSector) -> MonopoleSector {
        src.shifted(self.kappa_shift())
    }

    /// Block matrix of the word on `src`.
    pub fn materialize(&self, src: MonopoleSector) -> SuperOp {
        let mut acc = SuperOp::identity(src);
        let mut cur = src;
        for factor in self.factors.iter().rev() {
            let op = match factor {
                WordFactor::Ladder(p) => p.superop(cur),
                WordFactor::Radial(f) => radial_multiplier(f, cur),
            };
            cur = *op.tgt();
            acc = &op * &acc;
        }
        acc
    }

    pub fn apply(&self, x: &SectorVector) -> SectorVector {
        let mut v = x.clone();
        for factor in self.factors.iter().rev() {
            v = match factor {
                WordFactor::Ladder(p) => p.apply(&v),
                WordFactor::Radial(f) => {
                    let s = *v.sector();
                    SectorVector::from_blocks(s, |n| {
                        let c = f.eval(s.r_hat(n), s.lambda()).unwrap_or(f64::NAN);
                        Some(v.block(n).mapv(|z| z * c))
                    })
                }
            };
        }
        v
    }
}

/// Left ladder word: `X ↦ w₁ w₂ ⋯ X`.
pub fn left_action(src: MonopoleSector, word: &[(Mode, bool)]) -> SuperOp {
    let prims: Vec<_> = word
        .iter()
        .map(|&(m, c)| if c { Primitive::a_dag(m) } else { Primitive::a(m) })
        .collect();
    Word::ladders(&prims).materialize(src)
}

/// Right ladder word: `X ↦ X w₁ w₂ ⋯`, i.e. composition in reversed order.
pub fn right_action(src: MonopoleSector, word: &[(Mode, bool)]) -> SuperOp {
    let prims: Vec<_> = word
        .iter()
        .rev()
        .map(|&(m, c)| if c { Primitive::b_dag(m) } else { Primitive::b(m) })
        .collect();
    Word::ladders(&prims).materialize(src)
}

/// Linear combination of words with a common κ shift.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OpExpr {
    pub terms: Vec<(C64, Word)>,
}

impl OpExpr {
    pub fn word(w: Word) -> Self {
        Self {
            terms: vec![(ONE, w)],
        }
    }

    pub fn push(&mut self, c: C64, w: Word) {
        self.terms.push((c, w));
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            terms: self.terms.iter().map(|(a, w)| (a * c, w.clone())).collect(),
        }
    }

    pub fn add(&self, rhs: &OpExpr) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        Self { terms }
    }

    /// Prepend a radial factor to every word.
    pub fn radial_left(&self, f: &RadialFunction) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| {
                    let mut factors = vec![WordFactor::Radial(f.clone())];
                    factors.extend(w.factors.iter().cloned());
                    (*c, Word { factors })
                })
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &OpExpr) -> Self {
        let mut terms = Vec::new();
        for (a, w) in &self.terms {
            for (b, v) in &rhs.terms {
                terms.push((a * b, w.then_apply_after(v)));
            }
        }
        Self { terms }
    }

    pub fn kappa_shift(&self) -> i32 {
        self.terms.first().map_or(0, |(_, w)| w.kappa_shift())
    }

    pub fn materialize(&self, src: MonopoleSector) -> Result<SuperOp> {
        let tgt = src.shifted(self.kappa_shift());
        let mut acc = SuperOp::zero(src, tgt);
        for (c, w) in &self.terms {
            acc = acc.try_add_scaled(*c, &w.materialize(src))?;
        }
        Ok(acc)
    }

    pub fn apply(&self, x: &SectorVector) -> SectorVector {
        let tgt = x.sector().shifted(self.kappa_shift());
        let mut y = SectorVector::zeros(tgt);
        for (c, w) in &self.terms {
            y.axpy(*c, &w.apply(x));
        }
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residual::{compare, Window};
    use crate::sector::build_sector;

    #[test]
    fn primitive_matrix_matches_direct_action() {
        let s = build_sector(1, 5, 1.0).unwrap();
        for p in (0..4).flat_map(|k| [Primitive::big_a(k), Primitive::big_a_dag(k)]) {
            let op = p.superop(s);
            for n in s.blocks() {
                let (r, c) = s.block_shape(n);
                for i in 0..r * c {
                    let x = SectorVector::unit(s, n, i / c, i % c);
                    let a = op.apply(&x);
                    let b = p.apply(&x);
                    assert_eq!(a.data(), b.data(), "{p:?} block {n}");
                }
            }
        }
    }

    #[test]
    fn left_ccr() {
        let s = build_sector(0, 6, 1.0).unwrap();
        let w = Window::new(s, 1);
        for al in Mode::BOTH {
            for be in Mode::BOTH {
                let ab = left_action(s, &[(al, false), (be, true)]);
                let ba = left_action(s, &[(be, true), (al, false)]);
                let lhs = &ab - &ba;
                let rhs = SuperOp::scalar(s, C64::new(if al == be { 1.0 } else { 0.0 }, 0.0));
                assert!(compare(&lhs, &rhs, &w).residual < 1e-15);
            }
        }
    }

    #[test]
    fn right_word_order() {
        let s = build_sector(0, 5, 1.0).unwrap();
        let x = SectorVector::unit(s, 2, 1, 1);
        let op = right_action(s, &[(Mode::ONE, true), (Mode::TWO, false)]);
        let via_prims = Primitive::b(Mode::TWO).apply(&Primitive::b_dag(Mode::ONE).apply(&x));
        assert_eq!(op.apply(&x).data(), via_prims.data());
    }
}
