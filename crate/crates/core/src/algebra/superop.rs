//! Block-sparse linear maps between monopole sectors.
//!
//! A [`SuperOp`] maps a source sector to a target sector. It stores one block per
//! `(output level, input level)` pair that can be non-zero. Radial multipliers are
//! stored as scalar blocks `c·I`, ladder actions as dense Kronecker blocks.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use ndarray::Array2;

use crate::parallel::map_ordered;
use crate::sector::{MonopoleSector, SectorVector};
use crate::{Error, Result, C64, ONE, ZERO};

#[derive(Debug, Clone, PartialEq)]
pub enum Block {
    /// `c·I` on a square block.
    Scalar(C64),
    Dense(Array2<C64>),
}

impl Block {
    fn mul(&self, rhs: &Block) -> Block {
        match (self, rhs) {
            (Block::Scalar(a), Block::Scalar(b)) => Block::Scalar(a * b),
            (Block::Scalar(a), Block::Dense(m)) | (Block::Dense(m), Block::Scalar(a)) => {
                Block::Dense(m * *a)
            }
            (Block::Dense(a), Block::Dense(b)) => Block::Dense(a.dot(b)),
        }
    }

    fn to_dense(&self, rows: usize, cols: usize) -> Array2<C64> {
        match self {
            Block::Dense(m) => m.clone(),
            Block::Scalar(c) => {
                debug_assert_eq!(rows, cols);
                Array2::from_diag_elem(rows, *c)
            }
        }
    }

    fn add_scaled(self, c: C64, rhs: &Block, rows: usize) -> Block {
        match (self, rhs) {
            (Block::Scalar(a), Block::Scalar(b)) => Block::Scalar(a + c * b),
            (Block::Scalar(a), Block::Dense(m)) => {
                let mut out = m * c;
                for i in 0..rows {
                    out[[i, i]] += a;
                }
                Block::Dense(out)
            }
            (Block::Dense(mut m), Block::Scalar(b)) => {
                for i in 0..rows {
                    m[[i, i]] += c * b;
                }
                Block::Dense(m)
            }
            (Block::Dense(mut m), Block::Dense(b)) => {
                m.scaled_add(c, b);
                Block::Dense(m)
            }
        }
    }

    fn scale(&self, c: C64) -> Block {
        match self {
            Block::Scalar(a) => Block::Scalar(a * c),
            Block::Dense(m) => Block::Dense(m * c),
        }
    }

    fn adjoint(&self) -> Block {
        match self {
            Block::Scalar(a) => Block::Scalar(a.conj()),
            Block::Dense(m) => Block::Dense(m.t().mapv(|z| z.conj())),
        }
    }

    /// Squared Frobenius norm, given the block dimension for scalar blocks.
    pub fn norm_sqr(&self, rows: usize) -> f64 {
        match self {
            Block::Scalar(c) => c.norm_sqr() * rows as f64,
            Block::Dense(m) => m.iter().map(|z| z.norm_sqr()).sum(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Block::Scalar(c) => c.is_finite(),
            Block::Dense(m) => m.iter().all(|z| z.is_finite()),
        }
    }

    fn apply(&self, x: &[C64], y: &mut [C64]) {
        match self {
            Block::Scalar(c) => {
                for (yi, xi) in y.iter_mut().zip(x) {
                    *yi += c * xi;
                }
            }
            Block::Dense(m) => {
                for (i, row) in m.outer_iter().enumerate() {
                    let mut acc = ZERO;
                    for (a, b) in row.iter().zip(x) {
                        acc += a * b;
                    }
                    y[i] += acc;
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuperOp {
    src: MonopoleSector,
    tgt: MonopoleSector,
    blocks: BTreeMap<(usize, usize), Block>,
    shift: Option<i32>,
}

impl SuperOp {
    pub fn zero(src: MonopoleSector, tgt: MonopoleSector) -> Self {
        Self {
            src,
            tgt,
            blocks: BTreeMap::new(),
            shift: None,
        }
    }

    pub fn identity(s: MonopoleSector) -> Self {
        Self::block_diagonal(s, |_| ONE)
    }

    pub fn scalar(s: MonopoleSector, c: C64) -> Self {
        Self::block_diagonal(s, |_| c)
    }

    /// Level-preserving map acting as `value(n)·I` on block `n`.
    pub fn block_diagonal(s: MonopoleSector, mut value: impl FnMut(usize) -> C64) -> Self {
        let blocks = s.blocks().map(|n| ((n, n), Block::Scalar(value(n)))).collect();
        Self {
            src: s,
            tgt: s,
            blocks,
            shift: Some(0),
        }
    }

    /// Assemble from explicit blocks keyed `(output level, input level)`.
    pub fn from_blocks(
        src: MonopoleSector,
        tgt: MonopoleSector,
        blocks: BTreeMap<(usize, usize), Block>,
        shift: Option<i32>,
    ) -> Self {
        for (&(o, i), b) in &blocks {
            debug_assert!(src.contains_block(i) && tgt.contains_block(o));
            if let Block::Dense(m) = b {
                debug_assert_eq!(m.dim(), (tgt.block_dim(o), src.block_dim(i)));
            }
        }
        Self {
            src,
            tgt,
            blocks,
            shift,
        }
    }

    pub fn src(&self) -> &MonopoleSector {
        &self.src
    }

    pub fn tgt(&self) -> &MonopoleSector {
        &self.tgt
    }

    pub fn blocks(&self) -> &BTreeMap<(usize, usize), Block> {
        &self.blocks
    }

    /// Declared input-level shift, if the map has a single one.
    pub fn declared_shift(&self) -> Option<i32> {
        self.shift
    }

    /// Input-level shifts carried by blocks with non-zero norm.
    pub fn measured_shifts(&self) -> Vec<i32> {
        let mut out: Vec<i32> = self
            .blocks
            .iter()
            .filter(|(&(_, i), b)| b.norm_sqr(self.src.block_dim(i)) > 0.0)
            .map(|(&(o, i), _)| o as i32 - i as i32)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn try_mul(&self, rhs: &SuperOp) -> Result<SuperOp> {
        self.src.check_same(&rhs.tgt)?;
        let mut by_input: BTreeMap<usize, Vec<(usize, &Block)>> = BTreeMap::new();
        for (&(o, m), b) in &self.blocks {
            by_input.entry(m).or_default().push((o, b));
        }
        let mut plan: BTreeMap<(usize, usize), Vec<(&Block, &Block)>> = BTreeMap::new();
        for (&(m, i), rb) in &rhs.blocks {
            if let Some(lefts) = by_input.get(&m) {
                for &(o, lb) in lefts {
                    plan.entry((o, i)).or_default().push((lb, rb));
                }
            }
        }
        let keys: Vec<_> = plan.into_iter().collect();
        let tgt = self.tgt;
        let computed = map_ordered(&keys, |((o, _), terms)| {
            let rows = tgt.block_dim(*o);
            let mut acc: Option<Block> = None;
            for (lb, rb) in terms {
                let prod = lb.mul(rb);
                acc = Some(match acc {
                    None => prod,
                    Some(a) => a.add_scaled(ONE, &prod, rows),
                });
            }
            acc.expect("planned key has at least one term")
        });
        let blocks = keys.iter().map(|(k, _)| *k).zip(computed).collect();
        let shift = match (self.shift, rhs.shift) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Ok(SuperOp {
            src: rhs.src,
            tgt: self.tgt,
            blocks,
            shift,
        })
    }

    /// `self + c·rhs`.
    pub fn try_add_scaled(&self, c: C64, rhs: &SuperOp) -> Result<SuperOp> {
        self.src.check_same(&rhs.src)?;
        self.tgt.check_same(&rhs.tgt)?;
        let mut blocks = self.blocks.clone();
        for (&key, b) in &rhs.blocks {
            let rows = self.tgt.block_dim(key.0);
            let merged = match blocks.remove(&key) {
                Some(a) => a.add_scaled(c, b, rows),
                None => b.scale(c),
            };
            blocks.insert(key, merged);
        }
        let shift = if self.blocks.is_empty() {
            rhs.shift
        } else if rhs.blocks.is_empty() || self.shift == rhs.shift {
            self.shift
        } else {
            None
        };
        Ok(SuperOp {
            src: self.src,
            tgt: self.tgt,
            blocks,
            shift,
        })
    }

    pub fn scale(&self, c: C64) -> SuperOp {
        SuperOp {
            blocks: self.blocks.iter().map(|(k, b)| (*k, b.scale(c))).collect(),
            ..self.clone()
        }
    }

    pub fn scale_re(&self, c: f64) -> SuperOp {
        self.scale(C64::new(c, 0.0))
    }

    pub fn commutator(&self, rhs: &SuperOp) -> SuperOp {
        &(self * rhs) - &(rhs * self)
    }

    pub fn anticommutator(&self, rhs: &SuperOp) -> SuperOp {
        &(self * rhs) + &(rhs * self)
    }

    /// Adjoint under the unweighted pairing `Tr[Φ⁺Ψ]`.
    pub fn plain_adjoint(&self) -> SuperOp {
        SuperOp {
            src: self.tgt,
            tgt: self.src,
            blocks: self
                .blocks
                .iter()
                .map(|(&(o, i), b)| ((i, o), b.adjoint()))
                .collect(),
            shift: self.shift.map(|s| -s),
        }
    }

    /// Adjoint under the weighted product: `W_src⁻¹ · Oᴴ · W_tgt` with `W = r̂`.
    pub fn weighted_adjoint(&self) -> SuperOp {
        let (src, tgt) = (self.src, self.tgt);
        SuperOp {
            src: tgt,
            tgt: src,
            blocks: self
                .blocks
                .iter()
                .map(|(&(o, i), b)| {
                    let w = tgt.r_hat(o) / src.r_hat(i);
                    ((i, o), b.adjoint().scale(C64::new(w, 0.0)))
                })
                .collect(),
            shift: self.shift.map(|s| -s),
        }
    }

    /// Keep only the columns of the listed input blocks.
    pub fn restrict_inputs(&self, inputs: &[usize]) -> SuperOp {
        SuperOp {
            blocks: self
                .blocks
                .iter()
                .filter(|((_, i), _)| inputs.contains(i))
                .map(|(k, b)| (*k, b.clone()))
                .collect(),
            ..self.clone()
        }
    }

    pub fn try_apply(&self, x: &SectorVector) -> Result<SectorVector> {
        self.src.check_same(x.sector())?;
        let mut y = SectorVector::zeros(self.tgt);
        for (&(o, i), b) in &self.blocks {
            let xo = self.src.block_offset(i);
            let xl = self.src.block_dim(i);
            let yo = self.tgt.block_offset(o);
            let yl = self.tgt.block_dim(o);
            b.apply(&x.data()[xo..xo + xl], &mut y.data_mut()[yo..yo + yl]);
        }
        Ok(y)
    }

    pub fn apply(&self, x: &SectorVector) -> SectorVector {
        self.try_apply(x).expect("operator applied to a vector of another sector")
    }

    /// Dense `tgt.dim × src.dim` matrix.
    pub fn to_dense(&self) -> Array2<C64> {
        let mut out = Array2::from_elem((self.tgt.dim(), self.src.dim()), ZERO);
        for (&(o, i), b) in &self.blocks {
            let (r0, c0) = (self.tgt.block_offset(o), self.src.block_offset(i));
            let (rl, cl) = (self.tgt.block_dim(o), self.src.block_dim(i));
            let m = b.to_dense(rl, cl);
            out.slice_mut(ndarray::s![r0..r0 + rl, c0..c0 + cl]).assign(&m);
        }
        out
    }

    /// Dense copy of one block, if stored.
    pub fn dense_block(&self, out: usize, inp: usize) -> Option<Array2<C64>> {
        self.blocks
            .get(&(out, inp))
            .map(|b| b.to_dense(self.tgt.block_dim(out), self.src.block_dim(inp)))
    }

    /// Squared Frobenius norm of the columns belonging to input block `n`.
    pub fn column_norm_sqr(&self, n: usize) -> f64 {
        self.blocks
            .range((0, n)..)
            .filter(|((_, i), _)| *i == n)
            .map(|(&(o, _), b)| b.norm_sqr(self.tgt.block_dim(o)))
            .sum()
    }

    /// Whether every stored block feeding on input block `n` is finite.
    pub fn column_is_finite(&self, n: usize) -> bool {
        self.blocks
            .iter()
            .filter(|((_, i), _)| *i == n)
            .all(|(_, b)| b.is_finite())
    }

    /// Squared Frobenius norm of `(self − rhs)` restricted to input block `n`.
    pub fn column_diff_norm_sqr(&self, rhs: &SuperOp, n: usize) -> f64 {
        let mut acc = 0.0;
        let mut outs: Vec<usize> = self
            .blocks
            .keys()
            .chain(rhs.blocks.keys())
            .filter(|(_, i)| *i == n)
            .map(|(o, _)| *o)
            .collect();
        outs.sort_unstable();
        outs.dedup();
        for o in outs {
            let rows = self.tgt.block_dim(o);
            let a = self.blocks.get(&(o, n));
            let b = rhs.blocks.get(&(o, n));
            acc += match (a, b) {
                (Some(a), Some(b)) => a.clone().add_scaled(-ONE, b, rows).norm_sqr(rows),
                (Some(a), None) => a.norm_sqr(rows),
                (None, Some(b)) => b.norm_sqr(rows),
                (None, None) => 0.0,
            };
        }
        acc
    }

    /// Frobenius inner product `Σ conj(self)·rhs` over the columns of input block `n`.
    pub fn column_inner(&self, rhs: &SuperOp, n: usize) -> C64 {
        let mut acc = ZERO;
        for (&(o, i), a) in &self.blocks {
            if i != n {
                continue;
            }
            if let Some(b) = rhs.blocks.get(&(o, i)) {
                let (rows, cols) = (self.tgt.block_dim(o), self.src.block_dim(i));
                let (a, b) = (a.to_dense(rows, cols), b.to_dense(rows, cols));
                acc += a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum::<C64>();
            }
        }
        acc
    }

    pub fn frobenius(&self) -> f64 {
        self.blocks
            .iter()
            .map(|(&(o, _), b)| b.norm_sqr(self.tgt.block_dim(o)))
            .sum::<f64>()
            .sqrt()
    }
}

impl Mul for &SuperOp {
    type Output = SuperOp;
    fn mul(self, rhs: &SuperOp) -> SuperOp {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &SuperOp {
    type Output = SuperOp;
    fn add(self, rhs: &SuperOp) -> SuperOp {
        self.try_add_scaled(ONE, rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &SuperOp {
    type Output = SuperOp;
    fn sub(self, rhs: &SuperOp) -> SuperOp {
        self.try_add_scaled(-ONE, rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &SuperOp {
    type Output = SuperOp;
    fn neg(self) -> SuperOp {
        self.scale(-ONE)
    }
}

impl Mul<C64> for &SuperOp {
    type Output = SuperOp;
    fn mul(self, c: C64) -> SuperOp {
        self.scale(c)
    }
}

impl Mul<f64> for &SuperOp {
    type Output = SuperOp;
    fn mul(self, c: f64) -> SuperOp {
        self.scale_re(c)
    }
}

/// Sum of `c_k · op_k`; all operators must share source and target.
pub fn linear_combination<'a>(
    src: MonopoleSector,
    tgt: MonopoleSector,
    terms: impl IntoIterator<Item = (C64, &'a SuperOp)>,
) -> Result<SuperOp> {
    let mut acc = SuperOp::zero(src, tgt);
    for (c, op) in terms {
        if c != ZERO {
            acc = acc.try_add_scaled(c, op)?;
        }
    }
    Ok(acc)
}

/// Error for operators that must map a sector to itself.
pub fn require_endomorphism(op: &SuperOp) -> Result<()> {
    if op.src.kappa() != op.tgt.kappa() {
        return Err(Error::KappaMismatch {
            expected: op.src.kappa(),
            found: op.tgt.kappa(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sector::build_sector;

    #[test]
    fn identity_scalar_algebra() {
        let s = build_sector(1, 4, 1.0).unwrap();
        let id = SuperOp::identity(s);
        let two = SuperOp::scalar(s, C64::new(2.0, 0.0));
        let sum = &id + &two;
        assert_eq!(sum.dense_block(1, 1).unwrap()[[0, 0]], C64::new(3.0, 0.0));
        let prod = &two * &two;
        assert_eq!(prod.to_dense(), Array2::from_diag_elem(s.dim(), C64::new(4.0, 0.0)));
        assert_eq!((&prod - &prod).frobenius(), 0.0);
    }

    #[test]
    fn weighted_adjoint_of_radial_is_itself() {
        let s = build_sector(-2, 5, 0.7).unwrap();
        let r = SuperOp::block_diagonal(s, |n| C64::new(s.r_hat(n), 0.0));
        assert_eq!(r.weighted_adjoint(), r);
    }

    #[test]
    fn mismatch_is_error() {
        let a = SuperOp::identity(build_sector(0, 3, 1.0).unwrap());
        let b = SuperOp::identity(build_sector(1, 3, 1.0).unwrap());
        assert!(a.try_mul(&b).is_err());
        assert!(a.try_add_scaled(ONE, &b).is_err());
    }
}
