//! Superoperator layer: ladder words, radial calculus, su(2,2) generators and the
//! shift-commutator identities.

pub mod operators;
pub mod radial;
pub mod shift;
pub mod su22;
pub mod superop;
pub mod word;

pub use operators::Algebra;
pub use radial::{radial_multiplier, RadialFunction};
pub use superop::{Block, SuperOp};
pub use word::{left_action, right_action, OpExpr, Primitive, Side, Word, WordFactor};
