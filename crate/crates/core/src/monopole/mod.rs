//! Velocity operators, the `Û`/`Û†` exchange algebra, the monopole field strength and
//! the associator.

pub mod associator;
pub mod commutators;
pub mod field;
pub mod ucomm;
pub mod velocity;

pub use field::{field_strength, FieldStrength};
pub use velocity::{build_velocities, rotation_flow, VelocityFamily};
