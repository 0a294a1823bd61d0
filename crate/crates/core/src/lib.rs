//! Exact computer algebra for Dehn surgeries along twisted Whitehead links:
//! Reidemeister torsion over cyclotomic fields, lens-surgery classification
//! by torsion obstructions, and constructive verification through twist-move
//! calculus and torus-link surgery formulas.
//!
//! Everything is computed over arbitrary-precision integers; values in
//! cyclotomic fields are compared only up to the trivial units +-zeta^m.

pub mod alex;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod laurent;
pub mod lens;
pub mod rolfsen;
pub mod torsion;

pub use cyclo::{CycloInt, CycloNum, Sign, UnitWitness};
pub use error::{Error, Result};
pub use laurent::MultiLaurent;
pub use lens::{LensSpace, Verdict};
pub use torsion::{Side, SurgerySpec, TorsionValue};
