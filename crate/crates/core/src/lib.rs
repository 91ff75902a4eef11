//! Exact computations in Virasoro Verma modules and the free-fermion Fock
//! space, over the rationals and finite prime fields.

pub mod battery;
pub mod coeffring;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod modes;
pub mod singular;
pub mod virasoro;

pub use coeffring::{Field, Ring, Scalar};
pub use error::{Error, Result};
pub use fock::{FockMonomial, FockSpace, FockVector, Sector};
pub use linalg::Matrix;
pub use modes::{AnnihilationReport, ModeEvaluator, StateWord, Term};
pub use singular::{CharacterRow, CharacterTable, SingularBasis};
pub use virasoro::{ModuleKind, ModuleParams, Partition, VermaModule, VermaVector};
