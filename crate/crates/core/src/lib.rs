//! Gröbner bases over the boolean ring `F2[x1..xn] / (xi^2 + xi)` with the
//! signature-based GVW algorithm and its mutant-pair variant M-GVW.

pub mod engine;
pub mod error;
pub mod io;
pub mod matrix;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod sig;
pub mod symbolic;

pub use engine::{run, Algo, Config, ReductionPath, RunOutput, RunStats};
pub use error::{Error, Result};
pub use monomial::Monomial;
pub use poly::{reduce_basis, rem, BoolPoly};
