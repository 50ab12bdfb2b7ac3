//! Exact computer algebra for the quantized function algebra `C[SU_q(2)]`,
//! the quantum disk, their `T_n`-homogeneous subalgebras, and the
//! commutator-spectrum invariant of quantized homogeneous spaces.
//!
//! - [`scalar`]: Gaussian rationals and Laurent polynomials in `q`.
//! - [`suq2`]: `C[SU_q(2)]` in the basis `α^(i) γ^j γ*^k`.
//! - [`disk`]: the quotient `C[D̄_q]`, the map `F_q`, q-commutation.
//! - [`spectrum`]: bounded commutator-spectrum search.
//! - [`rep`]: the truncated standard representation at numeric `q0`.
//! - [`lie`]: Cartan data, `n_i`, the invariant exponent `m`, verdicts.
//! - [`parse`]: text syntax shared with the command-line tool.

pub mod disk;
pub mod element;
pub mod error;
pub mod lie;
pub mod parse;
pub mod rep;
pub mod rewrite;
pub mod scalar;
pub mod spectrum;
pub mod suq2;
pub mod torus;

pub use disk::{DiskElement, DiskMonomial};
pub use element::{Basis, Element};
pub use error::{Error, Result};
pub use scalar::{GaussianRational, QScalar};
pub use suq2::{SuElement, SuMonomial};
pub use torus::TorusOrder;
