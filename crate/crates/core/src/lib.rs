//! Exact computations for infinitesimal Cherednik algebras `H_ξ` of `GL_n`:
//! classification of finite-dimensional irreducibles, Dirac cohomology, and
//! symbolic checks of the underlying algebraic identities.
//!
//! Every scalar is an exact [`Rational`]; nothing is approximated.

#![allow(clippy::needless_range_loop)]

pub mod clifford;
pub mod decomp;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod uea;
pub mod weights;

pub use decomp::{analyze, dirac_cohomology, DiracReport, ModuleDecomp, NuVector};
pub use error::{CliffordError, DecompError, ParseError};
pub use exec::Exec;
pub use poly::{Poly, TwistedPoly};
pub use rational::Rational;
pub use weights::{HPoly, Weight};
