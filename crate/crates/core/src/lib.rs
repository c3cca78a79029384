//! Exact computer-algebra engine for invariants of local rings and modules:
//! Groebner bases, finite Artinian models, socles, colon ideals,
//! idealizations, indices of reducibility and their binomial polynomials.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalar`], [`monomial`], [`poly`]: exact coefficient fields,
//!   monomial orders, polynomials and free-module vectors;
//! - [`groebner`]: Buchberger's algorithm for ideals and submodules of
//!   free modules, normal forms, standard monomials, syzygies;
//! - [`linalg`]: dense exact linear algebra and canonical subspaces;
//! - [`artinian`]: finite-dimensional models of Artinian quotients with
//!   multiplication matrices, socles and colon submodules;
//! - [`localmodel`]: presented local rings and modules, primary-exponent
//!   certificates, ideal powers and reductions, exact Artinian quotients;
//! - [`idealization`]: the trivial extension of a ring by a module,
//!   homogeneous ideals and their colons computed two independent ways;
//! - [`invariants`]: index-of-reducibility tables, binomial-basis fits,
//!   Cohen-Macaulay type, and the inequality-chain verdicts.

pub mod artinian;
pub mod error;
pub mod groebner;
pub mod idealization;
pub mod invariants;
pub mod linalg;
pub mod localmodel;
pub mod monomial;
pub mod poly;
pub mod scalar;

pub use error::{EngineError, Result};
pub use monomial::{ModuleOrder, Monomial, MonomialOrder};
pub use poly::{FreeVector, Polynomial};
pub use scalar::{FieldSpec, Scalar, DEFAULT_PRIME};
