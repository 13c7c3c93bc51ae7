//! Exact computer algebra for finite-dimensional Z₂-graded algebras carrying
//! homogeneous non-degenerate bilinear forms, centered on Novikov
//! superalgebras whose left multiplications are antisymmetric for the form.
//!
//! Everything is computed over the rationals with zero tolerance: identity
//! checkers sweep basis tuples, constructions (Levi-Civita products, star
//! products, T*-extensions, double extensions and their converse splittings)
//! are exact, and a parameterized catalog of all such algebras of total
//! dimension at most four ships with batch verification.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod extensions;
pub mod json;
pub mod matrix;
pub mod metric;
pub mod rational;
pub mod superspace;

pub use error::Error;
pub use rational::{frac, rat, Rational};
