//! Good and bad pairs in Weyl groups, minimal generating root subsystems,
//! pattern avoidance in type A, and explicit equations for Schubert-type
//! cells of the Grothendieck–Springer space of `GL_n`.
//!
//! Everything is exact: rationals are arbitrary precision and no floating
//! point is used anywhere.

pub mod error;
pub mod min_gen;
pub mod pairs;
pub mod patterns;
pub mod poly;
pub mod root_core;
pub mod varieties;
pub mod weyl;

pub use error::{Error, Result};
