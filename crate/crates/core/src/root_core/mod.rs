//! Exact rational linear algebra and finite root systems.

pub mod linalg;
pub mod rational;
pub mod subset;
pub mod system;

pub use linalg::{RationalMatrix, RationalVector};
pub use rational::Rational;
pub use subset::{subset_leq, IndexSubset};
pub use system::{named_cartan, RootSystem};
