//! Sparse multivariate polynomials over ℚ in the variables `x_{i_1…i_d}`,
//! `u_{kl}`, `t_m` and `λ`.
//!
//! Terms are kept in graded-lexicographic order, with variables ordered by
//! [`VariableId`]. The canonical string form lists terms from the leading
//! term down and factors in variable order, e.g. `u12*u23 - u13*t2 - u13*l`.

mod minor;
mod parse;
mod polynomial;
mod variable;

pub use minor::symbolic_minor;
pub use parse::{parse_polynomial, MAX_DEGREE};
pub use polynomial::{Monomial, RationalPoint, SparsePolynomial, TermRecord};
pub use variable::VariableId;

/// `x_I` for a subset `I`.
pub fn plucker_var(indices: &[u8]) -> crate::Result<SparsePolynomial> {
    Ok(SparsePolynomial::var(VariableId::plucker(indices)?))
}

/// Serde adapter writing a polynomial as its canonical string.
pub mod serde_string {
    use super::SparsePolynomial;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &SparsePolynomial, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(p)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<SparsePolynomial, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// [`serde_string`] for lists.
pub mod serde_string_vec {
    use super::SparsePolynomial;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(ps: &[SparsePolynomial], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(ps.iter().map(|p| p.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<SparsePolynomial>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}
