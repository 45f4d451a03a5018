use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::{SparsePolynomial, VariableId};
use crate::root_core::rational::rat;
use crate::root_core::IndexSubset;

/// `x_{s_1 … s_d}` for an arbitrary index sequence: `None` when an index
/// repeats, otherwise the sorted variable with the sign of the sorting
/// permutation.
pub fn signed_plucker(seq: &[u8]) -> Option<(i64, VariableId)> {
    if seq.is_empty() {
        return None;
    }
    let mut v = seq.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, VariableId::plucker(&v).ok()?))
}

/// `x_seq` as a polynomial (zero when an index repeats).
pub fn signed_plucker_poly(seq: &[u8]) -> SparsePolynomial {
    match signed_plucker(seq) {
        None => SparsePolynomial::zero(),
        Some((s, v)) => SparsePolynomial::var(v).scale(&rat(s)),
    }
}

/// `Σ_k (-1)^k x_{i_1…i_{d-1} j_k} x_{j_1…ĵ_k…j_{e+1}}` over all increasing
/// `i` of length `d - 1` and `j` of length `e + 1`; zero relations dropped and
/// duplicates (up to a scalar) removed, first occurrence kept.
fn quadratic_relations(n: usize, d: usize, e: usize) -> Vec<SparsePolynomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in IndexSubset::all_of_size(n as u8, d - 1) {
        for j in IndexSubset::all_of_size(n as u8, e + 1) {
            let mut rel = SparsePolynomial::zero();
            for (k, &jk) in j.elements().iter().enumerate() {
                let mut left = i.elements().to_vec();
                left.push(jk);
                let right: Vec<u8> = j.elements().iter().copied().filter(|&x| x != jk).collect();
                let term = &signed_plucker_poly(&left) * &signed_plucker_poly(&right);
                // k is 0-based here, so (-1)^(k+1)
                rel = if k % 2 == 0 { &rel - &term } else { &rel + &term };
            }
            if !rel.is_zero() && seen.insert(rel.primitive()) {
                out.push(rel);
            }
        }
    }
    out
}

/// Plücker relations in dimension `d`.
pub fn plucker_relations(n: usize, d: usize) -> Result<Vec<SparsePolynomial>> {
    if !(1..n).contains(&d) {
        return Err(Error::InvalidArgument(format!("dimension {d} outside 1..{n}")));
    }
    Ok(quadratic_relations(n, d, d))
}

/// Incidence relations for `V ⊂ V'` of dimensions `d < d'`.
pub fn incidence_relations(n: usize, d: usize, d_prime: usize) -> Result<Vec<SparsePolynomial>> {
    if d == 0 || d >= d_prime || d_prime >= n {
        return Err(Error::InvalidArgument(format!("need 1 <= d < d' <= n - 1, got ({d}, {d_prime}) with n = {n}")));
    }
    Ok(quadratic_relations(n, d, d_prime))
}

/// `∏_k (t_{m_k} + λ)`.
pub fn shifted_diagonal_product(ms: impl IntoIterator<Item = u8>) -> SparsePolynomial {
    ms.into_iter().fold(SparsePolynomial::one(), |acc, m| {
        let f = &SparsePolynomial::var(VariableId::Diagonal(m)) + &SparsePolynomial::var(VariableId::Lambda);
        &acc * &f
    })
}
