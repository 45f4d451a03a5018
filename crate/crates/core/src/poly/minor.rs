use super::polynomial::SparsePolynomial;
use super::variable::VariableId;
use crate::error::{Error, Result};
use crate::root_core::{subset_leq, IndexSubset};

fn entry(r: u8, c: u8, shift_lambda: bool) -> SparsePolynomial {
    match VariableId::matrix_entry(r, c) {
        None => SparsePolynomial::zero(),
        Some(v @ VariableId::Diagonal(_)) if shift_lambda => {
            &SparsePolynomial::var(v) + &SparsePolynomial::var(VariableId::Lambda)
        }
        Some(v) => SparsePolynomial::var(v),
    }
}

/// Minor of the upper-triangular matrix with entries `u_{kl}` (`k < l`),
/// `t_m` (+ `λ` when `shift_lambda`) on the diagonal, on `rows × cols`.
pub fn symbolic_minor(
    n: usize,
    rows: &IndexSubset,
    cols: &IndexSubset,
    shift_lambda: bool,
) -> Result<SparsePolynomial> {
    if rows.len() != cols.len() {
        return Err(Error::InvalidArgument(format!("minor of non-square shape {rows:?} x {cols:?}")));
    }
    if rows.elements().iter().chain(cols.elements()).any(|&i| i as usize > n) {
        return Err(Error::InvalidArgument(format!("indices of {rows:?} x {cols:?} exceed {n}")));
    }
    if !subset_leq(rows, cols)? {
        return Ok(SparsePolynomial::zero());
    }
    Ok(expand(rows.elements(), cols.elements(), shift_lambda))
}

/// Laplace expansion along the row with the fewest nonzero entries.
fn expand(rows: &[u8], cols: &[u8], shift: bool) -> SparsePolynomial {
    match rows.len() {
        0 => return SparsePolynomial::one(),
        1 => return entry(rows[0], cols[0], shift),
        _ => {}
    }
    let nonzero = |r: u8| cols.iter().filter(|&&c| c >= r).count();
    let (a, &r) = rows.iter().enumerate().min_by_key(|(_, &r)| nonzero(r)).expect("nonempty");
    if nonzero(r) == 0 {
        return SparsePolynomial::zero();
    }
    let sub_rows: Vec<u8> = rows.iter().copied().filter(|&x| x != r).collect();
    let mut out = SparsePolynomial::zero();
    for (b, &c) in cols.iter().enumerate() {
        if c < r {
            continue;
        }
        let sub_cols: Vec<u8> = cols.iter().copied().filter(|&x| x != c).collect();
        let cof = &entry(r, c, shift) * &expand(&sub_rows, &sub_cols, shift);
        out = if (a + b) % 2 == 0 { &out + &cof } else { &out - &cof };
    }
    out
}
