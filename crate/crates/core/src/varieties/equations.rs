use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::relations::{incidence_relations, plucker_relations, shifted_diagonal_product};
use crate::error::{Error, Result};
use crate::poly::{symbolic_minor, RationalPoint, SparsePolynomial, VariableId};
use crate::root_core::{subset_leq, IndexSubset};
use crate::weyl::Perm;

/// Largest `n` for which equations are generated.
pub const MAX_EQUATION_DEGREE: usize = 6;

/// `{w(1), …, w(d)}` sorted.
pub fn prefix_set(w: &Perm, d: usize) -> IndexSubset {
    IndexSubset::new(w.one_line()[..d].to_vec()).expect("prefix of a permutation")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDescription {
    pub w: Perm,
    /// `{w(1..d)}` for `d = 1..n-1`.
    pub nonvanishing: Vec<IndexSubset>,
    /// Every `I` with `I ⋠ {w(1..d)}`, by `d` then lexicographically.
    pub vanishing: Vec<IndexSubset>,
}

pub fn cell_equations(w: &Perm) -> CellDescription {
    let n = w.n();
    let mut nonvanishing = Vec::new();
    let mut vanishing = Vec::new();
    for d in 1..n {
        let top = prefix_set(w, d);
        vanishing.extend(
            IndexSubset::all_of_size(n as u8, d).into_iter().filter(|i| !subset_leq(i, &top).expect("same size")),
        );
        nonvanishing.push(top);
    }
    CellDescription { w: w.clone(), nonvanishing, vanishing }
}

/// `P_{w,I}(λ) = Σ_J Δ^J_I(u + λ) x_J - ∏_{k ≤ d} (t_{w(k)} + λ) x_I`.
pub fn p_polynomial(w: &Perm, rows: &IndexSubset) -> Result<SparsePolynomial> {
    let n = w.n();
    let d = rows.len();
    let mut p = SparsePolynomial::zero();
    for cols in IndexSubset::all_of_size(n as u8, d) {
        let minor = symbolic_minor(n, rows, &cols, true)?;
        if !minor.is_zero() {
            p = &p + &(&minor * &SparsePolynomial::var(VariableId::plucker(cols.elements())?));
        }
    }
    let diag = shifted_diagonal_product(w.one_line()[..d].iter().copied());
    Ok(&p - &(&diag * &SparsePolynomial::var(VariableId::plucker(rows.elements())?)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PEquation {
    pub d: usize,
    pub index: IndexSubset,
    pub s: usize,
    #[serde(with = "crate::poly::serde_string")]
    pub polynomial: SparsePolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationSet {
    pub n: usize,
    #[serde(with = "crate::poly::serde_string_vec")]
    pub plucker: Vec<SparsePolynomial>,
    #[serde(with = "crate::poly::serde_string_vec")]
    pub incidence: Vec<SparsePolynomial>,
    pub cell: CellDescription,
    /// Every `P_{w,I,s}`, `0 ≤ s ≤ d - 1`, including those that vanish.
    pub p_equations: Vec<PEquation>,
}

fn check_equation_degree(n: usize) -> Result<()> {
    if !(2..=MAX_EQUATION_DEGREE).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "equations are generated for 2 <= n <= {MAX_EQUATION_DEGREE}, got {n}"
        )));
    }
    Ok(())
}

/// The λ-coefficients of every `P_{w,I}`.
pub fn p_equations(w: &Perm) -> Result<Vec<PEquation>> {
    let n = w.n();
    check_equation_degree(n)?;
    let mut out = Vec::new();
    for d in 1..n {
        for index in IndexSubset::all_of_size(n as u8, d) {
            let p = p_polynomial(w, &index)?;
            let mut coeffs = p.lambda_coefficients();
            if coeffs.len() > d {
                return Err(Error::Internal(format!("P_{{w,{index:?}}} has λ-degree {}", coeffs.len() - 1)));
            }
            coeffs.resize(d, SparsePolynomial::zero());
            out.extend(coeffs.into_iter().enumerate().map(|(s, polynomial)| PEquation {
                d,
                index: index.clone(),
                s,
                polynomial,
            }));
        }
    }
    Ok(out)
}

/// Plücker relations in every dimension and incidence relations `(d, d+1)`.
pub fn flag_relations(n: usize) -> Result<(Vec<SparsePolynomial>, Vec<SparsePolynomial>)> {
    let mut plucker = Vec::new();
    let mut incidence = Vec::new();
    for d in 1..n {
        plucker.extend(plucker_relations(n, d)?);
        if d + 1 < n {
            incidence.extend(incidence_relations(n, d, d + 1)?);
        }
    }
    Ok((plucker, incidence))
}

pub fn p_polynomials(w: &Perm) -> Result<EquationSet> {
    let n = w.n();
    check_equation_degree(n)?;
    let (plucker, incidence) = flag_relations(n)?;
    Ok(EquationSet { n, plucker, incidence, cell: cell_equations(w), p_equations: p_equations(w)? })
}

/// Identifications `t_{w'(k)} = t_{w(k)}`, `k = 1..n-1`, as sorted pairs,
/// trivial ones dropped.
pub fn fiber_equations(w: &Perm, w_prime: &Perm) -> Result<Vec<(u8, u8)>> {
    if w.n() != w_prime.n() {
        return Err(Error::InvalidArgument("degree mismatch".into()));
    }
    if !w_prime.bruhat_leq(w) {
        return Err(Error::Precondition(format!("{w_prime} is not below {w} in Bruhat order")));
    }
    let set: BTreeSet<(u8, u8)> = (1..w.n())
        .map(|k| (w_prime.get(k) as u8, w.get(k) as u8))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    Ok(set.into_iter().collect())
}

/// Which equation families of `w` hold exactly at a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCheck {
    pub plucker: bool,
    pub incidence: bool,
    pub cell: bool,
    pub p_equations: bool,
}

impl FamilyCheck {
    pub fn all(&self) -> bool {
        self.plucker && self.incidence && self.cell && self.p_equations
    }
}

pub fn all_vanish(polys: &[SparsePolynomial], pt: &RationalPoint) -> Result<bool> {
    for p in polys {
        if !p.evaluate(pt)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn cell_holds(cell: &CellDescription, pt: &RationalPoint) -> Result<bool> {
    let value = |i: &IndexSubset| -> Result<bool> {
        let v = VariableId::plucker(i.elements())?;
        Ok(!pt.get(&v).ok_or_else(|| Error::IncompletePoint(v.to_string()))?.is_zero())
    };
    for i in &cell.nonvanishing {
        if !value(i)? {
            return Ok(false);
        }
    }
    for i in &cell.vanishing {
        if value(i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn check_point(eqs: &EquationSet, pt: &RationalPoint) -> Result<FamilyCheck> {
    let ps: Vec<SparsePolynomial> = eqs.p_equations.iter().map(|e| e.polynomial.clone()).collect();
    Ok(FamilyCheck {
        plucker: all_vanish(&eqs.plucker, pt)?,
        incidence: all_vanish(&eqs.incidence, pt)?,
        cell: cell_holds(&eqs.cell, pt)?,
        p_equations: all_vanish(&ps, pt)?,
    })
}
