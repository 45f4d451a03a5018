use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::equations::{all_vanish, cell_holds, fiber_equations, p_polynomials, prefix_set, EquationSet};
use super::relations::shifted_diagonal_product;
use crate::error::{Error, Result};
use crate::pairs::bad_pairs;
use crate::poly::{RationalPoint, SparsePolynomial, VariableId};
use crate::root_core::rational::{rat, serde_rational};
use crate::root_core::{IndexSubset, Rational, RationalVector};
use crate::weyl::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Main,
    Remark,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Hit {
    pub q: usize,
    pub a: u8,
    pub b: u8,
    pub variant: Variant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanStatus {
    Refuted,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PluckerValue {
    pub index: IndexSubset,
    #[serde(with = "serde_rational")]
    pub value: Rational,
}

/// A point of `Ṽ_{w'}` with a single nonzero Plücker coordinate per
/// dimension and diagonal `ψ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPoint {
    pub plucker_values: Vec<PluckerValue>,
    /// Rows of the upper-triangular `ψ`.
    pub psi: Vec<RationalVector>,
}

impl WitnessPoint {
    /// `x_I = 1` exactly when `I = {w'(1..d)}`, `ψ = diag(t)`.
    pub fn new(w_prime: &Perm, t: &[Rational]) -> Result<Self> {
        let n = w_prime.n();
        if t.len() != n {
            return Err(Error::InvalidArgument(format!("expected {n} diagonal values, got {}", t.len())));
        }
        let mut plucker_values = Vec::new();
        for d in 1..n {
            let top = prefix_set(w_prime, d);
            for index in IndexSubset::all_of_size(n as u8, d) {
                let value = if index == top { rat(1) } else { rat(0) };
                plucker_values.push(PluckerValue { index, value });
            }
        }
        let psi = (0..n)
            .map(|r| RationalVector::new((0..n).map(|c| if r == c { t[r].clone() } else { rat(0) }).collect()))
            .collect();
        Ok(Self { plucker_values, psi })
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        self.psi.iter().enumerate().map(|(i, row)| row.coords()[i].clone()).collect()
    }

    pub fn to_point(&self) -> Result<RationalPoint> {
        let mut pt = RationalPoint::new();
        for pv in &self.plucker_values {
            pt.insert(VariableId::plucker(pv.index.elements())?, pv.value.clone());
        }
        for (r, row) in self.psi.iter().enumerate() {
            for (c, v) in row.coords().iter().enumerate().skip(r) {
                let var = VariableId::matrix_entry(r as u8 + 1, c as u8 + 1).expect("upper entry");
                pt.insert(var, v.clone());
            }
        }
        Ok(pt)
    }
}

/// Diagonal constant on the orbits of `w w'^{-1}`: `0` on the orbit of `a`,
/// `1` on that of `b`, then `2, 3, …` by smallest element.
pub fn witness_diagonal(w: &Perm, w_prime: &Perm, a: u8, b: u8) -> Result<Vec<Rational>> {
    let orbits = w.compose(&w_prime.inverse()).orbits();
    let find = |x: u8| orbits.iter().position(|o| o.contains(&x));
    let (oa, ob) = match (find(a), find(b)) {
        (Some(oa), Some(ob)) => (oa, ob),
        _ => return Err(Error::InvalidArgument(format!("({a}, {b}) out of range"))),
    };
    if oa == ob {
        return Err(Error::Precondition(format!("{a} and {b} lie in the same orbit of ww'^-1")));
    }
    let mut value = vec![0i64; orbits.len()];
    value[ob] = 1;
    let mut next = 2;
    for (k, v) in value.iter_mut().enumerate() {
        if k != oa && k != ob {
            *v = next;
            next += 1;
        }
    }
    let mut t = vec![rat(0); w.n()];
    for (k, orbit) in orbits.iter().enumerate() {
        for &x in orbit {
            t[x as usize - 1] = rat(value[k]);
        }
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessTranscript {
    pub w: Perm,
    pub w_prime: Perm,
    pub a: u8,
    pub b: u8,
    pub point: WitnessPoint,
    /// (i) Plücker and incidence relations.
    pub relations: bool,
    /// (ii) cell (in)equations of `w'`.
    pub cell: bool,
    /// (iii) every `P_{w',I,s}` vanishes.
    pub p_equations: bool,
    /// (iv) `t_{w'(k)} = t_{w(k)}` for all `k`.
    pub fiber: bool,
    /// (v) `t_a ≠ t_b`.
    pub separates: bool,
    /// `∏_{k≤d}(t_{w'(k)}+λ) = ∏_{k≤d}(t_{w(k)}+λ)` for every `d`.
    pub characteristic_products: bool,
}

impl WitnessTranscript {
    pub fn in_fiber(&self) -> bool {
        self.relations && self.cell && self.p_equations && self.fiber
    }
}

/// Evaluates the five checks at `point` against the equations of `w'`.
pub fn witness_transcript_with(
    w: &Perm,
    w_prime: &Perm,
    a: u8,
    b: u8,
    point: WitnessPoint,
    eqs: &EquationSet,
) -> Result<WitnessTranscript> {
    let pt = point.to_point()?;
    let t = point.diagonal();
    let ps: Vec<SparsePolynomial> = eqs.p_equations.iter().map(|e| e.polynomial.clone()).collect();
    let fiber = fiber_equations(w, w_prime)?.iter().all(|&(x, y)| t[x as usize - 1] == t[y as usize - 1]);
    let mut characteristic_products = true;
    for d in 1..w.n() {
        let lhs = shifted_diagonal_product(w_prime.one_line()[..d].iter().copied());
        let rhs = shifted_diagonal_product(w.one_line()[..d].iter().copied());
        characteristic_products &= (&lhs - &rhs).substitute(&pt).is_zero();
    }
    Ok(WitnessTranscript {
        w: w.clone(),
        w_prime: w_prime.clone(),
        a,
        b,
        relations: all_vanish(&eqs.plucker, &pt)? && all_vanish(&eqs.incidence, &pt)?,
        cell: cell_holds(&eqs.cell, &pt)?,
        p_equations: all_vanish(&ps, &pt)?,
        fiber,
        separates: t[a as usize - 1] != t[b as usize - 1],
        characteristic_products,
        point,
    })
}

/// Builds the deterministic witness for an orbit-separated `(a, b)` and
/// evaluates every check.
pub fn witness_transcript(w: &Perm, w_prime: &Perm, a: u8, b: u8) -> Result<WitnessTranscript> {
    check_pair(w, w_prime)?;
    let t = witness_diagonal(w, w_prime, a, b)?;
    let eqs = p_polynomials(w_prime)?;
    witness_transcript_with(w, w_prime, a, b, WitnessPoint::new(w_prime, &t)?, &eqs)
}

fn require_in_fiber(tr: &WitnessTranscript) -> Result<()> {
    if !tr.in_fiber() {
        return Err(Error::VerificationFailed(format!(
            "witness for ({}, {}) at (a, b) = ({}, {}): relations={} cell={} p_equations={} fiber={}",
            tr.w, tr.w_prime, tr.a, tr.b, tr.relations, tr.cell, tr.p_equations, tr.fiber
        )));
    }
    Ok(())
}

/// `Ok(t_a ≠ t_b)` once the witness is confirmed to lie in
/// `Ṽ_{w'} ∩ q^{-1}(𝔱^{ww'^{-1}} + 𝔲)`; an error if it does not.
pub fn verify_witness(w: &Perm, w_prime: &Perm, a: u8, b: u8) -> Result<bool> {
    let tr = witness_transcript(w, w_prime, a, b)?;
    require_in_fiber(&tr)?;
    Ok(tr.separates)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub w: Perm,
    pub w_prime: Perm,
    pub hits: Vec<Hit>,
    pub orbit_separated_hits: Vec<Hit>,
    pub status: ScanStatus,
    pub witness: Option<WitnessTranscript>,
}

fn check_pair(w: &Perm, w_prime: &Perm) -> Result<()> {
    if w.n() != w_prime.n() {
        return Err(Error::InvalidArgument("degree mismatch".into()));
    }
    if !w_prime.bruhat_leq(w) {
        return Err(Error::Precondition(format!("{w_prime} is not below {w} in Bruhat order")));
    }
    Ok(())
}

/// All `(q, a, b)` meeting the conditions, each satisfied variant listed
/// separately, sorted.
pub fn scan_hits(w: &Perm, w_prime: &Perm) -> Result<Vec<Hit>> {
    check_pair(w, w_prime)?;
    let n = w.n();
    let mut hits = Vec::new();
    for q in 1..n.saturating_sub(1) {
        let top = w.prefix_mask(q + 1);
        let top_prime = w_prime.prefix_mask(q + 1);
        let has = |mask: u64, x: u8| mask >> (x - 1) & 1 == 1;
        for a in 1..=n as u8 {
            if has(top, a) || !has(top_prime, a) {
                continue;
            }
            for b in a + 1..=n as u8 {
                if !has(top, b) || has(top_prime, b) {
                    continue;
                }
                let main = (1..b).filter(|&i| i != a && has(top_prime, i)).all(|i| has(top, i));
                let remark = (a + 1..=n as u8).filter(|&j| j != b && has(top, j)).all(|j| has(top_prime, j));
                if main {
                    hits.push(Hit { q, a, b, variant: Variant::Main });
                }
                if remark {
                    hits.push(Hit { q, a, b, variant: Variant::Remark });
                }
            }
        }
    }
    hits.sort();
    Ok(hits)
}

pub fn additional_equation_scan(w: &Perm, w_prime: &Perm) -> Result<CounterexampleReport> {
    let hits = scan_hits(w, w_prime)?;
    let orbits = w.compose(&w_prime.inverse()).orbits();
    let orbit_of = |x: u8| orbits.iter().position(|o| o.contains(&x));
    let orbit_separated_hits: Vec<Hit> = hits.iter().copied().filter(|h| orbit_of(h.a) != orbit_of(h.b)).collect();
    let witness = match orbit_separated_hits.first() {
        None => None,
        Some(h) => {
            let tr = witness_transcript(w, w_prime, h.a, h.b)?;
            require_in_fiber(&tr)?;
            if !tr.separates {
                return Err(Error::VerificationFailed(format!("witness for ({w}, {w_prime}) has t_a = t_b")));
            }
            Some(tr)
        }
    };
    let status = if witness.is_some() { ScanStatus::Refuted } else { ScanStatus::Unknown };
    Ok(CounterexampleReport { w: w.clone(), w_prime: w_prime.clone(), hits, orbit_separated_hits, status, witness })
}

/// Scans every bad pair of `S_n`, the larger element playing `w`.
pub fn scan_bad_pairs(n: usize) -> Result<Vec<CounterexampleReport>> {
    let pairs = bad_pairs(n)?;
    pairs.par_iter().map(|(w1, w2)| additional_equation_scan(w2, w1)).collect()
}
