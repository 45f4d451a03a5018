use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::equations::prefix_set;
use super::relations::{shifted_diagonal_product, signed_plucker_poly};
use super::sample::{sample_point_on_vw, SampledPoint};
use crate::error::{Error, Result};
use crate::poly::{symbolic_minor, RationalPoint, SparsePolynomial};
use crate::root_core::rational::rat;
use crate::root_core::{subset_leq, IndexSubset};
use crate::weyl::Perm;

/// Outcome of a sampled check of an identity holding "for a certain sign".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignCheck {
    /// Sign fixed by the first sample on which the identity is not `0 = 0`.
    pub sign: Option<i8>,
    pub samples: usize,
    pub holds: bool,
}

fn seq(prefix: &[u8], last: u8) -> Vec<u8> {
    let mut v = prefix.to_vec();
    v.push(last);
    v
}

fn eval(p: &SparsePolynomial, pt: &RationalPoint) -> Result<crate::root_core::Rational> {
    p.evaluate(pt)
}

/// `{w(1..q+1)} \ {b}` after checking the incidence-lemma hypotheses.
fn incidence_hypotheses(w: &Perm, q: usize, b: u8, j_set: &IndexSubset, a: u8) -> Result<IndexSubset> {
    let n = w.n();
    if q == 0 || q + 2 > n {
        return Err(Error::Precondition(format!("q = {q} outside 1..={}", n.saturating_sub(2))));
    }
    if a == 0 || a as usize > n || j_set.elements().iter().any(|&j| j as usize > n) {
        return Err(Error::InvalidArgument(format!("indices exceed {n}")));
    }
    if j_set.len() != q {
        return Err(Error::Precondition(format!("j_set must have {q} elements")));
    }
    let top = prefix_set(w, q + 1);
    if !top.contains(b) {
        return Err(Error::Precondition(format!("{b} is not among w(1..{})", q + 1)));
    }
    if j_set.contains(b) {
        return Err(Error::Precondition(format!("j_set contains {b}")));
    }
    if let Some(j) = j_set.elements().iter().find(|&&j| j < b && !top.contains(j)) {
        return Err(Error::Precondition(format!("{j} < {b} is not among w(1..{})", q + 1)));
    }
    Ok(top.without(b))
}

/// Fits `lhs = ε · rhs` across samples: the sign comes from the first sample
/// where either side is nonzero.
fn fit_sign(
    pairs: impl Iterator<Item = Result<(crate::root_core::Rational, crate::root_core::Rational)>>,
) -> Result<SignCheck> {
    let mut sign: Option<i8> = None;
    let mut samples = 0;
    let mut holds = true;
    for pair in pairs {
        let (lhs, rhs) = pair?;
        samples += 1;
        let ok = match sign {
            Some(s) => lhs == rhs * rat(s as i64),
            None if lhs.is_zero() && rhs.is_zero() => true,
            None if lhs == rhs => {
                sign = Some(1);
                true
            }
            None if lhs == -rhs.clone() => {
                sign = Some(-1);
                true
            }
            None => false,
        };
        holds &= ok;
    }
    Ok(SignCheck { sign, samples, holds })
}

/// `x_{i_1…i_q a} x_{j_1…j_q b} = ± x_{i_1…i_q b} x_{j_1…j_q a}` on given
/// points of `Ṽ_w`.
pub fn simplified_incidence_on(
    w: &Perm,
    q: usize,
    b: u8,
    j_set: &IndexSubset,
    a: u8,
    points: &[SampledPoint],
) -> Result<SignCheck> {
    let i_set = incidence_hypotheses(w, q, b, j_set, a)?;
    let (i, j) = (i_set.elements(), j_set.elements());
    let lhs = &signed_plucker_poly(&seq(i, a)) * &signed_plucker_poly(&seq(j, b));
    let rhs = &signed_plucker_poly(&seq(i, b)) * &signed_plucker_poly(&seq(j, a));
    fit_sign(points.iter().map(|s| Ok((eval(&lhs, &s.point)?, eval(&rhs, &s.point)?))))
}

/// Seeded form of [`simplified_incidence_on`] with `samples` fresh points.
pub fn simplified_incidence_check(
    w: &Perm,
    q: usize,
    b: u8,
    j_set: &IndexSubset,
    a: u8,
    samples: usize,
    seed: u64,
) -> Result<SignCheck> {
    incidence_hypotheses(w, q, b, j_set, a)?;
    let points = sample_points(w, samples, seed)?;
    simplified_incidence_on(w, q, b, j_set, a, &points)
}

pub fn sample_points(w: &Perm, samples: usize, seed: u64) -> Result<Vec<SampledPoint>> {
    (0..samples as u64).map(|k| sample_point_on_vw(w, seed.wrapping_add(k))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditionalEquationCheck {
    /// `(K, ε_K)` for each `K` with `J ⪯ K ⪯ I`.
    pub signs: Vec<(IndexSubset, i8)>,
    pub samples: usize,
    pub holds: bool,
}

/// `Σ_K ε_K Δ^{K∪b}_{J∪b}(u+λ) x_{K a} - ε_J ∏_{i≤q+1}(t_{w(i)}+λ) x_{J a}`
/// vanishes identically in `λ` at every point, where `ε_K` is the sign of the
/// incidence identity for `K`, fitted on the same points.
pub fn additional_equation_on(
    w: &Perm,
    q: usize,
    b: u8,
    j_set: &IndexSubset,
    a: u8,
    points: &[SampledPoint],
) -> Result<AdditionalEquationCheck> {
    let n = w.n();
    let i_set = incidence_hypotheses(w, q, b, j_set, a)?;
    if j_set.contains(a) || a == b {
        return Err(Error::Precondition(format!("{a} must avoid j_set and {b}")));
    }
    if !subset_leq(&j_set.with(a)?, &i_set.with(b)?)? {
        return Err(Error::Precondition("J ∪ {a} is not below I ∪ {b}".into()));
    }
    let (jb, ib) = (j_set.with(b)?, i_set.with(b)?);
    let mut terms = Vec::new();
    let mut signs = Vec::new();
    let mut holds = true;
    for kb in IndexSubset::all_of_size(n as u8, q + 1) {
        if !kb.contains(b) || !subset_leq(&jb, &kb)? || !subset_leq(&kb, &ib)? {
            continue;
        }
        let k_set = kb.without(b);
        let fit = simplified_incidence_on(w, q, b, &k_set, a, points)?;
        holds &= fit.holds;
        let eps = fit.sign.unwrap_or(1);
        signs.push((k_set.clone(), eps));
        let minor = symbolic_minor(n, &jb, &kb, true)?;
        terms.push((k_set, eps, minor));
    }
    let eps_j = signs.iter().find(|(k, _)| k == j_set).map(|&(_, e)| e).unwrap_or(1);
    let mut poly = SparsePolynomial::zero();
    for (k_set, eps, minor) in &terms {
        let x = signed_plucker_poly(&seq(k_set.elements(), a));
        poly = &poly + &(&minor.scale(&rat(*eps as i64)) * &x);
    }
    let diag = shifted_diagonal_product(w.one_line()[..=q].iter().copied());
    let x_ja = signed_plucker_poly(&seq(j_set.elements(), a));
    poly = &poly - &(&diag * &x_ja).scale(&rat(eps_j as i64));
    for s in points {
        holds &= poly.substitute(&s.point).is_zero();
    }
    Ok(AdditionalEquationCheck { signs, samples: points.len(), holds })
}

/// Every `(q, b, J, a)` meeting the hypotheses of the additional equation.
pub fn additional_equation_instances(w: &Perm) -> Vec<(usize, u8, IndexSubset, u8)> {
    let n = w.n();
    let mut out = Vec::new();
    for q in 1..n.saturating_sub(1) {
        let top = prefix_set(w, q + 1);
        for &b in top.elements() {
            for j_set in IndexSubset::all_of_size(n as u8, q) {
                if j_set.contains(b) || j_set.elements().iter().any(|&j| j < b && !top.contains(j)) {
                    continue;
                }
                for a in 1..=n as u8 {
                    if a == b || j_set.contains(a) {
                        continue;
                    }
                    let ja = j_set.with(a).expect("a avoids j_set");
                    if subset_leq(&ja, &top).expect("same size") {
                        out.push((q, b, j_set.clone(), a));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn set(v: &[u8]) -> IndexSubset {
        IndexSubset::new(v.to_vec()).unwrap()
    }

    #[test]
    fn incidence_identity_example() {
        let r = simplified_incidence_check(&p("4231"), 1, 2, &set(&[3]), 1, 10, 42).unwrap();
        assert!(r.holds);
        assert_eq!(r.samples, 10);
        assert_eq!(r.sign, Some(1));
        // 1 < 2 lies outside w(1..2) = {2, 4}
        let e = simplified_incidence_check(&p("4231"), 1, 2, &set(&[1]), 3, 10, 42);
        assert!(matches!(e, Err(Error::Precondition(_))));
    }

    #[test]
    fn incidence_precondition() {
        let e = simplified_incidence_check(&p("4231"), 1, 2, &set(&[2]), 3, 1, 0);
        assert!(matches!(e, Err(Error::Precondition(_))));
        let e = simplified_incidence_check(&p("4231"), 1, 3, &set(&[1]), 2, 1, 0);
        assert!(matches!(e, Err(Error::Precondition(_))));
    }

    #[test]
    fn incidence_on_big_cell() {
        let w0 = Perm::longest(4);
        for (q, b, j, a) in [(1, 3, set(&[4]), 2), (2, 2, set(&[3, 4]), 1), (1, 4, set(&[3]), 1)] {
            let r = simplified_incidence_check(&w0, q, b, &j, a, 8, 3).unwrap();
            assert!(r.holds, "{q} {b} {j:?} {a}");
        }
    }

    #[test]
    fn incidence_exhaustive_on_s4() {
        for w in Perm::all(4) {
            let pts = sample_points(&w, 4, 1).unwrap();
            for q in 1..=2 {
                for &b in prefix_set(&w, q + 1).elements() {
                    for j in IndexSubset::all_of_size(4, q) {
                        for a in 1..=4 {
                            match simplified_incidence_on(&w, q, b, &j, a, &pts) {
                                Ok(r) => assert!(r.holds, "{w} {q} {b} {j:?} {a}"),
                                Err(Error::Precondition(_)) => {}
                                Err(e) => panic!("{e}"),
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn additional_equation_on_s4() {
        for w in [p("4231"), p("3412"), Perm::longest(4)] {
            let pts = sample_points(&w, 5, 11).unwrap();
            let inst = additional_equation_instances(&w);
            assert!(!inst.is_empty());
            for (q, b, j, a) in inst {
                assert!(additional_equation_on(&w, q, b, &j, a, &pts).unwrap().holds, "{w} {q} {b} {j:?} {a}");
            }
        }
    }
}
