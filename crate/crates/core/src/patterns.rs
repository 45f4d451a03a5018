//! Flattening, pattern containment, and the pattern description of which
//! permutations admit a bad partner.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::{enumerate_pairs_with, orbit_violation, PairFilter, MAX_ENUMERATION_DEGREE};
use crate::root_core::IndexSubset;
use crate::weyl::Perm;

/// `fl_Σ(w)`: the permutation of `{1..|Σ|}` in the same relative order as
/// `(w(i))_{i ∈ Σ}`.
pub fn flatten(w: &Perm, sigma: &IndexSubset) -> Result<Perm> {
    if sigma.is_empty() {
        return Err(Error::InvalidArgument("cannot flatten along an empty set".into()));
    }
    if sigma.elements().iter().any(|&i| i as usize > w.n()) {
        return Err(Error::InvalidArgument(format!("{sigma:?} is not a subset of 1..{}", w.n())));
    }
    let values: Vec<usize> = sigma.elements().iter().map(|&i| w.get(i as usize)).collect();
    let ranks = values.iter().map(|v| values.iter().filter(|u| *u <= v).count() as u8).collect();
    Perm::new(ranks)
}

/// Lexicographically first `Σ` with `fl_Σ(w) = f`.
pub fn has_pattern(w: &Perm, f: &Perm) -> Option<IndexSubset> {
    let (n, k) = (w.n(), f.n());
    if k > n {
        return None;
    }
    fn rec(w: &Perm, f: &Perm, start: usize, chosen: &mut Vec<u8>) -> bool {
        let m = chosen.len();
        if m == f.n() {
            return true;
        }
        for i in start..=w.n() - (f.n() - m - 1) {
            let v = w.get(i);
            let fits =
                chosen.iter().enumerate().all(|(l, &c)| (w.get(c as usize) < v) == (f.get(l + 1) < f.get(m + 1)));
            if fits {
                chosen.push(i as u8);
                if rec(w, f, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    rec(w, f, 1, &mut chosen).then(|| IndexSubset::new(chosen).expect("increasing positions"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `w` is the larger element of the pair.
    Left,
    /// `w` is the smaller element of the pair.
    Right,
}

/// `(pattern, partner)`: pairs `(partner, pattern)` are bad on the left side.
pub const LEFT_MODELS: [(&str, &str); 4] =
    [("4231", "1324"), ("42513", "13245"), ("35142", "12435"), ("351624", "124356")];

/// `(pattern, partner)`: pairs `(pattern, partner)` are bad on the right side.
pub const RIGHT_MODELS: [(&str, &str); 4] =
    [("1324", "4231"), ("31524", "54231"), ("24153", "53421"), ("426153", "653421")];

fn models(side: Side) -> Vec<(Perm, Perm)> {
    let table = match side {
        Side::Left => &LEFT_MODELS,
        Side::Right => &RIGHT_MODELS,
    };
    table.iter().map(|(a, b)| (a.parse().expect("model"), b.parse().expect("model"))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub pattern: Perm,
    pub sigma: IndexSubset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternReport {
    pub w: Perm,
    pub side: Side,
    pub has_bad_partner: bool,
    pub witness_pattern: Option<PatternWitness>,
    pub witness_partner: Option<Perm>,
}

/// Replaces the letters of `w` on `sigma` by the same values rearranged
/// in the relative order of `model`.
pub fn embed(w: &Perm, sigma: &IndexSubset, model: &Perm) -> Perm {
    let mut values: Vec<u8> = sigma.elements().iter().map(|&i| w.get(i as usize) as u8).collect();
    values.sort_unstable();
    let mut line = w.one_line().to_vec();
    for (k, &i) in sigma.elements().iter().enumerate() {
        line[i as usize - 1] = values[model.get(k + 1) - 1];
    }
    Perm::new(line).expect("rearranging values keeps a permutation")
}

fn is_bad(w1: &Perm, w2: &Perm) -> bool {
    w1.bruhat_leq(w2) && orbit_violation(w1, w2).is_some()
}

/// All `Σ` (lexicographic) with `fl_Σ(w) = f`.
pub fn pattern_occurrences(w: &Perm, f: &Perm) -> Vec<IndexSubset> {
    if f.n() > w.n() {
        return Vec::new();
    }
    IndexSubset::all_of_size(w.n() as u8, f.n()).into_iter().filter(|s| flatten(w, s).as_ref() == Ok(f)).collect()
}

fn bad_exists(w: &Perm, side: Side) -> PatternReport {
    let mut report =
        PatternReport { w: w.clone(), side, has_bad_partner: false, witness_pattern: None, witness_partner: None };
    let models = models(side);
    for (pattern, _) in &models {
        let Some(first) = has_pattern(w, pattern) else { continue };
        report.has_bad_partner = true;
        report.witness_pattern = Some(PatternWitness { pattern: pattern.clone(), sigma: first });
        break;
    }
    if !report.has_bad_partner {
        return report;
    }
    // The first occurrence whose embedded model partner verifies wins.
    for (pattern, partner) in &models {
        for sigma in pattern_occurrences(w, pattern) {
            let other = embed(w, &sigma, partner);
            let bad = match side {
                Side::Left => is_bad(&other, w),
                Side::Right => is_bad(w, &other),
            };
            if bad {
                report.witness_pattern = Some(PatternWitness { pattern: pattern.clone(), sigma });
                report.witness_partner = Some(other);
                return report;
            }
        }
    }
    report
}

/// Whether `w` contains one of 4231, 42513, 35142, 351624, with a verified
/// partner `w'` making `(w', w)` bad.
pub fn left_bad_exists(w: &Perm) -> PatternReport {
    bad_exists(w, Side::Left)
}

/// Whether `w` contains one of 1324, 31524, 24153, 426153, with a verified
/// partner `w'` making `(w, w')` bad.
pub fn right_bad_exists(w: &Perm) -> PatternReport {
    bad_exists(w, Side::Right)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternMismatch {
    pub w: Perm,
    pub side: Side,
    pub predicted: bool,
    pub brute_force: bool,
    pub partner_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternTheoremReport {
    pub n: usize,
    pub mismatches: Vec<PatternMismatch>,
}

/// Compares the pattern prediction with exhaustive bad-pair search for every
/// `w ∈ S_n`, on both sides. A predicted partner that fails to verify also
/// counts as a mismatch.
pub fn verify_pattern_theorem(n: usize) -> Result<PatternTheoremReport> {
    if !(2..=MAX_ENUMERATION_DEGREE).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} outside 2..={MAX_ENUMERATION_DEGREE}")));
    }
    let mut larger = HashSet::new();
    let mut smaller = HashSet::new();
    enumerate_pairs_with(n, PairFilter::Bad, |v| {
        smaller.insert(v.w1.parse::<Perm>()?);
        larger.insert(v.w2.parse::<Perm>()?);
        Ok(())
    })?;
    let perms = Perm::all(n);
    let mismatches = perms
        .par_iter()
        .flat_map_iter(|w| {
            [(Side::Left, &larger), (Side::Right, &smaller)]
                .into_iter()
                .filter_map(|(side, truth)| {
                    let report = bad_exists(w, side);
                    let brute_force = truth.contains(w);
                    let partner_verified = report.witness_partner.is_some() == report.has_bad_partner;
                    (report.has_bad_partner != brute_force || !partner_verified).then(|| PatternMismatch {
                        w: w.clone(),
                        side,
                        predicted: report.has_bad_partner,
                        brute_force,
                        partner_verified,
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(PatternTheoremReport { n, mismatches })
}

/// The Schubert variety of `w` is singular iff `w` contains 3412 or 4231.
pub fn schubert_singular(w: &Perm) -> bool {
    ["3412", "4231"].iter().any(|f| has_pattern(w, &f.parse().expect("pattern")).is_some())
}
