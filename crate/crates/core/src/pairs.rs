//! Good and bad pairs: four independent classifiers and exhaustive
//! enumeration over `S_n`.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::min_gen::min_gen_subsystem;
use crate::patterns::flatten;
use crate::root_core::{IndexSubset, RationalVector};
use crate::weyl::{in_parabolic, indices_of, min_rep, standardize_subsystem, ElemId, ParabolicData, Perm, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Good,
    Bad,
    Incomparable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Chain,
    Parabolic,
    Orbit,
    Flatten,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [Criterion::Chain, Criterion::Parabolic, Criterion::Orbit, Criterion::Flatten];
}

/// An orbit `Ω` of `w1 w2⁻¹` and a box `(i, j)` with `w1[i,j]_Ω > w2[i,j]_Ω`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolatingOrbit {
    pub orbit: Vec<u8>,
    pub i: usize,
    pub j: usize,
    pub w1_count: usize,
    pub w2_count: usize,
}

/// [`ParabolicData`] with elements rendered as labels and `J` 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicRecord {
    pub j: Vec<usize>,
    pub u_j: String,
    pub v_j: String,
    pub w_j1: String,
    pub w_j2: String,
}

impl ParabolicRecord {
    pub fn new(g: &WeylGroup, d: &ParabolicData) -> Self {
        Self {
            j: indices_of(d.j).into_iter().map(|i| i + 1).collect(),
            u_j: g.label(d.u_j),
            v_j: g.label(d.v_j),
            w_j1: g.label(d.w_j1),
            w_j2: g.label(d.w_j2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdict {
    pub w1: String,
    pub w2: String,
    pub comparable: bool,
    pub verdict: Verdict,
    /// Positive roots `α_1, …, α_r` in ambient coordinates, applied in order.
    pub chain_witness: Option<Vec<RationalVector>>,
    pub parabolic_data: Option<ParabolicRecord>,
    pub violating_orbit: Option<ViolatingOrbit>,
}

impl PairVerdict {
    fn bare(w1: String, w2: String, verdict: Verdict) -> Self {
        Self {
            w1,
            w2,
            comparable: verdict != Verdict::Incomparable,
            verdict,
            chain_witness: None,
            parabolic_data: None,
            violating_orbit: None,
        }
    }

    pub fn is_good(&self) -> bool {
        self.verdict == Verdict::Good
    }
}

fn check_group_pair(g: &WeylGroup, w1: ElemId, w2: ElemId) -> Result<()> {
    if w1 >= g.order() || w2 >= g.order() {
        return Err(Error::InvalidArgument("element id out of range".into()));
    }
    Ok(())
}

/// Breadth-first search for a chain `w1 → s_{α_1} w1 → … → w2` of
/// length-increasing left multiplications by reflections of `Φ_{w1 w2⁻¹}`,
/// restricted to the lower interval of `w2`. Returns positive root indices.
pub fn find_chain(g: &WeylGroup, w1: ElemId, w2: ElemId) -> Option<Vec<usize>> {
    let x = g.mul(w1, g.inverse(w2));
    let npos = g.system().num_positive();
    let betas: Vec<usize> = min_gen_subsystem(g, x).phi_w.into_iter().filter(|&r| r < npos).collect();
    let below = g.lower_interval(w2);
    let mut parent: HashMap<ElemId, (ElemId, usize)> = HashMap::new();
    let mut queue = VecDeque::from([w1]);
    let mut seen = vec![false; g.order()];
    seen[w1] = true;
    while let Some(u) = queue.pop_front() {
        if u == w2 {
            let mut chain = Vec::new();
            let mut cur = u;
            while cur != w1 {
                let (prev, beta) = parent[&cur];
                chain.push(beta);
                cur = prev;
            }
            chain.reverse();
            return Some(chain);
        }
        for &beta in &betas {
            let v = g.reflect_left(beta, u);
            if !seen[v] && below[v] && g.length(v) > g.length(u) {
                seen[v] = true;
                parent.insert(v, (u, beta));
                queue.push_back(v);
            }
        }
    }
    None
}

/// Checks a chain witness: every root lies in `Φ_{w1 w2⁻¹}`, every step
/// raises the length, and the product carries `w1` to `w2`.
pub fn validate_chain(g: &WeylGroup, w1: ElemId, w2: ElemId, chain: &[usize]) -> bool {
    let phi = min_gen_subsystem(g, g.mul(w1, g.inverse(w2))).phi_w;
    let mut u = w1;
    for &beta in chain {
        if phi.binary_search(&beta).is_err() {
            return false;
        }
        let v = g.reflect_left(beta, u);
        if g.length(v) <= g.length(u) {
            return false;
        }
        u = v;
    }
    u == w2
}

fn roots_to_vectors(g: &WeylGroup, chain: &[usize]) -> Vec<RationalVector> {
    chain.iter().map(|&r| g.system().root(r).clone()).collect()
}

fn attach_type_a_violation(g: &WeylGroup, w1: ElemId, w2: ElemId, v: &mut PairVerdict) {
    if let (Some(p1), Some(p2)) = (g.perm(w1), g.perm(w2)) {
        v.violating_orbit = orbit_violation(p1, p2);
    }
}

/// Classification by searching for a chain of reflections.
pub fn is_good_chain(g: &WeylGroup, w1: ElemId, w2: ElemId) -> Result<PairVerdict> {
    check_group_pair(g, w1, w2)?;
    let (l1, l2) = (g.label(w1), g.label(w2));
    if !g.bruhat_leq(w1, w2) {
        return Ok(PairVerdict::bare(l1, l2, Verdict::Incomparable));
    }
    Ok(match find_chain(g, w1, w2) {
        Some(chain) => {
            let mut v = PairVerdict::bare(l1, l2, Verdict::Good);
            v.chain_witness = Some(roots_to_vectors(g, &chain));
            v
        }
        None => {
            let mut v = PairVerdict::bare(l1, l2, Verdict::Bad);
            attach_type_a_violation(g, w1, w2, &mut v);
            v
        }
    })
}

/// The decomposition `w_i = u^J w_{J,i} (v^J)⁻¹` attached to a comparable pair.
pub fn parabolic_data(g: &WeylGroup, w1: ElemId, w2: ElemId) -> Result<ParabolicData> {
    let x = g.mul(w2, g.inverse(w1));
    let (u_j, j) = standardize_subsystem(g, &min_gen_subsystem(g, x).phi_w)?;
    let v_j = min_rep(g, g.mul(g.inverse(w1), u_j), j);
    let ui = g.inverse(u_j);
    let w_j1 = g.mul(g.mul(ui, w1), v_j);
    let w_j2 = g.mul(g.mul(ui, w2), v_j);
    for (name, w) in [("w_J,1", w_j1), ("w_J,2", w_j2)] {
        if !in_parabolic(g, w, j) {
            return Err(Error::Internal(format!(
                "{name} = {} is not in the parabolic subgroup for ({}, {})",
                g.label(w),
                g.label(w1),
                g.label(w2)
            )));
        }
    }
    Ok(ParabolicData { j, u_j, v_j, w_j1, w_j2 })
}

/// Classification by reduction to a standard parabolic subgroup.
pub fn is_good_parabolic(g: &WeylGroup, w1: ElemId, w2: ElemId) -> Result<PairVerdict> {
    check_group_pair(g, w1, w2)?;
    let (l1, l2) = (g.label(w1), g.label(w2));
    if !g.bruhat_leq(w1, w2) {
        return Ok(PairVerdict::bare(l1, l2, Verdict::Incomparable));
    }
    let data = parabolic_data(g, w1, w2)?;
    let good = g.bruhat_leq(data.w_j1, data.w_j2);
    let mut v = PairVerdict::bare(l1, l2, if good { Verdict::Good } else { Verdict::Bad });
    v.parabolic_data = Some(ParabolicRecord::new(g, &data));
    if good {
        let chain = find_chain(g, w1, w2).ok_or_else(|| {
            Error::Internal(format!("parabolic criterion says good but no chain exists for ({}, {})", v.w1, v.w2))
        })?;
        v.chain_witness = Some(roots_to_vectors(g, &chain));
    } else {
        attach_type_a_violation(g, w1, w2, &mut v);
    }
    Ok(v)
}

/// First violation of `w1[i,j]_Ω ≤ w2[i,j]_Ω` over orbits `Ω` of `w1 w2⁻¹`
/// (in order of smallest element) and boxes `(i, j)` in lexicographic order.
pub fn orbit_violation(w1: &Perm, w2: &Perm) -> Option<ViolatingOrbit> {
    let n = w1.n();
    for orbit in w1.compose(&w2.inverse()).orbits() {
        if orbit.len() == 1 {
            continue;
        }
        let sigma = orbit.iter().fold(0u64, |m, &k| m | 1 << (k - 1));
        for i in 1..=n {
            for j in 1..=n {
                let (c1, c2) = (w1.box_count_in(i, j, sigma), w2.box_count_in(i, j, sigma));
                if c1 > c2 {
                    return Some(ViolatingOrbit { orbit, i, j, w1_count: c1, w2_count: c2 });
                }
            }
        }
    }
    None
}

fn transposition_root(n: usize, a: u8, b: u8) -> RationalVector {
    let mut v = vec![0i64; n];
    v[a as usize - 1] = 1;
    v[b as usize - 1] = -1;
    RationalVector::from_ints(&v)
}

/// Depth-first search for a reflection chain in `S_n`, working directly on
/// one-line notation. Returns the transpositions `(a, b)`, `a < b`, each
/// swapping the values `a` and `b`.
pub fn find_chain_type_a(w1: &Perm, w2: &Perm) -> Option<Vec<(u8, u8)>> {
    let moves: Vec<(u8, u8)> = w1
        .compose(&w2.inverse())
        .orbits()
        .iter()
        .flat_map(|o| o.iter().enumerate().flat_map(move |(k, &a)| o[k + 1..].iter().map(move |&b| (a, b))))
        .collect();
    let mut parent: HashMap<Perm, (Perm, (u8, u8))> = HashMap::new();
    let mut stack = vec![w1.clone()];
    while let Some(u) = stack.pop() {
        if &u == w2 {
            let mut chain = Vec::new();
            let mut cur = u;
            while &cur != w1 {
                let (prev, t) = parent.remove(&cur).expect("parent recorded");
                chain.push(t);
                cur = prev;
            }
            chain.reverse();
            return Some(chain);
        }
        let inv = u.inverse();
        for &(a, b) in &moves {
            // swapping values a < b raises the length iff a stands left of b
            if inv.get(a as usize) > inv.get(b as usize) {
                continue;
            }
            let mut line = u.one_line().to_vec();
            line.swap(inv.get(a as usize) - 1, inv.get(b as usize) - 1);
            let v = Perm::new(line).expect("swap keeps a permutation");
            if v != *w1 && !parent.contains_key(&v) && v.bruhat_leq(w2) {
                parent.insert(v.clone(), (u.clone(), (a, b)));
                stack.push(v);
            }
        }
    }
    None
}

fn type_a_verdict(w1: &Perm, w2: &Perm, good: bool) -> Result<PairVerdict> {
    let mut v = PairVerdict::bare(w1.to_string(), w2.to_string(), if good { Verdict::Good } else { Verdict::Bad });
    if good {
        let chain = find_chain_type_a(w1, w2)
            .ok_or_else(|| Error::Internal(format!("criterion says good but no chain exists for ({w1}, {w2})")))?;
        v.chain_witness = Some(chain.into_iter().map(|(a, b)| transposition_root(w1.n(), a, b)).collect());
    } else {
        v.violating_orbit = orbit_violation(w1, w2);
    }
    Ok(v)
}

fn check_degrees(w1: &Perm, w2: &Perm) -> Result<()> {
    if w1.n() != w2.n() {
        return Err(Error::InvalidArgument(format!("degree mismatch: {w1} vs {w2}")));
    }
    Ok(())
}

/// Classification by box counts restricted to orbits of `w1 w2⁻¹`.
pub fn is_good_orbitwise(w1: &Perm, w2: &Perm) -> Result<PairVerdict> {
    check_degrees(w1, w2)?;
    if !w1.bruhat_leq(w2) {
        return Ok(PairVerdict::bare(w1.to_string(), w2.to_string(), Verdict::Incomparable));
    }
    type_a_verdict(w1, w2, orbit_violation(w1, w2).is_none())
}

/// Whether `fl_Ω(w1) ⪯ fl_Ω(w2)` for every orbit `Ω` of `w1⁻¹ w2`.
pub fn flattenings_comparable(w1: &Perm, w2: &Perm) -> bool {
    w1.inverse().compose(w2).orbits().into_iter().filter(|o| o.len() > 1).all(|o| {
        let sigma = IndexSubset::new(o).expect("orbits are sets");
        let f1 = flatten(w1, &sigma).expect("nonempty orbit");
        let f2 = flatten(w2, &sigma).expect("nonempty orbit");
        f1.bruhat_leq(&f2)
    })
}

/// Classification by flattening along orbits of `w1⁻¹ w2`.
pub fn is_good_flattening(w1: &Perm, w2: &Perm) -> Result<PairVerdict> {
    check_degrees(w1, w2)?;
    if !w1.bruhat_leq(w2) {
        return Ok(PairVerdict::bare(w1.to_string(), w2.to_string(), Verdict::Incomparable));
    }
    type_a_verdict(w1, w2, flattenings_comparable(w1, w2))
}

/// Runs one criterion on a pair of permutations of a symmetric group.
pub fn classify(g: &WeylGroup, criterion: Criterion, w1: &Perm, w2: &Perm) -> Result<PairVerdict> {
    let id = |p: &Perm| {
        g.id_of_perm(p).ok_or_else(|| Error::InvalidArgument(format!("{p} is not an element of this group")))
    };
    match criterion {
        Criterion::Chain => is_good_chain(g, id(w1)?, id(w2)?),
        Criterion::Parabolic => is_good_parabolic(g, id(w1)?, id(w2)?),
        Criterion::Orbit => is_good_orbitwise(w1, w2),
        Criterion::Flatten => is_good_flattening(w1, w2),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairFilter {
    Good,
    Bad,
    All,
}

impl PairFilter {
    fn keeps(self, good: bool) -> bool {
        match self {
            PairFilter::Good => good,
            PairFilter::Bad => !good,
            PairFilter::All => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub n: usize,
    pub total_comparable: usize,
    pub bad_count: usize,
}

pub const MAX_ENUMERATION_DEGREE: usize = 7;

/// Classifies every comparable pair of `S_n` with the orbitwise criterion and
/// passes the kept verdicts to `sink` in lexicographic order of `(w1, w2)`.
/// Work is split over `w1` in blocks, so memory stays bounded by one block.
pub fn enumerate_pairs_with<F>(n: usize, filter: PairFilter, mut sink: F) -> Result<EnumerationSummary>
where
    F: FnMut(&PairVerdict) -> Result<()>,
{
    if !(2..=MAX_ENUMERATION_DEGREE).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} outside 2..={MAX_ENUMERATION_DEGREE}")));
    }
    let perms = Perm::all(n);
    let mut summary = EnumerationSummary { n, total_comparable: 0, bad_count: 0 };
    const BLOCK: usize = 48;
    for block in perms.chunks(BLOCK) {
        let results: Vec<Result<(usize, usize, Vec<PairVerdict>)>> = block
            .par_iter()
            .map(|w1| {
                let (mut comparable, mut bad, mut kept) = (0, 0, Vec::new());
                for w2 in &perms {
                    if !w1.bruhat_leq(w2) {
                        continue;
                    }
                    comparable += 1;
                    let violation = orbit_violation(w1, w2);
                    let good = violation.is_none();
                    if !good {
                        bad += 1;
                    }
                    if filter.keeps(good) {
                        let v = if good {
                            type_a_verdict(w1, w2, true)?
                        } else {
                            let mut v = PairVerdict::bare(w1.to_string(), w2.to_string(), Verdict::Bad);
                            v.violating_orbit = violation;
                            v
                        };
                        kept.push(v);
                    }
                }
                Ok((comparable, bad, kept))
            })
            .collect();
        for r in results {
            let (c, b, kept) = r?;
            summary.total_comparable += c;
            summary.bad_count += b;
            for v in &kept {
                sink(v)?;
            }
        }
    }
    Ok(summary)
}

/// Collecting form of [`enumerate_pairs_with`].
pub fn enumerate_pairs(n: usize, filter: PairFilter) -> Result<(Vec<PairVerdict>, EnumerationSummary)> {
    let mut out = Vec::new();
    let summary = enumerate_pairs_with(n, filter, |v| {
        out.push(v.clone());
        Ok(())
    })?;
    Ok((out, summary))
}

/// All bad pairs of `S_n` in lexicographic order.
pub fn bad_pairs(n: usize) -> Result<Vec<(Perm, Perm)>> {
    let (vs, _) = enumerate_pairs(n, PairFilter::Bad)?;
    vs.into_iter().map(|v| Ok((v.w1.parse()?, v.w2.parse()?))).collect()
}
