//! Permutations in one-line notation, the type A Weyl group elements.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported degree; subsets of `{1..n}` are handled as `u64` masks.
pub const MAX_DEGREE: usize = 64;

/// `w ∈ S_n` stored as `[w(1), …, w(n)]` (1-based values).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn new(one_line: Vec<u8>) -> Result<Self> {
        let n = one_line.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidArgument(format!("permutation degree {n} out of range 1..={MAX_DEGREE}")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidArgument(format!("{one_line:?} is not a permutation of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Self(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u8).collect())
    }

    /// The longest element `w₀ = [n, n-1, …, 1]`.
    pub fn longest(n: usize) -> Self {
        Self((1..=n as u8).rev().collect())
    }

    /// The transposition `(i j)` of `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut v: Vec<u8> = (1..=n as u8).collect();
        v.swap(i - 1, j - 1);
        Self(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Self(inv)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        Self(other.0.iter().map(|&j| self.0[j as usize - 1]).collect())
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// `w w₀`: the one-line notation read backwards.
    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `w₀ w`: each value `v` replaced by `n + 1 - v`.
    pub fn complement(&self) -> Self {
        let n = self.n() as u8;
        Self(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Orbits of `⟨w⟩` on `{1..n}`, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                orbit.push(k as u8);
                k = self.get(k);
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Bitmask of `w({1..i})`.
    pub fn prefix_mask(&self, i: usize) -> u64 {
        self.0[..i].iter().fold(0, |m, &v| m | 1 << (v - 1))
    }

    /// `w[i,j] = |w({1..i}) ∩ {j..n}|`.
    pub fn box_count(&self, i: usize, j: usize) -> usize {
        self.box_count_in(i, j, u64::MAX)
    }

    /// `w[i,j]_Σ = |w({1..i}) ∩ {j..n} ∩ Σ|` with `Σ` given as a bitmask.
    pub fn box_count_in(&self, i: usize, j: usize, sigma: u64) -> usize {
        (self.prefix_mask(i) & suffix_mask(j) & sigma).count_ones() as usize
    }

    /// Bruhat order by the box criterion: `self ⪯ other` iff
    /// `self[i,j] ≤ other[i,j]` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        let n = self.n();
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..n {
            a |= 1 << (self.0[i] - 1);
            b |= 1 << (other.0[i] - 1);
            for j in 2..=n {
                let s = suffix_mask(j);
                if (a & s).count_ones() > (b & s).count_ones() {
                    return false;
                }
            }
        }
        true
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        let mut out = vec![Perm(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Perm(cur.clone()));
        }
        out
    }
}

/// Bitmask of `{j..n}` (all bits from `j - 1` up).
pub fn suffix_mask(j: usize) -> u64 {
    if j == 0 {
        u64::MAX
    } else if j > 64 {
        0
    } else {
        u64::MAX << (j - 1)
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() < 10 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts `"4231"`, `"[4231]"`, or comma-separated `"10,3,1,..."`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(t).trim();
        let bad = || Error::Parse(format!("not a one-line permutation: {s:?}"));
        if t.is_empty() {
            return Err(bad());
        }
        let values: Vec<u8> = if t.contains(',') {
            t.split(',')
                .map(|p| {
                    let p = p.trim();
                    if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(bad());
                    }
                    p.parse::<u8>().map_err(|_| bad())
                })
                .collect::<Result<_>>()?
        } else {
            t.bytes().map(|b| if b.is_ascii_digit() { Ok(b - b'0') } else { Err(bad()) }).collect::<Result<_>>()?
        };
        Perm::new(values).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<String> for Perm {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Perm> for String {
    fn from(p: Perm) -> String {
        p.to_string()
    }
}

/// Parses a permutation and checks its degree.
pub fn parse_perm(s: &str, n: usize) -> Result<Perm> {
    let p: Perm = s.parse()?;
    if p.n() != n {
        return Err(Error::InvalidArgument(format!("{s:?} has degree {}, expected {n}", p.n())));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Perm::identity(5).length(), 0);
        assert_eq!(p("4231").length(), 5);
        assert_eq!(p("4321").length(), 6);
    }

    #[test]
    fn bruhat_examples() {
        assert!(p("1324").bruhat_leq(&p("4231")));
        assert!(!p("2134").bruhat_leq(&p("1342")));
        for w in Perm::all(4) {
            assert!(Perm::identity(4).bruhat_leq(&w));
            assert!(w.bruhat_leq(&Perm::longest(4)));
        }
    }

    #[test]
    fn box_counts() {
        let w = p("4231");
        assert_eq!(w.box_count(1, 4), 1);
        assert_eq!(w.box_count(2, 2), 2);
        assert_eq!(w.box_count(4, 1), 4);
        assert_eq!(w.box_count_in(4, 1, 0b0110), 2);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4231").to_string(), "4231");
        assert_eq!(p("[312]"), p("312"));
        let big: Perm = "10,3,1,2,4,5,6,7,8,9".parse().unwrap();
        assert_eq!(big.to_string(), "10,3,1,2,4,5,6,7,8,9");
        assert_eq!(big.get(1), 10);
        for bad in ["", "1224", "0123", "12a", "1,,2", "[", "5"] {
            assert!(bad.parse::<Perm>().is_err(), "{bad}");
        }
        assert!(parse_perm("4231", 5).is_err());
    }

    #[test]
    fn group_operations() {
        let w = p("2431");
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.reverse(), w.compose(&Perm::longest(4)));
        assert_eq!(w.complement(), Perm::longest(4).compose(&w));
        assert_eq!(p("4321").orbits(), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(p("2341").orbits(), vec![vec![1, 2, 3, 4]]);
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(Perm::all(3)[1], p("132"));
    }

    #[test]
    fn serde_as_string() {
        let json = serde_json::to_string(&p("4231")).unwrap();
        assert_eq!(json, "\"4231\"");
        assert_eq!(serde_json::from_str::<Perm>(&json).unwrap(), p("4231"));
        assert!(serde_json::from_str::<Perm>("\"44\"").is_err());
    }
}
