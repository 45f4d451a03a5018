use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// A sorted, duplicate-free subset of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct IndexSubset(Vec<u8>);

impl IndexSubset {
    /// Sorts and validates; rejects duplicates and zero.
    pub fn new(mut elements: Vec<u8>) -> Result<Self> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("repeated index in {elements:?}")));
        }
        if elements.first() == Some(&0) {
            return Err(Error::InvalidArgument("indices are 1-based".into()));
        }
        Ok(Self(elements))
    }

    pub fn full(n: u8) -> Self {
        Self((1..=n).collect())
    }

    pub fn elements(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: u8) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn with(&self, i: u8) -> Result<Self> {
        let mut v = self.0.clone();
        v.push(i);
        Self::new(v)
    }

    pub fn without(&self, i: u8) -> Self {
        Self(self.0.iter().copied().filter(|&x| x != i).collect())
    }

    /// Bitmask with bit `i - 1` set for each element `i`.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    /// All `d`-element subsets of `{1..n}` in lexicographic order.
    pub fn all_of_size(n: u8, d: usize) -> Vec<IndexSubset> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(d);
        fn rec(start: u8, n: u8, d: usize, cur: &mut Vec<u8>, out: &mut Vec<IndexSubset>) {
            if cur.len() == d {
                out.push(IndexSubset(cur.clone()));
                return;
            }
            let need = (d - cur.len()) as u8;
            for i in start..=n {
                if n - i + 1 < need {
                    break;
                }
                cur.push(i);
                rec(i + 1, n, d, cur, out);
                cur.pop();
            }
        }
        rec(1, n, d, &mut cur, &mut out);
        out
    }

    /// Concatenated digits (`"356"`), comma-separated once any index exceeds 9.
    pub fn label(&self) -> String {
        if self.0.iter().all(|&i| i < 10) {
            self.0.iter().map(|i| i.to_string()).collect()
        } else {
            self.0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl TryFrom<Vec<u8>> for IndexSubset {
    type Error = Error;
    fn try_from(v: Vec<u8>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<IndexSubset> for Vec<u8> {
    fn from(s: IndexSubset) -> Vec<u8> {
        s.0
    }
}

impl fmt::Debug for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// The partial order on equal-size subsets: `A ⪯ B` iff the sorted
/// elements satisfy `a_k ≤ b_k` for every `k`.
pub fn subset_leq(a: &IndexSubset, b: &IndexSubset) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(format!("subsets of different sizes: {a:?} vs {b:?}")));
    }
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| x <= y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u8]) -> IndexSubset {
        IndexSubset::new(v.to_vec()).unwrap()
    }

    /// Prefix-count form of the order, used as the oracle.
    fn leq_by_prefix_counts(a: &IndexSubset, b: &IndexSubset, n: u8) -> bool {
        (1..=n).all(|m| {
            let ca = a.elements().iter().filter(|&&x| x <= m).count();
            let cb = b.elements().iter().filter(|&&x| x <= m).count();
            ca >= cb
        })
    }

    #[test]
    fn examples() {
        assert!(!subset_leq(&s(&[1, 3]), &s(&[1, 2])).unwrap());
        assert!(subset_leq(&s(&[2, 5]), &s(&[2, 5])).unwrap());
        assert!(subset_leq(&s(&[1, 2, 3]), &s(&[4, 5, 6])).unwrap());
        assert!(subset_leq(&s(&[1]), &s(&[1, 2])).is_err());
    }

    #[test]
    fn rejects_duplicates_and_zero() {
        assert!(IndexSubset::new(vec![2, 2]).is_err());
        assert!(IndexSubset::new(vec![0, 1]).is_err());
        assert_eq!(s(&[3, 1, 2]).elements(), &[1, 2, 3]);
    }

    #[test]
    fn partial_order_on_subsets_of_six() {
        let n = 6;
        for d in 1..=n as usize {
            let all = IndexSubset::all_of_size(n, d);
            let leq = |a: &IndexSubset, b: &IndexSubset| subset_leq(a, b).unwrap();
            for a in &all {
                assert!(leq(a, a));
                for b in &all {
                    assert_eq!(leq(a, b), leq_by_prefix_counts(a, b, n));
                    if leq(a, b) && leq(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if leq(a, b) && leq(b, c) {
                            assert!(leq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumerates_binomially_many() {
        assert_eq!(IndexSubset::all_of_size(6, 3).len(), 20);
        assert_eq!(IndexSubset::all_of_size(4, 0).len(), 1);
        assert_eq!(IndexSubset::all_of_size(4, 2)[0], s(&[1, 2]));
    }
}
