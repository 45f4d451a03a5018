use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Variables of the flag-variety equations. The derived order is the term
/// order's variable order: Plücker coordinates, then `u_{kl}`, then `t_m`,
/// then `λ`, each lexicographic within its kind.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum VariableId {
    /// `x_{i_1 … i_d}` with strictly increasing indices.
    Plucker(Vec<u8>),
    /// `u_{kl}`, `k < l`.
    StrictUpper(u8, u8),
    /// `t_m = u_{mm}`.
    Diagonal(u8),
    Lambda,
}

impl VariableId {
    pub fn plucker(indices: &[u8]) -> Result<Self> {
        if indices.is_empty() || indices[0] == 0 || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "Plücker index {indices:?} must be strictly increasing and 1-based"
            )));
        }
        Ok(Self::Plucker(indices.to_vec()))
    }

    pub fn upper(k: u8, l: u8) -> Result<Self> {
        if k == 0 || k >= l {
            return Err(Error::InvalidArgument(format!("u_{{{k},{l}}} needs 1 <= k < l")));
        }
        Ok(Self::StrictUpper(k, l))
    }

    pub fn diagonal(m: u8) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("t_0 is not a variable".into()));
        }
        Ok(Self::Diagonal(m))
    }

    /// Entry `(r, c)` of the upper-triangular matrix `u` (`t_r` on the diagonal).
    pub fn matrix_entry(r: u8, c: u8) -> Option<Self> {
        match r.cmp(&c) {
            std::cmp::Ordering::Less => Some(Self::StrictUpper(r, c)),
            std::cmp::Ordering::Equal => Some(Self::Diagonal(r)),
            std::cmp::Ordering::Greater => None,
        }
    }
}

fn index_list(ix: &[u8]) -> String {
    if ix.iter().all(|&i| i < 10) {
        ix.iter().map(|i| i.to_string()).collect()
    } else {
        format!("{{{}}}", ix.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableId::Plucker(ix) => write!(f, "x{}", index_list(ix)),
            VariableId::StrictUpper(k, l) => write!(f, "u{}", index_list(&[*k, *l])),
            VariableId::Diagonal(m) => write!(f, "t{m}"),
            VariableId::Lambda => f.write_str("l"),
        }
    }
}

impl fmt::Debug for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_indices(s: &str) -> Result<Vec<u8>> {
    let bad = || Error::Parse(format!("bad variable index {s:?}"));
    if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        inner
            .split(',')
            .map(|p| {
                let p = p.trim();
                if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                p.parse::<u8>().map_err(|_| bad())
            })
            .collect()
    } else if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
        Ok(s.bytes().map(|b| b - b'0').collect())
    } else {
        Err(bad())
    }
}

impl FromStr for VariableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let perr = |e: Error| Error::Parse(e.to_string());
        match s.as_bytes().first() {
            Some(b'l') if s.len() == 1 => Ok(VariableId::Lambda),
            Some(b'x') => VariableId::plucker(&parse_indices(&s[1..])?).map_err(perr),
            Some(b'u') => match parse_indices(&s[1..])?.as_slice() {
                [k, l] => VariableId::upper(*k, *l).map_err(perr),
                _ => Err(Error::Parse(format!("{s:?} needs two indices"))),
            },
            Some(b't') => {
                let m = &s[1..];
                if m.is_empty() || !m.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad variable {s:?}")));
                }
                VariableId::diagonal(m.parse().map_err(|_| Error::Parse(format!("bad variable {s:?}")))?).map_err(perr)
            }
            _ => Err(Error::Parse(format!("unknown variable {s:?}"))),
        }
    }
}

impl TryFrom<String> for VariableId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<VariableId> for String {
    fn from(v: VariableId) -> String {
        v.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        let vars = [
            VariableId::plucker(&[1, 2]).unwrap(),
            VariableId::plucker(&[3, 10]).unwrap(),
            VariableId::upper(1, 3).unwrap(),
            VariableId::upper(2, 11).unwrap(),
            VariableId::diagonal(12).unwrap(),
            VariableId::Lambda,
        ];
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["x12", "x{3,10}", "u13", "u{2,11}", "t12", "l"]);
        for (v, s) in vars.iter().zip(&names) {
            assert_eq!(&s.parse::<VariableId>().unwrap(), v);
        }
    }

    #[test]
    fn order_by_kind() {
        let mut v: Vec<VariableId> =
            ["l", "t1", "u12", "x3", "x12", "u{1,10}"].iter().map(|s| s.parse().unwrap()).collect();
        v.sort();
        let names: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["x12", "x3", "u12", "u{1,10}", "t1", "l"]);
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "x", "x21", "x11", "u1", "u21", "u123", "t", "t0", "y1", "x{1,}", "l2", "x0"] {
            assert!(s.parse::<VariableId>().is_err(), "{s}");
        }
    }
}
