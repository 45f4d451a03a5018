use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::variable::VariableId;
use crate::error::{Error, Result};
use crate::root_core::rational::{format_rational, serde_rational, Rational};

/// A monomial as `(variable, exponent)` pairs sorted by variable, exponents
/// positive. Ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VariableId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: VariableId) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (VariableId, u32)>) -> Self {
        let mut map: BTreeMap<VariableId, u32> = BTreeMap::new();
        for (v, e) in factors {
            *map.entry(v).or_default() += e;
        }
        Self(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn factors(&self) -> &[(VariableId, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &VariableId) -> u32 {
        self.0.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Self(out)
    }

    /// The monomial with `v` removed, and the removed exponent.
    pub fn split_off(&self, v: &VariableId) -> (Self, u32) {
        let e = self.exponent(v);
        (Self(self.0.iter().filter(|(w, _)| w != v).cloned().collect()), e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                match a.0.cmp(&b.0) {
                    // a positive exponent on an earlier variable ranks higher
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match a.1.cmp(&b.1) {
                        Ordering::Equal => {}
                        o => return o,
                    },
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Assignment of exact values to variables.
pub type RationalPoint = BTreeMap<VariableId, Rational>;

/// A polynomial over ℚ with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: VariableId) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: &VariableId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<VariableId> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| v.clone())).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact value at a point that assigns every variable of `self`.
    pub fn evaluate(&self, pt: &RationalPoint) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                let x = pt.get(v).ok_or_else(|| Error::IncompletePoint(v.to_string()))?;
                t *= num_traits::pow(x.clone(), *e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes the assigned variables and keeps the others symbolic.
    pub fn substitute(&self, pt: &RationalPoint) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in &m.0 {
                match pt.get(v) {
                    Some(x) => coeff *= num_traits::pow(x.clone(), *e as usize),
                    None => rest.push((v.clone(), *e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// `[p_0, …, p_k]` with `self = Σ_s p_s λ^s` and every `p_s` free of `λ`.
    pub fn lambda_coefficients(&self) -> Vec<SparsePolynomial> {
        let mut out = vec![Self::zero(); self.degree_in(&VariableId::Lambda) as usize + 1];
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(&VariableId::Lambda);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Divides by the gcd of the numerators (over the lcm of denominators)
    /// and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        let Some((_, lead)) = self.terms().next() else { return Self::zero() };
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut factor = Rational::new(den, num);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for SparsePolynomial {
            type Output = SparsePolynomial;
            fn $f(self, rhs: SparsePolynomial) -> SparsePolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        -&self
    }
}

impl From<VariableId> for SparsePolynomial {
    fn from(v: VariableId) -> Self {
        Self::var(v)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                f.write_str(&format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One entry of the JSON term-list form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    #[serde(with = "serde_rational")]
    pub coefficient: Rational,
    pub monomial: Vec<(VariableId, u32)>,
}

impl SparsePolynomial {
    pub fn to_term_list(&self) -> Vec<TermRecord> {
        self.terms().map(|(m, c)| TermRecord { coefficient: c.clone(), monomial: m.0.clone() }).collect()
    }

    /// Inverse of [`SparsePolynomial::to_term_list`]; repeated variables and
    /// monomials are merged, zero exponents dropped.
    pub fn from_term_list(terms: &[TermRecord]) -> Result<Self> {
        let mut p = Self::zero();
        for t in terms {
            if t.monomial.iter().map(|(_, e)| *e as u64).sum::<u64>() > super::parse::MAX_DEGREE as u64 {
                return Err(Error::Parse("monomial degree too large".into()));
            }
            p.add_term(Monomial::from_factors(t.monomial.iter().cloned()), t.coefficient.clone());
        }
        Ok(p)
    }
}

impl Serialize for SparsePolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_term_list().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRecord>::deserialize(d)?;
        Self::from_term_list(&terms).map_err(serde::de::Error::custom)
    }
}
