use num_traits::{One, Zero};
use std::collections::{HashMap, HashSet, VecDeque};

use super::linalg::{RationalMatrix, RationalVector};
use super::rational::{frac, rat, Rational};
use crate::error::{Error, Result};

/// Closure bound for [`RootSystem::from_cartan`]; every finite type of rank
/// at most 8 stays well below it.
pub const MAX_ROOTS: usize = 500;

/// A finite reduced root system with a chosen simple basis.
///
/// Roots are indexed so that `0..rank` are the simple roots, `0..N` are the
/// positive roots (ordered by height) and `N + i` is the negative of root `i`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ambient_dim: usize,
    rank: usize,
    roots: Vec<RationalVector>,
    coefficients: Vec<Vec<i64>>,
    form: RationalMatrix,
    index: HashMap<RationalVector, usize>,
    /// `reflections[i][k]` is the index of `s_{α_i}(α_k)` for positive `i`.
    reflections: Vec<Vec<u16>>,
    type_a: Option<usize>,
    cartan: Option<Vec<Vec<i64>>>,
}

impl RootSystem {
    /// The `A_{n-1}` system `{e_i - e_j}` in `ℚ^n` with the dot product.
    pub fn type_a(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("type A needs n >= 2, got {n}")));
        }
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut c = vec![0i64; n - 1];
                for k in c.iter_mut().take(j).skip(i) {
                    *k = 1;
                }
                positive.push(c);
            }
        }
        let ambient = |c: &[i64]| {
            let mut v = vec![0i64; n];
            for (k, &x) in c.iter().enumerate() {
                v[k] += x;
                v[k + 1] -= x;
            }
            RationalVector::from_ints(&v)
        };
        Self::assemble(n, n - 1, positive, ambient, RationalMatrix::identity(n), Some(n), None)
    }

    /// Closes the simple roots of a Cartan matrix under the simple
    /// reflections. Uses the convention `a_ij = 2(α_i|α_j)/(α_i|α_i)`, so
    /// `s_i(α_j) = α_j - a_ij α_i`. The ambient space is `ℚ^rank` with the
    /// simple roots as the standard basis.
    pub fn from_cartan(cartan: &[Vec<i64>]) -> Result<Self> {
        let r = cartan.len();
        if r == 0 || cartan.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidArgument("Cartan matrix must be square and nonempty".into()));
        }
        for i in 0..r {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidArgument(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..r {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::InvalidArgument(format!(
                        "entries ({i},{j}) and ({j},{i}) are not a valid Cartan pair"
                    )));
                }
            }
        }
        let form = symmetrize(cartan)?;

        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(x) = queue.pop_front() {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| cartan[i][j] * x[j]).sum();
                let mut y = x.clone();
                y[i] -= pairing;
                if seen.insert(y.clone()) {
                    if seen.len() > MAX_ROOTS {
                        return Err(Error::NotFiniteType { limit: MAX_ROOTS });
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = Vec::new();
        for c in &seen {
            let pos = c.iter().all(|&x| x >= 0);
            let neg = c.iter().all(|&x| x <= 0);
            if !(pos || neg) {
                return Err(Error::Internal(format!("root {c:?} has mixed-sign coefficients")));
            }
            if pos {
                positive.push(c.clone());
            }
        }
        let ambient = |c: &[i64]| RationalVector::from_ints(c);
        Self::assemble(r, r, positive, ambient, form, None, Some(cartan.to_vec()))
    }

    fn assemble(
        ambient_dim: usize,
        rank: usize,
        mut positive: Vec<Vec<i64>>,
        ambient: impl Fn(&[i64]) -> RationalVector,
        form: RationalMatrix,
        type_a: Option<usize>,
        cartan: Option<Vec<Vec<i64>>>,
    ) -> Result<Self> {
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            // simple roots (height 1) come out in index order: e_0 > e_1 lexicographically
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positive.len();
        let mut coefficients = positive.clone();
        coefficients.extend(positive.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
        let roots: Vec<RationalVector> = coefficients.iter().map(|c| ambient(c)).collect();
        let index: HashMap<RationalVector, usize> = roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        if index.len() != roots.len() {
            return Err(Error::Internal("duplicate roots".into()));
        }
        let mut sys =
            Self { ambient_dim, rank, roots, coefficients, form, index, reflections: Vec::new(), type_a, cartan };
        let mut reflections = Vec::with_capacity(n_pos);
        for i in 0..n_pos {
            let alpha = sys.roots[i].clone();
            let mut perm = Vec::with_capacity(sys.roots.len());
            for k in 0..sys.roots.len() {
                let image = sys.reflect(&alpha, &sys.roots[k])?;
                let j = sys
                    .index_of(&image)
                    .ok_or_else(|| Error::Internal(format!("reflection of root {k} by root {i} left the system")))?;
                perm.push(j as u16);
            }
            reflections.push(perm);
        }
        sys.reflections = reflections;
        Ok(sys)
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn roots(&self) -> &[RationalVector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &RationalVector {
        &self.roots[i]
    }

    pub fn simple_roots(&self) -> &[RationalVector] {
        &self.roots[..self.rank]
    }

    pub fn positive_roots(&self) -> &[RationalVector] {
        &self.roots[..self.num_positive()]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn negate_index(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    /// Index of the positive root among `{α, -α}`.
    pub fn positive_index(&self, i: usize) -> usize {
        i % self.num_positive()
    }

    pub fn index_of(&self, v: &RationalVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Coordinates of root `i` in the simple basis.
    pub fn coefficients(&self, i: usize) -> &[i64] {
        &self.coefficients[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coefficients[i].iter().sum()
    }

    /// `Σ c_k α_k` in the ambient space.
    pub fn from_simple_coordinates(&self, c: &RationalVector) -> RationalVector {
        let mut v = RationalVector::zeros(self.ambient_dim);
        for (k, ck) in c.coords().iter().enumerate() {
            if !ck.is_zero() {
                v = &v + &self.roots[k].scale(ck);
            }
        }
        v
    }

    pub fn form(&self) -> &RationalMatrix {
        &self.form
    }

    pub fn inner(&self, x: &RationalVector, y: &RationalVector) -> Rational {
        self.form.bilinear(x, y)
    }

    /// `s_α(x) = x - 2 (x|α)/(α|α) α`.
    pub fn reflect(&self, alpha: &RationalVector, x: &RationalVector) -> Result<RationalVector> {
        let aa = self.inner(alpha, alpha);
        if aa.is_zero() {
            return Err(Error::InvalidRoot(format!("{alpha:?} has (α|α) = 0")));
        }
        let c = rat(2) * self.inner(x, alpha) / aa;
        Ok(x - &alpha.scale(&c))
    }

    /// Action of `s_α` (α positive, by index) on root indices.
    pub fn reflection_perm(&self, positive_root: usize) -> &[u16] {
        &self.reflections[positive_root]
    }

    /// `Some(n)` for systems built by [`RootSystem::type_a`].
    pub fn type_a_degree(&self) -> Option<usize> {
        self.type_a
    }

    pub fn cartan_matrix(&self) -> Option<&[Vec<i64>]> {
        self.cartan.as_deref()
    }

    /// Root `e_i - e_j` of a type A system (1-based, `i != j`).
    pub fn type_a_root(&self, i: usize, j: usize) -> Option<usize> {
        let n = self.type_a?;
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return None;
        }
        let mut v = vec![0i64; n];
        v[i - 1] = 1;
        v[j - 1] = -1;
        self.index_of(&RationalVector::from_ints(&v))
    }
}

/// Form `B_ij = d_i a_ij` with `d_i a_ij = d_j a_ji`, normalized so that the
/// first node of each connected component has `d = 1`.
fn symmetrize(cartan: &[Vec<i64>]) -> Result<RationalMatrix> {
    let r = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("visited");
            for j in 0..r {
                if j == i || cartan[i][j] == 0 {
                    continue;
                }
                let dj = di.clone() * frac(cartan[i][j], cartan[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(existing) if *existing != dj => {
                        return Err(Error::InvalidArgument("Cartan matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut b = RationalMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            let di = d[i].as_ref().expect("all nodes visited");
            b.set(i, j, di * rat(cartan[i][j]));
        }
    }
    Ok(b)
}

/// Cartan matrix of a named finite type (`A3`, `B2`, `G2`, `F4`, ...).
pub fn named_cartan(name: &str) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::InvalidArgument(format!("unknown root system type {name:?}"));
    let mut chars = name.trim().chars();
    let kind = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    let r: usize = chars.as_str().parse().map_err(|_| bad())?;
    let chain = |r: usize| {
        let mut m = vec![vec![0i64; r]; r];
        for i in 0..r {
            m[i][i] = 2;
            if i + 1 < r {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    let m = match (kind, r) {
        ('A', r) if r >= 1 => chain(r),
        ('B', r) if r >= 2 => {
            let mut m = chain(r);
            m[r - 2][r - 1] = -2;
            m
        }
        ('C', r) if r >= 2 => {
            let mut m = chain(r);
            m[r - 1][r - 2] = -2;
            m
        }
        ('D', r) if r >= 4 => {
            let mut m = chain(r);
            m[r - 2][r - 1] = 0;
            m[r - 1][r - 2] = 0;
            m[r - 3][r - 1] = -1;
            m[r - 1][r - 3] = -1;
            m
        }
        ('E', r @ 6..=8) => {
            // Bourbaki numbering: 1-3-4-5-6(-7-8) with 2 attached to 4.
            let mut m = vec![vec![0i64; r]; r];
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
            for k in 4..r - 1 {
                edges.push((k, k + 1));
            }
            for i in 0..r {
                m[i][i] = 2;
            }
            for (i, j) in edges {
                m[i][j] = -1;
                m[j][i] = -1;
            }
            m
        }
        ('F', 4) => {
            let mut m = chain(4);
            m[1][2] = -2;
            m
        }
        ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
        _ => return Err(bad()),
    };
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent closure oracle: orbit of the simple roots under the
    /// simple reflections, computed with the bilinear form only.
    fn closure_count(cartan: &[Vec<i64>]) -> usize {
        let r = cartan.len();
        let form = symmetrize(cartan).unwrap();
        let simple: Vec<RationalVector> = (0..r).map(|i| RationalVector::unit(r, i)).collect();
        let reflect = |a: &RationalVector, x: &RationalVector| {
            let c = rat(2) * form.bilinear(x, a) / form.bilinear(a, a);
            x - &a.scale(&c)
        };
        let mut seen: HashSet<RationalVector> = simple.iter().cloned().collect();
        let mut frontier: Vec<RationalVector> = simple.clone();
        while let Some(x) = frontier.pop() {
            for a in &simple {
                let y = reflect(a, &x);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn type_a_counts() {
        let a2 = RootSystem::type_a(3).unwrap();
        assert_eq!(a2.num_roots(), 6);
        assert_eq!(a2.simple_roots()[0], RationalVector::from_ints(&[1, -1, 0]));
        assert_eq!(a2.simple_roots()[1], RationalVector::from_ints(&[0, 1, -1]));
        let a1 = RootSystem::type_a(2).unwrap();
        assert_eq!(a1.roots(), &[RationalVector::from_ints(&[1, -1]), RationalVector::from_ints(&[-1, 1])]);
        let a3 = RootSystem::type_a(4).unwrap();
        assert_eq!((a3.num_roots(), a3.num_positive()), (12, 6));
        assert!(RootSystem::type_a(1).is_err());
    }

    #[test]
    fn cartan_closure_matches_oracle() {
        for (name, expected) in [("B2", 8), ("G2", 12), ("A2", 6), ("B3", 18), ("C3", 18), ("D4", 24), ("F4", 48)] {
            let c = named_cartan(name).unwrap();
            assert_eq!(closure_count(&c), expected, "{name} oracle");
            assert_eq!(RootSystem::from_cartan(&c).unwrap().num_roots(), expected, "{name}");
        }
    }

    #[test]
    fn a2_from_cartan_matches_type_a() {
        let a = RootSystem::type_a(3).unwrap();
        let c = RootSystem::from_cartan(&named_cartan("A2").unwrap()).unwrap();
        assert_eq!(a.num_roots(), c.num_roots());
        let lengths = |s: &RootSystem| {
            let mut v: Vec<Rational> = s.roots().iter().map(|r| s.inner(r, r)).collect();
            v.sort();
            v
        };
        assert_eq!(lengths(&a), lengths(&c));
        for n in 2..=6 {
            let c = RootSystem::from_cartan(&named_cartan(&format!("A{}", n - 1)).unwrap()).unwrap();
            assert_eq!(c.num_roots(), n * (n - 1));
        }
    }

    #[test]
    fn affine_matrix_is_rejected() {
        // affine A1: [[2,-2],[-2,2]]
        let err = RootSystem::from_cartan(&[vec![2, -2], vec![-2, 2]]).unwrap_err();
        assert_eq!(err, Error::NotFiniteType { limit: MAX_ROOTS });
        assert!(RootSystem::from_cartan(&[vec![2, 1], vec![1, 2]]).is_err());
        assert!(RootSystem::from_cartan(&[vec![2, -1], vec![0, 2]]).is_err());
    }

    #[test]
    fn reflect_examples() {
        let a2 = RootSystem::type_a(3).unwrap();
        let a = RationalVector::from_ints(&[1, -1, 0]);
        assert_eq!(a2.reflect(&a, &a).unwrap(), RationalVector::from_ints(&[-1, 1, 0]));
        let b = RationalVector::from_ints(&[0, 1, -1]);
        assert_eq!(a2.reflect(&a, &b).unwrap(), RationalVector::from_ints(&[1, 0, -1]));
        let perp = RationalVector::from_ints(&[1, 1, 5]);
        assert_eq!(a2.reflect(&a, &perp).unwrap(), perp);
        assert!(matches!(a2.reflect(&RationalVector::zeros(3), &a), Err(Error::InvalidRoot(_))));
    }

    #[test]
    fn every_root_is_sign_coherent_and_reflections_permute() {
        for name in ["B2", "G2", "B3", "C3", "F4", "A4"] {
            let s = RootSystem::from_cartan(&named_cartan(name).unwrap()).unwrap();
            for i in 0..s.num_roots() {
                let c = s.coefficients(i);
                assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0));
                assert_eq!(s.root(s.negate_index(i)), &-s.root(i));
                assert!(!s.inner(s.root(i), s.root(i)).is_zero());
            }
            for p in 0..s.num_positive() {
                let perm = s.reflection_perm(p);
                let mut seen = vec![false; s.num_roots()];
                for &k in perm {
                    seen[k as usize] = true;
                }
                assert!(seen.into_iter().all(|b| b));
                assert_eq!(perm[p] as usize, s.negate_index(p));
            }
        }
    }

    #[test]
    fn invariants_of_form_and_involution() {
        for s in [
            RootSystem::type_a(4).unwrap(),
            RootSystem::from_cartan(&named_cartan("B3").unwrap()).unwrap(),
            RootSystem::from_cartan(&named_cartan("G2").unwrap()).unwrap(),
        ] {
            let d = s.ambient_dim();
            let samples: Vec<RationalVector> = (0..4)
                .map(|k| RationalVector::new((0..d).map(|i| frac((i as i64 * 3 + k) % 7 - 3, 1 + k)).collect()))
                .collect();
            for a in s.roots() {
                for x in &samples {
                    let sx = s.reflect(a, x).unwrap();
                    assert_eq!(&s.reflect(a, &sx).unwrap(), x);
                    for y in &samples {
                        let sy = s.reflect(a, y).unwrap();
                        assert_eq!(s.inner(&sx, &sy), s.inner(x, y));
                    }
                }
            }
        }
    }
}
