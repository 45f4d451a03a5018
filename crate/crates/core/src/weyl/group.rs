use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::root_core::RootSystem;

/// Enumeration bound for [`WeylGroup::new`].
pub const MAX_GROUP_ORDER: usize = 100_000;

/// Groups at most this large get a precomputed Bruhat table.
pub const BRUHAT_TABLE_LIMIT: usize = 12;

/// A Weyl group element, stored as the permutation it induces on the root
/// list of its [`RootSystem`]. Composition is table lookup.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeylElement(Box<[u16]>);

impl WeylElement {
    pub fn from_root_images(images: Vec<u16>) -> Self {
        Self(images.into_boxed_slice())
    }

    pub fn root_images(&self) -> &[u16] {
        &self.0
    }

    /// Image of root `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&k| self.0[k as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &k) in self.0.iter().enumerate() {
            inv[k as usize] = i as u16;
        }
        Self(inv.into_boxed_slice())
    }
}

/// Index of an element inside a [`WeylGroup`].
pub type ElemId = usize;

/// The full Weyl group of a root system, enumerated once.
///
/// Elements are listed in breadth-first order from the identity, so ids are
/// sorted by length and id `0` is the identity.
#[derive(Debug)]
pub struct WeylGroup {
    system: RootSystem,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, ElemId>,
    lengths: Vec<u32>,
    /// `right_simple[s][e]` is the id of `e · s_s`.
    right_simple: Vec<Vec<u32>>,
    /// `left_reflection[r][e]` is the id of `s_{α_r} · e`, `r` a positive root.
    left_reflection: Vec<Vec<u32>>,
    perms: Option<Vec<Perm>>,
    perm_index: Option<HashMap<Perm, ElemId>>,
    bruhat_table: Option<Vec<bool>>,
    reflection_lengths: OnceLock<Vec<u32>>,
}

impl WeylGroup {
    pub fn new(system: RootSystem) -> Result<Self> {
        let nroots = system.num_roots();
        let identity = WeylElement((0..nroots as u16).collect());
        let simple: Vec<WeylElement> =
            (0..system.rank()).map(|i| WeylElement::from_root_images(system.reflection_perm(i).to_vec())).collect();

        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for s in &simple {
                let x = elements[e].compose(s);
                if !index.contains_key(&x) {
                    if elements.len() >= MAX_GROUP_ORDER {
                        return Err(Error::GroupTooLarge { limit: MAX_GROUP_ORDER });
                    }
                    index.insert(x.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(x);
                }
            }
        }
        let npos = system.num_positive();
        let lengths: Vec<u32> =
            elements.iter().map(|w| (0..npos).filter(|&i| !system.is_positive(w.apply(i))).count() as u32).collect();
        let lookup = |x: &WeylElement| index[x] as u32;
        let right_simple = simple.iter().map(|s| elements.iter().map(|e| lookup(&e.compose(s))).collect()).collect();
        let left_reflection = (0..npos)
            .map(|r| {
                let t = WeylElement::from_root_images(system.reflection_perm(r).to_vec());
                elements.iter().map(|e| lookup(&t.compose(e))).collect()
            })
            .collect();

        let mut group = Self {
            system,
            elements,
            index,
            lengths,
            right_simple,
            left_reflection,
            perms: None,
            perm_index: None,
            bruhat_table: None,
            reflection_lengths: OnceLock::new(),
        };
        if let Some(n) = group.system.type_a_degree() {
            let perms: Vec<Perm> = group.elements.iter().map(|w| group.perm_of_element(n, w)).collect();
            group.perm_index = Some(perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect());
            group.perms = Some(perms);
        } else if group.order() <= BRUHAT_TABLE_LIMIT {
            let m = group.order();
            let mut table = vec![false; m * m];
            for b in 0..m {
                let lower = group.subword_closure(b);
                for a in 0..m {
                    table[a * m + b] = lower[a];
                }
            }
            group.bruhat_table = Some(table);
        }
        Ok(group)
    }

    /// `S_n` acting on the `A_{n-1}` system.
    pub fn symmetric(n: usize) -> Result<Self> {
        Self::new(RootSystem::type_a(n)?)
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> ElemId {
        self.order() - 1
    }

    pub fn element(&self, id: ElemId) -> &WeylElement {
        &self.elements[id]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn id_of(&self, w: &WeylElement) -> Option<ElemId> {
        self.index.get(w).copied()
    }

    pub fn length(&self, id: ElemId) -> usize {
        self.lengths[id] as usize
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inverse(&self, a: ElemId) -> ElemId {
        self.index[&self.elements[a].inverse()]
    }

    /// `e · s_i`.
    pub fn mul_simple(&self, e: ElemId, i: usize) -> ElemId {
        self.right_simple[i][e] as usize
    }

    /// `s_α · e` for the reflection of root `root` (either sign).
    pub fn reflect_left(&self, root: usize, e: ElemId) -> ElemId {
        self.left_reflection[self.system.positive_index(root)][e] as usize
    }

    pub fn simple_reflection(&self, i: usize) -> ElemId {
        self.mul_simple(0, i)
    }

    /// `s_α` for root index `root` (either sign).
    pub fn reflection(&self, root: usize) -> ElemId {
        self.reflect_left(root, 0)
    }

    /// One reflection per positive root.
    pub fn reflections(&self) -> Vec<ElemId> {
        (0..self.system.num_positive()).map(|r| self.reflection(r)).collect()
    }

    /// Whether `e · s_i < e`, i.e. `e(α_i) < 0`.
    pub fn is_right_descent(&self, e: ElemId, i: usize) -> bool {
        !self.system.is_positive(self.elements[e].apply(i))
    }

    /// A reduced word `[i_1, …, i_k]` with `e = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self, mut e: ElemId) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(e));
        while e != 0 {
            let i = (0..self.system.rank())
                .find(|&i| self.is_right_descent(e, i))
                .expect("non-identity element has a right descent");
            word.push(i);
            e = self.mul_simple(e, i);
        }
        word.reverse();
        word
    }

    pub fn from_word(&self, word: &[usize]) -> ElemId {
        word.iter().fold(0, |e, &i| self.mul_simple(e, i))
    }

    /// Bruhat order. Type A uses box counts on one-line notation; other
    /// types use a table for tiny groups and the subword property otherwise.
    pub fn bruhat_leq(&self, a: ElemId, b: ElemId) -> bool {
        if self.lengths[a] > self.lengths[b] {
            return false;
        }
        if let Some(perms) = &self.perms {
            return perms[a].bruhat_leq(&perms[b]);
        }
        if let Some(table) = &self.bruhat_table {
            return table[a * self.order() + b];
        }
        self.subword_closure(b)[a]
    }

    /// Membership mask of the lower interval `[e, b]`.
    pub fn lower_interval(&self, b: ElemId) -> Vec<bool> {
        if let Some(perms) = &self.perms {
            return perms.iter().map(|p| p.bruhat_leq(&perms[b])).collect();
        }
        if let Some(table) = &self.bruhat_table {
            let m = self.order();
            return (0..m).map(|a| table[a * m + b]).collect();
        }
        self.subword_closure(b)
    }

    /// All products of subwords of one fixed reduced word of `b`.
    fn subword_closure(&self, b: ElemId) -> Vec<bool> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut list = vec![0usize];
        for i in self.reduced_word(b) {
            let len = list.len();
            for k in 0..len {
                let x = self.mul_simple(list[k], i);
                if !member[x] {
                    member[x] = true;
                    list.push(x);
                }
            }
        }
        member
    }

    /// Reflection length of every element: BFS distance from the identity in
    /// the Cayley graph on all reflections.
    pub fn reflection_lengths(&self) -> &[u32] {
        self.reflection_lengths.get_or_init(|| {
            let mut dist = vec![u32::MAX; self.order()];
            dist[0] = 0;
            let mut queue = VecDeque::from([0usize]);
            while let Some(e) = queue.pop_front() {
                for row in &self.left_reflection {
                    let x = row[e] as usize;
                    if dist[x] == u32::MAX {
                        dist[x] = dist[e] + 1;
                        queue.push_back(x);
                    }
                }
            }
            dist
        })
    }

    pub fn reflection_length(&self, e: ElemId) -> usize {
        self.reflection_lengths()[e] as usize
    }

    /// One-line notation of an element of a type A group.
    pub fn perm(&self, id: ElemId) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[id])
    }

    pub fn id_of_perm(&self, p: &Perm) -> Option<ElemId> {
        self.perm_index.as_ref()?.get(p).copied()
    }

    /// One-line notation in type A, otherwise a reduced word such as
    /// `"s1s2s1"` (`"e"` for the identity).
    pub fn label(&self, e: ElemId) -> String {
        if let Some(p) = self.perm(e) {
            return p.to_string();
        }
        let word = self.reduced_word(e);
        if word.is_empty() {
            return "e".into();
        }
        word.iter().map(|i| format!("s{}", i + 1)).collect()
    }

    pub fn is_type_a(&self) -> bool {
        self.perms.is_some()
    }

    fn perm_of_element(&self, n: usize, w: &WeylElement) -> Perm {
        // w(e_i - e_k) = e_{w(i)} - e_{w(k)}: read w(i) off the positive coordinate.
        let values = (1..=n)
            .map(|i| {
                let k = if i == 1 { 2 } else { 1 };
                let r = self.system.type_a_root(i, k).expect("type A root");
                let img = self.system.root(w.apply(r));
                let pos =
                    img.coords().iter().position(|c| *c > num_traits::Zero::zero()).expect("root has a positive entry");
                pos as u8 + 1
            })
            .collect();
        Perm::new(values).expect("a Weyl group element of type A permutes coordinates")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_core::named_cartan;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::from_cartan(&named_cartan(name).unwrap()).unwrap()).unwrap()
    }

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(WeylGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(group("B2").order(), 8);
        assert_eq!(group("G2").order(), 12);
        assert_eq!(group("B3").order(), 48);
        assert_eq!(group("F4").order(), 1152);
    }

    #[test]
    fn type_a_elements_match_permutations() {
        let g = WeylGroup::symmetric(4).unwrap();
        let mut all: Vec<Perm> = (0..g.order()).map(|e| g.perm(e).unwrap().clone()).collect();
        for e in 0..g.order() {
            assert_eq!(g.length(e), g.perm(e).unwrap().length());
        }
        all.sort();
        assert_eq!(all, Perm::all(4));
        let w0 = g.longest();
        assert_eq!(g.perm(w0).unwrap(), &p("4321"));
        assert_eq!(g.length(w0), 6);
        let w = g.id_of_perm(&p("4231")).unwrap();
        assert_eq!(g.length(w), 5);
        // s_i acts as the adjacent transposition (i, i+1) in one-line notation.
        assert_eq!(g.perm(g.simple_reflection(0)).unwrap(), &p("2134"));
        // composition agrees with permutation composition
        let a = g.id_of_perm(&p("2413")).unwrap();
        let b = g.id_of_perm(&p("3142")).unwrap();
        assert_eq!(g.perm(g.mul(a, b)).unwrap(), &p("2413").compose(&p("3142")));
    }

    #[test]
    fn reflections_are_transpositions() {
        let g = WeylGroup::symmetric(4).unwrap();
        let mut r: Vec<Perm> = g.reflections().into_iter().map(|e| g.perm(e).unwrap().clone()).collect();
        r.sort();
        let mut expected: Vec<Perm> =
            (1..=4).flat_map(|i| (i + 1..=4).map(move |j| Perm::transposition(4, i, j))).collect();
        expected.sort();
        assert_eq!(r, expected);
        assert_eq!(WeylGroup::symmetric(3).unwrap().reflections().len(), 3);
        assert_eq!(group("B2").reflections().len(), 4);
    }

    #[test]
    fn reduced_words_have_length_many_letters() {
        for g in [WeylGroup::symmetric(4).unwrap(), group("B3"), group("G2")] {
            for e in 0..g.order() {
                let w = g.reduced_word(e);
                assert_eq!(w.len(), g.length(e));
                assert_eq!(g.from_word(&w), e);
            }
        }
    }

    #[test]
    fn length_parity_flips_under_reflections() {
        for g in [WeylGroup::symmetric(4).unwrap(), group("B2"), group("G2"), group("B3")] {
            for e in 0..g.order() {
                for t in g.reflections() {
                    let x = g.mul(e, t);
                    assert_ne!(g.length(x) % 2, g.length(e) % 2);
                }
            }
        }
    }

    /// Oracle: transitive closure of `u < t u` with `ℓ(t u) > ℓ(u)`.
    fn bruhat_by_covering_closure(g: &WeylGroup) -> Vec<Vec<bool>> {
        let m = g.order();
        let mut above = vec![vec![false; m]; m];
        let mut ids: Vec<ElemId> = (0..m).collect();
        ids.sort_by_key(|&e| std::cmp::Reverse(g.length(e)));
        for &u in &ids {
            above[u][u] = true;
            for r in 0..g.system().num_positive() {
                let v = g.reflect_left(r, u);
                if g.length(v) > g.length(u) {
                    let row = above[v].clone();
                    for (k, b) in row.into_iter().enumerate() {
                        if b {
                            above[u][k] = true;
                        }
                    }
                }
            }
        }
        above
    }

    #[test]
    fn bruhat_matches_covering_closure() {
        let mut groups: Vec<WeylGroup> = (2..=4).map(|n| WeylGroup::symmetric(n).unwrap()).collect();
        groups.push(group("B2"));
        groups.push(group("G2"));
        groups.push(group("B3"));
        for g in &groups {
            let oracle = bruhat_by_covering_closure(g);
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(g.bruhat_leq(a, b), oracle[a][b], "order {} pair ({a},{b})", g.order());
                }
            }
        }
    }

    #[test]
    fn reflection_length_examples() {
        let g = WeylGroup::symmetric(4).unwrap();
        assert_eq!(g.reflection_length(0), 0);
        for t in g.reflections() {
            assert_eq!(g.reflection_length(t), 1);
        }
        assert_eq!(g.reflection_length(g.id_of_perm(&p("4321")).unwrap()), 2);
        assert_eq!(g.reflection_length(g.id_of_perm(&p("2341")).unwrap()), 3);
    }
}
