use super::group::{ElemId, WeylGroup};
use crate::error::{Error, Result};

/// Bitmask of simple-root indices (bit `i` for `α_i`).
pub type SimpleMask = u64;

pub fn mask_of(j: &[usize]) -> SimpleMask {
    j.iter().fold(0, |m, &i| m | 1 << i)
}

pub fn indices_of(mask: SimpleMask) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Simple roots in the support of root `r`.
pub fn support_mask(g: &WeylGroup, r: usize) -> SimpleMask {
    g.system().coefficients(r).iter().enumerate().filter(|(_, c)| **c != 0).fold(0, |m, (i, _)| m | 1 << i)
}

/// `w = w^J · w_J` with `w^J` the minimal representative of `w W_J`.
pub fn parabolic_decompose(g: &WeylGroup, w: ElemId, j: SimpleMask) -> (ElemId, ElemId) {
    let min = min_rep(g, w, j);
    (min, g.mul(g.inverse(min), w))
}

/// Minimal-length element of the coset `w W_J`.
pub fn min_rep(g: &WeylGroup, mut w: ElemId, j: SimpleMask) -> ElemId {
    'outer: loop {
        for s in indices_of(j) {
            if g.is_right_descent(w, s) {
                w = g.mul_simple(w, s);
                continue 'outer;
            }
        }
        return w;
    }
}

pub fn in_parabolic(g: &WeylGroup, w: ElemId, j: SimpleMask) -> bool {
    min_rep(g, w, j) == g.identity()
}

/// Finds `u` and `J` with `u(Φ_J) = phi_sub`, `u` minimal in `u W_J`.
/// Elements are scanned by increasing length; the first match wins.
pub fn standardize_subsystem(g: &WeylGroup, phi_sub: &[usize]) -> Result<(ElemId, SimpleMask)> {
    let sys = g.system();
    let mut member = vec![false; sys.num_roots()];
    for &r in phi_sub {
        member[r] = true;
    }
    let supports: Vec<SimpleMask> = (0..sys.num_roots()).map(|r| support_mask(g, r)).collect();
    for u in 0..g.order() {
        let e = g.element(u);
        let j = (0..sys.rank()).filter(|&s| member[e.apply(s)]).fold(0, |m, s| m | 1 << s);
        if (0..sys.num_roots()).all(|r| member[e.apply(r)] == (supports[r] & !j == 0)) {
            return Ok((min_rep(g, u, j), j));
        }
    }
    Err(Error::Internal("root subset is not conjugate to a standard parabolic subsystem".into()))
}

/// `w_i = u^J · w_{J,i} · (v^J)^{-1}` with `u^J, v^J ∈ W^J` and `w_{J,i} ∈ W_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    pub j: SimpleMask,
    pub u_j: ElemId,
    pub v_j: ElemId,
    pub w_j1: ElemId,
    pub w_j2: ElemId,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Perm;

    fn all_masks(rank: usize) -> impl Iterator<Item = SimpleMask> {
        0..1u64 << rank
    }

    #[test]
    fn decomposition_is_length_additive_on_s4() {
        let g = WeylGroup::symmetric(4).unwrap();
        for j in all_masks(3) {
            for w in 0..g.order() {
                let (a, b) = parabolic_decompose(&g, w, j);
                assert_eq!(g.mul(a, b), w);
                assert_eq!(g.length(w), g.length(a) + g.length(b));
                assert!(in_parabolic(&g, b, j));
                for s in indices_of(j) {
                    assert!(!g.is_right_descent(a, s));
                }
            }
        }
    }

    #[test]
    fn trivial_decompositions() {
        let g = WeylGroup::symmetric(4).unwrap();
        let w = g.id_of_perm(&"4231".parse().unwrap()).unwrap();
        assert_eq!(parabolic_decompose(&g, w, 0), (w, 0));
        assert_eq!(parabolic_decompose(&g, w, 0b111), (0, w));
        let (a, b) = parabolic_decompose(&g, w, 0b001);
        // the coset {4231, 2431}; the minimum is 2431
        assert_eq!(g.perm(a).unwrap(), &"2431".parse::<Perm>().unwrap());
        assert_eq!(g.perm(b).unwrap(), &"2134".parse::<Perm>().unwrap());
    }

    #[test]
    fn standardize_examples() {
        let g = WeylGroup::symmetric(4).unwrap();
        let sys = g.system();
        assert_eq!(standardize_subsystem(&g, &[]).unwrap(), (0, 0));
        let all: Vec<usize> = (0..sys.num_roots()).collect();
        assert_eq!(standardize_subsystem(&g, &all).unwrap(), (0, 0b111));

        let roots = [(1, 4), (4, 1), (2, 3), (3, 2)].map(|(i, j)| sys.type_a_root(i, j).unwrap());
        let (u, j) = standardize_subsystem(&g, &roots).unwrap();
        assert_eq!(j.count_ones(), 2);
        let mut image: Vec<usize> =
            (0..sys.num_roots()).filter(|&r| support_mask(&g, r) & !j == 0).map(|r| g.element(u).apply(r)).collect();
        image.sort();
        let mut expected = roots.to_vec();
        expected.sort();
        assert_eq!(image, expected);
        assert_eq!(min_rep(&g, u, j), u);
    }

    #[test]
    fn standardize_fails_on_non_subsystem() {
        let g = WeylGroup::symmetric(3).unwrap();
        assert!(standardize_subsystem(&g, &[0]).is_err());
    }

    /// For `u, v ∈ W^J`, `x ∈ W_J` and a reflection `s ∈ W_J`:
    /// `s x > x` iff `u s x v⁻¹ > u x v⁻¹`.
    #[test]
    fn pieces_to_whole_on_s4() {
        let g = WeylGroup::symmetric(4).unwrap();
        for j in all_masks(3) {
            let reps: Vec<ElemId> = (0..g.order()).filter(|&x| min_rep(&g, x, j) == x).collect();
            let sub: Vec<ElemId> = (0..g.order()).filter(|&x| in_parabolic(&g, x, j)).collect();
            let refl: Vec<ElemId> = g.reflections().into_iter().filter(|&t| in_parabolic(&g, t, j)).collect();
            for &u in &reps {
                for &v in &reps {
                    let vi = g.inverse(v);
                    for &x in &sub {
                        for &s in &refl {
                            let sx = g.mul(s, x);
                            let lhs = g.length(sx) > g.length(x);
                            let big = g.mul(g.mul(u, sx), vi);
                            let small = g.mul(g.mul(u, x), vi);
                            assert_eq!(lhs, g.bruhat_leq(small, big) && big != small);
                        }
                    }
                }
            }
        }
    }
}
