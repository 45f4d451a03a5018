//! Minimal generating root subsystems `Φ_w = Φ ∩ E_w`, `E_w = im(w - id)`.

use crate::root_core::linalg::{in_span, independent_subset};
use crate::root_core::{RationalVector, RootSystem};
use crate::weyl::{ElemId, Perm, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinGenSubsystem {
    /// Basis of `E_w` in ambient coordinates.
    pub e_w_basis: Vec<RationalVector>,
    /// Root indices of `Φ_w`, ascending.
    pub phi_w: Vec<usize>,
    pub d_w: usize,
}

fn simple_coords(sys: &RootSystem, r: usize) -> RationalVector {
    RationalVector::from_ints(sys.coefficients(r))
}

pub fn min_gen_subsystem(g: &WeylGroup, w: ElemId) -> MinGenSubsystem {
    let sys = g.system();
    let e = g.element(w);
    let images: Vec<RationalVector> =
        (0..sys.rank()).map(|i| &simple_coords(sys, e.apply(i)) - &RationalVector::unit(sys.rank(), i)).collect();
    let basis: Vec<RationalVector> = independent_subset(&images).into_iter().map(|k| images[k].clone()).collect();
    let phi_w = (0..sys.num_roots()).filter(|&r| in_span(&basis, &simple_coords(sys, r))).collect();
    MinGenSubsystem {
        e_w_basis: basis.iter().map(|c| sys.from_simple_coordinates(c)).collect(),
        phi_w,
        d_w: basis.len(),
    }
}

/// Orbits of `⟨w⟩` and `Φ_w = {e_i - e_j : i ≠ j in one orbit}` as `(i, j)` pairs.
pub fn min_gen_type_a_orbits(w: &Perm) -> (Vec<Vec<u8>>, Vec<(u8, u8)>) {
    let orbits = w.orbits();
    let mut roots: Vec<(u8, u8)> = orbits
        .iter()
        .flat_map(|o| o.iter().flat_map(move |&i| o.iter().filter(move |&&j| j != i).map(move |&j| (i, j))))
        .collect();
    roots.sort_unstable();
    (orbits, roots)
}

/// `d_w = n - #orbits` in type A.
pub fn type_a_d_w(w: &Perm) -> usize {
    w.n() - w.orbits().len()
}

/// Distance from the identity in the Cayley graph on all reflections.
pub fn reflection_length(g: &WeylGroup, w: ElemId) -> usize {
    g.reflection_length(w)
}

/// Whether root `r` lies in `Φ_w`.
pub fn in_phi_w(m: &MinGenSubsystem, r: usize) -> bool {
    m.phi_w.binary_search(&r).is_ok()
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

    fn roots_of(g: &WeylGroup, pairs: &[(u8, u8)]) -> Vec<usize> {
        let mut v: Vec<usize> =
            pairs.iter().map(|&(i, j)| g.system().type_a_root(i as usize, j as usize).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn examples() {
        let g = WeylGroup::symmetric(4).unwrap();
        let id = min_gen_subsystem(&g, 0);
        assert_eq!((id.d_w, id.phi_w.len(), id.e_w_basis.len()), (0, 0, 0));

        let w = g.id_of_perm(&p("4321")).unwrap();
        let m = min_gen_subsystem(&g, w);
        assert_eq!(m.d_w, 2);
        assert_eq!(m.phi_w, roots_of(&g, &[(1, 4), (4, 1), (2, 3), (3, 2)]));

        for r in 0..g.system().num_positive() {
            let m = min_gen_subsystem(&g, g.reflection(r));
            assert_eq!(m.d_w, 1);
            assert_eq!(m.phi_w, {
                let mut v = vec![r, g.system().negate_index(r)];
                v.sort();
                v
            });
        }
        let (orbits, roots) = min_gen_type_a_orbits(&p("2341"));
        assert_eq!(orbits, vec![vec![1, 2, 3, 4]]);
        assert_eq!(roots.len(), 12);
        assert_eq!(type_a_d_w(&p("2341")), 3);
        assert_eq!(reflection_length(&g, w), 2);
    }

    #[test]
    fn orbit_formula_agrees_on_s5() {
        let g = WeylGroup::symmetric(5).unwrap();
        for w in 0..g.order() {
            let perm = g.perm(w).unwrap();
            let m = min_gen_subsystem(&g, w);
            let (_, roots) = min_gen_type_a_orbits(perm);
            assert_eq!(m.phi_w, roots_of(&g, &roots));
            assert_eq!(m.d_w, type_a_d_w(perm));
        }
    }

    #[test]
    fn phi_w_spans_e_w_and_is_stable() {
        for g in [WeylGroup::symmetric(4).unwrap(), group("B2"), group("G2"), group("B3")] {
            let sys = g.system();
            for w in 0..g.order() {
                let m = min_gen_subsystem(&g, w);
                let roots: Vec<RationalVector> = m.phi_w.iter().map(|&r| sys.root(r).clone()).collect();
                assert_eq!(crate::root_core::linalg::rank_of(&roots), m.d_w);
                for r in &roots {
                    assert!(in_span(&m.e_w_basis, r));
                }
                for &r in &m.phi_w {
                    assert!(in_phi_w(&m, g.element(w).apply(r)));
                }
            }
        }
    }

    #[test]
    fn increment_law_on_small_groups() {
        for g in [WeylGroup::symmetric(4).unwrap(), group("B2"), group("G2")] {
            let mg: Vec<MinGenSubsystem> = (0..g.order()).map(|w| min_gen_subsystem(&g, w)).collect();
            for w in 0..g.order() {
                for r in 0..g.system().num_positive() {
                    let t = g.reflection(r);
                    let inside = in_phi_w(&mg[w], r);
                    for x in [g.mul(w, t), g.mul(t, w)] {
                        let expected = if inside { mg[w].d_w - 1 } else { mg[w].d_w + 1 };
                        assert_eq!(mg[x].d_w, expected);
                    }
                    if !inside {
                        let mut sum = mg[w].e_w_basis.clone();
                        sum.push(g.system().root(r).clone());
                        let x = &mg[g.mul(w, t)];
                        assert!(x.e_w_basis.iter().all(|v| in_span(&sum, v)));
                    }
                }
            }
        }
    }
}
