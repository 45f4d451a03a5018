//! Equations of the flag variety, of `X̃` and of the cells `Ṽ_w` in
//! Plücker coordinates, random points of `Ṽ_w`, and the scan for the
//! additional equation `t_a = t_b` with its explicit witness points.

mod equations;
mod lemmas;
mod relations;
mod sample;
mod scan;

pub use equations::{
    all_vanish, cell_equations, cell_holds, check_point, fiber_equations, flag_relations, p_equations, p_polynomial,
    p_polynomials, prefix_set, CellDescription, EquationSet, FamilyCheck, PEquation, MAX_EQUATION_DEGREE,
};
pub use lemmas::{
    additional_equation_instances, additional_equation_on, sample_points, simplified_incidence_check,
    simplified_incidence_on, AdditionalEquationCheck, SignCheck,
};
pub use relations::{
    incidence_relations, plucker_relations, shifted_diagonal_product, signed_plucker, signed_plucker_poly,
};
pub use sample::{flag_stabilizer_basis, permutation_matrix, point_from, sample_point_on_vw, SampledPoint};
pub use scan::{
    additional_equation_scan, scan_bad_pairs, scan_hits, verify_witness, witness_diagonal, witness_transcript,
    witness_transcript_with, CounterexampleReport, Hit, PluckerValue, ScanStatus, Variant, WitnessPoint,
    WitnessTranscript,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{RationalPoint, SparsePolynomial, VariableId};
    use crate::root_core::rational::rat;
    use crate::root_core::{IndexSubset, RationalMatrix};
    use crate::weyl::Perm;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> SparsePolynomial {
        s.parse().unwrap()
    }

    fn set(v: &[u8]) -> IndexSubset {
        IndexSubset::new(v.to_vec()).unwrap()
    }

    fn random_matrix(n: usize, cols: usize, rng: &mut ChaCha8Rng) -> RationalMatrix {
        RationalMatrix::from_rows((0..n).map(|_| (0..cols).map(|_| rat(rng.random_range(-9..=9))).collect()).collect())
            .unwrap()
    }

    /// Plücker coordinates of the span of the first `d` columns of `m`.
    fn coordinates(m: &RationalMatrix, d: usize, pt: &mut RationalPoint) {
        let cols: Vec<usize> = (0..d).collect();
        for i in IndexSubset::all_of_size(m.rows() as u8, d) {
            let rows: Vec<usize> = i.elements().iter().map(|&r| r as usize - 1).collect();
            pt.insert(VariableId::plucker(i.elements()).unwrap(), m.submatrix(&rows, &cols).determinant().unwrap());
        }
    }

    #[test]
    fn grassmannian_of_planes_in_four_space() {
        let rels = plucker_relations(4, 2).unwrap();
        assert_eq!(rels.len(), 1);
        let expected = poly("x12*x34 - x13*x24 + x14*x23");
        assert!(rels[0] == expected || rels[0] == -&expected, "{}", rels[0]);
        assert!(plucker_relations(4, 1).unwrap().is_empty());
        assert!(plucker_relations(5, 1).unwrap().is_empty());
        assert!(plucker_relations(4, 4).is_err());
    }

    #[test]
    fn relations_vanish_on_random_subspaces() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rels = plucker_relations(4, 2).unwrap();
        let inc = incidence_relations(4, 1, 3).unwrap();
        let inc12 = incidence_relations(4, 1, 2).unwrap();
        let mut generic_failures = 0;
        for _ in 0..20 {
            let m = random_matrix(4, 3, &mut rng);
            let mut pt = RationalPoint::new();
            for d in 1..=3 {
                coordinates(&m, d, &mut pt);
            }
            assert!(all_vanish(&rels, &pt).unwrap());
            assert!(all_vanish(&inc, &pt).unwrap());
            assert!(all_vanish(&inc12, &pt).unwrap());
            // a line not inside the plane
            let other = random_matrix(4, 1, &mut rng);
            let mut bad = pt.clone();
            coordinates(&other, 1, &mut bad);
            if !all_vanish(&inc12, &bad).unwrap() {
                generic_failures += 1;
            }
        }
        assert!(generic_failures > 0);
    }

    #[test]
    fn standard_flag_satisfies_incidence() {
        let id = RationalMatrix::identity(5);
        let mut pt = RationalPoint::new();
        for d in 1..5 {
            coordinates(&id, d, &mut pt);
        }
        let (pl, inc) = flag_relations(5).unwrap();
        assert!(all_vanish(&pl, &pt).unwrap() && all_vanish(&inc, &pt).unwrap());
    }

    #[test]
    fn cell_examples() {
        let c = cell_equations(&p("653421"));
        let labels: Vec<Vec<u8>> = c.nonvanishing.iter().map(|i| i.elements().to_vec()).collect();
        assert_eq!(labels, vec![vec![6], vec![5, 6], vec![3, 5, 6], vec![3, 4, 5, 6], vec![2, 3, 4, 5, 6]]);
        assert_eq!(c.vanishing, vec![set(&[4, 5, 6])]);
        assert!(cell_equations(&Perm::longest(5)).vanishing.is_empty());
        let id = cell_equations(&Perm::identity(4));
        assert_eq!(id.vanishing.len(), 4 - 1 + 6 - 1 + 4 - 1);
    }

    #[test]
    fn equation_counts() {
        let eqs = p_polynomials(&p("231")).unwrap();
        assert_eq!(eqs.p_equations.len(), 9);
        for w in Perm::all(4) {
            let eqs = p_equations(&w).unwrap();
            assert_eq!(eqs.len(), 4 + 2 * 6 + 3 * 4);
            assert!(eqs.iter().all(|e| e.polynomial.degree_in(&VariableId::Lambda) == 0));
        }
        assert!(p_polynomials(&Perm::identity(7)).is_err());
    }

    #[test]
    fn p_polynomials_on_the_cell() {
        for w in Perm::all(4) {
            let cell = cell_equations(&w);
            let zero: RationalPoint =
                cell.vanishing.iter().map(|i| (VariableId::plucker(i.elements()).unwrap(), rat(0))).collect();
            for d in 1..4 {
                let top = prefix_set(&w, d);
                for i in IndexSubset::all_of_size(4, d) {
                    let pw = p_polynomial(&w, &i).unwrap().substitute(&zero);
                    if crate::root_core::subset_leq(&top, &i).unwrap() && i != top {
                        assert!(pw.is_zero(), "{w} {i:?}");
                    }
                    if i == top {
                        // only the diagonal term survives in x_top itself
                        let x = VariableId::plucker(top.elements()).unwrap();
                        let on_top: RationalPoint = pw
                            .variables()
                            .into_iter()
                            .filter(|v| matches!(v, VariableId::Plucker(_)) && *v != x)
                            .map(|v| (v, rat(0)))
                            .collect();
                        assert!(pw.substitute(&on_top).is_zero(), "{w} {i:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_examples() {
        assert_eq!(fiber_equations(&p("4231"), &p("1324")).unwrap(), vec![(1, 4), (2, 3)]);
        assert!(fiber_equations(&p("4231"), &p("4231")).unwrap().is_empty());
        assert!(fiber_equations(&p("1324"), &p("4231")).is_err());
    }

    #[test]
    fn fiber_identifications_generate_orbits() {
        for w in Perm::all(4) {
            for wp in Perm::all(4).into_iter().filter(|x| x.bruhat_leq(&w)) {
                let mut parent: Vec<u8> = (0..=4).collect();
                fn root(p: &mut [u8], x: u8) -> u8 {
                    if p[x as usize] == x {
                        x
                    } else {
                        let r = root(p, p[x as usize]);
                        p[x as usize] = r;
                        r
                    }
                }
                for (a, b) in fiber_equations(&w, &wp).unwrap() {
                    let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                    parent[ra as usize] = rb;
                }
                let orbits = w.compose(&wp.inverse()).orbits();
                for o in &orbits {
                    for &x in o {
                        assert_eq!(root(&mut parent, x), root(&mut parent, o[0]));
                    }
                }
                let classes: std::collections::BTreeSet<u8> = (1..=4).map(|x| root(&mut parent, x)).collect();
                assert_eq!(classes.len(), orbits.len());
            }
        }
    }

    #[test]
    fn samples_satisfy_every_equation() {
        for w in [p("4231"), p("1324"), p("2143"), Perm::longest(4), Perm::identity(4)] {
            let eqs = p_polynomials(&w).unwrap();
            for seed in 0..3 {
                let s = sample_point_on_vw(&w, seed).unwrap();
                let check = check_point(&eqs, &s.point).unwrap();
                assert!(check.all(), "{w} seed {seed}: {check:?}");
            }
        }
    }

    #[test]
    fn standard_flag_admits_every_upper_triangular_endomorphism() {
        let basis = flag_stabilizer_basis(&RationalMatrix::identity(4));
        assert_eq!(basis.len(), 10);
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = sample_point_on_vw(&p("3412"), 9).unwrap();
        let b = sample_point_on_vw(&p("3412"), 9).unwrap();
        assert_eq!(a.point, b.point);
    }

    #[test]
    fn equation_set_json_round_trips() {
        let eqs = p_polynomials(&p("231")).unwrap();
        let json = serde_json::to_string(&eqs).unwrap();
        assert_eq!(serde_json::from_str::<EquationSet>(&json).unwrap(), eqs);
    }
}
