use goodpairs::min_gen::{min_gen_subsystem, min_gen_type_a_orbits, type_a_d_w};
use goodpairs::pairs::bad_pairs;
use goodpairs::root_core::rational::{format_rational, parse_rational};
use goodpairs::root_core::{named_cartan, RootSystem};
use goodpairs::weyl::{Perm, WeylGroup};
use proptest::prelude::*;

fn group(name: &str) -> WeylGroup {
    WeylGroup::new(RootSystem::from_cartan(&named_cartan(name).unwrap()).unwrap()).unwrap()
}

#[test]
fn orbit_formula_matches_subsystem_up_to_s6() {
    for n in 2..=6 {
        let g = WeylGroup::symmetric(n).unwrap();
        for perm in Perm::all(n) {
            let m = min_gen_subsystem(&g, g.id_of_perm(&perm).unwrap());
            let (_, pairs) = min_gen_type_a_orbits(&perm);
            let mut roots: Vec<usize> =
                pairs.iter().map(|&(i, j)| g.system().type_a_root(i as usize, j as usize).unwrap()).collect();
            roots.sort_unstable();
            assert_eq!(m.phi_w, roots, "{perm}");
            assert_eq!(m.d_w, type_a_d_w(&perm), "{perm}");
        }
    }
}

#[test]
fn subsystem_is_inverse_invariant() {
    for g in [WeylGroup::symmetric(5).unwrap(), group("B3"), group("G2")] {
        for w in 0..g.order() {
            assert_eq!(min_gen_subsystem(&g, w).phi_w, min_gen_subsystem(&g, g.inverse(w)).phi_w);
        }
    }
}

#[test]
fn s5_bad_pairs_match_oracle() {
    let text =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/chain_oracle_s5.json")).unwrap();
    let oracle: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut expected: Vec<(String, String)> = oracle["bad_pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_str().unwrap().to_string(), p[1].as_str().unwrap().to_string()))
        .collect();
    let mut got: Vec<(String, String)> =
        bad_pairs(5).unwrap().into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    got.sort();
    expected.sort();
    assert_eq!(got, expected);
    assert_eq!(got.len() as u64, oracle["bad_count"].as_u64().unwrap());
}

#[test]
fn bad_pairs_are_closed_under_inversion() {
    let bad: std::collections::BTreeSet<_> = bad_pairs(5).unwrap().into_iter().collect();
    for (w1, w2) in &bad {
        assert!(bad.contains(&(w1.inverse(), w2.inverse())), "({w1}, {w2})");
    }
}

fn perm_strategy() -> impl Strategy<Value = Perm> {
    (2usize..=9)
        .prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle())
        .prop_map(|v| Perm::new(v).unwrap())
}

proptest! {
    #[test]
    fn perm_display_round_trips(w in perm_strategy()) {
        prop_assert_eq!(w.to_string().parse::<Perm>().unwrap(), w);
    }

    #[test]
    fn perm_inverse_composes_to_identity(w in perm_strategy()) {
        prop_assert_eq!(w.compose(&w.inverse()), Perm::identity(w.n()));
        prop_assert!(Perm::identity(w.n()).bruhat_leq(&w));
        prop_assert!(w.bruhat_leq(&Perm::longest(w.n())));
    }

    #[test]
    fn rational_format_round_trips(n in -10_000i64..10_000, d in 1i64..500) {
        let q = goodpairs::root_core::rational::frac(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
}
