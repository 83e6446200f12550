mod common;

use kpham::conditions::{chvatal_bipartite_condition, is_strongly_dominating};
use kpham::graph::iso::{are_isomorphic, canonical_form, PartMode};
use kpham::graph::{decode, encode, from_graph6, independence_number, to_graph6, vertex_connectivity};
use kpham::solver::{
    enumerate_longest_cycles, find_hamiltonian_cycle, longest_cycle, non_hamiltonicity_witness, verify_cycle,
};
use kpham::{CycleCertificate, KPartiteGraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `(n, k, edges)` over the block partition.
fn kpartite() -> impl Strategy<Value = KPartiteGraph> {
    (1usize..=4, 2usize..=4)
        .prop_flat_map(|(m, k)| {
            let n = m * k;
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(move |&(u, v)| u / m != v / m)
                .collect();
            let len = pairs.len();
            (Just((n, k)), Just(pairs), proptest::collection::vec(any::<bool>(), len))
        })
        .prop_map(|((n, k), pairs, keep)| {
            let edges: Vec<_> = pairs.into_iter().zip(keep).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            KPartiteGraph::with_block_parts(n, k, &edges).unwrap()
        })
}

fn shuffle(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in kpartite()) {
        let (n, mut edges) = from_graph6(&to_graph6(&g)).unwrap();
        edges.sort_unstable();
        prop_assert_eq!(n, g.n());
        prop_assert_eq!(edges, g.edges());
        prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in kpartite(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = g.relabel(&shuffle(&mut rng, g.n())).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h, PartMode::Respect).unwrap());
    }

    #[test]
    fn solver_matches_oracle_and_certificates_check(g in kpartite()) {
        let cycle = find_hamiltonian_cycle(&g).unwrap();
        if g.n() <= 9 {
            prop_assert_eq!(cycle.is_some(), common::ham_by_permutation(&g));
        }
        match &cycle {
            Some(c) => {
                prop_assert!(verify_cycle(&g, c));
                prop_assert_eq!(non_hamiltonicity_witness(&g), None);
            }
            None => {
                if g.n() >= 3 {
                    let w = non_hamiltonicity_witness(&g).unwrap();
                    prop_assert!(w.check(&g));
                }
            }
        }
    }

    #[test]
    fn strongly_dominating_is_rotation_invariant(g in kpartite(), shift in 0usize..16, flip in any::<bool>()) {
        if let Ok(c) = longest_cycle(&g) {
            let mut vs = c.vertices.clone();
            let len = vs.len();
            vs.rotate_left(shift % len);
            if flip {
                vs.reverse();
            }
            let moved = CycleCertificate::new(vs);
            prop_assert_eq!(is_strongly_dominating(&g, &c).unwrap(), is_strongly_dominating(&g, &moved).unwrap());
        }
    }
}

#[test]
fn independence_number_matches_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for t in 0..300 {
        let n = 2 + t % 19;
        let p = rng.random_range(0.05..0.9);
        let g = common::random_general(&mut rng, n, p);
        assert_eq!(independence_number(&g, 20).unwrap(), common::alpha_by_subsets(&g), "{}", encode(&g));
    }
}

#[test]
fn connectivity_matches_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for t in 0..400 {
        let n = 2 + t % 9;
        let p = rng.random_range(0.1..0.95);
        let g = common::random_general(&mut rng, n, p);
        assert_eq!(vertex_connectivity(&g), common::kappa_by_subsets(&g), "{}", encode(&g));
    }
}

#[test]
fn longest_cycle_is_hamiltonian_exactly_when_solver_succeeds() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.random_range(3..=8);
        let p = rng.random_range(0.2..0.9);
        let g = common::random_general(&mut rng, n, p);
        let ham = find_hamiltonian_cycle(&g).unwrap().is_some();
        match longest_cycle(&g) {
            Ok(c) => {
                assert!(verify_cycle(&g, &c));
                assert_eq!(c.len() == n, ham);
            }
            Err(_) => assert!(!ham),
        }
    }
}

#[test]
fn two_connected_graphs_have_long_cycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    while checked < 500 {
        let n = rng.random_range(4..=8);
        let p = rng.random_range(0.3..0.9);
        let g = common::random_general(&mut rng, n, p);
        if vertex_connectivity(&g) < 2 {
            continue;
        }
        checked += 1;
        let longest = longest_cycle(&g).unwrap().len();
        assert!(longest >= (2 * g.min_degree()).min(n), "{}", encode(&g));
    }
}

#[test]
fn longest_cycles_are_all_the_same_length() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.random_range(4..=8);
        let p = rng.random_range(0.3..0.8);
        let g = common::random_general(&mut rng, n, p);
        let Ok(best) = longest_cycle(&g) else { continue };
        let all = enumerate_longest_cycles(&g).unwrap();
        assert!(!all.is_empty());
        assert!(all.iter().all(|c| c.len() == best.len() && verify_cycle(&g, c)));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn chvatal_condition_implies_hamiltonian() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..2000 {
        let n = 2 * rng.random_range(2..=5usize);
        let p = rng.random_range(0.3..0.95);
        let g = common::random_kpartite(&mut rng, n, 2, p);
        let h = g.induced_bipartite(&g.part_set(0), &g.part_set(1)).unwrap();
        if chvatal_bipartite_condition(&h, 0).unwrap() {
            assert!(common::ham_by_permutation(&g));
        }
    }
}
