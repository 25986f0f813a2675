//! Constructor outputs checked by `verify` across graph families.

use iasi_core::graph::enumerate::connected_graphs;
use iasi_core::graph::families::{complete, cycle, path, tree_from_parent_array};
use iasi_core::graph::random;
use iasi_core::intset::as_arithmetic_progression;
use iasi_core::{
    construct_uniform_bipartite, construct_uniform_odd, construct_weakly_uniform, params_for_k,
    verify, ConstructError, ConstructionMode, Graph, Labeling,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn assert_injective(g: &Graph, l: &Labeling) {
    let report = verify(g, l);
    assert!(report.vertex_injective, "{l}");
    assert!(report.edge_injective, "{l}");
}

#[test]
fn weakly_round_trip_on_trees_and_even_cycles() {
    let mut rng = StdRng::seed_from_u64(0x1a51);
    for _ in 0..40 {
        let n = 1 + (rand::Rng::random_range(&mut rng, 0..20));
        let t = random::tree(&mut rng, n);
        for k in 1..=7 {
            let l = construct_weakly_uniform(&t, k).unwrap();
            assert!(verify(&t, &l).is_weakly_uniform(k), "tree {t:?} k {k}");
            assert_injective(&t, &l);
        }
    }
    for n in (4..=12).step_by(2) {
        let c = cycle(n).unwrap();
        for k in 1..=7 {
            let l = construct_weakly_uniform(&c, k).unwrap();
            assert_eq!(verify(&c, &l).weakly_uniform_k, Some(k));
        }
    }
}

#[test]
fn weakly_fails_exactly_on_odd_cycles() {
    for n in (3..=11).step_by(2) {
        let c = cycle(n).unwrap();
        for k in 2..=7 {
            match construct_weakly_uniform(&c, k) {
                Err(ConstructError::NotBipartite(cycle)) => assert!(cycle.is_valid_for(&c)),
                other => panic!("C{n} k={k}: {other:?}"),
            }
        }
    }
}

#[test]
fn bipartite_round_trip_random_graphs() {
    let mut rng = StdRng::seed_from_u64(0xb1b);
    for _ in 0..60 {
        let n = 2 + rand::Rng::random_range(&mut rng, 0..19);
        let g = random::bipartite(&mut rng, n, 0.4);
        for m in 1..=4 {
            for n_len in 1..=4 {
                for d in 1..=3 {
                    let l = construct_uniform_bipartite(&g, m, n_len, d).unwrap();
                    let report = verify(&g, &l);
                    assert!(report.is_uniform(m + n_len - 1));
                    assert_injective(&g, &l);
                }
            }
        }
    }
}

#[test]
fn arbitrarily_uniform_fixed_tree() {
    let t = tree_from_parent_array(&[None, Some(0), Some(0), Some(1), Some(1), Some(2), Some(5)])
        .unwrap();
    for k in 1..=10 {
        let p = params_for_k(k, ConstructionMode::Bipartite).unwrap();
        let l = construct_uniform_bipartite(&t, p.m, p.n, p.d).unwrap();
        assert_eq!(verify(&t, &l).uniform_k, Some(k));
    }
}

#[test]
fn odd_round_trip_complete_graphs_and_cycles() {
    for n in 2..=8 {
        let g = complete(n).unwrap();
        for m in 1..=4 {
            for d in 1..=3 {
                let l = construct_uniform_odd(&g, m, d).unwrap();
                let report = verify(&g, &l);
                assert_eq!(report.uniform_k, Some(2 * m - 1));
                assert_injective(&g, &l);
                for e in &report.edges {
                    let ap = as_arithmetic_progression(&e.label).unwrap();
                    assert_eq!(ap.length, 2 * m - 1);
                    if ap.length > 1 {
                        assert_eq!(ap.difference, d);
                    }
                }
            }
        }
    }
    for n in 3..=12 {
        let g = cycle(n).unwrap();
        for k in (1..=7).step_by(2) {
            let p = params_for_k(k, ConstructionMode::Odd).unwrap();
            let l = construct_uniform_odd(&g, p.m, p.d).unwrap();
            assert_eq!(verify(&g, &l).uniform_k, Some(k));
        }
    }
}

#[test]
fn odd_construction_on_small_connected_graphs() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            for m in 1..=3 {
                let l = construct_uniform_odd(&g, m, 1).unwrap();
                assert!(verify(&g, &l).is_uniform(2 * m - 1));
            }
        }
    }
}

#[test]
fn isolated_vertices_are_labeled() {
    let g = Graph::new(5, [(0, 1), (1, 2)]).unwrap();
    let l = construct_weakly_uniform(&g, 3).unwrap();
    assert!(verify(&g, &l).is_weakly_uniform(3));
    assert_eq!(l.label(3).len(), 3);
    assert_eq!(l.label(4).len(), 3);
    let l = construct_uniform_odd(&g, 2, 1).unwrap();
    assert!(verify(&g, &l).is_uniform(3));
    assert!(verify(
        &path(1).unwrap(),
        &construct_uniform_odd(&path(1).unwrap(), 3, 2).unwrap()
    )
    .is_uniform(5));
}
