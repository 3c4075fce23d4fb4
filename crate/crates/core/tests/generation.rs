mod common;

use std::collections::BTreeSet;

use spectra_core::canon::{canonical_form, canonical_graph, is_isomorphic};
use spectra_core::families::*;
use spectra_core::search::{generate_graphs, GenSpec, SearchLimits};
use spectra_core::structure::girth;
use spectra_core::Graph;

fn spec(n: usize, min_degree: usize, min_girth: usize, allow_acyclic: bool, connected_only: bool) -> GenSpec {
    GenSpec {
        n,
        min_degree,
        min_girth,
        allow_acyclic,
        connected_only,
    }
}

struct Profile {
    min_degree: usize,
    connected: bool,
    girth: Option<usize>,
}

fn profile(g: &Graph) -> Profile {
    Profile {
        min_degree: common::brute_min_degree(g),
        connected: common::brute_force_connected(g),
        girth: common::girth_by_edge_deletion(g),
    }
}

fn admits(s: &GenSpec, p: &Profile) -> bool {
    p.min_degree >= s.min_degree
        && (p.connected || !s.connected_only)
        && p.girth.is_none_or(|c| c >= s.min_girth)
        && (s.allow_acyclic || p.girth.is_some())
}

#[test]
fn counts_match_burnside_for_small_orders() {
    let mut specs = Vec::new();
    for n in 1..=6 {
        specs.push(spec(n, 0, 3, true, false));
        specs.push(spec(n, 0, 3, true, true));
        specs.push(spec(n, 2, 3, true, true));
        specs.push(spec(n, 1, 4, true, false));
        specs.push(spec(n, 2, 5, false, true));
    }
    for min_girth in [3, 4, 5, 6, 7] {
        specs.push(spec(7, 2, min_girth, true, true));
    }
    specs.push(spec(7, 0, 4, false, true));
    specs.push(spec(7, 1, 5, true, false));
    specs.push(spec(7, 0, 3, true, true));
    for n in 1..=7 {
        let group: Vec<&GenSpec> = specs.iter().filter(|s| s.n == n).collect();
        let expected = common::burnside_class_counts(n, group.len(), |g| {
            let p = profile(g);
            group.iter().map(|s| admits(s, &p)).collect()
        });
        for (s, expected) in group.into_iter().zip(expected) {
            let generated = generate_graphs(s, &SearchLimits::default()).unwrap();
            assert_eq!(generated.len() as u128, expected, "{s:?}");
            for g in &generated {
                assert!(admits(s, &profile(g)), "{s:?} produced {g:?}");
            }
        }
    }
}

#[test]
fn girth_oracles_agree() {
    let mut rng = common::rng(13);
    for i in 0..300 {
        let g = common::random_graph(&mut rng, 2 + i % 10, 0.3);
        assert_eq!(
            common::girth_by_edge_deletion(&g),
            common::brute_force_girth(&g),
            "{g:?}"
        );
    }
}

#[test]
fn generated_graphs_are_pairwise_non_isomorphic() {
    for n in 1..=7 {
        let s = spec(n, 0, 3, true, true);
        let gs = generate_graphs(&s, &SearchLimits::default()).unwrap();
        let keys: BTreeSet<_> = gs.iter().map(common::brute_force_canonical).collect();
        assert_eq!(keys.len(), gs.len(), "n={n}");
    }
    let gs = generate_graphs(&spec(8, 2, 4, true, true), &SearchLimits::default()).unwrap();
    let keys: BTreeSet<_> = gs.iter().map(common::brute_force_canonical).collect();
    assert_eq!(keys.len(), gs.len());
}

#[test]
fn canonical_form_agrees_with_permutation_oracle() {
    let mut rng = common::rng(11);
    for i in 0..400 {
        let n = 1 + i % 7;
        let a = common::random_graph(&mut rng, n, 0.45);
        let perm = common::random_permutation(&mut rng, n);
        let b = if i % 2 == 0 {
            a.relabel(&perm).unwrap()
        } else {
            common::random_graph(&mut rng, n, 0.45)
        };
        let same = common::brute_force_canonical(&a) == common::brute_force_canonical(&b);
        assert_eq!(is_isomorphic(&a, &b).unwrap(), same, "{a:?} vs {b:?}");
        assert_eq!(canonical_graph(&a).unwrap() == canonical_graph(&b).unwrap(), same);
    }
}

#[test]
fn canonical_form_is_relabelling_invariant_on_larger_graphs() {
    let mut rng = common::rng(12);
    let mut cases = vec![
        common::petersen(),
        construction_h(5, 3).unwrap(),
        theta_graph([4, 4, 4]).unwrap(),
    ];
    for _ in 0..30 {
        cases.push(common::random_graph(&mut rng, 20, 0.2));
    }
    for g in &cases {
        let c = canonical_form(g).unwrap();
        for auto in &c.automorphisms {
            assert_eq!(&g.relabel(auto).unwrap(), g);
        }
        for _ in 0..5 {
            let perm = common::random_permutation(&mut rng, g.order());
            assert_eq!(canonical_graph(&g.relabel(&perm).unwrap()).unwrap(), c.graph);
        }
    }
}

#[test]
fn specification_examples() {
    let limits = SearchLimits::default();
    let four = generate_graphs(&spec(4, 2, 3, true, true), &limits).unwrap();
    let expect = [
        cycle_graph(4).unwrap(),
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap(),
        complete_graph(4).unwrap(),
    ];
    assert_eq!(four.len(), 3);
    for e in &expect {
        assert!(four.iter().any(|g| is_isomorphic(g, e).unwrap()));
    }
    let seven = generate_graphs(&spec(7, 2, 7, true, true), &limits).unwrap();
    assert_eq!(seven.len(), 1);
    assert!(is_isomorphic(&seven[0], &cycle_graph(7).unwrap()).unwrap());
    let ten = generate_graphs(&spec(10, 2, 7, true, true), &limits).unwrap();
    assert_eq!(ten.len(), 2);
    assert!(ten
        .iter()
        .any(|g| is_isomorphic(g, &theta_graph([3, 4, 4]).unwrap()).unwrap()));
    assert!(ten.iter().all(|g| girth(g).at_least(7)));
}

#[test]
fn generation_is_deterministic() {
    let s = spec(9, 2, 4, true, true);
    let a = generate_graphs(&s, &SearchLimits::default()).unwrap();
    let b = generate_graphs(&s, &SearchLimits::default()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn leafless_connected_counts_for_orders_up_to_eight() {
    let expected = [(4, 3u128), (5, 11), (6, 61), (7, 507)];
    for (n, count) in expected {
        let s = spec(n, 2, 3, true, true);
        assert_eq!(common::burnside_class_count(n, |g| admits(&s, &profile(g))), count);
    }
    let eight = generate_graphs(&spec(8, 2, 3, true, true), &SearchLimits::default()).unwrap();
    assert_eq!(eight.len(), 7442);
}
