mod common;

use common::{random_graph, rng, subsets};
use rand::Rng;
use tk_core::constructions::{build, NamedGraph};
use tk_core::mu_bound::{cocliques_of_size, is_coclique, max_coclique_containing};
use tk_core::Graph;

/// Largest independent set containing `seed`, by enumerating every vertex subset.
fn brute_force(g: &Graph, seed: &[usize]) -> usize {
    let n = g.order();
    let seed_mask: u32 = seed.iter().map(|&u| 1 << u).sum();
    (0u32..1 << n)
        .filter(|m| m & seed_mask == seed_mask)
        .filter(|&m| {
            (0..n).all(|u| m >> u & 1 == 0 || (u + 1..n).all(|w| m >> w & 1 == 0 || !g.adjacent(u, w)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn branch_and_bound_matches_enumeration() {
    let mut r = rng(2024);
    let mut checked = 0;
    for _ in 0..240 {
        let n = r.gen_range(8..=14);
        let p = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        let cert = max_coclique_containing(&g, &[]).unwrap();
        assert!(cert.verify(&g));
        assert_eq!(cert.size, brute_force(&g, &[]), "{:?}", g.edges());

        let u = r.gen_range(0..n);
        let seeded = max_coclique_containing(&g, &[u]).unwrap();
        assert!(seeded.verify(&g) && seeded.vertices.contains(&u));
        assert_eq!(seeded.size, brute_force(&g, &[u]));

        if let Some(w) = (0..n).find(|&w| w != u && !g.adjacent(u, w)) {
            let pair = max_coclique_containing(&g, &[u, w]).unwrap();
            assert!(pair.verify(&g) && pair.vertices.contains(&w));
            assert_eq!(pair.size, brute_force(&g, &[u, w]));
        }
        checked += 1;
    }
    assert!(checked >= 200);
}

#[test]
fn named_independence_numbers() {
    for (id, alpha) in [
        (NamedGraph::Pentagon, 2),
        (NamedGraph::Petersen, 4),
        (NamedGraph::HoffmanSingleton, 15),
    ] {
        let g = build(&id).unwrap();
        let cert = max_coclique_containing(&g, &[]).unwrap();
        assert!(cert.verify(&g));
        assert_eq!(cert.size, alpha, "{id}");
        if g.order() <= 20 {
            assert_eq!(brute_force(&g, &[]), alpha);
        }
    }
}

#[test]
fn hoffman_singleton_nonadjacent_pair_extends_to_15_coclique() {
    // distance-transitive, so one nonadjacent pair stands for all
    let g = build(&NamedGraph::HoffmanSingleton).unwrap();
    let w = (1..50).find(|&w| !g.adjacent(0, w)).unwrap();
    let cert = max_coclique_containing(&g, &[0, w]).unwrap();
    assert_eq!(cert.size, 15);
}

#[test]
fn bad_seeds_are_rejected() {
    let g = build(&NamedGraph::Pentagon).unwrap();
    assert!(max_coclique_containing(&g, &[0, 1]).is_err());
    assert!(max_coclique_containing(&g, &[7]).is_err());
}

#[test]
fn coclique_listing_matches_subsets() {
    let mut r = rng(5);
    for _ in 0..30 {
        let g = random_graph(&mut r, 10, 0.4);
        for size in 1..=4 {
            let expect: Vec<Vec<usize>> =
                subsets(10, size).into_iter().filter(|s| is_coclique(&g, s)).collect();
            assert_eq!(cocliques_of_size(&g, size), expect);
        }
    }
}
