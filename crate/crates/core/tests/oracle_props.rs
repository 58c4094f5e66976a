mod common;

use common::{brute_cochordal, brute_indmatch, graph_from_code};
use increg::{
    expand, is_cochordal, reduced_homology_ranks, regularity, regularity_bounds, regularity_capped,
    Certificate, ChainSpec, Method, OracleError, SimpleGraph,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n_max: usize) -> SimpleGraph {
    let n = rng.gen_range(2..=n_max);
    let pairs = n * (n - 1) / 2;
    graph_from_code(n, rng.gen::<u64>() & ((1u64 << pairs) - 1))
}

/// `reg I(G)`, with 1 standing in for the zero ideal so that the deletion
/// bound reads correctly for stars.
fn reg_or_one(g: &SimpleGraph) -> usize {
    regularity(g, 2).unwrap().value.unwrap_or(1)
}

#[test]
fn froeberg_and_matching_bound_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 600 {
        let g = random_graph(&mut rng, 9);
        if !g.has_edges() {
            continue;
        }
        let reg = regularity(&g, 2).unwrap().value.unwrap();
        assert_eq!(reg == 2, brute_cochordal(&g), "{g:?}");
        assert_eq!(reg == 2, is_cochordal(&g), "{g:?}");
        assert!(reg > brute_indmatch(&g), "{g:?}");
        checked += 1;
    }
}

/// Hochster's maximum over every vertex subset, without any pruning.
fn unpruned_regularity(g: &SimpleGraph, p: u32) -> Option<usize> {
    let n = g.n();
    (1u32..1 << n)
        .filter_map(|mask| {
            let w: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let h = g.induced_subgraph(&w).unwrap().graph;
            reduced_homology_ranks(&h, p).unwrap().top_nonzero()
        })
        .max()
        .map(|d| (d + 2) as usize)
}

#[test]
fn pruned_oracle_matches_the_full_subset_maximum() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..250 {
        let g = random_graph(&mut rng, 8);
        let p = [2, 3][rng.gen_range(0..2)];
        let full = unpruned_regularity(&g, p);
        assert_eq!(regularity(&g, p).unwrap().value, full, "{g:?}");
    }
}

#[test]
fn deletion_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let g = random_graph(&mut rng, 8);
        if !g.has_edges() {
            continue;
        }
        let reg = reg_or_one(&g);
        for v in 1..=g.n() {
            let closed = g.closed_neighborhood(v);
            let without_star = g.delete_vertices(&closed).unwrap().graph;
            let without_v = g.delete_vertices(&[v]).unwrap().graph;
            let bound = (reg_or_one(&without_star) + 1).max(reg_or_one(&without_v));
            assert!(reg <= bound, "{g:?} at vertex {v}");
        }
    }
}

#[test]
fn certificate_subset_carries_the_homology() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 8);
        let rep = regularity(&g, 3).unwrap();
        let Some(Certificate::Subset {
            vertices,
            dimension,
        }) = rep.certificate
        else {
            assert!(!g.has_edges());
            continue;
        };
        let sub = g.induced_subgraph(&vertices).unwrap().graph;
        let h = reduced_homology_ranks(&sub, 3).unwrap();
        assert!(h.rank(dimension as isize) > 0);
        assert_eq!(h.top_nonzero(), Some(dimension as isize));
        assert_eq!(rep.value, Some(dimension + 2));
        assert_eq!(rep.method, Method::HochsterOracle);
    }
}

#[test]
fn table_graphs_agree_across_fields() {
    let chains = [
        ChainSpec::new(10, [(1, 10), (2, 4), (3, 5), (7, 9)]).unwrap(),
        ChainSpec::new(4, [(1, 3), (2, 4)]).unwrap(),
        ChainSpec::new(7, [(2, 7), (3, 4)]).unwrap(),
    ];
    for spec in &chains {
        for n in spec.r()..=spec.r() + 5 {
            let g = expand(spec, n).unwrap();
            assert_eq!(
                regularity(&g, 2).unwrap().value,
                regularity(&g, 3).unwrap().value,
                "n = {n}"
            );
        }
    }
}

#[test]
fn example_bounds() {
    let gap2 = ChainSpec::new(4, [(1, 3), (2, 4)]).unwrap();
    assert_eq!(
        regularity_bounds(&expand(&gap2, 9).unwrap()).unwrap(),
        (2, false)
    );
    assert_eq!(
        regularity(&expand(&gap2, 6).unwrap(), 2).unwrap().value,
        Some(3)
    );
    let big = SimpleGraph::cycle(30);
    assert!(matches!(
        regularity(&big, 2),
        Err(OracleError::SubsetBudgetExceeded {
            vertices: 30,
            cap: 22
        })
    ));
    assert!(regularity_capped(&SimpleGraph::cycle(9), 2, 9).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_characteristic(n in 1usize..=9, code in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let g = graph_from_code(n, code);
        let h = reduced_homology_ranks(&g, p).unwrap();
        prop_assert_eq!(h.ranks.len(), n + 1);
        prop_assert_eq!(h.euler_from_ranks(), h.euler_from_faces());
    }
}
