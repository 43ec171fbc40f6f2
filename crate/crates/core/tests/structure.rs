//! Structural invariants of the construction.

use std::collections::BTreeSet;

use hiernet::adjacency::{adjacent_digits, AdjacencyRule};
use hiernet::label::Label;
use hiernet::{enumerate_edges, from_rules, subgraph_vertices, GraphView, Params, DEFAULT_CAP};

fn all_params(max_n: u32, max_k: u32) -> impl Iterator<Item = Params> {
    (2..=max_n).flat_map(move |n| (1..=max_k).map(move |k| Params::new(n, k).unwrap()))
}

fn digits(p: &Params) -> Vec<Vec<u32>> {
    (0..p.order_u64().unwrap()).map(|id| Label::from_id(id, p).unwrap().into_digits()).collect()
}

#[test]
fn rules_are_disjoint_and_build_the_same_graph() {
    for p in all_params(5, 4) {
        let names = digits(&p);
        let mut by_pairs = Vec::new();
        for (u, x) in names.iter().enumerate() {
            for (v, y) in names.iter().enumerate().skip(u + 1) {
                let hits = AdjacencyRule::ALL.iter().filter(|r| r.matches(x, y)).count();
                assert!(hits <= 1, "{p}: {x:?} {y:?} matches {hits} rules");
                if hits == 1 {
                    by_pairs.push((u as u32, v as u32));
                }
            }
        }
        let recursive = enumerate_edges(&p, DEFAULT_CAP).unwrap();
        assert_eq!(recursive.edges(), &by_pairs[..], "{p}");
        assert_eq!(from_rules(&p, DEFAULT_CAP).unwrap(), recursive);
    }
}

fn is_clique(g: &GraphView, vs: &[u32]) -> bool {
    vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

#[test]
fn blocks_and_sibling_roots_are_cliques() {
    for p in all_params(5, 4) {
        let g = enumerate_edges(&p, DEFAULT_CAP).unwrap();
        let n = p.n();
        for block in (0..g.order() as u32).step_by(n as usize) {
            let vs: Vec<u32> = (block..block + n).collect();
            assert!(is_clique(&g, &vs), "{p}: block at {block}");
        }
        // α x_i 0…0 for x_i ≠ 0, every prefix α of length i−1
        for i in 1..p.k() {
            let below = u32::pow(n, p.k() - i);
            for alpha in 0..u32::pow(n, i - 1) {
                let base = alpha * n * below;
                let vs: Vec<u32> = (1..n).map(|x| base + x * below).collect();
                assert!(is_clique(&g, &vs), "{p}: siblings under prefix {alpha} at level {i}");
            }
        }
    }
}

#[test]
fn copies_are_smaller_members() {
    for p in all_params(4, 4).filter(|p| p.k() >= 2) {
        let g = enumerate_edges(&p, DEFAULT_CAP).unwrap();
        for i in 1..p.k() {
            let inner = enumerate_edges(&p.with_depth(p.k() - i).unwrap(), DEFAULT_CAP).unwrap();
            let expected: BTreeSet<(usize, usize)> =
                inner.edges().iter().map(|&(u, v)| (u as usize, v as usize)).collect();
            let prefix_count = u64::from(p.n()).pow(i);
            let prefix_params = p.with_depth(i).unwrap();
            for prefix in 0..prefix_count {
                let prefix = Label::from_id(prefix, &prefix_params).unwrap();
                let vs: Vec<u32> = subgraph_vertices(prefix.digits(), &p)
                    .unwrap()
                    .iter()
                    .map(|l| l.to_id(&p).unwrap() as u32)
                    .collect();
                assert_eq!(g.induced_edges(&vs), expected, "{p}: copy {prefix:?}");
            }
        }
    }
}

#[test]
fn collapse_reproduces_smaller_members() {
    for p in all_params(4, 3).filter(|p| p.k() >= 2) {
        let g = enumerate_edges(&p, DEFAULT_CAP).unwrap();
        for level in 1..p.k() {
            let expected = enumerate_edges(&p.with_depth(level).unwrap(), DEFAULT_CAP).unwrap();
            assert_eq!(g.collapse(level).unwrap(), expected, "{p} at {level}");
        }
    }
}

#[test]
fn predicate_is_symmetric_and_irreflexive() {
    for p in all_params(4, 3) {
        let names = digits(&p);
        for x in &names {
            assert!(!adjacent_digits(x, x));
            for y in &names {
                assert_eq!(adjacent_digits(x, y), adjacent_digits(y, x));
            }
        }
    }
}

#[test]
fn parallel_schedule_does_not_change_results() {
    let p = Params::new(4, 4).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                let g = enumerate_edges(&p, DEFAULT_CAP).unwrap();
                hiernet::empirical::empirical_report(&g).unwrap()
            })
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(3));
}
