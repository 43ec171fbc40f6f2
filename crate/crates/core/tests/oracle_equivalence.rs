//! Closed forms and the label oracle against brute force over every small
//! member of the family.

use num_bigint::BigInt;
use num_rational::BigRational;

use hiernet::classify::VertexClass;
use hiernet::empirical::{bfs_distances, empirical_report, match_metrics};
use hiernet::label::Label;
use hiernet::oracle::{diametral_pair, distance_digits};
use hiernet::{analytic_report, enumerate_edges, Params, DEFAULT_CAP};

fn grid(limit: u64) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 2..=5u32 {
        let mut k = 1;
        while u64::from(n).pow(k) <= limit {
            out.push(Params::new(n, k).unwrap());
            k += 1;
        }
    }
    out
}

#[test]
fn every_metric_matches_its_closed_form() {
    for p in grid(4096) {
        let graph = enumerate_edges(&p, DEFAULT_CAP).unwrap();
        let analytic = analytic_report(&p).unwrap();
        let empirical = empirical_report(&graph).unwrap();
        for (metric, ok) in match_metrics(&analytic, &empirical).unwrap() {
            assert!(ok, "{p}: {metric}");
        }
        assert_eq!((empirical.radius, empirical.diameter), (p.k(), 2 * p.k() - 1));
        assert_eq!(empirical.root_eccentricity, p.k());
        let hist_sum: u64 = empirical.degree_histogram.iter().map(|(d, c)| d * c).sum();
        assert_eq!(hist_sum, 2 * empirical.size);
        if empirical.triples > 0 {
            let t = BigRational::new(BigInt::from(3 * empirical.triangles), BigInt::from(empirical.triples));
            assert_eq!(empirical.transitivity, t);
        }
    }
}

#[test]
fn oracle_equals_bfs_on_all_pairs() {
    for p in grid(2048) {
        let graph = enumerate_edges(&p, DEFAULT_CAP).unwrap();
        let order = graph.order() as u64;
        let labels: Vec<Vec<u32>> = (0..order).map(|id| Label::from_id(id, &p).unwrap().into_digits()).collect();
        let mut max = 0;
        for (u, x) in labels.iter().enumerate() {
            let bfs = bfs_distances(&graph, u as u32);
            for (v, y) in labels.iter().enumerate() {
                let d = distance_digits(x, y);
                assert_eq!(d, bfs[v], "{p}: {x:?} {y:?}");
                max = max.max(d);
            }
        }
        assert_eq!(max, 2 * p.k() - 1, "{p}");
        let (a, b) = diametral_pair(&p);
        assert_eq!(distance_digits(a.digits(), b.digits()), max);
    }
}

#[test]
fn innermost_peripherals_have_unit_clustering() {
    for p in grid(4096).into_iter().filter(|p| p.n() >= 3 && p.k() >= 2) {
        let graph = enumerate_edges(&p, DEFAULT_CAP).unwrap();
        let e = empirical_report(&graph).unwrap();
        for id in 0..graph.order() as u64 {
            let x = Label::from_id(id, &p).unwrap();
            if hiernet::classify(&x, &p).unwrap() == VertexClass::SubPeripheral(p.k() - 1) {
                assert_eq!(*e.per_vertex_clustering[id as usize].numer(), *e.per_vertex_clustering[id as usize].denom());
            }
        }
    }
}
