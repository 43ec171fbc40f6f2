//! Brute-force measurements on a materialized graph. These are the
//! independent oracle for every closed form.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use rayon::prelude::*;

use crate::analytic::AnalyticReport;
use crate::classify::classify_digits;
use crate::error::{HkError, Result};
use crate::graph::{GraphView, VertexId};
use crate::label::Label;
use crate::params::Params;

pub const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eccentricities {
    pub per_vertex: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleCensus {
    pub triangles: u64,
    pub triples: u64,
    pub transitivity: Ratio<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalReport {
    pub params: Params,
    pub order: u64,
    pub size: u64,
    pub degree_histogram: BTreeMap<u64, u64>,
    pub radius: u32,
    pub diameter: u32,
    pub root_eccentricity: u32,
    pub per_vertex_clustering: Vec<Ratio<u64>>,
    pub clustering_coefficient: BigRational,
    pub triangles: u64,
    pub triples: u64,
    pub transitivity: BigRational,
}

/// Hop distances from `source`; [`UNREACHED`] marks unreachable vertices.
pub fn bfs_distances(graph: &GraphView, source: VertexId) -> Vec<u32> {
    let mut dist = vec![UNREACHED; graph.order()];
    let mut queue = VecDeque::new();
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u as usize] + 1;
        for &v in graph.neighbors(u) {
            if dist[v as usize] == UNREACHED {
                dist[v as usize] = next;
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn eccentricity(graph: &GraphView, source: VertexId) -> Result<u32> {
    let dist = bfs_distances(graph, source);
    match dist.iter().position(|&d| d == UNREACHED) {
        Some(v) => Err(HkError::Disconnected(v as VertexId)),
        None => Ok(dist.into_iter().max().unwrap_or(0)),
    }
}

/// Exact eccentricity of every vertex by one BFS per source.
pub fn bfs_eccentricities(graph: &GraphView) -> Result<Eccentricities> {
    let per_vertex = (0..graph.order() as VertexId)
        .into_par_iter()
        .map(|v| eccentricity(graph, v))
        .collect::<Result<Vec<u32>>>()?;
    Ok(Eccentricities {
        radius: per_vertex.iter().copied().min().unwrap_or(0),
        diameter: per_vertex.iter().copied().max().unwrap_or(0),
        per_vertex,
    })
}

fn intersection_count(a: &[VertexId], b: &[VertexId]) -> u64 {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Edges among the neighbors of `v`.
pub fn neighbor_edges(graph: &GraphView, v: VertexId) -> u64 {
    let nv = graph.neighbors(v);
    nv.iter().map(|&u| intersection_count(nv, graph.neighbors(u))).sum::<u64>() / 2
}

fn choose2(d: u64) -> u64 {
    d * d.saturating_sub(1) / 2
}

/// Fraction of neighbor pairs that are adjacent; 0 for degree below 2.
pub fn local_clustering(graph: &GraphView, v: VertexId) -> Ratio<u64> {
    let pairs = choose2(graph.degree(v) as u64);
    if pairs == 0 {
        return Ratio::from_integer(0);
    }
    Ratio::new(neighbor_edges(graph, v), pairs)
}

/// Each triangle u < v < w is counted once, from its edge (u, v), by
/// intersecting the neighbor lists above v.
pub fn triangle_and_triple_census(graph: &GraphView) -> TriangleCensus {
    let triangles = graph
        .edges()
        .par_iter()
        .map(|&(u, v)| {
            let a = upper(graph.neighbors(u), v);
            let b = upper(graph.neighbors(v), v);
            intersection_count(a, b)
        })
        .sum::<u64>();
    let triples = (0..graph.order() as VertexId)
        .map(|v| choose2(graph.degree(v) as u64))
        .sum::<u64>();
    let transitivity = if triples == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(3 * triangles, triples)
    };
    TriangleCensus {
        triangles,
        triples,
        transitivity,
    }
}

fn upper(list: &[VertexId], above: VertexId) -> &[VertexId] {
    &list[list.partition_point(|&w| w <= above)..]
}

pub fn degree_histogram(graph: &GraphView) -> BTreeMap<u64, u64> {
    let mut h = BTreeMap::new();
    for v in 0..graph.order() as VertexId {
        *h.entry(graph.degree(v) as u64).or_insert(0) += 1;
    }
    h
}

pub(crate) fn big_ratio(r: &Ratio<u64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

pub fn empirical_report(graph: &GraphView) -> Result<EmpiricalReport> {
    let ecc = bfs_eccentricities(graph)?;
    let per_vertex_clustering: Vec<Ratio<u64>> = (0..graph.order() as VertexId)
        .into_par_iter()
        .map(|v| local_clustering(graph, v))
        .collect();
    // few distinct values: aggregate by value before the exact sum
    let mut by_value: BTreeMap<Ratio<u64>, u64> = BTreeMap::new();
    for c in &per_vertex_clustering {
        *by_value.entry(*c).or_insert(0) += 1;
    }
    let total = by_value
        .iter()
        .fold(BigRational::zero(), |acc, (c, m)| acc + big_ratio(c) * BigInt::from(*m));
    let order = graph.order() as u64;
    let census = triangle_and_triple_census(graph);
    Ok(EmpiricalReport {
        params: *graph.params(),
        order,
        size: graph.size() as u64,
        degree_histogram: degree_histogram(graph),
        radius: ecc.radius,
        diameter: ecc.diameter,
        root_eccentricity: ecc.per_vertex[0],
        per_vertex_clustering,
        clustering_coefficient: total / BigInt::from(order),
        triangles: census.triangles,
        triples: census.triples,
        transitivity: big_ratio(&census.transitivity),
    })
}

/// Per-metric agreement between closed forms and measurements, in a fixed
/// order.
pub fn match_metrics(
    analytic: &AnalyticReport<BigInt>,
    empirical: &EmpiricalReport,
) -> Result<Vec<(&'static str, bool)>> {
    let (a, e) = (&analytic.params, &empirical.params);
    if a != e {
        return Err(HkError::ParamsMismatch(a.n(), a.k(), e.n(), e.k()));
    }
    let mut expected_hist: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    for row in &analytic.class_stats {
        *expected_hist.entry(row.degree.clone()).or_default() += &row.count;
    }
    let got_hist: BTreeMap<BigInt, BigInt> = empirical
        .degree_histogram
        .iter()
        .map(|(d, c)| (BigInt::from(*d), BigInt::from(*c)))
        .collect();
    let class_clustering: BTreeMap<_, _> = analytic
        .class_stats
        .iter()
        .map(|r| (r.class, r.clustering.clone()))
        .collect();
    let per_vertex = empirical.per_vertex_clustering.iter().enumerate().all(|(id, c)| {
        let x = Label::from_id(id as u64, a).expect("id within order");
        class_clustering.get(&classify_digits(x.digits())) == Some(&big_ratio(c))
    });
    Ok(vec![
        ("order", analytic.order == BigInt::from(empirical.order)),
        ("size", analytic.size == BigInt::from(empirical.size)),
        ("radius", analytic.radius == empirical.radius),
        ("diameter", analytic.diameter == empirical.diameter),
        ("root_eccentricity", analytic.root_eccentricity == empirical.root_eccentricity),
        ("degree_histogram", expected_hist == got_hist),
        ("per_vertex_clustering", per_vertex),
        ("clustering", analytic.clustering_coefficient == empirical.clustering_coefficient),
        ("triangles", analytic.triangles == BigInt::from(empirical.triangles)),
        ("triples", analytic.triples == BigInt::from(empirical.triples)),
        ("transitivity", analytic.transitivity == empirical.transitivity),
    ])
}
