//! Bundled self-checks: every closed form and the distance oracle against
//! brute force on one materialized graph.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::adjacency::AdjacencyRule;
use crate::analytic::{analytic_report, class_census};
use crate::classify::classify_digits;
use crate::empirical::{bfs_distances, empirical_report, match_metrics};
use crate::error::Result;
use crate::graph::{enumerate_edges, from_rules, GraphView, VertexId};
use crate::label::{common_prefix_len, render_digits, Label};
use crate::oracle::{diametral_pair, distance, distance_digits};
use crate::params::Params;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Counterexample on failure, short summary on success.
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, failure: Option<String>, summary: impl Into<String>) -> Self {
        let passed = failure.is_none();
        CheckOutcome {
            name: name.into(),
            passed,
            detail: failure.unwrap_or_else(|| summary.into()),
        }
    }
}

fn labels(p: &Params, order: usize) -> Vec<Vec<u32>> {
    (0..order as u64)
        .map(|id| Label::from_id(id, p).map(Label::into_digits))
        .collect::<Result<_>>()
        .expect("ids below order")
}

pub fn run_all(p: &Params, cap: u64) -> Result<Vec<CheckOutcome>> {
    let graph = enumerate_edges(p, cap)?;
    let names = labels(p, graph.order());
    let n = p.n();
    let show = |v: VertexId| render_digits(&names[v as usize], n);
    let mut out = Vec::new();

    let by_rules = from_rules(p, cap)?;
    let diff = graph
        .edges()
        .iter()
        .zip(by_rules.edges())
        .find(|(a, b)| a != b)
        .map(|(a, b)| format!("recursive {}–{} vs rules {}–{}", show(a.0), show(a.1), show(b.0), show(b.1)))
        .or_else(|| {
            (graph.size() != by_rules.size())
                .then(|| format!("{} recursive edges vs {} by rules", graph.size(), by_rules.size()))
        });
    out.push(CheckOutcome::new("construction equivalence", diff, format!("{} edges", graph.size())));

    let overlap = graph.edges().iter().find_map(|&(u, v)| {
        let (x, y) = (&names[u as usize], &names[v as usize]);
        let hits = AdjacencyRule::ALL.iter().filter(|r| r.matches(x, y)).count();
        (hits != 1).then(|| format!("{}–{} matches {hits} rules", show(u), show(v)))
    });
    out.push(CheckOutcome::new("rule disjointness", overlap, "one rule per edge"));

    out.push(census_check(p, &graph, &names)?);

    let analytic = analytic_report::<BigInt>(p)?;
    let empirical = empirical_report(&graph)?;
    for (metric, ok) in match_metrics(&analytic, &empirical)? {
        let failure = (!ok).then(|| format!("{metric} differs from its closed form"));
        out.push(CheckOutcome::new(format!("metric {metric}"), failure, "exact match"));
    }

    out.push(oracle_check(&graph, &names));

    let (x, y) = diametral_pair(p);
    let d = distance(&x, &y, p)?;
    let bfs = bfs_distances(&graph, x.to_id(p)? as VertexId)[y.to_id(p)? as usize];
    let failure = (d != 2 * p.k() - 1 || bfs != d).then(|| {
        format!("{}–{}: oracle {d}, bfs {bfs}, expected {}", x.render(n), y.render(n), 2 * p.k() - 1)
    });
    out.push(CheckOutcome::new("diametral pair", failure, format!("distance {d}")));

    for level in 1..p.k() {
        let quotient = graph.collapse(level)?;
        let expected = enumerate_edges(&p.with_depth(level)?, cap)?;
        let failure = (quotient != expected).then(|| format!("collapse at level {level} differs from H({n},{level})"));
        out.push(CheckOutcome::new(format!("collapse level {level}"), failure, "edge-exact"));
    }
    Ok(out)
}

fn census_check(p: &Params, graph: &GraphView, names: &[Vec<u32>]) -> Result<CheckOutcome> {
    let rows = class_census::<BigInt>(p)?;
    let expected: BTreeMap<_, _> = rows.iter().map(|r| (r.class, (r.count.clone(), r.degree.clone()))).collect();
    let mut counts: BTreeMap<_, BigInt> = BTreeMap::new();
    let mut failure = None;
    for (v, x) in names.iter().enumerate() {
        let class = classify_digits(x);
        *counts.entry(class).or_default() += 1;
        let degree = BigInt::from(graph.degree(v as VertexId));
        if failure.is_none() && expected.get(&class).map(|e| &e.1) != Some(&degree) {
            failure = Some(format!("{} ({}) has degree {degree}", render_digits(x, p.n()), class.name()));
        }
    }
    if failure.is_none() {
        failure = expected
            .iter()
            .find(|(c, (count, _))| counts.get(c) != Some(count))
            .map(|(c, (count, _))| format!("{}: expected {count} vertices, found {:?}", c.name(), counts.get(c)));
    }
    Ok(CheckOutcome::new("class census", failure, format!("{} classes", rows.len())))
}

fn oracle_check(graph: &GraphView, names: &[Vec<u32>]) -> CheckOutcome {
    let k = graph.params().k() as usize;
    let n = graph.params().n();
    let failure = (0..graph.order() as VertexId)
        .into_par_iter()
        .find_map_first(|u| {
            let bfs = bfs_distances(graph, u);
            let x = &names[u as usize];
            names.iter().enumerate().find_map(|(v, y)| {
                let d = distance_digits(x, y);
                let i = common_prefix_len(x, y);
                let bound = (2 * (k - i)).saturating_sub(1) as u32;
                (d != bfs[v] || d > bound).then(|| {
                    format!(
                        "{}–{}: oracle {d}, bfs {}, bound {bound}",
                        render_digits(x, n),
                        render_digits(y, n),
                        bfs[v]
                    )
                })
            })
        });
    let pairs = graph.order() * graph.order();
    CheckOutcome::new("oracle = bfs", failure, format!("{pairs} ordered pairs"))
}
