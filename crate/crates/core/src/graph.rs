use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::adjacency::for_each_neighbor;
use crate::error::{HkError, Result};
use crate::label::{digits_to_id, Label};
use crate::params::Params;

pub type VertexId = u32;

/// Immutable materialized graph: sorted edge list (u < v) plus CSR adjacency
/// with sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphView {
    params: Params,
    edges: Vec<(VertexId, VertexId)>,
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl GraphView {
    /// Builds from an arbitrary edge list over the n^k vertices of `params`.
    /// Endpoints are normalized to u < v; self-loops and duplicates are errors.
    pub fn from_edges(params: Params, mut edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let order = params.materializable(u64::from(u32::MAX))?;
        for (i, e) in edges.iter_mut().enumerate() {
            if e.0 == e.1 {
                return Err(HkError::EdgeList { line: i + 1, msg: format!("self-loop at {}", e.0) });
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            if e.1 as usize >= order {
                return Err(HkError::IdOutOfRange { id: e.1.into(), order: order.to_string() });
            }
        }
        edges.par_sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(HkError::EdgeList { line: 0, msg: format!("duplicate edge {} {}", w[0].0, w[0].1) });
        }
        Ok(Self::from_sorted(params, order, edges))
    }

    fn from_sorted(params: Params, order: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut degree = vec![0usize; order];
        for &(u, v) in &edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(order + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..order].to_vec();
        let mut targets = vec![0; offsets[order]];
        // Two passes over (u, v)-sorted edges: lower neighbors first, then
        // higher ones, each ascending.
        for &(u, v) in &edges {
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for &(u, v) in &edges {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
        }
        GraphView { params, edges, offsets, targets }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges with both endpoints in `vertices`, relabeled by position in it.
    pub fn induced_edges(&self, vertices: &[VertexId]) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    out.insert((a, b));
                }
            }
        }
        out
    }

    /// Quotient by the partition into copies named by prefixes of length
    /// `level`; merged multi-edges, dropped loops. The result lives on
    /// n^level vertices.
    pub fn collapse(&self, level: u32) -> Result<GraphView> {
        let k = self.params.k();
        if level < 1 || level >= k {
            return Err(HkError::CollapseLevel { level, max: k - 1 });
        }
        let quotient = self.params.with_depth(level)?;
        let block = u64::from(self.params.n()).pow(k - level);
        let merged: BTreeSet<(VertexId, VertexId)> = self
            .edges
            .iter()
            .map(|&(u, v)| ((u64::from(u) / block) as VertexId, (u64::from(v) / block) as VertexId))
            .filter(|(a, b)| a != b)
            .collect();
        let order = quotient.materializable(u64::from(u32::MAX))?;
        Ok(Self::from_sorted(quotient, order, merged.into_iter().collect()))
    }
}

/// Materializes H(n,k) by the recursive construction: n shifted copies of the
/// previous level, then the root-to-peripheral star and the clique on the
/// nonzero copy roots.
pub fn enumerate_edges(params: &Params, cap: u64) -> Result<GraphView> {
    let order = params.materializable(cap)?;
    let n = params.n();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let mut block: VertexId = n;
    for _level in 2..=params.k() {
        let previous = edges.len();
        for alpha in 1..n {
            let shift = alpha * block;
            for i in 0..previous {
                let (u, v) = edges[i];
                edges.push((u + shift, v + shift));
            }
        }
        // root 0…0 ~ every label with no zero digit
        for v in all_nonzero_ids(n, block * n) {
            edges.push((0, v));
        }
        for a in 1..n {
            for b in a + 1..n {
                edges.push((a * block, b * block));
            }
        }
        block *= n;
    }
    debug_assert_eq!(block as usize, order);
    edges.par_sort_unstable();
    Ok(GraphView::from_sorted(*params, order, edges))
}

fn all_nonzero_ids(n: VertexId, order: VertexId) -> impl Iterator<Item = VertexId> {
    (0..order).filter(move |&v| {
        let mut x = v;
        let mut block = order / n;
        while block > 0 {
            if (x / block).is_multiple_of(n) {
                return false;
            }
            x %= block;
            block /= n;
        }
        true
    })
}

/// Materializes H(n,k) from the pairwise adjacency rules, one vertex at a
/// time through the rule-driven neighbor generator.
pub fn from_rules(params: &Params, cap: u64) -> Result<GraphView> {
    let order = params.materializable(cap)?;
    let n = params.n();
    let mut edges: Vec<(VertexId, VertexId)> = (0..order as u64)
        .into_par_iter()
        .flat_map_iter(|u| {
            let x = Label::from_id(u, params).expect("id below order").into_digits();
            let mut out = Vec::new();
            for_each_neighbor(&x, n, |y| {
                let v = digits_to_id(y, n);
                if v > u {
                    out.push((u as VertexId, v as VertexId));
                }
            });
            out
        })
        .collect();
    edges.par_sort_unstable();
    Ok(GraphView::from_sorted(*params, order, edges))
}
