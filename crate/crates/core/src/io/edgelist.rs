use std::io::{BufRead, Write};

use crate::error::{HkError, Result};
use crate::graph::{GraphView, VertexId};
use crate::params::Params;

/// `# hiernet n=<n> k=<k> vertices=<n^k> edges=<|E|>` followed by one
/// `<u> <v>` line per edge, u < v, ascending.
pub fn write_edgelist<W: Write>(graph: &GraphView, mut sink: W) -> Result<()> {
    let p = graph.params();
    writeln!(
        sink,
        "# hiernet n={} k={} vertices={} edges={}",
        p.n(),
        p.k(),
        graph.order(),
        graph.size()
    )?;
    for &(u, v) in graph.edges() {
        writeln!(sink, "{u} {v}")?;
    }
    sink.flush()?;
    Ok(())
}

fn bad(line: usize, msg: impl Into<String>) -> HkError {
    HkError::EdgeList { line, msg: msg.into() }
}

fn parse_header(line: &str) -> Result<(Params, u64, u64)> {
    let rest = line
        .strip_prefix("# hiernet ")
        .ok_or_else(|| bad(1, "missing `# hiernet` header"))?;
    let mut fields = [None; 4];
    for token in rest.split_whitespace() {
        let (key, value) = token.split_once('=').ok_or_else(|| bad(1, format!("malformed field {token:?}")))?;
        let slot = match key {
            "n" => 0,
            "k" => 1,
            "vertices" => 2,
            "edges" => 3,
            _ => return Err(bad(1, format!("unknown field {key:?}"))),
        };
        let value: u64 = value.parse().map_err(|_| bad(1, format!("bad number in {token:?}")))?;
        if fields[slot].replace(value).is_some() {
            return Err(bad(1, format!("repeated field {key:?}")));
        }
    }
    let [Some(n), Some(k), Some(vertices), Some(edges)] = fields else {
        return Err(bad(1, "header needs n, k, vertices and edges"));
    };
    let params = Params::validate(n, k)?;
    if params.order_u64() != Some(vertices) {
        return Err(bad(1, format!("vertices={vertices} but n^k = {}", params.order())));
    }
    Ok((params, vertices, edges))
}

/// Inverse of [`write_edgelist`]; validates header counts, id ranges and
/// duplicates.
pub fn read_edgelist<R: BufRead>(source: R) -> Result<GraphView> {
    let mut lines = source.lines();
    let header = lines.next().ok_or_else(|| bad(1, "empty input"))??;
    let (params, vertices, expected) = parse_header(header.trim_end())?;
    if vertices > u64::from(u32::MAX) {
        return Err(HkError::BudgetExceeded { order: vertices.to_string(), cap: u32::MAX.into() });
    }
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line?;
        let number = idx + 2;
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let mut endpoint = || -> Result<VertexId> {
            let text = parts.next().ok_or_else(|| bad(number, "expected two ids"))?;
            let id: u64 = text.parse().map_err(|_| bad(number, format!("bad id {text:?}")))?;
            if id >= vertices {
                return Err(HkError::IdOutOfRange { id, order: vertices.to_string() });
            }
            Ok(id as VertexId)
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if parts.next().is_some() {
            return Err(bad(number, "trailing data"));
        }
        edges.push((u, v));
    }
    if edges.len() as u64 != expected {
        return Err(bad(0, format!("header says {expected} edges, found {}", edges.len())));
    }
    GraphView::from_edges(params, edges)
}
