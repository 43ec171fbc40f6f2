use std::io::Write;

use crate::error::Result;
use crate::graph::GraphView;
use crate::label::Label;

/// Undirected DOT document; vertices are named by their labels, listed in id
/// order, followed by the edges in edge-list order.
pub fn write_dot<W: Write>(graph: &GraphView, mut sink: W) -> Result<()> {
    let p = graph.params();
    let names: Vec<String> = (0..graph.order() as u64)
        .map(|id| Label::from_id(id, p).map(|l| l.render(p.n())))
        .collect::<Result<_>>()?;
    writeln!(sink, "graph \"H_{}_{}\" {{", p.n(), p.k())?;
    for name in &names {
        writeln!(sink, "  \"{name}\";")?;
    }
    for &(u, v) in graph.edges() {
        writeln!(sink, "  \"{}\" -- \"{}\";", names[u as usize], names[v as usize])?;
    }
    writeln!(sink, "}}")?;
    sink.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_edges;
    use crate::params::{Params, DEFAULT_CAP};

    fn dot(n: u32, k: u32) -> String {
        let g = enumerate_edges(&Params::new(n, k).unwrap(), DEFAULT_CAP).unwrap();
        let mut buf = Vec::new();
        write_dot(&g, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn k2() {
        assert_eq!(dot(2, 1), "graph \"H_2_1\" {\n  \"0\";\n  \"1\";\n  \"0\" -- \"1\";\n}\n");
    }

    #[test]
    fn counts() {
        assert_eq!(dot(4, 1).matches(" -- ").count(), 6);
        let d = dot(3, 2);
        assert_eq!(d.matches(" -- ").count(), 14);
        let nodes: Vec<&str> = d.lines().filter(|l| l.ends_with(';') && !l.contains("--")).collect();
        assert_eq!(nodes.len(), 9);
        assert_eq!(nodes[0].trim(), "\"00\";");
        assert_eq!(nodes[8].trim(), "\"22\";");
        assert_eq!(d, dot(3, 2));
    }
}
