//! Line graphs and generalized line graphs of type (1,0,…,0).

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// `L(g)`: one vertex per edge of `g` (in [`Graph::edges`] order), two
/// vertices adjacent when their edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let mut adj = Vec::new();
    for i in 0..m {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                adj.push((i, j));
            }
        }
    }
    Graph::from_edges(m, adj)
}

/// `L(g)` extended by two nonadjacent vertices, both joined to every
/// line-graph vertex whose edge is incident with `root`.
///
/// The new vertices are `m` and `m + 1`, where `m` is the edge count of `g`.
pub fn generalized_line_graph_1(g: &Graph, root: usize) -> Result<Graph> {
    if root >= g.order() {
        return invalid(format!(
            "root {root} out of range for {} vertices",
            g.order()
        ));
    }
    let lg = line_graph(g)?;
    let m = lg.order();
    let mut edges: Vec<(usize, usize)> = lg.edges().collect();
    for (i, (a, b)) in g.edges().enumerate() {
        if a == root || b == root {
            edges.push((i, m));
            edges.push((i, m + 1));
        }
    }
    Graph::from_edges(m + 2, edges)
}
