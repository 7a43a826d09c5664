//! Simple undirected graphs stored as rows of bit sets.
//!
//! A [`Graph`] is an immutable value: every builder and structural
//! operation returns a fresh graph. Vertices are always labelled densely
//! `0..n`, and each adjacency row is a [`VertexSet`], so graphs are limited
//! to [`MAX_VERTICES`] vertices.

use std::fmt;

use crate::bitset::{VertexSet, CAPACITY};
use crate::error::{invalid, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = CAPACITY;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

/// The elementary graph families accepted by [`build_basic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Complete,
    /// `size` is the number of leaves; the centre is vertex 0.
    Star,
    Path,
    Cycle,
    Empty,
}

/// Elementary counts of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counts {
    pub edges: usize,
    pub triangles: usize,
    /// Vertex degrees, non-increasing.
    pub degrees: Vec<usize>,
    /// Component orders, non-increasing.
    pub components: Vec<usize>,
    pub connected: bool,
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return invalid(format!(
            "{n} vertices exceeds the maximum of {MAX_VERTICES}"
        ));
    }
    Ok(())
}

#[inline]
fn bit(v: usize) -> VertexSet {
    VertexSet::single(v)
}

/// Mask of the first `n` vertices.
#[inline]
pub(crate) fn low_mask(n: usize) -> VertexSet {
    VertexSet::below(n)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph {
            n,
            rows: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u}, {v}) out of range for {n} vertices"));
            }
            if u == v {
                return invalid(format!("loop at vertex {u}"));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (i, &r) in rows.iter().enumerate() {
            if !(r & !mask).is_empty() {
                return invalid(format!("row {i} has bits beyond vertex {}", n - 1));
            }
            if r.contains(i) {
                return invalid(format!("loop at vertex {i}"));
            }
            for j in ones(r) {
                if !rows[j].contains(i) {
                    return invalid(format!("asymmetric adjacency between {i} and {j}"));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    /// Callers guarantee the rows are symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(rows: Vec<VertexSet>) -> Graph {
        Graph {
            n: rows.len(),
            rows,
        }
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let mask = low_mask(n);
        Ok(Graph {
            n,
            rows: (0..n).map(|v| mask & !bit(v)).collect(),
        })
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return invalid(format!("a cycle needs at least 3 vertices, got {n}"));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ones(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        ones(self.rows[v])
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for (u, v) in self.edges() {
            t += (self.rows[u] & self.rows[v] & !low_mask(v + 1)).count_ones() as usize;
        }
        t
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in ones(frontier) {
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn counts(&self) -> Counts {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let mut components: Vec<usize> = self
            .components()
            .iter()
            .map(|c| c.count_ones() as usize)
            .collect();
        components.sort_unstable_by(|a, b| b.cmp(a));
        Counts {
            edges: self.edge_count(),
            triangles: self.triangle_count(),
            degrees,
            connected: components.len() == 1,
            components,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return invalid(format!(
                "permutation has length {} but the graph has {} vertices",
                perm.len(),
                self.n
            ));
        }
        let mut hit = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || hit.contains(p) {
                return invalid("not a permutation");
            }
            hit.insert(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            let mut r = VertexSet::EMPTY;
            for v in ones(self.rows[u]) {
                r.insert(perm[v]);
            }
            rows[perm[u]] = r;
        }
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut hit = VertexSet::EMPTY;
        for &v in vertices {
            if v >= self.n {
                return invalid(format!("vertex {v} out of range for {} vertices", self.n));
            }
            if hit.contains(v) {
                return invalid(format!("vertex {v} listed twice"));
            }
            hit.insert(v);
        }
        let m = vertices.len();
        let mut rows = vec![VertexSet::EMPTY; m];
        for i in 0..m {
            for j in 0..m {
                if self.has_edge(vertices[i], vertices[j]) {
                    rows[i].insert(j);
                }
            }
        }
        Ok(Graph { n: m, rows })
    }

    /// The graph with vertex `v` removed; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep).expect("indices in range")
    }

    /// Adds vertex `n` adjacent to the vertices in `neighbours`.
    pub(crate) fn with_vertex(&self, neighbours: VertexSet) -> Graph {
        let n = self.n;
        let mut rows = Vec::with_capacity(n + 1);
        for u in 0..n {
            let mut r = self.rows[u];
            if neighbours.contains(u) {
                r.insert(n);
            }
            rows.push(r);
        }
        rows.push(neighbours);
        Graph { n: n + 1, rows }
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        Graph {
            n: self.n,
            rows: (0..self.n)
                .map(|v| !self.rows[v] & mask & !bit(v))
                .collect(),
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Adjacency matrix as rows of 0/1 integers.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Iterates the set bits of `mask`, lowest first.
#[inline]
pub(crate) fn ones(mask: VertexSet) -> impl Iterator<Item = usize> {
    mask.iter()
}

/// Builds one of the elementary families. A negative `size` is rejected.
pub fn build_basic(kind: BasicKind, size: i64) -> Result<Graph> {
    if size < 0 {
        return invalid(format!("size must be non-negative, got {size}"));
    }
    let size = size as usize;
    match kind {
        BasicKind::Complete => Graph::complete(size),
        BasicKind::Star => {
            if size == 0 {
                return invalid("a star needs at least one leaf");
            }
            Graph::star(size)
        }
        BasicKind::Path => Graph::path(size),
        BasicKind::Cycle => Graph::cycle(size),
        BasicKind::Empty => Graph::empty(size),
    }
}

/// Identifies vertex `u` of `g` with vertex `v` of `h`.
///
/// The merged vertex keeps label `u`; the remaining vertices of `h` follow
/// those of `g` in their original order.
pub fn coalesce(g: &Graph, u: usize, h: &Graph, v: usize) -> Result<Graph> {
    if u >= g.n {
        return invalid(format!("vertex {u} out of range for {} vertices", g.n));
    }
    if v >= h.n {
        return invalid(format!("vertex {v} out of range for {} vertices", h.n));
    }
    let n = g.n + h.n - 1;
    check_order(n)?;
    let map = |w: usize| -> usize {
        match w.cmp(&v) {
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Less => g.n + w,
            std::cmp::Ordering::Greater => g.n + w - 1,
        }
    };
    let edges = g.edges().chain(h.edges().map(|(a, b)| (map(a), map(b))));
    Graph::from_edges(n, edges.collect::<Vec<_>>())
}

/// `g + h`: block-diagonal adjacency, vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n + h.n;
    check_order(n)?;
    let mut rows = g.rows.clone();
    rows.extend(
        h.rows
            .iter()
            .map(|r| r.iter().map(|v| v + g.n).collect::<VertexSet>()),
    );
    Ok(Graph { n, rows })
}

pub fn add_isolated(g: &Graph, t: usize) -> Result<Graph> {
    disjoint_union(g, &Graph::empty(t)?)
}

/// The pineapple graph: `K_p` with `q` pendant edges at one vertex.
///
/// Vertex 0 is the apex, `1..p` the rest of the clique, and `p..p+q` the
/// pendant vertices.
pub fn pineapple(p: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 1 {
        return invalid(format!(
            "pineapple needs p >= 3 and q >= 1, got p = {p}, q = {q}"
        ));
    }
    coalesce(&Graph::complete(p)?, 0, &Graph::star(q)?, 0)
}

/// `K_n \ K_m`: the complete graph on `n` vertices with the edges among the
/// first `m` vertices removed.
pub fn complete_minus_clique(n: usize, m: usize) -> Result<Graph> {
    if m < 1 || m >= n {
        return invalid(format!("K_n \\ K_m needs 1 <= m < n, got n = {n}, m = {m}"));
    }
    let mut g = Graph::complete(n)?;
    let clique = low_mask(m);
    for v in 0..m {
        g.rows[v] &= !clique;
    }
    Ok(g)
}
