//! Exhaustive enumeration of graphs up to isomorphism.
//!
//! Graphs are grown one vertex at a time. A graph on `n` vertices is
//! accepted as a child of a parent on `n - 1` vertices only if deleting
//! its canonical deletion vertex gives back the parent's class, so every
//! isomorphism class has exactly one parent class. The deletion vertex is
//! chosen among the vertices maximizing `(degree, sum of neighbour
//! degrees)`, breaking ties by the largest canonical label, which lets most
//! candidates be rejected before any canonical labelling is computed.
//!
//! The search tree is split into shards at the 5-vertex level. Shards run
//! in parallel; each shard's output is sorted by canonical code and shards
//! are emitted in the order of their 5-vertex roots, so the output does
//! not depend on the worker count.

mod ds;
mod lemma4;

pub use ds::{verify_ds, DsCertificate, DsVerdict};
pub use lemma4::{
    glg_variants, lemma4_audit, trees, Lemma4Case, Lemma4Report, Lemma4Row, MAX_AUDIT_ORDER,
};

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::canon::{canonical_code, canonical_form, CanonCode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::spectra::char_poly;

/// Default largest vertex count the census will attempt.
pub const DEFAULT_CEILING: usize = 10;

/// Hard limit imposed by the canonical-code representation in the census.
pub const MAX_CEILING: usize = 16;

const SHARD_LEVEL: usize = 5;

/// Optional constraints applied to every emitted graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filters {
    pub edges: Option<usize>,
    pub triangles: Option<usize>,
    /// Only connected graphs when set.
    pub connected: bool,
    /// Only graphs with exactly this characteristic polynomial.
    pub charpoly: Option<IntPolynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusQuery {
    pub n: usize,
    pub filters: Filters,
}

impl CensusQuery {
    pub fn all(n: usize) -> CensusQuery {
        CensusQuery {
            n,
            filters: Filters::default(),
        }
    }

    pub fn edges(mut self, e: usize) -> CensusQuery {
        self.filters.edges = Some(e);
        self
    }

    pub fn triangles(mut self, t: usize) -> CensusQuery {
        self.filters.triangles = Some(t);
        self
    }

    pub fn connected(mut self) -> CensusQuery {
        self.filters.connected = true;
        self
    }

    pub fn charpoly(mut self, p: IntPolynomial) -> CensusQuery {
        self.filters.charpoly = Some(p);
        self
    }

    /// Whether a graph on `level` vertices can still grow into a match.
    fn viable(&self, g: &Graph, level: usize) -> bool {
        let f = &self.filters;
        if let Some(e) = f.edges {
            let have = g.edge_count();
            // vertex j (0-based) joins with at most j edges
            let room: usize = (level..self.n).sum();
            if have > e || have + room < e {
                return false;
            }
        }
        if let Some(t) = f.triangles {
            if g.triangle_count() > t {
                return false;
            }
        }
        true
    }

    /// Structural filters on a complete graph (everything except the
    /// characteristic polynomial).
    fn accepts_structure(&self, g: &Graph) -> bool {
        let f = &self.filters;
        f.edges.is_none_or(|e| g.edge_count() == e)
            && f.triangles.is_none_or(|t| g.triangle_count() == t)
            && (!f.connected || g.is_connected())
    }
}

/// A census run: ceiling and worker count.
#[derive(Debug, Clone)]
pub struct Census {
    ceiling: usize,
    workers: Option<usize>,
}

impl Default for Census {
    fn default() -> Self {
        Census::new()
    }
}

/// Result of [`Census::scan`].
#[derive(Debug, Clone)]
pub struct Scan<T> {
    pub items: Vec<T>,
    /// Graphs that passed the structural filters.
    pub graphs_scanned: u64,
}

fn key(g: &Graph, v: usize) -> (u32, u32) {
    let r = g.row(v);
    let nsum = crate::graph::ones(r).map(|u| g.row(u).count_ones()).sum();
    (r.count_ones(), nsum)
}

/// Canonical children of `parent` (given with its canonical code), as
/// canonical graphs, restricted to graphs viable for `query`.
fn children(
    parent: &Graph,
    parent_code: &CanonCode,
    query: &CensusQuery,
) -> Vec<(CanonCode, Graph)> {
    let m = parent.order();
    let level = m + 1;
    let mut seen: HashSet<CanonCode> = HashSet::new();
    let mut out = Vec::new();
    for subset in 0..(1u64 << m) {
        let child = parent.with_vertex(VertexSet::from_bits(subset));
        if !query.viable(&child, level) {
            continue;
        }
        let new_key = key(&child, m);
        let keys: Vec<(u32, u32)> = (0..level).map(|v| key(&child, v)).collect();
        if keys.iter().any(|&k| k > new_key) {
            continue;
        }
        let cf = canonical_form(&child);
        let del = (0..level)
            .filter(|&v| keys[v] == new_key)
            .max_by_key(|&v| cf.perm[v])
            .expect("the new vertex is a candidate");
        if del != m && canonical_code(&child.remove_vertex(del)) != *parent_code {
            continue;
        }
        if seen.insert(cf.code.clone()) {
            out.push((cf.code.clone(), cf.graph()));
        }
    }
    out
}

/// All canonical descendants of `root` at level `query.n`, depth first.
fn descend(root: (CanonCode, Graph), query: &CensusQuery, out: &mut Vec<(CanonCode, Graph)>) {
    if root.1.order() == query.n {
        if query.accepts_structure(&root.1) {
            out.push(root);
        }
        return;
    }
    for child in children(&root.1, &root.0, query) {
        descend(child, query, out);
    }
}

impl Census {
    pub fn new() -> Census {
        Census {
            ceiling: DEFAULT_CEILING,
            workers: None,
        }
    }

    /// Raises or lowers the ceiling; values above [`MAX_CEILING`] are clamped.
    pub fn with_ceiling(mut self, ceiling: usize) -> Census {
        self.ceiling = ceiling.min(MAX_CEILING);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Census {
        self.workers = Some(workers.max(1));
        self
    }

    pub fn ceiling(&self) -> usize {
        self.ceiling
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.ceiling {
            return Err(Error::ResourceLimit {
                n,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }

    fn pool(&self) -> rayon::ThreadPool {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(w) = self.workers {
            b = b.num_threads(w);
        }
        b.build().expect("thread pool")
    }

    /// Shard roots in emission order.
    fn shard_roots(query: &CensusQuery) -> Vec<(CanonCode, Graph)> {
        let empty = Graph::empty(0).expect("empty graph");
        let mut level = vec![(canonical_code(&empty), empty)];
        if query.n <= SHARD_LEVEL {
            return level;
        }
        for _ in 0..SHARD_LEVEL {
            let mut next = Vec::new();
            for (code, g) in &level {
                next.extend(children(g, code, query));
            }
            level = next;
        }
        level.sort_by(|a, b| a.0.cmp(&b.0));
        level
    }

    /// Runs the census, mapping every structurally accepted graph through
    /// `map` on the workers and handing the kept values to `sink` in
    /// emission order. Returns the number of graphs that passed the
    /// structural filters.
    pub fn stream<T, F, S>(&self, query: &CensusQuery, map: F, mut sink: S) -> Result<u64>
    where
        T: Send,
        F: Fn(&Graph) -> Option<T> + Sync,
        S: FnMut(T),
    {
        self.check(query.n)?;
        let roots = Census::shard_roots(query);
        let target = query.filters.charpoly.as_ref();
        let pool = self.pool();
        let batch = pool.current_num_threads().max(1) * 4;
        let mut graphs_scanned = 0;
        for chunk in roots.chunks(batch) {
            let per_shard: Vec<(u64, Vec<T>)> = pool.install(|| {
                chunk
                    .par_iter()
                    .map(|root| {
                        let mut found = Vec::new();
                        descend(root.clone(), query, &mut found);
                        found.sort_by(|a, b| a.0.cmp(&b.0));
                        let kept = found
                            .iter()
                            .filter(|(_, g)| target.is_none_or(|p| &char_poly(g) == p))
                            .filter_map(|(_, g)| map(g))
                            .collect();
                        (found.len() as u64, kept)
                    })
                    .collect()
            });
            for (scanned, kept) in per_shard {
                graphs_scanned += scanned;
                kept.into_iter().for_each(&mut sink);
            }
        }
        Ok(graphs_scanned)
    }

    /// [`Census::stream`] collected into a vector.
    pub fn scan<T, F>(&self, query: &CensusQuery, map: F) -> Result<Scan<T>>
    where
        T: Send,
        F: Fn(&Graph) -> Option<T> + Sync,
    {
        let mut items = Vec::new();
        let graphs_scanned = self.stream(query, map, |t| items.push(t))?;
        Ok(Scan {
            items,
            graphs_scanned,
        })
    }

    /// One canonical representative per isomorphism class, in emission order.
    pub fn enumerate(&self, query: &CensusQuery) -> Result<Vec<Graph>> {
        Ok(self.scan(query, |g| Some(g.clone()))?.items)
    }

    pub fn count(&self, query: &CensusQuery) -> Result<usize> {
        let mut total = 0;
        self.stream(query, |_| Some(()), |_| total += 1)?;
        Ok(total)
    }
}

/// Number of isomorphism classes on `n` vertices matching the filters.
pub fn count_with_filter(
    n: usize,
    edges: Option<usize>,
    triangles: Option<usize>,
    connected: bool,
) -> Result<usize> {
    let mut q = CensusQuery::all(n);
    q.filters.edges = edges;
    q.filters.triangles = triangles;
    q.filters.connected = connected;
    Census::new().count(&q)
}

/// Enumerates with the default census.
pub fn enumerate_graphs(query: &CensusQuery) -> Result<Vec<Graph>> {
    Census::new().enumerate(query)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| Census::new().count(&CensusQuery::all(n)).unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn ceiling_is_enforced() {
        let c = Census::new().with_ceiling(4);
        assert_eq!(
            c.count(&CensusQuery::all(5)),
            Err(Error::ResourceLimit { n: 5, ceiling: 4 })
        );
    }

    #[test]
    fn filters() {
        assert_eq!(count_with_filter(3, Some(3), Some(1), true).unwrap(), 1);
        // connected graphs on 4 vertices
        assert_eq!(count_with_filter(4, None, None, true).unwrap(), 6);
        // trees on 6 vertices
        assert_eq!(count_with_filter(6, Some(5), None, true).unwrap(), 6);
    }

    #[test]
    fn output_is_independent_of_workers() {
        let q = CensusQuery::all(7).edges(9);
        let a = Census::new().with_workers(1).enumerate(&q).unwrap();
        let b = Census::new().with_workers(4).enumerate(&q).unwrap();
        assert_eq!(a, b);
    }
}
