//! Canonical labelling by partition refinement and backtracking.
//!
//! The unit partition is refined to an equitable ordered partition, then
//! a search tree individualizes one vertex of a non-singleton cell at a
//! time. Every leaf is a relabelling; the canonical code is the
//! lexicographically smallest upper-triangle bit string over the leaves
//! that survive pruning. Two prunings are used, both through
//! automorphisms that fix the current path pointwise: swaps of twin
//! vertices (equal neighbourhoods outside each other), and orbits of the
//! automorphisms discovered so far at equal-code leaves.

use std::cmp::Ordering;

use crate::bitset::VertexSet;
use crate::graph::{ones, Graph};

/// Upper triangle of a relabelled adjacency matrix, packed row by row
/// (pairs `(0,1), (0,2), …, (1,2), …`), most significant bit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonCode {
    n: usize,
    words: Vec<u64>,
}

impl CanonCode {
    /// Code of `g` under its current labelling.
    pub fn of_labelled(g: &Graph) -> CanonCode {
        let inv: Vec<usize> = (0..g.order()).collect();
        CanonCode {
            n: g.order(),
            words: code_words(g, &inv),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The graph this code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let mut rows = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.words[k / 64] >> (63 - k % 64) & 1 == 1 {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `perm[v]` is the canonical label of vertex `v`.
    pub perm: Vec<usize>,
    pub code: CanonCode,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        self.code.to_graph()
    }
}

fn code_words(g: &Graph, inv: &[usize]) -> Vec<u64> {
    let n = inv.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; bits.div_ceil(64)];
    let mut k = 0;
    for i in 0..n {
        let row = g.row(inv[i]);
        for &w in &inv[i + 1..] {
            if row.contains(w) {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

/// Splits cells of an ordered partition until every vertex of a cell has
/// the same neighbour count into every cell.
fn refine(g: &Graph, mut cells: Vec<VertexSet>) -> Vec<VertexSet> {
    let n = g.order();
    loop {
        let mut next = Vec::with_capacity(n);
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = ones(cell)
                .map(|v| {
                    let r = g.row(v);
                    (cells.iter().map(|&c| (r & c).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut current = VertexSet::EMPTY;
            for idx in 0..keyed.len() {
                if idx > 0 && keyed[idx].0 != keyed[idx - 1].0 {
                    next.push(current);
                    current = VertexSet::EMPTY;
                }
                current.insert(keyed[idx].1);
            }
            next.push(current);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Leaf {
    words: Vec<u64>,
    perm: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

impl<'a> Search<'a> {
    fn twins(&self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.g.row(u), self.g.row(v));
        ru & !VertexSet::single(v) == rv & !VertexSet::single(u)
    }

    /// Whether some stored automorphism fixing `path` pointwise joins the
    /// orbits of `u` and `v`.
    fn same_orbit(&self, u: usize, v: usize, path: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().any(|&x| gamma[x] != x) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        any && find(&mut parent, u) == find(&mut parent, v)
    }

    fn leaf(&mut self, cells: &[VertexSet]) {
        let n = self.g.order();
        let inv: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut perm = vec![0; n];
        for (pos, &v) in inv.iter().enumerate() {
            perm[v] = pos;
        }
        let words = code_words(self.g, &inv);

        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.words == words {
                if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                    let mut ref_inv = vec![0; n];
                    for (v, &pos) in reference.perm.iter().enumerate() {
                        ref_inv[pos] = v;
                    }
                    let gamma: Vec<usize> = (0..n).map(|v| ref_inv[perm[v]]).collect();
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.automorphisms.push(gamma);
                    }
                }
                return;
            }
        }

        let leaf = Leaf { words, perm };
        if self.first.is_none() {
            self.first = Some(Leaf {
                words: leaf.words.clone(),
                perm: leaf.perm.clone(),
            });
        }
        match &self.best {
            Some(b) if b.words.cmp(&leaf.words) != Ordering::Greater => {}
            _ => self.best = Some(leaf),
        }
    }

    fn dfs(&mut self, cells: Vec<VertexSet>, path: &mut Vec<usize>) {
        if cells.len() == self.g.order() {
            self.leaf(&cells);
            return;
        }
        let (target, cell) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, &c)| (i, c))
            .expect("non-discrete partition has a non-singleton cell");

        let mut explored: Vec<usize> = Vec::new();
        for v in ones(cell) {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if explored.iter().any(|&u| self.same_orbit(u, v, path)) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(VertexSet::single(v));
            child.push(cell & !VertexSet::single(v));
            child.extend_from_slice(&cells[target + 1..]);
            let child = refine(self.g, child);
            path.push(v);
            self.dfs(child, path);
            path.pop();
        }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm {
            perm: Vec::new(),
            code: CanonCode {
                n: 0,
                words: Vec::new(),
            },
        };
    }
    let unit = crate::graph::low_mask(n);
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let start = refine(g, vec![unit]);
    search.dfs(start, &mut Vec::new());
    let best = search.best.expect("search reaches at least one leaf");
    CanonicalForm {
        perm: best.perm,
        code: CanonCode {
            n,
            words: best.words,
        },
    }
}

pub fn canonical_code(g: &Graph) -> CanonCode {
    canonical_form(g).code
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (cg, ch) = (g.counts(), h.counts());
    if cg.degrees != ch.degrees || cg.triangles != ch.triangles {
        return false;
    }
    canonical_code(g) == canonical_code(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, pineapple};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    fn shuffled(rng: &mut impl Rng, g: &Graph) -> Graph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        g.relabel(&perm).unwrap()
    }

    #[test]
    fn perm_maps_graph_onto_code() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 0..12 {
            let g = random_graph(&mut rng, n, 0.4);
            let cf = canonical_form(&g);
            let relabelled = g.relabel(&cf.perm).unwrap();
            assert_eq!(CanonCode::of_labelled(&relabelled), cf.code);
            assert_eq!(cf.graph(), relabelled);
        }
    }

    #[test]
    fn code_is_relabelling_invariant() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let mut graphs = vec![
            Graph::empty(10).unwrap(),
            Graph::complete(10).unwrap(),
            Graph::cycle(12).unwrap(),
            pineapple(5, 4).unwrap(),
            disjoint_union(&Graph::cycle(5).unwrap(), &Graph::cycle(5).unwrap()).unwrap(),
            petersen(),
        ];
        for n in [6, 9, 13, 16] {
            graphs.push(random_graph(&mut rng, n, 0.5));
        }
        for g in &graphs {
            let code = canonical_code(g);
            for _ in 0..50 {
                assert_eq!(canonical_code(&shuffled(&mut rng, g)), code);
            }
        }
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn distinguishes_small_graphs() {
        assert!(!isomorphic(
            &Graph::complete(3).unwrap(),
            &Graph::path(3).unwrap()
        ));
        // same degree sequence, different structure
        let c6 = Graph::cycle(6).unwrap();
        let two_triangles =
            disjoint_union(&Graph::cycle(3).unwrap(), &Graph::cycle(3).unwrap()).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&two_triangles));
    }
}
