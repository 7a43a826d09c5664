//! Slow, independent reference implementations used to check the library.
#![allow(dead_code)]

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use pineapple::{Graph, IntPolynomial};
use rand::Rng;

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
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

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det(xI - A)` by the Leibniz expansion over all permutations.
pub fn leibniz_char_poly(g: &Graph) -> IntPolynomial {
    let n = g.order();
    let entry = |i: usize, j: usize| -> IntPolynomial {
        if i == j {
            IntPolynomial::x()
        } else if g.has_edge(i, j) {
            IntPolynomial::from_i64s(&[-1])
        } else {
            IntPolynomial::zero()
        }
    };
    let mut total = IntPolynomial::zero();
    for perm in permutations(n) {
        let mut term = IntPolynomial::from_i64s(&[sign(&perm)]);
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &entry(i, j);
            if term.is_zero() {
                break;
            }
        }
        total = &total + &term;
    }
    total
}

/// Ascending eigenvalues from a floating-point symmetric solver.
pub fn float_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let m = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// Number of isomorphism classes of graphs on `n` vertices by counting
/// orbits of the symmetric group on labelled graphs.
pub fn burnside_count(n: usize) -> BigInt {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(n)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let factorial = |k: usize| -> BigInt { (1..=k).fold(BigInt::one(), |a, b| a * b) };
    let mut total = BigInt::zero();
    for parts in partitions(n, n) {
        let mut orbits = 0;
        for (i, &a) in parts.iter().enumerate() {
            orbits += a / 2;
            for &b in &parts[i + 1..] {
                orbits += gcd(a, b);
            }
        }
        let mut centralizer = BigInt::one();
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &a in &parts {
            centralizer *= a;
            *counts.entry(a).or_default() += 1;
        }
        for &m in counts.values() {
            centralizer *= factorial(m);
        }
        let class_size = factorial(n) / centralizer;
        total += class_size * (BigInt::one() << orbits);
    }
    total / factorial(n)
}

/// Adjacency rows of a labelled graph as bit masks.
type Rows = Vec<u32>;

/// Degree, sorted neighbour degrees and triangle count of each vertex.
type Invariants = Vec<(u32, Vec<u32>, u32)>;

fn vertex_invariants(rows: &Rows) -> Invariants {
    let n = rows.len();
    (0..n)
        .map(|v| {
            let deg = rows[v].count_ones();
            let mut nd: Vec<u32> = (0..n)
                .filter(|&u| rows[v] >> u & 1 == 1)
                .map(|u| rows[u].count_ones())
                .collect();
            nd.sort_unstable();
            let tri = (0..n)
                .filter(|&u| rows[v] >> u & 1 == 1)
                .map(|u| (rows[u] & rows[v]).count_ones())
                .sum::<u32>()
                / 2;
            (deg, nd, tri)
        })
        .collect()
}

/// Exhaustive search for an isomorphism, matching vertex invariants.
fn brute_isomorphic(a: &Rows, b: &Rows) -> bool {
    let n = a.len();
    let ia = vertex_invariants(a);
    let ib = vertex_invariants(b);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        v: usize,
        a: &Rows,
        b: &Rows,
        ia: &[(u32, Vec<u32>, u32)],
        ib: &[(u32, Vec<u32>, u32)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || ia[v] != ib[w] {
                continue;
            }
            let consistent = (0..v).all(|u| (a[v] >> u & 1) == (b[w] >> map[u] & 1));
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(v + 1, a, b, ia, ib, map, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    extend(0, a, b, &ia, &ib, &mut map, &mut used)
}

/// Isomorphism classes among all labelled graphs on `n` vertices, found
/// by brute-force isomorphism testing. Only labellings with non-increasing
/// degrees are examined, since every class has one.
pub fn labelled_class_representatives(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut buckets: HashMap<Invariants, Vec<Rows>> = HashMap::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rows: Rows = vec![0; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        if rows
            .windows(2)
            .any(|w| w[0].count_ones() < w[1].count_ones())
        {
            continue;
        }
        let mut key = vertex_invariants(&rows);
        key.sort();
        let reps = buckets.entry(key).or_default();
        if !reps.iter().any(|r| brute_isomorphic(r, &rows)) {
            reps.push(rows);
        }
    }
    buckets
        .into_values()
        .flatten()
        .map(|rows| {
            let mut edges = Vec::new();
            for (i, row) in rows.iter().enumerate() {
                for j in i + 1..n {
                    if row >> j & 1 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// All labelled trees on `n` vertices from their Prüfer sequences.
pub fn labelled_trees(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::empty(1).unwrap()];
    }
    if n == 2 {
        return vec![Graph::complete(2).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut seq = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            seq.push(c % n);
            c /= n;
        }
        let mut degree = vec![1; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(Graph::from_edges(n, edges).unwrap());
    }
    out
}

/// Edges of `g` as a list, each edge an unordered vertex pair.
pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

/// Line graph built directly from shared endpoints.
pub fn intersection_line_graph(g: &Graph) -> Graph {
    let e = edge_list(g);
    let mut adj = Vec::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let (a, b) = e[i];
            let (c, d) = e[j];
            if a == c || a == d || b == c || b == d {
                adj.push((i, j));
            }
        }
    }
    Graph::from_edges(e.len(), adj).unwrap()
}

/// Generalized line graph with one root: the line graph plus two new
/// vertices, each adjacent to exactly the edges that meet `root`.
pub fn intersection_glg(g: &Graph, root: usize) -> Graph {
    let e = edge_list(g);
    let m = e.len();
    let base = intersection_line_graph(g);
    let mut adj: Vec<(usize, usize)> = base.edges().collect();
    for (i, &(a, b)) in e.iter().enumerate() {
        if a == root || b == root {
            adj.push((i, m));
            adj.push((i, m + 1));
        }
    }
    Graph::from_edges(m + 2, adj).unwrap()
}

/// Coarsest equitable partition: recolour by the multiset of neighbour
/// colours until nothing splits.
pub fn colour_refinement(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour = vec![0usize; n];
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| distinct.binary_search(k).unwrap())
            .collect();
        let before = colour
            .iter()
            .collect::<std::collections::HashSet<_>>()
            .len();
        if distinct.len() == before {
            return next;
        }
        colour = next;
    }
}
