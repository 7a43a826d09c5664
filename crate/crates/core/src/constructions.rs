//! Closed-form characteristic polynomials and cospectral mates of pineapple
//! graphs.
//!
//! Two families of mates are built here. The first is a graph of order
//! `3k` (an independent `k`-set joined to two disjoint `k`-cliques) padded
//! with `k(k-1)` isolated vertices; it shares the spectrum of
//! `K_{2k}^{k^2}`. The second is `K_{p+r} \ K_{k+r} + K_k + k(k-2) K_1`,
//! which shares the spectrum of `K_p^{r(p-k)}` whenever
//! `r = k(k-1)/(p-k-1)` is a positive integer.

use crate::error::{invalid, Error, Result};
use crate::graph::{add_isolated, complete_minus_clique, disjoint_union, pineapple, Graph};
use crate::poly::{FactoredPoly, IntPolynomial};

fn x_plus_one() -> IntPolynomial {
    IntPolynomial::from_i64s(&[1, 1])
}

fn i(v: usize) -> i64 {
    i64::try_from(v).expect("parameter fits in i64")
}

fn count(v: usize) -> u32 {
    u32::try_from(v).expect("multiplicity fits in u32")
}

/// `x^{q-1} (x+1)^{p-2} (x^3 - (p-2)x^2 - (p+q-1)x + q(p-2))`.
pub fn pineapple_charpoly(p: usize, q: usize) -> Result<FactoredPoly> {
    if p < 3 || q < 1 {
        return invalid(format!(
            "pineapple needs p >= 3 and q >= 1, got p = {p}, q = {q}"
        ));
    }
    let (pi, qi) = (i(p), i(q));
    let cubic = IntPolynomial::from_i64s(&[qi * (pi - 2), -(pi + qi - 1), -(pi - 2), 1]);
    Ok(FactoredPoly::new(vec![
        (IntPolynomial::x(), count(q - 1)),
        (x_plus_one(), count(p - 2)),
        (cubic, 1),
    ]))
}

/// `x^{m-1} (x+1)^{n-m-1} (x^2 - (n-m-1)x - m(n-m))`, the characteristic
/// polynomial of `K_n \ K_m`.
pub fn knm_charpoly(n: usize, m: usize) -> Result<FactoredPoly> {
    if m < 1 || m >= n {
        return invalid(format!("K_n \\ K_m needs 1 <= m < n, got n = {n}, m = {m}"));
    }
    let (ni, mi) = (i(n), i(m));
    let quadratic = IntPolynomial::from_i64s(&[-mi * (ni - mi), -(ni - mi - 1), 1]);
    Ok(FactoredPoly::new(vec![
        (IntPolynomial::x(), count(m - 1)),
        (x_plus_one(), count(n - m - 1)),
        (quadratic, 1),
    ]))
}

/// The graph of order `3k` with cells `P0 = 0..k` (independent),
/// `P1 = k..2k` and `P2 = 2k..3k` (cliques), `P0` joined to both cliques.
pub fn prop2_graph(k: usize) -> Result<Graph> {
    if k < 2 {
        return invalid(format!("the order-3k construction needs k >= 2, got {k}"));
    }
    let mut edges = Vec::new();
    for a in 0..k {
        for b in k..3 * k {
            edges.push((a, b));
        }
    }
    for base in [k, 2 * k] {
        for a in base..base + k {
            for b in a + 1..base + k {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(3 * k, edges)
}

/// [`prop2_graph`] plus `k(k-1)` isolated vertices; cospectral with
/// `K_{2k}^{k^2}`.
pub fn prop2_mate(k: usize) -> Result<Graph> {
    add_isolated(&prop2_graph(k)?, k * (k - 1))
}

/// `x^{k-1} (x+1)^{2k-2} (x-k+1) (x^2 - (k-1)x - 2k^2)`.
pub fn prop2_charpoly(k: usize) -> Result<FactoredPoly> {
    if k < 2 {
        return invalid(format!("the order-3k construction needs k >= 2, got {k}"));
    }
    let ki = i(k);
    Ok(FactoredPoly::new(vec![
        (IntPolynomial::x(), count(k - 1)),
        (x_plus_one(), count(2 * k - 2)),
        (IntPolynomial::linear_root(ki - 1), 1),
        (IntPolynomial::from_i64s(&[-2 * ki * ki, -(ki - 1), 1]), 1),
    ]))
}

/// Parameters `(k, p)` with `r = k(k-1)/(p-k-1)` a positive integer, and
/// the resulting pendant count `q = r(p-k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop3Params {
    pub p: usize,
    pub k: usize,
    pub r: usize,
    pub q: usize,
}

pub fn prop3_params(k: usize, p: usize) -> Result<Prop3Params> {
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    if p < k + 2 {
        return invalid(format!("p must be at least k + 2 = {}, got {p}", k + 2));
    }
    let product = k * (k - 1);
    let divisor = p - k - 1;
    if !product.is_multiple_of(divisor) {
        return Err(Error::NotDivisible {
            k: k as u64,
            p: p as u64,
            product: product as u64,
            divisor: divisor as u64,
            remainder: (product % divisor) as u64,
        });
    }
    let r = product / divisor;
    Ok(Prop3Params {
        p,
        k,
        r,
        q: r * (p - k),
    })
}

/// Every valid `p` for this `k`, one per divisor `d` of `k(k-1)`
/// (`p = k + 1 + d`), ascending.
pub fn prop3_enumerate(k: usize) -> Result<Vec<Prop3Params>> {
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    let product = k * (k - 1);
    (1..=product)
        .filter(|&d| product.is_multiple_of(d))
        .map(|d| prop3_params(k, k + 1 + d))
        .collect()
}

/// `K_{p+r} \ K_{k+r} + K_k + k(k-2) K_1`.
pub fn prop3_mate(params: &Prop3Params) -> Result<Graph> {
    let Prop3Params { p, k, r, .. } = *params;
    let body = disjoint_union(&complete_minus_clique(p + r, k + r)?, &Graph::complete(k)?)?;
    add_isolated(&body, k * (k - 2))
}

/// `x^{r(p-k)-1} (x+1)^{p-2} (x-k+1) (x^2 - (p-k-1)x - (k+r)(p-k))`.
pub fn prop3_charpoly(params: &Prop3Params) -> FactoredPoly {
    let Prop3Params { p, k, r, q } = *params;
    let (pi, ki, ri) = (i(p), i(k), i(r));
    FactoredPoly::new(vec![
        (IntPolynomial::x(), count(q - 1)),
        (x_plus_one(), count(p - 2)),
        (IntPolynomial::linear_root(ki - 1), 1),
        (
            IntPolynomial::from_i64s(&[-(ki + ri) * (pi - ki), -(pi - ki - 1), 1]),
            1,
        ),
    ])
}

/// Three pairwise cospectral, pairwise nonisomorphic graphs sharing the
/// spectrum of `K_p^{(p/2)^2}`, in the order (pineapple, order-3k mate,
/// complete-multipartite mate).
pub fn corollary_triple(p: usize) -> Result<[Graph; 3]> {
    if p < 4 || !p.is_multiple_of(2) {
        return invalid(format!("p must be even and at least 4, got {p}"));
    }
    let k = p / 2;
    Ok([
        pineapple(p, k * k)?,
        prop2_mate(k)?,
        prop3_mate(&prop3_params(k, p)?)?,
    ])
}

/// Number of divisors of `n`.
pub fn divisor_count(n: u64) -> usize {
    (1..=n).filter(|&d| n.is_multiple_of(d)).count()
}
