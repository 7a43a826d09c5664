//! Exact spectral invariants of graphs.
//!
//! Everything here is integer or rational arithmetic: characteristic
//! polynomials, closed-walk counts, the discriminant `|p(-2)|`, and
//! eigenvalue-location questions answered with Sturm chains.

mod charpoly;
mod modular;
mod quotient;
mod roots;

pub use charpoly::{char_poly, matrix_char_poly, trace_power};
pub use quotient::{quotient_matrix, QuotientMatrix};
pub use roots::{
    count_roots_below, isolate_roots, separating_points, RootCounter, RootInterval, RootIsolation,
    SturmChain,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{invalid, Result};
use crate::graph::Graph;

pub fn cospectral(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && char_poly(g) == char_poly(h)
}

/// `d_G = |p(-2)|`.
pub fn discriminant(g: &Graph) -> BigInt {
    char_poly(g).eval_i64(-2).abs()
}

/// Whether every eigenvalue of `g` is strictly greater than `-2`.
pub fn least_eig_gt_minus2(g: &Graph) -> bool {
    let p = char_poly(g);
    if p.eval_i64(-2) == BigInt::from(0) {
        return false;
    }
    let c = BigRational::from_integer(BigInt::from(-2));
    count_roots_below(&p, &c).expect("characteristic polynomials are non-zero") == 0
}

/// Checks `λ_i(G) ≥ λ_i(H) ≥ λ_{n-m+i}(G)` for the subgraph `H` induced by
/// `subset`.
///
/// Both inequalities are equivalent to counting conditions: for every
/// real `t`, `H` has no more eigenvalues above `t` than `G`, and no more
/// below `t`. The counts only change at eigenvalues, and at an eigenvalue
/// they equal the counts in the adjacent gap, so it is enough to test one
/// rational point in every gap between the distinct roots of `p_G · p_H`.
pub fn interlacing_check(g: &Graph, subset: &[usize]) -> Result<bool> {
    if subset.len() > g.order() {
        return invalid("subset is larger than the vertex set");
    }
    let h = g.induced_subgraph(subset)?;
    let (pg, ph) = (char_poly(g), char_poly(&h));
    let (cg, ch) = (RootCounter::new(&pg)?, RootCounter::new(&ph)?);
    let points = separating_points(&(&pg * &ph))?;
    Ok(points
        .iter()
        .all(|t| ch.above(t) <= cg.above(t) && ch.below(t) <= cg.below(t)))
}
