//! Characteristic polynomials of integer matrices and graphs.
//!
//! Small matrices use the division-free Berkowitz recurrence, first in
//! checked `i128` arithmetic and over `BigInt` only if an intermediate
//! value overflows. Larger ones are reduced to Hessenberg form modulo
//! several primes. Graphs are split into connected components first.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::modular::char_poly_multimodular;
use crate::graph::{ones, Graph};
use crate::poly::IntPolynomial;

trait Exact: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Exact for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Exact for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// `m[i][j] * v`, skipping the multiplication for 0 and 1 entries.
#[inline]
fn scaled<T: Exact>(entry: i64, v: &T) -> Option<T> {
    match entry {
        0 => Some(T::zero()),
        1 => Some(v.clone()),
        e => T::from_i64(e).mul(v),
    }
}

/// Coefficients of `det(xI - m)` in descending order, or `None` on overflow.
fn berkowitz<T: Exact>(m: &[Vec<i64>]) -> Option<Vec<T>> {
    let n = m.len();
    let mut poly: Vec<T> = vec![T::one()];
    for r in 1..=n {
        // leading r x r block = [[M, c], [rho, a]] with M of order r - 1
        let k = r - 1;
        let a = m[k][k];
        let mut toeplitz: Vec<T> = Vec::with_capacity(r + 1);
        toeplitz.push(T::one());
        toeplitz.push(T::from_i64(-a));
        // v = M^j c for j = 0..r-2
        let mut v: Vec<T> = (0..k).map(|i| T::from_i64(m[i][k])).collect();
        for j in 0..k {
            let mut dot = T::zero();
            for i in 0..k {
                dot = dot.add(&scaled(m[k][i], &v[i])?)?;
            }
            toeplitz.push(dot.neg()?);
            if j + 1 < k {
                let mut next = Vec::with_capacity(k);
                for row in m.iter().take(k) {
                    let mut s = T::zero();
                    for (i, x) in v.iter().enumerate() {
                        if row[i] != 0 {
                            s = s.add(&scaled(row[i], x)?)?;
                        }
                    }
                    next.push(s);
                }
                v = next;
            }
        }
        // poly_r = T_r * poly_{r-1}, T_r lower-triangular Toeplitz (r+1) x r
        let mut next = Vec::with_capacity(r + 1);
        for i in 0..=r {
            let mut s = T::zero();
            for (j, pj) in poly.iter().enumerate() {
                if j > i {
                    break;
                }
                s = s.add(&toeplitz[i - j].mul(pj)?)?;
            }
            next.push(s);
        }
        poly = next;
    }
    Some(poly)
}

/// Largest order handled by the Berkowitz recurrence.
const BERKOWITZ_MAX_ORDER: usize = 32;

/// `det(xI - m)` for a square integer matrix.
pub fn matrix_char_poly(m: &[Vec<i64>]) -> IntPolynomial {
    debug_assert!(m.iter().all(|row| row.len() == m.len()));
    if m.len() > BERKOWITZ_MAX_ORDER {
        return IntPolynomial::new(char_poly_multimodular(m));
    }
    berkowitz_char_poly(m)
}

fn berkowitz_char_poly(m: &[Vec<i64>]) -> IntPolynomial {
    let desc: Vec<BigInt> = match berkowitz::<i128>(m) {
        Some(c) => c.into_iter().map(Exact::into_big).collect(),
        None => berkowitz::<BigInt>(m).expect("BigInt arithmetic does not overflow"),
    };
    IntPolynomial::new(desc.into_iter().rev().collect())
}

/// Characteristic polynomial `det(xI - A)` of the adjacency matrix.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    let mut isolated = 0;
    for comp in g.components() {
        if comp.count_ones() == 1 {
            isolated += 1;
            continue;
        }
        let vertices: Vec<usize> = comp.iter().collect();
        let h = g
            .induced_subgraph(&vertices)
            .expect("component vertices are in range");
        p = &p * &matrix_char_poly(&h.adjacency_matrix());
    }
    &p * &IntPolynomial::monomial(<BigInt as One>::one(), isolated)
}

/// `trace(A^k)`, the number of closed walks of length `k`.
pub fn trace_power(g: &Graph, k: u32) -> BigInt {
    let n = g.order();
    if k == 0 {
        return BigInt::from(n);
    }
    let mut total = <BigInt as Zero>::zero();
    for v in 0..n {
        // walks from v; w[u] counts walks v -> u
        let mut w: Vec<BigInt> = vec![<BigInt as Zero>::zero(); n];
        w[v] = <BigInt as One>::one();
        for _ in 0..k {
            let mut next = vec![<BigInt as Zero>::zero(); n];
            for (u, slot) in next.iter_mut().enumerate() {
                for x in ones(g.row(u)) {
                    *slot += &w[x];
                }
            }
            w = next;
        }
        total += &w[v];
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, pineapple};

    #[test]
    fn small_cases() {
        assert_eq!(
            char_poly(&Graph::empty(1).unwrap()),
            IntPolynomial::from_i64s(&[0, 1])
        );
        let two_k2 =
            disjoint_union(&Graph::complete(2).unwrap(), &Graph::complete(2).unwrap()).unwrap();
        assert_eq!(
            char_poly(&two_k2),
            IntPolynomial::from_i64s(&[1, 0, -2, 0, 1])
        );
        assert_eq!(char_poly(&Graph::empty(0).unwrap()), IntPolynomial::one());
    }

    #[test]
    fn general_integer_matrix() {
        // [[2, 1], [3, -4]]: x^2 + 2x - 11
        let m = vec![vec![2, 1], vec![3, -4]];
        assert_eq!(matrix_char_poly(&m), IntPolynomial::from_i64s(&[-11, 2, 1]));
    }

    #[test]
    fn multimodular_agrees_with_berkowitz() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for n in [1, 2, 5, 12, 25, 40] {
            let mut m = vec![vec![0i64; n]; n];
            for row in m.iter_mut() {
                for x in row.iter_mut() {
                    *x = rng.gen_range(-3..=3);
                }
            }
            let exact =
                IntPolynomial::new(berkowitz::<BigInt>(&m).unwrap().into_iter().rev().collect());
            assert_eq!(IntPolynomial::new(char_poly_multimodular(&m)), exact);
        }
        let g = pineapple(20, 25).unwrap();
        assert_eq!(char_poly(&g), berkowitz_char_poly(&g.adjacency_matrix()));
    }

    #[test]
    fn large_pineapple() {
        let g = pineapple(12, 180).unwrap();
        let p = char_poly(&g);
        assert_eq!(p.degree(), Some(192));
        assert_eq!(p.coeff(190), BigInt::from(-(66 + 180)));
    }

    #[test]
    fn agrees_across_integer_widths() {
        let m = pineapple(9, 12).unwrap().adjacency_matrix();
        let fast: Vec<BigInt> = berkowitz::<i128>(&m)
            .unwrap()
            .into_iter()
            .map(Exact::into_big)
            .collect();
        assert_eq!(fast, berkowitz::<BigInt>(&m).unwrap());
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let m = Graph::complete(60).unwrap().adjacency_matrix();
        assert!(berkowitz::<i128>(&m).is_none());
        let expected = &IntPolynomial::linear_root(59) * &IntPolynomial::from_i64s(&[1, 1]).pow(59);
        assert_eq!(matrix_char_poly(&m), expected);
    }

    #[test]
    fn trace_powers_of_pineapple() {
        let g = pineapple(4, 4).unwrap();
        assert_eq!(trace_power(&g, 0), BigInt::from(8));
        assert_eq!(trace_power(&g, 1), BigInt::from(0));
        assert_eq!(trace_power(&g, 2), BigInt::from(20));
        assert_eq!(trace_power(&g, 3), BigInt::from(24));
    }
}
