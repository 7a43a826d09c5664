//! Characteristic polynomials of large integer matrices by reduction to
//! Hessenberg form modulo word-sized primes and Chinese remaindering.
//!
//! Each coefficient of `det(xI - M)` is a signed sum of principal minors,
//! so by Hadamard's inequality its absolute value is at most
//! `prod_i (1 + |row_i|_2)`. Enough primes are used for their product to
//! exceed twice that bound, which makes the symmetric lift exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Largest prime below `2^31`, then the next ones downward.
fn primes() -> impl Iterator<Item = u64> {
    (3..1u64 << 31).rev().step_by(2).filter(|&c| {
        let mut d = 3;
        while d * d <= c {
            if c % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Ascending coefficients of `det(xI - M) mod p`.
fn char_poly_mod(m: &[Vec<i64>], p: u64) -> Vec<u64> {
    let n = m.len();
    let mut h: Vec<Vec<u64>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    // similarity transforms to upper Hessenberg form
    for c in 0..n.saturating_sub(2) {
        let r = c + 1;
        let Some(pivot) = (r..n).find(|&i| h[i][c] != 0) else {
            continue;
        };
        if pivot != r {
            h.swap(pivot, r);
            for row in h.iter_mut() {
                row.swap(pivot, r);
            }
        }
        let inv = inv_mod(h[r][c], p);
        let multipliers: Vec<(usize, u64)> = (r + 1..n)
            .filter(|&i| h[i][c] != 0)
            .map(|i| (i, h[i][c] * inv % p))
            .collect();
        // the eliminations for one column commute: rows first, then columns
        let pivot_row = h[r].clone();
        for &(i, u) in &multipliers {
            for (x, &y) in h[i].iter_mut().zip(&pivot_row) {
                *x = (*x + p - u * y % p) % p;
            }
        }
        for row in h.iter_mut() {
            for &(i, u) in &multipliers {
                row[r] = (row[r] + u * row[i]) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for k in 1..=n {
        let diag = h[k - 1][k - 1];
        let mut next = vec![0u64; k + 1];
        for (d, &c) in polys[k - 1].iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - diag * c % p) % p;
        }
        let mut t = 1u64;
        for i in 1..k {
            t = t * h[k - i][k - i - 1] % p;
            if t == 0 {
                break;
            }
            let coef = t * h[k - i - 1][k - 1] % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[k - i - 1].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

fn coefficient_bound_bits(m: &[Vec<i64>]) -> u64 {
    let log2: f64 = m
        .iter()
        .map(|row| {
            let norm2: f64 = row.iter().map(|&x| (x as f64) * (x as f64)).sum();
            (1.0 + norm2.sqrt()).log2()
        })
        .sum();
    log2.ceil() as u64 + 2
}

/// Ascending coefficients of `det(xI - m)`.
pub(crate) fn char_poly_multimodular(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let need = coefficient_bound_bits(m);
    let mut modulus = BigInt::one();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut bits = 0u64;
    for p in primes() {
        let residues = char_poly_mod(m, p);
        let big_p = BigInt::from(p);
        let m_inv = inv_mod((&modulus % &big_p).try_into().expect("reduced below p"), p);
        for (x, &r) in coeffs.iter_mut().zip(&residues) {
            let x_mod: u64 = x.mod_floor(&big_p).try_into().expect("reduced below p");
            let delta = (r + p - x_mod) % p * m_inv % p;
            *x += &modulus * delta;
        }
        modulus *= &big_p;
        bits += 30;
        if bits > need {
            break;
        }
    }
    let half = &modulus >> 1;
    for x in coeffs.iter_mut() {
        if *x > half {
            *x -= &modulus;
        }
        debug_assert!(x.abs() <= half);
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert_eq!(ps[0], 2_147_483_647);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn two_by_two() {
        // det(xI - [[1, 2], [3, 4]]) = x^2 - 5x - 2
        let c = char_poly_multimodular(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(c, vec![BigInt::from(-2), BigInt::from(-5), BigInt::from(1)]);
    }

    #[test]
    fn needs_row_swaps() {
        // zero subdiagonal entries force a pivot search
        let m = vec![
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 0],
            vec![1, 0, 0, 0],
        ];
        let c = char_poly_multimodular(&m);
        // two disjoint edges: (x^2 - 1)^2
        assert_eq!(c, [1, 0, -2, 0, 1].map(BigInt::from).to_vec());
    }
}
