//! Real roots of integer polynomials via Sturm chains.
//!
//! Counting works on the square-free decomposition `p = c * prod f_i^i`,
//! so multiplicities come out exactly and shared roots never need a
//! numerical tie-break.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::poly::IntPolynomial;

/// Largest denominator allowed while bisecting.
fn denominator_cap() -> BigInt {
    BigInt::one() << 64
}

/// Sturm chain of a square-free polynomial, scaled by positive contents.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPolynomial>,
}

impl SturmChain {
    /// `p` must be square-free and non-zero.
    pub fn new(p: &IntPolynomial) -> SturmChain {
        let mut seq = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let k = seq.len();
            let r = seq[k - 2].pseudo_rem(&seq[k - 1]);
            if r.is_zero() {
                break;
            }
            let c = r.content();
            let r = IntPolynomial::new(r.coeffs().iter().map(|a| -(a / &c)).collect());
            seq.push(r);
        }
        SturmChain { seq }
    }

    fn count_changes(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut changes = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::count_changes(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::count_changes(self.seq.iter().map(|p| {
            let s = p.leading().signum();
            let s = if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            };
            s.cmp(&BigInt::zero())
        }))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::count_changes(self.seq.iter().map(|p| p.leading().cmp(&BigInt::zero())))
    }

    /// Distinct roots in `(a, b]`, for `a < b`.
    pub fn roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.seq[0]
    }
}

/// Exact root counting with multiplicities for a fixed polynomial.
#[derive(Clone, Debug)]
pub struct RootCounter {
    parts: Vec<(SturmChain, u32)>,
    degree: usize,
}

impl RootCounter {
    pub fn new(p: &IntPolynomial) -> Result<RootCounter> {
        let Some(degree) = p.degree() else {
            return invalid("the zero polynomial has no finite root set");
        };
        let parts = p
            .squarefree_decomposition()
            .into_iter()
            .map(|(f, m)| (SturmChain::new(&f), m))
            .collect();
        Ok(RootCounter { parts, degree })
    }

    /// Real roots strictly below `c`, with multiplicity.
    pub fn below(&self, c: &BigRational) -> usize {
        self.parts
            .iter()
            .map(|(chain, m)| {
                let at = chain.variations_at(c);
                let on = usize::from(chain.polynomial().sign_at(c) == Ordering::Equal);
                (chain.variations_at_neg_infinity() - at - on) * *m as usize
            })
            .sum()
    }

    /// Multiplicity of `c` as a root (0 if not a root).
    pub fn multiplicity_at(&self, c: &BigRational) -> usize {
        self.parts
            .iter()
            .filter(|(chain, _)| chain.polynomial().sign_at(c) == Ordering::Equal)
            .map(|(_, m)| *m as usize)
            .sum()
    }

    /// Real roots strictly above `c`, with multiplicity.
    pub fn above(&self, c: &BigRational) -> usize {
        self.real_root_count() - self.below(c) - self.multiplicity_at(c)
    }

    /// Number of real roots with multiplicity.
    pub fn real_root_count(&self) -> usize {
        self.parts
            .iter()
            .map(|(chain, m)| {
                (chain.variations_at_neg_infinity() - chain.variations_at_pos_infinity())
                    * *m as usize
            })
            .sum()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Roots of `p` strictly below `c`, counted with multiplicity.
pub fn count_roots_below(p: &IntPolynomial, c: &BigRational) -> Result<usize> {
    Ok(RootCounter::new(p)?.below(c))
}

/// One isolated root: the root lies in `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: u32,
}

impl RootInterval {
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x <= &self.hi
    }
}

/// Disjoint, ascending isolating intervals for the distinct real roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootIsolation {
    pub intervals: Vec<RootInterval>,
    /// Bound `B` with every root in `(-B, B)`.
    pub bound: BigRational,
}

impl RootIsolation {
    /// Sum of multiplicities; equals the degree iff every root is real.
    pub fn total_multiplicity(&self) -> usize {
        self.intervals.iter().map(|i| i.multiplicity as usize).sum()
    }

    /// Eigenvalue-style listing: one interval per root with multiplicity,
    /// in descending order of the root.
    pub fn descending(&self) -> Vec<&RootInterval> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for iv in self.intervals.iter().rev() {
            for _ in 0..iv.multiplicity {
                out.push(iv);
            }
        }
        out
    }
}

fn midpoint(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    let m = (a + b) / BigRational::from_integer(BigInt::from(2));
    if m.denom() > &denominator_cap() {
        return Err(Error::RefinementLimit);
    }
    Ok(m)
}

/// `1 + max |a_i / a_n|`, rounded up to an integer.
fn cauchy_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    let q = (&max + &lead - BigInt::one()) / &lead;
    BigRational::from_integer(q + BigInt::from(2))
}

/// Isolates every distinct real root of `p` by Sturm bisection.
pub fn isolate_roots(p: &IntPolynomial) -> Result<RootIsolation> {
    if p.is_zero() {
        return invalid("cannot isolate the roots of the zero polynomial");
    }
    let bound = cauchy_bound(p);
    if p.degree() == Some(0) {
        return Ok(RootIsolation {
            intervals: Vec::new(),
            bound,
        });
    }
    let sqfree = p.squarefree_part();
    let chain = SturmChain::new(&sqfree);
    let parts: Vec<(SturmChain, u32)> = p
        .squarefree_decomposition()
        .into_iter()
        .map(|(f, m)| (SturmChain::new(&f), m))
        .collect();

    let mut found: Vec<(BigRational, BigRational)> = Vec::new();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let count = chain.roots_in(&lo, &hi);
        match count {
            0 => {}
            1 => found.push((lo, hi)),
            _ => {
                let mid = midpoint(&lo, &hi)?;
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    found.sort();

    let intervals = found
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = parts
                .iter()
                .find(|(c, _)| c.roots_in(&lo, &hi) == 1)
                .map(|(_, m)| *m)
                .expect("every root of the square-free part belongs to one factor");
            RootInterval {
                lo,
                hi,
                multiplicity,
            }
        })
        .collect();
    Ok(RootIsolation { intervals, bound })
}

/// Rational points interleaved with the distinct roots of `p`: one below
/// all roots, one strictly between each consecutive pair, one above all.
/// None of the returned points is a root.
pub fn separating_points(p: &IntPolynomial) -> Result<Vec<BigRational>> {
    let iso = isolate_roots(p)?;
    let sqfree = p.squarefree_part();
    let chain = SturmChain::new(&sqfree);
    let mut points = vec![-iso.bound.clone()];
    for pair in iso.intervals.windows(2) {
        let (left, right) = (&pair[0], &pair[1]);
        if sqfree.sign_at(&left.hi) != Ordering::Equal {
            points.push(left.hi.clone());
            continue;
        }
        // the left root sits on left.hi; push right.lo past it
        let (mut lo, hi) = (right.lo.clone(), right.hi.clone());
        let mut top = hi.clone();
        while lo <= left.hi {
            let mid = midpoint(&lo, &top)?;
            if chain.roots_in(&lo, &mid) == 1 {
                top = mid;
            } else {
                lo = mid;
            }
        }
        points.push(lo);
    }
    points.push(iso.bound.clone());
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn counts_with_multiplicity() {
        // (x - 2) x^2 (x + 2): C_4
        let c4 = &(&p(&[-2, 1]) * &p(&[0, 0, 1])) * &p(&[2, 1]);
        assert_eq!(count_roots_below(&c4, &rat(-2, 1)).unwrap(), 0);
        assert_eq!(count_roots_below(&c4, &rat(1, 10)).unwrap(), 3);
        assert_eq!(count_roots_below(&c4, &rat(0, 1)).unwrap(), 1);
        let counter = RootCounter::new(&c4).unwrap();
        assert_eq!(counter.multiplicity_at(&rat(0, 1)), 2);
        assert_eq!(counter.above(&rat(0, 1)), 1);
        assert_eq!(counter.real_root_count(), 4);
    }

    #[test]
    fn complex_roots_are_not_counted() {
        let f = p(&[1, 0, 1]); // x^2 + 1
        assert_eq!(RootCounter::new(&f).unwrap().real_root_count(), 0);
        assert!(isolate_roots(&f).unwrap().intervals.is_empty());
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(count_roots_below(&IntPolynomial::zero(), &rat(0, 1)).is_err());
        assert!(isolate_roots(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn isolation_of_repeated_roots() {
        // (x - 1)^3 (x + 1) (x^2 - 2)
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[1, 1])) * &p(&[-2, 0, 1]);
        let iso = isolate_roots(&f).unwrap();
        assert_eq!(iso.total_multiplicity(), 6);
        let mults: Vec<u32> = iso.intervals.iter().map(|i| i.multiplicity).collect();
        assert_eq!(mults, vec![1, 1, 3, 1]);
        assert!(iso.intervals[1].contains(&rat(-1, 1)));
        assert!(iso.intervals[2].contains(&rat(1, 1)));
        for w in iso.intervals.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn separating_points_interleave_roots() {
        // roots -2, 0, 0, 2 and a root pair sharing bisection endpoints
        let f = &(&p(&[-2, 1]) * &p(&[0, 0, 1])) * &p(&[2, 1]);
        let pts = separating_points(&f).unwrap();
        assert_eq!(pts.len(), 4);
        let counter = RootCounter::new(&f).unwrap();
        let below: Vec<usize> = pts.iter().map(|t| counter.below(t)).collect();
        assert_eq!(below, vec![0, 1, 3, 4]);
        for t in &pts {
            assert_eq!(counter.multiplicity_at(t), 0);
        }
    }
}
