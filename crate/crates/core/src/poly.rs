//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients are stored in ascending order of degree with no trailing
/// zeros, so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPolynomial {
        IntPolynomial::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> IntPolynomial {
        IntPolynomial::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, degree: usize) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPolynomial::new(coeffs)
    }

    /// `x - c`.
    pub fn linear_root(c: i64) -> IntPolynomial {
        IntPolynomial::from_i64s(&[-c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Sign of the value at a rational point, computed from the integer
    /// `den^deg * p(num/den)` to avoid rational arithmetic.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        // den > 0 always for a normalized BigRational
        acc.sign_ordering()
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> IntPolynomial {
        let mut out = IntPolynomial::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, normalised to a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        IntPolynomial::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Division with remainder in `Z[x]`. Returns `None` when the quotient
    /// would need non-integer coefficients.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Option<(IntPolynomial, IntPolynomial)> {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        Some((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }

    /// `Some(q)` with `self = q * divisor` exactly, otherwise `None`.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        match self.div_rem(divisor) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &IntPolynomial) -> bool {
        other.exact_div(self).is_some()
    }

    /// Pseudo-remainder `|lc(b)|^(deg a - deg b + 1) * a mod b`. The
    /// multiplier is positive, so signs match the true remainder.
    pub fn pseudo_rem(&self, b: &IntPolynomial) -> IntPolynomial {
        let db = b.degree().expect("pseudo-remainder by zero");
        let lead = b.leading();
        let abs_lead = lead.abs();
        let mut rem = self.clone();
        let Some(da) = rem.degree() else {
            return rem;
        };
        if da < db {
            return rem;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            // rem <- lead * rem - lc(rem) x^(dr-db) b, then fix the sign of lead
            let lr = rem.leading();
            let shifted = IntPolynomial::monomial(lr, dr - db);
            rem = &rem.scale(&lead) - &(&shifted * b);
            if lead.is_negative() {
                rem = -rem;
            }
            steps -= 1;
        }
        let factor = num_traits::pow(abs_lead, steps);
        rem.scale(&factor)
    }

    /// Monic-up-to-content gcd: primitive with positive leading coefficient.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Product of the distinct irreducible factors, primitive.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .exact_div(&g)
            .expect("primitive gcd divides exactly")
            .primitive_part()
    }

    /// Square-free decomposition: `(f_i, i)` with `self = c * prod f_i^i`,
    /// the `f_i` square-free, pairwise coprime, primitive, and non-constant.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.primitive_part();
        // g = prod f_j^(j-1), w = prod f_j
        let mut g = f.gcd(&f.derivative());
        let mut w = f.exact_div(&g).expect("gcd divides").primitive_part();
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let y = w.gcd(&g);
            let fi = w.exact_div(&y).expect("gcd divides").primitive_part();
            if fi.degree().unwrap_or(0) > 0 {
                out.push((fi, i));
            }
            g = g.exact_div(&y).expect("gcd divides").primitive_part();
            w = y;
            i += 1;
        }
        out
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        match self.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// A product of integer polynomial factors with multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredPoly {
    pub factors: Vec<(IntPolynomial, u32)>,
}

impl FactoredPoly {
    /// Drops factors with multiplicity zero and factors equal to one.
    pub fn new(factors: Vec<(IntPolynomial, u32)>) -> FactoredPoly {
        FactoredPoly {
            factors: factors
                .into_iter()
                .filter(|(f, m)| *m > 0 && *f != IntPolynomial::one())
                .collect(),
        }
    }

    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::one(), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]); // x + 1
        let b = p(&[-1, 1]); // x - 1
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[5, 0, 3]).derivative(), p(&[0, 6]));
        assert_eq!(p(&[1, 0, -2, 0, 1]).eval_i64(-2), BigInt::from(9));
    }

    #[test]
    fn division() {
        let f = p(&[-8, 0, 0, 1]); // x^3 - 8
        let (q, r) = f.div_rem(&p(&[-2, 1])).unwrap();
        assert_eq!(q, p(&[4, 2, 1]));
        assert!(r.is_zero());
        assert!(p(&[1, 0, 1]).div_rem(&p(&[1, 2])).is_none());
        assert!(p(&[-1, 1]).divides(&p(&[-1, 0, 1])));
        assert!(!p(&[2, 1]).divides(&p(&[-1, 0, 1])));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)^3 x
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[2, 1]).pow(3)) * &p(&[0, 1]);
        let g = f.gcd(&f.derivative());
        assert_eq!(g, &p(&[-1, 1]) * &p(&[2, 1]).pow(2));
        assert_eq!(
            f.squarefree_part(),
            &(&p(&[-1, 1]) * &p(&[2, 1])) * &p(&[0, 1])
        );
        let dec = f.squarefree_decomposition();
        assert_eq!(
            dec,
            vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 2), (p(&[2, 1]), 3)]
        );
    }

    #[test]
    fn squarefree_decomposition_non_monic() {
        // (2x+1)^2 (3x-1)
        let f = &p(&[1, 2]).pow(2) * &p(&[-1, 3]);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[-1, 3]), 1), (p(&[1, 2]), 2)]);
    }

    #[test]
    fn pseudo_remainder_sign() {
        // a = x^2 + 1, b = -2x + 1: true remainder 5/4, multiplier 4 => 5
        let r = p(&[1, 0, 1]).pseudo_rem(&p(&[1, -2]));
        assert_eq!(r, p(&[5]));
    }

    #[test]
    fn sign_at_rationals() {
        let f = p(&[-2, 0, 1]); // x^2 - 2
        let half = BigRational::new(3.into(), 2.into());
        assert_eq!(f.sign_at(&half), Ordering::Greater);
        let r = BigRational::new(7.into(), 5.into());
        assert_eq!(f.sign_at(&r), Ordering::Less);
        assert_eq!(
            f.sign_at(&BigRational::from_integer((-2).into())),
            Ordering::Greater
        );
    }

    #[test]
    fn factored_expansion() {
        let fp = FactoredPoly::new(vec![
            (IntPolynomial::x(), 2),
            (p(&[1, 1]), 1),
            (IntPolynomial::one(), 4),
            (p(&[3, 1]), 0),
        ]);
        assert_eq!(fp.factors.len(), 2);
        assert_eq!(fp.expand(), p(&[0, 0, 1, 1]));
    }
}
