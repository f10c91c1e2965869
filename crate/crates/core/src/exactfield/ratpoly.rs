//! Dense univariate polynomials over the rationals.
//!
//! Only what the cyclotomic layer needs: products, Euclidean division and the
//! extended gcd used for field inversion.

use num_traits::{One, Zero};

use super::rational::{int, Rational};

/// Coefficients in increasing degree; the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ints(&[1])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[0] = int(-1);
        c[n] = int(1);
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&int(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = &rem[shift + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Returns `(g, s)` with `g = gcd(self, modulus)` monic and
    /// `s·self ≡ g (mod modulus)`.
    pub fn gcd_cofactor(&self, modulus: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus).1);
        let (mut s0, mut s1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let Some(lead) = r0.leading().cloned() else {
            return (Self::zero(), Self::zero());
        };
        let inv = Rational::one() / lead;
        (r0.scale(&inv), s0.scale(&inv))
    }
}

/// The n-th cyclotomic polynomial, from `x^n - 1 = ∏_{d | n} Φ_d(x)`.
pub fn cyclotomic_polynomial(n: usize) -> RatPoly {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut p = RatPoly::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n % d == 0) {
        let (q, r) = p.div_rem(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), RatPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), RatPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), RatPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), RatPoly::from_ints(&[1, -1, 1]));
        assert_eq!(
            cyclotomic_polynomial(12),
            RatPoly::from_ints(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn phi_six_by_hand_division() {
        // x^6 - 1 = (x - 1)(x + 1)(x^2 + x + 1)(x^2 - x + 1)
        let lower = RatPoly::from_ints(&[-1, 1])
            .mul(&RatPoly::from_ints(&[1, 1]))
            .mul(&RatPoly::from_ints(&[1, 1, 1]));
        let (q, r) = RatPoly::x_pow_minus_one(6).div_rem(&lower);
        assert!(r.is_zero());
        assert_eq!(q, cyclotomic_polynomial(6));
    }

    #[test]
    fn degrees_match_totient() {
        let totient = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &t) in totient.iter().enumerate() {
            assert_eq!(cyclotomic_polynomial(i + 1).degree(), Some(t));
        }
    }

    #[test]
    fn cofactor_inverts_modulo() {
        let m = cyclotomic_polynomial(5);
        let x = RatPoly::from_ints(&[2, 0, 1]);
        let (g, s) = x.gcd_cofactor(&m);
        assert_eq!(g, RatPoly::one());
        assert_eq!(s.mul(&x).div_rem(&m).1, RatPoly::one());
    }
}
