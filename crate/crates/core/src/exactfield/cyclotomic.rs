//! The cyclotomic field `Q(ω_N)` realized as `Q[x]/Φ_N(x)`.
//!
//! Elements are stored in the power basis `1, ω, …, ω^{φ(N)-1}`, so equality
//! of field elements is equality of coefficient vectors.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{int, Rational};
use super::ratpoly::{cyclotomic_polynomial, RatPoly};

/// Reduction data for one cyclotomic order. Instances are interned and live
/// for the whole process, so elements carry a `&'static` reference.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u32,
    phi: usize,
    modulus: RatPoly,
    /// Power-basis coordinates of `ω^d` for `d < n`. Always integral.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    fn build(n: u32) -> Self {
        let modulus = cyclotomic_polynomial(n as usize);
        let phi = modulus.degree().unwrap();
        let powers = (0..n as usize)
            .map(|d| {
                let mut mono = vec![Rational::zero(); d + 1];
                mono[d] = Rational::one();
                let (_, r) = RatPoly::new(mono).div_rem(&modulus);
                let mut row = vec![0i64; phi];
                for (k, c) in r.coeffs().iter().enumerate() {
                    assert!(c.is_integer());
                    row[k] = c
                        .to_integer()
                        .to_i64()
                        .expect("cyclotomic coefficient overflow");
                }
                row
            })
            .collect();
        Self {
            n,
            phi,
            modulus,
            powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    /// `φ(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &RatPoly {
        &self.modulus
    }

    /// Folds a group-ring vector (length `n`, index = exponent) into the
    /// power basis.
    fn reduce(&self, mut acc: Vec<Rational>) -> Vec<Rational> {
        debug_assert_eq!(acc.len(), self.n as usize);
        let high = acc.split_off(self.phi);
        for (off, c) in high.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, &w) in self.powers[self.phi + off].iter().enumerate() {
                match w {
                    0 => {}
                    1 => acc[t] += &c,
                    -1 => acc[t] -= &c,
                    _ => acc[t] += &c * int(w),
                }
            }
        }
        acc
    }
}

static REGISTRY: OnceLock<RwLock<HashMap<u32, &'static CyclotomicField>>> = OnceLock::new();

/// Interned field of order `n`. Concurrent callers share one instance.
pub fn field(n: u32) -> &'static CyclotomicField {
    assert!(n >= 1, "cyclotomic order must be positive");
    let reg = REGISTRY.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = reg.read().unwrap().get(&n) {
        return f;
    }
    let mut w = reg.write().unwrap();
    w.entry(n)
        .or_insert_with(|| Box::leak(Box::new(CyclotomicField::build(n))))
}

#[derive(Clone)]
pub struct CycNum {
    field: &'static CyclotomicField,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({})", self.field.n, self)
    }
}

impl CycNum {
    pub fn zero(n: u32) -> Self {
        let field = field(n);
        Self {
            field,
            coeffs: vec![Rational::zero(); field.phi],
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::one())
    }

    pub fn from_rational(n: u32, r: Rational) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Self::from_rational(n, int(v))
    }

    /// Builds an element from power-basis coordinates, reducing if longer
    /// than `φ(N)`.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Self {
        let field = field(n);
        let mut acc = vec![Rational::zero(); field.n as usize];
        for (d, c) in coeffs.into_iter().enumerate() {
            acc[d % field.n as usize] += c;
        }
        Self {
            field,
            coeffs: field.reduce(acc),
        }
    }

    /// `ω^k` with `ω = e^{2πi/N}`; the exponent is taken mod `N`.
    pub fn omega_power(n: u32, k: i64) -> Self {
        let field = field(n);
        let d = k.rem_euclid(n as i64) as usize;
        Self {
            field,
            coeffs: field.powers[d].iter().map(|&w| int(w)).collect(),
        }
    }

    pub fn order(&self) -> u32 {
        self.field.n
    }

    pub fn field(&self) -> &'static CyclotomicField {
        self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.field.n, rhs.field.n, "mixing cyclotomic orders");
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        self.check(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn sub_assign(&mut self, rhs: &Self) {
        self.check(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        let n = self.field.n as usize;
        let mut acc = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j) % n] += a * b;
                }
            }
        }
        Self {
            field: self.field,
            coeffs: self.field.reduce(acc),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        out
    }

    /// Complex conjugation: the automorphism `ω ↦ ω^{N-1}`.
    pub fn conjugate(&self) -> Self {
        let n = self.field.n as usize;
        let mut acc = vec![Rational::zero(); n];
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[(n - d) % n] += c;
            }
        }
        Self {
            field: self.field,
            coeffs: self.field.reduce(acc),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(self.order(), r.recip()));
        }
        let (g, s) = RatPoly::new(self.coeffs.clone()).gcd_cofactor(&self.field.modulus);
        debug_assert_eq!(g, RatPoly::one());
        Some(Self::from_coeffs(self.order(), s.coeffs().to_vec()))
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.mul(&inv))
    }
}

/// `Σ_{i=0}^{N-1} ω^{ik}`, summed term by term in the field.
pub fn geometric_character_sum(n: u32, k: i64) -> CycNum {
    let mut acc = CycNum::zero(n);
    for i in 0..n as i64 {
        acc.add_assign(&CycNum::omega_power(n, i * k));
    }
    acc
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl std::ops::$tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                $body(self, rhs)
            }
        }
        impl std::ops::$tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycNum, b: &CycNum| {
    let mut out = a.clone();
    out.add_assign(b);
    out
});
forward_binop!(Sub, sub, |a: &CycNum, b: &CycNum| {
    let mut out = a.clone();
    out.sub_assign(b);
    out
});
forward_binop!(Mul, mul, |a: &CycNum, b: &CycNum| CycNum::mul(a, b));

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(self)
    }
}

impl std::ops::Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(&self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = mag.is_one();
            match d {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "ω")?,
                1 => write!(f, "{mag}ω")?,
                _ if unit => write!(f, "ω^{d}")?,
                _ => write!(f, "{mag}ω^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rational::rat;

    fn w(n: u32, k: i64) -> CycNum {
        CycNum::omega_power(n, k)
    }

    #[test]
    fn omega_power_examples() {
        assert_eq!(w(2, 1), CycNum::from_int(2, -1));
        // ω^2 = -1 - ω in Q(ω_3)
        assert_eq!(w(3, 2), CycNum::from_coeffs(3, vec![int(-1), int(-1)]));
        assert_eq!(w(5, 7), w(5, 2));
        assert!(w(7, 0).is_one());
        assert_eq!(w(4, 1).pow(2), CycNum::from_int(4, -1));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(w(4, 1).conjugate(), -w(4, 1));
        let r = CycNum::from_rational(6, rat(-3, 7));
        assert_eq!(r.conjugate(), r);
        let x = CycNum::one(3) + w(3, 1);
        assert_eq!(x.conjugate(), -w(3, 1));
        assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn character_sum_examples() {
        assert!(geometric_character_sum(3, 1).is_zero());
        assert_eq!(geometric_character_sum(4, 0), CycNum::from_int(4, 4));
        assert!(geometric_character_sum(6, 3).is_zero());
    }

    #[test]
    fn character_sum_closed_form() {
        for n in 2..=8u32 {
            for k in 0..2 * n as i64 {
                let expect = if k % n as i64 == 0 { n as i64 } else { 0 };
                assert_eq!(
                    geometric_character_sum(n, k),
                    CycNum::from_int(n, expect),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn omega_powers_multiply() {
        for n in 2..=8u32 {
            for k in 0..2 * n as i64 {
                for l in 0..2 * n as i64 {
                    assert_eq!(w(n, k) * w(n, l), w(n, k + l));
                }
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let x = CycNum::from_coeffs(5, vec![int(2), int(-1), rat(1, 3)]);
        let inv = x.inverse().unwrap();
        assert!((x * inv).is_one());
        assert!(CycNum::zero(5).inverse().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(w(3, 2).to_string(), "-1 - ω");
        assert_eq!(CycNum::zero(4).to_string(), "0");
        assert_eq!(
            CycNum::from_coeffs(5, vec![rat(1, 2), int(0), int(3)]).to_string(),
            "1/2 + 3ω^2"
        );
    }
}
