//! Sparse polynomials in two commuting indeterminates with cyclotomic
//! coefficients.
//!
//! The same container serves three roles, distinguished by a marker type:
//! the evaluation parameters `a, b`, the inverse spectral parameters
//! `u⁻¹, v⁻¹` of generating series, and the spectral parameters `u, v` once
//! denominators are cleared.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_traits::{One, Signed};

use super::cyclotomic::CycNum;
use super::rational::Rational;

pub trait Variables: Copy + Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    /// Names used as JSON keys.
    const KEYS: [&'static str; 2];
    /// Rendering of `var^exp` for display.
    fn render(var: usize, exp: u32) -> String;
}

/// Evaluation parameters `a` and `b`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Params;

/// Inverse spectral parameters `u⁻¹` and `v⁻¹`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct InverseSpectral;

/// Spectral parameters `u` and `v`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Spectral;

fn power(name: &str, exp: u32) -> String {
    if exp == 1 {
        name.to_string()
    } else {
        format!("{name}^{exp}")
    }
}

impl Variables for Params {
    const KEYS: [&'static str; 2] = ["a", "b"];
    fn render(var: usize, exp: u32) -> String {
        power(Self::KEYS[var], exp)
    }
}

impl Variables for InverseSpectral {
    const KEYS: [&'static str; 2] = ["u_inv", "v_inv"];
    fn render(var: usize, exp: u32) -> String {
        format!("{}^-{exp}", ["u", "v"][var])
    }
}

impl Variables for Spectral {
    const KEYS: [&'static str; 2] = ["u", "v"];
    fn render(var: usize, exp: u32) -> String {
        power(Self::KEYS[var], exp)
    }
}

/// Exponent pair `(first, second)`.
pub type Exponents = (u32, u32);

#[derive(Clone, PartialEq, Eq)]
pub struct Poly2<V: Variables> {
    order: u32,
    terms: BTreeMap<Exponents, CycNum>,
    _vars: PhantomData<V>,
}

pub type ParamPoly = Poly2<Params>;
pub type LaurentPoly = Poly2<InverseSpectral>;
pub type SpectralPoly = Poly2<Spectral>;

impl<V: Variables> Poly2<V> {
    pub fn zero(order: u32) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
            _vars: PhantomData,
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(CycNum::one(order))
    }

    pub fn constant(c: CycNum) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        Self::constant(CycNum::from_rational(order, r))
    }

    pub fn monomial(c: CycNum, first: u32, second: u32) -> Self {
        let mut p = Self::zero(c.order());
        if !c.is_zero() {
            p.terms.insert((first, second), c);
        }
        p
    }

    /// The first indeterminate (`a`, `u⁻¹` or `u`).
    pub fn first(order: u32) -> Self {
        Self::monomial(CycNum::one(order), 1, 0)
    }

    /// The second indeterminate (`b`, `v⁻¹` or `v`).
    pub fn second(order: u32) -> Self {
        Self::monomial(CycNum::one(order), 0, 1)
    }

    pub fn from_terms(order: u32, terms: impl IntoIterator<Item = (Exponents, CycNum)>) -> Self {
        let mut p = Self::zero(order);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &CycNum)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, first: u32, second: u32) -> CycNum {
        self.terms
            .get(&(first, second))
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.order))
    }

    /// Constant value if the polynomial has no free indeterminate.
    pub fn as_constant(&self) -> Option<CycNum> {
        match self.terms.len() {
            0 => Some(CycNum::zero(self.order)),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Degrees `(in first, in second, total)`.
    pub fn degrees(&self) -> (u32, u32, u32) {
        self.terms.keys().fold((0, 0, 0), |(a, b, t), &(x, y)| {
            (a.max(x), b.max(y), t.max(x + y))
        })
    }

    fn add_term(&mut self, e: Exponents, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        assert_eq!(c.order(), self.order, "mixing cyclotomic orders");
        match self.terms.get_mut(&e) {
            Some(slot) => {
                slot.add_assign(c);
                if slot.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(CycNum::neg)
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        if s.is_zero() {
            return Self::zero(self.order);
        }
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        if s.is_one() {
            return self.clone();
        }
        self.map_coeffs(|c| c.scale(s))
    }

    fn map_coeffs(&self, f: impl Fn(&CycNum) -> CycNum) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (*e, f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self {
            order: self.order,
            terms,
            _vars: PhantomData,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.order);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), &c1.mul(c2));
            }
        }
        out
    }

    /// Multiplies by `first^da · second^db`.
    pub fn shift(&self, da: u32, db: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|((a, b), c)| ((a + da, b + db), c.clone()))
            .collect();
        Self {
            order: self.order,
            terms,
            _vars: PhantomData,
        }
    }

    /// Conjugates coefficients; the indeterminates are treated as real.
    pub fn conjugate(&self) -> Self {
        self.map_coeffs(CycNum::conjugate)
    }

    /// Evaluates at `first = x`, `second = y`.
    pub fn substitute(&self, x: &CycNum, y: &CycNum) -> CycNum {
        let mut acc = CycNum::zero(self.order);
        for ((a, b), c) in &self.terms {
            acc.add_assign(&c.mul(&x.pow(*a)).mul(&y.pow(*b)));
        }
        acc
    }

    pub fn substitute_rational(&self, x: &Rational, y: &Rational) -> CycNum {
        self.substitute(
            &CycNum::from_rational(self.order, x.clone()),
            &CycNum::from_rational(self.order, y.clone()),
        )
    }

    /// Reinterprets the same coefficient table under other variable names.
    pub fn rename<W: Variables>(&self) -> Poly2<W> {
        Poly2 {
            order: self.order,
            terms: self.terms.clone(),
            _vars: PhantomData,
        }
    }
}

impl Poly2<Params> {
    pub fn var_a(order: u32) -> Self {
        Self::first(order)
    }

    pub fn var_b(order: u32) -> Self {
        Self::second(order)
    }
}

impl Poly2<InverseSpectral> {
    /// Multiplies by `u^du v^dv`, producing a polynomial in `u, v`.
    /// Returns `None` if some pole order exceeds the clearing exponent.
    pub fn clear_denominators(&self, du: u32, dv: u32) -> Option<SpectralPoly> {
        let mut out = SpectralPoly::zero(self.order);
        for ((a, b), c) in &self.terms {
            if *a > du || *b > dv {
                return None;
            }
            out.add_term((du - a, dv - b), c);
        }
        Some(out)
    }
}

impl<V: Variables> fmt::Debug for Poly2<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2[{}]({})", self.order, self)
    }
}

impl<V: Variables> fmt::Display for Poly2<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|x, y| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[e];
            let mono: Vec<String> = [e.0, e.1]
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(v, &p)| V::render(v, p))
                .collect();
            let mono = mono.join(" ");
            let (negative, body) = match c.as_rational() {
                Some(r) => {
                    let mag = r.abs();
                    let body = match (mono.is_empty(), mag.is_one()) {
                        (true, _) => mag.to_string(),
                        (false, true) => mono.clone(),
                        (false, false) => format!("{mag} {mono}"),
                    };
                    (r.is_negative(), body)
                }
                None if mono.is_empty() => (false, format!("({c})")),
                None => (false, format!("({c}) {mono}")),
            };
            match (idx, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
