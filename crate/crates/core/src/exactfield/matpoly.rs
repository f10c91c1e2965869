//! Polynomials in two variables with matrix coefficients.

use std::collections::BTreeMap;
use std::marker::PhantomData;

use serde_json::Value;

use super::json::{matrix_diff_json, matrix_to_json, JsonScalar};
use super::poly2::{Poly2, Variables};
use super::{CycMatrix, CycNum, Matrix, Rational};
use crate::error::{Error, Result};

/// `Σ x^p y^q M_{pq}` with exact matrix coefficients `M_{pq}`, where
/// `(x, y)` are the two variables of `V`.
///
/// No zero coefficient matrix is ever stored, so structural equality is
/// equality of operators.
#[derive(Clone, Debug)]
pub struct MatrixPoly<V: Variables> {
    order: u32,
    dim: usize,
    terms: BTreeMap<(u32, u32), CycMatrix>,
    vars: PhantomData<V>,
}

impl<V: Variables> PartialEq for MatrixPoly<V> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.dim == other.dim && self.terms == other.terms
    }
}

impl<V: Variables> MatrixPoly<V> {
    pub fn zero(order: u32, dim: usize) -> Self {
        Self {
            order,
            dim,
            terms: BTreeMap::new(),
            vars: PhantomData,
        }
    }

    pub fn identity(order: u32, dim: usize) -> Self {
        Self::constant(CycMatrix::identity(order, dim))
    }

    pub fn constant(m: CycMatrix) -> Self {
        Self::monomial(0, 0, m)
    }

    /// `a^p b^q m`.
    pub fn monomial(p: u32, q: u32, m: CycMatrix) -> Self {
        assert!(m.is_square());
        let mut out = Self::zero(m.order(), m.rows());
        out.add_term(p, q, &m);
        out
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), CycMatrix> {
        &self.terms
    }

    pub fn coefficient(&self, p: u32, q: u32) -> CycMatrix {
        self.terms
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| CycMatrix::zeros(self.order, self.dim, self.dim))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree in `(a, b)`, `None` for the zero operator.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(p, q)| p + q).max()
    }

    fn add_term(&mut self, p: u32, q: u32, m: &CycMatrix) {
        if m.is_zero() {
            return;
        }
        match self.terms.get_mut(&(p, q)) {
            Some(t) => {
                t.add_assign(m).expect("uniform shapes");
                if t.is_zero() {
                    self.terms.remove(&(p, q));
                }
            }
            None => {
                self.terms.insert((p, q), m.clone());
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        assert_eq!(self.dim, rhs.dim);
        for (&(p, q), m) in &rhs.terms {
            self.add_term(p, q, m);
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
        Self {
            order: self.order,
            dim: self.dim,
            terms: self.terms.iter().map(|(k, m)| (*k, m.neg())).collect(),
            vars: PhantomData,
        }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return Self::zero(self.order, self.dim);
        }
        Self {
            order: self.order,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, m)| (*k, m.scale_cyc(c)))
                .collect(),
            vars: PhantomData,
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&CycNum::from_rational(self.order, r.clone()))
    }

    /// `self += c · rhs`.
    pub fn add_scaled(&mut self, c: &CycNum, rhs: &Self) {
        if c.is_zero() {
            return;
        }
        for (&(p, q), m) in &rhs.terms {
            self.add_term(p, q, &m.scale_cyc(c));
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut out = Self::zero(self.order, self.dim);
        for (&(p1, q1), m1) in &self.terms {
            for (&(p2, q2), m2) in &rhs.terms {
                out.add_term(p1 + p2, q1 + q2, &m1.mul(m2).expect("uniform shapes"));
            }
        }
        out
    }

    pub fn mul_matrix(&self, rhs: &CycMatrix) -> Self {
        Self {
            order: self.order,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, m)| (*k, m.mul(rhs).expect("uniform shapes")))
                .filter(|(_, m)| !m.is_zero())
                .collect(),
            vars: PhantomData,
        }
    }

    pub fn left_mul_matrix(&self, lhs: &CycMatrix) -> Self {
        Self {
            order: self.order,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, m)| (*k, lhs.mul(m).expect("uniform shapes")))
                .filter(|(_, m)| !m.is_zero())
                .collect(),
            vars: PhantomData,
        }
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Substitutes rational values for both variables.
    pub fn specialize(&self, a: &Rational, b: &Rational) -> CycMatrix {
        let mut out = CycMatrix::zeros(self.order, self.dim, self.dim);
        for (&(p, q), m) in &self.terms {
            let c = num_traits::Pow::pow(a, p) * num_traits::Pow::pow(b, q);
            out.add_assign(&m.scale_rational(&c))
                .expect("uniform shapes");
        }
        out
    }

    /// Entrywise polynomial matrix.
    pub fn to_matrix(&self) -> Matrix<Poly2<V>> {
        let mut out = Matrix::<Poly2<V>>::zeros(self.order, self.dim, self.dim);
        for (&(p, q), m) in &self.terms {
            let mono = Poly2::<V>::monomial(CycNum::one(self.order), p, q);
            out.add_assign(&m.lift::<Poly2<V>>().scale(&mono))
                .expect("uniform shapes");
        }
        out
    }

    pub fn from_matrix(m: &Matrix<Poly2<V>>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                op: "from_matrix",
                left: m.shape(),
                right: m.shape(),
            });
        }
        let (order, dim) = (m.order(), m.rows());
        let mut terms: BTreeMap<(u32, u32), CycMatrix> = BTreeMap::new();
        for r in 0..dim {
            for c in 0..dim {
                for (&k, v) in m.get(r, c).terms() {
                    terms
                        .entry(k)
                        .or_insert_with(|| CycMatrix::zeros(order, dim, dim))
                        .set(r, c, v.clone());
                }
            }
        }
        Ok(Self {
            order,
            dim,
            terms,
            vars: PhantomData,
        })
    }

    pub fn to_json(&self) -> Value
    where
        Poly2<V>: JsonScalar,
    {
        matrix_to_json(&self.to_matrix())
    }

    /// Differing entries of two operators as a pair of JSON lists.
    pub fn diff_json(&self, rhs: &Self) -> (Value, Value)
    where
        Poly2<V>: JsonScalar,
    {
        matrix_diff_json(&self.to_matrix(), &rhs.to_matrix()).expect("uniform shapes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::poly2::Params;
    use crate::exactfield::{int, rat};

    type Op = MatrixPoly<Params>;

    fn m(entries: &[i64]) -> CycMatrix {
        let d = (entries.len() as f64).sqrt() as usize;
        CycMatrix::from_entries(
            3,
            d,
            d,
            entries.iter().map(|&v| CycNum::from_int(3, v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn polynomial_product_and_specialization() {
        let x = Op::monomial(1, 0, m(&[0, 1, 0, 0])).add(&Op::constant(m(&[1, 0, 0, 1])));
        let y = Op::monomial(0, 1, m(&[0, 0, 1, 0]));
        let xy = x.mul(&y);
        assert_eq!(xy.degree(), Some(2));
        let (a, b) = (rat(2, 3), int(-5));
        assert_eq!(
            xy.specialize(&a, &b),
            x.specialize(&a, &b).mul(&y.specialize(&a, &b)).unwrap()
        );
        assert_eq!(Op::from_matrix(&xy.to_matrix()).unwrap(), xy);
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = Op::monomial(2, 1, m(&[1, 2, 3, 4]));
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.sub(&x).degree(), None);
        assert!(x.commutator(&x).is_zero());
    }
}
