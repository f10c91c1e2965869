//! Dense row-major matrices over the exact scalar domains.

use std::fmt;

use super::cyclotomic::CycNum;
use super::poly2::{Poly2, Variables};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Ring operations shared by every scalar domain. All scalars in a
/// computation live over the same cyclotomic order.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero(order: u32) -> Self;
    fn one(order: u32) -> Self;
    fn order(&self) -> u32;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn add_assign(&mut self, rhs: &Self);
    fn scale_cyc(&self, c: &CycNum) -> Self;
    fn from_cyc(c: &CycNum) -> Self;
    fn conjugate(&self) -> Self;
}

impl Scalar for CycNum {
    fn zero(order: u32) -> Self {
        CycNum::zero(order)
    }
    fn one(order: u32) -> Self {
        CycNum::one(order)
    }
    fn order(&self) -> u32 {
        CycNum::order(self)
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        CycNum::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        CycNum::neg(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        CycNum::add_assign(self, rhs)
    }
    fn scale_cyc(&self, c: &CycNum) -> Self {
        CycNum::mul(self, c)
    }
    fn from_cyc(c: &CycNum) -> Self {
        c.clone()
    }
    fn conjugate(&self) -> Self {
        CycNum::conjugate(self)
    }
}

impl<V: Variables> Scalar for Poly2<V> {
    fn zero(order: u32) -> Self {
        Poly2::zero(order)
    }
    fn one(order: u32) -> Self {
        Poly2::one(order)
    }
    fn order(&self) -> u32 {
        Poly2::order(self)
    }
    fn is_zero(&self) -> bool {
        Poly2::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly2::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly2::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly2::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly2::neg(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        Poly2::add_assign(self, rhs)
    }
    fn scale_cyc(&self, c: &CycNum) -> Self {
        Poly2::scale(self, c)
    }
    fn from_cyc(c: &CycNum) -> Self {
        Poly2::constant(c.clone())
    }
    fn conjugate(&self) -> Self {
        Poly2::conjugate(self)
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    order: u32,
    entries: Vec<S>,
}

pub type CycMatrix = Matrix<CycNum>;
pub type ParamMatrix = Matrix<super::poly2::ParamPoly>;
pub type LaurentMatrix = Matrix<super::poly2::LaurentPoly>;
pub type SpectralMatrix = Matrix<super::poly2::SpectralPoly>;

fn mismatch<S: Scalar>(op: &'static str, a: &Matrix<S>, b: &Matrix<S>) -> Error {
    Error::DimensionMismatch {
        op,
        left: a.shape(),
        right: b.shape(),
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            order,
            entries: vec![S::zero(order); rows * cols],
        }
    }

    pub fn identity(order: u32, n: usize) -> Self {
        let mut m = Self::zeros(order, n, n);
        for i in 0..n {
            m.entries[i * n + i] = S::one(order);
        }
        m
    }

    pub fn from_fn(
        order: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> S,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            order,
            entries,
        }
    }

    pub fn from_entries(order: u32, rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_entries",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(Self {
            rows,
            cols,
            order,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn add_at(&mut self, r: usize, c: usize, value: &S) {
        self.entries[r * self.cols + c].add_assign(value);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn zip_with(&self, rhs: &Self, op: &'static str, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(mismatch(op, self, rhs));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries,
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", S::add)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "sub", S::sub)
    }

    pub fn add_assign(&mut self, rhs: &Self) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(mismatch("add_assign", self, rhs));
        }
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            if !b.is_zero() {
                a.add_assign(b);
            }
        }
        Ok(())
    }

    /// `self += s * rhs`
    pub fn add_scaled(&mut self, s: &S, rhs: &Self) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(mismatch("add_scaled", self, rhs));
        }
        if s.is_zero() {
            return Ok(());
        }
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            if !b.is_zero() {
                a.add_assign(&s.mul(b));
            }
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        self.map(S::neg)
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zeros(self.order, self.rows, self.cols);
        }
        self.map(|e| if e.is_zero() { e.clone() } else { s.mul(e) })
    }

    pub fn scale_cyc(&self, c: &CycNum) -> Self {
        self.map(|e| {
            if e.is_zero() {
                e.clone()
            } else {
                e.scale_cyc(c)
            }
        })
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale_cyc(&CycNum::from_rational(self.order, r.clone()))
    }

    /// Matrix product. Zero entries on the left are skipped, which keeps the
    /// monomial-heavy operators of this crate cheap.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(mismatch("mul", self, rhs));
        }
        let mut out = Self::zeros(self.order, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.entries[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j].add_assign(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        let mut out = vec![S::zero(self.order); self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            for (k, x) in v.iter().enumerate() {
                let a = &self.entries[i * self.cols + k];
                if !a.is_zero() && !x.is_zero() {
                    slot.add_assign(&a.mul(x));
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: block `(i, j)` is `self[i][j] · rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Self::zeros(self.order, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    /// Conjugate transpose under the cyclotomic conjugation.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.order, self.cols, self.rows, |r, c| {
            self.get(c, r).conjugate()
        })
    }

    pub fn trace(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                op: "trace",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let mut acc = S::zero(self.order);
        for i in 0..self.rows {
            acc.add_assign(self.get(i, i));
        }
        Ok(acc)
    }

    /// `[self, rhs] = self·rhs - rhs·self`
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    /// Positions where two equally shaped matrices disagree.
    pub fn diff_positions(&self, rhs: &Self) -> Result<Vec<(usize, usize)>> {
        if self.shape() != rhs.shape() {
            return Err(mismatch("diff", self, rhs));
        }
        Ok((0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .filter(|&(r, c)| self.get(r, c) != rhs.get(r, c))
            .collect())
    }
}

impl CycMatrix {
    pub fn lift<S: Scalar>(&self) -> Matrix<S> {
        self.map(S::from_cyc)
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over Q(ω_{}) [",
            self.rows, self.cols, self.order
        )?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Single line, rows separated by `;`.
impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
                row.join(", ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rational::int;

    fn cm(n: u32, rows: usize, vals: &[i64]) -> CycMatrix {
        let cols = vals.len() / rows;
        Matrix::from_entries(
            n,
            rows,
            cols,
            vals.iter().map(|&v| CycNum::from_int(n, v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn commutator_with_self_vanishes() {
        let x = cm(3, 2, &[1, 2, 3, 4]);
        assert!(x.commutator(&x).unwrap().is_zero());
    }

    #[test]
    fn kron_of_identities() {
        let i2 = CycMatrix::identity(2, 2);
        let i3 = CycMatrix::identity(2, 3);
        assert_eq!(i2.kron(&i3), CycMatrix::identity(2, 6));
    }

    #[test]
    fn kron_block_layout() {
        let a = cm(2, 2, &[0, 1, 0, 0]);
        let b = cm(2, 2, &[1, 2, 3, 4]);
        let k = a.kron(&b);
        assert_eq!(*k.get(0, 2), CycNum::from_int(2, 1));
        assert_eq!(*k.get(1, 3), CycNum::from_int(2, 4));
        assert!(k.get(2, 0).is_zero());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = cm(2, 2, &[1, 0, 0, 1]);
        let b = cm(2, 3, &[1, 0, 0, 0, 1, 0]);
        assert_eq!(b.shape(), (3, 2));
        assert!(matches!(
            a.add(&b),
            Err(Error::DimensionMismatch { op: "add", .. })
        ));
        assert!(a.mul(&b).is_err());
        assert!(b.trace().is_err());
        assert!(b.mul(&a).is_ok());
    }

    #[test]
    fn scaling_and_trace() {
        let a = cm(4, 2, &[1, 2, 3, 4]);
        assert_eq!(
            a.scale_rational(&int(2)).trace().unwrap(),
            CycNum::from_int(4, 10)
        );
    }
}
