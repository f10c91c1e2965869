//! Operators on `W` that depend polynomially on the evaluation parameters.

use crate::bell::TensorVector;
use crate::exactfield::poly2::Params;
use crate::exactfield::{CycNum, MatrixPoly, ParamPoly};

/// `Σ a^p b^q M_{pq}`; no zero coefficient matrix is ever stored, so
/// structural equality is equality of operators.
pub type TensorOperator = MatrixPoly<Params>;

impl TensorOperator {
    /// `self · v` with polynomial coefficients.
    pub fn apply(&self, v: &TensorVector) -> TensorVector {
        let op = self;
        let o = op.order();
        let mut out = TensorVector::zero(v.n);
        for (&(p, q), m) in op.terms() {
            let mono = ParamPoly::monomial(CycNum::one(o), p, q);
            for r in 0..op.dim() {
                for c in 0..op.dim() {
                    let (x, y) = (m.get(r, c), &v.coeffs[c]);
                    if !x.is_zero() && !y.is_zero() {
                        out.coeffs[r].add_assign(&y.mul(&mono).scale(x));
                    }
                }
            }
        }
        out
    }
}
