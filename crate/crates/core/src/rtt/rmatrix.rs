//! The Yang R-matrix `R(u) = 1 - P/u` and the Yang-Baxter equation.

use crate::exactfield::json::matrix_to_json;
use crate::exactfield::poly2::Spectral;
use crate::exactfield::{int, CycMatrix, CycNum, LaurentMatrix, LaurentPoly, MatrixPoly};
use crate::lie::permutation_matrix;
use crate::report::{Item, Report};

pub type SpectralOperator = MatrixPoly<Spectral>;

/// `I - P u⁻¹` on `C^N ⊗ C^N`.
pub fn yang_r_matrix(n: usize) -> LaurentMatrix {
    let o = n as u32;
    let id = CycMatrix::identity(o, n * n).lift::<LaurentPoly>();
    let p = permutation_matrix(n)
        .lift::<LaurentPoly>()
        .scale(&LaurentPoly::first(o));
    id.sub(&p).expect("square")
}

fn id(n: usize, d: usize) -> CycMatrix {
    CycMatrix::identity(n as u32, d)
}

/// Flips `P_{12}`, `P_{13}`, `P_{23}` on `(C^N)^{⊗3}`.
pub fn flips(n: usize) -> (CycMatrix, CycMatrix, CycMatrix) {
    let p = permutation_matrix(n);
    let p12 = p.kron(&id(n, n));
    let p23 = id(n, n).kron(&p);
    let p13 = p23.mul(&p12).and_then(|m| m.mul(&p23)).expect("square");
    (p12, p13, p23)
}

/// `x·u + y·v + c` times the identity, minus `flip`.
fn linear_minus(n: usize, dim: usize, x: u32, y: u32, flip: &CycMatrix) -> SpectralOperator {
    let mut out = SpectralOperator::constant(flip.neg());
    if x > 0 {
        out.add_assign(&SpectralOperator::monomial(
            1,
            0,
            id(n, dim).scale_rational(&int(x as i64)),
        ));
    }
    if y > 0 {
        out.add_assign(&SpectralOperator::monomial(
            0,
            1,
            id(n, dim).scale_rational(&int(y as i64)),
        ));
    }
    out
}

/// Both sides of `R₁₂(u) R₁₃(u+v) R₂₃(v) = R₂₃(v) R₁₃(u+v) R₁₂(u)` after
/// multiplying through by `u·v·(u+v)`.
pub fn ybe_sides(n: usize) -> (SpectralOperator, SpectralOperator) {
    let d = n * n * n;
    let (p12, p13, p23) = flips(n);
    let r12 = linear_minus(n, d, 1, 0, &p12);
    let r13 = linear_minus(n, d, 1, 1, &p13);
    let r23 = linear_minus(n, d, 0, 1, &p23);
    (r12.mul(&r13).mul(&r23), r23.mul(&r13).mul(&r12))
}

pub fn verify_ybe(n: usize) -> Report {
    let (lhs, rhs) = ybe_sides(n);
    let mut items = vec![Item::check("YBE", lhs == rhs, || lhs.diff_json(&rhs))];
    let p = permutation_matrix(n);
    let sq = p.mul(&p).expect("square");
    items.push(Item::check("P^2=I", sq == id(n, n * n), || {
        (matrix_to_json(&sq), matrix_to_json(&id(n, n * n)))
    }));
    let r = yang_r_matrix(n);
    let o = n as u32;
    let inv = CycMatrix::identity(o, n * n)
        .lift::<LaurentPoly>()
        .add(&p.lift::<LaurentPoly>().scale(&LaurentPoly::first(o)))
        .expect("square");
    let prod = r.mul(&inv).expect("square");
    let u2 = LaurentPoly::one(o).sub(&LaurentPoly::monomial(CycNum::one(o), 2, 0));
    let expect = CycMatrix::identity(o, n * n)
        .lift::<LaurentPoly>()
        .scale(&u2);
    items.push(Item::check("R(u)(1+P/u)=(1-u^-2)I", prod == expect, || {
        (matrix_to_json(&prod), matrix_to_json(&expect))
    }));
    Report::new("ybe", n, items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_at_one_is_identity_minus_flip() {
        let r = yang_r_matrix(2);
        let at_one = r.map(|p| p.substitute_rational(&int(1), &int(0)));
        assert_eq!(at_one, id(2, 4).sub(&permutation_matrix(2)).unwrap());
    }

    #[test]
    fn ybe_small() {
        for n in 2..=3 {
            assert!(verify_ybe(n).all_passed());
        }
    }

    #[test]
    fn ybe_fails_with_wrong_sign() {
        let n = 2;
        let d = 8;
        let (p12, p13, p23) = flips(n);
        let r12 = linear_minus(n, d, 1, 0, &p12.neg());
        let r13 = linear_minus(n, d, 1, 1, &p13);
        let r23 = linear_minus(n, d, 0, 1, &p23);
        assert_ne!(r12.mul(&r13).mul(&r23), r23.mul(&r13).mul(&r12));
    }
}
