//! The fundamental module `V(λ₁)`, its dual `V(λ_{N-1})`, the tensor space
//! `W = V(λ₁) ⊗ V(λ_{N-1})` and the generalized Bell basis
//! `Ψ_k^{(m)} = Σ_r ω^{(k-1)(r-1)} |r, m+r-1⟩`.
//!
//! The dual module carries `x ↦ -xᵀ`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactfield::json::JsonScalar;
use crate::exactfield::{rat, CycMatrix, CycNum, Matrix, ParamPoly, Scalar};
use crate::index::{label, slot};
use crate::lie::BasisLabelT;

/// Highest weight of an evaluation module on the underlying `sl_N` module.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Weight {
    /// `λ₁ = (1, 0, …, 0)`
    Fundamental,
    /// `λ_{N-1} = (0, …, 0, 1)`
    Dual,
}

fn order(n: usize) -> u32 {
    n as u32
}

/// Matrix of `x` on `V(λ_{N-1})`, without the `sl_N` check. Used inside sums
/// that may include the identity with zero weight.
pub(crate) fn dual_matrix(x: &CycMatrix) -> CycMatrix {
    x.transpose().neg()
}

/// Matrix of an `sl_N` element on the given module.
pub fn module_matrix(weight: Weight, x: &CycMatrix) -> Result<CycMatrix> {
    match weight {
        Weight::Fundamental => Ok(x.clone()),
        Weight::Dual => {
            if !x.is_square() {
                return Err(Error::DimensionMismatch {
                    op: "dual action",
                    left: x.shape(),
                    right: x.shape(),
                });
            }
            if !x.trace()?.is_zero() {
                return Err(Error::NotTraceless);
            }
            Ok(dual_matrix(x))
        }
    }
}

macro_rules! module_vector {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq)]
        pub struct $name {
            pub n: usize,
            pub coeffs: Vec<ParamPoly>,
        }

        impl $name {
            pub fn zero(n: usize) -> Self {
                Self {
                    n,
                    coeffs: vec![ParamPoly::zero(order(n)); n],
                }
            }

            /// Basis vector `|m⟩`, label reduced mod `N`.
            pub fn basis(n: usize, m: i64) -> Self {
                let mut v = Self::zero(n);
                v.coeffs[slot(n, m)] = ParamPoly::one(order(n));
                v
            }

            pub fn from_cyc(n: usize, coeffs: &[CycNum]) -> Self {
                Self {
                    n,
                    coeffs: coeffs.iter().map(ParamPoly::from_cyc).collect(),
                }
            }
        }
    };
}

module_vector!(FundVector, "Vector in `V(λ₁)` in the basis `|1⟩₁ … |N⟩₁`.");
module_vector!(
    DualVector,
    "Vector in `V(λ_{N-1})` in the dual basis `|1⟩₂ … |N⟩₂`."
);

pub fn act_fundamental(x: &CycMatrix, v: &FundVector) -> Result<FundVector> {
    if x.shape() != (v.n, v.n) {
        return Err(Error::DimensionMismatch {
            op: "act_fundamental",
            left: x.shape(),
            right: (v.n, 1),
        });
    }
    Ok(FundVector {
        n: v.n,
        coeffs: x.lift::<ParamPoly>().mul_vec(&v.coeffs)?,
    })
}

/// Action on the dual module; only traceless `x` is accepted.
pub fn act_dual(x: &CycMatrix, v: &DualVector) -> Result<DualVector> {
    if x.shape() != (v.n, v.n) {
        return Err(Error::DimensionMismatch {
            op: "act_dual",
            left: x.shape(),
            right: (v.n, 1),
        });
    }
    let m = module_matrix(Weight::Dual, x)?;
    Ok(DualVector {
        n: v.n,
        coeffs: m.lift::<ParamPoly>().mul_vec(&v.coeffs)?,
    })
}

/// Closed form `T_i^{(j)}|m⟩₁ = ω^{(i-1)(m-j)} |m-j+1⟩₁`: coefficient and target label.
pub fn fundamental_closed_form(n: usize, t: BasisLabelT, m: usize) -> (CycNum, usize) {
    let (i, j, m) = (t.i as i64, t.j as i64, m as i64);
    (
        CycNum::omega_power(order(n), (i - 1) * (m - j)),
        label(n, m - j + 1),
    )
}

/// Closed form `T_i^{(j)}|m⟩₂ = -ω^{(i-1)(m-1)} |m+j-1⟩₂`.
pub fn dual_closed_form(n: usize, t: BasisLabelT, m: usize) -> (CycNum, usize) {
    let (i, j, m) = (t.i as i64, t.j as i64, m as i64);
    (
        CycNum::omega_power(order(n), (i - 1) * (m - 1)).neg(),
        label(n, m + j - 1),
    )
}

/// Bilinear pairing `⟨v*, w⟩ = Σ v*_i w_i` between the dual and fundamental modules.
pub fn dual_pairing(v: &DualVector, w: &FundVector) -> ParamPoly {
    let mut acc = ParamPoly::zero(order(v.n));
    for (a, b) in v.coeffs.iter().zip(&w.coeffs) {
        acc.add_assign(&a.mul(b));
    }
    acc
}

/// Vector in `W` in the product basis `|i,j⟩`, row-major over `(i, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorVector {
    pub n: usize,
    pub coeffs: Vec<ParamPoly>,
}

/// Vector in `W` over the Bell basis, index `(k-1)·N + (m-1)` for `Ψ_k^{(m)}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BellVector {
    pub n: usize,
    pub coeffs: Vec<ParamPoly>,
}

impl TensorVector {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: vec![ParamPoly::zero(order(n)); n * n],
        }
    }

    /// `|i, j⟩`, labels reduced mod `N`.
    pub fn product_basis(n: usize, i: i64, j: i64) -> Self {
        let mut v = Self::zero(n);
        v.coeffs[slot(n, i) * n + slot(n, j)] = ParamPoly::one(order(n));
        v
    }

    pub fn product(v: &FundVector, w: &DualVector) -> Self {
        let n = v.n;
        let mut out = Self::zero(n);
        for (i, a) in v.coeffs.iter().enumerate() {
            for (j, b) in w.coeffs.iter().enumerate() {
                out.coeffs[i * n + j] = a.mul(b);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ParamPoly::is_zero)
    }

    /// Coefficients as field elements, if no free parameter occurs.
    pub fn constant_coeffs(&self) -> Result<Vec<CycNum>> {
        self.coeffs
            .iter()
            .map(|c| c.as_constant().ok_or(Error::Symbolic))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "basis": "tensor", "n": self.n, "coeffs": self.coeffs.iter().map(JsonScalar::to_json).collect::<Vec<_>>() })
    }
}

impl BellVector {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: vec![ParamPoly::zero(order(n)); n * n],
        }
    }

    pub fn coeff(&self, k: usize, m: usize) -> &ParamPoly {
        &self.coeffs[(k - 1) * self.n + (m - 1)]
    }

    /// Labels `(k, m)` carrying a nonzero coefficient.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n * n)
            .filter(|&p| !self.coeffs[p].is_zero())
            .map(|p| (p / n + 1, p % n + 1))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "basis": "bell", "n": self.n, "coeffs": self.coeffs.iter().map(JsonScalar::to_json).collect::<Vec<_>>() })
    }
}

/// `Ψ_k^{(m)}` in the product basis, field coefficients.
pub fn bell_vector_cyc(n: usize, k: i64, m: i64) -> Vec<CycNum> {
    let mut v = vec![CycNum::zero(order(n)); n * n];
    for r in 1..=n as i64 {
        v[slot(n, r) * n + slot(n, m + r - 1)] = CycNum::omega_power(order(n), (k - 1) * (r - 1));
    }
    v
}

pub fn bell_vector(n: usize, k: i64, m: i64) -> TensorVector {
    TensorVector {
        n,
        coeffs: bell_vector_cyc(n, k, m)
            .iter()
            .map(ParamPoly::from_cyc)
            .collect(),
    }
}

/// Bell labels `(k, m)` in storage order.
pub fn bell_labels(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|k| (1..=n).map(move |m| (k, m))).collect()
}

/// Change of basis with column `(k-1)N + (m-1)` equal to `Ψ_k^{(m)}`.
pub fn bell_basis_matrix(n: usize) -> CycMatrix {
    let mut b = CycMatrix::zeros(order(n), n * n, n * n);
    for (k, m) in bell_labels(n) {
        let col = (k - 1) * n + (m - 1);
        for (row, c) in bell_vector_cyc(n, k as i64, m as i64)
            .into_iter()
            .enumerate()
        {
            b.set(row, col, c);
        }
    }
    b
}

/// Inverse of [`bell_basis_matrix`]: `(1/N) B†`.
pub fn bell_basis_inverse(n: usize) -> CycMatrix {
    bell_basis_matrix(n)
        .adjoint()
        .scale_rational(&rat(1, n as i64))
}

pub fn to_bell_basis(v: &TensorVector) -> BellVector {
    let n = v.n;
    let inv = rat(1, n as i64);
    let mut out = BellVector::zero(n);
    for (k, m) in bell_labels(n) {
        let mut acc = ParamPoly::zero(order(n));
        for r in 1..=n as i64 {
            let c = &v.coeffs[slot(n, r) * n + slot(n, m as i64 + r - 1)];
            if !c.is_zero() {
                acc.add_assign(&c.scale(&CycNum::omega_power(order(n), -(k as i64 - 1) * (r - 1))));
            }
        }
        out.coeffs[(k - 1) * n + (m - 1)] = acc.scale_rational(&inv);
    }
    out
}

pub fn from_bell_basis(v: &BellVector) -> TensorVector {
    let n = v.n;
    let mut out = TensorVector::zero(n);
    for (k, m) in bell_labels(n) {
        let c = v.coeff(k, m);
        if c.is_zero() {
            continue;
        }
        for r in 1..=n as i64 {
            let w = CycNum::omega_power(order(n), (k as i64 - 1) * (r - 1));
            out.coeffs[slot(n, r) * n + slot(n, m as i64 + r - 1)].add_assign(&c.scale(&w));
        }
    }
    out
}

/// Conjugate-linear pairing `⟨v, w⟩ = Σ conj(v_i) w_i`.
pub fn hermitian_pairing(v: &[CycNum], w: &[CycNum]) -> CycNum {
    let mut acc = CycNum::zero(v[0].order());
    for (a, b) in v.iter().zip(w) {
        if !a.is_zero() && !b.is_zero() {
            acc.add_assign(&a.conjugate().mul(b));
        }
    }
    acc
}

/// `Tr₂(v v†) / ⟨v, v⟩`. Equal to `I/N` exactly when `v` is maximally entangled.
pub fn reduced_density_first(v: &TensorVector) -> Result<CycMatrix> {
    let n = v.n;
    let c = v.constant_coeffs()?;
    let norm = hermitian_pairing(&c, &c);
    let inv = norm.inverse().ok_or(Error::ZeroVector)?;
    let rho = Matrix::from_fn(order(n), n, n, |i, j| {
        let mut acc = CycNum::zero(order(n));
        for s in 0..n {
            let (x, y) = (&c[i * n + s], &c[j * n + s]);
            if !x.is_zero() && !y.is_zero() {
                acc.add_assign(&x.mul(&y.conjugate()));
            }
        }
        acc.mul(&inv)
    });
    Ok(rho)
}

/// Bell suite: closed forms of the module actions, the Bell basis, and the
/// entanglement certificate with its product-state control.
pub fn verify_bell(n: usize) -> crate::report::Report {
    use crate::exactfield::linalg::matrix_rank;
    use crate::lie::{modified, modified_labels, IndexSet};
    use crate::report::{Item, Report};
    let mut items = Vec::new();
    let mut closed = true;
    for t in modified_labels(n, IndexSet::Sl) {
        let x = modified(n, t);
        for m in 1..=n {
            let (c, target) = fundamental_closed_form(n, t, m);
            let mut expect = FundVector::zero(n);
            expect.coeffs[target - 1] = ParamPoly::constant(c);
            closed &= act_fundamental(&x, &FundVector::basis(n, m as i64)).ok() == Some(expect);
            let (c, target) = dual_closed_form(n, t, m);
            let mut expect = DualVector::zero(n);
            expect.coeffs[target - 1] = ParamPoly::constant(c);
            closed &= act_dual(&x, &DualVector::basis(n, m as i64)).ok() == Some(expect);
        }
    }
    items.push(Item::check("module closed forms", closed, || {
        (json!("mismatch"), json!("closed form"))
    }));
    let b = bell_basis_matrix(n);
    let rank = matrix_rank(&b);
    items.push(Item::check("bell basis rank", rank == n * n, || {
        (json!(rank), json!(n * n))
    }));
    let gram = b.adjoint().mul(&b).expect("square");
    let expect = CycMatrix::identity(order(n), n * n).scale_rational(&rat(n as i64, 1));
    items.push(Item::check("bell orthogonality", gram == expect, || {
        (
            crate::exactfield::json::matrix_to_json(&gram),
            crate::exactfield::json::matrix_to_json(&expect),
        )
    }));
    let target = CycMatrix::identity(order(n), n).scale_rational(&rat(1, n as i64));
    for (k, m) in bell_labels(n) {
        let rho = reduced_density_first(&bell_vector(n, k as i64, m as i64)).expect("nonzero");
        items.push(Item::check(
            format!("density Psi_{k}^({m})"),
            rho == target,
            || {
                (
                    crate::exactfield::json::matrix_to_json(&rho),
                    crate::exactfield::json::matrix_to_json(&target),
                )
            },
        ));
    }
    let rho = reduced_density_first(&TensorVector::product_basis(n, 1, 2)).expect("nonzero");
    let r = matrix_rank(&rho);
    items.push(Item::check("product state density rank 1", r == 1, || {
        (json!(r), json!(1))
    }));
    let mut roundtrip = true;
    for i in 1..=n as i64 {
        for j in 1..=n as i64 {
            let v = TensorVector::product_basis(n, i, j);
            roundtrip &= from_bell_basis(&to_bell_basis(&v)) == v;
        }
    }
    items.push(Item::check("bell roundtrip", roundtrip, || {
        (json!("mismatch"), json!("identity"))
    }));
    Report::new("bell", n, items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::linalg::matrix_rank;
    use crate::lie::{modified, modified_labels, IndexSet};

    fn cn(n: usize, v: i64) -> CycNum {
        CycNum::from_int(n as u32, v)
    }

    fn add(a: &TensorVector, b: &TensorVector, s: i64) -> TensorVector {
        let n = a.n;
        TensorVector {
            n,
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x.add(&y.scale(&cn(n, s))))
                .collect(),
        }
    }

    #[test]
    fn bell_suite() {
        for n in 2..=4 {
            assert!(verify_bell(n).all_passed());
        }
    }

    #[test]
    fn bell_vector_examples() {
        let n = 3;
        let mut sum = TensorVector::zero(n);
        for r in 1..=3 {
            sum = add(&sum, &TensorVector::product_basis(n, r, r), 1);
        }
        assert_eq!(bell_vector(n, 1, 1), sum);
        let p11 = TensorVector::product_basis(2, 1, 1);
        let p22 = TensorVector::product_basis(2, 2, 2);
        assert_eq!(bell_vector(2, 2, 1), add(&p11, &p22, -1));
        let p12 = TensorVector::product_basis(2, 1, 2);
        let p21 = TensorVector::product_basis(2, 2, 1);
        assert_eq!(bell_vector(2, 1, 2), add(&p12, &p21, 1));
    }

    #[test]
    fn fundamental_lemma_examples() {
        let t = BasisLabelT::new(3, 1, 2);
        let out = act_fundamental(&modified(3, t), &FundVector::basis(3, 1)).unwrap();
        assert_eq!(out, FundVector::basis(3, 3));
        let id = modified(4, BasisLabelT::new(4, 1, 1));
        assert_eq!(
            act_fundamental(&id, &FundVector::basis(4, 2)).unwrap(),
            FundVector::basis(4, 2)
        );
    }

    #[test]
    fn dual_lemma_example_and_domain() {
        let t = BasisLabelT::new(2, 2, 1);
        let out = act_dual(&modified(2, t), &DualVector::basis(2, 2)).unwrap();
        assert_eq!(out, DualVector::basis(2, 2));
        let id = modified(3, BasisLabelT::new(3, 1, 1));
        assert!(matches!(
            act_dual(&id, &DualVector::basis(3, 1)),
            Err(Error::NotTraceless)
        ));
    }

    #[test]
    fn closed_forms_match_matrix_action() {
        for n in 2..=5usize {
            for t in modified_labels(n, IndexSet::Sl) {
                let x = modified(n, t);
                for m in 1..=n {
                    let (c, target) = fundamental_closed_form(n, t, m);
                    let mut expect = FundVector::zero(n);
                    expect.coeffs[target - 1] = ParamPoly::constant(c);
                    assert_eq!(
                        act_fundamental(&x, &FundVector::basis(n, m as i64)).unwrap(),
                        expect
                    );
                    let (c, target) = dual_closed_form(n, t, m);
                    let mut expect = DualVector::zero(n);
                    expect.coeffs[target - 1] = ParamPoly::constant(c);
                    assert_eq!(
                        act_dual(&x, &DualVector::basis(n, m as i64)).unwrap(),
                        expect
                    );
                }
            }
        }
    }

    #[test]
    fn bell_conversion_examples() {
        let v = to_bell_basis(&TensorVector::product_basis(2, 1, 1));
        let half = ParamPoly::from_rational(2, rat(1, 2));
        assert_eq!(v.coeff(1, 1), &half);
        assert_eq!(v.coeff(2, 1), &half);
        assert_eq!(v.support(), vec![(1, 1), (2, 1)]);
        let n = 3;
        let mut s = TensorVector::zero(n);
        for r in 1..=3i64 {
            s.coeffs[slot(n, r) * n + slot(n, r)] =
                ParamPoly::constant(CycNum::omega_power(3, r - 1));
        }
        assert_eq!(to_bell_basis(&s).support(), vec![(2, 1)]);
    }

    #[test]
    fn bell_roundtrip_on_product_basis() {
        for n in 2..=5usize {
            for i in 1..=n as i64 {
                for j in 1..=n as i64 {
                    let v = TensorVector::product_basis(n, i, j);
                    assert_eq!(from_bell_basis(&to_bell_basis(&v)), v);
                }
            }
        }
    }

    #[test]
    fn bell_basis_is_orthogonal_and_invertible() {
        for n in 2..=5usize {
            let b = bell_basis_matrix(n);
            assert_eq!(matrix_rank(&b), n * n);
            assert_eq!(
                bell_basis_inverse(n).mul(&b).unwrap(),
                CycMatrix::identity(n as u32, n * n)
            );
            for (k, m) in bell_labels(n) {
                for (k2, m2) in bell_labels(n) {
                    let p = hermitian_pairing(
                        &bell_vector_cyc(n, k as i64, m as i64),
                        &bell_vector_cyc(n, k2 as i64, m2 as i64),
                    );
                    let expect = if (k, m) == (k2, m2) { n as i64 } else { 0 };
                    assert_eq!(p, cn(n, expect));
                }
            }
        }
    }

    #[test]
    fn bell_states_are_maximally_entangled() {
        for n in 2..=5usize {
            let target = CycMatrix::identity(n as u32, n).scale_rational(&rat(1, n as i64));
            for (k, m) in bell_labels(n) {
                assert_eq!(
                    reduced_density_first(&bell_vector(n, k as i64, m as i64)).unwrap(),
                    target
                );
            }
        }
    }

    #[test]
    fn product_state_has_rank_one_density() {
        let rho = reduced_density_first(&TensorVector::product_basis(3, 1, 2)).unwrap();
        let mut e11 = CycMatrix::zeros(3, 3, 3);
        e11.set(0, 0, CycNum::one(3));
        assert_eq!(rho, e11);
        assert_eq!(matrix_rank(&rho), 1);
    }

    #[test]
    fn density_rejects_zero_and_symbolic() {
        assert!(matches!(
            reduced_density_first(&TensorVector::zero(2)),
            Err(Error::ZeroVector)
        ));
        let mut v = TensorVector::zero(2);
        v.coeffs[0] = ParamPoly::var_a(2);
        assert!(matches!(reduced_density_first(&v), Err(Error::Symbolic)));
    }
}
