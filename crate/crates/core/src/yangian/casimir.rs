//! The Casimir `I²`, its Yangian analogue `J²`, and the commutation lemma.

use crate::bell::{bell_labels, bell_vector, dual_matrix, TensorVector};
use crate::error::Result;
use crate::exactfield::{rat, CycMatrix, CycNum, ParamPoly, Rational};
use crate::lie::{
    cartan_weyl_pairs, principal, principal_dual, principal_labels, principal_matrix, IndexSet,
};
use crate::report::{Item, Report};

use super::coproduct::{delta_matrix, YangianRep};
use super::operator::TensorOperator;

/// `I² = Σ (ω^{ij}/N) ρ(A_{ij}) ρ(A_{-i,-j})` for an arbitrary realization `ρ`.
pub fn casimir_i2_with(n: usize, rho: impl Fn(&CycMatrix) -> CycMatrix) -> CycMatrix {
    let mut acc: Option<CycMatrix> = None;
    for l in principal_labels(n, IndexSet::Sl) {
        let term = rho(&principal(n, l))
            .mul(&rho(&principal_dual(n, l)))
            .expect("uniform shapes");
        match acc.as_mut() {
            Some(a) => a.add_assign(&term).expect("uniform shapes"),
            None => acc = Some(term),
        }
    }
    acc.expect("sl_N basis is nonempty")
}

pub fn casimir_i2_fundamental(n: usize) -> CycMatrix {
    casimir_i2_with(n, |x| x.clone())
}

pub fn casimir_i2_dual(n: usize) -> CycMatrix {
    casimir_i2_with(n, dual_matrix)
}

pub fn casimir_i2_tensor(n: usize) -> CycMatrix {
    casimir_i2_with(n, delta_matrix)
}

/// `J² = Σ (ω^{ij}/N) Δ(J(A_{ij})) Δ(J(A_{-i,-j}))`, with
/// `Δ(J(A_{pq})) = ω^p Δ(J(T_{p+1}^{(q+1)}))`.
pub fn casimir_j2(rep: &YangianRep) -> TensorOperator {
    let n = rep.n;
    let o = n as u32;
    let ja = |p: usize, q: usize| {
        let l = crate::lie::BasisLabelA { i: p, j: q };
        let (phase, t) = l.to_modified(n);
        rep.delta_jt(t).scale(&CycNum::omega_power(o, phase))
    };
    let mut acc = TensorOperator::zero(o, rep.dim());
    for l in principal_labels(n, IndexSet::Sl) {
        let d = l.dual(n);
        let coeff = CycNum::omega_power(o, (l.i * l.j) as i64).scale(&rat(1, n as i64));
        acc.add_scaled(&coeff, &ja(l.i, l.j).mul(&ja(d.i, d.j)));
    }
    acc
}

/// `J²` from the Cartan-Weyl dual pair instead of the principal one.
pub fn casimir_j2_cartan_weyl(rep: &YangianRep) -> Result<TensorOperator> {
    let mut acc = TensorOperator::zero(rep.n as u32, rep.dim());
    for (x, y) in cartan_weyl_pairs(rep.n) {
        acc.add_assign(&rep.delta_j(&x)?.mul(&rep.delta_j(&y)?));
    }
    Ok(acc)
}

fn sum_sq(n: usize) -> ParamPoly {
    let o = n as u32;
    let c = CycNum::from_rational(o, rat(n as i64 * n as i64 - 1, n as i64));
    ParamPoly::monomial(c.clone(), 2, 0).add(&ParamPoly::monomial(c, 0, 2))
}

fn ab(n: usize, r: Rational) -> ParamPoly {
    ParamPoly::monomial(CycNum::from_rational(n as u32, r), 1, 1)
}

/// `J²` eigenvalue on `Ψ_1^{(1)}`.
pub fn j2_eigenvalue_singlet(n: usize) -> ParamPoly {
    let n2 = n as i64 * n as i64;
    sum_sq(n)
        .add(&ParamPoly::from_rational(
            n as u32,
            rat(-(n as i64) * (n2 - 1), 4),
        ))
        .add(&ab(n, rat(-2 * (n2 - 1), n as i64)))
}

/// `J²` eigenvalue on `Ψ_k^{(m)}`, `(k, m) ≠ (1, 1)`.
pub fn j2_eigenvalue_adjoint(n: usize) -> ParamPoly {
    sum_sq(n)
        .add(&ParamPoly::from_rational(n as u32, rat(-(n as i64), 4)))
        .add(&ab(n, rat(2, n as i64)))
}

/// `ρ = (N²-1)(a²+b²)/N - N/2 + 1/(2N)`, the common value when `ab = (2-N²)/8`.
pub fn j2_common_eigenvalue(n: usize) -> ParamPoly {
    let ni = n as i64;
    sum_sq(n).add(&ParamPoly::from_rational(
        n as u32,
        rat(1 - ni * ni, 2 * ni),
    ))
}

/// The product `ab` at which `J²` acts by a scalar.
pub fn scalar_product(n: usize) -> Rational {
    let ni = n as i64;
    rat(2 - ni * ni, 8)
}

pub fn j2_is_scalar_at(n: usize, j2: &TensorOperator, a: &Rational, b: &Rational) -> bool {
    let m = j2.specialize(a, b);
    let c = m.get(0, 0).clone();
    m == CycMatrix::identity(n as u32, n * n).scale_cyc(&c)
}

fn eigen_item(id: String, op: &TensorOperator, v: &TensorVector, value: &ParamPoly) -> Item {
    let lhs = op.apply(v);
    let rhs = TensorVector {
        n: v.n,
        coeffs: v.coeffs.iter().map(|c| c.mul(value)).collect(),
    };
    Item::check(id, lhs == rhs, || (lhs.to_json(), rhs.to_json()))
}

/// Spectrum suite: `J²` and `I²` on every Bell vector, basis independence of
/// `J²`, and the scalar-action criterion.
pub fn verify_spectrum(rep: &YangianRep) -> Result<Report> {
    let n = rep.n;
    let o = n as u32;
    let j2 = casimir_j2(rep);
    let i2 = TensorOperator::constant(casimir_i2_tensor(n));
    let mut items = Vec::new();
    for (k, m) in bell_labels(n) {
        let v = bell_vector(n, k as i64, m as i64);
        let (je, ie) = if (k, m) == (1, 1) {
            (j2_eigenvalue_singlet(n), ParamPoly::zero(o))
        } else {
            (
                j2_eigenvalue_adjoint(n),
                ParamPoly::from_rational(o, rat(2 * n as i64, 1)),
            )
        };
        items.push(eigen_item(format!("J2 Psi_{k}^({m})"), &j2, &v, &je));
        items.push(eigen_item(format!("I2 Psi_{k}^({m})"), &i2, &v, &ie));
    }
    let cw = casimir_j2_cartan_weyl(rep)?;
    items.push(Item::check("J2 basis independence", cw == j2, || {
        j2.diff_json(&cw)
    }));
    let value = |x: &CycMatrix| x.get(0, 0).clone();
    let fund = casimir_i2_fundamental(n);
    let fund_expect =
        CycMatrix::identity(o, n).scale_rational(&rat(n as i64 * n as i64 - 1, n as i64));
    items.push(Item::check("I2 fundamental", fund == fund_expect, || {
        (
            serde_json::json!(value(&fund).to_string()),
            serde_json::json!(value(&fund_expect).to_string()),
        )
    }));
    let dual = casimir_i2_dual(n);
    items.push(Item::check("I2 dual", dual == fund_expect, || {
        (
            serde_json::json!(value(&dual).to_string()),
            serde_json::json!(value(&fund_expect).to_string()),
        )
    }));

    let (a, b) = (rat(1, 2), rat(2 - n as i64 * n as i64, 4));
    let scalar = j2.specialize(&a, &b);
    let rho = j2_common_eigenvalue(n).substitute_rational(&a, &b);
    let expect = CycMatrix::identity(o, n * n).scale_cyc(&rho);
    items.push(Item::check(
        format!("J2 scalar at a={a} b={b}"),
        scalar == expect,
        || {
            (
                crate::exactfield::json::matrix_to_json(&scalar),
                crate::exactfield::json::matrix_to_json(&expect),
            )
        },
    ));
    let generic = !j2_is_scalar_at(n, &j2, &rat(1, 1), &rat(0, 1));
    items.push(Item::check("J2 not scalar at a=1 b=0", generic, || {
        (serde_json::json!("scalar"), serde_json::json!("not scalar"))
    }));
    Ok(Report::new("j2", n, items))
}

/// `Δ(A_{ii})` for `i = 1 .. N-1`.
pub fn delta_cartan(n: usize) -> Vec<(usize, CycMatrix)> {
    (1..n)
        .map(|i| (i, delta_matrix(&principal_matrix(n, i as i64, i as i64))))
        .collect()
}

/// `[I², J²] = [J², Δ(A_{ii})] = [I², Δ(A_{ii})] = 0` on `W`.
pub fn verify_commutation_lemma(rep: &YangianRep) -> Report {
    let n = rep.n;
    let j2 = casimir_j2(rep);
    let i2 = TensorOperator::constant(casimir_i2_tensor(n));
    let mut items = Vec::new();
    let zero_item = |id: String, c: TensorOperator| {
        let z = TensorOperator::zero(c.order(), c.dim());
        Item::check(id, c.is_zero(), || c.diff_json(&z))
    };
    items.push(zero_item("[I2,J2]".into(), i2.commutator(&j2)));
    for (i, d) in delta_cartan(n) {
        let d = TensorOperator::constant(d);
        items.push(zero_item(format!("[J2,A_{i}{i}]"), j2.commutator(&d)));
        items.push(zero_item(format!("[I2,A_{i}{i}]"), i2.commutator(&d)));
    }
    Report::new("commutation", n, items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn casimir_values() {
        for n in 2..=4 {
            let o = n as u32;
            let i2 = casimir_i2_tensor(n);
            let sing = bell_vector(n, 1, 1);
            assert!(TensorOperator::constant(i2).apply(&sing).is_zero());
            let f = casimir_i2_fundamental(n);
            assert_eq!(
                f,
                CycMatrix::identity(o, n).scale_rational(&rat(n as i64 * n as i64 - 1, n as i64))
            );
        }
    }

    #[test]
    fn eigenvalues_meet_at_scalar_product() {
        for n in 2..=5usize {
            let r = scalar_product(n);
            let (a, b) = (rat(1, 2), r.clone() * rat(2, 1));
            let e1 = j2_eigenvalue_singlet(n).substitute_rational(&a, &b);
            let e2 = j2_eigenvalue_adjoint(n).substitute_rational(&a, &b);
            let rho = j2_common_eigenvalue(n).substitute_rational(&a, &b);
            assert_eq!(e1, e2);
            assert_eq!(e1, rho);
        }
    }

    #[test]
    fn spectrum_and_commutation_small() {
        for n in 2..=3 {
            let rep = YangianRep::new(n);
            let r = verify_spectrum(&rep).unwrap();
            assert!(
                r.all_passed(),
                "{:?}",
                r.failures().map(|f| &f.id).collect::<Vec<_>>()
            );
            assert!(verify_commutation_lemma(&rep).all_passed());
        }
    }

    #[test]
    fn zero_parameter_eigenvalues() {
        let n = 3;
        let z = rat(0, 1);
        assert_eq!(
            j2_eigenvalue_adjoint(n).substitute_rational(&z, &z),
            CycNum::from_rational(3, rat(-3, 4))
        );
        assert_eq!(
            j2_eigenvalue_singlet(n).substitute_rational(&z, &z),
            CycNum::from_rational(3, rat(-6, 1))
        );
    }
}
