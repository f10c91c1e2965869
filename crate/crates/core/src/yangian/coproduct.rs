//! `Δ(x)` and `Δ(J(x))` on `W = V(λ₁, a) ⊗ V(λ_{N-1}, b)`.

use std::collections::BTreeMap;

use serde_json::json;

use crate::bell::{bell_labels, bell_vector, dual_matrix, to_bell_basis, Weight};
use crate::error::{Error, Result};
use crate::exactfield::json::matrix_to_json;
use crate::exactfield::{rat, CycMatrix, CycNum, ParamMatrix, ParamPoly, Rational};
use crate::index::label;
use crate::lie::{
    modified, modified_coordinates, modified_labels, split_casimir, BasisLabelT, IndexSet,
};
use crate::report::{Item, Report};

use super::operator::TensorOperator;

/// Evaluation parameter of a single factor.
#[derive(Clone, Debug, PartialEq)]
pub enum Parameter {
    /// the symbol `a`
    A,
    /// the symbol `b`
    B,
    Value(Rational),
}

impl Parameter {
    pub fn as_poly(&self, order: u32) -> ParamPoly {
        match self {
            Parameter::A => ParamPoly::var_a(order),
            Parameter::B => ParamPoly::var_b(order),
            Parameter::Value(r) => ParamPoly::from_rational(order, r.clone()),
        }
    }
}

/// `V(λ, c)`: `x ↦ x`, `J(x) ↦ c·x`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalModule {
    pub n: usize,
    pub weight: Weight,
    pub parameter: Parameter,
}

impl EvalModule {
    pub fn new(n: usize, weight: Weight, parameter: Parameter) -> Self {
        Self {
            n,
            weight,
            parameter,
        }
    }

    pub fn action(&self, x: &CycMatrix) -> Result<CycMatrix> {
        crate::bell::module_matrix(self.weight, x)
    }

    pub fn j_action(&self, x: &CycMatrix) -> Result<ParamMatrix> {
        let m = self.action(x)?.lift::<ParamPoly>();
        Ok(m.scale(&self.parameter.as_poly(self.n as u32)))
    }
}

fn order(n: usize) -> u32 {
    n as u32
}

/// `x ⊗ 1` with `x` acting on the fundamental factor.
pub fn on_first(x: &CycMatrix) -> CycMatrix {
    x.kron(&CycMatrix::identity(x.order(), x.rows()))
}

/// `1 ⊗ x` with `x` acting on the dual factor.
pub fn on_second(x: &CycMatrix) -> CycMatrix {
    CycMatrix::identity(x.order(), x.rows()).kron(&dual_matrix(x))
}

/// `Δ(x) = x ⊗ 1 + 1 ⊗ x` for any `x ∈ gl_N` (the identity maps to zero).
pub fn delta_matrix(x: &CycMatrix) -> CycMatrix {
    on_first(x).add(&on_second(x)).expect("uniform shapes")
}

fn check_sl(t: BasisLabelT) -> Result<()> {
    if t.is_sl() {
        Ok(())
    } else {
        Err(Error::InvalidLabel(format!(
            "{t} is the identity, not an sl_N generator"
        )))
    }
}

pub fn delta_x(n: usize, t: BasisLabelT) -> Result<CycMatrix> {
    check_sl(t)?;
    Ok(delta_matrix(&modified(n, t)))
}

/// `b(1⊗x) + a(x⊗1)`: the evaluation part of `Δ(J(x))`.
fn evaluation_part(x: &CycMatrix) -> TensorOperator {
    TensorOperator::monomial(1, 0, on_first(x)).add(&TensorOperator::monomial(0, 1, on_second(x)))
}

/// The split Casimir realized on `W` from the abstract pair list.
pub fn split_casimir_on_w(n: usize) -> CycMatrix {
    split_casimir(n).realize(|x| x.clone(), dual_matrix)
}

fn casimir_form(x: &CycMatrix, t_w: &CycMatrix) -> TensorOperator {
    let x1 = on_first(x);
    let corr = x1
        .commutator(t_w)
        .expect("uniform shapes")
        .scale_rational(&rat(1, 2));
    evaluation_part(x).add(&TensorOperator::constant(corr))
}

/// `Δ(J(x)) = 1⊗J(x) + J(x)⊗1 + ½[x⊗1, t]`.
pub fn delta_jx_casimir(n: usize, t: BasisLabelT) -> Result<TensorOperator> {
    check_sl(t)?;
    Ok(casimir_form(&modified(n, t), &split_casimir_on_w(n)))
}

/// Double-sum form of `Δ(J(T_i^{(j)}))` over `(k, l) ∈ Z_N² ∖ {(0,0)}`.
pub fn delta_jx_explicit(n: usize, t: BasisLabelT) -> Result<TensorOperator> {
    check_sl(t)?;
    let (i, j) = (t.i as i64, t.j as i64);
    let mut sum = CycMatrix::zeros(order(n), n * n, n * n);
    for k in 0..n as i64 {
        for l in 0..n as i64 {
            if (k, l) == (0, 0) {
                continue;
            }
            let c = CycNum::omega_power(order(n), k * (l + j - 1))
                - CycNum::omega_power(order(n), l * (k + i - 1));
            if c.is_zero() {
                continue;
            }
            let first = modified(n, BasisLabelT::new(n, k + i, l + j));
            let second = dual_matrix(&modified(n, BasisLabelT::new(n, 1 - k, 1 - l)));
            sum.add_scaled(&c, &first.kron(&second))
                .expect("uniform shapes");
        }
    }
    let corr = sum.scale_rational(&rat(1, 2 * n as i64));
    Ok(evaluation_part(&modified(n, t)).add(&TensorOperator::constant(corr)))
}

/// All coproduct data for one `N`, built once.
#[derive(Clone, Debug)]
pub struct YangianRep {
    pub n: usize,
    pub t_w: CycMatrix,
    delta: BTreeMap<BasisLabelT, CycMatrix>,
    delta_j: BTreeMap<BasisLabelT, TensorOperator>,
}

impl YangianRep {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "N must be at least 2");
        let mut delta = BTreeMap::new();
        let mut delta_j = BTreeMap::new();
        for t in modified_labels(n, IndexSet::Sl) {
            delta.insert(t, delta_x(n, t).expect("sl label"));
            delta_j.insert(t, delta_jx_explicit(n, t).expect("sl label"));
        }
        Self {
            n,
            t_w: split_casimir_on_w(n),
            delta,
            delta_j,
        }
    }

    pub fn generators(&self) -> Vec<BasisLabelT> {
        self.delta.keys().copied().collect()
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn delta_t(&self, t: BasisLabelT) -> &CycMatrix {
        &self.delta[&t]
    }

    pub fn delta_jt(&self, t: BasisLabelT) -> &TensorOperator {
        &self.delta_j[&t]
    }

    pub fn delta(&self, x: &CycMatrix) -> CycMatrix {
        delta_matrix(x)
    }

    /// `Δ(J(x))` for arbitrary traceless `x`, by linearity over the modified basis.
    pub fn delta_j(&self, x: &CycMatrix) -> Result<TensorOperator> {
        let mut out = TensorOperator::zero(order(self.n), self.dim());
        for (t, c) in modified_coordinates(x)? {
            out.add_scaled(&c, &self.delta_j[&t]);
        }
        Ok(out)
    }

    /// Replaces `Δ(J(t))` by a tampered copy whose correction term carries an
    /// extra factor `ω`. Only meaningful as a negative control.
    pub fn corrupt(&mut self, t: BasisLabelT) {
        let op = &self.delta_j[&t];
        let w = CycNum::omega_power(order(self.n), 1);
        let corr = op.coefficient(0, 0).scale_cyc(&w);
        let eval = evaluation_part(&modified(self.n, t));
        self.delta_j
            .insert(t, eval.add(&TensorOperator::constant(corr)));
    }
}

/// Coproduct suite: the two forms of `Δ(J(x))`, the homomorphism layer, and
/// the single-term action of `Δ(x)` on Bell vectors.
pub fn verify_coproduct(rep: &YangianRep) -> Report {
    let n = rep.n;
    let gens = rep.generators();
    let mut items = Vec::new();
    let t_w = &rep.t_w;
    for &t in &gens {
        let cas = casimir_form(&modified(n, t), t_w);
        let exp = rep.delta_jt(t);
        items.push(Item::check(
            format!("casimir=explicit {t}"),
            &cas == exp,
            || cas.diff_json(exp),
        ));
    }
    for &x in &gens {
        for &y in &gens {
            let (mx, my) = (modified(n, x), modified(n, y));
            let br = mx.commutator(&my).expect("square");
            let lhs = rep.delta_t(x).commutator(rep.delta_t(y)).expect("square");
            let rhs = delta_matrix(&br);
            items.push(Item::check(format!("[D({x}),D({y})]"), lhs == rhs, || {
                (matrix_to_json(&lhs), matrix_to_json(&rhs))
            }));
            let dx = TensorOperator::constant(rep.delta_t(x).clone());
            let lhs = dx.commutator(rep.delta_jt(y));
            let rhs = rep.delta_j(&br).expect("traceless");
            items.push(Item::check(format!("[D({x}),DJ({y})]"), lhs == rhs, || {
                lhs.diff_json(&rhs)
            }));
        }
    }
    for &t in &gens {
        let mut ok = true;
        for (k, m) in bell_labels(n) {
            let v = bell_vector(n, k as i64, m as i64);
            let image = to_bell_basis(&TensorOperator::constant(rep.delta_t(t).clone()).apply(&v));
            let target = (
                label(n, (k + t.i) as i64 - 1),
                label(n, (m + t.j) as i64 - 1),
            );
            ok &= image.support().iter().all(|&p| p == target);
            if (k, m) == (1, 1) {
                ok &= image.support().is_empty();
            }
        }
        items.push(Item::check(
            format!("D({t}) shifts Bell vectors"),
            ok,
            || (json!("support outside target"), json!("single target")),
        ));
    }
    Report::new("coproduct", n, items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell::bell_vector;

    #[test]
    fn coproduct_suite_small() {
        for n in 2..=3 {
            let r = verify_coproduct(&YangianRep::new(n));
            assert!(r.all_passed(), "{:?}", r.failures().next().map(|f| &f.id));
        }
    }

    #[test]
    fn singlet_is_annihilated() {
        let rep = YangianRep::new(2);
        let psi = bell_vector(2, 1, 1);
        let d = TensorOperator::constant(rep.delta_t(BasisLabelT::new(2, 2, 1)).clone());
        assert!(d.apply(&psi).is_zero());
    }

    #[test]
    fn casimir_and_explicit_forms_agree_small() {
        for n in 2..=3 {
            for t in modified_labels(n, IndexSet::Sl) {
                assert_eq!(
                    delta_jx_casimir(n, t).unwrap(),
                    delta_jx_explicit(n, t).unwrap(),
                    "N={n} {t}"
                );
            }
        }
    }

    #[test]
    fn explicit_example_on_singlet() {
        let t = BasisLabelT::new(2, 1, 2);
        let op = delta_jx_explicit(2, t).unwrap();
        let out = op.apply(&bell_vector(2, 1, 1));
        let target = bell_vector(2, 1, 2);
        let coeff = ParamPoly::var_a(2)
            .sub(&ParamPoly::var_b(2))
            .sub(&ParamPoly::one(2));
        let expect: Vec<_> = target.coeffs.iter().map(|c| c.mul(&coeff)).collect();
        assert_eq!(out.coeffs, expect);
    }

    #[test]
    fn degrees_and_zero_specialization() {
        let t = BasisLabelT::new(3, 2, 3);
        let op = delta_jx_explicit(3, t).unwrap();
        assert_eq!(op.degree(), Some(1));
        assert!(op.coefficient(1, 1).is_zero());
        let zero = op.specialize(&rat(0, 1), &rat(0, 1));
        assert_eq!(zero, op.coefficient(0, 0));
    }

    #[test]
    fn eval_module_scales_action() {
        let x = modified(3, BasisLabelT::new(3, 2, 1));
        let m = EvalModule::new(3, Weight::Dual, Parameter::Value(rat(2, 3)));
        assert_eq!(
            m.j_action(&x).unwrap(),
            dual_matrix(&x)
                .scale_rational(&rat(2, 3))
                .lift::<ParamPoly>()
        );
        assert!(m.action(&CycMatrix::identity(3, 3)).is_err());
    }

    #[test]
    fn identity_label_is_rejected() {
        assert!(matches!(
            delta_x(3, BasisLabelT::new(3, 1, 1)),
            Err(Error::InvalidLabel(_))
        ));
        assert!(delta_jx_explicit(3, BasisLabelT::new(3, 1, 1)).is_err());
    }
}
