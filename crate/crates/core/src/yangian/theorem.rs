//! One-term closed form of `J(T_i^{(j)}) Ψ_k^{(m)}` and its brute-force check.

use serde_json::json;

use crate::bell::{bell_vector, to_bell_basis, BellVector};
use crate::exactfield::json::JsonScalar;
use crate::exactfield::{rat, CycNum, ParamPoly};
use crate::index::{delta_mod, label};
use crate::lie::BasisLabelT;
use crate::report::{Item, Report};

use super::coproduct::YangianRep;

/// Coefficient and target label `(k+i-1, m+j-1)` of `J(T_i^{(j)}) Ψ_k^{(m)}`.
pub fn theorem_action(
    n: usize,
    i: usize,
    j: usize,
    k: usize,
    m: usize,
) -> (ParamPoly, (usize, usize)) {
    let o = n as u32;
    let (i, j, k, m) = (i as i64, j as i64, k as i64, m as i64);
    let wk = CycNum::omega_power(o, (j - 1) * (k - 1));
    let wm = CycNum::omega_power(o, (i - 1) * (m - 1));
    let mut c = ParamPoly::var_a(o)
        .scale(&wk)
        .sub(&ParamPoly::var_b(o).scale(&wm));
    let d = i64::from(delta_mod(n, i + k, 2) && delta_mod(n, j + m, 2))
        - i64::from(delta_mod(n, k, 1) && delta_mod(n, m, 1));
    if d != 0 {
        let half_n = CycNum::from_rational(o, rat(n as i64 * d, 2));
        c.add_assign(&ParamPoly::constant(half_n.mul(&wk)));
    }
    (c, (label(n, k + i - 1), label(n, m + j - 1)))
}

pub fn theorem_prediction(n: usize, t: BasisLabelT, k: usize, m: usize) -> BellVector {
    let (c, (k2, m2)) = theorem_action(n, t.i, t.j, k, m);
    let mut v = BellVector::zero(n);
    v.coeffs[(k2 - 1) * n + (m2 - 1)] = c;
    v
}

/// Brute-force `Δ(J(T_i^{(j)})) Ψ_k^{(m)}` in the Bell basis.
pub fn brute_force_action(rep: &YangianRep, t: BasisLabelT, k: usize, m: usize) -> BellVector {
    to_bell_basis(
        &rep.delta_jt(t)
            .apply(&bell_vector(rep.n, k as i64, m as i64)),
    )
}

fn bell_json(v: &BellVector) -> serde_json::Value {
    let terms: Vec<_> = v
        .support()
        .into_iter()
        .map(|(k, m)| json!({ "k": k, "m": m, "coeff": v.coeff(k, m).to_json() }))
        .collect();
    json!({ "basis": "bell", "n": v.n, "terms": terms })
}

pub fn verify_main_theorem(rep: &YangianRep) -> Report {
    let n = rep.n;
    let mut items = Vec::new();
    for t in rep.generators() {
        for k in 1..=n {
            for m in 1..=n {
                let lhs = brute_force_action(rep, t, k, m);
                let rhs = theorem_prediction(n, t, k, m);
                items.push(Item::check(
                    format!("J({t})Psi_{k}^({m})"),
                    lhs == rhs,
                    || (bell_json(&lhs), bell_json(&rhs)),
                ));
            }
        }
    }
    Report::new("main-theorem", n, items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        let (c, target) = theorem_action(2, 1, 2, 1, 1);
        assert_eq!(
            c,
            ParamPoly::var_a(2)
                .sub(&ParamPoly::var_b(2))
                .sub(&ParamPoly::one(2))
        );
        assert_eq!(target, (1, 2));
        for n in 2..=5usize {
            let shift = ParamPoly::var_a(n as u32)
                .sub(&ParamPoly::var_b(n as u32))
                .sub(&ParamPoly::from_rational(n as u32, rat(n as i64, 2)));
            for (i, j) in [(1, 2), (2, 1), (n, n)] {
                assert_eq!(theorem_action(n, i, j, 1, 1).0, shift);
            }
        }
    }

    #[test]
    fn coefficient_toward_singlet() {
        let n = 3usize;
        for k in 1..=n {
            for m in 1..=n {
                if (k, m) == (1, 1) {
                    continue;
                }
                let (i, j) = (label(n, 2 - k as i64), label(n, 2 - m as i64));
                let (c, target) = theorem_action(n, i, j, k, m);
                let w = CycNum::omega_power(3, -((k as i64 - 1) * (m as i64 - 1)));
                let expect = ParamPoly::var_a(3)
                    .sub(&ParamPoly::var_b(3))
                    .add(&ParamPoly::from_rational(3, rat(3, 2)))
                    .scale(&w);
                assert_eq!(target, (1, 1));
                assert_eq!(c, expect, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn targets_form_a_bijection() {
        for n in 2..=4usize {
            for (i, j) in (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .filter(|&p| p != (1, 1))
            {
                let mut seen = std::collections::HashSet::new();
                for k in 1..=n {
                    for m in 1..=n {
                        assert!(seen.insert(theorem_action(n, i, j, k, m).1));
                    }
                }
            }
        }
    }

    #[test]
    fn main_theorem_small() {
        for n in 2..=3 {
            let r = verify_main_theorem(&YangianRep::new(n));
            assert!(r.all_passed(), "{:?}", r.failures().next());
            assert_eq!(r.summary.total, (n * n - 1) * n * n);
        }
    }
}
