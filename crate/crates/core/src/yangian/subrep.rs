//! Invariant subspaces of `W` at specialized parameters.

use serde::Serialize;
use serde_json::json;

use crate::bell::{bell_basis_inverse, bell_basis_matrix, bell_vector_cyc};
use crate::exactfield::linalg::{flatten, EchelonBasis};
use crate::exactfield::{rat, CycMatrix, Rational};
use crate::report::{Item, Report};

use super::coproduct::YangianRep;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Irreducible,
    V0Invariant,
    VadInvariant,
    Unresolved,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Irreducible => "irreducible",
            Verdict::V0Invariant => "V0 invariant; quotient = adjoint",
            Verdict::VadInvariant => "Vad invariant; quotient = trivial",
            Verdict::Unresolved => "unresolved",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubrepReport {
    pub n: usize,
    pub a: String,
    pub b: String,
    pub verdict: Verdict,
    pub v0_invariant: bool,
    pub vad_invariant: bool,
    /// Dimension of the unital algebra generated by the action, when computed.
    pub burnside_dim: Option<usize>,
    /// Whether every Bell vector generates `W` (evidence only).
    pub cyclic_from_bell: Option<bool>,
    /// True when the verdict rests on exact certificates rather than evidence.
    pub conclusive: bool,
}

impl SubrepReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn summary_line(&self) -> String {
        match (self.verdict, self.burnside_dim) {
            (Verdict::Irreducible, Some(d)) => format!("irreducible (Burnside {d})"),
            (Verdict::Irreducible, None) => {
                "irreducible (cyclic-generation evidence, not a proof)".to_string()
            }
            (v, _) => v.to_string(),
        }
    }
}

/// The `2(N²-1)` action matrices `Δ(x)`, `Δ(J(x))` at the given parameters.
pub fn action_matrices(rep: &YangianRep, a: &Rational, b: &Rational) -> Vec<CycMatrix> {
    let gens = rep.generators();
    let mut out: Vec<_> = gens.iter().map(|&t| rep.delta_t(t).clone()).collect();
    out.extend(gens.iter().map(|&t| rep.delta_jt(t).specialize(a, b)));
    out
}

/// `V₀ = span{Ψ_1^{(1)}}` is invariant iff the `(1,1)` column of every
/// operator in the Bell basis vanishes off the diagonal; `V_ad` iff the
/// `(1,1)` row does.
fn invariance(n: usize, ops: &[CycMatrix]) -> (bool, bool) {
    let b = bell_basis_matrix(n);
    let binv = bell_basis_inverse(n);
    let mut v0 = true;
    let mut vad = true;
    for op in ops {
        let m = binv.mul(&op.mul(&b).expect("square")).expect("square");
        for r in 1..n * n {
            v0 &= m.get(r, 0).is_zero();
            vad &= m.get(0, r).is_zero();
        }
    }
    (v0, vad)
}

/// Dimension of the unital algebra generated by `ops`.
pub fn burnside_dimension(ops: &[CycMatrix]) -> usize {
    let d = ops[0].rows();
    let order = ops[0].order();
    let mut basis = EchelonBasis::new(order, d * d);
    let id = CycMatrix::identity(order, d);
    basis.insert(&flatten(&id));
    let mut frontier = vec![id];
    while let Some(e) = frontier.pop() {
        for g in ops {
            let p = g.mul(&e).expect("square");
            if basis.insert(&flatten(&p)) {
                if basis.is_full() {
                    return basis.rank();
                }
                frontier.push(p);
            }
        }
    }
    basis.rank()
}

/// Dimension of the smallest invariant subspace containing `v`.
pub fn cyclic_dimension(ops: &[CycMatrix], v: Vec<crate::exactfield::CycNum>) -> usize {
    let order = ops[0].order();
    let mut basis = EchelonBasis::new(order, v.len());
    basis.insert(&v);
    let mut frontier = vec![v];
    while let Some(u) = frontier.pop() {
        for g in ops {
            let w = g.mul_vec(&u).expect("square");
            if basis.insert(&w) {
                frontier.push(w);
            }
        }
    }
    basis.rank()
}

/// Maximum `N` for which the Burnside closure runs without override.
pub const BURNSIDE_MAX_N: usize = 3;

pub fn analyze_subrep(
    rep: &YangianRep,
    a: &Rational,
    b: &Rational,
    burnside: bool,
) -> SubrepReport {
    let n = rep.n;
    let ops = action_matrices(rep, a, b);
    let (v0, vad) = invariance(n, &ops);
    let mut report = SubrepReport {
        n,
        a: a.to_string(),
        b: b.to_string(),
        verdict: Verdict::Unresolved,
        v0_invariant: v0,
        vad_invariant: vad,
        burnside_dim: None,
        cyclic_from_bell: None,
        conclusive: false,
    };
    if v0 {
        report.verdict = Verdict::V0Invariant;
        report.conclusive = true;
    } else if vad {
        report.verdict = Verdict::VadInvariant;
        report.conclusive = true;
    }
    if burnside {
        let dim = burnside_dimension(&ops);
        report.burnside_dim = Some(dim);
        if dim == n.pow(4) {
            report.verdict = Verdict::Irreducible;
            report.conclusive = true;
        }
    } else {
        let cyclic = (1..=n as i64)
            .flat_map(|k| (1..=n as i64).map(move |m| (k, m)))
            .all(|(k, m)| cyclic_dimension(&ops, bell_vector_cyc(n, k, m)) == n * n);
        report.cyclic_from_bell = Some(cyclic);
        if cyclic && !v0 && !vad {
            report.verdict = Verdict::Irreducible;
        }
    }
    report
}

/// Rational pairs with `|a - b| ≠ N/2` for every `N ≥ 2`.
pub fn generic_pairs() -> Vec<(Rational, Rational)> {
    vec![
        (rat(1, 3), rat(0, 1)),
        (rat(2, 1), rat(-1, 5)),
        (rat(-3, 7), rat(5, 4)),
    ]
}

/// The three cases of the corollary: `a-b = N/2`, `a-b = -N/2`, and generic pairs.
pub fn verify_subrep(rep: &YangianRep, burnside: bool) -> Report {
    let n = rep.n;
    let half = rat(n as i64, 2);
    let zero = rat(0, 1);
    let mut cases = vec![
        (half.clone(), zero.clone(), Verdict::V0Invariant),
        (zero, half, Verdict::VadInvariant),
    ];
    cases.extend(
        generic_pairs()
            .into_iter()
            .map(|(a, b)| (a, b, Verdict::Irreducible)),
    );
    let items = cases
        .into_iter()
        .map(|(a, b, expect)| {
            let r = analyze_subrep(rep, &a, &b, burnside);
            let ok = r.verdict == expect
                && (expect != Verdict::Irreducible
                    || !burnside
                    || r.burnside_dim == Some(n.pow(4)));
            Item::check(format!("a={a} b={b}"), ok, || {
                (r.to_json(), json!({ "verdict": expect }))
            })
        })
        .collect();
    Report::new("subrep", n, items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corollary_cases_n2() {
        let rep = YangianRep::new(2);
        let r = analyze_subrep(&rep, &rat(1, 1), &rat(0, 1), true);
        assert_eq!(r.verdict, Verdict::V0Invariant);
        assert!(r.burnside_dim.unwrap() < 16);
        let r = analyze_subrep(&rep, &rat(0, 1), &rat(1, 1), true);
        assert_eq!(r.verdict, Verdict::VadInvariant);
        let r = analyze_subrep(&rep, &rat(1, 3), &rat(0, 1), true);
        assert_eq!(r.verdict, Verdict::Irreducible);
        assert_eq!(r.burnside_dim, Some(16));
    }

    #[test]
    fn trivial_parameters_split_w() {
        let rep = YangianRep::new(3);
        let ops = action_matrices(&rep, &rat(0, 1), &rat(0, 1));
        let (v0, _) = invariance(3, &ops[..8]);
        assert!(v0);
    }

    #[test]
    fn cyclic_evidence_without_burnside() {
        let rep = YangianRep::new(2);
        let r = analyze_subrep(&rep, &rat(2, 1), &rat(-1, 5), false);
        assert_eq!(r.cyclic_from_bell, Some(true));
        assert_eq!(r.verdict, Verdict::Irreducible);
        assert!(!r.conclusive);
    }
}
