//! Drinfeld's cubic relations among the `J(x)` as operator identities on `W`.
//!
//! The orthonormal-basis sums are taken over the dual pair
//! `(A_{ij}, (ω^{ij}/N) A_{-i,-j})`: the pairing coefficient is evaluated on
//! the basis elements and the symmetrizer `{z₁,z₂,z₃}` on their duals.
//!
//! * triple relation:
//!   `[J(x),J([y,z])] + [J(z),J([x,y])] + [J(y),J([z,x])] = Σ ([x,x_λ],[[y,x_μ],[z,x_ν]]) {x^λ,x^μ,x^ν}`
//! * quadruple relation:
//!   `[[J(x),J(y)],[z,J(w)]] + [[J(z),J(w)],[x,J(y)]] = Σ c_{λμν} {x^λ,x^μ,J(x^ν)}` with
//!   `c_{λμν} = ([x,x_λ],[[y,x_μ],[[z,w],x_ν]]) + ([z,x_λ],[[w,x_μ],[[x,y],x_ν]])`
//!   (the two-term form); [`RhsForm::OneTerm`] keeps only the first summand.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::exactfield::{rat, CycMatrix, CycNum};
use crate::lie::{
    modified, principal, principal_dual, principal_labels, trace_pairing, BasisLabelT, IndexSet,
};
use crate::report::{Item, Report};

use super::coproduct::{delta_matrix, YangianRep};
use super::operator::TensorOperator;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RhsForm {
    OneTerm,
    TwoTerm,
}

/// Precomputed realizations of the dual-pair data on `W`.
pub struct DrinfeldContext<'a> {
    rep: &'a YangianRep,
    basis: Vec<CycMatrix>,
    duals: Vec<CycMatrix>,
    dual_delta: Vec<CycMatrix>,
    dual_delta_j: Vec<TensorOperator>,
    /// `{Δx^λ, Δx^μ, Δx^ν}` ordered products, flattened `λ·d² + μ·d + ν`.
    triple_products: Vec<CycMatrix>,
    /// `Δx^λ Δx^μ`, flattened `λ·d + μ`.
    pairs: Vec<CycMatrix>,
    /// `Δx^λ Δ(J(x^ν))`, flattened `λ·d + ν`.
    left_j: Vec<TensorOperator>,
}

fn comm(x: &CycMatrix, y: &CycMatrix) -> CycMatrix {
    x.commutator(y).expect("uniform shapes")
}

impl<'a> DrinfeldContext<'a> {
    pub fn new(rep: &'a YangianRep) -> Self {
        let n = rep.n;
        let labels = principal_labels(n, IndexSet::Sl);
        let basis: Vec<_> = labels.iter().map(|&l| principal(n, l)).collect();
        let duals: Vec<_> = labels.iter().map(|&l| principal_dual(n, l)).collect();
        let dual_delta: Vec<_> = duals.iter().map(delta_matrix).collect();
        let dual_delta_j: Vec<_> = duals
            .iter()
            .map(|x| rep.delta_j(x).expect("traceless"))
            .collect();
        let d = basis.len();
        let pairs: Vec<CycMatrix> = (0..d * d)
            .map(|p| {
                dual_delta[p / d]
                    .mul(&dual_delta[p % d])
                    .expect("uniform shapes")
            })
            .collect();
        let mut triple_products = Vec::with_capacity(d * d * d);
        for p in 0..d * d {
            for nu in 0..d {
                triple_products.push(pairs[p].mul(&dual_delta[nu]).expect("uniform shapes"));
            }
        }
        let mut left_j = Vec::with_capacity(d * d);
        for l in 0..d {
            for nu in 0..d {
                left_j.push(dual_delta_j[nu].left_mul_matrix(&dual_delta[l]));
            }
        }
        Self {
            rep,
            basis,
            duals,
            dual_delta,
            dual_delta_j,
            triple_products,
            pairs,
            left_j,
        }
    }

    fn size(&self) -> usize {
        self.basis.len()
    }

    fn zero(&self) -> TensorOperator {
        TensorOperator::zero(self.rep.n as u32, self.rep.dim())
    }

    /// `c_{λμν} = ([p,x_λ],[[q,x_μ],[r,x_ν]])` for all triples.
    fn coefficients(&self, p: &CycMatrix, q: &CycMatrix, r: &CycMatrix) -> Vec<CycNum> {
        let d = self.size();
        let pl: Vec<_> = self.basis.iter().map(|b| comm(p, b)).collect();
        let qm: Vec<_> = self.basis.iter().map(|b| comm(q, b)).collect();
        let rn: Vec<_> = self.basis.iter().map(|b| comm(r, b)).collect();
        let mut out = Vec::with_capacity(d * d * d);
        for l in 0..d {
            for m in 0..d {
                for nu in 0..d {
                    out.push(
                        trace_pairing(&pl[l], &comm(&qm[m], &rn[nu])).expect("uniform shapes"),
                    );
                }
            }
        }
        out
    }

    /// `Σ c_{λμν} {Δx^λ, Δx^μ, Δx^ν}`.
    fn symmetrized_constant(&self, c: &[CycNum]) -> CycMatrix {
        let d = self.size();
        let six = |l: usize, m: usize, nu: usize| {
            let idx = |a: usize, b: usize, e: usize| a * d * d + b * d + e;
            [
                idx(l, m, nu),
                idx(l, nu, m),
                idx(m, l, nu),
                idx(m, nu, l),
                idx(nu, l, m),
                idx(nu, m, l),
            ]
        };
        let mut acc = CycMatrix::zeros(self.rep.n as u32, self.rep.dim(), self.rep.dim());
        for l in 0..d {
            for m in 0..d {
                for nu in 0..d {
                    let coeff = &c[l * d * d + m * d + nu];
                    if coeff.is_zero() {
                        continue;
                    }
                    for p in six(l, m, nu) {
                        acc.add_scaled(coeff, &self.triple_products[p])
                            .expect("uniform shapes");
                    }
                }
            }
        }
        acc.scale_rational(&rat(1, 24))
    }

    /// `Σ c_{λμν} {Δx^λ, Δx^μ, Δ(J(x^ν))}`.
    fn symmetrized_with_j(&self, c: &[CycNum]) -> TensorOperator {
        let d = self.size();
        let o = self.rep.n as u32;
        let dim = self.rep.dim();
        let mut acc = self.zero();
        for nu in 0..d {
            let mut outer = CycMatrix::zeros(o, dim, dim);
            for l in 0..d {
                let mut inner = CycMatrix::zeros(o, dim, dim);
                for m in 0..d {
                    let s = &c[l * d * d + m * d + nu] + &c[m * d * d + l * d + nu];
                    if s.is_zero() {
                        continue;
                    }
                    outer
                        .add_scaled(&s, &self.pairs[l * d + m])
                        .expect("uniform shapes");
                    inner
                        .add_scaled(&s, &self.dual_delta[m])
                        .expect("uniform shapes");
                }
                if !inner.is_zero() {
                    acc.add_assign(&self.left_j[l * d + nu].mul_matrix(&inner));
                }
            }
            if !outer.is_zero() {
                let j = &self.dual_delta_j[nu];
                acc.add_assign(&j.left_mul_matrix(&outer));
                acc.add_assign(&j.mul_matrix(&outer));
            }
        }
        acc.scale_rational(&rat(1, 24))
    }

    fn dj(&self, x: &CycMatrix) -> TensorOperator {
        self.rep.delta_j(x).expect("traceless")
    }

    pub fn triple_sides(
        &self,
        x: &CycMatrix,
        y: &CycMatrix,
        z: &CycMatrix,
    ) -> (TensorOperator, TensorOperator) {
        let lhs = self
            .dj(x)
            .commutator(&self.dj(&comm(y, z)))
            .add(&self.dj(z).commutator(&self.dj(&comm(x, y))))
            .add(&self.dj(y).commutator(&self.dj(&comm(z, x))));
        let rhs = TensorOperator::constant(self.symmetrized_constant(&self.coefficients(x, y, z)));
        (lhs, rhs)
    }

    pub fn quadruple_sides(
        &self,
        form: RhsForm,
        x: &CycMatrix,
        y: &CycMatrix,
        z: &CycMatrix,
        w: &CycMatrix,
    ) -> (TensorOperator, TensorOperator) {
        let (jx, jy, jz, jw) = (self.dj(x), self.dj(y), self.dj(z), self.dj(w));
        let dz = TensorOperator::constant(delta_matrix(z));
        let dx = TensorOperator::constant(delta_matrix(x));
        let lhs = jx
            .commutator(&jy)
            .commutator(&dz.commutator(&jw))
            .add(&jz.commutator(&jw).commutator(&dx.commutator(&jy)));
        let mut c = self.coefficients(x, y, &comm(z, w));
        if form == RhsForm::TwoTerm {
            for (a, b) in c.iter_mut().zip(self.coefficients(z, w, &comm(x, y))) {
                a.add_assign(&b);
            }
        }
        (lhs, self.symmetrized_with_j(&c))
    }

    /// The dual elements `x^λ` (exposed for diagnostics).
    pub fn duals(&self) -> &[CycMatrix] {
        &self.duals
    }
}

/// `κ` with `lhs = κ·rhs`, when such a scalar exists and `rhs ≠ 0`.
pub fn proportionality(lhs: &TensorOperator, rhs: &TensorOperator) -> Option<CycNum> {
    let (key, m) = rhs.terms().iter().next()?;
    let pos = m.entries().iter().position(|e| !e.is_zero())?;
    let l = lhs.coefficient(key.0, key.1);
    let kappa = l.entries()[pos].div(&m.entries()[pos])?;
    (rhs.scale(&kappa) == *lhs).then_some(kappa)
}

fn names(ts: &[BasisLabelT]) -> String {
    ts.iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Generator tuples on which the relations are checked.
#[derive(Clone, Debug)]
pub struct SampleSet {
    pub triples: Vec<[BasisLabelT; 3]>,
    pub quadruples: Vec<[BasisLabelT; 4]>,
}

impl SampleSet {
    /// Every tuple of `sl_N` generators.
    pub fn exhaustive(rep: &YangianRep) -> Self {
        let g = rep.generators();
        let mut triples = Vec::new();
        let mut quadruples = Vec::new();
        for &x in &g {
            for &y in &g {
                for &z in &g {
                    triples.push([x, y, z]);
                    for &w in &g {
                        quadruples.push([x, y, z, w]);
                    }
                }
            }
        }
        Self {
            triples,
            quadruples,
        }
    }

    /// `count` distinct seeded random tuples plus five structured degenerate ones.
    pub fn sampled(rep: &YangianRep, count: usize, seed: u64) -> Self {
        let g = rep.generators();
        let n = rep.n;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pick = || *g.choose(&mut rng).expect("nonempty");
        let (x, y, z) = (
            BasisLabelT::new(n, 1, 2),
            BasisLabelT::new(n, 2, 1),
            BasisLabelT::new(n, 2, 2),
        );
        let commuting = BasisLabelT::new(n, 1, 3);
        let degenerate3 = [
            [x, x, z],
            [x, y, x],
            [x, y, y],
            [x, x, x],
            [x, commuting, z],
        ];
        let degenerate4 = [
            [x, x, z, y],
            [x, y, x, y],
            [x, y, z, z],
            [x, y, y, x],
            [x, commuting, z, y],
        ];
        let mut triples = Vec::new();
        while triples.len() < count.min(g.len().pow(3) - 5) {
            let t = [pick(), pick(), pick()];
            if !triples.contains(&t) && !degenerate3.contains(&t) {
                triples.push(t);
            }
        }
        let mut quadruples = Vec::new();
        while quadruples.len() < count.min(g.len().pow(4) - 5) {
            let t = [pick(), pick(), pick(), pick()];
            if !quadruples.contains(&t) && !degenerate4.contains(&t) {
                quadruples.push(t);
            }
        }
        triples.extend(degenerate3);
        quadruples.extend(degenerate4);
        Self {
            triples,
            quadruples,
        }
    }
}

fn item(id: String, lhs: &TensorOperator, rhs: &TensorOperator) -> Item {
    Item::check(id, lhs == rhs, || lhs.diff_json(rhs))
}

/// Runs both relations on the given samples. The quadruple relation is
/// checked in the two-term form; the one-term form is evaluated alongside and
/// reported as a note (it fails as an identity).
pub fn verify_drinfeld_relations(rep: &YangianRep, samples: &SampleSet) -> Report {
    let ctx = DrinfeldContext::new(rep);
    let n = rep.n;
    let mut items = Vec::new();
    let mut factors = Vec::new();
    for ts in &samples.triples {
        let [x, y, z] = ts.map(|t| modified(n, t));
        let (lhs, rhs) = ctx.triple_sides(&x, &y, &z);
        if let Some(k) = proportionality(&lhs, &rhs) {
            factors.push(k);
        }
        items.push(item(format!("triple {}", names(ts)), &lhs, &rhs));
    }
    let mut one_term_failures = 0usize;
    let mut one_term_example = None;
    for ts in &samples.quadruples {
        let [x, y, z, w] = ts.map(|t| modified(n, t));
        let (lhs, rhs) = ctx.quadruple_sides(RhsForm::TwoTerm, &x, &y, &z, &w);
        items.push(item(format!("quadruple {}", names(ts)), &lhs, &rhs));
        let (_, one) = ctx.quadruple_sides(RhsForm::OneTerm, &x, &y, &z, &w);
        if one != lhs {
            one_term_failures += 1;
            one_term_example.get_or_insert_with(|| names(ts));
        }
    }
    let norm = if factors.is_empty() {
        "triple relation: no sample with a nonzero right side".to_string()
    } else if factors.iter().all(|k| k.is_one()) {
        format!(
            "triple relation normalization factor 1 on {} samples with nonzero right side",
            factors.len()
        )
    } else {
        format!(
            "triple relation fitted factors {:?}",
            factors.iter().map(|k| k.to_string()).collect::<Vec<_>>()
        )
    };
    let one_term = format!(
        "quadruple relation, one-term right side: fails on {one_term_failures} of {} samples{}",
        samples.quadruples.len(),
        one_term_example
            .map(|e| format!(" (first: {e})"))
            .unwrap_or_default()
    );
    Report::new("drinfeld", n, items)
        .with_note(norm)
        .with_note(one_term)
}

/// Number of quadruple samples on which the one-term right side fails.
pub fn one_term_failures(
    rep: &YangianRep,
    samples: &SampleSet,
) -> (usize, Option<serde_json::Value>) {
    let ctx = DrinfeldContext::new(rep);
    let n = rep.n;
    let mut count = 0;
    let mut first = None;
    for ts in &samples.quadruples {
        let [x, y, z, w] = ts.map(|t| modified(n, t));
        let (lhs, rhs) = ctx.quadruple_sides(RhsForm::OneTerm, &x, &y, &z, &w);
        if lhs != rhs {
            count += 1;
            first.get_or_insert_with(
                || json!({ "tuple": names(ts), "diff": lhs.diff_json(&rhs).0 }),
            );
        }
    }
    (count, first)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_exhaustive() {
        let rep = YangianRep::new(2);
        let r = verify_drinfeld_relations(&rep, &SampleSet::exhaustive(&rep));
        assert_eq!(r.summary.total, 27 + 81);
        assert!(r.all_passed(), "{:?}", r.failures().next().map(|f| &f.id));
    }

    #[test]
    fn one_term_form_is_not_an_identity() {
        let rep = YangianRep::new(2);
        let (count, first) = one_term_failures(&rep, &SampleSet::exhaustive(&rep));
        assert!(count > 0);
        assert!(first.is_some());
    }

    #[test]
    fn antisymmetric_degenerate_triple() {
        let rep = YangianRep::new(3);
        let ctx = DrinfeldContext::new(&rep);
        let x = modified(3, BasisLabelT::new(3, 2, 1));
        let (lhs, rhs) = ctx.triple_sides(&x, &x, &x);
        assert!(lhs.is_zero());
        assert!(rhs.is_zero());
    }

    #[test]
    fn corrupted_generator_is_caught() {
        let mut rep = YangianRep::new(2);
        rep.corrupt(BasisLabelT::new(2, 1, 2));
        let r = verify_drinfeld_relations(&rep, &SampleSet::exhaustive(&rep));
        assert!(!r.all_passed());
        assert!(r.failures().any(|f| f.id.contains("T_1^(2)")));
    }

    #[test]
    fn samples_are_distinct() {
        let rep = YangianRep::new(3);
        let s = SampleSet::sampled(&rep, 20, 7);
        assert_eq!(s.triples.len(), 25);
        assert_eq!(s.quadruples.len(), 25);
        let t: std::collections::BTreeSet<_> = s.triples.iter().collect();
        let q: std::collections::BTreeSet<_> = s.quadruples.iter().collect();
        assert_eq!((t.len(), q.len()), (25, 25));
    }
}
