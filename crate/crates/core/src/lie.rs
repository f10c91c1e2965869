//! Matrix realizations of `gl_N` / `sl_N` bases.
//!
//! * Cartan-Weyl units `E_{kl}`.
//! * Principal basis `A_{ij} = Σ_{k∈Z_N} ω^{ki} E_{k,k+j}`, where the row
//!   label `k` is read mod `N` (label `N` is residue 0).
//! * Modified principal basis `T_i^{(j)} = ω^{-i+1} A_{i-1,j-1}`.
//!
//! `A_{00} = T_1^{(1)} = I` is constructible but lies outside `sl_N`; sums over
//! a basis always take an explicit [`IndexSet`].

use crate::error::{Error, Result};
use crate::exactfield::{rat, CycMatrix, CycNum, Matrix};
use crate::index::{label, residue, slot};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum IndexSet {
    /// `Z_N² ∖ {(0,0)}`
    Sl,
    /// all of `Z_N²`
    Gl,
}

/// Label of a principal element `A_{ij}`, stored as residues.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabelA {
    pub i: usize,
    pub j: usize,
}

impl BasisLabelA {
    pub fn new(n: usize, i: i64, j: i64) -> Self {
        Self {
            i: residue(n, i),
            j: residue(n, j),
        }
    }

    pub fn is_sl(&self) -> bool {
        (self.i, self.j) != (0, 0)
    }

    /// Label of the dual partner `A_{-i,-j}`.
    pub fn dual(&self, n: usize) -> Self {
        Self::new(n, -(self.i as i64), -(self.j as i64))
    }

    /// `A_{ij} = ω^{i} T_{i+1}^{(j+1)}`: returns the phase exponent and label.
    pub fn to_modified(&self, n: usize) -> (i64, BasisLabelT) {
        (
            self.i as i64,
            BasisLabelT::new(n, self.i as i64 + 1, self.j as i64 + 1),
        )
    }
}

/// Label of a modified principal element `T_i^{(j)}`, stored as labels `1..=N`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabelT {
    pub i: usize,
    pub j: usize,
}

impl BasisLabelT {
    pub fn new(n: usize, i: i64, j: i64) -> Self {
        Self {
            i: label(n, i),
            j: label(n, j),
        }
    }

    pub fn is_sl(&self) -> bool {
        (self.i, self.j) != (1, 1)
    }

    /// `T_i^{(j)} = ω^{-(i-1)} A_{i-1,j-1}`: phase exponent and label.
    pub fn to_principal(&self, n: usize) -> (i64, BasisLabelA) {
        (
            -(self.i as i64 - 1),
            BasisLabelA::new(n, self.i as i64 - 1, self.j as i64 - 1),
        )
    }
}

impl std::fmt::Display for BasisLabelT {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T_{}^({})", self.i, self.j)
    }
}

pub fn principal_labels(n: usize, set: IndexSet) -> Vec<BasisLabelA> {
    (0..n)
        .flat_map(|i| (0..n).map(move |j| BasisLabelA { i, j }))
        .filter(|l| set == IndexSet::Gl || l.is_sl())
        .collect()
}

pub fn modified_labels(n: usize, set: IndexSet) -> Vec<BasisLabelT> {
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| BasisLabelT { i, j }))
        .filter(|l| set == IndexSet::Gl || l.is_sl())
        .collect()
}

fn order(n: usize) -> u32 {
    n as u32
}

fn w(n: usize, k: i64) -> CycNum {
    CycNum::omega_power(order(n), k)
}

/// `E_{kl}` with one-based labels.
pub fn unit_matrix(n: usize, k: usize, l: usize) -> Result<CycMatrix> {
    if !(1..=n).contains(&k) || !(1..=n).contains(&l) {
        return Err(Error::IndexOutOfRange(format!("E_({k},{l}) for N={n}")));
    }
    let mut m = CycMatrix::zeros(order(n), n, n);
    m.set(k - 1, l - 1, CycNum::one(order(n)));
    Ok(m)
}

/// `E_{kl}` with labels reduced mod `N`.
pub fn unit_matrix_mod(n: usize, k: i64, l: i64) -> CycMatrix {
    unit_matrix(n, label(n, k), label(n, l)).expect("labels are reduced")
}

pub fn principal_matrix(n: usize, i: i64, j: i64) -> CycMatrix {
    let mut m = CycMatrix::zeros(order(n), n, n);
    for k in 1..=n as i64 {
        m.set(slot(n, k), slot(n, k + j), w(n, k * i));
    }
    m
}

pub fn principal(n: usize, l: BasisLabelA) -> CycMatrix {
    principal_matrix(n, l.i as i64, l.j as i64)
}

/// `Σ_k ω^{(i-1)(k-1)} E_{k,k+j-1}`
fn modified_by_units(n: usize, i: i64, j: i64) -> CycMatrix {
    let mut m = CycMatrix::zeros(order(n), n, n);
    for k in 1..=n as i64 {
        m.set(slot(n, k), slot(n, k + j - 1), w(n, (i - 1) * (k - 1)));
    }
    m
}

/// `T_i^{(j)}`, built from the principal basis and from unit matrices; the
/// two constructions must agree.
pub fn modified_principal(n: usize, i: i64, j: i64) -> CycMatrix {
    let from_a = principal_matrix(n, i - 1, j - 1).scale_cyc(&w(n, -(i - 1)));
    let from_e = modified_by_units(n, i, j);
    assert_eq!(
        from_a, from_e,
        "modified principal constructions disagree for ({i},{j}), N={n}"
    );
    from_a
}

pub fn modified(n: usize, l: BasisLabelT) -> CycMatrix {
    modified_principal(n, l.i as i64, l.j as i64)
}

/// Trace form `(x|y) = tr(xy)`.
pub fn trace_pairing(x: &CycMatrix, y: &CycMatrix) -> Result<CycNum> {
    if x.shape() != y.shape() || !x.is_square() {
        return Err(Error::DimensionMismatch {
            op: "trace_pairing",
            left: x.shape(),
            right: y.shape(),
        });
    }
    let n = x.rows();
    let mut acc = CycNum::zero(x.order());
    for r in 0..n {
        for c in 0..n {
            let (a, b) = (x.get(r, c), y.get(c, r));
            if !a.is_zero() && !b.is_zero() {
                acc.add_assign(&a.mul(b));
            }
        }
    }
    Ok(acc)
}

/// Dual of `A_{ij}` under the trace form: `(ω^{ij}/N) A_{-i,-j}`.
pub fn principal_dual(n: usize, l: BasisLabelA) -> CycMatrix {
    let d = l.dual(n);
    principal(n, d).scale_cyc(&w(n, (l.i * l.j) as i64).scale(&rat(1, n as i64)))
}

/// Dual of `T_i^{(j)}`: `(ω^{(i-1)(j-1)}/N) T_{-i+2}^{(-j+2)}`.
pub fn modified_dual(n: usize, l: BasisLabelT) -> CycMatrix {
    let (i, j) = (l.i as i64, l.j as i64);
    modified_principal(n, 2 - i, 2 - j).scale_cyc(&w(n, (i - 1) * (j - 1)).scale(&rat(1, n as i64)))
}

/// Coordinates of `x` in the modified principal basis of `sl_N`.
pub fn modified_coordinates(x: &CycMatrix) -> Result<Vec<(BasisLabelT, CycNum)>> {
    let n = x.rows();
    if !x.trace()?.is_zero() {
        return Err(Error::NotTraceless);
    }
    modified_labels(n, IndexSet::Sl)
        .into_iter()
        .map(|l| Ok((l, trace_pairing(x, &modified_dual(n, l))?)))
        .filter(|r| !matches!(r, Ok((_, c)) if c.is_zero()))
        .collect()
}

/// Discrete Fourier transform over `Z_N`: `Σ_k ω^{ki} seq[k]`.
pub fn dft(n: usize, seq: &[CycMatrix], i: i64) -> CycMatrix {
    let mut acc = CycMatrix::zeros(order(n), seq[0].rows(), seq[0].cols());
    for (k, s) in seq.iter().enumerate() {
        acc.add_scaled(&w(n, k as i64 * i), s)
            .expect("uniform shapes");
    }
    acc
}

/// Inverse transform: `(1/N) Σ_l ω^{-kl} seq[l]`.
pub fn inverse_dft(n: usize, seq: &[CycMatrix], k: i64) -> CycMatrix {
    let mut acc = CycMatrix::zeros(order(n), seq[0].rows(), seq[0].cols());
    let inv = rat(1, n as i64);
    for (l, s) in seq.iter().enumerate() {
        acc.add_scaled(&w(n, -k * l as i64).scale(&inv), s)
            .expect("uniform shapes");
    }
    acc
}

/// Toeplitz sequence `ε_j(k) = E_{k,k+j}`, indexed by residue `k`.
pub fn toeplitz_sequence(n: usize, j: i64) -> Vec<CycMatrix> {
    (0..n as i64)
        .map(|k| unit_matrix_mod(n, k, k + j))
        .collect()
}

/// Change of basis from Cartan-Weyl coordinates (row-major matrix entries)
/// to principal coordinates (index `i·N + j` for `A_{ij}`).
pub fn fourier_to_principal(n: usize) -> CycMatrix {
    let d = n * n;
    let inv = rat(1, n as i64);
    let mut m = CycMatrix::zeros(order(n), d, d);
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            for k in 0..n as i64 {
                let cw = slot(n, k) * n + slot(n, k + j);
                m.set((i * n as i64 + j) as usize, cw, w(n, -k * i).scale(&inv));
            }
        }
    }
    m
}

/// Inverse of [`fourier_to_principal`]: column `i·N + j` holds `A_{ij}`.
pub fn fourier_to_cartanweyl(n: usize) -> CycMatrix {
    let d = n * n;
    let mut m = CycMatrix::zeros(order(n), d, d);
    for l in principal_labels(n, IndexSet::Gl) {
        let a = principal(n, l);
        for (pos, e) in a.entries().iter().enumerate() {
            if !e.is_zero() {
                m.set(pos, l.i * n + l.j, e.clone());
            }
        }
    }
    m
}

pub fn principal_coordinates(x: &CycMatrix) -> Result<Vec<CycNum>> {
    let n = x.rows();
    fourier_to_principal(n).mul_vec(x.entries())
}

pub fn from_principal_coordinates(n: usize, coords: &[CycNum]) -> Result<CycMatrix> {
    let v = fourier_to_cartanweyl(n).mul_vec(coords)?;
    Matrix::from_entries(order(n), n, n, v)
}

/// Flip `P` on `C^N ⊗ C^N`.
pub fn permutation_matrix(n: usize) -> CycMatrix {
    let mut p = CycMatrix::zeros(order(n), n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            p.set(a * n + b, b * n + a, CycNum::one(order(n)));
        }
    }
    p
}

/// Projection of `gl_N` onto `sl_N`: `x - tr(x)/N · I`.
pub fn traceless_part(x: &CycMatrix) -> CycMatrix {
    let n = x.rows();
    let t = x.trace().expect("square").scale(&rat(1, n as i64));
    x.sub(&CycMatrix::identity(x.order(), n).scale_cyc(&t))
        .expect("square")
}

/// The split Casimir `t = Σ (ω^{ij}/N) A_{ij} ⊗ A_{-i,-j}` of `sl_N`.
#[derive(Clone, Debug)]
pub struct SplitCasimir {
    pub n: usize,
    /// `(x_λ, x^λ)` pairs; the first acts on the left factor.
    pub pairs: Vec<(CycMatrix, CycMatrix)>,
    /// Matrix of `t` on `C^N ⊗ C^N`.
    pub tensor: CycMatrix,
}

impl SplitCasimir {
    /// Realizes `Σ ρ₁(x_λ) ⊗ ρ₂(x^λ)` for arbitrary representations.
    pub fn realize(
        &self,
        first: impl Fn(&CycMatrix) -> CycMatrix,
        second: impl Fn(&CycMatrix) -> CycMatrix,
    ) -> CycMatrix {
        let mut acc: Option<CycMatrix> = None;
        for (x, y) in &self.pairs {
            let term = first(x).kron(&second(y));
            match acc.as_mut() {
                Some(a) => a.add_assign(&term).expect("uniform shapes"),
                None => acc = Some(term),
            }
        }
        acc.expect("sl_N basis is nonempty")
    }
}

pub fn split_casimir(n: usize) -> SplitCasimir {
    assert!(n >= 2);
    let pairs: Vec<_> = principal_labels(n, IndexSet::Sl)
        .into_iter()
        .map(|l| (principal(n, l), principal_dual(n, l)))
        .collect();
    let mut tensor = CycMatrix::zeros(order(n), n * n, n * n);
    for (x, y) in &pairs {
        tensor.add_assign(&x.kron(y)).expect("uniform shapes");
    }
    SplitCasimir { n, pairs, tensor }
}

/// `Σ_{kl} E_{kl} ⊗ E_{lk} - (1/N) I ⊗ I`, from the Cartan-Weyl dual pair.
pub fn split_casimir_cartan_weyl(n: usize) -> CycMatrix {
    let id = CycMatrix::identity(order(n), n * n);
    permutation_matrix(n)
        .sub(&id.scale_rational(&rat(1, n as i64)))
        .expect("square")
}

/// Cartan-Weyl dual pairs of `sl_N` under the trace form: `(E_{kl}, E_{lk})`
/// for `k ≠ l`, and `(E_{ii} - E_{i+1,i+1}, ϖ_i)` with `ϖ_i = Σ_{r≤i} E_{rr} - (i/N) I`.
pub fn cartan_weyl_pairs(n: usize) -> Vec<(CycMatrix, CycMatrix)> {
    let mut out = Vec::new();
    for k in 1..=n as i64 {
        for l in 1..=n as i64 {
            if k != l {
                out.push((unit_matrix_mod(n, k, l), unit_matrix_mod(n, l, k)));
            }
        }
    }
    for i in 1..n as i64 {
        let h = unit_matrix_mod(n, i, i)
            .sub(&unit_matrix_mod(n, i + 1, i + 1))
            .expect("square");
        let mut coweight = CycMatrix::identity(order(n), n).scale_rational(&rat(-i, n as i64));
        for r in 1..=i {
            coweight
                .add_assign(&unit_matrix_mod(n, r, r))
                .expect("square");
        }
        out.push((h, coweight));
    }
    out
}

/// Basis suite: product law, traces, spanning, biorthogonality, Fourier
/// change of basis and basis independence of the split Casimir.
pub fn verify_basis(n: usize) -> crate::report::Report {
    use crate::exactfield::linalg::rank_of;
    use crate::report::{Item, Report};
    use serde_json::json;
    let g = n as i64;
    let mut items = Vec::new();
    let mut failures = Vec::new();
    for i in 0..g {
        for j in 0..g {
            let x = principal_matrix(n, i, j);
            for k in 0..g {
                for l in 0..g {
                    let lhs = x.mul(&principal_matrix(n, k, l)).expect("square");
                    let rhs = principal_matrix(n, i + k, j + l).scale_cyc(&w(n, j * k));
                    if lhs != rhs {
                        failures.push(json!([i, j, k, l]));
                    }
                }
            }
        }
    }
    let ok = failures.is_empty();
    items.push(Item::check(
        "product law A_ij A_kl = w^jk A_i+k,j+l",
        ok,
        || (json!(failures), json!([])),
    ));
    let traces_ok = modified_labels(n, IndexSet::Gl).into_iter().all(|l| {
        modified(n, l).trace().expect("square")
            == CycNum::from_int(order(n), if l.is_sl() { 0 } else { g })
    });
    items.push(Item::check("traces", traces_ok, || {
        (json!("nonzero trace"), json!("traceless"))
    }));
    let flat: Vec<Vec<CycNum>> = principal_labels(n, IndexSet::Sl)
        .into_iter()
        .map(|l| principal(n, l).entries().to_vec())
        .collect();
    let rank = rank_of(order(n), n * n, flat.iter().map(|v| v.as_slice()));
    items.push(Item::check("span sl_N", rank == n * n - 1, || {
        (json!(rank), json!(n * n - 1))
    }));
    let mut bi = true;
    for &p in &principal_labels(n, IndexSet::Sl) {
        for &q in &principal_labels(n, IndexSet::Sl) {
            bi &= trace_pairing(&principal(n, p), &principal_dual(n, q)).expect("square")
                == CycNum::from_int(order(n), i64::from(p == q));
        }
    }
    for &p in &modified_labels(n, IndexSet::Sl) {
        for &q in &modified_labels(n, IndexSet::Sl) {
            bi &= trace_pairing(&modified(n, p), &modified_dual(n, q)).expect("square")
                == CycNum::from_int(order(n), i64::from(p == q));
        }
    }
    items.push(Item::check("biorthogonal duals", bi, || {
        (json!("pairing mismatch"), json!("identity"))
    }));
    let id = CycMatrix::identity(order(n), n * n);
    let inv = fourier_to_principal(n)
        .mul(&fourier_to_cartanweyl(n))
        .expect("square")
        == id;
    items.push(Item::check("fourier roundtrip", inv, || {
        (json!("not inverse"), json!("inverse"))
    }));
    let cas = split_casimir(n).tensor;
    let cw = split_casimir_cartan_weyl(n);
    items.push(Item::check(
        "split casimir basis independence",
        cas == cw,
        || {
            (
                crate::exactfield::json::matrix_to_json(&cas),
                crate::exactfield::json::matrix_to_json(&cw),
            )
        },
    ));
    Report::new("basis", n, items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::linalg::rank_of;

    fn c(n: usize, v: i64) -> CycNum {
        CycNum::from_int(n as u32, v)
    }

    #[test]
    fn basis_suite() {
        for n in 2..=4 {
            assert!(verify_basis(n).all_passed());
        }
    }

    #[test]
    fn cartan_weyl_pairs_are_dual() {
        for n in 2..=4 {
            let pairs = cartan_weyl_pairs(n);
            assert_eq!(pairs.len(), n * n - 1);
            for (p, (x, _)) in pairs.iter().enumerate() {
                for (q, (_, y)) in pairs.iter().enumerate() {
                    assert_eq!(trace_pairing(x, y).unwrap(), c(n, i64::from(p == q)));
                }
            }
            let mut t = CycMatrix::zeros(n as u32, n * n, n * n);
            for (x, y) in &pairs {
                t.add_assign(&x.kron(y)).unwrap();
            }
            assert_eq!(t, split_casimir_cartan_weyl(n));
        }
    }

    #[test]
    fn unit_matrix_examples() {
        let e12 = unit_matrix(2, 1, 2).unwrap();
        assert_eq!(*e12.get(0, 1), c(2, 1));
        assert_eq!(e12.nonzero_count(), 1);
        let e21 = unit_matrix(2, 2, 1).unwrap();
        assert_eq!(e12.mul(&e21).unwrap(), unit_matrix(2, 1, 1).unwrap());
        let e11 = unit_matrix(2, 1, 1).unwrap();
        assert_eq!(e11.commutator(&e12).unwrap(), e12);
        assert!(unit_matrix(2, 0, 1).is_err());
        assert!(unit_matrix(2, 1, 3).is_err());
    }

    #[test]
    fn principal_examples() {
        // the row label k = N carries ω^{Ni} = 1
        let a10 = principal_matrix(2, 1, 0);
        assert_eq!(*a10.get(0, 0), c(2, -1));
        assert_eq!(*a10.get(1, 1), c(2, 1));
        let e = principal_matrix(3, 0, 1);
        let expect = unit_matrix(3, 1, 2)
            .unwrap()
            .add(&unit_matrix(3, 2, 3).unwrap())
            .unwrap()
            .add(&unit_matrix(3, 3, 1).unwrap())
            .unwrap();
        assert_eq!(e, expect);
        assert_eq!(principal_matrix(4, 0, 0), CycMatrix::identity(4, 4));
    }

    #[test]
    fn product_law_exhaustive() {
        for n in 2..=5usize {
            let g = n as i64;
            for i in 0..g {
                for j in 0..g {
                    let x = principal_matrix(n, i, j);
                    for k in 0..g {
                        for l in 0..g {
                            let lhs = x.mul(&principal_matrix(n, k, l)).unwrap();
                            let rhs = principal_matrix(n, i + k, j + l).scale_cyc(&w(n, j * k));
                            assert_eq!(lhs, rhs, "N={n} ({i},{j})({k},{l})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn modified_examples() {
        assert_eq!(modified_principal(3, 1, 1), CycMatrix::identity(3, 3));
        let t = modified_principal(2, 2, 1);
        assert_eq!(*t.get(0, 0), c(2, 1));
        assert_eq!(*t.get(1, 1), c(2, -1));
    }

    #[test]
    fn modified_traces() {
        for n in 2..=5usize {
            for l in modified_labels(n, IndexSet::Gl) {
                let expect = if l.is_sl() { 0 } else { n as i64 };
                assert_eq!(modified(n, l).trace().unwrap(), c(n, expect));
            }
        }
    }

    #[test]
    fn principal_basis_spans_sl() {
        for n in 2..=5usize {
            let flat: Vec<Vec<CycNum>> = principal_labels(n, IndexSet::Sl)
                .into_iter()
                .map(|l| principal(n, l).entries().to_vec())
                .collect();
            assert_eq!(
                rank_of(n as u32, n * n, flat.iter().map(|v| v.as_slice())),
                n * n - 1
            );
        }
    }

    #[test]
    fn biorthogonality_of_both_systems() {
        for n in 2..=5usize {
            let labels = principal_labels(n, IndexSet::Sl);
            for &p in &labels {
                for &q in &labels {
                    let v = trace_pairing(&principal(n, p), &principal_dual(n, q)).unwrap();
                    assert_eq!(v, c(n, (p == q) as i64));
                }
            }
            let labels = modified_labels(n, IndexSet::Sl);
            for &p in &labels {
                for &q in &labels {
                    let v = trace_pairing(&modified(n, p), &modified_dual(n, q)).unwrap();
                    assert_eq!(v, c(n, (p == q) as i64));
                }
            }
        }
    }

    #[test]
    fn fourier_examples() {
        let n = 3;
        let e13 = unit_matrix(n, 1, 3).unwrap();
        let coords = principal_coordinates(&e13).unwrap();
        assert_eq!(from_principal_coordinates(n, &coords).unwrap(), e13);
        // forward transform of ε_1 at i = 0
        assert_eq!(
            dft(n, &toeplitz_sequence(n, 1), 0),
            principal_matrix(n, 0, 1)
        );
        // inverse transform recovers E_{k,k+1} at residue k = 0, i.e. label N
        let seq: Vec<_> = (0..2).map(|l| principal_matrix(2, l, 1)).collect();
        assert_eq!(inverse_dft(2, &seq, 0), unit_matrix(2, 2, 1).unwrap());
        assert_eq!(inverse_dft(2, &seq, 1), unit_matrix(2, 1, 2).unwrap());
    }

    #[test]
    fn fourier_maps_are_mutually_inverse() {
        for n in 2..=4usize {
            let id = CycMatrix::identity(n as u32, n * n);
            assert_eq!(
                fourier_to_principal(n)
                    .mul(&fourier_to_cartanweyl(n))
                    .unwrap(),
                id
            );
            assert_eq!(
                fourier_to_cartanweyl(n)
                    .mul(&fourier_to_principal(n))
                    .unwrap(),
                id
            );
        }
    }

    #[test]
    fn split_casimir_is_basis_independent() {
        for n in 2..=5usize {
            assert_eq!(
                split_casimir(n).tensor,
                split_casimir_cartan_weyl(n),
                "N={n}"
            );
        }
        // N = 2: P - I/2
        let t = split_casimir(2).tensor;
        let p = permutation_matrix(2);
        assert_eq!(
            t,
            p.sub(&CycMatrix::identity(2, 4).scale_rational(&rat(1, 2)))
                .unwrap()
        );
    }

    #[test]
    fn split_casimir_commutes_with_coproduct() {
        for n in 2..=4usize {
            let t = split_casimir(n).tensor;
            let id = CycMatrix::identity(n as u32, n);
            for l in modified_labels(n, IndexSet::Sl) {
                let x = modified(n, l);
                let dx = x.kron(&id).add(&id.kron(&x)).unwrap();
                assert!(dx.commutator(&t).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn split_casimir_flip_symmetric() {
        for n in 2..=4usize {
            let t = split_casimir(n).tensor;
            let p = permutation_matrix(n);
            assert_eq!(p.mul(&t).unwrap().mul(&p).unwrap(), t);
        }
    }

    #[test]
    fn coordinates_reconstruct() {
        let n = 3;
        let x = unit_matrix(n, 1, 2)
            .unwrap()
            .add(&modified_principal(n, 2, 3))
            .unwrap();
        let mut back = CycMatrix::zeros(3, 3, 3);
        for (l, cf) in modified_coordinates(&x).unwrap() {
            back.add_scaled(&cf, &modified(n, l)).unwrap();
        }
        assert_eq!(back, x);
        assert!(matches!(
            modified_coordinates(&CycMatrix::identity(3, 3)),
            Err(Error::NotTraceless)
        ));
    }
}
