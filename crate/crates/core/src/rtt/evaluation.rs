//! The fundamental evaluation representation `t_{ij}(u) ↦ δ_{ij} + X_{ij} u⁻¹`
//! and the RTT relation `R(u-v) T₁(u) T₂(v) = T₂(v) T₁(u) R(u-v)`.

use crate::exactfield::json::matrix_to_json;
use crate::exactfield::{CycMatrix, CycNum, LaurentMatrix, LaurentPoly};
use crate::index::slot;
use crate::lie::unit_matrix_mod;
use crate::report::{Item, Report};

use super::rmatrix::{flips, SpectralOperator};

/// Which unit matrix `t_{ij}^{(1)}` is sent to.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `t_{ij}^{(1)} ↦ E_{ij}`
    Direct,
    /// `t_{ij}^{(1)} ↦ E_{ji}`
    Transpose,
}

/// `X(u) = constant + pole·u⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesMatrix {
    pub constant: CycMatrix,
    pub pole: CycMatrix,
}

impl SeriesMatrix {
    pub fn zero(n: usize) -> Self {
        let z = CycMatrix::zeros(n as u32, n, n);
        Self {
            constant: z.clone(),
            pole: z,
        }
    }

    pub fn add_scaled(&mut self, c: &CycNum, rhs: &Self) {
        self.constant
            .add_scaled(c, &rhs.constant)
            .expect("uniform shapes");
        self.pole.add_scaled(c, &rhs.pole).expect("uniform shapes");
    }

    /// As a matrix over `Q(ω)[u⁻¹]`.
    pub fn to_laurent(&self) -> LaurentMatrix {
        let o = self.constant.order();
        let c = self.constant.lift::<LaurentPoly>();
        let p = self
            .pole
            .lift::<LaurentPoly>()
            .scale(&LaurentPoly::first(o));
        c.add(&p).expect("uniform shapes")
    }

    /// `x·X(x) = x·constant + pole`, with `x = u` (`first`) or `x = v`.
    pub fn cleared(&self, first: bool) -> SpectralOperator {
        let (p, q) = if first { (1, 0) } else { (0, 1) };
        SpectralOperator::monomial(p, q, self.constant.clone())
            .add(&SpectralOperator::constant(self.pole.clone()))
    }
}

/// `t_{ij}(u)` with one-based labels reduced mod `N`.
pub fn evaluation_entry(n: usize, conv: Convention, i: i64, j: i64) -> SeriesMatrix {
    let constant = if slot(n, i) == slot(n, j) {
        CycMatrix::identity(n as u32, n)
    } else {
        CycMatrix::zeros(n as u32, n, n)
    };
    let pole = match conv {
        Convention::Direct => unit_matrix_mod(n, i, j),
        Convention::Transpose => unit_matrix_mod(n, j, i),
    };
    SeriesMatrix { constant, pole }
}

/// All `t_{ij}(u)`, indexed `[i-1][j-1]`.
pub fn evaluation_t(n: usize, conv: Convention) -> Vec<Vec<SeriesMatrix>> {
    (1..=n as i64)
        .map(|i| {
            (1..=n as i64)
                .map(|j| evaluation_entry(n, conv, i, j))
                .collect()
        })
        .collect()
}

/// `u·T₁(u)` and `v·T₂(v)` on `aux ⊗ aux ⊗ quantum`.
fn cleared_monodromy(n: usize, conv: Convention) -> (SpectralOperator, SpectralOperator) {
    let o = n as u32;
    let idn = CycMatrix::identity(o, n);
    let mut t1 = CycMatrix::zeros(o, n * n * n, n * n * n);
    let mut t2 = t1.clone();
    for i in 1..=n as i64 {
        for j in 1..=n as i64 {
            let x = evaluation_entry(n, conv, i, j).pole;
            let e = unit_matrix_mod(n, i, j);
            t1.add_assign(&e.kron(&idn).kron(&x))
                .expect("uniform shapes");
            t2.add_assign(&idn.kron(&e).kron(&x))
                .expect("uniform shapes");
        }
    }
    let id = CycMatrix::identity(o, n * n * n);
    (
        SpectralOperator::monomial(1, 0, id.clone()).add(&SpectralOperator::constant(t1)),
        SpectralOperator::monomial(0, 1, id).add(&SpectralOperator::constant(t2)),
    )
}

/// Both sides of the RTT relation multiplied through by `(u-v)·u·v`.
pub fn rtt_sides(n: usize, conv: Convention) -> (SpectralOperator, SpectralOperator) {
    let (p12, _, _) = flips(n);
    let o = n as u32;
    let d = n * n * n;
    let id = CycMatrix::identity(o, d);
    let r = SpectralOperator::monomial(1, 0, id.clone())
        .sub(&SpectralOperator::monomial(0, 1, id))
        .sub(&SpectralOperator::constant(p12));
    let (t1, t2) = cleared_monodromy(n, conv);
    (r.mul(&t1).mul(&t2), t2.mul(&t1).mul(&r))
}

/// `t^{(r)}_{ij}` in the evaluation representation: `δ`, `X`, then zero.
fn level(n: usize, conv: Convention, r: u32, i: i64, j: i64) -> CycMatrix {
    let e = evaluation_entry(n, conv, i, j);
    match r {
        0 => e.constant,
        1 => e.pole,
        _ => CycMatrix::zeros(n as u32, n, n),
    }
}

/// `[t^{(r+1)}_{ij}, t^{(s)}_{kl}] - [t^{(r)}_{ij}, t^{(s+1)}_{kl}] = t^{(r)}_{kj} t^{(s)}_{il} - t^{(s)}_{kj} t^{(r)}_{il}`
/// for all labels at the given levels.
pub fn defining_relation_holds(n: usize, conv: Convention, r: u32, s: u32) -> bool {
    let c = |x: &CycMatrix, y: &CycMatrix| x.commutator(y).expect("square");
    let m = |x: CycMatrix, y: CycMatrix| x.mul(&y).expect("square");
    let labels: Vec<i64> = (1..=n as i64).collect();
    for &i in &labels {
        for &j in &labels {
            for &k in &labels {
                for &l in &labels {
                    let lhs = c(&level(n, conv, r + 1, i, j), &level(n, conv, s, k, l))
                        .sub(&c(&level(n, conv, r, i, j), &level(n, conv, s + 1, k, l)))
                        .expect("square");
                    let rhs = m(level(n, conv, r, k, j), level(n, conv, s, i, l))
                        .sub(&m(level(n, conv, s, k, j), level(n, conv, r, i, l)))
                        .expect("square");
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `[t⁽¹⁾_{ij}, t⁽¹⁾_{kl}] = δ_{kj} t⁽¹⁾_{il} - δ_{il} t⁽¹⁾_{kj}` for all labels.
pub fn gl_layer_holds(n: usize, conv: Convention) -> bool {
    let labels: Vec<i64> = (1..=n as i64).collect();
    let t = |i, j| level(n, conv, 1, i, j);
    let zero = CycMatrix::zeros(n as u32, n, n);
    for &i in &labels {
        for &j in &labels {
            for &k in &labels {
                for &l in &labels {
                    let lhs = t(i, j).commutator(&t(k, l)).expect("square");
                    let mut rhs = zero.clone();
                    if k == j {
                        rhs.add_assign(&t(i, l)).expect("square");
                    }
                    if i == l {
                        rhs = rhs.sub(&t(k, j)).expect("square");
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// RTT for the direct convention, the transpose convention as a negative
/// control (expected to fail), the `gl_N` layer, and the defining relation at
/// levels `0..=2`.
pub fn verify_rtt(n: usize) -> Report {
    let mut items = Vec::new();
    let (lhs, rhs) = rtt_sides(n, Convention::Direct);
    items.push(Item::check("RTT direct", lhs == rhs, || {
        lhs.diff_json(&rhs)
    }));
    let (tl, tr) = rtt_sides(n, Convention::Transpose);
    items.push(Item::check("RTT transpose fails", tl != tr, || {
        (tl.to_json(), tr.to_json())
    }));
    items.push(Item::check(
        "gl layer",
        gl_layer_holds(n, Convention::Direct),
        || {
            (
                serde_json::json!("relation violated"),
                serde_json::json!("relation holds"),
            )
        },
    ));
    for r in 0..=2 {
        for s in 0..=2 {
            let ok = defining_relation_holds(n, Convention::Direct, r, s);
            items.push(Item::check(
                format!("defining relation r={r} s={s}"),
                ok,
                || {
                    (
                        serde_json::json!("relation violated"),
                        serde_json::json!("relation holds"),
                    )
                },
            ));
        }
    }
    let t11 = evaluation_entry(n, Convention::Direct, 1, 1);
    let expect = CycMatrix::identity(n as u32, n)
        .add(&unit_matrix_mod(n, 1, 1))
        .expect("square");
    let at_one = t11.constant.add(&t11.pole).expect("square");
    items.push(Item::check("t11(1)", at_one == expect, || {
        (matrix_to_json(&at_one), matrix_to_json(&expect))
    }));
    Report::new("rtt", n, items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rtt_conventions_n2_n3() {
        for n in 2..=3 {
            let (l, r) = rtt_sides(n, Convention::Direct);
            assert_eq!(l, r);
            let (l, r) = rtt_sides(n, Convention::Transpose);
            assert_ne!(l, r);
        }
    }

    #[test]
    fn layers() {
        assert!(gl_layer_holds(3, Convention::Direct));
        assert!(!gl_layer_holds(3, Convention::Transpose));
        assert!(defining_relation_holds(2, Convention::Direct, 0, 1));
        assert!(!defining_relation_holds(2, Convention::Transpose, 0, 1));
    }

    #[test]
    fn t11_series() {
        let t = evaluation_entry(2, Convention::Direct, 1, 1);
        assert_eq!(
            t.to_laurent().get(0, 0),
            &LaurentPoly::one(2).add(&LaurentPoly::first(2))
        );
        assert!(t.to_laurent().get(1, 1).as_constant().unwrap().is_one());
    }
}
