use proptest::prelude::*;

use principal_yangian::bell::{
    act_dual, act_fundamental, dual_pairing, from_bell_basis, to_bell_basis, DualVector,
    FundVector, TensorVector,
};
use principal_yangian::exactfield::poly2::Params;
use principal_yangian::exactfield::{rat, CycMatrix, CycNum, MatrixPoly, ParamPoly};
use principal_yangian::lie::{from_principal_coordinates, principal_coordinates, traceless_part};
use principal_yangian::rtt::principal::IndexExpr;
use principal_yangian::yangian::coproduct::delta_matrix;

fn cyc(n: u32) -> impl Strategy<Value = CycNum> {
    prop::collection::vec((-4i64..=4, 1i64..=3), n as usize).prop_map(move |cs| {
        let coeffs = cs.into_iter().map(|(p, q)| rat(p, q)).collect();
        CycNum::from_coeffs(n, coeffs)
    })
}

fn matrix(n: usize) -> impl Strategy<Value = CycMatrix> {
    let o = n as u32;
    let sparse = prop_oneof![
        3 => Just(None),
        1 => cyc(o).prop_map(Some),
    ];
    prop::collection::vec(sparse, n * n).prop_map(move |es| {
        let entries = es
            .into_iter()
            .map(|e| e.unwrap_or_else(|| CycNum::zero(o)))
            .collect();
        CycMatrix::from_entries(o, n, n, entries).unwrap()
    })
}

fn orders() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3), Just(4), Just(5)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_field_axioms((x, y, z) in orders().prop_flat_map(|n| (cyc(n), cyc(n), cyc(n)))) {
        prop_assert_eq!((x.clone() + y.clone()) * z.clone(), x.clone() * z.clone() + y.clone() * z.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!((x.clone() * y.clone()).conjugate(), x.conjugate() * y.conjugate());
        if let Some(inv) = x.inverse() {
            prop_assert!((x.clone() * inv).is_one());
        } else {
            prop_assert!(x.is_zero());
        }
        prop_assert!((x.clone() - x).is_zero());
    }

    #[test]
    fn coproduct_preserves_brackets((x, y) in (2usize..=4).prop_flat_map(|n| (matrix(n), matrix(n)))) {
        let br = x.commutator(&y).unwrap();
        let lhs = delta_matrix(&x).commutator(&delta_matrix(&y)).unwrap();
        prop_assert_eq!(lhs, delta_matrix(&br));
    }

    #[test]
    fn jacobi((x, y, z) in (2usize..=3).prop_flat_map(|n| (matrix(n), matrix(n), matrix(n)))) {
        let c = |a: &CycMatrix, b: &CycMatrix| a.commutator(b).unwrap();
        let sum = c(&x, &c(&y, &z)).add(&c(&y, &c(&z, &x))).unwrap().add(&c(&z, &c(&x, &y))).unwrap();
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn principal_coordinates_roundtrip(x in (2usize..=5).prop_flat_map(matrix)) {
        let n = x.rows();
        let coords = principal_coordinates(&x).unwrap();
        prop_assert_eq!(from_principal_coordinates(n, &coords).unwrap(), x);
    }

    #[test]
    fn bell_basis_roundtrip(
        (n, coeffs) in (2usize..=4).prop_flat_map(|n| (Just(n), prop::collection::vec(cyc(n as u32), n * n)))
    ) {
        let v = TensorVector { n, coeffs: coeffs.into_iter().map(ParamPoly::constant).collect() };
        prop_assert_eq!(from_bell_basis(&to_bell_basis(&v)), v);
    }

    #[test]
    fn dual_pairing_is_invariant(
        (n, x, v, w) in (2usize..=4).prop_flat_map(|n| {
            let o = n as u32;
            (
                Just(n),
                matrix(n),
                prop::collection::vec(cyc(o), n),
                prop::collection::vec(cyc(o), n),
            )
        })
    ) {
        let x = traceless_part(&x);
        let v = DualVector::from_cyc(n, &v);
        let w = FundVector::from_cyc(n, &w);
        let lhs = dual_pairing(&act_dual(&x, &v).unwrap(), &w);
        let rhs = dual_pairing(&v, &act_fundamental(&x, &w).unwrap()).neg();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrix_poly_specialization_is_a_homomorphism(
        (p, q, ma, mb, a, b) in (2usize..=3).prop_flat_map(|n| (
            (0u32..3, 0u32..3),
            (0u32..3, 0u32..3),
            (matrix(n), matrix(n)),
            (matrix(n), matrix(n)),
            (-3i64..=3, 1i64..=4),
            (-3i64..=3, 1i64..=4),
        ))
    ) {
        let x: MatrixPoly<Params> = MatrixPoly::monomial(p.0, p.1, ma.0.clone()).add(&MatrixPoly::monomial(q.0, q.1, ma.1.clone()));
        let y = MatrixPoly::monomial(q.1, p.0, mb.0.clone()).add(&MatrixPoly::constant(mb.1.clone()));
        let (a, b) = (rat(a.0, a.1), rat(b.0, b.1));
        let xy = x.mul(&y);
        let prod = x.specialize(&a, &b).mul(&y.specialize(&a, &b)).unwrap();
        prop_assert_eq!(xy.specialize(&a, &b), prod);
        let sum = x.specialize(&a, &b).add(&y.specialize(&a, &b)).unwrap();
        prop_assert_eq!(x.add(&y).specialize(&a, &b), sum);
    }

    #[test]
    fn index_expressions_roundtrip(coeffs in prop::array::uniform6(-3i64..=3), constant in -5i64..=5) {
        let e = IndexExpr { coeffs, constant };
        let parsed: IndexExpr = e.to_string().parse().unwrap();
        prop_assert_eq!(parsed, e);
    }
}
