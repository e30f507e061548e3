use andre_core::seidel::{derive_sts, twin_seidel, Scheme};
use andre_core::series::*;
use andre_core::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn x1(kind: Elementary, d: u32) -> TruncatedSeries {
    elementary_series(kind, [1, 0, 0], 1, d)
}

#[test]
fn arithmetic() {
    let c = x1(Elementary::Cos, 6);
    let c2 = c.mul(&c).unwrap();
    assert_eq!(c2.coeff([0, 0, 0]), q(1, 1));
    assert_eq!(c2.coeff([2, 0, 0]), q(-1, 1));
    assert_eq!(c2.coeff([4, 0, 0]), q(1, 3));

    let tan = x1(Elementary::Sin, 7).div(&x1(Elementary::Cos, 7)).unwrap();
    assert_eq!(tan.coeff([1, 0, 0]), q(1, 1));
    assert_eq!(tan.coeff([3, 0, 0]), q(1, 3));
    assert_eq!(tan.coeff([5, 0, 0]), q(2, 15));
    assert_eq!(tan.coeff([7, 0, 0]), q(17, 315));
    assert!(tan.coeff([2, 0, 0]) == q(0, 1));

    let f = elementary_series(Elementary::Exp, [2, 1, 0], 2, 5);
    assert!(f.add(&f.scale(&q(-1, 1))).unwrap().is_zero());
    assert!(f.sub(&f).unwrap().is_zero());
    assert_eq!(f.neg().coeff([0, 0, 0]), q(-1, 1));
    assert!(matches!(
        f.add(&x1(Elementary::Cos, 5)),
        Err(SeriesError::CapMismatch(..))
    ));
    let z = TruncatedSeries::zero(2, 5);
    assert!(matches!(f.div(&z), Err(SeriesError::ZeroConstant)));
}

#[test]
fn elementary_expansions() {
    let c = elementary_series(Elementary::Cos, [1, 1, 0], 2, 2);
    let want: Vec<([u32; 3], BigRational)> = vec![
        ([0, 0, 0], q(1, 1)),
        ([0, 2, 0], q(-1, 2)),
        ([1, 1, 0], q(-1, 1)),
        ([2, 0, 0], q(-1, 2)),
    ];
    let got: Vec<_> = c.terms().into_iter().map(|(e, v)| (e, v.clone())).collect();
    assert_eq!(got, want);
    let e = elementary_series(Elementary::Exp, [2, 2, 0], 2, 4);
    assert_eq!(e.coeff([0, 0, 0]), q(1, 1));
    let s = elementary_series(Elementary::Sin, [1, 1, 1], 3, 3);
    assert_eq!(s.coeff([1, 1, 1]), q(-1, 1));
}

#[test]
fn comparisons() {
    let tan = x1(Elementary::Sin, 10)
        .div(&x1(Elementary::Cos, 10))
        .unwrap();
    assert!(compare_series(&tan, &tan, 10).equal());
    let mut x = TruncatedSeries::zero(1, 5);
    x.add_term([1, 0, 0], q(1, 1));
    let sin = x1(Elementary::Sin, 5);
    assert!(compare_series(&sin, &x, 2).equal());
    let miss = compare_series(&sin, &x, 3).first_mismatch.unwrap();
    assert_eq!(miss.exp, [3]);
    assert_eq!((miss.left, miss.right), (q(-1, 6), q(0, 1)));
}

#[test]
fn displayed_coefficients() {
    let r = rhs_series(IdentityId::EntringerOdd, 4).unwrap();
    assert_eq!(r.coeff([2, 0, 0]), q(1, 2));
    let r = rhs_series(IdentityId::AEvenUpper, 4).unwrap();
    assert_eq!(r.coeff([0, 0, 1]), q(1, 1));
    let r = rhs_series(IdentityId::HbarEven, 6).unwrap();
    assert_eq!(r.coeff([0, 0, 0]), q(1, 1));
    assert_eq!(r.coeff([2, 0, 0]), q(-1, 2));
    assert_eq!(r.coeff([4, 0, 0]), q(5, 24));

    let twin = twin_seidel(12).unwrap();
    let table = EntringerTable::new(12);
    let data = SeriesData {
        twin: &twin,
        table: &table,
    };
    assert_eq!(
        lhs_series(IdentityId::AOddUpper, data, 4)
            .unwrap()
            .coeff([0, 0, 0]),
        q(1, 1)
    );
    assert_eq!(
        lhs_series(IdentityId::BEvenBottom, data, 4)
            .unwrap()
            .coeff([0, 0, 0]),
        q(1, 1)
    );
    let l = lhs_series(IdentityId::EntringerOdd, data, 4).unwrap();
    assert_eq!(l.coeff([2, 0, 0]), q(1, 2));
}

#[test]
fn identities_hold() {
    let twin = twin_seidel(12).unwrap();
    let table = EntringerTable::new(12);
    let data = SeriesData {
        twin: &twin,
        table: &table,
    };
    for id in IdentityId::ALL {
        let d = if id.label().starts_with('7') { 10 } else { 9 };
        let rep = verify_identity(id, d, data).unwrap();
        assert!(
            rep.passed(),
            "{}: {:?}",
            id.label(),
            rep.comparison.first_mismatch
        );
        assert_eq!(id.label().parse::<IdentityId>(), Ok(id));
    }
    assert!(compare_series(
        &rhs_series(IdentityId::AEvenLower, 8).unwrap(),
        &a_even_lower_single_fraction(8).unwrap(),
        8
    )
    .equal());
    let short = twin_seidel(6).unwrap();
    let small = SeriesData {
        twin: &short,
        table: &table,
    };
    assert!(matches!(
        verify_identity(IdentityId::AEvenUpper, 9, small),
        Err(SeriesError::Depth { .. })
    ));
}

#[test]
fn fault_injection_is_located() {
    let mut twin = twin_seidel(12).unwrap();
    *twin[4].0.get_mut(2, 4) += 1;
    let table = EntringerTable::new(12);
    let data = SeriesData {
        twin: &twin,
        table: &table,
    };
    let rep = verify_identity(IdentityId::AEvenUpper, 9, data).unwrap();
    let miss = rep.comparison.first_mismatch.unwrap();
    assert_eq!(miss.exp, [1, 1, 1]);
}

#[test]
fn triangle_egf() {
    let twin = twin_seidel(11).unwrap();
    for s in [Scheme::T1Upper, Scheme::T2Lower] {
        let tris = derive_sts(&twin, s, 10).unwrap();
        let rep = verify_triangle_egf(&tris, 8).unwrap();
        assert!(rep.passed(), "{}", s.name());
    }
    let mut tris = derive_sts(&twin, Scheme::T1Upper, 10).unwrap();
    let v = tris[4].get(1, 3) + 1;
    tris[4].set(1, 3, v);
    let rep = verify_triangle_egf(&tris, 8).unwrap();
    assert!(!rep.passed());
    assert_eq!(rep.comparison.first_mismatch.unwrap().exp, [1, 1, 1]);
    assert!(verify_triangle_egf(&tris[..5], 8).is_err());
}

fn small_series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((0u32..4, 0u32..4, -9i64..10, 1i64..5), 0..8).prop_map(|ts| {
        let mut s = TruncatedSeries::zero(2, 5);
        for (a, b, n, d) in ts {
            s.add_term([a, b, 0], q(n, d));
        }
        s
    })
}

proptest! {
    #[test]
    fn division_undoes_multiplication(a in small_series(), b in small_series(), c0 in 1i64..5) {
        let mut b = b;
        b.add_term([0, 0, 0], q(c0, 1) - b.coeff([0, 0, 0]));
        let prod = a.mul(&b).unwrap();
        prop_assert_eq!(prod.div(&b).unwrap(), a);
    }

    #[test]
    fn multiplication_commutes(a in small_series(), b in small_series()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }
}
