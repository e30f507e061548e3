use andre_core::golden;
use andre_core::seidel::*;
use andre_core::*;
use num_bigint::BigInt;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Boustrophedon: each row is partial sums of the previous one, 1-based `m`.
fn boustrophedon(max_n: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![], vec![1]];
    for n in 2..=max_n {
        let prev = &rows[n - 1];
        let mut row = vec![0i64; n];
        // E_n(m) = Σ_{i ≤ n−m} E_{n−1}(i)
        for m in 1..=n {
            row[m - 1] = prev[..n - m].iter().sum();
        }
        rows.push(row);
    }
    rows
}

#[test]
fn entringer_cells() {
    let t = entringer_table(9);
    assert_eq!(t.get(5, 3), big(4));
    assert_eq!(t.get(9, 1), big(1385));
    assert_eq!(t.get(6, 6), big(0));
    assert_eq!(t.get(1, 1), big(1));
    let oracle = boustrophedon(12);
    let t = EntringerTable::new(12);
    for n in 1..=12 {
        for m in 1..=n {
            assert_eq!(t.get(n, m), big(oracle[n][m - 1]), "E_{n}({m})");
        }
    }
    for (n, m, v) in golden::entringer() {
        assert_eq!(t.get(n, m), BigInt::from(v));
    }
}

#[test]
fn twin_examples() {
    let twin = twin_seidel(8).unwrap();
    let (a6, _) = &twin[4];
    assert_eq!(a6.n, 6);
    assert_eq!(a6.rows()[0], [0, 2, 4, 5, 5, 0].map(big));
    assert_eq!(twin[5].1.get(3, 4), &big(8));
    assert_eq!(twin[6].1.get(4, 5), &big(41));
    let b2 = &twin[0].1;
    assert_eq!(b2.rows(), [vec![big(0), big(0)], vec![big(1), big(0)]]);
}

#[test]
fn twin_matches_displayed_diagram() {
    let twin = twin_seidel(8).unwrap();
    for ((which, n), grid) in golden::twin_matrices() {
        let (a, b) = &twin[n - 2];
        let m = if which == "A" { a } else { b };
        for (r, row) in grid.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                assert_eq!(
                    m.get(r + 1, c + 1),
                    &big(v),
                    "{which}_{n}({},{})",
                    r + 1,
                    c + 1
                );
            }
        }
    }
}

#[test]
fn joint_distributions() {
    let twin = twin_seidel(5).unwrap();
    let a5 = joint_distribution(5, Family::Andre1, Pair::FNl, 9).unwrap();
    assert!(a5.same_entries(&twin[3].0));
    let b4 = joint_distribution(4, Family::Andre2, Pair::LGrn, 9).unwrap();
    assert!(b4.same_entries(&twin[2].1));
    assert!(b4.diff(&twin[2].1).is_empty());

    let sf = joint_distribution(5, Family::Andre1, Pair::SpiF, 9).unwrap();
    let gold = &golden::spike_first()[&5];
    for m in 1..=5 {
        for k in 1..=5 {
            assert_eq!(sf.get(m, k), &big(gold[m - 1][k - 1]));
        }
    }
    assert!(matches!(
        joint_distribution(10, Family::Andre1, Pair::FNl, 9),
        Err(SeidelError::BoundExceeded { .. })
    ));
}

#[test]
fn margins() {
    let twin = twin_seidel(9).unwrap();
    let t = EntringerTable::new(9);
    assert_eq!(twin[4].0.total(), big(61));
    assert_eq!(twin[5].0.row_sum(1), big(61));
    assert_eq!(twin[5].0.row_sum(1), t.get(7, 1));
    assert_eq!(twin[0].0.row_sum(1), big(1));
    let rep = check_margins(&twin, &t);
    assert!(rep.passed() && rep.checked > 0);
}

fn triangles(scheme: Scheme, max_n: usize) -> Vec<SeidelTriangle> {
    derive_sts(&twin_seidel(max_n + 1).unwrap(), scheme, max_n).unwrap()
}

fn rows_of(c: &SeidelTriangle) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = vec![];
    for (m, _, v) in c.cells() {
        if rows.len() <= m {
            rows.push(vec![]);
        }
        rows[m].push(i64::try_from(v.clone()).unwrap());
    }
    rows
}

#[test]
fn displayed_triangles() {
    let c = triangles(Scheme::T1Upper, 5);
    assert_eq!(
        rows_of(&c[4]),
        [
            vec![-2, -4, -5, -5],
            vec![-4, -5, -5],
            vec![-4, -4],
            vec![-2]
        ]
    );
    let c = triangles(Scheme::T2Upper, 4);
    assert_eq!(rows_of(&c[3]), [vec![1, 2, 2], vec![2, 2], vec![1]]);
    let c = triangles(Scheme::T1Lower, 3);
    assert_eq!(rows_of(&c[2]), [vec![1, 0], vec![1]]);
    assert!(derive_sts(&twin_seidel(5).unwrap(), Scheme::T1Upper, 5).is_err());
}

#[test]
fn sts_rule() {
    for s in Scheme::ALL {
        let rep = verify_sts(&triangles(s, 10)).unwrap();
        assert!(rep.passed(), "{}", s.name());
    }
    let mut c = triangles(Scheme::T1Upper, 8);
    let bumped = c[4].get(1, 3) + 1;
    c[4].set(1, 3, bumped);
    let v = verify_sts(&c).unwrap().first_violation.unwrap();
    assert!(v.n == 5 || v.n == 6, "{v:?}");
    let two = triangles(Scheme::T1Upper, 2);
    assert!(verify_sts(&two).unwrap().passed());
}

#[test]
fn h_extraction() {
    let h = extract_h(&triangles(Scheme::T1Upper, 6));
    assert_eq!(h[&(0, 1)], big(1));
    assert_eq!(h[&(2, 1)], big(-5));
    assert_eq!(h[&(1, 2)], big(-4));
    let h = extract_h(&triangles(Scheme::T1Lower, 6));
    assert_eq!(h[&(0, 0)], big(1));
    assert_eq!(h[&(0, 2)], big(-2));
    assert_eq!(h[&(2, 0)], big(-1));
    assert!(extract_h(&[]).is_empty());
    assert!(extract_h_to(&triangles(Scheme::T1Lower, 4), 6).is_err());
}

#[test]
fn hbar() {
    let t = EntringerTable::new(9);
    let h = build_hbar(&t, Split::None);
    assert_eq!(h[&(0, 3)], big(2));
    assert_eq!(h[&(2, 2)], big(4));
    let top: Vec<BigInt> = (0..4).map(|j| h[&(0, j)].clone()).collect();
    assert_eq!(top, [1, -1, 0, 2].map(big));
    let row2: Vec<BigInt> = (0..5).map(|j| h[&(2, j)].clone()).collect();
    assert_eq!(row2, [-1, 1, 4, -14, -32].map(big));
    let even = build_hbar(&t, Split::Even);
    assert!(even
        .iter()
        .all(|((i, j), v)| (i + j) % 2 == 0 || v == &big(0)));
    assert!(seidel_rule_violations(&h).is_empty());
}

#[test]
fn scheme_names() {
    for s in Scheme::ALL {
        assert_eq!(s.name().parse::<Scheme>(), Ok(s));
    }
}
