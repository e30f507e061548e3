use andre_core::perm::{brute_force, is_andre_i, is_andre_ii, next_permutation};
use andre_core::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn p(s: &str) -> Perm {
    Perm::from_digits(s).unwrap()
}

fn v(w: &Perm) -> Vec<u32> {
    w.letters().to_vec()
}

#[test]
fn parse() {
    assert_eq!(v(&parse_permutation("2 3 1 4").unwrap()), [2, 3, 1, 4]);
    let w = parse_permutation("7 8 5 6 9 2 10 1 11 3 12 4 13").unwrap();
    assert_eq!(w.len(), 13);
    assert_eq!(w[6], 10);
    assert!(matches!(
        parse_permutation("2 2 3"),
        Err(PermError::Duplicate(_))
    ));
    assert!(parse_permutation("1 x").is_err());
    assert!(parse_permutation("").unwrap().is_empty());
}

#[test]
fn reduction() {
    let (pat, ground) = reduce(&[4, 3, 6]);
    assert_eq!(v(&pat), [2, 1, 3]);
    assert_eq!(ground, [3, 4, 6]);
    assert_eq!(v(&reduce(&[1, 2, 5, 7]).0), [1, 2, 3, 4]);
    assert!(reduce(&[]).0.is_empty());

    assert_eq!(v(&unreduce(&[2, 3, 1], &[3, 4, 6]).unwrap()), [4, 6, 3]);
    assert_eq!(
        v(&unreduce(&[4, 1, 3, 2], &[1, 2, 5, 7]).unwrap()),
        [7, 1, 5, 2]
    );
    assert_eq!(v(&unreduce(&[1], &[9]).unwrap()), [9]);
    assert!(unreduce(&[1, 2], &[5]).is_err());
}

#[test]
fn complements() {
    assert_eq!(complement(&[1, 3, 2]).unwrap(), p("312"));
    assert_eq!(complement(&[1, 4, 2, 3]).unwrap(), p("4132"));
    assert_eq!(complement(&[1]).unwrap(), p("1"));
    assert!(complement(&[2, 5]).is_err());
}

#[test]
fn factorizations() {
    let f = x_factorization(&[2, 5, 3, 4, 1, 6], 3).unwrap();
    assert_eq!(
        (v(&f.w1), v(&f.w2), f.x, v(&f.w4), v(&f.w5)),
        (vec![2], vec![5], 3, vec![4], vec![1, 6])
    );
    let f = x_factorization(&[2, 3, 1, 4], 1).unwrap();
    assert_eq!(
        (v(&f.w1), v(&f.w2), v(&f.w4), v(&f.w5)),
        (vec![], vec![2, 3], vec![4], vec![])
    );
    let f = x_factorization(&[1], 1).unwrap();
    assert!(f.w1.is_empty() && f.w2.is_empty() && f.w4.is_empty() && f.w5.is_empty());
    assert!(x_factorization(&[1, 2], 3).is_err());
}

#[test]
fn letter_types() {
    let set = |t: &[LetterType]| t.iter().copied().collect::<BTreeSet<_>>();
    assert_eq!(
        letter_type(&[2, 3, 1, 4], 1).unwrap(),
        set(&[LetterType::TypeI])
    );
    assert_eq!(
        letter_type(&[3, 1, 2], 1).unwrap(),
        set(&[LetterType::TypeII])
    );
    assert_eq!(letter_type(&[1], 1).unwrap(), set(&[LetterType::Both]));
}

#[test]
fn recognizers() {
    for me in [Method::Recursive, Method::Factorization, Method::Trough] {
        assert!(is_andre(&[2, 3, 1, 4], Kind::I, me));
        assert!(!is_andre(&[5, 2, 3, 4, 1, 6], Kind::I, me));
        assert!(is_andre(&[3, 4, 1, 2], Kind::II, me));
    }
    assert!(is_alternating(&[1, 4, 2, 3]));
    assert!(is_alternating(&[4, 6, 3, 7, 1, 5, 2]));
    assert!(is_alternating(&[1, 2]));
    assert!(!is_alternating(&[2, 1]));
}

#[test]
fn small_listings() {
    let s = |f, n| {
        enumerate(f, n)
            .iter()
            .map(Perm::compact)
            .collect::<Vec<_>>()
    };
    assert_eq!(
        s(Family::Andre1, 4),
        ["1234", "1324", "2134", "2314", "3124"]
    );
    assert_eq!(s(Family::Andre2, 3), ["123", "312"]);
    assert_eq!(s(Family::Alt, 1), ["1"]);
    assert_eq!(s(Family::Alt, 0), ["e"]);
}

/// Definition by letter types alone, independent of the recognizers.
fn andre_by_types(w: &[u32], kind: Kind) -> bool {
    let want = match kind {
        Kind::I => LetterType::TypeI,
        Kind::II => LetterType::TypeII,
    };
    let n = w.len();
    (n < 2 || w[n - 2] < w[n - 1])
        && w.iter().all(|&x| {
            let t = letter_type(w, x).unwrap();
            t.contains(&want) || t.contains(&LetterType::Both)
        })
}

#[test]
fn recognizers_agree_through_nine() {
    for n in 0..=9usize {
        let mut a: Vec<u32> = (1..=n as u32).collect();
        loop {
            for kind in [Kind::I, Kind::II] {
                let r = is_andre(&a, kind, Method::Recursive);
                assert_eq!(r, is_andre(&a, kind, Method::Factorization), "{a:?}");
                assert_eq!(r, is_andre(&a, kind, Method::Trough), "{a:?}");
                if n <= 7 {
                    assert_eq!(r, andre_by_types(&a, kind), "{a:?}");
                }
            }
            if !next_permutation(&mut a) {
                break;
            }
        }
    }
}

/// Euler zigzag numbers from 2A_{n+1} = Σ C(n,k) A_k A_{n−k}.
fn zigzag(max: usize) -> Vec<BigInt> {
    let mut a = vec![BigInt::from(1), BigInt::from(1)];
    for n in 1..max {
        let mut s = BigInt::from(0);
        let mut c = BigInt::from(1);
        for k in 0..=n {
            s += &c * &a[k] * &a[n - k];
            c = c * (n - k) / (k + 1);
        }
        a.push(s / 2);
    }
    a
}

#[test]
fn cardinalities_match_zigzag_numbers() {
    let z = zigzag(11);
    for n in 1..=11 {
        for f in Family::ALL {
            assert_eq!(
                BigInt::from(enumerate(f, n).len()),
                z[n],
                "{} n={n}",
                f.name()
            );
        }
    }
}

#[test]
fn generation_matches_filter() {
    for n in 0..=8 {
        for f in Family::ALL {
            assert_eq!(
                generate(f, n).to_perms(),
                brute_force(f, n),
                "{} n={n}",
                f.name()
            );
        }
    }
}

#[test]
fn families_are_closed_where_expected() {
    for w in enumerate(Family::Andre1, 7) {
        assert!(is_andre_i(&w) && Family::Andre1.contains(&w));
        assert!(w[5] < w[6]);
    }
    for w in enumerate(Family::Andre2, 7) {
        assert!(is_andre_ii(&w));
    }
}

fn distinct_letters() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(1u32..60, 0..12)
        .prop_flat_map(|s| Just(s.into_iter().collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn reduce_round_trips(w in distinct_letters()) {
        let (pat, ground) = reduce(&w);
        prop_assert!(pat.is_standard());
        prop_assert_eq!(unreduce(&pat, &ground).unwrap().into_letters(), w);
    }

    #[test]
    fn complement_is_an_involution(w in (0usize..10).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())) {
        let c = complement(&w).unwrap();
        prop_assert_eq!(complement(&c).unwrap().into_letters(), w);
    }

    #[test]
    fn display_parses_back(w in distinct_letters()) {
        let q = Perm::new(w).unwrap();
        prop_assert_eq!(parse_permutation(&q.to_string()).unwrap(), q);
    }
}
