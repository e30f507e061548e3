use andre_core::stats::{canonical_factorization, grn, pit, pit_recursive, records, spike};
use andre_core::*;

fn p(s: &str) -> Perm {
    s.parse().unwrap()
}

const LONG: &str = "7 8 5 6 9 2 10 1 11 3 12 4 13";

#[test]
fn named_statistics() {
    assert_eq!(evaluate_stat(&p(LONG), Stat::NL), Ok(4));
    assert_eq!(evaluate_stat(&p(LONG), Stat::F), Ok(7));
    assert_eq!(evaluate_stat(&p("6 1 4 2 3 5"), Stat::Grn), Ok(1));
    assert_eq!(evaluate_stat(&p("1 2"), Stat::F), Ok(1));
    assert_eq!(evaluate_stat(&p("1 2"), Stat::L), Ok(2));
    assert!(matches!(
        evaluate_stat(&p("1"), Stat::NL),
        Err(StatError::TooShort { .. })
    ));
    assert_eq!("grn".parse::<Stat>(), Ok(Stat::Grn));
    assert!("foo".parse::<Stat>().is_err());
}

#[test]
fn spikes() {
    assert_eq!(spike(&[2, 5, 3, 4, 1, 6]), Ok(4));
    assert_eq!(spike(&[4, 2, 5, 1, 3, 6]), Ok(4));
    assert_eq!(spike(&[1, 4, 2, 3, 5]), Ok(5));
    assert_eq!(spike(&p(LONG)), Ok(8));
}

#[test]
fn pits() {
    assert_eq!(pit(&[4, 5, 1, 2, 3, 6]), Ok(1));
    assert_eq!(pit(&[6, 1, 4, 2, 3, 5]), Ok(2));
    assert_eq!(pit(&[1, 2]), Ok(1));
}

#[test]
fn pit_forms_agree_on_andre_ii() {
    for n in 2..=8 {
        for w in enumerate(Family::Andre2, n) {
            assert_eq!(pit(&w), pit_recursive(&w), "{w}");
        }
    }
}

#[test]
fn record_letters() {
    let letters = |e| {
        records(&p(LONG), e)
            .into_iter()
            .map(|r| r.1)
            .collect::<Vec<_>>()
    };
    assert_eq!(letters(Extremum::Min), [7, 5, 2, 1]);
    assert_eq!(letters(Extremum::Max), [7, 8, 9, 10, 11, 12, 13]);
    assert_eq!(records(&[1], Extremum::Min), [(1, 1)]);
}

#[test]
fn canonical_factors() {
    let cf = canonical_factorization(&p(LONG)).unwrap();
    let shown: Vec<String> = cf.factors.iter().map(|f| f.to_string()).collect();
    assert_eq!(shown, ["7 8", "5 6 9", "2 10", "1 11 3 12 4 13"]);
    assert_eq!(cf.types, [(7, 8), (5, 9), (2, 10), (1, 13)]);

    let cf = canonical_factorization(&p("6 7 5 8 9 4 12 1 10 2 11 3 13")).unwrap();
    assert_eq!(cf.types, [(6, 7), (5, 9), (4, 12), (1, 13)]);
    assert_eq!(canonical_factorization(&[1, 2]).unwrap().types, [(1, 2)]);
}

#[test]
fn grn_equals_nl_on_andre_i() {
    for n in 2..=8 {
        for w in enumerate(Family::Andre1, n) {
            assert_eq!(grn(&w), evaluate_stat(&w, Stat::NL), "{w}");
        }
    }
}

#[test]
fn spike_is_a_left_maximum_record() {
    for n in 1..=8 {
        for w in enumerate(Family::Andre1, n) {
            let s = spike(&w).unwrap();
            assert!(records(&w, Extremum::Max).iter().any(|r| r.1 == s), "{w}");
        }
    }
}
