use andre_core::bijections::*;
use andre_core::perm::is_andre_i;
use andre_core::stats::{grn, spike};
use andre_core::*;
use std::collections::BTreeSet;

fn p(s: &str) -> Perm {
    s.parse().unwrap()
}

fn d(s: &str) -> Perm {
    Perm::from_digits(s).unwrap()
}

#[test]
fn eta_examples() {
    assert_eq!(eta(&d("1234")).unwrap(), d("1423"));
    assert_eq!(eta(&d("4361257")).unwrap(), d("4637152"));
    assert_eq!(eta(&d("1")).unwrap(), d("1"));
    assert!(eta(&d("21")).is_err());
}

#[test]
fn theta_examples() {
    assert_eq!(
        theta(&p("10 2 11 3 12 1 9 4 5 8 6 7 13")).unwrap(),
        p("6 7 5 8 9 4 12 1 10 2 11 3 13")
    );
    assert_eq!(theta(&d("123")).unwrap(), d("123"));
    assert_eq!(theta(&d("1324")).unwrap(), d("2134"));
}

#[test]
fn phi_examples() {
    let w = p("7 8 5 6 9 2 10 1 11 3 12 4 13");
    let v = p("12 3 13 4 11 1 10 2 5 9 6 7 8");
    assert_eq!(phi(&w).unwrap(), v);
    assert_eq!(phi_inv(&v).unwrap(), w);
    assert_eq!(phi(&p("4 9")).unwrap(), p("4 9"));
    assert_eq!(phi_inv(&p("4 9")).unwrap(), p("4 9"));
    assert_eq!(
        phi(&p("6 7 5 8 9 4 12 1 10 2 11 3 13")).unwrap(),
        p("10 1 11 2 13 3 12 4 8 9 5 6 7")
    );
    assert_eq!(phi_inv(&d("312")).unwrap(), d("213"));
}

#[test]
fn g_examples() {
    assert_eq!(
        g_map(&p("7 8 5 6 9 2 10 1 11 3 12 4 13")).unwrap(),
        p("6 7 5 8 9 4 12 1 10 2 11 3 13")
    );
    assert_eq!(g_map(&d("12")).unwrap(), d("12"));
    for w in enumerate(Family::Andre1, 7) {
        assert_eq!(g_map(&g_map(&w).unwrap()).unwrap(), w);
    }
}

#[test]
fn f_and_tightness() {
    let img = f_swap(&d("423516")).unwrap();
    assert_eq!(img, d("523416"));
    assert!(!is_andre_i(&img));
    assert_eq!(f_swap(&d("13425")).unwrap(), d("23415"));
    assert!(f_swap(&d("12")).is_err());

    assert_eq!(is_tight(&d("23145")), Ok(true));
    assert_eq!(is_tight(&d("13425")), Ok(false));
    assert_eq!(is_tight(&d("12")), Ok(true));
    let tight: BTreeSet<Perm> = enumerate(Family::Andre1, 5)
        .into_iter()
        .filter(|w| is_tight(w).unwrap())
        .collect();
    let shown: BTreeSet<Perm> = ["23145", "32415", "34125", "41325", "41235"].map(d).into();
    assert_eq!(tight, shown);
}

#[test]
fn tighten_examples() {
    for (w, v) in [
        ("21435", "231546"),
        ("12345", "512346"),
        ("34125", "435126"),
    ] {
        assert_eq!(tighten(&d(w)).unwrap(), d(v));
        assert_eq!(tighten_inv(&d(v)).unwrap(), d(w));
    }
}

#[test]
fn hook_examples() {
    for (w, v) in [
        ("13425", "214536"),
        ("23415", "324516"),
        ("41235", "451236"),
    ] {
        assert_eq!(hook(&d(w)).unwrap(), d(v));
        assert_eq!(unhook(&d(v)).unwrap(), d(w));
    }
    assert!(is_hooked(&d("214536")));
    assert!(!is_hooked(&d("312456")));
    assert!(!is_hooked(&d("12")));
}

#[test]
fn alpha_examples() {
    assert_eq!(alpha(&d("23415")).unwrap(), d("13425"));
    assert_eq!(alpha(&d("34125")).unwrap(), d("14235"));
    assert_eq!(alpha_inv(&d("13425")).unwrap(), d("23415"));
    assert_eq!(
        Bijection::Alpha
            .apply(&d("13425"), Direction::Inverse)
            .unwrap(),
        d("23415")
    );
    assert!(alpha(&d("21345")).is_err());
}

/// The shift formula is not closed on André I once n ≥ 6: dropping n−1
/// after a descent leaves a double descent.
#[test]
fn alpha_shift_leaves_andre_i_from_six_on() {
    let w = d("243516");
    assert_eq!((spike(&w), grn(&w)), (Ok(5), Ok(1)));
    assert!(!is_andre_i(&[1, 3, 5, 4, 2, 6]));
    assert!(alpha(&w).is_err());
    for n in 3..=5 {
        for w in enumerate(Family::Andre1, n)
            .into_iter()
            .filter(|w| spike(w) == Ok(n as u32 - 1))
        {
            assert_eq!(alpha_inv(&alpha(&w).unwrap()).unwrap(), w);
        }
    }
}

#[test]
fn beta_examples() {
    assert_eq!(
        beta(&p("4 5 3 8 1 6 7 2 9")).unwrap(),
        p("4 6 3 8 1 5 7 2 9")
    );
    assert_eq!(
        beta(&p("3 5 6 2 7 1 8 4 9")).unwrap(),
        p("2 5 6 3 7 1 8 4 9")
    );
    assert_eq!(beta(&d("32415")).unwrap(), d("23415"));
    let err = beta(&d("123")).unwrap_err();
    assert!(err.clause.starts_with("(m,k) range violated"), "{err}");
    assert!(beta_range(9, 5, 2));
    assert!(!beta_range(6, 5, 3));
}

#[test]
fn round_trips_and_contracts() {
    for n in 1..=7 {
        for w in enumerate(Family::Andre1, n) {
            let v = phi(&w).unwrap();
            assert_eq!(phi_inv(&v).unwrap(), w);
            let t = theta(&w).unwrap();
            assert_eq!(theta(&t).unwrap(), w);
            for b in [
                Bijection::Eta,
                Bijection::Theta,
                Bijection::Phi,
                Bijection::G,
            ] {
                let img = b.apply(&w, Direction::Forward).unwrap();
                for (clause, ok) in b.contract(&w, &img, Direction::Forward) {
                    assert!(ok, "{} {w}: {clause}", b.name());
                }
            }
        }
    }
}

#[test]
fn names_parse() {
    for b in [
        Bijection::Eta,
        Bijection::Phi,
        Bijection::Tighten,
        Bijection::Beta,
    ] {
        assert_eq!(b.name().parse::<Bijection>(), Ok(b));
    }
    assert!(Bijection::Eta.apply(&d("1"), Direction::Inverse).is_err());
}
