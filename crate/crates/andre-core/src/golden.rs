//! Published reference values, shipped as CSV under `data/`.
//!
//! | file | contents |
//! |---|---|
//! | `entringer.csv` | `E_n(m)` for `n ≤ 9` |
//! | `andre_small.csv` | André I and II permutations for `n ≤ 5` |
//! | `twin_matrices.csv` | `A_n`, `B_n` for `2 ≤ n ≤ 8` |
//! | `spike_first.csv` | distribution of `(spi, F)` on André I, `2 ≤ n ≤ 7` |
//! | `tight_boxes_n5.csv`, `f_arrows_n5.csv` | André I for `n = 5` by `(F, NL)`, tight flags, `f` arrows |
//! | `tighten_n5.csv`, `hook_n5.csv` | spike insertion and hooking of André I, `n = 5` |
//! | `beta_boxes_n6.csv`, `beta_arrows_n6.csv` | André I for `n = 6` by `(spi, grn)`, hooked flags, `β` arrows |
//! | `sts_triangles.csv` | displayed Seidel triangles of the four schemes |
//! | `h_matrices.csv` | displayed `H` matrices of the four schemes, and `H̄` |

use std::collections::BTreeMap;

use crate::perm::{Kind, Perm};
use crate::seidel::Scheme;

const ENTRINGER: &str = include_str!("../data/entringer.csv");
const ANDRE_SMALL: &str = include_str!("../data/andre_small.csv");
const TWIN: &str = include_str!("../data/twin_matrices.csv");
const SPIKE_FIRST: &str = include_str!("../data/spike_first.csv");
const TIGHT_BOXES: &str = include_str!("../data/tight_boxes_n5.csv");
const F_ARROWS: &str = include_str!("../data/f_arrows_n5.csv");
const TIGHTEN: &str = include_str!("../data/tighten_n5.csv");
const HOOK: &str = include_str!("../data/hook_n5.csv");
const BETA_BOXES: &str = include_str!("../data/beta_boxes_n6.csv");
const BETA_ARROWS: &str = include_str!("../data/beta_arrows_n6.csv");
const STS: &str = include_str!("../data/sts_triangles.csv");
const H: &str = include_str!("../data/h_matrices.csv");

fn rows(text: &'static str) -> impl Iterator<Item = Vec<&'static str>> {
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(str::trim).collect())
}

fn num<T: std::str::FromStr>(s: &str) -> T {
    s.parse()
        .ok()
        .unwrap_or_else(|| panic!("bad number {s:?} in fixture"))
}

fn word(s: &str) -> Perm {
    Perm::from_digits(s).unwrap_or_else(|e| panic!("bad word {s:?} in fixture: {e}"))
}

/// `(n, m, E_n(m))`.
pub fn entringer() -> Vec<(usize, usize, u64)> {
    rows(ENTRINGER)
        .map(|r| (num(r[0]), num(r[1]), num(r[2])))
        .collect()
}

pub fn andre_small() -> Vec<(Kind, usize, Perm)> {
    rows(ANDRE_SMALL)
        .map(|r| {
            let kind = if r[0] == "I" { Kind::I } else { Kind::II };
            (kind, num(r[1]), word(r[2]))
        })
        .collect()
}

pub type Grid = Vec<Vec<i64>>;

fn grids(text: &'static str) -> BTreeMap<(String, usize), Grid> {
    let mut out: BTreeMap<(String, usize), Grid> = BTreeMap::new();
    for r in rows(text) {
        let n: usize = num(r[1]);
        let g = out
            .entry((r[0].to_string(), n))
            .or_insert_with(|| vec![vec![0; n]; n]);
        g[num::<usize>(r[2]) - 1][num::<usize>(r[3]) - 1] = num(r[4]);
    }
    out
}

/// `("A" | "B", n) → n × n` grid, row `m`, column `k` (0-based in the Vec).
pub fn twin_matrices() -> BTreeMap<(String, usize), Grid> {
    grids(TWIN)
}

/// `n →` grid with row `spi`, column `F`.
pub fn spike_first() -> BTreeMap<usize, Grid> {
    let mut out: BTreeMap<usize, Grid> = BTreeMap::new();
    for r in rows(SPIKE_FIRST) {
        let n: usize = num(r[0]);
        let g = out.entry(n).or_insert_with(|| vec![vec![0; n]; n]);
        g[num::<usize>(r[1]) - 1][num::<usize>(r[2]) - 1] = num(r[3]);
    }
    out
}

/// A boxed word: the word, its two statistics, and the boldface flag.
pub type BoxedWord = (Perm, u32, u32, bool);

fn boxes(text: &'static str) -> Vec<BoxedWord> {
    rows(text)
        .map(|r| (word(r[0]), num(r[1]), num(r[2]), r[3] == "1"))
        .collect()
}

fn arrows(text: &'static str) -> Vec<(Perm, Perm)> {
    rows(text).map(|r| (word(r[0]), word(r[1]))).collect()
}

/// André I, `n = 5`, boxed by `(F, NL)`; flag = tight.
pub fn tight_boxes_n5() -> Vec<BoxedWord> {
    boxes(TIGHT_BOXES)
}

pub fn f_arrows_n5() -> Vec<(Perm, Perm)> {
    arrows(F_ARROWS)
}

pub fn tighten_n5() -> Vec<(Perm, Perm)> {
    arrows(TIGHTEN)
}

pub fn hook_n5() -> Vec<(Perm, Perm)> {
    arrows(HOOK)
}

/// André I, `n = 6`, boxed by `(spi, grn)`; flag = hooked.
pub fn beta_boxes_n6() -> Vec<BoxedWord> {
    boxes(BETA_BOXES)
}

pub fn beta_arrows_n6() -> Vec<(Perm, Perm)> {
    arrows(BETA_ARROWS)
}

/// `(scheme, n) → [(m, k, c_n(m,k))]`.
pub fn sts_triangles() -> BTreeMap<(Scheme, usize), Vec<(usize, usize, i64)>> {
    let mut out: BTreeMap<(Scheme, usize), Vec<_>> = BTreeMap::new();
    for r in rows(STS) {
        let scheme: Scheme = r[0].parse().expect("scheme name");
        out.entry((scheme, num(r[1])))
            .or_default()
            .push((num(r[2]), num(r[3]), num(r[4])));
    }
    out
}

/// `name → [((i, j), h_{i,j})]`, names being scheme names or `Hbar`.
pub fn h_matrices() -> BTreeMap<String, Vec<((usize, usize), i64)>> {
    let mut out: BTreeMap<String, Vec<_>> = BTreeMap::new();
    for r in rows(H) {
        out.entry(r[0].to_string())
            .or_default()
            .push(((num(r[1]), num(r[2])), num(r[3])));
    }
    out
}
