//! The constructive maps on André permutations and their statistic contracts.
//!
//! `eta`, `theta` and `g_map` are defined on permutations of `{1..n}` and
//! extended to other ground sets by conjugating with the reduction `ρ`; `phi`
//! and `phi_inv` recurse on sub-words and accept any ground set directly.
//! Everything from `f_swap` onwards expects a permutation of `{1..n}`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::{
    argmin, complement_raw, is_alternating, is_andre_i, is_andre_ii, reduce_with, reduced,
    unreduce_raw, Perm,
};
use crate::stats::{canonical_factorization, first, grn, penultimate, pit, spike};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{map}: {clause}")]
pub struct MapError {
    pub map: &'static str,
    pub clause: String,
}

fn fail<T>(map: &'static str, clause: impl Into<String>) -> Result<T, MapError> {
    Err(MapError {
        map,
        clause: clause.into(),
    })
}

fn require_andre_i(map: &'static str, w: &[u32]) -> Result<(), MapError> {
    if is_andre_i(w) {
        Ok(())
    } else {
        fail(map, "input is not an André I permutation")
    }
}

fn require_standard(map: &'static str, w: &[u32]) -> Result<(), MapError> {
    if Perm::raw(w.to_vec()).is_standard() {
        Ok(())
    } else {
        fail(map, format!("input is not a permutation of 1..{}", w.len()))
    }
}

/// Apply a map on `{1..n}` to an arbitrary ground set via `ρ⁻¹ ∘ f ∘ ρ`.
fn conjugate(w: &[u32], f: impl Fn(&[u32]) -> Vec<u32>) -> Vec<u32> {
    let mut ground = w.to_vec();
    ground.sort_unstable();
    unreduce_raw(&f(&reduce_with(w, &ground)), &ground)
}

// ---------------------------------------------------------------- eta

/// André I onto alternating, preserving the first letter.
pub fn eta(w: &Perm) -> Result<Perm, MapError> {
    require_andre_i("eta", w)?;
    Ok(Perm::raw(conjugate(w, eta_std)))
}

fn eta_std(w: &[u32]) -> Vec<u32> {
    match w {
        [] | [_] | [1, 2] => return w.to_vec(),
        [1, 2, 3] => return vec![1, 3, 2],
        [2, 1, 3] => return vec![2, 3, 1],
        _ => {}
    }
    let p = argmin(w);
    let (wl, wr) = (&w[..p], &w[p + 1..]);
    if wl.is_empty() {
        let mut out = vec![w[p]];
        out.extend(conjugate(wr, |u| complement_raw(&eta_std(u))));
        return out;
    }
    let mut out = conjugate(wl, eta_std);
    let mut u = vec![w[p]];
    u.extend_from_slice(wr);
    if wl.len() % 2 == 0 {
        out.extend(conjugate(&u, eta_std));
    } else {
        out.extend(conjugate(&u, |v| complement_raw(&eta_std(v))));
    }
    out
}

// ---------------------------------------------------------------- theta

/// `x_1 … x_{n−1} n ↦ (n−x_{n−1}) … (n−x_1) n`, an involution on André I.
pub fn theta(w: &Perm) -> Result<Perm, MapError> {
    require_andre_i("theta", w)?;
    Ok(Perm::raw(conjugate(w, |u| {
        let n = u.len() as u32;
        let mut out: Vec<u32> = u[..u.len() - 1].iter().rev().map(|&x| n - x).collect();
        out.push(n);
        out
    })))
}

// ---------------------------------------------------------------- phi

/// André I onto André II over the same ground set.
pub fn phi(w: &Perm) -> Result<Perm, MapError> {
    require_andre_i("phi", w)?;
    Ok(Perm::raw(phi_rec(w)))
}

fn phi_rec(w: &[u32]) -> Vec<u32> {
    if w.len() <= 2 {
        return w.to_vec();
    }
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    let (a1, a2) = (sorted[0], sorted[1]);
    let p1 = w.iter().position(|&x| x == a1).unwrap();
    let p2 = w.iter().position(|&x| x == a2).unwrap();
    let (v0, v1, v2) = if p1 < p2 {
        (&w[..p1], &w[p1 + 1..p2], &w[p2 + 1..])
    } else {
        (&w[..p2], &w[p1 + 1..], &w[p2 + 1..p1])
    };
    let mut rest = v0.to_vec();
    rest.push(a2);
    rest.extend_from_slice(v2);
    let mut out = phi_rec(v1);
    out.push(a1);
    out.extend(phi_rec(&rest));
    out
}

pub fn phi_inv(v: &Perm) -> Result<Perm, MapError> {
    if !is_andre_ii(v) {
        return fail("phi_inv", "input is not an André II permutation");
    }
    Ok(Perm::raw(phi_inv_rec(v)))
}

fn phi_inv_rec(v: &[u32]) -> Vec<u32> {
    if v.len() <= 2 {
        return v.to_vec();
    }
    let p = argmin(v);
    let (w0, a1, w1) = (&v[..p], v[p], &v[p + 1..]);
    let v1 = phi_inv_rec(w0);
    let inner = phi_inv_rec(w1);
    let a2 = *w1
        .iter()
        .min()
        .expect("André II words do not end with their minimum");
    let q = inner.iter().position(|&x| x == a2).unwrap();
    let (v0, v2) = (&inner[..q], &inner[q + 1..]);
    let max_in_w1 = w1.iter().max() > w0.iter().max();
    let mut out = v0.to_vec();
    if max_in_w1 {
        out.push(a1);
        out.extend(v1);
        out.push(a2);
        out.extend_from_slice(v2);
    } else {
        out.push(a2);
        out.extend_from_slice(v2);
        out.push(a1);
        out.extend(v1);
    }
    out
}

// ---------------------------------------------------------------- g

/// Replace each canonical factor `v` by `v̄_i = (n+1) − v_{|v|+1−i}`.
pub fn g_map(w: &Perm) -> Result<Perm, MapError> {
    require_andre_i("g", w)?;
    if w.is_empty() {
        return Ok(w.clone());
    }
    Ok(Perm::raw(conjugate(w, |u| {
        let n1 = u.len() as u32 + 1;
        let cf = canonical_factorization(u).expect("nonempty");
        cf.factors
            .iter()
            .flat_map(|v| v.iter().rev().map(|&x| n1 - x).collect::<Vec<_>>())
            .collect()
    })))
}

// ---------------------------------------------------------------- f and tightness

/// Transpose the first letter `m` with `m+1`.
pub fn f_swap(w: &Perm) -> Result<Perm, MapError> {
    require_standard("f", w)?;
    let n = w.len() as u32;
    let Some(&m) = w.first() else {
        return fail("f", "empty word");
    };
    if m + 2 > n {
        return fail(
            "f",
            format!("first letter {m} must be at most n-2 = {}", n as i64 - 2),
        );
    }
    Ok(Perm::raw(swap_letters(w, m, m + 1)))
}

fn swap_letters(w: &[u32], a: u32, b: u32) -> Vec<u32> {
    w.iter()
        .map(|&x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        })
        .collect()
}

/// `w = m v (m+1) v′` with `v < m` letterwise, and `F v′` below everything to its
/// left (or `v′ = e` and `m = n−1`).
pub fn is_tight(w: &Perm) -> Result<bool, MapError> {
    require_andre_i("is_tight", w)?;
    if w.len() < 2 {
        return fail("is_tight", "needs at least two letters");
    }
    let u = reduced(w);
    let n = u.len() as u32;
    let m = u[0];
    let q = u.iter().position(|&x| x == m + 1).unwrap();
    let (v, vp) = (&u[1..q], &u[q + 1..]);
    let cond_i = v.iter().all(|&x| x < m);
    let cond_ii = match vp.first() {
        Some(&f) => u[..=q].iter().all(|&x| f < x),
        None => m == n - 1,
    };
    Ok(cond_i && cond_ii)
}

/// Spike insertion: André I of length `n−1` onto the tight words of length `n`.
pub fn tighten(w: &Perm) -> Result<Perm, MapError> {
    require_andre_i("tighten", w)?;
    require_standard("tighten", w)?;
    let Ok(s) = spike(w) else {
        return fail("tighten", "empty word");
    };
    let mut out = vec![s];
    out.extend(w.iter().map(|&x| if x >= s { x + 1 } else { x }));
    Ok(Perm::raw(out))
}

pub fn tighten_inv(w: &Perm) -> Result<Perm, MapError> {
    require_standard("tighten_inv", w)?;
    if w.len() < 2 {
        return fail("tighten_inv", "needs at least two letters");
    }
    if !is_tight(w)? {
        return fail("tighten_inv", "input is not tight");
    }
    Ok(Perm::raw(reduced(&w[1..])))
}

// ---------------------------------------------------------------- hooking

/// `x_1 − 1 = x_2 < x_3` or `x_1 + 1 = x_2 > x_3`; false below three letters.
pub fn is_hooked(w: &[u32]) -> bool {
    w.len() >= 3 && ((w[0] == w[1] + 1 && w[1] < w[2]) || (w[0] + 1 == w[1] && w[1] > w[2]))
}

pub fn hook(w: &Perm) -> Result<Perm, MapError> {
    require_andre_i("hook", w)?;
    require_standard("hook", w)?;
    if w.len() < 2 {
        return fail("hook", "needs at least two letters");
    }
    let x1 = w[0];
    let shift = |x: u32| if x > x1 { x + 1 } else { x };
    let mut out = if x1 < w[1] {
        vec![x1 + 1, x1]
    } else {
        vec![x1, x1 + 1]
    };
    out.extend(w[1..].iter().map(|&x| shift(x)));
    Ok(Perm::raw(out))
}

pub fn unhook(w: &Perm) -> Result<Perm, MapError> {
    require_standard("unhook", w)?;
    if !is_hooked(w) {
        return fail("unhook", "input is not hooked");
    }
    let drop = if w[0] == w[1] + 1 { 0 } else { 1 };
    let rest: Vec<u32> = w
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != drop)
        .map(|(_, &x)| x)
        .collect();
    Ok(Perm::raw(reduced(&rest)))
}

// ---------------------------------------------------------------- alpha, beta

/// `(spi, grn) = (n−1, k) ↦ (n, k+1)`: drop `n−1`, raise the letters below it, prepend 1.
pub fn alpha(w: &Perm) -> Result<Perm, MapError> {
    require_andre_i("alpha", w)?;
    require_standard("alpha", w)?;
    let n = w.len() as u32;
    if n < 2 || spike(w).ok() != Some(n - 1) {
        return fail("alpha", "spike must equal n-1");
    }
    let mut out = vec![1];
    out.extend(
        w.iter()
            .filter(|&&x| x != n - 1)
            .map(|&x| if x == n { n } else { x + 1 }),
    );
    // The shift can leave a double descent where n-1 used to be.
    if !is_andre_i(&out) {
        return fail("alpha", "image is not André I");
    }
    Ok(Perm::raw(out))
}

pub fn alpha_inv(w: &Perm) -> Result<Perm, MapError> {
    require_andre_i("alpha_inv", w)?;
    require_standard("alpha_inv", w)?;
    let n = w.len();
    if n < 3 || w[0] != 1 {
        return fail(
            "alpha_inv",
            "first letter must be 1 (spike equal to n) with n >= 3",
        );
    }
    // No smaller letter: n-1 was the first letter of the preimage.
    let j = (2..n - 1).find(|&j| w[j] < w[1]).unwrap_or(1);
    let mut out: Vec<u32> = w[1..j].iter().map(|&x| x - 1).collect();
    out.push(n as u32 - 1);
    out.extend(w[j..n - 1].iter().map(|&x| x - 1));
    out.push(n as u32);
    Ok(Perm::raw(out))
}

/// The strips where β is defined: `2 ≤ k+1 ≤ m ≤ n−2` or `3 ≤ m+2 ≤ k ≤ n−1`.
pub fn beta_range(n: u32, m: u32, k: u32) -> bool {
    (2 <= k + 1 && k < m && m + 2 <= n) || (3 <= m + 2 && m + 2 <= k && k < n)
}

/// `B_n(m,k) → NH_n(m+1,k)` where `(m,k) = (spi, grn)`.
pub fn beta(w: &Perm) -> Result<Perm, MapError> {
    require_andre_i("beta", w)?;
    require_standard("beta", w)?;
    let n = w.len() as u32;
    if n < 3 {
        return fail("beta", "(m,k) range violated: needs n >= 4");
    }
    let (m, k) = (spike(w).unwrap(), grn(w).unwrap());
    if !beta_range(n, m, k) {
        return fail(
            "beta",
            format!("(m,k) range violated: (spi,grn) = ({m},{k}) with n = {n}"),
        );
    }
    let p = w.position(m).unwrap();
    let q = w.position(m + 1).unwrap();
    if q < p + 2 || q + 1 >= w.len() {
        return fail("beta", "w = w1 m w2 (m+1) w3 needs w2 and w3 nonempty");
    }
    let (w2, w3) = (&w[p + 1..q], &w[q + 1..]);
    if w2.iter().min().unwrap() < &w3[0] {
        return Ok(Perm::raw(swap_letters(w, m, m + 1)));
    }
    let left = &w[..=q];
    let mut ground = left.to_vec();
    ground.sort_unstable();
    let a = alpha(&Perm::raw(reduce_with(left, &ground)))?;
    let mut out = unreduce_raw(&a, &ground);
    out.extend_from_slice(w3);
    Ok(Perm::raw(out))
}

// ---------------------------------------------------------------- dispatch

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    Eta,
    Theta,
    Phi,
    G,
    F,
    Tighten,
    Hook,
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    #[default]
    Forward,
    Inverse,
}

impl Bijection {
    pub const ALL: [Bijection; 9] = [
        Bijection::Eta,
        Bijection::Theta,
        Bijection::Phi,
        Bijection::G,
        Bijection::F,
        Bijection::Tighten,
        Bijection::Hook,
        Bijection::Alpha,
        Bijection::Beta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::Eta => "eta",
            Bijection::Theta => "theta",
            Bijection::Phi => "phi",
            Bijection::G => "g",
            Bijection::F => "f",
            Bijection::Tighten => "tighten",
            Bijection::Hook => "hook",
            Bijection::Alpha => "alpha",
            Bijection::Beta => "beta",
        }
    }

    pub fn apply(self, w: &Perm, dir: Direction) -> Result<Perm, MapError> {
        use Bijection::*;
        use Direction::*;
        match (self, dir) {
            (Eta, Forward) => eta(w),
            (Theta, _) => theta(w),
            (Phi, Forward) => phi(w),
            (Phi, Inverse) => phi_inv(w),
            (G, _) => g_map(w),
            (F, _) => f_swap(w),
            (Tighten, Forward) => tighten(w),
            (Tighten, Inverse) => tighten_inv(w),
            (Hook, Forward) => hook(w),
            (Hook, Inverse) => unhook(w),
            (Alpha, Forward) => alpha(w),
            (Alpha, Inverse) => alpha_inv(w),
            (Beta, Forward) => beta(w),
            (Eta | Beta, Inverse) => fail(self.name(), "no inverse direction is provided"),
        }
    }

    /// Statistic-transfer contract for `w ↦ image`, as `(description, holds)`.
    pub fn contract(self, w: &Perm, image: &Perm, dir: Direction) -> Vec<(String, bool)> {
        let n = w.len() as u32;
        let st = |f: fn(&[u32]) -> Result<u32, crate::stats::StatError>, u: &Perm| f(u).ok();
        let mut out = Vec::new();
        let mut push = |d: String, ok: bool| out.push((d, ok));
        match (self, dir) {
            (Bijection::Eta, _) => {
                push("image alternating".into(), is_alternating(image));
                push("F preserved".into(), st(first, w) == st(first, image));
            }
            (Bijection::Theta, _) => {
                push("image André I".into(), is_andre_i(image));
                let nl = st(penultimate, image).map(|x| x as i64);
                let f = st(first, w).map(|x| x as i64);
                push(
                    "NL(image) + F(w) = n".into(),
                    n < 2 || nl.zip(f).map(|(a, b)| a + b) == Some(n as i64),
                );
            }
            (Bijection::Phi, Direction::Forward) => {
                push("image André II".into(), is_andre_ii(image));
                push(
                    "(F, spi, NL)(w) = (pit, L, grn)(image)".into(),
                    n < 2
                        || (st(first, w), st(spike, w), st(penultimate, w))
                            == (st(pit, image), image.last().copied(), st(grn, image)),
                );
            }
            (Bijection::Phi, Direction::Inverse) => {
                push("image André I".into(), is_andre_i(image));
                push("phi(image) = w".into(), phi(image).as_ref() == Ok(w));
            }
            (Bijection::G, _) => {
                push("image André I".into(), is_andre_i(image));
                let lhs = (st(first, image), st(spike, image));
                let rhs = (
                    st(spike, w).map(|s| n + 1 - s),
                    st(first, w).map(|f| n + 1 - f),
                );
                push(
                    "(F, spi)(image) = (n+1-spi, n+1-F)(w)".into(),
                    n <= 2 || lhs == rhs,
                );
            }
            (Bijection::F, _) => {
                let tight = is_tight(w).ok();
                push(
                    format!(
                        "source tight = {tight:?}; image André I = {}",
                        is_andre_i(image)
                    ),
                    tight != Some(true) || !is_andre_i(image),
                );
                if tight == Some(false) && n >= 2 {
                    let (m, k) = (w[0], w[w.len() - 2]);
                    let k2 = if k == m + 1 { m } else { k };
                    push(
                        format!("image in A_n({}, {k2})", m + 1),
                        is_andre_i(image)
                            && (st(first, image), st(penultimate, image))
                                == (Some(m + 1), Some(k2)),
                    );
                }
            }
            (Bijection::Tighten, Direction::Forward) => {
                push("image tight".into(), is_tight(image) == Ok(true));
                push("F(image) = spi(w)".into(), st(first, image) == st(spike, w));
                let (s, g) = (st(spike, w), st(grn, w));
                let expect = match (s, g) {
                    (Some(s), Some(g)) => Some(if s > g { g } else { g + 1 }),
                    _ => None,
                };
                push(
                    "grn(image) = grn(w) if spi > grn, else grn(w) + 1".into(),
                    n < 2 || st(grn, image) == expect,
                );
            }
            (Bijection::Tighten, Direction::Inverse) => {
                push(
                    "tighten(image) = w".into(),
                    tighten(image).as_ref() == Ok(w),
                );
            }
            (Bijection::Hook, Direction::Forward) => {
                push("image hooked".into(), is_hooked(image));
                push("image André I".into(), is_andre_i(image));
                push(
                    "spi(image) = F(w) + 1".into(),
                    st(spike, image) == st(first, w).map(|f| f + 1),
                );
                let (f, g) = (st(first, w), st(grn, w));
                let expect = f.zip(g).map(|(f, g)| if f < g { g + 1 } else { g });
                push(
                    "grn(image) = grn(w) + [F < grn]".into(),
                    st(grn, image) == expect,
                );
            }
            (Bijection::Hook, Direction::Inverse) => {
                push("hook(image) = w".into(), hook(image).as_ref() == Ok(w));
            }
            (Bijection::Alpha, Direction::Forward) => {
                push("spi(image) = n".into(), st(spike, image) == Some(n));
                push(
                    "grn(image) = grn(w) + 1".into(),
                    st(grn, image) == st(grn, w).map(|g| g + 1),
                );
            }
            (Bijection::Alpha, Direction::Inverse) => {
                push("alpha(image) = w".into(), alpha(image).as_ref() == Ok(w));
            }
            (Bijection::Beta, _) => {
                push("image André I".into(), is_andre_i(image));
                push("image not hooked".into(), !is_hooked(image));
                push(
                    "(spi, grn)(image) = (spi+1, grn)(w)".into(),
                    (st(spike, image), st(grn, image)) == (st(spike, w).map(|s| s + 1), st(grn, w)),
                );
            }
        }
        out
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bijection {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Bijection::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| format!("unknown bijection {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        Perm::from_digits(s).unwrap()
    }

    #[test]
    fn eta_small() {
        assert_eq!(eta(&p("2134")).unwrap(), p("2413"));
        assert_eq!(eta(&p("2314")).unwrap(), p("2314"));
        assert!(eta(&p("321")).is_err());
    }

    #[test]
    fn alpha_pair() {
        assert_eq!(alpha(&p("23415")).unwrap(), p("13425"));
        assert_eq!(alpha_inv(&p("13425")).unwrap(), p("23415"));
        assert!(alpha_inv(&p("12")).is_err());
    }

    #[test]
    fn range_strips() {
        assert!(beta_range(9, 5, 2));
        assert!(beta_range(6, 2, 4));
        assert!(!beta_range(6, 5, 3));
        assert!(!beta_range(3, 1, 2));
    }
}
