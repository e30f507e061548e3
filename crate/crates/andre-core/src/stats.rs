//! F, L, NL, grn, spike, pit, records and the canonical factorization.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::{argmax, argmin, Perm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatError {
    #[error("{stat} needs at least {need} letters, got {got}")]
    TooShort {
        stat: &'static str,
        need: usize,
        got: usize,
    },
    #[error("pit is only defined when the word ends with a rise")]
    PitDomain,
    #[error("unknown statistic {0:?}")]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stat {
    F,
    L,
    NL,
    Grn,
    Spi,
    Pit,
}

impl Stat {
    pub const ALL: [Stat; 6] = [Stat::F, Stat::L, Stat::NL, Stat::Grn, Stat::Spi, Stat::Pit];

    pub fn name(self) -> &'static str {
        match self {
            Stat::F => "F",
            Stat::L => "L",
            Stat::NL => "NL",
            Stat::Grn => "grn",
            Stat::Spi => "spi",
            Stat::Pit => "pit",
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = StatError;
    fn from_str(s: &str) -> Result<Self, StatError> {
        Stat::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| StatError::Unknown(s.to_string()))
    }
}

fn need(stat: &'static str, w: &[u32], n: usize) -> Result<(), StatError> {
    if w.len() < n {
        Err(StatError::TooShort {
            stat,
            need: n,
            got: w.len(),
        })
    } else {
        Ok(())
    }
}

pub fn evaluate_stat(w: &[u32], stat: Stat) -> Result<u32, StatError> {
    match stat {
        Stat::F => first(w),
        Stat::L => last(w),
        Stat::NL => penultimate(w),
        Stat::Grn => grn(w),
        Stat::Spi => spike(w),
        Stat::Pit => pit(w),
    }
}

pub fn first(w: &[u32]) -> Result<u32, StatError> {
    need("F", w, 1)?;
    Ok(w[0])
}

pub fn last(w: &[u32]) -> Result<u32, StatError> {
    need("L", w, 1)?;
    Ok(w[w.len() - 1])
}

pub fn penultimate(w: &[u32]) -> Result<u32, StatError> {
    need("NL", w, 2)?;
    Ok(w[w.len() - 2])
}

/// Greater neighbour of the maximum letter, boundaries reading as 0.
pub fn grn(w: &[u32]) -> Result<u32, StatError> {
    need("grn", w, 2)?;
    let p = argmax(w);
    let left = if p > 0 { w[p - 1] } else { 0 };
    let right = w.get(p + 1).copied().unwrap_or(0);
    Ok(left.max(right))
}

/// Last letter of the longest prefix whose letters are all `≥ x_1`.
pub fn spike(w: &[u32]) -> Result<u32, StatError> {
    need("spi", w, 1)?;
    let mut i = 1;
    while i < w.len() && w[i] > w[0] {
        i += 1;
    }
    Ok(w[i - 1])
}

fn pit_domain(w: &[u32]) -> Result<(), StatError> {
    if w.len() < 2 {
        return Err(StatError::TooShort {
            stat: "pit",
            need: 2,
            got: w.len(),
        });
    }
    if w[w.len() - 2] > w[w.len() - 1] {
        return Err(StatError::PitDomain);
    }
    Ok(())
}

/// Record-pair form: past the rightmost letter exceeding `x_n`, the second
/// right-minimum record (the closest pair of records sits there).
pub fn pit(w: &[u32]) -> Result<u32, StatError> {
    pit_domain(w)?;
    let n = w.len();
    let xn = w[n - 1];
    let Some(i) = w.iter().rposition(|&x| x > xn) else {
        return Ok(*w.iter().min().unwrap());
    };
    let tail = &w[i + 1..];
    let mut recs = Vec::new();
    let mut cur = u32::MAX;
    for &x in tail.iter().rev() {
        if x < cur {
            recs.push(x);
            cur = x;
        }
    }
    // recs holds right-minimum records right to left; the minimum comes last.
    Ok(recs[recs.len() - 2])
}

/// `pit(w1 · min · w2) = pit(w2)` unless `w` ends with its maximum.
pub fn pit_recursive(w: &[u32]) -> Result<u32, StatError> {
    pit_domain(w)?;
    // Right factors may shrink to a single letter, which ends with its maximum.
    let mut w = w;
    while argmax(w) != w.len() - 1 {
        w = &w[argmin(w) + 1..];
    }
    Ok(w[argmin(w)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

/// Left-to-right records as `(1-based position, letter)`.
pub fn records(w: &[u32], ext: Extremum) -> Vec<(usize, u32)> {
    let mut out: Vec<(usize, u32)> = Vec::new();
    for (i, &x) in w.iter().enumerate() {
        let is_rec = match (out.last(), ext) {
            (None, _) => true,
            (Some(&(_, r)), Extremum::Min) => x < r,
            (Some(&(_, r)), Extremum::Max) => x > r,
        };
        if is_rec {
            out.push((i + 1, x));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalFactorization {
    pub factors: Vec<Perm>,
    /// `(F v_i, L v_i)` for each factor.
    pub types: Vec<(u32, u32)>,
}

/// Cut just before every left minimum record.
pub fn canonical_factorization(w: &[u32]) -> Result<CanonicalFactorization, StatError> {
    need("canonical factorization", w, 1)?;
    let cuts: Vec<usize> = records(w, Extremum::Min).iter().map(|r| r.0 - 1).collect();
    let mut factors = Vec::with_capacity(cuts.len());
    for (t, &c) in cuts.iter().enumerate() {
        let end = cuts.get(t + 1).copied().unwrap_or(w.len());
        factors.push(Perm::raw(w[c..end].to_vec()));
    }
    let types = factors.iter().map(|v| (v[0], v[v.len() - 1])).collect();
    Ok(CanonicalFactorization { factors, types })
}
