//! Entringer numbers, the twin Seidel matrices `(A_n, B_n)`, brute-force joint
//! distributions, and Seidel triangle sequences derived from the twins.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::perm::{enumerate, Family};
use crate::stats::{first, grn, last, penultimate, spike};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeidelError {
    #[error("{which}_{n}({m},{k}) would be negative ({value})")]
    Negative {
        which: char,
        n: usize,
        m: usize,
        k: usize,
        value: BigInt,
    },
    #[error("{which}_{n}({m},{k}) written twice with different values ({old} vs {new})")]
    Conflict {
        which: char,
        n: usize,
        m: usize,
        k: usize,
        old: BigInt,
        new: BigInt,
    },
    #[error("{which}_{n}({m},{k}) is not determined by the rules")]
    Unset {
        which: char,
        n: usize,
        m: usize,
        k: usize,
    },
    #[error("n = {n} exceeds the exhaustive bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("n = {0} is too small (need n >= 2)")]
    TooSmall(usize),
    #[error("insufficient depth: need size {need}, have {have}")]
    Depth { need: usize, have: usize },
    #[error("triangles must have consecutive sizes")]
    NotConsecutive,
}

// ---------------------------------------------------------------- Entringer

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntringerTable {
    rows: Vec<Vec<BigInt>>,
}

impl EntringerTable {
    /// `E_n(m) = E_n(m+1) + E_{n−1}(n−m)` from `E_n(n) = 0`, with `E_1(1) = 1`.
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new()];
        for n in 1..=max_n {
            let mut row = vec![BigInt::zero(); n];
            if n == 1 {
                row[0] = BigInt::from(1);
            } else {
                for m in (1..n).rev() {
                    row[m - 1] = &row[m] + &rows[n - 1][n - m - 1];
                }
            }
            rows.push(row);
        }
        EntringerTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `E_n(m)`, zero outside `1 ≤ m ≤ n`.
    pub fn get(&self, n: usize, m: usize) -> BigInt {
        if m == 0 || m > n || n > self.max_n() {
            return BigInt::zero();
        }
        self.rows[n][m - 1].clone()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    /// `E_n = Σ_m E_n(m)`.
    pub fn total(&self, n: usize) -> BigInt {
        self.rows[n].iter().sum()
    }
}

pub fn entringer_table(max_n: usize) -> EntringerTable {
    EntringerTable::new(max_n)
}

// ---------------------------------------------------------------- count matrices

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pair {
    FNl,
    LGrn,
    SpiGrn,
    SpiF,
}

impl Pair {
    pub const ALL: [Pair; 4] = [Pair::FNl, Pair::LGrn, Pair::SpiGrn, Pair::SpiF];

    pub fn name(self) -> &'static str {
        match self {
            Pair::FNl => "F,NL",
            Pair::LGrn => "L,grn",
            Pair::SpiGrn => "spi,grn",
            Pair::SpiF => "spi,F",
        }
    }

    fn eval(self, w: &[u32]) -> (usize, usize) {
        let (a, b) = match self {
            Pair::FNl => (first(w), penultimate(w)),
            Pair::LGrn => (last(w), grn(w)),
            Pair::SpiGrn => (spike(w), grn(w)),
            Pair::SpiF => (spike(w), first(w)),
        };
        (a.unwrap() as usize, b.unwrap() as usize)
    }
}

impl FromStr for Pair {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Pair::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown pair {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    A,
    B,
    BruteForce(Family, Pair),
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixKind::A => f.write_str("A"),
            MatrixKind::B => f.write_str("B"),
            MatrixKind::BruteForce(..) => f.write_str("bruteforce"),
        }
    }
}

/// `n × n` nonnegative counts, indexed from 1 (`m` = row, `k` = column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    pub n: usize,
    pub kind: MatrixKind,
    entries: Vec<Vec<BigInt>>,
}

impl CountMatrix {
    pub fn from_rows(n: usize, kind: MatrixKind, entries: Vec<Vec<BigInt>>) -> Self {
        assert!(entries.len() == n && entries.iter().all(|r| r.len() == n));
        CountMatrix { n, kind, entries }
    }

    pub fn get(&self, m: usize, k: usize) -> &BigInt {
        &self.entries[m - 1][k - 1]
    }

    pub fn get_mut(&mut self, m: usize, k: usize) -> &mut BigInt {
        &mut self.entries[m - 1][k - 1]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn row_sum(&self, m: usize) -> BigInt {
        self.entries[m - 1].iter().sum()
    }

    pub fn col_sum(&self, k: usize) -> BigInt {
        self.entries.iter().map(|r| &r[k - 1]).sum()
    }

    pub fn total(&self) -> BigInt {
        self.entries.iter().flatten().sum()
    }

    /// Cells where the two matrices differ, as `(m, k, self, other)`.
    pub fn diff(&self, other: &CountMatrix) -> Vec<(usize, usize, BigInt, BigInt)> {
        let n = self.n.max(other.n);
        let at = |c: &CountMatrix, m: usize, k: usize| {
            if m <= c.n && k <= c.n {
                c.get(m, k).clone()
            } else {
                BigInt::zero()
            }
        };
        let mut out = Vec::new();
        for m in 1..=n {
            for k in 1..=n {
                let (a, b) = (at(self, m, k), at(other, m, k));
                if a != b {
                    out.push((m, k, a, b));
                }
            }
        }
        out
    }

    pub fn same_entries(&self, other: &CountMatrix) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

/// Write-once grid: a rule that lands on an already-derived cell must agree with it.
struct Grid {
    which: char,
    n: usize,
    cells: Vec<Vec<Option<BigInt>>>,
}

impl Grid {
    fn new(which: char, n: usize) -> Self {
        Grid {
            which,
            n,
            cells: vec![vec![None; n]; n],
        }
    }

    fn set(&mut self, m: usize, k: usize, v: BigInt) -> Result<(), SeidelError> {
        let (which, n) = (self.which, self.n);
        if v.is_negative() {
            return Err(SeidelError::Negative {
                which,
                n,
                m,
                k,
                value: v,
            });
        }
        let cell = &mut self.cells[m - 1][k - 1];
        match cell {
            Some(old) if *old != v => Err(SeidelError::Conflict {
                which,
                n,
                m,
                k,
                old: old.clone(),
                new: v,
            }),
            _ => {
                *cell = Some(v);
                Ok(())
            }
        }
    }

    fn get(&self, m: usize, k: usize) -> Result<BigInt, SeidelError> {
        self.cells[m - 1][k - 1].clone().ok_or(SeidelError::Unset {
            which: self.which,
            n: self.n,
            m,
            k,
        })
    }

    fn finish(self, kind: MatrixKind) -> Result<CountMatrix, SeidelError> {
        let mut entries = Vec::with_capacity(self.n);
        for m in 1..=self.n {
            let mut row = Vec::with_capacity(self.n);
            for k in 1..=self.n {
                row.push(self.get(m, k)?);
            }
            entries.push(row);
        }
        Ok(CountMatrix::from_rows(self.n, kind, entries))
    }
}

/// `B_n` from `A_{n−1}`.
fn psi(a: &CountMatrix) -> Result<CountMatrix, SeidelError> {
    let n = a.n + 1;
    let mut b = Grid::new('b', n);
    let zero = BigInt::zero;
    for i in 1..=n {
        b.set(1, i, zero())?;
        b.set(i, n, zero())?;
        b.set(i, i, zero())?;
    }
    b.set(n, 1, zero())?;
    for k in 2..n {
        b.set(n, k, a.col_sum(k - 1))?;
    }
    // The bottom-but-one row is also taken at k = 1.
    for k in 1..=n - 2 {
        b.set(n - 1, k, a.col_sum(k))?;
    }
    for k in 1..n {
        for m in (k + 1..=n.saturating_sub(2)).rev() {
            let v = b.get(m + 1, k)? - a.get(m, k);
            b.set(m, k, v)?;
        }
        for m in 1..k.saturating_sub(1) {
            let v = b.get(m, k)? + a.get(m, k - 1);
            b.set(m + 1, k, v)?;
        }
    }
    b.finish(MatrixKind::B)
}

/// `A_n` from `B_{n−1}`.
fn phi_step(b: &CountMatrix) -> Result<CountMatrix, SeidelError> {
    let n = b.n + 1;
    let mut a = Grid::new('a', n);
    let zero = BigInt::zero;
    for i in 1..=n {
        a.set(n, i, zero())?;
        a.set(i, n, zero())?;
        a.set(i, i, zero())?;
    }
    for k in 2..n {
        a.set(1, k, b.col_sum(k - 1))?;
    }
    for k in 1..n {
        for m in 1..k.saturating_sub(1) {
            let v = a.get(m, k)? - b.get(m, k - 1);
            a.set(m + 1, k, v)?;
        }
        for m in (k + 1..n).rev() {
            let v = a.get(m + 1, k)? + b.get(m, k);
            a.set(m, k, v)?;
        }
    }
    a.finish(MatrixKind::A)
}

/// `(A_n, B_n)` for `n = 2..=max_n`.
pub fn twin_seidel(max_n: usize) -> Result<Vec<(CountMatrix, CountMatrix)>, SeidelError> {
    if max_n < 2 {
        return Err(SeidelError::TooSmall(max_n));
    }
    let one = BigInt::from(1);
    let z = BigInt::zero;
    let a2 = CountMatrix::from_rows(
        2,
        MatrixKind::A,
        vec![vec![one.clone(), z()], vec![z(), z()]],
    );
    let b2 = CountMatrix::from_rows(2, MatrixKind::B, vec![vec![z(), z()], vec![one, z()]]);
    let mut out = vec![(a2, b2)];
    for _ in 3..=max_n {
        let (a, b) = out.last().unwrap();
        let next = (phi_step(b)?, psi(a)?);
        out.push(next);
    }
    Ok(out)
}

/// Exhaustive tabulation of `pair` over the family.
pub fn joint_distribution(
    n: usize,
    family: Family,
    pair: Pair,
    bound: usize,
) -> Result<CountMatrix, SeidelError> {
    if n > bound {
        return Err(SeidelError::BoundExceeded { n, bound });
    }
    if n < 2 {
        return Err(SeidelError::TooSmall(n));
    }
    let mut entries = vec![vec![BigInt::zero(); n]; n];
    for w in enumerate(family, n) {
        let (m, k) = pair.eval(&w);
        entries[m - 1][k - 1] += 1;
    }
    Ok(CountMatrix::from_rows(
        n,
        MatrixKind::BruteForce(family, pair),
        entries,
    ))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MarginReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl MarginReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Row, column and total sums of the twins against the Entringer table.
pub fn check_margins(twin: &[(CountMatrix, CountMatrix)], table: &EntringerTable) -> MarginReport {
    let mut rep = MarginReport::default();
    let mut check = |what: String, got: BigInt, want: BigInt| {
        rep.checked += 1;
        if got != want {
            rep.violations
                .push(format!("{what}: got {got}, expected {want}"));
        }
    };
    for (a, b) in twin {
        let n = a.n;
        if n > table.max_n() {
            break;
        }
        for m in 1..=n {
            check(format!("a_{n}({m},.)"), a.row_sum(m), table.get(n, m));
            check(
                format!("b_{n}({m},.)"),
                b.row_sum(m),
                table.get(n, n + 1 - m),
            );
        }
        for k in 1..=n {
            check(format!("a_{n}(.,{k})"), a.col_sum(k), table.get(n, n - k));
            check(format!("b_{n}(.,{k})"), b.col_sum(k), table.get(n, n - k));
        }
        check(format!("sum a_{n}"), a.total(), table.total(n));
        check(format!("sum b_{n}"), b.total(), table.total(n));
    }
    rep
}

// ---------------------------------------------------------------- Seidel triangles

/// `c_n(m,k)` for `0 ≤ m < k ≤ n−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeidelTriangle {
    pub n: usize,
    rows: Vec<Vec<BigInt>>,
}

impl SeidelTriangle {
    pub fn zero(n: usize) -> Self {
        let rows = (0..n.saturating_sub(1))
            .map(|m| vec![BigInt::zero(); n - 1 - m])
            .collect();
        SeidelTriangle { n, rows }
    }

    pub fn get(&self, m: usize, k: usize) -> &BigInt {
        &self.rows[m][k - m - 1]
    }

    pub fn set(&mut self, m: usize, k: usize, v: BigInt) {
        self.rows[m][k - m - 1] = v;
    }

    /// Cells `(m, k, value)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(m, r)| r.iter().enumerate().map(move |(t, v)| (m, m + 1 + t, v)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    T1Upper,
    T2Upper,
    T1Lower,
    T2Lower,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [
        Scheme::T1Upper,
        Scheme::T2Upper,
        Scheme::T1Lower,
        Scheme::T2Lower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::T1Upper => "T1-upper",
            Scheme::T2Upper => "T2-upper",
            Scheme::T1Lower => "T1-lower",
            Scheme::T2Lower => "T2-lower",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Scheme::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown scheme {s:?}"))
    }
}

fn signed(v: &BigInt, exp: usize) -> BigInt {
    if exp % 2 == 0 {
        v.clone()
    } else {
        -v
    }
}

/// `C_1 … C_max_n` from the twins by the scheme's sign and reindexing rule.
pub fn derive_sts(
    twin: &[(CountMatrix, CountMatrix)],
    scheme: Scheme,
    max_n: usize,
) -> Result<Vec<SeidelTriangle>, SeidelError> {
    let have = twin.last().map_or(0, |t| t.0.n);
    if max_n + 1 > have {
        return Err(SeidelError::Depth {
            need: max_n + 1,
            have,
        });
    }
    let pick = |size: usize, use_a: bool| {
        let (a, b) = &twin[size - 2];
        if use_a {
            a
        } else {
            b
        }
    };
    let mut out = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let mut c = SeidelTriangle::zero(n);
        let odd = n % 2 == 1;
        let (use_a, exp, upper) = match scheme {
            Scheme::T1Upper if odd => (true, n.div_ceil(2), true),
            Scheme::T1Upper => (false, n / 2, true),
            Scheme::T2Upper if odd => (false, (n - 1) / 2, true),
            Scheme::T2Upper => (true, n / 2, true),
            Scheme::T1Lower if odd => (true, n.div_ceil(2), false),
            Scheme::T1Lower => (false, (n + 2) / 2, false),
            Scheme::T2Lower if odd => (false, (n - 1) / 2, false),
            Scheme::T2Lower => (true, (n - 2) / 2, false),
        };
        let mat = pick(n + 1, use_a);
        for m in 0..n {
            for k in m + 1..n {
                let v = if upper {
                    mat.get(n - k, n - m)
                } else {
                    mat.get(k + 1, m + 1)
                };
                c.set(m, k, signed(v, exp));
            }
        }
        out.push(c);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StsViolation {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    /// `c_n(m,k) − c_n(m,k+1)`
    pub difference: BigInt,
    /// `c_{n−1}(m,k)`
    pub expected: BigInt,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StsReport {
    pub checked: usize,
    pub first_violation: Option<StsViolation>,
}

impl StsReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// `c_n(m,k) − c_n(m,k+1) = c_{n−1}(m,k)` for consecutive triangles.
pub fn verify_sts(triangles: &[SeidelTriangle]) -> Result<StsReport, SeidelError> {
    if triangles.windows(2).any(|p| p[1].n != p[0].n + 1) {
        return Err(SeidelError::NotConsecutive);
    }
    let mut rep = StsReport::default();
    for pair in triangles.windows(2) {
        let (prev, c) = (&pair[0], &pair[1]);
        let n = c.n;
        if n < 3 {
            continue;
        }
        for m in 0..n - 2 {
            for k in m + 1..=n - 2 {
                rep.checked += 1;
                let difference = c.get(m, k) - c.get(m, k + 1);
                let expected = prev.get(m, k).clone();
                if difference != expected && rep.first_violation.is_none() {
                    rep.first_violation = Some(StsViolation {
                        n,
                        m,
                        k,
                        difference,
                        expected,
                    });
                }
            }
        }
    }
    Ok(rep)
}

pub type HMatrix = BTreeMap<(usize, usize), BigInt>;

/// `h_{i,j} = c_{i+j+2}(j, i+j+1)` from every triangle of size at least 2.
pub fn extract_h(triangles: &[SeidelTriangle]) -> HMatrix {
    let mut h = HMatrix::new();
    for c in triangles.iter().filter(|c| c.n >= 2) {
        let s = c.n - 2;
        for j in 0..=s {
            h.insert((s - j, j), c.get(j, s + 1).clone());
        }
    }
    h
}

/// As `extract_h`, but insists that sizes up to `depth` are present.
pub fn extract_h_to(triangles: &[SeidelTriangle], depth: usize) -> Result<HMatrix, SeidelError> {
    let have = triangles.iter().map(|c| c.n).max().unwrap_or(0);
    if have < depth {
        return Err(SeidelError::Depth { need: depth, have });
    }
    let h = extract_h(triangles);
    Ok(h.into_iter()
        .filter(|((i, j), _)| i + j + 2 <= depth)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Split {
    None,
    Even,
    Odd,
}

impl FromStr for Split {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "none" => Ok(Split::None),
            "even" => Ok(Split::Even),
            "odd" => Ok(Split::Odd),
            _ => Err(format!("unknown split {s:?}")),
        }
    }
}

/// Signed Entringer numbers along skew diagonals, for `i + j + 1 ≤ max_n`.
pub fn build_hbar(table: &EntringerTable, split: Split) -> HMatrix {
    let mut h = HMatrix::new();
    let max = table.max_n();
    for s in 0..max {
        for i in 0..=s {
            let j = s - i;
            let v = if s % 2 == 0 {
                signed(&table.get(s + 1, j + 1), s / 2)
            } else {
                signed(&table.get(s + 1, i + 1), s.div_ceil(2))
            };
            let keep = match split {
                Split::None => true,
                Split::Even => s % 2 == 0,
                Split::Odd => s % 2 == 1,
            };
            h.insert((i, j), if keep { v } else { BigInt::zero() });
        }
    }
    h
}

/// Cells breaking `h_{i,j} = h_{i−1,j} + h_{i−1,j+1}`.
pub fn seidel_rule_violations(h: &HMatrix) -> Vec<(usize, usize)> {
    h.iter()
        .filter(|(&(i, _), _)| i > 0)
        .filter_map(|(&(i, j), v)| {
            let up = h.get(&(i - 1, j))?;
            let diag = h.get(&(i - 1, j + 1))?;
            (up + diag != *v).then_some((i, j))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entringer_small_rows() {
        let t = EntringerTable::new(5);
        let row = |n| {
            t.row(n)
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        assert_eq!(row(4), "2 2 1 0");
        assert_eq!(row(5), "5 5 4 2 0");
        assert_eq!(t.get(5, 0), BigInt::zero());
    }

    #[test]
    fn grid_rejects_conflicts() {
        let mut g = Grid::new('a', 2);
        g.set(1, 1, BigInt::from(1)).unwrap();
        g.set(1, 1, BigInt::from(1)).unwrap();
        assert!(matches!(
            g.set(1, 1, BigInt::from(2)),
            Err(SeidelError::Conflict { .. })
        ));
        assert!(matches!(
            g.set(1, 2, BigInt::from(-1)),
            Err(SeidelError::Negative { .. })
        ));
        assert!(matches!(
            g.finish(MatrixKind::A),
            Err(SeidelError::Unset { .. })
        ));
    }

    #[test]
    fn small_twins() {
        let t = twin_seidel(3).unwrap();
        let flat = |c: &CountMatrix| {
            c.rows()
                .iter()
                .flatten()
                .map(|v| v.to_string())
                .collect::<String>()
        };
        assert_eq!(flat(&t[1].0), "010100000");
        assert_eq!(flat(&t[1].1), "000100010");
    }
}
