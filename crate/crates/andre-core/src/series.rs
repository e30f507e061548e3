//! Truncated power series in up to three variables with exact rational
//! coefficients, and the generating-function identities built on them.
//!
//! Coefficients are plain Taylor coefficients: the series is `Σ t·x^i y^j z^k`.
//! EGF monomials `x^a/a!` are converted at assembly time.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::seidel::{
    build_hbar, extract_h, verify_sts, CountMatrix, EntringerTable, SeidelTriangle, Split,
    StsReport,
};

pub type Exp = [u32; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series shapes differ: {0} vars / degree {1} vs {2} vars / degree {3}")]
    CapMismatch(usize, u32, usize, u32),
    #[error("division by a series with zero constant term")]
    ZeroConstant,
    #[error("unknown identity {0:?}")]
    UnknownId(String),
    #[error("insufficient data: need size {need}, have {have}")]
    Depth { need: usize, have: usize },
    #[error("{0}")]
    Seidel(#[from] crate::seidel::SeidelError),
}

fn deg(e: &Exp) -> u32 {
    e[0] + e[1] + e[2]
}

/// Total degree first, then lexicographic.
pub fn graded_cmp(a: &Exp, b: &Exp) -> Ordering {
    deg(a).cmp(&deg(b)).then(a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: usize,
    degree: u32,
    coeffs: BTreeMap<Exp, BigRational>,
}

impl TruncatedSeries {
    pub fn zero(vars: usize, degree: u32) -> Self {
        assert!((1..=3).contains(&vars), "1 to 3 variables");
        TruncatedSeries {
            vars,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, degree: u32, c: BigRational) -> Self {
        let mut s = Self::zero(vars, degree);
        s.add_term([0, 0, 0], c);
        s
    }

    pub fn one(vars: usize, degree: u32) -> Self {
        Self::constant(vars, degree, BigRational::one())
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Adds `c` to the coefficient at `e`; terms beyond the cap are dropped.
    pub fn add_term(&mut self, e: Exp, c: BigRational) {
        assert!(
            e[self.vars..].iter().all(|&x| x == 0),
            "exponent uses a variable the series does not have"
        );
        if deg(&e) > self.degree || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: Exp) -> BigRational {
        self.coeffs
            .get(&e)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms in graded order.
    pub fn terms(&self) -> Vec<(Exp, &BigRational)> {
        let mut t: Vec<_> = self.coeffs.iter().map(|(e, c)| (*e, c)).collect();
        t.sort_by(|a, b| graded_cmp(&a.0, &b.0));
        t
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_shape(&self, o: &Self) -> Result<(), SeriesError> {
        if self.vars != o.vars || self.degree != o.degree {
            return Err(SeriesError::CapMismatch(
                self.vars,
                self.degree,
                o.vars,
                o.degree,
            ));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, SeriesError> {
        self.same_shape(o)?;
        let mut out = self.clone();
        for (e, c) in &o.coeffs {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, SeriesError> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.vars, self.degree);
        for (e, v) in &self.coeffs {
            out.add_term(*e, v * c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Result<Self, SeriesError> {
        self.same_shape(o)?;
        let mut out = Self::zero(self.vars, self.degree);
        for (ea, ca) in &self.coeffs {
            let da = deg(ea);
            for (eb, cb) in &o.coeffs {
                if da + deg(eb) > self.degree {
                    continue;
                }
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        Ok(out)
    }

    /// Term-by-term in graded order: `r_e = −(1/b_0) Σ_{0≠f≤e} b_f r_{e−f}`.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let b0 = self.coeff([0, 0, 0]);
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstant);
        }
        let inv0 = b0.recip();
        let mut r: BTreeMap<Exp, BigRational> = BTreeMap::new();
        for e in monomials(self.vars, self.degree) {
            let v = if e == [0, 0, 0] {
                inv0.clone()
            } else {
                let mut acc = BigRational::zero();
                for (f, bf) in &self.coeffs {
                    if *f == [0, 0, 0] || f.iter().zip(&e).any(|(a, b)| a > b) {
                        continue;
                    }
                    if let Some(rv) = r.get(&[e[0] - f[0], e[1] - f[1], e[2] - f[2]]) {
                        acc += bf * rv;
                    }
                }
                -acc * &inv0
            };
            if !v.is_zero() {
                r.insert(e, v);
            }
        }
        Ok(TruncatedSeries {
            vars: self.vars,
            degree: self.degree,
            coeffs: r,
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self, SeriesError> {
        self.same_shape(o)?;
        self.mul(&o.reciprocal()?)
    }

    pub fn truncate(&self, degree: u32) -> Self {
        let mut out = Self::zero(self.vars, degree);
        for (e, c) in &self.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

/// Every exponent of total degree `≤ degree` in graded order.
pub fn monomials(vars: usize, degree: u32) -> Vec<Exp> {
    let mut out = Vec::new();
    for d in 0..=degree {
        for i in (0..=d).rev() {
            if vars == 1 {
                if i == d {
                    out.push([i, 0, 0]);
                }
                continue;
            }
            for j in (0..=d - i).rev() {
                let k = d - i - j;
                if vars == 2 && k > 0 {
                    continue;
                }
                out.push([i, j, k]);
            }
        }
    }
    out.sort_by(graded_cmp);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    Sin,
    Cos,
    Exp,
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, b| a * b)
}

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Taylor expansion of `kind(c_x x + c_y y + c_z z)` up to total degree `degree`.
pub fn elementary_series(
    kind: Elementary,
    form: [i64; 3],
    vars: usize,
    degree: u32,
) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(vars, degree);
    for e in monomials(vars, degree) {
        let t = deg(&e);
        let d: i64 = match kind {
            Elementary::Exp => 1,
            Elementary::Sin if t % 2 == 1 => {
                if (t / 2) % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            Elementary::Cos if t % 2 == 0 => {
                if (t / 2) % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            _ => 0,
        };
        if d == 0 {
            continue;
        }
        let mut num = BigInt::from(d);
        let mut den = BigInt::one();
        for v in 0..3 {
            num *= BigInt::from(form[v]).pow(e[v]);
            den *= factorial(e[v]);
        }
        s.add_term(e, BigRational::new(num, den));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exp: Vec<u32>,
    pub left: BigRational,
    pub right: BigRational,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at exponent {:?}: {} vs {}",
            self.exp, self.left, self.right
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl Comparison {
    pub fn equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Coefficientwise equality through total degree `up_to`; the first difference in
/// graded order is reported.
pub fn compare_series(a: &TruncatedSeries, b: &TruncatedSeries, up_to: u32) -> Comparison {
    let vars = a.vars.max(b.vars);
    let mons = monomials(vars, up_to);
    let mut first_mismatch = None;
    for e in &mons {
        let (l, r) = (a.coeff(*e), b.coeff(*e));
        if l != r {
            first_mismatch = Some(Mismatch {
                exp: e[..vars].to_vec(),
                left: l,
                right: r,
            });
            break;
        }
    }
    Comparison {
        compared: mons.len(),
        first_mismatch,
    }
}

// ---------------------------------------------------------------- identities

/// Closed-form generating functions, keyed by their conventional labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    AEvenUpper,
    AEvenLower,
    AOddUpper,
    AOddLower,
    BEvenUpper,
    BEvenLower,
    BOddUpper,
    BOddLower,
    BEvenBottom,
    BOddBottom,
    HbarFull,
    HbarEven,
    HbarOdd,
    EntringerOdd,
    EntringerEven,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::AEvenUpper,
        IdentityId::AEvenLower,
        IdentityId::AOddUpper,
        IdentityId::AOddLower,
        IdentityId::BEvenUpper,
        IdentityId::BEvenLower,
        IdentityId::BOddUpper,
        IdentityId::BOddLower,
        IdentityId::BEvenBottom,
        IdentityId::BOddBottom,
        IdentityId::HbarFull,
        IdentityId::HbarEven,
        IdentityId::HbarOdd,
        IdentityId::EntringerOdd,
        IdentityId::EntringerEven,
    ];

    pub fn label(self) -> &'static str {
        use IdentityId::*;
        match self {
            AEvenUpper => "1.15",
            AEvenLower => "1.16",
            AOddUpper => "1.17",
            AOddLower => "1.18",
            BEvenUpper => "1.19",
            BEvenLower => "1.20",
            BOddUpper => "1.21",
            BOddLower => "1.22",
            BEvenBottom => "1.23",
            BOddBottom => "1.24",
            HbarFull => "7.4",
            HbarEven => "7.5",
            HbarOdd => "7.6",
            EntringerOdd => "7.7",
            EntringerEven => "7.8",
        }
    }

    pub fn vars(self) -> usize {
        use IdentityId::*;
        match self {
            AEvenUpper | AEvenLower | AOddUpper | AOddLower | BEvenUpper | BEvenLower
            | BOddUpper | BOddLower => 3,
            _ => 2,
        }
    }

    /// Largest matrix size (or Entringer row) that contributes at total degree `d`.
    pub fn required_size(self, d: u32) -> usize {
        use IdentityId::*;
        let d = d as usize;
        match self {
            BEvenBottom | BOddBottom => d + 2,
            HbarFull | HbarEven | HbarOdd | EntringerOdd | EntringerEven => d + 1,
            _ => d + 3,
        }
    }

    fn uses_table(self) -> bool {
        use IdentityId::*;
        matches!(
            self,
            HbarFull | HbarEven | HbarOdd | EntringerOdd | EntringerEven
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for IdentityId {
    type Err = SeriesError;
    fn from_str(s: &str) -> Result<Self, SeriesError> {
        IdentityId::ALL
            .into_iter()
            .find(|i| i.label() == s)
            .ok_or_else(|| SeriesError::UnknownId(s.to_string()))
    }
}

struct Builder {
    vars: usize,
    d: u32,
}

impl Builder {
    fn sin(&self, f: [i64; 3]) -> TruncatedSeries {
        elementary_series(Elementary::Sin, f, self.vars, self.d)
    }
    fn cos(&self, f: [i64; 3]) -> TruncatedSeries {
        elementary_series(Elementary::Cos, f, self.vars, self.d)
    }
    fn exp(&self, f: [i64; 3]) -> TruncatedSeries {
        elementary_series(Elementary::Exp, f, self.vars, self.d)
    }
    fn one(&self) -> TruncatedSeries {
        TruncatedSeries::one(self.vars, self.d)
    }
}

const X: [i64; 3] = [1, 0, 0];
const Y: [i64; 3] = [0, 1, 0];
const Z: [i64; 3] = [0, 0, 1];
const XY: [i64; 3] = [1, 1, 0];
const YZ: [i64; 3] = [0, 1, 1];
const S: [i64; 3] = [1, 1, 1];

/// Product of factors over a product of factors.
fn frac(num: &[TruncatedSeries], den: &[TruncatedSeries]) -> Result<TruncatedSeries, SeriesError> {
    let prod = |fs: &[TruncatedSeries]| -> Result<TruncatedSeries, SeriesError> {
        let mut acc = fs[0].clone();
        for f in &fs[1..] {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    };
    prod(num)?.div(&prod(den)?)
}

/// The closed-form side of an identity.
pub fn rhs_series(id: IdentityId, d: u32) -> Result<TruncatedSeries, SeriesError> {
    use IdentityId::*;
    let b = Builder { vars: id.vars(), d };
    let cs = b.cos(S);
    match id {
        AEvenUpper => frac(&[b.cos(X), b.cos(Z), b.sin(S)], &[cs.clone(), cs]),
        AEvenLower => frac(&[b.cos(X), b.sin(Z)], std::slice::from_ref(&cs))?
            .add(&frac(&[b.sin(X), b.cos(XY)], &[cs.clone(), cs])?),
        AOddUpper => frac(&[b.cos(X), b.cos(Z)], &[cs.clone(), cs]),
        AOddLower => frac(&[b.cos(XY), b.cos(YZ)], &[cs.clone(), cs]),
        BEvenUpper => frac(&[b.sin(X), b.cos(Z)], &[cs.clone(), cs]),
        BEvenLower => frac(&[b.cos(XY), b.sin(YZ)], &[cs.clone(), cs]),
        BOddUpper => frac(&[b.sin(X), b.cos(Z), b.sin(S)], &[cs.clone(), cs]),
        BOddLower => frac(&[b.cos(X), b.cos(XY)], &[cs.clone(), cs.clone()])?
            .sub(&frac(&[b.sin(X), b.sin(Z)], &[cs])?),
        BEvenBottom => frac(&[b.cos(X)], &[b.cos(XY)]),
        BOddBottom => frac(&[b.sin(X)], &[b.cos(XY)]),
        EntringerOdd => frac(&[b.cos(Y)], &[b.cos(XY)]),
        EntringerEven => frac(&[b.sin(Y)], &[b.cos(XY)]),
        HbarFull | HbarEven | HbarOdd => {
            let den = b.one().add(&b.exp([2, 2, 0]))?;
            let e2y = b.exp([0, 2, 0]);
            let num = match id {
                HbarFull => b.exp(X).scale(&rat(2)),
                HbarEven => b.exp(X).mul(&b.one().add(&e2y)?)?,
                _ => b.exp(X).mul(&b.one().sub(&e2y)?)?,
            };
            num.div(&den)
        }
    }
}

/// The single-fraction form `(cos x cos z sin s − sin y) / cos² s` of the
/// even-size lower A identity.
pub fn a_even_lower_single_fraction(d: u32) -> Result<TruncatedSeries, SeriesError> {
    let b = Builder { vars: 3, d };
    let cs = b.cos(S);
    let num = b.cos(X).mul(&b.cos(Z))?.mul(&b.sin(S))?.sub(&b.sin(Y))?;
    num.div(&cs.mul(&cs)?)
}

/// Data the finite sums are assembled from.
#[derive(Debug, Clone, Copy)]
pub struct SeriesData<'a> {
    pub twin: &'a [(CountMatrix, CountMatrix)],
    pub table: &'a EntringerTable,
}

fn egf_term(s: &mut TruncatedSeries, e: Exp, v: &BigInt) {
    let den = factorial(e[0]) * factorial(e[1]) * factorial(e[2]);
    s.add_term(e, BigRational::new(v.clone(), den));
}

/// The finite-sum side of an identity, exactly as displayed.
pub fn lhs_series(
    id: IdentityId,
    data: SeriesData<'_>,
    d: u32,
) -> Result<TruncatedSeries, SeriesError> {
    use IdentityId::*;
    let need = id.required_size(d);
    let have = if id.uses_table() {
        data.table.max_n()
    } else {
        data.twin.last().map_or(0, |t| t.0.n)
    };
    if have < need {
        return Err(SeriesError::Depth { need, have });
    }
    let mut s = TruncatedSeries::zero(id.vars(), d);
    match id {
        HbarFull | HbarEven | HbarOdd => {
            let split = match id {
                HbarFull => Split::None,
                HbarEven => Split::Even,
                _ => Split::Odd,
            };
            for ((i, j), v) in build_hbar(data.table, split) {
                egf_term(&mut s, [i as u32, j as u32, 0], &v);
            }
        }
        EntringerOdd | EntringerEven => {
            let odd = id == EntringerOdd;
            for n in (1..=need).filter(|n| (n % 2 == 1) == odd) {
                for k in 1..=n {
                    let (a, b) = ((n - k) as u32, (k - 1) as u32);
                    let e = if odd { [a, b, 0] } else { [b, a, 0] };
                    egf_term(&mut s, e, &data.table.get(n, k));
                }
            }
        }
        BEvenBottom | BOddBottom => {
            let even = id == BEvenBottom;
            for (_, bm) in data
                .twin
                .iter()
                .filter(|t| (t.0.n % 2 == 0) == even && t.0.n <= need)
            {
                let n = bm.n;
                for k in 1..n {
                    let (a, b) = ((n - k - 1) as u32, (k - 1) as u32);
                    let e = if even { [a, b, 0] } else { [b, a, 0] };
                    egf_term(&mut s, e, bm.get(n, k));
                }
            }
        }
        _ => {
            let (use_a, even, upper) = match id {
                AEvenUpper => (true, true, true),
                AEvenLower => (true, true, false),
                AOddUpper => (true, false, true),
                AOddLower => (true, false, false),
                BEvenUpper => (false, true, true),
                BEvenLower => (false, true, false),
                BOddUpper => (false, false, true),
                _ => (false, false, false),
            };
            for (a, b) in data
                .twin
                .iter()
                .filter(|t| (t.0.n % 2 == 0) == even && t.0.n <= need)
            {
                let mat = if use_a { a } else { b };
                let n = mat.n;
                for m in 1..n {
                    for k in 1..n {
                        let e = if upper && m < k {
                            [m - 1, k - m - 1, n - 1 - k]
                        } else if !upper && k < m {
                            [n - 1 - m, m - k - 1, k - 1]
                        } else {
                            continue;
                        };
                        egf_term(&mut s, e.map(|x| x as u32), mat.get(m, k));
                    }
                }
            }
        }
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: String,
    pub degree: u32,
    pub comparison: Comparison,
    /// Present for the triangle identity: the difference-rule check run first.
    pub sts: Option<StsReport>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.comparison.equal() && self.sts.as_ref().is_none_or(|s| s.passed())
    }
}

pub fn verify_identity(
    id: IdentityId,
    d: u32,
    data: SeriesData<'_>,
) -> Result<IdentityReport, SeriesError> {
    let lhs = lhs_series(id, data, d)?;
    let rhs = rhs_series(id, d)?;
    Ok(IdentityReport {
        id: id.label().to_string(),
        degree: d,
        comparison: compare_series(&lhs, &rhs, d),
        sts: None,
    })
}

/// `Σ c_n(m,k) x^{n−k−1}/(n−k−1)! y^{k−m−1}/(k−m−1)! z^m/m!` against `e^x H(x+y, z)`.
///
/// The difference rule is checked and reported alongside the series comparison,
/// so a corrupted triangle still yields a located coefficient.
pub fn verify_triangle_egf(
    triangles: &[SeidelTriangle],
    d: u32,
) -> Result<IdentityReport, SeriesError> {
    let need = d as usize + 2;
    let have = triangles.iter().map(|c| c.n).max().unwrap_or(0);
    if have < need {
        return Err(SeriesError::Depth { need, have });
    }
    let sts = verify_sts(triangles)?;
    let (lhs, rhs) = triangle_egf_sides(triangles, d)?;
    Ok(IdentityReport {
        id: "triangle-egf".into(),
        degree: d,
        comparison: compare_series(&lhs, &rhs, d),
        sts: Some(sts),
    })
}

pub fn triangle_egf_sides(
    triangles: &[SeidelTriangle],
    d: u32,
) -> Result<(TruncatedSeries, TruncatedSeries), SeriesError> {
    let mut lhs = TruncatedSeries::zero(3, d);
    for c in triangles.iter().filter(|c| c.n >= 2 && c.n as u32 <= d + 2) {
        let n = c.n;
        for (m, k, v) in c.cells() {
            egf_term(
                &mut lhs,
                [(n - k - 1) as u32, (k - m - 1) as u32, m as u32],
                v,
            );
        }
    }
    let mut hxy = TruncatedSeries::zero(3, d);
    for ((i, j), v) in extract_h(triangles) {
        if (i + j) as u32 > d {
            continue;
        }
        // (x+y)^i / i! = Σ_{a+b=i} x^a y^b / (a! b!)
        for a in 0..=i {
            egf_term(&mut hxy, [a as u32, (i - a) as u32, j as u32], &v);
        }
    }
    let ex = elementary_series(Elementary::Exp, X, 3, d);
    Ok((lhs, ex.mul(&hxy)?))
}
