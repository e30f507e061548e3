//! Words of distinct positive integers, reductions, and the André / alternating
//! recognizers.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

/// Up to this size `enumerate` filters all of `S_n`; above it, words are generated.
pub const BRUTE_FORCE_CUTOFF: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("duplicate letter {0}")]
    Duplicate(u32),
    #[error("invalid token {0:?}: letters are positive integers")]
    BadToken(String),
    #[error("letter {0} does not occur in the word")]
    MissingLetter(u32),
    #[error("pattern of length {pattern} does not fit a ground set of size {ground}")]
    SizeMismatch { pattern: usize, ground: usize },
    #[error("expected a permutation of 1..{0}")]
    NotStandard(usize),
}

/// A word `x_1 … x_n` of pairwise distinct positive integers.
///
/// Ordering is lexicographic on the letters, which is the enumeration order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn new(letters: Vec<u32>) -> Result<Self, PermError> {
        let mut seen = BTreeSet::new();
        for &x in &letters {
            if x == 0 {
                return Err(PermError::BadToken("0".into()));
            }
            if !seen.insert(x) {
                return Err(PermError::Duplicate(x));
            }
        }
        Ok(Perm(letters))
    }

    /// Callers guarantee distinct positive letters.
    pub(crate) fn raw(letters: Vec<u32>) -> Self {
        debug_assert!(Perm::new(letters.clone()).is_ok());
        Perm(letters)
    }

    /// Compact form for single-digit words, e.g. `"2314"`.
    pub fn from_digits(s: &str) -> Result<Self, PermError> {
        let letters = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .ok_or_else(|| PermError::BadToken(c.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Perm::new(letters)
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn ground_set(&self) -> Vec<u32> {
        let mut g = self.0.clone();
        g.sort_unstable();
        g
    }

    /// True when the ground set is exactly `{1, …, n}`.
    pub fn is_standard(&self) -> bool {
        let n = self.0.len() as u32;
        self.0.iter().all(|&x| x <= n)
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    pub fn min_letter(&self) -> Option<u32> {
        self.0.iter().copied().min()
    }

    pub fn position(&self, x: u32) -> Option<usize> {
        self.0.iter().position(|&y| y == x)
    }

    /// Compact rendering without separators; only unambiguous below 10.
    pub fn compact(&self) -> String {
        if self.0.is_empty() {
            return "e".into();
        }
        if self.0.iter().all(|&x| x < 10) {
            self.0.iter().map(|x| x.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl Deref for Perm {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

impl FromStr for Perm {
    type Err = PermError;

    /// Whitespace-separated decimal tokens; the empty string and `e` are the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "e" {
            return Ok(Perm::default());
        }
        let letters = s
            .split_whitespace()
            .map(|t| {
                if !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(PermError::BadToken(t.into()));
                }
                match t.parse::<u32>() {
                    Ok(x) if x > 0 => Ok(x),
                    _ => Err(PermError::BadToken(t.into())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Perm::new(letters)
    }
}

impl TryFrom<Vec<u32>> for Perm {
    type Error = PermError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Perm::new(v)
    }
}

pub fn parse_permutation(text: &str) -> Result<Perm, PermError> {
    text.parse()
}

/// `ρ_Y`: the pattern of `w` over `{1..n}` together with the ground set `Y`.
pub fn reduce(w: &[u32]) -> (Perm, Vec<u32>) {
    let mut ground = w.to_vec();
    ground.sort_unstable();
    (Perm(reduce_with(w, &ground)), ground)
}

pub(crate) fn reduce_with(w: &[u32], ground: &[u32]) -> Vec<u32> {
    w.iter()
        .map(|x| ground.binary_search(x).expect("letter in ground set") as u32 + 1)
        .collect()
}

pub(crate) fn reduced(w: &[u32]) -> Vec<u32> {
    let mut ground = w.to_vec();
    ground.sort_unstable();
    reduce_with(w, &ground)
}

/// `ρ_Y⁻¹`, applied letterwise.
pub fn unreduce(pattern: &[u32], ground: &[u32]) -> Result<Perm, PermError> {
    if pattern.len() != ground.len() {
        return Err(PermError::SizeMismatch {
            pattern: pattern.len(),
            ground: ground.len(),
        });
    }
    if !Perm::raw_is_standard(pattern) {
        return Err(PermError::NotStandard(pattern.len()));
    }
    let mut g = ground.to_vec();
    g.sort_unstable();
    Perm::new(pattern.iter().map(|&i| g[i as usize - 1]).collect())
}

pub(crate) fn unreduce_raw(pattern: &[u32], ground: &[u32]) -> Vec<u32> {
    pattern.iter().map(|&i| ground[i as usize - 1]).collect()
}

impl Perm {
    fn raw_is_standard(p: &[u32]) -> bool {
        let n = p.len();
        let mut seen = vec![false; n + 1];
        p.iter().all(|&x| {
            let x = x as usize;
            x >= 1 && x <= n && !std::mem::replace(&mut seen[x], true)
        })
    }
}

/// `i ↦ n+1−i` on a permutation of `{1..n}`.
pub fn complement(w: &[u32]) -> Result<Perm, PermError> {
    if !Perm::raw_is_standard(w) {
        return Err(PermError::NotStandard(w.len()));
    }
    Ok(Perm(complement_raw(w)))
}

pub(crate) fn complement_raw(w: &[u32]) -> Vec<u32> {
    let n1 = w.len() as u32 + 1;
    w.iter().map(|&x| n1 - x).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XFactorization {
    pub w1: Perm,
    pub w2: Perm,
    pub x: u32,
    pub w4: Perm,
    pub w5: Perm,
}

fn x_bounds(w: &[u32], x: u32) -> Result<(usize, usize, usize), PermError> {
    let p = w
        .iter()
        .position(|&y| y == x)
        .ok_or(PermError::MissingLetter(x))?;
    let mut lo = p;
    while lo > 0 && w[lo - 1] > x {
        lo -= 1;
    }
    let mut hi = p + 1;
    while hi < w.len() && w[hi] > x {
        hi += 1;
    }
    Ok((lo, p, hi))
}

pub fn x_factorization(w: &[u32], x: u32) -> Result<XFactorization, PermError> {
    let (lo, p, hi) = x_bounds(w, x)?;
    Ok(XFactorization {
        w1: Perm(w[..lo].to_vec()),
        w2: Perm(w[lo..p].to_vec()),
        x,
        w4: Perm(w[p + 1..hi].to_vec()),
        w5: Perm(w[hi..].to_vec()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LetterType {
    TypeI,
    TypeII,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    I,
    II,
}

/// Labels of `x` in `w`. `Both` is returned alone, when `w2` and `w4` are empty.
pub fn letter_type(w: &[u32], x: u32) -> Result<BTreeSet<LetterType>, PermError> {
    let (lo, p, hi) = x_bounds(w, x)?;
    let mut out = BTreeSet::new();
    if lo == p && hi == p + 1 {
        out.insert(LetterType::Both);
        return Ok(out);
    }
    if has_type(w, lo, p, hi, Kind::I) {
        out.insert(LetterType::TypeI);
    }
    if has_type(w, lo, p, hi, Kind::II) {
        out.insert(LetterType::TypeII);
    }
    Ok(out)
}

// w2 = w[lo..p], w4 = w[p+1..hi]
fn has_type(w: &[u32], lo: usize, p: usize, hi: usize, kind: Kind) -> bool {
    let w2 = &w[lo..p];
    let w4 = &w[p + 1..hi];
    if w4.is_empty() {
        return w2.is_empty();
    }
    match kind {
        Kind::I => w4.iter().max() > w2.iter().max(),
        Kind::II => w2
            .iter()
            .min()
            .is_none_or(|m2| w4.iter().min().unwrap() < m2),
    }
}

fn letter_has_type(w: &[u32], p: usize, kind: Kind) -> bool {
    let (lo, _, hi) = x_bounds(w, w[p]).expect("letter present");
    has_type(w, lo, p, hi, kind)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Recursive,
    Factorization,
    Trough,
}

pub fn is_andre(w: &[u32], kind: Kind, method: Method) -> bool {
    match method {
        Method::Recursive => andre_recursive(w, kind),
        Method::Factorization => (0..w.len()).all(|p| letter_has_type(w, p, kind)),
        Method::Trough => andre_trough(w, kind),
    }
}

fn andre_recursive(w: &[u32], kind: Kind) -> bool {
    if w.len() <= 1 {
        return true;
    }
    let p = argmin(w);
    let (v, vp) = (&w[..p], &w[p + 1..]);
    if vp.is_empty() {
        return false;
    }
    let ok = match kind {
        Kind::I => vp.iter().max() > v.iter().max(),
        Kind::II => v.iter().min().is_none_or(|m| vp.iter().min().unwrap() < m),
    };
    ok && andre_recursive(v, kind) && andre_recursive(vp, kind)
}

fn andre_trough(w: &[u32], kind: Kind) -> bool {
    let n = w.len();
    // x_0 = x_{n+1} = 0: the first letter is never a trough or a double descent.
    for i in 1..n {
        let right = if i + 1 < n { w[i + 1] } else { 0 };
        if w[i - 1] > w[i] {
            if w[i] > right {
                return false;
            }
            if !letter_has_type(w, i, kind) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn argmin(w: &[u32]) -> usize {
    let mut p = 0;
    for i in 1..w.len() {
        if w[i] < w[p] {
            p = i;
        }
    }
    p
}

pub(crate) fn argmax(w: &[u32]) -> usize {
    let mut p = 0;
    for i in 1..w.len() {
        if w[i] > w[p] {
            p = i;
        }
    }
    p
}

pub fn is_andre_i(w: &[u32]) -> bool {
    andre_trough(w, Kind::I)
}

pub fn is_andre_ii(w: &[u32]) -> bool {
    andre_trough(w, Kind::II)
}

/// `x_1 < x_2 > x_3 < x_4 …`; vacuously true below two letters.
pub fn is_alternating(w: &[u32]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| (i % 2 == 0) == (p[0] < p[1]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Andre1,
    Andre2,
    Alt,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Andre1, Family::Andre2, Family::Alt];

    pub fn name(self) -> &'static str {
        match self {
            Family::Andre1 => "andre1",
            Family::Andre2 => "andre2",
            Family::Alt => "alt",
        }
    }

    pub fn contains(self, w: &[u32]) -> bool {
        match self {
            Family::Andre1 => is_andre_i(w),
            Family::Andre2 => is_andre_ii(w),
            Family::Alt => is_alternating(w),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "andre1" => Ok(Family::Andre1),
            "andre2" => Ok(Family::Andre2),
            "alt" => Ok(Family::Alt),
            _ => Err(format!("unknown family {s:?} (andre1, andre2, alt)")),
        }
    }
}

/// In-place lexicographic successor; false once the last permutation is reached.
pub fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Every member of the family over `{1..n}`, by filtering all of `S_n`.
pub fn brute_force(family: Family, n: usize) -> Vec<Perm> {
    let mut a: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    loop {
        if family.contains(&a) {
            out.push(Perm(a.clone()));
        }
        if !next_permutation(&mut a) {
            break;
        }
    }
    out
}

/// Fixed-width block of words; `u8` letters keep generation at n = 11 compact.
#[derive(Debug, Clone, Default)]
pub struct WordBlock {
    width: usize,
    data: Vec<u8>,
    count: usize,
}

impl WordBlock {
    fn new(width: usize) -> Self {
        WordBlock {
            width,
            data: Vec::new(),
            count: 0,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn get(&self, i: usize) -> &[u8] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.count).map(move |i| self.get(i))
    }

    fn push_empty(&mut self) {
        self.count += 1;
    }

    fn sort(&mut self) {
        if self.width == 0 {
            return;
        }
        let mut idx: Vec<usize> = (0..self.count).collect();
        idx.sort_unstable_by(|&a, &b| self.get(a).cmp(self.get(b)));
        let mut data = Vec::with_capacity(self.data.len());
        for i in idx {
            data.extend_from_slice(self.get(i));
        }
        self.data = data;
    }

    pub fn to_perms(&self) -> Vec<Perm> {
        self.iter()
            .map(|w| Perm(w.iter().map(|&x| x as u32).collect()))
            .collect()
    }
}

/// Recursive generation, sorted lexicographically.
///
/// André words split as `v · 1 · v′` with both factors André over their own
/// letters; kind I needs `n ∈ v′`, kind II needs `2 ∈ v′`. Alternating words place
/// `n` at an even position `2j`, with an odd-length alternating word on its left.
pub fn generate(family: Family, n: usize) -> WordBlock {
    assert!(n < 256, "generation is limited to n < 256");
    let mut memo: Vec<WordBlock> = Vec::with_capacity(n + 1);
    for size in 0..=n {
        let block = match size {
            0 => {
                let mut b = WordBlock::new(0);
                b.push_empty();
                b
            }
            1 => WordBlock {
                width: 1,
                data: vec![1],
                count: 1,
            },
            _ => match family {
                Family::Alt => gen_alt_step(size, &memo),
                _ => gen_andre_step(size, family, &memo),
            },
        };
        memo.push(block);
    }
    let mut out = memo.pop().unwrap();
    out.sort();
    out
}

fn gen_andre_step(n: usize, family: Family, memo: &[WordBlock]) -> WordBlock {
    let mut out = WordBlock::new(n);
    // Letters 2..=n; bit b of `mask` puts letter b+2 into the left factor.
    let rest: Vec<u8> = (2..=n as u8).collect();
    let required = match family {
        Family::Andre1 => n as u8,
        _ => 2,
    };
    for mask in 0u32..(1 << (n - 1)) {
        let left: Vec<u8> = rest
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        if left.contains(&required) {
            continue;
        }
        let right: Vec<u8> = rest
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 0)
            .map(|(_, &x)| x)
            .collect();
        splice(
            &mut out,
            &memo[left.len()],
            &left,
            1,
            &memo[right.len()],
            &right,
        );
    }
    out
}

fn gen_alt_step(n: usize, memo: &[WordBlock]) -> WordBlock {
    let mut out = WordBlock::new(n);
    let rest: Vec<u8> = (1..n as u8).collect();
    for mask in 0u32..(1 << (n - 1)) {
        let k = mask.count_ones() as usize;
        if k % 2 == 0 {
            continue;
        }
        let left: Vec<u8> = rest
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let right: Vec<u8> = rest
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 0)
            .map(|(_, &x)| x)
            .collect();
        splice(
            &mut out,
            &memo[k],
            &left,
            n as u8,
            &memo[right.len()],
            &right,
        );
    }
    out
}

fn splice(out: &mut WordBlock, lp: &WordBlock, lg: &[u8], mid: u8, rp: &WordBlock, rg: &[u8]) {
    for a in lp.iter() {
        for b in rp.iter() {
            out.data.extend(a.iter().map(|&i| lg[i as usize - 1]));
            out.data.push(mid);
            out.data.extend(b.iter().map(|&i| rg[i as usize - 1]));
            out.count += 1;
        }
    }
}

/// All members of the family over `{1..n}` in lexicographic order.
pub fn enumerate(family: Family, n: usize) -> Vec<Perm> {
    if n <= BRUTE_FORCE_CUTOFF {
        brute_force(family, n)
    } else {
        generate(family, n).to_perms()
    }
}
