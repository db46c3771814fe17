//! Exact sequence algebra: non-periodic autocorrelation, element sums, and
//! the defining checks for base, normal, near-normal and T-sequences.
//!
//! A sequence of length `m` is identified with the polynomial
//! `x_1 + x_2 z + ... + x_m z^(m-1)`. Its norm `X(z) X(1/z)` is a symmetric
//! Laurent polynomial whose coefficient at `z^j` is the non-periodic
//! autocorrelation `N_X(j)`. Only the nonnegative side is stored.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("entry {value} at position {index} is not in the {alphabet} alphabet")]
    BadEntry {
        index: usize,
        value: i8,
        alphabet: &'static str,
    },
    #[error("unexpected character {ch:?} in plaintext sequence")]
    BadChar { ch: char },
    #[error("expected 4 sequences separated by ';', found {0}")]
    FieldCount(usize),
    #[error("sequences A and B (or C and D) differ in length: {0} vs {1}")]
    PairLength(usize, usize),
    #[error("malformed quadruple: {0}")]
    Malformed(String),
}

/// A finite sequence over `{+1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinarySeq(Vec<i8>);

impl BinarySeq {
    pub fn new(entries: Vec<i8>) -> Result<Self, SeqError> {
        check_alphabet(&entries, false)?;
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<i8> {
        self.0
    }

    /// Parses `+`/`-` characters, ignoring whitespace.
    pub fn parse(text: &str) -> Result<Self, SeqError> {
        let v = parse_entries(text)?;
        if let Some(ch) = text.chars().find(|&c| c == '0') {
            return Err(SeqError::BadChar { ch });
        }
        Ok(Self(v))
    }
}

/// A finite sequence over `{-1, 0, +1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernarySeq(Vec<i8>);

impl TernarySeq {
    pub fn new(entries: Vec<i8>) -> Result<Self, SeqError> {
        check_alphabet(&entries, true)?;
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parse(text: &str) -> Result<Self, SeqError> {
        parse_entries(text).map(Self)
    }
}

impl From<BinarySeq> for TernarySeq {
    fn from(b: BinarySeq) -> Self {
        Self(b.0)
    }
}

fn check_alphabet(entries: &[i8], allow_zero: bool) -> Result<(), SeqError> {
    for (index, &value) in entries.iter().enumerate() {
        let ok = value == 1 || value == -1 || (allow_zero && value == 0);
        if !ok {
            return Err(SeqError::BadEntry {
                index,
                value,
                alphabet: if allow_zero { "ternary" } else { "binary" },
            });
        }
    }
    Ok(())
}

fn parse_entries(text: &str) -> Result<Vec<i8>, SeqError> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|ch| match ch {
            '+' => Ok(1),
            '-' => Ok(-1),
            '0' => Ok(0),
            _ => Err(SeqError::BadChar { ch }),
        })
        .collect()
}

/// Renders entries as `+`, `-`, `0`.
pub fn to_plaintext(entries: &[i8]) -> String {
    entries
        .iter()
        .map(|&x| match x {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

/// Non-periodic autocorrelation values for lags `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LagProfile {
    values: Vec<i32>,
    len: usize,
}

impl LagProfile {
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// Length of the source sequence.
    pub fn source_len(&self) -> usize {
        self.len
    }

    /// `N_X(j)`, zero beyond the last lag.
    pub fn at(&self, lag: usize) -> i32 {
        self.values.get(lag).copied().unwrap_or(0)
    }
}

/// Computes `N_X(j) = sum_i x_i x_(i+j)` for `j = 0..len`.
///
/// The empty sequence yields `[0]`.
pub fn npaf(x: &[i8]) -> LagProfile {
    let n = x.len();
    let values = if n == 0 {
        vec![0]
    } else {
        (0..n)
            .map(|j| x[..n - j].iter().zip(&x[j..]).map(|(&p, &q)| p as i32 * q as i32).sum())
            .collect()
    };
    LagProfile { values, len: n }
}

pub fn sequence_sum(x: &[i8]) -> i64 {
    x.iter().map(|&v| v as i64).sum()
}

/// Element sums `(a, b, c, d)` of a quadruple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SumsVector {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl SumsVector {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a, b, c, d }
    }

    pub fn square_sum(&self) -> i64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }
}

impl fmt::Display for SumsVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

/// Evaluates the base-sequence identity at `z = 1`: `a^2+b^2+c^2+d^2 = 2(m+n)`.
pub fn sum_of_squares_check(m: usize, n: usize, s: &SumsVector) -> bool {
    s.square_sum() == 2 * (m + n) as i64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum QuadKind {
    /// Base sequences BS(m, n).
    Bs,
    /// Normal sequences NS(n).
    Ns,
    /// Near-normal sequences NN(n).
    Nn,
    /// T-sequences TS(n).
    Ts,
}

impl QuadKind {
    pub fn tag(self) -> &'static str {
        match self {
            QuadKind::Bs => "BS",
            QuadKind::Ns => "NS",
            QuadKind::Nn => "NN",
            QuadKind::Ts => "TS",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag.to_ascii_uppercase().as_str() {
            "BS" => Some(QuadKind::Bs),
            "NS" => Some(QuadKind::Ns),
            "NN" => Some(QuadKind::Nn),
            "TS" => Some(QuadKind::Ts),
            _ => None,
        }
    }

    pub fn is_binary(self) -> bool {
        self != QuadKind::Ts
    }
}

impl fmt::Display for QuadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A quadruple `(A; B; C; D)` with a declared kind.
///
/// Construction checks the alphabet and that `A`/`B` and `C`/`D` have equal
/// lengths. Kind-specific shape requirements (`m = n + 1`, equal lengths
/// for T-sequences) are reported by [`verify_quadruple`] as malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeqQuadruple {
    kind: QuadKind,
    seqs: [Vec<i8>; 4],
}

impl SeqQuadruple {
    pub fn new(kind: QuadKind, a: Vec<i8>, b: Vec<i8>, c: Vec<i8>, d: Vec<i8>) -> Result<Self, SeqError> {
        for s in [&a, &b, &c, &d] {
            check_alphabet(s, !kind.is_binary())?;
        }
        if a.len() != b.len() {
            return Err(SeqError::PairLength(a.len(), b.len()));
        }
        if c.len() != d.len() {
            return Err(SeqError::PairLength(c.len(), d.len()));
        }
        Ok(Self {
            kind,
            seqs: [a, b, c, d],
        })
    }

    pub fn from_binary(
        kind: QuadKind,
        a: BinarySeq,
        b: BinarySeq,
        c: BinarySeq,
        d: BinarySeq,
    ) -> Result<Self, SeqError> {
        Self::new(kind, a.0, b.0, c.0, d.0)
    }

    /// Parses `"A;B;C;D"` plaintext.
    pub fn parse(kind: QuadKind, text: &str) -> Result<Self, SeqError> {
        let fields: Vec<&str> = text.split(';').collect();
        if fields.len() != 4 {
            return Err(SeqError::FieldCount(fields.len()));
        }
        let mut parsed = Vec::with_capacity(4);
        for f in fields {
            let v = parse_entries(f)?;
            check_alphabet(&v, !kind.is_binary())?;
            parsed.push(v);
        }
        let d = parsed.pop().unwrap();
        let c = parsed.pop().unwrap();
        let b = parsed.pop().unwrap();
        let a = parsed.pop().unwrap();
        Self::new(kind, a, b, c, d)
    }

    pub fn kind(&self) -> QuadKind {
        self.kind
    }

    /// Same sequences under a different declared kind.
    pub fn with_kind(&self, kind: QuadKind) -> Result<Self, SeqError> {
        let [a, b, c, d] = self.seqs.clone();
        Self::new(kind, a, b, c, d)
    }

    pub fn a(&self) -> &[i8] {
        &self.seqs[0]
    }
    pub fn b(&self) -> &[i8] {
        &self.seqs[1]
    }
    pub fn c(&self) -> &[i8] {
        &self.seqs[2]
    }
    pub fn d(&self) -> &[i8] {
        &self.seqs[3]
    }

    pub fn seqs(&self) -> &[Vec<i8>; 4] {
        &self.seqs
    }

    pub(crate) fn into_seqs(self) -> [Vec<i8>; 4] {
        self.seqs
    }

    /// `(m, n)`: length of A/B and of C/D.
    pub fn shape(&self) -> (usize, usize) {
        (self.seqs[0].len(), self.seqs[2].len())
    }

    pub fn sums(&self) -> SumsVector {
        SumsVector::new(
            sequence_sum(self.a()),
            sequence_sum(self.b()),
            sequence_sum(self.c()),
            sequence_sum(self.d()),
        )
    }

    pub fn plaintext(&self) -> String {
        self.seqs.iter().map(|s| to_plaintext(s)).collect::<Vec<_>>().join(";")
    }

    /// Sum of the four lag profiles; index `j` runs over `0..=max(m, n)`.
    pub fn lag_sums(&self) -> Vec<i32> {
        let (m, n) = self.shape();
        let top = m.max(n).max(1);
        let profiles: Vec<LagProfile> = self.seqs.iter().map(|s| npaf(s)).collect();
        (0..top).map(|j| profiles.iter().map(|p| p.at(j)).sum()).collect()
    }
}

impl fmt::Display for SeqQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plaintext())
    }
}

/// The first violated condition found by a verifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Failure {
    /// Positive-lag sum `N_A(j)+N_B(j)+N_C(j)+N_D(j)` is nonzero.
    Lag { lag: usize, value: i32 },
    /// `a_i != b_i` for a normal quadruple (1-based index).
    Normality { index: usize },
    /// `a_i != (-1)^(i-1) b_i` for a near-normal quadruple (1-based index).
    NearNormality { index: usize },
    /// Position (1-based) where the number of nonzero entries is not one.
    Support { index: usize, nonzero: usize },
    /// Orthogonal-design cell whose quadratic form differs from the target.
    Cell {
        row: usize,
        col: usize,
        monomial: (usize, usize),
        got: i64,
        expected: i64,
    },
    /// `H H^T` differs from `order * I`.
    Gram {
        row: usize,
        col: usize,
        got: i64,
        expected: i64,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Lag { lag, value } => write!(f, "lag {lag} sums to {value}"),
            Failure::Normality { index } => write!(f, "a_{index} != b_{index}"),
            Failure::NearNormality { index } => {
                write!(f, "a_{index} != (-1)^({index}-1) b_{index}")
            }
            Failure::Support { index, nonzero } => {
                write!(f, "position {index} has {nonzero} nonzero entries")
            }
            Failure::Cell {
                row,
                col,
                monomial,
                got,
                expected,
            } => write!(
                f,
                "cell ({row},{col}) monomial x{}x{}: coefficient {got}, expected {expected}",
                monomial.0, monomial.1
            ),
            Failure::Gram {
                row,
                col,
                got,
                expected,
            } => write!(f, "HH^T[{row}][{col}] = {got}, expected {expected}"),
        }
    }
}

/// Outcome of a verifier: pass, or the first failing condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub failure: Option<Failure>,
}

impl VerificationReport {
    pub fn pass() -> Self {
        Self { failure: None }
    }

    pub fn fail(failure: Failure) -> Self {
        Self { failure: Some(failure) }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("pass"),
            Some(e) => write!(f, "fail: {e}"),
        }
    }
}

/// Checks `q` against the defining conditions of its declared kind.
///
/// Returns `Err` when the shape does not fit the kind at all; a quadruple
/// that has the right shape but violates the defining equations yields
/// `Ok` with a failing report.
pub fn verify_quadruple(q: &SeqQuadruple) -> Result<VerificationReport, SeqError> {
    let (m, n) = q.shape();
    match q.kind {
        QuadKind::Ns | QuadKind::Nn if m != n + 1 => {
            return Err(SeqError::Malformed(format!(
                "{} requires len(A) = len(C) + 1, got ({m}, {n})",
                q.kind
            )))
        }
        QuadKind::Ts if m != n => {
            return Err(SeqError::Malformed(format!(
                "TS requires four sequences of equal length, got ({m}, {n})"
            )))
        }
        _ => {}
    }

    match q.kind {
        QuadKind::Ns => {
            if let Some(i) = (0..n).find(|&i| q.a()[i] != q.b()[i]) {
                return Ok(VerificationReport::fail(Failure::Normality { index: i + 1 }));
            }
        }
        QuadKind::Nn => {
            // 0-based i: a_i = (-1)^i b_i
            if let Some(i) = (0..n).find(|&i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                q.a()[i] != sign * q.b()[i]
            }) {
                return Ok(VerificationReport::fail(Failure::NearNormality { index: i + 1 }));
            }
        }
        QuadKind::Ts => {
            for i in 0..n {
                let nonzero = q.seqs.iter().filter(|s| s[i] != 0).count();
                if nonzero != 1 {
                    return Ok(VerificationReport::fail(Failure::Support { index: i + 1, nonzero }));
                }
            }
        }
        QuadKind::Bs => {}
    }

    let sums = q.lag_sums();
    if let Some((lag, &value)) = sums.iter().enumerate().skip(1).find(|(_, &v)| v != 0) {
        return Ok(VerificationReport::fail(Failure::Lag { lag, value }));
    }
    Ok(VerificationReport::pass())
}
