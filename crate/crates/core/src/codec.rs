//! Compact digit encoding of sequence pairs.
//!
//! A pair `(X, Y)` of equal-length binary sequences is folded from both
//! ends: digit `k` packs the column `(x_k, y_k)` together with its mirror
//! column `(x_(L+1-k), y_(L+1-k))`. Odd lengths end with one extra digit for
//! the central column. `AB` codes carry the two long sequences of a
//! `BS(n+1, n)` quadruple (length `n + 1`), `CD` codes the short ones.

use std::fmt;

use thiserror::Error;

use crate::seqcore::{QuadKind, SeqError, SeqQuadruple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("unknown digit {digit:?} at position {position}")]
    UnknownDigit { digit: char, position: usize },
    #[error("{kind} code for order {order} needs {expected} digits, got {got}")]
    Length {
        kind: PairKind,
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("pair lengths {0} and {1} differ")]
    Unequal(usize, usize),
    #[error("column {position} quad {quad:?} has no digit")]
    Unencodable { position: usize, quad: [i8; 4] },
    #[error("central column {column:?} has no digit")]
    UnencodableCentral { column: [i8; 2] },
    #[error("malformed record: {0}")]
    Record(String),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// Two sequences of length `n + 1`.
    Ab,
    /// Two sequences of length `n`.
    Cd,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::Ab => "AB",
            PairKind::Cd => "CD",
        })
    }
}

impl PairKind {
    pub fn seq_len(self, order: usize) -> usize {
        match self {
            PairKind::Ab => order + 1,
            PairKind::Cd => order,
        }
    }
}

/// Digit string plus the pair kind and order it is read against.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadCode {
    pub digits: String,
    pub pair_kind: PairKind,
    pub order: usize,
}

impl QuadCode {
    pub fn new(digits: impl Into<String>, pair_kind: PairKind, order: usize) -> Self {
        Self {
            digits: digits.into(),
            pair_kind,
            order,
        }
    }

    /// Number of digits a code of this kind and order must have.
    pub fn expected_len(pair_kind: PairKind, order: usize) -> usize {
        let len = pair_kind.seq_len(order);
        len / 2 + len % 2
    }
}

impl fmt::Display for QuadCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits)
    }
}

/// `(x_k, y_k, x_mirror, y_mirror)` for digits `'0'..='8'`.
pub const QUAD_TABLE: [[i8; 4]; 9] = [
    [1, 1, 1, -1],
    [1, 1, 1, 1],
    [1, -1, 1, -1],
    [-1, -1, 1, 1],
    [1, -1, -1, 1],
    [-1, 1, 1, -1],
    [1, 1, -1, -1],
    [-1, 1, -1, 1],
    [-1, -1, -1, -1],
];

/// `(x, y)` of the central column for digits `'0'..='3'`.
pub const CENTRAL_TABLE: [[i8; 2]; 4] = [[1, 1], [1, -1], [-1, 1], [-1, -1]];

fn digit_value(ch: char, position: usize, limit: usize) -> Result<usize, CodecError> {
    match ch.to_digit(10) {
        Some(d) if (d as usize) < limit => Ok(d as usize),
        _ => Err(CodecError::UnknownDigit { digit: ch, position }),
    }
}

pub fn decode_pair(code: &QuadCode) -> Result<(Vec<i8>, Vec<i8>), CodecError> {
    decode_with_tables(code, &QUAD_TABLE, &CENTRAL_TABLE)
}

/// Decoding against arbitrary tables; used to test alternative central
/// assignments.
pub fn decode_with_tables(
    code: &QuadCode,
    quads: &[[i8; 4]],
    central: &[[i8; 2]],
) -> Result<(Vec<i8>, Vec<i8>), CodecError> {
    let len = code.pair_kind.seq_len(code.order);
    let expected = QuadCode::expected_len(code.pair_kind, code.order);
    let digits: Vec<char> = code.digits.chars().collect();
    if digits.len() != expected {
        return Err(CodecError::Length {
            kind: code.pair_kind,
            order: code.order,
            expected,
            got: digits.len(),
        });
    }
    let mut x = vec![0i8; len];
    let mut y = vec![0i8; len];
    let half = len / 2;
    for k in 0..half {
        let q = quads[digit_value(digits[k], k, quads.len())?];
        x[k] = q[0];
        y[k] = q[1];
        x[len - 1 - k] = q[2];
        y[len - 1 - k] = q[3];
    }
    if len % 2 == 1 {
        let c = central[digit_value(digits[half], half, central.len())?];
        x[half] = c[0];
        y[half] = c[1];
    }
    Ok((x, y))
}

pub fn encode_pair(x: &[i8], y: &[i8], pair_kind: PairKind) -> Result<QuadCode, CodecError> {
    if x.len() != y.len() {
        return Err(CodecError::Unequal(x.len(), y.len()));
    }
    let len = x.len();
    let order = match pair_kind {
        PairKind::Ab => len
            .checked_sub(1)
            .ok_or_else(|| CodecError::Record("AB pair must have length at least 1".into()))?,
        PairKind::Cd => len,
    };
    let mut digits = String::with_capacity(len / 2 + 1);
    for k in 0..len / 2 {
        let quad = [x[k], y[k], x[len - 1 - k], y[len - 1 - k]];
        let d = QUAD_TABLE
            .iter()
            .position(|q| *q == quad)
            .ok_or(CodecError::Unencodable { position: k + 1, quad })?;
        digits.push(char::from(b'0' + d as u8));
    }
    if len % 2 == 1 {
        let column = [x[len / 2], y[len / 2]];
        let d = CENTRAL_TABLE
            .iter()
            .position(|c| *c == column)
            .ok_or(CodecError::UnencodableCentral { column })?;
        digits.push(char::from(b'0' + d as u8));
    }
    Ok(QuadCode::new(digits, pair_kind, order))
}

/// Decodes an `AB`/`CD` code pair of order `n` into a quadruple.
pub fn decode_quadruple(kind: QuadKind, order: usize, ab: &str, cd: &str) -> Result<SeqQuadruple, CodecError> {
    let (a, b) = decode_pair(&QuadCode::new(ab, PairKind::Ab, order))?;
    let (c, d) = decode_pair(&QuadCode::new(cd, PairKind::Cd, order))?;
    Ok(SeqQuadruple::new(kind, a, b, c, d)?)
}

/// Encodes a `BS(n+1, n)`-shaped quadruple as `(AB code, CD code)`.
pub fn encode_quadruple(q: &SeqQuadruple) -> Result<(QuadCode, QuadCode), CodecError> {
    let (m, n) = q.shape();
    if m != n + 1 {
        return Err(CodecError::Record(format!(
            "digit codes need shape (n+1, n), got ({m}, {n})"
        )));
    }
    Ok((
        encode_pair(q.a(), q.b(), PairKind::Ab)?,
        encode_pair(q.c(), q.d(), PairKind::Cd)?,
    ))
}

/// Parses a record line.
///
/// Accepted forms:
/// - `KIND n AB-code CD-code`, e.g. `NN 36 0764841234846532153 165154775335162126`
/// - `KIND n A;B;C;D` with plaintext sequences (`n` is the length of C)
///
/// Kind tags are case-insensitive. The result is not verified.
pub fn parse_record(line: &str) -> Result<SeqQuadruple, CodecError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() < 3 {
        return Err(CodecError::Record(format!("too few fields in {line:?}")));
    }
    let kind =
        QuadKind::from_tag(fields[0]).ok_or_else(|| CodecError::Record(format!("unknown kind {:?}", fields[0])))?;
    let order: usize = fields[1]
        .parse()
        .map_err(|_| CodecError::Record(format!("bad order {:?}", fields[1])))?;

    let rest = &fields[2..];
    let is_code = rest.len() == 2 && rest.iter().all(|f| f.chars().all(|c| c.is_ascii_digit()));
    let q = if is_code {
        decode_quadruple(kind, order, rest[0], rest[1])?
    } else {
        // plaintext may have been split on whitespace
        let joined: String = rest.concat();
        SeqQuadruple::parse(kind, &joined)?
    };
    if q.shape().1 != order {
        return Err(CodecError::Record(format!(
            "declared order {order} but C has length {}",
            q.shape().1
        )));
    }
    Ok(q)
}

/// Formats a record line, using digit codes when the quadruple has shape
/// `(n+1, n)` and is encodable, plaintext otherwise.
pub fn format_record(q: &SeqQuadruple) -> String {
    let n = q.shape().1;
    match encode_quadruple(q) {
        Ok((ab, cd)) if q.kind().is_binary() && n > 0 => format!("{} {n} {ab} {cd}", q.kind()),
        _ => format!("{} {n} {}", q.kind(), q.plaintext()),
    }
}
