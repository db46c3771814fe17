//! Known results: published near-normal witnesses, existence status by
//! order, Yang numbers, and a plain-text archive for witnesses.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::codec::{format_record, parse_record, CodecError};
use crate::construct::is_golay_number;
use crate::seqcore::{verify_quadruple, QuadKind, SeqQuadruple, SumsVector};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: CodecError },
    #[error("line {line}: record {record:?} fails verification: {reason}")]
    Verification {
        line: usize,
        record: String,
        reason: String,
    },
    #[error("record is not encodable: {0}")]
    Encode(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StatusKind {
    Ns,
    Nn,
    /// `BS(n+1, n)`.
    BaseShifted,
}

impl fmt::Display for StatusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StatusKind::Ns => "NS",
            StatusKind::Nn => "NN",
            StatusKind::BaseShifted => "BS(n+1,n)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Existence {
    NonEmpty,
    Empty,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnownStatus {
    pub kind: StatusKind,
    pub order: usize,
    pub status: Existence,
    pub provenance: &'static str,
    /// Whether an embedded record witnesses a `NonEmpty` status.
    pub witnessed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRecord {
    pub quad: SeqQuadruple,
    /// Digit codes `(AB, CD)`, when the record came from or fits the digit format.
    pub codes: Option<(String, String)>,
    pub sums: SumsVector,
    pub provenance: String,
}

impl WitnessRecord {
    pub fn from_quad(quad: SeqQuadruple, provenance: impl Into<String>) -> Self {
        let codes = crate::codec::encode_quadruple(&quad)
            .ok()
            .filter(|_| quad.shape().1 > 0)
            .map(|(ab, cd)| (ab.digits, cd.digits));
        Self {
            sums: quad.sums(),
            quad,
            codes,
            provenance: provenance.into(),
        }
    }

    pub fn record_line(&self) -> String {
        format_record(&self.quad)
    }
}

/// Encoded NN rows `(order, AB, CD, sums)`.
pub const TABLE1: [(usize, &str, &str, [i64; 4]); 6] = [
    (34, "076417646512321462", "16738541372344337", [7, 7, -2, 6]),
    (34, "076535878535141762", "17677852174231455", [-5, 7, 0, 8]),
    (34, "076782178767646231", "17621532262576812", [-5, 3, 10, -2]),
    (34, "058214353712141461", "11868756376664254", [11, 3, -2, 2]),
    (34, "053765656464871261", "17765746348615187", [1, 1, -6, 10]),
    (36, "0764841234846532153", "165154775335162126", [3, -3, 8, 8]),
];

/// The NN(36) quadruple in plaintext, as published.
pub const NN36_PLAINTEXT: [&str; 4] = [
    "+-++-+++-+-++--++--+ ++++----+++-----+",
    "+++---+-----++--++-- +-+--+-++-++-+-+-",
    "++-+-+------++++++-+ ++-+++++---+++-+",
    "+++++-+++--+++-+-+-- +--+-++-+++-+--+",
];

/// Number of NN-equivalence classes for `s = 2, 4, ..., 34` as published.
/// Calibration data: the equivalence used by [`crate::search`] may differ.
pub const NN_CLASS_COUNTS: [(usize, usize); 17] = [
    (2, 1),
    (4, 2),
    (6, 2),
    (8, 3),
    (10, 8),
    (12, 14),
    (14, 11),
    (16, 24),
    (18, 20),
    (20, 18),
    (22, 32),
    (24, 12),
    (26, 3),
    (28, 20),
    (30, 9),
    (32, 8),
    (34, 5),
];

/// Orders `n <= 35` with no normal sequences.
pub const NS_EMPTY: [usize; 14] = [6, 14, 17, 21, 22, 23, 24, 27, 28, 30, 31, 33, 34, 35];

/// The six published NN records, decoded and verified.
pub fn table1_records() -> Vec<WitnessRecord> {
    TABLE1
        .iter()
        .enumerate()
        .map(|(i, &(order, ab, cd, _))| {
            let quad = crate::codec::decode_quadruple(QuadKind::Nn, order, ab, cd).expect("embedded table decodes");
            let report = verify_quadruple(&quad).expect("embedded table is well-shaped");
            assert!(report.passed(), "embedded row {} fails: {report}", i + 1);
            WitnessRecord {
                sums: quad.sums(),
                quad,
                codes: Some((ab.to_string(), cd.to_string())),
                provenance: format!("published NN({order}) table, row {}", i + 1),
            }
        })
        .collect()
}

/// The strongest published existence status for the given kind and order.
pub fn status(kind: StatusKind, n: usize) -> KnownStatus {
    use Existence::*;
    let witnessed_nn = TABLE1.iter().any(|r| r.0 == n);
    let (status, provenance, witnessed) = match kind {
        StatusKind::Ns => {
            if NS_EMPTY.contains(&n) {
                let p = if n >= 34 {
                    "exhaustive search: NS(34) and NS(35) are empty"
                } else {
                    "NS(n) empty exactly for n in {6,14,17,21,22,23,24,27,28,30,31,33} when n <= 33"
                };
                (Empty, p, false)
            } else if n == 0 {
                (NonEmpty, "trivial: A=B=(+1)", false)
            } else if n <= 33 {
                (NonEmpty, "NS(n) nonempty for n <= 33 outside the emptiness list", false)
            } else if is_golay_number(n as u64) {
                (NonEmpty, "NS(n) nonempty for Golay numbers n", false)
            } else {
                (Unknown, "beyond the published range", false)
            }
        }
        StatusKind::Nn => {
            if n % 2 == 1 && n > 1 {
                (Empty, "NN(n) empty for odd n > 1", false)
            } else if n == 1 {
                (NonEmpty, "NN(1) coincides with NS(1)", false)
            } else if n <= 36 {
                (
                    NonEmpty,
                    if n == 36 {
                        "NN(36) nonempty: direct verification of the published example"
                    } else {
                        "Yang conjecture confirmed for even n <= 36"
                    },
                    witnessed_nn,
                )
            } else {
                (Unknown, "beyond the published range", false)
            }
        }
        StatusKind::BaseShifted => {
            if n <= 36 {
                (NonEmpty, "base sequence conjecture confirmed for n <= 36", witnessed_nn)
            } else if is_golay_number(n as u64) {
                (NonEmpty, "BS(n+1,n) nonempty for Golay numbers n", false)
            } else if n.is_multiple_of(2) && status(StatusKind::Nn, n).status == NonEmpty {
                (NonEmpty, "contains NN(n)", false)
            } else {
                (Unknown, "beyond the published range", false)
            }
        }
    };
    KnownStatus {
        kind,
        order: n,
        status,
        provenance,
        witnessed,
    }
}

/// `Some(true)` if `n = 2s+1` with NS(s) or NN(s) nonempty, `Some(false)` if
/// both are empty, `None` if undecided. `None` also for even `n`.
pub fn is_yang_number(n: u64) -> Option<bool> {
    if n.is_multiple_of(2) {
        return None;
    }
    let s = ((n - 1) / 2) as usize;
    let ns = status(StatusKind::Ns, s).status;
    let nn = status(StatusKind::Nn, s).status;
    match (ns, nn) {
        (Existence::NonEmpty, _) | (_, Existence::NonEmpty) => Some(true),
        (Existence::Empty, Existence::Empty) => Some(false),
        _ => None,
    }
}

/// Writes records with a `#` provenance comment before each; the file is
/// replaced atomically.
pub fn archive_save(records: &[WitnessRecord], path: &Path) -> Result<(), CatalogError> {
    let mut out = String::new();
    for r in records {
        for line in r.provenance.lines() {
            out += &format!("# {line}\n");
        }
        out += &r.record_line();
        out.push('\n');
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, out)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn archive_load(path: &Path) -> Result<Vec<WitnessRecord>, CatalogError> {
    archive_parse(&fs::read_to_string(path)?)
}

/// Parses archive text, re-verifying every record.
pub fn archive_parse(text: &str) -> Result<Vec<WitnessRecord>, CatalogError> {
    let mut records = Vec::new();
    let mut comments: Vec<String> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
            continue;
        }
        let quad = parse_record(line).map_err(|source| CatalogError::Parse { line: i + 1, source })?;
        let verdict = verify_quadruple(&quad).map(|r| r.failure.map(|f| f.to_string()));
        let reason = match verdict {
            Ok(None) => None,
            Ok(Some(f)) => Some(f),
            Err(e) => Some(e.to_string()),
        };
        if let Some(reason) = reason {
            return Err(CatalogError::Verification {
                line: i + 1,
                record: line.to_string(),
                reason,
            });
        }
        let mut rec = WitnessRecord::from_quad(quad, comments.join("\n"));
        // keep the codes as written when the line used them
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() == 4 && fields[2..].iter().all(|f| f.chars().all(|c| c.is_ascii_digit())) {
            rec.codes = Some((fields[2].to_string(), fields[3].to_string()));
        }
        records.push(rec);
        comments.clear();
    }
    Ok(records)
}
