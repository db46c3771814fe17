use crate::search::bits::{unpack, ProfileTable};
use crate::seqcore::{npaf, to_plaintext, BinarySeq, QuadKind, SeqQuadruple};

use super::ConstructError;

/// Longest length [`golay_search`] accepts without an explicit limit.
pub const GOLAY_SEARCH_LIMIT: usize = 12;

/// Two equal-length binary sequences whose autocorrelations cancel at every
/// positive lag.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GolayPair {
    e: Vec<i8>,
    f: Vec<i8>,
}

impl GolayPair {
    pub fn new(e: BinarySeq, f: BinarySeq) -> Result<Self, ConstructError> {
        let (e, f) = (e.into_inner(), f.into_inner());
        if e.len() != f.len() {
            return Err(ConstructError::InvalidPair(format!(
                "lengths {} and {}",
                e.len(),
                f.len()
            )));
        }
        let (pe, pf) = (npaf(&e), npaf(&f));
        if let Some(lag) = (1..e.len()).find(|&j| pe.at(j) + pf.at(j) != 0) {
            return Err(ConstructError::InvalidPair(format!(
                "lag {lag} sums to {}",
                pe.at(lag) + pf.at(lag)
            )));
        }
        Ok(Self { e, f })
    }

    pub fn parse(text: &str) -> Result<Self, ConstructError> {
        let (e, f) = text
            .split_once(';')
            .ok_or_else(|| ConstructError::InvalidPair("expected 'E;F'".into()))?;
        let e = BinarySeq::parse(e).map_err(|err| ConstructError::InvalidPair(err.to_string()))?;
        let f = BinarySeq::parse(f).map_err(|err| ConstructError::InvalidPair(err.to_string()))?;
        Self::new(e, f)
    }

    pub fn e(&self) -> &[i8] {
        &self.e
    }

    pub fn f(&self) -> &[i8] {
        &self.f
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }

    pub fn plaintext(&self) -> String {
        format!("{};{}", to_plaintext(&self.e), to_plaintext(&self.f))
    }
}

/// `(E ‖ F, E ‖ -F)`.
pub fn golay_double(p: &GolayPair) -> GolayPair {
    let mut e = p.e.clone();
    e.extend_from_slice(&p.f);
    let mut f = p.e.clone();
    f.extend(p.f.iter().map(|&x| -x));
    GolayPair { e, f }
}

pub fn golay_search(len: usize) -> Result<Vec<GolayPair>, ConstructError> {
    golay_search_with_limit(len, GOLAY_SEARCH_LIMIT)
}

/// Every ordered Golay pair of length `len`, sorted by plaintext.
pub fn golay_search_with_limit(len: usize, limit: usize) -> Result<Vec<GolayPair>, ConstructError> {
    if len > limit || len >= 32 {
        return Err(ConstructError::OverBudget { len, limit });
    }
    let table = ProfileTable::build(len);
    let mut target = vec![0i8; len.saturating_sub(1)];
    let mut pairs = Vec::new();
    for e in 0..table.size() as u64 {
        for (t, &v) in target.iter_mut().zip(table.profile(e)) {
            *t = -v;
        }
        for &f in table.lookup(&target) {
            pairs.push(GolayPair {
                e: unpack(e, len),
                f: unpack(f, len),
            });
        }
    }
    pairs.sort_by_cached_key(|p| p.plaintext());
    Ok(pairs)
}

/// Normal sequences `NS(g)` from a Golay pair of length `g`:
/// `A = E ‖ (+1)`, `B = E ‖ (-1)`, `C = D = F`.
pub fn golay_to_ns(p: &GolayPair) -> SeqQuadruple {
    let mut a = p.e.clone();
    a.push(1);
    let mut b = p.e.clone();
    b.push(-1);
    SeqQuadruple::new(QuadKind::Ns, a, b, p.f.clone(), p.f.clone()).expect("binary and well-shaped")
}

/// Whether `n = 2^a 10^b 26^c` for nonnegative `a, b, c`.
pub fn is_golay_number(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    // 10 = 2*5 and 26 = 2*13: strip the odd parts, then need enough twos
    let mut odd_factors = 0;
    while m.is_multiple_of(5) {
        m /= 5;
        odd_factors += 1;
    }
    while m.is_multiple_of(13) {
        m /= 13;
        odd_factors += 1;
    }
    let twos = m.trailing_zeros();
    m >>= twos;
    m == 1 && twos >= odd_factors
}

/// Reads one `E;F` pair per line; blank lines and `#` comments are skipped.
/// Every pair is verified.
pub fn parse_golay_seeds(text: &str) -> Result<Vec<GolayPair>, ConstructError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| {
            GolayPair::parse(l).map_err(|e| ConstructError::Parse {
                line: i + 1,
                msg: e.to_string(),
            })
        })
        .collect()
}
