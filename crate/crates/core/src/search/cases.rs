//! Splitting a search into twelve independently runnable cases.
//!
//! Every solution of order `n` has sums `(a, b, c, d)` with
//! `a^2 + b^2 + c^2 + d^2 = 2(2n + 1)`. Sums vectors are grouped into
//! classes under sign changes and the C/D swap, keyed by
//! `(|a|, |b|, min(|c|,|d|), max(|c|,|d|))`. Classes are sorted and dealt
//! out to case ids `1..=12`: with fewer than twelve classes the tail ids are
//! empty, with more, class `i` goes to case `(i mod 12) + 1`.

use std::fmt;

use serde::Serialize;

use crate::seqcore::SumsVector;

pub const CASE_COUNT: usize = 12;

/// Sums vector up to sign changes and the C/D swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SumsKey {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl SumsKey {
    pub fn of(s: &SumsVector) -> Self {
        let (c, d) = (s.c.unsigned_abs() as u32, s.d.unsigned_abs() as u32);
        Self {
            a: s.a.unsigned_abs() as u32,
            b: s.b.unsigned_abs() as u32,
            c: c.min(d),
            d: c.max(d),
        }
    }
}

impl fmt::Display for SumsKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}|,|{}|,|{}|,|{}|", self.a, self.b, self.c, self.d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseDescriptor {
    pub id: usize,
    pub keys: Vec<SumsKey>,
    /// How the id was filled: a single class, a round-robin merge, or padding.
    pub rule: &'static str,
}

impl CaseDescriptor {
    pub fn contains(&self, key: &SumsKey) -> bool {
        self.keys.contains(key)
    }
}

impl fmt::Display for CaseDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {:2} [{}]", self.id, self.rule)?;
        for k in &self.keys {
            write!(f, " ({k})")?;
        }
        Ok(())
    }
}

/// All admissible sums classes for `BS(n+1, n)`, sorted.
pub fn admissible_keys(order: usize) -> Vec<SumsKey> {
    let m = order as i64 + 1;
    let n = order as i64;
    let target = 2 * (m + n);
    let mut keys = Vec::new();
    let long: Vec<i64> = (0..=m).filter(|v| (v - m) % 2 == 0).collect();
    let short: Vec<i64> = (0..=n).filter(|v| (v - n) % 2 == 0).collect();
    for &a in &long {
        for &b in &long {
            for &c in &short {
                for &d in short.iter().filter(|&&d| d >= c) {
                    if a * a + b * b + c * c + d * d == target {
                        keys.push(SumsKey {
                            a: a as u32,
                            b: b as u32,
                            c: c as u32,
                            d: d as u32,
                        });
                    }
                }
            }
        }
    }
    keys.sort();
    keys
}

/// Twelve disjoint case descriptors for searches of the given order.
///
/// The descriptors depend only on the order; normal and near-normal
/// searches share the same split.
pub fn enumerate_cases(order: usize) -> Vec<CaseDescriptor> {
    let keys = admissible_keys(order);
    let spill = keys.len() > CASE_COUNT;
    let mut cases: Vec<CaseDescriptor> = (1..=CASE_COUNT)
        .map(|id| CaseDescriptor {
            id,
            keys: Vec::new(),
            rule: "empty",
        })
        .collect();
    for (i, k) in keys.into_iter().enumerate() {
        let case = &mut cases[i % CASE_COUNT];
        case.keys.push(k);
        case.rule = if spill { "round-robin" } else { "single" };
    }
    cases
}

/// Case id (1-based) holding the given sums vector, if admissible.
pub fn case_of(cases: &[CaseDescriptor], sums: &SumsVector) -> Option<usize> {
    let key = SumsKey::of(sums);
    cases.iter().find(|c| c.contains(&key)).map(|c| c.id)
}
