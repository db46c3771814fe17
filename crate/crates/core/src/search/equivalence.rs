//! Equivalence operations on near-normal (and normal) quadruples, orbits,
//! and a canonical orbit representative.

use std::collections::{BTreeSet, HashSet};
use std::ops::Neg;

use serde::Serialize;

use crate::seqcore::{verify_quadruple, QuadKind, SeqQuadruple};

use super::SearchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EquivalenceOp {
    NegateAB,
    SwapAB,
    NegateC,
    NegateD,
    SwapCD,
    ReverseC,
    ReverseD,
    /// `x_i -> (-1)^(i-1) x_i` in all four sequences at once.
    AlternateAll,
    /// Reverse the odd-position subsequence `x_1, x_3, ..., x_(n-1)` of A and B.
    ReverseOddAB,
    /// Negate `x_1, x_3, ..., x_(n-1)` in A and B.
    NegateOddAB,
}

impl EquivalenceOp {
    pub const ALL: [EquivalenceOp; 10] = [
        EquivalenceOp::NegateAB,
        EquivalenceOp::SwapAB,
        EquivalenceOp::NegateC,
        EquivalenceOp::NegateD,
        EquivalenceOp::SwapCD,
        EquivalenceOp::ReverseC,
        EquivalenceOp::ReverseD,
        EquivalenceOp::AlternateAll,
        EquivalenceOp::ReverseOddAB,
        EquivalenceOp::NegateOddAB,
    ];

    pub fn apply(self, q: &SeqQuadruple) -> SeqQuadruple {
        let kind = q.kind();
        let [a, b, c, d] = self.act(q.clone().into_seqs());
        SeqQuadruple::new(kind, a, b, c, d).expect("equivalence ops preserve shape and alphabet")
    }

    /// The op as a signed permutation of sequence entries.
    pub(crate) fn act<T: Copy + Neg<Output = T>>(self, seqs: [Vec<T>; 4]) -> [Vec<T>; 4] {
        let [mut a, mut b, mut c, mut d] = seqs;
        let negate = |v: &mut Vec<T>| v.iter_mut().for_each(|x| *x = -*x);
        let n = c.len();
        match self {
            EquivalenceOp::NegateAB => {
                negate(&mut a);
                negate(&mut b);
            }
            EquivalenceOp::SwapAB => std::mem::swap(&mut a, &mut b),
            EquivalenceOp::NegateC => negate(&mut c),
            EquivalenceOp::NegateD => negate(&mut d),
            EquivalenceOp::SwapCD => std::mem::swap(&mut c, &mut d),
            EquivalenceOp::ReverseC => c.reverse(),
            EquivalenceOp::ReverseD => d.reverse(),
            EquivalenceOp::AlternateAll => {
                for v in [&mut a, &mut b, &mut c, &mut d] {
                    v.iter_mut().skip(1).step_by(2).for_each(|x| *x = -*x);
                }
            }
            EquivalenceOp::ReverseOddAB => {
                for v in [&mut a, &mut b] {
                    let odd: Vec<T> = v[..n].iter().step_by(2).copied().collect();
                    for (slot, x) in v[..n].iter_mut().step_by(2).zip(odd.into_iter().rev()) {
                        *slot = x;
                    }
                }
            }
            EquivalenceOp::NegateOddAB => {
                for v in [&mut a, &mut b] {
                    v[..n].iter_mut().step_by(2).for_each(|x| *x = -*x);
                }
            }
        }
        [a, b, c, d]
    }
}

fn check_member(q: &SeqQuadruple) -> Result<(), SearchError> {
    if !matches!(q.kind(), QuadKind::Nn | QuadKind::Ns) {
        return Err(SearchError::NotMember(format!(
            "equivalence is defined for NN and NS quadruples, got {}",
            q.kind()
        )));
    }
    let report = verify_quadruple(q).map_err(|e| SearchError::NotMember(e.to_string()))?;
    match report.failure {
        None => Ok(()),
        Some(f) => Err(SearchError::NotMember(format!("{} check failed: {f}", q.kind()))),
    }
}

/// Closure of `q` under [`EquivalenceOp::ALL`], sorted by plaintext.
pub fn nn_orbit(q: &SeqQuadruple) -> Result<Vec<SeqQuadruple>, SearchError> {
    check_member(q)?;
    Ok(orbit_unchecked(q))
}

pub(crate) fn orbit_unchecked(q: &SeqQuadruple) -> Vec<SeqQuadruple> {
    let mut seen: HashSet<SeqQuadruple> = HashSet::new();
    let mut stack = vec![q.clone()];
    seen.insert(q.clone());
    while let Some(cur) = stack.pop() {
        for op in EquivalenceOp::ALL {
            let next = op.apply(&cur);
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    let sorted: BTreeSet<(String, usize)> = seen.iter().enumerate().map(|(i, s)| (s.plaintext(), i)).collect();
    let all: Vec<SeqQuadruple> = seen.into_iter().collect();
    sorted.into_iter().map(|(_, i)| all[i].clone()).collect()
}

/// Lexicographically least plaintext member of the orbit of `q`.
pub fn canonicalize(q: &SeqQuadruple) -> Result<SeqQuadruple, SearchError> {
    check_member(q)?;
    Ok(canonical_unchecked(q))
}

pub(crate) fn canonical_unchecked(q: &SeqQuadruple) -> SeqQuadruple {
    orbit_unchecked(q).swap_remove(0)
}
