//! Depth-first enumeration of the (A, B) half with a hash match for (C, D).
//!
//! `A` has `n + 1` free signs; `B` follows from the normality relation on
//! positions `1..=n`, and `b_(n+1)` is free. Positions are assigned from the
//! outside in, one mirror pair per slot, so after slot `k` the top lag
//! `n - k` of the A/B profile is final and can be bounded by what C and D
//! can still contribute. At a leaf every D is paired with the C sequences
//! whose profile is exactly the complement, found through [`ProfileTable`].

use crate::seqcore::{QuadKind, SeqQuadruple, SumsVector};

use super::bits::{unpack, ProfileTable};
use super::cases::SumsKey;
use super::{Prunes, SearchKind, SearchStats};

pub(crate) struct Layout {
    pub kind: SearchKind,
    pub n: usize,
    pub len: usize,
    pub pairs: usize,
    pub central: bool,
}

impl Layout {
    pub fn new(kind: SearchKind, n: usize) -> Self {
        let len = n + 1;
        Self {
            kind,
            n,
            len,
            pairs: len / 2,
            central: len % 2 == 1,
        }
    }

    pub fn slots(&self) -> usize {
        self.pairs + self.central as usize
    }

    fn relation(&self, i: usize) -> i8 {
        match self.kind {
            SearchKind::Ns => 1,
            SearchKind::Nn => {
                if i.is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn choices(&self, slot: usize, classes: bool) -> std::ops::Range<u8> {
        if slot == 0 && self.pairs > 0 {
            // a_1 = +1, a_(n+1) = +1, b_(n+1) = -1
            if classes {
                4..5
            } else {
                0..8
            }
        } else if slot < self.pairs {
            0..4
        } else {
            0..2
        }
    }
}

fn sign(bit: u8) -> i8 {
    if bit & 1 == 1 {
        -1
    } else {
        1
    }
}

/// Shared read-only context of one search.
pub(crate) struct Context<'a> {
    pub layout: Layout,
    pub table: &'a ProfileTable,
    pub prunes: Prunes,
    pub classes: bool,
    pub filter: Option<Vec<SumsKey>>,
    pub materialize: bool,
}

#[derive(Default)]
pub(crate) struct TaskResult {
    pub solutions: Vec<SeqQuadruple>,
    pub count: u64,
    pub stats: SearchStats,
}

struct State {
    a: Vec<i8>,
    b: Vec<i8>,
}

impl<'a> Context<'a> {
    fn target(&self) -> i64 {
        2 * (2 * self.layout.n as i64 + 1)
    }

    fn assign(&self, st: &mut State, slot: usize, choice: u8) {
        let l = &self.layout;
        if slot < l.pairs {
            let k = slot;
            let hi = l.len - 1 - k;
            st.a[k] = sign(choice);
            st.a[hi] = sign(choice >> 1);
            st.b[k] = l.relation(k) * st.a[k];
            if k == 0 {
                st.b[hi] = sign(choice >> 2);
            } else {
                st.b[hi] = l.relation(hi) * st.a[hi];
            }
        } else {
            let c = l.pairs;
            st.a[c] = sign(choice);
            st.b[c] = l.relation(c) * st.a[c];
        }
    }

    fn ab_lag(&self, st: &State, lag: usize) -> i32 {
        let len = self.layout.len;
        (0..len - lag)
            .map(|i| st.a[i] as i32 * st.a[i + lag] as i32 + st.b[i] as i32 * st.b[i + lag] as i32)
            .sum()
    }

    /// Partial-lag bound after a pair slot is filled.
    fn slot_feasible(&self, st: &State, slot: usize) -> bool {
        if !self.prunes.partial_lag || slot >= self.layout.pairs {
            return true;
        }
        let lag = self.layout.n - slot;
        let v = self.ab_lag(st, lag);
        v.unsigned_abs() as usize <= 2 * slot
    }

    /// Walks the prefix `choices`; `None` if a prefix slot is pruned.
    fn replay(&self, choices: &[u8], stats: &mut SearchStats) -> Option<State> {
        let len = self.layout.len;
        let mut st = State {
            a: vec![0; len],
            b: vec![0; len],
        };
        for (slot, &c) in choices.iter().enumerate() {
            self.assign(&mut st, slot, c);
            if !self.slot_feasible(&st, slot) {
                stats.prunes += 1;
                return None;
            }
        }
        Some(st)
    }

    /// Deterministic list of surviving prefixes of the given depth.
    pub fn prefixes(&self, depth: usize, stats: &mut SearchStats) -> Vec<Vec<u8>> {
        let depth = depth.min(self.layout.slots());
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        let len = self.layout.len;
        let mut st = State {
            a: vec![0; len],
            b: vec![0; len],
        };
        self.collect_prefixes(&mut st, &mut prefix, depth, &mut out, stats);
        out
    }

    fn collect_prefixes(
        &self,
        st: &mut State,
        prefix: &mut Vec<u8>,
        depth: usize,
        out: &mut Vec<Vec<u8>>,
        stats: &mut SearchStats,
    ) {
        if prefix.len() == depth {
            out.push(prefix.clone());
            return;
        }
        let slot = prefix.len();
        for c in self.layout.choices(slot, self.classes) {
            stats.nodes += 1;
            self.assign(st, slot, c);
            if !self.slot_feasible(st, slot) {
                stats.prunes += 1;
                continue;
            }
            prefix.push(c);
            self.collect_prefixes(st, prefix, depth, out, stats);
            prefix.pop();
        }
    }

    pub fn run_task(&self, prefix: &[u8]) -> TaskResult {
        let mut res = TaskResult::default();
        if let Some(mut st) = self.replay(prefix, &mut res.stats) {
            self.dfs(&mut st, prefix.len(), &mut res);
        }
        res
    }

    fn dfs(&self, st: &mut State, slot: usize, res: &mut TaskResult) {
        if slot == self.layout.slots() {
            self.leaf(st, res);
            return;
        }
        for c in self.layout.choices(slot, self.classes) {
            res.stats.nodes += 1;
            self.assign(st, slot, c);
            if !self.slot_feasible(st, slot) {
                res.stats.prunes += 1;
                continue;
            }
            self.dfs(st, slot + 1, res);
        }
    }

    fn key_allowed(&self, key: &SumsKey) -> bool {
        self.filter.as_ref().is_none_or(|f| f.contains(key))
    }

    fn leaf(&self, st: &State, res: &mut TaskResult) {
        res.stats.leaves += 1;
        let n = self.layout.n;
        if self.ab_lag(st, n) != 0 {
            return;
        }
        let sa: i64 = st.a.iter().map(|&x| x as i64).sum();
        let sb: i64 = st.b.iter().map(|&x| x as i64).sum();
        let rest = self.target() - sa * sa - sb * sb;
        if self.prunes.sum_of_squares {
            let ab_ok = rest >= 0
                && two_square_split(rest, n).is_some()
                && self
                    .filter
                    .as_ref()
                    .is_none_or(|f| f.iter().any(|k| k.a as i64 == sa.abs() && k.b as i64 == sb.abs()));
            if !ab_ok {
                res.stats.prunes += 1;
                return;
            }
        }

        let mut target = vec![0i8; n.saturating_sub(1)];
        let ab_profile: Vec<i32> = (1..n).map(|j| self.ab_lag(st, j)).collect();
        for dbits in 0..self.table.size() as u64 {
            let sd = self.table.sum(dbits) as i64;
            if self.prunes.sum_of_squares {
                let c2 = rest - sd * sd;
                match isqrt_exact(c2) {
                    Some(c) => {
                        let key = SumsKey::of(&SumsVector::new(sa, sb, c, sd));
                        if !self.key_allowed(&key) {
                            continue;
                        }
                    }
                    None => continue,
                }
            }
            let pd = self.table.profile(dbits);
            let mut reachable = true;
            for j in 0..n.saturating_sub(1) {
                let t = -ab_profile[j] - pd[j] as i32;
                if t.unsigned_abs() as usize > n - 1 - j {
                    reachable = false;
                    break;
                }
                target[j] = t as i8;
            }
            if !reachable {
                continue;
            }
            res.stats.lookups += 1;
            for &cbits in self.table.lookup(&target) {
                let sc = self.table.sum(cbits) as i64;
                let key = SumsKey::of(&SumsVector::new(sa, sb, sc, sd));
                if !self.key_allowed(&key) {
                    continue;
                }
                res.count += 1;
                if self.materialize {
                    let kind = match self.layout.kind {
                        SearchKind::Nn => QuadKind::Nn,
                        SearchKind::Ns => QuadKind::Ns,
                    };
                    let q = SeqQuadruple::new(kind, st.a.clone(), st.b.clone(), unpack(cbits, n), unpack(dbits, n))
                        .expect("engine builds well-formed quadruples");
                    res.solutions.push(q);
                }
            }
        }
    }
}

fn isqrt_exact(v: i64) -> Option<i64> {
    if v < 0 {
        return None;
    }
    let r = (v as f64).sqrt().round() as i64;
    (r - 1..=r + 1).find(|&x| x >= 0 && x * x == v)
}

/// Some `(c, d)` with `c^2 + d^2 = v` and `c ≡ d ≡ n (mod 2)`.
fn two_square_split(v: i64, n: usize) -> Option<(i64, i64)> {
    let parity = n as i64 % 2;
    let mut c = parity;
    while c * c <= v {
        if let Some(d) = isqrt_exact(v - c * c) {
            if d % 2 == parity {
                return Some((c, d));
            }
        }
        c += 2;
    }
    None
}
