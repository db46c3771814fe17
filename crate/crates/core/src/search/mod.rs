//! Exhaustive search for near-normal and normal sequences.
//!
//! The search space of order `n` is split into tasks by fixing the outermost
//! slot choices of `A`/`B`. Tasks run on a work-stealing pool in fixed-size
//! batches; the node and time budget is checked between batches, and an
//! exhausted budget yields a [`Checkpoint`] from which [`search`] resumes.
//! Output is sorted by plaintext, so results do not depend on the worker
//! count.

pub(crate) mod bits;
pub mod cases;
pub mod checkpoint;
mod engine;
pub mod equivalence;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::seqcore::{QuadKind, SeqQuadruple};

pub use cases::{admissible_keys, case_of, enumerate_cases, CaseDescriptor, SumsKey, CASE_COUNT};
pub use checkpoint::Checkpoint;
pub use equivalence::{canonicalize, nn_orbit, EquivalenceOp};

use bits::ProfileTable;
use engine::{Context, Layout, TaskResult};

/// Orders above this need [`SearchSpec::allow_large`].
pub const DEFAULT_ORDER_BOUND: usize = 20;
/// Hard limit set by the in-memory C/D profile table.
pub const MAX_ORDER: usize = 28;

const PREFIX_DEPTH: usize = 3;
const BATCH: usize = 16;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("order {order} exceeds the bound {bound}; pass an explicit override")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("unknown case id {0} (valid ids are 1..=12)")]
    BadCase(usize),
    #[error("budget exhausted after {} nodes; {} solutions so far", .partial.stats.nodes, .partial.count)]
    Budget {
        partial: Box<SearchOutcome>,
        checkpoint: Box<Checkpoint>,
    },
    #[error("not a member: {0}")]
    NotMember(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SearchKind {
    Nn,
    Ns,
}

impl SearchKind {
    pub fn tag(self) -> &'static str {
        match self {
            SearchKind::Nn => "NN",
            SearchKind::Ns => "NS",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag.to_ascii_uppercase().as_str() {
            "NN" => Some(SearchKind::Nn),
            "NS" => Some(SearchKind::Ns),
            _ => None,
        }
    }

    pub fn quad_kind(self) -> QuadKind {
        match self {
            SearchKind::Nn => QuadKind::Nn,
            SearchKind::Ns => QuadKind::Ns,
        }
    }
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReportMode {
    /// Stop at the first batch that produces a solution.
    First,
    All,
    /// Exact cardinality only.
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prunes {
    pub sum_of_squares: bool,
    pub partial_lag: bool,
}

impl Default for Prunes {
    fn default() -> Self {
        Self {
            sum_of_squares: true,
            partial_lag: true,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Limits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub kind: SearchKind,
    pub order: usize,
    /// Restrict to these case ids (see [`enumerate_cases`]).
    pub cases: Option<Vec<usize>>,
    pub mode: ReportMode,
    /// Report one canonical representative per equivalence class. The
    /// search then fixes the boundary columns to `a_1 = a_(n+1) = +1`,
    /// `b_(n+1) = -1`.
    pub classes: bool,
    pub limits: Limits,
    pub prunes: Prunes,
    /// 0 means the pool default.
    pub workers: usize,
    pub allow_large: bool,
    pub resume: Option<Checkpoint>,
}

impl SearchSpec {
    pub fn new(kind: SearchKind, order: usize) -> Self {
        Self {
            kind,
            order,
            cases: None,
            mode: ReportMode::All,
            classes: false,
            limits: Limits::default(),
            prunes: Prunes::default(),
            workers: 0,
            allow_large: false,
            resume: None,
        }
    }

    pub fn mode(mut self, mode: ReportMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn cases(mut self, ids: Vec<usize>) -> Self {
        self.cases = Some(ids);
        self
    }

    pub fn classes(mut self, on: bool) -> Self {
        self.classes = on;
        self
    }

    pub fn workers(mut self, n: usize) -> Self {
        self.workers = n;
        self
    }

    pub fn prunes(mut self, prunes: Prunes) -> Self {
        self.prunes = prunes;
        self
    }

    pub fn max_nodes(mut self, nodes: u64) -> Self {
        self.limits.max_nodes = Some(nodes);
        self
    }

    pub fn resume(mut self, cp: Checkpoint) -> Self {
        self.resume = Some(cp);
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub leaves: u64,
    pub lookups: u64,
    pub elapsed: Duration,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.prunes += other.prunes;
        self.leaves += other.leaves;
        self.lookups += other.lookups;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub kind: SearchKind,
    pub order: usize,
    /// Empty in [`ReportMode::Count`] unless `classes` is set.
    #[serde(serialize_with = "serialize_quads")]
    pub solutions: Vec<SeqQuadruple>,
    /// Number of solutions, or of classes when `classes` is set.
    pub count: u64,
    pub stats: SearchStats,
    pub note: Option<String>,
}

fn serialize_quads<S: serde::Serializer>(qs: &[SeqQuadruple], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.plaintext()))
}

/// Runs an exhaustive search.
pub fn search(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    let bound = if spec.allow_large {
        MAX_ORDER
    } else {
        DEFAULT_ORDER_BOUND
    };
    if spec.order > bound {
        return Err(SearchError::OrderTooLarge {
            order: spec.order,
            bound,
        });
    }
    let case_list = enumerate_cases(spec.order);
    let filter = match &spec.cases {
        None => None,
        Some(ids) => {
            let mut keys = Vec::new();
            for &id in ids {
                let case = case_list.iter().find(|c| c.id == id).ok_or(SearchError::BadCase(id))?;
                keys.extend(case.keys.iter().copied());
            }
            Some(keys)
        }
    };
    if let Some(cp) = &spec.resume {
        if cp.kind != spec.kind || cp.order != spec.order || cp.cases != spec.cases || cp.classes != spec.classes {
            return Err(SearchError::Checkpoint(
                "checkpoint does not match the search spec".into(),
            ));
        }
    }

    let start = Instant::now();
    let mut acc = Accumulator::new(spec);
    if let Some(cp) = &spec.resume {
        acc.stats = cp.stats.clone();
        acc.count = cp.count;
        for q in &cp.solutions {
            acc.push(q.clone());
        }
    }
    let base_elapsed = acc.stats.elapsed;

    if spec.order == 0 {
        order_zero(spec, &filter, &mut acc);
        acc.stats.elapsed = base_elapsed + start.elapsed();
        return Ok(acc.finish(spec));
    }

    let table = ProfileTable::build(spec.order);
    let ctx = Context {
        layout: Layout::new(spec.kind, spec.order),
        table: &table,
        prunes: spec.prunes,
        classes: spec.classes,
        filter,
        materialize: spec.mode != ReportMode::Count || spec.classes,
    };
    let mut gen_stats = SearchStats::default();
    let tasks = ctx.prefixes(PREFIX_DEPTH, &mut gen_stats);
    let first_task = match &spec.resume {
        Some(cp) => tasks.partition_point(|t| t.as_slice() < cp.frames.as_slice()),
        None => {
            acc.stats.absorb(&gen_stats);
            0
        }
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers)
        .build()
        .map_err(std::io::Error::other)?;

    let mut next = first_task;
    while next < tasks.len() {
        let end = (next + BATCH).min(tasks.len());
        let results: Vec<TaskResult> = pool.install(|| tasks[next..end].par_iter().map(|t| ctx.run_task(t)).collect());
        next = end;
        let mut found = false;
        for r in results {
            acc.stats.absorb(&r.stats);
            acc.count += r.count;
            found |= r.count > 0;
            for q in r.solutions {
                acc.push(q);
            }
        }
        if spec.mode == ReportMode::First && found {
            break;
        }
        let over_nodes = spec.limits.max_nodes.is_some_and(|m| acc.stats.nodes >= m);
        let over_time = spec.limits.max_time.is_some_and(|t| start.elapsed() >= t);
        if (over_nodes || over_time) && next < tasks.len() {
            acc.stats.elapsed = base_elapsed + start.elapsed();
            let checkpoint = Checkpoint {
                kind: spec.kind,
                order: spec.order,
                cases: spec.cases.clone(),
                classes: spec.classes,
                stats: acc.stats.clone(),
                count: acc.count,
                frames: tasks[next].clone(),
                solutions: acc.sorted(),
            };
            return Err(SearchError::Budget {
                partial: Box::new(acc.finish(spec)),
                checkpoint: Box::new(checkpoint),
            });
        }
    }
    acc.stats.elapsed = base_elapsed + start.elapsed();
    Ok(acc.finish(spec))
}

/// `BS(1, 0)`: A and B are single signs, C and D empty.
fn order_zero(spec: &SearchSpec, filter: &Option<Vec<SumsKey>>, acc: &mut Accumulator) {
    let kind = spec.kind.quad_kind();
    for a in [1i8, -1] {
        for b in [1i8, -1] {
            acc.stats.nodes += 1;
            if spec.classes && (a, b) != (1, -1) && (a, b) != (1, 1) {
                continue;
            }
            let q = SeqQuadruple::new(kind, vec![a], vec![b], vec![], vec![]).expect("well-formed");
            let key = SumsKey::of(&q.sums());
            if filter.as_ref().is_none_or(|f| f.contains(&key)) {
                acc.count += 1;
                if spec.mode != ReportMode::Count || spec.classes {
                    acc.push(q);
                }
            }
        }
    }
}

struct Accumulator {
    classes: bool,
    stats: SearchStats,
    count: u64,
    found: BTreeMap<String, SeqQuadruple>,
    /// Orbit members already accounted for (classes mode).
    covered: HashSet<SeqQuadruple>,
}

impl Accumulator {
    fn new(spec: &SearchSpec) -> Self {
        Self {
            classes: spec.classes,
            stats: SearchStats::default(),
            count: 0,
            found: BTreeMap::new(),
            covered: HashSet::new(),
        }
    }

    fn push(&mut self, q: SeqQuadruple) {
        if !self.classes {
            self.found.insert(q.plaintext(), q);
            return;
        }
        if self.covered.contains(&q) {
            return;
        }
        let mut orbit = equivalence::orbit_unchecked(&q);
        let canonical = orbit.swap_remove(0);
        self.covered.extend(orbit);
        self.covered.insert(canonical.clone());
        self.found.insert(canonical.plaintext(), canonical);
    }

    fn sorted(&self) -> Vec<SeqQuadruple> {
        self.found.values().cloned().collect()
    }

    fn finish(&self, spec: &SearchSpec) -> SearchOutcome {
        let mut solutions = self.sorted();
        let count = if spec.classes {
            solutions.len() as u64
        } else {
            self.count
        };
        if spec.mode == ReportMode::First {
            solutions.truncate(1);
        }
        let note = (spec.kind == SearchKind::Nn && spec.order % 2 == 1 && spec.order > 1 && count == 0)
            .then(|| "odd order: exhaustive search found no near-normal sequences".to_string());
        SearchOutcome {
            kind: spec.kind,
            order: spec.order,
            solutions,
            count,
            stats: self.stats.clone(),
            note,
        }
    }
}
