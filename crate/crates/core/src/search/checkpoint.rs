//! Resumable search state as a small text file.
//!
//! ```text
//! # nnseq checkpoint
//! kind NN
//! order 12
//! cases all
//! classes 0
//! nodes 81234
//! prunes 5120
//! leaves 900
//! lookups 77000
//! elapsed_ms 5210
//! count 3
//! frame 0 4
//! frame 1 2
//! solution NN 12 0167... 1823...
//! ```
//!
//! `frame` lines are the slot choices of the next unprocessed task, outermost
//! first. `solution` lines hold everything found so far (class
//! representatives when `classes 1`).

use std::fs;
use std::path::Path;

use crate::codec::{format_record, parse_record};
use crate::seqcore::SeqQuadruple;

use super::{SearchError, SearchKind, SearchStats};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub kind: SearchKind,
    pub order: usize,
    pub cases: Option<Vec<usize>>,
    pub classes: bool,
    pub stats: SearchStats,
    pub count: u64,
    /// Slot choices of the next task to run.
    pub frames: Vec<u8>,
    pub solutions: Vec<SeqQuadruple>,
}

impl Checkpoint {
    pub fn to_text(&self) -> String {
        let mut out = String::from("# nnseq checkpoint\n");
        out += &format!("kind {}\n", self.kind.tag());
        out += &format!("order {}\n", self.order);
        match &self.cases {
            None => out += "cases all\n",
            Some(c) => {
                let ids: Vec<String> = c.iter().map(|i| i.to_string()).collect();
                out += &format!("cases {}\n", ids.join(","));
            }
        }
        out += &format!("classes {}\n", self.classes as u8);
        out += &format!("nodes {}\n", self.stats.nodes);
        out += &format!("prunes {}\n", self.stats.prunes);
        out += &format!("leaves {}\n", self.stats.leaves);
        out += &format!("lookups {}\n", self.stats.lookups);
        out += &format!("elapsed_ms {}\n", self.stats.elapsed.as_millis());
        out += &format!("count {}\n", self.count);
        for (depth, c) in self.frames.iter().enumerate() {
            out += &format!("frame {depth} {c}\n");
        }
        for q in &self.solutions {
            out += &format!("solution {}\n", format_record(q));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, SearchError> {
        let bad = |line: usize, msg: &str| SearchError::Checkpoint(format!("line {line}: {msg}"));
        let mut kind = None;
        let mut order = None;
        let mut cases = None;
        let mut classes = false;
        let mut stats = SearchStats::default();
        let mut count = 0;
        let mut frames = Vec::new();
        let mut solutions = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once(' ').ok_or_else(|| bad(lineno, "missing value"))?;
            let num = |v: &str| v.parse::<u64>().map_err(|_| bad(lineno, "bad number"));
            match key {
                "kind" => kind = Some(SearchKind::from_tag(value).ok_or_else(|| bad(lineno, "bad kind"))?),
                "order" => order = Some(num(value)? as usize),
                "cases" => {
                    cases = if value == "all" {
                        None
                    } else {
                        Some(
                            value
                                .split(',')
                                .map(|v| v.parse::<usize>().map_err(|_| bad(lineno, "bad case id")))
                                .collect::<Result<Vec<_>, _>>()?,
                        )
                    }
                }
                "classes" => classes = num(value)? != 0,
                "nodes" => stats.nodes = num(value)?,
                "prunes" => stats.prunes = num(value)?,
                "leaves" => stats.leaves = num(value)?,
                "lookups" => stats.lookups = num(value)?,
                "elapsed_ms" => stats.elapsed = std::time::Duration::from_millis(num(value)?),
                "count" => count = num(value)?,
                "frame" => {
                    let (depth, choice) = value
                        .split_once(' ')
                        .ok_or_else(|| bad(lineno, "frame needs depth and choice"))?;
                    if num(depth)? as usize != frames.len() {
                        return Err(bad(lineno, "frames out of order"));
                    }
                    let c = num(choice)?;
                    if c > 7 {
                        return Err(bad(lineno, "choice out of range"));
                    }
                    frames.push(c as u8);
                }
                "solution" => solutions.push(parse_record(value).map_err(|e| bad(lineno, &e.to_string()))?),
                _ => return Err(bad(lineno, "unknown key")),
            }
        }
        Ok(Self {
            kind: kind.ok_or_else(|| SearchError::Checkpoint("missing kind".into()))?,
            order: order.ok_or_else(|| SearchError::Checkpoint("missing order".into()))?,
            cases,
            classes,
            stats,
            count,
            frames,
            solutions,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), SearchError> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, self.to_text())?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, SearchError> {
        Self::parse(&fs::read_to_string(path)?)
    }
}
