//! Text formats for complexes, vertex values and sequences.
//!
//! Complex files list one simplex per line as vertex ids, with an optional
//! `dim <d>` header and `#` comments:
//!
//! ```text
//! dim 2
//! 1 2 3
//! 3 4
//! ```
//!
//! Unweighted lines generate the complex by closure. A weighted file gives
//! every simplex explicitly as `v1 v2 ... : weight`, and the weights must
//! form a stack.
//!
//! Sequence files are canonical JSON with a fixed key order.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplexPool;
use crate::error::Error;
use crate::sequence::{critical_vector, MorseItem, MorseSequence};
use crate::simplex::{Simplex, Vertex};
use crate::stack::{Stack, VertexMap, Weight};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Content(String),
    #[error("malformed sequence file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("sequence summary does not match its items: {0}")]
    Summary(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl IoError {
    /// Whether the input parsed but its weights or values break the stack
    /// rules (non-monotone stack, tied vertex values).
    pub fn is_stack_violation(&self) -> bool {
        matches!(
            self,
            IoError::Invalid(Error::NotMonotone { .. } | Error::NotInjective { .. })
        )
    }
}

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        message: message.into(),
    }
}

/// Meaningful lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_vertices(line: usize, text: &str) -> Result<Simplex, IoError> {
    let vertices = text
        .split_whitespace()
        .map(|t| {
            t.parse::<Vertex>()
                .map_err(|_| syntax(line, format!("`{t}` is not a vertex id")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Simplex::new(vertices).map_err(|e| syntax(line, e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub complex: SimplexPool,
    /// Present iff the file is weighted.
    pub weights: Option<Stack>,
}

pub fn parse_complex(text: &str) -> Result<ComplexFile, IoError> {
    let mut declared_dim = None;
    let mut plain = Vec::new();
    let mut weighted: Vec<(usize, Simplex, Weight)> = Vec::new();
    for (n, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("dim") {
            if declared_dim.is_some() || !plain.is_empty() || !weighted.is_empty() {
                return Err(syntax(n, "`dim` header must come first"));
            }
            let d = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| syntax(n, "`dim` needs a non-negative integer"))?;
            declared_dim = Some(d);
            continue;
        }
        match line.split_once(':') {
            Some((verts, w)) => {
                let w = w
                    .trim()
                    .parse::<Weight>()
                    .map_err(|_| syntax(n, format!("`{}` is not an integer weight", w.trim())))?;
                weighted.push((n, parse_vertices(n, verts)?, w));
            }
            None => plain.push((n, parse_vertices(n, line)?)),
        }
    }
    if !weighted.is_empty() && !plain.is_empty() {
        let line = plain[0].0;
        return Err(syntax(
            line,
            "weighted files need a weight on every simplex",
        ));
    }

    let file = if weighted.is_empty() {
        ComplexFile {
            complex: SimplexPool::from_generators(plain.into_iter().map(|(_, s)| s)),
            weights: None,
        }
    } else {
        let mut map: HashMap<Simplex, Weight> = HashMap::new();
        for (n, s, w) in weighted {
            if map.insert(s.clone(), w).is_some() {
                return Err(syntax(n, format!("simplex {s} listed twice")));
            }
        }
        let complex = SimplexPool::new(map.keys().cloned());
        if let Some(missing) = complex
            .iter()
            .flat_map(|s| s.facets().collect::<Vec<_>>())
            .find(|f| !complex.contains(f))
        {
            return Err(IoError::Content(format!(
                "weighted files must list every face explicitly; {missing} is missing"
            )));
        }
        let stack = Stack::from_map(&complex, &map)?;
        if let Some(e) = stack.monotonicity_violation(&complex) {
            return Err(e.into());
        }
        ComplexFile {
            complex,
            weights: Some(stack),
        }
    };
    if let Some(d) = declared_dim {
        if !file.complex.is_empty() && file.complex.dim() != d as isize {
            return Err(IoError::Content(format!(
                "header declares dimension {d} but the complex has dimension {}",
                file.complex.dim()
            )));
        }
    }
    Ok(file)
}

/// Writes a complex, with weights if given. Unweighted output lists the
/// facets only.
pub fn write_complex(k: &SimplexPool, weights: Option<&Stack>) -> String {
    let mut out = String::new();
    if !k.is_empty() {
        out.push_str(&format!("dim {}\n", k.dim()));
    }
    for (i, s) in k.iter().enumerate() {
        match weights {
            Some(f) => out.push_str(&format!("{s} : {}\n", f.get(i))),
            None if k.coface_indices(i).is_empty() => out.push_str(&format!("{s}\n")),
            None => {}
        }
    }
    out
}

/// Parses `vertex value` lines. The domain is checked separately against a
/// complex with [`VertexMap::check_domain`].
pub fn parse_values(text: &str) -> Result<VertexMap, IoError> {
    let mut values = BTreeMap::new();
    for (n, line) in content_lines(text) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [v, w] = fields[..] else {
            return Err(syntax(n, "expected `vertex value`"));
        };
        let v = v
            .parse::<Vertex>()
            .map_err(|_| syntax(n, format!("`{v}` is not a vertex id")))?;
        let w = w
            .parse::<Weight>()
            .map_err(|_| syntax(n, format!("`{w}` is not an integer value")))?;
        if values.insert(v, w).is_some() {
            return Err(syntax(n, format!("vertex {v} given twice")));
        }
    }
    Ok(VertexMap::new(values))
}

pub fn write_values(f: &VertexMap) -> String {
    f.values()
        .iter()
        .map(|(v, w)| format!("{v} {w}\n"))
        .collect()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceDoc {
    base: Vec<String>,
    items: Vec<String>,
    summary: Summary,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
#[serde(deny_unknown_fields)]
struct Summary {
    critical_vector: Vec<usize>,
    items: usize,
}

fn summary(seq: &MorseSequence) -> Summary {
    Summary {
        critical_vector: critical_vector(seq),
        items: seq.len(),
    }
}

pub fn write_sequence(seq: &MorseSequence) -> String {
    let doc = SequenceDoc {
        base: seq.base.iter().map(|s| s.to_string()).collect(),
        items: seq.items.iter().map(|i| i.to_string()).collect(),
        summary: summary(seq),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("sequence documents serialize");
    out.push('\n');
    out
}

fn parse_item(n: usize, text: &str) -> Result<MorseItem, IoError> {
    let bad = || {
        syntax(
            n,
            format!("item `{text}` is neither `C ...` nor `P ... | ...`"),
        )
    };
    let (tag, rest) = text.trim().split_once(' ').ok_or_else(bad)?;
    match tag {
        "C" => Ok(MorseItem::Critical(parse_vertices(n, rest)?)),
        "P" => {
            let (sigma, tau) = rest.split_once('|').ok_or_else(bad)?;
            Ok(MorseItem::Pair(
                parse_vertices(n, sigma)?,
                parse_vertices(n, tau)?,
            ))
        }
        _ => Err(bad()),
    }
}

/// Parses a sequence file. Line numbers in errors are item positions,
/// counted from 1. The summary must agree with the items.
pub fn parse_sequence(text: &str) -> Result<MorseSequence, IoError> {
    let doc: SequenceDoc = serde_json::from_str(text)?;
    let base = doc
        .base
        .iter()
        .enumerate()
        .map(|(i, s)| parse_vertices(i + 1, s))
        .collect::<Result<Vec<_>, _>>()?;
    let items = doc
        .items
        .iter()
        .enumerate()
        .map(|(i, s)| parse_item(i + 1, s))
        .collect::<Result<Vec<_>, _>>()?;
    let seq = MorseSequence::new(SimplexPool::new(base), items);
    let expected = summary(&seq);
    if expected != doc.summary {
        return Err(IoError::Summary(format!(
            "items give critical vector {:?} and {} items, summary says {:?} and {}",
            expected.critical_vector,
            expected.items,
            doc.summary.critical_vector,
            doc.summary.items
        )));
    }
    Ok(seq)
}
