//! Degree sequences in nondecreasing order.
//!
//! Text form is a comma-separated list of terms, each `v` or `v^m`
//! (value `v` repeated `m` times). Parsing sorts, so input order is
//! irrelevant; formatting always emits the canonical sorted form.
//! Positions exposed through [`DegreeSequence::d`] are 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormatStyle {
    Expanded,
    Exponent,
}

/// Why a sequence fails to be graphical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphicalityViolation {
    OddDegreeSum {
        sum: usize,
    },
    /// The Erdős–Gallai inequality fails at prefix length `k` of the
    /// nonincreasing rearrangement.
    ErdosGallai {
        k: usize,
    },
}

impl fmt::Display for GraphicalityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OddDegreeSum { sum } => write!(f, "degree sum {sum} is odd"),
            Self::ErdosGallai { k } => {
                write!(f, "Erdős–Gallai inequality fails at k = {k}")
            }
        }
    }
}

impl DegreeSequence {
    /// Builds a sequence from degrees in any order.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Parse {
                term: String::new(),
                reason: "empty sequence".into(),
            });
        }
        degrees.sort_unstable();
        let n = degrees.len();
        if let Some(&max) = degrees.last() {
            if max > n - 1 {
                return Err(Error::Range(format!(
                    "degree {max} exceeds n - 1 = {} for a sequence of length {n}",
                    n - 1
                )));
            }
        }
        Ok(Self(degrees))
    }

    /// Wraps degrees already known to be sorted and in range.
    pub(crate) fn from_sorted(degrees: Vec<usize>) -> Self {
        debug_assert!(!degrees.is_empty());
        debug_assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(degrees.iter().all(|&d| d < degrees.len()));
        Self(degrees)
    }

    /// Builds the sequence from `(value, multiplicity)` blocks.
    pub fn from_blocks(blocks: &[(usize, usize)]) -> Result<Self> {
        let degrees = blocks.iter().flat_map(|&(v, m)| std::iter::repeat_n(v, m)).collect();
        Self::new(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    /// The degree at 1-based position `i`.
    pub fn d(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn degree_sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Runs of equal values as `(value, multiplicity)`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == d => *m += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    pub fn format(&self, style: FormatStyle) -> String {
        match style {
            FormatStyle::Expanded => self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
            FormatStyle::Exponent => self
                .blocks()
                .into_iter()
                .map(|(v, m)| if m == 1 { v.to_string() } else { format!("{v}^{m}") })
                .collect::<Vec<_>>()
                .join(","),
        }
    }

    /// True iff `self` majorizes `other`, i.e. every degree of `self` is at
    /// least the degree of `other` at the same position.
    pub fn majorizes(&self, other: &Self) -> Result<bool> {
        majorizes(self, other)
    }

    pub fn graphicality_violation(&self) -> Option<GraphicalityViolation> {
        graphicality_violation(&self.0)
    }

    pub fn is_graphical(&self) -> bool {
        self.graphicality_violation().is_none()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(FormatStyle::Exponent))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_sequence(text)
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DegreeSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `v` / `v^m` terms separated by commas into raw values, without
/// sorting or range checks. Shared with partition parsing.
pub(crate) fn parse_terms(text: &str) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse {
            term: text.to_string(),
            reason: "empty input".into(),
        });
    }
    let mut values = Vec::new();
    for raw in trimmed.split(',') {
        let term = raw.trim();
        let bad = |reason: &str| Error::Parse {
            term: term.to_string(),
            reason: reason.to_string(),
        };
        if term.is_empty() {
            return Err(bad("empty term"));
        }
        let (value, mult) = match term.split_once('^') {
            Some((v, m)) => (v.trim(), Some(m.trim())),
            None => (term, None),
        };
        if value.starts_with('-') {
            return Err(bad("negative value"));
        }
        let value: usize = value.parse().map_err(|_| bad("value is not a nonnegative integer"))?;
        let mult = match mult {
            None => 1,
            Some(m) => {
                if m.starts_with('-') {
                    return Err(bad("negative exponent"));
                }
                let m: usize = m.parse().map_err(|_| bad("exponent is not an integer"))?;
                if m == 0 {
                    return Err(bad("zero exponent"));
                }
                m
            }
        };
        values.extend(std::iter::repeat_n(value, mult));
    }
    Ok(values)
}

pub fn parse_sequence(text: &str) -> Result<DegreeSequence> {
    let values = parse_terms(text)?;
    let n = values.len();
    if let Some(&max) = values.iter().max() {
        if max >= n {
            return Err(Error::Parse {
                term: max.to_string(),
                reason: format!("degree exceeds n - 1 = {}", n - 1),
            });
        }
    }
    DegreeSequence::new(values)
}

pub fn format_sequence(seq: &DegreeSequence, style: FormatStyle) -> String {
    seq.format(style)
}

pub fn majorizes(a: &DegreeSequence, b: &DegreeSequence) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| x >= y))
}

fn graphicality_violation(degrees: &[usize]) -> Option<GraphicalityViolation> {
    let sum: usize = degrees.iter().sum();
    if sum % 2 == 1 {
        return Some(GraphicalityViolation::OddDegreeSum { sum });
    }
    let mut desc = degrees.to_vec();
    desc.sort_unstable_by(|a, b| b.cmp(a));
    let n = desc.len();
    let mut prefix = 0usize;
    for k in 1..=n {
        prefix += desc[k - 1];
        let tail: usize = desc[k..].iter().map(|&d| d.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return Some(GraphicalityViolation::ErdosGallai { k });
        }
    }
    None
}

pub fn is_graphical(seq: &DegreeSequence) -> bool {
    seq.is_graphical()
}

/// Havel–Hakimi realization. Vertex `i` (0-based) receives degree
/// `seq.d(i + 1)`.
pub fn realize(seq: &DegreeSequence) -> Result<Graph> {
    if let Some(v) = seq.graphicality_violation() {
        return Err(Error::NotGraphical(v));
    }
    let n = seq.len();
    let mut g = Graph::empty(n)?;
    let mut residual: Vec<usize> = seq.degrees().to_vec();
    // Highest residual first, ties to the higher label.
    while let Some(v) = (0..n).filter(|&v| residual[v] > 0).max_by_key(|&v| (residual[v], v)) {
        let need = residual[v];
        residual[v] = 0;
        let mut others: Vec<usize> = (0..n).filter(|&u| u != v && residual[u] > 0).collect();
        others.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(b.cmp(&a)));
        if others.len() < need {
            return Err(Error::Internal("Havel–Hakimi ran out of partners".into()));
        }
        for &u in &others[..need] {
            residual[u] -= 1;
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}
