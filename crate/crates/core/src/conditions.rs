//! Chvátal-type conditions and best-monotone theorems.
//!
//! A condition is a disjunction of atoms `d_i ≥ t` with 1-based `i`. The
//! condition built from a sink is the weakest one it fails; a theorem is
//! the conjunction of these conditions over the full sink set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::degree_seq::DegreeSequence;
use crate::error::{range, Error, Result};
use crate::partitions::Partition;
use crate::property::{Property, Variant};
use crate::sinks::{sinks_for, Provenance, SinkRecord};

/// `d_index ≥ threshold`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Atom {
    #[serde(rename = "i")]
    pub index: usize,
    #[serde(rename = "ge")]
    pub threshold: usize,
}

impl Atom {
    pub fn new(index: usize, threshold: usize) -> Self {
        Self { index, threshold }
    }

    pub fn holds(&self, seq: &DegreeSequence) -> bool {
        seq.d(self.index) >= self.threshold
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChvatalCondition {
    pub n: usize,
    pub atoms: Vec<Atom>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sink: Option<DegreeSequence>,
}

impl ChvatalCondition {
    /// An empty disjunction: nothing satisfies it. Only arises from the
    /// sink `(n-1)^n`.
    pub fn is_unsatisfiable(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn satisfies(&self, seq: &DegreeSequence) -> Result<bool> {
        satisfies(seq, self)
    }

    /// Implication form: all but the last atom negated on the left.
    pub fn implication(&self) -> String {
        match self.atoms.split_last() {
            None => "false".to_string(),
            Some((last, [])) => format!("d_{} >= {}", last.index, last.threshold),
            Some((last, rest)) => {
                let lhs: Vec<String> = rest
                    .iter()
                    .map(|a| format!("d_{} <= {}", a.index, a.threshold - 1))
                    .collect();
                format!("{} => d_{} >= {}", lhs.join(" and "), last.index, last.threshold)
            }
        }
    }
}

impl fmt::Display for ChvatalCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("false");
        }
        let parts: Vec<String> = self
            .atoms
            .iter()
            .map(|a| format!("d_{} >= {}", a.index, a.threshold))
            .collect();
        f.write_str(&parts.join(" or "))
    }
}

/// The simplified condition blocking `sink`: atoms `(i, d_i + 1)`, keeping
/// only the last index of each run of equal degrees and dropping
/// thresholds `≥ n`.
pub fn blocking_condition(sink: &DegreeSequence) -> ChvatalCondition {
    let n = sink.len();
    let mut atoms = Vec::new();
    let mut end = 0;
    for (value, mult) in sink.blocks() {
        end += mult;
        let threshold = value + 1;
        if threshold < n {
            atoms.push(Atom::new(end, threshold));
        }
    }
    debug_assert!(atoms.iter().all(|a| a.threshold >= 1));
    ChvatalCondition {
        n,
        atoms,
        sink: Some(sink.clone()),
    }
}

pub fn satisfies(seq: &DegreeSequence, cond: &ChvatalCondition) -> Result<bool> {
    if seq.len() != cond.n {
        return Err(Error::LengthMismatch {
            left: seq.len(),
            right: cond.n,
        });
    }
    Ok(cond.atoms.iter().any(|a| a.holds(seq)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotoneTheorem {
    pub property: Property,
    pub conditions: Vec<ChvatalCondition>,
    #[serde(skip)]
    pub sinks: Vec<SinkRecord>,
}

/// Atoms the vertex-variant condition must carry for a sink partition:
/// `(m_j, h_j + s - 1)` for every distinct part value but the largest,
/// then `(n - s + 1, h_ℓ + s - 1)` unless that threshold reaches `n`.
pub fn vertex_condition_atoms(n: usize, s: usize, partition: &Partition) -> Vec<Atom> {
    let blocks = partition.blocks();
    let mut atoms = Vec::new();
    let mut m = 0;
    for &(h, c) in &blocks[..blocks.len() - 1] {
        m += c * h;
        atoms.push(Atom::new(m, h + s - 1));
    }
    let top = blocks.last().unwrap().0 + s - 1;
    if top < n {
        atoms.push(Atom::new(n - s + 1, top));
    }
    atoms
}

pub fn best_monotone(n: usize, k: usize, s: usize, variant: Variant) -> Result<MonotoneTheorem> {
    let property = Property { k, s, variant, n };
    let sinks = sinks_for(property)?;
    let mut conditions = Vec::with_capacity(sinks.len());
    for sink in &sinks {
        let cond = blocking_condition(&sink.sequence);
        if let Provenance::Join { partition, .. } = &sink.provenance {
            let expected = vertex_condition_atoms(n, s, partition);
            if cond.atoms != expected {
                return Err(Error::Internal(format!(
                    "condition for sink {} has atoms {:?}, expected {:?}",
                    sink.sequence, cond.atoms, expected
                )));
            }
        }
        conditions.push(cond);
    }
    Ok(MonotoneTheorem {
        property,
        conditions,
        sinks,
    })
}

/// A sink whose condition the sequence fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Blocker {
    pub sink: SinkRecord,
    pub condition: ChvatalCondition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    ForciblyP,
    Blocked { blockers: Vec<Blocker> },
}

impl Verdict {
    pub fn is_forcibly(&self) -> bool {
        matches!(self, Verdict::ForciblyP)
    }

    pub fn blockers(&self) -> &[Blocker] {
        match self {
            Verdict::ForciblyP => &[],
            Verdict::Blocked { blockers } => blockers,
        }
    }
}

fn check_input(seq: &DegreeSequence, n: usize) -> Result<()> {
    if seq.len() != n {
        return Err(Error::LengthMismatch {
            left: seq.len(),
            right: n,
        });
    }
    if let Some(v) = seq.graphicality_violation() {
        return Err(Error::NotGraphical(v));
    }
    Ok(())
}

/// Evaluates every condition of the theorem and lists all failing ones.
pub fn declare(seq: &DegreeSequence, thm: &MonotoneTheorem) -> Result<Verdict> {
    check_input(seq, thm.property.n)?;
    let mut blockers = Vec::new();
    for (sink, cond) in thm.sinks.iter().zip(&thm.conditions) {
        if !satisfies(seq, cond)? {
            blockers.push(Blocker {
                sink: sink.clone(),
                condition: cond.clone(),
            });
        }
    }
    Ok(if blockers.is_empty() {
        Verdict::ForciblyP
    } else {
        Verdict::Blocked { blockers }
    })
}

/// Same verdict computed directly from majorization by the sinks, without
/// going through the conditions.
pub fn declare_by_majorization(seq: &DegreeSequence, thm: &MonotoneTheorem) -> Result<Verdict> {
    check_input(seq, thm.property.n)?;
    let mut blockers = Vec::new();
    for (sink, cond) in thm.sinks.iter().zip(&thm.conditions) {
        if sink.sequence.majorizes(seq)? {
            blockers.push(Blocker {
                sink: sink.clone(),
                condition: cond.clone(),
            });
        }
    }
    Ok(if blockers.is_empty() {
        Verdict::ForciblyP
    } else {
        Verdict::Blocked { blockers }
    })
}

/// `d_{n-s+1} ≥ k + s - 2` implies k-component order s-connected.
pub fn simple_vertex_test(seq: &DegreeSequence, k: usize, s: usize) -> Result<bool> {
    let n = seq.len();
    if k < 2 || k > n {
        return Err(range(format!("need 2 <= k <= n = {n}, got k = {k}")));
    }
    if s < 1 || s > n - k + 1 {
        return Err(range(format!("need 1 <= s <= n - k + 1 = {}, got s = {s}", n - k + 1)));
    }
    Ok(seq.d(n - s + 1) >= k + s - 2)
}

/// `d_{n-2s+2} ≤ k-2 ⇒ d_n ≥ k+s-2` implies k-component order s-edge
/// connected.
pub fn simple_edge_test(seq: &DegreeSequence, k: usize, s: usize) -> Result<bool> {
    let n = seq.len();
    if k < 2 || k > n {
        return Err(range(format!("need n >= k >= 2, got n = {n}, k = {k}")));
    }
    if s < 1 || 2 * s > n + 1 {
        return Err(range(format!("need 1 <= s <= (n+1)/2, got s = {s} with n = {n}")));
    }
    Ok(seq.d(n + 2 - 2 * s) >= k - 1 || seq.d(n) >= k + s - 2)
}
