//! Sink degree sequences: the maximal non-forcibly-P sequences under
//! majorization, each tied to the extremal graph that realizes it.
//!
//! Every generator returns its list sorted by sequence and checks that the
//! list is an antichain under majorization before returning.

use serde::Serialize;

use crate::degree_seq::DegreeSequence;
use crate::error::{range, Error, Result};
use crate::graphs::{add_cross_edge, clique_union, join_clique, Graph};
use crate::partitions::{enumerate_sink_partitions, partitions_of, Partition};
use crate::property::{Property, Variant};

/// How a sink's extremal graph is built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// `K_{join} + (K_{h_1} ∪ … ∪ K_{h_ω})`.
    Join { join: usize, partition: Partition },
    /// `K_{h_1} ∪ … ∪ K_{h_ω}`.
    CliqueUnion { partition: Partition },
    /// Clique union plus one edge between components of the given orders.
    CrossEdge { partition: Partition, edge: (usize, usize) },
    /// `K_r ∪ 2m K_{k-1}` plus stars from one half of the cliques into the
    /// other, one star per part of `split`.
    Stars { partition: Partition, split: Partition },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SinkRecord {
    pub sequence: DegreeSequence,
    pub property: Property,
    pub provenance: Provenance,
}

impl SinkRecord {
    /// Rebuilds the extremal graph described by the provenance.
    pub fn extremal_graph(&self) -> Result<Graph> {
        match &self.provenance {
            Provenance::Join { join, partition } => join_clique(*join, partition),
            Provenance::CliqueUnion { partition } => clique_union(partition),
            Provenance::CrossEdge { partition, edge } => cross_edge_graph(partition, *edge),
            Provenance::Stars { partition, split } => {
                let k = self.property.k;
                let big = partition.parts().iter().filter(|&&h| h == k - 1).count();
                let r = partition.total() - big * (k - 1);
                stars_graph(k, big / 2, r, split)
            }
        }
    }
}

fn cross_edge_graph(partition: &Partition, (ha, hb): (usize, usize)) -> Result<Graph> {
    let parts = partition.parts();
    let first = |h: usize| parts.iter().position(|&x| x == h);
    let a = first(ha).ok_or_else(|| Error::Contract(format!("no component of order {ha}")))?;
    let b = if ha == hb {
        a + 1
    } else {
        first(hb).ok_or_else(|| Error::Contract(format!("no component of order {hb}")))?
    };
    if b >= parts.len() || parts[b] != hb {
        return Err(Error::Contract(format!("need two components of order {hb}")));
    }
    // Blocks are laid out in part order, which is also the by-size listing.
    add_cross_edge(&clique_union(partition)?, a, b)
}

fn sort_and_check(mut records: Vec<SinkRecord>) -> Result<Vec<SinkRecord>> {
    records.sort_by(|a, b| a.sequence.cmp(&b.sequence));
    records.dedup_by(|a, b| a.sequence == b.sequence);
    check_antichain(&records)?;
    Ok(records)
}

/// Fails if any two records are comparable under majorization.
pub fn check_antichain(records: &[SinkRecord]) -> Result<()> {
    for (i, a) in records.iter().enumerate() {
        for b in &records[i + 1..] {
            if a.sequence.majorizes(&b.sequence)? || b.sequence.majorizes(&a.sequence)? {
                return Err(Error::Internal(format!(
                    "sinks {} and {} are comparable",
                    a.sequence, b.sequence
                )));
            }
        }
    }
    Ok(())
}

/// Sinks for k-component order s-connected on n vertices:
/// `(h_1+s-2)^{h_1} … (h_ω+s-2)^{h_ω} (n-1)^{s-1}` over the sink
/// partitions of `n - s + 1`.
pub fn vertex_sinks(n: usize, k: usize, s: usize) -> Result<Vec<SinkRecord>> {
    if k < 2 || n < k {
        return Err(range(format!("need n >= k >= 2, got n = {n}, k = {k}")));
    }
    if s < 1 || s > n - k + 2 {
        return Err(range(format!("need 1 <= s <= n - k + 2 = {}, got s = {s}", n - k + 2)));
    }
    let property = Property {
        k,
        s,
        variant: Variant::Vertex,
        n,
    };
    let records = enumerate_sink_partitions(n - s + 1, k)?
        .into_iter()
        .map(|partition| SinkRecord {
            sequence: partition.clique_degree_sequence(s),
            property,
            provenance: Provenance::Join { join: s - 1, partition },
        })
        .collect();
    sort_and_check(records)
}

/// Sinks for k-component order 1-edge connected: the clique unions over
/// the sink partitions of `n`.
pub fn edge1_sinks(n: usize, k: usize) -> Result<Vec<SinkRecord>> {
    let mut records = vertex_sinks(n, k, 1)?;
    for r in &mut records {
        r.property.variant = Variant::Edge;
        if let Provenance::Join { partition, .. } = &r.provenance {
            r.provenance = Provenance::CliqueUnion {
                partition: partition.clone(),
            };
        }
    }
    Ok(records)
}

/// A clique union plus one cross edge, before the exception filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge2Candidate {
    pub sequence: DegreeSequence,
    pub partition: Partition,
    pub edge: (usize, usize),
    pub excluded: bool,
}

/// Every `H + e` with `H` a sink clique union and `e` joining two
/// components, one per distinct pair of component orders.
///
/// A candidate is excluded when `k ≥ 4`, `n ≡ 1 (mod k-1)`, the smallest
/// component of `H` is `K_2`, and at most one endpoint of `e` lies in a
/// `K_{k-1}`.
pub fn edge2_candidates(n: usize, k: usize) -> Result<Vec<Edge2Candidate>> {
    if k < 2 || n < k {
        return Err(range(format!("need n >= k >= 2, got n = {n}, k = {k}")));
    }
    let mut out = Vec::new();
    for partition in enumerate_sink_partitions(n, k)? {
        let blocks = partition.blocks();
        for (i, &(ha, ca)) in blocks.iter().enumerate() {
            for &(hb, _) in &blocks[i..] {
                if ha == hb && ca < 2 {
                    continue;
                }
                let mut degrees: Vec<usize> = partition
                    .parts()
                    .iter()
                    .flat_map(|&h| std::iter::repeat_n(h - 1, h))
                    .collect();
                // One vertex of each endpoint component gains a neighbor.
                let pos_a = degrees.iter().position(|&d| d == ha - 1).unwrap();
                let pos_b = (0..degrees.len())
                    .find(|&p| p != pos_a && degrees[p] == hb - 1)
                    .unwrap();
                degrees[pos_a] += 1;
                degrees[pos_b] += 1;
                degrees.sort_unstable();
                let in_big = usize::from(ha == k - 1) + usize::from(hb == k - 1);
                let excluded = k >= 4 && n % (k - 1) == 1 && partition.smallest() == 2 && in_big <= 1;
                out.push(Edge2Candidate {
                    sequence: DegreeSequence::from_sorted(degrees),
                    partition: partition.clone(),
                    edge: (ha, hb),
                    excluded,
                });
            }
        }
    }
    Ok(out)
}

/// Sinks for k-component order 2-edge connected.
pub fn edge2_sinks(n: usize, k: usize) -> Result<Vec<SinkRecord>> {
    let property = Property {
        k,
        s: 2,
        variant: Variant::Edge,
        n,
    };
    let records = edge2_candidates(n, k)?
        .into_iter()
        .filter(|c| !c.excluded)
        .map(|c| SinkRecord {
            sequence: c.sequence,
            property,
            provenance: Provenance::CrossEdge {
                partition: c.partition,
                edge: c.edge,
            },
        })
        .collect();
    sort_and_check(records)
}

/// Parameters `(m, r)` with `n = 2m(k-1) + r`, validated against the
/// lower-bound construction's constraints.
pub fn lower_bound_parameters(n: usize, k: usize, s: usize) -> Result<(usize, usize)> {
    if k < 3 || s < 3 {
        return Err(range(format!("need k >= 3 and s >= 3, got k = {k}, s = {s}")));
    }
    let period = 2 * (k - 1);
    let (m, r) = (n / period, n % period);
    if r > k - 2 {
        return Err(range(format!(
            "n = {n} is not 2m(k-1) + r with 0 <= r <= k - 2 (remainder {r} mod {period})"
        )));
    }
    if m * (k - 1) < s - 1 {
        return Err(range(format!(
            "need m >= (s-1)/(k-1): m = {m}, s - 1 = {}, k - 1 = {}",
            s - 1,
            k - 1
        )));
    }
    if n < 2 * (s - 1) {
        return Err(range(format!("need n >= 2(s-1) = {}, got n = {n}", 2 * (s - 1))));
    }
    Ok((m, r))
}

/// `K_r ∪ X ∪ Y` with `X`, `Y` each `m` copies of `K_{k-1}`; part `i` of
/// `split` adds a star from anchor `x_i ∈ X` to `a_i` fresh vertices of
/// `Y`. Anchors go to distinct cliques of `X` first, left to right.
fn stars_graph(k: usize, m: usize, r: usize, split: &Partition) -> Result<Graph> {
    let mut parts = Vec::new();
    if r > 0 {
        parts.push(r);
    }
    parts.extend(std::iter::repeat_n(k - 1, 2 * m));
    let mut g = clique_union(&Partition::new(parts)?)?;
    let x_start = r;
    let y_start = r + m * (k - 1);
    let mut next_y = y_start;
    for (i, &a) in split.parts().iter().enumerate() {
        let anchor = x_start + (i % m) * (k - 1) + i / m;
        for _ in 0..a {
            g.add_edge(anchor, next_y)?;
            next_y += 1;
        }
    }
    Ok(g)
}

/// `p(s-1)` pairwise incomparable sinks for k-component order s-edge
/// connected, one per partition of `s - 1`.
pub fn edge_lower_bound_family(n: usize, k: usize, s: usize) -> Result<Vec<SinkRecord>> {
    let (m, r) = lower_bound_parameters(n, k, s)?;
    let property = Property {
        k,
        s,
        variant: Variant::Edge,
        n,
    };
    let mut parts = Vec::new();
    if r > 0 {
        parts.push(r);
    }
    parts.extend(std::iter::repeat_n(k - 1, 2 * m));
    let partition = Partition::new(parts)?;
    let mut records = Vec::new();
    for split in partitions_of(s - 1) {
        let g = stars_graph(k, m, r, &split)?;
        records.push(SinkRecord {
            sequence: g.degree_sequence(),
            property,
            provenance: Provenance::Stars {
                partition: partition.clone(),
                split,
            },
        });
    }
    let before = records.len();
    let records = sort_and_check(records)?;
    if records.len() != before {
        return Err(Error::Internal(
            "lower-bound family produced duplicate sequences".into(),
        ));
    }
    Ok(records)
}

/// Complete sink set for a supported property.
pub fn sinks_for(property: Property) -> Result<Vec<SinkRecord>> {
    let Property { k, s, variant, n } = property;
    match (variant, s) {
        (Variant::Vertex, _) => vertex_sinks(n, k, s),
        (Variant::Edge, 1) => edge1_sinks(n, k),
        (Variant::Edge, 2) => edge2_sinks(n, k),
        (Variant::Edge, _) => Err(Error::Unsupported(format!(
            "complete sink sets for s-edge connectivity are only generated for s <= 2 \
             (s = {s}); the sink count grows at least like the partition number p(s-1)"
        ))),
    }
}
