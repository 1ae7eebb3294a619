//! Small simple graphs, extremal-graph builders, and exact oracles.
//!
//! Vertices are `0..n` internally and `1..=n` in the text file format.
//! Adjacency is a bitmask per vertex, so graphs are limited to
//! [`MAX_VERTICES`] vertices.

mod oracle;
mod realizations;

use std::fmt::Write as _;

use crate::degree_seq::DegreeSequence;
use crate::error::{contract, Error, Result};
use crate::partitions::Partition;

pub use oracle::{kappa_c, kappa_c_at_most, lambda_c, lambda_c_at_most, ConnectivityResult, Witness};
pub use realizations::{
    enumerate_realizations, find_counterexample, for_each_realization, is_forcibly, DEFAULT_REALIZATION_CAP,
};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Resource(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Adds `{u, v}`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(contract(format!("edge ({u}, {v}) out of range for n = {}", self.n)));
        }
        if u == v {
            return Err(contract(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut higher = self.adj[u] >> (u + 1);
            let mut v = u + 1;
            while higher != 0 {
                if higher & 1 == 1 {
                    out.push((u, v));
                }
                higher >>= 1;
                v += 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sum(&self) -> usize {
        2 * self.edge_count()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable();
        DegreeSequence::from_sorted(d)
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Connected components of the subgraph induced on `alive`, as masks.
    pub(crate) fn component_masks(&self, alive: u64) -> Vec<u64> {
        let mut rest = alive;
        let mut out = Vec::new();
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & alive & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    /// Components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks(self.full_mask())
            .into_iter()
            .map(mask_to_vec)
            .collect()
    }

    /// Components ordered by nondecreasing order, ties by smallest vertex.
    pub fn components_by_size(&self) -> Vec<Vec<usize>> {
        let mut comps = self.components();
        comps.sort_by_key(|c| (c.len(), c[0]));
        comps
    }

    pub fn max_component_order(&self) -> usize {
        self.component_masks(self.full_mask())
            .into_iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in removed {
            g.adj[u] &= !(1 << v);
            g.adj[v] &= !(1 << u);
        }
        g
    }

    /// Largest component order after deleting the vertices in `removed`.
    pub fn max_component_order_without_vertices(&self, removed: &[usize]) -> usize {
        let mut alive = self.full_mask();
        for &v in removed {
            alive &= !(1 << v);
        }
        self.component_masks(alive)
            .into_iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Edges not present in the graph, `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Writes the graph in the `n m` / `u v` text format with 1-based labels.
    pub fn to_file_format(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            writeln!(out, "{} {}", u + 1, v + 1).unwrap();
        }
        out
    }

    /// Parses the text format. Lines starting with `#` and blank lines are
    /// skipped.
    pub fn from_file_format(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line: usize, reason: &str| Error::GraphFormat {
            line,
            reason: reason.to_string(),
        };
        let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing `n m` header"))?;
        let nums = parse_pair(header).ok_or_else(|| bad(hline, "header must be two integers `n m`"))?;
        let (n, m) = nums;
        if n > MAX_VERTICES {
            return Err(bad(hline, &format!("n = {n} exceeds the {MAX_VERTICES}-vertex limit")));
        }
        let mut g = Graph::empty(n)?;
        let mut seen = 0usize;
        for (lineno, line) in lines {
            let (u, v) = parse_pair(line).ok_or_else(|| bad(lineno, "edge line must be two integers `u v`"))?;
            if !(1 <= u && u < v && v <= n) {
                return Err(bad(lineno, &format!("edge ({u}, {v}) violates 1 <= u < v <= n")));
            }
            if g.has_edge(u - 1, v - 1) {
                return Err(bad(lineno, &format!("duplicate edge ({u}, {v})")));
            }
            g.add_edge(u - 1, v - 1)?;
            seen += 1;
        }
        if seen != m {
            return Err(bad(hline, &format!("header declares {m} edges but {seen} were listed")));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub(crate) fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// `K_{h_1} ∪ … ∪ K_{h_ω}` with blocks laid out in part order.
pub fn clique_union(parts: &Partition) -> Result<Graph> {
    join_clique(0, parts)
}

/// `K_{s-1} + (K_{h_1} ∪ … ∪ K_{h_ω})`. The clique blocks come first, the
/// `s_minus_1` join vertices take the highest labels.
pub fn join_clique(s_minus_1: usize, parts: &Partition) -> Result<Graph> {
    let n = parts.total() + s_minus_1;
    let mut g = Graph::empty(n)?;
    let mut start = 0;
    for &h in parts.parts() {
        for u in start..start + h {
            for v in u + 1..start + h {
                g.add_edge(u, v)?;
            }
        }
        start += h;
    }
    for j in start..n {
        for v in 0..n {
            if v != j {
                g.add_edge(j, v)?;
            }
        }
    }
    Ok(g)
}

/// Adds one edge between the first vertices of two components, indexed in
/// the [`Graph::components_by_size`] listing (0-based).
pub fn add_cross_edge(g: &Graph, comp_a: usize, comp_b: usize) -> Result<Graph> {
    let comps = g.components_by_size();
    if comps.len() < 2 {
        return Err(contract("graph needs at least two components"));
    }
    if comp_a == comp_b {
        return Err(contract("component indices must differ"));
    }
    if comp_a >= comps.len() || comp_b >= comps.len() {
        return Err(contract(format!(
            "component index out of range (graph has {} components)",
            comps.len()
        )));
    }
    let mut out = g.clone();
    out.add_edge(comps[comp_a][0], comps[comp_b][0])?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn seq(text: &str) -> DegreeSequence {
        text.parse().unwrap()
    }

    #[test]
    fn clique_union_examples() {
        let g = clique_union(&p("2+2+2")).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree_sequence(), seq("1^6"));
        assert_eq!(clique_union(&p("1+3+3")).unwrap().degree_sequence(), seq("0,2^6"));
        let g = clique_union(&p("3,4^7,5")).unwrap();
        assert_eq!(g.vertex_count(), 36);
        assert_eq!(g.degree_sequence(), seq("2^3,3^28,4^5"));
    }

    #[test]
    fn join_clique_examples() {
        assert_eq!(join_clique(2, &p("1+1+1+1")).unwrap().degree_sequence(), seq("2^4,5^2"));
        assert_eq!(join_clique(0, &p("2+3")).unwrap(), clique_union(&p("2+3")).unwrap());
        let g = join_clique(1, &p("2+4")).unwrap();
        assert_eq!(g.degree_sequence().degrees(), &[2, 2, 4, 4, 4, 4, 6]);
    }

    #[test]
    fn cross_edge_examples() {
        let h = clique_union(&p("1+2+2+2")).unwrap();
        let g = add_cross_edge(&h, 0, 1).unwrap();
        assert_eq!(g.degree_sequence(), seq("1^6,2"));
        let g = add_cross_edge(&h, 1, 2).unwrap();
        assert_eq!(g.degree_sequence(), seq("0,1^4,2^2"));
        assert_eq!(g.degree_sum(), h.degree_sum() + 2);
        let h = clique_union(&p("2^4")).unwrap();
        assert_eq!(add_cross_edge(&h, 0, 3).unwrap().degree_sequence(), seq("1^6,2^2"));
        assert!(add_cross_edge(&h, 1, 1).is_err());
        assert!(add_cross_edge(&h, 0, 4).is_err());
        assert!(add_cross_edge(&Graph::complete(3).unwrap(), 0, 1).is_err());
    }

    #[test]
    fn file_format_round_trip() {
        let g = join_clique(1, &p("2+4")).unwrap();
        let text = g.to_file_format();
        assert_eq!(Graph::from_file_format(&text).unwrap(), g);
        let with_comments = "# a path\n3 2\n1 2\n\n# middle\n2 3\n";
        let g = Graph::from_file_format(with_comments).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn file_format_errors_carry_line_numbers() {
        let cases = [
            ("3 1\n2 1\n", 2),
            ("3 1\n1 4\n", 2),
            ("3 2\n1 2\n1 2\n", 3),
            ("3 x\n", 1),
            ("# c\n3 2\n1 2\n", 2),
            ("", 1),
        ];
        for (text, line) in cases {
            match Graph::from_file_format(text) {
                Err(Error::GraphFormat { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
