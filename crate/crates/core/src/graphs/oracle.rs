//! Exact component order (edge) connectivity by exhaustive search.
//!
//! Both parameters are additive over connected components, so every search
//! runs per component and the witnesses are merged. Within a component the
//! witness is the lexicographically least set of minimum size; merging
//! per-component least witnesses gives the least witness overall because
//! components have disjoint labels.

use serde::Serialize;

use super::{mask_to_vec, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    /// Removed vertices, 0-based, sorted.
    Vertices(Vec<usize>),
    /// Removed edges `(u, v)` with `u < v`, 0-based, sorted.
    Edges(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityResult {
    pub value: usize,
    pub witness: Witness,
}

impl ConnectivityResult {
    /// Largest component order left after removing the witness.
    pub fn residual_max_order(&self, g: &Graph) -> usize {
        match &self.witness {
            Witness::Vertices(x) => g.max_component_order_without_vertices(x),
            Witness::Edges(f) => g.without_edges(f).max_component_order(),
        }
    }
}

/// Calls `f` on every `r`-subset of `0..m` in lexicographic order until it
/// returns true. Returns whether `f` ever did.
fn first_combination(m: usize, r: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if r > m {
        return false;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if f(&idx) {
            return true;
        }
        // Rightmost position that can still move right.
        let mut i = r;
        while i > 0 && idx[i - 1] == i - 1 + m - r {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let i = i - 1;
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn large_components(g: &Graph, k: usize) -> Vec<u64> {
    g.component_masks(g.full_mask())
        .into_iter()
        .filter(|m| m.count_ones() as usize >= k)
        .collect()
}

fn fits(g: &Graph, alive: u64, k: usize) -> bool {
    g.component_masks(alive)
        .into_iter()
        .all(|m| (m.count_ones() as usize) < k)
}

/// `κ_c^{(k)}` if it is at most `limit`, searching removal sets by
/// increasing size.
pub fn kappa_c_at_most(g: &Graph, k: usize, limit: usize) -> Option<ConnectivityResult> {
    assert!(k >= 2, "k must be at least 2");
    let mut witness = Vec::new();
    for comp in large_components(g, k) {
        let verts = mask_to_vec(comp);
        let budget = limit - witness.len();
        let mut found = None;
        for r in 0..=budget.min(verts.len()) {
            let hit = first_combination(verts.len(), r, |idx| {
                let mut alive = comp;
                for &i in idx {
                    alive &= !(1 << verts[i]);
                }
                if fits(g, alive, k) {
                    found = Some(idx.iter().map(|&i| verts[i]).collect::<Vec<_>>());
                    true
                } else {
                    false
                }
            });
            if hit {
                break;
            }
        }
        witness.extend(found?);
    }
    witness.sort_unstable();
    Some(ConnectivityResult {
        value: witness.len(),
        witness: Witness::Vertices(witness),
    })
}

/// Exact `κ_c^{(k)}` with the least minimum witness.
pub fn kappa_c(g: &Graph, k: usize) -> ConnectivityResult {
    kappa_c_at_most(g, k, g.vertex_count()).expect("removing every vertex always works")
}

fn component_edges(g: &Graph, comp: u64) -> Vec<(usize, usize)> {
    g.edges().into_iter().filter(|&(u, _)| comp >> u & 1 == 1).collect()
}

/// `λ_c^{(k)}` if it is at most `limit`, searching edge subsets by
/// increasing size.
pub fn lambda_c_at_most(g: &Graph, k: usize, limit: usize) -> Option<ConnectivityResult> {
    assert!(k >= 2, "k must be at least 2");
    let mut witness = Vec::new();
    for comp in large_components(g, k) {
        let edges = component_edges(g, comp);
        let budget = limit - witness.len();
        let mut found = None;
        for r in 0..=budget.min(edges.len()) {
            let hit = first_combination(edges.len(), r, |idx| {
                let removed: Vec<_> = idx.iter().map(|&i| edges[i]).collect();
                if fits(&g.without_edges(&removed), comp, k) {
                    found = Some(removed);
                    true
                } else {
                    false
                }
            });
            if hit {
                break;
            }
        }
        witness.extend(found?);
    }
    witness.sort_unstable();
    Some(ConnectivityResult {
        value: witness.len(),
        witness: Witness::Edges(witness),
    })
}

/// Exact `λ_c^{(k)}` with the least minimum witness.
///
/// A minimum edge set is exactly the set of edges crossing some partition
/// of the vertices into blocks of order at most `k - 1`, so this runs a
/// branch and bound over such vertex partitions (restricted growth
/// strings) instead of over edge subsets.
pub fn lambda_c(g: &Graph, k: usize) -> ConnectivityResult {
    assert!(k >= 2, "k must be at least 2");
    let mut witness = Vec::new();
    for comp in large_components(g, k) {
        witness.extend(min_block_cut(g, comp, k));
    }
    witness.sort_unstable();
    ConnectivityResult {
        value: witness.len(),
        witness: Witness::Edges(witness),
    }
}

struct BlockSearch<'a> {
    g: &'a Graph,
    verts: Vec<usize>,
    cap: usize,
    block_of: Vec<usize>,
    block_sizes: Vec<usize>,
    best_cost: usize,
    best_cut: Vec<(usize, usize)>,
}

impl BlockSearch<'_> {
    fn cut(&self) -> Vec<(usize, usize)> {
        let mut cut = Vec::new();
        for (i, &u) in self.verts.iter().enumerate() {
            for (j, &v) in self.verts.iter().enumerate().skip(i + 1) {
                if self.block_of[i] != self.block_of[j] && self.g.has_edge(u, v) {
                    cut.push((u, v));
                }
            }
        }
        cut
    }

    fn run(&mut self, i: usize, cost: usize) {
        if cost > self.best_cost {
            return;
        }
        if i == self.verts.len() {
            let cut = self.cut();
            if cost < self.best_cost || cut < self.best_cut {
                self.best_cost = cost;
                self.best_cut = cut;
            }
            return;
        }
        let v = self.verts[i];
        let open = self.block_sizes.len();
        for b in 0..=open {
            if b < open && self.block_sizes[b] >= self.cap {
                continue;
            }
            // Edges from v back to earlier vertices in other blocks.
            let added = (0..i)
                .filter(|&j| self.block_of[j] != b && self.g.has_edge(v, self.verts[j]))
                .count();
            if b == open {
                self.block_sizes.push(0);
            }
            self.block_sizes[b] += 1;
            self.block_of[i] = b;
            self.run(i + 1, cost + added);
            self.block_sizes[b] -= 1;
            if b == open {
                self.block_sizes.pop();
            }
        }
    }
}

fn min_block_cut(g: &Graph, comp: u64, k: usize) -> Vec<(usize, usize)> {
    let verts = mask_to_vec(comp);
    let all = component_edges(g, comp);
    let mut search = BlockSearch {
        g,
        block_of: vec![usize::MAX; verts.len()],
        verts,
        cap: k - 1,
        block_sizes: Vec::new(),
        best_cost: all.len(),
        best_cut: all,
    };
    search.run(0, 0);
    search.best_cut
}
