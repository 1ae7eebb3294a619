//! Brute-force reference implementations. These work on raw adjacency
//! bitmasks and plain vectors and never call the algorithms they check.
#![allow(dead_code)]

use coc_core::Graph;

pub fn adjacency(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v))
        .collect()
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The labeled graph on `n` vertices whose edge set is `mask` over [`pairs`].
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

pub fn edges(adj: &[u64]) -> Vec<(usize, usize)> {
    pairs(adj.len())
        .into_iter()
        .filter(|&(u, v)| adj[u] >> v & 1 == 1)
        .collect()
}

pub fn degrees(adj: &[u64]) -> Vec<usize> {
    adj.iter().map(|m| m.count_ones() as usize).collect()
}

pub fn sorted_degrees(adj: &[u64]) -> Vec<usize> {
    let mut d = degrees(adj);
    d.sort_unstable();
    d
}

/// Largest component order among the `alive` vertices.
pub fn max_order(adj: &[u64], alive: u64) -> usize {
    let mut left = alive;
    let mut best = 0;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= !comp;
        best = best.max(comp.count_ones() as usize);
    }
    best
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn without_edges(adj: &[u64], removed: &[(usize, usize)]) -> Vec<u64> {
    let mut out = adj.to_vec();
    for &(u, v) in removed {
        out[u] &= !(1 << v);
        out[v] &= !(1 << u);
    }
    out
}

/// Minimum number of vertices whose removal leaves every component with
/// fewer than `k` vertices, over all `2^n` removal sets.
pub fn kappa_brute(adj: &[u64], k: usize) -> usize {
    let n = adj.len();
    (0..=full(n))
        .filter(|&removed| max_order(adj, full(n) & !removed) < k)
        .map(|removed| removed.count_ones() as usize)
        .min()
        .unwrap()
}

/// Edge analogue of [`kappa_brute`], over all `2^m` edge subsets.
pub fn lambda_brute(adj: &[u64], k: usize) -> usize {
    let e = edges(adj);
    assert!(e.len() <= 22, "too many edges for brute force");
    let all = full(adj.len());
    (0..1u64 << e.len())
        .filter(|&mask| {
            let removed: Vec<_> = (0..e.len()).filter(|&i| mask >> i & 1 == 1).map(|i| e[i]).collect();
            max_order(&without_edges(adj, &removed), all) < k
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// Calls `f` on every subset of `0..m` with at most `r` elements until it
/// returns true.
pub fn any_subset(m: usize, r: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, m: usize, r: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if f(cur) {
            return true;
        }
        if cur.len() == r {
            return false;
        }
        for i in start..m {
            cur.push(i);
            if rec(i + 1, m, r, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, m, r, &mut Vec::new(), f)
}

/// Whether removing at most `limit` vertices can break every component
/// below order `k`.
pub fn vertex_cut_within(adj: &[u64], k: usize, limit: usize) -> bool {
    let n = adj.len();
    any_subset(n, limit, &mut |set| {
        let removed = set.iter().fold(0u64, |m, &v| m | 1 << v);
        max_order(adj, full(n) & !removed) < k
    })
}

pub fn edge_cut_within(adj: &[u64], k: usize, limit: usize) -> bool {
    let e = edges(adj);
    let all = full(adj.len());
    any_subset(e.len(), limit, &mut |set| {
        let removed: Vec<_> = set.iter().map(|&i| e[i]).collect();
        max_order(&without_edges(adj, &removed), all) < k
    })
}

/// Nondecreasing vectors of length `n` with entries in `0..n`.
pub fn nondecreasing(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in min..n {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut out);
    out
}

/// Every partition of `total` as a nondecreasing vector.
pub fn all_partitions(total: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let mut p = cur.clone();
            p.reverse();
            out.push(p);
            return;
        }
        for h in (1..=max.min(left)).rev() {
            cur.push(h);
            rec(left - h, h, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

/// Elementwise `a ≥ b` on equal-length nondecreasing vectors.
pub fn majorizes(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x >= y)
}

/// Sorted degree sequences of every labeled graph on `n` vertices.
pub fn graphical_by_enumeration(n: usize) -> std::collections::BTreeSet<Vec<usize>> {
    let p = pairs(n);
    (0..1u64 << p.len())
        .map(|mask| sorted_degrees(&graph_from_mask(n, &p, mask)))
        .collect()
}

/// Clique-union (plus `s - 1` universal vertices) degrees, computed from
/// scratch.
pub fn join_degrees(parts: &[usize], s: usize) -> Vec<usize> {
    let n: usize = parts.iter().sum::<usize>() + s - 1;
    let mut d: Vec<usize> = parts.iter().flat_map(|&h| vec![h - 1 + s - 1; h]).collect();
    d.extend(vec![n - 1; s - 1]);
    d.sort_unstable();
    d
}

/// `best[r]`: the smallest largest-component order reachable by removing
/// at most `r` vertices, for `r ≤ vertex_limit`; likewise for edges.
pub fn removal_profile(adj: &[u64], vertex_limit: usize, edge_limit: usize) -> (Vec<usize>, Vec<usize>) {
    let n = adj.len();
    let mut vertex = vec![usize::MAX; vertex_limit + 1];
    any_subset(n, vertex_limit, &mut |set| {
        let removed = set.iter().fold(0u64, |m, &v| m | 1 << v);
        let order = max_order(adj, full(n) & !removed);
        vertex[set.len()] = vertex[set.len()].min(order);
        false
    });
    let e = edges(adj);
    let mut edge = vec![usize::MAX; edge_limit + 1];
    any_subset(e.len(), edge_limit, &mut |set| {
        let removed: Vec<_> = set.iter().map(|&i| e[i]).collect();
        let order = max_order(&without_edges(adj, &removed), full(n));
        edge[set.len()] = edge[set.len()].min(order);
        false
    });
    for best in [&mut vertex, &mut edge] {
        for r in 1..best.len() {
            best[r] = best[r].min(best[r - 1]);
        }
    }
    (vertex, edge)
}

/// Per sorted degree sequence on `n` vertices, the elementwise minimum of
/// [`removal_profile`] over every labeled realization.
pub fn worst_profiles(
    n: usize,
    vertex_limit: usize,
    edge_limit: usize,
) -> std::collections::BTreeMap<Vec<usize>, (Vec<usize>, Vec<usize>)> {
    let p = pairs(n);
    let mut out = std::collections::BTreeMap::<Vec<usize>, (Vec<usize>, Vec<usize>)>::new();
    for mask in 0..1u64 << p.len() {
        let adj = graph_from_mask(n, &p, mask);
        let (v, e) = removal_profile(&adj, vertex_limit, edge_limit);
        let entry = out
            .entry(sorted_degrees(&adj))
            .or_insert_with(|| (vec![usize::MAX; vertex_limit + 1], vec![usize::MAX; edge_limit + 1]));
        for (a, b) in entry.0.iter_mut().zip(v) {
            *a = (*a).min(b);
        }
        for (a, b) in entry.1.iter_mut().zip(e) {
            *a = (*a).min(b);
        }
    }
    out
}

/// Whether a removal profile certifies connectivity at least `s`, i.e. no
/// `s - 1` removals break every component below order `k`.
pub fn profile_at_least(best: &[usize], k: usize, s: usize) -> bool {
    s == 0 || best.get(s - 1).is_some_and(|&order| order >= k)
}

/// Whether connectivity is exactly `s - 1` under the given profile.
pub fn profile_exactly(best: &[usize], k: usize, s_minus_1: usize) -> bool {
    profile_at_least(best, k, s_minus_1) && best[s_minus_1] < k
}
