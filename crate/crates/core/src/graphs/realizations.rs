use std::ops::ControlFlow;

use super::{kappa_c_at_most, lambda_c_at_most, Graph};
use crate::degree_seq::DegreeSequence;
use crate::error::{Error, Result};
use crate::property::Variant;

pub const DEFAULT_REALIZATION_CAP: usize = 8;

/// Visits every labeled graph in which vertex `i` has degree `seq.d(i+1)`.
///
/// Backtracks vertex by vertex, choosing each vertex's neighbors among the
/// higher-labeled vertices that still have residual degree.
pub fn for_each_realization<F>(seq: &DegreeSequence, cap: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    let n = seq.len();
    if n > cap {
        return Err(Error::Resource(format!(
            "realization enumeration is capped at n = {cap}, got n = {n}"
        )));
    }
    if let Some(v) = seq.graphicality_violation() {
        return Err(Error::NotGraphical(v));
    }
    let mut residual = seq.degrees().to_vec();
    let mut g = Graph::empty(n)?;
    let _ = extend(0, &mut residual, &mut g, &mut visit);
    Ok(())
}

fn extend<F>(v: usize, residual: &mut [usize], g: &mut Graph, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    let n = residual.len();
    if v == n {
        return visit(g);
    }
    let need = residual[v];
    let candidates: Vec<usize> = (v + 1..n).filter(|&u| residual[u] > 0).collect();
    if candidates.len() < need {
        return ControlFlow::Continue(());
    }
    let mut chosen = Vec::with_capacity(need);
    choose(0, need, &candidates, &mut chosen, v, residual, g, visit)
}

#[allow(clippy::too_many_arguments)]
fn choose<F>(
    start: usize,
    need: usize,
    candidates: &[usize],
    chosen: &mut Vec<usize>,
    v: usize,
    residual: &mut [usize],
    g: &mut Graph,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    if chosen.len() == need {
        let saved = residual[v];
        residual[v] = 0;
        for &u in chosen.iter() {
            residual[u] -= 1;
            g.adj[v] |= 1 << u;
            g.adj[u] |= 1 << v;
        }
        // The next vertex must still be able to reach its residual.
        let feasible = {
            let w = v + 1;
            w >= residual.len() || residual[w] < residual.len() - w
        };
        let flow = if feasible {
            extend(v + 1, residual, g, visit)
        } else {
            ControlFlow::Continue(())
        };
        for &u in chosen.iter() {
            residual[u] += 1;
            g.adj[v] &= !(1 << u);
            g.adj[u] &= !(1 << v);
        }
        residual[v] = saved;
        return flow;
    }
    let left = need - chosen.len();
    for idx in start..candidates.len() {
        if candidates.len() - idx < left {
            break;
        }
        chosen.push(candidates[idx]);
        let flow = choose(idx + 1, need, candidates, chosen, v, residual, g, visit);
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

pub fn enumerate_realizations(seq: &DegreeSequence, cap: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_realization(seq, cap, |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// First realization with connectivity below `s`, if any.
pub fn find_counterexample(
    seq: &DegreeSequence,
    k: usize,
    s: usize,
    variant: Variant,
    cap: usize,
) -> Result<Option<Graph>> {
    if k < 2 {
        return Err(Error::Range(format!("k must be at least 2, got {k}")));
    }
    let mut found = None;
    if s == 0 {
        return Ok(None);
    }
    for_each_realization(seq, cap, |g| {
        let below = match variant {
            Variant::Vertex => kappa_c_at_most(g, k, s - 1).is_some(),
            Variant::Edge => lambda_c_at_most(g, k, s - 1).is_some(),
        };
        if below {
            found = Some(g.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// True iff every realization has `κ_c^{(k)} ≥ s` (vertex) or
/// `λ_c^{(k)} ≥ s` (edge).
pub fn is_forcibly(seq: &DegreeSequence, k: usize, s: usize, variant: Variant, cap: usize) -> Result<bool> {
    Ok(find_counterexample(seq, k, s, variant, cap)?.is_none())
}
