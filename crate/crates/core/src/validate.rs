//! Batch re-checks of every invariant the library relies on.
//!
//! Each suite returns a [`SuiteReport`] that tallies checks per anchor, a
//! short description of the claim being checked, and keeps the first
//! failures verbatim.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{ControlFlow, RangeInclusive};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conditions::{
    best_monotone, blocking_condition, declare, declare_by_majorization, satisfies, simple_edge_test,
    simple_vertex_test, MonotoneTheorem,
};
use crate::corollaries::{corollary_for, equivalent, theorem_expr};
use crate::degree_seq::DegreeSequence;
use crate::error::{range, Error, Result};
use crate::graphs::{clique_union, for_each_realization, kappa_c, kappa_c_at_most, lambda_c, lambda_c_at_most};
use crate::partitions::{
    bounded_partitions, dominates, fibonacci_sink_bound, partition_count, partitions_of, reduce_partition, replay,
    transformation_path, MoveStep, Partition,
};
use crate::property::{Property, Variant};
use crate::sinks::{
    edge1_sinks, edge2_candidates, edge2_sinks, edge_lower_bound_family, vertex_sinks, Provenance, SinkRecord,
};

/// Failures kept verbatim per report; the counts stay exact.
const MAX_FAILURES: usize = 50;

/// Largest `n` for which a suite enumerates every graphical sequence.
pub const EXHAUSTIVE_N_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Corollaries,
    Sinks,
    LemmaPart,
    OracleCross,
    LowerBound,
    Properties,
    Dominance,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Corollaries,
        Suite::Sinks,
        Suite::LemmaPart,
        Suite::OracleCross,
        Suite::LowerBound,
        Suite::Properties,
        Suite::Dominance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Corollaries => "corollaries",
            Suite::Sinks => "sinks",
            Suite::LemmaPart => "lemma-part",
            Suite::OracleCross => "oracle-cross",
            Suite::LowerBound => "lower-bound",
            Suite::Properties => "properties",
            Suite::Dominance => "dominance",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == text)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite `{text}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnchorTally {
    pub anchor: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub anchor: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<AnchorTally>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        Self {
            suite,
            checks: Vec::new(),
            failures: Vec::new(),
        }
    }

    fn tally(&mut self, anchor: &'static str) -> &mut AnchorTally {
        match self.checks.iter().position(|t| t.anchor == anchor) {
            Some(i) => &mut self.checks[i],
            None => {
                self.checks.push(AnchorTally {
                    anchor,
                    passed: 0,
                    failed: 0,
                });
                self.checks.last_mut().unwrap()
            }
        }
    }

    /// Records one check; `detail` is only built on failure.
    pub fn check(&mut self, anchor: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let keep = self.failures.len() < MAX_FAILURES;
        let tally = self.tally(anchor);
        if ok {
            tally.passed += 1;
        } else {
            tally.failed += 1;
            if keep {
                self.failures.push(Failure {
                    anchor,
                    detail: detail(),
                });
            }
        }
    }

    /// Records an error from library code as a failed check.
    fn check_result<T>(&mut self, anchor: &'static str, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(anchor, false, || format!("{}: {e}", ctx()));
                None
            }
        }
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().map(|t| t.passed).sum()
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().map(|t| t.failed).sum()
    }

    pub fn is_ok(&self) -> bool {
        self.failed() == 0
    }
}

/// Every graphical sequence of length `n`, in lexicographic order.
pub fn graphical_sequences(n: usize) -> Vec<DegreeSequence> {
    fn rec(n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if cur.len() == n {
            let seq = DegreeSequence::new(cur.clone()).expect("values below n");
            if seq.is_graphical() {
                out.push(seq);
            }
            return;
        }
        for v in min..n {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        rec(n, 0, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Every nondecreasing sequence of length `n` over `[0, n-1]`, graphical
/// or not.
pub fn all_sequences(n: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    let mut values = vec![0usize; n];
    loop {
        out.push(DegreeSequence::new(values.clone()).expect("values below n"));
        let Some(j) = (0..n).rev().find(|&j| values[j] + 1 < n) else {
            break;
        };
        values[j] += 1;
        for x in j + 1..n {
            values[x] = values[j];
        }
    }
    out
}

/// Properties with a complete sink set on `n` vertices, for `k` in range.
fn supported_properties(n: usize, k_range: RangeInclusive<usize>, s_max: usize) -> Vec<Property> {
    let mut out = Vec::new();
    for k in k_range {
        if k < 2 || k > n {
            continue;
        }
        for s in 1..=s_max.min(n + 2 - k) {
            out.push(Property {
                k,
                s,
                variant: Variant::Vertex,
                n,
            });
        }
        for s in 1..=s_max.min(2) {
            out.push(Property {
                k,
                s,
                variant: Variant::Edge,
                n,
            });
        }
    }
    out
}

fn check_k_range(k_range: &RangeInclusive<usize>, lo: usize, hi: usize) -> Result<()> {
    if k_range.is_empty() || *k_range.start() < lo || *k_range.end() > hi {
        return Err(range(format!(
            "k range {}..{} must lie within {lo}..{hi}",
            k_range.start(),
            k_range.end()
        )));
    }
    Ok(())
}

fn check_n_cap(n_max: usize, cap: usize, force: bool) -> Result<()> {
    if n_max > cap && !force {
        return Err(Error::Resource(format!(
            "n-max {n_max} exceeds the cap {cap}; pass --force to override"
        )));
    }
    Ok(())
}

/// Generated theorems against the published k = 3, 4, 5 corollaries.
pub fn corollaries(k_range: RangeInclusive<usize>, n_max: usize, force: bool) -> Result<SuiteReport> {
    check_k_range(&k_range, 3, 5)?;
    check_n_cap(n_max, 24, force)?;
    let mut report = SuiteReport::new(Suite::Corollaries);
    for k in k_range {
        let vertex_min = k;
        for n in vertex_min..=n_max {
            for s in 1..=(n + 2 - k) {
                let anchor = match k {
                    3 => "vertex theorem equals the k = 3 corollary",
                    4 => "vertex theorem equals the k = 4 corollary",
                    _ => "vertex theorem equals the k = 5 corollary",
                };
                compare_corollary(&mut report, anchor, n, k, s, Variant::Vertex);
            }
        }
        let edge_min = [0, 0, 0, 3, 4, 9][k];
        for n in edge_min..=n_max {
            let anchor = match k {
                3 => "2-edge theorem equals the k = 3 corollary",
                4 => "2-edge theorem equals the k = 4 corollary",
                _ => "2-edge theorem equals the k = 5 corollary",
            };
            compare_corollary(&mut report, anchor, n, k, 2, Variant::Edge);
        }
    }
    Ok(report)
}

fn compare_corollary(report: &mut SuiteReport, anchor: &'static str, n: usize, k: usize, s: usize, variant: Variant) {
    let ctx = || format!("n = {n}, k = {k}, s = {s}, {variant}");
    let Some(thm) = report.check_result(anchor, best_monotone(n, k, s, variant), ctx) else {
        return;
    };
    let Some(cor) = report.check_result(anchor, corollary_for(n, k, s, variant), ctx) else {
        return;
    };
    let eq = equivalent(&theorem_expr(&thm), &cor, n);
    report.check(anchor, eq.holds(), || {
        format!(
            "{}: formulas differ at {:?}",
            ctx(),
            eq.counterexample.unwrap_or_default()
        )
    });
}

fn antichain_violation(records: &[SinkRecord]) -> Option<String> {
    for (i, a) in records.iter().enumerate() {
        for b in &records[i + 1..] {
            let ab = a
                .sequence
                .degrees()
                .iter()
                .zip(b.sequence.degrees())
                .all(|(x, y)| x >= y);
            let ba = a
                .sequence
                .degrees()
                .iter()
                .zip(b.sequence.degrees())
                .all(|(x, y)| y >= x);
            if ab || ba {
                return Some(format!("{} and {} are comparable", a.sequence, b.sequence));
            }
        }
    }
    None
}

const ANTICHAIN: &str = "sink lists are pairwise incomparable under majorization";
const CLOSED_FORM: &str = "join graph degree sequence matches the sink closed form";
const EXTREMAL_DEGREES: &str = "extremal graph realizes its sink sequence";
const FIB_BOUND: &str = "vertex sink count is at most F_{k+2} - k";
const EXCEPTIONS: &str = "every excluded 2-edge candidate is majorized by a retained sink";
const SINK_VALUE: &str = "extremal graph has connectivity exactly s - 1";
const EDGE_MAXIMAL: &str = "adding any edge to a vertex extremal graph reaches connectivity s";
const SINK_PARTITION_GAP: &str = "sink partitions have h_1 + h_2 >= k";

/// Structural checks on generated sink sets, with oracle checks on the
/// extremal graphs up to `oracle_n_max` vertices.
pub fn sinks(
    variant: Option<Variant>,
    s: Option<usize>,
    k_range: RangeInclusive<usize>,
    n_max: usize,
    oracle_n_max: usize,
    force: bool,
) -> Result<SuiteReport> {
    check_k_range(&k_range, 2, 12)?;
    check_n_cap(n_max, 40, force)?;
    check_n_cap(oracle_n_max, 10, force)?;
    if variant == Some(Variant::Edge) && s.is_some_and(|s| s > 2) {
        return Err(Error::Unsupported(
            "complete 2-edge-or-higher sink sets exist only for s <= 2; use the lower-bound suite".into(),
        ));
    }
    let mut report = SuiteReport::new(Suite::Sinks);
    for k in k_range {
        for n in k.max(2)..=n_max {
            if variant != Some(Variant::Edge) {
                let s_range = match s {
                    Some(s) => s..=s,
                    None => 1..=(n + 2 - k),
                };
                for s in s_range.filter(|&s| s >= 1 && s <= n + 2 - k) {
                    check_vertex_sinks(&mut report, n, k, s, n <= oracle_n_max);
                }
                check_sink_partition_gap(&mut report, n, k);
            }
            if variant != Some(Variant::Vertex) {
                if s.is_none_or(|s| s == 1) {
                    check_edge1_sinks(&mut report, n, k, n <= oracle_n_max);
                }
                if s.is_none_or(|s| s == 2) {
                    check_edge2_sinks(&mut report, n, k, n <= oracle_n_max);
                }
            }
        }
    }
    Ok(report)
}

fn check_sink_partition_gap(report: &mut SuiteReport, total: usize, k: usize) {
    let Ok(parts) = crate::partitions::enumerate_sink_partitions(total, k) else {
        return;
    };
    for p in parts.iter().filter(|p| p.len() >= 2) {
        report.check(SINK_PARTITION_GAP, p.parts()[0] + p.parts()[1] >= k, || {
            format!("partition {p} of {total} at k = {k}")
        });
    }
}

fn check_extremal(report: &mut SuiteReport, rec: &SinkRecord) -> Option<crate::graphs::Graph> {
    let g = report.check_result(EXTREMAL_DEGREES, rec.extremal_graph(), || rec.sequence.to_string())?;
    report.check(EXTREMAL_DEGREES, g.degree_sequence() == rec.sequence, || {
        format!("{} realized as {}", rec.sequence, g.degree_sequence())
    });
    Some(g)
}

fn check_vertex_sinks(report: &mut SuiteReport, n: usize, k: usize, s: usize, oracle: bool) {
    let ctx = || format!("vertex n = {n}, k = {k}, s = {s}");
    let Some(records) = report.check_result(ANTICHAIN, vertex_sinks(n, k, s), ctx) else {
        return;
    };
    let bad = antichain_violation(&records);
    report.check(ANTICHAIN, bad.is_none(), || {
        format!("{}: {}", ctx(), bad.unwrap_or_default())
    });
    if let Ok(bound) = fibonacci_sink_bound(k) {
        report.check(FIB_BOUND, records.len() as u64 <= bound, || {
            format!("{}: {} sinks, bound {bound}", ctx(), records.len())
        });
    }
    for rec in &records {
        let Provenance::Join { join, partition } = &rec.provenance else {
            report.check(CLOSED_FORM, false, || format!("{}: unexpected provenance", ctx()));
            continue;
        };
        let mut closed: Vec<usize> = partition
            .parts()
            .iter()
            .flat_map(|&h| std::iter::repeat_n(h + s - 2, h))
            .collect();
        closed.extend(std::iter::repeat_n(n - 1, *join));
        closed.sort_unstable();
        let Some(g) = check_extremal(report, rec) else {
            continue;
        };
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        report.check(CLOSED_FORM, degrees == closed, || {
            format!("{}: partition {partition}", ctx())
        });
        if oracle {
            let value = kappa_c(&g, k).value;
            report.check(SINK_VALUE, value == s - 1, || {
                format!("{}: {} has kappa_c = {value}", ctx(), rec.sequence)
            });
            for (u, v) in g.non_edges() {
                let mut h = g.clone();
                h.add_edge(u, v).expect("non-edge");
                let below = kappa_c_at_most(&h, k, s - 1).is_some();
                report.check(EDGE_MAXIMAL, !below, || {
                    format!("{}: {} plus edge ({u}, {v}) stays below s", ctx(), rec.sequence)
                });
            }
        }
    }
}

fn check_edge1_sinks(report: &mut SuiteReport, n: usize, k: usize, oracle: bool) {
    let ctx = || format!("edge n = {n}, k = {k}, s = 1");
    let Some(records) = report.check_result(ANTICHAIN, edge1_sinks(n, k), ctx) else {
        return;
    };
    let bad = antichain_violation(&records);
    report.check(ANTICHAIN, bad.is_none(), || {
        format!("{}: {}", ctx(), bad.unwrap_or_default())
    });
    for rec in &records {
        let Some(g) = check_extremal(report, rec) else {
            continue;
        };
        if oracle {
            let value = lambda_c(&g, k).value;
            report.check(SINK_VALUE, value == 0, || {
                format!("{}: {} has lambda_c = {value}", ctx(), rec.sequence)
            });
        }
    }
}

fn check_edge2_sinks(report: &mut SuiteReport, n: usize, k: usize, oracle: bool) {
    let ctx = || format!("edge n = {n}, k = {k}, s = 2");
    let Some(records) = report.check_result(ANTICHAIN, edge2_sinks(n, k), ctx) else {
        return;
    };
    let bad = antichain_violation(&records);
    report.check(ANTICHAIN, bad.is_none(), || {
        format!("{}: {}", ctx(), bad.unwrap_or_default())
    });
    if let Some(candidates) = report.check_result(EXCEPTIONS, edge2_candidates(n, k), ctx) {
        for c in candidates.iter().filter(|c| c.excluded) {
            let covered = records.iter().any(|r| {
                r.sequence
                    .degrees()
                    .iter()
                    .zip(c.sequence.degrees())
                    .all(|(x, y)| x >= y)
            });
            report.check(EXCEPTIONS, covered, || {
                format!("{}: candidate {} is uncovered", ctx(), c.sequence)
            });
        }
    }
    for rec in &records {
        let Some(g) = check_extremal(report, rec) else {
            continue;
        };
        if oracle {
            let value = lambda_c(&g, k).value;
            report.check(SINK_VALUE, value == 1, || {
                format!("{}: {} has lambda_c = {value}", ctx(), rec.sequence)
            });
        }
    }
}

const REDUCE_POST: &str = "partition reduction meets its postconditions";
const REDUCE_MAJOR: &str = "reduced clique union majorizes the original";
const PATH_REPLAY: &str = "transformation path replays to the target";
const PATH_REJECT: &str = "targets that do not dominate the source are rejected";
const DEGREE_SUM: &str = "moving a vertex to an equal or larger clique raises the degree sum";
const NON_MAJOR: &str = "equal-length partitions never majorize each other";

/// A random partition satisfying the reduction lemma's hypotheses, with
/// `k ≤ 12` and `n ≤ 60`.
pub fn random_reducible(rng: &mut impl Rng) -> (Partition, usize) {
    loop {
        let k = rng.random_range(3..=12);
        let a1 = rng.random_range(1..k);
        let lo = a1.max(k - a1);
        let extra = rng.random_range(2..=20);
        let mut parts = vec![a1];
        parts.extend((0..extra).map(|_| rng.random_range(lo..k)));
        let n: usize = parts.iter().sum();
        let omega = n.div_ceil(k - 1);
        if n <= 60 && n >= k && omega >= 2 && parts.len() > omega {
            return (Partition::new(parts).expect("positive parts"), k);
        }
    }
}

/// Seeded checks of the partition lemma, the transformation observation,
/// the degree-sum lemma and the non-majorization lemma.
pub fn lemma_part(trials: usize, moves: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new(Suite::LemmaPart);

    for _ in 0..trials {
        let (a, k) = random_reducible(&mut rng);
        let ctx = || format!("parts {a}, k = {k}");
        let Some(c) = report.check_result(REDUCE_POST, reduce_partition(&a, k), ctx) else {
            continue;
        };
        let n = a.total();
        let omega = n.div_ceil(k - 1);
        let ok = c.len() == omega && c.total() == n && c.largest() < k && c.parts()[0] + c.parts()[1] >= k;
        report.check(REDUCE_POST, ok, || format!("{}: got {c}", ctx()));
        let (pa, pc) = (a.clique_degree_sequence(1), c.clique_degree_sequence(1));
        let dominates = pc.degrees().iter().zip(pa.degrees()).all(|(x, y)| x >= y);
        report.check(REDUCE_MAJOR, dominates && pa != pc, || {
            format!("{}: {pc} vs {pa}", ctx())
        });
    }

    for _ in 0..trials {
        let (source, target) = random_transformation_pair(&mut rng);
        let ctx = || format!("{source} -> {target}");
        if !dominates(&target, &source) {
            let rejected = matches!(transformation_path(&source, &target), Err(Error::Contract(_)));
            report.check(PATH_REJECT, rejected, || format!("{}: accepted", ctx()));
            continue;
        }
        let Some(steps) = report.check_result(PATH_REPLAY, transformation_path(&source, &target), ctx) else {
            continue;
        };
        let Some(trace) = report.check_result(PATH_REPLAY, replay(&source, &steps), ctx) else {
            continue;
        };
        report.check(
            PATH_REPLAY,
            trace.last() == Some(&target) || (steps.is_empty() && source == target),
            || format!("{}: ended at {:?}", ctx(), trace.last()),
        );
    }

    for _ in 0..moves {
        let n = rng.random_range(2..=20);
        let parts = random_composition(&mut rng, n);
        if parts.len() < 2 {
            continue;
        }
        let p = Partition::new(parts).expect("positive parts");
        let i = rng.random_range(0..p.len());
        let candidates: Vec<usize> = (0..p.len())
            .filter(|&j| j != i && p.parts()[j] >= p.parts()[i])
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let j = candidates[rng.random_range(0..candidates.len())];
        let step = MoveStep {
            from_part_index: i,
            to_part_index: j,
        };
        let Some(q) = report.check_result(DEGREE_SUM, step.apply(&p), || format!("{p} step {i}->{j}")) else {
            continue;
        };
        let before = clique_union(&p).map(|g| g.degree_sum());
        let after = clique_union(&q).map(|g| g.degree_sum());
        report.check(DEGREE_SUM, matches!((before, after), (Ok(b), Ok(a)) if a > b), || {
            format!("{p} -> {q}")
        });
    }

    for total in 1..=18 {
        for len in 1..=total {
            let group = bounded_partitions(total, len, total);
            for (x, a) in group.iter().enumerate() {
                for b in &group[x + 1..] {
                    let (da, db) = (a.clique_degree_sequence(1), b.clique_degree_sequence(1));
                    let comparable = da.majorizes(&db)? || db.majorizes(&da)?;
                    report.check(NON_MAJOR, !comparable, || format!("{a} vs {b}"));
                }
            }
        }
    }
    Ok(report)
}

fn random_composition(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let h = rng.random_range(1..=left);
        parts.push(h);
        left -= h;
    }
    parts
}

/// Random equal-shape pair for the transformation observation: source
/// parts at least 2, target smallest part strictly below the source's.
fn random_transformation_pair(rng: &mut impl Rng) -> (Partition, Partition) {
    loop {
        let k = rng.random_range(3..=10);
        let len = rng.random_range(2..=6);
        let src: Vec<usize> = (0..len).map(|_| rng.random_range(2..k)).collect();
        let total: usize = src.iter().sum();
        let options = bounded_partitions(total, len, k - 1);
        let source = Partition::new(src).expect("positive parts");
        let eligible: Vec<&Partition> = options.iter().filter(|t| t.smallest() < source.smallest()).collect();
        if eligible.is_empty() {
            continue;
        }
        let target = eligible[rng.random_range(0..eligible.len())].clone();
        return (source, target);
    }
}

const SOUND: &str = "forcibly-P verdicts hold on every realization";
const WEAK_OPT: &str = "each blocking sink's extremal graph has connectivity exactly s - 1";
const ROUTES: &str = "condition route and majorization route agree";

/// Minimum of `κ_c^{(k)}` (capped at `cap`) over all realizations, for
/// each `k` in `2..=n`.
fn realization_minima(seq: &DegreeSequence, kappa_cap: usize, lambda_cap: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = seq.len();
    let mut kappa = vec![kappa_cap; n + 1];
    let mut lambda = vec![lambda_cap; n + 1];
    for_each_realization(seq, n, |g| {
        for k in 2..=n {
            if kappa[k] > 0 {
                if let Some(r) = kappa_c_at_most(g, k, kappa[k] - 1) {
                    kappa[k] = r.value;
                }
            }
            if lambda[k] > 0 {
                if let Some(r) = lambda_c_at_most(g, k, lambda[k] - 1) {
                    lambda[k] = r.value;
                }
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok((kappa, lambda))
}

/// Declared verdicts against the realization oracle for every graphical
/// sequence with `n ≤ n_max`, vertex `s ≤ s_max`, edge `s ≤ 2`.
pub fn oracle_cross(k_range: RangeInclusive<usize>, n_max: usize, s_max: usize, force: bool) -> Result<SuiteReport> {
    check_k_range(&k_range, 2, 12)?;
    check_n_cap(n_max, 7, force)?;
    let mut report = SuiteReport::new(Suite::OracleCross);
    let mut theorems: HashMap<Property, MonotoneTheorem> = HashMap::new();
    let mut sink_values: HashMap<(Property, DegreeSequence), usize> = HashMap::new();
    for n in 2..=n_max {
        let properties = supported_properties(n, k_range.clone(), s_max);
        for p in &properties {
            let thm = best_monotone(p.n, p.k, p.s, p.variant)?;
            theorems.insert(*p, thm);
        }
        for seq in graphical_sequences(n) {
            let (kappa, lambda) = realization_minima(&seq, s_max, 2)?;
            for p in &properties {
                let thm = &theorems[p];
                let verdict = declare(&seq, thm)?;
                let other = declare_by_majorization(&seq, thm)?;
                report.check(ROUTES, verdict == other, || format!("{seq} under {p}"));
                let worst = match p.variant {
                    Variant::Vertex => kappa[p.k],
                    Variant::Edge => lambda[p.k],
                };
                if verdict.is_forcibly() {
                    report.check(SOUND, worst >= p.s, || {
                        format!("{seq} declared forcibly {p} but a realization has value {worst}")
                    });
                    continue;
                }
                for b in verdict.blockers() {
                    let key = (*p, b.sink.sequence.clone());
                    let value = match sink_values.get(&key) {
                        Some(&v) => v,
                        None => {
                            let g = b.sink.extremal_graph()?;
                            let v = match p.variant {
                                Variant::Vertex => kappa_c(&g, p.k).value,
                                Variant::Edge => lambda_c(&g, p.k).value,
                            };
                            sink_values.insert(key, v);
                            v
                        }
                    };
                    report.check(WEAK_OPT, value + 1 == p.s, || {
                        format!("sink {} for {p} has value {value}", b.sink.sequence)
                    });
                }
            }
        }
    }
    Ok(report)
}

const FAMILY_SIZE: &str = "lower-bound family has p(s - 1) members";
const FAMILY_ANTICHAIN: &str = "lower-bound family is pairwise incomparable";
const FAMILY_VALUE: &str = "lower-bound graphs have edge connectivity exactly s - 1";

/// The `p(s-1)` family at the minimal valid parameters for each `k` in
/// range and `3 ≤ s ≤ s_max`; oracle checks up to `oracle_n_max`.
pub fn lower_bound(
    k_range: RangeInclusive<usize>,
    s_max: usize,
    oracle_n_max: usize,
    force: bool,
) -> Result<SuiteReport> {
    check_k_range(&k_range, 3, 12)?;
    if s_max > 12 && !force {
        return Err(Error::Resource(format!(
            "s-max {s_max} exceeds the cap 12; pass --force to override"
        )));
    }
    check_n_cap(oracle_n_max, 12, force)?;
    let mut report = SuiteReport::new(Suite::LowerBound);
    for k in k_range {
        for s in 3..=s_max {
            let m = (s - 1).div_ceil(k - 1);
            for r in 0..=k - 2 {
                let n = 2 * m * (k - 1) + r;
                let ctx = || format!("n = {n}, k = {k}, s = {s}");
                let Some(family) = report.check_result(FAMILY_SIZE, edge_lower_bound_family(n, k, s), ctx) else {
                    continue;
                };
                let expected = partition_count((s - 1) as i64)?;
                report.check(FAMILY_SIZE, family.len() as u64 == expected, || {
                    format!("{}: {} members, expected {expected}", ctx(), family.len())
                });
                let bad = antichain_violation(&family);
                report.check(FAMILY_ANTICHAIN, bad.is_none(), || {
                    format!("{}: {}", ctx(), bad.unwrap_or_default())
                });
                for rec in &family {
                    let Some(g) = check_extremal(&mut report, rec) else {
                        continue;
                    };
                    if n <= oracle_n_max {
                        let value = lambda_c(&g, k).value;
                        report.check(FAMILY_VALUE, value == s - 1, || {
                            format!("{}: {} has lambda_c = {value}", ctx(), rec.sequence)
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

const DUALITY: &str = "a sequence fails a sink's condition exactly when the sink majorizes it";
const PARTITION_COUNT: &str = "partition count matches direct enumeration";

/// Blocking duality (random pairs and exhaustive over all sinks up to
/// `n_max`), partition counts, and agreement of the two declare routes.
pub fn properties(trials: usize, seed: u64, n_max: usize, z_max: usize, force: bool) -> Result<SuiteReport> {
    check_n_cap(n_max, EXHAUSTIVE_N_CAP, force)?;
    if z_max > 60 && !force {
        return Err(Error::Resource(format!(
            "z-max {z_max} exceeds the cap 60; pass --force to override"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new(Suite::Properties);

    for _ in 0..trials {
        let n = rng.random_range(1..=40);
        let mut a: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
        let b: Vec<usize> = a
            .iter()
            .map(|&x| (x + rng.random_range(0..3)).saturating_sub(1).min(n - 1))
            .collect();
        a.sort_unstable();
        let sink = DegreeSequence::new(a)?;
        let seq = DegreeSequence::new(b)?;
        check_duality(&mut report, &sink, &seq)?;
    }

    for n in 2..=n_max {
        let everything = all_sequences(n);
        let graphical: Vec<&DegreeSequence> = everything.iter().filter(|s| s.is_graphical()).collect();
        let mut seen = BTreeMap::new();
        for p in supported_properties(n, 2..=n, n) {
            let Ok(thm) = best_monotone(p.n, p.k, p.s, p.variant) else {
                continue;
            };
            for sink in &thm.sinks {
                seen.entry(sink.sequence.clone()).or_insert(());
            }
            for seq in &graphical {
                let a = declare(seq, &thm)?;
                let b = declare_by_majorization(seq, &thm)?;
                report.check(ROUTES, a == b, || format!("{seq} under {p}"));
            }
        }
        for sink in seen.keys() {
            for seq in &everything {
                check_duality(&mut report, sink, seq)?;
            }
        }
    }

    for z in 0..=z_max {
        let direct = if z == 0 { 1 } else { partitions_of(z).len() as u64 };
        let counted = partition_count(z as i64)?;
        report.check(PARTITION_COUNT, direct == counted, || {
            format!("p({z}): {counted} vs {direct}")
        });
    }
    Ok(report)
}

fn check_duality(report: &mut SuiteReport, sink: &DegreeSequence, seq: &DegreeSequence) -> Result<()> {
    let fails = !satisfies(seq, &blocking_condition(sink))?;
    let majorized = sink.degrees().iter().zip(seq.degrees()).all(|(x, y)| x >= y);
    report.check(DUALITY, fails == majorized, || format!("sink {sink}, sequence {seq}"));
    Ok(())
}

const SIMPLE_VERTEX: &str = "the simple vertex test implies the best-monotone verdict";
const SIMPLE_EDGE: &str = "the simple edge test implies the best-monotone verdict";

/// Every sequence passing a simple test is declared forcibly P by the
/// best-monotone theorem, over all graphical sequences up to `n_max`.
pub fn dominance(n_max: usize, force: bool) -> Result<SuiteReport> {
    check_n_cap(n_max, EXHAUSTIVE_N_CAP, force)?;
    let mut report = SuiteReport::new(Suite::Dominance);
    for n in 2..=n_max {
        let seqs = graphical_sequences(n);
        for k in 2..=n {
            for s in 1..=(n + 1 - k) {
                let thm = best_monotone(n, k, s, Variant::Vertex)?;
                for seq in &seqs {
                    if simple_vertex_test(seq, k, s)? {
                        let forcibly = declare(seq, &thm)?.is_forcibly();
                        report.check(SIMPLE_VERTEX, forcibly, || format!("{seq} at k = {k}, s = {s}"));
                    }
                }
            }
            for s in 1..=2usize {
                if 2 * s > n + 1 {
                    continue;
                }
                let thm = best_monotone(n, k, s, Variant::Edge)?;
                for seq in &seqs {
                    if simple_edge_test(seq, k, s)? {
                        let forcibly = declare(seq, &thm)?.is_forcibly();
                        report.check(SIMPLE_EDGE, forcibly, || format!("{seq} at k = {k}, s = {s}"));
                    }
                }
            }
        }
    }
    Ok(report)
}
