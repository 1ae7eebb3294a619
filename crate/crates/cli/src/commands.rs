use std::fs;
use std::ops::RangeInclusive;
use std::path::Path;

use coc_core::conditions::{best_monotone, blocking_condition, declare, Verdict};
use coc_core::degree_seq::{realize, DegreeSequence};
use coc_core::graphs::{enumerate_realizations, find_counterexample, Graph, DEFAULT_REALIZATION_CAP};
use coc_core::partitions::{reduce_partition, replay, transformation_path, Partition};
use coc_core::validate::{self, Suite, SuiteReport};
use coc_core::{kappa_c, lambda_c, sinks_for, Error, Property, Provenance, Result, Variant, Witness};
use serde_json::{json, Value};

use crate::args::{Measure, PropertyArgs, ValidateArgs};
use crate::report::RunReport;

/// Largest graph the oracle command accepts without `--force`.
pub const ORACLE_CAP: usize = 16;

fn property(n: usize, p: &PropertyArgs) -> Property {
    Property {
        k: p.k,
        s: p.s,
        variant: p.variant.into(),
        n,
    }
}

fn with_property(report: RunReport, p: Property) -> RunReport {
    report
        .param("n", p.n)
        .param("k", p.k)
        .param("s", p.s)
        .param("variant", p.variant)
}

fn describe(prov: &Provenance) -> String {
    match prov {
        Provenance::Join { join: 0, partition } => format!("cliques {partition}"),
        Provenance::Join { join, partition } => format!("K_{join} joined to cliques {partition}"),
        Provenance::CliqueUnion { partition } => format!("cliques {partition}"),
        Provenance::CrossEdge { partition, edge } => {
            format!(
                "cliques {partition} with an edge between orders {} and {}",
                edge.0, edge.1
            )
        }
        Provenance::Stars { partition, split } => format!("cliques {partition} with stars {split}"),
    }
}

pub fn sinks(n: usize, p: &PropertyArgs) -> Result<RunReport> {
    let prop = property(n, p);
    let records = sinks_for(prop)?;
    let mut report = with_property(RunReport::new("sinks"), prop);
    let mut list = Vec::with_capacity(records.len());
    for rec in &records {
        let cond = blocking_condition(&rec.sequence);
        list.push(json!({
            "n": cond.n,
            "atoms": cond.atoms,
            "sink": rec.sequence,
            "provenance": rec.provenance,
        }));
        report.line(format!("{}\t{}", rec.sequence, describe(&rec.provenance)));
    }
    report.results = json!({ "count": records.len(), "sinks": list });
    Ok(report)
}

pub fn conditions(n: usize, p: &PropertyArgs) -> Result<RunReport> {
    let prop = property(n, p);
    let thm = best_monotone(prop.n, prop.k, prop.s, prop.variant)?;
    let mut report = with_property(RunReport::new("conditions"), prop);
    report.line(format!("forcibly {prop} if all of:"));
    for c in &thm.conditions {
        let sink = c.sink.as_ref().map(ToString::to_string).unwrap_or_default();
        report.line(format!("  {}\t[sink {sink}]", c.implication()));
    }
    report.results = serde_json::to_value(&thm).expect("theorem serializes");
    Ok(report)
}

pub fn check(seq: &str, n: Option<usize>, p: &PropertyArgs) -> Result<RunReport> {
    let seq: DegreeSequence = seq.parse()?;
    let n = n.unwrap_or(seq.len());
    if seq.len() != n {
        return Err(Error::LengthMismatch {
            left: seq.len(),
            right: n,
        });
    }
    let prop = property(n, p);
    let thm = best_monotone(prop.n, prop.k, prop.s, prop.variant)?;
    let verdict = declare(&seq, &thm)?;
    let mut report = with_property(RunReport::new("check"), prop).param("seq", seq.to_string());
    match &verdict {
        Verdict::ForciblyP => report.line(format!("{seq} is forcibly {prop}")),
        Verdict::Blocked { blockers } => {
            report.exit = 1;
            report.line(format!("{seq} is blocked by {} sink(s):", blockers.len()));
            for b in blockers {
                report.line(format!("  {}\tfails {}", b.sink.sequence, b.condition));
            }
        }
    }
    report.results = serde_json::to_value(&verdict).expect("verdict serializes");
    Ok(report)
}

fn edges_1based(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect()
}

pub fn realize_cmd(seq: &str, all: bool, test: Option<(usize, usize, Variant)>, force: bool) -> Result<RunReport> {
    let seq: DegreeSequence = seq.parse()?;
    let cap = if force { usize::MAX } else { DEFAULT_REALIZATION_CAP };
    let mut report = RunReport::new("realize")
        .param("seq", seq.to_string())
        .param("all", all);
    if let Some((k, s, variant)) = test {
        report = report.param("k", k).param("s", s).param("variant", variant);
        let counter = find_counterexample(&seq, k, s, variant, cap)?;
        let prop = Property {
            k,
            s,
            variant,
            n: seq.len(),
        };
        match &counter {
            None => report.line(format!("every realization of {seq} is {prop}")),
            Some(g) => {
                report.line(format!("a realization of {seq} is not {prop}:"));
                report.text.push_str(&g.to_file_format());
            }
        }
        report.results = json!({
            "forcibly": counter.is_none(),
            "counterexample": counter.as_ref().map(edges_1based),
        });
        return Ok(report);
    }
    let graphs = if all {
        enumerate_realizations(&seq, cap)?
    } else {
        vec![realize(&seq)?]
    };
    if all {
        report.line(format!("{} labeled realization(s)", graphs.len()));
    }
    for (i, g) in graphs.iter().enumerate() {
        if all {
            report.line(format!("# realization {}", i + 1));
        }
        report.text.push_str(&g.to_file_format());
    }
    report.results = json!({
        "count": graphs.len(),
        "graphs": graphs.iter().map(edges_1based).collect::<Vec<_>>(),
    });
    Ok(report)
}

pub fn oracle(file: &Path, k: usize, measure: Measure, force: bool) -> Result<RunReport> {
    let text = fs::read_to_string(file).map_err(|e| Error::GraphFormat {
        line: 0,
        reason: format!("{}: {e}", file.display()),
    })?;
    let g = Graph::from_file_format(&text)?;
    if g.vertex_count() > ORACLE_CAP && !force {
        return Err(Error::Resource(format!(
            "oracle graphs are capped at n = {ORACLE_CAP}, got n = {}; pass --force to override",
            g.vertex_count()
        )));
    }
    if k < 2 {
        return Err(Error::Range(format!("k must be at least 2, got {k}")));
    }
    let (name, result) = match measure {
        Measure::Kappa => ("kappa", kappa_c(&g, k)),
        Measure::Lambda => ("lambda", lambda_c(&g, k)),
    };
    let witness: Value = match &result.witness {
        Witness::Vertices(x) => json!(x.iter().map(|v| v + 1).collect::<Vec<_>>()),
        Witness::Edges(f) => json!(f.iter().map(|&(u, v)| (u + 1, v + 1)).collect::<Vec<_>>()),
    };
    let mut report = RunReport::new("oracle")
        .param("file", file.display().to_string())
        .param("k", k)
        .param("measure", name);
    report.line(format!("{name}_c^({k}) = {}", result.value));
    report.line(format!("witness: {witness}"));
    report.results = json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "value": result.value,
        "witness": witness,
    });
    Ok(report)
}

pub fn transform(from: &str, to: &str) -> Result<RunReport> {
    let source: Partition = from.parse()?;
    let target: Partition = to.parse()?;
    let steps = transformation_path(&source, &target)?;
    let trail = replay(&source, &steps)?;
    let mut report = RunReport::new("transform")
        .param("from", source.to_string())
        .param("to", target.to_string());
    for (i, p) in trail.iter().enumerate() {
        match i.checked_sub(1).map(|j| steps[j]) {
            None => report.line(format!("   {p}")),
            Some(s) => report.line(format!(
                "-> {p}\t(part {} to part {})",
                s.from_part_index, s.to_part_index
            )),
        }
    }
    report.results = json!({
        "steps": steps,
        "trail": trail.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Ok(report)
}

pub fn reduce(parts: &str, k: usize) -> Result<RunReport> {
    let input: Partition = parts.parse()?;
    let output = reduce_partition(&input, k)?;
    let (before, after) = (input.clique_degree_sequence(1), output.clique_degree_sequence(1));
    let majorizes = after.majorizes(&before)?;
    let mut report = RunReport::new("reduce").param("parts", input.to_string()).param("k", k);
    report.line(format!("{input} -> {output}"));
    report.line(format!("{after} majorizes {before}: {majorizes}"));
    report.results = json!({
        "input": input.to_string(),
        "output": output.to_string(),
        "input_sequence": before,
        "output_sequence": after,
        "majorizes": majorizes,
    });
    Ok(report)
}

fn k_or(k: &Option<RangeInclusive<usize>>, lo: usize, hi: usize) -> RangeInclusive<usize> {
    k.clone().unwrap_or(lo..=hi)
}

pub fn validate_cmd(a: &ValidateArgs) -> Result<RunReport> {
    let suite: Suite = a.suite.into();
    let variant = a.variant.map(Variant::from);
    let mut report = RunReport::new("validate").param("suite", suite);
    let result: SuiteReport = match suite {
        Suite::Corollaries => {
            let (k, n_max) = (k_or(&a.k, 3, 5), a.n_max.unwrap_or(17));
            report = report.param("k", [k.start(), k.end()]).param("n_max", n_max);
            validate::corollaries(k, n_max, a.force)?
        }
        Suite::Sinks => {
            let (k, n_max) = (k_or(&a.k, 2, 6), a.n_max.unwrap_or(10));
            let oracle_n = n_max.min(10);
            report = report
                .param("k", [k.start(), k.end()])
                .param("n_max", n_max)
                .param("variant", variant)
                .param("s", a.s);
            validate::sinks(variant, a.s, k, n_max, oracle_n, a.force)?
        }
        Suite::LemmaPart => {
            let (trials, moves) = (a.trials.unwrap_or(1000), a.moves.unwrap_or(500));
            report = report
                .param("trials", trials)
                .param("moves", moves)
                .param("seed", a.seed);
            validate::lemma_part(trials, moves, a.seed)?
        }
        Suite::OracleCross => {
            let (k, n_max, s) = (k_or(&a.k, 2, 7), a.n_max.unwrap_or(7), a.s.unwrap_or(3));
            report = report
                .param("k", [k.start(), k.end()])
                .param("n_max", n_max)
                .param("s_max", s);
            validate::oracle_cross(k, n_max, s, a.force)?
        }
        Suite::LowerBound => {
            let (k, s) = (k_or(&a.k, 3, 5), a.s.unwrap_or(8));
            let oracle_n = a.n_max.unwrap_or(12);
            report = report
                .param("k", [k.start(), k.end()])
                .param("s_max", s)
                .param("oracle_n_max", oracle_n);
            validate::lower_bound(k, s, oracle_n, a.force)?
        }
        Suite::Properties => {
            let (trials, n_max) = (a.trials.unwrap_or(1000), a.n_max.unwrap_or(8));
            report = report
                .param("trials", trials)
                .param("seed", a.seed)
                .param("n_max", n_max)
                .param("z_max", 40);
            validate::properties(trials, a.seed, n_max, 40, a.force)?
        }
        Suite::Dominance => {
            let n_max = a.n_max.unwrap_or(8);
            report = report.param("n_max", n_max);
            validate::dominance(n_max, a.force)?
        }
    };
    for t in &result.checks {
        let status = if t.failed == 0 { "ok  " } else { "FAIL" };
        report.line(format!(
            "{status}  {:>8} passed  {:>6} failed  {}",
            t.passed, t.failed, t.anchor
        ));
    }
    for f in &result.failures {
        report.line(format!("  failure [{}]: {}", f.anchor, f.detail));
    }
    report.line(format!(
        "{}: {} passed, {} failed",
        suite,
        result.passed(),
        result.failed()
    ));
    report.checks_passed = result.passed();
    report.checks_failed = result
        .failures
        .iter()
        .map(|f| serde_json::to_value(f).expect("failure serializes"))
        .collect();
    if !result.is_ok() {
        report.exit = 1;
    }
    report.results = serde_json::to_value(&result).expect("suite report serializes");
    Ok(report)
}
