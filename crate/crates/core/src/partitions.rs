//! Integer partitions with bounded parts and fixed length.
//!
//! A [`Partition`] stores its parts in nondecreasing order. Enumerations
//! are emitted in lexicographic order of those part lists.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::degree_seq::{parse_terms, DegreeSequence};
use crate::error::{contract, range, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(contract("a partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(contract("partition parts must be positive"));
        }
        parts.sort_unstable();
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.is_empty() && parts[0] >= 1);
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn smallest(&self) -> usize {
        self.parts[0]
    }

    pub fn largest(&self) -> usize {
        *self.parts.last().unwrap()
    }

    /// Compressed multiplicity form: `(part value, count)` with strictly
    /// increasing values.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &h in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == h => *c += 1,
                _ => out.push((h, 1)),
            }
        }
        out
    }

    /// Degree sequence of `K_{s-1} + (K_{h_1} ∪ … ∪ K_{h_ω})`: each part `h`
    /// contributes `h` vertices of degree `h + s - 2`, and the join adds
    /// `s - 1` vertices of degree `n - 1`. With `s = 1` this is the plain
    /// clique union.
    pub fn clique_degree_sequence(&self, s: usize) -> DegreeSequence {
        assert!(s >= 1, "s must be at least 1");
        let n = self.total() + s - 1;
        let mut degrees: Vec<usize> = self
            .parts
            .iter()
            .flat_map(|&h| std::iter::repeat_n(h + s - 2, h))
            .collect();
        degrees.extend(std::iter::repeat_n(n - 1, s - 1));
        degrees.sort_unstable();
        DegreeSequence::from_sorted(degrees)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&text.join("+"))
    }
}

/// Accepts `4+4+5`, `4,4,5` or `4^2,5`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let values = parse_terms(&text.replace('+', ","))?;
        if values.contains(&0) {
            return Err(Error::Parse {
                term: "0".into(),
                reason: "partition parts must be positive".into(),
            });
        }
        Self::new(values)
    }
}

/// A single transfer of one unit between parts of the current (sorted)
/// partition. Indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveStep {
    pub from_part_index: usize,
    pub to_part_index: usize,
}

impl MoveStep {
    /// Applies the step and re-sorts. The destination part must be at least
    /// the source part before the move.
    pub fn apply(&self, p: &Partition) -> Result<Partition> {
        let (i, j) = (self.from_part_index, self.to_part_index);
        let parts = p.parts();
        if i >= parts.len() || j >= parts.len() || i == j {
            return Err(contract(format!("move {i} -> {j} is out of range or degenerate")));
        }
        if parts[i] < 1 || parts[j] < parts[i] {
            return Err(contract(format!(
                "destination part {} is smaller than source part {}",
                parts[j], parts[i]
            )));
        }
        let mut next = parts.to_vec();
        next[i] -= 1;
        next[j] += 1;
        next.retain(|&h| h > 0);
        next.sort_unstable();
        Ok(Partition::from_sorted(next))
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// All partitions of `total` into exactly `len` parts, each in `[1, max]`,
/// in lexicographic order.
pub fn bounded_partitions(total: usize, len: usize, max: usize) -> Vec<Partition> {
    fn rec(remaining: usize, slots: usize, min: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        for h in min..=max.min(remaining) {
            // The remaining slots all take values in [h, max].
            if h * slots > remaining {
                break;
            }
            if max * (slots - 1) + h < remaining {
                continue;
            }
            cur.push(h);
            rec(remaining - h, slots - 1, h, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 || max == 0 {
        return out;
    }
    rec(total, len, 1, max, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Every partition of `total` (any length, any part size), lexicographic.
pub fn partitions_of(total: usize) -> Vec<Partition> {
    (1..=total)
        .flat_map(|len| bounded_partitions(total, len, total))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Partitions of `total` into the minimum possible number of parts
/// `⌈total/(k-1)⌉`, each at most `k - 1`. These index the sinks.
pub fn enumerate_sink_partitions(total: usize, k: usize) -> Result<Vec<Partition>> {
    if total < 1 {
        return Err(range(format!("total must be at least 1, got {total}")));
    }
    if k < 2 {
        return Err(range(format!("k must be at least 2, got {k}")));
    }
    let omega = ceil_div(total, k - 1);
    let out = bounded_partitions(total, omega, k - 1);
    assert!(!out.is_empty(), "no sink partition for total {total}, k {k}");
    Ok(out)
}

/// Shortens a partition of `n` with parts `≤ k-1` to exactly
/// `⌈n/(k-1)⌉` parts such that the clique-union degree sequence of the
/// result majorizes that of the input.
///
/// Follows the explicit construction: with `t` the sum of the first
/// `ℓ-ω` parts and `M` the largest `m` such that
/// `(m+1)(k-1) ≤ t + a_{ℓ-m} + … + a_ℓ`, the result keeps
/// `a_{ℓ-ω+1} … a_{ℓ-M-2}`, absorbs the rest into one adjusted part, and
/// fills the top `M+1` slots with `k-1`.
pub fn reduce_partition(parts: &Partition, k: usize) -> Result<Partition> {
    if k < 2 {
        return Err(contract(format!("k must be at least 2, got {k}")));
    }
    let a = parts.parts();
    let n = parts.total();
    let ell = a.len();
    let cap = k - 1;
    if parts.largest() > cap {
        return Err(contract(format!("part {} exceeds k - 1 = {cap}", parts.largest())));
    }
    if n < k {
        return Err(contract(format!("n = {n} must be at least k = {k}")));
    }
    let omega = ceil_div(n, cap);
    if omega < 2 {
        return Err(contract(format!("⌈n/(k-1)⌉ = {omega} must be at least 2")));
    }
    if ell <= omega {
        return Err(contract(format!("length {ell} must exceed ⌈n/(k-1)⌉ = {omega}")));
    }
    // Only t + a_ℓ ≥ k is used by the construction; it follows from
    // a_1 + a_2 ≥ k but also holds for inputs that violate it.
    let head: usize = a[..ell - omega].iter().sum();
    if head + a[ell - 1] < k {
        return Err(contract(format!(
            "sum of the first {} parts plus the largest part is {}, below k = {k}",
            ell - omega,
            head + a[ell - 1]
        )));
    }

    if n.is_multiple_of(cap) {
        return Ok(Partition::from_sorted(vec![cap; omega]));
    }

    // 1-based helpers matching the construction.
    let a1 = |i: usize| a[i - 1];
    let sum = |lo: usize, hi: usize| -> usize {
        if lo > hi {
            0
        } else {
            (lo..=hi).map(a1).sum()
        }
    };

    let t = sum(1, ell - omega);
    let m_big = (0..omega)
        .filter(|&m| (m + 1) * cap <= t + sum(ell - m, ell))
        .max()
        .ok_or_else(|| Error::Internal("no admissible M in partition reduction".into()))?;
    if m_big > omega - 2 {
        return Err(Error::Internal(format!("M = {m_big} exceeds ω - 2 = {}", omega - 2)));
    }

    let mut c = vec![0usize; omega + 1];
    for i in (ell - omega + 1)..=(ell - m_big - 2) {
        c[i + omega - ell] = a1(i);
    }
    c[omega - m_big - 1] = t + sum(ell - m_big - 1, ell) - (m_big + 1) * cap;
    for slot in c.iter_mut().take(omega + 1).skip(omega - m_big) {
        *slot = cap;
    }
    let c: Vec<usize> = c.into_iter().skip(1).collect();

    if c.windows(2).any(|w| w[0] > w[1]) || c.iter().any(|&x| x == 0 || x > cap) {
        return Err(Error::Internal(format!("reduction produced invalid parts {c:?}")));
    }
    let out = Partition::from_sorted(c);
    if out.total() != n {
        return Err(Error::Internal("reduction changed the total".into()));
    }
    Ok(out)
}

/// True when `upper` dominates `lower`: every sum of the `j` largest parts
/// of `upper` is at least the matching sum for `lower`. Both must have the
/// same total.
pub fn dominates(upper: &Partition, lower: &Partition) -> bool {
    let (mut su, mut sl) = (0, 0);
    let mut u = upper.parts().iter().rev();
    let mut l = lower.parts().iter().rev();
    loop {
        match (u.next(), l.next()) {
            (None, None) => return su == sl,
            (x, y) => {
                su += x.copied().unwrap_or(0);
                sl += y.copied().unwrap_or(0);
                if su < sl {
                    return false;
                }
            }
        }
    }
}

/// A sequence of unit moves turning `source` into `target`.
///
/// A move only ever concentrates the partition, so `target` is reachable
/// exactly when it dominates `source`. Each step takes one unit from the
/// smallest possible part and gives it to the largest possible part such
/// that `target` still dominates the result.
pub fn transformation_path(source: &Partition, target: &Partition) -> Result<Vec<MoveStep>> {
    if source == target {
        return Ok(Vec::new());
    }
    if source.len() != target.len() {
        return Err(contract(format!(
            "lengths differ: {} vs {}",
            source.len(),
            target.len()
        )));
    }
    if source.total() != target.total() {
        return Err(contract(format!(
            "totals differ: {} vs {}",
            source.total(),
            target.total()
        )));
    }
    if target.smallest() >= source.smallest() {
        return Err(contract(format!(
            "target smallest part {} must be below source smallest part {}",
            target.smallest(),
            source.smallest()
        )));
    }
    if source.smallest() < 2 {
        return Err(contract("every source part must be at least 2"));
    }
    if !dominates(target, source) {
        return Err(contract(format!(
            "target {target} does not dominate source {source}, so no sequence of moves reaches it"
        )));
    }

    let mut cur = source.clone();
    let mut steps = Vec::new();
    while &cur != target {
        let p = cur.parts();
        let len = p.len();
        let next = (0..len)
            .flat_map(|i| (0..len).rev().map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && p[j] >= p[i] && p[i] >= 2)
            .map(|(i, j)| MoveStep {
                from_part_index: i,
                to_part_index: j,
            })
            .find_map(|step| {
                let q = step.apply(&cur).ok()?;
                (q.len() == len && dominates(target, &q)).then_some((step, q))
            });
        let Some((step, q)) = next else {
            return Err(Error::Internal(format!(
                "no admissible move from {cur} toward {target}"
            )));
        };
        steps.push(step);
        cur = q;
    }
    Ok(steps)
}

/// Replays `steps` from `source`, returning every intermediate partition
/// including the start.
pub fn replay(source: &Partition, steps: &[MoveStep]) -> Result<Vec<Partition>> {
    let mut trail = vec![source.clone()];
    for step in steps {
        let next = step.apply(trail.last().unwrap())?;
        trail.push(next);
    }
    Ok(trail)
}

/// The unrestricted partition function `p(z)`.
pub fn partition_count(z: i64) -> Result<u64> {
    if z < 0 {
        return Err(range(format!("partition_count needs z >= 0, got {z}")));
    }
    let z = z as usize;
    let mut table = vec![0u64; z + 1];
    table[0] = 1;
    for part in 1..=z {
        for total in part..=z {
            table[total] += table[total - part];
        }
    }
    Ok(table[z])
}

/// `F_{k+2} - k` with `F_1 = F_2 = 1`: an upper bound on the number of
/// vertex sinks for a given `k`.
pub fn fibonacci_sink_bound(k: usize) -> Result<u64> {
    if k < 2 {
        return Err(range(format!("k must be at least 2, got {k}")));
    }
    let (mut prev, mut cur) = (1u64, 1u64);
    for _ in 2..k + 2 {
        (prev, cur) = (cur, prev + cur);
    }
    Ok(cur - k as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn sink_partition_examples() {
        let got = enumerate_sink_partitions(9, 5).unwrap();
        assert_eq!(got, vec![p("1+4+4"), p("2+3+4"), p("3+3+3")]);
        assert_eq!(enumerate_sink_partitions(6, 3).unwrap(), vec![p("2+2+2")]);
        for k in 2..10 {
            assert_eq!(
                enumerate_sink_partitions(k - 1, k).unwrap(),
                vec![Partition::new(vec![k - 1]).unwrap()]
            );
        }
        assert!(enumerate_sink_partitions(0, 3).is_err());
        assert!(enumerate_sink_partitions(3, 1).is_err());
    }

    #[test]
    fn reduction_worked_example() {
        let out = reduce_partition(&p("3,4^7,5"), 8).unwrap();
        assert_eq!(out.parts(), &[4, 4, 7, 7, 7, 7]);
    }

    #[test]
    fn reduction_divisible_case() {
        let out = reduce_partition(&p("3+3+3+3"), 5).unwrap();
        assert_eq!(out.parts(), &[4, 4, 4]);
    }

    #[test]
    fn reduction_rejects_minimal_length() {
        assert!(matches!(reduce_partition(&p("1+2+2+2"), 3), Err(Error::Contract(_))));
        assert!(matches!(reduce_partition(&p("1+1+1"), 3), Err(Error::Contract(_))));
        assert_eq!(reduce_partition(&p("1+1+4+4+4"), 5).unwrap().parts(), &[2, 4, 4, 4]);
    }

    #[test]
    fn transformation_examples() {
        let steps = transformation_path(&p("4+4+4+4+5"), &p("2+4+5+5+5")).unwrap();
        let trail = replay(&p("4+4+4+4+5"), &steps).unwrap();
        assert_eq!(trail, vec![p("4+4+4+4+5"), p("3+4+4+5+5"), p("2+4+5+5+5")]);

        assert!(transformation_path(&p("3+3"), &p("3+3")).unwrap().is_empty());

        let steps = transformation_path(&p("3+3"), &p("2+4")).unwrap();
        assert_eq!(
            steps,
            vec![MoveStep {
                from_part_index: 0,
                to_part_index: 1
            }]
        );
    }

    #[test]
    fn transformation_rejects_bad_input() {
        assert!(transformation_path(&p("2+4"), &p("3+3")).is_err());
        assert!(transformation_path(&p("1+5"), &p("2+4")).is_err());
        assert!(transformation_path(&p("3+3"), &p("1+1+4")).is_err());
        // Meets the smallest-part hypothesis but the largest part cannot shrink.
        assert!(!dominates(&p("3+6+6"), &p("4+4+7")));
        assert!(matches!(
            transformation_path(&p("4+4+7"), &p("3+6+6")),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn move_step_rule() {
        let bad = MoveStep {
            from_part_index: 1,
            to_part_index: 0,
        };
        assert!(bad.apply(&p("2+4")).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partition_count(0).unwrap(), 1);
        assert_eq!(partition_count(2).unwrap(), 2);
        assert_eq!(partition_count(5).unwrap(), 7);
        assert!(partition_count(-1).is_err());
    }

    #[test]
    fn fibonacci_bounds() {
        assert_eq!(fibonacci_sink_bound(2).unwrap(), 1);
        assert_eq!(fibonacci_sink_bound(3).unwrap(), 2);
        assert_eq!(fibonacci_sink_bound(5).unwrap(), 8);
        assert!(fibonacci_sink_bound(1).is_err());
    }

    #[test]
    fn parse_display() {
        assert_eq!(p("4^4,5").to_string(), "4+4+4+4+5");
        assert!("0+1".parse::<Partition>().is_err());
    }
}
