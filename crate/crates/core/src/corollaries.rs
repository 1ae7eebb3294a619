//! The published k = 3, 4, 5 corollaries as formulas over degree indices,
//! and an exhaustive equivalence check against generated theorems.
//!
//! Each corollary merges several sink conditions into one implication.
//! For small `n` some of the merged disjuncts refer to partitions that do
//! not exist; those disjuncts are only included when their partition does.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::conditions::MonotoneTheorem;
use crate::error::{range, Result};
use crate::property::Variant;

/// A boolean formula over 1-based degree indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Ge(usize, usize),
    Le(usize, usize),
    Eq(usize, usize),
    And(Vec<Expr>),
    Or(Vec<Expr>),
    Implies(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn implies(lhs: Expr, rhs: Expr) -> Expr {
        Expr::Implies(Box::new(lhs), Box::new(rhs))
    }

    /// Evaluates with `d(i)` giving the degree at index `i`.
    pub fn eval(&self, d: &impl Fn(usize) -> usize) -> bool {
        match self {
            Expr::Ge(i, t) => d(*i) >= *t,
            Expr::Le(i, t) => d(*i) <= *t,
            Expr::Eq(i, t) => d(*i) == *t,
            Expr::And(xs) => xs.iter().all(|x| x.eval(d)),
            Expr::Or(xs) => xs.iter().any(|x| x.eval(d)),
            Expr::Implies(a, b) => !a.eval(d) || b.eval(d),
        }
    }

    pub fn indices(&self, out: &mut BTreeSet<usize>) {
        match self {
            Expr::Ge(i, _) | Expr::Le(i, _) | Expr::Eq(i, _) => {
                out.insert(*i);
            }
            Expr::And(xs) | Expr::Or(xs) => xs.iter().for_each(|x| x.indices(out)),
            Expr::Implies(a, b) => {
                a.indices(out);
                b.indices(out);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn join(f: &mut fmt::Formatter<'_>, xs: &[Expr], sep: &str, empty: &str) -> fmt::Result {
            if xs.is_empty() {
                return f.write_str(empty);
            }
            f.write_str("(")?;
            for (j, x) in xs.iter().enumerate() {
                if j > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")
        }
        match self {
            Expr::Ge(i, t) => write!(f, "d_{i} >= {t}"),
            Expr::Le(i, t) => write!(f, "d_{i} <= {t}"),
            Expr::Eq(i, t) => write!(f, "d_{i} = {t}"),
            Expr::And(xs) => join(f, xs, " and ", "true"),
            Expr::Or(xs) => join(f, xs, " or ", "false"),
            Expr::Implies(a, b) => write!(f, "({a} => {b})"),
        }
    }
}

/// Keeps the disjuncts whose guard holds.
fn guarded(items: Vec<(bool, Expr)>) -> Expr {
    Expr::Or(items.into_iter().filter(|(g, _)| *g).map(|(_, x)| x).collect())
}

/// The vertex corollary for `k ∈ {3, 4, 5}`, instantiated at `(n, s)`.
pub fn vertex_corollary(n: usize, k: usize, s: usize) -> Result<Expr> {
    use Expr::{Ge, Le, Or};
    let min_n = [0, 0, 0, 3, 4, 5];
    if !(3..=5).contains(&k) || n < min_n[k] || s < 1 || s > n + 2 - k {
        return Err(range(format!(
            "vertex corollary needs k in 3..=5, n >= {}, 1 <= s <= n - k + 2; got n = {n}, k = {k}, s = {s}",
            if (3..=5).contains(&k) { min_n[k] } else { 3 }
        )));
    }
    let t = n - s + 1;
    let conclusion = Ge(t, s + k - 2);
    Ok(match (k, t % (k - 1)) {
        (3, 0) | (4, 0) | (5, 0) => conclusion,
        (3, 1) => Expr::implies(Le(1, s - 1), conclusion),
        (4, 1) => Expr::implies(Or(vec![Le(1, s - 1), Le(4, s)]), conclusion),
        (4, 2) => Expr::implies(Le(2, s), conclusion),
        (5, 1) => Expr::implies(
            guarded(vec![
                (true, Le(1, s - 1)),
                (true, Expr::And(vec![Le(2, s), Le(5, s + 1)])),
                (t >= 9, Le(9, s + 1)),
            ]),
            conclusion,
        ),
        (5, 2) => Expr::implies(Or(vec![Le(2, s), Le(6, s + 1)]), conclusion),
        (5, 3) => Expr::implies(Le(3, s + 1), conclusion),
        _ => unreachable!(),
    })
}

/// The 2-edge corollary for `k ∈ {3, 4, 5}`, instantiated at `n`.
pub fn edge2_corollary(n: usize, k: usize) -> Result<Expr> {
    use Expr::{And, Eq, Ge, Implies, Le};
    let min_n = [0, 0, 0, 3, 4, 9];
    if !(3..=5).contains(&k) || n < min_n[k] {
        return Err(range(format!(
            "2-edge corollary needs k in 3..=5 and n >= {}; got n = {n}, k = {k}",
            if (3..=5).contains(&k) { min_n[k] } else { 3 }
        )));
    }
    let q = n / (k - 1);
    let top = Ge(n, k);
    let expr = match (k, n % (k - 1)) {
        (3, 0) => Expr::implies(Le(n - 2, 1), top),
        (3, 1) => Expr::implies(
            guarded(vec![(true, Le(n - 1, 1)), (n >= 5, And(vec![Eq(1, 0), Le(n - 2, 1)]))]),
            top,
        ),
        (4, 0) => Expr::implies(Le(n - 2, 2), top),
        (4, 1) => Expr::implies(
            guarded(vec![
                (n >= 7, And(vec![Eq(1, 0), Le(n - 2, 2)])),
                (true, And(vec![Le(1, 1), Le(n - 1, 2)])),
                (n >= 10, And(vec![Le(4, 1), Le(n - 2, 2)])),
            ]),
            top,
        ),
        (4, 2) => Expr::implies(
            guarded(vec![
                (true, And(vec![Le(1, 1), Le(n - 1, 2)])),
                (n >= 8, And(vec![Le(2, 1), Le(n - 2, 2)])),
            ]),
            top,
        ),
        (5, 0) => Expr::implies(Le(n - 2, 3), top),
        (5, 1) => And(vec![
            Expr::implies(
                guarded(vec![
                    (true, And(vec![Eq(1, 0), Le(n - 2, 3)])),
                    (true, And(vec![Le(1, 1), Le(n - 1, 3)])),
                    (n >= 13, And(vec![Le(2, 1), Le(5, 2), Le(n - 2, 3)])),
                    (n >= 13, And(vec![Le(8, 2), Le(n - 1, 3)])),
                    (n >= 17, And(vec![Le(9, 2), Le(n - 2, 3)])),
                ]),
                top.clone(),
            ),
            Implies(Box::new(Le(7, 2)), Box::new(Ge(n, 4))),
        ]),
        (5, 2) => And(vec![
            Expr::implies(
                guarded(vec![
                    (true, And(vec![Le(1, 1), Le(2, 2), Le(n - 1, 3)])),
                    (true, And(vec![Le(2, 1), Le(n - 2, 3)])),
                    (true, And(vec![Le(5, 2), Le(n - 1, 3)])),
                    (q >= 3, And(vec![Le(6, 2), Le(n - 2, 3)])),
                ]),
                top.clone(),
            ),
            Implies(Box::new(Le(4, 2)), Box::new(Ge(n, 4))),
        ]),
        (5, 3) => Expr::implies(
            guarded(vec![
                (true, And(vec![Le(2, 2), Le(n - 1, 3)])),
                (true, And(vec![Le(3, 2), Le(n - 2, 3)])),
            ]),
            top,
        ),
        _ => unreachable!(),
    };
    Ok(expr)
}

/// The conjunction of a theorem's conditions as one formula.
pub fn theorem_expr(thm: &MonotoneTheorem) -> Expr {
    Expr::And(
        thm.conditions
            .iter()
            .map(|c| Expr::Or(c.atoms.iter().map(|a| Expr::Ge(a.index, a.threshold)).collect()))
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub indices: Vec<usize>,
    pub profiles: u64,
    /// A profile `(index, value)` on which the two formulas disagree.
    pub counterexample: Option<Vec<(usize, usize)>>,
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares two formulas on every nondecreasing assignment of values in
/// `[0, n-1]` to the indices either mentions. Every such partial profile
/// extends to a full nondecreasing sequence, so this decides equivalence
/// over degree profiles.
pub fn equivalent(a: &Expr, b: &Expr, n: usize) -> Equivalence {
    let mut set = BTreeSet::new();
    a.indices(&mut set);
    b.indices(&mut set);
    let indices: Vec<usize> = set.into_iter().collect();
    assert!(
        indices.iter().all(|&i| (1..=n).contains(&i)),
        "index out of range 1..={n} in {indices:?}"
    );
    let mut values = vec![0usize; indices.len()];
    let mut profiles = 0u64;
    let top = n - 1;
    loop {
        profiles += 1;
        let d = |i: usize| values[indices.binary_search(&i).unwrap()];
        if a.eval(&d) != b.eval(&d) {
            return Equivalence {
                counterexample: Some(indices.iter().copied().zip(values.iter().copied()).collect()),
                indices,
                profiles,
            };
        }
        // Next nondecreasing vector in lexicographic order.
        let Some(j) = (0..values.len()).rev().find(|&j| values[j] < top) else {
            break;
        };
        values[j] += 1;
        for x in j + 1..values.len() {
            values[x] = values[j];
        }
    }
    Equivalence {
        indices,
        profiles,
        counterexample: None,
    }
}

/// The corollary matching a property, if one is published for it.
pub fn corollary_for(n: usize, k: usize, s: usize, variant: Variant) -> Result<Expr> {
    match variant {
        Variant::Vertex => vertex_corollary(n, k, s),
        Variant::Edge if s == 2 => edge2_corollary(n, k),
        Variant::Edge => Err(range(format!("no 2-edge corollary for s = {s}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::best_monotone;

    #[test]
    fn eval_and_display() {
        let e = Expr::implies(Expr::Le(1, 0), Expr::Ge(3, 2));
        assert!(e.eval(&|i| [0, 1, 1, 2][i]));
        assert!(!e.eval(&|i| [0, 0, 1, 1][i]));
        assert!(e.eval(&|i| [0, 1, 1, 1][i]));
        assert_eq!(e.to_string(), "(d_1 <= 0 => d_3 >= 2)");
        assert_eq!(Expr::Or(vec![]).to_string(), "false");
    }

    #[test]
    fn profiles_are_counted() {
        // Two indices over values 0..=2: C(4, 2) = 6 nondecreasing pairs.
        let a = Expr::Or(vec![Expr::Ge(1, 0), Expr::Ge(2, 0)]);
        let r = equivalent(&a, &a, 3);
        assert_eq!(r.profiles, 6);
        assert!(r.holds());
        let r = equivalent(&Expr::Ge(2, 1), &Expr::Ge(1, 1), 3);
        assert_eq!(r.counterexample, Some(vec![(1, 0), (2, 1)]));
    }

    #[test]
    fn small_instances_match() {
        for (n, k, s) in [(6, 3, 1), (7, 3, 2), (13, 5, 1), (10, 4, 2)] {
            let thm = best_monotone(n, k, s, Variant::Vertex).unwrap();
            let r = equivalent(&theorem_expr(&thm), &vertex_corollary(n, k, s).unwrap(), n);
            assert!(r.holds(), "n={n} k={k} s={s}: {r:?}");
        }
        for (n, k) in [(7, 3), (8, 3), (10, 4), (13, 5)] {
            let thm = best_monotone(n, k, 2, Variant::Edge).unwrap();
            let r = equivalent(&theorem_expr(&thm), &edge2_corollary(n, k).unwrap(), n);
            assert!(r.holds(), "n={n} k={k}: {r:?}");
        }
    }

    #[test]
    fn out_of_range() {
        assert!(vertex_corollary(4, 6, 1).is_err());
        assert!(vertex_corollary(5, 3, 5).is_err());
        assert!(edge2_corollary(8, 5).is_err());
    }
}
