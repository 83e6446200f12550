//! Exhaustive evaluation of the floor/ceiling facts behind the threshold.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{
    ceil_div, cfgjl_raw, check_domcycle_threshold, check_eq4_identity, congruence_predicts_ceil,
    floor_div, threshold_raw, Rational, Rounding,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactViolation {
    pub fact: String,
    pub n: usize,
    pub k: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactSummary {
    pub fact: String,
    pub evaluated: u64,
    pub violations: u64,
}

/// Outcome of a fact scan over `2 ≤ k ≤ k_max`, `1 ≤ m ≤ m_max`, `n = mk`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactReport {
    pub k_max: usize,
    pub m_max: usize,
    pub checks: Vec<FactSummary>,
    pub violations: Vec<FactViolation>,
    /// `(n, k)` where `D(n,k) < (n+2)/3` in the range `3 ≤ k ≤ n/2`.
    /// Only populated by [`scan_all`].
    pub domcycle_threshold_failures: Vec<(usize, usize)>,
}

impl FactReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self, fact: &str) -> Option<&FactSummary> {
        self.checks.iter().find(|s| s.fact == fact)
    }
}

#[derive(Default)]
struct Tally {
    counts: BTreeMap<&'static str, (u64, u64)>,
    violations: Vec<FactViolation>,
}

impl Tally {
    fn record(&mut self, fact: &'static str, n: i64, k: i64, ok: bool, detail: impl FnOnce() -> String) {
        let entry = self.counts.entry(fact).or_default();
        entry.0 += 1;
        if !ok {
            entry.1 += 1;
            self.violations.push(FactViolation {
                fact: fact.to_string(),
                n: n as usize,
                k: k as usize,
                detail: detail(),
            });
        }
    }

    fn finish(self, k_max: usize, m_max: usize) -> FactReport {
        FactReport {
            k_max,
            m_max,
            checks: self
                .counts
                .into_iter()
                .map(|(fact, (evaluated, violations))| FactSummary {
                    fact: fact.to_string(),
                    evaluated,
                    violations,
                })
                .collect(),
            violations: self.violations,
            domcycle_threshold_failures: Vec::new(),
        }
    }
}

fn r(a: i64) -> Rational {
    Rational::from_integer(a)
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn validate_ranges(k_max: usize, m_max: usize) -> Result<()> {
    if k_max < 2 || m_max < 1 {
        return Err(Error::InvalidParameters(format!(
            "fact scan needs k_max >= 2 and m_max >= 1, got k_max = {k_max}, m_max = {m_max}"
        )));
    }
    Ok(())
}

/// Evaluates every supporting numerical fact on the whole `(k, m)` grid.
///
/// Checked facts (names as they appear in the report):
///
/// * `rounding`: `D ∈ {⌈b⌉, ⌊b⌋}` for the rational bound `b`, and the
///   residue rule agrees with the direct comparison;
/// * `kodd.parity_bound`, `kodd.even_bound`: the two lower bounds on `D`
///   for odd `k`;
/// * `ff.i` .. `ff.iv` (`.bound` and `.closed_form`): the floor estimates
///   for `2⌊(n+2)/(k+2)⌋ − n/k` and friends;
/// * `ineq.i` .. `ineq.iii`: the degree-sum inequalities;
/// * `k_half.identity`, `k_half.positive`, `k_half.reduced`: the estimate
///   `δ + 1 > (⌈k/2⌉ − 1) n/k` used to bound the number of parts meeting an
///   independent set.
pub fn check_appendix_facts(k_max: usize, m_max: usize) -> Result<FactReport> {
    validate_ranges(k_max, m_max)?;
    let mut t = Tally::default();
    for k in 2..=k_max as i64 {
        for m in 1..=m_max as i64 {
            evaluate_all(&mut t, m * k, k, m);
        }
    }
    Ok(t.finish(k_max, m_max))
}

fn evaluate_all(t: &mut Tally, n: i64, k: i64, m: i64) {
    let d = threshold_raw(n, k);
    let l = (k + 2) / 2;

    // Rounding against the rational bound.
    let b = cfgjl_raw(n, k);
    let (c, f) = (b.ceil().to_integer(), b.floor().to_integer());
    t.record("rounding", n, k, d == c || d == f, || format!("D = {d}, bound = {b}"));
    let direct = match (c == f, d == c) {
        (true, _) => None,
        (false, true) => Some(Rounding::CeilCase),
        (false, false) => Some(Rounding::FloorCase),
    };
    let rule = congruence_predicts_ceil(n as usize, k as usize);
    let agrees = match direct {
        Some(Rounding::CeilCase) => rule,
        Some(Rounding::FloorCase) => !rule,
        // Integer bound: the rule may only claim the ceiling when it holds.
        None => !rule || d == c,
    };
    t.record("rounding.residue_rule", n, k, agrees, || {
        format!("D = {d}, bound = {b}, residue rule says ceil = {rule}")
    });

    // Odd k: lower bounds on D.
    if k % 2 == 1 && k >= 3 {
        let lhs = r(ceil_div(n, 2) + floor_div(n + 2, k + 1) - m);
        let base = q(n, 2) + q(n, k + 1) - r(m);
        let even_rhs = base - q(k - 3, k + 1);
        let parity_rhs = if n % 2 == 1 { base + q(1, 2) - q(k - 2, k + 1) } else { even_rhs };
        t.record("kodd.parity_bound", n, k, lhs >= parity_rhs, || format!("{lhs} < {parity_rhs}"));
        t.record("kodd.even_bound", n, k, parity_rhs >= even_rhs, || format!("{parity_rhs} < {even_rhs}"));
    }

    // Floor estimates.
    if k % 2 == 0 {
        let fl = floor_div(n + 2, k + 2);
        let est = q(n + 2 - k, k + 2);
        let lhs1 = r(2 * fl - m);
        let mid1 = est * 2 - r(m);
        t.record("ff.i.bound", n, k, lhs1 >= mid1, || format!("{lhs1} < {mid1}"));
        let closed1 = q((m - 2) * (k - 2), k + 2);
        t.record("ff.i.closed_form", n, k, mid1 == closed1, || format!("{mid1} != {closed1}"));
        let lhs2 = r(3 * fl - 2 * m);
        let mid2 = est * 3 - r(2 * m);
        t.record("ff.ii.bound", n, k, lhs2 >= mid2, || format!("{lhs2} < {mid2}"));
        let closed2 = q((m - 3) * (k - 4) - 6, k + 2);
        t.record("ff.ii.closed_form", n, k, mid2 == closed2, || format!("{mid2} != {closed2}"));
    } else if n % 2 == 0 {
        let fl = floor_div(n + 2, k + 1);
        let est = q(n + 2 - (k - 1), k + 1);
        let lhs3 = r(2 * fl - m);
        let mid3 = est * 2 - r(m);
        t.record("ff.iii.bound", n, k, lhs3 >= mid3, || format!("{lhs3} < {mid3}"));
        let closed3 = q((m - 2) * (k - 1) + 4, k + 1);
        t.record("ff.iii.closed_form", n, k, mid3 == closed3, || format!("{mid3} != {closed3}"));
        let lhs4 = r(3 * fl - 2 * m);
        let mid4 = est * 3 - r(2 * m);
        t.record("ff.iv.bound", n, k, lhs4 >= mid4, || format!("{lhs4} < {mid4}"));
        let closed4 = q((m - 3) * (k - 2) + 3, k + 1);
        t.record("ff.iv.closed_form", n, k, mid4 == closed4, || format!("{mid4} != {closed4}"));
    }

    // Degree-sum inequalities (k ≥ 3).
    if k >= 3 {
        let two_d = r(2 * d);
        let rhs12 = q((k - 1) * n, k);
        if k % 2 == 0 && m >= 3 {
            t.record("ineq.i", n, k, two_d > rhs12, || format!("2D = {two_d} <= {rhs12}"));
        }
        if k % 2 == 1 && m >= 2 {
            t.record("ineq.ii", n, k, two_d > rhs12, || format!("2D = {two_d} <= {rhs12}"));
        }
        if m >= 2 {
            let lhs = r(3 * d);
            let rhs = q((2 * k - 1) * n, k) - r(floor_div(n - 1, 2)) - r(2);
            t.record("ineq.iii", n, k, lhs >= rhs, || format!("3D = {lhs} < {rhs}"));
        }
    }

    // Estimate on |S| against ⌈k/2⌉ − 1 full parts (3 ≤ k ≤ n/2).
    if k >= 3 && m >= 2 {
        let half_k = ceil_div(k, 2);
        let lhs = d + 1 - (half_k - 1) * m;
        let rhs = ceil_div(n, 2) + floor_div(n + 2, 2 * l) + 1 - m * half_k;
        t.record("k_half.identity", n, k, lhs == rhs, || format!("{lhs} != {rhs}"));
        t.record("k_half.positive", n, k, rhs > 0, || format!("{rhs} <= 0"));
        if k % 2 == 0 {
            let reduced = floor_div(n + 2, k + 2) + 1;
            t.record("k_half.reduced", n, k, rhs == reduced, || format!("{rhs} != {reduced}"));
        } else {
            let reduced = q((k - 1) * n, 2 * k * (k + 1)) + q(4, k + 1);
            t.record("k_half.reduced", n, k, r(rhs) >= reduced && reduced > r(0), || {
                format!("{rhs} < {reduced}")
            });
        }
    }
}

/// [`check_appendix_facts`] plus the floor identity of [`check_eq4_identity`]
/// and the `(n+2)/3` threshold scan over the same grid.
///
/// The identity is reported as fact `eq4`; the threshold comparison is
/// reported under `domcycle_threshold`, where any failure other than
/// `(n, k) = (8, 4)` counts as a violation.
pub fn scan_all(k_max: usize, m_max: usize) -> Result<FactReport> {
    let mut report = check_appendix_facts(k_max, m_max)?;
    let mut extra = Tally::default();
    let mut failures = Vec::new();
    for k in 2..=k_max {
        for m in 1..=m_max {
            let n = m * k;
            let eq4 = check_eq4_identity(n, k)?;
            extra.record("eq4", n as i64, k as i64, eq4, || "floors differ".to_string());
            if k >= 3 && m >= 2 {
                let holds = check_domcycle_threshold(n, k)?;
                if !holds {
                    failures.push((n, k));
                }
                extra.record("domcycle_threshold", n as i64, k as i64, holds || (n, k) == (8, 4), || {
                    "D < (n+2)/3".to_string()
                });
            }
        }
    }
    let extra = extra.finish(k_max, m_max);
    report.checks.extend(extra.checks);
    report.checks.sort_by(|a, b| a.fact.cmp(&b.fact));
    report.violations.extend(extra.violations);
    report.domcycle_threshold_failures = failures;
    Ok(report)
}
