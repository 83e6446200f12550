//! Exact evaluation of the degree thresholds for balanced k-partite graphs.
//!
//! Everything here is integer or rational arithmetic; no floating point is
//! involved anywhere, since the quantities of interest differ by exactly one.

mod facts;

pub use facts::{check_appendix_facts, scan_all, FactReport, FactSummary, FactViolation};

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational used for the non-integer bounds.
pub type Rational = Ratio<i64>;

/// `⌊a / b⌋` for `b > 0`.
pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// `⌈a / b⌉` for `b > 0`.
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -(-a).div_euclid(b)
}

/// `⌈(k+1)/2⌉`, the number of parts carrying the independent set in the
/// tightness construction.
pub fn half_parts(k: usize) -> usize {
    (k + 2) / 2
}

fn to_i64(x: usize) -> i64 {
    i64::try_from(x).expect("parameter does not fit in i64")
}

/// `k | n`, `2 <= k <= n`.
pub(crate) fn validate_partition_params(n: usize, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!("k must be at least 2, got {k}")));
    }
    if n < k {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    if !n.is_multiple_of(k) {
        return Err(Error::PartCountNotDivisor { n, k });
    }
    Ok(())
}

fn validate_theorem_params(n: usize, k: usize) -> Result<()> {
    validate_partition_params(n, k)?;
    if n < 3 {
        return Err(Error::InvalidParameters(format!("n must be at least 3, got {n}")));
    }
    Ok(())
}

// Unchecked core formula; callers validate.
pub(crate) fn threshold_raw(n: i64, k: i64) -> i64 {
    let l = (k + 2) / 2;
    ceil_div(n, 2) + floor_div(n + 2, 2 * l) - n / k
}

fn cfgjl_raw(n: i64, k: i64) -> Rational {
    let l = (k + 2) / 2;
    Rational::new(n, 2) + Rational::new(n, 2 * l) - Rational::new(n, k)
}

/// The sharp threshold `D(n,k) = ⌈n/2⌉ + ⌊(n+2)/(2⌈(k+1)/2⌉)⌋ − n/k`.
pub fn theorem_threshold(n: usize, k: usize) -> Result<i64> {
    validate_theorem_params(n, k)?;
    Ok(threshold_raw(to_i64(n), to_i64(k)))
}

/// Right-hand side of the older strict bound, `n/2 + n/(2⌈(k+1)/2⌉) − n/k`.
pub fn cfgjl_bound(n: usize, k: usize) -> Result<Rational> {
    validate_theorem_params(n, k)?;
    Ok(cfgjl_raw(to_i64(n), to_i64(k)))
}

/// Whether `D(n,k)` is the ceiling or the floor of [`cfgjl_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rounding {
    CeilCase,
    FloorCase,
}

/// Residue rule for the ceiling case:
///
/// * `k` even: `n ≡ k (mod k+2)`;
/// * `k` odd, `n` even: `n ≡ k−1 (mod k+1)`;
/// * `k` odd, `n` odd: `n ≡ j (mod k+1)` with `j = k` or `j` odd and
///   `j ≤ (k+1)/2`.
///
/// When the bound is not an integer this is equivalent to `D = ⌈bound⌉`.
/// When it is an integer both roundings coincide and the rule is used as
/// the tie-break.
pub fn congruence_predicts_ceil(n: usize, k: usize) -> bool {
    if k.is_multiple_of(2) {
        n % (k + 2) == k
    } else if n.is_multiple_of(2) {
        n % (k + 1) == k - 1
    } else {
        let j = n % (k + 1);
        j == k || (j % 2 == 1 && j <= k.div_ceil(2))
    }
}

fn rounding_raw(n: usize, k: usize) -> Rounding {
    let d = threshold_raw(to_i64(n), to_i64(k));
    let b = cfgjl_raw(to_i64(n), to_i64(k));
    let (c, f) = (b.ceil().to_integer(), b.floor().to_integer());
    if c == f {
        if congruence_predicts_ceil(n, k) {
            Rounding::CeilCase
        } else {
            Rounding::FloorCase
        }
    } else if d == c {
        Rounding::CeilCase
    } else {
        debug_assert_eq!(d, f);
        Rounding::FloorCase
    }
}

/// Compares `D(n,k)` against both roundings of [`cfgjl_bound`].
///
/// Integer bounds (where the two roundings agree) are resolved by
/// [`congruence_predicts_ceil`].
pub fn classify_rounding(n: usize, k: usize) -> Result<Rounding> {
    validate_partition_params(n, k)?;
    Ok(rounding_raw(n, k))
}

/// `(k = 2 ∧ 4 | n) ∨ (k = n/2 ∧ 4 | n)`.
pub fn is_exception(n: usize, k: usize) -> Result<bool> {
    validate_partition_params(n, k)?;
    Ok(n.is_multiple_of(4) && (k == 2 || 2 * k == n))
}

/// `D(n,k)`, plus one in the two exceptional regimes.
pub fn required_degree(n: usize, k: usize) -> Result<i64> {
    let d = theorem_threshold(n, k)?;
    Ok(d + i64::from(is_exception(n, k)?))
}

/// `⌊(n+2)/(2⌈(k+1)/2⌉)⌋ = ⌊⌈(n+1)/2⌉ / ⌈(k+1)/2⌉⌋`.
pub fn check_eq4_identity(n: usize, k: usize) -> Result<bool> {
    validate_partition_params(n, k)?;
    let (n, l) = (to_i64(n), to_i64(half_parts(k)));
    Ok(floor_div(n + 2, 2 * l) == floor_div(ceil_div(n + 1, 2), l))
}

/// `D(n,k) ≥ (n+2)/3`, compared exactly. Requires `3 ≤ k ≤ n/2`.
pub fn check_domcycle_threshold(n: usize, k: usize) -> Result<bool> {
    validate_theorem_params(n, k)?;
    if k < 3 || 2 * k > n {
        return Err(Error::InvalidParameters(format!(
            "domcycle threshold needs 3 <= k <= n/2, got n = {n}, k = {k}"
        )));
    }
    let d = threshold_raw(to_i64(n), to_i64(k));
    Ok(Rational::from_integer(d) >= Rational::new(to_i64(n) + 2, 3))
}

fn serialize_ratio<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// All bounds and flags for one `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdProfile {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub theorem_threshold: i64,
    #[serde(serialize_with = "serialize_ratio")]
    pub cfgjl_bound: Rational,
    pub rounding: Rounding,
    pub is_exception: bool,
    pub required_degree: i64,
}

impl ThresholdProfile {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let theorem_threshold = theorem_threshold(n, k)?;
        let is_exception = is_exception(n, k)?;
        Ok(Self {
            n,
            k,
            m: n / k,
            theorem_threshold,
            cfgjl_bound: cfgjl_bound(n, k)?,
            rounding: classify_rounding(n, k)?,
            is_exception,
            required_degree: theorem_threshold + i64::from(is_exception),
        })
    }
}
