//! Column replication: the constructive bridge from weighted to uniform
//! objectives.
//!
//! Any weight vector t can be approximated by a rational vector n/q;
//! replacing column u_i of a Parseval frame by n_i^2 copies of u_i/n_i
//! preserves tightness and turns the weighted objective at t into the
//! uniform objective of the replicated frame. Chaining a weighted search
//! with this construction produces uniform-weight witnesses:
//! mu(m, N~) >= (lambda(m, N) - eps) / (1 + eps)^2 as eps -> 0, which is
//! how the suprema over N of the weighted and uniform constants coincide.

use serde::{Deserialize, Serialize};

use crate::config::OptConfig;
use crate::error::Error;
use crate::frames::{self, gram_abs, FrameMatrix};
use crate::matrix::{Field, KahanSum, Matrix};
use crate::projection::{lambda_search, objective, WeightVector};

/// Largest number of columns `replicate` will materialize by default.
pub const DEFAULT_MAX_COLUMNS: usize = 1_000_000;

/// Column limit for the optional materialized cross-check inside the
/// witness chain: evaluating the uniform objective costs a full Gram,
/// quadratic in the column count, so it only runs on small instances.
const MATERIALIZED_CHECK_COLUMNS: usize = 2_048;

/// Largest denominator the rounding search will try.
const MAX_DENOMINATOR: u64 = 10_000_000;

/// Largest denominator searched in exact mode (eps = 0).
const MAX_EXACT_DENOMINATOR: u64 = 1_000_000;

/// Nonnegative rational weights n_i / q with a common denominator.
///
/// The implied weight vector is t_eps = (n_1/q, ..., n_N/q); its norm
/// satisfies ||t_eps|| * q = sqrt(n_1^2 + ... + n_N^2) exactly in
/// integer arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalWeights {
    pub q: u64,
    pub n: Vec<u64>,
}

impl RationalWeights {
    pub fn new(q: u64, n: Vec<u64>) -> Result<Self, Error> {
        if q == 0 {
            return Err(Error::Domain("denominator must be positive".into()));
        }
        if n.is_empty() {
            return Err(Error::Domain("empty numerator vector".into()));
        }
        Ok(RationalWeights { q, n })
    }

    /// Total replicated column count N~ = sum of n_i^2, exactly.
    pub fn n_tilde(&self) -> u128 {
        self.n.iter().map(|&x| (x as u128) * (x as u128)).sum()
    }

    /// The implied (not necessarily unit) weight vector n_i / q.
    pub fn t_eps(&self) -> Vec<f64> {
        self.n.iter().map(|&x| x as f64 / self.q as f64).collect()
    }

    /// || t_eps ||_2 = sqrt(N~) / q.
    pub fn t_eps_norm(&self) -> f64 {
        (self.n_tilde() as f64).sqrt() / self.q as f64
    }
}

fn approximation_error(t: &[f64], w: &RationalWeights) -> f64 {
    let mut acc = KahanSum::default();
    for (ti, &ni) in t.iter().zip(&w.n) {
        let d = ti - ni as f64 / w.q as f64;
        acc.add(d * d);
    }
    acc.value().sqrt()
}

/// Rounds a weight vector to rational weights n/q with ||t - n/q|| <= eps,
/// taking q as the smallest power of `base` that achieves the bound.
///
/// eps = 0 requests exact mode: the smallest q <= 10^6 (any integer, not
/// just powers) for which rounding reproduces t to machine precision and
/// sum n_i^2 = q^2 holds in integer arithmetic. Exact mode suits weight
/// vectors that are exact rationals, e.g. (3/5, 4/5) -> q = 5, n = (3, 4).
pub fn rationalize_with_base(
    t: &WeightVector,
    eps: f64,
    base: u64,
) -> Result<RationalWeights, Error> {
    if base < 2 {
        return Err(Error::Domain("base must be at least 2".into()));
    }
    if !eps.is_finite() || eps < 0.0 {
        return Err(Error::Domain("eps must be finite and nonnegative".into()));
    }
    let t = t.as_slice();
    if eps == 0.0 {
        for q in 1..=MAX_EXACT_DENOMINATOR {
            let n: Vec<u64> =
                t.iter().map(|&ti| (ti * q as f64).round().max(0.0) as u64).collect();
            let w = RationalWeights { q, n };
            let sum_sq = w.n_tilde();
            if sum_sq == (q as u128) * (q as u128) && approximation_error(t, &w) <= 1e-12 {
                return Ok(w);
            }
        }
        return Err(Error::Precision(format!(
            "no exact denominator up to {MAX_EXACT_DENOMINATOR}; weights are not small rationals"
        )));
    }
    let mut q: u64 = 1;
    loop {
        let n: Vec<u64> = t.iter().map(|&ti| (ti * q as f64).round().max(0.0) as u64).collect();
        let w = RationalWeights { q, n };
        if approximation_error(t, &w) <= eps {
            return Ok(w);
        }
        q = match q.checked_mul(base) {
            Some(next) if next <= MAX_DENOMINATOR => next,
            _ => {
                return Err(Error::Precision(format!(
                    "eps = {eps:.3e} needs a denominator beyond the budget {MAX_DENOMINATOR}"
                )))
            }
        };
    }
}

/// `rationalize_with_base` with the default base 10.
pub fn rationalize(t: &WeightVector, eps: f64) -> Result<RationalWeights, Error> {
    rationalize_with_base(t, eps, 10)
}

/// Replaces column u_i by n_i^2 copies of u_i / n_i; columns with
/// n_i = 0 contribute no block. The block sum n_i^2 (u_i/n_i)(u_i/n_i)*
/// equals u_i u_i*, so the result of replicating a Parseval frame is
/// again Parseval -- unless a zero weight hits a nonzero column, which
/// the output tightness check rejects.
pub fn replicate_with_limit(
    u: &FrameMatrix,
    w: &RationalWeights,
    max_columns: usize,
) -> Result<FrameMatrix, Error> {
    if w.n.len() != u.len() {
        return Err(Error::Shape(format!(
            "{} weights for {} columns",
            w.n.len(),
            u.len()
        )));
    }
    let input_residual = frames::parseval_residual(u);
    if input_residual >= 1e-8 {
        return Err(Error::NotParseval(format!(
            "replication needs a Parseval input; residual {input_residual:.3e}"
        )));
    }
    let n_tilde = w.n_tilde();
    if n_tilde == 0 {
        return Err(Error::EmptyFrame("all replication weights are zero".into()));
    }
    if n_tilde > max_columns as u128 {
        return Err(Error::Precision(format!(
            "refusing to materialize {n_tilde} columns (limit {max_columns}); \
             use the analytic objective instead"
        )));
    }
    let m = u.dim();
    let mut out = Matrix::zeros(u.field(), m, n_tilde as usize);
    let mut col = 0usize;
    for (i, &ni) in w.n.iter().enumerate() {
        if ni == 0 {
            continue;
        }
        let inv = 1.0 / ni as f64;
        for _ in 0..ni * ni {
            for row in 0..m {
                out.set(row, col, u.matrix().get(row, i) * inv);
            }
            col += 1;
        }
    }
    let f = FrameMatrix::new(out)?;
    let residual = frames::parseval_residual(&f);
    let allowed = 1e-10f64.max(2.0 * input_residual);
    if residual > allowed {
        return Err(Error::NotTight(format!(
            "replicated frame has tightness residual {residual:.3e} \
             (a zero weight on a nonzero column breaks the block identity)"
        )));
    }
    Ok(f)
}

/// `replicate_with_limit` with the default 10^6-column guardrail.
pub fn replicate(u: &FrameMatrix, w: &RationalWeights) -> Result<FrameMatrix, Error> {
    replicate_with_limit(u, w, DEFAULT_MAX_COLUMNS)
}

/// Uniform objective of the replicated frame, computed without
/// materializing it: (1/N~) sum_ij n_i n_j |<u_i, u_j>|. Each block pair
/// (i, j) contributes n_i^2 n_j^2 entries of |<u_i,u_j>| / (n_i n_j).
pub fn replicated_mu_objective(u: &FrameMatrix, w: &RationalWeights) -> Result<f64, Error> {
    if w.n.len() != u.len() {
        return Err(Error::Shape(format!(
            "{} weights for {} columns",
            w.n.len(),
            u.len()
        )));
    }
    let n_tilde = w.n_tilde();
    if n_tilde == 0 {
        return Err(Error::EmptyFrame("all replication weights are zero".into()));
    }
    let g = gram_abs(u);
    let mut acc = KahanSum::default();
    for i in 0..u.len() {
        if w.n[i] == 0 {
            continue;
        }
        for j in 0..u.len() {
            if w.n[j] == 0 {
                continue;
            }
            acc.add(w.n[i] as f64 * w.n[j] as f64 * g.get(i, j).re);
        }
    }
    Ok(acc.value() / n_tilde as f64)
}

/// Checks the replication identity: the uniform objective of the
/// replicated frame (lhs, analytic form) equals the weighted objective
/// at the normalized rational weights (rhs). Returns (lhs, rhs, ok) with
/// ok iff |lhs - rhs| < 1e-10 max(1, rhs).
pub fn verify_replication_identity(
    u: &FrameMatrix,
    w: &RationalWeights,
) -> Result<(f64, f64, bool), Error> {
    let lhs = replicated_mu_objective(u, w)?;
    let norm = w.t_eps_norm();
    let t: Vec<f64> = w.t_eps().iter().map(|x| x / norm).collect();
    let rhs = objective(&WeightVector::new(t)?, u)?;
    let ok = (lhs - rhs).abs() < 1e-10 * rhs.max(1.0);
    Ok((lhs, rhs, ok))
}

/// End-to-end witness chain from a weighted search to a uniform bound.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessReport {
    pub m: usize,
    pub n_cols: usize,
    pub field: Field,
    pub eps: f64,
    /// Best weighted objective value found by the search.
    pub lambda_value: f64,
    pub rational: RationalWeights,
    /// Actual rounding error ||t - t_eps||, at most eps.
    pub approx_error: f64,
    pub t_eps_norm: f64,
    /// Columns of the replicated frame, sum of n_i^2.
    pub n_tilde: u64,
    /// Uniform objective of the replicated frame (analytic form).
    pub witness_value: f64,
    /// Same value from the materialized frame, when within the column
    /// guardrail.
    pub materialized_value: Option<f64>,
    /// First-order target (lambda - eps) / (1 + eps)^2 the witness is
    /// expected to dominate.
    pub eps_lower_bound: f64,
    pub bound_satisfied: bool,
}

/// Runs a weighted search, rounds the optimal weights to rationals with
/// error at most eps, and evaluates the uniform objective of the
/// replicated frame. The report chains every intermediate quantity; the
/// witness dominates (lambda - eps)/(1 + eps)^2 up to the first-order
/// terms the rounding introduces.
///
/// For N = m every unit weight vector is optimal (the frame is an
/// orthonormal basis), so the chain uses the uniform weights, which
/// rationalize and replicate without zero blocks; the witness is exactly 1.
pub fn lambda_to_mu_witness(
    m: usize,
    n: usize,
    field: Field,
    eps: f64,
    config: &OptConfig,
) -> Result<WitnessReport, Error> {
    let report = lambda_search(m, n, field, config)?;
    let (weights, lambda_value) = if n == m {
        (WeightVector::uniform(n), report.best_value)
    } else {
        (WeightVector::new(report.best_weights.clone())?, report.best_value)
    };
    let rational = rationalize(&weights, eps)?;
    let approx_error = approximation_error(weights.as_slice(), &rational);
    let witness_value = replicated_mu_objective(&report.best_frame, &rational)?;
    let materialized_value =
        match replicate_with_limit(&report.best_frame, &rational, MATERIALIZED_CHECK_COLUMNS) {
            Ok(f) => Some(frames::mu_objective(&f)),
            Err(Error::Precision(_)) => None,
            Err(e) => return Err(e),
        };
    let n_tilde = u64::try_from(rational.n_tilde())
        .map_err(|_| Error::Precision("replicated column count exceeds u64".into()))?;
    let eps_lower_bound = if eps > 0.0 {
        (lambda_value - eps) / ((1.0 + eps) * (1.0 + eps))
    } else {
        lambda_value
    };
    let bound_satisfied = witness_value >= eps_lower_bound - 1e-12;
    Ok(WitnessReport {
        m,
        n_cols: n,
        field,
        eps,
        lambda_value,
        approx_error,
        t_eps_norm: rational.t_eps_norm(),
        n_tilde,
        witness_value,
        materialized_value,
        eps_lower_bound,
        bound_satisfied,
        rational,
    })
}
