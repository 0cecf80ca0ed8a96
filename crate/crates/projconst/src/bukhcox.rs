//! Executable audit of the lift-matrix inequality chain behind the
//! uniform-weight upper bounds.
//!
//! Each vector u_i of a Parseval frame lifts to the rank-one matrix
//! L_i = ||u_i||^{-3/2} u_i u_i*; the Frobenius Gram of the lifts, the
//! central quadratic inequality, two Cauchy-Schwarz bounds, and a
//! trace-rank inequality combine into mu(m, N) <= delta at the
//! cardinality cap, for every N at once. The functions here evaluate
//! both sides of every displayed inequality as checkable report lines
//! rather than re-deriving the bound.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::frames::{self, cardinality_cap, gram, is_tight, FrameMatrix};
use crate::matrix::{numerical_rank, Field, KahanSum, Matrix};
use crate::projection::delta_bound;

/// Default norm threshold below which a column counts as zero.
pub const ZERO_COLUMN_TOL: f64 = 1e-12;

/// The field-specific angle parameter that closes the bound at the
/// cardinality cap: 1/sqrt(m + 2) over R, 1/sqrt(m + 1) over C (the
/// Welch value of the cap-size system).
pub fn default_phi(m: usize, field: Field) -> f64 {
    match field {
        Field::Real => (m as f64 + 2.0).sqrt().recip(),
        Field::Complex => (m as f64 + 1.0).sqrt().recip(),
    }
}

/// Removes columns with norm below `tol` from a tight frame.
///
/// Dropping zero columns keeps the frame operator (hence tightness with
/// the same constant) and never decreases the uniform objective: the
/// absolute Gram sum is unchanged while the column count shrinks.
pub fn drop_zero_columns(f: &FrameMatrix, tol: f64) -> Result<FrameMatrix, Error> {
    let (tight, alpha) = is_tight(f, frames::DEFAULT_TIGHT_TOL.max(1e-8));
    if !tight {
        return Err(Error::NotTight("zero-column removal expects a tight frame".into()));
    }
    let keep: Vec<usize> = (0..f.len()).filter(|&j| f.col_norm(j) >= tol).collect();
    if keep.len() < f.dim() {
        return Err(Error::Rank(format!(
            "only {} nonzero columns for dimension {}",
            keep.len(),
            f.dim()
        )));
    }
    if keep.len() == f.len() {
        return Ok(f.clone());
    }
    let m = f.dim();
    let out = Matrix::from_fn(f.field(), m, keep.len(), |i, j| f.matrix().get(i, keep[j]));
    let result = FrameMatrix::new(out)?;
    let (still_tight, alpha_after) = is_tight(&result, frames::DEFAULT_TIGHT_TOL.max(1e-8));
    debug_assert!(still_tight && (alpha - alpha_after).abs() < 1e-8);
    debug_assert!(frames::mu_objective(&result) >= frames::mu_objective(f) - 1e-12);
    Ok(result)
}

/// The lift matrices of a frame and their Frobenius Gram.
#[derive(Clone, Debug)]
pub struct LiftSystem {
    /// Rank-one lifts L_i = ||u_i||^{-3/2} u_i u_i*, each m x m.
    pub lifts: Vec<Matrix>,
    /// N x N real Gram: G_ij = ||u_i||^{-3/2} ||u_j||^{-3/2} |<u_i,u_j>|^2.
    pub gram: Matrix,
    /// Column norms ||u_i||.
    pub norms: Vec<f64>,
}

/// Builds the lift system of a Parseval frame and validates its three
/// defining identities: trace L_i = ||u_i||^{1/2}, G_ij = tr(L_i L_j)
/// (Frobenius inner product, checked exhaustively on small systems and
/// on a deterministic sample of pairs on large ones), and the row
/// identity sum_k ||u_k||^{3/2} G_ik = ||u_i||^{1/2}, which encodes
/// Parseval tightness.
pub fn build_lift_system(f: &FrameMatrix) -> Result<LiftSystem, Error> {
    let m = f.dim();
    let n = f.len();
    let norms: Vec<f64> = (0..n).map(|j| f.col_norm(j)).collect();
    if let Some(i) = norms.iter().position(|&x| x < ZERO_COLUMN_TOL) {
        return Err(Error::ZeroColumn(format!(
            "column {i} has norm {:.3e}; drop zero columns first",
            norms[i]
        )));
    }

    let mut lifts = Vec::with_capacity(n);
    for j in 0..n {
        let s = norms[j].powf(-1.5);
        let l = Matrix::from_fn(f.field(), m, m, |r, c| {
            f.matrix().get(r, j) * f.matrix().get(c, j).conj() * s
        });
        let trace = l.trace_re();
        if (trace - norms[j].sqrt()).abs() > 1e-12 * norms[j].sqrt().max(1.0) {
            return Err(Error::Factorization(format!(
                "lift {j} has trace {trace:.17}, expected ||u||^(1/2) = {:.17}",
                norms[j].sqrt()
            )));
        }
        lifts.push(l);
    }

    let plain = gram(f);
    let g = Matrix::from_fn(Field::Real, n, n, |i, j| {
        let v = plain.get(i, j).norm_sqr() * (norms[i] * norms[j]).powf(-1.5);
        Complex64::new(v, 0.0)
    });

    // Frobenius cross-check tr(L_i L_j) = G_ij. Both matrices are
    // Hermitian, so tr(L_i L_j) = sum_rc (L_i)_rc conj((L_j)_rc).
    let frobenius = |i: usize, j: usize| -> f64 {
        let (a, b) = (&lifts[i], &lifts[j]);
        let mut acc = KahanSum::default();
        for r in 0..m {
            for c in 0..m {
                acc.add((a.get(r, c) * b.get(r, c).conj()).re);
            }
        }
        acc.value()
    };
    let exhaustive = n * n * m * m <= 1 << 22;
    for i in 0..n {
        for j in i..n {
            if !exhaustive && (i > 8 || j > 8) && (i != j) && (i + j) % 97 != 0 {
                continue;
            }
            let direct = frobenius(i, j);
            let stored = g.get(i, j).re;
            if (direct - stored).abs() > 1e-12 * stored.abs().max(1.0) {
                return Err(Error::Factorization(format!(
                    "Gram entry ({i},{j}): formula {stored:.17} vs trace {direct:.17}"
                )));
            }
        }
    }

    // Row identity: sum_k ||u_k||^{3/2} G_ik = ||u_i||^{1/2}.
    for i in 0..n {
        let mut acc = KahanSum::default();
        for k in 0..n {
            acc.add(norms[k].powf(1.5) * g.get(i, k).re);
        }
        let expect = norms[i].sqrt();
        if (acc.value() - expect).abs() > 1e-10 * expect.max(1.0) {
            return Err(Error::NotParseval(format!(
                "lift row {i} sums to {:.17}, expected {expect:.17}; frame is not Parseval",
                acc.value()
            )));
        }
    }

    Ok(LiftSystem { lifts, gram: g, norms })
}

/// One audited inequality: lhs <= rhs within 1e-9 relative slack.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AuditLine {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    /// rhs - lhs; nonnegative (up to tolerance) when the line passes.
    pub slack: f64,
    pub pass: bool,
}

impl AuditLine {
    fn check(name: &str, lhs: f64, rhs: f64) -> Self {
        let pass = lhs <= rhs + 1e-9 * rhs.abs().max(1.0);
        AuditLine { name: name.into(), lhs, rhs, slack: rhs - lhs, pass }
    }
}

/// Audit of the central inequality and its two auxiliary bounds.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CentralAudit {
    pub m: usize,
    pub n_cols: usize,
    pub field: Field,
    pub phi: f64,
    /// Numerical rank of the lift Gram.
    pub rank_g: usize,
    /// Whether phi^2 >= (1 - phi)^2 / rank(G), the condition under which
    /// the central inequality yields a nontrivial bound.
    pub phi_feasible: bool,
    pub lines: Vec<AuditLine>,
    pub all_pass: bool,
}

/// Evaluates both sides of the central inequality
///
///   2 phi sum_ij |<u_i,u_j>| <= sum_ij |<u_i,u_j>|^2 / (||u_i|| ||u_j||)
///                              + (phi^2 - (1-phi)^2 / rk(G)) (sum_i ||u_i||)^2
///
/// together with the two bounds that absorb its right side:
/// sum_ij |<u_i,u_j>|^2 / (||u_i|| ||u_j||) <= N (equality iff all norms
/// are equal) and (sum_i ||u_i||)^2 <= N m. Every line reports lhs, rhs
/// and pass/fail at 1e-9 relative tolerance.
pub fn audit_central_inequality(f: &FrameMatrix, phi: f64) -> Result<CentralAudit, Error> {
    if !(phi > 0.0) {
        return Err(Error::Domain(format!("phi must be positive, got {phi}")));
    }
    let system = build_lift_system(f)?;
    let n = f.len();
    let m = f.dim();
    let plain = gram(f);

    let mut abs_sum = KahanSum::default();
    let mut normalized_sq = KahanSum::default();
    for i in 0..n {
        for j in 0..n {
            let inner = plain.get(i, j);
            abs_sum.add(inner.norm());
            normalized_sq.add(inner.norm_sqr() / (system.norms[i] * system.norms[j]));
        }
    }
    let mut norm_sum = KahanSum::default();
    for &x in &system.norms {
        norm_sum.add(x);
    }
    let norm_sum_sq = norm_sum.value() * norm_sum.value();

    let rank_g = numerical_rank(&system.gram, 1e-8);
    let coeff = phi * phi - (1.0 - phi) * (1.0 - phi) / rank_g as f64;

    let lines = vec![
        AuditLine::check(
            "central_inequality",
            2.0 * phi * abs_sum.value(),
            normalized_sq.value() + coeff * norm_sum_sq,
        ),
        AuditLine::check("normalized_square_sum_le_N", normalized_sq.value(), n as f64),
        AuditLine::check("norm_sum_square_le_Nm", norm_sum_sq, (n * m) as f64),
    ];
    let all_pass = lines.iter().all(|l| l.pass);
    Ok(CentralAudit {
        m,
        n_cols: n,
        field: f.field(),
        phi,
        rank_g,
        phi_feasible: coeff >= 0.0,
        lines,
        all_pass,
    })
}

/// Audit of the rank and trace structure of A = a G - b v v* with
/// v_i = ||u_i||^{1/2}.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RankAudit {
    pub a: f64,
    pub b: f64,
    pub rank_a: usize,
    pub rank_g: usize,
    /// Cap on rank(G): lifts live in the m(m+1)/2-dimensional space of
    /// symmetric matrices over R, the m^2-dimensional Hermitian space
    /// over C.
    pub rank_cap: usize,
    pub rank_ok: bool,
    /// tr(A A*) and (tr A)^2 / rank(A); the first dominates the second.
    pub trace_lhs: f64,
    pub trace_rhs: f64,
    pub trace_ok: bool,
}

/// Builds A_ij = a G_ij - b ||u_i||^{1/2} ||u_j||^{1/2} and checks that
/// rank(A) <= rank(G) -- the row identity puts the rank-one correction
/// inside range(G) -- plus the trace-rank inequality
/// tr(A A*) >= (tr A)^2 / rank(A).
pub fn audit_rank_structure(f: &FrameMatrix, a: f64, b: f64) -> Result<RankAudit, Error> {
    let system = build_lift_system(f)?;
    let n = f.len();
    let sqrt_norms: Vec<f64> = system.norms.iter().map(|x| x.sqrt()).collect();
    let mat_a = Matrix::from_fn(Field::Real, n, n, |i, j| {
        Complex64::new(a * system.gram.get(i, j).re - b * sqrt_norms[i] * sqrt_norms[j], 0.0)
    });
    let rank_a = numerical_rank(&mat_a, 1e-8);
    let rank_g = numerical_rank(&system.gram, 1e-8);
    let rank_cap = cardinality_cap(f.dim(), f.field());

    let mut frob = KahanSum::default();
    for i in 0..n {
        for j in 0..n {
            let x = mat_a.get(i, j).re;
            frob.add(x * x);
        }
    }
    let trace_lhs = frob.value();
    let (trace_rhs, trace_ok) = if rank_a == 0 {
        (0.0, true)
    } else {
        let tr = mat_a.trace_re();
        let rhs = tr * tr / rank_a as f64;
        (rhs, trace_lhs >= rhs - 1e-9 * rhs.abs().max(1.0))
    };

    Ok(RankAudit {
        a,
        b,
        rank_a,
        rank_g,
        rank_cap,
        rank_ok: rank_a <= rank_g,
        trace_lhs,
        trace_rhs,
        trace_ok,
    })
}

/// Uniform-objective upper bound mu(m, N) <= delta at the cardinality
/// cap, valid for every N at once: delta(m, m(m+1)/2) over R with angle
/// parameter 1/sqrt(m + 2), delta(m, m^2) over C with 1/sqrt(m + 1).
/// m = 1 returns the trivial bound 1.
pub fn mu_upper_bound(m: usize, field: Field) -> Result<f64, Error> {
    if m == 0 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    if m == 1 {
        return Ok(1.0);
    }
    delta_bound(m, cardinality_cap(m, field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{real_maximal_etf, simplex_etf};
    use crate::frames::{mu_objective, random_parseval, welch_angle};
    use crate::matrix::Matrix;
    use approx::assert_relative_eq;

    fn padded_with_zero_columns(f: &FrameMatrix, extra: usize) -> FrameMatrix {
        let m = f.dim();
        let out = Matrix::from_fn(f.field(), m, f.len() + extra, |i, j| {
            if j < f.len() {
                f.matrix().get(i, j)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        FrameMatrix::new(out).unwrap()
    }

    #[test]
    fn dropping_no_columns_is_identity() {
        let f = simplex_etf(2, Field::Real).unwrap();
        let g = drop_zero_columns(&f, ZERO_COLUMN_TOL).unwrap();
        assert_eq!(g.matrix(), f.matrix());
    }

    #[test]
    fn dropping_zero_padding_raises_the_uniform_objective() {
        let f = simplex_etf(2, Field::Real).unwrap();
        let padded = padded_with_zero_columns(&f, 2);
        let before = mu_objective(&padded);
        let g = drop_zero_columns(&padded, ZERO_COLUMN_TOL).unwrap();
        assert_eq!(g.len(), 3);
        assert!(mu_objective(&g) > before);
        assert_relative_eq!(mu_objective(&g), 4.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn dropping_below_dimension_is_a_rank_error() {
        // A single nonzero column cannot span R^2... and an all-zero
        // frame is not even tight.
        let one = Matrix::from_real(Field::Real, 2, 3, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let f = FrameMatrix::new(one).unwrap();
        assert!(matches!(
            drop_zero_columns(&f, ZERO_COLUMN_TOL),
            Err(Error::NotTight(_) | Error::Rank(_))
        ));
        let zero = Matrix::zeros(Field::Real, 2, 3);
        let f = FrameMatrix::new(zero).unwrap();
        assert!(drop_zero_columns(&f, ZERO_COLUMN_TOL).is_err());
    }

    #[test]
    fn lift_gram_of_an_orthonormal_basis_is_the_identity() {
        for field in [Field::Real, Field::Complex] {
            let eye = FrameMatrix::new(Matrix::identity(field, 4)).unwrap();
            let sys = build_lift_system(&eye).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert_relative_eq!(sys.gram.get(i, j).re, expect, epsilon = 1e-14);
                }
            }
        }
    }

    #[test]
    fn lift_gram_matches_the_closed_form_on_the_simplex() {
        let f = simplex_etf(2, Field::Real).unwrap();
        let sys = build_lift_system(&f).unwrap();
        // Norms sqrt(2/3). Diagonal G_ii = ||u||^{-3} ||u||^4 = ||u||;
        // off-diagonal G_ij = ||u||^{-3} |<u_i,u_j>|^2 = (3/2)^{3/2}/9.
        let norm = (2.0f64 / 3.0).sqrt();
        let offdiag = 1.5f64.powf(1.5) / 9.0;
        for i in 0..3 {
            assert_relative_eq!(sys.norms[i], norm, epsilon = 1e-12);
            for j in 0..3 {
                let expect = if i == j { norm } else { offdiag };
                assert_relative_eq!(sys.gram.get(i, j).re, expect, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn one_dimensional_lift_gram_has_rank_one() {
        let f = simplex_etf(1, Field::Real).unwrap();
        let sys = build_lift_system(&f).unwrap();
        // G_ij = ||u_i||^{1/2} ||u_j||^{1/2} for scalars.
        for i in 0..2 {
            for j in 0..2 {
                let expect = (sys.norms[i] * sys.norms[j]).sqrt();
                assert_relative_eq!(sys.gram.get(i, j).re, expect, epsilon = 1e-12);
            }
        }
        assert_eq!(numerical_rank(&sys.gram, 1e-8), 1);
    }

    #[test]
    fn zero_columns_are_rejected_by_the_lift_builder() {
        let f = simplex_etf(2, Field::Real).unwrap();
        let padded = padded_with_zero_columns(&f, 1);
        assert!(matches!(build_lift_system(&padded), Err(Error::ZeroColumn(_))));
    }

    #[test]
    fn central_inequality_is_tight_on_maximal_frames() {
        // At an ETF filling the cardinality cap, with phi at the Welch
        // value, every audited line is an equality.
        for (f, phi) in [
            (simplex_etf(2, Field::Real).unwrap(), 0.5),
            (real_maximal_etf(3).unwrap(), 5.0f64.sqrt().recip()),
        ] {
            let audit = audit_central_inequality(&f, phi).unwrap();
            assert!(audit.all_pass);
            assert!(audit.phi_feasible);
            for line in &audit.lines {
                assert!(
                    line.slack.abs() < 1e-9 * line.rhs.abs().max(1.0),
                    "{} has slack {:.3e}",
                    line.name,
                    line.slack
                );
            }
        }
    }

    #[test]
    fn central_inequality_holds_strictly_on_random_frames() {
        let f = random_parseval(3, 7, Field::Real, 42).unwrap();
        let audit = audit_central_inequality(&f, 5.0f64.sqrt().recip()).unwrap();
        assert!(audit.all_pass);
        let central = &audit.lines[0];
        assert!(central.slack > 1e-6, "expected strict slack, got {:.3e}", central.slack);
    }

    #[test]
    fn central_inequality_at_phi_one_on_an_orthonormal_basis() {
        let eye = FrameMatrix::new(Matrix::identity(Field::Real, 3)).unwrap();
        let audit = audit_central_inequality(&eye, 1.0).unwrap();
        assert!(audit.all_pass);
        assert!(audit.phi_feasible);
        // 2 * 1 * 3 on the left, 3 + 9 on the right.
        assert_relative_eq!(audit.lines[0].lhs, 6.0, epsilon = 1e-12);
        assert_relative_eq!(audit.lines[0].rhs, 12.0, epsilon = 1e-12);
    }

    #[test]
    fn norm_skewed_tight_frames_leave_cauchy_schwarz_slack() {
        // Two orthonormal bases with different scales: tight, but the
        // normalized square sum stays strictly below N.
        let a = 0.8f64;
        let b = (1.0 - a * a).sqrt();
        let u = Matrix::from_fn(Field::Real, 2, 4, |i, j| {
            let v = match j {
                0 | 1 => {
                    if i == j {
                        a
                    } else {
                        0.0
                    }
                }
                _ => {
                    if i == j - 2 {
                        b
                    } else {
                        0.0
                    }
                }
            };
            Complex64::new(v, 0.0)
        });
        let f = FrameMatrix::new(u).unwrap();
        let audit = audit_central_inequality(&f, 0.5).unwrap();
        let cs = &audit.lines[1];
        assert_eq!(cs.name, "normalized_square_sum_le_N");
        assert!(cs.pass);
        assert!(cs.slack > 0.01, "expected strict slack, got {:.3e}", cs.slack);
    }

    #[test]
    fn invalid_phi_is_a_domain_error() {
        let f = simplex_etf(2, Field::Real).unwrap();
        assert!(matches!(audit_central_inequality(&f, 0.0), Err(Error::Domain(_))));
        assert!(matches!(audit_central_inequality(&f, -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn rank_audit_boundary_coefficients() {
        let f = simplex_etf(2, Field::Real).unwrap();
        // a = 1, b = 0: A = G.
        let audit = audit_rank_structure(&f, 1.0, 0.0).unwrap();
        assert_eq!(audit.rank_a, audit.rank_g);
        assert!(audit.rank_ok && audit.trace_ok);
        // a = 0, b = 1: A is minus a rank-one outer product.
        let audit = audit_rank_structure(&f, 0.0, 1.0).unwrap();
        assert_eq!(audit.rank_a, 1);
        assert!(audit.rank_ok && audit.trace_ok);
        // a = b = 0: A = 0; the trace-rank line passes trivially.
        let audit = audit_rank_structure(&f, 0.0, 0.0).unwrap();
        assert_eq!(audit.rank_a, 0);
        assert!(audit.rank_ok && audit.trace_ok);
    }

    #[test]
    fn rank_audit_with_the_proof_scaling() {
        let f = simplex_etf(2, Field::Real).unwrap();
        let phi = 0.5;
        let audit = audit_rank_structure(&f, 1.0, phi * phi / (1.0 + phi)).unwrap();
        assert!(audit.rank_a <= 3);
        assert!(audit.rank_ok && audit.trace_ok);
        assert_eq!(audit.rank_cap, 3);
    }

    #[test]
    fn rank_of_the_lift_gram_respects_the_field_cap() {
        for (field, seed) in [(Field::Real, 7u64), (Field::Complex, 8u64)] {
            for (m, n) in [(2usize, 6usize), (3, 10), (4, 12)] {
                let f = random_parseval(m, n, field, seed + (m * n) as u64).unwrap();
                let sys = build_lift_system(&f).unwrap();
                let rank = numerical_rank(&sys.gram, 1e-8);
                assert!(
                    rank <= cardinality_cap(m, field),
                    "rank {rank} exceeds cap for m = {m}, {field}"
                );
            }
        }
    }

    #[test]
    fn upper_bound_closed_forms() {
        assert_relative_eq!(mu_upper_bound(2, Field::Real).unwrap(), 4.0 / 3.0, epsilon = 1e-12);
        assert_relative_eq!(mu_upper_bound(7, Field::Real).unwrap(), 2.5, epsilon = 1e-12);
        assert_relative_eq!(
            mu_upper_bound(4, Field::Complex).unwrap(),
            (1.0 + 3.0 * 5.0f64.sqrt()) / 4.0,
            epsilon = 1e-12
        );
        assert_eq!(mu_upper_bound(1, Field::Real).unwrap(), 1.0);
        assert_eq!(mu_upper_bound(1, Field::Complex).unwrap(), 1.0);
        assert!(mu_upper_bound(0, Field::Real).is_err());
    }

    #[test]
    fn uniform_objective_stays_below_the_bound_on_random_frames() {
        let mut rng = crate::rng::seeded(0xB0B);
        for trial in 0..30 {
            let m = 2 + (crate::rng::unit(&mut rng) * 4.0) as usize;
            let n = m + 1 + (crate::rng::unit(&mut rng) * 14.0) as usize;
            let field = if trial % 2 == 0 { Field::Real } else { Field::Complex };
            let f = random_parseval(m, n.min(20), field, 1000 + trial).unwrap();
            let bound = mu_upper_bound(m, field).unwrap();
            let value = mu_objective(&f);
            assert!(
                value <= bound + 1e-8,
                "trial {trial}: mu {value} exceeds bound {bound} (m = {m}, n = {n})"
            );
        }
    }

    #[test]
    fn default_phi_matches_the_welch_value_at_the_caps() {
        for m in 2..8 {
            let real_cap = cardinality_cap(m, Field::Real);
            assert_relative_eq!(
                default_phi(m, Field::Real),
                welch_angle(m, real_cap).unwrap(),
                epsilon = 1e-14
            );
            let complex_cap = cardinality_cap(m, Field::Complex);
            assert_relative_eq!(
                default_phi(m, Field::Complex),
                welch_angle(m, complex_cap).unwrap(),
                epsilon = 1e-14
            );
        }
    }
}
