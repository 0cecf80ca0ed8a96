//! Frames of N vectors in K^m: Gram matrices, tightness, coherence
//! profiles, and equiangular tight frame certificates.
//!
//! A frame is stored as the m x N matrix whose columns are the vectors.
//! A frame is tight when U U* = c I for some c > 0, Parseval when c = 1.
//! An equiangular tight frame (ETF) is a tight frame of equal-norm vectors
//! whose pairwise normalized inner products all share one modulus; that
//! modulus is forced to the Welch level sqrt((N - m) / (m (N - 1))).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::{orthonormalize_rows, Field, KahanSum, Matrix};

/// Absolute tolerance for tightness and certificate residuals.
pub const DEFAULT_TIGHT_TOL: f64 = 1e-9;

/// Relative tolerance separating zero from nonzero singular values.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// N vectors in K^m, stored as the columns of an m x N matrix with N >= m.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrameMatrix {
    matrix: Matrix,
}

impl FrameMatrix {
    pub fn new(matrix: Matrix) -> Result<Self, Error> {
        if matrix.rows() == 0 {
            return Err(Error::Shape("frame needs at least one dimension".into()));
        }
        if matrix.cols() < matrix.rows() {
            return Err(Error::Shape(format!(
                "{} vectors cannot span dimension {}",
                matrix.cols(),
                matrix.rows()
            )));
        }
        Ok(FrameMatrix { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn len(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_empty(&self) -> bool {
        false // N >= m >= 1 by construction
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn col_norm(&self, j: usize) -> f64 {
        self.matrix.col_norm(j)
    }
}

/// Gram matrix U* U (N x N, Hermitian).
pub fn gram(f: &FrameMatrix) -> Matrix {
    f.matrix().adjoint().mul(f.matrix()).expect("dimensions agree by construction")
}

/// Entrywise modulus of the Gram matrix: nonnegative, symmetric, real.
pub fn gram_abs(f: &FrameMatrix) -> Matrix {
    gram(f).entrywise_abs()
}

/// Tests U U* = c I. Returns the flag together with alpha = 1/c, the
/// factor that rescales the frame to Parseval. A frame whose columns are
/// all zero is reported as not tight.
pub fn is_tight(f: &FrameMatrix, tol: f64) -> (bool, f64) {
    let uu = f.matrix().mul(&f.matrix().adjoint()).expect("square product");
    let c = uu.trace_re() / f.dim() as f64;
    if c <= tol {
        return (false, f64::INFINITY);
    }
    let flag = uu.max_dev_from_scaled_identity(c) < tol;
    (flag, 1.0 / c)
}

/// Rescales a tight frame so that U U* = I.
pub fn normalize_to_parseval(f: &FrameMatrix, tol: f64) -> Result<FrameMatrix, Error> {
    let (tight, alpha) = is_tight(f, tol);
    if !tight {
        return Err(Error::NotTight(format!(
            "frame deviates from c*I by more than {tol:.1e}"
        )));
    }
    FrameMatrix::new(f.matrix().scale(alpha.sqrt()))
}

/// Max-norm deviation of U U* from the identity.
pub fn parseval_residual(f: &FrameMatrix) -> f64 {
    let uu = f.matrix().mul(&f.matrix().adjoint()).expect("square product");
    uu.max_dev_from_scaled_identity(1.0)
}

/// Verifies U U* = I within `tol`.
pub fn is_parseval(f: &FrameMatrix, tol: f64) -> bool {
    parseval_residual(f) < tol
}

/// Welch coherence level sqrt((N - m) / (m (N - 1))) for N > m >= 1.
///
/// At the cardinality caps this simplifies exactly:
/// 1/sqrt(m + 2) at N = m(m+1)/2 over R, 1/sqrt(m + 1) at N = m^2 over C.
pub fn welch_angle(m: usize, n: usize) -> Result<f64, Error> {
    if m == 0 || n <= m {
        return Err(Error::Domain(format!(
            "Welch level needs N > m >= 1, got m = {m}, N = {n}"
        )));
    }
    let num = (n - m) as f64;
    let den = (m * (n - 1)) as f64;
    Ok((num / den).sqrt())
}

/// Largest number of equiangular vectors dimension m admits:
/// m(m+1)/2 over R, m^2 over C.
pub fn cardinality_cap(m: usize, field: Field) -> usize {
    match field {
        Field::Real => m * (m + 1) / 2,
        Field::Complex => m * m,
    }
}

/// Pairwise coherence statistics of the column-normalized frame.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoherenceProfile {
    /// Largest normalized off-diagonal inner product modulus.
    pub offdiag_max: f64,
    /// Smallest one.
    pub offdiag_min: f64,
    /// max - min; zero exactly for equiangular systems.
    pub spread: f64,
    /// Welch level for (m, N); zero when N = m.
    pub welch_value: f64,
}

/// Computes the coherence profile. Columns are normalized first, so the
/// profile is scale invariant; a zero column is rejected.
pub fn coherence_profile(f: &FrameMatrix) -> Result<CoherenceProfile, Error> {
    let n = f.len();
    let norms: Vec<f64> = (0..n).map(|j| f.col_norm(j)).collect();
    for (j, &nj) in norms.iter().enumerate() {
        if nj < 1e-14 {
            return Err(Error::ZeroColumn(format!("column {j} has norm {nj:.1e}")));
        }
    }
    let g = gram(f);
    let mut max_c = 0.0f64;
    let mut min_c = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            let c = g.get(i, j).norm() / (norms[i] * norms[j]);
            max_c = max_c.max(c);
            min_c = min_c.min(c);
        }
    }
    if !min_c.is_finite() {
        // N = 1: no pairs at all.
        max_c = 0.0;
        min_c = 0.0;
    }
    let welch_value = if f.len() > f.dim() {
        welch_angle(f.dim(), f.len())?
    } else {
        0.0
    };
    Ok(CoherenceProfile {
        offdiag_max: max_c,
        offdiag_min: min_c,
        spread: max_c - min_c,
        welch_value,
    })
}

/// Outcome of an ETF certificate with the reasons any condition failed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EtfCertificate {
    pub is_etf: bool,
    pub m: usize,
    pub n: usize,
    pub field: Field,
    pub coherence: f64,
    pub welch_value: f64,
    pub spread: f64,
    pub reasons: Vec<String>,
}

/// Certifies that a frame is an equiangular tight frame.
///
/// Checks, in order: equal column norms, tightness, the nondegeneracy
/// N > m (waived by `allow_trivial`, under which an orthonormal basis
/// passes), equiangularity (spread below `tol`), coherence at the Welch
/// level, and for m > 1 the cardinality cap. The m = 1 cap is skipped:
/// all unit scalars span the same line, so repeating them is the one
/// legitimate way to exceed the nominal cap of one.
pub fn certify_etf_with(f: &FrameMatrix, tol: f64, allow_trivial: bool) -> EtfCertificate {
    let (m, n) = (f.dim(), f.len());
    let mut reasons = Vec::new();

    let norms: Vec<f64> = (0..n).map(|j| f.col_norm(j)).collect();
    let mean: f64 = norms.iter().sum::<f64>() / n as f64;
    let norm_dev = norms.iter().map(|&x| (x - mean).abs()).fold(0.0, f64::max);
    if norm_dev > tol {
        reasons.push(format!("column norms differ by {norm_dev:.3e}"));
    }

    let (tight, _) = is_tight(f, tol);
    if !tight {
        reasons.push("frame is not tight".into());
    }

    let profile = match coherence_profile(f) {
        Ok(p) => p,
        Err(e) => {
            reasons.push(format!("coherence profile unavailable: {e}"));
            return EtfCertificate {
                is_etf: false,
                m,
                n,
                field: f.field(),
                coherence: f64::NAN,
                welch_value: f64::NAN,
                spread: f64::NAN,
                reasons,
            };
        }
    };

    if n == m {
        if !allow_trivial {
            reasons.push("degenerate case N = m (orthonormal basis)".into());
        } else if profile.offdiag_max > tol {
            reasons.push(format!(
                "square frame is not orthonormal (coherence {:.3e})",
                profile.offdiag_max
            ));
        }
    } else {
        if profile.spread > tol {
            reasons.push(format!("coherences spread over {:.3e}", profile.spread));
        }
        if (profile.offdiag_max - profile.welch_value).abs() > tol {
            reasons.push(format!(
                "coherence {:.12} misses the Welch level {:.12}",
                profile.offdiag_max, profile.welch_value
            ));
        }
        if m > 1 && n > cardinality_cap(m, f.field()) {
            reasons.push(format!(
                "{n} vectors exceed the cap {} for dimension {m}",
                cardinality_cap(m, f.field())
            ));
        }
    }

    EtfCertificate {
        is_etf: reasons.is_empty(),
        m,
        n,
        field: f.field(),
        coherence: profile.offdiag_max,
        welch_value: profile.welch_value,
        spread: profile.spread,
        reasons,
    }
}

/// `certify_etf_with` with `allow_trivial = false`.
pub fn certify_etf(f: &FrameMatrix, tol: f64) -> EtfCertificate {
    certify_etf_with(f, tol, false)
}

/// Mu-objective of a frame: (1/N) sum_ij |U* U|_ij.
pub fn mu_objective(f: &FrameMatrix) -> f64 {
    let g = gram(f);
    let n = f.len();
    let mut acc = KahanSum::default();
    for i in 0..n {
        for j in 0..n {
            acc.add(g.get(i, j).norm());
        }
    }
    acc.value() / n as f64
}

/// Random Parseval frame: orthonormalized rows of a Gaussian matrix.
pub fn random_parseval(m: usize, n: usize, field: Field, seed: u64) -> Result<FrameMatrix, Error> {
    if n < m || m == 0 {
        return Err(Error::Shape(format!("need N >= m >= 1, got m = {m}, N = {n}")));
    }
    let mut rng = crate::rng::seeded(seed);
    let g = Matrix::from_fn(field, m, n, |_, _| match field {
        Field::Real => Complex64::new(crate::rng::gaussian(&mut rng), 0.0),
        Field::Complex => Complex64::new(crate::rng::gaussian(&mut rng), crate::rng::gaussian(&mut rng)),
    });
    // Gaussian rows are dependent with probability zero; one retry guards
    // the measure-zero draw without changing the distribution materially.
    match orthonormalize_rows(&g, DEFAULT_RANK_TOL) {
        Ok(q) => FrameMatrix::new(q),
        Err(_) => {
            let mut rng = crate::rng::seeded(seed ^ 0x5A5A_5A5A);
            let g = Matrix::from_fn(field, m, n, |_, _| match field {
                Field::Real => Complex64::new(crate::rng::gaussian(&mut rng), 0.0),
                Field::Complex => {
                    Complex64::new(crate::rng::gaussian(&mut rng), crate::rng::gaussian(&mut rng))
                }
            });
            FrameMatrix::new(orthonormalize_rows(&g, DEFAULT_RANK_TOL)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Unit vectors in R^2 at mutual angle 120 degrees.
    pub(crate) fn mercedes_benz() -> FrameMatrix {
        let c = 0.5f64;
        let s = 3.0f64.sqrt() / 2.0;
        FrameMatrix::new(Matrix::from_real(
            Field::Real,
            2,
            3,
            &[1.0, -c, -c, 0.0, s, -s],
        ))
        .unwrap()
    }

    #[test]
    fn gram_of_mercedes_benz() {
        let g = gram(&mercedes_benz());
        for i in 0..3 {
            assert_relative_eq!(g.get(i, i).re, 1.0, epsilon = 1e-15);
            for j in 0..3 {
                if i != j {
                    assert_relative_eq!(g.get(i, j).re, -0.5, epsilon = 1e-15);
                }
            }
        }
    }

    #[test]
    fn tightness_and_parseval_normalization() {
        let f = mercedes_benz();
        let (tight, alpha) = is_tight(&f, 1e-9);
        assert!(tight);
        assert_relative_eq!(alpha, 2.0 / 3.0, epsilon = 1e-12);
        let p = normalize_to_parseval(&f, 1e-9).unwrap();
        assert!(is_parseval(&p, 1e-12));
        // Parseval scaling sends unit columns to norm sqrt(m/N).
        assert_relative_eq!(p.col_norm(0), (2.0f64 / 3.0).sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn non_tight_frame_detected() {
        // Two copies of e1 plus e2: U U* = diag(2, 1).
        let f = FrameMatrix::new(Matrix::from_real(
            Field::Real,
            2,
            3,
            &[1.0, 1.0, 0.0, 0.0, 0.0, 1.0],
        ))
        .unwrap();
        let (tight, _) = is_tight(&f, 1e-9);
        assert!(!tight);
        assert!(matches!(normalize_to_parseval(&f, 1e-9), Err(Error::NotTight(_))));
    }

    #[test]
    fn welch_angle_known_values() {
        assert_relative_eq!(welch_angle(2, 3).unwrap(), 0.5, epsilon = 0.0);
        assert_relative_eq!(welch_angle(7, 28).unwrap(), 1.0 / 3.0, epsilon = 1e-16);
        assert_relative_eq!(welch_angle(3, 6).unwrap(), 1.0 / 5f64.sqrt(), epsilon = 1e-16);
        assert_relative_eq!(welch_angle(1, 2).unwrap(), 1.0, epsilon = 0.0);
        assert!(welch_angle(3, 3).is_err());
        assert!(welch_angle(0, 5).is_err());
    }

    /// The Welch level at the caps must equal 1/sqrt(m+2) over R and
    /// 1/sqrt(m+1) over C. Verified in exact integer arithmetic:
    /// (N - m) * (m + 2) == m * (N - 1) at N = m(m+1)/2, and
    /// (N - m) * (m + 1) == m * (N - 1) at N = m^2.
    #[test]
    fn welch_angle_at_caps_exact() {
        for m in 2..200usize {
            let n_real = m * (m + 1) / 2;
            assert_eq!((n_real - m) * (m + 2), m * (n_real - 1), "real cap identity at m = {m}");
            let n_cplx = m * m;
            assert_eq!((n_cplx - m) * (m + 1), m * (n_cplx - 1), "complex cap identity at m = {m}");
        }
        // Spot-check the floating side, including the 276-vector case:
        // (276 - 23) / (23 * 275) = 253/6325 = 1/25, so the level is 1/5.
        assert_eq!(253 * 25, 6325);
        assert_relative_eq!(welch_angle(23, 276).unwrap(), 0.2, epsilon = 1e-16);
    }

    #[test]
    fn cardinality_caps() {
        assert_eq!(cardinality_cap(2, Field::Real), 3);
        assert_eq!(cardinality_cap(3, Field::Real), 6);
        assert_eq!(cardinality_cap(7, Field::Real), 28);
        assert_eq!(cardinality_cap(23, Field::Real), 276);
        assert_eq!(cardinality_cap(3, Field::Complex), 9);
        assert_eq!(cardinality_cap(8, Field::Complex), 64);
        assert_eq!(cardinality_cap(1, Field::Real), 1);
    }

    #[test]
    fn coherence_profile_of_mercedes_benz() {
        let p = coherence_profile(&mercedes_benz()).unwrap();
        assert_relative_eq!(p.offdiag_max, 0.5, epsilon = 1e-14);
        assert_relative_eq!(p.offdiag_min, 0.5, epsilon = 1e-14);
        assert!(p.spread < 1e-14);
        assert_relative_eq!(p.welch_value, 0.5, epsilon = 0.0);
    }

    #[test]
    fn coherence_profile_rejects_zero_column() {
        let f = FrameMatrix::new(Matrix::from_real(
            Field::Real,
            2,
            3,
            &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0],
        ))
        .unwrap();
        assert!(matches!(coherence_profile(&f), Err(Error::ZeroColumn(_))));
    }

    #[test]
    fn orthonormal_basis_profile_is_zero() {
        let f = FrameMatrix::new(Matrix::identity(Field::Real, 3)).unwrap();
        let p = coherence_profile(&f).unwrap();
        assert_eq!(p.offdiag_max, 0.0);
        assert_eq!(p.welch_value, 0.0);
    }

    #[test]
    fn certify_mercedes_benz_both_scalings() {
        let unit = mercedes_benz();
        let cert = certify_etf(&unit, 1e-9);
        assert!(cert.is_etf, "reasons: {:?}", cert.reasons);
        assert_relative_eq!(cert.coherence, 0.5, epsilon = 1e-13);
        let parseval = normalize_to_parseval(&unit, 1e-9).unwrap();
        let cert2 = certify_etf(&parseval, 1e-9);
        assert!(cert2.is_etf, "reasons: {:?}", cert2.reasons);
    }

    #[test]
    fn certify_rejects_orthonormal_basis_unless_trivial_allowed() {
        let f = FrameMatrix::new(Matrix::identity(Field::Real, 3)).unwrap();
        let cert = certify_etf(&f, 1e-9);
        assert!(!cert.is_etf);
        assert!(cert.reasons.iter().any(|r| r.contains("degenerate")));
        let cert2 = certify_etf_with(&f, 1e-9, true);
        assert!(cert2.is_etf, "reasons: {:?}", cert2.reasons);
    }

    #[test]
    fn certify_rejects_unequal_coherences() {
        // Four vectors in R^2 from a random tight-ish frame: not an ETF.
        let f = random_parseval(2, 4, Field::Real, 42).unwrap();
        let cert = certify_etf(&f, 1e-9);
        assert!(!cert.is_etf);
    }

    #[test]
    fn mu_objective_of_mercedes_benz_parseval() {
        // |G| has diagonal 2/3 and off-diagonal 1/3; the sum is 4 and the
        // mu-objective 4/3.
        let p = normalize_to_parseval(&mercedes_benz(), 1e-9).unwrap();
        assert_relative_eq!(mu_objective(&p), 4.0 / 3.0, epsilon = 1e-13);
    }

    #[test]
    fn random_parseval_is_parseval_and_seed_stable() {
        for (field, seed) in [(Field::Real, 1u64), (Field::Complex, 2u64)] {
            let f = random_parseval(3, 7, field, seed).unwrap();
            assert!(is_parseval(&f, 1e-10));
            let again = random_parseval(3, 7, field, seed).unwrap();
            assert_eq!(f, again);
        }
    }

    #[test]
    fn gram_is_positive_semidefinite() {
        for seed in 0..4u64 {
            let field = if seed % 2 == 0 { Field::Real } else { Field::Complex };
            let f = random_parseval(3, 6, field, 100 + seed).unwrap();
            let g = gram(&f);
            // Real embedding of a Hermitian matrix keeps its spectrum.
            let n = g.rows();
            let emb = Matrix::from_fn(Field::Real, 2 * n, 2 * n, |i, j| {
                let (bi, ii) = (i / n, i % n);
                let (bj, jj) = (j / n, j % n);
                let z = g.get(ii, jj);
                let v = match (bi, bj) {
                    (0, 0) | (1, 1) => z.re,
                    (0, 1) => -z.im,
                    _ => z.im,
                };
                Complex64::new(v, 0.0)
            });
            let (vals, _) = crate::matrix::sym_eigen(&emb, 60).unwrap();
            assert!(vals[0] > -1e-10, "min eigenvalue {}", vals[0]);
        }
    }
}
