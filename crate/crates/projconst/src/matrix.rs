//! Dense matrix kernel: multiplication, adjoints, row orthonormalization,
//! Perron eigenpairs and numerical rank.
//!
//! Every matrix carries a field tag. Real matrices are stored with zero
//! imaginary parts so that real and complex inputs flow through one code
//! path; operations never promote a real matrix to complex. All iteration
//! orders are fixed, so results are bit-reproducible across runs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Scalar field a matrix lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Real => write!(f, "real"),
            Field::Complex => write!(f, "complex"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "real" | "R" | "r" => Ok(Field::Real),
            "complex" | "C" | "c" => Ok(Field::Complex),
            other => Err(Error::Format(format!("unknown field `{other}`"))),
        }
    }
}

/// Dense row-major matrix over the tagged field.
///
/// Invariant: a `Field::Real` matrix has exactly zero imaginary parts.
/// Constructors and operations preserve this; `debug_validate` checks it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Builds from a row-major slice of real entries.
    pub fn from_real(field: Field, rows: usize, cols: usize, entries: &[f64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        let data = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Matrix { field, rows, cols, data }
    }

    /// Builds from a row-major slice of complex entries; field is Complex.
    pub fn from_complex(rows: usize, cols: usize, entries: &[Complex64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Matrix { field: Field::Complex, rows, cols, data: entries.to_vec() }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        debug_assert!(self.field == Field::Complex || v.im == 0.0, "imaginary entry in real matrix");
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Conjugate transpose. For real matrices this is the plain transpose.
    pub fn adjoint(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Matrix product self * rhs. Inner dimensions must agree and the
    /// field tags must match.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.field != rhs.field {
            return Err(Error::Shape("field tags differ in product".into()));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.data[i * out.cols + j] = v;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: f64) -> Matrix {
        let data = self.data.iter().map(|z| z * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols || self.field != rhs.field {
            return Err(Error::Shape("shape or field mismatch in sum".into()));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        Ok(self.add(&rhs.scale(-1.0))?)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Entrywise modulus, tagged real.
    pub fn entrywise_abs(&self) -> Matrix {
        let data = self.data.iter().map(|z| Complex64::new(z.norm(), 0.0)).collect();
        Matrix { field: Field::Real, rows: self.rows, cols: self.cols, data }
    }

    /// Max-norm distance to the identity scaled by `c`.
    pub fn max_dev_from_scaled_identity(&self, c: f64) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let target = if i == j { Complex64::new(c, 0.0) } else { Complex64::new(0.0, 0.0) };
                dev = dev.max((self.get(i, j) - target).norm());
            }
        }
        dev
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Real part of the trace. The matrices we trace are Hermitian, so
    /// the imaginary part is rounding noise.
    pub fn trace_re(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).re).sum()
    }

    pub fn col_norm(&self, j: usize) -> f64 {
        (0..self.rows).map(|i| self.get(i, j).norm_sqr()).sum::<f64>().sqrt()
    }

    fn row_norm(&self, i: usize) -> f64 {
        self.row(i).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    #[cfg(test)]
    pub fn debug_validate(&self) {
        if self.field == Field::Real {
            assert!(self.data.iter().all(|z| z.im == 0.0), "real matrix has imaginary parts");
        }
    }
}

/// Compensated (Kahan) summation. The objective and audit sums run over
/// up to N^2 terms; compensation keeps them accurate to a few ulps.
#[derive(Default, Clone, Copy)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Row orthonormalization by modified Gram-Schmidt with one
/// reorthogonalization pass.
///
/// Output rows span the same space as the input rows and satisfy
/// `Q Q* = I` to machine precision. The representative is fixed by a sign
/// convention: in each row the first entry exceeding 1e-10 in modulus is
/// made real and positive. Inputs whose rows are dependent relative to
/// `rank_tol` (times the largest input row norm) are rejected.
pub fn orthonormalize_rows(a: &Matrix, rank_tol: f64) -> Result<Matrix, Error> {
    let m = a.rows();
    let n = a.cols();
    if m > n {
        return Err(Error::Shape(format!("{m} rows cannot be orthonormal in dimension {n}")));
    }
    let scale = (0..m).map(|i| a.row_norm(i)).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::Rank("zero matrix has no orthonormal row basis".into()));
    }
    let mut q = a.clone();
    for k in 0..m {
        // Two MGS passes: the second removes the residue the first leaves
        // when rows are nearly dependent.
        for _pass in 0..2 {
            for p in 0..k {
                let mut dot = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    dot += q.get(p, j).conj() * q.get(k, j);
                }
                for j in 0..n {
                    let v = q.get(k, j) - dot * q.get(p, j);
                    q.set(k, j, v);
                }
            }
        }
        let norm = q.row_norm(k);
        if norm < rank_tol * scale {
            return Err(Error::Rank(format!("row {k} is dependent on earlier rows (residual {norm:.3e})")));
        }
        for j in 0..n {
            let v = q.get(k, j) / norm;
            q.set(k, j, v);
        }
        // Sign convention: rotate the row so its first significant entry
        // is real positive. Makes the output unique, not just the span.
        let pivot = (0..n).find(|&j| q.get(k, j).norm() > 1e-10);
        if let Some(j0) = pivot {
            let z = q.get(k, j0);
            let phase = z.conj() / z.norm();
            for j in 0..n {
                let v = q.get(k, j) * phase;
                q.set(k, j, v);
            }
            if q.field == Field::Real {
                // The phase is +-1; scrub the -0.0 imaginary parts it leaves.
                for j in 0..n {
                    let v = q.get(k, j);
                    q.set(k, j, Complex64::new(v.re, 0.0));
                }
            } else if j0 < n {
                let v = q.get(k, j0);
                q.set(k, j0, Complex64::new(v.re, 0.0));
            }
        }
    }
    Ok(q)
}

/// Dominant eigenpair of a symmetric entrywise-nonnegative real matrix by
/// shifted power iteration.
///
/// The iteration runs on `A + sigma I` with `sigma` the max row sum, which
/// keeps the spectrum nonnegative so the dominant eigenvalue of the shifted
/// matrix is the Perron value plus `sigma`. Two fixed-seed starting vectors
/// are iterated independently and the larger converged Rayleigh quotient
/// wins. Convergence requires successive Rayleigh quotients to differ by
/// less than `tol` and the residual `||Ax - vx||` to fall below
/// `10 * tol * max|A_ij|`.
///
/// Returns the eigenvalue and a unit eigenvector with nonnegative entries.
pub fn dominant_eigenpair(a: &Matrix, tol: f64, max_iter: usize) -> Result<(f64, Vec<f64>), Error> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Shape("dominant_eigenpair needs a square matrix".into()));
    }
    if a.field() != Field::Real {
        return Err(Error::Domain("dominant_eigenpair needs a real matrix".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j).re < 0.0 {
                return Err(Error::Domain(format!("negative entry at ({i},{j})")));
            }
        }
    }
    let mut sym_dev: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sym_dev = sym_dev.max((a.get(i, j).re - a.get(j, i).re).abs());
        }
    }
    let amax = a.max_abs();
    if sym_dev > 1e-10 * amax.max(1.0) {
        return Err(Error::Domain("matrix is not symmetric".into()));
    }
    if amax == 0.0 {
        let mut v = vec![0.0; n];
        v[0] = 1.0;
        return Ok((0.0, v));
    }
    // Shift by the max row sum: dominates the spectral radius, so the
    // shifted matrix is positive semidefinite and the power method cannot
    // stall on a negative eigenvalue of equal modulus.
    let sigma = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).re).sum::<f64>())
        .fold(0.0, f64::max);

    let apply = |x: &[f64]| -> Vec<f64> {
        let mut y = vec![0.0; n];
        for i in 0..n {
            let mut acc = KahanSum::default();
            for j in 0..n {
                acc.add(a.get(i, j).re * x[j]);
            }
            y[i] = acc.value() + sigma * x[i];
        }
        y
    };

    let mut best: Option<(f64, Vec<f64>)> = None;
    for seed in [0xA11C_Eu64, 0xB0B5_EEDu64] {
        let mut rng = crate::rng::seeded(seed);
        let mut x: Vec<f64> = (0..n).map(|_| 0.1 + crate::rng::unit(&mut rng)).collect();
        normalize(&mut x);
        let mut prev_rho = f64::NEG_INFINITY;
        let mut converged = None;
        for _ in 0..max_iter {
            let y = apply(&x);
            let norm_y = y.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm_y == 0.0 {
                converged = Some(0.0);
                break;
            }
            for (xi, yi) in x.iter_mut().zip(&y) {
                *xi = yi / norm_y;
            }
            // Rayleigh quotient of the unshifted matrix.
            let ax = {
                let mut v = apply(&x);
                for (vi, xi) in v.iter_mut().zip(&x) {
                    *vi -= sigma * xi;
                }
                v
            };
            let rho: f64 = x.iter().zip(&ax).map(|(xi, yi)| xi * yi).sum();
            let resid: f64 = x
                .iter()
                .zip(&ax)
                .map(|(xi, yi)| (yi - rho * xi).powi(2))
                .sum::<f64>()
                .sqrt();
            if (rho - prev_rho).abs() < tol && resid < 10.0 * tol * amax {
                converged = Some(rho);
                break;
            }
            prev_rho = rho;
        }
        if let Some(rho) = converged {
            if best.as_ref().map_or(true, |(b, _)| rho > *b) {
                best = Some((rho, x));
            }
        }
    }
    match best {
        Some((rho, mut x)) => {
            // Entries are nonnegative up to rounding; scrub the noise.
            for v in x.iter_mut() {
                if *v < 0.0 {
                    *v = 0.0;
                }
            }
            normalize(&mut x);
            Ok((rho, x))
        }
        None => {
            // A clustered dominant eigenvalue starves the power method
            // (contamination decays like 1 - gap per step), so finish
            // with the full symmetric eigensolver instead of failing.
            let (vals, vecs) = sym_eigen(a, 100)?;
            let top = vals.len() - 1;
            let mut x: Vec<f64> = (0..n).map(|i| vecs.get(i, top).re).collect();
            // The dominant eigenspace of a symmetric nonnegative matrix
            // is spanned by nonnegative vectors with disjoint supports,
            // so the entrywise absolute value stays inside it.
            for v in x.iter_mut() {
                *v = v.abs();
            }
            normalize(&mut x);
            Ok((vals[top], x))
        }
    }
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in x.iter_mut() {
            *v /= norm;
        }
    }
}

/// Number of singular values exceeding `rank_tol` times the largest one.
///
/// Uses one-sided Jacobi orthogonalization, which computes small singular
/// values to full relative precision of the column data; singular values
/// that vanish in exact arithmetic come out near machine zero instead of
/// near `sqrt(eps)` as they would from the normal-equations spectrum.
pub fn numerical_rank(a: &Matrix, rank_tol: f64) -> usize {
    // Work on whichever orientation has fewer columns.
    let work = if a.cols() > a.rows() { a.adjoint() } else { a.clone() };
    let svals = singular_values(&work);
    let smax = svals.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    svals.iter().filter(|&&s| s > rank_tol * smax).count()
}

/// Singular values by one-sided Jacobi (descending order).
pub fn singular_values(a: &Matrix) -> Vec<f64> {
    let n = a.cols();
    let m = a.rows();
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| a.col(j)).collect();
    let max_sweeps = 40;
    let eps = 1e-15;
    for _ in 0..max_sweeps {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = Complex64::new(0.0, 0.0);
                for i in 0..m {
                    app += cols[p][i].norm_sqr();
                    aqq += cols[q][i].norm_sqr();
                    apq += cols[p][i].conj() * cols[q][i];
                }
                let off = apq.norm();
                if off <= eps * (app * aqq).sqrt() || off == 0.0 {
                    continue;
                }
                rotated = true;
                // Phase-align column q so the pair rotation is real.
                let phase = apq.conj() / off;
                let zeta = (aqq - app) / (2.0 * off);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let vp = cols[p][i];
                    let vq = cols[q][i] * phase;
                    cols[p][i] = vp * c - vq * s;
                    cols[q][i] = vp * s + vq * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut svals: Vec<f64> = cols
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    svals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    svals
}

/// Eigenvalues and eigenvectors of a real symmetric matrix by cyclic
/// Jacobi rotations. Eigenvalues ascend; column j of the returned matrix
/// is the eigenvector for eigenvalue j.
pub fn sym_eigen(a: &Matrix, max_sweeps: usize) -> Result<(Vec<f64>, Matrix), Error> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Shape("sym_eigen needs a square matrix".into()));
    }
    if a.field() != Field::Real {
        return Err(Error::Domain("sym_eigen needs a real matrix".into()));
    }
    let mut h: Vec<f64> = a.data().iter().map(|z| z.re).collect();
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut converged = false;
    for _sweep in 0..max_sweeps {
        let mut off: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += h[idx(i, j)] * h[idx(i, j)];
            }
        }
        if off.sqrt() < 1e-14 * (1.0 + h.iter().map(|x| x.abs()).fold(0.0, f64::max)) {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = h[idx(p, q)];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (h[idx(q, q)] - h[idx(p, p)]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let hkp = h[idx(k, p)];
                    let hkq = h[idx(k, q)];
                    h[idx(k, p)] = c * hkp - s * hkq;
                    h[idx(k, q)] = s * hkp + c * hkq;
                }
                for k in 0..n {
                    let hpk = h[idx(p, k)];
                    let hqk = h[idx(q, k)];
                    h[idx(p, k)] = c * hpk - s * hqk;
                    h[idx(q, k)] = s * hpk + c * hqk;
                }
                for k in 0..n {
                    let vkp = v[idx(k, p)];
                    let vkq = v[idx(k, q)];
                    v[idx(k, p)] = c * vkp - s * vkq;
                    v[idx(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        // One more off-diagonal check after the final sweep.
        let mut off: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += h[idx(i, j)] * h[idx(i, j)];
            }
        }
        if off.sqrt() >= 1e-12 * (1.0 + h.iter().map(|x| x.abs()).fold(0.0, f64::max)) {
            return Err(Error::Convergence("Jacobi sweeps did not reduce the off-diagonal".into()));
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| h[idx(i, i)].partial_cmp(&h[idx(j, j)]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| h[idx(i, i)]).collect();
    let mut vecs = Matrix::zeros(Field::Real, n, n);
    for (new_j, &old_j) in order.iter().enumerate() {
        for i in 0..n {
            vecs.set(i, new_j, Complex64::new(v[idx(i, old_j)], 0.0));
        }
    }
    Ok((vals, vecs))
}
