//! Constructions of equiangular tight frames.
//!
//! Closed forms cover the simplex frames ETF(m, m+1), the icosahedral
//! ETF(3, 6) and the 28-vector ETF(7, 28). Larger real systems come from
//! Seidel matrices of regular two-graphs: `seidel_to_etf` factors
//! G = I - S/lambda_min into a frame, and `regular_two_graph_276`
//! generates the 276-vertex two-graph whose frame attains 14/3 in R^23.
//! Over C, `sic_fiducial` produces Weyl-Heisenberg fiducial vectors whose
//! d^2-vector orbits are the maximal complex equiangular systems.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::config::OptConfig;
use crate::error::Error;
use crate::frames::{self, normalize_to_parseval, FrameMatrix};
use crate::matrix::{orthonormalize_rows, sym_eigen, Field, Matrix};

/// Orthonormal basis of the hyperplane orthogonal to the all-ones vector
/// in R^{m+1}, as the rows of an m x (m+1) matrix. Deterministic: rows
/// are the Gram-Schmidt images of e_1, ..., e_m against the ones vector.
fn ones_complement_basis(m: usize, field: Field) -> Matrix {
    let n = m + 1;
    let mut seed = Matrix::zeros(field, n, n);
    for j in 0..n {
        seed.set(0, j, Complex64::new(1.0, 0.0));
    }
    for i in 1..n {
        seed.set(i, i - 1, Complex64::new(1.0, 0.0));
    }
    let q = orthonormalize_rows(&seed, 1e-12).expect("seed rows are independent");
    Matrix::from_fn(field, m, n, |i, j| q.get(i + 1, j))
}

/// Simplex frame: the m+1 coordinate vectors of R^{m+1} projected onto
/// the complement of the all-ones direction, written in an orthonormal
/// basis of that complement. Pairwise normalized inner products are all
/// -1/m, and the result is already Parseval.
pub fn simplex_etf(m: usize, field: Field) -> Result<FrameMatrix, Error> {
    if m == 0 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    let n = m + 1;
    let basis = ones_complement_basis(m, field);
    // Column i holds the basis coordinates of e_i - (1/(m+1)) * ones.
    let shift = 1.0 / n as f64;
    let mut u = Matrix::zeros(field, m, n);
    for col in 0..n {
        for row in 0..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                let vk = if k == col { 1.0 - shift } else { -shift };
                acc += basis.get(row, k).conj() * vk;
            }
            u.set(row, col, acc);
        }
    }
    let f = FrameMatrix::new(u)?;
    normalize_to_parseval(&f, frames::DEFAULT_TIGHT_TOL)
}

/// Maximal real equiangular tight frame for m in {2, 3, 7}: the three
/// dimensions below 23 where N reaches the cap m(m+1)/2.
///
/// m = 2 is the simplex frame; m = 3 takes the six diagonals of the
/// icosahedron; m = 7 projects the 28 vectors e_i + e_j (i < j in R^8)
/// onto the complement of the ones vector. The 276-vector system in
/// R^23 is not constructed here; build it from a Seidel matrix via
/// `seidel_to_etf` (see `regular_two_graph_276`).
pub fn real_maximal_etf(m: usize) -> Result<FrameMatrix, Error> {
    match m {
        2 => simplex_etf(2, Field::Real),
        3 => {
            let g = (1.0 + 5.0f64.sqrt()) / 2.0;
            let scale = (1.0 + g * g).sqrt().recip();
            #[rustfmt::skip]
            let cols: [[f64; 3]; 6] = [
                [0.0, 1.0, g], [0.0, -1.0, g],
                [g, 0.0, 1.0], [g, 0.0, -1.0],
                [1.0, g, 0.0], [-1.0, g, 0.0],
            ];
            let mut u = Matrix::zeros(Field::Real, 3, 6);
            for (j, col) in cols.iter().enumerate() {
                for (i, &x) in col.iter().enumerate() {
                    u.set(i, j, Complex64::new(x * scale, 0.0));
                }
            }
            normalize_to_parseval(&FrameMatrix::new(u)?, frames::DEFAULT_TIGHT_TOL)
        }
        7 => {
            let basis = ones_complement_basis(7, Field::Real);
            let mut u = Matrix::zeros(Field::Real, 7, 28);
            let mut col = 0;
            for i in 0..8 {
                for j in (i + 1)..8 {
                    // e_i + e_j - (2/8) * ones, expressed in the basis.
                    for row in 0..7 {
                        let mut acc = 0.0;
                        for k in 0..8 {
                            let mut vk = -0.25;
                            if k == i || k == j {
                                vk += 1.0;
                            }
                            acc += basis.get(row, k).re * vk;
                        }
                        u.set(row, col, Complex64::new(acc, 0.0));
                    }
                    col += 1;
                }
            }
            normalize_to_parseval(&FrameMatrix::new(u)?, frames::DEFAULT_TIGHT_TOL)
        }
        other => Err(Error::Unsupported(format!(
            "no closed-form maximal frame for m = {other}; \
             m = 23 is reached by seidel_to_etf on a 276-vertex regular two-graph"
        ))),
    }
}

/// Seidel matrix: symmetric, zero diagonal, +-1 off the diagonal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeidelMatrix {
    matrix: Matrix,
}

impl SeidelMatrix {
    pub fn from_matrix(matrix: Matrix) -> Result<Self, Error> {
        let n = matrix.rows();
        if matrix.cols() != n || n == 0 {
            return Err(Error::Shape("Seidel matrix must be square and nonempty".into()));
        }
        if matrix.field() != Field::Real {
            return Err(Error::Domain("Seidel matrix must be real".into()));
        }
        for i in 0..n {
            if matrix.get(i, i).re != 0.0 {
                return Err(Error::Domain(format!("diagonal entry ({i},{i}) is not zero")));
            }
            for j in (i + 1)..n {
                let v = matrix.get(i, j).re;
                if v != 1.0 && v != -1.0 {
                    return Err(Error::Domain(format!("entry ({i},{j}) = {v} is not +-1")));
                }
                if matrix.get(j, i).re != v {
                    return Err(Error::Domain(format!("entries ({i},{j}) and ({j},{i}) differ")));
                }
            }
        }
        Ok(SeidelMatrix { matrix })
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.matrix.get(i, j).re as i8
    }
}

/// Extracts the Seidel sign matrix of a real equiangular system: the
/// signs of the off-diagonal entries of the unit-normalized Gram.
/// Inverse of `seidel_to_etf` on coherence: for an equiangular frame
/// with Gram I + c S, the factor rebuilt from S has coherence c again.
pub fn seidel_signs(f: &FrameMatrix, tol: f64) -> Result<SeidelMatrix, Error> {
    if f.field() != Field::Real {
        return Err(Error::Domain("sign extraction needs a real frame".into()));
    }
    let n = f.len();
    let gram = frames::gram(f);
    let mut s = Matrix::zeros(Field::Real, n, n);
    for i in 0..n {
        let ni = f.col_norm(i);
        for j in (i + 1)..n {
            let v = gram.get(i, j).re / (ni * f.col_norm(j));
            if v.abs() < tol {
                return Err(Error::Domain(format!(
                    "normalized Gram entry ({i},{j}) = {v:.3e} has no usable sign"
                )));
            }
            let sign = if v > 0.0 { 1.0 } else { -1.0 };
            s.set(i, j, Complex64::new(sign, 0.0));
            s.set(j, i, Complex64::new(sign, 0.0));
        }
    }
    SeidelMatrix::from_matrix(s)
}

/// Factors the two-graph Gram G = I - S/lambda_min into a Parseval frame.
///
/// A Seidel matrix with exactly two distinct eigenvalues (a regular
/// two-graph) yields G positive semidefinite with unit diagonal, constant
/// off-diagonal modulus 1/|lambda_min| and rank m equal to the
/// multiplicity of the other eigenvalue; the m eigenvectors give an
/// equiangular tight frame of N vectors in R^m. Any third eigenvalue
/// cluster is rejected. `tol` is relative to the spectral spread.
pub fn seidel_to_etf(s: &SeidelMatrix, tol: f64) -> Result<FrameMatrix, Error> {
    let n = s.n();
    if n < 2 {
        return Err(Error::NotTwoGraph("need at least two vertices".into()));
    }
    let (vals, vecs) = sym_eigen(s.matrix(), 100)?;
    let low = vals[0];
    let high = vals[n - 1];
    let spread = high - low;
    if spread <= 0.0 {
        return Err(Error::NotTwoGraph("spectrum is a single point".into()));
    }
    let cluster_tol = tol * spread;
    let mut m = 0usize;
    for &v in &vals {
        let d_low = (v - low).abs();
        let d_high = (v - high).abs();
        if d_low.min(d_high) > cluster_tol {
            return Err(Error::NotTwoGraph(format!(
                "eigenvalue {v:.6} sits {:.2e} away from both clusters",
                d_low.min(d_high)
            )));
        }
        if d_high < d_low {
            m += 1;
        }
    }
    if m == 0 || m == n {
        return Err(Error::NotTwoGraph("one eigenvalue cluster is empty".into()));
    }
    if low >= 0.0 {
        return Err(Error::NotTwoGraph("smallest eigenvalue must be negative".into()));
    }
    // Cluster means beat single eigenvalues by a few ulps of accuracy.
    let low_mean = vals[..n - m].iter().sum::<f64>() / (n - m) as f64;
    let high_mean = vals[n - m..].iter().sum::<f64>() / m as f64;
    let c = 1.0 - high_mean / low_mean;
    if c <= 0.0 {
        return Err(Error::Factorization("nonzero Gram eigenvalue is not positive".into()));
    }
    let scale = c.sqrt();
    let u = Matrix::from_fn(Field::Real, m, n, |i, j| {
        Complex64::new(scale * vecs.get(j, n - m + i).re, 0.0)
    });
    // The factor must reproduce G = I - S/low.
    let gram = u.adjoint().mul(&u)?;
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { -s.matrix().get(i, j).re / low_mean };
            dev = dev.max((gram.get(i, j).re - target).abs());
        }
    }
    if dev > tol.max(1e-8) {
        return Err(Error::Factorization(format!(
            "factor misses the two-graph Gram by {dev:.3e}"
        )));
    }
    normalize_to_parseval(&FrameMatrix::new(u)?, frames::DEFAULT_TIGHT_TOL)
}

/// Number of set bits shared by two 23-bit sets.
fn meet(a: u32, b: u32) -> u32 {
    (a & b).count_ones()
}

/// The Seidel matrix of the regular two-graph on 276 vertices, the one
/// whose frame attains the bound 14/3 in R^23.
///
/// Construction: the binary Golay code of length 23 has 253 words of
/// weight 7 forming the Steiner system S(4, 7, 23). Fixing the symbol 22,
/// a graph on 22 + 77 + 176 = 275 vertices (the other symbols, the
/// heptads through 22, the heptads missing 22) is strongly regular with
/// parameters (275, 112, 30, 56); adding one isolated vertex and reading
/// adjacency as -1 gives a Seidel matrix with the two eigenvalues -5 and
/// 55. The eigenvalue structure is not assumed: `seidel_to_etf` verifies
/// it when factoring.
pub fn regular_two_graph_276() -> SeidelMatrix {
    let heptads = golay_heptads();
    debug_assert_eq!(heptads.len(), 253);
    let omega: u32 = 1 << 22;
    let through: Vec<u32> = heptads.iter().copied().filter(|h| h & omega != 0).collect();
    let missing: Vec<u32> = heptads.iter().copied().filter(|h| h & omega == 0).collect();
    debug_assert_eq!(through.len(), 77);
    debug_assert_eq!(missing.len(), 176);

    // Vertices 0..22 are symbols, 22..99 heptads through omega, 99..275
    // heptads missing omega.
    let adjacent = |a: usize, b: usize| -> bool {
        let class = |v: usize| {
            if v < 22 {
                0
            } else if v < 99 {
                1
            } else {
                2
            }
        };
        match (class(a), class(b)) {
            (0, 0) => false,
            (0, 1) => through[b - 22] & (1 << a) == 0,
            (1, 0) => through[a - 22] & (1 << b) == 0,
            (0, 2) => missing[b - 99] & (1 << a) != 0,
            (2, 0) => missing[a - 99] & (1 << b) != 0,
            (1, 1) => meet(through[a - 22], through[b - 22]) == 1,
            (1, 2) => meet(through[a - 22], missing[b - 99]) == 3,
            (2, 1) => meet(missing[a - 99], through[b - 22]) == 3,
            (2, 2) => meet(missing[a - 99], missing[b - 99]) == 1,
            _ => unreachable!(),
        }
    };

    // Vertex 0 of the two-graph is isolated; the remaining 275 carry the
    // graph above. Non-adjacency is +1, adjacency -1.
    let n = 276;
    let mut s = Matrix::zeros(Field::Real, n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let adj = i > 0 && j > 0 && adjacent(i - 1, j - 1);
            let v = if adj { -1.0 } else { 1.0 };
            s.set(i, j, Complex64::new(v, 0.0));
            s.set(j, i, Complex64::new(v, 0.0));
        }
    }
    SeidelMatrix::from_matrix(s).expect("construction yields a valid Seidel matrix")
}

/// Weight-7 words of the length-23 binary Golay code, as 23-bit masks.
///
/// The code is cyclic with generator polynomial
/// x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1 (mask 0xC75); its 2^12 words
/// are the products m(x) g(x) over GF(2) for all degree-<12 messages.
pub fn golay_heptads() -> Vec<u32> {
    const GEN: u32 = 0xC75;
    let mut heptads = Vec::with_capacity(253);
    for msg in 0u32..4096 {
        let mut word = 0u32;
        for bit in 0..12 {
            if msg & (1 << bit) != 0 {
                word ^= GEN << bit;
            }
        }
        if word.count_ones() == 7 {
            heptads.push(word);
        }
    }
    heptads
}

/// A Weyl-Heisenberg fiducial vector: the unit vector in C^d whose orbit
/// under the d^2 displacement operators is an equiangular tight frame.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SicFiducial {
    pub d: usize,
    /// Unit column vector in C^d.
    pub v: Vec<Complex64>,
    /// Orbit coherence spread max - min over the d^2 - 1 displacements.
    pub achieved_spread: f64,
    /// Whether the spread reached the requested tolerance. A search that
    /// exhausts its budget still returns its best vector, flagged false.
    pub converged: bool,
}

/// Applies the displacement X^j Z^k to v: shift by j, then phase by
/// omega^(k i) on entry i of the shifted vector.
fn displace(v: &[Complex64], j: usize, k: usize) -> Vec<Complex64> {
    let d = v.len();
    let omega = 2.0 * std::f64::consts::PI / d as f64;
    (0..d)
        .map(|i| {
            let src = (i + d - j) % d;
            let phase = Complex64::from_polar(1.0, omega * (k * src) as f64);
            phase * v[src]
        })
        .collect()
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Overlaps c_jk = <v, X^j Z^k v> for all (j, k) != (0, 0).
fn overlaps(v: &[Complex64]) -> Vec<Complex64> {
    let d = v.len();
    let mut out = Vec::with_capacity(d * d - 1);
    for j in 0..d {
        for k in 0..d {
            if j == 0 && k == 0 {
                continue;
            }
            out.push(inner(v, &displace(v, j, k)));
        }
    }
    out
}

/// Coherence spread of the orbit of a unit vector.
fn orbit_spread(v: &[Complex64]) -> f64 {
    let mods: Vec<f64> = overlaps(v).iter().map(|c| c.norm()).collect();
    let max = mods.iter().cloned().fold(0.0f64, f64::max);
    let min = mods.iter().cloned().fold(f64::INFINITY, f64::min);
    max - min
}

/// Full orbit {X^j Z^k v} as a Parseval frame of d^2 vectors in C^d.
/// The orbit of any unit vector is automatically tight.
pub fn wh_orbit(fiducial: &[Complex64]) -> Result<FrameMatrix, Error> {
    let d = fiducial.len();
    if d == 0 {
        return Err(Error::Shape("empty fiducial".into()));
    }
    let mut u = Matrix::zeros(Field::Complex, d, d * d);
    for j in 0..d {
        for k in 0..d {
            let w = displace(fiducial, j, k);
            for (i, &z) in w.iter().enumerate() {
                u.set(i, j * d + k, z);
            }
        }
    }
    normalize_to_parseval(&FrameMatrix::new(u)?, frames::DEFAULT_TIGHT_TOL)
}

/// Sum of fourth powers of overlap moduli. Because the sum of squares is
/// fixed at d - 1 for every unit vector, this potential is minimized
/// exactly when all overlaps share one modulus.
fn quartic_potential(v: &[Complex64]) -> f64 {
    overlaps(v).iter().map(|c| c.norm_sqr() * c.norm_sqr()).sum()
}

/// Gradient of the quartic potential with respect to conj(v), times 2.
fn quartic_gradient(v: &[Complex64]) -> Vec<Complex64> {
    let d = v.len();
    let mut grad = vec![Complex64::new(0.0, 0.0); d];
    for j in 0..d {
        for k in 0..d {
            if j == 0 && k == 0 {
                continue;
            }
            let dv = displace(v, j, k);
            let c = inner(v, &dv);
            // Adjoint displacement applied to v: D* v.
            let dstar_v = {
                let d_len = v.len();
                let omega = 2.0 * std::f64::consts::PI / d_len as f64;
                (0..d_len)
                    .map(|i| {
                        // (D* v)_i = conj(omega^(k i)) v_{(i + j) mod d}
                        let dst = (i + j) % d_len;
                        Complex64::from_polar(1.0, -omega * (k * i) as f64) * v[dst]
                    })
                    .collect::<Vec<_>>()
            };
            let w = c.norm_sqr();
            for i in 0..d {
                grad[i] += (c.conj() * dv[i] + c * dstar_v[i]) * (2.0 * w);
            }
        }
    }
    grad.iter_mut().for_each(|g| *g *= 2.0);
    grad
}

fn renormalize(v: &mut [Complex64]) {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|z| *z /= norm);
}

/// One Gauss-Newton polish pass on the residuals |c_jk|^2 - 1/(d+1) and
/// ||v||^2 - 1. Returns the new vector and its max residual.
fn gauss_newton_step(v: &[Complex64], damping: f64) -> Option<Vec<Complex64>> {
    let d = v.len();
    let q = 1.0 / (d as f64 + 1.0);
    let n_res = d * d; // d^2 - 1 overlaps + 1 norm residual
    let n_par = 2 * d;
    let mut jac = vec![0.0f64; n_res * n_par];
    let mut res = vec![0.0f64; n_res];
    let mut row = 0;
    for j in 0..d {
        for k in 0..d {
            if j == 0 && k == 0 {
                continue;
            }
            let dv = displace(v, j, k);
            let c = inner(v, &dv);
            let omega = 2.0 * std::f64::consts::PI / d as f64;
            res[row] = c.norm_sqr() - q;
            for i in 0..d {
                let dst = (i + j) % d;
                let dstar_i = Complex64::from_polar(1.0, -omega * (k * i) as f64) * v[dst];
                let h = c.conj() * dv[i] + c * dstar_i;
                jac[row * n_par + i] = 2.0 * h.re;
                jac[row * n_par + d + i] = 2.0 * h.im;
            }
            row += 1;
        }
    }
    res[row] = v.iter().map(|z| z.norm_sqr()).sum::<f64>() - 1.0;
    for i in 0..d {
        jac[row * n_par + i] = 2.0 * v[i].re;
        jac[row * n_par + d + i] = 2.0 * v[i].im;
    }

    // Damped normal equations J^T J + mu I (the global phase of v is a
    // null direction, so plain normal equations are singular).
    let mut a = vec![0.0f64; n_par * n_par];
    let mut b = vec![0.0f64; n_par];
    for p in 0..n_par {
        for r in 0..n_res {
            b[p] -= jac[r * n_par + p] * res[r];
        }
        for q2 in 0..n_par {
            let mut acc = 0.0;
            for r in 0..n_res {
                acc += jac[r * n_par + p] * jac[r * n_par + q2];
            }
            a[p * n_par + q2] = acc;
        }
    }
    let trace: f64 = (0..n_par).map(|p| a[p * n_par + p]).sum();
    let mu = damping * (trace / n_par as f64).max(1e-300);
    for p in 0..n_par {
        a[p * n_par + p] += mu;
    }
    let delta = solve_dense(&mut a, &mut b, n_par)?;
    let mut out: Vec<Complex64> = v.to_vec();
    for i in 0..d {
        out[i] += Complex64::new(delta[i], delta[d + i]);
    }
    Some(out)
}

/// Gaussian elimination with partial pivoting for the small dense
/// symmetric systems of the polish step.
fn solve_dense(a: &mut [f64], b: &mut [f64], n: usize) -> Option<Vec<f64>> {
    for k in 0..n {
        let mut piv = k;
        for r in (k + 1)..n {
            if a[r * n + k].abs() > a[piv * n + k].abs() {
                piv = r;
            }
        }
        if a[piv * n + k].abs() < 1e-300 {
            return None;
        }
        if piv != k {
            for c in 0..n {
                a.swap(k * n + c, piv * n + c);
            }
            b.swap(k, piv);
        }
        let pv = a[k * n + k];
        for r in (k + 1)..n {
            let f = a[r * n + k] / pv;
            if f == 0.0 {
                continue;
            }
            for c in k..n {
                a[r * n + c] -= f * a[k * n + c];
            }
            b[r] -= f * b[k];
        }
    }
    let mut x = vec![0.0f64; n];
    for k in (0..n).rev() {
        let mut acc = b[k];
        for c in (k + 1)..n {
            acc -= a[k * n + c] * x[c];
        }
        x[k] = acc / a[k * n + k];
    }
    Some(x)
}

fn max_residual(v: &[Complex64]) -> f64 {
    let d = v.len();
    let q = 1.0 / (d as f64 + 1.0);
    let mut worst = (v.iter().map(|z| z.norm_sqr()).sum::<f64>() - 1.0).abs();
    for c in overlaps(v) {
        worst = worst.max((c.norm_sqr() - q).abs());
    }
    worst
}

/// Fiducial vector search for dimensions 2 through 8.
///
/// d = 2 and d = 3 return exact closed forms. For 4 <= d <= 8 the search
/// runs `cfg.starts` independent descents of the quartic overlap
/// potential (projected gradient with backtracking), each polished by
/// damped Gauss-Newton on the overlap residuals; the first start whose
/// orbit spread falls below `cfg.tol` wins. A search that exhausts its
/// budget returns its best vector with `converged = false` rather than
/// discarding it; callers that need a hard failure should map that flag
/// to `Error::SearchExhausted`.
pub fn sic_fiducial(d: usize, cfg: &OptConfig) -> Result<SicFiducial, Error> {
    match d {
        2 => {
            let r3 = 3.0f64.sqrt();
            let a = ((1.0 + 1.0 / r3) / 2.0).sqrt();
            let b = ((1.0 - 1.0 / r3) / 2.0).sqrt();
            let v = vec![
                Complex64::new(a, 0.0),
                Complex64::from_polar(b, std::f64::consts::FRAC_PI_4),
            ];
            let achieved_spread = orbit_spread(&v);
            return Ok(SicFiducial { d, v, achieved_spread, converged: true });
        }
        3 => {
            let s = 2.0f64.sqrt().recip();
            let v = vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(-s, 0.0),
            ];
            let achieved_spread = orbit_spread(&v);
            return Ok(SicFiducial { d, v, achieved_spread, converged: true });
        }
        4..=8 => {}
        other => {
            return Err(Error::Unsupported(format!(
                "fiducial search covers 2 <= d <= 8, got {other}"
            )))
        }
    }

    cfg.validate()?;
    let target_spread = cfg.tol;
    let mut best: Option<SicFiducial> = None;
    for start in 0..cfg.starts {
        let mut rng = crate::rng::seeded(crate::rng::start_seed(cfg.seed, start));
        let mut v: Vec<Complex64> = (0..d)
            .map(|_| Complex64::new(crate::rng::gaussian(&mut rng), crate::rng::gaussian(&mut rng)))
            .collect();
        renormalize(&mut v);

        // Phase 1: projected gradient descent into a basin.
        let mut step = 0.1f64;
        for _ in 0..cfg.max_outer.max(150) {
            let g0 = quartic_potential(&v);
            let grad = quartic_gradient(&v);
            // Tangent component on the unit sphere.
            let radial: f64 = v.iter().zip(&grad).map(|(vi, gi)| (vi.conj() * gi).re).sum();
            let dir: Vec<Complex64> =
                v.iter().zip(&grad).map(|(vi, gi)| -(gi - vi * radial)).collect();
            let dir_sq: f64 = dir.iter().map(|z| z.norm_sqr()).sum();
            if dir_sq.sqrt() < 1e-14 {
                break;
            }
            let mut accepted = false;
            let mut s = step;
            for _ in 0..cfg.max_linesearch {
                let mut cand: Vec<Complex64> =
                    v.iter().zip(&dir).map(|(vi, di)| vi + di * s).collect();
                renormalize(&mut cand);
                if quartic_potential(&cand) < g0 - 1e-4 * s * dir_sq {
                    v = cand;
                    step = (s * 2.0).min(0.5);
                    accepted = true;
                    break;
                }
                s *= 0.5;
            }
            if !accepted {
                break;
            }
        }

        // Phase 2: Gauss-Newton polish to machine-level equiangularity.
        let mut damping = 1e-6f64;
        for _ in 0..60 {
            let r0 = max_residual(&v);
            if r0 < 1e-14 {
                break;
            }
            match gauss_newton_step(&v, damping) {
                Some(cand) => {
                    if max_residual(&cand) < r0 {
                        v = cand;
                        damping = (damping * 0.3).max(1e-12);
                    } else {
                        damping *= 10.0;
                        if damping > 1e6 {
                            break;
                        }
                    }
                }
                None => break,
            }
        }
        renormalize(&mut v);

        let achieved_spread = orbit_spread(&v);
        let cand =
            SicFiducial { d, v, achieved_spread, converged: achieved_spread <= target_spread };
        if best.as_ref().map_or(true, |b| cand.achieved_spread < b.achieved_spread) {
            best = Some(cand);
        }
        if best.as_ref().is_some_and(|b| b.converged) {
            break;
        }
    }
    Ok(best.expect("at least one start"))
}
