//! Operator-splitting solver for the structured semidefinite programs used
//! throughout the crate: minimize a real linear functional of a Hermitian
//! matrix variable subject to positive semidefiniteness, diagonal-sum
//! equalities, diagonal-equality (Toeplitz) structure and fixed entries.
//!
//! The affine structure admits closed-form orthogonal projections (the
//! constraint cell groups live on disjoint diagonals), so each iteration is
//! an alternating projection with a scaled dual update, dominated by one
//! eigendecomposition. Hermitian matrices are eigendecomposed in the doubled
//! real symmetric embedding `[[Re, -Im], [Im, Re]]` and averaged back.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{Error, Result};

/// Dense complex matrix used as the Hermitian SDP variable.
pub type HermitianMatrix = DMatrix<Complex64>;

/// Equality on the sum of one lower diagonal of a leading principal block:
/// `Σ_i X[offset+i, i] = target` over `i = 0..block-offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagSumConstraint {
    pub block: usize,
    pub offset: usize,
    pub target: Complex64,
}

/// All entries of one lower diagonal of a leading principal block are equal
/// (their common value is free). Encodes Toeplitz structure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagEqualConstraint {
    pub block: usize,
    pub offset: usize,
}

/// A pinned entry; the mirrored entry is pinned to the conjugate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedEntry {
    pub row: usize,
    pub col: usize,
    pub value: Complex64,
}

/// Description of one structured SDP over a `dim × dim` Hermitian variable,
/// constrained to the PSD cone. The objective value is the real inner
/// product `Re tr(C X)` with the Hermitian coefficient matrix `C`.
#[derive(Debug, Clone)]
pub struct StructuredSdp {
    pub dim: usize,
    pub objective: HermitianMatrix,
    pub diag_sums: Vec<DiagSumConstraint>,
    pub diag_equals: Vec<DiagEqualConstraint>,
    pub fixed: Vec<FixedEntry>,
}

impl StructuredSdp {
    pub fn new(dim: usize, objective: HermitianMatrix) -> Self {
        Self {
            dim,
            objective,
            diag_sums: Vec::new(),
            diag_equals: Vec::new(),
            fixed: Vec::new(),
        }
    }

    /// Checks well-formedness: finite targets, disjoint constraint cells,
    /// real diagonal values, `dim >= 2`.
    pub fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::invalid("SDP dimension must be >= 2"));
        }
        if self.objective.nrows() != self.dim || self.objective.ncols() != self.dim {
            return Err(Error::invalid("objective matrix has wrong shape"));
        }
        let mut seen_diag: std::collections::HashSet<(usize, usize)> = Default::default();
        for c in &self.diag_sums {
            if c.block > self.dim || c.offset >= c.block {
                return Err(Error::invalid("diagonal-sum constraint out of range"));
            }
            if !c.target.re.is_finite() || !c.target.im.is_finite() {
                return Err(Error::invalid("diagonal-sum target must be finite"));
            }
            if c.offset == 0 && c.target.im.abs() > 1e-12 {
                return Err(Error::InconsistentConstraints(
                    "main-diagonal sum target must be real".into(),
                ));
            }
            if !seen_diag.insert((c.block, c.offset)) {
                return Err(Error::InconsistentConstraints(format!(
                    "duplicate constraint on diagonal {} of block {}",
                    c.offset, c.block
                )));
            }
        }
        for c in &self.diag_equals {
            if c.block > self.dim || c.offset == 0 || c.offset >= c.block {
                return Err(Error::invalid("diagonal-equality constraint out of range"));
            }
            if !seen_diag.insert((c.block, c.offset)) {
                return Err(Error::InconsistentConstraints(format!(
                    "diagonal {} of block {} constrained twice",
                    c.offset, c.block
                )));
            }
        }
        let mut seen_fixed: std::collections::HashMap<(usize, usize), Complex64> =
            Default::default();
        for f in &self.fixed {
            if f.row >= self.dim || f.col >= self.dim {
                return Err(Error::invalid("fixed entry out of range"));
            }
            let (r, c, v) = canonical_fixed(f);
            if r == c && v.im.abs() > 1e-12 {
                return Err(Error::InconsistentConstraints(
                    "diagonal fixed entry must be real".into(),
                ));
            }
            if let Some(prev) = seen_fixed.insert((r, c), v) {
                if (prev - v).norm() > 1e-12 {
                    return Err(Error::InconsistentConstraints(format!(
                        "cell ({r},{c}) fixed to two different values"
                    )));
                }
            }
            // fixed cells must not sit on a constrained diagonal of any block
            for (block, offset) in &seen_diag {
                if r.wrapping_sub(c) == *offset && r < *block && c < *block {
                    return Err(Error::InconsistentConstraints(format!(
                        "cell ({r},{c}) lies on constrained diagonal {offset} of block {block}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn canonical_fixed(f: &FixedEntry) -> (usize, usize, Complex64) {
    if f.row >= f.col {
        (f.row, f.col, f.value)
    } else {
        (f.col, f.row, f.value.conj())
    }
}

/// Solver configuration. Residual tolerances are Frobenius-normalized.
#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    pub eps_primal: f64,
    pub eps_dual: f64,
    pub eps_psd: f64,
    pub max_iter: usize,
    pub over_relaxation: f64,
    pub rho: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            eps_primal: 1e-6,
            eps_dual: 1e-6,
            eps_psd: 1e-8,
            max_iter: 50_000,
            over_relaxation: 1.5,
            rho: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    MaxIter,
    InfeasibleCertificate,
}

/// State that lets a later solve of the same problem family resume.
#[derive(Debug, Clone)]
pub struct WarmStart {
    z: HermitianMatrix,
    u: HermitianMatrix,
    rho: f64,
}

/// Solver output. `matrix` is the PSD-side iterate: positive semidefinite up
/// to projection round-off, with equality constraints satisfied to
/// `primal_residual`.
#[derive(Debug, Clone)]
pub struct SdpSolution {
    pub matrix: HermitianMatrix,
    pub objective_value: f64,
    pub primal_residual: f64,
    pub dual_residual: f64,
    pub iterations: usize,
    pub status: SolveStatus,
    pub warm: WarmStart,
}

/// Real inner product `Re tr(A^H B)` of two complex matrices.
pub fn real_inner(a: &HermitianMatrix, b: &HermitianMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x.conj() * y).re).sum()
}

fn hermitianize(m: &mut HermitianMatrix) {
    let d = m.nrows();
    for r in 0..d {
        m[(r, r)] = Complex64::new(m[(r, r)].re, 0.0);
        for c in 0..r {
            let avg = 0.5 * (m[(r, c)] + m[(c, r)].conj());
            m[(r, c)] = avg;
            m[(c, r)] = avg.conj();
        }
    }
}

/// Orthogonal projection onto the affine set cut out by the problem's
/// diagonal-sum, diagonal-equality and fixed-entry constraints.
///
/// The cell groups are disjoint, so applying each group's closed-form
/// correction once yields the exact projection: a diagonal-sum correction is
/// spread uniformly along the diagonal, a diagonal-equality group is replaced
/// by its mean, fixed entries are overwritten.
pub fn project_affine(m: &HermitianMatrix, problem: &StructuredSdp) -> HermitianMatrix {
    let mut out = m.clone();
    hermitianize(&mut out);
    for c in &problem.diag_sums {
        let len = c.block - c.offset;
        let mut sum = Complex64::ZERO;
        for i in 0..len {
            sum += out[(c.offset + i, i)];
        }
        let excess = (sum - c.target) / len as f64;
        for i in 0..len {
            let v = out[(c.offset + i, i)] - excess;
            out[(c.offset + i, i)] = v;
            if c.offset > 0 {
                out[(i, c.offset + i)] = v.conj();
            } else {
                out[(i, i)] = Complex64::new(v.re, 0.0);
            }
        }
    }
    for c in &problem.diag_equals {
        let len = c.block - c.offset;
        let mut sum = Complex64::ZERO;
        for i in 0..len {
            sum += out[(c.offset + i, i)];
        }
        let mean = sum / len as f64;
        for i in 0..len {
            out[(c.offset + i, i)] = mean;
            out[(i, c.offset + i)] = mean.conj();
        }
    }
    for f in &problem.fixed {
        let (r, c, v) = canonical_fixed(f);
        if r == c {
            out[(r, r)] = Complex64::new(v.re, 0.0);
        } else {
            out[(r, c)] = v;
            out[(c, r)] = v.conj();
        }
    }
    out
}

/// Doubled real symmetric embedding `[[Re, -Im], [Im, Re]]`.
fn embed_real(m: &HermitianMatrix) -> DMatrix<f64> {
    let d = m.nrows();
    let mut out = DMatrix::zeros(2 * d, 2 * d);
    for c in 0..d {
        for r in 0..d {
            let v = m[(r, c)];
            out[(r, c)] = v.re;
            out[(r + d, c + d)] = v.re;
            out[(r, c + d)] = -v.im;
            out[(r + d, c)] = v.im;
        }
    }
    out
}

/// Inverse of [`embed_real`], averaging the duplicated blocks.
fn unembed_real(m: &DMatrix<f64>) -> HermitianMatrix {
    let d = m.nrows() / 2;
    let mut out = HermitianMatrix::zeros(d, d);
    for c in 0..d {
        for r in 0..d {
            let re = 0.5 * (m[(r, c)] + m[(r + d, c + d)]);
            let im = 0.5 * (m[(r + d, c)] - m[(r, c + d)]);
            out[(r, c)] = Complex64::new(re, im);
        }
    }
    hermitianize(&mut out);
    out
}

/// Nearest (Frobenius) PSD matrix: eigendecompose in the doubled real
/// embedding, clip negative eigenvalues, map back.
pub fn project_psd(m: &HermitianMatrix) -> HermitianMatrix {
    let mut h = m.clone();
    hermitianize(&mut h);
    let embedded = embed_real(&h);
    let eig = embedded.symmetric_eigen();
    let dim = eig.eigenvalues.len();
    let mut scaled = eig.eigenvectors.clone();
    for j in 0..dim {
        let lam = eig.eigenvalues[j].max(0.0);
        scaled.column_mut(j).scale_mut(lam);
    }
    let rebuilt = scaled * eig.eigenvectors.transpose();
    unembed_real(&rebuilt)
}

/// Minimum eigenvalue of a Hermitian matrix (via the real embedding).
pub fn min_eigenvalue(m: &HermitianMatrix) -> f64 {
    let mut h = m.clone();
    hermitianize(&mut h);
    embed_real(&h)
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Solves the structured SDP by alternating projections with a scaled dual
/// update, over-relaxation, and residual-balanced penalty adaptation.
pub fn solve(
    problem: &StructuredSdp,
    opts: &SolverOptions,
    warm: Option<&WarmStart>,
) -> Result<SdpSolution> {
    problem.validate()?;
    let d = problem.dim;
    let mut c = problem.objective.clone();
    hermitianize(&mut c);

    let (mut z, mut u, mut rho) = match warm {
        Some(w) if w.z.nrows() == d => (w.z.clone(), w.u.clone(), w.rho),
        _ => (
            HermitianMatrix::zeros(d, d),
            HermitianMatrix::zeros(d, d),
            opts.rho,
        ),
    };
    let alpha = opts.over_relaxation;
    let mut primal_res = f64::INFINITY;
    let mut dual_res = f64::INFINITY;
    let mut status = SolveStatus::MaxIter;
    let mut iterations = opts.max_iter;
    let mut x = HermitianMatrix::zeros(d, d);

    for it in 0..opts.max_iter {
        let step = &z - &u - &c * Complex64::new(1.0 / rho, 0.0);
        x = project_affine(&step, problem);
        let x_relaxed = &x * Complex64::new(alpha, 0.0) + &z * Complex64::new(1.0 - alpha, 0.0);
        let z_old = z;
        z = project_psd(&(&x_relaxed + &u));
        u += &x_relaxed - &z;

        if it % 5 == 4 || it + 1 == opts.max_iter {
            let scale = x.norm().max(z.norm()).max(1.0);
            primal_res = (&x - &z).norm() / scale;
            dual_res = rho * (&z - &z_old).norm() / (rho * u.norm()).max(1.0);
            if !primal_res.is_finite() || x.norm() > 1e12 {
                status = SolveStatus::InfeasibleCertificate;
                iterations = it + 1;
                break;
            }
            if primal_res <= opts.eps_primal && dual_res <= opts.eps_dual {
                status = SolveStatus::Optimal;
                iterations = it + 1;
                break;
            }
            // residual balancing keeps the two rates comparable
            if it % 25 == 24 {
                let ratio = primal_res / dual_res.max(1e-300);
                if ratio > 10.0 && rho < 1e6 {
                    rho *= 2.0;
                    u /= Complex64::new(2.0, 0.0);
                } else if ratio < 0.1 && rho > 1e-6 {
                    rho /= 2.0;
                    u *= Complex64::new(2.0, 0.0);
                }
            }
        }
    }

    if status == SolveStatus::InfeasibleCertificate {
        return Err(Error::Infeasible(iterations));
    }

    let objective_value = real_inner(&c, &z);
    let _ = &x;
    Ok(SdpSolution {
        matrix: z.clone(),
        objective_value,
        primal_residual: primal_res,
        dual_residual: dual_res,
        iterations,
        status,
        warm: WarmStart { z, u, rho },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_hermitian(d: usize, rng: &mut ChaCha8Rng) -> HermitianMatrix {
        let mut m = HermitianMatrix::zeros(d, d);
        for r in 0..d {
            m[(r, r)] = c(rng.random_range(-1.0..1.0), 0.0);
            for col in 0..r {
                let v = c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                m[(r, col)] = v;
                m[(col, r)] = v.conj();
            }
        }
        m
    }

    #[test]
    fn psd_projection_known_values() {
        let m = HermitianMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            c(1.0, 0.0),
            c(-1.0, 0.0),
        ]));
        let p = project_psd(&m);
        assert!((p[(0, 0)] - c(1.0, 0.0)).norm() < 1e-12);
        assert!(p[(1, 1)].norm() < 1e-12);
        assert!(p[(0, 1)].norm() < 1e-12);

        let mut swap = HermitianMatrix::zeros(2, 2);
        swap[(0, 1)] = c(1.0, 0.0);
        swap[(1, 0)] = c(1.0, 0.0);
        let p = project_psd(&swap);
        for r in 0..2 {
            for col in 0..2 {
                assert!((p[(r, col)] - c(0.5, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn psd_projection_idempotent_and_nonnegative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let d = rng.random_range(2..9);
            let m = random_hermitian(d, &mut rng);
            let p = project_psd(&m);
            assert!(min_eigenvalue(&p) >= -1e-10);
            let pp = project_psd(&p);
            assert!((&pp - &p).norm() < 1e-10);
            // PSD input: fixed point
            let gram = &p * &p;
            let pg = project_psd(&gram);
            assert!((&pg - &gram).norm() < 1e-9);
        }
    }

    #[test]
    fn real_embedding_psd_iff_complex_psd() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..30 {
            let d = rng.random_range(2..7);
            let m = random_hermitian(d, &mut rng);
            let min_embedded = embed_real(&m)
                .symmetric_eigen()
                .eigenvalues
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min);
            // independent complex route
            let min_complex = m
                .clone()
                .symmetric_eigen()
                .eigenvalues
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min);
            assert!(
                (min_embedded - min_complex).abs() < 1e-9,
                "embedded {min_embedded} vs complex {min_complex}"
            );
        }
    }

    fn trace_problem(dim: usize) -> StructuredSdp {
        StructuredSdp::new(dim, HermitianMatrix::identity(dim, dim))
    }

    #[test]
    fn affine_projection_spreads_trace() {
        let mut p = trace_problem(2);
        p.diag_sums.push(DiagSumConstraint {
            block: 2,
            offset: 0,
            target: c(1.0, 0.0),
        });
        let out = project_affine(&HermitianMatrix::zeros(2, 2), &p);
        assert!((out[(0, 0)] - c(0.5, 0.0)).norm() < 1e-15);
        assert!((out[(1, 1)] - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn affine_projection_fixed_point_and_first_diagonal() {
        let mut p = trace_problem(3);
        p.diag_sums.push(DiagSumConstraint {
            block: 3,
            offset: 1,
            target: Complex64::ZERO,
        });
        let mut m = HermitianMatrix::zeros(3, 3);
        m[(1, 0)] = c(1.0, 0.0);
        m[(0, 1)] = c(1.0, 0.0);
        m[(2, 1)] = c(1.0, 0.0);
        m[(1, 2)] = c(1.0, 0.0);
        let out = project_affine(&m, &p);
        assert!(out[(1, 0)].norm() < 1e-15);
        assert!(out[(2, 1)].norm() < 1e-15);
        let again = project_affine(&out, &p);
        assert!((&again - &out).norm() < 1e-14);
    }

    /// Least-squares reference: project in the weighted real coordinates of
    /// the Hermitian space (diag, √2·Re lower, √2·Im lower), where Frobenius
    /// becomes the plain Euclidean norm.
    fn ls_projection_reference(
        m: &HermitianMatrix,
        problem: &StructuredSdp,
    ) -> HermitianMatrix {
        let d = problem.dim;
        let mut cells = Vec::new(); // (r, c)
        for r in 0..d {
            for col in 0..=r {
                cells.push((r, col));
            }
        }
        let ncoord: usize = cells.iter().map(|&(r, c)| if r == c { 1 } else { 2 }).sum();
        let coord_of = |r: usize, c: usize| -> usize {
            let mut idx = 0;
            for &(rr, cc) in &cells {
                if (rr, cc) == (r, c) {
                    return idx;
                }
                idx += if rr == cc { 1 } else { 2 };
            }
            unreachable!()
        };
        let to_coords = |mat: &HermitianMatrix| -> nalgebra::DVector<f64> {
            let mut v = nalgebra::DVector::zeros(ncoord);
            for &(r, c) in &cells {
                let i = coord_of(r, c);
                if r == c {
                    v[i] = mat[(r, c)].re;
                } else {
                    v[i] = std::f64::consts::SQRT_2 * mat[(r, c)].re;
                    v[i + 1] = std::f64::consts::SQRT_2 * mat[(r, c)].im;
                }
            }
            v
        };
        let from_coords = |v: &nalgebra::DVector<f64>| -> HermitianMatrix {
            let mut mat = HermitianMatrix::zeros(d, d);
            for &(r, c) in &cells {
                let i = coord_of(r, c);
                if r == c {
                    mat[(r, c)] = Complex64::new(v[i], 0.0);
                } else {
                    let val = Complex64::new(
                        v[i] / std::f64::consts::SQRT_2,
                        v[i + 1] / std::f64::consts::SQRT_2,
                    );
                    mat[(r, c)] = val;
                    mat[(c, r)] = val.conj();
                }
            }
            mat
        };

        let mut rows: Vec<nalgebra::DVector<f64>> = Vec::new();
        let mut rhs: Vec<f64> = Vec::new();
        let mut push_row = |row: nalgebra::DVector<f64>, b: f64| {
            rows.push(row);
            rhs.push(b);
        };
        for cst in &problem.diag_sums {
            let len = cst.block - cst.offset;
            let mut row_re = nalgebra::DVector::zeros(ncoord);
            let mut row_im = nalgebra::DVector::zeros(ncoord);
            for i in 0..len {
                let (r, c) = (cst.offset + i, i);
                let idx = coord_of(r, c);
                if r == c {
                    row_re[idx] = 1.0;
                } else {
                    row_re[idx] = 1.0 / std::f64::consts::SQRT_2;
                    row_im[idx + 1] = 1.0 / std::f64::consts::SQRT_2;
                }
            }
            push_row(row_re, cst.target.re);
            if cst.offset > 0 {
                push_row(row_im, cst.target.im);
            }
        }
        for f in &problem.fixed {
            let (r, c, v) = super::canonical_fixed(f);
            let idx = coord_of(r, c);
            let mut row = nalgebra::DVector::zeros(ncoord);
            if r == c {
                row[idx] = 1.0;
                push_row(row, v.re);
            } else {
                row[idx] = 1.0 / std::f64::consts::SQRT_2;
                push_row(row, v.re);
                let mut row2 = nalgebra::DVector::zeros(ncoord);
                row2[idx + 1] = 1.0 / std::f64::consts::SQRT_2;
                push_row(row2, v.im);
            }
        }

        let nrows = rows.len();
        let a = nalgebra::DMatrix::from_fn(nrows, ncoord, |i, j| rows[i][j]);
        let b = nalgebra::DVector::from_vec(rhs);
        let v0 = to_coords(m);
        let resid = &a * &v0 - &b;
        let aat = &a * a.transpose();
        let lambda = aat.svd(true, true).solve(&resid, 1e-12).unwrap();
        let v = v0 - a.transpose() * lambda;
        from_coords(&v)
    }

    #[test]
    fn affine_projection_matches_least_squares() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..20 {
            let d = rng.random_range(3..7);
            let mut p = trace_problem(d);
            p.diag_sums.push(DiagSumConstraint {
                block: d,
                offset: 0,
                target: c(rng.random_range(-1.0..1.0), 0.0),
            });
            p.diag_sums.push(DiagSumConstraint {
                block: d,
                offset: 1,
                target: c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            });
            if d > 3 {
                p.fixed.push(FixedEntry {
                    row: d - 1,
                    col: 0,
                    value: c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
                });
            }
            p.validate().unwrap();
            let m = random_hermitian(d, &mut rng);
            let mine = project_affine(&m, &p);
            let reference = ls_projection_reference(&m, &p);
            assert!(
                (&mine - &reference).norm() < 1e-9,
                "projection mismatch {}",
                (&mine - &reference).norm()
            );
            // non-expansive relative to a second random point
            let m2 = random_hermitian(d, &mut rng);
            let p2 = project_affine(&m2, &p);
            assert!((&mine - &p2).norm() <= (&m - &m2).norm() + 1e-12);
        }
    }

    #[test]
    fn solve_smallest_psd_completion() {
        let mut p = trace_problem(2);
        p.fixed.push(FixedEntry {
            row: 0,
            col: 0,
            value: c(1.0, 0.0),
        });
        let sol = solve(&p, &SolverOptions::default(), None).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.objective_value - 1.0).abs() < 1e-5);
        assert!((sol.matrix[(0, 0)] - c(1.0, 0.0)).norm() < 1e-4);
        assert!(sol.matrix[(1, 1)].norm() < 1e-4);
        assert!(min_eigenvalue(&sol.matrix) >= -1e-10);
    }

    #[test]
    fn solve_unit_disk_feasibility_point() {
        // n = 1, x = 0.5: H = 1 with [[1, 0.5], [0.5, 1]] PSD is feasible.
        let mut p = StructuredSdp::new(2, HermitianMatrix::zeros(2, 2));
        p.diag_sums.push(DiagSumConstraint {
            block: 1,
            offset: 0,
            target: c(1.0, 0.0),
        });
        p.fixed.push(FixedEntry {
            row: 1,
            col: 0,
            value: c(0.5, 0.0),
        });
        p.fixed.push(FixedEntry {
            row: 1,
            col: 1,
            value: c(1.0, 0.0),
        });
        let sol = solve(&p, &SolverOptions::default(), None).unwrap();
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!(sol.primal_residual <= 1e-6);
    }

    #[test]
    fn validate_rejects_conflicts() {
        let mut p = trace_problem(3);
        p.fixed.push(FixedEntry {
            row: 1,
            col: 1,
            value: c(0.0, 1.0),
        });
        assert!(p.validate().is_err());

        let mut p = trace_problem(3);
        p.fixed.push(FixedEntry {
            row: 2,
            col: 0,
            value: c(1.0, 0.0),
        });
        p.fixed.push(FixedEntry {
            row: 2,
            col: 0,
            value: c(2.0, 0.0),
        });
        assert!(p.validate().is_err());

        let mut p = trace_problem(1);
        assert!(p.validate().is_err());
        p.dim = 3;
        p.objective = HermitianMatrix::identity(3, 3);
        p.diag_sums.push(DiagSumConstraint {
            block: 4,
            offset: 0,
            target: Complex64::ZERO,
        });
        assert!(p.validate().is_err());
    }

    #[test]
    fn warm_start_resumes() {
        let mut p = trace_problem(4);
        p.diag_sums.push(DiagSumConstraint {
            block: 4,
            offset: 1,
            target: Complex64::ZERO,
        });
        p.fixed.push(FixedEntry {
            row: 3,
            col: 0,
            value: c(0.4, 0.2),
        });
        p.fixed.push(FixedEntry {
            row: 3,
            col: 3,
            value: c(1.0, 0.0),
        });
        let opts = SolverOptions::default();
        let first = solve(&p, &opts, None).unwrap();
        let resumed = solve(&p, &opts, Some(&first.warm)).unwrap();
        assert!(resumed.iterations <= first.iterations);
        assert!((resumed.objective_value - first.objective_value).abs() < 1e-5);
    }
}
