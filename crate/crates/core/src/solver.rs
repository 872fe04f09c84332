//! Smallest-eigenpair solvers for the quadratic minimization
//! min b'Ab subject to ||b|| = 1.
//!
//! Two routes are provided. [`smallest_eigenpair`] runs cyclic Jacobi
//! rotations on an explicitly assembled symmetric matrix. For matrices that
//! arise as A = S'S, [`smallest_eigenpair_factored`] orthogonalizes the
//! columns of S directly (one-sided Jacobi); this resolves smallest
//! eigenvalues far below machine precision relative to ||A||, which the
//! normal-matrix route cannot.

use crate::error::{Error, Result};
use crate::matrix::{canonical_sign_is_flipped, norm2, DenseMatrix};
use crate::scalar::Scalar;

/// Default relative tolerance for the residual and near-kernel bounds.
pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 60;

/// Smallest eigenvalue with its unit eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult<T> {
    /// The smallest eigenvalue.
    pub value: T,
    /// Unit eigenvector, sign-canonicalized (first significant entry
    /// positive).
    pub vector: Vec<T>,
    /// ||A v - value v||.
    pub residual: T,
    /// Number of eigenvalues within 10 * tol * ||A|| of zero. A dimension
    /// above one signals several independent exact implicitizations
    /// (reducible curves).
    pub near_kernel_dim: usize,
}

/// All eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues<T: Scalar>(a: &DenseMatrix<T>, tol: T) -> Result<Vec<T>> {
    check_symmetric(a, tol)?;
    let (mut values, _) = jacobi_eigen(&mut a.clone())?;
    values.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(values)
}

/// Unit eigenvector of the smallest eigenvalue of a symmetric matrix, by
/// cyclic Jacobi rotations.
pub fn smallest_eigenpair<T: Scalar>(a: &DenseMatrix<T>, tol: T) -> Result<EigenResult<T>> {
    check_symmetric(a, tol)?;
    let (values, vectors) = jacobi_eigen(&mut a.clone())?;
    let k = values.len();
    let mut min_idx = 0;
    let mut norm = T::zero();
    for (i, &v) in values.iter().enumerate() {
        if v < values[min_idx] {
            min_idx = i;
        }
        norm = norm.max(v.abs());
    }
    let mut vector = vectors.column(min_idx);
    let n = norm2(&vector);
    for v in &mut vector {
        *v /= n;
    }
    if canonical_sign_is_flipped(&vector) {
        for v in &mut vector {
            *v = -*v;
        }
    }
    let value = values[min_idx];
    let residual = eigen_residual(a, &vector, value);
    if residual > tol * norm.max(T::min_positive_value()) && k > 1 {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let threshold = T::of_f64(10.0) * tol * norm;
    let near_kernel_dim = values.iter().filter(|&&v| v <= threshold).count();
    Ok(EigenResult {
        value,
        vector,
        residual,
        near_kernel_dim,
    })
}

/// Smallest eigenpair of S'S, computed from S itself by one-sided Jacobi:
/// columns of S are rotated pairwise until mutually orthogonal, the smallest
/// column norm is the smallest singular value sigma, and the returned value
/// is sigma^2 with the matching right singular vector.
pub fn smallest_eigenpair_factored<T: Scalar>(
    s: &DenseMatrix<T>,
    tol: T,
) -> Result<EigenResult<T>> {
    let cols = s.cols();
    assert!(cols >= 1, "factor needs at least one column");
    let mut work: Vec<Vec<T>> = (0..cols).map(|j| s.column(j)).collect();
    let mut v: Vec<Vec<T>> = (0..cols)
        .map(|j| {
            let mut e = vec![T::zero(); cols];
            e[j] = T::one();
            e
        })
        .collect();
    let eps = T::epsilon() * T::of_f64(4.0);
    // columns whose norm has collapsed to roundoff of the largest column are
    // exact kernel directions; rotating pairs of them would chase noise
    let scale_sq = work.iter().map(|c| dot(c, c)).fold(T::zero(), T::max);
    let null_floor = scale_sq * (T::epsilon() * T::of_usize(cols.max(4)) * T::of_f64(16.0)).powi(2);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = 0usize;
        for i in 0..cols.saturating_sub(1) {
            for j in (i + 1)..cols {
                let alpha = dot(&work[i], &work[i]);
                let beta = dot(&work[j], &work[j]);
                let gamma = dot(&work[i], &work[j]);
                if alpha <= null_floor || beta <= null_floor {
                    continue;
                }
                if gamma.abs() <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated += 1;
                let tau = (beta - alpha) / (T::two() * gamma);
                let t = if tau == T::zero() {
                    T::one()
                } else {
                    tau.signum() / (tau.abs() + (T::one() + tau * tau).sqrt())
                };
                let c = (T::one() + t * t).sqrt().recip();
                let sn = c * t;
                rotate_pair(&mut work, i, j, c, sn);
                rotate_pair(&mut v, i, j, c, sn);
            }
        }
        if rotated == 0 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let sigmas_sq: Vec<T> = work.iter().map(|c| dot(c, c)).collect();
    let mut min_idx = 0;
    let mut max_sq = T::zero();
    for (i, &sq) in sigmas_sq.iter().enumerate() {
        if sq < sigmas_sq[min_idx] {
            min_idx = i;
        }
        max_sq = max_sq.max(sq);
    }
    let mut vector = v[min_idx].clone();
    let n = norm2(&vector);
    for x in &mut vector {
        *x /= n;
    }
    if canonical_sign_is_flipped(&vector) {
        for x in &mut vector {
            *x = -*x;
        }
    }
    let value = sigmas_sq[min_idx];
    // residual of the implied eigenproblem, via two factor products
    let sv = s.matvec(&vector);
    let stsv = s.transpose().matvec(&sv);
    let residual = {
        let diff: Vec<T> = stsv
            .iter()
            .zip(&vector)
            .map(|(&a, &x)| a - value * x)
            .collect();
        norm2(&diff)
    };
    let threshold = T::of_f64(10.0) * tol * max_sq;
    let near_kernel_dim = sigmas_sq.iter().filter(|&&sq| sq <= threshold).count();
    Ok(EigenResult {
        value,
        vector,
        residual,
        near_kernel_dim,
    })
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

fn rotate_pair<T: Scalar>(cols: &mut [Vec<T>], i: usize, j: usize, c: T, s: T) {
    for k in 0..cols[i].len() {
        let xi = cols[i][k];
        let xj = cols[j][k];
        cols[i][k] = c * xi - s * xj;
        cols[j][k] = s * xi + c * xj;
    }
}

fn check_symmetric<T: Scalar>(a: &DenseMatrix<T>, _tol: T) -> Result<()> {
    assert_eq!(a.rows(), a.cols(), "matrix must be square");
    let scale = a.max_abs().max(T::min_positive_value());
    let bound = T::of_f64(1e-10) * scale;
    for i in 0..a.rows() {
        for j in (i + 1)..a.cols() {
            if (a[(i, j)] - a[(j, i)]).abs() > bound {
                return Err(Error::AsymmetricMatrix { i, j });
            }
        }
    }
    Ok(())
}

fn eigen_residual<T: Scalar>(a: &DenseMatrix<T>, v: &[T], value: T) -> T {
    let av = a.matvec(v);
    let diff: Vec<T> = av.iter().zip(v).map(|(&x, &y)| x - value * y).collect();
    norm2(&diff)
}

/// Cyclic Jacobi on a symmetric matrix; returns unsorted eigenvalues and the
/// matrix of eigenvectors (as columns). Follows the classic threshold
/// scheme: rotate every off-diagonal above a per-sweep threshold until the
/// off-diagonal mass is gone.
fn jacobi_eigen<T: Scalar>(a: &mut DenseMatrix<T>) -> Result<(Vec<T>, DenseMatrix<T>)> {
    let n = a.rows();
    let mut v = DenseMatrix::identity(n);
    if n == 1 {
        return Ok((vec![a[(0, 0)]], v));
    }
    let scale = a.max_abs().max(T::min_positive_value());
    let stop = T::epsilon() * scale * T::of_usize(n);
    for _sweep in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for i in 0..n - 1 {
            for j in (i + 1)..n {
                off += a[(i, j)].abs();
            }
        }
        if off <= stop {
            let values = (0..n).map(|i| a[(i, i)]).collect();
            return Ok((values, v));
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= stop / T::of_usize(n * n) {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (T::two() * apq);
                let t = if theta == T::zero() {
                    T::one()
                } else {
                    theta.signum() / (theta.abs() + (T::one() + theta * theta).sqrt())
                };
                let c = (T::one() + t * t).sqrt().recip();
                let s = t * c;
                let tau = s / (T::one() + c);
                let h = t * apq;
                a[(p, p)] -= h;
                a[(q, q)] += h;
                a[(p, q)] = T::zero();
                a[(q, p)] = T::zero();
                for k in 0..n {
                    if k != p && k != q {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = akp - s * (akq + tau * akp);
                        a[(p, k)] = a[(k, p)];
                        a[(k, q)] = akq + s * (akp - tau * akq);
                        a[(q, k)] = a[(k, q)];
                    }
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp - s * (vkq + tau * vkp);
                    v[(k, q)] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}
