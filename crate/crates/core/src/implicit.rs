//! Bivariate implicit polynomials over the graded-lexicographic monomial
//! basis: 1, x, y, x², xy, y², x³, ...

use crate::bernstein::pascal_rows;
use crate::error::{Error, Result};
use crate::matrix::{canonical_sign_is_flipped, norm2};
use crate::scalar::Scalar;

/// Ordered monomial exponents (a, b) for x^a y^b with a + b <= n.
///
/// Ordering is a fixed contract: ascending total degree, then ascending power
/// of y inside each block, so degree-block slicing is trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis2 {
    degree: usize,
    exponents: Vec<(usize, usize)>,
}

impl MonomialBasis2 {
    pub fn new(degree: usize) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidImplicitDegree(degree));
        }
        let mut exponents = Vec::with_capacity(Self::size_for(degree));
        for d in 0..=degree {
            for b in 0..=d {
                exponents.push((d - b, b));
            }
        }
        Ok(Self { degree, exponents })
    }

    /// k = (n+1)(n+2)/2.
    pub fn size_for(degree: usize) -> usize {
        (degree + 1) * (degree + 2) / 2
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[(usize, usize)] {
        &self.exponents
    }
}

/// Degree-n implicit curve f(x, y) = sum_i b_i x^{a_i} y^{b_i}.
#[derive(Debug, Clone, PartialEq)]
pub struct ImplicitCurve<T> {
    basis: MonomialBasis2,
    coeffs: Vec<T>,
}

impl<T: Scalar> ImplicitCurve<T> {
    pub fn new(degree: usize, coeffs: Vec<T>) -> Result<Self> {
        let basis = MonomialBasis2::new(degree)?;
        if coeffs.len() != basis.size() {
            return Err(Error::CoefficientLength {
                expected: basis.size(),
                got: coeffs.len(),
            });
        }
        Ok(Self { basis, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.basis.degree()
    }

    pub fn basis(&self) -> &MonomialBasis2 {
        &self.basis
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn eval(&self, x: T, y: T) -> T {
        let (xp, yp) = power_tables(self.degree(), x, y);
        self.basis
            .exponents()
            .iter()
            .zip(&self.coeffs)
            .fold(T::zero(), |acc, (&(a, b), &c)| acc + c * xp[a] * yp[b])
    }

    /// (df/dx, df/dy) at (x, y).
    pub fn gradient(&self, x: T, y: T) -> (T, T) {
        let (xp, yp) = power_tables(self.degree(), x, y);
        let mut gx = T::zero();
        let mut gy = T::zero();
        for (&(a, b), &c) in self.basis.exponents().iter().zip(&self.coeffs) {
            if a > 0 {
                gx += c * T::of_usize(a) * xp[a - 1] * yp[b];
            }
            if b > 0 {
                gy += c * T::of_usize(b) * xp[a] * yp[b - 1];
            }
        }
        (gx, gy)
    }

    /// Unit 2-norm with the first significant coefficient positive.
    /// Idempotent; rejects the zero vector.
    pub fn canonicalized(&self) -> Result<Self> {
        let norm = norm2(&self.coeffs);
        if norm == T::zero() {
            return Err(Error::ZeroCoefficients);
        }
        let norm = if canonical_sign_is_flipped(&self.coeffs) {
            -norm
        } else {
            norm
        };
        Ok(Self {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(|&c| c / norm).collect(),
        })
    }

    /// Coefficients of h(x, y) = f((x - cx)/sx, (y - cy)/sy).
    ///
    /// Used to pull a fit in normalized coordinates back to the original
    /// frame. Expansion is by the binomial theorem per monomial.
    pub fn compose_affine(&self, cx: T, cy: T, sx: T, sy: T) -> Self {
        let n = self.degree();
        let basis = self.basis.clone();
        let binom = pascal_rows::<T>(n);
        // powers of (-cx/sx), (-cy/sy) and (1/sx), (1/sy)
        let mut out = vec![T::zero(); basis.size()];
        let index_of = |a: usize, b: usize| -> usize {
            let d = a + b;
            d * (d + 1) / 2 + b
        };
        for (&(a, b), &c) in basis.exponents().iter().zip(&self.coeffs) {
            let sxa = sx.powi(a as i32).recip();
            let syb = sy.powi(b as i32).recip();
            for i in 0..=a {
                for j in 0..=b {
                    let w = binom[a][i]
                        * binom[b][j]
                        * (-cx).powi((a - i) as i32)
                        * (-cy).powi((b - j) as i32);
                    out[index_of(i, j)] += c * w * sxa * syb;
                }
            }
        }
        Self { basis, coeffs: out }
    }
}

fn power_tables<T: Scalar>(n: usize, x: T, y: T) -> (Vec<T>, Vec<T>) {
    let mut xp = vec![T::one(); n + 1];
    let mut yp = vec![T::one(); n + 1];
    for i in 1..=n {
        xp[i] = xp[i - 1] * x;
        yp[i] = yp[i - 1] * y;
    }
    (xp, yp)
}
