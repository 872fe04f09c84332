//! Univariate polynomials in the Bernstein basis on [0, 1].
//!
//! The implicitization pipeline keeps every composed curve polynomial in
//! Bernstein form: evaluation runs through de Casteljau convex combinations,
//! products and degree elevations stay in-basis, and the Gram matrix of the
//! basis comes from a closed form rather than quadrature.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;

/// Rows 0..=n of Pascal's triangle in the scalar type.
///
/// Built by repeated addition, which is exact in binary floating point until
/// the entries cross 2^53 (around row 56 for f64) and stays at unit roundoff
/// in relative terms beyond that.
pub fn pascal_rows<T: Scalar>(n: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n + 1);
    rows.push(vec![T::one()]);
    for r in 1..=n {
        let prev = &rows[r - 1];
        let mut row = vec![T::one(); r + 1];
        for k in 1..r {
            row[k] = prev[k - 1] + prev[k];
        }
        rows.push(row);
    }
    rows
}

/// Values of all Bernstein basis functions B_{i,p} at `t`, by the de
/// Casteljau style recurrence.
pub fn basis_values<T: Scalar>(p: usize, t: T) -> Vec<T> {
    let u = T::one() - t;
    let mut b = vec![T::zero(); p + 1];
    b[0] = T::one();
    for j in 1..=p {
        b[j] = t * b[j - 1];
        for k in (1..j).rev() {
            b[k] = t * b[k - 1] + u * b[k];
        }
        b[0] = u * b[0];
    }
    b
}

/// Univariate polynomial of explicit degree p, stored as coefficients of
/// B_{0,p}, ..., B_{p,p}.
#[derive(Debug, Clone, PartialEq)]
pub struct BernsteinPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> BernsteinPoly<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a Bernstein polynomial needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn constant(value: T, degree: usize) -> Self {
        Self::new(vec![value; degree + 1])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// de Casteljau evaluation; valid for any t, numerically stable on [0, 1].
    pub fn eval(&self, t: T) -> T {
        let mut beta = self.coeffs.clone();
        let n = beta.len();
        let u = T::one() - t;
        for j in 1..n {
            for k in 0..n - j {
                beta[k] = beta[k] * u + beta[k + 1] * t;
            }
        }
        beta[0]
    }

    /// Product in Bernstein form:
    /// c_k = sum_i C(p,i) C(q,k-i) / C(p+q,k) * a_i b_{k-i}.
    pub fn multiply(&self, other: &Self) -> Self {
        let p = self.degree();
        let q = other.degree();
        let binom = pascal_rows::<T>(p + q);
        let mut coeffs = vec![T::zero(); p + q + 1];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let lo = k.saturating_sub(q);
            let hi = p.min(k);
            let mut acc = T::zero();
            for i in lo..=hi {
                let w = binom[p][i] * binom[q][k - i] / binom[p + q][k];
                acc += w * self.coeffs[i] * other.coeffs[k - i];
            }
            *c = acc;
        }
        Self::new(coeffs)
    }

    /// Raise the representation degree without changing values, one step at
    /// a time: c'_i = (i/(p+1)) c_{i-1} + (1 - i/(p+1)) c_i.
    pub fn elevate(&self, target_degree: usize) -> Result<Self> {
        if target_degree < self.degree() {
            return Err(Error::ElevationBelowDegree {
                degree: self.degree(),
                target: target_degree,
            });
        }
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() - 1 < target_degree {
            let p = coeffs.len() - 1;
            let denom = T::of_usize(p + 1);
            let mut next = vec![T::zero(); p + 2];
            for (i, n) in next.iter_mut().enumerate() {
                let w = T::of_usize(i) / denom;
                let lo = if i >= 1 { coeffs[i - 1] } else { T::zero() };
                let hi = if i <= p { coeffs[i] } else { T::zero() };
                *n = w * lo + (T::one() - w) * hi;
            }
            coeffs = next;
        }
        Ok(Self::new(coeffs))
    }

    /// Derivative, one degree lower: p * (c_{i+1} - c_i).
    pub fn derivative(&self) -> Result<Self> {
        let p = self.degree();
        if p == 0 {
            return Err(Error::DerivativeOfConstant);
        }
        let scale = T::of_usize(p);
        let coeffs = self
            .coeffs
            .windows(2)
            .map(|w| scale * (w[1] - w[0]))
            .collect();
        Ok(Self::new(coeffs))
    }

    /// Exact basis conversion from power coefficients (a_0 + a_1 t + ...):
    /// b_i = sum_{j<=i} C(i,j)/C(p,j) a_j.
    pub fn from_power_coeffs(monomial_coeffs: &[T]) -> Self {
        assert!(!monomial_coeffs.is_empty(), "empty power coefficient list");
        let p = monomial_coeffs.len() - 1;
        let binom = pascal_rows::<T>(p);
        let coeffs = (0..=p)
            .map(|i| {
                (0..=i).fold(T::zero(), |acc, j| {
                    acc + binom[i][j] / binom[p][j] * monomial_coeffs[j]
                })
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: T) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Sum, elevating the lower-degree operand first.
    pub fn add(&self, other: &Self) -> Self {
        let degree = self.degree().max(other.degree());
        let a = self.elevate(degree).expect("elevating to max degree");
        let b = other.elevate(degree).expect("elevating to max degree");
        Self::new(
            a.coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| x + y)
                .collect(),
        )
    }
}

/// Gram matrix of the degree-p Bernstein basis on [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix<T> {
    degree: usize,
    entries: DenseMatrix<T>,
}

impl<T: Scalar> GramMatrix<T> {
    /// Closed form: entry (i,j) = C(p,i) C(p,j) / ((2p+1) C(2p,i+j)).
    pub fn new(degree: usize) -> Self {
        let p = degree;
        let binom = pascal_rows::<T>(2 * p);
        let scale = T::of_usize(2 * p + 1);
        let mut entries = DenseMatrix::zeros(p + 1, p + 1);
        for i in 0..=p {
            for j in i..=p {
                let v = binom[p][i] * binom[p][j] / (scale * binom[2 * p][i + j]);
                entries[(i, j)] = v;
                entries[(j, i)] = v;
            }
        }
        Self { degree, entries }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &DenseMatrix<T> {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn poly(coeffs: &[f64]) -> BernsteinPoly<f64> {
        BernsteinPoly::new(coeffs.to_vec())
    }

    // Direct power-basis expansion of B_{i,p}, used as an independent
    // evaluation oracle.
    fn eval_via_power_basis(coeffs: &[f64], t: f64) -> f64 {
        let p = coeffs.len() - 1;
        let binom = pascal_rows::<f64>(p);
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * binom[p][i] * t.powi(i as i32) * (1.0 - t).powi((p - i) as i32))
            .sum()
    }

    #[test]
    fn eval_linear_interpolates() {
        assert_eq!(poly(&[0.0, 1.0]).eval(0.5), 0.5);
    }

    #[test]
    fn eval_partition_of_unity() {
        assert_eq!(poly(&[1.0, 1.0, 1.0]).eval(0.3), 1.0);
    }

    #[test]
    fn eval_matches_power_basis_expansion() {
        let c = [0.0, 2.0, 0.0, 1.0];
        let expected = eval_via_power_basis(&c, 0.5);
        assert_relative_eq!(poly(&c).eval(0.5), expected, max_relative = 1e-14);
    }

    #[test]
    fn eval_endpoint_coefficients() {
        let p = poly(&[3.0, -1.0, 7.0]);
        assert_eq!(p.eval(0.0), 3.0);
        assert_eq!(p.eval(1.0), 7.0);
    }

    #[test]
    fn multiply_one_minus_t_by_t() {
        let a = poly(&[1.0, 0.0]);
        let b = poly(&[0.0, 1.0]);
        let c = a.multiply(&b);
        assert_eq!(c.coeffs(), &[0.0, 0.5, 0.0]);
    }

    #[test]
    fn multiply_by_constant_elevates() {
        let one = poly(&[1.0, 1.0]);
        let b = poly(&[3.0, 5.0]);
        assert_eq!(one.multiply(&b).coeffs(), &[3.0, 4.0, 5.0]);
    }

    #[test]
    fn multiply_t_by_t() {
        let t = poly(&[0.0, 1.0]);
        assert_eq!(t.multiply(&t).coeffs(), &[0.0, 0.0, 1.0]);
    }

    #[test]
    fn elevate_constant() {
        let c = poly(&[1.0]).elevate(2).unwrap();
        assert_eq!(c.coeffs(), &[1.0, 1.0, 1.0]);
    }

    #[test]
    fn elevate_t_to_degree_two() {
        let t = poly(&[0.0, 1.0]).elevate(2).unwrap();
        assert_eq!(t.coeffs(), &[0.0, 0.5, 1.0]);
    }

    #[test]
    fn elevate_rejects_lower_degree() {
        let c = poly(&[1.0, 2.0, 3.0]);
        assert_eq!(
            c.elevate(1),
            Err(Error::ElevationBelowDegree {
                degree: 2,
                target: 1
            })
        );
    }

    #[test]
    fn elevate_preserves_values() {
        let c = poly(&[0.4, -1.2, 3.3, 0.7]);
        let e = c.elevate(6).unwrap();
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            assert_relative_eq!(c.eval(t), e.eval(t), epsilon = 1e-12);
        }
    }

    #[test]
    fn derivative_of_t() {
        assert_eq!(poly(&[0.0, 1.0]).derivative().unwrap().coeffs(), &[1.0]);
    }

    #[test]
    fn derivative_of_constant_poly_is_zero() {
        assert_eq!(
            poly(&[1.0, 1.0, 1.0]).derivative().unwrap().coeffs(),
            &[0.0, 0.0]
        );
    }

    #[test]
    fn derivative_of_t_squared() {
        let d = poly(&[0.0, 0.0, 1.0]).derivative().unwrap();
        assert_eq!(d.coeffs(), &[0.0, 2.0]);
        assert_relative_eq!(d.eval(0.7), 1.4, epsilon = 1e-15);
    }

    #[test]
    fn derivative_rejects_degree_zero() {
        assert_eq!(poly(&[2.0]).derivative(), Err(Error::DerivativeOfConstant));
    }

    #[test]
    fn derivative_matches_central_differences() {
        let c = poly(&[0.3, 1.9, -0.5, 2.2, 0.1]);
        let d = c.derivative().unwrap();
        let t = 0.37;
        let mut errors = [0.0; 2];
        for (idx, h) in [1e-3, 1e-4].iter().enumerate() {
            let fd = (c.eval(t + h) - c.eval(t - h)) / (2.0 * h);
            errors[idx] = (d.eval(t) - fd).abs();
        }
        // central differences are O(h^2): shrinking h by 10 shrinks the error ~100x
        let ratio = errors[0] / errors[1];
        assert!(
            (20.0..500.0).contains(&ratio),
            "ratio {ratio} not consistent with O(h^2)"
        );
    }

    #[test]
    fn gram_degree_zero_and_one() {
        let g0 = GramMatrix::<f64>::new(0);
        assert_eq!(g0.matrix()[(0, 0)], 1.0);
        let g1 = GramMatrix::<f64>::new(1);
        assert_relative_eq!(g1.matrix()[(0, 0)], 1.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(g1.matrix()[(0, 1)], 1.0 / 6.0, epsilon = 1e-15);
        assert_relative_eq!(g1.matrix()[(1, 1)], 1.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn gram_total_mass_is_one() {
        // sum of all entries = integral of (sum_i B_i)^2 = 1
        for p in [2usize, 5, 9, 20] {
            let g = GramMatrix::<f64>::new(p);
            let mut total = 0.0;
            for i in 0..=p {
                for j in 0..=p {
                    total += g.matrix()[(i, j)];
                }
            }
            assert_relative_eq!(total, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn power_to_bernstein_basics() {
        assert_eq!(
            BernsteinPoly::from_power_coeffs(&[0.0, 1.0]).coeffs(),
            &[0.0, 1.0]
        );
        assert_eq!(BernsteinPoly::from_power_coeffs(&[1.0]).coeffs(), &[1.0]);
        assert_eq!(
            BernsteinPoly::from_power_coeffs(&[0.0, 0.0, 1.0]).coeffs(),
            &[0.0, 0.0, 1.0]
        );
    }

    #[test]
    fn partition_of_unity_at_high_degree() {
        for p in [1usize, 7, 15, 30] {
            let one = poly(&[1.0]).elevate(p).unwrap();
            for i in 0..=6 {
                let t = i as f64 / 6.0;
                assert_relative_eq!(one.eval(t), 1.0, epsilon = 1e-12);
            }
        }
    }

    proptest! {
        #[test]
        fn multiply_matches_pointwise_product(
            a in proptest::collection::vec(-5.0f64..5.0, 1..=7),
            b in proptest::collection::vec(-5.0f64..5.0, 1..=7),
        ) {
            let pa = BernsteinPoly::new(a);
            let pb = BernsteinPoly::new(b);
            let pc = pa.multiply(&pb);
            for i in 0..=20 {
                let t = i as f64 / 20.0;
                let lhs = pc.eval(t);
                let rhs = pa.eval(t) * pb.eval(t);
                prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()));
            }
        }

        #[test]
        fn power_conversion_matches_horner(
            coeffs in proptest::collection::vec(-3.0f64..3.0, 1..=8),
            t in 0.0f64..1.0,
        ) {
            let bern = BernsteinPoly::from_power_coeffs(&coeffs);
            let horner = coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c);
            prop_assert!((bern.eval(t) - horner).abs() <= 1e-11 * (1.0 + horner.abs()));
        }
    }
}
