//! Continuous quadratic forms for polynomial curves.
//!
//! For a degree-m Bézier curve and implicit degree n, the composed residual
//! f_b(p(t)) is a degree-mn polynomial. Its coefficients in the degree-mn
//! Bernstein basis are linear in b, giving the collocation matrix D1 with
//! f_b(p(t)) = alpha(t)' D1 b, and the algebraic-distance form
//! A1 = D1' G D1 for G the Bernstein Gram matrix. The gradient-tangent inner
//! product factors the same way through D2, giving A2 = D2' G D2.

use crate::bernstein::{basis_values, BernsteinPoly, GramMatrix};
use crate::bezier::BezierCurve2;
use crate::error::{Error, Result};
use crate::implicit::MonomialBasis2;
use crate::matrix::DenseMatrix;
use crate::quadrature::GaussLegendre;
use crate::scalar::Scalar;

/// The assembled forms for one implicit degree.
///
/// Invariants (tested): A1 and A2 are symmetric positive semidefinite, and
/// for every coefficient vector b,
///   b' A1 b = integral of f_b(p(t))^2 over [0, 1],
///   b' A2 b = integral of (grad f_b(p(t)) . p'(t))^2 over [0, 1]
/// (sums over samples in the discrete case).
#[derive(Debug, Clone)]
pub struct QuadraticForms<T> {
    pub n: usize,
    pub d1: DenseMatrix<T>,
    pub d2: DenseMatrix<T>,
    pub a1: DenseMatrix<T>,
    pub a2: DenseMatrix<T>,
}

impl<T: Scalar> QuadraticForms<T> {
    /// A = A1 + lambda * A2, symmetrized.
    pub fn combined(&self, lambda: T) -> DenseMatrix<T> {
        let mut a = self.a1.add_scaled(lambda, &self.a2);
        a.symmetrize();
        a
    }
}

/// Powers of the coordinate polynomials up to exponent `n`, in Bernstein form.
fn coordinate_powers<T: Scalar>(
    curve: &BezierCurve2<T>,
    n: usize,
) -> (Vec<BernsteinPoly<T>>, Vec<BernsteinPoly<T>>) {
    let (px, py) = curve.coordinate_polys();
    let mut xs = Vec::with_capacity(n + 1);
    let mut ys = Vec::with_capacity(n + 1);
    xs.push(BernsteinPoly::constant(T::one(), 0));
    ys.push(BernsteinPoly::constant(T::one(), 0));
    for i in 1..=n {
        xs.push(xs[i - 1].multiply(&px));
        ys.push(ys[i - 1].multiply(&py));
    }
    (xs, ys)
}

/// Bernstein coefficients of p1(t)^a * p2(t)^b, elevated to `target_degree`.
pub fn compose_monomial<T: Scalar>(
    curve: &BezierCurve2<T>,
    a: usize,
    b: usize,
    target_degree: usize,
) -> Result<BernsteinPoly<T>> {
    let required = curve.degree() * (a + b);
    if target_degree < required {
        return Err(Error::ComposeDegree {
            required,
            target: target_degree,
        });
    }
    let (xs, ys) = coordinate_powers(curve, a.max(b));
    xs[a].multiply(&ys[b]).elevate(target_degree)
}

/// Collocation matrix of the algebraic distance: (mn+1) x k, column i holding
/// the Bernstein coefficients of phi_i(p(t)).
pub fn build_d1<T: Scalar>(curve: &BezierCurve2<T>, n: usize) -> Result<DenseMatrix<T>> {
    let basis = MonomialBasis2::new(n)?;
    let mn = curve.degree() * n;
    let (xs, ys) = coordinate_powers(curve, n);
    let mut d1 = DenseMatrix::zeros(mn + 1, basis.size());
    for (i, &(a, b)) in basis.exponents().iter().enumerate() {
        let col = xs[a].multiply(&ys[b]).elevate(mn)?;
        d1.set_column(i, col.coeffs());
    }
    Ok(d1)
}

/// Collocation matrix of the weak-gradient term: column i holds the Bernstein
/// coefficients (degree mn-1, elevated to mn) of
/// grad phi_i(p(t)) . p'(t) = a p1^{a-1} p2^b p1' + b p1^a p2^{b-1} p2'.
pub fn build_d2<T: Scalar>(curve: &BezierCurve2<T>, n: usize) -> Result<DenseMatrix<T>> {
    let basis = MonomialBasis2::new(n)?;
    let mn = curve.degree() * n;
    let (xs, ys) = coordinate_powers(curve, n);
    let (px, py) = curve.coordinate_polys();
    let dx = px.derivative()?;
    let dy = py.derivative()?;
    let mut d2 = DenseMatrix::zeros(mn + 1, basis.size());
    for (i, &(a, b)) in basis.exponents().iter().enumerate() {
        let mut col = BernsteinPoly::constant(T::zero(), 0);
        if a > 0 {
            let term = xs[a - 1]
                .multiply(&ys[b])
                .multiply(&dx)
                .scale(T::of_usize(a));
            col = col.add(&term);
        }
        if b > 0 {
            let term = xs[a]
                .multiply(&ys[b - 1])
                .multiply(&dy)
                .scale(T::of_usize(b));
            col = col.add(&term);
        }
        let col = col.elevate(mn)?;
        d2.set_column(i, col.coeffs());
    }
    Ok(d2)
}

/// Assemble A1 = D1' G D1 and A2 = D2' G D2 with G the degree-mn Gram matrix.
/// `lambda` is validated here; the combined matrix comes from
/// [`QuadraticForms::combined`]. Lambda zero reproduces the distance-only
/// baseline.
pub fn assemble<T: Scalar>(
    curve: &BezierCurve2<T>,
    n: usize,
    lambda: T,
) -> Result<QuadraticForms<T>> {
    if lambda < T::zero() {
        return Err(Error::NegativeLambda(lambda.to_f64().unwrap_or(f64::NAN)));
    }
    let d1 = build_d1(curve, n)?;
    let d2 = build_d2(curve, n)?;
    let mn = curve.degree() * n;
    let g = GramMatrix::new(mn);
    let sandwich = |d: &DenseMatrix<T>| {
        let mut a = d.transpose().matmul(g.matrix()).matmul(d);
        a.symmetrize();
        a
    };
    let a1 = sandwich(&d1);
    let a2 = sandwich(&d2);
    Ok(QuadraticForms { n, d1, d2, a1, a2 })
}

/// Square-root factors S1, S2 with S1'S1 = A1 and S2'S2 = A2 exactly:
/// S = W D where W is the Bernstein collocation at a Gauss–Legendre rule
/// scaled by the root weights, so W'W equals the Gram matrix on polynomials
/// of degree 2mn. The fitting path minimizes through these factors instead
/// of the normal matrices, which keeps tiny smallest eigenvalues resolvable.
pub fn sqrt_factors<T: Scalar>(
    curve: &BezierCurve2<T>,
    n: usize,
) -> Result<(DenseMatrix<T>, DenseMatrix<T>)> {
    let d1 = build_d1(curve, n)?;
    let d2 = build_d2(curve, n)?;
    let mn = curve.degree() * n;
    let rule = GaussLegendre::<T>::unit_interval(mn + 1);
    let mut w = DenseMatrix::zeros(rule.len(), mn + 1);
    for (q, (&t, &wt)) in rule.nodes().iter().zip(rule.weights()).enumerate() {
        let root = wt.sqrt();
        for (i, &b) in basis_values(mn, t).iter().enumerate() {
            w[(q, i)] = root * b;
        }
    }
    Ok((w.matmul(&d1), w.matmul(&d2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::squared_norm;
    use crate::point::Point2;
    use approx::assert_relative_eq;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn line() -> BezierCurve2<f64> {
        BezierCurve2::new(
            vec![Point2::new(0.0, 0.0), Point2::new(1.0, 1.0)],
            (0.0, 1.0),
        )
        .unwrap()
    }

    fn c1() -> BezierCurve2<f64> {
        BezierCurve2::new(
            vec![
                Point2::new(0.0, 0.0),
                Point2::new(2.0, 1.0),
                Point2::new(0.0, 2.0),
                Point2::new(1.0, 0.0),
            ],
            (0.0, 1.0),
        )
        .unwrap()
    }

    fn unit_vec(rng: &mut StdRng, k: usize) -> Vec<f64> {
        let v: Vec<f64> = (0..k).map(|_| rng.random_range(-1.0..1.0)).collect();
        let n = crate::matrix::norm2(&v);
        v.into_iter().map(|x| x / n).collect()
    }

    #[test]
    fn compose_monomial_on_diagonal_line() {
        let c = compose_monomial(&line(), 1, 1, 2).unwrap();
        assert_eq!(c.coeffs(), &[0.0, 0.0, 1.0]);
    }

    #[test]
    fn compose_monomial_constant_is_ones() {
        let c = compose_monomial(&c1(), 0, 0, 5).unwrap();
        assert_eq!(c.coeffs(), &[1.0; 6]);
    }

    #[test]
    fn compose_monomial_rejects_low_target() {
        assert!(matches!(
            compose_monomial(&c1(), 2, 1, 8),
            Err(Error::ComposeDegree {
                required: 9,
                target: 8
            })
        ));
    }

    #[test]
    fn compose_monomial_matches_pointwise() {
        let curve = c1();
        let composed = compose_monomial(&curve, 2, 1, 9).unwrap();
        for i in 0..10 {
            let t = i as f64 / 9.0;
            let p = curve.point(t);
            let expected = p.x * p.x * p.y;
            assert_relative_eq!(
                composed.eval(t),
                expected,
                max_relative = 1e-10,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn d1_line_columns_and_kernel() {
        let d1 = build_d1(&line(), 1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (2, 3));
        assert_eq!(d1.column(0), vec![1.0, 1.0]);
        assert_eq!(d1.column(1), vec![0.0, 1.0]);
        assert_eq!(d1.column(2), vec![0.0, 1.0]);
        // x - y vanishes on the line
        assert_eq!(d1.matvec(&[0.0, 1.0, -1.0]), vec![0.0, 0.0]);
    }

    #[test]
    fn d1_factorization_identity() {
        let curve = c1();
        let n = 3;
        let d1 = build_d1(&curve, n).unwrap();
        let basis = MonomialBasis2::new(n).unwrap();
        let mn = curve.degree() * n;
        let mut rng = StdRng::seed_from_u64(101);
        for _ in 0..20 {
            let b = unit_vec(&mut rng, basis.size());
            let col = BernsteinPoly::new(d1.matvec(&b));
            for i in 0..50 {
                let t = i as f64 / 49.0;
                let p = curve.point(t);
                let direct: f64 = basis
                    .exponents()
                    .iter()
                    .zip(&b)
                    .map(|(&(a, bb), &w)| w * p.x.powi(a as i32) * p.y.powi(bb as i32))
                    .sum();
                assert!(
                    (col.eval(t) - direct).abs() <= 1e-9,
                    "identity broken at t={t}: {} vs {direct}, mn={mn}",
                    col.eval(t)
                );
            }
        }
    }

    #[test]
    fn d2_constant_column_is_zero() {
        let d2 = build_d2(&c1(), 2).unwrap();
        assert!(d2.column(0).iter().all(|&v| v == 0.0));
    }

    #[test]
    fn d2_line_columns_and_kernel() {
        let d2 = build_d2(&line(), 1).unwrap();
        assert_eq!(d2.column(1), vec![1.0, 1.0]);
        assert_eq!(d2.column(2), vec![1.0, 1.0]);
        // gradient of x - y is orthogonal to the tangent of y = x
        assert_eq!(d2.matvec(&[0.0, 1.0, -1.0]), vec![0.0, 0.0]);
    }

    #[test]
    fn d2_factorization_identity() {
        let curve = c1();
        let n = 3;
        let d2 = build_d2(&curve, n).unwrap();
        let basis = MonomialBasis2::new(n).unwrap();
        let mut rng = StdRng::seed_from_u64(202);
        for _ in 0..20 {
            let b = unit_vec(&mut rng, basis.size());
            let col = BernsteinPoly::new(d2.matvec(&b));
            let implicit = crate::implicit::ImplicitCurve::new(n, b.clone()).unwrap();
            for i in 0..50 {
                let t = i as f64 / 49.0;
                let p = curve.point(t);
                let v = curve.velocity(t);
                let (gx, gy) = implicit.gradient(p.x, p.y);
                let direct = gx * v.x + gy * v.y;
                assert!(
                    (col.eval(t) - direct).abs() <= 1e-9,
                    "identity broken at t={t}"
                );
            }
        }
    }

    #[test]
    fn assemble_rejects_negative_lambda() {
        assert!(matches!(
            assemble(&line(), 1, -1.0),
            Err(Error::NegativeLambda(_))
        ));
    }

    #[test]
    fn line_exact_implicitization_in_kernel() {
        let forms = assemble(&line(), 1, 0.1).unwrap();
        let a = forms.combined(0.1);
        let s = 0.5f64.sqrt();
        let b = [0.0, s, -s];
        assert!(a.quad_form(&b).abs() <= 1e-15);
    }

    #[test]
    fn quadratic_forms_match_quadrature() {
        // b'A1b and b'A2b against a Gauss-Legendre quadrature of the
        // defining integrals, with the rule built independently of assembly.
        let curve = c1();
        let n = 2;
        let forms = assemble(&curve, n, 0.1).unwrap();
        let basis = MonomialBasis2::new(n).unwrap();
        let rule = GaussLegendre::<f64>::unit_interval(40);
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..10 {
            let b = unit_vec(&mut rng, basis.size());
            let implicit = crate::implicit::ImplicitCurve::new(n, b.clone()).unwrap();
            let i1 = rule.integrate(|t| {
                let p = curve.point(t);
                let f = implicit.eval(p.x, p.y);
                f * f
            });
            let i2 = rule.integrate(|t| {
                let p = curve.point(t);
                let v = curve.velocity(t);
                let (gx, gy) = implicit.gradient(p.x, p.y);
                let d = gx * v.x + gy * v.y;
                d * d
            });
            assert_relative_eq!(forms.a1.quad_form(&b), i1, max_relative = 1e-8);
            assert_relative_eq!(forms.a2.quad_form(&b), i2, max_relative = 1e-8);
        }
    }

    #[test]
    fn sqrt_factors_reproduce_forms() {
        let curve = c1();
        for n in [1usize, 2, 3] {
            let forms = assemble(&curve, n, 0.1).unwrap();
            let (s1, s2) = sqrt_factors(&curve, n).unwrap();
            let mut rng = StdRng::seed_from_u64(7 + n as u64);
            for _ in 0..5 {
                let b = unit_vec(&mut rng, forms.a1.cols());
                assert_relative_eq!(
                    squared_norm(&s1.matvec(&b)),
                    forms.a1.quad_form(&b),
                    max_relative = 1e-9,
                    epsilon = 1e-12
                );
                assert_relative_eq!(
                    squared_norm(&s2.matvec(&b)),
                    forms.a2.quad_form(&b),
                    max_relative = 1e-9,
                    epsilon = 1e-12
                );
            }
        }
    }
}
