//! Gauss–Legendre rules on [0, 1], used to factor the continuous quadratic
//! forms: with Q nodes the rule integrates polynomials up to degree 2Q - 1
//! exactly, so the weighted collocation factor reproduces the Gram-matrix
//! products without forming them.

use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Scalar> GaussLegendre<T> {
    /// Rule with `n` nodes on [0, 1].
    ///
    /// Nodes come from Newton iteration on P_n with the usual Chebyshev
    /// starting guesses; weights from the derivative formula.
    pub fn unit_interval(n: usize) -> Self {
        assert!(n >= 1, "need at least one node");
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let pi = T::of_f64(std::f64::consts::PI);
        let nf = T::of_usize(n);
        for i in 0..n {
            // initial guess on [-1, 1]
            let mut x = (pi * (T::of_usize(i) + T::of_f64(0.75)) / (nf + T::half())).cos();
            // Newton on P_n(x)
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() <= T::epsilon() * (T::one() + x.abs()) {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            let w = T::two() / ((T::one() - x * x) * dp * dp);
            // map [-1, 1] -> [0, 1]
            nodes.push((x + T::one()) * T::half());
            weights.push(w * T::half());
        }
        nodes.reverse();
        weights.reverse();
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: Fn(T) -> T>(&self, f: F) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&t, &w)| acc + w * f(t))
    }
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_with_derivative<T: Scalar>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    if n == 0 {
        return (p0, T::zero());
    }
    for k in 2..=n {
        let kf = T::of_usize(k);
        let p2 = ((T::two() * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = T::of_usize(n) * (x * p1 - p0) / (x * x - T::one());
    (p1, dp)
}
