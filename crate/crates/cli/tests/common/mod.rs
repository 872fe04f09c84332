// not every test target uses every oracle
#![allow(dead_code)]

//! Oracles for the acceptance suite, independent of the library paths they
//! check: Romberg integration in place of the library's Gauss-Legendre and
//! closed forms, direct monomial summation in place of the implicit
//! evaluators, and a hand-rolled XML well-formedness scanner.

use implicitize_core::{BezierCurve2, MonomialBasis2, Point2};

pub fn romberg<F: Fn(f64) -> f64>(f: F, rel_tol: f64) -> f64 {
    const MAX_LEVELS: usize = 16;
    let mut table = [[0.0f64; MAX_LEVELS]; MAX_LEVELS];
    let mut h = 1.0;
    table[0][0] = 0.5 * (f(0.0) + f(1.0));
    for k in 1..MAX_LEVELS {
        h *= 0.5;
        let panels = 1usize << k;
        let mut sum = 0.0;
        let mut i = 1;
        while i < panels {
            sum += f(i as f64 * h);
            i += 2;
        }
        table[k][0] = 0.5 * table[k - 1][0] + h * sum;
        let mut factor = 1.0;
        for j in 1..=k {
            factor *= 4.0;
            table[k][j] =
                table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1.0);
        }
        if k > 3
            && (table[k][k] - table[k - 1][k - 1]).abs() <= rel_tol * table[k][k].abs().max(1e-300)
        {
            return table[k][k];
        }
    }
    table[MAX_LEVELS - 1][MAX_LEVELS - 1]
}

pub fn eval_poly(basis: &MonomialBasis2, coeffs: &[f64], x: f64, y: f64) -> f64 {
    basis
        .exponents()
        .iter()
        .zip(coeffs)
        .map(|(&(a, b), &c)| c * x.powi(a as i32) * y.powi(b as i32))
        .sum()
}

pub fn grad_poly(basis: &MonomialBasis2, coeffs: &[f64], x: f64, y: f64) -> (f64, f64) {
    let mut gx = 0.0;
    let mut gy = 0.0;
    for (&(a, b), &c) in basis.exponents().iter().zip(coeffs) {
        if a > 0 {
            gx += c * a as f64 * x.powi(a as i32 - 1) * y.powi(b as i32);
        }
        if b > 0 {
            gy += c * b as f64 * x.powi(a as i32) * y.powi(b as i32 - 1);
        }
    }
    (gx, gy)
}

pub fn unit_vector(rng: &mut impl rand::Rng, k: usize) -> Vec<f64> {
    let v: Vec<f64> = (0..k).map(|_| rng.random_range(-1.0..1.0)).collect();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.into_iter().map(|x| x / norm).collect()
}

pub fn curve_c1() -> BezierCurve2<f64> {
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

pub fn curve_c2() -> BezierCurve2<f64> {
    BezierCurve2::new(
        vec![
            Point2::new(1.0, 5.0),
            Point2::new(-3.0, -15.0),
            Point2::new(2.0, 20.0),
            Point2::new(11.0, -5.0),
            Point2::new(1.0, 5.0),
        ],
        (0.0, 1.0),
    )
    .unwrap()
}

/// Exact cardioid quartic (x^2 + y^2 - 2x)^2 - 4(x^2 + y^2) in graded-lex
/// order, from eliminating the parameter via r = 2 + 2 cos(theta).
pub fn cardioid_quartic() -> Vec<f64> {
    let basis = MonomialBasis2::new(4).unwrap();
    let mut coeffs = vec![0.0; basis.size()];
    let terms = [
        ((0usize, 2usize), -4.0),
        ((3, 0), -4.0),
        ((1, 2), -4.0),
        ((4, 0), 1.0),
        ((2, 2), 2.0),
        ((0, 4), 1.0),
    ];
    for (exp, value) in terms {
        let idx = basis
            .exponents()
            .iter()
            .position(|&e| e == exp)
            .expect("exponent in basis");
        coeffs[idx] = value;
    }
    coeffs
}

pub fn cosine_similarity(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    dot / (na * nb)
}

/// Minimal XML well-formedness scan: matched tag stack, quoted attribute
/// values, declarations and self-closing tags allowed.
pub fn xml_is_well_formed(text: &str) -> bool {
    let mut stack: Vec<String> = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut saw_element = false;
    while i < bytes.len() {
        if bytes[i] != b'<' {
            i += 1;
            continue;
        }
        let Some(end) = text[i..].find('>').map(|e| i + e) else {
            return false;
        };
        let tag = &text[i + 1..end];
        if let Some(rest) = tag.strip_prefix('?') {
            if !rest.ends_with('?') {
                return false;
            }
        } else if let Some(name) = tag.strip_prefix('/') {
            match stack.pop() {
                Some(open) if open == name.trim() => {}
                _ => return false,
            }
        } else {
            let self_closing = tag.ends_with('/');
            let body = tag.trim_end_matches('/');
            // attribute quotes must balance
            if body.bytes().filter(|&b| b == b'"').count() % 2 != 0 {
                return false;
            }
            let name = body.split_whitespace().next().unwrap_or("");
            if name.is_empty() {
                return false;
            }
            saw_element = true;
            if !self_closing {
                stack.push(name.to_string());
            }
        }
        i = end + 1;
    }
    stack.is_empty() && saw_element
}
