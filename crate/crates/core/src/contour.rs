//! Marching-squares extraction of the zero set of an implicit curve,
//! for rendering and geometric verification.

use crate::error::{Error, Result};
use crate::implicit::ImplicitCurve;
use crate::point::Point2;
use crate::scalar::Scalar;

/// Line segments approximating the zero set on a grid. Every segment
/// endpoint lies on a grid-cell edge where the function changes sign, at the
/// linearly interpolated root on that edge.
#[derive(Debug, Clone)]
pub struct ContourMesh<T> {
    pub resolution: usize,
    pub bbox: (Point2<T>, Point2<T>),
    pub segments: Vec<(Point2<T>, Point2<T>)>,
}

/// Standard 16-case cell classification with linear edge interpolation;
/// the two ambiguous saddle cases are resolved by the sign of the function
/// at the cell center.
pub fn marching_squares<T: Scalar>(
    curve: &ImplicitCurve<T>,
    bbox: (Point2<T>, Point2<T>),
    resolution: usize,
) -> Result<ContourMesh<T>> {
    if resolution < 2 {
        return Err(Error::InvalidContour(format!(
            "resolution must be at least 2 (got {resolution})"
        )));
    }
    let (lo, hi) = bbox;
    if !lo.is_finite() || !hi.is_finite() || lo.x >= hi.x || lo.y >= hi.y {
        return Err(Error::InvalidContour("degenerate bounding box".into()));
    }
    let res = resolution;
    let dx = (hi.x - lo.x) / T::of_usize(res);
    let dy = (hi.y - lo.y) / T::of_usize(res);
    // grid of function values, row-major, (res+1)^2 nodes
    let mut values = Vec::with_capacity((res + 1) * (res + 1));
    for j in 0..=res {
        let y = lo.y + dy * T::of_usize(j);
        for i in 0..=res {
            let x = lo.x + dx * T::of_usize(i);
            values.push(curve.eval(x, y));
        }
    }
    let value = |i: usize, j: usize| values[j * (res + 1) + i];
    let inside = |f: T| f >= T::zero();

    let mut segments = Vec::new();
    for j in 0..res {
        for i in 0..res {
            let x0 = lo.x + dx * T::of_usize(i);
            let y0 = lo.y + dy * T::of_usize(j);
            let x1 = x0 + dx;
            let y1 = y0 + dy;
            // corners: 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left
            let f = [
                value(i, j),
                value(i + 1, j),
                value(i + 1, j + 1),
                value(i, j + 1),
            ];
            let code = (inside(f[0]) as usize)
                | (inside(f[1]) as usize) << 1
                | (inside(f[2]) as usize) << 2
                | (inside(f[3]) as usize) << 3;
            if code == 0 || code == 15 {
                continue;
            }
            let lerp = |a: T, b: T, fa: T, fb: T| a + (b - a) * (fa / (fa - fb));
            // crossing points on the four edges (indexed bottom, right, top, left)
            let bottom = || Point2::new(lerp(x0, x1, f[0], f[1]), y0);
            let right = || Point2::new(x1, lerp(y0, y1, f[1], f[2]));
            let top = || Point2::new(lerp(x0, x1, f[3], f[2]), y1);
            let left = || Point2::new(x0, lerp(y0, y1, f[0], f[3]));
            match code {
                1 | 14 => segments.push((left(), bottom())),
                2 | 13 => segments.push((bottom(), right())),
                3 | 12 => segments.push((left(), right())),
                4 | 11 => segments.push((right(), top())),
                6 | 9 => segments.push((bottom(), top())),
                7 | 8 => segments.push((top(), left())),
                5 | 10 => {
                    // saddle: connect according to the center sign
                    let cx = (x0 + x1) * T::half();
                    let cy = (y0 + y1) * T::half();
                    let center_in = inside(curve.eval(cx, cy));
                    let joins_first = (code == 5) == center_in;
                    if joins_first {
                        segments.push((left(), top()));
                        segments.push((bottom(), right()));
                    } else {
                        segments.push((left(), bottom()));
                        segments.push((right(), top()));
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    Ok(ContourMesh {
        resolution,
        bbox,
        segments,
    })
}

impl<T: Scalar> ContourMesh<T> {
    /// Chain shared endpoints into polylines, one per connected component.
    /// Matching is by coordinates quantized to a fraction of the cell size.
    pub fn polylines(&self) -> Vec<Vec<Point2<T>>> {
        use std::collections::HashMap;
        let (lo, hi) = self.bbox;
        let cell = ((hi.x - lo.x) + (hi.y - lo.y)) / T::of_usize(2 * self.resolution);
        let quantum = cell * T::of_f64(1e-6);
        let key = |p: Point2<T>| -> (i64, i64) {
            (
                ((p.x - lo.x) / quantum).round().to_i64().unwrap_or(0),
                ((p.y - lo.y) / quantum).round().to_i64().unwrap_or(0),
            )
        };
        let mut adjacency: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (idx, (a, b)) in self.segments.iter().enumerate() {
            adjacency.entry(key(*a)).or_default().push(idx);
            adjacency.entry(key(*b)).or_default().push(idx);
        }
        let mut used = vec![false; self.segments.len()];
        let mut chains = Vec::new();
        for start in 0..self.segments.len() {
            if used[start] {
                continue;
            }
            used[start] = true;
            let (a, b) = self.segments[start];
            let mut chain = vec![a, b];
            // extend forward from the tail, then backward from the head
            for _ in 0..2 {
                loop {
                    let tail = *chain.last().expect("chain never empty");
                    let Some(candidates) = adjacency.get(&key(tail)) else {
                        break;
                    };
                    let next = candidates.iter().copied().find(|&s| !used[s]);
                    let Some(seg) = next else { break };
                    used[seg] = true;
                    let (p, q) = self.segments[seg];
                    chain.push(if key(p) == key(tail) { q } else { p });
                }
                chain.reverse();
            }
            chains.push(chain);
        }
        chains
    }
}
