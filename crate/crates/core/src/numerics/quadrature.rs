//! Adaptive tensor-product Gauss–Legendre quadrature over the unit square.

use alloc::collections::BinaryHeap;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use num_traits::{Signed, ToPrimitive};

use crate::arith::BigRat;
use crate::error::{Error, Result};

/// Nodes and weights of the `m`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    for i in 0..m {
        let mut x = libm::cos(PI * (i as f64 + 0.75) / (m as f64 + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence for P_m and its derivative.
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=m {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes.push(x);
        weights.push(2.0 / ((1.0 - x * x) * dp * dp));
    }
    (nodes, weights)
}

struct Cell {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    fine: f64,
    err: f64,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Cell {}
impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.partial_cmp(&other.err).unwrap_or(Ordering::Equal)
    }
}

struct Rule<'a, F: Fn(f64, f64) -> f64> {
    f: &'a F,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl<F: Fn(f64, f64) -> f64> Rule<'_, F> {
    fn tensor(&self, x0: f64, x1: f64, y0: f64, y1: f64) -> f64 {
        let (hx, hy) = (0.5 * (x1 - x0), 0.5 * (y1 - y0));
        let (cx, cy) = (0.5 * (x1 + x0), 0.5 * (y1 + y0));
        let mut acc = 0.0;
        for (xi, wi) in self.nodes.iter().zip(&self.weights) {
            let x = cx + hx * xi;
            let mut row = 0.0;
            for (yj, wj) in self.nodes.iter().zip(&self.weights) {
                row += wj * (self.f)(x, cy + hy * yj);
            }
            acc += wi * row;
        }
        acc * hx * hy
    }

    fn cell(&self, x0: f64, x1: f64, y0: f64, y1: f64) -> Cell {
        let coarse = self.tensor(x0, x1, y0, y1);
        let (xm, ym) = (0.5 * (x0 + x1), 0.5 * (y0 + y1));
        let fine = self.tensor(x0, xm, y0, ym)
            + self.tensor(xm, x1, y0, ym)
            + self.tensor(x0, xm, ym, y1)
            + self.tensor(xm, x1, ym, y1);
        Cell {
            x0,
            x1,
            y0,
            y1,
            fine,
            err: (fine - coarse).abs(),
        }
    }
}

/// Integrates `f` over `[0,1]²`, bisecting the cell with the largest error
/// estimate until the summed estimate falls below `tol`.
pub fn adaptive_square<F: Fn(f64, f64) -> f64>(f: &F, tol: f64, max_cells: usize) -> Result<f64> {
    let (nodes, weights) = gauss_legendre(10);
    let rule = Rule { f, nodes, weights };
    let mut heap = BinaryHeap::new();
    heap.push(rule.cell(0.0, 1.0, 0.0, 1.0));
    loop {
        let total_err: f64 = heap.iter().map(|c| c.err).sum();
        if total_err < tol {
            break;
        }
        if heap.len() > max_cells {
            return Err(Error::Divergent(format!(
                "quadrature stalled at error {total_err:e}"
            )));
        }
        let c = heap.pop().expect("nonempty");
        let (xm, ym) = (0.5 * (c.x0 + c.x1), 0.5 * (c.y0 + c.y1));
        heap.push(rule.cell(c.x0, xm, c.y0, ym));
        heap.push(rule.cell(xm, c.x1, c.y0, ym));
        heap.push(rule.cell(c.x0, xm, ym, c.y1));
        heap.push(rule.cell(xm, c.x1, ym, c.y1));
    }
    // Sum small contributions first.
    let mut parts: Vec<f64> = heap.iter().map(|c| c.fine).collect();
    parts.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap_or(Ordering::Equal));
    Ok(parts.iter().sum())
}

fn powi(x: f64, e: usize) -> f64 {
    (0..e).fold(1.0, |acc, _| acc * x)
}

/// `∬_{[0,1]²} x^n (1-x)^n y^n (1-y)^n / (1 - x + z x y)^{n+1} dx dy` for
/// `0 < z ≤ 1`, to an absolute accuracy of `10^-digits` (`digits ≤ 12`).
pub fn double_integral(n: usize, z: &BigRat, digits: u32) -> Result<f64> {
    let zero = BigRat::from_integer(0.into());
    if z <= &zero || z.abs() > BigRat::from_integer(1.into()) {
        return Err(Error::Domain(format!("double integral needs 0 < z ≤ 1, got {z}")));
    }
    let zf = z.to_f64().unwrap_or(1.0);
    let f = move |x: f64, y: f64| {
        let num = powi(x * (1.0 - x) * y * (1.0 - y), n);
        num / powi(1.0 - x + zf * x * y, n + 1)
    };
    let tol = libm::pow(10.0, -(digits.clamp(1, 12) as f64));
    adaptive_square(&f, tol, 400_000)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_rule_integrates_polynomials() {
        let (x, w) = gauss_legendre(6);
        let s: f64 = w.iter().sum();
        assert!((s - 2.0).abs() < 1e-14);
        let m10: f64 = x.iter().zip(&w).map(|(x, w)| w * powi(*x, 10)).sum();
        assert!((m10 - 2.0 / 11.0).abs() < 1e-14);
    }

    #[test]
    fn smooth_integrand_on_square() {
        let v = adaptive_square(&|x: f64, y: f64| libm::exp(x + y), 1e-12, 10_000).unwrap();
        let e1 = core::f64::consts::E - 1.0;
        assert!((v - e1 * e1).abs() < 1e-11);
    }

    #[test]
    fn rejects_points_outside_interval() {
        assert!(double_integral(0, &BigRat::new((-1).into(), 2.into()), 6).is_err());
        assert!(double_integral(0, &BigRat::from_integer(0.into()), 6).is_err());
    }
}
