//! Gauss–Legendre rules: fixed, composite over cells, and adaptive bisection.

use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;

use crate::error::{Error, Result};

/// Gauss–Legendre rule on `[-1, 1]`, exact for polynomials of degree `2n - 1`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pairs: Vec<(f64, f64)>,
}

impl GaussRule {
    pub fn new(points: usize) -> Self {
        let degree = NonZeroUsize::new(points).expect("at least one Gauss point");
        let rule = GaussLegendre::new(degree);
        Self {
            pairs: rule.as_node_weight_pairs().to_vec(),
        }
    }

    pub fn points(&self) -> usize {
        self.pairs.len()
    }

    /// Nodes mapped to `[a, b]` with correspondingly scaled weights.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.pairs
            .iter()
            .map(move |&(x, w)| (mid + half * x, half * w))
    }

    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.mapped(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

/// Sum of the rule applied on each `[cells[i], cells[i + 1]]`.
pub fn composite(rule: &GaussRule, edges: &[f64], mut f: impl FnMut(f64) -> f64) -> f64 {
    edges
        .windows(2)
        .map(|c| rule.integrate(c[0], c[1], &mut f))
        .sum()
}

#[derive(Debug, Clone, Copy)]
pub struct AdaptiveOptions {
    /// Uniform cells to start from before any bisection.
    pub min_cells: usize,
    /// Absolute tolerance on the whole interval.
    pub tol: f64,
    /// Maximum bisection depth below an initial cell.
    pub max_depth: u32,
    pub points: usize,
}

impl Default for AdaptiveOptions {
    fn default() -> Self {
        Self {
            min_cells: 8,
            tol: 1e-12,
            max_depth: 30,
            points: 10,
        }
    }
}

/// Composite Gauss with local bisection until each cell's estimate and its
/// two-half refinement agree to the cell's share of `tol`.
pub fn adaptive(f: impl Fn(f64) -> f64, a: f64, b: f64, opts: AdaptiveOptions) -> Result<f64> {
    let rule = GaussRule::new(opts.points);
    let n = opts.min_cells.max(1);
    let h = (b - a) / n as f64;
    let density = opts.tol / (b - a);
    let mut total = 0.0;
    for i in 0..n {
        let lo = a + i as f64 * h;
        let hi = if i + 1 == n { b } else { lo + h };
        let whole = rule.integrate(lo, hi, &f);
        total += refine(&rule, &f, lo, hi, whole, density, opts.max_depth).map_err(|estimate| {
            Error::Quadrature {
                a,
                b,
                tol: opts.tol,
                estimate,
            }
        })?;
    }
    Ok(total)
}

fn refine(
    rule: &GaussRule,
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    whole: f64,
    density: f64,
    depth: u32,
) -> std::result::Result<f64, f64> {
    let m = 0.5 * (a + b);
    let left = rule.integrate(a, m, f);
    let right = rule.integrate(m, b, f);
    let err = (left + right - whole).abs();
    if err <= density * (b - a) {
        return Ok(left + right);
    }
    if depth == 0 || !err.is_finite() {
        return Err(err);
    }
    Ok(refine(rule, f, a, m, left, density, depth - 1)?
        + refine(rule, f, m, b, right, density, depth - 1)?)
}
