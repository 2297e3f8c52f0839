//! Exact solutions of the Dirichlet problems via the Cole–Hopf transform.
//!
//! With `ν = 1/Re` the solution is the ratio of two Fourier series,
//!
//! ```text
//!           2πν Σₙ aₙ exp(−n²π²νt) n sin(nπx)
//! u(x, t) = ─────────────────────────────────
//!            a₀ + Σₙ aₙ exp(−n²π²νt) cos(nπx)
//! ```
//!
//! whose cosine coefficients come from the transformed initial condition
//! `exp(−(2ν)⁻¹ ∫₀ˣ u₀)`.

use std::f64::consts::PI;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::quadrature::{adaptive, AdaptiveOptions};

/// Times below this are refused; the series needs unboundedly many terms as t → 0.
pub const MIN_TIME: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IcFamily {
    /// `u₀ = sin(πx)`.
    SinPi,
    /// `u₀ = 4x(1 − x)`.
    Poly4x1mx,
}

impl IcFamily {
    pub fn initial_value(self, x: f64) -> f64 {
        match self {
            Self::SinPi => (PI * x).sin(),
            Self::Poly4x1mx => 4.0 * x * (1.0 - x),
        }
    }

    /// Heat-equation initial state before the cosine expansion.
    fn transformed(self, reynolds: f64, x: f64) -> f64 {
        match self {
            Self::SinPi => (-(reynolds / (2.0 * PI)) * (1.0 - (PI * x).cos())).exp(),
            Self::Poly4x1mx => (-x * x * (reynolds / 3.0) * (3.0 - 2.0 * x)).exp(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactSolutionSpec {
    pub reynolds: f64,
    pub ic_family: IcFamily,
    /// Absolute tolerance for each Fourier coefficient.
    pub quad_tol: f64,
    pub max_terms: usize,
    /// Relative size of a series term, against the denominator, below which
    /// summation stops.
    pub term_tol: f64,
}

impl ExactSolutionSpec {
    pub fn new(reynolds: f64, ic_family: IcFamily) -> Self {
        Self {
            reynolds,
            ic_family,
            quad_tol: 1e-12,
            max_terms: 400,
            term_tol: 1e-14,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = self.reynolds > 0.0
            && self.reynolds.is_finite()
            && self.quad_tol > 0.0
            && self.term_tol > 0.0
            && self.max_terms >= 1;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "invalid exact-solution spec {self:?}"
            )))
        }
    }
}

/// `a₀ = ∫ g`, `aₙ = 2 ∫ g cos(nπx)` for the transformed initial state `g`.
pub fn fourier_coefficient(spec: &ExactSolutionSpec, n: usize) -> Result<f64> {
    spec.validate()?;
    let family = spec.ic_family;
    let re = spec.reynolds;
    let k = n as f64 * PI;
    let opts = AdaptiveOptions {
        min_cells: (4 * n).max(8),
        tol: spec.quad_tol,
        ..AdaptiveOptions::default()
    };
    let integral = adaptive(
        |x| family.transformed(re, x) * (k * x).cos(),
        0.0,
        1.0,
        opts,
    )?;
    Ok(if n == 0 { integral } else { 2.0 * integral })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactValue {
    pub value: f64,
    /// Series terms summed (excluding `a₀`).
    pub terms: usize,
    /// False when `max_terms` was hit before the tail fell below tolerance.
    pub converged: bool,
}

/// Exact solution with memoized Fourier coefficients.
#[derive(Debug)]
pub struct ExactSolution {
    spec: ExactSolutionSpec,
    coefficients: RwLock<Vec<f64>>,
}

impl ExactSolution {
    pub fn new(spec: ExactSolutionSpec) -> Result<Self> {
        spec.validate()?;
        Ok(Self {
            spec,
            coefficients: RwLock::new(Vec::new()),
        })
    }

    pub fn spec(&self) -> &ExactSolutionSpec {
        &self.spec
    }

    pub fn coefficient(&self, n: usize) -> Result<f64> {
        if let Some(&a) = self.coefficients.read().unwrap().get(n) {
            return Ok(a);
        }
        let mut cache = self.coefficients.write().unwrap();
        while cache.len() <= n {
            let next = fourier_coefficient(&self.spec, cache.len())?;
            cache.push(next);
        }
        Ok(cache[n])
    }

    pub fn exact_u(&self, x: f64, t: f64) -> Result<ExactValue> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::Domain {
                what: "x",
                value: x,
                domain: "[0, 1]",
            });
        }
        if !(t >= MIN_TIME && t.is_finite()) {
            return Err(Error::Domain {
                what: "t",
                value: t,
                domain: "[1e-4, inf)",
            });
        }
        let nu = 1.0 / self.spec.reynolds;
        let mut num = 0.0;
        let mut den = self.coefficient(0)?;
        // Stop after a few consecutive negligible terms; a single small aₙ
        // may be an accidental zero.
        let mut quiet = 0;
        for n in 1..=self.spec.max_terms {
            let nf = n as f64;
            let weight = self.coefficient(n)? * (-nf * nf * PI * PI * nu * t).exp();
            num += weight * nf * (nf * PI * x).sin();
            den += weight * (nf * PI * x).cos();
            let bound = weight.abs() * (2.0 * PI * nu * nf).max(1.0);
            if bound <= self.spec.term_tol * den.abs() {
                quiet += 1;
                if quiet == 3 {
                    return Ok(ExactValue {
                        value: 2.0 * PI * nu * num / den,
                        terms: n,
                        converged: true,
                    });
                }
            } else {
                quiet = 0;
            }
        }
        Ok(ExactValue {
            value: 2.0 * PI * nu * num / den,
            terms: self.spec.max_terms,
            converged: false,
        })
    }

    /// `out[i][j] = u(xs[j], times[i])`.
    pub fn table_values(&self, times: &[f64], xs: &[f64]) -> Result<Vec<Vec<f64>>> {
        times
            .iter()
            .map(|&t| xs.iter().map(|&x| Ok(self.exact_u(x, t)?.value)).collect())
            .collect()
    }
}
