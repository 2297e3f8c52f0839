//! Time stepping for `u_t + u u_x = u_xx / Re` on `[0, 1]`.
//!
//! Diffusion is θ-weighted (Crank–Nicolson at θ = 1/2) and the convective
//! product is lagged at the old time level, so every step solves the same
//! linear system
//!
//! ```text
//! Cₙ₊₁ᵀ[Ψ − θ (Δt/Re) OD²Ψ](x_j) = uⁿ + (1−θ)(Δt/Re) uⁿ_xx − Δt uⁿ uⁿ_x
//! ```
//!
//! at the interior collocation points, closed by boundary rows. The matrix is
//! assembled and factored once per run. [`Diffusion::Weak`] swaps `OD²` for
//! the integration-by-parts operator.

use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};

use crate::approx::{basis_rows, collocation_points, CoeffVector};
use crate::basis::{basis_vector, BasisSpec};
use crate::error::{Error, Result};
use crate::linalg::DenseLu;
use crate::operators::{second_derivative_matrix, DerivOperator, Operators};

pub const DEFAULT_DT: f64 = 1e-3;
pub const DEFAULT_THETA: f64 = 0.5;

/// Relative bound on `‖A C − b‖∞ / ‖b‖∞` after each solve.
pub const STEP_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    Dirichlet,
    Neumann,
}

/// Prescribed `u` (Dirichlet) or `u_x` (Neumann) at `x = 0` and `x = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySpec {
    pub kind: BoundaryKind,
    pub left_value: f64,
    pub right_value: f64,
}

impl BoundarySpec {
    pub fn homogeneous_dirichlet() -> Self {
        Self {
            kind: BoundaryKind::Dirichlet,
            left_value: 0.0,
            right_value: 0.0,
        }
    }

    pub fn homogeneous_neumann() -> Self {
        Self {
            kind: BoundaryKind::Neumann,
            left_value: 0.0,
            right_value: 0.0,
        }
    }
}

/// Discretization of `u_xx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Diffusion {
    /// `OD²`, two successive L² projections of the derivative.
    #[default]
    Projected,
    /// Integration by parts, see [`Operators::weak_second_derivative`].
    Weak,
}

pub type InitialCondition = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
pub struct SolverConfig {
    pub reynolds: f64,
    pub dt: f64,
    pub theta: f64,
    pub t_end: f64,
    pub bc: BoundarySpec,
    pub ic: InitialCondition,
    pub spec: BasisSpec,
    pub diffusion: Diffusion,
    /// Times at which coefficients are kept; empty keeps every step.
    pub record_times: Vec<f64>,
}

impl fmt::Debug for SolverConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SolverConfig")
            .field("reynolds", &self.reynolds)
            .field("dt", &self.dt)
            .field("theta", &self.theta)
            .field("t_end", &self.t_end)
            .field("bc", &self.bc)
            .field("diffusion", &self.diffusion)
            .field("n_points", &self.spec.n_functions())
            .field("record_times", &self.record_times)
            .finish_non_exhaustive()
    }
}

impl SolverConfig {
    pub fn new(
        spec: BasisSpec,
        reynolds: f64,
        bc: BoundarySpec,
        ic: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            reynolds,
            dt: DEFAULT_DT,
            theta: DEFAULT_THETA,
            t_end: 0.0,
            bc,
            ic: Arc::new(ic),
            spec,
            diffusion: Diffusion::default(),
            record_times: Vec::new(),
        }
    }

    pub fn with_t_end(mut self, t_end: f64) -> Self {
        self.t_end = t_end;
        self
    }

    pub fn with_dt(mut self, dt: f64) -> Self {
        self.dt = dt;
        self
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta = theta;
        self
    }

    pub fn with_diffusion(mut self, diffusion: Diffusion) -> Self {
        self.diffusion = diffusion;
        self
    }

    pub fn with_record_times(mut self, times: Vec<f64>) -> Self {
        self.record_times = times;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if !(self.reynolds > 0.0 && self.reynolds.is_finite()) {
            return bad(format!(
                "Reynolds number must be positive, got {}",
                self.reynolds
            ));
        }
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return bad(format!("time step must be positive, got {}", self.dt));
        }
        if !(0.0..=1.0).contains(&self.theta) {
            return bad(format!("theta must lie in [0, 1], got {}", self.theta));
        }
        if !(self.t_end >= 0.0 && self.t_end.is_finite()) {
            return bad(format!("end time must be non-negative, got {}", self.t_end));
        }
        if let Some(t) = self
            .record_times
            .iter()
            .find(|&&t| !(0.0..=self.t_end + 0.5 * self.dt).contains(&t))
        {
            return bad(format!("record time {t} lies outside [0, {}]", self.t_end));
        }
        Ok(())
    }

    /// `⌈t_end / Δt⌉`, tolerant of rounding in the quotient.
    pub fn n_steps(&self) -> usize {
        let q = self.t_end / self.dt;
        let r = q.round();
        if (q - r).abs() <= 1e-9 * r.max(1.0) {
            r as usize
        } else {
            q.ceil() as usize
        }
    }

    /// Step index nearest to `t`.
    pub fn step_of(&self, t: f64) -> usize {
        (t / self.dt).round() as usize
    }
}

/// Interior collocation points `x_j = (j − 1)/(N_p − 1)`, `j = 2..N_p−1`,
/// plus the endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct CollocationGrid {
    pub interior: Vec<f64>,
    pub a: f64,
    pub b: f64,
}

impl CollocationGrid {
    pub fn new(spec: &BasisSpec) -> Self {
        let all = collocation_points(spec);
        Self {
            interior: all[1..all.len() - 1].to_vec(),
            a: 0.0,
            b: 1.0,
        }
    }

    pub fn spacing(&self) -> f64 {
        1.0 / (self.interior.len() + 1) as f64
    }

    pub fn all_points(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.interior.len() + 2);
        v.push(self.a);
        v.extend_from_slice(&self.interior);
        v.push(self.b);
        v
    }
}

/// Coefficients recorded at increasing times.
#[derive(Debug, Clone)]
pub struct SolutionSeries {
    pub times: Vec<f64>,
    pub coeffs: Vec<CoeffVector>,
    pub config: SolverConfig,
}

impl SolutionSeries {
    /// Index of the stored time nearest `t`.
    pub fn nearest(&self, t: f64) -> Result<usize> {
        let start = self.times[0];
        let end = *self.times.last().unwrap();
        let slack = 0.5 * self.config.dt;
        if !(t >= start - slack && t <= end + slack) {
            return Err(Error::Range {
                time: t,
                start,
                end,
            });
        }
        let i = self.times.partition_point(|&s| s < t);
        let best = [i.saturating_sub(1), i.min(self.times.len() - 1)]
            .into_iter()
            .min_by(|&a, &b| {
                (self.times[a] - t)
                    .abs()
                    .total_cmp(&(self.times[b] - t).abs())
            })
            .unwrap();
        Ok(best)
    }

    pub fn coeffs_at(&self, t: f64) -> Result<&CoeffVector> {
        Ok(&self.coeffs[self.nearest(t)?])
    }
}

/// Pre-evaluated collocation rows and the factored step matrix.
#[derive(Debug, Clone)]
pub struct CollocationSystem {
    /// Rows `Ψ(x_j)ᵀ` over all collocation points.
    psi: DMatrix<f64>,
    /// Rows `(OD Ψ(x_j))ᵀ`, so that `d1 · C = u_x(x_j)`.
    d1: DMatrix<f64>,
    /// Rows `(L Ψ(x_j))ᵀ` for the second-derivative operator `L`.
    d2: DMatrix<f64>,
    lhs: DMatrix<f64>,
    lu: DenseLu,
    dt: f64,
    theta: f64,
    reynolds: f64,
    bc: BoundarySpec,
}

impl CollocationSystem {
    /// Step system with `u_xx` from `OD²`, whatever `config.diffusion` says.
    pub fn new(config: &SolverConfig, od: &DerivOperator) -> Result<Self> {
        Self::with_second_derivative(config, od, &second_derivative_matrix(od))
    }

    /// Step system using the operator selected by `config.diffusion`.
    pub fn from_operators(config: &SolverConfig, ops: &Operators) -> Result<Self> {
        match config.diffusion {
            Diffusion::Projected => Self::with_second_derivative(config, &ops.od, &ops.od2),
            Diffusion::Weak => {
                Self::with_second_derivative(config, &ops.od, &ops.weak_second_derivative()?)
            }
        }
    }

    pub fn with_second_derivative(
        config: &SolverConfig,
        od: &DerivOperator,
        second: &DerivOperator,
    ) -> Result<Self> {
        config.validate()?;
        let spec = &config.spec;
        let n = spec.n_functions();
        if od.matrix().nrows() != n || second.matrix().nrows() != n {
            return Err(Error::InvalidArgument(format!(
                "derivative operator of size {} does not match basis of {n} functions",
                od.matrix().nrows()
            )));
        }
        let xs = collocation_points(spec);
        let psi = basis_rows(spec, &xs)?;
        let d1 = &psi * od.matrix().transpose();
        let d2 = &psi * second.matrix().transpose();

        let nu_dt = config.dt / config.reynolds;
        let mut lhs = &psi - &d2 * (config.theta * nu_dt);
        let boundary = match config.bc.kind {
            BoundaryKind::Dirichlet => &psi,
            BoundaryKind::Neumann => &d1,
        };
        lhs.row_mut(0).copy_from(&boundary.row(0));
        lhs.row_mut(n - 1).copy_from(&boundary.row(n - 1));
        let lu = DenseLu::factor(&lhs, "collocation step matrix")?;
        Ok(Self {
            psi,
            d1,
            d2,
            lhs,
            lu,
            dt: config.dt,
            theta: config.theta,
            reynolds: config.reynolds,
            bc: config.bc,
        })
    }

    pub fn lhs(&self) -> &DMatrix<f64> {
        &self.lhs
    }

    pub fn condition(&self) -> f64 {
        self.lu.condition()
    }

    /// `u`, `u_x` and `u_xx` at every collocation point.
    pub fn grid_values(&self, c: &CoeffVector) -> (DVector<f64>, DVector<f64>, DVector<f64>) {
        (
            &self.psi * c.values(),
            &self.d1 * c.values(),
            &self.d2 * c.values(),
        )
    }

    pub fn build_rhs(&self, c: &CoeffVector) -> DVector<f64> {
        let (u, ux, uxx) = self.grid_values(c);
        let n = u.len();
        let explicit = (1.0 - self.theta) * self.dt / self.reynolds;
        let mut b = DVector::from_fn(n, |j, _| u[j] + explicit * uxx[j] - self.dt * u[j] * ux[j]);
        b[0] = self.bc.left_value;
        b[n - 1] = self.bc.right_value;
        b
    }

    /// Solves for the next coefficients; `step_index` labels diagnostics.
    pub fn step(&self, c: &CoeffVector, step_index: usize) -> Result<CoeffVector> {
        let b = self.build_rhs(c);
        let next = self.lu.solve(&b);
        if !next.iter().all(|v| v.is_finite()) {
            return Err(Error::Divergence {
                step: step_index + 1,
                time: (step_index + 1) as f64 * self.dt,
            });
        }
        Ok(CoeffVector::from_dvector(next))
    }

    /// `‖A C − b‖∞`.
    pub fn residual(&self, c: &CoeffVector, b: &DVector<f64>) -> f64 {
        (&self.lhs * c.values() - b).amax()
    }

    /// Initial coefficients: interpolate the initial condition at the interior
    /// points and impose the boundary rows.
    pub fn initial_coeffs(&self, ic: &dyn Fn(f64) -> f64, spec: &BasisSpec) -> Result<CoeffVector> {
        let xs = collocation_points(spec);
        let n = xs.len();
        let mut rows = self.psi.clone();
        rows.row_mut(0).copy_from(&self.lhs.row(0));
        rows.row_mut(n - 1).copy_from(&self.lhs.row(n - 1));
        let mut rhs = DVector::zeros(n);
        for j in 1..n - 1 {
            let v = ic(xs[j]);
            if !v.is_finite() {
                return Err(Error::Input(format!(
                    "initial condition at {} is {v}",
                    xs[j]
                )));
            }
            rhs[j] = v;
        }
        rhs[0] = self.bc.left_value;
        rhs[n - 1] = self.bc.right_value;
        let lu = DenseLu::factor(&rows, "initial collocation matrix")?;
        Ok(CoeffVector::from_dvector(lu.solve(&rhs)))
    }
}

/// Step matrix for `config`, assembled and factored.
pub fn assemble_lhs(config: &SolverConfig, od: &DerivOperator) -> Result<CollocationSystem> {
    CollocationSystem::new(config, od)
}

pub fn build_rhs(
    c: &CoeffVector,
    config: &SolverConfig,
    od: &DerivOperator,
) -> Result<DVector<f64>> {
    Ok(CollocationSystem::new(config, od)?.build_rhs(c))
}

pub fn step(c: &CoeffVector, system: &CollocationSystem) -> Result<CoeffVector> {
    system.step(c, 0)
}

pub fn solve(config: &SolverConfig) -> Result<SolutionSeries> {
    let ops = Operators::new(&config.spec)?;
    solve_with(config, &ops)
}

/// Runs `config` on operators built beforehand for the same basis.
pub fn solve_with(config: &SolverConfig, ops: &Operators) -> Result<SolutionSeries> {
    let system = CollocationSystem::from_operators(config, ops)?;
    let n_steps = config.n_steps();
    let mut keep = vec![config.record_times.is_empty(); n_steps + 1];
    keep[0] = true;
    for &t in &config.record_times {
        keep[config.step_of(t).min(n_steps)] = true;
    }

    let mut c = system.initial_coeffs(config.ic.as_ref(), &config.spec)?;
    let mut times = vec![0.0];
    let mut coeffs = vec![c.clone()];
    for n in 0..n_steps {
        c = system.step(&c, n)?;
        if keep[n + 1] {
            times.push((n + 1) as f64 * config.dt);
            coeffs.push(c.clone());
        }
    }
    Ok(SolutionSeries {
        times,
        coeffs,
        config: config.clone(),
    })
}

/// `Cᵀ Ψ(x)` at the stored step nearest `t`.
pub fn sample(series: &SolutionSeries, t: f64, xs: &[f64]) -> Result<Vec<f64>> {
    let c = series.coeffs_at(t)?;
    let spec = &series.config.spec;
    xs.iter()
        .map(|&x| crate::approx::reconstruct(c, spec, x))
        .collect()
}

/// `Cᵀ OD Ψ(x)`, the projected derivative.
pub fn derivative_at(c: &CoeffVector, spec: &BasisSpec, od: &DerivOperator, x: f64) -> Result<f64> {
    let psi = DVector::from_vec(basis_vector(spec, x)?);
    Ok(c.values().dot(&(od.matrix() * psi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::{interpolate, reconstruct};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn sine_config(m: u32, re: f64) -> SolverConfig {
        SolverConfig::new(
            BasisSpec::new(m).unwrap(),
            re,
            BoundarySpec::homogeneous_dirichlet(),
            |x| (PI * x).sin(),
        )
    }

    #[test]
    fn grid_layout() {
        let g = CollocationGrid::new(&BasisSpec::new(4).unwrap());
        assert_eq!(g.interior.len(), 15);
        assert_eq!(g.spacing(), 1.0 / 16.0);
        assert!(g.interior.iter().all(|&x| x > 0.0 && x < 1.0));
        assert!(g
            .all_points()
            .windows(2)
            .all(|w| (w[1] - w[0] - 1.0 / 16.0).abs() < 1e-15));
    }

    #[test]
    fn config_validation() {
        assert!(sine_config(3, 0.0).validate().is_err());
        assert!(sine_config(3, 1.0).with_dt(0.0).validate().is_err());
        assert!(sine_config(3, 1.0).with_theta(1.5).validate().is_err());
        assert!(sine_config(3, 1.0).with_t_end(-1.0).validate().is_err());
        assert!(sine_config(3, 1.0)
            .with_t_end(0.1)
            .with_record_times(vec![0.2])
            .validate()
            .is_err());
        assert_eq!(sine_config(3, 1.0).with_t_end(0.1).n_steps(), 100);
        assert_eq!(sine_config(3, 1.0).with_t_end(0.0105).n_steps(), 11);
    }

    #[test]
    fn smallest_basis_is_well_posed() {
        let cfg = sine_config(2, 1.0);
        let ops = Operators::new(&cfg.spec).unwrap();
        let sys = assemble_lhs(&cfg, &ops.od).unwrap();
        assert_eq!(sys.lhs().shape(), (5, 5));
        assert!(sys.condition().is_finite());
    }

    #[test]
    fn boundary_rows_vanish_on_zero() {
        let cfg = sine_config(4, 1.0);
        let ops = Operators::new(&cfg.spec).unwrap();
        let sys = assemble_lhs(&cfg, &ops.od).unwrap();
        let zero = CoeffVector::zeros(&cfg.spec);
        let r = sys.lhs() * zero.values();
        assert_eq!(r[0], 0.0);
        assert_eq!(r[r.len() - 1], 0.0);
        let b = build_rhs(&zero, &cfg, &ops.od).unwrap();
        assert!(b.iter().all(|&v| v == 0.0));
        let next = step(&zero, &sys).unwrap();
        assert!(next.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn vanishing_time_step_reduces_to_interpolation() {
        let cfg = sine_config(4, 1.0).with_dt(1e-300);
        let ops = Operators::new(&cfg.spec).unwrap();
        let sys = assemble_lhs(&cfg, &ops.od).unwrap();
        let psi = basis_rows(&cfg.spec, &collocation_points(&cfg.spec)).unwrap();
        assert!((sys.lhs() - psi).amax() <= 1e-250);
    }

    #[test]
    fn constant_state_rhs() {
        let spec = BasisSpec::new(4).unwrap();
        let cfg = SolverConfig::new(
            spec.clone(),
            1e12,
            BoundarySpec::homogeneous_dirichlet(),
            |_| 0.0,
        );
        let ops = Operators::new(&spec).unwrap();
        let c = interpolate(|_| 0.75, &spec).unwrap();
        let b = build_rhs(&c, &cfg, &ops.od).unwrap();
        for j in 1..b.len() - 1 {
            assert_abs_diff_eq!(b[j], 0.75, epsilon = 1e-12);
        }
    }

    #[test]
    fn sine_rhs_at_midpoint() {
        let dt = 1e-3;
        for (m, tol) in [(4, 2e-5), (5, 5e-6), (6, 2e-6)] {
            let cfg = sine_config(m, 1.0);
            let ops = Operators::new(&cfg.spec).unwrap();
            let c = interpolate(|x| (PI * x).sin(), &cfg.spec).unwrap();
            let b = build_rhs(&c, &cfg, &ops.od).unwrap();
            let mid = (b.len() - 1) / 2;
            // u = 1, u_x = 0, u_xx = -π² at x = 1/2.
            let expected = 1.0 - dt * PI * PI / 2.0;
            assert!(
                (b[mid] - expected).abs() <= tol,
                "M = {m}: {}",
                b[mid] - expected
            );
        }
    }

    #[test]
    fn step_residual_is_small() {
        let cfg = sine_config(5, 1.0);
        let ops = Operators::new(&cfg.spec).unwrap();
        let sys = assemble_lhs(&cfg, &ops.od).unwrap();
        let c0 = sys.initial_coeffs(cfg.ic.as_ref(), &cfg.spec).unwrap();
        let b = sys.build_rhs(&c0);
        let c1 = sys.step(&c0, 0).unwrap();
        assert!(sys.residual(&c1, &b) <= STEP_RESIDUAL_TOL * b.amax());
    }

    #[test]
    fn zero_end_time_keeps_initial_state() {
        let cfg = sine_config(4, 1.0);
        let series = solve(&cfg).unwrap();
        assert_eq!(series.times, vec![0.0]);
        assert_eq!(series.coeffs.len(), 1);
        let xs = collocation_points(&cfg.spec);
        let u = sample(&series, 0.0, &xs).unwrap();
        for (x, v) in xs.iter().zip(u) {
            assert!((v - (PI * x).sin()).abs() <= 1e-10);
        }
    }

    #[test]
    fn recorded_times_and_sampling() {
        let cfg = sine_config(4, 1.0)
            .with_t_end(0.05)
            .with_record_times(vec![0.01, 0.05]);
        let series = solve(&cfg).unwrap();
        assert_eq!(series.times.len(), 3);
        assert_abs_diff_eq!(series.times[2], 0.05, epsilon = 1e-15);
        let u = sample(&series, 0.05, &[0.0, 1.0]).unwrap();
        assert!(u.iter().all(|v| v.abs() <= 1e-9));
        assert!(matches!(
            sample(&series, 0.2, &[0.5]),
            Err(Error::Range { .. })
        ));
        assert_eq!(series.nearest(0.011).unwrap(), 1);
    }

    #[test]
    fn divergence_is_reported() {
        // Explicit convection with a huge step blows up.
        let cfg = SolverConfig::new(
            BasisSpec::new(5).unwrap(),
            1e6,
            BoundarySpec::homogeneous_dirichlet(),
            |x| 50.0 * (PI * x).sin(),
        )
        .with_dt(0.5)
        .with_t_end(5000.0);
        match solve(&cfg) {
            Err(Error::Divergence { step, time }) => {
                assert!(step > 0);
                assert_abs_diff_eq!(time, step as f64 * 0.5);
            }
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn neumann_initial_state_honors_boundary_rows() {
        let spec = BasisSpec::new(4).unwrap();
        let cfg = SolverConfig::new(
            spec.clone(),
            10.0,
            BoundarySpec::homogeneous_neumann(),
            |x| 50.0 * (0.5 - x).powi(3),
        );
        let ops = Operators::new(&spec).unwrap();
        let sys = assemble_lhs(&cfg, &ops.od).unwrap();
        let c0 = sys.initial_coeffs(cfg.ic.as_ref(), &spec).unwrap();
        assert!(derivative_at(&c0, &spec, &ops.od, 0.0).unwrap().abs() <= 1e-9);
        assert!(derivative_at(&c0, &spec, &ops.od, 1.0).unwrap().abs() <= 1e-9);
        let x = 0.25;
        assert_abs_diff_eq!(
            reconstruct(&c0, &spec, x).unwrap(),
            50.0 * (0.5f64 - x).powi(3),
            epsilon = 1e-10
        );
    }

    #[test]
    fn weak_diffusion_keeps_neumann_shock_bounded() {
        let spec = BasisSpec::new(4).unwrap();
        let cfg = SolverConfig::new(spec, 10.0, BoundarySpec::homogeneous_neumann(), |x| {
            50.0 * (0.5 - x).powi(3)
        })
        .with_diffusion(Diffusion::Weak)
        .with_t_end(0.5)
        .with_record_times(vec![0.5]);
        let series = solve(&cfg).unwrap();
        let xs: Vec<f64> = (0..=16).map(|k| k as f64 / 16.0).collect();
        let u = sample(&series, 0.5, &xs).unwrap();
        assert!(u.iter().all(|v| v.abs() < 6.25));
        for k in 0..xs.len() {
            assert!((u[k] + u[xs.len() - 1 - k]).abs() < 1e-8);
        }
    }

    #[test]
    fn weak_diffusion_decays_sine() {
        let cfg = sine_config(5, 1.0)
            .with_diffusion(Diffusion::Weak)
            .with_t_end(0.1);
        let series = solve(&cfg).unwrap();
        // Linear-decay bound for the heat equation part alone.
        let u = sample(&series, 0.1, &[0.5]).unwrap()[0];
        assert!(u > 0.0 && u < (-PI * PI * 0.1f64).exp() + 1e-2);
    }
}
