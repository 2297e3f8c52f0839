//! One benchmark run: solve, sample, compare, write.

use std::path::Path;

use crate::approx::{reconstruct, truncate};
use crate::basis::BasisSpec;
use crate::error::{Error, Result};
use crate::operators::Operators;
use crate::oracle::{ExactSolution, ExactSolutionSpec};
use crate::solver::{
    derivative_at, solve_with, Diffusion, SolutionSeries, SolverConfig, DEFAULT_DT, DEFAULT_THETA,
};

use super::cases::{CaseDefinition, CaseId};
use super::report::{
    error_markdown, error_metrics, excess_variation, property_markdown, write_error_csv,
    write_file, write_profile_csv, write_property_csv, ErrorReport, PropertyRow,
};

/// Resolutions accepted by the harness.
pub const ALLOWED_N_POINTS: [usize; 5] = [5, 9, 17, 33, 65];
pub const DEFAULT_PROFILE_POINTS: usize = 401;
/// Uniform sampling used for the case-3 checks. A multiple of every mesh, so
/// piecewise-linear profiles are captured exactly.
const PROPERTY_SAMPLES: usize = 1024;

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub case: CaseDefinition,
    pub n_points: usize,
    pub dt: f64,
    pub theta: f64,
    /// Defaults to the last report time.
    pub t_end: Option<f64>,
    pub diffusion: Diffusion,
    pub profile_points: usize,
    /// Also sample profiles keeping only wavelet levels below this one.
    pub truncate_level: Option<u32>,
}

impl RunOptions {
    pub fn new(case: CaseDefinition, n_points: usize) -> Self {
        Self {
            case,
            n_points,
            dt: DEFAULT_DT,
            theta: DEFAULT_THETA,
            t_end: None,
            diffusion: Diffusion::default(),
            profile_points: DEFAULT_PROFILE_POINTS,
            truncate_level: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub time: f64,
    /// `Some(L)` for a profile truncated to levels below `L`.
    pub truncate_level: Option<u32>,
    pub xs: Vec<f64>,
    pub us: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub case: CaseId,
    pub reynolds: f64,
    pub n_points: usize,
    /// Cases 1 and 2.
    pub errors: Option<ErrorReport>,
    /// Case 3.
    pub properties: Vec<PropertyRow>,
    pub profiles: Vec<Profile>,
    pub ops: Operators,
    pub series: SolutionSeries,
}

pub fn run_case(opts: &RunOptions) -> Result<RunOutput> {
    if !ALLOWED_N_POINTS.contains(&opts.n_points) {
        return Err(Error::InvalidArgument(format!(
            "N_p = {} is not one of {ALLOWED_N_POINTS:?}",
            opts.n_points
        )));
    }
    if opts.profile_points < 2 {
        return Err(Error::InvalidArgument(
            "profiles need at least 2 points".into(),
        ));
    }
    let case = &opts.case;
    let spec = BasisSpec::from_n_points(opts.n_points)?;
    if let Some(level) = opts.truncate_level {
        if !(2..=spec.max_level()).contains(&level) {
            return Err(Error::InvalidArgument(format!(
                "truncation level {level} outside 2..={}",
                spec.max_level()
            )));
        }
    }
    let ops = Operators::new(&spec)?;
    let id = case.id;
    let config = SolverConfig::new(spec.clone(), case.reynolds, case.bc, move |x| {
        id.initial_value(x)
    })
    .with_dt(opts.dt)
    .with_theta(opts.theta)
    .with_t_end(opts.t_end.unwrap_or_else(|| case.last_time()))
    .with_diffusion(opts.diffusion)
    .with_record_times(case.times.clone());
    let series = solve_with(&config, &ops)?;

    let at = |t: f64, xs: &[f64]| -> Result<Vec<f64>> {
        let c = series.coeffs_at(t)?;
        xs.iter().map(|&x| reconstruct(c, &spec, x)).collect()
    };

    let errors = match case.id.ic_family() {
        Some(family) => {
            let exact = ExactSolution::new(ExactSolutionSpec::new(case.reynolds, family))?;
            let exact_values = exact.table_values(&case.times, &case.xs)?;
            let numeric = case
                .times
                .iter()
                .map(|&t| at(t, &case.xs))
                .collect::<Result<Vec<_>>>()?;
            Some(error_metrics(
                case.id,
                case.reynolds,
                opts.n_points,
                &case.times,
                &case.xs,
                &numeric,
                &exact_values,
            )?)
        }
        None => None,
    };

    let mut properties = Vec::new();
    if case.id == CaseId::Three {
        let xs: Vec<f64> = (0..=PROPERTY_SAMPLES)
            .map(|k| k as f64 / PROPERTY_SAMPLES as f64)
            .collect();
        for &t in &case.times {
            let u = at(t, &xs)?;
            let c = series.coeffs_at(t)?;
            let antisymmetry = u
                .iter()
                .zip(u.iter().rev())
                .map(|(a, b)| (a + b).abs())
                .fold(0.0, f64::max);
            properties.push(PropertyRow {
                time: t,
                antisymmetry,
                centre: u[PROPERTY_SAMPLES / 2].abs(),
                neumann_left: derivative_at(c, &spec, &ops.od, 0.0)?,
                neumann_right: derivative_at(c, &spec, &ops.od, 1.0)?,
                excess_variation: excess_variation(&u),
            });
        }
    }

    let n = opts.profile_points;
    let xs: Vec<f64> = (0..n).map(|k| k as f64 / (n - 1) as f64).collect();
    let mut profiles = Vec::new();
    for &t in &case.times {
        profiles.push(Profile {
            time: t,
            truncate_level: None,
            us: at(t, &xs)?,
            xs: xs.clone(),
        });
        if let Some(level) = opts.truncate_level {
            let c = truncate(series.coeffs_at(t)?, &spec, level)?;
            profiles.push(Profile {
                time: t,
                truncate_level: Some(level),
                us: xs
                    .iter()
                    .map(|&x| reconstruct(&c, &spec, x))
                    .collect::<Result<_>>()?,
                xs: xs.clone(),
            });
        }
    }

    Ok(RunOutput {
        case: case.id,
        reynolds: case.reynolds,
        n_points: opts.n_points,
        errors,
        properties,
        profiles,
        ops,
        series,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Csv,
    Markdown,
}

fn stem(case: CaseId, reynolds: f64) -> String {
    format!("case{}_re{}", case.number(), reynolds)
}

/// Writes the reports of runs sharing one case and Reynolds number into
/// `dir`. Returns the paths written, in order.
pub fn write_outputs(
    runs: &[RunOutput],
    dir: &Path,
    format: ReportFormat,
    profiles: bool,
    dump_operators: bool,
) -> Result<Vec<std::path::PathBuf>> {
    let mut written = Vec::new();
    let Some(first) = runs.first() else {
        return Ok(written);
    };
    let base = stem(first.case, first.reynolds);
    match format {
        ReportFormat::Csv => {
            for run in runs {
                let path = dir.join(format!("{base}_np{}.csv", run.n_points));
                match &run.errors {
                    Some(rep) => write_file(&path, |w| write_error_csv(rep, w))?,
                    None => write_file(&path, |w| write_property_csv(&run.properties, w))?,
                }
                written.push(path);
            }
        }
        ReportFormat::Markdown => {
            let path = dir.join(format!("{base}.md"));
            let text = if first.errors.is_some() {
                let reports: Vec<ErrorReport> =
                    runs.iter().filter_map(|r| r.errors.clone()).collect();
                error_markdown(&reports)?
            } else {
                runs.iter()
                    .map(|r| property_markdown(r.n_points, r.reynolds, &r.properties))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            write_file(&path, |w| {
                Ok(std::io::Write::write_all(w, text.as_bytes())?)
            })?;
            written.push(path);
        }
    }
    if profiles {
        for run in runs {
            for p in &run.profiles {
                let suffix = p
                    .truncate_level
                    .map(|l| format!("_trunc{l}"))
                    .unwrap_or_default();
                let path = dir.join(format!(
                    "{base}_np{}_t{}{suffix}_profile.csv",
                    run.n_points, p.time
                ));
                write_file(&path, |w| write_profile_csv(&p.xs, &p.us, w))?;
                written.push(path);
            }
        }
    }
    if dump_operators {
        for run in runs {
            let sub = dir.join(format!("operators_np{}", run.n_points));
            run.ops.dump_csv(&sub)?;
            written.push(sub);
        }
    }
    Ok(written)
}
