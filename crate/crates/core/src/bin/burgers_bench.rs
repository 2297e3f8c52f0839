use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use wavelet_burgers::bench::report::{
    error_markdown, property_markdown, write_error_csv, write_property_csv,
};
use wavelet_burgers::bench::{
    run_case, write_outputs, CaseDefinition, CaseId, ReportFormat, RunOptions, RunOutput,
};
use wavelet_burgers::solver::{Diffusion, DEFAULT_DT, DEFAULT_THETA};
use wavelet_burgers::{Error, Result};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DiffusionArg {
    Projected,
    Weak,
}

/// Runs the Burgers benchmark problems and reports errors against the exact
/// solution and the published comparison values.
#[derive(Debug, Parser)]
#[command(name = "burgers-bench", version)]
struct Cli {
    /// Test problem.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    case: u8,
    /// Reynolds number (default 1 for cases 1 and 2, 10 for case 3).
    #[arg(long)]
    re: Option<f64>,
    /// Collocation points, one or more of 5, 9, 17, 33, 65.
    #[arg(long, value_delimiter = ',', default_value = "33")]
    np: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_DT)]
    dt: f64,
    #[arg(long, default_value_t = DEFAULT_THETA)]
    theta: f64,
    /// Final time (default: last report time).
    #[arg(long)]
    t_end: Option<f64>,
    /// Report times, comma separated.
    #[arg(long, value_delimiter = ',')]
    times: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Output directory; reports go to stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write `x,u` profiles at every report time (needs --out).
    #[arg(long)]
    profiles: bool,
    /// Number of points per profile.
    #[arg(long, default_value_t = 401)]
    profile_points: usize,
    /// Write the Gram, moment and derivative matrices (needs --out).
    #[arg(long)]
    dump_operators: bool,
    /// Also write profiles keeping only wavelet levels below L.
    #[arg(long, value_name = "L")]
    truncate_level: Option<u32>,
    /// Second-derivative operator.
    #[arg(long, value_enum, default_value = "projected")]
    diffusion: DiffusionArg,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Divergence { .. } => 2,
        Error::Conditioning { .. } => 3,
        Error::Io(_) => 4,
        _ => 1,
    }
}

fn print_stdout(runs: &[RunOutput], format: ReportFormat) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match format {
        ReportFormat::Markdown => {
            let text = if runs.iter().all(|r| r.errors.is_some()) {
                let reports: Vec<_> = runs.iter().filter_map(|r| r.errors.clone()).collect();
                error_markdown(&reports)?
            } else {
                runs.iter()
                    .map(|r| property_markdown(r.n_points, r.reynolds, &r.properties))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            out.write_all(text.as_bytes())?;
        }
        ReportFormat::Csv => {
            for (i, run) in runs.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                match &run.errors {
                    Some(rep) => write_error_csv(rep, &mut out)?,
                    None => write_property_csv(&run.properties, &mut out)?,
                }
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let id = CaseId::from_number(cli.case)?;
    let case = CaseDefinition::new(id, cli.re, cli.times)?;
    if cli.out.is_none() && (cli.profiles || cli.dump_operators || cli.truncate_level.is_some()) {
        return Err(Error::InvalidArgument(
            "--profiles, --dump-operators and --truncate-level write files and need --out".into(),
        ));
    }
    let format = match cli.format {
        Format::Csv => ReportFormat::Csv,
        Format::Md => ReportFormat::Markdown,
    };
    let mut runs = Vec::new();
    for &np in &cli.np {
        let mut opts = RunOptions::new(case.clone(), np);
        opts.dt = cli.dt;
        opts.theta = cli.theta;
        opts.t_end = cli.t_end;
        opts.profile_points = cli.profile_points;
        opts.truncate_level = cli.truncate_level;
        opts.diffusion = match cli.diffusion {
            DiffusionArg::Projected => Diffusion::Projected,
            DiffusionArg::Weak => Diffusion::Weak,
        };
        let out = run_case(&opts).map_err(|e| {
            eprintln!("{id}, Re = {}, N_p = {np}: {e}", case.reynolds);
            e
        })?;
        runs.push(out);
    }
    match &cli.out {
        Some(dir) => {
            for path in write_outputs(
                &runs,
                dir,
                format,
                cli.profiles || cli.truncate_level.is_some(),
                cli.dump_operators,
            )? {
                eprintln!("wrote {}", path.display());
            }
        }
        None => print_stdout(&runs, format)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let cond = Error::Conditioning {
            context: "x".into(),
            condition: 1e20,
        };
        assert_eq!(exit_code(&cond), 3);
        assert_eq!(
            exit_code(&Error::Divergence {
                step: 3,
                time: 0.003
            }),
            2
        );
        assert_eq!(exit_code(&Error::Io(std::io::Error::other("disk"))), 4);
        assert_eq!(exit_code(&Error::InvalidArgument("bad".into())), 1);
    }
}
