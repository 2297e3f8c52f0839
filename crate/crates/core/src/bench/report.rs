//! Error tables, property tables and profile files.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::cases::CaseId;
use super::published::{self, Source, AVERAGE_ERROR_COLUMNS, TABLE_XS};

pub const CSV_HEADER: &str = "time,x,numeric,exact,abs_err,rel_err,ifdm,bem";
pub const PROPERTY_HEADER: &str =
    "time,antisymmetry,centre,neumann_left,neumann_right,excess_variation";

/// 17 significant digits, enough to round-trip an `f64`.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub time: f64,
    pub x: f64,
    pub numeric: f64,
    pub exact: f64,
    pub abs_err: f64,
    /// `None` where the exact value is zero.
    pub rel_err: Option<f64>,
    pub ifdm: Option<&'static str>,
    pub bem: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub case: CaseId,
    pub reynolds: f64,
    pub n_points: usize,
    pub rows: Vec<ErrorRow>,
}

impl ErrorReport {
    pub fn times(&self) -> Vec<f64> {
        let mut t: Vec<f64> = self.rows.iter().map(|r| r.time).collect();
        t.dedup();
        t
    }

    /// Mean of `|num − exact| / |exact|` over the points reported at `time`.
    pub fn average_relative_error(&self, time: f64) -> Option<f64> {
        let rel: Vec<f64> = self
            .rows
            .iter()
            .filter(|r| r.time == time)
            .filter_map(|r| r.rel_err)
            .collect();
        (!rel.is_empty()).then(|| rel.iter().sum::<f64>() / rel.len() as f64)
    }

    pub fn max_abs_error(&self, time: f64) -> Option<f64> {
        self.rows
            .iter()
            .filter(|r| r.time == time)
            .map(|r| r.abs_err)
            .reduce(f64::max)
    }
}

/// Pointwise and averaged errors of `numeric` against `exact`.
///
/// `numeric[i][k]` and `exact[i][k]` belong to `times[i]`, `xs[k]`. Published
/// comparator values are attached where the case, Reynolds number, time and
/// x-location match a stored table.
pub fn error_metrics(
    case: CaseId,
    reynolds: f64,
    n_points: usize,
    times: &[f64],
    xs: &[f64],
    numeric: &[Vec<f64>],
    exact: &[Vec<f64>],
) -> Result<ErrorReport> {
    if numeric.len() != times.len() || exact.len() != times.len() {
        return Err(Error::InvalidArgument(format!(
            "{} times but {} numeric and {} exact rows",
            times.len(),
            numeric.len(),
            exact.len()
        )));
    }
    let table = published::table(case, reynolds);
    let mut rows = Vec::with_capacity(times.len() * xs.len());
    for (i, &t) in times.iter().enumerate() {
        if numeric[i].len() != xs.len() || exact[i].len() != xs.len() {
            return Err(Error::InvalidArgument(format!(
                "row for t = {t} does not have {} values",
                xs.len()
            )));
        }
        for (k, &x) in xs.iter().enumerate() {
            let comparator = |source| {
                let col = TABLE_XS.iter().position(|&p| (p - x).abs() < 1e-12)?;
                Some(table?.row(source, t)?.values[col])
            };
            let (num, ex) = (numeric[i][k], exact[i][k]);
            let abs_err = (num - ex).abs();
            rows.push(ErrorRow {
                time: t,
                x,
                numeric: num,
                exact: ex,
                abs_err,
                rel_err: (ex != 0.0).then(|| abs_err / ex.abs()),
                ifdm: comparator(Source::Ifdm),
                bem: comparator(Source::Bem),
            });
        }
    }
    Ok(ErrorReport {
        case,
        reynolds,
        n_points,
        rows,
    })
}

pub fn write_error_csv(report: &ErrorReport, w: &mut impl Write) -> Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in &report.rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            r.time,
            r.x,
            fmt17(r.numeric),
            fmt17(r.exact),
            fmt17(r.abs_err),
            r.rel_err.map(fmt17).unwrap_or_default(),
            r.ifdm.unwrap_or(""),
            r.bem.unwrap_or(""),
        )?;
    }
    Ok(())
}

/// Markdown tables in the layout of the published comparisons: one block of
/// method rows per time, then the average relative errors.
///
/// All reports must share case and Reynolds number; they differ in N_p.
pub fn error_markdown(reports: &[ErrorReport]) -> Result<String> {
    let Some(first) = reports.first() else {
        return Ok(String::new());
    };
    if reports
        .iter()
        .any(|r| r.case != first.case || r.reynolds != first.reynolds)
    {
        return Err(Error::InvalidArgument(
            "markdown tables combine runs of one case and Reynolds number".into(),
        ));
    }
    let xs: Vec<f64> = {
        let t0 = first.rows.first().map(|r| r.time);
        first
            .rows
            .iter()
            .filter(|r| Some(r.time) == t0)
            .map(|r| r.x)
            .collect()
    };
    let table = published::table(first.case, first.reynolds);
    let mut out = String::new();
    let _ = writeln!(out, "### {}, Re = {}\n", first.case, first.reynolds);
    let _ = write!(out, "| Method | time |");
    for x in &xs {
        let _ = write!(out, " x={x} |");
    }
    let _ = write!(out, "\n|---|---|");
    for _ in &xs {
        let _ = write!(out, "---|");
    }
    out.push('\n');

    let row = |out: &mut String, label: &str, time: &str, cells: Vec<String>| {
        let _ = writeln!(out, "| {label} | {time} | {} |", cells.join(" | "));
    };
    for t in first.times() {
        let mut time_cell = t.to_string();
        let mut take_time = || std::mem::take(&mut time_cell);
        let published_row = |source| {
            let r = table?.row(source, t)?;
            let cells = xs
                .iter()
                .map(|x| {
                    TABLE_XS
                        .iter()
                        .position(|p| (p - x).abs() < 1e-12)
                        .map(|c| r.values[c].to_string())
                        .unwrap_or_default()
                })
                .collect::<Vec<_>>();
            Some(cells)
        };
        for source in [Source::Ifdm, Source::Bem] {
            if let Some(cells) = published_row(source) {
                row(&mut out, &source.label(), &take_time(), cells);
            }
        }
        let exact: Vec<String> = first
            .rows
            .iter()
            .filter(|r| r.time == t)
            .map(|r| format!("{:.5}", r.exact))
            .collect();
        row(&mut out, "EXACT", &take_time(), exact);
        for np in [33, 65] {
            if let Some(cells) = published_row(Source::Current { n_points: np }) {
                row(
                    &mut out,
                    &Source::Current { n_points: np }.label(),
                    &take_time(),
                    cells,
                );
            }
        }
        for rep in reports {
            let cells = rep
                .rows
                .iter()
                .filter(|r| r.time == t)
                .map(|r| format!("{:.5}", r.numeric))
                .collect();
            row(
                &mut out,
                &format!("This solver (N_p={})", rep.n_points),
                &take_time(),
                cells,
            );
        }
    }

    let times = first.times();
    let _ = writeln!(
        out,
        "\n#### Average relative error, Re = {}\n",
        first.reynolds
    );
    let _ = write!(out, "| Method |");
    for t in &times {
        let _ = write!(out, " t = {t} |");
    }
    let _ = write!(out, "\n|---|");
    for _ in &times {
        let _ = write!(out, "---|");
    }
    out.push('\n');
    for rep in reports {
        let cells: Vec<String> = times
            .iter()
            .map(|&t| {
                rep.average_relative_error(t)
                    .map(|e| format!("{e:.2e}"))
                    .unwrap_or_default()
            })
            .collect();
        let _ = writeln!(
            out,
            "| This solver (N_p={}) | {} |",
            rep.n_points,
            cells.join(" | ")
        );
    }
    if first.case == CaseId::Two {
        for source in [Source::Current { n_points: 33 }, Source::Ifdm, Source::Bem] {
            let cells: Vec<&str> = times
                .iter()
                .map(|&t| published::average_error(source, first.reynolds, t).unwrap_or(""))
                .collect();
            if cells.iter().any(|c| !c.is_empty()) {
                let _ = writeln!(out, "| {} | {} |", source.label(), cells.join(" | "));
            }
        }
    }
    Ok(out)
}

/// Average relative error of the stored values of `source` against the
/// stored EXACT row, for every published column of case 2.
pub fn published_average_errors(source: Source) -> Vec<((f64, f64), f64)> {
    AVERAGE_ERROR_COLUMNS
        .iter()
        .filter_map(|&(re, t)| {
            let table = published::table(CaseId::Two, re)?;
            let num = table.row(source, t)?;
            let exact = table.row(Source::Exact, t)?;
            let rel: f64 = num
                .values
                .iter()
                .zip(exact.values)
                .map(|(n, e)| {
                    let (n, e) = (published::value(n), published::value(e));
                    (n - e).abs() / e.abs()
                })
                .sum();
            Some(((re, t), rel / num.values.len() as f64))
        })
        .collect()
}

/// Qualitative checks for the Neumann case, which has no closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropertyRow {
    pub time: f64,
    /// `max |u(x) + u(1 − x)|` over the sample points.
    pub antisymmetry: f64,
    /// `|u(1/2)|`.
    pub centre: f64,
    /// Projected derivative `Cᵀ OD Ψ` at `x = 0` and `x = 1`.
    pub neumann_left: f64,
    pub neumann_right: f64,
    /// Total variation beyond that of a monotone profile with the same
    /// end values; zero exactly when the profile is monotone.
    pub excess_variation: f64,
}

pub fn write_property_csv(rows: &[PropertyRow], w: &mut impl Write) -> Result<()> {
    writeln!(w, "{PROPERTY_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            r.time,
            fmt17(r.antisymmetry),
            fmt17(r.centre),
            fmt17(r.neumann_left),
            fmt17(r.neumann_right),
            fmt17(r.excess_variation),
        )?;
    }
    Ok(())
}

pub fn property_markdown(n_points: usize, reynolds: f64, rows: &[PropertyRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "### case 3, Re = {reynolds}, N_p = {n_points}\n");
    let _ = writeln!(
        out,
        "| time | max \\|u(x)+u(1-x)\\| | \\|u(0.5)\\| | u_x(0) | u_x(1) | excess TV |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|---|");
    for r in rows {
        let _ = writeln!(
            out,
            "| {} | {:.3e} | {:.3e} | {:.3e} | {:.3e} | {:.4} |",
            r.time, r.antisymmetry, r.centre, r.neumann_left, r.neumann_right, r.excess_variation
        );
    }
    out
}

pub fn excess_variation(u: &[f64]) -> f64 {
    let (Some(first), Some(last)) = (u.first(), u.last()) else {
        return 0.0;
    };
    let tv: f64 = u.windows(2).map(|w| (w[1] - w[0]).abs()).sum();
    (tv - (last - first).abs()).max(0.0)
}

/// `x,u` rows.
pub fn write_profile_csv(xs: &[f64], us: &[f64], w: &mut impl Write) -> Result<()> {
    writeln!(w, "x,u")?;
    for (x, u) in xs.iter().zip(us) {
        writeln!(w, "{},{}", fmt17(*x), fmt17(*u))?;
    }
    Ok(())
}

/// Creates `path` and hands a buffered writer to `body`.
pub fn write_file(
    path: &Path,
    body: impl FnOnce(&mut BufWriter<File>) -> Result<()>,
) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let mut w = BufWriter::new(File::create(path)?);
    body(&mut w)?;
    w.flush()?;
    Ok(())
}
