//! Published comparison values, stored exactly as printed.
//!
//! Each row is tagged with the table and row it was transcribed from. The
//! comparator methods are a fully implicit finite difference scheme on 100
//! grid points (IFDM) and a mixed finite difference / boundary element
//! scheme (BEM); neither is reimplemented here.

use super::cases::CaseId;

/// x-locations of every tabulated value.
pub const TABLE_XS: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Ifdm,
    Bem,
    Exact,
    /// The published wavelet results at the given resolution.
    Current {
        n_points: usize,
    },
}

impl Source {
    pub fn label(self) -> String {
        match self {
            Source::Ifdm => "IFDM".to_string(),
            Source::Bem => "BEM".to_string(),
            Source::Exact => "EXACT".to_string(),
            Source::Current { n_points } => format!("Published wavelet (N_p={n_points})"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PublishedRow {
    pub source: Source,
    pub time: f64,
    /// Values at [`TABLE_XS`], verbatim.
    pub values: [&'static str; 5],
}

#[derive(Debug, Clone, Copy)]
pub struct PublishedTable {
    pub number: u8,
    pub case: CaseId,
    pub reynolds: f64,
    pub rows: &'static [PublishedRow],
}

impl PublishedTable {
    pub fn times(&self) -> Vec<f64> {
        let mut t: Vec<f64> = self.rows.iter().map(|r| r.time).collect();
        t.dedup();
        t
    }

    pub fn row(&self, source: Source, time: f64) -> Option<&PublishedRow> {
        self.rows
            .iter()
            .find(|r| r.source == source && (r.time - time).abs() < 1e-12)
    }
}

pub static TABLES: [PublishedTable; 4] = [
    PublishedTable {
        number: 1,
        case: CaseId::One,
        reynolds: 1.0,
        rows: &[
            // Table 1, t = 0.05, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 0.05,
                values: ["0.17832", "0.47658", "0.60984", "0.51165", "0.20006"],
            },
            // Table 1, t = 0.05, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 0.05,
                values: ["0.17759", "0.47531", "0.60851", "0.51050", "0.19933"],
            },
            // Table 1, t = 0.05, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 0.05,
                values: ["0.17803", "0.47586", "0.60907", "0.51113", "0.19989"],
            },
            // Table 1, t = 0.05, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 0.05,
                values: ["0.17798", "0.47558", "0.60954", "0.51109", "0.20005"],
            },
            // Table 1, t = 0.05, current work N_p=65 row
            PublishedRow {
                source: Source::Current { n_points: 65 },
                time: 0.05,
                values: ["0.17792", "0.47570", "0.60918", "0.51130", "0.19999"],
            },
            // Table 1, t = 0.1, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 0.1,
                values: ["0.11009", "0.29335", "0.37342", "0.31144", "0.12128"],
            },
            // Table 1, t = 0.1, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 0.1,
                values: ["0.10931", "0.29124", "0.37070", "0.30911", "0.12031"],
            },
            // Table 1, t = 0.1, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 0.1,
                values: ["0.10954", "0.29190", "0.37158", "0.30991", "0.12069"],
            },
            // Table 1, t = 0.1, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 0.1,
                values: ["0.10952", "0.29174", "0.37187", "0.30988", "0.12078"],
            },
            // Table 1, t = 0.1, current work N_p=65 row
            PublishedRow {
                source: Source::Current { n_points: 65 },
                time: 0.1,
                values: ["0.10948", "0.29181", "0.37163", "0.30999", "0.12073"],
            },
            // Table 1, t = 0.2, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 0.2,
                values: ["0.04273", "0.11276", "0.14120", "0.11574", "0.04457"],
            },
            // Table 1, t = 0.2, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 0.2,
                values: ["0.04220", "0.11044", "0.13809", "0.11322", "0.04391"],
            },
            // Table 1, t = 0.2, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 0.2,
                values: ["0.04193", "0.11062", "0.13847", "0.11347", "0.04369"],
            },
            // Table 1, t = 0.2, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 0.2,
                values: ["0.04194", "0.11059", "0.13860", "0.11345", "0.04371"],
            },
            // Table 1, t = 0.2, current work N_p=65 row
            PublishedRow {
                source: Source::Current { n_points: 65 },
                time: 0.2,
                values: ["0.04192", "0.11061", "0.13849", "0.11348", "0.04369"],
            },
        ],
    },
    PublishedTable {
        number: 2,
        case: CaseId::One,
        reynolds: 10.0,
        rows: &[
            // Table 2, t = 0.5, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 0.5,
                values: ["0.11048", "0.32367", "0.50447", "0.57664", "0.30912"],
            },
            // Table 2, t = 0.5, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 0.5,
                values: ["0.10986", "0.32191", "0.50240", "0.57514", "0.30779"],
            },
            // Table 2, t = 0.5, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 0.5,
                values: ["0.10992", "0.32219", "0.50279", "0.57585", "0.30935"],
            },
            // Table 2, t = 0.5, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 0.5,
                values: ["0.10991", "0.32207", "0.50281", "0.57542", "0.30933"],
            },
            // Table 2, t = 1, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 1.0,
                values: ["0.06689", "0.19445", "0.29448", "0.31107", "0.14769"],
            },
            // Table 2, t = 1, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 1.0,
                values: ["0.06644", "0.19263", "0.29139", "0.30711", "0.14507"],
            },
            // Table 2, t = 1, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 1.0,
                values: ["0.06632", "0.19279", "0.29192", "0.30809", "0.14607"],
            },
            // Table 2, t = 1, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 1.0,
                values: ["0.06631", "0.19270", "0.29194", "0.30776", "0.14605"],
            },
            // Table 2, t = 2, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 2.0,
                values: ["0.02909", "0.08044", "0.10939", "0.09838", "0.04037"],
            },
            // Table 2, t = 2, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 2.0,
                values: ["0.02913", "0.07951", "0.10770", "0.09663", "0.03976"],
            },
            // Table 2, t = 2, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 2.0,
                values: ["0.02876", "0.07946", "0.10789", "0.09685", "0.03969"],
            },
            // Table 2, t = 2, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 2.0,
                values: ["0.02875", "0.07941", "0.10792", "0.09676", "0.03968"],
            },
        ],
    },
    PublishedTable {
        number: 3,
        case: CaseId::Two,
        reynolds: 1.0,
        rows: &[
            // Table 3, t = 0.05, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 0.05,
                values: ["0.18423", "0.49169", "0.62884", "0.52847", "0.20712"],
            },
            // Table 3, t = 0.05, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 0.05,
                values: ["0.18347", "0.49036", "0.62749", "0.52726", "0.20632"],
            },
            // Table 3, t = 0.05, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 0.05,
                values: ["0.18389", "0.49093", "0.62808", "0.52793", "0.20690"],
            },
            // Table 3, t = 0.05, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 0.05,
                values: ["0.18385", "0.49067", "0.62858", "0.52790", "0.20707"],
            },
            // Table 3, t = 0.1, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 0.1,
                values: ["0.11346", "0.30248", "0.38533", "0.32165", "0.12533"],
            },
            // Table 3, t = 0.1, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 0.1,
                values: ["0.11266", "0.30031", "0.38251", "0.31925", "0.12432"],
            },
            // Table 3, t = 0.1, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 0.1,
                values: ["0.11289", "0.30097", "0.38342", "0.32007", "0.12472"],
            },
            // Table 3, t = 0.1, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 0.1,
                values: ["0.11288", "0.30082", "0.38374", "0.32005", "0.12481"],
            },
            // Table 3, t = 0.2, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 0.2,
                values: ["0.04407", "0.11631", "0.14570", "0.11948", "0.04602"],
            },
            // Table 3, t = 0.2, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 0.2,
                values: ["0.04353", "0.11393", "0.14250", "0.11691", "0.04535"],
            },
            // Table 3, t = 0.2, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 0.2,
                values: ["0.04324", "0.11410", "0.14289", "0.11713", "0.04511"],
            },
            // Table 3, t = 0.2, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 0.2,
                values: ["0.04325", "0.11407", "0.14302", "0.11712", "0.04514"],
            },
        ],
    },
    PublishedTable {
        number: 4,
        case: CaseId::Two,
        reynolds: 10.0,
        rows: &[
            // Table 4, t = 0.5, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 0.5,
                values: ["0.11328", "0.33168", "0.51713", "0.59382", "0.32153"],
            },
            // Table 4, t = 0.5, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 0.5,
                values: ["0.11263", "0.32982", "0.51499", "0.59230", "0.32011"],
            },
            // Table 4, t = 0.5, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 0.5,
                values: ["0.11266", "0.33010", "0.51540", "0.59304", "0.32175"],
            },
            // Table 4, t = 0.5, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 0.5,
                values: ["0.11267", "0.33000", "0.51544", "0.59262", "0.32174"],
            },
            // Table 4, t = 1, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 1.0,
                values: ["0.06810", "0.19819", "0.30100", "0.31966", "0.15268"],
            },
            // Table 4, t = 1, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 1.0,
                values: ["0.06766", "0.19632", "0.29782", "0.31555", "0.14993"],
            },
            // Table 4, t = 1, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 1.0,
                values: ["0.06750", "0.19647", "0.29834", "0.31656", "0.15097"],
            },
            // Table 4, t = 1, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 1.0,
                values: ["0.06750", "0.19639", "0.29837", "0.31623", "0.15096"],
            },
            // Table 4, t = 2, IFDM row
            PublishedRow {
                source: Source::Ifdm,
                time: 2.0,
                values: ["0.02997", "0.08301", "0.11326", "0.10227", "0.04209"],
            },
            // Table 4, t = 2, BEM row
            PublishedRow {
                source: Source::Bem,
                time: 2.0,
                values: ["0.02969", "0.08109", "0.11003", "0.09894", "0.04077"],
            },
            // Table 4, t = 2, EXACT row
            PublishedRow {
                source: Source::Exact,
                time: 2.0,
                values: ["0.02929", "0.08101", "0.11020", "0.09915", "0.04070"],
            },
            // Table 4, t = 2, current work N_p=33 row
            PublishedRow {
                source: Source::Current { n_points: 33 },
                time: 2.0,
                values: ["0.02929", "0.08096", "0.11024", "0.09906", "0.04069"],
            },
        ],
    },
];

/// Column layout `(Re, t)` of the average-relative-error table for case 2.
pub const AVERAGE_ERROR_COLUMNS: [(f64, f64); 6] = [
    (1.0, 0.05),
    (1.0, 0.1),
    (1.0, 0.2),
    (10.0, 0.5),
    (10.0, 1.0),
    (10.0, 2.0),
];

#[derive(Debug, Clone, Copy)]
pub struct AverageErrorRow {
    pub source: Source,
    /// Values in [`AVERAGE_ERROR_COLUMNS`] order, verbatim.
    pub values: [&'static str; 6],
}

/// The wavelet row does not state its N_p; it is filed under 33, the
/// resolution of the tables it summarizes.
pub static AVERAGE_ERRORS: [AverageErrorRow; 3] = [
    // Table 5, current work row
    AverageErrorRow {
        source: Source::Current { n_points: 33 },
        values: [
            "4.84e-4", "4.41e-4", "4.30e-4", "2.42e-4", "3.23e-4", "4.27e-4",
        ],
    },
    // Table 5, IFDM row
    AverageErrorRow {
        source: Source::Ifdm,
        values: [
            "1.34e-3", "4.98e-3", "1.97e-2", "3.13e-3", "9.53e-3", "2.83e-2",
        ],
    },
    // Table 5, BEM row
    AverageErrorRow {
        source: Source::Bem,
        values: [
            "1.69e-3", "2.47e-3", "3.62e-3", "1.65e-3", "2.99e-3", "4.00e-3",
        ],
    },
];

pub fn table(case: CaseId, reynolds: f64) -> Option<&'static PublishedTable> {
    TABLES
        .iter()
        .find(|t| t.case == case && t.reynolds == reynolds)
}

pub fn average_error(source: Source, reynolds: f64, time: f64) -> Option<&'static str> {
    let row = AVERAGE_ERRORS.iter().find(|r| r.source == source)?;
    let col = AVERAGE_ERROR_COLUMNS
        .iter()
        .position(|&(re, t)| re == reynolds && (t - time).abs() < 1e-12)?;
    Some(row.values[col])
}

/// Numeric value of a stored string.
pub fn value(s: &str) -> f64 {
    s.parse()
        .unwrap_or_else(|_| panic!("published value {s:?} is not a number"))
}
