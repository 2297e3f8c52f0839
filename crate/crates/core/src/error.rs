use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid basis index: {kind} level {level}, shift {shift} (resolution {resolution})")]
    InvalidIndex {
        kind: &'static str,
        level: u32,
        shift: i32,
        resolution: u32,
    },

    #[error("{what} = {value} is outside the admissible domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite input: {0}")]
    Input(String),

    #[error("{context}: matrix is singular or ill-conditioned (condition estimate {condition:e})")]
    Conditioning { context: String, condition: f64 },

    #[error("solution diverged at step {step} (t = {time}): non-finite coefficients")]
    Divergence { step: usize, time: f64 },

    #[error(
        "quadrature did not reach tolerance {tol:e} on [{a}, {b}] (estimate error {estimate:e})"
    )]
    Quadrature {
        a: f64,
        b: f64,
        tol: f64,
        estimate: f64,
    },

    #[error("time {time} is outside the stored range [{start}, {end}]")]
    Range { time: f64, start: f64, end: f64 },

    #[error(transparent)]
    Io(#[from] io::Error),
}
