//! The three benchmark problems.

use std::fmt;

use crate::error::{Error, Result};
use crate::oracle::IcFamily;
use crate::solver::BoundarySpec;

use super::published::TABLE_XS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CaseId {
    /// `u₀ = sin(πx)`, homogeneous Dirichlet.
    One,
    /// `u₀ = 4x(1 − x)`, homogeneous Dirichlet.
    Two,
    /// `u₀ = 50(1/2 − x)³`, homogeneous Neumann.
    Three,
}

impl CaseId {
    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            _ => Err(Error::InvalidArgument(format!(
                "unknown case {n}, expected 1, 2 or 3"
            ))),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Self::One => 1,
            Self::Two => 2,
            Self::Three => 3,
        }
    }

    /// Family with a closed-form reference solution, if any.
    pub fn ic_family(self) -> Option<IcFamily> {
        match self {
            Self::One => Some(IcFamily::SinPi),
            Self::Two => Some(IcFamily::Poly4x1mx),
            Self::Three => None,
        }
    }

    pub fn initial_value(self, x: f64) -> f64 {
        match self.ic_family() {
            Some(f) => f.initial_value(x),
            None => 50.0 * (0.5 - x).powi(3),
        }
    }

    pub fn boundary(self) -> BoundarySpec {
        match self {
            Self::Three => BoundarySpec::homogeneous_neumann(),
            _ => BoundarySpec::homogeneous_dirichlet(),
        }
    }

    pub fn default_reynolds(self) -> f64 {
        match self {
            Self::Three => 10.0,
            _ => 1.0,
        }
    }

    /// Tabulated times: `{0.05, 0.1, 0.2}` at Re = 1, `{0.5, 1, 2}` at Re = 10;
    /// `{0.1, 0.5, 1}` for case 3.
    pub fn default_times(self, reynolds: f64) -> Vec<f64> {
        match self {
            Self::Three => vec![0.1, 0.5, 1.0],
            _ if reynolds >= 10.0 => vec![0.5, 1.0, 2.0],
            _ => vec![0.05, 0.1, 0.2],
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseDefinition {
    pub id: CaseId,
    pub reynolds: f64,
    pub bc: BoundarySpec,
    pub times: Vec<f64>,
    pub xs: Vec<f64>,
}

impl CaseDefinition {
    pub fn new(id: CaseId, reynolds: Option<f64>, times: Option<Vec<f64>>) -> Result<Self> {
        let reynolds = reynolds.unwrap_or_else(|| id.default_reynolds());
        if !(reynolds > 0.0 && reynolds.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "Reynolds number must be positive, got {reynolds}"
            )));
        }
        let times = times.unwrap_or_else(|| id.default_times(reynolds));
        if let Some(t) = times.iter().find(|t| !(**t > 0.0 && t.is_finite())) {
            return Err(Error::InvalidArgument(format!(
                "report time {t} must be positive"
            )));
        }
        Ok(Self {
            id,
            reynolds,
            bc: id.boundary(),
            times,
            xs: TABLE_XS.to_vec(),
        })
    }

    pub fn last_time(&self) -> f64 {
        self.times.iter().copied().fold(0.0, f64::max)
    }
}
