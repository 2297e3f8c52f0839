//! Expansion of functions in the wavelet basis and multiresolution views of
//! the resulting coefficients.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};

use crate::basis::{basis_piecewise, basis_vector, BasisKind, BasisSpec, COARSE_LEVEL};
use crate::error::{Error, Result};
use crate::linalg::DenseLu;
use crate::operators::DualTransform;
use crate::quadrature::GaussRule;

/// Gauss points per mesh cell when projecting smooth functions.
pub const PROJECTION_GAUSS_POINTS: usize = 5;

/// Expansion coefficients in basis layout order.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector(DVector<f64>);

impl CoeffVector {
    pub fn zeros(spec: &BasisSpec) -> Self {
        Self(DVector::zeros(spec.n_functions()))
    }

    pub fn from_vec(spec: &BasisSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != spec.n_functions() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                spec.n_functions(),
                values.len()
            )));
        }
        Ok(Self(DVector::from_vec(values)))
    }

    pub(crate) fn from_dvector(v: DVector<f64>) -> Self {
        Self(v)
    }

    pub fn values(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn as_slice(&self) -> &[f64] {
        self.0.as_slice()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

/// Coefficients grouped by scale.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSplit {
    pub coarse: Vec<f64>,
    pub details: BTreeMap<u32, Vec<f64>>,
}

impl LevelSplit {
    pub fn concat(&self) -> Vec<f64> {
        let mut out = self.coarse.clone();
        for block in self.details.values() {
            out.extend_from_slice(block);
        }
        out
    }
}

/// Uniform collocation grid `x_j = j / 2^M`, `j = 0..=2^M`.
pub fn collocation_points(spec: &BasisSpec) -> Vec<f64> {
    let n = spec.n_functions() - 1;
    (0..=n).map(|j| j as f64 / n as f64).collect()
}

/// Matrix whose rows are `Ψ(x)ᵀ` at each of `xs`.
pub fn basis_rows(spec: &BasisSpec, xs: &[f64]) -> Result<DMatrix<f64>> {
    let n = spec.n_functions();
    let mut m = DMatrix::zeros(xs.len(), n);
    for (r, &x) in xs.iter().enumerate() {
        let row = basis_vector(spec, x)?;
        m.row_mut(r).copy_from_slice(&row);
    }
    Ok(m)
}

/// Dual projection: `C = P⁻¹ g` with `g_i = ∫ f Ψ_i`.
pub fn project_l2(
    f: impl Fn(f64) -> f64,
    spec: &BasisSpec,
    dual: &DualTransform,
) -> Result<CoeffVector> {
    let pieces = basis_piecewise(spec);
    let edges = collocation_points(spec);
    let rule = GaussRule::new(PROJECTION_GAUSS_POINTS);
    let mut g = DVector::zeros(spec.n_functions());
    for cell in edges.windows(2) {
        let mid = 0.5 * (cell[0] + cell[1]);
        let active: Vec<(usize, usize)> = pieces
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                let (lo, hi) = p.support();
                (lo.to_f64() < mid && mid < hi.to_f64())
                    .then(|| (i, p.segment_at(mid).expect("inside support")))
            })
            .collect();
        for (x, w) in rule.mapped(cell[0], cell[1]) {
            let fx = f(x);
            if !fx.is_finite() {
                return Err(Error::Input(format!("f({x}) = {fx}")));
            }
            for &(i, seg) in &active {
                g[i] += w * fx * pieces[i].eval_on_segment(seg, x);
            }
        }
    }
    Ok(CoeffVector(dual.matrix() * g))
}

/// Solves `Ψ(x_j)ᵀ C = f(x_j)` on the collocation grid.
pub fn interpolate(f: impl Fn(f64) -> f64, spec: &BasisSpec) -> Result<CoeffVector> {
    let xs = collocation_points(spec);
    let rows = basis_rows(spec, &xs)?;
    let mut rhs = DVector::zeros(xs.len());
    for (r, &x) in xs.iter().enumerate() {
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::Input(format!("f({x}) = {fx}")));
        }
        rhs[r] = fx;
    }
    let lu = DenseLu::factor(&rows, "collocation matrix")?;
    Ok(CoeffVector(lu.solve(&rhs)))
}

/// `Cᵀ Ψ(x)`.
pub fn reconstruct(c: &CoeffVector, spec: &BasisSpec, x: f64) -> Result<f64> {
    check_len(c, spec)?;
    let psi = basis_vector(spec, x)?;
    Ok(c.0.iter().zip(&psi).map(|(a, b)| a * b).sum())
}

fn check_len(c: &CoeffVector, spec: &BasisSpec) -> Result<()> {
    if c.len() == spec.n_functions() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "coefficient vector of length {} does not match basis of {} functions",
            c.len(),
            spec.n_functions()
        )))
    }
}

pub fn split_levels(c: &CoeffVector, spec: &BasisSpec) -> Result<LevelSplit> {
    check_len(c, spec)?;
    let coarse = c.as_slice()[spec.scaling_range()].to_vec();
    let mut details = BTreeMap::new();
    if let Some(finest) = spec.finest_wavelet_level() {
        for level in COARSE_LEVEL..=finest {
            let r = spec.wavelet_range(level).expect("level within basis");
            details.insert(level, c.as_slice()[r].to_vec());
        }
    }
    Ok(LevelSplit { coarse, details })
}

/// Projection onto the resolution-`level` subspace: keeps the scaling block and
/// the wavelet blocks of levels below `level`, zeroing the rest.
/// `truncate(c, M)` is the identity and `truncate(c, 2)` keeps only the
/// scaling functions.
pub fn truncate(c: &CoeffVector, spec: &BasisSpec, level: u32) -> Result<CoeffVector> {
    check_len(c, spec)?;
    if !(COARSE_LEVEL..=spec.max_level()).contains(&level) {
        return Err(Error::InvalidArgument(format!(
            "truncation level must lie in {COARSE_LEVEL}..={}, got {level}",
            spec.max_level()
        )));
    }
    let mut out = c.0.clone();
    for (i, idx) in spec.index_map().iter().enumerate() {
        if idx.kind == BasisKind::Wavelet && idx.level >= level {
            out[i] = 0.0;
        }
    }
    Ok(CoeffVector(out))
}
