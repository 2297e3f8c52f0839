//! Linear B-spline scaling functions and semi-orthogonal wavelets on `[0, 1]`.
//!
//! The basis at resolution `M` holds the five level-2 scaling functions
//! `φ_{2,-1..3}` followed by the wavelet blocks `ψ_{i,-1..2^i-2}` for
//! `i = 2..M-1`. Its span is the space of continuous piecewise-linear
//! functions on the uniform mesh of width `2^-M`, so it has `2^M + 1`
//! members, which is also the number of collocation points.
//!
//! All evaluations use the dilated coordinate `x_j = 2^j x`. Branches are
//! matched on closed intervals; since every function is continuous this
//! only matters at `x = 1`, where it yields the left limit.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Spline order. Only linear splines are supported.
pub const SPLINE_ORDER: u32 = 2;

/// Coarsest level; `2^2 >= 2m - 1` is the first level admitting an inner wavelet.
pub const COARSE_LEVEL: u32 = 2;

/// Largest supported resolution. `2^12 + 1` functions is far past desk scale.
pub const MAX_RESOLUTION: u32 = 12;

/// Exact dyadic rational `num / 2^exp`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: i64, exp: u32) -> Self {
        let mut d = Self { num, exp };
        while d.exp > 0 && d.num % 2 == 0 {
            d.num /= 2;
            d.exp -= 1;
        }
        if d.num == 0 {
            d.exp = 0;
        }
        d
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn exponent(self) -> u32 {
        self.exp
    }

    /// Exact for every value representable here (`|num| < 2^53`).
    pub fn to_f64(self) -> f64 {
        self.num as f64 / (1u64 << self.exp) as f64
    }

    /// True when this value is an integer multiple of `2^-exp`.
    pub fn is_multiple_of_pow2_inv(self, exp: u32) -> bool {
        self.exp <= exp
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        let a = (self.num as i128) << (e - self.exp);
        let b = (other.num as i128) << (e - other.exp);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.exp)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Scaling,
    Wavelet,
}

/// Position of one function in the basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub kind: BasisKind,
    pub level: u32,
    pub shift: i32,
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.kind {
            BasisKind::Scaling => "phi",
            BasisKind::Wavelet => "psi",
        };
        write!(f, "{sym}[{},{}]", self.level, self.shift)
    }
}

/// Index layout of the basis at a given resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSpec {
    resolution: u32,
    index_map: Vec<BasisIndex>,
}

impl BasisSpec {
    /// Basis spanning the piecewise-linear space on the `2^-resolution` mesh.
    pub fn new(resolution: u32) -> Result<Self> {
        if !(COARSE_LEVEL..=MAX_RESOLUTION).contains(&resolution) {
            return Err(Error::InvalidArgument(format!(
                "resolution must lie in {COARSE_LEVEL}..={MAX_RESOLUTION}, got {resolution}"
            )));
        }
        let mut index_map = Vec::with_capacity((1usize << resolution) + 1);
        for shift in -1..=3 {
            index_map.push(BasisIndex {
                kind: BasisKind::Scaling,
                level: COARSE_LEVEL,
                shift,
            });
        }
        for level in COARSE_LEVEL..resolution {
            for shift in -1..=((1i32 << level) - 2) {
                index_map.push(BasisIndex {
                    kind: BasisKind::Wavelet,
                    level,
                    shift,
                });
            }
        }
        Ok(Self {
            resolution,
            index_map,
        })
    }

    /// Basis with `n_points = 2^M + 1` members.
    pub fn from_n_points(n_points: usize) -> Result<Self> {
        let cells = n_points.checked_sub(1).filter(|c| c.is_power_of_two());
        match cells {
            Some(c) if c >= 4 => Self::new(c.trailing_zeros()),
            _ => Err(Error::InvalidArgument(format!(
                "number of points must be 2^M + 1 with M >= 2, got {n_points}"
            ))),
        }
    }

    /// The resolution `M`; the mesh width is `2^-M`.
    pub fn max_level(&self) -> u32 {
        self.resolution
    }

    pub fn order(&self) -> u32 {
        SPLINE_ORDER
    }

    pub fn n_functions(&self) -> usize {
        self.index_map.len()
    }

    /// Finest wavelet level present, or `None` for the scaling-only basis.
    pub fn finest_wavelet_level(&self) -> Option<u32> {
        (self.resolution > COARSE_LEVEL).then_some(self.resolution - 1)
    }

    pub fn index_map(&self) -> &[BasisIndex] {
        &self.index_map
    }

    /// Positions of the scaling block.
    pub fn scaling_range(&self) -> std::ops::Range<usize> {
        0..5
    }

    /// Positions of the wavelet block at `level`, if present.
    pub fn wavelet_range(&self, level: u32) -> Option<std::ops::Range<usize>> {
        if level < COARSE_LEVEL || level >= self.resolution {
            return None;
        }
        // 5 scaling functions plus 2^2 + ... + 2^(level-1) wavelets.
        let start = 5 + (1usize << level) - (1usize << COARSE_LEVEL);
        Some(start..start + (1usize << level))
    }

    fn check_scaling(&self, level: u32, shift: i32) -> Result<()> {
        let ok = (COARSE_LEVEL..=self.resolution).contains(&level)
            && (-1..=(1i32 << level) - 1).contains(&shift);
        if ok {
            Ok(())
        } else {
            Err(self.invalid("scaling", level, shift))
        }
    }

    fn check_wavelet(&self, level: u32, shift: i32) -> Result<()> {
        let ok = (COARSE_LEVEL..self.resolution).contains(&level)
            && (-1..=(1i32 << level) - 2).contains(&shift);
        if ok {
            Ok(())
        } else {
            Err(self.invalid("wavelet", level, shift))
        }
    }

    fn invalid(&self, kind: &'static str, level: u32, shift: i32) -> Error {
        Error::InvalidIndex {
            kind,
            level,
            shift,
            resolution: self.resolution,
        }
    }
}

fn check_x(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "x",
            value: x,
            domain: "[0, 1]",
        })
    }
}

/// Hat function `φ_{level,shift}`, with truncated hats at both ends.
pub fn eval_scaling(spec: &BasisSpec, level: u32, shift: i32, x: f64) -> Result<f64> {
    spec.check_scaling(level, shift)?;
    check_x(x)?;
    Ok(scaling_unchecked(level, shift, x))
}

/// Wavelet `ψ_{level,shift}`: inner, left-boundary (`shift = -1`) or
/// right-boundary (`shift = 2^level - 2`).
pub fn eval_wavelet(spec: &BasisSpec, level: u32, shift: i32, x: f64) -> Result<f64> {
    spec.check_wavelet(level, shift)?;
    check_x(x)?;
    Ok(wavelet_unchecked(level, shift, x))
}

pub fn eval_index(spec: &BasisSpec, index: BasisIndex, x: f64) -> Result<f64> {
    match index.kind {
        BasisKind::Scaling => eval_scaling(spec, index.level, index.shift, x),
        BasisKind::Wavelet => eval_wavelet(spec, index.level, index.shift, x),
    }
}

fn scaling_unchecked(level: u32, shift: i32, x: f64) -> f64 {
    let xj = dilate(level, x);
    let k = f64::from(shift);
    let last = (1i32 << level) - 1;
    if shift == -1 {
        if (0.0..=1.0).contains(&xj) {
            2.0 - (xj - k)
        } else {
            0.0
        }
    } else if shift == last {
        if (k..=k + 1.0).contains(&xj) {
            xj - k
        } else {
            0.0
        }
    } else {
        let s = xj - k;
        if (0.0..=1.0).contains(&s) {
            s
        } else if s > 1.0 && s <= 2.0 {
            2.0 - s
        } else {
            0.0
        }
    }
}

fn wavelet_unchecked(level: u32, shift: i32, x: f64) -> f64 {
    let xj = dilate(level, x);
    let k = f64::from(shift);
    let last = (1i32 << level) - 2;
    let v = if shift == -1 {
        match xj {
            t if (0.0..=0.5).contains(&t) => -6.0 + 23.0 * t,
            t if t > 0.5 && t <= 1.0 => 14.0 - 17.0 * t,
            t if t > 1.0 && t <= 1.5 => -10.0 + 7.0 * t,
            t if t > 1.5 && t <= 2.0 => 2.0 - t,
            _ => 0.0,
        }
    } else if shift == last {
        let r = k + 2.0 - xj;
        match xj - k {
            s if (0.0..=0.5).contains(&s) => 2.0 - r,
            s if s > 0.5 && s <= 1.0 => -10.0 + 7.0 * r,
            s if s > 1.0 && s <= 1.5 => 14.0 - 17.0 * r,
            s if s > 1.5 && s <= 2.0 => -6.0 + 23.0 * r,
            _ => 0.0,
        }
    } else {
        match xj - k {
            s if (0.0..=0.5).contains(&s) => s,
            s if s > 0.5 && s <= 1.0 => 4.0 - 7.0 * s,
            s if s > 1.0 && s <= 1.5 => -19.0 + 16.0 * s,
            s if s > 1.5 && s <= 2.0 => 29.0 - 16.0 * s,
            s if s > 2.0 && s <= 2.5 => -17.0 + 7.0 * s,
            s if s > 2.5 && s <= 3.0 => 3.0 - s,
            _ => 0.0,
        }
    };
    v / 6.0
}

fn dilate(level: u32, x: f64) -> f64 {
    // Power-of-two scaling is exact.
    x * (1u64 << level) as f64
}

fn eval_index_unchecked(index: BasisIndex, x: f64) -> f64 {
    match index.kind {
        BasisKind::Scaling => scaling_unchecked(index.level, index.shift, x),
        BasisKind::Wavelet => wavelet_unchecked(index.level, index.shift, x),
    }
}

/// `Ψ(x)` in layout order.
pub fn basis_vector(spec: &BasisSpec, x: f64) -> Result<Vec<f64>> {
    check_x(x)?;
    Ok(spec
        .index_map
        .iter()
        .map(|&idx| eval_index_unchecked(idx, x))
        .collect())
}

/// One affine piece: `start_value + slope * (x - left breakpoint)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub slope: f64,
    pub start_value: f64,
}

/// Piecewise polynomial of degree at most one with exact dyadic breakpoints,
/// identically zero outside `[breakpoints[0], breakpoints[last]]`.
///
/// Derivatives of these functions are stored in the same form with zero slopes;
/// they may jump at breakpoints, where point values are not meaningful.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    breakpoints: Vec<Dyadic>,
    segments: Vec<Segment>,
}

impl PiecewiseLinear {
    pub fn new(breakpoints: Vec<Dyadic>, segments: Vec<Segment>) -> Result<Self> {
        if breakpoints.len() < 2 || segments.len() + 1 != breakpoints.len() {
            return Err(Error::InvalidArgument(format!(
                "{} breakpoints cannot carry {} segments",
                breakpoints.len(),
                segments.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        Ok(Self {
            breakpoints,
            segments,
        })
    }

    /// Continuous interpolant of `values` at the given breakpoints.
    pub fn from_nodes(breakpoints: Vec<Dyadic>, values: &[f64]) -> Result<Self> {
        if values.len() != breakpoints.len() {
            return Err(Error::InvalidArgument(
                "one value per breakpoint required".into(),
            ));
        }
        let segments = breakpoints
            .windows(2)
            .zip(values.windows(2))
            .map(|(b, v)| Segment {
                slope: (v[1] - v[0]) / (b[1].to_f64() - b[0].to_f64()),
                start_value: v[0],
            })
            .collect();
        Self::new(breakpoints, segments)
    }

    pub fn breakpoints(&self) -> &[Dyadic] {
        &self.breakpoints
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn support(&self) -> (Dyadic, Dyadic) {
        (self.breakpoints[0], *self.breakpoints.last().unwrap())
    }

    /// Index of a segment containing `x`, the first one on ties.
    pub fn segment_at(&self, x: f64) -> Option<usize> {
        let (lo, hi) = self.support();
        if x < lo.to_f64() || x > hi.to_f64() {
            return None;
        }
        let n = self.segments.len();
        let i = self.breakpoints[1..].partition_point(|b| b.to_f64() < x);
        Some(i.min(n - 1))
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self.segment_at(x) {
            Some(i) => self.eval_on_segment(i, x),
            None => 0.0,
        }
    }

    pub fn eval_on_segment(&self, i: usize, x: f64) -> f64 {
        let s = self.segments[i];
        s.start_value + s.slope * (x - self.breakpoints[i].to_f64())
    }

    /// Piecewise-constant derivative.
    pub fn derivative(&self) -> Self {
        Self {
            breakpoints: self.breakpoints.clone(),
            segments: self
                .segments
                .iter()
                .map(|s| Segment {
                    slope: 0.0,
                    start_value: s.slope,
                })
                .collect(),
        }
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            breakpoints: self.breakpoints.clone(),
            segments: self
                .segments
                .iter()
                .map(|s| Segment {
                    slope: c * s.slope,
                    start_value: c * s.start_value,
                })
                .collect(),
        }
    }
}

fn breakpoints_of(index: BasisIndex) -> Vec<Dyadic> {
    let n = 1i64 << index.level;
    let k = i64::from(index.shift);
    match index.kind {
        BasisKind::Scaling => (k.max(0)..=(k + 2).min(n))
            .map(|m| Dyadic::new(m, index.level))
            .collect(),
        BasisKind::Wavelet => {
            // Half-integer knots in x_j, i.e. multiples of 2^-(level+1) in x.
            let (first, last) = if index.shift == -1 {
                (0, 4)
            } else if k == n - 2 {
                (2 * k, 2 * k + 4)
            } else {
                (2 * k, 2 * k + 6)
            };
            (first..=last)
                .map(|m| Dyadic::new(m, index.level + 1))
                .collect()
        }
    }
}

/// Exact segment representation of one basis function.
pub fn piecewise_of(index: BasisIndex) -> PiecewiseLinear {
    let bps = breakpoints_of(index);
    let values: Vec<f64> = bps
        .iter()
        .map(|b| eval_index_unchecked(index, b.to_f64()))
        .collect();
    PiecewiseLinear::from_nodes(bps, &values).expect("basis breakpoints are well formed")
}

/// Segment representation of every basis function, in layout order.
pub fn basis_piecewise(spec: &BasisSpec) -> Vec<PiecewiseLinear> {
    spec.index_map
        .iter()
        .map(|&idx| piecewise_of(idx))
        .collect()
}
