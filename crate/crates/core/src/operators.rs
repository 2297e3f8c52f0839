//! Gram matrix, dual transform and the operational matrix of derivatives.
//!
//! The derivative of a piecewise-linear basis function is piecewise constant
//! and does not lie in the span of the basis, so `Ψ' = OD Ψ` holds only as
//! an L² projection: `OD = Q P⁻¹` with `Q_ij = ∫ Ψ'_i Ψ_j` and `P_ij = ∫ Ψ_i Ψ_j`.
//! It is exact whenever the derivative of the expanded function is itself
//! piecewise linear on the mesh (affine functions, in particular).
//! `OD²` composes two such projections.
//!
//! [`Operators::weak_second_derivative`] is the alternative that projects
//! `Ψ''` through integration by parts, `⟨Ψ''_i, Ψ_j⟩ = [Ψ'_i Ψ_j]₀¹ − ∫ Ψ'_i Ψ'_j`,
//! with the boundary slopes taken from `OD`.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use nalgebra::DMatrix;

use crate::basis::{basis_piecewise, basis_vector, BasisSpec, Dyadic, PiecewiseLinear};
use crate::error::Result;
use crate::linalg::{max_abs, DenseLu};
use crate::quadrature::GaussRule;

/// `∫₀¹ a(x) b(x) dx` for piecewise polynomials of degree at most one.
///
/// The overlap of the supports is split at the union of both breakpoint sets
/// and each cell is integrated with two-point Gauss, exact through cubics.
pub fn integrate_product(a: &PiecewiseLinear, b: &PiecewiseLinear) -> f64 {
    let (alo, ahi) = a.support();
    let (blo, bhi) = b.support();
    let lo = alo.max(blo);
    let hi = ahi.min(bhi);
    if lo >= hi {
        return 0.0;
    }
    let mut edges: Vec<Dyadic> = a
        .breakpoints()
        .iter()
        .chain(b.breakpoints())
        .copied()
        .filter(|&p| p >= lo && p <= hi)
        .collect();
    edges.sort_unstable();
    edges.dedup();

    let rule = GaussRule::new(2);
    edges
        .windows(2)
        .map(|cell| {
            let (x0, x1) = (cell[0].to_f64(), cell[1].to_f64());
            let mid = 0.5 * (x0 + x1);
            let ia = a.segment_at(mid).expect("cell inside support");
            let ib = b.segment_at(mid).expect("cell inside support");
            rule.integrate(x0, x1, |x| {
                a.eval_on_segment(ia, x) * b.eval_on_segment(ib, x)
            })
        })
        .sum()
}

/// `P_ij = ∫ Ψ_i Ψ_j`, symmetric positive definite.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix(pub DMatrix<f64>);

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    /// True when an unpivoted Cholesky factorization succeeds.
    pub fn is_positive_definite(&self) -> bool {
        self.0.clone().cholesky().is_some()
    }
}

/// `P⁻¹`; row `i` holds the coefficients of the dual function `Ψ̄_i`.
#[derive(Debug, Clone)]
pub struct DualTransform {
    inverse: DMatrix<f64>,
    condition: f64,
}

impl DualTransform {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.inverse
    }

    /// 1-norm condition number of the Gram matrix.
    pub fn condition(&self) -> f64 {
        self.condition
    }
}

/// Operational matrix mapping `Ψ` to the projection of `Ψ'`.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivOperator(pub DMatrix<f64>);

impl DerivOperator {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }
}

pub fn gram_matrix(spec: &BasisSpec) -> GramMatrix {
    gram_from_pieces(&basis_piecewise(spec))
}

/// Gram matrix of an arbitrary family of piecewise-linear functions.
pub fn gram_from_pieces(pieces: &[PiecewiseLinear]) -> GramMatrix {
    let n = pieces.len();
    let mut p = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = integrate_product(&pieces[i], &pieces[j]);
            p[(i, j)] = v;
            p[(j, i)] = v;
        }
    }
    GramMatrix(p)
}

/// `Q_ij = ∫ Ψ'_i Ψ_j`.
pub fn derivative_moments(pieces: &[PiecewiseLinear]) -> DMatrix<f64> {
    let derivs: Vec<_> = pieces.iter().map(PiecewiseLinear::derivative).collect();
    let n = pieces.len();
    DMatrix::from_fn(n, n, |i, j| integrate_product(&derivs[i], &pieces[j]))
}

pub fn dual_transform(p: &GramMatrix) -> Result<DualTransform> {
    let lu = DenseLu::factor(&p.0, "Gram matrix")?;
    Ok(DualTransform {
        condition: lu.condition(),
        inverse: lu.inverse().clone(),
    })
}

pub fn derivative_matrix(spec: &BasisSpec, p: &GramMatrix) -> Result<DerivOperator> {
    let pieces = basis_piecewise(spec);
    let dual = dual_transform(p)?;
    Ok(DerivOperator(derivative_moments(&pieces) * dual.matrix()))
}

pub fn second_derivative_matrix(od: &DerivOperator) -> DerivOperator {
    DerivOperator(&od.0 * &od.0)
}

/// Everything derived from one basis, built once and shared read-only.
#[derive(Debug, Clone)]
pub struct Operators {
    pub spec: BasisSpec,
    pub pieces: Vec<PiecewiseLinear>,
    pub gram: GramMatrix,
    pub dual: DualTransform,
    /// `∫ Ψ'_i Ψ_j`.
    pub moments: DMatrix<f64>,
    pub od: DerivOperator,
    pub od2: DerivOperator,
}

impl Operators {
    pub fn new(spec: &BasisSpec) -> Result<Self> {
        let pieces = basis_piecewise(spec);
        let gram = gram_from_pieces(&pieces);
        let dual = dual_transform(&gram)?;
        let moments = derivative_moments(&pieces);
        let od = DerivOperator(&moments * dual.matrix());
        let od2 = second_derivative_matrix(&od);
        Ok(Self {
            spec: spec.clone(),
            pieces,
            gram,
            dual,
            moments,
            od,
            od2,
        })
    }

    /// `L = G P⁻¹` with `G_ij = (ODΨ)_i Ψ_j |₀¹ − ∫ Ψ'_i Ψ'_j`.
    ///
    /// Unlike `OD²` it damps the shortest mesh oscillations, at the price of
    /// second-order rather than fourth-order interior accuracy.
    pub fn weak_second_derivative(&self) -> Result<DerivOperator> {
        let n = self.pieces.len();
        let derivs: Vec<_> = self
            .pieces
            .iter()
            .map(PiecewiseLinear::derivative)
            .collect();
        let at = |x: f64| basis_vector(&self.spec, x).map(nalgebra::DVector::from_vec);
        let (psi0, psi1) = (at(0.0)?, at(1.0)?);
        let (slope0, slope1) = (self.od.matrix() * &psi0, self.od.matrix() * &psi1);
        let g = DMatrix::from_fn(n, n, |i, j| {
            slope1[i] * psi1[j] - slope0[i] * psi0[j] - integrate_product(&derivs[i], &derivs[j])
        });
        Ok(DerivOperator(g * self.dual.matrix()))
    }

    /// `max |OD·P - Q|`, zero up to rounding.
    pub fn projection_residual(&self) -> f64 {
        max_abs(&(self.od.matrix() * self.gram.matrix() - &self.moments))
    }

    /// Writes `P`, `Q` and `OD` as `gram.csv`, `moments.csv`, `od.csv`.
    pub fn dump_csv(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        write_matrix_csv(&dir.join("gram.csv"), self.gram.matrix())?;
        write_matrix_csv(&dir.join("moments.csv"), &self.moments)?;
        write_matrix_csv(&dir.join("od.csv"), self.od.matrix())?;
        Ok(())
    }
}

/// Row-major CSV with 17 significant digits.
pub fn write_matrix_csv(path: &Path, m: &DMatrix<f64>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for row in m.row_iter() {
        let line: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{piecewise_of, BasisIndex, BasisKind};
    use approx::assert_abs_diff_eq;

    fn phi(shift: i32) -> PiecewiseLinear {
        piecewise_of(BasisIndex {
            kind: BasisKind::Scaling,
            level: 2,
            shift,
        })
    }

    fn psi(level: u32, shift: i32) -> PiecewiseLinear {
        piecewise_of(BasisIndex {
            kind: BasisKind::Wavelet,
            level,
            shift,
        })
    }

    fn monomial_piece(lo: Dyadic, hi: Dyadic, slope: f64, at_lo: f64) -> PiecewiseLinear {
        let w = hi.to_f64() - lo.to_f64();
        PiecewiseLinear::from_nodes(vec![lo, hi], &[at_lo, at_lo + slope * w]).unwrap()
    }

    #[test]
    fn hand_integrated_pairs() {
        let d = Dyadic::new;
        let unit = monomial_piece(d(0, 0), d(1, 0), 0.0, 1.0);
        let x = monomial_piece(d(0, 0), d(1, 0), 1.0, 0.0);
        let one_minus_x = monomial_piece(d(0, 0), d(1, 0), -1.0, 1.0);
        let x_half = monomial_piece(d(1, 1), d(1, 0), 1.0, 0.5);
        let two_x_quarter = monomial_piece(d(1, 2), d(3, 2), 2.0, 0.5);

        // Values obtained from closed-form antiderivatives; cells of width h
        // carrying node values (a, b), (c, d) integrate to
        // h/6 (2ac + ad + bc + 2bd).
        let cases: Vec<(PiecewiseLinear, PiecewiseLinear, f64)> = vec![
            (phi(-1), phi(-1), 1.0 / 12.0),
            (phi(0), phi(2), 0.0),
            (phi(0), phi(0), 1.0 / 6.0),
            (phi(0), phi(1), 1.0 / 24.0),
            (phi(3), phi(3), 1.0 / 12.0),
            (phi(-1).derivative(), phi(-1), -0.5),
            (phi(0).derivative(), phi(0), 0.0),
            (phi(0).derivative(), phi(1), -0.5),
            (phi(1).derivative(), phi(0), 0.5),
            (psi(2, 0), psi(2, 0), 1.0 / 16.0),
            (psi(2, -1), psi(2, -1), 2.0 / 27.0),
            (psi(2, -1), unit.clone(), 0.0),
            (psi(2, 0), phi(0), 0.0),
            (psi(2, -1), phi(-1), 0.0),
            (psi(2, -1).derivative(), psi(2, -1), -0.5),
            (unit.clone(), unit.clone(), 1.0),
            (x.clone(), x.clone(), 1.0 / 3.0),
            (x.clone(), one_minus_x.clone(), 1.0 / 6.0),
            (x_half.clone(), x.clone(), 7.0 / 24.0),
            (two_x_quarter, x.derivative(), 0.5),
            (phi(1), x.clone(), 0.125),
            (phi(0), unit.clone(), 0.25),
        ];
        for (i, (a, b, expected)) in cases.iter().enumerate() {
            let v = integrate_product(a, b);
            assert!((v - expected).abs() <= 1e-14, "pair {i}: {v} vs {expected}");
        }
    }

    #[test]
    fn partition_of_unity_integrates_to_one() {
        let total: f64 = (-1..=3)
            .map(|k| {
                let ones = monomial_piece(Dyadic::new(0, 0), Dyadic::new(1, 0), 0.0, 1.0);
                integrate_product(&phi(k), &ones)
            })
            .sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn gram_structure() {
        for m in 2..=6 {
            let spec = BasisSpec::new(m).unwrap();
            let p = gram_matrix(&spec);
            assert_eq!(p.matrix(), &p.matrix().transpose());
            assert!(p.is_positive_definite());
            let map = spec.index_map();
            for i in 0..p.size() {
                for j in 0..p.size() {
                    let (a, b) = (map[i], map[j]);
                    let mixed = a.kind != b.kind;
                    let cross_level = a.kind == BasisKind::Wavelet
                        && b.kind == BasisKind::Wavelet
                        && a.level != b.level;
                    if mixed || cross_level {
                        assert!(p.matrix()[(i, j)].abs() <= 1e-12, "{a} {b}");
                    }
                }
            }
        }
        let p = gram_matrix(&BasisSpec::new(3).unwrap());
        assert_abs_diff_eq!(p.matrix()[(0, 0)], 1.0 / 12.0, epsilon = 1e-15);
    }

    #[test]
    fn dual_identity() {
        for m in 2..=7 {
            let spec = BasisSpec::new(m).unwrap();
            let p = gram_matrix(&spec);
            let dual = dual_transform(&p).unwrap();
            let id = p.matrix() * dual.matrix();
            let dev = max_abs(&(id - DMatrix::identity(p.size(), p.size())));
            assert!(dev <= 1e-10, "M = {m}: {dev}");
            assert!(dual.condition() < 1e6);
        }
    }

    #[test]
    fn dual_function_biorthogonality() {
        // Dual of φ_{2,0} built explicitly as a combination of basis pieces.
        let spec = BasisSpec::new(3).unwrap();
        let pieces = basis_piecewise(&spec);
        let dual = dual_transform(&gram_from_pieces(&pieces)).unwrap();
        let row = dual.matrix().row(1);
        let inner: f64 = pieces
            .iter()
            .zip(row.iter())
            .map(|(p, &c)| c * integrate_product(p, &pieces[1]))
            .sum();
        assert_abs_diff_eq!(inner, 1.0, epsilon = 1e-12);
        let off: f64 = pieces
            .iter()
            .zip(row.iter())
            .map(|(p, &c)| c * integrate_product(p, &pieces[6]))
            .sum();
        assert_abs_diff_eq!(off, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn rescaled_basis_rescales_dual() {
        let spec = BasisSpec::new(4).unwrap();
        let mut pieces = basis_piecewise(&spec);
        let base = dual_transform(&gram_from_pieces(&pieces)).unwrap();
        let k = 7;
        let c = -3.5;
        pieces[k] = pieces[k].scaled(c);
        let scaled = dual_transform(&gram_from_pieces(&pieces)).unwrap();
        // Ψ̄_k = Σ_j (P⁻¹)_kj Ψ_j; with Ψ_k → cΨ_k the dual becomes Ψ̄_k / c.
        for x in [0.1, 0.33, 0.5, 0.81] {
            let eval_dual = |d: &DualTransform, pcs: &[PiecewiseLinear]| -> f64 {
                pcs.iter()
                    .zip(d.matrix().row(k).iter())
                    .map(|(p, &w)| w * p.eval(x))
                    .sum()
            };
            let a = eval_dual(&base, &basis_piecewise(&spec));
            let b = eval_dual(&scaled, &pieces);
            assert_abs_diff_eq!(b, a / c, epsilon = 1e-9);
        }
    }

    #[test]
    fn moment_row_sums_are_boundary_jumps() {
        let spec = BasisSpec::new(3).unwrap();
        let pieces = basis_piecewise(&spec);
        let q = derivative_moments(&pieces);
        for (i, p) in pieces.iter().enumerate() {
            // The scaling block sums to the constant one.
            let row_sum: f64 = (0..5).map(|j| q[(i, j)]).sum();
            assert_abs_diff_eq!(row_sum, p.eval(1.0) - p.eval(0.0), epsilon = 1e-13);
        }
    }

    #[test]
    fn projection_consistency() {
        for m in 2..=6 {
            let ops = Operators::new(&BasisSpec::new(m).unwrap()).unwrap();
            assert!(ops.projection_residual() <= 1e-10);
            let od2 = second_derivative_matrix(&ops.od);
            assert_eq!(od2, ops.od2);
        }
    }

    #[test]
    fn derivative_matrix_matches_bundle() {
        let spec = BasisSpec::new(4).unwrap();
        let od = derivative_matrix(&spec, &gram_matrix(&spec)).unwrap();
        let ops = Operators::new(&spec).unwrap();
        assert!(max_abs(&(od.matrix() - ops.od.matrix())) <= 1e-12);
    }

    #[test]
    fn csv_dump() {
        let dir = tempfile::tempdir().unwrap();
        let ops = Operators::new(&BasisSpec::new(2).unwrap()).unwrap();
        ops.dump_csv(dir.path()).unwrap();
        let text = std::fs::read_to_string(dir.path().join("gram.csv")).unwrap();
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows.len(), 5);
        let first: f64 = rows[0].split(',').next().unwrap().parse().unwrap();
        assert_eq!(first, ops.gram.matrix()[(0, 0)]);
    }

    #[test]
    fn weak_second_derivative_annihilates_affine() {
        for m in 2..=6 {
            let ops = Operators::new(&BasisSpec::new(m).unwrap()).unwrap();
            let l = ops.weak_second_derivative().unwrap();
            let c = crate::approx::interpolate(|x| 0.3 - 1.7 * x, &ops.spec).unwrap();
            let g = l.matrix().transpose() * c.values();
            assert!(g.amax() < 1e-9, "M={m}: {}", g.amax());
        }
    }

    #[test]
    fn weak_second_derivative_of_sine() {
        let spec = BasisSpec::new(5).unwrap();
        let ops = Operators::new(&spec).unwrap();
        let l = ops.weak_second_derivative().unwrap();
        let c = crate::approx::interpolate(|x| (std::f64::consts::PI * x).sin(), &spec).unwrap();
        let g = l.matrix().transpose() * c.values();
        let h = 1.0 / 32.0;
        for k in 4..=28 {
            let x = k as f64 * h;
            let psi = nalgebra::DVector::from_vec(basis_vector(&spec, x).unwrap());
            let expect = -std::f64::consts::PI.powi(2) * (std::f64::consts::PI * x).sin();
            assert_abs_diff_eq!(g.dot(&psi), expect, epsilon = 5e-2);
        }
    }

    #[test]
    fn only_weak_form_damps_mesh_sawtooth() {
        let spec = BasisSpec::new(5).unwrap();
        let ops = Operators::new(&spec).unwrap();
        let c = crate::approx::interpolate(
            |x| {
                if (x * 32.0).round() as i64 % 2 == 0 {
                    1.0
                } else {
                    -1.0
                }
            },
            &spec,
        )
        .unwrap();
        let at_centre = |m: &DMatrix<f64>| {
            let psi = nalgebra::DVector::from_vec(basis_vector(&spec, 0.5).unwrap());
            (m.transpose() * c.values()).dot(&psi)
        };
        let weak = at_centre(ops.weak_second_derivative().unwrap().matrix());
        let projected = at_centre(ops.od2.matrix());
        assert!(weak < -1000.0);
        assert!(projected.abs() < 1e-3 * weak.abs());
    }
}
