//! Dense LU with a 1-norm condition number guard.

use nalgebra::{DMatrix, DVector, Dyn, LU};

use crate::error::{Error, Result};

/// Factorizations whose 1-norm condition number exceeds this are rejected.
pub const CONDITION_LIMIT: f64 = 1e12;

pub fn norm1(a: &DMatrix<f64>) -> f64 {
    a.column_iter()
        .map(|c| c.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

pub fn max_abs(a: &DMatrix<f64>) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.abs()))
}

#[derive(Debug, Clone)]
pub struct DenseLu {
    lu: LU<f64, Dyn, Dyn>,
    inverse: DMatrix<f64>,
    condition: f64,
}

impl DenseLu {
    /// Partial-pivoting LU of `a`. The condition number is computed exactly
    /// from the explicit inverse, which is affordable at the sizes used here.
    pub fn factor(a: &DMatrix<f64>, context: &str) -> Result<Self> {
        assert!(a.is_square(), "LU of a non-square matrix");
        let lu = a.clone().lu();
        let fail = |condition| Error::Conditioning {
            context: context.to_string(),
            condition,
        };
        let inverse = lu.try_inverse().ok_or_else(|| fail(f64::INFINITY))?;
        let condition = norm1(a) * norm1(&inverse);
        if !condition.is_finite() || condition > CONDITION_LIMIT {
            return Err(fail(condition));
        }
        Ok(Self {
            lu,
            inverse,
            condition,
        })
    }

    pub fn condition(&self) -> f64 {
        self.condition
    }

    pub fn inverse(&self) -> &DMatrix<f64> {
        &self.inverse
    }

    pub fn solve(&self, b: &DVector<f64>) -> DVector<f64> {
        self.lu
            .solve(b)
            .expect("factorization was checked to be non-singular")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_system() {
        let a = DMatrix::from_row_slice(3, 3, &[4.0, 1.0, 0.0, 1.0, 3.0, 1.0, 0.0, 1.0, 2.0]);
        let lu = DenseLu::factor(&a, "test").unwrap();
        let b = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        let x = lu.solve(&b);
        assert!((&a * x - b).amax() < 1e-14);
        assert!(lu.condition() > 1.0 && lu.condition() < 10.0);
    }

    #[test]
    fn rejects_singular() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert!(matches!(
            DenseLu::factor(&a, "test"),
            Err(Error::Conditioning { .. })
        ));
    }

    #[test]
    fn rejects_ill_conditioned() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 1e-14]);
        let err = DenseLu::factor(&a, "nearly singular").unwrap_err();
        assert!(err.to_string().contains("nearly singular"));
    }
}
