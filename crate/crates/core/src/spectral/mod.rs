//! Symmetric eigenvalue computation plus the special functions (modified
//! Bessel I0/I1, Lambert W) behind the closed-form oracles and the
//! phase-transition thresholds.

mod bessel;
mod eigen;
mod lambert;

pub use bessel::{bessel_i, bessel_i0, bessel_i0_scaled, bessel_i1, bessel_i1_scaled};
pub use eigen::{eigenvalues_sym, eigenvalues_sym_with_cap, DEFAULT_DENSE_CAP, DEFAULT_EIG_TOL};
pub use lambert::{lambert_w, lambert_w0, lambert_w_minus1};

use crate::error::{Error, Result};

/// Real eigenvalues of a symmetric matrix, sorted descending
/// (`values[0]` is the largest).
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    /// Wraps eigenvalues, sorting them descending. Non-finite entries are a
    /// numeric error.
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|x| !x.is_finite()) {
            return Err(Error::numeric("spectrum has non-finite entries"));
        }
        values.sort_unstable_by(|a, b| b.partial_cmp(a).expect("finite values"));
        Ok(Spectrum { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Eigenvalues in descending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Largest eigenvalue.
    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    /// Smallest eigenvalue.
    pub fn smallest(&self) -> f64 {
        self.values[self.values.len() - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_sorts_descending() {
        let s = Spectrum::new(vec![1.0, 3.0, -2.0]).unwrap();
        assert_eq!(s.values(), &[3.0, 1.0, -2.0]);
        assert_eq!(s.largest(), 3.0);
        assert_eq!(s.smallest(), -2.0);
    }

    #[test]
    fn spectrum_rejects_non_finite() {
        assert!(Spectrum::new(vec![1.0, f64::INFINITY]).is_err());
        assert!(Spectrum::new(vec![f64::NAN]).is_err());
    }
}
