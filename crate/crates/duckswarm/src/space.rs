//! Box-bounded search spaces and boundary repair.

use crate::error::{Error, Result};

/// A rectangular feasible region: `lower[j] <= x[j] <= upper[j]` for every
/// dimension `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    /// Builds a space from per-dimension bounds. Every lower bound must be
    /// strictly below its upper bound.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidSpace("dimension must be >= 1".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::InvalidSpace(format!(
                "bound lengths differ: {} vs {}",
                lower.len(),
                upper.len()
            )));
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) {
                return Err(Error::InvalidSpace(format!(
                    "lower[{j}] = {lo} must be < upper[{j}] = {hi}"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// Symmetric box `[-half, half]^dim`.
    pub fn symmetric(half: f64, dim: usize) -> Result<Self> {
        Self::new(vec![-half; dim], vec![half; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Saturates each coordinate into its bounds, in place.
    pub fn clamp_in_place(&self, pos: &mut [f64]) {
        debug_assert_eq!(pos.len(), self.dim());
        for (x, (lo, hi)) in pos.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *x = x.clamp(*lo, *hi);
        }
    }

    pub fn contains(&self, pos: &[f64]) -> bool {
        pos.len() == self.dim()
            && pos
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(x, (lo, hi))| *lo <= *x && *x <= *hi)
    }
}

/// Coordinate-wise clamp of `pos` into `space`, returning the repaired
/// vector. In-bounds inputs come back unchanged.
pub fn clamp_to_space(pos: &[f64], space: &SearchSpace) -> Vec<f64> {
    let mut out = pos.to_vec();
    space.clamp_in_place(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_bounds() {
        assert!(SearchSpace::new(vec![0.0], vec![0.0]).is_err());
        assert!(SearchSpace::new(vec![1.0], vec![-1.0]).is_err());
        assert!(SearchSpace::new(vec![], vec![]).is_err());
    }

    #[test]
    fn clamp_saturates_out_of_range() {
        let space = SearchSpace::symmetric(100.0, 2).unwrap();
        assert_eq!(clamp_to_space(&[150.0, -150.0], &space), vec![100.0, -100.0]);
    }

    #[test]
    fn clamp_is_identity_on_interior_and_boundary() {
        let space = SearchSpace::symmetric(100.0, 2).unwrap();
        assert_eq!(clamp_to_space(&[0.0, 0.0], &space), vec![0.0, 0.0]);
        assert_eq!(clamp_to_space(&[-100.0, 100.0], &space), vec![-100.0, 100.0]);
    }
}
