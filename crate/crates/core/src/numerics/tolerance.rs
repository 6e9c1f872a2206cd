use crate::error::{Error, Result};

/// Tolerances shared by every numeric operation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TolerancePolicy {
    /// Root-finder convergence.
    pub eps_root: f64,
    /// Geometric assertions (tangency, unimodularity, ratios).
    pub eps_geom: f64,
    /// Width of the band used for boundary classification.
    pub eps_count: f64,
    pub max_iter: usize,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self {
            eps_root: 1e-12,
            eps_geom: 1e-9,
            eps_count: 1e-9,
            max_iter: 200,
        }
    }
}

impl TolerancePolicy {
    pub fn new(eps_root: f64, eps_geom: f64, eps_count: f64, max_iter: usize) -> Result<Self> {
        let policy = Self {
            eps_root,
            eps_geom,
            eps_count,
            max_iter,
        };
        policy.validate()?;
        Ok(policy)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.eps_root) {
            return Err(Error::InvalidTolerance("eps_root must be positive"));
        }
        if !positive(self.eps_geom) {
            return Err(Error::InvalidTolerance("eps_geom must be positive"));
        }
        if !positive(self.eps_count) {
            return Err(Error::InvalidTolerance("eps_count must be positive"));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidTolerance("max_iter must be at least 1"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let t = TolerancePolicy::default();
        assert_eq!(t.eps_root, 1e-12);
        assert_eq!(t.eps_geom, 1e-9);
        assert_eq!(t.eps_count, 1e-9);
        assert_eq!(t.max_iter, 200);
        assert!(t.validate().is_ok());
    }

    #[test]
    fn rejects_bad_values() {
        assert!(TolerancePolicy::new(0.0, 1e-9, 1e-9, 10).is_err());
        assert!(TolerancePolicy::new(1e-12, -1.0, 1e-9, 10).is_err());
        assert!(TolerancePolicy::new(1e-12, 1e-9, f64::NAN, 10).is_err());
        assert!(TolerancePolicy::new(1e-12, 1e-9, 1e-9, 0).is_err());
    }
}
