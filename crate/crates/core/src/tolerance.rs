use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::RealScalar;

/// Numerical thresholds shared by every computation.
///
/// `rank_rel_tol` decides numerical rank: a singular value counts when it
/// exceeds `rank_rel_tol · σ_max · max(rows, cols)`. `compare_tol` is the
/// tolerance for angle and containment decisions. When `clamp_cos` is set,
/// cosines fed to `arccos` are clamped into `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub rank_rel_tol: f64,
    pub compare_tol: f64,
    pub clamp_cos: bool,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            rank_rel_tol: 1e-12,
            compare_tol: 1e-9,
            clamp_cos: true,
        }
    }
}

impl ToleranceConfig {
    pub fn new(rank_rel_tol: f64, compare_tol: f64, clamp_cos: bool) -> Result<Self> {
        let cfg = Self {
            rank_rel_tol,
            compare_tol,
            clamp_cos,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Looser thresholds suited to `f32` computations.
    pub fn single_precision() -> Self {
        Self {
            rank_rel_tol: 1e-6,
            compare_tol: 1e-4,
            clamp_cos: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.rank_rel_tol > 0.0
            && self.rank_rel_tol < self.compare_tol
            && self.compare_tol < 1.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidTolerance(format!(
                "need 0 < rank_rel_tol ({}) < compare_tol ({}) < 1",
                self.rank_rel_tol, self.compare_tol
            )))
        }
    }

    pub(crate) fn rank_tol<R: RealScalar>(&self) -> R {
        R::lit(self.rank_rel_tol)
    }

    pub(crate) fn tol<R: RealScalar>(&self) -> R {
        R::lit(self.compare_tol)
    }

    /// `arccos` honoring the clamping policy.
    pub fn acos<R: RealScalar>(&self, c: R) -> R {
        if self.clamp_cos {
            clamp_unit(c).acos()
        } else {
            c.acos()
        }
    }
}

pub(crate) fn clamp_unit<R: RealScalar>(x: R) -> R {
    x.max(R::zero()).min(R::one())
}
