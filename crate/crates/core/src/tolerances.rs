use crate::error::{Error, Result};

/// Accuracy knobs shared by every numerical route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Absolute quadrature tolerance; also the noise floor for densities.
    pub quad_abs: f64,
    pub quad_rel: f64,
    /// Largest wavenumber (in units of 1/a) a momentum-space quadrature may
    /// reach along the real axis.
    pub k_cutoff: f64,
    /// Half width of the Taylor window around removable singularities,
    /// relative to the wavenumber of the singular point.
    pub singularity_window: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            quad_abs: 1e-10,
            quad_rel: 1e-8,
            k_cutoff: 400.0,
            singularity_window: 1e-6,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("quad_abs", self.quad_abs),
            ("quad_rel", self.quad_rel),
            ("k_cutoff", self.k_cutoff),
            ("singularity_window", self.singularity_window),
        ];
        for (name, value) in fields {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::param(name, format!("must be finite and > 0, got {value}")));
            }
        }
        Ok(())
    }

    pub fn quadrature(&self) -> crate::quadrature::Quadrature {
        crate::quadrature::Quadrature::new(self.quad_abs, self.quad_rel)
    }
}
