//! Position-space wave functions that the generic routes (Wigner transform,
//! overlap quadratures) can consume.

use std::f64::consts::PI;

use num_complex::Complex64;

pub trait WaveFunction: Send + Sync {
    fn amplitude(&self, x: f64) -> Complex64;

    /// Half width beyond which the amplitude is zero or negligible (< 1e-12).
    fn extent(&self) -> f64;

    /// Points where the wave function or its derivative is not smooth.
    fn kinks(&self) -> Vec<f64> {
        Vec::new()
    }
}

/// Real Gaussian wave packet centred at zero with position variance `variance`.
/// The oscillator ground state has variance hbar / (2 m omega).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPacket {
    pub variance: f64,
}

impl GaussianPacket {
    pub fn oscillator_ground_state(omega: f64) -> Self {
        GaussianPacket {
            variance: 0.5 / omega,
        }
    }

    pub fn psi(&self, x: f64) -> f64 {
        (-x * x / (4.0 * self.variance)).exp() / (2.0 * PI * self.variance).powf(0.25)
    }

    /// Momentum amplitude; its variance is hbar^2 / (4 variance).
    pub fn psi_momentum(&self, p: f64) -> f64 {
        let var_p = 0.25 / self.variance;
        (-p * p / (4.0 * var_p)).exp() / (2.0 * PI * var_p).powf(0.25)
    }
}

impl WaveFunction for GaussianPacket {
    fn amplitude(&self, x: f64) -> Complex64 {
        Complex64::new(self.psi(x), 0.0)
    }

    fn extent(&self) -> f64 {
        // psi < 1e-12 * psi(0) beyond sqrt(4 var ln 1e12)
        (4.0 * self.variance * 12.0 * std::f64::consts::LN_10).sqrt()
    }
}
