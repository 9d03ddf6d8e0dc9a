//! Sampled probability densities and the characteristic-function route.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::SpatialGrid;
use crate::quadrature::uniform_panels;
use crate::tolerances::Tolerances;

/// How a density was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Analytic,
    /// Inverse Fourier transform of the characteristic function.
    Characteristic,
    MomentumIntegral,
    Propagator,
    WignerMarginal,
    Classical,
}

/// A probability density sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityProfile {
    pub grid: SpatialGrid,
    pub values: Vec<f64>,
    pub time: f64,
    pub method: Method,
}

impl DensityProfile {
    pub fn from_fn(grid: SpatialGrid, time: f64, method: Method, f: impl Fn(f64) -> f64 + Sync) -> Self {
        let values = grid.points().par_iter().map(|&x| f(x)).collect();
        DensityProfile {
            grid,
            values,
            time,
            method,
        }
    }

    pub fn try_from_fn(
        grid: SpatialGrid,
        time: f64,
        method: Method,
        f: impl Fn(f64) -> Result<f64> + Sync,
    ) -> Result<Self> {
        let values = grid
            .points()
            .par_iter()
            .map(|&x| f(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(DensityProfile {
            grid,
            values,
            time,
            method,
        })
    }

    pub fn points(&self) -> Vec<f64> {
        self.grid.points()
    }

    /// Largest absolute pointwise difference to another profile on the same grid.
    pub fn max_abs_diff(&self, other: &DensityProfile) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Trapezoid estimate of the `order`-th moment.
    pub fn moment(&self, order: i32) -> Result<f64> {
        self.grid.validate()?;
        let xs = self.grid.points();
        let weighted: Vec<f64> = xs
            .iter()
            .zip(&self.values)
            .map(|(x, v)| x.powi(order) * v)
            .collect();
        Ok(trapezoid(&weighted, self.grid.spacing()))
    }
}

pub(crate) fn trapezoid(values: &[f64], h: f64) -> f64 {
    match values {
        [] | [_] => 0.0,
        [first, inner @ .., last] => h * (0.5 * (first + last) + inner.iter().sum::<f64>()),
    }
}

/// Trapezoid integral of a sampled density over its grid.
pub fn integrate_density(d: &DensityProfile) -> Result<f64> {
    d.grid.validate()?;
    if d.values.len() != d.grid.n {
        return Err(Error::InvalidGrid(format!(
            "{} values for a grid of {} points",
            d.values.len(),
            d.grid.n
        )));
    }
    Ok(trapezoid(&d.values, d.grid.spacing()))
}

// Samples used to locate where the characteristic function has died off.
const ENVELOPE_SAMPLES: usize = 512;

/// Inverts a characteristic function chi(k) = <e^{ikx}> into the density
/// rho(x) = (1/2pi) int e^{-ikx} chi(k) dk, truncated at |k| <= k_cutoff.
///
/// `chi` must satisfy chi(-k) = conj(chi(k)), which makes rho real and lets the
/// integral run over k >= 0 only.
pub fn characteristic_to_density<F>(chi: F, grid: SpatialGrid, tol: &Tolerances) -> Result<DensityProfile>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    grid.validate()?;
    tol.validate()?;
    let k_max = tol.k_cutoff;
    let at_cutoff = chi(k_max).norm();
    if at_cutoff > tol.quad_rel {
        return Err(Error::CutoffTooSmall {
            reason: format!("|chi(k_cutoff = {k_max})| = {at_cutoff:.3e} exceeds {:.1e}", tol.quad_rel),
        });
    }

    // Trim the range to where chi is still above the noise floor.
    let floor = tol.quad_abs * 1e-3;
    let samples: Vec<f64> = (0..=ENVELOPE_SAMPLES)
        .map(|j| chi(k_max * j as f64 / ENVELOPE_SAMPLES as f64).norm())
        .collect();
    let last_alive = samples.iter().rposition(|&m| m > floor).unwrap_or(0);
    let k_eff = (k_max * (last_alive + 1) as f64 / ENVELOPE_SAMPLES as f64).min(k_max);

    let quad = tol.quadrature();
    DensityProfile::try_from_fn(grid, 0.0, Method::Characteristic, |x| {
        // at least one panel per period of e^{-ikx}
        let periods = (k_eff * x.abs() / (2.0 * PI)).ceil() as usize;
        let panels = uniform_panels(0.0, k_eff, periods.max(8));
        let est = quad.integrate_panels(|k| (Complex64::new(0.0, -k * x).exp() * chi(k)).re, &panels)?;
        Ok(est.value / PI)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn gaussian(var: f64) -> impl Fn(f64) -> f64 {
        move |x| (-x * x / (2.0 * var)).exp() / (2.0 * PI * var).sqrt()
    }

    #[test]
    fn oscillator_ground_state_is_normalized() {
        let grid = SpatialGrid::new(-10.0, 10.0, 2001).unwrap();
        let d = DensityProfile::from_fn(grid, 0.0, Method::Analytic, gaussian(0.5));
        assert_abs_diff_eq!(integrate_density(&d).unwrap(), 1.0, epsilon = 1e-8);
    }

    #[test]
    fn uniform_density_integrates_exactly() {
        let grid = SpatialGrid::new(-1.0, 1.0, 17).unwrap();
        let d = DensityProfile::from_fn(grid, 0.0, Method::Analytic, |_| 0.5);
        assert_abs_diff_eq!(integrate_density(&d).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn half_support_of_even_density() {
        let grid = SpatialGrid::new(0.0, 10.0, 1001).unwrap();
        let d = DensityProfile::from_fn(grid, 0.0, Method::Analytic, gaussian(0.5));
        assert_abs_diff_eq!(integrate_density(&d).unwrap(), 0.5, epsilon = 1e-8);
    }

    #[test]
    fn mismatched_value_count_is_rejected() {
        let grid = SpatialGrid::new(0.0, 1.0, 3).unwrap();
        let d = DensityProfile {
            grid,
            values: vec![1.0],
            time: 0.0,
            method: Method::Analytic,
        };
        assert!(integrate_density(&d).is_err());
        let bad = DensityProfile {
            grid: SpatialGrid { start: 0.0, end: 1.0, n: 1 },
            values: vec![1.0],
            time: 0.0,
            method: Method::Analytic,
        };
        assert!(matches!(integrate_density(&bad), Err(Error::InvalidGrid(_))));
    }

    #[test]
    fn gaussian_fourier_pair() {
        let var = 0.7;
        let grid = SpatialGrid::new(-6.0, 6.0, 121).unwrap();
        let d = characteristic_to_density(
            |k| Complex64::new((-k * k * var / 2.0).exp(), 0.0),
            grid,
            &Tolerances::default(),
        )
        .unwrap();
        let exact = gaussian(var);
        for (x, v) in d.points().into_iter().zip(&d.values) {
            assert_abs_diff_eq!(*v, exact(x), epsilon = 1e-10);
        }
        assert_abs_diff_eq!(integrate_density(&d).unwrap(), 1.0, epsilon = 1e-6);
    }

    #[test]
    fn shifted_gaussian_peak() {
        let grid = SpatialGrid::new(-1.0, 3.0, 5).unwrap();
        let d = characteristic_to_density(
            |k| Complex64::new(0.0, k).exp() * (-k * k * 0.25).exp(),
            grid,
            &Tolerances::default(),
        )
        .unwrap();
        assert_abs_diff_eq!(d.values[2], 1.0 / (2.0 * PI * 0.5).sqrt(), epsilon = 1e-10);
    }

    #[test]
    fn non_decaying_characteristic_function_is_an_error() {
        let grid = SpatialGrid::new(-1.0, 1.0, 3).unwrap();
        let r = characteristic_to_density(|_| Complex64::new(1.0, 0.0), grid, &Tolerances::default());
        assert!(matches!(r, Err(Error::CutoffTooSmall { .. })));
    }
}
