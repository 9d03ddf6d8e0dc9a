//! Wigner phase-space functions: the general position-space integral, the
//! closed form for the infinite well, free-flight shear and the factorized
//! "classical" approximation.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::density::{trapezoid, DensityProfile, Method};
use crate::error::{Error, Result};
use crate::grid::{MomentumGrid, SpatialGrid};
use crate::quadrature::{merge_breakpoints, uniform_panels};
use crate::special::sinc;
use crate::square_well::WellState;
use crate::tolerances::Tolerances;
use crate::wavefunction::WaveFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSource {
    ClosedFormInfiniteWell,
    QuadratureFromPsi,
    FactorizedApprox,
}

/// W(x, p) = (1/2pi) int e^{-ipy} psi*(x - y/2) psi(x + y/2) dy, with the
/// imaginary residue left in (it vanishes up to quadrature error).
pub fn wigner_from_psi_complex(psi: &dyn WaveFunction, x: f64, p: f64, tol: &Tolerances) -> Result<Complex64> {
    let extent = psi.extent();
    if !extent.is_finite() {
        return Err(Error::CutoffTooSmall {
            reason: "wave function has no finite support".into(),
        });
    }
    // both x - y/2 and x + y/2 must lie inside [-extent, extent]
    let reach = 2.0 * (extent - x.abs());
    if reach <= 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let periods = (2.0 * reach * p.abs() / (2.0 * PI)).ceil() as usize;
    let extra = psi.kinks().into_iter().flat_map(|b| [2.0 * (b - x), 2.0 * (x - b)]);
    let panels = merge_breakpoints(uniform_panels(-reach, reach, periods + 8), extra);
    let est = tol.quadrature().integrate_panels(
        |y| Complex64::from_polar(1.0, -p * y) * psi.amplitude(x - 0.5 * y).conj() * psi.amplitude(x + 0.5 * y),
        &panels,
    )?;
    Ok(est.value / (2.0 * PI))
}

pub fn wigner_from_psi(psi: &dyn WaveFunction, x: f64, p: f64, tol: &Tolerances) -> Result<f64> {
    Ok(wigner_from_psi_complex(psi, x, p, tol)?.re)
}

/// Closed-form Wigner function of the infinite-well ground state (a = 1).
pub fn wigner_infinite_well(x: f64, k: f64) -> f64 {
    let a = 1.0;
    let ax = x.abs();
    if ax >= a {
        return 0.0;
    }
    // even in k
    let k = k.abs();
    let l = a - ax;
    let c = 1.0 - ax / a;
    // sin(2k l)/(a k) + sin((2ak + pi) c)/(2ak + pi) + sin((2ak - pi) c)/(2ak - pi)
    let first = (PI * x / a).cos() * (2.0 * l / a) * sinc(2.0 * k * l);
    let second = c * sinc((2.0 * a * k + PI) * c);
    let third = c * sinc((2.0 * a * k - PI) * c);
    (first + second + third) / (2.0 * PI)
}

/// Wigner function of the infinite-well state sheared by free flight:
/// the integrand whose k-integral gives rho(0, t).
pub fn fig7_integrand(t: f64, k: f64) -> f64 {
    wigner_infinite_well(-k * t, k)
}

/// Position marginal of the sheared infinite-well field, int W(x - k t, k) dk,
/// i.e. the density at (x, t). The integrand vanishes outside |x - k t| < a.
pub fn sheared_marginal_infinite_well(x: f64, t: f64, tol: &Tolerances) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidTime(t));
    }
    let (lo, hi) = ((x - 1.0) / t, (x + 1.0) / t);
    // fringes in k have period ~ pi / (1 + t |k|)
    let periods = ((hi - lo) * (1.0 + x.abs() + 1.0) / PI).ceil() as usize;
    let panels = merge_breakpoints(uniform_panels(lo, hi, periods + 8), [x / t]);
    let est = tol
        .quadrature()
        .integrate_panels(|k| wigner_infinite_well(x - k * t, k), &panels)?;
    Ok(est.value)
}

/// |psi0(x)|^2 |psi0(p)|^2, the factorized phase-space density.
pub fn factorized_approx(w: &WellState, x: f64, p: f64) -> f64 {
    w.psi0(x).powi(2) * w.psi0_momentum(p).powi(2)
}

#[derive(Debug, Clone, Copy)]
enum Generator {
    InfiniteWell,
    Factorized(WellState),
    Sampled,
}

/// A Wigner function sampled on a phase-space grid, row-major in x.
#[derive(Debug, Clone)]
pub struct PhaseSpaceField {
    pub x_grid: SpatialGrid,
    pub p_grid: MomentumGrid,
    pub values: Vec<f64>,
    pub t: f64,
    pub source: FieldSource,
    generator: Generator,
}

impl PhaseSpaceField {
    fn fill(
        x_grid: SpatialGrid,
        p_grid: MomentumGrid,
        t: f64,
        source: FieldSource,
        generator: Generator,
        f: impl Fn(f64, f64) -> Result<f64> + Sync,
    ) -> Result<Self> {
        x_grid.validate()?;
        p_grid.validate()?;
        let ps = p_grid.points();
        let values = x_grid
            .points()
            .par_iter()
            .map(|&x| ps.iter().map(|&p| f(x, p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?
            .concat();
        Ok(PhaseSpaceField {
            x_grid,
            p_grid,
            values,
            t,
            source,
            generator,
        })
    }

    /// The infinite-well field at t = 0, from the closed form.
    pub fn infinite_well(x_grid: SpatialGrid, p_grid: MomentumGrid) -> Result<Self> {
        Self::fill(x_grid, p_grid, 0.0, FieldSource::ClosedFormInfiniteWell, Generator::InfiniteWell, |x, p| {
            Ok(wigner_infinite_well(x, p))
        })
    }

    pub fn factorized(w: &WellState, x_grid: SpatialGrid, p_grid: MomentumGrid) -> Result<Self> {
        let w = *w;
        Self::fill(x_grid, p_grid, 0.0, FieldSource::FactorizedApprox, Generator::Factorized(w), |x, p| {
            Ok(factorized_approx(&w, x, p))
        })
    }

    pub fn from_psi(psi: &dyn WaveFunction, x_grid: SpatialGrid, p_grid: MomentumGrid, tol: &Tolerances) -> Result<Self> {
        Self::fill(x_grid, p_grid, 0.0, FieldSource::QuadratureFromPsi, Generator::Sampled, |x, p| {
            wigner_from_psi(psi, x, p, tol)
        })
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.p_grid.n + j]
    }

    /// Linear interpolation in x along the p-grid row `j`, zero off the grid.
    fn interpolate_x(&self, x: f64, j: usize) -> f64 {
        let h = self.x_grid.spacing();
        let s = (x - self.x_grid.start) / h;
        if s < 0.0 || s > (self.x_grid.n - 1) as f64 {
            return 0.0;
        }
        let i = (s.floor() as usize).min(self.x_grid.n - 2);
        let f = s - i as f64;
        (1.0 - f) * self.value(i, j) + f * self.value(i + 1, j)
    }

    /// Free flight for a further time `t`: W(x, p) -> W(x - p t, p). Closed-form
    /// fields are re-evaluated exactly; sampled ones are interpolated.
    pub fn shear_evolve(&self, t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::InvalidTime(t));
        }
        let t_total = self.t + t;
        let ps = self.p_grid.points();
        let f = |x: f64, j: usize| -> f64 {
            let p = ps[j];
            match self.generator {
                Generator::InfiniteWell => wigner_infinite_well(x - p * t_total, p),
                Generator::Factorized(w) => factorized_approx(&w, x - p * t_total, p),
                Generator::Sampled => self.interpolate_x(x - p * t, j),
            }
        };
        let values = self
            .x_grid
            .points()
            .par_iter()
            .map(|&x| (0..ps.len()).map(|j| f(x, j)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .concat();
        Ok(PhaseSpaceField {
            values,
            t: t_total,
            ..self.clone()
        })
    }

    /// Integral over p at each x (trapezoid).
    pub fn position_marginal(&self) -> DensityProfile {
        let h = self.p_grid.spacing();
        let n = self.p_grid.n;
        let values = self.values.chunks(n).map(|row| trapezoid(row, h)).collect();
        DensityProfile {
            grid: self.x_grid,
            values,
            time: self.t,
            method: Method::WignerMarginal,
        }
    }

    /// Integral over x at each p (trapezoid).
    pub fn momentum_marginal(&self) -> DensityProfile {
        let h = self.x_grid.spacing();
        let n = self.p_grid.n;
        let values = (0..n)
            .map(|j| {
                let column: Vec<f64> = (0..self.x_grid.n).map(|i| self.value(i, j)).collect();
                trapezoid(&column, h)
            })
            .collect();
        DensityProfile {
            grid: self.p_grid,
            values,
            time: self.t,
            method: Method::WignerMarginal,
        }
    }

    pub fn total(&self) -> f64 {
        let m = self.position_marginal();
        trapezoid(&m.values, self.x_grid.spacing())
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}
