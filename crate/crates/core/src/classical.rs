//! Classical ensembles with a factorized phase-space density
//! rho(x0, p0) = rho_x(x0) rho_p(p0), propagated along free or harmonic
//! trajectories.

use std::f64::consts::PI;

use crate::density::{DensityProfile, Method};
use crate::error::{Error, Result};
use crate::grid::SpatialGrid;
use crate::harmonic::{mean_position, QuenchParams};
use crate::quadrature::{merge_breakpoints, uniform_panels};
use crate::square_well::WellState;
use crate::tolerances::Tolerances;
use crate::units::MASS;
use crate::wavefunction::WaveFunction;

/// Upper bound on the number of initial panels in one density quadrature.
const MAX_PANELS: usize = 4096;

/// Thermal occupation of the initial trap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Temperature {
    /// k_B T = hbar omega_i / 2, which reproduces the quantum ground-state widths.
    QuantumMatched,
    KbT(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassicalEnsemble {
    /// Independent Gaussians in x0 and p0, both centred at zero.
    Gaussian { var_x: f64, var_p: f64 },
    /// |psi0(x0)|^2 |psi0(p0)|^2 for a well ground state.
    Well(WellState),
}

impl ClassicalEnsemble {
    pub fn from_well(w: WellState) -> Self {
        ClassicalEnsemble::Well(w)
    }

    pub fn gaussian(var_x: f64, var_p: f64) -> Result<Self> {
        if !(var_x > 0.0 && var_x.is_finite()) {
            return Err(Error::param("var_x", format!("must be > 0, got {var_x}")));
        }
        if !(var_p > 0.0 && var_p.is_finite()) {
            return Err(Error::param("var_p", format!("must be > 0, got {var_p}")));
        }
        Ok(ClassicalEnsemble::Gaussian { var_x, var_p })
    }

    /// Boltzmann distribution in the trap of frequency `omega_i`.
    pub fn thermal(omega_i: f64, temperature: Temperature) -> Result<Self> {
        if !(omega_i > 0.0 && omega_i.is_finite()) {
            return Err(Error::param("omega_i", format!("must be > 0, got {omega_i}")));
        }
        let kt = match temperature {
            Temperature::QuantumMatched => 0.5 * omega_i,
            Temperature::KbT(kt) if kt > 0.0 && kt.is_finite() => kt,
            Temperature::KbT(kt) => return Err(Error::param("temperature", format!("must be > 0, got {kt}"))),
        };
        Self::gaussian(kt / (MASS * omega_i * omega_i), MASS * kt)
    }

    /// Always true: only product densities are represented.
    pub fn factorized(&self) -> bool {
        true
    }

    pub fn rho_x(&self, x: f64) -> f64 {
        match self {
            ClassicalEnsemble::Gaussian { var_x, .. } => gaussian(*var_x, x),
            ClassicalEnsemble::Well(w) => w.psi0(x).powi(2),
        }
    }

    pub fn rho_p(&self, p: f64) -> f64 {
        match self {
            ClassicalEnsemble::Gaussian { var_p, .. } => gaussian(*var_p, p),
            ClassicalEnsemble::Well(w) => w.psi0_momentum(p).powi(2),
        }
    }

    /// (<x0^2>, <p0^2>).
    pub fn moments(&self) -> (f64, f64) {
        match self {
            ClassicalEnsemble::Gaussian { var_x, var_p } => (*var_x, *var_p),
            ClassicalEnsemble::Well(w) => {
                let m = w.moments();
                (m.x2, m.p2)
            }
        }
    }

    fn x_extent(&self) -> f64 {
        match self {
            // rho below ~1e-24 of its peak
            ClassicalEnsemble::Gaussian { var_x, .. } => (2.0 * var_x * 55.0).sqrt(),
            ClassicalEnsemble::Well(w) => w.extent(),
        }
    }

    fn x_kinks(&self) -> Vec<f64> {
        match self {
            ClassicalEnsemble::Gaussian { .. } => vec![0.0],
            ClassicalEnsemble::Well(w) => w.kinks(),
        }
    }

    fn p_features(&self) -> Vec<f64> {
        match self {
            ClassicalEnsemble::Gaussian { .. } => vec![0.0],
            ClassicalEnsemble::Well(w) => vec![-w.k0(), 0.0, w.k0()],
        }
    }
}

fn gaussian(var: f64, x: f64) -> f64 {
    (-x * x / (2.0 * var)).exp() / (2.0 * PI * var).sqrt()
}

fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTime(t))
    }
}

/// Free-streaming density int rho_x(x - p t/m) rho_p(p) dp.
pub fn classical_free_density(e: &ClassicalEnsemble, x: f64, t: f64, tol: &Tolerances) -> Result<f64> {
    check_time(t)?;
    if t == 0.0 {
        return Ok(e.rho_x(x));
    }
    let v = t / MASS;
    let extent = e.x_extent();
    // rho_x(x - p v) vanishes unless |x - p v| < extent
    let (lo, hi) = ((x - extent) / v, (x + extent) / v);
    let n = ((hi - lo).ceil() as usize).clamp(8, MAX_PANELS);
    let extra = e
        .x_kinks()
        .into_iter()
        .map(|b| (x - b) / v)
        .chain(e.p_features());
    let panels = merge_breakpoints(uniform_panels(lo, hi, n), extra);
    let est = tol
        .quadrature()
        .integrate_panels(|p| e.rho_x(x - p * v) * e.rho_p(p), &panels)?;
    Ok(est.value)
}

/// The same density with the momentum integral traded for one over the
/// starting point: (m/t) int rho_x(x0) rho_p(m (x - x0)/t) dx0.
pub fn classical_free_density_position_route(e: &ClassicalEnsemble, x: f64, t: f64, tol: &Tolerances) -> Result<f64> {
    check_time(t)?;
    if t == 0.0 {
        return Ok(e.rho_x(x));
    }
    let v = t / MASS;
    let extent = e.x_extent();
    let n = ((2.0 * extent / v).ceil() as usize).clamp(8, MAX_PANELS);
    let extra = e
        .x_kinks()
        .into_iter()
        .chain(e.p_features().into_iter().map(|p| x - p * v));
    let panels = merge_breakpoints(uniform_panels(-extent, extent, n), extra);
    let est = tol
        .quadrature()
        .integrate_panels(|x0| e.rho_x(x0) * e.rho_p((x - x0) / v), &panels)?;
    Ok(est.value / v)
}

pub fn classical_density_profile(
    e: &ClassicalEnsemble,
    t: f64,
    grid: SpatialGrid,
    tol: &Tolerances,
) -> Result<DensityProfile> {
    grid.validate()?;
    DensityProfile::try_from_fn(grid, t, Method::Classical, |x| classical_free_density(e, x, t, tol))
}

/// <x0^2> + t^2 <p0^2> / m^2.
pub fn classical_width(e: &ClassicalEnsemble, t: f64) -> f64 {
    let (x2, p2) = e.moments();
    x2 + (t / MASS).powi(2) * p2
}

/// Limit of t rho(u t, t) for t -> infinity.
pub fn classical_longtime(e: &ClassicalEnsemble, u: f64) -> f64 {
    MASS * e.rho_p(MASS * u)
}

/// Density of a thermal Gaussian ensemble after the quench into the final
/// harmonic (or linear) potential.
pub fn classical_harmonic_density(params: &QuenchParams, temperature: Temperature, x: f64, t: f64) -> Result<f64> {
    let e = ClassicalEnsemble::thermal(params.omega_i(), temperature)?;
    harmonic_density_for(&e, params, x, t)
}

/// Harmonic-quench density for an arbitrary ensemble; only Gaussian factors
/// have the closed form.
pub fn harmonic_density_for(e: &ClassicalEnsemble, params: &QuenchParams, x: f64, t: f64) -> Result<f64> {
    let ClassicalEnsemble::Gaussian { var_x, var_p } = *e else {
        return Err(Error::UnsupportedEnsemble("harmonic quench needs Gaussian phase-space factors"));
    };
    let var = if params.is_linear() {
        var_x + var_p * (t / MASS).powi(2)
    } else {
        let (s, c) = (params.omega_f() * t).sin_cos();
        var_x * c * c + var_p * (s / (MASS * params.omega_f())).powi(2)
    };
    Ok(gaussian(var, x - mean_position(params, t)))
}
