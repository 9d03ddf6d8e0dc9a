//! Free expansion of a square-well ground state once the potential is
//! switched off, along two independent routes:
//!
//! * the momentum integral `psi(x,t) = sqrt(2/pi) int_0^inf cos(kx) psi(k) e^{-i k^2 t/2} dk`,
//! * the free propagator `(2 pi i t)^{-1/2} int e^{i (x-x')^2/2t} psi0(x') dx'`.
//!
//! The momentum integrand decays only like k^-2 (infinite and delta wells),
//! so a hard cutoff is not accurate enough. The real-axis integral is taken
//! up to a point K past the stationary phase and the rest runs along the ray
//! K + e^{-i pi/4} s, where the Gaussian factor makes it decay exponentially.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use num_complex::Complex64;

use crate::density::{DensityProfile, Method};
use crate::error::{Error, Result};
use crate::grid::SpatialGrid;
use crate::quadrature::{merge_breakpoints, uniform_panels, Quadrature};
use crate::square_well::WellState;
use crate::tolerances::Tolerances;
use crate::wavefunction::WaveFunction;

/// The ray integral stops once the integrand is below e^-RAY_DECAY of its start.
const RAY_DECAY: f64 = 46.0;
/// Extra decay rate (per unit s, times sqrt 2) demanded along the ray.
const RAY_MARGIN: f64 = 4.0;
/// How far past `k_cutoff` the real-axis segment may reach before giving up.
const CUTOFF_HEADROOM: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvolutionMethod {
    MomentumIntegral,
    Propagator,
}

impl From<EvolutionMethod> for Method {
    fn from(m: EvolutionMethod) -> Method {
        match m {
            EvolutionMethod::MomentumIntegral => Method::MomentumIntegral,
            EvolutionMethod::Propagator => Method::Propagator,
        }
    }
}

/// A well ground state released at t = 0 and observed at time `t`.
#[derive(Debug, Clone, Copy)]
pub struct EvolvedState {
    pub source: WellState,
    pub t: f64,
    pub method: EvolutionMethod,
    pub tol: Tolerances,
}

impl EvolvedState {
    pub fn new(source: WellState, t: f64, method: EvolutionMethod, tol: Tolerances) -> Result<Self> {
        check_time(t, method)?;
        tol.validate()?;
        Ok(EvolvedState { source, t, method, tol })
    }

    pub fn psi(&self, x: f64) -> Result<Complex64> {
        evolve(&self.source, x, self.t, self.method, &self.tol)
    }

    pub fn density(&self, x: f64) -> Result<f64> {
        Ok(self.psi(x)?.norm_sqr())
    }
}

fn check_time(t: f64, method: EvolutionMethod) -> Result<()> {
    let ok = match method {
        EvolutionMethod::MomentumIntegral => t >= 0.0,
        EvolutionMethod::Propagator => t > 0.0,
    };
    if ok && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTime(t))
    }
}

pub fn evolve(w: &WellState, x: f64, t: f64, method: EvolutionMethod, tol: &Tolerances) -> Result<Complex64> {
    match method {
        EvolutionMethod::MomentumIntegral => evolve_momentum(w, x, t, tol),
        EvolutionMethod::Propagator => evolve_propagator(w, x, t, tol),
    }
}

/// Amplitude at (x, t) from the momentum-space representation.
pub fn evolve_momentum(w: &WellState, x: f64, t: f64, tol: &Tolerances) -> Result<Complex64> {
    check_time(t, EvolutionMethod::MomentumIntegral)?;
    if t == 0.0 {
        return Ok(Complex64::new(w.psi0(x), 0.0));
    }
    let reach = x.abs() + w.momentum_growth();
    let k_split = ((reach + RAY_MARGIN) / t).max(4.0 * w.k0() + 1.0);
    if k_split > CUTOFF_HEADROOM * tol.k_cutoff {
        return Err(Error::CutoffTooSmall {
            reason: format!(
                "stationary phase at x = {x}, t = {t} needs k up to {k_split:.3e}, beyond {CUTOFF_HEADROOM} x k_cutoff"
            ),
        });
    }
    let quad = Quadrature::new(0.1 * tol.quad_abs, tol.quad_rel);

    // real segment, one panel per 2 pi of the phase t k^2/2 + reach k
    let phase = |k: f64| 0.5 * t * k * k + reach * k;
    let periods = (phase(k_split) / (2.0 * PI)).ceil() as usize;
    let mut panels: Vec<f64> = (0..=periods)
        .map(|j| ((reach * reach + 4.0 * PI * j as f64 * t).sqrt() - reach) / t)
        .take_while(|&k| k < k_split)
        .collect();
    panels.push(k_split);
    let panels = merge_breakpoints(merge_breakpoints(panels, uniform_panels(0.0, k_split, 8)), [w.k0()]);
    let real = quad.integrate_panels(
        |k| (k * x).cos() * w.psi0_momentum(k) * Complex64::from_polar(1.0, -0.5 * k * k * t),
        &panels,
    )?;

    // ray k = k_split + e^{-i pi/4} s; |integrand| ~ exp(-rate s - t s^2/2)
    let dir = Complex64::from_polar(1.0, -FRAC_PI_4);
    let rate = (t * k_split - reach) / SQRT_2;
    let s_end = (-rate + (rate * rate + 2.0 * t * RAY_DECAY).sqrt()) / t;
    let wiggle = (t * k_split + reach) / SQRT_2;
    let ray_panels = uniform_panels(0.0, s_end, (s_end * wiggle / (2.0 * PI)).ceil() as usize + 4);
    let ray = quad.integrate_panels(
        |s| {
            let k = k_split + dir * s;
            (k * x).cos() * w.psi0_momentum_complex(k) * (Complex64::new(0.0, -0.5 * t) * k * k).exp() * dir
        },
        &ray_panels,
    )?;

    Ok((real.value + ray.value) * (2.0 / PI).sqrt())
}

/// Amplitude at (x, t) from the free propagator acting on the initial state.
pub fn evolve_propagator(w: &WellState, x: f64, t: f64, tol: &Tolerances) -> Result<Complex64> {
    check_time(t, EvolutionMethod::Propagator)?;
    let support = w.extent();
    // stationary-phase panels: the kernel phase passes 2 pi j at x' = x -+ sqrt(4 pi j t)
    let far = (x.abs() + support).powi(2) / (4.0 * PI * t);
    let mut extra = w.kinks();
    extra.push(x);
    for j in 1..=far.ceil() as usize {
        let d = (4.0 * PI * j as f64 * t).sqrt();
        extra.extend([x - d, x + d]);
    }
    let points = merge_breakpoints(uniform_panels(-support, support, 8), extra);

    let quad = Quadrature::new(0.1 * tol.quad_abs, tol.quad_rel);
    let est = quad.integrate_panels(
        |xp| Complex64::from_polar(w.psi0(xp), (x - xp).powi(2) / (2.0 * t)),
        &points,
    )?;
    Ok(est.value * Complex64::from_polar(1.0, -FRAC_PI_4) / (2.0 * PI * t).sqrt())
}

/// |psi(x, t)|^2 on a grid. At t = 0 the initial density is returned
/// directly whatever the method.
pub fn density_profile(
    w: &WellState,
    t: f64,
    grid: SpatialGrid,
    method: EvolutionMethod,
    tol: &Tolerances,
) -> Result<DensityProfile> {
    grid.validate()?;
    if t == 0.0 {
        return Ok(DensityProfile::from_fn(grid, 0.0, Method::Analytic, |x| w.psi0(x).powi(2)));
    }
    check_time(t, method)?;
    DensityProfile::try_from_fn(grid, t, method.into(), |x| Ok(evolve(w, x, t, method, tol)?.norm_sqr()))
}

/// Position variance <x^2> + t^2 <p^2> (the mean and the cross term vanish
/// for a real even initial state).
pub fn width_qm(w: &WellState, t: f64) -> f64 {
    let m = w.moments();
    m.x2 + t * t * m.p2
}

/// Contribution of |x| > x_max to the `order`-th moment (0 or 2) of the
/// density at time t, from the far-field form rho(x, t) ~ |psi(x/t)|^2 / t.
pub fn far_field_tail(w: &WellState, t: f64, x_max: f64, order: i32) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    2.0 * t.powi(order) * w.momentum_moment_tail(x_max / t, order)
}

/// Norm and second moment of the evolved density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spread {
    pub norm: f64,
    pub second_moment: f64,
}

/// Norm and second moment of the evolved density by adaptive quadrature on
/// [-x_max, x_max], plus the far-field remainder beyond.
pub fn spread(w: &WellState, t: f64, x_max: f64, method: EvolutionMethod, tol: &Tolerances) -> Result<Spread> {
    if !(x_max > 0.0) {
        return Err(Error::param("x_max", format!("must be > 0, got {x_max}")));
    }
    let rho = |x: f64| -> f64 {
        if t == 0.0 {
            w.psi0(x).powi(2)
        } else {
            evolve(w, x, t, method, tol).map(|a| a.norm_sqr()).unwrap_or(f64::NAN)
        }
    };
    // the interference fringes have spacing ~ pi t / a
    let fringe = if w.a() > 0.0 { PI * t / (2.0 * w.a()) } else { 1.0 };
    let width = fringe.clamp(0.05, 1.0);
    let panels = merge_breakpoints(uniform_panels(0.0, x_max, (x_max / width).ceil() as usize), [w.a()]);
    let quad = Quadrature::new(1e-11, 1e-9);
    let norm = 2.0 * quad.integrate_panels(rho, &panels)?.value + far_field_tail(w, t, x_max, 0);
    let second = 2.0 * quad.integrate_panels(|x| x * x * rho(x), &panels)?.value + far_field_tail(w, t, x_max, 2);
    if !(norm.is_finite() && second.is_finite()) {
        // an amplitude evaluation failed somewhere; report it
        let bad = panels.iter().find_map(|&x| evolve(w, x, t, method, tol).err());
        return Err(bad.unwrap_or(Error::InvalidTime(t)));
    }
    Ok(Spread {
        norm,
        second_moment: second,
    })
}

/// t rho(u t, t) over a grid in the scaled coordinate u = x/t.
pub fn longtime_scaled_profile(w: &WellState, t: f64, u_grid: SpatialGrid, tol: &Tolerances) -> Result<DensityProfile> {
    u_grid.validate()?;
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidTime(t));
    }
    DensityProfile::try_from_fn(u_grid, t, Method::MomentumIntegral, |u| {
        Ok(t * evolve_momentum(w, u * t, t, tol)?.norm_sqr())
    })
}
