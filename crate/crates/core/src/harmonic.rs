//! Closed-form quench dynamics starting from an oscillator number state.
//!
//! The initial state is |n>_i of an oscillator with frequency `omega_i`. At
//! t = 0 the potential is switched to V_f(x) = -F x + m omega_f^2 x^2 / 2, a
//! trap of frequency `omega_f` centred at a_F = F / (m omega_f^2). For
//! `omega_f = 0` the final potential is the linear one, V_f = -F x.
//!
//! In the Heisenberg picture x(t) - <x(t)> = alpha(t) a^dagger + alpha(t)^* a
//! with the ladder operators of the initial trap, so every statistic depends on
//! the single complex coefficient alpha(t).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::density::{characteristic_to_density, DensityProfile, Method};
use crate::error::{Error, Result};
use crate::grid::{MomentumGrid, SpatialGrid};
use crate::special::laguerre;
use crate::tolerances::Tolerances;
use crate::units::{HBAR, MASS};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuenchParams {
    omega_i: f64,
    omega_f: f64,
    force: f64,
}

impl QuenchParams {
    pub fn new(omega_i: f64, omega_f: f64, force: f64) -> Result<Self> {
        if !(omega_i.is_finite() && omega_i > 0.0) {
            return Err(Error::param("omega_i", format!("must be > 0, got {omega_i}")));
        }
        if !(omega_f.is_finite() && omega_f >= 0.0) {
            return Err(Error::param("omega_f", format!("must be >= 0, got {omega_f}")));
        }
        if !force.is_finite() {
            return Err(Error::param("force", "must be finite"));
        }
        Ok(QuenchParams {
            omega_i,
            omega_f,
            force,
        })
    }

    /// Final trap given by its centre a_F instead of the force.
    pub fn with_shift(omega_i: f64, omega_f: f64, shift: f64) -> Result<Self> {
        if !(omega_f > 0.0) {
            return Err(Error::param("omega_f", "a shifted trap needs omega_f > 0"));
        }
        Self::new(omega_i, omega_f, shift * MASS * omega_f * omega_f)
    }

    pub fn omega_i(&self) -> f64 {
        self.omega_i
    }

    pub fn omega_f(&self) -> f64 {
        self.omega_f
    }

    pub fn force(&self) -> f64 {
        self.force
    }

    /// Spring constant of the final trap.
    pub fn lambda_f(&self) -> f64 {
        MASS * self.omega_f * self.omega_f
    }

    /// Centre a_F of the final trap; `None` for the linear potential.
    pub fn shift(&self) -> Option<f64> {
        if self.is_linear() {
            None
        } else {
            Some(self.force / self.lambda_f())
        }
    }

    /// The final potential is -F x (free particle when F = 0).
    pub fn is_linear(&self) -> bool {
        self.omega_f == 0.0
    }

    /// Same quench without the force.
    pub fn without_force(&self) -> Self {
        QuenchParams { force: 0.0, ..*self }
    }
}

/// Initial number state |n>_i, n <= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InitialLevel {
    #[default]
    Ground,
    First,
    Second,
}

impl InitialLevel {
    pub fn n(self) -> u8 {
        match self {
            InitialLevel::Ground => 0,
            InitialLevel::First => 1,
            InitialLevel::Second => 2,
        }
    }

    pub fn from_n(n: u8) -> Result<Self> {
        match n {
            0 => Ok(InitialLevel::Ground),
            1 => Ok(InitialLevel::First),
            2 => Ok(InitialLevel::Second),
            _ => Err(Error::UnsupportedLevel(n)),
        }
    }
}

/// alpha(t) in x(t) - <x(t)> = alpha a^dagger + alpha^* a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaCoefficient {
    pub t: f64,
    pub value: Complex64,
}

pub fn alpha(p: &QuenchParams, t: f64) -> AlphaCoefficient {
    let scale = (HBAR / (2.0 * MASS * p.omega_i)).sqrt();
    let (re, im) = if p.is_linear() {
        (1.0, p.omega_i * t)
    } else {
        let (s, c) = (p.omega_f * t).sin_cos();
        (c, p.omega_i / p.omega_f * s)
    };
    AlphaCoefficient {
        t,
        value: Complex64::new(re, im) * scale,
    }
}

pub fn mean_position(p: &QuenchParams, t: f64) -> f64 {
    if p.is_linear() {
        p.force * t * t / (2.0 * MASS)
    } else {
        p.force / p.lambda_f() * (1.0 - (p.omega_f * t).cos())
    }
}

pub fn mean_momentum(p: &QuenchParams, t: f64) -> f64 {
    if p.is_linear() {
        p.force * t
    } else {
        MASS * p.force / p.lambda_f() * p.omega_f * (p.omega_f * t).sin()
    }
}

/// Position variance; number state n multiplies the ground-state value by 2n+1.
pub fn variance_x(p: &QuenchParams, t: f64, level: InitialLevel) -> f64 {
    let ground = if p.is_linear() {
        // <x^2>(1 + omega_i^2 t^2)
        HBAR / (2.0 * MASS * p.omega_i) * (1.0 + (p.omega_i * t).powi(2))
    } else {
        alpha(p, t).value.norm_sqr()
    };
    (2 * level.n() + 1) as f64 * ground
}

pub fn variance_p(p: &QuenchParams, t: f64) -> f64 {
    let ground = MASS * HBAR * p.omega_i / 2.0;
    if p.is_linear() {
        return ground;
    }
    let (s, c) = (p.omega_f * t).sin_cos();
    let ratio = p.omega_f / p.omega_i;
    ground * (c * c + ratio * ratio * s * s)
}

/// Delta x(t) Delta p(t) for the ground state; never below hbar/2.
pub fn uncertainty_product(p: &QuenchParams, t: f64) -> f64 {
    (variance_x(p, t, InitialLevel::Ground) * variance_p(p, t)).sqrt()
}

/// Characteristic function <e^{ik x(t)}> in the state |n>_i:
/// e^{ik<x(t)>} L_n(k^2 |alpha|^2) e^{-k^2 |alpha|^2 / 2}.
pub fn characteristic(p: &QuenchParams, t: f64, level: InitialLevel, k: f64) -> Complex64 {
    let u = k * k * alpha(p, t).value.norm_sqr();
    let envelope = laguerre(level.n(), u) * (-0.5 * u).exp();
    Complex64::from_polar(envelope, k * mean_position(p, t))
}

fn gaussian(mean: f64, variance: f64, x: f64) -> f64 {
    (-(x - mean).powi(2) / (2.0 * variance)).exp() / (2.0 * PI * variance).sqrt()
}

/// Position density after the quench. The ground state is the closed-form
/// Gaussian; excited levels go through the characteristic-function inversion.
pub fn density(
    p: &QuenchParams,
    t: f64,
    grid: SpatialGrid,
    level: InitialLevel,
    tol: &Tolerances,
) -> Result<DensityProfile> {
    grid.validate()?;
    match level {
        InitialLevel::Ground => {
            let mean = mean_position(p, t);
            let var = variance_x(p, t, level);
            Ok(DensityProfile::from_fn(grid, t, Method::Analytic, |x| gaussian(mean, var, x)))
        }
        _ => {
            // The cutoff only needs to cover the decay of the envelope.
            let width = alpha(p, t).value.norm();
            let tol = Tolerances {
                k_cutoff: tol.k_cutoff.min(12.0 / width),
                ..*tol
            };
            let mut profile = characteristic_to_density(|k| characteristic(p, t, level, k), grid, &tol)?;
            profile.time = t;
            Ok(profile)
        }
    }
}

/// Momentum density; only the ground state is supported.
pub fn momentum_density(
    p: &QuenchParams,
    t: f64,
    grid: MomentumGrid,
    level: InitialLevel,
) -> Result<DensityProfile> {
    grid.validate()?;
    if level != InitialLevel::Ground {
        return Err(Error::UnsupportedLevel(level.n()));
    }
    let mean = mean_momentum(p, t);
    let var = variance_p(p, t);
    Ok(DensityProfile::from_fn(grid, t, Method::Analytic, |q| gaussian(mean, var, q)))
}

/// Largest deviation between the density under V_f = -F x and the force-free
/// density rigidly displaced by F t^2 / 2m.
pub fn equivalence_shift_check(
    p: &QuenchParams,
    t: f64,
    grid: SpatialGrid,
    level: InitialLevel,
    tol: &Tolerances,
) -> Result<f64> {
    if !p.is_linear() {
        return Err(Error::param("omega_f", "the equivalence check needs the linear potential (omega_f = 0)"));
    }
    let shift = p.force * t * t / (2.0 * MASS);
    let with_force = density(p, t, grid, level, tol)?;
    let shifted_grid = SpatialGrid::new(grid.start - shift, grid.end - shift, grid.n)?;
    let free = density(&p.without_force(), t, shifted_grid, level, tol)?;
    Ok(with_force.max_abs_diff(&free))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::FRAC_PI_2;

    fn half_freq(shift: f64) -> QuenchParams {
        QuenchParams::with_shift(1.0, 0.5, shift).unwrap()
    }

    #[test]
    fn mean_position_examples() {
        let p = half_freq(1.0);
        assert_eq!(mean_position(&p, 0.0), 0.0);
        assert_abs_diff_eq!(mean_position(&p, PI / 0.5), 2.0, epsilon = 1e-15);
        let lin = QuenchParams::new(1.0, 0.0, 1.0).unwrap();
        assert_abs_diff_eq!(mean_position(&lin, 2.0), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn variance_examples() {
        let p = half_freq(0.0);
        assert_abs_diff_eq!(variance_x(&p, 0.0, InitialLevel::Ground), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(variance_x(&p, FRAC_PI_2 / 0.5, InitialLevel::Ground), 2.0, epsilon = 1e-14);
        let free = QuenchParams::new(1.0, 0.0, 0.0).unwrap();
        assert_abs_diff_eq!(variance_x(&free, 3.0, InitialLevel::Ground), 5.0, epsilon = 1e-14);

        assert_abs_diff_eq!(variance_p(&p, 0.0), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(variance_p(&p, FRAC_PI_2 / 0.5), 0.125, epsilon = 1e-15);
        let same = QuenchParams::new(1.0, 1.0, 0.0).unwrap();
        for t in [0.0, 0.4, 2.7, 11.0] {
            assert_abs_diff_eq!(variance_p(&same, t), 0.5, epsilon = 1e-15);
        }
    }

    #[test]
    fn uncertainty_product_examples() {
        let p = half_freq(1.0);
        assert_abs_diff_eq!(uncertainty_product(&p, FRAC_PI_2 / 0.5), 0.5, epsilon = 1e-15);
        // (cos^2 + 4 sin^2)(cos^2 + sin^2/4) at sin^2 = 1/2 is 2.5 * 0.625
        assert_abs_diff_eq!(uncertainty_product(&p, (PI / 4.0) / 0.5), 0.625, epsilon = 1e-15);
        let same = QuenchParams::new(1.0, 1.0, 0.3).unwrap();
        assert_abs_diff_eq!(uncertainty_product(&same, 1.234), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn uncertainty_product_maximum_by_scan() {
        let p = half_freq(1.0);
        let max = (0..=100_000)
            .map(|i| uncertainty_product(&p, i as f64 * (PI / 0.5) / 100_000.0))
            .fold(0.0, f64::max);
        assert_abs_diff_eq!(max, 0.625, epsilon = 1e-9);
    }

    #[test]
    fn alpha_initial_value_and_period() {
        let p = QuenchParams::new(2.0, 0.7, 0.0).unwrap();
        assert_abs_diff_eq!(alpha(&p, 0.0).value.norm_sqr(), 0.25, epsilon = 1e-16);
        let period = 2.0 * PI / 0.7;
        let a = alpha(&p, 0.9).value;
        let b = alpha(&p, 0.9 + period).value;
        assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn momentum_density_examples() {
        let grid = MomentumGrid::symmetric(8.0, 1601).unwrap();
        let p = half_freq(1.0);
        let d = momentum_density(&p, 0.0, grid, InitialLevel::Ground).unwrap();
        assert_abs_diff_eq!(d.moment(1).unwrap(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(d.moment(2).unwrap(), 0.5, epsilon = 1e-10);
        assert_abs_diff_eq!(mean_momentum(&p, PI / 0.5), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(mean_momentum(&p, FRAC_PI_2 / 0.5), 0.5, epsilon = 1e-15);
        assert!(matches!(
            momentum_density(&p, 0.0, grid, InitialLevel::First),
            Err(Error::UnsupportedLevel(1))
        ));
    }

    #[test]
    fn ground_density_peak_and_stationarity() {
        let grid = SpatialGrid::symmetric(6.0, 1201).unwrap();
        let tol = Tolerances::default();
        let p = QuenchParams::new(1.0, 1.0, 0.0).unwrap();
        let d0 = density(&p, 0.0, grid, InitialLevel::Ground, &tol).unwrap();
        assert_abs_diff_eq!(d0.values[600], 1.0 / (2.0 * PI * 0.5).sqrt(), epsilon = 1e-15);
        let d = density(&p, 3.3, grid, InitialLevel::Ground, &tol).unwrap();
        assert!(d.max_abs_diff(&d0) < 1e-14);
    }

    #[test]
    fn first_level_at_t0_is_phi1_squared() {
        let grid = SpatialGrid::symmetric(6.0, 241).unwrap();
        let p = half_freq(0.0);
        let d = density(&p, 0.0, grid, InitialLevel::First, &Tolerances::default()).unwrap();
        for (x, v) in d.points().into_iter().zip(&d.values) {
            let exact = 2.0 * x * x * (-x * x).exp() / PI.sqrt();
            assert_abs_diff_eq!(*v, exact, epsilon = 1e-8);
        }
    }

    #[test]
    fn excited_level_variance_against_heisenberg_oracle() {
        // x(t) = x cos(w t) + p sin(w t)/w; number states have no x p cross term
        let phi0 = |x: f64| PI.powf(-0.25) * (-x * x / 2.0).exp();
        let phi = |n: u8, x: f64| match n {
            1 => 2f64.sqrt() * x * phi0(x),
            _ => (2.0 * x * x - 1.0) / 2f64.sqrt() * phi0(x),
        };
        let h = 1e-3;
        let xs: Vec<f64> = (-12_000..=12_000).map(|i| i as f64 * h).collect();
        let p = half_freq(0.0);
        let grid = SpatialGrid::symmetric(14.0, 2801).unwrap();
        for level in [InitialLevel::First, InitialLevel::Second] {
            let n = level.n();
            let x2: f64 = xs.iter().map(|&x| x * x * phi(n, x).powi(2)).sum::<f64>() * h;
            let p2: f64 = xs
                .iter()
                .map(|&x| ((phi(n, x + 1e-5) - phi(n, x - 1e-5)) / 2e-5).powi(2))
                .sum::<f64>()
                * h;
            for t in [0.0, 1.3, 4.0] {
                let (s, c) = (p.omega_f * t).sin_cos();
                let oracle = c * c * x2 + s * s * p2 / (p.omega_f * p.omega_f);
                assert_relative_eq!(variance_x(&p, t, level), oracle, max_relative = 1e-8);
                let d = density(&p, t, grid, level, &Tolerances::default()).unwrap();
                let dx = grid.spacing();
                let sampled: f64 = d.points().iter().zip(&d.values).map(|(x, v)| x * x * v).sum::<f64>() * dx;
                assert_relative_eq!(sampled, oracle, max_relative = 1e-6);
            }
        }
    }

    #[test]
    fn equivalence_shift_examples() {
        let grid = SpatialGrid::symmetric(12.0, 241).unwrap();
        let tol = Tolerances::default();
        let p = QuenchParams::new(1.0, 0.0, 1.0).unwrap();
        assert!(equivalence_shift_check(&p, 2.0, grid, InitialLevel::Ground, &tol).unwrap() <= 1e-10);
        let zero = QuenchParams::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(equivalence_shift_check(&zero, 1.7, grid, InitialLevel::Ground, &tol).unwrap(), 0.0);
        let p3 = QuenchParams::new(1.0, 0.0, 3.0).unwrap();
        assert!(equivalence_shift_check(&p3, 0.5, grid, InitialLevel::Second, &tol).unwrap() <= 1e-10);
        let trap = half_freq(1.0);
        assert!(equivalence_shift_check(&trap, 0.5, grid, InitialLevel::Ground, &tol).is_err());
    }

    #[test]
    fn small_final_frequency_approaches_linear_branch() {
        let near = QuenchParams::new(1.0, 1e-4, 0.0).unwrap();
        let free = QuenchParams::new(1.0, 0.0, 0.0).unwrap();
        for i in 0..=100 {
            let t = i as f64 * 0.1;
            assert_relative_eq!(
                variance_x(&near, t, InitialLevel::Ground),
                variance_x(&free, t, InitialLevel::Ground),
                max_relative = 1e-4
            );
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(QuenchParams::new(0.0, 1.0, 0.0).is_err());
        assert!(QuenchParams::new(1.0, -1.0, 0.0).is_err());
        assert!(QuenchParams::with_shift(1.0, 0.0, 1.0).is_err());
        assert_eq!(QuenchParams::new(1.0, 0.0, 2.0).unwrap().shift(), None);
        assert_eq!(half_freq(1.5).shift(), Some(1.5));
        assert!(InitialLevel::from_n(3).is_err());
    }
}
