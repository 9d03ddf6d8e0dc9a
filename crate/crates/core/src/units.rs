//! Natural unit conventions.
//!
//! Every routine in this crate works with hbar = m = 1. The square-well
//! problems additionally measure lengths in units of the half width `a`, so
//! times come out in units of `t0 = m a^2 / hbar`; the oscillator problems
//! measure frequencies in units of the initial trap frequency.

use crate::density::DensityProfile;
use crate::grid::UniformGrid;

pub const HBAR: f64 = 1.0;
pub const MASS: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    /// hbar = m = a = 1, so t0 = 1.
    NaturalSquareWell,
    /// hbar = m = omega_i = 1; the length unit is sqrt(hbar / m omega_i).
    NaturalOscillator,
}

impl UnitSystem {
    pub fn hbar(self) -> f64 {
        HBAR
    }

    pub fn mass(self) -> f64 {
        MASS
    }

    /// Time unit of the convention: t0 = m a^2 / hbar or 1 / omega_i.
    pub fn time_unit(self) -> f64 {
        1.0
    }
}

/// Re-expresses a density in a length unit `scale` times larger than the one it
/// was computed in. Positions are divided by `scale` and values multiplied by
/// it, so the integral is unchanged.
pub fn rescale_density(profile: &DensityProfile, scale: f64) -> DensityProfile {
    let grid = UniformGrid {
        start: profile.grid.start / scale,
        end: profile.grid.end / scale,
        n: profile.grid.n,
    };
    DensityProfile {
        grid,
        values: profile.values.iter().map(|v| v * scale).collect(),
        time: profile.time,
        method: profile.method,
    }
}
