//! Shared fixtures for the benchmarks.

use std::f64::consts::PI;

use quench_core::{QuenchParams, SpatialGrid, WellState};

/// The three well branches at their reference parameters.
pub fn wells() -> [(&'static str, WellState); 3] {
    [
        ("infinite", WellState::infinite()),
        ("finite_pi3", WellState::finite(PI / 3.0).expect("valid k0 a")),
        ("delta", WellState::delta(1.0).expect("valid kappa")),
    ]
}

/// Frequency halving without a force.
pub fn oscillator() -> QuenchParams {
    QuenchParams::new(1.0, 0.5, 0.0).expect("valid quench")
}

pub fn profile_grid(n: usize) -> SpatialGrid {
    SpatialGrid::symmetric(3.0, n).expect("valid grid")
}
