//! Default parameters for every command. Tests and the README refer to these.

use std::f64::consts::PI;

/// Initial trap frequency; all oscillator quantities are in its units.
pub const OMEGA_I: f64 = 1.0;
pub const FIG1_OMEGA_RATIO: f64 = 0.5;
/// fig1 abscissa omega_f t runs over [0, FIG1_PERIODS * 2 pi].
pub const FIG1_PERIODS: f64 = 2.0;
pub const FIG1_POINTS: usize = 1601;

/// Half width and sample count of the x/a axis for figures 2 to 5.
pub const X_MAX: f64 = 6.0;
pub const X_POINTS: usize = 1201;

pub const FIG2_K0A: f64 = PI / 2.0;
pub const FIG2_TIMES: [f64; 4] = [0.0, 0.07, 0.14, 0.28];

pub const FIG3_K0A: [(f64, &str); 3] = [(PI / 2.0, "pi2"), (PI / 2.5, "pi2.5"), (PI / 3.0, "pi3")];
pub const FIG3_T_END: f64 = 0.3;
pub const FIG3_POINTS: usize = 301;

pub const FIG4_K0A: f64 = PI / 2.0;
pub const FIG4_POSITIONS: [f64; 3] = [0.0, 1.0, 2.0];
pub const FIG4_T_END: f64 = 3.0;
pub const FIG4_POINTS: usize = 301;

pub const FIG5_K0A: f64 = PI / 2.0;
pub const FIG5_TIMES: [f64; 4] = [1.0, 2.0, 5.0, 10.0];

/// fig6: W(x, k) against a k for x = 0 and x = a/2.
pub const FIG6_POSITIONS: [f64; 2] = [0.0, 0.5];
pub const FIG6_AK_MAX: f64 = 10.0;
pub const FIG6_POINTS: usize = 1001;

pub const FIG7_TIMES: [f64; 2] = [0.14, 0.07];
pub const FIG7_AK_MAX: f64 = 15.0;
pub const FIG7_POINTS: usize = 1201;

pub const DENSITY_K0A: f64 = PI / 2.0;
pub const DENSITY_T: f64 = 0.14;

pub const WIGNER_K0A: f64 = PI / 2.0;
pub const WIGNER_T: f64 = 0.0;
pub const WIGNER_X_MAX: f64 = 1.5;
pub const WIGNER_AK_MAX: f64 = 10.0;
pub const WIGNER_POINTS: usize = 121;

pub const CLASSICAL_K0A: f64 = PI / 2.0;
pub const CLASSICAL_T: f64 = 1.0;

pub const MOMENTS_K0A: f64 = PI / 2.0;
pub const MOMENTS_T: f64 = 1.0;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "QUENCH_THREADS";
