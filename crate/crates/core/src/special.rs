//! Small special functions shared by the closed forms.

use num_complex::Complex64;

/// Below this |z| the series for sin(z)/z is used. The truncation error of the
/// three-term series is z^6/5040, far below machine epsilon here.
const SINC_SERIES_BELOW: f64 = 1e-3;

/// sin(z)/z, finite at z = 0.
#[inline]
pub fn sinc(z: f64) -> f64 {
    if z.abs() < SINC_SERIES_BELOW {
        let z2 = z * z;
        1.0 - z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sin() / z
    }
}

/// sin(z)/z for complex arguments.
#[inline]
pub fn sinc_complex(z: Complex64) -> Complex64 {
    if z.norm() < SINC_SERIES_BELOW {
        let z2 = z * z;
        Complex64::new(1.0, 0.0) - z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sin() / z
    }
}

/// Laguerre polynomial L_n(u) for n <= 2.
#[inline]
pub fn laguerre(n: u8, u: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => 1.0 - u,
        2 => 1.0 - 2.0 * u + 0.5 * u * u,
        _ => unreachable!("only levels 0..=2 are supported"),
    }
}
