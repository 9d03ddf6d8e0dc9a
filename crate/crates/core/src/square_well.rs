//! Ground state of an attractive square well and its two limits.
//!
//! Lengths are in units of the half width `a` (a = 1). The well is
//! parametrised by `k0 a` directly; the depth never enters the dynamics.
//!
//! * finite well, 0 < k0 a < pi/2: `c0 cos(k0 x)/cos(k0 a)` inside and
//!   `c0 exp(-kappa(|x| - a))` outside, with kappa = k0 tan(k0 a);
//! * infinite well, k0 a = pi/2: `cos(k0 x)/sqrt(a)` inside, zero outside;
//! * delta well (a -> 0 at fixed kappa): `sqrt(kappa) exp(-kappa |x|)`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{merge_breakpoints, uniform_panels, Quadrature};
use crate::special::{sinc, sinc_complex};
use crate::wavefunction::WaveFunction;

/// Wave functions are treated as zero once they drop below this.
const NEGLIGIBLE: f64 = 1e-12;

/// Upper end of the explicit quadrature in momentum-space moments; the rest
/// comes from the 1/k^4 asymptote of |psi(k)|^2.
const MOMENT_QUADRATURE_SPAN: f64 = 16_384.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WellBranch {
    Finite,
    Delta,
    Infinite,
}

/// <x^2> and <p^2> of the initial state (both first moments vanish).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub x2: f64,
    pub p2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellState {
    branch: WellBranch,
    /// Half width; zero for the delta well.
    a: f64,
    k0: f64,
    kappa: f64,
    c0: f64,
    singularity_window: f64,
    moments: Moments,
}

impl WellState {
    /// Finite well with 0 < k0 a < pi/2.
    pub fn finite(k0a: f64) -> Result<Self> {
        if !(k0a > 0.0 && k0a < FRAC_PI_2) {
            return Err(Error::param("k0a", format!("finite well needs 0 < k0a < pi/2, got {k0a}")));
        }
        let a = 1.0;
        let k0 = k0a / a;
        let kappa = k0 * k0a.tan();
        let c0 = (1.0 / kappa + a * (1.0 + kappa * kappa / (k0 * k0)) + kappa / (k0 * k0)).powf(-0.5);
        Ok(Self::build(WellBranch::Finite, a, k0, kappa, c0))
    }

    /// Infinitely deep well, k0 a = pi/2.
    pub fn infinite() -> Self {
        let a = 1.0;
        Self::build(WellBranch::Infinite, a, FRAC_PI_2 / a, f64::INFINITY, 0.0)
    }

    pub fn delta(kappa: f64) -> Result<Self> {
        if !(kappa.is_finite() && kappa > 0.0) {
            return Err(Error::param("kappa", format!("must be > 0, got {kappa}")));
        }
        Ok(Self::build(WellBranch::Delta, 0.0, 0.0, kappa, kappa.sqrt()))
    }

    /// Infinite well for k0 a = pi/2 (to 1e-12), finite well below.
    pub fn from_k0a(k0a: f64) -> Result<Self> {
        if (k0a - FRAC_PI_2).abs() <= 1e-12 {
            Ok(Self::infinite())
        } else {
            Self::finite(k0a)
        }
    }

    fn build(branch: WellBranch, a: f64, k0: f64, kappa: f64, c0: f64) -> Self {
        let mut w = WellState {
            branch,
            a,
            k0,
            kappa,
            c0,
            singularity_window: 1e-6,
            moments: Moments { x2: 0.0, p2: 0.0 },
        };
        w.moments = w.compute_moments();
        w
    }

    /// Overrides the relative Taylor window around |k| = k0.
    pub fn with_singularity_window(mut self, window: f64) -> Self {
        self.singularity_window = window;
        self
    }

    pub fn branch(&self) -> WellBranch {
        self.branch
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    pub fn k0a(&self) -> f64 {
        self.k0 * self.a
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn c0(&self) -> f64 {
        self.c0
    }

    pub fn moments(&self) -> Moments {
        self.moments
    }

    pub fn psi0(&self, x: f64) -> f64 {
        let ax = x.abs();
        match self.branch {
            WellBranch::Finite if ax <= self.a => self.c0 * (self.k0 * x).cos() / (self.k0 * self.a).cos(),
            WellBranch::Finite => self.c0 * (-self.kappa * (ax - self.a)).exp(),
            WellBranch::Infinite if ax <= self.a => (self.k0 * x).cos() / self.a.sqrt(),
            WellBranch::Infinite => 0.0,
            WellBranch::Delta => self.kappa.sqrt() * (-self.kappa * ax).exp(),
        }
    }

    /// d psi0 / dx (one-sided value at the kinks).
    pub fn psi0_derivative(&self, x: f64) -> f64 {
        let ax = x.abs();
        let sign = x.signum();
        match self.branch {
            WellBranch::Finite if ax <= self.a => {
                -self.c0 * self.k0 * (self.k0 * x).sin() / (self.k0 * self.a).cos()
            }
            WellBranch::Finite => -sign * self.kappa * self.c0 * (-self.kappa * (ax - self.a)).exp(),
            WellBranch::Infinite if ax <= self.a => -self.k0 * (self.k0 * x).sin() / self.a.sqrt(),
            WellBranch::Infinite => 0.0,
            WellBranch::Delta => -sign * self.kappa * self.psi0(x),
        }
    }

    // kappa cos(ka) - k sin(ka) and its first two derivatives
    fn numerator(&self, k: f64) -> (f64, f64, f64) {
        let a = self.a;
        let (s, c) = (k * a).sin_cos();
        let n0 = self.kappa * c - k * s;
        let n1 = -self.kappa * a * s - s - k * a * c;
        let n2 = -self.kappa * a * a * c - 2.0 * a * c + k * a * a * s;
        (n0, n1, n2)
    }

    /// Momentum amplitude psi(hbar k) (real and even).
    pub fn psi0_momentum(&self, k: f64) -> f64 {
        match self.branch {
            WellBranch::Delta => {
                2.0 * self.kappa.powf(1.5) / (2.0 * PI).sqrt() / (k * k + self.kappa * self.kappa)
            }
            // 2 k0 cos(ka) / (k0^2 - k^2) / sqrt(2 pi a), rewritten as two sinc terms
            // so that |k| = k0 is not special
            WellBranch::Infinite => {
                (self.a / (2.0 * PI)).sqrt() * (sinc((self.k0 - k) * self.a) + sinc((self.k0 + k) * self.a))
            }
            WellBranch::Finite => {
                let k = k.abs();
                let pref = 2.0 * self.c0 / (2.0 * PI).sqrt();
                let kk = self.kappa * self.kappa;
                let k02 = self.k0 * self.k0;
                let delta = k - self.k0;
                let (n0, _, _) = self.numerator(k);
                if delta.abs() < self.singularity_window * self.k0 {
                    // N(k0) = 0, so N/(k^2 - k0^2) = (N' + N'' delta/2)/(k + k0) + O(delta^2)
                    let (_, n1, n2) = self.numerator(self.k0);
                    let ratio = (n1 + 0.5 * n2 * delta) / (k + self.k0);
                    pref * (n0 / (k * k + kk) - ratio)
                } else {
                    pref * n0 * (1.0 / (k * k + kk) - 1.0 / (k * k - k02))
                }
            }
        }
    }

    /// Analytic continuation of the momentum amplitude to complex k. Only
    /// meant for points well away from the removable singularities.
    pub fn psi0_momentum_complex(&self, k: Complex64) -> Complex64 {
        let k2 = k * k;
        match self.branch {
            WellBranch::Delta => 2.0 * self.kappa.powf(1.5) / (2.0 * PI).sqrt() / (k2 + self.kappa * self.kappa),
            WellBranch::Infinite => {
                let a = self.a;
                (a / (2.0 * PI)).sqrt() * (sinc_complex((self.k0 - k) * a) + sinc_complex((self.k0 + k) * a))
            }
            WellBranch::Finite => {
                let a = self.a;
                let n0 = self.kappa * (k * a).cos() - k * (k * a).sin();
                let pref = 2.0 * self.c0 / (2.0 * PI).sqrt();
                pref * n0 * (1.0 / (k2 + self.kappa * self.kappa) - 1.0 / (k2 - self.k0 * self.k0))
            }
        }
    }

    /// Exponential type of the momentum amplitude: |psi(k)| grows at most like
    /// exp(a |Im k|) off the real axis.
    pub fn momentum_growth(&self) -> f64 {
        self.a
    }

    /// lim k^4 |psi(k)|^2, averaged over the oscillation.
    pub fn momentum_tail_coefficient(&self) -> f64 {
        match self.branch {
            WellBranch::Infinite => self.k0 * self.k0 / (PI * self.a),
            WellBranch::Delta => 2.0 * self.kappa.powi(3) / PI,
            // decays like k^-6
            WellBranch::Finite => 0.0,
        }
    }

    /// One-sided momentum moment int_{k_from}^inf k^power |psi(k)|^2 dk for
    /// power 0 or 2: explicit quadrature over a long stretch, then the 1/k^4
    /// asymptote for the remainder.
    pub fn momentum_moment_tail(&self, k_from: f64, power: i32) -> f64 {
        assert!(power == 0 || power == 2, "only power 0 and 2 converge");
        let k_from = k_from.max(0.0);
        let k_end = k_from + MOMENT_QUADRATURE_SPAN;
        // one panel per half period of cos^2(ka); geometric for the delta well
        let panels = if self.a > 0.0 {
            let n = ((k_end - k_from) * self.a / (0.5 * PI)).ceil() as usize;
            uniform_panels(k_from, k_end, n)
        } else {
            let mut p = vec![k_from];
            let mut k = k_from.max(self.kappa * 1e-2);
            while k < k_end {
                p.push(k);
                k *= 1.5;
            }
            p.push(k_end);
            p.dedup();
            p
        };
        let panels = merge_breakpoints(panels, [self.k0]);
        let q = Quadrature::new(1e-14, 1e-12);
        let body = q
            .integrate_panels(|k| k.powi(power) * self.psi0_momentum(k).powi(2), &panels)
            .expect("momentum moment quadrature")
            .value;
        let remainder = self.momentum_tail_coefficient() * k_end.powi(power - 3) / (3 - power) as f64;
        body + remainder
    }

    fn compute_moments(&self) -> Moments {
        let q = Quadrature::new(1e-14, 1e-12);
        let outer = self.extent();
        let breaks = merge_breakpoints(uniform_panels(0.0, outer, 16), [self.a]);
        let x2 = 2.0
            * q.integrate_panels(|x| x * x * self.psi0(x).powi(2), &breaks)
                .expect("position moment quadrature")
                .value;
        let p2 = 2.0 * self.momentum_moment_tail(0.0, 2);
        Moments { x2, p2 }
    }
}

impl WaveFunction for WellState {
    fn amplitude(&self, x: f64) -> Complex64 {
        Complex64::new(self.psi0(x), 0.0)
    }

    fn extent(&self) -> f64 {
        match self.branch {
            WellBranch::Infinite => self.a,
            WellBranch::Finite => self.a + (self.c0 / NEGLIGIBLE).ln() / self.kappa,
            WellBranch::Delta => (self.kappa.sqrt() / NEGLIGIBLE).ln() / self.kappa,
        }
    }

    fn kinks(&self) -> Vec<f64> {
        match self.branch {
            WellBranch::Delta => vec![0.0],
            _ => vec![-self.a, self.a],
        }
    }
}
