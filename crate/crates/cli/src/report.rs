//! Invariant suites behind the `report` command.

use std::f64::consts::{FRAC_PI_2, PI};

use quench_core::classical::{classical_free_density, classical_harmonic_density, classical_width};
use quench_core::free_evolution::{evolve_momentum, evolve_propagator, longtime_scaled_profile, spread, width_qm};
use quench_core::harmonic::{density, uncertainty_product};
use quench_core::quadrature::{uniform_panels, Quadrature};
use quench_core::wigner::{
    sheared_marginal_infinite_well, wigner_from_psi, wigner_from_psi_complex, wigner_infinite_well,
};
use quench_core::{
    integrate_density, ClassicalEnsemble, EvolutionMethod, GaussianPacket, InitialLevel, QuenchParams, Result,
    SpatialGrid, Temperature, Tolerances, WellState,
};

pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub passed: bool,
}

impl Check {
    /// Passes when `value` (a deviation) is below `bound`.
    fn below(suite: &'static str, name: impl Into<String>, value: Result<f64>, bound: f64) -> Self {
        let value = value.unwrap_or(f64::NAN);
        Check {
            suite,
            name: name.into(),
            value,
            bound,
            passed: value < bound,
        }
    }
}

fn wells() -> Vec<(&'static str, WellState)> {
    vec![
        ("infinite", WellState::infinite()),
        ("finite_pi3", WellState::finite(PI / 3.0).expect("valid k0a")),
        ("delta", WellState::delta(1.0).expect("valid kappa")),
    ]
}

fn max_over(items: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for v in items {
        worst = worst.max(v?);
    }
    Ok(worst)
}

fn normalization(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    let q = Quadrature::new(1e-14, 1e-12);
    for (name, w) in wells() {
        let norm = q.integrate_panels(|x| w.psi0(x).powi(2), &uniform_panels(0.0, 60.0, 600));
        out.push(Check::below(
            "normalization",
            format!("psi0 {name}"),
            norm.map(|n| (2.0 * n.value - 1.0).abs()),
            1e-10,
        ));
        let parseval = 2.0 * w.momentum_moment_tail(0.0, 0);
        out.push(Check::below("normalization", format!("momentum {name}"), Ok((parseval - 1.0).abs()), 1e-6));
    }
    let p = QuenchParams::new(1.0, 0.5, 0.3).expect("valid params");
    for level in [InitialLevel::Ground, InitialLevel::First, InitialLevel::Second] {
        let grid = SpatialGrid::new(-20.0, 20.0, 4001).expect("valid grid");
        let norm = density(&p, 2.0, grid, level, tol).and_then(|d| integrate_density(&d));
        out.push(Check::below(
            "normalization",
            format!("oscillator n={}", level.n()),
            norm.map(|n| (n - 1.0).abs()),
            1e-6,
        ));
    }
    let e = ClassicalEnsemble::from_well(WellState::infinite());
    let t = 1.0;
    let x_max = 40.0;
    let inside = q.integrate_panels(
        |x| classical_free_density(&e, x, t, tol).unwrap_or(f64::NAN),
        &uniform_panels(-x_max, x_max, 400),
    );
    let outside = 2.0 * WellState::infinite().momentum_moment_tail(x_max / t, 0);
    out.push(Check::below(
        "normalization",
        "classical infinite t=1",
        inside.map(|i| (i.value + outside - 1.0).abs()),
        1e-6,
    ));
    out
}

fn parity(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, w) in wells() {
        let gap = max_over([0.3, 1.1, 2.7, 4.0].into_iter().map(|x| {
            let a = evolve_momentum(&w, x, 0.3, tol)?.norm_sqr();
            let b = evolve_momentum(&w, -x, 0.3, tol)?.norm_sqr();
            Ok((a - b).abs())
        }));
        out.push(Check::below("parity", format!("rho(x) = rho(-x) {name}"), gap, 1e-8));
    }
    let gap = max_over([(0.2, 1.0), (0.7, 4.5), (0.0, 2.2)].into_iter().map(|(x, k)| {
        Ok((wigner_infinite_well(x, k) - wigner_infinite_well(x, -k)).abs())
    }));
    out.push(Check::below("parity", "W(x, k) = W(x, -k) infinite", gap, 1e-15));
    out
}

fn reality(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, w) in wells() {
        let residue = max_over([(0.2, 0.3), (0.9, -2.0), (0.0, 5.0)].into_iter().map(|(x, p)| {
            Ok(wigner_from_psi_complex(&w, x, p, tol)?.im.abs())
        }));
        out.push(Check::below("reality", format!("Im W {name}"), residue, tol.quad_abs));
    }
    let g = GaussianPacket::oscillator_ground_state(1.0);
    let residue = max_over([(0.3, -0.7), (1.2, 0.4)].into_iter().map(|(x, p)| {
        Ok(wigner_from_psi_complex(&g, x, p, tol)?.im.abs())
    }));
    out.push(Check::below("reality", "Im W gaussian", residue, tol.quad_abs));
    out
}

fn singularities() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, w) in [
        ("infinite", WellState::infinite()),
        ("finite_pi2.5", WellState::finite(PI / 2.5).expect("valid k0a")),
        ("finite_1", WellState::finite(1.0).expect("valid k0a")),
    ] {
        let k0 = w.k0();
        let at = w.psi0_momentum(k0);
        let gap = max_over([1e-9, 1e-7, 1e-6 * k0, 1e-5].into_iter().flat_map(|d| {
            [k0 - d, k0 + d].map(|k| Ok((w.psi0_momentum(k) - at).abs() / (1e-8 + d)))
        }));
        out.push(Check::below("removable singularity", format!("psi(k) near k0 {name}"), gap, 10.0));
    }
    let gap = max_over([0.0, FRAC_PI_2, -FRAC_PI_2].into_iter().flat_map(|k| {
        [1e-10, 1e-7, 1e-4].map(move |d| Ok((wigner_infinite_well(0.4, k + d) - wigner_infinite_well(0.4, k)).abs() / d))
    }));
    out.push(Check::below("removable singularity", "W at k = 0 and 2ak = +-pi", gap, 10.0));
    out
}

fn unitarity(tol: &Tolerances) -> Vec<Check> {
    let w = WellState::infinite();
    [0.07f64, 0.14, 0.28, 1.0, 10.0]
        .into_iter()
        .map(|t| {
            let x_max = (60.0 * t).max(20.0);
            let s = spread(&w, t, x_max, EvolutionMethod::Propagator, tol);
            Check::below("unitarity", format!("norm infinite t={t}"), s.map(|s| (s.norm - 1.0).abs()), 1e-6)
        })
        .collect()
}

fn routes(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, w) in wells() {
        for t in [0.1, 1.0] {
            let gap = max_over((0..=40).map(|i| {
                let x = -5.0 + 0.25 * i as f64;
                let a = evolve_momentum(&w, x, t, tol)?.norm_sqr();
                let b = evolve_propagator(&w, x, t, tol)?.norm_sqr();
                Ok((a - b).abs())
            }));
            out.push(Check::below("route equivalence", format!("{name} t={t}"), gap, 1e-6));
        }
    }
    for t in [0.07, 0.14] {
        let gap = max_over((0..=12).map(|i| {
            let x = -3.0 + 0.5 * i as f64;
            let direct = evolve_propagator(&WellState::infinite(), x, t, tol)?.norm_sqr();
            Ok((sheared_marginal_infinite_well(x, t, tol)? - direct).abs())
        }));
        out.push(Check::below("route equivalence", format!("wigner shear t={t}"), gap, 1e-3));
    }
    out
}

fn widths(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, w) in wells() {
        for t in [0.5f64, 1.0, 2.0] {
            let s = spread(&w, t, (60.0 * t).max(10.0), EvolutionMethod::Propagator, tol);
            let exact = width_qm(&w, t);
            out.push(Check::below(
                "width law",
                format!("{name} t={t}"),
                s.map(|s| (s.second_moment / exact - 1.0).abs()),
                1e-4,
            ));
            let cl = classical_width(&ClassicalEnsemble::from_well(w), t);
            out.push(Check::below("width law", format!("classical = quantum {name} t={t}"), Ok((cl - exact).abs()), 1e-15));
        }
    }
    out
}

fn oscillator(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    let p = QuenchParams::new(1.0, 0.5, 0.0).expect("valid params");
    let lowest = (0..=2000)
        .map(|i| 2.0 * uncertainty_product(&p, i as f64 * 0.01))
        .fold(f64::INFINITY, f64::min);
    out.push(Check::below("oscillator", "2 dx dp >= hbar", Ok((1.0 - lowest).max(0.0)), 1e-12));
    for (omega_f, force) in [(0.5, 0.0), (2.0, 0.3), (0.0, 0.7)] {
        let p = QuenchParams::new(1.0, omega_f, force).expect("valid params");
        let grid = SpatialGrid::new(-5.0, 5.0, 101).expect("valid grid");
        let gap = max_over((0..=100).map(|j| {
            let t = 0.1 * j as f64;
            let q = density(&p, t, grid, InitialLevel::Ground, tol)?;
            max_over(q.points().into_iter().zip(q.values).map(|(x, v)| {
                Ok((classical_harmonic_density(&p, Temperature::QuantumMatched, x, t)? - v).abs())
            }))
        }));
        out.push(Check::below(
            "oscillator",
            format!("classical = quantum omega_f={omega_f} F={force}"),
            gap,
            1e-10,
        ));
    }
    out
}

fn phase_space(tol: &Tolerances) -> Vec<Check> {
    let mut out = Vec::new();
    let w = WellState::infinite();
    let q = Quadrature::new(1e-12, 1e-10);
    let gap = max_over([0.0, 0.5, 0.8].into_iter().map(|x| {
        let m = q.integrate_panels(|k| wigner_infinite_well(x, k), &uniform_panels(-400.0, 400.0, 800))?;
        Ok((m.value - w.psi0(x).powi(2)).abs())
    }));
    out.push(Check::below("wigner", "position marginal", gap, 1e-4));
    let gap = max_over([0.0, 1.3, 4.0].into_iter().map(|k| {
        let m = q.integrate_panels(|x| wigner_infinite_well(x, k), &uniform_panels(-1.0, 1.0, 16))?;
        Ok((m.value - w.psi0_momentum(k).powi(2)).abs())
    }));
    out.push(Check::below("wigner", "momentum marginal", gap, 1e-4));
    let gap = max_over([(0.0, 0.0), (0.5, 2.0), (-0.3, FRAC_PI_2), (0.9, -7.3)].into_iter().map(|(x, k)| {
        Ok((wigner_from_psi(&w, x, k, tol)? - wigner_infinite_well(x, k)).abs())
    }));
    out.push(Check::below("wigner", "closed form = quadrature", gap, 1e-8));
    let low = (0..=800).map(|i| wigner_infinite_well(0.0, 0.01 * i as f64)).fold(f64::INFINITY, f64::min);
    out.push(Check::below("wigner", "negativity (min W + 1e-3)", Ok(low + 1e-3), 0.0));
    let g = GaussianPacket::oscillator_ground_state(1.0);
    let gap = max_over([(0.3, -0.7), (0.0, 0.0), (-1.1, 0.9)].into_iter().map(|(x, p)| {
        Ok((wigner_from_psi(&g, x, p, tol)? - g.psi(x).powi(2) * g.psi_momentum(p).powi(2)).abs())
    }));
    out.push(Check::below("wigner", "gaussian factorizes", gap, 1e-8));
    out
}

fn long_time(tol: &Tolerances) -> Vec<Check> {
    let w = WellState::infinite();
    let grid = SpatialGrid::new(-6.0, 6.0, 241).expect("valid grid");
    let peak = w.psi0_momentum(0.0).powi(2);
    let deviation = |t: f64| -> Result<f64> {
        let d = longtime_scaled_profile(&w, t, grid, tol)?;
        Ok(d.points()
            .iter()
            .zip(&d.values)
            .map(|(u, v)| (v - w.psi0_momentum(*u).powi(2)).abs())
            .fold(0.0, f64::max))
    };
    let late = deviation(10.0);
    let early = deviation(1.0);
    let ordered = match (&early, &late) {
        (Ok(e), Ok(l)) => Ok(if e > l { 0.0 } else { 1.0 }),
        _ => Err(quench_core::Error::InvalidTime(1.0)),
    };
    vec![
        Check::below("long time", "t=10 deviation / peak", late.map(|d| d / peak), 0.02),
        Check::below("long time", "t=1 deviation exceeds t=10", ordered, 0.5),
    ]
}

pub fn run_all() -> Vec<Check> {
    let tol = Tolerances::default();
    let mut checks = Vec::new();
    checks.extend(normalization(&tol));
    checks.extend(parity(&tol));
    checks.extend(reality(&tol));
    checks.extend(singularities());
    checks.extend(unitarity(&tol));
    checks.extend(routes(&tol));
    checks.extend(widths(&tol));
    checks.extend(oscillator(&tol));
    checks.extend(phase_space(&tol));
    checks.extend(long_time(&tol));
    checks
}
