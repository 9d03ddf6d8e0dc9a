//! One table per command. Every column is a function of the first one.

use std::f64::consts::PI;

use quench_core::classical::classical_free_density;
use quench_core::free_evolution::{density_profile, evolve, longtime_scaled_profile, width_qm};
use quench_core::harmonic::{mean_position, uncertainty_product, variance_p, variance_x};
use quench_core::wigner::{factorized_approx, fig7_integrand, wigner_from_psi, wigner_infinite_well};
use quench_core::{
    ClassicalEnsemble, EvolutionMethod, InitialLevel, QuenchParams, Result, SpatialGrid, Tolerances, UniformGrid,
    WellBranch, WellState,
};
use rayon::prelude::*;

use crate::config::{Command, RunConfig};
use crate::defaults::*;

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    fn from_columns(header: Vec<String>, axis: &[f64], columns: Vec<Vec<f64>>) -> Self {
        let rows = axis
            .iter()
            .enumerate()
            .map(|(i, &x)| std::iter::once(x).chain(columns.iter().map(|c| c[i])).collect())
            .collect();
        Table { header, rows }
    }
}

fn names(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Density at (x, t); the propagator route for t > 0.
fn rho(w: &WellState, x: f64, t: f64, tol: &Tolerances) -> Result<f64> {
    if t == 0.0 {
        return Ok(w.psi0(x).powi(2));
    }
    Ok(evolve(w, x, t, EvolutionMethod::Propagator, tol)?.norm_sqr())
}

fn column(axis: &[f64], f: impl Fn(f64) -> Result<f64> + Sync) -> Result<Vec<f64>> {
    axis.par_iter().map(|&x| f(x)).collect()
}

fn label(t: f64) -> String {
    // 0.07 -> "0.07", 1.0 -> "1"
    format!("{t}")
}

pub fn build(config: &RunConfig) -> Result<Table> {
    let tol = Tolerances::default();
    match config.command {
        Command::Fig1 => fig1(config),
        Command::Fig2 => fig2(config, &tol),
        Command::Fig3 => fig3(config, &tol),
        Command::Fig4 => fig4(config, &tol),
        Command::Fig5 => fig5(config, &tol),
        Command::Fig6 => fig6(config),
        Command::Fig7 => fig7(config),
        Command::Density => density(config, &tol),
        Command::Wigner => wigner(config, &tol),
        Command::Classical => classical(config, &tol),
        Command::Moments => moments(config),
        Command::Report => unreachable!("the report is not a figure table"),
    }
}

fn fig1(config: &RunConfig) -> Result<Table> {
    let ratio = config.get("omega-ratio", FIG1_OMEGA_RATIO);
    let omega_f = ratio * OMEGA_I;
    // any nonzero force: the mean is reported in units of a_F
    let force = 1.0;
    let p = QuenchParams::new(OMEGA_I, omega_f, force)?;
    let a_f = force / (omega_f * omega_f);
    let axis = UniformGrid::new(0.0, FIG1_PERIODS * 2.0 * PI, config.count(FIG1_POINTS))?.points();
    let dx0 = variance_x(&p, 0.0, InitialLevel::Ground).sqrt();
    let dp0 = variance_p(&p, 0.0).sqrt();
    let rows = axis
        .iter()
        .map(|&phase| {
            let t = phase / omega_f;
            vec![
                phase,
                mean_position(&p, t) / a_f,
                variance_x(&p, t, InitialLevel::Ground).sqrt() / dx0,
                variance_p(&p, t).sqrt() / dp0,
                2.0 * uncertainty_product(&p, t),
            ]
        })
        .collect();
    Ok(Table {
        header: names(&["omega_f_t", "mean_over_aF", "dx_over_dx0", "dp_over_dp0", "product_2dxdp_over_hbar"]),
        rows,
    })
}

fn x_axis(config: &RunConfig, default_max: f64, default_n: usize) -> Result<Vec<f64>> {
    let x_max = config.get("xmax", default_max);
    Ok(SpatialGrid::symmetric(x_max, config.count(default_n))?.points())
}

fn fig2(config: &RunConfig, tol: &Tolerances) -> Result<Table> {
    let w = WellState::from_k0a(config.get("k0a", FIG2_K0A))?;
    let grid = SpatialGrid::symmetric(config.get("xmax", X_MAX), config.count(X_POINTS))?;
    let mut header = names(&["x_over_a"]);
    let mut columns = Vec::new();
    for t in FIG2_TIMES {
        header.push(format!("a_rho_t{}", label(t)));
        let method = if t == 0.0 { EvolutionMethod::MomentumIntegral } else { EvolutionMethod::Propagator };
        columns.push(density_profile(&w, t, grid, method, tol)?.values);
    }
    Ok(Table::from_columns(header, &grid.points(), columns))
}

fn fig3(config: &RunConfig, tol: &Tolerances) -> Result<Table> {
    let axis = UniformGrid::new(0.0, config.get("t", FIG3_T_END), config.count(FIG3_POINTS))?.points();
    let mut header = names(&["t_over_t0"]);
    let mut columns = Vec::new();
    for (k0a, name) in FIG3_K0A {
        let w = WellState::from_k0a(k0a)?;
        header.push(format!("a_rho_{name}"));
        columns.push(column(&axis, |t| rho(&w, 0.0, t, tol))?);
    }
    Ok(Table::from_columns(header, &axis, columns))
}

fn fig4(config: &RunConfig, tol: &Tolerances) -> Result<Table> {
    let w = WellState::from_k0a(config.get("k0a", FIG4_K0A))?;
    let e = ClassicalEnsemble::from_well(w);
    let axis = UniformGrid::new(0.0, config.get("t", FIG4_T_END), config.count(FIG4_POINTS))?.points();
    let mut header = names(&["t_over_t0"]);
    let mut columns = Vec::new();
    for x in FIG4_POSITIONS {
        header.push(format!("qm_x{}", label(x)));
        columns.push(column(&axis, |t| rho(&w, x, t, tol))?);
        header.push(format!("cl_x{}", label(x)));
        columns.push(column(&axis, |t| classical_free_density(&e, x, t, tol))?);
    }
    Ok(Table::from_columns(header, &axis, columns))
}

fn fig5(config: &RunConfig, tol: &Tolerances) -> Result<Table> {
    let w = WellState::from_k0a(config.get("k0a", FIG5_K0A))?;
    let grid = SpatialGrid::symmetric(config.get("xmax", X_MAX), config.count(X_POINTS))?;
    let mut header = names(&["u"]);
    let mut columns = Vec::new();
    for t in FIG5_TIMES {
        header.push(format!("scaled_t{}", label(t)));
        columns.push(longtime_scaled_profile(&w, t, grid, tol)?.values);
    }
    header.push("limit".into());
    let axis = grid.points();
    columns.push(axis.iter().map(|&u| w.psi0_momentum(u).powi(2)).collect());
    Ok(Table::from_columns(header, &axis, columns))
}

fn fig6(config: &RunConfig) -> Result<Table> {
    let w = WellState::infinite();
    let axis = UniformGrid::new(0.0, config.get("xmax", FIG6_AK_MAX), config.count(FIG6_POINTS))?.points();
    let mut header = names(&["ak"]);
    let mut columns = Vec::new();
    for x in FIG6_POSITIONS {
        header.push(format!("hW_x{}", label(x)));
        columns.push(axis.iter().map(|&k| wigner_infinite_well(x, k)).collect());
    }
    header.push("factorized_x0".into());
    columns.push(axis.iter().map(|&k| factorized_approx(&w, 0.0, k)).collect());
    Ok(Table::from_columns(header, &axis, columns))
}

fn fig7(config: &RunConfig) -> Result<Table> {
    let axis = x_axis(config, FIG7_AK_MAX, FIG7_POINTS)?;
    let mut header = names(&["ak"]);
    let mut columns = Vec::new();
    for t in FIG7_TIMES {
        header.push(format!("integrand_t{}", label(t)));
        columns.push(axis.iter().map(|&k| fig7_integrand(t, k)).collect());
    }
    Ok(Table::from_columns(header, &axis, columns))
}

fn density(config: &RunConfig, tol: &Tolerances) -> Result<Table> {
    let w = WellState::from_k0a(config.get("k0a", DENSITY_K0A))?;
    let t = config.get("t", DENSITY_T);
    let axis = x_axis(config, X_MAX, X_POINTS)?;
    let values = column(&axis, |x| rho(&w, x, t, tol))?;
    Ok(Table::from_columns(names(&["x_over_a", "a_rho"]), &axis, vec![values]))
}

fn wigner(config: &RunConfig, tol: &Tolerances) -> Result<Table> {
    let w = WellState::from_k0a(config.get("k0a", WIGNER_K0A))?;
    let t = config.get("t", WIGNER_T);
    let n = config.count(WIGNER_POINTS);
    let xs = SpatialGrid::symmetric(config.get("xmax", WIGNER_X_MAX), n)?.points();
    let ks = SpatialGrid::symmetric(WIGNER_AK_MAX, n)?.points();
    let rows = xs
        .par_iter()
        .map(|&x| {
            ks.iter()
                .map(|&k| {
                    // free flight shears the initial function: W(x - k t, k)
                    let x0 = x - k * t;
                    let value = match w.branch() {
                        WellBranch::Infinite => wigner_infinite_well(x0, k),
                        _ => wigner_from_psi(&w, x0, k, tol)?,
                    };
                    Ok(vec![x, k, value])
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .concat();
    Ok(Table {
        header: names(&["x_over_a", "ak", "hW"]),
        rows,
    })
}

fn classical(config: &RunConfig, tol: &Tolerances) -> Result<Table> {
    let w = WellState::from_k0a(config.get("k0a", CLASSICAL_K0A))?;
    let e = ClassicalEnsemble::from_well(w);
    let t = config.get("t", CLASSICAL_T);
    let axis = x_axis(config, X_MAX, X_POINTS)?;
    let cl = column(&axis, |x| classical_free_density(&e, x, t, tol))?;
    let qm = column(&axis, |x| rho(&w, x, t, tol))?;
    Ok(Table::from_columns(names(&["x_over_a", "a_rho_cl", "a_rho_qm"]), &axis, vec![cl, qm]))
}

fn moments(config: &RunConfig) -> Result<Table> {
    let k0a = config.get("k0a", MOMENTS_K0A);
    let w = WellState::from_k0a(k0a)?;
    let t = config.get("t", MOMENTS_T);
    let m = w.moments();
    let cl = quench_core::classical::classical_width(&ClassicalEnsemble::from_well(w), t);
    Ok(Table {
        header: names(&["k0a", "t_over_t0", "x2_over_a2", "p2_a2", "width_qm", "width_cl"]),
        rows: vec![vec![k0a, t, m.x2, m.p2, width_qm(&w, t), cl]],
    })
}
