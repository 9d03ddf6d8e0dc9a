use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "quench", version, about = "Figure data and self-checks for quench dynamics of trapped particles")]
#[command(after_help = "Units: hbar = m = 1; square-well lengths in units of the half width a, times in t0 = m a^2/hbar.\n\
Set QUENCH_THREADS to limit the worker threads. All output is CSV with a header row.")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandLine,
}

#[derive(Debug, Subcommand)]
pub enum CommandLine {
    /// Oscillator frequency quench: mean, widths and uncertainty product.
    ///
    /// Columns: omega_f_t, mean_over_aF, dx_over_dx0, dp_over_dp0, product_2dxdp_over_hbar.
    /// Accepts --omega-ratio (omega_f/omega_i, default 0.5), --nx (samples), --out.
    Fig1(Overrides),
    /// Released infinite-well ground state at t/t0 = 0, 0.07, 0.14, 0.28.
    ///
    /// Columns: x_over_a, a_rho_t0, a_rho_t0.07, a_rho_t0.14, a_rho_t0.28.
    /// Accepts --k0a (default pi/2), --xmax, --nx, --out.
    Fig2(Overrides),
    /// Density at the origin against time for k0 a = pi/2, pi/2.5, pi/3.
    ///
    /// Columns: t_over_t0, a_rho_pi2, a_rho_pi2.5, a_rho_pi3.
    /// Accepts --t (end time, default 0.3), --nx (samples), --out.
    Fig3(Overrides),
    /// Quantum and classical densities at x/a = 0, 1, 2 against time.
    ///
    /// Columns: t_over_t0, qm_x0, cl_x0, qm_x1, cl_x1, qm_x2, cl_x2 (all a rho).
    /// Accepts --k0a (default pi/2), --t (end time, default 3), --nx, --out.
    Fig4(Overrides),
    /// Scaled long-time density t rho(u t, t) against u = x/t.
    ///
    /// Columns: u, scaled_t1, scaled_t2, scaled_t5, scaled_t10, limit (|psi(u)|^2).
    /// Accepts --k0a (default pi/2), --xmax (u range), --nx, --out.
    Fig5(Overrides),
    /// Infinite-well Wigner function against a k at x = 0 and x = a/2.
    ///
    /// Columns: ak, hW_x0, hW_x0.5, factorized_x0.
    /// Accepts --xmax (largest a k, default 10), --nx, --out.
    Fig6(Overrides),
    /// Sheared Wigner integrand W(-k t, k) at t/t0 = 0.14 and 0.07.
    ///
    /// Columns: ak, integrand_t0.14, integrand_t0.07.
    /// Accepts --xmax (largest a k, default 15), --nx, --out.
    Fig7(Overrides),
    /// Quantum density of a released well state at one time.
    ///
    /// Columns: x_over_a, a_rho.
    /// Accepts --k0a, --t (default 0.14), --xmax, --nx, --out.
    Density(Overrides),
    /// Wigner function of a well ground state after free flight, long format.
    ///
    /// Columns: x_over_a, ak, hW.
    /// Accepts --k0a, --t (default 0), --xmax (x range, default 1.5), --nx (points per axis), --out.
    Wigner(Overrides),
    /// Classical factorized ensemble against the quantum density.
    ///
    /// Columns: x_over_a, a_rho_cl, a_rho_qm.
    /// Accepts --k0a, --t (default 1), --xmax, --nx, --out.
    Classical(Overrides),
    /// Initial moments and the width law at one time.
    ///
    /// Columns: k0a, t_over_t0, x2_over_a2, p2_a2, width_qm, width_cl.
    /// Accepts --k0a, --t (default 1), --out.
    Moments(Overrides),
    /// Run every invariant suite; exits nonzero if any check fails.
    ///
    /// Columns: suite, check, status, value, bound.
    /// Accepts --out.
    Report(Overrides),
}

#[derive(Debug, Clone, Default, Args)]
pub struct Overrides {
    /// k0 a of the square well, in (0, pi/2]
    #[arg(long, allow_negative_numbers = true)]
    pub k0a: Option<f64>,
    /// omega_f / omega_i of the oscillator quench
    #[arg(long = "omega-ratio", allow_negative_numbers = true)]
    pub omega_ratio: Option<f64>,
    /// time in units of t0 (end time for time-axis figures)
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<f64>,
    /// half width of the abscissa
    #[arg(long, allow_negative_numbers = true)]
    pub xmax: Option<f64>,
    /// number of samples along the abscissa
    #[arg(long)]
    pub nx: Option<usize>,
    /// output file (default: standard output)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Density,
    Wigner,
    Classical,
    Moments,
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Fig1 => "fig1",
            Command::Fig2 => "fig2",
            Command::Fig3 => "fig3",
            Command::Fig4 => "fig4",
            Command::Fig5 => "fig5",
            Command::Fig6 => "fig6",
            Command::Fig7 => "fig7",
            Command::Density => "density",
            Command::Wigner => "wigner",
            Command::Classical => "classical",
            Command::Moments => "moments",
            Command::Report => "report",
        }
    }

    fn accepted(self) -> &'static [&'static str] {
        match self {
            Command::Fig1 => &["omega-ratio", "nx"],
            Command::Fig2 => &["k0a", "xmax", "nx"],
            Command::Fig3 => &["t", "nx"],
            Command::Fig4 => &["k0a", "t", "nx"],
            Command::Fig5 => &["k0a", "xmax", "nx"],
            Command::Fig6 | Command::Fig7 => &["xmax", "nx"],
            Command::Density | Command::Wigner | Command::Classical => &["k0a", "t", "xmax", "nx"],
            Command::Moments => &["k0a", "t"],
            Command::Report => &[],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{command} does not take --{key}")]
    UnknownKey { command: &'static str, key: &'static str },
    #[error("invalid value for --{key}: {reason}")]
    InvalidValue { key: &'static str, reason: String },
}

/// A parsed invocation: which table to produce, the overridden keys and
/// where to write it.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub params: BTreeMap<&'static str, f64>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, ConfigError> {
        let (command, o) = match cli.command {
            CommandLine::Fig1(o) => (Command::Fig1, o),
            CommandLine::Fig2(o) => (Command::Fig2, o),
            CommandLine::Fig3(o) => (Command::Fig3, o),
            CommandLine::Fig4(o) => (Command::Fig4, o),
            CommandLine::Fig5(o) => (Command::Fig5, o),
            CommandLine::Fig6(o) => (Command::Fig6, o),
            CommandLine::Fig7(o) => (Command::Fig7, o),
            CommandLine::Density(o) => (Command::Density, o),
            CommandLine::Wigner(o) => (Command::Wigner, o),
            CommandLine::Classical(o) => (Command::Classical, o),
            CommandLine::Moments(o) => (Command::Moments, o),
            CommandLine::Report(o) => (Command::Report, o),
        };
        let given = [
            ("k0a", o.k0a),
            ("omega-ratio", o.omega_ratio),
            ("t", o.t),
            ("xmax", o.xmax),
            ("nx", o.nx.map(|n| n as f64)),
        ];
        let mut params = BTreeMap::new();
        for (key, value) in given {
            let Some(value) = value else { continue };
            if !command.accepted().contains(&key) {
                return Err(ConfigError::UnknownKey {
                    command: command.name(),
                    key,
                });
            }
            validate(key, value)?;
            params.insert(key, value);
        }
        Ok(RunConfig {
            command,
            params,
            output_path: o.out,
            format: Format::Csv,
        })
    }

    pub fn get(&self, key: &str, default: f64) -> f64 {
        self.params.get(key).copied().unwrap_or(default)
    }

    pub fn count(&self, default: usize) -> usize {
        self.params.get("nx").map_or(default, |&n| n as usize)
    }
}

fn validate(key: &'static str, value: f64) -> Result<(), ConfigError> {
    let bad = |reason: &str| {
        Err(ConfigError::InvalidValue {
            key,
            reason: format!("{reason}, got {value}"),
        })
    };
    if !value.is_finite() {
        return bad("must be finite");
    }
    match key {
        "k0a" if !(value > 0.0 && value <= std::f64::consts::FRAC_PI_2 + 1e-12) => bad("must lie in (0, pi/2]"),
        "omega-ratio" if value <= 0.0 => bad("must be > 0"),
        "t" if value < 0.0 => bad("must be >= 0"),
        "xmax" if value <= 0.0 => bad("must be > 0"),
        "nx" if value < 2.0 => bad("must be at least 2"),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, ConfigError> {
        let cli = Cli::try_parse_from(std::iter::once("quench").chain(args.iter().copied())).unwrap();
        RunConfig::from_cli(cli)
    }

    #[test]
    fn overrides_are_collected() {
        let c = parse(&["density", "--k0a", "1.0", "--t", "0.5", "--nx", "11"]).unwrap();
        assert_eq!(c.command, Command::Density);
        assert_eq!(c.get("k0a", 0.0), 1.0);
        assert_eq!(c.count(3), 11);
        assert_eq!(c.get("xmax", 6.0), 6.0);
    }

    #[test]
    fn keys_outside_a_command_are_rejected() {
        let e = parse(&["fig1", "--k0a", "1.0"]).unwrap_err();
        assert_eq!(e.to_string(), "fig1 does not take --k0a");
    }

    #[test]
    fn bad_values_name_the_key() {
        for (args, key) in [
            (vec!["density", "--k0a", "2"], "--k0a"),
            (vec!["fig1", "--omega-ratio", "-1"], "--omega-ratio"),
            (vec!["density", "--nx", "1"], "--nx"),
            (vec!["density", "--t", "-0.1"], "--t"),
        ] {
            let e = parse(&args).unwrap_err().to_string();
            assert!(e.contains(key), "{e}");
        }
    }
}
