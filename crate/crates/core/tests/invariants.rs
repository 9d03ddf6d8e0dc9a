use std::f64::consts::{FRAC_PI_2, PI};

use proptest::prelude::*;
use quench_core::classical::classical_harmonic_density;
use quench_core::free_evolution::{evolve_momentum, evolve_propagator};
use quench_core::harmonic::{density, uncertainty_product};
use quench_core::wigner::wigner_infinite_well;
use quench_core::{InitialLevel, QuenchParams, SpatialGrid, Temperature, Tolerances, WellState};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn uncertainty_product_is_bounded_below(ratio in 0.05f64..20.0, t in 0.0f64..50.0) {
        let p = QuenchParams::new(1.0, ratio, 0.0).unwrap();
        prop_assert!(uncertainty_product(&p, t) >= 0.5 - 1e-12);
    }

    #[test]
    fn oscillator_density_matches_classical(
        ratio in 0.1f64..10.0,
        force in -2.0f64..2.0,
        t in 0.0f64..20.0,
    ) {
        let p = QuenchParams::new(1.0, ratio, force).unwrap();
        let grid = SpatialGrid::symmetric(4.0, 17).unwrap();
        let q = density(&p, t, grid, InitialLevel::Ground, &Tolerances::default()).unwrap();
        for (x, v) in q.points().into_iter().zip(q.values) {
            let c = classical_harmonic_density(&p, Temperature::QuantumMatched, x, t).unwrap();
            prop_assert!((c - v).abs() <= 1e-10 * (1.0 + v));
        }
    }

    #[test]
    fn momentum_amplitude_is_even_and_bounded(k0a in 0.2f64..FRAC_PI_2, k in -40.0f64..40.0) {
        let w = WellState::finite(k0a).unwrap();
        prop_assert_eq!(w.psi0_momentum(k), w.psi0_momentum(-k));
        // psi(x) >= 0, so |psi(k)| is largest at k = 0
        prop_assert!(w.psi0_momentum(k).abs() <= w.psi0_momentum(0.0) + 1e-12);
    }

    #[test]
    fn momentum_amplitude_is_smooth_across_the_singular_point(k0a in 0.2f64..FRAC_PI_2, offset in 1e-9f64..1e-5) {
        let w = WellState::finite(k0a).unwrap();
        let k0 = w.k0();
        let jump = (w.psi0_momentum(k0 - offset) - w.psi0_momentum(k0 + offset)).abs();
        prop_assert!(jump <= 4.0 * offset + 1e-9, "jump {jump} at offset {offset}");
    }

    #[test]
    fn well_wave_function_is_continuous_at_the_edge(k0a in 0.2f64..FRAC_PI_2) {
        let w = WellState::finite(k0a).unwrap();
        let gap = (w.psi0(1.0 - 1e-10) - w.psi0(1.0 + 1e-10)).abs();
        prop_assert!(gap < 1e-8);
    }

    #[test]
    fn wigner_is_even_and_bounded(x in -1.2f64..1.2, k in -30.0f64..30.0) {
        let w = wigner_infinite_well(x, k);
        prop_assert_eq!(w, wigner_infinite_well(x, -k));
        prop_assert!((w - wigner_infinite_well(-x, k)).abs() <= 1e-15);
        prop_assert!(w.abs() <= 1.0 / PI + 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn evolution_routes_agree(k0a in 0.3f64..FRAC_PI_2, x in -4.0f64..4.0, t in 0.05f64..2.0) {
        let w = WellState::finite(k0a).unwrap();
        let tol = Tolerances::default();
        let a = evolve_momentum(&w, x, t, &tol).unwrap();
        let b = evolve_propagator(&w, x, t, &tol).unwrap();
        prop_assert!((a - b).norm() < 1e-7, "{a} vs {b}");
    }

    #[test]
    fn evolved_density_is_even(x in 0.0f64..4.0, t in 0.05f64..2.0) {
        let w = WellState::infinite();
        let tol = Tolerances::default();
        let l = evolve_propagator(&w, -x, t, &tol).unwrap().norm_sqr();
        let r = evolve_propagator(&w, x, t, &tol).unwrap().norm_sqr();
        prop_assert!((l - r).abs() < 1e-10);
    }
}
