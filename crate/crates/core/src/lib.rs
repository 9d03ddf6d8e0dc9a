//! Free expansion of quantum particles released from a trap: exact and
//! numerical routes for harmonic quenches, square-well initial states,
//! phase-space (Wigner) pictures and the matching classical ensembles.
//!
//! Units are natural: hbar = m = 1, lengths in units of the well half width
//! or of the initial oscillator length.

pub mod classical;
pub mod density;
pub mod error;
pub mod free_evolution;
pub mod grid;
pub mod harmonic;
pub mod quadrature;
pub mod special;
pub mod square_well;
pub mod tolerances;
pub mod units;
pub mod wavefunction;
pub mod wigner;

pub use classical::{ClassicalEnsemble, Temperature};
pub use density::{characteristic_to_density, integrate_density, DensityProfile, Method};
pub use error::{Error, Result};
pub use free_evolution::{EvolutionMethod, EvolvedState};
pub use grid::{MomentumGrid, SpatialGrid, TimeGrid, UniformGrid};
pub use harmonic::{InitialLevel, QuenchParams};
pub use square_well::{Moments, WellBranch, WellState};
pub use tolerances::Tolerances;
pub use units::UnitSystem;
pub use wavefunction::{GaussianPacket, WaveFunction};
pub use wigner::{FieldSource, PhaseSpaceField};
