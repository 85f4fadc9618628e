//! Dempster-Shafer belief functions read as frequencies over set-valued
//! population data.
//!
//! - [`frame`]: frames of discernment, subsets, product frames.
//! - [`belief`]: mass, belief and plausibility; Dempster's rule; Möbius
//!   inversion; conditional embedding.
//! - [`population`]: set-valued records, canonical measurement, labeling and
//!   the frequency operators.
//! - [`relabel`]: the relabeling process, exact and simulated.
//! - [`estimate`]: mass functions from counts with confidence bounds.
//! - [`casebook`]: worked examples with known values.
//! - [`io`] and [`cli`]: file formats and the command-line front end.

pub mod belief;
pub mod casebook;
pub mod cli;
pub mod error;
pub mod estimate;
pub mod frame;
pub mod io;
pub mod population;
pub mod relabel;
pub mod scalar;

pub use belief::{combine_dempster, condition_embed, mass_from_bel, CombinationReport, MassFunction};
pub use error::{CaseError, EstimateError, FrameError, InputError, MassError, PopulationError, RelabelError};
pub use estimate::{estimate_raw, estimate_with_confidence, CountTable, Correction};
pub use frame::{AtomSet, Frame, SubsetRef, DEFAULT_MAX_ATOMS};
pub use population::{
    apply_labeling, canonical_measure, check_measurement_axioms, freq_bel, freq_mass, freq_pl,
    LabelingSpec, Population, SetValuedRecord,
};
pub use relabel::{
    relabel_exact, relabel_iterate, relabel_simulate, LabelDistribution, SimulationConfig,
    SimulationReport,
};
pub use scalar::{Arithmetic, Scalar};
