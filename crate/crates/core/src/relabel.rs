//! The relabeling process.
//!
//! Every object of a population independently receives a label drawn from
//! a fixed [`LabelDistribution`]. Its value becomes `value ∩ label`, and the
//! object is discarded when that intersection is empty. [`relabel_exact`]
//! computes the resulting distribution of values by explicit conditioning on
//! "not discarded"; [`relabel_simulate`] runs the process with a seeded RNG.
//!
//! Neither route calls [`crate::belief::combine_dempster`]; the agreement of
//! both with Dempster's rule is checked in the test suites.

use std::collections::BTreeMap;

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::belief::MassFunction;
use crate::error::{FrameError, MassError, RelabelError};
use crate::frame::AtomSet;
use crate::population::Population;
use crate::scalar::{Arithmetic, Scalar};

/// Identifier of the generator used by [`relabel_simulate`]. Chunk `k` of a
/// run with seed `s` uses `ChaCha20Rng::seed_from_u64(s)` on stream `k`.
pub const RNG_ALGORITHM: &str = "chacha20/seed_from_u64/stream=chunk";

/// Distribution labels are drawn from, independently of each object.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelDistribution {
    mass: MassFunction,
}

impl LabelDistribution {
    pub fn new(mass: MassFunction) -> LabelDistribution {
        LabelDistribution { mass }
    }

    pub fn mass(&self) -> &MassFunction {
        &self.mass
    }
}

impl From<MassFunction> for LabelDistribution {
    fn from(mass: MassFunction) -> Self {
        LabelDistribution { mass }
    }
}

/// Probability that a drawn object is discarded: for each value `B`, the
/// chance that the label misses it is `1 - Pl_labels(B)`.
pub fn discard_probability(
    pop_mass: &MassFunction,
    labels: &LabelDistribution,
) -> Result<Scalar, RelabelError> {
    let kept = kept_probability(pop_mass, labels)?;
    Ok(&Scalar::one(kept.mode()) - &kept)
}

fn kept_probability(
    pop_mass: &MassFunction,
    labels: &LabelDistribution,
) -> Result<Scalar, RelabelError> {
    if pop_mass.frame() != labels.mass.frame() {
        return Err(MassError::from(FrameError::FrameMismatch).into());
    }
    let mode = pop_mass.mode().join(labels.mass.mode());
    Ok(pop_mass.focal().fold(Scalar::zero(mode), |acc, (b, mb)| {
        &acc + &(mb * &labels.mass.pl_set(b))
    }))
}

/// Exact distribution of `value ∩ label` given that it is nonempty.
pub fn relabel_exact(
    pop_mass: &MassFunction,
    labels: &LabelDistribution,
) -> Result<MassFunction, RelabelError> {
    let kept = kept_probability(pop_mass, labels)?;
    if !kept.is_positive() {
        return Err(MassError::TotalConflict.into());
    }
    let mode = kept.mode();
    let mut joint: BTreeMap<AtomSet, Scalar> = BTreeMap::new();
    for (value, p_value) in pop_mass.focal() {
        for (label, p_label) in labels.mass.focal() {
            let outcome = value.intersect(label);
            if outcome.is_empty() {
                continue;
            }
            let slot = joint.entry(outcome).or_insert_with(|| Scalar::zero(mode));
            *slot = &*slot + &(p_value * p_label);
        }
    }
    let conditioned = joint.into_iter().map(|(a, p)| (a, &p / &kept));
    Ok(MassFunction::new(pop_mass.frame(), conditioned)?)
}

/// Folds [`relabel_exact`] over a sequence of label distributions.
pub fn relabel_iterate(
    pop_mass: &MassFunction,
    label_seq: &[LabelDistribution],
) -> Result<MassFunction, RelabelError> {
    if label_seq.is_empty() {
        return Err(RelabelError::EmptySequence);
    }
    label_seq
        .iter()
        .try_fold(pop_mass.clone(), |m, l| relabel_exact(&m, l))
}

/// Run parameters for [`relabel_simulate`].
///
/// Results are reproducible for equal `(seed, n_draws, chunks)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimulationConfig {
    pub n_draws: u64,
    pub seed: u64,
    pub chunks: u32,
}

impl SimulationConfig {
    pub fn new(n_draws: u64, seed: u64) -> SimulationConfig {
        SimulationConfig {
            n_draws,
            seed,
            chunks: 1,
        }
    }

    pub fn with_chunks(self, chunks: u32) -> SimulationConfig {
        SimulationConfig { chunks, ..self }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationReport {
    /// Distribution of kept outcomes; exact count ratios.
    pub empirical: MassFunction,
    pub draws_attempted: u64,
    pub draws_discarded: u64,
    pub seed: u64,
    pub chunks: u32,
    pub rng: &'static str,
}

impl SimulationReport {
    pub fn discard_fraction(&self) -> f64 {
        self.draws_discarded as f64 / self.draws_attempted as f64
    }

    /// Standard error of [`Self::discard_fraction`] as an estimate of a
    /// discard probability `q`.
    pub fn discard_standard_error(&self, q: f64) -> f64 {
        (q * (1.0 - q) / self.draws_attempted as f64).sqrt()
    }
}

#[derive(Debug, Default)]
struct Tally {
    kept: BTreeMap<AtomSet, u64>,
    discarded: u64,
}

/// Simulates the relabeling process: each draw picks a record with
/// probability proportional to its weight and an independent label, then
/// either discards the draw or tallies `value ∩ label`.
///
/// Draws are split across `chunks` independent RNG streams; chunk `k` gets
/// `n_draws / chunks` draws plus one if `k < n_draws % chunks`. Chunks run
/// on separate threads.
pub fn relabel_simulate(
    p: &Population,
    labels: &LabelDistribution,
    config: SimulationConfig,
) -> Result<SimulationReport, RelabelError> {
    if config.n_draws == 0 {
        return Err(RelabelError::NoDraws);
    }
    if config.chunks == 0 {
        return Err(RelabelError::NoChunks);
    }
    if p.frame() != labels.mass.frame() {
        return Err(MassError::from(FrameError::FrameMismatch).into());
    }
    let values: Vec<AtomSet> = p.records().iter().map(|r| r.value().set()).collect();
    let record_dist = WeightedIndex::new(p.records().iter().map(|r| r.weight()))
        .expect("population weights are positive");
    let label_sets: Vec<AtomSet> = labels.mass.focal().map(|(s, _)| s).collect();
    let label_dist = WeightedIndex::new(labels.mass.focal().map(|(_, v)| v.to_f64()))
        .expect("label masses are positive");

    let chunks = config.chunks as u64;
    let per_chunk = |k: u64| config.n_draws / chunks + u64::from(k < config.n_draws % chunks);
    let run_chunk = |k: u64| {
        let mut rng = ChaCha20Rng::seed_from_u64(config.seed);
        rng.set_stream(k);
        let mut tally = Tally::default();
        for _ in 0..per_chunk(k) {
            let value = values[record_dist.sample(&mut rng)];
            let label = label_sets[label_dist.sample(&mut rng)];
            let outcome = value.intersect(label);
            if outcome.is_empty() {
                tally.discarded += 1;
            } else {
                *tally.kept.entry(outcome).or_insert(0) += 1;
            }
        }
        tally
    };

    let tallies: Vec<Tally> = if chunks == 1 {
        vec![run_chunk(0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..chunks)
                .map(|k| scope.spawn(move || run_chunk(k)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("simulation chunk panicked"))
                .collect()
        })
    };

    let mut kept: BTreeMap<AtomSet, u64> = BTreeMap::new();
    let mut discarded = 0;
    for t in tallies {
        discarded += t.discarded;
        for (a, c) in t.kept {
            *kept.entry(a).or_insert(0) += c;
        }
    }
    let n_kept = config.n_draws - discarded;
    if n_kept == 0 {
        return Err(RelabelError::AllDiscarded {
            attempted: config.n_draws,
        });
    }
    let empirical = MassFunction::new(
        p.frame(),
        kept.into_iter()
            .map(|(a, c)| (a, Scalar::count_ratio(c, n_kept))),
    )?;
    debug_assert_eq!(empirical.mode(), Arithmetic::Exact);
    Ok(SimulationReport {
        empirical,
        draws_attempted: config.n_draws,
        draws_discarded: discarded,
        seed: config.seed,
        chunks: config.chunks,
        rng: RNG_ALGORITHM,
    })
}
