//! Mass functions estimated from counts.
//!
//! [`estimate_raw`] returns plain frequencies. [`estimate_with_confidence`]
//! replaces each frequency on a proper subset by a one-sided Wilson score
//! lower bound and puts whatever is left on the whole frame, so that
//! uncertainty about unseen cases is carried as ignorance.
//!
//! The critical value is `z = max(0, Φ⁻¹(1 − alpha))`. For `alpha ≥ 0.5`
//! the bound has zero width and the raw frequencies come back unchanged.

use std::collections::BTreeMap;

use statrs::distribution::{ContinuousCDF, Normal};

use crate::belief::MassFunction;
use crate::error::EstimateError;
use crate::frame::{AtomSet, Frame};
use crate::population::Population;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    frame: Frame,
    counts: BTreeMap<AtomSet, u64>,
    total: u64,
}

impl CountTable {
    /// Repeated subsets accumulate. Any entry on the empty set is an error,
    /// as is a zero total.
    pub fn new<I>(frame: &Frame, entries: I) -> Result<CountTable, EstimateError>
    where
        I: IntoIterator<Item = (AtomSet, u64)>,
    {
        let mut counts: BTreeMap<AtomSet, u64> = BTreeMap::new();
        for (set, c) in entries {
            frame.check(set)?;
            if set.is_empty() {
                return Err(EstimateError::CountOnEmptySet);
            }
            *counts.entry(set).or_insert(0) += c;
        }
        let total = counts.values().sum();
        if total == 0 {
            return Err(EstimateError::Empty);
        }
        Ok(CountTable {
            frame: frame.clone(),
            counts,
            total,
        })
    }

    pub fn from_population(p: &Population) -> CountTable {
        CountTable::new(
            p.frame(),
            p.records().iter().map(|r| (r.value().set(), r.weight())),
        )
        .expect("populations are nonempty")
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn counts(&self) -> impl Iterator<Item = (AtomSet, u64)> + '_ {
        self.counts.iter().map(|(s, c)| (*s, *c))
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

/// Multiple-comparison handling for per-cell bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Correction {
    /// Each cell uses `alpha`.
    #[default]
    None,
    /// Each of the `k` proper-subset cells uses `alpha / k`.
    Bonferroni,
}

/// `m(A) = count(A) / total`, exact.
pub fn estimate_raw(t: &CountTable) -> MassFunction {
    MassFunction::new(
        &t.frame,
        t.counts
            .iter()
            .map(|(s, c)| (*s, Scalar::count_ratio(*c, t.total))),
    )
    .expect("count fractions form a mass function")
}

/// One-sided critical value `max(0, Φ⁻¹(1 − alpha))`.
pub fn critical_value(alpha: f64) -> Result<f64, EstimateError> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(EstimateError::InvalidAlpha(alpha));
    }
    if alpha >= 0.5 {
        return Ok(0.0);
    }
    let normal = Normal::standard();
    Ok(normal.inverse_cdf(1.0 - alpha).max(0.0))
}

/// Wilson score lower bound for `successes` out of `trials` at critical
/// value `z`.
pub fn wilson_lower_bound(successes: u64, trials: u64, z: f64) -> f64 {
    if successes == 0 || trials == 0 {
        return 0.0;
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let centre = p + z2 / (2.0 * n);
    let spread = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((centre - spread) / (1.0 + z2 / n)).max(0.0)
}

/// Lower-bounded masses on proper subsets, remainder on the whole frame.
///
/// With a zero critical value the exact raw estimate is returned.
pub fn estimate_with_confidence(
    t: &CountTable,
    alpha: f64,
    correction: Correction,
) -> Result<MassFunction, EstimateError> {
    let full = t.frame.full_set();
    let cells = t.counts.keys().filter(|s| **s != full).count().max(1);
    critical_value(alpha)?;
    let cell_alpha = match correction {
        Correction::None => alpha,
        Correction::Bonferroni => alpha / cells as f64,
    };
    let z = critical_value(cell_alpha)?;
    if z == 0.0 {
        return Ok(estimate_raw(t));
    }
    let mut entries: Vec<(AtomSet, Scalar)> = Vec::new();
    let mut assigned = 0.0;
    for (s, c) in &t.counts {
        if *s == full {
            continue;
        }
        let lb = wilson_lower_bound(*c, t.total, z);
        assigned += lb;
        entries.push((*s, Scalar::float(lb)));
    }
    entries.push((full, Scalar::float(1.0 - assigned)));
    Ok(MassFunction::new(&t.frame, entries)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Arithmetic;

    fn frame() -> Frame {
        Frame::new(&["a", "b", "c"]).unwrap()
    }

    #[test]
    fn raw_cases() {
        let f = frame();
        let t = CountTable::new(&f, [(f.encode_set(&["a"]).unwrap(), 4)]).unwrap();
        let m = estimate_raw(&t);
        assert_eq!(m.mass_of(f.encode_set(&["a"]).unwrap()), Scalar::ratio(1, 1));
        assert_eq!(
            CountTable::new(&f, [(AtomSet::EMPTY, 1)]).unwrap_err(),
            EstimateError::CountOnEmptySet
        );
        assert_eq!(
            CountTable::new(&f, [(f.full_set(), 0)]).unwrap_err(),
            EstimateError::Empty
        );
    }

    #[test]
    fn alpha_validation() {
        assert!(matches!(critical_value(0.0), Err(EstimateError::InvalidAlpha(_))));
        assert!(matches!(critical_value(1.5), Err(EstimateError::InvalidAlpha(_))));
        assert!(matches!(critical_value(f64::NAN), Err(EstimateError::InvalidAlpha(_))));
        assert_eq!(critical_value(1.0).unwrap(), 0.0);
        assert!((critical_value(0.05).unwrap() - 1.6448536269514722).abs() < 1e-9);
    }

    #[test]
    fn zero_count_bound_is_zero() {
        assert_eq!(wilson_lower_bound(0, 50, 1.64), 0.0);
        let f = frame();
        let t = CountTable::new(
            &f,
            [(f.encode_set(&["a"]).unwrap(), 0), (f.encode_set(&["b"]).unwrap(), 10)],
        )
        .unwrap();
        let m = estimate_with_confidence(&t, 0.05, Correction::None).unwrap();
        assert!(m.mass_of(f.encode_set(&["a"]).unwrap()).is_zero());
        assert_eq!(m.mode(), Arithmetic::Float);
    }

    #[test]
    fn degenerate_alpha_returns_raw() {
        let f = frame();
        let t = CountTable::new(
            &f,
            [(f.encode_set(&["a"]).unwrap(), 3), (f.encode_set(&["b", "c"]).unwrap(), 5)],
        )
        .unwrap();
        assert_eq!(
            estimate_with_confidence(&t, 1.0, Correction::None).unwrap(),
            estimate_raw(&t)
        );
    }

    #[test]
    fn bonferroni_is_more_conservative() {
        let f = frame();
        let a = f.encode_set(&["a"]).unwrap();
        let t = CountTable::new(
            &f,
            [(a, 30), (f.encode_set(&["b"]).unwrap(), 20), (f.full_set(), 10)],
        )
        .unwrap();
        let plain = estimate_with_confidence(&t, 0.05, Correction::None).unwrap();
        let bonf = estimate_with_confidence(&t, 0.05, Correction::Bonferroni).unwrap();
        assert!(bonf.mass_of(a) < plain.mass_of(a));
        assert!(bonf.mass_of(f.full_set()) > plain.mass_of(f.full_set()));
    }
}
