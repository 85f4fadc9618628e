//! Set-valued population data and the frequency operators over it.
//!
//! Each record stands for a group of objects whose attribute was measured
//! as the same set of atoms. The canonical measurement of a record answers
//! TRUE for a query set `A` exactly when the record's value meets `A`.
//! Frequency belief, plausibility and mass are weight fractions of records.

use std::collections::BTreeMap;
use std::fmt;

use crate::belief::MassFunction;
use crate::error::{FrameError, PopulationError};
use crate::frame::{AtomSet, Frame, SubsetRef};
use crate::scalar::Scalar;

/// Largest frame for which measurement truth tables are built.
pub const MAX_TABLE_ATOMS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetValuedRecord {
    value: SubsetRef,
    weight: u64,
}

impl SetValuedRecord {
    pub fn new(value: SubsetRef, weight: u64) -> Result<SetValuedRecord, PopulationError> {
        if value.is_empty() {
            return Err(PopulationError::EmptyValue);
        }
        if weight == 0 {
            return Err(PopulationError::ZeroWeight);
        }
        Ok(SetValuedRecord { value, weight })
    }

    pub fn value(&self) -> &SubsetRef {
        &self.value
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }
}

/// Weighted multiset of set-valued records over one frame.
///
/// Records with equal values are merged, keeping first-appearance order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Population {
    frame: Frame,
    records: Vec<SetValuedRecord>,
}

impl Population {
    /// Builds a population from `(value, weight)` pairs. Zero weights are
    /// skipped; empty values are rejected.
    pub fn new<I>(frame: &Frame, entries: I) -> Result<Population, PopulationError>
    where
        I: IntoIterator<Item = (AtomSet, u64)>,
    {
        let mut order: Vec<AtomSet> = Vec::new();
        let mut weights: BTreeMap<AtomSet, u64> = BTreeMap::new();
        for (value, weight) in entries {
            frame.check(value)?;
            if value.is_empty() {
                return Err(PopulationError::EmptyValue);
            }
            if weight == 0 {
                continue;
            }
            let slot = weights.entry(value).or_insert_with(|| {
                order.push(value);
                0
            });
            *slot += weight;
        }
        if order.is_empty() {
            return Err(PopulationError::Empty);
        }
        let records = order
            .into_iter()
            .map(|v| SetValuedRecord {
                value: frame.subset(v).expect("checked above"),
                weight: weights[&v],
            })
            .collect();
        Ok(Population {
            frame: frame.clone(),
            records,
        })
    }

    pub fn from_records<I>(frame: &Frame, records: I) -> Result<Population, PopulationError>
    where
        I: IntoIterator<Item = SetValuedRecord>,
    {
        let mut raw = Vec::new();
        for r in records {
            if r.value.frame() != frame {
                return Err(FrameError::FrameMismatch.into());
            }
            raw.push((r.value.set(), r.weight));
        }
        Population::new(frame, raw)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn records(&self) -> &[SetValuedRecord] {
        &self.records
    }

    pub fn total_weight(&self) -> u64 {
        self.records.iter().map(|r| r.weight).sum()
    }

    /// Weight of records whose value is exactly `value`.
    pub fn weight_of(&self, value: AtomSet) -> u64 {
        self.records
            .iter()
            .find(|r| r.value.set() == value)
            .map_or(0, |r| r.weight)
    }

    fn check(&self, a: &SubsetRef) -> Result<(), PopulationError> {
        if a.frame() == &self.frame {
            Ok(())
        } else {
            Err(FrameError::FrameMismatch.into())
        }
    }

    fn fraction(&self, pred: impl Fn(&SetValuedRecord) -> bool) -> Scalar {
        let hit: u64 = self
            .records
            .iter()
            .filter(|r| pred(r))
            .map(|r| r.weight)
            .sum();
        Scalar::count_ratio(hit, self.total_weight())
    }
}

/// Canonical measurement: TRUE iff the record's value meets `a`.
pub fn canonical_measure(r: &SetValuedRecord, a: &SubsetRef) -> Result<bool, FrameError> {
    if r.value.frame() != a.frame() {
        return Err(FrameError::FrameMismatch);
    }
    Ok(r.value.set().intersects(a.set()))
}

/// Truth table of the canonical measurement of `r` over every subset.
pub fn measurement_table(r: &SetValuedRecord) -> Result<BTreeMap<AtomSet, bool>, PopulationError> {
    let frame = r.value.frame();
    let n = frame.len();
    if n > MAX_TABLE_ATOMS {
        return Err(FrameError::TooLarge {
            size: n,
            max: MAX_TABLE_ATOMS,
        }
        .into());
    }
    Ok(AtomSet::powerset(n)
        .map(|a| (a, r.value.set().intersects(a)))
        .collect())
}

/// A measurement-method axiom broken by a truth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `M(Ξ)` is FALSE.
    FrameNotTrue,
    /// `M(∅)` is TRUE.
    EmptySetTrue,
    /// `M(set)` is TRUE but `M(superset)` is FALSE.
    SupersetInconsistent { set: AtomSet, superset: AtomSet },
    /// `M(set)` is TRUE for a set of two or more atoms, yet FALSE on all
    /// of its proper subsets.
    SubsetInconsistent { set: AtomSet },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::FrameNotTrue => f.write_str("M(Ξ) is FALSE"),
            AxiomViolation::EmptySetTrue => f.write_str("M(∅) is TRUE"),
            AxiomViolation::SupersetInconsistent { set, superset } => write!(
                f,
                "M is TRUE on {:#x} but FALSE on its superset {:#x}",
                set.bits(),
                superset.bits()
            ),
            AxiomViolation::SubsetInconsistent { set } => write!(
                f,
                "M is TRUE on {:#x} but FALSE on every proper subset",
                set.bits()
            ),
        }
    }
}

/// Checks a truth table against the measurement-method axioms. An empty
/// result means the table is a valid measurement.
///
/// Superset consistency is checked on one-atom extensions, which implies it
/// for every superset.
pub fn check_measurement_axioms(
    frame: &Frame,
    table: &BTreeMap<AtomSet, bool>,
) -> Result<Vec<AxiomViolation>, PopulationError> {
    let n = frame.len();
    if n > MAX_TABLE_ATOMS {
        return Err(FrameError::TooLarge {
            size: n,
            max: MAX_TABLE_ATOMS,
        }
        .into());
    }
    let size = 1usize << n;
    let mut truth = vec![None; size];
    for (s, v) in table {
        frame.check(*s)?;
        truth[s.bits() as usize] = Some(*v);
    }
    let got = truth.iter().filter(|v| v.is_some()).count();
    if got != size {
        return Err(PopulationError::IncompleteTable {
            got,
            expected: size,
        });
    }
    let truth: Vec<bool> = truth.into_iter().map(Option::unwrap).collect();
    let at = |s: AtomSet| truth[s.bits() as usize];

    let mut out = Vec::new();
    let full = frame.full_set();
    if !at(full) {
        out.push(AxiomViolation::FrameNotTrue);
    }
    if at(AtomSet::EMPTY) {
        out.push(AxiomViolation::EmptySetTrue);
    }
    for a in AtomSet::powerset(n).filter(|&a| at(a)) {
        for i in full.difference(a).indices() {
            let sup = a.with(i);
            if !at(sup) {
                out.push(AxiomViolation::SupersetInconsistent { set: a, superset: sup });
            }
        }
        if a.len() > 1 && !a.subsets().any(|b| b != a && at(b)) {
            out.push(AxiomViolation::SubsetInconsistent { set: a });
        }
    }
    Ok(out)
}

/// Frequency mass: weight fraction of records whose value is exactly `A`.
/// Always exact.
pub fn freq_mass(p: &Population) -> MassFunction {
    let total = p.total_weight();
    MassFunction::new(
        &p.frame,
        p.records
            .iter()
            .map(|r| (r.value.set(), Scalar::count_ratio(r.weight, total))),
    )
    .expect("record fractions form a mass function")
}

/// Frequency belief: weight fraction of records whose value lies inside `a`,
/// i.e. those for which the measurement rejects the complement of `a`.
pub fn freq_bel(p: &Population, a: &SubsetRef) -> Result<Scalar, PopulationError> {
    p.check(a)?;
    let complement = a.complement();
    Ok(p.fraction(|r| {
        !canonical_measure(r, &complement).expect("same frame")
    }))
}

/// Frequency plausibility: weight fraction of records for which the
/// measurement of `a` is TRUE.
pub fn freq_pl(p: &Population, a: &SubsetRef) -> Result<Scalar, PopulationError> {
    p.check(a)?;
    Ok(p.fraction(|r| canonical_measure(r, a).expect("same frame")))
}

/// Per-value labels. Values without a rule get the whole frame as label.
/// An empty label discards the matching records.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingSpec {
    frame: Frame,
    rules: BTreeMap<AtomSet, AtomSet>,
}

impl LabelingSpec {
    /// The labeling that labels every record with the whole frame.
    pub fn identity(frame: &Frame) -> LabelingSpec {
        LabelingSpec {
            frame: frame.clone(),
            rules: BTreeMap::new(),
        }
    }

    pub fn with_rule(mut self, value: &SubsetRef, label: &SubsetRef) -> Result<Self, FrameError> {
        if value.frame() != &self.frame || label.frame() != &self.frame {
            return Err(FrameError::FrameMismatch);
        }
        self.rules.insert(value.set(), label.set());
        Ok(self)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn rules(&self) -> impl Iterator<Item = (AtomSet, AtomSet)> + '_ {
        self.rules.iter().map(|(v, l)| (*v, *l))
    }

    pub fn label_for(&self, value: AtomSet) -> AtomSet {
        self.rules
            .get(&value)
            .copied()
            .unwrap_or_else(|| self.frame.full_set())
    }
}

/// Applies a labeling: records labelled `∅` leave the population, the rest
/// keep their weight and have their value cut down to `value ∩ label`.
///
/// Measuring the result canonically gives `M(ω, A ∩ l(ω))`.
pub fn apply_labeling(p: &Population, l: &LabelingSpec) -> Result<Population, PopulationError> {
    if p.frame != l.frame {
        return Err(FrameError::FrameMismatch.into());
    }
    let mut out = Vec::with_capacity(p.records.len());
    for r in &p.records {
        let value = r.value.set();
        let label = l.label_for(value);
        if label.is_empty() {
            continue;
        }
        let kept = value.intersect(label);
        if kept.is_empty() {
            return Err(PopulationError::InvalidLabeling {
                value: p.frame.format_set(value),
                label: p.frame.format_set(label),
            });
        }
        out.push((kept, r.weight));
    }
    Population::new(&p.frame, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Arithmetic;

    fn quality() -> Frame {
        Frame::new(&["H", "M", "S", "D"]).unwrap()
    }

    fn record(f: &Frame, names: &[&str], w: u64) -> SetValuedRecord {
        SetValuedRecord::new(f.encode(names).unwrap(), w).unwrap()
    }

    #[test]
    fn canonical_measure_cases() {
        let q = quality();
        let hs = record(&q, &["H", "S"], 1);
        assert!(canonical_measure(&hs, &q.encode(&["S", "D"]).unwrap()).unwrap());
        let h = record(&q, &["H"], 1);
        assert!(!canonical_measure(&h, &q.encode(&["M"]).unwrap()).unwrap());
        assert!(canonical_measure(&h, &q.full()).unwrap());
        assert!(!canonical_measure(&h, &q.empty()).unwrap());
        let other = Frame::new(&["B", "G"]).unwrap();
        assert!(canonical_measure(&h, &other.full()).is_err());
    }

    #[test]
    fn axiom_checker_cases() {
        let q = quality();
        let table = measurement_table(&record(&q, &["H", "S"], 1)).unwrap();
        assert!(check_measurement_axioms(&q, &table).unwrap().is_empty());

        let mut no_frame = table.clone();
        no_frame.insert(q.full_set(), false);
        let v = check_measurement_axioms(&q, &no_frame).unwrap();
        assert!(v.contains(&AxiomViolation::FrameNotTrue));

        // TRUE on {H,M} and its supersets, FALSE on {H} and {M}.
        let hm = q.encode_set(&["H", "M"]).unwrap();
        let bad: BTreeMap<AtomSet, bool> = AtomSet::powerset(4)
            .map(|a| (a, hm.is_subset_of(a)))
            .collect();
        let v = check_measurement_axioms(&q, &bad).unwrap();
        assert!(v.contains(&AxiomViolation::SubsetInconsistent { set: hm }));

        let mut incomplete = table;
        incomplete.remove(&AtomSet::from_bits(3));
        assert!(matches!(
            check_measurement_axioms(&q, &incomplete),
            Err(PopulationError::IncompleteTable { got: 15, expected: 16 })
        ));
    }

    #[test]
    fn superset_violation_detected() {
        let f = Frame::new(&["a", "b"]).unwrap();
        let table: BTreeMap<AtomSet, bool> = [(0, false), (1, true), (2, true), (3, false)]
            .into_iter()
            .map(|(b, v)| (AtomSet::from_bits(b), v))
            .collect();
        let v = check_measurement_axioms(&f, &table).unwrap();
        assert!(v.contains(&AxiomViolation::FrameNotTrue));
        assert!(v.contains(&AxiomViolation::SupersetInconsistent {
            set: AtomSet::from_bits(1),
            superset: AtomSet::from_bits(3)
        }));
    }

    #[test]
    fn freq_mass_small_cases() {
        let q = quality();
        let p = Population::new(&q, [(q.full_set(), 5)]).unwrap();
        assert!(freq_mass(&p).is_vacuous());
        let p = Population::new(
            &q,
            [(q.encode_set(&["H"]).unwrap(), 1), (q.encode_set(&["M"]).unwrap(), 1)],
        )
        .unwrap();
        let m = freq_mass(&p);
        assert_eq!(m.mode(), Arithmetic::Exact);
        assert_eq!(m.mass_of(q.encode_set(&["H"]).unwrap()), Scalar::ratio(1, 2));
        assert_eq!(freq_pl(&p, &q.empty()).unwrap(), Scalar::ratio(0, 1));
        assert_eq!(freq_bel(&p, &q.full()).unwrap(), Scalar::ratio(1, 1));
    }

    #[test]
    fn population_errors_and_merging() {
        let q = quality();
        assert_eq!(
            Population::new(&q, [(AtomSet::EMPTY, 1)]).unwrap_err(),
            PopulationError::EmptyValue
        );
        assert_eq!(
            Population::new(&q, [(q.full_set(), 0)]).unwrap_err(),
            PopulationError::Empty
        );
        let h = q.encode_set(&["H"]).unwrap();
        let p = Population::new(&q, [(h, 2), (q.full_set(), 1), (h, 3)]).unwrap();
        assert_eq!(p.records().len(), 2);
        assert_eq!(p.weight_of(h), 5);
        assert_eq!(p.total_weight(), 6);
    }

    #[test]
    fn labeling_cases() {
        let q = quality();
        let h = q.encode(&["H"]).unwrap();
        let hs = q.encode(&["H", "S"]).unwrap();
        let p = Population::new(&q, [(h.set(), 3), (hs.set(), 4)]).unwrap();

        assert_eq!(apply_labeling(&p, &LabelingSpec::identity(&q)).unwrap(), p);

        let bad = LabelingSpec::identity(&q)
            .with_rule(&h, &q.encode(&["M"]).unwrap())
            .unwrap();
        assert!(matches!(
            apply_labeling(&p, &bad),
            Err(PopulationError::InvalidLabeling { .. })
        ));

        let narrow = LabelingSpec::identity(&q)
            .with_rule(&hs, &q.encode(&["H", "M"]).unwrap())
            .unwrap();
        let out = apply_labeling(&p, &narrow).unwrap();
        assert_eq!(out.records().len(), 1);
        assert_eq!(out.weight_of(h.set()), 7);

        let drop = LabelingSpec::identity(&q).with_rule(&h, &q.empty()).unwrap();
        let out = apply_labeling(&p, &drop).unwrap();
        assert_eq!(out.total_weight(), 4);
    }

    #[test]
    fn modified_measurement_semantics() {
        // M_l(ω, A) = M(ω, A ∩ l(ω)) for every A.
        let q = quality();
        let hs = q.encode(&["H", "S"]).unwrap();
        let label = q.encode(&["H", "M"]).unwrap();
        let p = Population::new(&q, [(hs.set(), 1)]).unwrap();
        let l = LabelingSpec::identity(&q).with_rule(&hs, &label).unwrap();
        let out = apply_labeling(&p, &l).unwrap();
        let orig = &p.records()[0];
        let modified = &out.records()[0];
        for a in AtomSet::powerset(4) {
            let a_ref = q.subset(a).unwrap();
            let restricted = q.subset(a.intersect(label.set())).unwrap();
            assert_eq!(
                canonical_measure(modified, &a_ref).unwrap(),
                canonical_measure(orig, &restricted).unwrap()
            );
        }
    }
}
