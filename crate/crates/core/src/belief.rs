//! Mass, belief and plausibility functions and Dempster's rule.
//!
//! A [`MassFunction`] stores only its focal sets (strictly positive mass).
//! Everything is computed in the mass function's [`Arithmetic`] mode; exact
//! inputs give exact outputs.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{FrameError, MassError};
use crate::frame::{AtomSet, Frame, SubsetRef};
use crate::scalar::{Arithmetic, Scalar};

/// Allowed drift of a floating total mass from 1 at construction.
pub const FLOAT_SUM_TOLERANCE: f64 = 1e-9;

/// Tolerance used by property checks in floating mode.
pub const FLOAT_PROPERTY_TOLERANCE: f64 = 1e-12;

/// Largest frame accepted by [`mass_from_bel`].
pub const MAX_TABLE_ATOMS: usize = 16;

#[derive(Debug, Clone)]
pub struct MassFunction {
    frame: Frame,
    mode: Arithmetic,
    masses: BTreeMap<AtomSet, Scalar>,
}

impl MassFunction {
    /// Validates and builds a mass function from `(subset, mass)` pairs.
    ///
    /// Repeated subsets accumulate. Zero masses are dropped. The mode is
    /// exact when every entry is exact. Exact totals must be 1. A floating
    /// total within [`FLOAT_SUM_TOLERANCE`] of 1 is accepted and, unless it
    /// is already within [`FLOAT_PROPERTY_TOLERANCE`], renormalized; values
    /// that already sum to 1 up to rounding are kept bit-for-bit.
    pub fn new<I>(frame: &Frame, entries: I) -> Result<MassFunction, MassError>
    where
        I: IntoIterator<Item = (AtomSet, Scalar)>,
    {
        let entries: Vec<(AtomSet, Scalar)> = entries.into_iter().collect();
        let mode = entries
            .iter()
            .fold(Arithmetic::Exact, |acc, (_, v)| acc.join(v.mode()));
        let mut masses: BTreeMap<AtomSet, Scalar> = BTreeMap::new();
        for (set, value) in entries {
            frame.check(set)?;
            if set.is_empty() {
                return Err(MassError::MassOnEmptySet);
            }
            if !value.is_finite() {
                return Err(MassError::NonFinite(frame.format_set(set)));
            }
            if value.is_negative() {
                return Err(MassError::NegativeMass {
                    set: frame.format_set(set),
                    value: value.to_string(),
                });
            }
            let value = value.to_mode(mode);
            let slot = masses.entry(set).or_insert_with(|| Scalar::zero(mode));
            *slot = &*slot + &value;
        }
        masses.retain(|_, v| !v.is_zero());
        let total = Scalar::sum(mode, masses.values());
        match mode {
            Arithmetic::Exact => {
                if total != Scalar::one(mode) {
                    return Err(MassError::SumNotOne(total.to_string()));
                }
            }
            Arithmetic::Float => {
                let t = total.to_f64();
                if (t - 1.0).abs() > FLOAT_SUM_TOLERANCE {
                    return Err(MassError::SumNotOne(t.to_string()));
                }
                if (t - 1.0).abs() > FLOAT_PROPERTY_TOLERANCE {
                    for v in masses.values_mut() {
                        *v = Scalar::Float(v.to_f64() / t);
                    }
                }
            }
        }
        Ok(MassFunction {
            frame: frame.clone(),
            mode,
            masses,
        })
    }

    /// Builds from frame-checked subsets.
    pub fn from_subsets<I>(frame: &Frame, entries: I) -> Result<MassFunction, MassError>
    where
        I: IntoIterator<Item = (SubsetRef, Scalar)>,
    {
        let mut raw = Vec::new();
        for (s, v) in entries {
            if s.frame() != frame {
                return Err(FrameError::FrameMismatch.into());
            }
            raw.push((s.set(), v));
        }
        MassFunction::new(frame, raw)
    }

    /// Builds from atom-name lists, e.g. `[(&["H"][..], 0.5), ...]`.
    pub fn from_names<S: AsRef<str>>(
        frame: &Frame,
        entries: &[(&[S], Scalar)],
    ) -> Result<MassFunction, MassError> {
        let mut raw = Vec::with_capacity(entries.len());
        for (names, v) in entries {
            raw.push((frame.encode_set(names)?, v.clone()));
        }
        MassFunction::new(frame, raw)
    }

    /// Total ignorance: mass 1 on the whole frame.
    pub fn vacuous(frame: &Frame, mode: Arithmetic) -> MassFunction {
        let mut masses = BTreeMap::new();
        masses.insert(frame.full_set(), Scalar::one(mode));
        MassFunction {
            frame: frame.clone(),
            mode,
            masses,
        }
    }

    /// Internal constructor for results whose invariants hold by
    /// construction. Zero entries are dropped.
    fn from_parts(frame: &Frame, mode: Arithmetic, mut masses: BTreeMap<AtomSet, Scalar>) -> Self {
        masses.retain(|_, v| !v.is_zero());
        MassFunction {
            frame: frame.clone(),
            mode,
            masses,
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mode(&self) -> Arithmetic {
        self.mode
    }

    /// Focal sets with their masses, in increasing bit order.
    pub fn focal(&self) -> impl Iterator<Item = (AtomSet, &Scalar)> + '_ {
        self.masses.iter().map(|(s, v)| (*s, v))
    }

    pub fn focal_sets(&self) -> Vec<SubsetRef> {
        self.masses
            .keys()
            .map(|s| self.frame.subset(*s).expect("focal sets belong to the frame"))
            .collect()
    }

    pub fn focal_count(&self) -> usize {
        self.masses.len()
    }

    pub fn mass_of(&self, set: AtomSet) -> Scalar {
        self.masses
            .get(&set)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.mode))
    }

    pub fn mass(&self, a: &SubsetRef) -> Result<Scalar, MassError> {
        self.check(a)?;
        Ok(self.mass_of(a.set()))
    }

    pub fn is_vacuous(&self) -> bool {
        self.masses.len() == 1 && self.masses.contains_key(&self.frame.full_set())
    }

    fn check(&self, a: &SubsetRef) -> Result<(), MassError> {
        if a.frame() == &self.frame {
            Ok(())
        } else {
            Err(FrameError::FrameMismatch.into())
        }
    }

    /// `Bel(A)`: total mass of focal sets contained in `A`.
    pub fn bel(&self, a: &SubsetRef) -> Result<Scalar, MassError> {
        self.check(a)?;
        Ok(self.bel_set(a.set()))
    }

    pub fn bel_set(&self, a: AtomSet) -> Scalar {
        Scalar::sum(
            self.mode,
            self.masses
                .iter()
                .filter(|(s, _)| s.is_subset_of(a))
                .map(|(_, v)| v),
        )
    }

    /// `Pl(A)`: total mass of focal sets meeting `A`.
    pub fn pl(&self, a: &SubsetRef) -> Result<Scalar, MassError> {
        self.check(a)?;
        Ok(self.pl_set(a.set()))
    }

    pub fn pl_set(&self, a: AtomSet) -> Scalar {
        Scalar::sum(
            self.mode,
            self.masses
                .iter()
                .filter(|(s, _)| s.intersects(a))
                .map(|(_, v)| v),
        )
    }

    /// `Bel` on every subset of the frame, indexed by subset bits.
    pub fn bel_table(&self) -> Result<Vec<Scalar>, MassError> {
        let n = self.frame.len();
        if n > MAX_TABLE_ATOMS {
            return Err(FrameError::TooLarge {
                size: n,
                max: MAX_TABLE_ATOMS,
            }
            .into());
        }
        Ok(AtomSet::powerset(n).map(|a| self.bel_set(a)).collect())
    }

    /// Same masses in another arithmetic mode.
    pub fn to_mode(&self, mode: Arithmetic) -> MassFunction {
        let masses = self
            .masses
            .iter()
            .map(|(s, v)| (*s, v.to_mode(mode)))
            .collect();
        MassFunction::from_parts(&self.frame, mode, masses)
    }

    /// Projects every focal set onto one factor of a product frame.
    pub fn marginalize(&self, factor_index: usize) -> Result<MassFunction, MassError> {
        let factor = self
            .frame
            .factors()
            .ok_or(FrameError::NotProduct)?
            .get(factor_index)
            .cloned()
            .ok_or(FrameError::FactorOutOfRange {
                index: factor_index,
                factors: self.frame.factors().map_or(0, <[Frame]>::len),
            })?;
        let mut out: BTreeMap<AtomSet, Scalar> = BTreeMap::new();
        for (s, v) in &self.masses {
            let p = self.frame.project_set(factor_index, *s)?;
            let slot = out.entry(p).or_insert_with(|| Scalar::zero(self.mode));
            *slot = &*slot + v;
        }
        Ok(MassFunction::from_parts(&factor, self.mode, out))
    }

    /// Lifts a mass function on one factor to the joint frame by cylindrical
    /// extension of every focal set.
    pub fn extend_to(&self, joint: &Frame, factor_index: usize) -> Result<MassFunction, MassError> {
        let factor = joint
            .factors()
            .ok_or(FrameError::NotProduct)?
            .get(factor_index)
            .ok_or(FrameError::FactorOutOfRange {
                index: factor_index,
                factors: joint.factors().map_or(0, <[Frame]>::len),
            })?;
        if factor != &self.frame {
            return Err(FrameError::FrameMismatch.into());
        }
        let mut out = BTreeMap::new();
        for (s, v) in &self.masses {
            out.insert(joint.extend_set(factor_index, *s)?, v.clone());
        }
        Ok(MassFunction::from_parts(joint, self.mode, out))
    }

    /// Largest absolute difference in mass over the union of focal sets.
    pub fn max_abs_difference(&self, other: &MassFunction) -> Result<f64, MassError> {
        if self.frame != other.frame {
            return Err(FrameError::FrameMismatch.into());
        }
        let keys: std::collections::BTreeSet<AtomSet> = self
            .masses
            .keys()
            .chain(other.masses.keys())
            .copied()
            .collect();
        Ok(keys
            .into_iter()
            .map(|k| (self.mass_of(k).to_f64() - other.mass_of(k).to_f64()).abs())
            .fold(0.0, f64::max))
    }

    /// Equality within `tol` in floating mode, exact otherwise.
    pub fn approx_eq(&self, other: &MassFunction, tol: f64) -> bool {
        if self.frame != other.frame {
            return false;
        }
        if self.mode == Arithmetic::Exact && other.mode == Arithmetic::Exact {
            return self == other;
        }
        self.max_abs_difference(other).is_ok_and(|d| d <= tol)
    }
}

impl PartialEq for MassFunction {
    fn eq(&self, other: &MassFunction) -> bool {
        self.frame == other.frame
            && self.masses.len() == other.masses.len()
            && self
                .masses
                .iter()
                .zip(&other.masses)
                .all(|((s1, v1), (s2, v2))| s1 == s2 && v1 == v2)
    }
}

impl fmt::Display for MassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .masses
            .iter()
            .map(|(s, v)| format!("{}: {}", self.frame.format_set(*s), v))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Result of [`combine_dempster`].
#[derive(Debug, Clone, PartialEq)]
pub struct CombinationReport {
    pub result: MassFunction,
    /// Product mass that fell on empty intersections before normalization.
    pub conflict_mass: Scalar,
}

/// Dempster's rule: products of focal masses are assigned to the
/// intersection of their sets, empty intersections are dropped and the rest
/// is rescaled by `1 / (1 - conflict)`.
pub fn combine_dempster(
    m1: &MassFunction,
    m2: &MassFunction,
) -> Result<CombinationReport, MassError> {
    if m1.frame != m2.frame {
        return Err(FrameError::FrameMismatch.into());
    }
    let mode = m1.mode.join(m2.mode);
    let mut raw: BTreeMap<AtomSet, Scalar> = BTreeMap::new();
    let mut conflict = Scalar::zero(mode);
    for (b, mb) in &m1.masses {
        for (c, mc) in &m2.masses {
            let product = mb * mc;
            let a = b.intersect(*c);
            if a.is_empty() {
                conflict = &conflict + &product;
            } else {
                let slot = raw.entry(a).or_insert_with(|| Scalar::zero(mode));
                *slot = &*slot + &product;
            }
        }
    }
    if raw.is_empty() {
        return Err(MassError::TotalConflict);
    }
    let norm = &Scalar::one(mode) - &conflict;
    if !norm.is_positive() {
        return Err(MassError::TotalConflict);
    }
    for v in raw.values_mut() {
        *v = &*v / &norm;
    }
    Ok(CombinationReport {
        result: MassFunction::from_parts(&m1.frame, mode, raw),
        conflict_mass: conflict,
    })
}

/// Recovers the mass function whose belief is `bel_values` by Möbius
/// inversion over the subset lattice.
///
/// `bel_values` must cover all `2^n` subsets. Fails when the inversion is
/// not a mass function (negative or empty-set mass, or `Bel(Ξ) != 1`).
/// In floating mode inverted values within [`FLOAT_PROPERTY_TOLERANCE`] of
/// zero are treated as zero.
pub fn mass_from_bel(
    frame: &Frame,
    bel_values: &BTreeMap<AtomSet, Scalar>,
) -> Result<MassFunction, MassError> {
    let n = frame.len();
    if n > MAX_TABLE_ATOMS {
        return Err(FrameError::TooLarge {
            size: n,
            max: MAX_TABLE_ATOMS,
        }
        .into());
    }
    let size = 1usize << n;
    let mode = bel_values
        .values()
        .fold(Arithmetic::Exact, |acc, v| acc.join(v.mode()));
    let mut table = vec![None; size];
    for (s, v) in bel_values {
        frame.check(*s)?;
        table[s.bits() as usize] = Some(v.to_mode(mode));
    }
    let got = table.iter().filter(|v| v.is_some()).count();
    if got != size {
        return Err(MassError::IncompleteTable {
            got,
            expected: size,
        });
    }
    let mut m: Vec<Scalar> = table.into_iter().map(Option::unwrap).collect();
    if !m[0].is_zero() {
        return Err(MassError::NotBelief(format!("Bel(∅) = {}", m[0])));
    }
    for bit in 0..n {
        let step = 1usize << bit;
        for mask in 0..size {
            if mask & step != 0 {
                let lower = m[mask ^ step].clone();
                m[mask] = &m[mask] - &lower;
            }
        }
    }
    let mut masses = BTreeMap::new();
    for (mask, v) in m.into_iter().enumerate().skip(1) {
        let v = match v {
            Scalar::Float(x) if x.abs() <= FLOAT_PROPERTY_TOLERANCE => continue,
            v => v,
        };
        if v.is_negative() {
            return Err(MassError::NotBelief(format!(
                "negative mass {} on {}",
                v,
                frame.format_set(AtomSet::from_bits(mask as u64))
            )));
        }
        masses.insert(AtomSet::from_bits(mask as u64), v);
    }
    MassFunction::new(frame, masses).map_err(|e| match e {
        MassError::SumNotOne(s) => MassError::NotBelief(format!("Bel(Ξ) = {s}")),
        other => other,
    })
}

/// Embeds a conditional belief given `b` as an unconditional one: each
/// conditional mass on `A` moves to `(Ξ − b) ∪ A`.
pub fn condition_embed(
    b: &SubsetRef,
    conditional: &MassFunction,
) -> Result<MassFunction, MassError> {
    if b.frame() != conditional.frame() {
        return Err(FrameError::FrameMismatch.into());
    }
    let not_b = b.complement().set();
    let mut out: BTreeMap<AtomSet, Scalar> = BTreeMap::new();
    for (a, v) in &conditional.masses {
        let target = not_b.union(*a);
        let slot = out
            .entry(target)
            .or_insert_with(|| Scalar::zero(conditional.mode));
        *slot = &*slot + v;
    }
    Ok(MassFunction::from_parts(
        conditional.frame(),
        conditional.mode,
        out,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Scalar {
        Scalar::ratio(p, q)
    }

    fn killer_frame() -> Frame {
        Frame::new(&["gun", "knife"]).unwrap()
    }

    fn killer_mass() -> MassFunction {
        let f = killer_frame();
        MassFunction::from_names(
            &f,
            &[
                (&["gun"][..], r(8, 1000)),
                (&["knife"][..], r(512, 1000)),
                (&["gun", "knife"][..], r(480, 1000)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_cases() {
        let f = killer_frame();
        let vac = MassFunction::new(&f, [(f.full_set(), r(1, 1))]).unwrap();
        assert!(vac.is_vacuous());
        assert_eq!(vac, MassFunction::vacuous(&f, Arithmetic::Exact));
        assert_eq!(killer_mass().focal_count(), 3);

        let err = MassFunction::new(&f, [(AtomSet::EMPTY, r(1, 10)), (f.full_set(), r(9, 10))]);
        assert_eq!(err.unwrap_err(), MassError::MassOnEmptySet);
        let neg = MassFunction::from_names(
            &f,
            &[(&["gun"][..], r(-1, 10)), (&["knife"][..], r(11, 10))],
        );
        assert!(matches!(neg, Err(MassError::NegativeMass { .. })));
        let short = MassFunction::from_names(&f, &[(&["gun"][..], r(1, 2))]);
        assert!(matches!(short, Err(MassError::SumNotOne(_))));
    }

    #[test]
    fn float_drift_is_renormalized() {
        let f = killer_frame();
        let m = MassFunction::from_names(
            &f,
            &[
                (&["gun"][..], Scalar::float(0.5 + 5e-10)),
                (&["knife"][..], Scalar::float(0.5)),
            ],
        )
        .unwrap();
        let total: f64 = m.focal().map(|(_, v)| v.to_f64()).sum();
        assert!((total - 1.0).abs() < 1e-15);
        let rounded = [(AtomSet::singleton(0), Scalar::float(0.1 + 0.2)), (AtomSet::singleton(1), Scalar::float(0.7))];
        let kept = MassFunction::new(&f, rounded.clone()).unwrap();
        assert_eq!(kept.mass_of(AtomSet::singleton(0)), rounded[0].1);
        let bad = MassFunction::from_names(
            &f,
            &[
                (&["gun"][..], Scalar::float(0.5 + 1e-6)),
                (&["knife"][..], Scalar::float(0.5)),
            ],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn bel_pl_killer() {
        let m = killer_mass();
        let f = m.frame().clone();
        let gun = f.encode(&["gun"]).unwrap();
        assert_eq!(m.bel(&gun).unwrap(), r(8, 1000));
        assert_eq!(m.pl(&gun).unwrap(), r(488, 1000));
        assert_eq!(m.bel(&f.full()).unwrap(), r(1, 1));
        assert_eq!(m.pl(&f.full()).unwrap(), r(1, 1));
        assert_eq!(m.pl(&f.empty()).unwrap(), r(0, 1));
        assert_eq!(m.bel(&f.empty()).unwrap(), r(0, 1));
        let other = Frame::new(&["a", "b"]).unwrap();
        assert!(m.bel(&other.full()).is_err());
    }

    #[test]
    fn combine_two_experts() {
        let f = Frame::new(&["A", "notA"]).unwrap();
        let e = MassFunction::from_names(&f, &[(&["A"][..], r(7, 10)), (&["notA"][..], r(3, 10))])
            .unwrap();
        let rep = combine_dempster(&e, &e).unwrap();
        assert_eq!(rep.conflict_mass, r(42, 100));
        assert_eq!(rep.result.mass_of(f.encode_set(&["A"]).unwrap()), r(49, 58));
        assert_eq!(rep.result.mass_of(f.encode_set(&["notA"]).unwrap()), r(9, 58));
    }

    #[test]
    fn combine_neutral_and_total_conflict() {
        let m = killer_mass();
        let vac = MassFunction::vacuous(m.frame(), Arithmetic::Exact);
        let rep = combine_dempster(&m, &vac).unwrap();
        assert_eq!(rep.result, m);
        assert!(rep.conflict_mass.is_zero());

        let f = killer_frame();
        let a = MassFunction::from_names(&f, &[(&["gun"][..], r(1, 1))]).unwrap();
        let b = MassFunction::from_names(&f, &[(&["knife"][..], r(1, 1))]).unwrap();
        assert_eq!(combine_dempster(&a, &b).unwrap_err(), MassError::TotalConflict);
    }

    #[test]
    fn combine_mixed_modes_is_float() {
        let m = killer_mass();
        let v = MassFunction::vacuous(m.frame(), Arithmetic::Float);
        let rep = combine_dempster(&m, &v).unwrap();
        assert_eq!(rep.result.mode(), Arithmetic::Float);
        assert!(rep.result.approx_eq(&m, 1e-15));
    }

    #[test]
    fn mobius_inversion_cases() {
        let f = killer_frame();
        let vac = MassFunction::vacuous(&f, Arithmetic::Exact);
        let table: BTreeMap<AtomSet, Scalar> = vac
            .bel_table()
            .unwrap()
            .into_iter()
            .enumerate()
            .map(|(i, v)| (AtomSet::from_bits(i as u64), v))
            .collect();
        assert_eq!(mass_from_bel(&f, &table).unwrap(), vac);

        let mut bad = table.clone();
        bad.insert(AtomSet::EMPTY, r(1, 10));
        assert!(matches!(mass_from_bel(&f, &bad), Err(MassError::NotBelief(_))));

        let mut partial = table.clone();
        partial.remove(&AtomSet::from_bits(1));
        assert!(matches!(
            mass_from_bel(&f, &partial),
            Err(MassError::IncompleteTable { got: 3, expected: 4 })
        ));

        // Bel({gun}) + Bel({knife}) > Bel(Ξ): inversion goes negative.
        let mut nonbel = table;
        nonbel.insert(AtomSet::from_bits(1), r(6, 10));
        nonbel.insert(AtomSet::from_bits(2), r(6, 10));
        assert!(matches!(mass_from_bel(&f, &nonbel), Err(MassError::NotBelief(_))));
    }

    #[test]
    fn condition_embed_cases() {
        let w = killer_frame();
        let o = Frame::new(&["rescue", "let die"]).unwrap();
        let j = w.product(&o).unwrap();
        let gun = j.cylindrical_extension(0, &w.encode(&["gun"]).unwrap()).unwrap();
        let rescue = j.extend_set(1, o.encode_set(&["rescue"]).unwrap()).unwrap();
        let let_die = j.extend_set(1, o.encode_set(&["let die"]).unwrap()).unwrap();
        let cond = MassFunction::new(
            &j,
            [
                (rescue, r(8, 1000)),
                (let_die, r(512, 1000)),
                (j.full_set(), r(480, 1000)),
            ],
        )
        .unwrap();
        let emb = condition_embed(&gun, &cond).unwrap();
        let not_gun = gun.complement().set();
        assert_eq!(emb.mass_of(not_gun.union(rescue)), r(8, 1000));
        assert_eq!(emb.mass_of(not_gun.union(let_die)), r(512, 1000));
        assert_eq!(emb.mass_of(j.full_set()), r(480, 1000));

        assert_eq!(condition_embed(&j.full(), &cond).unwrap(), cond);
        let vac = MassFunction::vacuous(&j, Arithmetic::Exact);
        assert!(condition_embed(&gun, &vac).unwrap().is_vacuous());
    }

    #[test]
    fn marginalize_cases() {
        let q = Frame::new(&["H", "M", "S", "D"]).unwrap();
        let s = Frame::new(&["B", "G"]).unwrap();
        let j = q.product(&s).unwrap();
        let vac = MassFunction::vacuous(&j, Arithmetic::Exact);
        assert!(vac.marginalize(1).unwrap().is_vacuous());
        let point = MassFunction::from_names(&j, &[(&["(H,B)"][..], r(1, 1))]).unwrap();
        let mq = point.marginalize(0).unwrap();
        assert_eq!(mq.frame(), &q);
        assert_eq!(mq.mass_of(q.encode_set(&["H"]).unwrap()), r(1, 1));
        assert!(matches!(
            MassFunction::vacuous(&q, Arithmetic::Exact).marginalize(0),
            Err(MassError::Frame(FrameError::NotProduct))
        ));
    }

    #[test]
    fn extend_then_marginalize_is_identity() {
        let w = killer_frame();
        let o = Frame::new(&["rescue", "let die"]).unwrap();
        let j = w.product(&o).unwrap();
        let m = killer_mass();
        let ext = m.extend_to(&j, 0).unwrap();
        assert_eq!(ext.marginalize(0).unwrap(), m);
        assert!(ext.marginalize(1).unwrap().is_vacuous());
    }
}
