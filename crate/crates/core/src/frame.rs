//! Frames of discernment and subsets of them.
//!
//! A [`Frame`] is an ordered list of distinct atom names. Subsets are
//! bitsets over atom positions ([`AtomSet`]); a [`SubsetRef`] pairs one with
//! the frame it belongs to so that set algebra can refuse to mix frames.
//!
//! Product frames keep their factors. Joint atoms are ordered
//! lexicographically with the first factor most significant and are named
//! `(a,b,...)` from the factor atom names.

use std::fmt;
use std::sync::Arc;

use crate::error::FrameError;

/// Largest frame accepted unless a caller asks for a different limit.
pub const DEFAULT_MAX_ATOMS: usize = 24;

/// Width of [`AtomSet`]; no limit may exceed it.
pub const HARD_MAX_ATOMS: usize = 64;

/// A set of atom positions, one bit per atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AtomSet(u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub const fn from_bits(bits: u64) -> AtomSet {
        AtomSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(index: usize) -> AtomSet {
        AtomSet(1u64 << index)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> AtomSet {
        if n >= 64 {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> AtomSet {
        indices
            .into_iter()
            .fold(AtomSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn with(self, index: usize) -> AtomSet {
        AtomSet(self.0 | (1u64 << index))
    }

    pub fn contains(self, index: usize) -> bool {
        index < 64 && self.0 & (1u64 << index) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersect(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & other.0)
    }

    pub fn union(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 | other.0)
    }

    pub fn difference(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: AtomSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Atom positions in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `{0, .., n-1}` in increasing bit order. Only sensible
    /// for small `n`.
    pub fn powerset(n: usize) -> impl Iterator<Item = AtomSet> {
        assert!(n < 64, "powerset of {n} atoms is not enumerable");
        (0..(1u64 << n)).map(AtomSet)
    }

    /// All subsets of `self`, including `self` and the empty set.
    pub fn subsets(self) -> impl Iterator<Item = AtomSet> {
        let top = self.0;
        let mut next = Some(top);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & top) };
            Some(AtomSet(cur))
        })
    }
}

#[derive(Debug)]
struct FrameInner {
    atoms: Vec<String>,
    factors: Option<Vec<Frame>>,
}

/// An ordered finite set of atom names. Cheap to clone.
#[derive(Debug, Clone)]
pub struct Frame(Arc<FrameInner>);

impl PartialEq for Frame {
    fn eq(&self, other: &Frame) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.atoms == other.0.atoms
    }
}

impl Eq for Frame {}

impl Frame {
    /// Builds a frame with the default size limit.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Frame, FrameError> {
        Frame::with_limit(names, DEFAULT_MAX_ATOMS)
    }

    pub fn with_limit<S: AsRef<str>>(names: &[S], max_atoms: usize) -> Result<Frame, FrameError> {
        let atoms: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        validate_atoms(&atoms, max_atoms)?;
        Ok(Frame(Arc::new(FrameInner {
            atoms,
            factors: None,
        })))
    }

    /// Product of two frames with the default size limit.
    pub fn product(&self, other: &Frame) -> Result<Frame, FrameError> {
        Frame::product_of(&[self.clone(), other.clone()], DEFAULT_MAX_ATOMS)
    }

    /// Product of any number of factors, first factor most significant.
    pub fn product_of(factors: &[Frame], max_atoms: usize) -> Result<Frame, FrameError> {
        if factors.is_empty() {
            return Err(FrameError::Empty);
        }
        let max_atoms = max_atoms.min(HARD_MAX_ATOMS);
        let size = factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.len()))
            .filter(|&s| s <= max_atoms)
            .ok_or_else(|| FrameError::TooLarge {
                size: factors
                    .iter()
                    .fold(1usize, |acc, f| acc.saturating_mul(f.len())),
                max: max_atoms,
            })?;
        let shape: Vec<usize> = factors.iter().map(Frame::len).collect();
        let atoms: Vec<String> = (0..size)
            .map(|joint| {
                let parts: Vec<&str> = coords_of(joint, &shape)
                    .into_iter()
                    .zip(factors)
                    .map(|(i, f)| f.atom(i))
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        validate_atoms(&atoms, max_atoms)?;
        Ok(Frame(Arc::new(FrameInner {
            atoms,
            factors: Some(factors.to_vec()),
        })))
    }

    pub fn atoms(&self) -> &[String] {
        &self.0.atoms
    }

    pub fn atom(&self, index: usize) -> &str {
        &self.0.atoms[index]
    }

    pub fn len(&self) -> usize {
        self.0.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.atoms.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.atoms.iter().position(|a| a == name)
    }

    pub fn factors(&self) -> Option<&[Frame]> {
        self.0.factors.as_deref()
    }

    pub fn factor_shape(&self) -> Option<Vec<usize>> {
        self.factors().map(|fs| fs.iter().map(Frame::len).collect())
    }

    pub fn full_set(&self) -> AtomSet {
        AtomSet::full(self.len())
    }

    pub fn full(&self) -> SubsetRef {
        SubsetRef {
            frame: self.clone(),
            set: self.full_set(),
        }
    }

    pub fn empty(&self) -> SubsetRef {
        SubsetRef {
            frame: self.clone(),
            set: AtomSet::EMPTY,
        }
    }

    /// Checks that `set` only uses atoms of this frame.
    pub fn check(&self, set: AtomSet) -> Result<AtomSet, FrameError> {
        if set.is_subset_of(self.full_set()) {
            Ok(set)
        } else {
            Err(FrameError::FrameMismatch)
        }
    }

    pub fn subset(&self, set: AtomSet) -> Result<SubsetRef, FrameError> {
        Ok(SubsetRef {
            frame: self.clone(),
            set: self.check(set)?,
        })
    }

    pub fn encode<S: AsRef<str>>(&self, names: &[S]) -> Result<SubsetRef, FrameError> {
        let set = self.encode_set(names)?;
        Ok(SubsetRef {
            frame: self.clone(),
            set,
        })
    }

    pub fn encode_set<S: AsRef<str>>(&self, names: &[S]) -> Result<AtomSet, FrameError> {
        names.iter().try_fold(AtomSet::EMPTY, |acc, n| {
            let n = n.as_ref();
            self.index_of(n)
                .map(|i| acc.with(i))
                .ok_or_else(|| FrameError::UnknownAtom(n.to_string()))
        })
    }

    pub fn decode(&self, set: AtomSet) -> Vec<&str> {
        set.indices().map(|i| self.atom(i)).collect()
    }

    /// `{a,b}` rendering of a subset.
    pub fn format_set(&self, set: AtomSet) -> String {
        format!("{{{}}}", self.decode(set).join(","))
    }

    /// Position of each factor's atom for a joint atom index.
    pub fn coords(&self, joint: usize) -> Result<Vec<usize>, FrameError> {
        let shape = self.factor_shape().ok_or(FrameError::NotProduct)?;
        Ok(coords_of(joint, &shape))
    }

    fn factor(&self, index: usize) -> Result<&Frame, FrameError> {
        let factors = self.factors().ok_or(FrameError::NotProduct)?;
        factors.get(index).ok_or(FrameError::FactorOutOfRange {
            index,
            factors: factors.len(),
        })
    }

    /// All joint atoms whose `factor_index` coordinate lies in `a`.
    pub fn cylindrical_extension(
        &self,
        factor_index: usize,
        a: &SubsetRef,
    ) -> Result<SubsetRef, FrameError> {
        let factor = self.factor(factor_index)?;
        if a.frame() != factor {
            return Err(FrameError::FrameMismatch);
        }
        let set = self.extend_set(factor_index, a.set())?;
        Ok(SubsetRef {
            frame: self.clone(),
            set,
        })
    }

    pub(crate) fn extend_set(&self, factor_index: usize, a: AtomSet) -> Result<AtomSet, FrameError> {
        self.factor(factor_index)?;
        let shape = self.factor_shape().ok_or(FrameError::NotProduct)?;
        Ok(AtomSet::from_indices(
            (0..self.len()).filter(|&j| a.contains(coords_of(j, &shape)[factor_index])),
        ))
    }

    /// Image of `a` under the `factor_index` coordinate map.
    pub fn project_subset(
        &self,
        factor_index: usize,
        a: &SubsetRef,
    ) -> Result<SubsetRef, FrameError> {
        let factor = self.factor(factor_index)?.clone();
        if a.frame() != self {
            return Err(FrameError::FrameMismatch);
        }
        let set = self.project_set(factor_index, a.set())?;
        Ok(SubsetRef { frame: factor, set })
    }

    pub(crate) fn project_set(&self, factor_index: usize, a: AtomSet) -> Result<AtomSet, FrameError> {
        self.factor(factor_index)?;
        let shape = self.factor_shape().ok_or(FrameError::NotProduct)?;
        Ok(AtomSet::from_indices(
            a.indices().map(|j| coords_of(j, &shape)[factor_index]),
        ))
    }
}

fn validate_atoms(atoms: &[String], max_atoms: usize) -> Result<(), FrameError> {
    if atoms.is_empty() {
        return Err(FrameError::Empty);
    }
    let max = max_atoms.min(HARD_MAX_ATOMS);
    if atoms.len() > max {
        return Err(FrameError::TooLarge {
            size: atoms.len(),
            max,
        });
    }
    let mut seen = std::collections::HashSet::new();
    for a in atoms {
        if !seen.insert(a.as_str()) {
            return Err(FrameError::DuplicateAtom(a.clone()));
        }
    }
    Ok(())
}

fn coords_of(mut joint: usize, shape: &[usize]) -> Vec<usize> {
    let mut out = vec![0; shape.len()];
    for (slot, &n) in out.iter_mut().zip(shape).rev() {
        *slot = joint % n;
        joint /= n;
    }
    out
}

/// A subset tied to its frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetRef {
    frame: Frame,
    set: AtomSet,
}

impl SubsetRef {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn set(&self) -> AtomSet {
        self.set
    }

    pub fn names(&self) -> Vec<&str> {
        self.frame.decode(self.set)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    fn same_frame(&self, other: &SubsetRef) -> Result<(), FrameError> {
        if self.frame == other.frame {
            Ok(())
        } else {
            Err(FrameError::FrameMismatch)
        }
    }

    pub fn intersect(&self, other: &SubsetRef) -> Result<SubsetRef, FrameError> {
        self.same_frame(other)?;
        Ok(self.with_set(self.set.intersect(other.set)))
    }

    pub fn union(&self, other: &SubsetRef) -> Result<SubsetRef, FrameError> {
        self.same_frame(other)?;
        Ok(self.with_set(self.set.union(other.set)))
    }

    /// Complement within the owning frame.
    pub fn complement(&self) -> SubsetRef {
        self.with_set(self.frame.full_set().difference(self.set))
    }

    pub fn is_subset(&self, other: &SubsetRef) -> Result<bool, FrameError> {
        self.same_frame(other)?;
        Ok(self.set.is_subset_of(other.set))
    }

    fn with_set(&self, set: AtomSet) -> SubsetRef {
        SubsetRef {
            frame: self.frame.clone(),
            set,
        }
    }
}

impl fmt::Display for SubsetRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.frame.format_set(self.set))
    }
}
