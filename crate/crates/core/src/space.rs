//! Finite topological spaces and the base operators.
//!
//! A [`Space`] is a validated family of open subsets of `{0, .., n-1}`:
//! it contains the empty set and the full set and is closed under pairwise
//! union and intersection (which, on a finite carrier, is equivalent to
//! closure under arbitrary unions). On top of that sit the classical
//! operators: closure, interior, delta-closure, delta-interior, and the
//! regular open/closed families.
//!
//! All operators here are pure and work straight from their definitions:
//! closure intersects closed supersets, delta-closure tests the cluster
//! condition pointwise. The table-driven fast paths live in
//! [`crate::analysis`] and are cross-checked against these in tests.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::subset::{mask_full, Subset, SubsetError, MAX_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error(transparent)]
    Subset(#[from] SubsetError),
    #[error("the empty set is not open")]
    MissingEmpty,
    #[error("the full set is not open")]
    MissingFull,
    #[error("not closed under union: {0} \u{222a} {1} is missing")]
    NotClosedUnderUnion(Subset, Subset),
    #[error("not closed under intersection: {0} \u{2229} {1} is missing")]
    NotClosedUnderIntersection(Subset, Subset),
    #[error("subset over {got} points used in a {expected}-point space")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Content hash of a space, used as a cache and cross-reference key.
///
/// Two spaces have equal fingerprints exactly when they have the same point
/// count and the same open family (labelled equality, not homeomorphism).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint([u8; 8]);

impl Fingerprint {
    pub fn to_hex(self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(text: &str) -> Option<Self> {
        if text.len() != 16 || !text.bytes().all(|b| b.is_ascii_hexdigit()) {
            return None;
        }
        let mut bytes = [0u8; 8];
        for (i, chunk) in text.as_bytes().chunks(2).enumerate() {
            bytes[i] = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 16).ok()?;
        }
        Some(Fingerprint(bytes))
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fingerprint({self})")
    }
}

impl Serialize for Fingerprint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for Fingerprint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Fingerprint::from_hex(&text)
            .ok_or_else(|| serde::de::Error::custom(format!("bad fingerprint {text:?}")))
    }
}

/// A validated finite topological space.
#[derive(Clone, PartialEq, Eq)]
pub struct Space {
    n: usize,
    opens: Vec<Subset>,
    closeds: Vec<Subset>,
    fingerprint: Fingerprint,
}

/// Validates a family of subsets as a topology. See [`Space::new`].
pub fn validate_space(n: usize, opens: Vec<Subset>) -> Result<Space, SpaceError> {
    Space::new(n, opens)
}

impl Space {
    /// Validates the open family and builds the space.
    ///
    /// Accepts exactly the families that contain the empty and the full set
    /// and are closed under pairwise union and intersection. The error
    /// names the violated axiom, with the offending pair of sets.
    pub fn new(n: usize, opens: Vec<Subset>) -> Result<Space, SpaceError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SubsetError::PointCountOutOfRange { n }.into());
        }
        for s in &opens {
            if s.n() != n {
                return Err(SpaceError::DimensionMismatch { expected: n, got: s.n() });
            }
        }
        let mut opens = opens;
        opens.sort();
        opens.dedup();
        if opens.first() != Some(&Subset::empty(n)) {
            return Err(SpaceError::MissingEmpty);
        }
        if opens.last() != Some(&Subset::full(n)) {
            return Err(SpaceError::MissingFull);
        }
        // Membership bitmap over all 2^n masks; n <= 16 keeps this tiny.
        let mut member = vec![false; 1 << n];
        for s in &opens {
            member[s.bits() as usize] = true;
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if !member[(a.bits() | b.bits()) as usize] {
                    return Err(SpaceError::NotClosedUnderUnion(a, b));
                }
                if !member[(a.bits() & b.bits()) as usize] {
                    return Err(SpaceError::NotClosedUnderIntersection(a, b));
                }
            }
        }
        let mut closeds: Vec<Subset> = opens.iter().map(|s| s.complement()).collect();
        closeds.sort();
        let fingerprint = fingerprint_of(n, &opens);
        Ok(Space { n, opens, closeds, fingerprint })
    }

    /// Builds a space from raw bitmasks. Convenience used by enumeration
    /// and file ingestion.
    pub fn from_masks(n: usize, masks: &[u32]) -> Result<Space, SpaceError> {
        let opens = masks
            .iter()
            .map(|&m| Subset::from_mask(n, m))
            .collect::<Result<Vec<_>, _>>()?;
        Space::new(n, opens)
    }

    pub fn discrete(n: usize) -> Space {
        let opens = (0..(1u32 << n)).map(|m| Subset::from_mask(n, m).unwrap()).collect();
        Space::new(n, opens).unwrap()
    }

    pub fn indiscrete(n: usize) -> Space {
        Space::new(n, vec![Subset::empty(n), Subset::full(n)]).unwrap()
    }

    /// The two-point space whose only nontrivial open set is `{0}`.
    pub fn sierpinski() -> Space {
        Space::from_masks(2, &[0b00, 0b01, 0b11]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.n)
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn closeds(&self) -> &[Subset] {
        &self.closeds
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.fingerprint
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: Subset) -> bool {
        self.closeds.binary_search(&s).is_ok()
    }

    fn check_dim(&self, a: Subset) -> Result<(), SpaceError> {
        if a.n() != self.n {
            return Err(SpaceError::DimensionMismatch { expected: self.n, got: a.n() });
        }
        Ok(())
    }

    /// Smallest closed superset of `a`: the intersection of all closed sets
    /// containing it.
    pub fn closure(&self, a: Subset) -> Result<Subset, SpaceError> {
        self.check_dim(a)?;
        Ok(Subset::from_mask(self.n, self.closure_mask(a.bits())).unwrap())
    }

    /// Largest open subset of `a`; equals the complement of the closure of
    /// the complement.
    pub fn interior(&self, a: Subset) -> Result<Subset, SpaceError> {
        self.check_dim(a)?;
        Ok(Subset::from_mask(self.n, self.interior_mask(a.bits())).unwrap())
    }

    /// Points whose every open neighbourhood `U` satisfies
    /// `int(cl(U)) \u{2229} a != \u{2205}` (the delta-cluster points of `a`).
    pub fn delta_closure(&self, a: Subset) -> Result<Subset, SpaceError> {
        self.check_dim(a)?;
        Ok(Subset::from_mask(self.n, self.delta_closure_mask(a.bits())).unwrap())
    }

    /// Points having an open neighbourhood `U` with `int(cl(U))` inside `a`.
    pub fn delta_interior(&self, a: Subset) -> Result<Subset, SpaceError> {
        self.check_dim(a)?;
        Ok(Subset::from_mask(self.n, self.delta_interior_mask(a.bits())).unwrap())
    }

    /// All subsets with `A = int(cl(A))`.
    pub fn regular_open_family(&self) -> Vec<Subset> {
        (0..=mask_full(self.n))
            .filter(|&m| self.interior_mask(self.closure_mask(m)) == m)
            .map(|m| Subset::from_mask(self.n, m).unwrap())
            .collect()
    }

    /// All subsets with `A = cl(int(A))`.
    pub fn regular_closed_family(&self) -> Vec<Subset> {
        (0..=mask_full(self.n))
            .filter(|&m| self.closure_mask(self.interior_mask(m)) == m)
            .map(|m| Subset::from_mask(self.n, m).unwrap())
            .collect()
    }

    pub(crate) fn full_mask(&self) -> u32 {
        mask_full(self.n)
    }

    pub(crate) fn open_masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.opens.iter().map(|s| s.bits())
    }

    pub(crate) fn closure_mask(&self, m: u32) -> u32 {
        let mut acc = self.full_mask();
        for c in &self.closeds {
            let c = c.bits();
            if m & !c == 0 {
                acc &= c;
            }
        }
        acc
    }

    pub(crate) fn interior_mask(&self, m: u32) -> u32 {
        self.full_mask() & !self.closure_mask(self.full_mask() & !m)
    }

    pub(crate) fn delta_closure_mask(&self, m: u32) -> u32 {
        let mut out = 0u32;
        for x in 0..self.n {
            let bit = 1u32 << x;
            let cluster = self.open_masks().filter(|&u| u & bit != 0).all(|u| {
                self.interior_mask(self.closure_mask(u)) & m != 0
            });
            if cluster {
                out |= bit;
            }
        }
        out
    }

    pub(crate) fn delta_interior_mask(&self, m: u32) -> u32 {
        let mut out = 0u32;
        for x in 0..self.n {
            let bit = 1u32 << x;
            let inside = self.open_masks().filter(|&u| u & bit != 0).any(|u| {
                let ic = self.interior_mask(self.closure_mask(u));
                ic & !m == 0
            });
            if inside {
                out |= bit;
            }
        }
        out
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space(n={}, opens=[", self.n)?;
        for (i, s) in self.opens.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "])")
    }
}

fn fingerprint_of(n: usize, opens: &[Subset]) -> Fingerprint {
    let mut hasher = Sha256::new();
    hasher.update([n as u8]);
    for s in opens {
        hasher.update(s.bits().to_le_bytes());
    }
    let digest = hasher.finalize();
    Fingerprint(digest[..8].try_into().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Point;

    fn sub(n: usize, pts: &[Point]) -> Subset {
        Subset::from_points(n, pts).unwrap()
    }

    /// Four points, opens {0},{1},{0,1},{0,2,3} plus the trivial two.
    pub(crate) fn s1() -> Space {
        Space::from_masks(4, &[0b0000, 0b0001, 0b0010, 0b0011, 0b1101, 0b1111]).unwrap()
    }

    #[test]
    fn validates_the_worked_examples() {
        assert_eq!(s1().opens().len(), 6);
        assert!(Space::sierpinski().is_open(sub(2, &[0])));
        assert_eq!(
            Space::from_masks(2, &[0b00, 0b01, 0b10]),
            Err(SpaceError::MissingFull)
        );
        assert_eq!(
            Space::from_masks(2, &[0b01, 0b11]),
            Err(SpaceError::MissingEmpty)
        );
    }

    #[test]
    fn names_the_violating_pair() {
        // {0} and {1} without their union {0,1}.
        let err = Space::from_masks(3, &[0b000, 0b001, 0b010, 0b111]).unwrap_err();
        assert_eq!(
            err,
            SpaceError::NotClosedUnderUnion(sub(3, &[0]), sub(3, &[1]))
        );
        // {0,1} and {1,2} without their intersection {1}.
        let err = Space::from_masks(3, &[0b000, 0b011, 0b110, 0b111]).unwrap_err();
        assert_eq!(
            err,
            SpaceError::NotClosedUnderIntersection(sub(3, &[0, 1]), sub(3, &[1, 2]))
        );
    }

    #[test]
    fn closure_examples() {
        let sp = Space::sierpinski();
        assert_eq!(sp.closure(sub(2, &[0])).unwrap(), sub(2, &[0, 1]));
        let d = Space::discrete(3);
        for m in 0..8u32 {
            let a = Subset::from_mask(3, m).unwrap();
            assert_eq!(d.closure(a).unwrap(), a);
        }
        assert_eq!(s1().closure(sub(4, &[0])).unwrap(), sub(4, &[0, 2, 3]));
    }

    #[test]
    fn interior_examples() {
        let ind = Space::indiscrete(3);
        assert_eq!(ind.interior(sub(3, &[0, 1])).unwrap(), ind.empty());
        assert_eq!(s1().interior(sub(4, &[0, 2, 3])).unwrap(), sub(4, &[0, 2, 3]));
        assert_eq!(s1().interior(s1().full()).unwrap(), s1().full());
    }

    #[test]
    fn delta_closure_examples() {
        let ind = Space::indiscrete(2);
        assert_eq!(ind.delta_closure(sub(2, &[1])).unwrap(), ind.full());
        let d = Space::discrete(3);
        let a = sub(3, &[0, 2]);
        assert_eq!(d.delta_closure(a).unwrap(), a);
        let sp = Space::sierpinski();
        assert_eq!(sp.delta_closure(sub(2, &[1])).unwrap(), sp.full());
    }

    #[test]
    fn delta_interior_examples() {
        let s = s1();
        assert_eq!(s.delta_interior(s.full()).unwrap(), s.full());
        let ind = Space::indiscrete(4);
        assert_eq!(ind.delta_interior(sub(4, &[0, 1, 2])).unwrap(), ind.empty());
        assert_eq!(s.delta_interior(sub(4, &[1])).unwrap(), sub(4, &[1]));
    }

    #[test]
    fn regular_open_families() {
        let s = s1();
        let ro = s.regular_open_family();
        assert_eq!(ro, vec![s.empty(), sub(4, &[1]), sub(4, &[0, 2, 3]), s.full()]);
        let d = Space::discrete(2);
        assert_eq!(d.regular_open_family().len(), 4);
        let sp = Space::sierpinski();
        assert_eq!(sp.regular_open_family(), vec![sp.empty(), sp.full()]);
        // Duality: A regular open iff its complement is regular closed.
        let rc = s.regular_closed_family();
        for a in &ro {
            assert!(rc.contains(&a.complement()));
        }
        assert_eq!(ro.len(), rc.len());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let s = s1();
        let bad = Subset::empty(3);
        assert!(matches!(
            s.closure(bad),
            Err(SpaceError::DimensionMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn fingerprint_is_content_addressed() {
        let a = s1();
        let b = Space::from_masks(4, &[0b1111, 0b1101, 0b0011, 0b0010, 0b0001, 0b0000]).unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), Space::discrete(4).fingerprint());
        let fp = a.fingerprint();
        assert_eq!(Fingerprint::from_hex(&fp.to_hex()), Some(fp));
    }
}
