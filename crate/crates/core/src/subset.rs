//! Subsets of a fixed finite carrier, packed into machine words.
//!
//! A [`Subset`] is a bitmask over the points `0..n` with `n <= 16`. Set
//! algebra is O(1), and for any space the full powerset of `2^n` subsets is
//! small enough to enumerate exhaustively. Everything else in this crate
//! leans on that: families, closure operators and property checks are all
//! computed by exact sweeps over masks.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on the number of points in a space.
///
/// Family computations enumerate all `2^n` subsets, so the cap keeps every
/// operator exact and total. Exceeding it is a validation error, never a
/// silent truncation.
pub const MAX_POINTS: usize = 16;

/// A point of a space, identified by its 0-based index.
pub type Point = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum SubsetError {
    #[error("point {point} out of range for a {n}-point space")]
    PointOutOfRange { point: Point, n: usize },
    #[error("point count {n} out of range (must be 1..={MAX_POINTS})")]
    PointCountOutOfRange { n: usize },
    #[error("bitmask {bits:#x} has bits above point count {n}")]
    MaskOutOfRange { bits: u32, n: usize },
    #[error("invalid hex-encoded subset {text:?}")]
    BadHex { text: String },
}

/// A subset of `{0, .., n-1}`, encoded as a bitmask together with its
/// carrier size.
///
/// Two subsets compare equal only if both carrier and membership agree;
/// ordering is by bitmask first, which gives the ascending enumeration
/// order used throughout for families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u32,
    n: u8,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        debug_assert!((1..=MAX_POINTS).contains(&n));
        Subset { bits: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!((1..=MAX_POINTS).contains(&n));
        Subset { bits: mask_full(n), n: n as u8 }
    }

    pub fn singleton(n: usize, p: Point) -> Self {
        debug_assert!(p < n);
        Subset { bits: 1 << p, n: n as u8 }
    }

    /// Builds a subset from a raw bitmask, rejecting bits above `n`.
    pub fn from_mask(n: usize, bits: u32) -> Result<Self, SubsetError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SubsetError::PointCountOutOfRange { n });
        }
        if bits & !mask_full(n) != 0 {
            return Err(SubsetError::MaskOutOfRange { bits, n });
        }
        Ok(Subset { bits, n: n as u8 })
    }

    pub fn from_points(n: usize, points: &[Point]) -> Result<Self, SubsetError> {
        if !(1..=MAX_POINTS).contains(&n) {
            return Err(SubsetError::PointCountOutOfRange { n });
        }
        let mut bits = 0u32;
        for &p in points {
            if p >= n {
                return Err(SubsetError::PointOutOfRange { point: p, n });
            }
            bits |= 1 << p;
        }
        Ok(Subset { bits, n: n as u8 })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == mask_full(self.n as usize)
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(self, p: Point) -> bool {
        p < self.n as usize && self.bits & (1 << p) != 0
    }

    pub fn union(self, other: Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersection(self, other: Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset { bits: self.bits & other.bits, n: self.n }
    }

    pub fn complement(self) -> Subset {
        Subset { bits: mask_full(self.n as usize) & !self.bits, n: self.n }
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint_from(self, other: Subset) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & other.bits == 0
    }

    pub fn points(self) -> impl Iterator<Item = Point> {
        let bits = self.bits;
        (0..self.n as usize).filter(move |p| bits & (1 << p) != 0)
    }

    pub fn to_points(self) -> Vec<Point> {
        self.points().collect()
    }

    /// Compact lowercase-hex encoding of the bitmask, as used in corpus
    /// files (`{0,2,3}` in a 4-point space is `"d"`).
    pub fn to_hex(self) -> String {
        format!("{:x}", self.bits)
    }

    pub fn from_hex(n: usize, text: &str) -> Result<Self, SubsetError> {
        let bits = u32::from_str_radix(text, 16)
            .map_err(|_| SubsetError::BadHex { text: text.to_string() })?;
        Subset::from_mask(n, bits)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Bitmask with the low `n` bits set.
pub(crate) fn mask_full(n: usize) -> u32 {
    debug_assert!(n <= MAX_POINTS);
    if n == 32 { u32::MAX } else { (1u32 << n) - 1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra_matches_semantics() {
        let a = Subset::from_points(4, &[0, 2]).unwrap();
        let b = Subset::from_points(4, &[2, 3]).unwrap();
        assert_eq!(a.union(b).to_points(), vec![0, 2, 3]);
        assert_eq!(a.intersection(b).to_points(), vec![2]);
        assert_eq!(a.complement().to_points(), vec![1, 3]);
        assert!(a.intersection(b).is_subset_of(a));
        assert!(!a.is_subset_of(b));
        assert!(Subset::empty(4).is_subset_of(a));
        assert!(a.is_subset_of(Subset::full(4)));
    }

    #[test]
    fn rejects_out_of_range_points() {
        assert_eq!(
            Subset::from_points(4, &[4]),
            Err(SubsetError::PointOutOfRange { point: 4, n: 4 })
        );
        assert_eq!(
            Subset::from_points(0, &[]),
            Err(SubsetError::PointCountOutOfRange { n: 0 })
        );
        assert_eq!(
            Subset::from_points(17, &[]),
            Err(SubsetError::PointCountOutOfRange { n: 17 })
        );
        assert!(Subset::from_mask(4, 0x10).is_err());
    }

    #[test]
    fn hex_round_trip() {
        let a = Subset::from_points(4, &[0, 2, 3]).unwrap();
        assert_eq!(a.to_hex(), "d");
        assert_eq!(Subset::from_hex(4, "d").unwrap(), a);
        assert!(Subset::from_hex(4, "1f").is_err());
        assert!(Subset::from_hex(4, "zz").is_err());
    }

    #[test]
    fn sixteen_point_full_mask() {
        let x = Subset::full(16);
        assert_eq!(x.bits(), 0xffff);
        assert_eq!(x.len(), 16);
        assert!(x.complement().is_empty());
    }
}
