use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};

/// Largest carrier size; every point set fits in one `u16` word.
pub const MAX_POINTS: usize = 16;

/// A finite carrier `{0, .., n-1}` with `1 <= n <= 16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Carrier(usize);

impl Carrier {
    pub fn new(n: usize) -> Result<Self, super::ValidationError> {
        if n == 0 || n > MAX_POINTS {
            return Err(super::ValidationError::CarrierSize(n));
        }
        Ok(Carrier(n))
    }

    pub fn size(self) -> usize {
        self.0
    }

    pub fn full(self) -> PointSet {
        PointSet::full(self.0)
    }

    pub fn points(self) -> std::ops::Range<usize> {
        0..self.0
    }

    /// Every subset of the carrier, in ascending numeric order.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        (0u32..(1u32 << self.0)).map(|b| PointSet(b as u16))
    }
}

/// A subset of a carrier, stored as a membership word (bit `x` set iff `x` is a member).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PointSet(u16);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_bits(bits: u16) -> Self {
        PointSet(bits)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n >= 16 {
            PointSet(u16::MAX)
        } else {
            PointSet(((1u32 << n) - 1) as u16)
        }
    }

    pub fn singleton(x: usize) -> Self {
        PointSet(1 << x)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_POINTS && self.0 & (1 << x) != 0
    }

    pub fn with(self, x: usize) -> Self {
        PointSet(self.0 | (1 << x))
    }

    pub fn without(self, x: usize) -> Self {
        PointSet(self.0 & !(1 << x))
    }

    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to the carrier `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// All subsets of `self`, ascending (carry-rippler enumeration).
    pub fn subsets(self) -> Subsets {
        Subsets {
            next: Some(0),
            set: self.0,
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(PointSet::EMPTY, PointSet::with)
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

pub struct Points(u16);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }
}

pub struct Subsets {
    next: Option<u16>,
    set: u16,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let current = self.next?;
        let following = current.wrapping_sub(self.set) & self.set;
        self.next = (following != 0).then_some(following);
        Some(PointSet(current))
    }
}

/// Iterate over the members of a `u64` element mask (used for lattice element sets).
pub fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let x = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_sparse_set() {
        let s = PointSet::from_bits(0b1010);
        let subs: Vec<u16> = s.subsets().map(PointSet::bits).collect();
        assert_eq!(subs, vec![0, 2, 8, 10]);
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn complement_stays_inside_carrier() {
        let s = PointSet::from_iter([0, 2]);
        assert_eq!(s.complement(3), PointSet::singleton(1));
        assert_eq!(PointSet::full(16).complement(16), PointSet::EMPTY);
    }

    #[test]
    fn carrier_bounds() {
        assert!(Carrier::new(0).is_err());
        assert!(Carrier::new(17).is_err());
        assert_eq!(Carrier::new(3).unwrap().subsets().count(), 8);
    }
}
