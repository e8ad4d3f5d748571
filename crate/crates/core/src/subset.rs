//! Fixed-width subsets of a finite universe.

use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not};

/// An element of a finite structure, identified by its index in `[0, n)`.
pub type Element = usize;

/// Largest universe a [`Subset`] can address.
pub const MAX_SIZE: usize = 128;

/// A subset of `[0, n)` for `n <= MAX_SIZE`, stored as a bit vector.
///
/// The width is owned by the structure the subset belongs to; operations
/// never set bits at or above it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u128);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// All of `[0, n)`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= MAX_SIZE {
            Subset(u128::MAX)
        } else {
            Subset((1u128 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(x: Element) -> Self {
        Subset(1u128 << x)
    }

    #[inline]
    pub fn pair(x: Element, y: Element) -> Self {
        Subset::singleton(x) | Subset::singleton(y)
    }

    #[inline]
    pub const fn contains(self, x: Element) -> bool {
        (self.0 >> x) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: Element) {
        self.0 |= 1u128 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: Element) {
        self.0 &= !(1u128 << x);
    }

    #[inline]
    pub const fn with(self, x: Element) -> Self {
        Subset(self.0 | (1u128 << x))
    }

    #[inline]
    pub const fn without(self, x: Element) -> Self {
        Subset(self.0 & !(1u128 << x))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when the set is exactly `{x}`.
    #[inline]
    pub const fn is_singleton_of(self, x: Element) -> bool {
        self.0 == 1u128 << x
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<Element> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Complement relative to `[0, n)`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Iterates over every subset of `self`, starting with the empty set and
    /// ending with `self`, in increasing numeric order of the bit pattern.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl FromIterator<Element> for Subset {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    #[inline]
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    #[inline]
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAndAssign for Subset {
    #[inline]
    fn bitand_assign(&mut self, rhs: Subset) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for Subset {
    #[inline]
    fn bitor_assign(&mut self, rhs: Subset) {
        self.0 |= rhs.0;
    }
}

/// Bitwise complement over all `MAX_SIZE` bits; mask with [`Subset::full`].
impl Not for Subset {
    type Output = Subset;
    #[inline]
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for Subset {
    type Item = Element;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Members in increasing order.
#[derive(Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = Element;
    #[inline]
    fn next(&mut self) -> Option<Element> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Submask enumeration.
#[derive(Clone)]
pub struct Subsets {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask in increasing order
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(Subset(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn basic_membership() {
        let mut s = Subset::EMPTY;
        s.insert(3);
        s.insert(0);
        s.insert(127);
        assert!(s.contains(3) && s.contains(0) && s.contains(127));
        assert!(!s.contains(1));
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), [0, 3, 127]);
        s.remove(3);
        assert_eq!(s.first(), Some(0));
        assert_eq!(Subset::full(4).bits(), 0b1111);
        assert_eq!(Subset::full(128).len(), 128);
        assert_eq!(Subset::pair(1, 2).complement(4), Subset::pair(0, 3));
    }

    #[test]
    fn submasks_are_all_subsets_in_order() {
        let m = Subset::from_iter([1, 3, 4]);
        let subs: Vec<_> = m.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| s.is_subset(m)));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }
}
