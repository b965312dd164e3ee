//! Small helpers for `u64` vertex sets.

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// The set `{0, .., n-1}`.
#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn contains(set: u64, v: usize) -> bool {
    set >> v & 1 == 1
}

#[inline]
pub fn len(set: u64) -> usize {
    set.count_ones() as usize
}

/// Iterates the members of a set in increasing order.
#[derive(Clone, Copy, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub fn members(set: u64) -> Members {
    Members(set)
}

pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> u64 {
    vs.into_iter().fold(0, |acc, v| acc | bit(v))
}
