//! Subsets of a ground set of at most 128 points, stored as bitmasks.

use std::collections::{HashMap, HashSet};
use std::hash::{BuildHasherDefault, Hasher};

/// Bit `i` set means point `i` belongs to the set.
pub type Support = u128;

/// Largest ground set representable by [`Support`].
pub const MAX_POINTS: usize = 128;

pub fn full(n: usize) -> Support {
    assert!(n <= MAX_POINTS);
    if n == MAX_POINTS {
        Support::MAX
    } else {
        (1u128 << n) - 1
    }
}

pub fn size(s: Support) -> usize {
    s.count_ones() as usize
}

pub fn is_subset(a: Support, b: Support) -> bool {
    a & !b == 0
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Support {
    it.into_iter().fold(0, |acc, i| acc | (1u128 << i))
}

/// Indices of the set bits, in increasing order.
pub fn indices(mut s: Support) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(i)
        }
    })
}

/// Hasher for bitmask keys: a splitmix64 finalizer over both halves.
#[derive(Clone, Copy, Default)]
pub struct MaskHasher(u64);

impl Hasher for MaskHasher {
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ b as u64).wrapping_mul(0x100_0000_01b3);
        }
    }

    fn write_u128(&mut self, v: u128) {
        self.0 ^= (v as u64) ^ ((v >> 64) as u64).rotate_left(31);
    }

    fn finish(&self) -> u64 {
        let mut z = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

pub type SupportMap<V> = HashMap<Support, V, BuildHasherDefault<MaskHasher>>;
pub type SupportSet = HashSet<Support, BuildHasherDefault<MaskHasher>>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = from_indices([0, 5, 127]);
        assert_eq!(indices(s).collect::<Vec<_>>(), vec![0, 5, 127]);
        assert_eq!(size(s), 3);
        assert!(is_subset(from_indices([5]), s));
        assert_eq!(full(128), u128::MAX);
        assert_eq!(full(3), 0b111);
    }
}
