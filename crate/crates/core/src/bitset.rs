//! Fixed-width vertex sets.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not};

const WORDS: usize = 4;

/// Number of vertices a [`VertexSet`] can hold.
pub const CAPACITY: usize = 64 * WORDS;

/// A set of vertices `0..CAPACITY`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet([u64; WORDS]);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet([0; WORDS]);

    #[inline]
    pub fn single(v: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        s.insert(v);
        s
    }

    /// `{0, …, n-1}`.
    pub fn below(n: usize) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for (w, word) in s.0.iter_mut().enumerate() {
            let lo = 64 * w;
            *word = if n >= lo + 64 {
                u64::MAX
            } else if n > lo {
                (1u64 << (n - lo)) - 1
            } else {
                0
            };
        }
        s
    }

    /// The set whose members are the set bits of `bits`.
    #[inline]
    pub fn from_bits(bits: u64) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        s.0[0] = bits;
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn count_ones(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    /// Smallest member, or [`CAPACITY`] for the empty set.
    #[inline]
    pub fn trailing_zeros(&self) -> u32 {
        for (w, &word) in self.0.iter().enumerate() {
            if word != 0 {
                return 64 * w as u32 + word.trailing_zeros();
            }
        }
        CAPACITY as u32
    }

    /// Members in increasing order.
    #[inline]
    pub fn iter(&self) -> Ones {
        Ones {
            words: self.0,
            w: 0,
        }
    }
}

/// Iterator over the members of a [`VertexSet`].
pub struct Ones {
    words: [u64; WORDS],
    w: usize,
}

impl Iterator for Ones {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.w < WORDS {
            let word = &mut self.words[self.w];
            if *word != 0 {
                let v = 64 * self.w + word.trailing_zeros() as usize;
                *word &= *word - 1;
                return Some(v);
            }
            self.w += 1;
        }
        None
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Ones;
    fn into_iter(self) -> Ones {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(mut self, rhs: VertexSet) -> VertexSet {
        self &= rhs;
        self
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(mut self, rhs: VertexSet) -> VertexSet {
        self |= rhs;
        self
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a &= b;
        }
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a |= b;
        }
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(self.0.map(|w| !w))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
