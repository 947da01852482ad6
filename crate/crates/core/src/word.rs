//! Binary words with 1-based positions.
//!
//! [`BitWord`] is the general representation used at API boundaries. The
//! exhaustive scans work on the [`packed`] form instead: an `n`-bit integer
//! whose most significant bit is position 1, so ascending integers are
//! ascending words in lexicographic order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const LIMB_BITS: usize = 64;

/// A fixed-length binary word. Position 1 is the leftmost character of the
/// textual form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitWord {
    len: usize,
    // position i lives at limb (i-1)/64, bit (i-1)%64
    limbs: Vec<u64>,
}

impl BitWord {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            limbs: vec![0; len.div_ceil(LIMB_BITS)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut w = Self::zeros(len);
        for i in 1..=len {
            w.set(i, 1);
        }
        w
    }

    /// Builds a word from symbols given left to right. Any nonzero symbol
    /// is rejected.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut w = Self::zeros(bits.len());
        for (offset, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => w.set(offset + 1, 1),
                _ => {
                    return Err(Error::InvalidBit {
                        ch: char::from_digit(b as u32 % 36, 36).unwrap_or('?'),
                        offset,
                    })
                }
            }
        }
        Ok(w)
    }

    /// Unpacks an `len`-bit integer whose most significant bit is position 1.
    pub fn from_packed(value: u64, len: usize) -> Self {
        assert!(len <= packed::MAX_LEN, "packed words hold at most 63 bits");
        let mut w = Self::zeros(len);
        for i in 1..=len {
            if packed::bit(value, len, i) == 1 {
                w.set(i, 1);
            }
        }
        w
    }

    /// Packs the word into an integer with position 1 as the most
    /// significant bit; `None` when the word is longer than 63 bits.
    pub fn to_packed(&self) -> Option<u64> {
        if self.len > packed::MAX_LEN {
            return None;
        }
        Some(
            self.iter()
                .fold(0u64, |acc, b| (acc << 1) | u64::from(b)),
        )
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Symbol at 1-based position `i`.
    ///
    /// Panics when `i` is outside `[1, len]`, like slice indexing.
    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        assert!(i >= 1 && i <= self.len, "position {i} outside [1, {}]", self.len);
        let k = i - 1;
        ((self.limbs[k / LIMB_BITS] >> (k % LIMB_BITS)) & 1) as u8
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u8) {
        assert!(i >= 1 && i <= self.len, "position {i} outside [1, {}]", self.len);
        let k = i - 1;
        let mask = 1u64 << (k % LIMB_BITS);
        if value & 1 == 1 {
            self.limbs[k / LIMB_BITS] |= mask;
        } else {
            self.limbs[k / LIMB_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i >= 1 && i <= self.len, "position {i} outside [1, {}]", self.len);
        let k = i - 1;
        self.limbs[k / LIMB_BITS] ^= 1u64 << (k % LIMB_BITS);
    }

    /// Number of 1-symbols.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.len
    }

    /// Symbols from position 1 to `len`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u8> + '_ {
        (1..=self.len).map(move |i| self.bit(i))
    }

    /// 1-based positions holding a 1, ascending.
    pub fn ones_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(li, &limb)| {
            let mut rest = limb;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(li * LIMB_BITS + t + 1)
            })
        })
    }

    /// Copy of the word with position `d` removed.
    pub fn without(&self, d: usize) -> Self {
        assert!(d >= 1 && d <= self.len, "position {d} outside [1, {}]", self.len);
        let mut out = Self::zeros(self.len - 1);
        for (j, i) in (1..).zip((1..=self.len).filter(|&i| i != d)) {
            if self.bit(i) == 1 {
                out.set(j, 1);
            }
        }
        out
    }

    /// Copy of the word with `value` inserted so that it lands at position
    /// `pos` of the result (`1 <= pos <= len + 1`).
    pub fn with_inserted(&self, pos: usize, value: u8) -> Self {
        assert!(
            pos >= 1 && pos <= self.len + 1,
            "insertion point {pos} outside [1, {}]",
            self.len + 1
        );
        let mut out = Self::zeros(self.len + 1);
        for i in 1..=self.len {
            let j = if i < pos { i } else { i + 1 };
            if self.bit(i) == 1 {
                out.set(j, 1);
            }
        }
        out.set(pos, value);
        out
    }
}

impl Ord for BitWord {
    /// Shorter words first, then lexicographic on positions 1..n.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.limbs.iter().zip(&other.limbs) {
                let diff = a ^ b;
                if diff != 0 {
                    let low = diff & diff.wrapping_neg();
                    return if a & low != 0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BitWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = Self::zeros(s.chars().count());
        for (offset, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => w.set(offset + 1, 1),
                _ => return Err(Error::InvalidBit { ch, offset }),
            }
        }
        Ok(w)
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.iter().map(|b| if b == 1 { '1' } else { '0' }).collect();
        f.pad(&s)
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl serde::Serialize for BitWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Operations on words packed into a `u64`, position 1 as the most
/// significant of `n` bits. All positions are 1-based; callers guarantee
/// `n <= MAX_LEN`.
pub mod packed {
    pub const MAX_LEN: usize = 63;

    #[inline]
    pub fn bit(v: u64, n: usize, i: usize) -> u8 {
        ((v >> (n - i)) & 1) as u8
    }

    #[inline]
    pub fn flip(v: u64, n: usize, i: usize) -> u64 {
        v ^ (1u64 << (n - i))
    }

    #[inline]
    pub fn mask(n: usize) -> u64 {
        (1u64 << n) - 1
    }

    /// Removes position `d`, producing an `(n-1)`-bit value.
    #[inline]
    pub fn delete(v: u64, n: usize, d: usize) -> u64 {
        let b = n - d;
        let low = v & ((1u64 << b) - 1);
        let high = v >> (b + 1);
        (high << b) | low
    }

    /// Inserts `value` so it becomes position `pos` of an `(n+1)`-bit word.
    #[inline]
    pub fn insert(v: u64, n: usize, pos: usize, value: u8) -> u64 {
        // bits at positions >= pos keep their low-order offset
        let b = n + 1 - pos;
        let low = v & ((1u64 << b) - 1);
        let high = v >> b;
        (((high << 1) | u64::from(value)) << b) | low
    }

    #[inline]
    pub fn weight(v: u64) -> u32 {
        v.count_ones()
    }

    pub fn to_string(v: u64, n: usize) -> String {
        (1..=n)
            .map(|i| if bit(v, n, i) == 1 { '1' } else { '0' })
            .collect()
    }
}
