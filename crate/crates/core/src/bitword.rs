//! Binary words of length 1..=63 packed into a single machine word.
//!
//! Position convention: the leftmost character of the string form is
//! position 1 and lives at bit index 0 of the mask; position i lives at
//! bit index i-1. Every string rendered or parsed by this module uses
//! exactly the characters '0' and '1', position 1 first, no separators.
//! All operations are pure; `Word` is `Copy` and freely shareable.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest representable word. One spare bit keeps `1 << len` and the
/// length bookkeeping inside a single `u64`.
pub const MAX_LEN: u32 = 63;

/// A fixed-length binary word, equivalently a vector over Z_2.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u32,
    bits: u64,
}

#[inline]
fn low_mask(len: u32) -> u64 {
    debug_assert!(len <= MAX_LEN);
    (1u64 << len) - 1
}

impl Word {
    /// Build a word from a raw mask. Fails if `len` is out of range or a
    /// bit is set at or beyond `len`.
    pub fn new(len: u32, bits: u64) -> Result<Word> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::LengthOutOfRange(len as u64));
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::StrayBits { len });
        }
        Ok(Word { len, bits })
    }

    pub fn zeros(len: u32) -> Result<Word> {
        Word::new(len, 0)
    }

    pub fn ones(len: u32) -> Result<Word> {
        if len == 0 || len > MAX_LEN {
            return Err(Error::LengthOutOfRange(len as u64));
        }
        Ok(Word {
            len,
            bits: low_mask(len),
        })
    }

    /// Number of positions; never zero.
    #[allow(clippy::len_without_is_empty)]
    #[inline]
    pub fn len(&self) -> u32 {
        self.len
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Character at 1-based position `pos`.
    #[inline]
    pub fn get(&self, pos: u32) -> u8 {
        debug_assert!(pos >= 1 && pos <= self.len);
        (self.bits >> (pos - 1) & 1) as u8
    }

    /// Coordinatewise sum over Z_2.
    pub fn xor_add(self, other: Word) -> Result<Word> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(Word {
            len: self.len,
            bits: self.bits ^ other.bits,
        })
    }

    /// Number of coordinates in which the two words differ.
    pub fn hamming_distance(self, other: Word) -> Result<u32> {
        Ok(self.xor_add(other)?.bits.count_ones())
    }

    /// Sum of all coordinates mod 2.
    #[inline]
    pub fn parity(self) -> u8 {
        (self.bits.count_ones() & 1) as u8
    }

    /// `self || other`: positions 1..=|self| from `self`, the rest from
    /// `other`.
    pub fn concat(self, other: Word) -> Result<Word> {
        if self.len + other.len > MAX_LEN {
            return Err(Error::ConcatOverflow {
                left: self.len,
                right: other.len,
            });
        }
        Ok(Word {
            len: self.len + other.len,
            bits: self.bits | other.bits << self.len,
        })
    }

    /// Every coordinate flipped; an involution.
    #[inline]
    pub fn complement(self) -> Word {
        Word {
            len: self.len,
            bits: !self.bits & low_mask(self.len),
        }
    }

    /// True iff some contiguous window of `self` equals `pattern`.
    /// Always false when the pattern is longer than the word.
    pub fn contains_substring(self, pattern: Word) -> bool {
        if pattern.len > self.len {
            return false;
        }
        let mask = low_mask(pattern.len);
        (0..=self.len - pattern.len).any(|off| self.bits >> off & mask == pattern.bits)
    }

    /// Length of the longest block of consecutive 1s; 0 for the zero
    /// word. `w.contains_substring(1^s)` iff `w.max_run_ones() >= s`.
    pub fn max_run_ones(self) -> u32 {
        let mut x = self.bits;
        let mut run = 0;
        while x != 0 {
            x &= x << 1;
            run += 1;
        }
        run
    }

    /// All 2^n words of length `n` exactly once, in ascending mask order,
    /// in constant memory.
    pub fn all(n: u32) -> Result<impl Iterator<Item = Word>> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::LengthOutOfRange(n as u64));
        }
        Ok((0..1u64 << n).map(move |bits| Word { len: n, bits }))
    }

    /// Positions `start..start+len-1` (1-based) as a word of length
    /// `len`. None when the range does not fit or `len` is 0.
    pub(crate) fn slice(self, start: u32, len: u32) -> Option<Word> {
        if len == 0 || start == 0 || start + len - 1 > self.len {
            return None;
        }
        Some(Word {
            len,
            bits: self.bits >> (start - 1) & low_mask(len),
        })
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let n = s.chars().count();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        if n > MAX_LEN as usize {
            return Err(Error::WordTooLong(n));
        }
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                found => {
                    return Err(Error::InvalidChar {
                        position: i + 1,
                        found,
                    })
                }
            }
        }
        Ok(Word {
            len: n as u32,
            bits,
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            fmt::Write::write_char(f, if self.bits >> i & 1 == 1 { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
