//! Ordered bit sequences, the unit of all statistical analysis.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors from bit-sequence construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitsError {
    #[error("invalid bit character {0:?} (expected '0' or '1')")]
    InvalidCharacter(char),
    #[error("invalid bit value {0} (expected 0 or 1)")]
    InvalidValue(u8),
}

/// An ordered sequence of bits stored one byte per bit (values 0 or 1).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitSequence {
    bits: Vec<u8>,
}

impl BitSequence {
    /// Builds a sequence from 0/1 values, rejecting anything else.
    pub fn from_bits(values: &[u8]) -> Result<Self, BitsError> {
        for &v in values {
            if v > 1 {
                return Err(BitsError::InvalidValue(v));
            }
        }
        Ok(BitSequence {
            bits: values.to_vec(),
        })
    }

    /// Expands bytes into bits, most significant bit first.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        let mut bits = Vec::with_capacity(bytes.len() * 8);
        for &b in bytes {
            for shift in (0..8).rev() {
                bits.push((b >> shift) & 1);
            }
        }
        BitSequence { bits }
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(values: I) -> Self {
        BitSequence {
            bits: values.into_iter().map(u8::from).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The bits as a slice of 0/1 bytes.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of one bits.
    pub fn ones(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    /// The sequence with every bit flipped.
    pub fn complemented(&self) -> Self {
        BitSequence {
            bits: self.bits.iter().map(|&b| b ^ 1).collect(),
        }
    }

    /// The sequence in reverse order.
    pub fn reversed(&self) -> Self {
        BitSequence {
            bits: self.bits.iter().rev().copied().collect(),
        }
    }
}

impl std::ops::Index<usize> for BitSequence {
    type Output = u8;

    fn index(&self, i: usize) -> &u8 {
        &self.bits[i]
    }
}

impl FromStr for BitSequence {
    type Err = BitsError;

    /// Parses an ASCII string of `0`/`1` characters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(BitsError::InvalidCharacter(other)),
            }
        }
        Ok(BitSequence { bits })
    }
}

impl fmt::Display for BitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}
