//! Nucleotide strands and the key-dependent row transposition built on them.
//!
//! A strand is an oriented sequence over the alphabet `{A, C, G, T}` with the
//! usual pairing `A<->T`, `C<->G`. The reverse complement of a strand reverses
//! the base order and then complements every base; the two steps commute.
//!
//! The row transposition treats each state row as a strand whose base width
//! is chosen per row by a key-derived value in `0..=3`:
//!
//! * `0` — every byte is one base: reverse the four bytes, complement each.
//! * `1` — complement every byte, no reordering.
//! * `2` — every two bytes form one base: swap the two pairs, complement all.
//! * `3` — the whole row is a single base: complement all bytes in place
//!   (reversing a one-element sequence changes nothing).
//!
//! Bases are coded in two bits as `A=00`, `C=01`, `G=10`, `T=11`, so base
//! complement is bitwise NOT of the code and complementing a byte group is
//! bytewise NOT. Every case is an involution, which is what makes the
//! transposition usable inside a cipher round: applying it twice with the
//! same keys restores the input.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::state::State;

/// Errors from strand parsing and the row transposition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DnaError {
    #[error("invalid nucleotide character {0:?} (expected one of A, C, G, T)")]
    InvalidBase(char),
    #[error("strand length {0} cannot encode a byte (need exactly 4 bases)")]
    InvalidStrandLength(usize),
    #[error("transposition key value {0} out of range (expected 0..=3)")]
    KeyValueOutOfRange(u8),
    #[error("round key length {0} (expected 16 bytes)")]
    InvalidRoundKeyLength(usize),
}

/// One nucleotide base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Base {
    A = 0b00,
    C = 0b01,
    G = 0b10,
    T = 0b11,
}

impl Base {
    /// Watson-Crick pairing: `A<->T`, `C<->G`.
    pub fn complement(self) -> Self {
        match self {
            Base::A => Base::T,
            Base::T => Base::A,
            Base::C => Base::G,
            Base::G => Base::C,
        }
    }

    /// Two-bit code of the base (`A=00`, `C=01`, `G=10`, `T=11`).
    pub fn code(self) -> u8 {
        self as u8
    }

    /// Base for a two-bit code; upper bits are ignored.
    pub fn from_code(code: u8) -> Self {
        match code & 0b11 {
            0b00 => Base::A,
            0b01 => Base::C,
            0b10 => Base::G,
            _ => Base::T,
        }
    }

    pub fn from_char(c: char) -> Result<Self, DnaError> {
        match c {
            'A' | 'a' => Ok(Base::A),
            'C' | 'c' => Ok(Base::C),
            'G' | 'g' => Ok(Base::G),
            'T' | 't' => Ok(Base::T),
            other => Err(DnaError::InvalidBase(other)),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Base::A => 'A',
            Base::C => 'C',
            Base::G => 'G',
            Base::T => 'T',
        }
    }
}

/// An oriented sequence of bases. May be empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Strand(Vec<Base>);

impl Strand {
    pub fn new(bases: Vec<Base>) -> Self {
        Strand(bases)
    }

    pub fn bases(&self) -> &[Base] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The strand in reversed base order.
    pub fn reversed(&self) -> Strand {
        Strand(self.0.iter().rev().copied().collect())
    }

    /// Elementwise base complement, order preserved.
    pub fn complemented(&self) -> Strand {
        Strand(self.0.iter().map(|b| b.complement()).collect())
    }

    /// Reverse the base order, then complement every base.
    ///
    /// Reversal and complement commute, so this equals complementing first
    /// and reversing after.
    ///
    /// ```
    /// use dnaes::Strand;
    ///
    /// let strand: Strand = "AGCTTGAC".parse().unwrap();
    /// assert_eq!(strand.reverse_complemented().to_string(), "GTCAAGCT");
    /// ```
    pub fn reverse_complemented(&self) -> Strand {
        Strand(self.0.iter().rev().map(|b| b.complement()).collect())
    }
}

impl FromStr for Strand {
    type Err = DnaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(Base::from_char)
            .collect::<Result<_, _>>()
            .map(Strand)
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{}", b.to_char())?;
        }
        Ok(())
    }
}

/// Expands one byte into its four-base strand, most significant bit pair
/// first. Under this encoding a bytewise NOT complements all four bases.
pub fn byte_to_strand(byte: u8) -> Strand {
    Strand(vec![
        Base::from_code(byte >> 6),
        Base::from_code(byte >> 4),
        Base::from_code(byte >> 2),
        Base::from_code(byte),
    ])
}

/// Packs a four-base strand back into a byte. Inverse of [`byte_to_strand`].
pub fn strand_to_byte(strand: &Strand) -> Result<u8, DnaError> {
    let bases = strand.bases();
    if bases.len() != 4 {
        return Err(DnaError::InvalidStrandLength(bases.len()));
    }
    Ok(bases[0].code() << 6 | bases[1].code() << 4 | bases[2].code() << 2 | bases[3].code())
}

/// Round-key byte offsets that feed the four row key values.
///
/// One byte per key-schedule word: the first byte of each of the four words
/// in a 16-byte round key.
pub const ROW_KEY_OFFSETS: [usize; 4] = [0, 4, 8, 12];

/// The four key-derived values selecting each row's transposition case.
///
/// Value `k` of four applies to state row `k`; every value is in `0..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowKeys {
    values: [u8; 4],
}

impl RowKeys {
    /// Builds row keys from explicit values, each in `0..=3`.
    pub fn new(values: [u8; 4]) -> Result<Self, DnaError> {
        for &v in &values {
            if v > 3 {
                return Err(DnaError::KeyValueOutOfRange(v));
            }
        }
        Ok(RowKeys { values })
    }

    /// Derives row keys from a 16-byte round key: the bytes at
    /// [`ROW_KEY_OFFSETS`] reduced modulo 4.
    pub fn from_round_key(round_key: &[u8; 16]) -> Self {
        let mut values = [0u8; 4];
        for (v, &off) in values.iter_mut().zip(ROW_KEY_OFFSETS.iter()) {
            *v = round_key[off] & 0b11;
        }
        RowKeys { values }
    }

    /// Slice-checked variant of [`RowKeys::from_round_key`].
    pub fn derive(round_key: &[u8]) -> Result<Self, DnaError> {
        let bytes: &[u8; 16] = round_key
            .try_into()
            .map_err(|_| DnaError::InvalidRoundKeyLength(round_key.len()))?;
        Ok(Self::from_round_key(bytes))
    }

    /// The four values, row 0 first.
    pub fn values(&self) -> [u8; 4] {
        self.values
    }
}

/// Derives the four per-row key values from a 16-byte round key.
///
/// Free-function form of [`RowKeys::derive`].
pub fn derive_row_keys(round_key: &[u8]) -> Result<RowKeys, DnaError> {
    RowKeys::derive(round_key)
}

/// How to treat key value 1.
///
/// The default complements the row bytes without reordering. The
/// [`Case1::Identity`] reading leaves the row untouched instead; it exists
/// as a compatibility switch and is also an involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Case1 {
    #[default]
    ComplementOnly,
    Identity,
}

/// Applies the reverse-complement transposition to one row at the base
/// width selected by `n`.
pub fn transpose_row(row: [u8; 4], n: u8) -> Result<[u8; 4], DnaError> {
    transpose_row_with(row, n, Case1::default())
}

/// [`transpose_row`] with an explicit key-value-1 reading.
pub fn transpose_row_with(row: [u8; 4], n: u8, case1: Case1) -> Result<[u8; 4], DnaError> {
    let [a, b, c, d] = row;
    match n {
        // one byte per base: reverse byte order, complement each byte
        0 => Ok([!d, !c, !b, !a]),
        1 => match case1 {
            Case1::ComplementOnly => Ok([!a, !b, !c, !d]),
            Case1::Identity => Ok(row),
        },
        // two bytes per base: swap the pairs, complement every byte
        2 => Ok([!c, !d, !a, !b]),
        // the whole row is one base: complement only
        3 => Ok([!a, !b, !c, !d]),
        out => Err(DnaError::KeyValueOutOfRange(out)),
    }
}

/// Transposes every state row with its own key value. Rows never exchange
/// bytes with each other.
pub fn kdd_shift_rows(state: State, keys: RowKeys) -> State {
    kdd_shift_rows_with(state, keys, Case1::default())
}

/// [`kdd_shift_rows`] with an explicit key-value-1 reading.
pub fn kdd_shift_rows_with(state: State, keys: RowKeys, case1: Case1) -> State {
    let mut out = state;
    for (r, &n) in keys.values().iter().enumerate() {
        // key values are validated at construction, so this cannot fail
        let row = transpose_row_with(state.row(r), n, case1)
            .expect("row key value in range by construction");
        out.set_row(r, row);
    }
    out
}

/// Inverse of [`kdd_shift_rows`] under the same keys.
///
/// Every per-row case is an involution, so the inverse is the forward
/// transformation again; the name exists so the decryption path reads
/// symmetrically.
pub fn inv_kdd_shift_rows(state: State, keys: RowKeys) -> State {
    kdd_shift_rows(state, keys)
}

/// [`inv_kdd_shift_rows`] with an explicit key-value-1 reading.
pub fn inv_kdd_shift_rows_with(state: State, keys: RowKeys, case1: Case1) -> State {
    kdd_shift_rows_with(state, keys, case1)
}
