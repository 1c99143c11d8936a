//! The 4x4 byte state that all block transformations operate on.
//!
//! A 128-bit block maps onto the state in column-major order: block byte
//! `i` sits at row `i % 4`, column `i / 4`.
//!
//! ```text
//! block[0]  block[4]  block[8]  block[12]
//! block[1]  block[5]  block[9]  block[13]
//! block[2]  block[6]  block[10] block[14]
//! block[3]  block[7]  block[11] block[15]
//! ```

use std::fmt;

/// Number of bytes in one block / state.
pub const BLOCK_BYTES: usize = 16;

/// Rows (and columns) of the state matrix.
pub const STATE_DIM: usize = 4;

/// One 128-bit block viewed as a 4x4 byte matrix.
///
/// Internally stores the block in its natural byte order, which is the
/// column-major matrix layout described in the module docs.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct State {
    bytes: [u8; BLOCK_BYTES],
}

impl State {
    /// Wraps a 16-byte block without reordering.
    pub fn from_block(bytes: [u8; BLOCK_BYTES]) -> Self {
        State { bytes }
    }

    /// Returns the underlying 16-byte block.
    pub fn to_block(self) -> [u8; BLOCK_BYTES] {
        self.bytes
    }

    /// Borrows the underlying block bytes.
    pub fn as_bytes(&self) -> &[u8; BLOCK_BYTES] {
        &self.bytes
    }

    /// Byte at `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.bytes[col * STATE_DIM + row]
    }

    /// Sets the byte at `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize, value: u8) {
        self.bytes[col * STATE_DIM + row] = value;
    }

    /// Extracts row `r` as four bytes, left to right.
    pub fn row(&self, r: usize) -> [u8; STATE_DIM] {
        [
            self.bytes[r],
            self.bytes[STATE_DIM + r],
            self.bytes[2 * STATE_DIM + r],
            self.bytes[3 * STATE_DIM + r],
        ]
    }

    /// Replaces row `r`.
    pub fn set_row(&mut self, r: usize, row: [u8; STATE_DIM]) {
        for (c, byte) in row.into_iter().enumerate() {
            self.bytes[c * STATE_DIM + r] = byte;
        }
    }

    /// Extracts column `c` as four bytes, top to bottom.
    pub fn column(&self, c: usize) -> [u8; STATE_DIM] {
        let base = c * STATE_DIM;
        [
            self.bytes[base],
            self.bytes[base + 1],
            self.bytes[base + 2],
            self.bytes[base + 3],
        ]
    }

    /// Replaces column `c`.
    pub fn set_column(&mut self, c: usize, col: [u8; STATE_DIM]) {
        let base = c * STATE_DIM;
        self.bytes[base..base + STATE_DIM].copy_from_slice(&col);
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "State [")?;
        for r in 0..STATE_DIM {
            let row = self.row(r);
            writeln!(
                f,
                "  {:02x} {:02x} {:02x} {:02x}",
                row[0], row[1], row[2], row[3]
            )?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_major_mapping() {
        let block: [u8; 16] = core::array::from_fn(|i| i as u8);
        let st = State::from_block(block);
        // block byte i lives at row i % 4, column i / 4
        for i in 0..16 {
            assert_eq!(st.get(i % 4, i / 4), i as u8);
        }
        assert_eq!(st.row(0), [0, 4, 8, 12]);
        assert_eq!(st.row(3), [3, 7, 11, 15]);
        assert_eq!(st.column(0), [0, 1, 2, 3]);
        assert_eq!(st.column(3), [12, 13, 14, 15]);
    }

    #[test]
    fn row_roundtrip_is_identity() {
        let block: [u8; 16] = core::array::from_fn(|i| (i as u8).wrapping_mul(37).wrapping_add(5));
        let st = State::from_block(block);
        let mut rebuilt = State::from_block([0; 16]);
        for r in 0..4 {
            rebuilt.set_row(r, st.row(r));
        }
        assert_eq!(rebuilt, st);
        assert_eq!(rebuilt.to_block(), block);
    }

    #[test]
    fn set_get_consistency() {
        let mut st = State::from_block([0; 16]);
        st.set(2, 3, 0xab);
        assert_eq!(st.get(2, 3), 0xab);
        assert_eq!(st.to_block()[3 * 4 + 2], 0xab);
    }
}
