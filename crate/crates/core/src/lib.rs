//! A block-cipher laboratory built around the AES round structure with a
//! pluggable row-permutation stage.
//!
//! Two permutation strategies are available: the standard cyclic ShiftRows
//! and a key-dependent transposition that treats each state row as a DNA
//! strand and applies a reverse-complement at a per-row, round-key-selected
//! base width. Alongside the cipher itself the crate carries the analysis
//! machinery used to study it: Pearson correlation of plaintext/ciphertext
//! bit streams with an interpretive band scale, and an SP800-22-style
//! randomness battery scored by proportion threshold.
//!
//! * [`dna`] — strands, reverse complement, and the key-dependent row
//!   transposition (an involution for every key).
//! * [`cipher`] — key schedule, round stages, block encrypt/decrypt, and
//!   ECB processing with either permutation strategy.
//! * [`stats`] — correlation, band classification, and the two diffusion
//!   experiments.
//! * [`randomness`] — the test battery, proportion threshold, and suite
//!   runner.
//! * [`special`] — erfc and the regularized upper incomplete gamma.
//!
//! ```
//! use dnaes::{Cipher, CipherConfig, CipherKey, Strategy};
//!
//! let key = CipherKey::from_hex("000102030405060708090a0b0c0d0e0f")?;
//! let cipher = Cipher::new(&key, &CipherConfig::new(Strategy::KeyDependentDna))?;
//! let block = *b"sixteen byte msg";
//! let ciphertext = cipher.encrypt_block(block);
//! assert_eq!(cipher.decrypt_block(ciphertext), block);
//! # Ok::<(), dnaes::CipherError>(())
//! ```

pub mod bits;
pub mod cipher;
pub mod dna;
pub mod randomness;
pub mod special;
pub mod state;
pub mod stats;

pub use bits::BitSequence;
pub use cipher::{Cipher, CipherConfig, CipherError, CipherKey, Direction, Strategy};
pub use dna::{Case1, RowKeys, Strand};
pub use state::State;
