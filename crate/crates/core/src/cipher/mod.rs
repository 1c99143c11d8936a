//! The AES-structured block cipher with a pluggable row-permutation stage.
//!
//! The round structure, key schedule, byte substitution, and column mixing
//! follow FIPS 197. The row-permutation stage is selectable: the standard
//! cyclic ShiftRows, or the key-dependent strand transposition from
//! [`crate::dna`], which derives four per-row case values from the same
//! round key the round's AddRoundKey consumes.
//!
//! Round counts are reducible below the key size's full count for
//! diffusion experiments; the last executed round always takes the final
//! round's shape (no column mixing).

mod tables;

pub use tables::{INV_SBOX, RCON, SBOX};

use thiserror::Error;

use crate::dna::{inv_kdd_shift_rows_with, kdd_shift_rows_with, Case1, RowKeys};
use crate::state::{State, BLOCK_BYTES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CipherError {
    #[error("invalid key length {0} bytes (expected 16, 24, or 32)")]
    InvalidKeyLength(usize),
    #[error("invalid key hex: {0}")]
    InvalidKeyHex(String),
    #[error("invalid round count {requested} (valid range 1..={max})")]
    InvalidRounds { requested: usize, max: usize },
    #[error("data length {0} is not a positive multiple of 16 bytes")]
    InvalidDataLength(usize),
}

/// Which row-permutation stage the cipher uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Standard cyclic ShiftRows.
    #[default]
    Original,
    /// Key-dependent DNA-style row transposition.
    KeyDependentDna,
}

/// Cipher configuration: permutation strategy, optional reduced round
/// count, and the key-value-1 compatibility switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CipherConfig {
    pub strategy: Strategy,
    /// `None` runs the full round count for the key size (10/12/14);
    /// `Some(r)` runs `r` rounds, `1 <= r <= full`.
    pub rounds: Option<usize>,
    /// Treat row key value 1 as the identity instead of complement-only.
    pub case1_identity: bool,
}

impl CipherConfig {
    pub fn new(strategy: Strategy) -> Self {
        CipherConfig {
            strategy,
            ..Self::default()
        }
    }

    pub fn with_rounds(mut self, rounds: usize) -> Self {
        self.rounds = Some(rounds);
        self
    }

    pub fn with_case1_identity(mut self, identity: bool) -> Self {
        self.case1_identity = identity;
        self
    }

    fn case1(&self) -> Case1 {
        if self.case1_identity {
            Case1::Identity
        } else {
            Case1::ComplementOnly
        }
    }
}

/// A cipher key of 16, 24, or 32 bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherKey {
    bytes: Vec<u8>,
}

impl CipherKey {
    pub fn new(bytes: &[u8]) -> Result<Self, CipherError> {
        match bytes.len() {
            16 | 24 | 32 => Ok(CipherKey {
                bytes: bytes.to_vec(),
            }),
            other => Err(CipherError::InvalidKeyLength(other)),
        }
    }

    /// Parses a key from 32, 48, or 64 hex digits.
    pub fn from_hex(hex_str: &str) -> Result<Self, CipherError> {
        let bytes =
            hex::decode(hex_str.trim()).map_err(|e| CipherError::InvalidKeyHex(e.to_string()))?;
        Self::new(&bytes)
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.bytes)
    }

    /// Full round count for this key size: 10, 12, or 14.
    pub fn full_rounds(&self) -> usize {
        self.bytes.len() / 4 + 6
    }
}

/// The expanded key: `rounds + 1` sixteen-byte round keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundKeySchedule {
    round_keys: Vec<[u8; BLOCK_BYTES]>,
}

impl RoundKeySchedule {
    pub fn round_key(&self, round: usize) -> &[u8; BLOCK_BYTES] {
        &self.round_keys[round]
    }

    /// Number of round keys (full rounds + 1).
    pub fn len(&self) -> usize {
        self.round_keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.round_keys.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8; BLOCK_BYTES]> {
        self.round_keys.iter()
    }
}

/// Standard key expansion (FIPS 197, section 5.2) for all three key sizes.
pub fn expand_key(key: &CipherKey) -> RoundKeySchedule {
    let nk = key.bytes.len() / 4;
    let rounds = key.full_rounds();
    let total_words = 4 * (rounds + 1);

    let mut words: Vec<[u8; 4]> = Vec::with_capacity(total_words);
    for chunk in key.bytes.chunks_exact(4) {
        words.push([chunk[0], chunk[1], chunk[2], chunk[3]]);
    }
    for i in nk..total_words {
        let mut temp = words[i - 1];
        if i % nk == 0 {
            temp.rotate_left(1);
            for b in &mut temp {
                *b = SBOX[*b as usize];
            }
            temp[0] ^= RCON[i / nk];
        } else if nk > 6 && i % nk == 4 {
            for b in &mut temp {
                *b = SBOX[*b as usize];
            }
        }
        let prev = words[i - nk];
        words.push([
            prev[0] ^ temp[0],
            prev[1] ^ temp[1],
            prev[2] ^ temp[2],
            prev[3] ^ temp[3],
        ]);
    }

    let round_keys = words
        .chunks_exact(4)
        .map(|quad| {
            let mut rk = [0u8; BLOCK_BYTES];
            for (w, word) in quad.iter().enumerate() {
                rk[w * 4..w * 4 + 4].copy_from_slice(word);
            }
            rk
        })
        .collect();
    RoundKeySchedule { round_keys }
}

/// Bytewise S-box substitution.
pub fn sub_bytes(state: State) -> State {
    let mut block = state.to_block();
    for b in &mut block {
        *b = SBOX[*b as usize];
    }
    State::from_block(block)
}

/// Bytewise inverse S-box substitution.
pub fn inv_sub_bytes(state: State) -> State {
    let mut block = state.to_block();
    for b in &mut block {
        *b = INV_SBOX[*b as usize];
    }
    State::from_block(block)
}

/// Standard ShiftRows: row `r` rotated left by `r` bytes.
pub fn shift_rows(state: State) -> State {
    let mut out = state;
    for r in 1..4 {
        let mut row = state.row(r);
        row.rotate_left(r);
        out.set_row(r, row);
    }
    out
}

/// Inverse ShiftRows: row `r` rotated right by `r` bytes.
pub fn inv_shift_rows(state: State) -> State {
    let mut out = state;
    for r in 1..4 {
        let mut row = state.row(r);
        row.rotate_right(r);
        out.set_row(r, row);
    }
    out
}

/// Multiplication by x in GF(2^8) with reduction polynomial
/// x^8 + x^4 + x^3 + x + 1.
#[inline]
fn xtime(a: u8) -> u8 {
    (a << 1) ^ if a & 0x80 != 0 { 0x1b } else { 0 }
}

/// GF(2^8) multiplication by shift-and-add.
#[inline]
fn gmul(mut a: u8, mut b: u8) -> u8 {
    let mut acc = 0u8;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        a = xtime(a);
        b >>= 1;
    }
    acc
}

fn mix_single_column(col: [u8; 4], matrix: &[[u8; 4]; 4]) -> [u8; 4] {
    core::array::from_fn(|r| {
        matrix[r]
            .iter()
            .zip(col.iter())
            .fold(0u8, |acc, (&m, &v)| acc ^ gmul(m, v))
    })
}

const MIX_MATRIX: [[u8; 4]; 4] = [
    [0x02, 0x03, 0x01, 0x01],
    [0x01, 0x02, 0x03, 0x01],
    [0x01, 0x01, 0x02, 0x03],
    [0x03, 0x01, 0x01, 0x02],
];

const INV_MIX_MATRIX: [[u8; 4]; 4] = [
    [0x0e, 0x0b, 0x0d, 0x09],
    [0x09, 0x0e, 0x0b, 0x0d],
    [0x0d, 0x09, 0x0e, 0x0b],
    [0x0b, 0x0d, 0x09, 0x0e],
];

/// Multiplies every column by the fixed mixing matrix over GF(2^8).
pub fn mix_columns(state: State) -> State {
    let mut out = state;
    for c in 0..4 {
        out.set_column(c, mix_single_column(state.column(c), &MIX_MATRIX));
    }
    out
}

/// Multiplies every column by the inverse mixing matrix.
pub fn inv_mix_columns(state: State) -> State {
    let mut out = state;
    for c in 0..4 {
        out.set_column(c, mix_single_column(state.column(c), &INV_MIX_MATRIX));
    }
    out
}

/// XORs the round key into the state; the round key shares the state's
/// column-major layout, so this is a plain bytewise XOR. Self-inverse.
pub fn add_round_key(state: State, round_key: &[u8; BLOCK_BYTES]) -> State {
    let mut block = state.to_block();
    for (b, k) in block.iter_mut().zip(round_key.iter()) {
        *b ^= k;
    }
    State::from_block(block)
}

/// A ready-to-run cipher: expanded key schedule plus, for the
/// key-dependent strategy, the per-round row keys.
#[derive(Debug, Clone)]
pub struct Cipher {
    schedule: RoundKeySchedule,
    row_keys: Vec<RowKeys>,
    strategy: Strategy,
    case1: Case1,
    rounds: usize,
}

impl Cipher {
    pub fn new(key: &CipherKey, config: &CipherConfig) -> Result<Self, CipherError> {
        let full = key.full_rounds();
        let rounds = config.rounds.unwrap_or(full);
        if rounds < 1 || rounds > full {
            return Err(CipherError::InvalidRounds {
                requested: rounds,
                max: full,
            });
        }
        let schedule = expand_key(key);
        let row_keys = schedule.iter().map(RowKeys::from_round_key).collect();
        Ok(Cipher {
            schedule,
            row_keys,
            strategy: config.strategy,
            case1: config.case1(),
            rounds,
        })
    }

    /// Rounds this instance executes.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    pub fn schedule(&self) -> &RoundKeySchedule {
        &self.schedule
    }

    /// Row keys derived for each round key, index 0 first.
    pub fn row_keys(&self) -> &[RowKeys] {
        &self.row_keys
    }

    fn permute(&self, state: State, round: usize) -> State {
        match self.strategy {
            Strategy::Original => shift_rows(state),
            Strategy::KeyDependentDna => {
                kdd_shift_rows_with(state, self.row_keys[round], self.case1)
            }
        }
    }

    fn inv_permute(&self, state: State, round: usize) -> State {
        match self.strategy {
            Strategy::Original => inv_shift_rows(state),
            Strategy::KeyDependentDna => {
                inv_kdd_shift_rows_with(state, self.row_keys[round], self.case1)
            }
        }
    }

    /// Encrypts one block: initial AddRoundKey, then `rounds - 1` full
    /// rounds, then the final round without column mixing.
    pub fn encrypt_block(&self, block: [u8; BLOCK_BYTES]) -> [u8; BLOCK_BYTES] {
        let mut st = State::from_block(block);
        st = add_round_key(st, self.schedule.round_key(0));
        for r in 1..self.rounds {
            st = sub_bytes(st);
            st = self.permute(st, r);
            st = mix_columns(st);
            st = add_round_key(st, self.schedule.round_key(r));
        }
        st = sub_bytes(st);
        st = self.permute(st, self.rounds);
        st = add_round_key(st, self.schedule.round_key(self.rounds));
        st.to_block()
    }

    /// Decrypts one block by applying the inverse stages in reverse order.
    pub fn decrypt_block(&self, block: [u8; BLOCK_BYTES]) -> [u8; BLOCK_BYTES] {
        let mut st = State::from_block(block);
        st = add_round_key(st, self.schedule.round_key(self.rounds));
        st = self.inv_permute(st, self.rounds);
        st = inv_sub_bytes(st);
        for r in (1..self.rounds).rev() {
            st = add_round_key(st, self.schedule.round_key(r));
            st = inv_mix_columns(st);
            st = self.inv_permute(st, r);
            st = inv_sub_bytes(st);
        }
        st = add_round_key(st, self.schedule.round_key(0));
        st.to_block()
    }
}

/// One-shot block encryption.
pub fn encrypt_block(
    block: [u8; BLOCK_BYTES],
    key: &CipherKey,
    config: &CipherConfig,
) -> Result<[u8; BLOCK_BYTES], CipherError> {
    Ok(Cipher::new(key, config)?.encrypt_block(block))
}

/// One-shot block decryption.
pub fn decrypt_block(
    block: [u8; BLOCK_BYTES],
    key: &CipherKey,
    config: &CipherConfig,
) -> Result<[u8; BLOCK_BYTES], CipherError> {
    Ok(Cipher::new(key, config)?.decrypt_block(block))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Encrypt,
    Decrypt,
}

/// Processes data in ECB mode: every 16-byte block independently, no
/// padding. The length must be a positive multiple of 16.
pub fn ecb_process(
    data: &[u8],
    key: &CipherKey,
    config: &CipherConfig,
    direction: Direction,
) -> Result<Vec<u8>, CipherError> {
    if data.is_empty() || !data.len().is_multiple_of(BLOCK_BYTES) {
        return Err(CipherError::InvalidDataLength(data.len()));
    }
    let cipher = Cipher::new(key, config)?;
    let mut out = Vec::with_capacity(data.len());
    for chunk in data.chunks_exact(BLOCK_BYTES) {
        let block: [u8; BLOCK_BYTES] = chunk.try_into().expect("exact chunk");
        let processed = match direction {
            Direction::Encrypt => cipher.encrypt_block(block),
            Direction::Decrypt => cipher.decrypt_block(block),
        };
        out.extend_from_slice(&processed);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::Strategy;
    use super::*;
    use proptest::prelude::*;
    use rand::{RngCore, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn key128() -> CipherKey {
        CipherKey::from_hex("000102030405060708090a0b0c0d0e0f").unwrap()
    }

    fn fips_plaintext() -> [u8; 16] {
        hex_block("00112233445566778899aabbccddeeff")
    }

    fn hex_block(s: &str) -> [u8; 16] {
        hex::decode(s).unwrap().try_into().unwrap()
    }

    #[test]
    fn key_lengths_and_round_counts() {
        assert_eq!(key128().full_rounds(), 10);
        let k192 = CipherKey::new(&[0u8; 24]).unwrap();
        assert_eq!(k192.full_rounds(), 12);
        assert_eq!(expand_key(&k192).len(), 13);
        let k256 = CipherKey::new(&[0u8; 32]).unwrap();
        assert_eq!(k256.full_rounds(), 14);
        assert_eq!(expand_key(&k256).len(), 15);
        assert_eq!(
            CipherKey::new(&[0u8; 15]),
            Err(CipherError::InvalidKeyLength(15))
        );
    }

    #[test]
    fn key_hex_parsing() {
        assert!(CipherKey::from_hex("000102030405060708090a0b0c0d0e0f").is_ok());
        assert!(CipherKey::from_hex(&"ab".repeat(24)).is_ok());
        assert!(CipherKey::from_hex(&"ab".repeat(32)).is_ok());
        assert!(matches!(
            CipherKey::from_hex("0011"),
            Err(CipherError::InvalidKeyLength(2))
        ));
        assert!(matches!(
            CipherKey::from_hex("zzऄ"),
            Err(CipherError::InvalidKeyHex(_))
        ));
        let k = key128();
        assert_eq!(CipherKey::from_hex(&k.to_hex()).unwrap(), k);
    }

    #[test]
    fn key_expansion_first_words() {
        // FIPS 197 appendix A walks key 2b7e1516...: w[4] = a0fafe17
        let key = CipherKey::from_hex("2b7e151628aed2a6abf7158809cf4f3c").unwrap();
        let schedule = expand_key(&key);
        assert_eq!(schedule.round_key(1)[0..4], [0xa0, 0xfa, 0xfe, 0x17]);

        // for the 000102... key the same walkthrough yields w[4] = d6aa74fd
        let schedule = expand_key(&key128());
        assert_eq!(schedule.round_key(1)[0..4], [0xd6, 0xaa, 0x74, 0xfd]);

        // round key 0 is the cipher key itself for 128-bit keys
        assert_eq!(schedule.round_key(0)[..], key128().bytes()[..]);
        let zero = expand_key(&CipherKey::new(&[0u8; 16]).unwrap());
        assert_eq!(zero.round_key(0), &[0u8; 16]);
    }

    #[test]
    fn sub_bytes_is_sbox_and_inverse() {
        assert_eq!(SBOX[0x00], 0x63);
        let block: [u8; 16] = core::array::from_fn(|i| (i * 17) as u8);
        let st = State::from_block(block);
        assert_eq!(inv_sub_bytes(sub_bytes(st)), st);
    }

    #[test]
    fn shift_rows_moves_rows_cyclically() {
        let block: [u8; 16] = core::array::from_fn(|i| i as u8);
        let st = State::from_block(block);
        let shifted = shift_rows(st);
        assert_eq!(shifted.row(0), st.row(0));
        let r1 = st.row(1);
        assert_eq!(shifted.row(1), [r1[1], r1[2], r1[3], r1[0]]);
        let r2 = st.row(2);
        assert_eq!(shifted.row(2), [r2[2], r2[3], r2[0], r2[1]]);
        let r3 = st.row(3);
        assert_eq!(shifted.row(3), [r3[3], r3[0], r3[1], r3[2]]);
        assert_eq!(inv_shift_rows(shifted), st);
    }

    #[test]
    fn mix_columns_worked_column() {
        // FIPS 197 section 5.1.3 example column
        let mut st = State::from_block([0u8; 16]);
        st.set_column(0, [0xdb, 0x13, 0x53, 0x45]);
        let mixed = mix_columns(st);
        assert_eq!(mixed.column(0), [0x8e, 0x4d, 0xa1, 0xbc]);
        assert_eq!(inv_mix_columns(mixed).column(0), [0xdb, 0x13, 0x53, 0x45]);
        // zero column stays zero
        assert_eq!(mixed.column(1), [0, 0, 0, 0]);
    }

    #[test]
    fn add_round_key_is_xor() {
        let block: [u8; 16] = core::array::from_fn(|i| i as u8);
        let st = State::from_block(block);
        assert_eq!(add_round_key(st, &[0u8; 16]), st);
        let rk = [0xffu8; 16];
        let flipped = add_round_key(State::from_block([0u8; 16]), &rk);
        assert_eq!(flipped.to_block(), [0xffu8; 16]);
        assert_eq!(add_round_key(add_round_key(st, &rk), &rk), st);
    }

    #[test]
    fn fips197_aes128_vector() {
        let config = CipherConfig::new(Strategy::Original);
        let ct = encrypt_block(fips_plaintext(), &key128(), &config).unwrap();
        assert_eq!(ct, hex_block("69c4e0d86a7b0430d8cdb78070b4c55a"));
        let pt = decrypt_block(ct, &key128(), &config).unwrap();
        assert_eq!(pt, fips_plaintext());
    }

    #[test]
    fn fips197_aes192_and_aes256_vectors() {
        let config = CipherConfig::new(Strategy::Original);
        let k192 = CipherKey::from_hex("000102030405060708090a0b0c0d0e0f1011121314151617").unwrap();
        assert_eq!(
            encrypt_block(fips_plaintext(), &k192, &config).unwrap(),
            hex_block("dda97ca4864cdfe06eaf70a0ec0d7191")
        );
        let k256 =
            CipherKey::from_hex("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f")
                .unwrap();
        assert_eq!(
            encrypt_block(fips_plaintext(), &k256, &config).unwrap(),
            hex_block("8ea2b7ca516745bfeafc49904b496089")
        );
    }

    #[test]
    fn fips197_appendix_b_vector() {
        let key = CipherKey::from_hex("2b7e151628aed2a6abf7158809cf4f3c").unwrap();
        let pt = hex_block("3243f6a8885a308d313198a2e0370734");
        let ct = encrypt_block(pt, &key, &CipherConfig::default()).unwrap();
        assert_eq!(ct, hex_block("3925841d02dc09fbdc118597196a0b32"));
    }

    #[test]
    fn single_round_composes_the_four_stages() {
        let config = CipherConfig::new(Strategy::Original).with_rounds(1);
        let schedule = expand_key(&key128());
        let block = fips_plaintext();

        let mut expected = State::from_block(block);
        expected = add_round_key(expected, schedule.round_key(0));
        expected = sub_bytes(expected);
        expected = shift_rows(expected);
        expected = add_round_key(expected, schedule.round_key(1));

        let got = encrypt_block(block, &key128(), &config).unwrap();
        assert_eq!(got, expected.to_block());
    }

    #[test]
    fn round_count_validation() {
        let config = CipherConfig::new(Strategy::Original).with_rounds(11);
        assert_eq!(
            Cipher::new(&key128(), &config).err(),
            Some(CipherError::InvalidRounds {
                requested: 11,
                max: 10
            })
        );
        let config = CipherConfig::new(Strategy::Original).with_rounds(0);
        assert_eq!(
            Cipher::new(&key128(), &config).err(),
            Some(CipherError::InvalidRounds {
                requested: 0,
                max: 10
            })
        );
    }

    #[test]
    fn strategies_diverge_on_random_inputs() {
        let mut rng = ChaCha20Rng::seed_from_u64(0x5eed);
        let mut differing = 0;
        for _ in 0..100 {
            let mut key_bytes = [0u8; 16];
            rng.fill_bytes(&mut key_bytes);
            let mut block = [0u8; 16];
            rng.fill_bytes(&mut block);
            let key = CipherKey::new(&key_bytes).unwrap();
            let original =
                encrypt_block(block, &key, &CipherConfig::new(Strategy::Original)).unwrap();
            let kdd =
                encrypt_block(block, &key, &CipherConfig::new(Strategy::KeyDependentDna)).unwrap();
            if original != kdd {
                differing += 1;
            }
        }
        assert!(differing >= 99, "only {differing}/100 trials diverged");
    }

    #[test]
    fn key_bit_flip_diffuses_to_half_the_ciphertext() {
        let mut rng = ChaCha20Rng::seed_from_u64(0xd1ff);
        let config = CipherConfig::new(Strategy::KeyDependentDna);
        let trials = 1000;
        let mut flipped_bits = 0u64;
        for _ in 0..trials {
            let mut key_bytes = [0u8; 16];
            rng.fill_bytes(&mut key_bytes);
            let mut block = [0u8; 16];
            rng.fill_bytes(&mut block);

            let bit = (rng.next_u32() % 128) as usize;
            let mut tweaked = key_bytes;
            tweaked[bit / 8] ^= 1 << (bit % 8);

            let a = encrypt_block(block, &CipherKey::new(&key_bytes).unwrap(), &config).unwrap();
            let b = encrypt_block(block, &CipherKey::new(&tweaked).unwrap(), &config).unwrap();
            flipped_bits += a
                .iter()
                .zip(b.iter())
                .map(|(x, y)| (x ^ y).count_ones() as u64)
                .sum::<u64>();
        }
        let avg_fraction = flipped_bits as f64 / (trials as f64 * 128.0);
        assert!(
            (0.40..=0.60).contains(&avg_fraction),
            "average flipped fraction {avg_fraction}"
        );
    }

    #[test]
    fn ecb_blocks_are_independent() {
        let key = key128();
        let config = CipherConfig::new(Strategy::KeyDependentDna);
        let a = [0x11u8; 16];
        let b = [0x22u8; 16];
        let mut ab = Vec::new();
        ab.extend_from_slice(&a);
        ab.extend_from_slice(&b);
        let mut ba = Vec::new();
        ba.extend_from_slice(&b);
        ba.extend_from_slice(&a);

        let ct_ab = ecb_process(&ab, &key, &config, Direction::Encrypt).unwrap();
        let ct_ba = ecb_process(&ba, &key, &config, Direction::Encrypt).unwrap();
        assert_eq!(ct_ab[..16], ct_ba[16..]);
        assert_eq!(ct_ab[16..], ct_ba[..16]);

        let back = ecb_process(&ct_ab, &key, &config, Direction::Decrypt).unwrap();
        assert_eq!(back, ab);
    }

    #[test]
    fn ecb_rejects_bad_lengths() {
        let key = key128();
        let config = CipherConfig::default();
        assert_eq!(
            ecb_process(&[0u8; 17], &key, &config, Direction::Encrypt),
            Err(CipherError::InvalidDataLength(17))
        );
        assert_eq!(
            ecb_process(&[], &key, &config, Direction::Encrypt),
            Err(CipherError::InvalidDataLength(0))
        );
    }

    proptest! {
        #[test]
        fn roundtrip_both_strategies(
            key_bytes in proptest::array::uniform16(any::<u8>()),
            block in proptest::array::uniform16(any::<u8>()),
            rounds in 1usize..=10,
            kdd in any::<bool>(),
            case1_identity in any::<bool>(),
        ) {
            let strategy = if kdd { Strategy::KeyDependentDna } else { Strategy::Original };
            let config = CipherConfig {
                strategy,
                rounds: Some(rounds),
                case1_identity,
            };
            let key = CipherKey::new(&key_bytes).unwrap();
            let cipher = Cipher::new(&key, &config).unwrap();
            prop_assert_eq!(cipher.decrypt_block(cipher.encrypt_block(block)), block);
        }

        #[test]
        fn stage_pairs_invert(block in proptest::array::uniform16(any::<u8>())) {
            let st = State::from_block(block);
            prop_assert_eq!(inv_sub_bytes(sub_bytes(st)), st);
            prop_assert_eq!(inv_shift_rows(shift_rows(st)), st);
            prop_assert_eq!(inv_mix_columns(mix_columns(st)), st);
        }
    }
}
