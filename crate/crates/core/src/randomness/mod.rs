//! The randomness evaluation suite: a proportion-threshold scorer over the
//! implemented battery of SP800-22 statistics, plus the sequence builders
//! the experiments feed it with.
//!
//! A collection of sequences passes one p-value stream when the fraction
//! of sequences with `p >= alpha` reaches the proportion threshold
//! `(1 - alpha) - 3 sqrt(alpha (1 - alpha) / n)`.
//!
//! Ten p-value streams are implemented: frequency, block frequency, runs,
//! longest run of ones, spectral, serial (2), approximate entropy, and
//! cumulative sums (2).

pub mod sp800;

use std::io::{self, Write};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

use crate::bits::BitSequence;
use crate::cipher::{self, CipherConfig, CipherError, CipherKey, Direction};
use crate::state::BLOCK_BYTES;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RandomnessError {
    #[error("{test}: sequence length {actual} below the minimum {min}")]
    SequenceTooShort {
        test: &'static str,
        min: usize,
        actual: usize,
    },
    #[error("{test}: {detail}")]
    InvalidParameter { test: &'static str, detail: String },
    #[error("invalid significance level {0} (expected 0 < alpha < 1)")]
    InvalidAlpha(f64),
    #[error("invalid sequence count {0} (expected >= 1)")]
    InvalidSequenceCount(usize),
    #[error("invalid sequence length {0} (expected >= 1000 bits)")]
    InvalidSequenceBits(usize),
    #[error("sequence {index} has {actual} bits, expected {expected}")]
    HeterogeneousLengths {
        index: usize,
        expected: usize,
        actual: usize,
    },
    #[error("expected {expected} sequences, got {actual}")]
    SequenceCountMismatch { expected: usize, actual: usize },
    #[error(transparent)]
    Cipher(#[from] CipherError),
}

/// Suite parameters: significance level, number of sequences, and bits per
/// sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomnessConfig {
    pub alpha: f64,
    pub n_sequences: usize,
    pub sequence_bits: usize,
}

impl RandomnessConfig {
    pub fn new(
        alpha: f64,
        n_sequences: usize,
        sequence_bits: usize,
    ) -> Result<Self, RandomnessError> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(RandomnessError::InvalidAlpha(alpha));
        }
        if n_sequences < 1 {
            return Err(RandomnessError::InvalidSequenceCount(n_sequences));
        }
        if sequence_bits < 1000 {
            return Err(RandomnessError::InvalidSequenceBits(sequence_bits));
        }
        Ok(RandomnessConfig {
            alpha,
            n_sequences,
            sequence_bits,
        })
    }
}

/// Minimum fraction of passing sequences for a stream to pass overall:
/// `(1 - alpha) - 3 sqrt(alpha (1 - alpha) / n)`.
///
/// ```
/// let p = dnaes::randomness::proportion_threshold(0.01, 128).unwrap();
/// assert!((p - 0.963616).abs() < 5e-7);
/// ```
pub fn proportion_threshold(alpha: f64, n: usize) -> Result<f64, RandomnessError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(RandomnessError::InvalidAlpha(alpha));
    }
    if n < 1 {
        return Err(RandomnessError::InvalidSequenceCount(n));
    }
    Ok((1.0 - alpha) - 3.0 * (alpha * (1.0 - alpha) / n as f64).sqrt())
}

/// Result of one p-value stream across the whole sequence collection.
#[derive(Debug, Clone, PartialEq)]
pub struct TestOutcome {
    pub test_name: &'static str,
    /// Index of this stream within its test (0, or 0/1 for the two-stream
    /// tests).
    pub stream_index: usize,
    /// One p-value per sequence.
    pub p_values: Vec<f64>,
    /// Per-sequence pass flags at the configured significance level.
    pub passes: Vec<bool>,
    pub proportion_passed: f64,
    pub threshold: f64,
    pub suite_pass: bool,
}

/// Per-length parameters for the battery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteParams {
    pub block_frequency_len: usize,
    pub serial_m: usize,
    pub approximate_entropy_m: usize,
}

impl SuiteParams {
    /// Recommended parameters by sequence length: block length 128
    /// throughout; pattern lengths step up at a million bits.
    pub fn for_length(sequence_bits: usize) -> Self {
        let long = sequence_bits >= 1_000_000;
        SuiteParams {
            block_frequency_len: 128,
            serial_m: if long { 16 } else { 8 },
            approximate_entropy_m: if long { 10 } else { 5 },
        }
    }
}

/// Number of implemented p-value streams.
pub const STREAM_COUNT: usize = 10;

fn stream_p_values(
    seq: &BitSequence,
    params: &SuiteParams,
) -> Result<[f64; STREAM_COUNT], RandomnessError> {
    let (serial_1, serial_2) = sp800::serial_test(seq, params.serial_m)?;
    let (cusum_fwd, cusum_bwd) = sp800::cumulative_sums_test(seq)?;
    Ok([
        sp800::frequency_test(seq)?,
        sp800::block_frequency_test(seq, params.block_frequency_len)?,
        sp800::runs_test(seq)?,
        sp800::longest_run_test(seq)?,
        sp800::dft_test(seq)?,
        serial_1,
        serial_2,
        sp800::approximate_entropy_test(seq, params.approximate_entropy_m)?,
        cusum_fwd,
        cusum_bwd,
    ])
}

const STREAM_NAMES: [(&str, usize); STREAM_COUNT] = [
    ("frequency", 0),
    ("block_frequency", 0),
    ("runs", 0),
    ("longest_run", 0),
    ("dft", 0),
    ("serial", 0),
    ("serial", 1),
    ("approximate_entropy", 0),
    ("cumulative_sums", 0),
    ("cumulative_sums", 1),
];

/// Runs every implemented stream over every sequence and scores each
/// stream's pass proportion against the threshold.
///
/// All sequences must have exactly `config.sequence_bits` bits and the
/// collection must have exactly `config.n_sequences` members.
pub fn run_suite(
    sequences: &[BitSequence],
    config: &RandomnessConfig,
) -> Result<Vec<TestOutcome>, RandomnessError> {
    if sequences.len() != config.n_sequences {
        return Err(RandomnessError::SequenceCountMismatch {
            expected: config.n_sequences,
            actual: sequences.len(),
        });
    }
    for (index, seq) in sequences.iter().enumerate() {
        if seq.len() != config.sequence_bits {
            return Err(RandomnessError::HeterogeneousLengths {
                index,
                expected: config.sequence_bits,
                actual: seq.len(),
            });
        }
    }

    let params = SuiteParams::for_length(config.sequence_bits);
    let threshold = proportion_threshold(config.alpha, config.n_sequences)?;

    let mut per_stream: Vec<Vec<f64>> = (0..STREAM_COUNT)
        .map(|_| Vec::with_capacity(sequences.len()))
        .collect();
    for seq in sequences {
        let values = stream_p_values(seq, &params)?;
        for (bucket, p) in per_stream.iter_mut().zip(values) {
            bucket.push(p);
        }
    }

    Ok(per_stream
        .into_iter()
        .zip(STREAM_NAMES)
        .map(|(p_values, (test_name, stream_index))| {
            let passes: Vec<bool> = p_values.iter().map(|&p| p >= config.alpha).collect();
            let proportion_passed =
                passes.iter().filter(|&&ok| ok).count() as f64 / passes.len() as f64;
            TestOutcome {
                test_name,
                stream_index,
                p_values,
                passes,
                proportion_passed,
                threshold,
                suite_pass: proportion_passed >= threshold,
            }
        })
        .collect())
}

/// Writes the suite summary as CSV:
/// `test_name,p_value_stream_index,proportion_passed,threshold,suite_pass`.
pub fn write_suite_csv<W: Write>(outcomes: &[TestOutcome], w: &mut W) -> io::Result<()> {
    writeln!(
        w,
        "test_name,p_value_stream_index,proportion_passed,threshold,suite_pass"
    )?;
    for o in outcomes {
        writeln!(
            w,
            "{},{},{:.6},{:.6},{}",
            o.test_name, o.stream_index, o.proportion_passed, o.threshold, o.suite_pass
        )?;
    }
    Ok(())
}

/// Sequences drawn straight from a seeded ChaCha20 stream; the reference
/// generator used to calibrate the battery itself.
pub fn reference_sequences(
    n_sequences: usize,
    sequence_bits: usize,
    seed: u64,
) -> Vec<BitSequence> {
    assert_eq!(sequence_bits % 8, 0, "sequence bits must be byte-aligned");
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    (0..n_sequences)
        .map(|_| {
            let mut bytes = vec![0u8; sequence_bits / 8];
            rng.fill_bytes(&mut bytes);
            BitSequence::from_bytes(&bytes)
        })
        .collect()
}

/// Sequences of ciphertext bits: per sequence, a fresh random 16-byte key
/// and fresh random plaintext, ECB-processed under `config`.
pub fn cipher_sequences(
    n_sequences: usize,
    sequence_bits: usize,
    config: &CipherConfig,
    seed: u64,
) -> Result<Vec<BitSequence>, RandomnessError> {
    if sequence_bits == 0 || !sequence_bits.is_multiple_of(BLOCK_BYTES * 8) {
        return Err(RandomnessError::InvalidParameter {
            test: "cipher_sequences",
            detail: format!(
                "sequence length {sequence_bits} is not a positive multiple of 128 bits"
            ),
        });
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut sequences = Vec::with_capacity(n_sequences);
    for _ in 0..n_sequences {
        let mut key_bytes = [0u8; BLOCK_BYTES];
        rng.fill_bytes(&mut key_bytes);
        let key = CipherKey::new(&key_bytes).expect("16-byte key");

        let mut plaintext = vec![0u8; sequence_bits / 8];
        rng.fill_bytes(&mut plaintext);

        let ciphertext = cipher::ecb_process(&plaintext, &key, config, Direction::Encrypt)?;
        sequences.push(BitSequence::from_bytes(&ciphertext));
    }
    Ok(sequences)
}
