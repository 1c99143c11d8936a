//! Pearson correlation of bit sequences, the interpretive band scale, and
//! the two diffusion experiments: correlating states across the row
//! transposition alone, and plaintext against ciphertext across the whole
//! cipher at chosen round counts.

use std::io::{self, Write};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

use crate::bits::BitSequence;
use crate::cipher::{Cipher, CipherConfig, CipherError, CipherKey, Strategy};
use crate::dna::{kdd_shift_rows, RowKeys};
use crate::state::State;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("empty sequence")]
    EmptySequence,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("degenerate input: a sequence with zero variance has no correlation")]
    DegenerateInput,
    #[error("correlation value {0} outside [-1, 1]")]
    OutOfRange(f64),
}

/// Mean of a bit sequence.
pub fn mean(x: &BitSequence) -> Result<f64, StatsError> {
    if x.is_empty() {
        return Err(StatsError::EmptySequence);
    }
    Ok(x.ones() as f64 / x.len() as f64)
}

/// Population variance (divisor `n`) of a bit sequence.
pub fn variance(x: &BitSequence) -> Result<f64, StatsError> {
    if x.is_empty() {
        return Err(StatsError::EmptySequence);
    }
    let m = mean(x)?;
    let sum: f64 = x
        .bits()
        .iter()
        .map(|&b| {
            let d = b as f64 - m;
            d * d
        })
        .sum();
    Ok(sum / x.len() as f64)
}

/// Pearson correlation coefficient of two equal-length bit sequences.
///
/// The centered moments of 0/1 data reduce to integer counts, so the
/// numerator `n*sum(xy) - sum(x)*sum(y)` and both variance numerators are
/// computed exactly; Cauchy-Schwarz equality is then an integer identity
/// and exact `+-1.0` is returned precisely when one sequence is the other
/// or its complement. A zero-variance input is reported as
/// [`StatsError::DegenerateInput`] rather than a number, so constant
/// sequences never masquerade as uncorrelated ones.
pub fn correlation(p: &BitSequence, c: &BitSequence) -> Result<f64, StatsError> {
    if p.is_empty() || c.is_empty() {
        return Err(StatsError::EmptySequence);
    }
    if p.len() != c.len() {
        return Err(StatsError::LengthMismatch {
            left: p.len(),
            right: c.len(),
        });
    }
    let n = p.len() as i128;
    let mut sum_p: i128 = 0;
    let mut sum_c: i128 = 0;
    let mut sum_pc: i128 = 0;
    for (&x, &y) in p.bits().iter().zip(c.bits().iter()) {
        sum_p += x as i128;
        sum_c += y as i128;
        sum_pc += (x & y) as i128;
    }
    let cov_num = n * sum_pc - sum_p * sum_c;
    let var_p_num = n * sum_p - sum_p * sum_p;
    let var_c_num = n * sum_c - sum_c * sum_c;
    if var_p_num == 0 || var_c_num == 0 {
        return Err(StatsError::DegenerateInput);
    }
    if cov_num * cov_num == var_p_num * var_c_num {
        return Ok(if cov_num > 0 { 1.0 } else { -1.0 });
    }
    let r = cov_num as f64 / ((var_p_num as f64) * (var_c_num as f64)).sqrt();
    Ok(r.clamp(-1.0, 1.0))
}

/// Interpretive bands for a correlation coefficient.
///
/// Boundary magnitudes 0.3 and 0.7 belong to the upper band; only an exact
/// zero counts as no linear relationship, and only exact `+-1` as perfect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Band {
    PerfectNegative,
    StrongNegative,
    ModerateNegative,
    WeakNegative,
    NonLinear,
    WeakPositive,
    ModeratePositive,
    StrongPositive,
    PerfectPositive,
}

impl Band {
    pub const ALL: [Band; 9] = [
        Band::PerfectNegative,
        Band::StrongNegative,
        Band::ModerateNegative,
        Band::WeakNegative,
        Band::NonLinear,
        Band::WeakPositive,
        Band::ModeratePositive,
        Band::StrongPositive,
        Band::PerfectPositive,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Band::PerfectNegative => "perfect_negative",
            Band::StrongNegative => "strong_negative",
            Band::ModerateNegative => "moderate_negative",
            Band::WeakNegative => "weak_negative",
            Band::NonLinear => "non_linear",
            Band::WeakPositive => "weak_positive",
            Band::ModeratePositive => "moderate_positive",
            Band::StrongPositive => "strong_positive",
            Band::PerfectPositive => "perfect_positive",
        }
    }

    /// True for the exact `+-1` bands.
    pub fn is_perfect(self) -> bool {
        matches!(self, Band::PerfectNegative | Band::PerfectPositive)
    }

    fn index(self) -> usize {
        Band::ALL
            .iter()
            .position(|&b| b == self)
            .expect("band listed")
    }
}

/// Classifies a correlation coefficient into its band.
pub fn classify_band(r: f64) -> Result<Band, StatsError> {
    if r.is_nan() || !(-1.0..=1.0).contains(&r) {
        return Err(StatsError::OutOfRange(r));
    }
    if r == 0.0 {
        return Ok(Band::NonLinear);
    }
    let magnitude = r.abs();
    let positive = r > 0.0;
    let band = if magnitude == 1.0 {
        if positive {
            Band::PerfectPositive
        } else {
            Band::PerfectNegative
        }
    } else if magnitude < 0.3 {
        if positive {
            Band::WeakPositive
        } else {
            Band::WeakNegative
        }
    } else if magnitude < 0.7 {
        if positive {
            Band::ModeratePositive
        } else {
            Band::ModerateNegative
        }
    } else {
        if positive {
            Band::StrongPositive
        } else {
            Band::StrongNegative
        }
    };
    Ok(band)
}

/// One experiment trial's correlation and its classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationRecord {
    pub sequence_id: u32,
    /// Round count for whole-cipher runs; `None` for transform-only runs.
    pub round: Option<usize>,
    pub r: f64,
    pub band: Band,
}

/// Per-band trial counts, with degenerate (zero-variance) trials counted
/// separately so every trial lands somewhere.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BandCensus {
    counts: [usize; Band::ALL.len()],
    degenerate: usize,
}

impl BandCensus {
    fn record(&mut self, band: Band) {
        self.counts[band.index()] += 1;
    }

    fn record_degenerate(&mut self) {
        self.degenerate += 1;
    }

    pub fn count(&self, band: Band) -> usize {
        self.counts[band.index()]
    }

    pub fn degenerate(&self) -> usize {
        self.degenerate
    }

    /// All trials, including degenerate ones.
    pub fn total(&self) -> usize {
        self.counts.iter().sum::<usize>() + self.degenerate
    }

    /// Trials that classified as exactly `+-1`.
    pub fn perfect(&self) -> usize {
        self.count(Band::PerfectNegative) + self.count(Band::PerfectPositive)
    }
}

/// Output of a correlation experiment: per-trial records plus the census.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub records: Vec<CorrelationRecord>,
    pub census: BandCensus,
}

impl ExperimentReport {
    /// Writes the records as CSV (`sequence_id,round,r,band`) followed by a
    /// blank line and the band census (`band,count`), degenerate trials
    /// last.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "sequence_id,round,r,band")?;
        for rec in &self.records {
            let round = rec.round.map(|r| r.to_string()).unwrap_or_default();
            writeln!(
                w,
                "{},{},{:.6},{}",
                rec.sequence_id,
                round,
                rec.r,
                rec.band.label()
            )?;
        }
        writeln!(w)?;
        writeln!(w, "band,count")?;
        for band in Band::ALL {
            writeln!(w, "{},{}", band.label(), self.census.count(band))?;
        }
        writeln!(w, "degenerate,{}", self.census.degenerate())?;
        Ok(())
    }
}

fn push_trial(
    report: &mut ExperimentReport,
    sequence_id: u32,
    round: Option<usize>,
    p: &BitSequence,
    c: &BitSequence,
) {
    match correlation(p, c) {
        Ok(r) => {
            let band = classify_band(r).expect("correlation output is clamped into range");
            report.records.push(CorrelationRecord {
                sequence_id,
                round,
                r,
                band,
            });
            report.census.record(band);
        }
        Err(StatsError::DegenerateInput) => report.census.record_degenerate(),
        Err(other) => unreachable!("equal-length non-empty sequences: {other}"),
    }
}

/// Correlates random states against their image under the key-dependent
/// row transposition, one fresh random state and round key per trial.
///
/// Deterministic for a fixed seed. Trials whose key values complement
/// every row produce exactly `-1` and classify as perfect negative.
pub fn transform_only_experiment(trials: usize, seed: u64) -> ExperimentReport {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut report = ExperimentReport {
        records: Vec::with_capacity(trials),
        census: BandCensus::default(),
    };
    for id in 1..=trials {
        let mut block = [0u8; 16];
        rng.fill_bytes(&mut block);
        let mut round_key = [0u8; 16];
        rng.fill_bytes(&mut round_key);

        let keys = RowKeys::from_round_key(&round_key);
        let transformed = kdd_shift_rows(State::from_block(block), keys);

        let p = BitSequence::from_bytes(&block);
        let c = BitSequence::from_bytes(&transformed.to_block());
        push_trial(&mut report, id as u32, None, &p, &c);
    }
    report
}

/// Correlates random plaintext blocks against their ciphertext under the
/// key-dependent cipher at each requested round count, one fresh random
/// 128-bit key and plaintext per trial.
pub fn whole_cipher_experiment(
    trials: usize,
    rounds_list: &[usize],
    seed: u64,
) -> Result<ExperimentReport, CipherError> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut report = ExperimentReport {
        records: Vec::with_capacity(trials * rounds_list.len()),
        census: BandCensus::default(),
    };
    for &rounds in rounds_list {
        let config = CipherConfig::new(Strategy::KeyDependentDna).with_rounds(rounds);
        for id in 1..=trials {
            let mut key_bytes = [0u8; 16];
            rng.fill_bytes(&mut key_bytes);
            let mut block = [0u8; 16];
            rng.fill_bytes(&mut block);

            let key = CipherKey::new(&key_bytes).expect("16-byte key");
            let ciphertext = Cipher::new(&key, &config)?.encrypt_block(block);

            let p = BitSequence::from_bytes(&block);
            let c = BitSequence::from_bytes(&ciphertext);
            push_trial(&mut report, id as u32, Some(rounds), &p, &c);
        }
    }
    Ok(report)
}
