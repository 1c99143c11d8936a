//! The implemented SP800-22 test statistics.
//!
//! Each test exists in two layers: a `*_p_value` function that evaluates
//! the raw statistic with no length validation (useful for the standard's
//! short worked examples), and a checked `*_test` wrapper that enforces
//! the documented input floors and parameter constraints.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::bits::BitSequence;
use crate::special::{erfc, igamc, normal_cdf};

use super::RandomnessError;

fn check_floor(test: &'static str, len: usize, floor: usize) -> Result<(), RandomnessError> {
    if len < floor {
        Err(RandomnessError::SequenceTooShort {
            test,
            min: floor,
            actual: len,
        })
    } else {
        Ok(())
    }
}

/// chi-squared upper tail via the regularized upper incomplete gamma.
/// Tiny negative statistics from floating-point cancellation clamp to 0.
fn chi_squared_p(half_df: f64, chi_squared: f64) -> f64 {
    igamc(half_df, (chi_squared / 2.0).max(0.0)).expect("positive df, non-negative statistic")
}

// ---------------------------------------------------------------------------
// 1. Frequency (monobit)
// ---------------------------------------------------------------------------

/// Monobit statistic: `P = erfc(|sum(2x - 1)| / sqrt(n) / sqrt(2))`.
pub fn frequency_p_value(seq: &BitSequence) -> f64 {
    let n = seq.len() as f64;
    let sum = 2.0 * seq.ones() as f64 - n;
    let s_obs = sum.abs() / n.sqrt();
    erfc(s_obs * std::f64::consts::FRAC_1_SQRT_2)
}

pub fn frequency_test(seq: &BitSequence) -> Result<f64, RandomnessError> {
    check_floor("frequency", seq.len(), 100)?;
    Ok(frequency_p_value(seq))
}

// ---------------------------------------------------------------------------
// 2. Frequency within a block
// ---------------------------------------------------------------------------

/// Block frequency statistic over `floor(n / m)` disjoint blocks:
/// `chi^2 = 4 m sum_i (pi_i - 1/2)^2`, `P = igamc(N/2, chi^2/2)`.
pub fn block_frequency_p_value(seq: &BitSequence, block_len: usize) -> f64 {
    let blocks = seq.len() / block_len;
    let mut chi_squared = 0.0;
    for i in 0..blocks {
        let ones: usize = seq.bits()[i * block_len..(i + 1) * block_len]
            .iter()
            .map(|&b| b as usize)
            .sum();
        let pi = ones as f64 / block_len as f64;
        chi_squared += (pi - 0.5) * (pi - 0.5);
    }
    chi_squared *= 4.0 * block_len as f64;
    chi_squared_p(blocks as f64 / 2.0, chi_squared)
}

pub fn block_frequency_test(seq: &BitSequence, block_len: usize) -> Result<f64, RandomnessError> {
    check_floor("block_frequency", seq.len(), 100)?;
    if block_len == 0 || seq.len() / block_len == 0 {
        return Err(RandomnessError::InvalidParameter {
            test: "block_frequency",
            detail: format!("block length {block_len} leaves no complete block"),
        });
    }
    Ok(block_frequency_p_value(seq, block_len))
}

// ---------------------------------------------------------------------------
// 3. Runs
// ---------------------------------------------------------------------------

/// Runs statistic. When the ones fraction fails the monobit prerequisite
/// `|pi - 1/2| < 2/sqrt(n)` the p-value is 0 by convention.
pub fn runs_p_value(seq: &BitSequence) -> f64 {
    let n = seq.len() as f64;
    let pi = seq.ones() as f64 / n;
    if (pi - 0.5).abs() >= 2.0 / n.sqrt() {
        return 0.0;
    }
    let bits = seq.bits();
    let runs = 1 + bits.windows(2).filter(|w| w[0] != w[1]).count();
    let expected = 2.0 * n * pi * (1.0 - pi);
    erfc((runs as f64 - expected).abs() / (2.0 * (2.0 * n).sqrt() * pi * (1.0 - pi)))
}

pub fn runs_test(seq: &BitSequence) -> Result<f64, RandomnessError> {
    check_floor("runs", seq.len(), 100)?;
    Ok(runs_p_value(seq))
}

// ---------------------------------------------------------------------------
// 4. Longest run of ones in a block
// ---------------------------------------------------------------------------

struct LongestRunTable {
    block_len: usize,
    /// longest-run category edges: `<= edges[0]`, each exact middle value,
    /// `>= edges[last]`
    edges: &'static [usize],
    probabilities: &'static [f64],
}

/// Category probabilities from SP800-22 section 3.4.
fn longest_run_table(n: usize) -> LongestRunTable {
    if n < 6272 {
        LongestRunTable {
            block_len: 8,
            edges: &[1, 2, 3, 4],
            probabilities: &[0.21484375, 0.3671875, 0.23046875, 0.1875],
        }
    } else if n < 750_000 {
        LongestRunTable {
            block_len: 128,
            edges: &[4, 5, 6, 7, 8, 9],
            probabilities: &[
                0.1174035788,
                0.242955959,
                0.249363483,
                0.17517706,
                0.102701071,
                0.112398847,
            ],
        }
    } else {
        LongestRunTable {
            block_len: 10_000,
            edges: &[10, 11, 12, 13, 14, 15, 16],
            probabilities: &[0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727],
        }
    }
}

/// Longest-run-of-ones statistic with the block size picked by sequence
/// length (8 / 128 / 10^4).
pub fn longest_run_p_value(seq: &BitSequence) -> f64 {
    let table = longest_run_table(seq.len());
    let categories = table.probabilities.len();
    let blocks = seq.len() / table.block_len;

    let mut counts = vec![0usize; categories];
    for i in 0..blocks {
        let block = &seq.bits()[i * table.block_len..(i + 1) * table.block_len];
        let mut longest = 0usize;
        let mut current = 0usize;
        for &b in block {
            current = if b == 1 { current + 1 } else { 0 };
            longest = longest.max(current);
        }
        let category = if longest <= table.edges[0] {
            0
        } else if longest >= *table.edges.last().expect("non-empty edges") {
            categories - 1
        } else {
            longest - table.edges[0]
        };
        counts[category] += 1;
    }

    let n_blocks = blocks as f64;
    let chi_squared: f64 = counts
        .iter()
        .zip(table.probabilities.iter())
        .map(|(&nu, &p)| {
            let expected = n_blocks * p;
            (nu as f64 - expected) * (nu as f64 - expected) / expected
        })
        .sum();
    chi_squared_p((categories - 1) as f64 / 2.0, chi_squared)
}

pub fn longest_run_test(seq: &BitSequence) -> Result<f64, RandomnessError> {
    check_floor("longest_run", seq.len(), 128)?;
    Ok(longest_run_p_value(seq))
}

// ---------------------------------------------------------------------------
// 6. Discrete Fourier transform (spectral)
// ---------------------------------------------------------------------------

/// Spectral statistic: the fraction of DFT magnitudes in the first half of
/// the spectrum below the 95% threshold `T = sqrt(n ln(1/0.05))`, compared
/// with its expectation under a normal approximation.
pub fn dft_p_value(seq: &BitSequence) -> f64 {
    let n = seq.len();
    let mut buffer: Vec<Complex<f64>> = seq
        .bits()
        .iter()
        .map(|&b| Complex::new(2.0 * b as f64 - 1.0, 0.0))
        .collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buffer);

    let threshold = ((n as f64) * (1.0 / 0.05f64).ln()).sqrt();
    let below = buffer[..n / 2]
        .iter()
        .filter(|c| c.norm() < threshold)
        .count() as f64;
    let expected = 0.95 * n as f64 / 2.0;
    let d = (below - expected) / (n as f64 * 0.95 * 0.05 / 4.0).sqrt();
    erfc(d.abs() * std::f64::consts::FRAC_1_SQRT_2)
}

pub fn dft_test(seq: &BitSequence) -> Result<f64, RandomnessError> {
    check_floor("dft", seq.len(), 1000)?;
    Ok(dft_p_value(seq))
}

// ---------------------------------------------------------------------------
// 11-12. Serial
// ---------------------------------------------------------------------------

/// Occurrence counts of every overlapping `m`-bit pattern, with cyclic
/// wraparound so all `n` positions contribute.
fn pattern_counts(seq: &BitSequence, m: usize) -> Vec<u32> {
    let bits = seq.bits();
    let n = bits.len();
    let mask = (1usize << m) - 1;
    let mut counts = vec![0u32; 1 << m];
    let mut window = 0usize;
    for &b in &bits[..m - 1] {
        window = (window << 1) | b as usize;
    }
    for i in 0..n {
        window = ((window << 1) | bits[(i + m - 1) % n] as usize) & mask;
        counts[window] += 1;
    }
    counts
}

/// psi-squared statistic over overlapping `m`-bit patterns; `psi2(0) = 0`.
fn psi_squared(seq: &BitSequence, m: usize) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let n = seq.len() as f64;
    let sum_of_squares: f64 = pattern_counts(seq, m)
        .iter()
        .map(|&c| c as f64 * c as f64)
        .sum();
    (2f64.powi(m as i32) / n) * sum_of_squares - n
}

/// Serial statistics: p-values for the first and second differences of
/// psi-squared at pattern lengths `m`, `m-1`, `m-2`.
pub fn serial_p_values(seq: &BitSequence, m: usize) -> (f64, f64) {
    let psi_m = psi_squared(seq, m);
    let psi_m1 = psi_squared(seq, m - 1);
    let psi_m2 = psi_squared(seq, m.saturating_sub(2));
    let delta1 = psi_m - psi_m1;
    let delta2 = psi_m - 2.0 * psi_m1 + psi_m2;
    (
        chi_squared_p(2f64.powi(m as i32 - 2), delta1),
        chi_squared_p(2f64.powi(m as i32 - 3), delta2),
    )
}

pub fn serial_test(seq: &BitSequence, m: usize) -> Result<(f64, f64), RandomnessError> {
    let max = (seq.len() as f64).log2().floor() as usize;
    if m < 2 || max < 3 || m >= max - 2 {
        return Err(RandomnessError::InvalidParameter {
            test: "serial",
            detail: format!(
                "pattern length {m} violates m < floor(log2(n)) - 2 for n = {}",
                seq.len()
            ),
        });
    }
    Ok(serial_p_values(seq, m))
}

// ---------------------------------------------------------------------------
// 13. Approximate entropy
// ---------------------------------------------------------------------------

fn phi(seq: &BitSequence, m: usize) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let n = seq.len() as f64;
    pattern_counts(seq, m)
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let fraction = c as f64 / n;
            fraction * fraction.ln()
        })
        .sum()
}

/// Approximate entropy statistic: `ApEn(m) = phi(m) - phi(m+1)`,
/// `chi^2 = 2n (ln 2 - ApEn)`, `P = igamc(2^(m-1), chi^2/2)`.
pub fn approximate_entropy_p_value(seq: &BitSequence, m: usize) -> f64 {
    let apen = phi(seq, m) - phi(seq, m + 1);
    let chi_squared = 2.0 * seq.len() as f64 * (std::f64::consts::LN_2 - apen);
    chi_squared_p(2f64.powi(m as i32 - 1), chi_squared)
}

pub fn approximate_entropy_test(seq: &BitSequence, m: usize) -> Result<f64, RandomnessError> {
    let max = (seq.len() as f64).log2().floor() as usize;
    if m < 1 || max < 6 || m >= max - 5 {
        return Err(RandomnessError::InvalidParameter {
            test: "approximate_entropy",
            detail: format!(
                "pattern length {m} violates m < floor(log2(n)) - 5 for n = {}",
                seq.len()
            ),
        });
    }
    Ok(approximate_entropy_p_value(seq, m))
}

// ---------------------------------------------------------------------------
// 14-15. Cumulative sums
// ---------------------------------------------------------------------------

fn cusum_p_from_max_excursion(n: usize, z: i64) -> f64 {
    let n_i = n as i64;
    let sqrt_n = (n as f64).sqrt();
    let zf = z as f64;

    // truncating integer division matches the reference statistic's ranges
    let mut sum1 = 0.0;
    for k in ((-n_i / z) + 1) / 4..=((n_i / z) - 1) / 4 {
        let k = k as f64;
        sum1 +=
            normal_cdf((4.0 * k + 1.0) * zf / sqrt_n) - normal_cdf((4.0 * k - 1.0) * zf / sqrt_n);
    }
    let mut sum2 = 0.0;
    for k in ((-n_i / z) - 3) / 4..=((n_i / z) - 1) / 4 {
        let k = k as f64;
        sum2 +=
            normal_cdf((4.0 * k + 3.0) * zf / sqrt_n) - normal_cdf((4.0 * k + 1.0) * zf / sqrt_n);
    }
    1.0 - sum1 + sum2
}

/// Cumulative sums statistics in both scan directions: the maximum partial
/// sum excursion of the +-1 random walk, forward and over the reversed
/// sequence.
pub fn cumulative_sums_p_values(seq: &BitSequence) -> (f64, f64) {
    let n = seq.len();
    let excursion = |iter: &mut dyn Iterator<Item = &u8>| -> i64 {
        let mut sum = 0i64;
        let mut max_abs = 0i64;
        for &b in iter {
            sum += 2 * b as i64 - 1;
            max_abs = max_abs.max(sum.abs());
        }
        max_abs
    };
    let z_forward = excursion(&mut seq.bits().iter());
    let z_backward = excursion(&mut seq.bits().iter().rev());
    (
        cusum_p_from_max_excursion(n, z_forward).clamp(0.0, 1.0),
        cusum_p_from_max_excursion(n, z_backward).clamp(0.0, 1.0),
    )
}

pub fn cumulative_sums_test(seq: &BitSequence) -> Result<(f64, f64), RandomnessError> {
    check_floor("cumulative_sums", seq.len(), 100)?;
    Ok(cumulative_sums_p_values(seq))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BitSequence {
        s.parse().expect("bit literal")
    }

    // 100-bit example sequence used across the standard's walkthroughs
    const E100: &str = "1100100100001111110110101010001000100001011010001100\
                        001000110100110001001100011001100010100010111000";

    fn assert_p(got: f64, want: f64) {
        assert!(
            (got - want).abs() < 5e-7,
            "p-value {got} differs from reference {want}"
        );
    }

    #[test]
    fn frequency_worked_examples() {
        assert_p(frequency_p_value(&seq("1011010101")), 0.527089);
        assert_p(frequency_p_value(&seq(E100)), 0.109599);
    }

    #[test]
    fn frequency_extremes() {
        // perfectly balanced: S = 0, erfc(0) = 1
        let balanced = BitSequence::from_bits(&[0, 1].repeat(64)).unwrap();
        assert_eq!(frequency_p_value(&balanced), 1.0);
        // all ones at n = 1000: hopeless bias
        let ones = BitSequence::from_bits(&[1; 1000]).unwrap();
        assert!(frequency_p_value(&ones) < 1e-10);
    }

    #[test]
    fn frequency_floor() {
        assert!(matches!(
            frequency_test(&seq("1011010101")),
            Err(RandomnessError::SequenceTooShort {
                test: "frequency",
                ..
            })
        ));
        assert!(frequency_test(&seq(E100)).is_ok());
    }

    #[test]
    fn block_frequency_worked_examples() {
        assert_p(block_frequency_p_value(&seq("0110011010"), 3), 0.801252);
        assert_p(block_frequency_p_value(&seq(E100), 10), 0.706438);
    }

    #[test]
    fn block_frequency_extremes() {
        // every block exactly half ones
        let balanced = BitSequence::from_bits(&[1, 0, 0, 1].repeat(50)).unwrap();
        assert_eq!(block_frequency_p_value(&balanced, 4), 1.0);
        let ones = BitSequence::from_bits(&[1; 1000]).unwrap();
        assert!(block_frequency_p_value(&ones, 100) < 1e-10);
    }

    #[test]
    fn block_frequency_parameter_validation() {
        assert!(matches!(
            block_frequency_test(&seq(E100), 0),
            Err(RandomnessError::InvalidParameter { .. })
        ));
        assert!(matches!(
            block_frequency_test(&seq(E100), 101),
            Err(RandomnessError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn runs_worked_examples() {
        assert_p(runs_p_value(&seq("1001101011")), 0.147232);
        assert_p(runs_p_value(&seq(E100)), 0.500798);
    }

    #[test]
    fn runs_extremes() {
        // strictly alternating: far too many runs
        let alternating = BitSequence::from_bits(&[0, 1].repeat(500)).unwrap();
        assert!(runs_p_value(&alternating) < 1e-10);
        // all ones: monobit prerequisite fails, p set to 0
        let ones = BitSequence::from_bits(&[1; 1000]).unwrap();
        assert_eq!(runs_p_value(&ones), 0.0);
    }

    #[test]
    fn longest_run_worked_example() {
        let e128 = "11001100000101010110110001001100111000000000001001\
                    00110101010001000100111101011010000000110101111100\
                    1100111001101101100010110010";
        assert_p(longest_run_p_value(&seq(e128)), 0.180609);
    }

    #[test]
    fn longest_run_degenerate_structure() {
        // period-8 blocks each with the same longest run never match the
        // reference distribution
        let periodic = BitSequence::from_bits(&[1, 1, 1, 1, 0, 0, 0, 0].repeat(200)).unwrap();
        assert!(longest_run_p_value(&periodic) < 1e-10);
        assert!(matches!(
            longest_run_test(&seq("10101")),
            Err(RandomnessError::SequenceTooShort { .. })
        ));
    }

    #[test]
    fn dft_worked_values() {
        // frozen from an independent FFT-based evaluation of the statistic
        assert_p(dft_p_value(&seq("1001010011")), 0.468160);
        assert_p(dft_p_value(&seq(E100)), 0.646355);
    }

    #[test]
    fn dft_square_wave_fails() {
        let alternating = BitSequence::from_bits(&[0, 1].repeat(640)).unwrap();
        assert!(dft_p_value(&alternating) < 1e-10);
        assert!(matches!(
            dft_test(&seq(E100)),
            Err(RandomnessError::SequenceTooShort { .. })
        ));
    }

    #[test]
    fn serial_worked_example() {
        let (p1, p2) = serial_p_values(&seq("0010011101"), 3);
        assert_p(p1, 0.662627);
        assert_p(p2, 0.367879);
        let (p1, p2) = serial_p_values(&seq(E100), 2);
        assert_p(p1, 0.256661);
        assert_p(p2, 0.689157);
    }

    #[test]
    fn serial_constant_sequence_fails() {
        let ones = BitSequence::from_bits(&[1; 4096]).unwrap();
        let (p1, p2) = serial_p_values(&ones, 8);
        assert!(p1 < 1e-10);
        assert!(p2 < 1e-10);
    }

    #[test]
    fn serial_and_apen_parameter_validation() {
        // n = 1024: floor(log2) = 10, so serial demands m < 8
        let n1024 = BitSequence::from_bits(&[0, 1].repeat(512)).unwrap();
        assert!(matches!(
            serial_test(&n1024, 8),
            Err(RandomnessError::InvalidParameter { .. })
        ));
        assert!(serial_test(&n1024, 7).is_ok());
        // n = 2048: serial m < 9, approximate entropy m < 6
        let n2048 = BitSequence::from_bits(&[0, 1].repeat(1024)).unwrap();
        assert!(serial_test(&n2048, 8).is_ok());
        assert!(matches!(
            approximate_entropy_test(&n2048, 6),
            Err(RandomnessError::InvalidParameter { .. })
        ));
        assert!(approximate_entropy_test(&n2048, 5).is_ok());
    }

    #[test]
    fn approximate_entropy_worked_examples() {
        assert_p(approximate_entropy_p_value(&seq("0100110101"), 3), 0.261961);
        assert_p(approximate_entropy_p_value(&seq(E100), 2), 0.235301);
    }

    #[test]
    fn approximate_entropy_constant_fails() {
        let ones = BitSequence::from_bits(&[1; 4096]).unwrap();
        assert!(approximate_entropy_p_value(&ones, 5) < 1e-10);
    }

    #[test]
    fn cusum_worked_examples() {
        let (fwd, bwd) = cumulative_sums_p_values(&seq("1011010111"));
        assert_p(fwd, 0.411659);
        assert_p(bwd, 0.411659);
        let (fwd, bwd) = cumulative_sums_p_values(&seq(E100));
        assert_p(fwd, 0.219194);
        assert_p(bwd, 0.114866);
    }

    #[test]
    fn cusum_monotone_drift_fails() {
        let ones = BitSequence::from_bits(&[1; 1000]).unwrap();
        let (fwd, bwd) = cumulative_sums_p_values(&ones);
        assert!(fwd < 1e-10);
        assert!(bwd < 1e-10);
    }

    #[test]
    fn cusum_palindrome_directions_coincide() {
        let mut bits: Vec<u8> = vec![1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0];
        let mirror: Vec<u8> = bits.iter().rev().copied().collect();
        bits.extend(mirror);
        let palindrome = BitSequence::from_bits(&bits).unwrap();
        assert_eq!(palindrome.reversed(), palindrome);
        let (fwd, bwd) = cumulative_sums_p_values(&palindrome);
        assert_eq!(fwd, bwd);
    }

    #[test]
    fn p_values_stay_in_range() {
        let mixed = seq(E100);
        for p in [
            frequency_p_value(&mixed),
            block_frequency_p_value(&mixed, 10),
            runs_p_value(&mixed),
            dft_p_value(&mixed),
            approximate_entropy_p_value(&mixed, 2),
        ] {
            assert!((0.0..=1.0).contains(&p), "p-value {p} out of range");
        }
        let (s1, s2) = serial_p_values(&mixed, 2);
        let (c1, c2) = cumulative_sums_p_values(&mixed);
        for p in [s1, s2, c1, c2] {
            assert!((0.0..=1.0).contains(&p), "p-value {p} out of range");
        }
    }
}
