//! Command-line front end for the cipher laboratory: ECB file
//! encryption/decryption with either row-permutation strategy, key-value
//! inspection, and the correlation and randomness experiment drivers.

mod manifest;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;

use dnaes::cipher::{self, CipherConfig, CipherKey, Direction};
use dnaes::dna::ROW_KEY_OFFSETS;
use dnaes::randomness::{cipher_sequences, run_suite, write_suite_csv, RandomnessConfig};
use dnaes::stats::{transform_only_experiment, whole_cipher_experiment, Band, ExperimentReport};

use manifest::RunManifest;

#[derive(Parser)]
#[command(
    name = "dnaes",
    version,
    about = "Block cipher laboratory: AES rounds with a key-dependent DNA-style row transposition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt a file in ECB mode (length must be a multiple of 16 bytes)
    Encrypt(CryptArgs),
    /// Decrypt a file in ECB mode
    Decrypt(CryptArgs),
    /// Print the per-round row-transposition key values for a key
    Keyvals(KeyvalsArgs),
    /// Run a correlation experiment and write its CSV report
    Corr(CorrArgs),
    /// Run the randomness suite over ciphertext sequences and write its CSV summary
    Nist(NistArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    /// Standard cyclic ShiftRows
    Original,
    /// Key-dependent DNA-style row transposition
    Kdd,
}

impl StrategyArg {
    fn to_strategy(self) -> cipher::Strategy {
        match self {
            StrategyArg::Original => cipher::Strategy::Original,
            StrategyArg::Kdd => cipher::Strategy::KeyDependentDna,
        }
    }

    fn label(self) -> &'static str {
        match self {
            StrategyArg::Original => "original",
            StrategyArg::Kdd => "kdd",
        }
    }
}

#[derive(Args)]
struct KeyArgs {
    /// Key as 32, 48, or 64 hex digits
    #[arg(
        long,
        value_name = "HEX",
        conflicts_with = "key_file",
        required_unless_present = "key_file"
    )]
    key: Option<String>,
    /// File holding the key: hex text, or raw 16/24/32 bytes
    #[arg(long, value_name = "PATH")]
    key_file: Option<PathBuf>,
}

impl KeyArgs {
    fn load(&self) -> Result<(CipherKey, String)> {
        if let Some(hex_str) = &self.key {
            let key = CipherKey::from_hex(hex_str).context("invalid --key")?;
            return Ok((key, "hex".to_string()));
        }
        let path = self
            .key_file
            .as_ref()
            .expect("clap enforces one key source");
        let raw = fs::read(path).with_context(|| format!("reading key file {}", path.display()))?;
        let key = match std::str::from_utf8(&raw) {
            Ok(text) if CipherKey::from_hex(text).is_ok() => {
                CipherKey::from_hex(text).expect("just validated")
            }
            _ => CipherKey::new(&raw).with_context(|| {
                format!(
                    "key file {} is neither hex text nor a raw key",
                    path.display()
                )
            })?,
        };
        Ok((key, format!("file:{}", path.display())))
    }
}

#[derive(Args)]
struct CryptArgs {
    /// Input file
    input: PathBuf,
    /// Output file
    output: PathBuf,
    #[command(flatten)]
    key: KeyArgs,
    /// Row-permutation strategy
    #[arg(long, value_enum, default_value = "original")]
    strategy: StrategyArg,
    /// Reduced round count (defaults to the full count for the key size)
    #[arg(long, value_name = "N")]
    rounds: Option<usize>,
    /// Treat row key value 1 as the identity instead of complement-only
    #[arg(long)]
    case1_identity: bool,
}

#[derive(Args)]
struct KeyvalsArgs {
    #[command(flatten)]
    key: KeyArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorrMode {
    /// Correlate states across the row transposition alone
    Transform,
    /// Correlate plaintext against ciphertext across the whole cipher
    Cipher,
}

#[derive(Args)]
struct CorrArgs {
    /// Which experiment to run
    #[arg(long, value_enum)]
    mode: CorrMode,
    /// Trials per round setting
    #[arg(long, default_value_t = 128)]
    trials: usize,
    /// Round counts for cipher mode, comma separated
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    rounds: Vec<usize>,
    /// PRNG seed; drawn from OS entropy when absent
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path
    #[arg(long, value_name = "CSV")]
    out: PathBuf,
}

#[derive(Args)]
struct NistArgs {
    /// Number of sequences
    #[arg(long, default_value_t = 128)]
    sequences: usize,
    /// Bits per sequence (multiple of 128)
    #[arg(long, default_value_t = 131_072)]
    bits: usize,
    /// Significance level
    #[arg(long, default_value_t = 0.01)]
    alpha: f64,
    /// Reduced round count for the cipher (defaults to full)
    #[arg(long, value_name = "N")]
    rounds: Option<usize>,
    /// PRNG seed; drawn from OS entropy when absent
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path
    #[arg(long, value_name = "CSV")]
    out: PathBuf,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Encrypt(args) => crypt(args, Direction::Encrypt),
        Command::Decrypt(args) => crypt(args, Direction::Decrypt),
        Command::Keyvals(args) => keyvals(args),
        Command::Corr(args) => corr(args),
        Command::Nist(args) => nist(args),
    }
}

fn rounds_label(rounds: Option<usize>) -> String {
    rounds.map_or_else(|| "full".to_string(), |r| r.to_string())
}

fn crypt(args: CryptArgs, direction: Direction) -> Result<()> {
    let (key, key_source) = args.key.load()?;
    let config = CipherConfig {
        strategy: args.strategy.to_strategy(),
        rounds: args.rounds,
        case1_identity: args.case1_identity,
    };
    let data =
        fs::read(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let processed = cipher::ecb_process(&data, &key, &config, direction)
        .with_context(|| format!("processing {}", args.input.display()))?;
    fs::write(&args.output, &processed)
        .with_context(|| format!("writing {}", args.output.display()))?;

    let verb = match direction {
        Direction::Encrypt => "encrypted",
        Direction::Decrypt => "decrypted",
    };
    let blocks = processed.len() / 16;
    println!(
        "{verb} {blocks} blocks ({} bytes) -> {}",
        processed.len(),
        args.output.display()
    );

    let mut manifest = RunManifest::new(match direction {
        Direction::Encrypt => "encrypt",
        Direction::Decrypt => "decrypt",
    });
    manifest.push("strategy", args.strategy.label());
    manifest.push("key_source", key_source);
    manifest.push("rounds", rounds_label(args.rounds));
    manifest.push("case1_identity", args.case1_identity);
    manifest.push("seed", "none");
    manifest.push("input", args.input.display());
    manifest.push("output", args.output.display());
    manifest.write_alongside(&args.output)?;
    Ok(())
}

fn keyvals(args: KeyvalsArgs) -> Result<()> {
    let (key, _) = args.key.load()?;
    let schedule = cipher::expand_key(&key);
    println!("round  key bytes [0,4,8,12]  n1 n2 n3 n4");
    for (round, round_key) in schedule.iter().enumerate() {
        let selected: Vec<String> = ROW_KEY_OFFSETS
            .iter()
            .map(|&off| format!("{:02x}", round_key[off]))
            .collect();
        let values = dnaes::dna::RowKeys::from_round_key(round_key).values();
        println!(
            "{round:>5}  {:<21} {:>2} {:>2} {:>2} {:>2}",
            selected.join(" "),
            values[0],
            values[1],
            values[2],
            values[3],
        );
    }
    Ok(())
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| rand::rng().random())
}

fn census_summary(report: &ExperimentReport) -> String {
    let mut parts: Vec<String> = Band::ALL
        .iter()
        .filter(|&&band| report.census.count(band) > 0)
        .map(|&band| format!("{}={}", band.label(), report.census.count(band)))
        .collect();
    if report.census.degenerate() > 0 {
        parts.push(format!("degenerate={}", report.census.degenerate()));
    }
    parts.join(", ")
}

fn corr(args: CorrArgs) -> Result<()> {
    if args.trials == 0 {
        bail!("--trials must be at least 1");
    }
    let seed = resolve_seed(args.seed);
    let report = match args.mode {
        CorrMode::Transform => transform_only_experiment(args.trials, seed),
        CorrMode::Cipher => whole_cipher_experiment(args.trials, &args.rounds, seed)?,
    };

    let mut csv = Vec::new();
    report.write_csv(&mut csv)?;
    fs::write(&args.out, &csv).with_context(|| format!("writing {}", args.out.display()))?;

    println!(
        "{} records -> {} (seed {seed})",
        report.records.len(),
        args.out.display()
    );
    println!("census: {}", census_summary(&report));
    if report.census.perfect() > 0 {
        println!(
            "note: {} record(s) hit exactly +-1 and are flagged perfect",
            report.census.perfect()
        );
    }

    let mode_label = match args.mode {
        CorrMode::Transform => "transform",
        CorrMode::Cipher => "cipher",
    };
    let mut manifest = RunManifest::new("corr");
    manifest.push("mode", mode_label);
    manifest.push("trials", args.trials);
    if args.mode == CorrMode::Cipher {
        let rounds: Vec<String> = args.rounds.iter().map(|r| r.to_string()).collect();
        manifest.push("rounds", rounds.join(","));
    }
    manifest.push("strategy", "kdd");
    manifest.push("key_source", "seeded-prng");
    manifest.push("seed", seed);
    manifest.push("output", args.out.display());
    manifest.write_alongside(&args.out)?;
    Ok(())
}

fn nist(args: NistArgs) -> Result<()> {
    let suite_config = RandomnessConfig::new(args.alpha, args.sequences, args.bits)?;
    let cipher_config = CipherConfig {
        strategy: cipher::Strategy::KeyDependentDna,
        rounds: args.rounds,
        case1_identity: false,
    };
    let seed = resolve_seed(args.seed);

    let sequences = cipher_sequences(args.sequences, args.bits, &cipher_config, seed)?;
    let outcomes = run_suite(&sequences, &suite_config)?;

    let mut csv = Vec::new();
    write_suite_csv(&outcomes, &mut csv)?;
    fs::write(&args.out, &csv).with_context(|| format!("writing {}", args.out.display()))?;

    let passing = outcomes.iter().filter(|o| o.suite_pass).count();
    println!(
        "{} sequences x {} bits, alpha {}, threshold {:.6} (seed {seed})",
        args.sequences, args.bits, args.alpha, outcomes[0].threshold
    );
    for o in &outcomes {
        println!(
            "  {:<22} stream {}  proportion {:.6}  {}",
            o.test_name,
            o.stream_index,
            o.proportion_passed,
            if o.suite_pass { "pass" } else { "FAIL" }
        );
    }
    // the verdict is analysis output, not an error condition
    println!(
        "suite verdict: {} ({passing}/{} streams above threshold) -> {}",
        if passing == outcomes.len() {
            "PASS"
        } else {
            "FAIL"
        },
        outcomes.len(),
        args.out.display()
    );

    let mut manifest = RunManifest::new("nist");
    manifest.push("strategy", "kdd");
    manifest.push("key_source", "seeded-prng");
    manifest.push("sequences", args.sequences);
    manifest.push("bits", args.bits);
    manifest.push("alpha", args.alpha);
    manifest.push("rounds", rounds_label(args.rounds));
    manifest.push("seed", seed);
    manifest.push("output", args.out.display());
    manifest.write_alongside(&args.out)?;
    Ok(())
}
