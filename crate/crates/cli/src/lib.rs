//! Command implementations behind the `rsinsdel` binary.
//!
//! Every command renders its output into a `String` so the same code paths
//! serve the binary and in-process callers. Witness index vectors are
//! printed 1-based.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsinsdel::channel::{apply_edits, random_edit_script};
use rsinsdel::code::serial::{from_record, to_record};
use rsinsdel::code::{
    construct_code, field_size_bounds, smallest_base_order, ConstructionKind, DeltaOrder, RsCode,
};
use rsinsdel::decode::{decode_k2_with, DecodeResult};
use rsinsdel::field::{BaseField, Field, TowerElement, TowerField};
use rsinsdel::verify::{enumerate_violations_with, verify_code_with, VerifyMode, VerifyOptions};
use rsinsdel::Execution;

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status for bad flags, unreadable input or invalid parameters.
pub const EXIT_USAGE: i32 = 1;
/// Exit status when a code fails verification or a simulated transmission
/// is not recovered.
pub const EXIT_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rsinsdel",
    version,
    about = "Reed-Solomon codes over GF(q^3) correcting n-3 insertions and deletions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and print its record.
    Construct(CodeArgs),
    /// Check the determinant criterion for a constructed or loaded code.
    Verify(VerifyArgs),
    /// Encode a random message, corrupt it and decode it.
    Simulate(SimulateArgs),
    /// Field-size bounds for a given length.
    Bounds(BoundsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// δ + δ²γ, odd characteristic, n ≤ q - 1
    Square,
    /// δ + δ⁻¹γ, n ≤ (q - 1)/2, or q - 1 in characteristic 2
    Inverse,
}

impl From<Kind> for ConstructionKind {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Square => ConstructionKind::SquareGamma,
            Kind::Inverse => ConstructionKind::InverseGamma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    /// `key=value` lines
    Kv,
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    /// Base field characteristic
    #[arg(long)]
    pub p: Option<u64>,
    /// Base field extension degree
    #[arg(long, default_value_t = 1)]
    pub e: u32,
    /// Code length
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Kind::Square)]
    pub kind: Kind,
    /// Lay the δ-set out in a seeded random order instead of canonical order
    #[arg(long, value_name = "SEED")]
    pub shuffle: Option<u64>,
    /// Load the code from a record file instead of constructing it
    #[arg(long, conflicts_with_all = ["p", "n", "shuffle"])]
    pub file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Report up to this many violating pairs
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub witness_limit: u64,
    /// Append wall-clock time (makes output non-reproducible)
    #[arg(long)]
    pub timing: bool,
    /// Run on the current thread only
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of deletions
    #[arg(long, default_value_t = 0)]
    pub t_del: usize,
    /// Number of insertions
    #[arg(long, default_value_t = 0)]
    pub t_ins: usize,
    /// Allow more than n - 3 edits
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Result of one command: text for stdout and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub status: i32,
}

/// A failure reported on stderr with [`EXIT_USAGE`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<rsinsdel::Error> for UsageError {
    fn from(e: rsinsdel::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Outcome, UsageError>;

fn ok(stdout: String) -> CmdResult {
    Ok(Outcome {
        stdout,
        status: EXIT_OK,
    })
}

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Bounds(args) => cmd_bounds(args.n, args.format),
    }
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

/// Builds the code described by the flags, or loads it from `--file`.
pub fn load_code(args: &CodeArgs) -> Result<RsCode, UsageError> {
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
        return from_record(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())));
    }
    let (Some(p), Some(n)) = (args.p, args.n) else {
        return Err(UsageError(
            "either --file or both --p and --n are required".into(),
        ));
    };
    let base = BaseField::new(p, args.e, None)?;
    let order = args
        .shuffle
        .map_or(DeltaOrder::Canonical, DeltaOrder::Shuffled);
    Ok(construct_code(&base, n, args.kind.into(), &order)?)
}

fn join(values: impl IntoIterator<Item = u64>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn encode_all(tower: &TowerField, word: &[TowerElement]) -> String {
    join(word.iter().map(|&s| tower.encode(s)))
}

fn describe(code: &RsCode) -> String {
    let t = code.tower();
    let b = t.base();
    let field = if b.e() == 1 {
        format!("GF({})", b.p())
    } else {
        format!(
            "GF({}^{}) = GF({})[x]/({})",
            b.p(),
            b.e(),
            b.p(),
            b.modulus_string()
        )
    };
    let kind = code
        .provenance()
        .map_or("explicit evaluation points".to_string(), |p| {
            format!("{} construction", p.kind)
        });
    format!(
        "[{},{}] code over GF({}), {kind}\nbase field {field}, gamma root of {}\n",
        code.n(),
        code.k(),
        t.order(),
        t.min_poly_string()
    )
}

pub fn cmd_construct(args: &CodeArgs) -> CmdResult {
    let code = load_code(args)?;
    let record = to_record(&code);
    match args.format {
        Format::Kv => ok(record),
        Format::Text => {
            let header: String = describe(&code)
                .lines()
                .map(|l| format!("# {l}\n"))
                .collect();
            ok(header + &record)
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let code = load_code(&args.code)?;
    let exec = execution(args.sequential);
    let start = Instant::now();
    let report = verify_code_with(
        &code,
        VerifyOptions {
            mode: VerifyMode::FirstWitness,
            execution: exec,
        },
    );
    let limit = usize::try_from(args.witness_limit).unwrap_or(usize::MAX);
    let violations = if report.passed || limit == 1 {
        report.violation.iter().cloned().collect()
    } else {
        enumerate_violations_with(&code, limit, exec)?
    };
    let elapsed = start.elapsed();
    let t = code.tower();
    let mut out = String::new();
    match args.code.format {
        Format::Kv => {
            out.push_str(&report.to_record(t, false));
            for (r, v) in violations.iter().enumerate().skip(1) {
                let _ = writeln!(
                    out,
                    "witness_{}={} det={}",
                    r + 1,
                    v.pair,
                    t.encode(v.determinant)
                );
            }
            if args.timing {
                let _ = writeln!(out, "elapsed_ms={}", elapsed.as_millis());
            }
        }
        Format::Text => {
            out.push_str(&describe(&code));
            if report.passed {
                let _ = writeln!(
                    out,
                    "PASS: all {} qualifying index pairs have a nonzero determinant",
                    report.pairs_checked
                );
            } else {
                let _ = writeln!(
                    out,
                    "FAIL: vanishing determinant after {} qualifying pairs (indices 1-based)",
                    report.pairs_checked
                );
                for v in &violations {
                    let _ = writeln!(out, "  {} det={}", v.pair, t.encode(v.determinant));
                }
            }
            if args.timing {
                let _ = writeln!(out, "elapsed: {:.3} s", elapsed.as_secs_f64());
            }
        }
    }
    Ok(Outcome {
        stdout: out,
        status: if report.passed { EXIT_OK } else { EXIT_FAILED },
    })
}

pub fn cmd_simulate(args: &SimulateArgs) -> CmdResult {
    let code = load_code(&args.code)?;
    let n = code.n();
    let radius = code.radius()?;
    let t = args.t_del + args.t_ins;
    if t > radius && !args.force {
        return Err(UsageError(format!(
            "{t} edits exceed the guaranteed radius n - 3 = {radius}; pass --force to run anyway"
        )));
    }
    let tower = code.tower();
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let msg = code.message_from_index(rng.random_range(0..code.message_count()));
    let script_seed: u64 = rng.random();
    let codeword = code.encode(&msg)?.into_symbols();
    let script = random_edit_script(n, args.t_del, args.t_ins, script_seed, tower)?;
    let received = apply_edits(&codeword, &script)?;
    let result = decode_k2_with(&code, &received, execution(args.sequential))?;
    let (label, decoded) = match &result {
        DecodeResult::Decoded(f) => ("decoded", encode_all(tower, f.coeffs())),
        DecodeResult::TooManyErrors => ("too_many_errors", String::new()),
        DecodeResult::AmbiguityDetected(list) => (
            "ambiguous",
            list.iter()
                .map(|f| encode_all(tower, f.coeffs()))
                .collect::<Vec<_>>()
                .join(";"),
        ),
    };
    let success = result == DecodeResult::Decoded(msg.clone());
    let fields = [
        ("seed", args.seed.to_string()),
        ("message", encode_all(tower, msg.coeffs())),
        ("codeword", encode_all(tower, &codeword)),
        ("script", script.to_text(tower)),
        ("received", encode_all(tower, &received)),
        ("result", label.to_string()),
        ("decoded", decoded),
        ("success", success.to_string()),
    ];
    let mut out = String::new();
    for (key, value) in fields {
        match args.code.format {
            Format::Kv => {
                let _ = writeln!(out, "{key}={value}");
            }
            Format::Text => {
                let _ = writeln!(out, "{key:<9} {value}");
            }
        }
    }
    Ok(Outcome {
        stdout: out,
        status: if success { EXIT_OK } else { EXIT_FAILED },
    })
}

pub fn cmd_bounds(n: u64, format: Format) -> CmdResult {
    let b = field_size_bounds(n)?;
    let smallest = smallest_base_order(n);
    let ratio = b.ratio();
    let out = match format {
        Format::Kv => format!(
            "n={n}\nupper={}\nlower={}\nratio={ratio:.4}\nsmallest_base_order={smallest}\n",
            b.upper, b.lower
        ),
        Format::Text => format!(
            "n = {n}\nfield size reached, (n+1)^3:   {}\nlower bound, C(n,3) - 1:       {}\nratio:                         {ratio:.4}\nsmallest usable base field:    GF({smallest}), tower GF({})\n",
            b.upper,
            b.lower,
            (smallest as u128).pow(3)
        ),
    };
    ok(out)
}
