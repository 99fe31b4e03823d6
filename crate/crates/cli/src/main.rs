//! `ringmat`: characteristic polynomials, adjugates and identity checks over
//! commutative rings, driven by JSON.
//!
//! Exit status: 0 on success, 1 if an identity check failed, 2 for
//! unreadable or invalid input, 3 for shape or ring errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use ringmat::json::{decode_matrix_over, encode_charpoly, encode_matrix};
use ringmat::{
    adjugate_via_charpoly, charpoly_direct, charpoly_newton, run_suite, verify_matrix, DynMatrix,
    Error, Identity, Ring, RingDescriptor, SuiteConfig, Summary, VerificationReport, Verifier,
};

#[derive(Parser)]
#[command(name = "ringmat", version, about = "Exact linear algebra over commutative rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial, its coefficients c_j and the matrices D_k.
    Charpoly {
        #[command(flatten)]
        input: Input,
        /// Use the trace recursion (only on Q-algebras; falls back otherwise).
        #[arg(long)]
        newton: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Adjugate by cofactors.
    Adjugate {
        #[command(flatten)]
        input: Input,
        /// Compute the adjugate as a polynomial in the matrix instead.
        #[arg(long)]
        via_charpoly: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check identities on a given matrix.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Comma-separated identity or group names, or `all`.
        #[arg(long)]
        suite: String,
        /// Seed for auxiliary inputs (second matrix, vectors, scalars).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        knobs: Knobs,
        #[command(flatten)]
        output: Output,
    },
    /// Check identities on random inputs.
    Fuzz {
        /// Ring as JSON or shorthand: int, rat, mod:<m>, poly:<base>.
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        /// Largest matrix size.
        #[arg(long)]
        size: usize,
        /// Degree bound for random polynomial entries.
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[command(flatten)]
        knobs: Knobs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Input {
    /// Matrix JSON: a file path, `-` for stdin, or the JSON text itself.
    #[arg(long)]
    matrix: String,
    /// Ring as JSON or shorthand; defaults to the matrix's own `ring` field.
    #[arg(long)]
    ring: Option<String>,
}

#[derive(Args)]
struct Output {
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Knobs {
    /// Largest power checked by nilpotency-converse (default 2n+1).
    #[arg(long)]
    imax: Option<usize>,
    /// Nilpotency order for almkvist: A^(k+1) = 0.
    #[arg(long)]
    k: Option<usize>,
    /// Prime for frobenius (default: the ring characteristic, if prime).
    #[arg(long)]
    p: Option<u64>,
    /// Power for trace-multinomial.
    #[arg(long)]
    m: Option<usize>,
    /// Test hook: perturb the named identity so that it fails.
    #[arg(long, hide = true)]
    corrupt: Option<String>,
}

impl Knobs {
    fn apply(&self, cfg: &mut SuiteConfig) -> Result<(), Failure> {
        cfg.imax = self.imax;
        cfg.k = self.k;
        cfg.p = self.p;
        cfg.m = self.m;
        let corrupt = self.corrupt.as_deref().map(str::parse::<Identity>).transpose()?;
        cfg.verifier = Verifier::corrupting(corrupt);
        Ok(())
    }
}

enum Failure {
    /// Exit 2.
    Input(String),
    /// Exit 3.
    Shape(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidArgument(_) | Error::TooLarge(_) => {
                Failure::Input(e.to_string())
            }
            Error::NotSquare { .. }
            | Error::DimensionMismatch(_)
            | Error::RingMismatch(_)
            | Error::IndexOutOfRange { .. }
            | Error::Unsupported(_) => Failure::Shape(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Shape(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

/// `Ok(false)` when some identity check failed.
fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Charpoly {
            input,
            newton,
            output,
        } => {
            let a = read_matrix(&input)?;
            let data = if newton && a.ring().is_q_algebra() {
                charpoly_newton(&a)?
            } else {
                if newton {
                    eprintln!("note: {} is not a Q-algebra; using the determinant route", a.ring());
                }
                charpoly_direct(&a)?
            };
            emit(&output, &encode_charpoly(a.ring(), &data))?;
            Ok(true)
        }
        Command::Adjugate {
            input,
            via_charpoly,
            output,
        } => {
            let a = read_matrix(&input)?;
            let adj = if via_charpoly {
                adjugate_via_charpoly(&a)?
            } else {
                a.adjugate()?
            };
            emit(&output, &encode_matrix(&adj))?;
            Ok(true)
        }
        Command::Verify {
            input,
            suite,
            seed,
            knobs,
            output,
        } => {
            let a = read_matrix(&input)?;
            let ids = Identity::parse_suite(&suite)?;
            if ids.is_empty() {
                return Err(Failure::Input("empty suite".into()));
            }
            let mut cfg = SuiteConfig {
                seed,
                ..SuiteConfig::default()
            };
            knobs.apply(&mut cfg)?;
            report(&output, &verify_matrix(&a, &ids, &cfg)?)
        }
        Command::Fuzz {
            ring,
            suite,
            seed,
            count,
            size,
            degree,
            knobs,
            output,
        } => {
            let ring = RingDescriptor::parse(&ring)?;
            let ids = Identity::parse_suite(&suite)?;
            let mut cfg = SuiteConfig {
                seed,
                count,
                size,
                poly_degree: degree,
                ..SuiteConfig::default()
            };
            knobs.apply(&mut cfg)?;
            report(&output, &run_suite(&ring, &ids, &cfg)?)
        }
    }
}

fn read_matrix(input: &Input) -> Result<DynMatrix, Failure> {
    let text = if input.matrix == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        buf
    } else if input.matrix.trim_start().starts_with('{') {
        input.matrix.clone()
    } else {
        fs::read_to_string(&input.matrix)
            .map_err(|e| Failure::Input(format!("{}: {e}", input.matrix)))?
    };
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("parse error in `matrix`: {e}")))?;
    let embedded = v.get("ring").map(RingDescriptor::from_json).transpose()?;
    let flag = input.ring.as_deref().map(RingDescriptor::parse).transpose()?;
    let ring = match (flag, embedded) {
        (Some(f), Some(e)) if f != e => {
            return Err(Failure::Shape(format!(
                "ring mismatch: --ring is {f} but the matrix says {e}"
            )))
        }
        (Some(r), _) | (None, Some(r)) => r,
        (None, None) => {
            return Err(Failure::Input(
                "no ring: pass --ring or add a `ring` field to the matrix".into(),
            ))
        }
    };
    Ok(decode_matrix_over(&ring, &v)?)
}

fn emit(output: &Output, value: &Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("stdout: {e}"))),
    }
}

fn report(output: &Output, reports: &[VerificationReport]) -> Result<bool, Failure> {
    let json = Value::Array(reports.iter().map(VerificationReport::to_json).collect());
    emit(output, &json)?;
    let summary = Summary::of(reports);
    eprintln!("{summary}");
    Ok(summary.failed == 0)
}
