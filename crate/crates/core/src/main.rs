use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use morse_core::io::{parse_complex, parse_sequence, parse_values, write_sequence, IoError};
use morse_core::oracle::betti_mod2;
use morse_core::{
    audit_maximal, audit_minimal, betti_mod2_from_morse, critical_euler, critical_vector,
    induced_stack, max_constant, max_f, max_lower_star_with_jobs, min_f, validate_f,
    CosimplicialComplex, Error, MorseSequence, SimplexPool, Stack,
};

/// Morse sequences on simplicial complexes.
#[derive(Parser)]
#[command(name = "morse", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct StackArgs {
    /// Vertex values; the stack is their maximum over each simplex.
    #[arg(long, value_name = "FILE", conflicts_with = "weights")]
    values: Option<PathBuf>,
    /// Use the weights given in the complex file.
    #[arg(long)]
    weights: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Audit {
    Max,
    Min,
}

#[derive(Subcommand)]
enum Command {
    /// Maximal F-sequence (constant stack if none is given).
    Max {
        complex: PathBuf,
        #[command(flatten)]
        stack: StackArgs,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Minimal F-sequence (constant stack if none is given).
    Min {
        complex: PathBuf,
        #[command(flatten)]
        stack: StackArgs,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Maximal sequence from lower stars of injective vertex values.
    Lowerstar {
        complex: PathBuf,
        #[arg(long, value_name = "FILE")]
        values: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check that a sequence builds the complex, optionally auditing it.
    Validate {
        complex: PathBuf,
        sequence: PathBuf,
        #[command(flatten)]
        stack: StackArgs,
        #[arg(long, value_enum)]
        audit: Option<Audit>,
    },
    /// Mod-2 Betti numbers.
    Betti {
        complex: PathBuf,
        /// Read the Morse complex of this sequence instead of computing one.
        #[arg(long, value_name = "FILE", conflicts_with = "oracle")]
        from_sequence: Option<PathBuf>,
        /// Reduce the full boundary matrices instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Simplex counts, critical vector of the maximal sequence and Euler
    /// characteristic.
    Stats {
        complex: PathBuf,
        #[command(flatten)]
        stack: StackArgs,
    },
}

/// A failure with its exit status: 1 invalid sequence, 2 bad input,
/// 3 stack violation.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        let code = if e.is_stack_violation() { 3 } else { 2 };
        Failure::new(code, e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        IoError::from(e).into()
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new(2, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_context(path: &Path, e: IoError) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

/// Loads a complex and the stack selected by `args`.
fn load(path: &Path, args: &StackArgs) -> Result<(SimplexPool, Stack), Failure> {
    let file = parse_complex(&read(path)?).map_err(|e| with_context(path, e))?;
    let k = file.complex;
    let stack = if let Some(values) = &args.values {
        let f = parse_values(&read(values)?).map_err(|e| with_context(values, e))?;
        induced_stack(&f, &k).map_err(|e| with_context(values, e.into()))?
    } else if args.weights {
        file.weights.ok_or_else(|| {
            Failure::new(
                2,
                format!(
                    "{}: --weights needs a weighted complex file",
                    path.display()
                ),
            )
        })?
    } else {
        Stack::constant(&k, 1)
    };
    Ok((k, stack))
}

fn cosimplicial(k: SimplexPool) -> Result<CosimplicialComplex, Failure> {
    Ok(CosimplicialComplex::new(k)?)
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn schedule(
    path: &Path,
    args: &StackArgs,
    out: Option<&Path>,
    algorithm: fn(&CosimplicialComplex, &Stack) -> Result<MorseSequence, Error>,
) -> Result<(), Failure> {
    let (k, f) = load(path, args)?;
    let seq = algorithm(&cosimplicial(k)?, &f)?;
    emit(&write_sequence(&seq), out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Max {
            complex,
            stack,
            out,
        } => schedule(&complex, &stack, out.as_deref(), max_f),
        Command::Min {
            complex,
            stack,
            out,
        } => schedule(&complex, &stack, out.as_deref(), min_f),
        Command::Lowerstar {
            complex,
            values,
            jobs,
            out,
        } => {
            let k = parse_complex(&read(&complex)?)
                .map_err(|e| with_context(&complex, e))?
                .complex;
            let f = parse_values(&read(&values)?).map_err(|e| with_context(&values, e))?;
            let seq = max_lower_star_with_jobs(&k, &f, jobs)
                .map_err(|e| with_context(&values, e.into()))?;
            emit(&write_sequence(&seq), out.as_deref())
        }
        Command::Validate {
            complex,
            sequence,
            stack,
            audit,
        } => {
            let (k, f) = load(&complex, &stack)?;
            let seq = parse_sequence(&read(&sequence)?).map_err(|e| with_context(&sequence, e))?;
            if let Err(v) = validate_f(&seq, &k, f.on(&k)) {
                return Err(Failure::new(1, format!("invalid: {v}")));
            }
            match audit {
                Some(Audit::Max) if !audit_maximal(&seq, &k, f.on(&k)) => Err(Failure::new(
                    1,
                    "invalid: a critical simplex is added while an expansion is available",
                )),
                Some(Audit::Min) if !audit_minimal(&seq, &k, f.on(&k)) => Err(Failure::new(
                    1,
                    "invalid: a critical simplex is added while a collapse is available",
                )),
                _ => {
                    println!("valid");
                    Ok(())
                }
            }
        }
        Command::Betti {
            complex,
            from_sequence,
            oracle,
        } => {
            let k = parse_complex(&read(&complex)?)
                .map_err(|e| with_context(&complex, e))?
                .complex;
            let betti = if oracle {
                betti_mod2(&k)?
            } else {
                let seq = match &from_sequence {
                    Some(p) => {
                        let seq = parse_sequence(&read(p)?).map_err(|e| with_context(p, e))?;
                        if seq.target() != k {
                            return Err(Failure::new(
                                1,
                                format!("{}: sequence does not build the complex", p.display()),
                            ));
                        }
                        seq
                    }
                    None => max_constant(&cosimplicial(k)?),
                };
                betti_mod2_from_morse(&seq)?
            };
            println!("{}", join(&betti));
            Ok(())
        }
        Command::Stats { complex, stack } => {
            let (k, f) = load(&complex, &stack)?;
            let counts = k.f_vector();
            let euler = k.euler_characteristic();
            let seq = max_f(&cosimplicial(k)?, &f)?;
            println!("simplexes: {}", join(&counts));
            println!("critical: {}", join(&critical_vector(&seq)));
            println!("euler: {euler}");
            debug_assert_eq!(euler, critical_euler(&seq));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("morse: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
