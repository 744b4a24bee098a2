use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dualfvs::{
    decode_digraph, decode_instance, decode_solution, encode_family, encode_instance, encode_reduced,
    encode_solution, generate_instance, verify_solution, GeneratorConfig, VerifyMode,
};
use dualfvs_core::{dfvs, mfvs, oracle, EdgeColoredGraph, ReducedInstance, VertexSet};

#[derive(Parser)]
#[command(name = "dualfvs", version, about = "Feedback vertex sets hitting every monochromatic cycle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find one solution of size at most k.
    Solve {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = SolveMode::Dfvs)]
        mode: SolveMode,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every inclusion-minimal solution of size at most k.
    Enum {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        algo: EnumAlgo,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a seeded random instance.
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply the reduction rules against an undeletable reference set.
    Reduce {
        #[arg(long, value_delimiter = ',')]
        reference: Vec<u32>,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a vertex set against an instance.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        solution: String,
        #[arg(long, value_enum, default_value_t = CheckMode::Valid)]
        mode: CheckMode,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Turn a digraph into an alternating blue/red instance.
    Convert {
        #[arg(long = "from-digraph")]
        from_digraph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimal solutions by exhaustive search (small instances only).
    Oracle {
        #[arg(long)]
        k: usize,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMode {
    Dfvs,
    Mfvs,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumAlgo {
    Cover,
    Compression,
    Mfvs,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    Valid,
    Minimal,
}

enum Failure {
    /// Exit 1: no solution, or verification failed.
    Negative(String),
    /// Exit 2: unreadable or invalid input.
    Input(String),
}

impl From<dualfvs::FormatError> for Failure {
    fn from(e: dualfvs::FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<dualfvs_core::Error> for Failure {
    fn from(e: dualfvs_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_instance(path: &PathBuf) -> Result<EdgeColoredGraph, Failure> {
    decode_instance(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_family(out: &Option<PathBuf>, family: &dualfvs_core::Family, k: usize) -> Result<(), Failure> {
    emit(out, &encode_family(family))?;
    if family.is_empty() {
        return Err(Failure::Negative(format!("no solution of size at most {k}")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { k, mode, file, out } => {
            let g = read_instance(&file)?;
            let found = match mode {
                SolveMode::Dfvs => dfvs::solve_dfvs(&g, k)?,
                SolveMode::Mfvs => mfvs::solve_mfvs(&g, k)?,
            };
            match found {
                Some(s) => emit(&out, &format!("{}\n", encode_solution(&s))),
                None => Err(Failure::Negative(format!("no solution of size at most {k}"))),
            }
        }
        Command::Enum { k, algo, file, out } => {
            let g = read_instance(&file)?;
            let family = match algo {
                EnumAlgo::Cover => dfvs::enumerate_dfvs_algo_a(&g, k)?,
                EnumAlgo::Compression => dfvs::enumerate_minimal_dfvs(&g, k)?,
                EnumAlgo::Mfvs => mfvs::enumerate_minimal_mfvs(&g, k)?,
            };
            emit_family(&out, &family, k)
        }
        Command::Gen { n, h, p, seed, simple, out } => {
            if h == 0 {
                return Err(Failure::Input("--h must be at least 1".into()));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::Input("--p must lie in [0, 1]".into()));
            }
            let g = generate_instance(&GeneratorConfig { n, h, p, seed, simple });
            emit(&out, &encode_instance(&g)?)
        }
        Command::Reduce { reference, file, out } => {
            let g = read_instance(&file)?;
            let reference: VertexSet = reference.into_iter().collect();
            match ReducedInstance::new(g, reference)?.reduce() {
                Some(r) => emit(&out, &encode_reduced(&r)?),
                None => Err(Failure::Negative("infeasible: a cycle avoids every deletable vertex".into())),
            }
        }
        Command::Verify { solution, mode, file, out } => {
            let g = read_instance(&file)?;
            let s = decode_solution(&solution)?;
            let mode = match mode {
                CheckMode::Valid => VerifyMode::Valid,
                CheckMode::Minimal => VerifyMode::Minimal,
            };
            let report = verify_solution(&g, &s, mode)?;
            emit(&out, &report.to_string())?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Negative("verification failed".into()))
            }
        }
        Command::Convert { from_digraph, out } => {
            let d = decode_digraph(&read(&from_digraph)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", from_digraph.display())))?;
            let (g, _) = d.to_alternating();
            emit(&out, &encode_instance(&g)?)
        }
        Command::Oracle { k, file, out } => {
            let g = read_instance(&file)?;
            let family = oracle::oracle_minimal_mfvs_family(&g, k)?;
            emit_family(&out, &family, k)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
