use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use distlat::{Error, FieldChoice, Guards};
use serde_json::json;

mod commands;
mod input;

use commands::{Outcome, Settings};

const SCHEMA_VERSION: u32 = 1;

/// Distributive lattices, the ideal H_P and its linear resolution,
/// Alexander duality, and Cohen-Macaulay bipartite graphs.
///
/// Inputs are JSON files (or `-` for stdin). The kind is detected from the
/// keys: a poset has "elements" and "covers", an ideal "variables" and
/// "generators", a complex "vertices" and "facets", a bipartite graph
/// "left", "right" and "edges".
///
/// Exit status: 0 all checks passed, 1 a check failed, 2 input or usage
/// error, 3 a size guard was exceeded.
#[derive(Parser)]
#[command(name = "distlat", version, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Field for rank computations: `rational` or `prime:<p>`.
    #[arg(long, global = true, default_value = "rational")]
    field: FieldChoice,

    /// Largest total degree for strand checks (default n + s + 2).
    #[arg(long, global = true)]
    degree_bound: Option<usize>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of random ideal members reduced by the Gröbner check.
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,

    /// Largest allowed number of poset ideals.
    #[arg(long, global = true, default_value_t = Guards::default().lattice_ideals)]
    guard_ideals: usize,

    /// Largest allowed total basis size of the resolution.
    #[arg(long, global = true, default_value_t = Guards::default().basis)]
    guard_basis: usize,

    /// Largest allowed number of z variables for the Gröbner check.
    #[arg(long, global = true, default_value_t = Guards::default().z_variables)]
    guard_z: usize,

    /// Largest generator count for the literal Taylor complex.
    #[arg(long, global = true, default_value_t = Guards::default().taylor_generators)]
    guard_taylor: usize,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write a DOT diagram (Hasse diagram or bipartite graph) to this path.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
}


#[derive(Subcommand)]
enum Command {
    /// The lattice J(P) of poset ideals and its Hasse diagram.
    Lattice { input: PathBuf },
    /// Generators of H_P and the linear-quotients certificate.
    Ideal { input: PathBuf },
    /// Build the resolution, verify it symbolically, check strand exactness.
    Resolution { input: PathBuf },
    /// Betti table with Euler sum, projective dimension and Sperner number.
    Betti { input: PathBuf },
    /// Pair count against the alternating-sum formula; height and components.
    Multiplicity { input: PathBuf },
    /// Verify the quadratic Gröbner basis of the Rees ideal.
    Groebner { input: PathBuf },
    /// Alexander dual of the complex of H_P (or of a given complex or ideal).
    Dual { input: PathBuf },
    /// Decide whether a bipartite graph (or the graph of a poset) is Cohen-Macaulay.
    Cm { input: PathBuf },
    /// Independent oracles: Tor via the Taylor complex, Reisner's criterion.
    Oracle { input: PathBuf },
}

impl Command {
    fn split(&self) -> (&'static str, &PathBuf) {
        match self {
            Command::Lattice { input } => ("lattice", input),
            Command::Ideal { input } => ("ideal", input),
            Command::Resolution { input } => ("resolution", input),
            Command::Betti { input } => ("betti", input),
            Command::Multiplicity { input } => ("multiplicity", input),
            Command::Groebner { input } => ("groebner", input),
            Command::Dual { input } => ("dual", input),
            Command::Cm { input } => ("cm", input),
            Command::Oracle { input } => ("oracle", input),
        }
    }
}

fn run(cli: &Cli) -> distlat::Result<(&'static str, Outcome)> {
    let settings = Settings {
        field: cli.field,
        degree_bound: cli.degree_bound,
        seed: cli.seed,
        trials: cli.trials,
        guards: Guards {
            lattice_ideals: cli.guard_ideals,
            basis: cli.guard_basis,
            z_variables: cli.guard_z,
            taylor_generators: cli.guard_taylor,
            ..Guards::default()
        },
    };
    let (name, path) = cli.command.split();
    let input = input::read(path)?;
    let outcome = match cli.command {
        Command::Lattice { .. } => commands::lattice(input, &settings),
        Command::Ideal { .. } => commands::ideal(input, &settings),
        Command::Resolution { .. } => commands::resolution(input, &settings),
        Command::Betti { .. } => commands::betti(input, &settings),
        Command::Multiplicity { .. } => commands::multiplicity(input, &settings),
        Command::Groebner { .. } => commands::groebner(input, &settings),
        Command::Dual { .. } => commands::dual(input, &settings),
        Command::Cm { .. } => commands::cm(input, &settings),
        Command::Oracle { .. } => commands::oracle(input, &settings),
    }?;
    Ok((name, outcome))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Resource { .. } => 3,
        Error::Consistency(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, outcome) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    if let Some(path) = &cli.dot {
        let Some(dot) = &outcome.dot else {
            eprintln!("error: `{name}` has no diagram for this input");
            return ExitCode::from(2);
        };
        if let Err(e) = std::fs::write(path, dot) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.json {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": name,
            "passed": outcome.passed,
            "report": outcome.report,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("reports serialize"));
    } else {
        print!("{}", outcome.text);
    }
    ExitCode::from(if outcome.passed { 0 } else { 1 })
}
