use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tsc_core::oracle::{enumerate_points, FragmentSpec};
use tsc_core::{
    derives, dot, forces, minimal_point, normalize, Formula, Ordinal, ParseError, Point,
    PointError, Sequent,
};

/// Normal forms, derivability and model checking for ordinal modal formulas.
#[derive(Parser)]
#[command(name = "tsc", version)]
struct Cli {
    /// Print stable `key=value` lines instead of human-readable output.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the monomial normal form and minimal world of a formula.
    Normalize { formula: String },
    /// Decide a sequent `lhs |- rhs`. Exits 0 if derivable, 1 if not.
    Decide { sequent: String },
    /// Decide whether a world forces a formula.
    Check { point: String, formula: String },
    /// Emit a Graphviz graph of a finite fragment of the frame.
    FrameDot {
        /// Largest coordinate value.
        #[arg(long)]
        max: String,
        /// Number of coordinates that may be nonzero.
        #[arg(long)]
        support: usize,
        /// Relation bases to draw, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "0,1")]
        bases: Vec<usize>,
        /// Largest coefficient in coordinate values.
        #[arg(long, default_value_t = 2)]
        coeff: u32,
        /// Draw the whole relation instead of its transitive reduction.
        #[arg(long)]
        full: bool,
    },
}

enum Failure {
    Syntax(ParseError, String),
    Other(String),
}

impl From<PointError> for Failure {
    fn from(e: PointError) -> Self {
        Failure::Other(e.to_string())
    }
}

fn parse<T>(input: &str) -> Result<T, Failure>
where
    T: std::str::FromStr<Err = ParseError>,
{
    input
        .parse()
        .map_err(|e| Failure::Syntax(e, input.to_string()))
}

fn parse_point(input: &str) -> Result<Point, Failure> {
    input.parse().map_err(|e| match e {
        PointError::Syntax(e) => Failure::Syntax(e, input.to_string()),
        other => Failure::Other(other.to_string()),
    })
}

fn emit(line: impl Display) {
    println!("{line}");
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Normalize { formula } => {
            let f: Formula = parse(&formula)?;
            let nf = normalize(&f);
            let x = minimal_point(&f);
            if cli.machine {
                emit(format!("mnf={nf}; point={x}"));
            } else {
                emit(format!("{nf} ; point={x}"));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decide { sequent } => {
            let s: Sequent = parse(&sequent)?;
            let verdict = derives(&s);
            if cli.machine {
                emit(&verdict);
            } else if let Some(x) = &verdict.countermodel {
                emit(format!("not derivable; countermodel={x}"));
            } else {
                emit("derivable");
            }
            Ok(if verdict.derivable {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Check { point, formula } => {
            let x = parse_point(&point)?;
            let f: Formula = parse(&formula)?;
            let holds = forces(&x, &f);
            if cli.machine {
                emit(format!("forces={holds}"));
            } else {
                emit(holds);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::FrameDot {
            max,
            support,
            bases,
            coeff,
            full,
        } => {
            let bound: Ordinal = parse(&max)?;
            let universe = Ordinal::enumerate_up_to(&bound, coeff);
            let points = enumerate_points(&FragmentSpec::new(universe, support, Vec::new()));
            print!("{}", dot::render(&points, &bases, full));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Syntax(e, input)) => {
            eprintln!("{}", e.render(&input));
            ExitCode::from(2)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
