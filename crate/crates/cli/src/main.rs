//! `enorb`: enhanced nilpotent orbits of `GL_n ⋉ V` from the command line.
//!
//! Exit status is 0 on success, 2 on invalid input and 1 when an internal
//! consistency check fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use enhanced_nilpotent::exactlinalg::{
    parse_matrix_json, parse_vector_json, AnyMatrix, AnyVector, Field,
};
use enhanced_nilpotent::ffcensus::{enhanced_number_sweep, orbit_census};
use enhanced_nilpotent::finiteness::{decide_enhanced, decide_gl_variety, WeightSpec};
use enhanced_nilpotent::gl2sym2::{
    classify_gl2_quadratic, gl2_closure_poset, gl2_dims, Gl2Orbit, QuadraticVector,
};
use enhanced_nilpotent::orbitcalc::{
    classify, classify_invariant, closure_contains, describe, flag_block_sizes, flag_dims,
    EnhancedElement, RECORD_KEYS,
};
use enhanced_nilpotent::partitions::{build_poset, EnhancedPartition};
use enhanced_nilpotent::Error;

#[derive(Parser)]
#[command(
    name = "enorb",
    version,
    about = "Enhanced nilpotent orbits of GL_n acting on gl_n x V"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every orbit type lambda[q] of size n with its invariants.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OrbitsFormat::Record)]
        format: OrbitsFormat,
    },
    /// Hasse diagram of the closure order as a DOT digraph.
    Hasse {
        #[arg(long)]
        n: usize,
    },
    /// Classify a pair (X, w) read from matrix and vector files.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        vector: PathBuf,
        /// Also run the basis-free classifier and fail on disagreement.
        #[arg(long)]
        check: bool,
    },
    /// Whether the closure of one orbit contains another.
    ClosureTest {
        #[arg(long)]
        upper: EnhancedPartition,
        #[arg(long)]
        lower: EnhancedPartition,
    },
    /// Dimensions of the canonical partial flag of an orbit type.
    Flag {
        #[arg(long = "type")]
        kind: EnhancedPartition,
    },
    /// GL_2 acting on binary quadratic forms.
    Gl2 {
        #[command(subcommand)]
        command: Gl2Command,
    },
    /// Whether the enhanced nilpotent cone of a highest weight module has finitely many orbits.
    Finiteness {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t = Variety::Enhanced)]
        variety: Variety,
    },
    /// Brute-force checks over small prime fields.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand)]
enum Gl2Command {
    /// Orbit label of (X, c0 x^2 + c1 xy + c2 y^2).
    Classify {
        #[arg(long)]
        matrix: PathBuf,
        /// Coefficients c0,c1,c2.
        #[arg(long, allow_hyphen_values = true)]
        quad: String,
    },
    /// Orbit and centralizer dimensions.
    Dims,
    /// Closure order as covering pairs.
    Poset,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Enumerate all orbits over F_p.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = CensusFormat::Table)]
        format: CensusFormat,
    },
    /// Compare enhanced numbers with a maximization over F_2.
    EnhancedNumbers {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrbitsFormat {
    Record,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Table,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variety {
    Enhanced,
    Gl,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn check_range(name: &str, value: usize, lo: usize, hi: usize) -> Result<(), Failure> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(Failure::Input(format!(
            "{name} must be in {lo}..={hi}, got {value}"
        )))
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            format!("{}\n", cells.join("  ").trim_end())
        })
        .collect()
}

fn orbits(n: usize, format: OrbitsFormat) -> Outcome {
    check_range("n", n, 1, 12)?;
    let descriptors: Vec<_> = EnhancedPartition::all(n).iter().map(describe).collect();
    Ok(match format {
        OrbitsFormat::Record => descriptors
            .iter()
            .map(|d| d.record())
            .collect::<Vec<_>>()
            .join("\n"),
        OrbitsFormat::Table => {
            let mut rows = vec![RECORD_KEYS.iter().map(|k| k.to_string()).collect()];
            rows.extend(descriptors.iter().map(|d| d.table_row()));
            table(&rows)
        }
    })
}

fn hasse(n: usize) -> Outcome {
    check_range("n", n, 1, 10)?;
    let poset = build_poset(n)?;
    let mut out = format!("digraph enhanced_orbits_{n} {{\n  rankdir=TB;\n  node [shape=box];\n");
    for e in poset.elements() {
        out.push_str(&format!(
            "  \"{e}\" [label=\"{e}\\ndim {}\"];\n",
            e.dim_enhanced_orbit()
        ));
    }
    for &(upper, lower) in poset.covers() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            poset.elements()[upper],
            poset.elements()[lower]
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

fn classify_element<F: Field>(e: &EnhancedElement<F>, check: bool) -> Outcome {
    let kind = classify(e)?;
    if check {
        let other = classify_invariant(e)?;
        if other != kind {
            return Err(Failure::Internal(format!(
                "classifiers disagree: jordan basis gives {kind}, invariant gives {other}"
            )));
        }
    }
    Ok(describe(&kind).record())
}

fn classify_files(matrix: &Path, vector: &Path, check: bool) -> Outcome {
    let m = parse_matrix_json(&read(matrix)?)?;
    let v = parse_vector_json(&read(vector)?)?;
    match (m, v) {
        (AnyMatrix::Q(x), AnyVector::Q(w)) => classify_element(&EnhancedElement::new(x, w)?, check),
        (AnyMatrix::Fp(x), AnyVector::Fp(f, w)) => {
            if *x.field() != f {
                return Err(Error::FieldMismatch(format!(
                    "matrix over F_{} but vector over F_{}",
                    x.field().modulus(),
                    f.modulus()
                ))
                .into());
            }
            classify_element(&EnhancedElement::new(x, w)?, check)
        }
        _ => Err(Error::FieldMismatch("matrix and vector use different fields".into()).into()),
    }
}

fn closure_test(upper: &EnhancedPartition, lower: &EnhancedPartition) -> Outcome {
    Ok(format!("{}\n", closure_contains(upper, lower)?))
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn flag(kind: &EnhancedPartition) -> Outcome {
    Ok(format!(
        "type: {kind}\nflag_dims: {}\nflag_block_sizes: {}\n",
        join(&flag_dims(kind)),
        join(&flag_block_sizes(kind))
    ))
}

fn gl2(command: &Gl2Command) -> Outcome {
    match command {
        Gl2Command::Classify { matrix, quad } => {
            let x = match parse_matrix_json(&read(matrix)?)? {
                AnyMatrix::Q(x) => x,
                AnyMatrix::Fp(x) => return Err(Error::CharNotZero(x.field().modulus()).into()),
            };
            let w: QuadraticVector = quad.parse()?;
            Ok(format!("{}\n", classify_gl2_quadratic(&x, &w)?))
        }
        Gl2Command::Dims => {
            let mut rows = vec![vec!["orbit".into(), "dim".into(), "centralizer_dim".into()]];
            rows.extend(gl2_dims().iter().map(|d| {
                vec![
                    d.orbit.to_string(),
                    d.dim.to_string(),
                    d.centralizer_dim.to_string(),
                ]
            }));
            Ok(table(&rows))
        }
        Gl2Command::Poset => {
            let poset = gl2_closure_poset();
            let mut out = String::new();
            for (upper, lower) in poset.covers() {
                out.push_str(&format!("{upper} -> {lower}\n"));
            }
            for upper in Gl2Orbit::ALL {
                let members: Vec<String> = Gl2Orbit::ALL
                    .into_iter()
                    .filter(|&l| poset.contains(upper, l))
                    .map(|l| l.to_string())
                    .collect();
                out.push_str(&format!("closure({upper}) = {}\n", members.join(" ")));
            }
            Ok(out)
        }
    }
}

fn finiteness(n: usize, weight: &str, variety: Variety) -> Outcome {
    let entries = weight
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Input(format!("bad weight entry {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let w = WeightSpec::new(n, entries)?;
    let answer = match variety {
        Variety::Enhanced => decide_enhanced(&w),
        Variety::Gl => decide_gl_variety(&w),
    };
    Ok(format!("{answer}\n"))
}

fn oracle(command: &OracleCommand) -> Outcome {
    match *command {
        OracleCommand::Census { n, p, format } => {
            let report = orbit_census(n, p)?;
            let text = match format {
                CensusFormat::Table => report.to_table(),
                CensusFormat::Csv => report.to_csv()?,
            };
            if report.is_consistent() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Internal(report.summary()))
            }
        }
        OracleCommand::EnhancedNumbers { n, p, max_k } => {
            if p != 2 {
                return Err(Failure::Input(format!(
                    "enhanced-number oracle requires p = 2, got {p}"
                )));
            }
            let sweep = enhanced_number_sweep(n, max_k)?;
            let mut out = format!("{}\n", sweep.summary());
            for m in &sweep.mismatches {
                out.push_str(&format!(
                    "mismatch state={:#x} k={} oracle={} formula={}\n",
                    m.state, m.k, m.oracle, m.formula
                ));
            }
            if sweep.mismatches.is_empty() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Internal("oracle disagrees with formula".into()))
            }
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Orbits { n, format } => orbits(*n, *format),
        Command::Hasse { n } => hasse(*n),
        Command::Classify {
            matrix,
            vector,
            check,
        } => classify_files(matrix, vector, *check),
        Command::ClosureTest { upper, lower } => closure_test(upper, lower),
        Command::Flag { kind } => flag(kind),
        Command::Gl2 { command } => gl2(command),
        Command::Finiteness { n, weight, variety } => finiteness(*n, weight, *variety),
        Command::Oracle { command } => oracle(command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
