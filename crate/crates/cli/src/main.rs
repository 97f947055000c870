use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use unipress::genesis::DEFAULT_CENSUS_BOUND;
use unipress::{
    census_with_bound, cup_count, generate_cup, graph_root, recognize, total_count, Error, Label,
    PressingSequence, PseudoGraph,
};

/// Pressing sequences and uniquely pressable graphs.
///
/// Exit status: 0 on success (and on a yes verdict), 1 on a no verdict or a
/// rejected operation, 2 on malformed input or usage errors.
#[derive(Parser, Debug)]
#[command(name = "unipress", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the graph has exactly one successful pressing sequence.
    Recognize {
        /// Graph or matrix file; `-` reads standard input.
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Also write the input graph as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Press vertices in order and print the resulting graph.
    Press {
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Vertices to press, space- or comma-separated.
        #[arg(long, num_args = 0.., value_delimiter = ',', allow_hyphen_values = false)]
        sequence: Vec<Label>,
        /// Print the graph before and after every press.
        #[arg(long)]
        trace: bool,
        /// Write the final graph as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the instructional Cholesky root under the label order.
    Root {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Print every connected uniquely pressable graph on 1..=N.
    Generate { n: usize },
    /// Print closed-form counts for N vertices.
    Count { n: usize },
    /// Exhaustively count uniquely pressable graphs up to isomorphism.
    Census {
        n: usize,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Largest N accepted.
        #[arg(long, default_value_t = DEFAULT_CENSUS_BOUND)]
        oracle_bound: usize,
    },
    /// Rewrite a graph in the chosen text format.
    Convert {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Graph)]
        format: Format,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph,
    Matrix,
}

/// An error paired with its exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn input(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 2,
            error: error.into(),
        }
    }

    fn rejected(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 1,
            error: error.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::input(e),
            _ => Failure::rejected(e),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")
            .map_err(Failure::input)?;
    } else {
        text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(Failure::input)?;
    }
    Ok(text)
}

fn read_graph(path: &Path) -> Result<PseudoGraph, Failure> {
    let text = read_input(path)?;
    PseudoGraph::parse_any(&text)
        .map_err(|e| Failure::input(anyhow::Error::new(e).context(path.display().to_string())))
}

fn write_dot(path: Option<&Path>, g: &PseudoGraph) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, g.to_dot())
            .with_context(|| format!("writing {}", p.display()))
            .map_err(Failure::rejected)?;
    }
    Ok(())
}

fn emit(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .context("writing output")
        .map_err(Failure::rejected)
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Recognize { input, dot } => {
            let g = read_graph(&input)?;
            write_dot(dot.as_deref(), &g)?;
            let report = recognize(&g);
            emit(out, &report.to_text())?;
            Ok(if report.is_yes() { 0 } else { 1 })
        }
        Command::Press {
            input,
            sequence,
            trace,
            dot,
        } => {
            let g = read_graph(&input)?;
            let seq = PressingSequence::new(sequence)?;
            let mut current = g;
            if trace {
                emit(out, &current.to_text())?;
            }
            for (pos, &v) in seq.vertices().iter().enumerate() {
                current = current.press(v).map_err(|_| Error::InvalidSequence {
                    position: pos + 1,
                    vertex: v,
                })?;
                if trace {
                    emit(out, "\n")?;
                    emit(out, &current.to_text())?;
                }
            }
            if !trace {
                emit(out, &current.to_text())?;
            }
            write_dot(dot.as_deref(), &current)?;
            Ok(0)
        }
        Command::Root { input } => {
            let g = read_graph(&input)?;
            let root = graph_root(&g)?;
            emit(out, &root.matrix().to_text())?;
            Ok(0)
        }
        Command::Generate { n } => {
            for (i, g) in generate_cup(n).iter().enumerate() {
                if i > 0 {
                    emit(out, "\n")?;
                }
                emit(out, &g.to_text())?;
            }
            Ok(0)
        }
        Command::Count { n } => {
            emit(
                out,
                &format!("cup={} total={}\n", cup_count(n), total_count(n)),
            )?;
            Ok(0)
        }
        Command::Census {
            n,
            jobs,
            oracle_bound,
        } => {
            if jobs == Some(0) {
                return Err(Failure::input(anyhow::anyhow!("--jobs must be at least 1")));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .context("starting worker pool")
                .map_err(Failure::rejected)?;
            let c = pool.install(|| census_with_bound(n, oracle_bound))?;
            emit(
                out,
                &format!(
                    "n={}\nlabeled_total={}\nup_iso_classes={}\ncup_iso_classes={}\n",
                    c.n, c.labeled_total, c.up_iso_classes, c.cup_iso_classes
                ),
            )?;
            Ok(0)
        }
        Command::Convert { input, format, dot } => {
            let g = read_graph(&input)?;
            write_dot(dot.as_deref(), &g)?;
            let text = match format {
                Format::Graph => g.to_text(),
                Format::Matrix => g.adjacency_matrix().to_text(),
            };
            emit(out, &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(code) if flushed.is_ok() => ExitCode::from(code),
        Ok(_) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
