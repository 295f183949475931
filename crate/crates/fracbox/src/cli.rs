//! Command line front end.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use fracbox_core::completions::{enumerate_minimal_completions, hypergraph_from_fills};
use fracbox_core::engine::DEFAULT_S_MAX;
use fracbox_core::{Graph, Instance, Limits};
use rayon::prelude::*;
use serde::Serialize;

use crate::format::{self, Format};
use crate::json::{self, rational, rational_text};
use crate::Error;

/// Exact boxicity, fractional boxicity and s-fold boxicity of small graphs.
#[derive(Debug, Parser)]
#[command(name = "fracbox", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Read the graph from this file instead of stdin.
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,

    /// Input format; defaults to graph6 for `.g6` files, otherwise edge list.
    #[arg(long, global = true, value_name = "graph6|edgelist")]
    pub format: Option<Format>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest accepted vertex count.
    #[arg(long = "max-n", global = true, default_value_t = Limits::DEFAULT.max_n,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..=16))]
    pub max_n: usize,

    /// Largest accepted number of complement edges.
    #[arg(long = "max-cedges", global = true, env = "FRACBOX_MAX_CEDGES",
          default_value_t = Limits::DEFAULT.max_complement_edges,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..=120))]
    pub max_cedges: usize,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Boxicity with an optimal cointerval cover of the complement.
    #[command(name = "box")]
    Box,
    /// Fractional boxicity with primal and dual certificates.
    Boxf,
    /// s-fold boxicity.
    Boxs {
        #[arg(long = "s", value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
    },
    /// box, box_f and the uniform dual bound side by side.
    Bounds,
    /// Minimal interval completions and the matching maximal hyperedges.
    Completions,
    /// Rows, columns and incidence matrix of the covering system.
    Hypergraph,
    /// Full report with the s-fold table and symmetry checks.
    Analyze {
        #[arg(long = "smax", default_value_t = DEFAULT_S_MAX,
              value_parser = clap::value_parser!(u32).range(1..=6))]
        smax: u32,
    },
    /// One graph6 graph per input line, one JSON report per output line.
    Batch {
        #[arg(long = "smax", default_value_t = DEFAULT_S_MAX,
              value_parser = clap::value_parser!(u32).range(1..=6))]
        smax: u32,
    },
}

#[derive(Debug, Clone)]
pub enum Input {
    Stdin,
    Path(PathBuf),
}

/// Everything a run needs, resolved from the command line.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: Input,
    pub format: Format,
    pub command: Command,
    pub limits: Limits,
    pub json: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> RunConfig {
        let format = cli.format.unwrap_or_else(|| match &cli.input {
            Some(path) => Format::detect(path),
            None => Format::EdgeList,
        });
        let limits = Limits {
            max_n: cli.max_n,
            max_complement_edges: cli.max_cedges,
            ..Limits::DEFAULT
        };
        RunConfig {
            input: cli.input.map_or(Input::Stdin, Input::Path),
            format,
            command: cli.command,
            limits,
            json: cli.json,
        }
    }
}

/// Parses arguments, runs, and returns the process exit code.
pub fn main_with_args<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 1;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    run(&RunConfig::from(cli), stdin, stdout, stderr)
}

/// Exit code 0 on success, 1 on input errors, 2 on size-limit errors. Failures
/// produce one diagnostic line on `stderr`.
pub fn run(
    config: &RunConfig,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match execute(config, stdin, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "fracbox: {e}");
            e.exit_code()
        }
    }
}

fn read_input(config: &RunConfig, stdin: &mut dyn Read) -> Result<String, Error> {
    match &config.input {
        Input::Stdin => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|source| Error::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(text)
        }
        Input::Path(path) => fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
    }
}

fn execute(config: &RunConfig, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), Error> {
    let text = read_input(config, stdin)?;
    if let Command::Batch { smax } = config.command {
        return batch(&text, smax, &config.limits, out);
    }
    let g = config.format.parse(&text, config.limits.max_n)?;
    let limits = &config.limits;
    match &config.command {
        Command::Completions => {
            let fills = enumerate_minimal_completions(&g, limits.max_complement_edges)?;
            let h = hypergraph_from_fills(&g, &fills);
            if config.json {
                emit_json(out, &json::CompletionsJson::new(&h, &fills))?;
            } else {
                writeln!(out, "minimal completions: {}", fills.len())?;
                for f in &fills {
                    writeln!(out, "  fill {:?}", json::edge_set(h.index(), f.edges()))?;
                }
                writeln!(out, "maximal hyperedges: {}", h.hyperedges().len())?;
                for &e in h.hyperedges() {
                    writeln!(out, "  {:?}", json::edge_set(h.index(), e))?;
                }
            }
        }
        command => {
            let inst = Instance::new(&g, limits)?;
            solve(command, &g, &inst, config.json, out)?;
        }
    }
    Ok(())
}

fn solve(
    command: &Command,
    g: &Graph,
    inst: &Instance,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let index = inst.system().index();
    match *command {
        Command::Box => {
            let cover = inst.boxicity()?;
            if as_json {
                emit_json(out, &json::BoxJson::new(index, &cover))?;
            } else {
                writeln!(out, "box = {}", cover.value)?;
                for &e in &cover.hyperedges {
                    writeln!(out, "  {:?}", json::edge_set(index, e))?;
                }
            }
        }
        Command::Boxf => {
            let frac = inst.fractional_boxicity()?;
            if as_json {
                emit_json(out, &json::BoxFJson::new(inst.system(), &frac))?;
            } else {
                writeln!(
                    out,
                    "box_f = {}{}",
                    rational_text(&frac.value),
                    approx(&frac.value)
                )?;
            }
        }
        Command::Boxs { s } => {
            let cover = inst.s_fold_boxicity(s)?;
            if as_json {
                emit_json(out, &json::BoxSJson::new(index, &cover))?;
            } else {
                writeln!(out, "box_{s} = {}", cover.value)?;
            }
        }
        Command::Bounds => {
            let boxicity = inst.boxicity()?.value;
            let frac = inst.fractional_boxicity()?.value;
            let bound = inst.ratio_bound()?;
            if as_json {
                emit_json(
                    out,
                    &json::BoundsJson {
                        complement_edges: inst.system().row_count(),
                        e_max: inst.e_max(),
                        ratio_bound: rational(&bound),
                        box_f: rational(&frac),
                        boxicity: boxicity.to_string(),
                    },
                )?;
            } else {
                writeln!(out, "box = {boxicity}")?;
                writeln!(out, "box_f = {}{}", rational_text(&frac), approx(&frac))?;
                writeln!(
                    out,
                    "|E(complement)| / e_max = {} / {} = {}{}",
                    inst.system().row_count(),
                    inst.e_max(),
                    rational_text(&bound),
                    approx(&bound)
                )?;
            }
        }
        Command::Hypergraph => {
            let data = json::HypergraphJson::new(inst.system());
            if as_json {
                emit_json(out, &data)?;
            } else {
                writeln!(
                    out,
                    "rows {} x columns {}",
                    data.rows.len(),
                    data.columns.len()
                )?;
                for (pair, row) in data.rows.iter().zip(&data.matrix) {
                    let bits: String = row
                        .iter()
                        .map(|b| if *b == 1 { '1' } else { '0' })
                        .collect();
                    writeln!(out, "  {pair:?} {bits}")?;
                }
            }
        }
        Command::Analyze { smax } => {
            let report = inst.analyze(smax)?;
            let data = json::ReportJson::new(format::emit_graph6(g), &report);
            if as_json {
                emit_json(out, &data)?;
            } else {
                write_report_text(out, &data)?;
            }
        }
        Command::Completions | Command::Batch { .. } => unreachable!("handled by execute"),
    }
    Ok(())
}

fn batch(text: &str, smax: u32, limits: &Limits, out: &mut dyn Write) -> Result<(), Error> {
    let lines: Vec<&str> = text.lines().collect();
    let rendered: Vec<String> = lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| match analyze_line(line, smax, limits) {
            Ok(report) => report,
            Err(e) => serde_json::to_string(&json::LineErrorJson {
                line: i + 1,
                error: e.to_string(),
            })
            .expect("serializable"),
        })
        .collect();
    for line in rendered {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn analyze_line(line: &str, smax: u32, limits: &Limits) -> Result<String, Error> {
    let g = format::parse_graph6(line, limits.max_n)?;
    let report = Instance::new(&g, limits)?.analyze(smax)?;
    let data = json::ReportJson::new(format::emit_graph6(&g), &report);
    Ok(serde_json::to_string(&data).expect("serializable"))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn approx(r: &fracbox_core::Rational) -> String {
    if r.is_integer() {
        return String::new();
    }
    let (p, q) = (r.numer().to_string(), r.denom().to_string());
    match (p.parse::<f64>(), q.parse::<f64>()) {
        (Ok(p), Ok(q)) => format!(" (approx. {:.6})", p / q),
        _ => String::new(),
    }
}

fn write_report_text(out: &mut dyn Write, r: &json::ReportJson) -> io::Result<()> {
    writeln!(out, "graph6        {}", r.graph6)?;
    writeln!(out, "vertices      {}", r.n)?;
    writeln!(
        out,
        "edges         {} (complement {})",
        r.edges, r.complement_edges
    )?;
    writeln!(out, "box           {}", r.boxicity)?;
    writeln!(out, "box_f         {}", r.box_f.trim_end_matches("/1"))?;
    writeln!(out, "e_max         {}", r.e_max)?;
    writeln!(
        out,
        "bound         {}",
        r.ratio_bound.trim_end_matches("/1")
    )?;
    writeln!(out, "bound tight   {}", r.bound_is_tight)?;
    let flag = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
    writeln!(
        out,
        "edge-transitive complement  {}",
        flag(r.edge_transitive_complement)
    )?;
    writeln!(
        out,
        "vertex-transitive H_G       {}",
        flag(r.hypergraph_vertex_transitive)
    )?;
    for row in &r.box_s {
        writeln!(
            out,
            "box_{}         {} (ratio {})",
            row.s,
            row.box_s,
            row.ratio.trim_end_matches("/1")
        )?;
    }
    writeln!(
        out,
        "subadditive {}, ratios >= box_f {}, attained at {}",
        r.fekete.subadditive,
        r.fekete.bounded_by_box_f,
        r.fekete
            .attained_at
            .map_or("none".to_string(), |s| s.to_string())
    )
}
