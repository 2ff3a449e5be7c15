use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use aqcross::aqcube::{find_k44_witness, write_edges};
use aqcross::formulas::{small_cases, ComponentBreakdown};
use aqcross::partition::{canonical_names, EightParts};
use aqcross::render::{black_svg, upsilon_svg};
use aqcross::report::Report;
use aqcross::seqtables::SeqTable;
use aqcross::verify::{self, Bounds, Scope};
use aqcross::Exact;

/// Largest n accepted by `generate`.
const MAX_GENERATE_N: u32 = 20;

#[derive(Parser)]
#[command(name = "aqcross", version, about = "Crossing counts for drawings of augmented cubes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of AQ_n as "u v dim" lines.
    Generate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and emit a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        scope: ScopeArg,
        #[arg(long)]
        m_min: Option<u32>,
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the component table, one row per n.
    Table {
        #[arg(long, default_value_t = 8)]
        n_min: u32,
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a drawing as SVG.
    Svg {
        #[command(subcommand)]
        target: SvgTarget,
    },
    /// Emit the eight parts and their canonical names as JSON.
    Parts {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the s, t and t' sequences as CSV.
    Sequences {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the small-case table and the K44 witness as JSON.
    SmallCases {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SvgTarget {
    Upsilon {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Black {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Graph,
    Partition,
    Upsilon,
    Black,
    Sequences,
    Formulas,
    All,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Graph => Scope::Graph,
            ScopeArg::Partition => Scope::Partition,
            ScopeArg::Upsilon => Scope::Upsilon,
            ScopeArg::Black => Scope::Black,
            ScopeArg::Sequences => Scope::Sequences,
            ScopeArg::Formulas => Scope::Formulas,
            ScopeArg::All => Scope::All,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("cannot write {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_all(out: Option<&Path>, text: &str) -> Result<()> {
    let mut w = sink(out)?;
    w.write_all(text.as_bytes())?;
    w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every check passed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Generate { n, out } => {
            if !(1..=MAX_GENERATE_N).contains(&n) {
                bail!("n must lie in [1, {MAX_GENERATE_N}], got {n}");
            }
            let mut w = sink(out.as_deref())?;
            write_edges(n, &mut w)?;
            w.flush()?;
        }
        Command::Verify { scope, m_min, m_max, n_min, n_max, out } => {
            let scope = Scope::from(scope);
            let bounds = Bounds { m_min, m_max, n_min, n_max };
            let start = Instant::now();
            let checks = verify::run(scope, &bounds)?;
            let mut params = BTreeMap::from([("scope".to_string(), scope.to_string())]);
            for (k, v) in [("m_min", m_min), ("m_max", m_max), ("n_min", n_min), ("n_max", n_max)] {
                if let Some(v) = v {
                    params.insert(k.to_string(), v.to_string());
                }
            }
            let report = Report::new("verify", params, checks, start.elapsed().as_millis());
            for c in report.failures() {
                eprintln!("{c}");
            }
            write_all(out.as_deref(), &(serde_json::to_string_pretty(&report)? + "\n"))?;
            return Ok(report.passed);
        }
        Command::Table { n_min, n_max, format, out } => {
            if n_min < 8 || n_min > n_max {
                bail!("need 8 <= n-min <= n-max");
            }
            let rows = (n_min..=n_max)
                .map(|n| ComponentBreakdown::<Exact>::compute(n).map(|b| b.row()))
                .collect::<aqcross::Result<Vec<_>>>()?;
            let header = ComponentBreakdown::<Exact>::HEADER;
            match format {
                Format::Csv => {
                    let mut text = header.join(",") + "\n";
                    for r in &rows {
                        text += &(r.join(",") + "\n");
                    }
                    write_all(out.as_deref(), &text)?;
                }
                Format::Json => {
                    let objs: Vec<BTreeMap<&str, &String>> =
                        rows.iter().map(|r| header.iter().copied().zip(r).collect()).collect();
                    write_all(out.as_deref(), &(serde_json::to_string_pretty(&objs)? + "\n"))?;
                }
            }
        }
        Command::Svg { target } => match target {
            SvgTarget::Upsilon { m, out } => write_all(out.as_deref(), &upsilon_svg(m)?)?,
            SvgTarget::Black { n, out } => write_all(out.as_deref(), &black_svg(n)?)?,
        },
        Command::Parts { n, out } => {
            let parts = EightParts::build(n)?.to_json();
            let names = canonical_names(n)?.to_json();
            let doc = serde_json::json!({ "parts": parts, "names": names });
            write_all(out.as_deref(), &(serde_json::to_string_pretty(&doc)? + "\n"))?;
        }
        Command::Sequences { n, out } => {
            let table = SeqTable::build(n)?;
            let mut w = sink(out.as_deref())?;
            table.write_csv(&mut w)?;
            w.flush()?;
        }
        Command::SmallCases { out } => {
            let doc = serde_json::json!({
                "cases": small_cases(),
                "k44_witness": find_k44_witness(),
            });
            write_all(out.as_deref(), &(serde_json::to_string_pretty(&doc)? + "\n"))?;
        }
    }
    Ok(true)
}
