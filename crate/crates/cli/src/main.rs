use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use svn_corona::closed_form::ClosedFormError;
use svn_corona::dot::to_dot;
use svn_corona::{
    build_family, construct_coloring, construct_with_colors, exact_b_chromatic, phi_closed_form, svn_corona,
    verify_b_coloring, Coloring, FamilyKind, FamilySpec, Graph, OracleError, SearchBudget,
};

/// b-chromatic numbers of SVN coronas.
///
/// Operands are written `<kind>:<size>` with kind one of path, cycle, star,
/// complete. For stars the size is the number of leaves: `star:4` has five
/// vertices.
#[derive(Parser)]
#[command(name = "svn-corona", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Pair {
    /// Left operand, e.g. path:10
    #[arg(long)]
    left: FamilySpec,
    /// Right operand, e.g. star:4 (size = number of leaves)
    #[arg(long)]
    right: FamilySpec,
}

#[derive(clap::Args)]
struct Source {
    /// Graph JSON file
    #[arg(long, conflicts_with_all = ["left", "right"])]
    graph: Option<PathBuf>,
    #[arg(long, requires = "right")]
    left: Option<FamilySpec>,
    #[arg(long, requires = "left")]
    right: Option<FamilySpec>,
}

impl Source {
    fn load(&self) -> Result<Graph> {
        match (&self.graph, self.left, self.right) {
            (Some(path), _, _) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                Ok(Graph::from_json(&text)?)
            }
            (None, Some(left), Some(right)) => Ok(svn_corona(&build_family(left)?, &build_family(right)?)?),
            _ => bail!("give --graph or both --left and --right"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the corona and write its graph JSON
    Gen {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the closed-form value and the clause that gives it
    Phi {
        #[command(flatten)]
        pair: Pair,
    },
    /// Construct and verify a b-coloring, write it as JSON
    Color {
        #[command(flatten)]
        pair: Pair,
        /// Use this many colors instead of the closed-form value (the pair
        /// need not be covered; success then only shows φ ≥ k)
        #[arg(long)]
        colors: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the corona graph JSON here
        #[arg(long)]
        graph_out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a coloring file against a graph
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Exact φ by search
    Oracle {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 120)]
        budget_seconds: u64,
        #[arg(long, default_value_t = 20)]
        max_vertices: usize,
    },
    /// Sweep n and t and print the closed-form grid
    Table {
        #[arg(long)]
        left: FamilyKind,
        #[arg(long)]
        right: FamilyKind,
        /// Inclusive range, e.g. 3..9
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        t: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Construct every supported pair up to the given sizes and compare with
    /// the closed form and, where small enough, the oracle
    Selftest {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        max_t: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Markdown,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in `{s}`"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in `{s}`"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { pair, out } => {
            let g = svn_corona(&build_family(pair.left)?, &build_family(pair.right)?)?;
            write_out(out.as_deref(), &g.to_json())?;
        }
        Command::Phi { pair } => {
            let r = phi_closed_form(pair.left, pair.right)?;
            println!("{r}");
            if !r.supported {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Color { pair, colors, out, graph_out, dot } => {
            let c = match colors {
                Some(k) => construct_with_colors(pair.left, pair.right, k)?,
                None => construct_coloring(pair.left, pair.right)?,
            };
            eprintln!("k={} origin={} branch={}", c.k(), c.origin, c.branch.unwrap_or("-"));
            write_out(out.as_deref(), &c.coloring.to_json())?;
            if let Some(path) = graph_out {
                write_out(Some(&path), &c.graph.to_json())?;
            }
            if let Some(path) = dot {
                write_out(Some(&path), &to_dot(&c.graph, &c.coloring)?)?;
            }
        }
        Command::Verify { source, coloring } => {
            let g = source.load()?;
            let text = fs::read_to_string(&coloring).with_context(|| format!("reading {}", coloring.display()))?;
            let c = Coloring::from_json(&text)?;
            let report = verify_b_coloring(&g, &c)?;
            println!("{}", report.to_json());
            if !report.is_b_coloring() {
                eprintln!("not a b-coloring");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Oracle { source, budget_seconds, max_vertices } => {
            let g = source.load()?;
            let budget = SearchBudget::default()
                .with_max_vertices(max_vertices)
                .with_time_limit(Duration::from_secs(budget_seconds));
            println!("{}", exact_b_chromatic(&g, &budget)?);
        }
        Command::Table { left, right, n, t, format } => print!("{}", table(left, right, n, t, format)?),
        Command::Selftest { max_n, max_t } => return selftest(max_n, max_t),
    }
    Ok(ExitCode::SUCCESS)
}

fn table(
    left: FamilyKind,
    right: FamilyKind,
    ns: RangeInclusive<usize>,
    ts: RangeInclusive<usize>,
    format: Format,
) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Csv => out.push_str("n,t,phi,branch\n"),
        Format::Markdown => out.push_str("| n | t | φ | branch |\n|---|---|---|---|\n"),
    }
    for n in ns {
        for t in ts.clone() {
            let r = phi_closed_form(FamilySpec::new(left, n), FamilySpec::new(right, t));
            let (value, branch) = match &r {
                Ok(r) if r.supported => (r.value.map_or("-".into(), |v| v.to_string()), r.branch.unwrap_or("-")),
                _ => ("unsupported".to_string(), "-"),
            };
            match format {
                Format::Csv => out.push_str(&format!("{n},{t},{value},\"{branch}\"\n")),
                Format::Markdown => out.push_str(&format!("| {n} | {t} | {value} | {branch} |\n")),
            }
        }
    }
    Ok(out)
}

fn selftest(max_n: usize, max_t: usize) -> Result<ExitCode> {
    let mut pairs = Vec::new();
    for left in FamilyKind::ALL {
        let first = if left == FamilyKind::Complete { 2 } else { 3 };
        for n in first..=max_n {
            for right in FamilyKind::ALL {
                for t in right.min_size().max(1)..=max_t {
                    pairs.push((FamilySpec::new(left, n), FamilySpec::new(right, t)));
                }
            }
        }
    }
    let lines: Vec<(bool, String)> = pairs
        .par_iter()
        .filter_map(|&(left, right)| {
            let value = phi_closed_form(left, right).ok()?.value?;
            let c = match construct_coloring(left, right) {
                Ok(c) => c,
                Err(e) => return Some((false, format!("FAIL {left} {right}: {e}"))),
            };
            if c.k() != value {
                return Some((false, format!("FAIL {left} {right}: k={} closed form {value}", c.k())));
            }
            let mut line = format!("ok   {left} {right}: k={value} {}", c.origin);
            if c.graph.order() <= 20 {
                match exact_b_chromatic(&c.graph, &SearchBudget::default()) {
                    Ok(phi) if phi == value => line.push_str(" oracle=ok"),
                    Ok(phi) => return Some((false, format!("FAIL {left} {right}: oracle {phi} closed form {value}"))),
                    Err(e) => return Some((false, format!("FAIL {left} {right}: oracle {e}"))),
                }
            }
            Some((true, line))
        })
        .collect();
    let failed = lines.iter().filter(|(ok, _)| !ok).count();
    for (_, line) in &lines {
        println!("{line}");
    }
    println!("{} pairs, {failed} failed", lines.len());
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<ClosedFormError>() {
            return match e {
                ClosedFormError::Unsupported { .. } => 2,
                ClosedFormError::ConstructionInvalid(_) => 1,
                _ => 4,
            };
        }
        if let Some(e) = cause.downcast_ref::<OracleError>() {
            return match e {
                OracleError::BudgetExceeded { .. } | OracleError::TooLarge { .. } => 3,
                _ => 4,
            };
        }
    }
    4
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(4),
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
