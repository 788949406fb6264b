use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use alphadist::bounds::Tolerance;
use alphadist::distance::all_pairs_distances;
use alphadist::graph::parse_edge_list;
use alphadist::report::{canonical_json, to_csv, to_json, to_text};
use alphadist::spectrum::{alpha_energy, alpha_estrada, alpha_spectrum};
use alphadist::sweep::{default_alpha_grid, BoundSelection};
use alphadist::{generate_family, parse_graph6, Corpus, Error, Family, NamedGraph, SweepConfig};
use clap::{Args, Parser, Subcommand, ValueEnum};

const TOL_ENV: &str = "ALPHADIST_TOL";

#[derive(Parser)]
#[command(
    name = "alphadist",
    version,
    about = "Spectra and bound checks for alpha-distance matrices of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the spectrum, energy and Estrada index of one graph.
    Spectrum(SpectrumArgs),
    /// Evaluate the bound suite over a corpus and an alpha grid.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct GraphSource {
    /// Input file, or '-' for standard input.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    /// Named family: path, cycle, star, complete or bipartite:a,b.
    #[arg(long)]
    family: Option<String>,
    /// Vertex count, or an inclusive range such as 3..30.
    #[arg(long)]
    n: Option<String>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, conflicts_with = "alpha_grid")]
    alpha: Option<f64>,
    /// Comma-separated alpha values.
    #[arg(long)]
    alpha_grid: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Use seeded random connected graphs with --n vertices.
    #[arg(long, conflicts_with_all = ["input", "family"])]
    random: bool,
    /// First random seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of consecutive seeds per vertex count.
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    /// Extra edges beyond a spanning tree, as a count or an inclusive range.
    #[arg(long, default_value = "0..10")]
    extra: String,
    #[arg(long, conflicts_with = "alpha_grid")]
    alpha: Option<f64>,
    /// Comma-separated alpha values (default 0,0.1,...,0.9,0.99).
    #[arg(long)]
    alpha_grid: Option<String>,
    /// Inequality tolerance (default from ALPHADIST_TOL, else 1e-8).
    #[arg(long)]
    tol: Option<f64>,
    /// Comma-separated bound ids, or 'all'.
    #[arg(long, default_value = "all")]
    bounds: String,
    /// Compare stars and complete graphs against their closed forms.
    #[arg(long)]
    closed_forms: bool,
    /// Worker threads.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    report: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Disconnected { .. } => 3,
        _ => 2,
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Config(format!("invalid size or range '{s}'"));
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        Ok((lo, hi))
    } else {
        let n = s.parse().map_err(|_| bad())?;
        Ok((n, n))
    }
}

fn parse_grid(s: &str) -> Result<Vec<f64>, Error> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("invalid alpha '{t}'")))
        })
        .collect()
}

fn alpha_grid(alpha: Option<f64>, grid: Option<&str>) -> Result<Vec<f64>, Error> {
    match (alpha, grid) {
        (Some(a), _) => Ok(vec![a]),
        (None, Some(g)) => parse_grid(g),
        (None, None) => Ok(default_alpha_grid()),
    }
}

fn default_tolerance() -> Result<f64, Error> {
    match std::env::var(TOL_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("{TOL_ENV} is not a number: '{v}'"))),
        Err(_) => Ok(Tolerance::default().abs),
    }
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Io(e.to_string()))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

/// Edge lists start with a vertex count (or a comment); graph6 bytes are
/// all at least '?'.
fn detect_format(text: &str) -> InputFormat {
    match text.trim_start().chars().next() {
        Some(c) if c.is_ascii_digit() || c == '#' => InputFormat::Edgelist,
        _ => InputFormat::Graph6,
    }
}

fn load_graphs(src: &GraphSource) -> Result<Vec<NamedGraph>, Error> {
    if let Some(path) = &src.input {
        let text = read_input(path)?;
        let name = path.display().to_string();
        return match src.format.unwrap_or_else(|| detect_format(&text)) {
            InputFormat::Edgelist => Ok(vec![NamedGraph {
                id: name,
                graph: parse_edge_list(&text)?,
            }]),
            InputFormat::Graph6 => text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| {
                    Ok(NamedGraph {
                        id: format!("{name}:{}", i + 1),
                        graph: parse_graph6(l.trim_end().as_bytes())?,
                    })
                })
                .collect(),
        };
    }
    if let Some(f) = &src.family {
        let family: Family = f.parse()?;
        let (lo, hi) = parse_range(
            src.n
                .as_deref()
                .ok_or_else(|| Error::Config("--family needs --n".into()))?,
        )?;
        if lo > hi {
            return Err(Error::Config(format!("empty n range {lo}..{hi}")));
        }
        return (lo..=hi)
            .map(|n| {
                Ok(NamedGraph {
                    id: format!("{family}-{n}"),
                    graph: generate_family(family, n)?,
                })
            })
            .collect();
    }
    Err(Error::Config(
        "no graph source: give --input or --family".into(),
    ))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::Io(e.to_string())),
    }
}

#[derive(serde::Serialize)]
struct SpectrumOutput {
    graph_id: String,
    n: usize,
    wiener: u64,
    s_sum: u64,
    tr_min: u64,
    tr_max: u64,
    alpha: f64,
    eigenvalues: Vec<f64>,
    energy: f64,
    estrada: Option<f64>,
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<u8, Error> {
    let graphs = load_graphs(&args.source)?;
    let grid = alpha_grid(args.alpha, args.alpha_grid.as_deref())?;
    if grid.is_empty() {
        return Err(Error::Config("alpha grid is empty".into()));
    }
    let mut rows = Vec::new();
    for g in &graphs {
        let d = all_pairs_distances(&g.graph)?;
        for &alpha in &grid {
            let s = alpha_spectrum(&d, alpha, alphadist::linalg::DEFAULT_EIG_TOL)?;
            rows.push(SpectrumOutput {
                graph_id: g.id.clone(),
                n: d.n(),
                wiener: d.wiener(),
                s_sum: d.s_sum(),
                tr_min: d.min_tr(),
                tr_max: d.max_tr(),
                alpha,
                eigenvalues: s.values().to_vec(),
                energy: alpha_energy(&s),
                estrada: alpha_estrada(&s).ok(),
            });
        }
    }
    let text = match args.report {
        ReportFormat::Json => canonical_json(&rows)?,
        ReportFormat::Csv => {
            let mut s = String::from("graph_id,alpha,index,eigenvalue\n");
            for r in &rows {
                for (i, v) in r.eigenvalues.iter().enumerate() {
                    s.push_str(&format!(
                        "{},{},{},{:.16e}\n",
                        r.graph_id,
                        r.alpha,
                        i + 1,
                        v
                    ));
                }
            }
            s
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &rows {
                let vals: Vec<String> = r.eigenvalues.iter().map(|v| format!("{v:.10}")).collect();
                s.push_str(&format!("graph {}  alpha {}\n", r.graph_id, r.alpha));
                s.push_str(&format!(
                    "  n {}  W {}  S {}  Tr [{}, {}]\n",
                    r.n, r.wiener, r.s_sum, r.tr_min, r.tr_max
                ));
                s.push_str(&format!("  sigma [{}]\n", vals.join(", ")));
                s.push_str(&format!("  energy {:.10}\n", r.energy));
                match r.estrada {
                    Some(e) => s.push_str(&format!("  estrada {e:.10}\n")),
                    None => s.push_str("  estrada overflow\n"),
                }
            }
            s
        }
    };
    emit(args.out.as_ref(), &text)?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Error> {
    let corpus = if args.random {
        let (n_min, n_max) = parse_range(
            args.source
                .n
                .as_deref()
                .ok_or_else(|| Error::Config("--random needs --n".into()))?,
        )?;
        let (extra_min, extra_max) = parse_range(&args.extra)?;
        Corpus::Random {
            n_min,
            n_max,
            extra_min,
            extra_max,
            seeds: (args.seed..args.seed.saturating_add(args.seeds)).collect(),
        }
    } else if let (Some(f), None) = (&args.source.family, &args.source.input) {
        let (n_min, n_max) = parse_range(
            args.source
                .n
                .as_deref()
                .ok_or_else(|| Error::Config("--family needs --n".into()))?,
        )?;
        Corpus::Family {
            family: f.parse()?,
            n_min,
            n_max,
        }
    } else {
        Corpus::Graphs(load_graphs(&args.source)?)
    };
    let tol = match args.tol {
        Some(t) => t,
        None => default_tolerance()?,
    };
    let cfg = SweepConfig {
        alpha_grid: alpha_grid(args.alpha, args.alpha_grid.as_deref())?,
        tolerance: Tolerance::new(tol),
        corpus,
        bounds: BoundSelection::parse(&args.bounds)?,
        closed_forms: args.closed_forms,
        threads: args.threads,
    };
    let report = alphadist::run_sweep(&cfg)?;
    let text = match args.report {
        ReportFormat::Json => to_json(&report)?,
        ReportFormat::Csv => to_csv(&report)?,
        ReportFormat::Text => to_text(&report),
    };
    emit(args.out.as_ref(), &text)?;
    if report.has_violations() {
        for v in &report.summary.violation_list {
            let alpha = v.alpha.map(|a| a.to_string()).unwrap_or_else(|| "-".into());
            eprintln!(
                "violation: {} alpha={} {} slack={:e}",
                v.graph_id, alpha, v.bound_id, v.slack
            );
        }
        return Ok(1);
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
