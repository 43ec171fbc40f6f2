use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hiernet::analytic::ratio_to_f64;
use hiernet::empirical::{bfs_distances, empirical_report, match_metrics};
use hiernet::io::{run_sweep, write_dot, write_edgelist, write_report, SweepSpec};
use hiernet::{analytic_report, enumerate_edges, oracle, verify, HkError, Label, Params, DEFAULT_CAP};

#[derive(Parser)]
#[command(name = "hiernet", version, about = "Hierarchical small-world scale-free graphs H(n,k)")]
struct Cli {
    /// Maximum number of vertices for any command that builds the graph.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Dims {
    /// Order of the seed complete graph (n ≥ 2).
    #[arg(short = 'n')]
    n: u64,
    /// Depth of the construction (k ≥ 1).
    #[arg(short = 'k')]
    k: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graph as an edge list or DOT document.
    Generate {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Print closed-form and/or measured metrics.
    Stats {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = Mode::Analytic)]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Run every invariant suite on the materialized graph.
    Verify {
        #[command(flatten)]
        dims: Dims,
    },
    /// Distance between two labels from the label oracle.
    Dist {
        #[command(flatten)]
        dims: Dims,
        #[arg(long = "from")]
        from: String,
        #[arg(long = "to")]
        to: String,
        /// Also build the graph and compare against BFS.
        #[arg(long)]
        check_bfs: bool,
    },
    /// Evaluate one metric over an (n, k) grid as CSV.
    Sweep {
        /// A:B:S, inclusive.
        #[arg(long = "n-range")]
        n_range: String,
        /// A:B, inclusive.
        #[arg(long = "k-range", default_value = "1:6")]
        k_range: String,
        /// clustering, transitivity, size, diameter or gamma_theory.
        #[arg(long)]
        metric: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Analytic,
    Empirical,
    Both,
}

enum Failure {
    Usage(String),
    Verification(String),
    Runtime(String),
}

impl From<HkError> for Failure {
    fn from(e: HkError) -> Self {
        match e {
            HkError::Io(_) | HkError::Disconnected(_) | HkError::Overflow => Failure::Runtime(e.to_string()),
            HkError::BudgetExceeded { .. } => {
                Failure::Usage(format!("{e} (try `stats --mode analytic` or `dist`, or raise --cap)"))
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn sink(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn params(d: Dims) -> Result<Params, Failure> {
    Ok(Params::validate(d.n, d.k)?)
}

fn generate(cap: u64, dims: Dims, format: Format, output: Option<&PathBuf>) -> Outcome {
    let p = params(dims)?;
    let graph = enumerate_edges(&p, cap)?;
    let out = sink(output)?;
    match format {
        Format::Edgelist => write_edgelist(&graph, out)?,
        Format::Dot => write_dot(&graph, out)?,
    }
    Ok(())
}

fn stats(cap: u64, dims: Dims, mode: Mode, json: bool) -> Outcome {
    let p = params(dims)?;
    let analytic = analytic_report(&p)?;
    let empirical = match mode {
        Mode::Analytic => None,
        _ => Some(empirical_report(&enumerate_edges(&p, cap)?)?),
    };
    let matches = empirical.as_ref().map(|e| match_metrics(&analytic, e)).transpose()?;
    let mut out = sink(None)?;
    if json {
        write_report(&analytic, empirical.as_ref(), &mut out)?;
    } else {
        if mode != Mode::Empirical {
            writeln!(out, "{p} analytic")?;
            writeln!(out, "  order          {}", analytic.order)?;
            writeln!(out, "  size           {}", analytic.size)?;
            writeln!(out, "  radius         {}", analytic.radius)?;
            writeln!(out, "  diameter       {}", analytic.diameter)?;
            writeln!(out, "  avg degree     {} ≈ {:.6} (asymptotic {})", analytic.avg_degree, ratio_to_f64(&analytic.avg_degree), analytic.avg_degree_asymptotic)?;
            writeln!(out, "  clustering     {} ≈ {:.6}", analytic.clustering_coefficient, ratio_to_f64(&analytic.clustering_coefficient))?;
            writeln!(out, "  triangles      {}", analytic.triangles)?;
            writeln!(out, "  triples        {}", analytic.triples)?;
            writeln!(out, "  transitivity   {} ≈ {:.6}", analytic.transitivity, ratio_to_f64(&analytic.transitivity))?;
            match analytic.gamma_theory {
                Some(g) => writeln!(out, "  gamma          {g:.6}")?,
                None => writeln!(out, "  gamma          undefined for n=2")?,
            }
            writeln!(out, "  classes")?;
            for row in &analytic.class_stats {
                writeln!(out, "    {:<28} count {:<12} degree {:<10} clustering {}", row.class.name(), row.count, row.degree, row.clustering)?;
            }
        }
        if let Some(e) = &empirical {
            writeln!(out, "{p} empirical")?;
            writeln!(out, "  order          {}", e.order)?;
            writeln!(out, "  size           {}", e.size)?;
            writeln!(out, "  radius         {}", e.radius)?;
            writeln!(out, "  diameter       {}", e.diameter)?;
            writeln!(out, "  root ecc.      {}", e.root_eccentricity)?;
            writeln!(out, "  clustering     {}", e.clustering_coefficient)?;
            writeln!(out, "  triangles      {}", e.triangles)?;
            writeln!(out, "  triples        {}", e.triples)?;
            writeln!(out, "  transitivity   {}", e.transitivity)?;
            let hist: Vec<String> = e.degree_histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
            writeln!(out, "  degrees        {}", hist.join(" "))?;
        }
        if mode == Mode::Both {
            for (metric, ok) in matches.iter().flatten() {
                writeln!(out, "  match {:<22} {}", metric, if *ok { "yes" } else { "NO" })?;
            }
        }
    }
    out.flush()?;
    if mode == Mode::Both {
        if let Some(bad) = matches.iter().flatten().find(|(_, ok)| !ok) {
            return Err(Failure::Verification(format!("{} does not match its closed form", bad.0)));
        }
    }
    Ok(())
}

fn verify_cmd(cap: u64, dims: Dims) -> Outcome {
    let p = params(dims)?;
    let outcomes = verify::run_all(&p, cap)?;
    let mut out = sink(None)?;
    for c in &outcomes {
        writeln!(out, "{:<4} {:<34} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
    }
    out.flush()?;
    match outcomes.iter().find(|c| !c.passed) {
        Some(c) => Err(Failure::Verification(format!("{}: {}", c.name, c.detail))),
        None => Ok(()),
    }
}

fn dist(cap: u64, dims: Dims, from: &str, to: &str, check_bfs: bool) -> Outcome {
    let p = params(dims)?;
    let x = Label::parse(from, &p)?;
    let y = Label::parse(to, &p)?;
    let d = oracle::distance(&x, &y, &p)?;
    println!("{d}");
    if check_bfs {
        let graph = enumerate_edges(&p, cap)?;
        let bfs = bfs_distances(&graph, x.to_id(&p)? as u32)[y.to_id(&p)? as usize];
        if bfs != d {
            return Err(Failure::Verification(format!("oracle says {d}, bfs says {bfs}")));
        }
        eprintln!("bfs agrees");
    }
    Ok(())
}

fn sweep(n_range: &str, k_range: &str, metric: &str, output: Option<&PathBuf>) -> Outcome {
    let spec = SweepSpec::parse(n_range, k_range, metric)?;
    run_sweep(&spec, sink(output)?)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli.cap;
    let result = match &cli.command {
        Command::Generate { dims, format, output } => generate(cap, *dims, *format, output.as_ref()),
        Command::Stats { dims, mode, json } => stats(cap, *dims, *mode, *json),
        Command::Verify { dims } => verify_cmd(cap, *dims),
        Command::Dist { dims, from, to, check_bfs } => dist(cap, *dims, from, to, *check_bfs),
        Command::Sweep { n_range, k_range, metric, output } => sweep(n_range, k_range, metric, output.as_ref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
