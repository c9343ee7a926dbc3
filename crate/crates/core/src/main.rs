use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use floyd_bound::oracle::{self, VerifyOptions, DEFAULT_EXHAUSTIVE_LIMIT, MAX_EXHAUSTIVE_LIMIT};
use floyd_bound::report::{self, Format, Report, ReportMeta};
use floyd_bound::{
    binary_profile, buildheap, distinguished_path, edge_cover, height_sum_formula, is_heap,
    kruskal_bound, special_path, subtree_height, worst_case, worst_case_bound, Error,
};

/// Worst-case comparison counts of Floyd's heap construction.
#[derive(Debug, Parser)]
#[command(name = "floyd-bound", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the binary profile of N and its comparison bound.
    Bound { n: usize },
    /// Write the worst-case input array for N keys.
    Generate {
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the construction on an array file and print its counters.
    Run { path: PathBuf },
    /// Check every N in LO..=HI and emit a report.
    Verify {
        lo: usize,
        hi: usize,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        exhaustive_limit: usize,
        /// Random permutations per N checked against the bound.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that special paths and the leftmost path tile the edges.
    Cover { n: usize },
}

/// Process exit codes.
mod exit {
    pub const CHECK_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const DATA: u8 = 3;
    pub const IO: u8 = 4;
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Io(_) => exit::IO,
        Error::Parse { .. } | Error::DuplicateKey(_) | Error::EmptyArray => exit::DATA,
        _ => exit::USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(exit::CHECK_FAILED),
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Returns whether every check of the command passed.
fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Bound { n } => cmd_bound(n),
        Command::Generate { n, output } => cmd_generate(n, output.as_deref()),
        Command::Run { path } => cmd_run(&path),
        Command::Verify {
            lo,
            hi,
            exhaustive_limit,
            samples,
            seed,
            format,
            output,
        } => {
            let options = VerifyOptions {
                exhaustive_limit,
                samples,
                seed,
            };
            cmd_verify(lo, hi, &options, format, output.as_deref())
        }
        Command::Cover { n } => cmd_cover(n),
    }
}

fn cmd_bound(n: usize) -> Result<bool, Error> {
    let p = binary_profile(n)?;
    let t = height_sum_formula(n)?;
    let bound = worst_case_bound(n)?;
    let mut out = io::stdout().lock();
    writeln!(out, "n={n}")?;
    writeln!(out, "digits={}", p.digit_string())?;
    writeln!(out, "mu={}", p.mu)?;
    writeln!(out, "sigma={}", p.sigma)?;
    writeln!(out, "lambda={}", p.lambda)?;
    writeln!(out, "k={}", p.k)?;
    writeln!(out, "floor_log={}", p.floor_log)?;
    writeln!(out, "bit_length={}", p.bit_length)?;
    writeln!(out, "t={t}")?;
    writeln!(out, "bound={bound}")?;
    if let Ok(kruskal) = kruskal_bound(n) {
        writeln!(out, "kruskal={kruskal}")?;
    }
    Ok(bound == 2 * t - u64::from(p.sigma))
}

fn cmd_generate(n: usize, output: Option<&Path>) -> Result<bool, Error> {
    let h = worst_case(n)?;
    match output {
        Some(path) => report::write_array(path, &h)?,
        None => io::stdout()
            .lock()
            .write_all(report::format_array(&h).as_bytes())?,
    }
    Ok(true)
}

fn cmd_run(path: &Path) -> Result<bool, Error> {
    let mut h = report::read_array(path)?;
    let n = h.len();
    let stats = buildheap(&mut h);
    let bound = worst_case_bound(n)?;
    let t = height_sum_formula(n)?;
    let heap_ok = is_heap(&h, 1);
    let within = stats.comparisons <= bound && stats.swaps <= t;
    let mut out = io::stdout().lock();
    writeln!(out, "n={n}")?;
    writeln!(out, "comparisons={}", stats.comparisons)?;
    writeln!(out, "swaps={}", stats.swaps)?;
    writeln!(out, "bound={bound}")?;
    writeln!(out, "t={t}")?;
    writeln!(out, "is_heap={heap_ok}")?;
    writeln!(out, "within_bound={within}")?;
    Ok(heap_ok && within)
}

fn cmd_verify(
    lo: usize,
    hi: usize,
    options: &VerifyOptions,
    format: Format,
    output: Option<&Path>,
) -> Result<bool, Error> {
    if options.exhaustive_limit > DEFAULT_EXHAUSTIVE_LIMIT
        && options.exhaustive_limit <= MAX_EXHAUSTIVE_LIMIT
    {
        eprintln!(
            "warning: exhaustive limit {} enumerates up to {}! permutations per n",
            options.exhaustive_limit, options.exhaustive_limit
        );
    }
    let rows = oracle::verify_range_with(lo, hi, options)?;
    let failures: Vec<usize> = rows.iter().filter(|r| !r.pass).map(|r| r.n).collect();

    let mut meta = ReportMeta::new("verify")
        .arg("lo", lo)
        .arg("hi", hi)
        .arg("exhaustive_limit", options.exhaustive_limit)
        .arg("samples", options.samples);
    if options.samples.is_some() {
        meta = meta.arg("seed", options.seed);
        meta.seed = Some(options.seed);
    }
    let mut out = open_output(output)?;
    Report::new(meta, format, rows).write_to(&mut out)?;
    out.flush()?;

    if !failures.is_empty() {
        eprintln!(
            "{} of {} rows failed: {:?}",
            failures.len(),
            hi - lo + 1,
            failures
        );
    }
    Ok(failures.is_empty())
}

fn cmd_cover(n: usize) -> Result<bool, Error> {
    let cover = edge_cover(n)?;
    let path = distinguished_path(n)?;
    let expected = cover.edges - (binary_profile(n)?.floor_log as usize);
    let mut out = io::stdout().lock();
    writeln!(out, "n={n}")?;
    writeln!(out, "covered={}", cover.covered)?;
    writeln!(out, "edges={}", cover.edges)?;
    writeln!(out, "special_length_sum={}", cover.special_length_sum)?;
    writeln!(out, "expected_sum={expected}")?;
    writeln!(out, "leftmost_edges={}", cover.leftmost_edges)?;
    writeln!(out, "overlaps={}", cover.overlaps)?;
    writeln!(out, "uncovered={}", cover.uncovered)?;
    writeln!(out, "node\tlength\theight\ton_path")?;
    for j in 1..=n / 2 {
        let sp = special_path(j, n)?;
        writeln!(
            out,
            "{j}\t{}\t{}\t{}",
            sp.length,
            subtree_height(j, n)?,
            path.contains(j)
        )?;
    }
    Ok(cover.covered)
}
