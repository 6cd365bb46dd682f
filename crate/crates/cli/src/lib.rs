//! Command-line front end: censuses, single-set verification, dualization,
//! reduction certificates, isomorphism checks, and catalog export.
//!
//! Exit codes: 0 on success (and for `verify` of a Cremona set), 1 when
//! `verify` is handed a valid set that is not Cremona, 2 for usage, parse,
//! or precondition errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use cremona_core::{
    canonical_form, catalog_csv, catalog_json_string, census, dual_complement, find_isomorphism,
    is_cremona, reduce_to_base, CensusQuery, CensusReport, MonomialSet, StepKind,
};

#[derive(Parser)]
#[command(name = "cremona", version, about = "Exact census engine for square-free monomial Cremona transformations", long_about = None)]
struct Cli {
    /// Worker threads for the census (default: CREMONA_THREADS or all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Print runtime and search statistics
    #[arg(long, global = true)]
    stats: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count Cremona sets per degree and optionally write the catalog
    Census {
        /// Number of variables (3..=8)
        #[arg(long)]
        n: usize,
        /// Restrict to a single degree
        #[arg(long)]
        d: Option<usize>,
        /// Write the JSON catalog to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Allow search spaces beyond the safety threshold
        #[arg(long)]
        allow_large: bool,
    },
    /// Decide whether a monomial set is Cremona
    Verify {
        /// The set, e.g. "x1x2x3, x1x2x4, x1x3x4, x2x3x4"
        set: String,
    },
    /// Print the dual complement of a square-free set
    Dual { set: String },
    /// Reduce a set by leaf deletion and root plucking, printing the certificate
    Reduce {
        set: String,
        /// Print the certificate as JSON
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two sets are isomorphic
    Orbit {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Write the full classification for every degree
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Runs the CLI against explicit argv and output sinks; returns the exit
/// status.
pub fn run(
    args: &[String],
    stdout: &mut (dyn Write + Send),
    stderr: &mut (dyn Write + Send),
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help and --version as "errors" with status 0
            let rendered = e.render().to_string();
            if e.exit_code() == 0 {
                let _ = write!(stdout, "{rendered}");
                return 0;
            }
            let _ = write!(stderr, "{rendered}");
            return 2;
        }
    };

    let threads = cli.threads.or_else(|| {
        std::env::var("CREMONA_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    let outcome = match threads {
        Some(k) if k > 0 => {
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
                Ok(pool) => pool,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    return 2;
                }
            };
            pool.install(|| dispatch(&cli, stdout))
        }
        _ => dispatch(&cli, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut (dyn Write + Send)) -> Result<i32, cremona_core::Error> {
    match &cli.command {
        Command::Census {
            n,
            d,
            json,
            allow_large,
        } => {
            let start = Instant::now();
            let report = run_census(*n, *d, *allow_large)?;
            let _ = writeln!(stdout, "n={n} square-free monomial Cremona census");
            let _ = writeln!(stdout, "  d  count");
            for (d, count) in report.counts() {
                let _ = writeln!(stdout, "{d:>3}  {count}");
            }
            let _ = writeln!(stdout, "total {}", report.total());
            if cli.stats {
                let examined: u64 = report.degrees.iter().map(|dc| dc.examined).sum();
                let _ = writeln!(
                    stdout,
                    "stats: examined {examined} subsets in {:?}",
                    start.elapsed()
                );
            }
            if let Some(path) = json {
                fs::write(path, catalog_json_string(&report)).map_err(|e| {
                    cremona_core::Error::Precondition(format!("write {}: {e}", path.display()))
                })?;
            }
            Ok(0)
        }
        Command::Verify { set } => {
            let f = MonomialSet::parse(set)?;
            let v = is_cremona(&f);
            let word = if v.is_cremona {
                "CREMONA"
            } else {
                "NOT CREMONA"
            };
            let _ = writeln!(stdout, "{word} det={} d={}", v.determinant, v.degree);
            Ok(if v.is_cremona { 0 } else { 1 })
        }
        Command::Dual { set } => {
            let f = MonomialSet::parse(set)?;
            let _ = writeln!(stdout, "{}", dual_complement(&f)?);
            Ok(0)
        }
        Command::Reduce { set, json } => {
            let f = MonomialSet::parse(set)?;
            let cert = reduce_to_base(&f)?;
            if *json {
                let _ = writeln!(stdout, "{}", cert.to_json_string());
            } else {
                for (i, step) in cert.steps.iter().enumerate() {
                    let kind = match step.kind {
                        StepKind::DeleteLeaf => "DELETE_LEAF",
                        StepKind::PluckRoot => "PLUCK_ROOT",
                        StepKind::Dualize => "DUALIZE",
                    };
                    match step.variable {
                        Some(v) => {
                            let _ = writeln!(stdout, "{:>3}. {kind} x{v}", i + 1);
                        }
                        None => {
                            let _ = writeln!(stdout, "{:>3}. {kind}", i + 1);
                        }
                    }
                }
                let terminal = match cert.terminal {
                    cremona_core::Terminal::BaseIdentity => "BASE_IDENTITY",
                    cremona_core::Terminal::BaseInvolution => "BASE_INVOLUTION",
                    cremona_core::Terminal::BaseOddCycle => "BASE_ODD_CYCLE",
                    cremona_core::Terminal::DeterminantVerdict => "DETERMINANT_VERDICT",
                };
                let _ = writeln!(stdout, "terminal {terminal} det={}", cert.terminal_det);
                let _ = writeln!(stdout, "terminal set {}", cert.terminal_set());
                let _ = writeln!(
                    stdout,
                    "{}",
                    if cert.is_cremona() {
                        "CREMONA"
                    } else {
                        "NOT CREMONA"
                    }
                );
            }
            Ok(0)
        }
        Command::Orbit { a, b } => {
            let fa = MonomialSet::parse(a)?;
            let fb = MonomialSet::parse(b)?;
            if fa.is_square_free() && fb.is_square_free() && fa.n() == fb.n() {
                // cheap decision through canonical forms before the witness
                if canonical_form(&fa) != canonical_form(&fb) {
                    let _ = writeln!(stdout, "NOT ISOMORPHIC");
                    return Ok(0);
                }
            }
            match find_isomorphism(&fa, &fb) {
                Some(p) => {
                    let _ = writeln!(stdout, "ISOMORPHIC witness {p}");
                }
                None => {
                    let _ = writeln!(stdout, "NOT ISOMORPHIC");
                }
            }
            Ok(0)
        }
        Command::Catalog {
            n,
            format,
            out,
            allow_large,
        } => {
            let report = run_census(*n, None, *allow_large)?;
            let rendered = match format {
                Format::Json => catalog_json_string(&report),
                Format::Csv => catalog_csv(&report),
            };
            match out {
                Some(path) => fs::write(path, rendered).map_err(|e| {
                    cremona_core::Error::Precondition(format!("write {}: {e}", path.display()))
                })?,
                None => {
                    let _ = write!(stdout, "{rendered}");
                }
            }
            Ok(0)
        }
    }
}

fn run_census(
    n: usize,
    d: Option<usize>,
    allow_large: bool,
) -> Result<CensusReport, cremona_core::Error> {
    let mut query = match d {
        Some(d) => CensusQuery::single_degree(n, d),
        None => CensusQuery::all_degrees(n),
    };
    query.allow_large = allow_large;
    census(&query)
}
