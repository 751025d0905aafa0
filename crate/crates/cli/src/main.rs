use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use essgraph_cli::export::{self, Format, Kind};
use essgraph_cli::parse_range;
use essgraph_cli::report::{self, Options, SpectralMode};
use essgraph_cli::verify::{self, CheckKind, Family, Plan};
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "essgraph",
    version,
    about = "Spectra, energy and Wiener indices of essential ideal graphs E(Z_n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Common {
    /// Eigenvalue clustering tolerance.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Decimal places in printed eigenvalues and energy.
    #[arg(long, default_value_t = 9)]
    precision: u32,
    /// Largest graph order for the exact characteristic polynomial in automatic mode.
    #[arg(long, default_value_t = essgraph::exact::DEFAULT_EXACT_CAP)]
    exact_cap: usize,
    /// Always compute the exact characteristic polynomial and nullity.
    #[arg(long, conflicts_with = "numeric")]
    exact: bool,
    /// Numeric eigenvalues only.
    #[arg(long)]
    numeric: bool,
}

impl Common {
    fn options(&self, max_vertices: usize) -> Options {
        let mode = if self.exact {
            SpectralMode::Exact
        } else if self.numeric {
            SpectralMode::Numeric
        } else {
            SpectralMode::Auto
        };
        Options {
            tol: self.tol,
            max_vertices,
            exact_cap: self.exact_cap,
            mode,
            precision: self.precision,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one or more n.
    Analyze {
        #[arg(required = true)]
        n: Vec<u64>,
        #[arg(long, default_value_t = essgraph::graph::DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        #[command(flatten)]
        common: Common,
    },
    /// Check closed forms and theorems over a range or a family of n.
    Verify {
        /// Inclusive range `A..B`; without it the family generators are used.
        range: Option<String>,
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Number of distinct primes, `A..B`.
        #[arg(long)]
        k: Option<String>,
        /// Exponent range, `A..B`.
        #[arg(long)]
        m: Option<String>,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<u64>,
        #[arg(long = "check", value_enum, default_value = "all")]
        checks: Vec<CheckKind>,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        parallel: usize,
        #[arg(long, default_value_t = 512)]
        max_vertices: usize,
        #[arg(long, default_value_t = essgraph::exact::DEFAULT_EXACT_CAP)]
        exact_cap: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Write the graph, spectrum or indices of E(Z_n) to a file.
    Export {
        n: u64,
        #[arg(value_enum)]
        kind: Kind,
        path: PathBuf,
        /// Overrides the format implied by the file extension.
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, default_value_t = essgraph::graph::DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Verification,
    Input(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e).context("writing output"),
        _ => Ok(()),
    }
}

fn range_arg(s: Option<&str>, what: &str) -> anyhow::Result<Option<(u64, u64)>> {
    s.map(|s| {
        parse_range(s)
            .map_err(anyhow::Error::msg)
            .with_context(|| format!("invalid {what}"))
    })
    .transpose()
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze {
            n,
            max_vertices,
            format,
            common,
        } => {
            let opts = common.options(max_vertices);
            let reports = n
                .iter()
                .map(|&n| report::analyze(n, &opts).with_context(|| format!("n = {n}")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            match format {
                OutputFormat::Table => {
                    for r in &reports {
                        emit(&report::render_table(r, opts.precision))?;
                    }
                }
                OutputFormat::Json => {
                    let text = if reports.len() == 1 {
                        serde_json::to_string_pretty(&reports[0])
                    } else {
                        serde_json::to_string_pretty(&reports)
                    };
                    emit(&(text.context("serializing report")? + "\n"))?;
                }
                OutputFormat::Csv => {
                    emit(&report::render_csv(&reports, opts.precision).context("writing csv")?)?
                }
            }
            if reports.iter().all(|r| r.all_checks_pass()) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Verify {
            range,
            family,
            k,
            m,
            primes,
            checks,
            parallel,
            max_vertices,
            exact_cap,
            tol,
            format,
        } => {
            if let Some(&p) = primes.iter().find(|&&p| !essgraph::ring::is_prime(p)) {
                return Err(anyhow::anyhow!("--primes: {p} is not prime").into());
            }
            let plan = Plan {
                range: range_arg(range.as_deref(), "range")?,
                family,
                k: range_arg(k.as_deref(), "--k")?,
                m: range_arg(m.as_deref(), "--m")?,
                primes,
                checks,
                max_vertices,
                exact_cap,
                tol,
            };
            let summary = verify::run(&plan, parallel).context("starting worker pool")?;
            match format {
                OutputFormat::Table => emit(&verify::render_table(&summary))?,
                OutputFormat::Json => {
                    let text =
                        serde_json::to_string_pretty(&summary).context("serializing summary")?;
                    emit(&(text + "\n"))?
                }
                OutputFormat::Csv => emit(&verify::render_csv(&summary).context("writing csv")?)?,
            }
            if summary.ok() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Export {
            n,
            kind,
            path,
            format,
            max_vertices,
            common,
        } => {
            let opts = common.options(max_vertices);
            export::write(n, kind, &path, format, &opts)
                .with_context(|| format!("exporting {kind} of n = {n}"))?;
            Ok(())
        }
    }
}
