use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use corz::abacus::{count_cores, n_ell};
use corz::census::{self, verify, CensusConfig, Format};
use corz::numtheory::{delta_ell, inv_alpha, require_prime, sigma_twisted};
use corz::partition::{count_p, count_p_regular, hagis_estimate, hr_estimate, partition_counts, regular_counts};
use corz::Error;

#[derive(Parser)]
#[command(name = "corz", version, about = "Zero entries of S_n character tables indexed by l-cores")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a single exact value.
    Count(CountArgs),
    /// Sweep n and l, emitting a CSV or JSON table.
    Census(CensusArgs),
    /// Run a named verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Compare asymptotic estimates against exact counts.
    Asymptotics(AsymptoticsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    /// p(n)
    P,
    /// p_A(n), partitions with no part divisible by A (uses --ell as A)
    PRegular,
    /// c_l(n), number of l-cores of n
    Cores,
    /// twisted divisor sum sigma_l(n)
    Sigma,
    /// delta_l = (l^2 - 1)/24
    Delta,
    /// 1/alpha_l
    InvAlpha,
    /// N_l, size of the extremal abacus
    NEll,
}

#[derive(Args)]
struct CountArgs {
    quantity: Quantity,
    #[arg(long, short)]
    n: Option<usize>,
    #[arg(long, short)]
    ell: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct CensusArgs {
    /// Moduli, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
    ell: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 14)]
    n_max: usize,
    /// Largest n for which Z_l(n) is computed exactly.
    #[arg(long, default_value_t = census::DEFAULT_CAP_EXACT)]
    cap_exact: usize,
    /// Largest n for which Z*_l(n) is computed exactly.
    #[arg(long, default_value_t = census::DEFAULT_CAP_STAR)]
    cap_star: usize,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "CORZ_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: theorem2, lemma1, closed-forms, orthogonality, abacus, constants, all.
    suite: String,
}

#[derive(Args)]
struct AsymptoticsArgs {
    #[arg(long, default_value_t = 50)]
    n_min: usize,
    #[arg(long, default_value_t = 500)]
    n_max: usize,
    #[arg(long, default_value_t = 50)]
    step: usize,
    /// Regularity modulus A for the p_A(n) columns.
    #[arg(long, default_value_t = 5)]
    ell: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("corz: {e}");
            ExitCode::from(2)
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::InvalidConfig(format!("{flag} is required for this quantity")))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Count(args) => {
            let value = match args.quantity {
                Quantity::P => count_p(need(args.n, "--n")?).to_string(),
                Quantity::PRegular => {
                    let a = need(args.ell, "--ell")?;
                    if a < 2 {
                        return Err(Error::InvalidConfig("--ell must be at least 2".into()));
                    }
                    count_p_regular(need(args.n, "--n")?, a).to_string()
                }
                Quantity::Cores => {
                    let t = need(args.ell, "--ell")?;
                    if t < 1 {
                        return Err(Error::InvalidConfig("--ell must be positive".into()));
                    }
                    count_cores(need(args.n, "--n")?, t).to_string()
                }
                Quantity::Sigma => {
                    let ell = need(args.ell, "--ell")?;
                    require_prime(ell, 5)?;
                    let n = need(args.n, "--n")?;
                    if n == 0 {
                        return Err(Error::InvalidConfig("--n must be positive".into()));
                    }
                    sigma_twisted(n, ell).to_string()
                }
                Quantity::Delta => delta_ell(need(args.ell, "--ell")?)?.to_string(),
                Quantity::InvAlpha => inv_alpha(need(args.ell, "--ell")?)?.to_string(),
                Quantity::NEll => {
                    let ell = need(args.ell, "--ell")?;
                    require_prime(ell, 2)?;
                    n_ell(ell).to_string()
                }
            };
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Census(args) => {
            let config = CensusConfig {
                n_min: args.n_min,
                n_max: args.n_max,
                ells: args.ell,
                cap_exact: args.cap_exact,
                cap_star: args.cap_star,
                jobs: args.jobs,
                format: match args.format {
                    FormatArg::Csv => Format::Csv,
                    FormatArg::Json => Format::Json,
                },
                out: args.out.clone(),
                cache_dir: args.cache_dir,
            };
            let records = census::run_census(&config)?;
            if args.out.is_none() {
                census::write_records(io::stdout().lock(), &records, config.format)
                    .map_err(|e| Error::io("<stdout>", e))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let names: Vec<&str> = if args.suite == "all" {
                verify::SUITES.to_vec()
            } else {
                vec![args.suite.as_str()]
            };
            let mut reports = Vec::new();
            for name in names {
                reports.push(verify::verify(name)?);
            }
            let all_passed = reports.iter().all(|r| r.passed);
            let mut out = io::stdout().lock();
            let json = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])?
            } else {
                serde_json::to_string_pretty(&reports)?
            };
            writeln!(out, "{json}").map_err(|e| Error::io("<stdout>", e))?;
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Asymptotics(args) => {
            if args.n_min == 0 || args.step == 0 || args.ell < 2 {
                return Err(Error::InvalidConfig(
                    "need n-min >= 1, step >= 1 and ell >= 2".into(),
                ));
            }
            let p = partition_counts(args.n_max);
            let p_reg = regular_counts(args.n_max, args.ell);
            let mut out = io::stdout().lock();
            let a = args.ell;
            let write = |out: &mut io::StdoutLock, line: String| {
                writeln!(out, "{line}").map_err(|e| Error::io("<stdout>", e))
            };
            write(
                &mut out,
                format!("n,p_n,hr_estimate,hr_ratio,p_{a}_n,hagis_estimate,hagis_ratio"),
            )?;
            for n in (args.n_min..=args.n_max).step_by(args.step) {
                let exact = ratio_base(&p[n]);
                let exact_reg = ratio_base(&p_reg[n]);
                let hr = hr_estimate(n);
                let hg = hagis_estimate(n, a);
                write(
                    &mut out,
                    format!(
                        "{n},{},{hr:.6e},{:.9},{},{hg:.6e},{:.9}",
                        p[n],
                        hr / exact,
                        p_reg[n],
                        hg / exact_reg
                    ),
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn ratio_base(v: &num_bigint::BigUint) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::INFINITY)
}
