//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 file or
//! data error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use entvol::algebra::generate_basis;
use entvol::bloch::{bell_density, coherence_vector};
use entvol::entangle::{ppt_report, region_scan};
use entvol::euler::{compose_unitary, conjugate, su4_euler, su6_euler};
use entvol::volume::{
    entangling_volume, integrate_volume, symplex_bound_check, symplex_bound_upper, symplex_factor,
    Chart, IntegrationMethod,
};
use entvol::Group;
use entvol_cli::matfile::MatrixFile;
use entvol_cli::output::{
    coherence_csv, estimate_json, estimate_text, fmt_f64, gellmann_csv, gellmann_json, ppt_json,
    ppt_text,
};
use entvol_cli::{resolve_seed, verify};

#[derive(Parser)]
#[command(
    name = "entvol",
    version,
    about = "Gell-Mann bases, Euler-angle entangling operations, partial-transpose tests, and state-space volumes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Su4,
    Su6,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::Su4 => Group::Su4,
            GroupArg::Su6 => Group::Su6,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartArg {
    Cp1,
    #[value(name = "cp3-inhomog")]
    Cp3Inhomog,
    #[value(name = "cp3-euler")]
    Cp3Euler,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    #[value(name = "monte-carlo")]
    MonteCarlo,
    #[value(name = "tensor-grid")]
    TensorGrid,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the Gell-Mann basis of su(N).
    Gellmann {
        #[arg(long)]
        n: usize,
        /// JSON output (default).
        #[arg(long)]
        json: bool,
        /// CSV output instead of JSON.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Project a density matrix onto its coherence vector (CSV).
    Decompose {
        /// Matrix file (JSON).
        #[arg(long)]
        rho: PathBuf,
        /// Hilbert-space dimension of the basis.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the k-th Bell state density matrix (JSON).
    Bell {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compose an Euler factorization, optionally conjugating a state.
    Compose {
        #[arg(long)]
        group: GroupArg,
        /// Comma-separated angles (15 for su4, 24 for su6).
        #[arg(long)]
        angles: String,
        /// Apply the unitary to this state and emit U rho U^dagger.
        #[arg(long)]
        apply: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partial-transpose test of a bipartite state.
    Ppt {
        #[arg(long)]
        rho: PathBuf,
        #[arg(long)]
        da: Option<usize>,
        #[arg(long)]
        db: Option<usize>,
        /// Negativity threshold for the verdict.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Uniform scan of the diagonal-state angles with branch classification.
    #[command(name = "region-scan")]
    RegionScan {
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// CSV output path (stdout when omitted).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Integrate a Fubini-Study chart or report an analytic volume.
    Volume {
        #[arg(long, conflicts_with = "analytic")]
        chart: Option<ChartArg>,
        /// Closed-form entangling-manifold volume for a group.
        #[arg(long)]
        analytic: Option<GroupArg>,
        #[arg(long)]
        method: Option<MethodArg>,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simplex measure factor and the hypothesized bound.
    Symplex {
        #[arg(long)]
        group: GroupArg,
        #[arg(long)]
        s: f64,
        #[arg(long = "alpha-s")]
        alpha_s: f64,
        /// Comma-separated range bounds: lo,hi per eigenvalue (8 or 12 numbers).
        #[arg(long)]
        ranges: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full verification suite.
    Verify {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    /// Bad argument values: exit 2.
    Usage(String),
    /// File or data problems: exit 3.
    Data(String),
    /// Verification criteria failed: exit 1.
    VerificationFailed,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::VerificationFailed => 1,
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Data(msg) => eprintln!("error: {msg}"),
                CliError::VerificationFailed => eprintln!("error: verification failed"),
            }
            ExitCode::from(e.code())
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn read_matrix(path: &Path) -> Result<MatrixFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?;
    MatrixFile::parse(&text).map_err(CliError::Data)
}

fn parse_numbers(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("cannot parse number '{tok}'")))
        })
        .collect()
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gellmann {
            n,
            json: _,
            csv,
            out,
        } => {
            let basis = generate_basis::<f64>(n).map_err(|e| CliError::Usage(e.to_string()))?;
            let content = if csv {
                gellmann_csv(basis.generators())
            } else {
                gellmann_json(basis.generators())
            };
            emit(&out, &content)
        }
        Command::Decompose { rho, n, out } => {
            let file = read_matrix(&rho)?;
            if file.n != n {
                return Err(CliError::Usage(format!(
                    "--n {n} does not match matrix dimension {}",
                    file.n
                )));
            }
            let basis = generate_basis::<f64>(n).map_err(|e| CliError::Usage(e.to_string()))?;
            let density = file.to_density(None, None).map_err(CliError::Data)?;
            let vector =
                coherence_vector(&density, &basis).map_err(|e| CliError::Data(e.to_string()))?;
            emit(&out, &coherence_csv(vector.components()))
        }
        Command::Bell { k, out } => {
            let rho = bell_density::<f64>(k).map_err(|e| CliError::Usage(e.to_string()))?;
            let file = MatrixFile::from_matrix(rho.matrix(), rho.bipartition());
            emit(&out, &file.to_canonical_json())
        }
        Command::Compose {
            group,
            angles,
            apply,
            out,
        } => {
            let group: Group = group.into();
            let angles = parse_numbers(&angles)?;
            let factorization = match group {
                Group::Su4 => su4_euler(&angles),
                Group::Su6 => su6_euler(&angles),
            }
            .map_err(|e| CliError::Usage(e.to_string()))?;
            let basis = generate_basis::<f64>(group.dimension())
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let u = compose_unitary(&factorization, &basis)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let content = match apply {
                None => MatrixFile::from_matrix(&u, None).to_canonical_json(),
                Some(path) => {
                    let file = read_matrix(&path)?;
                    let (da, db) = group.bipartition();
                    let rho = file
                        .to_density(Some(da), Some(db))
                        .map_err(CliError::Data)?;
                    let rotated = conjugate(&u, &rho).map_err(|e| CliError::Data(e.to_string()))?;
                    MatrixFile::from_matrix(rotated.matrix(), rotated.bipartition())
                        .to_canonical_json()
                }
            };
            emit(&out, &content)
        }
        Command::Ppt {
            rho,
            da,
            db,
            tol,
            json,
            out,
        } => {
            let file = read_matrix(&rho)?;
            let density = file.to_density(da, db).map_err(CliError::Data)?;
            let (da, db) = density.bipartition().ok_or_else(|| {
                CliError::Usage("give --da and --db (or dims in the file)".into())
            })?;
            let tol = tol.unwrap_or(1e-10);
            let report = ppt_report(&density, tol).map_err(|e| CliError::Usage(e.to_string()))?;
            let content = if json {
                ppt_json(&report, da, db, tol)
            } else {
                ppt_text(&report, da, db, tol)
            };
            emit(&out, &content)
        }
        Command::RegionScan { samples, seed, csv } => {
            let samples = samples.unwrap_or(10_000);
            let (seed, from_env) = resolve_seed(seed);
            let rows = region_scan::<f64>(samples, seed);
            let mut content = String::with_capacity(rows.len() * 90);
            content.push_str(&format!(
                "# seed = {seed}{}\n",
                if from_env { " (from ENTVOL_SEED)" } else { "" }
            ));
            content.push_str("theta1,theta2,theta3,branch,tr_rho2\n");
            for row in &rows {
                content.push_str(&format!(
                    "{},{},{},{},{}\n",
                    fmt_f64(row.theta[0]),
                    fmt_f64(row.theta[1]),
                    fmt_f64(row.theta[2]),
                    row.branch.unwrap_or(0),
                    fmt_f64(row.tr_rho_d_sq)
                ));
            }
            emit(&csv, &content)
        }
        Command::Volume {
            chart,
            analytic,
            method,
            samples,
            seed,
            json,
            out,
        } => {
            if let Some(group) = analytic {
                let group: Group = group.into();
                let value = entangling_volume::<f64>(group);
                let content = if json {
                    format!("{{\"group\":\"{group}\",\"value\":{}}}\n", fmt_f64(value))
                } else {
                    format!("{group} entangling volume: {}\n", fmt_f64(value))
                };
                return emit(&out, &content);
            }
            let Some(chart) = chart else {
                return Err(CliError::Usage("give either --chart or --analytic".into()));
            };
            let chart = match chart {
                ChartArg::Cp1 => Chart::<f64>::cp1(),
                ChartArg::Cp3Inhomog => Chart::<f64>::cp3_inhomogeneous(),
                ChartArg::Cp3Euler => Chart::<f64>::cp3_euler(),
            };
            let method = match method.unwrap_or(MethodArg::MonteCarlo) {
                MethodArg::MonteCarlo => IntegrationMethod::MonteCarlo,
                MethodArg::TensorGrid => IntegrationMethod::TensorGrid,
            };
            let samples = samples.unwrap_or(100_000);
            let (seed, _) = resolve_seed(seed);
            let estimate = integrate_volume(&chart, method, samples, seed)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let content = if json {
                estimate_json(&estimate)
            } else {
                estimate_text(&estimate)
            };
            emit(&out, &content)
        }
        Command::Symplex {
            group,
            s,
            alpha_s,
            ranges,
            json,
            out,
        } => {
            let group: Group = group.into();
            let numbers = parse_numbers(&ranges)?;
            if numbers.len() % 2 != 0 {
                return Err(CliError::Usage("ranges must come in lo,hi pairs".into()));
            }
            let pairs: Vec<[f64; 2]> = numbers.chunks(2).map(|c| [c[0], c[1]]).collect();
            let factor = symplex_factor::<f64>(group, s, alpha_s, &pairs)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let product = factor.omega * s.powi(pairs.len() as i32) / alpha_s;
            let bound = symplex_bound_upper::<f64>(group, s);
            let within = symplex_bound_check::<f64>(group, s, product);
            let content = if json {
                format!(
                    "{{\"group\":\"{group}\",\"s\":{},\"alpha_s\":{},\"omega\":{},\"volume\":{},\"product\":{},\"bound_upper\":{},\"within_bound\":{}}}\n",
                    fmt_f64(s),
                    fmt_f64(alpha_s),
                    fmt_f64(factor.omega),
                    fmt_f64(factor.volume),
                    fmt_f64(product),
                    fmt_f64(bound),
                    within
                )
            } else {
                format!(
                    "omega: {}\nvolume: {}\nrange product: {} (bound {}, within: {})\n",
                    fmt_f64(factor.omega),
                    fmt_f64(factor.volume),
                    fmt_f64(product),
                    fmt_f64(bound),
                    within
                )
            };
            emit(&out, &content)
        }
        Command::Verify { seed, out } => {
            let (seed, from_env) = resolve_seed(seed);
            let mut report = verify::run(seed);
            if from_env {
                report
                    .criteria
                    .first_mut()
                    .expect("criteria exist")
                    .details
                    .insert(0, "seed taken from ENTVOL_SEED".into());
            }
            emit(&out, &report.render())?;
            if report.all_pass() {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
    }
}
