//! Command-line front end: argument handling, model loading and output.

pub mod error;
pub mod format;
pub mod kron;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use toric_core::indispensable::{lawrence_uniqueness, monomials_for_display, sorted_for_display};
use toric_core::{grobner, Analysis, Config, ModelMatrix, OrderMatrix};

pub use error::CliError;
pub use format::Format;
pub use kron::{build_kronecker, KroneckerSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuiltinModel {
    /// The 16-variable binary marginal independence model on the
    /// four-cycle with one chord.
    PaperExample,
}

impl BuiltinModel {
    pub fn kronecker_spec(self) -> KroneckerSpec {
        match self {
            BuiltinModel::PaperExample => KroneckerSpec::independence_model(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Method {
    Nabla,
    Grobner,
    #[default]
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "toric", version, about = "Markov bases and indispensable binomials of toric ideals")]
pub struct Cli {
    /// Matrix file: a `d r` header line and `d` rows of `r` integers.
    #[arg(short, long, global = true, conflicts_with = "model")]
    input: Option<PathBuf>,
    /// Use a built-in model instead of a file.
    #[arg(long, global = true, value_enum)]
    model: Option<BuiltinModel>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,
    /// Abort when a fiber grows beyond this many monomials.
    #[arg(long, global = true, default_value_t = toric_core::fiber::DEFAULT_FIBER_CAP)]
    fiber_cap: usize,
    /// Worker threads for independent Gröbner runs and fibers (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: CommandArg,
}

#[derive(Debug, Subcommand)]
enum CommandArg {
    /// Check the matrix and print it with its grading.
    Validate,
    /// List the monomials of one degree.
    Fiber {
        #[arg(long)]
        degree: String,
    },
    /// The Eliahou complex of one degree: vertices, edges, components.
    Nabla {
        #[arg(long)]
        degree: String,
    },
    /// Minimal degrees with fiber and component statistics.
    Degrees,
    /// Reduced Gröbner basis of the toric ideal.
    Grobner {
        /// Degree reverse lexicographic order with this variable (1-based) lowest.
        #[arg(long, default_value_t = 1, conflicts_with = "order_matrix")]
        lowest: usize,
        /// Explicit order matrix file (`k r` header, `k` rows).
        #[arg(long, alias = "matrix-order")]
        order_matrix: Option<PathBuf>,
    },
    /// A minimal binomial generating set.
    Markov,
    /// Indispensable binomials.
    Indispensable {
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        /// Read the indispensable binomials below this degree off its complex.
        #[arg(long, conflicts_with = "method")]
        degree: Option<String>,
    },
    /// Indispensable monomials.
    Monomials {
        /// Compute them from the complex of this degree only.
        #[arg(long)]
        degree: Option<String>,
    },
    /// Whether the minimal binomial generating set is unique.
    Verdict,
    /// The same for the Lawrence lifting.
    LawrenceVerdict,
    /// Print a matrix built from stacked Kronecker products.
    Kron {
        /// e.g. `ones(2)*id(4)*id(2); id(4)*ones(2)*id(2)`; defaults to the built-in model.
        #[arg(long)]
        spec: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Builtin(BuiltinModel),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Fiber,
    Nabla,
    Degrees,
    Grobner { lowest: usize, order_matrix: Option<PathBuf> },
    Markov,
    Indispensable,
    Monomials,
    Verdict,
    LawrenceVerdict,
    Kron { spec: Option<String> },
}

/// Everything one invocation needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub source: Option<Source>,
    pub command: Command,
    pub method: Method,
    pub degree: Option<String>,
    pub fiber_cap: usize,
    pub format: Format,
    pub jobs: usize,
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        if cli.fiber_cap == 0 {
            return Err(CliError::Usage("--fiber-cap must be at least 1".into()));
        }
        let source = match (cli.input, cli.model) {
            (Some(path), _) => Some(Source::File(path)),
            (None, Some(m)) => Some(Source::Builtin(m)),
            (None, None) => None,
        };
        let mut method = Method::default();
        let mut degree = None;
        let command = match cli.command {
            CommandArg::Validate => Command::Validate,
            CommandArg::Fiber { degree: d } => {
                degree = Some(d);
                Command::Fiber
            }
            CommandArg::Nabla { degree: d } => {
                degree = Some(d);
                Command::Nabla
            }
            CommandArg::Degrees => Command::Degrees,
            CommandArg::Grobner { lowest, order_matrix } => Command::Grobner { lowest, order_matrix },
            CommandArg::Markov => Command::Markov,
            CommandArg::Indispensable { method: m, degree: d } => {
                method = m;
                degree = d;
                Command::Indispensable
            }
            CommandArg::Monomials { degree: d } => {
                degree = d;
                Command::Monomials
            }
            CommandArg::Verdict => Command::Verdict,
            CommandArg::LawrenceVerdict => Command::LawrenceVerdict,
            CommandArg::Kron { spec } => Command::Kron { spec },
        };
        let format = match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        };
        Ok(RunConfig { source, command, method, degree, fiber_cap: cli.fiber_cap, format, jobs: cli.jobs })
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn load_model(source: &Source) -> Result<ModelMatrix, CliError> {
    match source {
        Source::File(path) => format::parse_matrix(&read(path)?),
        Source::Builtin(m) => build_kronecker(&m.kronecker_spec()),
    }
}

/// Runs the command on a thread pool of the configured size.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    pool.install(|| execute(config))
}

fn execute(config: &RunConfig) -> Result<String, CliError> {
    let fmt = config.format;
    if let Command::Kron { spec } = &config.command {
        let spec = match (spec, &config.source) {
            (Some(s), _) => s.parse()?,
            (None, Some(Source::Builtin(m))) => m.kronecker_spec(),
            (None, _) => KroneckerSpec::independence_model(),
        };
        return Ok(format::emit_model(&build_kronecker(&spec)?, fmt));
    }

    let source = config
        .source
        .as_ref()
        .ok_or_else(|| CliError::Usage("no input: pass --input FILE or --model paper-example".into()))?;
    let model = load_model(source)?;
    let analysis = Analysis::with_config(model.clone(), Config { fiber_cap: config.fiber_cap });
    let degree = || -> Result<_, CliError> {
        let text = config.degree.as_deref().ok_or_else(|| CliError::Usage("--degree is required".into()))?;
        format::parse_degree(text, &model)
    };

    let out = match &config.command {
        Command::Validate => {
            let weights: Vec<String> = model.weights().as_slice().iter().map(i64::to_string).collect();
            match fmt {
                Format::Text => format!("{}# weights {}\n", model, weights.join(" ")),
                Format::Json => format::emit_model(&model, fmt),
            }
        }
        Command::Fiber => format::emit_fiber(&analysis.fiber(&degree()?)?, fmt),
        Command::Nabla => format::emit_nabla(&analysis.nabla(&degree()?)?, fmt),
        Command::Degrees => format::emit_reports(&analysis.minimal_degrees()?, fmt),
        Command::Grobner { lowest, order_matrix } => {
            let gb = match order_matrix {
                Some(path) => {
                    let rows = format::parse_grid(&read(path)?)?;
                    let order = OrderMatrix::validated(rows, model.cols())?;
                    grobner::reduced_basis(&analysis.toric_ideal_basis()?.binomials(), &order)
                }
                None => analysis.grobner_lowest(*lowest)?,
            };
            format::emit_grobner(&gb, fmt)
        }
        Command::Markov => {
            let markov = analysis.markov_basis()?;
            format::emit_binomials(&sorted_for_display(&model, markov.binomials), fmt)
        }
        Command::Indispensable => {
            let set = match (&config.degree, config.method) {
                (Some(_), _) => analysis.indispensable_below(&degree()?)?,
                (None, Method::Nabla) => analysis.indispensable_binomials_combinatorial()?,
                (None, Method::Grobner) => analysis.indispensable_binomials_grobner()?,
                (None, Method::Both) => {
                    let comb = analysis.indispensable_binomials_combinatorial()?;
                    let alg = analysis.indispensable_binomials_grobner()?;
                    if comb != alg {
                        return Err(CliError::Disagreement(format!(
                            "complexes give {} binomials, Gröbner bases give {}",
                            comb.len(),
                            alg.len()
                        )));
                    }
                    comb
                }
            };
            format::emit_binomials(&sorted_for_display(&model, set), fmt)
        }
        Command::Monomials => {
            let set = match &config.degree {
                Some(_) => analysis.indispensable_monomials_at(&degree()?)?,
                None => analysis.indispensable_monomials()?,
            };
            format::emit_monomials(&monomials_for_display(&model, set), fmt)
        }
        Command::Verdict => format::emit_verdict(&analysis.uniqueness_verdict()?, fmt),
        Command::LawrenceVerdict => {
            format::emit_verdict(&lawrence_uniqueness(&model, Config { fiber_cap: config.fiber_cap })?, fmt)
        }
        Command::Kron { .. } => unreachable!("handled above"),
    };
    Ok(out)
}
