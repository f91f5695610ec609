//! Command-line front end for `conicgroup`.
//!
//! Each subcommand builds a serializable report and renders it as JSON,
//! markdown or CSV. Exit codes: 0 ok, 2 usage, 3 data or hypothesis error,
//! 4 verification mismatch.

pub mod cache;
pub mod classgroup;
pub mod convenient;
pub mod factor;
pub mod generators;
pub mod oracle;
pub mod render;
pub mod solve;
pub mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use conicgroup::Conic;

#[derive(Debug, Parser)]
#[command(
    name = "conicgroup",
    version,
    about = "Rational points on x^2 + D y^2 = z^2: class groups, generators, factorizations, solution tables"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Markdown, global = true)]
    pub format: Format,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print radicals and generators as √−D and ζₚ.
    #[arg(long, global = true)]
    pub unicode: bool,
    /// Allow D outside the applicable set; results are marked unverified.
    #[arg(long = "unverified-D", global = true)]
    pub unverified_d: bool,
    /// JSON generator cache; entries are revalidated on load.
    #[arg(long, value_name = "PATH", global = true)]
    pub cache: Option<PathBuf>,
}

impl Common {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced forms of discriminant -4D and the class group verdict.
    Classgroup { d: u64 },
    /// Generators zeta_p = (a + b sqrt(-D)) / p.
    Generators {
        d: u64,
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',', num_args = 1.., required_unless_present = "bound", conflicts_with = "bound")]
        primes: Vec<u64>,
        /// Every admissible prime up to this bound.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// All normalized solutions (a, b, c) for a given c, with factorizations.
    Solve { d: u64, c: u64 },
    /// Factor (a + b sqrt(-D)) / c over the generators.
    #[command(allow_negative_numbers = true)]
    Factor { d: u64, a: i128, b: i128, c: i128 },
    /// Applicability verdicts for D = 1..=max.
    Convenient {
        max: u64,
        #[arg(long)]
        applicable_only: bool,
    },
    /// Brute-force solutions for one c, or a sweep against the enumeration.
    Oracle {
        d: u64,
        #[arg(required_unless_present = "sweep")]
        c: Option<u64>,
        /// Compare enumeration and brute force for every c in 2..=C_MAX.
        #[arg(long, value_name = "C_MAX", conflicts_with = "c")]
        sweep: Option<u64>,
    },
    /// Regenerate the D = 105 tables and diff them against golden data.
    VerifyPaper {
        #[arg(long, hide = true)]
        golden: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Library(#[from] conicgroup::Error),
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Library(_) | CliError::Data(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 4,
        }
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub status: Status,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            status: Status::Ok,
        }
    }
}

pub(crate) fn check_d(d: u64) -> Result<(), CliError> {
    if d == 0 {
        Err(CliError::Usage("D must be a positive integer".into()))
    } else {
        Ok(())
    }
}

/// The conic for `d`, gated on applicability unless `--unverified-D`, and
/// seeded from the generator cache when one is given.
pub(crate) fn open_conic(d: u64, common: &Common) -> Result<Conic, CliError> {
    check_d(d)?;
    let conic = if common.unverified_d {
        Conic::unverified(d)?
    } else {
        Conic::new(d).map_err(|e| match e {
            conicgroup::Error::NotApplicable { .. } => {
                CliError::Data(format!("{e} (pass --unverified-D to override)"))
            }
            other => other.into(),
        })?
    };
    match &common.cache {
        Some(path) => {
            let cache = cache::GeneratorCache::load(path)?;
            Ok(conic.with_generators(cache.entries_for(d))?)
        }
        None => Ok(conic),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let common = &cli.common;
    let format = common.format();
    let unicode = common.unicode;
    match &cli.command {
        Command::Classgroup { d } => {
            check_d(*d)?;
            let report = classgroup::ClassGroupDoc::build(*d, unicode)?;
            Ok(Outcome::ok(render::render(&report, format)?))
        }
        Command::Generators { d, primes, bound } => {
            let conic = open_conic(*d, common)?;
            let doc = generators::GeneratorsDoc::build(&conic, primes, *bound, unicode)?;
            if let Some(path) = &common.cache {
                let mut cache = cache::GeneratorCache::load(path)?;
                cache.merge(&doc);
                cache.save(path)?;
            }
            Ok(Outcome::ok(render::render(&doc, format)?))
        }
        Command::Solve { d, c } => {
            let conic = open_conic(*d, common)?;
            let doc = solve::SolveDoc::build(&conic, *c, unicode)?;
            Ok(Outcome::ok(render::render(&doc, format)?))
        }
        Command::Factor { d, a, b, c } => {
            let conic = open_conic(*d, common)?;
            let doc = factor::FactorDoc::build(&conic, *a, *b, *c, unicode)?;
            Ok(Outcome::ok(render::render(&doc, format)?))
        }
        Command::Convenient {
            max,
            applicable_only,
        } => {
            let doc = convenient::ConvenientDoc::build(*max, *applicable_only)?;
            Ok(Outcome::ok(render::render(&doc, format)?))
        }
        Command::Oracle { d, c, sweep } => match (c, sweep) {
            (_, Some(c_max)) => {
                let conic = open_conic(*d, common)?;
                let doc = oracle::SweepDoc::build(&conic, *c_max)?;
                let status = if doc.mismatches.is_empty() {
                    Status::Ok
                } else {
                    Status::Mismatch
                };
                Ok(Outcome {
                    text: render::render(&doc, format)?,
                    status,
                })
            }
            (Some(c), None) => {
                check_d(*d)?;
                let doc = oracle::BruteForceDoc::build(*d, *c, unicode)?;
                Ok(Outcome::ok(render::render(&doc, format)?))
            }
            (None, None) => Err(CliError::Usage("give c or --sweep C_MAX".into())),
        },
        Command::VerifyPaper { golden } => {
            let golden = match golden {
                Some(path) => verify::Golden::load(path)?,
                None => verify::Golden::embedded()?,
            };
            let doc = verify::VerifyDoc::build(&golden)?;
            let status = if doc.all_ok() {
                Status::Ok
            } else {
                Status::Mismatch
            };
            Ok(Outcome {
                text: render::render(&doc, format)?,
                status,
            })
        }
    }
}
