use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use duality_theorems::CheckId;
use power_algebras::Flavor;
use serde::Serialize;
use tensor_category::Model;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("invalid range {0:?}, expected A..B or a single number")]
    Range(String),
    #[error("unknown suite {0:?}")]
    Suite(String),
    #[error("the plain model has no odd dimensions, got --odd-dim {0}")]
    OddPlain(String),
    #[error("--cap must be at least 1")]
    Cap,
}

/// An inclusive range of dimensions written `A..B`, or a single `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimRange(pub RangeInclusive<usize>);

impl FromStr for DimRange {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<DimRange, ConfigError> {
        let bad = || ConfigError::Range(s.to_string());
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
            None => (s, s),
        };
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(DimRange(lo..=hi))
    }
}

impl std::fmt::Display for DimRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.0.start(), self.0.end())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Plain,
    Super,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Alt,
    Sym,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Verify the duality identities of alternating and symmetric powers by
/// exact rational evaluation.
#[derive(Debug, Clone, Parser)]
#[command(name = "verify-duality", version)]
pub struct Args {
    /// Category model for V.
    #[arg(long, value_enum, default_value = "plain")]
    pub model: ModelArg,
    /// Even dimensions of V, as A..B.
    #[arg(long = "even-dim", default_value = "1..3")]
    pub even_dim: String,
    /// Odd dimensions of V, as A..B.
    #[arg(long = "odd-dim", default_value = "0..0")]
    pub odd_dim: String,
    #[arg(long, value_enum, default_value = "both")]
    pub flavor: FlavorArg,
    /// Largest top degree g.
    #[arg(long = "g-max", default_value_t = 3)]
    pub g_max: usize,
    /// Comma separated checks, or "all".
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Seed for the randomized structural suite.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest power degree computed; checks beyond it are skipped.
    #[arg(long, default_value_t = 5)]
    pub cap: usize,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Run only a deliberately corrupted identity, which must fail.
    #[arg(long = "self-test")]
    pub self_test: bool,
    /// Record wall clock timings in the report (makes it nondeterministic).
    #[arg(long)]
    pub timings: bool,
}

/// A validated run configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Config {
    #[serde(serialize_with = "serialize_model")]
    pub model: Model,
    #[serde(serialize_with = "serialize_range")]
    pub even: RangeInclusive<usize>,
    #[serde(serialize_with = "serialize_range")]
    pub odd: RangeInclusive<usize>,
    #[serde(serialize_with = "serialize_flavors")]
    pub flavors: Vec<Flavor>,
    pub g_max: usize,
    pub suites: Vec<CheckId>,
    pub seed: u64,
    pub cap: usize,
    #[serde(skip)]
    pub jobs: usize,
    pub self_test: bool,
    #[serde(skip)]
    pub timings: bool,
}

fn serialize_model<S: serde::Serializer>(m: &Model, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(m.name())
}

fn serialize_range<S: serde::Serializer>(r: &RangeInclusive<usize>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(&format_args!("{}..{}", r.start(), r.end()))
}

fn serialize_flavors<S: serde::Serializer>(f: &[Flavor], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(f.iter().map(|f| f.name()))
}

/// The suites run by "all": everything except the self test.
pub fn default_suites() -> Vec<CheckId> {
    CheckId::ALL.into_iter().filter(|c| *c != CheckId::SelfTest).collect()
}

pub fn parse_suites(list: &str) -> Result<Vec<CheckId>, ConfigError> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend(default_suites());
        } else {
            out.push(CheckId::parse(name).ok_or_else(|| ConfigError::Suite(name.to_string()))?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

impl Config {
    pub fn from_args(args: &Args) -> Result<Config, ConfigError> {
        let model = match args.model {
            ModelArg::Plain => Model::Plain,
            ModelArg::Super => Model::Super,
        };
        let even = args.even_dim.parse::<DimRange>()?.0;
        let odd = args.odd_dim.parse::<DimRange>()?.0;
        if model == Model::Plain && *odd.end() > 0 {
            return Err(ConfigError::OddPlain(args.odd_dim.clone()));
        }
        if args.cap == 0 {
            return Err(ConfigError::Cap);
        }
        let flavors = match args.flavor {
            FlavorArg::Alt => vec![Flavor::Alternating],
            FlavorArg::Sym => vec![Flavor::Symmetric],
            FlavorArg::Both => vec![Flavor::Alternating, Flavor::Symmetric],
        };
        let suites = if args.self_test {
            vec![CheckId::SelfTest]
        } else {
            parse_suites(&args.suite)?
        };
        Ok(Config {
            model,
            even,
            odd,
            flavors,
            g_max: args.g_max,
            suites,
            seed: args.seed,
            cap: args.cap,
            jobs: args.jobs,
            self_test: args.self_test,
            timings: args.timings,
        })
    }
}
