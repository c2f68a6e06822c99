//! Command-line driver behind the `finmod` binary.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::classify::{classify_analysis, ring_predicates, Analysis, RingPredicates, REPORT_VERSION};
use crate::error::Error;
use crate::harness::{
    has_failure, run_oracles, run_search, run_selected, run_theorems_with, Caps, Catalog, FamilyManifest,
    InstanceFamily, Recipe, SuiteConfig, Target,
};
use crate::instance::{Bounds, Built, InstanceSpec, RingExpr};
use crate::ring::RingTable;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    TheoremFail = 1,
    Input = 2,
    Size = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("config: {0}")]
    Config(#[from] toml::de::Error),
    #[error("config: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Lib(Error::Size { .. }) => Exit::Size,
            _ => Exit::Input,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "finmod", version, about = "Finite rings and modules: classification, theorem replay and counterexample search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads (default: number of processors).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Largest module order built.
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// Restrict to a named family; repeatable.
    #[arg(long = "family", global = true)]
    pub families: Vec<String>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// TOML file with caps, suite settings and family recipes.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one ring or module given as spec text.
    Classify {
        /// Spec text; read from standard input when absent or `-`.
        spec: Option<String>,
        /// Read the spec from a file.
        #[arg(long, conflicts_with = "spec")]
        file: Option<PathBuf>,
        /// Include a witness for every false verdict.
        #[arg(long)]
        witnesses: bool,
    },
    /// Replay the theorem registry over the catalog.
    Theorems {
        /// Run only these registry ids; repeatable.
        #[arg(long = "only")]
        only: Vec<String>,
    },
    /// Search the catalog for a conjunction such as `goldie_rickart&!rickart`,
    /// or for `direct-sum` or `ring-asymmetry`.
    Search { target: String },
    /// Cross-check fast decision procedures against slow oracles.
    Oracles,
    /// Print the family manifests.
    Catalog,
}

/// Optional TOML configuration. Flags override it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub caps: Caps,
    pub suite: SuiteConfig,
    #[serde(rename = "family")]
    pub families: Vec<FamilyConfig>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyConfig {
    pub name: String,
    /// Ring spec text; absent means a named family or the integer backend.
    pub ring: Option<String>,
    pub recipe: Option<Recipe>,
}

impl Config {
    pub fn from_toml(text: &str) -> CliResult<Self> {
        Ok(toml::from_str(text)?)
    }

    fn family(&self, fc: &FamilyConfig, caps: Caps) -> CliResult<InstanceFamily> {
        let ring = match &fc.ring {
            Some(text) => match text.parse::<InstanceSpec>()? {
                InstanceSpec::Ring(r) => Some(r),
                InstanceSpec::Module(_) => {
                    return Err(CliError::Invalid(format!("family `{}`: ring must be a ring spec", fc.name)))
                }
            },
            None => None,
        };
        let mut family = match (&ring, InstanceFamily::named(&fc.name, caps)) {
            (None, Ok(f)) => f,
            _ => InstanceFamily::new(fc.name.clone(), ring, Recipe::standard(), caps),
        };
        if let Some(r) = &fc.recipe {
            family.recipe = r.clone();
        }
        Ok(family)
    }

    /// Families selected by `names` (config entries first, then built-in names),
    /// or the configured families, or the defaults.
    pub fn families(&self, names: &[String], caps: Caps) -> CliResult<Vec<InstanceFamily>> {
        if names.is_empty() {
            if self.families.is_empty() {
                return Ok(InstanceFamily::defaults(caps));
            }
            return self.families.iter().map(|f| self.family(f, caps)).collect();
        }
        names
            .iter()
            .map(|n| match self.families.iter().find(|f| &f.name == n) {
                Some(f) => self.family(f, caps),
                None => Ok(InstanceFamily::named(n, caps)?),
            })
            .collect()
    }
}

#[derive(Serialize)]
struct ManifestRecord<'a> {
    version: u32,
    record: &'static str,
    #[serde(flatten)]
    manifest: &'a FamilyManifest,
}

#[derive(Serialize)]
struct RingReport {
    version: u32,
    ring: String,
    order: usize,
    commutative: bool,
    semisimple: bool,
    von_neumann_regular: bool,
    abelian: bool,
    z2_semiperfect: bool,
    right_singular_ideal_size: usize,
    predicates: RingPredicates,
}

impl RingReport {
    fn new(expr: &RingExpr, r: &RingTable) -> CliResult<Self> {
        Ok(RingReport {
            version: REPORT_VERSION,
            ring: expr.to_string(),
            order: r.order(),
            commutative: r.is_commutative(),
            semisimple: r.is_semisimple(),
            von_neumann_regular: r.is_von_neumann_regular(),
            abelian: r.is_abelian(),
            z2_semiperfect: r.is_z2_semiperfect(),
            right_singular_ideal_size: r.right_singular_ideal().len(),
            predicates: ring_predicates(r)?,
        })
    }
}

/// Parses `std::env::args` and runs; returns the exit code.
pub fn main() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => run(&cli) as i32,
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                Exit::Input as i32
            } else {
                Exit::Success as i32
            }
        }
    }
}

pub fn run(cli: &Cli) -> Exit {
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit()
        }
    }
}

fn read_path(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

struct Output {
    sink: Box<dyn Write>,
    path: String,
}

impl Output {
    fn open(out: &Option<PathBuf>) -> CliResult<Self> {
        Ok(match out {
            Some(p) => Output {
                sink: Box::new(io::BufWriter::new(fs::File::create(p).map_err(|source| CliError::Io {
                    path: p.display().to_string(),
                    source,
                })?)),
                path: p.display().to_string(),
            },
            None => Output {
                sink: Box::new(io::stdout().lock()),
                path: "stdout".into(),
            },
        })
    }

    fn line(&mut self, value: &impl Serialize) -> CliResult<()> {
        let text = serde_json::to_string(value)?;
        writeln!(self.sink, "{text}").map_err(|source| self.io(source))
    }

    fn finish(mut self) -> CliResult<()> {
        self.sink.flush().map_err(|source| self.io(source))
    }

    fn io(&self, source: io::Error) -> CliError {
        CliError::Io {
            path: self.path.clone(),
            source,
        }
    }
}

fn execute(cli: &Cli) -> CliResult<Exit> {
    if let Some(n) = cli.jobs {
        // Fails only when a pool already exists, as in repeated in-process runs.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let config = match &cli.config {
        Some(p) => Config::from_toml(&read_path(p)?)?,
        None => Config::default(),
    };
    let mut caps = config.caps;
    if let Some(n) = cli.max_order {
        caps.max_order = n;
    }
    let catalog = || -> CliResult<Catalog> {
        let families = config.families(&cli.families, caps)?;
        let cat = Catalog::build(&families)?;
        for m in cat.manifests() {
            eprintln!(
                "family {}: {} kept of {} candidates{}",
                m.family,
                m.kept,
                m.candidates,
                if m.truncations.is_empty() {
                    String::new()
                } else {
                    format!("; truncated: {}", m.truncations.join("; "))
                }
            );
        }
        Ok(cat)
    };
    match &cli.command {
        Command::Classify { spec, file, witnesses } => {
            let text = match (spec.as_deref(), file) {
                (_, Some(p)) => read_path(p)?,
                (Some(s), None) if s != "-" => s.to_string(),
                _ => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io {
                        path: "stdin".into(),
                        source,
                    })?;
                    s
                }
            };
            let parsed: InstanceSpec = text.parse()?;
            let mut bounds = Bounds::default();
            if let Some(n) = cli.max_order {
                bounds.module = n;
            }
            let built = parsed.build(bounds)?;
            let mut out = Output::open(&cli.out)?;
            match (&parsed, built) {
                (InstanceSpec::Module(expr), Built::Module(m)) => {
                    let report = classify_analysis(&Analysis::new(&m)?)?.with_instance(expr.to_string());
                    let report = if *witnesses { report } else { report.without_witnesses() };
                    out.line(&report)?;
                }
                (InstanceSpec::Ring(expr), Built::Ring(r)) => out.line(&RingReport::new(expr, r.table()?)?)?,
                _ => unreachable!("spec kind matches its build"),
            }
            out.finish()?;
            Ok(Exit::Success)
        }
        Command::Theorems { only } => {
            let cat = catalog()?;
            let checks = if only.is_empty() {
                run_theorems_with(&cat, &config.suite)
            } else {
                let ids: Vec<&str> = only.iter().map(String::as_str).collect();
                run_selected(&cat, &config.suite, &ids)?
            };
            let mut out = Output::open(&cli.out)?;
            for c in &checks {
                out.line(c)?;
            }
            out.finish()?;
            let fails = checks.iter().filter(|c| c.status == crate::harness::Status::Fail).count();
            eprintln!("{} checks, {fails} failed", checks.len());
            Ok(if has_failure(&checks) {
                Exit::TheoremFail
            } else {
                Exit::Success
            })
        }
        Command::Search { target } => {
            let target: Target = target.parse()?;
            let cat = catalog()?;
            let report = run_search(&target, &cat, &config.suite)?;
            let mut out = Output::open(&cli.out)?;
            for s in &report.steps {
                out.line(s)?;
            }
            out.line(&report.result)?;
            out.finish()?;
            Ok(Exit::Success)
        }
        Command::Oracles => {
            let cat = catalog()?;
            let report = run_oracles(&cat)?;
            let mut out = Output::open(&cli.out)?;
            for c in &report.checks {
                out.line(c)?;
            }
            out.finish()?;
            Ok(if report.agrees() {
                Exit::Success
            } else {
                Exit::TheoremFail
            })
        }
        Command::Catalog => {
            let cat = catalog()?;
            let mut out = Output::open(&cli.out)?;
            for m in cat.manifests() {
                out.line(&ManifestRecord {
                    version: REPORT_VERSION,
                    record: "manifest",
                    manifest: m,
                })?;
            }
            out.finish()?;
            Ok(Exit::Success)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults_and_overrides() {
        let c = Config::from_toml("").unwrap();
        assert_eq!(c, Config::default());
        let c = Config::from_toml(
            r#"
            [caps]
            max_order = 16

            [suite]
            max_sum_order = 32

            [[family]]
            name = "tiny"
            ring = "ring zmod 3"
            recipe = { max_summands = 1, closure = false }
            "#,
        )
        .unwrap();
        assert_eq!(c.caps.max_order, 16);
        assert_eq!(c.caps.max_end, Caps::default().max_end);
        assert_eq!(c.suite.max_sum_order, 32);
        let fams = c.families(&[], c.caps).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].ring, Some(RingExpr::Zmod(3)));
        assert_eq!(fams[0].recipe.max_summands, 1);
        assert!(fams[0].recipe.cyclics);
    }

    #[test]
    fn unknown_config_keys_are_rejected() {
        assert!(Config::from_toml("[caps]\nmax_ordr = 3\n").is_err());
    }

    #[test]
    fn named_families_resolve_without_config() {
        let c = Config::default();
        let fams = c.families(&["zmod4".into()], Caps::default()).unwrap();
        assert_eq!(fams[0].name, "zmod4");
        assert!(c.families(&["nope".into()], Caps::default()).is_err());
    }

    #[test]
    fn size_errors_map_to_exit_three() {
        assert_eq!(CliError::Lib(Error::size("x", 2u32, 1u32)).exit(), Exit::Size);
        assert_eq!(CliError::Lib(Error::Argument("x".into())).exit(), Exit::Input);
    }
}
