//! Command-line definitions and small argument parsers.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use kneser_core::{Guards, SVector};

use crate::error::{parse_err, CliResult};
use crate::report::GUARDS_ENV_VAR;

#[derive(Parser)]
#[command(
    name = "kneser",
    version,
    about = "Exact Kneser-hypergraph workbench: generators, defect and chromatic computations, and verification runs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for the report on stdout
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Guard override: ground-size cap for exhaustive searches
    #[arg(long, global = true)]
    pub max_n: Option<usize>,

    /// Guard override: ground-size cap for full ordering enumeration
    #[arg(long, global = true)]
    pub max_alt_n: Option<usize>,

    /// Guard override: ground-size cap for the reduction hypergraph
    #[arg(long, global = true)]
    pub max_kriz_n: Option<usize>,

    /// Guard override: derived-hypergraph vertex cap
    #[arg(long, global = true)]
    pub max_kg_vertices: Option<usize>,

    /// Guard override: derived-hypergraph edge cap
    #[arg(long, global = true)]
    pub max_kg_edges: Option<u64>,

    /// Guard override: solver node budget
    #[arg(long, global = true)]
    pub node_budget: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
pub enum Command {
    /// Generate a hypergraph file from a named family
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Compute a parameter of a hypergraph read from a file
    Compute {
        #[command(subcommand)]
        metric: ComputeMetric,
    },
    /// Run a verification and report a verdict
    Check {
        #[command(subcommand)]
        check: CheckKind,
    },
}

#[derive(Subcommand)]
pub enum GenFamily {
    /// All k-subsets of [n] not contained in the distinguished set A
    Hnka {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated vertex list, e.g. `--A 1,2,3`; empty for none
        #[arg(long = "A", default_value = "")]
        a: String,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// The classical ground system ([n], all k-subsets)
    KneserNk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Complete multipartite graph with the given part sizes
    Multipartite {
        /// Comma-separated part sizes, e.g. `--sizes 2,5`
        #[arg(long)]
        sizes: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// r vertex-disjoint copies of a graph joined completely
    Gbar {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Cyclically stable k-subsets of [n] as edges
    SStable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum ComputeMetric {
    /// Colorability defect with a maximizing family
    Cd {
        #[arg(long)]
        r: usize,
        /// Multiplicity vector: comma list or constant shorthand `k^n`
        #[arg(long)]
        s: Option<String>,
        input: PathBuf,
    },
    /// Equitable colorability defect with a maximizing family
    Ecd {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: Option<String>,
        input: PathBuf,
    },
    /// Alternation number (min over orderings), or a single ordering's
    /// value with `--sigma`
    Alt {
        #[arg(long)]
        r: usize,
        /// Comma-separated ordering, e.g. `--sigma 2,1,3`
        #[arg(long)]
        sigma: Option<String>,
        input: PathBuf,
    },
    /// Exact chromatic number; `--as-kneser` first derives KG^r_s
    Chi {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        as_kneser: bool,
        /// Largest palette to try (defaults to the vertex count)
        #[arg(long)]
        limit: Option<usize>,
        input: PathBuf,
    },
    /// All chromatic-number lower bounds derived from the defects
    Bounds {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: Option<String>,
        input: PathBuf,
    },
    /// Construct KG^r_s and write it as a .hg file
    Kneser {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: Option<String>,
        /// Embed the vertex-index to ground-edge table in the report
        #[arg(long)]
        map: bool,
        #[arg(short, long)]
        out: PathBuf,
        input: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum CheckKind {
    /// Find and verify colorful-subhypergraph witnesses under sampled
    /// proper colorings
    Colorful {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        s: Option<String>,
        /// Coloring source, currently `random:<count>`
        #[arg(long)]
        colors: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        input: PathBuf,
    },
    /// Product-splitting defect inequality against the reduction
    /// hypergraph
    Lemma1 {
        /// First factor r'
        #[arg(long)]
        r1: usize,
        /// Second factor r''
        #[arg(long)]
        r2: usize,
        #[arg(long)]
        s: Option<String>,
        #[arg(long = "C")]
        big_c: usize,
        /// Embed the reduction hypergraph with every edge materialized
        /// (instead of inclusion-minimal storage) in the report
        #[arg(long)]
        full_edges: bool,
        input: PathBuf,
    },
    /// Equitable defect of the complete join versus the independence
    /// number identity
    GbarIdentity {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Closed-form defect formulas against exact enumeration over a grid
    Formulas {
        /// Inclusive ranges, e.g. `--grid n=4..9,k=2..3,r=2..3`
        #[arg(long)]
        grid: String,
    },
    /// Exact chromatic numbers against the conjectured formula
    Conjecture {
        /// Inclusive range, e.g. `--n 8` or `--n 8..10`
        #[arg(long)]
        n: String,
        #[arg(long)]
        k: String,
        #[arg(long)]
        r: String,
        /// Distinguished-set sizes; defaults to the conjectured range
        #[arg(long)]
        a: Option<String>,
        /// Solver node budget per grid point
        #[arg(long)]
        point_budget: Option<u64>,
    },
}

pub fn parse_usize_list(text: &str) -> CliResult<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|f| {
            f.trim()
                .parse::<usize>()
                .map_err(|_| crate::error::CliError::Parse(format!("bad integer `{f}`")))
        })
        .collect()
}

/// Multiplicity vectors: `1,2,1` or the constant shorthand `2^7`.
pub fn parse_svector(spec: Option<&str>, n: usize) -> CliResult<SVector> {
    let spec = match spec {
        None => return Ok(SVector::ones(n)),
        Some(s) => s.trim(),
    };
    let entries: Vec<u32> = if let Some((value, count)) = spec.split_once('^') {
        let value: u32 = value
            .trim()
            .parse()
            .map_err(|_| crate::error::CliError::Parse(format!("bad entry `{value}`")))?;
        let count: usize = count
            .trim()
            .parse()
            .map_err(|_| crate::error::CliError::Parse(format!("bad count `{count}`")))?;
        if count != n {
            return parse_err(format!(
                "shorthand `{spec}` declares {count} entries, hypergraph has {n} vertices"
            ));
        }
        vec![value; count]
    } else {
        spec.split(',')
            .map(|f| {
                f.trim()
                    .parse::<u32>()
                    .map_err(|_| crate::error::CliError::Parse(format!("bad entry `{f}`")))
            })
            .collect::<CliResult<_>>()?
    };
    if entries.len() != n {
        return parse_err(format!(
            "multiplicity vector has {} entries, hypergraph has {n} vertices",
            entries.len()
        ));
    }
    Ok(SVector::new(entries)?)
}

/// Inclusive ranges: `4..9` or a single value `4`.
pub fn parse_range(text: &str) -> CliResult<(usize, usize)> {
    let text = text.trim();
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = lo
            .trim()
            .parse()
            .map_err(|_| crate::error::CliError::Parse(format!("bad range start `{lo}`")))?;
        let hi = hi
            .trim()
            .parse()
            .map_err(|_| crate::error::CliError::Parse(format!("bad range end `{hi}`")))?;
        if lo > hi {
            return parse_err(format!("empty range `{text}`"));
        }
        Ok((lo, hi))
    } else {
        let v = text
            .parse()
            .map_err(|_| crate::error::CliError::Parse(format!("bad range `{text}`")))?;
        Ok((v, v))
    }
}

/// Grids like `n=4..9,k=2..3,r=2..3`.
pub fn parse_grid(text: &str) -> CliResult<[(usize, usize); 3]> {
    let mut n = None;
    let mut k = None;
    let mut r = None;
    for field in text.split(',') {
        let Some((key, value)) = field.split_once('=') else {
            return parse_err(format!("expected `key=range`, got `{field}`"));
        };
        let range = parse_range(value)?;
        match key.trim() {
            "n" => n = Some(range),
            "k" => k = Some(range),
            "r" => r = Some(range),
            other => return parse_err(format!("unknown grid key `{other}`")),
        }
    }
    match (n, k, r) {
        (Some(n), Some(k), Some(r)) => Ok([n, k, r]),
        _ => parse_err("grid must set n, k, and r"),
    }
}

/// Coloring sources for `check colorful`.
pub fn parse_colors(text: &str) -> CliResult<usize> {
    match text.split_once(':') {
        Some(("random", count)) => count
            .parse()
            .map_err(|_| crate::error::CliError::Parse(format!("bad count `{count}`"))),
        _ => parse_err(format!(
            "unsupported coloring source `{text}`; use `random:<count>`"
        )),
    }
}

/// Resolves guards from defaults, the environment variable, then CLI
/// flags. Returns the guards and the raw env value for the report echo.
pub fn resolve_guards(cli: &Cli) -> CliResult<(Guards, Option<String>)> {
    let mut guards = Guards::default();
    let env_value = std::env::var(GUARDS_ENV_VAR).ok();
    if let Some(raw) = &env_value {
        for field in raw.split(',').filter(|f| !f.trim().is_empty()) {
            let Some((key, value)) = field.split_once('=') else {
                return parse_err(format!("{GUARDS_ENV_VAR}: expected `key=value`, got `{field}`"));
            };
            let value = value.trim();
            let parse_usize = || {
                value.parse::<usize>().map_err(|_| {
                    crate::error::CliError::Parse(format!("{GUARDS_ENV_VAR}: bad value `{value}`"))
                })
            };
            let parse_u64 = || {
                value.parse::<u64>().map_err(|_| {
                    crate::error::CliError::Parse(format!("{GUARDS_ENV_VAR}: bad value `{value}`"))
                })
            };
            match key.trim() {
                "max-n" => guards.max_n = parse_usize()?,
                "max-alt-n" => guards.max_alt_n = parse_usize()?,
                "max-kriz-n" => guards.max_kriz_n = parse_usize()?,
                "max-kg-vertices" => guards.max_kg_vertices = parse_usize()?,
                "max-kg-edges" => guards.max_kg_edges = parse_u64()?,
                "node-budget" => guards.node_budget = parse_u64()?,
                other => {
                    return parse_err(format!("{GUARDS_ENV_VAR}: unknown guard `{other}`"));
                }
            }
        }
    }
    if let Some(v) = cli.max_n {
        guards.max_n = v;
    }
    if let Some(v) = cli.max_alt_n {
        guards.max_alt_n = v;
    }
    if let Some(v) = cli.max_kriz_n {
        guards.max_kriz_n = v;
    }
    if let Some(v) = cli.max_kg_vertices {
        guards.max_kg_vertices = v;
    }
    if let Some(v) = cli.max_kg_edges {
        guards.max_kg_edges = v;
    }
    if let Some(v) = cli.node_budget {
        guards.node_budget = v;
    }
    Ok((guards, env_value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svector_forms() {
        assert_eq!(
            parse_svector(Some("1,2,1"), 3).unwrap().entries(),
            &[1, 2, 1]
        );
        assert_eq!(parse_svector(Some("2^4"), 4).unwrap().entries(), &[2; 4]);
        assert_eq!(parse_svector(None, 2).unwrap().entries(), &[1, 1]);
        assert!(parse_svector(Some("2^3"), 4).is_err());
        assert!(parse_svector(Some("1,0"), 2).is_err());
    }

    #[test]
    fn ranges_and_grids() {
        assert_eq!(parse_range("4..9").unwrap(), (4, 9));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("9..4").is_err());
        let [n, k, r] = parse_grid("n=4..9,k=2..3,r=2..3").unwrap();
        assert_eq!((n, k, r), ((4, 9), (2, 3), (2, 3)));
        assert!(parse_grid("n=4..9,k=2..3").is_err());
        assert!(parse_grid("n=4..9,k=2..3,r=2..3,z=1").is_err());
    }

    #[test]
    fn colors_spec() {
        assert_eq!(parse_colors("random:50").unwrap(), 50);
        assert!(parse_colors("fixed:3").is_err());
    }
}
