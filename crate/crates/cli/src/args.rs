use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coc_core::validate::Suite;
use coc_core::Variant;

#[derive(Debug, Parser)]
#[command(
    name = "coc",
    version,
    about = "Degree-sequence conditions for k-component order connectivity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. JSON is the stable machine interface.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Vertex,
    Edge,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Vertex => Variant::Vertex,
            VariantArg::Edge => Variant::Edge,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Kappa,
    Lambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Corollaries,
    Sinks,
    LemmaPart,
    OracleCross,
    LowerBound,
    Properties,
    Dominance,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Corollaries => Suite::Corollaries,
            SuiteArg::Sinks => Suite::Sinks,
            SuiteArg::LemmaPart => Suite::LemmaPart,
            SuiteArg::OracleCross => Suite::OracleCross,
            SuiteArg::LowerBound => Suite::LowerBound,
            SuiteArg::Properties => Suite::Properties,
            SuiteArg::Dominance => Suite::Dominance,
        }
    }
}

/// The property being tested.
#[derive(Debug, Clone, Args)]
pub struct PropertyArgs {
    /// Components must end with fewer than k vertices.
    #[arg(long)]
    pub k: usize,
    /// Required number of removed vertices or edges.
    #[arg(long)]
    pub s: usize,
    #[arg(long, value_enum)]
    pub variant: VariantArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the sink sequences of a property.
    Sinks {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        property: PropertyArgs,
    },
    /// Print the best-monotone theorem of a property.
    Conditions {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        property: PropertyArgs,
    },
    /// Decide a degree sequence against the best-monotone theorem.
    Check {
        /// Degree sequence such as `2^3,3^28,4^5`.
        #[arg(long)]
        seq: String,
        /// Expected length; defaults to the sequence's own.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        property: PropertyArgs,
    },
    /// Realize a degree sequence, or enumerate all labeled realizations.
    Realize {
        #[arg(long)]
        seq: String,
        /// Enumerate every labeled realization.
        #[arg(long)]
        all: bool,
        /// With --s and --variant: test every realization for the property.
        #[arg(long, requires_all = ["s", "variant"])]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        s: Option<usize>,
        #[arg(long, value_enum, requires = "k")]
        variant: Option<VariantArg>,
        /// Lift the enumeration cap of 8 vertices.
        #[arg(long)]
        force: bool,
    },
    /// Exact component order (edge) connectivity of a graph file.
    Oracle {
        /// Graph file: `n m` then one `u v` line per edge, 1-based.
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        measure: Measure,
        /// Lift the cap of 16 vertices.
        #[arg(long)]
        force: bool,
    },
    /// Unit moves turning one clique partition into another.
    Transform {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Shorten a partition to the minimum number of parts.
    Reduce {
        #[arg(long)]
        parts: String,
        #[arg(long)]
        k: usize,
    },
    /// Re-run a batch of invariant checks.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    /// Range of k, as `3..5`, `3..=5` or a single value.
    #[arg(long, value_parser = parse_range)]
    pub k: Option<RangeInclusive<usize>>,
    /// Largest n to sweep.
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Random instances for `lemma-part` and `properties`.
    #[arg(long)]
    pub trials: Option<usize>,
    /// Random moves for the degree-sum check.
    #[arg(long)]
    pub moves: Option<usize>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// Single s for `sinks`; largest s for `oracle-cross` and `lower-bound`.
    #[arg(long)]
    pub s: Option<usize>,
    /// Lift the desk-scale caps.
    #[arg(long)]
    pub force: bool,
}

/// Parses `a..b` and `a..=b` (both inclusive) or a single value.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..5").unwrap(), 3..=5);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
