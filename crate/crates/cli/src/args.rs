use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::FieldChoice;

#[derive(Debug, Parser)]
#[command(name = "monocurve", version, about = "Defining ideals and minimal free resolutions of monomial curves of arithmetic sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the minimal binomial generators of the defining ideal.
    Gens(GensArgs),
    /// Build (and optionally verify) a minimal graded free resolution.
    Resolve(ResolveArgs),
    /// Same as `resolve --verify`.
    Verify(ResolveArgs),
    /// Compare ungraded Betti vectors over a grid of (a, d) for fixed n and b.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    /// First term of the sequence.
    pub m0: u64,
    /// Common difference.
    pub d: u64,
    /// Index of the last term (the sequence has n + 1 terms).
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct GensArgs {
    #[command(flatten)]
    pub seq: SequenceArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Auto,
    En,
    Cone,
    Closedform,
    Oracle,
}

#[derive(Debug, Args)]
pub struct ResolveArgs {
    #[command(flatten)]
    pub seq: SequenceArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodChoice,
    /// Run the complex checks, exactness and the oracle comparison.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub json: bool,
    /// Include the differential matrices in the output.
    #[arg(long)]
    pub emit_matrices: bool,
    /// Coefficient field: `q` or `fp:<prime>`.
    #[arg(long, default_value = "q")]
    pub field: FieldChoice,
    /// TOML file with resource caps.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Record wall-clock milliseconds per phase.
    #[arg(long)]
    pub timing: bool,
}

/// An inclusive range written `lo..hi` (or a single value).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<u64>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad bound `{t}`: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Span(lo..=hi))
    }
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: usize,
    /// Residue class: m0 = a*n + b with 1 <= b <= n.
    #[arg(long)]
    pub b: u64,
    /// Range of a, e.g. `1..3` (inclusive).
    #[arg(long, conflicts_with_all = ["a_min", "a_max"])]
    pub a: Option<Span>,
    #[arg(long)]
    pub a_min: Option<u64>,
    #[arg(long)]
    pub a_max: Option<u64>,
    /// Range of d, e.g. `1..3` (inclusive).
    #[arg(long, conflicts_with_all = ["d_min", "d_max"])]
    pub d: Option<Span>,
    #[arg(long)]
    pub d_min: Option<u64>,
    #[arg(long)]
    pub d_max: Option<u64>,
    #[arg(long)]
    pub json: bool,
    #[arg(long, default_value = "fp:32003")]
    pub field: FieldChoice,
    /// TOML file with resource caps; the timeout applies per cell.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl ScanArgs {
    pub fn a_range(&self) -> Result<RangeInclusive<u64>, String> {
        resolve_span(&self.a, self.a_min, self.a_max, 1, 2)
    }

    pub fn d_range(&self) -> Result<RangeInclusive<u64>, String> {
        resolve_span(&self.d, self.d_min, self.d_max, 1, 3)
    }
}

fn resolve_span(
    span: &Option<Span>,
    min: Option<u64>,
    max: Option<u64>,
    lo: u64,
    hi: u64,
) -> Result<RangeInclusive<u64>, String> {
    if let Some(s) = span {
        return Ok(s.0.clone());
    }
    let (lo, hi) = (min.unwrap_or(lo), max.unwrap_or(hi));
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("1..3".parse::<Span>(), Ok(Span(1..=3)));
        assert_eq!("1..=3".parse::<Span>(), Ok(Span(1..=3)));
        assert_eq!("2".parse::<Span>(), Ok(Span(2..=2)));
        assert!("3..1".parse::<Span>().is_err());
        assert!("x..1".parse::<Span>().is_err());
    }

    #[test]
    fn scan_defaults_and_conflicts() {
        let cli = Cli::try_parse_from(["monocurve", "scan", "--n", "4", "--b", "2"]).unwrap();
        let Command::Scan(s) = cli.command else { panic!() };
        assert_eq!(s.a_range().unwrap(), 1..=2);
        assert_eq!(s.d_range().unwrap(), 1..=3);
        assert_eq!(s.field, FieldChoice::Prime(32003));
        assert!(Cli::try_parse_from(["monocurve", "scan", "--n", "4", "--b", "2", "--a", "1..2", "--a-min", "1"]).is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
