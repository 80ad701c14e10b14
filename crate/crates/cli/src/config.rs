use std::path::Path;
use std::str::FromStr;
use std::time::Duration;

use monocurve::exactalg::is_prime;
use monocurve::oracle::{Limits, ModuleOrderKind, OracleConfig};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Resource caps read from an optional TOML file. Absent keys mean no cap.
///
/// ```toml
/// max_spairs = 200000
/// max_terms = 50000
/// max_degree = 2000
/// timeout_secs = 60
/// module_order = "term-over-position"
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub max_spairs: Option<u64>,
    pub max_terms: Option<usize>,
    pub max_degree: Option<i64>,
    /// Per run for `resolve`, per cell for `scan`.
    pub timeout_secs: Option<u64>,
    #[serde(default)]
    pub module_order: ModuleOrderKind,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Invalid(format!("bad config {}: {e}", path.display())))
    }

    pub fn load_optional(path: Option<&Path>) -> Result<Self, CliError> {
        path.map_or_else(|| Ok(Config::default()), Self::load)
    }

    /// An oracle configuration whose deadline starts now.
    pub fn oracle_config(&self) -> OracleConfig {
        let mut limits = Limits {
            max_spairs: self.max_spairs,
            max_terms: self.max_terms,
            max_degree: self.max_degree,
            deadline: None,
        };
        if let Some(secs) = self.timeout_secs {
            limits = limits.with_timeout(Duration::from_secs(secs));
        }
        OracleConfig { limits, module_order: self.module_order }
    }
}

/// Primes available as coefficient fields.
pub const SUPPORTED_PRIMES: [u64; 9] = [2, 3, 5, 7, 11, 13, 32003, 65521, 2147483647];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "q" | "Q" | "qq" | "QQ" => Ok(FieldChoice::Rational),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .ok_or_else(|| format!("expected `q` or `fp:<prime>`, got `{s}`"))?
                    .parse::<u64>()
                    .map_err(|e| format!("bad prime in `{s}`: {e}"))?;
                if !is_prime(p) {
                    return Err(format!("{p} is not prime"));
                }
                if !SUPPORTED_PRIMES.contains(&p) {
                    return Err(format!("prime {p} is not built in (available: {SUPPORTED_PRIMES:?})"));
                }
                Ok(FieldChoice::Prime(p))
            }
        }
    }
}

/// Runs `$body` with `$F` bound to the coefficient type selected by `$choice`.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr) => {{
        use $crate::config::FieldChoice;
        use monocurve::exactalg::Zp;
        match $choice {
            FieldChoice::Rational => {
                type $F = monocurve::Rational;
                $body
            }
            FieldChoice::Prime(2) => {
                type $F = Zp<2>;
                $body
            }
            FieldChoice::Prime(3) => {
                type $F = Zp<3>;
                $body
            }
            FieldChoice::Prime(5) => {
                type $F = Zp<5>;
                $body
            }
            FieldChoice::Prime(7) => {
                type $F = Zp<7>;
                $body
            }
            FieldChoice::Prime(11) => {
                type $F = Zp<11>;
                $body
            }
            FieldChoice::Prime(13) => {
                type $F = Zp<13>;
                $body
            }
            FieldChoice::Prime(32003) => {
                type $F = Zp<32003>;
                $body
            }
            FieldChoice::Prime(65521) => {
                type $F = Zp<65521>;
                $body
            }
            FieldChoice::Prime(2147483647) => {
                type $F = Zp<2147483647>;
                $body
            }
            FieldChoice::Prime(p) => unreachable!("prime {p} rejected at parse time"),
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldChoice>(), Ok(FieldChoice::Rational));
        assert_eq!("fp:32003".parse::<FieldChoice>(), Ok(FieldChoice::Prime(32003)));
        assert!("fp:32004".parse::<FieldChoice>().unwrap_err().contains("not prime"));
        assert!("fp:101".parse::<FieldChoice>().unwrap_err().contains("not built in"));
        assert!("r".parse::<FieldChoice>().is_err());
    }

    #[test]
    fn config_parsing() {
        let c: Config = toml::from_str("max_spairs = 10\ntimeout_secs = 5\nmodule_order = \"term-over-position\"").unwrap();
        assert_eq!(c.max_spairs, Some(10));
        assert_eq!(c.module_order, ModuleOrderKind::TermOverPosition);
        assert!(c.oracle_config().limits.deadline.is_some());
        assert!(toml::from_str::<Config>("bogus = 1").is_err());
        assert_eq!(toml::from_str::<Config>("").unwrap(), Config::default());
    }
}
