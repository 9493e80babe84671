use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::claims::Claim;

pub const N_CAP: u64 = 101;
pub const P_CAP: u64 = 199;
pub const TRIALS_CAP: usize = 100;
pub const DEFAULT_N_MAX: u64 = 13;
pub const DEFAULT_P_MAX: u64 = 50;
pub const DEFAULT_TRIALS: usize = 20;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(name = "qcongruence", version, about = "Exact checks of q- and p-adic supercongruences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the checks for one claim (or `all`) and write a report.
    Verify(VerifyArgs),
    /// Print every claim id with a one-line description.
    ListClaims,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub claim: Claim,
    /// Comma-separated values of n.
    #[arg(long, value_delimiter = ',', conflicts_with = "n_max")]
    pub n: Option<Vec<u64>>,
    /// Use every n in 1..=N.
    #[arg(long, value_name = "N")]
    pub n_max: Option<u64>,
    /// Comma-separated values of p.
    #[arg(long, value_delimiter = ',', conflicts_with = "p_max")]
    pub p: Option<Vec<u64>>,
    /// Use every prime p ≤ P.
    #[arg(long, value_name = "P")]
    pub p_max: Option<u64>,
    /// Accepted specializations per sampled (claim, n).
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, env = "QCONGRUENCE_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Extra p-adic digits for finite-difference derivatives (at least 2).
    #[arg(long, default_value_t = qcongruence_core::padic::DEFAULT_GUARD)]
    pub guard: u32,
    /// Where to write the JSON report.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Lift the caps n ≤ 101, p ≤ 199, trials ≤ 100.
    #[arg(long)]
    pub unsafe_large: bool,
    /// Record per-instance wall-clock time (makes reports non-reproducible).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("{what} = {value} exceeds the cap {cap}; pass --unsafe-large to override")]
    OverCap { what: &'static str, value: u64, cap: u64 },
    #[error("--trials must be at least 1")]
    NoTrials,
    #[error("--guard must be at least 2")]
    GuardTooSmall,
    #[error("n must be positive")]
    ZeroN,
}

/// A validated run description, echoed into the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub claim: Claim,
    pub n: Vec<u64>,
    pub p: Vec<u64>,
    pub trials: usize,
    pub seed: u64,
    pub guard: u32,
    pub unsafe_large: bool,
    pub timings: bool,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl Serialize for Claim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&p| qcongruence_core::algebra::is_prime_u64(p)).collect()
}

impl RunConfig {
    pub fn from_args(args: &VerifyArgs) -> Result<Self, ConfigError> {
        let n = match (&args.n, args.n_max) {
            (Some(list), _) => list.clone(),
            (None, max) => (1..=max.unwrap_or(DEFAULT_N_MAX)).collect(),
        };
        let p = match (&args.p, args.p_max) {
            (Some(list), _) => list.clone(),
            (None, max) => primes_up_to(max.unwrap_or(DEFAULT_P_MAX)),
        };
        if n.contains(&0) {
            return Err(ConfigError::ZeroN);
        }
        if args.trials == 0 {
            return Err(ConfigError::NoTrials);
        }
        if args.guard < 2 {
            return Err(ConfigError::GuardTooSmall);
        }
        if !args.unsafe_large {
            let check = |what, value: u64, cap: u64| {
                if value > cap {
                    Err(ConfigError::OverCap { what, value, cap })
                } else {
                    Ok(())
                }
            };
            check("n", n.iter().copied().max().unwrap_or(0), N_CAP)?;
            check("p", p.iter().copied().max().unwrap_or(0), P_CAP)?;
            check("trials", args.trials as u64, TRIALS_CAP as u64)?;
        }
        Ok(RunConfig {
            claim: args.claim,
            n,
            p,
            trials: args.trials,
            seed: args.seed,
            guard: args.guard,
            unsafe_large: args.unsafe_large,
            timings: args.timings,
            out: args.out.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(argv: &[&str]) -> Result<RunConfig, ConfigError> {
        let cli = Cli::try_parse_from(argv).expect("parses");
        match cli.command {
            Command::Verify(args) => RunConfig::from_args(&args),
            Command::ListClaims => panic!("expected verify"),
        }
    }

    #[test]
    fn ranges() {
        let c = parse(&["qcongruence", "verify", "thm1", "--n", "1,5,9", "--seed", "7"]).unwrap();
        assert_eq!(c.n, vec![1, 5, 9]);
        assert_eq!(c.seed, 7);
        let c = parse(&["qcongruence", "verify", "hamme", "--p-max", "13"]).unwrap();
        assert_eq!(c.p, vec![2, 3, 5, 7, 11, 13]);
        assert_eq!(c.claim, Claim::Hamme);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            parse(&["qcongruence", "verify", "thm1", "--n-max", "105"]),
            Err(ConfigError::OverCap { what: "n", .. })
        ));
        assert!(parse(&["qcongruence", "verify", "thm1", "--n-max", "105", "--unsafe-large"]).is_ok());
        assert!(matches!(
            parse(&["qcongruence", "verify", "thm2", "--trials", "101"]),
            Err(ConfigError::OverCap { what: "trials", .. })
        ));
        assert_eq!(
            parse(&["qcongruence", "verify", "wang-pan", "--guard", "1"]),
            Err(ConfigError::GuardTooSmall)
        );
    }

    #[test]
    fn conflicting_ranges_are_usage_errors() {
        assert!(Cli::try_parse_from(["qcongruence", "verify", "thm1", "--n", "5", "--n-max", "9"]).is_err());
        assert!(Cli::try_parse_from(["qcongruence", "verify", "nope"]).is_err());
    }
}
