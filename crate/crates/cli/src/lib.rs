//! The `hws` command line: configuration, dispatch and exit codes.

mod commands;
pub mod report;

use std::fmt;

use hws_core::codes::Budget;
use hws_core::exactalg::prime_power;
use hws_core::pipeline::Method as PipelineMethod;

pub use report::{Check, Format, Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Spectra,
    Betti,
    Gwp,
    Conics,
    Hamming,
    Correspondence,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectra => "spectra",
            Command::Betti => "betti",
            Command::Gwp => "gwp",
            Command::Conics => "conics",
            Command::Hamming => "hamming",
            Command::Correspondence => "correspondence",
            Command::Verify => "verify",
        }
    }
}

/// Which of the three computation paths to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// The formula bank.
    Closed,
    /// Matroid, resolution and weight-polynomial pipeline.
    Pipeline,
    /// Subspace enumeration.
    Brute,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Closed => "closed",
            Source::Pipeline => "pipeline",
            Source::Brute => "brute",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub q: Option<u32>,
    pub elongation: usize,
    pub source: Option<Source>,
    /// Pipeline variant; chosen by q when absent.
    pub pipeline: Option<PipelineMethod>,
    pub r_max: Option<usize>,
    pub format: Format,
    pub budget: Budget,
    pub seed: u64,
    pub level: Level,
    pub d: u32,
    pub m: u32,
    pub timestamp: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            q: None,
            elongation: 0,
            source: None,
            pipeline: None,
            r_max: None,
            format: Format::Table,
            budget: Budget::default(),
            seed: 0,
            level: Level::Fast,
            d: 2,
            m: 2,
            timestamp: false,
        }
    }
}

/// A configuration the command cannot run with; exit status 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError {
    pub flag: &'static str,
    pub message: String,
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.flag, self.message)
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
    pub report: Option<Report>,
}

fn usage(flag: &'static str, message: impl Into<String>) -> UsageError {
    UsageError {
        flag,
        message: message.into(),
    }
}

fn validate(cfg: &RunConfig) -> Result<(), UsageError> {
    if let Some(q) = cfg.q {
        if prime_power(q as u64).is_none() {
            return Err(usage("--q", format!("{q} is not a prime power")));
        }
        if q > 16 {
            return Err(usage("--q", format!("{q} exceeds the supported range q ≤ 16")));
        }
    } else if !matches!(cfg.command, Command::Verify | Command::Correspondence) {
        return Err(usage("--q", "required for this command"));
    }
    if cfg.budget.subspaces == 0 {
        return Err(usage("--budget-subspaces", "must be positive"));
    }
    let allowed: &[Source] = match cfg.command {
        Command::Spectra => &[Source::Closed, Source::Pipeline, Source::Brute],
        Command::Betti | Command::Gwp => &[Source::Closed, Source::Pipeline],
        _ => &[],
    };
    if let Some(s) = cfg.source {
        if !allowed.contains(&s) {
            return Err(usage(
                "--method",
                format!("{} is not available for {}", s.name(), cfg.command.name()),
            ));
        }
    }
    if cfg.pipeline.is_some() && cfg.source.is_some_and(|s| s != Source::Pipeline) {
        return Err(usage("--pipeline", "only applies with --method pipeline"));
    }
    Ok(())
}

/// Runs one command. Exit status 0 when every check passes, 1 on a mismatch or a
/// failed computation, 2 on a usage error.
pub fn run(cfg: &RunConfig) -> Outcome {
    if let Err(e) = validate(cfg) {
        return Outcome {
            status: 2,
            output: format!("error: {e}\n"),
            report: None,
        };
    }
    match commands::dispatch(cfg) {
        Ok(report) => {
            let header = cfg.timestamp.then(|| {
                let secs = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map_or(0, |d| d.as_secs());
                format!("generated at unix time {secs}")
            });
            Outcome {
                status: if report.passed() { 0 } else { 1 },
                output: report.render(cfg.format, header.as_deref()),
                report: Some(report),
            }
        }
        Err(commands::Failure::Usage(e)) => Outcome {
            status: 2,
            output: format!("error: {e}\n"),
            report: None,
        },
        Err(commands::Failure::Compute(e)) => Outcome {
            status: 1,
            output: format!("error: {e}\n"),
            report: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(command: Command, q: Option<u32>) -> RunConfig {
        let mut c = RunConfig::new(command);
        c.q = q;
        c
    }

    #[test]
    fn q_must_be_a_small_prime_power() {
        assert!(validate(&cfg(Command::Spectra, Some(9))).is_ok());
        assert_eq!(validate(&cfg(Command::Spectra, Some(12))).unwrap_err().flag, "--q");
        assert_eq!(validate(&cfg(Command::Spectra, Some(25))).unwrap_err().flag, "--q");
        assert!(validate(&cfg(Command::Betti, None)).is_err());
        assert!(validate(&cfg(Command::Verify, None)).is_ok());
    }

    #[test]
    fn methods_are_checked_per_command() {
        let mut c = cfg(Command::Gwp, Some(3));
        c.source = Some(Source::Brute);
        assert_eq!(validate(&c).unwrap_err().flag, "--method");
        c.command = Command::Spectra;
        assert!(validate(&c).is_ok());
        c.pipeline = Some(PipelineMethod::BsAssisted);
        assert_eq!(validate(&c).unwrap_err().flag, "--pipeline");
        c.source = None;
        assert!(validate(&c).is_ok());
    }

    #[test]
    fn run_maps_outcomes_to_exit_codes() {
        assert_eq!(run(&cfg(Command::Hamming, Some(3))).status, 0);
        assert_eq!(run(&cfg(Command::Hamming, Some(6))).status, 2);
        let mut c = cfg(Command::Spectra, Some(2));
        c.budget.subspaces = 0;
        assert_eq!(run(&c).status, 2);
    }
}
