use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hws_cli::{run, Command, Format, Level, RunConfig, Source};
use hws_core::codes::Budget;
use hws_core::pipeline::Method as PipelineMethod;

#[derive(Parser)]
#[command(name = "hws", version, about = "Higher weight spectra and Betti numbers of Reed-Muller codes")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Higher weight spectra A_w^(r).
    Spectra(Common),
    /// Graded Betti table of one elongation.
    Betti(Common),
    /// Generalized weight polynomials P_w(Z).
    Gwp(Common),
    /// Conic census over the affine plane.
    Conics(Common),
    /// Generalized Hamming weights.
    Hamming(Common),
    /// Projective-to-affine cycle correspondence.
    Correspondence(Common),
    /// Cross-check every computation path.
    Verify(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Pipeline,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineArg {
    #[value(name = "full-mobius", alias = "mobius")]
    FullMobius,
    #[value(name = "bs-assisted", alias = "bs")]
    BsAssisted,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Args)]
struct Common {
    /// Field order, a prime power up to 16.
    #[arg(long)]
    q: Option<u32>,
    /// Elongation index ℓ.
    #[arg(long, default_value_t = 0)]
    elongation: usize,
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Pipeline variant; defaults to full-mobius for q ≤ 5 and bs-assisted above.
    #[arg(long, value_enum)]
    pipeline: Option<PipelineArg>,
    /// Highest subcode dimension to enumerate with --method brute.
    #[arg(long)]
    r_max: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long)]
    budget_subspaces: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "fast")]
    level: LevelArg,
    /// Degree for the correspondence check.
    #[arg(long, default_value_t = 2)]
    d: u32,
    /// Dimension for the correspondence check.
    #[arg(long, default_value_t = 2)]
    m: u32,
    /// Prefix table output with the generation time.
    #[arg(long)]
    timestamp: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, a) = match cli.command {
        Sub::Spectra(a) => (Command::Spectra, a),
        Sub::Betti(a) => (Command::Betti, a),
        Sub::Gwp(a) => (Command::Gwp, a),
        Sub::Conics(a) => (Command::Conics, a),
        Sub::Hamming(a) => (Command::Hamming, a),
        Sub::Correspondence(a) => (Command::Correspondence, a),
        Sub::Verify(a) => (Command::Verify, a),
    };
    if a.threads > 0 {
        // a second initialisation only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(a.threads).build_global();
    }
    let mut cfg = RunConfig::new(command);
    cfg.q = a.q;
    cfg.elongation = a.elongation;
    cfg.source = a.method.map(|m| match m {
        MethodArg::Closed => Source::Closed,
        MethodArg::Pipeline => Source::Pipeline,
        MethodArg::Brute => Source::Brute,
    });
    cfg.pipeline = a.pipeline.map(|p| match p {
        PipelineArg::FullMobius => PipelineMethod::FullMobius,
        PipelineArg::BsAssisted => PipelineMethod::BsAssisted,
    });
    cfg.r_max = a.r_max;
    cfg.format = match a.format {
        FormatArg::Table => Format::Table,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    if let Some(s) = a.budget_subspaces {
        cfg.budget = Budget {
            subspaces: s,
            ..Budget::default()
        };
    }
    cfg.seed = a.seed;
    cfg.level = match a.level {
        LevelArg::Fast => Level::Fast,
        LevelArg::Full => Level::Full,
    };
    cfg.d = a.d;
    cfg.m = a.m;
    cfg.timestamp = a.timestamp;

    let outcome = run(&cfg);
    if outcome.status == 0 || outcome.report.is_some() {
        print!("{}", outcome.output);
    } else {
        eprint!("{}", outcome.output);
    }
    ExitCode::from(outcome.status as u8)
}
