use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use motkit_core::model::{RunConfig, SummandSpec, Task};
use motkit_core::run::{execute, load_config, load_model};
use motkit_core::Result;

/// Chow motives of geometrically split varieties: decompositions,
/// upper/lower/outer summands and self-verifying lifting constructions.
///
/// MODEL and CONFIG are JSON files, or `preset:<name>` for a built-in.
#[derive(Parser)]
#[command(name = "motkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    /// Seed for randomized searches; overrides the config's seed.
    #[arg(long, env = "MOTKIT_SEED", global = true)]
    seed: Option<u64>,
    /// Largest Hom set enumerated exhaustively by witness searches.
    #[arg(long, global = true)]
    enum_bound: Option<u64>,
    /// Accepted for compatibility; tasks run sequentially.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Validate structures and close the rationality spaces.
    Validate { model: String },
    /// Krull-Schmidt decomposition of a summand over a field node.
    Decompose {
        model: String,
        /// `EXPR[@twist][:terms]` or a JSON summand.
        #[arg(long)]
        summand: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Upper/lower/outer flags of a summand inside another.
    Classify {
        model: String,
        #[arg(long)]
        inner: String,
        #[arg(long)]
        outer_ambient: String,
    },
    /// Run the lifting lemma.
    Lemma3 {
        model: String,
        #[arg(long)]
        config: String,
    },
    /// Run the outer-summand theorem and verify its certificate.
    Theorem {
        model: String,
        #[arg(long)]
        config: String,
    },
}

const DEFAULT_ENUM_BOUND: u64 = 1 << 20;

fn configure(cmd: &Command) -> Result<(String, RunConfig)> {
    Ok(match cmd {
        Command::Validate { model } => (model.clone(), RunConfig::new(Task::Validate)),
        Command::Decompose { model, summand, field } => {
            let cfg = RunConfig { field: field.clone(), n: Some(SummandSpec::parse_arg(summand)?), ..RunConfig::new(Task::Decompose) };
            (model.clone(), cfg)
        }
        Command::Classify { model, inner, outer_ambient } => {
            let cfg = RunConfig {
                n: Some(SummandSpec::parse_arg(outer_ambient)?),
                m: Some(SummandSpec::parse_arg(inner)?),
                ..RunConfig::new(Task::Classify)
            };
            (model.clone(), cfg)
        }
        Command::Lemma3 { model, config } => (model.clone(), RunConfig { task: Task::Lemma3, ..load_config(config)? }),
        Command::Theorem { model, config } => (model.clone(), RunConfig { task: Task::Theorem, ..load_config(config)? }),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let prepared = configure(&cli.command).and_then(|(m, cfg)| Ok((load_model(&m)?, cfg)));
    let (model, cfg) = match prepared {
        Ok(x) => x,
        Err(e) => {
            match cli.output {
                Output::Text => eprintln!("error: {e}"),
                Output::Machine => {
                    println!("{}", serde_json::json!({ "status": "failed", "error": e.to_string() }))
                }
            }
            return ExitCode::from(1);
        }
    };
    let seed = cli.seed.or(cfg.seed).unwrap_or(0);
    let enum_bound = cli.enum_bound.or(cfg.enum_bound).unwrap_or(DEFAULT_ENUM_BOUND);
    let report = execute(&model, &cfg, seed, enum_bound);
    match cli.output {
        Output::Text => print!("{}", report.to_text()),
        Output::Machine => println!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code() as u8)
}
