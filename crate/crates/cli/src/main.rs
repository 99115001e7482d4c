use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use log::{info, warn};

use qnmc_core::datagen::{DatasetSource, ManifestEntry};
use qnmc_core::{
    emit_report, load_csv, run_experiment, run_sweep, ClassifierKind, CsvSchema, Dataset,
    EncodingKind, ExperimentConfig, ExperimentResult, Generator, Manifest, OutputFormat,
    RescaleGrid, SplitSpec,
};

/// Nearest mean classifiers (Euclidean and density-matrix) over repeated
/// random train/test splits.
#[derive(Parser, Debug)]
#[command(name = "qnmc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one dataset, from a CSV file or a built-in generator.
    Run(RunArgs),
    /// Evaluate every dataset listed in a TOML manifest.
    Batch(BatchArgs),
}

#[derive(Args, Debug)]
struct RunArgs {
    /// CSV file: numeric features plus one label column.
    #[arg(
        long,
        conflicts_with = "generator",
        required_unless_present = "generator"
    )]
    dataset: Option<PathBuf>,

    /// gaussian-1, gaussian-2, gaussian-3, moon or banana.
    #[arg(long)]
    generator: Option<Generator>,

    /// 0-based label column (default: last).
    #[arg(long, requires = "dataset")]
    label_column: Option<usize>,

    /// The CSV file has no header line.
    #[arg(long, requires = "dataset")]
    no_header: bool,

    /// Seed for the generator.
    #[arg(long, default_value_t = 0, requires = "generator")]
    data_seed: u64,

    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct BatchArgs {
    #[arg(long)]
    manifest: PathBuf,

    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// stereo2d, stereo-nd or norm-augmented.
    #[arg(long, default_value_t = EncodingKind::NormAugmented)]
    encoding: EncodingKind,

    #[arg(long, default_value_t = 10)]
    runs: usize,

    #[arg(long, default_value_t = 0.8)]
    train_frac: f64,

    /// Split seed; run r uses stream r of this seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Comma-separated subset of nmc,qnmc.
    #[arg(long, value_delimiter = ',', default_value = "nmc,qnmc")]
    classifiers: Vec<ClassifierKind>,

    /// Rescaling sweep: all three of min, max and step.
    #[arg(long, requires_all = ["rescale_max", "rescale_step"])]
    rescale_min: Option<f64>,

    #[arg(long, requires_all = ["rescale_min", "rescale_step"])]
    rescale_max: Option<f64>,

    #[arg(long, requires_all = ["rescale_min", "rescale_max"])]
    rescale_step: Option<f64>,

    #[arg(long, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

impl CommonArgs {
    fn config(&self) -> Result<ExperimentConfig> {
        let config = ExperimentConfig {
            encoding: self.encoding,
            split: SplitSpec {
                train_fraction: self.train_frac,
                runs: self.runs,
                seed: self.seed,
            },
            classifiers: self.classifiers.clone(),
        };
        config.validate()?;
        Ok(config)
    }

    fn grid(&self) -> Result<Option<RescaleGrid>> {
        match (self.rescale_min, self.rescale_max, self.rescale_step) {
            (Some(min), Some(max), Some(step)) => Ok(Some(RescaleGrid::new(min, max, step)?)),
            (None, None, None) => Ok(None),
            _ => bail!("--rescale-min, --rescale-max and --rescale-step go together"),
        }
    }
}

fn evaluate(
    dataset: &Dataset,
    config: &ExperimentConfig,
    grid: Option<&RescaleGrid>,
) -> Result<Vec<ExperimentResult>> {
    info!(
        "{}: {} patterns, d = {}, {} classes",
        dataset.name,
        dataset.len(),
        dataset.dim(),
        dataset.class_counts().len()
    );
    let context = || format!("evaluating {}", dataset.name);
    match grid {
        None => Ok(vec![run_experiment(dataset, config).with_context(context)?]),
        Some(grid) => {
            let sweep = run_sweep(dataset, config, grid).with_context(context)?;
            if !sweep.nmc_labels_invariant() {
                warn!(
                    "{}: NMC labels changed across the rescaling grid",
                    dataset.name
                );
            }
            Ok(sweep.points)
        }
    }
}

fn run(args: &RunArgs) -> Result<()> {
    let config = args.common.config()?;
    let grid = args.common.grid()?;
    let dataset = match (&args.dataset, args.generator) {
        (Some(path), None) => {
            let schema = CsvSchema {
                label_column: args.label_column,
                has_header: !args.no_header,
                label_alphabet: None,
            };
            load_csv(path, &schema).with_context(|| format!("loading {}", path.display()))?
        }
        (None, Some(g)) => g.generate(args.data_seed)?,
        _ => bail!("give exactly one of --dataset or --generator"),
    };
    let results = evaluate(&dataset, &config, grid.as_ref())?;
    write(&results, &args.common, grid.is_some())
}

fn missing_file(entry: &ManifestEntry) -> Option<&Path> {
    match &entry.source {
        DatasetSource::Csv { path, .. } if !path.exists() => Some(path),
        _ => None,
    }
}

fn batch(args: &BatchArgs) -> Result<()> {
    let config = args.common.config()?;
    let grid = args.common.grid()?;
    let manifest = Manifest::load(&args.manifest)?;
    let mut results = Vec::new();
    for entry in &manifest.entries {
        if let Some(path) = missing_file(entry) {
            warn!("{}: skipped, {} not found", entry.name, path.display());
            continue;
        }
        let dataset = entry
            .load()
            .with_context(|| format!("loading dataset {}", entry.name))?;
        results.extend(evaluate(&dataset, &config, grid.as_ref())?);
    }
    if results.is_empty() && !manifest.entries.is_empty() {
        bail!("none of the manifest datasets could be found");
    }
    write(&results, &args.common, grid.is_some())
}

fn write(results: &[ExperimentResult], common: &CommonArgs, sweep: bool) -> Result<()> {
    emit_report(results, common.format, sweep, common.out.as_deref())?;
    if let Some(out) = &common.out {
        info!("wrote {}", out.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Run(args) => run(args),
        Command::Batch(args) => batch(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
