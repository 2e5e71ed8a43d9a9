use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use testcat_cli::run::{self, CliError, LoadedInput, RunOptions};
use testcat_core::homology::LocalizerSpec;
use testcat_core::limits::{Limits, DEFAULT_NERVE_DIM};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Localizer {
    W1,
    Winf,
}

#[derive(Parser)]
#[command(name = "testcat", version, about = "Finite test-category checks over composition tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// input documents (paths or corpus:<name>); repeatable
    #[arg(long, global = true)]
    input: Vec<String>,
    /// localizer for asphericity oracles
    #[arg(long, global = true, value_enum, default_value = "w1")]
    localizer: Localizer,
    /// coset-enumeration budget (deductions)
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// nerve truncation dimension
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// catalog document for weak-test evidence
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// write the report here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// report format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate documents
    Validate,
    /// Category of elements of a set/grpd-valued presheaf
    Elements,
    /// Grothendieck construction of a cat-valued presheaf
    Grothendieck,
    /// Nondegenerate nerve sizes
    Nerve,
    /// Integral homology of the nerve
    Homology,
    /// Fundamental groupoid presentation
    Pi1,
    /// W₁ membership of a functor
    W1,
    /// The presheaf I*(C) of a diagram (or slice diagram of a category)
    Istar,
    /// The counit evaluation at chosen terminal objects
    Counit,
    /// Cross-check the direct counit against the adjunction bijection
    CounitCrosscheck,
    /// Hom-set bijection and triangle identities of the adjunction
    Transpose,
    /// Sieve classifier of a strongly separating interval
    Sieve,
    /// Property checks with verdicts
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// List or export the built-in corpus
    Corpus {
        /// export corpus documents into this directory
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Is the category aspherical for the chosen localizer?
    Aspherical,
    /// Is the functor an aspherical morphism?
    Morphism,
    /// Full hierarchy report (aspherical/local test/test/strict test/...)
    Hierarchy,
    /// Catalog-bounded weak-test evidence
    WeakTest,
    /// Strong separation (and multiplicativity, for the canonical interval)
    Interval,
    /// Canonical isomorphism suite over generated presheaves
    IsoSuite,
    /// Pointwise-vs-total localizer consistency on a presheaf morphism
    Thomason,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn build_options(cli: &Cli) -> RunOptions {
    let mut limits = Limits::default();
    if let Some(b) = cli.budget {
        limits.coset_budget = b;
    }
    let dim = cli.dim.unwrap_or(DEFAULT_NERVE_DIM);
    limits.nerve_dim = dim;
    let localizer = match cli.localizer {
        Localizer::W1 => LocalizerSpec::W1 { budget: limits.coset_budget },
        Localizer::Winf => {
            LocalizerSpec::WinftyEvidence { dim, pi1_budget: limits.coset_budget }
        }
    };
    RunOptions { localizer, limits, catalog_path: cli.catalog.clone(), dim }
}

fn load_inputs(cli: &Cli) -> Result<Vec<LoadedInput>, CliError> {
    cli.input.iter().map(|s| run::load_input(s)).collect()
}

fn one_input(inputs: &[LoadedInput]) -> Result<&LoadedInput, CliError> {
    match inputs {
        [single] => Ok(single),
        _ => Err(CliError::Usage("this command takes exactly one --input".into())),
    }
}

fn execute(cli: &Cli) -> Result<ExitCode, CliError> {
    let opts = build_options(cli);
    let inputs = load_inputs(cli)?;
    let report = match &cli.command {
        Command::Validate => run::run_validate(&inputs, &opts),
        Command::Elements => run::run_elements(one_input(&inputs)?, &opts, false)?,
        Command::Grothendieck => run::run_elements(one_input(&inputs)?, &opts, true)?,
        Command::Nerve => run::run_nerve(one_input(&inputs)?, &opts)?,
        Command::Homology => run::run_homology(one_input(&inputs)?, &opts)?,
        Command::Pi1 => run::run_pi1(one_input(&inputs)?, &opts)?,
        Command::W1 => run::run_w1(one_input(&inputs)?, &opts)?,
        Command::Istar => run::run_istar(&inputs, &opts)?,
        Command::Counit => run::run_counit(&inputs, &opts)?,
        Command::CounitCrosscheck => run::run_counit_crosscheck(&inputs, &opts)?,
        Command::Transpose => run::run_transpose(&inputs, &opts)?,
        Command::Sieve => run::run_sieve(one_input(&inputs)?, &opts)?,
        Command::Check { what } => match what {
            CheckCommand::Aspherical => run::run_check_aspherical(one_input(&inputs)?, &opts)?,
            CheckCommand::Morphism => run::run_check_morphism(one_input(&inputs)?, &opts)?,
            CheckCommand::Hierarchy => run::run_check_hierarchy(one_input(&inputs)?, &opts)?,
            CheckCommand::WeakTest => run::run_check_weak_test(one_input(&inputs)?, &opts)?,
            CheckCommand::Interval => run::run_check_interval(one_input(&inputs)?, &opts)?,
            CheckCommand::IsoSuite => run::run_check_iso_suite(one_input(&inputs)?, &opts)?,
            CheckCommand::Thomason => run::run_check_thomason(one_input(&inputs)?, &opts)?,
        },
        Command::Corpus { export } => match export {
            Some(dir) => run::run_corpus_export(dir, &opts)?,
            None => run::run_corpus_list(&opts),
        },
    };

    let rendered = match cli.format {
        Format::Text => report.to_text(),
        Format::Structured => report.to_json(),
    };
    match &cli.output {
        Some(path) => {
            std::fs::write(path, rendered).map_err(|e| CliError::Io(e.to_string()))?
        }
        None => print!("{rendered}"),
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}
