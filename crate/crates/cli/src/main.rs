use std::io::Write;
use std::path::PathBuf;

use algshift_cli::{cmd_betti, cmd_shift, cmd_verify, exit, CliError, ComplexDocument, RunConfig, VerifySource};
use algshift_core::ComplexPair;
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "algshift", version, about = "Algebraic shifting and relative Betti numbers over a prime field")]
struct Cli {
  /// Increase log verbosity (-v info, -vv debug).
  #[arg(short, long, action = clap::ArgAction::Count, global = true)]
  verbose: u8,

  #[command(subcommand)]
  command: Command,
}

#[derive(Args)]
struct Common {
  /// Prime modulus of the coefficient field.
  #[arg(long, default_value_t = algshift_core::field::MERSENNE_61)]
  prime: u64,
  #[arg(long, default_value_t = 0)]
  seed: u64,
  /// Resamples allowed after a failed genericity check.
  #[arg(long, default_value_t = algshift_core::shifting::DEFAULT_MAX_RETRIES)]
  max_retries: usize,
  /// Largest accepted ground set.
  #[arg(long, default_value_t = algshift_cli::config::DEFAULT_N_MAX)]
  n_max: usize,
  /// Write output here instead of stdout.
  #[arg(long)]
  out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
  /// Print the algebraically shifted complex.
  Shift {
    /// Complex document, or `-` for stdin.
    input: PathBuf,
    #[command(flatten)]
    common: Common,
  },
  /// Print reduced Betti numbers, relative to SUB if given.
  Betti {
    input: PathBuf,
    sub: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
  },
  /// Verify the relative Betti inequality on a pair or on random pairs.
  Verify {
    /// Ambient complex K.
    #[arg(required_unless_present = "random")]
    k: Option<PathBuf>,
    /// Subcomplex L.
    #[arg(required_unless_present = "random")]
    l: Option<PathBuf>,
    /// Draw pairs at random instead of reading them.
    #[arg(long, conflicts_with_all = ["k", "l"])]
    random: bool,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    /// Ground set size for random pairs.
    #[arg(long, default_value_t = 6)]
    n: usize,
    /// Maximum facet dimension for random pairs.
    #[arg(long, default_value_t = 3)]
    dim: usize,
    /// Number of facets drawn for random pairs.
    #[arg(long, default_value_t = 5)]
    facets: usize,
    /// With zero facets, use {∅} rather than ∅.
    #[arg(long)]
    void_point: bool,
    #[command(flatten)]
    common: Common,
  },
}

fn config(common: &Common) -> RunConfig {
  RunConfig {
    p: common.prime,
    seed: common.seed,
    n_max: common.n_max,
    max_retries: common.max_retries,
    out: common.out.clone(),
    ..RunConfig::default()
  }
}

fn emit(lines: &[Value], out: Option<&PathBuf>) -> anyhow::Result<()> {
  let mut text = String::new();
  for line in lines {
    text.push_str(&serde_json::to_string(line)?);
    text.push('\n');
  }
  match out {
    Some(path) => std::fs::write(path, text)?,
    None => std::io::stdout().lock().write_all(text.as_bytes())?,
  }
  Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
  match cli.command {
    Command::Shift { input, common } => {
      let cfg = config(&common);
      let v = cmd_shift(&ComplexDocument::read(&input)?, &cfg)?;
      emit(&[v], cfg.out.as_ref())?;
      Ok(exit::PASS)
    }
    Command::Betti { input, sub, common } => {
      let cfg = config(&common);
      let l = sub.map(|p| ComplexDocument::read(&p)).transpose()?;
      let v = cmd_betti(&ComplexDocument::read(&input)?, l.as_ref(), &cfg)?;
      emit(&[v], cfg.out.as_ref())?;
      Ok(exit::PASS)
    }
    Command::Verify { k, l, random, trials, n, dim, facets, void_point, common } => {
      let cfg = RunConfig { trials, dim_max: dim, ..config(&common) };
      let source = if random {
        VerifySource::Random { n, facets, void_point }
      } else {
        let (k, l) = (k.expect("required by clap"), l.expect("required by clap"));
        let pair = ComplexPair::new(ComplexDocument::read(&k)?.to_complex()?, ComplexDocument::read(&l)?.to_complex()?)
          .map_err(anyhow::Error::from)?;
        VerifySource::Pair(pair)
      };
      let outcome = cmd_verify(&source, &cfg)?;
      emit(&outcome.lines, cfg.out.as_ref())?;
      Ok(outcome.exit_code)
    }
  }
}

fn main() {
  let cli = match Cli::try_parse() {
    Ok(cli) => cli,
    Err(e) => {
      let code = if e.use_stderr() { exit::INPUT } else { exit::PASS };
      let _ = e.print();
      std::process::exit(code);
    }
  };
  let level = match cli.verbose {
    0 => log::LevelFilter::Warn,
    1 => log::LevelFilter::Info,
    _ => log::LevelFilter::Debug,
  };
  env_logger::Builder::new().filter_level(level).init();
  let code = match run(cli) {
    Ok(code) => code,
    Err(e) => {
      eprintln!("error: {e}");
      e.exit_code()
    }
  };
  std::process::exit(code);
}
