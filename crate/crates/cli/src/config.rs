use std::path::PathBuf;

use algshift_core::shifting::{ShiftConfig, DEFAULT_MAX_RETRIES};
use algshift_core::PrimeField;
use anyhow::ensure;

pub const DEFAULT_N_MAX: usize = 14;

/// Settings shared by all subcommands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
  pub p: u64,
  pub seed: u64,
  pub trials: usize,
  pub n_max: usize,
  pub dim_max: usize,
  pub max_retries: usize,
  pub out: Option<PathBuf>,
}

impl Default for RunConfig {
  fn default() -> Self {
    Self {
      p: algshift_core::field::MERSENNE_61,
      seed: 0,
      trials: 1,
      n_max: DEFAULT_N_MAX,
      dim_max: 3,
      max_retries: DEFAULT_MAX_RETRIES,
      out: None,
    }
  }
}

impl RunConfig {
  pub fn validate(&self) -> anyhow::Result<()> {
    PrimeField::new(self.p)?;
    ensure!(self.trials >= 1, "trials must be at least 1");
    Ok(())
  }

  pub fn field(&self) -> anyhow::Result<PrimeField> { Ok(PrimeField::new(self.p)?) }

  pub fn check_n(&self, n: usize) -> anyhow::Result<()> {
    ensure!(n <= self.n_max, "ground set size {n} exceeds the limit {} (raise it with --n-max)", self.n_max);
    Ok(())
  }

  pub fn shift_config(&self, seed: u64) -> anyhow::Result<ShiftConfig> {
    Ok(ShiftConfig { field: self.field()?, seed, max_retries: self.max_retries })
  }
}
