use algshift_core::homology::{reduced_betti, relative_betti};
use algshift_core::shifting::{next_seed, shift_seeded};
use algshift_core::verify::verify_main;
use algshift_core::{ComplexPair, Error};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::document::ComplexDocument;
use crate::random::random_pair;
use crate::report::{betti_json, exhausted_json, report_json};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
  #[error("{0:#}")]
  Input(#[from] anyhow::Error),
  #[error("{0}")]
  Genericity(Error),
}

impl CliError {
  pub fn exit_code(&self) -> i32 {
    match self {
      CliError::Input(_) => exit::INPUT,
      CliError::Genericity(_) => exit::GENERICITY,
    }
  }
}

impl From<Error> for CliError {
  fn from(e: Error) -> Self {
    match e {
      Error::Genericity { .. } => CliError::Genericity(e),
      other => CliError::Input(other.into()),
    }
  }
}

pub mod exit {
  pub const PASS: i32 = 0;
  pub const COUNTEREXAMPLE: i32 = 2;
  pub const GENERICITY: i32 = 3;
  pub const INPUT: i32 = 4;
}

/// `Δ(K)` as a document, with the seed that produced it.
pub fn cmd_shift(doc: &ComplexDocument, config: &RunConfig) -> Result<Value, CliError> {
  config.validate()?;
  config.check_n(doc.n)?;
  let k = doc.to_complex()?;
  let r = shift_seeded(&k, &config.shift_config(config.seed)?)?;
  let out = ComplexDocument::from_complex(&r.delta);
  Ok(json!({ "n": out.n, "facets": out.facets, "seed": r.seed(), "p": config.p, "retries": r.retries }))
}

/// `β̃(K)`, or `β̃(K, L)` when a subcomplex is given.
pub fn cmd_betti(k: &ComplexDocument, l: Option<&ComplexDocument>, config: &RunConfig) -> Result<Value, CliError> {
  config.validate()?;
  config.check_n(k.n)?;
  let field = config.field()?;
  let kc = k.to_complex()?;
  let b = match l {
    None => reduced_betti(&kc, field),
    Some(l) => relative_betti(&ComplexPair::new(kc, l.to_complex()?)?, field),
  };
  Ok(betti_json(&b))
}

#[derive(Debug, Clone)]
pub enum VerifySource {
  Pair(ComplexPair),
  Random { n: usize, facets: usize, void_point: bool },
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
  pub lines: Vec<Value>,
  pub exit_code: i32,
}

/// One report per trial, in trial order. Trial `t` shifts with seed
/// `seed + t`; random instances draw their pair from a separate stream.
pub fn cmd_verify(source: &VerifySource, config: &RunConfig) -> Result<VerifyOutcome, CliError> {
  config.validate()?;
  match source {
    VerifySource::Pair(p) => config.check_n(p.n())?,
    VerifySource::Random { n, .. } => config.check_n(*n)?,
  }
  let lines: Vec<Result<(Value, i32), CliError>> = (0..config.trials)
    .into_par_iter()
    .map(|t| {
      let seed = config.seed.wrapping_add(t as u64);
      let pair = match source {
        VerifySource::Pair(p) => p.clone(),
        VerifySource::Random { n, facets, void_point } => random_pair(*n, config.dim_max, *facets, next_seed(seed), *void_point)?,
      };
      match verify_main(&pair, &config.shift_config(seed)?) {
        Ok(r) => {
          let code = if r.pass() { exit::PASS } else { exit::COUNTEREXAMPLE };
          Ok((report_json(t, &r), code))
        }
        Err(e @ Error::Genericity { last_seed, .. }) => {
          Ok((exhausted_json(t, pair.k(), pair.l(), last_seed, config.p, &e.to_string()), exit::GENERICITY))
        }
        Err(e) => Err(e.into()),
      }
    })
    .collect();
  let mut out = Vec::with_capacity(lines.len());
  let mut codes = Vec::with_capacity(lines.len());
  for line in lines {
    let (v, c) = line?;
    out.push(v);
    codes.push(c);
  }
  let exit_code = if codes.contains(&exit::COUNTEREXAMPLE) {
    exit::COUNTEREXAMPLE
  } else if codes.contains(&exit::GENERICITY) {
    exit::GENERICITY
  } else {
    exit::PASS
  };
  Ok(VerifyOutcome { lines: out, exit_code })
}
