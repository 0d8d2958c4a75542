//! JSON encodings of Betti tables and verification reports. Every number
//! is an integer.

use algshift_core::verify::VerificationReport;
use algshift_core::BettiTable;
use serde_json::{json, Map, Value};

use crate::document::ComplexDocument;

/// Nonzero entries keyed by degree, e.g. `{"0": 1, "1": 1}`.
pub fn betti_json(b: &BettiTable) -> Value { Value::Object(b.nonzero().map(|(j, v)| (j.to_string(), json!(v))).collect()) }

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
  Pass,
  Counterexample,
  GenericityExhausted,
}

impl Status {
  pub fn as_str(self) -> &'static str {
    match self {
      Status::Pass => "PASS",
      Status::Counterexample => "COUNTEREXAMPLE",
      Status::GenericityExhausted => "GENERICITY_EXHAUSTED",
    }
  }
}

pub fn pair_json(k: &algshift_core::SimplicialComplex, l: &algshift_core::SimplicialComplex) -> Value {
  json!({ "k": ComplexDocument::from_complex(k), "l": ComplexDocument::from_complex(l) })
}

pub fn report_json(trial: usize, r: &VerificationReport) -> Value {
  let per_degree = |f: &dyn Fn(i32) -> Value| -> Value { Value::Object(r.degrees().map(|j| (j.to_string(), f(j))).collect::<Map<_, _>>()) };
  let a_dims = per_degree(&|j| {
    let a = r.a_dims.at(j);
    json!({
      "kq": a.kq,
      "lqPrime": a.lq_prime,
      "lq": a.lq,
      "kl": a.kl,
      "preimageOverImage": a.preimage_over_image,
      "kernelOverDeltaQ": a.kernel_over_delta_q,
    })
  });
  let c_counts = per_degree(&|j| {
    let c = r.c_counts.get(&j).copied().unwrap_or_default();
    json!({ "kq": c.kq, "lqPrime": c.lq_prime, "lq": c.lq, "kl": c.kl })
  });
  let lm = r.lemmas;
  let status = if r.pass() { Status::Pass } else { Status::Counterexample };
  json!({
    "trial": trial,
    "pair": pair_json(r.pair.k(), r.pair.l()),
    "shifted": pair_json(r.shifted.k(), r.shifted.l()),
    "seed": r.seed,
    "p": r.p,
    "retries": r.retries,
    "betti": {
      "k": betti_json(&r.betti.k),
      "l": betti_json(&r.betti.l),
      "kl": betti_json(&r.betti.kl),
      "deltaK": betti_json(&r.betti.delta_k),
      "deltaL": betti_json(&r.betti.delta_l),
      "deltaKL": betti_json(&r.betti.delta_kl),
    },
    "aDims": a_dims,
    "cCounts": c_counts,
    "lemmas": {
      "gamma": lm.gamma,
      "imKer": lm.im_ker,
      "sigmaTop": lm.sigma_top,
      "sigmaBottom": lm.sigma_bottom,
      "new1": lm.new1,
      "new2": lm.new2,
      "main": lm.main,
      "les": lm.les,
    },
    "pass": r.pass(),
    "status": status.as_str(),
    "failures": r.failures,
  })
}

/// Line emitted when every seed of the resample chain failed validation.
pub fn exhausted_json(trial: usize, k: &algshift_core::SimplicialComplex, l: &algshift_core::SimplicialComplex, seed: u64, p: u64, error: &str) -> Value {
  json!({
    "trial": trial,
    "pair": pair_json(k, l),
    "seed": seed,
    "p": p,
    "pass": false,
    "status": Status::GenericityExhausted.as_str(),
    "error": error,
  })
}
