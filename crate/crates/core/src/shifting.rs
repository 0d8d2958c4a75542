//! Algebraic shifting `Δ(K)` by greedy lexicographic selection of the rows
//! `f̄_S`, with genericity validation and deterministic resampling.

use std::collections::BTreeMap;

use crate::complex::{ComplexPair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exterior::{FaceCoordinates, GenericMatrix, GenericRows};
use crate::face::Face;
use crate::field::PrimeField;
use crate::homology::reduced_betti;
use crate::nearcone::betti_near_cone;
use crate::subspace::EchelonBasis;

pub const DEFAULT_MAX_RETRIES: usize = 5;

/// Parameters of a shifting run: field, first seed, and how many fresh
/// seeds to try after a failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftConfig {
  pub field: PrimeField,
  pub seed: u64,
  pub max_retries: usize,
}

impl Default for ShiftConfig {
  fn default() -> Self { Self { field: PrimeField::default(), seed: 0, max_retries: DEFAULT_MAX_RETRIES } }
}

impl ShiftConfig {
  pub fn with_seed(seed: u64) -> Self { Self { seed, ..Self::default() } }

  /// Seeds tried in order: the configured seed, then its successors.
  pub fn seeds(&self) -> impl Iterator<Item = u64> {
    std::iter::successors(Some(self.seed), |&s| Some(next_seed(s))).take(self.max_retries + 1)
  }
}

/// SplitMix64 step, used to derive the resample chain.
pub fn next_seed(seed: u64) -> u64 {
  let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
  z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
  z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
  z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftResult {
  pub delta: SimplicialComplex,
  /// For each degree, the accepted subsets in lex order and the pivot
  /// column each contributed.
  pub pivot_log: BTreeMap<i32, Vec<(Face, usize)>>,
  /// The generic matrix of the accepted attempt.
  pub alpha: GenericMatrix,
  pub retries: usize,
}

impl ShiftResult {
  pub fn seed(&self) -> u64 { self.alpha.seed() }
}

/// Greedy selection in one degree: walk the rows in lex order of their
/// subsets and keep those that raise the rank. `columns` restricts the
/// rows to a sub-complex's coordinates.
pub(crate) fn select_degree(
  rows: &GenericRows,
  j: i32,
  columns: Option<&[usize]>,
  field: PrimeField,
  ambient: usize,
) -> (Vec<(Face, usize)>, EchelonBasis) {
  let mut basis = EchelonBasis::new(field, ambient);
  let mut accepted = Vec::new();
  let mut buf = vec![0; ambient];
  for (s, row) in rows.subsets(j).iter().zip(rows.rows(j)) {
    if basis.rank() == ambient {
      break;
    }
    let v: &[u64] = match columns {
      Some(cols) => {
        for (b, &c) in buf.iter_mut().zip(cols) {
          *b = row[c];
        }
        &buf
      }
      None => row,
    };
    if let Some(p) = basis.insert(v) {
      accepted.push((*s, p));
    }
  }
  (accepted, basis)
}

/// Coordinates of `L_j` inside `K_j`.
pub(crate) fn sub_columns(k: &SimplicialComplex, l: &SimplicialComplex, j: i32) -> Vec<usize> {
  l.faces_of_dim(j).iter().map(|f| k.index_of(*f).expect("L ⊆ K")).collect()
}

fn shift_rows(k: &SimplicialComplex, l: Option<&SimplicialComplex>, rows: &GenericRows, alpha: &GenericMatrix) -> Result<ShiftResult> {
  let target = l.unwrap_or(k);
  let mut log = BTreeMap::new();
  for j in rows.degrees() {
    let cols = l.map(|l| sub_columns(k, l, j));
    let (accepted, _) = select_degree(rows, j, cols.as_deref(), alpha.field(), target.count(j));
    log.insert(j, accepted);
  }
  // a degenerate α can accept a family that is not closed under subsets
  let faces = log.values().flatten().map(|(f, _)| *f);
  let delta = SimplicialComplex::from_faces(target.n(), faces)
    .map_err(|_| Error::Genericity { attempts: 1, last_seed: alpha.seed() })?;
  Ok(ShiftResult { delta, pivot_log: log, alpha: alpha.clone(), retries: 0 })
}

/// One shifting attempt with a fixed `α`, no validation.
pub fn shift_once(k: &SimplicialComplex, alpha: &GenericMatrix) -> Result<ShiftResult> {
  let rows = GenericRows::compute(alpha, FaceCoordinates::new(k))?;
  shift_rows(k, None, &rows, alpha)
}

/// Whether the shifted complex carries the invariants forced by a generic
/// specialization: shifted, same f-vector, same Betti numbers (homology of
/// `K` against the near-cone count on `Δ(K)`), and a weighted coboundary
/// whose weights `α_1v` are all non-zero.
pub fn validate_genericity(k: &SimplicialComplex, result: &ShiftResult) -> bool {
  let delta = &result.delta;
  if !delta.is_shifted() || delta.f_vector() != k.f_vector() || delta.is_void() != k.is_void() {
    return false;
  }
  if delta.count(-1) != k.count(-1) {
    return false;
  }
  let weights_ok = (1..=k.n()).all(|v| result.alpha.entry(1, v) != 0);
  if !weights_ok {
    return false;
  }
  if k.is_void() {
    return true;
  }
  match betti_near_cone(delta, 1) {
    Ok(b) => b == reduced_betti(k, result.alpha.field()),
    Err(_) => false,
  }
}

/// Shifts `K` with the given `α` and validates the result.
pub fn shift(k: &SimplicialComplex, alpha: &GenericMatrix) -> Result<ShiftResult> {
  let mut result = match shift_once(k, alpha) {
    Ok(r) => r,
    Err(Error::Genericity { .. }) => return Err(Error::Genericity { attempts: 1, last_seed: alpha.seed() }),
    Err(e) => return Err(e),
  };
  if !validate_genericity(k, &result) {
    return Err(Error::Genericity { attempts: 1, last_seed: alpha.seed() });
  }
  result.alpha.mark_validated();
  Ok(result)
}

/// Shifts `K`, resampling `α` along the seed chain until validation passes.
pub fn shift_seeded(k: &SimplicialComplex, config: &ShiftConfig) -> Result<ShiftResult> {
  let mut last = config.seed;
  for (attempt, seed) in config.seeds().enumerate() {
    last = seed;
    let alpha = GenericMatrix::sample(config.field, k.n(), seed);
    match shift(k, &alpha) {
      Ok(mut r) => {
        r.retries = attempt;
        return Ok(r);
      }
      Err(Error::Genericity { .. }) => log::warn!("shift: seed {seed} failed genericity validation, resampling"),
      Err(e) => return Err(e),
    }
  }
  Err(Error::Genericity { attempts: config.max_retries + 1, last_seed: last })
}

/// `Δ(K)` and `Δ(L)` computed with one shared `α`. `L` is shifted inside
/// `Λ[K]` modulo `Q̄`, i.e. on the rows of `K` restricted to `L`'s
/// coordinates.
#[derive(Debug, Clone)]
pub struct PairShift {
  pub k: ShiftResult,
  pub l: ShiftResult,
  /// `f̄_S` in the face coordinates of `K`.
  pub rows: GenericRows,
  pub retries: usize,
}

impl PairShift {
  pub fn alpha(&self) -> &GenericMatrix { &self.k.alpha }

  pub fn shifted_pair(&self) -> Result<ComplexPair> { ComplexPair::new(self.k.delta.clone(), self.l.delta.clone()) }
}

fn shift_pair_once(pair: &ComplexPair, alpha: &GenericMatrix) -> Result<Option<PairShift>> {
  let rows = GenericRows::compute(alpha, FaceCoordinates::new(pair.k()))?;
  let (mut k, mut l) = match (shift_rows(pair.k(), None, &rows, alpha), shift_rows(pair.k(), Some(pair.l()), &rows, alpha)) {
    (Ok(k), Ok(l)) => (k, l),
    (Err(Error::Genericity { .. }), _) | (_, Err(Error::Genericity { .. })) => return Ok(None),
    (Err(e), _) | (_, Err(e)) => return Err(e),
  };
  let ok = validate_genericity(pair.k(), &k) && validate_genericity(pair.l(), &l) && l.delta.is_subcomplex_of(&k.delta);
  if !ok {
    return Ok(None);
  }
  k.alpha.mark_validated();
  l.alpha.mark_validated();
  Ok(Some(PairShift { k, l, rows, retries: 0 }))
}

/// Shifts both complexes of a pair with the same `α`, resampling on any
/// validation failure, including a failed containment `Δ(L) ⊆ Δ(K)`.
pub fn shift_pair(pair: &ComplexPair, config: &ShiftConfig) -> Result<PairShift> {
  shift_pair_from(pair, config, 0)
}

pub(crate) fn shift_pair_from(pair: &ComplexPair, config: &ShiftConfig, skip: usize) -> Result<PairShift> {
  let mut last = config.seed;
  for (attempt, seed) in config.seeds().enumerate().skip(skip) {
    last = seed;
    let alpha = GenericMatrix::sample(config.field, pair.n(), seed);
    match shift_pair_once(pair, &alpha)? {
      Some(mut s) => {
        s.retries = attempt;
        s.k.retries = attempt;
        s.l.retries = attempt;
        return Ok(s);
      }
      None => log::warn!("shift_pair: seed {seed} failed genericity validation, resampling"),
    }
  }
  Err(Error::Genericity { attempts: config.max_retries + 1, last_seed: last })
}

/// Diagnostic only: whether shifting `Δ(K)` again returns it unchanged.
pub fn is_fixed_point(result: &ShiftResult, config: &ShiftConfig) -> Result<bool> {
  Ok(shift_seeded(&result.delta, config)?.delta == result.delta)
}
