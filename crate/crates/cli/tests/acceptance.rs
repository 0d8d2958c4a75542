//! End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any criterion fails.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use algshift_cli::random_pair;
use algshift_core::complex::{ComplexPair, SimplicialComplex};
use algshift_core::face::Face;
use algshift_core::field::PrimeField;
use algshift_core::homology::{reduced_betti, relative_betti};
use algshift_core::matrix::Matrix;
use algshift_core::nearcone::betti_near_cone;
use algshift_core::shifting::{next_seed, shift_seeded, ShiftConfig};
use algshift_core::subspace::{lemma_kij_check, Subspace};
use algshift_core::verify::{verify_main, VerificationReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const INSTANCES: usize = 200;
const SUBSPACE_TRIPLES: usize = 500;
const DIM_MAX: usize = 4;
const SMALL_PAIR_LIMIT: Duration = Duration::from_secs(1);
const SHIFT_LIMIT: Duration = Duration::from_secs(60);
const PAIR_SUITE_LIMIT: Duration = Duration::from_secs(120);
const SCALE_LIMIT: Duration = Duration::from_secs(30);

static WARNINGS: Mutex<Vec<String>> = Mutex::new(Vec::new());

struct Capture;

impl log::Log for Capture {
  fn enabled(&self, m: &log::Metadata) -> bool { m.level() <= log::Level::Warn }

  fn log(&self, r: &log::Record) {
    if self.enabled(r.metadata()) {
      WARNINGS.lock().unwrap().push(r.args().to_string());
    }
  }

  fn flush(&self) {}
}

fn facets(n: usize, fs: &[&[usize]]) -> SimplicialComplex {
  SimplicialComplex::from_facets(n, fs.iter().map(|f| Face::of(f))).unwrap()
}

/// `n` cycles through 3..=8 and the facet count through 1..=8.
fn instance(i: usize) -> ComplexPair {
  random_pair(3 + i % 6, DIM_MAX, 1 + i % 8, next_seed(0xACCE_0000 + i as u64), false).unwrap()
}

fn criterion_1() -> Result<String, String> {
  let start = Instant::now();
  let field = PrimeField::default();
  let pair = ComplexPair::new(facets(3, &[&[1], &[2, 3]]), facets(3, &[&[1], &[2]])).unwrap();
  let r = verify_main(&pair, &ShiftConfig::default()).map_err(|e| e.to_string())?;
  let elapsed = start.elapsed();
  let expected_k = facets(3, &[&[1, 2], &[3]]);
  let checks = [
    (r.shifted.k() == &expected_k, "Δ(K) has facets {1,2},{3}"),
    (r.shifted.l() == pair.l(), "Δ(L) = L"),
    (relative_betti(&pair, field).is_zero(), "β̃(K,L) = 0"),
    (r.betti.delta_kl == [(0, 1), (1, 1)].into_iter().collect(), "β̃(Δ(K),Δ(L)) = 1 at dims 0, 1"),
    (r.pass(), "report passes"),
    (elapsed < SMALL_PAIR_LIMIT, "runtime"),
  ];
  match checks.iter().find(|c| !c.0) {
    Some((_, what)) => Err(format!("{what} failed ({elapsed:?})")),
    None => Ok(format!("exact match in {elapsed:?}")),
  }
}

fn criterion_2(retries: &mut usize) -> Result<String, String> {
  let start = Instant::now();
  let field = PrimeField::default();
  for i in 0..INSTANCES {
    let k = instance(i).k().clone();
    let r = shift_seeded(&k, &ShiftConfig::with_seed(i as u64)).map_err(|e| format!("instance {i}: {e}"))?;
    *retries += r.retries;
    let b = reduced_betti(&k, field);
    let near_cone = if r.delta.is_void() { Default::default() } else { betti_near_cone(&r.delta, 1).map_err(|e| e.to_string())? };
    if !r.delta.is_shifted() || r.delta.f_vector() != k.f_vector() || b != near_cone || b != reduced_betti(&r.delta, field) {
      return Err(format!("instance {i} ({k:?}) violates a shifting invariant"));
    }
  }
  let elapsed = start.elapsed();
  if elapsed >= SHIFT_LIMIT {
    return Err(format!("took {elapsed:?}"));
  }
  Ok(format!("{INSTANCES} complexes in {elapsed:?}"))
}

fn first_failure(reports: &[VerificationReport], ok: impl Fn(&VerificationReport) -> bool, what: &str) -> Result<String, String> {
  match reports.iter().position(|r| !ok(r)) {
    Some(i) => Err(format!("pair {i}: {what}: {:?}", reports[i].failures)),
    None => Ok(format!("{} pairs", reports.len())),
  }
}

fn criterion_3(reports: &[VerificationReport], elapsed: Duration) -> Result<String, String> {
  let field = PrimeField::default();
  first_failure(
    reports,
    |r| r.shifted.l().is_subcomplex_of(r.shifted.k()) && r.betti.kl.dominated_by(&r.betti.delta_kl) && r.betti.kl == relative_betti(&r.pair, field),
    "main inequality",
  )?;
  if elapsed >= PAIR_SUITE_LIMIT {
    return Err(format!("took {elapsed:?}"));
  }
  let strict = reports.iter().filter(|r| r.betti.kl != r.betti.delta_kl).count();
  Ok(format!("{} pairs in {elapsed:?}, {strict} strict", reports.len()))
}

fn criterion_4(reports: &[VerificationReport]) -> Result<String, String> {
  first_failure(
    reports,
    |r| {
      let sizes = r.degrees().all(|j| r.gamma_counts.get(&j).copied().unwrap_or(0) == r.pair.difference(j).count());
      sizes && r.lemmas.gamma && r.lemmas.im_ker && r.lemmas.sigma_top && r.lemmas.sigma_bottom
    },
    "normal-form or quotient lemma",
  )
}

fn criterion_5(reports: &[VerificationReport]) -> Result<String, String> {
  first_failure(
    reports,
    |r| {
      let chain = r.degrees().all(|j| {
        let (a, c) = (r.a_dims.at(j), r.c_counts[&j]);
        a.kl >= c.kl && a.kq <= c.kq && a.lq == r.a_dims.at(j + 1).lq_prime
      });
      chain && r.lemmas.new1 && r.lemmas.new2 && r.lemmas.main
    },
    "bookkeeping identity",
  )
}

fn criterion_6(reports: &[VerificationReport]) -> Result<String, String> {
  first_failure(
    reports,
    |r| r.lemmas.les && r.degrees().all(|j| r.les.get(&j).map_or(0, |x| x.total()) == r.betti.kl.get(j)),
    "long exact sequence ranks",
  )
}

fn rank(field: PrimeField, ambient: usize, rows: &[Vec<u64>]) -> usize { Matrix::from_rows(field, ambient, rows).rank() }

fn criterion_7() -> Result<String, String> {
  let mut rng = ChaCha8Rng::seed_from_u64(7);
  for t in 0..SUBSPACE_TRIPLES {
    // small primes so that random subspaces meet non-trivially
    let field = PrimeField::new([2, 3, 5, 7][t % 4]).unwrap();
    let ambient = rng.gen_range(1..=8);
    let vector = |rng: &mut ChaCha8Rng| -> Vec<u64> { (0..ambient).map(|_| rng.gen_range(0..field.modulus())).collect() };
    let i_rows: Vec<Vec<u64>> = (0..rng.gen_range(0..=3)).map(|_| vector(&mut rng)).collect();
    let mut k_rows = i_rows.clone();
    k_rows.extend((0..rng.gen_range(0..=3)).map(|_| vector(&mut rng)).collect::<Vec<_>>());
    let j_rows: Vec<Vec<u64>> = (0..rng.gen_range(0..=5)).map(|_| vector(&mut rng)).collect();
    let (i, j, k) = (Subspace::span(field, ambient, &i_rows), Subspace::span(field, ambient, &j_rows), Subspace::span(field, ambient, &k_rows));
    if !lemma_kij_check(&i, &j, &k).map_err(|e| e.to_string())? {
      return Err(format!("triple {t} fails the library check"));
    }
    // dim(X ∩ J) = dim X + dim J - dim(X + J), from ranks alone
    let cat = |a: &[Vec<u64>], b: &[Vec<u64>]| -> Vec<Vec<u64>> { a.iter().chain(b).cloned().collect() };
    let (ri, rj, rk) = (rank(field, ambient, &i_rows) as i64, rank(field, ambient, &j_rows) as i64, rank(field, ambient, &k_rows) as i64);
    let (rij, rkj) = (rank(field, ambient, &cat(&i_rows, &j_rows)) as i64, rank(field, ambient, &cat(&k_rows, &j_rows)) as i64);
    let caps = (rk + rj - rkj) - (ri + rj - rij);
    let sums = rkj - rij;
    if rk - ri != caps + sums {
      return Err(format!("triple {t} fails the rank identity"));
    }
  }
  Ok(format!("{SUBSPACE_TRIPLES} triples"))
}

fn criterion_8(retries: usize) -> Result<String, String> {
  if retries != 0 {
    return Err(format!("{retries} resamples at the default prime"));
  }
  let cycle = facets(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
  let before = WARNINGS.lock().unwrap().len();
  let field = PrimeField::new(2).unwrap();
  let mut retried = 0;
  for seed in 0..20 {
    match shift_seeded(&cycle, &ShiftConfig { field, seed, max_retries: 5 }) {
      Ok(r) => {
        retried += r.retries;
        if r.retries > 0 && (!r.delta.is_shifted() || r.delta.f_vector() != cycle.f_vector()) {
          return Err("resampled result is invalid".into());
        }
      }
      Err(algshift_core::Error::Genericity { .. }) => retried += 6,
      Err(e) => return Err(e.to_string()),
    }
  }
  let logged = WARNINGS.lock().unwrap()[before..].iter().filter(|w| w.contains("resampling")).count();
  if retried == 0 || logged != retried {
    return Err(format!("{retried} retries, {logged} logged"));
  }
  Ok(format!("0 resamples at p = 2^61 - 1; {retried} logged resamples at p = 2"))
}

fn criterion_9() -> Result<String, String> {
  let k = facets(
    10,
    &[&[1, 2, 3, 4, 5], &[2, 4, 6, 8, 10], &[1, 3, 5, 7, 9], &[5, 6, 7, 8, 9], &[1, 6, 8, 9, 10], &[2, 3, 7, 9, 10], &[3, 4, 6, 8, 9]],
  );
  let l = facets(10, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[5, 6, 7, 9], &[3, 7, 9, 10], &[1, 5, 9]]);
  let start = Instant::now();
  let r = verify_main(&ComplexPair::new(k, l).unwrap(), &ShiftConfig::default()).map_err(|e| e.to_string())?;
  let elapsed = start.elapsed();
  if !r.pass() {
    return Err(format!("{:?}", r.failures));
  }
  if elapsed >= SCALE_LIMIT {
    return Err(format!("took {elapsed:?}"));
  }
  Ok(format!("n = 10 pair in {elapsed:?}"))
}

fn main() {
  log::set_logger(&Capture).unwrap();
  log::set_max_level(log::LevelFilter::Warn);

  let mut results: Vec<(usize, Result<String, String>)> = Vec::new();
  results.push((1, criterion_1()));
  let mut retries = 0;
  results.push((2, criterion_2(&mut retries)));

  let start = Instant::now();
  let reports: Result<Vec<VerificationReport>, String> = (0..INSTANCES)
    .map(|i| verify_main(&instance(i), &ShiftConfig::with_seed(i as u64)).map_err(|e| format!("pair {i}: {e}")))
    .collect();
  let elapsed = start.elapsed();
  match &reports {
    Ok(reports) => {
      retries += reports.iter().map(|r| r.retries).sum::<usize>();
      results.push((3, criterion_3(reports, elapsed)));
      results.push((4, criterion_4(reports)));
      results.push((5, criterion_5(reports)));
      results.push((6, criterion_6(reports)));
    }
    Err(e) => results.extend((3..=6).map(|c| (c, Err(e.clone())))),
  }
  results.push((7, criterion_7()));
  results.push((8, criterion_8(retries)));
  results.push((9, criterion_9()));

  let mut failed = 0;
  for (c, r) in &results {
    match r {
      Ok(msg) => println!("criterion {c}: PASS ({msg})"),
      Err(msg) => {
        failed += 1;
        println!("criterion {c}: FAIL ({msg})");
      }
    }
  }
  if failed > 0 {
    std::process::exit(1);
  }
}
