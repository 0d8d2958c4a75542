//! Instance verification of the comparison between `(K, L)` and
//! `(Δ(K), Δ(L))`.
//!
//! One run shifts the pair with a shared generic matrix, builds the
//! weighted coboundary `δ` and the coordinate subspace `Q̄` on `Λ[K]`,
//! constructs the normal forms `γ̄_F` and the basis `{f̄_F - γ̄_F}` of `Q̄`,
//! and then checks every dimension identity and inequality that links the
//! algebraic quotients (the A-spaces) to the face sets of the shifted pair
//! (the C-sets), ending with `β̃_j(K, L) <= β̃_j(Δ(K), Δ(L))`.

use std::collections::{BTreeMap, HashMap};

use crate::betti::BettiTable;
use crate::complex::{ComplexPair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exterior::{coboundary, degrees, q_bar, CoboundaryOperator, ExteriorElement, FaceCoordinates};
use crate::face::Face;
use crate::field::PrimeField;
use crate::homology::{les_ranks, reduced_betti, relative_betti, LesRanks};
use crate::matrix::Matrix;
use crate::nearcone::{betti_near_cone, c_sets, relative_betti_near_cones, CSets};
use crate::shifting::{shift_pair_from, sub_columns, PairShift, ShiftConfig};
use crate::subspace::{preimage, quotient_dim, EchelonBasis, GradedSubspace, Subspace};

/// Everything a verification run derives from one accepted generic matrix.
pub struct VerifyContext {
  pair: ComplexPair,
  shift: PairShift,
  shifted: ComplexPair,
  delta: CoboundaryOperator,
  q: GradedSubspace,
}

impl VerifyContext {
  pub fn new(pair: &ComplexPair, shift: PairShift) -> Result<Self> {
    let coords = FaceCoordinates::new(pair.k());
    let delta = coboundary(shift.alpha(), coords)?;
    let q = q_bar(pair, shift.alpha().field());
    let shifted = shift.shifted_pair()?;
    Ok(Self { pair: pair.clone(), shift, shifted, delta, q })
  }

  pub fn pair(&self) -> &ComplexPair { &self.pair }

  pub fn shift(&self) -> &PairShift { &self.shift }

  /// `(Δ(K), Δ(L))`.
  pub fn shifted(&self) -> &ComplexPair { &self.shifted }

  pub fn field(&self) -> PrimeField { self.shift.alpha().field() }

  pub fn coboundary(&self) -> &CoboundaryOperator { &self.delta }

  pub fn q_bar(&self) -> &GradedSubspace { &self.q }

  fn k(&self) -> &SimplicialComplex { self.pair.k() }

  fn delta_l(&self) -> &SimplicialComplex { self.shifted.l() }

  fn in_delta_q(&self, f: Face) -> bool { self.shifted.k().contains(f) && !self.shifted.l().contains(f) }

  /// `Δ(Q)_j = Δ(K)_j - Δ(L)_j`, lexicographically.
  pub fn delta_q(&self, j: i32) -> Vec<Face> { self.shifted.difference(j).collect() }

  /// `f̄_S` in the face coordinates of `K`.
  fn row(&self, s: Face) -> &[u64] { self.shift.rows.row(s).expect("subset of the ground set within dim K") }

  fn zero(&self, j: i32) -> Subspace { Subspace::zero(self.field(), self.k().count(j)) }

  /// `(im δ)_j`, the image of `D_{j-1}`.
  fn image(&self, j: i32) -> Subspace {
    match self.delta.get(j - 1) {
      Some(d) => d.image(),
      None => self.zero(j),
    }
  }

  fn kernel(&self, j: i32) -> Subspace {
    match self.delta.get(j) {
      Some(d) => d.kernel(),
      None => self.zero(j),
    }
  }

  fn q_at(&self, j: i32) -> Subspace { self.q.get(j).cloned().unwrap_or_else(|| self.zero(j)) }

  /// `(δ Q̄)_j = D_{j-1}(Q̄_{j-1})`.
  fn delta_of_q(&self, j: i32) -> Result<Subspace> {
    match self.delta.get(j - 1) {
      Some(d) => self.q_at(j - 1).image(d),
      None => Ok(self.zero(j)),
    }
  }

  /// `(δ^{-1} Q̄)_j = {x ∈ Λ_j[K] : δx ∈ Q̄_{j+1}}`.
  fn delta_inverse_q(&self, j: i32) -> Result<Subspace> {
    match self.delta.get(j) {
      Some(d) => {
        let target = self.q.get(j + 1).cloned().unwrap_or_else(|| Subspace::zero(self.field(), d.rows()));
        preimage(d, &target)
      }
      None => Ok(self.zero(j)),
    }
  }
}

/// The normal form of `f̄_F` modulo `Q̄`: `γ̄_F = Σ a_G f̄_G` over `G ∈ Δ(L)`
/// with `G <_L F`, and `f̄_F - γ̄_F ∈ Q̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaForm {
  pub face: Face,
  /// Non-zero coefficients `a_G`, lexicographically by `G`.
  pub coefficients: Vec<(Face, u64)>,
  pub gamma: ExteriorElement,
  /// `f̄_F - γ̄_F`.
  pub difference: ExteriorElement,
}

/// Strategy used to reduce `f̄_F` modulo `Q̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elimination {
  /// Back-substitution through the echelon basis built from the rows of
  /// `Δ(L)` in lexicographic order.
  Echelon,
  /// Repeated rewriting of the lexicographically last non-`Δ(L)` term by an
  /// earlier combination, until only `Δ(L)` terms remain.
  Rewrite,
}

/// Per-degree state for normal-form computations.
struct GammaDegree {
  /// All `(j+1)`-subsets with their rows restricted to `L`'s coordinates.
  restricted: HashMap<Face, Vec<u64>>,
  subsets: Vec<Face>,
  delta_l: Vec<Face>,
  echelon: EchelonBasis,
}

impl GammaDegree {
  fn new(ctx: &VerifyContext, j: i32) -> Self {
    let cols = sub_columns(ctx.k(), ctx.pair.l(), j);
    let subsets = ctx.shift.rows.subsets(j).to_vec();
    let restricted: HashMap<Face, Vec<u64>> =
      subsets.iter().zip(ctx.shift.rows.rows(j)).map(|(&s, row)| (s, cols.iter().map(|&c| row[c]).collect())).collect();
    let delta_l: Vec<Face> = ctx.delta_l().faces_of_dim(j).to_vec();
    let mut echelon = EchelonBasis::new(ctx.field(), cols.len());
    for g in &delta_l {
      echelon.insert(&restricted[g]);
    }
    Self { restricted, subsets, delta_l, echelon }
  }

  fn by_echelon(&self, f: Face) -> Option<BTreeMap<Face, u64>> {
    let coeffs = self.echelon.express(&self.restricted[&f])?;
    Some(self.delta_l.iter().copied().zip(coeffs).filter(|&(_, c)| c != 0).collect())
  }

  fn by_rewriting(&self, f: Face, field: PrimeField) -> Option<BTreeMap<Face, u64>> {
    let in_l = |g: &Face| self.delta_l.binary_search(g).is_ok();
    let mut cache: HashMap<Face, Vec<(Face, u64)>> = HashMap::new();
    let mut expr: BTreeMap<Face, u64> = BTreeMap::new();
    expr.insert(f, 1);
    // F itself is rewritten first since it is the largest term
    while let Some((&g, &c)) = expr.iter().rev().find(|(g, _)| !in_l(g)) {
      expr.remove(&g);
      if !cache.contains_key(&g) {
        cache.insert(g, self.relation(g, field)?);
      }
      for &(r, d) in &cache[&g] {
        let e = expr.entry(r).or_insert(0);
        *e = field.add(*e, field.mul(c, d));
      }
      expr.retain(|_, c| *c != 0);
    }
    Some(expr)
  }

  /// Some expression `f̄_G ≡ Σ c_R f̄_R (mod Q̄)` with every `R <_L G`,
  /// preferring to use the latest earlier non-`Δ(L)` subset.
  fn relation(&self, g: Face, field: PrimeField) -> Option<Vec<(Face, u64)>> {
    let pos = self.subsets.binary_search(&g).ok()?;
    let earlier = &self.subsets[..pos];
    let in_l = |s: &Face| self.delta_l.binary_search(s).is_ok();
    let mut candidates: Vec<Face> = earlier.iter().rev().find(|s| !in_l(s)).copied().into_iter().collect();
    candidates.extend(earlier.iter().rev().filter(|s| in_l(s)));
    let cols: Vec<&[u64]> = candidates.iter().map(|s| self.restricted[s].as_slice()).collect();
    let solution = solve_particular(field, &cols, &self.restricted[&g])?;
    Some(candidates.into_iter().zip(solution).filter(|&(_, c)| c != 0).collect())
  }
}

/// A particular solution of `Σ x_i cols[i] = target`, free variables zero.
fn solve_particular(field: PrimeField, cols: &[&[u64]], target: &[u64]) -> Option<Vec<u64>> {
  let m = target.len();
  let mut aug = Matrix::zeros(field, m, cols.len() + 1);
  for r in 0..m {
    for (c, col) in cols.iter().enumerate() {
      aug.set(r, c, col[r]);
    }
    aug.set(r, cols.len(), target[r]);
  }
  let rref = aug.rref();
  if rref.pivots.last() == Some(&cols.len()) {
    return None;
  }
  let mut x = vec![0; cols.len()];
  for (i, &p) in rref.pivots.iter().enumerate() {
    x[p] = rref.matrix.get(i, cols.len());
  }
  Some(x)
}

fn gamma_form(ctx: &VerifyContext, f: Face, coefficients: BTreeMap<Face, u64>) -> GammaForm {
  let field = ctx.field();
  let width = ctx.k().count(f.dim());
  let mut gamma = vec![0; width];
  for (&g, &a) in &coefficients {
    for (x, &y) in gamma.iter_mut().zip(ctx.row(g)) {
      *x = field.add(*x, field.mul(a, y));
    }
  }
  let difference: Vec<u64> = ctx.row(f).iter().zip(&gamma).map(|(&a, &b)| field.sub(a, b)).collect();
  GammaForm {
    face: f,
    coefficients: coefficients.into_iter().collect(),
    gamma: ExteriorElement { degree: f.dim(), coords: gamma },
    difference: ExteriorElement { degree: f.dim(), coords: difference },
  }
}

/// `γ̄_F` for `F ∈ Δ(Q)` by the requested elimination strategy. Failure to
/// reduce means the specialization of `α` was not generic.
pub fn gamma_normal_form(ctx: &VerifyContext, f: Face, how: Elimination) -> Result<GammaForm> {
  if !ctx.in_delta_q(f) {
    return Err(Error::NotSubcomplex(f));
  }
  let degree = GammaDegree::new(ctx, f.dim());
  gamma_in_degree(ctx, &degree, f, how)
}

fn gamma_in_degree(ctx: &VerifyContext, degree: &GammaDegree, f: Face, how: Elimination) -> Result<GammaForm> {
  let coefficients = match how {
    Elimination::Echelon => degree.by_echelon(f),
    Elimination::Rewrite => degree.by_rewriting(f, ctx.field()),
  };
  let coefficients = coefficients.ok_or(Error::Genericity { attempts: 1, last_seed: ctx.shift.alpha().seed() })?;
  Ok(gamma_form(ctx, f, coefficients))
}

/// Checks on a single normal form: support on lex-earlier faces of `Δ(L)`
/// and `f̄_F - γ̄_F ∈ Q̄`.
pub fn gamma_form_is_valid(ctx: &VerifyContext, form: &GammaForm) -> bool {
  let support_ok = form.coefficients.iter().all(|&(g, _)| g < form.face && ctx.delta_l().contains(g));
  support_ok && ctx.q_at(form.face.dim()).contains(&form.difference.coords)
}

/// The Γ-basis `{f̄_F - γ̄_F : F ∈ Δ(Q)}` together with its checks.
#[derive(Debug, Clone)]
pub struct GammaBasis {
  pub forms: BTreeMap<i32, Vec<GammaForm>>,
  /// Both elimination strategies produced the same coefficients.
  pub unique: bool,
  /// Support and membership conditions of every form.
  pub valid: bool,
  /// Per degree, the differences are independent and span `Q̄_j`.
  pub spans_q: bool,
}

impl GammaBasis {
  pub fn holds(&self) -> bool { self.unique && self.valid && self.spans_q }

  pub fn count(&self, j: i32) -> usize { self.forms.get(&j).map_or(0, Vec::len) }

  fn get(&self, f: Face) -> Option<&GammaForm> { self.forms.get(&f.dim())?.iter().find(|g| g.face == f) }
}

pub fn gamma_basis(ctx: &VerifyContext) -> Result<GammaBasis> {
  let field = ctx.field();
  let mut forms = BTreeMap::new();
  let (mut unique, mut valid, mut spans_q) = (true, true, true);
  for j in degrees(ctx.k()) {
    let delta_q = ctx.delta_q(j);
    let degree = GammaDegree::new(ctx, j);
    let mut level = Vec::with_capacity(delta_q.len());
    for &f in &delta_q {
      let direct = gamma_in_degree(ctx, &degree, f, Elimination::Echelon)?;
      let rewritten = gamma_in_degree(ctx, &degree, f, Elimination::Rewrite)?;
      unique &= direct == rewritten;
      valid &= gamma_form_is_valid(ctx, &direct);
      level.push(direct);
    }
    let diffs: Vec<&[u64]> = level.iter().map(|g| g.difference.coords.as_slice()).collect();
    let span = Subspace::span(field, ctx.k().count(j), &diffs);
    if span.dim() != diffs.len() {
      return Err(Error::Genericity { attempts: 1, last_seed: ctx.shift.alpha().seed() });
    }
    spans_q &= diffs.len() == ctx.pair.difference(j).count() && span == ctx.q_at(j);
    forms.insert(j, level);
  }
  Ok(GammaBasis { forms, unique, valid, spans_q })
}

/// Dimensions of the quotient spaces in one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ADims {
  /// `(ker δ ∩ Q̄) / (im δ ∩ Q̄)`
  pub kq: usize,
  /// `(im δ ∩ Q̄) / δQ̄`
  pub lq_prime: usize,
  /// `δ^{-1}Q̄ / (ker δ + Q̄)`
  pub lq: usize,
  /// `(ker δ + Q̄) / (im δ + Q̄)`
  pub kl: usize,
  /// `δ^{-1}Q̄ / (im δ + Q̄)`, which should be `β̃_j(L)`.
  pub preimage_over_image: usize,
  /// `(ker δ ∩ Q̄) / δQ̄`, which should be `β̃_j(K, L)`.
  pub kernel_over_delta_q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ASpaceDims(pub BTreeMap<i32, ADims>);

impl ASpaceDims {
  pub fn at(&self, j: i32) -> ADims { self.0.get(&j).copied().unwrap_or_default() }
}

pub fn a_space_dims(ctx: &VerifyContext) -> Result<ASpaceDims> {
  let mut out = BTreeMap::new();
  for j in degrees(ctx.k()) {
    let ker = ctx.kernel(j);
    let im = ctx.image(j);
    let q = ctx.q_at(j);
    let dq = ctx.delta_of_q(j)?;
    let pre = ctx.delta_inverse_q(j)?;
    let ker_cap_q = ker.intersection(&q)?;
    let im_cap_q = im.intersection(&q)?;
    let ker_plus_q = ker.sum(&q)?;
    let im_plus_q = im.sum(&q)?;
    out.insert(
      j,
      ADims {
        kq: quotient_dim(&ker_cap_q, &im_cap_q)?,
        lq_prime: quotient_dim(&im_cap_q, &dq)?,
        lq: quotient_dim(&pre, &ker_plus_q)?,
        kl: quotient_dim(&ker_plus_q, &im_plus_q)?,
        preimage_over_image: quotient_dim(&pre, &im_plus_q)?,
        kernel_over_delta_q: quotient_dim(&ker_cap_q, &dq)?,
      },
    );
  }
  Ok(ASpaceDims(out))
}

/// Outcomes of the two comparisons between `Q̄`-subspaces and face sets,
/// for one degree `j` (the compared spaces live in degree `j + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SigmaOutcome {
  /// `dim (im δ ∩ Q̄)_{j+1}`
  pub top_dim: usize,
  /// `#{F ∈ Δ(K)_j : 1 ∉ F, 1 ⊔ F ∈ Δ(Q)}`
  pub top_count: usize,
  /// `(im δ ∩ Q̄)_{j+1} ⊆ span{f̄_{1⊔F} - γ̄_{1⊔F}}`
  pub top_contained: bool,
  /// `dim δQ̄'` with `Q̄' = span{f̄_F - γ̄_F : F ∈ Δ(Q)_j, 1 ∉ F, 1 ⊔ F ∈ Δ(Q)}`
  pub bottom_dim: usize,
  /// `#{F ∈ Δ(Q)_j : 1 ∉ F, 1 ⊔ F ∈ Δ(Q)}`
  pub bottom_count: usize,
  /// `dim (δQ̄)_{j+1}`
  pub delta_q_dim: usize,
  /// `dim (A'_LQ)_{j+1}`
  pub lq_prime_next: usize,
  /// `|C_LQ|_j`
  pub c_lq: usize,
}

impl SigmaOutcome {
  pub fn top_holds(&self) -> bool { self.top_contained && self.top_dim <= self.top_count }

  pub fn bottom_holds(&self) -> bool { self.bottom_dim == self.bottom_count && self.delta_q_dim >= self.bottom_count }

  pub fn index_shift_holds(&self) -> bool { self.lq_prime_next <= self.c_lq }
}

pub fn sigma_checks(ctx: &VerifyContext, basis: &GammaBasis, a: &ASpaceDims, c: &CSets) -> Result<BTreeMap<i32, SigmaOutcome>> {
  let field = ctx.field();
  let dk = ctx.shifted.k();
  let mut out = BTreeMap::new();
  for j in degrees(ctx.k()) {
    let up = j + 1;
    let width_up = ctx.k().count(up);
    let im_cap_q = ctx.image(up).intersection(&ctx.q_at(up))?;

    let top_faces: Vec<Face> = dk.faces_of_dim(j).iter().copied().filter(|f| !f.contains(1) && ctx.in_delta_q(f.with(1))).collect();
    let top_vectors: Vec<&[u64]> = top_faces
      .iter()
      .map(|f| basis.get(f.with(1)).map(|g| g.difference.coords.as_slice()).ok_or(Error::NotSubcomplex(f.with(1))))
      .collect::<Result<_>>()?;
    let top_span = Subspace::span(field, width_up, &top_vectors);

    let bottom_faces: Vec<Face> = ctx.delta_q(j).into_iter().filter(|f| !f.contains(1) && ctx.in_delta_q(f.with(1))).collect();
    let bottom_vectors: Vec<&[u64]> = bottom_faces
      .iter()
      .map(|f| basis.get(*f).map(|g| g.difference.coords.as_slice()).ok_or(Error::NotSubcomplex(*f)))
      .collect::<Result<_>>()?;
    let q_prime = Subspace::span(field, ctx.k().count(j), &bottom_vectors);
    let bottom_dim = match ctx.delta.get(j) {
      Some(d) => q_prime.image(d)?.dim(),
      None => 0,
    };

    out.insert(
      j,
      SigmaOutcome {
        top_dim: im_cap_q.dim(),
        top_count: top_faces.len(),
        top_contained: top_span.contains_subspace(&im_cap_q),
        bottom_dim,
        bottom_count: bottom_faces.len(),
        delta_q_dim: ctx.delta_of_q(up)?.dim(),
        lq_prime_next: a.at(up).lq_prime,
        c_lq: c.lq_count(j),
      },
    );
  }
  Ok(out)
}

/// Betti tables gathered by a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiSummary {
  pub k: BettiTable,
  pub l: BettiTable,
  pub kl: BettiTable,
  pub delta_k: BettiTable,
  pub delta_l: BettiTable,
  /// Relative homology of the shifted pair from boundary matrices.
  pub delta_kl: BettiTable,
  /// The same from the near-cone face count.
  pub delta_kl_near_cone: BettiTable,
  /// The same as `|C_KQ| + |C'_LQ|`.
  pub delta_kl_c_sets: BettiTable,
}

/// Per-degree counts of the four C-sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CCounts {
  pub kq: usize,
  pub lq_prime: usize,
  pub lq: usize,
  pub kl: usize,
}

/// Pass/fail of each family of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LemmaOutcomes {
  /// Normal forms exist, are unique across both eliminations, and form a
  /// basis of `Q̄` of size `|K - L|` per degree.
  pub gamma: bool,
  /// `δ^{-1}Q̄/(im δ + Q̄)` has dimension `β̃_j(L)` and
  /// `(ker δ ∩ Q̄)/δQ̄` has dimension `β̃_j(K, L)`.
  pub im_ker: bool,
  pub sigma_top: bool,
  /// Includes the derived bound `dim (A'_LQ)_{j+1} <= |C_LQ|_j`.
  pub sigma_bottom: bool,
  /// `dim A_LQ + dim A_KL = |C_LQ| + |C_KL|`, with `β̃(L)` in between,
  /// `dim (A_LQ)_j = dim (A'_LQ)_{j+1}` and `|C_LQ|_j = |C'_LQ|_{j+1}`.
  pub new1: bool,
  /// `dim A_KQ + dim A_KL = |C_KQ| + |C_KL|`, with `β̃(K)` in between,
  /// and the remaining A-space and C-set identities.
  pub new2: bool,
  /// `Δ(L) ⊆ Δ(K)`, agreement of the three routes to
  /// `β̃(Δ(K), Δ(L))`, the final inequality chain and the main inequality.
  pub main: bool,
  /// `dim im π_* + dim im ∂_* = β̃_j(K, L)`.
  pub les: bool,
}

impl LemmaOutcomes {
  pub fn all(&self) -> bool {
    self.gamma && self.im_ker && self.sigma_top && self.sigma_bottom && self.new1 && self.new2 && self.main && self.les
  }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
  pub pair: ComplexPair,
  pub shifted: ComplexPair,
  pub seed: u64,
  pub p: u64,
  pub retries: usize,
  pub betti: BettiSummary,
  pub a_dims: ASpaceDims,
  pub c_counts: BTreeMap<i32, CCounts>,
  pub sigma: BTreeMap<i32, SigmaOutcome>,
  pub les: BTreeMap<i32, LesRanks>,
  pub gamma_counts: BTreeMap<i32, usize>,
  pub lemmas: LemmaOutcomes,
  /// Human-readable description of every failed check.
  pub failures: Vec<String>,
}

impl VerificationReport {
  /// Every check held. A failure on a validated run contradicts the
  /// theory and is a counterexample candidate.
  pub fn pass(&self) -> bool { self.lemmas.all() }

  pub fn degrees(&self) -> impl Iterator<Item = i32> { degrees(self.pair.k()) }
}

/// Runs the full comparison on one pair. Genericity failures anywhere in
/// the construction move on to the next seed of the chain.
pub fn verify_main(pair: &ComplexPair, config: &ShiftConfig) -> Result<VerificationReport> {
  let mut skip = 0;
  loop {
    let shift = shift_pair_from(pair, config, skip)?;
    let attempt = shift.retries;
    let ctx = VerifyContext::new(pair, shift)?;
    match verify_context(&ctx) {
      Err(Error::Genericity { .. }) => {
        log::warn!("verify: seed {} failed during normal-form construction, resampling", ctx.shift.alpha().seed());
        skip = attempt + 1;
        if skip > config.max_retries {
          return Err(Error::Genericity { attempts: config.max_retries + 1, last_seed: ctx.shift.alpha().seed() });
        }
      }
      other => return other,
    }
  }
}

fn verify_context(ctx: &VerifyContext) -> Result<VerificationReport> {
  let field = ctx.field();
  let (pair, shifted) = (&ctx.pair, &ctx.shifted);
  let mut failures = Vec::new();
  let mut check = |ok: bool, what: String| {
    if !ok {
      failures.push(what);
    }
    ok
  };

  let basis = gamma_basis(ctx)?;
  let a = a_space_dims(ctx)?;
  let c = c_sets(shifted)?;
  let sigma = sigma_checks(ctx, &basis, &a, &c)?;
  let les = les_ranks(pair, field)?;

  let betti = BettiSummary {
    k: reduced_betti(pair.k(), field),
    l: reduced_betti(pair.l(), field),
    kl: relative_betti(pair, field),
    delta_k: reduced_betti(shifted.k(), field),
    delta_l: reduced_betti(shifted.l(), field),
    delta_kl: relative_betti(shifted, field),
    delta_kl_near_cone: relative_betti_near_cones(shifted, 1)?,
    delta_kl_c_sets: degrees(pair.k()).map(|j| (j, c.kq_count(j) + c.lq_prime_count(j))).collect(),
  };
  let c_counts: BTreeMap<i32, CCounts> = degrees(pair.k())
    .map(|j| (j, CCounts { kq: c.kq_count(j), lq_prime: c.lq_prime_count(j), lq: c.lq_count(j), kl: c.kl_count(j) }))
    .collect();

  let mut lemmas = LemmaOutcomes {
    gamma: check(basis.unique, "normal forms differ between elimination orders".into())
      & check(basis.valid, "normal form support or Q̄-membership violated".into())
      & check(basis.spans_q, "Γ-basis does not span Q̄ with |K - L| elements".into()),
    im_ker: true,
    sigma_top: true,
    sigma_bottom: true,
    new1: true,
    new2: check(c.bijection_holds(), "F ↦ 1 ⊔ F is not a bijection C_LQ → C'_LQ".into()),
    main: check(shifted.l().is_subcomplex_of(shifted.k()), "Δ(L) ⊄ Δ(K)".into())
      & check(betti.delta_kl == betti.delta_kl_near_cone, "near-cone count disagrees with homology of the shifted pair".into())
      & check(betti.delta_kl == betti.delta_kl_c_sets, "C-set count disagrees with homology of the shifted pair".into())
      & check(betti.kl.dominated_by(&betti.delta_kl), format!("COUNTEREXAMPLE: β̃(K,L) = {:?} exceeds β̃(Δ(K),Δ(L)) = {:?}", betti.kl, betti.delta_kl)),
    les: true,
  };

  for j in degrees(pair.k()) {
    let (ad, cc, s) = (a.at(j), c_counts[&j], sigma[&j]);
    lemmas.im_ker &= check(ad.preimage_over_image == betti.l.get(j), format!("j={j}: dim δ⁻¹Q̄/(im δ + Q̄) = {} ≠ β̃(L) = {}", ad.preimage_over_image, betti.l.get(j)))
      & check(ad.kernel_over_delta_q == betti.kl.get(j), format!("j={j}: dim (ker δ ∩ Q̄)/δQ̄ = {} ≠ β̃(K,L) = {}", ad.kernel_over_delta_q, betti.kl.get(j)));
    lemmas.sigma_top &= check(s.top_contained, format!("j={j}: im δ ∩ Q̄ not inside the span of f̄_(1⊔F) - γ̄_(1⊔F)"))
      & check(s.top_dim <= s.top_count, format!("j={j}: dim (im δ ∩ Q̄)_(j+1) = {} > {}", s.top_dim, s.top_count));
    lemmas.sigma_bottom &= check(s.bottom_dim == s.bottom_count, format!("j={j}: dim δQ̄' = {} ≠ {}", s.bottom_dim, s.bottom_count))
      & check(s.delta_q_dim >= s.bottom_count, format!("j={j}: dim (δQ̄)_(j+1) = {} < {}", s.delta_q_dim, s.bottom_count))
      & check(s.index_shift_holds(), format!("j={j}: dim (A'_LQ)_(j+1) = {} > |C_LQ|_j = {}", s.lq_prime_next, s.c_lq));
    lemmas.new1 &= check(ad.lq + ad.kl == betti.l.get(j), format!("j={j}: dim A_LQ + dim A_KL ≠ β̃(L)"))
      & check(cc.lq + cc.kl == betti.delta_l.get(j), format!("j={j}: |C_LQ| + |C_KL| ≠ β̃(Δ(L))"))
      & check(ad.lq + ad.kl == cc.lq + cc.kl, format!("j={j}: dim A_LQ + dim A_KL = {} ≠ |C_LQ| + |C_KL| = {}", ad.lq + ad.kl, cc.lq + cc.kl))
      & check(ad.lq == a.at(j + 1).lq_prime, format!("j={j}: dim (A_LQ)_j = {} ≠ dim (A'_LQ)_(j+1) = {}", ad.lq, a.at(j + 1).lq_prime))
      & check(cc.lq == c.lq_prime_count(j + 1), format!("j={j}: |C_LQ|_j ≠ |C'_LQ|_(j+1)"));
    lemmas.new2 &= check(ad.kq + ad.kl == betti.k.get(j), format!("j={j}: dim A_KQ + dim A_KL ≠ β̃(K)"))
      & check(ad.kq + ad.lq_prime == betti.kl.get(j), format!("j={j}: dim A_KQ + dim A'_LQ ≠ β̃(K,L)"))
      & check(cc.kq + cc.kl == betti.delta_k.get(j), format!("j={j}: |C_KQ| + |C_KL| ≠ β̃(Δ(K))"))
      & check(ad.kq + ad.kl == cc.kq + cc.kl, format!("j={j}: dim A_KQ + dim A_KL = {} ≠ |C_KQ| + |C_KL| = {}", ad.kq + ad.kl, cc.kq + cc.kl));
    lemmas.main &= check(ad.kl >= cc.kl, format!("j={j}: dim A_KL = {} < |C_KL| = {}", ad.kl, cc.kl))
      & check(ad.kq <= cc.kq, format!("j={j}: dim A_KQ = {} > |C_KQ| = {}", ad.kq, cc.kq));
    let les_total = les.get(&j).map_or(0, LesRanks::total);
    lemmas.les &= check(les_total == betti.kl.get(j), format!("j={j}: LES ranks sum to {les_total} ≠ β̃(K,L) = {}", betti.kl.get(j)));
  }
  // shifting must have preserved Betti numbers for both complexes
  lemmas.new1 &= check(betti.l == betti.delta_l, "β̃(L) ≠ β̃(Δ(L))".into())
    & check(betti_near_cone(shifted.l(), 1).map(|b| b == betti.delta_l).unwrap_or(shifted.l().is_void()), "near-cone count on Δ(L) ≠ β̃(Δ(L))".into());
  lemmas.new2 &= check(betti.k == betti.delta_k, "β̃(K) ≠ β̃(Δ(K))".into());

  if !lemmas.all() {
    log::error!("verification failed for {:?} ⊇ {:?}: {:?}", pair.k(), pair.l(), failures);
  }
  Ok(VerificationReport {
    pair: pair.clone(),
    shifted: shifted.clone(),
    seed: ctx.shift.alpha().seed(),
    p: field.modulus(),
    retries: ctx.shift.retries,
    betti,
    a_dims: a,
    c_counts,
    sigma,
    les,
    gamma_counts: basis.forms.iter().map(|(&j, f)| (j, f.len())).collect(),
    lemmas,
    failures,
  })
}
