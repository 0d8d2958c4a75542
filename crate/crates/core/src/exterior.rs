//! The exterior face ring `Λ[K]` in face coordinates.
//!
//! `Λ_j[K]` is the exterior power `Λ^{j+1}` modulo the monomials `e_S` with
//! `S ∉ K`. That ideal is spanned by basis monomials, so the quotient is the
//! coordinate space on `K_j`, with coordinates ordered lexicographically.
//! Every element here is a vector in those coordinates.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::BettiTable;
use crate::complex::{ComplexPair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{subsets_lex, Face};
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::subspace::{GradedSubspace, Subspace};

/// Sign of `e_S ∧ e_T = ± e_{S ∪ T}`: 0 when the sets meet, otherwise the
/// parity of the number of pairs `s ∈ S`, `t ∈ T` with `s > t`.
pub fn wedge_sign(s: Face, t: Face) -> i8 {
  if !s.is_disjoint(t) {
    return 0;
  }
  let inversions: u32 = t.vertices().map(|v| s.count_above(v)).sum();
  if inversions % 2 == 0 {
    1
  } else {
    -1
  }
}

/// Face coordinates of a complex: the `i`-th coordinate of `Λ_j[K]` is the
/// `i`-th face of `K_j` in lexicographic order.
#[derive(Debug, Clone, Copy)]
pub struct FaceCoordinates<'a> {
  complex: &'a SimplicialComplex,
}

impl<'a> FaceCoordinates<'a> {
  pub fn new(complex: &'a SimplicialComplex) -> Self { Self { complex } }

  pub fn complex(&self) -> &'a SimplicialComplex { self.complex }

  pub fn dim(&self, j: i32) -> usize { self.complex.count(j) }

  pub fn faces(&self, j: i32) -> &'a [Face] { self.complex.faces_of_dim(j) }

  pub fn index(&self, f: Face) -> Option<usize> { self.complex.index_of(f) }

  /// Degrees `-1..=dim K`; empty for the void complex.
  pub fn degrees(&self) -> std::ops::RangeInclusive<i32> { degrees(self.complex) }
}

pub(crate) fn degrees(c: &SimplicialComplex) -> std::ops::RangeInclusive<i32> {
  match c.dim() {
    Some(d) => -1..=d,
    #[allow(clippy::reversed_empty_ranges)]
    None => 0..=-1,
  }
}

/// A homogeneous element of `Λ_j[K]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorElement {
  pub degree: i32,
  pub coords: Vec<u64>,
}

impl ExteriorElement {
  pub fn is_zero(&self) -> bool { self.coords.iter().all(|&x| x == 0) }
}

/// The `n x n` matrix `α` of the generic basis `f_i = Σ_j α_ij e_j`,
/// specialized to uniform random elements of `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericMatrix {
  n: usize,
  alpha: Matrix,
  seed: u64,
  validated: bool,
}

impl GenericMatrix {
  /// Draws `α` from a ChaCha stream seeded with `seed`, row by row.
  pub fn sample(field: PrimeField, n: usize, seed: u64) -> Self {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();
    let mut alpha = Matrix::zeros(field, n, n);
    for i in 0..n {
      for j in 0..n {
        alpha.set(i, j, rng.gen_range(0..p));
      }
    }
    Self { n, alpha, seed, validated: false }
  }

  /// Wraps a given matrix, e.g. a hand-picked specialization in tests.
  pub fn from_matrix(alpha: Matrix, seed: u64) -> Self {
    assert_eq!(alpha.rows(), alpha.cols(), "generic matrix must be square");
    Self { n: alpha.rows(), alpha, seed, validated: false }
  }

  pub fn n(&self) -> usize { self.n }

  pub fn seed(&self) -> u64 { self.seed }

  pub fn field(&self) -> PrimeField { self.alpha.field() }

  pub fn matrix(&self) -> &Matrix { &self.alpha }

  pub fn is_validated(&self) -> bool { self.validated }

  pub(crate) fn mark_validated(&mut self) { self.validated = true }

  /// `α_ij` with 1-based indices.
  #[inline]
  pub fn entry(&self, i: usize, j: usize) -> u64 { self.alpha.get(i - 1, j - 1) }

  /// `Σ_{t ∈ T} ± x[T - t] α_{m,t}`: right multiplication by `f_m`, taking
  /// `x ∈ Λ_{j-1}[K]` to `Λ_j[K]`.
  fn wedge_right(&self, x: &[u64], m: usize, coords: FaceCoordinates<'_>, j: i32) -> Vec<u64> {
    let f = self.field();
    coords
      .faces(j)
      .iter()
      .map(|&t_face| {
        t_face.vertices().fold(0, |acc, t| {
          let rest = t_face.without(t);
          let c = x[coords.index(rest).expect("complex is downward closed")];
          if c == 0 {
            return acc;
          }
          let term = f.mul(c, self.entry(m, t));
          if rest.count_above(t) % 2 == 0 {
            f.add(acc, term)
          } else {
            f.sub(acc, term)
          }
        })
      })
      .collect()
  }
}

/// `f̄_S ∈ Λ_j[K]` for `|S| = j + 1`: the coefficient on `T ∈ K_j` is the
/// minor `det α[S, T]`. Built as `((f_{s1} ∧ f_{s2}) ∧ ...)` directly in
/// face coordinates, which is valid because `I_K` is an ideal.
pub fn generic_row(alpha: &GenericMatrix, s: Face, coords: FaceCoordinates<'_>) -> ExteriorElement {
  let degree = s.dim();
  if coords.complex().is_void() {
    return ExteriorElement { degree, coords: Vec::new() };
  }
  let mut x = vec![1 % alpha.field().modulus()];
  let mut j = -1;
  for v in s.vertices() {
    j += 1;
    if coords.dim(j) == 0 {
      return ExteriorElement { degree, coords: vec![0; coords.dim(degree)] };
    }
    x = alpha.wedge_right(&x, v, coords, j);
  }
  ExteriorElement { degree, coords: x }
}

/// `f̄_S` for every `(j+1)`-subset `S ⊆ [n]`, every degree of `K`, in face
/// coordinates of `K`. Each level is computed from the previous one by
/// wedging `f̄_{S - max S}` with `f_{max S}`.
#[derive(Debug, Clone)]
pub struct GenericRows {
  levels: BTreeMap<i32, RowLevel>,
}

#[derive(Debug, Clone)]
struct RowLevel {
  subsets: Vec<Face>,
  rows: Vec<Vec<u64>>,
  index: HashMap<Face, usize>,
}

impl GenericRows {
  pub fn compute(alpha: &GenericMatrix, coords: FaceCoordinates<'_>) -> Result<Self> {
    let n = coords.complex().n();
    if alpha.n() < n {
      return Err(Error::GenericMatrixTooSmall { have: alpha.n(), need: n });
    }
    let mut levels = BTreeMap::new();
    for j in coords.degrees() {
      let subsets = subsets_lex(n, (j + 1) as usize);
      let rows: Vec<Vec<u64>> = if j == -1 {
        vec![vec![1 % alpha.field().modulus()]]
      } else {
        let prev: &RowLevel = &levels[&(j - 1)];
        subsets
          .iter()
          .map(|s| {
            let top = s.max_vertex().expect("non-empty subset");
            let base = &prev.rows[prev.index[&s.without(top)]];
            alpha.wedge_right(base, top, coords, j)
          })
          .collect()
      };
      let index = subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
      levels.insert(j, RowLevel { subsets, rows, index });
    }
    Ok(Self { levels })
  }

  pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ { self.levels.keys().copied() }

  /// All `(j+1)`-subsets of `[n]`, lexicographically.
  pub fn subsets(&self, j: i32) -> &[Face] { self.levels.get(&j).map_or(&[], |l| &l.subsets) }

  /// Rows in the same order as [`GenericRows::subsets`].
  pub fn rows(&self, j: i32) -> &[Vec<u64>] { self.levels.get(&j).map_or(&[], |l| &l.rows) }

  pub fn row(&self, s: Face) -> Option<&[u64]> {
    let level = self.levels.get(&s.dim())?;
    level.index.get(&s).map(|&i| level.rows[i].as_slice())
  }
}

/// The weighted coboundary `δ(x) = f̄_1 ∧ x` as matrices
/// `D_j : Λ_j[K] -> Λ_{j+1}[K]`, one per degree `j ∈ -1..=dim K`.
#[derive(Debug, Clone)]
pub struct CoboundaryOperator {
  per_degree: BTreeMap<i32, Matrix>,
}

impl CoboundaryOperator {
  /// `D_j`, or `None` outside the degrees of the complex.
  pub fn get(&self, j: i32) -> Option<&Matrix> { self.per_degree.get(&j) }

  pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ { self.per_degree.keys().copied() }

  /// `D_{j+1} D_j = 0` for every `j`.
  pub fn squares_to_zero(&self) -> bool {
    self.per_degree.iter().all(|(j, d)| match self.per_degree.get(&(j + 1)) {
      Some(next) => next.mul(d).map(|m| m.is_zero()).unwrap_or(false),
      None => true,
    })
  }
}

pub fn coboundary(alpha: &GenericMatrix, coords: FaceCoordinates<'_>) -> Result<CoboundaryOperator> {
  let n = coords.complex().n();
  if alpha.n() < n {
    return Err(Error::GenericMatrixTooSmall { have: alpha.n(), need: n });
  }
  let f = alpha.field();
  let mut per_degree = BTreeMap::new();
  for j in coords.degrees() {
    let mut d = Matrix::zeros(f, coords.dim(j + 1), coords.dim(j));
    for (col, &s) in coords.faces(j).iter().enumerate() {
      for v in (1..=n).filter(|&v| !s.contains(v)) {
        if let Some(row) = coords.index(s.with(v)) {
          let w = alpha.entry(1, v);
          let signed = if wedge_sign(Face::singleton(v), s) > 0 { w } else { f.neg(w) };
          d.set(row, col, signed);
        }
      }
    }
    per_degree.insert(j, d);
  }
  Ok(CoboundaryOperator { per_degree })
}

/// `Q̄ = span{ē_F : F ∈ K - L}` in each degree of `K`.
pub fn q_bar(pair: &ComplexPair, field: PrimeField) -> GradedSubspace {
  let coords = FaceCoordinates::new(pair.k());
  GradedSubspace(
    coords
      .degrees()
      .map(|j| {
        let idx = pair.difference(j).map(|f| coords.index(f).expect("face of K"));
        (j, Subspace::coordinate(field, coords.dim(j), idx))
      })
      .collect(),
  )
}

/// `β̃_j(K) = dim ker D_j - rank D_{j-1}`.
pub fn betti_via_delta(alpha: &GenericMatrix, coords: FaceCoordinates<'_>) -> Result<BettiTable> {
  if !alpha.is_validated() {
    return Err(Error::Unvalidated);
  }
  let delta = coboundary(alpha, coords)?;
  let ranks: BTreeMap<i32, usize> = delta.per_degree.iter().map(|(&j, d)| (j, d.rank())).collect();
  Ok(
    coords
      .degrees()
      .map(|j| {
        let below = ranks.get(&(j - 1)).copied().unwrap_or(0);
        (j, coords.dim(j) - ranks[&j] - below)
      })
      .collect(),
  )
}
