//! Reduced simplicial homology and relative homology over `F_p`, computed
//! from boundary matrices. This is the ground truth every algebraic and
//! combinatorial formula in the crate is checked against.

use std::collections::BTreeMap;

use crate::betti::BettiTable;
use crate::complex::{ComplexPair, SimplicialComplex};
use crate::error::Result;
use crate::exterior::degrees;
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::subspace::{preimage, Subspace};

/// Boundary maps `∂_j : C_j -> C_{j-1}` with the empty face as the single
/// generator of `C_{-1}`. Sign convention: `∂[v_0 < ... < v_j] = Σ (-1)^i
/// [.. v_i omitted ..]`.
#[derive(Debug, Clone)]
pub struct ChainComplexMatrices {
  per_degree: BTreeMap<i32, Matrix>,
}

impl ChainComplexMatrices {
  pub fn new(c: &SimplicialComplex, field: PrimeField) -> Self {
    let mut per_degree = BTreeMap::new();
    for j in degrees(c) {
      let mut d = Matrix::zeros(field, c.count(j - 1), c.count(j));
      for (col, &face) in c.faces_of_dim(j).iter().enumerate() {
        for (i, (_, sub)) in face.facets().enumerate() {
          let row = c.index_of(sub).expect("complex is downward closed");
          d.set(row, col, if i % 2 == 0 { 1 } else { field.neg(1) });
        }
      }
      per_degree.insert(j, d);
    }
    Self { per_degree }
  }

  /// `∂_j`, or `None` outside `-1..=dim`.
  pub fn get(&self, j: i32) -> Option<&Matrix> { self.per_degree.get(&j) }

  pub fn squares_to_zero(&self) -> bool {
    self.per_degree.iter().all(|(j, d)| match self.per_degree.get(&(j - 1)) {
      Some(below) => below.mul(d).map(|m| m.is_zero()).unwrap_or(false),
      None => true,
    })
  }
}

/// `β̃_j = f_j - rank ∂_j - rank ∂_{j+1}` for `j ∈ -1..=dim`.
pub fn reduced_betti(c: &SimplicialComplex, field: PrimeField) -> BettiTable {
  let chains = ChainComplexMatrices::new(c, field);
  let ranks: BTreeMap<i32, usize> = chains.per_degree.iter().map(|(&j, d)| (j, d.rank())).collect();
  degrees(c).map(|j| (j, c.count(j) - ranks[&j] - ranks.get(&(j + 1)).copied().unwrap_or(0))).collect()
}

/// Homology of `C(K)/C(L)`: the faces of `K - L` generate, and boundary
/// terms landing in `L` are dropped. `(∅-only, void)` is the one pair with
/// a degree `-1` class.
pub fn relative_betti(pair: &ComplexPair, field: PrimeField) -> BettiTable {
  let k = pair.k();
  let chains = ChainComplexMatrices::new(k, field);
  let q_idx = |j: i32| -> Vec<usize> { pair.difference(j).map(|f| k.index_of(f).unwrap()).collect() };
  let mut ranks = BTreeMap::new();
  for j in degrees(k) {
    let (rows, cols) = (q_idx(j - 1), q_idx(j));
    let d = chains.get(j).unwrap();
    let mut sub = Matrix::zeros(field, rows.len(), cols.len());
    for (r, &ri) in rows.iter().enumerate() {
      for (c, &ci) in cols.iter().enumerate() {
        sub.set(r, c, d.get(ri, ci));
      }
    }
    ranks.insert(j, sub.rank());
  }
  degrees(k).map(|j| (j, q_idx(j).len() - ranks[&j] - ranks.get(&(j + 1)).copied().unwrap_or(0))).collect()
}

/// Ranks of the two maps of the long exact sequence that land in and leave
/// `H̃_j(K, L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LesRanks {
  /// `dim im (π_*)_j`, with `π_* : H̃_j(K) -> H̃_j(K, L)`.
  pub pi: usize,
  /// `dim im (∂_*)_j`, with `∂_* : H̃_j(K, L) -> H̃_{j-1}(L)`.
  pub connecting: usize,
}

impl LesRanks {
  pub fn total(&self) -> usize { self.pi + self.connecting }
}

/// Per-degree LES ranks, computed with chain-level subspaces in the face
/// coordinates of `K`:
/// `im π_* = (Z_j(K) + B_rel) / B_rel` with `B_rel = ∂C_{j+1}(K) + C_j(L)`,
/// and `im ∂_* = (∂Z_rel + B_{j-1}(L)) / B_{j-1}(L)`.
pub fn les_ranks(pair: &ComplexPair, field: PrimeField) -> Result<BTreeMap<i32, LesRanks>> {
  let (k, l) = (pair.k(), pair.l());
  let chains = ChainComplexMatrices::new(k, field);
  let l_coords = |j: i32| Subspace::coordinate(field, k.count(j), l.faces_of_dim(j).iter().map(|f| k.index_of(*f).unwrap()));
  let q_coords = |j: i32| Subspace::coordinate(field, k.count(j), pair.difference(j).map(|f| k.index_of(f).unwrap()));
  let mut out = BTreeMap::new();
  for j in degrees(k) {
    let d = chains.get(j).unwrap();
    let cycles = d.kernel();
    let boundaries = match chains.get(j + 1) {
      Some(up) => up.image(),
      None => Subspace::zero(field, k.count(j)),
    };
    let b_rel = boundaries.sum(&l_coords(j))?;
    let pi = cycles.sum(&b_rel)?.dim() - b_rel.dim();

    let rel_cycles = q_coords(j).intersection(&preimage(d, &l_coords(j - 1))?)?;
    let l_boundaries = l_coords(j).image(d)?;
    let connecting = rel_cycles.image(d)?.sum(&l_boundaries)?.dim() - l_boundaries.dim();
    out.insert(j, LesRanks { pi, connecting });
  }
  Ok(out)
}
