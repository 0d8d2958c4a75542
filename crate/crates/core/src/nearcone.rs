//! Near-cones and the purely combinatorial Betti formulas for them.
//!
//! A near-cone with apex `v0` decomposes as `(v0 * Δ') ⊔ B(Δ)`, and its
//! reduced Betti numbers are the face counts of `B(Δ)`. Shifted complexes
//! are near-cones with apex 1, which is what makes these formulas usable on
//! the output of algebraic shifting.

use crate::betti::BettiTable;
use crate::complex::{ComplexPair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearConeDecomposition {
  pub apex: usize,
  /// Faces `F` with `F ∪ {apex}` outside the complex.
  pub b: Vec<Face>,
  /// Faces `F` without the apex such that `F ∪ {apex}` is a face.
  pub delta_prime: Vec<Face>,
}

impl NearConeDecomposition {
  /// Face counts of `B(Δ)` per dimension, as a Betti table.
  pub fn b_counts(&self) -> BettiTable {
    let mut t = BettiTable::new();
    for f in &self.b {
      t.set(f.dim(), t.get(f.dim()) + 1);
    }
    t
  }

  /// Checks the structural claims about the decomposition against `c`:
  /// disjoint reconstruction, `B` an antichain of maximal faces, and both
  /// `Δ'` and `Δ' ⊔ B` closed under subsets.
  pub fn check(&self, c: &SimplicialComplex) -> bool {
    let in_b = |f: &Face| self.b.contains(f);
    let in_prime = |f: &Face| self.delta_prime.contains(f);
    let reconstructs = c.faces().all(|f| {
      let coned = if f.contains(self.apex) { in_prime(&f.without(self.apex)) } else { in_prime(&f) };
      coned != in_b(&f)
    }) && self.b.len() + 2 * self.delta_prime.len() == c.len();
    let maximal = self.b.iter().all(|f| !(1..=c.n()).any(|v| !f.contains(v) && c.contains(f.with(v))));
    let prime_closed = self.delta_prime.iter().all(|f| f.facets().all(|(_, g)| in_prime(&g)));
    let union_closed = self.delta_prime.iter().chain(&self.b).all(|f| f.facets().all(|(_, g)| in_prime(&g) || in_b(&g)));
    reconstructs && maximal && prime_closed && union_closed
  }
}

fn check_apex(c: &SimplicialComplex, apex: usize) -> Result<()> {
  if apex == 0 || apex > c.n() {
    return Err(Error::VertexOutOfRange { vertex: apex, n: c.n() });
  }
  Ok(())
}

/// First violation of the near-cone condition in graded lex order, as
/// `(F, w)` with `(F - w) ∪ {apex}` missing.
pub fn near_cone_witness(c: &SimplicialComplex, apex: usize) -> Option<(Face, usize)> {
  c.faces()
    .filter(|f| !f.contains(apex))
    .find_map(|f| f.vertices().find(|&w| !c.contains(f.without(w).with(apex))).map(|w| (f, w)))
}

pub fn is_near_cone(c: &SimplicialComplex, apex: usize) -> bool { near_cone_witness(c, apex).is_none() }

pub fn near_cone_decompose(c: &SimplicialComplex, apex: usize) -> Result<NearConeDecomposition> {
  check_apex(c, apex)?;
  if let Some((face, vertex)) = near_cone_witness(c, apex) {
    return Err(Error::NotNearCone { apex, face, vertex });
  }
  let (mut b, mut delta_prime) = (Vec::new(), Vec::new());
  for f in c.faces().filter(|f| !f.contains(apex)) {
    if c.contains(f.with(apex)) {
      delta_prime.push(f);
    } else {
      b.push(f);
    }
  }
  Ok(NearConeDecomposition { apex, b, delta_prime })
}

fn require_near_cone(c: &SimplicialComplex, apex: usize) -> Result<()> {
  check_apex(c, apex)?;
  match near_cone_witness(c, apex) {
    Some((face, vertex)) => Err(Error::NotNearCone { apex, face, vertex }),
    None => Ok(()),
  }
}

/// `β̃_j = #{F ∈ C_j : apex ∉ F, apex ⊔ F ∉ C}` for a near-cone `C`.
pub fn betti_near_cone(c: &SimplicialComplex, apex: usize) -> Result<BettiTable> {
  require_near_cone(c, apex)?;
  Ok(count_by_dim(c.faces().filter(|f| !f.contains(apex) && !c.contains(f.with(apex)))))
}

/// Relative Betti numbers of a pair of near-cones with a common apex: the
/// faces of `K - L` that are "free" in `K`, plus the faces of `K - L`
/// containing the apex whose link face lies in `L`.
pub fn relative_betti_near_cones(pair: &ComplexPair, apex: usize) -> Result<BettiTable> {
  require_near_cone(pair.k(), apex)?;
  require_near_cone(pair.l(), apex)?;
  let (k, l) = (pair.k(), pair.l());
  let q = k.faces().filter(|f| !l.contains(*f));
  Ok(count_by_dim(q.filter(|f| {
    if f.contains(apex) {
      l.contains(f.without(apex))
    } else {
      !k.contains(f.with(apex))
    }
  })))
}

fn count_by_dim<I: IntoIterator<Item = Face>>(faces: I) -> BettiTable {
  let mut t = BettiTable::new();
  for f in faces {
    t.set(f.dim(), t.get(f.dim()) + 1);
  }
  t
}

/// The four combinatorial face sets attached to a pair of shifted complexes
/// `Δ(L) ⊆ Δ(K)`, with `Δ(Q) = Δ(K) - Δ(L)` and apex 1:
///
/// - `kq`: `F ∈ Δ(Q)`, `1 ∉ F`, `1 ⊔ F ∉ Δ(K)`
/// - `lq_prime`: `G ∈ Δ(Q)`, `1 ∈ G`, `G - 1 ∈ Δ(L)`
/// - `lq`: `F ∈ Δ(L)`, `1 ∉ F`, `1 ⊔ F ∈ Δ(Q)`
/// - `kl`: `F ∈ Δ(L)`, `1 ∉ F`, `1 ⊔ F ∉ Δ(K)`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CSets {
  pub kq: Vec<Face>,
  pub lq_prime: Vec<Face>,
  pub lq: Vec<Face>,
  pub kl: Vec<Face>,
}

impl CSets {
  pub fn kq_count(&self, j: i32) -> usize { count_dim(&self.kq, j) }

  pub fn lq_prime_count(&self, j: i32) -> usize { count_dim(&self.lq_prime, j) }

  pub fn lq_count(&self, j: i32) -> usize { count_dim(&self.lq, j) }

  pub fn kl_count(&self, j: i32) -> usize { count_dim(&self.kl, j) }

  /// `F ↦ 1 ⊔ F` maps `lq` onto `lq_prime`, one dimension up.
  pub fn bijection_holds(&self) -> bool {
    let mut image: Vec<Face> = self.lq.iter().map(|f| f.with(1)).collect();
    image.sort();
    image == self.lq_prime
  }
}

fn count_dim(faces: &[Face], j: i32) -> usize { faces.iter().filter(|f| f.dim() == j).count() }

pub fn c_sets(shifted: &ComplexPair) -> Result<CSets> {
  let (dk, dl) = (shifted.k(), shifted.l());
  if !dk.is_shifted() || !dl.is_shifted() {
    return Err(Error::NotShifted);
  }
  let in_q = |f: Face| dk.contains(f) && !dl.contains(f);
  let mut sets = CSets { kq: Vec::new(), lq_prime: Vec::new(), lq: Vec::new(), kl: Vec::new() };
  for f in dk.faces() {
    if in_q(f) {
      if f.contains(1) {
        if dl.contains(f.without(1)) {
          sets.lq_prime.push(f);
        }
      } else if !dk.contains(f.with(1)) {
        sets.kq.push(f);
      }
    } else if !f.contains(1) {
      if in_q(f.with(1)) {
        sets.lq.push(f);
      } else if !dk.contains(f.with(1)) {
        sets.kl.push(f);
      }
    }
  }
  Ok(sets)
}

#[cfg(test)]
mod tests {
  use super::*;

  fn facets(n: usize, fs: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, fs.iter().map(|f| Face::of(f))).unwrap()
  }

  fn shifted_k() -> SimplicialComplex { facets(3, &[&[1, 2], &[3]]) }

  fn shifted_l() -> SimplicialComplex { facets(3, &[&[1], &[2]]) }

  #[test]
  fn decomposes_shifted_point_edge_complex() {
    let d = near_cone_decompose(&shifted_k(), 1).unwrap();
    assert_eq!(d.b, vec![Face::of(&[3])]);
    assert_eq!(d.delta_prime, vec![Face::EMPTY, Face::of(&[2])]);
    assert!(d.check(&shifted_k()));
  }

  #[test]
  fn unshifted_point_edge_complex_is_not_a_near_cone() {
    let k = facets(3, &[&[1], &[2, 3]]);
    assert_eq!(
      near_cone_decompose(&k, 1).unwrap_err(),
      Error::NotNearCone { apex: 1, face: Face::of(&[2, 3]), vertex: 2 }
    );
  }

  #[test]
  fn degenerate_near_cones() {
    let e = SimplicialComplex::empty(2).unwrap();
    let d = near_cone_decompose(&e, 1).unwrap();
    assert!(d.b.is_empty() && d.delta_prime.is_empty());
    let v = SimplicialComplex::void_point(2).unwrap();
    let d = near_cone_decompose(&v, 1).unwrap();
    assert_eq!(d.b, vec![Face::EMPTY]);
    assert!(d.delta_prime.is_empty());
    assert!(d.check(&v));
  }

  #[test]
  fn betti_counts() {
    let b = betti_near_cone(&shifted_k(), 1).unwrap();
    assert_eq!(b, [(0, 1)].into_iter().collect());
    let cone = SimplicialComplex::simplex(4).unwrap();
    assert!(betti_near_cone(&cone, 1).unwrap().is_zero());
    let v = SimplicialComplex::void_point(3).unwrap();
    assert_eq!(betti_near_cone(&v, 1).unwrap(), [(-1, 1)].into_iter().collect());
    assert!(betti_near_cone(&facets(3, &[&[1], &[2, 3]]), 1).is_err());
  }

  #[test]
  fn relative_counts() {
    let pair = ComplexPair::new(shifted_k(), shifted_l()).unwrap();
    assert_eq!(relative_betti_near_cones(&pair, 1).unwrap(), [(0, 1), (1, 1)].into_iter().collect());
    let same = ComplexPair::new(shifted_k(), shifted_k()).unwrap();
    assert!(relative_betti_near_cones(&same, 1).unwrap().is_zero());
    let with_void = ComplexPair::new(shifted_k(), SimplicialComplex::empty(3).unwrap()).unwrap();
    assert_eq!(relative_betti_near_cones(&with_void, 1).unwrap(), betti_near_cone(&shifted_k(), 1).unwrap());
  }

  #[test]
  fn point_edge_c_sets() {
    let pair = ComplexPair::new(shifted_k(), shifted_l()).unwrap();
    let c = c_sets(&pair).unwrap();
    assert_eq!(c.kq, vec![Face::of(&[3])]);
    assert_eq!(c.lq_prime, vec![Face::of(&[1, 2])]);
    assert_eq!(c.lq, vec![Face::of(&[2])]);
    assert!(c.kl.is_empty());
    assert!(c.bijection_holds());
  }

  #[test]
  fn c_sets_degenerate_pairs() {
    let k = shifted_k();
    let same = c_sets(&ComplexPair::new(k.clone(), k.clone()).unwrap()).unwrap();
    assert!(same.kq.is_empty() && same.lq_prime.is_empty());
    let void = c_sets(&ComplexPair::new(k.clone(), SimplicialComplex::empty(3).unwrap()).unwrap()).unwrap();
    assert!(void.lq.is_empty() && void.kl.is_empty());
    let unshifted = ComplexPair::new(facets(3, &[&[1], &[2, 3]]), SimplicialComplex::empty(3).unwrap()).unwrap();
    assert_eq!(c_sets(&unshifted).unwrap_err(), Error::NotShifted);
  }
}
