//! Subspaces of `F_p^m` in canonical reduced echelon form, and the
//! subspace calculus built on them: sum, intersection, image, preimage and
//! quotient dimensions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;

/// A subspace stored as the reduced row echelon basis of its span. Equal
/// subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
  ambient: usize,
  basis: Matrix,
  pivots: Vec<usize>,
}

impl Subspace {
  pub fn zero(field: PrimeField, ambient: usize) -> Self {
    Self { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
  }

  pub fn full(field: PrimeField, ambient: usize) -> Self {
    Self { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
  }

  /// Span of arbitrary (possibly dependent) vectors.
  pub fn span<R: AsRef<[u64]>>(field: PrimeField, ambient: usize, vectors: &[R]) -> Self {
    let r = Matrix::from_rows(field, ambient, vectors).rref();
    let rank = r.rank();
    let rows: Vec<&[u64]> = r.matrix.row_vecs().take(rank).collect();
    Self { ambient, basis: Matrix::from_rows(field, ambient, &rows), pivots: r.pivots }
  }

  /// Span of the given standard basis vectors.
  pub fn coordinate<I: IntoIterator<Item = usize>>(field: PrimeField, ambient: usize, coords: I) -> Self {
    let mut coords: Vec<usize> = coords.into_iter().collect();
    coords.sort_unstable();
    coords.dedup();
    let rows: Vec<Vec<u64>> = coords
      .iter()
      .map(|&c| {
        let mut v = vec![0; ambient];
        v[c] = 1 % field.modulus();
        v
      })
      .collect();
    Self { ambient, basis: Matrix::from_rows(field, ambient, &rows), pivots: coords }
  }

  pub fn field(&self) -> PrimeField { self.basis.field() }

  pub fn ambient(&self) -> usize { self.ambient }

  pub fn dim(&self) -> usize { self.pivots.len() }

  pub fn pivots(&self) -> &[usize] { &self.pivots }

  pub fn basis(&self) -> &Matrix { &self.basis }

  pub fn basis_rows(&self) -> impl Iterator<Item = &[u64]> { self.basis.row_vecs() }

  /// Residue of `v` after eliminating the pivot coordinates of the basis.
  /// Zero exactly when `v` lies in the subspace.
  pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
    let f = self.field();
    let mut v = v.to_vec();
    for (i, &p) in self.pivots.iter().enumerate() {
      let c = v[p];
      if c != 0 {
        for (x, &b) in v.iter_mut().zip(self.basis.row(i)) {
          if b != 0 {
            *x = f.sub_mul(*x, c, b);
          }
        }
      }
    }
    v
  }

  pub fn contains(&self, v: &[u64]) -> bool { v.len() == self.ambient && self.reduce(v).iter().all(|&x| x == 0) }

  pub fn contains_subspace(&self, other: &Subspace) -> bool {
    other.ambient == self.ambient && other.basis_rows().all(|r| self.contains(r))
  }

  fn same_ambient(&self, other: &Subspace) -> Result<()> {
    if self.ambient != other.ambient {
      return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
    }
    Ok(())
  }

  pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
    self.same_ambient(other)?;
    let rows: Vec<&[u64]> = self.basis_rows().chain(other.basis_rows()).collect();
    Ok(Subspace::span(self.field(), self.ambient, &rows))
  }

  /// Intersection via the kernel of the stacked bases: `x A = y B` gives
  /// the common vectors `x A`.
  pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
    self.same_ambient(other)?;
    let f = self.field();
    let (a, b) = (self.dim(), other.dim());
    if a == 0 || b == 0 {
      return Ok(Subspace::zero(f, self.ambient));
    }
    let rows: Vec<&[u64]> = self.basis_rows().chain(other.basis_rows()).collect();
    let stacked_t = Matrix::from_rows(f, self.ambient, &rows).transpose();
    let relations = stacked_t.kernel();
    let common: Vec<Vec<u64>> = relations.basis_rows().map(|c| combine(f, self.ambient, &c[..a], &self.basis)).collect();
    Ok(Subspace::span(f, self.ambient, &common))
  }

  /// `{M x : x ∈ self}`.
  pub fn image(&self, m: &Matrix) -> Result<Subspace> {
    if m.cols() != self.ambient {
      return Err(Error::ShapeMismatch { rows: m.rows(), cols: m.cols(), domain: self.ambient, codomain: m.rows() });
    }
    let rows: Vec<Vec<u64>> = self.basis_rows().map(|v| m.apply(v)).collect();
    Ok(Subspace::span(self.field(), m.rows(), &rows))
  }
}

/// `Σ coeffs[i] * basis.row(i)`.
fn combine(f: PrimeField, ambient: usize, coeffs: &[u64], basis: &Matrix) -> Vec<u64> {
  let mut out = vec![0; ambient];
  for (i, &c) in coeffs.iter().enumerate() {
    if c == 0 {
      continue;
    }
    for (o, &b) in out.iter_mut().zip(basis.row(i)) {
      if b != 0 {
        *o = f.add(*o, f.mul(c, b));
      }
    }
  }
  out
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> { a.sum(b) }

pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> { a.intersection(b) }

/// `{x : M x ∈ B}`, found by solving `M x - B^T y = 0` on the augmented
/// matrix `[M | B^T]` and keeping the `x` part.
pub fn preimage(m: &Matrix, b: &Subspace) -> Result<Subspace> {
  if m.rows() != b.ambient() {
    return Err(Error::ShapeMismatch { rows: m.rows(), cols: m.cols(), domain: m.cols(), codomain: b.ambient() });
  }
  let f = m.field();
  let (n, k) = (m.cols(), b.dim());
  let mut aug = Matrix::zeros(f, m.rows(), n + k);
  for r in 0..m.rows() {
    for c in 0..n {
      aug.set(r, c, m.get(r, c));
    }
    for (i, row) in b.basis_rows().enumerate() {
      aug.set(r, n + i, row[r]);
    }
  }
  let solutions = aug.kernel();
  let xs: Vec<&[u64]> = solutions.basis_rows().map(|v| &v[..n]).collect();
  Ok(Subspace::span(f, n, &xs))
}

/// `dim K - dim I` for `I ⊆ K`.
pub fn quotient_dim(k: &Subspace, i: &Subspace) -> Result<usize> {
  if !k.contains_subspace(i) {
    return Err(Error::NotContained);
  }
  Ok(k.dim() - i.dim())
}

/// `dim(K/I) = dim((K ∩ J)/(I ∩ J)) + dim((K + J)/(I + J))` for `I ⊆ K`.
pub fn lemma_kij_check(i: &Subspace, j: &Subspace, k: &Subspace) -> Result<bool> {
  let lhs = quotient_dim(k, i)?;
  let caps = quotient_dim(&k.intersection(j)?, &i.intersection(j)?)?;
  let sums = quotient_dim(&k.sum(j)?, &i.sum(j)?)?;
  Ok(lhs == caps + sums)
}

/// One subspace per degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedSubspace(pub BTreeMap<i32, Subspace>);

impl GradedSubspace {
  pub fn get(&self, j: i32) -> Option<&Subspace> { self.0.get(&j) }

  pub fn dim(&self, j: i32) -> usize { self.0.get(&j).map_or(0, Subspace::dim) }
}

/// Incrementally maintained echelon basis that remembers how each stored
/// row was formed from the accepted input vectors.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
  field: PrimeField,
  ambient: usize,
  rows: Vec<Vec<u64>>,
  pivots: Vec<usize>,
  // rows[i] = Σ_t combos[i][t] * accepted input t
  combos: Vec<Vec<u64>>,
}

impl EchelonBasis {
  pub fn new(field: PrimeField, ambient: usize) -> Self {
    Self { field, ambient, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new() }
  }

  pub fn rank(&self) -> usize { self.rows.len() }

  pub fn ambient(&self) -> usize { self.ambient }

  /// Reduces `v` against the basis, returning the residue and the
  /// multipliers used on each stored row.
  fn eliminate(&self, v: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let f = self.field;
    let mut v = v.to_vec();
    let mut mult = vec![0; self.rows.len()];
    for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
      let c = v[p];
      if c != 0 {
        mult[i] = c;
        for (x, &b) in v[p..].iter_mut().zip(&row[p..]) {
          if b != 0 {
            *x = f.sub_mul(*x, c, b);
          }
        }
      }
    }
    (v, mult)
  }

  /// Adds `v` if it is independent of the basis; returns its pivot column.
  pub fn insert(&mut self, v: &[u64]) -> Option<usize> {
    assert_eq!(v.len(), self.ambient);
    let f = self.field;
    let (mut residue, mult) = self.eliminate(v);
    let pivot = residue.iter().position(|&x| x != 0)?;
    let inv = f.inv(residue[pivot]);
    for x in &mut residue[pivot..] {
      *x = f.mul(*x, inv);
    }
    let accepted = self.rows.len();
    let mut combo = vec![0; accepted + 1];
    combo[accepted] = inv;
    for (i, &m) in mult.iter().enumerate() {
      if m != 0 {
        for (t, &c) in self.combos[i].iter().enumerate() {
          combo[t] = f.sub(combo[t], f.mul(f.mul(m, c), inv));
        }
      }
    }
    for c in &mut self.combos {
      c.push(0);
    }
    self.rows.push(residue);
    self.pivots.push(pivot);
    self.combos.push(combo);
    Some(pivot)
  }

  pub fn contains(&self, v: &[u64]) -> bool { self.eliminate(v).0.iter().all(|&x| x == 0) }

  /// Coefficients of `v` over the accepted inputs, in acceptance order, or
  /// `None` when `v` is outside the span.
  pub fn express(&self, v: &[u64]) -> Option<Vec<u64>> {
    let f = self.field;
    let (residue, mult) = self.eliminate(v);
    if residue.iter().any(|&x| x != 0) {
      return None;
    }
    let mut out = vec![0; self.rows.len()];
    for (i, &m) in mult.iter().enumerate() {
      if m != 0 {
        for (o, &c) in out.iter_mut().zip(&self.combos[i]) {
          *o = f.add(*o, f.mul(m, c));
        }
      }
    }
    Some(out)
  }
}

#[cfg(test)]
mod tests {
  use proptest::prelude::*;

  use super::*;

  fn f() -> PrimeField { PrimeField::new(5).unwrap() }

  fn line(v: &[u64]) -> Subspace { Subspace::span(f(), v.len(), &[v]) }

  #[test]
  fn sums() {
    let a = line(&[1, 2, 0]);
    let zero = Subspace::zero(f(), 3);
    assert_eq!(a.sum(&zero).unwrap(), a);
    assert_eq!(a.sum(&a).unwrap(), a);
    assert_eq!(line(&[1, 0]).sum(&line(&[0, 1])).unwrap(), Subspace::full(f(), 2));
    assert!(a.sum(&line(&[1, 0])).is_err());
  }

  #[test]
  fn intersections() {
    let a = Subspace::span(f(), 3, &[[1, 1, 0], [0, 0, 1]]);
    assert_eq!(a.intersection(&Subspace::full(f(), 3)).unwrap(), a);
    assert_eq!(line(&[1, 0]).intersection(&line(&[0, 1])).unwrap().dim(), 0);
    let b = Subspace::span(f(), 3, &[[1, 1, 1], [0, 1, 0]]);
    assert_eq!(a.intersection(&b).unwrap(), line(&[1, 1, 1]));
  }

  #[test]
  fn preimages() {
    let m = Matrix::from_rows(f(), 3, &[[1, 0, 0], [0, 1, 1]]);
    assert_eq!(preimage(&m, &Subspace::full(f(), 2)).unwrap(), Subspace::full(f(), 3));
    assert_eq!(preimage(&m, &Subspace::zero(f(), 2)).unwrap(), m.kernel());
    let p = preimage(&m, &line(&[1, 0])).unwrap();
    assert_eq!(p.dim(), 2);
    assert!(preimage(&m, &Subspace::zero(f(), 3)).is_err());
  }

  #[test]
  fn quotients() {
    let plane = Subspace::full(f(), 2);
    let l = line(&[1, 3]);
    assert_eq!(quotient_dim(&plane, &plane).unwrap(), 0);
    assert_eq!(quotient_dim(&plane, &Subspace::zero(f(), 2)).unwrap(), 2);
    assert_eq!(quotient_dim(&plane, &l).unwrap(), 1);
    assert_eq!(quotient_dim(&l, &plane), Err(Error::NotContained));
  }

  #[test]
  fn kij_trivial_cases() {
    let k = Subspace::span(f(), 3, &[[1, 2, 0], [0, 1, 4]]);
    let zero = Subspace::zero(f(), 3);
    assert!(lemma_kij_check(&zero, &zero, &k).unwrap());
    assert!(lemma_kij_check(&k, &line(&[0, 0, 1]), &k).unwrap());
    assert_eq!(lemma_kij_check(&k, &zero, &zero), Err(Error::NotContained));
  }

  #[test]
  fn echelon_basis_tracks_combinations() {
    let mut e = EchelonBasis::new(f(), 3);
    assert_eq!(e.insert(&[0, 1, 2]), Some(1));
    assert_eq!(e.insert(&[1, 1, 0]), Some(0));
    assert_eq!(e.insert(&[1, 2, 2]), None);
    assert_eq!(e.express(&[1, 2, 2]), Some(vec![1, 1]));
    assert_eq!(e.express(&[2, 0, 1]), Some(vec![3, 2]));
    assert!(e.express(&[0, 0, 1]).is_none());
  }

  fn arb_vectors(dim: usize, max: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0u64..5, dim), 0..max)
  }

  proptest! {
    #[test]
    fn modular_law(dim in 1usize..7, seed_a in arb_vectors(6, 5), seed_b in arb_vectors(6, 5)) {
      let cut = |vs: &Vec<Vec<u64>>| vs.iter().map(|v| v[..dim].to_vec()).collect::<Vec<_>>();
      let a = Subspace::span(f(), dim, &cut(&seed_a));
      let b = Subspace::span(f(), dim, &cut(&seed_b));
      let s = a.sum(&b).unwrap();
      let i = a.intersection(&b).unwrap();
      prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
      prop_assert!(a.contains_subspace(&i) && b.contains_subspace(&i));
      prop_assert!(s.contains_subspace(&a) && s.contains_subspace(&b));
    }

    #[test]
    fn preimage_lands_in_target(rows in prop::collection::vec(prop::collection::vec(0u64..5, 4), 1..5), target in arb_vectors(4, 3)) {
      let m = Matrix::from_rows(f(), 4, &rows);
      let cut: Vec<Vec<u64>> = target.iter().map(|v| v[..rows.len()].to_vec()).collect();
      let b = Subspace::span(f(), rows.len(), &cut);
      let p = preimage(&m, &b).unwrap();
      for x in p.basis_rows() {
        prop_assert!(b.contains(&m.apply(x)));
      }
      prop_assert!(p.contains_subspace(&m.kernel()));
      // dim preimage = dim ker + dim(im ∩ B)
      prop_assert_eq!(p.dim(), m.kernel().dim() + m.image().intersection(&b).unwrap().dim());
    }

    #[test]
    fn echelon_matches_batch_rank(vs in arb_vectors(5, 8)) {
      let mut e = EchelonBasis::new(f(), 5);
      for v in &vs {
        e.insert(v);
      }
      prop_assert_eq!(e.rank(), Subspace::span(f(), 5, &vs).dim());
      for v in &vs {
        prop_assert!(e.contains(v));
      }
    }
  }
}
