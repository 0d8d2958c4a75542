//! Dense matrices over a prime field and reduced row echelon form.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::subspace::Subspace;

/// Row-major dense matrix over `F_p`. Matrices act on column vectors, so a
/// `rows x cols` matrix maps `F^cols -> F^rows`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
  field: PrimeField,
  rows: usize,
  cols: usize,
  data: Vec<u64>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
  pub matrix: Matrix,
  pub pivots: Vec<usize>,
}

impl Rref {
  pub fn rank(&self) -> usize { self.pivots.len() }
}

impl Matrix {
  pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self { Self { field, rows, cols, data: vec![0; rows * cols] } }

  pub fn identity(field: PrimeField, n: usize) -> Self {
    let mut m = Self::zeros(field, n, n);
    for i in 0..n {
      m.data[i * n + i] = 1 % field.modulus();
    }
    m
  }

  /// Builds a matrix from row vectors of length `cols`; entries are reduced
  /// mod `p`.
  pub fn from_rows<R: AsRef<[u64]>>(field: PrimeField, cols: usize, rows: &[R]) -> Self {
    let mut data = Vec::with_capacity(rows.len() * cols);
    for r in rows {
      let r = r.as_ref();
      assert_eq!(r.len(), cols, "ragged row");
      data.extend(r.iter().map(|&x| field.reduce(x)));
    }
    Self { field, rows: rows.len(), cols, data }
  }

  pub fn field(&self) -> PrimeField { self.field }

  pub fn rows(&self) -> usize { self.rows }

  pub fn cols(&self) -> usize { self.cols }

  #[inline]
  pub fn get(&self, r: usize, c: usize) -> u64 { self.data[r * self.cols + c] }

  #[inline]
  pub fn set(&mut self, r: usize, c: usize, v: u64) { self.data[r * self.cols + c] = self.field.reduce(v) }

  pub fn row(&self, r: usize) -> &[u64] { &self.data[r * self.cols..(r + 1) * self.cols] }

  pub fn row_vecs(&self) -> impl Iterator<Item = &[u64]> { (0..self.rows).map(|r| self.row(r)) }

  pub fn is_zero(&self) -> bool { self.data.iter().all(|&x| x == 0) }

  pub fn transpose(&self) -> Matrix {
    let mut t = Matrix::zeros(self.field, self.cols, self.rows);
    for r in 0..self.rows {
      for c in 0..self.cols {
        t.data[c * self.rows + r] = self.get(r, c);
      }
    }
    t
  }

  pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
    if self.cols != other.rows {
      return Err(Error::ShapeMismatch { rows: other.rows, cols: other.cols, domain: self.cols, codomain: self.rows });
    }
    let f = self.field;
    let mut out = Matrix::zeros(f, self.rows, other.cols);
    for i in 0..self.rows {
      for k in 0..self.cols {
        let a = self.get(i, k);
        if a == 0 {
          continue;
        }
        for j in 0..other.cols {
          let idx = i * other.cols + j;
          out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
        }
      }
    }
    Ok(out)
  }

  /// `M x` for a column vector `x`.
  pub fn apply(&self, x: &[u64]) -> Vec<u64> {
    assert_eq!(x.len(), self.cols, "vector length does not match matrix columns");
    let f = self.field;
    (0..self.rows)
      .map(|r| self.row(r).iter().zip(x).fold(0, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { f.add(acc, f.mul(a, b)) }))
      .collect()
  }

  /// Reduced row echelon form. Pivot columns are returned in increasing
  /// order; the rank is their count.
  pub fn rref(&self) -> Rref {
    let f = self.field;
    let mut m = self.clone();
    let mut pivots = Vec::new();
    let mut lead = 0;
    for c in 0..m.cols {
      if lead == m.rows {
        break;
      }
      let Some(p) = (lead..m.rows).find(|&r| m.get(r, c) != 0) else { continue };
      m.swap_rows(lead, p);
      let inv = f.inv(m.get(lead, c));
      m.scale_row(lead, inv);
      for r in 0..m.rows {
        if r != lead {
          let factor = m.get(r, c);
          if factor != 0 {
            m.sub_row_multiple(r, lead, factor, c);
          }
        }
      }
      pivots.push(c);
      lead += 1;
    }
    Rref { matrix: m, pivots }
  }

  pub fn rank(&self) -> usize { self.rref().rank() }

  /// `{x : M x = 0}` as a subspace of `F^cols`.
  pub fn kernel(&self) -> Subspace {
    let Rref { matrix: r, pivots } = self.rref();
    let f = self.field;
    let mut is_pivot = vec![false; self.cols];
    for &p in &pivots {
      is_pivot[p] = true;
    }
    let basis: Vec<Vec<u64>> = (0..self.cols)
      .filter(|&c| !is_pivot[c])
      .map(|free| {
        let mut v = vec![0; self.cols];
        v[free] = 1 % f.modulus();
        for (i, &p) in pivots.iter().enumerate() {
          v[p] = f.neg(r.get(i, free));
        }
        v
      })
      .collect();
    Subspace::span(f, self.cols, &basis)
  }

  /// Image `{M x}` as a subspace of `F^rows`.
  pub fn image(&self) -> Subspace { Subspace::span(self.field, self.rows, &self.transpose().row_vecs().collect::<Vec<_>>()) }

  fn swap_rows(&mut self, a: usize, b: usize) {
    if a != b {
      for c in 0..self.cols {
        self.data.swap(a * self.cols + c, b * self.cols + c);
      }
    }
  }

  fn scale_row(&mut self, r: usize, s: u64) {
    let f = self.field;
    for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
      *x = f.mul(*x, s);
    }
  }

  /// `row[target] -= factor * row[source]`, touching columns from `from` on.
  fn sub_row_multiple(&mut self, target: usize, source: usize, factor: u64, from: usize) {
    let f = self.field;
    let cols = self.cols;
    let (t, s) = if target < source {
      let (lo, hi) = self.data.split_at_mut(source * cols);
      (&mut lo[target * cols..(target + 1) * cols], &hi[..cols])
    } else {
      let (lo, hi) = self.data.split_at_mut(target * cols);
      (&mut hi[..cols], &lo[source * cols..(source + 1) * cols])
    };
    for c in from..cols {
      if s[c] != 0 {
        t[c] = f.sub_mul(t[c], factor, s[c]);
      }
    }
  }
}

impl fmt::Debug for Matrix {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.field.modulus())?;
    for r in self.row_vecs() {
      writeln!(f, "  {r:?}")?;
    }
    Ok(())
  }
}
