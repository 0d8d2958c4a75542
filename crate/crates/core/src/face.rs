//! Faces as bit-masks over the ground set `[n]`, together with the two
//! orders used throughout: the componentwise partial order and the
//! lexicographic order on equal-size sets.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite set of vertices drawn from `1..=32`.
///
/// Vertex `v` is stored in bit `v - 1`. The total order on `Face` is graded
/// lexicographic: smaller faces first, equal sizes compared by `lex_less`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u32);

impl Face {
  pub const MAX_VERTEX: usize = 32;

  pub const EMPTY: Face = Face(0);

  /// Builds a face from vertices in any order. Duplicates collapse.
  pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
    let mut bits = 0u32;
    for v in vertices {
      if v == 0 || v > Self::MAX_VERTEX {
        return Err(Error::VertexOutOfRange { vertex: v, n: Self::MAX_VERTEX });
      }
      bits |= 1 << (v - 1);
    }
    Ok(Face(bits))
  }

  /// Panicking constructor for literals in tests and examples.
  pub fn of(vertices: &[usize]) -> Self { Self::new(vertices.iter().copied()).expect("valid vertex list") }

  pub fn singleton(v: usize) -> Self { Self::of(&[v]) }

  pub fn from_bits(bits: u32) -> Self { Face(bits) }

  pub fn bits(self) -> u32 { self.0 }

  pub fn len(self) -> usize { self.0.count_ones() as usize }

  pub fn is_empty(self) -> bool { self.0 == 0 }

  /// `|F| - 1`, so the empty face has dimension `-1`.
  pub fn dim(self) -> i32 { self.len() as i32 - 1 }

  pub fn contains(self, v: usize) -> bool { v >= 1 && v <= Self::MAX_VERTEX && self.0 & (1 << (v - 1)) != 0 }

  pub fn with(self, v: usize) -> Self { Face(self.0 | (1 << (v - 1))) }

  pub fn without(self, v: usize) -> Self { Face(self.0 & !(1 << (v - 1))) }

  pub fn is_subset_of(self, other: Face) -> bool { self.0 & !other.0 == 0 }

  pub fn is_disjoint(self, other: Face) -> bool { self.0 & other.0 == 0 }

  pub fn union(self, other: Face) -> Self { Face(self.0 | other.0) }

  /// Largest vertex, if any.
  pub fn max_vertex(self) -> Option<usize> { (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize) }

  /// Vertices in increasing order.
  pub fn vertices(self) -> Vertices { Vertices(self.0) }

  pub fn to_vec(self) -> Vec<usize> { self.vertices().collect() }

  /// Whether every vertex lies in `1..=n`.
  pub fn fits(self, n: usize) -> bool { n >= Self::MAX_VERTEX || self.0 >> n == 0 }

  /// Codimension-one subsets, in increasing order of the removed vertex.
  pub fn facets(self) -> impl Iterator<Item = (usize, Face)> { self.vertices().map(move |v| (v, self.without(v))) }

  /// Number of vertices of `self` strictly greater than `v`.
  pub(crate) fn count_above(self, v: usize) -> u32 {
    if v >= Self::MAX_VERTEX {
      0
    } else {
      (self.0 >> v).count_ones()
    }
  }

  fn lex_cmp_same_size(self, other: Face) -> Ordering {
    let diff = self.0 ^ other.0;
    if diff == 0 {
      Ordering::Equal
    } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
      Ordering::Less
    } else {
      Ordering::Greater
    }
  }
}

/// `S <=_P T`: the `p`-th smallest element of `S` is at most that of `T`
/// for every `p`.
pub fn leq_partial(s: Face, t: Face) -> Result<bool> {
  if s.len() != t.len() {
    return Err(Error::SizeMismatch { left: s, right: t });
  }
  Ok(s.vertices().zip(t.vertices()).all(|(a, b)| a <= b))
}

/// `S <_L T`: at the first position where the sorted lists differ, `S` is
/// smaller.
pub fn lex_less(s: Face, t: Face) -> Result<bool> {
  if s.len() != t.len() {
    return Err(Error::SizeMismatch { left: s, right: t });
  }
  Ok(s.lex_cmp_same_size(t) == Ordering::Less)
}

impl Ord for Face {
  fn cmp(&self, other: &Self) -> Ordering {
    self.len().cmp(&other.len()).then_with(|| self.lex_cmp_same_size(*other))
  }
}

impl PartialOrd for Face {
  fn partial_cmp(&self, other: &Self) -> Option<Ordering> { Some(self.cmp(other)) }
}

impl fmt::Display for Face {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, v) in self.vertices().enumerate() {
      if i > 0 {
        write!(f, ",")?;
      }
      write!(f, "{v}")?;
    }
    write!(f, "}}")
  }
}

impl fmt::Debug for Face {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { fmt::Display::fmt(self, f) }
}

pub struct Vertices(u32);

impl Iterator for Vertices {
  type Item = usize;

  fn next(&mut self) -> Option<usize> {
    if self.0 == 0 {
      return None;
    }
    let v = self.0.trailing_zeros() as usize + 1;
    self.0 &= self.0 - 1;
    Some(v)
  }

  fn size_hint(&self) -> (usize, Option<usize>) {
    let k = self.0.count_ones() as usize;
    (k, Some(k))
  }
}

impl ExactSizeIterator for Vertices {}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn subsets_lex(n: usize, k: usize) -> Vec<Face> {
  use itertools::Itertools;
  if k == 0 {
    return vec![Face::EMPTY];
  }
  (1..=n).combinations(k).map(|c| Face::of(&c)).collect()
}
