//! Simplicial complexes on an explicit ground set `[n]`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::face::Face;

/// Distinguishes the void complex `∅` from the complex `{∅}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
  /// No faces at all.
  Empty,
  /// Only the empty face.
  VoidPoint,
  General,
}

/// A downward-closed family of faces of `[n]`, stored fully expanded.
///
/// Faces of each size are kept in lexicographic order; the position of a
/// face within its size class is its coordinate index in every graded
/// vector space built on the complex.
#[derive(Clone)]
pub struct SimplicialComplex {
  n: usize,
  layers: Vec<Vec<Face>>,
  index: HashMap<Face, usize>,
}

impl SimplicialComplex {
  /// The void complex with no faces.
  pub fn empty(n: usize) -> Result<Self> {
    check_ground_set(n)?;
    Ok(Self { n, layers: Vec::new(), index: HashMap::new() })
  }

  /// The complex `{∅}`.
  pub fn void_point(n: usize) -> Result<Self> { Self::from_faces(n, [Face::EMPTY]) }

  /// The full simplex on `[n]`.
  pub fn simplex(n: usize) -> Result<Self> {
    check_ground_set(n)?;
    let top = Face::new(1..=n)?;
    Self::from_facets(n, [top])
  }

  /// The boundary of the simplex on `[n]` (a sphere of dimension `n - 2`).
  pub fn simplex_boundary(n: usize) -> Result<Self> {
    check_ground_set(n)?;
    let top = Face::new(1..=n)?;
    Self::from_facets(n, top.facets().map(|(_, f)| f))
  }

  /// Downward closure of the given faces. No facets gives `∅`; the single
  /// facet `{}` gives `{∅}`.
  pub fn from_facets<I: IntoIterator<Item = Face>>(n: usize, facets: I) -> Result<Self> {
    check_ground_set(n)?;
    let mut all: Vec<Face> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for facet in facets {
      check_face(facet, n)?;
      // enumerate subsets of the facet's bit-mask
      let bits = facet.bits();
      let mut sub = bits;
      loop {
        if seen.insert(sub) {
          all.push(Face::from_bits(sub));
        }
        if sub == 0 {
          break;
        }
        sub = (sub - 1) & bits;
      }
    }
    Ok(Self::build(n, all))
  }

  /// Builds a complex from an explicit face list, rejecting families that
  /// are not closed under taking subsets.
  pub fn from_faces<I: IntoIterator<Item = Face>>(n: usize, faces: I) -> Result<Self> {
    check_ground_set(n)?;
    let mut all: Vec<Face> = faces.into_iter().collect();
    for &f in &all {
      check_face(f, n)?;
    }
    all.sort();
    all.dedup();
    let c = Self::build(n, all);
    for f in c.faces() {
      if let Some((_, missing)) = f.facets().find(|(_, g)| !c.contains(*g)) {
        return Err(Error::NotDownwardClosed { face: f, missing });
      }
    }
    Ok(c)
  }

  fn build(n: usize, mut all: Vec<Face>) -> Self {
    all.sort();
    all.dedup();
    let mut layers: Vec<Vec<Face>> = Vec::new();
    let mut index = HashMap::with_capacity(all.len());
    for f in all {
      let k = f.len();
      if layers.len() <= k {
        layers.resize_with(k + 1, Vec::new);
      }
      index.insert(f, layers[k].len());
      layers[k].push(f);
    }
    Self { n, layers, index }
  }

  pub fn n(&self) -> usize { self.n }

  pub fn kind(&self) -> ComplexKind {
    match self.index.len() {
      0 => ComplexKind::Empty,
      1 => ComplexKind::VoidPoint,
      _ => ComplexKind::General,
    }
  }

  pub fn is_void(&self) -> bool { self.index.is_empty() }

  /// Total number of faces, including `∅` when present.
  pub fn len(&self) -> usize { self.index.len() }

  pub fn is_empty(&self) -> bool { self.index.is_empty() }

  pub fn contains(&self, f: Face) -> bool { self.index.contains_key(&f) }

  /// Coordinate of `f` among the faces of its dimension.
  pub fn index_of(&self, f: Face) -> Option<usize> { self.index.get(&f).copied() }

  /// `d - 1`; `-1` for `{∅}` and `None` for the void complex.
  pub fn dim(&self) -> Option<i32> { (!self.layers.is_empty()).then(|| self.layers.len() as i32 - 2) }

  /// Faces of dimension `j` (size `j + 1`) in lexicographic order.
  pub fn faces_of_dim(&self, j: i32) -> &[Face] {
    let k = j + 1;
    if k < 0 {
      return &[];
    }
    self.layers.get(k as usize).map(Vec::as_slice).unwrap_or(&[])
  }

  pub fn count(&self, j: i32) -> usize { self.faces_of_dim(j).len() }

  /// All faces in graded lexicographic order.
  pub fn faces(&self) -> impl Iterator<Item = Face> + '_ { self.layers.iter().flatten().copied() }

  /// Inclusion-maximal faces in graded lexicographic order.
  pub fn facets(&self) -> Vec<Face> {
    self.faces().filter(|f| !(1..=self.n).any(|v| !f.contains(v) && self.contains(f.with(v)))).collect()
  }

  pub fn f_vector(&self) -> FVector { FVector(self.layers.iter().skip(1).map(Vec::len).collect()) }

  pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool { self.faces().all(|f| other.contains(f)) }

  /// Whether each dimension's face set is a down-set of the componentwise
  /// partial order. Closure under the elementary moves `v -> v - 1` is
  /// equivalent, since those moves generate the order.
  pub fn is_shifted(&self) -> bool {
    self.faces().all(|t| t.vertices().all(|v| v == 1 || t.contains(v - 1) || self.contains(t.without(v).with(v - 1))))
  }
}

fn check_ground_set(n: usize) -> Result<()> {
  if n > Face::MAX_VERTEX {
    return Err(Error::GroundSetTooLarge(n));
  }
  Ok(())
}

fn check_face(f: Face, n: usize) -> Result<()> {
  if !f.fits(n) {
    let vertex = f.max_vertex().unwrap_or(0);
    return Err(Error::VertexOutOfRange { vertex, n });
  }
  Ok(())
}

impl PartialEq for SimplicialComplex {
  fn eq(&self, other: &Self) -> bool { self.n == other.n && self.layers == other.layers }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match self.kind() {
      ComplexKind::Empty => write!(f, "∅ on [{}]", self.n),
      ComplexKind::VoidPoint => write!(f, "{{∅}} on [{}]", self.n),
      ComplexKind::General => write!(f, "<{:?}> on [{}]", self.facets(), self.n),
    }
  }
}

/// Face counts `f_0, ..., f_{d-1}`; the empty face is not counted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FVector(pub Vec<usize>);

impl FVector {
  pub fn get(&self, j: usize) -> usize { self.0.get(j).copied().unwrap_or(0) }
}

/// A pair `L ⊆ K` on a common ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexPair {
  k: SimplicialComplex,
  l: SimplicialComplex,
}

impl ComplexPair {
  pub fn new(k: SimplicialComplex, l: SimplicialComplex) -> Result<Self> {
    if k.n != l.n {
      return Err(Error::GroundSetMismatch { left: k.n, right: l.n });
    }
    if let Some(f) = l.faces().find(|f| !k.contains(*f)) {
      return Err(Error::NotSubcomplex(f));
    }
    Ok(Self { k, l })
  }

  pub fn k(&self) -> &SimplicialComplex { &self.k }

  pub fn l(&self) -> &SimplicialComplex { &self.l }

  pub fn n(&self) -> usize { self.k.n }

  /// Faces of `K - L` of dimension `j`, lexicographically.
  pub fn difference(&self, j: i32) -> impl Iterator<Item = Face> + '_ {
    self.k.faces_of_dim(j).iter().copied().filter(|f| !self.l.contains(*f))
  }
}
