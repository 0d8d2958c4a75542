use thiserror::Error;

use crate::face::Face;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
  #[error("faces {left} and {right} have different sizes")]
  SizeMismatch { left: Face, right: Face },

  #[error("vertex {vertex} is outside the ground set [1, {n}]")]
  VertexOutOfRange { vertex: usize, n: usize },

  #[error("ground set of size {0} exceeds the supported maximum of {max}", max = Face::MAX_VERTEX)]
  GroundSetTooLarge(usize),

  #[error("face {face} is present but its subset {missing} is not")]
  NotDownwardClosed { face: Face, missing: Face },

  #[error("complexes live on different ground sets ({left} vs {right})")]
  GroundSetMismatch { left: usize, right: usize },

  #[error("face {0} of the subcomplex is not a face of the ambient complex")]
  NotSubcomplex(Face),

  #[error("not a near-cone with apex {apex}: replacing {vertex} in {face} by the apex leaves the complex")]
  NotNearCone { apex: usize, face: Face, vertex: usize },

  #[error("complex is not shifted")]
  NotShifted,

  #[error("ambient dimensions differ ({left} vs {right})")]
  AmbientMismatch { left: usize, right: usize },

  #[error("matrix shape {rows}x{cols} does not fit a map from dimension {domain} to {codomain}")]
  ShapeMismatch { rows: usize, cols: usize, domain: usize, codomain: usize },

  #[error("subspace is not contained in the ambient subspace of the quotient")]
  NotContained,

  #[error("{0} is not a supported prime modulus")]
  InvalidPrime(u64),

  #[error("generic matrix of size {have} cannot shift a complex on {need} vertices")]
  GenericMatrixTooSmall { have: usize, need: usize },

  #[error("generic matrix has not passed genericity validation")]
  Unvalidated,

  #[error("genericity validation failed on all {attempts} attempts (last seed {last_seed})")]
  Genericity { attempts: usize, last_seed: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
