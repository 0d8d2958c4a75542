//! Seeded random complexes and pairs.

use algshift_core::{ComplexPair, Face, SimplicialComplex};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `K` is the closure of `facet_count` random subsets of `[n]` with at most
/// `dim_max + 1` vertices; `L` is the closure of a random subfamily of
/// `K`'s faces. With no facets both are `{∅}` if `void_point`, else `∅`.
pub fn random_pair(n: usize, dim_max: usize, facet_count: usize, seed: u64, void_point: bool) -> algshift_core::Result<ComplexPair> {
  let mut rng = ChaCha8Rng::seed_from_u64(seed);
  if facet_count == 0 {
    let c = if void_point { SimplicialComplex::void_point(n)? } else { SimplicialComplex::empty(n)? };
    return ComplexPair::new(c.clone(), c);
  }
  let max_size = (dim_max + 1).min(n).max(1);
  let facets: Vec<Face> = (0..facet_count)
    .map(|_| {
      let size = rng.gen_range(1..=max_size);
      Face::new(sample(&mut rng, n, size).into_iter().map(|v| v + 1)).expect("vertex within ground set")
    })
    .collect();
  let k = SimplicialComplex::from_facets(n, facets)?;
  let kept: Vec<Face> = k.faces().filter(|_| rng.gen_bool(0.5)).collect();
  let l = SimplicialComplex::from_facets(n, kept)?;
  ComplexPair::new(k, l)
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn no_facets() {
    let p = random_pair(4, 2, 0, 1, false).unwrap();
    assert!(p.k().is_void() && p.l().is_void());
    let p = random_pair(4, 2, 0, 1, true).unwrap();
    assert_eq!(p.k(), &SimplicialComplex::void_point(4).unwrap());
    assert_eq!(p.l(), p.k());
  }

  #[test]
  fn deterministic() {
    assert_eq!(random_pair(8, 4, 6, 99, false).unwrap(), random_pair(8, 4, 6, 99, false).unwrap());
  }
}
