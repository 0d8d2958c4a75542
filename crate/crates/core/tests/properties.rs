use algshift_core::complex::{ComplexPair, SimplicialComplex};
use algshift_core::exterior::{betti_via_delta, coboundary, generic_row, FaceCoordinates, GenericMatrix, GenericRows};
use algshift_core::face::Face;
use algshift_core::field::PrimeField;
use algshift_core::homology::reduced_betti;
use algshift_core::nearcone::betti_near_cone;
use algshift_core::shifting::{shift_pair, shift_seeded, ShiftConfig};
use algshift_core::verify::verify_main;
use proptest::prelude::*;

fn complex(n: usize, max_size: usize) -> impl Strategy<Value = SimplicialComplex> {
  let facet = proptest::collection::btree_set(1..=n, 1..=max_size);
  proptest::collection::vec(facet, 0..6).prop_map(move |fs| {
    SimplicialComplex::from_facets(n, fs.into_iter().map(|f| Face::new(f).unwrap())).unwrap()
  })
}

fn pair(n: usize, max_size: usize) -> impl Strategy<Value = ComplexPair> {
  (complex(n, max_size), any::<u64>()).prop_map(|(k, bits)| {
    let kept: Vec<Face> = k.faces().enumerate().filter(|(i, _)| bits >> (i % 64) & 1 == 1).map(|(_, f)| f).collect();
    let l = if k.is_void() { k.clone() } else { SimplicialComplex::from_facets(k.n(), kept).unwrap() };
    ComplexPair::new(k, l).unwrap()
  })
}

proptest! {
  #![proptest_config(ProptestConfig::with_cases(48))]

  #[test]
  fn coboundary_squares_to_zero(k in complex(6, 4), seed in any::<u64>()) {
    let alpha = GenericMatrix::sample(PrimeField::default(), 6, seed);
    let d = coboundary(&alpha, FaceCoordinates::new(&k)).unwrap();
    prop_assert!(d.squares_to_zero());
  }

  #[test]
  fn betti_routes_agree(k in complex(6, 4), seed in any::<u64>()) {
    let field = PrimeField::default();
    let r = shift_seeded(&k, &ShiftConfig::with_seed(seed)).unwrap();
    let homology = reduced_betti(&k, field);
    prop_assert_eq!(&betti_via_delta(&r.alpha, FaceCoordinates::new(&k)).unwrap(), &homology);
    prop_assert_eq!(&reduced_betti(&r.delta, field), &homology);
    if !r.delta.is_void() {
      prop_assert_eq!(&betti_near_cone(&r.delta, 1).unwrap(), &homology);
    }
    prop_assert!(r.delta.is_shifted());
    prop_assert_eq!(r.delta.f_vector(), k.f_vector());
  }

  #[test]
  fn euler_poincare(k in complex(7, 4)) {
    let b = reduced_betti(&k, PrimeField::default());
    let chi: i64 = (-1..=k.dim().unwrap_or(-1)).map(|j| (-1i64).pow(j.unsigned_abs()) * k.count(j) as i64).sum();
    let beta: i64 = b.nonzero().map(|(j, v)| (-1i64).pow(j.unsigned_abs()) * v as i64).sum();
    prop_assert_eq!(chi, beta);
  }

  #[test]
  fn generic_rows_are_alternating_multilinear(seed in any::<u64>(), a in 1usize..=5, b in 1usize..=5) {
    let field = PrimeField::default();
    let k = SimplicialComplex::simplex(5).unwrap();
    let coords = FaceCoordinates::new(&k);
    let alpha = GenericMatrix::sample(field, 5, seed);
    let rows = GenericRows::compute(&alpha, coords).unwrap();
    let s = Face::of(&[a]).union(Face::of(&[b]));
    let direct = generic_row(&alpha, s, coords);
    if a == b {
      prop_assert_eq!(direct.coords, rows.row(s).unwrap().to_vec());
    } else {
      // f_a ∧ f_b on ē_{uv} is the 2×2 minor of rows a, b and columns u, v
      let (lo, hi) = (a.min(b), a.max(b));
      for (i, t) in k.faces_of_dim(1).iter().enumerate() {
        let v = t.to_vec();
        let minor = field.sub(
          field.mul(alpha.entry(lo, v[0]), alpha.entry(hi, v[1])),
          field.mul(alpha.entry(lo, v[1]), alpha.entry(hi, v[0])),
        );
        prop_assert_eq!(direct.coords[i], minor);
        prop_assert_eq!(rows.row(s).unwrap()[i], minor);
      }
    }
  }

  #[test]
  fn verification_passes_on_random_pairs(p in pair(6, 4), seed in any::<u64>()) {
    let config = ShiftConfig::with_seed(seed);
    let shifted = shift_pair(&p, &config).unwrap().shifted_pair().unwrap();
    prop_assert!(shifted.l().is_subcomplex_of(shifted.k()));
    let r = verify_main(&p, &config).unwrap();
    prop_assert!(r.pass(), "{:?}", r.failures);
  }
}

#[test]
fn dense_pair_on_ten_vertices() {
  let k = SimplicialComplex::from_facets(
    10,
    [&[1, 2, 3, 4, 5][..], &[2, 4, 6, 8, 10], &[1, 3, 5, 7, 9], &[5, 6, 7, 8, 9], &[1, 6, 8, 9, 10], &[2, 3, 7, 9, 10]]
      .iter()
      .map(|f| Face::of(f)),
  )
  .unwrap();
  let l = SimplicialComplex::from_facets(10, [&[1, 2, 3, 4][..], &[2, 4, 6, 8], &[5, 6, 7, 9], &[3, 7, 9, 10]].iter().map(|f| Face::of(f))).unwrap();
  let start = std::time::Instant::now();
  let r = verify_main(&ComplexPair::new(k, l).unwrap(), &ShiftConfig::default()).unwrap();
  assert!(r.pass(), "{:?}", r.failures);
  eprintln!("n=10 verify: {:?}", start.elapsed());
}
