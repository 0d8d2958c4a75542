//! Arithmetic in `F_p` for a runtime prime `p < 2^63`.

use crate::error::{Error, Result};

/// The Mersenne prime `2^61 - 1`.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

/// A prime field. Elements are plain `u64` values in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
  p: u64,
}

impl Default for PrimeField {
  fn default() -> Self { Self { p: MERSENNE_61 } }
}

impl PrimeField {
  pub fn new(p: u64) -> Result<Self> {
    if p >= 1 << 63 || !is_prime(p) {
      return Err(Error::InvalidPrime(p));
    }
    Ok(Self { p })
  }

  pub fn modulus(self) -> u64 { self.p }

  pub fn reduce(self, x: u64) -> u64 { x % self.p }

  /// Canonical representative of a signed integer.
  pub fn from_i64(self, x: i64) -> u64 {
    let r = (x as i128).rem_euclid(self.p as i128);
    r as u64
  }

  #[inline]
  pub fn add(self, a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= self.p {
      s - self.p
    } else {
      s
    }
  }

  #[inline]
  pub fn sub(self, a: u64, b: u64) -> u64 {
    if a >= b {
      a - b
    } else {
      a + self.p - b
    }
  }

  #[inline]
  pub fn neg(self, a: u64) -> u64 {
    if a == 0 {
      0
    } else {
      self.p - a
    }
  }

  #[inline]
  pub fn mul(self, a: u64, b: u64) -> u64 {
    let prod = a as u128 * b as u128;
    if self.p == MERSENNE_61 {
      // 2^61 ≡ 1
      let lo = (prod as u64) & MERSENNE_61;
      let hi = (prod >> 61) as u64;
      let s = lo + hi;
      if s >= MERSENNE_61 {
        s - MERSENNE_61
      } else {
        s
      }
    } else {
      (prod % self.p as u128) as u64
    }
  }

  /// `a - c * b`, the row-operation kernel.
  #[inline]
  pub fn sub_mul(self, a: u64, c: u64, b: u64) -> u64 { self.sub(a, self.mul(c, b)) }

  pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1 % self.p;
    while exp > 0 {
      if exp & 1 == 1 {
        acc = self.mul(acc, base);
      }
      base = self.mul(base, base);
      exp >>= 1;
    }
    acc
  }

  /// Inverse by Fermat's little theorem. Panics on zero.
  pub fn inv(self, a: u64) -> u64 {
    assert!(a != 0, "inverse of zero in F_{}", self.p);
    self.pow(a, self.p - 2)
  }

  /// Inverse by the extended Euclidean algorithm; `None` for zero.
  pub fn inv_euclid(self, a: u64) -> Option<u64> {
    if a == 0 {
      return None;
    }
    let (mut r0, mut r1) = (self.p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
      let q = r0 / r1;
      (r0, r1) = (r1, r0 - q * r1);
      (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(self.p as i128) as u64)
  }

  pub fn sign(self, s: i8) -> u64 {
    match s {
      0 => 0,
      s if s > 0 => 1,
      _ => self.neg(1),
    }
  }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
  if n < 2 {
    return false;
  }
  const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
  for p in SMALL {
    if n % p == 0 {
      return n == p;
    }
  }
  let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
  let powmod = |mut b: u64, mut e: u64| {
    let mut acc = 1u64;
    while e > 0 {
      if e & 1 == 1 {
        acc = mulmod(acc, b);
      }
      b = mulmod(b, b);
      e >>= 1;
    }
    acc
  };
  let s = (n - 1).trailing_zeros();
  let d = (n - 1) >> s;
  'witness: for a in SMALL {
    let mut x = powmod(a, d);
    if x == 1 || x == n - 1 {
      continue;
    }
    for _ in 1..s {
      x = mulmod(x, x);
      if x == n - 1 {
        continue 'witness;
      }
    }
    return false;
  }
  true
}
