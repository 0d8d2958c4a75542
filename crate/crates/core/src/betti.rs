use std::collections::BTreeMap;
use std::fmt;

/// Reduced Betti numbers indexed by dimension `j >= -1`. Only non-zero
/// entries are stored, so two tables are equal exactly when they agree in
/// every degree.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct BettiTable(BTreeMap<i32, usize>);

impl BettiTable {
  pub fn new() -> Self { Self::default() }

  pub fn get(&self, j: i32) -> usize { self.0.get(&j).copied().unwrap_or(0) }

  pub fn set(&mut self, j: i32, value: usize) {
    if value == 0 {
      self.0.remove(&j);
    } else {
      self.0.insert(j, value);
    }
  }

  /// Non-zero entries in increasing degree.
  pub fn nonzero(&self) -> impl Iterator<Item = (i32, usize)> + '_ { self.0.iter().map(|(&j, &b)| (j, b)) }

  pub fn is_zero(&self) -> bool { self.0.is_empty() }

  /// Highest degree carrying a non-zero entry.
  pub fn top(&self) -> Option<i32> { self.0.keys().next_back().copied() }

  /// `self[j] <= other[j]` in every degree.
  pub fn dominated_by(&self, other: &BettiTable) -> bool { self.nonzero().all(|(j, b)| b <= other.get(j)) }
}

impl FromIterator<(i32, usize)> for BettiTable {
  fn from_iter<I: IntoIterator<Item = (i32, usize)>>(iter: I) -> Self {
    let mut t = BettiTable::new();
    for (j, b) in iter {
      t.set(j, b);
    }
    t
  }
}

impl fmt::Debug for BettiTable {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { f.debug_map().entries(self.0.iter()).finish() }
}
