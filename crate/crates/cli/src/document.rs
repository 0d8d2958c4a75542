//! JSON encoding of complexes: `{"n": 3, "facets": [[1], [2, 3]]}`.
//!
//! `"facets": []` is the void complex `∅` and `"facets": [[]]` is `{∅}`.

use std::path::Path;

use algshift_core::{Face, SimplicialComplex};
use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
  pub n: usize,
  pub facets: Vec<Vec<usize>>,
}

impl ComplexDocument {
  pub fn from_complex(c: &SimplicialComplex) -> Self {
    let mut facets: Vec<Vec<usize>> = c.facets().into_iter().map(|f| f.to_vec()).collect();
    facets.sort();
    Self { n: c.n(), facets }
  }

  pub fn to_complex(&self) -> anyhow::Result<SimplicialComplex> {
    let mut faces = Vec::with_capacity(self.facets.len());
    for facet in &self.facets {
      if facet.windows(2).any(|w| w[0] >= w[1]) {
        bail!("facet {facet:?} is not a strictly increasing vertex list");
      }
      faces.push(Face::new(facet.iter().copied())?);
    }
    Ok(SimplicialComplex::from_facets(self.n, faces)?)
  }

  pub fn parse(text: &str) -> anyhow::Result<Self> { Ok(serde_json::from_str(text)?) }

  pub fn read(path: &Path) -> anyhow::Result<Self> {
    let text = if path.as_os_str() == "-" {
      std::io::read_to_string(std::io::stdin())?
    } else {
      std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Self::parse(&text).with_context(|| format!("parsing {}", path.display()))
  }
}
