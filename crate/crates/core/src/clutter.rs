//! Clutters (Sperner families) and their correspondence with square-free
//! monomial sets.

use crate::error::Error;
use crate::monomial::{Monomial, MonomialSet};

/// A uniform clutter: a vertex set together with edges of a common
/// cardinality, none contained in another (automatic for distinct uniform
/// edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clutter {
    vertices: Vec<usize>,
    edges: Vec<Vec<usize>>,
}

impl Clutter {
    pub fn new(mut vertices: Vec<usize>, mut edges: Vec<Vec<usize>>) -> Result<Self, Error> {
        vertices.sort_unstable();
        vertices.dedup();
        for e in &mut edges {
            e.sort_unstable();
            e.dedup();
        }
        if let Some(size) = edges.first().map(Vec::len) {
            if let Some(e) = edges.iter().find(|e| e.len() != size) {
                return Err(Error::IllFormed(format!(
                    "clutter is not uniform: edge {e:?} has size {}, expected {size}",
                    e.len()
                )));
            }
        }
        for e in &edges {
            if let Some(v) = e.iter().find(|v| !vertices.contains(v)) {
                return Err(Error::IllFormed(format!(
                    "edge {e:?} uses vertex {v} outside the vertex set"
                )));
            }
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::IllFormed("duplicate edge in clutter".into()));
        }
        Ok(Clutter { vertices, edges })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Common edge cardinality, or 0 for an edgeless clutter.
    pub fn edge_size(&self) -> usize {
        self.edges.first().map_or(0, Vec::len)
    }
}

impl MonomialSet {
    /// The clutter whose edges are the variable supports of the members.
    /// Requires a square-free set; the diagnostic names the offending
    /// variable otherwise.
    pub fn to_clutter(&self) -> Result<Clutter, Error> {
        for m in self.members() {
            for v in 1..=self.n() {
                let e = m.exponent(v);
                if e > 1 {
                    return Err(Error::NotSquareFree {
                        variable: v,
                        monomial: m.to_string(),
                        exponent: e,
                    });
                }
            }
        }
        let vertices = (1..=self.n()).collect();
        let edges = self.members().iter().map(Monomial::support).collect();
        Clutter::new(vertices, edges)
    }

    /// Inverse of [`MonomialSet::to_clutter`]: requires vertices `1..=n` and
    /// exactly `n` edges.
    pub fn from_clutter(clutter: &Clutter) -> Result<Self, Error> {
        let n = clutter.vertices().len();
        if clutter.vertices() != (1..=n).collect::<Vec<_>>() {
            return Err(Error::IllFormed(format!(
                "expected vertex set 1..={n}, got {:?}",
                clutter.vertices()
            )));
        }
        if clutter.edges().len() != n {
            return Err(Error::IllFormed(format!(
                "expected {n} edges to match {n} vertices, got {}",
                clutter.edges().len()
            )));
        }
        let members = clutter
            .edges()
            .iter()
            .map(|e| Monomial::square_free(n, e))
            .collect();
        MonomialSet::new(n, members)
    }
}
