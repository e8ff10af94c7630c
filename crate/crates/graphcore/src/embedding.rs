//! Partial subgraph isomorphisms and their validation.

use crate::{Graph, GraphError, Result};

/// A partial injective map from the vertices of a pattern graph H into a
/// host graph G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<Option<usize>>,
}

impl Embedding {
    pub fn empty(h_size: usize) -> Self {
        Embedding {
            map: vec![None; h_size],
        }
    }

    pub fn from_map(map: Vec<Option<usize>>) -> Self {
        Embedding { map }
    }

    pub fn full(map: Vec<usize>) -> Self {
        Embedding {
            map: map.into_iter().map(Some).collect(),
        }
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.map.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: usize, image: usize) {
        self.map[v] = Some(image);
    }

    pub fn defined(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(v, img)| img.map(|w| (v, w)))
    }

    pub fn is_total(&self) -> bool {
        self.map.iter().all(|m| m.is_some())
    }

    /// Injectivity plus edge preservation on defined pairs.
    pub fn validate(&self, h: &Graph, g: &Graph) -> Result<()> {
        if self.map.len() != h.vertex_count() {
            return Err(GraphError::Other(format!(
                "embedding domain has {} slots, H has {} vertices",
                self.map.len(),
                h.vertex_count()
            )));
        }
        let mut used = std::collections::BTreeSet::new();
        for (v, w) in self.defined() {
            if w >= g.vertex_count() {
                return Err(GraphError::Other(format!("image {w} outside G")));
            }
            if !used.insert(w) {
                return Err(GraphError::Other(format!("image {w} used twice")));
            }
            let _ = v;
        }
        for (u, v) in h.edges() {
            if let (Some(iu), Some(iv)) = (self.get(u), self.get(v)) {
                if !g.has_edge(iu, iv) {
                    return Err(GraphError::Other(format!(
                        "H-edge ({u},{v}) maps to non-edge ({iu},{iv})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// A partial subgraph isomorphism respects boundary `B ⊆ V(G)` when
    /// every H-vertex mapped outside `B` has all its neighbors mapped.
    pub fn respects_boundary(&self, h: &Graph, boundary: &[usize]) -> bool {
        let bset: std::collections::BTreeSet<usize> = boundary.iter().copied().collect();
        for (v, w) in self.defined() {
            if !bset.contains(&w) && h.neighbors(v).iter().any(|&u| self.get(u).is_none()) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn validates_edge_preservation() {
        let h = path(3);
        let g = complete(3);
        let emb = Embedding::full(vec![0, 1, 2]);
        emb.validate(&h, &g).unwrap();

        let h2 = complete(3);
        let g2 = path(3);
        let bad = Embedding::full(vec![0, 1, 2]);
        assert!(bad.validate(&h2, &g2).is_err());
    }

    #[test]
    fn rejects_non_injective() {
        let h = Graph::new(2);
        let g = Graph::new(1);
        let emb = Embedding::from_map(vec![Some(0), Some(0)]);
        assert!(emb.validate(&h, &g).is_err());
    }

    #[test]
    fn boundary_semantics() {
        let h = path(3);
        let g = path(5);
        // Map only the middle vertex of h; its image has unmapped neighbors,
        // so it must lie on the boundary.
        let emb = Embedding::from_map(vec![None, Some(2), None]);
        assert!(emb.respects_boundary(&h, &[2]));
        assert!(!emb.respects_boundary(&h, &[4]));
    }

    use crate::Graph;
}
