//! Simple undirected graphs with an optional rotation system.

use crate::{GraphError, Result};
use std::collections::{BTreeSet, VecDeque};

/// An undirected simple graph on vertices `0..n`. The optional rotation
/// system stores, for every vertex, the cyclic clockwise order of its
/// neighbors and encodes a combinatorial embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: BTreeSet<(usize, usize)>,
    rotation: Option<Vec<Vec<usize>>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: BTreeSet::new(),
            rotation: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds an edge, ignoring duplicates. Panics on loops or out-of-range
    /// endpoints; gadget constructions rely on this being loud.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        assert_ne!(u, v, "loops are not allowed");
        let key = (u.min(v), u.max(v));
        if self.edges.insert(key) {
            let pu = self.adj[u].binary_search(&v).unwrap_err();
            self.adj[u].insert(pu, v);
            let pv = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pv, u);
        }
    }

    pub(crate) fn rotation_mut(&mut self) -> &mut Vec<Vec<usize>> {
        self.rotation.as_mut().expect("no rotation installed")
    }

    /// Appends a fresh vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.adj.push(Vec::new());
        if let Some(rot) = &mut self.rotation {
            rot.push(Vec::new());
        }
        self.n - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn rotation(&self) -> Option<&Vec<Vec<usize>>> {
        self.rotation.as_ref()
    }

    /// Installs a rotation system after validating that every vertex lists
    /// exactly its neighbors, each once.
    pub fn set_rotation(&mut self, rot: Vec<Vec<usize>>) -> Result<()> {
        if rot.len() != self.n {
            return Err(GraphError::InvalidRotation(format!(
                "rotation has {} entries, graph has {} vertices",
                rot.len(),
                self.n
            )));
        }
        for (v, order) in rot.iter().enumerate() {
            let mut seen: BTreeSet<usize> = BTreeSet::new();
            for &u in order {
                if !self.has_edge(v, u) {
                    return Err(GraphError::InvalidRotation(format!(
                        "vertex {v} lists non-neighbor {u}"
                    )));
                }
                if !seen.insert(u) {
                    return Err(GraphError::InvalidRotation(format!(
                        "vertex {v} lists neighbor {u} twice"
                    )));
                }
            }
            if seen.len() != self.degree(v) {
                return Err(GraphError::InvalidRotation(format!(
                    "vertex {v} lists {} neighbors, has degree {}",
                    seen.len(),
                    self.degree(v)
                )));
            }
        }
        self.rotation = Some(rot);
        Ok(())
    }

    pub fn clear_rotation(&mut self) {
        self.rotation = None;
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        // A graph is a forest iff m = n - cc.
        self.edge_count() + self.component_count() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n.max(1)
    }

    /// Subgraph induced by `verts`; returns the graph and the map from new
    /// indices back to the original ones. The rotation, when present, is
    /// inherited by dropping missing neighbors.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut back = verts.to_vec();
        back.sort_unstable();
        back.dedup();
        let mut fwd = vec![usize::MAX; self.n];
        for (i, &v) in back.iter().enumerate() {
            fwd[v] = i;
        }
        let mut g = Graph::new(back.len());
        for &(u, v) in &self.edges {
            if fwd[u] != usize::MAX && fwd[v] != usize::MAX {
                g.add_edge(fwd[u], fwd[v]);
            }
        }
        if let Some(rot) = &self.rotation {
            let newrot: Vec<Vec<usize>> = back
                .iter()
                .map(|&v| {
                    rot[v]
                        .iter()
                        .filter(|&&u| fwd[u] != usize::MAX)
                        .map(|&u| fwd[u])
                        .collect()
                })
                .collect();
            g.rotation = Some(newrot);
        }
        (g, back)
    }

    /// Copy with the listed vertices removed.
    pub fn delete_vertices(&self, dead: &[usize]) -> (Graph, Vec<usize>) {
        let deadset: BTreeSet<usize> = dead.iter().copied().collect();
        let keep: Vec<usize> = (0..self.n).filter(|v| !deadset.contains(v)).collect();
        self.induced(&keep)
    }

    /// Copy without the given edge (rotation adjusted).
    pub fn delete_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        let key = (u.min(v), u.max(v));
        if g.edges.remove(&key) {
            g.adj[u].retain(|&x| x != v);
            g.adj[v].retain(|&x| x != u);
            if let Some(rot) = &mut g.rotation {
                rot[u].retain(|&x| x != v);
                rot[v].retain(|&x| x != u);
            }
        }
        g
    }

    /// Disjoint union; returns the offset applied to `other`'s vertices.
    /// Keeps rotations only if both sides carry one.
    pub fn disjoint_union(&mut self, other: &Graph) -> usize {
        let off = self.n;
        self.n += other.n;
        self.adj
            .extend(other.adj.iter().map(|ns| ns.iter().map(|&u| u + off).collect()));
        for &(u, v) in &other.edges {
            self.edges.insert((u + off, v + off));
        }
        self.rotation = match (self.rotation.take(), &other.rotation) {
            (Some(mut r1), Some(r2)) => {
                r1.extend(r2.iter().map(|ns| ns.iter().map(|&u| u + off).collect::<Vec<_>>()));
                Some(r1)
            }
            _ => None,
        };
        off
    }

    /// Checks the simplicity invariants (adjacency lists consistent with the
    /// edge set, no loops). Used by tests and generators.
    pub fn validate(&self) -> Result<()> {
        for &(u, v) in &self.edges {
            if u == v {
                return Err(GraphError::NotSimple(format!("loop at {u}")));
            }
            if u >= self.n || v >= self.n {
                return Err(GraphError::NotSimple(format!("edge ({u},{v}) out of range")));
            }
        }
        for v in 0..self.n {
            let mut sorted = self.adj[v].clone();
            sorted.sort_unstable();
            let before = sorted.len();
            sorted.dedup();
            if sorted.len() != before {
                return Err(GraphError::NotSimple(format!("duplicate entries at {v}")));
            }
            for &u in &sorted {
                if !self.has_edge(u, v) {
                    return Err(GraphError::NotSimple(format!(
                        "adjacency ({v},{u}) missing from edge set"
                    )));
                }
            }
        }
        if self.rotation.is_some() {
            let rot = self.rotation.clone().unwrap();
            let mut probe = self.clone();
            probe.set_rotation(rot)?;
        }
        Ok(())
    }

    /// Traces the faces of the rotation system. Each face is returned as the
    /// sequence of darts (u, v) on its boundary. Every dart lies on exactly
    /// one face.
    pub fn trace_faces(&self) -> Result<Vec<Vec<(usize, usize)>>> {
        let rot = self.rotation.as_ref().ok_or(GraphError::MissingRotation)?;
        let mut pos = vec![std::collections::HashMap::new(); self.n];
        for v in 0..self.n {
            for (i, &u) in rot[v].iter().enumerate() {
                pos[v].insert(u, i);
            }
        }
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut faces = Vec::new();
        for &(a, b) in &self.edges {
            for &(u0, v0) in &[(a, b), (b, a)] {
                if seen.contains(&(u0, v0)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut u, mut v) = (u0, v0);
                loop {
                    face.push((u, v));
                    seen.insert((u, v));
                    // Next dart: rotate clockwise at v past the reverse dart.
                    let i = pos[v][&u];
                    let w = rot[v][(i + 1) % rot[v].len()];
                    u = v;
                    v = w;
                    if (u, v) == (u0, v0) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        Ok(faces)
    }

    /// Euler check for a connected graph with a rotation system: genus zero
    /// iff V - E + F = 2.
    pub fn check_genus_zero(&self) -> Result<bool> {
        if self.rotation.is_none() {
            return Err(GraphError::MissingRotation);
        }
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let f = self.trace_faces()?.len();
        Ok(self.n + f == self.edge_count() + 2)
    }

    /// BFS distances from `s` (usize::MAX when unreachable).
    pub fn bfs_dist(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}

/// Small named graphs used all over the test suites.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn basic_invariants() {
        let g = cycle(5);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.max_degree(), 2);
        assert!(g.is_connected());
        assert!(!g.is_forest());
        g.validate().unwrap();
    }

    #[test]
    fn duplicate_edges_ignored() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn faces_of_planar_cycle() {
        let mut g = cycle(6);
        let rot: Vec<Vec<usize>> = (0..6).map(|v| g.neighbors(v).to_vec()).collect();
        g.set_rotation(rot).unwrap();
        let faces = g.trace_faces().unwrap();
        assert_eq!(faces.len(), 2);
        assert!(g.check_genus_zero().unwrap());
    }

    #[test]
    fn k4_planar_rotation() {
        // Outer triangle 0-1-2 with 3 in the center.
        let mut g = complete(4);
        g.set_rotation(vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
        ])
        .unwrap();
        assert!(g.check_genus_zero().unwrap());
    }

    #[test]
    fn k5_never_genus_zero() {
        let mut g = complete(5);
        let rot: Vec<Vec<usize>> = (0..5).map(|v| g.neighbors(v).to_vec()).collect();
        g.set_rotation(rot).unwrap();
        assert!(!g.check_genus_zero().unwrap());
    }

    #[test]
    fn missing_rotation_is_an_error() {
        let g = complete(4);
        assert!(matches!(
            g.check_genus_zero(),
            Err(GraphError::MissingRotation)
        ));
    }
}
