//! Brute-force reference solvers. Deliberately independent of the clever
//! algorithms they are used to check; the subgraph isomorphism search is a
//! complete backtracking solver with degree and neighborhood pruning strong
//! enough to handle the generated hardness instances.

pub mod gen;

use graphcore::{Embedding, Graph};

/// Result of a budgeted exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleAnswer {
    Yes(Embedding),
    No,
    /// The node budget ran out before the search space was exhausted.
    Indeterminate,
}

impl OracleAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, OracleAnswer::Yes(_))
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            OracleAnswer::Yes(_) => Some(true),
            OracleAnswer::No => Some(false),
            OracleAnswer::Indeterminate => None,
        }
    }
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Cheap compatibility: degree dominance plus neighbor-degree multiset
/// dominance (sorted descending, position-wise).
fn compat0(h: &Graph, g: &Graph, hdegs: &[Vec<usize>], gdegs: &[Vec<usize>], u: usize, v: usize) -> bool {
    if h.degree(u) > g.degree(v) {
        return false;
    }
    // hdegs[u] and gdegs[v] are sorted descending; greedily dominate.
    let hu = &hdegs[u];
    let gv = &gdegs[v];
    let mut j = 0;
    for &need in hu {
        while j < gv.len() && gv[j] < need {
            j += 1;
        }
        if j == gv.len() {
            return false;
        }
        j += 1;
    }
    true
}

/// One-ply matching consistency: the H-neighbors of `u` must be matchable
/// to distinct G-neighbors of `v` under compat0.
fn compat1(
    h: &Graph,
    g: &Graph,
    hdegs: &[Vec<usize>],
    gdegs: &[Vec<usize>],
    u: usize,
    v: usize,
) -> bool {
    if !compat0(h, g, hdegs, gdegs, u, v) {
        return false;
    }
    let hn = h.neighbors(u);
    let gn = g.neighbors(v);
    if hn.len() > gn.len() {
        return false;
    }
    // Kuhn matching on the small compatibility bipartite graph.
    let mut match_g: Vec<Option<usize>> = vec![None; gn.len()];
    fn augment(
        i: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_g: &mut [Option<usize>],
    ) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if match_g[j].is_none() || augment(match_g[j].unwrap(), adj, seen, match_g) {
                match_g[j] = Some(i);
                return true;
            }
        }
        false
    }
    let adj: Vec<Vec<usize>> = hn
        .iter()
        .map(|&hu| {
            gn.iter()
                .enumerate()
                .filter(|&(_, &gv)| compat0(h, g, hdegs, gdegs, hu, gv))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    for i in 0..hn.len() {
        let mut seen = vec![false; gn.len()];
        if !augment(i, &adj, &mut seen, &mut match_g) {
            return false;
        }
    }
    true
}

struct Search<'a> {
    h: &'a Graph,
    g: &'a Graph,
    hdegs: Vec<Vec<usize>>,
    gdegs: Vec<Vec<usize>>,
    /// H vertices in assignment order; each non-root is adjacent to an
    /// earlier vertex of the same component.
    order: Vec<usize>,
    /// For order[i] > component root: an H-neighbor appearing earlier.
    anchor: Vec<Option<usize>>,
    img: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
    /// Component sizes indexed like `roots`, for capacity pruning.
    comp_of: Vec<usize>,
    comp_sizes: Vec<usize>,
    gcomp_of: Vec<usize>,
    gcomp_free: Vec<usize>,
}

impl<'a> Search<'a> {
    fn run(&mut self) -> OracleAnswer {
        match self.place(0) {
            Some(true) => {
                let map = self.img.iter().map(|&v| Some(v)).collect::<Vec<_>>();
                OracleAnswer::Yes(Embedding::from_map(map))
            }
            Some(false) => OracleAnswer::No,
            None => OracleAnswer::Indeterminate,
        }
    }

    /// Some(true): found; Some(false): exhausted; None: out of budget.
    fn place(&mut self, idx: usize) -> Option<bool> {
        if idx == self.order.len() {
            return Some(true);
        }
        let u = self.order[idx];
        let candidates: Vec<usize> = match self.anchor[idx] {
            Some(p) => {
                let pv = self.img[p];
                self.g.neighbors(pv).to_vec()
            }
            None => (0..self.g.vertex_count()).collect(),
        };
        for v in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            if self.used[v] {
                continue;
            }
            // Capacity: the rest of u's component still needs room in v's
            // G-component.
            if self.anchor[idx].is_none() {
                let need = self.comp_sizes[self.comp_of[u]];
                if self.gcomp_free[self.gcomp_of[v]] < need {
                    continue;
                }
            }
            if !compat1(self.h, self.g, &self.hdegs, &self.gdegs, u, v) {
                continue;
            }
            // All previously assigned H-neighbors must map to G-neighbors.
            let ok = self.h.neighbors(u).iter().all(|&w| {
                self.img[w] == usize::MAX || self.g.has_edge(self.img[w], v)
            });
            if !ok {
                continue;
            }
            self.img[u] = v;
            self.used[v] = true;
            self.gcomp_free[self.gcomp_of[v]] -= 1;
            match self.place(idx + 1) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            self.gcomp_free[self.gcomp_of[v]] += 1;
            self.img[u] = usize::MAX;
            self.used[v] = false;
        }
        Some(false)
    }
}

/// Rarity score for root selection: prefer high degree and rare profiles.
fn root_score(h: &Graph, u: usize) -> (usize, usize) {
    (h.degree(u), h.neighbors(u).iter().map(|&w| h.degree(w)).sum())
}

/// Complete backtracking search for an injective edge-preserving map from
/// `h` into `g`, within a node budget.
pub fn subiso_bruteforce(h: &Graph, g: &Graph, budget: u64) -> OracleAnswer {
    let hn = h.vertex_count();
    let gn = g.vertex_count();
    if hn > gn || h.edge_count() > g.edge_count() || h.max_degree() > g.max_degree() {
        return OracleAnswer::No;
    }
    if hn == 0 {
        return OracleAnswer::Yes(Embedding::empty(0));
    }
    let sorted_desc = |g: &Graph, v: usize| {
        let mut d: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    };
    let hdegs: Vec<Vec<usize>> = (0..hn).map(|v| sorted_desc(h, v)).collect();
    let gdegs: Vec<Vec<usize>> = (0..gn).map(|v| sorted_desc(g, v)).collect();

    // Assignment order: components sorted by decreasing size; inside a
    // component, BFS from the most constrained root.
    let comps = h.components();
    let mut comp_of = vec![0usize; hn];
    let mut comp_sizes = Vec::new();
    for (ci, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = ci;
        }
        comp_sizes.push(c.len());
    }
    let gcomps = g.components();
    let mut gcomp_of = vec![0usize; gn];
    let mut gcomp_free = Vec::new();
    for (ci, c) in gcomps.iter().enumerate() {
        for &v in c {
            gcomp_of[v] = ci;
        }
        gcomp_free.push(c.len());
    }
    let mut comp_order: Vec<usize> = (0..comps.len()).collect();
    comp_order.sort_by_key(|&ci| std::cmp::Reverse(comps[ci].len()));
    let mut order = Vec::with_capacity(hn);
    let mut anchor = Vec::with_capacity(hn);
    for &ci in &comp_order {
        let comp = &comps[ci];
        let root = *comp
            .iter()
            .max_by_key(|&&v| root_score(h, v))
            .unwrap();
        // BFS, preferring high-degree vertices first at each step.
        let mut placed = vec![false; hn];
        let mut frontier = vec![root];
        placed[root] = true;
        order.push(root);
        anchor.push(None);
        while let Some(v) = frontier.pop() {
            let mut nbrs: Vec<usize> = h
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !placed[w])
                .collect();
            nbrs.sort_by_key(|&w| std::cmp::Reverse(root_score(h, w)));
            for w in nbrs {
                if placed[w] {
                    continue;
                }
                placed[w] = true;
                order.push(w);
                anchor.push(Some(v));
                frontier.push(w);
            }
        }
        // anchor refers to positions in img (H vertex ids); store H ids.
    }
    // Convert anchors from H ids (they already are H ids).
    let mut search = Search {
        h,
        g,
        hdegs,
        gdegs,
        order,
        anchor,
        img: vec![usize::MAX; hn],
        used: vec![false; gn],
        nodes: 0,
        budget,
        comp_of,
        comp_sizes,
        gcomp_of,
        gcomp_free,
    };
    let ans = search.run();
    if let OracleAnswer::Yes(emb) = &ans {
        emb.validate(h, g).expect("oracle produced invalid embedding");
    }
    ans
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcore::graph::named::*;

    #[test]
    fn path_into_triangle() {
        assert!(subiso_bruteforce(&path(3), &complete(3), 1_000).is_yes());
    }

    #[test]
    fn triangle_into_path_fails() {
        assert_eq!(
            subiso_bruteforce(&complete(3), &path(3), 1_000),
            OracleAnswer::No
        );
    }

    #[test]
    fn size_prunes_without_search() {
        assert_eq!(
            subiso_bruteforce(&path(5), &path(4), 1_000),
            OracleAnswer::No
        );
    }

    #[test]
    fn p4_into_star_fails() {
        assert_eq!(
            subiso_bruteforce(&path(4), &star(3), 10_000),
            OracleAnswer::No
        );
    }

    #[test]
    fn cycle_lengths_must_match() {
        assert_eq!(
            subiso_bruteforce(&cycle(3), &cycle(4), 10_000),
            OracleAnswer::No
        );
        assert!(subiso_bruteforce(&cycle(4), &complete(4), 10_000).is_yes());
    }

    #[test]
    fn metamorphic_relabel_invariance() {
        use rand::prelude::*;
        use rand_chacha::ChaCha20Rng;
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        for trial in 0..40 {
            let h = crate::gen::random_graph(5, 5, trial);
            let g = crate::gen::random_graph(7, 9, trial + 1000);
            let base = subiso_bruteforce(&h, &g, 1_000_000).is_yes();
            // Random relabeling of both sides.
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            let g2_edges: Vec<(usize, usize)> =
                g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
            let g2 = Graph::from_edges(7, &g2_edges);
            assert_eq!(base, subiso_bruteforce(&h, &g2, 1_000_000).is_yes());
            // Adding a G-edge is monotone.
            if base {
                let mut g3 = g.clone();
                'outer: for u in 0..7 {
                    for v in u + 1..7 {
                        if !g3.has_edge(u, v) {
                            g3.add_edge(u, v);
                            break 'outer;
                        }
                    }
                }
                assert!(subiso_bruteforce(&h, &g3, 1_000_000).is_yes());
            }
        }
    }
}
