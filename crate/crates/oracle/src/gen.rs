//! Seeded random-instance generators shared by the test suites.

use graphcore::Graph;
use rand::prelude::*;
use rand_chacha::ChaCha20Rng;

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Random simple graph with exactly `m` edges when possible.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut all: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            all.push((u, v));
        }
    }
    all.shuffle(&mut r);
    Graph::from_edges(n, &all[..m.min(all.len())])
}

/// Random labeled tree from a Prüfer-like attachment process.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = r.gen_range(0..v);
        g.add_edge(u, v);
    }
    g
}

/// Random forest: a random tree with a random subset of edges removed.
pub fn random_forest(n: usize, drop: usize, seed: u64) -> Graph {
    let t = random_tree(n, seed);
    let mut r = rng(seed ^ 0x5eed);
    let mut edges: Vec<(usize, usize)> = t.edges().collect();
    edges.shuffle(&mut r);
    let keep = edges.len().saturating_sub(drop);
    Graph::from_edges(n, &edges[..keep])
}

/// Random graph of maximum degree at most `dmax`.
pub fn random_bounded_degree(n: usize, m: usize, dmax: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut g = Graph::new(n);
    let mut tries = 0;
    while g.edge_count() < m && tries < 20 * m.max(1) {
        tries += 1;
        let u = r.gen_range(0..n);
        let v = r.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < dmax && g.degree(v) < dmax {
            g.add_edge(u, v);
        }
    }
    g
}

/// A connected random subgraph of `g` on `k` vertices (vertex indices are
/// relabeled to 0..k), or None if `g` has no connected k-subgraph reachable
/// from the sampled start.
pub fn random_connected_subgraph(g: &Graph, k: usize, seed: u64) -> Option<Graph> {
    let mut r = rng(seed);
    let n = g.vertex_count();
    if k == 0 || k > n {
        return None;
    }
    let start = r.gen_range(0..n);
    let mut chosen = vec![start];
    let mut frontier: Vec<usize> = g.neighbors(start).to_vec();
    while chosen.len() < k {
        if frontier.is_empty() {
            return None;
        }
        let i = r.gen_range(0..frontier.len());
        let v = frontier.swap_remove(i);
        if chosen.contains(&v) {
            continue;
        }
        chosen.push(v);
        frontier.extend(g.neighbors(v).iter().filter(|&&w| !chosen.contains(&w)));
    }
    let (sub, _) = g.induced(&chosen);
    Some(sub)
}
