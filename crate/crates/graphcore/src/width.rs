//! Treewidth and pathwidth: exact subset dynamic programming for small
//! graphs, min-fill elimination as the fallback upper bound.

use crate::treedec::TreeDecomposition;
use crate::Graph;

/// Exactness marker for width-style parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Exact(usize),
    Upper(usize),
}

impl Bound {
    pub fn value(&self) -> usize {
        match *self {
            Bound::Exact(v) | Bound::Upper(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Bound::Exact(_))
    }
}

/// Largest vertex count for which the exact subset DP is attempted.
pub const EXACT_WIDTH_LIMIT: usize = 14;

/// Number of vertices outside `s ∪ {v}` reachable from `v` through `s`.
/// This is the degree `v` would have if the vertices of `s` were eliminated
/// first.
fn eliminated_degree(g: &Graph, s: u32, v: usize) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = vec![v];
    seen[v] = true;
    let mut count = 0;
    while let Some(x) = stack.pop() {
        for &u in g.neighbors(x) {
            if seen[u] {
                continue;
            }
            seen[u] = true;
            if s >> u & 1 == 1 {
                stack.push(u);
            } else {
                count += 1;
            }
        }
    }
    count
}

/// Exact treewidth via the elimination-order DP, with the order recovered
/// for decomposition construction. Only for `n <= EXACT_WIDTH_LIMIT`.
pub fn treewidth_exact(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    assert!(n <= EXACT_WIDTH_LIMIT);
    if n == 0 {
        return (0, Vec::new());
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut dp = vec![u8::MAX; (full as usize) + 1];
    let mut choice = vec![u8::MAX; (full as usize) + 1];
    dp[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut who = u8::MAX;
        for v in 0..n {
            if s >> v & 1 == 0 {
                continue;
            }
            let rest = s & !(1 << v);
            let sub = dp[rest as usize];
            if sub == u8::MAX {
                continue;
            }
            let d = eliminated_degree(g, rest, v) as u8;
            let cost = sub.max(d);
            if cost < best {
                best = cost;
                who = v as u8;
            }
        }
        dp[s as usize] = best;
        choice[s as usize] = who;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    (dp[full as usize] as usize, order)
}

/// Exact pathwidth via the vertex-separation DP, with an optimal order.
pub fn pathwidth_exact(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    assert!(n <= EXACT_WIDTH_LIMIT);
    if n == 0 {
        return (0, Vec::new());
    }
    let full: u32 = (1u32 << n) - 1;
    // boundary(s) = vertices in s with a neighbor outside s.
    let boundary = |s: u32| -> u8 {
        let mut b = 0;
        for v in 0..n {
            if s >> v & 1 == 1 && g.neighbors(v).iter().any(|&u| s >> u & 1 == 0) {
                b += 1;
            }
        }
        b
    };
    let mut dp = vec![u8::MAX; (full as usize) + 1];
    let mut choice = vec![u8::MAX; (full as usize) + 1];
    dp[0] = 0;
    for s in 1..=full {
        let b = boundary(s);
        let mut best = u8::MAX;
        let mut who = u8::MAX;
        for v in 0..n {
            if s >> v & 1 == 0 {
                continue;
            }
            let sub = dp[(s & !(1 << v)) as usize];
            if sub < best {
                best = sub;
                who = v as u8;
            }
        }
        dp[s as usize] = best.max(b);
        choice[s as usize] = who;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    (dp[full as usize] as usize, order)
}

/// Min-fill elimination order; the classical treewidth upper-bound heuristic.
pub fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        let mut who = usize::MAX;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let nbrs: Vec<usize> = (0..n).filter(|&u| alive[u] && adj[v][u]).collect();
            let mut fill = 0;
            for i in 0..nbrs.len() {
                for j in i + 1..nbrs.len() {
                    if !adj[nbrs[i]][nbrs[j]] {
                        fill += 1;
                    }
                }
            }
            if fill < best {
                best = fill;
                who = v;
            }
        }
        let v = who;
        let nbrs: Vec<usize> = (0..n).filter(|&u| alive[u] && adj[v][u]).collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                adj[nbrs[i]][nbrs[j]] = true;
                adj[nbrs[j]][nbrs[i]] = true;
            }
        }
        alive[v] = false;
        order.push(v);
    }
    order
}

/// Builds a tree decomposition from an elimination order. The width equals
/// the maximum eliminated degree along the order.
pub fn decomposition_from_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.vertex_count();
    if n == 0 {
        return TreeDecomposition::single_bag(Vec::new());
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Fill graph: eliminate in order, connecting higher neighbors.
    let mut adj: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for (u, v) in g.edges() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    for &v in order {
        let higher: Vec<usize> = adj[v]
            .iter()
            .copied()
            .filter(|&u| position[u] > position[v])
            .collect();
        for i in 0..higher.len() {
            for j in i + 1..higher.len() {
                adj[higher[i]].insert(higher[j]);
                adj[higher[j]].insert(higher[i]);
            }
        }
        let mut bag = higher;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    // Bag i (for order[i]) hangs under the bag of its first-eliminated
    // higher fill-neighbor; the last bag is the root.
    let mut td = TreeDecomposition::new();
    let ids: Vec<usize> = bags.iter().map(|b| td.add_bag(b.clone())).collect();
    for (i, &v) in order.iter().enumerate() {
        let next = bags[i]
            .iter()
            .filter(|&&u| u != v)
            .min_by_key(|&&u| position[u]);
        match next {
            Some(&u) => td.set_parent(ids[i], ids[position[u]]),
            None => {
                if i + 1 < order.len() {
                    td.set_parent(ids[i], ids[i + 1]);
                }
            }
        }
    }
    td.set_root(ids[n - 1]);
    td
}

/// Treewidth with a matching decomposition; exact when `n` is small.
pub fn treewidth_with_decomposition(g: &Graph) -> (Bound, TreeDecomposition) {
    if g.vertex_count() <= EXACT_WIDTH_LIMIT {
        let (w, order) = treewidth_exact(g);
        let td = decomposition_from_order(g, &order);
        debug_assert_eq!(td.width(), w);
        (Bound::Exact(w), td)
    } else {
        let order = min_fill_order(g);
        let td = decomposition_from_order(g, &order);
        (Bound::Upper(td.width()), td)
    }
}

/// Pathwidth; exact when `n` is small, otherwise bounded by the min-fill
/// treewidth decomposition turned into a path in order of elimination.
pub fn pathwidth(g: &Graph) -> Bound {
    if g.vertex_count() <= EXACT_WIDTH_LIMIT {
        Bound::Exact(pathwidth_exact(g).0)
    } else {
        // Crude but safe: bags of a path decomposition read off the
        // min-fill order boundary.
        let order = min_fill_order(g);
        let n = g.vertex_count();
        let mut in_prefix = vec![false; n];
        let mut worst = 0;
        for &v in &order {
            in_prefix[v] = true;
            let b = (0..n)
                .filter(|&x| in_prefix[x] && g.neighbors(x).iter().any(|&u| !in_prefix[u]))
                .count();
            worst = worst.max(b);
        }
        Bound::Upper(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn widths_of_named_graphs() {
        assert_eq!(treewidth_exact(&path(4)).0, 1);
        assert_eq!(treewidth_exact(&cycle(5)).0, 2);
        assert_eq!(treewidth_exact(&complete(4)).0, 3);
        assert_eq!(treewidth_exact(&complete_bipartite(2, 3)).0, 2);
        assert_eq!(pathwidth_exact(&path(4)).0, 1);
        assert_eq!(pathwidth_exact(&cycle(5)).0, 2);
        assert_eq!(pathwidth_exact(&complete(4)).0, 3);
    }

    #[test]
    fn petersen_widths() {
        // Known values: tw = pw = 4... pathwidth of Petersen is 5.
        assert_eq!(treewidth_exact(&petersen()).0, 4);
        assert_eq!(pathwidth_exact(&petersen()).0, 5);
    }

    #[test]
    fn decomposition_matches_exact_width() {
        for g in [path(6), cycle(6), complete(5), petersen(), star(5)] {
            let (b, td) = treewidth_with_decomposition(&g);
            td.validate(&g).unwrap();
            assert_eq!(td.width(), b.value());
        }
    }

    #[test]
    fn tw_le_pw_always() {
        let g = petersen();
        assert!(treewidth_exact(&g).0 <= pathwidth_exact(&g).0);
    }
}
