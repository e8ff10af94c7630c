//! Exact minimum feedback vertex set by iterative-deepening branching on a
//! shortest cycle.

use crate::Graph;
use std::collections::VecDeque;

/// Finds a shortest cycle, returned as a vertex list, or `None` on forests.
fn shortest_cycle(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        if !alive[s] {
            continue;
        }
        // BFS from s; the first non-tree edge closing back gives a cycle
        // through s of minimal length among cycles through s.
        let mut dist = vec![usize::MAX; n];
        let mut par = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if !alive[u] {
                    continue;
                }
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    par[u] = v;
                    queue.push_back(u);
                } else if par[v] != u && par[u] != v {
                    // Walk both endpoints up to the meeting point.
                    let mut path_v = vec![v];
                    let mut path_u = vec![u];
                    let (mut a, mut b) = (v, u);
                    while a != b {
                        if dist[a] >= dist[b] {
                            a = par[a];
                            path_v.push(a);
                        } else {
                            b = par[b];
                            path_u.push(b);
                        }
                    }
                    path_u.pop();
                    path_u.reverse();
                    path_v.extend(path_u);
                    let cand = path_v;
                    if best.as_ref().map_or(true, |c| cand.len() < c.len()) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

fn search(g: &Graph, alive: &mut Vec<bool>, budget: usize, out: &mut Vec<usize>) -> bool {
    let cycle = match shortest_cycle(g, alive) {
        None => return true,
        Some(c) => c,
    };
    if budget == 0 {
        return false;
    }
    for &v in &cycle {
        alive[v] = false;
        out.push(v);
        if search(g, alive, budget - 1, out) {
            return true;
        }
        out.pop();
        alive[v] = true;
    }
    false
}

/// Minimum feedback vertex set; `g` minus the result is a forest.
pub fn fvs_exact(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    for k in 0..=n {
        let mut alive = vec![true; n];
        let mut out = Vec::new();
        if search(g, &mut alive, k, &mut out) {
            out.sort_unstable();
            return out;
        }
    }
    unreachable!("deleting all vertices always leaves a forest");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::Graph;

    #[test]
    fn forest_has_empty_fvs() {
        assert!(fvs_exact(&path(6)).is_empty());
        assert!(fvs_exact(&star(4)).is_empty());
    }

    #[test]
    fn single_cycle_needs_one() {
        let sol = fvs_exact(&cycle(5));
        assert_eq!(sol.len(), 1);
    }

    #[test]
    fn two_disjoint_triangles_need_two() {
        let mut g = complete(3);
        g.disjoint_union(&complete(3));
        let sol = fvs_exact(&g);
        assert_eq!(sol.len(), 2);
        let (rest, _) = g.delete_vertices(&sol);
        assert!(rest.is_forest());
    }

    #[test]
    fn petersen_needs_three() {
        let g = petersen();
        let sol = fvs_exact(&g);
        assert_eq!(sol.len(), 3);
        let (rest, _) = g.delete_vertices(&sol);
        assert!(rest.is_forest());
    }

    #[test]
    fn k5_needs_three() {
        // K5 minus two vertices is a triangle, so two deletions are not
        // enough.
        assert_eq!(fvs_exact(&complete(5)).len(), 3);
    }

    #[test]
    fn result_is_always_feedback_set() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)],
        );
        let sol = fvs_exact(&g);
        let (rest, _) = g.delete_vertices(&sol);
        assert!(rest.is_forest());
        assert_eq!(sol.len(), 2);
    }
}
