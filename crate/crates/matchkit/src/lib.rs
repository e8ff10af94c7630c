//! Matching algorithms: maximum bipartite matching, the randomized
//! exact-weight perfect matching test, perfect matching with hitting
//! constraints, and conjoining matchings.

pub mod field;

use graphcore::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatchError {
    #[error("sides have different sizes ({0} vs {1}), no perfect matching possible")]
    NonSquare(usize, usize),
    #[error("hitting set {0} references an edge outside the base graph")]
    BadHittingSet(usize),
    #[error("pair set references class {0}, but only {1} classes exist")]
    BadClass(usize, usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, MatchError>;

/// A bipartite multigraph with nonnegative integer edge weights. Parallel
/// edges with different weights are allowed.
#[derive(Debug, Clone, Default)]
pub struct BipartiteMultigraph {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<(usize, usize, u64)>,
}

impl BipartiteMultigraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteMultigraph {
            left,
            right,
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize, w: u64) {
        assert!(l < self.left && r < self.right);
        self.edges.push((l, r, w));
    }

    pub fn max_weight(&self) -> u64 {
        self.edges.iter().map(|&(_, _, w)| w).max().unwrap_or(0)
    }
}

/// Maximum-cardinality bipartite matching (augmenting paths). Returns the
/// matched edges as (left, right) pairs.
pub fn max_bipartite_matching(b: &BipartiteMultigraph) -> Vec<(usize, usize)> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); b.left];
    for &(l, r, _) in &b.edges {
        if !adj[l].contains(&r) {
            adj[l].push(r);
        }
    }
    let mut match_r: Vec<Option<usize>> = vec![None; b.right];
    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_r: &mut [Option<usize>],
    ) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if match_r[r].is_none()
                || augment(match_r[r].unwrap(), adj, seen, match_r)
            {
                match_r[r] = Some(l);
                return true;
            }
        }
        false
    }
    for l in 0..b.left {
        let mut seen = vec![false; b.right];
        augment(l, &adj, &mut seen, &mut match_r);
    }
    match_r
        .iter()
        .enumerate()
        .filter_map(|(r, l)| l.map(|l| (l, r)))
        .collect()
}

/// One evaluation round of the exact-weight test: draw random coefficients,
/// evaluate det(A(y)) at nW+1 points, interpolate, and read the coefficient
/// of y^w0.
fn exact_weight_round(b: &BipartiteMultigraph, w0: u64, rng: &mut ChaCha20Rng) -> bool {
    let n = b.left;
    let degree = (n as u64) * b.max_weight();
    if w0 > degree {
        return false;
    }
    let coeffs: Vec<u64> = b
        .edges
        .iter()
        .map(|_| rng.gen_range(1..field::P))
        .collect();
    let points: Vec<u64> = (1..=degree + 1).collect();
    let mut values = Vec::with_capacity(points.len());
    for &y in &points {
        let mut mat = vec![vec![0u64; n]; n];
        let ypows = {
            // Powers of y up to the largest weight, computed on demand.
            let mut cache = std::collections::HashMap::new();
            cache.insert(0u64, 1u64);
            cache
        };
        let mut ypows = ypows;
        for (idx, &(l, r, w)) in b.edges.iter().enumerate() {
            let yp = *ypows
                .entry(w)
                .or_insert_with(|| field::pow(y, w));
            mat[l][r] = field::add(mat[l][r], field::mul(coeffs[idx], yp));
        }
        values.push(field::determinant(&mut mat));
    }
    if values.iter().all(|&v| v == 0) {
        return false;
    }
    let poly = field::interpolate(&points, &values);
    poly.get(w0 as usize).copied().unwrap_or(0) != 0
}

/// Number of independent rounds needed so that the one-sided failure
/// probability drops below 2^-repetitions; each round already fails with
/// probability at most n/p by Schwartz-Zippel.
fn rounds_needed(n: usize, repetitions: u32) -> u32 {
    let per_round_bits = 61.0 - ((n.max(2)) as f64).log2();
    ((repetitions as f64) / per_round_bits).ceil().max(1.0) as u32
}

/// Randomized test for a perfect matching of total weight exactly `w0`.
/// No false positives; false negatives with probability at most
/// 2^-repetitions. Deterministic for a fixed seed.
pub fn exact_weight_pm(
    b: &BipartiteMultigraph,
    w0: u64,
    seed: u64,
    repetitions: u32,
) -> Result<bool> {
    if b.left != b.right {
        return Err(MatchError::NonSquare(b.left, b.right));
    }
    if b.left == 0 {
        return Ok(w0 == 0);
    }
    let degree = (b.left as u64) * b.max_weight();
    if w0 > degree {
        return Ok(false);
    }
    for round in 0..rounds_needed(b.left, repetitions) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed ^ ((round as u64) << 32));
        if exact_weight_round(b, w0, &mut rng) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// An instance of Perfect Matching with Hitting Constraints: a perfect
/// matching must contain ℓ distinct edges, the t-th from `hitting_sets[t]`.
#[derive(Debug, Clone)]
pub struct PmwhcInstance {
    pub base: BipartiteMultigraph,
    /// Each set holds indices into `base.edges`.
    pub hitting_sets: Vec<Vec<usize>>,
}

/// The weights given to the t-th copies (1-based t) and the target weight
/// of the reduction.
pub fn pmwhc_copy_weight(t: u32, ell: u32) -> u64 {
    (1u64 << (t - 1)) + (1u64 << (2 * ell - t))
}

pub fn pmwhc_target(ell: u32) -> u64 {
    (1u64 << (2 * ell)) - 1
}

/// Builds the weighted auxiliary multigraph: originals of weight 0 plus one
/// copy of weight 2^(t-1) + 2^(2ℓ-t) for every edge in the t-th hitting set.
pub fn pmwhc_auxiliary(inst: &PmwhcInstance) -> Result<BipartiteMultigraph> {
    let ell = inst.hitting_sets.len() as u32;
    let mut aux = BipartiteMultigraph::new(inst.base.left, inst.base.right);
    for &(l, r, _) in &inst.base.edges {
        aux.add_edge(l, r, 0);
    }
    for (t0, set) in inst.hitting_sets.iter().enumerate() {
        let t = (t0 + 1) as u32;
        for &eidx in set {
            let &(l, r, _) = inst
                .base
                .edges
                .get(eidx)
                .ok_or(MatchError::BadHittingSet(t0))?;
            aux.add_edge(l, r, pmwhc_copy_weight(t, ell));
        }
    }
    Ok(aux)
}

/// Decides Perfect Matching with Hitting Constraints with one-sided error
/// (false negatives only).
pub fn pmwhc(inst: &PmwhcInstance, seed: u64, repetitions: u32) -> Result<bool> {
    if inst.base.left != inst.base.right {
        return Err(MatchError::NonSquare(inst.base.left, inst.base.right));
    }
    let ell = inst.hitting_sets.len() as u32;
    if ell == 0 {
        // Plain perfect matching; decided exactly.
        let m = max_bipartite_matching(&inst.base);
        return Ok(m.len() == inst.base.left);
    }
    let aux = pmwhc_auxiliary(inst)?;
    exact_weight_pm(&aux, pmwhc_target(ell), seed, repetitions)
}

/// Conjoining matching: a perfect matching of the bipartite graph `g` that
/// contains, for every pair (x, y) in `pairs`, an edge between class x and
/// class y. With costs, the matching must additionally have total cost at
/// most `budget`.
pub fn conjoining_matching(
    g: &Graph,
    class_of: &[usize],
    class_count: usize,
    pairs: &[(usize, usize)],
    costs: Option<&std::collections::HashMap<(usize, usize), u64>>,
    budget: Option<u64>,
    seed: u64,
    repetitions: u32,
) -> Result<bool> {
    let n = g.vertex_count();
    if class_of.len() != n {
        return Err(MatchError::Other(
            "class map must cover every vertex".into(),
        ));
    }
    for &(x, y) in pairs {
        if x >= class_count || y >= class_count {
            return Err(MatchError::BadClass(x.max(y), class_count));
        }
    }
    // 2-color to find the sides.
    let mut side = vec![usize::MAX; n];
    for comp in g.components() {
        let s = comp[0];
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if side[u] == usize::MAX {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if side[u] == side[v] {
                    return Err(MatchError::NotBipartite);
                }
            }
        }
    }
    let lefts: Vec<usize> = (0..n).filter(|&v| side[v] == 0).collect();
    let rights: Vec<usize> = (0..n).filter(|&v| side[v] == 1).collect();
    if lefts.len() != rights.len() {
        return Ok(false);
    }
    let mut lpos = vec![usize::MAX; n];
    let mut rpos = vec![usize::MAX; n];
    for (i, &v) in lefts.iter().enumerate() {
        lpos[v] = i;
    }
    for (i, &v) in rights.iter().enumerate() {
        rpos[v] = i;
    }
    let mut base = BipartiteMultigraph::new(lefts.len(), rights.len());
    let mut base_cost: Vec<u64> = Vec::new();
    for (u, v) in g.edges() {
        let (l, r) = if side[u] == 0 { (u, v) } else { (v, u) };
        base.add_edge(lpos[l], rpos[r], 0);
        let c = costs
            .map(|m| {
                m.get(&(u.min(v), u.max(v)))
                    .copied()
                    .ok_or_else(|| MatchError::Other(format!("edge ({u},{v}) has no cost")))
            })
            .transpose()?
            .unwrap_or(0);
        base_cost.push(c);
    }
    // Hitting sets from the class pairs.
    let mut sets: Vec<Vec<usize>> = Vec::new();
    for &(x, y) in pairs {
        let set: Vec<usize> = g
            .edges()
            .enumerate()
            .filter(|&(_, (u, v))| {
                (class_of[u] == x && class_of[v] == y)
                    || (class_of[u] == y && class_of[v] == x)
            })
            .map(|(i, _)| i)
            .collect();
        sets.push(set);
    }
    let inst = PmwhcInstance {
        base: base.clone(),
        hitting_sets: sets.clone(),
    };
    match (costs, budget) {
        (None, _) | (_, None) => pmwhc(&inst, seed, repetitions),
        (Some(_), Some(budget)) => {
            let ell = sets.len() as u32;
            let z = base_cost.iter().copied().max().unwrap_or(0).max(1);
            let nn = lefts.len() as u64;
            let scale = z * nn + 1;
            // Composite weights: matching weight carries the hitting
            // structure in the high part and the cost in the low part.
            let mut aux = BipartiteMultigraph::new(base.left, base.right);
            for (idx, &(l, r, _)) in base.edges.iter().enumerate() {
                aux.add_edge(l, r, base_cost[idx]);
            }
            for (t0, set) in sets.iter().enumerate() {
                let t = (t0 + 1) as u32;
                for &eidx in set {
                    let (l, r, _) = base.edges[eidx];
                    let w = pmwhc_copy_weight(t, ell);
                    aux.add_edge(l, r, w * scale + base_cost[eidx]);
                }
            }
            let high = if ell == 0 { 0 } else { pmwhc_target(ell) };
            for x in 0..=budget {
                if exact_weight_pm(&aux, high * scale + x, seed ^ (x << 17), repetitions)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_sizes() {
        let mut b = BipartiteMultigraph::new(1, 1);
        b.add_edge(0, 0, 0);
        assert_eq!(max_bipartite_matching(&b).len(), 1);

        let mut k22 = BipartiteMultigraph::new(2, 2);
        for l in 0..2 {
            for r in 0..2 {
                k22.add_edge(l, r, 0);
            }
        }
        assert_eq!(max_bipartite_matching(&k22).len(), 2);
    }

    #[test]
    fn exact_weight_k22() {
        // Weights (1,2 / 3,4): the two perfect matchings weigh 1+4 = 5 and
        // 2+3 = 5, so 5 is achievable and 6 is not.
        let mut b = BipartiteMultigraph::new(2, 2);
        b.add_edge(0, 0, 1);
        b.add_edge(0, 1, 2);
        b.add_edge(1, 0, 3);
        b.add_edge(1, 1, 4);
        assert!(exact_weight_pm(&b, 5, 7, 40).unwrap());
        assert!(!exact_weight_pm(&b, 6, 7, 40).unwrap());
    }

    #[test]
    fn non_square_is_error() {
        let b = BipartiteMultigraph::new(2, 3);
        assert!(matches!(
            exact_weight_pm(&b, 0, 1, 1),
            Err(MatchError::NonSquare(2, 3))
        ));
    }

    #[test]
    fn pmwhc_weight_formulas() {
        // Bit-exact reproduction of the reduction weights.
        assert_eq!(pmwhc_copy_weight(1, 1), 3); // 2^0 + 2^1
        assert_eq!(pmwhc_target(1), 3);
        assert_eq!(pmwhc_copy_weight(2, 3), 2 + 16);
        assert_eq!(pmwhc_target(3), 63);
    }

    #[test]
    fn pmwhc_single_edge() {
        let mut base = BipartiteMultigraph::new(1, 1);
        base.add_edge(0, 0, 0);
        let inst = PmwhcInstance {
            base: base.clone(),
            hitting_sets: vec![vec![0]],
        };
        assert!(pmwhc(&inst, 3, 40).unwrap());
        // Perfect matching exists but the hitting set is empty.
        let inst2 = PmwhcInstance {
            base,
            hitting_sets: vec![vec![]],
        };
        assert!(!pmwhc(&inst2, 3, 40).unwrap());
    }

    #[test]
    fn conjoining_on_c4() {
        use graphcore::graph::named::cycle;
        // C4 with classes {0,2} and {1,3}: a perfect matching crossing the
        // classes exists.
        let g = cycle(4);
        let classes = vec![0, 1, 0, 1];
        assert!(conjoining_matching(&g, &classes, 2, &[(0, 1)], None, None, 5, 40).unwrap());
        // Demanding an edge inside class 0 is impossible.
        assert!(!conjoining_matching(&g, &classes, 2, &[(0, 0)], None, None, 5, 40).unwrap());
    }
}
