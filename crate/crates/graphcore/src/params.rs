//! The parameter vector: every structural quantity the description framework
//! talks about, computed exactly where feasible.

use crate::width::{pathwidth, treewidth_with_decomposition, Bound};
use crate::{fvs::fvs_exact, Graph};

/// Structural parameters of a graph. Treewidth and pathwidth are exact up
/// to [`crate::width::EXACT_WIDTH_LIMIT`] vertices and upper bounds beyond;
/// cliquewidth is always reported as an upper bound derived from treewidth.
/// Hadwiger numbers are never computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterVector {
    pub n: usize,
    pub cc: usize,
    pub max_degree: usize,
    pub fvs: usize,
    pub tw: Bound,
    pub pw: Bound,
    pub cw: Bound,
    /// `Some(flag)` only when a rotation system was supplied and the graph
    /// is connected; `None` means "no embedding given".
    pub genus_zero: Option<bool>,
}

impl ParameterVector {
    pub fn hadwiger_note() -> &'static str {
        "not computed"
    }
}

/// Upper bound on cliquewidth in terms of treewidth. Forests have
/// cliquewidth at most 3; in general cw <= 3 * 2^(tw-1).
fn cliquewidth_upper(g: &Graph, tw: usize) -> usize {
    if g.edge_count() == 0 {
        return 1;
    }
    match tw {
        0 => 1,
        1 => 3,
        t => 3usize.saturating_mul(1usize << (t - 1).min(30)),
    }
}

pub fn compute_parameters(g: &Graph) -> ParameterVector {
    let n = g.vertex_count();
    let cc = g.component_count();
    let max_degree = g.max_degree();
    let fvs = fvs_exact(g).len();
    let (tw, _) = treewidth_with_decomposition(g);
    let pw = pathwidth(g);
    let cw = Bound::Upper(cliquewidth_upper(g, tw.value()));
    let genus_zero = match g.rotation() {
        Some(_) if g.is_connected() => g.check_genus_zero().ok(),
        _ => None,
    };
    let pv = ParameterVector {
        n,
        cc,
        max_degree,
        fvs,
        tw,
        pw,
        cw,
        genus_zero,
    };
    debug_assert!(n == 0 || pv.cc >= 1);
    debug_assert!(pv.tw.value() <= pv.pw.value() || !pv.tw.is_exact() || !pv.pw.is_exact());
    pv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn triangle_parameters() {
        let pv = compute_parameters(&complete(3));
        assert_eq!(pv.cc, 1);
        assert_eq!(pv.max_degree, 2);
        assert_eq!(pv.fvs, 1);
        assert_eq!(pv.tw, Bound::Exact(2));
        assert_eq!(pv.pw, Bound::Exact(2));
    }

    #[test]
    fn p4_parameters() {
        let pv = compute_parameters(&path(4));
        assert_eq!(pv.cc, 1);
        assert_eq!(pv.max_degree, 2);
        assert_eq!(pv.fvs, 0);
        assert_eq!(pv.tw, Bound::Exact(1));
        assert_eq!(pv.pw, Bound::Exact(1));
    }

    #[test]
    fn petersen_parameters_match_exhaustive_search() {
        let pv = compute_parameters(&petersen());
        assert_eq!(pv.fvs, 3);
        assert_eq!(pv.tw, Bound::Exact(4));
        assert_eq!(pv.pw, Bound::Exact(5));
        assert_eq!(pv.genus_zero, None);
    }

    #[test]
    fn genus_flag_only_with_rotation() {
        let mut g = cycle(4);
        assert_eq!(compute_parameters(&g).genus_zero, None);
        let rot: Vec<Vec<usize>> = (0..4).map(|v| g.neighbors(v).to_vec()).collect();
        g.set_rotation(rot).unwrap();
        assert_eq!(compute_parameters(&g).genus_zero, Some(true));
    }
}
