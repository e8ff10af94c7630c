//! Rooted tree decompositions, their validation, the separator/cone/component
//! maps, and conversion to nice form.

use crate::{Graph, GraphError, Result};
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    root: Option<usize>,
}

impl Default for TreeDecomposition {
    fn default() -> Self {
        Self::new()
    }
}

impl TreeDecomposition {
    pub fn new() -> Self {
        TreeDecomposition {
            bags: Vec::new(),
            parent: Vec::new(),
            root: None,
        }
    }

    pub fn single_bag(bag: Vec<usize>) -> Self {
        let mut td = TreeDecomposition::new();
        let id = td.add_bag(bag);
        td.set_root(id);
        td
    }

    pub fn add_bag(&mut self, mut bag: Vec<usize>) -> usize {
        bag.sort_unstable();
        bag.dedup();
        self.bags.push(bag);
        self.parent.push(None);
        self.bags.len() - 1
    }

    pub fn set_parent(&mut self, child: usize, parent: usize) {
        self.parent[child] = Some(parent);
    }

    pub fn replace_bag(&mut self, t: usize, mut bag: Vec<usize>) {
        bag.sort_unstable();
        bag.dedup();
        self.bags[t] = bag;
    }

    pub fn set_root(&mut self, root: usize) {
        self.root = Some(root);
    }

    pub fn root(&self) -> usize {
        self.root.expect("decomposition has no root")
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, t: usize) -> &[usize] {
        &self.bags[t]
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn children(&self, t: usize) -> Vec<usize> {
        (0..self.bags.len())
            .filter(|&c| self.parent[c] == Some(t))
            .collect()
    }

    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Nodes in an order where parents precede children.
    pub fn topological(&self) -> Vec<usize> {
        let mut order = vec![self.root()];
        let mut i = 0;
        while i < order.len() {
            let t = order[i];
            order.extend(self.children(t));
            i += 1;
        }
        order
    }

    /// Separator at `t`: empty at the root, `β(t) ∩ β(parent)` elsewhere.
    pub fn separator(&self, t: usize) -> Vec<usize> {
        match self.parent[t] {
            None => Vec::new(),
            Some(s) => {
                let pb: BTreeSet<usize> = self.bags[s].iter().copied().collect();
                self.bags[t]
                    .iter()
                    .copied()
                    .filter(|v| pb.contains(v))
                    .collect()
            }
        }
    }

    /// Cone at `t`: union of bags over all descendants (inclusive).
    pub fn cone(&self, t: usize) -> Vec<usize> {
        let mut acc: BTreeSet<usize> = BTreeSet::new();
        let mut stack = vec![t];
        while let Some(x) = stack.pop() {
            acc.extend(self.bags[x].iter().copied());
            stack.extend(self.children(x));
        }
        acc.into_iter().collect()
    }

    /// Component at `t`: cone minus separator.
    pub fn component(&self, t: usize) -> Vec<usize> {
        let sep: BTreeSet<usize> = self.separator(t).into_iter().collect();
        self.cone(t)
            .into_iter()
            .filter(|v| !sep.contains(v))
            .collect()
    }

    /// Checks that this is a rooted tree and a valid decomposition of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let nn = self.bags.len();
        if nn == 0 {
            return Err(GraphError::InvalidDecomposition("no nodes".into()));
        }
        let root = self
            .root
            .ok_or_else(|| GraphError::InvalidDecomposition("no root".into()))?;
        if self.parent[root].is_some() {
            return Err(GraphError::InvalidDecomposition(
                "root has a parent".into(),
            ));
        }
        // Every non-root reaches the root without cycles.
        for t in 0..nn {
            let mut seen = vec![false; nn];
            let mut cur = t;
            while let Some(p) = self.parent[cur] {
                if seen[cur] {
                    return Err(GraphError::InvalidDecomposition(
                        "parent pointers contain a cycle".into(),
                    ));
                }
                seen[cur] = true;
                cur = p;
            }
            if cur != root {
                return Err(GraphError::InvalidDecomposition(format!(
                    "node {t} is not connected to the root"
                )));
            }
        }
        for (t, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= g.vertex_count() {
                    return Err(GraphError::InvalidDecomposition(format!(
                        "bag {t} mentions vertex {v} outside the graph"
                    )));
                }
            }
        }
        // Vertex occurrences nonempty and connected in the tree.
        for v in 0..g.vertex_count() {
            let occ: Vec<usize> = (0..nn).filter(|&t| self.bags[t].contains(&v)).collect();
            if occ.is_empty() {
                return Err(GraphError::InvalidDecomposition(format!(
                    "vertex {v} appears in no bag"
                )));
            }
            // The highest occurrence must be an ancestor of all others, and
            // walking up from any occurrence stays inside occurrences until
            // reaching it.
            let occset: BTreeSet<usize> = occ.iter().copied().collect();
            let depth = |mut t: usize| {
                let mut d = 0;
                while let Some(p) = self.parent[t] {
                    t = p;
                    d += 1;
                }
                d
            };
            let top = *occ.iter().min_by_key(|&&t| depth(t)).unwrap();
            for &t in &occ {
                let mut cur = t;
                while cur != top {
                    match self.parent[cur] {
                        Some(p) if occset.contains(&p) => cur = p,
                        _ => {
                            return Err(GraphError::InvalidDecomposition(format!(
                                "occurrences of vertex {v} are disconnected"
                            )))
                        }
                    }
                }
            }
        }
        for (u, v) in g.edges() {
            if !self
                .bags
                .iter()
                .any(|b| b.contains(&u) && b.contains(&v))
            {
                return Err(GraphError::InvalidDecomposition(format!(
                    "edge ({u},{v}) is covered by no bag"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiceNodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

/// A nice tree decomposition: the root bag is empty, leaves are empty, and
/// every internal node introduces one vertex, forgets one vertex, or joins
/// two children with identical bags.
#[derive(Debug, Clone)]
pub struct NiceTreeDecomposition {
    pub td: TreeDecomposition,
    pub kind: Vec<NiceNodeKind>,
}

impl NiceTreeDecomposition {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.td.validate(g)?;
        let root = self.td.root();
        if !self.td.bag(root).is_empty() {
            return Err(GraphError::InvalidDecomposition(
                "nice root bag is not empty".into(),
            ));
        }
        for t in 0..self.td.node_count() {
            let children = self.td.children(t);
            let bag: BTreeSet<usize> = self.td.bag(t).iter().copied().collect();
            match self.kind[t] {
                NiceNodeKind::Leaf => {
                    if !children.is_empty() || !bag.is_empty() {
                        return Err(GraphError::InvalidDecomposition(format!(
                            "bad leaf node {t}"
                        )));
                    }
                }
                NiceNodeKind::Introduce(v) => {
                    if children.len() != 1 {
                        return Err(GraphError::InvalidDecomposition(format!(
                            "introduce node {t} must have one child"
                        )));
                    }
                    let cb: BTreeSet<usize> =
                        self.td.bag(children[0]).iter().copied().collect();
                    let mut expect = cb.clone();
                    if !expect.insert(v) || expect != bag {
                        return Err(GraphError::InvalidDecomposition(format!(
                            "introduce node {t} does not add exactly {v}"
                        )));
                    }
                }
                NiceNodeKind::Forget(v) => {
                    if children.len() != 1 {
                        return Err(GraphError::InvalidDecomposition(format!(
                            "forget node {t} must have one child"
                        )));
                    }
                    let cb: BTreeSet<usize> =
                        self.td.bag(children[0]).iter().copied().collect();
                    let mut expect = cb.clone();
                    if !expect.remove(&v) || expect != bag {
                        return Err(GraphError::InvalidDecomposition(format!(
                            "forget node {t} does not remove exactly {v}"
                        )));
                    }
                }
                NiceNodeKind::Join => {
                    if children.len() != 2 {
                        return Err(GraphError::InvalidDecomposition(format!(
                            "join node {t} must have two children"
                        )));
                    }
                    for &c in &children {
                        let cb: BTreeSet<usize> = self.td.bag(c).iter().copied().collect();
                        if cb != bag {
                            return Err(GraphError::InvalidDecomposition(format!(
                                "join node {t} has a child with a different bag"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Transforms a valid decomposition into nice form of the same width.
pub fn make_nice(td: &TreeDecomposition, g: &Graph) -> Result<NiceTreeDecomposition> {
    td.validate(g)?;
    let mut out = TreeDecomposition::new();
    let mut kinds: Vec<NiceNodeKind> = Vec::new();

    // Builds a chain of forgets/introduces transforming `from` (child side)
    // into `to` (parent side), bottom-up. Bag ids are paired with their node
    // kinds by the caller, which must push the kinds in the same order.
    fn chain(
        from: &[usize],
        to: &[usize],
        out: &mut TreeDecomposition,
    ) -> Vec<(usize, NiceNodeKind)> {
        // Walking upward from `from`: forget vertices not in `to`, then
        // introduce vertices of `to` missing in `from`. Bag sizes stay
        // at most max(|from|, |to|).
        let from_set: BTreeSet<usize> = from.iter().copied().collect();
        let to_set: BTreeSet<usize> = to.iter().copied().collect();
        let mut cur: BTreeSet<usize> = from_set.clone();
        let mut steps = Vec::new();
        for &v in from_set.difference(&to_set) {
            cur.remove(&v);
            let id = out.add_bag(cur.iter().copied().collect());
            steps.push((id, NiceNodeKind::Forget(v)));
        }
        for &v in to_set.difference(&from_set) {
            cur.insert(v);
            let id = out.add_bag(cur.iter().copied().collect());
            steps.push((id, NiceNodeKind::Introduce(v)));
        }
        steps
    }

    // Recursive construction: returns the id of the node whose bag equals
    // β(t) and which roots the processed subtree of t.
    fn build(
        t: usize,
        td: &TreeDecomposition,
        out: &mut TreeDecomposition,
        kinds: &mut Vec<NiceNodeKind>,
    ) -> usize {
        let bag = td.bag(t).to_vec();
        let children = td.children(t);
        if children.is_empty() {
            // Leaf: empty nice leaf, then introduce everything.
            let mut id = out.add_bag(Vec::new());
            kinds.push(NiceNodeKind::Leaf);
            let mut cur: Vec<usize> = Vec::new();
            for &v in &bag {
                cur.push(v);
                let up = out.add_bag(cur.clone());
                kinds.push(NiceNodeKind::Introduce(v));
                out.set_parent(id, up);
                id = up;
            }
            return id;
        }
        // Each child subtree gets a chain converting β(child) to β(t);
        // multiple children are combined with join nodes.
        let mut tops = Vec::new();
        for &c in &children {
            let sub = build(c, td, out, kinds);
            let steps = chain(td.bag(c), &bag, out);
            let mut below = sub;
            for (id, kind) in steps {
                kinds.push(kind);
                out.set_parent(below, id);
                below = id;
            }
            tops.push(below);
        }
        let mut acc = tops[0];
        for &next in &tops[1..] {
            let join = out.add_bag(bag.clone());
            kinds.push(NiceNodeKind::Join);
            out.set_parent(acc, join);
            out.set_parent(next, join);
            acc = join;
        }
        acc
    }

    let top = build(td.root(), td, &mut out, &mut kinds);
    // Forget the root bag down to the empty nice root.
    let mut below = top;
    let mut cur: BTreeSet<usize> = td.bag(td.root()).iter().copied().collect();
    let root_bag = cur.clone();
    for v in root_bag {
        cur.remove(&v);
        let id = out.add_bag(cur.iter().copied().collect());
        kinds.push(NiceNodeKind::Forget(v));
        out.set_parent(below, id);
        below = id;
    }
    out.set_root(below);
    let nice = NiceTreeDecomposition { td: out, kind: kinds };
    nice.validate(g)?;
    Ok(nice)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn separator_cone_component_equations() {
        let g = cycle(5);
        let (_, td) = crate::width::treewidth_with_decomposition(&g);
        td.validate(&g).unwrap();
        // Root separator is empty; others equal bag ∩ parent bag; cone and
        // component recomputed from definitions agree.
        assert!(td.separator(td.root()).is_empty());
        for t in 0..td.node_count() {
            let sep: BTreeSet<usize> = td.separator(t).into_iter().collect();
            if let Some(p) = td.parent(t) {
                let expect: BTreeSet<usize> = td
                    .bag(t)
                    .iter()
                    .filter(|v| td.bag(p).contains(v))
                    .copied()
                    .collect();
                assert_eq!(sep, expect);
            }
            let cone: BTreeSet<usize> = td.cone(t).into_iter().collect();
            let comp: BTreeSet<usize> = td.component(t).into_iter().collect();
            assert_eq!(
                comp,
                cone.difference(&sep).copied().collect::<BTreeSet<usize>>()
            );
        }
    }

    #[test]
    fn single_bag_k3_nice_counts() {
        let g = complete(3);
        let td = TreeDecomposition::single_bag(vec![0, 1, 2]);
        let nice = make_nice(&td, &g).unwrap();
        let intro = nice
            .kind
            .iter()
            .filter(|k| matches!(k, NiceNodeKind::Introduce(_)))
            .count();
        let forget = nice
            .kind
            .iter()
            .filter(|k| matches!(k, NiceNodeKind::Forget(_)))
            .count();
        assert_eq!(intro, 3);
        assert_eq!(forget, 3);
        assert_eq!(nice.td.width(), 2);
    }

    #[test]
    fn single_vertex_nice_chain() {
        let g = crate::Graph::new(1);
        let td = TreeDecomposition::single_bag(vec![0]);
        let nice = make_nice(&td, &g).unwrap();
        assert!(matches!(nice.kind[0], NiceNodeKind::Leaf));
        assert_eq!(
            nice.kind
                .iter()
                .filter(|k| matches!(k, NiceNodeKind::Introduce(_)))
                .count(),
            1
        );
        assert_eq!(
            nice.kind
                .iter()
                .filter(|k| matches!(k, NiceNodeKind::Forget(_)))
                .count(),
            1
        );
    }

    #[test]
    fn nice_preserves_width_on_petersen() {
        let g = petersen();
        let (b, td) = crate::width::treewidth_with_decomposition(&g);
        let nice = make_nice(&td, &g).unwrap();
        assert_eq!(nice.td.width(), b.value());
    }

    use std::collections::BTreeSet;
}
