//! Clique expressions: term trees over disjoint union, join, relabel, and
//! single-vertex constants, plus normalization into nice form.

use crate::{Graph, GraphError, Result};
use std::collections::BTreeSet;
use std::fmt;

pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueExpression {
    /// ι_ℓ: a single vertex labeled ℓ (labels are 1-based in text form).
    Leaf(Label),
    /// ⊕: disjoint union.
    Union(Box<CliqueExpression>, Box<CliqueExpression>),
    /// η_{i,j}: connect every i-labeled vertex with every j-labeled vertex.
    Join(Label, Label, Box<CliqueExpression>),
    /// ρ_{i→j}: relabel i to j.
    Relabel(Label, Label, Box<CliqueExpression>),
}

use CliqueExpression::*;

impl CliqueExpression {
    /// Evaluates the expression into a labeled graph; vertices are numbered
    /// in leaf order (left to right).
    pub fn evaluate(&self) -> (Graph, Vec<Label>) {
        match self {
            Leaf(l) => (Graph::new(1), vec![*l]),
            Union(a, b) => {
                let (mut g, mut la) = a.evaluate();
                let (gb, lb) = b.evaluate();
                g.disjoint_union(&gb);
                la.extend(lb);
                (g, la)
            }
            Join(i, j, inner) => {
                let (mut g, labels) = inner.evaluate();
                for u in 0..g.vertex_count() {
                    for v in 0..g.vertex_count() {
                        if u < v
                            && ((labels[u] == *i && labels[v] == *j)
                                || (labels[u] == *j && labels[v] == *i))
                        {
                            g.add_edge(u, v);
                        }
                    }
                }
                (g, labels)
            }
            Relabel(i, j, inner) => {
                let (g, mut labels) = inner.evaluate();
                for l in labels.iter_mut() {
                    if *l == *i {
                        *l = *j;
                    }
                }
                (g, labels)
            }
        }
    }

    pub fn label_count(&self) -> Label {
        match self {
            Leaf(l) => *l,
            Union(a, b) => a.label_count().max(b.label_count()),
            Join(i, j, inner) | Relabel(i, j, inner) => {
                (*i).max(*j).max(inner.label_count())
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Leaf(l) => {
                if *l == 0 {
                    return Err(GraphError::InvalidExpression(
                        "labels are 1-based".into(),
                    ));
                }
            }
            Union(a, b) => {
                a.validate()?;
                b.validate()?;
            }
            Join(i, j, inner) | Relabel(i, j, inner) => {
                if i == j || *i == 0 || *j == 0 {
                    return Err(GraphError::InvalidExpression(format!(
                        "operator with labels {i},{j}"
                    )));
                }
                inner.validate()?;
            }
        }
        Ok(())
    }

    /// Nice form: every join introduces only absent edges, and the operands
    /// of every union use disjoint label sets.
    pub fn is_nice(&self) -> bool {
        fn walk(e: &CliqueExpression) -> Option<(Graph, Vec<Label>)> {
            match e {
                Leaf(l) => Some((Graph::new(1), vec![*l])),
                Union(a, b) => {
                    let (mut g, la) = walk(a)?;
                    let (gb, lb) = walk(b)?;
                    let sa: BTreeSet<Label> = la.iter().copied().collect();
                    let sb: BTreeSet<Label> = lb.iter().copied().collect();
                    if sa.intersection(&sb).next().is_some() {
                        return None;
                    }
                    g.disjoint_union(&gb);
                    let mut l = la;
                    l.extend(lb);
                    Some((g, l))
                }
                Join(i, j, inner) => {
                    let (mut g, labels) = walk(inner)?;
                    for u in 0..g.vertex_count() {
                        for v in u + 1..g.vertex_count() {
                            let joined = (labels[u] == *i && labels[v] == *j)
                                || (labels[u] == *j && labels[v] == *i);
                            if joined {
                                if g.has_edge(u, v) {
                                    return None;
                                }
                                g.add_edge(u, v);
                            }
                        }
                    }
                    Some((g, labels))
                }
                Relabel(i, j, inner) => {
                    let (g, mut labels) = walk(inner)?;
                    for l in labels.iter_mut() {
                        if *l == *i {
                            *l = *j;
                        }
                    }
                    Some((g, labels))
                }
            }
        }
        walk(self).is_some()
    }
}

/// Turns an arbitrary expression into a nice one constructing an isomorphic
/// (in fact identical up to vertex order) graph, using at most twice the
/// labels: label ℓ gets a shadow copy ℓ+k used on the right operand of every
/// union, and joins that would re-introduce existing edges are dropped.
pub fn make_nice_cw(expr: &CliqueExpression) -> Result<CliqueExpression> {
    expr.validate()?;
    let k = expr.label_count();

    // Step 1: disjoint label sets at unions via shadow labels.
    fn shadow(e: &CliqueExpression, k: Label) -> CliqueExpression {
        match e {
            Leaf(l) => Leaf(*l),
            Union(a, b) => {
                let left = shadow(a, k);
                let mut right = shadow(b, k);
                // Lift every original label of the right operand to its
                // shadow, union, then lower the shadows back.
                for l in 1..=k {
                    right = Relabel(l, l + k, Box::new(right));
                }
                let mut out = Union(Box::new(left), Box::new(right));
                for l in 1..=k {
                    out = Relabel(l + k, l, Box::new(out));
                }
                out
            }
            Join(i, j, inner) => Join(*i, *j, Box::new(shadow(inner, k))),
            Relabel(i, j, inner) => Relabel(*i, *j, Box::new(shadow(inner, k))),
        }
    }

    // Step 2: repeatedly remove any join whose removal leaves the
    // constructed labeled graph unchanged. Joins whose edges are all
    // introduced again by a later join disappear this way; the relabels
    // from the shadowing step are kept, as they carry the disjointness.
    fn splice_candidates(e: &CliqueExpression, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match e {
            Leaf(_) => {}
            Union(a, b) => {
                path.push(0);
                splice_candidates(a, path, out);
                path.pop();
                path.push(1);
                splice_candidates(b, path, out);
                path.pop();
            }
            Join(_, _, inner) => {
                out.push(path.clone());
                path.push(0);
                splice_candidates(inner, path, out);
                path.pop();
            }
            Relabel(_, _, inner) => {
                path.push(0);
                splice_candidates(inner, path, out);
                path.pop();
            }
        }
    }

    fn splice(e: &CliqueExpression, path: &[usize]) -> CliqueExpression {
        if path.is_empty() {
            return match e {
                Join(_, _, inner) | Relabel(_, _, inner) => (**inner).clone(),
                other => other.clone(),
            };
        }
        match e {
            Union(a, b) => {
                if path[0] == 0 {
                    Union(Box::new(splice(a, &path[1..])), b.clone())
                } else {
                    Union(a.clone(), Box::new(splice(b, &path[1..])))
                }
            }
            Join(i, j, inner) => Join(*i, *j, Box::new(splice(inner, &path[1..]))),
            Relabel(i, j, inner) => Relabel(*i, *j, Box::new(splice(inner, &path[1..]))),
            Leaf(_) => e.clone(),
        }
    }

    let original = expr.evaluate();
    let mut nice = shadow(expr, k);
    loop {
        let mut cands = Vec::new();
        splice_candidates(&nice, &mut Vec::new(), &mut cands);
        let mut changed = false;
        for path in cands {
            let pruned = splice(&nice, &path);
            if pruned.evaluate() == original {
                nice = pruned;
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    // A join that is only partially redundant would break niceness; in that
    // case the expression was not equivalent to a nice one via dropping, so
    // report it rather than silently mis-normalize.
    if !nice.is_nice() {
        return Err(GraphError::InvalidExpression(
            "expression join structure cannot be normalized by dropping redundant joins"
                .into(),
        ));
    }
    Ok(nice)
}

impl fmt::Display for CliqueExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf(l) => write!(f, "(leaf {l})"),
            Union(a, b) => write!(f, "(union {a} {b})"),
            Join(i, j, inner) => write!(f, "(join {i} {j} {inner})"),
            Relabel(i, j, inner) => write!(f, "(relabel {i} {j} {inner})"),
        }
    }
}

/// Parses the prefix text form, e.g. `join 1 2 (union (leaf 1) (leaf 2))`.
/// Parentheses around the outermost term are optional.
pub fn parse(input: &str) -> Result<CliqueExpression> {
    let mut tokens: Vec<String> = Vec::new();
    let mut cur = String::new();
    for ch in input.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
                tokens.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    let mut pos = 0usize;
    let expr = parse_term(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(GraphError::InvalidExpression(format!(
            "trailing tokens after term: {:?}",
            &tokens[pos..]
        )));
    }
    expr.validate()?;
    Ok(expr)
}

fn parse_term(tokens: &[String], pos: &mut usize) -> Result<CliqueExpression> {
    let fail = |msg: &str| GraphError::InvalidExpression(msg.to_string());
    let mut wrapped = false;
    if tokens.get(*pos).map(String::as_str) == Some("(") {
        wrapped = true;
        *pos += 1;
    }
    let head = tokens
        .get(*pos)
        .ok_or_else(|| fail("unexpected end of input"))?
        .clone();
    *pos += 1;
    let label = |pos: &mut usize| -> Result<Label> {
        let t = tokens
            .get(*pos)
            .ok_or_else(|| fail("expected a label"))?;
        let l: Label = t
            .parse()
            .map_err(|_| fail(&format!("bad label `{t}`")))?;
        *pos += 1;
        Ok(l)
    };
    let expr = match head.as_str() {
        "leaf" => Leaf(label(pos)?),
        "union" => {
            let a = parse_term(tokens, pos)?;
            let b = parse_term(tokens, pos)?;
            Union(Box::new(a), Box::new(b))
        }
        "join" => {
            let i = label(pos)?;
            let j = label(pos)?;
            Join(i, j, Box::new(parse_term(tokens, pos)?))
        }
        "relabel" => {
            let i = label(pos)?;
            let j = label(pos)?;
            Relabel(i, j, Box::new(parse_term(tokens, pos)?))
        }
        other => return Err(fail(&format!("unknown operator `{other}`"))),
    };
    if wrapped {
        if tokens.get(*pos).map(String::as_str) != Some(")") {
            return Err(fail("missing closing parenthesis"));
        }
        *pos += 1;
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4_expression() -> CliqueExpression {
        // Builds the path a-b-c-d, keeping the growing end at label 2 and
        // retiring interior vertices to label 3.
        parse(
            "join 1 2 (union (relabel 2 1 (relabel 1 3 (join 1 2 (union \
             (relabel 2 1 (relabel 1 3 (join 1 2 (union (leaf 1) (leaf 2))))) \
             (leaf 2))))) (leaf 2))",
        )
        .unwrap()
    }

    #[test]
    fn parse_print_roundtrip() {
        let e = p4_expression();
        let printed = e.to_string();
        let e2 = parse(&printed).unwrap();
        assert_eq!(e, e2);
    }

    #[test]
    fn p4_evaluates_to_a_path() {
        let (g, _) = p4_expression().evaluate();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.max_degree(), 2);
        assert!(g.is_tree());
    }

    #[test]
    fn union_without_join_stays_put() {
        let e = parse("union (leaf 1) (leaf 1)").unwrap();
        let nice = make_nice_cw(&e).unwrap();
        let (g, _) = nice.evaluate();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);
        assert!(nice.is_nice());
    }

    #[test]
    fn redundant_double_join_removed() {
        let e = parse("join 1 2 (join 1 2 (union (leaf 1) (leaf 2)))").unwrap();
        let nice = make_nice_cw(&e).unwrap();
        let (g, _) = nice.evaluate();
        assert_eq!(g.edge_count(), 1);
        assert!(nice.is_nice());
        // Exactly one join survives.
        fn count_joins(e: &CliqueExpression) -> usize {
            match e {
                Leaf(_) => 0,
                Union(a, b) => count_joins(a) + count_joins(b),
                Join(_, _, i) => 1 + count_joins(i),
                Relabel(_, _, i) => count_joins(i),
            }
        }
        assert_eq!(count_joins(&nice), 1);
    }

    #[test]
    fn nice_p4_label_budget() {
        let e = p4_expression();
        let k = e.label_count();
        let nice = make_nice_cw(&e).unwrap();
        assert!(nice.label_count() <= 2 * k);
        let (g1, _) = e.evaluate();
        let (g2, _) = nice.evaluate();
        assert_eq!(g1, g2);
        assert!(nice.is_nice());
    }
}
