//! Line-based text formats. Graphs: header `graph <name> <n> <m>`, edge
//! lines `e <u> <v>` (1-indexed), optional rotation lines
//! `rot <v>: <u1> <u2> ...`. Tree decompositions: `td <width> <nodes>`,
//! `bag <node> <v...>`, `arc <parent> <child>` (nodes and vertices
//! 1-indexed).

use crate::{Graph, GraphError, Result, TreeDecomposition};

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn write_graph(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {} {} {}\n", name, g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    if let Some(rot) = g.rotation() {
        for (v, order) in rot.iter().enumerate() {
            if order.is_empty() {
                continue;
            }
            let items: Vec<String> = order.iter().map(|u| (u + 1).to_string()).collect();
            out.push_str(&format!("rot {}: {}\n", v + 1, items.join(" ")));
        }
    }
    out
}

pub fn parse_graph(input: &str) -> Result<(Graph, String)> {
    let mut g: Option<Graph> = None;
    let mut name = String::new();
    let mut rot: Vec<Vec<usize>> = Vec::new();
    let mut have_rot = false;
    let mut declared_edges = 0usize;
    for (ln, raw) in input.lines().enumerate() {
        let line = ln + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let mut it = s.split_whitespace();
        match it.next().unwrap() {
            "graph" => {
                name = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing graph name"))?
                    .to_string();
                let n: usize = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing vertex count"))?
                    .parse()
                    .map_err(|_| parse_err(line, "bad vertex count"))?;
                declared_edges = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing edge count"))?
                    .parse()
                    .map_err(|_| parse_err(line, "bad edge count"))?;
                g = Some(Graph::new(n));
                rot = vec![Vec::new(); n];
            }
            "e" => {
                let g = g
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge before header"))?;
                let u: usize = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing endpoint"))?
                    .parse()
                    .map_err(|_| parse_err(line, "bad endpoint"))?;
                let v: usize = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing endpoint"))?
                    .parse()
                    .map_err(|_| parse_err(line, "bad endpoint"))?;
                if u == 0 || v == 0 || u > g.vertex_count() || v > g.vertex_count() {
                    return Err(parse_err(line, "endpoint out of range (1-indexed)"));
                }
                if u == v {
                    return Err(parse_err(line, "loops are not allowed"));
                }
                g.add_edge(u - 1, v - 1);
            }
            "rot" => {
                let g = g
                    .as_ref()
                    .ok_or_else(|| parse_err(line, "rotation before header"))?;
                let vtok = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing vertex"))?;
                let vtok = vtok.trim_end_matches(':');
                let v: usize = vtok
                    .parse()
                    .map_err(|_| parse_err(line, "bad vertex"))?;
                if v == 0 || v > g.vertex_count() {
                    return Err(parse_err(line, "vertex out of range"));
                }
                let mut order = Vec::new();
                for t in it {
                    let u: usize = t
                        .parse()
                        .map_err(|_| parse_err(line, "bad neighbor"))?;
                    if u == 0 || u > g.vertex_count() {
                        return Err(parse_err(line, "neighbor out of range"));
                    }
                    order.push(u - 1);
                }
                rot[v - 1] = order;
                have_rot = true;
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    let mut g = g.ok_or_else(|| parse_err(0, "no graph header"))?;
    if g.edge_count() != declared_edges {
        return Err(GraphError::Parse {
            line: 1,
            msg: format!(
                "header declares {} edges, found {}",
                declared_edges,
                g.edge_count()
            ),
        });
    }
    if have_rot {
        g.set_rotation(rot)?;
    }
    Ok((g, name))
}

pub fn write_treedec(td: &TreeDecomposition) -> String {
    let mut out = format!("td {} {}\n", td.width(), td.node_count());
    for t in 0..td.node_count() {
        let items: Vec<String> = td.bag(t).iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&format!("bag {} {}\n", t + 1, items.join(" ")));
    }
    for t in 0..td.node_count() {
        if let Some(p) = td.parent(t) {
            out.push_str(&format!("arc {} {}\n", p + 1, t + 1));
        }
    }
    out
}

pub fn parse_treedec(input: &str) -> Result<TreeDecomposition> {
    let mut nodes = 0usize;
    let mut td = TreeDecomposition::new();
    let mut has_parent: Vec<bool> = Vec::new();
    let mut seen_header = false;
    for (ln, raw) in input.lines().enumerate() {
        let line = ln + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let mut it = s.split_whitespace();
        match it.next().unwrap() {
            "td" => {
                let _width: usize = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing width"))?
                    .parse()
                    .map_err(|_| parse_err(line, "bad width"))?;
                nodes = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing node count"))?
                    .parse()
                    .map_err(|_| parse_err(line, "bad node count"))?;
                for _ in 0..nodes {
                    td.add_bag(Vec::new());
                }
                has_parent = vec![false; nodes];
                seen_header = true;
            }
            "bag" => {
                if !seen_header {
                    return Err(parse_err(line, "bag before header"));
                }
                let t: usize = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing node id"))?
                    .parse()
                    .map_err(|_| parse_err(line, "bad node id"))?;
                if t == 0 || t > nodes {
                    return Err(parse_err(line, "node id out of range"));
                }
                let mut bag = Vec::new();
                for tok in it {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_err(line, "bad vertex"))?;
                    if v == 0 {
                        return Err(parse_err(line, "vertices are 1-indexed"));
                    }
                    bag.push(v - 1);
                }
                td.replace_bag(t - 1, bag);
            }
            "arc" => {
                if !seen_header {
                    return Err(parse_err(line, "arc before header"));
                }
                let p: usize = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing parent"))?
                    .parse()
                    .map_err(|_| parse_err(line, "bad parent"))?;
                let c: usize = it
                    .next()
                    .ok_or_else(|| parse_err(line, "missing child"))?
                    .parse()
                    .map_err(|_| parse_err(line, "bad child"))?;
                if p == 0 || c == 0 || p > nodes || c > nodes {
                    return Err(parse_err(line, "arc endpoint out of range"));
                }
                td.set_parent(c - 1, p - 1);
                has_parent[c - 1] = true;
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    if !seen_header {
        return Err(parse_err(0, "no td header"));
    }
    let roots: Vec<usize> = (0..nodes).filter(|&t| !has_parent[t]).collect();
    if roots.len() != 1 {
        return Err(GraphError::InvalidDecomposition(format!(
            "expected exactly one root, found {}",
            roots.len()
        )));
    }
    td.set_root(roots[0]);
    Ok(td)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn graph_roundtrip_with_rotation() {
        let mut g = cycle(4);
        let rot: Vec<Vec<usize>> = (0..4).map(|v| g.neighbors(v).to_vec()).collect();
        g.set_rotation(rot).unwrap();
        let text = write_graph(&g, "c4");
        let (g2, name) = parse_graph(&text).unwrap();
        assert_eq!(name, "c4");
        assert_eq!(g, g2);
    }

    #[test]
    fn bad_edge_count_reports_line() {
        let res = parse_graph("graph x 3 5\ne 1 2\n");
        assert!(res.is_err());
    }

    #[test]
    fn parse_error_carries_line_number() {
        let res = parse_graph("graph x 3 1\ne 1 9\n");
        match res {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn treedec_roundtrip() {
        let g = cycle(5);
        let (_, td) = crate::width::treewidth_with_decomposition(&g);
        let text = write_treedec(&td);
        let td2 = parse_treedec(&text).unwrap();
        td2.validate(&g).unwrap();
        assert_eq!(td.width(), td2.width());
    }
}
