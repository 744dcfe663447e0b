//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting).

use crate::graph::{members, Graph, VertexSet};

/// All inclusion-maximal cliques, each sorted ascending, listed in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<VertexSet> = Vec::new();
    if g.order() == 0 {
        return Vec::new();
    }
    expand(g, 0, g.vertex_set(), 0, &mut out);
    let mut cliques: Vec<Vec<usize>> = out.into_iter().map(|c| members(c).collect()).collect();
    cliques.sort();
    cliques
}

fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = members(p | x).max_by_key(|&u| (p & g.neighbors(u)).count_ones()).expect("p is non-empty");
    for v in members(p & !g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        expand(g, r | 1 << v, p & nv, x & nv, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}
