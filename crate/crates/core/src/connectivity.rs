//! Decomposability and connectivity.
//!
//! A graph is *k-decomposable* when deleting some set of exactly `k`
//! vertices leaves at least two vertices in at least two components. It is
//! *k-connected* when it is `l`-indecomposable for every `l < k`. Complete
//! graphs are therefore k-connected for every `k`.

use std::collections::VecDeque;

use crate::graph::{bit, full_set, members, Graph, VertexSet};

pub fn is_k_decomposable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k + 2 > n {
        return false;
    }
    let all = g.vertex_set();
    let mut found = false;
    for_each_subset(n, k, &mut |cut| {
        if !found && !g.is_connected_within(all & !cut) {
            found = true;
        }
        !found
    });
    found
}

/// Brute-force connectivity: no separator of size `< k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    (0..k).all(|l| !is_k_decomposable(g, l))
}

/// Connectivity via Menger: the least number of internally disjoint paths
/// between non-adjacent pairs, or `None` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let flow = local_connectivity(g, u, v, best.unwrap_or(usize::MAX));
                best = Some(best.map_or(flow, |b| b.min(flow)));
            }
        }
    }
    best
}

/// Same predicate as [`is_k_connected`], computed with max-flow.
pub fn is_k_connected_flow(g: &Graph, k: usize) -> bool {
    vertex_connectivity(g).is_none_or(|kappa| kappa >= k)
}

/// Number of internally vertex-disjoint `s`-`t` paths for non-adjacent `s`, `t`,
/// stopping early once `cap` paths are found.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.order();
    // node 2v is v_in, 2v+1 is v_out; internal vertices have unit capacity
    let nodes = 2 * n;
    let mut cap_m = vec![vec![0i32; nodes]; nodes];
    for v in 0..n {
        cap_m[2 * v][2 * v + 1] = if v == s || v == t { n as i32 } else { 1 };
        for w in members(g.neighbors(v)) {
            cap_m[2 * v + 1][2 * w] = n as i32;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nodes {
                if prev[y] == usize::MAX && cap_m[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap_m[x][y] -= 1;
            cap_m[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Calls `f` on every `k`-subset of `0..n` (as a bit set) until `f` returns `false`.
pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(VertexSet) -> bool) {
    fn rec(start: usize, n: usize, left: usize, acc: VertexSet, f: &mut impl FnMut(VertexSet) -> bool) -> bool {
        if left == 0 {
            return f(acc);
        }
        for v in start..=n - left {
            if !rec(v + 1, n, left - 1, acc | bit(v), f) {
                return false;
            }
        }
        true
    }
    if k <= n {
        rec(0, n, k, 0, f);
    }
}

/// All vertex subsets of `0..n` with at most `k` elements.
#[allow(dead_code)]
pub(crate) fn subsets_up_to(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for size in 0..=k.min(n) {
        for_each_subset(n, size, &mut |s| {
            out.push(s);
            true
        });
    }
    debug_assert!(out.iter().all(|&s| s & !full_set(n) == 0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        Graph::from_fn(6, |u, v| u / 2 != v / 2).unwrap()
    }

    #[test]
    fn complete_graphs_never_decompose() {
        let k4 = Graph::complete(4).unwrap();
        for k in 0..=4 {
            assert!(!is_k_decomposable(&k4, k));
        }
        assert!(is_k_connected(&k4, 3));
        assert!(is_k_connected(&k4, 4));
        assert!(is_k_connected(&Graph::complete(5).unwrap(), 4));
        assert!(is_k_connected_flow(&k4, 4));
    }

    #[test]
    fn path_and_cycle_cuts() {
        assert!(is_k_decomposable(&Graph::path(3).unwrap(), 1));
        let c5 = Graph::cycle(5).unwrap();
        assert!(!is_k_decomposable(&c5, 1));
        assert!(is_k_decomposable(&c5, 2));
    }

    #[test]
    fn octahedron_and_hexagon() {
        assert!(is_k_connected(&octahedron(), 4));
        assert!(!is_k_connected(&octahedron(), 5));
        assert!(!is_k_connected(&Graph::cycle(6).unwrap(), 3));
        assert_eq!(vertex_connectivity(&octahedron()), Some(4));
        assert_eq!(vertex_connectivity(&Graph::cycle(6).unwrap()), Some(2));
    }

    #[test]
    fn disconnected_is_zero_decomposable() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(is_k_decomposable(&g, 0));
        assert!(!is_k_connected(&g, 1));
        assert!(!is_k_connected_flow(&g, 1));
        assert!(is_k_connected(&g, 0));
    }

    #[test]
    fn subset_enumeration_counts() {
        assert_eq!(subsets_up_to(6, 2).len(), 1 + 6 + 15);
        let mut count = 0;
        for_each_subset(7, 3, &mut |_| {
            count += 1;
            true
        });
        assert_eq!(count, 35);
    }
}
