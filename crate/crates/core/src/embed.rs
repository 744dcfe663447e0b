//! Backtracking embedding search with bit-set candidate pruning.
//!
//! An [`ExtensionPlan`] fixes, once per pattern, the order in which free
//! pattern vertices are placed and which earlier vertices constrain each
//! step. Embeddings are induced: adjacency and non-adjacency are preserved.

use crate::graph::{bit, members, Graph, VertexSet};

/// Placement order for the free vertices of a pattern whose `fixed` vertices are pre-assigned.
#[derive(Clone, Debug)]
pub struct ExtensionPlan {
    pattern_order: usize,
    fixed: Vec<usize>,
    steps: Vec<Step>,
}

#[derive(Clone, Debug)]
struct Step {
    vertex: usize,
    /// Earlier vertices together with whether they are adjacent to `vertex`.
    constraints: Vec<(usize, bool)>,
}

impl ExtensionPlan {
    /// Plans extension of `fixed` (distinct pattern vertices) to all of `pattern`.
    ///
    /// Free vertices go most-constrained first: most adjacencies to already
    /// placed vertices, then lowest id.
    pub fn new(pattern: &Graph, fixed: &[usize]) -> Self {
        let n = pattern.order();
        let mut placed: VertexSet = fixed.iter().fold(0, |a, &v| a | bit(v));
        let mut placed_list: Vec<usize> = fixed.to_vec();
        let mut steps = Vec::with_capacity(n - fixed.len());
        while placed_list.len() < n {
            let next = (0..n)
                .filter(|&v| placed & bit(v) == 0)
                .max_by_key(|&v| ((pattern.neighbors(v) & placed).count_ones(), std::cmp::Reverse(v)))
                .expect("some vertex is unplaced");
            let constraints = placed_list.iter().map(|&p| (p, pattern.has_edge(next, p))).collect();
            steps.push(Step { vertex: next, constraints });
            placed |= bit(next);
            placed_list.push(next);
        }
        ExtensionPlan { pattern_order: n, fixed: fixed.to_vec(), steps }
    }

    /// Number of embeddings of the pattern into `host` agreeing with `images` on the fixed vertices.
    ///
    /// `images[i]` is the host vertex for `fixed[i]`; the caller ensures this is an embedding.
    pub fn count(&self, host: &Graph, images: &[usize]) -> u64 {
        let mut img = vec![usize::MAX; self.pattern_order];
        let mut used = 0;
        for (&p, &h) in self.fixed.iter().zip(images) {
            img[p] = h;
            used |= bit(h);
        }
        self.count_from(host, 0, used, &mut img)
    }

    fn count_from(&self, host: &Graph, depth: usize, used: VertexSet, img: &mut [usize]) -> u64 {
        let Some(step) = self.steps.get(depth) else {
            return 1;
        };
        let cands = self.candidates(host, step, used, img);
        if depth + 1 == self.steps.len() {
            return cands.count_ones() as u64;
        }
        let mut total = 0;
        for c in members(cands) {
            img[step.vertex] = c;
            total += self.count_from(host, depth + 1, used | bit(c), img);
        }
        img[step.vertex] = usize::MAX;
        total
    }

    #[inline]
    fn candidates(&self, host: &Graph, step: &Step, used: VertexSet, img: &[usize]) -> VertexSet {
        let mut cands = host.vertex_set() & !used;
        for &(p, adjacent) in &step.constraints {
            let row = host.neighbors(img[p]);
            cands &= if adjacent { row } else { !row };
            if cands == 0 {
                break;
            }
        }
        cands
    }

    /// Calls `f` with every full extension (indexed by pattern vertex); stops when `f` returns `false`.
    pub fn for_each(&self, host: &Graph, images: &[usize], f: &mut impl FnMut(&[usize]) -> bool) {
        let mut img = vec![usize::MAX; self.pattern_order];
        let mut used = 0;
        for (&p, &h) in self.fixed.iter().zip(images) {
            img[p] = h;
            used |= bit(h);
        }
        self.visit(host, 0, used, &mut img, f);
    }

    fn visit(&self, host: &Graph, depth: usize, used: VertexSet, img: &mut [usize], f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        let Some(step) = self.steps.get(depth) else {
            return f(img);
        };
        for c in members(self.candidates(host, step, used, img)) {
            img[step.vertex] = c;
            if !self.visit(host, depth + 1, used | bit(c), img, f) {
                return false;
            }
        }
        img[step.vertex] = usize::MAX;
        true
    }
}

/// All embeddings of `pattern` into `host` in lexicographic order of the image tuple.
pub fn embeddings(host: &Graph, pattern: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_embedding_lex(host, pattern, &mut |m| {
        out.push(m.to_vec());
        true
    });
    out
}

/// Visits embeddings of `pattern` in lexicographic order (pattern vertices assigned 0, 1, ...).
pub fn for_each_embedding_lex(host: &Graph, pattern: &Graph, f: &mut impl FnMut(&[usize]) -> bool) {
    fn rec(host: &Graph, pattern: &Graph, img: &mut Vec<usize>, used: VertexSet, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        let i = img.len();
        if i == pattern.order() {
            return f(img);
        }
        let mut cands = host.vertex_set() & !used;
        for (j, &h) in img.iter().enumerate() {
            let row = host.neighbors(h);
            cands &= if pattern.has_edge(i, j) { row } else { !row };
        }
        for c in members(cands) {
            img.push(c);
            let go_on = rec(host, pattern, img, used | bit(c), f);
            img.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(host, pattern, &mut Vec::with_capacity(pattern.order()), 0, f);
}

pub fn count_embeddings(host: &Graph, pattern: &Graph) -> u64 {
    ExtensionPlan::new(pattern, &[]).count(host, &[])
}

pub fn find_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.order() > host.order() {
        return None;
    }
    let mut found = None;
    ExtensionPlan::new(pattern, &[]).for_each(host, &[], &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// Whether some vertex subset of `g` induces a graph isomorphic to `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    find_embedding(g, h).is_some()
}

/// The graph `K4 - e` (two triangles sharing the edge `01`).
pub fn k4_minus_edge() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::for_each_subset;

    fn brute_contains(g: &Graph, h: &Graph) -> bool {
        let mut found = false;
        for_each_subset(g.order(), h.order(), &mut |s| {
            let order: Vec<usize> = members(s).collect();
            if crate::canon::are_isomorphic(&g.induced_ordered(&order), h) {
                found = true;
            }
            !found
        });
        found
    }

    #[test]
    fn k4_does_not_contain_k4e() {
        assert!(!contains_induced(&Graph::complete(4).unwrap(), &k4_minus_edge()));
    }

    #[test]
    fn rook_is_k4e_free_wheel_is_not() {
        let rook = crate::geometry::catalog("rook3x3").unwrap();
        assert!(!contains_induced(&rook, &k4_minus_edge()));
        assert!(!brute_contains(&rook, &k4_minus_edge()));
        let mut wheel = Graph::cycle(5).unwrap();
        wheel.push_vertex(0b11111).unwrap();
        assert!(contains_induced(&wheel, &k4_minus_edge()));
        assert!(brute_contains(&wheel, &k4_minus_edge()));
    }

    #[test]
    fn counts_ordered_maps() {
        // K3 into K5: 5 * 4 * 3 ordered maps
        assert_eq!(count_embeddings(&Graph::complete(5).unwrap(), &Graph::complete(3).unwrap()), 60);
        let p = crate::geometry::catalog("petersen").unwrap();
        // each of 15 edges in two directions
        assert_eq!(count_embeddings(&p, &Graph::complete(2).unwrap()), 30);
        assert_eq!(embeddings(&p, &Graph::complete(2).unwrap()).len(), 30);
    }

    #[test]
    fn lexicographic_order() {
        let c4 = Graph::cycle(4).unwrap();
        let e = embeddings(&c4, &Graph::path(2).unwrap());
        let mut sorted = e.clone();
        sorted.sort();
        assert_eq!(e, sorted);
    }
}
