//! Canonical labelling by partition refinement and individualisation.
//!
//! The search explores the individualisation-refinement tree, keeps the
//! smallest leaf certificate and prunes children that are equivalent under
//! automorphisms already discovered. Vertex colourings are respected: the
//! initial partition groups vertices by colour in ascending colour order.

use serde::{Serialize, Serializer};

use crate::graph::{set_of, Graph};

/// Isomorphism-class key of a (vertex-coloured) graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Canonical labelling: `order[i]` is the vertex placed at position `i`.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub order: Vec<usize>,
    pub form: CanonicalForm,
}

impl Labeling {
    /// The graph relabelled canonically (vertex `i` is old vertex `order[i]`).
    pub fn apply(&self, g: &Graph) -> Graph {
        g.induced_ordered(&self.order)
    }
}

pub fn canonical_form(g: &Graph, coloring: Option<&[u32]>) -> CanonicalForm {
    canonical_labeling(g, coloring).form
}

pub fn canonical_labeling(g: &Graph, coloring: Option<&[u32]>) -> Labeling {
    let n = g.order();
    let colors: Vec<u32> = match coloring {
        Some(c) => {
            assert_eq!(c.len(), n, "colouring length must equal the vertex count");
            c.to_vec()
        }
        None => vec![0; n],
    };
    let mut search = Search { g, colors, best: None, first: None, autos: Vec::new() };
    let cells = search.initial_cells();
    search.visit(cells, &mut Vec::new());
    let (cert, order) = search.best.expect("search visits at least one leaf");
    Labeling { order, form: CanonicalForm(cert) }
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut d1 = g1.degree_sequence();
    let mut d2 = g2.degree_sequence();
    d1.sort_unstable();
    d2.sort_unstable();
    d1 == d2 && canonical_form(g1, None) == canonical_form(g2, None)
}

/// Minimum certificate over all vertex permutations. Exponential; only for `n <= 8`.
pub fn brute_force_form(g: &Graph, coloring: Option<&[u32]>) -> CanonicalForm {
    let n = g.order();
    assert!(n <= 8, "brute-force canonical form is limited to 8 vertices");
    let colors: Vec<u32> = coloring.map(<[u32]>::to_vec).unwrap_or_else(|| vec![0; n]);
    let mut order: Vec<usize> = (0..n).collect();
    // colour classes must appear in ascending colour order
    order.sort_by_key(|&v| colors[v]);
    let mut best: Option<Vec<u8>> = None;
    permute_within_classes(&mut order, &colors, 0, &mut |ord| {
        let cert = certificate(g, &colors, ord);
        if best.as_ref().is_none_or(|b| cert < *b) {
            best = Some(cert);
        }
    });
    CanonicalForm(best.unwrap_or_default())
}

fn permute_within_classes(order: &mut [usize], colors: &[u32], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == order.len() {
        f(order);
        return;
    }
    for i in k..order.len() {
        if colors[order[i]] != colors[order[k]] {
            break;
        }
        order.swap(k, i);
        permute_within_classes(order, colors, k + 1, f);
        order.swap(k, i);
    }
}

/// Leaf certificate: vertex count, colours by position, upper-triangle adjacency bits.
fn certificate(g: &Graph, colors: &[u32], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(2 + 4 * n + n * n / 16);
    out.extend_from_slice(&(n as u16).to_be_bytes());
    for &v in order {
        out.extend_from_slice(&colors[v].to_be_bytes());
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for i in 0..n {
        let row = g.neighbors(order[i]);
        for &w in &order[i + 1..] {
            acc = (acc << 1) | ((row >> w) & 1) as u8;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<u32>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn initial_cells(&self) -> Vec<Vec<usize>> {
        let mut vertices: Vec<usize> = (0..self.g.order()).collect();
        vertices.sort_by_key(|&v| (self.colors[v], v));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for v in vertices {
            match cells.last_mut() {
                Some(cell) if self.colors[cell[0]] == self.colors[v] => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        cells
    }

    fn visit(&mut self, mut cells: Vec<Vec<usize>>, path: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target_idx) = target_cell(&cells) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let target = cells[target_idx].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() {
                let orbits = self.stabilizer_orbits(path);
                if explored.iter().any(|&w| orbits.same(v, w)) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(vec![v]);
            child.push(target.iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target_idx + 1..]);
            path.push(v);
            self.visit(child, path);
            path.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &self.colors, &order);
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == cert {
                // order[i] -> reference[i] preserves everything
                let mut aut = vec![0; order.len()];
                for (i, &v) in order.iter().enumerate() {
                    aut[v] = reference.1[i];
                }
                if aut.iter().enumerate().any(|(i, &j)| i != j) {
                    self.autos.push(aut);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((cert.clone(), order.clone()));
        }
        if self.best.as_ref().is_none_or(|(b, _)| cert < *b) {
            self.best = Some((cert, order));
        }
    }

    fn stabilizer_orbits(&self, path: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.g.order());
        for aut in &self.autos {
            if path.iter().all(|&p| aut[p] == p) {
                for (x, &y) in aut.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        uf
    }
}

/// First non-singleton cell of minimum size.
fn target_cell(cells: &[Vec<usize>]) -> Option<usize> {
    cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i)
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Fragments of a split cell are ordered by ascending neighbour count.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = set_of(&cells[w]);
            let mut j = 0;
            while j < cells.len() {
                if cells[j].len() > 1 {
                    let mut keyed: Vec<(u32, usize)> = cells[j].iter().map(|&v| ((g.neighbors(v) & splitter).count_ones(), v)).collect();
                    if keyed.iter().any(|&(c, _)| c != keyed[0].0) {
                        keyed.sort_unstable();
                        let mut fragments: Vec<Vec<usize>> = Vec::new();
                        let mut last = None;
                        for (c, v) in keyed {
                            if last != Some(c) {
                                fragments.push(Vec::new());
                                last = Some(c);
                            }
                            fragments.last_mut().unwrap().push(v);
                        }
                        let len = fragments.len();
                        cells.splice(j..j + 1, fragments);
                        j += len;
                        changed = true;
                        continue;
                    }
                }
                j += 1;
            }
            w += 1;
        }
        if !changed {
            break;
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// Exhaustive automorphism count.
#[cfg(test)]
pub(crate) fn automorphism_count_brute(g: &Graph) -> usize {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permute_within_classes(&mut perm, &vec![0; n], 0, &mut |p| {
        if (0..n).all(|u| crate::graph::members(g.neighbors(u)).all(|w| g.has_edge(p[u], p[w]))) {
            count += 1;
        }
    });
    count
}
