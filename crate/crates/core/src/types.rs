//! Graph-types: a graph `theta` together with an ordered tuple of distinct
//! base vertices. The base-induced subgraph is the *base graph*.
//!
//! Classification (isomorphism, canonical forms, transversals) treats the
//! base as a distinguished set. Extension counting in
//! [`crate::regularity`] fixes the base pointwise, in tuple order.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::connectivity::{for_each_subset, is_k_connected};
use crate::embed::ExtensionPlan;
use crate::error::{Error, Result};
use crate::graph::{bit, members, set_of, Graph, VertexSet};
use crate::io::{from_graph6, to_graph6};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GraphType {
    theta: Graph,
    base: Vec<usize>,
}

impl GraphType {
    pub fn new(theta: Graph, base: Vec<usize>) -> Result<Self> {
        let mut seen: VertexSet = 0;
        for &b in &base {
            if b >= theta.order() {
                return Err(Error::InvalidType(format!("base vertex {b} out of range for order {}", theta.order())));
            }
            if seen & bit(b) != 0 {
                return Err(Error::InvalidType(format!("base vertex {b} repeated")));
            }
            seen |= bit(b);
        }
        Ok(GraphType { theta, base })
    }

    pub fn theta(&self) -> &Graph {
        &self.theta
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// `(|base|, |theta|)`.
    pub fn order(&self) -> (usize, usize) {
        (self.base.len(), self.theta.order())
    }

    pub fn base_set(&self) -> VertexSet {
        set_of(&self.base)
    }

    /// Subgraph induced by the base, vertex `i` being `base[i]`.
    pub fn base_graph(&self) -> Graph {
        self.theta.induced_ordered(&self.base)
    }

    pub fn free_vertices(&self) -> Vec<usize> {
        members(self.theta.vertex_set() & !self.base_set()).collect()
    }

    /// Complements `theta`, keeping the base tuple.
    pub fn complement(&self) -> GraphType {
        GraphType { theta: self.theta.complement(), base: self.base.clone() }
    }

    /// Base vertices coloured 1, the rest 0.
    pub fn coloring(&self) -> Vec<u32> {
        let base = self.base_set();
        (0..self.theta.order()).map(|v| (base >> v & 1) as u32).collect()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        type_canonical_form(self)
    }

    /// Canonical representative: `theta` relabelled canonically, base listed ascending.
    pub fn canonical(&self) -> GraphType {
        let lab = canonical_labeling(&self.theta, Some(&self.coloring()));
        let theta = lab.apply(&self.theta);
        let base_set = self.base_set();
        let base = lab.order.iter().enumerate().filter(|(_, &v)| base_set >> v & 1 == 1).map(|(i, _)| i).collect();
        GraphType { theta, base }
    }

    /// `theta` with every pair of base vertices joined.
    pub fn closure(&self) -> Graph {
        closure_cl(self)
    }

    /// `"<graph6 of theta> <comma-separated base ids>"`.
    pub fn to_text(&self) -> String {
        let base: Vec<String> = self.base.iter().map(usize::to_string).collect();
        format!("{} {}", to_graph6(&self.theta), base.join(","))
    }

    pub fn from_text(line: &str) -> Result<Self> {
        let mut parts = line.split_whitespace();
        let g6 = parts.next().ok_or_else(|| Error::Malformed("empty type line".into()))?;
        let base = match parts.next() {
            None => Vec::new(),
            Some(list) => list
                .split(',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Malformed(format!("bad base vertex `{t}`"))))
                .collect::<Result<_>>()?,
        };
        if parts.next().is_some() {
            return Err(Error::Malformed(format!("trailing fields in type line `{line}`")));
        }
        GraphType::new(from_graph6(g6)?, base)
    }

    pub fn to_json(&self) -> TypeJson {
        TypeJson { n: self.theta.order(), theta: self.theta.edges().into_iter().map(|(u, v)| [u, v]).collect(), base: self.base.clone() }
    }

    pub fn from_json(json: &TypeJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = json.theta.iter().map(|&[u, v]| (u, v)).collect();
        GraphType::new(Graph::from_edges(json.n, &edges)?, json.base.clone())
    }
}

impl fmt::Debug for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphType({}; base={:?}; edges={:?})", self.theta.order(), self.base, self.theta.edges())
    }
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// JSON form of a graph-type: vertex count, edge list and base tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeJson {
    pub n: usize,
    pub theta: Vec<[usize; 2]>,
    pub base: Vec<usize>,
}

impl Serialize for GraphType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

/// Colour-preserving canonical form with the base as colour class 1.
pub fn type_canonical_form(t: &GraphType) -> CanonicalForm {
    crate::canon::canonical_form(&t.theta, Some(&t.coloring()))
}

pub fn types_isomorphic(a: &GraphType, b: &GraphType) -> bool {
    a.order() == b.order() && a.theta.edge_count() == b.theta.edge_count() && type_canonical_form(a) == type_canonical_form(b)
}

pub fn closure_cl(t: &GraphType) -> Graph {
    let mut g = t.theta.clone();
    for (i, &a) in t.base.iter().enumerate() {
        for &b in &t.base[i + 1..] {
            g.add_edge(a, b);
        }
    }
    g
}

/// Result of gluing: the free sum and where `theta2`'s vertices landed.
#[derive(Clone, Debug)]
pub struct FreeSum {
    pub sum: GraphType,
    /// `lambda2[v]` is the vertex of the sum that vertex `v` of `theta2` maps to.
    pub lambda2: Vec<usize>,
}

/// Checks that `e` embeds the base graph of `t2` into the graph of `t1`.
pub fn check_base_embedding(t1: &GraphType, t2: &GraphType, e: &[usize]) -> Result<()> {
    if e.len() != t2.base.len() {
        return Err(Error::NotAnEmbedding(format!("map has {} entries, base of the second type has {}", e.len(), t2.base.len())));
    }
    if !t1.theta.is_embedding(&t2.base_graph(), e) {
        return Err(Error::NotAnEmbedding(format!("{e:?} does not embed the base graph")));
    }
    Ok(())
}

/// Free sum of `t1` and `t2` along `e`, where `e[i]` is the vertex of `t1`'s
/// graph receiving the `i`-th base vertex of `t2`.
///
/// Vertices of `t1` keep their ids; free vertices of `t2` are appended in
/// ascending order. The base is that of `t1`.
pub fn free_sum(t1: &GraphType, t2: &GraphType, e: &[usize]) -> Result<GraphType> {
    free_sum_with_maps(t1, t2, e).map(|fs| fs.sum)
}

pub fn free_sum_with_maps(t1: &GraphType, t2: &GraphType, e: &[usize]) -> Result<FreeSum> {
    check_base_embedding(t1, t2, e)?;
    let n1 = t1.theta.order();
    let mut lambda2 = vec![usize::MAX; t2.theta.order()];
    for (i, &b) in t2.base.iter().enumerate() {
        lambda2[b] = e[i];
    }
    let mut next = n1;
    for v in t2.free_vertices() {
        lambda2[v] = next;
        next += 1;
    }
    let mut theta = t1.theta.clone();
    for _ in n1..next {
        theta.push_vertex(0)?;
    }
    for (u, v) in t2.theta.edges() {
        let (a, b) = (lambda2[u], lambda2[v]);
        if !theta.has_edge(a, b) {
            theta.add_edge(a, b);
        }
    }
    Ok(FreeSum { sum: GraphType { theta, base: t1.base.clone() }, lambda2 })
}

/// Witness `(f, g)` for `t1 ⪯ t2`: `f[i]` is the base position of `t1`
/// matched with base position `i` of `t2`; `g` maps vertices of `t2`'s graph
/// onto those of `t1`'s graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeMorphismWitness {
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    /// `g` is not an isomorphism.
    pub strict: bool,
}

/// `Some(witness)` iff `t2` dominates `t1`: there is a base isomorphism `f`
/// and a surjective homomorphism `g` from `t2`'s graph onto `t1`'s graph
/// compatible with the base embeddings.
pub fn dominates(t1: &GraphType, t2: &GraphType) -> Option<TypeMorphismWitness> {
    let (m, n1) = t1.order();
    let (m2, n2) = t2.order();
    if m != m2 || n1 > n2 {
        return None;
    }
    let mut result = None;
    for_each_permutation(m, &mut |f| {
        let iso = (0..m).all(|i| (i + 1..m).all(|j| t2.theta.has_edge(t2.base[i], t2.base[j]) == t1.theta.has_edge(t1.base[f[i]], t1.base[f[j]])));
        if !iso {
            return true;
        }
        let mut g = vec![usize::MAX; n2];
        let mut covered: VertexSet = 0;
        for i in 0..m {
            g[t2.base[i]] = t1.base[f[i]];
            covered |= bit(t1.base[f[i]]);
        }
        let mut free = t2.free_vertices();
        // place high-degree vertices first; they constrain the most
        free.sort_by_key(|&v| (std::cmp::Reverse(t2.theta.degree(v)), v));
        if extend_surjection(t1, t2, &free, 0, &mut g, covered) {
            let strict = !(n1 == n2 && t1.theta.edge_count() == t2.theta.edge_count() && members(set_of(&g)).count() == n1);
            result = Some(TypeMorphismWitness { f: f.to_vec(), g, strict });
            return false;
        }
        true
    });
    result
}

fn extend_surjection(t1: &GraphType, t2: &GraphType, free: &[usize], depth: usize, g: &mut [usize], covered: VertexSet) -> bool {
    let n1 = t1.theta.order();
    let missing = n1 - covered.count_ones() as usize;
    if missing > free.len() - depth {
        return false;
    }
    let Some(&u) = free.get(depth) else {
        return missing == 0;
    };
    // adjacent vertices of t2 must land on adjacent vertices of t1
    let mut cands = t1.theta.vertex_set();
    for w in members(t2.theta.neighbors(u)) {
        if g[w] != usize::MAX {
            cands &= t1.theta.neighbors(g[w]);
        }
    }
    // when every remaining vertex is needed for coverage, only uncovered targets qualify
    if missing == free.len() - depth {
        cands &= !covered;
    }
    for c in members(cands) {
        g[u] = c;
        if extend_surjection(t1, t2, free, depth + 1, g, covered | bit(c)) {
            return true;
        }
    }
    g[u] = usize::MAX;
    false
}

fn for_each_permutation(m: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    fn rec(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == perm.len() {
            return f(perm);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            let go_on = rec(perm, k + 1, f);
            perm.swap(k, i);
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(&mut (0..m).collect(), 0, f);
}

/// Duplicate-free canonical representatives of every type dominated by `t`
/// (including `t` itself), ordered by `(order, canonical key)`.
///
/// Dominated types are the images of base-injective quotients by
/// independent vertex classes, together with every supergraph of such an
/// image obtained by adding edges that do not join two base vertices.
pub fn dominated_transversal(t: &GraphType) -> Result<crate::enumerate::TypeTransversal> {
    let n = t.theta.order();
    if n > 9 {
        return Err(Error::OutOfRange(format!("domination search is limited to 9 vertices, got {n}")));
    }
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut queue: VecDeque<GraphType> = VecDeque::new();
    let base_graph = t.base_graph();
    let mut block = vec![usize::MAX; n];
    for_each_quotient(t, 0, 0, &mut block, &mut |block, blocks| {
        let mut q = Graph::empty(blocks).expect("at most 9 blocks");
        for (u, v) in t.theta.edges() {
            if !q.has_edge(block[u], block[v]) {
                q.add_edge(block[u], block[v]);
            }
        }
        let base: Vec<usize> = t.base.iter().map(|&b| block[b]).collect();
        let image = GraphType { theta: q, base };
        if image.base_graph() == base_graph {
            let canon = image.canonical();
            if seen.insert(type_canonical_form(&canon)) {
                queue.push_back(canon);
            }
        }
    });
    let mut members_out: Vec<GraphType> = Vec::new();
    while let Some(ty) = queue.pop_front() {
        let bs = ty.base_set();
        let k = ty.theta.order();
        for u in 0..k {
            for v in u + 1..k {
                if ty.theta.has_edge(u, v) || (bs >> u & 1 == 1 && bs >> v & 1 == 1) {
                    continue;
                }
                let mut theta = ty.theta.clone();
                theta.add_edge(u, v);
                let bigger = GraphType { theta, base: ty.base.clone() }.canonical();
                if seen.insert(type_canonical_form(&bigger)) {
                    queue.push_back(bigger);
                }
            }
        }
        members_out.push(ty);
    }
    Ok(crate::enumerate::TypeTransversal::from_members((t.base.len(), n), vec!["dominated".to_string()], members_out))
}

/// Enumerates set partitions of `theta`'s vertices into independent classes
/// with base vertices in distinct classes (restricted growth strings).
fn for_each_quotient(t: &GraphType, v: usize, blocks: usize, block: &mut [usize], f: &mut impl FnMut(&[usize], usize)) {
    let n = t.theta.order();
    if v == n {
        f(block, blocks);
        return;
    }
    let base = t.base_set();
    for b in 0..=blocks {
        if b < blocks {
            let conflict = (0..v).any(|u| block[u] == b && (t.theta.has_edge(u, v) || (base >> u & 1 == 1 && base >> v & 1 == 1)));
            if conflict {
                continue;
            }
        }
        block[v] = b;
        for_each_quotient(t, v + 1, blocks.max(b + 1), block, f);
    }
    block[v] = usize::MAX;
}

/// Partition-based irreducibility: no split of the vertices into `M1`,
/// `M2`, `M3` with the base inside `M1 ∪ M3`, `M2` non-empty, `|M3| <= m`,
/// `|M2 ∪ M3| <= n`, no edges between `M1` and `M2`, and the glued-on part
/// not isomorphic to the whole type.
///
/// `M3` may be empty: gluing along an empty base is a disjoint union.
pub fn irreducible_by_partition(t: &GraphType, m: usize, n: usize) -> bool {
    let order = t.theta.order();
    let all = t.theta.vertex_set();
    let base = t.base_set();
    let mut reducible = false;
    for size in 0..=m.min(order) {
        for_each_subset(order, size, &mut |m3| {
            let rest = all & !m3;
            // M2 is a union of base-free components of theta - M3
            let smallest = components(&t.theta, rest).into_iter().filter(|&c| c & base == 0).min_by_key(|c| c.count_ones());
            if let Some(c) = smallest {
                if c.count_ones() as usize + size <= n && (c != rest || m3 != base) {
                    reducible = true;
                }
            }
            !reducible
        });
        if reducible {
            break;
        }
    }
    !reducible
}

/// Connectivity-based irreducibility: `Some(Cl(t) is (m+1)-connected)` when
/// the base has exactly `m` vertices and `m + 2 <= |theta| <= n`; `None` otherwise.
pub fn irreducible_by_closure(t: &GraphType, m: usize, n: usize) -> Option<bool> {
    let (k, l) = t.order();
    (k == m && m + 2 <= l && l <= n).then(|| is_k_connected(&closure_cl(t), m + 1))
}

/// `(m,n)`-irreducibility; uses the closure-connectivity criterion where it
/// applies and the partition search elsewhere.
pub fn is_mn_irreducible(t: &GraphType, m: usize, n: usize) -> Result<bool> {
    if t.base.len() > m {
        return Err(Error::Precondition(format!("base of size {} exceeds m = {m}", t.base.len())));
    }
    Ok(irreducible_by_closure(t, m, n).unwrap_or_else(|| irreducible_by_partition(t, m, n)))
}

fn components(g: &Graph, set: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut left = set;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= g.neighbors(v);
            }
            next &= set & !comp;
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

/// Number of κ-compatible cocones `(mu1, mu2)`: `mu1` extends `kappa` along
/// the base of `t1`, and `mu2` extends `mu1 ∘ e` along the base of `t2`.
pub fn quotient_cocone_count(gamma: &Graph, t1: &GraphType, t2: &GraphType, e: &[usize], kappa: &[usize]) -> Result<u64> {
    check_base_embedding(t1, t2, e)?;
    if !gamma.is_embedding(&t1.base_graph(), kappa) {
        return Err(Error::NotAnEmbedding(format!("{kappa:?} does not embed the base graph into the host")));
    }
    let plan1 = ExtensionPlan::new(&t1.theta, &t1.base);
    let plan2 = ExtensionPlan::new(&t2.theta, &t2.base);
    let mut total = 0;
    plan1.for_each(gamma, kappa, &mut |mu1| {
        let images: Vec<usize> = e.iter().map(|&x| mu1[x]).collect();
        total += plan2.count(gamma, &images);
        true
    });
    Ok(total)
}

/// Groups types by order; convenience for reports.
pub fn count_by_order(types: &[GraphType]) -> BTreeMap<(usize, usize), usize> {
    let mut map = BTreeMap::new();
    for t in types {
        *map.entry(t.order()).or_insert(0) += 1;
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(n: usize, edges: &[(usize, usize)], base: &[usize]) -> GraphType {
        GraphType::new(Graph::from_edges(n, edges).unwrap(), base.to_vec()).unwrap()
    }

    fn k4_edge_base() -> GraphType {
        GraphType::new(Graph::complete(4).unwrap(), vec![0, 1]).unwrap()
    }

    fn k4_minus_base_edge() -> GraphType {
        let mut g = Graph::complete(4).unwrap();
        g.remove_edge(0, 1);
        GraphType::new(g, vec![0, 1]).unwrap()
    }

    #[test]
    fn rejects_bad_base() {
        assert!(GraphType::new(Graph::complete(3).unwrap(), vec![0, 0]).is_err());
        assert!(GraphType::new(Graph::complete(3).unwrap(), vec![3]).is_err());
    }

    #[test]
    fn canonical_form_ignores_relabelling() {
        let a = k4_edge_base();
        let b = GraphType::new(Graph::complete(4).unwrap(), vec![3, 1]).unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_ne!(a.canonical_form(), k4_minus_base_edge().canonical_form());
    }

    #[test]
    fn closure_examples() {
        assert_eq!(k4_minus_base_edge().closure(), Graph::complete(4).unwrap());
        let p3 = ty(3, &[(0, 1), (1, 2)], &[0]);
        assert_eq!(p3.closure(), *p3.theta());
        let k5 = GraphType::new(Graph::complete(5).unwrap(), vec![0, 1, 2]).unwrap();
        assert_eq!(k5.closure(), Graph::complete(5).unwrap());
    }

    #[test]
    fn free_sum_of_two_triangles() {
        // (edge xy, triangle xyu) glued with (edge xy, triangle xyv) along the base
        let t1 = ty(3, &[(0, 1), (0, 2), (1, 2)], &[0, 1]);
        let t2 = t1.clone();
        let sum = free_sum(&t1, &t2, &[0, 1]).unwrap();
        assert_eq!(sum.order(), (2, 4));
        let mut k4e = Graph::complete(4).unwrap();
        k4e.remove_edge(2, 3);
        assert!(types_isomorphic(&sum, &GraphType::new(k4e, vec![0, 1]).unwrap()));
        assert!(!sum.theta().has_edge(2, 3));
    }

    #[test]
    fn free_sum_with_full_second_type_is_first() {
        let t1 = ty(4, &[(0, 1), (1, 2), (2, 3)], &[0]);
        let t2 = ty(2, &[(0, 1)], &[0, 1]);
        let sum = free_sum(&t1, &t2, &[2, 1]).unwrap();
        assert!(types_isomorphic(&sum, &t1));
    }

    #[test]
    fn free_sum_path_from_edges() {
        // (edge base ab, edge ab) glued with (vertex base x, edge xy) at b
        let t1 = ty(2, &[(0, 1)], &[0, 1]);
        let t2 = ty(2, &[(0, 1)], &[0]);
        let sum = free_sum(&t1, &t2, &[1]).unwrap();
        assert_eq!(sum.theta(), &Graph::path(3).unwrap());
        assert_eq!(sum.base(), &[0, 1]);
    }

    #[test]
    fn free_sum_rejects_non_embedding() {
        let t1 = ty(3, &[(0, 1)], &[0, 1]);
        let t2 = ty(3, &[(0, 1), (1, 2)], &[0, 1]);
        // base of t2 is an edge; 0 and 2 are not adjacent in t1
        assert!(matches!(free_sum(&t1, &t2, &[0, 2]), Err(Error::NotAnEmbedding(_))));
        assert!(free_sum(&t1, &t2, &[0, 0]).is_err());
    }

    #[test]
    fn free_sum_order_arithmetic() {
        let t1 = ty(5, &[(0, 1), (1, 2), (2, 3), (3, 4)], &[0, 4]);
        let t2 = ty(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], &[0, 1]);
        let sum = free_sum(&t1, &t2, &[1, 2]).unwrap();
        assert_eq!(sum.order(), (2, 5 + 4 - 2));
    }

    #[test]
    fn domination_examples() {
        let t = k4_edge_base();
        let w = dominates(&t, &t).unwrap();
        assert!(!w.strict);

        let path = ty(3, &[(0, 1), (1, 2)], &[0]);
        let edge = ty(2, &[(0, 1)], &[0]);
        let w = dominates(&edge, &path).unwrap();
        assert!(w.strict);
        assert_eq!(w.g, vec![0, 1, 0]);
        assert!(dominates(&path, &edge).is_none());

        let triangle = ty(3, &[(0, 1), (0, 2), (1, 2)], &[0, 1]);
        let p3_off = ty(3, &[(0, 2), (2, 1)], &[0, 1]);
        // base of the triangle type is an edge, base of P3 is a non-edge
        assert!(dominates(&triangle, &p3_off).is_none());
        assert!(dominates(&p3_off, &triangle).is_none());
    }

    #[test]
    fn dominated_transversal_of_path() {
        let path = ty(3, &[(0, 1), (1, 2)], &[0]);
        let tr = dominated_transversal(&path).unwrap();
        let keys: Vec<_> = tr.members.iter().map(type_canonical_form).collect();
        assert!(keys.contains(&type_canonical_form(&path)));
        assert!(keys.contains(&type_canonical_form(&ty(2, &[(0, 1)], &[0]))));
        assert!(keys.contains(&type_canonical_form(&ty(3, &[(0, 1), (1, 2), (0, 2)], &[0]))));
        assert_eq!(tr.members.len(), 3);
        for m in &tr.members {
            assert!(dominates(m, &path).is_some());
        }

        let k2 = ty(2, &[(0, 1)], &[0]);
        assert_eq!(dominated_transversal(&k2).unwrap().members.len(), 1);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_mn_irreducible(&k4_edge_base(), 2, 4).unwrap());
        assert!(is_mn_irreducible(&k4_minus_base_edge(), 2, 4).unwrap());
        // K4 over a single base vertex
        let k4_vertex = GraphType::new(Graph::complete(4).unwrap(), vec![0]).unwrap();
        assert!(!is_mn_irreducible(&k4_vertex, 2, 4).unwrap());
        let k5 = GraphType::new(Graph::complete(5).unwrap(), vec![0, 1, 2]).unwrap();
        assert!(is_mn_irreducible(&k5, 3, 5).unwrap());
        // K4 - e over the shared edge splits into two triangles
        let mut k4e = Graph::complete(4).unwrap();
        k4e.remove_edge(2, 3);
        assert!(!is_mn_irreducible(&GraphType::new(k4e, vec![0, 1]).unwrap(), 2, 3).unwrap());
        assert!(is_mn_irreducible(&k4_vertex, 3, 4).is_ok());
        // an isolated free vertex splits off along the empty base
        assert!(!is_mn_irreducible(&ty(2, &[], &[0]), 1, 2).unwrap());
        assert!(!is_mn_irreducible(&ty(3, &[(0, 1)], &[]), 0, 3).unwrap());
        assert!(is_mn_irreducible(&ty(3, &[(0, 1), (1, 2)], &[]), 0, 3).unwrap());
        let big = GraphType::new(Graph::complete(4).unwrap(), vec![0, 1, 2]).unwrap();
        assert!(is_mn_irreducible(&big, 2, 4).is_err());
    }

    /// Literal enumeration of all three-way splits, independent of the component shortcut.
    fn reducible_by_assignments(t: &GraphType, m: usize, n: usize) -> bool {
        let order = t.theta().order();
        let base = t.base_set();
        let mut assign = vec![0u8; order];
        let total = 3usize.pow(order as u32);
        for code in 0..total {
            let mut c = code;
            for a in assign.iter_mut() {
                *a = (c % 3) as u8;
                c /= 3;
            }
            let set = |k: u8| (0..order).filter(|&v| assign[v] == k).fold(0u128, |s, v| s | 1 << v);
            let (m1, m2, m3) = (set(1), set(2), set(0));
            if base & m2 != 0 || m2 == 0 {
                continue;
            }
            if m3.count_ones() as usize > m || (m2 | m3).count_ones() as usize > n {
                continue;
            }
            if members(m1).any(|v| t.theta().neighbors(v) & m2 != 0) {
                continue;
            }
            if m1 == 0 && m3 == base {
                continue;
            }
            return true;
        }
        false
    }

    #[test]
    fn partition_shortcut_matches_literal_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(2..=6);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(0.5)).unwrap();
            let k = rng.gen_range(0..=n.min(3));
            let mut verts: Vec<usize> = (0..n).collect();
            for i in 0..k {
                let j = rng.gen_range(i..n);
                verts.swap(i, j);
            }
            let t = GraphType::new(g, verts[..k].to_vec()).unwrap();
            let m = rng.gen_range(k..=3);
            let nn = rng.gen_range(n.max(m)..=7);
            assert_eq!(irreducible_by_partition(&t, m, nn), !reducible_by_assignments(&t, m, nn), "{t:?} at ({m},{nn})");
        }
    }

    #[test]
    fn text_and_json_round_trip() {
        let t = ty(5, &[(0, 1), (1, 2), (3, 4)], &[4, 0]);
        assert_eq!(GraphType::from_text(&t.to_text()).unwrap(), t);
        assert_eq!(GraphType::from_json(&t.to_json()).unwrap(), t);
        assert!(GraphType::from_text("D?? 9").is_err());
        assert!(GraphType::from_text("Bw 0,x").is_err());
    }

    #[test]
    fn cocone_count_simple_cases() {
        let gamma = crate::geometry::catalog("petersen").unwrap();
        let t1 = ty(3, &[(0, 1), (1, 2)], &[0]);
        // t2 with base = theta: mu2 is forced
        let t2 = ty(2, &[(0, 1)], &[0, 1]);
        let direct = ExtensionPlan::new(t1.theta(), t1.base()).count(&gamma, &[0]);
        assert_eq!(quotient_cocone_count(&gamma, &t1, &t2, &[1, 2], &[0]).unwrap(), direct);
        assert!(quotient_cocone_count(&gamma, &t1, &t2, &[0, 2], &[0]).is_err());
    }
}
