//! Graphs and graph-types up to isomorphism.
//!
//! Graphs are grown one vertex at a time: every child of a level-`j`
//! representative (a new vertex joined to some subset) is canonicalised and
//! duplicates are merged, so each level holds exactly one graph per class.
//! Hereditary filters prune during growth.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::connectivity::{for_each_subset, is_k_connected};
use crate::embed::{contains_induced, k4_minus_edge};
use crate::error::{Error, Result};
use crate::graph::{members, Graph};
use crate::types::{irreducible_by_closure, is_mn_irreducible, type_canonical_form, GraphType};

/// Largest order handled by the generators.
pub const MAX_ENUMERATION_ORDER: usize = 8;

type GraphPred = dyn Fn(&Graph) -> bool + Send + Sync;
type TypePred = dyn Fn(&GraphType) -> bool + Send + Sync;

/// Named predicate on graphs. A hereditary filter holds for every induced
/// subgraph of a graph it holds for, which allows pruning during growth.
#[derive(Clone)]
pub struct GraphFilter {
    name: String,
    hereditary: bool,
    pred: Arc<GraphPred>,
}

impl GraphFilter {
    pub fn new(name: impl Into<String>, hereditary: bool, pred: impl Fn(&Graph) -> bool + Send + Sync + 'static) -> Self {
        GraphFilter { name: name.into(), hereditary, pred: Arc::new(pred) }
    }

    /// No induced `K4 - e`.
    pub fn k4e_free() -> Self {
        let k4e = k4_minus_edge();
        GraphFilter::new("theta-k4e-free", true, move |g| !contains_induced(g, &k4e))
    }

    pub fn k_connected(k: usize) -> Self {
        GraphFilter::new(format!("{k}-connected"), false, move |g| is_k_connected(g, k))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_hereditary(&self) -> bool {
        self.hereditary
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        (self.pred)(g)
    }
}

impl fmt::Debug for GraphFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphFilter({})", self.name)
    }
}

/// Named predicate on graph-types.
#[derive(Clone)]
pub struct TypeFilter {
    name: String,
    pred: Arc<TypePred>,
}

impl TypeFilter {
    pub fn new(name: impl Into<String>, pred: impl Fn(&GraphType) -> bool + Send + Sync + 'static) -> Self {
        TypeFilter { name: name.into(), pred: Arc::new(pred) }
    }

    /// `(m,n)`-irreducible.
    pub fn irreducible(m: usize, n: usize) -> Self {
        TypeFilter::new(format!("({m},{n})-irreducible"), move |t| is_mn_irreducible(t, m, n).unwrap_or(false))
    }

    /// The closure (base made complete) is `k`-connected.
    pub fn closure_connected(k: usize) -> Self {
        TypeFilter::new(format!("closure-{k}-connected"), move |t| is_k_connected(&t.closure(), k))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn accepts(&self, t: &GraphType) -> bool {
        (self.pred)(t)
    }
}

impl fmt::Debug for TypeFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeFilter({})", self.name)
    }
}

/// Duplicate-free canonical representatives of graph-type classes.
#[derive(Clone, Debug, Serialize)]
pub struct TypeTransversal {
    /// `(m, n)` bounds the members were drawn from.
    pub order: (usize, usize),
    pub filters: Vec<String>,
    pub members: Vec<GraphType>,
}

impl TypeTransversal {
    /// Canonicalises, deduplicates and sorts by `(order, canonical key)`.
    pub fn from_members(order: (usize, usize), filters: Vec<String>, members: Vec<GraphType>) -> Self {
        let mut keyed: Vec<(usize, CanonicalForm, GraphType)> = members
            .into_iter()
            .map(|t| {
                let c = t.canonical();
                (c.theta().order(), type_canonical_form(&c), c)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        keyed.dedup_by(|a, b| a.1 == b.1);
        TypeTransversal { order, filters, members: keyed.into_iter().map(|(_, _, t)| t).collect() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Summary object `{order, filters, count}`.
    pub fn summary(&self) -> serde_json::Value {
        serde_json::json!({ "order": [self.order.0, self.order.1], "filters": self.filters, "count": self.members.len() })
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OutOfRange(format!("enumeration supports orders up to {MAX_ENUMERATION_ORDER}, got {n}")));
    }
    Ok(())
}

fn canonical_graph(g: &Graph) -> (CanonicalForm, Graph) {
    let lab = canonical_labeling(g, None);
    let c = lab.apply(g);
    (lab.form, c)
}

fn grow(level: &[Graph], keep: &(dyn Fn(&Graph) -> bool + Sync)) -> Vec<Graph> {
    let children: Vec<Vec<(CanonicalForm, Graph)>> = crate::par::map(level, |parent| {
        let j = parent.order();
        let mut local = HashSet::new();
        let mut out = Vec::new();
        for nbrs in 0..(1u128 << j) {
            let mut child = parent.clone();
            child.push_vertex(nbrs).expect("order stays within bounds");
            if !keep(&child) {
                continue;
            }
            let (form, canon) = canonical_graph(&child);
            if local.insert(form.clone()) {
                out.push((form, canon));
            }
        }
        out
    });
    let mut seen = HashSet::new();
    let mut next: Vec<(CanonicalForm, Graph)> = children.into_iter().flatten().filter(|(f, _)| seen.insert(f.clone())).collect();
    next.sort_by(|a, b| a.0.cmp(&b.0));
    next.into_iter().map(|(_, g)| g).collect()
}

/// One canonical representative per isomorphism class of order `n`, sorted by canonical key.
pub fn all_graphs(n: usize) -> Result<&'static [Graph]> {
    check_order(n)?;
    static LEVELS: OnceLock<Mutex<Vec<&'static [Graph]>>> = OnceLock::new();
    let mut levels = LEVELS.get_or_init(|| Mutex::new(vec![Box::leak(vec![Graph::empty(0).unwrap()].into_boxed_slice())])).lock().unwrap();
    while levels.len() <= n {
        let next = grow(levels.last().unwrap(), &|_| true);
        log::debug!("{} graphs of order {}", next.len(), levels.len());
        levels.push(Box::leak(next.into_boxed_slice()));
    }
    Ok(levels[n])
}

/// Representatives of order `n` accepted by `filter`. Hereditary filters
/// prune every intermediate level.
pub fn enumerate_graphs(n: usize, filter: Option<&GraphFilter>) -> Result<Vec<Graph>> {
    check_order(n)?;
    match filter {
        None => Ok(all_graphs(n)?.to_vec()),
        Some(f) if f.is_hereditary() => {
            let mut level = vec![Graph::empty(0)?];
            for _ in 0..n {
                level = grow(&level, &|g| f.accepts(g));
            }
            Ok(level)
        }
        Some(f) => Ok(all_graphs(n)?.iter().filter(|g| f.accepts(g)).cloned().collect()),
    }
}

/// All graph-type classes of order exactly `(m, n)` whose graph passes
/// every `theta_filters` entry and whose type passes every `type_filters` entry.
pub fn enumerate_types(m: usize, n: usize, theta_filters: &[GraphFilter], type_filters: &[TypeFilter]) -> Result<TypeTransversal> {
    if m > n {
        return Err(Error::OutOfRange(format!("base size {m} exceeds order {n}")));
    }
    check_order(n)?;
    let thetas = match theta_filters.iter().find(|f| f.is_hereditary()) {
        Some(h) => enumerate_graphs(n, Some(h))?,
        None => all_graphs(n)?.to_vec(),
    };
    let thetas: Vec<Graph> = thetas.into_iter().filter(|g| theta_filters.iter().all(|f| f.accepts(g))).collect();
    let per_theta: Vec<Vec<GraphType>> = crate::par::map(&thetas, |theta| {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for_each_subset(n, m, &mut |base| {
            let t = GraphType::new(theta.clone(), members(base).collect()).expect("valid base");
            if type_filters.iter().all(|f| f.accepts(&t)) {
                let c = t.canonical();
                if seen.insert(type_canonical_form(&c)) {
                    out.push(c);
                }
            }
            true
        });
        out
    });
    let filters = theta_filters.iter().map(|f| f.name.clone()).chain(type_filters.iter().map(|f| f.name.clone())).collect();
    Ok(TypeTransversal::from_members((m, n), filters, per_theta.into_iter().flatten().collect()))
}

/// Bound on the number of type classes of order `(m, n)`: graphs of order `n` times `C(n, m)`.
pub fn type_class_bound(m: usize, n: usize) -> Result<u64> {
    let graphs = all_graphs(n)?.len() as u64;
    let binom = (0..m as u64).fold(1u64, |acc, i| acc * (n as u64 - i) / (i + 1));
    Ok(graphs * binom)
}

type TypeCache = Mutex<HashMap<(usize, usize), Arc<Vec<GraphType>>>>;

fn cached(cache: &'static OnceLock<TypeCache>, key: (usize, usize), build: impl FnOnce() -> Result<Vec<GraphType>>) -> Result<Arc<Vec<GraphType>>> {
    let map = cache.get_or_init(Default::default);
    if let Some(v) = map.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let built = Arc::new(build()?);
    Ok(map.lock().unwrap().entry(key).or_insert(built).clone())
}

/// Every type class of order `(m, n)`, cached.
pub fn types_of_order(m: usize, n: usize) -> Result<Arc<Vec<GraphType>>> {
    static CACHE: OnceLock<TypeCache> = OnceLock::new();
    cached(&CACHE, (m, n), || Ok(enumerate_types(m, n, &[], &[])?.members))
}

/// The `(m,n)`-irreducible type classes of order `(m, n)`, cached.
pub fn irreducible_types(m: usize, n: usize) -> Result<Arc<Vec<GraphType>>> {
    static CACHE: OnceLock<TypeCache> = OnceLock::new();
    cached(&CACHE, (m, n), || Ok(enumerate_types(m, n, &[], &[TypeFilter::irreducible(m, n)])?.members))
}

/// `(3,l)`-irreducible types of order `(3,l)` whose graph has no induced `K4 - e`.
pub fn irreducible_k4e_free_types(l: usize) -> Result<TypeTransversal> {
    if !(5..=7).contains(&l) {
        return Err(Error::OutOfRange(format!("l must be 5, 6 or 7, got {l}")));
    }
    enumerate_types(3, l, &[GraphFilter::k4e_free()], &[TypeFilter::irreducible(3, l)])
}

/// Types of order `(2, t+1)` whose closure is 3-connected: the candidates
/// that remain when lifting the t-vertex condition to `t + 1`.
pub fn reduced_tvc_list(t: usize) -> Result<TypeTransversal> {
    if !(2..=6).contains(&t) {
        return Err(Error::OutOfRange(format!("t must lie in 2..=6, got {t}")));
    }
    let list = enumerate_types(2, t + 1, &[], &[TypeFilter::closure_connected(3)])?;
    debug_assert!(t + 1 < 4 || list.members.iter().all(|ty| irreducible_by_closure(ty, 2, t + 1) == Some(true)));
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    fn brute_classes(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let mut forms = HashSet::new();
        for mask in 0u64..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            forms.insert(canonical_form(&Graph::from_edges(n, &edges).unwrap(), None));
        }
        forms.len()
    }

    #[test]
    fn graph_counts_by_order() {
        let counts: Vec<usize> = (0..=7).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn generator_matches_brute_force() {
        for n in 0..=5 {
            assert_eq!(all_graphs(n).unwrap().len(), brute_classes(n));
            let forms: HashSet<_> = all_graphs(n).unwrap().iter().map(|g| canonical_form(g, None)).collect();
            assert_eq!(forms.len(), all_graphs(n).unwrap().len());
        }
    }

    #[test]
    fn rejects_large_orders() {
        assert!(all_graphs(9).is_err());
        assert!(enumerate_types(3, 2, &[], &[]).is_err());
    }

    #[test]
    fn hereditary_pruning_agrees_with_post_filtering() {
        let f = GraphFilter::k4e_free();
        for n in 4..=6 {
            let pruned = enumerate_graphs(n, Some(&f)).unwrap();
            let post: Vec<_> = all_graphs(n).unwrap().iter().filter(|g| f.accepts(g)).cloned().collect();
            assert_eq!(pruned, post);
        }
    }

    #[test]
    fn types_of_order_2_4_match_brute_force() {
        let mut forms = HashSet::new();
        for g in all_graphs(4).unwrap() {
            for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
                forms.insert(type_canonical_form(&GraphType::new(g.clone(), vec![a, b]).unwrap()));
            }
        }
        let tr = enumerate_types(2, 4, &[], &[]).unwrap();
        assert_eq!(tr.len(), forms.len());
        assert!(tr.len() as u64 <= type_class_bound(2, 4).unwrap());
    }

    #[test]
    fn irreducible_2_4_pair() {
        let tr = enumerate_types(2, 4, &[], &[TypeFilter::irreducible(2, 4)]).unwrap();
        assert_eq!(tr.len(), 2);
        for t in &tr.members {
            assert_eq!(t.closure(), Graph::complete(4).unwrap());
        }
        let via_closure = enumerate_types(2, 4, &[], &[TypeFilter::closure_connected(3)]).unwrap();
        let a: Vec<_> = tr.members.iter().map(type_canonical_form).collect();
        let b: Vec<_> = via_closure.members.iter().map(type_canonical_form).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn k4e_free_irreducible_at_3_5() {
        let tr = irreducible_k4e_free_types(5).unwrap();
        assert_eq!(tr.len(), 1);
        assert_eq!(tr.members[0].theta(), &Graph::complete(5).unwrap());
    }

    #[test]
    fn transversal_is_sorted_and_bounded() {
        for (m, n) in [(1, 3), (2, 5), (3, 5)] {
            let tr = enumerate_types(m, n, &[], &[]).unwrap();
            let keys: Vec<_> = tr.members.iter().map(type_canonical_form).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(keys, sorted);
            assert!(tr.len() as u64 <= type_class_bound(m, n).unwrap());
            assert!(tr.members.iter().all(|t| t.order() == (m, n)));
        }
    }

    #[test]
    fn reduced_five_vertex_list_pairs_by_base_edge() {
        let list = reduced_tvc_list(4).unwrap();
        assert_eq!(list.len(), 10);
        // toggling the base pair is an involution on the list without fixed points
        let forms: Vec<_> = list.members.iter().map(type_canonical_form).collect();
        for t in &list.members {
            let (a, b) = (t.base()[0], t.base()[1]);
            let mut theta = t.theta().clone();
            if theta.has_edge(a, b) {
                theta.remove_edge(a, b);
            } else {
                theta.add_edge(a, b);
            }
            let partner = GraphType::new(theta, t.base().to_vec()).unwrap();
            assert!(forms.contains(&type_canonical_form(&partner)), "{t:?}");
        }
    }
}
