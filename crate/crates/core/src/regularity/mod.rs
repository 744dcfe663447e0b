//! Extension counting and regularity deciders.
//!
//! `#(Γ,T,κ)` is the number of embeddings of a type's graph into `Γ` that
//! restrict to the base embedding `κ`. Embeddings are ordered injective
//! maps preserving adjacency and non-adjacency, so automorphisms fixing the
//! base are counted separately. `Γ` is `T`-regular when the count does not
//! depend on `κ`; if the base does not embed at all the type is regular with
//! constant 0.
//!
//! `(m,n)`-regularity means `T`-regularity for every type of order `(k,l)`
//! with `k <= m` and `k <= l <= n`. The reduced mode climbs the levels and
//! only tests irreducible types; every other type is implied by smaller ones.

mod conditions;
mod forbidden;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::embed::{for_each_embedding_lex, ExtensionPlan};
use crate::enumerate::{irreducible_types, types_of_order, MAX_ENUMERATION_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::types::GraphType;

pub use conditions::{k_isoregular, subconstituent_regularity_check, t_vertex_condition, t_vertex_condition_direct, t_vertex_condition_ivanov};
pub use forbidden::ForbiddenSubgraphs;

/// Strategy for [`is_mn_regular`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Test every type of every order.
    Naive,
    /// Test only irreducible types, level by level, with forbidden-subgraph pruning.
    Reduced,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Mode::Naive),
            "reduced" => Ok(Mode::Reduced),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Naive => "naive",
            Mode::Reduced => "reduced",
        })
    }
}

/// Two base embeddings with different extension counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// The offending type in text form, for composite checks.
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub type_repr: Option<String>,
    pub kappa1: Vec<usize>,
    pub kappa2: Vec<usize>,
    pub counts: [u64; 2],
}

/// Outcome of one level `(k,l)` of a composite check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub order: [usize; 2],
    /// Types whose counts were compared.
    pub checked: usize,
    /// Types settled by forbidden-subgraph pruning.
    pub pruned: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub subject: String,
    pub holds: bool,
    /// `#(Γ,T)` for a single-type check that holds.
    pub constant: Option<u64>,
    pub witness: Option<Witness>,
    pub levels: Vec<LevelReport>,
}

impl RegularityReport {
    fn composite(subject: String, levels: Vec<LevelReport>, witness: Option<Witness>) -> Self {
        RegularityReport { subject, holds: witness.is_none(), constant: None, witness, levels }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

/// `#(Γ,T,κ)`: embeddings of the type's graph into `gamma` extending `kappa`.
pub fn count_extensions(gamma: &Graph, t: &GraphType, kappa: &[usize]) -> Result<u64> {
    if kappa.len() != t.base().len() || !gamma.is_embedding(&t.base_graph(), kappa) {
        return Err(Error::NotAnEmbedding(format!("{kappa:?} does not embed the base graph")));
    }
    Ok(ExtensionPlan::new(t.theta(), t.base()).count(gamma, kappa))
}

/// Result of comparing counts for one type.
#[derive(Clone, Debug)]
struct TypeOutcome {
    constant: Option<u64>,
    witness: Option<(Vec<usize>, Vec<usize>, [u64; 2])>,
}

fn base_embeddings(gamma: &Graph, t: &GraphType) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_embedding_lex(gamma, &t.base_graph(), &mut |k| {
        out.push(k.to_vec());
        true
    });
    out
}

/// Sequential check, stopping at the first count that differs from the first one.
fn check_type_seq(gamma: &Graph, t: &GraphType) -> TypeOutcome {
    let plan = ExtensionPlan::new(t.theta(), t.base());
    let mut first: Option<(Vec<usize>, u64)> = None;
    let mut witness = None;
    for_each_embedding_lex(gamma, &t.base_graph(), &mut |kappa| {
        let c = plan.count(gamma, kappa);
        match &first {
            None => {
                first = Some((kappa.to_vec(), c));
                true
            }
            Some((k0, c0)) if *c0 != c => {
                witness = Some((k0.clone(), kappa.to_vec(), [*c0, c]));
                false
            }
            Some(_) => true,
        }
    });
    match witness {
        Some(w) => TypeOutcome { constant: None, witness: Some(w) },
        None => TypeOutcome { constant: Some(first.map_or(0, |(_, c)| c)), witness: None },
    }
}

/// Same as [`check_type_seq`], parallel over chunks of base embeddings.
fn check_type_par(gamma: &Graph, t: &GraphType) -> TypeOutcome {
    const CHUNK: usize = 2048;
    let plan = ExtensionPlan::new(t.theta(), t.base());
    let kappas = base_embeddings(gamma, t);
    let Some(k0) = kappas.first() else {
        return TypeOutcome { constant: Some(0), witness: None };
    };
    let c0 = plan.count(gamma, k0);
    for chunk in kappas.chunks(CHUNK) {
        let counts = crate::par::map(chunk, |k| plan.count(gamma, k));
        if let Some(i) = counts.iter().position(|&c| c != c0) {
            return TypeOutcome { constant: None, witness: Some((k0.clone(), chunk[i].clone(), [c0, counts[i]])) };
        }
    }
    TypeOutcome { constant: Some(c0), witness: None }
}

/// Is `gamma` `T`-regular? Vacuously yes, with constant 0, when the base does not embed.
pub fn is_type_regular(gamma: &Graph, t: &GraphType) -> RegularityReport {
    let out = check_type_par(gamma, t);
    RegularityReport {
        subject: format!("type-regular {}", t.to_text()),
        holds: out.witness.is_none(),
        constant: out.constant,
        witness: out.witness.map(|(kappa1, kappa2, counts)| Witness { type_repr: None, kappa1, kappa2, counts }),
        levels: Vec::new(),
    }
}

/// Checks a list of types; returns the level summary and the witness of the first failing type.
fn check_level(gamma: &Graph, order: (usize, usize), types: &[GraphType], prune: Option<&ForbiddenSubgraphs>) -> (LevelReport, Option<Witness>) {
    let outcomes: Vec<Option<TypeOutcome>> = crate::par::map(types, |t| match prune {
        Some(f) if f.excludes(t.theta()) => None,
        _ => Some(check_type_seq(gamma, t)),
    });
    let pruned = outcomes.iter().filter(|o| o.is_none()).count();
    let witness = outcomes.iter().zip(types).find_map(|(o, t)| {
        let (kappa1, kappa2, counts) = o.as_ref()?.witness.clone()?;
        Some(Witness { type_repr: Some(t.to_text()), kappa1, kappa2, counts })
    });
    let level = LevelReport { order: [order.0, order.1], checked: types.len() - pruned, pruned, holds: witness.is_none() };
    (level, witness)
}

fn check_bounds(m: usize, n: usize) -> Result<()> {
    if m > n {
        return Err(Error::OutOfRange(format!("m = {m} exceeds n = {n}")));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OutOfRange(format!("n = {n} exceeds the enumeration limit {MAX_ENUMERATION_ORDER}")));
    }
    Ok(())
}

/// `T`-regularity for every type of order exactly `(m, n)`.
pub fn is_bracket_regular(gamma: &Graph, m: usize, n: usize) -> Result<RegularityReport> {
    check_bounds(m, n)?;
    let types = types_of_order(m, n)?;
    let (level, witness) = check_level(gamma, (m, n), &types, None);
    Ok(RegularityReport::composite(format!("[{m},{n}]-regular"), vec![level], witness))
}

/// `(m,n)`-regularity: `T`-regularity for all types of order `(k,l)` with `k <= m`, `k <= l <= n`.
pub fn is_mn_regular(gamma: &Graph, m: usize, n: usize, mode: Mode) -> Result<RegularityReport> {
    check_bounds(m, n)?;
    let subject = format!("({m},{n})-regular [{mode}]");
    let mut levels = Vec::new();
    match mode {
        Mode::Naive => {
            for k in 1..=m {
                for l in k + 1..=n {
                    let types = types_of_order(k, l)?;
                    log::info!("checking {} types of order ({k},{l})", types.len());
                    let (level, witness) = check_level(gamma, (k, l), &types, None);
                    levels.push(level);
                    if witness.is_some() {
                        return Ok(RegularityReport::composite(subject, levels, witness));
                    }
                }
            }
        }
        Mode::Reduced => {
            let forbidden = ForbiddenSubgraphs::for_graph(gamma);
            for (k, l) in reduced_levels(m, n) {
                let types = irreducible_types(k, l)?;
                log::info!("checking {} irreducible types of order ({k},{l})", types.len());
                let (level, witness) = check_level(gamma, (k, l), &types, Some(&forbidden));
                levels.push(level);
                if witness.is_some() {
                    return Ok(RegularityReport::composite(subject, levels, witness));
                }
            }
        }
    }
    Ok(RegularityReport::composite(subject, levels, None))
}

/// Levels tested by the reduced mode: `(k,k+1)` for `k < m`, then `(m,l)` for `m < l <= n`.
///
/// Types of order `(k,k)` are trivially regular, `(m,m)` follows from
/// `(m-1,m)`, and `(m,l+1)` follows from `(m,l)` plus the irreducible types
/// of order `(m,l+1)`.
pub fn reduced_levels(m: usize, n: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (1..m).map(|k| (k, k + 1)).collect();
    if m >= 1 {
        out.extend((m + 1..=n).map(|l| (m, l)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::catalog;

    fn ty(n: usize, edges: &[(usize, usize)], base: &[usize]) -> GraphType {
        GraphType::new(Graph::from_edges(n, edges).unwrap(), base.to_vec()).unwrap()
    }

    /// All injective maps from the free vertices, checked edge by edge.
    fn brute_count(gamma: &Graph, t: &GraphType, kappa: &[usize]) -> u64 {
        let theta = t.theta();
        let mut img = vec![usize::MAX; theta.order()];
        for (i, &b) in t.base().iter().enumerate() {
            img[b] = kappa[i];
        }
        let free = t.free_vertices();
        fn rec(gamma: &Graph, theta: &Graph, free: &[usize], img: &mut Vec<usize>) -> u64 {
            let Some((&v, rest)) = free.split_first() else {
                let ok = (0..theta.order()).all(|a| (a + 1..theta.order()).all(|b| theta.has_edge(a, b) == gamma.has_edge(img[a], img[b])));
                return ok as u64;
            };
            let mut total = 0;
            for c in 0..gamma.order() {
                if img.contains(&c) {
                    continue;
                }
                img[v] = c;
                total += rec(gamma, theta, rest, img);
                img[v] = usize::MAX;
            }
            total
        }
        rec(gamma, theta, &free, &mut img)
    }

    #[test]
    fn k4_over_edge_in_k5() {
        let k5 = Graph::complete(5).unwrap();
        let t = GraphType::new(Graph::complete(4).unwrap(), vec![0, 1]).unwrap();
        assert_eq!(count_extensions(&k5, &t, &[2, 4]).unwrap(), 6);
        assert_eq!(brute_count(&k5, &t, &[2, 4]), 6);
    }

    #[test]
    fn base_equal_to_theta_counts_one() {
        let p = catalog("petersen").unwrap();
        let t = ty(2, &[(0, 1)], &[0, 1]);
        let (u, v) = p.edges()[0];
        assert_eq!(count_extensions(&p, &t, &[u, v]).unwrap(), 1);
    }

    #[test]
    fn rejects_non_embedding() {
        let p = catalog("petersen").unwrap();
        let t = ty(3, &[(0, 2), (1, 2)], &[0, 1]);
        // an adjacent pair cannot carry a non-edge base
        let (a, b) = (0..10).flat_map(|b| (1..10).map(move |c| (b, c))).find(|&(a, b)| a != b && p.has_edge(a, b)).unwrap();
        assert!(count_extensions(&p, &t, &[a, b]).is_err());
        assert!(count_extensions(&p, &t, &[a]).is_err());
    }

    #[test]
    fn clebsch_mu() {
        let g = catalog("clebsch").unwrap();
        let t = ty(3, &[(0, 2), (1, 2)], &[0, 1]);
        let r = is_type_regular(&g, &t);
        assert!(r.holds);
        assert_eq!(r.constant, Some(2));
    }

    #[test]
    fn petersen_single_types() {
        let p = catalog("petersen").unwrap();
        let mu = is_type_regular(&p, &ty(3, &[(0, 2), (1, 2)], &[0, 1]));
        assert_eq!((mu.holds, mu.constant), (true, Some(1)));
        let star = is_type_regular(&p, &ty(4, &[(0, 1), (0, 2), (0, 3)], &[0]));
        assert_eq!((star.holds, star.constant), (true, Some(6)));
    }

    #[test]
    fn path_is_not_degree_regular() {
        let p3 = Graph::path(3).unwrap();
        let r = is_type_regular(&p3, &ty(2, &[(0, 1)], &[0]));
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!((w.kappa1, w.kappa2, w.counts), (vec![0], vec![1], [1, 2]));
        assert_eq!(r.constant, None);
    }

    #[test]
    fn vacuous_regularity() {
        let c5 = Graph::cycle(5).unwrap();
        let r = is_type_regular(&c5, &ty(3, &[(0, 1), (1, 2), (0, 2)], &[0, 1, 2]));
        assert!(r.holds);
        assert_eq!(r.constant, Some(0));
    }

    #[test]
    fn bracket_examples() {
        assert!(is_bracket_regular(&catalog("petersen").unwrap(), 1, 2).unwrap().holds);
        assert!(is_bracket_regular(&catalog("clebsch").unwrap(), 2, 3).unwrap().holds);
        assert!(is_bracket_regular(&catalog("c5").unwrap(), 2, 3).unwrap().holds);
        assert!(!is_bracket_regular(&Graph::cycle(6).unwrap(), 2, 4).unwrap().holds);
    }

    #[test]
    fn reduced_level_schedule() {
        assert_eq!(reduced_levels(2, 4), vec![(1, 2), (2, 3), (2, 4)]);
        assert_eq!(reduced_levels(3, 3), vec![(1, 2), (2, 3)]);
        assert!(reduced_levels(0, 4).is_empty());
    }

    #[test]
    fn petersen_not_3_4_regular() {
        let p = catalog("petersen").unwrap();
        for mode in [Mode::Naive, Mode::Reduced] {
            let r = is_mn_regular(&p, 3, 4, mode).unwrap();
            assert!(!r.holds, "{mode}");
            assert!(r.witness.is_some());
        }
    }

    #[test]
    fn agrees_with_brute_counting_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = rng.gen_range(3..=7);
            let gamma = Graph::from_fn(n, |_, _| rng.gen_bool(0.5)).unwrap();
            let l = rng.gen_range(2..=4);
            let theta = Graph::from_fn(l, |_, _| rng.gen_bool(0.5)).unwrap();
            let t = GraphType::new(theta, vec![0, 1]).unwrap();
            for kappa in base_embeddings(&gamma, &t) {
                assert_eq!(count_extensions(&gamma, &t, &kappa).unwrap(), brute_count(&gamma, &t, &kappa));
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let r = is_type_regular(&Graph::path(3).unwrap(), &ty(2, &[(0, 1)], &[0]));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["holds"], false);
        assert_eq!(v["witness"]["counts"], serde_json::json!([1, 2]));
        assert!(v.get("levels").is_some());
        assert_eq!("reduced".parse::<Mode>().unwrap(), Mode::Reduced);
        assert!("fast".parse::<Mode>().is_err());
    }
}
