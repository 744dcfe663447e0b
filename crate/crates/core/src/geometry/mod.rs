//! Finite geometry: incidence structures, quadric models of GQ(q,q²),
//! strongly regular parameters, triads and named fixture graphs.

mod cameron;
mod field;
mod incidence;
mod quadric;

use serde::Serialize;

use crate::embed::{contains_induced, k4_minus_edge};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use cameron::{cameron_inequality, triad_center_distribution, triad_histogram, CameronReport, PQParams, PrintedForm, Rational};
pub use field::Field;
pub use incidence::{lines_from_point_graph, AxiomsReport, IncidenceStructure, PLSParams};
pub use quadric::{elliptic_quadric_gq, singular_points, EllipticForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k(k - λ - 1) = (v - k - 1)μ`.
    pub fn is_feasible(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}

/// `(v, k, λ, μ)` if `gamma` is strongly regular. Graphs without edges or
/// without non-edges have an undefined `λ` or `μ` and yield `None`.
pub fn srg_parameters(gamma: &Graph) -> Option<SrgParams> {
    let k = gamma.regular_degree()?;
    let mut lambda = None;
    let mut mu = None;
    for u in 0..gamma.order() {
        for v in u + 1..gamma.order() {
            let c = (gamma.neighbors(u) & gamma.neighbors(v)).count_ones() as usize;
            let slot = if gamma.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams { v: gamma.order(), k, lambda: lambda?, mu: mu? })
}

/// Outcome of the partial-quadrangle characterisation of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CameronCharacterization {
    /// Strongly regular with `μ > 0` and no induced `K4 - e`.
    pub holds: bool,
    pub srg: Option<SrgParams>,
    pub k4e_free: bool,
    /// `(λ+1, k/(λ+1) - 1, μ)` when `holds`.
    pub expected: Option<PQParams>,
    /// Axioms of the structure whose lines are the maximal cliques, when `holds`.
    pub axioms: Option<AxiomsReport>,
    /// The reconstructed structure is a PQ with the expected parameters and the original point graph.
    pub reconstruction_consistent: Option<bool>,
}

/// A strongly regular graph with `μ > 0` is the point graph of a partial
/// quadrangle iff it has no induced `K4 - e`; the lines are then its maximal cliques.
pub fn cameron_characterization(gamma: &Graph) -> Result<CameronCharacterization> {
    let srg = srg_parameters(gamma);
    let k4e_free = !contains_induced(gamma, &k4_minus_edge());
    let holds = k4e_free && srg.is_some_and(|p| p.mu > 0);
    let mut out = CameronCharacterization { holds, srg, k4e_free, expected: None, axioms: None, reconstruction_consistent: None };
    if let (true, Some(p)) = (holds, srg) {
        let expected = PQParams { s: p.lambda + 1, t: p.k / (p.lambda + 1) - 1, mu: p.mu };
        let inc = lines_from_point_graph(gamma)?;
        let axioms = inc.axioms_report()?;
        out.reconstruction_consistent = Some(axioms.pq == Some(expected) && inc.point_graph()? == *gamma);
        out.expected = Some(expected);
        out.axioms = Some(axioms);
    }
    Ok(out)
}

/// Names accepted by [`catalog`].
pub const CATALOG: &[&str] = &["petersen", "clebsch", "c5", "rook3x3", "gq24", "schlafli_complement"];

/// Named fixture graphs, each from a direct construction:
/// `petersen` (Kneser graph K(5,2)), `clebsch` (GF(2)^4, adjacent when the
/// difference has weight 1 or 4), `c5`, `rook3x3` (K3 □ K3), `gq24` and its
/// alias `schlafli_complement` (point graph of the elliptic quadric over GF(2)).
pub fn catalog(name: &str) -> Result<Graph> {
    match name {
        "petersen" => {
            let pairs: Vec<u32> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (1 << a) | (1 << b))).collect();
            Graph::from_fn(pairs.len(), |u, v| pairs[u] & pairs[v] == 0)
        }
        "clebsch" => Graph::from_fn(16, |u, v| matches!((u ^ v).count_ones(), 1 | 4)),
        "c5" => Graph::cycle(5),
        "rook3x3" => Graph::from_fn(9, |u, v| u / 3 == v / 3 || u % 3 == v % 3),
        "gq24" | "schlafli_complement" => elliptic_quadric_gq(2)?.point_graph(),
        other => Err(Error::UnknownName(other.to_string())),
    }
}
