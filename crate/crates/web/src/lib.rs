//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}` so the page needs no exception handling.

use graphreg::enumerate::{enumerate_types, GraphFilter, TypeFilter};
use graphreg::geometry::{
    cameron_characterization, cameron_inequality, catalog, elliptic_quadric_gq, srg_parameters, triad_center_distribution, triad_histogram,
};
use graphreg::io::{from_graph6, to_graph6};
use graphreg::regularity::{k_isoregular, t_vertex_condition};
use graphreg::GraphType;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest input the page will analyse; keeps the tab responsive.
const MAX_ORDER: usize = 40;

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn histogram(h: &std::collections::BTreeMap<usize, u64>) -> Value {
    h.iter().map(|(c, n)| (c.to_string(), json!(n))).collect::<serde_json::Map<_, _>>().into()
}

/// `source` is a catalog name or a graph6 string.
pub fn analyze_json(source: &str, t: usize) -> Result<Value, String> {
    let source = source.trim();
    let g = catalog(source).or_else(|_| from_graph6(source)).map_err(|e| e.to_string())?;
    if g.order() > MAX_ORDER {
        return Err(format!("the demo handles at most {MAX_ORDER} vertices"));
    }
    if !(1..=6).contains(&t) {
        return Err("t must be between 1 and 6".into());
    }
    let tvc = t_vertex_condition(&g, t).map_err(|e| e.to_string())?;
    let ch = cameron_characterization(&g).map_err(|e| e.to_string())?;
    Ok(json!({
        "order": g.order(),
        "edges": g.edge_count(),
        "g6": to_graph6(&g),
        "srg": srg_parameters(&g),
        "t_vertex": tvc,
        "isoregular3": k_isoregular(&g, 3).holds,
        "partial_quadrangle": ch.expected,
        "k4e_free": ch.k4e_free,
        "triads": histogram(&triad_histogram(&g)),
    }))
}

pub fn enumerate_json(m: usize, n: usize, k4e_free: bool, irreducible: bool) -> Result<Value, String> {
    if n > 7 {
        return Err("the demo enumerates up to 7 vertices".into());
    }
    let theta: Vec<GraphFilter> = if k4e_free { vec![GraphFilter::k4e_free()] } else { Vec::new() };
    let types: Vec<TypeFilter> = if irreducible { vec![TypeFilter::irreducible(m, n)] } else { Vec::new() };
    let tr = enumerate_types(m, n, &theta, &types).map_err(|e| e.to_string())?;
    Ok(json!({ "summary": tr.summary(), "types": tr.members.iter().map(GraphType::to_text).collect::<Vec<_>>() }))
}

pub fn quadrangle_json(q: usize) -> Result<Value, String> {
    if !(2..=3).contains(&q) {
        return Err("q must be 2 or 3 in the demo".into());
    }
    let inc = elliptic_quadric_gq(q).map_err(|e| e.to_string())?;
    let g = inc.point_graph().map_err(|e| e.to_string())?;
    let axioms = inc.axioms_report().map_err(|e| e.to_string())?;
    let cameron = match axioms.pq {
        Some(p) => Some(cameron_inequality(p).map_err(|e| e.to_string())?),
        None => None,
    };
    Ok(json!({
        "q": q,
        "points": inc.point_count(),
        "lines": inc.lines().len(),
        "srg": srg_parameters(&g),
        "axioms": axioms,
        "triads": histogram(&triad_center_distribution(&inc).map_err(|e| e.to_string())?),
        "cameron": cameron,
    }))
}

#[wasm_bindgen]
pub fn analyze(source: &str, t: usize) -> String {
    respond(analyze_json(source, t))
}

#[wasm_bindgen]
pub fn enumerate(m: usize, n: usize, k4e_free: bool, irreducible: bool) -> String {
    respond(enumerate_json(m, n, k4e_free, irreducible))
}

#[wasm_bindgen]
pub fn quadrangle(q: usize) -> String {
    respond(quadrangle_json(q))
}
