//! Incidence structures (points and lines) and the axioms of partial
//! linear spaces, generalized quadrangles and partial quadrangles.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::{bit, members, set_of, Graph, VertexSet};

use super::cameron::PQParams;

/// Points `0..points`, lines as sorted point lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceStructure {
    points: usize,
    lines: Vec<Vec<usize>>,
}

/// Order `(s, t)` of a partial linear space: `s+1` points per line, `t+1` lines per point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PLSParams {
    pub s: usize,
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomsReport {
    pub pls: Option<PLSParams>,
    /// Generalized quadrangle of order `pls`.
    pub gq: bool,
    pub pq: Option<PQParams>,
    /// First violation found for each failed axiom.
    pub violations: Vec<String>,
}

impl IncidenceStructure {
    /// Sorts each line; rejects empty or repeated lines and out-of-range points.
    pub fn new(points: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(lines.len());
        for mut line in lines {
            line.sort_unstable();
            line.dedup();
            if line.is_empty() {
                return Err(Error::Malformed("empty line".into()));
            }
            if let Some(&p) = line.iter().find(|&&p| p >= points) {
                return Err(Error::VertexOutOfRange { vertex: p, n: points });
            }
            if !seen.insert(line.clone()) {
                return Err(Error::Malformed(format!("repeated line {line:?}")));
            }
            out.push(line);
        }
        Ok(IncidenceStructure { points, lines: out })
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// Lines through each point.
    pub fn lines_through(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.points];
        for (i, l) in self.lines.iter().enumerate() {
            for &p in l {
                out[p].push(i);
            }
        }
        out
    }

    /// Collinearity graph.
    pub fn point_graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(self.points)?;
        for l in &self.lines {
            for (i, &a) in l.iter().enumerate() {
                for &b in &l[i + 1..] {
                    if !g.has_edge(a, b) {
                        g.add_edge(a, b);
                    }
                }
            }
        }
        Ok(g)
    }

    /// `"p l"` header, then one line of point ids per geometric line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.points, self.lines.len());
        for l in &self.lines {
            let ids: Vec<String> = l.iter().map(usize::to_string).collect();
            s.push_str(&ids.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut rows = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = rows.next().ok_or_else(|| Error::Malformed("missing `p l` header".into()))?;
        let nums = parse_ids(header)?;
        let [p, l] = nums[..] else {
            return Err(Error::Malformed(format!("bad header `{header}`")));
        };
        let lines: Vec<Vec<usize>> = rows.map(parse_ids).collect::<Result<_>>()?;
        if lines.len() != l {
            return Err(Error::Malformed(format!("header announces {l} lines, found {}", lines.len())));
        }
        IncidenceStructure::new(p, lines)
    }

    /// Checks the PLS, GQ and PQ axioms.
    pub fn axioms_report(&self) -> Result<AxiomsReport> {
        let mut violations = Vec::new();
        let pls = self.pls_params(&mut violations);
        let g = self.point_graph()?;
        let mut gq = pls.is_some();
        let mut pq1 = pls.is_some();
        if pls.is_some() {
            'outer: for p in 0..self.points {
                for (i, l) in self.lines.iter().enumerate() {
                    if l.contains(&p) {
                        continue;
                    }
                    let seen = (g.neighbors(p) & set_of(l)).count_ones();
                    if gq && seen != 1 {
                        gq = false;
                        violations.push(format!("GQ: point {p} is collinear with {seen} points of line {i}"));
                    }
                    if pq1 && seen > 1 {
                        pq1 = false;
                        violations.push(format!("PQ: point {p} is collinear with {seen} points of line {i}"));
                    }
                    if !gq && !pq1 {
                        break 'outer;
                    }
                }
            }
        }
        let pq = match (pls, pq1) {
            (Some(PLSParams { s, t }), true) => match constant_mu(&g) {
                Ok(Some(mu)) => Some(PQParams { s, t, mu }),
                Ok(None) => None,
                Err(msg) => {
                    violations.push(format!("PQ: {msg}"));
                    None
                }
            },
            _ => None,
        };
        Ok(AxiomsReport { pls, gq, pq, violations })
    }

    fn pls_params(&self, violations: &mut Vec<String>) -> Option<PLSParams> {
        let mut ok = true;
        let sizes: BTreeMap<usize, usize> = self.lines.iter().fold(BTreeMap::new(), |mut m, l| {
            *m.entry(l.len()).or_insert(0) += 1;
            m
        });
        if sizes.len() != 1 {
            ok = false;
            violations.push(format!("PLS: line sizes {sizes:?}"));
        }
        let through = self.lines_through();
        let degrees: HashSet<usize> = through.iter().map(Vec::len).collect();
        if degrees.len() != 1 || degrees.contains(&0) {
            ok = false;
            violations.push(format!("PLS: lines per point {degrees:?}"));
        }
        let mut covered: Vec<VertexSet> = vec![0; self.points];
        'pairs: for l in &self.lines {
            for (i, &a) in l.iter().enumerate() {
                for &b in &l[i + 1..] {
                    if covered[a] & bit(b) != 0 {
                        ok = false;
                        violations.push(format!("PLS: points {a} and {b} lie on two lines"));
                        break 'pairs;
                    }
                    covered[a] |= bit(b);
                    covered[b] |= bit(a);
                }
            }
        }
        ok.then(|| PLSParams { s: sizes.keys().next().copied().unwrap_or(1).saturating_sub(1), t: degrees.into_iter().next().unwrap_or(1) - 1 })
    }
}

fn parse_ids(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace().map(|t| t.parse().map_err(|_| Error::Malformed(format!("not a number: `{t}`")))).collect()
}

/// Common neighbour count of non-adjacent pairs if constant; `Ok(None)` when there are no such pairs.
fn constant_mu(g: &Graph) -> std::result::Result<Option<usize>, String> {
    let mut mu = None;
    for u in 0..g.order() {
        for v in members(g.vertex_set() & !g.neighbors(u) & !bit(u)).filter(|&v| v > u) {
            let c = (g.neighbors(u) & g.neighbors(v)).count_ones() as usize;
            match mu {
                None => mu = Some(c),
                Some(m) if m != c => return Err(format!("non-collinear pairs have {m} and {c} common neighbours")),
                _ => {}
            }
        }
    }
    Ok(mu)
}

/// Points are the vertices, lines the maximal cliques.
pub fn lines_from_point_graph(gamma: &Graph) -> Result<IncidenceStructure> {
    IncidenceStructure::new(gamma.order(), maximal_cliques(gamma))
}
