//! Triads of partial quadrangles and Cameron's inequality.
//!
//! For a partial quadrangle PQ(s,t,μ) fix two non-collinear points `x`,
//! `y`. There are `N = s²t(t+1)/μ + μ - 1 - (t+1)s` points `z` collinear
//! with neither, each giving a triad `{x,y,z}` with `c(z)` centres. Double
//! counting gives `Σc = μ·s(t-1)` and `Σc(c-1) = μ(μ-1)(μ-2)`, and
//! Cauchy–Schwarz `(Σc)² <= N·Σc²` becomes
//!
//! `(s(t-1) + (μ-1)(μ-2))·N >= μ(t-1)²s²`,
//!
//! with equality iff every triad has the same number
//! `c = 1 + (μ-1)(μ-2)/(s(t-1))` of centres.
//!
//! The published display of this inequality uses a different denominator;
//! [`cameron_inequality`] evaluates it as well so both can be compared.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph};

use super::incidence::IncidenceStructure;

pub type Rational = Ratio<i128>;

/// Parameters `(s, t, μ)` of a partial quadrangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PQParams {
    pub s: usize,
    pub t: usize,
    pub mu: usize,
}

fn ser_ratio<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_opt_ratio<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// The displayed form `(s(t-1)+(μ-1)(μ-2))·((t+1)ts²)/(μ-1-(t+1)s+μ) >= μ(t-1)²s²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedForm {
    #[serde(serialize_with = "ser_ratio")]
    pub denominator: Rational,
    /// `None` when the denominator vanishes.
    #[serde(serialize_with = "ser_opt_ratio")]
    pub lhs: Option<Rational>,
    #[serde(serialize_with = "ser_ratio")]
    pub rhs: Rational,
    /// The denominator is zero or negative, so the display cannot be meant literally.
    pub denominator_nonpositive: bool,
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CameronReport {
    pub params: PQParams,
    /// Triads through a fixed non-collinear pair.
    #[serde(serialize_with = "ser_ratio")]
    pub triads_per_pair: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub rhs: Rational,
    pub holds: bool,
    pub equality: bool,
    /// `1 + (μ-1)(μ-2)/(s(t-1))`; `None` when `s(t-1) = 0`.
    #[serde(serialize_with = "ser_opt_ratio")]
    pub c: Option<Rational>,
    pub c_integral: Option<bool>,
    pub printed: PrintedForm,
}

fn r(n: i128) -> Rational {
    Rational::from_integer(n)
}

/// Evaluates the inequality exactly. Fails only for `μ = 0`.
pub fn cameron_inequality(p: PQParams) -> Result<CameronReport> {
    if p.mu == 0 {
        return Err(Error::DivisionByZero("s²t(t+1)/μ with μ = 0".into()));
    }
    let (s, t, mu) = (r(p.s as i128), r(p.t as i128), r(p.mu as i128));
    let one = Rational::one();
    let n = s * s * t * (t + one) / mu + mu - one - (t + one) * s;
    let factor = s * (t - one) + (mu - one) * (mu - r(2));
    let lhs = factor * n;
    let rhs = mu * (t - one) * (t - one) * s * s;
    let st1 = s * (t - one);
    let c = (!st1.is_zero()).then(|| one + (mu - one) * (mu - r(2)) / st1);

    let denominator = mu - one - (t + one) * s + mu;
    let printed_lhs = (!denominator.is_zero()).then(|| factor * ((t + one) * t * s * s) / denominator);
    let printed =
        PrintedForm { denominator, lhs: printed_lhs, rhs, denominator_nonpositive: denominator <= Rational::zero(), holds: printed_lhs.map(|l| l >= rhs) };
    Ok(CameronReport { params: p, triads_per_pair: n, lhs, rhs, holds: lhs >= rhs, equality: lhs == rhs, c, c_integral: c.map(|c| c.is_integer()), printed })
}

/// Histogram `centres -> number of triads` over all unordered triads of the point graph.
pub fn triad_center_distribution(inc: &IncidenceStructure) -> Result<BTreeMap<usize, u64>> {
    Ok(triad_histogram(&inc.point_graph()?))
}

/// Same as [`triad_center_distribution`] for a graph read as collinearity.
pub fn triad_histogram(g: &Graph) -> BTreeMap<usize, u64> {
    let n = g.order();
    let all = g.vertex_set();
    let rows: Vec<BTreeMap<usize, u64>> = crate::par::map(&(0..n).collect::<Vec<_>>(), |&x| {
        let mut hist = BTreeMap::new();
        let far_x = all & !g.neighbors(x) & !bit(x);
        for y in members(far_x).filter(|&y| y > x) {
            let far_xy = far_x & !g.neighbors(y) & !bit(y);
            for z in members(far_xy).filter(|&z| z > y) {
                let centres = (g.neighbors(x) & g.neighbors(y) & g.neighbors(z)).count_ones() as usize;
                *hist.entry(centres).or_insert(0) += 1;
            }
        }
        hist
    });
    let mut out = BTreeMap::new();
    for row in rows {
        for (k, v) in row {
            *out.entry(k).or_insert(0) += v;
        }
    }
    out
}
