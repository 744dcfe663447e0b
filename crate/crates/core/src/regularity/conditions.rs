//! Classical conditions expressed through type regularity, each with a
//! direct combinatorial check alongside.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::canon::{canonical_form, CanonicalForm};
use crate::connectivity::for_each_subset;
use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, Subconstituent, VertexSet};

use super::{is_bracket_regular, is_mn_regular, LevelReport, Mode, RegularityReport, Witness};

/// The t-vertex condition, decided as `(min(2,t), t)`-regularity in reduced mode.
pub fn t_vertex_condition(gamma: &Graph, t: usize) -> Result<RegularityReport> {
    if t == 0 {
        return Err(Error::OutOfRange("t must be at least 1".into()));
    }
    let mut r = is_mn_regular(gamma, t.min(2), t, Mode::Reduced)?;
    r.subject = format!("{t}-vertex condition");
    Ok(r)
}

type Histogram = BTreeMap<CanonicalForm, u64>;

/// The t-vertex condition from its definition: for every ordered pair
/// `(x, y)` (possibly `x = y`) the multiset of isomorphism types of induced
/// subgraphs on at most `t` vertices containing `x` and `y`, with `x`, `y`
/// marked, depends only on whether `x = y`, `x ~ y` or neither.
pub fn t_vertex_condition_direct(gamma: &Graph, t: usize) -> RegularityReport {
    let n = gamma.order();
    let mut reference: [Option<(Vec<usize>, Histogram)>; 3] = [None, None, None];
    let mut witness = None;
    'pairs: for x in 0..n {
        for y in 0..n {
            let relation = if x == y {
                0
            } else if gamma.has_edge(x, y) {
                1
            } else {
                2
            };
            let hist = pair_histogram(gamma, x, y, t);
            match &reference[relation] {
                None => reference[relation] = Some((vec![x, y], hist)),
                Some((pair, h0)) if *h0 != hist => {
                    let differing = h0.keys().chain(hist.keys()).find(|k| h0.get(*k) != hist.get(*k)).expect("histograms differ");
                    let counts = [h0.get(differing).copied().unwrap_or(0), hist.get(differing).copied().unwrap_or(0)];
                    witness = Some(Witness { type_repr: None, kappa1: pair.clone(), kappa2: vec![x, y], counts });
                    break 'pairs;
                }
                Some(_) => {}
            }
        }
    }
    RegularityReport { subject: format!("{t}-vertex condition (direct)"), holds: witness.is_none(), constant: None, witness, levels: Vec::new() }
}

fn pair_histogram(gamma: &Graph, x: usize, y: usize, t: usize) -> Histogram {
    let fixed: VertexSet = bit(x) | bit(y);
    let rest: Vec<usize> = (0..gamma.order()).filter(|&v| fixed & bit(v) == 0).collect();
    let base = fixed.count_ones() as usize;
    let mut hist = BTreeMap::new();
    for extra in 0..=t.saturating_sub(base).min(rest.len()) {
        for_each_subset(rest.len(), extra, &mut |pick| {
            let mut set = fixed;
            for i in members(pick) {
                set |= bit(rest[i]);
            }
            let order: Vec<usize> = members(set).collect();
            let colors: Vec<u32> = order
                .iter()
                .map(|&v| {
                    if x == y && v == x {
                        3
                    } else if v == x {
                        1
                    } else if v == y {
                        2
                    } else {
                        0
                    }
                })
                .collect();
            *hist.entry(canonical_form(&gamma.induced_ordered(&order), Some(&colors))).or_insert(0) += 1;
            true
        });
    }
    hist
}

/// Ivanov's reduction: a regular graph satisfies the t-vertex condition iff
/// it is `[2,l]`-regular for every `2 <= l <= t`.
pub fn t_vertex_condition_ivanov(gamma: &Graph, t: usize) -> Result<RegularityReport> {
    if t < 2 {
        return Err(Error::OutOfRange("the reduction needs t >= 2".into()));
    }
    let subject = format!("{t}-vertex condition (regular and [2,l]-regular)");
    let degrees = gamma.degree_sequence();
    if let Some(i) = degrees.iter().position(|&d| d != degrees[0]) {
        let witness = Witness { type_repr: Some("degree".into()), kappa1: vec![0], kappa2: vec![i], counts: [degrees[0] as u64, degrees[i] as u64] };
        return Ok(RegularityReport::composite(subject, Vec::new(), Some(witness)));
    }
    let mut levels = Vec::new();
    for l in 3..=t {
        let r = is_bracket_regular(gamma, 2, l)?;
        levels.extend(r.levels);
        if r.witness.is_some() {
            return Ok(RegularityReport::composite(subject, levels, r.witness));
        }
    }
    Ok(RegularityReport::composite(subject, levels, None))
}

/// k-isoregularity from its definition: for every vertex set `X` with
/// `1 <= |X| <= k`, the number of vertices outside `X` adjacent to all of
/// `X` depends only on the isomorphism type of the subgraph induced by `X`.
pub fn k_isoregular(gamma: &Graph, k: usize) -> RegularityReport {
    let n = gamma.order();
    let mut seen: HashMap<CanonicalForm, (Vec<usize>, u64)> = HashMap::new();
    let mut witness = None;
    'sizes: for size in 1..=k.min(n) {
        let mut found = None;
        for_each_subset(n, size, &mut |x| {
            let verts: Vec<usize> = members(x).collect();
            let count = gamma.common_neighbor_set(x).count_ones() as u64;
            let form = canonical_form(&gamma.induced_ordered(&verts), None);
            match seen.get(&form) {
                Some((first, c)) if *c != count => {
                    found = Some(Witness { type_repr: None, kappa1: first.clone(), kappa2: verts, counts: [*c, count] });
                    false
                }
                Some(_) => true,
                None => {
                    seen.insert(form, (verts, count));
                    true
                }
            }
        });
        if found.is_some() {
            witness = found;
            break 'sizes;
        }
    }
    RegularityReport { subject: format!("{k}-isoregular"), holds: witness.is_none(), constant: None, witness, levels: Vec::new() }
}

/// For an `(m,n)`-regular graph, checks that both subconstituents of every
/// vertex are `(m-1,n-1)`-regular. Fails with a precondition error when
/// `gamma` is not `(m,n)`-regular or `m == 0`.
pub fn subconstituent_regularity_check(gamma: &Graph, m: usize, n: usize) -> Result<RegularityReport> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let whole = is_mn_regular(gamma, m, n, Mode::Reduced)?;
    if !whole.holds {
        return Err(Error::Precondition(format!("graph is not ({m},{n})-regular")));
    }
    let subject = format!("subconstituents ({},{})-regular", m - 1, n - 1);
    let mut checked: HashSet<CanonicalForm> = HashSet::new();
    let mut levels = Vec::new();
    for v in 0..gamma.order() {
        for which in [Subconstituent::First, Subconstituent::Second] {
            let sub = gamma.subconstituent(v, which)?;
            if !checked.insert(canonical_form(&sub, None)) {
                continue;
            }
            let r = is_mn_regular(&sub, m - 1, (n - 1).max(m - 1), Mode::Reduced)?;
            levels.push(LevelReport {
                order: [m - 1, n - 1],
                checked: r.levels.iter().map(|l| l.checked).sum(),
                pruned: r.levels.iter().map(|l| l.pruned).sum(),
                holds: r.holds,
            });
            if let Some(w) = r.witness {
                let label = match which {
                    Subconstituent::First => "first",
                    Subconstituent::Second => "second",
                };
                let witness = Witness { type_repr: Some(format!("{label} subconstituent of {v}: {}", w.type_repr.unwrap_or_default())), ..w };
                return Ok(RegularityReport::composite(subject, levels, Some(witness)));
            }
        }
    }
    Ok(RegularityReport::composite(subject, levels, None))
}
