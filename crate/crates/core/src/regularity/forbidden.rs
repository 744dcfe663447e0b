//! Small graphs that are not induced subgraphs of a host.
//!
//! A type whose graph contains one of them has no embedding at all, so the
//! host is regular for it with constant 0.

use std::collections::HashSet;

use crate::canon::{canonical_form, CanonicalForm};
use crate::connectivity::for_each_subset;
use crate::enumerate::all_graphs;
use crate::graph::{members, Graph};

/// Induced-subgraph budget per order when scanning the host.
const SCAN_LIMIT: u128 = 200_000;

#[derive(Clone, Debug, Default)]
pub struct ForbiddenSubgraphs {
    /// `(order, forms)` for each scanned order with at least one missing class.
    by_order: Vec<(usize, HashSet<CanonicalForm>)>,
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

impl ForbiddenSubgraphs {
    /// Scans orders 3, 4, 5 of `gamma`, stopping at the first order whose
    /// subsets exceed the budget.
    pub fn for_graph(gamma: &Graph) -> Self {
        let n = gamma.order();
        let mut by_order = Vec::new();
        for s in 3..=5.min(n) {
            if binomial(n, s) > SCAN_LIMIT {
                break;
            }
            let mut present = HashSet::new();
            for_each_subset(n, s, &mut |set| {
                let order: Vec<usize> = members(set).collect();
                present.insert(canonical_form(&gamma.induced_ordered(&order), None));
                true
            });
            let missing: HashSet<CanonicalForm> =
                all_graphs(s).expect("small order").iter().map(|g| canonical_form(g, None)).filter(|f| !present.contains(f)).collect();
            if !missing.is_empty() {
                by_order.push((s, missing));
            }
        }
        ForbiddenSubgraphs { by_order }
    }

    /// Whether `theta` has an induced subgraph from the forbidden list.
    pub fn excludes(&self, theta: &Graph) -> bool {
        let n = theta.order();
        self.by_order.iter().filter(|(s, _)| *s <= n).any(|(s, forms)| {
            let mut hit = false;
            for_each_subset(n, *s, &mut |set| {
                let order: Vec<usize> = members(set).collect();
                hit = forms.contains(&canonical_form(&theta.induced_ordered(&order), None));
                !hit
            });
            hit
        })
    }

    pub fn count(&self) -> usize {
        self.by_order.iter().map(|(_, f)| f.len()).sum()
    }
}
