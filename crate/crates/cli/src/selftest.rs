//! Cross-checks between independent routes on every small graph.

use graphreg::embed::count_embeddings;
use graphreg::enumerate::{all_graphs, types_of_order};
use graphreg::regularity::{count_extensions, is_mn_regular, k_isoregular, t_vertex_condition, t_vertex_condition_direct, t_vertex_condition_ivanov};
use graphreg::types::{irreducible_by_closure, irreducible_by_partition};
use graphreg::{Graph, Mode};

pub struct Suite {
    pub name: &'static str,
    pub cases: usize,
    pub violations: usize,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, cases: 0, violations: 0 }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            log::error!("{}: {}", self.name, what());
        }
    }
}

fn graphs(max_order: usize) -> graphreg::Result<Vec<&'static Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(all_graphs(n)?.iter());
    }
    Ok(out)
}

pub fn run(max_order: usize) -> graphreg::Result<Vec<Suite>> {
    let graphs = graphs(max_order)?;
    log::info!("selftest over {} graphs of order <= {max_order}", graphs.len());
    // per-check progress would drown the summary
    let level = log::max_level();
    log::set_max_level(log::LevelFilter::Warn);
    let suites = sweep(&graphs, max_order);
    log::set_max_level(level);
    suites
}

fn sweep(graphs: &[&Graph], max_order: usize) -> graphreg::Result<Vec<Suite>> {
    let mut modes = Suite::new("naive vs reduced (m,n)-regularity");
    for g in graphs {
        for (m, n) in [(2, 4), (2, 5), (3, 4), (3, 5)] {
            let naive = is_mn_regular(g, m, n, Mode::Naive)?.holds;
            let reduced = is_mn_regular(g, m, n, Mode::Reduced)?.holds;
            modes.record(naive == reduced, || format!("({m},{n}) on {g:?}"));
        }
    }

    let mut iso = Suite::new("k-isoregular vs (k,k+1)-regular");
    for g in graphs {
        for k in 1..=3 {
            let a = k_isoregular(g, k).holds;
            let b = is_mn_regular(g, k, k + 1, Mode::Naive)?.holds;
            iso.record(a == b, || format!("k = {k} on {g:?}"));
        }
    }

    let mut tvc = Suite::new("t-vertex condition routes");
    for g in graphs {
        for t in 2..=4 {
            let direct = t_vertex_condition_direct(g, t).holds;
            let reduced = t_vertex_condition(g, t)?.holds;
            let ivanov = t_vertex_condition_ivanov(g, t)?.holds;
            tvc.record(direct == reduced && reduced == ivanov, || format!("t = {t} on {g:?}"));
        }
    }

    let mut sums = Suite::new("extension counts sum to embedding counts");
    for g in graphs {
        for (m, n) in [(1, 2), (1, 3), (2, 3), (2, 4)] {
            for t in types_of_order(m, n)?.iter() {
                let mut total = 0;
                graphreg::embed::for_each_embedding_lex(g, &t.base_graph(), &mut |kappa| {
                    total += count_extensions(g, t, kappa).expect("kappa embeds the base");
                    true
                });
                sums.record(total == count_embeddings(g, t.theta()), || format!("{t:?} in {g:?}"));
            }
        }
    }

    let mut irr = Suite::new("partition vs closure irreducibility");
    for m in 0..=2 {
        for n in m + 2..=max_order.max(m + 2) {
            for t in types_of_order(m, n)?.iter() {
                irr.record(irreducible_by_partition(t, m, n) == irreducible_by_closure(t, m, n).unwrap_or(false), || format!("{t:?} at ({m},{n})"));
            }
        }
    }

    Ok(vec![modes, iso, tvc, sums, irr])
}
