//! Exhaustive checks of minimum orders and of the h-optimal lists.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::coloring::{
    achromatic_value, analyze, chromatic_value, grundy_at_least, grundy_value,
    has_complete_coloring, is_colorable,
};
use crate::constructions::{is_realizable, min_order, Triple};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::generate::{Generator, MAX_GENERATION_ORDER};

/// Orders up to which every connected graph's `(χ, Γ, ψ)` is tabulated.
pub const FULL_TABLE_ORDER: usize = 8;

type Invariants = (usize, usize, usize);

/// Generated levels plus the `(χ, Γ, ψ)` table of the small ones, shared
/// across queries.
#[derive(Default)]
pub struct Census {
    generator: Generator,
    tables: HashMap<usize, Vec<Invariants>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinOrderVerdict {
    pub triple: Triple,
    pub formula: usize,
    /// Least order with a connected realizer, if one exists up to `formula`.
    pub search_min: Option<usize>,
    /// Realizers on `formula` vertices, canonically relabeled and sorted.
    #[serde(skip)]
    pub realizers: Vec<Graph>,
}

impl MinOrderVerdict {
    pub fn pass(&self) -> bool {
        self.search_min == Some(self.formula)
    }
}

#[derive(Clone, Debug)]
pub struct HOptimalScan {
    pub h: usize,
    /// Canonically relabeled, sorted by canonical form.
    pub graphs: Vec<Graph>,
    /// Rejected graphs rechecked with the exact solvers.
    pub rechecked: u64,
}

fn invariants(g: &Graph) -> Invariants {
    let chi = chromatic_value(g).expect("nonempty graph");
    let gamma = grundy_value(g).expect("within budget");
    let psi = achromatic_value(g).expect("within budget");
    (chi, gamma, psi)
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Exact test of `(χ, Γ, ψ) = t` behind necessary conditions that are cheap.
fn realizes(g: &Graph, t: Triple) -> bool {
    let n = g.n();
    if n < t.h || g.m() < binom2(t.h) {
        return false;
    }
    let omega = g.clique_number();
    if omega > t.f || (n + omega) / 2 < t.h {
        return false;
    }
    if !is_colorable(g, t.f) || (t.f > 1 && is_colorable(g, t.f - 1)) {
        return false;
    }
    let gamma_ok = grundy_at_least(g, t.g).expect("within budget")
        && !grundy_at_least(g, t.g + 1).expect("within budget");
    gamma_ok
        && has_complete_coloring(g, t.h)
        && ((n + omega) / 2 < t.h + 1 || !has_complete_coloring(g, t.h + 1))
}

fn canonical_sorted(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<_> = graphs
        .into_iter()
        .map(|g| canonical_form(&g).expect("small graph"))
        .collect();
    keyed.sort_unstable();
    keyed.into_iter().map(|f| f.to_graph()).collect()
}

fn fnv(g: &Graph) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &row in g.adjacency() {
        for b in row.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

impl Census {
    pub fn new() -> Self {
        Census::default()
    }

    pub fn generator(&mut self) -> &mut Generator {
        &mut self.generator
    }

    fn table(&mut self, n: usize) -> Result<&[Invariants]> {
        if !self.tables.contains_key(&n) {
            let graphs = self.generator.level(n)?;
            let t: Vec<Invariants> = graphs.par_iter().map(invariants).collect();
            self.tables.insert(n, t);
        }
        Ok(&self.tables[&n])
    }

    fn realizers_of_order(&mut self, t: Triple, n: usize) -> Result<Vec<Graph>> {
        if n <= FULL_TABLE_ORDER {
            let table = self.table(n)?.to_vec();
            let graphs = self.generator.level(n)?;
            return Ok(graphs
                .iter()
                .zip(table)
                .filter(|(_, inv)| *inv == (t.f, t.g, t.h))
                .map(|(g, _)| g.clone())
                .collect());
        }
        self.generator.filter(n, |g| realizes(g, t))
    }

    /// Compares the minimum-order formula with an exhaustive search over
    /// connected graphs of order `1..=formula`.
    pub fn verify_min_order(&mut self, t: Triple) -> Result<MinOrderVerdict> {
        if !is_realizable(t) {
            return Err(Error::Domain(format!("triple {t} is not realizable")));
        }
        let formula = min_order(t)?;
        if formula > MAX_GENERATION_ORDER {
            return Err(Error::capacity(
                "minimum order",
                formula,
                MAX_GENERATION_ORDER,
            ));
        }
        let mut search_min = None;
        let mut realizers = Vec::new();
        for n in 1..=formula {
            let found = self.realizers_of_order(t, n)?;
            if !found.is_empty() {
                search_min = Some(n);
                realizers = found;
                break;
            }
        }
        Ok(MinOrderVerdict {
            triple: t,
            formula,
            search_min,
            realizers: canonical_sorted(realizers),
        })
    }

    /// Connected graphs on `2h - 2` vertices with `(χ, Γ, ψ) = (3, 3, h)`.
    ///
    /// Cheap necessary conditions run first: `m ≥ h(h-1)/2`, `ω ≤ 3`,
    /// 3-colorable but not bipartite, no Grundy 4-coloring, a complete
    /// `h`-coloring. Survivors are confirmed with [`analyze`]. About 1% of
    /// the rejected graphs, chosen by a hash of the adjacency, are rechecked
    /// with the exact solvers; a recheck that finds an h-optimal graph is an
    /// error.
    pub fn h_optimal(&mut self, h: usize) -> Result<HOptimalScan> {
        if !(4..=6).contains(&h) {
            return Err(Error::capacity("h", h, 6));
        }
        let n = 2 * h - 2;
        let target = (3, 3, h);
        let quick = |g: &Graph| -> bool {
            g.m() >= binom2(h)
                && g.clique_number() <= 3
                && !g.is_bipartite()
                && is_colorable(g, 3)
                && !grundy_at_least(g, 4).expect("within budget")
                && has_complete_coloring(g, h)
        };
        let recheck = |g: &Graph| fnv(g).is_multiple_of(100);
        let kept = self.generator.filter(n, |g| {
            if quick(g) {
                return true;
            }
            // Rechecked rejects travel through the filter so they can be counted.
            recheck(g)
        })?;
        let mut graphs = Vec::new();
        let mut rechecked = 0;
        for g in kept {
            let exact = analyze(&g)?.triple() == target;
            if quick(&g) {
                if exact {
                    graphs.push(g);
                }
            } else {
                rechecked += 1;
                if exact {
                    return Err(Error::Domain(format!(
                        "prefilter rejected an h-optimal graph ({})",
                        crate::graph6::write_graph6(&g)
                    )));
                }
            }
        }
        Ok(HOptimalScan {
            h,
            graphs: canonical_sorted(graphs),
            rechecked,
        })
    }
}

pub fn verify_min_order(t: Triple) -> Result<MinOrderVerdict> {
    Census::new().verify_min_order(t)
}

/// All h-optimal graphs for `4 ≤ h ≤ 6`, sorted by canonical form.
pub fn h_optimal_graphs(h: usize) -> Result<Vec<Graph>> {
    Ok(Census::new().h_optimal(h)?.graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(f: usize, g: usize, h: usize) -> Triple {
        Triple::new(f, g, h).unwrap()
    }

    #[test]
    fn smallest_cases() {
        let v = verify_min_order(t(2, 2, 2)).unwrap();
        assert!(v.pass());
        assert_eq!(v.realizers, vec![Graph::complete(2).unwrap()]);
        let v = verify_min_order(t(2, 3, 4)).unwrap();
        assert_eq!((v.formula, v.search_min), (6, Some(6)));
        assert!(matches!(
            verify_min_order(t(2, 2, 3)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            verify_min_order(t(2, 3, 7)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn filtered_path_matches_table() {
        let mut census = Census::new();
        for tr in [t(2, 3, 4), t(3, 3, 4), t(2, 3, 3), t(3, 4, 4)] {
            let table = census.realizers_of_order(tr, 6).unwrap();
            let filtered = census.generator.filter(6, |g| realizes(g, tr)).unwrap();
            assert_eq!(table, filtered, "{tr}");
        }
    }

    #[test]
    fn four_optimal_count() {
        let scan = Census::new().h_optimal(4).unwrap();
        assert_eq!(scan.graphs.len(), 7);
        assert!(h_optimal_graphs(7).is_err());
    }
}
