//! Structure of an h-optimal graph relative to one complete h-coloring:
//! the two singleton classes `Φ`, the pairs, and the split of the pairs into
//! `J` (pairs holding a vertex isolated in `G[M]`) and `T` (the rest).

use serde::Serialize;

use crate::canon::are_isomorphic;
use crate::coloring::{achromatic_value, chromatic_value, grundy_value, is_complete, Coloring};
use crate::constructions::extended_any;
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairType {
    /// `G[M_i ∪ Φ]` is a path on four vertices.
    P4,
    /// `G[M_i ∪ Φ]` contains a triangle.
    K3,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Preconditions {
    pub h_at_least_4: bool,
    pub order_is_2h_minus_2: bool,
    pub connected: bool,
    pub chi_and_gamma_are_3: bool,
    pub psi_equals_h: bool,
}

impl Preconditions {
    pub fn hold(&self) -> bool {
        self.h_at_least_4
            && self.order_is_2h_minus_2
            && self.connected
            && self.chi_and_gamma_are_3
            && self.psi_equals_h
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub h: usize,
    pub preconditions: Preconditions,
    /// `Φ`: the vertices of the one-element classes.
    pub singletons: VertexSet,
    /// Two-element classes in color order.
    pub pairs: Vec<VertexSet>,
    pub pair_types: Vec<PairType>,
    pub j_pairs: Vec<VertexSet>,
    pub t_pairs: Vec<VertexSet>,
    pub tau: usize,
    pub xi: usize,
    /// Vertices isolated in `G[M]`.
    pub isolated: VertexSet,
    /// Their partners in their pairs.
    pub couples: VertexSet,
    /// Empty when the preconditions fail.
    pub checks: Vec<Check>,
}

impl StructureReport {
    pub fn all_checks_pass(&self) -> bool {
        self.preconditions.hold() && !self.checks.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }
}

fn has_induced_2k2(g: &Graph) -> bool {
    let edges: Vec<_> = g.edges().collect();
    let adj = g.adjacency();
    for (i, &(a, b)) in edges.iter().enumerate() {
        let touch = adj[a] | adj[b] | 1 << a | 1 << b;
        for &(c, d) in &edges[i + 1..] {
            if touch & (1 << c | 1 << d) == 0 {
                return true;
            }
        }
    }
    false
}

fn union(sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b))
}

pub fn structure_report(g: &Graph, c: &Coloring) -> Result<StructureReport> {
    if !is_complete(g, c)? {
        return Err(Error::invalid("coloring is not complete"));
    }
    let h = c.k();
    let n = g.n();
    let preconditions = Preconditions {
        h_at_least_4: h >= 4,
        order_is_2h_minus_2: n + 2 == 2 * h,
        connected: g.is_connected()?,
        chi_and_gamma_are_3: chromatic_value(g)? == 3 && grundy_value(g)? == 3,
        psi_equals_h: achromatic_value(g)? == h,
    };
    let mut report = StructureReport {
        h,
        preconditions,
        singletons: VertexSet::EMPTY,
        pairs: Vec::new(),
        pair_types: Vec::new(),
        j_pairs: Vec::new(),
        t_pairs: Vec::new(),
        tau: 0,
        xi: 0,
        isolated: VertexSet::EMPTY,
        couples: VertexSet::EMPTY,
        checks: Vec::new(),
    };
    if !preconditions.hold() {
        return Ok(report);
    }
    let classes = c.classes();
    let singles: Vec<_> = classes.iter().copied().filter(|s| s.len() == 1).collect();
    report.pairs = classes.iter().copied().filter(|s| s.len() == 2).collect();
    report.singletons = union(&singles);
    let shape_ok = singles.len() == 2 && report.pairs.len() == h - 2;
    report.checks.push(Check {
        name: "two_singletons_and_pairs",
        pass: shape_ok,
    });
    if !shape_ok {
        return Ok(report);
    }

    let adj = g.adjacency();
    let phi = report.singletons;
    let [p1, p2] = [
        singles[0].iter().next().unwrap(),
        singles[1].iter().next().unwrap(),
    ];
    let m = union(&report.pairs);
    let p4 = Graph::path(4)?;

    for &pair in &report.pairs {
        let f = g.induced_subgraph(pair.union(phi))?;
        report.pair_types.push(if are_isomorphic(&f, &p4)? {
            PairType::P4
        } else if f.clique_number() >= 3 {
            PairType::K3
        } else {
            PairType::Other
        });
    }
    report.checks.push(Check {
        name: "pairs_p4_or_triangle",
        pass: report.pair_types.iter().all(|&t| t != PairType::Other),
    });

    let mut one_edge = true;
    for (i, a) in report.pairs.iter().enumerate() {
        for b in &report.pairs[i + 1..] {
            let count: u32 = Bits(a.bits())
                .map(|v| (adj[v] & b.bits()).count_ones())
                .sum();
            one_edge &= count == 1;
        }
    }
    report.checks.push(Check {
        name: "one_edge_between_pairs",
        pass: one_edge,
    });

    let apex = adj[p1] & adj[p2] & m.bits();
    report.checks.push(Check {
        name: "triangle_apex_isolated",
        pass: Bits(apex).all(|u| adj[u] & m.bits() == 0),
    });

    report.isolated = m.iter().filter(|&u| adj[u] & m.bits() == 0).collect();
    for &pair in &report.pairs {
        if pair.is_disjoint(report.isolated) {
            report.t_pairs.push(pair);
        } else {
            report.j_pairs.push(pair);
            for u in pair.intersection(report.isolated).iter() {
                report.couples = report
                    .couples
                    .union(pair.difference(VertexSet::singleton(u)));
            }
        }
    }
    report.tau = report.t_pairs.len();
    report.xi = report.j_pairs.len();

    let t = g.induced_subgraph(union(&report.t_pairs))?;
    report.checks.push(Check {
        name: "t_bipartite",
        pass: t.is_bipartite(),
    });
    report.checks.push(Check {
        name: "t_2k2_free",
        pass: !has_induced_2k2(&t),
    });
    report.checks.push(Check {
        name: "t_isomorphic_extended",
        pass: are_isomorphic(&t, &extended_any(report.tau)?)?,
    });
    report.checks.push(Check {
        name: "j_has_two_pairs",
        pass: report.xi == 2,
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{achromatic_witness_l, l_graph, LVariant};

    #[test]
    fn l_graph_passes() {
        let g = l_graph(6, LVariant::L1).unwrap();
        let c = achromatic_witness_l(6, LVariant::L1).unwrap();
        let r = structure_report(&g, &c).unwrap();
        assert!(r.all_checks_pass(), "{r:?}");
        let q: VertexSet = [
            g.vertex_by_label("q1").unwrap(),
            g.vertex_by_label("q2").unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(r.singletons, q);
        assert_eq!((r.tau, r.xi), (2, 2));
        assert_eq!(r.checks.len(), 8);
    }

    #[test]
    fn clique_fails_preconditions() {
        let k4 = Graph::complete(4).unwrap();
        let c = Coloring::new(vec![1, 2, 3, 4]).unwrap();
        let r = structure_report(&k4, &c).unwrap();
        assert!(!r.preconditions.order_is_2h_minus_2);
        assert!(!r.all_checks_pass());
        assert!(r.checks.is_empty());
    }

    #[test]
    fn incomplete_coloring_rejected() {
        let g = Graph::empty(2).unwrap();
        let c = Coloring::new(vec![1, 2]).unwrap();
        assert!(structure_report(&g, &c).is_err());
    }

    #[test]
    fn two_k2_detection() {
        assert!(has_induced_2k2(
            &Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
        ));
        assert!(!has_induced_2k2(&Graph::path(4).unwrap()));
    }
}
