//! Complete colorings: backtracking assignment of vertices (in index order)
//! to color classes opened in order of first use, pruned by properness, the
//! number of classes still to open and the number of class pairs still
//! lacking an edge.

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Bits, Graph};

use super::Coloring;

/// Vertex budget of [`achromatic_number`].
pub const MAX_ACHROMATIC_VERTICES: usize = 16;

/// Vertex budget of [`all_complete_colorings`].
pub const MAX_ENUMERATION_VERTICES: usize = 12;

struct CompleteSearch<'a> {
    adj: &'a [u64],
    k: usize,
    m: usize,
    colors: Vec<usize>,
    class_mask: Vec<u64>,
    joined: Vec<u64>,
    covered: usize,
    placed_edges: usize,
}

impl<'a> CompleteSearch<'a> {
    fn new(adj: &'a [u64], k: usize) -> Self {
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        CompleteSearch {
            adj,
            k,
            m,
            colors: vec![0; adj.len()],
            class_mask: vec![0; k],
            joined: vec![0; k],
            covered: 0,
            placed_edges: 0,
        }
    }

    /// Visits complete `k`-colorings in lexicographic order of the color
    /// vector; `visit` returns `false` to stop. Returns `false` if stopped.
    fn run(&mut self, v: usize, used: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.adj.len();
        let k = self.k;
        if v == n {
            if used == k && self.covered == k * (k - 1) / 2 {
                return visit(&self.colors);
            }
            return true;
        }
        let placed = low_mask(v);
        let back = self.adj[v] & placed;
        for c in 0..k.min(used + 1) {
            if self.class_mask[c] & self.adj[v] != 0 {
                continue;
            }
            let used2 = used.max(c + 1);
            if used2 + (n - v - 1) < k {
                continue;
            }
            // Join the new vertex's class with its placed neighbors' classes.
            let mut newly = 0u64;
            for u in Bits(back) {
                let d = self.colors[u] - 1;
                if self.joined[c] & bit(d) == 0 && newly & bit(d) == 0 {
                    newly |= bit(d);
                }
            }
            let gained = newly.count_ones() as usize;
            let edges = back.count_ones() as usize;
            let missing = k * (k - 1) / 2 - (self.covered + gained);
            if missing > self.m - (self.placed_edges + edges) {
                continue;
            }
            self.colors[v] = c + 1;
            self.class_mask[c] |= bit(v);
            self.joined[c] |= newly;
            for d in Bits(newly) {
                self.joined[d] |= bit(c);
            }
            self.covered += gained;
            self.placed_edges += edges;

            let keep_going = self.run(v + 1, used2, visit);

            self.placed_edges -= edges;
            self.covered -= gained;
            for d in Bits(newly) {
                self.joined[d] &= !bit(c);
            }
            self.joined[c] &= !newly;
            self.class_mask[c] &= !bit(v);
            self.colors[v] = 0;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

pub(crate) fn first_complete_rows(adj: &[u64], k: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if k == 0 || k > n {
        return None;
    }
    let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    if k * (k - 1) / 2 > m {
        return None;
    }
    let mut found = None;
    CompleteSearch::new(adj, k).run(0, 0, &mut |colors| {
        found = Some(colors.to_vec());
        false
    });
    found
}

/// Lexicographically least complete coloring with exactly `k` colors.
pub fn complete_coloring_with(g: &Graph, k: usize) -> Option<Coloring> {
    first_complete_rows(g.adjacency(), k).map(|c| Coloring::from_raw(c, k))
}

pub fn has_complete_coloring(g: &Graph, k: usize) -> bool {
    first_complete_rows(g.adjacency(), k).is_some()
}

/// Every complete `k`-coloring, one per partition into classes; classes are
/// numbered by their least vertex. `visit` returns `false` to stop early.
pub fn for_each_complete_coloring(
    g: &Graph,
    k: usize,
    mut visit: impl FnMut(Coloring) -> bool,
) -> Result<()> {
    if g.n() > MAX_ENUMERATION_VERTICES {
        return Err(Error::capacity(
            "vertex count",
            g.n(),
            MAX_ENUMERATION_VERTICES,
        ));
    }
    if k == 0 || k > g.n() {
        return Ok(());
    }
    CompleteSearch::new(g.adjacency(), k).run(0, 0, &mut |colors| {
        visit(Coloring::from_raw(colors.to_vec(), k))
    });
    Ok(())
}

pub fn all_complete_colorings(g: &Graph, k: usize) -> Result<Vec<Coloring>> {
    let mut out = Vec::new();
    for_each_complete_coloring(g, k, |c| {
        out.push(c);
        true
    })?;
    Ok(out)
}

/// Largest `k` worth trying: at most `n`, at most the largest `k` with
/// `k(k-1)/2 ≤ m`, and at most `(n + ω)/2` since a complete `k`-coloring on
/// `n` vertices has at least `2k - n` singleton classes, which form a clique.
pub(crate) fn achromatic_upper_bound(n: usize, m: usize, omega: usize) -> usize {
    let mut by_edges = 1;
    while (by_edges + 1) * by_edges / 2 <= m {
        by_edges += 1;
    }
    n.min(by_edges).min((n + omega) / 2)
}

pub(crate) fn achromatic_rows(adj: &[u64], omega: usize) -> usize {
    let n = adj.len();
    let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    let mut k = achromatic_upper_bound(n, m, omega);
    while first_complete_rows(adj, k).is_none() {
        k -= 1;
    }
    k
}

fn check_budget(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::invalid(
            "achromatic number needs at least one vertex",
        ));
    }
    if g.n() > MAX_ACHROMATIC_VERTICES {
        return Err(Error::capacity(
            "vertex count",
            g.n(),
            MAX_ACHROMATIC_VERTICES,
        ));
    }
    Ok(())
}

/// ψ(g) without a witness.
pub fn achromatic_value(g: &Graph) -> Result<usize> {
    check_budget(g)?;
    Ok(achromatic_rows(g.adjacency(), g.clique_number()))
}

/// ψ(g) and the lexicographically least complete ψ-coloring.
pub fn achromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    let k = achromatic_value(g)?;
    let c = complete_coloring_with(g, k).expect("a complete ψ-coloring exists");
    Ok((k, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_complete;

    #[test]
    fn complete_graph() {
        assert_eq!(achromatic_value(&Graph::complete(5).unwrap()).unwrap(), 5);
    }

    #[test]
    fn path_examples() {
        let p4 = Graph::path(4).unwrap();
        assert!(complete_coloring_with(&p4, 2).is_some());
        assert!(complete_coloring_with(&p4, 4).is_none());
        let (k, c) = achromatic_number(&p4).unwrap();
        assert_eq!(k, 3);
        assert!(is_complete(&p4, &c).unwrap());
        assert_eq!(c.colors(), &[1, 2, 3, 1]);
    }

    #[test]
    fn enumeration_counts() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(all_complete_colorings(&k3, 3).unwrap().len(), 1);
        let p4 = Graph::path(4).unwrap();
        let all = all_complete_colorings(&p4, 3).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].colors(), &[1, 2, 3, 1]);
    }

    #[test]
    fn disconnected_graph() {
        // Two disjoint edges: a complete coloring needs every pair of classes
        // joined, so at most 2 colors.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(achromatic_value(&g).unwrap(), 2);
        assert!(complete_coloring_with(&Graph::empty(2).unwrap(), 2).is_none());
    }

    #[test]
    fn upper_bound_formula() {
        assert_eq!(achromatic_upper_bound(10, 45, 10), 10);
        assert_eq!(achromatic_upper_bound(12, 21, 2), 7);
        assert_eq!(achromatic_upper_bound(12, 100, 2), 7);
        assert_eq!(achromatic_upper_bound(4, 0, 1), 1);
    }
}
