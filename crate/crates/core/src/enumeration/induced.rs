//! Search for induced copies of `R_Θ = K_{Θ,Θ}` minus a perfect matching.

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Bits, Graph, VertexSet};

struct PairSearch<'a> {
    adj: &'a [u64],
    theta: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl PairSearch<'_> {
    /// Extends the pair sequence `(a_1,b_1), ..` with `a` increasing and
    /// `a_1 < b_1`. A new `a` must miss earlier `a`s and see earlier `b`s;
    /// a new `b` symmetrically, and must miss its own `a`.
    fn run(&mut self, a_ok: u64, b_ok: u64, used: u64) -> bool {
        let i = self.a.len();
        if i == self.theta {
            return true;
        }
        let floor = self.a.last().map_or(0, |&x| x + 1);
        let a_cands = a_ok & !used & !low_mask(floor);
        if (a_cands.count_ones() as usize) < self.theta - i {
            return false;
        }
        for x in Bits(a_cands) {
            let mut b_cands = b_ok & !used & !self.adj[x] & !bit(x);
            if i == 0 {
                b_cands &= !low_mask(x + 1);
            }
            for y in Bits(b_cands) {
                self.a.push(x);
                self.b.push(y);
                let used2 = used | bit(x) | bit(y);
                let a2 = a_ok & !self.adj[x] & self.adj[y];
                let b2 = b_ok & !self.adj[y] & self.adj[x];
                if self.run(a2, b2, used2) {
                    return true;
                }
                self.a.pop();
                self.b.pop();
            }
        }
        false
    }
}

/// A vertex set inducing a copy of `R_theta`, if any.
pub fn find_induced_reduced(g: &Graph, theta: usize) -> Result<Option<VertexSet>> {
    if theta == 0 {
        return Err(Error::invalid("Θ must be at least 1"));
    }
    if 2 * theta > g.n() {
        return Ok(None);
    }
    let all = g.vertices().bits();
    let mut search = PairSearch {
        adj: g.adjacency(),
        theta,
        a: Vec::new(),
        b: Vec::new(),
    };
    if search.run(all, all, 0) {
        Ok(Some(search.a.iter().chain(&search.b).copied().collect()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::constructions::{g_star, reduced_graph};

    #[test]
    fn finds_six_cycle() {
        let c6 = Graph::cycle(6).unwrap();
        let s = find_induced_reduced(&c6, 3).unwrap().unwrap();
        let sub = c6.induced_subgraph(s).unwrap();
        assert!(are_isomorphic(&sub, &reduced_graph(3).unwrap()).unwrap());
        assert_eq!(find_induced_reduced(&c6, 4).unwrap(), None);
    }

    #[test]
    fn absent_in_constructions() {
        assert_eq!(
            find_induced_reduced(&g_star(5, 7).unwrap(), 4).unwrap(),
            None
        );
        assert_eq!(
            find_induced_reduced(&g_star(3, 6).unwrap(), 3).unwrap(),
            None
        );
        assert_eq!(
            find_induced_reduced(&g_star(3, 6).unwrap(), 2).unwrap(),
            None
        );
    }

    #[test]
    fn small_theta() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(find_induced_reduced(&k3, 1).unwrap(), None);
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            find_induced_reduced(&p3, 1).unwrap(),
            Some([0, 2].into_iter().collect())
        );
        assert!(find_induced_reduced(&p3, 0).is_err());
    }
}
