use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Bits, Graph};

use super::Coloring;

/// DSATUR backtracking: is there a proper coloring with at most `k` colors?
pub fn is_colorable(g: &Graph, k: usize) -> bool {
    colorable_rows(g.adjacency(), k)
}

pub(crate) fn colorable_rows(adj: &[u64], k: usize) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    if k >= n {
        return true;
    }
    let mut forbidden = vec![0u64; n];
    let mut color = vec![usize::MAX; n];
    dsatur(adj, k, low_mask(n), &mut forbidden, &mut color, 0)
}

fn dsatur(
    adj: &[u64],
    k: usize,
    uncolored: u64,
    forbidden: &mut [u64],
    color: &mut [usize],
    used: usize,
) -> bool {
    if uncolored == 0 {
        return true;
    }
    // Most saturated vertex, then highest uncolored degree, then lowest index.
    let mut pick = usize::MAX;
    let mut key = (0u32, 0u32);
    for v in Bits(uncolored) {
        let kv = (forbidden[v].count_ones(), (adj[v] & uncolored).count_ones());
        if pick == usize::MAX || kv > key {
            pick = v;
            key = kv;
        }
    }
    let v = pick;
    let limit = k.min(used + 1);
    for c in 0..limit {
        if forbidden[v] & bit(c) != 0 {
            continue;
        }
        color[v] = c;
        let rest = uncolored & !bit(v);
        let touched = adj[v] & rest;
        let mut dead = false;
        let mut saved = [0u64; 64];
        for u in Bits(touched) {
            saved[u] = forbidden[u];
            forbidden[u] |= bit(c);
            if (forbidden[u] & low_mask(k)).count_ones() as usize == k {
                dead = true;
            }
        }
        if !dead && dsatur(adj, k, rest, forbidden, color, used.max(c + 1)) {
            return true;
        }
        for u in Bits(touched) {
            forbidden[u] = saved[u];
        }
    }
    color[v] = usize::MAX;
    false
}

/// Lexicographically least proper coloring with exactly `k` colors, vertices
/// taken in index order, colors ascending.
pub(crate) fn lex_least_proper(adj: &[u64], k: usize) -> Option<Vec<usize>> {
    fn rec(
        adj: &[u64],
        k: usize,
        v: usize,
        used: usize,
        forbidden: &mut [u64],
        colors: &mut [usize],
    ) -> bool {
        let n = adj.len();
        if v == n {
            return used == k;
        }
        if used + (n - v) < k {
            return false;
        }
        for c in 0..k.min(used + 1) {
            if forbidden[v] & bit(c) != 0 {
                continue;
            }
            let later = adj[v] & !low_mask(v + 1);
            let mut dead = false;
            for u in Bits(later) {
                if forbidden[u] | bit(c) == low_mask(k) {
                    dead = true;
                    break;
                }
            }
            if dead {
                continue;
            }
            for u in Bits(later) {
                forbidden[u] |= bit(c);
            }
            colors[v] = c + 1;
            if rec(adj, k, v + 1, used.max(c + 1), forbidden, colors) {
                return true;
            }
            // Recompute the forbidden masks of later neighbors from scratch.
            for u in Bits(later) {
                forbidden[u] =
                    Bits(adj[u] & low_mask(v)).fold(0, |acc, w| acc | bit(colors[w] - 1));
            }
        }
        false
    }
    let n = adj.len();
    let mut forbidden = vec![0u64; n];
    let mut colors = vec![0usize; n];
    rec(adj, k, 0, 0, &mut forbidden, &mut colors).then_some(colors)
}

/// χ(g) without a witness.
pub fn chromatic_value(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::invalid("chromatic number needs at least one vertex"));
    }
    let mut k = g.clique_number();
    while !is_colorable(g, k) {
        k += 1;
    }
    Ok(k)
}

/// χ(g) and the lexicographically least proper χ-coloring.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    let k = chromatic_value(g)?;
    let colors = lex_least_proper(g.adjacency(), k).expect("a χ-coloring exists");
    Ok((k, Coloring::from_raw(colors, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_complete, is_proper};

    #[test]
    fn complete_graph() {
        let (k, c) = chromatic_number(&Graph::complete(5).unwrap()).unwrap();
        assert_eq!(k, 5);
        assert_eq!(c.colors(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn odd_cycle_and_wheel() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(chromatic_value(&c5).unwrap(), 3);
        let w = Graph::join(&c5, &Graph::complete(1).unwrap()).unwrap();
        assert_eq!(chromatic_value(&w).unwrap(), 4);
        let (_, c) = chromatic_number(&w).unwrap();
        assert!(is_proper(&w, &c).unwrap() && is_complete(&w, &c).unwrap());
    }

    #[test]
    fn lex_least_witness_on_path() {
        let (k, c) = chromatic_number(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(k, 2);
        assert_eq!(c.colors(), &[1, 2, 1, 2]);
    }

    #[test]
    fn empty_graph_rejected() {
        assert!(chromatic_value(&Graph::empty(0).unwrap()).is_err());
        assert_eq!(chromatic_value(&Graph::empty(4).unwrap()).unwrap(), 1);
    }
}
