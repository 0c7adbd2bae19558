//! Grundy number by recursion over maximal stable sets.
//!
//! The color-1 class of any Grundy coloring is a maximal stable set `S`, and
//! any Grundy coloring of `G - S` shifted up by one extends it. Hence
//! `Γ(G) = 1 + max_S Γ(G - S)`, memoized on the remaining vertex set.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bit, component_in, for_each_maximal_stable, low_mask, Bits, Graph};

use super::Coloring;

/// Vertex budget of the memoized recursion.
pub const MAX_GRUNDY_VERTICES: usize = 24;

/// Vertex budget of the ordering search in [`grundy_by_firstfit`].
pub const MAX_FIRSTFIT_VERTICES: usize = 10;

const DENSE_MEMO_LIMIT: usize = 20;
const UNKNOWN: u8 = u8::MAX;

enum Memo {
    Dense(Vec<u8>),
    Sparse(HashMap<u64, u8>),
}

impl Memo {
    fn new(n: usize) -> Self {
        if n <= DENSE_MEMO_LIMIT {
            Memo::Dense(vec![UNKNOWN; 1 << n])
        } else {
            Memo::Sparse(HashMap::new())
        }
    }

    fn get(&self, x: u64) -> Option<u8> {
        match self {
            Memo::Dense(v) => Some(v[x as usize]).filter(|&g| g != UNKNOWN),
            Memo::Sparse(m) => m.get(&x).copied(),
        }
    }

    fn put(&mut self, x: u64, g: u8) {
        match self {
            Memo::Dense(v) => v[x as usize] = g,
            Memo::Sparse(m) => {
                m.insert(x, g);
            }
        }
    }
}

pub(crate) struct GrundySolver<'a> {
    adj: &'a [u64],
    memo: Memo,
}

fn max_degree_within(adj: &[u64], x: u64) -> u32 {
    Bits(x)
        .map(|v| (adj[v] & x).count_ones())
        .max()
        .unwrap_or(0)
}

fn maximal_stable_sets_within(adj: &[u64], x: u64) -> Vec<u64> {
    let mut sets = Vec::new();
    for_each_maximal_stable(adj, x, &mut |s| sets.push(s));
    sets.sort_unstable();
    sets
}

impl<'a> GrundySolver<'a> {
    pub(crate) fn new(adj: &'a [u64]) -> Self {
        GrundySolver {
            adj,
            memo: Memo::new(adj.len()),
        }
    }

    fn upper_bound(&self, x: u64) -> u8 {
        if x == 0 {
            return 0;
        }
        (x.count_ones()).min(1 + max_degree_within(self.adj, x)) as u8
    }

    /// Γ(G[x]).
    pub(crate) fn value(&mut self, x: u64) -> u8 {
        if x == 0 {
            return 0;
        }
        if let Some(g) = self.memo.get(x) {
            return g;
        }
        let ub = self.upper_bound(x);
        let g = if ub == 1 {
            1
        } else {
            let first = x.trailing_zeros() as usize;
            let comp = component_in(self.adj, first, x);
            if comp != x {
                // Γ of a disjoint union is the maximum over its parts.
                let mut best = self.value(comp);
                let mut rest = x & !comp;
                while rest != 0 && best < self.upper_bound(rest) {
                    let c = component_in(self.adj, rest.trailing_zeros() as usize, rest);
                    best = best.max(self.value(c));
                    rest &= !c;
                }
                best
            } else {
                let mut best = 0u8;
                for s in maximal_stable_sets_within(self.adj, x) {
                    let r = x & !s;
                    if self.upper_bound(r) < best {
                        continue;
                    }
                    best = best.max(1 + self.value(r));
                    if best == ub {
                        break;
                    }
                }
                best
            }
        };
        self.memo.put(x, g);
        g
    }

    /// Whether Γ(G[x]) ≥ k, stopping at the first witness chain.
    fn at_least(&mut self, x: u64, k: u8, seen: &mut HashMap<(u64, u8), bool>) -> bool {
        if k == 0 {
            return true;
        }
        if x == 0 {
            return false;
        }
        if let Some(g) = self.memo.get(x) {
            return g >= k;
        }
        if k == 1 {
            return true;
        }
        if self.upper_bound(x) < k {
            return false;
        }
        if let Some(&r) = seen.get(&(x, k)) {
            return r;
        }
        let found = maximal_stable_sets_within(self.adj, x)
            .into_iter()
            .any(|s| self.at_least(x & !s, k - 1, seen));
        seen.insert((x, k), found);
        found
    }

    /// Whether some Grundy coloring with exactly `gamma` colors respects the
    /// fixed colors in `req` (0 = free).
    fn chain_feasible(&mut self, gamma: u8, req: &[u8]) -> bool {
        let n = self.adj.len();
        let mut by_color = vec![0u64; gamma as usize + 2];
        let mut fixed = 0u64;
        for (v, &c) in req.iter().enumerate() {
            if c != 0 {
                by_color[c as usize] |= bit(v);
                fixed |= bit(v);
            }
        }
        let mut memo: HashMap<(u64, u8), bool> = HashMap::new();
        self.chain_rec(low_mask(n), 1, gamma, &by_color, fixed, &mut memo)
    }

    fn chain_rec(
        &mut self,
        x: u64,
        level: u8,
        gamma: u8,
        by_color: &[u64],
        fixed: u64,
        memo: &mut HashMap<(u64, u8), bool>,
    ) -> bool {
        if x == 0 {
            return level == gamma + 1;
        }
        if level > gamma || self.value(x) < gamma + 1 - level {
            return false;
        }
        let must = by_color[level as usize];
        if must & !x != 0 {
            return false;
        }
        // Vertices fixed to an earlier color cannot still be uncolored.
        let earlier = by_color[1..level as usize].iter().fold(0, |a, &b| a | b);
        if earlier & x != 0 {
            return false;
        }
        if let Some(&r) = memo.get(&(x, level)) {
            return r;
        }
        let forbid = fixed & !must;
        let mut ok = false;
        for s in maximal_stable_sets_within(self.adj, x) {
            if s & must == must
                && s & forbid == 0
                && self.chain_rec(x & !s, level + 1, gamma, by_color, fixed, memo)
            {
                ok = true;
                break;
            }
        }
        memo.insert((x, level), ok);
        ok
    }
}

fn check_budget(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::invalid("Grundy number needs at least one vertex"));
    }
    if g.n() > MAX_GRUNDY_VERTICES {
        return Err(Error::capacity("vertex count", g.n(), MAX_GRUNDY_VERTICES));
    }
    Ok(())
}

/// Γ(g) without a witness.
pub fn grundy_value(g: &Graph) -> Result<usize> {
    check_budget(g)?;
    Ok(GrundySolver::new(g.adjacency()).value(g.vertices().bits()) as usize)
}

/// Whether Γ(g) ≥ k.
pub fn grundy_at_least(g: &Graph, k: usize) -> Result<bool> {
    check_budget(g)?;
    if k > g.n() {
        return Ok(false);
    }
    let mut seen = HashMap::new();
    Ok(GrundySolver::new(g.adjacency()).at_least(g.vertices().bits(), k as u8, &mut seen))
}

/// Γ(g) and the lexicographically least Grundy coloring with Γ(g) colors.
pub fn grundy_number(g: &Graph) -> Result<(usize, Coloring)> {
    check_budget(g)?;
    let mut solver = GrundySolver::new(g.adjacency());
    let gamma = solver.value(g.vertices().bits());
    let mut req = vec![0u8; g.n()];
    for v in 0..g.n() {
        let c = (1..=gamma)
            .find(|&c| {
                req[v] = c;
                solver.chain_feasible(gamma, &req)
            })
            .expect("an optimal Grundy coloring extends the fixed prefix");
        req[v] = c;
    }
    let colors = req.into_iter().map(usize::from).collect();
    Ok((gamma as usize, Coloring::from_raw(colors, gamma as usize)))
}

/// Worst case of First-Fit over all `n!` vertex orders.
pub fn grundy_by_firstfit(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > MAX_FIRSTFIT_VERTICES {
        return Err(Error::capacity("vertex count", n, MAX_FIRSTFIT_VERTICES));
    }
    let adj = g.adjacency();
    let cap = (g.max_degree() + 1).min(n) as u8;
    let mut colors = vec![0u8; n];
    let mut best = 0u8;
    firstfit(adj, low_mask(n), &mut colors, 0, cap, &mut best);
    Ok(best as usize)
}

fn firstfit(adj: &[u64], uncolored: u64, colors: &mut [u8], top: u8, cap: u8, best: &mut u8) {
    if uncolored == 0 {
        *best = (*best).max(top);
        return;
    }
    if *best >= cap || top as u32 + uncolored.count_ones() <= *best as u32 {
        return;
    }
    for v in Bits(uncolored) {
        let used = Bits(adj[v] & !uncolored).fold(0u64, |acc, u| acc | bit(colors[u] as usize));
        let c = (!(used | 1)).trailing_zeros() as u8;
        colors[v] = c;
        firstfit(adj, uncolored & !bit(v), colors, top.max(c), cap, best);
        colors[v] = 0;
        if *best >= cap {
            return;
        }
    }
}
