//! Brute-force oracles shared by the integration tests. They only use the
//! public adjacency view and share no code with the solvers under test.
#![allow(dead_code)]

use proptest::prelude::*;
use triad_core::Graph;

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            i += 1;
        }
    }
    g
}

/// Strategy for arbitrary labeled graphs with `lo..=hi` vertices.
pub fn any_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

pub fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.adjacency()[u] >> v & 1 == 1
}

/// Calls `f` on every permutation of `0..n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    fn rec(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, f);
            p.swap(k, i);
        }
    }
    let mut p: Vec<usize> = (0..n).collect();
    rec(&mut p, 0, &mut f);
}

/// Upper-triangle bit string of `g` relabeled by `perm` (vertex v → perm[v]).
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut code = 0u64;
    let mut i = 0;
    for a in 0..n {
        for b in a + 1..n {
            if adjacent(g, inv[a], inv[b]) {
                code |= 1 << i;
            }
            i += 1;
        }
    }
    code
}

/// Least code over all relabelings: a complete isomorphism invariant.
pub fn min_code(g: &Graph) -> u64 {
    let mut best = u64::MAX;
    for_each_permutation(g.n(), |p| best = best.min(code_under(g, p)));
    best
}

pub fn connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (v, s) in seen.iter_mut().enumerate() {
            if adjacent(g, u, v) && !*s {
                *s = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Calls `f` on every partition of `0..n` into blocks, as block indices in
/// restricted-growth form.
pub fn for_each_set_partition(n: usize, mut f: impl FnMut(&[usize], usize)) {
    fn rec(a: &mut Vec<usize>, v: usize, blocks: usize, f: &mut dyn FnMut(&[usize], usize)) {
        if v == a.len() {
            f(a, blocks);
            return;
        }
        for b in 0..=blocks {
            a[v] = b;
            rec(a, v + 1, blocks.max(b + 1), f);
        }
    }
    let mut a = vec![0; n];
    rec(&mut a, 0, 0, &mut f);
}

/// Whether block labels form a complete coloring: proper, and every pair of
/// blocks is joined by an edge.
pub fn partition_is_complete(g: &Graph, a: &[usize], k: usize) -> bool {
    let n = g.n();
    let mut joined = vec![vec![false; k]; k];
    for u in 0..n {
        for v in u + 1..n {
            if adjacent(g, u, v) {
                if a[u] == a[v] {
                    return false;
                }
                joined[a[u]][a[v]] = true;
                joined[a[v]][a[u]] = true;
            }
        }
    }
    (0..k).all(|x| (0..k).all(|y| x == y || joined[x][y]))
}

pub fn brute_achromatic(g: &Graph) -> usize {
    let mut best = 0;
    for_each_set_partition(g.n(), |a, k| {
        if k > best && partition_is_complete(g, a, k) {
            best = k;
        }
    });
    best
}

pub fn brute_chromatic(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for_each_set_partition(g.n(), |a, k| {
        if k < best
            && (0..g.n()).all(|u| (u + 1..g.n()).all(|v| !adjacent(g, u, v) || a[u] != a[v]))
        {
            best = k;
        }
    });
    best
}

pub fn is_stable(g: &Graph, s: u64) -> bool {
    (0..g.n()).all(|u| s >> u & 1 == 0 || (0..g.n()).all(|v| s >> v & 1 == 0 || !adjacent(g, u, v)))
}

/// All maximal stable sets by checking every subset.
pub fn brute_maximal_stable(g: &Graph) -> Vec<u64> {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| {
            is_stable(g, s) && (0..n).all(|v| s >> v & 1 == 1 || !is_stable(g, s | 1 << v))
        })
        .collect()
}

pub fn brute_clique(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| {
            (0..n).all(|u| {
                s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || adjacent(g, u, v))
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
