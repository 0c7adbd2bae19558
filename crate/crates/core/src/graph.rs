//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A set of vertices of some host graph, as a bitset over `0..64`.
///
/// Ordering is by the integer value of the bitset, which is the
/// deterministic order used for every returned family of sets.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest element plus one, i.e. the smallest `n` with `self ⊆ {0..n-1}`.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Labels are descriptive metadata attached by the builders (`"u3"`,
/// `"q1"`, ...). They take no part in equality or isomorphism.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loopless.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        let range = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !range != 0 {
                return Err(Error::invalid(format!(
                    "row {v} has a neighbor out of range"
                )));
            }
            if row & bit(v) != 0 {
                return Err(Error::invalid(format!("loop at vertex {v}")));
            }
            for u in Bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::invalid(format!("asymmetric adjacency {v}-{u}")));
                }
            }
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        Graph {
            n: adj.len(),
            adj,
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("a cycle needs at least 3 vertices"));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Disjoint union, `g` first.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Self> {
        let n = g.n + h.n;
        if n > MAX_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_VERTICES));
        }
        let mut adj = g.adj.clone();
        adj.extend(h.adj.iter().map(|&row| row << g.n));
        let labels = merge_labels(g, h);
        Ok(Graph { n, adj, labels })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::invalid(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, or its index when the graph is unlabeled.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Index of the vertex carrying `label`.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub(crate) fn check_set(&self, s: VertexSet, what: &str) -> Result<()> {
        if !s.is_subset(self.vertices()) {
            return Err(Error::invalid(format!(
                "{what} {s:?} is not a subset of the {} vertices",
                self.n
            )));
        }
        Ok(())
    }

    /// `G[s]`, vertices renumbered in ascending original order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s, "vertex set")?;
        let verts = s.to_vec();
        let adj = verts
            .iter()
            .map(|&v| {
                let row = self.adj[v] & s.0;
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| row & bit(u) != 0)
                    .fold(0u64, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| verts.iter().map(|&v| l[v].clone()).collect());
        Ok(Graph {
            n: verts.len(),
            adj,
            labels,
        })
    }

    /// Removes the vertices in `s`.
    pub fn remove_vertices(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s, "vertex set")?;
        self.induced_subgraph(self.vertices().difference(s))
    }

    /// Disjoint union of `g` and `h` plus every edge between them.
    pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
        let mut out = Graph::disjoint_union(g, h)?;
        let left = low_mask(g.n);
        let right = low_mask(out.n) & !left;
        for v in 0..g.n {
            out.adj[v] |= right;
        }
        for v in g.n..out.n {
            out.adj[v] |= left;
        }
        Ok(out)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn component_in(&self, start: usize, within: u64) -> u64 {
        component_in(&self.adj, start, within)
    }

    /// Connected components, each as a vertex set, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = low_mask(self.n);
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.component_in(v, rest);
            out.push(VertexSet(c));
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::invalid(
                "connectivity of the empty graph is undefined",
            ));
        }
        Ok(self.component_in(0, low_mask(self.n)) == low_mask(self.n))
    }

    /// A 2-coloring witness `(A, B)` if the graph is bipartite. `A` holds the
    /// least vertex of every component.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = vec![u8::MAX; self.n];
        let mut a = 0u64;
        let mut b = 0u64;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            a |= bit(s);
            stack.push(s);
            while let Some(v) = stack.pop() {
                for u in Bits(self.adj[v]) {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        if side[u] == 0 {
                            a |= bit(u);
                        } else {
                            b |= bit(u);
                        }
                        stack.push(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some((VertexSet(a), VertexSet(b)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        is_stable(&self.adj, s.0)
    }

    /// Size of a maximum clique (0 for the empty graph).
    pub fn clique_number(&self) -> usize {
        clique_number_within(&self.adj, low_mask(self.n))
    }

    /// All inclusion-maximal stable sets, ascending by bitset value.
    pub fn maximal_stable_sets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for_each_maximal_stable(&self.adj, low_mask(self.n), &mut |s| out.push(VertexSet(s)));
        out.sort_unstable();
        out
    }

    /// Whether every vertex of `target ∖ d` has a neighbor in `d`.
    pub fn is_dominating(&self, d: VertexSet, target: VertexSet) -> Result<bool> {
        self.check_set(d, "dominating set")?;
        self.check_set(target, "target set")?;
        Ok(Bits(target.0 & !d.0).all(|v| self.adj[v] & d.0 != 0))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid(
                "permutation length differs from vertex count",
            ));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::invalid("not a permutation"));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = Bits(row).fold(0, |acc, u| acc | bit(perm[u]));
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for (v, s) in l.iter().enumerate() {
                out[perm[v]] = s.clone();
            }
            out
        });
        Ok(Graph {
            n: self.n,
            adj,
            labels,
        })
    }
}

fn merge_labels(g: &Graph, h: &Graph) -> Option<Vec<String>> {
    if g.labels.is_none() && h.labels.is_none() {
        return None;
    }
    let mut out: Vec<String> = (0..g.n).map(|v| g.label(v)).collect();
    out.extend((0..h.n).map(|v| h.label(v)));
    Some(out)
}

pub(crate) fn component_in(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in Bits(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

pub(crate) fn is_stable(adj: &[u64], s: u64) -> bool {
    Bits(s).all(|v| adj[v] & s == 0)
}

pub(crate) fn clique_number_within(adj: &[u64], within: u64) -> usize {
    fn grow(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut cand = cand;
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !bit(v);
            grow(adj, size + 1, cand & adj[v], best);
        }
    }
    let mut best = 0;
    grow(adj, 0, within, &mut best);
    best
}

/// Bron–Kerbosch with pivoting on the complement: calls `out` once per
/// maximal stable set of `G[within]`.
pub(crate) fn for_each_maximal_stable(adj: &[u64], within: u64, out: &mut dyn FnMut(u64)) {
    fn rec(adj: &[u64], within: u64, r: u64, mut p: u64, mut x: u64, out: &mut dyn FnMut(u64)) {
        if p == 0 {
            if x == 0 {
                out(r);
            }
            return;
        }
        // Pivot minimizing |P ∩ N[u]| leaves the fewest branches.
        let mut pivot_branch = p;
        let mut best = u32::MAX;
        for u in Bits(p | x) {
            let branch = p & (adj[u] | bit(u));
            let c = branch.count_ones();
            if c < best {
                best = c;
                pivot_branch = branch;
                if c <= 1 {
                    break;
                }
            }
        }
        for v in Bits(pivot_branch) {
            let non_nbrs = within & !adj[v] & !bit(v);
            rec(adj, within, r | bit(v), p & non_nbrs, x & non_nbrs, out);
            p &= !bit(v);
            x |= bit(v);
        }
    }
    if within == 0 {
        return;
    }
    rec(adj, within, 0, within, 0, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.induced_subgraph(set(&[0, 1, 2])).unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(k4.induced_subgraph(VertexSet::EMPTY).unwrap().n(), 0);
        let c6 = Graph::cycle(6).unwrap();
        let s = c6.induced_subgraph(set(&[0, 2, 4])).unwrap();
        assert_eq!((s.n(), s.m()), (3, 0));
        assert!(matches!(
            k4.induced_subgraph(set(&[5])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn join_examples() {
        let k2 = Graph::complete(2).unwrap();
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(Graph::join(&k2, &k1).unwrap(), Graph::complete(3).unwrap());
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(
            Graph::join(&e3, &e3).unwrap(),
            Graph::complete_bipartite(3, 3).unwrap()
        );
        let wheel = Graph::join(&Graph::cycle(5).unwrap(), &k1).unwrap();
        assert_eq!((wheel.n(), wheel.m()), (6, 10));
        let big = Graph::empty(40).unwrap();
        assert!(matches!(
            Graph::join(&big, &big),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).unwrap().is_connected().unwrap());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected().unwrap());
        assert!(Graph::complete(1).unwrap().is_connected().unwrap());
        assert!(Graph::empty(0).unwrap().is_connected().is_err());
    }

    #[test]
    fn bipartition_witness() {
        let c6 = Graph::cycle(6).unwrap();
        let (a, b) = c6.bipartition().unwrap();
        assert_eq!(a.union(b), c6.vertices());
        assert!(a.is_disjoint(b));
        assert!(c6.is_stable(a) && c6.is_stable(b));
        assert!(Graph::complete(3).unwrap().bipartition().is_none());
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(Graph::complete(5).unwrap().clique_number(), 5);
        assert_eq!(Graph::cycle(5).unwrap().clique_number(), 2);
        assert_eq!(Graph::empty(3).unwrap().clique_number(), 1);
    }

    #[test]
    fn maximal_stable_set_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            k3.maximal_stable_sets(),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.maximal_stable_sets(), vec![set(&[1]), set(&[0, 2])]);
        assert_eq!(
            Graph::empty(3).unwrap().maximal_stable_sets(),
            vec![set(&[0, 1, 2])]
        );
    }

    #[test]
    fn domination_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(k3.is_dominating(set(&[0]), set(&[0, 1, 2])).unwrap());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_dominating(set(&[0]), set(&[2, 3])).unwrap());
        let p4 = Graph::path(4).unwrap();
        assert!(p4.is_dominating(set(&[1, 3]), p4.vertices()).unwrap());
    }

    #[test]
    fn labels_do_not_affect_equality() {
        let a = Graph::path(2).unwrap();
        let b = a.clone().with_labels(vec!["x".into(), "y".into()]).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.vertex_by_label("y"), Some(1));
    }
}
