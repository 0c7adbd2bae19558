//! Canonical forms by individualization and refinement.
//!
//! The search refines an ordered partition to an equitable one, branches on
//! the first smallest non-singleton cell and keeps the least upper-triangle
//! adjacency code over all leaves. Automorphisms discovered at equal leaves
//! prune sibling branches lying in the same orbit.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Bits, Graph};

/// Largest vertex count with an exact canonical form (upper triangle fits 128 bits).
pub const MAX_CANON_VERTICES: usize = 16;

/// Isomorphism-invariant key of a graph: vertex count plus the least
/// upper-triangle adjacency code over the labelings reached by the search.
///
/// Bits are ordered `(0,1), (0,2), .., (0,n-1), (1,2), ..` with the first
/// pair most significant, right-aligned in `code`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn code(self) -> u128 {
        self.code
    }

    /// Vertex count byte followed by the big-endian code bytes.
    pub fn to_bytes(self) -> Vec<u8> {
        let pairs = pair_count(self.n());
        let nbytes = pairs.div_ceil(8);
        let mut out = Vec::with_capacity(1 + nbytes);
        out.push(self.n);
        out.extend_from_slice(&self.code.to_be_bytes()[16 - nbytes..]);
        out
    }

    /// Lowercase hex of [`to_bytes`](Self::to_bytes).
    pub fn to_hex(self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        if s.len() < 2 || !s.len().is_multiple_of(2) {
            return Err(Error::invalid("canonical hex must hold whole bytes"));
        }
        let bytes: Vec<u8> = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16))
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::invalid(format!("bad canonical hex: {e}")))?;
        let n = bytes[0] as usize;
        if n > MAX_CANON_VERTICES {
            return Err(Error::capacity("vertex count", n, MAX_CANON_VERTICES));
        }
        let nbytes = pair_count(n).div_ceil(8);
        if bytes.len() != 1 + nbytes {
            return Err(Error::invalid(
                "canonical hex length does not match vertex count",
            ));
        }
        let code = bytes[1..]
            .iter()
            .fold(0u128, |acc, &b| (acc << 8) | b as u128);
        if pair_count(n) < 128 && code >> pair_count(n) != 0 {
            return Err(Error::invalid(
                "canonical hex has bits beyond the upper triangle",
            ));
        }
        Ok(CanonicalForm { n: n as u8, code })
    }

    /// The representative graph whose adjacency is exactly this code.
    pub fn to_graph(self) -> Graph {
        Graph::from_rows_unchecked(self.rows().to_vec()[..self.n()].to_vec())
    }

    pub(crate) fn rows(self) -> [u64; MAX_CANON_VERTICES] {
        decode(self.n(), self.code)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[inline]
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn encode(adj: &[u64], lab: &[u8]) -> u128 {
    let n = lab.len();
    let mut code = 0u128;
    for i in 0..n {
        let row = adj[lab[i] as usize];
        for &lj in &lab[i + 1..] {
            code = (code << 1) | ((row >> lj) & 1) as u128;
        }
    }
    code
}

fn decode(n: usize, code: u128) -> [u64; MAX_CANON_VERTICES] {
    let mut rows = [0u64; MAX_CANON_VERTICES];
    let mut k = pair_count(n);
    for i in 0..n {
        for j in i + 1..n {
            k -= 1;
            if (code >> k) & 1 == 1 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    rows
}

/// Ordered partition of the vertex set; cells are bitsets.
type Partition = Vec<u64>;

/// Refines `cells` to the coarsest equitable partition finer than it.
/// Splits are ordered by neighbor count so the result is equivariant.
pub(crate) fn refine(adj: &[u64], cells: &mut Partition) {
    let mut counts = [0u32; 64];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut c = 0;
            while c < cells.len() {
                let cell = cells[c];
                if cell & (cell - 1) == 0 {
                    c += 1;
                    continue;
                }
                let mut lo = u32::MAX;
                let mut hi = 0;
                for v in Bits(cell) {
                    let k = (adj[v] & splitter).count_ones();
                    counts[v] = k;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    c += 1;
                    continue;
                }
                let mut parts: Vec<u64> = Vec::new();
                let mut keys: Vec<u32> = Vec::new();
                for v in Bits(cell) {
                    match keys.binary_search(&counts[v]) {
                        Ok(i) => parts[i] |= bit(v),
                        Err(i) => {
                            keys.insert(i, counts[v]);
                            parts.insert(i, bit(v));
                        }
                    }
                }
                let added = parts.len();
                cells.splice(c..=c, parts);
                c += added;
                changed = true;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<(u128, Vec<u8>)>,
    best: Option<(u128, Vec<u8>)>,
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn leaf_labeling(cells: &Partition) -> Vec<u8> {
        cells.iter().map(|c| c.trailing_zeros() as u8).collect()
    }

    fn record_auto(&mut self, from: &[u8], to: &[u8]) {
        let mut perm = vec![0u8; self.n];
        for (a, b) in from.iter().zip(to) {
            perm[*a as usize] = *b;
        }
        if perm.iter().enumerate().any(|(i, &p)| p as usize != i) {
            self.autos.push(perm);
        }
    }

    /// Orbit representative of each vertex under the automorphisms found so
    /// far that fix every vertex of `fixed`.
    fn orbits(&self, fixed: u64) -> Vec<u8> {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        fn find(p: &mut [u8], mut x: u8) -> u8 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for perm in &self.autos {
            if Bits(fixed).any(|v| perm[v] as usize != v) {
                continue;
            }
            for (v, &img) in perm.iter().enumerate() {
                let a = find(&mut parent, v as u8);
                let b = find(&mut parent, img);
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi as usize] = lo;
                }
            }
        }
        (0..self.n as u8).map(|v| find(&mut parent, v)).collect()
    }

    fn run(&mut self, mut cells: Partition, fixed: u64) {
        refine(self.adj, &mut cells);
        if cells.len() == self.n {
            let lab = Self::leaf_labeling(&cells);
            let code = encode(self.adj, &lab);
            match (&self.first, &self.best) {
                (None, _) => {
                    self.first = Some((code, lab.clone()));
                    self.best = Some((code, lab));
                }
                (Some((fc, fl)), Some((bc, bl))) => {
                    if code == *fc {
                        let fl = fl.clone();
                        self.record_auto(&fl, &lab);
                    } else if code == *bc {
                        let bl = bl.clone();
                        self.record_auto(&bl, &lab);
                    } else if code < *bc {
                        self.best = Some((code, lab));
                    }
                }
                _ => unreachable!(),
            }
            return;
        }
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut tried = 0u64;
        for v in Bits(cell) {
            if tried != 0 {
                let orb = self.orbits(fixed);
                if Bits(tried).any(|t| orb[t] == orb[v]) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            self.run(child, fixed | bit(v));
            tried |= bit(v);
        }
    }
}

/// Canonical code and labeling (`lab[i]` = original vertex placed at position
/// `i`) of the graph given by `adj`, starting from the ordered partition `cells`.
pub(crate) fn canonical_labeling_rows(adj: &[u64], cells: Partition) -> (CanonicalForm, Vec<u8>) {
    let n = adj.len();
    debug_assert!(n <= MAX_CANON_VERTICES);
    if n == 0 {
        return (CanonicalForm { n: 0, code: 0 }, Vec::new());
    }
    let mut search = Search {
        adj,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    search.run(cells, 0);
    let (code, lab) = search.best.expect("search reaches at least one leaf");
    (CanonicalForm { n: n as u8, code }, lab)
}

/// Canonical form of `adj` with every vertex in one initial cell.
pub(crate) fn canonical_form_rows(adj: &[u64]) -> CanonicalForm {
    let n = adj.len();
    let cells = if n == 0 {
        Vec::new()
    } else {
        vec![low_mask(n)]
    };
    canonical_labeling_rows(adj, cells).0
}

/// Canonical form of `adj` with vertex `v` individualized first. Two marked
/// forms are equal iff some automorphism maps one marked vertex to the other.
pub(crate) fn marked_form_rows(adj: &[u64], v: usize) -> CanonicalForm {
    let n = adj.len();
    let rest = low_mask(n) & !bit(v);
    let cells = if rest == 0 {
        vec![bit(v)]
    } else {
        vec![bit(v), rest]
    };
    canonical_labeling_rows(adj, cells).0
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(Error::capacity("vertex count", g.n(), MAX_CANON_VERTICES));
    }
    Ok(())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_size(g)?;
    Ok(canonical_form_rows(g.adjacency()))
}

/// Canonical form plus the permutation `perm` (vertex `v` goes to `perm[v]`)
/// carrying `g` onto [`CanonicalForm::to_graph`].
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    check_size(g)?;
    let n = g.n();
    let cells = if n == 0 {
        Vec::new()
    } else {
        vec![low_mask(n)]
    };
    let (form, lab) = canonical_labeling_rows(g.adjacency(), cells);
    let mut perm = vec![0usize; n];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v as usize] = pos;
    }
    Ok((form, perm))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_size(g)?;
    check_size(h)?;
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_path_has_same_form() {
        let p = Graph::path(4).unwrap();
        // P_4 labeled 2-0-3-1
        let q = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
    }

    #[test]
    fn cycle_versus_two_triangles() {
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(
            canonical_form(&c6).unwrap(),
            canonical_form(&two_k3).unwrap()
        );
        assert!(!are_isomorphic(&c6, &Graph::complete_bipartite(3, 3).unwrap()).unwrap());
    }

    #[test]
    fn symmetric_graphs_are_fast_and_consistent() {
        for n in [1, 2, 5, 10, 16] {
            let k = Graph::complete(n).unwrap();
            let f = canonical_form(&k).unwrap();
            assert_eq!(f.to_graph(), k);
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_form(&e).unwrap().code(), 0);
        }
        let k88 = Graph::complete_bipartite(8, 8).unwrap();
        let f = canonical_form(&k88).unwrap();
        assert!(are_isomorphic(&f.to_graph(), &k88).unwrap());
    }

    #[test]
    fn labeling_maps_onto_representative() {
        let g = Graph::from_edges(6, &[(0, 3), (3, 5), (5, 1), (1, 4), (2, 4)]).unwrap();
        let (form, perm) = canonical_labeling(&g).unwrap();
        assert_eq!(g.permute(&perm).unwrap(), form.to_graph());
    }

    #[test]
    fn hex_round_trip() {
        let g = Graph::cycle(7).unwrap();
        let f = canonical_form(&g).unwrap();
        assert_eq!(CanonicalForm::from_hex(&f.to_hex()).unwrap(), f);
        assert!(f
            .to_hex()
            .chars()
            .all(|c| c.is_ascii_digit() || ('a'..='f').contains(&c)));
    }

    #[test]
    fn too_many_vertices() {
        let g = Graph::empty(17).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::Capacity { .. })));
    }
}
