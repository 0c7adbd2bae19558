//! Builders for the extremal families and the minimum-order realizer.
//!
//! Vertex numbering is fixed: in `B_k`, `u_1..u_{k-1}` come first and then
//! `w_2..w_k`; in the extended graph and in `L_1`, `L_2`, `u_1..u_ℓ` come
//! first, then `w_1..w_ℓ`, then `q_1`, `q_2`.

use std::fmt;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Target invariants `(χ, Γ, ψ) = (f, g, h)` with `2 ≤ f ≤ g ≤ h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    pub f: usize,
    pub g: usize,
    pub h: usize,
}

impl Triple {
    pub fn new(f: usize, g: usize, h: usize) -> Result<Self> {
        if !(2 <= f && f <= g && g <= h) {
            return Err(Error::invalid(format!(
                "triple ({f},{g},{h}) must satisfy 2 ≤ f ≤ g ≤ h"
            )));
        }
        Ok(Triple { f, g, h })
    }

    /// Every well-formed triple with `h ≤ max_h`, in lexicographic order.
    pub fn all_up_to(max_h: usize) -> Vec<Triple> {
        let mut out = Vec::new();
        for f in 2..=max_h {
            for g in f..=max_h {
                for h in g..=max_h {
                    out.push(Triple { f, g, h });
                }
            }
        }
        out
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.f, self.g, self.h)
    }
}

/// The two graphs of the second construction; `L1` has the extra edge `q_1 w_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LVariant {
    L1,
    L2,
}

impl TryFrom<u8> for LVariant {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(LVariant::L1),
            2 => Ok(LVariant::L2),
            _ => Err(Error::invalid(format!("variant must be 1 or 2, got {v}"))),
        }
    }
}

/// Parameters of the builder behind [`realize`] for triples not realized by
/// a bare clique.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    /// Size parameter of the underlying `B_k`.
    pub k: usize,
    /// Width of the inserted edges, `g' - 3`, for the bipartite family.
    pub gamma_ins: Option<usize>,
    /// `ℓ = h' - 2` for the `L` family.
    pub ell: Option<usize>,
    pub variant: Option<LVariant>,
    /// Order of the clique joined to the base graph.
    pub clique: usize,
}

fn labeled(g: Graph, labels: Vec<String>) -> Graph {
    g.with_labels(labels).expect("one label per vertex")
}

fn index_u(i: usize) -> usize {
    i - 1
}

/// `w_j` in `B_k`.
fn index_w_b(k: usize, j: usize) -> usize {
    k + j - 3
}

/// `w_j` in the extended graph on `2ℓ` vertices.
fn index_w_ext(ell: usize, j: usize) -> usize {
    ell + j - 1
}

/// `B_k`: `u_1..u_{k-1}`, `w_2..w_k`, edges `u_i w_j` for `i < j`.
pub fn basic_bipartite(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::invalid(format!("B_k needs k ≥ 2, got {k}")));
    }
    let mut g = Graph::empty(2 * k - 2)?;
    for i in 1..k {
        for j in i + 1..=k {
            g.add_edge(index_u(i), index_w_b(k, j))?;
        }
    }
    let labels = (1..k)
        .map(|i| format!("u{i}"))
        .chain((2..=k).map(|j| format!("w{j}")))
        .collect();
    Ok(labeled(g, labels))
}

/// `G(2,g,h)`: `B_h` plus the edges `u_i w_j` with `1 ≤ i - j ≤ g - 3`,
/// `2 ≤ i ≤ h - 1`, `2 ≤ j ≤ h - 2`.
pub fn g_star(g: usize, h: usize) -> Result<Graph> {
    if g < 3 || g > h {
        return Err(Error::invalid(format!(
            "G(2,g,h) needs 3 ≤ g ≤ h, got g={g}, h={h}"
        )));
    }
    let mut out = basic_bipartite(h)?;
    let gamma = g - 3;
    for j in 2..=h.saturating_sub(2) {
        for i in j + 1..=(j + gamma).min(h - 1) {
            out.add_edge(index_u(i), index_w_b(h, j))?;
        }
    }
    Ok(out)
}

/// `R_t = K_{t,t}` minus a perfect matching; vertex `i` and `t + i` are the
/// unmatched pair.
pub fn reduced_graph(t: usize) -> Result<Graph> {
    if t < 1 {
        return Err(Error::invalid("R_t needs t ≥ 1"));
    }
    let mut g = Graph::empty(2 * t)?;
    for i in 0..t {
        for j in 0..t {
            if i != j {
                g.add_edge(i, t + j)?;
            }
        }
    }
    let labels = (1..=t)
        .map(|i| format!("a{i}"))
        .chain((1..=t).map(|i| format!("b{i}")))
        .collect();
    Ok(labeled(g, labels))
}

/// `B_ℓ` plus isolated `u_ℓ` and `w_1`, for any `ℓ ≥ 0`.
pub(crate) fn extended_any(ell: usize) -> Result<Graph> {
    let mut g = Graph::empty(2 * ell)?;
    for i in 1..=ell {
        for j in i + 1..=ell {
            g.add_edge(index_u(i), index_w_ext(ell, j))?;
        }
    }
    let labels = (1..=ell)
        .map(|i| format!("u{i}"))
        .chain((1..=ell).map(|j| format!("w{j}")))
        .collect();
    Ok(labeled(g, labels))
}

/// `B_ℓ` extended by the isolated vertices `u_ℓ` and `w_1`.
pub fn extended_graph(ell: usize) -> Result<Graph> {
    if ell < 2 {
        return Err(Error::invalid(format!(
            "extended graph needs ℓ ≥ 2, got {ell}"
        )));
    }
    extended_any(ell)
}

/// `L_1` or `L_2` with `ℓ = h - 2`, on `2h - 2` vertices.
pub fn l_graph(h: usize, variant: LVariant) -> Result<Graph> {
    if h < 4 {
        return Err(Error::invalid(format!("L graphs need h ≥ 4, got {h}")));
    }
    let ell = h - 2;
    let base = extended_any(ell)?;
    let mut labels = base.labels().expect("labeled").to_vec();
    labels.push("q1".into());
    labels.push("q2".into());
    let q1 = 2 * ell;
    let q2 = q1 + 1;
    let mut g = Graph::disjoint_union(&base.without_labels(), &Graph::empty(2)?)?;
    for i in 1..=ell {
        g.add_edge(q1, index_u(i))?;
        g.add_edge(q2, index_w_ext(ell, i))?;
    }
    g.add_edge(q2, index_u(ell))?;
    g.add_edge(q1, q2)?;
    if variant == LVariant::L1 {
        g.add_edge(q1, index_w_ext(ell, 1))?;
    }
    Ok(labeled(g, labels))
}

/// Whether some connected graph has `(χ, Γ, ψ) = (f, g, h)`.
pub fn is_realizable(t: Triple) -> bool {
    t.g >= 3 || (t.f, t.g, t.h) == (2, 2, 2)
}

/// Least order of a connected graph realizing `t`.
pub fn min_order(t: Triple) -> Result<usize> {
    if !is_realizable(t) {
        return Err(Error::Domain(format!("triple {t} is not realizable")));
    }
    Ok(if t.f == t.h {
        t.f
    } else if t.f < t.g {
        2 * t.h - t.f
    } else {
        2 * t.h - t.f + 1
    })
}

/// Builder parameters for `t`, or `None` when `t` is realized by `K_f`.
pub fn construction_params(t: Triple) -> Result<Option<ConstructionParams>> {
    if !is_realizable(t) {
        return Err(Error::Domain(format!("triple {t} is not realizable")));
    }
    if t.f == t.h {
        return Ok(None);
    }
    Ok(Some(if t.f < t.g {
        let g2 = t.g - t.f + 2;
        ConstructionParams {
            k: t.h - t.f + 2,
            gamma_ins: Some(g2 - 3),
            ell: None,
            variant: None,
            clique: t.f - 2,
        }
    } else {
        let ell = t.h - t.f + 1;
        ConstructionParams {
            k: ell,
            gamma_ins: None,
            ell: Some(ell),
            variant: Some(LVariant::L2),
            clique: t.f - 3,
        }
    }))
}

fn clique(r: usize) -> Result<Graph> {
    Ok(labeled(
        Graph::complete(r)?,
        (1..=r).map(|i| format!("k{i}")).collect(),
    ))
}

/// A connected graph on [`min_order`]`(t)` vertices with `(χ, Γ, ψ) = t`.
pub fn realize(t: Triple) -> Result<Graph> {
    let Some(p) = construction_params(t)? else {
        return clique(t.f);
    };
    let base = match p.variant {
        None => g_star(t.g - t.f + 2, p.k)?,
        Some(v) => l_graph(p.k + 2, v)?,
    };
    Graph::join(&base, &clique(p.clique)?)
}

/// Grundy `g`-coloring of `G(2,g,h)`: `u_1 → g`, `u_i, w_i → i - 1` for
/// `2 ≤ i ≤ g - 1`, `u_g..u_{h-1} → 1`, `w_g..w_h → g - 1`. For `g = h`
/// the same rule leaves `u_2` as the only vertex of `U` with color 1.
pub fn grundy_witness_gstar(g: usize, h: usize) -> Result<Coloring> {
    if g < 3 || g > h {
        return Err(Error::Domain(format!("no G(2,g,h) for g={g}, h={h}")));
    }
    let mut colors = vec![0; 2 * h - 2];
    colors[index_u(1)] = g;
    for i in 2..g {
        colors[index_u(i)] = i - 1;
        colors[index_w_b(h, i)] = i - 1;
    }
    for i in g..h {
        colors[index_u(i)] = 1;
    }
    for j in g..=h {
        colors[index_w_b(h, j)] = g - 1;
    }
    Coloring::new(colors)
}

/// Complete `h`-coloring of `B_h` (and of every `G(2,g,h)`) with classes
/// `{u_1}, {u_2,w_2}, .., {u_{h-1},w_{h-1}}, {w_h}`.
pub fn achromatic_witness_gstar(h: usize) -> Result<Coloring> {
    if h < 2 {
        return Err(Error::Domain(format!("no B_h for h={h}")));
    }
    let mut colors = vec![0; 2 * h - 2];
    for i in 1..h {
        colors[index_u(i)] = i;
    }
    for j in 2..=h {
        colors[index_w_b(h, j)] = j;
    }
    Coloring::new(colors)
}

/// Complete `h`-coloring of `L_1`/`L_2` with classes `{q_1}, {q_2}` and
/// `{u_i, w_i}`; `q_1 → 1`, `q_2 → 2`, pair `i → i + 2`.
pub fn achromatic_witness_l(h: usize, _variant: LVariant) -> Result<Coloring> {
    if h < 4 {
        return Err(Error::Domain(format!("no L graph for h={h}")));
    }
    let ell = h - 2;
    let mut colors = vec![0; 2 * ell + 2];
    for i in 1..=ell {
        colors[index_u(i)] = i + 2;
        colors[index_w_ext(ell, i)] = i + 2;
    }
    colors[2 * ell] = 1;
    colors[2 * ell + 1] = 2;
    Coloring::new(colors)
}
