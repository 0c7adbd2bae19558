//! Colorings, their verifiers and exact solvers for χ, Γ and ψ.

mod achromatic;
mod certificate;
mod chromatic;
mod grundy;
mod report;

pub use achromatic::{
    achromatic_number, achromatic_value, all_complete_colorings, complete_coloring_with,
    for_each_complete_coloring, has_complete_coloring, MAX_ACHROMATIC_VERTICES,
    MAX_ENUMERATION_VERTICES,
};
pub use certificate::{check_certificate, has_property_pi, CertificateCheck, GrundyCertificate};
pub use chromatic::{chromatic_number, chromatic_value, is_colorable};
pub use grundy::{
    grundy_at_least, grundy_by_firstfit, grundy_number, grundy_value, MAX_FIRSTFIT_VERTICES,
    MAX_GRUNDY_VERTICES,
};
pub use report::{analyze, InvariantReport, Witnesses};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};

/// Total assignment vertex → color in `1..=k` with every class nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.colors.serialize(s)
    }
}

impl Coloring {
    /// Wraps 1-based colors; every color between 1 and the maximum must occur.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(Error::invalid("colors are 1-based; found color 0"));
        }
        let mut seen = vec![false; k + 1];
        for &c in &colors {
            seen[c] = true;
        }
        if let Some(c) = (1..=k).find(|&c| !seen[c]) {
            return Err(Error::invalid(format!(
                "color class {c} of 1..={k} is empty"
            )));
        }
        Ok(Coloring { colors, k })
    }

    /// Builds a coloring from disjoint classes; class `i` gets color `i + 1`.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Result<Self> {
        let mut colors = vec![0usize; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                if v >= n {
                    return Err(Error::invalid(format!("vertex {v} out of range")));
                }
                if colors[v] != 0 {
                    return Err(Error::invalid(format!("vertex {v} is in two classes")));
                }
                colors[v] = i + 1;
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::invalid(format!("vertex {v} is uncolored")));
        }
        Coloring::new(colors)
    }

    pub(crate) fn from_raw(colors: Vec<usize>, k: usize) -> Self {
        debug_assert!(Coloring::new(colors.clone()).map(|c| c.k) == Ok(k));
        Coloring { colors, k }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Number of colors used.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn class_of(&self, c: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .map(|(v, _)| v)
            .collect()
    }

    /// Classes `1..=k` in color order.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c - 1].insert(v);
        }
        out
    }

    fn check_host(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::invalid(format!(
                "coloring covers {} vertices, graph has {}",
                self.colors.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// No edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_host(g)?;
    Ok(g.edges().all(|(u, v)| c.colors[u] != c.colors[v]))
}

/// Proper, and every two color classes are joined by an edge.
pub fn is_complete(g: &Graph, c: &Coloring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    let classes = c.classes();
    let adj = g.adjacency();
    for (a, ca) in classes.iter().enumerate() {
        let reach = Bits(ca.bits()).fold(0u64, |acc, v| acc | adj[v]);
        if classes[a + 1..].iter().any(|cb| reach & cb.bits() == 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Proper, and each vertex of color `j` sees every color `i < j`.
pub fn is_grundy(g: &Graph, c: &Coloring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    let adj = g.adjacency();
    Ok((0..g.n()).all(|v| {
        let seen = Bits(adj[v]).fold(0u128, |acc, u| acc | 1u128 << c.colors[u]);
        (1..c.colors[v]).all(|i| seen & (1u128 << i) != 0)
    }))
}
