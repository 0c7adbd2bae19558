use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

use super::{
    achromatic_number, chromatic_number, grundy_number, is_complete, is_grundy, is_proper, Coloring,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub chi: Coloring,
    pub gamma: Coloring,
    pub psi: Coloring,
}

/// ω, χ, Γ and ψ of one graph, with an optimal coloring for each of the last three.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub chi: usize,
    pub gamma: usize,
    pub psi: usize,
    pub witnesses: Witnesses,
}

impl InvariantReport {
    /// `(χ, Γ, ψ)`.
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.chi, self.gamma, self.psi)
    }
}

pub fn analyze(g: &Graph) -> Result<InvariantReport> {
    let omega = g.clique_number();
    let (chi, chi_w) = chromatic_number(g)?;
    let (gamma, gamma_w) = grundy_number(g)?;
    let (psi, psi_w) = achromatic_number(g)?;
    assert!(
        omega <= chi && chi <= gamma && gamma <= psi,
        "ω ≤ χ ≤ Γ ≤ ψ violated"
    );
    assert!(
        is_proper(g, &chi_w)? && is_complete(g, &chi_w)?,
        "χ witness is not complete"
    );
    assert!(is_grundy(g, &gamma_w)?, "Γ witness is not Grundy");
    assert!(is_complete(g, &psi_w)?, "ψ witness is not complete");
    Ok(InvariantReport {
        n: g.n(),
        m: g.m(),
        omega,
        chi,
        gamma,
        psi,
        witnesses: Witnesses {
            chi: chi_w,
            gamma: gamma_w,
            psi: psi_w,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_report() {
        let r = analyze(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!((r.omega, r.triple()), (4, (4, 4, 4)));
    }

    #[test]
    fn json_shape() {
        let r = analyze(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"n":4,"m":3,"omega":2,"chi":2,"gamma":3,"psi":3,"witnesses":{"chi":[1,2,1,2],"gamma":[1,2,3,1],"psi":[1,2,3,1]}}"#
        );
    }
}
