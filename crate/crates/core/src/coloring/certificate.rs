use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

use super::grundy::grundy_value;

/// An induced subgraph `H = G[h_set]` with `Γ(H) ≥ k`, plus a stable set
/// `s_set` disjoint from `H` that dominates it. Together they certify
/// `Γ(G) ≥ k + 1`: color `s_set` with 1 and shift a Grundy coloring of `H` up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrundyCertificate {
    pub h_set: VertexSet,
    pub s_set: VertexSet,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub valid: bool,
    /// Why the certificate was rejected.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// `k + 1` when valid.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub implied_lower_bound: Option<usize>,
}

impl CertificateCheck {
    fn reject(reason: impl Into<String>) -> Self {
        CertificateCheck {
            valid: false,
            reason: Some(reason.into()),
            implied_lower_bound: None,
        }
    }
}

pub fn check_certificate(g: &Graph, cert: &GrundyCertificate) -> Result<CertificateCheck> {
    g.check_set(cert.h_set, "h_set")?;
    g.check_set(cert.s_set, "s_set")?;
    if !cert.h_set.is_disjoint(cert.s_set) {
        return Ok(CertificateCheck::reject("not disjoint"));
    }
    if cert.h_set.is_empty() {
        return Ok(CertificateCheck::reject("h_set is empty"));
    }
    if !g.is_stable(cert.s_set) {
        return Ok(CertificateCheck::reject("s_set is not stable"));
    }
    if !g.is_dominating(cert.s_set, cert.h_set)? {
        return Ok(CertificateCheck::reject("s_set does not dominate h_set"));
    }
    let gamma_h = grundy_value(&g.induced_subgraph(cert.h_set)?)?;
    if gamma_h < cert.k {
        return Ok(CertificateCheck::reject(format!(
            "Grundy number of the induced subgraph is {gamma_h}, below {}",
            cert.k
        )));
    }
    Ok(CertificateCheck {
        valid: true,
        reason: None,
        implied_lower_bound: Some(cert.k + 1),
    })
}

/// Every component is a single vertex or a complete bipartite graph.
pub fn has_property_pi(g: &Graph) -> bool {
    g.components().into_iter().all(|comp| {
        if comp.len() == 1 {
            return true;
        }
        let h = g
            .induced_subgraph(comp)
            .expect("component lies inside the graph");
        match h.bipartition() {
            Some((a, b)) => h.m() == a.len() * b.len(),
            None => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::grundy_value;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn apex_over_triangle() {
        let k4 = Graph::complete(4).unwrap();
        let cert = GrundyCertificate {
            h_set: set(&[0, 1, 2]),
            s_set: set(&[3]),
            k: 3,
        };
        let check = check_certificate(&k4, &cert).unwrap();
        assert!(check.valid);
        assert_eq!(check.implied_lower_bound, Some(4));
        assert_eq!(grundy_value(&k4).unwrap(), 4);
    }

    #[test]
    fn rejections() {
        let k4 = Graph::complete(4).unwrap();
        let overlap = GrundyCertificate {
            h_set: set(&[0, 1, 2]),
            s_set: set(&[2, 3]),
            k: 3,
        };
        assert_eq!(
            check_certificate(&k4, &overlap).unwrap().reason.as_deref(),
            Some("not disjoint")
        );
        let unstable = GrundyCertificate {
            h_set: set(&[0]),
            s_set: set(&[1, 2]),
            k: 1,
        };
        assert!(!check_certificate(&k4, &unstable).unwrap().valid);
        let too_high = GrundyCertificate {
            h_set: set(&[0, 1]),
            s_set: set(&[2]),
            k: 3,
        };
        assert!(!check_certificate(&k4, &too_high).unwrap().valid);
        let p4 = Graph::path(4).unwrap();
        let undominated = GrundyCertificate {
            h_set: set(&[2, 3]),
            s_set: set(&[0]),
            k: 2,
        };
        assert_eq!(
            check_certificate(&p4, &undominated)
                .unwrap()
                .reason
                .as_deref(),
            Some("s_set does not dominate h_set")
        );
        let out_of_range = GrundyCertificate {
            h_set: set(&[9]),
            s_set: set(&[0]),
            k: 1,
        };
        assert!(check_certificate(&p4, &out_of_range).is_err());
    }

    #[test]
    fn property_pi_examples() {
        let k33_k1 = Graph::disjoint_union(
            &Graph::complete_bipartite(3, 3).unwrap(),
            &Graph::complete(1).unwrap(),
        )
        .unwrap();
        assert!(has_property_pi(&k33_k1));
        assert!(!has_property_pi(&Graph::path(4).unwrap()));
        assert!(has_property_pi(
            &Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
        ));
        assert!(!has_property_pi(&Graph::complete(3).unwrap()));
        assert!(has_property_pi(&Graph::empty(3).unwrap()));
    }

    #[test]
    fn certificate_json_shape() {
        let cert: GrundyCertificate =
            serde_json::from_str(r#"{"h_set":[0,1,2],"s_set":[3],"k":3}"#).unwrap();
        assert_eq!(cert.h_set, set(&[0, 1, 2]));
        assert!(
            serde_json::from_str::<GrundyCertificate>(r#"{"h_set":[70],"s_set":[],"k":1}"#)
                .is_err()
        );
    }
}
