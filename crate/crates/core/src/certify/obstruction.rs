use serde::{Deserialize, Serialize};

use crate::bounds::{adjacency_spectrum, energy_ratio, hoffman_ratio};
use crate::error::{Error, Result};
use crate::graph::{write_graph6, Graph, GraphSpec};
use crate::spectra::squared_energies;
use crate::symmetry::edge_orbits;

/// Smallest margin accepted as a proof of non-existence.
pub const CERTIFIED_TOLERANCE: f64 = 1e-9;

/// Evidence that no homomorphism `source -> target` exists: if one did,
/// `ratio_G <= ratio_H` would hold for the edge-transitive target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub source: GraphSpec,
    pub target: GraphSpec,
    pub s_plus: f64,
    pub s_minus: f64,
    /// `max(s+/s-, s-/s+)` of the source.
    #[serde(rename = "ratio_G")]
    pub ratio_g: f64,
    #[serde(rename = "lambda_max_H")]
    pub lambda_max_h: f64,
    #[serde(rename = "lambda_min_H")]
    pub lambda_min_h: f64,
    /// `lambda_max / |lambda_min|` of the target.
    #[serde(rename = "ratio_H")]
    pub ratio_h: f64,
    /// `ratio_G - ratio_H`.
    pub margin: f64,
    /// Number of edge orbits of `Aut(target)`; always 1 for a certificate.
    pub edge_transitivity_witness: usize,
    pub tolerance: f64,
    /// `margin > tolerance`. Otherwise the result is inconclusive, which
    /// says nothing about existence.
    pub certified: bool,
}

/// Certificate for graphs given by spec; the specs are embedded so the
/// certificate can be re-checked independently.
pub fn certify_specs(source: &GraphSpec, target: &GraphSpec) -> Result<ObstructionCertificate> {
    let g = source.build()?;
    let h = target.build()?;
    build(&g, &h, source.clone(), target.clone())
}

/// Certificate for in-memory graphs; they are embedded as graph6 specs.
pub fn obstruction_certificate(g: &Graph, h: &Graph) -> Result<ObstructionCertificate> {
    build(g, h, GraphSpec::Graph6(write_graph6(g)), GraphSpec::Graph6(write_graph6(h)))
}

fn build(g: &Graph, h: &Graph, source: GraphSpec, target: GraphSpec) -> Result<ObstructionCertificate> {
    if g.edge_count() == 0 || h.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let orbits = edge_orbits(h)?;
    if orbits.len() != 1 {
        return Err(Error::NotEdgeTransitive { first: orbits[0][0], second: orbits[1][0] });
    }
    let spec_g = adjacency_spectrum(g)?;
    let spec_h = adjacency_spectrum(h)?;
    let (s_plus, s_minus) = squared_energies(&spec_g);
    let ratio_g = energy_ratio(&spec_g)?;
    let ratio_h = hoffman_ratio(&spec_h)?;
    let margin = ratio_g - ratio_h;
    Ok(ObstructionCertificate {
        source,
        target,
        s_plus,
        s_minus,
        ratio_g,
        lambda_max_h: spec_h.lambda_max(),
        lambda_min_h: spec_h.lambda_min(),
        ratio_h,
        margin,
        edge_transitivity_witness: orbits.len(),
        tolerance: CERTIFIED_TOLERANCE,
        certified: margin > CERTIFIED_TOLERANCE,
    })
}

/// Rebuilds both graphs from the embedded specs, recomputes every number
/// and compares to relative accuracy `1e-9`.
pub fn verify_certificate(cert: &ObstructionCertificate) -> Result<ObstructionCertificate> {
    let fresh = certify_specs(&cert.source, &cert.target)?;
    let fields = [
        ("s_plus", cert.s_plus, fresh.s_plus),
        ("s_minus", cert.s_minus, fresh.s_minus),
        ("ratio_G", cert.ratio_g, fresh.ratio_g),
        ("lambda_max_H", cert.lambda_max_h, fresh.lambda_max_h),
        ("lambda_min_H", cert.lambda_min_h, fresh.lambda_min_h),
        ("ratio_H", cert.ratio_h, fresh.ratio_h),
        ("margin", cert.margin, fresh.margin),
    ];
    for (name, claimed, actual) in fields {
        if (claimed - actual).abs() > 1e-9 * actual.abs().max(1.0) {
            return Err(Error::Verification(format!("{name}: certificate says {claimed}, recomputed {actual}")));
        }
    }
    if cert.edge_transitivity_witness != fresh.edge_transitivity_witness {
        return Err(Error::Verification("edge-transitivity witness does not match".into()));
    }
    if cert.certified && !fresh.certified {
        return Err(Error::Verification(format!("claims certified but the recomputed margin is {}", fresh.margin)));
    }
    Ok(fresh)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GraphSpec {
        GraphSpec::parse(s).unwrap()
    }

    #[test]
    fn petersen_to_c7() {
        let c = certify_specs(&spec("petersen"), &spec("cycle:7")).unwrap();
        assert!((c.ratio_g - 8.0 / 7.0).abs() < 1e-10);
        assert!((c.ratio_h - 1.109916).abs() < 1e-6);
        assert!((c.margin - 0.032941).abs() < 1e-6);
        assert!(c.certified);
        assert_eq!(c.edge_transitivity_witness, 1);
        verify_certificate(&c).unwrap();
    }

    #[test]
    fn inconclusive_and_refused() {
        let c = certify_specs(&spec("complete:3"), &spec("complete:3")).unwrap();
        assert!(c.margin.abs() < 1e-9 && !c.certified);
        let c = certify_specs(&spec("complete:4"), &spec("cycle:5")).unwrap();
        assert!((c.ratio_g - 3.0).abs() < 1e-9 && (c.ratio_h - 1.236068).abs() < 1e-6 && c.certified);
        assert!(matches!(certify_specs(&spec("complete:3"), &spec("complement:cycle:6")), Err(Error::NotEdgeTransitive { .. })));
        assert_eq!(certify_specs(&spec("empty:3"), &spec("cycle:5")), Err(Error::Edgeless));
    }

    #[test]
    fn tampering_is_detected() {
        let mut c = certify_specs(&spec("petersen"), &spec("cycle:7")).unwrap();
        c.ratio_h = 1.0;
        assert!(verify_certificate(&c).is_err());
        let mut c = certify_specs(&spec("complete:3"), &spec("complete:3")).unwrap();
        c.certified = true;
        assert!(verify_certificate(&c).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = certify_specs(&spec("petersen"), &spec("cycle:7")).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.contains("\"ratio_G\"") && text.contains("\"source\":\"petersen\""));
        let back: ObstructionCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }
}
