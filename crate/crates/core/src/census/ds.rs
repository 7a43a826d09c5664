//! Exhaustive searches for cospectral mates, and their certificates.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Census, CensusQuery, Filters};
use crate::canon::{canonical_code, isomorphic};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::graph6::{decode_graph6, encode_graph6};
use crate::poly::IntPolynomial;
use crate::spectra::char_poly;

/// Record of a search over every isomorphism class on `target.order()`
/// vertices with the target's edge and triangle counts.
///
/// Cospectral graphs have equal traces of `A^2` and `A^3`, hence equal edge
/// and triangle counts, so the prefilter cannot drop a mate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DsCertificate {
    pub target: Graph,
    pub target_charpoly: IntPolynomial,
    pub space: CensusQuery,
    /// graph6 codes of the canonical representatives of every mate.
    pub mates: Vec<String>,
    pub exhaustive: bool,
    pub graphs_scanned: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsVerdict {
    DeterminedBySpectrum,
    HasMates(usize),
    Inconclusive,
}

#[derive(Serialize, Deserialize)]
struct FiltersJson {
    edges: Option<usize>,
    triangles: Option<usize>,
    connected: bool,
    /// Ascending coefficients of the required characteristic polynomial.
    charpoly: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct SpaceJson {
    n: usize,
    filters: FiltersJson,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    target_graph6: String,
    charpoly: Vec<String>,
    space: SpaceJson,
    mates: Vec<String>,
    exhaustive: bool,
    graphs_scanned: u64,
    tool_version: String,
}

fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn coeffs_from_strings(cs: &[String]) -> Result<IntPolynomial> {
    let parsed: Result<Vec<BigInt>> = cs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.parse::<BigInt>().map_err(|_| {
                Error::InvalidArgument(format!("coefficient {i} ({s:?}) is not an integer"))
            })
        })
        .collect();
    Ok(IntPolynomial::new(parsed?))
}

impl DsCertificate {
    pub fn verdict(&self) -> DsVerdict {
        match (self.mates.len(), self.exhaustive) {
            (0, true) => DsVerdict::DeterminedBySpectrum,
            (0, false) => DsVerdict::Inconclusive,
            (k, _) => DsVerdict::HasMates(k),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let json = CertificateJson {
            target_graph6: encode_graph6(&self.target)?,
            charpoly: coeff_strings(&self.target_charpoly),
            space: SpaceJson {
                n: self.space.n,
                filters: FiltersJson {
                    edges: self.space.filters.edges,
                    triangles: self.space.filters.triangles,
                    connected: self.space.filters.connected,
                    charpoly: self.space.filters.charpoly.as_ref().map(coeff_strings),
                },
            },
            mates: self.mates.clone(),
            exhaustive: self.exhaustive,
            graphs_scanned: self.graphs_scanned,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        };
        Ok(serde_json::to_string_pretty(&json).expect("certificate serializes"))
    }

    pub fn from_json(text: &str) -> Result<DsCertificate> {
        let json: CertificateJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: 0,
            message: format!("certificate JSON: {e}"),
        })?;
        let filters = Filters {
            edges: json.space.filters.edges,
            triangles: json.space.filters.triangles,
            connected: json.space.filters.connected,
            charpoly: json
                .space
                .filters
                .charpoly
                .as_deref()
                .map(coeffs_from_strings)
                .transpose()?,
        };
        Ok(DsCertificate {
            target: decode_graph6(&json.target_graph6)?,
            target_charpoly: coeffs_from_strings(&json.charpoly)?,
            space: CensusQuery {
                n: json.space.n,
                filters,
            },
            mates: json.mates,
            exhaustive: json.exhaustive,
            graphs_scanned: json.graphs_scanned,
        })
    }

    /// Recomputes everything the certificate asserts about its listed
    /// graphs: the target polynomial, and that every mate is cospectral with
    /// and nonisomorphic to the target. Exhaustiveness itself is not
    /// re-derived.
    pub fn reverify(&self) -> Result<DsVerdict> {
        let p = char_poly(&self.target);
        if p != self.target_charpoly {
            return invalid("recorded characteristic polynomial does not match the target");
        }
        if self.space.n != self.target.order() {
            return invalid("search space order differs from the target order");
        }
        for code in &self.mates {
            let m = decode_graph6(code)?;
            if char_poly(&m) != p {
                return invalid(format!("mate {code} is not cospectral with the target"));
            }
            if isomorphic(&m, &self.target) {
                return invalid(format!("mate {code} is isomorphic to the target"));
            }
        }
        Ok(self.verdict())
    }
}

impl Census {
    /// Scans every isomorphism class on `g.order()` vertices with `g`'s edge
    /// and triangle counts and lists those cospectral with but not
    /// isomorphic to `g`.
    pub fn verify_ds(&self, g: &Graph) -> Result<DsCertificate> {
        let counts = g.counts();
        let p = char_poly(g);
        let query = CensusQuery::all(g.order())
            .edges(counts.edges)
            .triangles(counts.triangles);
        let target_code = canonical_code(g);
        let scan = self.scan(&query.clone().charpoly(p.clone()), |h| {
            if canonical_code(h) == target_code {
                None
            } else {
                Some(encode_graph6(h).expect("census graphs fit graph6"))
            }
        })?;
        Ok(DsCertificate {
            target: g.clone(),
            target_charpoly: p.clone(),
            space: query.charpoly(p),
            mates: scan.items,
            exhaustive: true,
            graphs_scanned: scan.graphs_scanned,
        })
    }
}

/// [`Census::verify_ds`] with the default census.
pub fn verify_ds(g: &Graph) -> Result<DsCertificate> {
    Census::new().verify_ds(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pineapple;

    #[test]
    fn k4_3_is_determined() {
        let cert = verify_ds(&pineapple(4, 3).unwrap()).unwrap();
        assert!(cert.exhaustive);
        assert!(cert.mates.is_empty());
        assert_eq!(cert.verdict(), DsVerdict::DeterminedBySpectrum);
        assert!(cert.graphs_scanned >= 1);
    }

    #[test]
    fn json_round_trip_and_reverify() {
        let cert = verify_ds(&pineapple(4, 4).unwrap()).unwrap();
        assert!(!cert.mates.is_empty());
        let text = cert.to_json().unwrap();
        let back = DsCertificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(
            back.reverify().unwrap(),
            DsVerdict::HasMates(cert.mates.len())
        );
    }

    #[test]
    fn tampered_certificates_fail() {
        let mut cert = verify_ds(&pineapple(4, 4).unwrap()).unwrap();
        cert.mates.push(encode_graph6(&cert.target).unwrap());
        assert!(cert.reverify().is_err());

        let mut cert = verify_ds(&pineapple(3, 2).unwrap()).unwrap();
        cert.mates
            .push(encode_graph6(&Graph::empty(5).unwrap()).unwrap());
        assert!(cert.reverify().is_err());

        assert!(DsCertificate::from_json("{}").is_err());
    }
}
