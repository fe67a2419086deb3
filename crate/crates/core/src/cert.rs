//! JSON certificates. Every index in a file is 1-based; the `kind` field
//! tells representations and Ferrers covers apart.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::digraph::{CellSet, Digraph};
use crate::error::{Error, Result, Verdict};
use crate::ferrers::{verify_ferrers_cover, Dimension, FerrersCover};
use crate::search::{ChainReport, LeafageResult};
use crate::tree::{verify_representation, HostTree, Representation, Subtree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostDoc {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub n: usize,
    pub host: HostDoc,
    pub sources: Vec<Vec<usize>>,
    pub sinks: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverDoc {
    pub n: usize,
    pub disjoint: bool,
    /// Each part as a list of `[row, column]` cells.
    pub parts: Vec<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Representation(RepresentationDoc),
    FerrersCover(CoverDoc),
}

fn one_based(v: usize) -> usize {
    v + 1
}

fn zero_based(v: usize, limit: usize, what: &str) -> Result<usize> {
    if v == 0 || v > limit {
        return Err(Error::Certificate(format!(
            "{what} index {v} outside 1..={limit}"
        )));
    }
    Ok(v - 1)
}

impl Certificate {
    pub fn from_representation(rep: &Representation) -> Self {
        let list = |subs: &[Subtree]| {
            subs.iter()
                .map(|s| s.iter().map(one_based).collect())
                .collect()
        };
        Certificate::Representation(RepresentationDoc {
            n: rep.n(),
            host: HostDoc {
                vertices: rep.host.vertex_count(),
                edges: rep
                    .host
                    .edges()
                    .into_iter()
                    .map(|(a, b)| [a + 1, b + 1])
                    .collect(),
            },
            sources: list(&rep.sources),
            sinks: list(&rep.sinks),
        })
    }

    pub fn from_cover(cover: &FerrersCover) -> Self {
        Certificate::FerrersCover(CoverDoc {
            n: cover.n,
            disjoint: cover.disjoint,
            parts: cover
                .parts
                .iter()
                .map(|p| p.iter().map(|(r, c)| [r + 1, c + 1]).collect())
                .collect(),
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Representation(_) => "representation",
            Certificate::FerrersCover(_) => "ferrers-cover",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Certificate::Representation(doc) => doc.n,
            Certificate::FerrersCover(doc) => doc.n,
        }
    }

    pub fn to_representation(&self) -> Result<Representation> {
        let Certificate::Representation(doc) = self else {
            return Err(Error::Certificate(format!(
                "expected a representation, found {}",
                self.kind()
            )));
        };
        let size = doc.host.vertices;
        let edges = doc
            .host
            .edges
            .iter()
            .map(|&[a, b]| {
                Ok((
                    zero_based(a, size, "host vertex")?,
                    zero_based(b, size, "host vertex")?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let host =
            HostTree::from_edges(size, &edges).map_err(|e| Error::Certificate(e.to_string()))?;
        let subtrees = |lists: &[Vec<usize>], what: &str| -> Result<Vec<Subtree>> {
            if lists.len() != doc.n {
                return Err(Error::Certificate(format!(
                    "{} {what} lists for n = {}",
                    lists.len(),
                    doc.n
                )));
            }
            lists
                .iter()
                .map(|l| {
                    l.iter()
                        .map(|&v| zero_based(v, size, "host vertex"))
                        .collect()
                })
                .collect()
        };
        Ok(Representation {
            sources: subtrees(&doc.sources, "source")?,
            sinks: subtrees(&doc.sinks, "sink")?,
            host,
        })
    }

    pub fn to_cover(&self) -> Result<FerrersCover> {
        let Certificate::FerrersCover(doc) = self else {
            return Err(Error::Certificate(format!(
                "expected a ferrers-cover, found {}",
                self.kind()
            )));
        };
        let parts = doc
            .parts
            .iter()
            .map(|cells| {
                let cells = cells
                    .iter()
                    .map(|&[r, c]| {
                        Ok((
                            zero_based(r, doc.n, "row")?,
                            zero_based(c, doc.n, "column")?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?;
                CellSet::from_cells(doc.n, cells)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FerrersCover::new(doc.n, doc.disjoint, parts))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))
    }
}

/// Checks a certificate of either kind against `d`; the rejection message
/// uses 1-based indices.
pub fn verify_certificate(d: &Digraph, cert: &Certificate) -> Result<Verdict<String>> {
    if cert.n() != d.n() {
        return Err(Error::DimensionMismatch {
            expected: d.n(),
            found: cert.n(),
        });
    }
    Ok(match cert {
        Certificate::Representation(_) => {
            match verify_representation(d, &cert.to_representation()?)? {
                Verdict::Accept => Verdict::Accept,
                Verdict::Reject(v) => Verdict::Reject(v.to_string()),
            }
        }
        Certificate::FerrersCover(_) => match verify_ferrers_cover(d, &cert.to_cover()?)? {
            Verdict::Accept => Verdict::Accept,
            Verdict::Reject(v) => Verdict::Reject(v.to_string()),
        },
    })
}

fn dimension_value(d: &Dimension, certificate: Option<&str>) -> Value {
    match d {
        Dimension::Exact { value, .. } => {
            json!({ "value": value, "exact": true, "certificate": certificate })
        }
        Dimension::Exhausted { lower_bound, .. } => json!({ "lo": lower_bound, "exact": false }),
    }
}

fn leafage_value(r: &LeafageResult, certificate: Option<&str>) -> Value {
    let mut v = if r.exact() {
        json!({ "value": r.hi, "exact": true })
    } else {
        json!({ "lo": r.lo, "hi": r.hi, "exact": false })
    };
    v["lower_bound"] = json!(r.lower_bound_source.to_string());
    v["host_bound"] = json!(r.host_bound);
    v["host_bound_firm"] = json!(r.bound_firm);
    v["certificate"] = json!(certificate);
    v
}

/// Certificate file names referenced from a chain report.
#[derive(Clone, Debug, Default)]
pub struct CertificateRefs {
    pub f: Option<String>,
    pub f_star: Option<String>,
    pub l: Option<String>,
    pub l_star: Option<String>,
}

/// The chain report as a JSON document.
pub fn report_json(report: &ChainReport, refs: &CertificateRefs) -> Value {
    json!({
        "n": report.n,
        "f": dimension_value(&report.f, refs.f.as_deref()),
        "f_star": dimension_value(&report.f_star, refs.f_star.as_deref()),
        "l": leafage_value(&report.l, refs.l.as_deref()),
        "l_star": leafage_value(&report.l_star, refs.l_star.as_deref()),
        "w": report.w,
        "unique_maximal": report.unique_maximal,
        "width_certifies_catch": report.width_certifies_catch(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::ferrers::exact_disjoint_ferrers_dimension;
    use crate::tree::{star_representation, two_block_spider};

    #[test]
    fn representation_round_trip() {
        let rep = two_block_spider(3);
        let cert = Certificate::from_representation(&rep);
        let text = cert.to_json();
        assert!(text.contains("\"kind\": \"representation\""));
        let back = Certificate::from_json(&text).unwrap();
        assert_eq!(back.to_representation().unwrap(), rep);
        let d = Family::Mkm(2, 3).digraph();
        assert_eq!(verify_certificate(&d, &back).unwrap(), Verdict::Accept);
    }

    #[test]
    fn cover_round_trip() {
        let d = Family::Cn(4).digraph();
        let cover = exact_disjoint_ferrers_dimension(&d, 4)
            .cover()
            .unwrap()
            .clone();
        let cert = Certificate::from_cover(&cover);
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back.kind(), "ferrers-cover");
        assert_eq!(back.to_cover().unwrap(), cover);
        assert!(verify_certificate(&d, &back).unwrap().is_accept());
    }

    #[test]
    fn indices_are_one_based() {
        let d = Digraph::from_fn(1, |_, _| true);
        let cert = Certificate::from_representation(star_representation(&d).as_ref());
        let Certificate::Representation(doc) = &cert else {
            unreachable!()
        };
        assert_eq!(doc.host.edges, vec![[1, 2]]);
        assert_eq!(doc.sinks, vec![vec![2]]);
    }

    #[test]
    fn malformed_certificates_are_errors() {
        assert!(Certificate::from_json("{\"kind\": \"nonsense\"}").is_err());
        let bad = r#"{"kind":"representation","n":1,"host":{"vertices":2,"edges":[[0,1]]},"sources":[[1]],"sinks":[[2]]}"#;
        assert!(Certificate::from_json(bad)
            .unwrap()
            .to_representation()
            .is_err());
        let cyclic = r#"{"kind":"representation","n":1,"host":{"vertices":2,"edges":[[1,2],[2,1]]},"sources":[[1]],"sinks":[[2]]}"#;
        assert!(Certificate::from_json(cyclic)
            .unwrap()
            .to_representation()
            .is_err());
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let d = Family::Dn(3).digraph();
        let mut rep = star_representation(&d).into_representation();
        rep.sinks.swap(0, 1);
        let verdict = verify_certificate(&d, &Certificate::from_representation(&rep)).unwrap();
        assert!(verdict.violation().unwrap().contains("pair (1, 1)"));
    }

    #[test]
    fn wrong_order_is_a_mismatch() {
        let cert = Certificate::from_representation(
            star_representation(&Family::Dn(3).digraph()).as_ref(),
        );
        assert!(verify_certificate(&Family::Dn(4).digraph(), &cert).is_err());
    }
}
