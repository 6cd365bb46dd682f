//! Catalog export: the JSON and CSV interchange formats for census reports.
//!
//! One JSON object per (n, d):
//! `{n, d, count, representatives: [{monomials, det, incidence, type, cones,
//! certificate}]}`. Monomials use the text grammar, cone members are 0-based
//! indices into the representative's monomial list, and identical queries
//! produce byte-identical output.

use serde::Serialize;

use crate::census::{CensusReport, DegreeCensus, Representative};

#[derive(Serialize)]
struct DegreeJson {
    n: usize,
    d: usize,
    count: usize,
    representatives: Vec<RepresentativeJson>,
}

#[derive(Serialize)]
struct RepresentativeJson {
    monomials: Vec<String>,
    det: i64,
    incidence: Vec<usize>,
    #[serde(rename = "type")]
    cubic_type: Option<&'static str>,
    cones: Vec<ConeJson>,
    certificate: serde_json::Value,
}

#[derive(Serialize)]
struct ConeJson {
    apex: usize,
    members: Vec<usize>,
    base: Vec<String>,
}

fn representative_json(rep: &Representative) -> RepresentativeJson {
    RepresentativeJson {
        monomials: rep.set.members().iter().map(|m| m.to_string()).collect(),
        det: i64::try_from(rep.determinant).expect("census determinants fit in 64 bits"),
        incidence: rep.incidence.degrees().to_vec(),
        cubic_type: rep.cubic_type.map(|t| t.as_str()),
        cones: rep
            .cones
            .maximal()
            .map(|c| ConeJson {
                apex: c.apex,
                members: c.member_indices.clone(),
                base: c
                    .base
                    .edges()
                    .iter()
                    .map(|e| {
                        if e.is_empty() {
                            "1".to_string()
                        } else {
                            e.iter().map(|v| format!("x{v}")).collect()
                        }
                    })
                    .collect(),
            })
            .collect(),
        certificate: rep.certificate.to_json_value(),
    }
}

fn degree_json(dc: &DegreeCensus) -> DegreeJson {
    DegreeJson {
        n: dc.n,
        d: dc.d,
        count: dc.count(),
        representatives: dc.representatives.iter().map(representative_json).collect(),
    }
}

/// The catalog rendered as pretty JSON with the documented field order:
/// one object per degree, ascending, or a bare object for a single degree.
pub fn catalog_json_string(report: &CensusReport) -> String {
    let entries: Vec<DegreeJson> = report.degrees.iter().map(degree_json).collect();
    let mut out = if entries.len() == 1 {
        serde_json::to_string_pretty(&entries[0])
    } else {
        serde_json::to_string_pretty(&entries)
    }
    .expect("catalog serialization");
    out.push('\n');
    out
}

/// The catalog parsed back into a JSON value, for programmatic access.
pub fn catalog_json(report: &CensusReport) -> serde_json::Value {
    serde_json::from_str(&catalog_json_string(report)).expect("catalog output is valid JSON")
}

/// Summary with one `n,d,count` row per degree.
pub fn catalog_csv(report: &CensusReport) -> String {
    let mut out = String::from("n,d,count\n");
    for dc in &report.degrees {
        out.push_str(&format!("{},{},{}\n", dc.n, dc.d, dc.count()));
    }
    out
}
