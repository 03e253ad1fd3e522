//! The JSON document every CLI command emits.

use serde::{Deserialize, Serialize};

use crate::array::ArrayFeasibility;
use crate::feasibility::ScanReport;
use crate::graph::{AmplyRegularParams, DrgError};
use crate::mu_bound::MuBoundReport;
use crate::reference::RowOutcome;
use crate::terwilliger::TerwilligerVerdict;

pub const TOOL: &str = "tk";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputIdentity {
    Named { name: String },
    File { path: String, sha256: String, vertices: usize, edges: usize },
    Parameters { description: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DrgVerdict {
    DistanceRegular {
        array: String,
        diameter: usize,
        layer_sizes: Vec<u64>,
        feasibility: ArrayFeasibility,
    },
    NotDistanceRegular { error: DrgError },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TerwilligerOutcome {
    Checked { verdict: TerwilligerVerdict },
    Undefined { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MuBoundOutcome {
    Checked { report: Box<MuBoundReport> },
    NotAmplyRegular { reason: String },
    CUndefined { params: Option<AmplyRegularParams>, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Construct { vertices: usize, edges: usize, output: Option<String> },
    CheckDrg(DrgVerdict),
    CheckTerwilliger(TerwilligerOutcome),
    MuBound(MuBoundOutcome),
    Scan(Box<ScanReport>),
    Reference { passed: bool, rows: Vec<RowOutcome> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub input: InputIdentity,
    pub verdict: Verdict,
    /// Wall-clock milliseconds; absent unless requested so output is byte-stable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ReportDocument {
    pub fn new(input: InputIdentity, verdict: Verdict) -> ReportDocument {
        ReportDocument {
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input,
            verdict,
            elapsed_ms: None,
        }
    }

    /// Whether the verdict is a positive result for its command.
    pub fn succeeded(&self) -> bool {
        match &self.verdict {
            Verdict::Construct { .. } | Verdict::Scan(_) => true,
            Verdict::CheckDrg(v) => matches!(v, DrgVerdict::DistanceRegular { .. }),
            Verdict::CheckTerwilliger(t) => {
                matches!(t, TerwilligerOutcome::Checked { verdict } if verdict.is_terwilliger)
            }
            Verdict::MuBound(k) => match k {
                MuBoundOutcome::Checked { report } => report.bound_holds,
                MuBoundOutcome::CUndefined { .. } => true,
                MuBoundOutcome::NotAmplyRegular { .. } => false,
            },
            Verdict::Reference { passed, .. } => *passed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, NamedGraph};
    use crate::feasibility::{tower_scan, ScanOptions};
    use crate::mu_bound::mu_bound_check;
    use crate::terwilliger::is_terwilliger;

    fn round_trip(doc: &ReportDocument) {
        let json = serde_json::to_string_pretty(doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, doc);
    }

    #[test]
    fn documents_round_trip() {
        let g = build(&NamedGraph::Icosahedron).unwrap();
        let named = InputIdentity::Named { name: "icosahedron".into() };
        let a = g.intersection_array().unwrap();
        round_trip(&ReportDocument::new(
            named.clone(),
            Verdict::CheckDrg(DrgVerdict::DistanceRegular {
                array: a.to_string(),
                diameter: a.diameter(),
                layer_sizes: a.layer_sizes().unwrap(),
                feasibility: a.feasibility(),
            }),
        ));
        round_trip(&ReportDocument::new(
            named.clone(),
            Verdict::CheckTerwilliger(TerwilligerOutcome::Checked {
                verdict: is_terwilliger(&g).unwrap(),
            }),
        ));
        let bound = ReportDocument::new(
            named,
            Verdict::MuBound(MuBoundOutcome::Checked { report: Box::new(mu_bound_check(&g).unwrap()) }),
        );
        assert!(bound.succeeded());
        round_trip(&bound);
        let mut scan = ReportDocument::new(
            InputIdentity::Parameters { description: "max_k=10".into() },
            Verdict::Scan(Box::new(tower_scan(10, ScanOptions::default()))),
        );
        scan.elapsed_ms = Some(3);
        round_trip(&scan);
    }

    #[test]
    fn failed_drg_round_trips() {
        let g = crate::graph::Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let doc = ReportDocument::new(
            InputIdentity::File {
                path: "x".into(),
                sha256: "00".into(),
                vertices: 3,
                edges: 1,
            },
            Verdict::CheckDrg(DrgVerdict::NotDistanceRegular {
                error: g.intersection_array().unwrap_err(),
            }),
        );
        assert!(!doc.succeeded());
        round_trip(&doc);
    }
}
