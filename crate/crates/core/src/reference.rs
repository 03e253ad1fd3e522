//! The bundled table of expected results for the three known graphs that
//! attain equality in the μ-bound, and the runner that re-derives every
//! column from scratch.

use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::constructions::{build, NamedGraph};
use crate::mu_bound::mu_bound_check;
use crate::rational::Rational;
use crate::terwilliger::{is_locally, is_terwilliger, local_mu_descent_check};

const EXPECTED: &str = include_str!("../data/expected.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub name: String,
    pub graph: String,
    pub vertices: usize,
    pub array: String,
    pub mu: u64,
    pub c: u64,
    pub max_value: Rational,
    pub equality: bool,
    pub locally: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservedRow {
    pub vertices: usize,
    pub array: Option<String>,
    pub terwilliger: bool,
    pub mu: Option<u64>,
    pub c: Option<u64>,
    pub max_value: Option<Rational>,
    pub equality: Option<bool>,
    pub cover_property: Option<bool>,
    pub locally: bool,
    pub local_descent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowOutcome {
    pub expected: ExpectedRow,
    pub observed: Option<ObservedRow>,
    pub mismatches: Vec<String>,
}

impl RowOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn expected_rows() -> Vec<ExpectedRow> {
    serde_json::from_str(EXPECTED).expect("bundled expected.json is valid")
}

pub fn verify_reference() -> Vec<RowOutcome> {
    expected_rows().into_iter().map(verify_row).collect()
}

fn verify_row(expected: ExpectedRow) -> RowOutcome {
    let mut mismatches = Vec::new();
    let graph = match expected.graph.parse::<NamedGraph>().and_then(|id| build(&id)) {
        Ok(g) => g,
        Err(e) => {
            return RowOutcome {
                expected,
                observed: None,
                mismatches: vec![format!("cannot build graph: {e}")],
            }
        }
    };
    let delta = expected
        .locally
        .parse::<NamedGraph>()
        .and_then(|id| build(&id));

    let array = graph.intersection_array().ok();
    let terw = is_terwilliger(&graph).ok();
    let bound = mu_bound_check(&graph).ok();
    let observed = ObservedRow {
        vertices: graph.order(),
        array: array.as_ref().map(IntersectionArray::to_string),
        terwilliger: terw.as_ref().is_some_and(|t| t.is_terwilliger),
        mu: terw.as_ref().and_then(|t| t.mu),
        c: bound.as_ref().map(|r| r.c),
        max_value: bound.as_ref().map(|r| r.max_value.clone()),
        equality: bound.as_ref().map(|r| r.equality),
        cover_property: bound.as_ref().and_then(|r| r.cover_property),
        locally: delta.as_ref().is_ok_and(|d| is_locally(&graph, d)),
        local_descent: local_mu_descent_check(&graph).unwrap_or(false),
    };

    let mut check = |ok: bool, what: String| {
        if !ok {
            mismatches.push(what);
        }
    };
    check(
        observed.vertices == expected.vertices,
        format!("vertices: expected {}, got {}", expected.vertices, observed.vertices),
    );
    check(
        observed.array.as_deref() == Some(expected.array.as_str()),
        format!("array: expected {}, got {:?}", expected.array, observed.array),
    );
    check(observed.terwilliger, "not a Terwilliger graph".into());
    check(
        observed.mu == Some(expected.mu),
        format!("mu: expected {}, got {:?}", expected.mu, observed.mu),
    );
    check(
        observed.c == Some(expected.c),
        format!("c: expected {}, got {:?}", expected.c, observed.c),
    );
    check(
        observed.max_value.as_ref() == Some(&expected.max_value),
        format!("bound max: expected {}, got {:?}", expected.max_value, observed.max_value),
    );
    check(
        observed.max_value == Some(Rational::integer(expected.mu - 1)) || !expected.equality,
        "bound max differs from mu - 1".into(),
    );
    check(
        observed.equality == Some(expected.equality),
        format!("equality: expected {}, got {:?}", expected.equality, observed.equality),
    );
    if expected.equality {
        check(
            observed.cover_property == Some(true),
            format!("cover property: got {:?}", observed.cover_property),
        );
    }
    check(observed.locally, format!("not locally {}", expected.locally));
    check(observed.local_descent, "local graphs fail the mu - 1 descent".into());

    RowOutcome {
        expected,
        observed: Some(observed),
        mismatches,
    }
}
