//! Terwilliger property, μ well-definedness, clique-extension recognition
//! and locally-Δ tests.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::feasibility::{fsr_params, FsrParams};
use crate::graph::Graph;
use crate::iso::is_isomorphic;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum TerwilligerError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete")]
    Complete,
    #[error("mu is not well defined: ({u}, {w}) has {count} common neighbours, ({u0}, {w0}) has {expected}")]
    MuNotWellDefined {
        u0: usize,
        w0: usize,
        expected: u64,
        u: usize,
        w: usize,
        count: u64,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Reason a graph is not Terwilliger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TerwilligerWitness {
    /// A distance-2 pair whose μ-subgraph size differs from the first one.
    MuSize { u: usize, w: usize, size: u64, expected: u64 },
    /// `y, z` are nonadjacent common neighbours of the distance-2 pair
    /// `u, w`; `u y w z` is an induced quadrangle.
    NonCliqueMu { u: usize, w: usize, y: usize, z: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerwilligerVerdict {
    pub is_terwilliger: bool,
    /// The common μ, when well defined.
    pub mu: Option<u64>,
    pub witness: Option<TerwilligerWitness>,
    /// Result of the independent search for an induced 4-cycle.
    pub quadrangle_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionDecomposition {
    pub alpha: usize,
    pub quotient: Graph,
    /// Input vertex -> quotient vertex.
    pub class_map: Vec<usize>,
}

fn check_connected_noncomplete(g: &Graph) -> Result<(), TerwilligerError> {
    if !g.is_connected() {
        return Err(TerwilligerError::Disconnected);
    }
    if g.is_complete() {
        return Err(TerwilligerError::Complete);
    }
    Ok(())
}

/// Distance-2 pairs `(u, w)`, `u < w`, in lexicographic order.
fn distance_two_pairs(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = g.order();
    (0..n).flat_map(move |u| {
        (u + 1..n).filter(move |&w| !g.adjacent(u, w) && g.common_neighbor_count(u, w) > 0)
            .map(move |w| (u, w))
    })
}

/// The common size of all μ-subgraphs.
pub fn mu_well_defined(g: &Graph) -> Result<u64, TerwilligerError> {
    check_connected_noncomplete(g)?;
    let mut first: Option<(usize, usize, u64)> = None;
    for (u, w) in distance_two_pairs(g) {
        let count = g.common_neighbor_count(u, w) as u64;
        match first {
            None => first = Some((u, w, count)),
            Some((u0, w0, expected)) if expected != count => {
                return Err(TerwilligerError::MuNotWellDefined { u0, w0, expected, u, w, count })
            }
            _ => {}
        }
    }
    Ok(first.expect("connected noncomplete graph has a distance-2 pair").2)
}

/// Searches for an induced 4-cycle `a b c d` through paths `a - b - c`
/// with `a ≁ c`: any `d ∉ N[b]` adjacent to both `a` and `c` closes one.
pub fn find_induced_quadrangle(g: &Graph) -> Option<[usize; 4]> {
    let n = g.order();
    for b in 0..n {
        let nb: Vec<usize> = g.neighbors(b).to_vec();
        let closed = g.closed_neighborhood(b);
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if g.adjacent(a, c) {
                    continue;
                }
                let mut far = g.neighbors(a).intersection(g.neighbors(c));
                far.difference_with(&closed);
                if let Some(d) = far.first() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

pub fn is_terwilliger(g: &Graph) -> Result<TerwilligerVerdict, TerwilligerError> {
    check_connected_noncomplete(g)?;
    let quadrangle_free = find_induced_quadrangle(g).is_none();
    let mu = mu_well_defined(g).ok();
    let mut first: Option<u64> = None;
    let mut witness = None;
    for (u, w) in distance_two_pairs(g) {
        let common = g.neighbors(u).intersection(g.neighbors(w));
        let size = common.len() as u64;
        match first {
            None => first = Some(size),
            Some(expected) if expected != size => {
                witness = Some(TerwilligerWitness::MuSize { u, w, size, expected });
                break;
            }
            _ => {}
        }
        if let Some((y, z)) = nonadjacent_pair(g, &common) {
            witness = Some(TerwilligerWitness::NonCliqueMu { u, w, y, z });
            break;
        }
    }
    Ok(TerwilligerVerdict {
        is_terwilliger: witness.is_none(),
        mu,
        witness,
        quadrangle_free,
    })
}

fn nonadjacent_pair(g: &Graph, set: &BitSet) -> Option<(usize, usize)> {
    set.iter().find_map(|y| {
        let missing = set.difference(g.neighbors(y));
        missing.iter().find(|&z| z > y).map(|z| (y, z))
    })
}

/// For a Terwilliger graph with μ > 1: every local graph is Terwilliger, of
/// diameter 2, with μ one less than the host.
pub fn local_mu_descent_check(g: &Graph) -> Result<bool, TerwilligerError> {
    let verdict = is_terwilliger(g)?;
    if !verdict.is_terwilliger {
        return Err(TerwilligerError::Precondition("graph is not Terwilliger".into()));
    }
    let mu = verdict.mu.expect("Terwilliger graphs have well-defined mu");
    if mu < 2 {
        return Err(TerwilligerError::Precondition(format!("mu = {mu}, need mu > 1")));
    }
    Ok((0..g.order()).into_par_iter().all(|u| {
        let (local, _) = g.local_graph(u).expect("vertex in range");
        if !local.is_connected() || local.is_complete() {
            return false;
        }
        if local.distance_matrix().diameter() != 2 {
            return false;
        }
        matches!(
            is_terwilliger(&local),
            Ok(TerwilligerVerdict { is_terwilliger: true, mu: Some(m), .. }) if m == mu - 1
        )
    }))
}

/// Groups closed twins (equal `N[u]`) and returns the uniform class size as
/// α, or α = 1 with the graph itself when the classes are not uniform.
pub fn clique_extension_decompose(g: &Graph) -> ExtensionDecomposition {
    let n = g.order();
    let mut classes: BTreeMap<BitSet, Vec<usize>> = BTreeMap::new();
    for u in 0..n {
        classes.entry(g.closed_neighborhood(u)).or_default().push(u);
    }
    let mut groups: Vec<Vec<usize>> = classes.into_values().collect();
    groups.sort_unstable_by_key(|c| c[0]);
    let alpha = groups.first().map_or(1, Vec::len);
    if alpha == 1 || groups.iter().any(|c| c.len() != alpha) {
        return ExtensionDecomposition {
            alpha: 1,
            quotient: g.clone(),
            class_map: (0..n).collect(),
        };
    }
    let mut class_map = vec![0; n];
    for (i, class) in groups.iter().enumerate() {
        for &u in class {
            class_map[u] = i;
        }
    }
    let quotient = Graph::from_fn(groups.len(), |i, j| g.adjacent(groups[i][0], groups[j][0]));
    ExtensionDecomposition {
        alpha,
        quotient,
        class_map,
    }
}

/// Every local graph is isomorphic to `delta`.
pub fn is_locally(g: &Graph, delta: &Graph) -> bool {
    let k = delta.order();
    if (0..g.order()).any(|u| g.degree(u) != k) {
        return false;
    }
    (0..g.order()).into_par_iter().all(|u| {
        let (local, _) = g.local_graph(u).expect("vertex in range");
        is_isomorphic(&local, delta)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FsrError {
    #[error("not strongly regular: {0}")]
    NotStronglyRegular(String),
    #[error("mu = {0}, need mu = 1")]
    MuNotOne(u64),
    #[error("local graph of vertex {0} is not a disjoint union of equal cliques")]
    LocalNotCliques(usize),
    #[error("parameters ({v}, {k}, {lambda}) do not match s = {s}, r = {r}")]
    FormulaMismatch { v: u64, k: u64, lambda: u64, s: u64, r: u64 },
    #[error("recognised F({s},{r}) violates s + 1 <= r")]
    BoundViolated { s: u64, r: u64 },
}

/// Recognises membership in F(s, r): strongly regular with μ = 1 and every
/// local graph `r` disjoint `s`-cliques.
pub fn recognize_fsr(g: &Graph) -> Result<FsrParams, FsrError> {
    let p = g
        .amply_regular_params()
        .map_err(|e| FsrError::NotStronglyRegular(e.to_string()))?;
    if g.distance_matrix().diameter() != 2 {
        return Err(FsrError::NotStronglyRegular("diameter is not 2".into()));
    }
    if p.mu != 1 {
        return Err(FsrError::MuNotOne(p.mu));
    }
    let s = p.lambda + 1;
    for u in 0..g.order() {
        let (local, _) = g.local_graph(u).expect("vertex in range");
        let cliques = (0..local.order()).all(|x| {
            local.degree(x) as u64 == p.lambda
                && local
                    .neighbors(x)
                    .iter()
                    .all(|y| local.closed_neighborhood(x) == local.closed_neighborhood(y))
        });
        if !cliques {
            return Err(FsrError::LocalNotCliques(u));
        }
    }
    let r = p.k / s;
    let mismatch = FsrError::FormulaMismatch { v: p.v, k: p.k, lambda: p.lambda, s, r };
    if p.k % s != 0 {
        return Err(mismatch);
    }
    let params = fsr_params(s, r).map_err(|_| FsrError::BoundViolated { s, r })?;
    if params.v() != p.v || params.k() != p.k || params.lambda() != p.lambda {
        return Err(mismatch);
    }
    Ok(params)
}
