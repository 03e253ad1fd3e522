//! The coclique parameter `c`, the μ-bound
//! `μ - 1 >= max { (c'(λ+1) - k) / C(c',2) : 2 <= c' <= c }`
//! and the equality verdict.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::{AmplyRegularError, AmplyRegularParams, Graph};
use crate::rational::Rational;
use crate::terwilliger::is_terwilliger;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum MuBoundError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertices {0} and {1} of the seed set are adjacent")]
    NotCoclique(usize, usize),
    #[error("c is undefined: the local graph of vertex {vertex} is complete")]
    CUndefined { vertex: usize },
    #[error("the bound needs c >= 2, got {0}")]
    CTooSmall(u64),
    #[error("the bound needs k >= 1")]
    ZeroDegree,
    #[error("not amply regular: {0}")]
    NotAmplyRegular(AmplyRegularError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocliqueCertificate {
    /// Sorted vertex list.
    pub vertices: Vec<usize>,
    pub size: usize,
}

impl CocliqueCertificate {
    pub fn verify(&self, g: &Graph) -> bool {
        self.size == self.vertices.len()
            && self.vertices.windows(2).all(|w| w[0] < w[1])
            && self.vertices.iter().all(|&u| u < g.order())
            && is_coclique(g, &self.vertices)
    }
}

pub fn is_coclique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&w| u != w && !g.adjacent(u, w)))
}

/// A maximum coclique of `g` containing `seed`, by branch and bound with a
/// greedy clique-cover bound.
pub fn max_coclique_containing(g: &Graph, seed: &[usize]) -> Result<CocliqueCertificate, MuBoundError> {
    let n = g.order();
    if let Some(&vertex) = seed.iter().find(|&&u| u >= n) {
        return Err(MuBoundError::VertexOutOfRange { vertex, n });
    }
    for (i, &u) in seed.iter().enumerate() {
        if let Some(&w) = seed[i + 1..].iter().find(|&&w| g.adjacent(u, w)) {
            return Err(MuBoundError::NotCoclique(u, w));
        }
    }
    let mut current: Vec<usize> = seed.to_vec();
    current.sort_unstable();
    current.dedup();
    let mut cand = BitSet::full(n);
    for &u in &current {
        cand.remove(u);
        cand.difference_with(g.neighbors(u));
    }
    let mut search = CocliqueSearch {
        g,
        best: current.clone(),
        current,
    };
    search.expand(cand);
    let mut vertices = search.best;
    vertices.sort_unstable();
    Ok(CocliqueCertificate {
        size: vertices.len(),
        vertices,
    })
}

struct CocliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl CocliqueSearch<'_> {
    fn expand(&mut self, mut cand: BitSet) {
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        let (order, bound) = greedy_clique_cover(self.g, &cand);
        for idx in (0..order.len()).rev() {
            // a coclique meets each clique of the cover at most once
            if self.current.len() + bound[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let mut next = cand.difference(self.g.neighbors(v));
            next.remove(v);
            self.expand(next);
            self.current.pop();
            cand.remove(v);
        }
    }
}

/// Partitions `cand` into cliques greedily (smallest index first). Returns
/// the vertices grouped by clique and, per position, the 1-based number of
/// its clique.
fn greedy_clique_cover(g: &Graph, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut uncovered = cand.clone();
    let mut order = Vec::with_capacity(cand.len());
    let mut bound = Vec::with_capacity(cand.len());
    let mut class = 0;
    while !uncovered.is_empty() {
        class += 1;
        let mut open = uncovered.clone();
        while let Some(v) = open.first() {
            order.push(v);
            bound.push(class);
            uncovered.remove(v);
            open.intersect_with(g.neighbors(v));
        }
    }
    (order, bound)
}

/// `c` together with its per-vertex minima.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocliqueParameter {
    pub c: u64,
    pub per_vertex: Vec<u64>,
}

/// The largest `c` such that every nonadjacent pair in every local graph
/// lies in a `c`-coclique of that local graph.
pub fn coclique_parameter(g: &Graph) -> Result<CocliqueParameter, MuBoundError> {
    if g.order() == 0 {
        return Err(MuBoundError::CUndefined { vertex: 0 });
    }
    let per_vertex: Vec<Result<u64, MuBoundError>> = (0..g.order())
        .into_par_iter()
        .map(|x| local_c(g, x))
        .collect();
    let per_vertex = per_vertex.into_iter().collect::<Result<Vec<u64>, MuBoundError>>()?;
    let c = per_vertex.iter().copied().min().expect("nonempty graph");
    Ok(CocliqueParameter { c, per_vertex })
}

fn local_c(g: &Graph, x: usize) -> Result<u64, MuBoundError> {
    let (local, _) = g.local_graph(x).expect("vertex in range");
    let n = local.order();
    let mut best: Option<u64> = None;
    for y in 0..n {
        for z in y + 1..n {
            if local.adjacent(y, z) {
                continue;
            }
            let size = max_coclique_containing(&local, &[y, z])?.size as u64;
            best = Some(best.map_or(size, |b| b.min(size)));
        }
    }
    best.ok_or(MuBoundError::CUndefined { vertex: x })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuBoundValues {
    /// `c' -> (c'(λ+1) - k) / C(c', 2)` for `2 <= c' <= c`.
    pub values: BTreeMap<u64, Rational>,
    pub max_value: Rational,
    /// Smallest maximising `c'`.
    pub argmax: u64,
}

pub fn bound_term(k: u64, lambda: u64, cprime: u64) -> Rational {
    let num = cprime as i128 * (lambda as i128 + 1) - k as i128;
    let den = cprime as i128 * (cprime as i128 - 1) / 2;
    Rational::new(num, den)
}

pub fn mu_bound_values(k: u64, lambda: u64, c: u64) -> Result<MuBoundValues, MuBoundError> {
    if c < 2 {
        return Err(MuBoundError::CTooSmall(c));
    }
    if k == 0 {
        return Err(MuBoundError::ZeroDegree);
    }
    let values: BTreeMap<u64, Rational> = (2..=c).map(|cp| (cp, bound_term(k, lambda, cp))).collect();
    let (argmax, max_value) = values
        .iter()
        .fold(None::<(u64, &Rational)>, |acc, (&cp, v)| match acc {
            Some((_, m)) if m >= v => acc,
            _ => Some((cp, v)),
        })
        .expect("c >= 2 gives at least one term");
    let max_value = max_value.clone();
    Ok(MuBoundValues {
        values,
        max_value,
        argmax,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuBoundReport {
    pub params: AmplyRegularParams,
    pub c: u64,
    pub per_vertex_c: Vec<u64>,
    pub bound_values: BTreeMap<u64, Rational>,
    pub max_value: Rational,
    pub argmax_cprime: u64,
    pub mu_minus_1: u64,
    /// `max_value == μ - 1`.
    pub equality: bool,
    /// `μ - 1 >= max_value`.
    pub bound_holds: bool,
    pub terwilliger: bool,
    /// Checked only under equality: every c-coclique `Y` of every local
    /// graph `Γ_1(x)` covers `Γ_1(x)` by `∪ (Γ_1(y) ∪ {y})` and all
    /// pairwise intersections inside `Γ_1(x)` have size `μ - 1`.
    pub cover_property: Option<bool>,
}

pub fn mu_bound_check(g: &Graph) -> Result<MuBoundReport, MuBoundError> {
    let params = g.amply_regular_params().map_err(MuBoundError::NotAmplyRegular)?;
    let cp = coclique_parameter(g)?;
    let bound = mu_bound_values(params.k, params.lambda, cp.c)?;
    let mu_minus_1 = params.mu - 1;
    let target = Rational::integer(mu_minus_1);
    let equality = bound.max_value == target;
    let bound_holds = target >= bound.max_value;
    let terwilliger = is_terwilliger(g)
        .map(|v| v.is_terwilliger)
        .expect("amply regular graphs are connected and noncomplete");
    let cover_property = equality.then(|| {
        (0..g.order())
            .into_par_iter()
            .all(|x| equality_cover_at(g, x, cp.c as usize, mu_minus_1))
    });
    Ok(MuBoundReport {
        params,
        c: cp.c,
        per_vertex_c: cp.per_vertex,
        bound_values: bound.values,
        max_value: bound.max_value,
        argmax_cprime: bound.argmax,
        mu_minus_1,
        equality,
        bound_holds,
        terwilliger,
        cover_property,
    })
}

fn equality_cover_at(g: &Graph, x: usize, c: usize, mu_minus_1: u64) -> bool {
    let (local, map) = g.local_graph(x).expect("vertex in range");
    cocliques_of_size(&local, c).into_iter().all(|ys| {
        let ys: Vec<usize> = ys.iter().map(|&i| map[i]).collect();
        let ie = inclusion_exclusion(g, x, &ys);
        ie.union == ie.degree && ie.pair_sizes.iter().all(|&s| s as u64 == mu_minus_1)
    })
}

/// Every coclique of exactly `size` vertices, each sorted, in lexicographic order.
pub fn cocliques_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, cand: BitSet, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        if cur.len() + cand.len() < size {
            return;
        }
        for v in cand.iter() {
            let mut next = cand.difference(g.neighbors(v));
            next = BitSet::from_iter(g.order(), next.iter().filter(|&w| w > v));
            cur.push(v);
            rec(g, next, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, BitSet::full(g.order()), size, &mut Vec::new(), &mut out);
    out
}

/// Terms of the inclusion–exclusion estimate for a coclique `ys` inside
/// `Γ_1(x)`, with `A_i = Γ_1(x) ∩ (Γ_1(y_i) ∪ {y_i})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionExclusion {
    /// `|Γ_1(x)|`.
    pub degree: usize,
    /// `|∪ A_i|`.
    pub union: usize,
    /// `Σ |A_i|`.
    pub singles: usize,
    /// `|Γ_1(x) ∩ Γ_1(y_i) ∩ Γ_1(y_j)|` for `i < j`.
    pub pair_sizes: Vec<usize>,
}

impl InclusionExclusion {
    pub fn pairs(&self) -> usize {
        self.pair_sizes.iter().sum()
    }

    /// `k >= |∪A_i| >= Σ|A_i| - Σ|A_i ∩ A_j| >= c'(λ+1) - C(c',2)(μ-1)`.
    pub fn chain_holds(&self, p: &AmplyRegularParams, cprime: usize) -> bool {
        let k = p.k as i128;
        let union = self.union as i128;
        let bonferroni = self.singles as i128 - self.pairs() as i128;
        let cp = cprime as i128;
        let estimate = cp * (p.lambda as i128 + 1) - cp * (cp - 1) / 2 * (p.mu as i128 - 1);
        k >= union && union >= bonferroni && bonferroni >= estimate
    }
}

pub fn inclusion_exclusion(g: &Graph, x: usize, ys: &[usize]) -> InclusionExclusion {
    let nx = g.neighbors(x);
    let sets: Vec<BitSet> = ys
        .iter()
        .map(|&y| nx.intersection(&g.closed_neighborhood(y)))
        .collect();
    let mut union = BitSet::new(g.order());
    for s in &sets {
        union.union_with(s);
    }
    let mut pair_sizes = Vec::new();
    for i in 0..ys.len() {
        for j in i + 1..ys.len() {
            let mut both = nx.intersection(g.neighbors(ys[i]));
            both.intersect_with(g.neighbors(ys[j]));
            pair_sizes.push(both.len());
        }
    }
    InclusionExclusion {
        degree: nx.len(),
        union: union.len(),
        singles: sets.iter().map(BitSet::len).sum(),
        pair_sizes,
    }
}
