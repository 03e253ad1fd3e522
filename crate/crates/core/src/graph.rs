//! Immutable simple undirected graphs on `0..n` with bit-row adjacency.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::array::IntersectionArray;
use crate::bitset::BitSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertices {u} and {w} are not at distance 2")]
    NotAtDistanceTwo { u: usize, w: usize },
}

/// Why a graph failed the distance-regularity check.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum DrgError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has fewer than two vertices")]
    Trivial,
    #[error("not distance-regular: {0}")]
    NotDistanceRegular(DrgWitness),
}

/// First pair `(u, w)` in lexicographic order whose neighbour counts
/// disagree with those seen earlier at the same distance. `expected` is
/// `None` when the distance itself exceeds the diameter seen from vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrgWitness {
    pub u: usize,
    pub w: usize,
    pub distance: usize,
    /// `(b_i, c_i)` established earlier.
    pub expected: Option<(u64, u64)>,
    /// `(b, c)` counted at this pair.
    pub found: (u64, u64),
}

impl std::fmt::Display for DrgWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "pair ({}, {}) at distance {} has (b, c) = {:?}",
            self.u, self.w, self.distance, self.found
        )?;
        match self.expected {
            Some(e) => write!(f, ", expected {e:?}"),
            None => write!(f, ", beyond the diameter seen from vertex 0"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AmplyRegularParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum AmplyRegularError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete")]
    Complete,
    #[error("vertex {vertex} has degree {degree}, vertex 0 has degree {expected}")]
    NotRegular {
        vertex: usize,
        degree: u64,
        expected: u64,
    },
    #[error("edge ({u}, {w}) has {count} common neighbours, expected {expected}")]
    LambdaNotConstant {
        u: usize,
        w: usize,
        count: u64,
        expected: u64,
    },
    #[error("distance-2 pair ({u}, {w}) has {count} common neighbours, expected {expected}")]
    MuNotConstant {
        u: usize,
        w: usize,
        count: u64,
        expected: u64,
    },
}

/// Distance matrix computed by breadth-first search from every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    diameter: usize,
    connected: bool,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn get(&self, u: usize, w: usize) -> Option<usize> {
        match self.dist[u * self.n + w] {
            Self::UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }
}

/// A finite simple undirected graph. Adjacency rows are bitsets so common
/// neighbour counts are word-parallel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from unordered pairs; repeated pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut rows = vec![BitSet::new(n); n];
        for &(u, w) in edges {
            for x in [u, w] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == w {
                return Err(GraphError::Loop(u));
            }
            rows[u].insert(w);
            rows[w].insert(u);
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from a symmetric predicate evaluated on `u < w`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut rows = vec![BitSet::new(n); n];
        for u in 0..n {
            for w in u + 1..n {
                if adjacent(u, w) {
                    rows[u].insert(w);
                    rows[w].insert(u);
                }
            }
        }
        Graph { rows }
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            rows: vec![BitSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, u: usize, w: usize) -> bool {
        self.rows[u].contains(w)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &BitSet {
        &self.rows[u]
    }

    /// `N(u) ∪ {u}`.
    pub fn closed_neighborhood(&self, u: usize) -> BitSet {
        let mut set = self.rows[u].clone();
        set.insert(u);
        set
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].len()
    }

    #[inline]
    pub fn common_neighbor_count(&self, u: usize, w: usize) -> usize {
        self.rows[u].intersection_count(&self.rows[w])
    }

    /// Edges `(u, w)` with `u < w`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| {
                self.rows[u]
                    .iter()
                    .filter(move |&w| w > u)
                    .map(move |w| (u, w))
            })
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(BitSet::len).collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.rows.iter().all(|r| r.len() + 1 == n)
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.order(), |u, w| !self.adjacent(u, w))
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u >= self.order() {
            Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Distances from `source`, `UNREACHABLE` for other components.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let n = self.order();
        let mut dist = vec![DistanceMatrix::UNREACHABLE; n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            for y in self.rows[x].iter() {
                if dist[y] == DistanceMatrix::UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(0).iter().all(|&d| d != DistanceMatrix::UNREACHABLE)
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.order();
        let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|u| self.bfs(u)).collect();
        let mut diameter = 0;
        let mut connected = true;
        let mut dist = Vec::with_capacity(n * n);
        for row in rows {
            for &d in &row {
                if d == DistanceMatrix::UNREACHABLE {
                    connected = false;
                } else {
                    diameter = diameter.max(d as usize);
                }
            }
            dist.extend(row);
        }
        DistanceMatrix {
            n,
            dist,
            diameter,
            connected,
        }
    }

    /// Subgraph induced on `vertices`, relabelled `0..` in increasing order
    /// of the original labels. Returns the graph and the label map
    /// (new label -> original vertex).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        for &u in &map {
            self.check_vertex(u)?;
        }
        let g = Graph::from_fn(map.len(), |i, j| self.adjacent(map[i], map[j]));
        Ok((g, map))
    }

    /// The local graph on `Γ_1(u)`, with its label map.
    pub fn local_graph(&self, u: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_vertex(u)?;
        self.induced_subgraph(&self.rows[u].to_vec())
    }

    /// `Γ_1(u) ∩ Γ_1(w)` for `d(u, w) = 2`.
    pub fn mu_subgraph(&self, u: usize, w: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        let common = self.rows[u].intersection(&self.rows[w]);
        if u == w || self.adjacent(u, w) || common.is_empty() {
            return Err(GraphError::NotAtDistanceTwo { u, w });
        }
        Ok(common.to_vec())
    }

    /// Checks distance-regularity from the definition: for every ordered
    /// pair `(u, w)` at distance `i`, `w` has `c_i` neighbours at distance
    /// `i-1` from `u` and `b_i` at distance `i+1`.
    pub fn intersection_array(&self) -> Result<IntersectionArray, DrgError> {
        let n = self.order();
        if n < 2 {
            return Err(DrgError::Trivial);
        }
        let dm = self.distance_matrix();
        if !dm.is_connected() {
            return Err(DrgError::Disconnected);
        }
        // (b_i, c_i) per distance, fixed by the first pair seen at that distance
        let mut seen: Vec<Option<(u64, u64)>> = Vec::new();
        for u in 0..n {
            let row = dm.row(u);
            for w in 0..n {
                let i = row[w] as usize;
                let (mut b, mut c) = (0u64, 0u64);
                for y in self.rows[w].iter() {
                    let dy = row[y] as usize;
                    if dy == i + 1 {
                        b += 1;
                    } else if dy + 1 == i {
                        c += 1;
                    }
                }
                if u == 0
                    && seen.len() <= i {
                        seen.resize(i + 1, None);
                    }
                match seen.get(i).copied().flatten() {
                    None if u == 0 => seen[i] = Some((b, c)),
                    Some(e) if e == (b, c) => {}
                    expected => {
                        return Err(DrgError::NotDistanceRegular(DrgWitness {
                            u,
                            w,
                            distance: i,
                            expected,
                            found: (b, c),
                        }))
                    }
                }
            }
        }
        let d = seen.len() - 1;
        let entries: Vec<(u64, u64)> = seen.into_iter().map(|e| e.expect("all layers nonempty")).collect();
        let b = entries[..d].iter().map(|e| e.0).collect();
        let c = entries[1..].iter().map(|e| e.1).collect();
        Ok(IntersectionArray::new(b, c).expect("arrays read off a connected graph are well formed"))
    }

    /// `(v, k, λ, μ)` when the graph is regular, every edge lies in exactly
    /// λ triangles and every distance-2 pair has exactly μ common neighbours.
    pub fn amply_regular_params(&self) -> Result<AmplyRegularParams, AmplyRegularError> {
        let n = self.order();
        if !self.is_connected() {
            return Err(AmplyRegularError::Disconnected);
        }
        if self.is_complete() {
            return Err(AmplyRegularError::Complete);
        }
        let k = self.degree(0) as u64;
        if let Some(u) = (0..n).find(|&u| self.degree(u) as u64 != k) {
            return Err(AmplyRegularError::NotRegular {
                vertex: u,
                degree: self.degree(u) as u64,
                expected: k,
            });
        }
        let mut lambda = None;
        let mut mu = None;
        for u in 0..n {
            for w in u + 1..n {
                let count = self.common_neighbor_count(u, w) as u64;
                if self.adjacent(u, w) {
                    match lambda {
                        None => lambda = Some(count),
                        Some(l) if l != count => {
                            return Err(AmplyRegularError::LambdaNotConstant {
                                u,
                                w,
                                count,
                                expected: l,
                            })
                        }
                        _ => {}
                    }
                } else if count > 0 {
                    match mu {
                        None => mu = Some(count),
                        Some(m) if m != count => {
                            return Err(AmplyRegularError::MuNotConstant {
                                u,
                                w,
                                count,
                                expected: m,
                            })
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(AmplyRegularParams {
            v: n as u64,
            k,
            lambda: lambda.expect("connected noncomplete graph has an edge"),
            mu: mu.expect("connected noncomplete graph has a distance-2 pair"),
        })
    }
}
