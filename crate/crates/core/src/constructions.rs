//! Builders for the named graphs and the α-clique extension.
//!
//! Vertex numbering is frozen:
//!
//! - pentagon: `i ~ i±1 (mod 5)`.
//! - petersen: vertex `i` is the `i`-th 2-subset of `{0..4}` in lexicographic
//!   order; adjacent iff disjoint.
//! - icosahedron: 0 is the top, 1..=5 the upper ring, 6..=10 the lower ring,
//!   11 the bottom. Upper `i` touches lower `i` and lower `i+1`.
//! - hoffman_singleton: `P_{h,i} = 5h + i`, `Q_{h,i} = 25 + 5h + i`;
//!   `P_{h,i} ~ P_{h,i±1}`, `Q_{h,i} ~ Q_{h,i±2}`,
//!   `P_{h,i} ~ Q_{k,j}` iff `j ≡ hk + i (mod 5)`.
//! - doro, conway_smith: the bundled files under `data/` (see
//!   `data/README.md` for how they were produced).
//! - complete(n): `K_n`; disjoint_cliques(r, s): copy `t` of `K_s` uses
//!   vertices `t*s .. t*s + s`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::io::{parse_edge_list, ParseError};

const DORO_DATA: &str = include_str!("../data/doro.edges");
const CONWAY_SMITH_DATA: &str = include_str!("../data/conway_smith.edges");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Pentagon,
    Petersen,
    Icosahedron,
    HoffmanSingleton,
    Doro,
    ConwaySmith,
    Complete(usize),
    DisjointCliques { r: usize, s: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("bundled data for {name} is corrupt: {source}")]
    CorruptData { name: &'static str, source: ParseError },
    #[error("graph parameters must be positive")]
    NonPositive,
    #[error("clique extension needs alpha >= 1")]
    ZeroAlpha,
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Pentagon => f.write_str("pentagon"),
            NamedGraph::Petersen => f.write_str("petersen"),
            NamedGraph::Icosahedron => f.write_str("icosahedron"),
            NamedGraph::HoffmanSingleton => f.write_str("hoffman-singleton"),
            NamedGraph::Doro => f.write_str("doro"),
            NamedGraph::ConwaySmith => f.write_str("conway-smith"),
            NamedGraph::Complete(n) => write!(f, "complete:{n}"),
            NamedGraph::DisjointCliques { r, s } => write!(f, "cliques:{r},{s}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = BuildError;

    /// Accepts the `Display` forms; `_` and `-` are interchangeable.
    fn from_str(s: &str) -> Result<Self, BuildError> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        let unknown = || BuildError::UnknownName(s.to_string());
        let id = match norm.as_str() {
            "pentagon" => NamedGraph::Pentagon,
            "petersen" => NamedGraph::Petersen,
            "icosahedron" => NamedGraph::Icosahedron,
            "hoffman-singleton" => NamedGraph::HoffmanSingleton,
            "doro" => NamedGraph::Doro,
            "conway-smith" => NamedGraph::ConwaySmith,
            other => {
                if let Some(n) = other.strip_prefix("complete:") {
                    NamedGraph::Complete(n.parse().map_err(|_| unknown())?)
                } else if let Some(rs) = other.strip_prefix("cliques:") {
                    let (r, s) = rs.split_once(',').ok_or_else(unknown)?;
                    NamedGraph::DisjointCliques {
                        r: r.trim().parse().map_err(|_| unknown())?,
                        s: s.trim().parse().map_err(|_| unknown())?,
                    }
                } else {
                    return Err(unknown());
                }
            }
        };
        Ok(id)
    }
}

pub fn build(id: &NamedGraph) -> Result<Graph, BuildError> {
    let g = match *id {
        NamedGraph::Pentagon => cycle(5),
        NamedGraph::Petersen => petersen(),
        NamedGraph::Icosahedron => icosahedron(),
        NamedGraph::HoffmanSingleton => hoffman_singleton(),
        NamedGraph::Doro => bundled("doro", DORO_DATA)?,
        NamedGraph::ConwaySmith => bundled("conway_smith", CONWAY_SMITH_DATA)?,
        NamedGraph::Complete(n) => {
            if n == 0 {
                return Err(BuildError::NonPositive);
            }
            Graph::complete(n)
        }
        NamedGraph::DisjointCliques { r, s } => {
            if r == 0 || s == 0 {
                return Err(BuildError::NonPositive);
            }
            Graph::from_fn(r * s, |u, w| u / s == w / s)
        }
    };
    Ok(g)
}

fn bundled(name: &'static str, data: &str) -> Result<Graph, BuildError> {
    parse_edge_list(data).map_err(|source| BuildError::CorruptData { name, source })
}

fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |u, w| w - u == 1 || w - u == n - 1)
}

fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    Graph::from_fn(pairs.len(), |u, w| {
        let (a, b) = pairs[u];
        let (c, d) = pairs[w];
        a != c && a != d && b != c && b != d
    })
}

fn icosahedron() -> Graph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        edges.extend([
            (0, up),
            (up, up_next),
            (up, low),
            (up, low_next),
            (low, low_next),
            (low, 11),
        ]);
    }
    Graph::from_edge_list(12, &edges).expect("icosahedron edges are in range")
}

fn hoffman_singleton() -> Graph {
    let p = |h: usize, i: usize| 5 * h + i;
    let q = |h: usize, i: usize| 25 + 5 * h + i;
    let mut edges = Vec::with_capacity(175);
    for h in 0..5 {
        for i in 0..5 {
            edges.push((p(h, i), p(h, (i + 1) % 5)));
            edges.push((q(h, i), q(h, (i + 2) % 5)));
            for k in 0..5 {
                edges.push((p(h, i), q(k, (h * k + i) % 5)));
            }
        }
    }
    Graph::from_edge_list(50, &edges).expect("hoffman-singleton edges are in range")
}

/// Replaces every vertex `u` by the clique `{u*α, .., u*α + α - 1}`;
/// cliques of adjacent vertices are joined completely.
pub fn alpha_clique_extension(g: &Graph, alpha: usize) -> Result<Graph, BuildError> {
    if alpha == 0 {
        return Err(BuildError::ZeroAlpha);
    }
    Ok(Graph::from_fn(g.order() * alpha, |x, y| {
        let (u, w) = (x / alpha, y / alpha);
        u == w || g.adjacent(u, w)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::AmplyRegularParams;

    #[test]
    fn named_graph_sizes() {
        let expect = [
            (NamedGraph::Pentagon, 5, 5),
            (NamedGraph::Petersen, 10, 15),
            (NamedGraph::Icosahedron, 12, 30),
            (NamedGraph::HoffmanSingleton, 50, 175),
            (NamedGraph::Doro, 65, 325),
            (NamedGraph::ConwaySmith, 63, 315),
            (NamedGraph::Complete(4), 4, 6),
            (NamedGraph::DisjointCliques { r: 3, s: 2 }, 6, 3),
        ];
        for (id, n, m) in expect {
            let g = build(&id).unwrap();
            assert_eq!((g.order(), g.edge_count()), (n, m), "{id}");
        }
    }

    #[test]
    fn petersen_and_hoffman_singleton_are_moore() {
        let p = build(&NamedGraph::Petersen).unwrap();
        assert_eq!(
            p.amply_regular_params().unwrap(),
            AmplyRegularParams { v: 10, k: 3, lambda: 0, mu: 1 }
        );
        let hs = build(&NamedGraph::HoffmanSingleton).unwrap();
        assert_eq!(
            hs.amply_regular_params().unwrap(),
            AmplyRegularParams { v: 50, k: 7, lambda: 0, mu: 1 }
        );
        assert_eq!(hs.distance_matrix().diameter(), 2);
        // λ = 0 rules out triangles and μ = 1 rules out 4-cycles, so girth is 5
        assert_eq!(hs.intersection_array().unwrap().to_string(), "{7,6;1,1}");
    }

    #[test]
    fn bundled_arrays() {
        let cs = build(&NamedGraph::ConwaySmith).unwrap();
        assert_eq!(cs.intersection_array().unwrap().to_string(), "{10,6,4,1;1,2,6,10}");
        assert_eq!(cs.distance_matrix().diameter(), 4);
        let doro = build(&NamedGraph::Doro).unwrap();
        assert_eq!(doro.intersection_array().unwrap().to_string(), "{10,6,4;1,2,5}");
        assert_eq!(
            doro.amply_regular_params().unwrap(),
            AmplyRegularParams { v: 65, k: 10, lambda: 3, mu: 2 }
        );
    }

    #[test]
    fn build_is_deterministic() {
        for id in [NamedGraph::Icosahedron, NamedGraph::HoffmanSingleton, NamedGraph::Doro] {
            assert_eq!(build(&id).unwrap().edges(), build(&id).unwrap().edges());
        }
    }

    #[test]
    fn names_round_trip() {
        for id in [
            NamedGraph::HoffmanSingleton,
            NamedGraph::ConwaySmith,
            NamedGraph::Complete(7),
            NamedGraph::DisjointCliques { r: 2, s: 5 },
        ] {
            assert_eq!(id.to_string().parse::<NamedGraph>().unwrap(), id);
        }
        assert_eq!("conway_smith".parse::<NamedGraph>().unwrap(), NamedGraph::ConwaySmith);
        assert!("dodecahedron".parse::<NamedGraph>().is_err());
        assert_eq!(build(&NamedGraph::Complete(0)), Err(BuildError::NonPositive));
    }

    #[test]
    fn clique_extensions() {
        let c5 = build(&NamedGraph::Pentagon).unwrap();
        assert_eq!(alpha_clique_extension(&c5, 1).unwrap(), c5);
        let e = alpha_clique_extension(&c5, 2).unwrap();
        assert_eq!(e.order(), 10);
        assert!(e.degrees().iter().all(|&d| d == 5));
        assert_eq!(alpha_clique_extension(&Graph::complete(1), 4).unwrap(), Graph::complete(4));
        assert_eq!(alpha_clique_extension(&c5, 0), Err(BuildError::ZeroAlpha));
    }
}
