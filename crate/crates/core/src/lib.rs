//! Exact verification toolkit for the μ-bound on amply regular graphs with
//! a well-defined μ and the Terwilliger-graph machinery around it.
//!
//! - [`graph`]: bit-row graphs, distances, local graphs, distance- and
//!   amply-regularity checks.
//! - [`constructions`]: named graphs and α-clique extensions.
//! - [`terwilliger`]: Terwilliger property, twin quotients, locally-Δ tests.
//! - [`mu_bound`]: the coclique parameter `c` and the μ-bound.
//! - [`feasibility`]: parameter arithmetic and the quotient-tower scan.
//! - [`io`], [`report`], [`reference`]: file formats, JSON reports and the
//!   bundled table of expected results.

pub mod array;
pub mod bitset;
pub mod constructions;
pub mod feasibility;
pub mod graph;
pub mod io;
pub mod iso;
pub mod mu_bound;
pub mod rational;
pub mod reference;
pub mod report;
pub mod terwilliger;

pub use array::IntersectionArray;
pub use constructions::{alpha_clique_extension, build, NamedGraph};
pub use graph::{AmplyRegularParams, Graph};
pub use rational::Rational;
