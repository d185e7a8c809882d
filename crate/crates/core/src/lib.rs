//! Token graphs and their treewidth.
//!
//! The k-token graph `F_k(G)` has one vertex per k-subset of `V(G)`, two subsets being
//! adjacent when their symmetric difference is an edge of `G`. This crate builds token
//! graphs of stars, paths and complete graphs, constructs explicit tree and path
//! decompositions and brambles for them, evaluates the closed-form width bounds, and
//! certifies everything against exact oracles that are practical at desk scale:
//!
//! * [`graph`]: base graphs, generators, Cartesian products, Laplacians.
//! * [`token`]: `F_k(G)` construction and its structural maps.
//! * [`decompositions`]: tree decomposition type, validator, and the explicit constructions.
//! * [`bramble`]: brambles, their validation and exact minimum hitting sets.
//! * [`oracles`]: exact treewidth, borders and minimax border, algebraic connectivity.
//! * [`formulas`]: closed-form bound reports.
//! * [`cli`] and [`verify`]: the `tokentw` command-line front end and its check battery.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod bramble;
pub mod cli;
pub mod decompositions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod oracles;
pub mod subsets;
pub mod token;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Family, Graph, Label};
pub use token::{token_graph, TokenGraph};
