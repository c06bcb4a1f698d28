//! Algorithms for δ-hyperbolic graphs.
//!
//! The crate is built around an immutable adjacency-list [`graph::Graph`] and
//! provides:
//!
//! - exact and approximate Gromov hyperbolicity via the four-point condition
//!   ([`hyperbolicity`]),
//! - nested and limited-overlap families of node-expansion witnesses
//!   ([`witness`], [`overlap`]),
//! - families of pairwise disjoint small s-t cuts ([`cuts`]),
//! - integral max-flow/min-cut with symbolic infinite capacities ([`flow`]),
//! - approximation algorithms for the EHSSC and UUMV/MSE vulnerability
//!   problems ([`vulnerability`]),
//! - a constructive small-set-expansion solver for regular graphs ([`sse`]),
//! - brute-force oracles for desk-scale validation ([`oracle`]) and
//!   deterministic graph generators ([`generate`]).
//!
//! The crate is `no_std` (alloc required); all IO lives in the companion CLI
//! crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
#[macro_use]
extern crate std;

pub mod bounds;
pub mod cuts;
pub mod error;
pub mod flow;
pub mod generate;
pub mod graph;
pub mod hyperbolicity;
pub mod num;
pub mod oracle;
pub mod overlap;
pub mod sse;
pub mod vulnerability;
pub mod witness;

pub use error::Error;
pub use graph::{CanonicalPath, Edge, Graph, NodeSet, Subgraph};
pub use num::{HalfInt, Ratio};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
