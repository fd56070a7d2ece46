//! Exact domination polynomials and average dominating-set order.
//!
//! The crate computes `D_G(x)`, whose `k`-th coefficient counts dominating
//! sets of size `k`, and `avd(G) = D'(1) / D(1)` as an exact rational. On
//! top of that it enumerates trees, forests and small labeled graphs and
//! checks the `avd <= 2n/3` forest bound, its equality characterization, and
//! the identities behind it.

pub mod canon;
pub mod dompoly;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod poly;
pub mod rational;
pub mod verify;

pub use canon::{canonical_code, CanonicalCode};
pub use dompoly::{
    avd, brute_force, compute, count_dominating_avoiding, gamma, split_by_vertex, star_poly,
    DomEngine,
};
pub use enumerate::{forests_no_isolated, labeled_graphs, trees, Family, FamilySpec};
pub use error::{Error, Result};
pub use graph::{Graph, Relabel, VertexClass, VertexId};
pub use poly::DomPolynomial;
pub use rational::{EvalPair, Rational};
pub use verify::{check_bound, BoundReport, BoundStatus, SweepReport};
