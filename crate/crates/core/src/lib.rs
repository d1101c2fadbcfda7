//! Verification toolkit for k-cut complexes of circulant graphs, with the
//! complete machinery for 3-cut complexes of powers of cycle graphs:
//!
//! * [`graph`] — circulant graphs, cycle powers, induced-subgraph
//!   connectivity;
//! * [`cutcomplex`] — facet enumeration, face counts, reduced Euler
//!   characteristic, and the facet-list text format;
//! * [`ordering`] — the center-out vertex order, facet decomposition and
//!   classification, and the layered facet order checked for shellability;
//! * [`shelling`] — definition-based shelling verification, spanning-facet
//!   detection, and an exploratory shelling-order search;
//! * [`census`] — the closed-form spanning-facet census and its explicit
//!   construction;
//! * [`homology`] — reduced simplicial homology over GF(2) (with an exact
//!   rational rank path) as an independent topological oracle.
//!
//! The cut complex `Δ_k(G)` of a graph `G` is the simplicial complex whose
//! facets are the `(|V|-k)`-subsets of `V(G)` whose complement induces a
//! disconnected subgraph. Facets are stored by their k-element complements
//! throughout.

pub mod census;
pub mod cutcomplex;
mod error;
pub mod graph;
pub mod homology;
pub mod ordering;
pub mod shelling;

pub use error::Error;
