use thiserror::Error;

/// Errors shared across the toolkit.
///
/// `Parameter`, `VoidComplex`, and `ResourceLimit` are caller-facing and
/// map onto distinct CLI exit codes; the remaining variants indicate that
/// a cross-check failed and the run must abort loudly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the documented domain of an operation.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The complex has no facets, so the requested quantity is undefined.
    #[error("void complex: {0}")]
    VoidComplex(String),

    /// A computation was refused because it would exceed a memory or
    /// face-count budget.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// Malformed facet-list text input.
    #[error("facet list format: {0}")]
    Format(String),

    /// A facet matched class conditions for two distinct alpha values.
    /// The classes are provably disjoint, so this aborts the run.
    #[error(
        "classification conflict: complement {complement:?} matches both alpha = {first} and alpha = {second}"
    )]
    ClassificationConflict {
        complement: Vec<usize>,
        first: usize,
        second: usize,
    },

    /// Two equal facets were handed to an order comparison.
    #[error("facets compare equal: complement {0:?}")]
    EqualFacets(Vec<usize>),

    /// Facet list contains a repeated facet.
    #[error("duplicate facet: complement {0:?}")]
    DuplicateFacet(Vec<usize>),

    /// Facet list mixes facets of different dimensions.
    #[error("mixed dimensions: complements of sizes {0} and {1}")]
    MixedDimensions(usize, usize),

    /// An ordered facet list failed the shelling condition, so a quantity
    /// defined only for shellings (e.g. the spanning set) was refused.
    #[error("not a shelling: {0}")]
    NotAShelling(String),

    /// A structural consequence that must hold by construction failed;
    /// this always indicates a bug and is never silently ignored.
    #[error("invariant violated: {0}")]
    Invariant(String),
}
