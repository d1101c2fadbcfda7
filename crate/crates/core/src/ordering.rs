//! The layered facet order whose shellability the toolkit verifies.
//!
//! Three layers of structure, all specific to `k = 3`:
//!
//! 1. **Vertex order.** Vertices are ranked center-out: position `i`
//!    (1-based) holds `ω_i = c + (-1)^(i-1) * floor(i/2) (mod n)`, so the
//!    sequence starts at the center `c`, fans outward alternating below
//!    and above, and ends at `0`.
//! 2. **Decomposition.** Each facet complement `{a, b, c'}` splits into
//!    its order-minimal vertex `ω` and the remaining pair `i1 < i2`
//!    (natural integer order).
//! 3. **Classes.** Facets are partitioned into classes `0..p` by matching
//!    the decomposition against ten arithmetic conditions per candidate
//!    class index `alpha` in `1..p` (class 0 collects everything that
//!    matches none). With `c` the center and all half-integer thresholds
//!    evaluated as doubled integers, the conditions are, gated by the
//!    position of `ω` among the complement labels:
//!
//!    | tag | shape          | constraints |
//!    |-----|----------------|-------------|
//!    | X1  | `i1 < i2 < ω`  | `2ω < 2c+p`,  `i1 = 2c-ω-p+α-1` |
//!    | X2  | `i1 < i2 < ω`  | `2ω >= 2c+p`, `i1 = ω-2p+α-1` |
//!    | X3  | `i1 < ω < i2`  | `2ω < 2c-p`,  `i2 = i1+2p-α+1` |
//!    | X4  | `i1 < ω < i2`  | `2ω >= 2c-p`, `ω-p+α <= i1 <= 2c-ω-p-1`, `i2 = i1+2p-α+1` |
//!    | X5  | `i1 < ω < i2`  | `2ω <= 2c-α-1`, `i2 = 2c-ω+p-α`, `i1 >= i2-2p+α` |
//!    | X6  | `i1 < ω < i2`  | `2ω >= 2c+α`, `i1 = 2c-ω-p+α-1`, `i2 <= i1+2p-α` |
//!    | X7  | `i1 < ω < i2`  | `2ω < 2c+p`,  `i1 = i2-2p+α-1`, `2c-ω+p <= i2 <= ω+p-α` |
//!    | X8  | `i1 < ω < i2`  | `2ω >= 2c+p`, `i1 = i2-2p+α-1` |
//!    | X9  | `ω < i1 < i2`  | `ω <= n-2p-2`, `i1 >= ω+p+1`, `i2 = ω+2p-α+1` |
//!    | X10 | `ω < i1 < i2`  | `ω > n-2p-2`,  `i1 >= ω+p+1`, `i2 = n-α-1` |
//!
//!    For a genuine facet at most one `alpha` can match; a double match
//!    aborts with [`Error::ClassificationConflict`]. Several tags may
//!    match within the winning `alpha`; all are reported.
//!
//! The facet order compares class index first, then vertex-order rank of
//! `ω`, then `(i1, i2)` lexicographically. [`sort_facets`] realizes it;
//! the shelling checker then verifies it is a shelling order by
//! definition.

use std::cmp::Ordering;

use crate::cutcomplex::{ComplexParams, Facet};
use crate::error::Error;

/// The center-out vertex permutation and its inverse rank table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaOrder {
    seq: Vec<usize>,
    rank: Vec<usize>,
}

impl OmegaOrder {
    pub fn new(params: &ComplexParams) -> OmegaOrder {
        let n = params.n() as i64;
        let c = params.c() as i64;
        let mut seq = Vec::with_capacity(n as usize);
        for i in 1..=n {
            let offset = i / 2;
            let v = if i % 2 == 1 { c + offset } else { c - offset };
            seq.push(v.rem_euclid(n) as usize);
        }
        let mut rank = vec![0usize; n as usize];
        for (idx, &v) in seq.iter().enumerate() {
            rank[v] = idx + 1;
        }
        OmegaOrder { seq, rank }
    }

    /// The permutation `(ω_1, .., ω_n)`.
    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    /// 1-based position of `v` in the permutation.
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// True iff `u` comes strictly before `v`.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        debug_assert_ne!(u, v);
        self.rank[u] < self.rank[v]
    }
}

/// A 3-element facet complement split into its order-minimal vertex and
/// the remaining pair in natural order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// The complement vertex that comes first in the vertex order.
    pub omega: usize,
    /// Smaller of the two remaining complement vertices.
    pub i1: usize,
    /// Larger of the two remaining complement vertices.
    pub i2: usize,
    /// 1-based position of `omega` in the vertex order.
    pub omega_rank: usize,
}

/// Splits a facet with 3-element complement. Panics on other sizes.
pub fn decompose(facet: &Facet, order: &OmegaOrder) -> Decomposition {
    let (a, b, c) = facet
        .triple()
        .expect("decompose requires a 3-element complement");
    let mut vs = [a, b, c];
    vs.sort_by_key(|&v| order.rank(v));
    let omega = vs[0];
    let (i1, i2) = if vs[1] < vs[2] {
        (vs[1], vs[2])
    } else {
        (vs[2], vs[1])
    };
    Decomposition {
        omega,
        i1,
        i2,
        omega_rank: order.rank(omega),
    }
}

/// Tags for the ten class-membership conditions (see the module docs for
/// the exact predicates).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    X1,
    X2,
    X3,
    X4,
    X5,
    X6,
    X7,
    X8,
    X9,
    X10,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::X1 => "X1",
            Condition::X2 => "X2",
            Condition::X3 => "X3",
            Condition::X4 => "X4",
            Condition::X5 => "X5",
            Condition::X6 => "X6",
            Condition::X7 => "X7",
            Condition::X8 => "X8",
            Condition::X9 => "X9",
            Condition::X10 => "X10",
        }
    }
}

/// Result of classifying one facet: the class index `alpha` in `0..p` and
/// every condition tag matched within that class (empty iff `alpha = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetClass {
    pub alpha: usize,
    pub conditions: Vec<Condition>,
}

/// Evaluates the conditions for one candidate `alpha`, in tag order.
/// Inequalities keep the exact shape of the module-level condition table.
#[allow(clippy::int_plus_one)]
fn matched_conditions(d: &Decomposition, params: &ComplexParams, alpha: i64) -> Vec<Condition> {
    let (w, i1, i2) = (d.omega as i64, d.i1 as i64, d.i2 as i64);
    let n = params.n() as i64;
    let p = params.p() as i64;
    let c2 = 2 * params.c() as i64;
    let a = alpha;
    let mut tags = Vec::new();

    if i1 < i2 && i2 < w {
        if 2 * w < c2 + p && i1 == c2 - w - p + a - 1 {
            tags.push(Condition::X1);
        }
        if 2 * w >= c2 + p && i1 == w - 2 * p + a - 1 {
            tags.push(Condition::X2);
        }
    } else if i1 < w && w < i2 {
        if 2 * w < c2 - p && i2 == i1 + 2 * p - a + 1 {
            tags.push(Condition::X3);
        }
        if 2 * w >= c2 - p && w - p + a <= i1 && i1 <= c2 - w - p - 1 && i2 == i1 + 2 * p - a + 1 {
            tags.push(Condition::X4);
        }
        if 2 * w <= c2 - a - 1 && i2 == c2 - w + p - a && i1 >= i2 - 2 * p + a {
            tags.push(Condition::X5);
        }
        if 2 * w >= c2 + a && i1 == c2 - w - p + a - 1 && i2 <= i1 + 2 * p - a {
            tags.push(Condition::X6);
        }
        if 2 * w < c2 + p && i1 == i2 - 2 * p + a - 1 && c2 - w + p <= i2 && i2 <= w + p - a {
            tags.push(Condition::X7);
        }
        if 2 * w >= c2 + p && i1 == i2 - 2 * p + a - 1 {
            tags.push(Condition::X8);
        }
    } else {
        debug_assert!(w < i1 && i1 < i2);
        if w <= n - 2 * p - 2 && i1 >= w + p + 1 && i2 == w + 2 * p - a + 1 {
            tags.push(Condition::X9);
        }
        if w > n - 2 * p - 2 && i1 >= w + p + 1 && i2 == n - a - 1 {
            tags.push(Condition::X10);
        }
    }
    tags
}

/// Assigns a facet its class. Candidate indices are scanned in ascending
/// order and *all* of them are evaluated, so a facet matching two
/// distinct class indices is detected and aborts the run.
pub fn classify(
    facet: &Facet,
    params: &ComplexParams,
    order: &OmegaOrder,
) -> Result<FacetClass, Error> {
    if params.k() != 3 {
        return Err(Error::Parameter(format!(
            "classification is defined for k = 3, got k = {}",
            params.k()
        )));
    }
    if facet.complement().len() != 3 {
        return Err(Error::Parameter(format!(
            "classification needs a 3-element complement, got {:?}",
            facet.complement()
        )));
    }
    let d = decompose(facet, order);
    let mut found: Option<FacetClass> = None;
    for alpha in 1..params.p() {
        let tags = matched_conditions(&d, params, alpha as i64);
        if tags.is_empty() {
            continue;
        }
        if let Some(prev) = &found {
            return Err(Error::ClassificationConflict {
                complement: facet.complement_vec(),
                first: prev.alpha,
                second: alpha,
            });
        }
        found = Some(FacetClass {
            alpha,
            conditions: tags,
        });
    }
    Ok(found.unwrap_or(FacetClass {
        alpha: 0,
        conditions: Vec::new(),
    }))
}

/// Which of two distinct facets comes first in the facet order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precedence {
    Before,
    After,
}

/// Sort key: class index, then rank of `ω`, then `(i1, i2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct SortKey {
    alpha: usize,
    omega_rank: usize,
    i1: usize,
    i2: usize,
}

fn sort_key(facet: &Facet, params: &ComplexParams, order: &OmegaOrder) -> Result<SortKey, Error> {
    let class = classify(facet, params, order)?;
    let d = decompose(facet, order);
    Ok(SortKey {
        alpha: class.alpha,
        omega_rank: d.omega_rank,
        i1: d.i1,
        i2: d.i2,
    })
}

/// Compares two distinct facets under the facet order. Equal facets are
/// rejected; the order is total on distinct facets because the
/// decomposition determines the complement.
pub fn compare(
    f: &Facet,
    g: &Facet,
    params: &ComplexParams,
    order: &OmegaOrder,
) -> Result<Precedence, Error> {
    if f == g {
        return Err(Error::EqualFacets(f.complement_vec()));
    }
    let kf = sort_key(f, params, order)?;
    let kg = sort_key(g, params, order)?;
    match kf.cmp(&kg) {
        Ordering::Less => Ok(Precedence::Before),
        Ordering::Greater => Ok(Precedence::After),
        Ordering::Equal => Err(Error::Invariant(format!(
            "distinct facets {:?} and {:?} share a sort key",
            f.complement(),
            g.complement()
        ))),
    }
}

/// Stable total sort of a facet list under the facet order. Duplicate
/// facets are rejected.
pub fn sort_facets(
    facets: &[Facet],
    params: &ComplexParams,
    order: &OmegaOrder,
) -> Result<Vec<Facet>, Error> {
    let mut keyed = facets
        .iter()
        .map(|f| Ok((sort_key(f, params, order)?, *f)))
        .collect::<Result<Vec<_>, Error>>()?;
    keyed.sort_by_key(|(k, _)| *k);
    for w in keyed.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::DuplicateFacet(w[0].1.complement_vec()));
        }
    }
    Ok(keyed.into_iter().map(|(_, f)| f).collect())
}
