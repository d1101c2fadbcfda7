//! Circulant graphs, powers of cycle graphs, and induced-subgraph
//! connectivity queries.
//!
//! Vertices are always residues `0..n-1`. Adjacency rows are fixed-width
//! bit vectors so that reachability inside an induced subgraph reduces to
//! a masked frontier expansion; facet enumeration calls that query once
//! per candidate complement, so it has to stay allocation-free.

use std::fmt;

use crate::error::Error;

/// Largest supported vertex count. Adjacency rows and vertex subsets are
/// single `u64` words, and `full_set` needs `1 << n` to be in range.
pub const MAX_VERTICES: usize = 63;

/// A subset of `0..MAX_VERTICES` packed into one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet((1u64 << n) - 1)
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex in the set, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An undirected simple graph on `0..n-1` with bit-vector adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The circulant graph on `Z_n` with the given generating set:
    /// `u ~ v` iff `(u - v) mod n` lies in `S ∪ {n - s : s ∈ S}`.
    ///
    /// Rejects `n < 2`, generators outside `1..n`, and duplicates do not
    /// matter (set semantics).
    pub fn circulant(n: usize, generators: &[usize]) -> Result<Graph, Error> {
        if n < 2 {
            return Err(Error::Parameter(format!(
                "circulant graph needs n >= 2, got n = {n}"
            )));
        }
        if n > MAX_VERTICES {
            return Err(Error::Parameter(format!(
                "vertex count {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        for &s in generators {
            if s == 0 || s >= n {
                return Err(Error::Parameter(format!(
                    "circulant generator {s} is outside 1..{n}"
                )));
            }
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (v, row) in adj.iter_mut().enumerate() {
            for &s in generators {
                row.insert((v + s) % n);
                row.insert((v + n - s) % n);
            }
        }
        Ok(Graph { n, adj })
    }

    /// The p-th power of the cycle graph `C_n`: vertices at circular
    /// distance `1..=p` are joined. Equals `circulant(n, {1..p})`; for
    /// `n <= 2p + 1` this is the complete graph.
    pub fn cycle_power(n: usize, p: usize) -> Result<Graph, Error> {
        if n < 3 {
            return Err(Error::Parameter(format!(
                "cycle power needs n >= 3, got n = {n}"
            )));
        }
        if p < 1 {
            return Err(Error::Parameter("cycle power needs p >= 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::Parameter(format!(
                "vertex count {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for v in 0..n {
            for j in 1..=p {
                let u = (v + j) % n;
                if u != v {
                    adj[v].insert(u);
                    adj[u].insert(v);
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// True iff the subgraph induced on `sub` has at least two connected
    /// components. The empty set and singletons count as connected.
    pub fn induced_disconnected(&self, sub: VertexSet) -> Result<bool, Error> {
        if !sub.is_subset_of(self.vertices()) {
            return Err(Error::Parameter(format!(
                "vertex set {:?} has labels outside 0..{}",
                sub, self.n
            )));
        }
        if sub.len() <= 1 {
            return Ok(false);
        }
        let start = sub.min().expect("nonempty");
        let mut reached = VertexSet::singleton(start);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            next = next.intersection(sub).difference(reached);
            reached = reached.union(next);
            frontier = next;
        }
        Ok(reached != sub)
    }
}
