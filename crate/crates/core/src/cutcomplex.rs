//! Facets of the k-cut complex, face counts, and the reduced Euler
//! characteristic.
//!
//! A k-subset `W` of the vertices is a facet *complement* when the induced
//! subgraph on `W` is disconnected; the facet itself is `V \ W`. The
//! complex is stored purely by complements (memory `O(F)`); full facet
//! bit sets are materialized on demand. Face counts are derived from the
//! complement criterion — a set `T` is a face exactly when its complement
//! still contains a disconnected k-subset, i.e. when `T` lies inside some
//! facet — evaluated for all `2^n` subsets at once over the subset
//! lattice rather than by materializing the downward closure.

use std::fmt;

use itertools::Itertools;

use crate::error::Error;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Largest vertex count for which the full-subset-lattice face table
/// (one bit per subset of `V`) is allowed: 2^26 bits is 8 MiB.
pub const MAX_FACE_TABLE_VERTICES: usize = 26;

/// Instance parameters for `Δ_k(C_n^p)` together with the center vertex
/// `c` and the applicability of the shelling theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexParams {
    n: usize,
    p: usize,
    k: usize,
    c: usize,
    theorem_applies: bool,
}

impl ComplexParams {
    /// Validates `(n, p, k)` and derives `c = (n+1)/2` for odd `n`,
    /// `n/2` for even `n`. The theorem hypotheses (`k = 3`, `p >= 2`,
    /// `n >= 6p - 3`) are recorded rather than enforced, so parameter
    /// ranges outside them stay usable for exploratory runs.
    pub fn new(n: usize, p: usize, k: usize) -> Result<ComplexParams, Error> {
        if !(3..=MAX_VERTICES).contains(&n) {
            return Err(Error::Parameter(format!(
                "n must be in 3..={MAX_VERTICES}, got {n}"
            )));
        }
        if p < 1 {
            return Err(Error::Parameter("p must be >= 1".into()));
        }
        if k < 1 || k > n {
            return Err(Error::Parameter(format!("k must be in 1..={n}, got {k}")));
        }
        let c = n.div_ceil(2);
        debug_assert!(2 * c == n || 2 * c == n + 1);
        let theorem_applies = k == 3 && p >= 2 && n >= 6 * p - 3;
        let params = ComplexParams {
            n,
            p,
            k,
            c,
            theorem_applies,
        };
        if theorem_applies && !params.center_inequalities_hold() {
            // These follow from n >= 6p - 3; a failure is an arithmetic bug.
            return Err(Error::Invariant(format!(
                "center inequalities failed for n = {n}, p = {p}"
            )));
        }
        Ok(params)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The center vertex `c`, the head of the vertex order.
    pub fn c(&self) -> usize {
        self.c
    }

    pub fn theorem_applies(&self) -> bool {
        self.theorem_applies
    }

    /// The bounds on `c` used throughout the theorem range, verified with
    /// doubled integers so the half-integer forms stay exact:
    /// `p < 3p-1 <= c <= n-3p+2 < n-p`, `2c - p <= 2n - 4p - 2`,
    /// `2c + 3p - 2 <= 2n - 2p`, and `2c - 3p >= 2p`.
    pub fn center_inequalities_hold(&self) -> bool {
        let (n, p, c) = (self.n as i64, self.p as i64, self.c as i64);
        p < 3 * p - 1
            && 3 * p - 1 <= c
            && c <= n - 3 * p + 2
            && n - 3 * p + 2 < n - p
            && 2 * c - p <= 2 * n - 4 * p - 2
            && 2 * c + 3 * p - 2 <= 2 * n - 2 * p
            && 2 * c - 3 * p >= 2 * p
    }
}

/// A facet of the cut complex, stored as its complement: the k vertices
/// removed from `V`. Iteration order of the bit set gives the canonical
/// ascending labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Facet {
    complement: VertexSet,
}

impl Facet {
    pub fn from_complement(complement: VertexSet) -> Facet {
        Facet { complement }
    }

    pub fn from_complement_slice(vertices: &[usize]) -> Facet {
        Facet {
            complement: vertices.iter().copied().collect(),
        }
    }

    pub fn complement(&self) -> VertexSet {
        self.complement
    }

    pub fn complement_vec(&self) -> Vec<usize> {
        self.complement.to_vec()
    }

    /// The facet itself, `V \ complement`.
    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::full(n).difference(self.complement)
    }

    /// The complement as `(a, b, c)` with `a < b < c`, when `k = 3`.
    pub fn triple(&self) -> Option<(usize, usize, usize)> {
        let v = self.complement.to_vec();
        match v[..] {
            [a, b, c] => Some((a, b, c)),
            _ => None,
        }
    }
}

impl PartialOrd for Facet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Facet {
    /// Lexicographic order on the ascending complement labels.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.complement.iter().cmp(other.complement.iter())
    }
}

impl fmt::Debug for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Facet{:?}", self.complement)
    }
}

/// All facets of `Δ_k(g)`: the k-subsets whose induced subgraph is
/// disconnected, returned as complements sorted by canonical labels.
/// Returns an empty list when the complex is void.
pub fn enumerate_facets(g: &Graph, k: usize) -> Result<Vec<Facet>, Error> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(Error::Parameter(format!("k must be in 1..={n}, got {k}")));
    }
    let mut facets = Vec::new();
    for combo in (0..n).combinations(k) {
        let sub: VertexSet = combo.into_iter().collect();
        if g.induced_disconnected(sub)? {
            facets.push(Facet::from_complement(sub));
        }
    }
    facets.sort();
    Ok(facets)
}

fn validate_pure(facets: &[Facet], n: usize) -> Result<usize, Error> {
    let k = facets[0].complement().len();
    for f in facets {
        if f.complement().len() != k {
            return Err(Error::MixedDimensions(k, f.complement().len()));
        }
        if !f.complement().is_subset_of(VertexSet::full(n)) {
            return Err(Error::Parameter(format!(
                "facet complement {:?} has labels outside 0..{n}",
                f.complement()
            )));
        }
    }
    Ok(k)
}

/// One bit per subset of `0..n`: bit `m` is set iff the subset with mask
/// `m` is a face, i.e. lies inside some facet. Filled top-down over the
/// subset lattice from the facet masks.
fn face_table(facets: &[Facet], n: usize) -> Result<Vec<u64>, Error> {
    if n > MAX_FACE_TABLE_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "face counting over the subset lattice supports n <= {MAX_FACE_TABLE_VERTICES}, got {n}"
        )));
    }
    let size = 1usize << n;
    let mut table = vec![0u64; size.div_ceil(64)];
    let get = |t: &[u64], m: usize| t[m >> 6] >> (m & 63) & 1 == 1;
    for f in facets {
        let m = f.vertex_set(n).bits() as usize;
        table[m >> 6] |= 1 << (m & 63);
    }
    for m in (0..size).rev() {
        if get(&table, m) {
            continue;
        }
        for v in 0..n {
            let sup = m | 1 << v;
            if sup != m && get(&table, sup) {
                table[m >> 6] |= 1 << (m & 63);
                break;
            }
        }
    }
    Ok(table)
}

/// The face-count vector `(f_{-1}, f_0, .., f_{n-k-1})`: `f_j` is the
/// number of j-dimensional faces, with `f_{-1} = 1` for the empty face.
/// Refuses a void complex; the vector is undefined there.
pub fn face_counts(facets: &[Facet], n: usize) -> Result<Vec<u64>, Error> {
    if facets.is_empty() {
        return Err(Error::VoidComplex(
            "no face vector for a void complex".into(),
        ));
    }
    let k = validate_pure(facets, n)?;
    let table = face_table(facets, n)?;
    let mut counts = vec![0u64; n - k + 1];
    for m in 0..1usize << n {
        if table[m >> 6] >> (m & 63) & 1 == 1 {
            counts[(m as u64).count_ones() as usize] += 1;
        }
    }
    debug_assert_eq!(counts[0], 1);
    Ok(counts)
}

/// Reduced Euler characteristic `Σ_{j>=0} (-1)^j f_j - 1`. The void
/// complex is assigned `-1` by convention.
pub fn reduced_euler(facets: &[Facet], n: usize) -> Result<i64, Error> {
    if facets.is_empty() {
        return Ok(-1);
    }
    let counts = face_counts(facets, n)?;
    let mut chi = 0i64;
    for (j, &f) in counts.iter().skip(1).enumerate() {
        let term = f as i64;
        chi += if j % 2 == 0 { term } else { -term };
    }
    Ok(chi - 1)
}

/// A parsed facet-list file: header `n=<n> k=<k>`, then one complement
/// per line as space-separated ascending labels, in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetList {
    pub n: usize,
    pub k: usize,
    pub facets: Vec<Facet>,
}

/// Renders the facet-list text format. Complement sizes must all equal `k`.
pub fn write_facet_list(n: usize, k: usize, facets: &[Facet]) -> Result<String, Error> {
    let mut out = format!("n={n} k={k}\n");
    for f in facets {
        if f.complement().len() != k {
            return Err(Error::MixedDimensions(k, f.complement().len()));
        }
        let labels = f.complement_vec();
        out.push_str(&labels.iter().map(|v| v.to_string()).join(" "));
        out.push('\n');
    }
    Ok(out)
}

/// Parses the facet-list text format, preserving line order. Rejects
/// malformed headers, non-ascending or out-of-range labels, wrong-size
/// complements, and repeated facets.
pub fn parse_facet_list(text: &str) -> Result<FacetList, Error> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty input".into()))?;
    let parse_field = |field: &str, key: &str| -> Result<usize, Error> {
        field
            .strip_prefix(&format!("{key}="))
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| {
                Error::Format(format!("bad header field {field:?}, expected {key}=<int>"))
            })
    };
    let mut fields = header.split_whitespace();
    let n = parse_field(
        fields
            .next()
            .ok_or_else(|| Error::Format("empty header".into()))?,
        "n",
    )?;
    let k = parse_field(
        fields
            .next()
            .ok_or_else(|| Error::Format("header missing k field".into()))?,
        "k",
    )?;
    if fields.next().is_some() {
        return Err(Error::Format("trailing tokens in header".into()));
    }
    if n == 0 || n > MAX_VERTICES || k == 0 || k > n {
        return Err(Error::Format(format!("unsupported header n={n} k={k}")));
    }

    let mut facets = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (lineno, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut labels = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Format(format!("line {}: bad label {tok:?}", lineno + 2)))?;
            if v >= n {
                return Err(Error::Format(format!(
                    "line {}: label {v} out of range 0..{n}",
                    lineno + 2
                )));
            }
            labels.push(v);
        }
        if labels.len() != k {
            return Err(Error::Format(format!(
                "line {}: expected {k} labels, got {}",
                lineno + 2,
                labels.len()
            )));
        }
        if !labels.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Format(format!(
                "line {}: labels must be strictly ascending",
                lineno + 2
            )));
        }
        let facet = Facet::from_complement_slice(&labels);
        if !seen.insert(facet) {
            return Err(Error::Format(format!(
                "line {}: repeated facet {labels:?}",
                lineno + 2
            )));
        }
        facets.push(facet);
    }
    Ok(FacetList { n, k, facets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn facet(vs: &[usize]) -> Facet {
        Facet::from_complement_slice(vs)
    }

    /// Oracle: materialize the downward closure with a hash set.
    fn closure_counts(facets: &[Facet], n: usize) -> Vec<u64> {
        let k = facets[0].complement().len();
        let mut faces: HashSet<u64> = HashSet::new();
        let mut frontier: HashSet<u64> = facets.iter().map(|f| f.vertex_set(n).bits()).collect();
        while !frontier.is_empty() {
            faces.extend(frontier.iter().copied());
            let mut next = HashSet::new();
            for &m in &frontier {
                for v in VertexSet::from_bits(m).iter() {
                    next.insert(m & !(1 << v));
                }
            }
            frontier = next.difference(&faces).copied().collect();
        }
        let mut counts = vec![0u64; n - k + 1];
        for m in faces {
            counts[m.count_ones() as usize] += 1;
        }
        counts
    }

    #[test]
    fn params_center_and_theorem_flags() {
        let p92 = ComplexParams::new(9, 2, 3).unwrap();
        assert_eq!(p92.c(), 5);
        assert!(p92.theorem_applies());
        let p10 = ComplexParams::new(10, 2, 3).unwrap();
        assert_eq!(p10.c(), 5);
        let p8 = ComplexParams::new(8, 2, 3).unwrap();
        assert!(!p8.theorem_applies());
        let k2 = ComplexParams::new(12, 2, 2).unwrap();
        assert!(!k2.theorem_applies());
    }

    #[test]
    fn params_center_inequalities_across_theorem_range() {
        for p in 2..=5 {
            for n in 6 * p - 3..=MAX_VERTICES {
                let params = ComplexParams::new(n, p, 3).unwrap();
                assert!(params.theorem_applies());
                assert!(params.center_inequalities_hold(), "(n, p) = ({n}, {p})");
            }
        }
    }

    #[test]
    fn void_below_threshold() {
        let g = Graph::cycle_power(6, 2).unwrap();
        assert!(enumerate_facets(&g, 3).unwrap().is_empty());
    }

    #[test]
    fn facet_count_and_membership_for_9_2() {
        let g = Graph::cycle_power(9, 2).unwrap();
        let facets = enumerate_facets(&g, 3).unwrap();
        assert_eq!(facets.len(), 48);
        assert!(facets.contains(&facet(&[3, 7, 8])));
        assert!(facets.windows(2).all(|w| w[0] < w[1]), "sorted, no dups");
    }

    #[test]
    fn rotation_permutes_facets() {
        for (n, p) in [(9usize, 2usize), (10, 2), (15, 3)] {
            let g = Graph::cycle_power(n, p).unwrap();
            let facets: HashSet<Facet> = enumerate_facets(&g, 3).unwrap().into_iter().collect();
            let rotated: HashSet<Facet> = facets
                .iter()
                .map(|f| {
                    Facet::from_complement(f.complement().iter().map(|v| (v + 1) % n).collect())
                })
                .collect();
            assert_eq!(facets, rotated);
        }
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let mut fs = vec![
            facet(&[1, 2, 3]),
            facet(&[0, 1, 4]),
            facet(&[0, 2, 3]),
            facet(&[0, 1, 2]),
        ];
        fs.sort();
        assert_eq!(
            fs,
            vec![
                facet(&[0, 1, 2]),
                facet(&[0, 1, 4]),
                facet(&[0, 2, 3]),
                facet(&[1, 2, 3]),
            ]
        );
    }

    #[test]
    fn face_counts_full_simplex() {
        let counts = face_counts(&[facet(&[])], 3).unwrap();
        assert_eq!(counts, vec![1, 3, 3, 1]);
        assert_eq!(reduced_euler(&[facet(&[])], 3).unwrap(), 0);
    }

    #[test]
    fn face_counts_hollow_triangle() {
        let fs = vec![facet(&[0]), facet(&[1]), facet(&[2])];
        assert_eq!(face_counts(&fs, 3).unwrap(), vec![1, 3, 3]);
        // One circle: alternating sum minus one is -1.
        assert_eq!(reduced_euler(&fs, 3).unwrap(), -1);
    }

    #[test]
    fn face_counts_match_closure_oracle() {
        let g = Graph::cycle_power(9, 2).unwrap();
        let facets = enumerate_facets(&g, 3).unwrap();
        assert_eq!(face_counts(&facets, 9).unwrap(), closure_counts(&facets, 9));
        let hollow = vec![facet(&[0]), facet(&[1]), facet(&[2])];
        assert_eq!(face_counts(&hollow, 3).unwrap(), closure_counts(&hollow, 3));
    }

    #[test]
    fn purity_top_count_equals_facet_count() {
        let g = Graph::cycle_power(9, 2).unwrap();
        let facets = enumerate_facets(&g, 3).unwrap();
        let counts = face_counts(&facets, 9).unwrap();
        assert_eq!(*counts.last().unwrap(), 48);
        assert_eq!(reduced_euler(&facets, 9).unwrap(), -1);
    }

    #[test]
    fn face_counts_refuses_void_and_mixed() {
        assert!(matches!(face_counts(&[], 5), Err(Error::VoidComplex(_))));
        let mixed = vec![facet(&[0, 1]), facet(&[2])];
        assert!(matches!(
            face_counts(&mixed, 5),
            Err(Error::MixedDimensions(2, 1))
        ));
        assert_eq!(reduced_euler(&[], 5).unwrap(), -1);
    }

    #[test]
    fn facet_list_round_trip_and_rejects() {
        let g = Graph::cycle_power(9, 2).unwrap();
        let facets = enumerate_facets(&g, 3).unwrap();
        let text = write_facet_list(9, 3, &facets).unwrap();
        assert!(text.starts_with("n=9 k=3\n"));
        let parsed = parse_facet_list(&text).unwrap();
        assert_eq!(parsed.n, 9);
        assert_eq!(parsed.k, 3);
        assert_eq!(parsed.facets, facets);

        assert!(matches!(parse_facet_list(""), Err(Error::Format(_))));
        assert!(matches!(parse_facet_list("n=9\n"), Err(Error::Format(_))));
        assert!(matches!(
            parse_facet_list("n=9 k=3\n3 7\n"),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            parse_facet_list("n=9 k=3\n7 3 8\n"),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            parse_facet_list("n=9 k=3\n3 7 9\n"),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            parse_facet_list("n=9 k=3\n3 7 8\n3 7 8\n"),
            Err(Error::Format(_))
        ));
    }
}
