//! Reduced simplicial homology as an independent topological oracle.
//!
//! The chain complex carries the empty face at dimension -1, so the
//! augmented boundary `∂_0` (one all-ones row) yields *reduced* homology:
//! `b~_j = nullity(∂_j) - rank(∂_{j+1})`. Coefficients are GF(2), which
//! suffices for the shellable instances the toolkit certifies (a wedge of
//! equal-dimensional spheres has torsion-free homology); a fraction-free
//! exact rational rank path is available for exploratory inputs where
//! torsion is conceivable.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::cutcomplex::{face_counts, Facet};
use crate::error::Error;
use crate::graph::VertexSet;

/// Default bound on the total number of faces materialized.
pub const DEFAULT_FACE_CAP: usize = 5_000_000;

/// Bound on single boundary-matrix size (bits); 2^31 bits is 256 MiB.
const MATRIX_BITS_CAP: u128 = 1 << 31;

/// Dense GF(2) matrix, row-major in 64-bit words.
#[derive(Clone, Debug)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    fn zeros(rows: usize, cols: usize) -> Gf2Matrix {
        let words_per_row = cols.div_ceil(64).max(1);
        Gf2Matrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn set(&mut self, r: usize, c: usize) {
        self.data[r * self.words_per_row + c / 64] |= 1 << (c % 64);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words_per_row + c / 64] >> (c % 64) & 1 == 1
    }

    /// Rank by row elimination; works on a scratch copy.
    pub fn rank(&self) -> usize {
        let wpr = self.words_per_row;
        let mut data = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, b) = (col / 64, col % 64);
            let pivot = (rank..self.rows).find(|&r| data[r * wpr + w] >> b & 1 == 1);
            let Some(pivot) = pivot else { continue };
            if pivot != rank {
                for x in 0..wpr {
                    data.swap(pivot * wpr + x, rank * wpr + x);
                }
            }
            for r in rank + 1..self.rows {
                if data[r * wpr + w] >> b & 1 == 1 {
                    for x in 0..wpr {
                        data[r * wpr + x] ^= data[rank * wpr + x];
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Faces of the complex grouped by cardinality (level `s` holds the
/// (s-1)-dimensional faces; level 0 is the empty face), plus the GF(2)
/// boundary matrices. `boundary(j)` maps dimension-j faces to their
/// (j-1)-dimensional faces.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    levels: Vec<Vec<VertexSet>>,
    boundaries: Vec<Gf2Matrix>,
}

impl ChainComplex {
    /// Top dimension of the stored complex.
    pub fn top_dimension(&self) -> usize {
        self.levels.len() - 2
    }

    /// Sorted faces of dimension `dim` (`dim + 1` vertices each).
    pub fn faces(&self, dim: usize) -> &[VertexSet] {
        &self.levels[dim + 1]
    }

    /// `∂_j`, for `j` in `0..=top_dimension()`.
    pub fn boundary(&self, j: usize) -> &Gf2Matrix {
        &self.boundaries[j]
    }

    /// Face counts `f_{-1}, f_0, .., f_top` of the stored complex.
    pub fn level_sizes(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.len() as u64).collect()
    }

    /// True iff every composite `∂_j ∘ ∂_{j+1}` is the zero map: each
    /// entry is the GF(2) dot product of a row of `∂_j` with a column of
    /// `∂_{j+1}`, and all must vanish.
    pub fn boundary_composites_vanish(&self) -> bool {
        for j in 1..self.boundaries.len() {
            let outer = &self.boundaries[j - 1];
            let inner = &self.boundaries[j];
            debug_assert_eq!(outer.cols, inner.rows);
            let mut column = vec![0u64; inner.rows.div_ceil(64).max(1)];
            for col in 0..inner.cols {
                column.fill(0);
                for row in 0..inner.rows {
                    if inner.get(row, col) {
                        column[row / 64] |= 1 << (row % 64);
                    }
                }
                for r2 in 0..outer.rows {
                    let base = r2 * outer.words_per_row;
                    let parity: u32 = column
                        .iter()
                        .zip(&outer.data[base..base + outer.words_per_row])
                        .map(|(a, b)| (a & b).count_ones())
                        .sum();
                    if parity % 2 == 1 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn lex_cmp(a: VertexSet, b: VertexSet) -> std::cmp::Ordering {
    a.iter().cmp(b.iter())
}

/// Materializes all faces up to `max_dim` (default: the top dimension)
/// by downward closure and assembles the boundary matrices.
///
/// A preflight face count refuses inputs whose closure would exceed
/// `max_faces` (see [`DEFAULT_FACE_CAP`]); the reduced Euler
/// characteristic is the cheaper alternative there.
pub fn build_chain_complex(
    facets: &[Facet],
    n: usize,
    max_dim: Option<usize>,
    max_faces: usize,
) -> Result<ChainComplex, Error> {
    if facets.is_empty() {
        return Err(Error::VoidComplex(
            "no chain complex for a void complex".into(),
        ));
    }
    let k = facets[0].complement().len();
    if k == n {
        return Err(Error::Parameter(
            "facets are empty sets; the complex has no geometry".into(),
        ));
    }

    // Preflight: exact total face count via the complement criterion.
    let counts = face_counts(facets, n).map_err(|e| match e {
        Error::ResourceLimit(msg) => Error::ResourceLimit(format!(
            "homology preflight: {msg}; use the reduced Euler characteristic instead"
        )),
        other => other,
    })?;
    let total: u64 = counts.iter().sum();
    if total > max_faces as u64 {
        return Err(Error::ResourceLimit(format!(
            "complex has {total} faces, above the cap of {max_faces}; \
             use the reduced Euler characteristic instead"
        )));
    }

    let top_dim = n - k - 1;
    let dim_cap = max_dim.unwrap_or(top_dim).min(top_dim);

    // Downward closure, one cardinality at a time.
    let mut levels: Vec<Vec<VertexSet>> = vec![Vec::new(); dim_cap + 2];
    levels[0] = vec![VertexSet::EMPTY];
    let mut current: Vec<u64> = facets.iter().map(|f| f.vertex_set(n).bits()).collect();
    current.sort_unstable();
    current.dedup();
    for size in (1..=n - k).rev() {
        if size <= dim_cap + 1 {
            let mut faces: Vec<VertexSet> =
                current.iter().map(|&m| VertexSet::from_bits(m)).collect();
            faces.sort_by(|a, b| lex_cmp(*a, *b));
            levels[size] = faces;
        }
        if size > 1 {
            let mut next = Vec::with_capacity(current.len() * size);
            for &m in &current {
                let mut bits = m;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    bits &= bits - 1;
                    next.push(m & !(1u64 << v));
                }
            }
            next.sort_unstable();
            next.dedup();
            current = next;
        }
    }

    let mut boundaries = Vec::with_capacity(dim_cap + 1);
    for j in 0..=dim_cap {
        let rows = levels[j].len();
        let cols = levels[j + 1].len();
        if (rows as u128) * (cols as u128) > MATRIX_BITS_CAP {
            return Err(Error::ResourceLimit(format!(
                "boundary matrix at dimension {j} would be {rows} x {cols}"
            )));
        }
        let row_index: HashMap<u64, usize> = levels[j]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.bits(), i))
            .collect();
        let mut matrix = Gf2Matrix::zeros(rows, cols);
        for (col, face) in levels[j + 1].iter().enumerate() {
            for v in face.iter() {
                let sub = face.without(v).bits();
                let row = row_index[&sub];
                matrix.set(row, col);
            }
        }
        boundaries.push(matrix);
    }

    Ok(ChainComplex { levels, boundaries })
}

/// Reduced GF(2) Betti numbers `b~_0, .., b~_top` of the stored complex.
pub fn betti_numbers(cc: &ChainComplex) -> Vec<u64> {
    let top = cc.top_dimension();
    let ranks: Vec<usize> = cc.boundaries.iter().map(Gf2Matrix::rank).collect();
    let mut betti = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let faces_j = cc.levels[j + 1].len() as i64;
        let rank_j = ranks[j] as i64;
        let rank_next = if j < top { ranks[j + 1] as i64 } else { 0 };
        let b = faces_j - rank_j - rank_next;
        debug_assert!(b >= 0);
        betti.push(b as u64);
    }
    betti
}

/// Rank of an integer matrix over the rationals, by fraction-free
/// (Bareiss) elimination; divisions are exact.
fn rational_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != zero) else {
            continue;
        };
        m.swap(pivot, rank);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&num % &prev) == zero);
                m[r][c] = num / &prev;
            }
            m[r][col] = zero.clone();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Reduced Betti numbers over the rationals, from signed boundary
/// matrices (vertex-dropping signs alternate by position) and exact
/// integer elimination. Agrees with [`betti_numbers`] exactly when the
/// homology is torsion-free.
pub fn betti_numbers_rational(cc: &ChainComplex) -> Vec<u64> {
    let top = cc.top_dimension();
    let mut ranks = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let level = &cc.levels[j + 1];
        let row_index: HashMap<u64, usize> = cc.levels[j]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.bits(), i))
            .collect();
        let mut m = vec![vec![BigInt::from(0); level.len()]; cc.levels[j].len()];
        for (col, face) in level.iter().enumerate() {
            for (t, v) in face.iter().enumerate() {
                let row = row_index[&face.without(v).bits()];
                m[row][col] = BigInt::from(if t % 2 == 0 { 1 } else { -1 });
            }
        }
        ranks.push(rational_rank(m));
    }
    let mut betti = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let faces_j = cc.levels[j + 1].len() as i64;
        let rank_next = if j < top { ranks[j + 1] as i64 } else { 0 };
        let b = faces_j - ranks[j] as i64 - rank_next;
        debug_assert!(b >= 0);
        betti.push(b as u64);
    }
    betti
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutcomplex::{enumerate_facets, reduced_euler};
    use crate::graph::Graph;

    fn facet(vs: &[usize]) -> Facet {
        Facet::from_complement_slice(vs)
    }

    fn build(facets: &[Facet], n: usize) -> ChainComplex {
        build_chain_complex(facets, n, None, DEFAULT_FACE_CAP).unwrap()
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let fs = vec![facet(&[0]), facet(&[1]), facet(&[2])];
        let cc = build(&fs, 3);
        assert_eq!(cc.top_dimension(), 1);
        assert_eq!(cc.boundary(0).rows(), 1);
        assert_eq!(cc.boundary(0).cols(), 3);
        assert_eq!(cc.boundary(1).rows(), 3);
        assert_eq!(cc.boundary(1).cols(), 3);
        assert_eq!(betti_numbers(&cc), vec![0, 1]);
        assert_eq!(betti_numbers_rational(&cc), vec![0, 1]);
        assert!(cc.boundary_composites_vanish());
    }

    #[test]
    fn full_simplex_is_contractible() {
        let cc = build(&[facet(&[])], 3);
        assert_eq!(cc.top_dimension(), 2);
        assert_eq!(betti_numbers(&cc), vec![0, 0, 0]);
        assert_eq!(betti_numbers_rational(&cc), vec![0, 0, 0]);
    }

    #[test]
    fn squared_nine_cycle_cut_complex_is_a_single_sphere() {
        let g = Graph::cycle_power(9, 2).unwrap();
        let facets = enumerate_facets(&g, 3).unwrap();
        let cc = build(&facets, 9);
        assert_eq!(cc.top_dimension(), 5);
        assert_eq!(*cc.level_sizes().last().unwrap(), 48);
        assert_eq!(betti_numbers(&cc), vec![0, 0, 0, 0, 0, 1]);
        assert!(cc.boundary_composites_vanish());
    }

    #[test]
    fn alternating_betti_sum_equals_reduced_euler() {
        for (n, p) in [(9usize, 2usize), (10, 2)] {
            let g = Graph::cycle_power(n, p).unwrap();
            let facets = enumerate_facets(&g, 3).unwrap();
            let cc = build(&facets, n);
            let betti = betti_numbers(&cc);
            let mut alt = 0i64;
            for (j, &b) in betti.iter().enumerate() {
                alt += if j % 2 == 0 { b as i64 } else { -(b as i64) };
            }
            assert_eq!(alt, reduced_euler(&facets, n).unwrap());
        }
    }

    #[test]
    fn projective_plane_shows_torsion_over_gf2_only() {
        // Minimal 6-vertex triangulation of the real projective plane.
        let triangles: [[usize; 3]; 10] = [
            [0, 1, 4],
            [0, 1, 5],
            [0, 2, 3],
            [0, 2, 5],
            [0, 3, 4],
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [2, 4, 5],
            [3, 4, 5],
        ];
        let facets: Vec<Facet> = triangles
            .iter()
            .map(|t| {
                let vs: VertexSet = t.iter().copied().collect();
                Facet::from_complement(VertexSet::full(6).difference(vs))
            })
            .collect();
        let cc = build(&facets, 6);
        assert_eq!(cc.level_sizes(), vec![1, 6, 15, 10]);
        assert_eq!(betti_numbers(&cc), vec![0, 1, 1]);
        assert_eq!(betti_numbers_rational(&cc), vec![0, 0, 0]);
    }

    #[test]
    fn truncation_keeps_lower_dimensions() {
        let g = Graph::cycle_power(9, 2).unwrap();
        let facets = enumerate_facets(&g, 3).unwrap();
        let cc = build_chain_complex(&facets, 9, Some(2), DEFAULT_FACE_CAP).unwrap();
        assert_eq!(cc.top_dimension(), 2);
        let full = build(&facets, 9);
        assert_eq!(cc.faces(1), full.faces(1));
        assert_eq!(cc.faces(2), full.faces(2));
    }

    #[test]
    fn refuses_void_and_oversize() {
        assert!(matches!(
            build_chain_complex(&[], 5, None, DEFAULT_FACE_CAP),
            Err(Error::VoidComplex(_))
        ));
        let g = Graph::cycle_power(9, 2).unwrap();
        let facets = enumerate_facets(&g, 3).unwrap();
        assert!(matches!(
            build_chain_complex(&facets, 9, None, 10),
            Err(Error::ResourceLimit(_))
        ));
    }
}
