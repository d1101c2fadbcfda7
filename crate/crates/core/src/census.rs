//! Explicit construction and closed-form counting of the spanning facets
//! of `Δ_3(C_n^p)` in the theorem range (`p >= 2`, `n >= 6p - 3`).
//!
//! Every spanning facet has complement `{u, i1, n-1}` where `u` is the
//! order-minimal complement vertex with `p + 1 <= u <= n - p - 1`, and
//! `i1` ranges over the vertices *outside* an excluded window `V^u`.
//! Splitting the range of `u` into three bands gives the sets `Σ_1`,
//! `Σ_2`, `Σ_3` (with `c` the center vertex, all sets built explicitly so
//! the wrap at `0` cannot be mishandled):
//!
//! * `u ∈ {p+1, .., 2p-1}`:
//!   `V^u = {u-2p (mod n), .., n-1} ∪ {0, .., 2c-u-1}`;
//! * `u ∈ {2p, .., c-p}`:
//!   `V^u = {u-2p, .., u-2} ∪ {u, .., 2c-u-1} ∪ {n-1}`;
//! * `u ∈ {c-p+1, .., n-p-1}`:
//!   `V^u = {μ, .., u+p} ∪ {u+t (mod n) : p+1 <= t <= 2p-1} ∪ {ν}` with
//!   `μ = min(2c-u, u-2p)` and `ν = n-1` for `u < n-2p-1`, else
//!   `ν = u+2p (mod n)`.
//!
//! The band sizes admit closed forms whose sum telescopes to
//! `C(n-2p, 2) - (2p^2 + p - 1)`, the wedge count of spheres in the
//! homotopy type.

use std::collections::HashSet;

use crate::cutcomplex::{ComplexParams, Facet};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::ordering::{decompose, OmegaOrder};

/// The three band counts and their total, by closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanningCount {
    pub sigma1: i64,
    pub sigma2: i64,
    pub sigma3: i64,
    pub total: i64,
}

/// Evaluates the closed forms. The band sums are checked against the two
/// equivalent total forms `(n^2 - 4np - n + 2) / 2` and
/// `C(n-2p, 2) - (2p^2 + p - 1)`; all three agree identically.
pub fn spanning_count_formula(params: &ComplexParams) -> Result<SpanningCount, Error> {
    if !params.theorem_applies() {
        return Err(Error::Parameter(format!(
            "spanning-facet count needs k = 3, p >= 2, n >= 6p - 3; got n = {}, p = {}, k = {}",
            params.n(),
            params.p(),
            params.k()
        )));
    }
    let n = params.n() as i64;
    let p = params.p() as i64;
    let c = params.c() as i64;

    let sigma1 = p * p + n * p - 2 * c * p - p - n + 2 * c;
    let sigma2 = 3 * p * p - c * c + c * n + 2 * c * p - 3 * n * p + n - p - c;
    let sigma3 = c * n - c * c - 4 * p * p - n + 2 * p + 1;
    let total = sigma1 + sigma2 + sigma3;

    let half_form = (n * n - 4 * n * p - n + 2) / 2;
    debug_assert_eq!((n * n - 4 * n * p - n + 2) % 2, 0);
    let m = n - 2 * p;
    let binomial_form = m * (m - 1) / 2 - (2 * p * p + p - 1);
    if total != half_form || total != binomial_form {
        return Err(Error::Invariant(format!(
            "spanning count forms disagree: bands {total}, half {half_form}, binomial {binomial_form}"
        )));
    }
    Ok(SpanningCount {
        sigma1,
        sigma2,
        sigma3,
        total,
    })
}

/// The constructed spanning-facet sets and their counts.
#[derive(Clone, Debug)]
pub struct Census {
    pub sigma1: Vec<Facet>,
    pub sigma2: Vec<Facet>,
    pub sigma3: Vec<Facet>,
    /// `(|Σ_1|, |Σ_2|, |Σ_3|, total)` from the constructed sets.
    pub counts: (usize, usize, usize, usize),
    /// The matching closed-form values.
    pub formula: SpanningCount,
}

impl Census {
    /// All census triples as one set.
    pub fn all(&self) -> Vec<Facet> {
        let mut out = Vec::with_capacity(self.counts.3);
        out.extend_from_slice(&self.sigma1);
        out.extend_from_slice(&self.sigma2);
        out.extend_from_slice(&self.sigma3);
        out
    }
}

/// Builds `Σ_1`, `Σ_2`, `Σ_3` directly from the band definitions and
/// validates every emitted triple: it must be a genuine facet, its
/// order-minimal vertex must be `u`, and the third label must be `n-1`.
/// Any mismatch is a structural bug and aborts.
pub fn sigma_sets(params: &ComplexParams) -> Result<Census, Error> {
    let formula = spanning_count_formula(params)?;
    let n = params.n();
    let p = params.p();
    let c = params.c();
    let (ni, pi) = (n as i64, p as i64);

    let graph = Graph::cycle_power(n, p)?;
    let order = OmegaOrder::new(params);

    // Band bounds as inclusive integer ranges; U_2 may be empty.
    let band1 = pi + 1..=2 * pi - 1;
    let band2 = 2 * pi..=c as i64 - pi;
    let band3 = c as i64 - pi + 1..=ni - pi - 1;

    let window_for = |u: i64| -> VertexSet {
        let c2 = 2 * c as i64;
        let mut window = VertexSet::EMPTY;
        let mut put = |x: i64| window.insert(x.rem_euclid(ni) as usize);
        if band1.contains(&u) {
            for x in ni + u - 2 * pi..=ni - 1 {
                put(x);
            }
            for x in 0..=c2 - u - 1 {
                put(x);
            }
        } else if band2.contains(&u) {
            for x in u - 2 * pi..=u - 2 {
                put(x);
            }
            for x in u..=c2 - u - 1 {
                put(x);
            }
            put(ni - 1);
        } else {
            debug_assert!(band3.contains(&u));
            let mu = (c2 - u).min(u - 2 * pi);
            for x in mu..=u + pi {
                put(x);
            }
            for t in pi + 1..=2 * pi - 1 {
                put(u + t);
            }
            let nu = if u < ni - 2 * pi - 1 {
                ni - 1
            } else {
                u + 2 * pi
            };
            put(nu);
        }
        window
    };

    let build_band = |band: std::ops::RangeInclusive<i64>| -> Result<Vec<Facet>, Error> {
        let mut out = Vec::new();
        for u in band {
            let window = window_for(u);
            let uu = u as usize;
            for i1 in VertexSet::full(n).difference(window).iter() {
                debug_assert!(i1 != uu && i1 != n - 1);
                let complement: VertexSet = [uu, i1, n - 1].into_iter().collect();
                let facet = Facet::from_complement(complement);
                if !graph.induced_disconnected(complement)? {
                    return Err(Error::Invariant(format!(
                        "census triple {:?} is not a facet",
                        facet.complement_vec()
                    )));
                }
                let d = decompose(&facet, &order);
                if d.omega != uu || d.i2 != n - 1 || d.i1 >= n - 1 {
                    return Err(Error::Invariant(format!(
                        "census triple {:?} decomposes as ({}, {}, {}), expected head {uu}",
                        facet.complement_vec(),
                        d.omega,
                        d.i1,
                        d.i2
                    )));
                }
                out.push(facet);
            }
        }
        out.sort();
        Ok(out)
    };

    let sigma1 = build_band(band1.clone())?;
    let sigma2 = build_band(band2.clone())?;
    let sigma3 = build_band(band3.clone())?;

    let counts = (
        sigma1.len(),
        sigma2.len(),
        sigma3.len(),
        sigma1.len() + sigma2.len() + sigma3.len(),
    );
    let distinct: HashSet<Facet> = sigma1
        .iter()
        .chain(&sigma2)
        .chain(&sigma3)
        .copied()
        .collect();
    if distinct.len() != counts.3 {
        return Err(Error::Invariant("census bands overlap".into()));
    }
    if counts.3 as i64 != formula.total {
        return Err(Error::Invariant(format!(
            "census total {} disagrees with the closed form {}",
            counts.3, formula.total
        )));
    }
    Ok(Census {
        sigma1,
        sigma2,
        sigma3,
        counts,
        formula,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutcomplex::enumerate_facets;
    use crate::ordering::sort_facets;
    use crate::shelling::{check_shelling, spanning_facets};

    fn params(n: usize, p: usize) -> ComplexParams {
        ComplexParams::new(n, p, 3).unwrap()
    }

    #[test]
    fn formula_pinned_values() {
        assert_eq!(spanning_count_formula(&params(9, 2)).unwrap().total, 1);
        assert_eq!(spanning_count_formula(&params(10, 2)).unwrap().total, 6);
        assert_eq!(spanning_count_formula(&params(11, 2)).unwrap().total, 12);
        assert_eq!(spanning_count_formula(&params(15, 3)).unwrap().total, 16);
    }

    #[test]
    fn formula_refuses_outside_theorem_range() {
        assert!(matches!(
            spanning_count_formula(&params(8, 2)),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            spanning_count_formula(&ComplexParams::new(9, 1, 3).unwrap()),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn formula_band_values_match_set_sizes() {
        for (n, p) in [
            (9usize, 2usize),
            (10, 2),
            (11, 2),
            (12, 2),
            (15, 3),
            (18, 3),
        ] {
            let census = sigma_sets(&params(n, p)).unwrap();
            let f = census.formula;
            assert_eq!(census.counts.0 as i64, f.sigma1, "(n,p)=({n},{p})");
            assert_eq!(census.counts.1 as i64, f.sigma2, "(n,p)=({n},{p})");
            assert_eq!(census.counts.2 as i64, f.sigma3, "(n,p)=({n},{p})");
            assert_eq!(census.counts.3 as i64, f.total, "(n,p)=({n},{p})");
        }
    }

    #[test]
    fn census_9_2_is_the_single_triple() {
        let census = sigma_sets(&params(9, 2)).unwrap();
        assert_eq!(
            census.sigma1,
            vec![Facet::from_complement_slice(&[3, 7, 8])]
        );
        assert!(census.sigma2.is_empty());
        assert!(census.sigma3.is_empty());
        assert_eq!(census.counts, (1, 0, 0, 1));
    }

    #[test]
    fn census_matches_detected_spanning_facets() {
        for (n, p) in [(9usize, 2usize), (10, 2), (11, 2), (15, 3)] {
            let params = params(n, p);
            let order = OmegaOrder::new(&params);
            let g = Graph::cycle_power(n, p).unwrap();
            let sorted = sort_facets(&enumerate_facets(&g, 3).unwrap(), &params, &order).unwrap();
            let report = check_shelling(&sorted, n).unwrap();
            assert!(report.ok);
            let mut detected = spanning_facets(&report).unwrap();
            detected.sort();
            let mut constructed = sigma_sets(&params).unwrap().all();
            constructed.sort();
            assert_eq!(detected, constructed, "(n,p)=({n},{p})");
        }
    }

    #[test]
    fn formula_identities_hold_across_a_grid() {
        for p in 2..=5usize {
            for n in 6 * p - 3..=40 {
                let sc = spanning_count_formula(&params(n, p)).unwrap();
                assert_eq!(sc.sigma1 + sc.sigma2 + sc.sigma3, sc.total);
                assert!(sc.sigma1 >= 0 && sc.sigma2 >= 0 && sc.sigma3 >= 0);
            }
        }
    }
}
