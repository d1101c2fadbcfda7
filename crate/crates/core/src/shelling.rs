//! Definition-based shelling verification.
//!
//! An ordered facet list `F_1, .., F_m` of a pure complex is a shelling
//! order when for all `r < s` there is a `t < s` with
//! `F_t ∩ F_s = F_s \ {u}` for some `u ∈ F_s \ F_r`. The checker works
//! entirely on complements: `F_s \ F_r` equals `F_r^c \ F_s^c` (at most k
//! vertices), and `F_t ∩ F_s = F_s \ {u}` exactly when
//! `F_t^c = (F_s^c \ {v}) ∪ {u}` for some `v` in the complement, so every
//! probe is a hash lookup of a k-element mask.
//!
//! A facet `F_s` with `s > 1` is *spanning* when every `u ∈ F_s` has such
//! a ridge partner earlier in the order; the number of spanning facets is
//! the wedge count in the homotopy type of a shellable complex.

use std::collections::{HashMap, HashSet};

use crate::cutcomplex::Facet;
use crate::error::Error;
use crate::graph::{VertexSet, MAX_VERTICES};

/// The first order violation, as 0-based positions into the checked list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub earlier: usize,
    pub later: usize,
    pub detail: String,
}

/// Outcome of checking one ordered facet list.
#[derive(Clone, Debug)]
pub struct ShellingReport {
    /// True iff the list is a shelling order.
    pub ok: bool,
    /// Lexicographically first violating pair, if any.
    pub violation: Option<Violation>,
    /// `drop_sets[s]` holds the vertices `u ∈ F_s` for which some earlier
    /// facet meets `F_s` in exactly `F_s \ {u}`.
    pub drop_sets: Vec<VertexSet>,
    /// 0-based positions `s > 0` whose drop set is all of `F_s`.
    pub spanning: Vec<usize>,
    order: Vec<Facet>,
}

impl ShellingReport {
    /// The checked order.
    pub fn order(&self) -> &[Facet] {
        &self.order
    }
}

fn validate_list(ordered: &[Facet], n: usize) -> Result<usize, Error> {
    if ordered.is_empty() {
        return Err(Error::Parameter("empty facet list".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::Parameter(format!(
            "vertex count {n} exceeds the supported maximum {MAX_VERTICES}"
        )));
    }
    let k = ordered[0].complement().len();
    let mut seen = HashSet::with_capacity(ordered.len());
    for f in ordered {
        if f.complement().len() != k {
            return Err(Error::MixedDimensions(k, f.complement().len()));
        }
        if !f.complement().is_subset_of(VertexSet::full(n)) {
            return Err(Error::Parameter(format!(
                "facet complement {:?} has labels outside 0..{n}",
                f.complement()
            )));
        }
        if !seen.insert(f.complement()) {
            return Err(Error::DuplicateFacet(f.complement_vec()));
        }
    }
    Ok(k)
}

/// Checks the shelling condition for the list exactly as ordered.
pub fn check_shelling(ordered: &[Facet], n: usize) -> Result<ShellingReport, Error> {
    validate_list(ordered, n)?;
    let m = ordered.len();
    let full = VertexSet::full(n);
    let index: HashMap<VertexSet, usize> = ordered
        .iter()
        .enumerate()
        .map(|(i, f)| (f.complement(), i))
        .collect();

    let mut drop_sets = vec![VertexSet::EMPTY; m];
    for (s, f) in ordered.iter().enumerate() {
        let comp = f.complement();
        let mut drops = VertexSet::EMPTY;
        for u in full.difference(comp).iter() {
            for v in comp.iter() {
                let probe = comp.without(v).with(u);
                if index.get(&probe).is_some_and(|&t| t < s) {
                    drops.insert(u);
                    break;
                }
            }
        }
        drop_sets[s] = drops;
    }

    let mut violation = None;
    'outer: for r in 0..m {
        for s in r + 1..m {
            let gained = ordered[r].complement().difference(ordered[s].complement());
            if gained.intersection(drop_sets[s]).is_empty() {
                violation = Some(Violation {
                    earlier: r,
                    later: s,
                    detail: format!(
                        "no vertex of F_s \\ F_r = {:?} has a ridge partner before position {s}",
                        gained
                    ),
                });
                break 'outer;
            }
        }
    }

    let spanning = (1..m)
        .filter(|&s| drop_sets[s] == ordered[s].vertex_set(n))
        .collect();

    Ok(ShellingReport {
        ok: violation.is_none(),
        violation,
        drop_sets,
        spanning,
        order: ordered.to_vec(),
    })
}

/// The facets at spanning positions, in order. Refuses a report whose
/// order failed the shelling check, where the notion is meaningless.
pub fn spanning_facets(report: &ShellingReport) -> Result<Vec<Facet>, Error> {
    if !report.ok {
        let detail = report
            .violation
            .as_ref()
            .map(|v| format!("violation at ({}, {})", v.earlier, v.later))
            .unwrap_or_default();
        return Err(Error::NotAShelling(detail));
    }
    Ok(report.spanning.iter().map(|&s| report.order[s]).collect())
}

/// Result of the exploratory order search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A shelling order (the whole input, reordered).
    Found(Vec<Facet>),
    /// The search space was exhausted: no shelling order exists.
    NotShellable,
    /// The node budget ran out first; the question is unresolved.
    BudgetExhausted,
}

/// Backtracking search for *some* shelling order of the given facets.
/// Candidate extensions are tried in descending ridge-overlap with the
/// chosen prefix. Each attempted placement costs one node of budget.
pub fn search_shelling(facets: &[Facet], node_budget: u64) -> Result<SearchOutcome, Error> {
    if facets.is_empty() {
        return Err(Error::Parameter("empty facet list".into()));
    }
    if node_budget == 0 {
        return Err(Error::Parameter("node budget must be positive".into()));
    }
    let k = facets[0].complement().len();
    let mut seen = HashSet::new();
    for f in facets {
        if f.complement().len() != k {
            return Err(Error::MixedDimensions(k, f.complement().len()));
        }
        if !seen.insert(f.complement()) {
            return Err(Error::DuplicateFacet(f.complement_vec()));
        }
    }

    let m = facets.len();
    // pair_drop[j][i]: the unique vertex of comp_i \ comp_j when the two
    // facets share a ridge, i.e. when that difference is a singleton.
    let mut pair_drop = vec![vec![None; m]; m];
    for j in 0..m {
        for i in 0..m {
            if i == j {
                continue;
            }
            let diff = facets[i].complement().difference(facets[j].complement());
            if diff.len() == 1 {
                pair_drop[j][i] = diff.min();
            }
        }
    }

    struct Search<'a> {
        facets: &'a [Facet],
        pair_drop: &'a [Vec<Option<usize>>],
        chosen: Vec<usize>,
        used: Vec<bool>,
        budget: u64,
    }

    enum Step {
        Done,
        OutOfBudget,
        Dead,
    }

    impl Search<'_> {
        fn attaches(&self, j: usize) -> bool {
            let mut drops = VertexSet::EMPTY;
            for &i in &self.chosen {
                if let Some(u) = self.pair_drop[j][i] {
                    drops.insert(u);
                }
            }
            self.chosen.iter().all(|&r| {
                let gained = self.facets[r]
                    .complement()
                    .difference(self.facets[j].complement());
                !gained.intersection(drops).is_empty()
            })
        }

        fn extend(&mut self) -> Step {
            if self.chosen.len() == self.facets.len() {
                return Step::Done;
            }
            let mut candidates: Vec<(usize, usize)> = (0..self.facets.len())
                .filter(|&j| !self.used[j])
                .map(|j| {
                    let overlap = self
                        .chosen
                        .iter()
                        .filter(|&&i| self.pair_drop[j][i].is_some())
                        .count();
                    (j, overlap)
                })
                .collect();
            candidates.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
            for (j, _) in candidates {
                if self.budget == 0 {
                    return Step::OutOfBudget;
                }
                self.budget -= 1;
                if !self.chosen.is_empty() && !self.attaches(j) {
                    continue;
                }
                self.chosen.push(j);
                self.used[j] = true;
                match self.extend() {
                    Step::Dead => {
                        self.chosen.pop();
                        self.used[j] = false;
                    }
                    done_or_out => return done_or_out,
                }
            }
            Step::Dead
        }
    }

    let mut search = Search {
        facets,
        pair_drop: &pair_drop,
        chosen: Vec::with_capacity(m),
        used: vec![false; m],
        budget: node_budget,
    };
    Ok(match search.extend() {
        Step::Done => SearchOutcome::Found(search.chosen.iter().map(|&j| facets[j]).collect()),
        Step::OutOfBudget => SearchOutcome::BudgetExhausted,
        Step::Dead => SearchOutcome::NotShellable,
    })
}
