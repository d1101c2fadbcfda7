//! Cross-module flows beyond the acceptance grid: higher cycle powers,
//! the text-format round trip into the checker, and agreement of the two
//! homology coefficient paths.

use std::collections::BTreeSet;

use cutshell::census::sigma_sets;
use cutshell::cutcomplex::{
    enumerate_facets, parse_facet_list, reduced_euler, write_facet_list, ComplexParams, Facet,
};
use cutshell::graph::Graph;
use cutshell::homology::{
    betti_numbers, betti_numbers_rational, build_chain_complex, DEFAULT_FACE_CAP,
};
use cutshell::ordering::{classify, sort_facets, OmegaOrder};
use cutshell::shelling::{check_shelling, spanning_facets};
use cutshell::Error;

fn full_pipeline(n: usize, p: usize) -> (ComplexParams, Vec<Facet>, Vec<Facet>, Vec<Facet>) {
    let params = ComplexParams::new(n, p, 3).unwrap();
    assert!(params.theorem_applies());
    let order = OmegaOrder::new(&params);
    let g = Graph::cycle_power(n, p).unwrap();
    let facets = enumerate_facets(&g, 3).unwrap();
    let sorted = sort_facets(&facets, &params, &order).unwrap();
    let report = check_shelling(&sorted, n).unwrap();
    assert!(report.ok, "(n, p) = ({n}, {p}) failed the shelling check");
    let detected = spanning_facets(&report).unwrap();
    (params, facets, sorted, detected)
}

#[test]
fn fourth_power_smallest_theorem_instance() {
    let (params, facets, sorted, detected) = full_pipeline(21, 4);
    let census = sigma_sets(&params).unwrap();
    assert_eq!(detected.len() as i64, census.formula.total);
    let detected_set: BTreeSet<Facet> = detected.into_iter().collect();
    let census_set: BTreeSet<Facet> = census.all().into_iter().collect();
    assert_eq!(detected_set, census_set);

    // All four class blocks appear, in block order along the sorted list.
    let order = OmegaOrder::new(&params);
    let mut histogram = vec![0usize; 4];
    let mut last_alpha = 0;
    for f in &sorted {
        let alpha = classify(f, &params, &order).unwrap().alpha;
        assert!(alpha >= last_alpha, "class blocks out of order");
        last_alpha = alpha;
        histogram[alpha] += 1;
    }
    assert!(histogram.iter().all(|&h| h > 0), "histogram {histogram:?}");

    let chi = reduced_euler(&facets, 21).unwrap();
    // dimension 17 is odd, so the wedge contributes negatively
    assert_eq!(chi, -census.formula.total);
}

#[test]
fn fifth_power_smallest_theorem_instance() {
    let (params, _, _, detected) = full_pipeline(27, 5);
    let census = sigma_sets(&params).unwrap();
    assert_eq!(detected.len() as i64, census.formula.total);
    let detected_set: BTreeSet<Facet> = detected.into_iter().collect();
    let census_set: BTreeSet<Facet> = census.all().into_iter().collect();
    assert_eq!(detected_set, census_set);
}

#[test]
fn face_counting_refuses_past_the_lattice_limit() {
    let g = Graph::cycle_power(27, 5).unwrap();
    let facets = enumerate_facets(&g, 3).unwrap();
    assert!(matches!(
        reduced_euler(&facets, 27),
        Err(Error::ResourceLimit(_))
    ));
}

#[test]
fn exported_list_round_trips_into_the_checker() {
    let (_, facets, sorted, _) = full_pipeline(10, 2);
    let text = write_facet_list(10, 3, &sorted).unwrap();
    let parsed = parse_facet_list(&text).unwrap();
    assert_eq!(parsed.facets, sorted);
    let report = check_shelling(&parsed.facets, parsed.n).unwrap();
    assert!(report.ok);

    // The checker accepts arbitrary orders; verdicts on unsorted input
    // carry no claim either way.
    check_shelling(&facets, 10).unwrap();
}

#[test]
fn gf2_and_rational_homology_agree_on_a_wedge() {
    let g = Graph::cycle_power(9, 2).unwrap();
    let facets = enumerate_facets(&g, 3).unwrap();
    let cc = build_chain_complex(&facets, 9, None, DEFAULT_FACE_CAP).unwrap();
    let gf2 = betti_numbers(&cc);
    let rational = betti_numbers_rational(&cc);
    assert_eq!(gf2, rational);
    assert_eq!(gf2, vec![0, 0, 0, 0, 0, 1]);
}
