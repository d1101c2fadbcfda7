//! Command-line front end: reproducible verification runs over cut
//! complexes of cycle powers, with machine-readable reports.
//!
//! Exit codes: 0 all checks passed; 1 a cross-check failed; 2 parameter
//! or input error (including void complexes); 3 resource-cap refusal.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use cutshell::census::sigma_sets;
use cutshell::cutcomplex::{
    enumerate_facets, face_counts, parse_facet_list, reduced_euler, write_facet_list,
    ComplexParams, Facet,
};
use cutshell::graph::Graph;
use cutshell::homology::{betti_numbers, build_chain_complex, DEFAULT_FACE_CAP};
use cutshell::ordering::{classify, decompose, sort_facets, OmegaOrder};
use cutshell::shelling::{check_shelling, search_shelling, spanning_facets, SearchOutcome};
use cutshell::Error;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "cutshell",
    about = "Cut complexes of cycle powers: enumeration, shelling verification, census, homology",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate facet complements, or validate an imported facet list
    Facets(FacetsArgs),
    /// Print the center-out vertex order
    Order(OrderArgs),
    /// Decompose and classify every facet
    Classify(InstanceArgs),
    /// Check the built-in facet order (or an imported order) for the
    /// shelling condition
    ShellCheck(ShellCheckArgs),
    /// Construct the spanning-facet census and evaluate the closed forms
    Census(InstanceArgs),
    /// Reduced GF(2) Betti numbers of the complex
    Homology(HomologyArgs),
    /// Face counts and reduced Euler characteristic
    Euler(InstanceArgs),
    /// Full pipeline: enumerate, sort, shell-check, census, counts,
    /// Euler, and (optionally) homology, with cross-checks
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_inclusive_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected <a>..<b>, got {s:?}"))?;
    let lo: usize = a.trim().parse().map_err(|_| format!("bad bound {a:?}"))?;
    let hi: usize = b.trim().parse().map_err(|_| format!("bad bound {b:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

#[derive(Args, Clone)]
struct InstanceArgs {
    /// Vertex count
    #[arg(long, conflicts_with = "n_range")]
    n: Option<usize>,
    /// Cycle power
    #[arg(long, default_value_t = 2, conflicts_with = "p_range")]
    p: usize,
    /// Cut parameter
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Inclusive sweep over n, e.g. 9..16 (one report line per instance)
    #[arg(long = "n-range", value_parser = parse_inclusive_range)]
    n_range: Option<(usize, usize)>,
    /// Inclusive sweep over p, e.g. 2..3
    #[arg(long = "p-range", value_parser = parse_inclusive_range)]
    p_range: Option<(usize, usize)>,
    /// Output format (JSON is canonical; csv and text are projections)
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct FacetsArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Write the facet list to this file in the text format
    #[arg(long)]
    export: Option<std::path::PathBuf>,
    /// Read a facet list and validate it against the enumerated complex
    #[arg(long, conflicts_with = "export")]
    import: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct OrderArgs {
    /// Vertex count
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ShellCheckArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Check the facet order given in this file instead of the built-in
    /// sorted order
    #[arg(long)]
    import: Option<std::path::PathBuf>,
    /// If the order fails, search for some shelling order (exploratory)
    #[arg(long)]
    search: bool,
    /// Node budget for the exploratory search
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Refuse to materialize more faces than this
    #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
    max_faces: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Also run the homology oracle (slower)
    #[arg(long)]
    homology: bool,
    /// Face cap for the homology oracle
    #[arg(long, default_value_t = DEFAULT_FACE_CAP)]
    max_faces: usize,
}

// ---------------------------------------------------------------------------
// Report shape
// ---------------------------------------------------------------------------

#[derive(Serialize, Clone)]
struct ParamsOut {
    n: usize,
    p: usize,
    k: usize,
    c: usize,
    theorem_applies: bool,
}

#[derive(Serialize, Clone)]
struct CheckOut {
    name: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Serialize, Clone)]
struct ViolationOut {
    earlier: usize,
    later: usize,
    detail: String,
}

#[derive(Serialize, Clone)]
struct ClassifiedFacetOut {
    complement: Vec<usize>,
    omega: usize,
    i1: usize,
    i2: usize,
    omega_rank: usize,
    alpha: usize,
    conditions: Vec<String>,
}

#[derive(Serialize, Clone)]
struct CensusOut {
    sigma1: Vec<Vec<usize>>,
    sigma2: Vec<Vec<usize>>,
    sigma3: Vec<Vec<usize>>,
    counts: [i64; 4],
    formula: [i64; 4],
}

#[derive(Serialize, Clone)]
#[serde(rename_all = "snake_case")]
enum SearchOut {
    Found { order: Vec<Vec<usize>> },
    NotShellable,
    BudgetExhausted,
}

/// One report object per run (or per instance in sweep mode). Sections
/// irrelevant to the command are omitted from the JSON.
#[derive(Serialize, Clone)]
struct Report {
    schema_version: u32,
    command: &'static str,
    params: ParamsOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    facet_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    facets: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classified: Option<Vec<ClassifiedFacetOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    class_histogram: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shelling_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<ViolationOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spanning: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    search: Option<SearchOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    census: Option<CensusOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula_total: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    face_vector: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_euler: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti: Option<Vec<u64>>,
    checks: Vec<CheckOut>,
    ok: bool,
}

impl Report {
    fn new(command: &'static str, params: &ComplexParams) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            params: ParamsOut {
                n: params.n(),
                p: params.p(),
                k: params.k(),
                c: params.c(),
                theorem_applies: params.theorem_applies(),
            },
            facet_count: None,
            facets: None,
            omega: None,
            classified: None,
            class_histogram: None,
            shelling_ok: None,
            violation: None,
            spanning: None,
            search: None,
            census: None,
            formula_total: None,
            face_vector: None,
            reduced_euler: None,
            betti: None,
            checks: Vec::new(),
            ok: true,
        }
    }

    fn check(&mut self, name: &'static str, pass: bool, detail: String) {
        self.checks.push(CheckOut { name, pass, detail });
        self.ok &= pass;
    }
}

fn complements(facets: &[Facet]) -> Vec<Vec<usize>> {
    facets.iter().map(Facet::complement_vec).collect()
}

// ---------------------------------------------------------------------------
// Command implementations
// ---------------------------------------------------------------------------

fn enumerate_instance(params: &ComplexParams) -> Result<Vec<Facet>, Error> {
    let g = Graph::cycle_power(params.n(), params.p())?;
    enumerate_facets(&g, params.k())
}

fn nonvoid(params: &ComplexParams, facets: Vec<Facet>) -> Result<Vec<Facet>, Error> {
    if facets.is_empty() {
        return Err(Error::VoidComplex(format!(
            "no facets for n = {}, p = {}, k = {}",
            params.n(),
            params.p(),
            params.k()
        )));
    }
    Ok(facets)
}

fn run_facets(params: &ComplexParams, args: &FacetsArgs) -> Result<Report, Error> {
    let facets = enumerate_instance(params)?;
    let mut report = Report::new("facets", params);
    report.facet_count = Some(facets.len());
    report.facets = Some(complements(&facets));

    if let Some(path) = &args.export {
        let text = write_facet_list(params.n(), params.k(), &facets)?;
        std::fs::write(path, text)
            .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = &args.import {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", path.display())))?;
        let list = parse_facet_list(&text)?;
        report.check(
            "import_header_matches",
            list.n == params.n() && list.k == params.k(),
            format!("file has n={} k={}", list.n, list.k),
        );
        let ours: BTreeSet<Facet> = facets.iter().copied().collect();
        let theirs: BTreeSet<Facet> = list.facets.iter().copied().collect();
        let missing = ours.difference(&theirs).count();
        let extra = theirs.difference(&ours).count();
        report.check(
            "import_set_equals_enumeration",
            missing == 0 && extra == 0,
            format!("{missing} facets missing, {extra} not facets of the complex"),
        );
    }
    Ok(report)
}

fn run_order(n: usize) -> Result<Report, Error> {
    let params = ComplexParams::new(n, 1, 3)?;
    let order = OmegaOrder::new(&params);
    let mut report = Report::new("order", &params);
    report.omega = Some(order.sequence().to_vec());
    Ok(report)
}

fn classify_all(
    params: &ComplexParams,
    order: &OmegaOrder,
    facets: &[Facet],
) -> Result<(Vec<ClassifiedFacetOut>, Vec<usize>), Error> {
    let mut rows = Vec::with_capacity(facets.len());
    let mut histogram = vec![0usize; params.p()];
    for f in facets {
        let class = classify(f, params, order)?;
        let d = decompose(f, order);
        histogram[class.alpha] += 1;
        rows.push(ClassifiedFacetOut {
            complement: f.complement_vec(),
            omega: d.omega,
            i1: d.i1,
            i2: d.i2,
            omega_rank: d.omega_rank,
            alpha: class.alpha,
            conditions: class
                .conditions
                .iter()
                .map(|c| c.label().to_string())
                .collect(),
        });
    }
    Ok((rows, histogram))
}

fn run_classify(params: &ComplexParams) -> Result<Report, Error> {
    let facets = nonvoid(params, enumerate_instance(params)?)?;
    let order = OmegaOrder::new(params);
    let sorted = sort_facets(&facets, params, &order)?;
    let (rows, histogram) = classify_all(params, &order, &sorted)?;
    let mut report = Report::new("classify", params);
    report.facet_count = Some(sorted.len());
    report.classified = Some(rows);
    report.class_histogram = Some(histogram);
    Ok(report)
}

fn run_shell_check(params: &ComplexParams, args: &ShellCheckArgs) -> Result<Report, Error> {
    let (ordered, n, report_params) = match &args.import {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", path.display())))?;
            let list = parse_facet_list(&text)?;
            let p = ComplexParams::new(list.n, params.p(), list.k)?;
            (list.facets, list.n, p)
        }
        None => {
            let facets = nonvoid(params, enumerate_instance(params)?)?;
            let order = OmegaOrder::new(params);
            (sort_facets(&facets, params, &order)?, params.n(), *params)
        }
    };
    if ordered.is_empty() {
        return Err(Error::VoidComplex("imported facet list is empty".into()));
    }

    let shelling = check_shelling(&ordered, n)?;
    let mut report = Report::new("shell-check", &report_params);
    report.facet_count = Some(ordered.len());
    report.shelling_ok = Some(shelling.ok);
    report.violation = shelling.violation.as_ref().map(|v| ViolationOut {
        earlier: v.earlier,
        later: v.later,
        detail: v.detail.clone(),
    });
    if shelling.ok {
        report.spanning = Some(complements(&spanning_facets(&shelling)?));
    }
    report.check(
        "shelling",
        shelling.ok,
        match &shelling.violation {
            None => format!("{} spanning facets", shelling.spanning.len()),
            Some(v) => format!("violation at positions ({}, {})", v.earlier, v.later),
        },
    );

    if args.search && !shelling.ok {
        report.search = Some(match search_shelling(&ordered, args.budget)? {
            SearchOutcome::Found(order) => SearchOut::Found {
                order: complements(&order),
            },
            SearchOutcome::NotShellable => SearchOut::NotShellable,
            SearchOutcome::BudgetExhausted => SearchOut::BudgetExhausted,
        });
    }
    Ok(report)
}

fn census_section(census: &cutshell::census::Census) -> CensusOut {
    CensusOut {
        sigma1: complements(&census.sigma1),
        sigma2: complements(&census.sigma2),
        sigma3: complements(&census.sigma3),
        counts: [
            census.counts.0 as i64,
            census.counts.1 as i64,
            census.counts.2 as i64,
            census.counts.3 as i64,
        ],
        formula: [
            census.formula.sigma1,
            census.formula.sigma2,
            census.formula.sigma3,
            census.formula.total,
        ],
    }
}

fn run_census(params: &ComplexParams) -> Result<Report, Error> {
    let census = sigma_sets(params)?;
    let mut report = Report::new("census", params);
    report.census = Some(census_section(&census));
    report.formula_total = Some(census.formula.total);
    Ok(report)
}

fn run_homology(params: &ComplexParams, max_faces: usize) -> Result<Report, Error> {
    let facets = nonvoid(params, enumerate_instance(params)?)?;
    let cc = build_chain_complex(&facets, params.n(), None, max_faces)?;
    let mut report = Report::new("homology", params);
    report.facet_count = Some(facets.len());
    report.face_vector = Some(cc.level_sizes());
    report.betti = Some(betti_numbers(&cc));
    Ok(report)
}

fn run_euler(params: &ComplexParams) -> Result<Report, Error> {
    let facets = nonvoid(params, enumerate_instance(params)?)?;
    let mut report = Report::new("euler", params);
    report.facet_count = Some(facets.len());
    report.face_vector = Some(face_counts(&facets, params.n())?);
    report.reduced_euler = Some(reduced_euler(&facets, params.n())?);
    Ok(report)
}

fn run_verify(params: &ComplexParams, args: &VerifyArgs) -> Result<Report, Error> {
    let n = params.n();
    let p = params.p();
    if !params.theorem_applies() {
        if params.k() == 3 && n <= 2 * p + 2 {
            return Err(Error::VoidComplex(format!(
                "n = {n} <= 2p + 2 = {}, the complex is void",
                2 * p + 2
            )));
        }
        return Err(Error::Parameter(format!(
            "verify needs k = 3, p >= 2, n >= 6p - 3 = {}; got n = {n}, p = {p}, k = {}; \
             use shell-check/classify for exploratory runs",
            6 * p - 3,
            params.k()
        )));
    }

    let facets = nonvoid(params, enumerate_instance(params)?)?;
    let order = OmegaOrder::new(params);
    let sorted = sort_facets(&facets, params, &order)?;
    let (_, histogram) = classify_all(params, &order, &sorted)?;

    let mut report = Report::new("verify", params);
    report.facet_count = Some(facets.len());
    report.class_histogram = Some(histogram);

    let shelling = check_shelling(&sorted, n)?;
    report.shelling_ok = Some(shelling.ok);
    report.violation = shelling.violation.as_ref().map(|v| ViolationOut {
        earlier: v.earlier,
        later: v.later,
        detail: v.detail.clone(),
    });
    report.check(
        "shelling",
        shelling.ok,
        match &shelling.violation {
            None => "sorted order satisfies the shelling condition".into(),
            Some(v) => format!("violation at positions ({}, {})", v.earlier, v.later),
        },
    );
    if !shelling.ok {
        return Ok(report);
    }

    let detected = spanning_facets(&shelling)?;
    report.spanning = Some(complements(&detected));

    let census = sigma_sets(params)?;
    let formula = census.formula;
    report.formula_total = Some(formula.total);
    report.census = Some(census_section(&census));

    report.check(
        "spanning_count_equals_formula",
        detected.len() as i64 == formula.total,
        format!("detected {}, formula {}", detected.len(), formula.total),
    );
    report.check(
        "census_count_equals_formula",
        census.counts.3 as i64 == formula.total,
        format!("census {}, formula {}", census.counts.3, formula.total),
    );
    let detected_set: BTreeSet<Facet> = detected.iter().copied().collect();
    let census_set: BTreeSet<Facet> = census.all().into_iter().collect();
    report.check(
        "census_set_equals_spanning",
        detected_set == census_set,
        format!(
            "{} detected vs {} constructed",
            detected_set.len(),
            census_set.len()
        ),
    );

    // Extra cross-check on top of the core pipeline; skipped where the
    // subset-lattice face count refuses (the report simply omits it).
    match reduced_euler(&facets, n) {
        Ok(chi) => {
            report.reduced_euler = Some(chi);
            let sign = if (n - 4).is_multiple_of(2) { 1 } else { -1 };
            report.check(
                "euler_matches_sphere_count",
                chi == sign * formula.total,
                format!("reduced Euler {chi}, expected {}", sign * formula.total),
            );
        }
        Err(Error::ResourceLimit(_)) => {}
        Err(other) => return Err(other),
    }

    if args.homology {
        let cc = build_chain_complex(&facets, n, None, args.max_faces)?;
        let betti = betti_numbers(&cc);
        let top_ok = betti[n - 4] as i64 == formula.total;
        let lower_ok = betti[..n - 4].iter().all(|&b| b == 0);
        report.check(
            "betti_match_sphere_count",
            top_ok && lower_ok,
            format!(
                "betti {betti:?}, expected one {} at dimension {}",
                formula.total,
                n - 4
            ),
        );
        report.betti = Some(betti);
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let p = &report.params;
    out.push_str(&format!(
        "{} n={} p={} k={} c={} theorem_applies={}\n",
        report.command, p.n, p.p, p.k, p.c, p.theorem_applies
    ));
    if report.command == "facets" {
        // The facet-list interchange format, verbatim.
        out.push_str(&format!("n={} k={}\n", p.n, p.k));
        for c in report.facets.iter().flatten() {
            out.push_str(&join(c, " "));
            out.push('\n');
        }
    }
    if let Some(omega) = &report.omega {
        out.push_str(&format!("omega: {}\n", join(omega, " ")));
    }
    if report.command != "facets" {
        if let Some(count) = report.facet_count {
            out.push_str(&format!("facets: {count}\n"));
        }
    }
    if let Some(rows) = &report.classified {
        for r in rows {
            out.push_str(&format!(
                "{} -> omega={} i1={} i2={} rank={} alpha={}{}\n",
                join(&r.complement, " "),
                r.omega,
                r.i1,
                r.i2,
                r.omega_rank,
                r.alpha,
                if r.conditions.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", r.conditions.join(" "))
                }
            ));
        }
    }
    if let Some(h) = &report.class_histogram {
        out.push_str(&format!("class sizes: {}\n", join(h, " ")));
    }
    if let Some(ok) = report.shelling_ok {
        out.push_str(&format!("shelling: {}\n", if ok { "ok" } else { "FAILED" }));
    }
    if let Some(v) = &report.violation {
        out.push_str(&format!(
            "violation at ({}, {}): {}\n",
            v.earlier, v.later, v.detail
        ));
    }
    if let Some(spanning) = &report.spanning {
        out.push_str(&format!("spanning facets ({}):\n", spanning.len()));
        for c in spanning {
            out.push_str(&format!("  {}\n", join(c, " ")));
        }
    }
    match &report.search {
        None => {}
        Some(SearchOut::Found { order }) => out.push_str(&format!(
            "search: found an order of {} facets\n",
            order.len()
        )),
        Some(SearchOut::NotShellable) => out.push_str("search: not shellable (space exhausted)\n"),
        Some(SearchOut::BudgetExhausted) => {
            out.push_str("search: budget exhausted, inconclusive\n")
        }
    }
    if let Some(c) = &report.census {
        out.push_str(&format!(
            "census counts: {} + {} + {} = {} (formula {})\n",
            c.counts[0], c.counts[1], c.counts[2], c.counts[3], c.formula[3]
        ));
        for (label, set) in [
            ("sigma1", &c.sigma1),
            ("sigma2", &c.sigma2),
            ("sigma3", &c.sigma3),
        ] {
            for row in set.iter() {
                out.push_str(&format!("  {label}: {}\n", join(row, " ")));
            }
        }
    }
    if let Some(fv) = &report.face_vector {
        out.push_str(&format!("face vector (from dim -1): {}\n", join(fv, " ")));
    }
    if let Some(chi) = report.reduced_euler {
        out.push_str(&format!("reduced euler: {chi}\n"));
    }
    if let Some(betti) = &report.betti {
        out.push_str(&format!("betti (from dim 0): {}\n", join(betti, " ")));
    }
    for check in &report.checks {
        out.push_str(&format!(
            "check {}: {} ({})\n",
            check.name,
            if check.pass { "pass" } else { "FAIL" },
            check.detail
        ));
    }
    out.push_str(&format!(
        "result: {}\n",
        if report.ok { "ok" } else { "FAILED" }
    ));
    out
}

const SUMMARY_CSV_HEADER: &str =
    "command,n,p,k,theorem_applies,facets,spanning,census_total,formula_total,euler,betti_top,ok";

fn summary_csv_row(report: &Report) -> String {
    let p = &report.params;
    let opt = |x: Option<String>| x.unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        report.command,
        p.n,
        p.p,
        p.k,
        p.theorem_applies,
        opt(report.facet_count.map(|v| v.to_string())),
        opt(report.spanning.as_ref().map(|s| s.len().to_string())),
        opt(report.census.as_ref().map(|c| c.counts[3].to_string())),
        opt(report.formula_total.map(|v| v.to_string())),
        opt(report.reduced_euler.map(|v| v.to_string())),
        opt(report
            .betti
            .as_ref()
            .and_then(|b| b.last())
            .map(|v| v.to_string())),
        report.ok
    )
}

fn render_csv(report: &Report) -> String {
    match report.command {
        "facets" => {
            let mut out = String::from("complement\n");
            for c in report.facets.iter().flatten() {
                out.push_str(&join(c, " "));
                out.push('\n');
            }
            out
        }
        "order" => {
            let mut out = String::from("position,vertex\n");
            for (i, v) in report.omega.iter().flatten().enumerate() {
                out.push_str(&format!("{},{v}\n", i + 1));
            }
            out
        }
        "classify" => {
            let mut out = String::from("complement,omega,i1,i2,omega_rank,alpha,conditions\n");
            for r in report.classified.iter().flatten() {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    join(&r.complement, " "),
                    r.omega,
                    r.i1,
                    r.i2,
                    r.omega_rank,
                    r.alpha,
                    r.conditions.join("+")
                ));
            }
            out
        }
        "homology" => {
            let mut out = String::from("dimension,betti\n");
            for (j, b) in report.betti.iter().flatten().enumerate() {
                out.push_str(&format!("{j},{b}\n"));
            }
            out
        }
        _ => format!("{SUMMARY_CSV_HEADER}\n{}\n", summary_csv_row(report)),
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parameter(_) | Error::VoidComplex(_) | Error::Format(_) => 2,
        Error::ResourceLimit(_) => 3,
        _ => 1,
    }
}

fn print_single(report: &Report, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        Format::Csv => print!("{}", render_csv(report)),
        Format::Text => print!("{}", render_text(report)),
    }
}

fn print_sweep_line(n: usize, p: usize, outcome: &Result<Report, Error>, format: Format) {
    match outcome {
        Ok(report) => match format {
            Format::Json => println!(
                "{}",
                serde_json::to_string(report).expect("report serializes")
            ),
            Format::Csv => println!("{}", summary_csv_row(report)),
            Format::Text => print!("{}", render_text(report)),
        },
        Err(err) => match format {
            Format::Json => println!(
                "{}",
                serde_json::json!({
                    "schema_version": SCHEMA_VERSION,
                    "params": {"n": n, "p": p},
                    "error": err.to_string(),
                    "ok": false,
                })
            ),
            Format::Csv | Format::Text => println!("error (n={n} p={p}): {err}"),
        },
    }
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

fn instance_grid(args: &InstanceArgs) -> Result<Vec<(usize, usize)>, Error> {
    let ns: Vec<usize> = match (args.n, args.n_range) {
        (Some(n), _) => vec![n],
        (None, Some((lo, hi))) => (lo..=hi).collect(),
        (None, None) => {
            return Err(Error::Parameter(
                "one of --n or --n-range is required".into(),
            ))
        }
    };
    let ps: Vec<usize> = match args.p_range {
        Some((lo, hi)) => (lo..=hi).collect(),
        None => vec![args.p],
    };
    Ok(ns
        .iter()
        .flat_map(|&n| ps.iter().map(move |&p| (n, p)))
        .collect())
}

fn run_one(command: &Command, n: usize, p: usize) -> Result<Report, Error> {
    match command {
        Command::Facets(args) => run_facets(&ComplexParams::new(n, p, args.instance.k)?, args),
        Command::Order(args) => run_order(args.n),
        Command::Classify(args) => run_classify(&ComplexParams::new(n, p, args.k)?),
        Command::ShellCheck(args) => {
            run_shell_check(&ComplexParams::new(n, p, args.instance.k)?, args)
        }
        Command::Census(args) => run_census(&ComplexParams::new(n, p, args.k)?),
        Command::Homology(args) => {
            run_homology(&ComplexParams::new(n, p, args.instance.k)?, args.max_faces)
        }
        Command::Euler(args) => run_euler(&ComplexParams::new(n, p, args.k)?),
        Command::Verify(args) => run_verify(&ComplexParams::new(n, p, args.instance.k)?, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let instance_args = match &cli.command {
        Command::Facets(a) => a.instance.clone(),
        Command::Order(a) => InstanceArgs {
            n: Some(a.n),
            p: 1,
            k: 3,
            n_range: None,
            p_range: None,
            format: a.format,
        },
        Command::Classify(a) | Command::Census(a) | Command::Euler(a) => a.clone(),
        Command::ShellCheck(a) => a.instance.clone(),
        Command::Homology(a) => a.instance.clone(),
        Command::Verify(a) => a.instance.clone(),
    };

    let grid = match instance_grid(&instance_args) {
        Ok(grid) => grid,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(exit_code_for(&err));
        }
    };

    if grid.len() == 1 {
        let (n, p) = grid[0];
        match run_one(&cli.command, n, p) {
            Ok(report) => {
                print_single(&report, instance_args.format);
                if report.ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::from(exit_code_for(&err))
            }
        }
    } else {
        // Sweep mode: instances run in parallel, one report line each,
        // emitted in grid order so output is deterministic.
        let outcomes: Vec<((usize, usize), Result<Report, Error>)> = grid
            .par_iter()
            .map(|&(n, p)| ((n, p), run_one(&cli.command, n, p)))
            .collect();
        if instance_args.format == Format::Csv {
            println!("{SUMMARY_CSV_HEADER}");
        }
        let mut worst: u8 = 0;
        for ((n, p), outcome) in &outcomes {
            print_sweep_line(*n, *p, outcome, instance_args.format);
            let code = match outcome {
                Ok(report) if report.ok => 0,
                Ok(_) => 1,
                Err(err) => exit_code_for(err),
            };
            worst = worst.max(code);
        }
        ExitCode::from(worst)
    }
}
