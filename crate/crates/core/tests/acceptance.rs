//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always shown; exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use adlv::affine_weyl::{AffineElement, AffineWeyl};
use adlv::bset::{verify_a_identity, verify_graph_identity, verify_identity, Graph};
use adlv::cli::{golden_rows, table_rows, Series};
use adlv::reduction::scan::{
    class_identity_scan, coxeter_translation_instances, finite_coxeter_part_elements,
};
use adlv::reduction::{
    verify_coxeter_translation, verify_finite_coxeter_part, FiniteCoxeterPartReport, Reducer,
    Strategy, DEFAULT_BUDGET,
};
use adlv::root_datum::{CartanType, RootDatum, Twist};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEEDS: [u64; 3] = [11, 22, 33];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn datum(ty: CartanType, twist: Twist) -> Arc<RootDatum> {
    Arc::new(RootDatum::with_twist(ty, twist).expect("standard datum"))
}

fn fundamental(rank: usize, i: usize) -> Vec<i64> {
    let mut mu = vec![0; rank];
    mu[i] = 1;
    mu
}

fn tables() -> Outcome {
    let expected: [(usize, &[usize]); 3] = [
        (6, &[7, 15, 30, 15]),
        (7, &[13, 26, 50, 125, 69, 32]),
        (8, &[56, 126, 254, 729, 424, 220, 94, 27]),
    ];
    let rows = table_rows(Series::All).expect("tables");
    let golden = golden_rows().expect("reference data");
    let mut bad = Vec::new();
    for (rank, counts) in expected {
        let got: Vec<usize> = rows
            .iter()
            .filter(|r| r.rank == rank)
            .map(|r| r.count_indec)
            .collect();
        if got != counts {
            bad.push(format!("E{rank}: {got:?} != {counts:?}"));
        }
    }
    for r in &rows {
        let key = r.coweight.trim_start_matches('w').parse::<usize>().unwrap();
        if !golden.contains(&(r.rank, key, r.count_indec)) {
            bad.push(format!(
                "E{} {} disagrees with the embedded reference file",
                r.rank, r.coweight
            ));
        }
        if !r.identity_ok {
            bad.push(format!("identity fails for E{} {}", r.rank, r.coweight));
        }
    }
    outcome(
        bad.is_empty() && rows.len() == 18,
        format!("{} rows; {}", rows.len(), summarize(&bad)),
    )
}

fn summarize(bad: &[String]) -> String {
    match bad.len() {
        0 => "no mismatches".into(),
        n => format!("{n} mismatches, first: {}", bad[0]),
    }
}

fn identity() -> Outcome {
    use CartanType::*;
    let mut data = Vec::new();
    for n in 1..=7 {
        data.push(datum(A(n), Twist::None));
    }
    for n in 4..=6 {
        data.push(datum(D(n), Twist::None));
    }
    for n in 6..=8 {
        data.push(datum(E(n), Twist::None));
    }
    for ty in [B(3), C(3), F4, G2] {
        data.push(datum(ty, Twist::None));
    }
    // quasi-split forms that fold to B3, C3, F4 and G2
    data.push(datum(A(5), Twist::Flip));
    data.push(datum(D(4), Twist::Flip));
    data.push(datum(E(6), Twist::Flip));
    data.push(datum(D(4), Twist::Triality));
    let cases: Vec<(Arc<RootDatum>, Vec<i64>)> = data
        .iter()
        .flat_map(|d| (0..d.rank()).map(move |i| (d.clone(), fundamental(d.rank(), i))))
        .collect();
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|(d, mu)| match verify_identity(d, mu) {
            Ok(r) if r.ok => None,
            Ok(r) => Some(format!("{d} {mu:?}: residual {}", r.residual)),
            Err(e) => Some(format!("{d} {mu:?}: {e}")),
        })
        .collect();
    outcome(
        bad.is_empty(),
        format!(
            "{} (datum, coweight) pairs over {} data; {}",
            cases.len(),
            data.len(),
            summarize(&bad)
        ),
    )
}

fn a_type() -> Outcome {
    let cases: Vec<(i64, i64)> = (2..=8).flat_map(|n| (1..n).map(move |i| (n, i))).collect();
    let reports: Vec<_> = cases
        .par_iter()
        .map(|&(n, i)| verify_a_identity(n, i).expect("a-type"))
        .collect();
    let literal_bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.literal_ok)
        .map(|r| {
            format!(
                "(n, i) = ({}, {}): sum {} vs {} with q read as t = q^(1/2)",
                r.n, r.i, r.literal_sum, r.rhs
            )
        })
        .collect();
    let count_bad = reports.iter().filter(|r| !r.count_ok).count();
    let newton_bad = reports.iter().filter(|r| !r.newton_ok).count();
    let derived_bad = reports.iter().filter(|r| !r.derived_ok).count();
    let pass = literal_bad.is_empty() && count_bad == 0 && newton_bad == 0;
    outcome(
        pass,
        format!(
            "{} cases; displayed closed form fails in {}{}; term count mismatches {count_bad}; Newton-point mismatches {newton_bad}; \
             form with exponent k - 1 - (area + gcd)/2 replaced by (area + gcd)/2 - k fails in {derived_bad}",
            reports.len(),
            literal_bad.len(),
            literal_bad.first().map(|s| format!(" (first {s})")).unwrap_or_default(),
        ),
    )
}

fn graph_lemma() -> Outcome {
    let count = 10_000u64;
    let bad: Vec<String> = (0..count)
        .into_par_iter()
        .filter_map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(2024);
            rng.set_stream(k);
            let n = rng.gen_range(0..=8usize);
            let p = rng.gen_range(0.0..1.0);
            let g = Graph::random(n, p, &mut rng);
            let y = rng.gen_range(0..(1u32 << n));
            match verify_graph_identity(&g, y) {
                Ok(true) => None,
                Ok(false) => Some(format!("{:?} with Y = {y:b}", g.edges())),
                Err(e) => Some(e.to_string()),
            }
        })
        .collect();
    outcome(
        bad.is_empty(),
        format!(
            "{count} random graphs with at most 8 vertices; {}",
            summarize(&bad)
        ),
    )
}

fn class_identity_data() -> Vec<Arc<RootDatum>> {
    use CartanType::*;
    vec![
        datum(A(1), Twist::None),
        datum(A(2), Twist::None),
        datum(A(2), Twist::Flip),
        datum(A(3), Twist::Flip),
    ]
}

fn coxeter_translation_data() -> Vec<Arc<RootDatum>> {
    use CartanType::*;
    vec![
        datum(A(2), Twist::None),
        datum(A(3), Twist::None),
        datum(A(3), Twist::Flip),
    ]
}

fn finite_coxeter_part_data() -> Vec<Arc<RootDatum>> {
    use CartanType::*;
    vec![
        datum(A(1), Twist::None),
        datum(A(2), Twist::None),
        datum(A(3), Twist::None),
        datum(B(2), Twist::None),
        datum(G2, Twist::None),
        datum(B(3), Twist::None),
        datum(C(3), Twist::None),
        datum(A(2), Twist::Flip),
        datum(A(3), Twist::Flip),
    ]
}

fn class_identity() -> Outcome {
    let results: Vec<_> = class_identity_data()
        .par_iter()
        .map(|d| {
            let aw = AffineWeyl::new(d.clone());
            (
                d.to_string(),
                class_identity_scan(&aw, 8, Strategy::FirstFound, DEFAULT_BUDGET).map(|(s, _)| s),
            )
        })
        .collect();
    let mut total = 0;
    let mut bad = Vec::new();
    for (name, r) in results {
        match r {
            Ok(s) => {
                total += s.instances;
                bad.extend(s.failures.iter().map(|w| format!("{name} {w}")));
            }
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    outcome(
        bad.is_empty(),
        format!("{total} elements of length at most 8; {}", summarize(&bad)),
    )
}

fn coxeter_translation() -> Outcome {
    let results: Vec<(String, usize, Vec<String>)> = coxeter_translation_data()
        .par_iter()
        .map(|d| {
            let aw = AffineWeyl::new(d.clone());
            let r = Reducer::new(&aw, Strategy::FirstFound, DEFAULT_BUDGET);
            let instances = coxeter_translation_instances(&aw, 12);
            let mut bad = Vec::new();
            for (mu, w) in &instances {
                match verify_coxeter_translation(&r, mu, &w.fin) {
                    Ok(rep) if rep.ok => {}
                    Ok(rep) => {
                        bad.push(format!("{d} {}: {}", rep.element, rep.failures.join("; ")))
                    }
                    Err(e) => bad.push(format!("{d} {}: {e}", aw.format(w))),
                }
            }
            (d.to_string(), instances.len(), bad)
        })
        .collect();
    let total: usize = results.iter().map(|r| r.1).sum();
    let bad: Vec<String> = results.iter().flat_map(|r| r.2.clone()).collect();
    let per: Vec<String> = results.iter().map(|r| format!("{} {}", r.0, r.1)).collect();
    outcome(
        bad.is_empty() && results.iter().all(|r| r.1 > 0),
        format!(
            "{total} (mu, c) instances [{}]; {}",
            per.join(", "),
            summarize(&bad)
        ),
    )
}

/// Reports for every element in the scope of criteria 7 and 8.
fn finite_coxeter_part_reports() -> Vec<(String, Result<FiniteCoxeterPartReport, String>)> {
    finite_coxeter_part_data()
        .par_iter()
        .flat_map_iter(|d| {
            let aw = AffineWeyl::new(d.clone());
            let r = Reducer::new(&aw, Strategy::FirstFound, DEFAULT_BUDGET);
            let elements =
                finite_coxeter_part_elements(&aw, 12, DEFAULT_BUDGET).expect("enumeration");
            elements
                .iter()
                .map(|w| {
                    (
                        format!("{d} {}", aw.format(w)),
                        verify_finite_coxeter_part(&r, w).map_err(|e| e.to_string()),
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

fn finite_coxeter_part(reports: &[(String, Result<FiniteCoxeterPartReport, String>)]) -> Outcome {
    let bad: Vec<String> = reports
        .iter()
        .filter_map(|(name, r)| match r {
            Ok(rep) if rep.paths_ok && rep.diamond_ok && rep.dimensions_ok => None,
            Ok(rep) => Some(format!("{name}: {}", rep.failures.join("; "))),
            Err(e) => Some(format!("{name}: {e}")),
        })
        .collect();
    outcome(
        bad.is_empty(),
        format!(
            "{} elements of length at most 12 over {} data; {}",
            reports.len(),
            finite_coxeter_part_data().len(),
            summarize(&bad)
        ),
    )
}

fn cordiality(reports: &[(String, Result<FiniteCoxeterPartReport, String>)]) -> Outcome {
    let bad: Vec<String> = reports
        .iter()
        .filter_map(|(name, r)| match r {
            Ok(rep) if rep.cordial && rep.saturated && rep.interval_ok => None,
            Ok(rep) => Some(format!(
                "{name}: cordial {}, saturated {}, interval {}",
                rep.cordial, rep.saturated, rep.interval_ok
            )),
            Err(e) => Some(format!("{name}: {e}")),
        })
        .collect();
    outcome(
        bad.is_empty(),
        format!("{} elements; {}", reports.len(), summarize(&bad)),
    )
}

type PathStats = BTreeMap<(adlv::bset::IsocrystalClass, u32, u32, usize), u64>;

fn path_stats(
    aw: &AffineWeyl,
    elements: &[AffineElement],
    strategy: Strategy,
) -> Result<Vec<PathStats>, String> {
    let r = Reducer::new(aw, strategy, DEFAULT_BUDGET);
    elements
        .iter()
        .map(|w| r.path_statistics(w).map_err(|e| e.to_string()))
        .collect()
}

fn seeds() -> Outcome {
    let mut bad: Vec<String> = Vec::new();
    let mut compared = 0usize;

    let c5: Vec<_> = class_identity_data()
        .par_iter()
        .map(|d| {
            let aw = AffineWeyl::new(d.clone());
            let runs: Vec<_> = SEEDS
                .iter()
                .map(|&s| {
                    class_identity_scan(&aw, 8, Strategy::Seeded(s), DEFAULT_BUDGET)
                        .map(|(_, st)| st)
                        .map_err(|e| e.to_string())
                })
                .collect();
            (d.to_string(), runs)
        })
        .collect();
    for (name, runs) in c5 {
        match runs.into_iter().collect::<Result<Vec<_>, _>>() {
            Ok(runs) => {
                compared += runs[0].len();
                if runs.iter().any(|r| *r != runs[0]) {
                    bad.push(format!("{name}: class statistics differ between seeds"));
                }
            }
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }

    let mut jobs: Vec<(Arc<RootDatum>, bool)> = coxeter_translation_data()
        .into_iter()
        .map(|d| (d, true))
        .collect();
    jobs.extend(finite_coxeter_part_data().into_iter().map(|d| (d, false)));
    let c67: Vec<_> = jobs
        .par_iter()
        .map(|(d, main)| {
            let aw = AffineWeyl::new(d.clone());
            let elements: Vec<AffineElement> = if *main {
                coxeter_translation_instances(&aw, 12)
                    .into_iter()
                    .map(|(_, w)| w)
                    .collect()
            } else {
                finite_coxeter_part_elements(&aw, 12, DEFAULT_BUDGET).expect("enumeration")
            };
            let runs: Vec<_> = SEEDS
                .iter()
                .map(|&s| path_stats(&aw, &elements, Strategy::Seeded(s)))
                .collect();
            (
                format!(
                    "{d} ({})",
                    if *main {
                        "t^mu c"
                    } else {
                        "finite Coxeter part"
                    }
                ),
                runs,
            )
        })
        .collect();
    for (name, runs) in c67 {
        match runs.into_iter().collect::<Result<Vec<_>, _>>() {
            Ok(runs) => {
                compared += runs[0].len();
                if runs.iter().any(|r| *r != runs[0]) {
                    bad.push(format!("{name}: path statistics differ between seeds"));
                }
            }
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{compared} elements under seeds {SEEDS:?}; {}",
            summarize(&bad)
        ),
    )
}

fn report(id: usize, name: &str, start: Instant, o: &Outcome) -> bool {
    println!(
        "{} criterion {id} ({name}): {} [{:.1}s]",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail,
        start.elapsed().as_secs_f64()
    );
    o.pass
}

fn main() {
    // libtest flags such as --list or a name filter are accepted and ignored
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let mut all = true;
    let t = Instant::now();
    all &= report(1, "type E tables", t, &tables());
    let t = Instant::now();
    all &= report(2, "Kottwitz-set identity", t, &identity());
    let t = Instant::now();
    all &= report(3, "type A closed form", t, &a_type());
    let t = Instant::now();
    all &= report(4, "graph identity", t, &graph_lemma());
    let t = Instant::now();
    all &= report(5, "class polynomial identity", t, &class_identity());
    let t = Instant::now();
    all &= report(6, "multiplicity one for t^mu c", t, &coxeter_translation());
    let t = Instant::now();
    let reports = finite_coxeter_part_reports();
    all &= report(
        7,
        "paths for finite Coxeter part",
        t,
        &finite_coxeter_part(&reports),
    );
    let t = Instant::now();
    all &= report(8, "cordiality and saturation", t, &cordiality(&reports));
    let t = Instant::now();
    all &= report(9, "cross-seed stability", t, &seeds());
    if !all {
        std::process::exit(1);
    }
}
