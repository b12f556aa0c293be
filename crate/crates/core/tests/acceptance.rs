//! Acceptance criteria. Each criterion prints one `PASS`/`FAIL` line.
//!
//! Criteria 1 and 10 rest on figures that the definitions do not produce
//! (see README, "Known discrepancies"); they are evaluated as stated and
//! print `FAIL`. The target exits non-zero if any other criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use chibound::bounds::{adjacency_spectrum, ando_lin_bound, clique_number, full_report, hoffman_bound, hoffman_ratio};
use chibound::certify::{
    certify_specs, find_homomorphism, verify_general_z_inequality_with, verify_lemma_conformal_with, verify_lemma_main_with,
    verify_scheme_span_inequality_with, CLAIM_TOLERANCE, VIOLATION_TOLERANCE,
};
use chibound::fracchrom::{fractional_chromatic, kneser_eigenvalues, kneser_ratio};
use chibound::graph::{enumerate_nonisomorphic, write_graph6};
use chibound::partition::HPartition;
use chibound::spectra::{eigendecompose, SymMatrix};
use chibound::survey::{run_survey_with, DEFAULT_TIE_EPS};
use chibound::symmetry::{is_edge_transitive, pair_orbit_scheme};
use chibound::{Execution, Graph, GraphSpec};
use num_rational::BigRational;
use num_traits::ToPrimitive;

const KNOWN_UNATTAINABLE: [usize; 2] = [1, 10];

fn g(spec: &str) -> Graph {
    GraphSpec::parse(spec).unwrap().build().unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

struct Verdict {
    passed: bool,
    detail: String,
}

type Criterion = (usize, &'static str, fn() -> Verdict);

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn within(t: Instant, limit: Duration) -> (bool, String) {
    let e = t.elapsed();
    (e <= limit, format!("{:.2}s (limit {}s)", e.as_secs_f64(), limit.as_secs()))
}

fn paley_tightness() -> Verdict {
    let t = Instant::now();
    let r = full_report(&g("paley:9"), "paley:9").unwrap();
    let (fast, time) = within(t, Duration::from_secs(1));
    let ok = (r.s_plus - 32.0).abs() < 1e-8 && (r.s_minus - 16.0).abs() < 1e-8 && (r.ando_lin - 3.0).abs() < 1e-8;
    verdict(
        ok && fast,
        format!("s+ = {:.6}, s- = {:.6}, ando_lin = {:.6} (expected 32, 16, 3); {time}", r.s_plus, r.s_minus, r.ando_lin),
    )
}

fn clique_equality() -> Verdict {
    let t = Instant::now();
    let mut worst: f64 = 0.0;
    for n in 2..=10 {
        let r = full_report(&g(&format!("complete:{n}")), "k").unwrap();
        let m = (n - 1) as f64;
        worst = worst.max((r.ando_lin - n as f64).abs()).max((r.s_plus - m * m).abs()).max((r.s_minus - m).abs());
    }
    let (fast, time) = within(t, Duration::from_secs(1));
    verdict(worst < 1e-8 && fast, format!("max deviation {worst:.2e} over K_2..K_10; {time}"))
}

fn petersen_c7() -> Verdict {
    let t = Instant::now();
    let c = certify_specs(&GraphSpec::parse("petersen").unwrap(), &GraphSpec::parse("cycle:7").unwrap()).unwrap();
    let none = find_homomorphism(&g("petersen"), &g("cycle:7")).unwrap().is_none();
    let (fast, time) = within(t, Duration::from_secs(5));
    let ok = (c.ratio_g - 8.0 / 7.0).abs() < 1e-10 && (c.ratio_h - 1.109916).abs() < 1e-6 && c.margin > 0.0 && none;
    verdict(
        ok && fast,
        format!(
            "ratio_G = {:.10}, ratio_H = {:.6}, margin = {:.6}, exhaustive search finds no map: {none}; {time}",
            c.ratio_g, c.ratio_h, c.margin
        ),
    )
}

fn incomparability() -> Verdict {
    let hp = hoffman_bound(&g("petersen")).unwrap();
    let c5 = ando_lin_bound(&g("cycle:5")).unwrap();
    let w5 = ando_lin_bound(&g("wheel:5")).unwrap();
    let (oc, ow) = (clique_number(&g("cycle:5")).unwrap(), clique_number(&g("wheel:5")).unwrap());
    let ok = (hp - 2.5).abs() < 1e-8 && (c5 - 2.099106).abs() < 1e-6 && oc == 2 && (w5 - 2.725877).abs() < 1e-6 && ow == 3;
    verdict(ok, format!("hoffman(P) = {hp:.8}, AL(C5) = {c5:.6}, w(C5) = {oc}, AL(W5) = {w5:.6}, w(W5) = {ow}"))
}

fn kneser_formula() -> Verdict {
    let mut worst: f64 = 0.0;
    let mut exact = true;
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3)] {
        let spec = eigendecompose(&SymMatrix::adjacency(&g(&format!("kneser:{n}:{k}")))).unwrap();
        let mut expected: Vec<f64> = kneser_eigenvalues(n, k)
            .into_iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v as f64, m as usize))
            .collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        for (a, b) in spec.eigenvalues.iter().zip(&expected) {
            worst = worst.max((a - b).abs());
        }
        let r = kneser_ratio(n, k).unwrap();
        exact &= r == q(n as i64, k as i64) - q(1, 1);
        let numeric = hoffman_ratio(&spec).unwrap();
        worst = worst.max((numeric - r.to_f64().unwrap()).abs());
    }
    verdict(worst < 1e-8 && exact, format!("max eigenvalue deviation {worst:.2e}; ratio = n/k - 1 exactly: {exact}"))
}

fn chi_f_oracle() -> Verdict {
    let t = Instant::now();
    let mut ok = true;
    let mut values = Vec::new();
    for n in 1..=7 {
        let s = fractional_chromatic(&g(&format!("complete:{n}"))).unwrap();
        ok &= s.value == q(n, 1) && s.verify(&g(&format!("complete:{n}"))).is_ok();
    }
    for spec in ["cycle:5", "petersen"] {
        let s = fractional_chromatic(&g(spec)).unwrap();
        ok &= s.value == q(5, 2) && s.dual_certificate.is_some() && s.verify(&g(spec)).is_ok();
        values.push(format!("{spec} = {}", s.value_string()));
    }
    let (fast, time) = within(t, Duration::from_secs(10));
    verdict(ok && fast, format!("K_1..K_7 exact, {}; certificates verified; {time}", values.join(", ")))
}

fn squared_energy_sweep() -> Verdict {
    let graphs: Vec<Graph> = (2..=7).flat_map(|n| enumerate_nonisomorphic(n, true).unwrap()).collect();
    let violations: Vec<String> = Execution::default()
        .map(&graphs, |h| {
            let al = ando_lin_bound(h).unwrap();
            let chi_f = fractional_chromatic(h).unwrap().value.to_f64().unwrap();
            (al > chi_f + 1e-8).then(|| format!("{}: {al} > {chi_f}", write_graph6(h)))
        })
        .into_iter()
        .flatten()
        .collect();
    verdict(violations.is_empty(), format!("{} connected graphs, {} violations {violations:?}", graphs.len(), violations.len()))
}

fn lemma_suite() -> Verdict {
    let mut failures = Vec::new();
    let mut worst = (0.0f64, 0.0f64);
    let exec = Execution::default();
    for spec in ["cycle:5", "cycle:7", "complete:4", "petersen", "kneser:6:2"] {
        let h = g(spec);
        let sizes = vec![2; h.n()];
        let part = HPartition::from_sizes(&sizes, &h).unwrap();
        let reports = [
            verify_lemma_main_with(&h, &sizes, 200, 2024, exec),
            verify_lemma_conformal_with(&h, &part, 200, 2024, exec),
            verify_scheme_span_inequality_with(&h, 200, 2024, exec),
            verify_general_z_inequality_with(&h, 200, 2024, exec),
        ];
        for r in reports {
            match r {
                Ok(r) => {
                    worst = (worst.0.max(r.max_violation), worst.1.max(r.max_claim_residual));
                    if !r.passed || r.trials < 200 {
                        failures.push(format!("{spec} {:?}", r.lemma_id));
                    }
                }
                Err(e) => failures.push(format!("{spec}: {e}")),
            }
        }
    }
    verdict(
        failures.is_empty() && worst.0 <= VIOLATION_TOLERANCE && worst.1 <= CLAIM_TOLERANCE,
        format!("20 reports x 200 trials; max violation {:.2e}, max claim residual {:.2e}; failures {failures:?}", worst.0, worst.1),
    )
}

fn johnson_scheme() -> Verdict {
    let h = g("kneser:5:2");
    let s = pair_orbit_scheme(&h).unwrap();
    let n = h.n();
    let mut problems = Vec::new();
    if s.class_count() != 3 {
        problems.push(format!("{} classes", s.class_count()));
    }
    // (b) sum of the A_i is J, with A_0 = I
    for u in 0..n {
        for v in 0..n {
            let hits = (0..s.class_count()).filter(|&i| s.matrix(i)[u][v] == 1).count();
            if hits != 1 || (s.class(u, v) == 0) != (u == v) {
                problems.push(format!("pair ({u},{v}) covered {hits} times"));
            }
        }
    }
    // (a) H is one of the classes; the other is the intersecting relation
    let disjoint = s.edge_class_index;
    let intersecting = 3 - disjoint;
    for u in 0..n {
        for v in 0..n {
            if u != v && ((s.class(u, v) == disjoint) != h.has_edge(u, v) || (s.class(u, v) == intersecting) == h.has_edge(u, v)) {
                problems.push(format!("pair ({u},{v}) misclassified"));
            }
        }
    }
    if s.classes[disjoint].row_sum != 3 || s.classes[intersecting].row_sum != 6 {
        problems.push("valencies are not 3 and 6".into());
    }
    // (c) each class is a single orbit of unordered pairs
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in 1..s.class_count() {
        let members: BTreeSet<(usize, usize)> = pairs.iter().copied().filter(|&(u, v)| s.class(u, v) == i).collect();
        let start = *members.iter().next().unwrap();
        let mut orbit = BTreeSet::from([start]);
        let mut frontier = vec![start];
        while let Some((u, v)) = frontier.pop() {
            for p in s.group.generators() {
                let (a, b) = (p[u], p[v]);
                if orbit.insert((a.min(b), a.max(b))) {
                    frontier.push((a.min(b), a.max(b)));
                }
            }
        }
        if orbit != members {
            problems.push(format!("class {i} is not a single orbit"));
        }
    }
    // (d) every generator preserves every class
    for p in s.group.generators() {
        for i in 0..s.class_count() {
            let m = s.matrix_f64(i);
            if m.permuted(p).max_abs_diff(&m) != 0.0 {
                problems.push(format!("class {i} not invariant"));
            }
        }
    }
    verdict(problems.is_empty(), format!("classes {:?}; group order {}; {problems:?}", s.classes, s.group.order()))
}

fn survey_reproduction() -> Verdict {
    let t = Instant::now();
    let corpus: String = (5..=8)
        .flat_map(|n| enumerate_nonisomorphic(n, false).unwrap())
        .map(|h| write_graph6(&h) + "\n")
        .collect();
    let stats = run_survey_with("graphs on 5..8 vertices", &corpus, DEFAULT_TIE_EPS, Execution::Sequential).unwrap();
    let (fast, time) = within(t, Duration::from_secs(15 * 60));
    let csv = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("survey_5_to_8.csv");
    stats.write_csv(std::fs::File::create(&csv).unwrap()).unwrap();
    let identity = stats.al_strictly_better + stats.hoffman_strictly_better + stats.ties == stats.connected_nonbipartite;
    let gap = stats.al_strictly_better.abs_diff(11_014);
    verdict(
        stats.connected_nonbipartite == 11_855 && gap <= 5 && identity && fast,
        format!(
            "connected non-bipartite {} (expected 11855), ando-lin strictly better {} (expected 11014, gap {gap}), hoffman {}, ties {} at tie_eps {:e}; csv {}; {time}",
            stats.connected_nonbipartite,
            stats.al_strictly_better,
            stats.hoffman_strictly_better,
            stats.ties,
            stats.tie_eps,
            csv.display()
        ),
    )
}

fn vertex_transitive_counterexample() -> Verdict {
    let h = g("complement:cycle:6");
    let et = is_edge_transitive(&h).unwrap();
    let ratio = hoffman_ratio(&adjacency_spectrum(&h).unwrap()).unwrap();
    let map = find_homomorphism(&g("complete:3"), &h).unwrap();
    verdict(!et && (ratio - 1.5).abs() < 1e-8 && map.is_some(), format!("edge-transitive {et}, ratio {ratio:.10}, K3 -> C6-bar map {map:?}"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "Paley tightness", paley_tightness),
        (2, "clique equality", clique_equality),
        (3, "Petersen to C7 certificate", petersen_c7),
        (4, "Hoffman/Ando-Lin incomparability", incomparability),
        (5, "Kneser eigenvalue formula", kneser_formula),
        (6, "fractional chromatic oracle", chi_f_oracle),
        (7, "squared-energy bound sweep", squared_energy_sweep),
        (8, "lemma verification suite", lemma_suite),
        (9, "Johnson scheme", johnson_scheme),
        (10, "survey reproduction", survey_reproduction),
        (11, "vertex-transitive counterexample", vertex_transitive_counterexample),
    ];
    let mut unexpected = Vec::new();
    for (id, name, check) in criteria {
        let v = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            verdict(false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        let tag = if v.passed { "PASS" } else { "FAIL" };
        let note = if !v.passed && KNOWN_UNATTAINABLE.contains(&id) { " [known discrepancy]" } else { "" };
        println!("{tag} #{id:<2} {name}: {}{note}", v.detail);
        if !v.passed && !KNOWN_UNATTAINABLE.contains(&id) {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("criteria failed: {unexpected:?}");
        std::process::exit(1);
    }
}
