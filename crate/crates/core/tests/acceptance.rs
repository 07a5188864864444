//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::time::{Duration, Instant};

use hv_core::verifier::orderwise::{check_orderwise, check_orderwise_sum, Parent, Sequences};
use hv_core::verifier::suites::weyl_convention;
use hv_core::verifier::{
    check_conjecture, check_mixed, check_su11, check_symmetries, check_toda,
    ernst_residual_numeric, run_suites, CheckReport, ErnstPoint, NakamuraCase, Su11Params, Suite,
    SuiteConfig, TodaFamily,
};
use hv_core::wronskian::{jacobi_identity_check, FamilyKind};
use hv_core::{GaussianRational, TauFamily};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn tally(reports: &[CheckReport]) -> (usize, Vec<String>) {
    let failed = reports
        .iter()
        .filter(|r| !r.passed())
        .map(ToString::to_string)
        .collect();
    (reports.len(), failed)
}

fn from_reports(reports: &[CheckReport], extra: &str) -> Outcome {
    let (total, failed) = tally(reports);
    let mut detail = format!("{}/{} checks pass", total - failed.len(), total);
    if !extra.is_empty() {
        detail.push_str("; ");
        detail.push_str(extra);
    }
    if let Some(first) = failed.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    Outcome {
        passed: failed.is_empty() && total > 0,
        detail,
    }
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn criterion_toda(fam: &TauFamily, build: Duration) -> Outcome {
    let (reports, elapsed) = timed(|| {
        (1..=4)
            .flat_map(|n| {
                [FamilyKind::Tau, FamilyKind::G, FamilyKind::F].map(|k| check_toda(fam, n, k))
            })
            .collect::<Vec<_>>()
    });
    let total = build + elapsed;
    let mut o = from_reports(
        &reports,
        &format!("n=1..4 for tau, g, f in {:.1}s", total.as_secs_f64()),
    );
    o.passed &= total < Duration::from_secs(120);
    o
}

fn criterion_jacobi() -> Outcome {
    let reports: Vec<_> = (1..=3)
        .map(|n| jacobi_identity_check(n).expect("jacobi"))
        .collect();
    from_reports(&reports, "n=1..3")
}

fn criterion_conjecture(fam: &TauFamily, build: Duration) -> Outcome {
    let (core, elapsed) = timed(|| {
        (1..=4)
            .flat_map(|n| check_conjecture(fam, n))
            .collect::<Vec<_>>()
    });
    let (stretch, stretch_time) = timed(|| check_conjecture(fam, 5));
    let stretch_ok = stretch.iter().all(CheckReport::passed);
    let total = build + elapsed;
    let mut o = from_reports(
        &core,
        &format!(
            "n=1..4 in {:.1}s; stretch n=5 {} in {:.1}s",
            total.as_secs_f64(),
            if stretch_ok { "all zero" } else { "NONZERO" },
            stretch_time.as_secs_f64()
        ),
    );
    o.passed &= total < Duration::from_secs(600);
    o
}

fn criterion_mixed(fam: &TauFamily) -> Outcome {
    let reports: Vec<_> = (1..=4).map(|n| check_mixed(fam, n)).collect();
    from_reports(&reports, "n=1..4 with f_0 = 0, g_0 = 1")
}

fn closedforms(fam: &TauFamily) -> Vec<CheckReport> {
    run_suites(fam, &[Suite::Closedforms], &SuiteConfig::new(5))
}

fn criterion_closed_forms(fam: &TauFamily) -> Outcome {
    let wanted = |id: &str| {
        id == "W"
            || id.starts_with("q0:")
            || id.starts_with("high:")
            || id.starts_with("low:")
            || id.starts_with("anchor:")
    };
    let reports: Vec<_> = closedforms(fam)
        .into_iter()
        .filter(|r| wanted(&r.equation_id))
        .collect();
    let count = |p: &str| {
        reports
            .iter()
            .filter(|r| r.equation_id.starts_with(p))
            .count()
    };
    let shape_ok = count("W") == 11
        && count("q0:") == 12
        && count("high:") + count("low:") == 20
        && count("anchor:") == 2;
    let mut o = from_reports(&reports, "W n=2..12, q0 n=1..6, extremes n=1..5, anchors");
    o.passed &= shape_ok;
    o
}

fn criterion_a(fam: &TauFamily) -> Outcome {
    let reports: Vec<_> = closedforms(fam)
        .into_iter()
        .filter(|r| r.equation_id.starts_with('A'))
        .collect();
    let refuted = reports
        .iter()
        .find(|r| r.equation_id == "A-recursion-unsquared-refuted")
        .and_then(|r| r.note.clone())
        .unwrap_or_default();
    from_reports(
        &reports,
        &format!("A_1..A_4 = 1, 1, 4, 144; squared recursion holds n=2..5; {refuted}"),
    )
}

fn criterion_symmetries(fam: &TauFamily) -> Outcome {
    let reports: Vec<_> = (1..=5).flat_map(|n| check_symmetries(fam, n)).collect();
    let printed_f = reports
        .iter()
        .filter(|r| {
            r.equation_id == "prop4:f" && r.note.as_deref().is_some_and(|s| s.contains("fails"))
        })
        .map(|r| r.n.to_string())
        .collect::<Vec<_>>()
        .join(",");
    from_reports(
        &reports,
        &format!("n=1..5; argument-swapped f rule fails at n={printed_f}"),
    )
}

fn criterion_orderwise(fam: &TauFamily) -> Outcome {
    let (g, f) = Sequences::of(fam);
    let s = Sequences { g: &g, f: &f };
    let parents = TodaFamily::ALL
        .iter()
        .map(|&t| Parent::Toda(t))
        .chain(NakamuraCase::ALL.iter().map(|&c| Parent::Nakamura(c)));
    let mut reports = Vec::new();
    let mut sums = 0;
    for parent in parents {
        for n in 1..=3 {
            for order in 0..=parent.max_order(n) {
                reports.push(check_orderwise(s, n, order, parent).expect("valid order"));
            }
            reports.push(check_orderwise_sum(s, n, parent).expect("valid parent"));
            sums += 1;
        }
    }
    from_reports(
        &reports,
        &format!("TD1-TD9 and B.1-B.12 for n=1..3, {sums} t-weighted sums"),
    )
}

fn criterion_su11(fam: &TauFamily) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let params: Vec<_> = (0..5).map(|_| Su11Params::random(&mut rng)).collect();
    let reports: Vec<_> = params
        .iter()
        .flat_map(|p| (1..=3).flat_map(move |n| check_su11(fam, n, p)))
        .collect();
    from_reports(
        &reports,
        "5 random (alpha, beta), n=1..3, Toda + mixed + conjecture",
    )
}

fn criterion_weyl() -> Outcome {
    let reports = weyl_convention(2024, 50);
    let mut o = from_reports(&reports, "50 random x-only inputs, degree <= 6");
    o.passed &= reports.len() == 50;
    o
}

fn zero_timing(reports: &mut [CheckReport]) {
    for r in reports {
        r.elapsed = Duration::ZERO;
    }
}

fn criterion_determinism() -> Outcome {
    let fam = TauFamily::build(4).expect("family");
    let oracle = run_suites(&fam, &[Suite::Jacobi], &SuiteConfig::new(4));
    let det: Vec<_> = oracle
        .iter()
        .filter(|r| r.equation_id == "det-oracle")
        .cloned()
        .collect();

    let suites = [
        Suite::Conjecture,
        Suite::Symmetries,
        Suite::Weyl,
        Suite::OrderwiseA,
        Suite::ErnstNumeric,
    ];
    let cfg = SuiteConfig::new(3);
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("pool");
        let mut reports = pool.install(|| run_suites(&fam, &suites, &cfg));
        zero_timing(&mut reports);
        serde_json::to_string(&reports).expect("json")
    };
    let first = run(1);
    let identical = first == run(1) && first == run(3);

    let mut o = from_reports(
        &oracle,
        &format!("{} fraction-free/cofactor pairs, dims 1..4", det.len()),
    );
    o.passed &= det.len() == 8;
    o.detail.push_str(if identical {
        "; repeated runs byte-identical modulo timing"
    } else {
        "; repeated runs DIFFER"
    });
    o.passed &= identical;
    o
}

fn criterion_ernst(fam: &TauFamily) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut points = vec![ErnstPoint::new(
        GaussianRational::from_int(2),
        GaussianRational::ratio(1, 2),
        GaussianRational::from_int(1),
    )];
    points.extend((0..3).map(|_| ErnstPoint::random(&mut rng)));
    let mut zero = 0;
    let mut total = 0;
    let mut bad = Vec::new();
    for n in 1..=2 {
        for s in ernst_residual_numeric(fam, n, &points) {
            total += 1;
            if s.is_zero() && s.point.is_admissible() {
                zero += 1;
            } else {
                bad.push(format!("n={n} at {}: {:?}", s.point, s.residual));
            }
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: format!(
            "{zero}/{total} exact zeros at {} admissible points for n=1,2{}",
            points.len(),
            bad.first()
                .map(|b| format!("; first failure: {b}"))
                .unwrap_or_default()
        ),
    }
}

fn main() {
    // `cargo test` passes harness flags such as `--quiet`; a name filter
    // that does not match this target skips it.
    let args: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    if !args.is_empty() && !args.iter().any(|a| "acceptance".contains(a.as_str())) {
        return;
    }

    let (fam, build) = timed(|| TauFamily::build(5).expect("family"));
    println!("built tau family to n=5 in {:.2}s", build.as_secs_f64());

    let criteria: Vec<Criterion> = vec![
        ("Toda suite", Box::new(|| criterion_toda(&fam, build))),
        ("Jacobi identity", Box::new(criterion_jacobi)),
        (
            "Conjecture suite",
            Box::new(|| criterion_conjecture(&fam, build)),
        ),
        ("Mixed identity", Box::new(|| criterion_mixed(&fam))),
        ("Closed forms", Box::new(|| criterion_closed_forms(&fam))),
        ("A-coefficient facts", Box::new(|| criterion_a(&fam))),
        ("Symmetry suite", Box::new(|| criterion_symmetries(&fam))),
        ("Orderwise suites", Box::new(|| criterion_orderwise(&fam))),
        ("SU(1,1) invariance", Box::new(|| criterion_su11(&fam))),
        ("Operator convention lock", Box::new(criterion_weyl)),
        ("Determinism and oracle", Box::new(criterion_determinism)),
        ("Numeric Ernst check", Box::new(|| criterion_ernst(&fam))),
    ];

    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let (o, elapsed) = timed(run);
        let tag = if o.passed { "PASS" } else { "FAIL" };
        failures += usize::from(!o.passed);
        println!(
            "{tag} criterion {:>2} {name}: {} ({:.1}s)",
            k + 1,
            o.detail,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
