//! Suite registry and the concurrent runner.
//!
//! Each suite expands to independent jobs over an immutable [`TauFamily`].
//! Jobs run on the current rayon pool; output order is fixed by sorting on
//! `(equation_id, n, I)`, so reports do not depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::conjecture::check_conjecture;
use super::ernst::{ernst_reports, ErnstPoint};
use super::orderwise::{
    check_highest_order_closed, check_orderwise, check_orderwise_sum, NakamuraCase, Parent,
    Sequences, TodaFamily,
};
use super::su11::{check_su11, Su11Params};
use super::symmetry::check_symmetries;
use super::toda::{check_mixed, check_toda};
use super::{CheckReport, Status};
use crate::closedform::{
    a_coeff, a_recursion_printed_holds, a_recursion_squared_holds, f_high, f_low, f_q0_closed,
    g_high, g_low, g_q0_closed, w_formula, w_matrix_f, w_matrix_g, w_recursive,
};
use crate::exactalg::{BasisDirection, GaussianRational, LaurentPoly};
use crate::operators::{apply_f_weyl, hirota_dst, FOperator};
use crate::wronskian::{
    determinant, jacobi_identity_check, minor, wronskian_matrix, DetAlgorithm, FamilyKind,
    SymMatrix, TauFamily,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Toda,
    Mixed,
    Jacobi,
    Conjecture,
    Symmetries,
    Closedforms,
    Weyl,
    #[serde(rename = "orderwise-A")]
    OrderwiseA,
    #[serde(rename = "orderwise-B")]
    OrderwiseB,
    ErnstNumeric,
    Su11,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Toda,
        Suite::Mixed,
        Suite::Jacobi,
        Suite::Conjecture,
        Suite::Symmetries,
        Suite::Closedforms,
        Suite::Weyl,
        Suite::OrderwiseA,
        Suite::OrderwiseB,
        Suite::ErnstNumeric,
        Suite::Su11,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Toda => "toda",
            Suite::Mixed => "mixed",
            Suite::Jacobi => "jacobi",
            Suite::Conjecture => "conjecture",
            Suite::Symmetries => "symmetries",
            Suite::Closedforms => "closedforms",
            Suite::Weyl => "weyl",
            Suite::OrderwiseA => "orderwise-A",
            Suite::OrderwiseB => "orderwise-B",
            Suite::ErnstNumeric => "ernst-numeric",
            Suite::Su11 => "su11",
        }
    }

    /// Resolves a registry name; `all` expands to every suite.
    pub fn parse_list(name: &str) -> Result<Vec<Suite>, UnknownSuite> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        name.parse().map(|s| vec![s])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite '{0}' (expected one of: toda, mixed, jacobi, conjecture, symmetries, closedforms, weyl, orderwise-A, orderwise-B, ernst-numeric, su11, all)")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Highest level available in the family. Identities needing `n+1` stop
    /// at `n_max - 1`.
    pub n_max: usize,
    /// Stop after the first suite (in registry order) with a failure.
    pub fail_fast: bool,
    /// Seed for the randomized suites (SU(1,1), weyl, ernst-numeric).
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(n_max: usize) -> Self {
        Self {
            n_max,
            fail_fast: false,
            seed: 20_240_601,
        }
    }
}

type Job<'a> = Box<dyn Fn() -> Vec<CheckReport> + Send + Sync + 'a>;

fn error_report(id: &str, n: usize, err: impl fmt::Display) -> CheckReport {
    CheckReport::from_bool(id, n as u32, false, Some(err.to_string()), Instant::now())
}

fn suite_jobs<'a>(suite: Suite, fam: &'a TauFamily, cfg: &SuiteConfig) -> Vec<Job<'a>> {
    let n_max = cfg.n_max.min(fam.n_max());
    let with_next = 1..n_max;
    let upto = 1..=n_max;
    let seed = cfg.seed;
    let mut jobs: Vec<Job<'a>> = Vec::new();
    match suite {
        Suite::Toda => {
            for n in with_next {
                for kind in [FamilyKind::Tau, FamilyKind::G, FamilyKind::F] {
                    jobs.push(Box::new(move || vec![check_toda(fam, n, kind)]));
                }
            }
        }
        Suite::Mixed => {
            for n in with_next {
                jobs.push(Box::new(move || vec![check_mixed(fam, n)]));
            }
        }
        Suite::Jacobi => {
            for n in 1..=n_max.min(4) {
                jobs.push(Box::new(move || {
                    vec![jacobi_identity_check(n).unwrap_or_else(|e| error_report("jacobi", n, e))]
                }));
            }
            for dim in 1..=n_max.min(4) {
                jobs.push(Box::new(move || det_oracle(dim)));
            }
        }
        Suite::Conjecture => {
            for n in upto {
                jobs.push(Box::new(move || check_conjecture(fam, n)));
            }
        }
        Suite::Symmetries => {
            for n in upto {
                jobs.push(Box::new(move || check_symmetries(fam, n)));
            }
        }
        Suite::Closedforms => {
            jobs.push(Box::new(closed_form_w));
            jobs.push(Box::new(closed_form_q0));
            jobs.push(Box::new(closed_form_a));
            jobs.push(Box::new(closed_form_anchors));
            for n in upto {
                jobs.push(Box::new(move || closed_form_extremes(fam, n)));
                jobs.push(Box::new(move || highest_order_toda_closed(n)));
                jobs.push(Box::new(move || {
                    check_highest_order_closed(n)
                        .unwrap_or_else(|e| vec![error_report("hNak", n, e)])
                }));
            }
        }
        Suite::Weyl => {
            for n in upto {
                jobs.push(Box::new(move || weyl_q0(fam, n)));
            }
            jobs.push(Box::new(move || weyl_convention(seed, 50)));
        }
        Suite::OrderwiseA => {
            for n in with_next {
                for family in TodaFamily::ALL {
                    jobs.push(Box::new(move || {
                        orderwise_parent(fam, n, Parent::Toda(family))
                    }));
                }
            }
        }
        Suite::OrderwiseB => {
            for n in upto {
                for case in NakamuraCase::ALL {
                    jobs.push(Box::new(move || {
                        orderwise_parent(fam, n, Parent::Nakamura(case))
                    }));
                }
            }
        }
        Suite::ErnstNumeric => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xE5);
            for n in upto {
                let mut points = Vec::new();
                if n == 1 {
                    points.push(ErnstPoint::new(
                        GaussianRational::from_int(2),
                        GaussianRational::ratio(1, 2),
                        GaussianRational::from_int(1),
                    ));
                }
                points.extend((0..3).map(|_| ErnstPoint::random(&mut rng)));
                jobs.push(Box::new(move || ernst_reports(fam, n, &points)));
            }
        }
        Suite::Su11 => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5011);
            let params: Vec<Su11Params> = (0..5).map(|_| Su11Params::random(&mut rng)).collect();
            for (k, p) in params.into_iter().enumerate() {
                for n in with_next.clone() {
                    let p = p.clone();
                    jobs.push(Box::new(move || {
                        check_su11(fam, n, &p)
                            .into_iter()
                            .map(|mut r| {
                                r.order_index = Some(k as u32);
                                r
                            })
                            .collect()
                    }));
                }
            }
        }
    }
    jobs
}

/// Runs the suites in registry order, jobs within a suite concurrently.
/// Duplicate suite names run once.
pub fn run_suites(fam: &TauFamily, suites: &[Suite], cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut selected = suites.to_vec();
    selected.sort();
    selected.dedup();
    let mut out = Vec::new();
    for suite in selected {
        let jobs = suite_jobs(suite, fam, cfg);
        let reports: Vec<CheckReport> = jobs.par_iter().flat_map_iter(|job| job()).collect();
        let failed = reports.iter().any(|r| r.status == Status::Fail);
        out.extend(reports);
        if failed && cfg.fail_fast {
            break;
        }
    }
    out.sort_by_key(CheckReport::sort_key);
    out
}

/// Fraction-free elimination against cofactor expansion on the `g` and `f`
/// Wronskians of dimension `dim`.
fn det_oracle(dim: usize) -> Vec<CheckReport> {
    let big = wronskian_matrix(&crate::wronskian::build_psi(), dim + 1);
    let g_block = leading_block(&big, dim);
    let f_block = match minor(&big, &[0], &[0]) {
        Ok(m) => leading_block(&m, dim),
        Err(e) => return vec![error_report("det-oracle", dim, e)],
    };
    [g_block, f_block]
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let started = Instant::now();
            let pair = determinant(m, DetAlgorithm::FractionFree)
                .and_then(|a| determinant(m, DetAlgorithm::Cofactor).map(|b| (a, b)));
            let mut r = match pair {
                Ok((a, b)) => {
                    CheckReport::from_sides("det-oracle", dim as u32, None, &a, &b, started)
                }
                Err(e) => error_report("det-oracle", dim, e),
            };
            r.order_index = Some(k as u32);
            r
        })
        .collect()
}

fn leading_block(m: &SymMatrix, k: usize) -> SymMatrix {
    SymMatrix::from_rows(
        (0..k)
            .map(|i| (0..k).map(|j| m.get(i, j).clone()).collect())
            .collect(),
    )
}

fn closed_form_w() -> Vec<CheckReport> {
    (2..=12)
        .map(|n| {
            let started = Instant::now();
            CheckReport::from_sides("W", n as u32, None, &w_formula(n), &w_recursive(n), started)
        })
        .collect()
}

fn closed_form_q0() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for (id, closed, matrix) in [
            ("q0:g", g_q0_closed(n), w_matrix_g(n)),
            ("q0:f", f_q0_closed(n), w_matrix_f(n)),
        ] {
            let started = Instant::now();
            out.push(match determinant(&matrix, DetAlgorithm::FractionFree) {
                Ok(det) => CheckReport::from_sides(id, n as u32, None, &closed, &det, started),
                Err(e) => error_report(id, n, e),
            });
        }
    }
    out
}

fn closed_form_a() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (n, expected) in [(1usize, 1i64), (2, 1), (3, 4), (4, 144)] {
        let started = Instant::now();
        let got = a_coeff(n);
        let holds = got == expected.into();
        out.push(CheckReport::from_bool(
            "A",
            n as u32,
            holds,
            Some(format!("A_{n} = {got}")),
            started,
        ));
    }
    for n in 2..=5 {
        let started = Instant::now();
        out.push(
            CheckReport::from_bool(
                "A-recursion",
                n as u32,
                a_recursion_squared_holds(n),
                None,
                started,
            )
            .with_note("A_{n-1} A_{n+1} = n² A_n²"),
        );
    }
    let started = Instant::now();
    let printed = a_recursion_printed_holds(3);
    out.push(
        CheckReport::from_bool(
            "A-recursion-unsquared-refuted",
            3,
            !printed,
            Some("A_2 A_4 = 9 A_3 unexpectedly holds".into()),
            started,
        )
        .with_note(format!(
            "A_{{n-1}} A_{{n+1}} = n² A_n {} at n=3 ({} vs {})",
            if printed { "holds" } else { "fails" },
            a_coeff(2) * a_coeff(4),
            a_coeff(3) * 9
        )),
    );
    out
}

fn uv(p: &str) -> LaurentPoly {
    p.parse::<LaurentPoly>()
        .expect("anchor literal")
        .basis_uv(BasisDirection::FromUv)
        .expect("polynomial anchor")
}

fn closed_form_anchors() -> Vec<CheckReport> {
    // written in the (u, v) slots x <- u, y <- v
    let started = Instant::now();
    let g = CheckReport::from_sides("anchor:g2", 2, None, &g_high(2), &uv("4*x*y^3"), started);
    let started = Instant::now();
    let f = match f_high(2) {
        Ok(fh) => {
            CheckReport::from_sides("anchor:f2", 2, None, &fh, &uv("2*x*(x^2+3*y^2-1)"), started)
        }
        Err(e) => error_report("anchor:f2", 2, e),
    };
    vec![g, f]
}

fn closed_form_extremes(fam: &TauFamily, n: usize) -> Vec<CheckReport> {
    let ni = n as i32;
    let mut out = Vec::new();
    let mut push =
        |id: &str, closed: Result<LaurentPoly, crate::AlgebraError>, actual: LaurentPoly| {
            let started = Instant::now();
            out.push(match closed {
                Ok(c) => CheckReport::from_sides(id, n as u32, None, &c, &actual, started),
                Err(e) => error_report(id, n, e),
            });
        };
    push("high:g", Ok(g_high(n)), fam.g_coeff(n, ni));
    push("low:g", Ok(g_low(n)), fam.g_coeff(n, -ni));
    push("high:f", f_high(n), fam.f_coeff(n, ni - 1));
    push("low:f", f_low(n), fam.f_coeff(n, -ni + 1));
    out
}

/// Top-order Toda and mixed equations on the closed forms alone.
fn highest_order_toda_closed(n: usize) -> Vec<CheckReport> {
    let gh = |k: usize| {
        if k == 0 {
            LaurentPoly::one()
        } else {
            g_high(k)
        }
    };
    let fh = |k: usize| -> Result<LaurentPoly, crate::AlgebraError> {
        if k == 0 {
            Ok(LaurentPoly::zero())
        } else {
            f_high(k)
        }
    };
    let started = Instant::now();
    let (gn, gp, gm) = (gh(n), gh(n + 1), gh(n - 1));
    let g_rep = CheckReport::from_sides(
        "ghtodeq",
        n as u32,
        None,
        &hirota_dst(&gn, &gn),
        &(&gp * &gm).scale_int(2),
        started,
    );
    let f_side = (|| -> Result<_, crate::AlgebraError> { Ok((fh(n)?, fh(n + 1)?, fh(n - 1)?)) })();
    let (fn_, fp, fm) = match f_side {
        Ok(v) => v,
        Err(e) => {
            return vec![
                g_rep,
                error_report("fhtodeq", n, &e),
                error_report("gfhtodeq", n, e),
            ]
        }
    };
    let started = Instant::now();
    let f_rep = CheckReport::from_sides(
        "fhtodeq",
        n as u32,
        None,
        &hirota_dst(&fn_, &fn_),
        &(&fp * &fm).scale_int(2),
        started,
    );
    let started = Instant::now();
    // second term read as f̃_{n-1}^{(n-2)} g̃_{n+1}^{(n+1)}, the only product of that t-degree
    let gf_rhs = &(&fp * &gm) + &(&fm * &gp);
    let gf_rep = CheckReport::from_sides(
        "gfhtodeq",
        n as u32,
        None,
        &hirota_dst(&fn_, &gn),
        &gf_rhs,
        started,
    );
    vec![g_rep, f_rep, gf_rep]
}

/// The `t = 1` slice: Wronskian vs closed forms, and the conjecture's
/// `F` equations in the x-only form.
fn weyl_q0(fam: &TauFamily, n: usize) -> Vec<CheckReport> {
    let one = GaussianRational::from_int(1);
    let (gq, fq) = (g_q0_closed(n), f_q0_closed(n));
    let mut out = Vec::new();
    for (id, poly, closed) in [("weyl:g", fam.g(n), &gq), ("weyl:f", fam.f(n), &fq)] {
        let started = Instant::now();
        out.push(match poly.specialize_t(&one) {
            Ok(p) => CheckReport::from_sides(id, n as u32, None, &p, closed, started),
            Err(e) => error_report(id, n, e),
        });
    }
    let started = Instant::now();
    let both = apply_f_weyl(n as u32, &gq, &fq).and_then(|gf| {
        let gg = apply_f_weyl(n as u32, &gq, &gq)?;
        let ff = apply_f_weyl(n as u32, &fq, &fq)?;
        Ok((gf, &gg + &ff))
    });
    match both {
        Ok((gf, sum)) => {
            out.push(CheckReport::from_residual(
                "weyl:tsdec3",
                n as u32,
                None,
                &gf,
                started,
            ));
            out.push(CheckReport::from_residual(
                "weyl:tsdec4",
                n as u32,
                None,
                &sum,
                started,
            ));
        }
        Err(e) => out.push(error_report("weyl:tsdec", n, e)),
    }
    out
}

fn random_x_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let degree = rng.gen_range(0..=6);
    LaurentPoly::from_terms((0..=degree).filter_map(|e| {
        let c = rng.gen_range(-9..=9);
        (c != 0).then(|| {
            (
                crate::Monomial::new(e, 0, 0),
                GaussianRational::complex(
                    c,
                    rng.gen_range(1..=5),
                    rng.gen_range(-3..=3),
                    rng.gen_range(1..=3),
                ),
            )
        })
    }))
}

/// `F` through the general operator against the x-only form on random
/// inputs of degree at most 6.
pub fn weyl_convention(seed: u64, samples: usize) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3E71);
    (0..samples)
        .map(|k| {
            let n = rng.gen_range(1..=6u32);
            let a = random_x_poly(&mut rng);
            let b = random_x_poly(&mut rng);
            let started = Instant::now();
            let general = FOperator::new(n).apply(&a, &b);
            let mut r = match apply_f_weyl(n, &a, &b) {
                Ok(w) => CheckReport::from_sides("weyl:convention", n, None, &general, &w, started),
                Err(e) => error_report("weyl:convention", n as usize, e),
            };
            r.order_index = Some(k as u32);
            r
        })
        .collect()
}

fn orderwise_parent(fam: &TauFamily, n: usize, parent: Parent) -> Vec<CheckReport> {
    let (g, f) = Sequences::of(fam);
    let s = Sequences { g: &g, f: &f };
    let mut out: Vec<CheckReport> = (0..=parent.max_order(n))
        .map(|order| {
            check_orderwise(s, n, order, parent)
                .unwrap_or_else(|e| error_report(parent.key(), n, e))
        })
        .collect();
    out.push(
        check_orderwise_sum(s, n, parent).unwrap_or_else(|e| error_report(parent.key(), n, e)),
    );
    out
}
