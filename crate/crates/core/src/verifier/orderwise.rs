//! Order-by-order form of the Toda, mixed and conjecture identities.
//!
//! Each parent identity is a Laurent polynomial in `t`; the equation at order
//! index `I` is its coefficient of `t^{k(I)}`, written as a convolution of the
//! coefficients `g̃_n^{(m)}`, `f̃_n^{(m)}`. Orders up to the middle use the
//! explicit index sums. Orders past the middle are obtained from their partner
//! `I'` (with `k(I') = -k(I)`) by `y -> -y`, and cross-checked against a plain
//! convolution of the `t`-coefficients.

use std::time::Instant;

use super::CheckReport;
use crate::closedform::{f_high, f_low, g_high, g_low};
use crate::error::{AlgebraError, OrderwiseError};
use crate::exactalg::{LaurentPoly, Substitution};
use crate::operators::{hirota_d, hirota_dst, FOperator, HirotaVar};
use crate::wronskian::TauFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TodaFamily {
    G,
    F,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NakamuraCase {
    /// `D_x(g·f - g*·f*) = 0`
    B1,
    /// `D_y(g·f + g*·f*) = 0`
    B2,
    /// `F(g*·f) = 0`
    B3,
    /// `F(g*·g + f*·f) = 0`
    B4,
}

impl TodaFamily {
    pub const ALL: [TodaFamily; 3] = [TodaFamily::G, TodaFamily::F, TodaFamily::Mixed];

    pub fn key(self) -> &'static str {
        match self {
            TodaFamily::G => "g",
            TodaFamily::F => "f",
            TodaFamily::Mixed => "mixed",
        }
    }
}

impl NakamuraCase {
    pub const ALL: [NakamuraCase; 4] = [
        NakamuraCase::B1,
        NakamuraCase::B2,
        NakamuraCase::B3,
        NakamuraCase::B4,
    ];

    pub fn key(self) -> &'static str {
        match self {
            NakamuraCase::B1 => "B1",
            NakamuraCase::B2 => "B2",
            NakamuraCase::B3 => "B3",
            NakamuraCase::B4 => "B4",
        }
    }
}

/// A parent identity of the order-by-order expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parent {
    Toda(TodaFamily),
    Nakamura(NakamuraCase),
}

impl Parent {
    pub fn key(self) -> &'static str {
        match self {
            Parent::Toda(f) => f.key(),
            Parent::Nakamura(c) => c.key(),
        }
    }

    /// `t`-exponent of order `I`: `k = top - 2I`.
    fn top(self, n: i32) -> i32 {
        match self {
            Parent::Toda(TodaFamily::G) | Parent::Nakamura(NakamuraCase::B4) => 2 * n,
            Parent::Toda(TodaFamily::F) => 2 * n - 2,
            _ => 2 * n - 1,
        }
    }

    pub fn exponent(self, n: usize, order: usize) -> i32 {
        self.top(n as i32) - 2 * order as i32
    }

    /// Largest valid `I`; the range is symmetric, `k(max) = -k(0)`.
    pub fn max_order(self, n: usize) -> usize {
        self.top(n as i32) as usize
    }

    fn needs_next_level(self) -> bool {
        matches!(self, Parent::Toda(_))
    }

    /// Sign `s` in `side_I(x, y) = s · side_{I'}(x, -y)`. `D_y` is odd in `y`.
    fn mirror_sign(self) -> i64 {
        match self {
            Parent::Nakamura(NakamuraCase::B2) => -1,
            _ => 1,
        }
    }

    /// Case label and whether the order is a mirror of a lower one.
    pub fn case_id(self, n: usize, order: usize) -> (&'static str, bool) {
        let mid = match self {
            Parent::Toda(TodaFamily::F) | Parent::Toda(TodaFamily::Mixed) => n - 1,
            _ => n,
        };
        let (low, middle, mirror) = match self {
            Parent::Toda(TodaFamily::G) => ("TD1", "TD2", "TD3"),
            Parent::Toda(TodaFamily::F) => ("TD4", "TD5", "TD6"),
            Parent::Toda(TodaFamily::Mixed) => ("TD7", "TD8", "TD9"),
            Parent::Nakamura(NakamuraCase::B1) => ("B.1", "B.2", "B.3"),
            Parent::Nakamura(NakamuraCase::B2) => ("B.4", "B.5", "B.6"),
            Parent::Nakamura(NakamuraCase::B3) => ("B.7", "B.8", "B.9"),
            Parent::Nakamura(NakamuraCase::B4) => ("B.10", "B.11", "B.12"),
        };
        if self == Parent::Nakamura(NakamuraCase::B4) {
            // highest order is its own case, the middle joins the generic range
            return match order {
                0 => (middle, false),
                o if o <= n => (low, false),
                _ => (mirror, true),
            };
        }
        match order {
            o if o < mid => (low, false),
            o if o == mid => (middle, false),
            _ => (mirror, true),
        }
    }
}

/// Borrowed `g_0..g_N`, `f_0..f_N` (with `f_0 = 0`).
#[derive(Clone, Copy)]
pub struct Sequences<'a> {
    pub g: &'a [LaurentPoly],
    pub f: &'a [LaurentPoly],
}

impl<'a> Sequences<'a> {
    pub fn of(fam: &'a TauFamily) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
        let g = (0..=fam.n_max()).map(|k| fam.g(k).clone()).collect();
        let f = (0..=fam.n_max()).map(|k| fam.f(k).clone()).collect();
        (g, f)
    }

    fn levels(&self) -> usize {
        self.g.len().min(self.f.len())
    }

    fn gc(&self, n: i64, m: i64) -> LaurentPoly {
        self.g[n as usize].coeff_of_t(m as i32)
    }

    fn fc(&self, n: i64, m: i64) -> LaurentPoly {
        self.f[n as usize].coeff_of_t(m as i32)
    }
}

type Bilinear = fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly;

fn product(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a * b
}

fn dx(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    hirota_d(HirotaVar::X, a, b, 1)
}

fn dy(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    hirota_d(HirotaVar::Y, a, b, 1)
}

/// Coefficient of `t^k` in `op(p, q)` as `Σ_{a+b=k} op(p^{(a)}, q^{(k-a)})`.
fn convolve(
    op: &dyn Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly,
    p: &LaurentPoly,
    q: &LaurentPoly,
    k: i32,
) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (a, pa) in p.t_coefficients() {
        let qb = q.coeff_of_t(k - a);
        if !qb.is_zero() {
            acc += &op(&pa, &qb);
        }
    }
    acc
}

fn sum_j(range: std::ops::RangeInclusive<i64>, term: impl Fn(i64) -> LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for j in range {
        acc += &term(j);
    }
    acc
}

/// Both sides of the full parent identity at level `n`.
pub fn parent_sides(s: Sequences<'_>, n: usize, parent: Parent) -> (LaurentPoly, LaurentPoly) {
    let (g, f) = (&s.g[n], &s.f[n]);
    match parent {
        Parent::Toda(TodaFamily::G) => (hirota_dst(g, g), (&s.g[n + 1] * &s.g[n - 1]).scale_int(2)),
        Parent::Toda(TodaFamily::F) => (hirota_dst(f, f), (&s.f[n + 1] * &s.f[n - 1]).scale_int(2)),
        Parent::Toda(TodaFamily::Mixed) => (
            hirota_dst(f, g),
            &(&s.f[n + 1] * &s.g[n - 1]) + &(&s.f[n - 1] * &s.g[n + 1]),
        ),
        Parent::Nakamura(case) => {
            let (gs, fs) = (g.star(), f.star());
            let fop = FOperator::new(n as u32);
            match case {
                NakamuraCase::B1 => (dx(g, f), dx(&gs, &fs)),
                NakamuraCase::B2 => (dy(g, f), -dy(&gs, &fs)),
                NakamuraCase::B3 => (fop.apply(&gs, f), LaurentPoly::zero()),
                NakamuraCase::B4 => (fop.apply(&gs, g), -fop.apply(&fs, f)),
            }
        }
    }
}

/// Sides at order `I` by convolving `t`-coefficients of the parent's factors.
pub fn convolution_sides(
    s: Sequences<'_>,
    n: usize,
    order: usize,
    parent: Parent,
) -> (LaurentPoly, LaurentPoly) {
    let k = parent.exponent(n, order);
    let (g, f) = (&s.g[n], &s.f[n]);
    let dst = |a: &LaurentPoly, b: &LaurentPoly| hirota_dst(a, b);
    match parent {
        Parent::Toda(TodaFamily::G) => (
            convolve(&dst, g, g, k),
            convolve(&product, &s.g[n + 1], &s.g[n - 1], k).scale_int(2),
        ),
        Parent::Toda(TodaFamily::F) => (
            convolve(&dst, f, f, k),
            convolve(&product, &s.f[n + 1], &s.f[n - 1], k).scale_int(2),
        ),
        Parent::Toda(TodaFamily::Mixed) => (
            convolve(&dst, f, g, k),
            &convolve(&product, &s.f[n + 1], &s.g[n - 1], k)
                + &convolve(&product, &s.f[n - 1], &s.g[n + 1], k),
        ),
        Parent::Nakamura(case) => {
            let (gs, fs) = (g.star(), f.star());
            let fop = FOperator::new(n as u32);
            let fapply = |a: &LaurentPoly, b: &LaurentPoly| fop.apply(a, b);
            match case {
                NakamuraCase::B1 => (convolve(&dx, g, f, k), convolve(&dx, &gs, &fs, k)),
                NakamuraCase::B2 => (convolve(&dy, g, f, k), -convolve(&dy, &gs, &fs, k)),
                NakamuraCase::B3 => (convolve(&fapply, &gs, f, k), LaurentPoly::zero()),
                NakamuraCase::B4 => (convolve(&fapply, &gs, g, k), -convolve(&fapply, &fs, f, k)),
            }
        }
    }
}

/// Sides at order `I <= middle` from the explicit index sums.
fn formula_sides(
    s: Sequences<'_>,
    n: usize,
    order: usize,
    parent: Parent,
) -> (LaurentPoly, LaurentPoly) {
    let (n, i) = (n as i64, order as i64);
    let gc = |m: i64, a: i64| s.gc(m, a);
    let fc = |m: i64, a: i64| s.fc(m, a);
    let (case, _) = parent.case_id(n as usize, order);
    match case {
        "TD1" => (
            sum_j(0..=i, |j| {
                hirota_dst(&gc(n, n - 2 * j), &gc(n, n - 2 * i + 2 * j))
            }),
            sum_j(0..=i, |j| {
                &gc(n + 1, n - 2 * j + 1) * &gc(n - 1, n - 2 * i + 2 * j - 1)
            })
            .scale_int(2),
        ),
        "TD2" => (
            sum_j(0..=n, |j| hirota_dst(&gc(n, n - 2 * j), &gc(n, -n + 2 * j))),
            sum_j(1..=n, |j| {
                &gc(n + 1, n - 2 * j + 1) * &gc(n - 1, -n + 2 * j - 1)
            })
            .scale_int(2),
        ),
        "TD4" => (
            sum_j(0..=i, |j| {
                hirota_dst(&fc(n, n - 2 * j - 1), &fc(n, n - 2 * i + 2 * j - 1))
            }),
            sum_j(0..=i, |j| {
                &fc(n + 1, n - 2 * j) * &fc(n - 1, n - 2 * i + 2 * j - 2)
            })
            .scale_int(2),
        ),
        "TD5" => (
            sum_j(0..=n - 1, |j| {
                hirota_dst(&fc(n, n - 2 * j - 1), &fc(n, -n + 2 * j + 1))
            }),
            sum_j(1..=n - 1, |j| {
                &fc(n + 1, n - 2 * j) * &fc(n - 1, -n + 2 * j)
            })
            .scale_int(2),
        ),
        "TD7" => (
            sum_j(0..=i, |j| {
                hirota_dst(&fc(n, n - 2 * j - 1), &gc(n, n - 2 * i + 2 * j))
            }),
            sum_j(0..=i, |j| {
                &(&fc(n + 1, n - 2 * j) * &gc(n - 1, n - 2 * i + 2 * j - 1))
                    + &(&fc(n - 1, n - 2 * j - 2) * &gc(n + 1, n - 2 * i + 2 * j + 1))
            }),
        ),
        "TD8" => (
            sum_j(0..=n - 1, |j| {
                hirota_dst(&fc(n, n - 2 * j - 1), &gc(n, -n + 2 * j + 2))
            }),
            &sum_j(0..=n - 1, |j| {
                &fc(n + 1, n - 2 * j) * &gc(n - 1, -n + 2 * j + 1)
            }) + &sum_j(0..=n - 2, |j| {
                &fc(n - 1, n - 2 * j - 2) * &gc(n + 1, -n + 2 * j + 3)
            }),
        ),
        "B.1" | "B.4" | "B.2" | "B.5" => {
            let along_x = matches!(case, "B.1" | "B.2");
            let op: Bilinear = if along_x { dx } else { dy };
            let (plain, starred) = if matches!(case, "B.1" | "B.4") {
                (
                    sum_j(0..=i, |j| {
                        op(&gc(n, n - 2 * j), &fc(n, n - 2 * i + 2 * j - 1))
                    }),
                    sum_j(0..=i, |j| {
                        op(&gc(n, -n + 2 * j), &fc(n, -n + 2 * i - 2 * j + 1))
                    }),
                )
            } else {
                (
                    sum_j(1..=n, |j| op(&gc(n, n - 2 * j), &fc(n, -n + 2 * j - 1))),
                    sum_j(1..=n, |j| op(&gc(n, -n + 2 * j), &fc(n, n - 2 * j + 1))),
                )
            };
            if along_x {
                (plain, starred)
            } else {
                (plain, -starred)
            }
        }
        "B.7" | "B.8" => {
            let fop = FOperator::new(n as u32);
            let lhs = if case == "B.7" {
                sum_j(0..=i, |j| {
                    fop.apply(&gc(n, -n + 2 * j), &fc(n, n - 2 * i + 2 * j - 1))
                })
            } else {
                sum_j(1..=n, |j| {
                    fop.apply(&gc(n, -n + 2 * j), &fc(n, -n + 2 * j - 1))
                })
            };
            (lhs, LaurentPoly::zero())
        }
        "B.10" => {
            let fop = FOperator::new(n as u32);
            (
                sum_j(0..=i, |j| {
                    fop.apply(&gc(n, -n + 2 * j), &gc(n, n - 2 * i + 2 * j))
                }),
                -sum_j(0..=i, |j| {
                    fop.apply(&fc(n, -n + 2 * j + 1), &fc(n, n - 2 * i + 2 * j + 1))
                }),
            )
        }
        "B.11" => {
            let fop = FOperator::new(n as u32);
            (fop.apply(&gc(n, -n), &gc(n, n)), LaurentPoly::zero())
        }
        other => unreachable!("{other} is a mirror case"),
    }
}

fn validate(
    s: Sequences<'_>,
    n: usize,
    order: usize,
    parent: Parent,
) -> Result<&'static str, OrderwiseError> {
    if n == 0 {
        return Err(OrderwiseError::ZeroN);
    }
    let (case, _) = parent.case_id(n, order);
    let max = parent.max_order(n);
    if order > max {
        return Err(OrderwiseError::InvalidOrder {
            case,
            n,
            order,
            max,
        });
    }
    let needed = if parent.needs_next_level() {
        n + 2
    } else {
        n + 1
    };
    if s.levels() < needed {
        return Err(OrderwiseError::MissingLevel {
            case,
            n,
            available: s.levels(),
        });
    }
    Ok(case)
}

/// Order-`I` sides by the case route: explicit sums, or the partner's sides
/// under `y -> -y` for mirror orders.
pub fn case_sides(
    s: Sequences<'_>,
    n: usize,
    order: usize,
    parent: Parent,
) -> Result<(LaurentPoly, LaurentPoly), OrderwiseError> {
    validate(s, n, order, parent)?;
    let (_, mirror) = parent.case_id(n, order);
    if !mirror {
        return Ok(formula_sides(s, n, order, parent));
    }
    let partner = parent.max_order(n) - order;
    let (l, r) = formula_sides(s, n, partner, parent);
    let flip = |p: LaurentPoly| {
        p.substitute(Substitution::YNeg)
            .scale_int(parent.mirror_sign())
    };
    Ok((flip(l), flip(r)))
}

/// Checks the order-`I` identity on arbitrary sequences. Passing needs a zero
/// residual and agreement of both routes on each side.
pub fn check_orderwise(
    s: Sequences<'_>,
    n: usize,
    order: usize,
    parent: Parent,
) -> Result<CheckReport, OrderwiseError> {
    let started = Instant::now();
    let case = validate(s, n, order, parent)?;
    let (lhs, rhs) = case_sides(s, n, order, parent)?;
    let (clhs, crhs) = convolution_sides(s, n, order, parent);
    let mut report =
        CheckReport::from_sides(case, n as u32, Some(order as u32), &lhs, &rhs, started);
    if lhs != clhs || rhs != crhs {
        let diff = if lhs != clhs {
            &lhs - &clhs
        } else {
            &rhs - &crhs
        };
        report.status = super::Status::Fail;
        report.witness = Some(format!("routes disagree: {}", diff.leading_term_string()));
    }
    Ok(report)
}

fn family_sequences(fam: &TauFamily) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    Sequences::of(fam)
}

pub fn check_orderwise_toda(
    fam: &TauFamily,
    n: usize,
    order: usize,
    family: TodaFamily,
) -> Result<CheckReport, OrderwiseError> {
    let (g, f) = family_sequences(fam);
    check_orderwise(Sequences { g: &g, f: &f }, n, order, Parent::Toda(family))
}

pub fn check_orderwise_nakamura(
    fam: &TauFamily,
    n: usize,
    order: usize,
    which: NakamuraCase,
) -> Result<CheckReport, OrderwiseError> {
    let (g, f) = family_sequences(fam);
    check_orderwise(
        Sequences { g: &g, f: &f },
        n,
        order,
        Parent::Nakamura(which),
    )
}

/// `Σ_I side_I · t^{k(I)}` against the parent sides, on both sides.
pub fn check_orderwise_sum(
    s: Sequences<'_>,
    n: usize,
    parent: Parent,
) -> Result<CheckReport, OrderwiseError> {
    let started = Instant::now();
    validate(s, n, 0, parent)?;
    let (mut lsum, mut rsum) = (LaurentPoly::zero(), LaurentPoly::zero());
    for order in 0..=parent.max_order(n) {
        let (l, r) = case_sides(s, n, order, parent)?;
        let k = parent.exponent(n, order);
        lsum += &l.shift_t(k);
        rsum += &r.shift_t(k);
    }
    let (lhs, rhs) = parent_sides(s, n, parent);
    let mut report = CheckReport::from_sides(
        format!("sum:{}", parent.key()),
        n as u32,
        None,
        &(&lsum - &rsum),
        &(&lhs - &rhs),
        started,
    );
    if report.passed() && (lsum != lhs || rsum != rhs) {
        report.status = super::Status::Fail;
        report.witness = Some("side sums differ while residuals agree".into());
    }
    Ok(report)
}

pub const HNAK_IDS: [&str; 4] = ["hNak1", "hNak2", "hNak3", "hNak4"];

/// Highest-order conjecture equations evaluated on the closed-form extreme
/// coefficients, independent of the Wronskian.
pub fn check_highest_order_closed(n: usize) -> Result<Vec<CheckReport>, AlgebraError> {
    let started = Instant::now();
    let (gh, gl, fh, fl) = (g_high(n), g_low(n), f_high(n)?, f_low(n)?);
    let fop = FOperator::new(n as u32);
    let residuals = [
        &dx(&gh, &fh) - &dx(&gl, &fl),
        &dy(&gh, &fh) + &dy(&gl, &fl),
        fop.apply(&gl, &fh),
        fop.apply(&gl, &gh),
    ];
    Ok(residuals
        .iter()
        .zip(HNAK_IDS)
        .map(|(r, id)| CheckReport::from_residual(id, n as u32, Some(0), r, started))
        .collect())
}
