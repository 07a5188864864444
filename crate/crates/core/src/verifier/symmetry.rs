//! Discrete symmetries of `g_n` and `f_n` in `t`, `y` and `x <-> y`.

use std::time::Instant;

use super::CheckReport;
use crate::exactalg::{GaussianRational, LaurentPoly, Substitution};
use crate::wronskian::{FamilyKind, TauFamily};

/// Exponent of `-i` in the `t -> it` rule: `n²` for `g`, `n² - 1` for `f`.
fn quarter_turn_power(kind: FamilyKind, n: usize) -> i64 {
    let sq = (n * n) as i64;
    match kind {
        FamilyKind::F => sq - 1,
        _ => sq,
    }
}

/// `(-i)^k`
fn minus_i_pow(k: i64) -> GaussianRational {
    GaussianRational::i_pow(-k)
}

/// Sign in `a(x, y; -t) = ± a(x, y; t)`.
fn parity_sign(kind: FamilyKind, n: usize) -> i64 {
    let e = match kind {
        FamilyKind::F => n + 1,
        _ => n,
    };
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Mirror identity of the Laurent coefficients: `ã^{(-m)}(x, y) = ã^{(m)}(x, -y)`.
pub fn mirror_residual(p: &LaurentPoly) -> LaurentPoly {
    let mut residual = LaurentPoly::zero();
    for (m, coeff) in p.t_coefficients() {
        let partner = p.coeff_of_t(-m).substitute(Substitution::YNeg);
        residual += &(&coeff - &partner).shift_t(m);
    }
    residual
}

/// Real coefficients, `t`-degree within `±n` (`±(n-1)` for `f`), and only
/// powers of `t` with the parity of the degree.
fn shape_violation(p: &LaurentPoly, kind: FamilyKind, n: usize) -> Option<String> {
    if !p.is_real() {
        return Some("non-real coefficient".into());
    }
    let top = match kind {
        FamilyKind::F => n as i32 - 1,
        _ => n as i32,
    };
    for (m, _) in p.t_coefficients() {
        if m.abs() > top {
            return Some(format!("t^{m} beyond degree {top}"));
        }
        if (top - m) % 2 != 0 {
            return Some(format!("t^{m} has the wrong parity"));
        }
    }
    None
}

fn family_checks(p: &LaurentPoly, kind: FamilyKind, n: usize) -> Vec<CheckReport> {
    let tag = kind.key();
    let nn = n as u32;
    let mut out = Vec::new();

    let started = Instant::now();
    let star = p.star();
    out.push(CheckReport::from_sides(
        format!("prop1:{tag}"),
        nn,
        None,
        &star,
        &p.substitute(Substitution::TInv),
        started,
    ));

    let started = Instant::now();
    out.push(CheckReport::from_sides(
        format!("prop2:{tag}"),
        nn,
        None,
        &star,
        &p.substitute(Substitution::YNeg),
        started,
    ));

    let started = Instant::now();
    out.push(CheckReport::from_sides(
        format!("prop3:{tag}"),
        nn,
        None,
        &p.substitute(Substitution::TNeg),
        &p.scale_int(parity_sign(kind, n)),
        started,
    ));

    let started = Instant::now();
    let rhs = p
        .substitute(Substitution::SwapXY)
        .scale(&minus_i_pow(quarter_turn_power(kind, n)));
    let mut prop4 = CheckReport::from_sides(
        format!("prop4:{tag}"),
        nn,
        None,
        &p.substitute(Substitution::TTimesI),
        &rhs,
        started,
    );
    if kind == FamilyKind::F {
        let printed = p
            .substitute(Substitution::SwapXY)
            .substitute(Substitution::TTimesI);
        let verdict = if printed == rhs { "holds" } else { "fails" };
        prop4 = prop4.with_note(format!(
            "tested as f_n(x,y;it); the variant f_n(y,x;it) {verdict} at this n"
        ));
    }
    out.push(prop4);

    let started = Instant::now();
    out.push(CheckReport::from_residual(
        format!("mirror:{tag}"),
        nn,
        None,
        &mirror_residual(p),
        started,
    ));

    let started = Instant::now();
    let violation = shape_violation(p, kind, n);
    let mut shape = CheckReport::from_bool(
        format!("shape:{tag}"),
        nn,
        violation.is_none(),
        violation,
        started,
    );
    shape.term_count = p.len();
    out.push(shape);

    out
}

/// prop1 to prop4 (with the `f` rule read as `f_n(x,y;it)`), the coefficient
/// mirror identity and the Laurent shape, for both `g_n` and `f_n`.
pub fn check_symmetries(fam: &TauFamily, n: usize) -> Vec<CheckReport> {
    assert!(n >= 1 && n <= fam.n_max());
    let mut out = family_checks(fam.g(n), FamilyKind::G, n);
    out.extend(family_checks(fam.f(n), FamilyKind::F, n));
    out
}
