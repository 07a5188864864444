//! Bilinear Toda equation and the mixed `f`/`g` identity.

use std::time::Instant;

use super::CheckReport;
use crate::exactalg::LaurentPoly;
use crate::operators::hirota_dst;
use crate::wronskian::{FamilyKind, TauFamily};

/// `D_S D_T(a_n·a_n) - 2 a_{n+1} a_{n-1}` for an arbitrary sequence `a`.
pub fn toda_residual_sides(seq: &[LaurentPoly], n: usize) -> (LaurentPoly, LaurentPoly) {
    assert!(n >= 1 && n + 1 < seq.len(), "need a_(n-1), a_n, a_(n+1)");
    let lhs = hirota_dst(&seq[n], &seq[n]);
    let rhs = (&seq[n + 1] * &seq[n - 1]).scale_int(2);
    (lhs, rhs)
}

pub fn check_toda_sequence(id: &str, seq: &[LaurentPoly], n: usize) -> CheckReport {
    let started = Instant::now();
    let (lhs, rhs) = toda_residual_sides(seq, n);
    CheckReport::from_sides(id, n as u32, None, &lhs, &rhs, started)
}

/// Bilinear Toda equation for `τ`, `g` or `f` (with `f_0 = 0`).
pub fn check_toda(fam: &TauFamily, n: usize, which: FamilyKind) -> CheckReport {
    assert!(n < fam.n_max(), "check_toda needs n+1 <= n_max");
    let seq: Vec<LaurentPoly> = (n - 1..=n + 1).map(|k| fam.get(which, k).clone()).collect();
    let mut r = check_toda_sequence(&format!("toda:{}", which.key()), &seq, 1);
    r.n = n as u32;
    r
}

/// `D_S D_T(f_n·g_n)` against `f_{n+1}g_{n-1} + f_{n-1}g_{n+1}`.
pub fn mixed_sides(g: &[LaurentPoly], f: &[LaurentPoly], n: usize) -> (LaurentPoly, LaurentPoly) {
    assert!(n >= 1 && n + 1 < g.len() && n + 1 < f.len());
    let lhs = hirota_dst(&f[n], &g[n]);
    let mut rhs = &f[n + 1] * &g[n - 1];
    rhs += &(&f[n - 1] * &g[n + 1]);
    (lhs, rhs)
}

pub fn check_mixed_sequences(
    id: &str,
    g: &[LaurentPoly],
    f: &[LaurentPoly],
    n: usize,
) -> CheckReport {
    let started = Instant::now();
    let (lhs, rhs) = mixed_sides(g, f, n);
    CheckReport::from_sides(id, n as u32, None, &lhs, &rhs, started)
}

pub fn check_mixed(fam: &TauFamily, n: usize) -> CheckReport {
    assert!(n < fam.n_max(), "check_mixed needs n+1 <= n_max");
    let g: Vec<LaurentPoly> = (0..=n + 1).map(|k| fam.g(k).clone()).collect();
    let f: Vec<LaurentPoly> = (0..=n + 1).map(|k| fam.f(k).clone()).collect();
    check_mixed_sequences("mixed", &g, &f, n)
}
