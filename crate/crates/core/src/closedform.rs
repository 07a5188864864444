//! Closed-form reference polynomials used as independent cross-checks of the
//! Wronskian construction.
//!
//! Univariate objects (`W_n`, the `q = 0` tau functions) live in the variable
//! `x`. The highest/lowest `t`-coefficients are assembled in the `(u, v)`
//! basis, where `u = (x+y)/2` and `v = (x-y)/2`, and returned in `(x, y)`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::exactalg::{BasisDirection, GaussianRational, LaurentPoly, Monomial};
use crate::operators::{apply_l, DiffOp};
use crate::wronskian::SymMatrix;

fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

fn x_minus(c: i64) -> LaurentPoly {
    &LaurentPoly::x() - &LaurentPoly::mono(c, 0, 0, 0)
}

/// `W_1 = x`, `W_{k+1} = (x²-1) W_k'`.
pub fn w_recursive(n: usize) -> LaurentPoly {
    assert!(n >= 1, "W_n is defined for n >= 1");
    let mut w = LaurentPoly::x();
    for _ in 1..n {
        w = apply_l(DiffOp::LX, &w);
    }
    w
}

/// All of `W_1..=W_n` by recursion.
pub fn w_sequence(n: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::with_capacity(n);
    let mut w = LaurentPoly::x();
    for _ in 0..n {
        let next = apply_l(DiffOp::LX, &w);
        out.push(std::mem::replace(&mut w, next));
    }
    out
}

/// The explicit double-sum formula for `W_n`, `n >= 2`.
pub fn w_formula(n: usize) -> LaurentPoly {
    assert!(n >= 2, "the binomial formula holds for n >= 2");
    let nn = BigInt::from(n as u64);
    let mut out = LaurentPoly::zero();
    for m in 0..=n - 2 {
        let mut coeff = BigInt::zero();
        for l in 0..=m {
            let base = BigInt::from((m - l + 1) as u64);
            let term = num_traits::pow(base, n - 1) * binomial(nn.clone(), BigInt::from(l as u64));
            if l % 2 == 0 {
                coeff += term;
            } else {
                coeff -= term;
            }
        }
        if coeff.is_zero() {
            continue;
        }
        let plus = x_minus(-1).pow((m + 1) as u32);
        let minus = x_minus(1).pow((n - m - 1) as u32);
        out += &(&plus * &minus).scale(&GaussianRational::real(BigRational::from_integer(coeff)));
    }
    out
}

/// `A_n = (Π_{j=1}^{n} (j-1)!)²`.
pub fn a_coeff(n: usize) -> BigInt {
    assert!(n >= 1, "A_n is defined for n >= 1");
    let prod = (1..=n as u64).fold(BigInt::one(), |acc, j| acc * factorial(j - 1));
    &prod * &prod
}

/// `A_{n-1}A_{n+1} = n²A_n` as printed alongside the `q = 0` induction.
pub fn a_recursion_printed_holds(n: usize) -> bool {
    assert!(n >= 2);
    a_coeff(n - 1) * a_coeff(n + 1) == BigInt::from((n * n) as u64) * a_coeff(n)
}

/// `A_{n-1}A_{n+1} = n²A_n²`, the form the induction actually needs.
pub fn a_recursion_squared_holds(n: usize) -> bool {
    assert!(n >= 2);
    let an = a_coeff(n);
    a_coeff(n - 1) * a_coeff(n + 1) == BigInt::from((n * n) as u64) * &an * &an
}

fn q0_closed(n: usize, sign: i64) -> LaurentPoly {
    assert!(n >= 1);
    let half_a = GaussianRational::real(BigRational::new(a_coeff(n), BigInt::from(2)));
    let x2m1 = &LaurentPoly::mono(1, 2, 0, 0) - &LaurentPoly::one();
    let bracket = &x_minus(-1).pow(n as u32) + &x_minus(1).pow(n as u32).scale_int(sign);
    (&x2m1.pow((n * (n - 1) / 2) as u32) * &bracket).scale(&half_a)
}

/// `(A_n/2)(x²-1)^{n(n-1)/2}[(x+1)^n + (x-1)^n]`.
pub fn g_q0_closed(n: usize) -> LaurentPoly {
    q0_closed(n, 1)
}

/// `(A_n/2)(x²-1)^{n(n-1)/2}[(x+1)^n - (x-1)^n]`.
pub fn f_q0_closed(n: usize) -> LaurentPoly {
    q0_closed(n, -1)
}

/// `[W_{i+j+1}]_{i,j<n}`, the `q = 0` Wronskian for `g_n`.
pub fn w_matrix_g(n: usize) -> SymMatrix {
    let w = w_sequence(2 * n);
    SymMatrix::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| w[i + j].clone()).collect())
            .collect(),
    )
}

/// `[W_{i+j+3}]_{i,j<n-1}`, the `q = 0` Wronskian for `f_n`.
pub fn w_matrix_f(n: usize) -> SymMatrix {
    let w = w_sequence(2 * n + 1);
    let k = n.saturating_sub(1);
    SymMatrix::from_rows(
        (0..k)
            .map(|i| (0..k).map(|j| w[i + j + 2].clone()).collect())
            .collect(),
    )
}

/// `Γ(k + 1/2)/√π = (2k)! / (4^k k!)`.
fn half_gamma_over_sqrt_pi(k: u64) -> BigRational {
    BigRational::new(
        factorial(2 * k),
        num_traits::pow(BigInt::from(4), k as usize) * factorial(k),
    )
}

/// The rational Gamma ratio
/// `Γ((2m+1)/2) Γ((2(n-l)+1)/2) / [√π Γ((2(m-l)+3)/2) Γ(l+1) Γ(m-l+1) Γ(n-m)]`
/// for `0 <= l <= m <= n-1`.
pub fn half_gamma_ratio(m: usize, l: usize, n: usize) -> BigRational {
    assert!(l <= m && m < n, "need 0 <= l <= m <= n-1");
    let (m, l, n) = (m as u64, l as u64, n as u64);
    let num = half_gamma_over_sqrt_pi(m) * half_gamma_over_sqrt_pi(n - l);
    let den = half_gamma_over_sqrt_pi(m - l + 1)
        * BigRational::from_integer(factorial(l) * factorial(m - l) * factorial(n - m - 1));
    num / den
}

fn uv_to_xy(p: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
    p.basis_uv(BasisDirection::FromUv)
}

/// `2^{n(n-1)} A_n u^a v^b` in the `(u, v)` slots.
fn g_extreme_uv(n: usize, u_exp: i32, v_exp: i32) -> LaurentPoly {
    let c = num_traits::pow(BigInt::from(2), n * (n - 1)) * a_coeff(n);
    LaurentPoly::term(
        GaussianRational::real(BigRational::from_integer(c)),
        Monomial::new(u_exp, v_exp, 0),
    )
}

fn tri(n: usize) -> (i32, i32) {
    ((n * (n - 1) / 2) as i32, (n * (n + 1) / 2) as i32)
}

/// Highest `t`-coefficient of `g_n`: `2^{n(n-1)} A_n u^{n(n-1)/2} v^{n(n+1)/2}`.
pub fn g_high(n: usize) -> LaurentPoly {
    let (a, b) = tri(n);
    uv_to_xy(&g_extreme_uv(n, a, b)).expect("nonnegative exponents")
}

/// Lowest `t`-coefficient of `g_n`, the `u ↔ v` mirror of [`g_high`].
pub fn g_low(n: usize) -> LaurentPoly {
    let (a, b) = tri(n);
    uv_to_xy(&g_extreme_uv(n, b, a)).expect("nonnegative exponents")
}

/// `Σ_{m<n} Σ_{l<=m} (-1)^{l-m} ratio(m,l,n) u^{2l} v^{-2m-1}`, with the
/// roles of `u` and `v` swapped when `mirror` is set.
fn gamma_sum_uv(n: usize, mirror: bool) -> LaurentPoly {
    let mut terms = Vec::new();
    for m in 0..n {
        for l in 0..=m {
            let mut c = half_gamma_ratio(m, l, n);
            if (m - l) % 2 == 1 {
                c = -c;
            }
            let (pos, neg) = (2 * l as i32, -(2 * m as i32) - 1);
            let mono = if mirror {
                Monomial::new(neg, pos, 0)
            } else {
                Monomial::new(pos, neg, 0)
            };
            terms.push((mono, GaussianRational::real(c)));
        }
    }
    LaurentPoly::from_terms(terms)
}

fn f_extreme(n: usize, mirror: bool) -> Result<LaurentPoly, AlgebraError> {
    let (a, b) = tri(n);
    let g = if mirror {
        g_extreme_uv(n, b, a)
    } else {
        g_extreme_uv(n, a, b)
    };
    let product = &g * &gamma_sum_uv(n, mirror);
    // A negative exponent surviving here means the formula is mistranscribed.
    product.check_xy_nonnegative()?;
    uv_to_xy(&product)
}

/// Highest `t`-coefficient of `f_n` from the Gamma-sum formula.
pub fn f_high(n: usize) -> Result<LaurentPoly, AlgebraError> {
    f_extreme(n, false)
}

/// Lowest `t`-coefficient of `f_n`, the `u ↔ v` mirror of [`f_high`].
pub fn f_low(n: usize) -> Result<LaurentPoly, AlgebraError> {
    f_extreme(n, true)
}

/// All closed forms for `n = 1..=n_max` (index 0 unused except for `W`).
#[derive(Clone, Debug)]
pub struct ClosedFormTable {
    pub w: Vec<LaurentPoly>,
    pub a: Vec<BigInt>,
    pub g_q0: Vec<LaurentPoly>,
    pub f_q0: Vec<LaurentPoly>,
    pub g_high: Vec<LaurentPoly>,
    pub g_low: Vec<LaurentPoly>,
    pub f_high: Vec<LaurentPoly>,
    pub f_low: Vec<LaurentPoly>,
}

impl ClosedFormTable {
    pub fn build(n_max: usize) -> Result<Self, AlgebraError> {
        let ns = 1..=n_max;
        let mut w = vec![LaurentPoly::zero()];
        w.extend(w_sequence(2 * n_max + 1));
        let pad = |v: Vec<LaurentPoly>| {
            let mut out = vec![LaurentPoly::zero()];
            out.extend(v);
            out
        };
        let mut a = vec![BigInt::zero()];
        a.extend(ns.clone().map(a_coeff));
        debug_assert!(a[1..].iter().all(|v| v.is_positive()));
        Ok(Self {
            w,
            a,
            g_q0: pad(ns.clone().map(g_q0_closed).collect()),
            f_q0: pad(ns.clone().map(f_q0_closed).collect()),
            g_high: pad(ns.clone().map(g_high).collect()),
            g_low: pad(ns.clone().map(g_low).collect()),
            f_high: pad(ns.clone().map(f_high).collect::<Result<_, _>>()?),
            f_low: pad(ns.map(f_low).collect::<Result<_, _>>()?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse;
    use crate::wronskian::{determinant, DetAlgorithm};

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn w_small() {
        assert_eq!(w_recursive(1), parse("x").unwrap());
        assert_eq!(w_recursive(2), parse("x^2-1").unwrap());
        assert_eq!(w_recursive(3), parse("2*x*(x^2-1)").unwrap());
        assert_eq!(w_recursive(4), parse("(x^2-1)*(6*x^2-2)").unwrap());
        assert_eq!(w_formula(2), parse("x^2-1").unwrap());
        assert_eq!(w_formula(3), w_recursive(3));
        assert_eq!(w_formula(8), w_recursive(8));
    }

    #[test]
    fn a_values() {
        let expect = [1, 1, 4, 144];
        for (k, v) in expect.iter().enumerate() {
            assert_eq!(a_coeff(k + 1), BigInt::from(*v));
        }
        assert!(!a_recursion_printed_holds(3));
        assert!(a_recursion_squared_holds(3));
    }

    #[test]
    fn gamma_ratio_values() {
        assert_eq!(half_gamma_ratio(0, 0, 1), ratio(1, 1));
        assert_eq!(half_gamma_ratio(0, 0, 2), ratio(3, 2));
        assert_eq!(half_gamma_ratio(1, 1, 2), ratio(1, 2));
        assert_eq!(half_gamma_ratio(1, 0, 2), ratio(1, 2));
    }

    #[test]
    fn q0_closed_forms() {
        assert_eq!(g_q0_closed(1), parse("x").unwrap());
        assert_eq!(f_q0_closed(1), parse("1").unwrap());
        assert_eq!(g_q0_closed(2), parse("(x^2-1)*(x^2+1)").unwrap());
        assert_eq!(g_q0_closed(3), parse("4*x*(x^2-1)^3*(x^2+3)").unwrap());
        let det = determinant(&w_matrix_g(2), DetAlgorithm::Cofactor).unwrap();
        assert_eq!(det, g_q0_closed(2));
    }

    #[test]
    fn extreme_coefficients_small_n() {
        let uv = |s: &str| parse(s).unwrap().basis_uv(BasisDirection::FromUv).unwrap();
        assert_eq!(g_high(1), uv("y"));
        assert_eq!(g_high(2), uv("4*x*y^3"));
        assert_eq!(g_low(2), uv("4*x^3*y"));
        assert_eq!(f_high(1).unwrap(), parse("1").unwrap());
        assert_eq!(f_high(2).unwrap(), uv("2*x*(x^2 + 3*y^2 - 1)"));
    }

    #[test]
    fn table_builds() {
        let t = ClosedFormTable::build(3).unwrap();
        assert_eq!(t.a[3], BigInt::from(4));
        assert_eq!(t.w[2], parse("x^2-1").unwrap());
        assert_eq!(t.f_low[2], f_low(2).unwrap());
    }
}
