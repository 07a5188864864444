//! Differential and bilinear operators in prolate spheroidal coordinates.
//!
//! `L_X = (x²-1)∂_x` and `L_Y = (y²-1)∂_y` are the derivations `∂_X`, `∂_Y`
//! written in `x`, `y`; the light-cone derivations are `L_± = L_X ± L_Y`,
//! so `D_S`, `D_T` are Hirota derivatives taken with `L_+`, `L_-`.

use std::collections::BTreeMap;

use crate::error::AlgebraError;
use crate::exactalg::{GaussianRational, LaurentPoly, Monomial, Var};

/// Linear derivations acting on [`LaurentPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffOp {
    LPlus,
    LMinus,
    LX,
    LY,
    Dx,
    Dy,
}

/// `(z²-1)∂_z` applied term by term, without a general product.
fn prolate_derivation(p: &LaurentPoly, var: Var) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut up = BTreeMap::new();
    let mut down = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = match var {
            Var::X => m.ex,
            Var::Y => m.ey,
        };
        if e == 0 {
            continue;
        }
        let (hi, lo) = match var {
            Var::X => (
                Monomial::new(m.ex + 1, m.ey, m.et),
                Monomial::new(m.ex - 1, m.ey, m.et),
            ),
            Var::Y => (
                Monomial::new(m.ex, m.ey + 1, m.et),
                Monomial::new(m.ex, m.ey - 1, m.et),
            ),
        };
        let ce = c.scale_int(e as i64);
        up.insert(hi, ce.clone());
        down.insert(lo, -ce);
    }
    out += &LaurentPoly::from_terms(up);
    out += &LaurentPoly::from_terms(down);
    out
}

pub fn apply_l(op: DiffOp, p: &LaurentPoly) -> LaurentPoly {
    match op {
        DiffOp::LX => prolate_derivation(p, Var::X),
        DiffOp::LY => prolate_derivation(p, Var::Y),
        DiffOp::LPlus => &prolate_derivation(p, Var::X) + &prolate_derivation(p, Var::Y),
        DiffOp::LMinus => &prolate_derivation(p, Var::X) - &prolate_derivation(p, Var::Y),
        DiffOp::Dx => p.differentiate(Var::X),
        DiffOp::Dy => p.differentiate(Var::Y),
    }
}

/// Direction of a Hirota derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HirotaVar {
    X,
    Y,
    S,
    T,
}

impl HirotaVar {
    fn derivation(self) -> DiffOp {
        match self {
            HirotaVar::X => DiffOp::Dx,
            HirotaVar::Y => DiffOp::Dy,
            HirotaVar::S => DiffOp::LPlus,
            HirotaVar::T => DiffOp::LMinus,
        }
    }
}

/// `D_A(f·g)` for order 1 or `D_A²(f·g)` for order 2.
///
/// # Panics
/// On any order other than 1 or 2.
pub fn hirota_d(var: HirotaVar, f: &LaurentPoly, g: &LaurentPoly, order: u8) -> LaurentPoly {
    let d = var.derivation();
    let df = apply_l(d, f);
    let dg = apply_l(d, g);
    match order {
        1 => &(&df * g) - &(f * &dg),
        2 => {
            let ddf = apply_l(d, &df);
            let ddg = apply_l(d, &dg);
            let mut out = &ddf * g;
            out -= &(&df * &dg).scale_int(2);
            out += &(f * &ddg);
            out
        }
        _ => panic!("Hirota derivative order {order} is not supported"),
    }
}

/// `D_S D_T (f·g)`.
///
/// `L_±` are commuting derivations, so
/// `D_S D_T(f·g) = L_+L_-(fg) - 2[(L_+f)(L_-g) + (L_-f)(L_+g)]`,
/// which needs three products instead of four (two when `f = g`).
pub fn hirota_dst(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let fg = f * g;
    let mut out = apply_l(DiffOp::LPlus, &apply_l(DiffOp::LMinus, &fg));
    let pf = apply_l(DiffOp::LPlus, f);
    let mf = apply_l(DiffOp::LMinus, f);
    let cross = if f == g {
        (&pf * &mf).scale_int(2)
    } else {
        let pg = apply_l(DiffOp::LPlus, g);
        let mg = apply_l(DiffOp::LMinus, g);
        &(&pf * &mg) + &(&mf * &pg)
    };
    out -= &cross.scale_int(2);
    out
}

/// The bilinear operator
/// `F = (x²-1)D_x² + 2x∂_x + (y²-1)D_y² + 2y∂_y + c_n` with `c_n = -2n²`.
/// The first-order terms differentiate the ordinary product `ab`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FOperator {
    n: u32,
}

impl FOperator {
    pub fn new(n: u32) -> Self {
        Self { n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn c_n(&self) -> i64 {
        -2 * (self.n as i64) * (self.n as i64)
    }

    /// `F(a·b)`, computed from `ab`, `a_x b_x` and `a_y b_y` via
    /// `D_z²(a·b) = ∂_z²(ab) - 4 a_z b_z`.
    pub fn apply(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let ab = a * b;
        let axbx = &a.differentiate(Var::X) * &b.differentiate(Var::X);
        let ayby = &a.differentiate(Var::Y) * &b.differentiate(Var::Y);
        let mut out = ab.scale_int(self.c_n());
        for (var, cross, z) in [
            (Var::X, axbx, LaurentPoly::x()),
            (Var::Y, ayby, LaurentPoly::y()),
        ] {
            let d1 = ab.differentiate(var);
            let mut d2 = d1.differentiate(var);
            d2 -= &cross.scale_int(4);
            let z2m1 = &(&z * &z) - &LaurentPoly::one();
            out += &(&z2m1 * &d2);
            out += &(&z * &d1).scale_int(2);
        }
        out
    }
}

pub fn apply_f(fop: &FOperator, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    fop.apply(a, b)
}

/// The `x`-only form of `F`:
/// `[(L_X²a)b + a(L_X²b) - 2(L_Xa)(L_Xb)] / (x²-1) - 2n²ab`.
pub fn apply_f_weyl(n: u32, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
    if a.terms().chain(b.terms()).any(|(m, _)| m.ey != 0) {
        return Err(AlgebraError::UnexpectedVariable('y'));
    }
    let la = apply_l(DiffOp::LX, a);
    let lb = apply_l(DiffOp::LX, b);
    let lla = apply_l(DiffOp::LX, &la);
    let llb = apply_l(DiffOp::LX, &lb);
    let mut bracket = &lla * b;
    bracket += &(a * &llb);
    bracket -= &(&la * &lb).scale_int(2);
    let x2m1 = &LaurentPoly::mono(1, 2, 0, 0) - &LaurentPoly::one();
    let mut out = bracket.exact_div(&x2m1)?;
    let nn = (n as i64) * (n as i64);
    out -= &(a * b).scale(&GaussianRational::from_int(2 * nn));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse;

    fn psi() -> LaurentPoly {
        parse("t*(x-y)/2 + t^-1*(x+y)/2").unwrap()
    }

    #[test]
    fn lx_of_x_is_w2() {
        assert_eq!(
            apply_l(DiffOp::LX, &LaurentPoly::x()),
            parse("x^2 - 1").unwrap()
        );
    }

    #[test]
    fn l_plus_of_psi() {
        let expected = parse("t*(x^2-y^2)/2 + t^-1*(x^2+y^2-2)/2").unwrap();
        assert_eq!(apply_l(DiffOp::LPlus, &psi()), expected);
    }

    #[test]
    fn l_plus_l_minus_of_psi() {
        let expected = parse("t*(x*(x^2-1) + y*(y^2-1)) + t^-1*(x*(x^2-1) - y*(y^2-1))").unwrap();
        let got = apply_l(DiffOp::LPlus, &apply_l(DiffOp::LMinus, &psi()));
        assert_eq!(got, expected);
    }

    #[test]
    fn l_plus_minus_difference() {
        let p = parse("x^3*y^2*t + 3/4*y^5 - x*t^-2").unwrap();
        let lhs = &apply_l(DiffOp::LPlus, &p) - &apply_l(DiffOp::LMinus, &p);
        assert_eq!(lhs, apply_l(DiffOp::LY, &p).scale_int(2));
    }

    #[test]
    fn hirota_small_cases() {
        let f = parse("x^2*y + t").unwrap();
        assert!(hirota_d(HirotaVar::X, &f, &f, 1).is_zero());
        let got = hirota_d(HirotaVar::X, &LaurentPoly::x(), &parse("x^2").unwrap(), 1);
        assert_eq!(got, parse("-x^2").unwrap());
    }

    #[test]
    fn dst_of_psi_is_twice_tau2() {
        let p = psi();
        let lp = apply_l(DiffOp::LPlus, &p);
        let lm = apply_l(DiffOp::LMinus, &p);
        let lpm = apply_l(DiffOp::LPlus, &lm);
        let tau2 = &(&lpm * &p) - &(&lp * &lm);
        assert_eq!(hirota_dst(&p, &p), tau2.scale_int(2));
    }

    #[test]
    fn dst_matches_definition() {
        let f = parse("x^2*y*t + y^3 - 2*t^-1*x").unwrap();
        let g = parse("x*y^2 + 5/3*t^2").unwrap();
        let (p, m) = (DiffOp::LPlus, DiffOp::LMinus);
        let mut def = &apply_l(p, &apply_l(m, &f)) * &g;
        def -= &(&apply_l(p, &f) * &apply_l(m, &g));
        def -= &(&apply_l(m, &f) * &apply_l(p, &g));
        def += &(&f * &apply_l(p, &apply_l(m, &g)));
        assert_eq!(hirota_dst(&f, &g), def);
    }

    #[test]
    fn f_matches_hirota_definition() {
        let a = parse("x^2*y*t + y^3 - 2*t^-1*x").unwrap();
        let b = parse("x*y^2 + 5/3*t^2 + i*y").unwrap();
        let fop = FOperator::new(3);
        let ab = &a * &b;
        let x2 = parse("x^2-1").unwrap();
        let y2 = parse("y^2-1").unwrap();
        let mut def = &x2 * &hirota_d(HirotaVar::X, &a, &b, 2);
        def += &(&LaurentPoly::x() * &ab.differentiate(Var::X)).scale_int(2);
        def += &(&y2 * &hirota_d(HirotaVar::Y, &a, &b, 2));
        def += &(&LaurentPoly::y() * &ab.differentiate(Var::Y)).scale_int(2);
        def += &ab.scale_int(-18);
        assert_eq!(fop.apply(&a, &b), def);
    }

    #[test]
    fn f_on_constants() {
        assert_eq!(
            FOperator::new(1).apply(&LaurentPoly::one(), &LaurentPoly::one()),
            parse("-2").unwrap()
        );
        assert_eq!(
            apply_f_weyl(2, &LaurentPoly::one(), &LaurentPoly::one()).unwrap(),
            parse("-8").unwrap()
        );
        assert_eq!(FOperator::new(4).c_n(), -32);
    }

    #[test]
    fn weyl_form_agrees_on_x() {
        let x = LaurentPoly::x();
        assert_eq!(
            apply_f_weyl(1, &x, &x).unwrap(),
            FOperator::new(1).apply(&x, &x)
        );
    }

    #[test]
    fn weyl_rejects_y() {
        assert_eq!(
            apply_f_weyl(1, &LaurentPoly::y(), &LaurentPoly::one()),
            Err(AlgebraError::UnexpectedVariable('y'))
        );
    }

    #[test]
    fn n1_conjecture_by_hand() {
        let g = psi();
        let f = LaurentPoly::one();
        let fop = FOperator::new(1);
        assert!(fop.apply(&g.star(), &f).is_zero());
        let sum = &fop.apply(&g.star(), &g) + &fop.apply(&f.star(), &f);
        assert!(sum.is_zero());
    }
}
