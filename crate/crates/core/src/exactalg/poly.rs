//! Sparse Laurent polynomials in `x`, `y`, `t` over Gaussian rationals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::scalar::GaussianRational;
use crate::error::AlgebraError;

/// Exponent triple of `x^ex * y^ey * t^et`. Negative exponents are allowed
/// in every slot.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub ex: i32,
    pub ey: i32,
    pub et: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        ex: 0,
        ey: 0,
        et: 0,
    };

    pub const fn new(ex: i32, ey: i32, et: i32) -> Self {
        Self { ex, ey, et }
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            ex: self.ex + other.ex,
            ey: self.ey + other.ey,
            et: self.et + other.et,
        }
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn div(self, other: Monomial) -> Monomial {
        Monomial {
            ex: self.ex - other.ex,
            ey: self.ey - other.ey,
            et: self.et - other.et,
        }
    }

    /// Componentwise `self >= other`.
    pub fn dominates(self, other: Monomial) -> bool {
        self.ex >= other.ex && self.ey >= other.ey && self.et >= other.et
    }

    pub fn xy_degree(self) -> i32 {
        self.ex + self.ey
    }
}

/// Canonical order: `et` descending, then total `x,y` degree descending,
/// then `ex` descending. `Less` means "printed earlier". Read as a monomial
/// order (first = largest) it is a t-lex / graded-lex product order, so it
/// also drives multivariate division.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .et
            .cmp(&self.et)
            .then_with(|| other.xy_degree().cmp(&self.xy_degree()))
            .then_with(|| other.ex.cmp(&self.ex))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
}

/// The exact variable substitutions used by the symmetry checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Substitution {
    /// `t -> 1/t`
    TInv,
    /// `y -> -y`
    YNeg,
    /// `t -> -t`
    TNeg,
    /// `t -> i*t`
    TTimesI,
    /// `x <-> y`
    SwapXY,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisDirection {
    /// Rewrite `p(x, y)` as a polynomial in `u = (x+y)/2`, `v = (x-y)/2`,
    /// stored in the `x` (for `u`) and `y` (for `v`) slots.
    ToUv,
    /// Inverse of [`BasisDirection::ToUv`].
    FromUv,
}

const PAR_MUL_THRESHOLD: usize = 40_000;

/// A finite sum of Gaussian-rational multiples of monomials. No zero
/// coefficient is ever stored, so equality of term maps is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// `c * x^ex * y^ey * t^et` with an integer coefficient.
    pub fn mono(c: i64, ex: i32, ey: i32, et: i32) -> Self {
        Self::term(GaussianRational::from_int(c), Monomial::new(ex, ey, et))
    }

    pub fn x() -> Self {
        Self::mono(1, 1, 0, 0)
    }

    pub fn y() -> Self {
        Self::mono(1, 0, 1, 0)
    }

    pub fn t() -> Self {
        Self::mono(1, 0, 0, 1)
    }

    pub fn t_pow(k: i32) -> Self {
        Self::mono(1, 0, 0, k)
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// First term in canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next()
    }

    pub fn leading_term_string(&self) -> String {
        match self.leading_term() {
            None => "0".to_string(),
            Some((m, c)) => LaurentPoly::term(c.clone(), *m).to_string(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v -= c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, -c);
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&GaussianRational::from_int(k))
    }

    pub fn mul_monomial(&self, c: &GaussianRational, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let b_terms: Vec<(&Monomial, &GaussianRational)> = b.terms.iter().collect();
        let accumulate = |chunk: &[(&Monomial, &GaussianRational)]| {
            let mut acc: HashMap<Monomial, GaussianRational> = HashMap::new();
            for (ma, ca) in chunk {
                for (mb, cb) in &b_terms {
                    let prod = *ca * *cb;
                    acc.entry(ma.mul(**mb))
                        .and_modify(|v| *v += &prod)
                        .or_insert(prod);
                }
            }
            acc
        };
        let a_terms: Vec<(&Monomial, &GaussianRational)> = a.terms.iter().collect();
        let acc = if a.len() * b.len() >= PAR_MUL_THRESHOLD {
            let chunk = (a_terms.len() / rayon::current_num_threads().max(1)).max(8);
            a_terms
                .par_chunks(chunk)
                .map(accumulate)
                .reduce(HashMap::new, |mut x, y| {
                    for (m, c) in y {
                        x.entry(m).and_modify(|v| *v += &c).or_insert(c);
                    }
                    x
                })
        } else {
            accumulate(&a_terms)
        };
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Smallest exponent of each variable over all terms, `None` for zero.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, m| Monomial {
            ex: acc.ex.min(m.ex),
            ey: acc.ey.min(m.ey),
            et: acc.et.min(m.et),
        }))
    }

    pub fn max_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |acc, m| Monomial {
            ex: acc.ex.max(m.ex),
            ey: acc.ey.max(m.ey),
            et: acc.et.max(m.et),
        }))
    }

    /// Range of `t` exponents present, `None` for zero.
    pub fn t_range(&self) -> Option<(i32, i32)> {
        let lo = self.min_exponents()?.et;
        let hi = self.max_exponents()?.et;
        Some((lo, hi))
    }

    /// Fails with the first offending term if any `x` or `y` exponent is
    /// negative.
    pub fn check_xy_nonnegative(&self) -> Result<(), AlgebraError> {
        for (m, c) in &self.terms {
            if m.ex < 0 || m.ey < 0 {
                let var = if m.ex < 0 { 'x' } else { 'y' };
                return Err(AlgebraError::NegativeExponent {
                    var,
                    witness: LaurentPoly::term(c.clone(), *m).to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    /// Complex-conjugates every coefficient.
    pub fn conj_coeffs(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }

    /// The star operation: coefficient conjugation composed with `t -> 1/t`.
    pub fn star(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.ex, m.ey, -m.et), c.conj()))
                .collect(),
        }
    }

    pub fn differentiate(&self, var: Var) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, dm) = match var {
                Var::X => (m.ex, Monomial::new(m.ex - 1, m.ey, m.et)),
                Var::Y => (m.ey, Monomial::new(m.ex, m.ey - 1, m.et)),
            };
            if e != 0 {
                terms.insert(dm, c.scale_int(e as i64));
            }
        }
        Self { terms }
    }

    pub fn substitute(&self, map: Substitution) -> Self {
        let terms = self.terms.iter().map(|(m, c)| match map {
            Substitution::TInv => (Monomial::new(m.ex, m.ey, -m.et), c.clone()),
            Substitution::YNeg => {
                let c = if m.ey.rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                };
                (*m, c)
            }
            Substitution::TNeg => {
                let c = if m.et.rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                };
                (*m, c)
            }
            Substitution::TTimesI => (*m, c * &GaussianRational::i_pow(m.et as i64)),
            Substitution::SwapXY => (Monomial::new(m.ey, m.ex, m.et), c.clone()),
        });
        Self {
            terms: terms.collect(),
        }
    }

    /// The `x,y` polynomial multiplying `t^m`.
    pub fn coeff_of_t(&self, m: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.et == m)
                .map(|(k, c)| (Monomial::new(k.ex, k.ey, 0), c.clone()))
                .collect(),
        }
    }

    /// All nonzero `t`-coefficients, highest power first.
    pub fn t_coefficients(&self) -> Vec<(i32, LaurentPoly)> {
        let mut out: Vec<(i32, LaurentPoly)> = Vec::new();
        for (m, c) in &self.terms {
            let key = Monomial::new(m.ex, m.ey, 0);
            match out.last_mut() {
                Some((e, p)) if *e == m.et => {
                    p.terms.insert(key, c.clone());
                }
                _ => out.push((m.et, LaurentPoly::term(c.clone(), key))),
            }
        }
        out
    }

    /// Sets `t` to a nonzero constant, leaving a polynomial in `x`, `y`.
    pub fn specialize_t(&self, t: &GaussianRational) -> Result<Self, AlgebraError> {
        let inv = t.inv().ok_or(AlgebraError::ZeroDenominator)?;
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let factor = if m.et >= 0 {
                t.pow(m.et as u32)
            } else {
                inv.pow((-m.et) as u32)
            };
            out.add_term(Monomial::new(m.ex, m.ey, 0), &(c * &factor));
        }
        Ok(out)
    }

    /// Multiplies by `t^k`.
    pub fn shift_t(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.ex, m.ey, m.et + k), c.clone()))
                .collect(),
        }
    }

    /// Linear change of basis between `(x, y)` and `(u, v)`.
    pub fn basis_uv(&self, direction: BasisDirection) -> Result<Self, AlgebraError> {
        self.check_xy_nonnegative()?;
        // ToUv:   x = u + v,        y = u - v
        // FromUv: u = (x + y) / 2,  v = (x - y) / 2
        let (first, second) = match direction {
            BasisDirection::ToUv => (
                &LaurentPoly::x() + &LaurentPoly::y(),
                &LaurentPoly::x() - &LaurentPoly::y(),
            ),
            BasisDirection::FromUv => {
                let half = GaussianRational::ratio(1, 2);
                (
                    (&LaurentPoly::x() + &LaurentPoly::y()).scale(&half),
                    (&LaurentPoly::x() - &LaurentPoly::y()).scale(&half),
                )
            }
        };
        let max = self.max_exponents().unwrap_or_default();
        let powers = |base: &LaurentPoly, n: i32| {
            let mut v = vec![LaurentPoly::one()];
            for k in 1..=n.max(0) as usize {
                let next = &v[k - 1] * base;
                v.push(next);
            }
            v
        };
        let first_pows = powers(&first, max.ex);
        let second_pows = powers(&second, max.ey);
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let prod = &first_pows[m.ex as usize] * &second_pows[m.ey as usize];
            out += &prod.mul_monomial(c, Monomial::new(0, 0, m.et));
        }
        Ok(out)
    }

    /// Exact division in the Laurent ring. Fails with the remainder when
    /// `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        let (dshift, dnorm) = match divisor.min_exponents() {
            None => return Err(AlgebraError::DivisionByZero),
            Some(s) => (
                s,
                divisor.mul_monomial(&GaussianRational::one(), inverse(s)),
            ),
        };
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if dnorm.len() == 1 {
            let (m, c) = dnorm.leading_term().expect("nonzero");
            let inv = c.inv().expect("nonzero coefficient");
            return Ok(self.mul_monomial(&inv, inverse(m.mul(dshift))));
        }
        // `dnorm` has no monomial factor, so once `self` is shifted to
        // nonnegative exponents any exact quotient is an ordinary polynomial.
        let ashift = self.min_exponents().expect("nonzero");
        let mut rem = self.mul_monomial(&GaussianRational::one(), inverse(ashift));
        let (dlm, dlc) = {
            let (m, c) = dnorm.leading_term().expect("nonzero");
            (*m, c.clone())
        };
        let dinv = dlc.inv().expect("nonzero coefficient");
        let mut quotient = LaurentPoly::zero();
        let mut leftover = LaurentPoly::zero();
        while let Some((m, c)) = rem.terms.iter().next().map(|(m, c)| (*m, c.clone())) {
            if m.dominates(dlm) {
                let qm = m.div(dlm);
                let qc = &c * &dinv;
                for (dm, dc) in &dnorm.terms {
                    rem.sub_term(dm.mul(qm), &(&qc * dc));
                }
                quotient.terms.insert(qm, qc);
            } else {
                rem.terms.remove(&m);
                leftover.terms.insert(m, c);
            }
        }
        if !leftover.is_zero() {
            return Err(AlgebraError::NotDivisible {
                remainder: leftover.mul_monomial(&GaussianRational::one(), ashift),
            });
        }
        Ok(quotient.mul_monomial(&GaussianRational::one(), ashift.div(dshift)))
    }

    /// Evaluates at a point. Negative powers need nonzero coordinates.
    pub fn evaluate(
        &self,
        x: &GaussianRational,
        y: &GaussianRational,
        t: &GaussianRational,
    ) -> Result<GaussianRational, AlgebraError> {
        fn power(base: &GaussianRational, e: i32) -> Result<GaussianRational, AlgebraError> {
            if e >= 0 {
                Ok(base.pow(e as u32))
            } else {
                let inv = base.inv().ok_or(AlgebraError::ZeroDenominator)?;
                Ok(inv.pow((-e) as u32))
            }
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let v = &(&power(x, m.ex)? * &power(y, m.ey)?) * &power(t, m.et)?;
            acc += &(c * &v);
        }
        Ok(acc)
    }
}

fn inverse(m: Monomial) -> Monomial {
    Monomial::new(-m.ex, -m.ey, -m.et)
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.sub_term(*m, c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        big += small;
        big
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.mul_impl(&rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u_xy() -> LaurentPoly {
        (&LaurentPoly::x() + &LaurentPoly::y()).scale(&GaussianRational::ratio(1, 2))
    }

    fn v_xy() -> LaurentPoly {
        (&LaurentPoly::x() - &LaurentPoly::y()).scale(&GaussianRational::ratio(1, 2))
    }

    fn psi() -> LaurentPoly {
        &(&LaurentPoly::t() * &v_xy()) + &(&LaurentPoly::t_pow(-1) * &u_xy())
    }

    #[test]
    fn additive_cancellation() {
        let tu = &LaurentPoly::t_pow(-1) * &u_xy();
        let sum = &psi() + &(-&tu);
        assert_eq!(sum, &LaurentPoly::t() * &v_xy());
    }

    #[test]
    fn difference_of_squares_and_division() {
        let a = &LaurentPoly::x() + &LaurentPoly::t();
        let b = &LaurentPoly::x() - &LaurentPoly::t();
        let prod = &a * &b;
        assert_eq!(
            prod,
            &LaurentPoly::mono(1, 2, 0, 0) - &LaurentPoly::mono(1, 0, 0, 2)
        );
        assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn division_with_negative_exponents() {
        let a = &psi() * &(&LaurentPoly::mono(3, 0, -2, 1) + &LaurentPoly::x());
        assert_eq!(
            a.exact_div(&psi()).unwrap(),
            &LaurentPoly::mono(3, 0, -2, 1) + &LaurentPoly::x()
        );
        let single = LaurentPoly::mono(2, 1, -1, 3);
        assert_eq!((&a * &single).exact_div(&single).unwrap(), a);
    }

    #[test]
    fn division_failure_reports_remainder() {
        let a = &LaurentPoly::mono(1, 2, 0, 0) + &LaurentPoly::one();
        let b = &LaurentPoly::x() - &LaurentPoly::one();
        match a.exact_div(&b) {
            Err(AlgebraError::NotDivisible { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
        assert_eq!(
            a.exact_div(&LaurentPoly::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn derivative_rules() {
        let p = LaurentPoly::mono(1, 2, 1, 0);
        assert_eq!(p.differentiate(Var::X), LaurentPoly::mono(2, 1, 1, 0));
        assert!(LaurentPoly::mono(1, 2, 0, 0)
            .differentiate(Var::Y)
            .is_zero());
        let dpsi = psi().differentiate(Var::X);
        assert_eq!(
            dpsi.coeff_of_t(1),
            LaurentPoly::constant(GaussianRational::ratio(1, 2))
        );
        assert_eq!(
            dpsi.coeff_of_t(-1),
            LaurentPoly::constant(GaussianRational::ratio(1, 2))
        );
    }

    #[test]
    fn substitutions_on_psi() {
        let uv = psi().basis_uv(BasisDirection::ToUv).unwrap();
        // t v + t^-1 u in the (u, v) slots
        assert_eq!(
            uv,
            &LaurentPoly::mono(1, 0, 1, 1) + &LaurentPoly::mono(1, 1, 0, -1)
        );
        let inv = psi().substitute(Substitution::TInv);
        let expected = &(&LaurentPoly::t() * &u_xy()) + &(&LaurentPoly::t_pow(-1) * &v_xy());
        assert_eq!(inv, expected);
        assert_eq!(psi().substitute(Substitution::YNeg), expected);
        assert_eq!(psi().star(), expected);
    }

    #[test]
    fn t_times_i_multiplies_by_phase() {
        let p = &LaurentPoly::mono(1, 0, 0, 3) + &LaurentPoly::mono(1, 1, 0, -1);
        let q = p.substitute(Substitution::TTimesI);
        assert_eq!(q.coeff(&Monomial::new(0, 0, 3)), -GaussianRational::i());
        assert_eq!(q.coeff(&Monomial::new(1, 0, -1)), -GaussianRational::i());
    }

    #[test]
    fn uv_basis_examples() {
        let x_uv = LaurentPoly::x().basis_uv(BasisDirection::ToUv).unwrap();
        assert_eq!(x_uv, &LaurentPoly::x() + &LaurentPoly::y());
        let d = &LaurentPoly::mono(1, 2, 0, 0) - &LaurentPoly::mono(1, 0, 2, 0);
        assert_eq!(
            d.basis_uv(BasisDirection::ToUv).unwrap(),
            LaurentPoly::mono(4, 1, 1, 0)
        );
        assert!(LaurentPoly::mono(1, 0, -1, 0)
            .basis_uv(BasisDirection::ToUv)
            .is_err());
    }

    #[test]
    fn t_coefficients_reassemble() {
        let p = &psi() * &psi();
        let back: LaurentPoly = p
            .t_coefficients()
            .into_iter()
            .map(|(e, c)| c.shift_t(e))
            .sum();
        assert_eq!(back, p);
        assert_eq!(p.t_range(), Some((-2, 2)));
    }

    #[test]
    fn evaluation() {
        let p = &LaurentPoly::mono(2, 1, 0, -1) + &LaurentPoly::mono(1, 0, 2, 0);
        let v = p
            .evaluate(
                &GaussianRational::from_int(3),
                &GaussianRational::ratio(1, 2),
                &GaussianRational::from_int(2),
            )
            .unwrap();
        assert_eq!(v, GaussianRational::ratio(13, 4));
        assert_eq!(
            p.evaluate(
                &GaussianRational::one(),
                &GaussianRational::one(),
                &GaussianRational::zero()
            ),
            Err(AlgebraError::ZeroDenominator)
        );
    }
}
