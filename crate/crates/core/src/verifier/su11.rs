//! The SU(1,1) action `g' = αg + β̄f`, `f' = βg + ᾱf` on solution pairs.

use rand::Rng;

use super::conjecture::check_conjecture_pair;
use super::toda::{check_mixed_sequences, check_toda_sequence};
use super::CheckReport;
use crate::error::DegenerateParams;
use crate::exactalg::{GaussianRational, LaurentPoly};
use crate::wronskian::TauFamily;

#[derive(Clone, Debug, PartialEq)]
pub struct Su11Params {
    alpha: GaussianRational,
    beta: GaussianRational,
}

impl Su11Params {
    pub fn new(alpha: GaussianRational, beta: GaussianRational) -> Result<Self, DegenerateParams> {
        let na = alpha.norm_sqr();
        if na == beta.norm_sqr() {
            return Err(DegenerateParams {
                norm: na.to_string(),
            });
        }
        Ok(Self { alpha, beta })
    }

    pub fn identity() -> Self {
        Self {
            alpha: GaussianRational::from_int(1),
            beta: GaussianRational::from_int(0),
        }
    }

    /// Small random Gaussian rationals, resampled until admissible.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let component = |rng: &mut R| {
            GaussianRational::complex(
                rng.gen_range(-5..=5),
                rng.gen_range(1..=4),
                rng.gen_range(-5..=5),
                rng.gen_range(1..=4),
            )
        };
        loop {
            let alpha = component(rng);
            let beta = component(rng);
            if let Ok(p) = Self::new(alpha, beta) {
                return p;
            }
        }
    }

    pub fn alpha(&self) -> &GaussianRational {
        &self.alpha
    }

    pub fn beta(&self) -> &GaussianRational {
        &self.beta
    }

    pub fn apply(&self, g: &LaurentPoly, f: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        let g2 = &g.scale(&self.alpha) + &f.scale(&self.beta.conj());
        let f2 = &g.scale(&self.beta) + &f.scale(&self.alpha.conj());
        (g2, f2)
    }
}

/// `(g'_n, f'_n)` for one `n`.
pub fn su11_transform(fam: &TauFamily, n: usize, p: &Su11Params) -> (LaurentPoly, LaurentPoly) {
    p.apply(fam.g(n), fam.f(n))
}

/// Transformed sequences for `k = 0..=n_max`; note `g'_0 = α`, `f'_0 = β`.
pub fn su11_sequences(fam: &TauFamily, p: &Su11Params) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    (0..=fam.n_max()).map(|k| su11_transform(fam, k, p)).unzip()
}

/// Toda for `g'` and `f'`, the mixed identity and the four bilinear
/// equations, all at level `n` of the transformed family.
pub fn check_su11(fam: &TauFamily, n: usize, p: &Su11Params) -> Vec<CheckReport> {
    assert!(n >= 1 && n < fam.n_max());
    let (g, f) = su11_sequences(fam, p);
    let note = format!("alpha={}, beta={}", p.alpha, p.beta);
    let mut out = vec![
        check_toda_sequence("su11:toda:g", &g, n),
        check_toda_sequence("su11:toda:f", &f, n),
        check_mixed_sequences("su11:mixed", &g, &f, n),
    ];
    out.extend(check_conjecture_pair("su11:", &g[n], &f[n], n as u32));
    out.into_iter().map(|r| r.with_note(note.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_rejected() {
        let one = GaussianRational::from_int(1);
        assert!(Su11Params::new(one.clone(), GaussianRational::i()).is_err());
        assert!(Su11Params::new(one.clone(), one).is_err());
    }

    #[test]
    fn identity_is_identity() {
        let fam = TauFamily::build(2).unwrap();
        let (g, f) = su11_transform(&fam, 2, &Su11Params::identity());
        assert_eq!(&g, fam.g(2));
        assert_eq!(&f, fam.f(2));
    }

    #[test]
    fn two_three_and_one_i() {
        let fam = TauFamily::build(3).unwrap();
        let p =
            Su11Params::new(GaussianRational::from_int(2), GaussianRational::from_int(3)).unwrap();
        for r in check_su11(&fam, 2, &p) {
            assert!(r.passed(), "{r}");
        }
        let p = Su11Params::new(
            GaussianRational::from_int(1),
            GaussianRational::complex(1, 1, 1, 2),
        )
        .unwrap();
        for r in check_su11(&fam, 1, &p) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn identities_are_linear_even_off_the_admissible_region() {
        // α = 1, β = i has |α|² = |β|², so `new` rejects it, but the
        // bilinear identities still carry over
        let fam = TauFamily::build(2).unwrap();
        let p = Su11Params {
            alpha: GaussianRational::from_int(1),
            beta: GaussianRational::i(),
        };
        for r in check_su11(&fam, 1, &p) {
            assert!(r.passed(), "{r}");
        }
    }
}
