//! Exact ring of surface functions.
//!
//! A [`SurfaceExpression`] is a finite sum of monomials `c^pc * s^ps` with
//! [`Scalar`] coefficients, where `(c, s)` stand for `(cosh eta, sinh eta)`
//! on the hyperbolic sheet and `(cos theta, sin theta)` on the sphere,
//! together with one exponential prefactor `exp(mu * t)` and one azimuthal
//! phase `exp(i m phi)`. Arithmetic reduces modulo the defining relation
//! `c^2 = 1 - kappa * s^2`, so canonical forms keep `pc` in {0, 1}; powers
//! of `s` may be negative (the operators contain coth and 1/s^2), powers of
//! `c` may not.
//!
//! Everything is immutable; all operations are pure functions.

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::{crat_to_string, i_pow, CRat, Scalar};

/// Which ring relation is in force.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Signature {
    /// kappa = -1: c^2 - s^2 = 1 (upper hyperboloid sheet, angle eta).
    Hyperbolic,
    /// kappa = +1: c^2 + s^2 = 1 (sphere, angle theta).
    Trigonometric,
}

impl Signature {
    pub fn kappa(self) -> i64 {
        match self {
            Signature::Hyperbolic => -1,
            Signature::Trigonometric => 1,
        }
    }
}

/// A reduced monomial `c^pc * s^ps` with `pc` in {0, 1}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Mono {
    /// Power of s; negative values encode 1/s denominators.
    pub ps: i64,
    /// Power of c, always 0 or 1 after reduction.
    pub pc: u8,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceExpression {
    sig: Signature,
    exp_factor: Scalar,
    phase: i64,
    terms: BTreeMap<Mono, Scalar>,
}

fn insert_reduced(sig: Signature, terms: &mut BTreeMap<Mono, Scalar>, pc: u32, ps: i64, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    if pc >= 2 {
        // c^2 = 1 - kappa s^2
        insert_reduced(sig, terms, pc - 2, ps, coeff.clone());
        let minus_kappa = Scalar::from_int(-sig.kappa());
        insert_reduced(sig, terms, pc - 2, ps + 2, &coeff * &minus_kappa);
        return;
    }
    let key = Mono { ps, pc: pc as u8 };
    let entry = terms.entry(key).or_insert_with(Scalar::zero);
    *entry = &*entry + &coeff;
    if entry.is_zero() {
        terms.remove(&key);
    }
}

impl SurfaceExpression {
    pub fn zero(sig: Signature) -> Self {
        SurfaceExpression {
            sig,
            exp_factor: Scalar::zero(),
            phase: 0,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(sig: Signature, value: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        insert_reduced(sig, &mut terms, 0, 0, value);
        SurfaceExpression {
            sig,
            exp_factor: Scalar::zero(),
            phase: 0,
            terms,
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::constant(sig, Scalar::one())
    }

    /// cosh eta (or cos theta).
    pub fn c(sig: Signature) -> Self {
        Self::monomial(sig, 1, 0, Scalar::one())
    }

    /// sinh eta (or sin theta).
    pub fn s(sig: Signature) -> Self {
        Self::monomial(sig, 0, 1, Scalar::one())
    }

    /// s^k for any integer k, including negative.
    pub fn s_pow(sig: Signature, k: i64) -> Self {
        Self::monomial(sig, 0, k, Scalar::one())
    }

    /// coeff * c^pc * s^ps, reduced to canonical form.
    pub fn monomial(sig: Signature, pc: u32, ps: i64, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        insert_reduced(sig, &mut terms, pc, ps, coeff);
        SurfaceExpression {
            sig,
            exp_factor: Scalar::zero(),
            phase: 0,
            terms,
        }
    }

    /// Polynomial in c with the given ascending coefficients.
    pub fn from_c_polynomial(sig: Signature, coeffs: &[Scalar]) -> Self {
        let mut terms = BTreeMap::new();
        for (k, coeff) in coeffs.iter().enumerate() {
            insert_reduced(sig, &mut terms, k as u32, 0, coeff.clone());
        }
        SurfaceExpression {
            sig,
            exp_factor: Scalar::zero(),
            phase: 0,
            terms,
        }
    }

    pub fn with_phase(mut self, m: i64) -> Self {
        self.phase = m;
        self
    }

    pub fn with_exp_factor(mut self, mu: Scalar) -> Self {
        self.exp_factor = mu;
        self
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn phase(&self) -> i64 {
        self.phase
    }

    pub fn exp_factor(&self) -> &Scalar {
        &self.exp_factor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, mono: Mono) -> Scalar {
        self.terms.get(&mono).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Smallest monomial in the canonical (ps, pc) order; None for zero.
    pub fn min_mono(&self) -> Option<Mono> {
        self.terms.keys().next().copied()
    }

    /// Most negative s power present (0 for polynomial expressions).
    pub fn min_s_power(&self) -> i64 {
        self.terms.keys().map(|m| m.ps).min().unwrap_or(0).min(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        // Adding across distinct prefactors or phases has no canonical form
        // here; callers keep such sums as explicit lists.
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.exp_factor != other.exp_factor {
            return Err(Error::PrefactorMismatch {
                left: self.exp_factor.to_string(),
                right: other.exp_factor.to_string(),
            });
        }
        if self.phase != other.phase {
            return Err(Error::PhaseMismatch {
                left: self.phase,
                right: other.phase,
            });
        }
        let mut terms = self.terms.clone();
        for (mono, coeff) in &other.terms {
            insert_reduced(self.sig, &mut terms, mono.pc as u32, mono.ps, coeff.clone());
        }
        Ok(SurfaceExpression {
            sig: self.sig,
            exp_factor: self.exp_factor.clone(),
            phase: self.phase,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negated())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                insert_reduced(
                    self.sig,
                    &mut terms,
                    (m1.pc + m2.pc) as u32,
                    m1.ps + m2.ps,
                    c1 * c2,
                );
            }
        }
        Ok(SurfaceExpression {
            sig: self.sig,
            exp_factor: &self.exp_factor + &other.exp_factor,
            phase: self.phase + other.phase,
            terms,
        })
    }

    pub fn negated(&self) -> Self {
        self.scaled(&Scalar::from_int(-1))
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return SurfaceExpression {
                sig: self.sig,
                exp_factor: self.exp_factor.clone(),
                phase: self.phase,
                terms: BTreeMap::new(),
            };
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c * factor))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SurfaceExpression {
            sig: self.sig,
            exp_factor: self.exp_factor.clone(),
            phase: self.phase,
            terms,
        }
    }

    /// Derivative with respect to the angle variable at fixed phi.
    ///
    /// dc = -kappa s, ds = c; the prefactor exp(mu t) contributes mu * self.
    pub fn differentiate(&self) -> Self {
        let kappa = self.sig.kappa();
        let mut terms = BTreeMap::new();
        for (mono, coeff) in &self.terms {
            let ps = mono.ps;
            match mono.pc {
                0 => {
                    if ps != 0 {
                        insert_reduced(
                            self.sig,
                            &mut terms,
                            1,
                            ps - 1,
                            &Scalar::from_int(ps) * coeff,
                        );
                    }
                }
                _ => {
                    // d(c s^ps) = ps s^(ps-1) - kappa (1+ps) s^(ps+1)
                    if ps != 0 {
                        insert_reduced(
                            self.sig,
                            &mut terms,
                            0,
                            ps - 1,
                            &Scalar::from_int(ps) * coeff,
                        );
                    }
                    insert_reduced(
                        self.sig,
                        &mut terms,
                        0,
                        ps + 1,
                        &Scalar::from_int(-kappa * (1 + ps)) * coeff,
                    );
                }
            }
        }
        if !self.exp_factor.is_zero() {
            for (mono, coeff) in &self.terms {
                insert_reduced(
                    self.sig,
                    &mut terms,
                    mono.pc as u32,
                    mono.ps,
                    &self.exp_factor * coeff,
                );
            }
        }
        SurfaceExpression {
            sig: self.sig,
            exp_factor: self.exp_factor.clone(),
            phase: self.phase,
            terms,
        }
    }

    /// Image under eta -> i theta, b -> -i b.
    ///
    /// c stays c, s picks up a factor i per power, coefficients and the
    /// exponent substitute b -> -i b, and the exponent gains a factor i
    /// (from d eta = i d theta). The phase is untouched.
    pub fn substitute_complexify(&self) -> Result<Self> {
        if self.sig == Signature::Trigonometric {
            return Err(Error::AlreadyTrigonometric);
        }
        let mut terms = BTreeMap::new();
        for (mono, coeff) in &self.terms {
            let twisted = coeff.substitute_b_neg_i().scale(&i_pow(mono.ps));
            insert_reduced(
                Signature::Trigonometric,
                &mut terms,
                mono.pc as u32,
                mono.ps,
                twisted,
            );
        }
        Ok(SurfaceExpression {
            sig: Signature::Trigonometric,
            exp_factor: self.exp_factor.substitute_b_neg_i().mul_i(),
            phase: self.phase,
            terms,
        })
    }

    /// Substitutes a concrete value for the coupling b everywhere.
    pub fn substitute_b(&self, value: &CRat) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, Scalar::from_crat(c.substitute_b(value))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        SurfaceExpression {
            sig: self.sig,
            exp_factor: Scalar::from_crat(self.exp_factor.substitute_b(value)),
            phase: self.phase,
            terms,
        }
    }

    /// Numeric evaluation at angle t (complex to allow t = i theta checks),
    /// azimuth phi and coupling b.
    pub fn eval(&self, t: Complex64, phi: f64, b: Complex64) -> Complex64 {
        let (c, s) = match self.sig {
            Signature::Hyperbolic => (t.cosh(), t.sinh()),
            Signature::Trigonometric => (t.cos(), t.sin()),
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for (mono, coeff) in &self.terms {
            let mut v = coeff.eval_f64(b);
            if mono.pc == 1 {
                v *= c;
            }
            v *= s.powi(mono.ps as i32);
            acc += v;
        }
        let mu = self.exp_factor.eval_f64(b);
        acc *= (mu * t).exp();
        acc *= (Complex64::new(0.0, self.phase as f64) * phi).exp();
        acc
    }

    /// True when every coefficient (and the prefactor) is a real polynomial.
    pub fn has_real_coefficients(&self) -> bool {
        self.exp_factor.is_real() && self.terms.values().all(Scalar::is_real)
    }

    /// Scales so that the coefficient of `mono` becomes 1; None when absent.
    pub fn normalized_at(&self, mono: Mono) -> Option<Self> {
        let lead = self.terms.get(&mono)?;
        let inv = Scalar::one().div_exact(lead)?;
        Some(self.scaled(&inv))
    }
}

impl fmt::Display for SurfaceExpression {
    /// Canonical text form: `coeff * c^p * s^q` terms joined by " + ",
    /// then `* exp(mu*t)` and `* phase(m)` when present.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (mono, coeff) in &self.terms {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                let cs = match coeff.as_constant() {
                    Some(c) => crat_to_string(&c),
                    None => format!("({})", coeff),
                };
                write!(f, "{}", cs)?;
                if mono.pc == 1 {
                    write!(f, " * c")?;
                }
                if mono.ps != 0 {
                    if mono.ps == 1 {
                        write!(f, " * s")?;
                    } else {
                        write!(f, " * s^{}", mono.ps)?;
                    }
                }
            }
        }
        if !self.exp_factor.is_zero() {
            write!(f, " * exp(({})*t)", self.exp_factor)?;
        }
        if self.phase != 0 {
            write!(f, " * phase({})", self.phase)?;
        }
        Ok(())
    }
}

/// coth (or cot) as a ring element: c / s.
pub fn coth(sig: Signature) -> SurfaceExpression {
    SurfaceExpression::monomial(sig, 1, -1, Scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{crat_from_rat, rat};

    const HYP: Signature = Signature::Hyperbolic;
    const TRIG: Signature = Signature::Trigonometric;

    fn s(sig: Signature) -> SurfaceExpression {
        SurfaceExpression::s(sig)
    }
    fn c(sig: Signature) -> SurfaceExpression {
        SurfaceExpression::c(sig)
    }

    #[test]
    fn additive_identity_and_inverse() {
        let x = c(HYP);
        assert_eq!(x.add(&SurfaceExpression::zero(HYP)).unwrap(), x);
        assert!(x.add(&x.negated()).unwrap().is_zero());
    }

    #[test]
    fn ring_relation_on_addition() {
        // c^2 + s^2 in the hyperbolic ring reduces to 1 + 2 s^2
        let c2 = c(HYP).mul(&c(HYP)).unwrap();
        let s2 = s(HYP).mul(&s(HYP)).unwrap();
        let sum = c2.add(&s2).unwrap();
        let expected = SurfaceExpression::one(HYP)
            .add(&SurfaceExpression::monomial(HYP, 0, 2, Scalar::from_int(2)))
            .unwrap();
        assert_eq!(sum, expected);
    }

    #[test]
    fn ring_relation_on_multiplication() {
        // c*c -> 1 + s^2 ; s * s^-1 -> 1 ; (c s)^2 -> s^2 + s^4
        let c2 = c(HYP).mul(&c(HYP)).unwrap();
        let expected = SurfaceExpression::one(HYP)
            .add(&SurfaceExpression::monomial(HYP, 0, 2, Scalar::one()))
            .unwrap();
        assert_eq!(c2, expected);

        let one = s(HYP).mul(&SurfaceExpression::s_pow(HYP, -1)).unwrap();
        assert_eq!(one, SurfaceExpression::one(HYP));

        let cs = c(HYP).mul(&s(HYP)).unwrap();
        let sq = cs.mul(&cs).unwrap();
        let expected = SurfaceExpression::monomial(HYP, 0, 2, Scalar::one())
            .add(&SurfaceExpression::monomial(HYP, 0, 4, Scalar::one()))
            .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn trig_relation() {
        // c*c -> 1 - s^2 on the sphere
        let c2 = c(TRIG).mul(&c(TRIG)).unwrap();
        let expected = SurfaceExpression::one(TRIG)
            .add(&SurfaceExpression::monomial(TRIG, 0, 2, Scalar::from_int(-1)))
            .unwrap();
        assert_eq!(c2, expected);
    }

    #[test]
    fn mismatches_are_rejected() {
        assert!(matches!(
            c(HYP).add(&c(TRIG)),
            Err(Error::SignatureMismatch { .. })
        ));
        let damped = c(HYP).with_exp_factor(Scalar::b());
        assert!(matches!(
            c(HYP).add(&damped),
            Err(Error::PrefactorMismatch { .. })
        ));
        let phased = c(HYP).with_phase(2);
        assert!(matches!(c(HYP).add(&phased), Err(Error::PhaseMismatch { .. })));
    }

    #[test]
    fn derivative_rules() {
        // d/deta sinh = cosh ; d/dtheta cos = -sin
        assert_eq!(s(HYP).differentiate(), c(HYP));
        assert_eq!(c(TRIG).differentiate(), s(TRIG).negated());
        // exponential rule: d (e^{-2b eta}) = -2b e^{-2b eta}
        let mu = Scalar::b_times(rat(-2, 1));
        let damped = SurfaceExpression::one(HYP).with_exp_factor(mu.clone());
        let d = damped.differentiate();
        assert_eq!(d, SurfaceExpression::constant(HYP, mu.clone()).with_exp_factor(mu));
    }

    #[test]
    fn complexify_basics() {
        // cosh(i theta) = cos theta
        assert_eq!(c(HYP).substitute_complexify().unwrap(), c(TRIG));
        // coth eta -> -i cot theta
        let img = coth(HYP).substitute_complexify().unwrap();
        assert_eq!(img, coth(TRIG).scaled(&Scalar::from_crat(i_pow(-1))));
        // 2b coth eta -> -2b cot theta
        let pert = coth(HYP).scaled(&Scalar::b_times(rat(2, 1)));
        let img = pert.substitute_complexify().unwrap();
        assert_eq!(img, coth(TRIG).scaled(&Scalar::b_times(rat(-2, 1))));
        // already trigonometric input is rejected
        assert!(c(TRIG).substitute_complexify().is_err());
    }

    #[test]
    fn substitute_b_concrete() {
        let pert = coth(HYP).scaled(&Scalar::b_times(rat(2, 1)));
        let at_one = pert.substitute_b(&crat_from_rat(rat(3, 2)));
        assert_eq!(at_one, coth(HYP).scaled(&Scalar::from_rational(3, 1)));
    }

    #[test]
    fn numeric_eval_respects_ring_relation() {
        // A canonical expression agrees with its unreduced preimage when
        // evaluated at (c, s) = (cosh, sinh).
        let raw = |eta: f64| {
            // 2 c^3 s^-1 - c s, unreduced
            let (ch, sh) = (eta.cosh(), eta.sinh());
            2.0 * ch.powi(3) / sh - ch * sh
        };
        let expr = SurfaceExpression::monomial(HYP, 3, -1, Scalar::from_int(2))
            .add(&SurfaceExpression::monomial(HYP, 1, 1, Scalar::from_int(-1)))
            .unwrap();
        for &eta in &[0.3, 0.9, 1.7, 2.4] {
            let got = expr.eval(Complex64::new(eta, 0.0), 0.0, Complex64::new(1.0, 0.0));
            let want = raw(eta);
            assert!(
                (got.re - want).abs() <= 1e-13 * want.abs().max(1.0),
                "eta={eta}: {got} vs {want}"
            );
            assert!(got.im.abs() < 1e-13);
        }
    }

    #[test]
    fn complexify_commutes_with_evaluation() {
        // f(i theta, b -> -i b) == complexify(f)(theta, b)
        let f = SurfaceExpression::monomial(HYP, 1, -2, Scalar::b_times(rat(3, 4)))
            .add(&SurfaceExpression::monomial(HYP, 0, 3, Scalar::from_int(2)))
            .unwrap()
            .with_exp_factor(Scalar::b_times(rat(-1, 2)))
            .with_phase(2);
        let g = f.substitute_complexify().unwrap();
        let b = Complex64::new(0.75, 0.0);
        for &theta in &[0.4, 1.0, 2.2] {
            for &phi in &[0.0, 0.9] {
                let lhs = f.eval(Complex64::new(0.0, theta), phi, b * Complex64::new(0.0, -1.0));
                let rhs = g.eval(Complex64::new(theta, 0.0), phi, b);
                assert!((lhs - rhs).norm() < 1e-12 * rhs.norm().max(1.0));
            }
        }
    }

    #[test]
    fn display_canonical_text() {
        let e = SurfaceExpression::monomial(HYP, 1, -1, Scalar::from_rational(2, 3))
            .with_exp_factor(Scalar::b_times(rat(-2, 1)))
            .with_phase(1);
        assert_eq!(e.to_string(), "2/3 * c * s^-1 * exp((-2*b)*t) * phase(1)");
    }
}
