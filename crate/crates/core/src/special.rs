//! Special functions: associated Legendre functions of hyperbolic and
//! trigonometric argument, (pseudo-)spherical harmonics, Jacobi polynomials
//! with arbitrary rational (or Gaussian-rational) parameters, and Romanovski
//! polynomials built from their Rodrigues formula.
//!
//! Legendre magnitude convention throughout: P_l^m(x) = (x^2-1)^{m/2} d^m P_l/dx^m
//! for x = cosh eta (and (1-x^2)^{m/2} for x = cos theta), no Condon-Shortley
//! phase. In particular P_l^l = (2l-1)!! s^l.

use std::f64::consts::FRAC_PI_2;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Signature, SurfaceExpression};
use crate::scalar::{rat, CRat, Rat, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LegendreIndex {
    pub l: u32,
    pub m: u32,
}

impl LegendreIndex {
    pub fn new(l: u32, m: u32) -> Result<Self> {
        if m > l {
            return Err(Error::InvalidLegendreIndex { l, m });
        }
        Ok(LegendreIndex { l, m })
    }
}

/// Jacobi parameters (gamma, delta); negative rationals are the normal case here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobiParams {
    pub gamma: Rat,
    pub delta: Rat,
}

/// Romanovski parameters; `alpha`/`beta` are the weight parameters, distinct
/// from the scaling exponent alpha_l.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RomanovskiParams {
    pub alpha: Rat,
    pub beta: Rat,
}

// ---- dense univariate polynomials over Rat (ascending) ----

fn rpoly_trim(p: &mut Vec<Rat>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rpoly_derivative(p: &[Rat]) -> Vec<Rat> {
    (1..p.len())
        .map(|i| &p[i] * Rat::from_integer(BigInt::from(i)))
        .collect()
}

pub(crate) fn rpoly_eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Coefficients of the Legendre polynomial P_l, ascending in x.
pub fn legendre_poly(l: u32) -> Vec<Rat> {
    let mut prev = vec![rat(1, 1)];
    if l == 0 {
        return prev;
    }
    let mut cur = vec![rat(0, 1), rat(1, 1)];
    for k in 1..l {
        // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        let mut next = vec![Rat::zero(); k as usize + 2];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * rat(2 * k as i64 + 1, k as i64 + 1);
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c * rat(k as i64, k as i64 + 1);
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// (2l-1)!! as an exact rational.
pub fn double_factorial_odd(l: u32) -> Rat {
    let mut acc = BigInt::one();
    let mut k = 1i64;
    while k < 2 * l as i64 {
        acc *= BigInt::from(k);
        k += 2;
    }
    Rat::from_integer(acc)
}

fn legendre_exact(sig: Signature, idx: LegendreIndex) -> SurfaceExpression {
    let dm = {
        let mut p = legendre_poly(idx.l);
        for _ in 0..idx.m {
            p = rpoly_derivative(&p);
        }
        p
    };
    let poly = SurfaceExpression::from_c_polynomial(
        sig,
        &dm.iter().map(|c| Scalar::from_rat(c.clone())).collect::<Vec<_>>(),
    );
    // (x^2-1)^{m/2} = sinh^m eta, (1-x^2)^{m/2} = sin^m theta
    poly.mul(&SurfaceExpression::s_pow(sig, idx.m as i64))
        .expect("same signature")
}

/// P_l^m(cosh eta) as an exact hyperbolic ring element.
pub fn legendre_hyp_exact(idx: LegendreIndex) -> SurfaceExpression {
    legendre_exact(Signature::Hyperbolic, idx)
}

/// P_l^m(cos theta) as an exact trigonometric ring element.
pub fn legendre_trig_exact(idx: LegendreIndex) -> SurfaceExpression {
    legendre_exact(Signature::Trigonometric, idx)
}

/// P_l^m(cosh eta) e^{i m phi}.
pub fn pseudo_spherical_harmonic(idx: LegendreIndex) -> SurfaceExpression {
    legendre_hyp_exact(idx).with_phase(idx.m as i64)
}

/// P_l^m(cos theta) e^{i m phi} (no normalization constant).
pub fn spherical_harmonic(idx: LegendreIndex) -> SurfaceExpression {
    legendre_trig_exact(idx).with_phase(idx.m as i64)
}

// ---- Jacobi polynomials ----

/// Value of the Jacobi polynomial by the three-term recurrence, f64 path.
pub fn jacobi_poly(n: u32, p: &JacobiParams, x: f64) -> f64 {
    use num::ToPrimitive;
    let g = p.gamma.to_f64().unwrap_or(f64::NAN);
    let d = p.delta.to_f64().unwrap_or(f64::NAN);
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = ((g + d + 2.0) * x + (g - d)) / 2.0;
    for k in 2..=n as u64 {
        let k = k as f64;
        let a = 2.0 * k * (k + g + d) * (2.0 * k + g + d - 2.0);
        let b1 = (2.0 * k + g + d - 1.0) * (g * g - d * d);
        let c1 = (2.0 * k + g + d - 1.0) * (2.0 * k + g + d) * (2.0 * k + g + d - 2.0);
        let d1 = -2.0 * (k + g - 1.0) * (k + d - 1.0) * (2.0 * k + g + d);
        let next = ((c1 * x + b1) * cur + d1 * prev) / a;
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact-rational Jacobi value at rational x (same recurrence).
pub fn jacobi_poly_rat(n: u32, p: &JacobiParams, x: &Rat) -> Rat {
    rpoly_eval(&jacobi_coeffs(n, p), x)
}

/// Coefficients of the Jacobi polynomial in x, by the three-term recurrence
/// run over exact rational polynomials. The recurrence divisors
/// 2k(k+g+d)(2k+g+d-2) must be nonzero for k <= n; the parameter families
/// used here (g + d = -(2l+1), n <= l) never hit a zero.
pub fn jacobi_coeffs(n: u32, p: &JacobiParams) -> Vec<Rat> {
    let g = &p.gamma;
    let d = &p.delta;
    let mut prev = vec![rat(1, 1)];
    if n == 0 {
        return prev;
    }
    let half = rat(1, 2);
    let mut cur = vec![(g - d) * &half, (g + d + rat(2, 1)) * &half];
    for k in 2..=n as i64 {
        let kr = rat(k, 1);
        let gd = g + d;
        let a = rat(2 * k, 1) * (&kr + &gd) * (rat(2 * k - 2, 1) + &gd);
        assert!(!a.is_zero(), "Jacobi recurrence divisor vanished at k={k}");
        let b1 = (rat(2 * k - 1, 1) + &gd) * (g * g - d * d);
        let c1 = (rat(2 * k - 1, 1) + &gd) * (rat(2 * k, 1) + &gd) * (rat(2 * k - 2, 1) + &gd);
        let d1 = rat(-2, 1) * (&kr + g - rat(1, 1)) * (&kr + d - rat(1, 1)) * (rat(2 * k, 1) + &gd);
        let mut next = vec![Rat::zero(); k as usize + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * &c1 / &a;
            next[i] += c * &b1 / &a;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] += c * &d1 / &a;
        }
        rpoly_trim(&mut next);
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized binomial (v choose k) = v(v-1)...(v-k+1)/k! over Q(i).
fn gauss_binomial(v: &CRat, k: u32) -> CRat {
    let mut num = CRat::new(Rat::one(), Rat::zero());
    let mut den = Rat::one();
    for j in 0..k as i64 {
        num *= v - CRat::new(rat(j, 1), Rat::zero());
        den *= rat(j + 1, 1);
    }
    num * CRat::new(den.recip(), Rat::zero())
}

/// Jacobi coefficients from the hypergeometric series form
/// P_n = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s};
/// pole-free in the parameters, valid over Q(i). Serves as the independent
/// route cross-checking the recurrence, and carries the complex-parameter
/// case needed by the Romanovski-Jacobi identity.
pub fn jacobi_coeffs_series(n: u32, a: &CRat, b: &CRat) -> Vec<CRat> {
    let zero = CRat::new(Rat::zero(), Rat::zero());
    let mut out = vec![zero.clone(); n as usize + 1];
    let na = a + CRat::new(rat(n as i64, 1), Rat::zero());
    let nb = b + CRat::new(rat(n as i64, 1), Rat::zero());
    let half = CRat::new(rat(1, 2), Rat::zero());
    for s in 0..=n {
        let coef = gauss_binomial(&na, n - s) * gauss_binomial(&nb, s);
        if coef.is_zero() {
            continue;
        }
        // ((x-1)/2)^s ((x+1)/2)^{n-s} expanded by binomials
        let mut factor = vec![zero.clone(); n as usize + 1];
        for i in 0..=s {
            for j in 0..=(n - s) {
                let sign = if (s - i) % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                let c = gauss_binomial(&CRat::new(rat(s as i64, 1), Rat::zero()), i)
                    * gauss_binomial(&CRat::new(rat((n - s) as i64, 1), Rat::zero()), j)
                    * CRat::new(sign, Rat::zero());
                factor[(i + j) as usize] = factor[(i + j) as usize].clone() + c;
            }
        }
        let scale = num::pow::pow(half.clone(), n as usize);
        for (k, f) in factor.iter().enumerate() {
            out[k] = out[k].clone() + coef.clone() * f * &scale;
        }
    }
    out
}

// ---- Romanovski polynomials ----

/// Weight (1+x^2)^{beta-1} exp(-alpha acot x) with acot valued in (0, pi).
pub fn romanovski_weight(p: &RomanovskiParams, x: f64) -> f64 {
    use num::ToPrimitive;
    let a = p.alpha.to_f64().unwrap_or(f64::NAN);
    let b = p.beta.to_f64().unwrap_or(f64::NAN);
    let acot = FRAC_PI_2 - x.atan();
    (1.0 + x * x).powf(b - 1.0) * (-a * acot).exp()
}

/// R_n by the Rodrigues formula, as exact coefficients in x.
///
/// With w the weight and u_k = d^k[(1+x^2)^n w], one has
/// u_k = B_k (1+x^2)^{n-k} w where
/// B_{k+1} = (1+x^2) B_k' + [2(n-k+beta-1) x + alpha] B_k, B_0 = 1,
/// and R_n = B_n: a degree-n polynomial.
pub fn romanovski_poly(n: u32, p: &RomanovskiParams) -> Vec<Rat> {
    let mut b = vec![rat(1, 1)];
    for k in 0..n as i64 {
        let bp = rpoly_derivative(&b);
        let mut next = vec![Rat::zero(); b.len() + 1];
        for (i, c) in bp.iter().enumerate() {
            next[i] += c;
            if i + 2 >= next.len() {
                next.resize(i + 3, Rat::zero());
            }
            next[i + 2] += c;
        }
        let lin = (rat(n as i64 - k, 1) + &p.beta - rat(1, 1)) * rat(2, 1);
        for (i, c) in b.iter().enumerate() {
            next[i + 1] += c * &lin;
            next[i] += c * &p.alpha;
        }
        rpoly_trim(&mut next);
        b = next;
    }
    b
}

/// Left-hand side of (1+x^2) R'' + 2(alpha/2 + beta x) R' - n(2beta+n-1) R
/// with R = romanovski_poly(n, p); the contract is the zero polynomial.
pub fn romanovski_ode_residual(n: u32, p: &RomanovskiParams) -> Vec<Rat> {
    let r = romanovski_poly(n, p);
    let rp = rpoly_derivative(&r);
    let rpp = rpoly_derivative(&rp);
    let mut res = vec![Rat::zero(); r.len() + 2];
    for (i, c) in rpp.iter().enumerate() {
        res[i] += c;
        res[i + 2] += c;
    }
    for (i, c) in rp.iter().enumerate() {
        res[i] += c * &p.alpha;
        res[i + 1] += c * &p.beta * rat(2, 1);
    }
    let ev = rat(n as i64, 1) * (&p.beta * rat(2, 1) + rat(n as i64 - 1, 1));
    for (i, c) in r.iter().enumerate() {
        res[i] -= c * &ev;
    }
    rpoly_trim(&mut res);
    res
}

/// Verifies the exact correspondence between the Rodrigues-normalized
/// Romanovski polynomials and Jacobi polynomials of complex-conjugate
/// parameters and imaginary argument:
///
///   R_n^{a,b}(x) = 2^n n! (-i)^n P_n^{(b-1+ia/2, b-1-ia/2)}(i x),
///
/// an identity of polynomials over Q(i), expanded exactly on both sides.
/// (Transforming the two Rodrigues formulas into one another fixes the
/// parameters and the constant; statements of this correspondence that drop
/// normalization factors leave the constant out.)
pub fn romanovski_jacobi_check(n: u32, p: &RomanovskiParams) -> bool {
    use crate::scalar::{crat, i_pow};
    let lhs = romanovski_poly(n, p);
    let beta_minus_one = &p.beta - rat(1, 1);
    let half_alpha = &p.alpha * rat(1, 2);
    let a = crat(beta_minus_one.clone(), half_alpha.clone());
    let b = crat(beta_minus_one, -half_alpha);
    let jac = jacobi_coeffs_series(n, &a, &b);
    let mut scale = Rat::one(); // 2^n n!
    for j in 1..=n as i64 {
        scale *= rat(2 * j, 1);
    }
    // 2^n n! (-i)^n P(ix): coefficient of x^k is scale * (-i)^n i^k jac_k
    for (k, jk) in jac.iter().enumerate() {
        let expected = crat(lhs.get(k).cloned().unwrap_or_else(Rat::zero), Rat::zero());
        let got = jk.clone() * i_pow((k as i64) - (n as i64)) * crat(scale.clone(), Rat::zero());
        if got != expected {
            return false;
        }
    }
    true
}
