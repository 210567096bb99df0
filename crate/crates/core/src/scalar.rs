//! Exact scalar domain: polynomials in the coupling `b` over the Gaussian
//! rationals Q(i).
//!
//! Every coefficient appearing in the surface-expression ring is a [`Scalar`].
//! The imaginary unit enters only through complexification (b -> -i b,
//! sinh -> i sin), so most scalars in practice are real; the representation
//! keeps exact track of `i` with i^2 = -1.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{BigInt, BigRational, ToPrimitive, Zero};

/// Exact rational number.
pub type Rat = BigRational;
/// Exact Gaussian rational a + b*i.
pub type CRat = num::complex::Complex<Rat>;

/// Shorthand for a rational p/q from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn crat_from_rat(re: Rat) -> CRat {
    CRat::new(re, Rat::zero())
}

pub fn crat(re: Rat, im: Rat) -> CRat {
    CRat::new(re, im)
}

/// i^k for any integer k (period 4).
pub fn i_pow(k: i64) -> CRat {
    match k.rem_euclid(4) {
        0 => crat(rat(1, 1), rat(0, 1)),
        1 => crat(rat(0, 1), rat(1, 1)),
        2 => crat(rat(-1, 1), rat(0, 1)),
        _ => crat(rat(0, 1), rat(-1, 1)),
    }
}

pub fn crat_to_f64(c: &CRat) -> Complex64 {
    Complex64::new(c.re.to_f64().unwrap_or(f64::NAN), c.im.to_f64().unwrap_or(f64::NAN))
}

/// Renders a Gaussian rational; pure reals come out as plain `p/q`.
pub fn crat_to_string(c: &CRat) -> String {
    if c.im.is_zero() {
        c.re.to_string()
    } else if c.re.is_zero() {
        format!("{}*i", c.im)
    } else {
        format!("({}+{}*i)", c.re, c.im)
    }
}

/// Polynomial in the coupling `b` with Gaussian-rational coefficients,
/// stored dense in ascending powers. Canonical form: empty vector for zero,
/// nonzero leading coefficient otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    coeffs: Vec<CRat>,
}

impl Scalar {
    fn normalized(mut coeffs: Vec<CRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Scalar { coeffs }
    }

    pub fn zero() -> Self {
        Scalar { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The formal coupling symbol `b`.
    pub fn b() -> Self {
        Scalar {
            coeffs: vec![crat_from_rat(Rat::zero()), crat_from_rat(Rat::from_integer(BigInt::from(1)))],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rat(rat(n, 1))
    }

    pub fn from_rational(p: i64, q: i64) -> Self {
        Scalar::from_rat(rat(p, q))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar::normalized(vec![crat_from_rat(r)])
    }

    pub fn from_crat(c: CRat) -> Self {
        Scalar::normalized(vec![c])
    }

    /// q * b for rational q.
    pub fn b_times(q: Rat) -> Self {
        Scalar::normalized(vec![crat_from_rat(Rat::zero()), crat_from_rat(q)])
    }

    pub fn i() -> Self {
        Scalar::from_crat(i_pow(1))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c == crat_from_rat(rat(1, 1)))
    }

    /// Degree in b; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> CRat {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| crat_from_rat(Rat::zero()))
    }

    pub fn coeffs(&self) -> &[CRat] {
        &self.coeffs
    }

    pub fn scale(&self, c: &CRat) -> Self {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar::normalized(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul_i(&self) -> Self {
        self.scale(&i_pow(1))
    }

    /// Substitute a concrete value for b, exactly.
    pub fn substitute_b(&self, value: &CRat) -> CRat {
        let mut acc = crat_from_rat(Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * value + c;
        }
        acc
    }

    /// The map b -> -i*b on coefficients: coeff of b^k picks up (-i)^k.
    pub fn substitute_b_neg_i(&self) -> Self {
        Scalar::normalized(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * i_pow(-(k as i64)))
                .collect(),
        )
    }

    /// Floating evaluation at a complex value of b.
    pub fn eval_f64(&self, b: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * b + crat_to_f64(c);
        }
        acc
    }

    /// Some(c) when the polynomial is a constant (degree 0 or zero).
    pub fn as_constant(&self) -> Option<CRat> {
        match self.coeffs.len() {
            0 => Some(crat_from_rat(Rat::zero())),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Some(r) when the polynomial is a real rational constant.
    pub fn as_rat(&self) -> Option<Rat> {
        self.as_constant().and_then(|c| if c.im.is_zero() { Some(c.re) } else { None })
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im.is_zero())
    }

    /// Exact polynomial division; None unless the remainder vanishes.
    pub fn div_exact(&self, divisor: &Scalar) -> Option<Scalar> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dlead = divisor.coeffs.last().unwrap().clone();
        let dlen = divisor.coeffs.len();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![crat_from_rat(Rat::zero()); qlen];
        for k in (0..qlen).rev() {
            let q = rem[k + dlen - 1].clone() / dlead.clone();
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    let t = &q * d;
                    rem[k + j] = rem[k + j].clone() - t;
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Scalar::normalized(quot))
        } else {
            None
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Scalar::normalized(out)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Scalar::normalized(out)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let mut out = vec![crat_from_rat(Rat::zero()); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                out[i + j] = out[i + j].clone() + t;
            }
        }
        Scalar::normalized(out)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::normalized(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", crat_to_string(c))?,
                _ => {
                    if c == &crat_from_rat(rat(1, 1)) {
                        write!(f, "b")?;
                    } else {
                        write!(f, "{}*b", crat_to_string(c))?;
                    }
                    if k > 1 {
                        write!(f, "^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.find('/') {
        Some(pos) => {
            let p: BigInt = s[..pos].parse().ok()?;
            let q: BigInt = s[pos + 1..].parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Total order on rationals, handy for sorting report parameters.
pub fn rat_cmp(a: &Rat, b: &Rat) -> Ordering {
    a.cmp(b)
}
