//! Differential operators of the problem and their exact / numeric action.
//!
//! `CasimirHyp` is the radial form f'' + coth f' - m^2/sinh^2 f acting on a
//! phase-m expression (the azimuthal derivative is already resolved to -m^2),
//! normalized so that it has eigenvalue +l(l+1) on the rank-l harmonics.
//! `L2Trig` is the squared angular momentum as usually printed, i.e. the
//! negative spherical Laplacian, again with eigenvalue +l(l+1).
//! `EckartHam(b)` adds +2b coth eta, `RosenMorseHam(b)` subtracts 2b cot theta.
//! `Dl`/`Dgeneric` are the first-order ladder operators.

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::ring::{coth, Signature, SurfaceExpression};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub enum AngularOperator {
    CasimirHyp,
    L2Trig,
    /// Casimir + 2b coth eta; the coupling may be a rational constant or the
    /// formal symbol b.
    EckartHam(Scalar),
    /// L^2 - 2b cot theta.
    RosenMorseHam(Scalar),
    /// l coth eta - d/deta.
    Dl(u32),
    /// (2b/alpha - 1/2) coth eta - d/deta; reduces to Dl at alpha = 2b/(l+1/2).
    Dgeneric { coupling: Scalar, alpha: Scalar },
}

impl AngularOperator {
    pub fn signature(&self) -> Signature {
        match self {
            AngularOperator::CasimirHyp
            | AngularOperator::EckartHam(_)
            | AngularOperator::Dl(_)
            | AngularOperator::Dgeneric { .. } => Signature::Hyperbolic,
            AngularOperator::L2Trig | AngularOperator::RosenMorseHam(_) => Signature::Trigonometric,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AngularOperator::CasimirHyp => "CasimirHyp",
            AngularOperator::L2Trig => "L2Trig",
            AngularOperator::EckartHam(_) => "EckartHam",
            AngularOperator::RosenMorseHam(_) => "RosenMorseHam",
            AngularOperator::Dl(_) => "Dl",
            AngularOperator::Dgeneric { .. } => "Dgeneric",
        }
    }

    fn check_signature(&self, f: &SurfaceExpression) -> Result<()> {
        if f.signature() != self.signature() {
            return Err(Error::OperatorSignature {
                op: self.name().to_string(),
                expected: self.signature(),
                got: f.signature(),
            });
        }
        Ok(())
    }
}

/// Radial Laplacian pattern f'' + (c/s) f' - m^2 s^-2 f with m = phase(f).
fn laplacian_pattern(f: &SurfaceExpression) -> SurfaceExpression {
    let sig = f.signature();
    let d1 = f.differentiate();
    let d2 = d1.differentiate();
    let mut acc = d2
        .add(&coth(sig).mul(&d1).expect("signature"))
        .expect("prefactor preserved");
    let m = f.phase();
    if m != 0 {
        let centrifugal = SurfaceExpression::s_pow(sig, -2)
            .mul(f)
            .expect("signature")
            .scaled(&Scalar::from_int(-m * m));
        acc = acc.add(&centrifugal).expect("prefactor preserved");
    }
    acc
}

fn ladder(f: &SurfaceExpression, strength: &Scalar) -> SurfaceExpression {
    let sig = f.signature();
    coth(sig)
        .mul(f)
        .expect("signature")
        .scaled(strength)
        .sub(&f.differentiate())
        .expect("prefactor preserved")
}

pub fn apply_exact(op: &AngularOperator, f: &SurfaceExpression) -> Result<SurfaceExpression> {
    op.check_signature(f)?;
    let sig = f.signature();
    match op {
        AngularOperator::CasimirHyp => Ok(laplacian_pattern(f)),
        AngularOperator::L2Trig => Ok(laplacian_pattern(f).negated()),
        AngularOperator::EckartHam(b) => {
            let pert = coth(sig).mul(f)?.scaled(&(&Scalar::from_int(2) * b));
            laplacian_pattern(f).add(&pert)
        }
        AngularOperator::RosenMorseHam(b) => {
            let pert = coth(sig).mul(f)?.scaled(&(&Scalar::from_int(-2) * b));
            laplacian_pattern(f).negated().add(&pert)
        }
        AngularOperator::Dl(l) => Ok(ladder(f, &Scalar::from_int(*l as i64))),
        AngularOperator::Dgeneric { coupling, alpha } => {
            let two_b = &Scalar::from_int(2) * coupling;
            let ratio = two_b.div_exact(alpha).ok_or_else(|| {
                Error::ExactDivisionFailed(format!("2b = {two_b} not divisible by alpha = {alpha}"))
            })?;
            let strength = &ratio - &Scalar::from_rational(1, 2);
            Ok(ladder(f, &strength))
        }
    }
}

/// The similarity image exp(-alpha t/2) op exp(alpha t/2) as an applicable
/// operator: op + alpha^2/4 + alpha (d/dt + coth/2).
#[derive(Clone, Debug)]
pub struct ConjugatedOperator {
    pub base: AngularOperator,
    pub alpha: Scalar,
}

pub fn conjugate_by_scaling(op: AngularOperator, alpha: Scalar) -> ConjugatedOperator {
    ConjugatedOperator { base: op, alpha }
}

impl ConjugatedOperator {
    pub fn apply_exact(&self, f: &SurfaceExpression) -> Result<SurfaceExpression> {
        let base = apply_exact(&self.base, f)?;
        if self.alpha.is_zero() {
            return Ok(base);
        }
        let sig = f.signature();
        let quarter = &(&self.alpha * &self.alpha) * &Scalar::from_rational(1, 4);
        let shift = f.scaled(&quarter);
        let half_coth = coth(sig).mul(f)?.scaled(&Scalar::from_rational(1, 2));
        let first_order = f
            .differentiate()
            .add(&half_coth)?
            .scaled(&self.alpha);
        base.add(&shift)?.add(&first_order)
    }

    /// Applies conjugation literally: exp(-alpha t/2) op (exp(alpha t/2) f).
    /// Used to certify the closed form above as an operator identity.
    pub fn apply_via_conjugation(&self, f: &SurfaceExpression) -> Result<SurfaceExpression> {
        let half = &self.alpha * &Scalar::from_rational(1, 2);
        let raised = f.exp_factor() + &half;
        let image = apply_exact(&self.base, &f.clone().with_exp_factor(raised))?;
        let lowered = image.exp_factor() - &half;
        Ok(image.with_exp_factor(lowered))
    }
}

/// Exact residual op f - lambda f; identically zero iff (f, lambda) is an
/// exact eigenpair.
pub fn eigen_residual_exact(
    op: &AngularOperator,
    f: &SurfaceExpression,
    lambda: &Scalar,
) -> Result<SurfaceExpression> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    apply_exact(op, f)?.sub(&f.scaled(lambda))
}

// ---- numeric grid side ----

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct GridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub n: usize,
    /// Even order of accuracy of the central stencils.
    pub fd_order: usize,
}

impl GridSpec {
    pub fn new(t_min: f64, t_max: f64, n: usize, fd_order: usize) -> Result<Self> {
        if !(t_min.is_finite() && t_max.is_finite()) || t_min >= t_max {
            return Err(Error::InvalidGrid(format!("bad range [{t_min}, {t_max}]")));
        }
        if n < 3 {
            return Err(Error::InvalidGrid(format!("need at least 3 points, got {n}")));
        }
        if fd_order == 0 || !fd_order.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!("stencil order {fd_order} must be even and positive")));
        }
        if fd_order > n - 1 {
            return Err(Error::GridTooSmall { n, order: fd_order });
        }
        Ok(GridSpec { t_min, t_max, n, fd_order })
    }

    /// Coth/cot singularities are kept off the grid.
    pub fn validate_for(&self, sig: Signature) -> Result<()> {
        match sig {
            Signature::Hyperbolic => {
                if self.t_min <= 0.0 {
                    return Err(Error::InvalidGrid(format!(
                        "hyperbolic grid needs t_min > 0, got {}",
                        self.t_min
                    )));
                }
            }
            Signature::Trigonometric => {
                if self.t_min <= 0.0 || self.t_max >= std::f64::consts::PI {
                    return Err(Error::InvalidGrid(format!(
                        "trigonometric grid must stay inside (0, pi), got [{}, {}]",
                        self.t_min, self.t_max
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn step(&self) -> f64 {
        (self.t_max - self.t_min) / (self.n - 1) as f64
    }

    pub fn point(&self, j: usize) -> f64 {
        self.t_min + self.step() * j as f64
    }
}

/// Default residual grids: eta in [0.2, 6.0], theta in [0.2, pi - 0.2],
/// 4001 points, order-8 stencils.
pub fn default_grid(sig: Signature) -> GridSpec {
    match sig {
        Signature::Hyperbolic => GridSpec::new(0.2, 6.0, 4001, 8).unwrap(),
        Signature::Trigonometric => {
            GridSpec::new(0.2, std::f64::consts::PI - 0.2, 4001, 8).unwrap()
        }
    }
}

/// Sampled radial factor on a grid; the azimuthal phase is kept symbolically.
#[derive(Clone, Debug)]
pub struct GridFunction {
    pub sig: Signature,
    pub spec: GridSpec,
    pub phase: i64,
    pub values: Vec<Complex64>,
}

impl GridFunction {
    /// Samples an expression at phi = 0 with the given numeric coupling.
    pub fn sample(expr: &SurfaceExpression, spec: GridSpec, b: f64) -> Result<Self> {
        spec.validate_for(expr.signature())?;
        let bb = Complex64::new(b, 0.0);
        let values = (0..spec.n)
            .map(|j| expr.eval(Complex64::new(spec.point(j), 0.0), 0.0, bb))
            .collect::<Vec<_>>();
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid("sampled values are not finite".into()));
        }
        Ok(GridFunction {
            sig: expr.signature(),
            spec,
            phase: expr.phase(),
            values,
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Central finite-difference weights for the m-th derivative on the uniform
/// stencil -k..k (2k+1 points, accuracy order 2k for m in {1, 2}), by
/// Fornberg's recursion on the nodes.
pub fn fd_weights(m: usize, half_width: usize) -> Vec<f64> {
    let nodes: Vec<f64> = (-(half_width as i64)..=half_width as i64)
        .map(|i| i as f64)
        .collect();
    let nn = nodes.len();
    // c[j][k] = weight of node j in the k-th derivative formula around 0
    let mut c = vec![vec![0.0; m + 1]; nn];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0];
    for i in 1..nn {
        let mn = m.min(i);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i];
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.iter().map(|row| row[m]).collect()
}

fn fd_derivative(values: &[Complex64], h: f64, m: usize, half_width: usize) -> Vec<Complex64> {
    let w = fd_weights(m, half_width);
    let scale = h.powi(m as i32);
    let n = values.len();
    let mut out = Vec::with_capacity(n - 2 * half_width);
    for j in half_width..n - half_width {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, wi) in w.iter().enumerate() {
            acc += values[j - half_width + i] * *wi;
        }
        out.push(acc / scale);
    }
    out
}

fn numeric_coupling(s: &Scalar, what: &str) -> Result<f64> {
    use num::ToPrimitive;
    match s.as_rat() {
        Some(r) => Ok(r.to_f64().unwrap_or(f64::NAN)),
        None => Err(Error::NonNumericCoupling(format!("{what} = {s}"))),
    }
}

/// Finite-difference application on the grid interior; the stencil margins
/// are dropped, so the result lives on a shrunken grid.
pub fn apply_numeric(op: &AngularOperator, f: &GridFunction) -> Result<GridFunction> {
    if f.sig != op.signature() {
        return Err(Error::OperatorSignature {
            op: op.name().to_string(),
            expected: op.signature(),
            got: f.sig,
        });
    }
    let k = f.spec.fd_order / 2;
    if f.spec.n < 2 * k + 3 {
        return Err(Error::GridTooSmall { n: f.spec.n, order: f.spec.fd_order });
    }
    let h = f.spec.step();
    let inner_n = f.spec.n - 2 * k;
    let inner_spec = GridSpec::new(
        f.spec.point(k),
        f.spec.point(f.spec.n - 1 - k),
        inner_n,
        f.spec.fd_order,
    )?;
    let ts: Vec<f64> = (0..inner_n).map(|j| inner_spec.point(j)).collect();
    let cs: Vec<f64> = ts
        .iter()
        .map(|&t| match f.sig {
            Signature::Hyperbolic => t.cosh(),
            Signature::Trigonometric => t.cos(),
        })
        .collect();
    let ss: Vec<f64> = ts
        .iter()
        .map(|&t| match f.sig {
            Signature::Hyperbolic => t.sinh(),
            Signature::Trigonometric => t.sin(),
        })
        .collect();
    let inner = &f.values[k..f.spec.n - k];
    let m2 = (f.phase * f.phase) as f64;

    let second_order = |sign: f64, pert: f64| -> Vec<Complex64> {
        let d1 = fd_derivative(&f.values, h, 1, k);
        let d2 = fd_derivative(&f.values, h, 2, k);
        (0..inner_n)
            .map(|j| {
                let lap = d2[j] + d1[j] * (cs[j] / ss[j]) - inner[j] * (m2 / (ss[j] * ss[j]));
                lap * sign + inner[j] * (pert * cs[j] / ss[j])
            })
            .collect()
    };

    let values = match op {
        AngularOperator::CasimirHyp => second_order(1.0, 0.0),
        AngularOperator::L2Trig => second_order(-1.0, 0.0),
        AngularOperator::EckartHam(b) => {
            let b = numeric_coupling(b, "coupling")?;
            second_order(1.0, 2.0 * b)
        }
        AngularOperator::RosenMorseHam(b) => {
            let b = numeric_coupling(b, "coupling")?;
            second_order(-1.0, -2.0 * b)
        }
        AngularOperator::Dl(l) => {
            let d1 = fd_derivative(&f.values, h, 1, k);
            (0..inner_n)
                .map(|j| inner[j] * (*l as f64 * cs[j] / ss[j]) - d1[j])
                .collect()
        }
        AngularOperator::Dgeneric { coupling, alpha } => {
            let b = numeric_coupling(coupling, "coupling")?;
            let a = numeric_coupling(alpha, "alpha")?;
            let strength = 2.0 * b / a - 0.5;
            let d1 = fd_derivative(&f.values, h, 1, k);
            (0..inner_n)
                .map(|j| inner[j] * (strength * cs[j] / ss[j]) - d1[j])
                .collect()
        }
    };
    Ok(GridFunction {
        sig: f.sig,
        spec: inner_spec,
        phase: f.phase,
        values,
    })
}

/// max |op f - lambda f| / max |f| over the interior grid points.
pub fn eigen_residual_numeric(
    op: &AngularOperator,
    f: &GridFunction,
    lambda: Complex64,
) -> Result<f64> {
    let scale = f.max_abs();
    if scale == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let g = apply_numeric(op, f)?;
    let k = f.spec.fd_order / 2;
    let mut worst: f64 = 0.0;
    for (j, gv) in g.values.iter().enumerate() {
        let r = (gv - f.values[j + k] * lambda).norm();
        worst = worst.max(r);
    }
    Ok(worst / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::special::{legendre_hyp_exact, pseudo_spherical_harmonic, spherical_harmonic, LegendreIndex};

    fn idx(l: u32, m: u32) -> LegendreIndex {
        LegendreIndex::new(l, m).unwrap()
    }

    #[test]
    fn casimir_eigen_on_harmonics() {
        for l in 0..=4u32 {
            for m in 0..=l {
                let y = pseudo_spherical_harmonic(idx(l, m));
                let lam = Scalar::from_int((l * (l + 1)) as i64);
                let res = eigen_residual_exact(&AngularOperator::CasimirHyp, &y, &lam).unwrap();
                assert!(res.is_zero(), "l={l} m={m}: {res}");
            }
        }
    }

    #[test]
    fn l2_eigen_on_spherical_harmonics() {
        for l in 0..=4u32 {
            for m in 0..=l {
                let y = spherical_harmonic(idx(l, m));
                let lam = Scalar::from_int((l * (l + 1)) as i64);
                let res = eigen_residual_exact(&AngularOperator::L2Trig, &y, &lam).unwrap();
                assert!(res.is_zero(), "l={l} m={m}");
            }
        }
    }

    #[test]
    fn ladder_annihilates_sectoral() {
        for l in 1..=6u32 {
            let p = legendre_hyp_exact(idx(l, l));
            let img = apply_exact(&AngularOperator::Dl(l), &p).unwrap();
            assert!(img.is_zero(), "l={l}");
        }
    }

    #[test]
    fn ladder_on_p10_gives_inverse_sinh() {
        // D_1 P_1^0 = s^-2 P_1^1 = 1/s
        let img = apply_exact(&AngularOperator::Dl(1), &legendre_hyp_exact(idx(1, 0))).unwrap();
        assert_eq!(img, SurfaceExpression::s_pow(Signature::Hyperbolic, -1));
    }

    #[test]
    fn dgeneric_specializes_to_dl() {
        // alpha = 2b/(l+1/2) turns Dgeneric into Dl, symbolically in b
        for l in 1..=4i64 {
            let alpha = Scalar::b_times(rat(4, 2 * l + 1));
            let op = AngularOperator::Dgeneric { coupling: Scalar::b(), alpha };
            let p = legendre_hyp_exact(idx(l as u32, l as u32));
            assert!(apply_exact(&op, &p).unwrap().is_zero(), "l={l}");
        }
        // and a detuned alpha does not annihilate
        let op = AngularOperator::Dgeneric {
            coupling: Scalar::b(),
            alpha: Scalar::b_times(rat(1, 1)),
        };
        let p = legendre_hyp_exact(idx(2, 2));
        assert!(!apply_exact(&op, &p).unwrap().is_zero());
    }

    #[test]
    fn signature_guard() {
        let y = spherical_harmonic(idx(1, 0));
        assert!(matches!(
            apply_exact(&AngularOperator::CasimirHyp, &y),
            Err(Error::OperatorSignature { .. })
        ));
    }

    #[test]
    fn ground_state_annihilated_symbolically() {
        // (Casimir - 4b^2 + 2b coth) e^{-2b eta} = 0, b formal
        let ground = SurfaceExpression::one(Signature::Hyperbolic)
            .with_exp_factor(Scalar::b_times(rat(-2, 1)));
        let op = AngularOperator::EckartHam(Scalar::b());
        let lam = &(&Scalar::from_int(4) * &Scalar::b()) * &Scalar::b();
        let res = eigen_residual_exact(&op, &ground, &lam).unwrap();
        assert!(res.is_zero(), "{res}");
    }

    #[test]
    fn conjugation_identity_small_cases() {
        // alpha = 0 leaves the operator unchanged
        let f = pseudo_spherical_harmonic(idx(2, 1));
        let conj = conjugate_by_scaling(AngularOperator::CasimirHyp, Scalar::zero());
        assert_eq!(
            conj.apply_exact(&f).unwrap(),
            apply_exact(&AngularOperator::CasimirHyp, &f).unwrap()
        );
        // alpha = 1 on s e^{i phi}: closed form equals literal conjugation
        let f = pseudo_spherical_harmonic(idx(1, 1));
        let conj = conjugate_by_scaling(AngularOperator::CasimirHyp, Scalar::one());
        assert_eq!(
            conj.apply_exact(&f).unwrap(),
            conj.apply_via_conjugation(&f).unwrap()
        );
    }

    #[test]
    fn fd_weights_match_known_stencils() {
        // order-2 second derivative: [1, -2, 1]
        let w = fd_weights(2, 1);
        assert!((w[0] - 1.0).abs() < 1e-12 && (w[1] + 2.0).abs() < 1e-12 && (w[2] - 1.0).abs() < 1e-12);
        // order-8 second derivative center coefficient is -205/72
        let w = fd_weights(2, 4);
        assert!((w[4] + 205.0 / 72.0).abs() < 1e-12);
        // order-8 first derivative: antisymmetric, outermost 1/280 magnitude
        let w = fd_weights(1, 4);
        assert!((w[0] - 1.0 / 280.0).abs() < 1e-12);
        assert!((w[8] + 1.0 / 280.0).abs() < 1e-12);
    }

    #[test]
    fn numeric_casimir_matches_exact_on_p10() {
        // Casimir on cosh eta = P_1^0 equals 2 cosh eta to 1e-8 relative
        let spec = GridSpec::new(0.2, 4.0, 4001, 8).unwrap();
        let p = legendre_hyp_exact(idx(1, 0));
        let g = GridFunction::sample(&p, spec, 1.0).unwrap();
        let r = eigen_residual_numeric(&AngularOperator::CasimirHyp, &g, Complex64::new(2.0, 0.0))
            .unwrap();
        assert!(r < 1e-8, "residual {r}");
    }

    #[test]
    fn perturbed_operator_moves_free_harmonics() {
        // the undamped harmonic is not an eigenfunction of the perturbed
        // operator: the numeric residual is strictly positive
        let spec = default_grid(Signature::Hyperbolic);
        let y = pseudo_spherical_harmonic(idx(1, 0));
        let g = GridFunction::sample(&y, spec, 1.0).unwrap();
        let op = AngularOperator::EckartHam(Scalar::one());
        let r = eigen_residual_numeric(&op, &g, Complex64::new(2.0, 0.0)).unwrap();
        assert!(r > 1e-2, "residual {r} unexpectedly small");
    }

    #[test]
    fn eckart_at_zero_coupling_is_casimir() {
        let spec = default_grid(Signature::Hyperbolic);
        let y = pseudo_spherical_harmonic(idx(3, 2));
        let g = GridFunction::sample(&y, spec, 0.0).unwrap();
        let a = apply_numeric(&AngularOperator::EckartHam(Scalar::zero()), &g).unwrap();
        let b = apply_numeric(&AngularOperator::CasimirHyp, &g).unwrap();
        for (x, y) in a.values.iter().zip(&b.values) {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn numeric_ladder_recovers_two_thirds() {
        // D_2 P_2^0 = (2/3) s^-2 P_2^1 on the grid
        let spec = default_grid(Signature::Hyperbolic);
        let p20 = legendre_hyp_exact(idx(2, 0));
        let g = GridFunction::sample(&p20, spec, 0.0).unwrap();
        let img = apply_numeric(&AngularOperator::Dl(2), &g).unwrap();
        let target = SurfaceExpression::s_pow(Signature::Hyperbolic, -2)
            .mul(&legendre_hyp_exact(idx(2, 1)))
            .unwrap();
        let t = GridFunction::sample(&target, img.spec, 0.0).unwrap();
        let scale = t.max_abs();
        for (a, b) in img.values.iter().zip(&t.values) {
            assert!((a - b * Complex64::new(2.0 / 3.0, 0.0)).norm() < 1e-8 * scale);
        }
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(0.0, 2.0, 101, 8)
            .unwrap()
            .validate_for(Signature::Hyperbolic)
            .is_err());
        assert!(GridSpec::new(0.1, 3.3, 101, 8)
            .unwrap()
            .validate_for(Signature::Trigonometric)
            .is_err());
        assert!(GridSpec::new(1.0, 0.5, 11, 2).is_err());
        assert!(GridSpec::new(0.1, 0.9, 5, 8).is_err());
    }
}
