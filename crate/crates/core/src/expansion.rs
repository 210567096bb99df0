//! Construction of the perturbed eigenfunctions as damped superpositions of
//! (pseudo-)spherical harmonics, the triangular coefficient matrices relating
//! free and perturbed bases, and the exact Jacobi / Romanovski decomposition
//! checks.
//!
//! The first-order ladder relation comes in two strengths. For m in
//! {l-2, l-1} the image D_l P_l^m is a single multiple of s^-2 P_l^{m+1}
//! ([`recurrence_constant`]); in general it expands over several
//! s^-2 P_l^{m'} with m' = m+1, m+3, ... ([`ladder_expansion`]), and the
//! coefficient rows are built from that expansion, which is exactly the
//! closure condition the eigenproblem imposes.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::operators::{apply_exact, AngularOperator};
use crate::ring::{Mono, Signature, SurfaceExpression};
use crate::scalar::{crat_from_rat, parse_rat, rat, CRat, Rat, Scalar};
use crate::special::{
    jacobi_coeffs, legendre_hyp_exact, legendre_trig_exact, romanovski_poly, JacobiParams,
    LegendreIndex, RomanovskiParams,
};
use crate::spectrum::{alpha_l, alpha_l_symbolic, jacobi_params};

use num::Zero;

/// Upper-triangular matrix of expansion coefficients at a fixed rational
/// coupling; rows are indexed by m-tilde, columns by m. The azimuthal phase
/// law phase(r, c) = -(c - r) is implicit and attached on demand.
#[derive(Clone, PartialEq, Debug)]
pub struct CoeffMatrix {
    pub l: u32,
    pub b: Rat,
    entries: Vec<Vec<Rat>>,
}

impl CoeffMatrix {
    pub fn entry(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn is_upper_triangular_unit(&self) -> bool {
        let n = self.dim();
        (0..n).all(|r| {
            (0..n).all(|c| {
                if c < r {
                    self.entries[r][c].is_zero()
                } else if c == r {
                    self.entries[r][c] == rat(1, 1)
                } else {
                    true
                }
            })
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "l": self.l,
            "b": self.b.to_string(),
            "phase_law": "phase(r,c) = -(c-r)",
            "entries": self.entries.iter()
                .map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let l = v["l"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing l".into()))? as u32;
        let b = parse_rat(
            v["b"]
                .as_str()
                .ok_or_else(|| Error::Parse("missing b".into()))?,
        )
        .ok_or_else(|| Error::Parse("bad rational b".into()))?;
        let rows = v["entries"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing entries".into()))?;
        let mut entries = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse("entries must be an array of arrays".into()))?;
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                let s = e
                    .as_str()
                    .ok_or_else(|| Error::Parse("entry must be a rational string".into()))?;
                out.push(parse_rat(s).ok_or_else(|| Error::Parse(format!("bad rational {s}")))?);
            }
            entries.push(out);
        }
        if entries.len() != l as usize + 1 || entries.iter().any(|r| r.len() != l as usize + 1) {
            return Err(Error::Parse("entries must be (l+1) x (l+1)".into()));
        }
        Ok(CoeffMatrix { l, b, entries })
    }
}

/// An assembled eigenfunction e^{-alpha_l t/2} sum_m a_m P_l^m e^{i mt phi}.
#[derive(Clone, Debug)]
pub struct EckartEigenfunction {
    pub l: u32,
    pub m_tilde: i64,
    pub b: Rat,
    pub expression: SurfaceExpression,
}

fn legendre_for(sig: Signature, l: u32, m: u32) -> SurfaceExpression {
    let idx = LegendreIndex::new(l, m).expect("m <= l by construction");
    match sig {
        Signature::Hyperbolic => legendre_hyp_exact(idx),
        Signature::Trigonometric => legendre_trig_exact(idx),
    }
}

/// The monomial carrying the lowest s power of P_l^m; no other P_l^{m'} with
/// m' > m contains it, so it isolates the leading term of an expansion.
fn marker_mono(sig: Signature, l: u32, m: u32) -> Mono {
    legendre_for(sig, l, m)
        .min_mono()
        .expect("Legendre functions are nonzero")
}

/// The single ladder constant c with D_l P_l^m = c s^-2 P_l^{m+1}, by exact
/// division. Fails with a descriptive error when the quotient is not a
/// constant (which happens for every m < l-2).
pub fn recurrence_constant(l: u32, m: u32) -> Result<Rat> {
    if l < 1 || m >= l {
        return Err(Error::IndexOutOfRange(format!(
            "recurrence constant needs 1 <= l, 0 <= m < l; got l={l} m={m}"
        )));
    }
    let image = apply_exact(&AngularOperator::Dl(l), &legendre_hyp_exact(LegendreIndex::new(l, m)?))?;
    let target = SurfaceExpression::s_pow(Signature::Hyperbolic, -2)
        .mul(&legendre_hyp_exact(LegendreIndex::new(l, m + 1)?))?;
    let mut ratio: Option<Rat> = None;
    // every monomial of either side must give the same ratio
    for (mono, tc) in target.terms() {
        let ic = image.coeff_of(*mono);
        let q = match (ic.as_rat(), tc.as_rat()) {
            (Some(a), Some(b)) if !b.is_zero() => a / b,
            _ => {
                return Err(Error::NonConstantQuotient(format!(
                    "non-rational coefficients at l={l} m={m}"
                )))
            }
        };
        match &ratio {
            None => ratio = Some(q),
            Some(r) if *r == q => {}
            Some(r) => {
                return Err(Error::NonConstantQuotient(format!(
                    "D_{l} P_{l}^{m} / (s^-2 P_{l}^{}) is not constant: {r} vs {q}",
                    m + 1
                )))
            }
        }
    }
    let q = ratio.ok_or_else(|| Error::NonConstantQuotient("empty target".into()))?;
    let residual = image.sub(&target.scaled(&Scalar::from_rat(q.clone())))?;
    if !residual.is_zero() {
        return Err(Error::NonConstantQuotient(format!(
            "division leaves remainder {residual} at l={l} m={m}"
        )));
    }
    Ok(q)
}

/// Expands D_l P_l^m exactly over the basis { s^-2 P_l^{m'} : m < m' <= l },
/// returning the nonzero (m', coefficient) pairs. The expansion always exists
/// and reduces to a single pair exactly when `recurrence_constant` succeeds.
pub fn ladder_expansion(l: u32, m: u32) -> Result<Vec<(u32, Rat)>> {
    if l < 1 || m >= l {
        return Err(Error::IndexOutOfRange(format!(
            "ladder expansion needs 1 <= l, 0 <= m < l; got l={l} m={m}"
        )));
    }
    let sig = Signature::Hyperbolic;
    let mut rem = apply_exact(&AngularOperator::Dl(l), &legendre_for(sig, l, m))?;
    let mut out = Vec::new();
    for mp in (m + 1)..=l {
        let basis = SurfaceExpression::s_pow(sig, -2).mul(&legendre_for(sig, l, mp))?;
        let marker = basis.min_mono().expect("nonzero basis element");
        let num = rem.coeff_of(marker);
        if num.is_zero() {
            continue;
        }
        let den = basis.coeff_of(marker);
        let coeff = match (num.as_rat(), den.as_rat()) {
            (Some(a), Some(b)) if !b.is_zero() => a / b,
            _ => {
                return Err(Error::ExactDivisionFailed(format!(
                    "non-rational ladder coefficient at l={l} m={m} m'={mp}"
                )))
            }
        };
        rem = rem.sub(&basis.scaled(&Scalar::from_rat(coeff.clone())))?;
        out.push((mp, coeff));
    }
    if !rem.is_zero() {
        return Err(Error::ExactDivisionFailed(format!(
            "ladder image of P_{l}^{m} leaves remainder {rem}"
        )));
    }
    Ok(out)
}

/// One row of the coefficient matrix with the coupling kept symbolic:
/// entries are polynomials in b of degree m - m_tilde.
pub fn coeff_row_symbolic(l: u32, m_tilde: u32) -> Result<Vec<Scalar>> {
    if m_tilde > l {
        return Err(Error::IndexOutOfRange(format!("m_tilde = {m_tilde} > l = {l}")));
    }
    let alpha = alpha_l_symbolic(l);
    let mut row: Vec<Scalar> = vec![Scalar::zero(); l as usize + 1];
    row[m_tilde as usize] = Scalar::one();
    let expansions: Vec<Vec<(u32, Rat)>> = (m_tilde..l)
        .map(|m| ladder_expansion(l, m))
        .collect::<Result<_>>()?;
    for mp in (m_tilde + 1)..=l {
        // (mt^2 - mp^2) a_mp + alpha sum_{m < mp} d_{m,mp} a_m = 0
        let mut acc = Scalar::zero();
        for m in m_tilde..mp {
            if let Some((_, d)) = expansions[(m - m_tilde) as usize]
                .iter()
                .find(|(target, _)| *target == mp)
            {
                acc = &acc + &(&row[m as usize] * &Scalar::from_rat(d.clone()));
            }
        }
        let denom = rat(
            m_tilde as i64 * m_tilde as i64 - mp as i64 * mp as i64,
            1,
        );
        row[mp as usize] = &(&alpha * &acc) * &Scalar::from_rat(denom.recip());
    }
    Ok(row)
}

/// The full (l+1) x (l+1) matrix with symbolic coupling.
pub fn coeff_matrix_symbolic(l: u32) -> Result<Vec<Vec<Scalar>>> {
    (0..=l).map(|mt| coeff_row_symbolic(l, mt)).collect()
}

/// The coefficient matrix at a fixed rational coupling.
pub fn coeff_matrix(l: u32, b: &Rat) -> Result<CoeffMatrix> {
    let bval = crat_from_rat(b.clone());
    let mut entries = Vec::with_capacity(l as usize + 1);
    for mt in 0..=l {
        let row = coeff_row_symbolic(l, mt)?
            .iter()
            .map(|s| {
                let v = s.substitute_b(&bval);
                debug_assert!(v.im.is_zero());
                v.re
            })
            .collect();
        entries.push(row);
    }
    Ok(CoeffMatrix { l, b: b.clone(), entries })
}

fn radial_sum(sig: Signature, l: u32, m_tilde: u32, coeffs: &[Scalar]) -> Result<SurfaceExpression> {
    let mut acc = SurfaceExpression::zero(sig);
    for m in m_tilde..=l {
        let term = legendre_for(sig, l, m).scaled(&coeffs[m as usize]);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Hyperbolic eigenfunction with the coupling kept symbolic; phase m_tilde
/// may be negative (the radial part then uses |m_tilde|).
pub fn eckart_eigenfunction_symbolic(l: u32, m_tilde: i64) -> Result<SurfaceExpression> {
    let amt = m_tilde.unsigned_abs() as u32;
    if amt > l {
        return Err(Error::IndexOutOfRange(format!("|m_tilde| = {amt} > l = {l}")));
    }
    let row = coeff_row_symbolic(l, amt)?;
    let radial = radial_sum(Signature::Hyperbolic, l, amt, &row)?;
    let damping = &alpha_l_symbolic(l) * &Scalar::from_rational(-1, 2);
    Ok(radial.with_exp_factor(damping).with_phase(m_tilde))
}

/// Eigenfunction of Casimir + 2b coth eta with eigenvalue l(l+1) + alpha_l^2/4.
pub fn eckart_eigenfunction(l: u32, m_tilde: i64, b: &Rat) -> Result<EckartEigenfunction> {
    let expr = eckart_eigenfunction_symbolic(l, m_tilde)?.substitute_b(&crat_from_rat(b.clone()));
    Ok(EckartEigenfunction { l, m_tilde, b: b.clone(), expression: expr })
}

/// Assembles a damped superposition from explicit row coefficients, without
/// any correctness assumption on them. Lets tests corrupt single entries and
/// watch the eigen-residual react.
pub fn eigenfunction_from_row(l: u32, m_tilde: i64, b: &Rat, row: &[Rat]) -> Result<SurfaceExpression> {
    let amt = m_tilde.unsigned_abs() as u32;
    if amt > l || row.len() != l as usize + 1 {
        return Err(Error::IndexOutOfRange(format!(
            "row of length {} for l = {l}, m_tilde = {m_tilde}",
            row.len()
        )));
    }
    let coeffs: Vec<Scalar> = row.iter().map(|r| Scalar::from_rat(r.clone())).collect();
    let radial = radial_sum(Signature::Hyperbolic, l, amt, &coeffs)?;
    let damping = Scalar::from_rat(-alpha_l(l, b) / rat(2, 1));
    Ok(radial.with_exp_factor(damping).with_phase(m_tilde))
}

/// Image of the hyperbolic eigenfunction on the sphere: complexify, then
/// normalize the leading (m = |m_tilde|) coefficient back to 1. The result
/// solves L^2 - 2b cot theta with eigenvalue l(l+1) - alpha_l^2/4 and has
/// real rational coefficients.
pub fn rosen_morse_eigenfunction(l: u32, m_tilde: i64, b: &Rat) -> Result<EckartEigenfunction> {
    let amt = m_tilde.unsigned_abs() as u32;
    if amt > l {
        return Err(Error::IndexOutOfRange(format!("|m_tilde| = {amt} > l = {l}")));
    }
    let image = eckart_eigenfunction_symbolic(l, m_tilde)?.substitute_complexify()?;
    // leading coefficient read off at the marker monomial of P_l^{|mt|}
    let marker = marker_mono(Signature::Trigonometric, l, amt);
    let lead = image
        .coeff_of(marker)
        .div_exact(&Scalar::from_crat(
            legendre_for(Signature::Trigonometric, l, amt)
                .coeff_of(marker)
                .as_constant()
                .expect("Legendre coefficients are constants"),
        ))
        .expect("leading coefficient is a nonzero constant");
    let lead = lead
        .as_constant()
        .ok_or_else(|| Error::NonRealCoefficient(format!("leading coefficient {lead} not constant")))?;
    let inv = Scalar::from_crat(CRat::new(rat(1, 1), rat(0, 1)) / lead);
    let normalized = image.scaled(&inv).substitute_b(&crat_from_rat(b.clone()));
    if !normalized.has_real_coefficients() {
        return Err(Error::NonRealCoefficient(normalized.to_string()));
    }
    Ok(EckartEigenfunction { l, m_tilde, b: b.clone(), expression: normalized })
}

/// Splits a damped eigenfunction into its undamped, phase-free radial part.
fn strip_prefactors(e: &SurfaceExpression) -> SurfaceExpression {
    e.clone().with_exp_factor(Scalar::zero()).with_phase(0)
}

fn proportionality_check(
    expanded: SurfaceExpression,
    reference: SurfaceExpression,
    marker: Mono,
) -> Result<(Rat, SurfaceExpression)> {
    let num = expanded.coeff_of(marker);
    let den = reference.coeff_of(marker);
    let sigma = match (num.as_rat(), den.as_rat()) {
        (Some(a), Some(b)) if !b.is_zero() => a / b,
        _ => {
            return Err(Error::ExactDivisionFailed(
                "leading coefficients are not rational constants".into(),
            ))
        }
    };
    let residual = expanded.sub(&reference.scaled(&Scalar::from_rat(sigma.clone())))?;
    Ok((sigma, residual))
}

/// Expands sinh^l eta * P_n^{gamma_l, delta_l}(coth eta) with n = l - m_tilde
/// and compares it against the coefficient row sum_m a_m P_l^m. Returns the
/// matching scale and the exact difference; a correct build returns a zero
/// residual.
pub fn jacobi_decomposition_check(l: u32, m_tilde: u32, b: &Rat) -> Result<(Rat, SurfaceExpression)> {
    if m_tilde > l {
        return Err(Error::IndexOutOfRange(format!("m_tilde = {m_tilde} > l = {l}")));
    }
    let sig = Signature::Hyperbolic;
    let n = l - m_tilde;
    let JacobiParams { gamma, delta } = jacobi_params(l, b);
    let poly = jacobi_coeffs(n, &JacobiParams { gamma, delta });
    // sinh^l * sum_k p_k (c/s)^k = sum_k p_k c^k s^{l-k}
    let mut expanded = SurfaceExpression::zero(sig);
    for (k, p) in poly.iter().enumerate() {
        let term = SurfaceExpression::monomial(sig, k as u32, l as i64 - k as i64, Scalar::from_rat(p.clone()));
        expanded = expanded.add(&term)?;
    }
    let row = coeff_matrix(l, b)?;
    let coeffs: Vec<Scalar> = row.rows()[m_tilde as usize]
        .iter()
        .map(|r| Scalar::from_rat(r.clone()))
        .collect();
    let reference = radial_sum(sig, l, m_tilde, &coeffs)?;
    proportionality_check(expanded, reference, marker_mono(sig, l, m_tilde))
}

/// Trigonometric analogue: sin^l theta * R_n^{alpha_l, 1/2 - l}(cot theta)
/// against the complexified coefficient row. The Romanovski beta parameter
/// 1/2 - l is the one consistent with the Romanovski differential equation
/// for this ansatz.
pub fn romanovski_decomposition_check(
    l: u32,
    m_tilde: u32,
    b: &Rat,
) -> Result<(Rat, SurfaceExpression)> {
    if m_tilde > l {
        return Err(Error::IndexOutOfRange(format!("m_tilde = {m_tilde} > l = {l}")));
    }
    let sig = Signature::Trigonometric;
    let n = l - m_tilde;
    let params = RomanovskiParams {
        alpha: alpha_l(l, b),
        beta: rat(1, 2) - rat(l as i64, 1),
    };
    let poly = romanovski_poly(n, &params);
    let mut expanded = SurfaceExpression::zero(sig);
    for (k, p) in poly.iter().enumerate() {
        let term = SurfaceExpression::monomial(sig, k as u32, l as i64 - k as i64, Scalar::from_rat(p.clone()));
        expanded = expanded.add(&term)?;
    }
    let reference = strip_prefactors(&rosen_morse_eigenfunction(l, m_tilde as i64, b)?.expression);
    proportionality_check(expanded, reference, marker_mono(sig, l, m_tilde))
}

/// Serializes all rows for a given l as JSON (used by the CLI and tests).
pub fn coeff_matrix_json(l: u32, b: &Rat) -> Result<Value> {
    Ok(coeff_matrix(l, b)?.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::eigen_residual_exact;
    use crate::spectrum::{eckart_energy, rosen_morse_energy};

    fn b1() -> Rat {
        rat(1, 1)
    }

    #[test]
    fn pinned_ladder_constants() {
        assert_eq!(recurrence_constant(1, 0).unwrap(), rat(1, 1));
        assert_eq!(recurrence_constant(2, 0).unwrap(), rat(2, 3));
        assert_eq!(recurrence_constant(2, 1).unwrap(), rat(1, 1));
        // frozen from the exact-division oracle
        assert_eq!(recurrence_constant(3, 1).unwrap(), rat(4, 5));
        assert_eq!(recurrence_constant(4, 2).unwrap(), rat(6, 7));
    }

    #[test]
    fn single_term_ladder_fails_below_l_minus_2() {
        // D_3 P_3^0 = (1/2) s^-2 P_3^1 + (1/20) s^-2 P_3^3: no constant quotient
        assert!(matches!(
            recurrence_constant(3, 0),
            Err(Error::NonConstantQuotient(_))
        ));
        let d = ladder_expansion(3, 0).unwrap();
        assert_eq!(d, vec![(1, rat(1, 2)), (3, rat(1, 20))]);
        let d = ladder_expansion(4, 1).unwrap();
        assert_eq!(d, vec![(2, rat(2, 3)), (4, rat(1, 42))]);
        let d = ladder_expansion(5, 0).unwrap();
        assert_eq!(d, vec![(1, rat(1, 3)), (3, rat(1, 56)), (5, rat(1, 3024))]);
    }

    #[test]
    fn ladder_expansion_matches_single_term_where_it_exists() {
        for l in 1..=6u32 {
            for m in l.saturating_sub(2)..l {
                let c = recurrence_constant(l, m).unwrap();
                let d = ladder_expansion(l, m).unwrap();
                assert_eq!(d, vec![(m + 1, c)], "l={l} m={m}");
            }
        }
    }

    #[test]
    fn matrices_reproduce_low_rank_closed_forms() {
        // l=1, b=1: [[1, -4/3], [0, 1]]
        let m = coeff_matrix(1, &b1()).unwrap();
        assert_eq!(m.rows(), &[vec![rat(1, 1), rat(-4, 3)], vec![rat(0, 1), rat(1, 1)]]);
        // l=2, b=1: rows (1, -8/15, 8/75), (0, 1, -4/15), (0, 0, 1)
        let m = coeff_matrix(2, &b1()).unwrap();
        assert_eq!(
            m.rows(),
            &[
                vec![rat(1, 1), rat(-8, 15), rat(8, 75)],
                vec![rat(0, 1), rat(1, 1), rat(-4, 15)],
                vec![rat(0, 1), rat(0, 1), rat(1, 1)],
            ]
        );
        // zero coupling: identity for any l
        let m = coeff_matrix(4, &rat(0, 1)).unwrap();
        for r in 0..=4 {
            for c in 0..=4 {
                assert_eq!(*m.entry(r, c), if r == c { rat(1, 1) } else { rat(0, 1) });
            }
        }
    }

    #[test]
    fn frozen_higher_rows() {
        // values fixed by the independent exact prototype
        let m = coeff_matrix(3, &b1()).unwrap();
        assert_eq!(m.rows()[0], vec![rat(1, 1), rat(-2, 7), rat(8, 245), rat(-9, 1715)]);
        assert_eq!(m.rows()[1], vec![rat(0, 1), rat(1, 1), rat(-16, 105), rat(8, 735)]);
        let m = coeff_matrix(4, &b1()).unwrap();
        assert_eq!(
            m.rows()[0],
            vec![rat(1, 1), rat(-8, 45), rat(16, 1215), rat(-452, 229635), rat(356, 2066715)]
        );
    }

    #[test]
    fn symbolic_matrix_structure() {
        for l in 0..=8u32 {
            let m = coeff_matrix_symbolic(l).unwrap();
            for (r, row) in m.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    if c < r {
                        assert!(e.is_zero());
                    } else if c == r {
                        assert!(e.is_one());
                    } else {
                        assert_eq!(e.degree(), Some(c - r), "l={l} r={r} c={c}");
                        assert!(e.is_real());
                    }
                }
            }
        }
    }

    #[test]
    fn eigen_residuals_vanish_exactly() {
        for l in 0..=4u32 {
            for mt in 0..=l as i64 {
                for b in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                    let f = eckart_eigenfunction(l, mt, &b).unwrap();
                    let lam = Scalar::from_rat(-eckart_energy(l, &b));
                    let op = AngularOperator::EckartHam(Scalar::from_rat(b.clone()));
                    let res = eigen_residual_exact(&op, &f.expression, &lam).unwrap();
                    assert!(res.is_zero(), "l={l} mt={mt} b={b}: {res}");
                }
            }
        }
    }

    #[test]
    fn eigenfunction_closed_forms() {
        // l = 0: e^{-2b eta}
        let f = eckart_eigenfunction(0, 0, &rat(3, 2)).unwrap().expression;
        let want = SurfaceExpression::one(Signature::Hyperbolic)
            .with_exp_factor(Scalar::from_rat(rat(-3, 1)));
        assert_eq!(f, want);
        // l = 1, mt = 1: e^{-2b eta/3} sinh eta e^{i phi}
        let f = eckart_eigenfunction(1, 1, &b1()).unwrap().expression;
        let want = SurfaceExpression::s(Signature::Hyperbolic)
            .with_exp_factor(Scalar::from_rat(rat(-2, 3)))
            .with_phase(1);
        assert_eq!(f, want);
        // l = 2, mt = 0, b = 1: e^{-2 eta/5} (P_2^0 - 8/15 P_2^1 + 8/75 P_2^2)
        let f = eckart_eigenfunction(2, 0, &b1()).unwrap().expression;
        let radial = legendre_for(Signature::Hyperbolic, 2, 0)
            .add(&legendre_for(Signature::Hyperbolic, 2, 1).scaled(&Scalar::from_rat(rat(-8, 15))))
            .unwrap()
            .add(&legendre_for(Signature::Hyperbolic, 2, 2).scaled(&Scalar::from_rat(rat(8, 75))))
            .unwrap();
        assert_eq!(f, radial.with_exp_factor(Scalar::from_rat(rat(-2, 5))));
        // Rosen-Morse sectoral case: e^{-alpha theta/2} P_l^l e^{il phi} with
        // leading coefficient one
        let f = rosen_morse_eigenfunction(2, 2, &b1()).unwrap().expression;
        let want = legendre_for(Signature::Trigonometric, 2, 2)
            .with_exp_factor(Scalar::from_rat(rat(-2, 5)))
            .with_phase(2);
        assert_eq!(f, want);
    }

    #[test]
    fn negative_m_tilde_conjugates_phase_only() {
        let plus = eckart_eigenfunction(3, 2, &b1()).unwrap().expression;
        let minus = eckart_eigenfunction(3, -2, &b1()).unwrap().expression;
        assert_eq!(plus.phase(), 2);
        assert_eq!(minus.phase(), -2);
        assert_eq!(strip_prefactors(&plus), strip_prefactors(&minus));
        // same eigenvalue
        let lam = Scalar::from_rat(-eckart_energy(3, &b1()));
        let op = AngularOperator::EckartHam(Scalar::from_rat(b1()));
        assert!(eigen_residual_exact(&op, &minus, &lam).unwrap().is_zero());
    }

    #[test]
    fn rosen_morse_twin() {
        for l in 0..=4u32 {
            for mt in 0..=l as i64 {
                for b in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                    let f = rosen_morse_eigenfunction(l, mt, &b).unwrap();
                    assert!(f.expression.has_real_coefficients());
                    let lam = Scalar::from_rat(rosen_morse_energy(l, &b));
                    let op = AngularOperator::RosenMorseHam(Scalar::from_rat(b.clone()));
                    let res = eigen_residual_exact(&op, &f.expression, &lam).unwrap();
                    assert!(res.is_zero(), "l={l} mt={mt} b={b}");
                }
            }
        }
    }

    #[test]
    fn rosen_morse_differs_from_eckart_rows_at_l3() {
        // mixed powers of b twist under complexification: frozen row
        // [1, -2/7, 8/245, 17/15435] against the hyperbolic -9/1715
        let rm = rosen_morse_eigenfunction(3, 0, &b1()).unwrap().expression;
        let row = [rat(1, 1), rat(-2, 7), rat(8, 245), rat(17, 15435)];
        let coeffs: Vec<Scalar> = row.iter().map(|r| Scalar::from_rat(r.clone())).collect();
        let expected = radial_sum(Signature::Trigonometric, 3, 0, &coeffs)
            .unwrap()
            .with_exp_factor(Scalar::from_rat(rat(-2, 7)));
        assert_eq!(rm, expected);
        let ek = coeff_matrix(3, &b1()).unwrap();
        assert_eq!(*ek.entry(0, 3), rat(-9, 1715));
    }

    #[test]
    fn jacobi_decomposition_zero_residual() {
        for l in 1..=4u32 {
            for mt in 0..=l {
                for b in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                    let (_, res) = jacobi_decomposition_check(l, mt, &b).unwrap();
                    assert!(res.is_zero(), "l={l} mt={mt} b={b}");
                }
            }
        }
    }

    #[test]
    fn jacobi_decomposition_scales() {
        use crate::special::double_factorial_odd;
        // single-term case: sigma = 1/(2l-1)!!
        for l in 1..=4u32 {
            let (sigma, _) = jacobi_decomposition_check(l, l, &b1()).unwrap();
            assert_eq!(sigma, double_factorial_odd(l).recip());
        }
        // frozen leading scales at m_tilde = 0, b = 1
        let expect = [(1u32, rat(-1, 2)), (2, rat(1, 4)), (3, rat(-1, 8)), (4, rat(1, 16))];
        for (l, want) in expect {
            let (sigma, _) = jacobi_decomposition_check(l, 0, &b1()).unwrap();
            assert_eq!(sigma, want, "l={l}");
        }
    }

    #[test]
    fn romanovski_decomposition_zero_residual() {
        for l in 1..=4u32 {
            for mt in 0..=l {
                for b in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                    let (_, res) = romanovski_decomposition_check(l, mt, &b).unwrap();
                    assert!(res.is_zero(), "l={l} mt={mt} b={b}");
                }
            }
        }
        // zero coupling reduces to pure P_l^mt matching
        let (sigma, res) = romanovski_decomposition_check(3, 1, &rat(0, 1)).unwrap();
        assert!(res.is_zero());
        assert!(!sigma.is_zero());
    }

    #[test]
    fn romanovski_decomposition_scales() {
        // frozen: sigma(l, 0) at b=1 is -1, 2, -6, 24
        let expect = [(1u32, rat(-1, 1)), (2, rat(2, 1)), (3, rat(-6, 1)), (4, rat(24, 1))];
        for (l, want) in expect {
            let (sigma, _) = romanovski_decomposition_check(l, 0, &b1()).unwrap();
            assert_eq!(sigma, want, "l={l}");
        }
    }

    #[test]
    fn corrupted_entries_break_the_eigen_residual() {
        for l in 1..=3u32 {
            let matrix = coeff_matrix(l, &b1()).unwrap();
            for mt in 0..=l as usize {
                for c in (mt + 1)..=l as usize {
                    let mut row = matrix.rows()[mt].clone();
                    row[c] = -row[c].clone();
                    let f = eigenfunction_from_row(l, mt as i64, &b1(), &row).unwrap();
                    let lam = Scalar::from_rat(-eckart_energy(l, &b1()));
                    let op = AngularOperator::EckartHam(Scalar::from_rat(b1()));
                    let res = eigen_residual_exact(&op, &f, &lam).unwrap();
                    assert!(!res.is_zero(), "flip at l={l} row={mt} col={c} went unnoticed");
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for l in 0..=3u32 {
            let m = coeff_matrix(l, &rat(5, 7)).unwrap();
            let v = m.to_json();
            let back = CoeffMatrix::from_json(&v).unwrap();
            assert_eq!(m, back);
        }
    }
}
