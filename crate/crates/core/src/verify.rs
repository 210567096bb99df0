//! Verification suites: every identity the kernel is built around, run over a
//! parameter lattice and reported one line per (identity, parameter tuple).
//!
//! Tuples run in parallel; reports come back sorted by (id, params) so the
//! output is deterministic regardless of scheduling.

use std::str::FromStr;

use num::complex::Complex64;
use num::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::expansion::{
    coeff_matrix_symbolic, eckart_eigenfunction, jacobi_decomposition_check, ladder_expansion,
    recurrence_constant, romanovski_decomposition_check, rosen_morse_eigenfunction,
};
use crate::operators::{
    apply_exact, conjugate_by_scaling, default_grid, eigen_residual_exact, eigen_residual_numeric,
    AngularOperator, GridFunction, GridSpec,
};
use crate::ring::{Signature, SurfaceExpression};
use crate::scalar::{rat, Rat, Scalar};
use crate::special::{
    legendre_hyp_exact, legendre_trig_exact, romanovski_jacobi_check, romanovski_ode_residual,
    LegendreIndex, RomanovskiParams,
};
use crate::spectrum::{alpha_l, eckart_energy, rosen_morse_energy};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub params: String,
    pub status: VerifyStatus,
    /// Exact residual, numeric norm, or recovered constant.
    pub witness: String,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == VerifyStatus::Pass
    }

    pub fn line(&self) -> String {
        let tag = match self.status {
            VerifyStatus::Pass => "PASS",
            VerifyStatus::Fail => "FAIL",
        };
        format!("{tag}  {:<24} {:<28} {}", self.id, self.params, self.witness)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "params": self.params,
            "status": if self.passed() { "pass" } else { "fail" },
            "witness": self.witness,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Recurrences,
    Eigen,
    Decompositions,
    Romanovski,
    Complexify,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "recurrences" => Ok(Suite::Recurrences),
            "eigen" => Ok(Suite::Eigen),
            "decompositions" => Ok(Suite::Decompositions),
            "romanovski" => Ok(Suite::Romanovski),
            "complexify" => Ok(Suite::Complexify),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}' (expected recurrences|eigen|decompositions|romanovski|complexify|all)"
            )),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub l_max: u32,
    pub b_values: Vec<Rat>,
    /// Overrides the default hyperbolic grid of the numeric checks.
    pub grid: Option<GridSpec>,
    /// Relative tolerance of the numeric checks.
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            l_max: 4,
            b_values: vec![rat(1, 2), rat(1, 1), rat(2, 1)],
            grid: None,
            tol: 1e-7,
        }
    }
}

type Check = (String, String, Box<dyn Fn() -> (bool, String) + Send + Sync>);

fn check<F>(id: &str, params: String, f: F) -> Check
where
    F: Fn() -> (bool, String) + Send + Sync + 'static,
{
    (id.to_string(), params, Box::new(f))
}

fn fmt_rat_list(bs: &[Rat]) -> String {
    bs.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(",")
}

fn recurrence_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    let pinned = [(1u32, 0u32, rat(1, 1)), (2, 0, rat(2, 3)), (2, 1, rat(1, 1))];
    for l in 1..=cfg.l_max {
        for m in 0..l {
            let single = m + 2 >= l;
            let params = format!("l={l} m={m}");
            if single {
                let expect = pinned
                    .iter()
                    .find(|(pl, pm, _)| *pl == l && *pm == m)
                    .map(|(_, _, c)| c.clone());
                out.push(check("ladder-constant", params, move || {
                    match recurrence_constant(l, m) {
                        Ok(c) => match &expect {
                            Some(want) if *want != c => {
                                (false, format!("c = {c}, expected {want}"))
                            }
                            _ => (true, format!("c = {c}")),
                        },
                        Err(e) => (false, e.to_string()),
                    }
                }));
            } else {
                out.push(check("ladder-expansion", params, move || {
                    match ladder_expansion(l, m) {
                        Ok(d) => {
                            let terms = d
                                .iter()
                                .map(|(mp, c)| format!("{c}*s^-2*P[{l},{mp}]"))
                                .collect::<Vec<_>>()
                                .join(" + ");
                            (true, terms)
                        }
                        Err(e) => (false, e.to_string()),
                    }
                }));
            }
        }
    }
}

fn eigen_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    for l in 1..=cfg.l_max {
        out.push(check("ladder-annihilation", format!("l={l}"), move || {
            let p = legendre_hyp_exact(LegendreIndex::new(l, l).unwrap());
            match apply_exact(&AngularOperator::Dl(l), &p) {
                Ok(img) if img.is_zero() => (true, "0".into()),
                Ok(img) => (false, img.to_string()),
                Err(e) => (false, e.to_string()),
            }
        }));
    }

    out.push(check("ground-state", "symbolic b".into(), || {
        let ground = SurfaceExpression::one(Signature::Hyperbolic)
            .with_exp_factor(Scalar::b_times(rat(-2, 1)));
        let lam = &(&Scalar::from_int(4) * &Scalar::b()) * &Scalar::b();
        match eigen_residual_exact(&AngularOperator::EckartHam(Scalar::b()), &ground, &lam) {
            Ok(res) if res.is_zero() => (true, "0".into()),
            Ok(res) => (false, res.to_string()),
            Err(e) => (false, e.to_string()),
        }
    }));

    // deterministic pseudo-random monomials for the conjugation identity
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) as i64
    };
    for case in 0..20 {
        let pc = (next().rem_euclid(2)) as u32;
        let ps = next().rem_euclid(7) - 3;
        let num = next().rem_euclid(9) - 4;
        let den = next().rem_euclid(3) + 1;
        let phase = next().rem_euclid(5) - 2;
        let a_num = next().rem_euclid(7) - 3;
        let a_den = next().rem_euclid(3) + 1;
        let coeff = if num == 0 { rat(1, den) } else { rat(num, den) };
        let alpha = rat(a_num, a_den);
        let params = format!("case={case} alpha={alpha}");
        out.push(check("scaling-conjugation", params, move || {
            let f = SurfaceExpression::monomial(
                Signature::Hyperbolic,
                pc,
                ps,
                Scalar::from_rat(coeff.clone()),
            )
            .with_phase(phase);
            let conj = conjugate_by_scaling(
                AngularOperator::CasimirHyp,
                Scalar::from_rat(alpha.clone()),
            );
            match (conj.apply_exact(&f), conj.apply_via_conjugation(&f)) {
                (Ok(a), Ok(b)) => match a.sub(&b) {
                    Ok(d) if d.is_zero() => (true, "0".into()),
                    Ok(d) => (false, d.to_string()),
                    Err(e) => (false, e.to_string()),
                },
                (Err(e), _) | (_, Err(e)) => (false, e.to_string()),
            }
        }));
    }

    for l in 0..=cfg.l_max {
        for mt in 0..=l as i64 {
            for b in cfg.b_values.clone() {
                let params = format!("l={l} mt={mt} b={b}");
                out.push(check("eckart-eigen", params.clone(), move || {
                    let f = match eckart_eigenfunction(l, mt, &b) {
                        Ok(f) => f,
                        Err(e) => return (false, e.to_string()),
                    };
                    let lam = Scalar::from_rat(-eckart_energy(l, &b));
                    let op = AngularOperator::EckartHam(Scalar::from_rat(b.clone()));
                    match eigen_residual_exact(&op, &f.expression, &lam) {
                        Ok(res) if res.is_zero() => (true, "0".into()),
                        Ok(res) => (false, res.to_string()),
                        Err(e) => (false, e.to_string()),
                    }
                }));
            }
        }
    }

    let grid = cfg.grid.unwrap_or_else(|| default_grid(Signature::Hyperbolic));
    let tol = cfg.tol;
    for l in 0..=cfg.l_max {
        for mt in 0..=l as i64 {
            for b in cfg.b_values.clone() {
                let params = format!("l={l} mt={mt} b={b} n={} order={}", grid.n, grid.fd_order);
                out.push(check("eckart-eigen-grid", params, move || {
                    let f = match eckart_eigenfunction(l, mt, &b) {
                        Ok(f) => f,
                        Err(e) => return (false, e.to_string()),
                    };
                    let bf = b.to_f64().unwrap();
                    let g = match GridFunction::sample(&f.expression, grid, bf) {
                        Ok(g) => g,
                        Err(e) => return (false, e.to_string()),
                    };
                    let lam = Complex64::new(-eckart_energy(l, &b).to_f64().unwrap(), 0.0);
                    let op = AngularOperator::EckartHam(Scalar::from_rat(b.clone()));
                    match eigen_residual_numeric(&op, &g, lam) {
                        Ok(r) if r < tol => (true, format!("residual {r:.3e}")),
                        Ok(r) => (false, format!("residual {r:.3e} >= {tol:.1e}")),
                        Err(e) => (false, e.to_string()),
                    }
                }));
            }
        }
    }
}

fn decomposition_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    for l in 0..=cfg.l_max {
        out.push(check("coeff-matrix-shape", format!("l={l} symbolic b"), move || {
            match coeff_matrix_symbolic(l) {
                Ok(m) => {
                    for (r, row) in m.iter().enumerate() {
                        for (c, e) in row.iter().enumerate() {
                            let ok = if c < r {
                                e.is_zero()
                            } else if c == r {
                                e.is_one()
                            } else {
                                e.degree() == Some(c - r) && e.is_real()
                            };
                            if !ok {
                                return (false, format!("entry ({r},{c}) = {e}"));
                            }
                        }
                    }
                    (true, "upper triangular, unit diagonal, deg = col-row".to_string())
                }
                Err(e) => (false, e.to_string()),
            }
        }));
    }
    for l in 1..=cfg.l_max {
        for mt in 0..=l {
            for b in cfg.b_values.clone() {
                let params = format!("l={l} mt={mt} b={b}");
                out.push(check("jacobi-decomposition", params, move || {
                    match jacobi_decomposition_check(l, mt, &b) {
                        Ok((sigma, res)) if res.is_zero() => (true, format!("scale {sigma}")),
                        Ok((_, res)) => (false, format!("residual {res}")),
                        Err(e) => (false, e.to_string()),
                    }
                }));
            }
        }
    }
}

fn romanovski_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    let mut params_grid = vec![
        (rat(0, 1), rat(0, 1)),
        (rat(2, 1), rat(-5, 2)),
        (rat(1, 2), rat(3, 1)),
        (rat(-3, 1), rat(7, 4)),
    ];
    for l in 0..=cfg.l_max.min(4) {
        for b in &cfg.b_values {
            params_grid.push((alpha_l(l, b), -(rat(l as i64, 1) + rat(1, 2))));
        }
    }
    params_grid.dedup();
    for (a, beta) in params_grid {
        for n in 0..=8u32 {
            let p = RomanovskiParams { alpha: a.clone(), beta: beta.clone() };
            let params = format!("n={n} alpha={a} beta={beta}");
            out.push(check("romanovski-ode", params, move || {
                let res = romanovski_ode_residual(n, &p);
                if res.is_empty() {
                    (true, "0".into())
                } else {
                    (false, format!("{} nonzero coefficients", res.len()))
                }
            }));
        }
    }
    for (a, beta) in [
        (rat(0, 1), rat(0, 1)),
        (rat(3, 1), rat(-7, 2)),
        (rat(2, 1), rat(-5, 2)),
        (rat(1, 2), rat(-1, 2)),
    ] {
        for n in 0..=6u32 {
            let p = RomanovskiParams { alpha: a.clone(), beta: beta.clone() };
            let params = format!("n={n} alpha={a} beta={beta}");
            out.push(check("romanovski-jacobi", params, move || {
                if romanovski_jacobi_check(n, &p) {
                    (true, "exact".into())
                } else {
                    (false, "sides differ".into())
                }
            }));
        }
    }
    for l in 1..=cfg.l_max {
        for mt in 0..=l {
            for b in cfg.b_values.clone() {
                let params = format!("l={l} mt={mt} b={b}");
                out.push(check("romanovski-decomposition", params, move || {
                    match romanovski_decomposition_check(l, mt, &b) {
                        Ok((sigma, res)) if res.is_zero() => (true, format!("scale {sigma}")),
                        Ok((_, res)) => (false, format!("residual {res}")),
                        Err(e) => (false, e.to_string()),
                    }
                }));
            }
        }
    }
}

fn complexify_checks(cfg: &VerifyConfig, out: &mut Vec<Check>) {
    use crate::scalar::i_pow;
    for l in 0..=cfg.l_max.min(6) {
        for m in 0..=l {
            let params = format!("l={l} m={m}");
            out.push(check("complexify-legendre", params, move || {
                let idx = LegendreIndex::new(l, m).unwrap();
                let img = match legendre_hyp_exact(idx).substitute_complexify() {
                    Ok(img) => img,
                    Err(e) => return (false, e.to_string()),
                };
                let want = legendre_trig_exact(idx).scaled(&Scalar::from_crat(i_pow(m as i64)));
                if img == want {
                    (true, "i^m * trig image".into())
                } else {
                    (false, format!("{img} vs {want}"))
                }
            }));
        }
    }

    // operator intertwining on a few symbolic-b expressions
    let samples: Vec<(String, SurfaceExpression)> = vec![
        ("c".into(), SurfaceExpression::c(Signature::Hyperbolic)),
        (
            "s^3 phase 1".into(),
            SurfaceExpression::monomial(Signature::Hyperbolic, 0, 3, Scalar::one()).with_phase(1),
        ),
        (
            "b c s^-1 damped".into(),
            SurfaceExpression::monomial(Signature::Hyperbolic, 1, -1, Scalar::b())
                .with_exp_factor(Scalar::b_times(rat(-1, 2))),
        ),
        (
            "P[3,2] phase 2".into(),
            legendre_hyp_exact(LegendreIndex::new(3, 2).unwrap()).with_phase(2),
        ),
    ];
    for (name, f) in samples {
        out.push(check("complexify-intertwine", name, move || {
            let lhs = match apply_exact(&AngularOperator::EckartHam(Scalar::b()), &f)
                .and_then(|g| g.substitute_complexify())
            {
                Ok(v) => v,
                Err(e) => return (false, e.to_string()),
            };
            let rhs = match f
                .substitute_complexify()
                .and_then(|g| apply_exact(&AngularOperator::RosenMorseHam(Scalar::b()), &g))
            {
                Ok(v) => v,
                Err(e) => return (false, e.to_string()),
            };
            match lhs.sub(&rhs) {
                Ok(d) if d.is_zero() => (true, "0".into()),
                Ok(d) => (false, d.to_string()),
                Err(e) => (false, e.to_string()),
            }
        }));
    }

    for l in 0..=cfg.l_max {
        for mt in 0..=l as i64 {
            for b in cfg.b_values.clone() {
                let params = format!("l={l} mt={mt} b={b}");
                out.push(check("rosen-morse-eigen", params, move || {
                    let f = match rosen_morse_eigenfunction(l, mt, &b) {
                        Ok(f) => f,
                        Err(e) => return (false, e.to_string()),
                    };
                    if !f.expression.has_real_coefficients() {
                        return (false, "complex coefficients".into());
                    }
                    let lam = Scalar::from_rat(rosen_morse_energy(l, &b));
                    let op = AngularOperator::RosenMorseHam(Scalar::from_rat(b.clone()));
                    match eigen_residual_exact(&op, &f.expression, &lam) {
                        Ok(res) if res.is_zero() => (true, "0".into()),
                        Ok(res) => (false, res.to_string()),
                        Err(e) => (false, e.to_string()),
                    }
                }));
            }
        }
    }

    // numeric commutation of complexification with evaluation
    for l in 1..=cfg.l_max.min(3) {
        let params = format!("l={l} mt=0 b=3/4");
        out.push(check("complexify-evaluation", params, move || {
            let b = rat(3, 4);
            let f = match eckart_eigenfunction(l, 0, &b) {
                Ok(f) => f.expression,
                Err(e) => return (false, e.to_string()),
            };
            let g = match f.substitute_complexify() {
                Ok(g) => g,
                Err(e) => return (false, e.to_string()),
            };
            let bv = Complex64::new(0.75, 0.0);
            let rot = Complex64::new(0.0, -1.0);
            let mut worst: f64 = 0.0;
            for &theta in &[0.3, 0.8, 1.4, 2.1] {
                let lhs = f.eval(Complex64::new(0.0, theta), 0.4, bv * rot);
                let rhs = g.eval(Complex64::new(theta, 0.0), 0.4, bv);
                worst = worst.max((lhs - rhs).norm() / rhs.norm().max(1.0));
            }
            if worst < 1e-12 {
                (true, format!("max deviation {worst:.2e}"))
            } else {
                (false, format!("max deviation {worst:.2e} >= 1e-12"))
            }
        }));
    }
}

/// Builds and runs a suite, returning reports sorted by (id, params).
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<VerifyReport> {
    let mut checks: Vec<Check> = Vec::new();
    if matches!(suite, Suite::Recurrences | Suite::All) {
        recurrence_checks(cfg, &mut checks);
    }
    if matches!(suite, Suite::Eigen | Suite::All) {
        eigen_checks(cfg, &mut checks);
    }
    if matches!(suite, Suite::Decompositions | Suite::All) {
        decomposition_checks(cfg, &mut checks);
    }
    if matches!(suite, Suite::Romanovski | Suite::All) {
        romanovski_checks(cfg, &mut checks);
    }
    if matches!(suite, Suite::Complexify | Suite::All) {
        complexify_checks(cfg, &mut checks);
    }
    let mut reports: Vec<VerifyReport> = checks
        .par_iter()
        .map(|(id, params, f)| {
            let (ok, witness) = f();
            VerifyReport {
                id: id.clone(),
                params: params.clone(),
                status: if ok { VerifyStatus::Pass } else { VerifyStatus::Fail },
                witness,
            }
        })
        .collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id).then(a.params.cmp(&b.params)));
    reports
}

/// Convenience used by tests: the whole battery at defaults.
pub fn run_all_default() -> Vec<VerifyReport> {
    run_suite(Suite::All, &VerifyConfig::default())
}

pub fn describe_config(cfg: &VerifyConfig) -> String {
    format!(
        "l <= {}, b in {{{}}}, tol {:.1e}",
        cfg.l_max,
        fmt_rat_list(&cfg.b_values),
        cfg.tol
    )
}
