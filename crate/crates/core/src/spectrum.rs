//! Closed-form spectral quantities in dimensionless units (hbar = 1, 2M = 1).
//!
//! Energies are stored as the epsilon of the radial eigenproblem, so physical
//! energies are -epsilon * (hbar^2/2M) on the hyperbolic side.

use serde_json::{json, Value};

use crate::scalar::{rat, Rat, Scalar};
use crate::special::JacobiParams;

/// Scaling exponent alpha_l = 2b / (l + 1/2).
pub fn alpha_l(l: u32, b: &Rat) -> Rat {
    rat(2, 1) * b / (rat(l as i64, 1) + rat(1, 2))
}

/// alpha_l with the coupling kept symbolic: (4/(2l+1)) * b.
pub fn alpha_l_symbolic(l: u32) -> Scalar {
    Scalar::b_times(rat(4, 2 * l as i64 + 1))
}

/// epsilon_l = -l(l+1) - b^2/(l+1/2)^2.
pub fn eckart_energy(l: u32, b: &Rat) -> Rat {
    let lph = rat(l as i64, 1) + rat(1, 2);
    -rat((l * (l + 1)) as i64, 1) - b * b / (&lph * &lph)
}

/// l(l+1) - b^2/(l+1/2)^2.
pub fn rosen_morse_energy(l: u32, b: &Rat) -> Rat {
    let lph = rat(l as i64, 1) + rat(1, 2);
    rat((l * (l + 1)) as i64, 1) - b * b / (&lph * &lph)
}

/// gamma_l = b/(l+1/2) - (l+1/2), delta_l = -b/(l+1/2) - (l+1/2).
pub fn jacobi_params(l: u32, b: &Rat) -> JacobiParams {
    let lph = rat(l as i64, 1) + rat(1, 2);
    JacobiParams {
        gamma: b / &lph - &lph,
        delta: -(b / &lph) - &lph,
    }
}

/// l = m_tilde + n.
pub fn quantum_numbers(n: u32, m_tilde: u32) -> u32 {
    m_tilde + n
}

pub fn degeneracy(l: u32) -> u32 {
    2 * l + 1
}

#[derive(Clone, PartialEq, Debug)]
pub struct SpectrumEntry {
    pub l: u32,
    pub b: Rat,
    pub alpha_l: Rat,
    pub epsilon: Rat,
    pub epsilon_rm: Rat,
    pub gamma: Rat,
    pub delta: Rat,
    pub degeneracy: u32,
}

impl SpectrumEntry {
    pub fn new(l: u32, b: &Rat) -> Self {
        let JacobiParams { gamma, delta } = jacobi_params(l, b);
        SpectrumEntry {
            l,
            b: b.clone(),
            alpha_l: alpha_l(l, b),
            epsilon: eckart_energy(l, b),
            epsilon_rm: rosen_morse_energy(l, b),
            gamma,
            delta,
            degeneracy: degeneracy(l),
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.l, self.b, self.alpha_l, self.epsilon, self.epsilon_rm, self.gamma, self.delta,
            self.degeneracy
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "l": self.l,
            "b": self.b.to_string(),
            "alpha_l": self.alpha_l.to_string(),
            "epsilon": self.epsilon.to_string(),
            "epsilon_rm": self.epsilon_rm.to_string(),
            "gamma": self.gamma.to_string(),
            "delta": self.delta.to_string(),
            "degeneracy": self.degeneracy,
        })
    }
}

pub const SPECTRUM_CSV_HEADER: &str = "l,b,alpha_l,epsilon,epsilon_rm,gamma,delta,degeneracy";

pub fn spectrum_table(l_max: u32, b: &Rat) -> Vec<SpectrumEntry> {
    (0..=l_max).map(|l| SpectrumEntry::new(l, b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_values() {
        assert_eq!(alpha_l(0, &rat(3, 2)), rat(6, 1)); // 4b at l = 0
        assert_eq!(alpha_l(1, &rat(1, 1)), rat(4, 3));
        assert_eq!(alpha_l(5, &rat(0, 1)), rat(0, 1));
        // symbolic form agrees after substitution
        use crate::scalar::crat_from_rat;
        for l in 0..=6 {
            let s = alpha_l_symbolic(l).substitute_b(&crat_from_rat(rat(7, 3)));
            assert_eq!(s.re, alpha_l(l, &rat(7, 3)));
        }
    }

    #[test]
    fn energies() {
        assert_eq!(eckart_energy(0, &rat(1, 1)), rat(-4, 1));
        assert_eq!(eckart_energy(1, &rat(1, 1)), rat(-22, 9));
        assert_eq!(eckart_energy(2, &rat(1, 1)), rat(-154, 25));
        assert_eq!(eckart_energy(3, &rat(0, 1)), rat(-12, 1));
        assert_eq!(rosen_morse_energy(0, &rat(1, 1)), rat(-4, 1));
        assert_eq!(rosen_morse_energy(1, &rat(1, 1)), rat(14, 9));
        assert_eq!(rosen_morse_energy(2, &rat(0, 1)), rat(6, 1));
    }

    #[test]
    fn energy_relations() {
        for l in 0..=8u32 {
            for b in [rat(0, 1), rat(1, 2), rat(1, 1), rat(2, 1)] {
                // epsilon = -(l(l+1) + alpha^2/4)
                let a = alpha_l(l, &b);
                let want = -(rat((l * (l + 1)) as i64, 1) + &a * &a / rat(4, 1));
                assert_eq!(eckart_energy(l, &b), want);
                // the two spectra differ by 2 l (l+1)
                assert_eq!(
                    rosen_morse_energy(l, &b) - eckart_energy(l, &b),
                    rat(2 * (l * (l + 1)) as i64, 1)
                );
            }
        }
    }

    #[test]
    fn jacobi_parameter_values() {
        let p = jacobi_params(1, &rat(1, 1));
        assert_eq!(p.gamma, rat(-5, 6));
        assert_eq!(p.delta, rat(-13, 6));
        let p = jacobi_params(0, &rat(1, 1));
        assert_eq!(p.gamma, rat(3, 2));
        assert_eq!(p.delta, rat(-5, 2));
        let p = jacobi_params(4, &rat(0, 1));
        assert_eq!(p.gamma, rat(-9, 2));
        assert_eq!(p.delta, rat(-9, 2));
        // gamma + delta = -(2l+1), gamma - delta = alpha_l
        for l in 0..=8u32 {
            for b in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                let p = jacobi_params(l, &b);
                assert_eq!(&p.gamma + &p.delta, rat(-(2 * l as i64) - 1, 1));
                assert_eq!(&p.gamma - &p.delta, alpha_l(l, &b));
            }
        }
    }

    #[test]
    fn quantum_number_relation() {
        assert_eq!(quantum_numbers(0, 3), 3);
        assert_eq!(quantum_numbers(2, 0), 2);
        assert_eq!(quantum_numbers(0, 0), 0);
    }

    #[test]
    fn table_rows() {
        let t = spectrum_table(2, &rat(1, 1));
        let eps: Vec<Rat> = t.iter().map(|e| e.epsilon.clone()).collect();
        assert_eq!(eps, vec![rat(-4, 1), rat(-22, 9), rat(-154, 25)]);
        let t = spectrum_table(2, &rat(0, 1));
        let eps: Vec<Rat> = t.iter().map(|e| e.epsilon.clone()).collect();
        assert_eq!(eps, vec![rat(0, 1), rat(-2, 1), rat(-6, 1)]);
        assert_eq!(t[2].degeneracy, 5);
        assert_eq!(
            t[1].csv_row(),
            "1,0,0,-2,2,-3/2,-3/2,3"
        );
    }
}
