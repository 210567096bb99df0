//! Exact and numeric kernel for the cotangent-perturbed geodesic motion on
//! the upper hyperboloid sheet and its trigonometric twin on the sphere.
//!
//! The crate provides
//!
//! - an exact ring of surface functions built from cosh/sinh (or cos/sin)
//!   monomials, exponential damping factors and azimuthal phases, with
//!   rational-in-b coefficients ([`ring`], [`scalar`]);
//! - associated Legendre functions of both argument kinds, Jacobi polynomials
//!   with arbitrary rational parameters and Romanovski polynomials from their
//!   Rodrigues formula ([`special`]);
//! - the radial operators (Casimir, squared angular momentum, perturbed
//!   Hamiltonians, first-order ladders), their exact and finite-difference
//!   application, scaling conjugation and eigen-residuals ([`operators`]);
//! - the triangular coefficient matrices relating free and perturbed bases,
//!   the damped eigenfunction superpositions on both geometries, and exact
//!   Jacobi/Romanovski decomposition checks ([`expansion`]);
//! - closed-form spectra ([`spectrum`]), surface meshes ([`mesh`]) and the
//!   identity verification suites ([`verify`]).
//!
//! All symbolic values are immutable and all operations are pure functions,
//! so everything can be shared and evaluated in parallel freely.

pub mod error;
pub mod expansion;
pub mod mesh;
pub mod operators;
pub mod ring;
pub mod scalar;
pub mod special;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use expansion::{
    coeff_matrix, coeff_matrix_symbolic, eckart_eigenfunction, eigenfunction_from_row,
    jacobi_decomposition_check, ladder_expansion, recurrence_constant,
    romanovski_decomposition_check, rosen_morse_eigenfunction, CoeffMatrix, EckartEigenfunction,
};
pub use mesh::{generate as generate_mesh, MeshSurface, SurfaceKind};
pub use operators::{
    apply_exact, apply_numeric, conjugate_by_scaling, default_grid, eigen_residual_exact,
    eigen_residual_numeric, AngularOperator, ConjugatedOperator, GridFunction, GridSpec,
};
pub use ring::{Mono, Signature, SurfaceExpression};
pub use scalar::{parse_rat, rat, CRat, Rat, Scalar};
pub use special::{
    double_factorial_odd, jacobi_coeffs, jacobi_poly, jacobi_poly_rat, legendre_hyp_exact,
    legendre_trig_exact, pseudo_spherical_harmonic, romanovski_jacobi_check,
    romanovski_ode_residual, romanovski_poly, romanovski_weight, spherical_harmonic, JacobiParams,
    LegendreIndex, RomanovskiParams,
};
pub use spectrum::{
    alpha_l, degeneracy, eckart_energy, jacobi_params, quantum_numbers, rosen_morse_energy,
    spectrum_table, SpectrumEntry, SPECTRUM_CSV_HEADER,
};
pub use verify::{run_suite, Suite, VerifyConfig, VerifyReport, VerifyStatus};
