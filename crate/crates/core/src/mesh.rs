//! Surface meshes for the free and exponentially deformed geometries.
//!
//! Hyperboloid points are r(eta) * (sinh eta cos phi, sinh eta sin phi,
//! cosh eta) with r = exp(-2 b eta) for the deformed kind and r = 1 for the
//! free one, so deformed points satisfy z^2 - x^2 - y^2 = exp(-4 b eta).
//! The sphere uses r(theta) * (sin theta cos phi, sin theta sin phi,
//! cos theta) with r = exp(-2 b theta).

use std::io::Write;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum SurfaceKind {
    HyperboloidFree,
    HyperboloidDeformed { b: f64 },
    SphereFree,
    SphereDeformed { b: f64 },
}

impl SurfaceKind {
    pub fn is_spherical(self) -> bool {
        matches!(self, SurfaceKind::SphereFree | SurfaceKind::SphereDeformed { .. })
    }

    pub fn coupling(self) -> f64 {
        match self {
            SurfaceKind::HyperboloidDeformed { b } | SurfaceKind::SphereDeformed { b } => b,
            _ => 0.0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MeshSurface {
    pub kind: SurfaceKind,
    pub n_t: usize,
    pub n_phi: usize,
    /// Row-major over (t, phi).
    pub points: Vec<[f64; 3]>,
    /// The generating angle of each t-row.
    pub t_samples: Vec<f64>,
}

/// Default parameter ranges: eta in [0, 2.5] (the apex row included),
/// theta strictly inside (0, pi), 64 x 64.
pub const DEFAULT_T_MAX: f64 = 2.5;
pub const DEFAULT_RESOLUTION: usize = 64;

pub fn generate(kind: SurfaceKind, t_max: f64, n_t: usize, n_phi: usize) -> Result<MeshSurface> {
    if n_t < 2 || n_phi < 2 {
        return Err(Error::InvalidMesh(format!("resolution {n_t} x {n_phi} below 2 x 2")));
    }
    let spherical = kind.is_spherical();
    if !spherical && !(t_max > 0.0 && t_max.is_finite()) {
        return Err(Error::InvalidMesh(format!("eta range must satisfy 0 < eta_max, got {t_max}")));
    }
    let b = kind.coupling();
    let t_samples: Vec<f64> = if spherical {
        // poles excluded
        (0..n_t)
            .map(|i| std::f64::consts::PI * (i as f64 + 1.0) / (n_t as f64 + 1.0))
            .collect()
    } else {
        (0..n_t)
            .map(|i| t_max * i as f64 / (n_t as f64 - 1.0))
            .collect()
    };
    let mut points = Vec::with_capacity(n_t * n_phi);
    for &t in &t_samples {
        let r = match kind {
            SurfaceKind::HyperboloidFree | SurfaceKind::SphereFree => 1.0,
            SurfaceKind::HyperboloidDeformed { .. } | SurfaceKind::SphereDeformed { .. } => {
                (-2.0 * b * t).exp()
            }
        };
        let (radial, axial) = if spherical {
            (t.sin(), t.cos())
        } else {
            (t.sinh(), t.cosh())
        };
        for j in 0..n_phi {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / n_phi as f64;
            points.push([r * radial * phi.cos(), r * radial * phi.sin(), r * axial]);
        }
    }
    Ok(MeshSurface { kind, n_t, n_phi, points, t_samples })
}

impl MeshSurface {
    /// Worst violation of the defining quadric: |z^2 - x^2 - y^2 - e^{-4bt}|
    /// for hyperboloids, |x^2 + y^2 + z^2 - e^{-4bt}| for spheres.
    pub fn quadric_residual(&self) -> f64 {
        let b = self.kind.coupling();
        let spherical = self.kind.is_spherical();
        let mut worst: f64 = 0.0;
        for (i, &t) in self.t_samples.iter().enumerate() {
            let target = (-4.0 * b * t).exp();
            for j in 0..self.n_phi {
                let [x, y, z] = self.points[i * self.n_phi + j];
                let q = if spherical {
                    x * x + y * y + z * z
                } else {
                    z * z - x * x - y * y
                };
                worst = worst.max((q - target).abs());
            }
        }
        worst
    }

    /// `x,y,z` rows, row-major over the grid.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "x,y,z")?;
        for p in &self.points {
            writeln!(out, "{},{},{}", p[0], p[1], p[2])?;
        }
        Ok(())
    }

    /// Wavefront-style vertex/face text; phi wraps around, t does not.
    pub fn write_obj<W: Write>(&self, mut out: W) -> Result<()> {
        for p in &self.points {
            writeln!(out, "v {} {} {}", p[0], p[1], p[2])?;
        }
        for i in 0..self.n_t - 1 {
            for j in 0..self.n_phi {
                let jn = (j + 1) % self.n_phi;
                let a = i * self.n_phi + j + 1;
                let b = i * self.n_phi + jn + 1;
                let c = (i + 1) * self.n_phi + jn + 1;
                let d = (i + 1) * self.n_phi + j + 1;
                writeln!(out, "f {a} {b} {c} {d}")?;
            }
        }
        Ok(())
    }
}
