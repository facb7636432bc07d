//! Discrete curvature, normal, and derived fields on vertices.
//!
//! Curvature along the curve or profile comes from the circumscribed circle
//! through three consecutive vertices (exact on circles, second order and
//! sign-correct for positively oriented data). Tangents and arclength
//! derivatives use non-uniform three-point stencils. On sphere-type
//! profiles the axis endpoints are handled by reflecting the meridian
//! through the axis: curvature uses the mirrored three-point circle, the
//! azimuthal principal curvature equals the meridian one (umbilic pole),
//! and scalar fields are even in arclength, so odd derivatives vanish.

use nalgebra::Vector2;

use super::{cross2, outward_rotation, Geometry, GeometryError, ProfileKind};
use crate::numerics::stencil;

/// Per-vertex geometric data derived from a [`Geometry`].
#[derive(Clone, Debug)]
pub struct VertexFields {
    /// Outward unit normal in the curve plane / meridian plane.
    pub normal: Vec<Vector2<f64>>,
    /// Curvature of the curve or meridian profile (signed, positive convex).
    pub kappa_profile: Vec<f64>,
    /// Azimuthal principal curvature; `None` for curves.
    pub kappa_azimuthal: Option<Vec<f64>>,
    /// Mean curvature H (sum of principal curvatures).
    pub mean: Vec<f64>,
    /// Squared norm of the second fundamental form.
    pub norm_a_sq: Vec<f64>,
    /// Arclength derivative of H along the curve/meridian.
    pub grad_mean: Vec<f64>,
    /// Laplace-Beltrami of H.
    pub laplace_mean: Vec<f64>,
    /// Optional auxiliary scalar field (see the flow module).
    pub f: Option<Vec<f64>>,
}

impl VertexFields {
    pub fn len(&self) -> usize {
        self.mean.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mean.is_empty()
    }

    /// The scalar field certificates are measured against: the auxiliary
    /// field when present, otherwise the mean curvature.
    pub fn certificate_field(&self) -> &[f64] {
        self.f.as_deref().unwrap_or(&self.mean)
    }

    pub fn kappa_max(&self, i: usize) -> f64 {
        match &self.kappa_azimuthal {
            None => self.kappa_profile[i],
            Some(az) => self.kappa_profile[i].max(az[i]),
        }
    }

    pub fn kappa_min(&self, i: usize) -> f64 {
        match &self.kappa_azimuthal {
            None => self.kappa_profile[i],
            Some(az) => self.kappa_profile[i].min(az[i]),
        }
    }

    pub fn min_mean(&self) -> f64 {
        self.mean.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    pub fn max_mean(&self) -> f64 {
        self.mean.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_norm_a_sq(&self) -> f64 {
        self.norm_a_sq.iter().cloned().fold(0.0, f64::max)
    }
}

/// Signed curvature of the circle through `(a, b, c)`, positive when the
/// polyline turns left (counterclockwise).
fn circumscribed_curvature(a: Vector2<f64>, b: Vector2<f64>, c: Vector2<f64>) -> f64 {
    let d1 = b - a;
    let d2 = c - b;
    let d3 = c - a;
    2.0 * cross2(d1, d2) / (d1.norm() * d2.norm() * d3.norm())
}

fn mirror(p: Vector2<f64>) -> Vector2<f64> {
    Vector2::new(-p.x, p.y)
}

pub fn compute_fields(geometry: &Geometry) -> Result<VertexFields, GeometryError> {
    match geometry {
        Geometry::Curve(c) => curve_fields(c.vertices(), true),
        Geometry::Axisym(s) => match s.kind() {
            ProfileKind::TorusType => torus_fields(s.profile()),
            ProfileKind::SphereType => sphere_type_fields(s.profile()),
        },
    }
}

/// Derivative stencils on a closed sequence of samples with arclength
/// spacing `ell[i] = |p[i+1] - p[i]|`.
fn closed_d1(values: &[f64], ell: &[f64]) -> Vec<f64> {
    let n = values.len();
    (0..n)
        .map(|i| {
            let (hm, hp) = (ell[(i + n - 1) % n], ell[i]);
            stencil::d1(values[(i + n - 1) % n], values[i], values[(i + 1) % n], hm, hp)
        })
        .collect()
}

fn closed_d2(values: &[f64], ell: &[f64]) -> Vec<f64> {
    let n = values.len();
    (0..n)
        .map(|i| {
            let (hm, hp) = (ell[(i + n - 1) % n], ell[i]);
            stencil::d2(values[(i + n - 1) % n], values[i], values[(i + 1) % n], hm, hp)
        })
        .collect()
}

fn curve_fields(pts: &[Vector2<f64>], _closed: bool) -> Result<VertexFields, GeometryError> {
    let n = pts.len();
    let ell: Vec<f64> = (0..n).map(|i| (pts[(i + 1) % n] - pts[i]).norm()).collect();
    if let Some(i) = ell.iter().position(|&l| l == 0.0) {
        return Err(GeometryError::DegenerateSpacing(i));
    }

    let mut normal = Vec::with_capacity(n);
    let mut kappa = Vec::with_capacity(n);
    for i in 0..n {
        let (im, ip) = ((i + n - 1) % n, (i + 1) % n);
        let (hm, hp) = (ell[im], ell[i]);
        let tx = stencil::d1(pts[im].x, pts[i].x, pts[ip].x, hm, hp);
        let ty = stencil::d1(pts[im].y, pts[i].y, pts[ip].y, hm, hp);
        let t = Vector2::new(tx, ty).normalize();
        normal.push(outward_rotation(t));
        kappa.push(circumscribed_curvature(pts[im], pts[i], pts[ip]));
    }

    let grad_mean = closed_d1(&kappa, &ell);
    let laplace_mean = closed_d2(&kappa, &ell);
    let norm_a_sq = kappa.iter().map(|k| k * k).collect();
    Ok(VertexFields {
        normal,
        mean: kappa.clone(),
        kappa_profile: kappa,
        kappa_azimuthal: None,
        norm_a_sq,
        grad_mean,
        laplace_mean,
        f: None,
    })
}

fn torus_fields(pts: &[Vector2<f64>]) -> Result<VertexFields, GeometryError> {
    let n = pts.len();
    let ell: Vec<f64> = (0..n).map(|i| (pts[(i + 1) % n] - pts[i]).norm()).collect();
    if let Some(i) = ell.iter().position(|&l| l == 0.0) {
        return Err(GeometryError::DegenerateSpacing(i));
    }

    let mut normal = Vec::with_capacity(n);
    let mut kappa_m = Vec::with_capacity(n);
    let mut kappa_az = Vec::with_capacity(n);
    let mut r_prime = Vec::with_capacity(n);
    for i in 0..n {
        let (im, ip) = ((i + n - 1) % n, (i + 1) % n);
        let (hm, hp) = (ell[im], ell[i]);
        let tr = stencil::d1(pts[im].x, pts[i].x, pts[ip].x, hm, hp);
        let tz = stencil::d1(pts[im].y, pts[i].y, pts[ip].y, hm, hp);
        let t = Vector2::new(tr, tz).normalize();
        let nu = outward_rotation(t);
        normal.push(nu);
        kappa_m.push(circumscribed_curvature(pts[im], pts[i], pts[ip]));
        kappa_az.push(nu.x / pts[i].x);
        r_prime.push(t.x);
    }

    let mean: Vec<f64> = kappa_m.iter().zip(&kappa_az).map(|(a, b)| a + b).collect();
    let norm_a_sq = kappa_m
        .iter()
        .zip(&kappa_az)
        .map(|(a, b)| a * a + b * b)
        .collect();
    let grad_mean = closed_d1(&mean, &ell);
    let d2 = closed_d2(&mean, &ell);
    let laplace_mean = (0..n)
        .map(|i| d2[i] + r_prime[i] / pts[i].x * grad_mean[i])
        .collect();
    Ok(VertexFields {
        normal,
        kappa_profile: kappa_m,
        kappa_azimuthal: Some(kappa_az),
        mean,
        norm_a_sq,
        grad_mean,
        laplace_mean,
        f: None,
    })
}

fn sphere_type_fields(pts: &[Vector2<f64>]) -> Result<VertexFields, GeometryError> {
    let n = pts.len();
    let ell: Vec<f64> = (0..n - 1).map(|i| (pts[i + 1] - pts[i]).norm()).collect();
    if let Some(i) = ell.iter().position(|&l| l == 0.0) {
        return Err(GeometryError::DegenerateSpacing(i));
    }

    let mut normal = vec![Vector2::zeros(); n];
    let mut kappa_m = vec![0.0; n];
    let mut kappa_az = vec![0.0; n];
    let mut r_prime = vec![0.0; n];

    for i in 1..n - 1 {
        let (hm, hp) = (ell[i - 1], ell[i]);
        let tr = stencil::d1(pts[i - 1].x, pts[i].x, pts[i + 1].x, hm, hp);
        let tz = stencil::d1(pts[i - 1].y, pts[i].y, pts[i + 1].y, hm, hp);
        let t = Vector2::new(tr, tz).normalize();
        let nu = outward_rotation(t);
        normal[i] = nu;
        kappa_m[i] = circumscribed_curvature(pts[i - 1], pts[i], pts[i + 1]);
        kappa_az[i] = nu.x / pts[i].x;
        r_prime[i] = t.x;
    }

    // poles: the meridian extends smoothly through the axis by reflection
    normal[0] = Vector2::new(0.0, -1.0);
    normal[n - 1] = Vector2::new(0.0, 1.0);
    r_prime[0] = 1.0;
    r_prime[n - 1] = -1.0;
    kappa_m[0] = circumscribed_curvature(mirror(pts[1]), pts[0], pts[1]);
    kappa_m[n - 1] = circumscribed_curvature(pts[n - 2], pts[n - 1], mirror(pts[n - 2]));
    kappa_az[0] = kappa_m[0];
    kappa_az[n - 1] = kappa_m[n - 1];

    let mean: Vec<f64> = kappa_m.iter().zip(&kappa_az).map(|(a, b)| a + b).collect();
    let norm_a_sq: Vec<f64> = kappa_m
        .iter()
        .zip(&kappa_az)
        .map(|(a, b)| a * a + b * b)
        .collect();

    let (grad_mean, laplace_mean) = sphere_type_scalar_derivatives(&mean, &ell, &r_prime, pts);
    Ok(VertexFields {
        normal,
        kappa_profile: kappa_m,
        kappa_azimuthal: Some(kappa_az),
        mean,
        norm_a_sq,
        grad_mean,
        laplace_mean,
        f: None,
    })
}

/// Arclength gradient and surface Laplacian of an even-at-the-poles scalar
/// on a sphere-type profile.
pub(crate) fn sphere_type_scalar_derivatives(
    values: &[f64],
    ell: &[f64],
    r_prime: &[f64],
    pts: &[Vector2<f64>],
) -> (Vec<f64>, Vec<f64>) {
    let n = values.len();
    let mut grad = vec![0.0; n];
    let mut lap = vec![0.0; n];
    for i in 1..n - 1 {
        let (hm, hp) = (ell[i - 1], ell[i]);
        grad[i] = stencil::d1(values[i - 1], values[i], values[i + 1], hm, hp);
        let d2 = stencil::d2(values[i - 1], values[i], values[i + 1], hm, hp);
        lap[i] = d2 + r_prime[i] / pts[i].x * grad[i];
    }
    // poles: grad = 0 by evenness; Laplacian = 2 f''(0)
    let s1 = ell[0];
    let s2 = ell[0] + ell[1];
    lap[0] = 2.0 * stencil::d2_even(values[0], values[1], s1, values[2], s2);
    let e1 = ell[n - 2];
    let e2 = ell[n - 2] + ell[n - 3];
    lap[n - 1] = 2.0 * stencil::d2_even(values[n - 1], values[n - 2], e1, values[n - 3], e2);
    (grad, lap)
}

/// Laplace-Beltrami of a vertex scalar: arclength second difference on
/// curves, plus the `(r'/r) d/ds` term on surfaces of revolution.
pub fn scalar_laplacian(g: &Geometry, values: &[f64]) -> Result<Vec<f64>, GeometryError> {
    match g {
        Geometry::Curve(c) => {
            let pts = c.vertices();
            let n = pts.len();
            assert_eq!(values.len(), n);
            let ell: Vec<f64> =
                (0..n).map(|i| (pts[(i + 1) % n] - pts[i]).norm()).collect();
            if let Some(i) = ell.iter().position(|&l| l == 0.0) {
                return Err(GeometryError::DegenerateSpacing(i));
            }
            Ok(closed_d2(values, &ell))
        }
        Geometry::Axisym(s) => {
            let pts = s.profile();
            let n = pts.len();
            assert_eq!(values.len(), n);
            match s.kind() {
                ProfileKind::TorusType => {
                    let ell: Vec<f64> =
                        (0..n).map(|i| (pts[(i + 1) % n] - pts[i]).norm()).collect();
                    if let Some(i) = ell.iter().position(|&l| l == 0.0) {
                        return Err(GeometryError::DegenerateSpacing(i));
                    }
                    let d1v = closed_d1(values, &ell);
                    let d2v = closed_d2(values, &ell);
                    Ok((0..n)
                        .map(|i| {
                            let (im, ip) = ((i + n - 1) % n, (i + 1) % n);
                            let (hm, hp) = (ell[im], ell[i]);
                            let tr = stencil::d1(pts[im].x, pts[i].x, pts[ip].x, hm, hp);
                            let tz = stencil::d1(pts[im].y, pts[i].y, pts[ip].y, hm, hp);
                            let rp = tr / tr.hypot(tz);
                            d2v[i] + rp / pts[i].x * d1v[i]
                        })
                        .collect())
                }
                ProfileKind::SphereType => {
                    let ell: Vec<f64> =
                        (0..n - 1).map(|i| (pts[i + 1] - pts[i]).norm()).collect();
                    if let Some(i) = ell.iter().position(|&l| l == 0.0) {
                        return Err(GeometryError::DegenerateSpacing(i));
                    }
                    let mut r_prime = vec![0.0; n];
                    r_prime[0] = 1.0;
                    r_prime[n - 1] = -1.0;
                    for i in 1..n - 1 {
                        let (hm, hp) = (ell[i - 1], ell[i]);
                        let tr = stencil::d1(pts[i - 1].x, pts[i].x, pts[i + 1].x, hm, hp);
                        let tz = stencil::d1(pts[i - 1].y, pts[i].y, pts[i + 1].y, hm, hp);
                        r_prime[i] = tr / tr.hypot(tz);
                    }
                    let (_, lap) = sphere_type_scalar_derivatives(values, &ell, &r_prime, pts);
                    Ok(lap)
                }
            }
        }
    }
}
