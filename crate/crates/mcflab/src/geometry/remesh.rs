//! Tangential remeshing: resample to uniform arclength on a cubic-spline
//! reconstruction, then rescale to restore the enclosed area (curves) or
//! volume (surfaces) exactly.
//!
//! The rescale factor is within interpolation error of 1; it removes the
//! systematic chord-polygon area drift that uniformizing a non-uniform
//! polygon would otherwise introduce.

use nalgebra::Vector2;

use super::{AxisymmetricSurface, DiscreteCurve, Geometry, GeometryError, ProfileKind};
use crate::numerics::{Boundary, CubicSpline};

/// Spacing-ratio threshold beyond which standalone consumers should remesh.
pub const REMESH_SPACING_RATIO: f64 = 3.0;

pub fn needs_remesh(g: &Geometry) -> bool {
    let (min, max) = g.spacing_range();
    max / min > REMESH_SPACING_RATIO
}

/// Resample to `n` vertices at uniform arclength, carrying any number of
/// vertex scalar fields along. Returns the new geometry and the transported
/// fields.
pub fn resample(
    g: &Geometry,
    n: usize,
    fields: &[&[f64]],
) -> Result<(Geometry, Vec<Vec<f64>>), GeometryError> {
    match g {
        Geometry::Curve(c) => {
            let (verts, carried) = resample_closed(c.vertices(), n, fields, true);
            let mut curve = DiscreteCurve::from_vertices_unchecked(verts);
            let target = c.signed_area();
            let actual = curve.signed_area();
            if actual <= 0.0 {
                return Err(GeometryError::NegativeOrientation(actual));
            }
            let scale = (target / actual).sqrt();
            let centroid = curve.centroid();
            for v in curve.vertices_mut() {
                *v = centroid + (*v - centroid) * scale;
            }
            Ok((Geometry::Curve(curve), carried))
        }
        Geometry::Axisym(s) => match s.kind() {
            ProfileKind::TorusType => {
                let (profile, carried) = resample_closed(s.profile(), n, fields, true);
                let surf = AxisymmetricSurface::from_profile_unchecked(
                    profile,
                    ProfileKind::TorusType,
                    s.azimuthal_samples(),
                );
                Ok((Geometry::Axisym(rescale_volume(surf, s.enclosed_volume())?), carried))
            }
            ProfileKind::SphereType => {
                let (profile, carried) = resample_pole_to_pole(s.profile(), n, fields);
                let surf = AxisymmetricSurface::from_profile_unchecked(
                    profile,
                    ProfileKind::SphereType,
                    s.azimuthal_samples(),
                );
                Ok((Geometry::Axisym(rescale_volume(surf, s.enclosed_volume())?), carried))
            }
        },
    }
}

fn rescale_volume(
    mut surf: AxisymmetricSurface,
    target: f64,
) -> Result<AxisymmetricSurface, GeometryError> {
    let actual = surf.enclosed_volume();
    if actual <= 0.0 {
        return Err(GeometryError::NegativeOrientation(actual));
    }
    let scale = (target / actual).cbrt();
    let z_ref = volume_centroid_z(&surf);
    for p in surf.profile_mut() {
        p.x *= scale;
        p.y = z_ref + (p.y - z_ref) * scale;
    }
    Ok(surf)
}

/// z coordinate of the solid's volume centroid, `integral of z dV / V`.
fn volume_centroid_z(s: &AxisymmetricSurface) -> f64 {
    let profile = s.profile();
    let n = profile.len();
    let count = if s.is_closed() { n } else { n - 1 };
    let mut moment = 0.0;
    for i in 0..count {
        let p = profile[i];
        let q = profile[(i + 1) % n];
        // Simpson over the edge; the integrand z r^2 dz is cubic in the
        // edge parameter, so this is exact.
        let f = |t: f64| {
            let r = p.x + (q.x - p.x) * t;
            let z = p.y + (q.y - p.y) * t;
            z * r * r
        };
        moment += (q.y - p.y) * (f(0.0) + 4.0 * f(0.5) + f(1.0)) / 6.0;
    }
    std::f64::consts::PI * moment / s.enclosed_volume()
}

fn cumulative_chords(pts: &[Vector2<f64>], closed: bool) -> (Vec<f64>, f64) {
    let n = pts.len();
    let mut s = Vec::with_capacity(n);
    s.push(0.0);
    for i in 1..n {
        s.push(s[i - 1] + (pts[i] - pts[i - 1]).norm());
    }
    let total = if closed {
        s[n - 1] + (pts[0] - pts[n - 1]).norm()
    } else {
        s[n - 1]
    };
    (s, total)
}

fn resample_closed(
    pts: &[Vector2<f64>],
    n: usize,
    fields: &[&[f64]],
    _closed: bool,
) -> (Vec<Vector2<f64>>, Vec<Vec<f64>>) {
    let (knots, total) = cumulative_chords(pts, true);
    let xs: Vec<f64> = pts.iter().map(|p| p.x).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.y).collect();
    let b = Boundary::Periodic { period: total };
    let sx = CubicSpline::fit(&knots, &xs, b);
    let sy = CubicSpline::fit(&knots, &ys, b);
    let field_splines: Vec<CubicSpline> =
        fields.iter().map(|f| CubicSpline::fit(&knots, f, b)).collect();
    let mut verts = Vec::with_capacity(n);
    let mut carried = vec![Vec::with_capacity(n); fields.len()];
    for j in 0..n {
        let s = total * j as f64 / n as f64;
        verts.push(Vector2::new(sx.eval(s), sy.eval(s)));
        for (k, fs) in field_splines.iter().enumerate() {
            carried[k].push(fs.eval(s));
        }
    }
    (verts, carried)
}

fn resample_pole_to_pole(
    pts: &[Vector2<f64>],
    n: usize,
    fields: &[&[f64]],
) -> (Vec<Vector2<f64>>, Vec<Vec<f64>>) {
    let (knots, total) = cumulative_chords(pts, false);
    let m = pts.len();
    let rs: Vec<f64> = pts.iter().map(|p| p.x).collect();
    let zs: Vec<f64> = pts.iter().map(|p| p.y).collect();
    // the meridian crosses the axis orthogonally: dr/ds = +-1, dz/ds = 0
    let sr = CubicSpline::fit(&knots, &rs, Boundary::Clamped { start: 1.0, end: -1.0 });
    let sz = CubicSpline::fit(&knots, &zs, Boundary::Clamped { start: 0.0, end: 0.0 });
    // scalar fields are even in arclength at the poles
    let field_splines: Vec<CubicSpline> = fields
        .iter()
        .map(|f| CubicSpline::fit(&knots, f, Boundary::Clamped { start: 0.0, end: 0.0 }))
        .collect();
    let mut verts = Vec::with_capacity(n);
    let mut carried = vec![Vec::with_capacity(n); fields.len()];
    for j in 0..n {
        let s = total * j as f64 / (n - 1) as f64;
        let mut p = Vector2::new(sr.eval(s), sz.eval(s));
        if j == 0 {
            p = pts[0];
        } else if j == n - 1 {
            p = pts[m - 1];
        }
        verts.push(p);
        for (k, fs) in field_splines.iter().enumerate() {
            carried[k].push(fs.eval(s));
        }
    }
    (verts, carried)
}
