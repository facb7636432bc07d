//! Shape descriptors and discretization entry point.

use nalgebra::Vector2;

use super::{
    remesh, AnalyticShape, AxisymmetricSurface, DiscreteCurve, Geometry, GeometryError,
    ProfileKind,
};

/// What to build and how finely.
#[derive(Clone, Debug)]
pub enum ShapeDescriptor {
    Circle { radius: f64 },
    Ellipse { a: f64, b: f64 },
    FourierStar { harmonics: Vec<(u32, f64)> },
    Sphere { radius: f64 },
    Ellipsoid { a: f64, c: f64 },
    Torus { major: f64, minor: f64 },
    /// Explicit closed curve, resampled to the requested resolution.
    CurvePoints(Vec<Vector2<f64>>),
    /// Explicit meridian profile, resampled to the requested resolution.
    ProfilePoints { points: Vec<Vector2<f64>>, kind: ProfileKind },
}

impl ShapeDescriptor {
    pub fn analytic(&self) -> Option<AnalyticShape> {
        match self {
            ShapeDescriptor::Circle { radius } => {
                Some(AnalyticShape::Circle { radius: *radius })
            }
            ShapeDescriptor::Ellipse { a, b } => Some(AnalyticShape::Ellipse { a: *a, b: *b }),
            ShapeDescriptor::FourierStar { harmonics } => {
                Some(AnalyticShape::FourierStar { harmonics: harmonics.clone() })
            }
            ShapeDescriptor::Sphere { radius } => {
                Some(AnalyticShape::Sphere { radius: *radius })
            }
            ShapeDescriptor::Ellipsoid { a, c } => {
                Some(AnalyticShape::Ellipsoid { a: *a, c: *c })
            }
            ShapeDescriptor::Torus { major, minor } => {
                Some(AnalyticShape::Torus { major: *major, minor: *minor })
            }
            _ => None,
        }
    }

    fn check_positive(params: &[(&str, f64)]) -> Result<(), GeometryError> {
        for (name, v) in params {
            if !v.is_finite() || *v <= 0.0 {
                return Err(GeometryError::BadParameter(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Build a near-uniform discretization with `n` curve/profile vertices and
/// `m` azimuthal samples (surfaces only; ignored for curves).
pub fn build(desc: &ShapeDescriptor, n: usize, m: usize) -> Result<Geometry, GeometryError> {
    match desc {
        ShapeDescriptor::Circle { radius } => {
            ShapeDescriptor::check_positive(&[("radius", *radius)])?;
            desc.analytic().unwrap().discretize(n, m)
        }
        ShapeDescriptor::Ellipse { a, b } => {
            ShapeDescriptor::check_positive(&[("a", *a), ("b", *b)])?;
            desc.analytic().unwrap().discretize(n, m)
        }
        ShapeDescriptor::FourierStar { harmonics } => {
            let amp: f64 = harmonics.iter().map(|(_, a)| a.abs()).sum();
            if amp >= 1.0 {
                return Err(GeometryError::BadParameter(format!(
                    "fourier-star harmonic amplitudes sum to {amp}; must stay below 1 to keep r positive"
                )));
            }
            desc.analytic().unwrap().discretize(n, m)
        }
        ShapeDescriptor::Sphere { radius } => {
            ShapeDescriptor::check_positive(&[("radius", *radius)])?;
            desc.analytic().unwrap().discretize(n, m)
        }
        ShapeDescriptor::Ellipsoid { a, c } => {
            ShapeDescriptor::check_positive(&[("a", *a), ("c", *c)])?;
            desc.analytic().unwrap().discretize(n, m)
        }
        ShapeDescriptor::Torus { major, minor } => {
            ShapeDescriptor::check_positive(&[("major", *major), ("minor", *minor)])?;
            if minor >= major {
                return Err(GeometryError::BadParameter(
                    "torus needs minor < major to stay embedded".into(),
                ));
            }
            desc.analytic().unwrap().discretize(n, m)
        }
        ShapeDescriptor::CurvePoints(points) => {
            let c = DiscreteCurve::new(points.clone())?;
            let (g, _) = remesh::resample(&Geometry::Curve(c), n, &[])?;
            g.validate()?;
            Ok(g)
        }
        ShapeDescriptor::ProfilePoints { points, kind } => {
            let s = AxisymmetricSurface::new(points.clone(), *kind, m.max(3))?;
            let (g, _) = remesh::resample(&Geometry::Axisym(s), n, &[])?;
            g.validate()?;
            Ok(g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    #[test]
    fn circle_build_has_uniform_spacing() {
        let g = build(&ShapeDescriptor::Circle { radius: 1.0 }, 256, 0).unwrap();
        assert_eq!(g.vertex_count(), 256);
        let expected = TAU / 256.0;
        if let Geometry::Curve(c) = &g {
            for (i, v) in c.vertices().iter().enumerate() {
                assert!((v.norm() - 1.0).abs() < 1e-12, "vertex {i} off circle");
            }
            for l in c.edge_lengths() {
                // chord of the uniform arc
                assert!((l - 2.0 * (expected / 2.0).sin()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn ellipse_area_matches() {
        let g = build(&ShapeDescriptor::Ellipse { a: 2.0, b: 1.0 }, 512, 0).unwrap();
        let area = g.enclosed_measure();
        assert!((area - 2.0 * PI).abs() / (2.0 * PI) < 1e-4, "area {area}");
    }

    #[test]
    fn fourier_star_is_simple_and_matches_analytic_curvature() {
        let desc = ShapeDescriptor::FourierStar { harmonics: vec![(3, 0.3)] };
        let shape = desc.analytic().unwrap();
        let errs: Vec<f64> = [512usize, 1024]
            .iter()
            .map(|&n| {
                let g = build(&desc, n, 0).unwrap();
                assert!(g.self_intersection().is_none());
                let f = super::super::compute_fields(&g).unwrap();
                let c = match &g {
                    Geometry::Curve(c) => c,
                    _ => unreachable!(),
                };
                // dense analytic curvature of the polar graph as the oracle
                c.vertices()
                    .iter()
                    .zip(&f.mean)
                    .map(|(v, k)| {
                        let theta = v.y.atan2(v.x);
                        (k - shape.curve_curvature(theta)).abs()
                    })
                    .fold(0.0, f64::max)
            })
            .collect();
        assert!(errs[0] < 5e-3, "max curvature error {}", errs[0]);
        let ratio = errs[0] / errs[1];
        assert!((2.5..6.0).contains(&ratio), "second-order convergence, ratio {ratio}");
    }

    #[test]
    fn self_intersecting_star_rejected() {
        let desc = ShapeDescriptor::FourierStar { harmonics: vec![(3, 1.2)] };
        assert!(build(&desc, 256, 0).is_err());
    }
}
