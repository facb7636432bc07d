//! Signed distance to the enclosed region, inradius, and circumradius.

use nalgebra::{Vector2, Vector3};

use super::{AxisymmetricSurface, DiscreteCurve, Geometry};

/// Signed distance from a plane point to a curve's enclosed region:
/// positive inside, negative outside, magnitude = distance to the polygon.
pub fn region_distance_curve(c: &DiscreteCurve, p: Vector2<f64>) -> f64 {
    let d = c.distance_to_boundary(p);
    if c.contains(p) {
        d
    } else {
        -d
    }
}

/// Signed distance in meridian coordinates `(r, z)`; equals the 3D signed
/// distance for the corresponding space point.
pub fn region_distance_meridian(s: &AxisymmetricSurface, q: Vector2<f64>) -> f64 {
    let d = s.meridian_distance_to_profile(q);
    if s.meridian_contains(q) {
        d
    } else {
        -d
    }
}

/// Signed distance from a space point to the solid of revolution.
pub fn region_distance_axisym(s: &AxisymmetricSurface, p: Vector3<f64>) -> f64 {
    region_distance_meridian(s, AxisymmetricSurface::meridian_coordinates(p))
}

/// Signed distance dispatcher over the embedding space of the geometry
/// (curves read the xy components).
pub fn region_distance(g: &Geometry, p: Vector3<f64>) -> f64 {
    match g {
        Geometry::Curve(c) => region_distance_curve(c, Vector2::new(p.x, p.y)),
        Geometry::Axisym(s) => region_distance_axisym(s, p),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Ball2 {
    pub center: Vector2<f64>,
    pub radius: f64,
}

fn circle_two(a: Vector2<f64>, b: Vector2<f64>) -> Ball2 {
    let center = (a + b) * 0.5;
    Ball2 { center, radius: (a - center).norm() }
}

fn circle_three(a: Vector2<f64>, b: Vector2<f64>, c: Vector2<f64>) -> Option<Ball2> {
    let bx = b - a;
    let cx = c - a;
    let d = 2.0 * (bx.x * cx.y - bx.y * cx.x);
    if d.abs() < 1e-300 {
        return None;
    }
    let b2 = bx.norm_squared();
    let c2 = cx.norm_squared();
    let ux = (cx.y * b2 - bx.y * c2) / d;
    let uy = (bx.x * c2 - cx.x * b2) / d;
    let center = a + Vector2::new(ux, uy);
    Some(Ball2 { center, radius: (a - center).norm() })
}

fn inside(ball: &Ball2, p: Vector2<f64>) -> bool {
    (p - ball.center).norm() <= ball.radius * (1.0 + 1e-12) + 1e-300
}

/// Minimal enclosing circle of a point set (Welzl's incremental algorithm
/// with a deterministic shuffle).
pub fn min_enclosing_circle(points: &[Vector2<f64>]) -> Ball2 {
    assert!(points.len() >= 2);
    let mut pts = points.to_vec();
    // xorshift shuffle: deterministic across runs and platforms
    let mut state = 0x9e3779b97f4a7c15u64;
    for i in (1..pts.len()).rev() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        pts.swap(i, (state % (i as u64 + 1)) as usize);
    }

    let mut ball = circle_two(pts[0], pts[1]);
    for i in 2..pts.len() {
        if inside(&ball, pts[i]) {
            continue;
        }
        ball = circle_two(pts[i], pts[0]);
        for j in 1..i {
            if inside(&ball, pts[j]) {
                continue;
            }
            ball = circle_two(pts[i], pts[j]);
            for k in 0..j {
                if inside(&ball, pts[k]) {
                    continue;
                }
                ball = circle_three(pts[i], pts[j], pts[k])
                    .unwrap_or_else(|| farthest_pair_ball(&[pts[i], pts[j], pts[k]]));
            }
        }
    }
    ball
}

fn farthest_pair_ball(pts: &[Vector2<f64>]) -> Ball2 {
    let mut best = circle_two(pts[0], pts[1]);
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let b = circle_two(pts[i], pts[j]);
            if b.radius > best.radius {
                best = b;
            }
        }
    }
    best
}

/// Radius and center of the minimal enclosing ball of the discretization.
/// For surfaces the center lies on the axis by symmetry and the returned
/// center is in meridian coordinates `(0, z)`.
pub fn circumscribed_ball(g: &Geometry) -> Ball2 {
    match g {
        Geometry::Curve(c) => min_enclosing_circle(c.vertices()),
        Geometry::Axisym(s) => {
            let profile = s.profile();
            let reach = |z: f64| -> f64 {
                profile
                    .iter()
                    .map(|p| (p.x * p.x + (p.y - z) * (p.y - z)).sqrt())
                    .fold(0.0, f64::max)
            };
            let (mut lo, mut hi) = profile
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| {
                    (a.min(p.y), b.max(p.y))
                });
            for _ in 0..200 {
                let m1 = lo + (hi - lo) / 3.0;
                let m2 = hi - (hi - lo) / 3.0;
                if reach(m1) < reach(m2) {
                    hi = m2;
                } else {
                    lo = m1;
                }
            }
            let z = 0.5 * (lo + hi);
            Ball2 { center: Vector2::new(0.0, z), radius: reach(z) }
        }
    }
}

/// Maximal inscribed ball, located by a coarse interior grid followed by
/// compass refinement of the best candidates. The center is a plane point
/// for curves and a meridian point for surfaces.
pub fn inscribed_ball(g: &Geometry) -> Ball2 {
    let sd = |q: Vector2<f64>| -> f64 {
        match g {
            Geometry::Curve(c) => region_distance_curve(c, q),
            Geometry::Axisym(s) => region_distance_meridian(s, q),
        }
    };
    let pts: Vec<Vector2<f64>> = match g {
        Geometry::Curve(c) => c.vertices().to_vec(),
        Geometry::Axisym(s) => s.profile().to_vec(),
    };
    let (mut xmin, mut xmax, mut ymin, mut ymax) =
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in &pts {
        xmin = xmin.min(p.x);
        xmax = xmax.max(p.x);
        ymin = ymin.min(p.y);
        ymax = ymax.max(p.y);
    }
    if matches!(g, Geometry::Axisym(_)) {
        xmin = 0.0; // meridian half-plane includes the axis
    }
    let grid = 48;
    let mut seeds: Vec<(f64, Vector2<f64>)> = Vec::new();
    for i in 0..=grid {
        for j in 0..=grid {
            let q = Vector2::new(
                xmin + (xmax - xmin) * i as f64 / grid as f64,
                ymin + (ymax - ymin) * j as f64 / grid as f64,
            );
            let v = sd(q);
            if v > 0.0 {
                seeds.push((v, q));
            }
        }
    }
    seeds.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    seeds.truncate(8);
    let scale = (xmax - xmin).max(ymax - ymin);
    let mut best = (f64::NEG_INFINITY, Vector2::zeros());
    for &(v0, q0) in &seeds {
        let mut q = q0;
        let mut v = v0;
        let mut step = scale / grid as f64;
        while step > 1e-10 * scale {
            let mut improved = false;
            for dir in [
                Vector2::new(1.0, 0.0),
                Vector2::new(-1.0, 0.0),
                Vector2::new(0.0, 1.0),
                Vector2::new(0.0, -1.0),
                Vector2::new(1.0, 1.0) * std::f64::consts::FRAC_1_SQRT_2,
                Vector2::new(1.0, -1.0) * std::f64::consts::FRAC_1_SQRT_2,
                Vector2::new(-1.0, 1.0) * std::f64::consts::FRAC_1_SQRT_2,
                Vector2::new(-1.0, -1.0) * std::f64::consts::FRAC_1_SQRT_2,
            ] {
                let cand = q + dir * step;
                let cv = sd(cand);
                if cv > v {
                    q = cand;
                    v = cv;
                    improved = true;
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        if v > best.0 {
            best = (v, q);
        }
    }
    Ball2 { center: best.1, radius: best.0 }
}

/// `(inscribed, circumscribed)` balls of the enclosed region.
pub fn inradius_circumradius(g: &Geometry) -> (Ball2, Ball2) {
    (inscribed_ball(g), circumscribed_ball(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::analytic::AnalyticShape;

    #[test]
    fn unit_circle_signed_distances() {
        let g = AnalyticShape::Circle { radius: 1.0 }.discretize(2048, 0).unwrap();
        if let Geometry::Curve(c) = &g {
            assert!((region_distance_curve(c, Vector2::new(0.0, 0.0)) - 1.0).abs() < 1e-5);
            assert!((region_distance_curve(c, Vector2::new(2.0, 0.0)) + 1.0).abs() < 1e-5);
        }
    }

    #[test]
    fn circle_inradius_circumradius() {
        let g = AnalyticShape::Circle { radius: 1.0 }.discretize(4096, 0).unwrap();
        let (inner, outer) = inradius_circumradius(&g);
        assert!((inner.radius - 1.0).abs() < 1e-6, "r_in {}", inner.radius);
        assert!((outer.radius - 1.0).abs() < 1e-6, "r_out {}", outer.radius);
    }

    #[test]
    fn ellipse_inradius_circumradius_match_axes() {
        let g = AnalyticShape::Ellipse { a: 2.0, b: 1.0 }.discretize(1024, 0).unwrap();
        let (inner, outer) = inradius_circumradius(&g);
        assert!((inner.radius - 1.0).abs() < 1e-3, "r_in {}", inner.radius);
        assert!((outer.radius - 2.0).abs() < 1e-3, "r_out {}", outer.radius);
    }

    #[test]
    fn sphere_balls_from_meridian() {
        let g = AnalyticShape::Sphere { radius: 1.5 }.discretize(512, 16).unwrap();
        let (inner, outer) = inradius_circumradius(&g);
        assert!((inner.radius - 1.5).abs() < 1e-4);
        assert!((outer.radius - 1.5).abs() < 1e-6);
        assert!(outer.center.x == 0.0);
    }

    #[test]
    fn torus_inscribed_ball_is_meridian_disc() {
        let g = AnalyticShape::Torus { major: 2.0, minor: 0.5 }.discretize(256, 16).unwrap();
        let (inner, outer) = inradius_circumradius(&g);
        assert!((inner.radius - 0.5).abs() < 1e-3, "r_in {}", inner.radius);
        assert!((outer.radius - 2.5).abs() < 1e-3, "r_out {}", outer.radius);
        assert!((inner.center.x - 2.0).abs() < 1e-2);
    }

    #[test]
    fn region_distance_is_lipschitz() {
        let g = AnalyticShape::Ellipse { a: 2.0, b: 1.0 }.discretize(256, 0).unwrap();
        let c = match &g {
            Geometry::Curve(c) => c,
            _ => unreachable!(),
        };
        // deterministic low-discrepancy point pairs
        let mut t = 0.234_f64;
        let mut next = || {
            t = (t * 9.8696 + 0.123).fract();
            t
        };
        for _ in 0..500 {
            let p = Vector2::new(next() * 6.0 - 3.0, next() * 4.0 - 2.0);
            let q = Vector2::new(next() * 6.0 - 3.0, next() * 4.0 - 2.0);
            let dp = region_distance_curve(c, p);
            let dq = region_distance_curve(c, q);
            assert!((dp - dq).abs() <= (p - q).norm() + 1e-12);
        }
    }
}
