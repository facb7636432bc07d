//! Analytic reference shapes with exact local geometry.
//!
//! Each shape evaluates its parametrization through fourth-order Taylor
//! jets, so positions, normals, curvatures, and the covariant derivatives
//! needed by the verification module are exact to rounding rather than
//! approximated by differencing. [`LocalData`] bundles the pointwise
//! tensors together with a normal-coordinate chart: a parameter map whose
//! pushforward is an orthonormal frame and whose second derivative at the
//! base point is purely normal. Finite differences of any scalar along that
//! chart converge at second order to honest covariant derivatives.

use nalgebra::{Vector2, Vector3};

use super::{AxisymmetricSurface, DiscreteCurve, Geometry, GeometryError, ProfileKind, VertexFields};
use crate::numerics::Jet;

#[derive(Clone, Debug, PartialEq)]
pub enum AnalyticShape {
    Circle { radius: f64 },
    Ellipse { a: f64, b: f64 },
    /// Polar graph `r(theta) = 1 + sum of amp * cos(k theta)`.
    FourierStar { harmonics: Vec<(u32, f64)> },
    Sphere { radius: f64 },
    /// Surface of revolution with equatorial radius `a`, polar radius `c`.
    Ellipsoid { a: f64, c: f64 },
    Torus { major: f64, minor: f64 },
}

/// Pointwise sample used when evaluating the two-point function along
/// charts: position, outward normal, mean curvature.
#[derive(Clone, Copy, Debug)]
pub struct PointData {
    pub position: Vector3<f64>,
    pub normal: Vector3<f64>,
    pub mean: f64,
}

/// Exact local geometry at one point, with a second-order normal chart.
#[derive(Clone, Debug)]
pub struct LocalData {
    pub dim: usize,
    pub position: Vector3<f64>,
    pub normal: Vector3<f64>,
    /// Orthonormal tangent frame `e_1..e_dim` (unused slots are zero).
    pub frame: [Vector3<f64>; 2],
    /// Second fundamental form in the frame (outward normal convention;
    /// positive on convex bodies).
    pub h: [[f64; 2]; 2],
    pub mean: f64,
    pub norm_a_sq: f64,
    /// Frame components of the tangential gradient of H.
    pub grad_mean: [f64; 2],
    /// Covariant Hessian of H in normal coordinates.
    pub hess_mean: [[f64; 2]; 2],
    /// Covariant derivative of the second fundamental form, `grad_h[k][i][j]`.
    pub grad_h: [[[f64; 2]; 2]; 2],
    chart: Chart,
}

#[derive(Clone, Debug)]
enum Chart {
    /// Arclength reparametrization of a curve, inverted as a quartic series.
    Curve { theta0: f64, b: [f64; 4] },
    /// Second-order normal chart on a surface of revolution.
    Surface {
        theta0: f64,
        phi0: f64,
        inv_sigma: f64,
        inv_r: f64,
        q_t11: f64,
        q_t22: f64,
        q_p12: f64,
    },
}

impl LocalData {
    /// Map normal coordinates `u` to parameters.
    pub fn chart_params(&self, u: [f64; 2]) -> [f64; 2] {
        match &self.chart {
            Chart::Curve { theta0, b } => {
                let s = u[0];
                [theta0 + s * (b[0] + s * (b[1] + s * (b[2] + s * b[3]))), 0.0]
            }
            Chart::Surface { theta0, phi0, inv_sigma, inv_r, q_t11, q_t22, q_p12 } => {
                let (u1, u2) = (u[0], u[1]);
                [
                    theta0 + u1 * inv_sigma + 0.5 * (q_t11 * u1 * u1 + q_t22 * u2 * u2),
                    phi0 + u2 * inv_r + q_p12 * u1 * u2,
                ]
            }
        }
    }
}

impl AnalyticShape {
    pub fn dim(&self) -> usize {
        match self {
            AnalyticShape::Circle { .. }
            | AnalyticShape::Ellipse { .. }
            | AnalyticShape::FourierStar { .. } => 1,
            _ => 2,
        }
    }

    /// Parameter period for curves and torus profiles; sphere-type profiles
    /// span `[0, pi]` instead.
    pub fn profile_is_closed(&self) -> bool {
        !matches!(
            self,
            AnalyticShape::Sphere { .. } | AnalyticShape::Ellipsoid { .. }
        )
    }

    fn curve_jets(&self, theta: f64) -> [Jet; 2] {
        let t = Jet::variable(theta);
        match self {
            AnalyticShape::Circle { radius } => [t.cos() * *radius, t.sin() * *radius],
            AnalyticShape::Ellipse { a, b } => [t.cos() * *a, t.sin() * *b],
            AnalyticShape::FourierStar { harmonics } => {
                let mut r = Jet::constant(1.0);
                for &(k, amp) in harmonics {
                    r = r + (t * k as f64).cos() * amp;
                }
                [r * t.cos(), r * t.sin()]
            }
            _ => panic!("curve evaluation on a surface shape"),
        }
    }

    /// Meridian profile `(r(theta), z(theta))` of a surface of revolution.
    fn profile_jets(&self, theta: f64) -> [Jet; 2] {
        let t = Jet::variable(theta);
        match self {
            AnalyticShape::Sphere { radius } => [t.sin() * *radius, -(t.cos() * *radius)],
            AnalyticShape::Ellipsoid { a, c } => [t.sin() * *a, -(t.cos() * *c)],
            AnalyticShape::Torus { major, minor } => {
                [t.cos() * *minor + *major, t.sin() * *minor]
            }
            _ => panic!("profile evaluation on a curve shape"),
        }
    }

    /// Curvature of a curve shape as a function of the parameter (exact).
    pub fn curve_curvature(&self, theta: f64) -> f64 {
        let [x, y] = self.curve_jets(theta);
        let (xd, yd) = (x.d(), y.d());
        let (xdd, ydd) = (xd.d(), yd.d());
        let speed2 = xd.value() * xd.value() + yd.value() * yd.value();
        (xd.value() * ydd.value() - yd.value() * xdd.value()) / speed2.powf(1.5)
    }

    /// Position, outward normal, and mean curvature at the given parameters.
    pub fn point_data(&self, params: [f64; 2]) -> PointData {
        if self.dim() == 1 {
            let [x, y] = self.curve_jets(params[0]);
            let (xd, yd) = (x.d(), y.d());
            let sigma = (xd.value().powi(2) + yd.value().powi(2)).sqrt();
            let tx = xd.value() / sigma;
            let ty = yd.value() / sigma;
            PointData {
                position: Vector3::new(x.value(), y.value(), 0.0),
                normal: Vector3::new(ty, -tx, 0.0),
                mean: self.curve_curvature(params[0]),
            }
        } else {
            let [r, z] = self.profile_jets(params[0]);
            let (rd, zd) = (r.d(), z.d());
            let sigma = (rd.value().powi(2) + zd.value().powi(2)).sqrt();
            let (sphi, cphi) = params[1].sin_cos();
            let kappa_m = {
                let (rdd, zdd) = (rd.d(), zd.d());
                (rd.value() * zdd.value() - zd.value() * rdd.value()) / sigma.powi(3)
            };
            let kappa_az = zd.value() / (sigma * r.value());
            PointData {
                position: Vector3::new(r.value() * cphi, r.value() * sphi, z.value()),
                normal: Vector3::new(
                    zd.value() / sigma * cphi,
                    zd.value() / sigma * sphi,
                    -rd.value() / sigma,
                ),
                mean: kappa_m + kappa_az,
            }
        }
    }

    /// Full local tensor data plus a normal chart. For surfaces the point
    /// must be away from the axis (`r > 0`).
    pub fn local_data(&self, params: [f64; 2]) -> LocalData {
        if self.dim() == 1 {
            self.curve_local(params[0])
        } else {
            self.surface_local(params[0], params[1])
        }
    }

    fn curve_local(&self, theta: f64) -> LocalData {
        let [x, y] = self.curve_jets(theta);
        let (xd, yd) = (x.d(), y.d());
        let (xdd, ydd) = (xd.d(), yd.d());
        let sigma = (xd * xd + yd * yd).sqrt(); // jet, order 3
        let s0 = sigma.value();
        let kappa = (xd * ydd - yd * xdd) / (sigma * sigma * sigma); // order 2

        let t = Vector3::new(xd.value() / s0, yd.value() / s0, 0.0);
        let nu = Vector3::new(t.y, -t.x, 0.0);
        let k0 = kappa.value();
        let dk_ds = kappa.derivative(1) / s0;
        let d2k_ds2 = kappa.derivative(2) / (s0 * s0)
            - kappa.derivative(1) * sigma.derivative(1) / (s0 * s0 * s0);

        // arclength series s(theta) and its quartic inverse
        let c1 = sigma.c[0];
        let c2 = sigma.c[1] / 2.0;
        let c3 = sigma.c[2] / 3.0;
        let c4 = sigma.c[3] / 4.0;
        let b1 = 1.0 / c1;
        let b2 = -c2 / c1.powi(3);
        let b3 = (2.0 * c2 * c2 - c1 * c3) / c1.powi(5);
        let b4 = (5.0 * c1 * c2 * c3 - 5.0 * c2.powi(3) - c1 * c1 * c4) / c1.powi(7);

        let mut h = [[0.0; 2]; 2];
        h[0][0] = k0;
        let mut grad_h = [[[0.0; 2]; 2]; 2];
        grad_h[0][0][0] = dk_ds;
        let mut hess = [[0.0; 2]; 2];
        hess[0][0] = d2k_ds2;
        LocalData {
            dim: 1,
            position: Vector3::new(x.value(), y.value(), 0.0),
            normal: nu,
            frame: [t, Vector3::zeros()],
            h,
            mean: k0,
            norm_a_sq: k0 * k0,
            grad_mean: [dk_ds, 0.0],
            hess_mean: hess,
            grad_h,
            chart: Chart::Curve { theta0: theta, b: [b1, b2, b3, b4] },
        }
    }

    fn surface_local(&self, theta: f64, phi: f64) -> LocalData {
        let [r, z] = self.profile_jets(theta);
        let (rd, zd) = (r.d(), z.d());
        let (rdd, zdd) = (rd.d(), zd.d());
        let (rddd, zddd) = (rdd.d(), zdd.d());
        let sigma = (rd * rd + zd * zd).sqrt();
        let (r0, z0) = (r.value(), z.value());
        assert!(r0 > 0.0, "local data requested on the axis");
        let s0 = sigma.value();
        let sd0 = sigma.derivative(1);
        let (sphi, cphi) = phi.sin_cos();

        let kappa_m = (rd * zdd - zd * rdd) / (sigma * sigma * sigma);
        let kappa_az = zd / (sigma * r);
        let mean_jet = kappa_m + kappa_az;

        let e1 = Vector3::new(rd.value() / s0 * cphi, rd.value() / s0 * sphi, zd.value() / s0);
        let e2 = Vector3::new(-sphi, cphi, 0.0);
        let nu = Vector3::new(
            zd.value() / s0 * cphi,
            zd.value() / s0 * sphi,
            -rd.value() / s0,
        );

        let km = kappa_m.value();
        let ka = kappa_az.value();
        let mut h = [[0.0; 2]; 2];
        h[0][0] = km;
        h[1][1] = ka;

        let grad_mean = [mean_jet.derivative(1) / s0, 0.0];
        let q_t11 = -sd0 / s0.powi(3);
        let q_t22 = rd.value() / (s0 * s0 * r0);
        let q_p12 = -rd.value() / (s0 * r0 * r0);
        let mut hess = [[0.0; 2]; 2];
        hess[0][0] =
            mean_jet.derivative(2) / (s0 * s0) - mean_jet.derivative(1) * sd0 / s0.powi(3);
        hess[1][1] = mean_jet.derivative(1) * q_t22;

        // third-order chain rule for the covariant derivative of h:
        // grad_k h_ij = -< P3 terms + P2/chart-curvature terms, nu >
        // with diagonal frame map A = diag(1/sigma, 1/r).
        let p2 = |a: usize, b: usize| -> Vector3<f64> {
            match (a, b) {
                (0, 0) => Vector3::new(rdd.value() * cphi, rdd.value() * sphi, zdd.value()),
                (0, 1) | (1, 0) => Vector3::new(-rd.value() * sphi, rd.value() * cphi, 0.0),
                (1, 1) => Vector3::new(-r0 * cphi, -r0 * sphi, 0.0),
                _ => unreachable!(),
            }
        };
        let p3 = |a: usize, b: usize, c: usize| -> Vector3<f64> {
            match a + b + c {
                0 => Vector3::new(rddd.value() * cphi, rddd.value() * sphi, zddd.value()),
                1 => Vector3::new(-rdd.value() * sphi, rdd.value() * cphi, 0.0),
                2 => Vector3::new(-rd.value() * cphi, -rd.value() * sphi, 0.0),
                3 => Vector3::new(r0 * sphi, -r0 * cphi, 0.0),
                _ => unreachable!(),
            }
        };
        let a_map = [[1.0 / s0, 0.0], [0.0, 1.0 / r0]]; // a_map[axis][u-index]
        let mut q_map = [[[0.0; 2]; 2]; 2]; // q_map[axis][i][j]
        q_map[0][0][0] = q_t11;
        q_map[0][1][1] = q_t22;
        q_map[1][0][1] = q_p12;
        q_map[1][1][0] = q_p12;

        let mut grad_h = [[[0.0; 2]; 2]; 2];
        for k in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    let mut v = Vector3::zeros();
                    for a in 0..2 {
                        for b in 0..2 {
                            for c in 0..2 {
                                let w = a_map[a][k] * a_map[b][i] * a_map[c][j];
                                if w != 0.0 {
                                    v += p3(a, b, c) * w;
                                }
                            }
                            let w = q_map[a][k][i] * a_map[b][j]
                                + q_map[a][k][j] * a_map[b][i]
                                + q_map[a][i][j] * a_map[b][k];
                            if w != 0.0 {
                                v += p2(a, b) * w;
                            }
                        }
                    }
                    grad_h[k][i][j] = -v.dot(&nu);
                }
            }
        }

        LocalData {
            dim: 2,
            position: Vector3::new(r0 * cphi, r0 * sphi, z0),
            normal: nu,
            frame: [e1, e2],
            h,
            mean: km + ka,
            norm_a_sq: km * km + ka * ka,
            grad_mean,
            hess_mean: hess,
            grad_h,
            chart: Chart::Surface {
                theta0: theta,
                phi0: phi,
                inv_sigma: 1.0 / s0,
                inv_r: 1.0 / r0,
                q_t11,
                q_t22,
                q_p12,
            },
        }
    }

    /// Does arclength grow linearly in the parameter?
    fn uniform_speed(&self) -> bool {
        matches!(
            self,
            AnalyticShape::Circle { .. }
                | AnalyticShape::Sphere { .. }
                | AnalyticShape::Torus { .. }
        )
    }

    fn param_span(&self) -> f64 {
        if self.profile_is_closed() {
            std::f64::consts::TAU
        } else {
            std::f64::consts::PI
        }
    }

    fn position_2d(&self, theta: f64) -> Vector2<f64> {
        if self.dim() == 1 {
            let [x, y] = self.curve_jets(theta);
            Vector2::new(x.value(), y.value())
        } else {
            let [r, z] = self.profile_jets(theta);
            Vector2::new(r.value(), z.value())
        }
    }

    /// Parameters of `n` samples spaced uniformly in arclength. For open
    /// (sphere-type) profiles both endpoints are included.
    pub fn sample_params(&self, n: usize) -> Vec<f64> {
        let span = self.param_span();
        let closed = self.profile_is_closed();
        if self.uniform_speed() {
            return (0..n)
                .map(|i| {
                    if closed {
                        span * i as f64 / n as f64
                    } else {
                        span * i as f64 / (n - 1) as f64
                    }
                })
                .collect();
        }
        // dense chord-length table, then inverse interpolation
        let k = (n * 32).max(4096);
        let mut params = Vec::with_capacity(k + 1);
        let mut cum = Vec::with_capacity(k + 1);
        let mut acc = 0.0;
        let mut prev = self.position_2d(0.0);
        params.push(0.0);
        cum.push(0.0);
        for i in 1..=k {
            let t = span * i as f64 / k as f64;
            let p = self.position_2d(t);
            acc += (p - prev).norm();
            prev = p;
            params.push(t);
            cum.push(acc);
        }
        let total = acc;
        let targets = n;
        let mut out = Vec::with_capacity(n);
        let mut j = 0usize;
        for i in 0..targets {
            let s = if closed {
                total * i as f64 / n as f64
            } else {
                total * i as f64 / (n - 1) as f64
            };
            while j + 1 < cum.len() && cum[j + 1] < s {
                j += 1;
            }
            if j + 1 >= cum.len() {
                out.push(span);
                continue;
            }
            let (s0, s1) = (cum[j], cum[j + 1]);
            let w = if s1 > s0 { (s - s0) / (s1 - s0) } else { 0.0 };
            out.push(params[j] * (1.0 - w) + params[j + 1] * w);
        }
        if !closed {
            out[0] = 0.0;
            let last = out.len() - 1;
            out[last] = span;
        }
        out
    }

    /// Discretize at `n` samples (plus `m` azimuthal samples for surfaces).
    pub fn discretize(&self, n: usize, m: usize) -> Result<Geometry, GeometryError> {
        let params = self.sample_params(n);
        if self.dim() == 1 {
            let verts = params.iter().map(|&t| self.position_2d(t)).collect();
            Ok(Geometry::Curve(DiscreteCurve::new(verts)?))
        } else {
            let kind = if self.profile_is_closed() {
                ProfileKind::TorusType
            } else {
                ProfileKind::SphereType
            };
            let mut profile: Vec<Vector2<f64>> =
                params.iter().map(|&t| self.position_2d(t)).collect();
            if kind == ProfileKind::SphereType {
                profile[0].x = 0.0;
                let last = profile.len() - 1;
                profile[last].x = 0.0;
            }
            Ok(Geometry::Axisym(AxisymmetricSurface::new(profile, kind, m)?))
        }
    }

    /// Exact vertex fields at the given profile parameters. Pole parameters
    /// (0 or pi on sphere-type shapes) are handled by their symmetric limits.
    pub fn exact_fields(&self, params: &[f64]) -> VertexFields {
        let n = params.len();
        let mut normal = Vec::with_capacity(n);
        let mut kappa_profile = Vec::with_capacity(n);
        let mut kappa_azimuthal = if self.dim() == 2 { Some(Vec::with_capacity(n)) } else { None };
        let mut mean = Vec::with_capacity(n);
        let mut norm_a_sq = Vec::with_capacity(n);
        let mut grad_mean = Vec::with_capacity(n);
        let mut laplace_mean = Vec::with_capacity(n);

        for &t in params {
            if self.dim() == 1 {
                let [x, y] = self.curve_jets(t);
                let (xd, yd) = (x.d(), y.d());
                let (xdd, ydd) = (xd.d(), yd.d());
                let sigma = (xd * xd + yd * yd).sqrt();
                let s0 = sigma.value();
                let kappa = (xd * ydd - yd * xdd) / (sigma * sigma * sigma);
                let tv = Vector2::new(xd.value() / s0, yd.value() / s0);
                normal.push(super::outward_rotation(tv));
                let k0 = kappa.value();
                kappa_profile.push(k0);
                mean.push(k0);
                norm_a_sq.push(k0 * k0);
                grad_mean.push(kappa.derivative(1) / s0);
                laplace_mean.push(
                    kappa.derivative(2) / (s0 * s0)
                        - kappa.derivative(1) * sigma.derivative(1) / s0.powi(3),
                );
            } else {
                let [r, z] = self.profile_jets(t);
                let (rd, zd) = (r.d(), z.d());
                let (rdd, zdd) = (rd.d(), zd.d());
                let sigma = (rd * rd + zd * zd).sqrt();
                let s0 = sigma.value();
                let km_jet = (rd * zdd - zd * rdd) / (sigma * sigma * sigma);
                let km = km_jet.value();
                let at_pole = !self.profile_is_closed() && r.value().abs() < 1e-12;
                // at the pole both z' and r vanish; divide out the common
                // factor of (theta - pole) for the azimuthal curvature jet
                let ka_jet = if at_pole {
                    zd.shift_down() / (sigma * r.shift_down())
                } else {
                    zd / (sigma * r)
                };
                let (ka, mean_jet) = (ka_jet.value(), km_jet + ka_jet);
                let tv = Vector2::new(rd.value() / s0, zd.value() / s0);
                normal.push(super::outward_rotation(tv));
                kappa_profile.push(km);
                kappa_azimuthal.as_mut().unwrap().push(ka);
                mean.push(km + ka);
                norm_a_sq.push(km * km + ka * ka);
                if at_pole {
                    grad_mean.push(0.0);
                    laplace_mean.push(2.0 * mean_jet.derivative(2) / (s0 * s0));
                } else {
                    let h1 = mean_jet.derivative(1) / s0;
                    grad_mean.push(h1);
                    let h2 = mean_jet.derivative(2) / (s0 * s0)
                        - mean_jet.derivative(1) * sigma.derivative(1) / s0.powi(3);
                    laplace_mean.push(h2 + rd.value() / (s0 * r.value()) * h1);
                }
            }
        }
        VertexFields {
            normal,
            kappa_profile,
            kappa_azimuthal,
            mean,
            norm_a_sq,
            grad_mean,
            laplace_mean,
            f: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn shapes() -> Vec<AnalyticShape> {
        vec![
            AnalyticShape::Circle { radius: 1.0 },
            AnalyticShape::Ellipse { a: 2.0, b: 1.0 },
            AnalyticShape::FourierStar { harmonics: vec![(3, 0.3)] },
            AnalyticShape::Sphere { radius: 1.0 },
            AnalyticShape::Ellipsoid { a: 1.5, c: 1.0 },
            AnalyticShape::Torus { major: 2.0, minor: 0.5 },
        ]
    }

    /// Finite differences of the position converge to the supplied
    /// derivative at second order.
    #[test]
    fn position_derivatives_consistent_with_finite_differences() {
        for shape in shapes() {
            let t0 = 0.83;
            let eval = |t: f64| -> Vector2<f64> { shape.position_2d(t) };
            let jet_deriv = {
                let jets = if shape.dim() == 1 {
                    shape.curve_jets(t0)
                } else {
                    shape.profile_jets(t0)
                };
                Vector2::new(jets[0].derivative(1), jets[1].derivative(1))
            };
            let err = |h: f64| ((eval(t0 + h) - eval(t0 - h)) / (2.0 * h) - jet_deriv).norm();
            let (e1, e2) = (err(1e-3), err(5e-4));
            assert!(e1 < 1e-5, "{shape:?}: {e1}");
            let ratio = e1 / e2;
            assert!(
                (3.5..=4.5).contains(&ratio),
                "{shape:?}: convergence ratio {ratio}"
            );
        }
    }

    #[test]
    fn ellipse_curvature_matches_closed_form() {
        let (a, b) = (2.0_f64, 1.0_f64);
        let el = AnalyticShape::Ellipse { a, b };
        for &t in &[0.0, 0.4, 1.1, PI / 2.0, 2.9] {
            let expect =
                a * b / (a * a * t.sin().powi(2) + b * b * t.cos().powi(2)).powf(1.5);
            assert!((el.curve_curvature(t) - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn sphere_local_data_is_umbilic() {
        let sp = AnalyticShape::Sphere { radius: 2.0 };
        let ld = sp.local_data([1.1, 0.7]);
        assert!((ld.h[0][0] - 0.5).abs() < 1e-12);
        assert!((ld.h[1][1] - 0.5).abs() < 1e-12);
        assert!((ld.mean - 1.0).abs() < 1e-12);
        assert!(ld.grad_mean[0].abs() < 1e-12);
        for k in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    assert!(ld.grad_h[k][i][j].abs() < 1e-11, "grad_h[{k}][{i}][{j}]");
                }
            }
        }
        // outward normal: aligned with position
        assert!((ld.normal - ld.position / 2.0).norm() < 1e-12);
    }

    #[test]
    fn frames_are_orthonormal_and_tangent() {
        for shape in shapes() {
            let params = [0.9, 1.3];
            let ld = shape.local_data(params);
            assert!((ld.normal.norm() - 1.0).abs() < 1e-12);
            for i in 0..ld.dim {
                assert!((ld.frame[i].norm() - 1.0).abs() < 1e-12);
                assert!(ld.frame[i].dot(&ld.normal).abs() < 1e-12);
            }
            if ld.dim == 2 {
                assert!(ld.frame[0].dot(&ld.frame[1]).abs() < 1e-12);
            }
        }
    }

    /// The second fundamental form agrees with differencing the normal
    /// along the chart (Weingarten relation), and grad_h is fully symmetric
    /// (Codazzi).
    #[test]
    fn shape_operator_and_codazzi_consistency() {
        for shape in shapes() {
            let ld = shape.local_data([0.9, 1.3]);
            let h_fd = |i: usize, j: usize| -> f64 {
                let hstep = 1e-5;
                let mut up = [0.0; 2];
                up[j] = hstep;
                let mut dn = [0.0; 2];
                dn[j] = -hstep;
                let nu_p = shape.point_data(ld.chart_params(up)).normal;
                let nu_m = shape.point_data(ld.chart_params(dn)).normal;
                ((nu_p - nu_m) / (2.0 * hstep)).dot(&ld.frame[i])
            };
            for i in 0..ld.dim {
                for j in 0..ld.dim {
                    assert!(
                        (ld.h[i][j] - h_fd(i, j)).abs() < 1e-7,
                        "{shape:?} h[{i}][{j}]: {} vs {}",
                        ld.h[i][j],
                        h_fd(i, j)
                    );
                }
            }
            for k in 0..ld.dim {
                for i in 0..ld.dim {
                    for j in 0..ld.dim {
                        let perms = [
                            ld.grad_h[k][i][j],
                            ld.grad_h[i][k][j],
                            ld.grad_h[j][i][k],
                            ld.grad_h[k][j][i],
                        ];
                        for p in perms {
                            assert!(
                                (p - perms[0]).abs() < 1e-10,
                                "{shape:?} codazzi violation at [{k}][{i}][{j}]"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn uniform_arclength_sampling_on_ellipse() {
        let el = AnalyticShape::Ellipse { a: 2.0, b: 1.0 };
        let g = el.discretize(256, 0).unwrap();
        let (min, max) = g.spacing_range();
        assert!(max / min < 1.001, "spacing ratio {}", max / min);
        assert!((g.enclosed_measure() - 2.0 * PI).abs() / (2.0 * PI) < 1e-4);
    }

    #[test]
    fn exact_fields_match_discrete_fields_on_sphere() {
        let sp = AnalyticShape::Sphere { radius: 1.0 };
        let params = sp.sample_params(128);
        let f = sp.exact_fields(&params);
        for (i, h) in f.mean.iter().enumerate() {
            assert!((h - 2.0).abs() < 1e-12, "H[{i}] = {h}");
        }
        assert!(f.grad_mean.iter().all(|g| g.abs() < 1e-10));
        assert!(f.laplace_mean.iter().all(|l| l.abs() < 1e-9));
    }
}
