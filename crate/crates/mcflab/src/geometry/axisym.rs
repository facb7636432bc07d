//! Surfaces of revolution about the z axis, stored as a meridian profile in
//! the (r, z) half-plane.
//!
//! Sphere-type profiles are open polylines running from the south pole to
//! the north pole with both endpoints exactly on the axis; torus-type
//! profiles are closed polygons with r > 0 everywhere. In both cases the
//! profile is oriented so that the outward surface normal in the meridian
//! plane is the clockwise rotation of the profile tangent (for sphere-type
//! this means z increases along the profile; for torus-type the profile is
//! counterclockwise).

use nalgebra::{Vector2, Vector3};

use super::{cross2, curve::point_segment_distance, segments_intersect, GeometryError};

pub const MIN_PROFILE_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileKind {
    SphereType,
    TorusType,
}

#[derive(Clone, Debug)]
pub struct AxisymmetricSurface {
    profile: Vec<Vector2<f64>>, // (r, z)
    kind: ProfileKind,
    azimuthal_samples: usize,
}

impl AxisymmetricSurface {
    pub fn new(
        profile: Vec<Vector2<f64>>,
        kind: ProfileKind,
        azimuthal_samples: usize,
    ) -> Result<Self, GeometryError> {
        let s = AxisymmetricSurface { profile, kind, azimuthal_samples };
        s.validate()?;
        Ok(s)
    }

    pub fn from_profile_unchecked(
        profile: Vec<Vector2<f64>>,
        kind: ProfileKind,
        azimuthal_samples: usize,
    ) -> Self {
        AxisymmetricSurface { profile, kind, azimuthal_samples }
    }

    pub fn profile(&self) -> &[Vector2<f64>] {
        &self.profile
    }

    pub fn profile_mut(&mut self) -> &mut [Vector2<f64>] {
        &mut self.profile
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    pub fn azimuthal_samples(&self) -> usize {
        self.azimuthal_samples
    }

    pub fn is_closed(&self) -> bool {
        self.kind == ProfileKind::TorusType
    }

    /// Edge lengths along the profile (n for torus-type, n-1 for sphere-type).
    pub fn edge_lengths(&self) -> Vec<f64> {
        let n = self.profile.len();
        let count = if self.is_closed() { n } else { n - 1 };
        (0..count)
            .map(|i| (self.profile[(i + 1) % n] - self.profile[i]).norm())
            .collect()
    }

    pub fn profile_length(&self) -> f64 {
        self.edge_lengths().iter().sum()
    }

    pub fn mean_spacing(&self) -> f64 {
        let e = self.edge_lengths();
        e.iter().sum::<f64>() / e.len() as f64
    }

    /// Volume of the enclosed solid: `pi * closed-contour-integral of r^2 dz`.
    pub fn enclosed_volume(&self) -> f64 {
        let n = self.profile.len();
        let count = if self.is_closed() { n } else { n - 1 };
        let mut acc = 0.0;
        for i in 0..count {
            let p = self.profile[i];
            let q = self.profile[(i + 1) % n];
            acc += (q.y - p.y) * (p.x * p.x + p.x * q.x + q.x * q.x) / 3.0;
        }
        // the axis closure of a sphere-type profile contributes nothing
        std::f64::consts::PI * acc
    }

    /// Lateral surface area: `2 pi * integral of r ds` along the profile.
    pub fn surface_area(&self) -> f64 {
        let n = self.profile.len();
        let count = if self.is_closed() { n } else { n - 1 };
        let mut acc = 0.0;
        for i in 0..count {
            let p = self.profile[i];
            let q = self.profile[(i + 1) % n];
            acc += 0.5 * (p.x + q.x) * (q - p).norm();
        }
        std::f64::consts::TAU * acc
    }

    pub fn self_intersection(&self) -> Option<(usize, usize)> {
        let n = self.profile.len();
        let count = if self.is_closed() { n } else { n - 1 };
        for i in 0..count {
            let a = self.profile[i];
            let b = self.profile[(i + 1) % n];
            for j in i + 2..count {
                if self.is_closed() && i == 0 && j == n - 1 {
                    continue;
                }
                let c = self.profile[j];
                let d = self.profile[(j + 1) % n];
                if segments_intersect(a, b, c, d) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        let n = self.profile.len();
        if n < MIN_PROFILE_VERTICES {
            return Err(GeometryError::TooFewVertices {
                min: MIN_PROFILE_VERTICES,
                got: n,
            });
        }
        if self.azimuthal_samples < 3 {
            return Err(GeometryError::BadParameter(
                "azimuthal sample count must be at least 3".into(),
            ));
        }
        let lengths = self.edge_lengths();
        let mean = lengths.iter().sum::<f64>() / lengths.len() as f64;
        for (i, l) in lengths.iter().enumerate() {
            if *l == 0.0 {
                return Err(GeometryError::DegenerateSpacing(i));
            }
            let ratio = l / mean;
            if !(0.2..=5.0).contains(&ratio) {
                return Err(GeometryError::SpacingOutOfRange { index: i, ratio });
            }
        }
        match self.kind {
            ProfileKind::SphereType => {
                for (idx, end) in [(0usize, 0usize), (n - 1, 1)] {
                    if self.profile[idx].x != 0.0 {
                        return Err(GeometryError::EndpointOffAxis(end));
                    }
                }
                for (i, p) in self.profile.iter().enumerate().skip(1).take(n - 2) {
                    if p.x <= 0.0 {
                        return Err(GeometryError::NonPositiveRadius(i));
                    }
                }
                if self.profile[n - 1].y <= self.profile[0].y {
                    return Err(GeometryError::NegativeOrientation(
                        self.profile[n - 1].y - self.profile[0].y,
                    ));
                }
                // orthogonal axis meeting: the first/last segments should be
                // dominated by their radial component
                let first = self.profile[1] - self.profile[0];
                let last = self.profile[n - 1] - self.profile[n - 2];
                if first.y.abs() > 0.75 * first.x.abs() {
                    return Err(GeometryError::ObliqueAxisMeeting(0));
                }
                if last.y.abs() > 0.75 * last.x.abs() {
                    return Err(GeometryError::ObliqueAxisMeeting(1));
                }
            }
            ProfileKind::TorusType => {
                for (i, p) in self.profile.iter().enumerate() {
                    if p.x <= 0.0 {
                        return Err(GeometryError::NonPositiveRadius(i));
                    }
                }
                let mut area = 0.0;
                for i in 0..n {
                    area += cross2(self.profile[i], self.profile[(i + 1) % n]);
                }
                if area <= 0.0 {
                    return Err(GeometryError::NegativeOrientation(0.5 * area));
                }
            }
        }
        if let Some((i, j)) = self.self_intersection() {
            return Err(GeometryError::SelfIntersecting(i, j));
        }
        Ok(())
    }

    /// Is the meridian point `(r, z)` inside the solid's cross-section?
    /// For sphere-type profiles the cross-section is closed by the axis
    /// segment; for torus-type it is the profile polygon itself.
    pub fn meridian_contains(&self, q: Vector2<f64>) -> bool {
        let n = self.profile.len();
        let mut w = 0i32;
        let count = if self.is_closed() { n } else { n - 1 };
        let mut cross_edge = |a: Vector2<f64>, b: Vector2<f64>| {
            if a.y <= q.y {
                if b.y > q.y && cross2(b - a, q - a) > 0.0 {
                    w += 1;
                }
            } else if b.y <= q.y && cross2(b - a, q - a) < 0.0 {
                w -= 1;
            }
        };
        for i in 0..count {
            cross_edge(self.profile[i], self.profile[(i + 1) % n]);
        }
        if !self.is_closed() {
            // close north pole -> south pole down the axis
            cross_edge(self.profile[n - 1], self.profile[0]);
        }
        w != 0
    }

    /// Distance from the meridian point `(r, z)` to the profile polyline.
    /// This equals the 3D distance from the corresponding space point to the
    /// surface of revolution.
    pub fn meridian_distance_to_profile(&self, q: Vector2<f64>) -> f64 {
        let n = self.profile.len();
        let count = if self.is_closed() { n } else { n - 1 };
        let mut best = f64::INFINITY;
        for i in 0..count {
            let d = point_segment_distance(q, self.profile[i], self.profile[(i + 1) % n]);
            if d < best {
                best = d;
            }
        }
        best
    }

    /// Reduce a space point to meridian coordinates `(r, z)`.
    pub fn meridian_coordinates(p: Vector3<f64>) -> Vector2<f64> {
        Vector2::new(p.x.hypot(p.y), p.z)
    }
}
