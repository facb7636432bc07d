//! Hypersurface representations and their differential-geometric fields.
//!
//! Two discrete representations are supported: closed plane curves
//! ([`DiscreteCurve`]) and surfaces of revolution described by a meridian
//! profile ([`AxisymmetricSurface`]). Both follow the same orientation
//! convention: the boundary is positively oriented (counterclockwise in its
//! plane) and the outward unit normal is the clockwise rotation of the unit
//! tangent. Analytic counterparts with exact derivatives live in
//! [`analytic`].

pub mod analytic;
pub mod axisym;
pub mod build;
pub mod curve;
pub mod fields;
pub mod region;
pub mod remesh;
pub mod textio;

pub use analytic::{AnalyticShape, LocalData, PointData};
pub use axisym::{AxisymmetricSurface, ProfileKind};
pub use build::ShapeDescriptor;
pub use curve::DiscreteCurve;
pub use fields::{compute_fields, VertexFields};

use nalgebra::Vector2;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("geometry needs at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("self-intersection between segments {0} and {1}")]
    SelfIntersecting(usize, usize),
    #[error("orientation must be positive (signed area/volume {0} <= 0)")]
    NegativeOrientation(f64),
    #[error("degenerate spacing at vertex {0}: consecutive vertices coincide")]
    DegenerateSpacing(usize),
    #[error("vertex spacing at index {index} is {ratio:.3}x the mean, outside [0.2, 5]")]
    SpacingOutOfRange { index: usize, ratio: f64 },
    #[error("sphere-type profile endpoint {0} must lie on the axis r = 0")]
    EndpointOffAxis(usize),
    #[error("sphere-type profile must meet the axis orthogonally at endpoint {0}")]
    ObliqueAxisMeeting(usize),
    #[error("profile radius must be positive away from the axis (vertex {0})")]
    NonPositiveRadius(usize),
    #[error("invalid shape parameter: {0}")]
    BadParameter(String),
}

/// 90 degree clockwise rotation; maps the unit tangent of a positively
/// oriented boundary to the outward unit normal.
#[inline]
pub fn outward_rotation(t: Vector2<f64>) -> Vector2<f64> {
    Vector2::new(t.y, -t.x)
}

#[inline]
pub fn cross2(a: Vector2<f64>, b: Vector2<f64>) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Proper segment intersection test (shared endpoints do not count).
pub(crate) fn segments_intersect(
    a: Vector2<f64>,
    b: Vector2<f64>,
    c: Vector2<f64>,
    d: Vector2<f64>,
) -> bool {
    let d1 = cross2(b - a, c - a);
    let d2 = cross2(b - a, d - a);
    let d3 = cross2(d - c, a - c);
    let d4 = cross2(d - c, b - c);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    false
}

/// A discretized hypersurface: a curve in the plane or a surface of
/// revolution about the z axis.
#[derive(Clone, Debug)]
pub enum Geometry {
    Curve(DiscreteCurve),
    Axisym(AxisymmetricSurface),
}

impl Geometry {
    /// Manifold dimension: 1 for curves, 2 for surfaces.
    pub fn dim(&self) -> usize {
        match self {
            Geometry::Curve(_) => 1,
            Geometry::Axisym(_) => 2,
        }
    }

    /// Number of stored (curve or profile) vertices.
    pub fn vertex_count(&self) -> usize {
        match self {
            Geometry::Curve(c) => c.vertices().len(),
            Geometry::Axisym(s) => s.profile().len(),
        }
    }

    /// Enclosed area (curves) or volume (surfaces).
    pub fn enclosed_measure(&self) -> f64 {
        match self {
            Geometry::Curve(c) => c.signed_area(),
            Geometry::Axisym(s) => s.enclosed_volume(),
        }
    }

    /// Boundary length (curves) or meridian profile length (surfaces).
    pub fn profile_length(&self) -> f64 {
        match self {
            Geometry::Curve(c) => c.length(),
            Geometry::Axisym(s) => s.profile_length(),
        }
    }

    /// Surface area of the hypersurface itself (length for curves).
    pub fn boundary_measure(&self) -> f64 {
        match self {
            Geometry::Curve(c) => c.length(),
            Geometry::Axisym(s) => s.surface_area(),
        }
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        match self {
            Geometry::Curve(c) => c.validate(),
            Geometry::Axisym(s) => s.validate(),
        }
    }

    /// First self-intersecting segment pair, if any.
    pub fn self_intersection(&self) -> Option<(usize, usize)> {
        match self {
            Geometry::Curve(c) => c.self_intersection(),
            Geometry::Axisym(s) => s.self_intersection(),
        }
    }

    /// Minimum and maximum consecutive-vertex spacing.
    pub fn spacing_range(&self) -> (f64, f64) {
        let spans: Vec<f64> = match self {
            Geometry::Curve(c) => c.edge_lengths(),
            Geometry::Axisym(s) => s.edge_lengths(),
        };
        let min = spans.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = spans.iter().cloned().fold(0.0, f64::max);
        (min, max)
    }
}
