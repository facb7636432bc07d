//! Closed polygonal curves in the plane.

use nalgebra::Vector2;

use super::{cross2, segments_intersect, GeometryError};

pub const MIN_VERTICES: usize = 8;

/// A simple closed polygon, positively oriented (counterclockwise), so the
/// outward normal is the clockwise rotation of the unit tangent.
#[derive(Clone, Debug)]
pub struct DiscreteCurve {
    vertices: Vec<Vector2<f64>>,
}

impl DiscreteCurve {
    pub fn new(vertices: Vec<Vector2<f64>>) -> Result<Self, GeometryError> {
        let c = DiscreteCurve { vertices };
        c.validate()?;
        Ok(c)
    }

    /// Construct without invariant checks; used by the flow stepper, which
    /// validates at snapshot cadence.
    pub fn from_vertices_unchecked(vertices: Vec<Vector2<f64>>) -> Self {
        DiscreteCurve { vertices }
    }

    pub fn vertices(&self) -> &[Vector2<f64>] {
        &self.vertices
    }

    pub fn vertices_mut(&mut self) -> &mut [Vector2<f64>] {
        &mut self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_lengths(&self) -> Vec<f64> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| (self.vertices[(i + 1) % n] - self.vertices[i]).norm())
            .collect()
    }

    pub fn length(&self) -> f64 {
        self.edge_lengths().iter().sum()
    }

    pub fn mean_spacing(&self) -> f64 {
        self.length() / self.vertices.len() as f64
    }

    /// Shoelace area; positive for counterclockwise orientation.
    pub fn signed_area(&self) -> f64 {
        let n = self.vertices.len();
        let mut acc = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            acc += cross2(p, q);
        }
        0.5 * acc
    }

    pub fn centroid(&self) -> Vector2<f64> {
        // area centroid of the enclosed region
        let n = self.vertices.len();
        let mut acc = Vector2::zeros();
        let mut area = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let w = cross2(p, q);
            acc += (p + q) * w;
            area += w;
        }
        acc / (3.0 * area)
    }

    /// First pair of properly intersecting non-adjacent segments.
    pub fn self_intersection(&self) -> Option<(usize, usize)> {
        let n = self.vertices.len();
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue; // adjacent through the wrap
                }
                let c = self.vertices[j];
                let d = self.vertices[(j + 1) % n];
                if segments_intersect(a, b, c, d) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        let n = self.vertices.len();
        if n < MIN_VERTICES {
            return Err(GeometryError::TooFewVertices { min: MIN_VERTICES, got: n });
        }
        let lengths = self.edge_lengths();
        let mean = lengths.iter().sum::<f64>() / n as f64;
        for (i, l) in lengths.iter().enumerate() {
            if *l == 0.0 {
                return Err(GeometryError::DegenerateSpacing(i));
            }
            let ratio = l / mean;
            if !(0.2..=5.0).contains(&ratio) {
                return Err(GeometryError::SpacingOutOfRange { index: i, ratio });
            }
        }
        let area = self.signed_area();
        if area <= 0.0 {
            return Err(GeometryError::NegativeOrientation(area));
        }
        if let Some((i, j)) = self.self_intersection() {
            return Err(GeometryError::SelfIntersecting(i, j));
        }
        Ok(())
    }

    /// Winding number of the curve around `p` (1 inside a CCW simple curve).
    pub fn winding_number(&self, p: Vector2<f64>) -> i32 {
        let n = self.vertices.len();
        let mut w = 0i32;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if a.y <= p.y {
                if b.y > p.y && cross2(b - a, p - a) > 0.0 {
                    w += 1;
                }
            } else if b.y <= p.y && cross2(b - a, p - a) < 0.0 {
                w -= 1;
            }
        }
        w
    }

    pub fn contains(&self, p: Vector2<f64>) -> bool {
        self.winding_number(p) != 0
    }

    /// Distance from `p` to the polygon (minimum over segments).
    pub fn distance_to_boundary(&self, p: Vector2<f64>) -> f64 {
        let n = self.vertices.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            let d = point_segment_distance(p, self.vertices[i], self.vertices[(i + 1) % n]);
            if d < best {
                best = d;
            }
        }
        best
    }
}

pub(crate) fn point_segment_distance(
    p: Vector2<f64>,
    a: Vector2<f64>,
    b: Vector2<f64>,
) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(&ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    fn circle(n: usize, r: f64) -> DiscreteCurve {
        DiscreteCurve::new(
            (0..n)
                .map(|i| {
                    let t = TAU * i as f64 / n as f64;
                    Vector2::new(r * t.cos(), r * t.sin())
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn circle_area_and_length_converge() {
        let c = circle(512, 1.0);
        assert!((c.signed_area() - std::f64::consts::PI).abs() < 1e-3);
        assert!((c.length() - TAU).abs() < 1e-3);
    }

    #[test]
    fn winding_classifies_inside_and_outside() {
        let c = circle(64, 1.0);
        assert!(c.contains(Vector2::new(0.0, 0.0)));
        assert!(c.contains(Vector2::new(0.5, 0.3)));
        assert!(!c.contains(Vector2::new(2.0, 0.0)));
        assert!(!c.contains(Vector2::new(-1.5, 1.5)));
    }

    #[test]
    fn clockwise_polygon_is_rejected() {
        let mut v: Vec<Vector2<f64>> = (0..32)
            .map(|i| {
                let t = TAU * i as f64 / 32.0;
                Vector2::new(t.cos(), t.sin())
            })
            .collect();
        v.reverse();
        assert!(matches!(
            DiscreteCurve::new(v),
            Err(GeometryError::NegativeOrientation(_))
        ));
    }

    #[test]
    fn self_crossing_polygon_reports_offending_segments() {
        // the two vertical prongs cross the bottom edge
        let raw = [
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, -0.5),
            (0.5, -0.5),
            (0.5, 1.0),
            (0.0, 1.0),
        ];
        let v: Vec<Vector2<f64>> = raw.iter().map(|&(x, y)| Vector2::new(x, y)).collect();
        let c = DiscreteCurve::from_vertices_unchecked(v);
        let (i, j) = c.self_intersection().expect("crossing must be detected");
        assert_eq!(i, 0); // bottom edge is the first of each crossing pair
        assert!(j == 3 || j == 5, "prong segment, got {j}");
    }
}
