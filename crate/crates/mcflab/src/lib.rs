//! Numerical laboratory for mean curvature flow of embedded hypersurfaces.
//!
//! The crate evolves discretized plane curves and surfaces of revolution by
//! mean curvature flow and extracts inscribed-ball ("non-collapsing")
//! certificates from every snapshot: the largest `delta` such that each
//! boundary point admits a tangent interior ball of radius `delta / H`,
//! the exterior analogue, the enclosing-ball constant for convex bodies,
//! and the induced curvature pinching spectra. A verification module checks
//! the first, second, and time derivatives of the two-point function
//! underlying those certificates against finite differences on analytic
//! surfaces.
//!
//! Organization:
//! - [`geometry`]: discrete curves, axisymmetric surfaces, analytic shapes,
//!   curvature/normal fields, region queries, remeshing, plain-text I/O.
//! - [`flow`]: explicit mean curvature flow stepping, the auxiliary scalar
//!   field obeying `df/dt = lap f + |A|^2 f`, and trajectory orchestration.
//! - [`noncollapse`]: the two-point function, certificate extraction,
//!   pinching spectra, touching-ball checks, and trajectory certification.
//! - [`verify`]: finite-difference residuals for the derivative identities
//!   of the two-point function on analytic geometry.
//! - [`scenario`] / [`output`]: declarative run descriptions and on-disk
//!   artifacts (CSV series, snapshot records, SVG frames).

pub mod flow;
pub mod geometry;
pub mod noncollapse;
pub mod numerics;
pub mod output;
pub mod pipeline;
pub mod scenario;
pub mod verify;

pub use geometry::{AnalyticShape, AxisymmetricSurface, DiscreteCurve, Geometry, VertexFields};
pub use flow::{FlowState, Trajectory};

