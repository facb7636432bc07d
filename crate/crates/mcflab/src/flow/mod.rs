//! Explicit mean curvature flow with optional auxiliary scalar field.
//!
//! Every vertex moves with velocity `-H nu` (outward normal `nu`). Time
//! steps are explicit Euler, capped by `c_stab / max |A|^2`; when a state
//! carries the auxiliary field `f` (which evolves by
//! `df/dt = lap f + |A|^2 f` and replaces H in certificates on
//! non-mean-convex data), the diffusion cap `c_diff * min_spacing^2` also
//! applies. Tangential remeshing after each step keeps stencils well
//! conditioned; it changes only the parametrization, not the image, up to
//! interpolation error.

use thiserror::Error;

use crate::geometry::{
    analytic::AnalyticShape, compute_fields, fields::scalar_laplacian, remesh, Geometry,
    GeometryError, VertexFields,
};

#[derive(Debug, Error)]
pub enum FlowError {
    #[error("time step {dt:.3e} exceeds the curvature stability cap; use dt <= {max:.3e}")]
    UnstableTimeStep { dt: f64, max: f64 },
    #[error("time step {dt:.3e} exceeds the diffusion stability cap; use dt <= {max:.3e}")]
    UnstableDiffusionStep { dt: f64, max: f64 },
    #[error("initial data is not mean-convex (min H = {min_h:.6} at vertex {index}); enable the auxiliary field to flow it anyway")]
    NotMeanConvex { min_h: f64, index: usize },
    #[error("auxiliary field must be strictly positive (min f = {0:.6})")]
    NonPositiveField(f64),
    #[error("state carries no auxiliary field")]
    MissingField,
    #[error("auxiliary field length {got} does not match vertex count {want}")]
    FieldLength { got: usize, want: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Which positive scalar the non-collapsing certificates divide by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateMode {
    MeanCurvature,
    AuxiliaryField,
}

/// One snapshot of the evolving hypersurface.
#[derive(Clone, Debug)]
pub struct FlowState {
    pub geometry: Geometry,
    pub fields: VertexFields,
    pub t: f64,
    pub step: u64,
    /// Whether this state was produced through a remesh (material vertex
    /// identity lost).
    pub remeshed: bool,
}

impl FlowState {
    pub fn new(geometry: Geometry) -> Result<Self, FlowError> {
        let fields = compute_fields(&geometry)?;
        Ok(FlowState { geometry, fields, t: 0.0, step: 0, remeshed: false })
    }

    /// Attach a strictly positive auxiliary field to a fresh state.
    pub fn with_field(geometry: Geometry, f: Vec<f64>) -> Result<Self, FlowError> {
        let mut state = FlowState::new(geometry)?;
        if f.len() != state.fields.len() {
            return Err(FlowError::FieldLength { got: f.len(), want: state.fields.len() });
        }
        let min = f.iter().cloned().fold(f64::INFINITY, f64::min);
        if !(min > 0.0) {
            return Err(FlowError::NonPositiveField(min));
        }
        state.fields.f = Some(f);
        Ok(state)
    }

    /// Discretize an analytic shape and fill the fields from its exact
    /// derivatives instead of difference stencils. Calibration-grade states
    /// for tests and identity checks.
    pub fn from_analytic(shape: &AnalyticShape, n: usize, m: usize) -> Result<Self, FlowError> {
        let geometry = shape.discretize(n, m)?;
        let params = shape.sample_params(n);
        let fields = shape.exact_fields(&params);
        Ok(FlowState { geometry, fields, t: 0.0, step: 0, remeshed: false })
    }

    pub fn mode(&self) -> CertificateMode {
        if self.fields.f.is_some() {
            CertificateMode::AuxiliaryField
        } else {
            CertificateMode::MeanCurvature
        }
    }

    /// Largest stable time step for this state under the given options.
    ///
    /// Besides the curvature-scale cap, the vertex motion itself is a
    /// discrete diffusion (velocity is a second difference of position at
    /// mesh scale), so the explicit scheme also needs the mesh CFL bound.
    /// The marginal bound is `0.5 h^2`; a 0.8 safety factor keeps Nyquist
    /// modes damped.
    pub fn dt_cap(&self, opts: &StepOptions) -> f64 {
        let cap = opts.c_stab / self.fields.max_norm_a_sq().max(1e-300);
        let (min_spacing, _) = self.geometry.spacing_range();
        cap.min(0.8 * opts.c_diffusion * min_spacing * min_spacing)
    }

    fn advect(&self, dt: f64) -> Geometry {
        let mut g = self.geometry.clone();
        match &mut g {
            Geometry::Curve(c) => {
                for (i, v) in c.vertices_mut().iter_mut().enumerate() {
                    *v -= self.fields.normal[i] * (self.fields.mean[i] * dt);
                }
            }
            Geometry::Axisym(s) => {
                let closed = s.is_closed();
                let n = s.profile().len();
                for (i, p) in s.profile_mut().iter_mut().enumerate() {
                    *p -= self.fields.normal[i] * (self.fields.mean[i] * dt);
                    // poles stay exactly on the axis (their normal is axial)
                    if !closed && (i == 0 || i == n - 1) {
                        p.x = 0.0;
                    }
                }
            }
        }
        g
    }
}

/// Per-step configuration.
#[derive(Clone, Copy, Debug)]
pub struct StepOptions {
    /// Curvature stability constant: `dt <= c_stab / max |A|^2`.
    pub c_stab: f64,
    /// Diffusion stability constant: `dt <= c_diff * min_spacing^2`.
    pub c_diffusion: f64,
    /// Tangential remesh (uniform arclength resample) after each step.
    pub remesh: bool,
}

impl Default for StepOptions {
    fn default() -> Self {
        StepOptions { c_stab: 0.2, c_diffusion: 0.5, remesh: true }
    }
}

/// One explicit mean curvature flow step; the auxiliary field, if present,
/// is transported but not advanced (see [`f_step`]).
pub fn mcf_step(state: &FlowState, dt: f64, opts: &StepOptions) -> Result<FlowState, FlowError> {
    let cap = opts.c_stab / state.fields.max_norm_a_sq().max(1e-300);
    if dt > cap * (1.0 + 1e-9) {
        return Err(FlowError::UnstableTimeStep { dt, max: cap });
    }
    finish_step(state, dt, opts, state.fields.f.clone())
}

/// Simultaneous mean curvature flow step and explicit Euler update of the
/// auxiliary field `f` by `df/dt = lap f + |A|^2 f`.
pub fn f_step(state: &FlowState, dt: f64, opts: &StepOptions) -> Result<FlowState, FlowError> {
    let f = state.fields.f.as_ref().ok_or(FlowError::MissingField)?;
    let min_f = f.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(min_f > 0.0) {
        return Err(FlowError::NonPositiveField(min_f));
    }
    let cap = opts.c_stab / state.fields.max_norm_a_sq().max(1e-300);
    if dt > cap * (1.0 + 1e-9) {
        return Err(FlowError::UnstableTimeStep { dt, max: cap });
    }
    let (min_spacing, _) = state.geometry.spacing_range();
    let diff_cap = opts.c_diffusion * min_spacing * min_spacing;
    if dt > diff_cap * (1.0 + 1e-9) {
        return Err(FlowError::UnstableDiffusionStep { dt, max: diff_cap });
    }
    let lap = scalar_laplacian(&state.geometry, f)?;
    let f_new: Vec<f64> = (0..f.len())
        .map(|i| f[i] + dt * (lap[i] + state.fields.norm_a_sq[i] * f[i]))
        .collect();
    finish_step(state, dt, opts, Some(f_new))
}

fn finish_step(
    state: &FlowState,
    dt: f64,
    opts: &StepOptions,
    f: Option<Vec<f64>>,
) -> Result<FlowState, FlowError> {
    let moved = state.advect(dt);
    let n = state.geometry.vertex_count();
    let (geometry, f, remeshed) = if opts.remesh {
        match &f {
            Some(values) => {
                let (g, mut carried) = remesh::resample(&moved, n, &[values])?;
                (g, Some(carried.remove(0)), true)
            }
            None => {
                let (g, _) = remesh::resample(&moved, n, &[])?;
                (g, None, true)
            }
        }
    } else {
        (moved, f, state.remeshed)
    };
    let mut fields = compute_fields(&geometry)?;
    fields.f = f;
    Ok(FlowState {
        geometry,
        fields,
        t: state.t + dt,
        step: state.step + 1,
        remeshed,
    })
}

#[derive(Clone, Debug)]
pub enum TerminationReason {
    TimeLimit,
    CurvatureBlowup,
    InvariantViolation(String),
}

/// Snapshots at the analysis cadence plus the final state.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub snapshots: Vec<FlowState>,
    pub reason: TerminationReason,
}

#[derive(Clone, Copy, Debug)]
pub struct EvolveOptions {
    pub step: StepOptions,
    pub t_end: f64,
    /// Terminate when `max H` exceeds this multiple of the initial `max H`.
    pub h_cap_factor: f64,
    /// Snapshot interval in flow time; `<= 0` keeps only initial and final.
    pub cadence: f64,
    pub max_steps: u64,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        EvolveOptions {
            step: StepOptions::default(),
            t_end: 0.1,
            h_cap_factor: 1e3,
            cadence: 0.01,
            max_steps: 10_000_000,
        }
    }
}

/// Evolve by mean curvature flow (with the auxiliary field when present),
/// collecting snapshots. Invariant violations terminate the run and are
/// reported in the trajectory rather than erroring, so partial runs remain
/// inspectable; non-mean-convex initial data without the auxiliary field is
/// rejected up front.
pub fn evolve(initial: FlowState, opts: &EvolveOptions) -> Result<Trajectory, FlowError> {
    if initial.mode() == CertificateMode::MeanCurvature {
        let min_h = initial.fields.min_mean();
        if !(min_h > 0.0) {
            let index = initial
                .fields
                .mean
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
                .map(|(i, _)| i)
                .unwrap_or(0);
            return Err(FlowError::NotMeanConvex { min_h, index });
        }
    }
    initial.geometry.validate()?;
    let h_blowup = opts.h_cap_factor * initial.fields.max_mean().max(1e-300);
    let mut snapshots = vec![initial.clone()];
    let mut state = initial;
    let mut next_snapshot = if opts.cadence > 0.0 { opts.cadence } else { f64::INFINITY };
    let eps = 1e-12 * (1.0 + opts.t_end.abs());

    let reason = loop {
        if state.t >= opts.t_end - eps {
            break TerminationReason::TimeLimit;
        }
        if state.fields.max_mean() >= h_blowup {
            break TerminationReason::CurvatureBlowup;
        }
        if state.step >= opts.max_steps {
            break TerminationReason::InvariantViolation(format!(
                "step budget {} exhausted",
                opts.max_steps
            ));
        }
        let cap = state.dt_cap(&opts.step);
        let horizon = opts.t_end.min(next_snapshot);
        let dt = cap.min(horizon - state.t).max(0.0);
        if dt <= 0.0 {
            break TerminationReason::InvariantViolation("time step collapsed to zero".into());
        }
        let stepped = if state.fields.f.is_some() {
            f_step(&state, dt, &opts.step)
        } else {
            mcf_step(&state, dt, &opts.step)
        };
        state = match stepped {
            Ok(s) => s,
            Err(e) => break TerminationReason::InvariantViolation(e.to_string()),
        };

        match state.mode() {
            CertificateMode::MeanCurvature => {
                let min_h = state.fields.min_mean();
                if !(min_h > 0.0) {
                    break TerminationReason::InvariantViolation(format!(
                        "mean-convexity lost (min H = {min_h:.6})"
                    ));
                }
            }
            CertificateMode::AuxiliaryField => {
                let min_f = state
                    .fields
                    .f
                    .as_ref()
                    .unwrap()
                    .iter()
                    .cloned()
                    .fold(f64::INFINITY, f64::min);
                if !(min_f > 0.0) {
                    break TerminationReason::InvariantViolation(format!(
                        "auxiliary field positivity lost (min f = {min_f:.6})"
                    ));
                }
            }
        }

        if state.t >= next_snapshot - eps {
            if let Some((i, j)) = state.geometry.self_intersection() {
                break TerminationReason::InvariantViolation(format!(
                    "self-intersection between segments {i} and {j}"
                ));
            }
            snapshots.push(state.clone());
            next_snapshot += opts.cadence;
        }
    };

    // always retain the terminal state
    if snapshots.last().map(|s| s.step) != Some(state.step) {
        snapshots.push(state);
    }
    Ok(Trajectory { snapshots, reason })
}

#[cfg(test)]
mod tests;
