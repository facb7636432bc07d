use super::*;
use crate::geometry::build::{build, ShapeDescriptor};

fn circle_state(n: usize, r: f64) -> FlowState {
    FlowState::new(build(&ShapeDescriptor::Circle { radius: r }, n, 0).unwrap()).unwrap()
}

fn sphere_state(n: usize, m: usize, r: f64) -> FlowState {
    FlowState::new(build(&ShapeDescriptor::Sphere { radius: r }, n, m).unwrap()).unwrap()
}

fn curve_radius(state: &FlowState) -> f64 {
    (state.geometry.enclosed_measure() / std::f64::consts::PI).sqrt()
}

fn sphere_radius(state: &FlowState) -> f64 {
    (state.geometry.enclosed_measure() * 3.0 / (4.0 * std::f64::consts::PI)).cbrt()
}

#[test]
fn single_step_shrinks_circle_by_exact_rate() {
    let n = 256;
    let state = circle_state(n, 1.0);
    let h = state.geometry.profile_length() / n as f64;
    for &dt in &[1e-3, 5e-3, 2e-2] {
        let next = mcf_step(&state, dt, &StepOptions::default()).unwrap();
        let expected = (1.0 - 2.0 * dt).sqrt();
        let err = (curve_radius(&next) - expected).abs();
        assert!(err < 2.0 * (dt * dt + h * h), "dt={dt}: err {err}");
    }
}

#[test]
fn step_rejects_unstable_dt() {
    let state = circle_state(64, 1.0);
    // |A|^2 = 1, default cap 0.2
    match mcf_step(&state, 0.5, &StepOptions::default()) {
        Err(FlowError::UnstableTimeStep { max, .. }) => {
            assert!((max - 0.2).abs() < 1e-6)
        }
        other => panic!("expected stability error, got {other:?}"),
    }
}

#[test]
fn area_decreases_at_total_curvature_rate() {
    // dA/dt = -2 pi for any embedded closed curve
    for desc in [
        ShapeDescriptor::Circle { radius: 1.0 },
        ShapeDescriptor::Ellipse { a: 2.0, b: 1.0 },
    ] {
        let state = FlowState::new(build(&desc, 512, 0).unwrap()).unwrap();
        let dt = 1e-3;
        let h = state.geometry.profile_length() / 512.0;
        let next = mcf_step(&state, dt, &StepOptions::default()).unwrap();
        let da = next.geometry.enclosed_measure() - state.geometry.enclosed_measure();
        let defect = (da + 2.0 * std::f64::consts::PI * dt).abs();
        assert!(
            defect < 20.0 * dt * (dt + h * h),
            "{desc:?}: defect {defect}"
        );
    }
}

#[test]
fn circle_tracks_exact_solution() {
    let opts = EvolveOptions {
        step: StepOptions { c_stab: 2e-4, ..Default::default() },
        t_end: 0.45,
        cadence: 0.05,
        ..Default::default()
    };
    let traj = evolve(circle_state(1024, 1.0), &opts).unwrap();
    assert!(matches!(traj.reason, TerminationReason::TimeLimit));
    let last = traj.snapshots.last().unwrap();
    assert!((last.t - 0.45).abs() < 1e-9);
    let expected = 0.1_f64.sqrt();
    let rel = (curve_radius(last) - expected).abs() / expected;
    assert!(rel < 1e-3, "relative radius error {rel}");
}

#[test]
fn sphere_tracks_exact_solution() {
    // R(t) = sqrt(R0^2 - 4t), checked at t = 0.8 * R0^2 / 4
    let opts = EvolveOptions {
        step: StepOptions { c_stab: 3e-4, ..Default::default() },
        t_end: 0.2,
        cadence: 0.05,
        ..Default::default()
    };
    let traj = evolve(sphere_state(256, 16, 1.0), &opts).unwrap();
    let last = traj.snapshots.last().unwrap();
    let expected = (1.0_f64 - 4.0 * 0.2).sqrt();
    let rel = (sphere_radius(last) - expected).abs() / expected;
    assert!(rel < 1e-3, "relative radius error {rel}");
}

#[test]
fn zero_horizon_yields_single_snapshot() {
    let opts = EvolveOptions { t_end: 0.0, ..Default::default() };
    let traj = evolve(circle_state(64, 1.0), &opts).unwrap();
    assert_eq!(traj.snapshots.len(), 1);
    assert!(matches!(traj.reason, TerminationReason::TimeLimit));
}

#[test]
fn non_mean_convex_initial_data_rejected_without_field() {
    // three-petal star with concave waists
    let g = build(&ShapeDescriptor::FourierStar { harmonics: vec![(3, 0.3)] }, 256, 0).unwrap();
    let state = FlowState::new(g.clone()).unwrap();
    assert!(state.fields.min_mean() < 0.0, "test shape should be non-convex");
    match evolve(state, &EvolveOptions::default()) {
        Err(FlowError::NotMeanConvex { .. }) => {}
        other => panic!("expected mean-convexity rejection, got {:?}", other.map(|t| t.snapshots.len())),
    }
    // but the auxiliary field mode accepts it
    let n = g.vertex_count();
    let state = FlowState::with_field(g, vec![1.0; n]).unwrap();
    let opts = EvolveOptions { t_end: 1e-3, cadence: 0.0, ..Default::default() };
    let traj = evolve(state, &opts).unwrap();
    assert!(matches!(traj.reason, TerminationReason::TimeLimit));
}

#[test]
fn length_and_area_strictly_decrease() {
    let opts = EvolveOptions {
        step: StepOptions { c_stab: 0.05, ..Default::default() },
        t_end: 0.3,
        cadence: 0.03,
        ..Default::default()
    };
    let traj = evolve(
        FlowState::new(build(&ShapeDescriptor::Ellipse { a: 2.0, b: 1.0 }, 256, 0).unwrap())
            .unwrap(),
        &opts,
    )
    .unwrap();
    for w in traj.snapshots.windows(2) {
        assert!(w[1].geometry.profile_length() < w[0].geometry.profile_length());
        assert!(w[1].geometry.enclosed_measure() < w[0].geometry.enclosed_measure());
    }
    // surfaces: area decreases too
    let topts = EvolveOptions {
        step: StepOptions { c_stab: 0.05, ..Default::default() },
        t_end: 0.05,
        cadence: 0.01,
        ..Default::default()
    };
    let traj = evolve(
        FlowState::new(build(&ShapeDescriptor::Torus { major: 2.0, minor: 0.5 }, 128, 24).unwrap())
            .unwrap(),
        &topts,
    )
    .unwrap();
    for w in traj.snapshots.windows(2) {
        assert!(w[1].geometry.boundary_measure() < w[0].geometry.boundary_measure());
    }
}

#[test]
fn disjoint_concentric_circles_stay_disjoint() {
    let opts = EvolveOptions {
        step: StepOptions { c_stab: 0.01, ..Default::default() },
        t_end: 0.1,
        cadence: 0.01,
        ..Default::default()
    };
    let outer = evolve(circle_state(256, 1.0), &opts).unwrap();
    let inner = evolve(circle_state(256, 0.5), &opts).unwrap();
    for (a, b) in outer.snapshots.iter().zip(&inner.snapshots) {
        assert!((a.t - b.t).abs() < 1e-9);
        assert!(curve_radius(a) > curve_radius(b) + 1e-3);
    }
}

#[test]
fn trajectory_error_scales_with_dt_and_resolution() {
    let run = |c_stab: f64, n: usize| -> f64 {
        let opts = EvolveOptions {
            step: StepOptions { c_stab, ..Default::default() },
            t_end: 0.3,
            cadence: 0.0,
            ..Default::default()
        };
        let traj = evolve(circle_state(n, 1.0), &opts).unwrap();
        let last = traj.snapshots.last().unwrap();
        (curve_radius(last) - 0.4_f64.sqrt()).abs()
    };
    let coarse = run(0.02, 128);
    let fine = run(0.01, 256);
    assert!(
        coarse / fine > 1.8,
        "halving dt and doubling N should cut the error: {coarse} vs {fine}"
    );
}

#[test]
fn auxiliary_field_equal_to_mean_curvature_stays_locked() {
    // H itself solves df/dt = lap f + |A|^2 f under the flow
    let g = build(&ShapeDescriptor::Circle { radius: 1.0 }, 256, 0).unwrap();
    let base = FlowState::new(g.clone()).unwrap();
    let state = FlowState::with_field(g, base.fields.mean.clone()).unwrap();
    let opts = EvolveOptions {
        step: StepOptions { c_stab: 0.05, ..Default::default() },
        t_end: 0.2,
        cadence: 0.05,
        ..Default::default()
    };
    let traj = evolve(state, &opts).unwrap();
    for snap in &traj.snapshots {
        let f = snap.fields.f.as_ref().unwrap();
        let max_h = snap.fields.max_mean();
        let dev = f
            .iter()
            .zip(&snap.fields.mean)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(dev / max_h < 1e-2, "t={}: relative deviation {}", snap.t, dev / max_h);
    }
}

#[test]
fn constant_field_on_sphere_follows_scalar_ode() {
    let g = build(&ShapeDescriptor::Sphere { radius: 1.0 }, 128, 16).unwrap();
    let n = g.vertex_count();
    let state = FlowState::with_field(g, vec![0.7; n]).unwrap();
    let t_end = 0.15;
    let opts = EvolveOptions {
        step: StepOptions { c_stab: 0.01, ..Default::default() },
        t_end,
        cadence: 0.05,
        ..Default::default()
    };
    let traj = evolve(state, &opts).unwrap();
    // oracle: RK4 on f' = |A|^2 f with |A|^2 = 2 / (R0^2 - 4t)
    let mut f_ref = 0.7;
    let steps = 20_000;
    let dt = t_end / steps as f64;
    for k in 0..steps {
        let t = k as f64 * dt;
        let rhs = |t: f64, f: f64| 2.0 * f / (1.0 - 4.0 * t);
        let k1 = rhs(t, f_ref);
        let k2 = rhs(t + 0.5 * dt, f_ref + 0.5 * dt * k1);
        let k3 = rhs(t + 0.5 * dt, f_ref + 0.5 * dt * k2);
        let k4 = rhs(t + dt, f_ref + dt * k3);
        f_ref += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    let last = traj.snapshots.last().unwrap();
    let f = last.fields.f.as_ref().unwrap();
    let mean_f = f.iter().sum::<f64>() / f.len() as f64;
    let rel = (mean_f - f_ref).abs() / f_ref;
    assert!(rel < 1e-2, "auxiliary field {mean_f} vs ODE {f_ref} (rel {rel})");
}

#[test]
fn zero_field_is_rejected() {
    let g = build(&ShapeDescriptor::Circle { radius: 1.0 }, 64, 0).unwrap();
    let n = g.vertex_count();
    match FlowState::with_field(g, vec![0.0; n]) {
        Err(FlowError::NonPositiveField(_)) => {}
        other => panic!("expected positivity error, got {other:?}"),
    }
}

#[test]
fn field_positivity_is_preserved_under_stable_steps() {
    let g = build(&ShapeDescriptor::Ellipse { a: 2.0, b: 1.0 }, 128, 0).unwrap();
    let n = g.vertex_count();
    // strongly varying positive field
    let f: Vec<f64> = (0..n)
        .map(|i| 0.1 + (std::f64::consts::TAU * i as f64 / n as f64).sin().powi(2))
        .collect();
    let state = FlowState::with_field(g, f).unwrap();
    let opts = EvolveOptions {
        step: StepOptions { c_stab: 0.1, ..Default::default() },
        t_end: 0.05,
        cadence: 0.01,
        ..Default::default()
    };
    let traj = evolve(state, &opts).unwrap();
    assert!(matches!(traj.reason, TerminationReason::TimeLimit));
    for snap in &traj.snapshots {
        let min_f = snap.fields.f.as_ref().unwrap().iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(min_f > 0.0);
    }
}

#[test]
fn diffusion_cap_is_enforced() {
    let g = build(&ShapeDescriptor::Circle { radius: 1.0 }, 256, 0).unwrap();
    let n = g.vertex_count();
    let state = FlowState::with_field(g, vec![1.0; n]).unwrap();
    let h = state.geometry.profile_length() / n as f64;
    match f_step(&state, h * h, &StepOptions::default()) {
        Err(FlowError::UnstableDiffusionStep { .. }) => {}
        other => panic!("expected diffusion stability error, got {other:?}"),
    }
}
