use mcflab::flow::*;
use mcflab::geometry::build::{build, ShapeDescriptor};

fn main() {
    let g = build(&ShapeDescriptor::Circle { radius: 1.0 }, 128, 0).unwrap();
    let state = FlowState::new(g).unwrap();
    let opts = EvolveOptions {
        step: StepOptions { c_stab: 0.02, ..Default::default() },
        t_end: 0.3,
        cadence: 0.0,
        ..Default::default()
    };
    let traj = evolve(state, &opts).unwrap();
    let last = traj.snapshots.last().unwrap();
    println!("reason {:?}, t_final {}, steps {}", traj.reason, last.t, last.step);
    println!("area {}, minH {}, maxH {}", last.geometry.enclosed_measure(), last.fields.min_mean(), last.fields.max_mean());
    let (smin, smax) = last.geometry.spacing_range();
    println!("spacing {} {}", smin, smax);
}
