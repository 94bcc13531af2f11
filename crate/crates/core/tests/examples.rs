#[path = "../examples/alperin.rs"]
mod alperin;
#[path = "../examples/fusion_of_group.rs"]
mod fusion_of_group;
#[path = "../examples/linking.rs"]
mod linking;
#[path = "../examples/load_group.rs"]
mod load_group;
#[path = "../examples/quotient.rs"]
mod quotient;
#[path = "../examples/residuals.rs"]
mod residuals;
#[path = "../examples/saturation.rs"]
mod saturation;
#[path = "../examples/solvable_reduction.rs"]
mod solvable_reduction;

#[test]
fn alperin_runs() {
    alperin::run().unwrap();
}

#[test]
fn fusion_of_group_runs() {
    fusion_of_group::run().unwrap();
}

#[test]
fn linking_runs() {
    linking::run().unwrap();
}

#[test]
fn load_group_runs() {
    load_group::run().unwrap();
}

#[test]
fn quotient_runs() {
    quotient::run().unwrap();
}

#[test]
fn residuals_runs() {
    residuals::run().unwrap();
}

#[test]
fn saturation_runs() {
    saturation::run().unwrap();
}

#[test]
fn solvable_reduction_runs() {
    solvable_reduction::run().unwrap();
}
