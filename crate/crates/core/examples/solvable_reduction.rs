//! The subsystem of A5 inside the 2-fusion system of S5: normality, the
//! descending chain to it, and equality of limits.

use fuselab::selftest::group_pair;
use fuselab::subsystem::{normality_report, solvable_reduction_chain, verify_solvable_reduction};

pub fn run() -> fuselab::Result<()> {
    let (f, e) = group_pair("S5", "(1 2 3),(1 2)(3 4),(2 3)(4 5)", 2)?;
    println!("E normal in F: {}", normality_report(&f, &e).is_normal());
    let chain = solvable_reduction_chain(&f, &e)?;
    println!("chain Sylow orders: {:?}", chain.sylow_orders());
    let report = verify_solvable_reduction(&f, &e)?;
    println!("limits agree: {}", report.holds());
    Ok(())
}

#[allow(dead_code)]
fn main() -> fuselab::Result<()> {
    run()
}
