//! Hyperfocal subgroup, the two residual subsystems and their limit for
//! S5 at p = 2, under two different step orders.

use fuselab::catalog::catalog_entry;
use fuselab::fusion::fusion_of_group;
use fuselab::subsystem::{
    hyperfocal_subgroup, p_prime_residual, p_residual, reduction_limit_gradual,
    reduction_limit_with_schedule, StepKind,
};

pub fn run() -> fuselab::Result<()> {
    let g = catalog_entry("S5")?.build()?;
    let f = fusion_of_group(&g, 2)?;
    println!("|hyp(F)| = {}", hyperfocal_subgroup(&f).order());
    println!("O^p(F) lives over a group of order {}", p_residual(&f)?.sylow().order());
    println!("O^p'(F) lives over a group of order {}", p_prime_residual(&f)?.sylow().order());
    for schedule in [
        [StepKind::PPowerIndex, StepKind::PPrimeIndex],
        [StepKind::PPrimeIndex, StepKind::PPowerIndex],
    ] {
        let (limit, chain) = reduction_limit_with_schedule(&f, &schedule)?;
        let steps: Vec<&str> = chain.steps.iter().map(|s| s.label()).collect();
        println!("{steps:?} -> limit over order {}", limit.sylow().order());
    }
    let (limit, chain) = reduction_limit_gradual(&f)?;
    let steps: Vec<&str> = chain.steps.iter().map(|s| s.label()).collect();
    println!("gradual {steps:?} -> limit over order {}", limit.sylow().order());
    Ok(())
}

#[allow(dead_code)]
fn main() -> fuselab::Result<()> {
    run()
}
