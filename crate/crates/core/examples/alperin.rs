//! Factor morphisms of the 2-fusion system of A6 through automorphisms of
//! essential subgroups.

use fuselab::catalog::catalog_entry;
use fuselab::fusion::fusion_of_group;

pub fn run() -> fuselab::Result<()> {
    let g = catalog_entry("A6")?.build()?;
    let f = fusion_of_group(&g, 2)?;
    let reps = f.centric_radical_representatives()?;
    println!("centric radical classes: {:?}", reps.iter().map(|r| r.order()).collect::<Vec<_>>());
    let mut longest = 0;
    let mut count = 0;
    for p in f.objects() {
        for phi in f.hom_set(&p, f.sylow())? {
            let d = f.alperin_decompose(&phi)?;
            assert!(d.verify());
            longest = longest.max(d.steps.len());
            count += 1;
        }
    }
    println!("{count} morphisms decomposed, longest factorization has {longest} steps");
    Ok(())
}

#[allow(dead_code)]
fn main() -> fuselab::Result<()> {
    run()
}
