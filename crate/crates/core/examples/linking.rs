//! The centric linking system of S4 at p = 2.

use fuselab::catalog::catalog_entry;
use fuselab::linking::{check_linking_axioms, linking_of_group};

pub fn run() -> fuselab::Result<()> {
    let g = catalog_entry("S4")?.build()?;
    let l = linking_of_group(&g, 2)?;
    for i in 0..l.object_count() {
        println!(
            "object of order {}: |Aut_L| = {}",
            l.objects()[i].order(),
            l.morphism_count(i, i)
        );
    }
    let report = check_linking_axioms(&l);
    println!("axioms hold: {} ({} triples checked)", report.passes(), report.associativity_triples);
    Ok(())
}

#[allow(dead_code)]
fn main() -> fuselab::Result<()> {
    run()
}
