//! Quotients by strongly closed subgroups, compared with the fusion system
//! of the outer automizer.

use fuselab::catalog::catalog_entry;
use fuselab::fusion::fusion_of_group;
use fuselab::subsystem::{outer_automizer_model, quotient_system};

pub fn run() -> fuselab::Result<()> {
    let g = catalog_entry("S4")?.build()?;
    let f = fusion_of_group(&g, 2)?;
    for t in f.strongly_closed_subgroups() {
        let q = quotient_system(&f, &t)?;
        let model = outer_automizer_model(&f, &t)?;
        println!(
            "|T| = {}: F/T over order {}, |Out_F(T)| = {}, matches outer model: {}",
            t.order(),
            q.system.sylow().order(),
            model.out_group.order(),
            model.isomorphic
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fuselab::Result<()> {
    run()
}
