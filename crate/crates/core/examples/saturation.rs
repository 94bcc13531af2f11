//! Saturation across the catalog, and a system that fails it.

use fuselab::fusion::StatusFailure;
use fuselab::selftest::{catalog_systems, single_iso_system};

pub fn run() -> fuselab::Result<()> {
    let systems = catalog_systems(Some(2))?;
    let saturated = systems.iter().filter(|c| c.system.is_saturated(None).0).count();
    println!("{saturated} of {} catalog systems at p = 2 are saturated", systems.len());

    let f = single_iso_system()?;
    let (ok, witness) = f.is_saturated(None);
    println!("one isomorphism over V4: saturated = {ok}");
    if let Some(w) = witness {
        for (member, reasons) in &w.members {
            let receptive = !reasons.iter().any(|r| matches!(r, StatusFailure::NotReceptive { .. }));
            println!("  member of order {} receptive = {receptive}", member.order());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> fuselab::Result<()> {
    run()
}
