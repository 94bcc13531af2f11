//! Realize the 2-fusion system of S4 and classify the subgroups of its
//! Sylow subgroup.

use fuselab::catalog::catalog_entry;
use fuselab::fusion::SylowEmbedding;

pub fn run() -> fuselab::Result<()> {
    let g = catalog_entry("S4")?.build()?;
    let emb = SylowEmbedding::new(&g, 2)?;
    let f = emb.fusion_system()?;
    println!("|S| = {}, {} subgroups in {} classes", f.sylow().order(), f.object_count(), f.class_count());
    for rep in f.class_representatives() {
        let st = f.subgroup_status(&rep)?;
        let names: Vec<String> = rep.iter().map(|x| g.label(emb.parent_element(x))).collect();
        println!(
            "  order {:>2} |Aut_F| = {:<2} centric={:<5} radical={:<5} {:?}",
            rep.order(),
            f.automizer_order(&rep)?,
            st.centric,
            st.radical,
            names
        );
    }
    println!("saturated: {}", f.is_saturated(None).0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> fuselab::Result<()> {
    run()
}
