use std::collections::HashSet;

use super::{automizer_residual, elements_by_order};
use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::fusion::FusionSystem;
use crate::group::{GroupMap, Subgroup};

/// `⟨[O^p(Aut_F(P)), P] : P ≤ S⟩`. Since `[αβ, x] = [α, β(x)]·[β, x]`, the
/// commutators of the p'-elements of each automizer already generate it.
pub fn hyperfocal_subgroup(f: &FusionSystem) -> Subgroup {
    let g = f.group();
    let mut seeds = ElementSet::empty(g.order());
    for p in f.objects() {
        let autos = f.automizer(&p).expect("object");
        for a in elements_by_order(&autos, f.p(), false) {
            for x in p.iter() {
                seeds.insert(g.mul(a.apply(x), g.inv(x)));
            }
        }
    }
    g.generate_subgroup(&seeds.to_vec())
}

/// `{x ∈ S : c_x|_T ∈ O^p(Aut_F(T))·Inn(T)}` for a subgroup `T` normal in S.
pub fn focal_bound(f: &FusionSystem, t: &Subgroup) -> Result<Subgroup> {
    let g = f.group();
    let s = f.sylow();
    if !g.is_normal_in(t, s) {
        return Err(FuseError::NotNormal("subgroup is not normal in the Sylow object".into()));
    }
    let autos = f.automizer(t)?;
    let residual = automizer_residual(t, &autos, f.p(), false)?;
    let inner: Vec<GroupMap> = {
        let mut v: Vec<GroupMap> = t.iter().map(|x| GroupMap::conjugation(g, x, t, t)).collect();
        v.sort();
        v.dedup();
        v
    };
    let mut product: HashSet<Vec<u32>> = HashSet::new();
    for a in &residual {
        for i in &inner {
            product.insert(a.compose(i).table().to_vec());
        }
    }
    let members = s
        .iter()
        .filter(|&x| product.contains(GroupMap::conjugation(g, x, t, t).table()));
    Ok(Subgroup::from_set(ElementSet::from_indices(g.order(), members)))
}
