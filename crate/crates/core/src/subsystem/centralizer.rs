use super::normality_report;
use crate::error::{FuseError, Result};
use crate::fusion::FusionSystem;
use crate::group::{GroupMap, Subgroup};

/// `C_F(P)` over `C_S(P)`: morphisms `φ: Q → R` that extend to some
/// `φ̃ ∈ Hom_F(QP, RP)` acting as the identity on `P`.
pub fn centralizer_subsystem(f: &FusionSystem, p: &Subgroup) -> Result<FusionSystem> {
    f.require(p)?;
    let g = f.group();
    let s = f.sylow();
    let cs = g.centralizer(s, p);
    let id_p = GroupMap::identity(p);
    let mut gens = Vec::new();
    for q in f.objects() {
        if !q.is_subgroup_of(&cs) {
            continue;
        }
        let qp = g.join(&q, p);
        for m in f.hom_set(&qp, s)? {
            if m.extends(&id_p) {
                gens.push(m.restrict(&q).onto_image());
            }
        }
    }
    let c = FusionSystem::close(f.ambient(), &cs, f.p(), &gens)?;
    if f.is_fully_centralized(p)? && !c.is_saturated(None).0 {
        return Err(FuseError::ConstructionUnverified(
            "centralizer of a fully centralized subgroup is not saturated".into(),
        ));
    }
    Ok(c)
}

/// Whether every morphism of `e` lies in `C_F(P)`, tested on generators.
pub fn centralizes(f: &FusionSystem, e: &FusionSystem, p: &Subgroup) -> bool {
    let g = f.group();
    let id_p = GroupMap::identity(p);
    let cs = g.centralizer(f.sylow(), p);
    if !e.sylow().is_subgroup_of(&cs) {
        return false;
    }
    e.generators().iter().all(|phi| {
        let qp = g.join(phi.domain(), p);
        f.hom_set(&qp, f.sylow())
            .map(|homs| homs.iter().any(|m| m.extends(phi) && m.extends(&id_p)))
            .unwrap_or(false)
    })
}

/// `C_S(E)`: the largest `P ≤ C_S(T)` with `E ≤ C_F(P)`, verified to contain
/// every other such subgroup.
pub fn centralizer_of_subsystem(f: &FusionSystem, e: &FusionSystem) -> Result<Subgroup> {
    let rep = normality_report(f, e);
    if !rep.is_normal() {
        return Err(FuseError::Precondition("subsystem is not normal".into()));
    }
    let g = f.group();
    let cst = g.centralizer(f.sylow(), e.sylow());
    let good: Vec<Subgroup> = f
        .objects()
        .into_iter()
        .filter(|p| p.is_subgroup_of(&cst) && centralizes(f, e, p))
        .collect();
    let top = good
        .iter()
        .max_by_key(|p| p.order())
        .cloned()
        .expect("the trivial subgroup always qualifies");
    if !good.iter().all(|p| p.is_subgroup_of(&top)) {
        return Err(FuseError::UniquenessViolation(
            "several maximal subgroups centralize the subsystem".into(),
        ));
    }
    Ok(top)
}
