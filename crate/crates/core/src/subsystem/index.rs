use std::collections::HashSet;

use super::{automizer_residual, elements_by_order, hyperfocal_subgroup, normality_report, same_maps};
use crate::error::{FuseError, Result};
use crate::fusion::{AutoClosure, FusionSystem};
use crate::group::{GroupMap, Subgroup};

/// The subsystem of p-power index over `U`, for `hyp(F) ≤ U ≤ S`: the
/// closure of `Inn(U)` and `O^p(Aut_F(P))` for all `P ≤ U`.
pub fn p_power_index_subsystem(f: &FusionSystem, u: &Subgroup) -> Result<FusionSystem> {
    let s = f.sylow();
    if !u.is_subgroup_of(s) {
        return Err(FuseError::Precondition("U is not contained in S".into()));
    }
    let hyp = hyperfocal_subgroup(f);
    if !hyp.is_subgroup_of(u) {
        return Err(FuseError::Precondition("U does not contain the hyperfocal subgroup".into()));
    }
    let mut gens = Vec::new();
    for p in f.objects() {
        if !p.is_subgroup_of(u) {
            continue;
        }
        let autos = f.automizer(&p)?;
        gens.extend(elements_by_order(&autos, f.p(), false));
    }
    let sub = FusionSystem::close(f.ambient(), u, f.p(), &gens)?;
    let (sat, _) = sub.is_saturated(None);
    if !sat {
        return Err(FuseError::ConstructionUnverified(
            "subsystem of p-power index is not saturated".into(),
        ));
    }
    if f.group().is_normal_in(u, s) {
        let rep = normality_report(f, &sub);
        if !rep.is_normal() {
            return Err(FuseError::ConstructionUnverified(format!(
                "subsystem of p-power index is not normal: {:?}",
                rep.failures
            )));
        }
    }
    Ok(sub)
}

/// `O^p(F)`, the subsystem of p-power index over `hyp(F)`.
pub fn p_residual(f: &FusionSystem) -> Result<FusionSystem> {
    let hyp = hyperfocal_subgroup(f);
    p_power_index_subsystem(f, &hyp)
}

/// `O^{p'}(F)`: close the p-parts `O^{p'}(Aut_F(P))` to a system `E*`, add
/// the automorphisms of S that restrict into `E*` on some centric subgroup,
/// and verify the result.
pub fn p_prime_residual(f: &FusionSystem) -> Result<FusionSystem> {
    let s = f.sylow();
    let p = f.p();
    let mut gens = Vec::new();
    let mut residuals = Vec::new();
    for q in f.objects() {
        let autos = f.automizer(&q)?;
        let r = automizer_residual(&q, &autos, p, true)?;
        gens.extend(elements_by_order(&autos, p, true));
        residuals.push((q, r));
    }
    let star = FusionSystem::close(f.ambient(), s, p, &gens)?;

    let centric = f.centric_subgroups();
    let aut_s = f.automizer(s)?;
    let mut a0 = AutoClosure::new(s);
    for alpha in &aut_s {
        if centric.iter().any(|c| star.contains_map(&alpha.restrict(c).onto_image())) {
            a0.add(alpha)?;
        }
    }
    let (a0, _) = a0.finish();
    let mut all = star.generators();
    all.extend(a0.iter().cloned());
    let e = FusionSystem::close(f.ambient(), s, p, &all)?;

    let (sat, _) = e.is_saturated(None);
    if !sat {
        return Err(FuseError::ConstructionUnverified(
            "residual of index prime to p is not saturated".into(),
        ));
    }
    let rep = normality_report(f, &e);
    if !rep.is_normal() {
        return Err(FuseError::ConstructionUnverified(format!(
            "residual of index prime to p is not normal: {:?}",
            rep.failures
        )));
    }
    for (q, r) in &residuals {
        let have: HashSet<Vec<u32>> = e.automizer(q)?.iter().map(|m| m.table().to_vec()).collect();
        if !r.iter().all(|m| have.contains(m.table())) {
            return Err(FuseError::ConstructionUnverified(
                "an automizer misses the p-part of the ambient automizer".into(),
            ));
        }
    }
    let aut_e: Vec<GroupMap> = e.automizer(s)?;
    if !same_maps(&aut_e, &a0) {
        return Err(FuseError::ConstructionUnverified(
            "automizer of S differs from the generated group".into(),
        ));
    }
    Ok(e)
}
