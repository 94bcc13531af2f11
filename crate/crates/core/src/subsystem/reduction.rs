use super::normality::is_normal_subgroup_of_system;
use super::{
    centralizer_subsystem, hyperfocal_subgroup, p_power_index_subsystem, p_prime_residual,
    p_residual, quotient_system, StepKind, SubsystemChain,
};
use crate::error::{FuseError, Result};
use crate::fusion::FusionSystem;
use crate::group::Subgroup;

const MAX_ROUNDS: usize = 64;

/// `O_p(F)`: the largest subgroup normal in F, found by scanning the normal
/// subgroups of S from the top and verified to contain all the others.
pub fn normal_p_core(f: &FusionSystem) -> Result<Subgroup> {
    let g = f.group();
    let s = f.sylow();
    let mut candidates: Vec<Subgroup> = f
        .objects()
        .into_iter()
        .filter(|q| g.is_normal_in(q, s))
        .collect();
    candidates.reverse();
    let good: Vec<Subgroup> = candidates
        .into_iter()
        .filter(|q| is_normal_subgroup_of_system(f, q))
        .collect();
    let top = good.first().cloned().unwrap_or_else(|| g.trivial());
    if !good.iter().all(|q| q.is_subgroup_of(&top)) {
        return Err(FuseError::UniquenessViolation(
            "normal subgroups of the system have no largest member".into(),
        ));
    }
    Ok(top)
}

fn apply(f: &FusionSystem, kind: StepKind) -> Result<FusionSystem> {
    match kind {
        StepKind::PPowerIndex => p_residual(f),
        StepKind::PPrimeIndex => p_prime_residual(f),
    }
}

/// Applies the steps of `schedule` cyclically until a full pass changes
/// nothing. The chain records every step that changed the system.
pub fn reduction_limit_with_schedule(
    f: &FusionSystem,
    schedule: &[StepKind],
) -> Result<(FusionSystem, SubsystemChain)> {
    if schedule.is_empty() {
        return Err(FuseError::Precondition("empty schedule".into()));
    }
    let mut chain = SubsystemChain::start(f.clone());
    for _ in 0..MAX_ROUNDS {
        let mut changed = false;
        for &kind in schedule {
            let next = apply(chain.last(), kind)?;
            if !next.fusion_equals(chain.last()) {
                chain.push(kind, next);
                changed = true;
            }
        }
        if !changed {
            return Ok((chain.last().clone(), chain));
        }
    }
    Err(FuseError::ConstructionUnverified(format!(
        "reduction did not stabilize after {MAX_ROUNDS} rounds"
    )))
}

/// `F^∞`: alternate `O^p` and `O^{p'}` until stable.
pub fn reduction_limit(f: &FusionSystem) -> Result<(FusionSystem, SubsystemChain)> {
    reduction_limit_with_schedule(f, &[StepKind::PPowerIndex, StepKind::PPrimeIndex])
}

/// Reaches the same limit as [`reduction_limit`] with smaller steps: each
/// p-power step passes to the subsystem over the first maximal subgroup of
/// S containing `hyp(F)`, instead of straight to `O^p(F)`.
pub fn reduction_limit_gradual(f: &FusionSystem) -> Result<(FusionSystem, SubsystemChain)> {
    let mut chain = SubsystemChain::start(f.clone());
    for _ in 0..MAX_ROUNDS * 8 {
        let cur = chain.last().clone();
        let next = p_prime_residual(&cur)?;
        if !next.fusion_equals(&cur) {
            chain.push(StepKind::PPrimeIndex, next);
            continue;
        }
        let hyp = hyperfocal_subgroup(&cur);
        let s = cur.sylow();
        if hyp == *s {
            return Ok((cur, chain));
        }
        let p = cur.p();
        let u = cur
            .objects()
            .into_iter()
            .find(|u| u.order() * p == s.order() && hyp.is_subgroup_of(u))
            .expect("a proper subgroup containing hyp lies in a maximal one");
        let next = p_power_index_subsystem(&cur, &u)?;
        chain.push(StepKind::PPowerIndex, next);
    }
    Err(FuseError::ConstructionUnverified(
        "gradual reduction did not stabilize".into(),
    ))
}

/// `red(F)`: the limit of `C_F(Q)/Z(Q)` for `Q = O_p(F)`, checked to be
/// reduced.
pub fn reduction(f: &FusionSystem) -> Result<FusionSystem> {
    let g = f.group();
    let q = normal_p_core(f)?;
    let c = centralizer_subsystem(f, &q)?;
    let z = g.center(&q);
    let base = if z.is_trivial() {
        c
    } else {
        quotient_system(&c, &z)?.system
    };
    let (red, _) = reduction_limit(&base)?;
    let core = normal_p_core(&red)?;
    let reduced = core.is_trivial()
        && p_residual(&red)?.fusion_equals(&red)
        && p_prime_residual(&red)?.fusion_equals(&red);
    if !reduced {
        return Err(FuseError::ConstructionUnverified("reduction is not reduced".into()));
    }
    Ok(red)
}
