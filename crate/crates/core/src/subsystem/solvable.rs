use super::{
    centralizer_of_subsystem, normality_report, p_power_index_subsystem, reduction_limit,
    same_maps, subsystem_from_aut_character, AutCharacter, StepKind, SubsystemChain,
};
use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::fusion::FusionSystem;
use crate::group::{is_power_of, GroupMap, MapGroup, Subgroup};

fn hypothesis(msg: impl Into<String>) -> FuseError {
    FuseError::HypothesisViolation(msg.into())
}

/// Checks `E ⊴ F` and `C_S(E) ≤ T`.
fn check_normal_pair(f: &FusionSystem, e: &FusionSystem) -> Result<()> {
    let rep = normality_report(f, e);
    if !rep.is_normal() {
        return Err(hypothesis(format!("E is not normal in F: {:?}", rep.failures)));
    }
    let c = centralizer_of_subsystem(f, e)?;
    if !c.is_subgroup_of(e.sylow()) {
        return Err(hypothesis("C_S(E) is not contained in T"));
    }
    Ok(())
}

/// `{x ∈ S : c_x|_T ∈ A}` for a set of automorphisms of `T`.
fn sylow_preimage(f: &FusionSystem, t: &Subgroup, autos: &[GroupMap]) -> Subgroup {
    let g = f.group();
    let keys: std::collections::HashSet<&[u32]> = autos.iter().map(|m| m.table()).collect();
    let members = f
        .sylow()
        .iter()
        .filter(|&x| keys.contains(GroupMap::conjugation(g, x, t, t).table()));
    Subgroup::from_set(ElementSet::from_indices(g.order(), members))
}

/// Descends from F to a normal subsystem with `Aut(T) = Aut_E(T)` along the
/// preimage of the alternating `O_p`/`O_{p'}` series of
/// `Aut_F(T)/Aut_E(T)`: p-factors are removed by subsystems of p-power
/// index, p'-factors by kernels of characters.
pub fn solvable_reduction_chain(f: &FusionSystem, e: &FusionSystem) -> Result<SubsystemChain> {
    check_normal_pair(f, e)?;
    let t = e.sylow().clone();
    let p = f.p();
    let aut_f = MapGroup::from_closed(f.automizer(&t)?)?;
    let aut_e = e.automizer(&t)?;
    let k = aut_f
        .subgroup_of(&aut_e)
        .ok_or_else(|| hypothesis("Aut_E(T) is not inside Aut_F(T)"))?;
    let q = aut_f.group.quotient_group(&k)?;
    let (solvable, series) = q.group.is_p_solvable(p);
    if !solvable {
        return Err(hypothesis("Aut_F(T)/Aut_E(T) is not p-solvable"));
    }
    // ascending preimages K = G_0 < G_1 < ... < G_k = Aut_F(T)
    let levels: Vec<Vec<GroupMap>> = series
        .iter()
        .map(|h| aut_f.maps_of(&q.preimage(&aut_f.group, h)))
        .collect();

    let mut chain = SubsystemChain::start(f.clone());
    for i in (1..levels.len()).rev() {
        let upper = &levels[i];
        let lower = &levels[i - 1];
        let cur = chain.last().clone();
        if !same_maps(&cur.automizer(&t)?, upper) {
            return Err(FuseError::ConstructionUnverified(
                "automizer of T drifted from the series".into(),
            ));
        }
        let factor = upper.len() / lower.len();
        let (kind, next) = if is_power_of(factor, p) {
            let u = sylow_preimage(f, &t, lower);
            (StepKind::PPowerIndex, p_power_index_subsystem(&cur, &u)?)
        } else if !factor.is_multiple_of(p) {
            let chi0 = AutCharacter::from_kernel(&cur, &t, lower)?;
            (StepKind::PPrimeIndex, subsystem_from_aut_character(&cur, e, &chi0)?)
        } else {
            return Err(FuseError::ConstructionUnverified("mixed series factor".into()));
        };
        let rep = normality_report(f, &next);
        if !rep.is_normal() {
            return Err(FuseError::ConstructionUnverified(format!(
                "chain member is not normal in F: {:?}",
                rep.failures
            )));
        }
        if !next.contains_system(e) {
            return Err(FuseError::ConstructionUnverified("chain member does not contain E".into()));
        }
        let expected = sylow_preimage(f, &t, lower);
        if next.sylow() != &expected {
            return Err(FuseError::ConstructionUnverified(
                "Sylow object of a chain member is not the preimage of its automizer".into(),
            ));
        }
        chain.push(kind, next);
    }
    if !same_maps(&chain.last().automizer(&t)?, &aut_e) {
        return Err(FuseError::ConstructionUnverified(
            "last chain member does not have Aut(T) = Aut_E(T)".into(),
        ));
    }
    Ok(chain)
}

/// Outcome of checking that `F^∞ = E^∞` for `E ⊴ F` with `C_S(E) ≤ T`.
#[derive(Clone, Debug)]
pub struct SolvReport {
    /// `Aut_F(T)/Aut_E(T)` is p-solvable.
    pub automizer_quotient_solvable: bool,
    /// `Out(T, E)` is p-solvable.
    pub outer_solvable: bool,
    pub f_limit: FusionSystem,
    pub e_limit: FusionSystem,
    pub limits_equal: bool,
    /// The chain down to `Aut(T) = Aut_E(T)`, when the quotient is p-solvable.
    pub chain: Option<SubsystemChain>,
    /// The limit of the chain's last member equals `F^∞`.
    pub chain_limit_equal: Option<bool>,
}

impl SolvReport {
    pub fn holds(&self) -> bool {
        self.limits_equal && self.chain_limit_equal != Some(false)
    }

    pub fn check(&self) -> Result<()> {
        if self.holds() {
            Ok(())
        } else {
            Err(FuseError::TheoremViolation("F^∞ and E^∞ differ".into()))
        }
    }
}

/// Verifies the hypotheses, computes both limits and cross-checks through
/// the solvable reduction chain.
pub fn verify_solvable_reduction(f: &FusionSystem, e: &FusionSystem) -> Result<SolvReport> {
    check_normal_pair(f, e)?;
    let t = e.sylow();
    let p = f.p();
    let aut_f = MapGroup::from_closed(f.automizer(t)?)?;
    let k = aut_f
        .subgroup_of(&e.automizer(t)?)
        .ok_or_else(|| hypothesis("Aut_E(T) is not inside Aut_F(T)"))?;
    let q = aut_f.group.quotient_group(&k)?;
    let automizer_quotient_solvable = q.group.is_p_solvable(p).0;
    let out = e.fusion_preserving_automorphisms()?;
    let outer_solvable = out.out.is_p_solvable(p).0;
    if !automizer_quotient_solvable && !outer_solvable {
        return Err(hypothesis("neither Aut_F(T)/Aut_E(T) nor Out(T,E) is p-solvable"));
    }
    let (f_limit, _) = reduction_limit(f)?;
    let (e_limit, _) = reduction_limit(e)?;
    let limits_equal = f_limit.fusion_equals(&e_limit);
    let (chain, chain_limit_equal) = if automizer_quotient_solvable {
        let chain = solvable_reduction_chain(f, e)?;
        let (lim, _) = reduction_limit(chain.last())?;
        let eq = lim.fusion_equals(&f_limit);
        (Some(chain), Some(eq))
    } else {
        (None, None)
    };
    Ok(SolvReport {
        automizer_quotient_solvable,
        outer_solvable,
        f_limit,
        e_limit,
        limits_equal,
        chain,
        chain_limit_equal,
    })
}
