//! Subsystems, quotients and reductions of saturated fusion systems.

mod centralizer;
mod character;
mod hyperfocal;
mod index;
mod normality;
mod quotient;
mod reduction;
mod solvable;

pub use centralizer::{centralizer_of_subsystem, centralizer_subsystem, centralizes};
pub use character::{
    subsystem_from_aut_character, subsystem_from_character, AutCharacter, CharacterData,
};
pub use hyperfocal::{focal_bound, hyperfocal_subgroup};
pub use index::{p_power_index_subsystem, p_prime_residual, p_residual};
pub use normality::{normality_report, NormalityFailure, NormalityReport};
pub use quotient::{outer_automizer_model, quotient_system, OuterAutomizerModel, QuotientSystem};
pub use reduction::{
    normal_p_core, reduction, reduction_limit, reduction_limit_gradual,
    reduction_limit_with_schedule,
};
pub use solvable::{solvable_reduction_chain, verify_solvable_reduction, SolvReport};

use crate::error::Result;
use crate::fusion::{AutoClosure, FusionSystem};
use crate::group::{is_power_of, GroupMap, Subgroup};

/// Kind of a single reduction step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// Passing to a normal subsystem of p-power index.
    PPowerIndex,
    /// Passing to a normal subsystem of index prime to p.
    PPrimeIndex,
}

impl StepKind {
    pub fn label(self) -> &'static str {
        match self {
            StepKind::PPowerIndex => "p-power index",
            StepKind::PPrimeIndex => "index prime to p",
        }
    }
}

/// A descending chain `systems[0] ≥ systems[1] ≥ …`, where `steps[k]`
/// describes how `systems[k + 1]` was obtained from `systems[k]`.
#[derive(Clone, Debug)]
pub struct SubsystemChain {
    pub systems: Vec<FusionSystem>,
    pub steps: Vec<StepKind>,
}

impl SubsystemChain {
    pub fn start(f: FusionSystem) -> Self {
        SubsystemChain {
            systems: vec![f],
            steps: Vec::new(),
        }
    }

    pub fn push(&mut self, kind: StepKind, f: FusionSystem) {
        self.steps.push(kind);
        self.systems.push(f);
    }

    pub fn last(&self) -> &FusionSystem {
        self.systems.last().expect("chain is never empty")
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Orders of the Sylow objects along the chain.
    pub fn sylow_orders(&self) -> Vec<usize> {
        self.systems.iter().map(|f| f.sylow().order()).collect()
    }
}

/// Order of an automorphism under composition.
pub(crate) fn map_order(m: &GroupMap) -> usize {
    let mut k = 1;
    let mut cur = m.clone();
    while !cur.is_identity() {
        cur = cur.compose(m);
        k += 1;
    }
    k
}

/// Elements of p-power order (`prime_power = true`) or of order prime to p.
pub(crate) fn elements_by_order(maps: &[GroupMap], p: usize, prime_power: bool) -> Vec<GroupMap> {
    maps.iter()
        .filter(|m| {
            let o = map_order(m);
            if prime_power {
                is_power_of(o, p)
            } else {
                !o.is_multiple_of(p)
            }
        })
        .cloned()
        .collect()
}

/// `O^p(A)` (generated by the p'-elements) or `O^{p'}(A)` (by the
/// p-elements) of a group of automorphisms of `base`.
pub(crate) fn automizer_residual(
    base: &Subgroup,
    maps: &[GroupMap],
    p: usize,
    p_prime: bool,
) -> Result<Vec<GroupMap>> {
    let seeds = elements_by_order(maps, p, p_prime);
    let mut c = AutoClosure::new(base);
    for s in &seeds {
        c.add(s)?;
    }
    Ok(c.finish().0)
}

fn same_maps(a: &[GroupMap], b: &[GroupMap]) -> bool {
    let mut x: Vec<&[u32]> = a.iter().map(|m| m.table()).collect();
    let mut y: Vec<&[u32]> = b.iter().map(|m| m.table()).collect();
    x.sort();
    y.sort();
    x == y
}
