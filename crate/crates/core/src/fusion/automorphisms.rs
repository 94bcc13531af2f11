use super::FusionSystem;
use crate::error::{FuseError, Result};
use crate::group::{AutomorphismGroup, FiniteGroup, GroupMap, MapGroup};

/// `Aut(T, E)` and `Out(T, E) = Aut(T, E) / Aut_E(T)`.
#[derive(Clone, Debug)]
pub struct FusionAutomorphisms {
    pub automorphisms: AutomorphismGroup,
    pub out: FiniteGroup,
}

impl FusionAutomorphisms {
    pub fn out_order(&self) -> usize {
        self.out.order()
    }
}

impl FusionSystem {
    /// Whether `α ∈ Aut(S)` carries morphisms of the system to morphisms.
    pub fn is_fusion_preserving(&self, alpha: &GroupMap) -> bool {
        let inv = alpha.inverse();
        self.generators().iter().all(|phi| {
            let src = alpha.image_of(phi.domain());
            let conj = alpha.compose(phi).compose(&inv.restrict(&src));
            self.contains_map(&conj)
        })
    }

    /// Automorphisms of the Sylow object that preserve the system.
    pub fn fusion_preserving_automorphisms(&self) -> Result<FusionAutomorphisms> {
        let g = self.group();
        let t = self.sylow();
        let aut = g.automorphism_group(t)?;
        let keep: Vec<GroupMap> = aut
            .elements()
            .iter()
            .filter(|a| self.is_fusion_preserving(a))
            .cloned()
            .collect();
        let automorphisms = AutomorphismGroup::from_closed(t.clone(), keep);
        let mg = MapGroup::from_closed(automorphisms.elements().to_vec())?;
        let inner = self.automizer(t)?;
        let sub = mg.subgroup_of(&inner).ok_or_else(|| {
            FuseError::TheoremViolation("Aut_E(T) is not fusion preserving".into())
        })?;
        let q = mg.group.quotient_group(&sub)?;
        Ok(FusionAutomorphisms {
            automorphisms,
            out: q.group.with_name("Out(T,E)"),
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::fusion::fusion_of_group;
    use crate::group::testgroups::*;

    #[test]
    fn out_of_a4_and_s3() {
        let a4 = perm_group("A4", 4, &["(1 2 3)", "(1 2)(3 4)"]);
        let fa = fusion_of_group(&a4, 2).unwrap().fusion_preserving_automorphisms().unwrap();
        assert_eq!(fa.automorphisms.order(), 6);
        assert_eq!(fa.out_order(), 2);
        let fs = fusion_of_group(&s3(), 3).unwrap().fusion_preserving_automorphisms().unwrap();
        assert_eq!(fs.out_order(), 1);
    }
}
