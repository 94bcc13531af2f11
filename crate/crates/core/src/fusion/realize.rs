use std::collections::HashMap;
use std::sync::Arc;

use super::{Ambient, ClassParts, FusionSystem};
use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::group::{is_prime, p_part, FiniteGroup, GroupMap, Subgroup, NONE};

/// A Sylow p-subgroup `S` of a group `G`, copied out as a standalone group
/// that serves as the ambient of `F_S(G)` and of every subsystem built from
/// it. Translates subgroups and elements between `G` and the copy.
#[derive(Clone, Debug)]
pub struct SylowEmbedding {
    group: FiniteGroup,
    p: usize,
    sylow: Subgroup,
    embed: Vec<u32>,
    local: Vec<u32>,
    ambient: Arc<Ambient>,
}

impl SylowEmbedding {
    /// Uses the deterministic Sylow subgroup of [`FiniteGroup::sylow_p`].
    pub fn new(g: &FiniteGroup, p: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(FuseError::Precondition(format!("{p} is not prime")));
        }
        let s = g.sylow_p(p);
        Self::with_sylow(g, p, &s)
    }

    pub fn with_sylow(g: &FiniteGroup, p: usize, s: &Subgroup) -> Result<Self> {
        if !is_prime(p) {
            return Err(FuseError::Precondition(format!("{p} is not prime")));
        }
        if s.order() != p_part(g.order(), p) || !g.is_p_subgroup(s, p) {
            return Err(FuseError::Precondition(format!(
                "subgroup of order {} is not a Sylow {p}-subgroup of a group of order {}",
                s.order(),
                g.order()
            )));
        }
        let (sg, embed, local) = g.extract(s, format!("Syl{p}({})", g.name()));
        let ambient = Ambient::whole(sg)?;
        Ok(SylowEmbedding {
            group: g.clone(),
            p,
            sylow: s.clone(),
            embed,
            local,
            ambient,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// The Sylow subgroup inside `G`.
    pub fn sylow(&self) -> &Subgroup {
        &self.sylow
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    /// Element of the standalone copy corresponding to `x ∈ S`.
    pub fn local_element(&self, x: usize) -> Option<usize> {
        match self.local[x] {
            NONE => None,
            i => Some(i as usize),
        }
    }

    pub fn parent_element(&self, x: usize) -> usize {
        self.embed[x] as usize
    }

    /// A subgroup of `G` contained in `S`, as a subgroup of the copy.
    pub fn to_local(&self, h: &Subgroup) -> Option<Subgroup> {
        if !h.is_subgroup_of(&self.sylow) {
            return None;
        }
        Some(Subgroup::from_set(ElementSet::from_indices(
            self.embed.len(),
            h.iter().map(|x| self.local[x] as usize),
        )))
    }

    pub fn to_parent(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_set(ElementSet::from_indices(
            self.group.order(),
            h.iter().map(|x| self.embed[x] as usize),
        ))
    }

    /// Conjugation by `g ∈ G` on a subgroup of the copy, as a map of the copy.
    pub fn conjugation_map(&self, g: usize, domain: &Subgroup, codomain: &Subgroup) -> GroupMap {
        let mut table = vec![NONE; self.embed.len()];
        for x in domain.iter() {
            let y = self.group.conj(g, self.embed[x] as usize);
            table[x] = self.local[y];
        }
        GroupMap::from_table(domain.clone(), codomain.clone(), table)
    }

    /// `F_S(G)`.
    pub fn fusion_system(&self) -> Result<FusionSystem> {
        let whole = self.ambient.top().clone();
        self.realize(&self.group.whole(), &whole)
    }

    /// `F_{S∩H}(H)` for a subgroup `H ≤ G` in which `S ∩ H` is Sylow.
    pub fn fusion_of_subgroup(&self, h: &Subgroup) -> Result<FusionSystem> {
        let t_parent = h.meet(&self.sylow);
        if t_parent.order() != p_part(h.order(), self.p) {
            return Err(FuseError::Precondition(
                "S ∩ H is not a Sylow subgroup of H".into(),
            ));
        }
        let t = self.to_local(&t_parent).expect("inside S");
        self.realize(h, &t)
    }

    /// Fusion system over `t` (a subgroup of the copy, Sylow in `h`) induced
    /// by conjugation in `h`.
    fn realize(&self, h: &Subgroup, t: &Subgroup) -> Result<FusionSystem> {
        let amb = &self.ambient;
        let p = self.p;
        FusionSystem::check_base(amb, t, p)?;
        let objects = FusionSystem::object_ids(amb, t);
        let pos: HashMap<usize, usize> =
            objects.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let t_parent = self.to_parent(t);
        let g = &self.group;
        let mut assigned = vec![false; objects.len()];
        let mut parts = Vec::new();
        for start in 0..objects.len() {
            if assigned[start] {
                continue;
            }
            let p_parent = self.to_parent(&amb.subgroups()[objects[start]]);
            // member object -> an element conjugating `start` onto it
            let mut witness: Vec<(usize, usize)> = Vec::new();
            for x in h.iter() {
                let mut img = ElementSet::empty(g.order());
                for y in p_parent.iter() {
                    img.insert(g.conj(x, y));
                }
                if !img.is_subset(t_parent.set()) {
                    continue;
                }
                let q_local = Subgroup::from_set(ElementSet::from_indices(
                    self.embed.len(),
                    img.iter().map(|e| self.local[e] as usize),
                ));
                let j = pos[&amb.id_of(&q_local).expect("subgroup of S")];
                if !assigned[j] {
                    assigned[j] = true;
                    witness.push((j, x));
                }
            }
            let members: Vec<usize> = witness.iter().map(|w| w.0).collect();
            let rep = FusionSystem::canonical_rep(amb, t, &objects, &members);
            let g_rep = witness.iter().find(|w| w.0 == rep).expect("rep is a member").1;
            let rep_sub = amb.subgroups()[objects[rep]].clone();
            let member_maps = witness
                .iter()
                .map(|&(m, x)| {
                    // x conjugates start onto m, so g_rep x⁻¹ carries m onto rep
                    let c = g.mul(g_rep, g.inv(x));
                    (m, self.conjugation_map(c, &amb.subgroups()[objects[m]], &rep_sub))
                })
                .collect();
            let rep_parent = self.to_parent(&rep_sub);
            let auto_gens = g
                .normalizer_in(h, &rep_parent)
                .iter()
                .map(|x| self.conjugation_map(x, &rep_sub, &rep_sub))
                .collect();
            parts.push(ClassParts {
                rep,
                members: member_maps,
                auto_gens,
            });
        }
        FusionSystem::assemble(amb.clone(), t.clone(), p, objects, parts)
    }
}

/// `F_S(G)` over the deterministic Sylow p-subgroup.
pub fn fusion_of_group(g: &FiniteGroup, p: usize) -> Result<FusionSystem> {
    SylowEmbedding::new(g, p)?.fusion_system()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::testgroups::*;

    #[test]
    fn s4_at_two() {
        let g = s4();
        let emb = SylowEmbedding::new(&g, 2).unwrap();
        let f = emb.fusion_system().unwrap();
        assert_eq!(f.object_count(), 10);
        let v4 = emb.to_local(&g.core(2, crate::group::CoreMode::P)).unwrap();
        assert_eq!(f.automizer_order(&v4).unwrap(), 6);
        assert_eq!(f.hom_set(&v4, f.sylow()).unwrap().len(), 6);
        assert_eq!(f.automizer_order(f.sylow()).unwrap(), 4);
    }

    #[test]
    fn s3_at_three() {
        let f = fusion_of_group(&s3(), 3).unwrap();
        assert_eq!(f.automizer_order(f.sylow()).unwrap(), 2);
    }

    #[test]
    fn closure_matches_realization() {
        let g = s4();
        let f = fusion_of_group(&g, 2).unwrap();
        let again = FusionSystem::close(f.ambient(), f.sylow(), 2, &f.generators()).unwrap();
        assert!(f.fusion_equals(&again));
        let inner = FusionSystem::inner(f.ambient(), f.sylow(), 2).unwrap();
        assert!(!f.fusion_equals(&inner));
        assert!(f.contains_system(&inner));
    }
}
