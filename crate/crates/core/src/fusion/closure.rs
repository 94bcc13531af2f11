//! Generating a fusion system from a set of injective homomorphisms.
//!
//! The morphisms of `⟨X⟩` are the composites of restrictions of maps in
//! `X ∪ Inn(S)` and their inverses. Because restrictions of a composite are
//! composites of restrictions, it is enough to feed every restriction of
//! every generator into a union-find over subgroups that tracks, per class,
//! isomorphisms onto a root and the automizer of that root.

use std::sync::Arc;

use super::{Ambient, AutoClosure, ClassParts, FusionSystem};
use crate::error::{FuseError, Result};
use crate::group::{GroupMap, Subgroup};

struct Groupoid {
    /// Object -> class slot (union-find root object).
    root: Vec<usize>,
    /// Root object -> members.
    members: Vec<Vec<usize>>,
    /// Object -> isomorphism onto its root.
    to_root: Vec<GroupMap>,
    /// Root object -> automizer of the root.
    autos: Vec<Option<AutoClosure>>,
}

impl Groupoid {
    fn new(subs: &[Subgroup]) -> Self {
        let n = subs.len();
        Groupoid {
            root: (0..n).collect(),
            members: (0..n).map(|i| vec![i]).collect(),
            to_root: subs.iter().map(GroupMap::identity).collect(),
            autos: subs.iter().map(|s| Some(AutoClosure::new(s))).collect(),
        }
    }

    /// Records an isomorphism `a → b` between objects.
    fn add(&mut self, a: usize, b: usize, phi: &GroupMap) -> Result<()> {
        let (ra, rb) = (self.root[a], self.root[b]);
        // psi: root(a) -> root(b)
        let psi = self.to_root[b].compose(&phi.compose(&self.to_root[a].inverse()));
        if ra == rb {
            self.autos[ra].as_mut().expect("root").add(&psi)?;
            return Ok(());
        }
        if self.members[ra].len() >= self.members[rb].len() {
            self.merge(rb, ra, &psi.inverse())
        } else {
            self.merge(ra, rb, &psi)
        }
    }

    /// Moves class `from` into class `into` along `iso: from → into`.
    fn merge(&mut self, from: usize, into: usize, iso: &GroupMap) -> Result<()> {
        let moved = std::mem::take(&mut self.members[from]);
        for &m in &moved {
            self.to_root[m] = iso.compose(&self.to_root[m]);
            self.root[m] = into;
        }
        self.members[into].extend(moved);
        let old = self.autos[from].take().expect("root");
        let inv = iso.inverse();
        let target = self.autos[into].as_mut().expect("root");
        for g in old.gens() {
            target.add(&iso.compose(&g.compose(&inv)))?;
        }
        Ok(())
    }
}

pub(crate) fn close(
    ambient: &Arc<Ambient>,
    sylow: &Subgroup,
    p: usize,
    generators: &[GroupMap],
) -> Result<FusionSystem> {
    FusionSystem::check_base(ambient, sylow, p)?;
    let g = ambient.group();
    for phi in generators {
        if !phi.domain().is_subgroup_of(sylow) || !phi.image().is_subgroup_of(sylow) {
            return Err(FuseError::Containment(
                "generator does not map between subgroups of the Sylow object".into(),
            ));
        }
        phi.validate(g).map_err(|e| {
            FuseError::Precondition(format!("generator is not an injective homomorphism: {e}"))
        })?;
    }
    let objects = FusionSystem::object_ids(ambient, sylow);
    let subs: Vec<Subgroup> = objects
        .iter()
        .map(|&id| ambient.subgroups()[id].clone())
        .collect();
    let local = |s: &Subgroup| -> usize {
        let id = ambient.id_of(s).expect("subgroup of the top");
        objects.binary_search(&id).expect("subgroup of the Sylow object")
    };

    let mut atoms: Vec<GroupMap> = g
        .generating_set(sylow)
        .into_iter()
        .map(|s| GroupMap::conjugation(g, s, sylow, sylow))
        .collect();
    atoms.extend(generators.iter().map(|m| m.onto_image()));
    atoms.sort();
    atoms.dedup();

    let mut gpd = Groupoid::new(&subs);
    for phi in &atoms {
        let d = local(phi.domain());
        for (k, sub) in subs.iter().enumerate() {
            if !sub.is_subgroup_of(&subs[d]) {
                continue;
            }
            let r = phi.restrict(sub).onto_image();
            let b = local(r.codomain());
            gpd.add(k, b, &r)?;
        }
    }

    let mut parts = Vec::new();
    for r in 0..subs.len() {
        if gpd.root[r] != r {
            continue;
        }
        let members = gpd.members[r].clone();
        let rep = FusionSystem::canonical_rep(ambient, sylow, &objects, &members);
        let to_rep = gpd.to_root[rep].clone();
        let back = to_rep.inverse();
        let auto = gpd.autos[r].as_ref().expect("root");
        let auto_gens = auto
            .gens()
            .iter()
            .map(|a| back.compose(&a.compose(&to_rep)))
            .collect();
        let members = members
            .into_iter()
            .map(|m| (m, back.compose(&gpd.to_root[m])))
            .collect();
        parts.push(ClassParts {
            rep,
            members,
            auto_gens,
        });
    }
    FusionSystem::assemble(ambient.clone(), sylow.clone(), p, objects, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::testgroups::*;

    #[test]
    fn trivial_generators_give_inner_fusion() {
        let d = d8();
        let amb = Ambient::whole(d.clone()).unwrap();
        let f = FusionSystem::inner(&amb, &d.whole(), 2).unwrap();
        // classes of subgroups of D8 under D8-conjugacy: 1, Z, two classes of
        // non-central involutions, C4, two V4s, D8
        assert_eq!(f.class_count(), 8);
        assert_eq!(f.automizer_order(&d.whole()).unwrap(), 4);
    }

    #[test]
    fn order_three_automorphism_of_v4() {
        let v = v4();
        let amb = Ambient::whole(v.clone()).unwrap();
        let aut = v.automorphism_group(&v.whole()).unwrap();
        let psi = aut
            .elements()
            .iter()
            .find(|m| {
                let c = m.compose(m).compose(m);
                !m.is_identity() && c.is_identity()
            })
            .unwrap()
            .clone();
        let f = FusionSystem::close(&amb, &v.whole(), 2, &[psi]).unwrap();
        assert_eq!(f.automizer_order(&v.whole()).unwrap(), 3);
        assert_eq!(f.class_count(), 3);
    }
}
