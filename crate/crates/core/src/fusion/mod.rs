//! Fusion systems over subgroups of a fixed ambient p-group.
//!
//! A [`FusionSystem`] is stored as a groupoid: the subgroups of the Sylow
//! object are partitioned into F-conjugacy classes, every class has a
//! representative with a closed automizer `Aut_F(R)`, and every member `P`
//! carries an isomorphism `P → R`. Every isomorphism of the system is then
//! `t_Q⁻¹ ∘ α ∘ t_P` for a unique `α ∈ Aut_F(R)`, and every morphism is such
//! an isomorphism followed by an inclusion.

mod alperin;
mod automorphisms;
mod closure;
mod realize;
mod status;

pub use alperin::{AlperinDecomposition, AlperinStep};
pub use automorphisms::FusionAutomorphisms;
pub use realize::{fusion_of_group, SylowEmbedding};
pub use status::{SaturationWitness, StatusFailure, SubgroupStatus};

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::group::{is_power_of, is_prime, FiniteGroup, GroupMap, Subgroup, NONE};

/// The group all subgroups and maps of a family of fusion systems live in,
/// with the subgroup lattice of its top p-subgroup enumerated once.
#[derive(Debug)]
pub struct Ambient {
    group: FiniteGroup,
    top: Subgroup,
    subgroups: Vec<Subgroup>,
    index: HashMap<ElementSet, usize>,
}

impl Ambient {
    pub fn new(group: FiniteGroup, top: Subgroup) -> Result<Arc<Self>> {
        let subgroups = group.all_subgroups(&top)?;
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.set().clone(), i))
            .collect();
        Ok(Arc::new(Ambient {
            group,
            top,
            subgroups,
            index,
        }))
    }

    /// Ambient whose top is the whole group.
    pub fn whole(group: FiniteGroup) -> Result<Arc<Self>> {
        let top = group.whole();
        Self::new(group, top)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn top(&self) -> &Subgroup {
        &self.top
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn id_of(&self, s: &Subgroup) -> Option<usize> {
        self.index.get(s.set()).copied()
    }

    fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other)
            || (self.top == other.top && self.group.table() == other.group.table())
    }
}

#[derive(Clone, Debug)]
pub(crate) struct ConjClass {
    /// Object index of the representative.
    pub rep: usize,
    /// Object indices, increasing.
    pub members: Vec<usize>,
    /// `Aut_F(rep)`, sorted by table with the identity first.
    pub automizer: Vec<GroupMap>,
    pub auto_index: HashMap<Vec<u32>, usize>,
    /// A generating set of the automizer.
    pub auto_gens: Vec<GroupMap>,
}

/// A fusion system over a p-subgroup of an [`Ambient`] group.
#[derive(Clone, Debug)]
pub struct FusionSystem {
    p: usize,
    ambient: Arc<Ambient>,
    sylow: Subgroup,
    /// Ambient subgroup ids of the objects, in canonical order.
    objects: Vec<usize>,
    /// Ambient subgroup id -> object index, or `NONE`.
    slot: Vec<u32>,
    class_of: Vec<usize>,
    classes: Vec<ConjClass>,
    /// Object -> isomorphism onto the representative of its class.
    transversal: Vec<GroupMap>,
    homs: Vec<OnceLock<Vec<GroupMap>>>,
}

/// Class data handed to [`FusionSystem::assemble`]: members with their
/// isomorphisms onto `rep`, and generators of `Aut_F(rep)`.
pub(crate) struct ClassParts {
    pub rep: usize,
    pub members: Vec<(usize, GroupMap)>,
    pub auto_gens: Vec<GroupMap>,
}

const EAGER_HOMS_BELOW: usize = 16;

impl FusionSystem {
    /// Object indices (into `ambient.subgroups()`) of the subgroups of `sylow`.
    pub(crate) fn object_ids(ambient: &Ambient, sylow: &Subgroup) -> Vec<usize> {
        (0..ambient.subgroups.len())
            .filter(|&i| ambient.subgroups[i].is_subgroup_of(sylow))
            .collect()
    }

    pub(crate) fn check_base(ambient: &Ambient, sylow: &Subgroup, p: usize) -> Result<()> {
        if !is_prime(p) {
            return Err(FuseError::Precondition(format!("{p} is not prime")));
        }
        if !sylow.is_subgroup_of(&ambient.top) || ambient.id_of(sylow).is_none() {
            return Err(FuseError::Containment(
                "Sylow object must be a subgroup of the ambient top".into(),
            ));
        }
        if !is_power_of(sylow.order(), p) {
            return Err(FuseError::Precondition(format!(
                "Sylow object has order {}, not a power of {p}",
                sylow.order()
            )));
        }
        Ok(())
    }

    /// Builds the system from class data. Representatives must already be the
    /// canonical ones (see [`FusionSystem::canonical_rep`]).
    pub(crate) fn assemble(
        ambient: Arc<Ambient>,
        sylow: Subgroup,
        p: usize,
        objects: Vec<usize>,
        parts: Vec<ClassParts>,
    ) -> Result<Self> {
        let mut slot = vec![NONE; ambient.subgroups.len()];
        for (i, &id) in objects.iter().enumerate() {
            slot[id] = i as u32;
        }
        let n = objects.len();
        let mut class_of = vec![usize::MAX; n];
        let mut transversal: Vec<Option<GroupMap>> = vec![None; n];
        let mut classes = Vec::with_capacity(parts.len());
        let mut parts = parts;
        parts.sort_by_key(|c| c.rep);
        for (ci, part) in parts.into_iter().enumerate() {
            let rep_sub = ambient.subgroups[objects[part.rep]].clone();
            let mut members = Vec::with_capacity(part.members.len());
            for (m, t) in part.members {
                class_of[m] = ci;
                transversal[m] = Some(t.with_codomain(&rep_sub));
                members.push(m);
            }
            members.sort_unstable();
            let (automizer, auto_gens) = close_automizer(&rep_sub, &part.auto_gens)?;
            let auto_index = automizer
                .iter()
                .enumerate()
                .map(|(i, m)| (m.table().to_vec(), i))
                .collect();
            classes.push(ConjClass {
                rep: part.rep,
                members,
                automizer,
                auto_index,
                auto_gens,
            });
        }
        let transversal: Vec<GroupMap> = transversal
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.unwrap_or_else(|| panic!("object {i} has no class")))
            .collect();
        let homs = (0..n).map(|_| OnceLock::new()).collect();
        let fs = FusionSystem {
            p,
            ambient,
            sylow,
            objects,
            slot,
            class_of,
            classes,
            transversal,
            homs,
        };
        if fs.sylow.order() <= EAGER_HOMS_BELOW {
            for i in 0..n {
                fs.homs_of(i);
            }
        }
        Ok(fs)
    }

    /// Fully normalized representative: largest `N_S(P)`, then the least
    /// subgroup in canonical order.
    pub(crate) fn canonical_rep(
        ambient: &Ambient,
        sylow: &Subgroup,
        objects: &[usize],
        members: &[usize],
    ) -> usize {
        let g = &ambient.group;
        *members
            .iter()
            .max_by(|&&a, &&b| {
                let na = g.normalizer_in(sylow, &ambient.subgroups[objects[a]]).order();
                let nb = g.normalizer_in(sylow, &ambient.subgroups[objects[b]]).order();
                na.cmp(&nb).then(b.cmp(&a))
            })
            .expect("nonempty class")
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.ambient.group
    }

    /// The p-group the system lives over.
    pub fn sylow(&self) -> &Subgroup {
        &self.sylow
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// All subgroups of the Sylow object, in canonical order.
    pub fn objects(&self) -> Vec<Subgroup> {
        self.objects
            .iter()
            .map(|&id| self.ambient.subgroups[id].clone())
            .collect()
    }

    pub fn object(&self, i: usize) -> &Subgroup {
        &self.ambient.subgroups[self.objects[i]]
    }

    /// Object index of a subgroup of the Sylow object.
    pub fn index_of(&self, p: &Subgroup) -> Option<usize> {
        let id = self.ambient.id_of(p)?;
        match self.slot[id] {
            NONE => None,
            i => Some(i as usize),
        }
    }

    pub(crate) fn require(&self, p: &Subgroup) -> Result<usize> {
        self.index_of(p).ok_or_else(|| {
            FuseError::Containment("subgroup is not contained in the Sylow object".into())
        })
    }

    pub(crate) fn class_data(&self, obj: usize) -> &ConjClass {
        &self.classes[self.class_of[obj]]
    }

    pub(crate) fn transversal(&self, obj: usize) -> &GroupMap {
        &self.transversal[obj]
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class representatives (fully normalized), in canonical order.
    pub fn class_representatives(&self) -> Vec<Subgroup> {
        self.classes.iter().map(|c| self.object(c.rep).clone()).collect()
    }

    /// `P^F`, sorted canonically.
    pub fn conjugacy_class(&self, p: &Subgroup) -> Result<Vec<Subgroup>> {
        let i = self.require(p)?;
        Ok(self
            .class_data(i)
            .members
            .iter()
            .map(|&m| self.object(m).clone())
            .collect())
    }

    pub fn representative(&self, p: &Subgroup) -> Result<Subgroup> {
        let i = self.require(p)?;
        Ok(self.object(self.class_data(i).rep).clone())
    }

    /// `Aut_F(P)`, sorted by image table.
    pub fn automizer(&self, p: &Subgroup) -> Result<Vec<GroupMap>> {
        let i = self.require(p)?;
        Ok(self.automizer_of(i))
    }

    pub(crate) fn automizer_of(&self, obj: usize) -> Vec<GroupMap> {
        let c = self.class_data(obj);
        let p = self.object(obj);
        if c.rep == obj {
            return c.automizer.clone();
        }
        let t = &self.transversal[obj];
        let ti = t.inverse();
        let mut out: Vec<GroupMap> = c
            .automizer
            .iter()
            .map(|a| ti.compose(&a.compose(t)).with_codomain(p))
            .collect();
        out.sort();
        out
    }

    /// Generators of `Aut_F(P)`.
    pub(crate) fn automizer_gens_of(&self, obj: usize) -> Vec<GroupMap> {
        let c = self.class_data(obj);
        let p = self.object(obj);
        let t = &self.transversal[obj];
        let ti = t.inverse();
        c.auto_gens
            .iter()
            .map(|a| ti.compose(&a.compose(t)).with_codomain(p))
            .collect()
    }

    pub fn automizer_order(&self, p: &Subgroup) -> Result<usize> {
        let i = self.require(p)?;
        Ok(self.class_data(i).automizer.len())
    }

    /// `Hom_F(P, S)` with codomain the Sylow object, sorted by image table.
    pub(crate) fn homs_of(&self, obj: usize) -> &[GroupMap] {
        self.homs[obj].get_or_init(|| {
            let c = self.class_data(obj);
            let tp = &self.transversal[obj];
            let mut out = Vec::with_capacity(c.members.len() * c.automizer.len());
            for &q in &c.members {
                let tq_inv = self.transversal[q].inverse();
                for a in &c.automizer {
                    out.push(tq_inv.compose(&a.compose(tp)).with_codomain(&self.sylow));
                }
            }
            out.sort();
            out
        })
    }

    /// `Hom_F(P, Q)`, sorted by image table; each map has codomain `Q`.
    pub fn hom_set(&self, p: &Subgroup, q: &Subgroup) -> Result<Vec<GroupMap>> {
        let i = self.require(p)?;
        self.require(q)?;
        Ok(self
            .homs_of(i)
            .iter()
            .filter(|m| m.image().is_subgroup_of(q))
            .map(|m| m.with_codomain(q))
            .collect())
    }

    /// `Iso_F(P, Q)`.
    pub fn iso_set(&self, p: &Subgroup, q: &Subgroup) -> Result<Vec<GroupMap>> {
        if p.order() != q.order() {
            self.require(p)?;
            self.require(q)?;
            return Ok(Vec::new());
        }
        self.hom_set(p, q)
    }

    /// Whether a map between subgroups of the Sylow object is a morphism.
    pub fn contains_map(&self, phi: &GroupMap) -> bool {
        let (Some(a), Some(b)) = (self.index_of(phi.domain()), self.index_of(&phi.image()))
        else {
            return false;
        };
        if self.class_of[a] != self.class_of[b] {
            return false;
        }
        let c = self.class_data(a);
        let core = self.transversal[b].compose(&phi.compose(&self.transversal[a].inverse()));
        c.auto_index.contains_key(core.table())
    }

    /// Isomorphisms generating the system under composition, inversion and
    /// restriction: transversals and automizer generators.
    pub fn generators(&self) -> Vec<GroupMap> {
        let mut out = Vec::new();
        for (i, t) in self.transversal.iter().enumerate() {
            if self.class_data(i).rep != i {
                out.push(t.clone());
            }
        }
        for c in &self.classes {
            out.extend(c.auto_gens.iter().cloned());
        }
        out
    }

    /// Total number of morphisms `Σ_{P,Q} |Hom_F(P,Q)|`.
    pub fn morphism_count(&self) -> usize {
        let mut total = 0;
        for i in 0..self.objects.len() {
            let c = self.class_data(i);
            for &m in &c.members {
                // each iso P → M contributes once per overgroup of M
                let over = self
                    .objects
                    .iter()
                    .filter(|&&id| self.object(m).is_subgroup_of(&self.ambient.subgroups[id]))
                    .count();
                total += c.automizer.len() * over;
            }
        }
        total
    }

    /// True when `other` lives in the same ambient over a subgroup of this
    /// system's Sylow object and every morphism of `other` is a morphism here.
    pub fn contains_system(&self, other: &FusionSystem) -> bool {
        self.ambient.same_as(&other.ambient)
            && other.sylow.is_subgroup_of(&self.sylow)
            && other.generators().iter().all(|m| self.contains_map(m))
    }

    /// Literal equality: same ambient, same Sylow object, same morphisms.
    pub fn fusion_equals(&self, other: &FusionSystem) -> bool {
        self.p == other.p
            && self.ambient.same_as(&other.ambient)
            && self.sylow == other.sylow
            && self.class_of == other.class_of
            && self
                .classes
                .iter()
                .zip(&other.classes)
                .all(|(a, b)| a.automizer.len() == b.automizer.len())
            && self.contains_system(other)
            && other.contains_system(self)
    }

    /// `Aut_S(P) = {c_s|_P : s ∈ N_S(P)}`, sorted.
    pub fn sylow_automizer(&self, p: &Subgroup) -> Vec<GroupMap> {
        let g = &self.ambient.group;
        let n = g.normalizer_in(&self.sylow, p);
        let mut out: Vec<GroupMap> = n
            .iter()
            .map(|s| GroupMap::conjugation(g, s, p, p))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The system `F_T(T)` over a subgroup `T` of this ambient.
    pub fn inner(ambient: &Arc<Ambient>, sylow: &Subgroup, p: usize) -> Result<FusionSystem> {
        closure::close(ambient, sylow, p, &[])
    }

    /// The smallest fusion system over `sylow` containing `generators`.
    pub fn close(
        ambient: &Arc<Ambient>,
        sylow: &Subgroup,
        p: usize,
        generators: &[GroupMap],
    ) -> Result<FusionSystem> {
        closure::close(ambient, sylow, p, generators)
    }

    /// The image of this system under an isomorphism `iso` from its ambient
    /// group onto the group of `target`, given elementwise.
    pub fn transport(&self, target: &Arc<Ambient>, iso: &[usize]) -> Result<FusionSystem> {
        let g = &self.ambient.group;
        let h = &target.group;
        if iso.len() != g.order() || h.order() != g.order() {
            return Err(FuseError::Precondition("isomorphism has the wrong size".into()));
        }
        let mut hit = ElementSet::empty(h.order());
        for &y in iso {
            if y >= h.order() || !hit.insert(y) {
                return Err(FuseError::Precondition("map is not a bijection".into()));
            }
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if iso[g.mul(a, b)] != h.mul(iso[a], iso[b]) {
                    return Err(FuseError::Precondition("map is not a homomorphism".into()));
                }
            }
        }
        let carry = |p: &Subgroup| {
            Subgroup::from_set(ElementSet::from_indices(h.order(), p.iter().map(|x| iso[x])))
        };
        let gens: Vec<GroupMap> = self
            .generators()
            .iter()
            .map(|m| {
                let mut table = vec![NONE; h.order()];
                for x in m.domain().iter() {
                    table[iso[x]] = iso[m.apply(x)] as u32;
                }
                GroupMap::from_table(carry(m.domain()), carry(m.codomain()), table)
            })
            .collect();
        FusionSystem::close(target, &carry(&self.sylow), self.p, &gens)
    }

    /// Builds a system from the complete list of its morphisms into the
    /// Sylow object, rejecting lists that are not closed.
    pub fn from_hom_sets(
        ambient: &Arc<Ambient>,
        sylow: &Subgroup,
        p: usize,
        homs: &[GroupMap],
    ) -> Result<FusionSystem> {
        let f = closure::close(ambient, sylow, p, homs)?;
        let mut given: Vec<Vec<u32>> = homs.iter().map(|m| m.table().to_vec()).collect();
        given.sort();
        given.dedup();
        let mut all = Vec::new();
        for i in 0..f.object_count() {
            all.extend(f.homs_of(i).iter().map(|m| m.table().to_vec()));
        }
        all.sort();
        if all != given {
            return Err(FuseError::ConstructionUnverified(
                "given morphism sets are not closed".into(),
            ));
        }
        Ok(f)
    }
}

/// Closes generators of a group of automorphisms of `base`; returns the
/// sorted group (identity first) and a reduced generating set.
pub(crate) fn close_automizer(
    base: &Subgroup,
    gens: &[GroupMap],
) -> Result<(Vec<GroupMap>, Vec<GroupMap>)> {
    let mut grp = AutoClosure::new(base);
    for g in gens {
        grp.add(g)?;
    }
    Ok(grp.finish())
}

/// Incrementally closed group of automorphisms of one subgroup.
#[derive(Clone, Debug)]
pub(crate) struct AutoClosure {
    base: Subgroup,
    elements: Vec<GroupMap>,
    index: HashMap<Vec<u32>, usize>,
    gens: Vec<GroupMap>,
}

impl AutoClosure {
    pub fn new(base: &Subgroup) -> Self {
        let id = GroupMap::identity(base);
        let mut index = HashMap::new();
        index.insert(id.table().to_vec(), 0);
        AutoClosure {
            base: base.clone(),
            elements: vec![id],
            index,
            gens: Vec::new(),
        }
    }

    pub fn contains(&self, m: &GroupMap) -> bool {
        self.index.contains_key(m.table())
    }

    pub fn gens(&self) -> &[GroupMap] {
        &self.gens
    }

    /// Adds a generator; returns whether the group grew.
    pub fn add(&mut self, m: &GroupMap) -> Result<bool> {
        if self.contains(m) {
            return Ok(false);
        }
        let m = m.with_codomain(&self.base);
        self.gens.push(m);
        let cap = crate::limits::Limits::get().max_automorphisms;
        let mut head = 0;
        while head < self.elements.len() {
            let x = self.elements[head].clone();
            head += 1;
            for g in &self.gens {
                let y = x.compose(g);
                if !self.index.contains_key(y.table()) {
                    self.index.insert(y.table().to_vec(), self.elements.len());
                    self.elements.push(y);
                    if self.elements.len() > cap {
                        return Err(FuseError::SizeGuard {
                            what: "automizer order",
                            actual: self.elements.len(),
                            limit: cap,
                        });
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn finish(self) -> (Vec<GroupMap>, Vec<GroupMap>) {
        let mut el = self.elements;
        el.sort();
        if let Some(pos) = el.iter().position(|m| m.is_identity()) {
            let id = el.remove(pos);
            el.insert(0, id);
        }
        (el, self.gens)
    }
}
