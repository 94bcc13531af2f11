use std::collections::{HashMap, HashSet};

use super::{normality_report, p_prime_residual, same_maps};
use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::fusion::FusionSystem;
use crate::group::{CoreMode, FiniteGroup, GroupMap, MapGroup, Subgroup};

/// A map from the morphisms between a set of objects to a group `Δ` of order
/// prime to p. Values are keyed by image table, so a morphism and its
/// composite with an inclusion share a value.
#[derive(Clone, Debug)]
pub struct CharacterData {
    pub delta: FiniteGroup,
    pub objects: Vec<Subgroup>,
    values: HashMap<Vec<u32>, usize>,
}

impl CharacterData {
    pub fn new(delta: FiniteGroup, objects: Vec<Subgroup>, values: HashMap<Vec<u32>, usize>) -> Self {
        CharacterData {
            delta,
            objects,
            values,
        }
    }

    /// Evaluates `chi` on every morphism of F whose domain is in `objects`.
    pub fn from_fn(
        f: &FusionSystem,
        delta: FiniteGroup,
        objects: Vec<Subgroup>,
        chi: impl Fn(&GroupMap) -> usize,
    ) -> Result<Self> {
        let mut values = HashMap::new();
        for p in &objects {
            for m in f.hom_set(p, f.sylow())? {
                values.insert(m.table().to_vec(), chi(&m));
            }
        }
        Ok(Self::new(delta, objects, values))
    }

    pub fn value(&self, m: &GroupMap) -> Option<usize> {
        self.values.get(m.table()).copied()
    }
}

/// A homomorphism `Aut_F(T) → Δ`, stored by value on each automorphism.
#[derive(Clone, Debug)]
pub struct AutCharacter {
    pub delta: FiniteGroup,
    values: HashMap<Vec<u32>, usize>,
}

impl AutCharacter {
    /// The projection `Aut_F(T) → Aut_F(T)/K` for a normal subgroup `K`
    /// given by its elements.
    pub fn from_kernel(f: &FusionSystem, t: &Subgroup, kernel: &[GroupMap]) -> Result<Self> {
        let mg = MapGroup::from_closed(f.automizer(t)?)?;
        let k = mg.subgroup_of(kernel).ok_or_else(|| {
            FuseError::Precondition("kernel is not a subgroup of the automizer".into())
        })?;
        if k.order() != kernel.len() {
            return Err(FuseError::Precondition("kernel is not closed".into()));
        }
        let q = mg.group.quotient_group(&k)?;
        let values = mg
            .maps()
            .iter()
            .enumerate()
            .map(|(i, m)| (m.table().to_vec(), q.projection[i] as usize))
            .collect();
        Ok(AutCharacter {
            delta: q.group,
            values,
        })
    }

    pub fn new(delta: FiniteGroup, values: HashMap<Vec<u32>, usize>) -> Self {
        AutCharacter { delta, values }
    }

    pub fn value(&self, m: &GroupMap) -> Option<usize> {
        self.values.get(m.table()).copied()
    }
}

fn ill(msg: &str) -> FuseError {
    FuseError::Precondition(msg.to_string())
}

/// Checks the hypotheses on the object set `H` and on `χ`, then closes
/// `χ⁻¹(1)` and verifies the resulting subsystem.
pub fn subsystem_from_character(f: &FusionSystem, chi: &CharacterData) -> Result<FusionSystem> {
    let s = f.sylow();
    let p = f.p();
    let h = &chi.objects;
    if chi.delta.order().is_multiple_of(p) {
        return Err(ill("Δ must have order prime to p"));
    }
    if h.is_empty() {
        return Err(ill("object set is empty"));
    }
    let in_h: HashSet<&Subgroup> = h.iter().collect();
    for q in h {
        if !f.is_centric(q)? {
            return Err(ill("object set contains a non-centric subgroup"));
        }
        for c in f.conjugacy_class(q)? {
            if !in_h.contains(&c) {
                return Err(ill("object set is not closed under F-conjugacy"));
            }
        }
    }
    for q in f.objects() {
        if !in_h.contains(&q) && h.iter().any(|x| x.is_subgroup_of(&q)) {
            return Err(ill("object set is not closed under overgroups"));
        }
    }
    for q in f.centric_subgroups() {
        if in_h.contains(&q) {
            continue;
        }
        let mut found = false;
        for c in f.conjugacy_class(&q)? {
            if sylow_meets_op_out(f, &c)? {
                found = true;
                break;
            }
        }
        if !found {
            return Err(ill(
                "a centric subgroup outside the object set has no conjugate with Out_S ∩ O_p(Out_F) ≠ 1",
            ));
        }
    }

    let value = |m: &GroupMap| -> Result<usize> {
        chi.value(m)
            .ok_or_else(|| ill("character is undefined on a morphism of the object set"))
    };
    let delta = &chi.delta;
    for q in h {
        if value(&GroupMap::identity(q))? != 0 {
            return Err(ill("character is nontrivial on an inclusion"));
        }
    }
    for q in h {
        let homs = f.hom_set(q, s)?;
        for phi in &homs {
            let x = value(phi)?;
            let img = phi.image();
            for psi in f.hom_set(&img, s)? {
                if value(&psi.compose(phi))? != delta.mul(value(&psi)?, x) {
                    return Err(ill("character is not multiplicative"));
                }
            }
            for sub in h {
                if sub != q && sub.is_subgroup_of(q) && value(&phi.restrict(sub))? != x {
                    return Err(ill("character does not respect restriction"));
                }
            }
        }
    }
    let aut_s = f.automizer(s)?;
    let mut image = ElementSet::empty(delta.order());
    for a in &aut_s {
        image.insert(value(a)?);
    }
    if image.len() != delta.order() {
        return Err(ill("character is not surjective on Aut_F(S)"));
    }

    let mut kernel = Vec::new();
    for q in h {
        for phi in f.hom_set(q, s)? {
            if value(&phi)? == 0 {
                kernel.push(phi.onto_image());
            }
        }
    }
    let f0 = FusionSystem::close(f.ambient(), s, p, &kernel)?;

    let rep = normality_report(f, &f0);
    if !rep.is_normal() {
        return Err(FuseError::ConstructionUnverified(format!(
            "kernel subsystem is not normal: {:?}",
            rep.failures
        )));
    }
    let residual = p_prime_residual(f)?;
    if !f0.contains_system(&residual) {
        return Err(FuseError::ConstructionUnverified(
            "kernel subsystem does not contain the residual of index prime to p".into(),
        ));
    }
    let ker_s: Vec<GroupMap> = aut_s.iter().filter(|a| chi.value(a) == Some(0)).cloned().collect();
    if !same_maps(&f0.automizer(s)?, &ker_s) {
        return Err(FuseError::ConstructionUnverified(
            "automizer of S in the kernel subsystem is not the kernel of the character".into(),
        ));
    }
    Ok(f0)
}

/// `Out_S(P) ∩ O_p(Out_F(P)) ≠ 1`, i.e. `Aut_S(P) ∩ O_p(Aut_F(P)) > Inn(P)`.
fn sylow_meets_op_out(f: &FusionSystem, p: &Subgroup) -> Result<bool> {
    let g = f.group();
    let mg = MapGroup::from_closed(f.automizer(p)?)?;
    let core = mg.group.core(f.p(), CoreMode::P);
    let aut_s: HashSet<Vec<u32>> = f
        .sylow_automizer(p)
        .into_iter()
        .map(|m| m.table().to_vec())
        .collect();
    let meet = core.iter().filter(|&i| aut_s.contains(mg.map(i).table())).count();
    let inn = p.order() / g.center(p).order();
    Ok(meet > inn)
}

/// Extends a character `χ₀` of `Aut_F(T)` to the morphisms of F between
/// E-centric subgroups of T through Frattini factorizations `φ = α ∘ φ₀`,
/// lifts it along `P ↦ P ∩ T` to `{P ∈ F^c : P ∩ T ∈ E^c}`, and takes the
/// kernel subsystem.
pub fn subsystem_from_aut_character(
    f: &FusionSystem,
    e: &FusionSystem,
    chi0: &AutCharacter,
) -> Result<FusionSystem> {
    let s = f.sylow();
    let t = e.sylow();
    let p = f.p();
    let delta = &chi0.delta;
    if delta.order() == 1 {
        return Err(ill("Δ is trivial"));
    }
    if delta.order().is_multiple_of(p) {
        return Err(ill("Δ must have order prime to p"));
    }
    let rep = normality_report(f, e);
    if !rep.is_normal() {
        return Err(ill("E is not normal in F"));
    }
    let aut_t = f.automizer(t)?;
    let mut image = ElementSet::empty(delta.order());
    for a in &aut_t {
        image.insert(
            chi0.value(a)
                .ok_or_else(|| ill("character is undefined on Aut_F(T)"))?,
        );
    }
    if image.len() != delta.order() {
        return Err(ill("character of Aut_F(T) is not surjective"));
    }
    for a in e.automizer(t)? {
        if chi0.value(&a) != Some(0) {
            return Err(ill("Aut_E(T) is not in the kernel of the character"));
        }
    }

    // χ on morphisms of F between E-centric subgroups of T
    let e_centric = e.centric_subgroups();
    let e_centric_set: HashSet<&Subgroup> = e_centric.iter().collect();
    let mut on_t: HashMap<Vec<u32>, usize> = HashMap::new();
    for q in &e_centric {
        for phi in f.hom_set(q, t)? {
            let mut val: Option<usize> = None;
            for a in &aut_t {
                let phi0 = a.inverse().with_codomain(t).compose(&phi);
                if e.contains_map(&phi0) {
                    let v = chi0.value(a).expect("checked above");
                    match val {
                        None => val = Some(v),
                        Some(w) if w != v => {
                            return Err(FuseError::IllDefinedCharacter(
                                "two factorizations give different values".into(),
                            ))
                        }
                        _ => {}
                    }
                }
            }
            let v = val.ok_or_else(|| {
                FuseError::IllDefinedCharacter("morphism has no factorization through Aut_F(T)".into())
            })?;
            on_t.insert(phi.table().to_vec(), v);
        }
    }

    let objects: Vec<Subgroup> = f
        .centric_subgroups()
        .into_iter()
        .filter(|q| e_centric_set.contains(&q.meet(t)))
        .collect();
    let mut values = HashMap::new();
    for q in &objects {
        let qt = q.meet(t);
        for phi in f.hom_set(q, s)? {
            let r = phi.restrict(&qt);
            let v = *on_t.get(r.table()).ok_or_else(|| {
                FuseError::IllDefinedCharacter("restriction to T left the extended domain".into())
            })?;
            values.insert(phi.table().to_vec(), v);
        }
    }
    let chi = CharacterData::new(delta.clone(), objects, values);
    let f0 = subsystem_from_character(f, &chi)?;
    if !f0.contains_system(e) {
        return Err(FuseError::ConstructionUnverified("kernel subsystem does not contain E".into()));
    }
    if f0.fusion_equals(f) {
        return Err(FuseError::ConstructionUnverified("kernel subsystem is not proper".into()));
    }
    Ok(f0)
}
