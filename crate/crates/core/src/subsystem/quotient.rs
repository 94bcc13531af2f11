use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::fusion::{Ambient, FusionSystem, SylowEmbedding};
use crate::group::{FiniteGroup, GroupMap, MapGroup, Subgroup, NONE};

/// `F/T` over `S/T`, with the projection from the parent ambient.
#[derive(Clone, Debug)]
pub struct QuotientSystem {
    pub system: FusionSystem,
    /// Parent ambient element -> element of `S/T`; `NONE` outside S.
    pub projection: Vec<u32>,
    pub kernel: Subgroup,
}

impl QuotientSystem {
    /// Image of a subgroup of S.
    pub fn project(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_set(ElementSet::from_indices(
            self.system.group().order(),
            h.iter().map(|x| self.projection[x] as usize),
        ))
    }

    /// Induced map `P/T → φ(P)/T` of a morphism whose domain contains T.
    pub fn induced(&self, phi: &GroupMap) -> GroupMap {
        let dom = self.project(phi.domain());
        let img = self.project(&phi.image());
        let mut table = vec![NONE; self.system.group().order()];
        for x in phi.domain().iter() {
            table[self.projection[x] as usize] = self.projection[phi.apply(x)];
        }
        GroupMap::from_table(dom, img, table)
    }

    /// Preimage in S of a subgroup of `S/T`.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let members = (0..self.projection.len())
            .filter(|&x| self.projection[x] != NONE && h.contains(self.projection[x] as usize));
        Subgroup::from_set(ElementSet::from_indices(self.projection.len(), members))
    }
}

/// `F/T` for a strongly closed `T`: morphisms are the maps induced by
/// morphisms between subgroups containing T.
pub fn quotient_system(f: &FusionSystem, t: &Subgroup) -> Result<QuotientSystem> {
    if !f.is_strongly_closed(t)? {
        return Err(FuseError::NotStronglyClosed(
            "quotient requires a strongly closed subgroup".into(),
        ));
    }
    let g = f.group();
    let s = f.sylow();
    let (sg, embed, local) = g.extract(s, format!("{}_S", g.name()));
    let t_local = Subgroup::from_set(ElementSet::from_indices(
        sg.order(),
        t.iter().map(|x| local[x] as usize),
    ));
    let q = sg.quotient_group(&t_local)?;
    let mut projection = vec![NONE; g.order()];
    for (i, &x) in embed.iter().enumerate() {
        projection[x as usize] = q.projection[i];
    }
    let name = format!("{}/T", sg.name());
    let ambient = Ambient::whole(q.group.with_name(name))?;
    let top = ambient.top().clone();
    let mut qs = QuotientSystem {
        system: FusionSystem::inner(&ambient, &top, f.p())?,
        projection,
        kernel: t.clone(),
    };
    let gens: Vec<GroupMap> = f
        .generators()
        .iter()
        .filter(|m| t.is_subgroup_of(m.domain()))
        .map(|m| qs.induced(m))
        .collect();
    let system = FusionSystem::close(&ambient, &top, f.p(), &gens)?;
    if !system.is_saturated(None).0 {
        return Err(FuseError::ConstructionUnverified("quotient system is not saturated".into()));
    }
    qs.system = system;
    Ok(qs)
}

/// `F/TC_S(T)` next to the group system `F_{Out_S(T)}(Out_F(T))`, with the
/// canonical isomorphism `S/TC_S(T) → Out_S(T)` induced by `x ↦ [c_x|_T]`.
#[derive(Clone, Debug)]
pub struct OuterAutomizerModel {
    pub quotient: QuotientSystem,
    pub out_group: FiniteGroup,
    pub out_system: FusionSystem,
    /// Element of `S/TC_S(T)` -> element of the Sylow copy of `Out_F(T)`.
    pub iso: Vec<usize>,
    pub isomorphic: bool,
}

pub fn outer_automizer_model(f: &FusionSystem, t: &Subgroup) -> Result<OuterAutomizerModel> {
    if !f.is_strongly_closed(t)? {
        return Err(FuseError::NotStronglyClosed(
            "outer automizer model requires a strongly closed subgroup".into(),
        ));
    }
    let g = f.group();
    let s = f.sylow();
    let p = f.p();
    let tc = g.join(t, &g.centralizer(s, t));
    let quotient = quotient_system(f, &tc)?;

    let mg = MapGroup::from_closed(f.automizer(t)?)?;
    let inner: Vec<GroupMap> = t.iter().map(|x| GroupMap::conjugation(g, x, t, t)).collect();
    let inn = mg
        .subgroup_of(&inner)
        .ok_or_else(|| FuseError::ConstructionUnverified("Inn(T) is not in Aut_F(T)".into()))?;
    let q = mg.group.quotient_group(&inn)?;
    let out_group = q.group.clone().with_name("Out_F(T)");
    let outer_of = |x: usize| -> usize {
        let idx = mg
            .index_of(&GroupMap::conjugation(g, x, t, t))
            .expect("Aut_S(T) lies in Aut_F(T)");
        q.projection[idx] as usize
    };
    let out_s = Subgroup::from_set(ElementSet::from_indices(
        out_group.order(),
        s.iter().map(outer_of),
    ));
    let emb = SylowEmbedding::with_sylow(&out_group, p, &out_s)?;
    let out_system = emb.fusion_system()?;

    let n = quotient.system.group().order();
    let mut iso = vec![usize::MAX; n];
    for x in s.iter() {
        let y = quotient.projection[x] as usize;
        let z = emb.local_element(outer_of(x)).expect("inside Out_S(T)");
        if iso[y] == usize::MAX {
            iso[y] = z;
        } else if iso[y] != z {
            return Err(FuseError::ConstructionUnverified(
                "conjugation action is not constant on cosets of TC_S(T)".into(),
            ));
        }
    }
    let transported = quotient.system.transport(emb.ambient(), &iso)?;
    let isomorphic = transported.fusion_equals(&out_system);
    Ok(OuterAutomizerModel {
        quotient,
        out_group,
        out_system,
        iso,
        isomorphic,
    })
}
