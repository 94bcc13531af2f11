#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use fuselab::catalog::builtin_catalog;
use fuselab::fusion::FusionSystem;
use fuselab::group::{CoreMode, FiniteGroup, GroupMap, MapGroup, ResidualMode, Subgroup};
use fuselab::selftest::{catalog_systems, CatalogSystem};
use fuselab::subsystem::centralizer_of_subsystem;

pub struct Entry {
    pub name: String,
    pub primes: Vec<usize>,
    pub group: FiniteGroup,
}

pub fn groups() -> &'static [Entry] {
    static GROUPS: OnceLock<Vec<Entry>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        builtin_catalog()
            .into_iter()
            .map(|e| Entry {
                group: e.build().unwrap(),
                name: e.name,
                primes: e.primes,
            })
            .collect()
    })
}

pub fn systems() -> &'static [CatalogSystem] {
    static SYSTEMS: OnceLock<Vec<CatalogSystem>> = OnceLock::new();
    SYSTEMS.get_or_init(|| catalog_systems(None).unwrap())
}

pub fn system(name: &str, p: usize) -> &'static CatalogSystem {
    systems()
        .iter()
        .find(|c| c.name == name && c.p == p)
        .unwrap_or_else(|| panic!("{name} at {p} not in the catalog"))
}

/// Subsystems `F_{S∩N}(N)` for the normal subgroups N of G, each with
/// `C_S(E) ≤ T` or not.
pub struct NormalPair {
    pub n: Subgroup,
    pub e: FusionSystem,
    pub centralizer_inside: bool,
}

pub fn normal_pairs() -> &'static [Vec<NormalPair>] {
    static PAIRS: OnceLock<Vec<Vec<NormalPair>>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        systems()
            .iter()
            .map(|c| {
                c.embedding
                    .group()
                    .normal_subgroups()
                    .into_iter()
                    .map(|n| {
                        let e = c.embedding.fusion_of_subgroup(&n).unwrap();
                        let cse = centralizer_of_subsystem(&c.system, &e).unwrap();
                        NormalPair {
                            centralizer_inside: cse.is_subgroup_of(e.sylow()),
                            n,
                            e,
                        }
                    })
                    .collect()
            })
            .collect()
    })
}

pub fn tables(maps: &[GroupMap]) -> HashSet<Vec<u32>> {
    maps.iter().map(|m| m.table().to_vec()).collect()
}

/// `Out_S(P) ∩ O_p(Out_F(P)) ≠ 1`, computed inside `Aut_F(P)`.
pub fn sylow_meets_op_out(f: &FusionSystem, p: &Subgroup) -> bool {
    let mg = MapGroup::from_closed(f.automizer(p).unwrap()).unwrap();
    let core = mg.group.core(f.p(), CoreMode::P);
    let aut_s = tables(&f.sylow_automizer(p));
    let inner: HashSet<Vec<u32>> = p
        .iter()
        .map(|x| GroupMap::conjugation(f.group(), x, p, p).table().to_vec())
        .collect();
    let found = core
        .iter()
        .map(|i| mg.map(i).table().to_vec())
        .any(|t| aut_s.contains(&t) && !inner.contains(&t));
    found
}

pub fn fully_centralized_oracle(f: &FusionSystem, p: &Subgroup) -> bool {
    let g = f.group();
    let size = |q: &Subgroup| g.centralizer(f.sylow(), q).order();
    let mine = size(p);
    f.conjugacy_class(p).unwrap().iter().all(|q| size(q) <= mine)
}

pub fn fully_normalized_oracle(f: &FusionSystem, p: &Subgroup) -> bool {
    let g = f.group();
    let size = |q: &Subgroup| g.normalizer_in(f.sylow(), q).order();
    let mine = size(p);
    f.conjugacy_class(p).unwrap().iter().all(|q| size(q) <= mine)
}

/// `{x ∈ S : c_x|_T ∈ O^p(Aut_F(T))·Inn(T)}`.
pub fn focal_bound_oracle(f: &FusionSystem, t: &Subgroup) -> Subgroup {
    let g = f.group();
    let mg = MapGroup::from_closed(f.automizer(t).unwrap()).unwrap();
    let mut gens = mg.maps_of(&mg.group.residual(f.p(), ResidualMode::P));
    gens.extend(t.iter().map(|x| GroupMap::conjugation(g, x, t, t)));
    let product = tables(MapGroup::generate(t, &gens).unwrap().maps());
    let members: Vec<usize> = f
        .sylow()
        .iter()
        .filter(|&x| product.contains(GroupMap::conjugation(g, x, t, t).table()))
        .collect();
    g.subgroup_from_elements(&members).unwrap()
}

/// Every F-conjugate of P contains its centralizer in S.
pub fn centric_oracle(f: &FusionSystem, p: &Subgroup) -> bool {
    let g = f.group();
    f.conjugacy_class(p)
        .unwrap()
        .iter()
        .all(|q| g.centralizer(f.sylow(), q).is_subgroup_of(q))
}

/// No F-conjugate of a subgroup of T leaves T.
pub fn strongly_closed_oracle(f: &FusionSystem, t: &Subgroup) -> bool {
    f.objects()
        .iter()
        .filter(|p| p.is_subgroup_of(t))
        .all(|p| f.conjugacy_class(p).unwrap().iter().all(|q| q.is_subgroup_of(t)))
}
