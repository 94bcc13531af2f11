//! Centric linking systems of finite groups.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::fusion::{FusionSystem, SylowEmbedding};
use crate::group::{CoreMode, FiniteGroup, GroupMap, Subgroup};
use crate::limits::Limits;
use crate::subsystem::centralizer_of_subsystem;

/// A morphism of a linking system: the coset `gK` of `K = O_{p'}(C_G(P))`,
/// stored by its smallest element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinkMorphism {
    pub source: usize,
    pub target: usize,
    pub rep: usize,
}

/// `L_S^c(G)`: objects are the F-centric subgroups, morphisms `P → Q` are
/// the cosets `T_G(P,Q)/O_{p'}(C_G(P))`.
#[derive(Clone, Debug)]
pub struct LinkingSystem {
    embedding: SylowEmbedding,
    fusion: FusionSystem,
    objects: Vec<Subgroup>,
    parents: Vec<Subgroup>,
    centralizers: Vec<Subgroup>,
    kernels: Vec<Vec<usize>>,
    morphisms: Vec<Vec<Vec<usize>>>,
    top: usize,
}

/// Builds `L_S^c(G)` over the deterministic Sylow subgroup.
pub fn linking_of_group(g: &FiniteGroup, p: usize) -> Result<LinkingSystem> {
    let cap = Limits::get().max_order;
    if g.order() > cap {
        return Err(FuseError::SizeGuard {
            what: "group order",
            actual: g.order(),
            limit: cap,
        });
    }
    let embedding = SylowEmbedding::new(g, p)?;
    let fusion = embedding.fusion_system()?;
    let objects = fusion.centric_subgroups();
    let parents: Vec<Subgroup> = objects.iter().map(|o| embedding.to_parent(o)).collect();
    let whole = g.whole();
    let mut centralizers = Vec::new();
    let mut kernels: Vec<Vec<usize>> = Vec::new();
    for q in &parents {
        let c = g.centralizer(&whole, q);
        let (cg, embed, _) = g.extract(&c, "C");
        let core = cg.core(p, CoreMode::PPrime);
        kernels.push(core.iter().map(|x| embed[x] as usize).collect());
        centralizers.push(c);
    }
    let n = objects.len();
    let mut morphisms = vec![vec![Vec::new(); n]; n];
    for x in 0..g.order() {
        for (i, src) in parents.iter().enumerate() {
            let img = ElementSet::from_indices(g.order(), src.iter().map(|y| g.conj(x, y)));
            for (j, dst) in parents.iter().enumerate() {
                if img.is_subset(dst.set()) {
                    morphisms[i][j].push(canonical_rep(g, &kernels[i], x));
                }
            }
        }
    }
    for row in &mut morphisms {
        for set in row.iter_mut() {
            set.sort_unstable();
            set.dedup();
        }
    }
    let top = objects
        .iter()
        .position(|o| o == fusion.sylow())
        .expect("the Sylow subgroup is centric");
    Ok(LinkingSystem {
        embedding,
        fusion,
        objects,
        parents,
        centralizers,
        kernels,
        morphisms,
        top,
    })
}

fn canonical_rep(g: &FiniteGroup, kernel: &[usize], x: usize) -> usize {
    kernel.iter().map(|&k| g.mul(x, k)).min().unwrap_or(x)
}

impl LinkingSystem {
    pub fn group(&self) -> &FiniteGroup {
        self.embedding.group()
    }

    pub fn fusion(&self) -> &FusionSystem {
        &self.fusion
    }

    pub fn embedding(&self) -> &SylowEmbedding {
        &self.embedding
    }

    /// Objects as subgroups of the fusion system's ambient.
    pub fn objects(&self) -> &[Subgroup] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn index_of(&self, p: &Subgroup) -> Option<usize> {
        self.objects.iter().position(|o| o == p)
    }

    /// Object `i` as a subgroup of G.
    pub fn object_in_group(&self, i: usize) -> &Subgroup {
        &self.parents[i]
    }

    /// `O_{p'}(C_G(P))` as element indices of G.
    pub fn kernel(&self, i: usize) -> &[usize] {
        &self.kernels[i]
    }

    pub fn morphisms(&self, source: usize, target: usize) -> impl Iterator<Item = LinkMorphism> + '_ {
        self.morphisms[source][target].iter().map(move |&rep| LinkMorphism {
            source,
            target,
            rep,
        })
    }

    pub fn morphism_count(&self, source: usize, target: usize) -> usize {
        self.morphisms[source][target].len()
    }

    pub fn total_morphisms(&self) -> usize {
        self.morphisms.iter().flatten().map(Vec::len).sum()
    }

    /// The coset of `g` in `Mor(P, Q)`, if `g` conjugates P into Q.
    pub fn morphism(&self, source: usize, target: usize, g: usize) -> Option<LinkMorphism> {
        let grp = self.group();
        let inside = self.parents[source]
            .iter()
            .all(|y| self.parents[target].contains(grp.conj(g, y)));
        inside.then(|| LinkMorphism {
            source,
            target,
            rep: canonical_rep(grp, &self.kernels[source], g),
        })
    }

    /// `b ∘ a`.
    pub fn compose(&self, b: &LinkMorphism, a: &LinkMorphism) -> Option<LinkMorphism> {
        if a.target != b.source {
            return None;
        }
        let g = self.group().mul(b.rep, a.rep);
        Some(LinkMorphism {
            source: a.source,
            target: b.target,
            rep: canonical_rep(self.group(), &self.kernels[a.source], g),
        })
    }

    /// `δ_{P,Q}(s)` for `s ∈ S` (an element of G) with `sPs⁻¹ ≤ Q`.
    pub fn delta(&self, source: usize, target: usize, s: usize) -> Option<LinkMorphism> {
        if !self.embedding.sylow().contains(s) {
            return None;
        }
        self.morphism(source, target, s)
    }

    /// `π`: the conjugation map of the coset, as a morphism of the fusion
    /// system.
    pub fn pi(&self, m: &LinkMorphism) -> GroupMap {
        self.embedding
            .conjugation_map(m.rep, &self.objects[m.source], &self.objects[m.target])
    }

    /// `ι_P = δ_{P,S}(1)`.
    pub fn iota(&self, i: usize) -> LinkMorphism {
        self.morphism(i, self.top, self.group().identity())
            .expect("every object lies in S")
    }

    /// `[[P]] = δ_P(P) ≤ Aut_L(P)`.
    pub fn distinguished_subgroup(&self, i: usize) -> Vec<LinkMorphism> {
        let mut out: Vec<LinkMorphism> = self.parents[i]
            .iter()
            .map(|x| self.morphism(i, i, x).expect("P normalizes itself"))
            .collect();
        out.sort();
        out
    }
}

/// Per-axiom verdicts of [`check_linking_axioms`]; each failure carries a
/// witness.
#[derive(Clone, Debug, Default, Serialize)]
pub struct LinkingReport {
    pub objects: usize,
    pub morphisms: usize,
    pub composition_well_defined: bool,
    pub delta_injective: bool,
    pub pi_surjective: bool,
    pub pi_delta_is_conjugation: bool,
    pub cardinality: bool,
    pub centric_decomposition: bool,
    pub distinguished_monomorphism: bool,
    pub associativity: bool,
    pub associativity_triples: usize,
    pub associativity_exhaustive: bool,
    pub failures: Vec<String>,
}

impl LinkingReport {
    pub fn passes(&self) -> bool {
        self.composition_well_defined
            && self.delta_injective
            && self.pi_surjective
            && self.pi_delta_is_conjugation
            && self.cardinality
            && self.centric_decomposition
            && self.distinguished_monomorphism
            && self.associativity
    }
}

/// Triples beyond this count are checked on a deterministic stride.
pub const ASSOCIATIVITY_BUDGET: usize = 4_000_000;

pub fn check_linking_axioms(l: &LinkingSystem) -> LinkingReport {
    let mut rep = LinkingReport {
        objects: l.object_count(),
        morphisms: l.total_morphisms(),
        composition_well_defined: true,
        delta_injective: true,
        pi_surjective: true,
        pi_delta_is_conjugation: true,
        cardinality: true,
        centric_decomposition: true,
        distinguished_monomorphism: true,
        associativity: true,
        ..Default::default()
    };
    let g = l.group();
    let n = l.object_count();
    let s_elems: Vec<usize> = l.embedding.sylow().iter().collect();

    for i in 0..n {
        let z = g.center(&l.parents[i]);
        let c = &l.centralizers[i];
        let k = &l.kernels[i];
        let z_meets_k = k.iter().filter(|&&x| z.contains(x)).count();
        let commute = k.iter().all(|&a| z.iter().all(|b| g.mul(a, b) == g.mul(b, a)));
        if z_meets_k != 1 || z.order() * k.len() != c.order() || !commute {
            rep.centric_decomposition = false;
            rep.failures
                .push(format!("C_G(P) is not Z(P) x O_p'(C_G(P)) for object {i}"));
        }

        let dist = l.distinguished_subgroup(i);
        let distinct: HashSet<usize> = dist.iter().map(|m| m.rep).collect();
        let hom = l.parents[i].iter().all(|x| {
            l.parents[i].iter().all(|y| {
                let lhs = l.morphism(i, i, g.mul(x, y));
                let rhs = l.compose(&l.morphism(i, i, x).unwrap(), &l.morphism(i, i, y).unwrap());
                lhs == rhs
            })
        });
        if distinct.len() != l.parents[i].order() || !hom {
            rep.distinguished_monomorphism = false;
            rep.failures
                .push(format!("δ restricted to P is not a monomorphism for object {i}"));
        }

        for j in 0..n {
            let mut deltas = HashSet::new();
            let mut transporter = 0;
            for &s in &s_elems {
                if let Some(m) = l.delta(i, j, s) {
                    transporter += 1;
                    deltas.insert(m.rep);
                    let expected = l.embedding.conjugation_map(
                        s,
                        &l.objects[i],
                        &l.objects[j],
                    );
                    if l.pi(&m) != expected {
                        rep.pi_delta_is_conjugation = false;
                        rep.failures
                            .push(format!("π(δ(s)) differs from conjugation for {i} -> {j}"));
                    }
                }
            }
            if deltas.len() != transporter {
                rep.delta_injective = false;
                rep.failures.push(format!("δ is not injective on {i} -> {j}"));
            }

            let homs: HashSet<Vec<u32>> = match l.fusion.hom_set(&l.objects[i], &l.objects[j]) {
                Ok(h) => h.into_iter().map(|m| m.table().to_vec()).collect(),
                Err(e) => {
                    rep.pi_surjective = false;
                    rep.failures.push(format!("Hom({i}, {j}) unavailable: {e}"));
                    continue;
                }
            };
            let images: HashSet<Vec<u32>> = l
                .morphisms(i, j)
                .map(|m| l.pi(&m).table().to_vec())
                .collect();
            if images != homs {
                rep.pi_surjective = false;
                rep.failures
                    .push(format!("π does not map Mor({i}, {j}) onto Hom_F"));
            }
            if l.morphism_count(i, j) != homs.len() * g.center(&l.parents[i]).order() {
                rep.cardinality = false;
                rep.failures.push(format!(
                    "|Mor({i}, {j})| = {} but |Hom| * |Z(P)| = {}",
                    l.morphism_count(i, j),
                    homs.len() * g.center(&l.parents[i]).order()
                ));
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for a in l.morphisms(i, j) {
                    for b in l.morphisms(j, k) {
                        let ab = l.compose(&b, &a).expect("composable");
                        let ok = l.kernels[j].iter().all(|&kq| {
                            l.kernels[i].iter().all(|&kp| {
                                let x = g.mul(g.mul(b.rep, kq), g.mul(a.rep, kp));
                                l.morphism(i, k, x) == Some(ab)
                            })
                        });
                        if !ok {
                            rep.composition_well_defined = false;
                            rep.failures.push(format!(
                                "composition of {} and {} depends on coset representatives",
                                b.rep, a.rep
                            ));
                        }
                    }
                }
            }
        }
    }

    let mut triples = 0usize;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    triples += l.morphism_count(i, j) * l.morphism_count(j, k) * l.morphism_count(k, m);
                }
            }
        }
    }
    let stride = triples.div_ceil(ASSOCIATIVITY_BUDGET).max(1);
    rep.associativity_exhaustive = stride == 1;
    let mut counter = 0usize;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    for a in l.morphisms(i, j) {
                        for b in l.morphisms(j, k) {
                            let ba = l.compose(&b, &a).unwrap();
                            for c in l.morphisms(k, m) {
                                counter += 1;
                                if !counter.is_multiple_of(stride) {
                                    continue;
                                }
                                rep.associativity_triples += 1;
                                let left = l.compose(&c, &ba);
                                let right = l.compose(&l.compose(&c, &b).unwrap(), &a);
                                if left != right && rep.associativity {
                                    rep.associativity = false;
                                    rep.failures.push(format!(
                                        "composition is not associative at {} {} {}",
                                        c.rep, b.rep, a.rep
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    rep
}

/// Group-level consequences of `C_S(E) ≤ T` for `E ⊴ F` over `T`.
#[derive(Clone, Debug, Serialize)]
pub struct CentralizerConsequences {
    /// `|TC_S(T)/T|`.
    pub quotient_order: usize,
    pub quotient_abelian: bool,
    /// `C_S(T) ≤ T`, checked only for odd p.
    pub centralizer_inside: Option<bool>,
}

impl CentralizerConsequences {
    pub fn holds(&self) -> bool {
        self.quotient_abelian && self.centralizer_inside != Some(false)
    }

    pub fn check(&self) -> Result<()> {
        if self.holds() {
            Ok(())
        } else {
            Err(FuseError::TheoremViolation(format!(
                "centralizer consequences fail: {self:?}"
            )))
        }
    }
}

pub fn centralizer_consequences(f: &FusionSystem, e: &FusionSystem) -> Result<CentralizerConsequences> {
    let t = e.sylow();
    let cse = centralizer_of_subsystem(f, e)
        .map_err(|err| FuseError::HypothesisViolation(err.to_string()))?;
    if !cse.is_subgroup_of(t) {
        return Err(FuseError::HypothesisViolation("C_S(E) is not contained in T".into()));
    }
    let g = f.group();
    let cst = g.centralizer(f.sylow(), t);
    let tc = g.join(t, &cst);
    let gens = g.generating_set(&tc);
    let quotient_abelian = gens
        .iter()
        .all(|&x| gens.iter().all(|&y| t.contains(g.commutator(x, y))));
    let centralizer_inside = (f.p() % 2 == 1).then(|| cst.is_subgroup_of(t));
    Ok(CentralizerConsequences {
        quotient_order: tc.order() / t.order(),
        quotient_abelian,
        centralizer_inside,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::testgroups::*;
    use crate::group::ResidualMode;

    #[test]
    fn c2_has_one_object() {
        let l = linking_of_group(&cyclic(2), 2).unwrap();
        assert_eq!(l.object_count(), 1);
        assert_eq!(l.morphism_count(0, 0), 2);
        assert!(check_linking_axioms(&l).passes());
    }

    #[test]
    fn s4_linking() {
        let g = s4();
        let l = linking_of_group(&g, 2).unwrap();
        let v4 = l.embedding().to_local(&g.core(2, CoreMode::P)).unwrap();
        let i = l.index_of(&v4).unwrap();
        assert_eq!(l.morphism_count(i, i), 24);
        let z = l.fusion().group().center(l.fusion().sylow());
        assert!(l.index_of(&z).is_none());
        let rep = check_linking_axioms(&l);
        assert!(rep.passes(), "{:?}", rep.failures);
        assert!(rep.associativity_exhaustive);
    }

    #[test]
    fn trivial_group() {
        let l = linking_of_group(&cyclic(1), 2).unwrap();
        assert_eq!(l.object_count(), 1);
        assert!(check_linking_axioms(&l).passes());
    }

    #[test]
    fn consequences_for_a4_in_s4() {
        let g = s4();
        let emb = SylowEmbedding::new(&g, 2).unwrap();
        let f = emb.fusion_system().unwrap();
        let e = emb.fusion_of_subgroup(&g.residual(2, ResidualMode::P)).unwrap();
        let c = centralizer_consequences(&f, &e).unwrap();
        assert_eq!(c.quotient_order, 1);
        assert!(c.holds());
        let z = f.group().center(f.sylow());
        let small = FusionSystem::inner(f.ambient(), &z, 2).unwrap();
        assert!(centralizer_consequences(&f, &small).is_err());
    }
}
