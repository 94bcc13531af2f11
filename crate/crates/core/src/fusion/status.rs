use std::collections::HashSet;

use super::FusionSystem;
use crate::bitset::ElementSet;
use crate::error::Result;
use crate::group::{p_part, CoreMode, GroupMap, MapGroup, Subgroup};

/// Why a flag of [`SubgroupStatus`] failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatusFailure {
    /// An F-conjugate with a strictly larger normalizer in S.
    LargerNormalizer(Subgroup),
    /// An F-conjugate with a strictly larger centralizer in S.
    LargerCentralizer(Subgroup),
    AutomizerNotSylow { sylow_automizer: usize, p_part: usize },
    /// An isomorphism onto the subgroup that does not extend over `N_φ`.
    NotReceptive { iso: GroupMap, extension_domain: Subgroup },
    /// An F-conjugate whose centralizer is not contained in it.
    NotCentric(Subgroup),
    NotRadical { op_out_order: usize },
    /// A morphism carrying a subgroup outside.
    Escapes(GroupMap),
}

/// Classification of one subgroup of the Sylow object.
#[derive(Clone, Debug)]
pub struct SubgroupStatus {
    pub subgroup: Subgroup,
    pub fully_normalized: bool,
    pub fully_centralized: bool,
    pub fully_automized: bool,
    pub receptive: bool,
    pub centric: bool,
    pub radical: bool,
    pub strongly_closed: bool,
    pub failures: Vec<StatusFailure>,
}

/// A conjugacy class in which no member is both fully automized and
/// receptive, with the reasons for each member.
#[derive(Clone, Debug)]
pub struct SaturationWitness {
    pub representative: Subgroup,
    pub members: Vec<(Subgroup, Vec<StatusFailure>)>,
}

impl FusionSystem {
    pub fn subgroup_status(&self, p: &Subgroup) -> Result<SubgroupStatus> {
        let i = self.require(p)?;
        let g = self.group();
        let s = self.sylow();
        let class = &self.class_data(i).members;
        let mut failures = Vec::new();

        let n_p = g.normalizer_in(s, p).order();
        let c_p = g.centralizer(s, p).order();
        let mut fully_normalized = true;
        let mut fully_centralized = true;
        let mut centric = true;
        for &m in class {
            let q = self.object(m);
            if fully_normalized && g.normalizer_in(s, q).order() > n_p {
                fully_normalized = false;
                failures.push(StatusFailure::LargerNormalizer(q.clone()));
            }
            let cq = g.centralizer(s, q);
            if fully_centralized && cq.order() > c_p {
                fully_centralized = false;
                failures.push(StatusFailure::LargerCentralizer(q.clone()));
            }
            if centric && !cq.is_subgroup_of(q) {
                centric = false;
                failures.push(StatusFailure::NotCentric(q.clone()));
            }
        }

        let (fully_automized, fa) = self.automized_check(i);
        failures.extend(fa);
        let (receptive, rf) = self.receptive_check(i);
        failures.extend(rf);

        let op_out = self.op_out_order(i)?;
        let radical = op_out == 1;
        if !radical {
            failures.push(StatusFailure::NotRadical {
                op_out_order: op_out,
            });
        }
        let escape = self.strong_closure_witness(p)?;
        let strongly_closed = escape.is_none();
        if let Some(m) = escape {
            failures.push(StatusFailure::Escapes(m));
        }
        Ok(SubgroupStatus {
            subgroup: p.clone(),
            fully_normalized,
            fully_centralized,
            fully_automized,
            receptive,
            centric,
            radical,
            strongly_closed,
            failures,
        })
    }

    fn automized_check(&self, obj: usize) -> (bool, Option<StatusFailure>) {
        let p = self.object(obj);
        let aut_s = self.sylow_automizer(p).len();
        let pp = p_part(self.class_data(obj).automizer.len(), self.p());
        if aut_s == pp {
            (true, None)
        } else {
            (
                false,
                Some(StatusFailure::AutomizerNotSylow {
                    sylow_automizer: aut_s,
                    p_part: pp,
                }),
            )
        }
    }

    /// `N_φ = {g ∈ N_S(Q) : φ c_g φ⁻¹ ∈ Aut_S(P)}` for `φ: Q → P`.
    pub fn extension_control(&self, phi: &GroupMap) -> Subgroup {
        let g = self.group();
        let s = self.sylow();
        let q = phi.domain();
        let p = phi.image();
        let aut_s: HashSet<Vec<u32>> = self
            .sylow_automizer(&p)
            .into_iter()
            .map(|m| m.table().to_vec())
            .collect();
        let inv = phi.inverse();
        let n = g.normalizer_in(s, q);
        let members = n.iter().filter(|&x| {
            let c = GroupMap::conjugation(g, x, q, q);
            let conj = phi.compose(&c.compose(&inv));
            aut_s.contains(conj.table())
        });
        Subgroup::from_set(ElementSet::from_indices(g.order(), members))
    }

    /// Some `φ̄ ∈ Hom_F(D, S)` extending `φ`, where `D` contains its domain.
    pub fn find_extension(&self, phi: &GroupMap, over: &Subgroup) -> Option<GroupMap> {
        let d = self.index_of(over)?;
        self.homs_of(d).iter().find(|m| m.extends(phi)).cloned()
    }

    fn receptive_check(&self, obj: usize) -> (bool, Option<StatusFailure>) {
        let p = self.object(obj).clone();
        let c = self.class_data(obj);
        let tp_inv = self.transversal(obj).inverse();
        for &q in &c.members {
            let tq = self.transversal(q);
            for a in &c.automizer {
                let phi = tp_inv.compose(&a.compose(tq)).with_codomain(&p);
                let n_phi = self.extension_control(&phi);
                if n_phi.order() == phi.domain().order() {
                    continue;
                }
                if self.find_extension(&phi, &n_phi).is_none() {
                    return (
                        false,
                        Some(StatusFailure::NotReceptive {
                            iso: phi,
                            extension_domain: n_phi,
                        }),
                    );
                }
            }
        }
        (true, None)
    }

    pub fn is_fully_normalized(&self, p: &Subgroup) -> Result<bool> {
        let i = self.require(p)?;
        let g = self.group();
        let n = g.normalizer_in(self.sylow(), p).order();
        Ok(self
            .class_data(i)
            .members
            .iter()
            .all(|&m| g.normalizer_in(self.sylow(), self.object(m)).order() <= n))
    }

    pub fn is_fully_centralized(&self, p: &Subgroup) -> Result<bool> {
        let i = self.require(p)?;
        let g = self.group();
        let c = g.centralizer(self.sylow(), p).order();
        Ok(self
            .class_data(i)
            .members
            .iter()
            .all(|&m| g.centralizer(self.sylow(), self.object(m)).order() <= c))
    }

    pub fn is_fully_automized(&self, p: &Subgroup) -> Result<bool> {
        Ok(self.automized_check(self.require(p)?).0)
    }

    pub fn is_receptive(&self, p: &Subgroup) -> Result<bool> {
        Ok(self.receptive_check(self.require(p)?).0)
    }

    /// F-centric: every F-conjugate contains its centralizer in S.
    pub fn is_centric(&self, p: &Subgroup) -> Result<bool> {
        let i = self.require(p)?;
        let g = self.group();
        Ok(self.class_data(i).members.iter().all(|&m| {
            let q = self.object(m);
            g.centralizer(self.sylow(), q).is_subgroup_of(q)
        }))
    }

    /// F-radical: `O_p(Out_F(P)) = 1`.
    pub fn is_radical(&self, p: &Subgroup) -> Result<bool> {
        Ok(self.op_out_order(self.require(p)?)? == 1)
    }

    /// `|O_p(Out_F(P))|`, computed as `|O_p(Aut_F(P))| / |Inn(P)|` since
    /// `Inn(P)` is a normal p-subgroup of `Aut_F(P)`.
    fn op_out_order(&self, obj: usize) -> Result<usize> {
        let g = self.group();
        let p = self.object(obj);
        let autos = MapGroup::from_closed(self.automizer_of(obj))?;
        let core = autos.group.core(self.p(), CoreMode::P);
        let center = g.center(p).order();
        let inn = p.order() / center;
        Ok(core.order() / inn)
    }

    /// Centric, radical and fully normalized subgroups, in canonical order.
    pub fn centric_radical_representatives(&self) -> Result<Vec<Subgroup>> {
        let mut out = Vec::new();
        for c in &self.classes {
            let r = self.object(c.rep);
            if self.is_centric(r)? && self.is_radical(r)? {
                out.push(r.clone());
            }
        }
        Ok(out)
    }

    /// All F-centric subgroups.
    pub fn centric_subgroups(&self) -> Vec<Subgroup> {
        self.objects()
            .into_iter()
            .filter(|p| self.is_centric(p).unwrap_or(false))
            .collect()
    }

    /// Checks that every class (optionally only those meeting `restrict`)
    /// has a member that is fully automized and receptive.
    pub fn is_saturated(&self, restrict: Option<&[Subgroup]>) -> (bool, Option<SaturationWitness>) {
        for c in &self.classes {
            if let Some(h) = restrict {
                if !c.members.iter().any(|&m| h.contains(self.object(m))) {
                    continue;
                }
            }
            let mut reasons = Vec::new();
            let mut ok = false;
            for &m in &c.members {
                let mut why = Vec::new();
                let (fa, fa_w) = self.automized_check(m);
                why.extend(fa_w);
                if fa {
                    let (rc, rc_w) = self.receptive_check(m);
                    why.extend(rc_w);
                    if rc {
                        ok = true;
                        break;
                    }
                }
                reasons.push((self.object(m).clone(), why));
            }
            if !ok {
                return (
                    false,
                    Some(SaturationWitness {
                        representative: self.object(c.rep).clone(),
                        members: reasons,
                    }),
                );
            }
        }
        (true, None)
    }

    pub fn is_strongly_closed(&self, t: &Subgroup) -> Result<bool> {
        Ok(self.strong_closure_witness(t)?.is_none())
    }

    /// A morphism carrying a subgroup of `t` outside `t`, if one exists.
    pub fn strong_closure_witness(&self, t: &Subgroup) -> Result<Option<GroupMap>> {
        self.require(t)?;
        for (i, id) in self.objects.iter().enumerate() {
            let p0 = &self.ambient.subgroups()[*id];
            if !p0.is_subgroup_of(t) {
                continue;
            }
            for &m in &self.class_data(i).members {
                if !self.object(m).is_subgroup_of(t) {
                    let phi = self
                        .homs_of(i)
                        .iter()
                        .find(|h| h.image() == *self.object(m))
                        .expect("class members are images")
                        .clone();
                    return Ok(Some(phi));
                }
            }
        }
        Ok(None)
    }

    /// All strongly closed subgroups, in canonical order.
    pub fn strongly_closed_subgroups(&self) -> Vec<Subgroup> {
        self.objects()
            .into_iter()
            .filter(|t| self.is_strongly_closed(t).unwrap_or(false))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::fusion::{fusion_of_group, Ambient, FusionSystem, SylowEmbedding};
    use crate::group::testgroups::*;
    use crate::group::{CoreMode, GroupMap};

    #[test]
    fn s4_classification() {
        let g = s4();
        let emb = SylowEmbedding::new(&g, 2).unwrap();
        let f = emb.fusion_system().unwrap();
        let v4 = emb.to_local(&g.core(2, CoreMode::P)).unwrap();
        let st = f.subgroup_status(&v4).unwrap();
        assert!(st.centric && st.radical && st.strongly_closed);
        let z = f.group().center(f.sylow());
        let st = f.subgroup_status(&z).unwrap();
        assert!(!st.centric && !st.strongly_closed);
        assert_eq!(f.conjugacy_class(&z).unwrap().len(), 3);
        assert!(f.is_saturated(None).0);
    }

    #[test]
    fn single_iso_is_unsaturated() {
        let v = v4();
        let amb = Ambient::whole(v.clone()).unwrap();
        let subs = amb.subgroups().to_vec();
        let (a, b) = (&subs[1], &subs[2]);
        let x = a.iter().find(|&e| e != 0).unwrap();
        let y = b.iter().find(|&e| e != 0).unwrap();
        let phi = GroupMap::new(&v, a, b, [(0, 0), (x, y)]).unwrap();
        let f = FusionSystem::close(&amb, &v.whole(), 2, &[phi]).unwrap();
        assert_eq!(f.conjugacy_class(a).unwrap().len(), 2);
        assert_eq!(f.automizer_order(&v.whole()).unwrap(), 1);
        let (ok, w) = f.is_saturated(None);
        assert!(!ok);
        assert!(w.unwrap().members.iter().all(|(_, why)| !why.is_empty()));
    }

    #[test]
    fn a6_is_saturated() {
        let f = fusion_of_group(&crate::group::testgroups::perm_group(
            "A6",
            6,
            &["(1 2 3)", "(2 3 4 5 6)"],
        ), 2)
        .unwrap();
        assert_eq!(f.sylow().order(), 8);
        assert!(f.is_saturated(None).0);
    }
}
