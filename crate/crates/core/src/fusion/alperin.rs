use super::FusionSystem;
use crate::error::{FuseError, Result};
use crate::group::{GroupMap, Subgroup};

/// One factor of a decomposition: an automorphism of a fully normalized,
/// centric, radical subgroup, applied to the subgroup `domain` of it.
#[derive(Clone, Debug)]
pub struct AlperinStep {
    pub subgroup: Subgroup,
    pub automorphism: GroupMap,
    pub domain: Subgroup,
}

/// A morphism written as a composite of restricted automorphisms.
#[derive(Clone, Debug)]
pub struct AlperinDecomposition {
    pub target: GroupMap,
    /// Steps in order of application.
    pub steps: Vec<AlperinStep>,
}

impl AlperinDecomposition {
    /// Composes the restricted automorphisms.
    pub fn recompose(&self) -> GroupMap {
        let mut cur = GroupMap::identity(self.target.domain());
        for st in &self.steps {
            let r = st.automorphism.restrict(&cur.image());
            cur = r.compose(&cur);
        }
        cur
    }

    pub fn verify(&self) -> bool {
        self.recompose().table() == self.target.table()
    }
}

/// Steps as (subgroup, automorphism); domains are filled in at the end.
type Chain = Vec<(Subgroup, GroupMap)>;

fn invert(chain: Chain) -> Chain {
    chain
        .into_iter()
        .rev()
        .map(|(r, a)| {
            let inv = a.inverse().with_codomain(&r);
            (r, inv)
        })
        .collect()
}

impl FusionSystem {
    /// Writes `φ ∈ Mor(F)` as a composite of restrictions of automorphisms
    /// of fully normalized centric radical subgroups.
    pub fn alperin_decompose(&self, phi: &GroupMap) -> Result<AlperinDecomposition> {
        if !self.contains_map(phi) {
            return Err(FuseError::Precondition("map is not a morphism of the system".into()));
        }
        let chain = self.decompose_iso(&phi.onto_image(), 0)?;
        let mut steps = Vec::with_capacity(chain.len());
        let mut dom = phi.domain().clone();
        for (r, a) in chain {
            if a.is_identity() {
                continue;
            }
            let next = a.image_of(&dom);
            steps.push(AlperinStep {
                subgroup: r,
                automorphism: a,
                domain: dom,
            });
            dom = next;
        }
        let d = AlperinDecomposition {
            target: phi.clone(),
            steps,
        };
        if !d.verify() {
            return Err(FuseError::DecompositionFailure(
                "recomposition does not reproduce the morphism".into(),
            ));
        }
        Ok(d)
    }

    fn depth_guard(&self, depth: usize) -> Result<()> {
        if depth > 2 * self.object_count() + 8 {
            return Err(FuseError::DecompositionFailure("recursion did not terminate".into()));
        }
        Ok(())
    }

    /// Decomposes an isomorphism `φ: P → P'`.
    fn decompose_iso(&self, phi: &GroupMap, depth: usize) -> Result<Chain> {
        self.depth_guard(depth)?;
        let p = phi.domain();
        let q = phi.image();
        let i = self.require(p)?;
        let j = self.require(&q)?;
        let rep = self.object(self.class_data(i).rep).clone();
        // φ = t_Q⁻¹ ∘ a ∘ t_P with a ∈ Aut_F(R)
        let tp = self.transversal(i).clone();
        let tq = self.transversal(j).clone();
        let a = tq.compose(&phi.compose(&tp.inverse())).with_codomain(&rep);
        let mut chain = self.decompose_to_rep(&tp, depth + 1)?;
        chain.extend(self.decompose_aut(&rep, &a, depth + 1)?);
        chain.extend(invert(self.decompose_to_rep(&tq, depth + 1)?));
        Ok(chain)
    }

    /// Decomposes an isomorphism `χ: P → R` onto the fully normalized
    /// representative of its class.
    fn decompose_to_rep(&self, chi: &GroupMap, depth: usize) -> Result<Chain> {
        self.depth_guard(depth)?;
        let p = chi.domain();
        let r = chi.image();
        if chi.is_identity() {
            return Ok(Vec::new());
        }
        if p == &r {
            return self.decompose_aut(&r, chi, depth + 1);
        }
        // Some ψ ∈ Hom_F(N_S(P), S) with ψ(P) = R exists since R is fully
        // normalized; then χ = β ∘ ψ|_P with β ∈ Aut_F(R).
        let g = self.group();
        let n = g.normalizer_in(self.sylow(), p);
        if n.order() == p.order() {
            return Err(FuseError::DecompositionFailure(
                "proper subgroup with trivial normalizer growth".into(),
            ));
        }
        let ni = self.require(&n)?;
        let psi = self
            .homs_of(ni)
            .iter()
            .find(|m| m.image_of(p) == r)
            .cloned()
            .ok_or_else(|| {
                FuseError::DecompositionFailure(
                    "no morphism of the normalizer onto the representative".into(),
                )
            })?;
        let psi_p = psi.restrict(p).onto_image();
        let beta = chi.compose(&psi_p.inverse()).with_codomain(&r);
        let mut chain = self.decompose_iso(&psi.onto_image(), depth + 1)?;
        chain.extend(self.decompose_aut(&r, &beta, depth + 1)?);
        Ok(chain)
    }

    /// Decomposes `α ∈ Aut_F(R)` for a fully normalized `R`.
    fn decompose_aut(&self, r: &Subgroup, alpha: &GroupMap, depth: usize) -> Result<Chain> {
        self.depth_guard(depth)?;
        if alpha.is_identity() {
            return Ok(Vec::new());
        }
        if r == self.sylow() || (self.is_centric(r)? && self.is_radical(r)?) {
            if !self.is_fully_normalized(r)? {
                return Err(FuseError::DecompositionFailure(
                    "automorphism of a subgroup that is not fully normalized".into(),
                ));
            }
            return Ok(vec![(r.clone(), alpha.with_codomain(r))]);
        }
        // R is not centric or not radical, so N_α > R and α extends to it
        let n_alpha = self.extension_control(alpha);
        if n_alpha.order() == r.order() {
            return Err(FuseError::DecompositionFailure(
                "extension control subgroup does not grow".into(),
            ));
        }
        let ext = self.find_extension(alpha, &n_alpha).ok_or_else(|| {
            FuseError::DecompositionFailure("automorphism does not extend over N_α".into())
        })?;
        self.decompose_iso(&ext.onto_image(), depth + 1)
    }
}

#[cfg(test)]
mod tests {
    use crate::fusion::SylowEmbedding;
    use crate::group::testgroups::*;

    #[test]
    fn s4_every_morphism() {
        let g = s4();
        let f = SylowEmbedding::new(&g, 2).unwrap().fusion_system().unwrap();
        for p in f.objects() {
            for phi in f.hom_set(&p, f.sylow()).unwrap() {
                let d = f.alperin_decompose(&phi).unwrap();
                assert!(d.verify());
                for st in &d.steps {
                    assert!(f.is_centric(&st.subgroup).unwrap());
                    assert!(f.is_radical(&st.subgroup).unwrap());
                    assert!(f.is_fully_normalized(&st.subgroup).unwrap());
                }
            }
        }
    }
}
