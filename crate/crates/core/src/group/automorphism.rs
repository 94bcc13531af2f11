use std::collections::HashMap;

use super::{FiniteGroup, GroupMap, Subgroup, NONE};
use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::limits::Limits;

/// `Aut(P)` for a subgroup `P`, as an explicit list of maps with a lookup
/// index for composition.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    base: Subgroup,
    elements: Vec<GroupMap>,
    index: HashMap<Vec<u32>, usize>,
}

impl AutomorphismGroup {
    /// Wraps a set of automorphisms of `base` that is closed under
    /// composition. The identity is moved to index 0.
    pub fn from_closed(base: Subgroup, mut elements: Vec<GroupMap>) -> Self {
        elements.sort();
        elements.dedup();
        if let Some(pos) = elements.iter().position(|m| m.is_identity()) {
            let id = elements.remove(pos);
            elements.insert(0, id);
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.table().to_vec(), i))
            .collect();
        AutomorphismGroup {
            base,
            elements,
            index,
        }
    }

    pub fn base(&self) -> &Subgroup {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupMap] {
        &self.elements
    }

    pub fn index_of(&self, m: &GroupMap) -> Option<usize> {
        self.index.get(m.table()).copied()
    }

    pub fn contains(&self, m: &GroupMap) -> bool {
        self.index.contains_key(m.table())
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn compose(&self, i: usize, j: usize) -> usize {
        let c = self.elements[i].compose(&self.elements[j]);
        self.index[c.table()]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index[self.elements[i].inverse().table()]
    }
}

/// Extends `gens[k] ↦ images[k]` to a homomorphism on `⟨gens⟩` by walking
/// right multiplications from the identity. Returns `None` on inconsistency
/// or loss of injectivity.
pub(crate) fn extend_hom(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<u32>> {
    let mut table = vec![NONE; g.order()];
    let mut used = ElementSet::empty(g.order());
    table[0] = 0;
    used.insert(0);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = table[x] as usize;
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let fy = g.mul(fx, images[k]) as u32;
            if table[y] == NONE {
                if !used.insert(fy as usize) {
                    return None;
                }
                table[y] = fy;
                queue.push(y);
            } else if table[y] != fy {
                return None;
            }
        }
    }
    Some(table)
}

impl FiniteGroup {
    /// All automorphisms of `p`, by backtracking over images of a small
    /// generating set. Candidate images must match the generator's element
    /// order and the size of its conjugacy class in `p`.
    pub fn automorphism_group(&self, p: &Subgroup) -> Result<AutomorphismGroup> {
        let lim = Limits::get();
        if p.order() > lim.max_sylow {
            return Err(FuseError::SizeGuard {
                what: "automorphism base order",
                actual: p.order(),
                limit: lim.max_sylow,
            });
        }
        let gens = self.generating_set(p);
        let elems = p.elements();
        let class_size = |x: usize| -> usize {
            let mut seen = ElementSet::empty(self.order());
            for &g in &elems {
                seen.insert(self.conj(g, x));
            }
            seen.len()
        };
        let sig: Vec<(usize, usize)> = (0..self.order())
            .map(|x| {
                if p.contains(x) {
                    (self.element_order(x), class_size(x))
                } else {
                    (0, 0)
                }
            })
            .collect();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&s| elems.iter().copied().filter(|&y| sig[y] == sig[s]).collect())
            .collect();

        let mut out = Vec::new();
        let mut images = Vec::with_capacity(gens.len());
        self.aut_search(p, &gens, &candidates, &mut images, &mut out, lim.max_automorphisms)?;
        let maps = out
            .into_iter()
            .map(|t| GroupMap::from_table(p.clone(), p.clone(), t))
            .collect();
        Ok(AutomorphismGroup::from_closed(p.clone(), maps))
    }

    fn aut_search(
        &self,
        p: &Subgroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        out: &mut Vec<Vec<u32>>,
        cap: usize,
    ) -> Result<()> {
        let k = images.len();
        if k == gens.len() {
            if let Some(t) = extend_hom(self, gens, images) {
                let size = t.iter().filter(|&&v| v != NONE).count();
                if size == p.order() {
                    out.push(t);
                    if out.len() > cap {
                        return Err(FuseError::SizeGuard {
                            what: "automorphism group order",
                            actual: out.len(),
                            limit: cap,
                        });
                    }
                }
            }
            return Ok(());
        }
        for &y in &candidates[k] {
            images.push(y);
            // prune: the partial assignment must extend injectively to ⟨gens[..=k]⟩
            if extend_hom(self, &gens[..=k], images).is_some() {
                self.aut_search(p, gens, candidates, images, out, cap)?;
            }
            images.pop();
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::testgroups::*;

    #[test]
    fn small_automorphism_groups() {
        let c2 = cyclic(2);
        assert_eq!(c2.automorphism_group(&c2.whole()).unwrap().order(), 1);
        let v = v4();
        assert_eq!(v.automorphism_group(&v.whole()).unwrap().order(), 6);
        let d = d8();
        assert_eq!(d.automorphism_group(&d.whole()).unwrap().order(), 8);
        let c8 = cyclic(8);
        assert_eq!(c8.automorphism_group(&c8.whole()).unwrap().order(), 4);
    }

    #[test]
    fn inner_automorphisms_of_d8() {
        let d = d8();
        let aut = d.automorphism_group(&d.whole()).unwrap();
        let z = d.center(&d.whole());
        let mut inner: Vec<_> = (0..8)
            .map(|g| crate::group::GroupMap::conjugation(&d, g, &d.whole(), &d.whole()))
            .collect();
        inner.sort();
        inner.dedup();
        assert_eq!(inner.len(), 8 / z.order());
        assert!(inner.iter().all(|m| aut.contains(m)));
        assert!(aut.elements()[0].is_identity());
    }
}
