use std::collections::HashSet;

use super::{FiniteGroup, Subgroup};
use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::limits::Limits;

impl FiniteGroup {
    /// All subgroups of `p`, sorted canonically, using the default caps.
    pub fn all_subgroups(&self, p: &Subgroup) -> Result<Vec<Subgroup>> {
        let lim = Limits::get();
        self.all_subgroups_capped(p, lim.max_sylow, lim.max_subgroups)
    }

    /// All subgroups of `p`, built bottom-up: every subgroup arises from a
    /// smaller one by adjoining a single element, so extending each known
    /// subgroup by one representative of each cyclic subgroup reaches the
    /// whole lattice.
    pub fn all_subgroups_capped(
        &self,
        p: &Subgroup,
        max_order: usize,
        max_count: usize,
    ) -> Result<Vec<Subgroup>> {
        if p.order() > max_order {
            return Err(FuseError::SizeGuard {
                what: "subgroup lattice base order",
                actual: p.order(),
                limit: max_order,
            });
        }
        // one generator per cyclic subgroup
        let mut cyclic_gens = Vec::new();
        let mut cyclic_seen: HashSet<ElementSet> = HashSet::new();
        for x in p.iter() {
            let c = self.generate_subgroup(&[x]);
            if cyclic_seen.insert(c.set().clone()) {
                cyclic_gens.push(x);
            }
        }

        let trivial = self.trivial();
        let mut found: HashSet<ElementSet> = HashSet::new();
        found.insert(trivial.set().clone());
        let mut queue: Vec<(Subgroup, Vec<usize>)> = vec![(trivial, Vec::new())];
        let mut head = 0;
        while head < queue.len() {
            let (h, gens) = queue[head].clone();
            head += 1;
            // Each (gens + [c]) generated subgroup is contained in p.
            let mut tried_here: HashSet<ElementSet> = HashSet::new();
            for &c in &cyclic_gens {
                if h.contains(c) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(c);
                let k = self.generate_subgroup(&g2);
                if !tried_here.insert(k.set().clone()) {
                    continue;
                }
                if found.insert(k.set().clone()) {
                    if found.len() > max_count {
                        return Err(FuseError::SizeGuard {
                            what: "subgroup count",
                            actual: found.len(),
                            limit: max_count,
                        });
                    }
                    queue.push((k, g2));
                }
            }
        }
        let mut all: Vec<Subgroup> = found.into_iter().map(Subgroup::from_set).collect();
        all.sort();
        Ok(all)
    }

    /// All normal subgroups, sorted canonically: joins of normal closures of
    /// single conjugacy classes.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let mut found: HashSet<ElementSet> = HashSet::new();
        found.insert(self.trivial().set().clone());
        let closures: Vec<Subgroup> = self
            .conjugacy_classes()
            .into_iter()
            .filter(|c| c[0] != 0)
            .map(|c| self.normal_closure(&c[..1]))
            .collect();
        let mut queue = vec![self.trivial()];
        let mut head = 0;
        while head < queue.len() {
            let h = queue[head].clone();
            head += 1;
            for c in &closures {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let k = self.join(&h, c);
                if found.insert(k.set().clone()) {
                    queue.push(k);
                }
            }
        }
        let mut all: Vec<Subgroup> = found.into_iter().map(Subgroup::from_set).collect();
        all.sort();
        all
    }
}

#[cfg(test)]
mod tests {
    use super::super::testgroups::*;

    #[test]
    fn counts() {
        assert_eq!(cyclic(1).all_subgroups(&cyclic(1).whole()).unwrap().len(), 1);
        let v = v4();
        assert_eq!(v.all_subgroups(&v.whole()).unwrap().len(), 5);
        let d = d8();
        assert_eq!(d.all_subgroups(&d.whole()).unwrap().len(), 10);
        let s = s4();
        assert_eq!(s.all_subgroups(&s.whole()).unwrap().len(), 30);
        // A5 is perfect; the lattice still includes A5 itself.
        let a = a5();
        let subs = a.all_subgroups(&a.whole()).unwrap();
        assert_eq!(subs.len(), 59);
        assert_eq!(subs.last().unwrap().order(), 60);
    }

    #[test]
    fn sorted_and_lagrange() {
        let s = s4();
        let subs = s.all_subgroups(&s.whole()).unwrap();
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|h| 24 % h.order() == 0));
    }

    #[test]
    fn count_cap_fires() {
        let s = s4();
        assert!(s.all_subgroups_capped(&s.whole(), 64, 10).is_err());
    }

    #[test]
    fn normal_subgroups_match_filtered_lattice() {
        for g in [s4(), d8(), a5(), v4()] {
            let brute: Vec<_> = g
                .all_subgroups(&g.whole())
                .unwrap()
                .into_iter()
                .filter(|h| g.is_normal(h))
                .collect();
            assert_eq!(g.normal_subgroups(), brute);
        }
        assert_eq!(s4().normal_subgroups().len(), 4);
        assert_eq!(a5().normal_subgroups().len(), 2);
    }
}
