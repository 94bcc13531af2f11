use super::{is_power_of, p_part, FiniteGroup, Subgroup};
use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};

impl FiniteGroup {
    /// Smallest subgroup containing `seeds`.
    pub fn generate_subgroup(&self, seeds: &[usize]) -> Subgroup {
        let mut set = ElementSet::empty(self.order());
        set.insert(0);
        let gens: Vec<usize> = seeds.iter().copied().filter(|&s| s != 0).collect();
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in &gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        Subgroup::from_set(set)
    }

    /// Subgroup generated by `h` together with extra elements.
    pub fn join_elements(&self, h: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut gens = self.generating_set(h);
        gens.extend_from_slice(extra);
        self.generate_subgroup(&gens)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = self.generating_set(a);
        gens.extend(self.generating_set(b));
        self.generate_subgroup(&gens)
    }

    /// A small generating set, chosen greedily in increasing element order.
    pub fn generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        for x in h.iter() {
            if cur.order() == h.order() {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.generate_subgroup(&gens);
            }
        }
        gens
    }

    /// `N_A(P) = {a ∈ A : aPa⁻¹ = P}`; requires `P ≤ A`.
    pub fn normalizer(&self, a: &Subgroup, p: &Subgroup) -> Result<Subgroup> {
        if !p.is_subgroup_of(a) {
            return Err(FuseError::Containment("normalizer requires P ≤ A".into()));
        }
        Ok(self.normalizer_in(a, p))
    }

    /// Normalizer without the containment requirement.
    pub fn normalizer_in(&self, a: &Subgroup, p: &Subgroup) -> Subgroup {
        let gens = self.generating_set(p);
        let set = ElementSet::from_indices(
            self.order(),
            a.iter().filter(|&g| gens.iter().all(|&x| p.contains(self.conj(g, x)))),
        );
        Subgroup::from_set(set)
    }

    /// `C_A(P) = {a ∈ A : ax = xa ∀x ∈ P}`.
    pub fn centralizer(&self, a: &Subgroup, p: &Subgroup) -> Subgroup {
        let gens = self.generating_set(p);
        let set = ElementSet::from_indices(
            self.order(),
            a.iter()
                .filter(|&g| gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g))),
        );
        Subgroup::from_set(set)
    }

    pub fn center(&self, p: &Subgroup) -> Subgroup {
        self.centralizer(p, p)
    }

    /// `T_G(P,Q) = {g ∈ G : gPg⁻¹ ≤ Q}`.
    pub fn transporter(&self, p: &Subgroup, q: &Subgroup) -> ElementSet {
        let gens = self.generating_set(p);
        ElementSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&g| gens.iter().all(|&x| q.contains(self.conj(g, x)))),
        )
    }

    /// `gPg⁻¹`
    pub fn conjugate_subgroup(&self, g: usize, p: &Subgroup) -> Subgroup {
        Subgroup::from_set(ElementSet::from_indices(
            self.order(),
            p.iter().map(|x| self.conj(g, x)),
        ))
    }

    pub fn is_normal_in(&self, n: &Subgroup, a: &Subgroup) -> bool {
        let ngens = self.generating_set(n);
        let agens = self.generating_set(a);
        agens
            .iter()
            .all(|&g| ngens.iter().all(|&x| n.contains(self.conj(g, x))))
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        self.is_normal_in(n, &self.whole())
    }

    /// Conjugacy classes of the whole group, each sorted, ordered by least
    /// element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens = self.generating_set(&self.whole());
        let mut seen = ElementSet::empty(self.order());
        let mut classes = Vec::new();
        for x in 0..self.order() {
            if seen.contains(x) {
                continue;
            }
            seen.insert(x);
            let mut class = vec![x];
            let mut head = 0;
            while head < class.len() {
                let y = class[head];
                head += 1;
                for &g in &gens {
                    let z = self.conj(g, y);
                    if seen.insert(z) {
                        class.push(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[usize]) -> Subgroup {
        let gens = self.generating_set(&self.whole());
        let mut elems: Vec<usize> = seeds.to_vec();
        let mut seen = ElementSet::from_indices(self.order(), seeds.iter().copied());
        let mut head = 0;
        while head < elems.len() {
            let y = elems[head];
            head += 1;
            for &g in &gens {
                let z = self.conj(g, y);
                if seen.insert(z) {
                    elems.push(z);
                }
            }
        }
        self.generate_subgroup(&elems)
    }

    /// A Sylow p-subgroup, grown from the trivial group by repeatedly adding
    /// the least element of `N_G(H) \ H` that keeps `H` a p-group.
    pub fn sylow_p(&self, p: usize) -> Subgroup {
        self.sylow_p_within(&self.whole(), p)
    }

    /// A Sylow p-subgroup of the subgroup `a`.
    pub fn sylow_p_within(&self, a: &Subgroup, p: usize) -> Subgroup {
        let target = p_part(a.order(), p);
        let mut h = self.trivial();
        while h.order() < target {
            let n = self.normalizer_in(a, &h);
            let mut grown = None;
            for g in n.iter() {
                if h.contains(g) || !is_power_of(self.element_order(g), p) {
                    continue;
                }
                let k = self.join_elements(&h, &[g]);
                if is_power_of(k.order(), p) {
                    grown = Some(k);
                    break;
                }
            }
            h = grown.expect("Sylow theorem guarantees growth");
        }
        h
    }

    pub fn is_p_subgroup(&self, h: &Subgroup, p: usize) -> bool {
        is_power_of(h.order(), p)
    }
}

#[cfg(test)]
mod tests {
    use super::super::testgroups::*;
    use crate::perm::Perm;

    fn elem(g: &crate::group::FiniteGroup, degree: usize, cyc: &str) -> usize {
        let target = Perm::parse_cycles(cyc, degree).unwrap();
        crate::perm::find_element(g, degree, &target).expect("element present")
    }

    #[test]
    fn generate_empty_and_cyclic() {
        let g = cyclic(4);
        assert_eq!(g.generate_subgroup(&[]).order(), 1);
        assert_eq!(g.generate_subgroup(&[1]).order(), 4);
    }

    #[test]
    fn s4_klein_four() {
        let g = s4();
        let a = elem(&g, 4, "(1 2)(3 4)");
        let b = elem(&g, 4, "(1 3)(2 4)");
        let v4 = g.generate_subgroup(&[a, b]);
        assert_eq!(v4.order(), 4);
        assert!(g.is_normal(&v4));
        assert_eq!(g.normalizer(&g.whole(), &v4).unwrap(), g.whole());
        assert_eq!(g.centralizer(&g.whole(), &v4), v4);
        let c = g.generate_subgroup(&[a]);
        assert_eq!(g.transporter(&c, &v4).len(), 24);
    }

    #[test]
    fn sylow_orders() {
        let g = s4();
        assert_eq!(g.sylow_p(2).order(), 8);
        let s3 = s3();
        let p3 = s3.sylow_p(3);
        assert_eq!(p3.order(), 3);
        let a5 = a5();
        assert_eq!(a5.sylow_p(5).order(), 5);
        assert_eq!(a5.sylow_p(7).order(), 1);
    }

    #[test]
    fn normalizer_requires_containment() {
        let g = s4();
        let s = g.sylow_p(2);
        let t = g.sylow_p(3);
        assert!(g.normalizer(&s, &t).is_err());
    }

    #[test]
    fn conjugacy_classes_of_s4() {
        let sizes: Vec<usize> = {
            let mut v: Vec<usize> = s4().conjugacy_classes().iter().map(|c| c.len()).collect();
            v.sort();
            v
        };
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }
}
