use super::{FiniteGroup, Subgroup};
use crate::error::{FuseError, Result};

/// A quotient group `G/N` together with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[g]` is the coset index of `g`.
    pub projection: Vec<u32>,
    /// Minimal element of each coset, increasing; `representatives[0] = 0`.
    pub representatives: Vec<u32>,
}

impl Quotient {
    pub fn project(&self, g: usize) -> usize {
        self.projection[g] as usize
    }

    /// Preimage of a subgroup of the quotient.
    pub fn preimage(&self, parent: &FiniteGroup, h: &Subgroup) -> Subgroup {
        Subgroup::from_set(crate::bitset::ElementSet::from_indices(
            parent.order(),
            (0..parent.order()).filter(|&g| h.contains(self.projection[g] as usize)),
        ))
    }

    /// Image of a subgroup of the parent.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_set(crate::bitset::ElementSet::from_indices(
            self.group.order(),
            h.iter().map(|g| self.projection[g] as usize),
        ))
    }
}

impl FiniteGroup {
    /// `G/N`, with cosets labelled by their minimal representatives.
    pub fn quotient_group(&self, n: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(n) {
            return Err(FuseError::NotNormal("quotient by a non-normal subgroup".into()));
        }
        let order = self.order();
        let nel = n.elements();
        let mut rep_of = vec![u32::MAX; order];
        let mut reps = Vec::new();
        for g in 0..order {
            if rep_of[g] != u32::MAX {
                continue;
            }
            // g is the least element of its coset since cosets are visited in order
            for &x in &nel {
                rep_of[self.mul(g, x)] = g as u32;
            }
            reps.push(g as u32);
        }
        let mut index_of_rep = vec![u32::MAX; order];
        for (i, &r) in reps.iter().enumerate() {
            index_of_rep[r as usize] = i as u32;
        }
        let projection: Vec<u32> = rep_of.iter().map(|&r| index_of_rep[r as usize]).collect();
        let m = reps.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                mul.push(projection[self.mul(a as usize, b as usize)]);
            }
        }
        let mut group = FiniteGroup::from_raw(format!("{}/N", self.name()), m, mul);
        if let Some(labels) = self.labels() {
            group.labels = Some(reps.iter().map(|&r| format!("{}N", labels[r as usize])).collect());
        }
        Ok(Quotient {
            group,
            projection,
            representatives: reps,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::testgroups::*;

    #[test]
    fn trivial_quotients() {
        let g = s4();
        assert_eq!(g.quotient_group(&g.whole()).unwrap().group.order(), 1);
        let q = g.quotient_group(&g.trivial()).unwrap();
        assert_eq!(q.group.table(), g.table());
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let g = s4();
        let v4 = g.sylow_p(2);
        let o2 = g.core(2, crate::group::CoreMode::P);
        assert!(o2.is_subgroup_of(&v4));
        let q = g.quotient_group(&o2).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        assert_eq!(q.group.order() * o2.order(), 24);
    }

    #[test]
    fn non_normal_rejected() {
        let g = s4();
        let s = g.sylow_p(2);
        assert!(g.quotient_group(&s).is_err());
    }
}
