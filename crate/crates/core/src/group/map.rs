use super::{FiniteGroup, Subgroup};
use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};

/// Marker for "not in the domain" inside image tables.
pub const NONE: u32 = u32::MAX;

/// An injective homomorphism between subgroups of one parent group.
///
/// `table[x]` is the image of `x` for `x` in the domain and [`NONE`]
/// elsewhere, so two maps with the same domain are equal exactly when their
/// tables agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupMap {
    domain: Subgroup,
    codomain: Subgroup,
    table: Vec<u32>,
}

impl std::fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<(usize, u32)> = self.domain.iter().map(|x| (x, self.table[x])).collect();
        write!(f, "GroupMap{pairs:?}")
    }
}

impl GroupMap {
    /// Builds and validates a map from `(x, image)` pairs covering `domain`.
    pub fn new(
        g: &FiniteGroup,
        domain: &Subgroup,
        codomain: &Subgroup,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut table = vec![NONE; g.order()];
        for (x, y) in pairs {
            if !domain.contains(x) {
                return Err(FuseError::Precondition(format!("{x} is not in the domain")));
            }
            table[x] = y as u32;
        }
        let m = GroupMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            table,
        };
        m.validate(g)?;
        Ok(m)
    }

    pub(crate) fn from_table(domain: Subgroup, codomain: Subgroup, table: Vec<u32>) -> Self {
        GroupMap {
            domain,
            codomain,
            table,
        }
    }

    /// Checks that the map is a total, injective homomorphism into the codomain.
    pub fn validate(&self, g: &FiniteGroup) -> Result<()> {
        let mut seen = ElementSet::empty(g.order());
        for x in self.domain.iter() {
            let y = self.table[x];
            if y == NONE {
                return Err(FuseError::Precondition(format!("no image for {x}")));
            }
            if !self.codomain.contains(y as usize) {
                return Err(FuseError::Containment(format!("image of {x} leaves the codomain")));
            }
            if !seen.insert(y as usize) {
                return Err(FuseError::Precondition("map is not injective".into()));
            }
        }
        for a in self.domain.iter() {
            for b in self.domain.iter() {
                let lhs = self.table[g.mul(a, b)] as usize;
                let rhs = g.mul(self.table[a] as usize, self.table[b] as usize);
                if lhs != rhs {
                    return Err(FuseError::Precondition(format!(
                        "map is not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(domain: &Subgroup) -> Self {
        let mut table = vec![NONE; domain.parent_order()];
        for x in domain.iter() {
            table[x] = x as u32;
        }
        GroupMap {
            domain: domain.clone(),
            codomain: domain.clone(),
            table,
        }
    }

    /// Conjugation `x ↦ g x g⁻¹` restricted to `domain`.
    pub fn conjugation(grp: &FiniteGroup, g: usize, domain: &Subgroup, codomain: &Subgroup) -> Self {
        let mut table = vec![NONE; grp.order()];
        for x in domain.iter() {
            table[x] = grp.conj(g, x) as u32;
        }
        GroupMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            table,
        }
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn codomain(&self) -> &Subgroup {
        &self.codomain
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        debug_assert!(self.domain.contains(x));
        self.table[x] as usize
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_set(ElementSet::from_indices(
            self.table.len(),
            self.domain.iter().map(|x| self.table[x] as usize),
        ))
    }

    /// Image of a subgroup of the domain.
    pub fn image_of(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_set(ElementSet::from_indices(
            self.table.len(),
            h.iter().map(|x| self.table[x] as usize),
        ))
    }

    pub fn is_identity(&self) -> bool {
        self.domain.iter().all(|x| self.table[x] as usize == x)
    }

    /// Same map with a different codomain (which must contain the image).
    pub fn with_codomain(&self, codomain: &Subgroup) -> Self {
        GroupMap {
            domain: self.domain.clone(),
            codomain: codomain.clone(),
            table: self.table.clone(),
        }
    }

    /// Same map with its codomain shrunk to its image.
    pub fn onto_image(&self) -> Self {
        self.with_codomain(&self.image())
    }

    /// `self ∘ other`; requires `image(other) ≤ domain(self)`.
    pub fn compose(&self, other: &GroupMap) -> GroupMap {
        let mut table = vec![NONE; self.table.len()];
        for x in other.domain.iter() {
            let y = other.table[x];
            debug_assert!(self.domain.contains(y as usize));
            table[x] = self.table[y as usize];
        }
        GroupMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            table,
        }
    }

    /// Inverse of the isomorphism onto the image.
    pub fn inverse(&self) -> GroupMap {
        let mut table = vec![NONE; self.table.len()];
        for x in self.domain.iter() {
            table[self.table[x] as usize] = x as u32;
        }
        GroupMap {
            domain: self.image(),
            codomain: self.domain.clone(),
            table,
        }
    }

    pub fn restrict(&self, sub: &Subgroup) -> GroupMap {
        debug_assert!(sub.is_subgroup_of(&self.domain));
        let mut table = vec![NONE; self.table.len()];
        for x in sub.iter() {
            table[x] = self.table[x];
        }
        GroupMap {
            domain: sub.clone(),
            codomain: self.codomain.clone(),
            table,
        }
    }

    /// True when `self` restricted to `other`'s domain equals `other`.
    pub fn extends(&self, other: &GroupMap) -> bool {
        other.domain.is_subgroup_of(&self.domain)
            && other.domain.iter().all(|x| self.table[x] == other.table[x])
    }
}
