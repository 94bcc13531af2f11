use std::collections::HashMap;

use super::{FiniteGroup, GroupMap, Subgroup};
use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::limits::Limits;

/// A group of automorphisms of one subgroup, materialized as an abstract
/// [`FiniteGroup`] so the table-based operations (cores, residuals,
/// quotients) apply to it. Element `i` of `group` is `maps[i]`.
#[derive(Clone, Debug)]
pub struct MapGroup {
    pub group: FiniteGroup,
    maps: Vec<GroupMap>,
    index: HashMap<Vec<u32>, usize>,
}

impl MapGroup {
    /// Closes `gens` (automorphisms of `base`) under composition.
    pub fn generate(base: &Subgroup, gens: &[GroupMap]) -> Result<Self> {
        let id = GroupMap::identity(base);
        let mut maps = vec![id];
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        index.insert(maps[0].table().to_vec(), 0);
        let cap = Limits::get().max_order;
        let mut head = 0;
        while head < maps.len() {
            let x = maps[head].clone();
            head += 1;
            for g in gens {
                let y = x.compose(g);
                if !index.contains_key(y.table()) {
                    index.insert(y.table().to_vec(), maps.len());
                    maps.push(y);
                    if maps.len() > cap {
                        return Err(FuseError::SizeGuard {
                            what: "automorphism group order",
                            actual: maps.len(),
                            limit: cap,
                        });
                    }
                }
            }
        }
        Ok(Self::from_closed_unchecked(maps))
    }

    /// Wraps a set already closed under composition (identity anywhere).
    pub fn from_closed(maps: Vec<GroupMap>) -> Result<Self> {
        let n = maps.len();
        if n > Limits::get().max_order {
            return Err(FuseError::SizeGuard {
                what: "automorphism group order",
                actual: n,
                limit: Limits::get().max_order,
            });
        }
        Ok(Self::from_closed_unchecked(maps))
    }

    fn from_closed_unchecked(mut maps: Vec<GroupMap>) -> Self {
        maps.sort();
        maps.dedup();
        let pos = maps
            .iter()
            .position(|m| m.is_identity())
            .expect("closed set contains the identity");
        let id = maps.remove(pos);
        maps.insert(0, id);
        let index: HashMap<Vec<u32>, usize> = maps
            .iter()
            .enumerate()
            .map(|(i, m)| (m.table().to_vec(), i))
            .collect();
        let n = maps.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &maps {
            for b in &maps {
                mul.push(index[a.compose(b).table()] as u32);
            }
        }
        MapGroup {
            group: FiniteGroup::from_raw("maps", n, mul),
            maps,
            index,
        }
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn maps(&self) -> &[GroupMap] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &GroupMap {
        &self.maps[i]
    }

    pub fn index_of(&self, m: &GroupMap) -> Option<usize> {
        self.index.get(m.table()).copied()
    }

    /// Subgroup of `group` consisting of the listed maps, which must form a
    /// subgroup.
    pub fn subgroup_of(&self, maps: &[GroupMap]) -> Option<Subgroup> {
        let mut set = ElementSet::empty(self.order());
        for m in maps {
            set.insert(self.index_of(m)?);
        }
        Some(self.group.generate_subgroup(&set.to_vec()))
    }

    pub fn maps_of(&self, h: &Subgroup) -> Vec<GroupMap> {
        h.iter().map(|i| self.maps[i].clone()).collect()
    }
}
