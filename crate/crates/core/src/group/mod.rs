//! Exact finite-group arithmetic over full multiplication tables.
//!
//! Elements of a [`FiniteGroup`] are the indices `0..order`, with the
//! identity at index 0. Subgroups are membership bitsets over the parent's
//! elements and homomorphisms are element-image tables.

mod automorphism;
mod lattice;
mod map;
mod mapgroup;
mod ops;
mod quotient;
mod series;

pub use automorphism::AutomorphismGroup;
pub use map::{GroupMap, NONE};
pub use mapgroup::MapGroup;
pub use quotient::Quotient;
pub use series::{CoreMode, ResidualMode};

use crate::bitset::ElementSet;
use crate::error::{FuseError, Result};
use crate::limits::Limits;

/// A finite group stored as its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table: identity at index 0, Latin square rows and
    /// columns, and associativity (Light's test over a generating set).
    pub fn from_table(name: impl Into<String>, table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(FuseError::Validation("empty table".into()));
        }
        let limit = Limits::get().max_order;
        if n > limit {
            return Err(FuseError::SizeGuard {
                what: "group order",
                actual: n,
                limit,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(FuseError::Validation(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(FuseError::Validation(format!("entry {v} out of range in row {i}")));
                }
                mul.push(v as u32);
            }
        }
        for i in 0..n {
            if mul[i] as usize != i || mul[i * n] as usize != i {
                return Err(FuseError::Validation(format!(
                    "index 0 is not the identity (fails at element {i})"
                )));
            }
        }
        for i in 0..n {
            let mut row_seen = ElementSet::empty(n);
            let mut col_seen = ElementSet::empty(n);
            for j in 0..n {
                if !row_seen.insert(mul[i * n + j] as usize) {
                    return Err(FuseError::Validation(format!("row {i} repeats an entry")));
                }
                if !col_seen.insert(mul[j * n + i] as usize) {
                    return Err(FuseError::Validation(format!("column {i} repeats an entry")));
                }
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let j = (0..n).find(|&j| mul[i * n + j] == 0).expect("latin square");
            if mul[j * n + i] != 0 {
                return Err(FuseError::Validation(format!("element {i} has no two-sided inverse")));
            }
            inv[i] = j as u32;
        }
        let g = FiniteGroup {
            name: name.into(),
            order: n,
            mul,
            inv,
            labels: None,
        };
        g.check_associative()?;
        Ok(g)
    }

    /// Builds a group from a table known to be a group (constructed
    /// internally from composition of maps, permutations or cosets).
    pub(crate) fn from_raw(name: impl Into<String>, order: usize, mul: Vec<u32>) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u32; order];
        for i in 0..order {
            for j in 0..order {
                if mul[i * order + j] == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        FiniteGroup {
            name: name.into(),
            order,
            mul,
            inv,
            labels: None,
        }
    }

    fn check_associative(&self) -> Result<()> {
        let gens = self.generating_set(&self.whole());
        let n = self.order;
        for &g in &gens {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(x, self.mul(g, y)) != self.mul(xg, y) {
                        return Err(FuseError::Validation(format!(
                            "table is not associative: ({x}*{g})*{y} != {x}*({g}*{y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.order {
            self.labels = Some(labels);
        }
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Raw row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_set(ElementSet::full(self.order))
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_set(ElementSet::from_indices(self.order, [0]))
    }

    /// Builds a subgroup from an element list, checking closure.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup> {
        let set = ElementSet::from_indices(self.order, elements.iter().copied());
        if !set.contains(0) {
            return Err(FuseError::Validation("subset lacks the identity".into()));
        }
        for a in set.iter() {
            for b in set.iter() {
                if !set.contains(self.mul(a, b)) {
                    return Err(FuseError::Validation("subset is not closed".into()));
                }
            }
        }
        Ok(Subgroup::from_set(set))
    }

    /// Standalone copy of a subgroup, with elements renumbered in increasing
    /// parent order (so the identity stays at 0). Returns the group, the
    /// embedding `local -> parent` and the partial inverse `parent -> local`.
    pub fn extract(&self, h: &Subgroup, name: impl Into<String>) -> (FiniteGroup, Vec<u32>, Vec<u32>) {
        let embed: Vec<u32> = h.iter().map(|x| x as u32).collect();
        let mut local = vec![NONE; self.order];
        for (i, &x) in embed.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        let m = embed.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &embed {
            for &b in &embed {
                mul.push(local[self.mul(a as usize, b as usize)]);
            }
        }
        let mut g = FiniteGroup::from_raw(name, m, mul);
        if let Some(labels) = &self.labels {
            g.labels = Some(embed.iter().map(|&x| labels[x as usize].clone()).collect());
        }
        (g, embed, local)
    }
}

/// A subgroup of a [`FiniteGroup`], as a membership bitset over the parent's
/// elements. The canonical order is `(order, lexicographic element list)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    set: ElementSet,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.set)
    }
}

impl Subgroup {
    pub(crate) fn from_set(set: ElementSet) -> Self {
        Subgroup { set }
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn parent_order(&self) -> usize {
        self.set.universe()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.set.iter()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.set.to_vec()
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Intersection of two subgroups of the same parent.
    pub fn meet(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_set(self.set.intersection(&other.set))
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut n = n;
    let mut r = 1;
    while n.is_multiple_of(p) {
        n /= p;
        r *= p;
    }
    r
}

pub fn is_power_of(n: usize, p: usize) -> bool {
    p_part(n, p) == n
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn prime_divisors(n: usize) -> Vec<usize> {
    (2..=n).filter(|&d| n.is_multiple_of(d) && is_prime(d)).collect()
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_identity_at_zero() {
        let t = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            FiniteGroup::from_table("bad", &t),
            Err(FuseError::Validation(_))
        ));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // A Latin square with identity 0 that is not a group (order-5 loop).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::from_table("loop", &t).is_err());
    }

    #[test]
    fn cyclic_table_accepted() {
        let n = 6;
        let t: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let g = FiniteGroup::from_table("C6", &t).unwrap();
        assert_eq!(g.element_order(1), 6);
        assert_eq!(g.inv(2), 4);
        assert!(g.is_abelian());
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(360, 3), 9);
        assert_eq!(prime_divisors(168), vec![2, 3, 7]);
    }
}
