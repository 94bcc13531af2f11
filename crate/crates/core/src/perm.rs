//! Permutations in 1-based cycle notation and their expansion to Cayley
//! tables.

use std::collections::HashMap;

use crate::error::{FuseError, Result};
use crate::group::FiniteGroup;
use crate::limits::Limits;

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u16).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Builds a permutation from cycles of 1-based points.
    pub fn from_cycles(cycles: &[Vec<usize>], degree: usize) -> Result<Self> {
        let mut img: Vec<u16> = (0..degree as u16).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(FuseError::Parse(format!(
                        "point {pt} outside 1..={degree}"
                    )));
                }
                if touched[pt - 1] {
                    return Err(FuseError::Parse(format!("point {pt} repeated in cycles")));
                }
                touched[pt - 1] = true;
            }
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                img[pt - 1] = (next - 1) as u16;
            }
        }
        Ok(Perm(img))
    }

    /// Parses `"(1 2 3)(4 5)"`; the empty string and `"()"` give the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| FuseError::Parse(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| FuseError::Parse(format!("unbalanced parentheses in {s:?}")))?;
            let body = &open[..close];
            let cycle: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| FuseError::Parse(format!("bad point {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(&cycles, degree)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    /// Nontrivial cycles in 1-based points, each starting at its smallest
    /// point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.0[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn to_cycles_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }
}

/// Splits `"(1 2 3),(1 2)(3 4)"` into generator strings at commas that sit
/// outside parentheses.
pub fn split_generator_list(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c)
            }
            ')' => {
                depth -= 1;
                cur.push(c)
            }
            ',' | ';' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// Closes the generators and expands the group to a Cayley table. Elements
/// are sorted by image list, so the identity lands at index 0. Returns the
/// group and the permutation of each element.
pub fn group_from_generators(
    name: &str,
    degree: usize,
    gens: &[Perm],
) -> Result<(FiniteGroup, Vec<Perm>)> {
    let limit = Limits::get().max_order;
    for g in gens {
        if g.degree() != degree {
            return Err(FuseError::Parse("generator degree mismatch".into()));
        }
    }
    let id = Perm::identity(degree);
    let mut elems = vec![id.clone()];
    let mut seen: HashMap<Perm, usize> = HashMap::new();
    seen.insert(id, 0);
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head].clone();
        head += 1;
        for g in gens {
            let y = x.compose(g);
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), elems.len());
                elems.push(y);
                if elems.len() > limit {
                    return Err(FuseError::SizeGuard {
                        what: "group order",
                        actual: elems.len(),
                        limit,
                    });
                }
            }
        }
    }
    elems.sort();
    let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = elems.len();
    let mut mul = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            // group product a*b acts as "apply b, then a"
            mul.push(index[&a.compose(b)] as u32);
        }
    }
    let labels = elems.iter().map(|p| p.to_cycles_string()).collect();
    let g = FiniteGroup::from_raw(name, n, mul).with_labels(labels);
    Ok((g, elems))
}

/// Index of a permutation inside a group built by [`group_from_generators`],
/// located through the element labels.
pub fn find_element(g: &FiniteGroup, degree: usize, target: &Perm) -> Option<usize> {
    debug_assert_eq!(target.degree(), degree);
    let label = target.to_cycles_string();
    g.labels()?.iter().position(|l| *l == label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse_cycles("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.0, vec![1, 2, 0, 4, 3]);
        assert_eq!(p.to_cycles_string(), "(1 2 3)(4 5)");
        assert_eq!(Perm::parse_cycles("()", 3).unwrap(), Perm::identity(3));
        assert!(Perm::parse_cycles("(1 7)", 5).is_err());
        assert!(Perm::parse_cycles("(1 2", 5).is_err());
    }

    #[test]
    fn split_list() {
        assert_eq!(
            split_generator_list("(1 2 3),(1 2)(3 4), (2 3)(4 5)"),
            vec!["(1 2 3)", "(1 2)(3 4)", "(2 3)(4 5)"]
        );
    }

    #[test]
    fn d8_from_generators() {
        let gens = [
            Perm::parse_cycles("(1 2 3 4)", 4).unwrap(),
            Perm::parse_cycles("(1 3)", 4).unwrap(),
        ];
        let (g, perms) = group_from_generators("D8", 4, &gens).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(perms[0], Perm::identity(4));
        assert!(!g.is_abelian());
    }
}
